# Graph generators for the named families and random corpora
