# Graph core: representation, formats, exact primitives
