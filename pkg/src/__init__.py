# Shallow-minor clique cover toolkit
