# Clique separators and their verifier
