# Chordality, comparability and extremal substructures
