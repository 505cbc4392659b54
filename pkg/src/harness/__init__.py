# Reports, corpora and the command implementations behind experiments.py
