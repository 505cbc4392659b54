# Clique covers, edge widths and clique cover width
