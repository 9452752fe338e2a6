"""
kblab - Biclique Graph Laboratory

This package contains modules for building biclique graphs, reducing false
twins, checking the diamond/gem necessary condition, removing degree-two
vertices from biclique graphs, and running exhaustive small-graph sweeps.
"""
