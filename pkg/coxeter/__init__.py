"""Coxeter graphs, root systems, essential elements and the monodromy surface."""
