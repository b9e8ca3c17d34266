"""Braid groups: words, Garside normal forms, Dehornoy ordering and classification."""
