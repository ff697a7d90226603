"""Exact certification toolkit: rational-map family checks, braid monodromy of
real line arrangements, free-group and presented-group algorithms, and the
coset certificate built from them."""

__version__ = "0.1.0"
