"""Exact-arithmetic engine for Ehrhart polynomials, multivariate
rational generating functions, normalized volumes and h*-vectors of
matroid and polymatroid polytopes."""

__version__ = "0.1.0"
