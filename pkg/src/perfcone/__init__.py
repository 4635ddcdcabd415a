"""Exact cohomology tables for perfect-cone compactifications.

The package computes, in exact integer arithmetic, stable Betti tables of the
perfect cone toroidal compactification of the moduli of principally polarized
abelian varieties and of related partial compactifications, together with the
cone catalog, stabilizer groups, invariant series, bracket-class algebra and
desk-scale Voronoi reduction needed to cross-check every number.
"""

__version__ = "0.1.0"
