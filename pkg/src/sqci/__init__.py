"""Quasi-isometry invariants of 2-dimensional right-angled Artin groups
and graph 2-braid groups, computed through reduced intersection complexes
of Salvetti complexes and 2-point discrete configuration spaces."""

__version__ = "0.1.0"
