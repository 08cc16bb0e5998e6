"""Monoids of fusion-invariant representations of Sylow subgroups.

The pipeline: build a permutation group and a Sylow p-subgroup S
(permcore), compute the exact irreducible character table of S
(chartab over cyclonum), compute how the ambient group fuses the
conjugacy classes of S (fusion), cut out the lattice of invariant
virtual representations (repring over intlin), and analyze the monoid
of genuinely nonnegative invariant representations: its atoms,
factoriality and half-factoriality with explicit witnesses (fimonoid).
"""

__version__ = "0.1.0"
