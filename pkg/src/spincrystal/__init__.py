"""Exact-arithmetic model of a spin-node affine crystal.

The package has three layers that check one another:

* birational layer: ten positive rational coordinates carrying one-parameter
  actions for each of the six Dynkin directions (``geometric_crystal``,
  ``spin_module``);
* piecewise-linear layer: the max-plus shadow of the birational layer on
  integer ten-tuples (``tropicalizer``, ``ud_crystal``);
* combinatorial layer: finite integer-array crystals, their limit, and the
  coherent-family embeddings between them (``perfect_crystal``,
  ``coherent_family``).

All arithmetic is exact (``fractions.Fraction`` / ``int``); there is no
floating point anywhere.
"""

__version__ = "0.1.0"

from . import cartan_core, tropicalizer  # noqa: F401
