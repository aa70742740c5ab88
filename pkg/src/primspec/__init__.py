"""Primitive-ideal inclusion combinatorics for the general linear superalgebra.

The package computes, at integral central characters:

* the crystal structure on weight label tuples (``crystal``);
* Robinson-Schensted invariants and descent sets (``tableaux``);
* classical Kazhdan-Lusztig tables and the inclusion order for gl(m) and
  gl(m)+gl(n) (``kl_classical``);
* the singly-atypical inclusion algorithm and the gl(2|2) classification
  (``super_inclusion``);
* canonical bases of mixed tensor spaces and the super left KL order
  (``brundan_kl``);
* the poset of primitive ideals below the augmentation ideal of gl(m|1)
  (``aug_poset``).

Weights are written ``"a1,...,am|b1,...,bn"``; see ``primspec.weights``.
"""

from .weights import SuperWeight

__all__ = ["SuperWeight"]
__version__ = "0.1.0"
