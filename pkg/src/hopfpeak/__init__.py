"""hopfpeak: exact-arithmetic combinatorial Hopf algebras and their Theta maps.

Registered algebras (importing this package registers all of them):

- qsym      quasisymmetric functions (bases M, L, S, eta)
- nsym      noncommutative symmetric functions (H, R), graded dual of qsym
- sym       symmetric functions inside qsym (m, p, e, h, q)
- ssym      the Malvenuto-Reutenauer algebra of permutations (F, M)
- ssymdual  its graded dual (Fs, Ms)
- v         the block-shuffle algebra on permutations (v, Mv, etav)
- dsym      diagonally symmetric functions in two alphabets (m)
"""

from . import exactlinalg
from . import compositions
from . import permutations
from . import hopfcore
from . import qsym
from . import nsym
from . import sym
from . import characters
from . import ssym
from . import vhopf
from . import dsym

from .hopfcore import (Element, Tensor, LinearMap, product, coproduct,
                       iterated_coproduct, antipode, grade_sign, phi_candidate,
                       pairing, adjoint, convert, check_hopf_axioms,
                       element_to_json, element_from_json, degree_cap)

__all__ = [
    "exactlinalg", "compositions", "permutations", "hopfcore",
    "qsym", "nsym", "sym", "characters", "ssym", "vhopf", "dsym",
    "Element", "Tensor", "LinearMap", "product", "coproduct",
    "iterated_coproduct", "antipode", "grade_sign", "phi_candidate",
    "pairing", "adjoint", "convert", "check_hopf_axioms",
    "element_to_json", "element_from_json", "degree_cap",
]
