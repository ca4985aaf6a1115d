"""Noncommutative symmetric functions, the graded dual of QSym.

H is the computational basis (free product = index concatenation); R is
the ribbon basis, dual to the fundamental basis of QSym.  The Theta map
doubles ribbons with hook shapes on the generators and extends
multiplicatively; it is exactly the adjoint of the QSym Theta map,
which the test suite checks by exhaustive pairing.
"""

from fractions import Fraction

from . import compositions as comps
from .exactlinalg import ZERO, ONE
from .hopfcore import (AlgebraDescriptor, Element, LinearMap, HARD_DEGREE_CAP,
                       product_many, register_converter, register_dual_pair)


class NSymAlgebra(AlgebraDescriptor):
    name = "nsym"
    computational_basis = "H"

    def degree(self, key):
        return sum(key)

    def basis_keys(self, n):
        assert 0 <= n <= HARD_DEGREE_CAP, f"degree {n} beyond hard cap"
        return comps.compositions(n)

    def unit_key(self):
        return ()

    def key_from_json(self, data):
        return comps.check_composition(data)

    def product_on_basis(self, k1, k2):
        return {comps.concat(k1, k2): ONE}

    def coproduct_on_basis(self, key):
        # multiplicative extension of Delta(H_n) = sum H_i (x) H_j
        terms = {((), ()): ONE}
        for part in key:
            nxt = {}
            for (left, right), c in terms.items():
                for i in range(part + 1):
                    l2 = left + (i,) if i else left
                    r2 = right + (part - i,) if part - i else right
                    nxt[(l2, r2)] = nxt.get((l2, r2), ZERO) + c
            terms = nxt
        return terms


NSYM = NSymAlgebra()
register_dual_pair(("nsym", "H"), ("qsym", "M"))
register_dual_pair(("nsym", "R"), ("qsym", "L"))


def H(alpha, coeff=1) -> Element:
    return Element("nsym", "H", {comps.check_composition(alpha): coeff})


def R(alpha, coeff=1) -> Element:
    return Element("nsym", "R", {comps.check_composition(alpha): coeff})


# Ribbon basis: R_alpha = sum over coarsenings with sign; inverse is the
# plain coarsening sum.  (The transpose of the L <-> M change in QSym.)

def _R_to_H(elt: Element) -> Element:
    out = {}
    for alpha, c in elt.terms.items():
        for beta in comps.coarsenings(alpha):
            sign = -ONE if (len(alpha) - len(beta)) % 2 else ONE
            out[beta] = out.get(beta, ZERO) + c * sign
    return Element("nsym", "H", out)


def _H_to_R(elt: Element) -> Element:
    out = {}
    for alpha, c in elt.terms.items():
        for beta in comps.coarsenings(alpha):
            out[beta] = out.get(beta, ZERO) + c
    return Element("nsym", "R", out)


register_converter("nsym", "R", _R_to_H, _H_to_R)


def hook(k, n):
    """(1^k, n-k)."""
    return (1,) * k + ((n - k,) if n - k else ())


def theta_on_generator(n) -> Element:
    """2 * sum of hook ribbons; k runs to n-1 so the all-ones ribbon
    appears once (the duality pairing with the QSym Theta forces this)."""
    if n == 0:
        return NSYM.unit()
    out = Element("nsym", "R", {hook(k, n): Fraction(2) for k in range(n)})
    return _R_to_H(out)


def theta_on_H(alpha) -> Element:
    return product_many([theta_on_generator(a) for a in alpha], algebra="nsym")


theta_nsym = LinearMap("Theta_NSym", ("nsym", "H"), ("nsym", "H"), theta_on_H)
