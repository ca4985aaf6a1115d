"""The Hopf algebra V on permutations: block-shuffle product and
block-deconcatenation coproduct.

Structure constants only see the global-descent block sequence of the
index; the basis is still indexed by the full permutations.  Psi sends
v at a block sequence to the shuffle-basis element of QSym at the
block-size composition, which identifies the DI span with QSym and the
rest with ker(Psi).
"""

import math
from fractions import Fraction

from . import compositions as comps
from . import exactlinalg as la
from . import permutations as perms
from . import qsym
from .exactlinalg import ZERO, ONE
from .hopfcore import (AlgebraDescriptor, Element, LinearMap, HARD_DEGREE_CAP,
                       convert, register_converter)
from itertools import combinations


class VAlgebra(AlgebraDescriptor):
    name = "v"
    computational_basis = "v"

    def degree(self, key):
        return len(key)

    def basis_keys(self, n):
        assert 0 <= n <= HARD_DEGREE_CAP, f"degree {n} beyond hard cap"
        return perms.all_perms(n)

    def unit_key(self):
        return ()

    def key_from_json(self, data):
        return perms.check_perm(data)

    def product_on_basis(self, k1, k2):
        b1 = perms.blocks(k1)
        b2 = perms.blocks(k2)
        n, m = len(b1), len(b2)
        out = {}
        for pos in combinations(range(n + m), n):
            posset = set(pos)
            seq = []
            i = j = 0
            for k in range(n + m):
                if k in posset:
                    seq.append(b1[i])
                    i += 1
                else:
                    seq.append(b2[j])
                    j += 1
            word = perms.backslash_many(seq)
            out[word] = out.get(word, ZERO) + ONE
        return out

    def coproduct_on_basis(self, key):
        bl = perms.blocks(key)
        out = {}
        for i in range(len(bl) + 1):
            pair = (perms.backslash_many(bl[:i]), perms.backslash_many(bl[i:]))
            out[pair] = out.get(pair, ZERO) + ONE
        return out

    def key_str(self, key):
        return "[" + "".join(map(str, key)) + "]" if key else "[]"


VHOPF = VAlgebra()


def v(word, coeff=1) -> Element:
    return Element("v", "v", {perms.check_perm(word): coeff})


def Mv(word, coeff=1) -> Element:
    return Element("v", "Mv", {perms.check_perm(word): coeff})


def zeta_v_value(sigma) -> Fraction:
    return Fraction(1, math.factorial(len(perms.blocks(sigma))))


def psi_on_v(sigma) -> Element:
    return convert(qsym.S(perms.block_sizes(sigma)), "M")


psi_v = LinearMap("Psi_V", ("v", "v"), ("qsym", "M"), psi_on_v)


# -- the M basis ------------------------------------------------------------------
# On DI permutations M mirrors the QSym monomial basis through Psi
# (coefficients of M_alpha in the shuffle basis); off DI it kills Psi.

def _mv_on_basis(sigma) -> Element:
    sizes = perms.block_sizes(sigma)
    if perms.is_DI(sigma):
        coeffs = qsym.m_in_s_coeffs(len(sigma))[sizes]
        return Element("v", "v",
                       {perms.di_chain(beta): c for beta, c in coeffs.items()})
    return v(sigma) - v(perms.di_chain(sizes))


def _Mv_to_v(elt: Element) -> Element:
    out = Element("v", "v", {})
    for sigma, c in elt.terms.items():
        out = out + c * _mv_on_basis(sigma)
    return out


_v_in_mv_cache = {}


def _v_to_Mv(elt: Element) -> Element:
    out = {}
    for n in elt.degrees():
        if n not in _v_in_mv_cache:
            keys = perms.all_perms(n)
            idx = {k: i for i, k in enumerate(keys)}
            rows = la.zeros(len(keys), len(keys))
            for i, s in enumerate(keys):
                for k, c in _mv_on_basis(s).terms.items():
                    rows[i][idx[k]] = c
            _v_in_mv_cache[n] = (keys, la.inverse(rows))
        keys, inv = _v_in_mv_cache[n]
        part = elt.homogeneous(n)
        vec = [part[k] for k in keys]
        for i, s in enumerate(keys):
            c = sum((vec[j] * inv[j][i] for j in range(len(keys))), ZERO)
            if c != 0:
                out[s] = c
    return Element("v", "Mv", out)


register_converter("v", "Mv", _Mv_to_v, _v_to_Mv)


def eta_v(sigma) -> Element:
    """eta^V_sigma in the Mv basis, for odd sigma."""
    sigma = perms.check_perm(sigma)
    assert perms.is_odd_perm(sigma), f"{sigma} is not an odd permutation"
    sizes = perms.block_sizes(sigma)
    return Element("v", "Mv",
                   {perms.di_chain(alpha): Fraction(2) ** len(alpha)
                    for alpha in comps.coarsenings(sizes)})


def odd_basis(n: int):
    """{M_sigma : sigma not DI} plus {eta^V_sigma : sigma odd}, in Mv basis."""
    out = [Mv(s) for s in perms.all_perms(n) if not perms.is_DI(s)]
    out.extend(eta_v(s) for s in perms.all_perms(n) if perms.is_odd_perm(s))
    return out


def _etav_to_v(elt: Element) -> Element:
    out = Element("v", "v", {})
    for sigma, c in elt.terms.items():
        out = out + c * convert(eta_v(sigma), "v")
    return out


def _v_to_etav(elt: Element) -> Element:
    """Solve for eta^V coordinates; raises outside the Pi_V span."""
    out = {}
    for n in elt.degrees():
        part = elt.homogeneous(n)
        keys = perms.all_perms(n)
        idx = {k: i for i, k in enumerate(keys)}
        odd = [s for s in keys if perms.is_odd_perm(s)]
        rows = []
        for s in odd:
            row = [ZERO] * len(keys)
            for k, c in convert(eta_v(s), "v").terms.items():
                row[idx[k]] = c
            rows.append(row)
        target = [part[k] for k in keys]
        sol = la.solve(la.transpose(rows), target)
        if sol is None:
            raise ValueError(f"element is not in Pi_V in degree {n}")
        for s, c in zip(odd, sol):
            if c != 0:
                out[s] = c
    return Element("v", "etav", out)


register_converter("v", "etav", _etav_to_v, _v_to_etav)


# -- the Theta map: conjugate Theta_QSym through 0 ⊕ Psi| --------------------------

def theta_on_Mv(sigma) -> Element:
    if not perms.is_DI(sigma):
        return Element("v", "Mv", {})
    alpha = perms.block_sizes(sigma)
    img = qsym.theta_qsym(qsym.M(alpha))
    return Element("v", "Mv",
                   {perms.di_chain(beta): c for beta, c in img.terms.items()})


theta_v = LinearMap("Theta_V", ("v", "Mv"), ("v", "Mv"), theta_on_Mv)
