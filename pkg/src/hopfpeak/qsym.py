"""Quasisymmetric functions: M (computational), L, S and eta bases,
the canonical character, its odd twin, and the Theta map onto the peak
algebra Pi.
"""

from fractions import Fraction

from . import compositions as comps
from . import exactlinalg as la
from .exactlinalg import ZERO, ONE
from .hopfcore import (AlgebraDescriptor, Element, LinearMap, HARD_DEGREE_CAP,
                       register_converter)


class QSymAlgebra(AlgebraDescriptor):
    name = "qsym"
    computational_basis = "M"

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
        return {g: Fraction(m) for g, m in comps.quasi_shuffle(k1, k2).items()}

    def coproduct_on_basis(self, key):
        return {(key[:i], key[i:]): ONE for i in range(len(key) + 1)}


QSYM = QSymAlgebra()


def M(alpha, coeff=1) -> Element:
    return Element("qsym", "M", {comps.check_composition(alpha): coeff})


def L(alpha, coeff=1) -> Element:
    return Element("qsym", "L", {comps.check_composition(alpha): coeff})


def S(alpha, coeff=1) -> Element:
    return Element("qsym", "S", {comps.check_composition(alpha): coeff})


# -- fundamental basis: L_alpha = sum of M over refinements ------------------

def _L_to_M(elt: Element) -> Element:
    out = {}
    for alpha, c in elt.terms.items():
        for beta in comps.refinements(alpha):
            out[beta] = out.get(beta, ZERO) + c
    return Element("qsym", "M", out)


def _M_to_L(elt: Element) -> Element:
    # Mobius inversion on the boolean refinement lattice
    out = {}
    for alpha, c in elt.terms.items():
        la_len = len(alpha)
        for beta in comps.refinements(alpha):
            sign = -ONE if (len(beta) - la_len) % 2 else ONE
            out[beta] = out.get(beta, ZERO) + c * sign
    return Element("qsym", "L", out)


register_converter("qsym", "L", _L_to_M, _M_to_L)


# -- shuffle basis: S_alpha = sum c^alpha_beta M_beta over coarsenings -------

def s_to_m_row(alpha):
    return {beta: comps.c_coeff(alpha, beta) for beta in comps.coarsenings(alpha)}


_m_in_s_cache = {}


def m_in_s_coeffs(n):
    """Per-degree expansion of each M_alpha in the S basis (matrix inverse)."""
    if n not in _m_in_s_cache:
        keys = comps.compositions(n)
        idx = {k: i for i, k in enumerate(keys)}
        mat = la.zeros(len(keys), len(keys))
        for i, alpha in enumerate(keys):
            for beta, c in s_to_m_row(alpha).items():
                mat[i][idx[beta]] = c
        # mat rows are S_alpha in M coords, so mat^{-1} rows are M_alpha in S coords
        inv = la.inverse(mat)
        _m_in_s_cache[n] = {keys[i]: {keys[j]: inv[i][j] for j in range(len(keys))
                                      if inv[i][j] != 0}
                            for i in range(len(keys))}
    return _m_in_s_cache[n]


def _S_to_M(elt: Element) -> Element:
    out = {}
    for alpha, c in elt.terms.items():
        for beta, v in s_to_m_row(alpha).items():
            out[beta] = out.get(beta, ZERO) + c * v
    return Element("qsym", "M", out)


def _M_to_S(elt: Element) -> Element:
    out = {}
    for alpha, c in elt.terms.items():
        for beta, v in m_in_s_coeffs(sum(alpha)).get(alpha, {}).items():
            out[beta] = out.get(beta, ZERO) + c * v
    return Element("qsym", "S", out)


register_converter("qsym", "S", _S_to_M, _M_to_S)


# -- the peak (eta) spanning set ---------------------------------------------

def eta(beta) -> Element:
    """eta_beta = sum over coarsenings alpha of 2^{l(alpha)} M_alpha (beta odd)."""
    beta = comps.check_composition(beta)
    assert comps.is_odd(beta), f"{beta} is not an odd composition"
    return Element("qsym", "M",
                   {alpha: Fraction(2) ** len(alpha)
                    for alpha in comps.coarsenings(beta)})


def odd_compositions(n):
    return [a for a in comps.compositions(n) if comps.is_odd(a)]


def pi_rows(n):
    """The peak space Pi_n as rows (eta_beta for odd beta) in M coordinates."""
    keys = comps.compositions(n)
    idx = {k: i for i, k in enumerate(keys)}
    rows = []
    for beta in odd_compositions(n):
        row = [ZERO] * len(keys)
        for alpha, c in eta(beta).terms.items():
            row[idx[alpha]] = c
        rows.append(row)
    return rows


def _eta_to_M(elt: Element) -> Element:
    out = Element("qsym", "M", {})
    for beta, c in elt.terms.items():
        out = out + c * eta(beta)
    return out


def _M_to_eta(elt: Element) -> Element:
    """Solve for eta coordinates; raises if the element is outside Pi."""
    out = {}
    for n in elt.degrees():
        part = elt.homogeneous(n)
        keys = comps.compositions(n)
        odd = odd_compositions(n)
        target = [part[k] for k in keys]
        sol = la.solve(la.transpose(pi_rows(n)), target)
        if sol is None:
            raise ValueError(f"element is not in the peak algebra in degree {n}")
        for beta, c in zip(odd, sol):
            if c != 0:
                out[beta] = c
    return Element("qsym", "eta", out)


register_converter("qsym", "eta", _eta_to_M, _M_to_eta)


# -- characters ---------------------------------------------------------------

def zeta_on_M(alpha) -> Fraction:
    """Canonical character: 1 on M_(n) and M_(), else 0."""
    return ONE if len(alpha) <= 1 else ZERO


def odd_char_on_M(beta) -> Fraction:
    """zetabar^{-1} zeta on the monomial basis (closed form)."""
    if not beta:
        return ONE
    if beta[-1] % 2 == 1:
        sign = -ONE if (sum(beta) + len(beta)) % 2 else ONE
        return 2 * sign
    return ZERO


def odd_char_on_L(alpha) -> Fraction:
    """Same character through the fundamental basis (closed form)."""
    if not alpha:
        return ONE
    if all(a == 1 for a in alpha[:-1]):
        return Fraction(2)
    return ZERO


# -- the Theta map -------------------------------------------------------------

def theta_on_M(beta) -> Element:
    if not beta:
        return M(())
    if beta[-1] % 2 == 0:
        return QSYM.zero()
    sign = -ONE if (sum(beta) + len(beta)) % 2 else ONE
    return sign * eta(comps.odd_collapse(beta))


theta_qsym = LinearMap("Theta_QSym", ("qsym", "M"), ("qsym", "M"), theta_on_M)
