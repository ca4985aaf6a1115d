"""Symmetric functions realized inside QSym.

Sym carries no structure constants of its own: the monomial basis m_λ
embeds as the rearrangement-sum of monomial quasisymmetric functions
and all products/coproducts are computed there and pulled back.  The
p/e/h bases are multiplicative over the generators p_n = M_(n),
e_n = M_(1^n), h_n = sum of all M_alpha; conversion matrices are solved
exactly per degree.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _permutations

from . import exactlinalg as la
from .exactlinalg import ZERO, ONE
from .hopfcore import (AlgebraDescriptor, Element, LinearMap, HARD_DEGREE_CAP,
                       coproduct, product, register_converter)


@lru_cache(maxsize=None)
def partitions(n: int):
    """Partitions of n as weakly decreasing tuples, lex sorted."""
    assert n >= 0

    def gen(rem, mx):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, mx), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n)))


def check_partition(lam):
    lam = tuple(int(x) for x in lam)
    assert all(a >= 1 for a in lam) and list(lam) == sorted(lam, reverse=True), \
        f"not a partition: {lam}"
    return lam


def rearrangements(lam):
    return sorted(set(_permutations(lam)))


def iota_on_m(lam) -> Element:
    return Element("qsym", "M", {alpha: ONE for alpha in rearrangements(lam)})


def is_symmetric(elt: Element) -> bool:
    """Coefficients constant on rearrangement classes (M basis)."""
    from .hopfcore import convert
    elt = convert(elt, "M")
    seen = {}
    for alpha, c in elt.terms.items():
        lam = tuple(sorted(alpha, reverse=True))
        if seen.setdefault(lam, c) != c:
            return False
    for lam, c in seen.items():
        for alpha in rearrangements(lam):
            if elt[alpha] != c:
                return False
    return True


def from_qsym(elt: Element) -> Element:
    """Inverse of iota on its image; raises when not symmetric."""
    assert is_symmetric(elt), "element is not symmetric"
    out = {}
    for alpha, c in elt.terms.items():
        lam = tuple(sorted(alpha, reverse=True))
        out[lam] = c
    return Element("sym", "m", out)


class SymAlgebra(AlgebraDescriptor):
    """Sym with the monomial basis, structure constants through QSym."""

    name = "sym"
    computational_basis = "m"

    def degree(self, key):
        return sum(key)

    def basis_keys(self, n):
        assert 0 <= n <= HARD_DEGREE_CAP, f"degree {n} beyond hard cap"
        return partitions(n)

    def unit_key(self):
        return ()

    def key_from_json(self, data):
        return check_partition(data)

    def product_on_basis(self, k1, k2):
        prod = product(iota_on_m(k1), iota_on_m(k2))
        return from_qsym(prod).terms

    def coproduct_on_basis(self, key):
        # Delta respects Sym; read coefficients at sorted compositions
        out = {}
        for (a, b), c in coproduct(iota_on_m(key)).terms.items():
            lam = tuple(sorted(a, reverse=True))
            mu = tuple(sorted(b, reverse=True))
            if (a, b) == (lam, mu):
                out[(lam, mu)] = c
        return out


SYM = SymAlgebra()

iota = LinearMap("iota", ("sym", "m"), ("qsym", "M"), iota_on_m)


def m(lam, coeff=1) -> Element:
    return Element("sym", "m", {check_partition(lam): coeff})


def p_gen(n) -> Element:
    return m((n,)) if n else SYM.unit()


def e_gen(n) -> Element:
    return m((1,) * n) if n else SYM.unit()


def h_gen(n) -> Element:
    return Element("sym", "m", {lam: ONE for lam in partitions(n)})


_GENS = {"p": p_gen, "e": e_gen, "h": h_gen}


def multiplicative(basis, lam) -> Element:
    """p_lambda / e_lambda / h_lambda in the m basis."""
    out = SYM.unit()
    for part in lam:
        out = product(out, _GENS[basis](part))
    return out


@lru_cache(maxsize=None)
def _basis_matrix(basis, n):
    """Rows: basis_lambda in m coordinates, lam in partitions(n) order."""
    keys = partitions(n)
    idx = {k: i for i, k in enumerate(keys)}
    rows = la.zeros(len(keys), len(keys))
    for i, lam in enumerate(keys):
        for mu, c in multiplicative(basis, lam).terms.items():
            rows[i][idx[mu]] = c
    return rows


@lru_cache(maxsize=None)
def _basis_matrix_inv(basis, n):
    return la.inverse(_basis_matrix(basis, n))


def _make_converters(basis):
    def to_m(elt: Element) -> Element:
        out = Element("sym", "m", {})
        for lam, c in elt.terms.items():
            out = out + c * multiplicative(basis, lam)
        return out

    def from_m(elt: Element) -> Element:
        out = {}
        for n in elt.degrees():
            part = elt.homogeneous(n)
            keys = partitions(n)
            inv = _basis_matrix_inv(basis, n)
            vec = [part[k] for k in keys]
            for i, lam in enumerate(keys):
                c = sum((vec[j] * inv[j][i] for j in range(len(keys))), ZERO)
                if c != 0:
                    out[lam] = c
        return Element("sym", basis, out)

    return to_m, from_m


for _b in ("p", "e", "h"):
    register_converter("sym", _b, *_make_converters(_b))


# -- Theta ---------------------------------------------------------------------

def theta_on_p(lam) -> Element:
    """2 p_n on odd generators, 0 on even ones, multiplicatively."""
    if any(part % 2 == 0 for part in lam):
        return Element("sym", "p", {})
    return Element("sym", "p", {lam: Fraction(2) ** len(lam)})


theta_sym = LinearMap("Theta_Sym", ("sym", "p"), ("sym", "p"), theta_on_p)


def q_gen(n) -> Element:
    """q_n = Theta(h_n), in the m basis."""
    from .hopfcore import convert
    return convert(theta_sym(h_gen(n)), "m")


def _q_to_m(elt: Element) -> Element:
    out = SYM.zero()
    for lam, c in elt.terms.items():
        piece = SYM.unit()
        for part in lam:
            piece = product(piece, q_gen(part))
        out = out + c * piece
    return out


def _m_to_q(elt: Element) -> Element:
    """Solve for q_lambda coordinates; raises outside the Theta image."""
    out = {}
    for n in elt.degrees():
        part = elt.homogeneous(n)
        keys = partitions(n)
        idx = {k: i for i, k in enumerate(keys)}
        rows = []
        for lam in keys:
            row = [ZERO] * len(keys)
            piece = _q_to_m(Element("sym", "q", {lam: ONE}))
            for mu, c in piece.terms.items():
                row[idx[mu]] = c
            rows.append(row)
        target = [part[k] for k in keys]
        sol = la.solve(la.transpose(rows), target)
        if sol is None:
            raise ValueError(f"element is outside the q-span in degree {n}")
        for lam, c in zip(keys, sol):
            if c != 0:
                out[lam] = c
    return Element("sym", "q", out)


register_converter("sym", "q", _q_to_m, _m_to_q)


# -- projection from NSym --------------------------------------------------------

def pi_on_H(alpha) -> Element:
    return multiplicative("h", tuple(sorted(alpha, reverse=True)))


pi_projection = LinearMap("pi", ("nsym", "H"), ("sym", "m"), pi_on_H)
