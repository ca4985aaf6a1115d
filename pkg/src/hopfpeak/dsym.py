"""Diagonally symmetric functions in two sets of variables.

The monomial basis is indexed by bipartitions: multisets of nonzero
columns (a, b) of non-negative ints, stored sorted in decreasing
lexicographic order.  The m-product counts monomial alignments (the
two-alphabet quasi-shuffle); the truncated power-series oracle used by
the tests expands the same objects in N concrete variable pairs.  The
h/e/q families come from their generating functions, the antipode from
the closed form on e generators, and the Theta maps are the generic
commutative/co-commutative candidate plus the projection-embedding
composite through Sym.
"""

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations as _permutations

from . import exactlinalg as la
from . import sym
from .exactlinalg import ZERO, ONE
from .hopfcore import (AlgebraDescriptor, Element, LinearMap, HARD_DEGREE_CAP,
                       convert, phi_candidate, product)


def canon(cols) -> tuple:
    cols = tuple(sorted((tuple(int(x) for x in c) for c in cols), reverse=True))
    assert all(len(c) == 2 and c != (0, 0) and c[0] >= 0 and c[1] >= 0
               for c in cols), f"bad bipartition columns: {cols}"
    return cols


def bp_size(key) -> int:
    return sum(a + b for a, b in key)


def bp_union(k1, k2) -> tuple:
    return canon(tuple(k1) + tuple(k2))


@lru_cache(maxsize=None)
def all_columns(n: int):
    """Nonzero columns of size <= n, decreasing lex."""
    out = [(a, s - a) for s in range(1, n + 1) for a in range(s, -1, -1)]
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def bipartitions(n: int):
    assert n >= 0
    cols = all_columns(n)

    def rec(rem, i):
        if rem == 0:
            yield ()
            return
        for j in range(i, len(cols)):
            c = cols[j]
            if c[0] + c[1] <= rem:
                for rest in rec(rem - c[0] - c[1], j):
                    yield (c,) + rest

    return tuple(sorted(rec(n, 0)))


class DSymAlgebra(AlgebraDescriptor):
    name = "dsym"
    computational_basis = "m"

    def degree(self, key):
        return bp_size(key)

    def basis_keys(self, n):
        assert 0 <= n <= HARD_DEGREE_CAP, f"degree {n} beyond hard cap"
        return bipartitions(n)

    def unit_key(self):
        return ()

    def product_on_basis(self, k1, k2):
        out = {}
        for nu in _product_candidates(k1, k2):
            c = count_alignments(k1, k2, nu)
            if c:
                out[nu] = Fraction(c)
        return out

    def coproduct_on_basis(self, key):
        out = {}
        for left in _sub_multisets(key):
            rem = Counter(key) - Counter(left)
            pair = (left, canon(rem.elements()) if rem else ())
            out[pair] = out.get(pair, ZERO) + ONE
        return out

    def key_str(self, key):
        top = [c[0] for c in key]
        bot = [c[1] for c in key]
        return f"{{top={top},bot={bot}}}"

    def key_to_json(self, key):
        return {"top": [c[0] for c in key], "bot": [c[1] for c in key]}

    def key_from_json(self, data):
        return canon(zip(data["top"], data["bot"]))

    def sort_key(self, key):
        return (bp_size(key), key)


def _sub_multisets(key):
    """Distinct sub-multisets of a column multiset, each exactly once."""
    items = sorted(Counter(key).items(), reverse=True)
    outs = [()]
    for col, mult in items:
        outs = [prev + (col,) * k for prev in outs for k in range(mult + 1)]
    return [canon(o) if o else () for o in outs]


def _product_candidates(k1, k2):
    """All merge shapes: some columns of k1 pair off with columns of k2."""
    cands = set()
    l1, l2 = list(k1), list(k2)
    for k in range(min(len(l1), len(l2)) + 1):
        for pos1 in combinations(range(len(l1)), k):
            rest1 = [l1[i] for i in range(len(l1)) if i not in pos1]
            for pos2 in _permutations(range(len(l2)), k):
                merged = [(l1[pos1[i]][0] + l2[pos2[i]][0],
                           l1[pos1[i]][1] + l2[pos2[i]][1]) for i in range(k)]
                rest2 = [l2[j] for j in range(len(l2)) if j not in set(pos2)]
                cands.add(canon(merged + rest1 + rest2))
    return cands


def count_alignments(k1, k2, nu) -> int:
    """Number of ways the canonical monomial of nu factors as (monomial
    of m_{k1}) x (monomial of m_{k2}); this is the product coefficient."""
    lam = Counter(k1)
    mu = Counter(k2)

    def rec(i, lam_rem, mu_rem):
        if i == len(nu):
            return 1 if not (+lam_rem) and not (+mu_rem) else 0
        val = nu[i]
        total = 0
        if lam_rem[val] > 0:
            lam_rem[val] -= 1
            total += rec(i + 1, lam_rem, mu_rem)
            lam_rem[val] += 1
        if mu_rem[val] > 0:
            mu_rem[val] -= 1
            total += rec(i + 1, lam_rem, mu_rem)
            mu_rem[val] += 1
        for a in [c for c in lam_rem if lam_rem[c] > 0]:
            b = (val[0] - a[0], val[1] - a[1])
            if a != val and b != (0, 0) and b[0] >= 0 and b[1] >= 0 and mu_rem[b] > 0:
                lam_rem[a] -= 1
                mu_rem[b] -= 1
                total += rec(i + 1, lam_rem, mu_rem)
                lam_rem[a] += 1
                mu_rem[b] += 1
        return total

    return rec(0, lam, mu)


DSYM = DSymAlgebra()


def m(cols, coeff=1) -> Element:
    return Element("dsym", "m", {canon(cols) if cols else (): coeff})


# ---------------------------------------------------------------------------
# truncated two-alphabet polynomial oracle

class Poly2:
    """Truncated polynomial in N pairs (x_i, y_i); monomial keys are
    length-N tuples of (a_i, b_i)."""

    def __init__(self, nvars, max_deg, terms=None):
        self.nvars = nvars
        self.max_deg = max_deg
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, nvars, max_deg, c=ONE):
        return cls(nvars, max_deg, {((0, 0),) * nvars: la.rat(c)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return Poly2(self.nvars, self.max_deg, out)

    def __mul__(self, other):
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple((a1 + a2, b1 + b2)
                            for (a1, b1), (a2, b2) in zip(k1, k2))
                if sum(a + b for a, b in key) > self.max_deg:
                    continue
                out[key] = out.get(key, ZERO) + c1 * c2
        return Poly2(self.nvars, self.max_deg, out)

    def __eq__(self, other):
        return self.nvars == other.nvars and self.terms == other.terms


def m_to_poly(key, nvars, max_deg) -> Poly2:
    """Expand a monomial basis element in nvars concrete variable pairs."""
    assert len(key) <= nvars, "not enough variables for this bipartition"
    padded = tuple(key) + ((0, 0),) * (nvars - len(key))
    monos = set(_permutations(padded))
    return Poly2(nvars, max_deg, {mo: ONE for mo in monos})


def poly_to_m(poly: Poly2) -> Element:
    """Read off monomial-basis coefficients at canonical lead monomials."""
    out = {}
    for mono, c in poly.terms.items():
        cols = canon([p for p in mono if p != (0, 0)]) if any(
            p != (0, 0) for p in mono) else ()
        lead = tuple(cols) + ((0, 0),) * (poly.nvars - len(cols))
        if mono == lead:
            out[cols] = c
    return Element("dsym", "m", out)


def element_to_poly(elt: Element, nvars, max_deg) -> Poly2:
    out = Poly2(nvars, max_deg)
    for k, c in convert(elt, "m").terms.items():
        p = m_to_poly(k, nvars, max_deg)
        out = out + Poly2(nvars, max_deg, {kk: c * vv for kk, vv in p.terms.items()})
    return out


# ---------------------------------------------------------------------------
# generating-function families

def _fold_st_factors(factor_of_var, a, b, nvars):
    """Multiply per-variable polynomials in (s, t) with Poly2 coefficients,
    truncating at s^a t^b and total xy-degree a+b."""
    max_deg = a + b
    acc = {(0, 0): Poly2.constant(nvars, max_deg)}
    for i in range(nvars):
        fac = factor_of_var(i)
        nxt = {}
        for (sa, sb), coeff in acc.items():
            for (fa, fb), fcoeff in fac.items():
                na, nb = sa + fa, sb + fb
                if na > a or nb > b:
                    continue
                term = coeff * fcoeff
                if (na, nb) in nxt:
                    nxt[(na, nb)] = nxt[(na, nb)] + term
                else:
                    nxt[(na, nb)] = term
        acc = nxt
    return acc


def _e_factor(i, a, b, nvars):
    """1 + x_i s + y_i t as {(s-exp, t-exp): Poly2}."""
    max_deg = a + b

    def unit_mono(col):
        key = [(0, 0)] * nvars
        key[i] = col
        return Poly2(nvars, max_deg, {tuple(key): ONE})

    return {(0, 0): Poly2.constant(nvars, max_deg),
            (1, 0): unit_mono((1, 0)),
            (0, 1): unit_mono((0, 1))}


def _h_factor(i, a, b, nvars):
    """1/(1 - x_i s - y_i t) truncated: sum C(j+l, j) x^j y^l s^j t^l."""
    max_deg = a + b
    out = {}
    for j in range(a + 1):
        for l in range(b + 1):
            if j + l > max_deg:
                continue
            key = [(0, 0)] * nvars
            key[i] = (j, l)
            out[(j, l)] = Poly2(nvars, max_deg,
                                {tuple(key): Fraction(math.comb(j + l, j))})
    return out


@lru_cache(maxsize=None)
def he_expand(kind: str, a: int, b: int, nvars=None) -> "Element":
    """h or e generator at (a, b) via coefficient extraction from the
    generating function, using nvars variable pairs (default a+b)."""
    assert kind in ("h", "e")
    if (a, b) == (0, 0):
        return DSYM.unit()
    nvars = nvars if nvars is not None else a + b
    factory = _e_factor if kind == "e" else _h_factor
    acc = _fold_st_factors(lambda i: factory(i, a, b, nvars), a, b, nvars)
    poly = acc.get((a, b), Poly2(nvars, a + b))
    return poly_to_m(poly)


def e_closed(a: int, b: int) -> Element:
    """e_(a,b) = the square-free bipartition with a tops and b bottoms."""
    if (a, b) == (0, 0):
        return DSYM.unit()
    return m(((1, 0),) * a + ((0, 1),) * b)


def h_gen(a, b) -> Element:
    return he_expand("h", a, b)


def e_gen(a, b) -> Element:
    return he_expand("e", a, b)


def q_gf(a: int, b: int) -> Element:
    """Coefficient of s^a t^b in prod (1+x s+y t)/(1-x s-y t)."""
    if (a, b) == (0, 0):
        return DSYM.unit()
    nvars = a + b

    def factor(i):
        e = _e_factor(i, a, b, nvars)
        h = _h_factor(i, a, b, nvars)
        out = {}
        for (ea, eb), ec in e.items():
            for (ha, hb), hc in h.items():
                na, nb = ea + ha, eb + hb
                if na > a or nb > b:
                    continue
                term = ec * hc
                out[(na, nb)] = out[(na, nb)] + term if (na, nb) in out else term
        return out

    acc = _fold_st_factors(factor, a, b, nvars)
    return poly_to_m(acc.get((a, b), Poly2(nvars, a + b)))


def multiplicative(gen, lam_cols) -> Element:
    out = DSYM.unit()
    for (a, b) in lam_cols:
        out = product(out, gen(a, b))
    return out


# ---------------------------------------------------------------------------
# antipode and Theta

@lru_cache(maxsize=None)
def _e_matrix(n: int):
    """Rows: e_lambda in m coordinates over bipartitions(n)."""
    keys = bipartitions(n)
    idx = {k: i for i, k in enumerate(keys)}
    rows = la.zeros(len(keys), len(keys))
    for i, lam in enumerate(keys):
        for muk, c in multiplicative(e_gen, lam).terms.items():
            rows[i][idx[muk]] = c
    return rows


@lru_cache(maxsize=None)
def _e_matrix_inv(n: int):
    return la.inverse(_e_matrix(n))


def to_e_coords(elt: Element):
    """Expand in the multiplicative e basis, degree by degree."""
    out = {}
    for n in elt.degrees():
        part = elt.homogeneous(n)
        keys = bipartitions(n)
        inv = _e_matrix_inv(n)
        vec = [part[k] for k in keys]
        for i, lam in enumerate(keys):
            c = sum((vec[j] * inv[j][i] for j in range(len(keys))), ZERO)
            if c != 0:
                out[lam] = c
    return out


def antipode_e(elt: Element) -> Element:
    """Closed-form antipode: S(e_(a,b)) = (-1)^{a+b} h_(a,b), extended as
    an algebra morphism (DSym is commutative)."""
    out = DSYM.zero()
    for lam, c in to_e_coords(elt).items():
        sign = -ONE if bp_size(lam) % 2 else ONE
        out = out + (c * sign) * multiplicative(h_gen, lam)
    return out


def theta_dsym(elt: Element) -> Element:
    """The commutative/co-commutative Theta map m∘(S∘R_{-1}⊗id)∘Δ."""
    return phi_candidate(convert(elt, "m"))


def q_gen(a: int, b: int) -> Element:
    """q_(a,b) = Theta(e_(a,b))."""
    return theta_dsym(e_gen(a, b))


def q_convolution(a: int, b: int) -> Element:
    """The h*e convolution formula for the same generator."""
    out = DSYM.zero()
    for i in range(a + 1):
        for k in range(b + 1):
            out = out + product(h_gen(i, k), e_gen(a - i, b - k))
    return out


def q_identity_check(n_max: int) -> dict:
    """Verify sum (-1)^{a+b} q_(a,b) q_(c,d) = 0 over a+c=n, b+d=m for all
    (n, m) != (0, 0) with n+m <= n_max, and the induced even-weight
    decompositions 2q_(n,m) = -sum of proper products."""
    report = {"n_max": n_max, "passed": True, "cases": []}
    qmemo = {}

    def q(a, b):
        if (a, b) not in qmemo:
            qmemo[(a, b)] = q_gen(a, b)
        return qmemo[(a, b)]

    for total in range(1, n_max + 1):
        for n in range(total + 1):
            mm = total - n
            acc = DSYM.zero()
            proper = DSYM.zero()
            for a in range(n + 1):
                for b in range(mm + 1):
                    c, d = n - a, mm - b
                    sign = -ONE if (a + b) % 2 else ONE
                    term = sign * product(q(a, b), q(c, d))
                    acc = acc + term
                    if (a, b) != (0, 0) and (c, d) != (0, 0):
                        proper = proper + term
            ok = acc.is_zero()
            case = {"n": n, "m": mm, "vanishes": ok}
            if total % 2 == 0:
                case["even_decomposition"] = \
                    (2 * q(n, mm) == -1 * proper)
                ok = ok and case["even_decomposition"]
            report["cases"].append(case)
            report["passed"] = report["passed"] and ok
    return report


# ---------------------------------------------------------------------------
# the projection / embedding Theta map through Sym

def _alignment_multiplicity(key) -> int:
    """Monomials of m_key collapsing onto one monomial under y_i := x_i."""
    by_sum = Counter()
    by_col = Counter(key)
    for col in key:
        by_sum[col[0] + col[1]] += 1
    count = 1
    for s, slots in by_sum.items():
        count *= math.factorial(slots)
    for col, mult in by_col.items():
        count //= math.factorial(mult)
    return count


def p_on_m(key) -> Element:
    """The y_i := x_i specialization DSym -> Sym (with alignment
    multiplicities; the bare column-sum sort is not a Hopf morphism)."""
    lam = tuple(sorted((a + b for a, b in key), reverse=True))
    return Element("sym", "m", {lam: Fraction(_alignment_multiplicity(key))})


p_to_sym = LinearMap("p", ("dsym", "m"), ("sym", "m"), p_on_m)


def i_on_m(lam) -> Element:
    return m(tuple((part, 0) for part in lam)) if lam else DSYM.unit()


i_from_sym = LinearMap("i", ("sym", "m"), ("dsym", "m"), i_on_m)


def theta_dsym_alt(elt: Element) -> Element:
    """i ∘ Theta_Sym ∘ p; a Theta map for the single-column character."""
    mid = convert(sym.theta_sym(p_to_sym(convert(elt, "m"))), "m")
    return i_from_sym(mid)
