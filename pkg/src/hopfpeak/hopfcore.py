"""Generic machinery for graded connected Hopf algebras on a combinatorial basis.

Each algebra is described by an AlgebraDescriptor giving structure
constants on one computational basis; products, coproducts, the
antipode, the pairing against a registered dual, and the candidate map
m∘(S∘R_{-1}⊗id)∘Δ are all derived here.  Elements are immutable-by-
convention sparse dicts of Fraction coefficients; nothing mutates a
term dict after construction, so values are safe to share.
"""

import json
import os
from fractions import Fraction

from .exactlinalg import rat, ZERO, ONE

HARD_DEGREE_CAP = 8


def degree_cap() -> int:
    """Runtime degree cap (env HOPFPEAK_DEGREE_CAP, default 5, hard <= 8)."""
    cap = int(os.environ.get("HOPFPEAK_DEGREE_CAP", "5"))
    assert 1 <= cap <= HARD_DEGREE_CAP, f"degree cap {cap} outside 1..{HARD_DEGREE_CAP}"
    return cap


# ---------------------------------------------------------------------------
# elements and tensors

def _clean(terms):
    return {k: v for k, v in terms.items() if v != 0}


class Element:
    """A finitely supported linear combination of basis keys."""

    __slots__ = ("algebra", "basis", "terms")

    def __init__(self, algebra, basis, terms=None):
        self.algebra = algebra
        self.basis = basis
        self.terms = _clean({k: rat(v) for k, v in (terms or {}).items()})

    def copy_with(self, terms):
        return Element(self.algebra, self.basis, terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra == other.algebra
                and self.basis == other.basis and self.terms == other.terms)

    def __add__(self, other):
        assert (self.algebra, self.basis) == (other.algebra, other.basis), \
            f"cannot add {self.algebra}:{self.basis} and {other.algebra}:{other.basis}"
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return self.copy_with(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, c):
        c = rat(c)
        return self.copy_with({k: c * v for k, v in self.terms.items()})

    def __getitem__(self, key):
        return self.terms.get(key, ZERO)

    def degrees(self):
        d = descriptor(self.algebra)
        return sorted({d.degree(k) for k in self.terms})

    def homogeneous(self, n):
        d = descriptor(self.algebra)
        return self.copy_with({k: v for k, v in self.terms.items() if d.degree(k) == n})

    def __repr__(self):
        if not self.terms:
            return "0"
        d = descriptor(self.algebra)
        bits = []
        for k in sorted(self.terms, key=d.sort_key):
            c = self.terms[k]
            bits.append(f"{c}*{self.basis}{d.key_str(k)}")
        return " + ".join(bits)


class Tensor:
    """Element of the width-fold tensor power, keys = tuples of basis keys."""

    __slots__ = ("algebra", "basis", "width", "terms")

    def __init__(self, algebra, basis, width, terms=None):
        self.algebra = algebra
        self.basis = basis
        self.width = width
        self.terms = _clean({tuple(k): rat(v) for k, v in (terms or {}).items()})

    def copy_with(self, terms):
        return Tensor(self.algebra, self.basis, self.width, terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Tensor) and self.algebra == other.algebra
                and self.basis == other.basis and self.width == other.width
                and self.terms == other.terms)

    def __add__(self, other):
        assert (self.algebra, self.basis, self.width) == \
               (other.algebra, other.basis, other.width)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return self.copy_with(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        c = rat(c)
        return self.copy_with({k: c * v for k, v in self.terms.items()})

    def __getitem__(self, key):
        return self.terms.get(tuple(key), ZERO)

    def __repr__(self):
        if not self.terms:
            return "0"
        d = descriptor(self.algebra)
        bits = []
        for k in sorted(self.terms, key=lambda t: tuple(d.sort_key(x) for x in t)):
            piece = " ⊗ ".join(f"{self.basis}{d.key_str(x)}" for x in k)
            bits.append(f"{self.terms[k]}*({piece})")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# descriptors and registries

ALGEBRAS = {}
# Kronecker-dual basis pairs: (alg, basis) -> (dual alg, dual basis); symmetric.
KRON_DUAL = {}
# basis converters: (alg, basis) -> (to_computational, from_computational)
CONVERTERS = {}


class AlgebraDescriptor:
    """Structure constants of one graded connected Hopf algebra.

    Subclasses provide: degree, basis_keys, product_on_basis (dict
    key->coeff), coproduct_on_basis (dict (key,key)->coeff), unit_key,
    and key (de)serialization.  Degree-0 must be one-dimensional.
    """

    name = None
    computational_basis = None

    def __init__(self):
        self._prod_memo = {}
        self._cop_memo = {}
        self._antipode_memo = {}
        ALGEBRAS[self.name] = self

    # -- interface ---------------------------------------------------------
    def degree(self, key):
        raise NotImplementedError

    def basis_keys(self, n):
        raise NotImplementedError

    def unit_key(self):
        raise NotImplementedError

    def product_on_basis(self, k1, k2):
        raise NotImplementedError

    def coproduct_on_basis(self, key):
        raise NotImplementedError

    # -- key presentation ----------------------------------------------------
    def key_str(self, key):
        return str(list(key))

    def sort_key(self, key):
        return (self.degree(key), key)

    def key_to_json(self, key):
        return list(key)

    def key_from_json(self, data):
        return tuple(data)

    # -- memoized structure constants ---------------------------------------
    def product_elem(self, k1, k2):
        hit = self._prod_memo.get((k1, k2))
        if hit is None:
            hit = Element(self.name, self.computational_basis,
                          self.product_on_basis(k1, k2))
            self._prod_memo[(k1, k2)] = hit
        return hit

    def coproduct_tensor(self, key):
        hit = self._cop_memo.get(key)
        if hit is None:
            hit = Tensor(self.name, self.computational_basis, 2,
                         self.coproduct_on_basis(key))
            self._cop_memo[key] = hit
        return hit

    def unit(self):
        return Element(self.name, self.computational_basis, {self.unit_key(): ONE})

    def monomial(self, key, coeff=ONE):
        return Element(self.name, self.computational_basis, {key: coeff})

    def zero(self):
        return Element(self.name, self.computational_basis, {})


def descriptor(name) -> AlgebraDescriptor:
    return ALGEBRAS[name]


def register_dual_pair(a, b):
    KRON_DUAL[a] = b
    KRON_DUAL[b] = a


def register_converter(algebra, basis, to_comp, from_comp):
    CONVERTERS[(algebra, basis)] = (to_comp, from_comp)


def convert(elt: Element, basis) -> Element:
    """Exact basis change within the element's algebra."""
    if elt.basis == basis:
        return elt
    d = descriptor(elt.algebra)
    comp = d.computational_basis
    if elt.basis != comp:
        to_comp, _ = CONVERTERS[(elt.algebra, elt.basis)]
        elt = to_comp(elt)
    if basis == comp:
        return elt
    _, from_comp = CONVERTERS[(elt.algebra, basis)]
    return from_comp(elt)


def to_computational(elt: Element) -> Element:
    return convert(elt, descriptor(elt.algebra).computational_basis)


# ---------------------------------------------------------------------------
# derived operations

def product(a: Element, b: Element) -> Element:
    assert a.algebra == b.algebra, f"algebra mismatch {a.algebra} vs {b.algebra}"
    d = descriptor(a.algebra)
    a = to_computational(a)
    b = to_computational(b)
    out = {}
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            c = c1 * c2
            for k, v in d.product_elem(k1, k2).terms.items():
                out[k] = out.get(k, ZERO) + c * v
    return Element(a.algebra, d.computational_basis, out)


def product_many(factors, algebra=None):
    assert factors or algebra is not None
    d = descriptor(factors[0].algebra if factors else algebra)
    out = d.unit()
    for f in factors:
        out = product(out, f)
    return out


def coproduct(a: Element) -> Tensor:
    d = descriptor(a.algebra)
    a = to_computational(a)
    out = {}
    for k, c in a.terms.items():
        for pair, v in d.coproduct_tensor(k).terms.items():
            out[pair] = out.get(pair, ZERO) + c * v
    return Tensor(a.algebra, d.computational_basis, 2, out)


def iterated_coproduct(a: Element, k: int) -> Tensor:
    """Image of a in the k-fold tensor power; k=1 is a itself, k=2 is Δ."""
    assert k >= 1
    d = descriptor(a.algebra)
    a = to_computational(a)
    cur = Tensor(a.algebra, a.basis, 1, {(key,): c for key, c in a.terms.items()})
    while cur.width < k:
        out = {}
        for keys, c in cur.terms.items():
            for pair, v in d.coproduct_tensor(keys[-1]).terms.items():
                nk = keys[:-1] + pair
                out[nk] = out.get(nk, ZERO) + c * v
        cur = Tensor(a.algebra, a.basis, cur.width + 1, out)
    return cur


def counit(a: Element) -> Fraction:
    d = descriptor(a.algebra)
    a = to_computational(a)
    return a.terms.get(d.unit_key(), ZERO)


def antipode_on_basis(d: AlgebraDescriptor, key) -> Element:
    """Graded-connected recursion S(x) = -x - Σ S(x')x'' over the reduced Δ."""
    hit = d._antipode_memo.get(key)
    if hit is not None:
        return hit
    if d.degree(key) == 0:
        out = d.unit()
    else:
        out = -1 * d.monomial(key)
        for (k1, k2), c in d.coproduct_tensor(key).terms.items():
            if d.degree(k1) == 0 or d.degree(k2) == 0:
                continue
            out = out - c * product(antipode_on_basis(d, k1), d.monomial(k2))
    d._antipode_memo[key] = out
    return out


def antipode(a: Element) -> Element:
    d = descriptor(a.algebra)
    a = to_computational(a)
    out = d.zero()
    for k, c in a.terms.items():
        out = out + c * antipode_on_basis(d, k)
    return out


def grade_sign(a: Element) -> Element:
    """R_{-1}: scale the degree-n component by (-1)^n."""
    d = descriptor(a.algebra)
    return a.copy_with({k: v if d.degree(k) % 2 == 0 else -v
                        for k, v in a.terms.items()})


def phi_candidate(a: Element) -> Element:
    """m∘(S∘R_{-1}⊗id)∘Δ, a Theta map whenever the algebra is
    commutative and co-commutative (and not in general)."""
    d = descriptor(a.algebra)
    a = to_computational(a)
    out = d.zero()
    for (k1, k2), c in coproduct(a).terms.items():
        sign = -ONE if d.degree(k1) % 2 else ONE
        out = out + (c * sign) * product(antipode_on_basis(d, k1), d.monomial(k2))
    return out


def tensor_product_pairs(t1: Tensor, t2: Tensor) -> Tensor:
    """(x1⊗x2)·(y1⊗y2) slotwise, for width-2 tensors."""
    assert t1.width == t2.width == 2 and t1.algebra == t2.algebra
    d = descriptor(t1.algebra)
    out = {}
    for (a1, a2), c1 in t1.terms.items():
        for (b1, b2), c2 in t2.terms.items():
            c = c1 * c2
            left = d.product_elem(a1, b1)
            right = d.product_elem(a2, b2)
            for kl, vl in left.terms.items():
                for kr, vr in right.terms.items():
                    key = (kl, kr)
                    out[key] = out.get(key, ZERO) + c * vl * vr
    return Tensor(t1.algebra, t1.basis, 2, out)


def tensor_swap(t: Tensor) -> Tensor:
    assert t.width == 2
    return t.copy_with({(k2, k1): v for (k1, k2), v in t.terms.items()})


# ---------------------------------------------------------------------------
# verifier

def check_hopf_axioms(d: AlgebraDescriptor, n_max: int) -> dict:
    """Exact check of the bialgebra/Hopf axioms on all basis tuples of
    total degree <= n_max.  Returns a report with pass flags and the
    first witness for any failure."""
    report = {"algebra": d.name, "n_max": n_max, "checks": {}, "passed": True}

    def record(name, ok, witness=None):
        report["checks"][name] = {"passed": ok, "witness": witness}
        if not ok:
            report["passed"] = False

    keys_by_deg = {n: list(d.basis_keys(n)) for n in range(n_max + 1)}
    unit = d.unit()

    # unit laws and counit of the unit
    ok, wit = True, None
    for n in range(n_max + 1):
        for k in keys_by_deg[n]:
            e = d.monomial(k)
            if product(unit, e) != e or product(e, unit) != e:
                ok, wit = False, k
                break
        if not ok:
            break
    record("unit_laws", ok, wit)

    # associativity on triples
    ok, wit = True, None
    for n1 in range(1, n_max - 1):
        for n2 in range(1, n_max - n1):
            for n3 in range(1, n_max - n1 - n2 + 1):
                for k1 in keys_by_deg[n1]:
                    for k2 in keys_by_deg[n2]:
                        for k3 in keys_by_deg[n3]:
                            a, b, c = d.monomial(k1), d.monomial(k2), d.monomial(k3)
                            if product(product(a, b), c) != product(a, product(b, c)):
                                ok, wit = False, (k1, k2, k3)
                if not ok:
                    break
    record("associativity", ok, wit)

    # coassociativity and counit laws
    ok, wit = True, None
    cok, cwit = True, None
    for n in range(n_max + 1):
        for k in keys_by_deg[n]:
            e = d.monomial(k)
            two = coproduct(e)
            left = {}
            right = {}
            for (k1, k2), c in two.terms.items():
                for (a, b), v in d.coproduct_tensor(k1).terms.items():
                    key = (a, b, k2)
                    left[key] = left.get(key, ZERO) + c * v
                for (a, b), v in d.coproduct_tensor(k2).terms.items():
                    key = (k1, a, b)
                    right[key] = right.get(key, ZERO) + c * v
            if _clean(left) != _clean(right) and ok:
                ok, wit = False, k
            eps_left = d.zero()
            eps_right = d.zero()
            for (k1, k2), c in two.terms.items():
                if d.degree(k1) == 0:
                    eps_left = eps_left + c * d.monomial(k2)
                if d.degree(k2) == 0:
                    eps_right = eps_right + c * d.monomial(k1)
            if eps_left != e or eps_right != e:
                cok, cwit = False, k
    record("coassociativity", ok, wit)
    record("counit_laws", cok, cwit)

    # bialgebra compatibility Δ(ab) = Δ(a)Δ(b)
    ok, wit = True, None
    for n1 in range(1, n_max):
        for n2 in range(1, n_max - n1 + 1):
            for k1 in keys_by_deg[n1]:
                for k2 in keys_by_deg[n2]:
                    a, b = d.monomial(k1), d.monomial(k2)
                    lhs = coproduct(product(a, b))
                    rhs = tensor_product_pairs(coproduct(a), coproduct(b))
                    if lhs != rhs:
                        ok, wit = False, (k1, k2)
            if not ok:
                break
        if not ok:
            break
    record("compatibility", ok, wit)

    # antipode identity m(S⊗id)Δ = uε = m(id⊗S)Δ
    ok, wit = True, None
    for n in range(n_max + 1):
        for k in keys_by_deg[n]:
            e = d.monomial(k)
            target = counit(e) * unit
            lhs = d.zero()
            rhs = d.zero()
            for (k1, k2), c in coproduct(e).terms.items():
                lhs = lhs + c * product(antipode_on_basis(d, k1), d.monomial(k2))
                rhs = rhs + c * product(d.monomial(k1), antipode_on_basis(d, k2))
            if lhs != target or rhs != target:
                ok, wit = False, k
                break
        if not ok:
            break
    record("antipode", ok, wit)
    return report


# ---------------------------------------------------------------------------
# pairing and adjoints

def pairing(f: Element, a: Element) -> Fraction:
    """Kronecker pairing of registered dual bases, extended bilinearly."""
    f = to_computational(f)
    a = to_computational(a)
    dual = KRON_DUAL.get((f.algebra, f.basis))
    assert dual == (a.algebra, a.basis), \
        f"no dual pair registered for {(f.algebra, f.basis)} vs {(a.algebra, a.basis)}"
    if len(f.terms) > len(a.terms):
        f, a = a, f
    return sum((c * a.terms.get(k, ZERO) for k, c in f.terms.items()), ZERO)


class LinearMap:
    """Degree-preserving linear map given by images of domain basis keys."""

    def __init__(self, name, domain, codomain, fn):
        self.name = name
        self.domain = domain      # (algebra, basis)
        self.codomain = codomain  # (algebra, basis)
        self.fn = fn              # key -> Element in codomain basis
        self._images = {}

    def on_key(self, key) -> Element:
        hit = self._images.get(key)
        if hit is None:
            hit = convert(self.fn(key), self.codomain[1])
            self._images[key] = hit
        return hit

    def __call__(self, elt: Element) -> Element:
        assert elt.algebra == self.domain[0], \
            f"{self.name}: expected {self.domain[0]} element, got {elt.algebra}"
        elt = convert(elt, self.domain[1])
        out = Element(self.codomain[0], self.codomain[1], {})
        for k, c in elt.terms.items():
            out = out + c * self.on_key(k)
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self ∘ other."""
        assert other.codomain[0] == self.domain[0]
        return LinearMap(f"{self.name}∘{other.name}", other.domain, self.codomain,
                         lambda k: self(other.on_key(k)))

    def matrix(self, n):
        """Rows = images of degree-n domain keys in codomain coordinates."""
        dom = descriptor(self.domain[0])
        cod = descriptor(self.codomain[0])
        dom_keys = list(dom.basis_keys(n))
        cod_keys = list(cod.basis_keys(n))
        idx = {k: i for i, k in enumerate(cod_keys)}
        rows = []
        for k in dom_keys:
            img = convert(self.on_key(k), cod.computational_basis)
            row = [ZERO] * len(cod_keys)
            for kk, c in img.terms.items():
                row[idx[kk]] = c
            rows.append(row)
        return rows, dom_keys, cod_keys


def identity_map(algebra) -> LinearMap:
    d = descriptor(algebra)
    b = d.computational_basis
    return LinearMap("id", (algebra, b), (algebra, b), lambda k: d.monomial(k))


def adjoint(phi: LinearMap) -> LinearMap:
    """The dual map: ⟨adjoint(phi)(g), v⟩ = ⟨g, phi(v)⟩, via degreewise
    transpose with respect to registered Kronecker-dual bases."""
    dom_d = descriptor(phi.domain[0])
    cod_d = descriptor(phi.codomain[0])
    dual_dom = KRON_DUAL[(cod_d.name, cod_d.computational_basis)]
    dual_cod = KRON_DUAL[(dom_d.name, dom_d.computational_basis)]
    matrices = {}

    def fn(key):
        n = descriptor(dual_dom[0]).degree(key)
        if n not in matrices:
            matrices[n] = phi.matrix(n)
        rows, dom_keys, cod_keys = matrices[n]
        j = cod_keys.index(key)
        terms = {dom_keys[i]: rows[i][j] for i in range(len(dom_keys))}
        return Element(dual_cod[0], dual_cod[1], terms)

    return LinearMap(f"{phi.name}*", dual_dom, dual_cod, fn)


# ---------------------------------------------------------------------------
# JSON wire format

def element_to_json(elt: Element) -> dict:
    d = descriptor(elt.algebra)
    terms = [{"index": d.key_to_json(k), "coeff": str(v)}
             for k, v in sorted(elt.terms.items(), key=lambda kv: d.sort_key(kv[0]))]
    return {"algebra": elt.algebra, "basis": elt.basis, "terms": terms}


def element_from_json(data) -> Element:
    if isinstance(data, str):
        data = json.loads(data)
    d = descriptor(data["algebra"])
    terms = {}
    for t in data["terms"]:
        k = d.key_from_json(t["index"])
        terms[k] = terms.get(k, ZERO) + rat(t.get("coeff", "1"))
    return Element(data["algebra"], data["basis"], terms)


def tensor_to_json(t: Tensor) -> dict:
    d = descriptor(t.algebra)
    terms = [{"factors": [d.key_to_json(k) for k in keys], "coeff": str(v)}
             for keys, v in sorted(t.terms.items(),
                                   key=lambda kv: tuple(d.sort_key(x) for x in kv[0]))]
    return {"algebra": t.algebra, "basis": t.basis, "width": t.width, "terms": terms}
