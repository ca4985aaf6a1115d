"""The Malvenuto-Reutenauer Hopf algebra of permutations and its dual.

F is the computational basis (shifted-shuffle product, cut-and-
standardize coproduct); M is the weak-order Mobius companion.  The
graded dual lives under the algebra id "ssymdual" with bases Fs / Ms.
The Theta-map family is built from a constructor function f on pairs of
permutations by the double induction on (degree, inversions); the
recursion carries an explicit in-progress stack so any violation of the
induction measure trips immediately instead of looping.
"""

from fractions import Fraction

from . import compositions as comps
from . import permutations as perms
from . import qsym
from .exactlinalg import ZERO, ONE, rat
from .hopfcore import (AlgebraDescriptor, Element, LinearMap, Tensor,
                       HARD_DEGREE_CAP, adjoint, coproduct, degree_cap,
                       register_converter, register_dual_pair)


class SSymAlgebra(AlgebraDescriptor):
    name = "ssym"
    computational_basis = "F"

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
        out = {}
        for w in perms.shifted_shuffle(k1, k2):
            out[w] = out.get(w, ZERO) + ONE
        return out

    def coproduct_on_basis(self, key):
        return {(perms.std(key[:i]), perms.std(key[i:])): ONE
                for i in range(len(key) + 1)}

    def key_str(self, key):
        return "[" + "".join(map(str, key)) + "]" if key else "[]"


class SSymDualAlgebra(AlgebraDescriptor):
    """Graded dual of ssym; Fs is Kronecker-dual to F."""

    name = "ssymdual"
    computational_basis = "Fs"

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
        # dual of the cut coproduct: choose which values feed the prefix
        from itertools import combinations
        n, m = len(k1), len(k2)
        out = {}
        for chosen in combinations(range(1, n + m + 1), n):
            rest = [v for v in range(1, n + m + 1) if v not in set(chosen)]
            word = tuple(chosen[i - 1] for i in k1) + tuple(rest[j - 1] for j in k2)
            out[word] = out.get(word, ZERO) + ONE
        return out

    def coproduct_on_basis(self, key):
        # dual of the shifted shuffle: split by value threshold
        n = len(key)
        out = {}
        for s in range(n + 1):
            left = tuple(v for v in key if v <= s)
            right = tuple(v - s for v in key if v > s)
            pair = (left, right)
            out[pair] = out.get(pair, ZERO) + ONE
        return out

    def key_str(self, key):
        return "[" + "".join(map(str, key)) + "]" if key else "[]"


SSYM = SSymAlgebra()
SSYM_DUAL = SSymDualAlgebra()
register_dual_pair(("ssymdual", "Fs"), ("ssym", "F"))
register_dual_pair(("ssymdual", "Ms"), ("ssym", "M"))


def F(word, coeff=1) -> Element:
    return Element("ssym", "F", {perms.check_perm(word): coeff})


def Mp(word, coeff=1) -> Element:
    return Element("ssym", "M", {perms.check_perm(word): coeff})


def Fs(word, coeff=1) -> Element:
    return Element("ssymdual", "Fs", {perms.check_perm(word): coeff})


def Ms(word, coeff=1) -> Element:
    return Element("ssymdual", "Ms", {perms.check_perm(word): coeff})


# -- weak order basis changes -------------------------------------------------

def _M_to_F(elt: Element) -> Element:
    out = {}
    for sigma, c in elt.terms.items():
        for tau in perms.upper_set(sigma):
            mu = perms.mobius(sigma, tau)
            if mu:
                out[tau] = out.get(tau, ZERO) + c * mu
    return Element("ssym", "F", out)


def _F_to_M(elt: Element) -> Element:
    out = {}
    for sigma, c in elt.terms.items():
        for tau in perms.upper_set(sigma):
            out[tau] = out.get(tau, ZERO) + c
    return Element("ssym", "M", out)


register_converter("ssym", "M", _M_to_F, _F_to_M)


def _Ms_to_Fs(elt: Element) -> Element:
    out = {}
    for sigma, c in elt.terms.items():
        for tau in perms.lower_set(sigma):
            out[tau] = out.get(tau, ZERO) + c
    return Element("ssymdual", "Fs", out)


def _Fs_to_Ms(elt: Element) -> Element:
    out = {}
    for sigma, c in elt.terms.items():
        for tau in perms.lower_set(sigma):
            mu = perms.mobius(tau, sigma)
            if mu:
                out[tau] = out.get(tau, ZERO) + c * mu
    return Element("ssymdual", "Ms", out)


register_converter("ssymdual", "Ms", _Ms_to_Fs, _Fs_to_Ms)


def m_coproduct_formula(sigma) -> Tensor:
    """Closed-form coproduct on the M basis: split at global descents only."""
    n = len(sigma)
    cuts = (0,) + perms.global_descents(sigma) + (n,)
    terms = {}
    for i in sorted(set(cuts)):
        pair = (perms.std(sigma[:i]), perms.std(sigma[i:]))
        terms[pair] = terms.get(pair, ZERO) + ONE
    return Tensor("ssym", "M", 2, terms)


# -- descent map, embeddings, self-duality ------------------------------------

def D_on_F(sigma) -> Element:
    return qsym.L(perms.descent_composition(sigma))


D = LinearMap("D", ("ssym", "F"), ("qsym", "M"), D_on_F)


def D_on_M_formula(sigma) -> Element:
    """D(M_sigma) = M of the block-size composition on DI, else 0."""
    if perms.is_DI(sigma):
        return qsym.M(perms.block_sizes(sigma))
    return Element("qsym", "M", {})


def iota_nsym_on_H(alpha) -> Element:
    from .hopfcore import product_many
    return product_many([F(perms.identity(a)) for a in alpha], algebra="ssym")


iota_nsym = LinearMap("iota_NSym", ("nsym", "H"), ("ssym", "F"), iota_nsym_on_H)


def D_star() -> LinearMap:
    """Adjoint of the descent map: NSym -> dual of ssym."""
    return adjoint(D)


def I_map(elt: Element) -> Element:
    """Self-duality F_sigma -> F*_{sigma^{-1}}."""
    from .hopfcore import convert
    elt = convert(elt, "F")
    return Element("ssymdual", "Fs",
                   {perms.inverse(k): c for k, c in elt.terms.items()})


def I_inv(elt: Element) -> Element:
    from .hopfcore import convert
    elt = convert(elt, "Fs")
    return Element("ssym", "F",
                   {perms.inverse(k): c for k, c in elt.terms.items()})


# -- characters ----------------------------------------------------------------

def zeta_on_F(sigma) -> Fraction:
    return ONE if sigma == perms.identity(len(sigma)) else ZERO


def odd_char_on_F(sigma) -> Fraction:
    """nu_QSym(L_{Des sigma}): 2 exactly on peak-free permutations."""
    if not sigma:
        return ONE
    return Fraction(2) if not perms.peak_set(sigma) else ZERO


def odd_char_element(n: int) -> Element:
    """zeta restricted to degree n, as an element of the dual."""
    return Element("ssymdual", "Fs",
                   {s: Fraction(2) for s in perms.all_perms(n)
                    if not perms.peak_set(s)})


# -- the odd Hopf subalgebra ----------------------------------------------------

def eta_perm(sigma) -> Element:
    """eta_sigma = sum over tau <= sigma of 2^{|GD(tau)|+1} M_tau (sigma odd)."""
    sigma = perms.check_perm(sigma)
    assert perms.is_odd_perm(sigma), f"{sigma} is not an odd permutation"
    return Element("ssym", "M",
                   {tau: Fraction(2) ** (len(perms.global_descents(tau)) + 1)
                    for tau in perms.lower_set(sigma)})


def odd_basis(n: int):
    """The stated basis of S_-(ssym)_n: non-DI M's plus eta's at odd sigma."""
    out = [Mp(s) for s in perms.all_perms(n) if not perms.is_DI(s)]
    out.extend(eta_perm(s) for s in perms.all_perms(n) if perms.is_odd_perm(s))
    return out


# -- Theta map constructors -------------------------------------------------------

class ConstructorError(ValueError):
    pass


class ThetaConstructor:
    """A function f on pairs of equal-degree permutations satisfying
    (1) f(1_n, sigma) = 2 iff sigma is peak-free (else 0), and
    (2) f(sigma, tau) = f(tau^{-1}, sigma^{-1}).
    Degree 0 never reaches f (the Theta map fixes the unit)."""

    def __init__(self, fn, name="custom"):
        self.fn = fn
        self.name = name

    def __call__(self, sigma, tau) -> Fraction:
        assert len(sigma) == len(tau), "constructor needs equal degrees"
        return rat(self.fn(sigma, tau))

    def validate(self, n_max: int):
        for n in range(1, n_max + 1):
            idn = perms.identity(n)
            for s in perms.all_perms(n):
                want = Fraction(2) if not perms.peak_set(s) else ZERO
                if self(idn, s) != want:
                    raise ConstructorError(
                        f"condition 1 fails at f(1_{n}, {s}): "
                        f"got {self(idn, s)}, want {want}")
            for s in perms.all_perms(n):
                for t in perms.all_perms(n):
                    if self(s, t) != self(perms.inverse(t), perms.inverse(s)):
                        raise ConstructorError(
                            f"condition 2 fails at ({s}, {t})")
        return self


def f_peak(sigma, tau) -> Fraction:
    if perms.peak_set(perms.inverse(sigma)) or perms.peak_set(tau):
        return ZERO
    return Fraction(2)


def default_constructor() -> ThetaConstructor:
    return ThetaConstructor(f_peak, name="default")


def register_constructor(fn, name="custom", validate_to=None) -> ThetaConstructor:
    c = ThetaConstructor(fn, name=name)
    c.validate(degree_cap() if validate_to is None else validate_to)
    return c


def constructor_from_table(entries, validate_to=None) -> ThetaConstructor:
    """Entries: iterable of {"sigma": [...], "tau": [...], "value": "r"};
    unlisted pairs fall back to the default f_peak."""
    table = {}
    for e in entries:
        key = (tuple(e["sigma"]), tuple(e["tau"]))
        table[key] = rat(e["value"])

    def fn(sigma, tau):
        return table.get((sigma, tau), f_peak(sigma, tau))

    return register_constructor(fn, name="table", validate_to=validate_to)


# -- the double-inductive construction -----------------------------------------

class ThetaStar:
    """Structure coefficients <Theta*(F*_sigma), F_tau> for one constructor.

    G(sigma, tau) holds <Theta*(F*_sigma), F_{tau^{-1}}>; rows against
    un-inverted columns come out of matrix()/entry().  All recursion is
    memoized; _stack trips on any cycle in the double induction.
    """

    def __init__(self, constructor: ThetaConstructor):
        self.f = constructor
        self._G = {}
        self._mrow = {}
        self._stack = set()

    # <Theta*(M*_gamma), F_rho> for all rho of the right degree
    def m_row(self, gamma):
        hit = self._mrow.get(gamma)
        if hit is None:
            hit = {rho: sum((self.G(delta, perms.inverse(rho))
                             for delta in perms.lower_set(gamma)), ZERO)
                   for rho in perms.all_perms(len(gamma))}
            self._mrow[gamma] = hit
        return hit

    def _product_term(self, sigma, tau) -> Fraction:
        # <Theta*(M*_{s1}) ... Theta*(M*_{sk}), F_{tau^{-1}}> via the single
        # multidegree component of the iterated cut coproduct
        rho = perms.inverse(tau)
        total = ONE
        pos = 0
        for block in perms.blocks(sigma):
            piece = perms.std(rho[pos:pos + len(block)])
            total *= self.m_row(block)[piece]
            if total == 0:
                return ZERO
            pos += len(block)
        return total

    def G(self, sigma, tau) -> Fraction:
        key = (sigma, tau)
        hit = self._G.get(key)
        if hit is not None:
            return hit
        if key in self._stack:
            raise RuntimeError(f"double-induction cycle at {key}")
        self._stack.add(key)
        try:
            n = len(sigma)
            assert len(tau) == n
            idn = perms.identity(n)
            if n == 0:
                val = ONE
            elif sigma == idn or tau == idn:
                val = self.f(sigma, perms.inverse(tau))
            elif perms.global_descents(sigma):
                val = self._product_term(sigma, tau) - \
                    sum((self.G(gamma, tau)
                         for gamma in perms.lower_set(sigma) if gamma != sigma), ZERO)
            elif perms.global_descents(tau):
                val = self.G(tau, sigma)
            else:
                val = self.f(sigma, perms.inverse(tau))
        finally:
            self._stack.discard(key)
        self._G[key] = val
        return val

    def entry(self, sigma, tau) -> Fraction:
        """<Theta*(F*_sigma), F_tau>."""
        return self.G(sigma, perms.inverse(tau))

    def matrix(self, n: int):
        """Dict-of-dicts T[sigma][tau] = <Theta*(F*_sigma), F_tau>."""
        ps = perms.all_perms(n)
        return {s: {t: self.entry(s, t) for t in ps} for s in ps}

    # -- derived maps ------------------------------------------------------------
    def theta_star_on_Fs(self, sigma) -> Element:
        return Element("ssymdual", "Fs", dict(
            (rho, self.entry(sigma, rho)) for rho in perms.all_perms(len(sigma))))

    def theta_star_map(self) -> LinearMap:
        return LinearMap(f"Theta*[{self.f.name}]", ("ssymdual", "Fs"),
                         ("ssymdual", "Fs"), self.theta_star_on_Fs)

    def theta_on_F(self, tau) -> Element:
        # the dual map: Theta(F_tau) = sum_sigma T[sigma][tau] F_sigma
        return Element("ssym", "F", dict(
            (sigma, self.entry(sigma, tau)) for sigma in perms.all_perms(len(tau))))

    def theta_map(self) -> LinearMap:
        return LinearMap(f"Theta[{self.f.name}]", ("ssym", "F"),
                         ("ssym", "F"), self.theta_on_F)


def theta_ssym(elt: Element, ts: ThetaStar) -> Element:
    return ts.theta_map()(elt)


# -- the four-condition verifier --------------------------------------------------

def verify_theta_conditions(ts: ThetaStar, n_max: int) -> dict:
    """Independently check the four equivalent Theta-map conditions, the
    self-adjointness symmetry, and the coalgebra-morphism property."""
    from . import nsym
    theta = ts.theta_map()
    theta_star = ts.theta_star_map()
    report = {"n_max": n_max, "checks": {}, "passed": True}

    def record(name, ok, witness=None):
        report["checks"][name] = {"passed": ok, "witness": witness}
        if not ok:
            report["passed"] = False

    # (1) D Theta = Theta_QSym D on the F basis
    ok, wit = True, None
    for n in range(n_max + 1):
        for s in perms.all_perms(n):
            if D(theta(F(s))) != qsym.theta_qsym(D(F(s))):
                ok, wit = False, s
                break
        if not ok:
            break
    record("square_D", ok, wit)

    # (2) the odd character factors through Theta
    ok, wit = True, None
    for n in range(n_max + 1):
        for s in perms.all_perms(n):
            img = theta(F(s))
            val = sum((c * zeta_on_F(k) for k, c in img.terms.items()), ZERO)
            if val != odd_char_on_F(s):
                ok, wit = False, s
                break
        if not ok:
            break
    record("character", ok, wit)

    # (3) Theta*(M*_{1_n}) is the doubled peak-free sum
    ok, wit = True, None
    for n in range(1, n_max + 1):
        row = ts.m_row(perms.identity(n))
        want = odd_char_element(n)
        got = Element("ssymdual", "Fs", row)
        if got != want:
            ok, wit = False, n
            break
    record("odd_char_row", ok, wit)

    # (4) D* Theta_NSym = Theta* D* on the H basis
    ok, wit = True, None
    dstar = D_star()
    for n in range(1, n_max + 1):
        for alpha in comps.compositions(n):
            lhs = dstar(nsym.theta_nsym(nsym.H(alpha)))
            rhs = theta_star(dstar(nsym.H(alpha)))
            if lhs != rhs:
                ok, wit = False, alpha
                break
        if not ok:
            break
    record("square_Dstar", ok, wit)

    # self-adjointness: G(sigma, tau) symmetric
    ok, wit = True, None
    for n in range(n_max + 1):
        for s in perms.all_perms(n):
            for t in perms.all_perms(n):
                if ts.G(s, t) != ts.G(t, s):
                    ok, wit = False, (s, t)
                    break
            if not ok:
                break
        if not ok:
            break
    record("self_adjoint", ok, wit)

    # coalgebra morphism
    ok, wit = True, None
    for n in range(n_max + 1):
        for s in perms.all_perms(n):
            lhs = coproduct(theta(F(s)))
            rhs = Tensor("ssym", "F", 2, {})
            for (k1, k2), c in coproduct(F(s)).terms.items():
                t1 = theta(F(k1))
                t2 = theta(F(k2))
                for a, ca in t1.terms.items():
                    for b, cb in t2.terms.items():
                        rhs = rhs + Tensor("ssym", "F", 2, {(a, b): c * ca * cb})
            if lhs != rhs:
                ok, wit = False, s
                break
        if not ok:
            break
    record("coalgebra_morphism", ok, wit)
    return report
