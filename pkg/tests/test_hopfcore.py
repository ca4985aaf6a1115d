import json
from fractions import Fraction

import pytest

from hopfpeak import compositions as comps
from hopfpeak import nsym, qsym, ssym, sym
from hopfpeak.exactlinalg import ONE, ZERO
from hopfpeak.hopfcore import (AlgebraDescriptor, Element, adjoint, antipode,
                               check_hopf_axioms, coproduct, counit,
                               element_from_json, element_to_json, grade_sign,
                               identity_map, iterated_coproduct, pairing,
                               phi_candidate, product)


def test_product_examples():
    assert product(qsym.M([1]), qsym.M([1])) == \
        Element("qsym", "M", {(1, 1): 2, (2,): 1})
    assert product(ssym.F([1]), ssym.F([1])) == \
        Element("ssym", "F", {(1, 2): 1, (2, 1): 1})
    a = qsym.M([2, 1], coeff="5/7")
    assert product(qsym.QSYM.unit(), a) == a


def test_product_algebra_mismatch():
    with pytest.raises(AssertionError):
        product(qsym.M([1]), nsym.H([1]))


def test_coproduct_examples():
    t = coproduct(qsym.M([1, 2]))
    assert t[((), (1, 2))] == 1 and t[((1,), (2,))] == 1 and t[((1, 2), ())] == 1
    assert len(t.terms) == 3
    f = coproduct(ssym.F([2, 1]))
    assert f[((), (2, 1))] == 1 and f[((1,), (1,))] == 1 and f[((2, 1), ())] == 1
    assert coproduct(qsym.QSYM.unit())[((), ())] == 1


def test_iterated_coproduct():
    cube = iterated_coproduct(qsym.M([1, 1]), 3)
    assert cube[((1,), (1,), ())] == 1
    assert iterated_coproduct(qsym.M([2, 1]), 1)[((2, 1),)] == 1
    for keys, _ in cube.terms.items():
        assert sum(sum(k) for k in keys) == 2


def test_counit():
    assert counit(qsym.QSYM.unit()) == 1
    assert counit(qsym.M([1])) == 0


def test_antipode_examples():
    assert antipode(qsym.QSYM.unit()) == qsym.QSYM.unit()
    assert antipode(qsym.M([1])) == qsym.M([1], coeff=-1)
    assert antipode(qsym.M([2])) == qsym.M([2], coeff=-1)
    # the value that feeds the Phi-vs-Theta counterexample
    assert antipode(qsym.M([3, 2])) == Element("qsym", "M", {(2, 3): 1, (5,): 1})


def test_antipode_convolution_identity():
    for n in range(5):
        for k in qsym.QSYM.basis_keys(n):
            e = qsym.M(k) if k else qsym.QSYM.unit()
            acc = qsym.QSYM.zero()
            for (k1, k2), c in coproduct(e).terms.items():
                acc = acc + c * product(antipode(Element("qsym", "M", {k1: 1})),
                                        Element("qsym", "M", {k2: 1}))
            assert acc == counit(e) * qsym.QSYM.unit()


def test_grade_sign():
    assert grade_sign(qsym.M([3, 2])) == qsym.M([3, 2], coeff=-1)
    assert grade_sign(qsym.M([1, 1])) == qsym.M([1, 1])
    e = Element("qsym", "M", {(1,): 2, (1, 1): 3})
    assert grade_sign(grade_sign(e)) == e


def test_phi_candidate():
    assert phi_candidate(qsym.M([3, 2])) == qsym.M([3, 2], coeff=2)
    assert phi_candidate(qsym.M([3])) == qsym.M([3], coeff=2)  # p_3 inside QSym
    assert phi_candidate(qsym.QSYM.unit()) == qsym.QSYM.unit()


def test_phi_hopf_morphism_on_commutative_cocommutative():
    # multiplicativity and comultiplicativity on Sym and DSym, degree <= 4
    from hopfpeak import dsym
    from hopfpeak.hopfcore import Tensor
    for d in (sym.SYM, dsym.DSYM):
        for n1 in range(1, 3):
            for n2 in range(1, 5 - n1):
                for k1 in d.basis_keys(n1):
                    for k2 in d.basis_keys(n2):
                        a, b = d.monomial(k1), d.monomial(k2)
                        assert phi_candidate(product(a, b)) == \
                            product(phi_candidate(a), phi_candidate(b))
        for n in range(4 + 1):
            for k in d.basis_keys(n):
                e = d.monomial(k)
                lhs = coproduct(phi_candidate(e))
                rhs = Tensor(d.name, d.computational_basis, 2, {})
                for (k1, k2), c in coproduct(e).terms.items():
                    p1 = phi_candidate(d.monomial(k1))
                    p2 = phi_candidate(d.monomial(k2))
                    for a, ca in p1.terms.items():
                        for b, cb in p2.terms.items():
                            rhs = rhs + Tensor(d.name, d.computational_basis, 2,
                                               {(a, b): c * ca * cb})
                assert lhs == rhs


class CorruptedQSym(AlgebraDescriptor):
    """Deliberately broken product for the fault-injection check."""

    name = "qsym_corrupt"
    computational_basis = "M"

    def degree(self, key):
        return sum(key)

    def basis_keys(self, n):
        return comps.compositions(n)

    def unit_key(self):
        return ()

    def product_on_basis(self, k1, k2):
        out = {g: Fraction(m) for g, m in comps.quasi_shuffle(k1, k2).items()}
        if (k1, k2) == ((1,), (1,)):
            out[(2,)] = Fraction(7)  # wrong multiplicity
        return out

    def coproduct_on_basis(self, key):
        return {(key[:i], key[i:]): ONE for i in range(len(key) + 1)}


def test_check_hopf_axioms_pass_and_fault_injection():
    assert check_hopf_axioms(qsym.QSYM, 4)["passed"]
    rep = check_hopf_axioms(CorruptedQSym(), 3)
    assert not rep["passed"]
    bad = [name for name, c in rep["checks"].items() if not c["passed"]]
    assert bad
    witnesses = [rep["checks"][name]["witness"] for name in bad]
    assert any(w is not None for w in witnesses)


def test_pairing_examples():
    assert pairing(nsym.H([2, 1]), qsym.M([2, 1])) == 1
    assert pairing(nsym.H([3]), qsym.M([2, 1])) == 0
    assert pairing(ssym.Fs([2, 1]), ssym.F([2, 1])) == 1
    assert pairing(ssym.Fs([2, 1]), ssym.F([1, 2])) == 0
    with pytest.raises(AssertionError):
        pairing(qsym.M([1]), qsym.M([1]))


def test_pairing_dual_compatibility():
    # <Delta(H_gamma), M_a (x) M_b> = <H_gamma, M_a M_b>, degree <= 4
    for n in range(1, 5):
        for gamma in comps.compositions(n):
            cop = coproduct(nsym.H(gamma))
            for na in range(n + 1):
                for a in comps.compositions(na):
                    for b in comps.compositions(n - na):
                        lhs = sum((c * (ONE if (k1, k2) == (a, b) else ZERO)
                                   for (k1, k2), c in cop.terms.items()), ZERO)
                        rhs = pairing(nsym.H(gamma), product(qsym.M(a), qsym.M(b)))
                        assert lhs == rhs


def test_adjoint_examples():
    dstar = adjoint(ssym.D)
    for n in range(1, 4):
        img = dstar(nsym.H([n]))
        assert img == ssym.Fs(list(range(1, n + 1)))
    ident = identity_map("qsym")
    adj = adjoint(ident)
    assert adj(nsym.H([2, 1])) == nsym.H([2, 1])
    # adjoint of adjoint returns the original matrix per degree
    dd = adjoint(adjoint(ssym.D))
    for n in range(3):
        m1, _, _ = dd.matrix(n)
        m2, _, _ = ssym.D.matrix(n)
        assert m1 == m2


def test_degree_cap_env(monkeypatch):
    from hopfpeak.hopfcore import degree_cap
    monkeypatch.delenv("HOPFPEAK_DEGREE_CAP", raising=False)
    assert degree_cap() == 5
    monkeypatch.setenv("HOPFPEAK_DEGREE_CAP", "7")
    assert degree_cap() == 7
    monkeypatch.setenv("HOPFPEAK_DEGREE_CAP", "9")
    with pytest.raises(AssertionError):
        degree_cap()
    with pytest.raises(AssertionError):
        qsym.QSYM.basis_keys(9)


def test_element_json_round_trip():
    e = Element("qsym", "M", {(3, 2): Fraction(1), (1, 1, 1, 1, 1): Fraction(-2, 3)})
    data = element_to_json(e)
    assert data["terms"][0]["coeff"] == "-2/3"
    assert element_from_json(json.dumps(data)) == e
    f = ssym.F([2, 3, 1], coeff="1/2")
    assert element_from_json(element_to_json(f)) == f
    from hopfpeak import dsym
    g = dsym.m([(1, 0), (0, 1)])
    data = element_to_json(g)
    assert data["terms"][0]["index"] == {"top": [1, 0], "bot": [0, 1]}
    assert element_from_json(data) == g
