from fractions import Fraction

import pytest

from hopfpeak import characters as ch
from hopfpeak import compositions as comps
from hopfpeak import exactlinalg as la
from hopfpeak import qsym
from hopfpeak.hopfcore import Element, convert, coproduct, product


def test_product_M_examples():
    assert product(qsym.M([1]), qsym.M([2])) == \
        Element("qsym", "M", {(1, 2): 1, (2, 1): 1, (3,): 1})
    assert product(qsym.M([1]), qsym.M([1])) == \
        Element("qsym", "M", {(1, 1): 2, (2,): 1})
    e = qsym.M([4, 1])
    assert product(qsym.M([]), e) == e


def test_coproduct_M_examples():
    t = coproduct(qsym.M([2, 1]))
    assert dict(t.terms) == {((), (2, 1)): 1, ((2,), (1,)): 1, ((2, 1), ()): 1}
    t = coproduct(qsym.M([4]))
    assert dict(t.terms) == {((), (4,)): 1, ((4,), ()): 1}


def test_L_conversions():
    assert convert(qsym.L([2, 1]), "M") == Element("qsym", "M", {(2, 1): 1, (1, 1, 1): 1})
    for n in range(6):
        for a in comps.compositions(n):
            assert convert(convert(qsym.L(a), "M"), "L") == qsym.L(a)


def test_S_conversions():
    assert convert(qsym.S([1, 1]), "M") == \
        Element("qsym", "M", {(1, 1): 1, (2,): Fraction(1, 2)})
    assert convert(qsym.S([2, 1]), "M") == \
        Element("qsym", "M", {(2, 1): 1, (3,): Fraction(1, 2)})
    for n in range(6):
        for a in comps.compositions(n):
            assert convert(convert(qsym.S(a), "M"), "S") == qsym.S(a)


def test_zeta():
    assert qsym.zeta_on_M((5,)) == 1
    assert qsym.zeta_on_M((1, 2)) == 0
    assert qsym.zeta_on_M(()) == 1
    ch.zeta_qsym.validate_multiplicative(4)


def test_theta_examples():
    assert qsym.theta_qsym(qsym.M([3, 2])).is_zero()
    assert qsym.theta_qsym(qsym.M([2, 1])) == qsym.M([3], coeff=-2)
    assert qsym.theta_qsym(qsym.M([1, 1])) == \
        Element("qsym", "M", {(2,): 2, (1, 1): 4})


def test_eta_examples():
    assert qsym.eta((1,)) == qsym.M([1], coeff=2)
    assert qsym.eta((1, 1)) == Element("qsym", "M", {(2,): 2, (1, 1): 4})
    assert qsym.eta((1, 1, 1)) == Element(
        "qsym", "M", {(3,): 2, (1, 2): 4, (2, 1): 4, (1, 1, 1): 8})
    with pytest.raises(AssertionError):
        qsym.eta((2,))


def test_eta_basis_round_trip_and_rejection():
    elt = Element("qsym", "eta", {(3,): 2, (1, 1, 1): "1/2"})
    assert convert(convert(elt, "M"), "eta") == elt
    with pytest.raises(ValueError):
        convert(qsym.M([2]), "eta")


def test_odd_character_values():
    assert qsym.odd_char_on_M((2, 1)) == -2
    assert qsym.odd_char_on_L((1, 1, 3)) == 2
    assert qsym.odd_char_on_L((2, 1)) == 0
    assert qsym.odd_char_on_L((4,)) == 2
    nu = ch.odd_character(ch.zeta_qsym)
    for n in range(6):
        for b in comps.compositions(n):
            assert nu.of_key(b) == qsym.odd_char_on_M(b)
            assert nu(convert(qsym.L(b), "M")) == qsym.odd_char_on_L(b)


def test_theta_image_in_pi():
    for n in range(1, 7):
        rows = qsym.pi_rows(n)
        keys = comps.compositions(n)
        idx = {k: i for i, k in enumerate(keys)}
        for b in keys:
            img = qsym.theta_qsym(qsym.M(b))
            vec = [la.ZERO] * len(keys)
            for k, c in img.terms.items():
                vec[idx[k]] = c
            assert la.in_row_space(rows, vec), b


def test_zeta_theta_is_odd_character():
    for n in range(7):
        for b in comps.compositions(n):
            assert ch.zeta_qsym(qsym.theta_qsym(qsym.M(b))) == qsym.odd_char_on_M(b)


def test_theta_is_hopf_morphism():
    from hopfpeak.hopfcore import Tensor
    for n1 in range(1, 3):
        for n2 in range(1, 5 - n1):
            for a in comps.compositions(n1):
                for b in comps.compositions(n2):
                    assert qsym.theta_qsym(product(qsym.M(a), qsym.M(b))) == \
                        product(qsym.theta_qsym(qsym.M(a)), qsym.theta_qsym(qsym.M(b)))
    for n in range(5):
        for a in comps.compositions(n):
            lhs = coproduct(qsym.theta_qsym(qsym.M(a)))
            rhs = Tensor("qsym", "M", 2, {})
            for (k1, k2), c in coproduct(qsym.M(a)).terms.items():
                t1 = qsym.theta_qsym(qsym.M(k1))
                t2 = qsym.theta_qsym(qsym.M(k2))
                for x, cx in t1.terms.items():
                    for y, cy in t2.terms.items():
                        rhs = rhs + Tensor("qsym", "M", 2, {(x, y): c * cx * cy})
            assert lhs == rhs
