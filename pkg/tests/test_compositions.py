from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hopfpeak import compositions as comps


def test_subset_correspondence():
    assert comps.comp_to_subset((1, 2, 1)) == (1, 3)
    assert comps.comp_to_subset((4,)) == ()
    assert comps.subset_to_comp({1, 3}, 4) == (1, 2, 1)


def test_subset_bijection_all_n():
    for n in range(0, 9):
        seen = set()
        for alpha in comps.compositions(n):
            s = comps.comp_to_subset(alpha)
            assert comps.subset_to_comp(s, n) == alpha
            seen.add(s)
        assert len(seen) == len(comps.compositions(n)) == (2 ** (n - 1) if n else 1)


def test_refinement_order():
    assert comps.leq((3,), (1, 2))
    assert not comps.leq((1, 2), (2, 1))
    assert comps.leq((2, 1), (2, 1))
    with pytest.raises(AssertionError):
        comps.leq((2,), (3,))


def test_concat_ops():
    assert comps.concat((1, 2), (3,)) == (1, 2, 3)
    assert comps.near_concat((1, 2), (3,)) == (1, 5)
    assert comps.concat((), (2, 1)) == (2, 1)
    with pytest.raises(AssertionError):
        comps.near_concat((), (1,))
    assert comps.size(comps.concat((1, 2), (3,))) == comps.size(comps.near_concat((1, 2), (3,))) == 6


def test_shuffles():
    assert comps.shuffles((1,), (1,)) == {(1, 1): 2}
    assert comps.shuffles((1,), (2,)) == {(1, 2): 1, (2, 1): 1}
    from math import comb
    for a, b in [((1, 2), (3,)), ((1,), (1, 1)), ((2, 1), (1, 2))]:
        total = sum(comps.shuffles(a, b).values())
        assert total == comb(len(a) + len(b), len(a))


def test_quasi_shuffle_examples():
    assert comps.quasi_shuffle((1,), (1,)) == {(1, 1): 2, (2,): 1}
    assert comps.quasi_shuffle((1,), (2,)) == {(1, 2): 1, (2, 1): 1, (3,): 1}
    assert comps.quasi_shuffle((), (2, 1)) == {(2, 1): 1}


def _poly_product_oracle(alpha, beta, nvars):
    """Truncated monomial expansion of M_alpha * M_beta."""
    def expand(comp):
        out = {}
        for pos in combinations(range(nvars), len(comp)):
            key = [0] * nvars
            for p, part in zip(pos, comp):
                key[p] = part
            out[tuple(key)] = out.get(tuple(key), 0) + 1
        return out

    prod = {}
    for k1, c1 in expand(alpha).items():
        for k2, c2 in expand(beta).items():
            key = tuple(x + y for x, y in zip(k1, k2))
            prod[key] = prod.get(key, 0) + c1 * c2
    out = {}
    for mono, c in prod.items():
        comp = tuple(x for x in mono if x)
        if mono == comp + (0,) * (nvars - len(comp)):
            out[comp] = c
    return out


def test_quasi_shuffle_matches_power_series_oracle():
    for n1 in range(1, 4):
        for n2 in range(1, 5 - n1):
            for a in comps.compositions(n1):
                for b in comps.compositions(n2):
                    got = comps.quasi_shuffle(a, b)
                    want = _poly_product_oracle(a, b, n1 + n2)
                    assert got == want, (a, b)


def test_quasi_shuffle_top_length_is_shuffle():
    for n1 in range(1, 3):
        for n2 in range(1, 6 - n1):
            for a in comps.compositions(n1):
                for b in comps.compositions(n2):
                    top = {g: m for g, m in comps.quasi_shuffle(a, b).items()
                           if len(g) == len(a) + len(b)}
                    assert top == comps.shuffles(a, b)


def test_odd_collapse():
    assert comps.odd_collapse((3, 4, 2, 1, 3, 2, 1)) == (3, 7, 3, 3)
    assert comps.odd_collapse((2, 1)) == (3,)
    assert comps.odd_collapse((1, 1)) == (1, 1)
    with pytest.raises(ValueError):
        comps.odd_collapse((1, 2))


def test_odd_collapse_output_is_odd_same_size():
    for n in range(1, 8):
        for beta in comps.compositions(n):
            if beta[-1] % 2 == 0:
                continue
            out = comps.odd_collapse(beta)
            assert comps.is_odd(out)
            assert comps.size(out) == n


def test_c_coeff():
    assert comps.c_coeff((1, 1, 1), (3,)) == Fraction(1, 6)
    assert comps.c_coeff((2, 1), (3,)) == Fraction(1, 2)
    assert comps.c_coeff((2, 1), (2, 1)) == 1
    with pytest.raises(AssertionError):
        comps.c_coeff((2, 1), (1, 2))


def test_shuffle_basis_product_identity():
    """S_alpha S_beta = sum over shuffles: the consistency oracle for c_coeff."""
    from hopfpeak import qsym
    from hopfpeak.hopfcore import convert, product
    for n1 in range(1, 3):
        for n2 in range(1, 6 - n1):
            for a in comps.compositions(n1):
                for b in comps.compositions(n2):
                    got = product(qsym.S(a), qsym.S(b))
                    want = qsym.QSYM.zero()
                    for g, mult in comps.shuffles(a, b).items():
                        want = want + mult * convert(qsym.S(g), "M")
                    assert got == want, (a, b)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=3), st.lists(st.integers(1, 3), max_size=3))
def test_quasi_shuffle_sizes_and_symmetry(a, b):
    a, b = tuple(a), tuple(b)
    qs = comps.quasi_shuffle(a, b)
    n = comps.size(a) + comps.size(b)
    assert all(comps.size(g) == n for g in qs)
    assert qs == comps.quasi_shuffle(b, a)  # commutative product
