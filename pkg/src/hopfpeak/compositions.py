"""Composition combinatorics indexing the QSym / NSym bases.

A composition is a tuple of positive ints; () is the unique composition
of 0.  The partial-order convention throughout is the one from the
subset correspondence: alpha <= beta iff I(alpha) is contained in
I(beta), i.e. alpha is a *coarsening* of beta.
"""

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations


def size(alpha) -> int:
    return sum(alpha)


def check_composition(alpha):
    alpha = tuple(int(a) for a in alpha)
    assert all(a >= 1 for a in alpha), f"not a composition: {alpha}"
    return alpha


@lru_cache(maxsize=None)
def compositions(n: int):
    """All compositions of n, lexicographically sorted."""
    assert n >= 0
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(sorted(out))


def comp_to_subset(alpha):
    """I(alpha): the proper partial sums of alpha, as a sorted tuple."""
    sums = []
    t = 0
    for a in alpha[:-1]:
        t += a
        sums.append(t)
    return tuple(sums)


def subset_to_comp(s, n: int):
    """Inverse of comp_to_subset for subsets of [n-1]."""
    s = sorted(s)
    if n == 0:
        assert not s
        return ()
    assert all(1 <= x <= n - 1 for x in s), (s, n)
    prev = 0
    parts = []
    for x in s:
        parts.append(x - prev)
        prev = x
    parts.append(n - prev)
    return tuple(parts)


def leq(alpha, beta) -> bool:
    """alpha <= beta: alpha coarsens beta (I(alpha) ⊆ I(beta))."""
    assert size(alpha) == size(beta), "sizes differ"
    return set(comp_to_subset(alpha)) <= set(comp_to_subset(beta))


def coarsenings(beta):
    """All alpha <= beta, i.e. merge runs of adjacent parts."""
    n = size(beta)
    sub = comp_to_subset(beta)
    return [subset_to_comp(c, n) for k in range(len(sub) + 1)
            for c in combinations(sub, k)]


def refinements(alpha):
    """All beta >= alpha."""
    n = size(alpha)
    base = set(comp_to_subset(alpha))
    rest = [x for x in range(1, n) if x not in base]
    out = []
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            out.append(subset_to_comp(sorted(base.union(extra)), n))
    return out


def concat(alpha, beta):
    return tuple(alpha) + tuple(beta)


def near_concat(alpha, beta):
    """alpha ⊙ beta: concatenate, merging the touching parts."""
    assert alpha and beta, "near-concatenation needs non-empty operands"
    return tuple(alpha[:-1]) + (alpha[-1] + beta[0],) + tuple(beta[1:])


@lru_cache(maxsize=None)
def shuffles(alpha, beta):
    """Multiset of interleavings of the parts, as a dict comp -> mult."""
    if not alpha:
        return {tuple(beta): 1}
    if not beta:
        return {tuple(alpha): 1}
    out = {}
    for gamma, m in shuffles(alpha[1:], beta).items():
        key = (alpha[0],) + gamma
        out[key] = out.get(key, 0) + m
    for gamma, m in shuffles(alpha, beta[1:]).items():
        key = (beta[0],) + gamma
        out[key] = out.get(key, 0) + m
    return out


@lru_cache(maxsize=None)
def quasi_shuffle(alpha, beta):
    """Shuffles where a leading pair may also merge by addition.

    Realizes the power-series product of monomial quasisymmetric
    functions; dict comp -> multiplicity.
    """
    if not alpha:
        return {tuple(beta): 1}
    if not beta:
        return {tuple(alpha): 1}
    out = {}
    for head, tails in (
        ((alpha[0],), quasi_shuffle(alpha[1:], beta)),
        ((beta[0],), quasi_shuffle(alpha, beta[1:])),
        ((alpha[0] + beta[0],), quasi_shuffle(alpha[1:], beta[1:])),
    ):
        for gamma, m in tails.items():
            key = head + gamma
            out[key] = out.get(key, 0) + m
    return out


def is_odd(alpha) -> bool:
    return all(a % 2 == 1 for a in alpha)


def odd_collapse(beta):
    """Sum each maximal (even,...,even,odd) segment of beta.

    Only defined when the last part is odd; raises otherwise (callers
    handle the Theta = 0 branch before calling).
    """
    if beta and beta[-1] % 2 == 0:
        raise ValueError(f"last part of {beta} is even; odd() undefined")
    out = []
    acc = 0
    for b in beta:
        acc += b
        if b % 2 == 1:
            out.append(acc)
            acc = 0
    assert acc == 0
    return tuple(out)


def block_lengths(alpha, beta):
    """Lengths (i_1,...,i_k) of consecutive blocks of alpha summing to beta.

    Raises if beta is not a coarsening of alpha.
    """
    lengths = []
    pos = 0
    for b in beta:
        acc = 0
        cnt = 0
        while acc < b:
            assert pos < len(alpha), f"{beta} does not coarsen {alpha}"
            acc += alpha[pos]
            pos += 1
            cnt += 1
        assert acc == b, f"{beta} does not coarsen {alpha}"
        lengths.append(cnt)
    assert pos == len(alpha), f"{beta} does not coarsen {alpha}"
    return tuple(lengths)


def c_coeff(alpha, beta) -> Fraction:
    """1/(i_1! ... i_k!) for beta <= alpha with block lengths i_j."""
    lengths = block_lengths(alpha, beta)
    denom = 1
    for i in lengths:
        denom *= math.factorial(i)
    return Fraction(1, denom)
