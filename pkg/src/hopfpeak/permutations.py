"""Permutation combinatorics for the word-indexed Hopf algebras.

Permutations are tuples in one-line notation on 1..n; () is the empty
permutation.  Positions in Inv/Des/peak sets are 1-based to match the
usual combinatorial conventions.
"""

from functools import lru_cache
from itertools import combinations, permutations as _permutations

from . import compositions as comps


def check_perm(sigma):
    sigma = tuple(int(x) for x in sigma)
    assert sorted(sigma) == list(range(1, len(sigma) + 1)), \
        f"not a permutation word: {sigma}"
    return sigma


def identity(n: int):
    return tuple(range(1, n + 1))


@lru_cache(maxsize=None)
def all_perms(n: int):
    """S_n in lexicographic order."""
    return tuple(_permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def inv_set(sigma):
    """{(a,b): a<b, sigma(a)>sigma(b)} with 1-based positions."""
    n = len(sigma)
    return frozenset((a + 1, b + 1) for a in range(n) for b in range(a + 1, n)
                     if sigma[a] > sigma[b])


def des_set(sigma):
    return frozenset(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def peak_set(sigma):
    return frozenset(i + 1 for i in range(1, len(sigma) - 1)
                     if sigma[i - 1] < sigma[i] > sigma[i + 1])


def descent_composition(sigma):
    """The composition of |sigma| whose subset is Des(sigma)."""
    return comps.subset_to_comp(sorted(des_set(sigma)), len(sigma))


def inverse(sigma):
    out = [0] * len(sigma)
    for pos, val in enumerate(sigma):
        out[val - 1] = pos + 1
    return tuple(out)


def std(word):
    """Standardization: the unique permutation with the same inversions."""
    word = tuple(word)
    assert len(set(word)) == len(word), f"repeated letters in {word}"
    order = sorted(word)
    return tuple(order.index(x) + 1 for x in word)


def backslash(sigma, tau):
    """sigma\\tau: shift sigma up by |tau|, then append tau."""
    m = len(tau)
    return tuple(s + m for s in sigma) + tuple(tau)


def backslash_many(blocks):
    out = ()
    for b in blocks:
        out = backslash(out, b)
    return out


@lru_cache(maxsize=None)
def global_descents(sigma):
    """Positions i where every letter before i exceeds every letter after."""
    n = len(sigma)
    out = []
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    m = n + 1
    for i in range(n):
        m = min(m, sigma[i])
        lo[i + 1] = m
    m = 0
    for i in range(n - 1, -1, -1):
        m = max(m, sigma[i])
        hi[i] = m
    for i in range(1, n):
        if lo[i] > hi[i]:
            out.append(i)
    return tuple(out)


@lru_cache(maxsize=None)
def blocks(sigma):
    """The unique factorization into global-descent-free blocks."""
    if not sigma:
        return ()
    cuts = (0,) + global_descents(sigma) + (len(sigma),)
    out = []
    for a, b in zip(cuts, cuts[1:]):
        seg = sigma[a:b]
        shift = min(seg) - 1 if seg else 0
        out.append(tuple(x - shift for x in seg))
    return tuple(out)


def block_sizes(sigma):
    return tuple(len(b) for b in blocks(sigma))


def is_DI(sigma) -> bool:
    """True when every global-descent block is an identity permutation."""
    return all(b == identity(len(b)) for b in blocks(sigma))


def is_odd_perm(sigma) -> bool:
    return is_DI(sigma) and all(len(b) % 2 == 1 for b in blocks(sigma))


def di_chain(alpha):
    """1_{a_1}\\...\\1_{a_k} for a composition alpha."""
    return backslash_many([identity(a) for a in alpha])


def weak_leq(sigma, tau) -> bool:
    assert len(sigma) == len(tau), "degrees differ"
    return inv_set(sigma) <= inv_set(tau)


@lru_cache(maxsize=None)
def lower_set(sigma):
    """All tau <= sigma in weak order, lexicographically sorted."""
    inv = inv_set(sigma)
    return tuple(t for t in all_perms(len(sigma)) if inv_set(t) <= inv)


@lru_cache(maxsize=None)
def upper_set(sigma):
    inv = inv_set(sigma)
    return tuple(t for t in all_perms(len(sigma)) if inv <= inv_set(t))


@lru_cache(maxsize=None)
def mobius(sigma, tau):
    """Mobius function of the weak order; 0 when sigma is not <= tau."""
    if len(sigma) != len(tau):
        return 0
    if not weak_leq(sigma, tau):
        return 0
    if sigma == tau:
        return 1
    return -sum(mobius(sigma, rho) for rho in lower_set(tau)
                if rho != tau and weak_leq(sigma, rho))


def shifted_shuffle(sigma, tau):
    """Interleavings of sigma with tau shifted up by |sigma|."""
    n, m = len(sigma), len(tau)
    shifted = tuple(t + n for t in tau)
    out = []
    for pos in combinations(range(n + m), n):
        posset = set(pos)
        word = [0] * (n + m)
        i = j = 0
        for k in range(n + m):
            if k in posset:
                word[k] = sigma[i]
                i += 1
            else:
                word[k] = shifted[j]
                j += 1
        out.append(tuple(word))
    return out


def peak_free_lower_count(sigma) -> int:
    """|{tau <= sigma : peak(tau^{-1}) = empty}|."""
    return sum(1 for tau in lower_set(sigma) if not peak_set(inverse(tau)))


def peak_free_count_lemma(sigma):
    """Check the product-counting identity at every global descent of sigma.

    For each i in GD(sigma) with sigma = mu\\nu split at i, compares
    |{tau<=sigma peak-free-inverse}| with 2 * |{..mu..}| * |{..nu..}|.
    Raises if sigma has no global descents.
    """
    gds = global_descents(sigma)
    if not gds:
        raise ValueError(f"{sigma} has no global descents")
    lhs = peak_free_lower_count(sigma)
    records = []
    for i in gds:
        mu = std(sigma[:i])
        nu = std(sigma[i:])
        rhs = 2 * peak_free_lower_count(mu) * peak_free_lower_count(nu)
        records.append({"split": i, "mu": mu, "nu": nu,
                        "lhs": lhs, "rhs": rhs, "equal": lhs == rhs})
    return {"sigma": sigma, "passed": all(r["equal"] for r in records),
            "records": records}
