"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Everything here is exact rational arithmetic; "tolerance" everywhere is
equality on the nose.  Run with `pytest -s tests/test_acceptance.py` to
see the per-criterion lines as they complete.
"""

import sys
import time

from hopfpeak import characters as ch
from hopfpeak import compositions as comps
from hopfpeak import dsym, nsym, qsym, ssym, sym, vhopf
from hopfpeak import exactlinalg as la
from hopfpeak import permutations as perms
from hopfpeak.exactlinalg import ZERO
from hopfpeak.hopfcore import (antipode, check_hopf_axioms, convert,
                               pairing, phi_candidate, product)


def report(num, desc, ok):
    line = f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} - {desc}"
    print(line, file=sys.stderr)
    assert ok, line


def theta_star_default():
    if not hasattr(theta_star_default, "_ts"):
        theta_star_default._ts = ssym.ThetaStar(ssym.default_constructor())
    return theta_star_default._ts


def test_criterion_01_theta_star_tables():
    t0 = time.time()
    ts = theta_star_default()
    m2 = ts.matrix(2)
    ok = all(m2[s][t] == 2 for s in m2 for t in m2[s])
    expected3 = {
        (1, 2, 3): {(1, 2, 3): 2, (1, 3, 2): 0, (2, 1, 3): 2,
                    (3, 1, 2): 2, (2, 3, 1): 0, (3, 2, 1): 2},
        (1, 3, 2): {(1, 2, 3): 0, (1, 3, 2): 0, (2, 1, 3): 0,
                    (3, 1, 2): 4, (2, 3, 1): 4, (3, 2, 1): 0},
        (2, 1, 3): {(1, 2, 3): 2, (1, 3, 2): 0, (2, 1, 3): 2,
                    (3, 1, 2): 2, (2, 3, 1): 0, (3, 2, 1): 2},
        (2, 3, 1): {(1, 2, 3): 2, (1, 3, 2): 4, (2, 1, 3): 2,
                    (3, 1, 2): -2, (2, 3, 1): 0, (3, 2, 1): 2},
        (3, 1, 2): {(1, 2, 3): 0, (1, 3, 2): 4, (2, 1, 3): 0,
                    (3, 1, 2): 0, (2, 3, 1): 4, (3, 2, 1): 0},
        (3, 2, 1): {(1, 2, 3): 2, (1, 3, 2): 0, (2, 1, 3): 2,
                    (3, 1, 2): 2, (2, 3, 1): 0, (3, 2, 1): 2},
    }
    m3 = ts.matrix(3)
    ok = ok and all(m3[s][t] == expected3[s][t] for s in expected3 for t in expected3[s])
    elapsed = time.time() - t0
    ok = ok and elapsed < 1.0
    report(1, f"structure-coefficient tables, degrees 2 and 3 ({elapsed:.2f}s)", ok)


def test_criterion_02_phi_counterexample():
    ok = qsym.theta_qsym(qsym.M([3, 2])).is_zero()
    ok = ok and phi_candidate(qsym.M([3, 2])) == 2 * qsym.M([3, 2])
    report(2, "Theta(M_32) = 0 while Phi(M_32) = 2 M_32", ok)


def test_criterion_03_hopf_axiom_suite():
    t0 = time.time()
    ok = True
    for d, cap in ((qsym.QSYM, 5), (nsym.NSYM, 5), (sym.SYM, 5),
                   (ssym.SSYM, 5), (vhopf.VHOPF, 5), (dsym.DSYM, 4)):
        rep = check_hopf_axioms(d, cap)
        ok = ok and rep["passed"]
    elapsed = time.time() - t0
    ok = ok and elapsed < 300
    report(3, f"Hopf axioms: five algebras to degree 5, dsym to 4 ({elapsed:.1f}s)", ok)


def test_criterion_04_commuting_square_and_cube():
    ts = theta_star_default()
    theta = ts.theta_map()
    ok = True
    # right face on the full F basis, n <= 4
    for n in range(5):
        for s in perms.all_perms(n):
            if ssym.D(theta(ssym.F(s))) != qsym.theta_qsym(ssym.D(ssym.F(s))):
                ok = False
    # the rest of the cube on generators, n <= 4
    th_sym = lambda e: convert(sym.theta_sym(convert(e, "p")), "m")
    for n in range(1, 5):
        h = nsym.H([n])
        # back-left face: pi Theta_NSym = Theta_Sym pi
        ok = ok and sym.pi_projection(nsym.theta_nsym(h)) == th_sym(sym.pi_projection(h))
        # top face: iota Theta_NSym = Theta iota
        ok = ok and ssym.iota_nsym(nsym.theta_nsym(h)) == theta(ssym.iota_nsym(h))
        # bottom face: iota Theta_Sym = Theta_QSym iota on m_lambda
        for lam in sym.partitions(n):
            ok = ok and sym.iota(th_sym(sym.m(lam))) == qsym.theta_qsym(sym.iota(sym.m(lam)))
        # frame: D iota_NSym = iota pi
        for alpha in comps.compositions(n):
            ok = ok and ssym.D(ssym.iota_nsym(nsym.H(alpha))) == \
                sym.iota(sym.pi_projection(nsym.H(alpha)))
    report(4, "descent square on all F_sigma (n<=4) and the morphism cube on generators", ok)


def test_criterion_05_four_conditions_and_self_adjointness():
    ts = theta_star_default()
    rep = ssym.verify_theta_conditions(ts, 4)
    ok = rep["passed"]
    sym_ok = True
    for n in range(6):
        for s in perms.all_perms(n):
            for t in perms.all_perms(n):
                if ts.G(s, t) != ts.G(t, s):
                    sym_ok = False
    report(5, "the four Theta-map conditions (n<=4) and self-adjointness (n<=5)",
           ok and sym_ok)


def test_criterion_06_peak_counting_lemma():
    t0 = time.time()
    ok = True
    for n in range(2, 7):
        for s in perms.all_perms(n):
            if perms.global_descents(s):
                if not perms.peak_free_count_lemma(s)["passed"]:
                    ok = False
    report(6, f"peak-counting identity at every global descent, n<=6 "
              f"({time.time()-t0:.1f}s)", ok)


def test_criterion_07_odd_subalgebras():
    ok = True
    cases = [
        ("ssym", ch.zeta_ssym, ssym.odd_basis, ssym.SSYM,
         theta_star_default().theta_map()),
        ("v", ch.zeta_v, vhopf.odd_basis, vhopf.VHOPF,
         lambda e: convert(vhopf.theta_v(convert(e, "Mv")), "v")),
    ]
    for name, zeta, stated_fn, d, theta in cases:
        for n in range(1, 5):
            strat = ch.odd_subalgebra_basis(zeta, n)
            stated = stated_fn(n)
            keys = list(d.basis_keys(n))
            idx = {k: i for i, k in enumerate(keys)}

            def rows_of(els):
                rows = []
                for e in els:
                    ev = convert(e, d.computational_basis)
                    row = [ZERO] * len(keys)
                    for k, c in ev.terms.items():
                        row[idx[k]] = c
                    rows.append(row)
                return rows

            r1, r2 = rows_of(strat), rows_of(stated)
            ok = ok and len(r1) == len(r2)
            ok = ok and la.rank(r1) == la.rank(r2) == la.rank(r1 + r2)
            for b in stated:
                ok = ok and ch.ds_check(zeta, convert(b, d.computational_basis))
            for k in keys:
                img = convert(theta(d.monomial(k)), d.computational_basis)
                vec = [ZERO] * len(keys)
                for kk, c in img.terms.items():
                    vec[idx[kk]] = c
                ok = ok and la.in_row_space(r2, vec)
    report(7, "strategy output spans the stated odd bases (n<=4), "
              "Dehn-Sommerville holds, Theta images stay inside", ok)


def test_criterion_08_nsym_duality_and_dimensions():
    ok = True
    for n in range(1, 6):
        for a in comps.compositions(n):
            ta = nsym.theta_nsym(nsym.H(a))
            for b in comps.compositions(n):
                if pairing(ta, qsym.M(b)) != pairing(nsym.H(a), qsym.theta_qsym(qsym.M(b))):
                    ok = False
    fib = {1: 1, 2: 1, 3: 2, 4: 3, 5: 5}
    for n, want in fib.items():
        rows, _, _ = nsym.theta_nsym.matrix(n)
        ok = ok and la.rank(rows) == want == len(qsym.odd_compositions(n))
    report(8, "Theta duality pairing (n<=5) and Fibonacci image dimensions", ok)


def test_criterion_09_dsym():
    ok = dsym.q_identity_check(4)["passed"]
    ok = ok and dsym.q_gen(1, 1) == product(dsym.q_gen(1, 0), dsym.q_gen(0, 1))
    for n in range(5):
        for k in dsym.bipartitions(n):
            e = dsym.m(k) if k else dsym.DSYM.unit()
            if dsym.antipode_e(e) != antipode(e):
                ok = False
    report(9, "two-alphabet q identities (n+m<=4) and the antipode closed form (deg<=4)", ok)


def test_criterion_10_universal_psi():
    from hopfpeak.hopfcore import descriptor
    ok = True
    for name, zeta in ch.CANONICAL.items():
        psi = ch.universal_psi(zeta)
        d = descriptor(name)
        for n in range(5 if name != "dsym" else 4):
            for k in d.basis_keys(n):
                if ch.zeta_qsym(psi(d.monomial(k))) != zeta.of_key(k):
                    ok = False
    psi_s = ch.universal_psi(ch.zeta_ssym)
    for n in range(5):
        for s in perms.all_perms(n):
            ok = ok and psi_s(ssym.F(s)) == ssym.D(ssym.F(s))
    psi_v = ch.universal_psi(ch.zeta_v)
    for n in range(5):
        for s in perms.all_perms(n):
            ok = ok and psi_v(vhopf.v(s)) == vhopf.psi_v(vhopf.v(s))
    report(10, "zeta_QSym ∘ Psi = zeta for all registered pairs; "
               "Psi matches the descent and shuffle-basis maps", ok)


def test_criterion_11_oracle_equivalence():
    from tests_oracles import qsym_poly_product  # local helper below
    ok = True
    for n1 in range(1, 4):
        for n2 in range(1, 5 - n1):
            for a in comps.compositions(n1):
                for b in comps.compositions(n2):
                    got = {g: v for g, v in comps.quasi_shuffle(a, b).items()}
                    if got != qsym_poly_product(a, b, n1 + n2):
                        ok = False
            for k1 in dsym.bipartitions(n1):
                for k2 in dsym.bipartitions(n2):
                    N = n1 + n2
                    want = dsym.poly_to_m(dsym.m_to_poly(k1, N, N)
                                          * dsym.m_to_poly(k2, N, N))
                    if product(dsym.m(k1), dsym.m(k2)) != want:
                        ok = False
    report(11, "quasi-shuffle products match truncated power-series expansion (deg<=4)", ok)
