"""A family of Theta maps on the permutation Hopf algebra.

The construction is seeded by a constructor function f on pairs of
permutations subject to two conditions; the structure coefficients
<Theta*(F*_sigma), F_tau> then come out of a double induction on degree
and inversion count.  Different admissible f's give genuinely different
Theta maps, all satisfying the same commuting square with the descent
map.
"""

from hopfpeak import qsym, ssym

# The default constructor: 2 when both peak conditions hold.
ts = ssym.ThetaStar(ssym.default_constructor())

print("degree 2 coefficients (all 2):")
m2 = ts.matrix(2)
for s in sorted(m2):
    print("  ", "".join(map(str, s)), [str(m2[s][t]) for t in sorted(m2[s])])

print("degree 3 coefficients:")
m3 = ts.matrix(3)
cols = sorted(m3)
print("      ", "  ".join("".join(map(str, t)) for t in cols))
for s in cols:
    print("  ", "".join(map(str, s)), " ", "  ".join(f"{str(m3[s][t]):>2}" for t in cols))

# Theta itself is the dual map; on the identity column it doubles the
# peak-free permutations (the odd character of the algebra).
theta = ts.theta_map()
print("Theta(F[123]) =", theta(ssym.F([1, 2, 3])))

# The defining square against the QSym Theta, through the descent map:
f = ssym.F([2, 1])
print("D(Theta(F[21]))       =", ssym.D(theta(f)))
print("Theta_QSym(D(F[21]))  =", qsym.theta_qsym(ssym.D(f)))

# The four equivalent conditions plus self-adjointness, verified:
rep = ssym.verify_theta_conditions(ts, 4)
print("verification to degree 4:", {k: v["passed"] for k, v in rep["checks"].items()})

# A different member of the family: shift the degree-3 free parameters.
custom = ssym.constructor_from_table(
    [{"sigma": [1, 3, 2], "tau": [1, 3, 2], "value": "4"}], validate_to=4)
ts2 = ssym.ThetaStar(custom)
print("custom f(132,132)=4 changes the table:",
      ts2.matrix(3)[(1, 3, 2)][(1, 3, 2)], "vs default",
      m3[(1, 3, 2)][(1, 3, 2)])
print("and still verifies:", ssym.verify_theta_conditions(ts2, 3)["passed"])
