"""Diagonally symmetric functions in two alphabets.

Monomials are indexed by bipartitions (multisets of nonzero columns);
the h/e/q families come from generating functions; the antipode has a
closed form on the e generators; and there are two distinct Theta maps:
the generic commutative/co-commutative candidate and the composite that
projects to one alphabet, applies the classical Theta, and embeds back.
"""

from hopfpeak import characters as ch
from hopfpeak import dsym
from hopfpeak.hopfcore import antipode, coproduct, product

# Products of monomials merge columns componentwise.
print("m{(1,0)} * m{(0,1)} =", product(dsym.m([(1, 0)]), dsym.m([(0, 1)])))
print("m{(1,0)} * m{(1,0)} =", product(dsym.m([(1, 0)]), dsym.m([(1, 0)])))
print("Delta m{(1,0),(0,1)} has", len(coproduct(dsym.m([(1, 0), (0, 1)])).terms), "terms")

# Generating-function families.
print("h(1,1) =", dsym.h_gen(1, 1))
print("e(1,1) =", dsym.e_gen(1, 1))

# Antipode: signs on e turn into h.
print("S(e(1,1)) =", dsym.antipode_e(dsym.e_gen(1, 1)))
print("   matches the generic recursion:",
      dsym.antipode_e(dsym.e_gen(1, 1)) == antipode(dsym.e_gen(1, 1)))

# The q family: image generators of the Theta map, three equal routes.
print("q(1,1) =", dsym.q_gen(1, 1))
print("   convolution route:", dsym.q_convolution(1, 1) == dsym.q_gen(1, 1))
print("   generating function route:", dsym.q_gf(1, 1) == dsym.q_gen(1, 1))
print("q(1,1) = q(1,0) q(0,1):",
      dsym.q_gen(1, 1) == product(dsym.q_gen(1, 0), dsym.q_gen(0, 1)))

# The alternating-sum identities that make odd-weight q's generate.
print("q identities to total degree 4:", dsym.q_identity_check(4)["passed"])
print("2 q(2,0) = q(1,0)^2:",
      2 * dsym.q_gen(2, 0) == product(dsym.q_gen(1, 0), dsym.q_gen(1, 0)))

# Two different Theta maps on the same element:
x = dsym.m([(0, 1)])
print("Phi route:      ", dsym.theta_dsym(x))
print("project-embed:  ", dsym.theta_dsym_alt(x))

# Both satisfy the Theta criterion, each under its natural character.
print("Phi, x-only character:   ",
      ch.verify_theta(ch.zeta_dsym, dsym.theta_dsym, 3)["passed"])
print("Phi, one-column character:",
      ch.verify_theta(ch.zeta_dsym_diag, dsym.theta_dsym, 3)["passed"])
print("project-embed, one-column:",
      ch.verify_theta(ch.zeta_dsym_diag, dsym.theta_dsym_alt, 3)["passed"])
print("project-embed, x-only (expected to fail):",
      ch.verify_theta(ch.zeta_dsym, dsym.theta_dsym_alt, 2)["passed"])
