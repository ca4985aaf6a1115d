"""The character group and the universal morphism into QSym.

Every graded connected Hopf algebra here carries a distinguished
multiplicative functional (its canonical character).  Convolution makes
the characters of one algebra a group; each pair (algebra, character)
admits exactly one Hopf morphism to QSym compatible with the canonical
character, and everything downstream (odd subalgebras, Theta maps) is
phrased through that morphism.
"""

from hopfpeak import characters as ch
from hopfpeak import qsym, ssym, vhopf
from hopfpeak import permutations as perms

# Convolution, inverse, and the degree-sign twist.
zeta = ch.zeta_qsym
nu = ch.convolve(ch.char_inverse(ch.char_bar(zeta)), zeta)
print("nu(M[2,1]) =", nu(qsym.M([2, 1])), "(closed form gives -2)")
print("nu is an odd character:", ch.is_odd(nu, 5))

# The two routes to the convolution inverse agree: triangular recursion
# versus composing with the antipode.
inv1 = ch.char_inverse(zeta)
inv2 = ch.char_inverse_via_antipode(zeta)
print("inverse routes agree on M[2,1]:",
      inv1.of_key((2, 1)) == inv2.of_key((2, 1)) == inv1(qsym.M([2, 1])))

# The universal morphism: for the permutation algebra it coincides with
# the descent map, for the block algebra with the shuffle-basis map.
psi_s = ch.universal_psi(ch.zeta_ssym)
print("Psi(F[213]) =", psi_s(ssym.F([2, 1, 3])))
print("   matches D:", psi_s(ssym.F([2, 1, 3])) == ssym.D(ssym.F([2, 1, 3])))

psi_v = ch.universal_psi(ch.zeta_v)
print("Psi(v[21])  =", psi_v(vhopf.v([2, 1])))
print("   matches the shuffle-basis map:",
      psi_v(vhopf.v([2, 1])) == vhopf.psi_v(vhopf.v([2, 1])))

# Character compatibility: zeta_QSym after Psi recovers the character.
for s in perms.all_perms(3):
    assert ch.zeta_qsym(psi_s(ssym.F(s))) == ch.zeta_ssym(ssym.F(s))
print("zeta_QSym ∘ Psi = zeta checked on S_3")
