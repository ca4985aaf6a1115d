"""Quasisymmetric functions: bases, products, and the peak projection.

Walks through the monomial/fundamental/shuffle bases, the quasi-shuffle
product, the canonical character, and the Theta endomorphism whose
image is the peak algebra.
"""

from hopfpeak import qsym, compositions as comps
from hopfpeak.hopfcore import antipode, convert, coproduct, product

# The monomial basis multiplies by quasi-shuffle: interleave the parts,
# optionally merging one part from each side.
print("M[1] * M[2]      =", product(qsym.M([1]), qsym.M([2])))
print("M[1] * M[1]      =", product(qsym.M([1]), qsym.M([1])))

# The coproduct deconcatenates.
print("Delta M[1,2]     =", coproduct(qsym.M([1, 2])))

# Fundamental and shuffle bases are exact triangular changes of the
# monomial basis.
print("L[2,1] in M      =", convert(qsym.L([2, 1]), "M"))
print("S[1,1] in M      =", convert(qsym.S([1, 1]), "M"))
print("round trip       =", convert(convert(qsym.S([1, 1]), "M"), "S"))

# The antipode comes from the graded recursion; no closed form needed.
print("S(M[3,2])        =", antipode(qsym.M([3, 2])))

# Theta kills monomials whose last part is even and sends the rest to
# signed eta elements supported on odd compositions.
for beta in [(3, 2), (2, 1), (1, 1), (1, 1, 1)]:
    print(f"Theta(M{list(beta)})".ljust(17), "=", qsym.theta_qsym(qsym.M(beta)))

# eta_beta spans the peak algebra; odd(beta) collapses even runs.
print("eta[1,1,1]       =", qsym.eta((1, 1, 1)))
print("odd(3,4,2,1,3,2,1) =", comps.odd_collapse((3, 4, 2, 1, 3, 2, 1)))

# Degree-n peak space dimension = number of odd compositions of n.
for n in range(1, 7):
    print(f"dim Pi_{n} = {len(qsym.odd_compositions(n))}")
