"""The generic candidate m∘(S∘R_{-1}⊗id)∘Δ and where it works.

Phi is a Hopf endomorphism on any commutative and co-commutative
algebra and is then automatically a Theta map.  On QSym (which is not
co-commutative) it differs from the true Theta map, and M_32 is the
smallest clean witness.
"""

from hopfpeak import characters as ch
from hopfpeak import qsym, sym
from hopfpeak.hopfcore import convert, phi_candidate

# On QSym the two maps disagree:
print("Theta(M[3,2]) =", qsym.theta_qsym(qsym.M([3, 2])))
print("Phi(M[3,2])   =", phi_candidate(qsym.M([3, 2])))

# The verifier localizes the failure (first failing key in scan order):
rep = ch.verify_theta(ch.zeta_qsym, phi_candidate, 5)
print("Phi passes the Theta criterion on QSym:", rep["passed"])
print("first witness:", rep["square"]["witness"]["key"])

# Restricted to the symmetric functions (commutative AND co-commutative)
# Phi recovers the classical Theta: doubled odd power sums.
p3 = convert(sym.m([3]), "p")
print("Theta_Sym(p_3) =", sym.theta_sym(p3))
emb = sym.iota(sym.m([3]))
print("Phi(iota m[3]) =", phi_candidate(emb), " (matches 2 p_3 inside QSym)")

for lam in sym.partitions(4):
    lhs = phi_candidate(sym.iota(sym.m(lam)))
    rhs = sym.iota(convert(sym.theta_sym(convert(sym.m(lam), "p")), "m"))
    assert lhs == rhs
print("Phi == Theta on all symmetric m_lambda of degree 4")
