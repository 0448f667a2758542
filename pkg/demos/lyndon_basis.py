"""
Lyndon words and the free Lie algebra
=====================================

Basis variables of the free Poisson algebra are indexed by Lyndon words.
Each word is bracketed along its standard factorization, and products of
basis elements are re-expanded in the basis.
"""

from freepoisson import LieElement, lie_bracket, lyndon_basis, necklace_count
from freepoisson.lie import assoc_expand, bracketing, word_to_str

# The basis up to degree 4 on two letters, ordered by degree and then lex.
basis = lyndon_basis(2, 4)
print([word_to_str(w) for w in basis])

# The counts agree with the necklace (Witt) formula.
for d in range(1, 8):
    print(d, necklace_count(2, d), necklace_count(3, d))

# e_112 is [x1, [x1, x2]]; as an associative polynomial it reads
print(bracketing((1, 1, 2)), assoc_expand((1, 1, 2)))

# Brackets of basis elements are linear combinations of basis elements.
e12 = LieElement.basis("12", 2)
e112 = LieElement.basis("112", 2)
print(lie_bracket(e12, e112))
print(lie_bracket(LieElement.basis("1", 2), e12))
