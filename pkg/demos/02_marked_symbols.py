# 2-marked Durfee symbols and the full rank rho_1 + 2 rho_2.

from fullrank import MarkedDurfeeSymbol2, enumerate_2marked, full_rank, validate_2marked
from fullrank.durfee import full_rank_counts_enumeration

# every symbol of size 5, with its rank vector and full rank
for s in enumerate_2marked(5):
    print(s, s.rank_vector(), full_rank(s))

# conjugation keeps one largest subscript-1 part on top and swaps the rest
s = MarkedDurfeeSymbol2.from_rows(3, [(3, 2), (2, 1), (1, 1)], [(2, 1)])
print(s, full_rank(s), "->", s.conjugate(), full_rank(s.conjugate()))

# a symbol breaking the interval condition is reported, not silently accepted
bad = MarkedDurfeeSymbol2.from_rows(3, [(3, 2), (1, 1)], [(2, 1)])
print(validate_2marked(bad))

# NF_2(r, 7; n) by walking every symbol
table = full_rank_counts_enumeration(7, 14)
for n in range(2, 15):
    print(n, [table[r, n] for r in range(7)])
