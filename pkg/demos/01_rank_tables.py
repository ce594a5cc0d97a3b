# Dyson's rank: enumerate partitions, build the rank generating function over
# Z[w]/(w^t - 1) and read the class counts N(r, t; n) off its components.

from fullrank import Partition, enumerate_partitions, rank, rank_counts_enumeration, rank_genfun_durfee

# partitions of 4 and their ranks
for p in enumerate_partitions(4):
    print(p, rank(p))

# the rank is largest part minus number of parts
p = Partition((6, 4, 4, 2, 1))
print(p, "rank", rank(p), "conjugate", p.conjugate(), "rank", rank(p.conjugate()))

# R(w; q) with w a 5th root of unity; component r of q^n is N(r, 5; n)
R = rank_genfun_durfee(5, 30)
for n in (4, 9, 14, 19, 24, 29):
    print(n, [R.component(r)[n] for r in range(5)])  # equal counts at 5n + 4

# the same table straight from counting partitions
table = rank_counts_enumeration(5, 30)
print(table[0, 24], table[4, 24])
print(table.to_csv().splitlines()[:6])
