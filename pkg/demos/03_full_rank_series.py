# The full-rank generating function R_2(w, w^2; q) in two forms, and the
# difference series f_t(r, s) built from its components.

from fullrank import R2_double_sum, R2_lambert, f_class, f_diff
from fullrank.identities import progression_product

t = 7
F = R2_double_sum(t, 80)
print(F == R2_lambert(t, 80))  # double sum and Lambert form agree

# for odd t the classes 1 and 2 are equinumerous
print(f_diff(t, 1, 2, 80).is_zero())

# for even t, class 1 trails class 2
print(f_diff(6, 1, 2, 30).coefficients())

# sizes 7n + 3: the (1, 3) difference is an infinite product
lhs = f_class(7, 1, 3, 3, 7 * 40 + 3).truncate(40)
print(lhs.coefficients()[:12])
print(lhs == progression_product(40, 7, (2, 5)))
