# The law of the shape of a random word.
#
# Draw n letters i.i.d. from a sorted distribution alpha and take the shape
# of the word. For small n the law can be computed exactly by enumerating
# all d^n words. The first row grows like alpha_1 n plus a bounded excess,
# and the excess increases with n toward a closed-form limit: the
# interaction sum itw(alpha, k) = sum over i <= k < j of
# alpha_j / (alpha_i - alpha_j).

from schurweyl.bounds import exact_excess, itw, itw_trivial_bound
from schurweyl.sampling import exact_sw_distribution

alpha = (0.75, 0.25)
print(f"letter distribution: {alpha}")
print()

print("exact law of the shape at n = 4:")
for shape, p in sorted(exact_sw_distribution(alpha, 4).items()):
    print(f"   {str(shape):10s} {p:.6f}")
print()

# E[first row] - alpha_1 n is the mean number of extra boxes the top row
# grabs beyond its fair share. It is monotone in n and never passes the
# interaction sum.

cap = itw(alpha, 1)
print(f"interaction sum itw(alpha, 1) = {cap}")
print(f"crude bound tail/gap          = {itw_trivial_bound(alpha, 1)}")
print()
print(" n    excess of the first row")
for n in range(1, 11):
    print(f"{n:2d}    {exact_excess(alpha, 1, n):.8f}")

# With three letters the same happens row by row; k = d gives excess zero
# because the whole shape always has exactly n boxes.

alpha3 = (0.5, 0.3, 0.2)
print()
print(f"three letters {alpha3}, n = 6:")
for k in (1, 2, 3):
    print(f"   k={k}: excess {exact_excess(alpha3, k, 6):.6f}"
          f"   itw {itw(alpha3, k):.6f}")
