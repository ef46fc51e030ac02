# How fast the normalized shape approaches the letter distribution.
#
# Divide a sampled shape by n and compare it to alpha with the usual
# f-divergences and norms. Each distance decays at a known rate: chi^2,
# squared Hellinger and KL like d^2/n, squared l2 like d/n, l1 like
# d/sqrt(n). The estimates below come with 95 percent confidence radii
# and a pass/fail verdict against each closed-form rate.

from schurweyl.bounds import distance_rate_check, entropy_bias_check

alpha = (0.4, 0.3, 0.2, 0.1)
print(f"alpha = {alpha}")
print()

print("metric        n     estimate      ci          bound      verdict")
for metric in ("chi2", "hellinger2", "kl", "l2sq", "l1"):
    for n in (100, 400, 1600):
        c = distance_rate_check(metric, alpha, n, budget=4000, seed=7, mode="mc")
        print(f"{metric:10s} {n:5d}   {c.estimate:10.6f}   {c.ci_radius:.2e}"
              f"   {c.bound:8.4f}   {c.verdict}")
    print()

# Truncated variants look only at the top k rows and replace the dimension
# dependence by a k dependence, which matters when d is large but only a
# few rows carry mass.

print("top-row truncations at n = 400:")
for metric in ("l2sq-trunc", "tv-trunc"):
    for k in (1, 2):
        c = distance_rate_check(metric, alpha, 400, k=k, budget=4000, seed=7,
                                mode="mc")
        print(f"   {metric:14s} k={k}   {c.estimate:.6f} <= {c.bound:.4f}"
              f"   {c.verdict}")

# The plug-in entropy of the normalized shape undershoots H(alpha) by at
# most 3 d^2 / (2n) on average.

print()
c = entropy_bias_check(alpha, 400, budget=4000, seed=7, mode="mc")
print(f"entropy estimate {c.estimate:.4f} in window"
      f" [{c.lower:.4f}, {c.bound:.4f}]   {c.verdict}")
