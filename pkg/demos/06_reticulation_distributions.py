"""The law of the reticulation count in a uniform random network.

Normalizing a row of exact counts gives the exact distribution of the
number of reticulations.  For d = 2 general networks the deficiency
n-1-k approaches Poisson(1/2); for d = 3 one-component networks it
approaches a Bessel law; for d = 2 one-component networks the count is
asymptotically normal after centering at n - sqrt(n).

None of those limits is reachable at desk scale, so the library reports
exact finite-n diagnostics that the limits predict should shrink, and the
test suite freezes their monotone decrease.
"""
from treechild import (
    moment,
    normal_cdf_diagnostic,
    reference_pmf,
    ret_pmf,
    total_variation,
    twig_expectation_bound,
)


def main() -> None:
    print("Exact law of the reticulation count, d = 2, n = 6:")
    pmf = ret_pmf("general", 2, 6)
    for k in pmf.support:
        print(f"  P(T = {k}) = {pmf.p(k)}")
    print(f"  mean {moment(pmf, 1)} = {float(moment(pmf, 1)):.5f}")

    print()
    print("Distance to Poisson(1/2) for the deficiency n-1-T, d = 2:")
    poisson = reference_pmf("poisson")
    for n in (6, 8, 10, 12):
        law = ret_pmf("general", 2, n).remap(lambda k: n - 1 - k)
        print(f"  n = {n:2d}: TV = {total_variation(law, poisson):.6f}")

    print()
    print("Distance to the Bessel law, one-component d = 3:")
    bessel = reference_pmf("bessel")
    for n in (6, 10, 14):
        law = ret_pmf("onecomp", 3, n).remap(lambda k: n - 1 - k)
        print(f"  n = {n:2d}: TV = {total_variation(law, bessel):.6f}")

    print()
    print("Normal-CDF sup gap, one-component d = 2 (slow sqrt-scale decay):")
    for n in (50, 100, 200):
        print(f"  n = {n:3d}: sup gap = {normal_cdf_diagnostic(n):.6f}")

    print()
    print("Expected twig count is at most E(n-1-T), which stays near 1/2:")
    for n in (8, 16, 24):
        print(f"  d = 2, n = {n:2d}: bound = {float(twig_expectation_bound(2, n)):.6f}")


if __name__ == "__main__":
    main()
