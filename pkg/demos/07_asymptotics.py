"""Growth of the counts: exact constants, envelopes, and certificates.

For one-component networks the first-order asymptotics of the total count
are known with explicit constants for every d, and the finite-n ratio to
the asymptotic estimate visibly approaches 1.  For general tree-child
networks only a Theta-envelope with a stretched-exponential factor
e^(3 a1 beta n^(1/3)) is available (a1 is the first zero of the Airy
function); the count-to-envelope ratio stays within a narrow band.

With k fixed, an explicit asymptotic formula applies, and for d = 2 the
total-to-top-slice ratio is certified to lie in [1, sqrt(e)] by pure
rational arithmetic.
"""
from treechild import (
    asympt_tc_fixed_k,
    count_tc_words,
    otc_asymptotic,
    otc_asymptotic_ratio,
    params,
    Params,
    ratio_sqrt_e,
    ratio_sqrt_e_reference,
    tc_envelope_ratio,
)


def main() -> None:
    print("Asymptotic parameter table (alpha, beta, gamma):")
    for d in range(2, 9):
        row = params(d)
        print(
            f"  d = {d}: alpha = {row.alpha} ({float(row.alpha):.2f}), "
            f"beta = {row.beta:.2f}, gamma = {row.gamma} ({float(row.gamma):.2f})"
        )

    print()
    print("One-component totals against their first-order asymptotics:")
    for d in (2, 3, 4):
        ratios = ", ".join(
            f"n={n}: {otc_asymptotic_ratio(d, n):.4f}" for n in (50, 100, 200)
        )
        print(f"  d = {d}: {ratios}")
    print(f"  magnitude of the d = 3, n = 200 estimate: {otc_asymptotic(3, 200)}")

    print()
    print("Count-to-envelope ratio for maximally reticulated networks, d = 2:")
    for n, r in tc_envelope_ratio(2, [10, 15, 20, 25]).items():
        print(f"  n = {n}: {r:.4f}")

    print()
    print("Fixed k = 1 asymptotic closes in on the exact count, d = 2:")
    for n in (100, 300, 500):
        exact = count_tc_words(Params(2, n, 1))
        print(f"  n = {n}: estimate/exact = {asympt_tc_fixed_k(2, n, 1).ratio_to(exact):.4f}")

    print()
    print("Certified sandwich for d = 2 totals over the top slice:")
    for n in (5, 10, 20, 40):
        print(f"  n = {n:2d}: ratio = {float(ratio_sqrt_e(2, n)):.6f}")
    print(f"  limit: sqrt(e) = {ratio_sqrt_e_reference(2):.6f}")


if __name__ == "__main__":
    main()
