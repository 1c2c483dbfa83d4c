"""Path lengths over one-component networks.

P(n, k) sums, over all one-component networks with n leaves and k
reticulations, the total root distance of the top tree component's
vertices.  A closed form, a product recurrence, and a factorization into
a multinomial times a chain count all give the same integers.

Averaging over the whole class yields exact rationals, and the normalized
expectations drift toward constants: 2 sqrt(pi) for d = 2 (under n^(7/4)),
a Bessel-quotient constant for d = 3 (under n^2), and 1 for d >= 4 (under
d^2 n^2 / 2).
"""
from treechild import (
    expected_path_length,
    expected_path_length_reference,
    expected_path_length_trend,
    path_length_total,
    path_length_total_recurrence,
    unary_binary_path_length,
)


def main() -> None:
    print("Exact path-length totals, d = 2:")
    for n in range(1, 6):
        row = ", ".join(str(path_length_total(2, n, k)) for k in range(n))
        print(f"  n = {n}: k = 0..{n - 1}: {row}")

    print()
    print("Three routes, one number (d = 3, n = 6, k = 2):")
    closed = path_length_total(3, 6, 2)
    rec = path_length_total_recurrence(3, 6, 2)
    print(f"  closed form {closed}, recurrence {rec}")
    print(f"  chain-count factor: {unary_binary_path_length(4, 6)}")

    print()
    print("Average path length is an exact rational:")
    for d, n in ((2, 2), (2, 6), (3, 4)):
        print(f"  d = {d}, n = {n}: E(P) = {expected_path_length(d, n)}")

    print()
    print("Normalized expectations approach their limit constants:")
    for d in (2, 3, 4):
        trend = expected_path_length_trend(d, [10, 20, 40])
        path = " -> ".join(f"{v:.4f}" for v in trend.values())
        print(f"  d = {d}: {path}  (limit {expected_path_length_reference(d):.4f})")


if __name__ == "__main__":
    main()
