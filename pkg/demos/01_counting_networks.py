"""Counting tree-child networks exactly.

A d-combining tree-child network has n labeled leaves and k reticulation
nodes of in-degree d.  The class count TC(n, k) grows super-exponentially,
so everything here is arbitrary-precision integer arithmetic; no float
appears anywhere in a count.

The fastest route is the word recurrence: TC(n, k) = n! c(n-1, k) / 2^(n-k-1)
where c(n-1, k) counts certain words over an (n-1)-letter alphabet, and the
words satisfy a three-index recurrence that tabulates in one rolling pass.
"""
from treechild import Params, count_tc_total, count_tc_words, tc_table


def main() -> None:
    print("Counts for binary reticulations (d = 2):")
    table = tc_table(2, 8)
    for n in range(1, 9):
        row = ", ".join(str(v) for v in table[n])
        print(f"  n = {n}: k = 0..{n - 1}: {row}")

    print()
    print("The same machinery covers any in-degree d >= 2:")
    for d in (3, 4, 6):
        p = Params(d, 5, 4)
        print(f"  d = {d}: TC(5, 4) = {count_tc_words(p)}")

    print()
    print("Row sums give the total number of tree-child networks:")
    for n in (5, 10, 15):
        print(f"  d = 2, n = {n:2d}: {count_tc_total(2, n)}")

    print()
    big = count_tc_words(Params(2, 25, 24))
    print(f"TC(25, 24) for d = 2 has {len(str(big))} digits: {big}")


if __name__ == "__main__":
    main()
