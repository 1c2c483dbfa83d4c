"""The word encoding behind the fast counts.

A word class for parameters (d, n, k) uses n letters: k heavy letters
appearing d+1 times each and n-k light letters appearing twice each.  A
word is valid when, at every prefix, each letter whose effective count
exceeds d-2 dominates every later letter of the alphabet (light letters
get a head start of d-1).

Three independent routes to the same numbers live side by side:
streaming enumeration, memoized counting straight from the definition,
and the production recurrence.  They must agree; the test suite pins it.
"""
from treechild import (
    Word,
    count_words,
    count_words_direct,
    enumerate_words,
    is_valid_word,
)


def main() -> None:
    print("All valid words for d = 2, n = 2, k = 1 (one heavy letter):")
    for w in enumerate_words(2, 2, 1):
        print(f"  {w.to_string()}  profile {w.profile}")
    print(f"count_words:        {count_words(2, 2, 1)}")
    print(f"count_words_direct: {count_words_direct(2, 2, 1)}")

    print()
    print("Validity is a prefix condition, so rearranging can break it:")
    for s in ("baaabb", "bbbaaa"):
        w = Word.from_string(s)
        print(f"  {s}: {'valid' if is_valid_word(2, w) else 'invalid'}")

    print()
    print("Class sizes explode; the recurrence keeps up where streaming")
    print("cannot (counts for n = 5, all letters heavy):")
    for d in (2, 3, 4):
        print(f"  d = {d}: c(5, 5) = {count_words(d, 5, 5)}")


if __name__ == "__main__":
    main()
