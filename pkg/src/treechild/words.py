"""Word encoding of general d-combining tree-child networks.

A network with n leaves and k reticulation nodes is encoded, up to leaf
relabeling and a power-of-two symmetry factor, by a word over n-1 letters in
which k letters occur d+1 times (heavy letters, one per reticulation node)
and the remaining n-1-k letters occur twice.  A word is valid when a prefix
dominance condition holds: scanning left to right, once a letter has been
seen more than d-2 times (with the twist that a 2-occurrence letter's
appearances count as its (d-1)st, dth and (d+1)st), every later letter of
the alphabet must have been seen at most as often.

Counting valid words is done three ways, which the test suite plays against
each other:

  count_words_direct  exhaustive evaluation of the definition, memoized on
                      prefix occurrence vectors (the slow, assumption-free
                      oracle)
  count_words         a three-index recurrence b(n, k, m), where m tracks
                      how many letters currently sit at the top occurrence
                      level, summed over m
  enumerate_words     literal generation of the words themselves

The network count follows as count_tc_words(d, n, k)
= n! * c(n-1, k) / 2^(n-k-1) with c(n, k) = sum_m b(n, k, m).

The k = n slice (every letter heavy, maximally reticulated networks) has a
faster two-term recurrence and a binomial form, both implemented, and an
exactly rational rescaling e(N, M) of that slice satisfies a two-neighbor
recurrence whose verification is part of table construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Iterator

from .onecomp import _exact_div
from .params import Params

# word length 2n+(d-1)k stays around 20 below this ceiling
DEFAULT_ENUM_CEILING = 5


@dataclass(frozen=True)
class Word:
    """A candidate word: letters[i] is a 1-based letter index; profile[j]
    is the required multiplicity of letter j+1, either 2 or d+1."""

    letters: tuple[int, ...]
    profile: tuple[int, ...]

    @classmethod
    def from_letters(cls, letters) -> "Word":
        """Build a Word inferring each letter's multiplicity from its count."""
        letters = tuple(letters)
        if not letters:
            return cls(letters=(), profile=())
        n = max(letters)
        profile = tuple(letters.count(i) for i in range(1, n + 1))
        return cls(letters=letters, profile=profile)

    @classmethod
    def from_string(cls, s: str) -> "Word":
        """Letters a..z mapped to 1..26."""
        return cls.from_letters(ord(ch) - ord("a") + 1 for ch in s)

    def to_string(self) -> str:
        if any(i > 26 for i in self.letters):
            raise ValueError("string form only supports letter indices up to 26")
        return "".join(chr(ord("a") + i - 1) for i in self.letters)


def _check_structure(d: int, w: Word) -> int:
    """Well-formedness; returns the heavy letter count k."""
    n = len(w.profile)
    k = 0
    for j, mult in enumerate(w.profile, start=1):
        if mult == d + 1:
            k += 1
        elif mult != 2:
            raise ValueError(
                f"letter {j} has profile multiplicity {mult}, need 2 or d+1={d + 1}"
            )
    counts = [0] * n
    for i in w.letters:
        if not 1 <= i <= n:
            raise ValueError(f"letter index {i} outside 1..{n}")
        counts[i - 1] += 1
    if counts != list(w.profile):
        raise ValueError("letter counts do not match the profile")
    return k


def _append_ok(cnt, i: int, shift, d: int, n: int) -> bool:
    # dominance pairs involving letter i, right after cnt[i] was bumped;
    # pairs not involving i were checked at an earlier step and unchanged
    vi = cnt[i] + shift[i]
    for a in range(i):
        va = cnt[a] + shift[a]
        if va > d - 2 and va < vi:
            return False
    if vi > d - 2:
        for b in range(i + 1, n):
            if cnt[b] + shift[b] > vi:
                return False
    return True


def is_valid_word(d: int, w: Word) -> bool:
    """Whether w satisfies the prefix dominance condition.

    A letter's effective count is its occurrence count so far, plus d-1 if
    its multiplicity is 2.  After each scanned position, every letter whose
    effective count exceeds d-2 must dominate (have effective count >= that
    of) every later letter of the alphabet.
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    _check_structure(d, w)
    n = len(w.profile)
    shift = [0 if w.profile[j] == d + 1 else d - 1 for j in range(n)]
    cnt = [0] * n
    for letter in w.letters:
        i = letter - 1
        cnt[i] += 1
        if not _append_ok(cnt, i, shift, d, n):
            return False
    return True


def _word_class_args(d: int, n: int, k: int):
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k} with n={n}")


def enumerate_words(
    d: int, n: int, k: int, ceiling: int = DEFAULT_ENUM_CEILING
) -> Iterator[Word]:
    """Yield every valid word with n letters, k of them heavy, exactly once.

    Words come out grouped by heavy-letter subset, lexicographic within a
    group.  Guarded by a ceiling because class sizes explode; raise it
    deliberately if you mean it.
    """
    _word_class_args(d, n, k)
    if n > ceiling:
        raise ValueError(f"n={n} exceeds the enumeration ceiling {ceiling}")
    length = 2 * n + (d - 1) * k
    for heavy in combinations(range(n), k):
        heavy_set = set(heavy)
        mult = tuple(d + 1 if i in heavy_set else 2 for i in range(n))
        shift = tuple(0 if i in heavy_set else d - 1 for i in range(n))
        cnt = [0] * n
        prefix = []

        def rec() -> Iterator[Word]:
            if len(prefix) == length:
                yield Word(letters=tuple(prefix), profile=mult)
                return
            for i in range(n):
                if cnt[i] < mult[i]:
                    cnt[i] += 1
                    prefix.append(i + 1)
                    if _append_ok(cnt, i, shift, d, n):
                        yield from rec()
                    prefix.pop()
                    cnt[i] -= 1

        yield from rec()


def count_words_direct(
    d: int, n: int, k: int, ceiling: int = DEFAULT_ENUM_CEILING
) -> int:
    """Count valid words straight from the definition.

    Memoized on the per-letter occurrence vector within each heavy subset,
    so it covers classes far too large to stream, while still deciding
    validity only through the dominance predicate.  Independent of the
    b-recurrence; this is the oracle the recurrence is tested against.
    """
    _word_class_args(d, n, k)
    if n > ceiling:
        raise ValueError(f"n={n} exceeds the enumeration ceiling {ceiling}")
    total = 0
    for heavy in combinations(range(n), k):
        heavy_set = set(heavy)
        mult = tuple(d + 1 if i in heavy_set else 2 for i in range(n))
        shift = tuple(0 if i in heavy_set else d - 1 for i in range(n))
        memo: dict[tuple, int] = {}

        def rec(cnt: tuple) -> int:
            if cnt == mult:
                return 1
            r = memo.get(cnt)
            if r is not None:
                return r
            r = 0
            for i in range(n):
                if cnt[i] < mult[i]:
                    nc = cnt[:i] + (cnt[i] + 1,) + cnt[i + 1 :]
                    if _append_ok(nc, i, shift, d, n):
                        r += rec(nc)
            memo[cnt] = r
            return r

        total += rec((0,) * n)
    return total


# ---------------------------------------------------------------------------
# b(n, k, m) recurrence


def _initial_row(k_max: int) -> dict:
    row = {(0, 1): 1}
    if k_max >= 1:
        row[(1, 1)] = 1
    return row


def _next_row(d: int, n: int, prev: dict, k_max: int) -> dict:
    """Row n of the b-table from row n-1.  Keys (k, m), zero cells absent.

    b(n, k, m) = sum_{j<=min(m,n-1)} b(n-1, k, j)
               + binom(n+m+k(d-1)-2, d-1) * sum_{j<=min(m,n-1)} b(n-1, k-1, j)

    The inner sums are running prefix sums, so a row costs O(n * k_max)
    big-integer additions.
    """
    cur = {}
    for k in range(0, min(n, k_max) + 1):
        s_k = 0
        s_km1 = 0
        for m in range(1, n + 1):
            if m <= n - 1:
                s_k += prev.get((k, m), 0)
                s_km1 += prev.get((k - 1, m), 0)
            val = s_k + comb(n + m + k * (d - 1) - 2, d - 1) * s_km1
            if val:
                cur[(k, m)] = val
    return cur


def _b_row(d: int, n: int, k_max: int) -> dict:
    row = _initial_row(k_max)
    for j in range(2, n + 1):
        row = _next_row(d, j, row, k_max)
    return row


def _row_c(row: dict, n: int, k: int) -> int:
    return sum(row.get((k, m), 0) for m in range(1, n + 1))


@dataclass(frozen=True)
class BTable:
    """Full three-index table b(n, k, m) for 1 <= n <= n_max."""

    d: int
    n_max: int
    entries: dict

    def b(self, n: int, k: int, m: int) -> int:
        return self.entries.get((n, k, m), 0)

    def c(self, n: int, k: int) -> int:
        """Row sum over m; the number of valid words."""
        if n == 0:
            return 1 if k == 0 else 0
        return sum(self.b(n, k, m) for m in range(1, n + 1))


def b_table(d: int, n_max: int, k_max: int | None = None) -> BTable:
    """Materialized b-table; counting functions use rolling rows instead."""
    if d < 2 or n_max < 1:
        raise ValueError("need d >= 2 and n_max >= 1")
    if k_max is None:
        k_max = n_max
    entries = {}
    row = _initial_row(k_max)
    for (k, m), v in row.items():
        entries[(1, k, m)] = v
    for n in range(2, n_max + 1):
        row = _next_row(d, n, row, k_max)
        for (k, m), v in row.items():
            entries[(n, k, m)] = v
    return BTable(d=d, n_max=n_max, entries=entries)


def count_words(d: int, n: int, k: int) -> int:
    """c(n, k): valid words with n letters, k heavy, via the b-recurrence."""
    _word_class_args(d, n, k)
    if n == 0:
        return 1 if k == 0 else 0
    return _row_c(_b_row(d, n, k), n, k)


def count_tc_words(p: Params) -> int:
    """Tree-child networks with n leaves and k reticulation nodes.

    n! * c(n-1, k) / 2^(n-k-1); the division is exact and checked.
    """
    d, n, k = p.d, p.n, p.k
    if n == 1:
        return 1
    c = count_words(d, n - 1, k)
    return _exact_div(factorial(n) * c, 2 ** (n - k - 1))


def count_tc_total(d: int, n: int) -> int:
    """All tree-child networks with n leaves, summed over k."""
    if d < 2 or n < 1:
        raise ValueError("d >= 2 and n >= 1 required")
    if n == 1:
        return 1
    row = _b_row(d, n - 1, n - 1)
    total = 0
    for k in range(n):
        c = _row_c(row, n - 1, k)
        total += _exact_div(factorial(n) * c, 2 ** (n - k - 1))
    return total


def tc_table(d: int, n_max: int) -> dict[int, list[int]]:
    """{n: [TC(n,0), ..., TC(n,n-1)]} for n = 1..n_max, one rolling pass."""
    if d < 2 or n_max < 1:
        raise ValueError("d >= 2 and n_max >= 1 required")
    table = {1: [1]}
    if n_max == 1:
        return table
    row = _initial_row(n_max)
    for j in range(1, n_max):
        n = j + 1
        table[n] = [
            _exact_div(factorial(n) * _row_c(row, j, k), 2 ** (n - k - 1))
            for k in range(n)
        ]
        if n < n_max:
            row = _next_row(d, n, row, n_max)
    return table


# ---------------------------------------------------------------------------
# k = n slice (every letter heavy)


def b_max_table(d: int, n_max: int) -> dict:
    """b(n, m) for the all-heavy slice via its two-term recurrence.

    b(n, m) = (dn+m-2)/(dn+m-d-1) * b(n, m-1) + binom(dn+m-2, d-1) * b(n-1, m)
    with b(1, 1) = 1.  Individual terms are rationals; sums are integers.
    """
    if d < 2 or n_max < 1:
        raise ValueError("need d >= 2 and n_max >= 1")
    b: dict = {(1, 1): 1}
    for n in range(2, n_max + 1):
        for m in range(1, n + 1):
            v = Fraction(comb(d * n + m - 2, d - 1) * b.get((n - 1, m), 0))
            if m >= 2:
                v += Fraction(d * n + m - 2, d * n + m - d - 1) * b.get((n, m - 1), 0)
            if v.denominator != 1:
                raise ArithmeticError(f"non-integer slice cell at n={n}, m={m}")
            if v:
                b[(n, m)] = int(v)
    return b


def b_max_table_binomial(d: int, n_max: int) -> dict:
    """Same slice by the binomial form
    b(n, m) = binom(m+nd-2, d-1) * sum_{j<=min(m,n-1)} b(n-1, j)."""
    if d < 2 or n_max < 1:
        raise ValueError("need d >= 2 and n_max >= 1")
    b: dict = {(1, 1): 1}
    for n in range(2, n_max + 1):
        pref = 0
        for m in range(1, n + 1):
            if m <= n - 1:
                pref += b.get((n - 1, m), 0)
            v = comb(m + n * d - 2, d - 1) * pref
            if v:
                b[(n, m)] = v
    return b


def lambda_factor(d: int) -> Fraction:
    """(d+1)^(d-1)/(d-1)!, the growth base of the all-heavy slice."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    return Fraction((d + 1) ** (d - 1), factorial(d - 1))


@dataclass(frozen=True)
class ETable:
    """Rescaled all-heavy slice e(N, M) = b((N+M)/2, (N-M)/2) / (lambda^(N+M)/2
    * ((N+M)/2)!^(d-1)) on the even lattice 0 <= M <= N, N+M even.

    Constructed from the b slice and then verified cell by cell against the
    two-neighbor recurrence

        e(N, M) = mu(N, M) e(N-1, M+1) + nu(N, M) e(N-1, M-1),  N >= 3,

    mu = 1 + 2(d-1)/((d+1)N + (d-1)M - 2(d+1)),
    nu = prod_{i=2..d} (1 - 2(M+i)/((d+1)(N+M))),

    with boundary e(N, -1) = 0 and e(2, M) = 0 except e(2, 0) = 1/lambda.
    A mismatch anywhere raises at construction.
    """

    d: int
    n_max: int
    entries: dict

    def e(self, N: int, M: int) -> Fraction:
        if M == -1:
            return Fraction(0)
        if M < 0 or M > N or (N + M) % 2:
            return Fraction(0)
        if (N + M) // 2 > self.n_max:
            raise ValueError(f"cell ({N}, {M}) beyond table range n_max={self.n_max}")
        return self.entries.get((N, M), Fraction(0))

    def as_float(self, N: int, M: int) -> float:
        return float(self.e(N, M))


def e_table(d: int, n_max: int) -> ETable:
    """Build and self-verify the rescaled slice up to (N+M)/2 = n_max."""
    if d < 2 or n_max < 2:
        raise ValueError("need d >= 2 and n_max >= 2")
    b = b_max_table(d, n_max)
    lam = lambda_factor(d)
    entries: dict = {}
    for n in range(1, n_max + 1):
        scale = lam**n * factorial(n) ** (d - 1)
        for m in range(1, n + 1):
            v = b.get((n, m), 0)
            if v:
                entries[(n + m, n - m)] = Fraction(v) / scale
    table = ETable(d=d, n_max=n_max, entries=entries)

    for N in range(3, 2 * n_max + 1):
        for M in range(N % 2, N + 1, 2):
            if (N + M) // 2 > n_max:
                continue
            mu = 1 + Fraction(2 * (d - 1), (d + 1) * N + (d - 1) * M - 2 * (d + 1))
            nu = Fraction(1)
            for i in range(2, d + 1):
                nu *= 1 - Fraction(2 * (M + i), (d + 1) * (N + M))
            want = mu * table.e(N - 1, M + 1) + nu * table.e(N - 1, M - 1)
            if table.e(N, M) != want:
                raise ArithmeticError(
                    f"rescaled slice recurrence fails at N={N}, M={M}: "
                    f"{table.e(N, M)} != {want}"
                )
    return table
