"""Self-verification suites: regression tables and cross-method identities.

Each suite replays one of the package's consistency guarantees and returns
structured results instead of raising, so the command line can stream them
and exit nonzero on any failure:

  golden-tables   the word-recurrence counts against frozen reference
                  tables for d = 2..6
  cross-method    word route vs blow-up route vs series route vs closed
                  forms, on overlapping domains
  oracle          definition-level word counting vs the recurrence
  inequalities    the interlacing chain, its d = 2 equality case, and the
                  two-sided d = 2 sandwich; the sqrt(e) ratio bound
  sackin          path-length closed form vs recurrence vs unary-binary
                  factorization

The frozen tables double as the package's regression fixtures: they were
tabulated independently before the library existed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compgraphs import (
    count_component_graphs_total,
    count_tc_compgraph,
    count_tc_genfun_k1,
    count_tc_genfun_k2,
    enumerate_component_graphs,
    tc_k1_closed_form,
    tc_k2_closed_form,
)
from .asymptotics import e_lower_bound, ratio_sqrt_e
from .onecomp import _exact_div, count_otc, count_otc_direct, count_phylo_trees
from .params import Params
from .pathlength import (
    expected_path_length,
    path_length_total,
    path_length_total_recurrence,
    unary_binary_path_length,
)
from .words import count_tc_words, count_words, count_words_direct, tc_table
from math import factorial


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


# Frozen regression fixtures: rows n -> [count at k = 0, 1, ..., n-1].
GOLDEN_TC = {
    2: {
        2: [1, 2],
        3: [3, 21, 42],
        4: [15, 228, 1272, 2544],
        5: [105, 2805, 30300, 154500, 309000],
        6: [945, 39330, 696600, 6494400, 31534200, 63068400],
        7: [10395, 623385, 16418430, 241204950, 2068516800, 9737380800,
            19474761600],
        8: [135135, 11055240, 405755280, 8609378400, 113376463200,
            920900131200, 4242782275200, 8485564550400],
    },
    3: {
        2: [1, 2],
        3: [3, 33, 150],
        4: [15, 492, 7908, 55320],
        5: [105, 7725, 291420, 6179940, 57939000],
        6: [945, 132030, 9603270, 430105320, 11292075000, 132120450000],
        7: [10395, 2471805, 307525050, 24586633890, 1284266876760,
            40079165452200, 560319972030000],
    },
    4: {
        2: [1, 2],
        3: [3, 48, 546],
        4: [15, 942, 45132, 1243704],
        5: [105, 18375, 2394360, 227116260, 11351644920],
        6: [945, 375705, 107314200, 23919407460, 3724353682560,
            291451508298720],
    },
    5: {
        2: [1, 2],
        3: [3, 66, 2016],
        4: [15, 1650, 242496, 28710864],
        5: [105, 39135, 17566470, 7876446840, 2307919133520],
    },
    6: {
        2: [1, 2],
        3: [3, 87, 7524],
        4: [15, 2700, 1246740, 676431360],
        5: [105, 76515, 118491090, 262058953860, 483098464854720],
    },
}


def suite_golden_tables(d: int | None = None, n_max: int | None = None):
    """Word-recurrence counts against every frozen table entry."""
    results = []
    for dv, table in sorted(GOLDEN_TC.items()):
        if d is not None and dv != d:
            continue
        rows = {n: v for n, v in table.items() if n_max is None or n <= n_max}
        if not rows:
            continue
        computed = tc_table(dv, max(rows))
        bad = []
        checked = 0
        for n, wants in sorted(rows.items()):
            for k, want in enumerate(wants):
                checked += 1
                if computed[n][k] != want:
                    bad.append((n, k, computed[n][k], want))
        results.append(
            CheckResult(
                name=f"golden-tables d={dv}",
                passed=not bad,
                details=f"{checked} entries"
                + (f"; first mismatch {bad[0]}" if bad else ""),
            )
        )
    return results


def suite_cross_method(d: int | None = None, n_max: int | None = None):
    """words == blow-up (n <= 6, k <= 3); series == closed forms == words
    for k = 1, 2 up to n = 12; both series forms equal."""
    results = []
    d_values = [d] if d is not None else [2, 3]
    blow_n = min(n_max or 6, 6)
    for dv in d_values:
        bad = []
        checked = 0
        for n in range(1, blow_n + 1):
            for k in range(0, min(4, n)):
                checked += 1
                p = Params(dv, n, k)
                a = count_tc_words(p)
                b = count_tc_compgraph(p)
                if a != b:
                    bad.append((n, k, a, b))
        results.append(
            CheckResult(
                name=f"words-vs-compgraph d={dv}",
                passed=not bad,
                details=f"{checked} cells"
                + (f"; first mismatch {bad[0]}" if bad else ""),
            )
        )
    series_n = min(n_max or 12, 12)
    for dv in d_values:
        bad = []
        checked = 0
        for n in range(2, series_n + 1):
            want = count_tc_words(Params(dv, n, 1))
            for got in (
                count_tc_genfun_k1(dv, n),
                tc_k1_closed_form(dv, n) if dv in (2, 3) else want,
            ):
                checked += 1
                if got != want:
                    bad.append((n, 1, got, want))
        for n in range(3, series_n + 1):
            want = count_tc_words(Params(dv, n, 2))
            for got in (
                count_tc_genfun_k2(dv, n),
                count_tc_genfun_k2(dv, n, form="merged"),
                tc_k2_closed_form(dv, n) if dv in (2, 3) else want,
            ):
                checked += 1
                if got != want:
                    bad.append((n, 2, got, want))
        results.append(
            CheckResult(
                name=f"series-and-closed-forms d={dv}",
                passed=not bad,
                details=f"{checked} comparisons"
                + (f"; first mismatch {bad[0]}" if bad else ""),
            )
        )
    return results


def suite_oracle(d: int | None = None, n_max: int | None = None):
    """Definition-level counting against the recurrence, and the literal
    graph enumeration against the graph recurrence."""
    results = []
    d_values = [d] if d is not None else [2, 3, 4]
    top = min(n_max or 5, 5)
    for dv in d_values:
        bad = []
        checked = 0
        for n in range(1, top + 1):
            for k in range(0, n + 1):
                checked += 1
                got = count_words_direct(dv, n, k)
                want = count_words(dv, n, k)
                if got != want:
                    bad.append((n, k, got, want))
        results.append(
            CheckResult(
                name=f"word-definition-vs-recurrence d={dv}",
                passed=not bad,
                details=f"{checked} classes"
                + (f"; first mismatch {bad[0]}" if bad else ""),
            )
        )
    for dv in d_values:
        if dv > 3:
            continue
        bad = []
        for m in range(1, 5):
            got = sum(1 for _ in enumerate_component_graphs(dv, m))
            want = count_component_graphs_total(dv, m)
            if got != want:
                bad.append((m, got, want))
        results.append(
            CheckResult(
                name=f"graph-enumeration-vs-recurrence d={dv}",
                passed=not bad,
                details="m <= 4" + (f"; first mismatch {bad[0]}" if bad else ""),
            )
        )
    return results


def suite_inequalities(d: int | None = None, n_max: int | None = None):
    """Interlacing chain, its d = 2 equality case, the two-sided d = 2
    sandwich, and the sqrt(e) ratio certificate."""
    results = []
    d_values = [d] if d is not None else [2, 3]
    for dv in d_values:
        top = n_max or (25 if dv == 2 else 12)
        table = tc_table(dv, top)
        bad = []
        for n in range(2, top + 1):
            row = table[n]
            for k in range(n - 1):
                if row[k] * 2 * (n - k - 1) > row[k + 1]:
                    bad.append(("chain", n, k))
            if dv == 2 and n >= 3 and row[n - 2] * 2 != row[n - 1]:
                bad.append(("equality", n, n - 2))
        results.append(
            CheckResult(
                name=f"interlacing-chain d={dv}",
                passed=not bad,
                details=f"n <= {top}" + (f"; first failure {bad[0]}" if bad else ""),
            )
        )
        if dv == 2:
            sandwich_top = min(top, 12)
            bad = []
            for n in range(2, sandwich_top + 1):
                row = table[n]
                for k in range(1, n):
                    lower = Fraction(n - k, k * (3 * n - k - 3)) * row[n - k]
                    upper = Fraction(row[n - k], 2 * k)
                    if not lower <= row[n - 1 - k] <= upper:
                        bad.append((n, k))
            results.append(
                CheckResult(
                    name="two-sided-sandwich d=2",
                    passed=not bad,
                    details=f"n <= {sandwich_top}"
                    + (f"; first failure {bad[0]}" if bad else ""),
                )
            )
            e_lo = e_lower_bound()
            bad = []
            for n in range(2, top + 1):
                r = Fraction(sum(table[n]), table[n][n - 1])
                if not (1 <= r and r * r <= e_lo):
                    bad.append((n, r))
            results.append(
                CheckResult(
                    name="total-over-max-ratio in [1, sqrt(e)] d=2",
                    passed=not bad,
                    details=f"n <= {top}" + (f"; first failure {bad[0]}" if bad else ""),
                )
            )
    return results


def suite_sackin(d: int | None = None, n_max: int | None = None):
    """Path-length closed form vs recurrence vs factorization, plus the
    small anchored values."""
    results = []
    d_values = [d] if d is not None else [2, 3, 4, 5, 6]
    top = min(n_max or 25, 25)
    for dv in d_values:
        bad = []
        checked = 0
        for n in range(1, top + 1):
            for k in range(n):
                checked += 1
                closed = path_length_total(dv, n, k)
                if closed != path_length_total_recurrence(dv, n, k):
                    bad.append(("recurrence", n, k))
                    continue
                multinomial = _exact_div(
                    factorial(dv * k), factorial(dv) ** k
                )
                if closed != multinomial * unary_binary_path_length(n - k, dv * k):
                    bad.append(("factorization", n, k))
        results.append(
            CheckResult(
                name=f"path-length identities d={dv}",
                passed=not bad,
                details=f"{checked} cells"
                + (f"; first failure {bad[0]}" if bad else ""),
            )
        )
    anchors = [
        ("path_length_total(2,2,0) == 5", path_length_total(2, 2, 0) == 5),
        ("unary_binary_path_length(2,0) == 5", unary_binary_path_length(2, 0) == 5),
        (
            "expected_path_length(2,2) == 17/3",
            expected_path_length(2, 2) == Fraction(17, 3),
        ),
    ]
    for name, ok in anchors:
        results.append(CheckResult(name=name, passed=bool(ok)))
    return results


SUITES = {
    "golden-tables": suite_golden_tables,
    "cross-method": suite_cross_method,
    "oracle": suite_oracle,
    "inequalities": suite_inequalities,
    "sackin": suite_sackin,
}


def run_suite(name: str, d: int | None = None, n_max: int | None = None):
    """Dispatch a suite by name; deterministic and idempotent."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return fn(d=d, n_max=n_max)
