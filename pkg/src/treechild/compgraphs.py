"""Component graphs, the blow-up count, and generating-function routes.

Collapsing each tree component of a tree-child network to a single node
leaves a labeled multigraph: a rooted DAG in which every non-root node has
in-degree exactly d (one labeled node per tree component, k+1 nodes for k
reticulations).  Conversely every network arises by blowing the nodes of
such a graph back up into small trees, which yields a second, completely
independent algorithm for the network counts: sum over set partitions of
the leaves and over component graphs of a product of per-node factors.

This module implements that route end to end:

  enumerate_component_graphs  literal generation (oracle)
  count_component_graphs      recurrence on (node count, sink count)
  count_tc_compgraph          the blow-up double sum
  count_star                  the sub-sum over star graphs only

plus a generating-function route for k = 1 and k = 2 built on a small
Laurent-polynomial calculus in X = sqrt(1-4z), its closed forms for
d in {2, 3}, and the fixed-k first-order asymptotic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb, factorial, lgamma, log, pi
from typing import Iterator

from .logvalue import LogValue
from .onecomp import _exact_div, double_factorial
from .params import Params

DEFAULT_GRAPH_CEILING = 4
DEFAULT_BLOWUP_N_CEILING = 8
DEFAULT_BLOWUP_K_CEILING = 3


@dataclass(frozen=True)
class ComponentGraph:
    """Labeled multi-edge DAG on nodes 1..m (stored 0-based).

    mult[u][v] is the number of parallel edges from node u+1 to node v+1.
    The root has in-degree 0; every other node has in-degree exactly d.
    """

    m: int
    root: int
    mult: tuple[tuple[int, ...], ...]

    def in_degree(self, v: int) -> int:
        return sum(self.mult[u][v] for u in range(self.m))

    def out_degree(self, u: int) -> int:
        return sum(self.mult[u])

    def sinks(self) -> list[int]:
        """Nodes with out-degree 0; the recurrence stratifies by their count."""
        return [v for v in range(self.m) if self.out_degree(v) == 0]


def _is_acyclic(m: int, mult) -> bool:
    indeg = [0] * m
    for u in range(m):
        for v in range(m):
            if mult[u][v]:
                indeg[v] += 1
    stack = [v for v in range(m) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in range(m):
            if mult[u][v]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    stack.append(v)
    return seen == m


def enumerate_component_graphs(
    d: int, m: int, ceiling: int = DEFAULT_GRAPH_CEILING
) -> Iterator[ComponentGraph]:
    """Yield every component graph on m labeled nodes exactly once.

    Every choice of root and of a d-multiset of parents for each non-root
    node is generated; the acyclic ones survive.  Exponential in m, hence
    the ceiling.
    """
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    if m > ceiling:
        raise ValueError(f"m={m} exceeds the enumeration ceiling {ceiling}")
    nodes = range(m)
    for root in nodes:
        others = [v for v in nodes if v != root]
        per_node = [
            list(combinations_with_replacement([u for u in nodes if u != v], d))
            for v in others
        ]
        for pick in product(*per_node):
            mult = [[0] * m for _ in range(m)]
            for v, parents in zip(others, pick):
                for u in parents:
                    mult[u][v] += 1
            if _is_acyclic(m, mult):
                yield ComponentGraph(
                    m=m, root=root, mult=tuple(tuple(r) for r in mult)
                )


@lru_cache(maxsize=None)
def _count_graphs(d: int, m: int, s: int) -> int:
    # k(m, s) = sum_t binom(m,s) beta(m,s,t) k(m-s, t), t up to m-s;
    # beta(m,s,t) = sum_l (-1)^l binom(t,l) binom(m-s-l+d-1, d)^s
    if m == 1:
        return 1 if s == 1 else 0
    if not 1 <= s <= m - 1:
        return 0
    total = 0
    for t in range(1, m - s + 1):
        beta = sum(
            (-1) ** l * comb(t, l) * comb(m - s - l + d - 1, d) ** s
            for l in range(t + 1)
        )
        total += comb(m, s) * beta * _count_graphs(d, m - s, t)
    return total


def count_component_graphs(d: int, m: int, s: int) -> int:
    """Component graphs on m labeled nodes with exactly s sinks."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if m < 1 or not 1 <= s <= max(m - 1, 1):
        raise ValueError(f"need m >= 1 and 1 <= s <= max(m-1, 1), got m={m}, s={s}")
    return _count_graphs(d, m, s)


def count_component_graphs_total(d: int, m: int) -> int:
    """All component graphs on m labeled nodes."""
    return sum(count_component_graphs(d, m, s) for s in range(1, max(m - 1, 1) + 1))


def _partitions_by_rank(universe: list, blocks: int) -> Iterator[list]:
    """Set partitions into a fixed block count, blocks ordered by smallest
    element (elements are consumed in increasing order, so a block's
    position equals the rank of its minimum)."""
    n = len(universe)

    def rec(i: int, parts: list) -> Iterator[list]:
        if i == n:
            if len(parts) == blocks:
                yield parts
            return
        if len(parts) + (n - i) < blocks:
            return
        for p in parts:
            p.append(universe[i])
            yield from rec(i + 1, parts)
            p.pop()
        if len(parts) < blocks:
            parts.append([universe[i]])
            yield from rec(i + 1, parts)
            parts.pop()

    yield from rec(0, [])


def count_tc_compgraph(
    p: Params,
    n_ceiling: int = DEFAULT_BLOWUP_N_CEILING,
    k_ceiling: int = DEFAULT_BLOWUP_K_CEILING,
) -> int:
    """Tree-child networks counted by the blow-up over component graphs.

    Sum over partitions of the leaf set into k+1 blocks (block j hosting
    tree component j, indexed by rank of the block's smallest element) and
    over component graphs G on k+1 nodes of

        prod_j (2 b_j + g_j - 2)! / ((b_j - 1)! prod_l g_{j,l}!)

    with b_j the block size, g_{j,l} the edge multiplicity j -> l and g_j
    the out-degree, all divided by 2^(n-k-1).  Must agree with the word
    route; the test suite pins that.
    """
    d, n, k = p.d, p.n, p.k
    if n > n_ceiling or k > k_ceiling:
        raise ValueError(
            f"(n={n}, k={k}) exceeds blow-up ceilings ({n_ceiling}, {k_ceiling})"
        )
    m = k + 1
    graphs = list(enumerate_component_graphs(d, m, ceiling=max(m, DEFAULT_GRAPH_CEILING)))
    # factor products depend on the partition only through block sizes
    cache: dict[tuple, int] = {}
    total = 0
    for part in _partitions_by_rank(list(range(1, n + 1)), m):
        sizes = tuple(len(b) for b in part)
        got = cache.get(sizes)
        if got is None:
            got = 0
            for g in graphs:
                prod = 1
                for j in range(m):
                    gj = g.out_degree(j)
                    den = factorial(sizes[j] - 1)
                    for l in range(m):
                        den *= factorial(g.mult[j][l])
                    prod *= _exact_div(factorial(2 * sizes[j] + gj - 2), den)
                got += prod
            cache[sizes] = got
        total += got
    return _exact_div(total, 2 ** (n - k - 1))


def count_star(p: Params) -> int:
    """Networks whose component graph is a star (all reticulations hang
    directly off the root component).

    n!/((d!)^k 2^(n-k-1) (k-1)!) times
    sum_j (2j+dk-2)!/(j!(j-1)!) * (2n-k-2j-1)!/((n-k-j)!(n-j)!).

    Equals the full count for k = 1 and is a lower bound in general.
    """
    d, n, k = p.d, p.n, p.k
    if k < 1:
        raise ValueError("star counts need k >= 1")
    s = Fraction(0)
    for j in range(1, n - k + 1):
        s += Fraction(
            factorial(2 * j + d * k - 2), factorial(j) * factorial(j - 1)
        ) * Fraction(
            factorial(2 * n - k - 2 * j - 1), factorial(n - k - j) * factorial(n - j)
        )
    v = Fraction(factorial(n), factorial(d) ** k * 2 ** (n - k - 1) * factorial(k - 1)) * s
    if v.denominator != 1:
        raise ArithmeticError(f"star count not integral at {p}")
    return int(v)


# ---------------------------------------------------------------------------
# Laurent calculus in X = sqrt(1-4z)


class LaurentPoly:
    """Finitely supported exact-rational Laurent polynomial in X."""

    def __init__(self, coefficients=None):
        self.coefficients = {
            e: Fraction(v) for e, v in (coefficients or {}).items() if v
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coefficients == other.coefficients

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        r = dict(self.coefficients)
        for e, v in other.coefficients.items():
            r[e] = r.get(e, Fraction(0)) + v
        return LaurentPoly(r)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        r: dict[int, Fraction] = {}
        for e1, v1 in self.coefficients.items():
            for e2, v2 in other.coefficients.items():
                r[e1 + e2] = r.get(e1 + e2, Fraction(0)) + v1 * v2
        return LaurentPoly(r)

    def scale(self, a) -> "LaurentPoly":
        return LaurentPoly({e: v * Fraction(a) for e, v in self.coefficients.items()})

    def derivative(self) -> "LaurentPoly":
        """d/dX."""
        return LaurentPoly(
            {e - 1: v * e for e, v in self.coefficients.items() if e}
        )

    def __repr__(self) -> str:
        terms = ", ".join(f"{e}: {v}" for e, v in sorted(self.coefficients.items()))
        return f"LaurentPoly({{{terms}}})"


def f_laurent(d: int) -> LaurentPoly:
    """The d-th derived series f_d with f_0 = 1/2 - X/2 and
    f_d = (-1/X + X) f_{d-1}' + (d-2) f_{d-1}."""
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")
    f = LaurentPoly({0: Fraction(1, 2), 1: Fraction(-1, 2)})
    for step in range(1, d + 1):
        f = LaurentPoly({-1: Fraction(-1), 1: Fraction(1)}) * f.derivative() + f.scale(
            step - 2
        )
    return f


def _coef_sqrt_power(e: int, n: int) -> Fraction:
    """[z^n] (1-4z)^(e/2) by the generalized binomial series."""
    top = Fraction(e, 2)
    b = Fraction(1)
    for i in range(n):
        b *= (top - i) / (i + 1)
    return b * (-4) ** n


def _coef_negative_odd(m: int, n: int) -> Fraction:
    """[z^n] X^(-m) for odd m >= 1."""
    h = (m - 1) // 2
    return Fraction(comb(n + h, h) * comb(2 * n + m - 1, n + h), comb(m - 1, h))


def _coef_negative_rising(m: int, n: int) -> Fraction:
    """[z^n] X^(-m) as the rising product m(m+2)...(m+2n-2) 2^n / n!."""
    prod = 1
    for i in range(n):
        prod *= m + 2 * i
    return Fraction(prod * 2**n, factorial(n))


def _coef_negative_even(m: int, n: int) -> Fraction:
    """[z^n] X^(-m) for even m >= 2."""
    return Fraction(4**n * comb(n + (m - 2) // 2, (m - 2) // 2))


def z_coefficient(poly: LaurentPoly, n: int) -> Fraction:
    """[z^n] of the polynomial under X = sqrt(1-4z), exact."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    total = Fraction(0)
    for e, v in poly.coefficients.items():
        if e >= 0:
            total += v * _coef_sqrt_power(e, n)
        elif e % 2:
            total += v * _coef_negative_odd(-e, n)
        else:
            total += v * _coef_negative_even(-e, n)
    return total


def count_tc_genfun_k1(d: int, n: int) -> int:
    """TC(n, 1) = n!/(d! 2^(n-2)) [z^n] f_d f_0."""
    if d < 2 or n < 2:
        raise ValueError("need d >= 2 and n >= 2")
    v = Fraction(factorial(n), factorial(d) * 2 ** (n - 2)) * z_coefficient(
        f_laurent(d) * f_laurent(0), n
    )
    if v.denominator != 1:
        raise ArithmeticError(f"k=1 series count not integral at d={d}, n={n}")
    return int(v)


def count_tc_genfun_k2(d: int, n: int, form: str = "direct") -> int:
    """TC(n, 2) from the series route.

    form="direct":
        n!/(d! 2^(n-3)) sum_{l=0..d} [z^n] f_{2d-l} f_l f_0 / ((d-l)! l!)
        - n!/(d!^2 2^(n-2)) [z^n] f_{2d} f_0^2
    form="merged" folds the l = 0 term into the correction (the two are
    algebraically equal; both stay available so tests can pin that).
    """
    if d < 2 or n < 3:
        raise ValueError("need d >= 2 and n >= 3")
    f0 = f_laurent(0)
    corr = z_coefficient(f_laurent(2 * d) * f0 * f0, n)
    if form == "direct":
        s = Fraction(0)
        for l in range(0, d + 1):
            s += Fraction(1, factorial(d - l) * factorial(l)) * z_coefficient(
                f_laurent(2 * d - l) * f_laurent(l) * f0, n
            )
        v = Fraction(factorial(n), factorial(d) * 2 ** (n - 3)) * s - Fraction(
            factorial(n), factorial(d) ** 2 * 2 ** (n - 2)
        ) * corr
    elif form == "merged":
        s = Fraction(0)
        for l in range(1, d + 1):
            s += Fraction(1, factorial(d - l) * factorial(l)) * z_coefficient(
                f_laurent(2 * d - l) * f_laurent(l) * f0, n
            )
        v = Fraction(factorial(n), factorial(d) * 2 ** (n - 3)) * s + Fraction(
            factorial(n), factorial(d) ** 2 * 2 ** (n - 2)
        ) * corr
    else:
        raise ValueError(f"unknown form {form!r}")
    if v.denominator != 1:
        raise ArithmeticError(f"k=2 series count not integral at d={d}, n={n}")
    return int(v)


def tc_k1_closed_form(d: int, n: int) -> int:
    """Closed forms for TC(n, 1), available for d in {2, 3}."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if d == 2:
        return n * (double_factorial(2 * n - 1) - double_factorial(2 * n - 2))
    if d == 3:
        v = Fraction(n * (2 * n + 1), 3) * double_factorial(
            2 * n - 1
        ) - n * n * double_factorial(2 * n - 2)
        if v.denominator != 1:
            raise ArithmeticError(f"closed form not integral at n={n}")
        return int(v)
    raise ValueError(f"no k=1 closed form implemented for d={d}")


def tc_k2_closed_form(d: int, n: int) -> int:
    """Closed forms for TC(n, 2), available for d in {2, 3}."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if d == 2:
        v = n * (n - 1) * (
            Fraction(3 * n + 2, 3) * double_factorial(2 * n - 1)
            - double_factorial(2 * n)
        )
    elif d == 3:
        v = n * (n - 1) * (
            Fraction(70 * n * n + 244 * n + 177, 315) * double_factorial(2 * n + 1)
            - Fraction(16 * n + 13, 48) * double_factorial(2 * n + 2)
        )
    else:
        raise ValueError(f"no k=2 closed form implemented for d={d}")
    if v.denominator != 1:
        raise ArithmeticError(f"closed form not integral at n={n}")
    return int(v)


def structural_k1_polynomial(d: int) -> list[Fraction]:
    """Coefficients (ascending) of the degree d-1 polynomial p with
    TC(n, 1) = binom(2n+d-2, d) (2n-3)!! - p(n) (2n-2)!!.

    Fits p through d+1 sample points, checks the degree really is d-1, and
    verifies d+2 further points; any failure raises.
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")

    def p_value(n: int) -> Fraction:
        return Fraction(
            comb(2 * n + d - 2, d) * double_factorial(2 * n - 3)
            - count_tc_genfun_k1(d, n),
            double_factorial(2 * n - 2),
        )

    xs = list(range(2, 2 + d + 1))
    coeffs = [Fraction(0)] * len(xs)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                new[t + 1] += c
                new[t] -= xj * c
            basis = new
            denom *= xi - xj
        yi = p_value(xi)
        for t, c in enumerate(basis):
            coeffs[t] += yi * c / denom
    if coeffs[-1] != 0:
        raise ArithmeticError(f"fitted polynomial has degree {d}, expected {d - 1}")
    coeffs = coeffs[:-1]

    def evaluate(x: int) -> Fraction:
        r = Fraction(0)
        for c in reversed(coeffs):
            r = r * x + c
        return r

    for n in range(2 + d + 1, 2 + d + 1 + d + 2):
        if evaluate(n) != p_value(n):
            raise ArithmeticError(f"polynomial fails to extrapolate at n={n}")
    return coeffs


def asympt_tc_fixed_k(d: int, n: int, k: int) -> LogValue:
    """First-order count for fixed k as n grows:
    2^(dk-1)/((d!)^k k! sqrt(pi)) n! 2^n n^(dk-3/2), in log space."""
    if d < 2 or k < 0 or n < 1:
        raise ValueError("need d >= 2, k >= 0, n >= 1")
    ln = (
        (d * k - 1) * log(2.0)
        - k * lgamma(d + 1)
        - lgamma(k + 1)
        - 0.5 * log(pi)
        + lgamma(n + 1)
        + n * log(2.0)
        + (d * k - 1.5) * log(n)
    )
    return LogValue(ln)
