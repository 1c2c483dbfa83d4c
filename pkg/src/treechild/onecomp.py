"""Exact counts of one-component d-combining tree-child networks.

A d-combining tree-child network is a rooted DAG with n labeled leaves whose
root has out-degree 1, whose tree nodes have in-degree 1 and out-degree 2,
and whose reticulation nodes have in-degree d and out-degree 1, such that
every non-leaf node has at least one non-reticulation child.  It is
one-component when the child of every reticulation node is a leaf.

OTC(d, n, k) denotes the number of such one-component networks.  Two closed
forms are implemented: a single factored formula (count_otc) and the
direct-construction product (count_otc_direct).  They agree everywhere, and
the test suite pins that equivalence.

All arithmetic is arbitrary-precision integer arithmetic.  Divisions inside
the closed forms are exact; each one is guarded by an explicit remainder
check, so a wrong intermediate would raise instead of silently truncating.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .params import Params


def double_factorial(m: int) -> int:
    """m!! = m (m-2) (m-4) ...; empty product 1 for m in {-1, 0, 1}."""
    if m < -1:
        raise ValueError(f"double factorial defined for m >= -1, got {m}")
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def count_phylo_trees(n: int) -> int:
    """Number of phylogenetic trees with n labeled leaves, (2n-3)!!."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return double_factorial(2 * n - 3)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"division {num}/{den} is not exact")
    return q


def count_otc(d: int, n: int, k: int, lenient: bool = False) -> int:
    """One-component networks with n leaves and k reticulation nodes.

    Closed form: binom(n,k) (2n+(d-2)k-2)! / (d!^k 2^(n-k-1) (n-k-1)!).
    With lenient=True an out-of-range k returns 0 instead of raising.
    """
    if lenient and not 0 <= k <= n - 1:
        if d < 2 or n < 1:
            raise ValueError("d >= 2 and n >= 1 required")
        return 0
    Params(d, n, k)
    num = comb(n, k) * factorial(2 * n + (d - 2) * k - 2)
    den = factorial(d) ** k * 2 ** (n - k - 1) * factorial(n - k - 1)
    return _exact_div(num, den)


def count_otc_direct(d: int, n: int, k: int) -> int:
    """Same count by the construction steps.

    Take a phylogenetic tree on the n-k non-reticulation leaves, choose
    positions for the dk reticulation edge endpoints among the
    2(n-k)+dk-2 slots, group them into the k reticulation nodes, and pick
    which leaf labels sit below reticulations.
    """
    Params(d, n, k)
    trees = count_phylo_trees(n - k)
    num = trees * comb(2 * (n - k) + d * k - 2, d * k) * factorial(d * k) * comb(n, k)
    return _exact_div(num, factorial(d) ** k)


def count_otc_total(d: int, n: int) -> int:
    """Sum of count_otc over k = 0..n-1."""
    if d < 2 or n < 1:
        raise ValueError("d >= 2 and n >= 1 required")
    return sum(count_otc(d, n, k) for k in range(n))


@dataclass(frozen=True)
class NodeCensus:
    tree_nodes: int
    total_nodes: int
    free_tree_nodes: int


def node_census(d: int, n: int, k: int) -> NodeCensus:
    """Node counts implied by the degree constraints.

    tree_nodes counts internal tree nodes, total_nodes counts every vertex
    including root and leaves, and free_tree_nodes counts tree nodes with no
    reticulation child (their two child edges are free).
    """
    Params(d, n, k)
    return NodeCensus(
        tree_nodes=n + (d - 1) * k - 1,
        total_nodes=2 * n + d * k,
        free_tree_nodes=n - k - 1,
    )
