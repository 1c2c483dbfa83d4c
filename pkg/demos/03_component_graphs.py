"""Component graphs: the structural route to the same counts.

Deleting the reticulation nodes of a tree-child network leaves a forest of
tree components; recording which components feed each reticulation gives a
labeled multi-edge DAG in which every non-root node has in-degree exactly
d.  Counting those DAGs by number of sinks, then blowing each one back up
into networks, recounts TC(n, k) with completely different combinatorics
from the word recurrence.

Star-shaped component graphs (every reticulation hangs off the root
component) have their own closed form.
"""
from treechild import (
    Params,
    count_component_graphs,
    count_component_graphs_total,
    count_star,
    count_tc_compgraph,
    count_tc_words,
    enumerate_component_graphs,
)


def main() -> None:
    print("Component graphs on m nodes for d = 2, split by sink count:")
    for m in range(1, 5):
        parts = [
            f"s={s}: {count_component_graphs(2, m, s)}"
            for s in range(1, max(m, 2))
        ]
        total = count_component_graphs_total(2, m)
        print(f"  m = {m}: {', '.join(parts)} (total {total})")

    print()
    print("A small catalog, m = 2, d = 3:")
    for g in enumerate_component_graphs(3, 2):
        print(f"  root {g.root + 1}, edges {g.mult}, sinks {[s + 1 for s in g.sinks()]}")

    print()
    print("Blow-up counting agrees with the word recurrence:")
    for d, n, k in ((2, 6, 3), (3, 5, 2)):
        p = Params(d, n, k)
        blow = count_tc_compgraph(p)
        fast = count_tc_words(p)
        print(f"  d={d}, n={n}, k={k}: blow-up {blow}, words {fast}")
        assert blow == fast

    print()
    print("Star-shaped component graphs only:")
    for d, n, k in ((2, 4, 2), (2, 5, 2), (3, 5, 2)):
        print(f"  d={d}, n={n}, k={k}: {count_star(Params(d, n, k))}")


if __name__ == "__main__":
    main()
