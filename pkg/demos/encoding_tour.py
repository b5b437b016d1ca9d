"""Tour of the graph container and its two text encodings.

Graphs are immutable bitmask-adjacency structures.  The compact graph6
encoding round-trips any graph up to 258047 vertices; the edge-list format
is the human-editable alternative.
"""

from pathfactors import (
    Graph6Error,
    complete,
    cycle,
    disjoint_union,
    emit_graph6,
    from_edges,
    join,
    parse_edge_list,
    parse_graph6,
    path,
    star,
)

print("== constructors ==")
for g, name in [(path(4), "path on 4"), (cycle(5), "cycle on 5"),
                (complete(4), "K4"), (star(4), "star, 3 leaves")]:
    print(f"{name:14s} n={g.n} m={g.m} degrees={g.degrees()} "
          f"graph6={emit_graph6(g)!r}")

print("\n== join and union build layered graphs ==")
hub_and_spokes = join(complete(1), disjoint_union(complete(3), complete(2)))
print("K1 joined with (K3 + K2):", emit_graph6(hub_and_spokes),
      "min degree", hub_and_spokes.min_degree())

print("\n== round trip ==")
code = emit_graph6(cycle(8))
back = parse_graph6(code)
print(f"{code!r} -> n={back.n}, edges={list(back.edges())}")

print("\n== strictness ==")
for bad in ("B", "Bw   trailing", "~~?"):
    try:
        parse_graph6(bad)
        print(f"{bad!r}: accepted (unexpected)")
    except Graph6Error as exc:
        print(f"{bad!r}: rejected ({type(exc).__name__}: {exc})")

print("\n== edge-list text ==")
text = """5
# a 5-cycle written by hand
0 1
1 2
2 3
3 4
4 0
"""
g = parse_edge_list(text)
print("parsed 5-cycle:", emit_graph6(g) == emit_graph6(cycle(5)))

print("\n== big orders use the long graph6 form ==")
big = from_edges(100, [(i, i + 1) for i in range(99)])
code = emit_graph6(big)
print(f"path on 100 vertices -> {len(code)} characters, "
      f"prefix {code[:4]!r}, round-trips: {parse_graph6(code) == big}")
