"""Condition (K) two ways, and why the breaking-vertex choice matters.

The direct checker classifies the simple closed paths based at each vertex by
a split-vertex reachability argument.  The second route surveys every
admissible pair (H, S) and checks Condition (L) on each quotient graph.  The
example below has a cycle whose only exits are infinitely many unnamed
parallel edges; the quotient that keeps the breaking vertex but forgets its
infinite fan (S = {w}) leaves the cycle exitless, so the choice of S is not
cosmetic.
"""

from leavitt import (
    Graph,
    check_condition_K_direct,
    check_condition_K_via_quotients,
    check_condition_L,
    count_simple_closed_paths,
    enumerate_hereditary_saturated,
    graph_to_json,
    quotient_survey,
)

g = Graph.make(["v", "w", "h"],
               [("e", "v", "w"), ("d", "w", "v")],
               {"w": {"h"}})
print("graph:", graph_to_json(g))
print("Condition (L):", check_condition_L(g).holds)

print("\n-- closed-path counts per vertex --")
for v in g.vertices:
    count = count_simple_closed_paths(g, v)
    print(" ", v, "->", count.kind,
          [p.edges for p in count.paths] if count.paths else "")

print("\n-- hereditary saturated sets --")
for h in enumerate_hereditary_saturated(g):
    print(" ", sorted(h))

print("\n-- quotient survey --")
for pair, report in quotient_survey(g):
    print("  H=%s S=%s  (L) holds: %s"
          % (sorted(pair.h), sorted(pair.s), report.holds))

print("\n-- the verdicts agree --")
print("direct:   ", check_condition_K_direct(g).to_dict())
print("quotients:", check_condition_K_via_quotients(g).to_dict())
