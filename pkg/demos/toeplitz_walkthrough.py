"""The Toeplitz algebra, start to finish.

The graph has a loop c at v with an exit e to the sink w.  Its path algebra
is a Zorn ring (every nonzero element has a witness), but the quotient that
kills e is the single-loop algebra, i.e. Laurent polynomials, which is not.
"""

from leavitt import (
    Graph,
    LeavittAlgebra,
    QQ,
    check_condition_K_direct,
    check_condition_K_via_quotients,
    check_condition_L,
    graph_to_json,
    parse_element,
    quotient_graph,
    reduce_to_vertex,
    zorn_witness,
)

toeplitz = Graph.make(["v", "w"], [("c", "v", "v"), ("e", "v", "w")])
print("Toeplitz graph:", graph_to_json(toeplitz))

print("\n-- conditions --")
print("Condition (L):", check_condition_L(toeplitz).holds)
print("Condition (K), direct:", check_condition_K_direct(toeplitz).to_dict())
print("Condition (K), via quotients:",
      check_condition_K_via_quotients(toeplitz).to_dict())

print("\n-- the quotient that kills the exit --")
q = quotient_graph(toeplitz, {"w"})
print("quotient at H={w}:", graph_to_json(q.graph))
print("Condition (L) downstairs:", check_condition_L(q.graph).holds)

print("\n-- witnesses upstairs --")
alg = LeavittAlgebra(toeplitz, QQ)
a = parse_element(alg, "v - c")
cert = reduce_to_vertex(a)
print("reduce v - c:", cert.to_dict())
w = zorn_witness(a)
print("witness b =", w.b, " ab =", w.idem)
print("checks: (ab)^2 = ab:", w.idem * w.idem == w.idem,
      " bab = b:", w.b * alg.element(a.terms()) * w.b == w.b)

print("\n-- no witness downstairs --")
loop_alg = LeavittAlgebra(q.graph, QQ)
b = parse_element(loop_alg, "v - c")
print("reduce v - c in the quotient:", reduce_to_vertex(b).to_dict())
