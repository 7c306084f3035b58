"""Endomorphism towers and principal graphs.

The alternating tensor words of a generator produce a tower of finite
dimensional algebras; recording irreducible decompositions level by level
gives a Bratteli-type diagram, and keeping each class at its first
appearance yields the principal graph.
"""

import fusionkit as fk
from fusionkit.params import ParamList

ao = fk.AoSystem(2)
diagram = fk.tower(ao, ao.fundamental(), 10)
print("levels of the 2-dimensional orthogonal tower:")
for k, level in enumerate(diagram.levels[:6]):
    text = " + ".join(f"{m}*{ao.format_label(l)}" if m > 1 else ao.format_label(l)
                      for l, m in level)
    print(f"  level {k}: {text}")
print("endomorphism dims (Catalan):", diagram.end_dims())

graph = fk.principal_graph(diagram)
print("\nprincipal graph vertices:",
      [ao.format_label(l) for l, _ in graph.vertices])
lists = fk.derive_irreducible_lists(ao, ParamList.parse(["q", "q^-1"]), 11)
fk.attach_qdim_weights(graph, lists, {"q": 1.2})
print("\nDOT export with quantum-dimension weights at q = 1.2:\n")
print(fk.export_dot(graph))
