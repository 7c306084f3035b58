import pytest

import fusionkit as fk
from fusionkit import FusionElement
from fusionkit.params import ParamList


def test_tower_depth_one(ao3):
    u = fk.parse_element(ao3, "r2 + r3")
    d = fk.tower(ao3, u, 1)
    assert d.levels[0] == [(ao3.unit, 1)]
    assert d.levels[1] == [(ao3.r(2), 1), (ao3.r(3), 1)]
    assert d.inclusions[0] == [[1, 1]]


def test_tower_ao2_catalan(ao2):
    d = fk.tower(ao2, ao2.fundamental(), 10)
    assert d.end_dims() == [fk.catalan(k) for k in range(11)]
    # levels follow the interval rule: r2; r1+r3; 2r2+r4; ...
    assert d.levels[1] == [(ao2.r(2), 1)]
    assert d.levels[2] == [(ao2.r(1), 1), (ao2.r(3), 1)]
    assert d.levels[3] == [(ao2.r(2), 2), (ao2.r(4), 1)]


def test_tower_dual_of_z(zdual):
    g = FusionElement({zdual.parse_label("g1"): 1})
    d = fk.tower(zdual, g, 6)
    for k, level in enumerate(d.levels):
        assert len(level) == 1 and level[0][1] == 1
        expect = zdual.unit if k % 2 == 0 else zdual.parse_label("g1")
        assert level[0][0] == expect
    assert d.end_dims() == [1] * 7


def test_end_dims_match_frobenius(ao3, au2):
    # sum of squared multiplicities at level k = mult(unit, w (x) conj(w))
    for sys, u in ((ao3, ao3.fundamental()), (au2, au2.fundamental())):
        d = fk.tower(sys, u, 6)
        ubar = sys.conj_element(u)
        word = sys.unit_element()
        for k in range(1, 7):
            word = sys.tensor(word, u if k % 2 else ubar)
            pairing = sys.tensor(word, sys.conj_element(word))
            assert d.end_dims()[k] == pairing.mult(sys.unit)


def test_principal_graph_ao2_path(ao2):
    g = fk.principal_graph(fk.tower(ao2, ao2.fundamental(), 10))
    assert len(g.vertices) == 11
    assert [lev for _, lev in g.vertices] == list(range(11))
    assert len(g.edges) == 10
    assert all(m == 1 for _, _, m in g.edges)
    assert g.is_connected()
    assert g.is_bipartite_by_level()
    # a path: inner vertices have degree 2
    degs = sorted(g.degree(v) for v, _ in g.vertices)
    assert degs == [1, 1] + [2] * 9


def test_principal_graph_dual_of_z(zdual):
    g1 = FusionElement({zdual.parse_label("g1"): 1})
    graph = fk.principal_graph(fk.tower(zdual, g1, 8))
    assert len(graph.vertices) == 2
    assert len(graph.edges) == 1
    sym = fk.parse_element(zdual, "g1 + g1^-1")
    graph = fk.principal_graph(fk.tower(zdual, sym, 5))
    names = sorted(zdual.format_label(v) for v, _ in graph.vertices)
    assert names == sorted(
        ["e"] + [f"g1^{k}" if abs(k) > 1 else ("g1" if k == 1 else "g1^-1")
                 for k in range(-5, 6) if k])
    assert graph.is_connected()


def test_unit_vertex_degree(ao3, aut4):
    for sys, u in ((ao3, fk.parse_element(ao3, "r2 + r3")),
                   (aut4, fk.fundamental(aut4))):
        g = fk.principal_graph(fk.tower(sys, u, 6))
        non_unit = len({lab for lab in u.support() if lab != sys.unit})
        assert g.degree(sys.unit) == non_unit


def test_graph_invariant_under_relabeling(ao2):
    class Doubled(fk.FusionSystem):
        def __init__(self, base):
            super().__init__(base.family_id + "#x2")
            self.base = base
            self._unit = self.label(2)

        def validate_payload(self, payload):
            return payload

        def _tensor_irr(self, a, b):
            prod = self.base.tensor_pair(self.base.label(a.payload // 2),
                                         self.base.label(b.payload // 2))
            return fk.FusionElement({self.label(c.payload * 2): m for c, m in prod.items()})

        def conj_irr(self, a):
            return a

        def dim_irr(self, a):
            return self.base.dim_irr(self.base.label(a.payload // 2))

        def sort_key(self, label):
            return label.payload

        def format_label(self, a):
            return f"v{a.payload}"

    doubled = Doubled(ao2)
    g1 = fk.principal_graph(fk.tower(ao2, ao2.fundamental(), 8))
    g2 = fk.principal_graph(
        fk.tower(doubled, fk.FusionElement({doubled.label(4): 1}), 8))
    relabeled_vertices = {(v.payload * 2, lev) for v, lev in g1.vertices}
    assert relabeled_vertices == {(v.payload, lev) for v, lev in g2.vertices}
    e1 = {(a.payload * 2, b.payload * 2, m) for a, b, m in g1.edges}
    e2 = {(a.payload, b.payload, m) for a, b, m in g2.edges}
    assert e1 == e2


def test_export_dot(ao2):
    g = fk.principal_graph(fk.tower(ao2, ao2.fundamental(), 10))
    dot = fk.export_dot(g)
    assert dot.startswith("graph principal {")
    assert dot.rstrip().endswith("}")
    assert dot.count("--") == 10
    assert dot.count("[label=") >= 11
    empty = fk.WeightedGraph(system=ao2, vertices=[], edges=[])
    text = fk.export_dot(empty)
    assert text == "graph principal {\n}\n"


def test_export_dot_with_weights(ao2):
    lists = fk.derive_irreducible_lists(ao2, ParamList.parse(["q", "q^-1"]), 11)
    g = fk.principal_graph(fk.tower(ao2, ao2.fundamental(), 10))
    fk.attach_qdim_weights(g, lists, {"q": 1.0})
    dot = fk.export_dot(g)
    # at q = 1 the quantum integers collapse to the dimensions
    assert '"r3" [label="r3\\n[3.0]"' in dot
    assert g.weights[ao2.r(5)] == pytest.approx(5.0)


def test_tower_bad_depth(ao2):
    with pytest.raises(fk.FusionError):
        fk.tower(ao2, ao2.fundamental(), 0)
