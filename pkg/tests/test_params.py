import math
from fractions import Fraction

import pytest

import fusionkit as fk
from fusionkit import ExponentLattice, Param, ParamList


def test_param_algebra():
    q = Param.generator("q")
    assert q * q.inv() == Param.one()
    assert (q ** 2) * (q ** Fraction(-1, 2)) == Param.generator("q", Fraction(3, 2))
    assert Param.one().is_one()
    assert Param.from_rational(Fraction(4)) == Param.from_rational(2) ** 2
    assert Param.from_rational(Fraction(1, 2)) == Param.from_rational(2) ** -1
    assert Param.from_rational(12) == Param.from_rational(4) * Param.from_rational(3)
    with pytest.raises(fk.FusionError):
        Param.from_rational(Fraction(-2))


def test_param_parse_and_str():
    assert Param.parse("q^2*r^-1") == Param.generator("q", 2) * Param.generator("r", -1)
    assert Param.parse("2^1/2") == Param.from_rational(2, Fraction(1, 2))
    assert Param.parse("1") == Param.one()
    assert Param.parse(str(Param.parse("q^-3/2"))) == Param.parse("q^-3/2")
    with pytest.raises(fk.FusionError):
        Param.parse("q^^2")


def test_param_eval():
    q = Param.generator("q")
    assert q.eval({"q": 2.0}) == pytest.approx(2.0)
    assert (q ** -2).eval({"q": 2.0}) == pytest.approx(0.25)
    assert Param.parse("2^1/2").eval() == pytest.approx(math.sqrt(2))
    with pytest.raises(fk.FusionError):
        q.eval({})
    with pytest.raises(fk.FusionError):
        q.eval({"q": -1.0})


def test_list_operations():
    one = Param.one()
    q = Param.generator("q")
    l1 = ParamList([one])
    assert fk.list_sum(l1, l1) == ParamList([one, one])
    lq = ParamList([q, q.inv()])
    prod = fk.list_tensor(lq, lq)
    assert prod == ParamList([q ** 2, one, one, q ** -2])
    assert fk.list_dual(lq) == lq
    assert fk.list_dual(ParamList([q])) == ParamList([q.inv()])
    assert lq.size() == 2


def test_is_kac():
    assert fk.is_kac(ParamList.kac(3))
    assert fk.is_kac(ParamList())
    assert not fk.is_kac(ParamList.parse(["q", "q^-1"]))


def test_qdim():
    assert fk.qdim(ParamList.kac(5)) == pytest.approx(5.0)
    assert fk.qdim(ParamList.parse(["q", "q^-1"]), {"q": 2}) == pytest.approx(4.25)
    with pytest.raises(fk.FusionError):
        fk.qdim(ParamList.parse(["2"]))  # 4 != 1/4


def test_balance_formal():
    assert ParamList.parse(["q", "q^-1"]).is_balanced_formal()
    assert not ParamList.parse(["q"]).is_balanced_formal()
    assert ParamList.kac(4).is_balanced_formal()


def test_trig_eval():
    lst = ParamList.parse(["q", "q^-1"])
    t = 0.37
    got = fk.trig_eval(lst, t, {"q": 2.0})
    assert got.real == pytest.approx(2 * math.cos(2 * t * math.log(2)))
    assert got.imag == pytest.approx(0.0, abs=1e-12)
    assert fk.trig_eval(ParamList.kac(7), 1.3) == pytest.approx(7.0)
    assert fk.trig_eval(lst, 0.0, {"q": 5.0}) == pytest.approx(2.0)


def test_derive_lists_su2q(ao2):
    fund = ParamList.parse(["q", "q^-1"])
    lists = fk.derive_irreducible_lists(ao2, fund, depth=10)
    assert lists[ao2.unit] == ParamList([Param.one()])
    assert lists[ao2.r(3)] == ParamList.parse(["q^2", "1", "q^-2"])
    for k in range(1, 11):
        expect = ParamList([Param.generator("q", e) for e in range(k - 1, -k, -2)])
        assert lists[ao2.r(k)] == expect


def test_derive_rejects_wrong_size(ao2):
    with pytest.raises(fk.FusionError):
        fk.derive_irreducible_lists(ao2, ParamList.kac(3), depth=3)


def test_derive_inconsistent_input(ao2):
    # a fundamental list whose self-product cannot contain the unit's list
    bad = ParamList.parse(["q", "q"])
    with pytest.raises(fk.InconsistentListError):
        fk.derive_irreducible_lists(ao2, bad, depth=3)


def test_list_morphism_property(ao2, au2, rng):
    fund = ParamList.parse(["q", "q^-1"])
    for sys in (ao2, au2):
        lists = fk.derive_irreducible_lists(sys, fund, depth=8)
        labels = sorted(lists, key=sys.sort_key)[:12]
        for _ in range(60):
            a, b = rng.choice(labels), rng.choice(labels)
            prod = sys.tensor_pair(a, b)
            if any(c not in lists for c in prod.support()):
                continue
            lhs = lists[a].product(lists[b])
            rhs = ParamList()
            for c, m in prod.items():
                for _i in range(m):
                    rhs = rhs.union(lists[c])
            assert lhs == rhs, (sys.family_id, a, b)
            # additivity is multiset union by construction
            assert fk.list_sum(lists[a], lists[b]).size() == lists[a].size() + lists[b].size()


def test_qdim_multiplicative_on_derived_lists(ao2, rng):
    fund = ParamList.parse(["q", "q^-1"])
    lists = fk.derive_irreducible_lists(ao2, fund, depth=8)
    vals = {"q": 1.7}
    labels = sorted(lists, key=ao2.sort_key)[:8]
    for _ in range(40):
        a, b = rng.choice(labels), rng.choice(labels)
        prod = ao2.tensor_pair(a, b)
        if any(c not in lists for c in prod.support()):
            continue
        lhs = fk.qdim(lists[a], vals) * fk.qdim(lists[b], vals)
        rhs = sum(m * fk.qdim(lists[c], vals) for c, m in prod.items())
        assert lhs == pytest.approx(rhs, rel=1e-9)


def test_kac_implies_trivial_spectrum_and_qdim_dim(aut4):
    lists = fk.derive_irreducible_lists(aut4, ParamList.kac(4), depth=5)
    for lab, lst in lists.items():
        assert fk.is_kac(lst)
        assert fk.qdim(lst) == pytest.approx(aut4.dim_irr(lab))
        assert fk.modular_spectrum(lst).is_trivial()


def test_modular_spectrum_sqrt2():
    lat = fk.modular_spectrum(ParamList.parse(["2^1/2", "2^-1/2"]))
    assert lat == ExponentLattice.from_params([Param.from_rational(4)])
    assert fk.lattice_membership(lat, Param.from_rational(16))
    assert not fk.lattice_membership(lat, Param.from_rational(2))
    assert fk.lattice_membership(lat, Param.one())


def test_modular_spectrum_two_rationals():
    # entries sqrt(x) for x = (2, 1/2): squared pair products are {4, 1, 1/4}
    lst = ParamList([Param.from_rational(2, Fraction(1, 2)),
                     Param.from_rational(Fraction(1, 2), Fraction(1, 2))])
    lat = fk.modular_spectrum(lst)
    assert lat == ExponentLattice.from_params([Param.from_rational(4)])


def test_modular_spectrum_formal_mu():
    mu = Param.generator("mu")
    lat = fk.modular_spectrum(ParamList([mu ** Fraction(1, 2), mu ** Fraction(-1, 2)]))
    assert lat == ExponentLattice.from_params([mu ** 2])
    assert fk.lattice_membership(lat, mu ** 4)
    assert not fk.lattice_membership(lat, mu ** 3)
    assert not fk.lattice_membership(lat, Param.generator("nu", 2))


def test_lattice_generators_and_closure(rng):
    entries = [Param.generator("a"), Param.generator("b", Fraction(1, 2)),
               Param.from_rational(3)]
    lst = ParamList(entries)
    lat = fk.modular_spectrum(lst)
    gens = [(p * q) ** 2 for i, p in enumerate(entries) for q in entries[i:]]
    for g in gens:
        assert fk.lattice_membership(lat, g)
    # closure under product and inverse on sampled members
    for _ in range(20):
        a, b = rng.choice(gens), rng.choice(gens)
        assert fk.lattice_membership(lat, a * b)
        assert fk.lattice_membership(lat, a.inv())


def test_hnf_canonical():
    r1 = ExponentLattice.from_params([Param.generator("x", 2), Param.generator("x", 3)])
    r2 = ExponentLattice.from_params([Param.generator("x", 1)])
    assert r1 == r2  # gcd(2,3) = 1
    big = ExponentLattice.from_params(
        [Param.generator("x", 4) * Param.generator("y", 2), Param.generator("y", 2)])
    assert big.rows == ((4, 0), (0, 2))
    assert fk.lattice_membership(big, Param.generator("x", 4))
    assert not fk.lattice_membership(big, Param.generator("x", 2))
    assert fk.lattice_membership(big, Param.generator("x", 4) * Param.generator("y", -6))
