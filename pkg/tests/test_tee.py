import pytest

from helpers import BELL, WORKED_EXAMPLES, WORKED_TERM, lg
from hopfsub import verify, zoo
from hopfsub.foundations import LinComb, canonical_labels, make_partition
from hopfsub.ops import SubstTerm
from hopfsub.species import Bimonoid, HypothesisError, positive_part
from hopfsub.tee import T, build_tee, restrict_down, substitution_comonoid, tilde_delta


def test_worked_examples(tees):
    t = tees["T[L](G+)"]
    assert WORKED_TERM in t.species.basis("abcde")
    for S, Tset, expected in WORKED_EXAMPLES:
        assert t.delta(WORKED_TERM, S, Tset) == expected


def test_restrict_down_transports_blocks(hopf):
    X = WORKED_TERM.blocks
    y = restrict_down(hopf["L"], WORKED_TERM.outer, X, ("c", "d", "e"))
    assert y == zoo.Order((("d",), ("c", "e")))


def test_tilde_delta_splits_straddling_block(plus):
    out = tilde_delta(plus["G+"], WORKED_TERM, ("c", "d", "e"), ("a", "b"))
    (left, right), c = out.single()
    assert c == 1
    assert dict(left)[("c", "e")] == zoo.make_graph("ce", [("c", "e")])
    assert dict(right)[("a",)] == zoo.make_graph("a")


def test_dimensions(tees):
    assert [tees["T[E](E+)"].species.dim(n) for n in range(6)] == BELL[:6]
    assert [tees["T[Pos](E+)"].species.dim(n) for n in range(4)] == [1, 1, 4, 29]
    assert tees["T[L](G+)"].species.dim(3) == 26
    assert tees["T[G](L+)"].species.dim(3) == 26


@pytest.mark.parametrize("name", ["T[L](G+)", "T[G](L+)", "T[E](E+)", "T[Pos](E+)"])
def test_tee_axioms_small(tees, name):
    h = tees[name]
    for check in (verify.check_associativity, verify.check_coassociativity,
                  verify.check_compatibility, verify.check_antipode, verify.check_delta_mu_identity):
        rep = check(h, 3)
        assert rep.passed, str(rep)


@pytest.mark.parametrize("name", ["T[L](G+)", "T[G](L+)", "T[E](E+)"])
def test_cocommutative_when_both_coordinates_are(tees, name):
    # both coproducts come from restrictions here
    assert verify.check_cocommutativity(tees[name], 3)


def test_non_cocommutative_inner_comonoid():
    gc_plus = positive_part(zoo.hopf_G_contraction())
    s = build_tee(zoo.hopf_E(), gc_plus)
    assert verify.check_coassociativity(s, 3)
    assert verify.check_compatibility(s, 3)
    assert not verify.check_cocommutativity(s, 3).passed


def test_refuses_non_cocommutative_outer():
    with pytest.raises(HypothesisError) as err:
        build_tee(zoo.hopf_G_contraction(), zoo.comonoid_L_plus())
    assert err.value.hypothesis == "cocommutative"


def test_unchecked_outer_breaks_coassociativity():
    t = build_tee(zoo.hopf_G_contraction(), zoo.comonoid_L_plus(), unchecked=True)
    assert not verify.check_coassociativity(t, 4).passed


def test_refuses_non_positive_argument(hopf):
    with pytest.raises(HypothesisError) as err:
        build_tee(hopf["L"], hopf["G"])
    assert err.value.hypothesis == "positive"


class SetsWithoutRestrictions(Bimonoid):
    """E with its product and coproduct but no restriction maps."""

    def __init__(self):
        super().__init__(zoo.E, "E'")
        self._e = zoo.hopf_E()

    def mu(self, x, y):
        return self._e.mu(x, y)

    def delta(self, x, S, T):
        return self._e.delta(x, S, T)


def test_refuses_missing_restrictions(plus):
    h = SetsWithoutRestrictions()
    assert verify.check_cocommutativity(h, 3) and verify.check_linearized(h, 3)
    with pytest.raises(HypothesisError) as err:
        build_tee(h, plus["E+"])
    assert err.value.hypothesis == "restrictions"


def test_composite_is_a_valid_outer_argument(tees, plus):
    t = build_tee(tees["T[L](G+)"], plus["E+"])
    # one block, or an order or graph on two singleton blocks
    assert t.species.dim(2) == 5


def test_unit_and_counit(tees):
    t = tees["T[L](G+)"]
    one = t.unit()
    assert one == SubstTerm((), zoo.Order(()), ())
    x = lg(["ab", "c"], [("a", "b")])
    assert t.mu(one, x) == LinComb.term(x) == t.mu(x, one)
    assert t.delta(x, (), x.labels) == LinComb.term((one, x))


def test_product_concatenates_blocks(tees):
    t = tees["T[L](G+)"]
    x, y = lg(["a"]), lg(["bc"], [("b", "c")])
    assert t.mu(x, y) == LinComb.term(lg(["a", "bc"], [("b", "c")]))


def test_substitution_comonoid_for_truncated_outer(plus):
    c = substitution_comonoid(positive_part(zoo.hopf_E()), plus["E+"])
    assert [c.species.dim(n) for n in range(5)] == [0, 1, 2, 5, 15]
    assert verify.check_coassociativity(c, 3)


def test_shorthands():
    t = T(zoo.comonoid_E_plus())
    assert t.b.name == "L"
    assert [t.species.dim(n) for n in range(4)] == [1, 1, 3, 13]


def test_restriction_of_composites(tees):
    t = tees["T[G](L+)"]
    assert t.has_restrictions
    assert verify.check_restriction_axioms(t, 3)
    x = t.species.basis(canonical_labels(3))[-1]
    assert t.restrict(x, ("1", "3")).blocks == make_partition(
        [B for B in (tuple(v for v in blk if v in ("1", "3")) for blk in x.blocks) if B])


def test_antipode_involution_on_partitions(tees):
    assert verify.check_antipode_involution(tees["T[E](E+)"], 4)


def test_cocommutative_with_sets_inside():
    h = build_tee(zoo.hopf_G(), zoo.comonoid_E_plus())
    assert verify.check_cocommutativity(h, 4)
    assert verify.check_cocommutativity(build_tee(zoo.hopf_E(), zoo.comonoid_E_plus()), 4)


def test_cauchy_product_of_constructions(tees):
    from hopfsub.ops import CauchyBimonoid
    h = CauchyBimonoid(build_tee(zoo.hopf_L(), zoo.comonoid_E_plus()), tees["T[E](E+)"])
    for check in (verify.check_associativity, verify.check_coassociativity, verify.check_compatibility):
        assert check(h, 3)


GRID_B = {"L": zoo.hopf_L, "E": zoo.hopf_E, "G": zoo.hopf_G, "Pos": zoo.hopf_Poset}
GRID_P = {"E+": zoo.comonoid_E_plus, "L+": zoo.comonoid_L_plus, "G+": zoo.comonoid_G_plus,
          "cyc": zoo.comonoid_cyc}


@pytest.mark.parametrize("p", sorted(GRID_P))
@pytest.mark.parametrize("b", sorted(GRID_B))
def test_construction_grid_at_four(b, p):
    h = build_tee(GRID_B[b](), GRID_P[p]())
    for check in (verify.check_associativity, verify.check_coassociativity, verify.check_compatibility,
                  verify.check_antipode, verify.check_delta_mu_identity):
        rep = check(h, 4)
        assert rep.passed, str(rep)
