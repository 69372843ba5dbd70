from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from hopfsub import verify, zoo
from hopfsub.foundations import DomainError, LinComb, canonical_labels, subsets
from hopfsub.ops import cauchy_species, hadamard_species, substitute_species, sum_species
from hopfsub.species import CapabilityError, positive_part, truncate, truncate_comonoid

SPECIES = {"1": zoo.ONE, "E": zoo.E, "L": zoo.L, "G": zoo.G, "cyc": zoo.CYC, "Pos": zoo.POS}
RESTRICTIONS = {"E": zoo.hopf_E, "L": zoo.hopf_L, "G": zoo.hopf_G, "Pos": zoo.hopf_Poset,
                "cyc": lambda: zoo.comonoid_cyc(restrictions=True)}


@pytest.mark.parametrize("name,expected", [
    ("1", [1, 0, 0, 0, 0]),
    ("E", [1, 1, 1, 1, 1]),
    ("L", [factorial(n) for n in range(5)]),
    ("G", [2 ** comb(n, 2) for n in range(5)]),
    ("cyc", [0, 1, 1, 2, 6]),
    ("Pos", [1, 1, 3, 19, 219]),
])
def test_zoo_dimensions(name, expected):
    assert [SPECIES[name].dim(n) for n in range(5)] == expected


def test_graphs_on_three_labels():
    assert len(zoo.G.basis(("a", "b", "c"))) == 8


def test_positive_and_connected_flags():
    assert zoo.E.connected and not zoo.E.positive
    assert zoo.CYC.positive and not zoo.CYC.connected
    assert truncate(zoo.G, "+").positive


def test_truncations():
    assert [truncate(zoo.L, "=", 2).dim(n) for n in range(4)] == [0, 0, 2, 0]
    assert [truncate(zoo.L, "<", 2).dim(n) for n in range(4)] == [1, 1, 0, 0]
    assert [truncate(zoo.L, ">=", 2).dim(n) for n in range(4)] == [0, 0, 2, 6]
    with pytest.raises(ValueError):
        truncate(zoo.L, "?")


def test_unit_of_positive_species_is_refused():
    with pytest.raises(CapabilityError):
        zoo.CYC.unit()


@st.composite
def term_and_perms(draw, species_names=tuple(SPECIES)):
    sp = SPECIES[draw(st.sampled_from(species_names))]
    n = draw(st.integers(min_value=0, max_value=4))
    I = canonical_labels(n)
    basis = sp.basis(I)
    if not basis:
        return sp, None, None, None
    x = draw(st.sampled_from(basis))
    p1 = draw(st.permutations(I))
    p2 = draw(st.permutations(I))
    return sp, x, dict(zip(I, p1)), dict(zip(I, p2))


@given(term_and_perms())
def test_relabeling_is_functorial(data):
    sp, x, s1, s2 = data
    if x is None:
        return
    ident = {v: v for v in x.labels}
    assert sp.relabel(x, ident) == x
    composed = {v: s2[s1[v]] for v in x.labels}
    assert sp.relabel(sp.relabel(x, s1), s2) == sp.relabel(x, composed)
    assert sp.relabel(x, s1) in sp.basis(x.labels)


def test_relabel_outside_domain():
    x = zoo.L.basis(("a", "b"))[0]
    with pytest.raises(DomainError):
        zoo.L.relabel(x, {"a": "b"})


@pytest.mark.parametrize("name", sorted(RESTRICTIONS))
def test_restriction_identities(name):
    c = RESTRICTIONS[name]()
    for n in range(4):
        I = canonical_labels(n)
        nonempty = c.species.positive
        for x in c.species.basis(I):
            assert c.restrict(x, I) == x
            for V in subsets(I):
                if nonempty and not V:
                    with pytest.raises(DomainError):
                        c.restrict(x, V)
                    continue
                y = c.restrict(x, V)
                assert y.labels == V
                for U in subsets(V):
                    if U or not nonempty:
                        assert c.restrict(y, U) == c.restrict(x, U)


@pytest.mark.parametrize("name", sorted(RESTRICTIONS))
def test_restriction_laws_by_checker(name):
    c = RESTRICTIONS[name]()
    assert verify.check_restriction_axioms(c, 4)
    assert verify.check_restriction_coproduct(c, 4)
    assert verify.check_naturality(c, 4)


def test_positive_part_and_truncated_comonoid():
    e_plus = positive_part(zoo.hopf_E())
    assert e_plus.name == "E+" and e_plus.species.positive
    x = e_plus.species.basis(("a", "b"))[0]
    assert e_plus.delta(x, (), ("a", "b")) == LinComb()
    small = truncate_comonoid(zoo.comonoid_L_plus(), "<", 2)
    assert [small.species.dim(n) for n in range(4)] == [0, 1, 0, 0]


# -- products of species ---------------------------------------------------------

@pytest.mark.parametrize("build,expected", [
    (lambda: sum_species(zoo.E, zoo.L), [2, 2, 3, 7]),
    (lambda: hadamard_species(zoo.L, zoo.L), [1, 1, 4, 36]),
    (lambda: cauchy_species(zoo.E, zoo.E), [1, 2, 4, 8]),
    (lambda: cauchy_species(zoo.L, zoo.L), [1, 2, 6, 24]),
    (lambda: substitute_species(zoo.E, truncate(zoo.E, "+")), [1, 1, 2, 5]),
    (lambda: substitute_species(zoo.L, truncate(zoo.E, "+")), [1, 1, 3, 13]),
    (lambda: substitute_species(zoo.G, truncate(zoo.L, "+")), [1, 1, 4, 26]),
    (lambda: substitute_species(zoo.L, truncate(zoo.G, "+")), [1, 1, 4, 26]),
])
def test_operation_dimensions(build, expected):
    sp = build()
    assert [sp.dim(n) for n in range(4)] == expected


def test_set_partitions_as_substitution():
    sp = substitute_species(zoo.E, truncate(zoo.E, "+"))
    assert [sp.dim(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_relabeling_composites_commutes_with_enumeration():
    from hopfsub.tee import build_tee
    t = build_tee(zoo.hopf_L(), zoo.comonoid_G_plus())
    I = canonical_labels(4)
    sigma = dict(zip(I, ("w", "x", "y", "z")))
    image = {t.species.relabel(x, sigma) for x in t.species.basis(I)}
    assert image == set(t.species.basis(("w", "x", "y", "z")))


@pytest.mark.parametrize("p", ["1", "E", "L", "G", "cyc", "Pos"])
@pytest.mark.parametrize("q", ["E", "L", "G", "cyc", "Pos"])
def test_substitution_dimension_formula(p, q):
    from hopfsub.foundations import enumerate_partitions
    qp = truncate(SPECIES[q], "+")
    comp = substitute_species(SPECIES[p], qp)
    for n in range(5):
        I = canonical_labels(n)
        expected = 0
        for X in enumerate_partitions(I):
            term = SPECIES[p].dim(len(X))
            for B in X:
                term *= qp.dim(len(B))
            expected += term
        assert comp.dim(n) == expected


def test_comonoid_from_restrictions_is_coassociative():
    from hopfsub.species import comonoid_from_restrictions
    for sp, rho in ((zoo.G, zoo.restrict_graph), (zoo.POS, zoo.restrict_poset), (zoo.L, zoo.restrict_order)):
        c = comonoid_from_restrictions(sp, rho)
        assert verify.check_coassociativity(c, 4)
        assert verify.check_linearized(c, 4)


@pytest.mark.parametrize("make", [zoo.hopf_L, zoo.hopf_E, zoo.hopf_G, zoo.hopf_Poset])
def test_zoo_structures_are_linearized(make):
    assert verify.check_linearized(make(), 4)


def test_trivial_cycle_coproduct():
    assert verify.check_coassociativity(zoo.comonoid_cyc(), 5)
