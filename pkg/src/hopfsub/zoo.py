"""Concrete species: 1, E, L, G, cyc and posets, with their Hopf structures.

The posets carry the disjoint-union / induced-subposet structure, chosen by
analogy with graphs.  ``cyc`` is positive; its default coproduct is the
trivial one, and a restriction coproduct (restrict the cycle to a subset) is
available for applications that need comonoid maps out of ``L_+``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .foundations import LinComb, ZERO, labelset
from .species import (
    Bimonoid, Comonoid, RestrictionBimonoid, RestrictionComonoid, Species, SpeciesMap,
    positive_part,
)


# -- terms ------------------------------------------------------------------

@dataclass(frozen=True)
class Empty:
    """The single structure of the unit species on the empty set."""

    @property
    def labels(self):
        return ()

    def relabel(self, sigma):
        return self


@dataclass(frozen=True)
class Star:
    labels: tuple

    def relabel(self, sigma):
        return Star(labelset(sigma[x] for x in self.labels))

    def __repr__(self):
        return "*" + "".join(map(str, self.labels)) if self.labels else "*∅"


@dataclass(frozen=True)
class Order:
    seq: tuple
    labels: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", labelset(self.seq))

    def relabel(self, sigma):
        return Order(tuple(sigma[x] for x in self.seq))

    def __repr__(self):
        return "(" + "|".join(map(str, self.seq)) + ")"


@dataclass(frozen=True)
class Graph:
    labels: tuple
    edges: tuple = ()

    def relabel(self, sigma):
        return make_graph((sigma[x] for x in self.labels),
                          ((sigma[a], sigma[b]) for a, b in self.edges))

    def __repr__(self):
        es = ",".join(f"{a}-{b}" for a, b in self.edges)
        return f"G({''.join(map(str, self.labels))}; {es})"


def make_graph(vertices, edges=()) -> Graph:
    es = set()
    for a, b in edges:
        if a == b:
            raise ValueError("simple graphs have no loops")
        es.add((a, b) if a < b else (b, a))
    return Graph(labelset(vertices), tuple(sorted(es)))


@dataclass(frozen=True)
class Cycle:
    seq: tuple
    labels: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", labelset(self.seq))

    def relabel(self, sigma):
        return make_cycle(sigma[x] for x in self.seq)

    def __repr__(self):
        return "cyc(" + " ".join(map(str, self.seq)) + ")"


def make_cycle(seq) -> Cycle:
    seq = tuple(seq)
    if not seq:
        raise ValueError("cycles are nonempty")
    i = seq.index(min(seq))
    return Cycle(seq[i:] + seq[:i])


@dataclass(frozen=True)
class Poset:
    labels: tuple
    rel: tuple = ()  # strict relations (a, b) meaning a < b, transitively closed

    def relabel(self, sigma):
        return Poset(labelset(sigma[x] for x in self.labels),
                     tuple(sorted((sigma[a], sigma[b]) for a, b in self.rel)))

    def __repr__(self):
        rs = ",".join(f"{a}<{b}" for a, b in self.rel)
        return f"P({''.join(map(str, self.labels))}; {rs})"


def make_poset(vertices, relations=()) -> Poset:
    """Poset generated by ``relations`` (transitive closure is taken)."""
    vs = labelset(vertices)
    rel = set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    if any(a == b for a, b in rel) or any((b, a) in rel for a, b in rel):
        raise ValueError("relation is not antisymmetric")
    return Poset(vs, tuple(sorted(rel)))


def chain(seq) -> Poset:
    seq = tuple(seq)
    return Poset(labelset(seq), tuple(sorted((seq[i], seq[j])
                                             for i in range(len(seq)) for j in range(i + 1, len(seq)))))


def antichain(labels) -> Poset:
    return Poset(labelset(labels), ())


# -- species ----------------------------------------------------------------

class OneSpecies(Species):
    def __init__(self):
        super().__init__("1")

    def _enumerate(self, labels):
        return (Empty(),) if not labels else ()


class ESpecies(Species):
    def __init__(self):
        super().__init__("E")

    def _enumerate(self, labels):
        return (Star(labels),)


class LSpecies(Species):
    def __init__(self):
        super().__init__("L")

    def _enumerate(self, labels):
        return tuple(Order(p) for p in itertools.permutations(labels))


class GSpecies(Species):
    def __init__(self):
        super().__init__("G")

    def _enumerate(self, labels):
        pairs = list(itertools.combinations(labels, 2))
        out = []
        for mask in itertools.product((1, 0), repeat=len(pairs)):
            out.append(Graph(labels, tuple(p for p, m in zip(pairs, mask) if m)))
        return tuple(out)


class CycSpecies(Species):
    def __init__(self):
        super().__init__("cyc")

    def _enumerate(self, labels):
        if not labels:
            return ()
        first, rest = labels[0], labels[1:]
        return tuple(Cycle((first,) + p) for p in itertools.permutations(rest))


class PosetSpecies(Species):
    def __init__(self):
        super().__init__("Pos")

    def _enumerate(self, labels):
        pairs = list(itertools.combinations(labels, 2))
        out = []
        for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
            rel = set()
            for (a, b), c in zip(pairs, choice):
                if c == 1:
                    rel.add((a, b))
                elif c == 2:
                    rel.add((b, a))
            if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
                out.append(Poset(labels, tuple(sorted(rel))))
        return tuple(out)


ONE = OneSpecies()
E = ESpecies()
L = LSpecies()
G = GSpecies()
CYC = CycSpecies()
POS = PosetSpecies()


# -- restrictions and products -----------------------------------------------

def restrict_star(x: Star, U) -> Star:
    return Star(labelset(U))


def restrict_order(x: Order, U) -> Order:
    U = set(U)
    return Order(tuple(a for a in x.seq if a in U))


def restrict_graph(x: Graph, U) -> Graph:
    U = set(U)
    return Graph(tuple(a for a in x.labels if a in U),
                 tuple(e for e in x.edges if e[0] in U and e[1] in U))


def restrict_cycle(x: Cycle, U) -> Cycle:
    U = set(U)
    return make_cycle(a for a in x.seq if a in U)


def restrict_poset(x: Poset, U) -> Poset:
    U = set(U)
    return Poset(tuple(a for a in x.labels if a in U),
                 tuple(r for r in x.rel if r[0] in U and r[1] in U))


def concat(x: Order, y: Order) -> Order:
    return Order(x.seq + y.seq)


def union_star(x: Star, y: Star) -> Star:
    return Star(labelset(x.labels + y.labels))


def union_graph(x: Graph, y: Graph) -> Graph:
    return Graph(labelset(x.labels + y.labels), tuple(sorted(x.edges + y.edges)))


def union_poset(x: Poset, y: Poset) -> Poset:
    return Poset(labelset(x.labels + y.labels), tuple(sorted(x.rel + y.rel)))


def hopf_One() -> RestrictionBimonoid:
    return RestrictionBimonoid(ONE, lambda x, U: x, lambda x, y: x, "1")


def hopf_L() -> RestrictionBimonoid:
    return RestrictionBimonoid(L, restrict_order, concat, "L")


def hopf_E() -> RestrictionBimonoid:
    return RestrictionBimonoid(E, restrict_star, union_star, "E")


def hopf_G() -> RestrictionBimonoid:
    return RestrictionBimonoid(G, restrict_graph, union_graph, "G")


def hopf_Poset() -> RestrictionBimonoid:
    return RestrictionBimonoid(POS, restrict_poset, union_poset, "Pos")


class TrivialComonoid(Comonoid):
    """A positive comonoid whose coproduct vanishes on every split."""

    def delta(self, x, S, T):
        return ZERO


def comonoid_cyc(restrictions: bool = False) -> Comonoid:
    if restrictions:
        return RestrictionComonoid(CYC, restrict_cycle, "cyc")
    return TrivialComonoid(CYC, "cyc")


def comonoid_E_plus():
    return positive_part(hopf_E())


def comonoid_L_plus():
    return positive_part(hopf_L())


def comonoid_G_plus():
    return positive_part(hopf_G())


def comonoid_Poset_plus():
    return positive_part(hopf_Poset())


# -- a non-cocommutative linearized bimonoid ---------------------------------

def contract_graph(g: Graph, keep) -> Graph:
    """Contract the vertices outside ``keep``.

    Two kept vertices become adjacent when they are adjacent in ``g`` or both
    touch the same connected component of the removed part.
    """
    keep = set(keep)
    gone = [v for v in g.labels if v not in keep]
    comp = {v: v for v in gone}

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    for a, b in g.edges:
        if a in comp and b in comp:
            comp[find(a)] = find(b)
    touch: dict = {}
    edges = {e for e in g.edges if e[0] in keep and e[1] in keep}
    for a, b in g.edges:
        if a in keep and b in comp:
            touch.setdefault(find(b), set()).add(a)
        elif b in keep and a in comp:
            touch.setdefault(find(a), set()).add(b)
    for vs in touch.values():
        for a, b in itertools.combinations(sorted(vs), 2):
            edges.add((a, b))
    return Graph(tuple(v for v in g.labels if v in keep), tuple(sorted(edges)))


class ContractionGraphs(Bimonoid):
    """Graphs with ``Δ_{S,T}(g) = g|_S ⊗ g/S``: linearized, not cocommutative."""

    def __init__(self):
        super().__init__(G, "Gc")

    def mu(self, x, y):
        return LinComb.term(union_graph(x, y))

    def delta(self, x, S, T):
        return LinComb.term((restrict_graph(x, S), contract_graph(x, T)))

    def left(self, x, U):
        return restrict_graph(x, U)

    def right(self, x, U):
        return contract_graph(x, U)


def hopf_G_contraction() -> ContractionGraphs:
    return ContractionGraphs()


# -- named maps ---------------------------------------------------------------

def _tau_to_E(t) -> LinComb:
    return LinComb.term(Star(t.labels))


def _alpha(t: Star) -> LinComb:
    return LinComb.term(antichain(t.labels))


def _lam(t: Star) -> LinComb:
    n = len(t.labels)
    c = Fraction(1, math.factorial(n))
    return LinComb((chain(p), c) for p in itertools.permutations(t.labels))


def _theta_Lcyc(t: Order) -> LinComb:
    return LinComb.term(make_cycle(t.seq))


def tau_GE() -> SpeciesMap:
    return SpeciesMap("tau_GE", _tau_to_E, G, E)


def tau_LE() -> SpeciesMap:
    return SpeciesMap("tau_LE", _tau_to_E, L, E)


def alpha() -> SpeciesMap:
    return SpeciesMap("alpha", _alpha, E, POS)


def lam() -> SpeciesMap:
    return SpeciesMap("lambda", _lam, E, POS)


def theta_Lcyc() -> SpeciesMap:
    return SpeciesMap("theta_Lcyc", _theta_Lcyc, L, CYC)


def forget_to_E(name: str = "forget") -> SpeciesMap:
    """Any structure ``↦ *_I``; forgets edges of graphs or orders of lists."""
    return SpeciesMap(name, _tau_to_E, None, E)


def zoo_maps() -> dict[str, SpeciesMap]:
    return {
        "tau_GE": tau_GE(),
        "tau_LE": tau_LE(),
        "alpha": alpha(),
        "lambda": lam(),
        "theta_Lcyc": theta_Lcyc(),
    }


def distinguished_singleton(species: Species, label):
    """The unique structure on ``{label}`` for the zoo species."""
    b = species.basis((label,))
    if len(b) != 1:
        raise ValueError(f"{species.name} has {len(b)} structures on a singleton")
    return b[0]
