"""Sum, Hadamard, Cauchy and substitution products of species."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .foundations import (
    DomainError, LinComb, ZERO, enumerate_decompositions, enumerate_partitions, labelset,
)
from .species import Bimonoid, HypothesisError, Species


@dataclass(frozen=True)
class SumTerm:
    side: int  # 0 = left summand, 1 = right summand
    term: object

    @property
    def labels(self):
        return self.term.labels

    def relabel(self, sigma):
        return SumTerm(self.side, self.term.relabel(sigma))


@dataclass(frozen=True)
class HadamardTerm:
    left: object
    right: object

    @property
    def labels(self):
        return self.left.labels

    def relabel(self, sigma):
        return HadamardTerm(self.left.relabel(sigma), self.right.relabel(sigma))


@dataclass(frozen=True)
class CauchyTerm:
    left: object
    right: object
    labels: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", labelset(self.left.labels + self.right.labels))

    def relabel(self, sigma):
        return CauchyTerm(self.left.relabel(sigma), self.right.relabel(sigma))

    def __repr__(self):
        return f"[{self.left!r} ⊗̇ {self.right!r}]"


@dataclass(frozen=True)
class SubstTerm:
    """An outer structure on the blocks of a partition, one inner structure per block.

    ``inner[i]`` lives on ``blocks[i]``; the outer term's labels are the
    blocks themselves.
    """

    blocks: tuple
    outer: object
    inner: tuple
    labels: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", labelset(x for b in self.blocks for x in b))

    def relabel(self, sigma):
        bmap = {b: labelset(sigma[x] for x in b) for b in self.blocks}
        pairs = sorted(((bmap[b], t.relabel(sigma)) for b, t in zip(self.blocks, self.inner)),
                       key=lambda bt: bt[0])
        return SubstTerm(tuple(b for b, _ in pairs), self.outer.relabel(bmap),
                         tuple(t for _, t in pairs))

    def inner_of(self, block):
        return self.inner[self.blocks.index(block)]

    def __repr__(self):
        inner = ", ".join(f"{''.join(map(str, b))}:{t!r}" for b, t in zip(self.blocks, self.inner))
        return f"<{self.outer!r} | {inner}>"


def subst_term(pairs, outer) -> SubstTerm:
    """Build a composite term from ``(block, inner term)`` pairs in any order."""
    pairs = sorted(pairs, key=lambda bt: bt[0])
    return SubstTerm(tuple(b for b, _ in pairs), outer, tuple(t for _, t in pairs))


class SumSpecies(Species):
    def __init__(self, p: Species, q: Species):
        super().__init__(f"({p.name} + {q.name})")
        self.p, self.q = p, q

    def _enumerate(self, labels):
        return tuple(SumTerm(0, t) for t in self.p.basis(labels)) + \
            tuple(SumTerm(1, t) for t in self.q.basis(labels))


class HadamardSpecies(Species):
    def __init__(self, p: Species, q: Species):
        super().__init__(f"({p.name} * {q.name})")
        self.p, self.q = p, q

    def _enumerate(self, labels):
        return tuple(HadamardTerm(a, b) for a in self.p.basis(labels) for b in self.q.basis(labels))


class CauchySpecies(Species):
    def __init__(self, p: Species, q: Species):
        super().__init__(f"({p.name} . {q.name})")
        self.p, self.q = p, q

    def _enumerate(self, labels):
        out = []
        for S, T in enumerate_decompositions(labels, 2):
            for a in self.p.basis(S):
                for b in self.q.basis(T):
                    out.append(CauchyTerm(a, b))
        return tuple(out)


class SubstitutionSpecies(Species):
    def __init__(self, p: Species, q: Species):
        if not q.positive:
            raise HypothesisError("positive", f"substitution argument {q.name} has structures on ∅")
        super().__init__(f"({p.name} o {q.name})")
        self.p, self.q = p, q

    def _enumerate(self, labels):
        out = []
        for X in enumerate_partitions(labels):
            inners = [self.q.basis(B) for B in X]
            if any(not i for i in inners):
                continue
            outers = self.p.basis(X)
            for o in outers:
                for combo in itertools.product(*inners):
                    out.append(SubstTerm(X, o, tuple(combo)))
        return tuple(out)


def sum_species(p, q):
    return SumSpecies(p, q)


def hadamard_species(p, q):
    return HadamardSpecies(p, q)


def cauchy_species(p, q):
    return CauchySpecies(p, q)


def substitute_species(p, q):
    return SubstitutionSpecies(p, q)


class CauchyBimonoid(Bimonoid):
    """``h1 · h2`` with coordinatewise product and coproduct."""

    def __init__(self, h1: Bimonoid, h2: Bimonoid, name: str | None = None):
        if not (h1.connected and h2.connected):
            raise HypothesisError("connected", "both factors of a Cauchy bimonoid must be connected")
        super().__init__(CauchySpecies(h1.species, h2.species), name or f"{h1.name} . {h2.name}")
        self.h1, self.h2 = h1, h2
        self.has_restrictions = h1.has_restrictions and h2.has_restrictions

    def mu(self, x: CauchyTerm, y: CauchyTerm) -> LinComb:
        a = self.h1.mu(x.left, y.left)
        b = self.h2.mu(x.right, y.right)
        return LinComb((CauchyTerm(s, t), c * d) for s, c in a.items() for t, d in b.items())

    def delta(self, x: CauchyTerm, S, T) -> LinComb:
        S, T = set(S), set(T)
        l, r = x.left.labels, x.right.labels
        a = self.h1.delta(x.left, tuple(v for v in l if v in S), tuple(v for v in l if v in T))
        if not a:
            return ZERO
        b = self.h2.delta(x.right, tuple(v for v in r if v in S), tuple(v for v in r if v in T))
        return LinComb(((CauchyTerm(a1, b1), CauchyTerm(a2, b2)), c * d)
                       for (a1, a2), c in a.items() for (b1, b2), d in b.items())

    def restrict(self, x: CauchyTerm, U):
        U = set(U)
        return CauchyTerm(self.h1.restrict(x.left, tuple(v for v in x.left.labels if v in U)),
                          self.h2.restrict(x.right, tuple(v for v in x.right.labels if v in U)))


def cauchy_bimonoid(h1: Bimonoid, h2: Bimonoid) -> CauchyBimonoid:
    return CauchyBimonoid(h1, h2)


def cauchy_split(x: CauchyTerm):
    """The decomposition ``(S, T)`` a Cauchy term lives on."""
    return x.left.labels, x.right.labels


__all__ = [
    "SumTerm", "HadamardTerm", "CauchyTerm", "SubstTerm", "subst_term",
    "sum_species", "hadamard_species", "cauchy_species", "substitute_species",
    "cauchy_bimonoid", "CauchyBimonoid", "DomainError",
]
