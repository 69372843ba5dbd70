"""Species, their structure maps, and species with restrictions.

A species is a basis enumerator ``labels -> terms`` together with the
relabeling action.  Every term knows its own label set (``term.labels``) and
how to relabel itself along a bijection (``term.relabel(sigma)``), so the
species object mostly enumerates and caches.

Structure maps always return :class:`LinComb` values, linearized or not.
"""

from __future__ import annotations

import threading
from typing import Callable, Iterable, Mapping

from .foundations import DomainError, LinComb, ZERO, apply_linear, labelset


class HypothesisError(Exception):
    """A construction was refused because a required property is missing."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        msg = f"missing hypothesis: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CapabilityError(Exception):
    """A structure lacks an operation that was asked of it."""


class Species:
    """Base class; subclasses implement :meth:`_enumerate`."""

    def __init__(self, name: str):
        self.name = name
        self._cache: dict = {}
        self._lock = threading.Lock()

    def _enumerate(self, labels: tuple) -> Iterable:
        raise NotImplementedError

    def basis(self, labels: Iterable) -> tuple:
        key = labelset(labels)
        try:
            return self._cache[key]
        except KeyError:
            pass
        terms = tuple(self._enumerate(key))
        with self._lock:
            self._cache.setdefault(key, terms)
        return self._cache[key]

    def dim(self, n_or_labels) -> int:
        if isinstance(n_or_labels, int):
            from .foundations import canonical_labels
            n_or_labels = canonical_labels(n_or_labels)
        return len(self.basis(n_or_labels))

    @property
    def positive(self) -> bool:
        return not self.basis(())

    @property
    def connected(self) -> bool:
        return len(self.basis(())) == 1

    def relabel(self, term, sigma: Mapping):
        missing = [x for x in term.labels if x not in sigma]
        if missing:
            raise DomainError(f"label {missing[0]!r} is outside the bijection's domain")
        return term.relabel(sigma)

    def unit(self):
        b = self.basis(())
        if len(b) != 1:
            raise CapabilityError(f"{self.name} is not connected")
        return b[0]

    def __repr__(self):
        return f"<species {self.name}>"


def relabel_lincomb(species: Species, sigma: Mapping, v: LinComb) -> LinComb:
    return LinComb((species.relabel(t, sigma), c) for t, c in v.items())


class Truncation(Species):
    """``p_n``, ``p_+``, ``p_{<r}`` or ``p_{>=r}``."""

    MODES = ("=", "+", "<", ">=")

    def __init__(self, base: Species, mode: str, n: int = 0):
        if mode not in self.MODES:
            raise ValueError(f"unknown truncation mode {mode!r}")
        self.base = base
        self.mode = mode
        self.n = n
        suffix = "+" if mode == "+" else f"{mode}{n}"
        super().__init__(f"{base.name}_{{{suffix}}}" if mode != "+" else f"{base.name}+")

    def keeps(self, size: int) -> bool:
        if self.mode == "=":
            return size == self.n
        if self.mode == "+":
            return size > 0
        if self.mode == "<":
            return size < self.n
        return size >= self.n

    def _enumerate(self, labels):
        if not self.keeps(len(labels)):
            return ()
        return self.base.basis(labels)


def truncate(species: Species, mode: str, n: int = 0) -> Species:
    return Truncation(species, mode, n)


# -- structure bundles ------------------------------------------------------

class Comonoid:
    """A comonoid in species: ``delta(x, S, T)`` returns a combination of pairs.

    Positive comonoids vanish whenever ``S`` or ``T`` is empty; connected ones
    send ``(I, ∅)`` to ``x ⊗ 1``.
    """

    def __init__(self, species: Species, name: str | None = None):
        self.species = species
        self.name = name or species.name
        self.certificates: dict[str, int] = {}

    has_restrictions = False

    @property
    def connected(self) -> bool:
        return self.species.connected

    @property
    def positive(self) -> bool:
        return self.species.positive

    def delta(self, x, S, T) -> LinComb:
        raise NotImplementedError

    def restrict(self, x, U):
        raise CapabilityError(f"{self.name} has no restriction structure")

    def delta_lin(self, v: LinComb, S, T) -> LinComb:
        return apply_linear(lambda t: self.delta(t, S, T), v)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class Bimonoid(Comonoid):
    def mu(self, x, y) -> LinComb:
        raise NotImplementedError

    def unit(self):
        return self.species.unit()

    def mu_lin(self, u: LinComb, v: LinComb) -> LinComb:
        from .foundations import apply_bilinear
        return apply_bilinear(self.mu, u, v)


class RestrictionComonoid(Comonoid):
    """The coproduct ``x ↦ ρ_S(x) ⊗ ρ_T(x)`` of a species with restrictions."""

    has_restrictions = True

    def __init__(self, species: Species, rho: Callable, name: str | None = None):
        super().__init__(species, name)
        self._rho = rho

    def restrict(self, x, U):
        U = labelset(U)
        if not set(U) <= set(x.labels):
            raise DomainError(f"{list(U)} is not a subset of {list(x.labels)}")
        if not U and self.species.positive:
            raise DomainError("a positive species has no structures on the empty set")
        if U == x.labels:
            return x
        return self._rho(x, U)

    def delta(self, x, S, T) -> LinComb:
        if self.species.positive and (not S or not T):
            return ZERO
        return LinComb.term((self.restrict(x, S), self.restrict(x, T)))


def comonoid_from_restrictions(species: Species, rho: Callable, name: str | None = None) -> RestrictionComonoid:
    return RestrictionComonoid(species, rho, name)


class RestrictionBimonoid(RestrictionComonoid, Bimonoid):
    """A linearized bimonoid whose coproduct comes from restrictions."""

    def __init__(self, species: Species, rho: Callable, mu_set: Callable, name: str | None = None):
        super().__init__(species, rho, name)
        self._mu_set = mu_set

    def mu(self, x, y) -> LinComb:
        return LinComb.term(self._mu_set(x, y))


class TruncatedComonoid(Comonoid):
    """A comonoid restricted to a truncation closed under its coproduct."""

    def __init__(self, base: Comonoid, species: Species, name: str | None = None):
        super().__init__(species, name or species.name)
        self.base = base
        self.has_restrictions = base.has_restrictions

    def delta(self, x, S, T):
        if self.species.positive and (not S or not T):
            return ZERO
        return self.base.delta(x, S, T)

    def restrict(self, x, U):
        return self.base.restrict(x, U)


def positive_part(c: Comonoid) -> Comonoid:
    """``c_+`` with the inherited coproduct on proper splits."""
    return TruncatedComonoid(c, truncate(c.species, "+"), f"{c.name}+")


def truncate_comonoid(c: Comonoid, mode: str, n: int = 0) -> Comonoid:
    suffix = "+" if mode == "+" else f"{mode}{n}"
    return TruncatedComonoid(c, truncate(c.species, mode, n), f"{c.name}{suffix}")


class SpeciesMap:
    """A linear map between species given on basis terms."""

    def __init__(self, name: str, fn: Callable, source=None, target=None):
        self.name = name
        self.fn = fn
        self.source = source
        self.target = target
        self.certificates: dict[str, int] = {}

    def __call__(self, t) -> LinComb:
        return self.fn(t)

    def apply(self, v: LinComb) -> LinComb:
        return apply_linear(self.fn, v)

    def then(self, other: "SpeciesMap", name: str | None = None) -> "SpeciesMap":
        """``other ∘ self``."""
        return SpeciesMap(name or f"{other.name}∘{self.name}",
                          lambda t: other.apply(self.fn(t)), self.source, other.target)

    def __repr__(self):
        return f"<map {self.name}>"


def identity_map(structure, name: str = "id") -> SpeciesMap:
    return SpeciesMap(name, LinComb.term, structure, structure)
