"""The bimonoid on ``b∘p`` built from a cocommutative linearized ``b``.

A term of ``b∘p`` on ``I`` is a partition ``X`` of ``I``, a ``b``-structure on
the blocks of ``X`` and a ``p``-structure on each block.  The product
multiplies the outer structures and keeps the blocks; the coproduct restricts
the outer structure to the blocks meeting each side, renames those blocks to
their intersections with that side, and splits every straddling block with
the coproduct of ``p``.
"""

from __future__ import annotations

from typing import Callable

from .foundations import (
    LinComb, ZERO, block_transport,
)
from .ops import SubstTerm, SubstitutionSpecies, subst_term
from .species import Bimonoid, CapabilityError, Comonoid, HypothesisError


def restrict_down(b, outer, X, T, rho: Callable | None = None):
    """Restrict ``outer`` to the blocks of ``X`` meeting ``T``, then rename
    each block to its intersection with ``T``."""
    if rho is None:
        if not b.has_restrictions:
            raise CapabilityError(f"{b.name} has no restriction structure")
        rho = b.restrict
    transport = block_transport(X, T)
    support = tuple(B for B in X if B in transport)
    r = rho(outer, support)
    return r.relabel(transport)


def tilde_delta(p: Comonoid, x: SubstTerm, S, T) -> LinComb:
    """Split the inner structures of ``x`` along ``S ⊔ T``.

    Returns a combination of pairs ``(left, right)``; each side is a sorted
    tuple of ``(block, term)`` pairs over the blocks cut out on that side.
    """
    S = set(S)
    branches = {((), ()): 1}
    for B, t in zip(x.blocks, x.inner):
        BS = tuple(v for v in B if v in S)
        BT = tuple(v for v in B if v not in S)
        if not BT:
            options = {(((B, t),), ()): 1}
        elif not BS:
            options = {((), ((B, t),)): 1}
        else:
            options = {(((BS, a),), ((BT, b),)): c for (a, b), c in p.delta(t, BS, BT).items()}
            if not options:
                return ZERO
        nxt: dict = {}
        for (l, r), c in branches.items():
            for (l2, r2), d in options.items():
                k = (l + l2, r + r2)
                nxt[k] = nxt.get(k, 0) + c * d
        branches = nxt
    return LinComb(((tuple(sorted(l)), tuple(sorted(r))), c) for (l, r), c in branches.items())


class SubstitutionComonoid(Comonoid):
    """The coproduct on ``b∘p`` alone; ``b`` need not be connected."""

    def __init__(self, b, p: Comonoid, name: str | None = None,
                 left: Callable | None = None, right: Callable | None = None):
        if not p.species.positive:
            raise HypothesisError("positive", f"{p.name} has structures on ∅")
        super().__init__(SubstitutionSpecies(b.species, p.species), name or f"{b.name} o {p.name}")
        self.b, self.p = b, p
        self._left = left
        self._right = right
        self.has_restrictions = b.has_restrictions and p.has_restrictions

    def delta(self, x: SubstTerm, S, T) -> LinComb:
        if self.b.species.positive and (not S or not T):
            return ZERO
        X = x.blocks
        bl = restrict_down(self.b, x.outer, X, S, self._left)
        br = restrict_down(self.b, x.outer, X, T, self._right)
        out = {}
        for (l, r), c in tilde_delta(self.p, x, S, T).items():
            k = (subst_term(l, bl), subst_term(r, br))
            out[k] = out.get(k, 0) + c
        return LinComb(out)

    def restrict(self, x: SubstTerm, U):
        """Restrictions induced from those of ``b`` and ``p``."""
        if not self.has_restrictions:
            raise CapabilityError(f"{self.name} has no restriction structure")
        U = set(U)
        outer = restrict_down(self.b, x.outer, x.blocks, U)
        pairs = []
        for B, t in zip(x.blocks, x.inner):
            BU = tuple(v for v in B if v in U)
            if BU:
                pairs.append((BU, t if BU == B else self.p.restrict(t, BU)))
        return subst_term(pairs, outer)


class Tee(SubstitutionComonoid, Bimonoid):
    """``𝒯^b(p)``: the bimonoid on ``b∘p`` for connected ``b``."""

    def __init__(self, b, p: Comonoid, name: str | None = None, **kw):
        super().__init__(b, p, name or f"T[{b.name}]({p.name})", **kw)

    def mu(self, x: SubstTerm, y: SubstTerm) -> LinComb:
        pairs = list(zip(x.blocks, x.inner)) + list(zip(y.blocks, y.inner))
        return LinComb((subst_term(pairs, o), c) for o, c in self.b.mu(x.outer, y.outer).items())

    def unit(self):
        return SubstTerm((), self.b.unit(), ())


TEE_HYPOTHESES = ("linearized", "cocommutative", "restrictions", "restriction-coproduct", "coherence")


def _check_inputs(b, p, n_max, connected):
    from . import verify
    if not p.species.positive:
        raise HypothesisError("positive", f"{p.name} has structures on ∅")
    props = (("connected",) if connected else ()) + TEE_HYPOTHESES
    if not connected:
        props = tuple(q for q in props if q != "coherence")
    for prop in props:
        verify.certify(b, prop, n_max)


def build_tee(b, p: Comonoid, n_max: int = 3, unchecked: bool = False, name: str | None = None) -> Tee:
    """Build ``𝒯^b(p)`` after certifying the hypotheses on ``b`` up to ``n_max``.

    With ``unchecked=True`` nothing is certified and the coproduct uses the
    maps ``(λ, ρ)`` read off ``Δ^b`` in place of restrictions; this is only
    meant for exhibiting what goes wrong without cocommutativity.
    """
    if unchecked:
        from .verify import _left_right
        left, right = _left_right(b)
        return Tee(b, p, name, left=left, right=right)
    _check_inputs(b, p, n_max, connected=True)
    return Tee(b, p, name)


def substitution_comonoid(b, p: Comonoid, n_max: int = 3, name: str | None = None) -> SubstitutionComonoid:
    """``b∘p`` as a comonoid, for a cocommutative linearized ``b`` with restrictions."""
    _check_inputs(b, p, n_max, connected=False)
    return SubstitutionComonoid(b, p, name)


def T(p: Comonoid, n_max: int = 3) -> Tee:
    from .zoo import hopf_L
    return build_tee(hopf_L(), p, n_max)


def S(p: Comonoid, n_max: int = 3) -> Tee:
    from .zoo import hopf_E
    return build_tee(hopf_E(), p, n_max)
