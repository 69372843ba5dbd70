"""Exhaustive checkers for the bimonoid axioms, and the antipode.

Every checker walks all label sets ``{1..n}`` for ``n <= n_max``, every
relevant decomposition and every basis term, and compares both sides of the
axiom exactly.  A failure is reported, not raised; the report carries the
first witness found.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable

from .foundations import (
    LinComb, ZERO, apply_bilinear, apply_linear, canonical_labels, enumerate_decompositions,
    enumerate_partitions, partition_support_restrict, subsets,
)
from .species import Comonoid, HypothesisError, SpeciesMap

DEFAULT_N_MAX = 4


@dataclass
class Report:
    law: str
    structure: str
    passed: bool
    n_max: int
    checked: int = 0
    witness: dict | None = None
    note: str = ""

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        d = {"law": self.law, "structure": self.structure, "passed": self.passed,
             "n_max": self.n_max, "checked": self.checked}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note:
            d["note"] = self.note
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    def __str__(self):
        head = "PASS" if self.passed else "FAIL"
        s = f"{head} {self.law} [{self.structure}] n<={self.n_max} ({self.checked} cases)"
        if self.note:
            s += f" {self.note}"
        if self.witness:
            s += "\n  witness: " + json.dumps(self.witness, ensure_ascii=False)
        return s


class _Run:
    """Accumulates a check; stops at the first counterexample."""

    def __init__(self, law, structure, n_max):
        self.report = Report(law, getattr(structure, "name", str(structure)), True, n_max)

    def ok(self):
        self.report.checked += 1

    def fail(self, **witness):
        self.report.checked += 1
        self.report.passed = False
        self.report.witness = {k: _show(v) for k, v in witness.items()}
        return self.report


def _show(v):
    if isinstance(v, (str, int)):
        return v
    if isinstance(v, tuple) and all(isinstance(x, str) for x in v):
        return list(v)
    return repr(v)


def _sizes(structure, n_max, start=0):
    lo = 1 if structure.species.positive else start
    for n in range(lo, n_max + 1):
        yield canonical_labels(n)


# -- linear helpers ---------------------------------------------------------

def mu_lin(h, u: LinComb, v: LinComb) -> LinComb:
    return apply_bilinear(h.mu, u, v)


def delta_lin(c, v: LinComb, S, T) -> LinComb:
    return apply_linear(lambda t: c.delta(t, S, T), v)


def _tensor_map(f1: Callable, f2: Callable, v: LinComb) -> LinComb:
    acc: dict = {}
    for (a, b), c in v.items():
        fa = f1(a)
        if not fa:
            continue
        fb = f2(b)
        for s, d in fa.items():
            for t, e in fb.items():
                k = (s, t)
                x = acc.get(k, 0) + c * d * e
                if x:
                    acc[k] = x
                else:
                    acc.pop(k, None)
    return LinComb._raw(acc)


def _twist(v: LinComb) -> LinComb:
    return LinComb(((b, a), c) for (a, b), c in v.items())


# -- axioms -----------------------------------------------------------------

def check_associativity(h, n_max: int = DEFAULT_N_MAX) -> Report:
    run = _Run("associativity", h, n_max)
    sp = h.species
    for I in _sizes(h, n_max):
        for R, S, T in enumerate_decompositions(I, 3):
            for x in sp.basis(R):
                for y in sp.basis(S):
                    xy = h.mu(x, y)
                    for z in sp.basis(T):
                        lhs = mu_lin(h, xy, LinComb.term(z))
                        rhs = mu_lin(h, LinComb.term(x), h.mu(y, z))
                        if lhs != rhs:
                            return run.fail(I=I, R=R, S=S, T=T, x=x, y=y, z=z, lhs=lhs, rhs=rhs)
                        run.ok()
    return run.report


def check_coassociativity(c: Comonoid, n_max: int = DEFAULT_N_MAX) -> Report:
    run = _Run("coassociativity", c, n_max)
    for I in _sizes(c, n_max):
        for R, S, T in enumerate_decompositions(I, 3):
            RS = tuple(sorted(R + S))
            ST = tuple(sorted(S + T))
            for x in c.species.basis(I):
                left = c.delta(x, RS, T)
                lhs = LinComb(((a, b, t), k * d) for (u, t), k in left.items()
                              for (a, b), d in c.delta(u, R, S).items())
                right = c.delta(x, R, ST)
                rhs = LinComb(((r, a, b), k * d) for (r, u), k in right.items()
                              for (a, b), d in c.delta(u, S, T).items())
                if lhs != rhs:
                    return run.fail(I=I, R=R, S=S, T=T, x=x, lhs=lhs, rhs=rhs)
                run.ok()
    return run.report


def check_compatibility(h, n_max: int = DEFAULT_N_MAX) -> Report:
    run = _Run("compatibility", h, n_max)
    sp = h.species
    for I in _sizes(h, n_max):
        splits = enumerate_decompositions(I, 2)
        for S, T in splits:
            for x in sp.basis(S):
                for y in sp.basis(T):
                    m = h.mu(x, y)
                    for S2, T2 in splits:
                        s2 = set(S2)
                        A = tuple(v for v in S if v in s2)
                        B = tuple(v for v in S if v not in s2)
                        C = tuple(v for v in T if v in s2)
                        D = tuple(v for v in T if v not in s2)
                        lhs = delta_lin(h, m, S2, T2)
                        dx = h.delta(x, A, B)
                        dy = h.delta(y, C, D)
                        rhs = ZERO
                        parts = []
                        for (xa, xb), c1 in dx.items():
                            for (yc, yd), c2 in dy.items():
                                left = h.mu(xa, yc)
                                right = h.mu(xb, yd)
                                parts.append(LinComb(((s, t), c1 * c2 * d * e)
                                                     for s, d in left.items() for t, e in right.items()))
                        if parts:
                            from .foundations import add
                            rhs = add(*parts)
                        if lhs != rhs:
                            return run.fail(I=I, S=S, T=T, S2=S2, T2=T2, x=x, y=y, lhs=lhs, rhs=rhs)
                        run.ok()
    return run.report


def check_cocommutativity(c: Comonoid, n_max: int = DEFAULT_N_MAX) -> Report:
    run = _Run("cocommutativity", c, n_max)
    for I in _sizes(c, n_max):
        for S, T in enumerate_decompositions(I, 2):
            for x in c.species.basis(I):
                lhs = c.delta(x, T, S)
                rhs = _twist(c.delta(x, S, T))
                if lhs != rhs:
                    return run.fail(I=I, S=S, T=T, x=x, lhs=lhs, rhs=rhs)
                run.ok()
    return run.report


def check_commutativity(h, n_max: int = DEFAULT_N_MAX) -> Report:
    run = _Run("commutativity", h, n_max)
    sp = h.species
    for I in _sizes(h, n_max):
        for S, T in enumerate_decompositions(I, 2):
            for x in sp.basis(S):
                for y in sp.basis(T):
                    lhs, rhs = h.mu(x, y), h.mu(y, x)
                    if lhs != rhs:
                        return run.fail(I=I, S=S, T=T, x=x, y=y, lhs=lhs, rhs=rhs)
                    run.ok()
    return run.report


def _is_basis_image(v: LinComb) -> bool:
    return len(v) == 1 and next(iter(v.values())) == 1


def check_linearized(h, n_max: int = DEFAULT_N_MAX) -> Report:
    """Products and (proper, for positive species) coproducts send basis to basis."""
    run = _Run("linearized", h, n_max)
    sp = h.species
    has_mu = hasattr(h, "mu")
    for I in _sizes(h, n_max):
        for S, T in enumerate_decompositions(I, 2):
            if has_mu:
                for x in sp.basis(S):
                    for y in sp.basis(T):
                        m = h.mu(x, y)
                        if not _is_basis_image(m):
                            return run.fail(map="mu", I=I, S=S, T=T, x=x, y=y, value=m)
                        run.ok()
            if sp.positive and (not S or not T):
                continue
            for x in sp.basis(I):
                d = h.delta(x, S, T)
                if not _is_basis_image(d):
                    return run.fail(map="delta", I=I, S=S, T=T, x=x, value=d)
                run.ok()
    return run.report


def check_restriction_axioms(c, n_max: int = DEFAULT_N_MAX) -> Report:
    run = _Run("restriction-axioms", c, n_max)
    if not c.has_restrictions:
        return run.fail(reason="no restriction structure")
    positive = c.species.positive
    for I in _sizes(c, n_max):
        for x in c.species.basis(I):
            if c.restrict(x, I) != x:
                return run.fail(I=I, x=x, reason="rho_I^I is not the identity")
            for V in subsets(I):
                if positive and not V:
                    continue
                xv = c.restrict(x, V)
                if xv.labels != V or xv not in c.species.basis(V):
                    return run.fail(I=I, V=V, x=x, reason="restriction leaves the species")
                for U in subsets(V):
                    if positive and not U:
                        continue
                    if c.restrict(xv, U) != c.restrict(x, U):
                        return run.fail(I=I, V=V, U=U, x=x, reason="transitivity")
                    run.ok()
    return run.report


def check_restriction_coproduct(c, n_max: int = DEFAULT_N_MAX) -> Report:
    """The coproduct equals ``ρ_S ⊗ ρ_T``."""
    run = _Run("restriction-coproduct", c, n_max)
    if not c.has_restrictions:
        return run.fail(reason="no restriction structure")
    for I in _sizes(c, n_max):
        for S, T in enumerate_decompositions(I, 2):
            if c.species.positive and (not S or not T):
                continue
            for x in c.species.basis(I):
                lhs = c.delta(x, S, T)
                rhs = LinComb.term((c.restrict(x, S), c.restrict(x, T)))
                if lhs != rhs:
                    return run.fail(I=I, S=S, T=T, x=x, lhs=lhs, rhs=rhs)
                run.ok()
    return run.report


def check_coherence(h, n_max: int = DEFAULT_N_MAX) -> Report:
    """Restriction commutes with the product: ``ρ_U μ(x, y) = μ(ρ_{S∩U} x, ρ_{T∩U} y)``."""
    run = _Run("coherence", h, n_max)
    if not h.has_restrictions:
        return run.fail(reason="no restriction structure")
    sp = h.species
    for I in _sizes(h, n_max):
        for S, T in enumerate_decompositions(I, 2):
            for x in sp.basis(S):
                for y in sp.basis(T):
                    m = h.mu(x, y)
                    for U in subsets(I):
                        u = set(U)
                        lhs = LinComb((h.restrict(t, U), c) for t, c in m.items())
                        rhs = h.mu(h.restrict(x, tuple(v for v in S if v in u)),
                                   h.restrict(y, tuple(v for v in T if v in u)))
                        if lhs != rhs:
                            return run.fail(I=I, S=S, T=T, U=U, x=x, y=y, lhs=lhs, rhs=rhs)
                        run.ok()
    return run.report


def _adjacent_transpositions(I):
    for i in range(len(I) - 1):
        sigma = {v: v for v in I}
        sigma[I[i]], sigma[I[i + 1]] = I[i + 1], I[i]
        yield sigma


def _relabel_lc(v: LinComb, sigma) -> LinComb:
    out = []
    for t, c in v.items():
        if isinstance(t, tuple):
            out.append((tuple(s.relabel(sigma) for s in t), c))
        else:
            out.append((t.relabel(sigma), c))
    return LinComb(out)


def check_naturality(h, n_max: int = DEFAULT_N_MAX) -> Report:
    """Structure maps commute with adjacent transpositions of labels."""
    run = _Run("naturality", h, n_max)
    sp = h.species
    has_mu = hasattr(h, "mu")
    for I in _sizes(h, n_max):
        for sigma in _adjacent_transpositions(I):
            for x in sp.basis(I):
                if sp.relabel(x, sigma) not in sp.basis(I):
                    return run.fail(I=I, x=x, reason="relabeling leaves the basis")
            for S, T in enumerate_decompositions(I, 2):
                S2 = tuple(sorted(sigma[v] for v in S))
                T2 = tuple(sorted(sigma[v] for v in T))
                for x in sp.basis(I):
                    lhs = _relabel_lc(h.delta(x, S, T), sigma)
                    rhs = h.delta(sp.relabel(x, sigma), S2, T2)
                    if lhs != rhs:
                        return run.fail(map="delta", I=I, S=S, T=T, x=x, lhs=lhs, rhs=rhs)
                    run.ok()
                if has_mu:
                    for x in sp.basis(S):
                        for y in sp.basis(T):
                            lhs = _relabel_lc(h.mu(x, y), sigma)
                            rhs = h.mu(x.relabel(sigma), y.relabel(sigma))
                            if lhs != rhs:
                                return run.fail(map="mu", I=I, S=S, T=T, x=x, y=y, lhs=lhs, rhs=rhs)
                            run.ok()
    return run.report


def check_delta_mu_identity(h, n_max: int = DEFAULT_N_MAX) -> Report:
    """``Δ_{S,T} ∘ μ_{S,T} = id`` on ``h[S] ⊗ h[T]``."""
    run = _Run("delta-mu-identity", h, n_max)
    sp = h.species
    for I in _sizes(h, n_max):
        for S, T in enumerate_decompositions(I, 2):
            for x in sp.basis(S):
                for y in sp.basis(T):
                    lhs = delta_lin(h, h.mu(x, y), S, T)
                    rhs = LinComb.term((x, y))
                    if lhs != rhs:
                        return run.fail(I=I, S=S, T=T, x=x, y=y, lhs=lhs)
                    run.ok()
    return run.report


# -- the coassociativity identity for (λ, ρ) ---------------------------------

def _one_pair(v: LinComb):
    if len(v) != 1 or next(iter(v.values())) != 1:
        raise HypothesisError("linearized", f"coproduct value {v!r} is not a single pair")
    return next(iter(v))


def _left_right(b):
    """Extract the set maps ``(λ, ρ)`` of a linearized comonoid from its coproduct."""
    if hasattr(b, "left") and hasattr(b, "right"):
        return b.left, b.right

    def left(x, U):
        rest = tuple(v for v in x.labels if v not in set(U))
        if not rest:
            return x
        return _one_pair(b.delta(x, tuple(U), rest))[0]

    def right(x, V):
        rest = tuple(v for v in x.labels if v not in set(V))
        if not rest:
            return x
        return _one_pair(b.delta(x, rest, tuple(V)))[1]

    return left, right


def check_cocommutativity_identity(b, n_max: int = DEFAULT_N_MAX) -> Report:
    """``ρ^{X^{RS}}_{X^S} λ^X_{X^{RS}} = λ^{X^{ST}}_{X^S} ρ^X_{X^{ST}}`` on block sets.

    For every partition ``X`` of ``{1..n}`` and ``R ⊔ S ⊔ T`` of it, applied to
    every ``b``-structure on the blocks of ``X``.  For positive ``b`` the
    middle part ``S`` must be nonempty.
    """
    run = _Run("cocommutativity-identity", b, n_max)
    left, right = _left_right(b)
    positive = b.species.positive
    for I in _sizes(b, n_max, start=1):
        parts = enumerate_decompositions(I, 3)
        if positive:
            # λ and ρ only exist on nonempty sets here
            parts = [(R, S, T) for R, S, T in parts if S]
        for X in enumerate_partitions(I):
            terms = b.species.basis(X)
            for R, S, T in parts:
                XRS = partition_support_restrict(X, R + S)
                XST = partition_support_restrict(X, S + T)
                XS = partition_support_restrict(X, S)
                for x in terms:
                    lhs = right(left(x, XRS), XS)
                    rhs = left(right(x, XST), XS)
                    if lhs != rhs:
                        return run.fail(X=X, R=R, S=S, T=T, x=x, lhs=lhs, rhs=rhs)
                    run.ok()
    return run.report


# -- antipode and convolution ------------------------------------------------

def convolution(f: Callable, g: Callable, h) -> Callable:
    """``f * g = μ ∘ (f ⊗ g) ∘ Δ`` as a map on basis terms."""

    def conv(x) -> LinComb:
        I = x.labels
        acc = []
        for S, T in enumerate_decompositions(I, 2):
            for (a, b), c in h.delta(x, S, T).items():
                acc.append(c * mu_lin(h, f(a), g(b)))
        from .foundations import add
        return add(*acc) if acc else ZERO

    return conv


def antipode(h, x) -> LinComb:
    """The antipode of a connected bimonoid, by recursion on the size of ``I``."""
    if not h.connected:
        raise HypothesisError("connected", "antipode recursion needs a connected bimonoid")
    cache = h.__dict__.setdefault("_antipode_cache", {})
    if x in cache:
        return cache[x]
    I = x.labels
    if not I:
        out = LinComb.term(x)
    else:
        parts = [-LinComb.term(x)]
        for S, T in enumerate_decompositions(I, 2):
            if len(S) == len(I) or not S:
                continue
            for (a, b), c in h.delta(x, S, T).items():
                parts.append(-c * mu_lin(h, antipode(h, a), LinComb.term(b)))
        from .foundations import add
        out = add(*parts)
    cache[x] = out
    return out


def antipode_lin(h, v: LinComb) -> LinComb:
    return apply_linear(lambda t: antipode(h, t), v)


def check_antipode(h, n_max: int = DEFAULT_N_MAX) -> Report:
    """Both convolution identities ``s * id = id * s = ι ε`` hold."""
    run = _Run("antipode", h, n_max)
    s = lambda t: antipode(h, t)
    left = convolution(s, LinComb.term, h)
    right = convolution(LinComb.term, s, h)
    for I in _sizes(h, n_max):
        for x in h.species.basis(I):
            expected = LinComb.term(x) if not I else ZERO
            for side, f in (("left", left), ("right", right)):
                got = f(x)
                if got != expected:
                    return run.fail(side=side, I=I, x=x, got=got, expected=expected)
            run.ok()
    return run.report


def check_antipode_involution(h, n_max: int = DEFAULT_N_MAX) -> Report:
    run = _Run("antipode-involution", h, n_max)
    for I in _sizes(h, n_max):
        for x in h.species.basis(I):
            got = antipode_lin(h, antipode(h, x))
            if got != LinComb.term(x):
                return run.fail(I=I, x=x, got=got)
            run.ok()
    return run.report


# -- morphisms --------------------------------------------------------------

def check_morphism(f, source, target, n_max: int = DEFAULT_N_MAX,
                   parts: Iterable[str] = ("mu", "delta", "unit"), name: str | None = None) -> Report:
    """``f`` intertwines the selected structure maps of ``source`` and ``target``."""
    fname = name or getattr(f, "name", "map")
    run = _Run("morphism:" + "+".join(parts), fname, n_max)
    F = f if callable(f) else f.fn
    apply = lambda v: apply_linear(F, v)
    sp = source.species
    parts = tuple(parts)
    if "unit" in parts and source.connected:
        got = F(source.unit())
        if got != LinComb.term(target.unit()):
            return run.fail(map="unit", got=got)
        run.ok()
    for I in _sizes(source, n_max):
        for S, T in enumerate_decompositions(I, 2):
            if "mu" in parts:
                for x in sp.basis(S):
                    fx = F(x)
                    for y in sp.basis(T):
                        lhs = apply(source.mu(x, y))
                        rhs = mu_lin(target, fx, F(y))
                        if lhs != rhs:
                            return run.fail(map="mu", I=I, S=S, T=T, x=x, y=y, lhs=lhs, rhs=rhs)
                        run.ok()
            if "delta" in parts:
                if sp.positive and (not S or not T):
                    continue
                for x in sp.basis(I):
                    lhs = delta_lin(target, F(x), S, T)
                    rhs = _tensor_map(F, F, source.delta(x, S, T))
                    if lhs != rhs:
                        return run.fail(map="delta", I=I, S=S, T=T, x=x, lhs=lhs, rhs=rhs)
                    run.ok()
    return run.report


def check_restriction_morphism(f, source, target, n_max: int = DEFAULT_N_MAX,
                               name: str | None = None) -> Report:
    """``f`` is the linearization of a set map commuting with restrictions."""
    fname = name or getattr(f, "name", "map")
    run = _Run("restriction-morphism", fname, n_max)
    if not (source.has_restrictions and target.has_restrictions):
        return run.fail(reason="source or target lacks restrictions")
    F = f if callable(f) else f.fn
    positive = source.species.positive
    for I in _sizes(source, n_max):
        for x in source.species.basis(I):
            fx = F(x)
            if not _is_basis_image(fx):
                return run.fail(reason="not the linearization of a set map", I=I, x=x, value=fx)
            for U in subsets(I):
                if positive and not U:
                    continue
                lhs = F(source.restrict(x, U))
                rhs = LinComb((target.restrict(t, U), c) for t, c in fx.items())
                if lhs != rhs:
                    return run.fail(reason="does not commute with restriction", I=I, U=U, x=x,
                                    lhs=lhs, rhs=rhs)
                run.ok()
    return run.report


def check_equal_maps(f, g, species, n_max: int = DEFAULT_N_MAX, name: str = "maps agree") -> Report:
    run = _Run(name, species, n_max)
    lo = 1 if species.positive else 0
    for n in range(lo, n_max + 1):
        for x in species.basis(canonical_labels(n)):
            a, b = f(x), g(x)
            if a != b:
                return run.fail(x=x, lhs=a, rhs=b)
            run.ok()
    return run.report


# -- certificates -----------------------------------------------------------

PROPERTY_CHECKS = {
    "associative": check_associativity,
    "coassociative": check_coassociativity,
    "compatible": check_compatibility,
    "cocommutative": check_cocommutativity,
    "commutative": check_commutativity,
    "linearized": check_linearized,
    "restrictions": check_restriction_axioms,
    "restriction-coproduct": check_restriction_coproduct,
    "coherence": check_coherence,
}


def certify(h, prop: str, n_max: int = 3) -> Report | None:
    """Run the checker for ``prop`` unless a certificate at ``n_max`` exists."""
    if prop == "connected":
        if not h.connected:
            raise HypothesisError("connected", f"{h.name} has {len(h.species.basis(()))} structures on ∅")
        return None
    if prop == "restrictions" and not h.has_restrictions:
        raise HypothesisError("restrictions", f"{h.name} has no restriction structure")
    if h.certificates.get(prop, -1) >= n_max:
        return None
    rep = PROPERTY_CHECKS[prop](h, n_max)
    if not rep.passed:
        raise HypothesisError(prop, f"{h.name} fails at n<={n_max}: {json.dumps(rep.witness, ensure_ascii=False)}")
    h.certificates[prop] = n_max
    return rep


def require(h, props: Iterable[str], n_max: int = 3) -> None:
    for p in props:
        certify(h, p, n_max)


def certify_map(f: SpeciesMap, kind: str, source, target, n_max: int = 3) -> None:
    """Certify a map as ``bimonoid``, ``comonoid`` or ``restriction`` morphism."""
    if f.certificates.get(kind, -1) >= n_max:
        return
    if kind == "bimonoid":
        rep = check_morphism(f, source, target, n_max)
    elif kind == "comonoid":
        rep = check_morphism(f, source, target, n_max, parts=("delta",))
    elif kind == "restriction":
        rep = check_restriction_morphism(f, source, target, n_max)
    else:
        raise ValueError(f"unknown morphism kind {kind!r}")
    if not rep.passed:
        raise HypothesisError(f"{kind} morphism",
                              f"{f.name} fails at n<={n_max}: {json.dumps(rep.witness, ensure_ascii=False)}")
    f.certificates[kind] = n_max
