"""The one-parameter family between ``𝒯^b(p)`` and ``𝒯^d(q)``.

For a threshold ``r`` the carrier is ``(b∘p_{≥r}) · (d∘q_{<r})``.  It is a
quotient of the Cauchy product ``𝒯^b(p) · 𝒯^d(q_{<r})``: in an ambient term,
the small blocks (fewer than ``r`` labels) of the first coordinate are pushed
into the second coordinate through ``τ`` and ``θ``.  That rewrite, ``reduce``,
picks the canonical coset representative, so the quotient structure maps are
``reduce ∘ μ`` and ``(reduce ⊗ reduce) ∘ Δ``.
"""

from __future__ import annotations

from .foundations import (
    Echelon, LinComb, ZERO, add, apply_linear, canonical_labels, enumerate_decompositions,
    group_blocks_by_size, large_small_split, rank, tensor_expand,
)
from .ops import CauchyBimonoid, CauchySpecies, CauchyTerm, SubstitutionSpecies, SubstTerm, subst_term
from .species import Bimonoid, SpeciesMap, truncate, truncate_comonoid
from .tee import Tee, build_tee
from . import verify


def _sub(x: SubstTerm, blocks, b) -> SubstTerm:
    """The part of ``x`` on a subset of its blocks (outer term restricted)."""
    keep = set(blocks)
    pairs = [(B, t) for B, t in zip(x.blocks, x.inner) if B in keep]
    return subst_term(pairs, b.restrict(x.outer, tuple(B for B in x.blocks if B in keep)))


class RTee:
    """The data ``(r, b, d, p, q, τ, θ)`` and everything built from it."""

    def __init__(self, r: int, b, d, p, q, tau, theta, n_max: int = 3, check: bool = True):
        if r < 1:
            raise ValueError("the threshold r must be at least 1")
        self.r = r
        self.b, self.d, self.p, self.q = b, d, p, q
        self.tau, self.theta = tau, theta
        if check:
            verify.certify(d, "commutative", n_max)
            verify.certify_map(tau, "restriction", b, d, n_max)
            verify.certify_map(tau, "bimonoid", b, d, n_max)
            verify.certify_map(theta, "comonoid", p, q, n_max)
        self.source = build_tee(b, p, n_max) if check else Tee(b, p)
        self.target = build_tee(d, q, n_max) if check else Tee(d, q)
        q_small = truncate_comonoid(q, "<", r)
        self.lower = Tee(d, q_small, f"T[{d.name}]({q.name}<{r})")
        self.ambient = CauchyBimonoid(self.source, self.lower)
        self.carrier_species = CauchySpecies(SubstitutionSpecies(b.species, truncate(p.species, ">=", r)),
                                             self.lower.species)
        self.carrier = QuotientBimonoid(self)
        self.name = f"R{{{r}}}[{b.name},{d.name}]({p.name},{q.name})"

    # -- the rewrite ----------------------------------------------------------

    def reduce_term(self, t: CauchyTerm) -> LinComb:
        x, y = t.left, t.right
        large, small = large_small_split(x.blocks, self.r)
        if not small:
            return LinComb.term(t)
        left = _sub(x, large, self.b)
        bs = self.b.restrict(x.outer, small)
        d_outer = self.d.mu_lin(self.tau(bs), LinComb.term(y.outer))
        inner = dict(zip(x.blocks, x.inner))
        thetas = [self.theta(inner[B]) for B in small]
        out = {}
        for combo, c in tensor_expand(d_outer, *thetas).items():
            pairs = list(zip(small, combo[1:])) + list(zip(y.blocks, y.inner))
            k = CauchyTerm(left, subst_term(pairs, combo[0]))
            out[k] = out.get(k, 0) + c
        return LinComb(out)

    def reduce(self, v: LinComb) -> LinComb:
        return apply_linear(self.reduce_term, v)

    def reduce_pairs(self, v: LinComb) -> LinComb:
        acc = []
        for (a, b), c in v.items():
            ra = self.reduce_term(a)
            if not ra:
                continue
            rb = self.reduce_term(b)
            acc.append(c * tensor_expand(ra, rb))
        return add(*acc) if acc else ZERO

    # -- the ideal ---------------------------------------------------------------

    def generators(self, labels) -> list[LinComb]:
        """``t − reduce(t)`` for every ambient term ``t`` with a small block."""
        out = []
        for t in self.ambient.species.basis(labels):
            if large_small_split(t.left.blocks, self.r)[1]:
                out.append(LinComb.term(t) - self.reduce_term(t))
        return out

    def _echelon(self, labels) -> Echelon:
        cache = self.__dict__.setdefault("_ech", {})
        key = tuple(labels)
        if key not in cache:
            ech = Echelon(self.ambient.species.basis(labels))
            for g in self.generators(labels):
                ech.insert(g)
            cache[key] = ech
        return cache[key]

    def in_ideal(self, v: LinComb, labels) -> bool:
        return self._echelon(labels).contains(v)[0]

    # -- maps -----------------------------------------------------------------

    def hat_f_term(self, x: SubstTerm) -> LinComb:
        """Restrict the outer term to each size class, map by ``τ``, multiply in ``d``;
        apply ``θ`` blockwise."""
        acc = LinComb.term(self.d.unit())
        for cls in group_blocks_by_size(x.blocks):
            if cls:
                acc = self.d.mu_lin(acc, self.tau(self.b.restrict(x.outer, cls)))
        vs = [acc] + [self.theta(t) for t in x.inner]
        out = {}
        for combo, c in tensor_expand(*vs).items():
            k = subst_term(zip(x.blocks, combo[1:]), combo[0])
            out[k] = out.get(k, 0) + c
        return LinComb(out)

    def hat_f(self) -> SpeciesMap:
        return SpeciesMap("hat_f", self.hat_f_term, self.source, self.target)

    def _port_low(self, x: SubstTerm, s: int):
        large, small = large_small_split(x.blocks, s)
        return _sub(x, large, self.b), self.hat_f_term(_sub(x, small, self.b))

    def port_r_term(self, x: SubstTerm) -> LinComb:
        left, right = self._port_low(x, self.r)
        return LinComb((CauchyTerm(left, y), c) for y, c in right.items())

    def port_r(self) -> SpeciesMap:
        return SpeciesMap(f"port_{self.r}", self.port_r_term, self.source, self.carrier)

    def port_upper_r_term(self, t: CauchyTerm) -> LinComb:
        return self.target.mu_lin(self.hat_f_term(t.left), LinComb.term(t.right))

    def port_upper_r(self) -> SpeciesMap:
        return SpeciesMap(f"port^{self.r}", self.port_upper_r_term, self.carrier, self.target)


class QuotientBimonoid(Bimonoid):
    """The carrier with the structure maps induced from the ambient."""

    def __init__(self, rt: RTee):
        super().__init__(rt.carrier_species, f"R{{{rt.r}}}")
        self.rt = rt

    def mu(self, x, y):
        return self.rt.reduce(self.rt.ambient.mu(x, y))

    def delta(self, x, S, T):
        return self.rt.reduce_pairs(self.rt.ambient.delta(x, S, T))

    def unit(self):
        return CauchyTerm(self.rt.source.unit(), self.rt.lower.unit())


def build_rtee(r, b, d, p, q, tau, theta, n_max: int = 3, check: bool = True) -> RTee:
    return RTee(r, b, d, p, q, tau, theta, n_max, check)


def port_s_r(rt: RTee, rs: RTee) -> SpeciesMap:
    """From the ``r`` carrier to the ``s`` carrier: blocks that are large for
    ``r`` but small for ``s`` move to the second coordinate."""
    if not rt.r < rs.r:
        raise ValueError(f"port^r_s needs r < s, got r={rt.r}, s={rs.r}")

    def fn(t: CauchyTerm) -> LinComb:
        left, right = rt._port_low(t.left, rs.r)
        prod = rt.target.mu_lin(right, LinComb.term(t.right))
        return LinComb((CauchyTerm(left, y), c) for y, c in prod.items())
    return SpeciesMap(f"port^{rt.r}_{rs.r}", fn, rt.carrier, rs.carrier)


# -- checks -----------------------------------------------------------------------

def _ambient_sizes(rt, n_max):
    for n in range(n_max + 1):
        yield canonical_labels(n)


def check_ideal(rt: RTee, n_max: int = 3) -> verify.Report:
    """``h·x`` and ``x·h`` stay in the span of the generators."""
    run = verify._Run("ideal", rt.name, n_max)
    amb = rt.ambient
    for I in _ambient_sizes(rt, n_max):
        for S, T in enumerate_decompositions(I, 2):
            gens = rt.generators(T)
            if not gens:
                continue
            for h in amb.species.basis(S):
                hv = LinComb.term(h)
                for g in gens:
                    for side, v in (("left", amb.mu_lin(hv, g)), ("right", amb.mu_lin(g, hv))):
                        if not rt.in_ideal(v, I):
                            return run.fail(side=side, I=I, S=S, T=T, h=h, generator=g, product=v)
                        run.ok()
    return run.report


def check_coideal(rt: RTee, n_max: int = 3, cross_check: bool = True) -> verify.Report:
    """``Δ(x) ∈ ambient ⊗ span + span ⊗ ambient`` for every generator ``x``."""
    run = verify._Run("coideal", rt.name, n_max)
    amb = rt.ambient
    for I in _ambient_sizes(rt, n_max):
        gens = rt.generators(I)
        if not gens:
            continue
        for S, T in enumerate_decompositions(I, 2):
            bs, bt = amb.species.basis(S), amb.species.basis(T)
            universe = [(a, c) for a in bs for c in bt]
            ech = Echelon(universe)
            for g in rt.generators(T):
                for a in bs:
                    ech.insert(tensor_expand(LinComb.term(a), g))
            for g in rt.generators(S):
                for c in bt:
                    ech.insert(tensor_expand(g, LinComb.term(c)))
            for x in gens:
                dx = amb.delta_lin(x, S, T)
                if not ech.contains(dx)[0]:
                    return run.fail(I=I, S=S, T=T, generator=x, delta=dx)
                if cross_check and rt.reduce_pairs(dx):
                    return run.fail(I=I, S=S, T=T, generator=x, reason="reduced coproduct is nonzero")
                run.ok()
    return run.report


def quotient_dims(rt: RTee, n_max: int = 3) -> list[dict]:
    """Per degree: ambient dimension, rank of the generators, carrier dimension."""
    rows = []
    for n in range(n_max + 1):
        I = canonical_labels(n)
        amb = len(rt.ambient.species.basis(I))
        rk = rank(rt.generators(I), rt.ambient.species.basis(I))
        car = len(rt.carrier_species.basis(I))
        rows.append({"n": n, "ambient": amb, "rank": rk, "carrier": car, "ok": amb - rk == car})
    return rows


def check_quotient_dims(rt: RTee, n_max: int = 3) -> verify.Report:
    run = verify._Run("quotient-dims", rt.name, n_max)
    for row in quotient_dims(rt, n_max):
        if not row["ok"]:
            return run.fail(**row)
        run.ok()
    return run.report


def check_reduce_confluent(rt: RTee, n_max: int = 3) -> verify.Report:
    """Reducing is idempotent and agrees with membership in the quotient."""
    run = verify._Run("reduce-normal-form", rt.name, n_max)
    carrier = set()
    for I in _ambient_sizes(rt, n_max):
        carrier = set(rt.carrier_species.basis(I))
        for t in rt.ambient.species.basis(I):
            r = rt.reduce_term(t)
            if any(k not in carrier for k in r):
                return run.fail(I=I, t=t, reason="reduct leaves the carrier", value=r)
            if rt.reduce(r) != r:
                return run.fail(I=I, t=t, reason="reduce is not idempotent")
            if not rt.in_ideal(LinComb.term(t) - r, I):
                return run.fail(I=I, t=t, reason="t - reduce(t) is outside the ideal")
            run.ok()
    return run.report


def check_rank_surjective(f: SpeciesMap, source_species, target_species, n_max: int = 4,
                          name: str | None = None) -> verify.Report:
    run = verify._Run("surjective", name or f.name, n_max)
    for n in range(n_max + 1):
        I = canonical_labels(n)
        tgt = target_species.basis(I)
        rk = rank((f(t) for t in source_species.basis(I)), tgt)
        if rk != len(tgt):
            return run.fail(n=n, rank=rk, target=len(tgt))
        run.ok()
    return run.report


def check_collapse(rt: RTee, n: int) -> verify.Report:
    """At ``r = 1`` the carrier is ``𝒯^b(p)``; at ``r > n`` it is ``𝒯^d(q)`` in degree ``n``."""
    run = verify._Run("collapse", rt.name, n)
    I = canonical_labels(n)
    car = rt.carrier_species.basis(I)
    if rt.r == 1:
        src = rt.source.species.basis(I)
        images = [rt.port_r_term(x) for x in src]
        ok = len(car) == len(src) and all(len(v) == 1 and v == LinComb.term(CauchyTerm(x, rt.lower.unit()))
                                          for x, v in zip(src, images))
    elif rt.r > n:
        tgt = rt.target.species.basis(I)
        images = {rt.port_upper_r_term(t).single()[0] for t in car}
        ok = len(car) == len(tgt) and images == set(tgt)
    else:
        return run.fail(reason="threshold is neither 1 nor above n")
    if not ok:
        return run.fail(I=I, r=rt.r)
    run.ok()
    return run.report
