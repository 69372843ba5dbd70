"""Maps between substitution bimonoids.

Covers the blockwise map ``f_{τ,θ}``, abelianization, the regrouping
isomorphism for iterated substitution, evaluation ``χ`` for ``b ∈ {L, E}``,
the two embeddings and the poset collapse.
"""

from __future__ import annotations

from .foundations import LinComb, labelset, tensor_expand
from .ops import SubstTerm, subst_term
from .species import HypothesisError, SpeciesMap, identity_map, positive_part
from .tee import Tee, build_tee, substitution_comonoid
from . import verify
from . import zoo


def _blockwise(outer_map, inner_map):
    def fn(x: SubstTerm) -> LinComb:
        vs = [outer_map(x.outer)] + [inner_map(t) for t in x.inner]
        out = {}
        for combo, c in tensor_expand(*vs).items():
            k = subst_term(zip(x.blocks, combo[1:]), combo[0])
            out[k] = out.get(k, 0) + c
        return LinComb(out)
    return fn


def f_tau_theta(src: Tee, tgt: Tee, tau, theta, n_max: int = 3, check: bool = True,
                name: str | None = None) -> SpeciesMap:
    """``b_X ⊗ ⊗ p_B ↦ τ(b_X) ⊗ ⊗ θ(p_B)``.

    ``τ`` must be a bimonoid map commuting with restrictions and ``θ`` a
    comonoid map; both are certified up to ``n_max`` unless ``check`` is off.
    """
    if check:
        verify.certify_map(tau, "restriction", src.b, tgt.b, n_max)
        verify.certify_map(tau, "bimonoid", src.b, tgt.b, n_max)
        verify.certify_map(theta, "comonoid", src.p, tgt.p, n_max)
    return SpeciesMap(name or f"f[{tau.name},{theta.name}]", _blockwise(tau, theta), src, tgt)


def abelianization(p, n_max: int = 3) -> SpeciesMap:
    """``𝒯(p) → 𝒮(p)``, forgetting the order of the blocks."""
    src = build_tee(zoo.hopf_L(), p, n_max)
    tgt = build_tee(zoo.hopf_E(), p, n_max)
    return f_tau_theta(src, tgt, zoo.tau_LE(), identity_map(p), n_max, name="pi")


# -- regrouping iterated substitutions ---------------------------------------

def _regroup(x: SubstTerm) -> SubstTerm:
    """``(b ⊗ p-blocks) ⊗ q-blocks  ↦  b ⊗ (p ⊗ q-blocks)-blocks``."""
    inner_q = dict(zip(x.blocks, x.inner))
    mid = x.outer  # a b∘p term whose labels are blocks of x
    rename = {A: labelset(v for B in A for v in B) for A in mid.blocks}
    pairs = []
    for A, pt in zip(mid.blocks, mid.inner):
        pairs.append((rename[A], SubstTerm(A, pt, tuple(inner_q[B] for B in A))))
    return subst_term(pairs, mid.outer.relabel(rename))


def _unregroup(y: SubstTerm) -> SubstTerm:
    qpairs = []
    mid_pairs = []
    back = {}
    for B, pq in zip(y.blocks, y.inner):
        qpairs.extend(zip(pq.blocks, pq.inner))
        back[B] = pq.blocks
        mid_pairs.append((pq.blocks, pq.outer))
    mid = subst_term(mid_pairs, y.outer.relabel(back))
    return subst_term(qpairs, mid)


class AssocIso:
    """The isomorphism ``𝒯^{𝒯^b(p)}(q) → 𝒯^b(p∘q)`` and its inverse."""

    def __init__(self, b, p, q, n_max: int = 3):
        inner = build_tee(b, p, n_max)
        self.source = build_tee(inner, q, n_max)
        self.target = build_tee(b, substitution_comonoid(p, q, n_max), n_max)
        self.forward = SpeciesMap("phi", lambda x: LinComb.term(_regroup(x)), self.source, self.target)
        self.backward = SpeciesMap("phi^-1", lambda y: LinComb.term(_unregroup(y)), self.target, self.source)

    def check_bijective(self, n_max: int = 3) -> verify.Report:
        run = verify._Run("bijection", "phi", n_max)
        for n in range(n_max + 1):
            from .foundations import canonical_labels
            I = canonical_labels(n)
            src = self.source.species.basis(I)
            tgt = set(self.target.species.basis(I))
            images = [_regroup(x) for x in src]
            if len(set(images)) != len(src) or set(images) != tgt:
                return run.fail(I=I, reason="regrouping is not a bijection",
                                source=len(src), target=len(tgt))
            for x, y in zip(src, images):
                if _unregroup(y) != x:
                    return run.fail(I=I, x=x, reason="inverse does not round-trip")
            run.ok()
        return run.report


def assoc_iso(b, p, q, n_max: int = 3) -> AssocIso:
    return AssocIso(b, p, q, n_max)


# -- evaluation χ ---------------------------------------------------------------

def chi_eval(kind: str, h, x: SubstTerm, n_max: int = 3) -> LinComb:
    """Multiply the inner ``h``-terms of ``x`` in the order given by the outer term.

    ``kind`` is ``"L"`` (order from the outer list) or ``"E"`` (block order,
    which needs ``h`` commutative).
    """
    if kind == "L":
        order = x.outer.seq
    elif kind == "E":
        verify.certify(h, "commutative", n_max)
        order = x.blocks
    else:
        raise HypothesisError("b in {L, E}", f"no evaluation map for {kind!r}")
    acc = LinComb.term(h.unit())
    for B in order:
        acc = h.mu_lin(acc, LinComb.term(x.inner_of(B)))
    return acc


def chi_map(kind: str, h, n_max: int = 3) -> tuple[SpeciesMap, Tee]:
    """``χ`` as a map out of ``𝒯^b(h_+)``, together with that bimonoid."""
    if kind == "E":
        verify.certify(h, "commutative", n_max)
    b = zoo.hopf_L() if kind == "L" else zoo.hopf_E()
    src = build_tee(b, positive_part(h), n_max)
    return SpeciesMap(f"chi[{kind},{h.name}]", lambda x: chi_eval(kind, h, x, n_max), src, h), src


def check_chi_squares(kind: str, h, n_max: int = 4) -> verify.Report:
    """Both squares: ``χ`` intertwines the products and the coproducts."""
    chi, src = chi_map(kind, h)
    return verify.check_morphism(chi, src, h, n_max, parts=("mu", "delta", "unit"))


# -- embeddings -----------------------------------------------------------------

def embed_p(tee: Tee, distinguished=None) -> SpeciesMap:
    """``p → 𝒯^b(p)_+``: one block carrying the distinguished singleton ``b``-term."""
    pick = distinguished or (lambda B: _singleton_term(tee.b.species, (B,)))

    def fn(t):
        B = t.labels
        return LinComb.term(SubstTerm((B,), pick(B), (t,)))
    return SpeciesMap(f"embed[{tee.p.name}]", fn, tee.p, tee)


def embed_b(tee: Tee, distinguished=None) -> SpeciesMap:
    """``b → 𝒯^b(p)``: singleton blocks decorated by the distinguished ``p``-term."""
    pick = distinguished or (lambda v: _singleton_term(tee.p.species, (v,)))

    def fn(t):
        sigma = {v: (v,) for v in t.labels}
        return LinComb.term(SubstTerm(tuple((v,) for v in t.labels), t.relabel(sigma),
                                      tuple(pick(v) for v in t.labels)))
    return SpeciesMap(f"embed[{tee.b.name}]", fn, tee.b, tee)


def _singleton_term(species, labels):
    b = species.basis(labels)
    if not b:
        raise HypothesisError("singleton structure", f"{species.name} has no structure on a singleton")
    if len(b) > 1:
        raise HypothesisError("distinguished singleton", f"{species.name} needs a chosen singleton term")
    return b[0]


def check_injective(f: SpeciesMap, species, n_max: int = 4) -> verify.Report:
    """Images of distinct basis terms are linearly independent."""
    from .foundations import canonical_labels, rank
    run = verify._Run("injective", f.name, n_max)
    lo = 1 if species.positive else 0
    for n in range(lo, n_max + 1):
        basis = species.basis(canonical_labels(n))
        if rank(f(t) for t in basis) != len(basis):
            return run.fail(n=n, reason="images are dependent")
        run.ok()
    return run.report


# -- posets -----------------------------------------------------------------------

def poset_collapse(x: SubstTerm):
    """The poset on the ground set: inside blocks use the block poset, across
    blocks use the outer poset."""
    where = {v: B for B in x.blocks for v in B}
    rel = set()
    for B, t in zip(x.blocks, x.inner):
        rel.update(t.rel)
    for A, B in x.outer.rel:
        rel.update((a, b) for a in A for b in B)
    return zoo.Poset(labelset(where), tuple(sorted(rel)))


def poset_collapse_map(src: Tee) -> SpeciesMap:
    return SpeciesMap("collapse", lambda x: LinComb.term(poset_collapse(x)), src, zoo.hopf_Poset())


class PosetSplittings:
    """``O₁ → 𝒯^{P₁}(P₁₊) → P₁`` through ``α`` or ``λ``, and the inclusion ``P₁ → O₁``."""

    def __init__(self, n_max: int = 3):
        P = zoo.hopf_Poset()
        self.P = P
        self.O1 = build_tee(P, zoo.comonoid_E_plus(), n_max, name="O1")
        self.PP = build_tee(P, zoo.comonoid_Poset_plus(), n_max)
        self.collapse = poset_collapse_map(self.PP)
        self.include = embed_b(self.O1)
        self.via = {}
        for theta in (zoo.alpha(), zoo.lam()):
            f = f_tau_theta(self.O1, self.PP, identity_map(P), theta, n_max, check=False,
                            name=f"f[id,{theta.name}]")
            verify.certify_map(theta, "comonoid", self.O1.p, self.PP.p, n_max)
            self.via[theta.name] = f.then(self.collapse, name=f"collapse∘f[id,{theta.name}]")

    def split_check(self, which: str, n_max: int = 3) -> verify.Report:
        comp = self.include.then(self.via[which])
        return verify.check_equal_maps(comp, LinComb.term, self.P.species, n_max,
                                       name=f"splitting[{which}]")
