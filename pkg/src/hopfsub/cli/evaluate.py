"""Turn parsed expressions into species and, where possible, Hopf structures."""

from __future__ import annotations

from dataclasses import dataclass

from .. import zoo
from ..interpolation import RTee
from ..ops import CauchyBimonoid, cauchy_species, hadamard_species, substitute_species, sum_species
from ..species import Bimonoid, Comonoid, HypothesisError, SpeciesMap, identity_map, truncate, truncate_comonoid
from ..tee import build_tee, substitution_comonoid
from .parser import Atom, BinOp, ParseError, RNode, TNode, Trunc


@dataclass
class Value:
    species: object
    structure: object = None  # a Comonoid or Bimonoid when one is available
    rtee: RTee | None = None

    @property
    def is_bimonoid(self):
        return isinstance(self.structure, Bimonoid)


def _wrap(structure) -> Value:
    return Value(structure.species, structure)


def _atom(name: str) -> Value:
    table = {
        "One": zoo.hopf_One,
        "E": zoo.hopf_E,
        "E+": zoo.comonoid_E_plus,
        "L": zoo.hopf_L,
        "L+": zoo.comonoid_L_plus,
        "G": zoo.hopf_G,
        "G+": zoo.comonoid_G_plus,
        "Gc": zoo.hopf_G_contraction,
        "cyc": lambda: zoo.comonoid_cyc(restrictions=True),
        "cyc0": zoo.comonoid_cyc,
        "Pos": zoo.hopf_Poset,
        "Pos+": zoo.comonoid_Poset_plus,
    }
    if name == "Gc+":
        from ..species import positive_part
        s = positive_part(zoo.hopf_G_contraction())
    elif name == "Pi":
        s = build_tee(zoo.hopf_E(), zoo.comonoid_E_plus(), name="Pi")
    else:
        s = table[name]()
    return _wrap(s)


def tau_for(b, d) -> SpeciesMap:
    """The registered bimonoid map ``b → d``."""
    if b.name == d.name:
        return identity_map(b)
    if d.name == "E":
        return zoo.forget_to_E(f"tau_{b.name}E")
    if (b.name, d.name) == ("E", "Pos"):
        return zoo.alpha()
    raise HypothesisError("registered map", f"no bimonoid map {b.name} -> {d.name} is registered")


def theta_for(p, q) -> SpeciesMap:
    """The registered comonoid map ``p → q``."""
    if p.name == q.name:
        return identity_map(p)
    if q.name == "E+":
        return zoo.forget_to_E(f"forget_{p.name}")
    if (p.name, q.name) in (("L+", "cyc"), ("L+", "cyc0")):
        return zoo.theta_Lcyc()
    if (p.name, q.name) == ("E+", "Pos+"):
        return zoo.alpha()
    raise HypothesisError("registered map", f"no comonoid map {p.name} -> {q.name} is registered")


def _need_structure(v: Value, path: str, what: str):
    if v.structure is None:
        raise ParseError(f"{what} needs a Hopf structure, got a bare species {v.species.name}", path=path)
    return v.structure


def evaluate(e, path: str = "$", n_max: int = 3) -> Value:
    if isinstance(e, Atom):
        return _atom(e.name)
    if isinstance(e, BinOp):
        left = evaluate(e.left, path + ".left", n_max)
        right = evaluate(e.right, path + ".right", n_max)
        if e.op == "+":
            return Value(sum_species(left.species, right.species))
        if e.op == "*":
            return Value(hadamard_species(left.species, right.species))
        if e.op == ".":
            if left.is_bimonoid and right.is_bimonoid and left.structure.connected and right.structure.connected:
                return _wrap(CauchyBimonoid(left.structure, right.structure))
            return Value(cauchy_species(left.species, right.species))
        if e.op == "o":
            if not right.species.positive:
                raise ParseError(f"substitution argument {right.species.name} is not positive",
                                 path=path + ".right")
            if isinstance(right.structure, Comonoid) and left.structure is not None:
                try:
                    if left.is_bimonoid and left.structure.connected:
                        s = build_tee(left.structure, right.structure, n_max)
                    else:
                        s = substitution_comonoid(left.structure, right.structure, n_max)
                    return _wrap(s)
                except HypothesisError:
                    pass
            return Value(substitute_species(left.species, right.species))
    if isinstance(e, TNode):
        b = _need_structure(evaluate(e.b, path + ".b", n_max), path + ".b", "T[b](p)")
        pv = evaluate(e.p, path + ".p", n_max)
        if not pv.species.positive:
            raise ParseError(f"{pv.species.name} is not positive", path=path + ".p")
        p = _need_structure(pv, path + ".p", "T[b](p)")
        s = build_tee(b, p, n_max)
        return _wrap(s)
    if isinstance(e, RNode):
        if e.r < 1:
            raise ParseError("the threshold r must be at least 1", path=path + ".r")
        parts = {k: _need_structure(evaluate(getattr(e, k), f"{path}.{k}", n_max), f"{path}.{k}", "R{r}")
                 for k in ("b", "d", "p", "q")}
        for k in ("p", "q"):
            if not parts[k].species.positive:
                raise ParseError(f"{parts[k].name} is not positive", path=f"{path}.{k}")
        rt = RTee(e.r, parts["b"], parts["d"], parts["p"], parts["q"],
                  tau_for(parts["b"], parts["d"]), theta_for(parts["p"], parts["q"]), n_max)
        return Value(rt.carrier.species, rt.carrier, rt)
    if isinstance(e, Trunc):
        v = evaluate(e.arg, path + ".arg", n_max)
        sp = truncate(v.species, e.cmp, e.n)
        if e.cmp == "<" and isinstance(v.structure, Comonoid):
            c = truncate_comonoid(v.structure, "<", e.n)
            return _wrap(c)
        return Value(sp)
    raise TypeError(f"not an expression node: {e!r}")
