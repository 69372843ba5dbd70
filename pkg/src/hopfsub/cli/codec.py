"""JSON encodings of terms and linear combinations.

Labels are strings; a block used as a label is the array of its labels.
Decoding is driven by the species, so ``[]`` can mean the empty set, the empty
order or the point of ``1`` depending on where it appears.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .. import zoo
from ..foundations import DomainError, LinComb, labelset
from ..ops import (
    CauchySpecies, CauchyTerm, HadamardSpecies, HadamardTerm, SubstitutionSpecies, SubstTerm,
    SumSpecies, SumTerm, subst_term,
)
from ..species import Truncation


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def enc_label(v):
    return list(map(enc_label, v)) if isinstance(v, tuple) else v


def dec_label(v):
    if isinstance(v, list):
        return tuple(dec_label(x) for x in v)
    if not isinstance(v, str) or not v:
        raise DomainError(f"labels are nonempty strings, got {v!r}")
    return v


def _pairs(ps):
    return [[enc_label(a), enc_label(b)] for a, b in ps]


def encode_term(t):
    if isinstance(t, zoo.Empty):
        return []
    if isinstance(t, zoo.Star):
        return [enc_label(v) for v in t.labels]
    if isinstance(t, zoo.Order):
        return [enc_label(v) for v in t.seq]
    if isinstance(t, zoo.Cycle):
        return [enc_label(v) for v in t.seq]
    if isinstance(t, zoo.Graph):
        return {"v": [enc_label(v) for v in t.labels], "e": _pairs(t.edges)}
    if isinstance(t, zoo.Poset):
        return {"v": [enc_label(v) for v in t.labels], "rel": _pairs(t.rel)}
    if isinstance(t, SubstTerm):
        return {"partition": [enc_label(B) for B in t.blocks],
                "outer": encode_term(t.outer),
                "inner": [{"block": enc_label(B), "term": encode_term(s)} for B, s in zip(t.blocks, t.inner)]}
    if isinstance(t, CauchyTerm):
        return {"left": encode_term(t.left), "right": encode_term(t.right)}
    if isinstance(t, HadamardTerm):
        return {"left": encode_term(t.left), "right": encode_term(t.right)}
    if isinstance(t, SumTerm):
        return {"side": t.side, "term": encode_term(t.term)}
    raise TypeError(f"no JSON encoding for {type(t).__name__}")


def _base(species):
    while isinstance(species, Truncation):
        species = species.base
    return species


def decode_term(species, obj, check: bool = True):
    """Decode ``obj`` as a basis term of ``species``; reject non-members."""
    t = _decode(species, obj)
    if check and t not in species.basis(t.labels):
        raise DomainError(f"not a basis term of {species.name}: {dumps(obj)}")
    return t


def _need(obj, kind, what):
    if not isinstance(obj, kind):
        raise DomainError(f"expected {what}, got {dumps(obj)}")
    return obj


def _decode(species, obj):
    sp = _base(species)
    if isinstance(sp, zoo.OneSpecies):
        if obj != []:
            raise DomainError("the unit species only has the empty structure []")
        return zoo.Empty()
    if isinstance(sp, zoo.ESpecies):
        return zoo.Star(labelset(map(dec_label, _need(obj, list, "a label array"))))
    if isinstance(sp, zoo.LSpecies):
        seq = tuple(map(dec_label, _need(obj, list, "a label array")))
        if len(set(seq)) != len(seq):
            raise DomainError("repeated label in an order")
        return zoo.Order(seq)
    if isinstance(sp, zoo.CycSpecies):
        seq = tuple(map(dec_label, _need(obj, list, "a label array")))
        if not seq or len(set(seq)) != len(seq):
            raise DomainError("a cycle needs distinct labels")
        return zoo.make_cycle(seq)
    if isinstance(sp, zoo.GSpecies):
        _need(obj, dict, "a graph object")
        vs = labelset(map(dec_label, obj.get("v", [])))
        es = [tuple(map(dec_label, e)) for e in obj.get("e", [])]
        if any(len(e) != 2 or not set(e) <= set(vs) for e in es):
            raise DomainError("graph edges must join two listed vertices")
        return zoo.make_graph(vs, es)
    if isinstance(sp, zoo.PosetSpecies):
        _need(obj, dict, "a poset object")
        vs = labelset(map(dec_label, obj.get("v", [])))
        rel = tuple(sorted(tuple(map(dec_label, r)) for r in obj.get("rel", [])))
        return zoo.Poset(vs, rel)
    if isinstance(sp, SubstitutionSpecies):
        _need(obj, dict, "a composite object")
        blocks = [dec_label(B) for B in obj.get("partition", [])]
        inner = {dec_label(d["block"]): _decode(sp.q, d["term"]) for d in obj.get("inner", [])}
        if set(inner) != set(blocks):
            raise DomainError("inner terms must cover exactly the blocks of the partition")
        outer = _decode(sp.p, obj.get("outer"))
        return subst_term(((B, inner[B]) for B in blocks), outer)
    if isinstance(sp, CauchySpecies):
        _need(obj, dict, "a Cauchy pair")
        return CauchyTerm(_decode(sp.p, obj.get("left")), _decode(sp.q, obj.get("right")))
    if isinstance(sp, HadamardSpecies):
        _need(obj, dict, "a Hadamard pair")
        return HadamardTerm(_decode(sp.p, obj.get("left")), _decode(sp.q, obj.get("right")))
    if isinstance(sp, SumSpecies):
        _need(obj, dict, "a tagged summand")
        side = obj.get("side")
        if side not in (0, 1):
            raise DomainError("summand side must be 0 or 1")
        return SumTerm(side, _decode(sp.p if side == 0 else sp.q, obj.get("term")))
    raise DomainError(f"no JSON decoding for species {species.name}")


def enc_coeff(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def dec_coeff(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise DomainError(f"coefficients are strings 'num/den', got {s!r}")
    return Fraction(s)


def encode_key(k):
    if isinstance(k, tuple):
        return [encode_term(t) for t in k]
    return encode_term(k)


def encode_lincomb(v: LinComb) -> list:
    items = [(encode_key(t), c) for t, c in v.items()]
    items.sort(key=lambda it: dumps(it[0]))
    return [{"c": enc_coeff(c), "t": t} for t, c in items]


def decode_lincomb(species, obj, arity: int = 1) -> LinComb:
    """Decode a combination of terms (``arity=1``) or of term tuples."""
    out = []
    for item in _need(obj, list, "a combination array"):
        c = dec_coeff(item["c"])
        if arity == 1:
            out.append((decode_term(species, item["t"]), c))
        else:
            out.append((tuple(decode_term(species, x) for x in item["t"]), c))
    return LinComb(out)
