"""Shared oracles for the test-suite."""

from hopfsub import zoo
from hopfsub.foundations import LinComb
from hopfsub.ops import subst_term


def lg(blocks_in_order, edges=()):
    """A term of T[L](G+): blocks listed in order, edges inside blocks."""
    pairs = []
    for B in blocks_in_order:
        B = tuple(sorted(B))
        es = [e for e in edges if set(e) <= set(B)]
        pairs.append((B, zoo.make_graph(B, es)))
    outer = zoo.Order(tuple(B for B, _ in pairs))
    return subst_term(pairs, outer)


# the composite d | b | c−e a: three blocks in that order, one edge c−e
WORKED_TERM = lg(["d", "b", "ace"], [("c", "e")])

WORKED_EXAMPLES = [
    # (S, T, expected coproduct)
    (("c", "d", "e"), ("a", "b"),
     LinComb.term((lg(["d", "ce"], [("c", "e")]), lg(["b", "a"])))),
    (("b", "d", "e"), ("a", "c"),
     LinComb.term((lg(["d", "b", "e"]), lg(["ac"])))),
]

BELL = [1, 1, 2, 5, 15, 52, 203]


# the 13-label interpolation example: a graph on seven ordered blocks
EXAMPLE13_BLOCKS = ["a", "cb", "ed", "y", "hi", "jfk", "mx"]
EXAMPLE13_EDGES = [("y", "a"), ("a", "cb"), ("mx", "jfk"), ("hi", "ed"), ("ed", "jfk"), ("jfk", "hi")]


def _blk(s):
    return tuple(sorted(s))


def graph_of_orders(names, edges):
    """A term of T[G](L+) on the blocks ``names``; each name lists its order."""
    pairs = [(_blk(s), zoo.Order(tuple(s))) for s in names]
    g = zoo.make_graph([_blk(s) for s in names],
                       [(_blk(u), _blk(v)) for u, v in edges if u in names and v in names])
    return subst_term(pairs, g)


def sets_of_cycles(names):
    pairs = [(_blk(s), zoo.make_cycle(tuple(s))) for s in names]
    return subst_term(pairs, zoo.Star(tuple(sorted(_blk(s) for s in names))))


EXAMPLE13_TERM = graph_of_orders(EXAMPLE13_BLOCKS, EXAMPLE13_EDGES)
