"""Independence alphabets.

An alphabet is an ordered list of generators together with an
irreflexive symmetric independence relation; independent generators
commute in the monoid the alphabet presents.  Cliques of the relation
(sets of pairwise independent generators) index everything downstream,
and are always handled as tuples sorted by declaration order.
"""

from .errors import ValidationError


class IndependenceAlphabet:
    """Generators in declaration order plus unordered independence pairs."""

    __slots__ = ("generators", "pairs", "_index", "_adjacent")

    def __init__(self, generators, independence=()):
        problems = []
        gens = tuple(generators)
        index = {}
        for k, g in enumerate(gens):
            if not isinstance(g, str) or not g:
                problems.append(f"generator #{k} is not a nonempty string")
            elif g == "*":
                problems.append("generator name '*' is reserved")
            elif g in index:
                problems.append(f"duplicate generator {g!r}")
            else:
                index[g] = k
        pairs = set()
        for pair in independence:
            try:
                a, b = pair
            except (TypeError, ValueError):
                problems.append(f"independence pair {pair!r} is not a pair")
                continue
            if a not in index or b not in index:
                problems.append(f"independence pair ({a!r}, {b!r}) "
                                "names unknown generators")
            elif a == b:
                problems.append(f"independence pair ({a!r}, {a!r}) "
                                "is reflexive")
            else:
                if index[a] > index[b]:
                    a, b = b, a
                pairs.add((a, b))
        if problems:
            raise ValidationError(problems)
        self.generators = gens
        self.pairs = frozenset(pairs)
        self._index = index
        adjacent = {g: set() for g in gens}
        for a, b in pairs:
            adjacent[a].add(b)
            adjacent[b].add(a)
        self._adjacent = adjacent

    def index(self, g):
        try:
            return self._index[g]
        except KeyError:
            raise ValueError(f"unknown generator {g!r}") from None

    def independent(self, a, b):
        self.index(a), self.index(b)
        return b in self._adjacent[a]

    def __eq__(self, other):
        if not isinstance(other, IndependenceAlphabet):
            return NotImplemented
        return (self.generators, self.pairs) == \
            (other.generators, other.pairs)

    def __repr__(self):
        return (f"IndependenceAlphabet({list(self.generators)!r}, "
                f"{sorted(self.pairs)!r})")


def is_clique(alpha, members):
    """True when members are distinct, sorted by declaration order, and
    pairwise independent."""
    idx = [alpha.index(g) for g in members]
    if any(a >= b for a, b in zip(idx, idx[1:])):
        return False
    return all(alpha.independent(a, b)
               for k, a in enumerate(members) for b in members[k + 1:])


def enumerate_cliques(alpha, k):
    """All k-element cliques of the independence relation, each sorted by
    declaration order, listed in lexicographic order of member indices.

    k = 0 gives the single empty clique.
    """
    if k < 0:
        raise ValueError(f"negative clique size {k}")
    gens = alpha.generators
    adjacent = alpha._adjacent
    out = []
    prefix = []

    def extend(start, need):
        if not need:
            out.append(tuple(prefix))
            return
        for idx in range(start, len(gens) - need + 1):
            g = gens[idx]
            if all(g in adjacent[h] for h in prefix):
                prefix.append(g)
                extend(idx + 1, need - 1)
                prefix.pop()

    extend(0, k)
    return out


def clique_counts(alpha):
    """Clique counts [p_0, p_1, ..., p_w] up to the largest clique size.

    p_0 = 1 for the empty clique, so an alphabet with no independence at
    all still reports [1, n].
    """
    counts = [1]
    k = 1
    while True:
        n = len(enumerate_cliques(alpha, k))
        if not n:
            return counts
        counts.append(n)
        k += 1


def max_clique_size(alpha):
    return len(clique_counts(alpha)) - 1
