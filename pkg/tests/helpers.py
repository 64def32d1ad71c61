"""Shared test utilities: independent oracles and random instance
generators.  The oracles here deliberately avoid the code paths they
check."""

from itertools import combinations
from math import gcd

from tracehom import (BASEPOINT, IndependenceAlphabet, IntegerMatrix,
                      PointedMSet, full_action_from_successor)


def bareiss_rank(rows):
    """Rank over the rationals by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(nc):
        pivot_row = next((i for i in range(row, nr) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for i in range(row + 1, nr):
            for j in range(col + 1, nc):
                m[i][j] = (pivot * m[i][j] - m[i][col] * m[row][j]) // prev
            m[i][col] = 0
        prev = pivot
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * _det(minor)
    return total


def determinantal_factors(rows):
    """Invariant factors as successive quotients of minor gcds.

    Exponential in the matrix size; only for tiny frozen examples."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    factors = []
    prev = 1
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for ri in combinations(range(nr), k):
            for ci in combinations(range(nc), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, _det(sub))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def brute_force_cliques(alpha, k):
    """All k-subsets of generators that are pairwise independent,
    found by checking every subset."""
    out = []
    for combo in combinations(alpha.generators, k):
        if all(alpha.independent(a, b) for a, b in combinations(combo, 2)):
            out.append(combo)
    return out


def random_matrix(rng, max_dim=8, lo=-9, hi=9):
    nr = rng.randint(0, max_dim)
    nc = rng.randint(0, max_dim)
    rows = [[rng.randint(lo, hi) for _ in range(nc)] for _ in range(nr)]
    return IntegerMatrix.from_rows(rows)


def random_alphabet(rng, max_size=6, min_size=1):
    n = rng.randint(min_size, max_size)
    gens = [f"e{k}" for k in range(n)]
    density = rng.choice((0.2, 0.4, 0.6, 0.9))
    pairs = [(a, b) for a, b in combinations(gens, 2)
             if rng.random() < density]
    return IndependenceAlphabet(gens, pairs)


def random_mset(rng, alpha, max_elements=4):
    """Random valid action over alpha.

    Commutation compatibility is guaranteed by construction: every
    generator acts as one of a set of pairwise commuting functions
    (a single shared function, powers of one function, or functions
    with disjoint support).  Over a free alphabet a fully random table
    is also allowed, since there is nothing to violate."""
    n = rng.randint(0, max_elements)
    names = [f"x{k}" for k in range(n)]
    carrier = names + [BASEPOINT]
    styles = ["full", "powers", "split"]
    if not alpha.pairs:
        styles.append("free")
    style = rng.choice(styles)
    if style == "full":
        return full_action_from_successor(
            alpha, {x: rng.choice(carrier) for x in names})
    if style == "free":
        action = {x: {e: rng.choice(carrier) for e in alpha.generators}
                  for x in names}
        return PointedMSet(alpha, names, action)
    if style == "powers":
        f = {x: rng.choice(carrier) for x in names}
        f[BASEPOINT] = BASEPOINT

        def power(x, k):
            for _ in range(k):
                x = f[x]
            return x

        exponent = {e: rng.randint(0, 2) for e in alpha.generators}
        action = {x: {e: power(x, exponent[e]) for e in alpha.generators}
                  for x in names}
        return PointedMSet(alpha, names, action)
    # split: two functions with disjoint support commute
    half = len(names) // 2
    part_a, part_b = names[:half], names[half:]

    def jump(part):
        moved = {x: rng.choice(part + [BASEPOINT]) for x in part}
        return lambda x: moved.get(x, x)

    maps = {"lo": jump(part_a), "hi": jump(part_b), "id": lambda x: x}
    choice = {e: rng.choice(sorted(maps)) for e in alpha.generators}
    action = {x: {e: maps[choice[e]](x) for e in alpha.generators}
              for x in names}
    return PointedMSet(alpha, names, action)


def relabel_elements(m):
    """Same action with every element renamed."""
    mapping = {x: f"y{k}" for k, x in enumerate(reversed(m.elements))}
    mapping[BASEPOINT] = BASEPOINT
    action = {mapping[x]: {e: mapping[m.act(x, e)]
                           for e in m.alphabet.generators}
              for x in m.elements}
    return PointedMSet(m.alphabet, [mapping[x] for x in m.elements], action)


def shuffle_generators(rng, m):
    """Same action with the generators declared in a different order."""
    order = list(m.alphabet.generators)
    rng.shuffle(order)
    alpha = IndependenceAlphabet(order, m.alphabet.pairs)
    action = {x: {e: m.act(x, e) for e in order} for x in m.elements}
    return PointedMSet(alpha, m.elements, action)
