"""Exact integer linear algebra.

Sparse integer matrices, Smith normal form, and finitely generated
abelian groups in invariant factor form.  Everything here works over
arbitrary-precision integers; entry growth during reduction is expected
and must not overflow.
"""

from dataclasses import dataclass
from math import gcd

try:
    from . import _snf_core as _kernel
except ImportError:  # extension not built
    from . import _snf_py as _kernel

KERNEL_NAME = _kernel.KERNEL_NAME


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class BoundaryCompositionError(ValueError):
    """A pair of maps that should compose to zero does not."""


class IntegerMatrix:
    """Sparse matrix over the integers; absent entries are zero.

    >>> IntegerMatrix(2, 2, {(0, 0): 2, (1, 1): -3}).to_rows()
    [[2, 0], [0, -3]]
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative dimensions {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        clean = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ShapeError(f"entry ({i}, {j}) outside {rows}x{cols}")
                if v:
                    clean[(i, j)] = int(v)
        self.entries = clean

    @classmethod
    def from_rows(cls, dense):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {}
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ShapeError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = v
        return cls(rows, cols, entries)

    def to_rows(self):
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense

    def is_zero(self):
        return not self.entries

    def __matmul__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot compose {self.rows}x{self.cols} with "
                f"{other.rows}x{other.cols}")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                acc[key] = acc.get(key, 0) + a * b
        return IntegerMatrix(self.rows, other.cols, acc)

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == \
            (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"IntegerMatrix({self.rows}, {self.cols}, {self.entries!r})"


def zero_matrix(rows, cols):
    return IntegerMatrix(rows, cols)


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors d1 | d2 | ... of an integer matrix, ones included.

    The rank of the matrix is the number of factors.
    """

    invariant_factors: tuple

    def __post_init__(self):
        d = self.invariant_factors
        for k, v in enumerate(d):
            if v < 1:
                raise ValueError(f"invariant factor {v} < 1")
            if k and d[k] % d[k - 1]:
                raise ValueError(f"broken divisibility chain {d}")

    @property
    def rank(self):
        return len(self.invariant_factors)


def _divisor_chain(values):
    # diag(a, b) and diag(gcd(a, b), lcm(a, b)) present the same group, so
    # bubbling adjacent pairs sorts the prime valuations into a chain.
    d = sorted(values)
    n = len(d)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            a, b = d[i], d[i + 1]
            if b % a:
                g = gcd(a, b)
                d[i], d[i + 1] = g, a // g * b
                changed = True
    return d


def smith_normal_form(m):
    """Smith normal form of an IntegerMatrix, as an SNFResult.

    Classic reduction: the pivot is the nonzero entry of minimal absolute
    value, ties broken by lowest (row, col).

    >>> smith_normal_form(IntegerMatrix.from_rows([[2, 4], [6, 8]]))
    SNFResult(invariant_factors=(2, 4))
    """
    if m.rows == 0 or m.cols == 0 or not m.entries:
        return SNFResult(())
    diag = _kernel.diagonalize(m.to_rows())
    return SNFResult(tuple(_divisor_chain(diag)))


def _factor(n):
    # trial division; factors seen here are desk-scale
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _chain_from_primary(powers):
    # powers: list of (prime, exponent) with multiplicity.  Align the
    # largest exponent of every prime into the last invariant factor.
    buckets = {}
    for p, e in powers:
        buckets.setdefault(p, []).append(e)
    depth = 0
    for exps in buckets.values():
        exps.sort(reverse=True)
        depth = max(depth, len(exps))
    factors = []
    for slot in range(depth):
        f = 1
        for p, exps in buckets.items():
            if slot < len(exps):
                f *= p ** exps[slot]
        factors.append(f)
    factors.reverse()
    return tuple(factors)


class AbelianGroup:
    """Finitely generated abelian group, free rank plus torsion.

    Torsion is normalized to invariant factor form (each entry >= 2 and
    dividing the next), so descriptor equality is group isomorphism:

    >>> AbelianGroup(0, (2, 3)) == AbelianGroup(0, (6,))
    True
    >>> AbelianGroup(0, (2, 4)) == AbelianGroup(0, (8,))
    False
    >>> str(AbelianGroup(1, (2, 4)))
    'Z + Z/2 + Z/4'
    """

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank=0, torsion=()):
        if free_rank < 0:
            raise ValueError(f"negative free rank {free_rank}")
        powers = []
        for d in torsion:
            d = int(d)
            if d < 1:
                raise ValueError(f"torsion factor {d} < 1")
            if d == 1:
                continue
            for p, e in _factor(d).items():
                powers.append((p, e))
        self.free_rank = int(free_rank)
        self.torsion = _chain_from_primary(powers)

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return (self.free_rank, self.torsion) == \
            (other.free_rank, other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __add__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return AbelianGroup(self.free_rank + other.free_rank,
                            self.torsion + other.torsion)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative multiplicity")
        return AbelianGroup(self.free_rank * k, self.torsion * k)

    __rmul__ = __mul__

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbelianGroup({self.free_rank}, {self.torsion!r})"


def direct_sum(*groups):
    total = AbelianGroup(0)
    for g in groups:
        total = total + g
    return total


def homology_of_pair(d_in, d_out):
    """Homology at the middle of  . <-- d_in -- C -- d_out -- .

    d_in goes out of the middle term, d_out comes into it, and the pair
    must compose to zero.  The free rank is dim C minus both ranks; the
    torsion is the nontrivial part of the invariant factors of d_out.

    >>> homology_of_pair(zero_matrix(0, 1), IntegerMatrix(1, 1, {(0, 0): 2}))
    AbelianGroup(0, (2,))
    """
    if d_in.cols != d_out.rows:
        raise ShapeError(
            f"middle dimension mismatch: d_in has {d_in.cols} columns, "
            f"d_out has {d_out.rows} rows")
    if not (d_in @ d_out).is_zero():
        raise BoundaryCompositionError("d_in o d_out is not zero")
    s_in = smith_normal_form(d_in)
    s_out = smith_normal_form(d_out)
    free = d_in.cols - s_in.rank - s_out.rank
    return AbelianGroup(free, [d for d in s_out.invariant_factors if d > 1])
