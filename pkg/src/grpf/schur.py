"""Schur-functor calculus for the tautological bundles on Gr(2, n).

The three decompositions needed downstream:

* the rank-2 Clebsch-Gordan rule Sym^l x Sym^l' = sum_i Sym^{l+l'-2i} det^i,
* Littlewood-Richardson coefficients by tableau enumeration,
* the Cauchy identity for exterior powers of the cotangent bundle
  Wedge^m (S x Q*) = sum over lam of S_lam(S) x S_lam'(Q*), lam running over
  partitions of m with at most 2 rows and n-2 columns (Q* the dual of Q).

:class:`KClass` carries formal integer combinations of irreducible
homogeneous bundles; each term is keyed by the pair of dominant blocks of
:class:`~grpf.weights.GLWeight` (weights with respect to the dual
tautological bundles; ``label_weight`` converts a Sym^l S (det S)^m label).
"""

from __future__ import annotations

import math
from collections import Counter
from typing import NamedTuple

from .errors import DominanceError, RankMismatchError
from .weights import GLWeight, Partition, weyl_dimension


class SchurTerm(NamedTuple):
    s_weight: tuple[int, int]
    q_weight: tuple[int, ...]
    multiplicity: int


def label_weight(l, m):
    """s_block of the bundle Sym^l S (det S)^m, recorded against the dual of S."""
    if l < 0:
        raise ValueError(f"need l >= 0, got {l}")
    return (-m, -l - m)


class KClass:
    """Normalized formal integer combination of irreducible bundles.

    Terms with zero multiplicity are dropped and like terms merged on every
    operation, so equality and virtual ranks are well defined.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = int(n)
        clean = {}
        for key, mult in (terms or {}).items():
            s, q = key
            s = tuple(int(x) for x in s)
            q = tuple(int(x) for x in q)
            if len(s) != 2 or s[0] < s[1]:
                raise DominanceError(f"bad s_weight {s}")
            if len(q) != self.n - 2 or any(
                a < b for a, b in zip(q, q[1:])
            ):
                raise DominanceError(f"bad q_weight {q} for n={self.n}")
            mult = int(mult)
            if mult:
                clean[(s, q)] = clean.get((s, q), 0) + mult
        self._terms = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def trivial(cls, n):
        return cls(n, {((0, 0), (0,) * (n - 2)): 1})

    @classmethod
    def line(cls, n, t):
        """The line bundle O(t)."""
        return cls(n, {((t, t), (0,) * (n - 2)): 1})

    @classmethod
    def tangent(cls, n):
        """The tangent bundle Hom(S, Q) of Gr(2, n)."""
        return cls(n, {((1, 0), (0,) * (n - 3) + (-1,)): 1})

    @classmethod
    def from_label(cls, n, l, m, multiplicity=1):
        """The bundle Sym^l S (det S)^m."""
        return cls(n, {(label_weight(l, m), (0,) * (n - 2)): multiplicity})

    def terms(self):
        """Deterministically ordered list of :class:`SchurTerm`."""
        return [SchurTerm(s, q, m) for (s, q), m in self._terms.items()]

    def weights(self):
        """Per-term (GLWeight, multiplicity) pairs."""
        return [
            (GLWeight(self.n, s, q), m) for (s, q), m in self._terms.items()
        ]

    def _check(self, other):
        if not isinstance(other, KClass):
            raise TypeError(f"not a KClass: {other!r}")
        if other.n != self.n:
            raise RankMismatchError(f"mixed ranks {self.n} and {other.n}")

    def __add__(self, other):
        self._check(other)
        merged = Counter(self._terms)
        merged.update(other._terms)
        return KClass(self.n, merged)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return KClass(self.n, {k: c * v for k, v in self._terms.items()})

    def tensor_by_line(self, t):
        """Twist by O(t): add t to both entries of every s_weight."""
        return KClass(
            self.n,
            {
                ((s[0] + t, s[1] + t), q): m
                for (s, q), m in self._terms.items()
            },
        )

    def dual(self):
        return KClass(
            self.n,
            {
                (
                    (-s[1], -s[0]),
                    tuple(-x for x in reversed(q)),
                ): m
                for (s, q), m in self._terms.items()
            },
        )

    def virtual_rank(self):
        total = 0
        for (s, q), m in self._terms.items():
            total += m * (s[0] - s[1] + 1) * weyl_dimension(q, self.n - 2)
        return total

    def is_effective(self):
        return all(m > 0 for m in self._terms.values())

    def __eq__(self, other):
        if isinstance(other, KClass):
            return self.n == other.n and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, tuple(self._terms.items())))

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return f"KClass(n={self.n}, {len(self._terms)} terms)"


def clebsch_gordan_rank2(l, lp):
    """Decompose Sym^l x Sym^l' of a rank-2 bundle.

    Returns (exponent, det-power) pairs; every multiplicity is 1.
    """
    if l < 0 or lp < 0:
        raise ValueError(f"need l, l' >= 0, got {l}, {lp}")
    return [(l + lp - 2 * i, i) for i in range(min(l, lp) + 1)]


def _candidate_shapes(lam, mu, max_rows):
    """Partitions nu of |lam|+|mu| with lam inside nu and <= max_rows rows."""
    total = lam.size() + mu.size()
    mu1 = mu[0] if len(mu) else 0
    lam_p = lam.padded(max_rows)
    out = []

    def build(row, prefix, remaining):
        if remaining == 0 and row == max_rows:
            out.append(Partition(prefix))
            return
        if row == max_rows:
            return
        hi = min(prefix[-1] if prefix else total, lam_p[row] + mu1)
        lo = lam_p[row]
        for v in range(hi, lo - 1, -1):
            if v > remaining:
                continue
            build(row + 1, prefix + [v], remaining - v)

    build(0, [], total)
    return out


def _lattice_fillings(nu, lam, mu):
    """Count column-strict lattice fillings of nu/lam with content mu."""
    rows = len(nu)
    lam_p = lam.padded(rows)
    mu_p = tuple(mu)
    nvals = len(mu_p)
    # cells in reading order: row by row, right to left
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, lam_p[r] - 1, -1):
            cells.append((r, c))
    grid = [[0] * nu[r] for r in range(rows)]
    used = [0] * (nvals + 1)
    count = 0

    def place(idx):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        for v in range(1, nvals + 1):
            if used[v] >= mu_p[v - 1]:
                continue
            # lattice: after placing, #v <= #(v-1)
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            # row weakly increasing left to right: cell to the right is filled
            if c + 1 < nu[r] and grid[r][c + 1] and v > grid[r][c + 1]:
                continue
            # column strictly increasing downwards
            if r > 0 and c < nu[r - 1] and c >= lam_p[r - 1]:
                if grid[r - 1][c] and v <= grid[r - 1][c]:
                    continue
            elif r > 0 and c < lam_p[r - 1]:
                pass  # cell above is in lam, no constraint
            elif r > 0 and c >= nu[r - 1]:
                pass  # no cell above
            grid[r][c] = v
            used[v] += 1
            place(idx + 1)
            used[v] -= 1
            grid[r][c] = 0

    place(0)
    return count


def littlewood_richardson(lam, mu, max_rows):
    """All nu with c^nu_{lam,mu} > 0 and at most max_rows rows.

    Returns (Partition, multiplicity) pairs, sorted.  The multiplicities
    are exact; tableau enumeration with light pruning is ample for the
    sizes that occur here.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    if max_rows < 1:
        raise ValueError("max_rows must be positive")
    if len(lam) > max_rows:
        return []
    if mu.size() == 0:
        return [(lam, 1)]
    out = []
    for nu in _candidate_shapes(lam, mu, max_rows):
        c = _lattice_fillings(nu, lam, mu)
        if c:
            out.append((nu, c))
    out.sort(key=lambda pair: pair[0].parts)
    return out


def cauchy_exterior_cotangent(n, m):
    """K-class of Wedge^m of the cotangent bundle of Gr(2, n).

    Every partition of m with at most 2 rows and at most n-2 columns
    contributes one term S_lam(S) x S_lam'(Q dual).  Out-of-range m yields the
    empty class.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    dim = 2 * (n - 2)
    if m < 0 or m > dim:
        return KClass(n, {})
    terms = {}
    for j in range(max(0, m - (n - 2)), m // 2 + 1):
        lam = Partition((m - j, j))
        s_weight = (-j, -(m - j))
        q_weight = lam.conjugate().padded(n - 2)
        terms[(s_weight, q_weight)] = 1
    kc = KClass(n, terms)
    if kc.virtual_rank() != math.comb(dim, m):
        raise ArithmeticError(f"Cauchy rank check failed at n={n}, m={m}")
    return kc
