"""Weight combinatorics for GL(n): partitions, parabolic weights, dimensions.

Conventions fixed here and shared by every other module:

* ``rho(n)`` is the strictly decreasing vector ``(n, n-1, ..., 1)``.
* A :class:`GLWeight` records the weight of an irreducible homogeneous
  bundle on Gr(2, V), dim V = n, as a pair of dominant blocks for the Levi
  subgroup GL(2) x GL(n-2).  Both blocks are taken with respect to the
  *duals* of the tautological sub- and quotient bundles, so the hyperplane
  bundle O(1) = det(S dual) corresponds to ``s_block = (1, 1)`` with zero tail,
  and the bundle Sym^l S (det S)^m to ``s_block = (-m, -l-m)``.
* Entries may be negative (duals and twists produce them); only dominance
  within each block is enforced.  All arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DominanceError, InvalidRankError


class Partition:
    """A weakly decreasing tuple of non-negative integers, zeros stripped.

    Two partitions are equal iff their nonzero parts agree; trailing zeros
    are normalized away on construction.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(x) for x in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DominanceError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in partition: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def size(self):
        return sum(self.parts)

    def conjugate(self):
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
        )

    def padded(self, length):
        """Parts extended by zeros to the given length."""
        if len(self.parts) > length:
            raise ValueError(f"partition {self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def contains(self, other):
        other = Partition(other)
        if len(other.parts) > len(self.parts):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self == Partition(other)
        return NotImplemented

    def __lt__(self, other):
        return self.parts < Partition(other).parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


@dataclass(frozen=True)
class GLWeight:
    """Levi-dominant weight for the (2, n-2) parabolic of GL(n).

    ``s_block`` is an ordered integer pair (a1 >= a2) and ``q_block`` a
    weakly decreasing integer tuple of length n - 2; the concatenation is
    the GL(n) weight vector fed to the Bott algorithm.
    """

    n: int
    s_block: tuple[int, int]
    q_block: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise InvalidRankError(f"need n >= 3, got n={self.n}")
        object.__setattr__(self, "s_block", tuple(int(x) for x in self.s_block))
        object.__setattr__(self, "q_block", tuple(int(x) for x in self.q_block))
        if len(self.s_block) != 2:
            raise ValueError(f"s_block must have length 2: {self.s_block}")
        if len(self.q_block) != self.n - 2:
            raise ValueError(
                f"q_block must have length n-2={self.n - 2}: {self.q_block}"
            )
        if self.s_block[0] < self.s_block[1]:
            raise DominanceError(f"s_block not dominant: {self.s_block}")
        for a, b in zip(self.q_block, self.q_block[1:]):
            if a < b:
                raise DominanceError(f"q_block not dominant: {self.q_block}")

    def vector(self):
        return self.s_block + self.q_block

    def twist(self, t):
        """Tensor by O(t), the t-th power of det(S dual): shifts the s_block only."""
        return GLWeight(
            self.n, (self.s_block[0] + t, self.s_block[1] + t), self.q_block
        )

    def dual(self):
        return GLWeight(
            self.n,
            (-self.s_block[1], -self.s_block[0]),
            tuple(-x for x in reversed(self.q_block)),
        )


class PoincarePolynomial:
    """Non-negative palindromic coefficient list, indexed by degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coefficients = tuple(int(c) for c in coefficients)
        if not coefficients:
            raise ValueError("empty coefficient list")
        if any(c < 0 for c in coefficients):
            raise ValueError(f"negative coefficient: {coefficients}")
        if coefficients != coefficients[::-1]:
            raise ValueError(f"coefficients not palindromic: {coefficients}")
        self.coefficients = coefficients

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __getitem__(self, i):
        if 0 <= i <= self.degree:
            return self.coefficients[i]
        return 0

    def total(self):
        return sum(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, PoincarePolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"PoincarePolynomial{self.coefficients}"


def rho(n):
    """Half-sum-of-positive-roots shift, normalized to (n, n-1, ..., 1)."""
    if n < 3:
        raise InvalidRankError(f"need n >= 3, got n={n}")
    return tuple(range(n, 0, -1))


def weyl_dimension(w, n):
    """Dimension of the GL(n) irreducible with dominant weight ``w``.

    Computes prod_{i<j} (w_i - w_j + j - i) / (j - i) exactly.  Invariant
    under adding a constant to every entry (determinant twists).
    """
    w = tuple(int(x) for x in w)
    if len(w) != n:
        raise ValueError(f"weight length {len(w)} != n = {n}")
    for a, b in zip(w, w[1:]):
        if a < b:
            raise DominanceError(f"weight not dominant: {w}")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    dim, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"Weyl product not integral for {w}")
    return dim


def gaussian_binomial(n, k):
    """Coefficient tuple of the Gaussian binomial [n choose k]_q."""
    if not 0 <= k <= n:
        return (0,)
    # q-Pascal recursion [n k] = [n-1 k-1] + q^k [n-1 k]
    memo = {}

    def gb(a, b):
        if b == 0 or b == a:
            return (1,)
        if (a, b) in memo:
            return memo[(a, b)]
        left = gb(a - 1, b - 1)
        right = gb(a - 1, b)
        out = [0] * (b * (a - b) + 1)
        for i, c in enumerate(left):
            out[i] += c
        for i, c in enumerate(right):
            out[i + b] += c
        memo[(a, b)] = tuple(out)
        return memo[(a, b)]

    return gb(n, k)


def grassmannian_poincare(n):
    """Poincare polynomial of Gr(2, n): coefficient of q^p is h^{p,p}.

    All off-diagonal Hodge numbers of the Grassmannian are zero; consumers
    rely on that convention.
    """
    if n < 3:
        raise InvalidRankError(f"need n >= 3, got n={n}")
    coeffs = gaussian_binomial(n, 2)
    poly = PoincarePolynomial(coeffs)
    if poly.total() != math.comb(n, 2):
        raise ArithmeticError(f"Schubert cell count failed for n={n}")
    return poly
