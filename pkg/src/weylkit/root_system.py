"""Cartan data for the finite crystallographic root systems.

Weights are kept in fundamental-weight coordinates throughout: coordinate i
of a weight ``psi`` is the pairing of ``psi`` against the i-th simple coroot.
Roots additionally carry their expansion in the simple roots, where a root is
positive exactly when those coordinates are all nonnegative.

Conventions (documented constants, chosen once):

* ``cartan[i][j]`` is the pairing of the j-th simple root against the i-th
  simple coroot, so the j-th simple root in weight coordinates is the j-th
  *column* of the Cartan matrix.
* Type B: the last node is short.  Type C: the last node is long.
* Type F4: nodes 1, 2 long, nodes 3, 4 short.
* Type G2: the first node is short.
* The symmetrizer ``d`` is the minimal positive integer vector with
  ``d[i] * cartan[i][j]`` symmetric; the squared length of the i-th simple
  root is ``2 * d[i]`` in the normalization used for inner products here.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class CartanError(ValueError):
    """Invalid Cartan type or malformed root-system input."""


class WeylOrderGuardError(RuntimeError):
    """The predicted Weyl group order exceeds the configured guard."""


_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

DEFAULT_MAX_WEYL_ORDER = 1_000_000

_LABEL_RE = re.compile(r"^([A-G])([0-9]+)$")


@dataclass(frozen=True)
class CartanLabel:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RANGE:
            raise CartanError(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise CartanError(f"rank {self.rank} out of range for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_label(text: str) -> CartanLabel:
    """Parse a Cartan type from a string like ``"A2"`` or ``"G2"``."""
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise CartanError(f"cannot parse Cartan type {text!r}")
    return CartanLabel(m.group(1), int(m.group(2)))


def weyl_order(label: CartanLabel) -> int:
    """Order of the Weyl group, from the classification."""
    n = label.rank
    if label.family == "A":
        return math.factorial(n + 1)
    if label.family in ("B", "C"):
        return 2**n * math.factorial(n)
    if label.family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if label.family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if label.family == "F":
        return 1152
    return 12  # G2


def positive_root_count(label: CartanLabel) -> int:
    n = label.rank
    if label.family == "A":
        return n * (n + 1) // 2
    if label.family in ("B", "C"):
        return n * n
    if label.family == "D":
        return n * (n - 1)
    if label.family == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    if label.family == "F":
        return 24
    return 6  # G2


def cartan_matrix(label: CartanLabel) -> tuple:
    n = label.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    fam = label.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            bond(n - 2, n - 1, -1, -2)
        elif fam == "C" and n >= 2:
            bond(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif fam == "E":
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)]
        for k in range(5, n):
            edges.append((k, k + 1))
        for a, b in edges:
            bond(a - 1, b - 1)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    else:  # G2
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in c)


def symmetrizer(label: CartanLabel) -> tuple:
    n = label.rank
    if label.family == "B":
        return (2,) * (n - 1) + (1,)
    if label.family == "C":
        return (1,) * (n - 1) + (2,)
    if label.family == "F":
        return (2, 2, 1, 1)
    if label.family == "G":
        return (1, 3)
    return (1,) * n


def _invert(matrix):
    """Exact inverse of a small integer matrix, as Fraction rows."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class Root:
    """A positive root, in both coordinate systems.

    ``coroot_coords`` are the integer coefficients of the coroot in the simple
    coroots, so pairing any weight against this root's coroot is a plain dot
    product with the weight's fundamental coordinates.
    """

    weight_coords: tuple
    simple_coords: tuple
    coroot_coords: tuple

    @property
    def height(self):
        return sum(self.simple_coords)


class RootSystem:
    """Immutable Cartan data for one type: matrix, roots, rho, pairings."""

    def __init__(self, label: CartanLabel, max_weyl_order=DEFAULT_MAX_WEYL_ORDER):
        if max_weyl_order is not None and weyl_order(label) > max_weyl_order:
            raise WeylOrderGuardError(
                f"Weyl group of {label} has order {weyl_order(label)}, above the "
                f"guard {max_weyl_order}; pass a larger max_weyl_order to override"
            )
        self.label = label
        self.rank = label.rank
        self.cartan = cartan_matrix(label)
        self.symmetrizer = symmetrizer(label)
        self.cartan_inverse = _invert(self.cartan)
        self.rho = (1,) * self.rank
        self.positive_roots = self._generate_positive_roots()
        self._cache = {}
        # Scaled inner-product matrix: ip(a, b) == (a @ M @ b) / ip_scale,
        # with M = diag(d) @ cartan^{-1} cleared of denominators.
        mat = [
            [Fraction(self.symmetrizer[i]) * self.cartan_inverse[i][j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        scale = 1
        for row in mat:
            for x in row:
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
        self.ip_scale = scale
        self.ip_matrix_scaled = tuple(tuple(int(x * scale) for x in row) for row in mat)

    def __repr__(self):
        return f"RootSystem({self.label})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.label == other.label

    def __hash__(self):
        return hash(self.label)

    def simple_root_weight_coords(self, i: int) -> tuple:
        return tuple(self.cartan[r][i] for r in range(self.rank))

    def _generate_positive_roots(self):
        n = self.rank
        d = self.symmetrizer
        roots = {}
        frontier = []
        for i in range(n):
            sc = tuple(int(j == i) for j in range(n))
            wc = self.simple_root_weight_coords(i)
            roots[sc] = wc
            frontier.append((sc, wc))
        while frontier:
            nxt = []
            for sc, wc in frontier:
                for i in range(n):
                    k = wc[i]
                    new_sc = list(sc)
                    new_sc[i] -= k
                    new_sc = tuple(new_sc)
                    if min(new_sc) < 0 or new_sc in roots:
                        continue
                    col = self.simple_root_weight_coords(i)
                    new_wc = tuple(wc[j] - k * col[j] for j in range(n))
                    roots[new_sc] = new_wc
                    nxt.append((new_sc, new_wc))
            frontier = nxt
        out = []
        for sc in sorted(roots, key=lambda s: (sum(s), s)):
            wc = roots[sc]
            # coroot coefficients: c_j * d_j / d_alpha with 2*d_alpha = (alpha, alpha)
            alpha_sq = sum(sc[j] * sc[k] * d[j] * self.cartan[j][k] for j in range(n) for k in range(n))
            if alpha_sq <= 0 or alpha_sq % 2:
                raise CartanError(f"corrupted root data: (alpha, alpha) = {alpha_sq}")
            d_alpha = alpha_sq // 2
            cv = []
            for j in range(n):
                num = sc[j] * d[j]
                if num % d_alpha:
                    raise CartanError("coroot coefficients are not integral")
                cv.append(num // d_alpha)
            out.append(Root(wc, sc, tuple(cv)))
        return tuple(out)

    @property
    def simple_roots(self):
        """The simple roots in node order."""
        height_one = [r for r in self.positive_roots if sum(r.simple_coords) == 1]
        return tuple(sorted(height_one, key=lambda r: r.simple_coords.index(1)))

    def pair(self, psi, root: Root) -> int:
        """Pairing of a weight against the coroot of ``root``."""
        if len(psi) != self.rank:
            raise CartanError("weight rank mismatch")
        return sum(p * c for p, c in zip(psi, root.coroot_coords))

    def is_dominant(self, psi) -> bool:
        if len(psi) != self.rank:
            raise CartanError("weight rank mismatch")
        return all(c >= 0 for c in psi)

    def ip_scaled(self, a, b) -> int:
        """Symmetrized inner product of two weights, times ``ip_scale``."""
        m = self.ip_matrix_scaled
        n = self.rank
        total = 0
        for i in range(n):
            ai = a[i]
            if ai:
                row = m[i]
                total += ai * sum(row[j] * b[j] for j in range(n))
        return total

    def to_simple_coords(self, psi):
        """Expansion of a weight in the simple roots (exact Fractions)."""
        ci = self.cartan_inverse
        n = self.rank
        return tuple(sum(ci[i][j] * psi[j] for j in range(n)) for i in range(n))


def build(label, max_weyl_order=DEFAULT_MAX_WEYL_ORDER) -> RootSystem:
    """Construct the root system for a label or type string."""
    if isinstance(label, str):
        label = parse_label(label)
    return RootSystem(label, max_weyl_order=max_weyl_order)
