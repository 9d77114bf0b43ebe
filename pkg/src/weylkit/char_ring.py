"""Exact arithmetic in the character ring of the maximal torus.

A :class:`Character` is a finitely supported map from weights (tuples in
fundamental coordinates) to arbitrary-precision integers: an element of the
group algebra Z[weight lattice].  Characters are immutable values; every
operation returns a new one and zero multiplicities are never stored, so
equality is structural equality of the term maps.
"""

from __future__ import annotations

import json

from . import _kernels
from .root_system import CartanError, Root, RootSystem


class InvarianceError(ValueError):
    """An operation required a Weyl-invariant character and did not get one."""


class Character:
    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms=None):
        self.rs = rs
        self.terms = dict(terms) if terms else {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, rs):
        return cls(rs)

    @classmethod
    def one(cls, rs):
        return cls(rs, {(0,) * rs.rank: 1})

    @classmethod
    def exponential(cls, rs, psi):
        """The single-term character e(psi)."""
        psi = tuple(psi)
        if len(psi) != rs.rank:
            raise CartanError("weight rank mismatch")
        return cls(rs, {psi: 1})

    @classmethod
    def from_terms(cls, rs, terms):
        return cls(rs, {tuple(k): v for k, v in dict(terms).items() if v})

    # -- basics -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.rs.label == other.rs.label
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rs.label, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def coeff(self, psi) -> int:
        return self.terms.get(tuple(psi), 0)

    @property
    def constant_term(self) -> int:
        return self.terms.get((0,) * self.rs.rank, 0)

    def dimension(self) -> int:
        """Sum of all multiplicities (the value at the identity of the torus)."""
        return sum(self.terms.values())

    def __repr__(self):
        if not self.terms:
            return f"Character({self.rs.label}, 0)"
        bits = []
        for mu in sorted(self.terms)[:6]:
            bits.append(f"{self.terms[mu]}*e{list(mu)}")
        more = " + ..." if len(self.terms) > 6 else ""
        return f"Character({self.rs.label}, {' + '.join(bits)}{more})"

    # -- ring structure -----------------------------------------------------

    def _check_ring(self, other):
        if self.rs.label != other.rs.label:
            raise CartanError("characters live over different root systems")

    def __add__(self, other):
        self._check_ring(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            s = out.get(mu, 0) + c
            if s:
                out[mu] = s
            elif mu in out:
                del out[mu]
        return Character(self.rs, out)

    def __neg__(self):
        return Character(self.rs, {mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int):
        if not n:
            return Character(self.rs)
        return Character(self.rs, {mu: n * c for mu, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_ring(other)
        return Character(self.rs, _kernels.convolve(self.terms, other.terms, self.rs.rank))

    __rmul__ = __mul__

    # -- Weyl structure -----------------------------------------------------

    def w_act(self, group, w):
        """Relabel every term's weight by the action of w."""
        m = w.matrix
        n = self.rs.rank
        out = {}
        for mu, c in self.terms.items():
            out[tuple(sum(m[i][j] * mu[j] for j in range(n)) for i in range(n))] = c
        return Character(self.rs, out)

    def bar(self):
        """Negate every weight (the involution dual to inversion on the torus)."""
        return Character(self.rs, {tuple(-x for x in mu): c for mu, c in self.terms.items()})

    def is_w_invariant(self, group) -> bool:
        from .weyl_group import simple_reflection

        for i in range(self.rs.rank):
            for mu, c in self.terms.items():
                if self.terms.get(simple_reflection(self.rs, i, mu), 0) != c:
                    return False
        return True

    # -- division and pairings ----------------------------------------------

    def divide_exact(self, root: Root):
        """Exact quotient by ``1 - e(-root)``; raises on a nonzero remainder."""
        try:
            q = _kernels.divide_strings(
                self.terms, root.weight_coords, root.coroot_coords, self.rs.rank
            )
        except (_kernels.DivisionRemainder, ValueError) as exc:
            raise _kernels.DivisionRemainder(str(exc)) from None
        return Character(self.rs, q)

    def inner_T(self, other) -> int:
        """Torus inner product: irreducible torus characters are orthonormal."""
        self._check_ring(other)
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        return sum(c * b[mu] for mu, c in a.items() if mu in b)

    def inner_G(self, group, other) -> int:
        """Inner product on the invariant subring, by Weyl integration.

        The constant term of ``a * bar(b) * L * bar(L)`` (L the product over
        positive roots of ``1 - e(-alpha)``) must be divisible by the group
        order; both that and W-invariance of the inputs are asserted.
        """
        self._check_ring(other)
        if not self.is_w_invariant(group) or not other.is_w_invariant(group):
            raise InvarianceError("inner_G requires W-invariant characters")
        from .weyl_formula import big_lambda

        lam = big_lambda(self.rs)
        measure = group._cache_measure if hasattr(group, "_cache_measure") else None
        if measure is None:
            measure = lam * lam.bar()
            group._cache_measure = measure
        total = (self * other.bar()).inner_T(measure.bar())
        q, r = divmod(total, len(group))
        if r:
            raise InvarianceError("Weyl integration did not return a multiple of |W|")
        return q

    # -- serialization ------------------------------------------------------

    def to_dict(self):
        return {
            "type": str(self.rs.label),
            "terms": [
                {"weight": list(mu), "mult": str(self.terms[mu])}
                for mu in sorted(self.terms)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, rs, data):
        if data.get("type") != str(rs.label):
            raise CartanError("serialized character has a different Cartan type")
        terms = {}
        for item in data["terms"]:
            terms[tuple(item["weight"])] = int(item["mult"])
        return cls.from_terms(rs, terms)


# Module-level spellings of the ring operations.

def exponential(rs, psi):
    return Character.exponential(rs, psi)


def add(a, b):
    return a + b


def scale(a, n):
    return a.scale(n)


def mul(a, b):
    return a * b


def w_act(group, w, chi):
    return chi.w_act(group, w)


def is_w_invariant(group, chi):
    return chi.is_w_invariant(group)


def divide_exact(chi, root):
    return chi.divide_exact(root)


def bar(chi):
    return chi.bar()


def inner_T(a, b):
    return a.inner_T(b)


def inner_G(group, a, b):
    return a.inner_G(group, b)
