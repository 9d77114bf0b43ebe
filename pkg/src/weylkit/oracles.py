"""Independent brute-force computations used to validate the character maps.

The multiplicity recursion walks the saturated weight set downward from the
highest weight using exact scaled-integer inner products, so no floating
point ever enters.  The partition-function route is retained as a second
witness even though it shares more theory with the formula it checks; the
two exercise disjoint code paths.
"""

from __future__ import annotations

from .char_ring import Character
from .root_system import RootSystem
from .weyl_group import WeylGroup, simple_reflection


class OracleError(RuntimeError):
    """An oracle hit an impossible state (signals a fault upstream)."""


def _dominant_rep(rs, mu):
    """The dominant weight in the orbit of mu, by repeated simple reflections."""
    mu = tuple(mu)
    while True:
        for i, c in enumerate(mu):
            if c < 0:
                mu = simple_reflection(rs, i, mu)
                break
        else:
            return mu


def _saturated_weights(rs, psi):
    """All weights of the irreducible with highest weight psi.

    Downward closure: a weight belongs to the set exactly when its dominant
    representative differs from psi by a nonnegative integer combination of
    simple roots.
    """
    def member(mu):
        dom = _dominant_rep(rs, mu)
        diff = tuple(p - d for p, d in zip(psi, dom))
        sc = rs.to_simple_coords(diff)
        return all(c.denominator == 1 and c >= 0 for c in sc)

    seen = {psi}
    frontier = [psi]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(rs.rank):
                col = rs.simple_root_weight_coords(i)
                cand = tuple(m - c for m, c in zip(mu, col))
                if cand not in seen and member(cand):
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return seen


def freudenthal(rs: RootSystem, psi) -> Character:
    """Full character of the irreducible with highest weight psi.

    Multiplicities satisfy
    (|psi+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{j>=1} m(mu+ja)(mu+ja, a),
    solved for dominant mu in order of decreasing height and transported to
    the rest of each orbit by Weyl symmetry.
    """
    psi = tuple(psi)
    if not rs.is_dominant(psi):
        raise OracleError("freudenthal requires a dominant weight")
    weights = _saturated_weights(rs, psi)
    dominant = [mu for mu in weights if rs.is_dominant(mu)]

    def depth(mu):
        sc = rs.to_simple_coords(tuple(p - m for p, m in zip(psi, mu)))
        return sum(sc)

    dominant.sort(key=lambda mu: (depth(mu), mu))
    rho = rs.rho
    top = tuple(p + 1 for p in psi)
    top_norm = rs.ip_scaled(top, top)
    mult = {psi: 1}
    for mu in dominant:
        if mu == psi:
            continue
        total = 0
        for root in rs.positive_roots:
            a = root.weight_coords
            j = 1
            while True:
                nu = tuple(m + j * x for m, x in zip(mu, a))
                if nu not in weights:
                    break
                m_nu = mult.get(_dominant_rep(rs, nu), 0)
                if m_nu:
                    total += m_nu * rs.ip_scaled(nu, a)
                j += 1
        shifted = tuple(m + 1 for m in mu)
        denom = top_norm - rs.ip_scaled(shifted, shifted)
        if denom <= 0:
            raise OracleError(f"vanishing denominator at {mu}")
        q, r = divmod(2 * total, denom)
        if r:
            raise OracleError(f"non-integer multiplicity at {mu}")
        mult[mu] = q
    terms = {}
    for mu in weights:
        terms[mu] = mult[_dominant_rep(rs, mu)]
    return Character.from_terms(rs, terms)


def weyl_dim(rs: RootSystem, psi) -> int:
    """Dimension by the product formula over positive roots, exactly."""
    psi = tuple(psi)
    if not rs.is_dominant(psi):
        raise OracleError("weyl_dim requires a dominant weight")
    shifted = tuple(p + 1 for p in psi)
    num = 1
    den = 1
    for root in rs.positive_roots:
        num *= rs.pair(shifted, root)
        den *= rs.pair(rs.rho, root)
    q, r = divmod(num, den)
    if r:
        raise OracleError("dimension product is not an integer")
    return q


def kostant_partition(rs: RootSystem, mu) -> int:
    """Number of ways to write mu as a nonnegative sum of positive roots."""
    sc = rs.to_simple_coords(tuple(mu))
    if any(c.denominator != 1 or c < 0 for c in sc):
        return 0
    target = tuple(int(c) for c in sc)
    table = {(0,) * rs.rank: 1}
    # one root at a time, bounded-coefficient DP over simple coordinates
    for root in rs.positive_roots:
        step = root.simple_coords
        new = {}
        for point in _box_points(target):
            count = table.get(point, 0)
            prev = tuple(p - s for p, s in zip(point, step))
            if all(x >= 0 for x in prev):
                count += new.get(prev, 0)
            if count:
                new[point] = count
        table = new
    return table.get(target, 0)


def _box_points(target):
    out = [()]
    for t in target:
        out = [p + (k,) for p in out for k in range(t + 1)]
    return out


def kostant_multiplicity(group: WeylGroup, psi, mu) -> int:
    """Alternating partition-function sum for a weight multiplicity."""
    rs = group.rs
    psi = tuple(psi)
    if not rs.is_dominant(psi):
        raise OracleError("kostant_multiplicity requires a dominant weight")
    shifted = tuple(p + 1 for p in psi)
    total = 0
    for w in group:
        arg = tuple(c - m - 1 for c, m in zip(group.act(w, shifted), mu))
        total += w.sign * kostant_partition(rs, arg)
    return total


def tensor_decompose(group: WeylGroup, psi1, psi2) -> dict:
    """Multiplicities of the product of two irreducible characters.

    Repeatedly strips the maximal remaining term (by height, then weight)
    and subtracts that irreducible character; every multiplicity must come
    out positive.
    """
    from .weyl_formula import gamma

    rs = group.rs
    for psi in (psi1, psi2):
        if not rs.is_dominant(tuple(psi)):
            raise OracleError("tensor_decompose requires dominant weights")
    rem = gamma(group, Character.exponential(rs, tuple(psi1))) * gamma(
        group, Character.exponential(rs, tuple(psi2))
    )
    out = {}

    def height_key(mu):
        return (sum(rs.to_simple_coords(mu)), mu)

    while rem:
        mu = max(rem.terms, key=height_key)
        n = rem.terms[mu]
        if not rs.is_dominant(mu) or n <= 0:
            raise OracleError(f"stripping failed at {mu} with multiplicity {n}")
        out[mu] = n
        rem = rem - gamma(group, Character.exponential(rs, mu)).scale(n)
    return out
