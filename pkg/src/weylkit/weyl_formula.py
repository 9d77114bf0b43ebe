"""The character-level Weyl formula as an operator calculus.

``gamma`` is the global-sections map: the quotient of the signed shifted
orbit sum by the product over positive roots of ``1 - e(-alpha)``, computed
by exact long division one root factor at a time.  ``lambda_map`` is the
localization map, multiplication by that product.  The intertwiners act by
the signed dot action of the inverse element.  The verification entry points
check the two composition identities relating these maps, the transformation
law of the root product under the group, and the adjointness of ``gamma``
and ``lambda_map`` for the two natural inner products.
"""

from __future__ import annotations

import random

from .char_ring import Character, InvarianceError
from .report import WeylReport
from .root_system import RootSystem
from .weyl_group import WeylGroup


def big_lambda(rs: RootSystem) -> Character:
    """Product over all positive roots of ``1 - e(-alpha)``."""
    lam = rs._cache.get("big_lambda")
    if lam is None:
        lam = Character.one(rs)
        zero = (0,) * rs.rank
        for root in sorted(rs.positive_roots, key=lambda r: (r.height, r.simple_coords)):
            factor = Character(rs, {zero: 1, tuple(-c for c in root.weight_coords): -1})
            lam = lam * factor
        rs._cache["big_lambda"] = lam
    return lam


def weyl_numerator(group: WeylGroup, psi) -> Character:
    """Signed sum of exponentials over the shifted orbit of psi."""
    psi = tuple(psi)
    terms = {}
    for w in group:
        mu = group.dot_act(w, psi)
        s = terms.get(mu, 0) + w.sign
        if s:
            terms[mu] = s
        elif mu in terms:
            del terms[mu]
    return Character(group.rs, terms)


def gamma(group: WeylGroup, chi: Character) -> Character:
    """Global sections: linear in chi, quotient of the numerator by the root product.

    On a single exponential this is the Weyl character of the (virtual)
    representation with highest weight psi; it vanishes when psi plus rho is
    singular, by cancellation in the numerator.
    """
    rs = group.rs
    num = {}
    for w in group:
        moved = chi.w_act(group, w)
        sgn = w.sign
        shift = tuple(c - 1 for c in group.act(w, rs.rho))
        for mu, c in moved.terms.items():
            key = tuple(m + s for m, s in zip(mu, shift))
            v = num.get(key, 0) + sgn * c
            if v:
                num[key] = v
            elif key in num:
                del num[key]
    out = Character(rs, num)
    for root in rs.positive_roots:
        out = out.divide_exact(root)
    return out


def lambda_map(group: WeylGroup, chi: Character) -> Character:
    """Localization: multiply an invariant character by the root product."""
    if not chi.is_w_invariant(group):
        raise InvarianceError("lambda_map requires a W-invariant character")
    return chi * big_lambda(group.rs)


def intertwiner(group: WeylGroup, w, chi: Character) -> Character:
    """Action of I_w: the signed dot action of the inverse of w, term by term."""
    winv = group.inverse(w)
    sgn = w.sign
    out = {}
    for mu, c in chi.terms.items():
        out[group.dot_act(winv, mu)] = sgn * c
    return Character(group.rs, out)


# ---------------------------------------------------------------------------
# verification suites

def check_w_action_lambda(group: WeylGroup, sample=None, seed=None) -> WeylReport:
    """w(L) = sign(w) e(rho - w(rho)) L for every w (or a seeded sample)."""
    rs = group.rs
    report = WeylReport("w-lambda", str(rs.label), seed=seed)
    lam = big_lambda(rs)
    elements = list(group)
    if sample is not None and sample < len(elements):
        rng = random.Random(seed)
        elements = rng.sample(elements, sample)
    for w in elements:
        lhs = lam.w_act(group, w)
        shift = tuple(1 - c for c in group.act(w, rs.rho))
        rhs = (Character.exponential(rs, shift) * lam).scale(w.sign)
        report.check({"w": w.index, "word": list(w.word)}, lhs, rhs)
    return report


def _random_weight(rng, rank, max_coord):
    return tuple(rng.randint(-max_coord, max_coord) for _ in range(rank))


def _random_dominant(rng, rank, max_coord):
    return tuple(rng.randint(0, max_coord) for _ in range(rank))


def verify_weyl_kk(group: WeylGroup, trials=100, seed=0, max_coord=3) -> WeylReport:
    """The two composition identities, plus the idempotent-embedding facts.

    (i)  lambda_map(gamma(e(psi))) equals the sum over w of the intertwiner
         action on e(psi), for random integral psi;
    (ii) gamma(lambda_map(x)) equals |W| times x for x = gamma(e(phi)) with
         random dominant phi;
    also gamma(1) = 1 and W-invariance of every gamma(e(psi)).
    """
    rs = group.rs
    report = WeylReport("weyl-kk", str(rs.label), seed=seed)
    rng = random.Random(seed)
    one = Character.one(rs)
    report.check({"identity": "gamma(1)=1"}, gamma(group, one), one)
    for _ in range(trials):
        psi = _random_weight(rng, rs.rank, max_coord)
        g = gamma(group, Character.exponential(rs, psi))
        if not g.is_w_invariant(group):
            report.trials += 1
            report.record({"psi": list(psi), "identity": "invariance"}, g.to_dict(), "W-invariant")
            continue
        lhs = g * big_lambda(rs)
        rhs = Character.zero(rs)
        e_psi = Character.exponential(rs, psi)
        for w in group:
            rhs = rhs + intertwiner(group, w, e_psi)
        report.check({"psi": list(psi), "identity": "lambda.gamma"}, lhs, rhs)
    sub = max(1, trials // 4)
    for _ in range(sub):
        phi = _random_dominant(rng, rs.rank, max_coord)
        x = gamma(group, Character.exponential(rs, phi))
        lhs = gamma(group, lambda_map(group, x))
        report.check({"phi": list(phi), "identity": "gamma.lambda"}, lhs, x.scale(len(group)))
    return report


def check_adjointness(group: WeylGroup, trials=100, seed=0, max_coord=3) -> WeylReport:
    """<x, gamma(z)>_G == <lambda_map(x), z>_T on random invariant x and z."""
    rs = group.rs
    report = WeylReport("adjoint", str(rs.label), seed=seed)
    rng = random.Random(seed)
    for _ in range(trials):
        x = Character.zero(rs)
        for _ in range(rng.randint(1, 3)):
            phi = _random_dominant(rng, rs.rank, min(2, max_coord))
            x = x + gamma(group, Character.exponential(rs, phi)).scale(rng.randint(-2, 2))
        z = Character.zero(rs)
        for _ in range(rng.randint(1, 3)):
            z = z + Character.exponential(rs, _random_weight(rng, rs.rank, max_coord)).scale(
                rng.randint(-3, 3)
            )
        lhs = x.inner_G(group, gamma(group, z))
        rhs = lambda_map(group, x).inner_T(z)
        report.check({"x_terms": len(x), "z": z.to_dict()}, lhs, rhs)
    return report
