"""Demazure operators and the 0-Hecke normal-form algebra.

The simple Demazure operator is the divided difference
``f -> (f - e(-alpha) s_alpha(f)) / (1 - e(-alpha))``, evaluated by the
closed string formula rather than long division (long division is kept as a
cross-check in the verification suites).  Words of simple operators compose
in diagrammatic order: the first letter of a word acts first.

A :class:`DemazureExpression` is a normal form ``sum_w [f_w] . P_w`` with the
ring coefficients on the left of the word-independent basis operators P_w.
Products are computed by the rewriting rule that moves coefficients leftward
through a simple operator:

    P_a . [h]  =  [s_a(h)] . P_a  +  [dd_a(h)] . Id

with ``dd_a`` the plain divided difference ``(h - s_a(h)) / (1 - e(-alpha))``,
together with the 0-Hecke rule ``P_w . P_a = P_{w s_a}`` when the length goes
up and ``P_w`` otherwise.
"""

from __future__ import annotations

import itertools
import json
import random

from . import _kernels
from .char_ring import Character
from .report import WeylReport
from .root_system import CartanError
from .weyl_group import WeylGroup, serialize_word, simple_reflection


def _simple_root(rs, i):
    for root in rs.positive_roots:
        if root.height == 1 and root.simple_coords[i] == 1:
            return root
    raise CartanError(f"no simple root with index {i}")


def demazure(rs, i: int, chi: Character) -> Character:
    """The simple Demazure operator for the i-th simple root."""
    root = _simple_root(rs, i)
    return Character(
        rs, _kernels.demazure_sweep(chi.terms, root.weight_coords, root.coroot_coords, rs.rank)
    )


def divided_difference(rs, i: int, chi: Character) -> Character:
    """The plain divided difference (f - s_alpha f) / (1 - e(-alpha))."""
    root = _simple_root(rs, i)
    return Character(
        rs,
        _kernels.divided_difference_sweep(
            chi.terms, root.weight_coords, root.coroot_coords, rs.rank
        ),
    )


def demazure_word(rs, word, chi: Character) -> Character:
    """Apply the word's operators with the leftmost letter acting first."""
    for i in word:
        chi = demazure(rs, i, chi)
    return chi


def demazure_character(group: WeylGroup, psi) -> Character:
    """Demazure's formula: the longest-word operator applied to e(psi)."""
    psi = tuple(psi)
    if not group.rs.is_dominant(psi):
        raise CartanError("demazure_character requires a dominant weight")
    return demazure_word(group.rs, group.longest.word, Character.exponential(group.rs, psi))


class DemazureExpression:
    """Normal form sum of left ring coefficients against the P_w basis."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: WeylGroup, coeffs=None):
        self.group = group
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def identity(cls, group):
        return cls(group, {0: Character.one(group.rs)})

    @classmethod
    def from_char(cls, group, chi):
        return cls(group, {0: chi})

    @classmethod
    def basis(cls, group, w, coeff=None):
        return cls(group, {w.index: coeff if coeff is not None else Character.one(group.rs)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, DemazureExpression)
            and self.group.rs.label == other.group.rs.label
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return DemazureExpression(self.group, out)

    def __neg__(self):
        return DemazureExpression(self.group, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        bits = []
        for k in sorted(self.coeffs):
            w = self.group.elements[k]
            bits.append(f"[{len(self.coeffs[k])} terms].P({serialize_word(w.word)})")
        return f"DemazureExpression({' + '.join(bits) or '0'})"

    def to_dict(self):
        group = self.group
        keys = sorted(
            self.coeffs, key=lambda k: (group.elements[k].length, group.elements[k].word)
        )
        return {
            "type": str(group.rs.label),
            "terms": [
                {
                    "word": [i + 1 for i in group.elements[k].word],
                    "coeff": self.coeffs[k].to_dict(),
                }
                for k in keys
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def nf_from_word(group, word) -> DemazureExpression:
    """Reduce a word in the 0-Hecke monoid and return its basis element."""
    w = group.identity
    for i in word:
        w = group.hecke_append(w, i)
    return DemazureExpression.basis(group, w)


def _push_through(group, word, chi):
    """Normal form of ``P_word . [chi]`` as a coefficient map."""
    if not chi:
        return {}
    if not word:
        return {0: chi}
    inner = _push_through(group, word[1:], chi)
    i = word[0]
    s_i = group.simple(i)
    out = {}

    def put(idx, val):
        if not val:
            return
        cur = out.get(idx)
        cur = val if cur is None else cur + val
        if cur:
            out[idx] = cur
        elif idx in out:
            del out[idx]

    for uid, h in inner.items():
        u = group.elements[uid]
        su = group.mul(s_i, u)
        target = su if su.length > u.length else u
        put(target.index, h.w_act(group, s_i))
        put(uid, divided_difference(group.rs, i, h))
    return out


def nf_mul(a: DemazureExpression, b: DemazureExpression) -> DemazureExpression:
    """Product in diagrammatic order (a acts first), in normal form."""
    group = a.group
    if group.rs.label != b.group.rs.label:
        raise CartanError("expressions live over different root systems")
    out = {}
    for wid, f in a.coeffs.items():
        word = group.elements[wid].word
        for vid, g in b.coeffs.items():
            pushed = _push_through(group, word, g)
            v = group.elements[vid]
            for uid, h in pushed.items():
                target = group.hecke_product(group.elements[uid], v).index
                val = f * h
                if not val:
                    continue
                cur = out.get(target)
                cur = val if cur is None else cur + val
                if cur:
                    out[target] = cur
                elif target in out:
                    del out[target]
    return DemazureExpression(group, out)


def nf_apply(a: DemazureExpression, chi: Character) -> Character:
    """Act on a character: multiply by each coefficient, then run its word."""
    group = a.group
    out = Character.zero(group.rs)
    for wid, f in a.coeffs.items():
        out = out + demazure_word(group.rs, group.elements[wid].word, f * chi)
    return out


def nf_intertwiner(group, w) -> DemazureExpression:
    """The intertwiner I_w as a normal form, built along a reduced word.

    For a simple reflection, I_s is ``P_s . [1 - e(-alpha)] - Id``; general
    elements come from the homomorphism property by multiplying along the
    canonical reduced word.
    """
    rs = group.rs
    out = DemazureExpression.identity(group)
    for i in w.word:
        root = _simple_root(rs, i)
        factor = Character.one(rs) - Character.exponential(
            rs, tuple(-c for c in root.weight_coords)
        )
        step = nf_mul(
            DemazureExpression.basis(group, group.simple(i)),
            DemazureExpression.from_char(group, factor),
        ) - DemazureExpression.identity(group)
        out = nf_mul(out, step)
    return out


# ---------------------------------------------------------------------------
# verification suites

def _probe_weights(rank, bound=3, rng=None, count=None):
    if count is None:
        return list(itertools.product(range(-bound, bound + 1), repeat=rank))
    return [tuple(rng.randint(-bound, bound) for _ in range(rank)) for _ in range(count)]


def verify_braid(group: WeylGroup, probe_bound=3, probe_count=None, seed=0) -> WeylReport:
    """Braid relations, both as normal forms and as operators on probes."""
    rs = group.rs
    report = WeylReport("braid", str(rs.label), seed=seed)
    rng = random.Random(seed)
    if rs.rank < 2:
        report.trials = 0
        return report
    if probe_count is None and rs.rank > 2:
        probe_count = 40
    probes = _probe_weights(rs.rank, probe_bound, rng, probe_count)
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            m = group.coxeter_order(i, j)
            word_a = tuple(i if t % 2 == 0 else j for t in range(m))
            word_b = tuple(j if t % 2 == 0 else i for t in range(m))
            report.check(
                {"pair": [i + 1, j + 1], "m": m, "identity": "normal form"},
                nf_from_word(group, word_a).to_dict(),
                nf_from_word(group, word_b).to_dict(),
            )
            for psi in probes:
                e = Character.exponential(rs, psi)
                report.check(
                    {"pair": [i + 1, j + 1], "m": m, "psi": list(psi)},
                    demazure_word(rs, word_a, e),
                    demazure_word(rs, word_b, e),
                )
    return report


def verify_word_independence(group: WeylGroup, words_per_element=8, elements=12, seed=0) -> WeylReport:
    """All sampled reduced words of an element give one normal form and one operator."""
    rs = group.rs
    report = WeylReport("word-independence", str(rs.label), seed=seed)
    rng = random.Random(seed)
    pool = [w for w in group if w.length >= 2]
    if len(pool) > elements:
        pool = rng.sample(pool, elements)
    probes = _probe_weights(rs.rank, 2, rng, 10 if rs.rank > 2 else None)
    for w in pool:
        words = group.reduced_words(w, limit=words_per_element)
        base = nf_from_word(group, words[0])
        base_vals = [demazure_word(rs, words[0], Character.exponential(rs, p)) for p in probes]
        for word in words[1:]:
            report.check(
                {"w": w.index, "word": list(word), "identity": "normal form"},
                nf_from_word(group, word).to_dict(),
                base.to_dict(),
            )
            for p, expect in zip(probes, base_vals):
                report.check(
                    {"w": w.index, "word": list(word), "psi": list(p)},
                    demazure_word(rs, word, Character.exponential(rs, p)),
                    expect,
                )
    return report


def verify_demazure_formula(group: WeylGroup, coord_bound=2, word_limit=None, seed=0) -> WeylReport:
    """Demazure's character formula against the Weyl quotient, over w0 words."""
    from .weyl_formula import gamma

    rs = group.rs
    report = WeylReport("demazure", str(rs.label), seed=seed)
    words = group.reduced_words(group.longest, limit=word_limit)
    dominants = list(itertools.product(range(coord_bound + 1), repeat=rs.rank))
    for psi in dominants:
        expect = gamma(group, Character.exponential(rs, psi))
        for word in words:
            report.check(
                {"psi": list(psi), "word": list(word)},
                demazure_word(rs, word, Character.exponential(rs, psi)),
                expect,
            )
    return report


def verify_divided_diff_relations(group: WeylGroup, trials=100, seed=0, max_coord=3) -> WeylReport:
    """The intertwiner relation and the coefficient commutation relation.

    In normal form: P_a . [1 - e(-alpha)] = Id + I_{s_a}, and
    [e(phi)] . P_a = [dd_a(e(phi))] + P_a . [e(s_a phi)]; both are also
    spot-checked as operators on random probes.
    """
    from .weyl_formula import intertwiner

    rs = group.rs
    report = WeylReport("divided-diff", str(rs.label), seed=seed)
    rng = random.Random(seed)
    ident = DemazureExpression.identity(group)
    for i in range(rs.rank):
        root = _simple_root(rs, i)
        neg_alpha = tuple(-c for c in root.weight_coords)
        factor = Character.one(rs) - Character.exponential(rs, neg_alpha)
        lhs = nf_mul(
            DemazureExpression.basis(group, group.simple(i)),
            DemazureExpression.from_char(group, factor),
        )
        rhs = ident + nf_intertwiner(group, group.simple(i))
        report.check(
            {"alpha": i + 1, "identity": "P.(1-e(-a)) = Id + I_s"},
            lhs.to_dict(),
            rhs.to_dict(),
        )
    for _ in range(trials):
        i = rng.randrange(rs.rank)
        phi = tuple(rng.randint(-max_coord, max_coord) for _ in range(rs.rank))
        e_phi = Character.exponential(rs, phi)
        s_phi = simple_reflection(rs, i, phi)
        lhs = nf_mul(
            DemazureExpression.from_char(group, e_phi),
            DemazureExpression.basis(group, group.simple(i)),
        )
        rhs = DemazureExpression.from_char(group, divided_difference(rs, i, e_phi)) + nf_mul(
            DemazureExpression.basis(group, group.simple(i)),
            DemazureExpression.from_char(group, Character.exponential(rs, s_phi)),
        )
        report.check({"alpha": i + 1, "phi": list(phi), "identity": "commutation"}, lhs.to_dict(), rhs.to_dict())
        # operator-level spot check of the intertwiner relation
        psi = tuple(rng.randint(-max_coord, max_coord) for _ in range(rs.rank))
        e_psi = Character.exponential(rs, psi)
        root = _simple_root(rs, i)
        factor = Character.one(rs) - Character.exponential(
            rs, tuple(-c for c in root.weight_coords)
        )
        lhs_op = demazure(rs, i, e_psi) * factor
        rhs_op = e_psi + intertwiner(group, group.simple(i), e_psi)
        report.check({"alpha": i + 1, "psi": list(psi), "identity": "operator"}, lhs_op, rhs_op)
    return report


def verify_idempotents(group: WeylGroup) -> WeylReport:
    """Idempotency of the simple and longest projectors, and absorption."""
    rs = group.rs
    report = WeylReport("idempotent", str(rs.label))
    pi_w0 = DemazureExpression.basis(group, group.longest)
    report.check(
        {"identity": "Pi_w0 idempotent"},
        nf_mul(pi_w0, pi_w0).to_dict(),
        pi_w0.to_dict(),
    )
    for i in range(rs.rank):
        pa = DemazureExpression.basis(group, group.simple(i))
        report.check({"alpha": i + 1, "identity": "Pi_a idempotent"}, nf_mul(pa, pa).to_dict(), pa.to_dict())
        report.check({"alpha": i + 1, "identity": "Pi_w0 absorbs"}, nf_mul(pi_w0, pa).to_dict(), pi_w0.to_dict())
    return report


def verify_ideal_lemma(group: WeylGroup, word_limit=4) -> WeylReport:
    """The two displayed identities behind the right-ideal lemma."""
    rs = group.rs
    report = WeylReport("ideal", str(rs.label))
    ident = DemazureExpression.identity(group)
    pi = DemazureExpression.basis(group, group.longest)
    words = group.reduced_words(group.longest, limit=word_limit)
    for word in words:
        for k in range(1, len(word) + 1):
            prefix = word[:k]
            lhs = ident - nf_from_word(group, prefix)
            last = DemazureExpression.basis(group, group.simple(prefix[-1]))
            head = ident - nf_from_word(group, prefix[:-1])
            rhs = (ident - last) + nf_mul(head, last)
            report.check(
                {"word": list(word), "prefix": k, "identity": "peel"},
                lhs.to_dict(),
                rhs.to_dict(),
            )
    for i in range(rs.rank):
        pa = DemazureExpression.basis(group, group.simple(i))
        lhs = ident - pa
        rhs = (ident - pi) - nf_mul(ident - pi, pa)
        report.check({"alpha": i + 1, "identity": "generator swap"}, lhs.to_dict(), rhs.to_dict())
    return report


def verify_confluence(group: WeylGroup, trials=20, seed=0, max_coord=2) -> WeylReport:
    """Association order does not change normal forms, and application composes."""
    rs = group.rs
    report = WeylReport("hecke-confluence", str(rs.label), seed=seed)
    rng = random.Random(seed)

    def random_expr():
        out = DemazureExpression(group, {})
        for _ in range(rng.randint(1, 2)):
            w = group.elements[rng.randrange(len(group))]
            terms = {}
            for _ in range(rng.randint(1, 2)):
                mu = tuple(rng.randint(-max_coord, max_coord) for _ in range(rs.rank))
                terms[mu] = terms.get(mu, 0) + rng.randint(-2, 2)
            chi = Character.from_terms(rs, terms)
            if chi:
                out = out + DemazureExpression(group, {w.index: chi})
        return out

    for _ in range(trials):
        a, b, c = random_expr(), random_expr(), random_expr()
        report.check(
            {"identity": "associativity"},
            nf_mul(nf_mul(a, b), c).to_dict(),
            nf_mul(a, nf_mul(b, c)).to_dict(),
        )
        psi = tuple(rng.randint(-max_coord, max_coord) for _ in range(rs.rank))
        chi = Character.exponential(rs, psi)
        report.check(
            {"identity": "composition", "psi": list(psi)},
            nf_apply(nf_mul(a, b), chi),
            nf_apply(b, nf_apply(a, chi)),
        )
    return report
