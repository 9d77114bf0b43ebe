"""Named verification suites, as used by the command line."""

from __future__ import annotations

import itertools
import random

from . import demazure as dz
from . import weyl_formula as wf
from .char_ring import Character
from .oracles import freudenthal, kostant_multiplicity, tensor_decompose, weyl_dim
from .report import WeylReport
from .weyl_group import WeylGroup

SUITES = (
    "weyl-kk",
    "w-lambda",
    "braid",
    "demazure",
    "word-independence",
    "ideal",
    "adjoint",
    "oracle",
    "hecke-confluence",
)


def verify_oracles(group: WeylGroup, coord_bound=1, trials=10, seed=0) -> WeylReport:
    """Cross-checks of gamma against the multiplicity and dimension oracles."""
    rs = group.rs
    report = WeylReport("oracle", str(rs.label), seed=seed)
    rng = random.Random(seed)
    dominants = list(itertools.product(range(coord_bound + 1), repeat=rs.rank))
    for psi in dominants:
        g = wf.gamma(group, Character.exponential(rs, psi))
        f = freudenthal(rs, psi)
        report.check({"psi": list(psi), "identity": "freudenthal"}, g, f)
        report.check({"psi": list(psi), "identity": "dimension"}, f.dimension(), weyl_dim(rs, psi))
    for _ in range(trials):
        psi = tuple(rng.randint(0, coord_bound) for _ in range(rs.rank))
        f = freudenthal(rs, psi)
        mus = sorted(f.terms)
        mu = mus[rng.randrange(len(mus))]
        report.check(
            {"psi": list(psi), "mu": list(mu), "identity": "kostant"},
            kostant_multiplicity(group, psi, mu),
            f.coeff(mu),
        )
    for _ in range(max(1, trials // 3)):
        p1 = tuple(rng.randint(0, coord_bound) for _ in range(rs.rank))
        p2 = tuple(rng.randint(0, coord_bound) for _ in range(rs.rank))
        decomp = tensor_decompose(group, p1, p2)
        total = sum(n * weyl_dim(rs, mu) for mu, n in decomp.items())
        report.check(
            {"left": list(p1), "right": list(p2), "identity": "tensor dim"},
            total,
            weyl_dim(rs, p1) * weyl_dim(rs, p2),
        )
    return report


def run_suite(group: WeylGroup, suite: str, trials=50, seed=0, max_coord=3):
    """Run one named suite (or every suite for ``"all"``); returns reports."""
    rs = group.rs
    if suite == "all":
        out = []
        for name in SUITES:
            out.extend(run_suite(group, name, trials=trials, seed=seed, max_coord=max_coord))
        return out
    if suite == "weyl-kk":
        return [wf.verify_weyl_kk(group, trials=trials, seed=seed, max_coord=max_coord)]
    if suite == "w-lambda":
        sample = None if len(group) <= 400 else max(trials, 100)
        return [wf.check_w_action_lambda(group, sample=sample, seed=seed)]
    if suite == "braid":
        count = None if rs.rank <= 2 else min(trials, 40)
        return [dz.verify_braid(group, probe_count=count, seed=seed)]
    if suite == "demazure":
        limit = None if len(group) <= 60 else 20
        return [dz.verify_demazure_formula(group, coord_bound=min(2, max_coord), word_limit=limit, seed=seed)]
    if suite == "word-independence":
        return [dz.verify_word_independence(group, seed=seed)]
    if suite == "ideal":
        out = [dz.verify_ideal_lemma(group), dz.verify_idempotents(group)]
        return out
    if suite == "adjoint":
        return [wf.check_adjointness(group, trials=trials, seed=seed, max_coord=max_coord)]
    if suite == "oracle":
        return [verify_oracles(group, coord_bound=1 if rs.rank >= 3 else 2, trials=trials // 5 + 2, seed=seed)]
    if suite == "hecke-confluence":
        return [dz.verify_confluence(group, trials=min(trials, 15), seed=seed)]
    raise ValueError(f"unknown suite {suite!r}")
