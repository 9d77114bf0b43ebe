"""Acceptance suite: one test per published correctness criterion.

Every check is exact integer equality; the timed criteria assert their wall
clock budget.  Each test prints a single summary line so a `-v` run reads as
a pass/fail scorecard.
"""

import itertools
import json
import random
import time

import pytest

from weylkit import demazure as dz
from weylkit import weyl_formula as wf
from weylkit.char_ring import Character
from weylkit.cli import main as cli_main
from weylkit.oracles import freudenthal, weyl_dim
from weylkit.root_system import build
from weylkit.weyl_group import WeylGroup

CORE_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]
RANK2_TYPES = ["A1", "A2", "B2", "G2"]
RANK3_TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]
SEED = 20240501

_groups = {}


def group(label):
    if label not in _groups:
        _groups[label] = WeylGroup(build(label, max_weyl_order=None))
    return _groups[label]


def dominant_weights(rank, bound):
    return list(itertools.product(range(bound + 1), repeat=rank))


def report(name, detail):
    print(f"PASS {name}: {detail}")


def test_criterion_01_weyl_oracle_equivalence():
    t0 = time.monotonic()
    checked = 0
    for label in CORE_TYPES:
        g = group(label)
        rs = g.rs
        for psi in dominant_weights(rs.rank, 2):
            char = wf.gamma(g, Character.exponential(rs, psi))
            assert char == freudenthal(rs, psi), (label, psi)
            assert char.dimension() == weyl_dim(rs, psi), (label, psi)
            checked += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"criterion 1 took {elapsed:.1f}s"
    report("criterion 1", f"gamma == freudenthal and dim == weyl_dim for "
           f"{checked} dominant weights across {len(CORE_TYPES)} types in {elapsed:.1f}s")


def test_criterion_02_lambda_of_gamma_is_intertwiner_sum():
    per_type = {}
    for label in CORE_TYPES:
        g = group(label)
        rs = g.rs
        rng = random.Random(SEED)
        t0 = time.monotonic()
        for _ in range(100):
            psi = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
            e_psi = Character.exponential(rs, psi)
            lhs = wf.lambda_map(g, wf.gamma(g, e_psi))
            rhs = Character.zero(rs)
            for w in g:
                rhs = rhs + wf.intertwiner(g, w, e_psi)
            assert lhs == rhs, (label, psi)
        per_type[label] = time.monotonic() - t0
        assert per_type[label] < 30.0, f"{label} took {per_type[label]:.1f}s"
    worst = max(per_type.values())
    report("criterion 2", f"lambda(gamma(e(psi))) == sum of intertwiners, 100 random "
           f"psi x {len(CORE_TYPES)} types, worst type {worst:.1f}s")


def test_criterion_03_gamma_of_lambda_is_group_order():
    checked = 0
    for label in CORE_TYPES:
        g = group(label)
        rs = g.rs
        rng = random.Random(SEED + 1)
        for _ in range(25):
            phi = tuple(rng.randint(0, 2) for _ in range(rs.rank))
            x = wf.gamma(g, Character.exponential(rs, phi))
            assert wf.gamma(g, wf.lambda_map(g, x)) == x.scale(len(g)), (label, phi)
            checked += 1
    report("criterion 3", f"gamma(lambda(x)) == |W| x for {checked} dominant weights")


def test_criterion_04_unit_and_denominator_identity():
    labels = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
              "D4", "D5", "F4", "G2", "E6"]
    for label in labels:
        g = group(label)
        rs = g.rs
        assert wf.gamma(g, Character.one(rs)) == Character.one(rs), label
        assert wf.weyl_numerator(g, (0,) * rs.rank) == wf.big_lambda(rs), label
    report("criterion 4", f"gamma(1) == 1 and the denominator identity on {len(labels)} types")


def test_criterion_05_w_action_on_lambda():
    for label in RANK3_TYPES:
        g = group(label)
        rs = g.rs
        lam = wf.big_lambda(rs)
        for w in g:
            shift = tuple(a - b for a, b in zip(rs.rho, g.act(w, rs.rho)))
            assert lam.w_act(g, w) == (lam * Character.exponential(rs, shift)).scale(w.sign)
    rank4 = ["A4", "B4", "C4", "D4", "F4"]
    for label in rank4:
        g = group(label)
        rs = g.rs
        lam = wf.big_lambda(rs)
        rng = random.Random(SEED + 2)
        elems = list(g)
        for _ in range(100):
            w = elems[rng.randrange(len(elems))]
            shift = tuple(a - b for a, b in zip(rs.rho, g.act(w, rs.rho)))
            assert lam.w_act(g, w) == (lam * Character.exponential(rs, shift)).scale(w.sign)
    report("criterion 5", f"w(Lambda) == sign(w) e(rho - w rho) Lambda, exhaustive on "
           f"{len(RANK3_TYPES)} rank<=3 types + 100 random w on {len(rank4)} rank-4 types")


def test_criterion_06_demazure_character_formula():
    exhaustive = ["A1", "A2", "B2", "G2", "A3"]
    sampled = ["B3", "D4"]
    words_checked = 0
    for label in exhaustive + sampled:
        g = group(label)
        rs = g.rs
        limit = None if label in exhaustive else 20
        words = g.reduced_words(g.longest, limit=limit)
        if label in sampled:
            assert len(words) >= 20
        for psi in dominant_weights(rs.rank, 2):
            expect = wf.gamma(g, Character.exponential(rs, psi))
            for word in words:
                assert dz.demazure_word(rs, word, Character.exponential(rs, psi)) == expect
                words_checked += 1
    report("criterion 6", f"demazure_word == gamma over {words_checked} (word, weight) pairs")


def test_criterion_07_braid_relations():
    cases = {"A2": None, "B2": None, "G2": None, "A3": None, "B3": None}
    g2_elapsed = None
    for label in cases:
        g = group(label)
        rs = g.rs
        t0 = time.monotonic()
        probe_count = None if rs.rank == 2 else 60
        rep = dz.verify_braid(g, probe_bound=3, probe_count=probe_count, seed=SEED)
        assert rep.passed, (label, rep.failures[:2])
        if label == "G2":
            g2_elapsed = time.monotonic() - t0
            assert g2_elapsed < 10.0, f"G2 braid took {g2_elapsed:.1f}s"
    report("criterion 7", f"braid relations in normal form and on probes for "
           f"{len(cases)} types; G2 in {g2_elapsed:.1f}s")


def test_criterion_08_idempotency_and_hecke():
    for label in CORE_TYPES:
        g = group(label)
        w0 = dz.DemazureExpression.basis(g, g.longest)
        assert dz.nf_mul(w0, w0) == w0, label
        for i in range(g.rs.rank):
            pa = dz.DemazureExpression.basis(g, g.simple(i))
            assert dz.nf_mul(pa, pa) == pa, (label, i)
            assert dz.nf_mul(w0, pa) == w0, (label, i)
    report("criterion 8", f"Pi_alpha and Pi_w0 idempotent, Pi_w0 (x) Pi_alpha == Pi_w0, "
           f"{len(CORE_TYPES)} types")


def test_criterion_09_divided_difference_relations():
    for label in RANK3_TYPES:
        g = group(label)
        rep = dz.verify_divided_diff_relations(g, trials=100, seed=SEED)
        assert rep.passed, (label, rep.failures[:2])
    report("criterion 9", f"both operator identities in normal form and on 100 probes, "
           f"{len(RANK3_TYPES)} types")


def test_criterion_10_ideal_lemma():
    for label in RANK3_TYPES:
        g = group(label)
        rep = dz.verify_ideal_lemma(g, word_limit=8)
        assert rep.passed, (label, rep.failures[:2])
    report("criterion 10", f"ideal lemma identities on all prefixes of sampled reduced "
           f"words, {len(RANK3_TYPES)} types")


def test_criterion_11_adjointness():
    for label in RANK3_TYPES:
        g = group(label)
        rs = g.rs
        rep = wf.check_adjointness(g, trials=100, seed=SEED)
        assert rep.passed, (label, rep.failures[:2])
        rng = random.Random(SEED + 3)
        for _ in range(20):
            psi = tuple(rng.randint(0, 2) for _ in range(rs.rank))
            x = wf.gamma(g, Character.exponential(rs, psi))
            assert x.inner_G(g, x) == 1, (label, psi)
    report("criterion 11", f"<x, gamma z>_G == <lambda x, z>_T on 100 pairs and "
           f"<gamma psi, gamma psi>_G == 1 on 20 weights, {len(RANK3_TYPES)} types")


def test_criterion_12_intertwiner_homomorphism():
    pairs_checked = 0
    for label in RANK2_TYPES:
        g = group(label)
        rs = g.rs
        probes = [tuple(p) for p in itertools.product((-2, 0, 1), repeat=rs.rank)]
        for w in g:
            for v in g:
                vw = g.mul(v, w)
                for psi in probes[:4]:
                    x = Character.exponential(rs, psi)
                    # left composition of the actions multiplies contravariantly
                    assert wf.intertwiner(g, w, wf.intertwiner(g, v, x)) == wf.intertwiner(g, vw, x)
                # Kasparov products multiply covariantly
                prod = dz.nf_mul(dz.nf_intertwiner(g, w), dz.nf_intertwiner(g, v))
                assert prod == dz.nf_intertwiner(g, g.mul(w, v))
                pairs_checked += 1
    for label in ["A3", "B3", "C3"]:
        g = group(label)
        rs = g.rs
        rng = random.Random(SEED + 4)
        elems = list(g)
        for _ in range(12):
            w = elems[rng.randrange(len(elems))]
            v = elems[rng.randrange(len(elems))]
            psi = tuple(rng.randint(-2, 2) for _ in range(rs.rank))
            x = Character.exponential(rs, psi)
            assert wf.intertwiner(g, w, wf.intertwiner(g, v, x)) == wf.intertwiner(
                g, g.mul(v, w), x
            )
            prod = dz.nf_mul(dz.nf_intertwiner(g, w), dz.nf_intertwiner(g, v))
            assert prod == dz.nf_intertwiner(g, g.mul(w, v))
            pairs_checked += 1
    report("criterion 12", f"I_w (x) I_v == I_wv via actions and normal forms on "
           f"{pairs_checked} pairs")


def test_criterion_13_determinism_and_exit_codes(capsys):
    import contextlib
    import io

    def run(argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(argv)
        return code, buf.getvalue()

    for label in ["A2", "B2"]:
        args = ["verify", "--type", label, "--suite", "all", "--trials", "10",
                "--seed", "7", "--format", "json"]
        code1, out1 = run(args)
        code2, out2 = run(args)
        assert code1 == code2 == 0
        assert out1 == out2, f"verify output for {label} not byte-identical"
        assert json.loads(out1)["ok"] is True
    matrix = [
        (["info", "--type", "A2"], 0),
        (["char", "--type", "A2", "--weight", "1,1"], 0),
        (["info", "--type", "Q7"], 2),
        (["char", "--type", "A2", "--weight", "1,2,3"], 2),
        (["char", "--type", "A2", "--weight", "a,b"], 2),
        (["demazure", "--type", "A2", "--word", "9", "--weight", "1,0"], 2),
        (["verify", "--type", "A2", "--suite", "bogus"], 2),
        (["info", "--type", "A9"], 2),  # Weyl order guard
    ]
    for argv, expect in matrix:
        assert run(argv)[0] == expect, argv
    capsys.readouterr()
    report("criterion 13", "byte-identical seeded verify reports and exit-code matrix honored")
