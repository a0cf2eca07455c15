"""Acceptance gate: one test per contract criterion.

Each test is marked with its criterion number; the conftest summary hook
prints one PASS/FAIL line per criterion at the end of the run.  Sample
counts, seeds, and wall-clock budgets are part of the contract.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from _fixtures import V1_EXPANSION, V2_EXPANSION
from _oracles import level_vectors, spin_dimension
from spincrystal import (cartan_core, coherent_family, geometric_crystal,
                         perfect_crystal, spin_module, tropicalizer,
                         ud_crystal)
from spincrystal.formula_corpus import WORD_X, X_VARS, Y_VARS


def _random_env(rng, names):
    return {name: Fraction(rng.randint(1, 12), rng.randint(1, 12))
            for name in names}


@pytest.mark.criterion(1, "decorated vector expansions match the frozen"
                          " printed forms")
def test_spin_vector_expansions():
    start = time.monotonic()
    rng = random.Random(20240501)
    v1_exprs = {b: tropicalizer.parse(s) for b, s in V1_EXPANSION.items()}
    v2_exprs = {b: tropicalizer.parse(s) for b, s in V2_EXPANSION.items()}
    for _ in range(100):
        env = _random_env(rng, X_VARS)
        vec = spin_module.build_V1(env)
        for b in spin_module.BASIS:
            assert vec[b] == tropicalizer.eval_rational(v1_exprs[b], env)
        env = _random_env(rng, Y_VARS)
        vec = spin_module.build_V2(env)
        for b in spin_module.BASIS:
            assert vec[b] == tropicalizer.eval_rational(v2_exprs[b], env)
    assert time.monotonic() - start < 1.0


@pytest.mark.criterion(2, "twist carries one decorated vector to the"
                          " other; twist roundtrips are exact")
def test_twist_identity_and_roundtrip():
    start = time.monotonic()
    rng = random.Random(77)
    for _ in range(100):
        pt = geometric_crystal.random_point(rng, "x")
        assert geometric_crystal.verify_sigma_equation(pt)
        assert geometric_crystal.sigma_bar_inv(
            geometric_crystal.sigma_bar(pt)) == pt
    assert time.monotonic() - start < 1.0


@pytest.mark.criterion(3, "one-parameter crystal axioms and braid-type"
                          " relations hold exactly")
def test_geometric_axiom_suite():
    start = time.monotonic()
    report = geometric_crystal.verify_axioms(
        geometric_crystal.SampleConfig(seed=0, count=100, bound=6))
    assert report["ok"], report
    assert report["failures"] == 0
    for rel in report["relations"].values():
        assert rel["checked"] > 0
    assert time.monotonic() - start < 10.0


@pytest.mark.criterion(4, "generic word recipe reproduces the specialized"
                          " classical operators")
def test_generic_word_oracle():
    start = time.monotonic()
    rng = random.Random(4242)
    for _ in range(50):
        pt = geometric_crystal.random_point(rng, "x")
        coords = tuple(pt.env()[name] for name in X_VARS)
        c = geometric_crystal.random_param(rng)
        for k in (1, 2, 3, 4, 5):
            assert geometric_crystal.generic_gamma(
                WORD_X, coords, k) == geometric_crystal.gamma(k, pt)
            assert geometric_crystal.generic_eps(
                WORD_X, coords, k) == geometric_crystal.eps(k, pt)
            moved = geometric_crystal.generic_e_action(WORD_X, coords, k, c)
            wanted = geometric_crystal.e_action(k, c, pt)
            assert moved == tuple(wanted.env()[n] for n in X_VARS)
    assert time.monotonic() - start < 5.0


@pytest.mark.criterion(5, "enumeration counts match the dimension and"
                          " weight-vector oracles")
def test_enumeration_counts():
    start = time.monotonic()
    for l in (1, 2, 3):
        elems = perfect_crystal.enumerate_level(l)
        assert len(elems) == spin_dimension(l)
        minimal = [e for e in elems if perfect_crystal.is_minimal(e)]
        assert len(minimal) == len(level_vectors(l))
    assert spin_dimension(1) == 16
    assert len(level_vectors(1)) == 4
    assert time.monotonic() - start < 30.0


@pytest.mark.criterion(6, "exhaustive crystal axioms and minimality"
                          " bijections on levels 1-3")
def test_finite_crystal_axioms():
    start = time.monotonic()
    for l in (1, 2, 3):
        report = perfect_crystal.verify_crystal(l)
        assert report["ok"], report
        assert report["failures"] == 0
    assert time.monotonic() - start < 120.0


@pytest.mark.criterion(7, "tensor embeddings intertwine and reconstruction"
                          " roundtrips hold")
def test_coherent_family():
    start = time.monotonic()
    report = coherent_family.verify_coherence(
        samples=10000, seed=0, levels=(1, 2), level3_samples=1000)
    assert report["ok"], report
    assert report["failures"] == 0
    assert report["relations"]["preimage_roundtrip"]["checked"] == 10000
    assert time.monotonic() - start < 120.0


@pytest.mark.criterion(8, "hand-coded piecewise-linear layer equals the"
                          " machine tropicalization")
def test_ud_match():
    start = time.monotonic()
    report = ud_crystal.verify_ud_match(samples=10000, box=5, seed=0)
    assert report["ok"], report
    assert report["failures"] == 0
    transport = report["zero_gate_evidence"]["transport"]
    assert transport["value_mismatch"] == 0
    assert transport["definedness_mismatch"] == 0
    assert time.monotonic() - start < 60.0


@pytest.mark.criterion(9, "coordinate change is an isomorphism of"
                          " crystals")
def test_isomorphism():
    start = time.monotonic()
    report = ud_crystal.verify_isomorphism(samples=10000, box=8, seed=0)
    assert report["ok"], report
    assert report["failures"] == 0
    assert time.monotonic() - start < 60.0


@pytest.mark.criterion(10, "command-line output is byte-identical across"
                           " repeated seeded runs")
def test_cli_determinism():
    def run(args, stdin=None):
        proc = subprocess.run(
            [sys.executable, "-m", "spincrystal"] + args,
            input=stdin, capture_output=True, text=True)
        return proc.returncode, proc.stdout

    invocations = [
        (["enumerate", "--l", "2", "--format", "json"], None),
        (["enumerate", "--l", "1", "--format", "text"], None),
        (["graph", "--l", "1", "--format", "dot"], None),
        (["verify", "geometric", "--samples", "20", "--seed", "42"], None),
        (["verify", "ud-match", "--samples", "150", "--seed", "3"], None),
        (["verify", "iso", "--samples", "150", "--seed", "3"], None),
        (["tropicalize", "x*y + z^2"], None),
        (["omega"], json.dumps({"point": list(range(10))})),
        (["preimage"], json.dumps(
            {"regime": "limit", "rows": [[0] * 5 for _ in range(5)]})),
    ]
    for args, stdin in invocations:
        code1, out1 = run(args, stdin)
        code2, out2 = run(args, stdin)
        assert code1 == code2 == 0, (args, code1, code2)
        assert out1 == out2, args
        assert out1
