"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria".

All sampling is seeded (seed 0, per-trial generators from ``checks``).
"""

import json
import math
import time
from fractions import Fraction as F
from pathlib import Path

import pytest
from click.testing import CliRunner

import oracles
from starmat import _kernels, group as grp, hyperbolic as hyp
from starmat.checks import (NONZERO, rand_h, rand_invertible, rand_matrix, rand_n,
                            rand_non_scalar_invertible, rand_nonzero, rand_singular, rand_value,
                            rand_vec, trial_rng)
from starmat.cli import cli
from starmat.expr import evaluate, format_value
from starmat.matrix import Matrix, diag_split, nonassoc_witness
from starmat.scalars import FLOAT
from starmat.witnesses import rho_raw_reading

pytestmark = pytest.mark.acceptance

SEED = 0
ONE = Matrix.identity(2)
IDENTITY_MOTION = hyp.Motion.identity()


def rngs(count, seed=SEED):
    return (trial_rng(seed, i) for i in range(count))


def sample_pairs(count):
    out = []
    for rng in rngs(count):
        out.append((rand_matrix(rng), rand_matrix(rng)))
    return out


def test_c01_entrywise_conformance(criterion):
    criterion["label"] = "C1  star on 2x2 == entrywise oracle, 10,000 pairs, exact, < 5 s"
    pairs = sample_pairs(10_000)
    start = time.perf_counter()
    bad = 0
    for a, b in pairs:
        expected = oracles.entrywise_star(oracles.mat(a.rows), oracles.mat(b.rows))
        if a.star(b).rows != expected:
            bad += 1
    elapsed = time.perf_counter() - start
    criterion["detail"] = f"violations={bad} time={elapsed:.2f}s"
    assert bad == 0
    assert elapsed < 5.0


def test_c02_unit(criterion):
    criterion["label"] = "C2  1*A == A*1 == A on the same 10,000 samples, exact"
    bad = sum(1 for a, _ in sample_pairs(10_000) if not (ONE.star(a) == a == a.star(ONE)))
    criterion["detail"] = f"violations={bad}"
    assert bad == 0


def test_c03_associativity_n2(criterion):
    criterion["label"] = "C3  n=2 associativity: 531,441 exhaustive + 10,000 random, < 60 s"
    start = time.perf_counter()
    violations, checked, first = _kernels.assoc2_exhaustive((-1, 0, 1))
    bad_random = 0
    for rng in rngs(10_000):
        a, b, c = rand_matrix(rng), rand_matrix(rng), rand_matrix(rng)
        if a.star(b).star(c) != a.star(b.star(c)):
            bad_random += 1
    elapsed = time.perf_counter() - start
    criterion["detail"] = (f"exhaustive {checked} triples ({_kernels.IMPLEMENTATION} kernel) "
                           f"violations={violations}; random violations={bad_random}; "
                           f"time={elapsed:.2f}s")
    assert checked == 531_441 and violations == 0 and first is None
    assert bad_random == 0
    assert elapsed < 60.0


def test_c04_nonassociativity(criterion):
    criterion["label"] = "C4  n=3 witness lhs=E12, rhs=0; padded n=4..6 differ"
    w = nonassoc_witness(3)
    assert w.lhs == Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert w.rhs == Matrix.zero(3)
    for n in (4, 5, 6):
        wn = nonassoc_witness(n)
        assert wn.lhs != wn.rhs
    criterion["detail"] = "n=3,4,5,6 checked"


def test_c05_inverse_and_zero_divisors(criterion):
    criterion["label"] = "C5  star inverse on 10,000 invertibles; zero divisors on 10,000 singulars"
    bad_inv = bad_zd = 0
    for rng in rngs(10_000):
        a = rand_invertible(rng)
        b = grp.star_inverse(a)
        if not (a.star(b) == ONE == b.star(a)):
            bad_inv += 1
        s = rand_singular(rng)
        z = grp.zero_divisor_witness(s)
        if z.is_zero() or not s.star(z).is_zero():
            bad_zd += 1
    criterion["detail"] = f"inverse violations={bad_inv} zero-divisor violations={bad_zd}"
    assert bad_inv == 0 and bad_zd == 0


def test_c06_semidirect(criterion):
    criterion["label"] = "C6  H x N factorization, H&N trivial, conjugation, N-law on 10,000"
    bad = 0
    for rng in rngs(10_000):
        a = rand_invertible(rng)
        h, n = grp.hn_decompose(a)
        ok = h.star(n) == a and grp.in_h(h) and grp.in_n(n)
        ok &= grp.hn_decompose(h.star(n)) == (h, n)
        for m in (a, h, n):
            ok &= not (grp.in_h(m) and grp.in_n(m)) or m == ONE
        a0, b = rand_h(rng), rand_n(rng)
        bt = grp.conjugate_n_part(a0, b)
        ok &= grp.in_n(bt) and a0.star(b) == bt.star(a0)
        c = rand_n(rng)
        ok &= b.star(c) == ONE + diag_split(b).offdiag + diag_split(c).offdiag
        bad += not ok
    criterion["detail"] = f"violations={bad}"
    assert bad == 0


def test_c07_phi_homomorphism(criterion):
    criterion["label"] = "C7  Phi(A*B)=Phi(A)Phi(B) x10,000; kernel {s1} x100; non-scalar x1,000"
    bad_hom = 0
    for rng in rngs(10_000):
        a, b = rand_invertible(rng), rand_invertible(rng)
        if hyp.phi_map(a.star(b)) != hyp.motion_compose(hyp.phi_map(a), hyp.phi_map(b)):
            bad_hom += 1
    bad_kernel = 0
    for rng in rngs(100, SEED + 1):
        s = rand_nonzero(rng)
        bad_kernel += hyp.phi_map(Matrix.diagonal([s, s])) != IDENTITY_MOTION
    bad_nonscalar = 0
    for rng in rngs(1_000, SEED + 2):
        bad_nonscalar += hyp.phi_map(rand_non_scalar_invertible(rng)) == IDENTITY_MOTION
    criterion["detail"] = f"hom={bad_hom} kernel={bad_kernel} non-scalar={bad_nonscalar}"
    assert bad_hom == bad_kernel == bad_nonscalar == 0


def test_c08_rotations_exact(criterion):
    criterion["label"] = "C8a c^2-s^2=1 after composition, psi(xy)=psi(x)psi(y), b(Ru,Rv)=b(u,v), exact"
    bad = 0
    for rng in rngs(10_000):
        x, y = rand_nonzero(rng), rand_nonzero(rng)
        r = hyp.rot_compose(hyp.psi(x), hyp.psi(y))
        ok = r.c * r.c - r.s * r.s == 1 and hyp.psi(x * y) == r
        u, v = rand_vec(rng), rand_vec(rng)
        ok &= hyp.minkowski_form(hyp.rot_apply(r, u), hyp.rot_apply(r, v)) == hyp.minkowski_form(u, v)
        bad += not ok
    criterion["detail"] = f"violations={bad}"
    assert bad == 0


def test_c08_phi_one_parameter_group(criterion):
    criterion["label"] = "C8b phi(s)phi(t)=phi(s+t) within 1e-12 relative, 1,000 pairs |s|,|t|<=5"
    worst = 0.0
    bad = []
    for i, rng in enumerate(rngs(1_000)):
        s, t = rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)
        lhs = hyp.rot_compose(hyp.phi_real(s), hyp.phi_real(t))
        rhs = hyp.phi_real(s + t)
        for a, b in ((lhs.c, rhs.c), (lhs.s, rhs.s)):
            worst = max(worst, abs(a - b) / max(1.0, abs(a), abs(b)))
        if not (FLOAT.eq(lhs.c, rhs.c) and FLOAT.eq(lhs.s, rhs.s)):
            bad.append((i, s, t))
    criterion["detail"] = f"violations={len(bad)} worst relative error={worst:.2e}"
    assert not bad, bad[:5]


def test_c09_rho(criterion):
    criterion["label"] = "C9  rho multiplicative x10,000, injective, raw-reading witness pinned"
    bad_hom = bad_inj = 0
    images = {}
    for rng in rngs(10_000):
        a, b = rand_invertible(rng), rand_invertible(rng)
        ra, rb = hyp.rho(a), hyp.rho(b)
        bad_hom += hyp.rho(a.star(b)) != ra.matmul(rb)
        for m, rm in ((a, ra), (b, rb)):
            seen = images.setdefault(rm.entries, m)
            bad_inj += seen != m
    w = rho_raw_reading()
    pinned = Matrix([[-2, -2], [-2, -2]])
    criterion["detail"] = (f"hom={bad_hom} injectivity={bad_inj} over {len(images)} distinct "
                           f"images; witness A=B={format_value(w['A'])}")
    assert bad_hom == 0 and bad_inj == 0
    assert w["A"] == pinned and w["B"] == pinned
    assert w["raw rho(A@B)"] != w["raw rho(A) rho(B)"]
    assert w["rho(A@B)"] == w["rho(A) rho(B)"]


def test_c10_parser(criterion):
    criterion["label"] = "C10 parse/format identity x1,000; eval('A @ B')==star x1,000; golden JSON"
    bad_rt = bad_diff = 0
    for rng in rngs(1_000):
        v = rand_value(rng)
        back = evaluate(format_value(v))
        bad_rt += type(back) is not type(v) or back != v
        a, b = rand_matrix(rng), rand_matrix(rng)
        bad_diff += evaluate("A @ B", {"A": a, "B": b}) != a.star(b)
    runner = CliRunner()
    golden = sorted((Path(__file__).parent / "golden").glob("*.json"))
    bad_golden = []
    for path in golden:
        case = json.loads(path.read_text())
        res = runner.invoke(cli, case["args"])
        if res.exit_code != case["exit_code"] or res.stdout != case["stdout"]:
            bad_golden.append(path.stem)
    criterion["detail"] = (f"roundtrip={bad_rt} differential={bad_diff} "
                           f"golden {len(golden) - len(bad_golden)}/{len(golden)}")
    assert bad_rt == bad_diff == 0 and not bad_golden and golden


def test_c11_determinism(criterion):
    criterion["label"] = "C11 check phi-hom --seed 7 --trials 500 --json twice: only elapsed differs"
    runner = CliRunner()
    args = ["check", "phi-hom", "--seed", "7", "--trials", "500", "--json"]
    first, second = runner.invoke(cli, args), runner.invoke(cli, args)
    assert first.exit_code == second.exit_code == 0
    a, b = json.loads(first.stdout), json.loads(second.stdout)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
    # byte-level: blank out the elapsed field and compare the raw output
    strip = lambda s: s[:s.index('"elapsed_ms":')]  # noqa: E731
    assert strip(first.stdout) == strip(second.stdout)
    criterion["detail"] = "identical modulo elapsed_ms"
