"""Seeded property suites behind ``starmat check``.

Randomness comes from :class:`random.Random` (MT19937), seeded per trial
with ``(seed << 32) ^ trial`` so any failing trial can be replayed alone and
the report does not depend on execution order.  Rational entries are drawn
from ``SAMPLE``.
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from typing import Callable

from . import _kernels
from . import group as grp
from . import hyperbolic as hyp
from .codec import encode_value
from .expr import evaluate, format_value
from .matrix import Matrix, diag_split, hadamard, nonassoc_witness
from .report import CheckReport
from .scalars import RATIONAL

SAMPLE = tuple(Fraction(x) for x in (-2, -1, 0, Fraction(1, 2), 1, 2))
NONZERO = tuple(x for x in SAMPLE if x != 0)
EXHAUSTIVE_VALUES = (-1, 0, 1)
PHI_T_RANGE = 5.0

ONE = Matrix.identity(2)


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random((seed << 32) ^ trial)


# -- samplers ---------------------------------------------------------------

def rand_scalar(rng):
    return SAMPLE[rng.randrange(len(SAMPLE))]


def rand_nonzero(rng):
    return NONZERO[rng.randrange(len(NONZERO))]


def rand_matrix(rng, n: int = 2) -> Matrix:
    return Matrix._make(n, tuple(rand_scalar(rng) for _ in range(n * n)), RATIONAL)


def rand_invertible(rng) -> Matrix:
    """Random element of G: resample diagonal entries until nonzero."""
    x, p, q, y = (rand_scalar(rng) for _ in range(4))
    while x == 0:
        x = rand_scalar(rng)
    while y == 0:
        y = rand_scalar(rng)
    return Matrix._make(2, (x, p, q, y), RATIONAL)


def rand_non_scalar_invertible(rng) -> Matrix:
    while True:
        a = rand_invertible(rng)
        x, p, q, y = a.entries
        if not (x == y and p == 0 and q == 0):
            return a


def rand_singular(rng) -> Matrix:
    """Random nonzero 2x2 matrix with at least one zero diagonal entry."""
    while True:
        a = rand_matrix(rng)
        x, _, _, y = a.entries
        if (x == 0 or y == 0) and not a.is_zero():
            return a


def rand_h(rng) -> Matrix:
    return Matrix.diagonal([rand_nonzero(rng), rand_nonzero(rng)], RATIONAL)


def rand_n(rng) -> Matrix:
    return Matrix._make(2, (RATIONAL.one, rand_scalar(rng), rand_scalar(rng), RATIONAL.one),
                        RATIONAL)


def rand_vec(rng) -> hyp.Vec2:
    return hyp.Vec2(rand_scalar(rng), rand_scalar(rng))


def rand_value(rng):
    """Random scalar, vector, or matrix (n = 1..3) for round-trip tests."""
    kind = rng.randrange(3)
    if kind == 0:
        return Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    if kind == 1:
        return rand_vec(rng)
    return rand_matrix(rng, rng.randint(1, 3))


# -- properties -------------------------------------------------------------
# Each property takes an rng and returns None on success or a failure record.

def _fail(detail: str, **inputs) -> dict:
    return {"detail": detail, "inputs": {k: encode_value(v) for k, v in inputs.items()}}


def prop_assoc2(rng):
    a, b, c = rand_matrix(rng), rand_matrix(rng), rand_matrix(rng)
    if a.star(b).star(c) != a.star(b.star(c)):
        return _fail("(A*B)*C != A*(B*C)", A=a, B=b, C=c)


def prop_bilinear(rng):
    n = rng.randint(1, 4)
    a, b, c = rand_matrix(rng, n), rand_matrix(rng, n), rand_matrix(rng, n)
    s = rand_scalar(rng)
    if a.star(b + c) != a.star(b) + a.star(c):
        return _fail("left distributivity", A=a, B=b, C=c)
    if (b + c).star(a) != b.star(a) + c.star(a):
        return _fail("right distributivity", A=a, B=b, C=c)
    if not (a.scale(s).star(b) == a.star(b.scale(s)) == a.star(b).scale(s)):
        return _fail("scalar homogeneity", A=a, B=b, s=s)
    if n == 1 and a.star(b).entries[0] != a.entries[0] * b.entries[0]:
        return _fail("n=1 star is not scalar multiplication", A=a, B=b)


def prop_unit(rng):
    n = rng.randint(1, 4)
    a = rand_matrix(rng, n)
    one = Matrix.identity(n)
    if not (one.star(a) == a == a.star(one)):
        return _fail("1 is not a two-sided unit", A=a)


def prop_inverse(rng):
    a = rand_invertible(rng)
    b = grp.star_inverse(a)
    if not (a.star(b) == ONE == b.star(a)):
        return _fail("A * sinv(A) != 1", A=a, B=b)


def prop_zerodiv(rng):
    a = rand_singular(rng)
    b = grp.zero_divisor_witness(a)
    if b.is_zero() or not a.star(b).is_zero():
        return _fail("witness is zero or A*B != 0", A=a, B=b)


def prop_hn(rng):
    a = rand_invertible(rng)
    h, n_part = grp.hn_decompose(a)
    if not grp.in_h(h) or not grp.in_n(n_part):
        return _fail("factors outside H or N", A=a, h=h, n=n_part)
    if h.star(n_part) != a:
        return _fail("h*n != A", A=a, h=h, n=n_part)
    if grp.hn_decompose(h.star(n_part)) != (h, n_part):
        return _fail("factorization not unique", A=a)
    for m in (a, h, n_part, rand_h(rng), rand_n(rng)):
        if grp.in_h(m) and grp.in_n(m) and m != ONE:
            return _fail("H and N intersect outside 1", M=m)


def prop_conj(rng):
    a0, b = rand_h(rng), rand_n(rng)
    bt = grp.conjugate_n_part(a0, b)
    if not bt.is_unit_diagonal() or a0.star(b) != bt.star(a0):
        return _fail("A0*B != B~*A0", A0=a0, B=b, Bt=bt)


def prop_n_law(rng):
    b, c = rand_n(rng), rand_n(rng)
    expected = ONE + diag_split(b).offdiag + diag_split(c).offdiag
    if not (b.star(c) == expected == c.star(b)):
        return _fail("(1+B1)*(1+C1) != 1+B1+C1", B=b, C=c)


def prop_phi_hom(rng):
    cases = (
        ("G x G", rand_invertible(rng), rand_invertible(rng)),
        ("H x H", rand_h(rng), rand_h(rng)),
        ("N x N", rand_n(rng), rand_n(rng)),
        ("H x N", rand_h(rng), rand_n(rng)),
    )
    for label, a, b in cases:
        if hyp.phi_map(a.star(b)) != hyp.motion_compose(hyp.phi_map(a), hyp.phi_map(b)):
            return _fail(f"Phi(A*B) != Phi(A)Phi(B) on {label}", A=a, B=b)


def prop_phi_kernel(rng):
    s = rand_nonzero(rng)
    if hyp.phi_map(Matrix.diagonal([s, s])) != hyp.Motion.identity():
        return _fail("Phi(s1) is not the identity", s=s)
    a = rand_non_scalar_invertible(rng)
    if hyp.phi_map(a) == hyp.Motion.identity():
        return _fail("non-scalar A in the kernel", A=a)


def prop_rho_hom(rng):
    a, b = rand_invertible(rng), rand_invertible(rng)
    if hyp.rho(a.star(b)) != hyp.rho(a).matmul(hyp.rho(b)):
        return _fail("rho(A*B) != rho(A)rho(B)", A=a, B=b)


def prop_rho_faithful(rng):
    a, b = rand_invertible(rng), rand_invertible(rng)
    if (hyp.rho(a) == hyp.rho(b)) != (a == b):
        return _fail("rho identifies distinct matrices", A=a, B=b)
    if hyp.rho_recover(hyp.rho(a)) != a:
        return _fail("rho image does not determine A", A=a)


def prop_psi_iso(rng):
    x, y = rand_nonzero(rng), rand_nonzero(rng)
    px, py = hyp.psi(x), hyp.psi(y)
    pxy = hyp.rot_compose(px, py)
    if pxy.det() != 1:
        return _fail("composition left SO(1,1)", x=x, y=y)
    if hyp.psi(x * y) != pxy:
        return _fail("psi(xy) != psi(x)psi(y)", x=x, y=y)
    if hyp.psi_inv(px) != x or hyp.psi(hyp.psi_inv(pxy)) != pxy:
        return _fail("psi_inv is not a two-sided inverse", x=x, y=y)


def prop_alpha_hom(rng):
    a, b = rand_h(rng), rand_h(rng)
    if hyp.alpha(a.matmul(b)) != hyp.rot_compose(hyp.alpha(a), hyp.alpha(b)):
        return _fail("alpha(AB) != alpha(A)alpha(B)", A=a, B=b)
    r = hyp.psi(rand_nonzero(rng))
    if hyp.alpha(hyp.alpha_preimage(r)) != r:
        return _fail("alpha_preimage is not a section", R=r)


def prop_minkowski(rng):
    r = hyp.psi(rand_nonzero(rng))
    u, v = rand_vec(rng), rand_vec(rng)
    if hyp.minkowski_form(hyp.rot_apply(r, u), hyp.rot_apply(r, v)) != hyp.minkowski_form(u, v):
        return _fail("b(Ru, Rv) != b(u, v)", R=r, u=u, v=v)
    if r.det() != 1:
        return _fail("det R != 1", R=r)


def prop_beta_iso(rng):
    b, c = rand_n(rng), rand_n(rng)
    if hyp.beta(b.star(c)) != hyp.beta(b) + hyp.beta(c):
        return _fail("beta(B*C) != beta(B) + beta(C)", B=b, C=c)
    v = rand_vec(rng)
    if hyp.beta_inv(hyp.beta(b)) != b or hyp.beta(hyp.beta_inv(v)) != v:
        return _fail("beta_inv is not a two-sided inverse", B=b, v=v)


def prop_gamma_hom(rng):
    a, b = rand_h(rng), rand_h(rng)
    if hyp.gamma(a.matmul(b)) != hyp.gamma(a) * hyp.gamma(b):
        return _fail("gamma(AB) != gamma(A)gamma(B)", A=a, B=b)
    if hyp.gamma(Matrix.diagonal([1, rand_nonzero(rng)])) != 1:
        return _fail("diag(1, y) outside the kernel")


def prop_hadamard_diag(rng):
    n = rng.randint(1, 5)
    a, b = rand_matrix(rng, n), rand_matrix(rng, n)
    a0, a1 = diag_split(a)
    b0, b1 = diag_split(b)
    if diag_split(a.star(b)).diag != hadamard(a0, b0):
        return _fail("diag(A*B) != A0 o B0", A=a, B=b)
    if diag_split(a.matmul(b)).offdiag != (
            a1.matmul(b0) + a0.matmul(b1) + diag_split(a1.matmul(b1)).offdiag):
        return _fail("(AB)_1 decomposition", A=a, B=b)


def prop_parser_roundtrip(rng):
    v = rand_value(rng)
    if evaluate(format_value(v)) != v:
        return _fail("parse(format(v)) != v", v=v)
    a, b = rand_matrix(rng), rand_matrix(rng)
    if evaluate("A @ B", {"A": a, "B": b}) != a.star(b):
        return _fail("eval('A @ B') != star(A, B)", A=a, B=b)
    if evaluate(f"{format_value(a)} @ {format_value(b)}") != a.star(b):
        return _fail("literal '@' disagrees with star", A=a, B=b)


def prop_phi_real(rng):
    s = rng.uniform(-PHI_T_RANGE, PHI_T_RANGE)
    t = rng.uniform(-PHI_T_RANGE, PHI_T_RANGE)
    composed = hyp.rot_compose(hyp.phi_real(s), hyp.phi_real(t))
    if composed != hyp.phi_real(s + t):
        return _fail("phi(s)phi(t) != phi(s+t)", s=s, t=t)
    if not hyp.is_positive_component(composed):
        return _fail("phi(s)phi(t) left SO+(1,1)", s=s, t=t)
    if hyp.phi_real(s) != hyp.psi(math.exp(s)):
        return _fail("phi(s) != psi(e^s)", s=s)


def prop_so_plus(rng):
    def sample():
        return hyp.psi(rng.choice((-1.0, 1.0)) * math.exp(rng.uniform(-3.0, 3.0)))
    r, s = sample(), sample()
    pos = hyp.is_positive_component
    if pos(hyp.rot_compose(r, s)) != (pos(r) == pos(s)):
        return _fail("sign classes are not a quotient of order 2", R=r, S=s)


# name -> (function, backends it may run on)
PROPERTIES: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "assoc2": (prop_assoc2, ("rational",)),
    "nonassoc3": (None, ("rational",)),
    "bilinear": (prop_bilinear, ("rational",)),
    "unit": (prop_unit, ("rational",)),
    "inverse": (prop_inverse, ("rational",)),
    "zerodiv": (prop_zerodiv, ("rational",)),
    "hn": (prop_hn, ("rational",)),
    "conj": (prop_conj, ("rational",)),
    "n-law": (prop_n_law, ("rational",)),
    "phi-hom": (prop_phi_hom, ("rational",)),
    "phi-kernel": (prop_phi_kernel, ("rational",)),
    "rho-hom": (prop_rho_hom, ("rational",)),
    "rho-faithful": (prop_rho_faithful, ("rational",)),
    "psi-iso": (prop_psi_iso, ("rational",)),
    "alpha-hom": (prop_alpha_hom, ("rational",)),
    "minkowski": (prop_minkowski, ("rational",)),
    "beta-iso": (prop_beta_iso, ("rational",)),
    "gamma-hom": (prop_gamma_hom, ("rational",)),
    "hadamard-diag": (prop_hadamard_diag, ("rational",)),
    "parser-roundtrip": (prop_parser_roundtrip, ("rational",)),
    "phi-real": (prop_phi_real, ("float",)),
    "so-plus": (prop_so_plus, ("float",)),
}


def _nonassoc_exact() -> list[dict]:
    failures = []
    for n in range(3, 7):
        w = nonassoc_witness(n)
        if w.lhs == w.rhs:
            failures.append(_fail(f"bracketings agree for n={n}", A=w.a, B=w.b, C=w.c))
        if n == 3 and (w.lhs != Matrix.unit(3, 0, 1) or not w.rhs.is_zero()):
            failures.append(_fail("n=3 bracketings differ from E12 and 0", lhs=w.lhs, rhs=w.rhs))
    return failures


def _assoc2_exhaustive() -> tuple[int, list[dict]]:
    violations, checked, first = _kernels.assoc2_exhaustive(EXHAUSTIVE_VALUES)
    failures = []
    if violations:
        a, b, c = (Matrix.from_flat(2, m) for m in first)
        failures.append(_fail(f"{violations} violating triples; first shown", A=a, B=b, C=c))
    return checked, failures


def run_check(name: str, trials: int = 200, seed: int = 0, backend: str = "rational",
              exhaustive: bool = False) -> CheckReport:
    """Run one named property; raises ``ValueError`` for unknown names or backends."""
    if name not in PROPERTIES:
        raise ValueError(f"unknown property {name!r}; choose from {', '.join(PROPERTIES)}")
    fn, backends = PROPERTIES[name]
    if backend not in backends:
        raise ValueError(f"property {name!r} runs on backend(s) {', '.join(backends)}, "
                         f"not {backend!r}")
    if exhaustive and name != "assoc2":
        raise ValueError("--exhaustive is only defined for assoc2")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    start = time.perf_counter()
    report = CheckReport(name, backend, trials, seed)
    if name == "nonassoc3":
        report.mode, report.trials = "exact", 4
        report.failures = _nonassoc_exact()
    elif exhaustive:
        report.mode = "exhaustive"
        report.trials, report.failures = _assoc2_exhaustive()
    else:
        for i in range(trials):
            failure = fn(trial_rng(seed, i))
            if failure is not None:
                report.failures.append({"trial": i, **failure})
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report
