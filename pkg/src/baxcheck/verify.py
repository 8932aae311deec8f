"""Verification suites: braided Yang-Baxter checks, the two auxiliary-identity
suites, and the transfer-matrix commutation harness.

The symbolic Yang-Baxter check works on cleared denominators: each R-matrix
is a polynomial matrix over one scalar polynomial, both sides of the identity
are assembled as polynomial matrices, and the residual is the cross-
multiplied difference.  Equality of rational-function matrices is thereby
decided with polynomial arithmetic only.

The randomized mode is exact polynomial identity testing: spectral variables
and free representation parameters are drawn as random rationals, both sides
are evaluated in exact arithmetic, and any pole or singular factor triggers a
resample.  Verdicts agree with the symbolic mode up to the usual vanishing-
at-a-random-point caveat, which the acceptance fixtures exercise both ways.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from typing import Sequence

from .exactnum import FieldMatrix, MultiPoly, PoleError, RatFunc, SingularMatrixError, canonical_vars
from .exactnum.scalar import format_scalar
from .baxter import H_closed, SpectralFn, f_eval, h_fun, rhat_cleared
from .ncalg import relations_for
from .report import VerifyReport
from .reps import Rep, check_relations

_M64 = (1 << 64) - 1


def _mix(z: int) -> int:
    """splitmix64 finalizer; keeps randomized reports reproducible across platforms."""
    z &= _M64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _M64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _M64
    return z ^ (z >> 31)


class DetRng:
    """Deterministic 64-bit generator (splitmix64)."""

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        return _mix(self.state)

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next_u64() % (hi - lo + 1)


def split_rng(seed: int, stream: int) -> DetRng:
    """Independent per-trial generator, so trial outcomes are order-free."""
    return DetRng(_mix(seed ^ (0xA076_1D64_78BD_642F * (stream + 1))))


def sample_fraction(rng: DetRng) -> Fraction:
    """Uniform numerator in [-10^6, 10^6] over a denominator in [1, 10^3]."""
    return Fraction(rng.randint(-(10**6), 10**6), rng.randint(1, 10**3))


# -- braided Yang-Baxter, symbolic ---------------------------------------------


def ybe_symbolic(rep: Rep, fn: SpectralFn, vars: tuple[str, str, str] = ("x", "y", "z")) -> VerifyReport:
    """Exact check of R1(x,y) R2(x,z) R1(y,z) = R2(y,z) R1(x,z) R2(x,y)."""
    if rep.n < 3:
        raise ValueError("the braided Yang-Baxter check needs generators at sites 1 and 2")
    x, y, z = vars
    t0 = time.monotonic()
    symbols = canonical_vars(set(rep.params) | {x, y, z})
    factors = {
        (1, x, y): None, (2, x, z): None, (1, y, z): None,
        (2, y, z): None, (1, x, z): None, (2, x, y): None,
    }
    for key in factors:
        site, u, w = key
        factors[key] = rhat_cleared(rep, site, fn, u, w, symbols)

    def side(seq):
        P, d = factors[seq[0]]
        for key in seq[1:]:
            P2, d2 = factors[key]
            P = P * P2
            d = d * d2
        return P, d

    lhs_P, lhs_d = side([(1, x, y), (2, x, z), (1, y, z)])
    rhs_P, rhs_d = side([(2, y, z), (1, x, z), (2, x, y)])
    worst = 0
    for i in range(rep.dim):
        for j in range(rep.dim):
            resid = lhs_P[i, j] * rhs_d - rhs_P[i, j] * lhs_d
            if not resid.is_zero:
                worst = max(worst, resid.num_terms())
    report = VerifyReport("ybe symbolic", mode={"kind": "symbolic", "vars": list(vars)})
    report.add_residual("ybe", worst)
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


# -- braided Yang-Baxter, randomized -------------------------------------------


def _numeric_rhat(sigma: FieldMatrix, f_uw: Fraction, f_wu: Fraction) -> FieldMatrix:
    d = sigma.rows
    one = Fraction(1)
    ident = FieldMatrix.identity(d, one)
    M = ident - sigma.scale(f_uw)
    N = ident - sigma.scale(f_wu)
    return M * N.inv()


def ybe_random(
    rep: Rep,
    fn: SpectralFn,
    trials: int = 20,
    seed: int = 0,
    vars: tuple[str, str, str] = ("x", "y", "z"),
) -> VerifyReport:
    """Randomized exact-evaluation check of the braided Yang-Baxter equation."""
    if rep.n < 3:
        raise ValueError("the braided Yang-Baxter check needs generators at sites 1 and 2")
    x, y, z = vars
    t0 = time.monotonic()
    f = f_eval(fn, "x", "y")
    free = list(rep.params)
    report = VerifyReport(
        "ybe randomized",
        mode={"kind": "randomized", "seed": seed, "trials": trials, "samples": [], "resamples": 0},
    )
    worst = 0
    for trial in range(trials):
        rng = split_rng(seed, trial)
        resamples = 0
        while True:
            if resamples > 100:
                report.status = "error"
                report.notes.append("measure-zero sampling failure: 100 consecutive poles")
                report.elapsed_ms = int((time.monotonic() - t0) * 1000)
                return report
            point = {name: sample_fraction(rng) for name in (x, y, z)}
            params = {name: sample_fraction(rng) for name in free}
            try:
                mats = rep.evaluate(params)
                fv = {}
                for u, w in ((x, y), (x, z), (y, z)):
                    fv[(u, w)] = f.eval({"x": point[u], "y": point[w]})
                    fv[(w, u)] = f.eval({"x": point[w], "y": point[u]})
                R = {
                    (site, u, w): _numeric_rhat(mats[site], fv[(u, w)], fv[(w, u)])
                    for site, u, w in (
                        (1, x, y), (2, x, z), (1, y, z), (2, y, z), (1, x, z), (2, x, y),
                    )
                }
            except (PoleError, SingularMatrixError, ZeroDivisionError):
                resamples += 1
                report.mode["resamples"] += 1
                continue
            break
        lhs = R[(1, x, y)] * R[(2, x, z)] * R[(1, y, z)]
        rhs = R[(2, y, z)] * R[(1, x, z)] * R[(2, x, y)]
        diff = lhs - rhs
        if not diff.is_zero:
            worst = max(worst, sum(1 for e in diff.entries if e))
        report.mode["samples"].append(
            {name: format_scalar(val) for name, val in list(point.items()) + list(params.items())}
        )
    report.add_residual("ybe", worst)
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


# -- auxiliary identity suites ----------------------------------------------------


def _vacuous(label: str, lhs: FieldMatrix, rhs: FieldMatrix, report: VerifyReport) -> None:
    if lhs.is_zero and rhs.is_zero:
        report.notes.append(f"{label}: vacuous (both sides identically zero)")


def _residual_size(m: FieldMatrix) -> int:
    return max((e.num_terms() for e in m.entries if e), default=0)


def _record(report: VerifyReport, label: str, lhs: FieldMatrix, rhs: FieldMatrix) -> None:
    diff = lhs - rhs
    report.add_residual(label, 0 if diff.is_zero else _residual_size(diff))
    _vacuous(label, lhs, rhs, report)


def lemma_suite_A(
    rep: Rep,
    alpha1,
    alpha2,
    b,
    c,
    zvar: str = "z",
    vvar: str = "v",
) -> VerifyReport:
    """The four auxiliary identities behind the three-parameter baxterisation.

    Works over Q(z, v, rep params) with a = alpha1*alpha2 != 0; the rep must
    first pass the three-parameter relations at (a, b, c).
    """
    alpha1, alpha2, b, c = Fraction(alpha1), Fraction(alpha2), Fraction(b), Fraction(c)
    a = alpha1 * alpha2
    if a == 0:
        raise ValueError("identity suite requires a = alpha1*alpha2 != 0")
    if rep.n < 3:
        raise ValueError("identity suite needs generators at sites 1 and 2")
    t0 = time.monotonic()
    report = VerifyReport("lemma suite A", mode={"kind": "symbolic", "a": format_scalar(a)})
    pre = check_relations(rep, relations_for("A", rep.n, {"a": a, "b": b, "c": c}), "precheck")
    if not pre.passed:
        report.status = "error"
        report.residuals = [(f"precheck {label}", size) for label, size in pre.residuals]
        report.notes.append("precondition failed: rep does not satisfy the relations")
        report.elapsed_ms = int((time.monotonic() - t0) * 1000)
        return report

    symbols = canonical_vars(set(rep.params) | {zvar, vvar})
    lift = lambda m: m.map_entries(lambda e: e.lift(symbols))
    s1 = lift(rep.matrices[1])
    s2 = lift(rep.matrices[2])
    H1z, H2z = lift(H_closed(rep, 1, zvar)), lift(H_closed(rep, 2, zvar))
    H1v, H2v = lift(H_closed(rep, 1, vvar)), lift(H_closed(rep, 2, vvar))
    zz, vv = RatFunc.var(symbols, zvar), RatFunc.var(symbols, vvar)
    hz = h_fun(a, b, c, zvar).lift(symbols)
    hv = h_fun(a, b, c, vvar).lift(symbols)
    M = s2 * s2 * s1 - s2 * s1 * s1  # the recurring cubic difference

    _record(report, "rel1a", (s2 * s2 * s2 * s1 * s1 - s2 * s2 * s1 * s1 * s1).scale(a), M.scale(-c))
    _record(report, "rel1b", (s1 * s1 * s2 * s2 * s2 - s1 * s1 * s1 * s2 * s2).scale(a), M.scale(-c))
    _record(report, "rel2a", s2 * H1z - H2z * s1, M.scale(zz * hz))
    _record(report, "rel2b", H1z * s2 - s1 * H2z, M.scale(zz * hz))
    _record(report, "rel4", H2v * H1z - H2z * H1v, M.scale((vv - zz) * hz * hv))
    rel5_lhs = s1 * H2v * H1z - H2z * H1v * s2
    rel5_rhs = (
        (s2 - s1).scale(RatFunc.const(symbols, a) / (zz * vv))
        + M.scale(((c * zz * vv - b * vv - a) / a) * hz * hv)
        + (H1v - H2v).scale(RatFunc.const(symbols, a) / (vv * (vv - zz) * hv))
        - (H1z - H2z).scale(RatFunc.const(symbols, a) / (zz * (vv - zz) * hz))
    )
    _record(report, "rel5", rel5_lhs, rel5_rhs)
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def lemma_suite_B(rep: Rep, zvar: str = "z", vvar: str = "v") -> VerifyReport:
    """The five auxiliary identities behind the parameter-free baxterisation."""
    if rep.n < 3:
        raise ValueError("identity suite needs generators at sites 1 and 2")
    t0 = time.monotonic()
    report = VerifyReport("lemma suite B", mode={"kind": "symbolic"})
    pre = check_relations(rep, relations_for("B", rep.n), "precheck")
    if not pre.passed:
        report.status = "error"
        report.residuals = [(f"precheck {label}", size) for label, size in pre.residuals]
        report.notes.append("precondition failed: rep does not satisfy the relations")
        report.elapsed_ms = int((time.monotonic() - t0) * 1000)
        return report

    symbols = canonical_vars(set(rep.params) | {zvar, vvar})
    lift = lambda m: m.map_entries(lambda e: e.lift(symbols))
    s1 = lift(rep.matrices[1])
    s2 = lift(rep.matrices[2])
    H1z, H2z = lift(H_closed(rep, 1, zvar)), lift(H_closed(rep, 2, zvar))
    H1v, H2v = lift(H_closed(rep, 1, vvar)), lift(H_closed(rep, 2, vvar))
    zz, vv = RatFunc.var(symbols, zvar), RatFunc.var(symbols, vvar)
    one = RatFunc.one(symbols)

    K = s2 * s2 * s1 - s2 * s1 * s1 + s1 * s1 - s2 * s2  # recurring combination

    _record(
        report,
        "relb1",
        s2 * s2 * s2 * s1 * s1 - s2 * s2 * s1 * s1 * s1,
        s2 * s2 * s2 - s1 * s1 * s1 + s1 * s1 - s2 * s2,
    )
    _record(
        report,
        "rel2b",
        s2 * H1z - H2z * s1,
        K.scale(zz / (zz - 1)) + (s2 - s1) + (H1z - H2z),
    )
    _record(
        report,
        "rel2bb",
        s1 * H2z - H1z * s2,
        (s2 - s1).scale(one / (zz - 1)) - H1z + H2z,
    )
    _record(
        report,
        "rel4b",
        H2v * H1z - H2z * H1v,
        (K - s1 + s2).scale((vv - zz) / ((vv - 1) * (zz - 1)))
        + (H2z - H1z).scale(one / (vv - 1))
        - (H2v - H1v).scale(one / (zz - 1)),
    )
    _record(
        report,
        "rel5b",
        s1 * H2v * H1z - H2z * H1v * s2,
        (s2 - s1).scale((vv * zz - zz + 1) / (zz * (zz - 1) * (vv - 1)))
        + K.scale(vv / ((vv - 1) * (zz - 1)))
        + (H1v - H2v).scale((vv - zz + 1) / ((vv - zz) * (zz - 1)))
        - (H1z - H2z).scale(vv / (zz * (vv - 1) * (vv - zz))),
    )
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


# -- transfer-matrix commutation harness ---------------------------------------------


def _flip_operator(d: int) -> FieldMatrix:
    one, zero = Fraction(1), Fraction(0)
    entries = [zero] * (d * d * d * d)
    for i in range(d):
        for j in range(d):
            entries[(i * d + j) * d * d + (j * d + i)] = one
    return FieldMatrix(d * d, d * d, entries)


def _embed_pair(op: FieldMatrix, d: int, legs: int, a: int, b: int) -> FieldMatrix:
    """Embed a two-site operator onto legs (a, b) of a `legs`-fold product space."""
    dim = d**legs
    zero = Fraction(0)
    out = [zero] * (dim * dim)

    def decode(idx: int) -> list[int]:
        digits = []
        for _ in range(legs):
            digits.append(idx % d)
            idx //= d
        return digits[::-1]

    for r in range(dim):
        dr = decode(r)
        for c in range(dim):
            dc = decode(c)
            if any(dr[k] != dc[k] for k in range(legs) if k not in (a, b)):
                continue
            out[r * dim + c] = op[dr[a] * d + dr[b], dc[a] * d + dc[b]]
    return FieldMatrix(dim, dim, out)


def choose_reference_point(fn: SpectralFn) -> Fraction:
    """y0 = 0 unless the spectral function has a pole there, else y0 = 1."""
    f = f_eval(fn, "x", "y")
    for y0 in (Fraction(0), Fraction(1)):
        # both orders f(x, y0) and f(y0, x) must stay finite as functions of x
        if _poly_substitute_const(f.den, "y", y0).is_zero:
            continue
        if _poly_substitute_const(f.den, "x", y0).is_zero:
            continue
        return y0
    raise ValueError("no admissible reference point among {0, 1}")


def _poly_substitute_const(p: MultiPoly, name: str, value: Fraction) -> MultiPoly:
    idx = p.vars.index(name)
    out = MultiPoly.zero(p.vars)
    for exp, coeff in p.terms.items():
        scaled = coeff * (value ** exp[idx])
        if not scaled:
            continue
        new = list(exp)
        new[idx] = 0
        key = tuple(new)
        acc = out.terms.get(key, Fraction(0)) + scaled
        if acc:
            out.terms[key] = acc
        else:
            out.terms.pop(key, None)
    return out


def transfer_commute(
    rep: Rep,
    i: int,
    fn: SpectralFn,
    L: int,
    points: Sequence[tuple[Fraction, Fraction]] | None = None,
    count: int = 5,
    seed: int = 0,
    corrupt: bool = False,
) -> VerifyReport:
    """Exact commutation of transfer matrices built from one two-site R-matrix.

    The rep dimension must be a perfect square d*d; the site-i matrix is read
    as an operator on V (x) V with dim V = d.  R(x) = P * Rhat(x, y0) with P
    the leg swap; the transfer matrix is the auxiliary-space partial trace of
    the ordered product of R across L sites.  The commutator [t(x1), t(x2)]
    is checked exactly at each rational point pair.  corrupt=True perturbs
    one entry of every Rhat as a negative control.
    """
    t0 = time.monotonic()
    if rep.params:
        raise ValueError("transfer harness needs a numeric representation (no free parameters)")
    d = math.isqrt(rep.dim)
    if d * d != rep.dim:
        raise ValueError(f"rep dimension {rep.dim} is not a perfect square")
    if L < 1:
        raise ValueError("chain length must be positive")
    y0 = choose_reference_point(fn)
    report = VerifyReport(
        "transfer commutation",
        mode={
            "kind": "randomized",
            "seed": seed,
            "L": L,
            "y0": format_scalar(y0),
            "corrupt": corrupt,
            "points": [],
        },
    )

    pre = ybe_random(rep, fn, trials=3, seed=_mix(seed ^ 0xB7E1))
    if not pre.passed:
        report.status = "error"
        report.notes.append("precondition failed: randomized Yang-Baxter check did not pass")
        report.elapsed_ms = int((time.monotonic() - t0) * 1000)
        return report

    sigma = rep.matrices[i].map_entries(lambda e: e.constant_value())
    f = f_eval(fn, "x", "y")
    P = _flip_operator(d)

    def transfer(xval: Fraction) -> FieldMatrix:
        f_xy0 = f.eval({"x": xval, "y": y0})
        f_y0x = f.eval({"x": y0, "y": xval})
        rhat = _numeric_rhat(sigma, f_xy0, f_y0x)
        if corrupt:
            # a weight-breaking entry; perturbations inside the conserved
            # blocks of this family do not disturb commutation
            rhat = FieldMatrix(rhat.rows, rhat.cols, list(rhat.entries))
            rhat.entries[1] = rhat.entries[1] + 1
        R = P * rhat
        legs = L + 1
        T = None
        for site in range(L, 0, -1):
            big = _embed_pair(R, d, legs, 0, site)
            T = big if T is None else T * big
        return T.partial_trace_first(d)

    if points is None:
        points = []
        rng = split_rng(seed, 0xF00D)
        attempts = 0
        while len(points) < count:
            if attempts > 100:
                report.status = "error"
                report.notes.append("measure-zero sampling failure while drawing point pairs")
                report.elapsed_ms = int((time.monotonic() - t0) * 1000)
                return report
            x1, x2 = sample_fraction(rng), sample_fraction(rng)
            try:
                _probe_rhat(sigma, f, x1, y0)
                _probe_rhat(sigma, f, x2, y0)
            except (PoleError, SingularMatrixError, ZeroDivisionError):
                attempts += 1
                continue
            attempts = 0
            points.append((x1, x2))

    for k, (x1, x2) in enumerate(points):
        try:
            t1, t2 = transfer(Fraction(x1)), transfer(Fraction(x2))
        except (PoleError, SingularMatrixError, ZeroDivisionError) as exc:
            raise PoleError(f"pole at supplied point pair ({x1}, {x2}); resample") from exc
        comm = t1 * t2 - t2 * t1
        size = 0 if comm.is_zero else sum(1 for e in comm.entries if e)
        report.add_residual(f"pair{k} [t({format_scalar(Fraction(x1))}), t({format_scalar(Fraction(x2))})]", size)
        report.mode["points"].append([format_scalar(Fraction(x1)), format_scalar(Fraction(x2))])
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def _probe_rhat(sigma: FieldMatrix, f: RatFunc, xval: Fraction, y0: Fraction) -> None:
    _numeric_rhat(sigma, f.eval({"x": xval, "y": y0}), f.eval({"x": y0, "y": xval}))
