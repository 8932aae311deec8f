"""Spectral functions and the baxterised R-matrix constructor.

Rhat_i(x, y) = (1 - f(x, y) s_i) (1 - f(y, x) s_i)^(-1) over the exact
rational-function field.  The inverse is an exact matrix inverse, which
agrees with the formal geometric series wherever that series makes sense;
the series/closed-form agreement is checked by tests, never used as the
construction mechanism.

Both a canonical form (RatFunc entries) and a cleared form (one polynomial
matrix over a single scalar denominator) are provided; the cleared form is
what the heavy verification suites use, since identity checks can then
cross-multiply denominators and compare polynomials, with no gcd work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import FieldMatrix, MultiPoly, PoleError, RatFunc, SingularMatrixError, canonical_vars
from .exactnum.scalar import format_scalar, parse_scalar
from .reps import Rep

SPECTRAL_CASES = ("i", "ii", "iii", "hecke")


@dataclass(frozen=True)
class SpectralFn:
    """One admissible spectral-function family.

    case "i":   f(x, y) = (a1*x + a2*y + b*x*y) / (1 + c*x*y), a1 - a2 = +-1;
                the derived product a = a1*a2 is exposed read-only.
    case "ii":  f(x, y) = (1 + y) * x / (1 + x)
    case "iii": f(x, y) = (1 + x) * y / (1 + y)
    case "hecke": f(x, y) = -x / y.  The sign matches the quadratic
                normalization (s - 1)(s - q) = 0 used by the Hecke relation
                set: with it the braided Yang-Baxter equation, regularity,
                and the transfer harness all hold; with +x/y all three
                provably fail on faithful Hecke representations.
    """

    case: str
    alpha1: Fraction | None = None
    alpha2: Fraction | None = None
    b: Fraction | None = None
    c: Fraction | None = None

    @classmethod
    def case_i(cls, alpha1, alpha2, b, c) -> "SpectralFn":
        alpha1, alpha2, b, c = (Fraction(v) for v in (alpha1, alpha2, b, c))
        if alpha1 - alpha2 not in (1, -1):
            raise ValueError("case i requires alpha1 - alpha2 in {1, -1}")
        return cls("i", alpha1, alpha2, b, c)

    @classmethod
    def case_ii(cls) -> "SpectralFn":
        return cls("ii")

    @classmethod
    def case_iii(cls) -> "SpectralFn":
        return cls("iii")

    @classmethod
    def hecke_ratio(cls) -> "SpectralFn":
        return cls("hecke")

    @property
    def a(self) -> Fraction:
        if self.case != "i":
            raise ValueError("only case i carries the derived parameter a")
        return self.alpha1 * self.alpha2

    def to_record(self) -> dict:
        if self.case == "i":
            return {
                "case": "i",
                "alpha1": format_scalar(self.alpha1),
                "alpha2": format_scalar(self.alpha2),
                "b": format_scalar(self.b),
                "c": format_scalar(self.c),
            }
        return {"case": self.case}

    @classmethod
    def from_record(cls, record: dict) -> "SpectralFn":
        record = dict(record)
        case = record.pop("case", None)
        if case == "i":
            try:
                args = {k: parse_scalar(record.pop(k)) for k in ("alpha1", "alpha2", "b", "c")}
            except KeyError as exc:
                raise ValueError(f"case i needs alpha1, alpha2, b, c: missing {exc}") from exc
            if record:
                raise ValueError(f"unexpected spectral-fn fields {sorted(record)}")
            return cls.case_i(**args)
        if record:
            raise ValueError(f"unexpected spectral-fn fields {sorted(record)}")
        if case in ("ii", "iii", "hecke"):
            return cls(case)
        raise ValueError(f"unknown spectral-fn case {case!r}")


def f_eval(fn: SpectralFn, u: str = "x", v: str = "y") -> RatFunc:
    """The spectral function as a canonical rational function of (u, v)."""
    if u == v:
        raise ValueError("spectral arguments must be distinct symbols")
    vars = canonical_vars({u, v})
    uu, vv = RatFunc.var(vars, u), RatFunc.var(vars, v)
    if fn.case == "i":
        num = fn.alpha1 * uu + fn.alpha2 * vv + fn.b * uu * vv
        den = 1 + fn.c * uu * vv
        return num / den
    if fn.case == "ii":
        return (1 + vv) * uu / (1 + uu)
    if fn.case == "iii":
        return (1 + uu) * vv / (1 + vv)
    if fn.case == "hecke":
        return -uu / vv
    raise ValueError(f"unknown spectral-fn case {fn.case!r}")


@dataclass
class RMatrixSym:
    """A baxterised R-matrix over Q(vars + rep params)."""

    rep: Rep
    site: int
    vars: tuple[str, str]
    value: FieldMatrix  # RatFunc entries


def _site_matrix(rep: Rep, i: int) -> FieldMatrix:
    if i not in rep.matrices:
        raise ValueError(f"site {i} outside 1..{rep.n - 1}")
    return rep.matrices[i]


def cleared_sigma(rep: Rep, i: int, symbols: tuple[str, ...]) -> tuple[FieldMatrix, MultiPoly]:
    """(S, s0) with polynomial S and scalar s0 such that sigma_i = S / s0."""
    from .exactnum import poly_gcd

    sigma = _site_matrix(rep, i).map_entries(lambda e: e.lift(symbols))
    s0 = MultiPoly.const(symbols, 1)
    for e in sigma.entries:
        if e.den.is_constant():
            s0 = s0 * e.den
            continue
        g = poly_gcd(s0, e.den)
        s0 = s0.divexact(g) * e.den
    S = sigma.map_entries(lambda e: e.num * s0.divexact(e.den))
    return S, s0


def rhat_cleared(
    rep: Rep, i: int, fn: SpectralFn, u: str, w: str, symbols: tuple[str, ...]
) -> tuple[FieldMatrix, MultiPoly]:
    """Rhat_i(u, w) as (P, d): a polynomial matrix over a scalar denominator.

    P/d equals (1 - f(u,w) sigma_i)(1 - f(w,u) sigma_i)^(-1); d is the
    determinant-bearing scalar, identically zero exactly when the inverse
    does not exist, which raises SingularMatrixError.
    """
    f_uw = f_eval(fn, u, w).lift(symbols)
    f_wu = f_eval(fn, w, u).lift(symbols)
    S, s0 = cleared_sigma(rep, i, symbols)
    d = rep.dim
    ident = FieldMatrix.identity(d, MultiPoly.const(symbols, 1))
    A = ident.scale(f_uw.den * s0) - S.scale(f_uw.num)
    B = ident.scale(f_wu.den * s0) - S.scale(f_wu.num)
    adj, det = B.adjugate_det()
    if det.is_zero:
        raise SingularMatrixError(
            f"R-matrix factor is identically singular: det(1 - f({w},{u})*sigma_{i}) = 0",
            determinant=det,
        )
    P = (A * adj).scale(f_wu.den * s0)
    delta = f_uw.den * s0 * det
    return P, delta


def build_R(rep: Rep, i: int, fn: SpectralFn, vars: tuple[str, str] = ("x", "y")) -> RMatrixSym:
    """The baxterised R-matrix with canonical rational-function entries."""
    u, w = vars
    symbols = canonical_vars(set(rep.params) | {u, w})
    P, delta = rhat_cleared(rep, i, fn, u, w, symbols)
    drf = RatFunc(delta)
    value = P.map_entries(lambda e: RatFunc(e) / drf)
    return RMatrixSym(rep=rep, site=i, vars=(u, w), value=value)


def check_regularity(R: RMatrixSym) -> bool:
    """Rhat(x, x) = identity, after cancelling the removable x = y locus."""
    u, w = R.vars
    try:
        at_diag = R.value.map_entries(lambda e: e.rename({w: u}))
    except PoleError as exc:
        raise SingularMatrixError(f"R-matrix singular on the diagonal {w} = {u}") from exc
    return at_diag.is_identity()


def check_unitarity(rep: Rep, i: int, fn: SpectralFn, vars: tuple[str, str] = ("x", "y")) -> bool:
    """Rhat(x, y) * Rhat(y, x) = identity, checked on cleared denominators."""
    u, w = vars
    symbols = canonical_vars(set(rep.params) | {u, w})
    P1, d1 = rhat_cleared(rep, i, fn, u, w, symbols)
    P2, d2 = rhat_cleared(rep, i, fn, w, u, symbols)
    prod = P1 * P2
    scale = d1 * d2
    d = rep.dim
    for r in range(d):
        for c in range(d):
            want = scale if r == c else MultiPoly.zero(symbols)
            if prod[r, c] != want:
                return False
    return True


# -- H-operator utilities -------------------------------------------------------


def H_closed(rep: Rep, i: int, z: str = "z") -> FieldMatrix:
    """H_i(z) = sigma_i (1 - z sigma_i)^(-1) over Q(z + rep params)."""
    symbols = canonical_vars(set(rep.params) | {z})
    sigma = _site_matrix(rep, i).map_entries(lambda e: e.lift(symbols))
    zz = RatFunc.var(symbols, z)
    ident = FieldMatrix.identity(rep.dim, RatFunc.one(symbols))
    return sigma * (ident - sigma.scale(zz)).inv()


def H_series(rep: Rep, i: int, order: int, z: str = "z") -> FieldMatrix:
    """Truncated series sum_{l=0..order} sigma_i^(l+1) z^l."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    symbols = canonical_vars(set(rep.params) | {z})
    sigma = _site_matrix(rep, i).map_entries(lambda e: e.lift(symbols))
    zz = RatFunc.var(symbols, z)
    acc = FieldMatrix.zeros(rep.dim, rep.dim, RatFunc.zero(symbols))
    power = sigma
    zpow = RatFunc.one(symbols)
    for _ in range(order + 1):
        acc = acc + power.scale(zpow)
        power = power * sigma
        zpow = zpow * zz
    return acc


def h_fun(a, b, c, z: str = "z") -> RatFunc:
    """h(z) = a / (c z^2 - b z - a); requires a != 0."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise ValueError("h undefined: the construction needs a != 0")
    vars = canonical_vars({z})
    zz = RatFunc.var(vars, z)
    return RatFunc.const(vars, a) / (c * zz * zz - b * zz - a)


def series_agreement_order(rep: Rep, i: int, order: int, z: str = "z") -> int | None:
    """Smallest z-valuation over entries of H_closed - H_series(order).

    None means the difference is identically zero (agreement to all orders).
    The valuation of a rational function is val(num) - val(den).
    """
    diff = H_closed(rep, i, z) - H_series(rep, i, order, z)
    best: int | None = None
    for e in diff.entries:
        if e.is_zero:
            continue
        val = e.num.valuation_in(z) - (e.den.valuation_in(z) or 0)
        best = val if best is None else min(best, val)
    return best
