"""Free noncommutative algebra over the rational-function coefficient field.

Words are tuples of generator indices (1-based, indices below the strand
count n); the empty word is the identity.  An NCPoly maps words to nonzero
RatFunc coefficients over a fixed tuple of parameter symbols.  No rewriting
or normal forms happen here: the defining relations of the braid-like
algebras are stored as explicit LHS - RHS elements, and the quotient
structure is only ever probed through representations or through exact
free-algebra certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exactnum import RatFunc, canonical_vars

Word = tuple[int, ...]

ALGEBRAS = ("Braid", "Hecke", "A", "B", "C")


class NCPoly:
    """Noncommutative polynomial in generators sigma_1 .. sigma_(n-1)."""

    __slots__ = ("n", "symbols", "terms")

    def __init__(self, n: int, symbols: tuple[str, ...], terms: Mapping[Word, RatFunc] | None = None):
        if n < 2:
            raise ValueError("strand count must be at least 2")
        self.n = n
        self.symbols = tuple(symbols)
        clean: dict[Word, RatFunc] = {}
        if terms:
            for word, coeff in terms.items():
                if any(not (1 <= i <= n - 1) for i in word):
                    raise ValueError(f"word {word} uses indices outside 1..{n - 1}")
                if coeff.vars != self.symbols:
                    raise ValueError("coefficient field mismatch")
                if coeff:
                    clean[tuple(word)] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n: int, symbols: tuple[str, ...]) -> "NCPoly":
        return cls(n, symbols)

    @classmethod
    def one(cls, n: int, symbols: tuple[str, ...]) -> "NCPoly":
        return cls(n, symbols, {(): RatFunc.one(symbols)})

    @classmethod
    def gen(cls, n: int, i: int, symbols: tuple[str, ...]) -> "NCPoly":
        """The generator sigma_i as an element."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} outside 1..{n - 1}")
        return cls(n, symbols, {(i,): RatFunc.one(symbols)})

    # -- queries ---------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.n == other.n and self.symbols == other.symbols and self.terms == other.terms

    __hash__ = None

    def num_terms(self) -> int:
        return len(self.terms)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "NCPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched strand counts {self.n} vs {other.n}")
        if self.symbols != other.symbols:
            raise ValueError("mismatched coefficient fields")

    def _coerce_scalar(self, value) -> RatFunc:
        if isinstance(value, RatFunc):
            if value.vars != self.symbols:
                raise ValueError("coefficient field mismatch")
            return value
        if isinstance(value, (int, Fraction)):
            return RatFunc.const(self.symbols, value)
        raise TypeError(f"cannot scale NCPoly by {type(value).__name__}")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = out.get(word)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[word] = acc
            else:
                out.pop(word, None)
        res = NCPoly(self.n, self.symbols)
        res.terms = out
        return res

    def __neg__(self) -> "NCPoly":
        res = NCPoly(self.n, self.symbols)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Word, RatFunc] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                word = wa + wb
                prod = ca * cb
                acc = out.get(word)
                acc = prod if acc is None else acc + prod
                if acc:
                    out[word] = acc
                else:
                    out.pop(word, None)
        res = NCPoly(self.n, self.symbols)
        res.terms = out
        return res

    def __rmul__(self, other) -> "NCPoly":
        return self.scale(other)

    def scale(self, value) -> "NCPoly":
        coeff = self._coerce_scalar(value)
        if not coeff:
            return NCPoly(self.n, self.symbols)
        res = NCPoly(self.n, self.symbols)
        res.terms = {w: c * coeff for w, c in self.terms.items()}
        return res

    def __pow__(self, k: int) -> "NCPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = NCPoly.one(self.n, self.symbols)
        for _ in range(k):
            out = out * self
        return out

    # -- serialization ------------------------------------------------------------

    def sorted_words(self) -> list[Word]:
        """Deterministic order: by length, then lexicographic."""
        return sorted(self.terms, key=lambda w: (len(w), w))

    def serialize(self) -> list[list[str]]:
        return [["".join(map(str, w)), str(self.terms[w])] for w in self.sorted_words()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.sorted_words():
            word = "*".join(f"s{i}" for i in w) if w else "1"
            parts.append(f"({self.terms[w]})*{word}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def nc_commutator(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q - q * p


def flip(p: NCPoly, n: int | None = None) -> NCPoly:
    """Replace every index j by n - j letterwise; coefficients unchanged."""
    n = p.n if n is None else n
    if n != p.n:
        raise ValueError("flip strand count does not match the element")
    res = NCPoly(p.n, p.symbols)
    res.terms = {tuple(n - j for j in w): c for w, c in p.terms.items()}
    return res


@dataclass
class RelationSet:
    """Defining relations of one algebra, stored as LHS - RHS elements."""

    algebra: str
    n: int
    symbols: tuple[str, ...]
    params: dict
    elements: list[tuple[str, NCPoly]]

    def labels(self) -> list[str]:
        return [label for label, _ in self.elements]

    def __len__(self) -> int:
        return len(self.elements)


def _resolve_params(names: Iterable[str], given: Mapping | None) -> tuple[tuple[str, ...], dict[str, RatFunc]]:
    """Build the coefficient field and one RatFunc per named parameter.

    A value of None means the parameter stays symbolic (its own symbol);
    ints/Fractions are constants; a RatFunc value is used as-is (so e.g. the
    parameter c of A can be set to -q).
    """
    given = dict(given or {})
    unknown = set(given) - set(names)
    if unknown:
        raise ValueError(f"unexpected parameters {sorted(unknown)}")
    sym_names: set[str] = set()
    for name in names:
        value = given.get(name)
        if value is None:
            sym_names.add(name)
        elif isinstance(value, RatFunc):
            sym_names.update(value.vars)
    symbols = canonical_vars(sym_names)
    out: dict[str, RatFunc] = {}
    for name in names:
        value = given.get(name)
        if value is None:
            out[name] = RatFunc.var(symbols, name)
        elif isinstance(value, RatFunc):
            out[name] = value.lift(symbols)
        elif isinstance(value, (int, Fraction)):
            out[name] = RatFunc.const(symbols, value)
        else:
            raise ValueError(f"parameter {name}: expected rational, RatFunc, or None")
    return symbols, out


def relations_for(algebra: str, n: int, params: Mapping | None = None) -> RelationSet:
    """All defining relations of one of the five algebras at strand count n.

    Locality pairs appear for every |i - j| > 1; the per-site families run
    over i = 1 .. n-2, and the Hecke quadratic over i = 1 .. n-1.
    """
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}, expected one of {ALGEBRAS}")
    if n < 2:
        raise ValueError("n must be at least 2")

    if algebra == "A":
        symbols, vals = _resolve_params(("a", "b", "c"), params)
    elif algebra == "Hecke":
        symbols, vals = _resolve_params(("q",), params)
    else:
        symbols, vals = _resolve_params((), params)

    def gen(i: int) -> NCPoly:
        return NCPoly.gen(n, i, symbols)

    elements: list[tuple[str, NCPoly]] = []

    for i in range(1, n - 1):
        for j in range(i + 2, n):
            elements.append((f"locality({i},{j})", nc_commutator(gen(i), gen(j))))

    if algebra in ("Braid", "Hecke", "B", "C"):
        for i in range(1, n - 1):
            s, t = gen(i), gen(i + 1)
            elements.append((f"braid({i})", s * t * s - t * s * t))

    if algebra == "Hecke":
        q = vals["q"]
        for i in range(1, n):
            s = gen(i)
            one = NCPoly.one(n, symbols)
            elements.append((f"hecke({i})", (s - one) * (s - q * one)))

    if algebra == "A":
        a, b, c = vals["a"], vals["b"], vals["c"]
        for i in range(1, n - 1):
            s, t = gen(i), gen(i + 1)
            elements.append((f"aa1({i})", nc_commutator(s**2, t) - nc_commutator(s, t**2)))
            elements.append(
                (
                    f"aa2({i})",
                    nc_commutator(t * s, s + t)
                    - (a * (s**3 - t**3) + b * (s**2 - t**2) - c * (s - t)),
                )
            )
            elements.append((f"aa5({i})", a * (s * t**3 - s**3 * t) + b * (t**2 * s - t * s**2)))
            elements.append((f"aa3({i})", a * (t**3 * s - t * s**3) + b * (t**2 * s - t * s**2)))
            elements.append(
                (
                    f"aa4({i})",
                    (a * a) * (t**4 * s - t * s**4) - (b * b + a * c) * (t**2 * s - t * s**2),
                )
            )

    if algebra == "B":
        for i in range(1, n - 1):
            s, t = gen(i), gen(i + 1)
            elements.append((f"bb2({i})", s**2 * t - s * t**2 - (s**2 - t**2 + t - s)))
            elements.append(
                (f"bb3({i})", t**3 * s - t * s**3 - (t**2 * s - t * s**2 + t**3 - s**3 - t**2 + s**2))
            )
            elements.append(
                (f"bb4({i})", t**4 * s - t * s**4 - (t**2 * s - t * s**2 + t**4 - s**4 - t**2 + s**2))
            )

    if algebra == "C":
        # generators tau_j live on the same index alphabet; tau_j = sigma_(n-j)
        # is realized by flip, not by a second symbol table
        for i in range(1, n - 1):
            s, t = gen(i), gen(i + 1)
            elements.append((f"cc2({i})", t**2 * s - t * s**2 - (t**2 - s**2 + s - t)))
            elements.append(
                (f"cc3({i})", s**3 * t - s * t**3 - (s**2 * t - s * t**2 + s**3 - t**3 - s**2 + t**2))
            )
            elements.append(
                (f"cc4({i})", s**4 * t - s * t**4 - (s**2 * t - s * t**2 + s**4 - t**4 - s**2 + t**2))
            )

    return RelationSet(algebra=algebra, n=n, symbols=symbols, params=dict(params or {}), elements=elements)


PROP1_TERMS = ("r3", "commutator", "left_r1", "right_r1", "b_r1")


def prop1_certificate(omit_term: str | None = None) -> tuple[NCPoly, bool]:
    """Free-algebra certificate that the fifth cubic relation of A is implied.

    Runs at n = 3 with fully symbolic a, b, c.  Forms the combination
    (a-2)*R3 + a*[s1 - s2, R2] + a*(2 s1 + s2)*R1 + a*R1*(s1 + 2 s2) + a*b*R1
    (R1, R2, R3 the aa1/aa2/aa3 elements; R1 enters with the orientation that
    makes the identity exact) and subtracts (a-2)*R5; the certificate passes
    iff the residual is the zero element.  omit_term drops one of the five
    summands (mutation control: the residual must then be nonzero).
    """
    if omit_term is not None and omit_term not in PROP1_TERMS:
        raise ValueError(f"unknown term {omit_term!r}, expected one of {PROP1_TERMS}")
    rels = relations_for("A", 3)
    by_label = {label.split("(")[0]: el for label, el in rels.elements}
    r1, r2, r3, r5 = by_label["aa1"], by_label["aa2"], by_label["aa3"], by_label["aa5"]
    symbols = rels.symbols
    a = RatFunc.var(symbols, "a")
    b = RatFunc.var(symbols, "b")
    s1 = NCPoly.gen(3, 1, symbols)
    s2 = NCPoly.gen(3, 2, symbols)

    terms = {
        "r3": (a - 2) * r3,
        "commutator": a * nc_commutator(s1 - s2, r2),
        "left_r1": ((2 * s1 + s2) * r1).scale(a),
        "right_r1": (r1 * (s1 + 2 * s2)).scale(a),
        "b_r1": (a * b) * r1,
    }
    combination = NCPoly.zero(3, symbols)
    for name, term in terms.items():
        if name == omit_term:
            continue
        combination = combination + term
    residual = combination - (a - 2) * r5
    return residual, residual.is_zero
