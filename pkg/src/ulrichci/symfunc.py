"""Monomial symmetric polynomials and the degree-<=4 symmetric basis.

The twelve-element basis, in the fixed order used throughout the package, is

    m4, m31, m22, m211, m1111, m3, m21, m111, m2, m11, m1, 1

where m_lambda(s) is the sum of all distinct monomials in x1..xs whose
exponent multiset is the partition lambda (zero when lambda has more parts
than variables).  Every symmetric polynomial of degree at most 4 in s >= 4
variables is a unique rational combination of these.

Two independent expansion algorithms are provided: direct coefficient
peeling, and restriction to four variables followed by a triangular solve.
They form an oracle pair for each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .exact_arith import binom_int
from .polyring import MultiPoly
from .report import FAIL, PASS, CheckResult

#: Basis partitions in expansion order (a1..a12).
BASIS: tuple[tuple[int, ...], ...] = (
    (4,),
    (3, 1),
    (2, 2),
    (2, 1, 1),
    (1, 1, 1, 1),
    (3,),
    (2, 1),
    (1, 1, 1),
    (2,),
    (1, 1),
    (1,),
    (),
)

#: Basis indices grouped by total degree, highest first (peeling order).
_DEGREE_GROUPS = ((0, 1, 2, 3, 4), (5, 6, 7), (8, 9), (10,), (11,))


class NotSymmetric(ValueError):
    """Raised when an expansion is requested for a non-symmetric polynomial."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers; () is the empty partition."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be >= 1, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)


def iter_arrangements(exps: Sequence[int], s: int) -> Iterator[tuple[int, ...]]:
    """Yield every distinct length-s tuple whose nonzero entries realize exps.

    exps is a multiset of exponents (zeros allowed and ignored); positions not
    assigned a nonzero value are zero.  Arrangements of equal values are not
    repeated: positions for each distinct value are chosen by combinations.
    """
    nonzero = sorted((e for e in exps if e), reverse=True)
    if len(nonzero) > s:
        return
    items: list[tuple[int, int]] = []
    for e in nonzero:
        if items and items[-1][0] == e:
            items[-1] = (e, items[-1][1] + 1)
        else:
            items.append((e, 1))
    out = [0] * s

    def rec(positions: tuple[int, ...], idx: int) -> Iterator[tuple[int, ...]]:
        if idx == len(items):
            yield tuple(out)
            return
        value, count = items[idx]
        for chosen in combinations(positions, count):
            chosen_set = set(chosen)
            for p in chosen:
                out[p] = value
            yield from rec(tuple(p for p in positions if p not in chosen_set), idx + 1)
            for p in chosen:
                out[p] = 0

    yield from rec(tuple(range(s)), 0)


def monomial_sym(lam, s: int) -> MultiPoly:
    """The monomial symmetric polynomial m_lambda in s variables.

    Returns the zero polynomial when lambda has more parts than variables;
    the empty partition gives the constant 1.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    parts = tuple(lam.parts) if isinstance(lam, Partition) else tuple(lam)
    Partition(parts)  # validates shape
    if len(parts) > s:
        return MultiPoly.zero(s)
    one = Fraction(1)
    return MultiPoly._from_trusted(
        s, {arr: one for arr in iter_arrangements(parts, s)}
    )


@dataclass(frozen=True)
class SymExpansion:
    """Coefficients a1..a12 of a symmetric polynomial over the fixed basis.

    Only defined for s >= 4: in fewer variables the basis degenerates
    (for instance m1111(3) = 0) and the coefficients stop being unique.
    """

    s: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.s < 4:
            raise ValueError(f"SymExpansion needs s >= 4, got s={self.s}")
        if len(self.coeffs) != 12:
            raise ValueError(f"expected 12 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def reconstruct(self) -> MultiPoly:
        total = MultiPoly.zero(self.s)
        for coeff, lam in zip(self.coeffs, BASIS):
            if coeff:
                total = total + monomial_sym(lam, self.s).scale(coeff)
        return total


def _require_expandable(G: MultiPoly) -> None:
    if G.degree() > 4:
        raise ValueError(f"polynomial has degree {G.degree()} > 4")
    if not G.is_symmetric():
        raise NotSymmetric("polynomial is not symmetric")


def expand_direct(G: MultiPoly) -> SymExpansion:
    """Expand a symmetric polynomial of degree <= 4 by coefficient peeling.

    Working down from degree 4, each basis coefficient is read off the
    leading monomial of its partition (x1^4 for m4, x1^3*x2 for m31, ...),
    the matched combination is subtracted, and the residual after the
    constant layer must vanish exactly.
    """
    s = G.nvars
    if s < 4:
        raise ValueError(f"expansion needs s >= 4 variables, got {s}")
    _require_expandable(G)
    remainder = G
    coeffs: list[Fraction] = [Fraction(0)] * 12
    for group in _DEGREE_GROUPS:
        layer: list[tuple[int, Fraction]] = []
        for idx in group:
            lam = BASIS[idx]
            lead = tuple(lam) + (0,) * (s - len(lam))
            layer.append((idx, remainder.coefficient(lead)))
        for idx, coeff in layer:
            coeffs[idx] = coeff
            if coeff:
                remainder = remainder - monomial_sym(BASIS[idx], s).scale(coeff)
    if not remainder.is_zero:
        raise ValueError(
            "nonzero residual after peeling; polynomial is outside the basis span"
        )
    return SymExpansion(s, tuple(coeffs))


def restriction_coefficients(
    coeffs: Sequence[Fraction], s: int
) -> tuple[Fraction, ...]:
    """Map basis coefficients in s variables to those after x5=...=xs=1.

    Given G = sum a_i basis_i(s), the restriction G(x1..x4, 1, ..., 1) equals
    sum b_i basis_i(4) with the b_i returned here.  The map is triangular:
    degree-4 coefficients pass through unchanged and each lower layer picks up
    binomial-weighted contributions from higher ones.
    """
    if s < 4:
        raise ValueError(f"restriction map needs s >= 4, got {s}")
    a = [Fraction(c) for c in coeffs]
    if len(a) != 12:
        raise ValueError(f"expected 12 coefficients, got {len(a)}")
    t = s - 4
    c2 = binom_int(t, 2)
    c3 = binom_int(t, 3)
    c4 = binom_int(t, 4)
    a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12 = a
    return (
        a1,
        a2,
        a3,
        a4,
        a5,
        a6 + t * a2,
        a7 + t * a4,
        a8 + t * a5,
        a9 + t * (a3 + a7) + c2 * a4,
        a10 + t * (a4 + a8) + c2 * a5,
        a11 + t * (a2 + a7 + a10) + c2 * (2 * a4 + a8) + c3 * a5,
        a12
        + t * (a1 + a6 + a9 + a11)
        + c2 * (2 * a2 + a3 + 2 * a7 + a10)
        + c3 * (3 * a4 + a8)
        + c4 * a5,
    )


def expand_via_restriction(G: MultiPoly) -> SymExpansion:
    """Expand by restricting to four variables and solving triangularly.

    Substitutes x5 = ... = xs = 1, expands the four-variable restriction
    directly, and inverts the restriction map layer by layer (for instance
    a6 = b6 - (s-4) a2).  For s = 4 there is nothing to substitute and this
    is expand_direct.  Independent of expand_direct on the input itself,
    which makes the two algorithms an oracle pair.
    """
    s = G.nvars
    if s < 4:
        raise ValueError(f"expansion needs s >= 4 variables, got {s}")
    if s == 4:
        return expand_direct(G)
    _require_expandable(G)
    b = expand_direct(G.substitute_ones(4)).coeffs
    t = s - 4
    c2 = binom_int(t, 2)
    c3 = binom_int(t, 3)
    c4 = binom_int(t, 4)
    a = [Fraction(0)] * 12
    a[0], a[1], a[2], a[3], a[4] = b[0], b[1], b[2], b[3], b[4]
    a[5] = b[5] - t * a[1]
    a[6] = b[6] - t * a[3]
    a[7] = b[7] - t * a[4]
    a[8] = b[8] - t * (a[2] + a[6]) - c2 * a[3]
    a[9] = b[9] - t * (a[3] + a[7]) - c2 * a[4]
    a[10] = b[10] - t * (a[1] + a[6] + a[9]) - c2 * (2 * a[3] + a[7]) - c3 * a[4]
    a[11] = (
        b[11]
        - t * (a[0] + a[5] + a[8] + a[10])
        - c2 * (2 * a[1] + a[2] + 2 * a[6] + a[9])
        - c3 * (3 * a[3] + a[7])
        - c4 * a[4]
    )
    expansion = SymExpansion(s, tuple(a))
    if expansion.reconstruct() != G:
        raise ValueError(
            "restriction solve does not reconstruct the input; "
            "polynomial is outside the basis span"
        )
    return expansion


# -- identity tables ---------------------------------------------------------

def _m(lam, s):
    return monomial_sym(lam, s)


def verify_tf2_table(s: int) -> list[CheckResult]:
    """Check the thirteen product identities among monomial symmetric polynomials.

    Both sides of each identity are built independently as polynomials in s
    variables and compared exactly.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    m1 = _m((1,), s)
    m2 = _m((2,), s)
    m3 = _m((3,), s)
    m4 = _m((4,), s)
    m11 = _m((1, 1), s)
    m21 = _m((2, 1), s)
    m111 = _m((1, 1, 1), s)
    m31 = _m((3, 1), s)
    m22 = _m((2, 2), s)
    m211 = _m((2, 1, 1), s)
    m1111 = _m((1, 1, 1, 1), s)
    table = [
        ("1", m1 * m1, m2 + 2 * m11),
        ("2", m1 * m1 * m1, m3 + 3 * m21 + 6 * m111),
        ("3", m1 * m1 * m1 * m1, m4 + 4 * m31 + 6 * m22 + 12 * m211 + 24 * m1111),
        ("4", m1 * m11, m21 + 3 * m111),
        ("5", m1 * m1 * m11, m31 + 2 * m22 + 5 * m211 + 12 * m1111),
        ("6", m11 * m11, m22 + 2 * m211 + 6 * m1111),
        ("7", m1 * m3, m4 + m31),
        ("8", m1 * m21, m31 + 2 * m22 + 2 * m211),
        ("9", m1 * m111, m211 + 4 * m1111),
        ("10", m1 * m2, m3 + m21),
        ("11", m1 * m1 * m2, m4 + 2 * m31 + 2 * m22 + 2 * m211),
        ("12", m2 * m2, m4 + 2 * m22),
        ("13", m2 * m11, m31 + m211),
    ]
    results = []
    for label, lhs, rhs in table:
        ok = lhs == rhs
        results.append(
            CheckResult(
                lemma=f"tf2({label})",
                parameters={"s": s},
                status=PASS if ok else FAIL,
                witness=None if ok else {"difference": (lhs - rhs).to_string()},
            )
        )
    return results


def substitution_identities(s: int) -> list[CheckResult]:
    """Check the substitution formulas behind the restriction map.

    Each formula states what a basis element in s variables becomes after
    setting x5 = ... = xs = 1, as an exact identity in four variables.
    """
    if s < 5:
        raise ValueError(f"substitution identities need s >= 5, got {s}")
    t = s - 4
    one4 = MultiPoly.const(4, 1)
    checks: list[tuple[str, MultiPoly, MultiPoly]] = []
    for i in range(1, 5):
        checks.append((f"m{i}", _m((i,), s).substitute_ones(4), _m((i,), 4) + t))
    for i in range(1, 5):
        rhs = MultiPoly.zero(4)
        for j in range(i + 1):
            rhs = rhs + _m((1,) * (i - j), 4).scale(binom_int(t, j))
        checks.append((f"m{'1' * i}", _m((1,) * i, s).substitute_ones(4), rhs))
    checks.append(
        (
            "m31",
            _m((3, 1), s).substitute_ones(4),
            _m((3, 1), 4) + t * _m((3,), 4) + t * _m((1,), 4) + t * (t - 1) * one4,
        )
    )
    checks.append(
        (
            "m22",
            _m((2, 2), s).substitute_ones(4),
            _m((2, 2), 4) + t * _m((2,), 4) + binom_int(t, 2) * one4,
        )
    )
    checks.append(
        (
            "m211",
            _m((2, 1, 1), s).substitute_ones(4),
            _m((2, 1, 1), 4)
            + t * _m((2, 1), 4)
            + binom_int(t, 2) * _m((2,), 4)
            + t * _m((1, 1), 4)
            + t * (t - 1) * _m((1,), 4)
            + t * binom_int(t - 1, 2) * one4,
        )
    )
    checks.append(
        (
            "m21",
            _m((2, 1), s).substitute_ones(4),
            _m((2, 1), 4) + t * _m((2,), 4) + t * _m((1,), 4) + t * (t - 1) * one4,
        )
    )
    results = []
    for label, lhs, rhs in checks:
        ok = lhs == rhs
        results.append(
            CheckResult(
                lemma=f"tf2-bis/{label}",
                parameters={"s": s},
                status=PASS if ok else FAIL,
                witness=None if ok else {"difference": (lhs - rhs).to_string()},
            )
        )
    return results


def random_expansion(s: int, rng: random.Random) -> SymExpansion:
    """A random expansion with small rational coefficients (for cross-checks)."""
    coeffs = tuple(
        Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(12)
    )
    return SymExpansion(s, coeffs)


def verify_tf2bis(s: int, samples: int = 25, seed: int = 0) -> list[CheckResult]:
    """Check the restriction machinery for s variables.

    Covers the substitution formulas, the full restriction-coefficient
    reconstruction on random inputs, and agreement of the two expansion
    algorithms on random symmetric polynomials of degree <= 4.
    """
    if s < 5:
        raise ValueError(f"tf2bis verification needs s >= 5, got {s}")
    results = substitution_identities(s)
    rng = random.Random(seed)
    rel_ok = True
    agree_ok = True
    witness = None
    for _ in range(samples):
        expansion = random_expansion(s, rng)
        G = expansion.reconstruct()
        predicted = restriction_coefficients(expansion.coeffs, s)
        actual = expand_direct(G.substitute_ones(4)).coeffs
        if predicted != actual:
            rel_ok = False
            witness = {"coeffs": [str(c) for c in expansion.coeffs]}
            break
        via_direct = expand_direct(G)
        via_restriction = expand_via_restriction(G)
        if (
            via_direct.coeffs != expansion.coeffs
            or via_restriction.coeffs != expansion.coeffs
        ):
            agree_ok = False
            witness = {"coeffs": [str(c) for c in expansion.coeffs]}
            break
    results.append(
        CheckResult(
            lemma="tf2-bis/rel-reconstruction",
            parameters={"s": s, "samples": samples},
            status=PASS if rel_ok else FAIL,
            witness=None if rel_ok else witness,
        )
    )
    results.append(
        CheckResult(
            lemma="tf2-bis/expansion-agreement",
            parameters={"s": s, "samples": samples},
            status=PASS if agree_ok else FAIL,
            witness=None if agree_ok else witness,
        )
    )
    return results
