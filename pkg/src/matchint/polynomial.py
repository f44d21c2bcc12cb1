"""Dense integer polynomials and extraction of integer zeros."""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass

__all__ = [
    "IntPolynomial",
    "IntegralityReport",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_shift",
    "evaluate",
    "synthetic_divide",
    "extract_integer_zeros",
    "from_roots",
]


class IntPolynomial:
    """Polynomial with Python-int coefficients, ascending by exponent.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, a: int) -> IntPolynomial:
        return cls((a,))

    @classmethod
    def monomial(cls, c: int, e: int) -> IntPolynomial:
        return cls([0] * e + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return poly_sub(self, _coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return poly_sub(_coerce(other), self)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self.coeffs)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, z: int) -> int:
        return evaluate(self, z)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "x") -> str:
        """Render descending, e.g. ``x^8 - 14*x^6 + 49*x^4 - 36*x^2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                term = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {term}")
        return " ".join(parts)

    def to_dict(self) -> dict[str, list[int]]:
        return {"coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> IntPolynomial:
        return cls(d["coeffs"])


def _coerce(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial((p,))


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial(out)


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return IntPolynomial(out)


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return IntPolynomial(out)


def poly_shift(p: IntPolynomial, s: int) -> IntPolynomial:
    """Multiply by ``x**s``."""
    if s < 0:
        raise ValueError(f"shift must be non-negative, got {s}")
    if not p.coeffs:
        return p
    return IntPolynomial((0,) * s + p.coeffs)


def evaluate(p: IntPolynomial, z: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def synthetic_divide(p: IntPolynomial, z: int) -> tuple[IntPolynomial, int]:
    """Divide by ``(x - z)``: returns ``(q, r)`` with ``p == q*(x - z) + r``."""
    if p.is_zero():
        raise ValueError("cannot divide the zero polynomial")
    desc = list(reversed(p.coeffs))
    acc = 0
    q_desc = []
    for c in desc:
        acc = acc * z + c
        q_desc.append(acc)
    r = q_desc.pop()
    return IntPolynomial(reversed(q_desc)), r


def from_roots(roots: dict[int, int] | Iterable[tuple[int, int]]) -> IntPolynomial:
    """Monic product of ``(x - z)**m`` over ``(z, m)`` pairs."""
    items = roots.items() if isinstance(roots, dict) else roots
    out = IntPolynomial((1,))
    for z, m in items:
        out = out * IntPolynomial((-z, 1)) ** m
    return out


@dataclass(frozen=True)
class IntegralityReport:
    """Integer zeros found in a polynomial plus the cofactor left over.

    ``zeros`` holds ``(zero, multiplicity)`` pairs sorted by zero.
    """

    zeros: tuple[tuple[int, int], ...]
    remainder: IntPolynomial

    @property
    def integral(self) -> bool:
        return self.remainder.degree == 0

    def zero_multiset(self) -> dict[int, int]:
        return dict(self.zeros)

    def reconstruct(self) -> IntPolynomial:
        return from_roots(self.zeros) * self.remainder

    def zeros_text(self) -> str:
        """``-3,-2,-1,0^2,1,2,3`` style listing."""
        return ",".join(str(z) if m == 1 else f"{z}^{m}" for z, m in self.zeros)

    def to_dict(self) -> dict:
        return {
            "integral": self.integral,
            "zeros": [[z, m] for z, m in self.zeros],
            "remainder": self.remainder.to_dict(),
        }


def _strip(p: IntPolynomial, z: int) -> tuple[IntPolynomial, int]:
    mult = 0
    while p.degree > 0:
        q, r = synthetic_divide(p, z)
        if r != 0:
            break
        p = q
        mult += 1
    return p, mult


def extract_integer_zeros(p: IntPolynomial, bound: int) -> IntegralityReport:
    """Divide out every integer zero ``z`` with ``|z| <= bound``.

    Zero is removed first, then candidates by increasing ``|z|``, positive
    before negative. The verdict is only definitive if every real zero of
    ``p`` lies within ``[-bound, bound]``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no finite zero set")
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    found: dict[int, int] = {}
    # x^k factor is read off the low coefficients directly
    low = next(i for i, c in enumerate(p.coeffs) if c != 0)
    if low:
        found[0] = low
        p = IntPolynomial(p.coeffs[low:])
    for a in range(1, bound + 1):
        if p.degree <= 0:
            break
        for z in (a, -a):
            # an integer zero must divide the (nonzero) constant term
            if p.coeffs[0] % z:
                continue
            p, mult = _strip(p, z)
            if mult:
                found[z] = mult
    return IntegralityReport(tuple(sorted(found.items())), p)
