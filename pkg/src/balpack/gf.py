"""Arithmetic in small finite fields GF(p^m) with a canonical element order.

Elements are coefficient tuples ``(c0, ..., c_{m-1})`` over Z_p, identified
with the integer ``c0 + c1*p + ... + c_{m-1}*p^(m-1)``.  That integer is the
element's *canonical index*, and every deterministic choice in this module is
made in canonical-index order:

* the field modulus is the monic irreducible degree-m polynomial whose
  coefficient tuple has the smallest canonical index, and
* the designated generator ``xi`` is the element of multiplicative order
  q-1 with the smallest canonical index (q = p^m).

The first few moduli this rule selects:

    GF(4)   x^2 + x + 1
    GF(8)   x^3 + x + 1
    GF(9)   x^2 + 1
    GF(16)  x^4 + x + 1
    GF(25)  x^2 + 2

Field sizes are capped at 2^16; everything here is desk-scale and all tables
(element list, discrete logs) are built lazily and cached per field.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "FieldError",
    "NotPrime",
    "TooLarge",
    "SpecMismatch",
    "FieldSpec",
    "FieldElement",
    "make_field",
    "element_at",
    "index_of",
    "zero",
    "one",
    "xi",
    "add",
    "sub",
    "mul",
    "pow",
    "eval_poly",
    "discrete_index",
]

SIZE_CAP = 2**16


class FieldError(Exception):
    """Base class for field construction/arithmetic errors."""


class NotPrime(FieldError):
    """The requested characteristic is not a prime number."""


class TooLarge(FieldError):
    """The requested field size exceeds the 2^16 cap."""


class SpecMismatch(FieldError):
    """Operands of a binary operation belong to different fields."""


# ---------------------------------------------------------------------------
# field construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of one field GF(p^m).

    Attributes
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree (>= 1).
    modulus : tuple[int, ...]
        Coefficients of the monic irreducible modulus, lowest degree first,
        length m+1, ``modulus[m] == 1``.
    xi_index : int
        Canonical index of the designated primitive element.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    xi_index: int

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={self.modulus})"


@dataclass(frozen=True)
class FieldElement:
    """One element of a field, as a base-p coefficient tuple."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return sub(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __pow__(self, e: int) -> "FieldElement":
        return pow(self, e)

    def __bool__(self) -> bool:
        return any(self.coeffs)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(index: int, p: int, length: int) -> tuple[int, ...]:
    """Base-p digits of ``index``, lowest first, padded to ``length``."""
    out = []
    for _ in range(length):
        out.append(index % p)
        index //= p
    return tuple(out)


# -- polynomial helpers over Z_p (tuples, lowest degree first) --------------


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mod(num: tuple[int, ...], den: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of ``num`` modulo monic ``den`` over Z_p."""
    rem = list(num)
    dd = len(den) - 1
    while len(rem) - 1 >= dd and rem:
        lead = rem[-1]
        if lead:
            shift = len(rem) - 1 - dd
            for i, c in enumerate(den):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
        rem.pop()
    return _poly_trim(rem)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_trim(out)


def _irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= m/2."""
    m = len(poly) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for idx in range(p**d):
            divisor = _digits(idx, p, d) + (1,)
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """Build the canonical GF(p^m) description.

    The modulus is the first irreducible monic degree-m polynomial in
    canonical-index order, and ``xi_index`` points at the first element of
    multiplicative order q-1.  Both searches are exhaustive, which is fine
    under the 2^16 size cap.
    """
    if not _is_prime(p):
        raise NotPrime(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > SIZE_CAP:
        raise TooLarge(f"field size {p}^{m} exceeds cap {SIZE_CAP}")

    modulus = None
    for idx in range(p**m):
        candidate = _digits(idx, p, m) + (1,)
        if _irreducible(candidate, p):
            modulus = candidate
            break
    assert modulus is not None  # irreducibles of every degree exist

    # Provisional spec (xi unknown) lets us run arithmetic during the search.
    probe = FieldSpec(p=p, m=m, modulus=modulus, xi_index=-1)
    q = p**m
    group_order = q - 1
    prime_divs = _prime_factors(group_order)
    xi_index = None
    for idx in range(1, q):
        a = FieldElement(probe, _digits(idx, p, m))
        if _order_is(a, group_order, prime_divs):
            xi_index = idx
            break
    assert xi_index is not None  # the multiplicative group is cyclic

    return FieldSpec(p=p, m=m, modulus=modulus, xi_index=xi_index)


def _order_is(a: FieldElement, n: int, prime_divs: list[int]) -> bool:
    """True iff the multiplicative order of ``a`` is exactly ``n``."""
    if pow(a, n).coeffs != _one_coeffs(a.field):
        return False
    for ell in prime_divs:
        if pow(a, n // ell).coeffs == _one_coeffs(a.field):
            return False
    return True


def _one_coeffs(field: FieldSpec) -> tuple[int, ...]:
    return (1,) + (0,) * (field.m - 1)


# ---------------------------------------------------------------------------
# element access
# ---------------------------------------------------------------------------


def element_at(field: FieldSpec, index: int) -> FieldElement:
    """The element with the given canonical index (0 <= index < q)."""
    if not 0 <= index < field.q:
        raise FieldError(f"element index {index} out of range for GF({field.q})")
    return FieldElement(field, _digits(index, field.p, field.m))


def index_of(a: FieldElement) -> int:
    """Canonical index of ``a`` (base-p value of its coefficient tuple)."""
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * a.field.p + c
    return acc


def zero(field: FieldSpec) -> FieldElement:
    return FieldElement(field, (0,) * field.m)


def one(field: FieldSpec) -> FieldElement:
    return FieldElement(field, _one_coeffs(field))


def xi(field: FieldSpec) -> FieldElement:
    """The designated primitive element."""
    return element_at(field, field.xi_index)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise SpecMismatch("operands belong to different field specs")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    p = a.field.p
    return FieldElement(a.field, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    p = a.field.p
    return FieldElement(a.field, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    field = a.field
    prod = _poly_mul(a.coeffs, b.coeffs, field.p)
    rem = _poly_mod(prod, field.modulus, field.p)
    return FieldElement(field, rem + (0,) * (field.m - len(rem)))


def pow(a: FieldElement, e: int) -> FieldElement:
    """``a`` raised to an integer power by square-and-multiply (e >= 0)."""
    if e < 0:
        raise FieldError("negative exponents are not supported")
    result = one(a.field)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def eval_poly(coeffs, x: FieldElement) -> FieldElement:
    """Horner evaluation of a polynomial with FieldElement coefficients.

    ``coeffs`` lists the coefficients lowest degree first, so
    ``eval_poly((c0, c1, c2), x) == c0 + c1*x + c2*x^2``.
    """
    acc = zero(x.field)
    for c in reversed(tuple(coeffs)):
        acc = add(mul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------
# discrete index
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _dlog_table(field: FieldSpec) -> dict:
    """coeffs -> r(a) where r(0)=0 and r(xi^j) = j+1."""
    table = {zero(field).coeffs: 0}
    g = xi(field)
    a = one(field)
    for j in range(field.q - 1):
        table[a.coeffs] = j + 1
        a = mul(a, g)
    return table


def discrete_index(a: FieldElement) -> int:
    """r(a): zero maps to 0, and xi^j maps to j+1.

    A bijection from the field onto {0, ..., q-1}.
    """
    return _dlog_table(a.field)[a.coeffs]
