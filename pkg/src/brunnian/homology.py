"""Integral symplectic action of the genus-2 twist generators on first homology.

Basis and intersection form
---------------------------
H_1 of the closed genus-2 surface is Z^4 with symplectic basis
(a1, b1, a2, b2) and intersection form J pairing <a_i, b_i> = +1.
The five standard twist curves form a chain; their homology classes are
fixed here as

    c1 = a1,  c2 = b1,  c3 = a1 + a2,  c4 = b2,  c5 = a2,

which realises the chain pattern <c_i, c_{i+1}> = +-1 and
<c_i, c_j> = 0 for |i - j| >= 2.  A twist along c acts as the
transvection x -> x + TWIST_SIGN * <x, c> c; the global sign convention
is fixed once and recorded in emitted certificates.

Everything here is exact integer arithmetic on 4x4 matrices; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Literal, Sequence

from .errors import PreconditionError

Row = tuple[int, int, int, int]
Rows = tuple[Row, Row, Row, Row]

J: Rows = (
    (0, 1, 0, 0),
    (-1, 0, 0, 0),
    (0, 0, 0, 1),
    (0, 0, -1, 0),
)

BASIS = ("a1", "b1", "a2", "b2")

CHAIN_CLASSES: tuple[Row, ...] = (
    (1, 0, 0, 0),   # c1 = a1
    (0, 1, 0, 0),   # c2 = b1
    (1, 0, 1, 0),   # c3 = a1 + a2
    (0, 0, 0, 1),   # c4 = b2
    (0, 0, 1, 0),   # c5 = a2
)

TWIST_SIGN = 1


def intersection(x: Sequence[int], y: Sequence[int]) -> int:
    """Symplectic pairing <x, y> = x^T J y."""
    return sum(x[i] * J[i][j] * y[j] for i in range(4) for j in range(4))


def _mat_mul(a: Rows, b: Rows) -> Rows:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )  # type: ignore[return-value]


_IDENTITY_ROWS: Rows = tuple(
    tuple(1 if i == j else 0 for j in range(4)) for i in range(4)
)  # type: ignore[assignment]


@dataclass(frozen=True)
class SymplecticMatrix:
    """4x4 integer matrix acting on column vectors in the (a1,b1,a2,b2) basis."""

    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise PreconditionError("expected a 4x4 matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls) -> "SymplecticMatrix":
        return cls(_IDENTITY_ROWS)

    def mul(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        return SymplecticMatrix(_mat_mul(self.rows, other.rows))

    __matmul__ = mul

    def transpose(self) -> "SymplecticMatrix":
        return SymplecticMatrix(
            tuple(tuple(self.rows[j][i] for j in range(4)) for i in range(4)))

    def det(self) -> int:
        """Exact determinant by cofactor expansion on the first row."""
        def det3(m):
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        total = 0
        for j in range(4):
            minor = [[self.rows[i][k] for k in range(4) if k != j]
                     for i in range(1, 4)]
            term = self.rows[0][j] * det3(minor)
            total += term if j % 2 == 0 else -term
        return total

    def is_symplectic(self) -> bool:
        """Exact check of M^T J M == J."""
        mt = tuple(tuple(self.rows[j][i] for j in range(4)) for i in range(4))
        return _mat_mul(_mat_mul(mt, J), self.rows) == J

    @property
    def is_identity(self) -> bool:
        return self.rows == _IDENTITY_ROWS

    @property
    def is_neg_identity(self) -> bool:
        return self.rows == tuple(
            tuple(-1 if i == j else 0 for j in range(4)) for i in range(4))

    def apply(self, v: Sequence[int]) -> Row:
        return tuple(sum(self.rows[i][j] * v[j] for j in range(4))
                     for i in range(4))  # type: ignore[return-value]

    def mod(self, p: int) -> "ModularMatrix":
        return ModularMatrix(p, tuple(
            tuple(x % p for x in row) for row in self.rows))


@dataclass(frozen=True)
class ModularMatrix:
    """4x4 matrix with entries reduced into [0, p)."""

    p: int
    rows: Rows

    @property
    def is_identity(self) -> bool:
        return all(self.rows[i][j] == (1 if i == j else 0) % self.p
                   for i in range(4) for j in range(4))


def transvection(c: Sequence[int], sign: int = TWIST_SIGN) -> SymplecticMatrix:
    """Matrix of x -> x + sign * <x, c> c. Requires c nonzero."""
    c = tuple(int(x) for x in c)
    if len(c) != 4:
        raise PreconditionError("homology vectors have four coordinates")
    if not any(c):
        raise PreconditionError("transvection along the zero vector is undefined")
    if sign not in (1, -1):
        raise PreconditionError("sign must be +1 or -1")
    jc = tuple(sum(J[j][k] * c[k] for k in range(4)) for j in range(4))
    m = SymplecticMatrix(tuple(
        tuple((1 if i == j else 0) + sign * c[i] * jc[j] for j in range(4))
        for i in range(4)))
    assert m.is_symplectic()
    return m


_TWIST_MATRICES = {i + 1: transvection(c) for i, c in enumerate(CHAIN_CLASSES)}
_TWIST_INVERSES = {i + 1: transvection(c, -1) for i, c in enumerate(CHAIN_CLASSES)}


def _letters_of(word) -> tuple[int, ...]:
    letters = tuple(getattr(word, "letters", word))
    for a in letters:
        if not isinstance(a, int) or not 1 <= abs(a) <= 5:
            raise PreconditionError(f"letter {a} is not a twist generator index")
    return letters


def rho(word) -> SymplecticMatrix:
    """Homology action of a twist word, multiplied in word order.

    Accepts a TwistWord (or any object with signed-integer ``letters``
    in +-1..5) and is a homomorphism: rho(uv) == rho(u) @ rho(v).
    """
    m = _IDENTITY_ROWS
    for a in _letters_of(word):
        t = _TWIST_MATRICES[a] if a > 0 else _TWIST_INVERSES[-a]
        m = _mat_mul(m, t.rows)
    result = SymplecticMatrix(m)
    assert result.is_symplectic()
    return result


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rho_mod(word, p: int = 3) -> ModularMatrix:
    """rho with entries reduced modulo a prime p (default 3)."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    return rho(word).mod(p)


# ---------------------------------------------------------------------------
# characteristic polynomials and the homological pseudo-Anosov criterion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPolynomial:
    """Monic degree-4 integer polynomial; coefficients leading-first."""

    coefficients: tuple[int, int, int, int, int]

    def __post_init__(self):
        coeffs = tuple(int(x) for x in self.coefficients)
        if len(coeffs) != 5:
            raise PreconditionError("expected five coefficients (degree 4)")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def is_monic(self) -> bool:
        return self.coefficients[0] == 1

    @property
    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            deg = 4 - i
            base = f"x^{deg}" if deg > 1 else ("x" if deg == 1 else "")
            if abs(c) == 1 and deg > 0:
                coeff = "-" if c < 0 else ""
            else:
                coeff = str(c)
                if deg > 0:
                    coeff += "*"
            terms.append(coeff + base)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def charpoly(m: SymplecticMatrix) -> CharPolynomial:
    """Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier scheme.

    All divisions in the recursion are exact over the integers; this is
    asserted rather than assumed.
    """
    a = m.rows
    coeffs = [1]
    mk = a
    for k in range(1, 5):
        trace = sum(mk[i][i] for i in range(4))
        ck, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact"
        coeffs.append(ck)
        if k < 4:
            shifted = tuple(
                tuple(mk[i][j] + (ck if i == j else 0) for j in range(4))
                for i in range(4))
            mk = _mat_mul(a, shifted)
    return CharPolynomial(tuple(coeffs))


# The four irreducible degree-4 cyclotomic polynomials (orders 5, 8, 10, 12).
_DEGREE4_CYCLOTOMICS = frozenset({
    (1, 1, 1, 1, 1),
    (1, 0, 0, 0, 1),
    (1, -1, 1, -1, 1),
    (1, 0, -1, 0, 1),
})

CassonBleilerVerdict = Literal["pa_certified", "inconclusive"]


def _signed_divisors(n: int) -> Iterable[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    for d in small + large[::-1]:
        yield d
        yield -d


def _has_integer_root(q: CharPolynomial) -> bool:
    d = q.coefficients[4]
    if d == 0:
        return True
    return any(q.evaluate(r) == 0 for r in _signed_divisors(d))


def _has_quadratic_split(q: CharPolynomial) -> bool:
    """Search (x^2+px+r)(x^2+sx+t) over the divisors of the constant term."""
    _, a, b, c, d = q.coefficients
    if d == 0:
        return True
    for r in _signed_divisors(d):
        t = d // r
        if r * t != d:
            continue
        if t != r:
            p, rem = divmod(c - a * r, t - r)
            if rem:
                continue
            s = a - p
            if r + t + p * s == b:
                return True
        else:
            if c != a * r:
                continue
            disc = a * a - 4 * (b - 2 * r)
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root == disc and (a + root) % 2 == 0:
                return True
    return False


def casson_bleiler(q: CharPolynomial) -> CassonBleilerVerdict:
    """Sufficient homological test for a mapping class to be pseudo-Anosov.

    Certifies when the characteristic polynomial of the homology action
    is irreducible over Q, is not one of the degree-4 cyclotomics, and
    is not a polynomial in x^k for k >= 2.  Rational factorisations of a
    monic integer quartic are integral, so irreducibility reduces to an
    integer-root test plus an exhaustive quadratic-splitting search over
    the divisors of the constant term.
    """
    if not q.is_monic:
        raise PreconditionError("criterion applies to monic degree-4 polynomials")
    if _has_integer_root(q):
        return "inconclusive"
    if _has_quadratic_split(q):
        return "inconclusive"
    if q.coefficients in _DEGREE4_CYCLOTOMICS:
        return "inconclusive"
    if q.coefficients[1] == 0 and q.coefficients[3] == 0:
        return "inconclusive"  # polynomial in x^2
    return "pa_certified"
