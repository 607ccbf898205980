"""Exact dense linear algebra over the Gaussian rationals.

Scalars are a + b*i with a, b arbitrary-precision rationals; matrices are
immutable row-major tuples of scalars.  Nothing in this module rounds:
every operation is exact, which is what makes the infeasibility
certificates produced downstream trustworthy.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union


class NonIntegerSpectrum(ValueError):
    """The characteristic polynomial does not split into integer linear factors."""


class NotSemisimple(ValueError):
    """The product of (a - mu*I) over the distinct eigenvalues is nonzero."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float) and x.is_integer():
        return Fraction(int(x))
    raise TypeError(f"not an exact rational: {x!r}")


class GaussRational:
    """A Gaussian rational a + b*i, always in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def of(cls, value) -> "GaussRational":
        """Coerce an int, Fraction, complex with integral parts, or pair."""
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, complex):
            return cls(_as_fraction(value.real), _as_fraction(value.imag))
        if isinstance(value, tuple) and len(value) == 2:
            return cls(value[0], value[1])
        raise TypeError(f"cannot coerce {value!r} to GaussRational")

    def __add__(self, other):
        other = GaussRational.of(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussRational.of(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRational.of(other) - self

    def __mul__(self, other):
        other = GaussRational.of(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRational.of(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return GaussRational.of(other) / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|^2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = GaussRational.of(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussRational({self.re})"
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)

Entry = Union[GaussRational, int, Fraction, complex, tuple]


class GaussMatrix:
    """Immutable dense matrix of Gaussian rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Sequence[Sequence[Entry]]):
        rows = len(data)
        if rows == 0:
            raise ValueError("matrix needs at least one row")
        cols = len(data[0])
        ents = []
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
            ents.extend(GaussRational.of(x) for x in r)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(ents))

    def __setattr__(self, name, value):
        raise AttributeError("GaussMatrix is immutable")

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "GaussMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", entries)
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "GaussMatrix":
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "GaussMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Iterable[Entry]) -> "GaussMatrix":
        vals = [GaussRational.of(v) for v in values]
        n = len(vals)
        ents = [ZERO] * (n * n)
        for i, v in enumerate(vals):
            ents[i * n + i] = v
        return cls._raw(n, n, tuple(ents))

    @classmethod
    def block(cls, grid: Sequence[Sequence["GaussMatrix"]]) -> "GaussMatrix":
        """Assemble from a 2-d grid of matrices with consistent edge sizes."""
        data = []
        for band in grid:
            height = band[0].rows
            if any(b.rows != height for b in band):
                raise ValueError("inconsistent block heights")
            for i in range(height):
                row = []
                for b in band:
                    row.extend(b.row(i))
                data.append(row)
        return cls(data)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __getitem__(self, key) -> GaussRational:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "GaussMatrix":
        ents = tuple(
            self.entries[i * self.cols + j]
            for i in range(r0, r1)
            for j in range(c0, c1)
        )
        return GaussMatrix._raw(r1 - r0, c1 - c0, ents)

    def _check_same_shape(self, other: "GaussMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "GaussMatrix") -> "GaussMatrix":
        self._check_same_shape(other)
        ents = tuple(a + b for a, b in zip(self.entries, other.entries))
        return GaussMatrix._raw(self.rows, self.cols, ents)

    def __sub__(self, other: "GaussMatrix") -> "GaussMatrix":
        self._check_same_shape(other)
        ents = tuple(a - b for a, b in zip(self.entries, other.entries))
        return GaussMatrix._raw(self.rows, self.cols, ents)

    def __neg__(self) -> "GaussMatrix":
        return GaussMatrix._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, scalar) -> "GaussMatrix":
        s = GaussRational.of(scalar)
        return GaussMatrix._raw(self.rows, self.cols, tuple(a * s for a in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: "GaussMatrix") -> "GaussMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m, k = self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = ZERO
                for t in range(k):
                    x = arow[t]
                    if x.is_zero():
                        continue
                    acc = acc + x * b[t * m + j]
                out.append(acc)
        return GaussMatrix._raw(n, m, tuple(out))

    def conj_transpose(self) -> "GaussMatrix":
        ents = tuple(
            self.entries[i * self.cols + j].conjugate()
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return GaussMatrix._raw(self.cols, self.rows, ents)

    def transpose(self) -> "GaussMatrix":
        ents = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return GaussMatrix._raw(self.cols, self.rows, ents)

    def trace(self) -> GaussRational:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i * self.cols + i]
        return acc

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def inverse(self) -> "GaussMatrix":
        """Exact inverse by Gauss-Jordan elimination; raises if singular."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + list(GaussMatrix.identity(n).row(i)) for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = ONE / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return GaussMatrix([r[n:] for r in aug])

    def to_complex(self) -> list:
        """Rows of Python complex numbers (lossy; for the numeric oracle only)."""
        return [[complex(self[i, j]) for j in range(self.cols)] for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, GaussMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(str(self[i, j]) for j in range(self.cols)) for i in range(self.rows)
        )
        return f"GaussMatrix[{body}]"


def bracket(a: GaussMatrix, b: GaussMatrix) -> GaussMatrix:
    """Commutator ab - ba, exact; both arguments must be square and same size."""
    if not (a.is_square() and b.is_square() and a.rows == b.rows):
        raise ValueError("bracket needs square matrices of equal size")
    return (a @ b) - (b @ a)


# ----------------------------------------------------------------------
# Characteristic polynomial and integer spectra.
#
# Polynomials are tuples of GaussRational coefficients in ascending order,
# (c0, c1, ..., 1) for the monic det(tI - a).


def _poly_mul(p: Sequence[GaussRational], q: Sequence[GaussRational]):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _poly_add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else ZERO
        b = q[i] if i < len(q) else ZERO
        out.append(a + b)
    return out


def _poly_neg(p):
    return [-a for a in p]


def _det_poly(m) -> list:
    """Determinant of a small matrix of polynomials by first-row expansion."""
    n = len(m)
    if n == 1:
        return list(m[0][0])
    total = [ZERO]
    for j in range(n):
        entry = m[0][j]
        if all(c.is_zero() for c in entry):
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
        term = _poly_mul(entry, _det_poly(minor))
        if j % 2:
            term = _poly_neg(term)
        total = _poly_add(total, term)
    return total


def _char_poly_cofactor(a: GaussMatrix) -> list:
    n = a.rows
    # entry (i,j) of tI - a as an ascending-coefficient polynomial
    m = [
        [[-a[i, j], ONE if i == j else ZERO] for j in range(n)]
        for i in range(n)
    ]
    return _det_poly(m)


def _char_poly_berkowitz(a: GaussMatrix) -> list:
    """Division-free characteristic polynomial (Samuelson-Berkowitz)."""
    n = a.rows
    # coefficient vector of det(tI - leading block), descending degree
    vec = [ONE, -a[0, 0]]
    for k in range(1, n):
        # items: first column of the (k+2) x (k+1) Toeplitz transform
        col = [GaussMatrix._raw(k, 1, tuple(a[i, k] for i in range(k)))]
        lead = a.submatrix(0, k, 0, k)
        for _ in range(k - 1):
            col.append(lead @ col[-1])
        row = GaussMatrix._raw(1, k, tuple(a[k, j] for j in range(k)))
        items = [ONE, -a[k, k]] + [-(row @ c)[0, 0] for c in col]
        new = []
        for i in range(k + 2):
            acc = ZERO
            for j in range(min(i, k) + 1):
                if i - j < len(items):
                    acc = acc + items[i - j] * vec[j]
            new.append(acc)
        vec = new
    return vec[::-1]


def char_poly(a: GaussMatrix) -> tuple:
    """Coefficients of det(tI - a), ascending and exact; the leading one is 1."""
    if not a.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    if a.rows <= 4:
        coeffs = _char_poly_cofactor(a)
    else:
        coeffs = _char_poly_berkowitz(a)
    return tuple(coeffs)


def poly_eval(coeffs: Sequence[GaussRational], a: GaussMatrix) -> GaussMatrix:
    """Evaluate a polynomial at a square matrix (Horner)."""
    if not a.is_square():
        raise ValueError("polynomial evaluation needs a square matrix")
    n = a.rows
    acc = GaussMatrix.zeros(n, n)
    ident = GaussMatrix.identity(n)
    for c in reversed(coeffs):
        acc = acc @ a + ident * c
    return acc


def _integer_coefficients(coeffs: Sequence[GaussRational]) -> list:
    out = []
    for c in coeffs:
        if not c.is_integer():
            raise NonIntegerSpectrum(f"non-integer coefficient {c} in characteristic polynomial")
        out.append(int(c.re))
    return out


def _deflate(desc: list, root: int) -> list:
    """Divide a descending-coefficient polynomial by (t - root); remainder must vanish."""
    quot = [desc[0]]
    for c in desc[1:]:
        quot.append(c + root * quot[-1])
    if quot[-1] != 0:
        raise ValueError("nonzero remainder")
    return quot[:-1]


def integer_spectrum(a: GaussMatrix) -> dict:
    """Map eigenvalue -> multiplicity when char_poly splits over the integers.

    Candidate roots are the integer divisors of the constant coefficient
    (after stripping t^m).  Any failure to split raises NonIntegerSpectrum.
    """
    coeffs = _integer_coefficients(char_poly(a))
    spectrum: dict = {}
    first_nonzero = next(i for i, c in enumerate(coeffs) if c != 0)
    if first_nonzero > 0:
        spectrum[0] = first_nonzero
        coeffs = coeffs[first_nonzero:]
    desc = coeffs[::-1]
    while len(desc) > 1:
        const = desc[-1]
        bound = 1 + max(abs(c) for c in desc)  # Cauchy bound for a monic polynomial
        root = None
        for mag in range(1, min(abs(const), bound) + 1):
            if const % mag:
                continue
            for cand in (mag, -mag):
                val = 0
                for c in desc:
                    val = val * cand + c
                if val == 0:
                    root = cand
                    break
            if root is not None:
                break
        if root is None:
            raise NonIntegerSpectrum(f"no integer root of {desc[::-1]} (ascending)")
        spectrum[root] = spectrum.get(root, 0) + 1
        desc = _deflate(desc, root)
    return spectrum


def eigenprojection(a: GaussMatrix, lam: int, spectrum: Mapping[int, int]) -> GaussMatrix:
    """Exact spectral projector onto the lam-eigenspace of a semisimple matrix.

    P = prod over mu != lam of (a - mu I) / (lam - mu).  The caller's spectrum
    is certified first: prod over distinct mu of (a - mu I) must be zero.
    """
    if lam not in spectrum:
        raise ValueError(f"{lam} is not in the given spectrum")
    n = a.rows
    ident = GaussMatrix.identity(n)
    minimal = ident
    for mu in sorted(spectrum):
        minimal = minimal @ (a - ident * mu)
    if not minimal.is_zero():
        raise NotSemisimple("matrix fails the semisimplicity product test")
    proj = ident
    for mu in sorted(spectrum):
        if mu == lam:
            continue
        proj = proj @ (a - ident * mu) * (Fraction(1, lam - mu))
    return proj
