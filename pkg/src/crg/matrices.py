"""Dense exact matrices over Fraction, CycNum or ParamPoly scalars."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cyclotomic import CycNum
from .polynomials import M as _M
from .polynomials import ParamPoly, integer_roots


def _zero_like(x):
    return x - x


def _one_like(x):
    if isinstance(x, CycNum):
        return x.field.one()
    if isinstance(x, ParamPoly):
        return ParamPoly((1,))
    return Fraction(1)


class ExactMatrix:
    """Immutable row-major matrix; scalars must share one ring."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        entries = tuple(entries)
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rowdata: Sequence[Sequence]) -> ExactMatrix:
        rows = len(rowdata)
        cols = len(rowdata[0])
        flat = []
        for row in rowdata:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> ExactMatrix:
        zero = _zero_like(one)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j :: self.cols]

    def to_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def map(self, fn: Callable) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return ExactMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in subtraction")
        return ExactMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, [-e for e in self.entries])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in multiplication")
            n, k, m = self.rows, self.cols, other.cols
            a, b = self.entries, other.entries
            out = []
            for i in range(n):
                arow = a[i * k : (i + 1) * k]
                for j in range(m):
                    acc = arow[0] * b[j]
                    for t in range(1, k):
                        av = arow[t]
                        if av:
                            acc = acc + av * b[t * m + j]
                    out.append(acc)
            return ExactMatrix(n, m, out)
        return ExactMatrix(self.rows, self.cols, [e * other for e in self.entries])

    def __rmul__(self, other):
        return ExactMatrix(self.rows, self.cols, [other * e for e in self.entries])

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        """Kronecker product, row-major block layout."""
        n = self.rows * other.rows
        m = self.cols * other.cols
        out = [None] * (n * m)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i * self.cols + j]
                for p in range(other.rows):
                    base = (i * other.rows + p) * m + j * other.cols
                    for q in range(other.cols):
                        out[base + q] = a * other.entries[p * other.cols + q]
        return ExactMatrix(n, m, out)

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            row = self.row(i)
            acc = row[0] * vec[0]
            for t in range(1, self.cols):
                if row[t]:
                    acc = acc + row[t] * vec[t]
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e) for e in self.row(i)) for i in range(min(self.rows, 6))
        )
        tail = " ..." if self.rows > 6 else ""
        return f"ExactMatrix({self.rows}x{self.cols}: {body}{tail})"


def evaluate(M: ExactMatrix, m0: Fraction | int) -> ExactMatrix:
    """Evaluate a ParamPoly matrix entrywise at a rational point."""
    m0 = Fraction(m0)

    def ev(e):
        if isinstance(e, ParamPoly):
            return e(m0)
        return Fraction(e)

    return M.map(ev)


def rank_and_kernel(M: ExactMatrix) -> tuple[int, list[list]]:
    """Rank and a kernel basis by exact Gauss-Jordan elimination.

    Scalars must form a field (Fraction or CycNum); ParamPoly input is
    rejected, evaluate first.
    """
    for e in M.entries:
        if isinstance(e, ParamPoly):
            raise TypeError("rank over polynomials is undefined; evaluate at a point first")
    rows = [list(M.row(i)) for i in range(M.rows)]
    ncols = M.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    rank = r
    sample = M.entries[0]
    one = _one_like(sample)
    zero = _zero_like(sample)
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for i, p in enumerate(pivots):
            v[p] = -rows[i][free]
        kernel.append(v)
    return rank, kernel


def _rank(M: ExactMatrix) -> int:
    return rank_and_kernel(M)[0]


def _berkowitz(rows: list[list]) -> list:
    """Coefficients of det(xI - A), monic, descending; division-free."""
    n = len(rows)
    poly = [rows[0][0] * 0 + 1, -rows[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        m = n - k
        a = rows[k][k]
        R = rows[k][k + 1 :]
        C = [rows[i][k] for i in range(k + 1, n)]
        sub = [rows[i][k + 1 :] for i in range(k + 1, n)]
        t = [poly[0] * 0 + 1, -a]
        v = C
        for step in range(m - 1):
            acc = R[0] * v[0]
            for i in range(1, len(R)):
                acc += R[i] * v[i]
            t.append(-acc)
            if step < m - 2:
                v = [
                    sum(sub[i][j] * v[j] for j in range(len(v)) if sub[i][j])
                    for i in range(len(v))
                ]
        out = []
        for i in range(m + 1):
            acc = None
            lo = max(0, i - m)
            hi = min(i, m - 1)
            for j in range(lo, hi + 1):
                term = t[i - j] * poly[j]
                acc = term if acc is None else acc + term
            out.append(acc)
        poly = out
    return poly


def _minimal_poly_of_seed(rows: list[list[Fraction]], seed: int) -> ParamPoly:
    """Monic minimal polynomial of the Krylov sequence from a unit seed vector."""
    n = len(rows)
    # basis rows are normalized residuals; coords express each one over M^i.seed
    basis: list[tuple[list[Fraction], list[Fraction], int]] = []
    vec = [Fraction(0)] * n
    vec[seed] = Fraction(1)
    power = 0
    while True:
        resid = list(vec)
        lam = [Fraction(0)] * power
        for brow, bcoords, piv in basis:
            f = resid[piv]
            if f:
                for i, bi in enumerate(brow):
                    if bi:
                        resid[i] -= f * bi
                for i, ci in enumerate(bcoords):
                    lam[i] += f * ci
        if not any(resid):
            return ParamPoly([-x for x in lam] + [Fraction(1)])
        piv = next(i for i in range(n) if resid[i])
        inv = 1 / resid[piv]
        coords = [-x * inv for x in lam] + [inv]
        basis.append(([x * inv for x in resid], coords, piv))
        power += 1
        vec = [
            sum(rows[i][j] * vec[j] for j in range(n) if rows[i][j]) for i in range(n)
        ]


def _poly_lcm(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    g = _poly_gcd(a, b)
    quo, rem = divmod(a * b, g)
    lcm = quo
    return ParamPoly([c / lcm.leading for c in lcm.coeffs])


def _poly_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return ParamPoly([c / a.leading for c in a.coeffs])


_BERKOWITZ_LIMIT = 64


def char_poly(M: ExactMatrix) -> ParamPoly:
    """det(M - m*I) as a polynomial in m, leading coefficient (-1)^dim."""
    if M.rows != M.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    for e in M.entries:
        if not isinstance(e, (int, Fraction)):
            raise TypeError("char_poly expects rational entries")
    n = M.rows
    if n <= _BERKOWITZ_LIMIT:
        return _char_poly_berkowitz(M)
    out = _char_poly_krylov(M)
    if out is None:
        out = _char_poly_berkowitz(M)
    return out


def _char_poly_berkowitz(M: ExactMatrix) -> ParamPoly:
    n = M.rows
    if all(isinstance(e, int) or e.denominator == 1 for e in M.entries):
        rows = [[int(e) for e in M.row(i)] for i in range(n)]
    else:
        rows = [[Fraction(e) for e in M.row(i)] for i in range(n)]
    monic_desc = _berkowitz(rows)
    asc = list(reversed(monic_desc))
    if n % 2:
        asc = [-c for c in asc]
    return ParamPoly(asc)


_KRYLOV_SEED_LIMIT = 8


def _char_poly_krylov(M: ExactMatrix) -> ParamPoly | None:
    """Minimal-polynomial route for large matrices with few integer eigenvalues.

    Sound because geometric multiplicities are certified to sum to the
    dimension before the factored answer is assembled; returns None when
    that certificate cannot be reached.
    """
    n = M.rows
    rows = [[Fraction(e) for e in M.row(i)] for i in range(n)]
    mu = ParamPoly((1,))
    known_ranks: dict[int, int] = {}
    for seed in range(min(n, _KRYLOV_SEED_LIMIT)):
        mu = _poly_lcm(mu, _minimal_poly_of_seed(rows, seed))
        factors, remainder, _ = integer_roots(mu)
        if remainder != ParamPoly((1,)):
            return None
        total = 0
        mults = []
        for root, _ in factors:
            if root not in known_ranks:
                shifted = M - ExactMatrix.identity(n, Fraction(root))
                known_ranks[root] = _rank(shifted)
            mult = n - known_ranks[root]
            mults.append((root, mult))
            total += mult
        if total == n:
            out = ParamPoly((1,))
            for root, mult in mults:
                out = out * (_M - root) ** mult
            if n % 2:
                out = -out
            return out
    return None
