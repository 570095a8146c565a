"""Class bilinear forms, their determinants, and closed-form comparisons."""

from __future__ import annotations

from fractions import Fraction

from .groups import ReflectionGroupData, build_series, class_stats
from .matrices import ExactMatrix, char_poly, rank_and_kernel
from .polynomials import M, ParamPoly, integer_roots


class ClassForm:
    """Integer Gram data of one reflection class: diagonal 1, off-diagonal alpha."""

    def __init__(self, class_index: int, members: tuple[int, ...], a_matrix: ExactMatrix) -> None:
        self.class_index = class_index
        self.members = members
        self.a_matrix = a_matrix

    @property
    def size(self) -> int:
        return len(self.members)


class Discriminant:
    """Factored determinant of a_matrix - m*I: sign * remainder * prod (m-r)^k."""

    def __init__(self, sign: int, factors: tuple[tuple[int, int], ...], remainder: ParamPoly) -> None:
        self.sign = sign
        self.factors = factors
        self.remainder = remainder

    def poly(self) -> ParamPoly:
        p = ParamPoly((self.sign,)) * self.remainder
        for root, mult in self.factors:
            p = p * (M - root) ** mult
        return p

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Discriminant):
            return NotImplemented
        return (
            self.sign == other.sign
            and self.factors == other.factors
            and self.remainder == other.remainder
        )

    def __hash__(self) -> int:
        return hash((self.sign, self.factors, self.remainder))

    def __repr__(self) -> str:
        return f"Discriminant(sign={self.sign}, factors={self.factors}, remainder={self.remainder!s})"


def gram_matrix(g: ReflectionGroupData, c: int) -> ClassForm:
    members = g.classes[c]
    rows = []
    for s in members:
        row_s = g.alpha[s]
        rows.append([Fraction(1) if s == u else Fraction(row_s[u]) for u in members])
    return ClassForm(c, members, ExactMatrix.from_rows(rows))


def discriminant(g: ReflectionGroupData, c: int) -> Discriminant:
    form = gram_matrix(g, c)
    factors, remainder, sign = integer_roots(char_poly(form.a_matrix))
    disc = Discriminant(sign, factors, remainder)
    total = sum(mult for _, mult in factors) + max(remainder.degree, 0)
    assert total == form.size, "degree bookkeeping is off"
    return disc


def check_n_c(g: ReflectionGroupData, c: int) -> bool:
    """True when N(c) is a simple root of the determinant dominating all others."""
    n_c, _ = class_stats(g, c)
    disc = discriminant(g, c)
    mult = dict(disc.factors).get(n_c, 0)
    if mult != 1:
        return False
    if any(root >= n_c for root, _ in disc.factors if root != n_c):
        return False
    if disc.remainder.degree > 0:
        coeffs = disc.remainder.coeffs
        cauchy = 1 + max(abs(a) for a in coeffs[:-1])
        if cauchy >= n_c:
            return False
    return True


def kernel_at(g: ReflectionGroupData, c: int, m0) -> list[list[Fraction]]:
    """Kernel basis of a_matrix - m0*I as exact rational vectors."""
    form = gram_matrix(g, c)
    shifted = form.a_matrix - ExactMatrix.identity(form.size, Fraction(m0))
    _, kernel = rank_and_kernel(shifted)
    return kernel


def leading_minor_signs(g: ReflectionGroupData, c: int, m0) -> list[int]:
    """Signs of the leading principal minors of a_matrix - m0*I."""
    form = gram_matrix(g, c)
    size = form.size
    m0 = Fraction(m0)
    # Clearing the denominator scales the k-th minor by den**k > 0.
    rows = [
        [int(m0.denominator * form.a_matrix[i, j]) - (m0.numerator if i == j else 0) for j in range(size)]
        for i in range(size)
    ]
    minors = _leading_minors(rows)
    return [0 if d == 0 else (1 if d > 0 else -1) for d in minors]


def _leading_minors(rows: list[list[int]]) -> list[int]:
    """All leading principal minors via fraction-free elimination."""
    n = len(rows)
    work = [row[:] for row in rows]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        if work[k][k] == 0:
            # A vanishing minor stalls the elimination; finish directly.
            for j in range(k, n):
                sub = ExactMatrix.from_rows(
                    [[Fraction(rows[i][l]) for l in range(j + 1)] for i in range(j + 1)]
                )
                minors.append(int(char_poly(sub)(Fraction(0))))
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
        prev = work[k][k]
        minors.append(prev)
    return minors


_A_FORMULA = "a"
_B_DIAG = "b_diag"
_B_TRANS = "b_trans"
_D_FORMULA = "d"
_I_ODD = "i_odd"
_I_EVEN = "i_even"


def _merge_factors(parts: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    merged: dict[int, int] = {}
    for root, mult in parts:
        if mult:
            merged[root] = merged.get(root, 0) + mult
    return tuple(sorted(merged.items(), key=lambda t: -t[0]))


def _closed_form(kind: str, n: int) -> tuple[tuple[tuple[int, int], ...], int | None]:
    """Expected factor multiset and exact sign (None when only known up to sign)."""
    if kind == _A_FORMULA:
        return _merge_factors([(2 * n - 3, 1), (n - 3, n - 1), (-1, n * (n - 3) // 2)]), None
    if kind == _B_DIAG:
        return _merge_factors([(2 * n - 1, 1), (-1, n - 1)]), (-1) ** n
    if kind == _B_TRANS:
        return _merge_factors([(4 * n - 5, 1), (2 * n - 5, n - 1), (-1, n * (n - 2))]), 1
    if kind == _D_FORMULA:
        return (
            _merge_factors(
                [(4 * n - 7, 1), (1, n * (n - 1) // 2), (-3, n * (n - 3) // 2), (2 * n - 7, n - 1)]
            ),
            None,
        )
    if kind == _I_ODD:
        return _merge_factors([(n, 1), (0, n - 1)]), (-1) ** n
    if kind == _I_EVEN:
        return _merge_factors([(n - 1, 1), (-1, n // 2 - 1)]), (-1) ** (n // 2)
    raise ValueError(f"unknown closed form {kind!r}")


def _series_signature(name: str) -> tuple[int, int, int] | None:
    """Parse a group label into G(m, p, r) parameters when possible."""
    import re

    match = re.fullmatch(r"G\((\d+),(\d+),(\d+)\)", name.replace(" ", ""))
    if match:
        return tuple(int(x) for x in match.groups())
    match = re.fullmatch(r"A(\d+)", name)
    if match:
        return (1, 1, int(match.group(1)) + 1)
    match = re.fullmatch(r"B(\d+)", name)
    if match:
        return (2, 1, int(match.group(1)))
    match = re.fullmatch(r"D(\d+)", name)
    if match:
        return (2, 2, int(match.group(1)))
    match = re.fullmatch(r"I2\((\d+)\)", name)
    if match:
        return (int(match.group(1)),) * 2 + (2,)
    return None


def closed_form_check(g: ReflectionGroupData) -> dict:
    """Compare computed determinants against the closed formulas for A, B, D, I2."""
    sig = _series_signature(g.name)
    cases: list[tuple[int, str, int]] = []
    if sig is not None:
        m_param, p, r = sig
        if m_param == 1 and p == 1 and r >= 3:
            cases = [(0, _A_FORMULA, r)]
        elif m_param == 2 and p == 1 and r >= 2:
            for c, members in enumerate(g.classes):
                matrix = g.reflections[members[0]].matrix
                diagonal = all(matrix[i, j] == 0 for i in range(g.rank) for j in range(g.rank) if i != j)
                cases.append((c, _B_DIAG if diagonal else _B_TRANS, r))
        elif m_param == 2 and p == 2 and r >= 4:
            cases = [(0, _D_FORMULA, r)]
        elif m_param == p and r == 2 and m_param >= 3:
            kind = _I_ODD if m_param % 2 else _I_EVEN
            cases = [(c, kind, m_param) for c in range(len(g.classes))]
    if not cases:
        raise ValueError(f"no closed determinant formula for {g.name}")
    report = {"group": g.name, "ok": True, "cases": []}
    for c, kind, n in cases:
        expected_factors, expected_sign = _closed_form(kind, n)
        disc = discriminant(g, c)
        factors_match = disc.factors == expected_factors and disc.remainder.degree == 0
        sign_ok = True if expected_sign is None else disc.sign == expected_sign
        report["cases"].append(
            {
                "class_size": len(g.classes[c]),
                "expected_factors": list(expected_factors),
                "computed_factors": list(disc.factors),
                "computed_sign": disc.sign,
                "expected_sign": expected_sign,
                "match": factors_match and sign_ok,
            }
        )
        report["ok"] = report["ok"] and factors_match and sign_ok
    return report


def conjecture_scan(e_max: int, r_max: int, size_cap: int = 90) -> dict:
    """Test the predicted determinant of G(e,e,r), odd e, against computation."""
    cases = []
    for e in range(3, e_max + 1, 2):
        for r in range(3, r_max + 1):
            size = e * r * (r - 1) // 2
            if size > size_cap:
                continue
            expected = _merge_factors(
                [
                    ((2 * r - 3) * e, 1),
                    ((r - 3) * e, r - 1),
                    (0, (e - 1) * r * (r - 1) // 2),
                    (-e, r * (r - 3) // 2),
                ]
            )
            g = build_series(e, e, r)
            assert len(g.classes) == 1, "odd e should give a single reflection class"
            disc = discriminant(g, 0)
            match = disc.factors == expected and disc.remainder.degree == 0
            cases.append(
                {
                    "e": e,
                    "r": r,
                    "reflections": size,
                    "expected_factors": list(expected),
                    "computed_factors": list(disc.factors),
                    "computed_sign": disc.sign,
                    "match": match,
                }
            )
    return {"cases": cases, "all_match": all(case["match"] for case in cases)}
