"""The infinitesimal representation on the span of the reflections.

Matrices act on basis vectors v_u indexed by reflections:
t_s.v_u = v_{sus} - alpha(s,u) v_s for u != s, and t_s.v_s = m v_s.
Everything is exact: entries are polynomials in m, or rationals after
evaluating at a point.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .arrangement import codim2_flats, parabolic_reflections
from .cyclotomic import cyclotomic_field
from .groups import ReflectionGroupData, build_series, class_stats, k_c
from .matrices import ExactMatrix, rank_and_kernel
from .polynomials import M, ParamPoly

_ONE = ParamPoly((1,))
_MINUS_ONE = ParamPoly((-1,))

Column = dict[int, ParamPoly]
Sparse = dict[int, Column]


class CheckResult:
    """Boolean with an attached witness for the first failure."""

    def __init__(self, ok: bool, detail=None) -> None:
        self.ok = ok
        self.detail = detail

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"CheckResult({self.ok}, detail={self.detail!r})"


class RepBundle:
    """Sparse column forms of t_s, s_s, p_s for one group."""

    def __init__(self, group: ReflectionGroupData, alpha=None) -> None:
        self.group = group
        self.alpha = group.alpha if alpha is None else alpha
        n = group.size
        conj = group.conj_table
        t_cols: list[Sparse] = []
        for s in range(n):
            cols: Sparse = {s: {s: M}}
            for u in range(n):
                if u == s:
                    continue
                col: Column = {conj[s][u]: _ONE}
                a = self.alpha[s][u]
                if a:
                    col[s] = col.get(s, ParamPoly(())) - a
                cols[u] = {row: val for row, val in col.items() if val}
            t_cols.append(cols)
        self.t_cols = tuple(t_cols)

    @property
    def size(self) -> int:
        return self.group.size

    def s_cols(self, s: int) -> Sparse:
        conj = self.group.conj_table[s]
        return {u: {conj[u]: _ONE} for u in range(self.size)}

    def p_cols(self, s: int) -> Sparse:
        cols: Sparse = {s: {s: ParamPoly((1, -1))}}
        for u in range(self.size):
            if u != s and self.alpha[s][u]:
                cols[u] = {s: ParamPoly((self.alpha[s][u],))}
        return cols

    def t_mat(self, s: int) -> ExactMatrix:
        return _dense(self.t_cols[s], self.size)

    def s_mat(self, s: int) -> ExactMatrix:
        return _dense(self.s_cols(s), self.size)

    def p_mat(self, s: int) -> ExactMatrix:
        return _dense(self.p_cols(s), self.size)

    def t_cols_at(self, s: int, m0: Fraction) -> dict[int, dict[int, Fraction]]:
        return {
            u: {row: val(m0) for row, val in col.items()}
            for u, col in self.t_cols[s].items()
        }

    def t_block(self, s: int, members, m0: Fraction | None = None) -> ExactMatrix:
        """Restriction of t_s to the span of v_u, u in members."""
        pos = {u: i for i, u in enumerate(members)}
        zero = ParamPoly(()) if m0 is None else Fraction(0)
        rows = [[zero] * len(members) for _ in members]
        for u, col in self.t_cols[s].items():
            if u not in pos:
                continue
            for row, val in col.items():
                if row in pos:
                    rows[pos[row]][pos[u]] = val if m0 is None else val(m0)
        return ExactMatrix.from_rows(rows)


def _dense(cols: Sparse, n: int) -> ExactMatrix:
    zero = ParamPoly(())
    rows = [[zero] * n for _ in range(n)]
    for u, col in cols.items():
        for row, val in col.items():
            rows[row][u] = val
    return ExactMatrix.from_rows(rows)


def build_rep(g: ReflectionGroupData, alpha=None) -> RepBundle:
    """Assemble the representation; alpha may be overridden for mutation tests."""
    return RepBundle(g, alpha)


def _col_sub(a: Column, b: Column) -> Column:
    out = dict(a)
    for row, val in b.items():
        res = out.get(row, None)
        res = -val if res is None else res - val
        if res:
            out[row] = res
        else:
            out.pop(row, None)
    return out


def _sparse_mul(a: Sparse, b: Sparse) -> Sparse:
    out: Sparse = {}
    for u, bcol in b.items():
        acc: Column = {}
        for k, bval in bcol.items():
            for row, aval in a.get(k, {}).items():
                cur = acc.get(row)
                term = aval * bval
                cur = term if cur is None else cur + term
                if cur:
                    acc[row] = cur
                else:
                    acc.pop(row, None)
        if acc:
            out[u] = acc
    return out


def _sparse_sum(parts) -> Sparse:
    out: Sparse = {}
    for cols in parts:
        for u, col in cols.items():
            acc = out.setdefault(u, {})
            for row, val in col.items():
                cur = acc.get(row)
                cur = val if cur is None else cur + val
                if cur:
                    acc[row] = cur
                else:
                    acc.pop(row, None)
    return {u: col for u, col in out.items() if col}


def _eval_sparse(cols: Sparse, m0: Fraction) -> dict:
    out = {}
    for u, col in cols.items():
        vals = {row: val(m0) for row, val in col.items()}
        vals = {row: v for row, v in vals.items() if v}
        if vals:
            out[u] = vals
    return out


def check_integrability(bundle: RepBundle, m0: Fraction | None = None) -> CheckResult:
    """Commutators [sum_{y in Z} t_y, t_x] vanish on every codimension-2 flat."""
    g = bundle.group
    table = codim2_flats(g)
    for idx, flat in enumerate(table.flats):
        parts = [bundle.t_cols[y] for y in flat.members]
        if m0 is not None:
            parts = [_eval_sparse(p, m0) for p in parts]
        total = _sparse_sum(parts)
        for x_pos, x in enumerate(flat.members):
            t_x = parts[x_pos]
            left = _sparse_mul(total, t_x)
            right = _sparse_mul(t_x, total)
            if left != right:
                return CheckResult(False, (idx, x))
    return CheckResult(True)


def check_equivariance(bundle: RepBundle, sample: int = 500) -> CheckResult:
    """Conjugating t_s by the permutation action of w gives t_{wsw}."""
    g = bundle.group
    n = g.size
    if n <= 60:
        pairs = [(w, s) for w in range(n) for s in range(n)]
    else:
        rng = random.Random(0)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(sample)]
    for w, s in pairs:
        conj = g.conj_table[w]
        moved: Sparse = {}
        for u, col in bundle.t_cols[s].items():
            moved[conj[u]] = {conj[row]: val for row, val in col.items()}
        if moved != bundle.t_cols[conj[s]]:
            return CheckResult(False, (w, s))
    return CheckResult(True)


def check_T_scalar(bundle: RepBundle, c: int) -> bool:
    """sum_s t_s acts on the class block as the scalar m - 1 + C(c)."""
    g = bundle.group
    members = g.classes[c]
    _, c_val = class_stats(g, c)
    expected = M + (c_val - 1)
    total = _sparse_sum(bundle.t_cols[s] for s in range(g.size))
    for u in members:
        col = total.get(u, {})
        if col != {u: expected}:
            return False
    return True


def _kernel_dim(mat: ExactMatrix) -> int:
    rank, _ = rank_and_kernel(mat)
    return mat.rows - rank


def _expected_multiplicities(m0: Fraction, k: int, total: int) -> dict[Fraction, int]:
    merged: dict[Fraction, int] = {}
    for value, mult in ((m0, 1), (Fraction(-1), k), (Fraction(1), total - 1 - k)):
        merged[value] = merged.get(value, 0) + mult
    return merged


def spectrum_check(bundle: RepBundle, s: int, m0) -> bool:
    """Eigenvalue multiplicities of t_s at m0 and the kernel decompositions."""
    m0 = Fraction(m0)
    if m0 == 1:
        raise ValueError("not semisimple")
    g = bundle.group
    n = g.size
    k_total = sum(k_c(g, c, s) for c in range(len(g.classes)))
    t_at = _dense_at(bundle.t_cols[s], n, m0)
    for value, mult in _expected_multiplicities(m0, k_total, n).items():
        if _kernel_dim(t_at - ExactMatrix.identity(n, value)) != mult:
            return False
    s_dense = _dense_at(bundle.s_cols(s), n, m0)
    eye = ExactMatrix.identity(n, Fraction(1))
    if m0 != -1:
        # Ker(s-1) = Ker(t-m0) (+) Ker(t-1) and Ker(s+1) = Ker(t+1):
        # dimensions plus eigenvector containment pin both identities.
        if _kernel_dim(s_dense - eye) != n - k_total:
            return False
        if _kernel_dim(s_dense + eye) != k_total:
            return False
        for value, sign in ((m0, -1), (Fraction(1), -1), (Fraction(-1), 1)):
            shifted = t_at - ExactMatrix.identity(n, value)
            _, kernel = rank_and_kernel(shifted)
            against = s_dense + ExactMatrix.identity(n, Fraction(sign))
            for vec in kernel:
                if any(against.apply(vec)):
                    return False
    c = g.class_of[s]
    members = g.classes[c]
    block = bundle.t_block(s, members, m0)
    kc = k_c(g, c, s)
    for value, mult in _expected_multiplicities(m0, kc, len(members)).items():
        if _kernel_dim(block - ExactMatrix.identity(len(members), value)) != mult:
            return False
    return True


def _dense_at(cols: Sparse, n: int, m0: Fraction) -> ExactMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u, col in cols.items():
        for row, val in col.items():
            rows[row][u] = val(m0) if isinstance(val, ParamPoly) else Fraction(val)
    return ExactMatrix.from_rows(rows)


def dual_check(bundle: RepBundle) -> bool:
    """The transpose of t_s implements the dual-basis formulas."""
    g = bundle.group
    for s in range(g.size):
        conj = g.conj_table[s]
        expected: Sparse = {}
        col_s: Column = {s: M}
        for u in range(g.size):
            if u == s:
                continue
            expected[u] = {conj[u]: _ONE}
            a = bundle.alpha[s][u]
            if a:
                col_s[u] = ParamPoly((-a,))
        expected[s] = col_s
        transposed: Sparse = {}
        for u, col in bundle.t_cols[s].items():
            for row, val in col.items():
                transposed.setdefault(row, {})[u] = val
        if transposed != expected:
            return False
    return True


def parabolic_restriction_check(bundle: RepBundle, seed) -> bool:
    """Restriction to a parabolic matches its own rebuilt action; the
    quotient is the bare conjugation permutation."""
    g = bundle.group
    inside = set(parabolic_reflections(g, seed))
    if not inside or len(inside) == g.size:
        raise ValueError("improper seed")
    conj = g.conj_table
    for s in inside:
        for u in range(g.size):
            col = bundle.t_cols[s].get(u, {})
            if u in inside:
                if any(row not in inside for row in col):
                    return False
                sub_alpha = sum(1 for y in inside if conj[y][s] == u)
                expected: Column = {s: M} if u == s else {conj[s][u]: _ONE}
                if u != s and sub_alpha:
                    expected[s] = expected.get(s, ParamPoly(())) - sub_alpha
                    expected = {r: v for r, v in expected.items() if v}
                if col != expected:
                    return False
            else:
                residual = {row: val for row, val in col.items() if row not in inside}
                if residual != {conj[s][u]: _ONE}:
                    return False
    return True


def bn_model_check(n: int) -> bool:
    """The hyperoctahedral action on the diagonal class matches the closed
    formulas: t_i.x_j = x_j - 2 x_i, t_i.x_i = m x_i, transpositions permute."""
    g = build_series(2, 1, n)
    bundle = build_rep(g)
    diag = None
    for members in g.classes:
        mat = g.reflections[members[0]].matrix
        if all(mat[i, j] == 0 for i in range(g.rank) for j in range(g.rank) if i != j):
            diag = members
    if diag is None or len(diag) != n:
        return False
    axis = {}
    for s in diag:
        mat = g.reflections[s].matrix
        axis[s] = next(i for i in range(g.rank) if mat[i, i] == -1)
    for s in diag:
        cols = bundle.t_cols[s]
        if cols[s] != {s: M}:
            return False
        for u in diag:
            if u != s and cols[u] != {u: _ONE, s: ParamPoly((-2,))}:
                return False
    for members in g.classes:
        if members is diag:
            continue
        for s in members:
            mat = g.reflections[s].matrix
            for u in diag:
                i = axis[u]
                j = next(k for k in range(g.rank) if mat[k, i] != 0)
                image = next(x for x in diag if axis[x] == j)
                if bundle.t_cols[s][u] != {image: _ONE}:
                    return False
    return True


DIHEDRAL_CHARACTER_NOTE = (
    "two-dimensional dihedral characters are evaluated on the explicit "
    "matrix model: trace 0 on reflections, zeta^k + zeta^-k on rotations"
)


def dihedral_m0_check(e: int) -> bool:
    """At m = 0 the odd dihedral representation restricted to the zero-sum
    hyperplane is the permutation action, with character sum chi_U = sum chi_k."""
    if e % 2 == 0 or e < 3:
        raise ValueError("e must be odd and at least 3")
    g = build_series(e, e, 2)
    bundle = build_rep(g)
    n = g.size
    zero = Fraction(0)
    # (i) the kernel of the form at m = 0 is the zero-sum hyperplane
    ones = ExactMatrix.from_rows([[Fraction(1)] * n for _ in range(n)])
    _, kernel = rank_and_kernel(ones)
    if len(kernel) != n - 1 or any(sum(v) != 0 for v in kernel):
        return False
    # (ii) t_s at m = 0 agrees with the permutation action on that hyperplane
    for s in range(n):
        t_at = _dense_at(bundle.t_cols[s], n, zero)
        s_at = _dense_at(bundle.s_cols(s), n, zero)
        diff = t_at - s_at
        for vec in kernel:
            if diff.apply(vec) != [zero] * n:
                return False
    # (iii) chi_U(g) = #commuting reflections - 1 equals the character sum
    field = cyclotomic_field(g.conductor)
    elements = _closure([g.reflections[s].matrix for s in range(n)], g.rank, field)
    refl_mats = [g.reflections[s].matrix for s in range(n)]
    for w in elements:
        chi_u = sum(1 for m_s in refl_mats if w * m_s == m_s * w) - 1
        if w[1, 0] == 0:
            # w = diag(zeta^a, zeta^-a); read a off the top-left entry
            a = next(k for k in range(e) if w[0, 0] == field.zeta(k))
            total = sum(
                (
                    field.zeta((k * a) % e) + field.zeta((-k * a) % e)
                    for k in range(1, (e - 1) // 2 + 1)
                ),
                field.zero(),
            )
        else:
            total = field.zero()
        if total != chi_u:
            return False
    return True


def _closure(generators, rank, field):
    eye = ExactMatrix.identity(rank, field.one())
    seen = {eye}
    frontier = [eye]
    while frontier:
        nxt = []
        for w in frontier:
            for gen in generators:
                prod = w * gen
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen
