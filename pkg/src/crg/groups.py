"""Reflection group construction: infinite series, Coxeter root systems and
generator data files, with conjugation tables and class statistics."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import lru_cache
from math import gcd
from pathlib import Path
from typing import Sequence

from .cyclotomic import CycNum, CyclotomicField, cyclotomic_field
from .graphs import SimpleGraph
from .matrices import ExactMatrix

# a packed matrix is (den, rows) with rows[i][j] an int coefficient tuple
Packed = tuple[int, tuple]


def _pack_normalize(den: int, rows: tuple) -> Packed:
    if den < 0:
        den = -den
        rows = tuple(
            tuple(tuple(-c for c in ent) for ent in row) for row in rows
        )
    g = den
    for row in rows:
        for ent in row:
            for c in ent:
                if c:
                    g = gcd(g, c)
        if g == 1:
            return den, rows
    if g == 1:
        return den, rows
    return den // g, tuple(
        tuple(tuple(c // g for c in ent) for ent in row) for row in rows
    )


def _pack_mul(a: Packed, b: Packed, field: CyclotomicField) -> Packed:
    da, ra = a
    db, rb = b
    r = len(ra)
    d = field.degree
    out_rows = []
    for i in range(r):
        arow = ra[i]
        accs = [[0] * (2 * d - 1) for _ in range(r)]
        for k in range(r):
            av = arow[k]
            if not any(av):
                continue
            brow = rb[k]
            for j in range(r):
                bv = brow[j]
                if not any(bv):
                    continue
                acc = accs[j]
                for x, ax in enumerate(av):
                    if ax:
                        for y, by in enumerate(bv):
                            if by:
                                acc[x + y] += ax * by
        out_rows.append(tuple(field.reduce(acc) for acc in accs))
    return _pack_normalize(da * db, tuple(out_rows))


def _pack_identity(rank: int, field: CyclotomicField) -> Packed:
    d = field.degree
    one = field.power_rows[0]
    zero = (0,) * d
    return 1, tuple(
        tuple(one if i == j else zero for j in range(rank)) for i in range(rank)
    )


def _pack_from_cycnums(entries: Sequence[Sequence[CycNum]]) -> Packed:
    den = 1
    for row in entries:
        for e in row:
            den = den * e.den // gcd(den, e.den)
    rows = tuple(
        tuple(tuple(c * (den // e.den) for c in e.num) for e in row) for row in entries
    )
    return _pack_normalize(den, rows)


def _pack_entry(p: Packed, i: int, j: int, field: CyclotomicField) -> CycNum:
    den, rows = p
    return CycNum(field, rows[i][j], den)


class GroupElement:
    """A group element as a canonically reduced matrix over one cyclotomic field."""

    def __init__(self, field: CyclotomicField, packed: Packed) -> None:
        self.field = field
        self.packed = packed

    @property
    def matrix(self) -> ExactMatrix:
        rank = len(self.packed[1])
        return ExactMatrix(
            rank,
            rank,
            [
                _pack_entry(self.packed, i, j, self.field)
                for i in range(rank)
                for j in range(rank)
            ],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.field is other.field and self.packed == other.packed

    def __hash__(self) -> int:
        return hash((self.field.n, self.packed))

    def __repr__(self) -> str:
        return f"GroupElement({self.field.n}, {self.packed})"


class Reflection:
    """One order-2 reflection with its root line and defining linear form."""

    def __init__(
        self,
        index: int,
        element: GroupElement,
        root: tuple[CycNum, ...],
        coform: tuple[CycNum, ...],
    ) -> None:
        self.index = index
        self.element = element
        self.root = root
        self.coform = coform

    @property
    def matrix(self) -> ExactMatrix:
        return self.element.matrix

    def __repr__(self) -> str:
        return f"Reflection({self.index})"


def _root_and_coform(
    packed: Packed, field: CyclotomicField
) -> tuple[tuple[CycNum, ...], tuple[CycNum, ...]]:
    """Root and coform of (s - I), with a full rank-1 certification."""
    den, rows = packed
    rank = len(rows)
    diff = [
        [
            _pack_entry(packed, i, j, field) - (1 if i == j else 0)
            for j in range(rank)
        ]
        for i in range(rank)
    ]
    pivot = None
    for i in range(rank):
        for j in range(rank):
            if diff[i][j]:
                pivot = (i, j)
                break
        if pivot:
            break
    if pivot is None:
        raise ValueError("generator fails the reflection test: equals the identity")
    i0, j0 = pivot
    col = [diff[i][j0] for i in range(rank)]
    first = next(c for c in col if c)
    root = tuple(c / first for c in col)
    row = diff[i0]
    firstr = next(c for c in row if c)
    coform = tuple(c / firstr for c in row)
    # first == firstr == diff[i0][j0], the normalization pivot
    scale = first
    for i in range(rank):
        for j in range(rank):
            if diff[i][j] != root[i] * coform[j] * scale:
                raise ValueError("generator fails the reflection test: rank exceeds 1")
    return root, coform


class ReflectionGroupData:
    """Immutable bundle of reflections, conjugation table and class data."""

    def __init__(
        self,
        name: str,
        rank: int,
        conductor: int,
        reflections: tuple[Reflection, ...],
        conj_table: tuple[tuple[int, ...], ...],
        expected_reflection_count: int,
    ) -> None:
        self.name = name
        self.rank = rank
        self.conductor = conductor
        self.field = cyclotomic_field(conductor)
        self.reflections = reflections
        self.conj_table = conj_table
        self.expected_reflection_count = expected_reflection_count

        n = len(reflections)
        alpha = [[0] * n for _ in range(n)]
        for y in range(n):
            crow = conj_table[y]
            for u in range(n):
                s = crow[u]
                if s != u:
                    alpha[s][u] += 1
        self.alpha = tuple(tuple(row) for row in alpha)

        class_of = [-1] * n
        classes: list[tuple[int, ...]] = []
        for start in range(n):
            if class_of[start] >= 0:
                continue
            orbit = {start}
            frontier = [start]
            while frontier:
                s = frontier.pop()
                for y in range(n):
                    t = conj_table[y][s]
                    if t not in orbit:
                        orbit.add(t)
                        frontier.append(t)
            idx = len(classes)
            members = tuple(sorted(orbit))
            classes.append(members)
            for s in members:
                class_of[s] = idx
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)

    @property
    def size(self) -> int:
        return len(self.reflections)

    def commutes(self, s: int, u: int) -> bool:
        return self.conj_table[u][s] == s

    def __repr__(self) -> str:
        return f"ReflectionGroupData({self.name}: {self.size} reflections)"


def _assemble(
    name: str,
    rank: int,
    conductor: int,
    packed_set: set[Packed],
    expected: int,
    mismatch_error: str | None = None,
) -> ReflectionGroupData:
    field = cyclotomic_field(conductor)
    if len(packed_set) != expected:
        msg = mismatch_error or (
            f"{name}: built {len(packed_set)} reflections, expected {expected}"
        )
        raise ValueError(msg)
    ordered = sorted(packed_set)
    index = {p: i for i, p in enumerate(ordered)}
    ident = _pack_identity(rank, field)
    reflections = []
    for i, p in enumerate(ordered):
        if _pack_mul(p, p, field) != ident:
            raise ValueError("generator fails the reflection test: order is not 2")
        root, coform = _root_and_coform(p, field)
        reflections.append(Reflection(i, GroupElement(field, p), root, coform))
    conj = []
    for y in ordered:
        row = []
        for s in ordered:
            ys = _pack_mul(y, s, field)
            ysy = _pack_mul(ys, y, field)
            t = index.get(ysy)
            if t is None:
                raise ValueError(f"{name}: reflection set is not conjugation-closed")
            row.append(t)
        conj.append(tuple(row))
    return ReflectionGroupData(
        name, rank, conductor, tuple(reflections), tuple(conj), expected
    )


def _zeta_coeff_vector(field: CyclotomicField, m_param: int, k: int) -> tuple[int, ...]:
    """Coefficient vector of the m_param-th root of unity zeta^k in field."""
    k %= m_param
    if field.n == m_param:
        return field.power_rows[k]
    # conductor 1 hosts m_param <= 2
    return ((-1) ** k if m_param == 2 else 1,)


@lru_cache(maxsize=None)
def build_series(m_param: int, p: int, r: int) -> ReflectionGroupData:
    """The order-2 reflections of G(m_param, p, r) on C^r."""
    if m_param < 1 or p < 1 or r < 1:
        raise ValueError("series parameters must be positive")
    if m_param % p:
        raise ValueError(f"G({m_param},{p},{r}): p must divide m")
    if m_param // p not in (1, 2):
        raise ValueError("unsupported pseudo-reflection series")
    conductor = m_param if m_param > 2 else 1
    field = cyclotomic_field(conductor)
    d = field.degree
    zero = (0,) * d
    one = field.power_rows[0]
    packed: set[Packed] = set()
    for i in range(r):
        for j in range(i + 1, r):
            for k in range(m_param):
                zk = _zeta_coeff_vector(field, m_param, k)
                zki = _zeta_coeff_vector(field, m_param, -k)
                rows = []
                for a in range(r):
                    if a == i:
                        rows.append(tuple(zk if b == j else zero for b in range(r)))
                    elif a == j:
                        rows.append(tuple(zki if b == i else zero for b in range(r)))
                    else:
                        rows.append(tuple(one if b == a else zero for b in range(r)))
                packed.add(_pack_normalize(1, tuple(rows)))
    if m_param // p == 2:
        neg = tuple(-c for c in one)
        for i in range(r):
            rows = tuple(
                tuple((neg if a == i else one) if b == a else zero for b in range(r))
                for a in range(r)
            )
            packed.add(_pack_normalize(1, rows))
    expected = m_param * r * (r - 1) // 2 + (r if m_param // p == 2 else 0)
    return _assemble(f"G({m_param},{p},{r})", r, conductor, packed, expected)


def _reflection_from_real_root(
    root: Sequence[CycNum], field: CyclotomicField, rank: int
) -> Packed:
    """x -> x - 2(x,a)/(a,a) a for the real symmetric dot product."""
    norm = root[0] * root[0]
    for c in root[1:]:
        norm = norm + c * c
    entries = []
    for i in range(rank):
        row = []
        for j in range(rank):
            val = -2 * root[i] * root[j] / norm
            if i == j:
                val = val + 1
            row.append(val)
        entries.append(row)
    return _pack_from_cycnums(entries)


def _h_series_roots(rank: int) -> list[tuple]:
    """Icosahedral root systems over Q(zeta_5)."""
    f = cyclotomic_field(5)
    one = f.one()
    zero = f.zero()
    tau = -f.zeta(2) - f.zeta(3)
    itau = tau - 1  # 1/tau
    half = f.from_rational(Fraction(1, 2))
    roots = []
    if rank == 3:
        for pos in range(3):
            for sgn in (one, -one):
                v = [zero, zero, zero]
                v[pos] = sgn
                roots.append(tuple(v))
        for shift in range(3):  # cyclic permutations only
            for s0 in (1, -1):
                for s1 in (1, -1):
                    for s2 in (1, -1):
                        base = [s0 * tau * half, s1 * half, s2 * itau * half]
                        roots.append(tuple(base[(i - shift) % 3] for i in range(3)))
    else:
        for pos in range(4):
            for sgn in (one, -one):
                v = [zero] * 4
                v[pos] = sgn
                roots.append(tuple(v))
        for signs in range(16):
            roots.append(
                tuple(half if signs >> i & 1 else -half for i in range(4))
            )
        for s0 in (1, -1):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    base = (s0 * tau * half, s1 * half, s2 * itau * half, zero)
                    for perm in _even_permutations(4):
                        roots.append(tuple(base[perm[i]] for i in range(4)))
    return roots


def _even_permutations(n: int) -> list[tuple[int, ...]]:
    from itertools import permutations

    out = []
    for perm in permutations(range(n)):
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        if inv % 2 == 0:
            out.append(perm)
    return out


def _e_series_roots(kind: str) -> list[tuple]:
    """E8 roots over Q, with E7 and E6 cut out by orthogonality to roots."""
    f = cyclotomic_field(1)
    half = f.from_rational(Fraction(1, 2))
    one = f.one()
    zero = f.zero()
    roots: list[tuple] = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (one, -one):
                for sj in (one, -one):
                    v = [zero] * 8
                    v[i] = si
                    v[j] = sj
                    roots.append(tuple(v))
    for signs in range(256):
        if bin(signs).count("1") % 2 == 0:
            roots.append(
                tuple(-half if signs >> i & 1 else half for i in range(8))
            )
    if kind == "E8":
        return roots

    def dot(a, b):
        acc = a[0] * b[0]
        for x, y in zip(a[1:], b[1:]):
            acc = acc + x * y
        return acc

    e7_axis = [zero] * 8
    e7_axis[6] = one
    e7_axis[7] = one
    cut = [tuple(e7_axis)]
    if kind == "E6":
        e6_axis = [zero] * 8
        e6_axis[5] = one
        e6_axis[6] = one
        cut.append(tuple(e6_axis))
    return [r for r in roots if all(dot(r, ax).is_zero() for ax in cut)]


def _f4_roots() -> list[tuple]:
    f = cyclotomic_field(1)
    one = f.one()
    zero = f.zero()
    half = f.from_rational(Fraction(1, 2))
    roots: list[tuple] = []
    for i in range(4):
        for sgn in (one, -one):
            v = [zero] * 4
            v[i] = sgn
            roots.append(tuple(v))
    for i in range(4):
        for j in range(i + 1, 4):
            for si in (one, -one):
                for sj in (one, -one):
                    v = [zero] * 4
                    v[i] = si
                    v[j] = sj
                    roots.append(tuple(v))
    for signs in range(16):
        roots.append(tuple(-half if signs >> i & 1 else half for i in range(4)))
    return roots


_ROOT_SYSTEM_SIZES = {"H3": 15, "H4": 60, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@lru_cache(maxsize=None)
def build_coxeter(kind: str, rank: int | None = None) -> ReflectionGroupData:
    """Coxeter groups by type; A/B/D/I2 delegate to the series builder."""
    kind = kind.upper()
    if kind == "A":
        if rank is None or not 1 <= rank <= 9:
            raise ValueError("type A needs a rank between 1 and 9")
        g = build_series(1, 1, rank + 1)
    elif kind == "B":
        if rank is None or not 2 <= rank <= 9:
            raise ValueError("type B needs a rank between 2 and 9")
        g = build_series(2, 1, rank)
    elif kind == "D":
        if rank is None or not 3 <= rank <= 9:
            raise ValueError("type D needs a rank between 3 and 9")
        g = build_series(2, 2, rank)
    elif kind == "I2":
        if rank is None or rank < 3:
            raise ValueError("type I2 needs e >= 3")
        g = build_series(rank, rank, 2)
    elif kind in ("H3", "H4"):
        if rank is not None:
            raise ValueError(f"type {kind} takes no rank")
        n = 3 if kind == "H3" else 4
        field = cyclotomic_field(5)
        packed = {
            _reflection_from_real_root(r, field, n) for r in _h_series_roots(n)
        }
        return _assemble(kind, n, 5, packed, _ROOT_SYSTEM_SIZES[kind])
    elif kind in ("F4", "E6", "E7", "E8"):
        if rank is not None:
            raise ValueError(f"type {kind} takes no rank")
        field = cyclotomic_field(1)
        roots = _f4_roots() if kind == "F4" else _e_series_roots(kind)
        n = 4 if kind == "F4" else 8
        packed = {_reflection_from_real_root(r, field, n) for r in roots}
        return _assemble(kind, n, 1, packed, _ROOT_SYSTEM_SIZES[kind])
    else:
        raise ValueError(f"unsupported type {kind!r}")
    label = f"{kind}{rank}" if kind != "I2" else f"I2({rank})"
    return ReflectionGroupData(
        label, g.rank, g.conductor, g.reflections, g.conj_table,
        g.expected_reflection_count,
    )


def data_dir() -> Path:
    override = os.environ.get("CRG_DATA_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def build_from_generators(data: dict) -> ReflectionGroupData:
    """Closure of a generator set under reflection-conjugation."""
    name = data["name"]
    rank = int(data["rank"])
    conductor = int(data["conductor"])
    expected = int(data["expected_reflection_count"])
    if conductor < 1:
        raise ValueError("unknown conductor")
    field = cyclotomic_field(conductor)
    d = field.degree
    gens = []
    for mat in data["generators"]:
        if len(mat) != rank * rank:
            raise ValueError(f"{name}: generator matrix is not {rank}x{rank}")
        entries = []
        for ent in mat:
            num = ent["num"]
            if len(num) != d or ent["den"] < 1:
                raise ValueError(f"{name}: malformed matrix entry")
            entries.append(CycNum(field, tuple(num), ent["den"]))
        rows = [entries[i * rank : (i + 1) * rank] for i in range(rank)]
        gens.append(_pack_from_cycnums(rows))
    ident = _pack_identity(rank, field)
    for g in gens:
        if _pack_mul(g, g, field) != ident:
            raise ValueError("generator fails the reflection test: order is not 2")
        _root_and_coform(g, field)
    known: set[Packed] = set(gens)
    frontier = list(gens)
    while frontier:
        fresh: list[Packed] = []
        snapshot = list(known)
        for y in frontier:
            for s in snapshot:
                for a, b in ((y, s), (s, y)):
                    ab = _pack_mul(_pack_mul(a, b, field), a, field)
                    if ab not in known:
                        known.add(ab)
                        fresh.append(ab)
        if len(known) > expected:
            raise ValueError(
                "metadata mismatch: generator set does not reach all reflections"
            )
        frontier = fresh
    return _assemble(
        name,
        rank,
        conductor,
        known,
        expected,
        "metadata mismatch: generator set does not reach all reflections",
    )


def load_generator_group(name: str) -> ReflectionGroupData:
    """Build a shipped exceptional group from its JSON data file."""
    return _load_generator_group(name, str(data_dir()))


@lru_cache(maxsize=None)
def _load_generator_group(name: str, directory: str) -> ReflectionGroupData:
    path = Path(directory) / f"{name}.json"
    if not path.exists():
        raise ValueError(f"no generator data for {name}")
    with open(path) as fh:
        return build_from_generators(json.load(fh))


def alpha(g: ReflectionGroupData, s: int, u: int) -> int:
    """Number of reflections y with y u y = s; defined off the diagonal."""
    if s == u:
        raise ValueError("alpha is defined for distinct reflections only")
    return g.alpha[s][u]


def class_stats(g: ReflectionGroupData, c: int) -> tuple[int, int]:
    """(N, C): row sum of the class form, and commuting reflection count."""
    members = g.classes[c]
    s = members[0]
    n_val = 1 + sum(g.alpha[s][u] for u in members if u != s)
    c_val = sum(1 for u in range(g.size) if g.commutes(s, u))
    return n_val, c_val


def k_c(g: ReflectionGroupData, c: int, s: int) -> int:
    """Half the number of class members not commuting with s."""
    count = sum(1 for u in g.classes[c] if not g.commutes(s, u))
    if count % 2:
        raise AssertionError("non-commuting count is odd")
    return count // 2


def class_graph(g: ReflectionGroupData, c: int) -> SimpleGraph:
    """Vertices are the class members (in index order), edges where alpha > 0."""
    members = g.classes[c]
    pos = {s: i for i, s in enumerate(members)}
    edges = []
    for i, s in enumerate(members):
        for u in members[i + 1 :]:
            if g.alpha[s][u] > 0:
                edges.append((i, pos[u]))
    return SimpleGraph(len(members), edges)
