"""Derive and certify the shipped generator data for G12, G13, G22, G24.

The rank-2 groups are assembled from binary polyhedral quaternion groups:
their reflections are i * M(q) for the pure unit quaternions q of the
relevant set, where M embeds quaternions into SU(2).  G24 is the rank-3
group over Q(zeta_7) whose reflections are the 21 conjugates of the
classical trace-one involution built from the quadratic Gauss sum.

Each emitted file is certified by rebuilding the group through the
package loader and checking reflection count, class sizes, and the full
factored discriminant of every class.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from crg.cyclotomic import CycNum, cyclotomic_field
from crg.groups import build_from_generators
from crg.quadratic import discriminant

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "crg" / "data"

EVEN_PERMS = [
    (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2),
    (1, 0, 3, 2), (1, 2, 0, 3), (1, 3, 2, 0),
    (2, 0, 1, 3), (2, 1, 3, 0), (2, 3, 0, 1),
    (3, 0, 2, 1), (3, 1, 0, 2), (3, 2, 1, 0),
]


def _imag_unit(field) -> CycNum:
    return field.zeta(field.n // 4)


def quaternion_matrix(field, a, b, c, d):
    """a + bi + cj + dk as a flattened 2x2 matrix, i = zeta_4."""
    i = _imag_unit(field)
    return (a + b * i, c + d * i, -c + d * i, a - b * i)


def mat2_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def binary_tetrahedral(field):
    """The 24 unit Hurwitz quaternions as coordinate 4-tuples."""
    half = Fraction(1, 2)
    out = []
    for axis in range(4):
        for sign in (1, -1):
            coords = [field.zero()] * 4
            coords[axis] = field.from_rational(sign)
            out.append(tuple(coords))
    for signs in product((1, -1), repeat=4):
        out.append(tuple(field.from_rational(half * s) for s in signs))
    return out


def octahedral_coset(field):
    """The 24 elements of the binary octahedral group outside 2T."""
    inv_sqrt2 = field.one() / (field.zeta(1) - field.zeta(3))
    out = []
    for hi in range(4):
        for lo in range(hi + 1, 4):
            for s1, s2 in product((1, -1), repeat=2):
                coords = [field.zero()] * 4
                coords[hi] = s1 * inv_sqrt2
                coords[lo] = s2 * inv_sqrt2
                out.append(tuple(coords))
    return out


def icosians(field):
    """All 120 unit icosians over Q(zeta_20)."""
    zeta5 = field.zeta(4)
    tau = 1 + zeta5 + zeta5**4
    half = Fraction(1, 2)
    out = list(binary_tetrahedral(field))
    base = (field.zero(), field.one(), tau - 1, tau)
    seen = set()
    for perm in EVEN_PERMS:
        for signs in product((1, -1), repeat=4):
            coords = tuple(
                (signs[slot] * base[perm[slot]]) * half for slot in range(4)
            )
            if coords not in seen:
                seen.add(coords)
                out.append(coords)
    assert len(out) == 120, len(out)
    return out


def pure_reflections(field, quaternions):
    """i * M(q) for every pure unit quaternion q in the list."""
    i = _imag_unit(field)
    refl = []
    for a, b, c, d in quaternions:
        if a == 0:
            mat = quaternion_matrix(field, a, b, c, d)
            refl.append(tuple(i * e for e in mat))
    return refl


def mat3_mul(x, y):
    out = []
    for r in range(3):
        row = []
        for c in range(3):
            acc = x[r][0] * y[0][c]
            for k in (1, 2):
                acc = acc + x[r][k] * y[k][c]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat3_trace(m):
    return m[0][0] + m[1][1] + m[2][2]


def mat3_is_identity(m) -> bool:
    return all(m[r][c] == (1 if r == c else 0) for r in range(3) for c in range(3))


def mat3_inverse_of_monomial(m, field):
    inv = [[field.zero()] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            if not m[r][c].is_zero():
                inv[c][r] = field.one() / m[r][c]
    return tuple(tuple(row) for row in inv)


def klein_reflections():
    """The 21 reflections of the rank-3 group over Q(zeta_7)."""
    field = cyclotomic_field(7)
    z = field.zeta()
    gauss = z + z**2 + z**4 - z**3 - z**5 - z**6  # square root of -7
    diffs = (z - z**6, z**2 - z**5, z**4 - z**3)
    a, b, c = diffs
    base = ((a, b, c), (b, c, a), (c, a, b))
    seed = None
    for sgn in (1, -1):
        scale = sgn * field.one() / gauss
        cand = tuple(tuple(scale * e for e in row) for row in base)
        if mat3_is_identity(mat3_mul(cand, cand)) and mat3_trace(cand) == 1:
            seed = cand
    assert seed is not None, "no trace-one involution among the sign choices"
    s_gen = (
        (z**4, field.zero(), field.zero()),
        (field.zero(), z**2, field.zero()),
        (field.zero(), field.zero(), z),
    )
    t_gen = (
        (field.zero(), field.one(), field.zero()),
        (field.zero(), field.zero(), field.one()),
        (field.one(), field.zero(), field.zero()),
    )
    conjugators = [
        (g, mat3_inverse_of_monomial(g, field)) for g in (s_gen, t_gen)
    ]
    known = {seed}
    frontier = [seed]
    while frontier:
        fresh = []
        for refl in frontier:
            for g, ginv in conjugators:
                conj = mat3_mul(mat3_mul(g, refl), ginv)
                if conj not in known:
                    known.add(conj)
                    fresh.append(conj)
        frontier = fresh
    assert len(known) == 21, len(known)
    flat = [tuple(e for row in m for e in row) for m in known]
    flat.sort(key=lambda mat: [(e.num, e.den) for e in mat])
    return field, flat


def greedy_generators(field, reflections, rank):
    """Smallest prefix-greedy set whose conjugation closure is everything."""
    full = set(reflections)

    def mul(x, y):
        if rank == 2:
            return mat2_mul(x, y)
        xr = tuple(x[i * 3 : (i + 1) * 3] for i in range(3))
        yr = tuple(y[i * 3 : (i + 1) * 3] for i in range(3))
        return tuple(e for row in mat3_mul(xr, yr) for e in row)

    chosen = [reflections[0]]
    while True:
        known = set(chosen)
        frontier = list(chosen)
        while frontier:
            fresh = []
            for y in frontier:
                for s in list(known):
                    for a, b in ((y, s), (s, y)):
                        conj = mul(mul(a, b), a)
                        if conj not in known:
                            known.add(conj)
                            fresh.append(conj)
            frontier = fresh
        if known == full:
            return chosen
        chosen.append(next(r for r in reflections if r not in known))


def entry_json(value: CycNum) -> dict:
    return {"num": list(value.num), "den": value.den}


def emit(name, rank, field, reflections, expected_classes, expected_discs):
    gens = greedy_generators(field, reflections, rank)
    data = {
        "name": name,
        "rank": rank,
        "conductor": field.n,
        "expected_reflection_count": len(reflections),
        "generators": [[entry_json(e) for e in mat] for mat in gens],
    }
    g = build_from_generators(data)
    sizes = sorted(len(c) for c in g.classes)
    assert sizes == sorted(expected_classes), (name, sizes)
    computed = sorted(
        (len(g.classes[c]), d.sign, d.factors)
        for c in range(len(g.classes))
        for d in [discriminant(g, c)]
    )
    assert computed == sorted(expected_discs), (name, computed)
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    path = OUT_DIR / f"{name}.json"
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(
        f"{name}: {len(reflections)} reflections, {len(gens)} generators, "
        f"classes {sizes} -> {path}"
    )


def main() -> None:
    f8 = cyclotomic_field(8)
    two_t = binary_tetrahedral(f8)
    coset = octahedral_coset(f8)

    g12_refl = pure_reflections(f8, coset)
    assert len(g12_refl) == 12, len(g12_refl)
    emit(
        "G12", 2, f8, g12_refl,
        [12],
        [(12, 1, ((11, 1), (3, 6), (-1, 2), (-5, 3)))],
    )

    g13_refl = pure_reflections(f8, two_t + coset)
    assert len(g13_refl) == 18, len(g13_refl)
    emit(
        "G13", 2, f8, g13_refl,
        [6, 12],
        [
            (6, 1, ((17, 1), (5, 2), (-7, 3))),
            (12, 1, ((17, 1), (5, 2), (1, 6), (-7, 3))),
        ],
    )

    f20 = cyclotomic_field(20)
    g22_refl = pure_reflections(f20, icosians(f20))
    assert len(g22_refl) == 30, len(g22_refl)
    emit(
        "G22", 2, f20, g22_refl,
        [30],
        [(30, 1, ((29, 1), (5, 15), (-1, 8), (-11, 6)))],
    )

    f7, g24_refl = klein_reflections()
    emit(
        "G24", 3, f7, g24_refl,
        [21],
        [(21, -1, ((17, 1), (3, 12), (-4, 8)))],
    )


if __name__ == "__main__":
    main()
