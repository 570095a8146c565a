"""Write the expected-discriminant fixture shipped as data/tables.json.

The infinite-series and exceptional rows are transcribed by hand; the
closed-form instance rows are expanded from the formulas in
crg.quadratic.  Signs follow the determinant convention: a fully
factored discriminant of a size-d class carries sign (-1)^d.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from crg.quadratic import _A_FORMULA, _B_DIAG, _B_TRANS, _D_FORMULA, _I_EVEN, _I_ODD, _closed_form

OUT = Path(__file__).resolve().parent.parent / "src" / "crg" / "data" / "tables.json"

# G(e,e,r) rows, one reflection class each.
TABLE1_SERIES = {
    (3, 3): [[9, 1], [0, 8]],
    (4, 3): [[11, 1], [3, 3], [-1, 8]],
    (5, 3): [[15, 1], [0, 14]],
    (6, 3): [[17, 1], [5, 3], [-1, 14]],
    (7, 3): [[21, 1], [0, 20]],
    (8, 3): [[23, 1], [7, 3], [-1, 20]],
    (9, 3): [[27, 1], [0, 26]],
    (10, 3): [[29, 1], [9, 3], [-1, 26]],
    (11, 3): [[33, 1], [0, 32]],
    (12, 3): [[35, 1], [11, 3], [-1, 32]],
    (13, 3): [[39, 1], [0, 38]],
    (14, 3): [[41, 1], [13, 3], [-1, 38]],
    (3, 4): [[15, 1], [3, 3], [0, 12], [-3, 2]],
    (4, 4): [[19, 1], [3, 9], [-1, 12], [-5, 2]],
    (5, 4): [[25, 1], [5, 3], [0, 24], [-5, 2]],
    (6, 4): [[29, 1], [5, 9], [-1, 24], [-7, 2]],
    (3, 5): [[21, 1], [6, 4], [0, 20], [-3, 5]],
    (4, 5): [[27, 1], [7, 4], [3, 10], [-1, 20], [-5, 5]],
    (5, 5): [[35, 1], [10, 4], [0, 40], [-5, 5]],
}

# Exceptional rows keyed by Shephard-Todd number; values are per-class
# (class_size, factors) in ascending class size.
TABLE1_EXCEPTIONAL = {
    "G12": [(12, [[11, 1], [3, 6], [-1, 2], [-5, 3]])],
    "G13": [
        (6, [[17, 1], [5, 2], [-7, 3]]),
        (12, [[17, 1], [5, 2], [1, 6], [-7, 3]]),
    ],
    "G22": [(30, [[29, 1], [5, 15], [-1, 8], [-11, 6]])],
    "G23": [(15, [[13, 1], [1, 10], [-2, 4]])],
    "G24": [(21, [[17, 1], [3, 12], [-4, 8]])],
    "G27": [(45, [[41, 1], [5, 10], [1, 18], [-4, 16]])],
    "G28": [
        (12, [[15, 1], [3, 2], [-1, 9]]),
        (12, [[15, 1], [3, 2], [-1, 9]]),
    ],
    "G29": [(40, [[31, 1], [11, 4], [-1, 35]])],
    "G30": [(60, [[45, 1], [5, 18], [0, 16], [-3, 25]])],
    "G31": [(60, [[45, 1], [21, 5], [5, 9], [-3, 45]])],
    "G33": [(45, [[33, 1], [3, 24], [-3, 20]])],
    "G34": [(126, [[81, 1], [9, 35], [-3, 90]])],
    "G35": [(36, [[21, 1], [3, 20], [-3, 15]])],
    "G36": [(63, [[33, 1], [5, 27], [-3, 35]])],
    "G37": [(120, [[57, 1], [9, 35], [-3, 84]])],
}

# G(2e,e,r) rows: per-class (class_size, factors).
TABLE2 = {
    (2, 1, 2): [
        (2, [[3, 1], [-1, 1]]),
        (2, [[3, 1], [-1, 1]]),
    ],
    (4, 2, 2): [
        (2, [[5, 1], [-3, 1]]),
        (2, [[5, 1], [-3, 1]]),
        (2, [[5, 1], [-3, 1]]),
    ],
    (6, 3, 2): [
        (2, [[7, 1], [-5, 1]]),
        (6, [[7, 1], [3, 1], [1, 2], [-3, 2]]),
    ],
    (8, 4, 2): [
        (2, [[9, 1], [-7, 1]]),
        (4, [[9, 1], [1, 1], [-3, 2]]),
        (4, [[9, 1], [1, 1], [-3, 2]]),
    ],
    (10, 5, 2): [
        (2, [[11, 1], [-9, 1]]),
        (10, [[11, 1], [7, 1], [1, 4], [-3, 4]]),
    ],
    (12, 6, 2): [
        (2, [[13, 1], [-11, 1]]),
        (6, [[13, 1], [1, 2], [-3, 3]]),
        (6, [[13, 1], [1, 2], [-3, 3]]),
    ],
    (14, 7, 2): [
        (2, [[15, 1], [-13, 1]]),
        (14, [[15, 1], [11, 1], [1, 6], [-3, 6]]),
    ],
    (16, 8, 2): [
        (2, [[17, 1], [-15, 1]]),
        (8, [[17, 1], [1, 3], [-3, 4]]),
        (8, [[17, 1], [1, 3], [-3, 4]]),
    ],
    (18, 9, 2): [
        (2, [[19, 1], [-17, 1]]),
        (18, [[19, 1], [15, 1], [1, 8], [-3, 8]]),
    ],
    (20, 10, 2): [
        (2, [[21, 1], [-19, 1]]),
        (10, [[21, 1], [1, 4], [-3, 5]]),
        (10, [[21, 1], [1, 4], [-3, 5]]),
    ],
    (4, 2, 3): [
        (3, [[9, 1], [-3, 2]]),
        (12, [[13, 1], [5, 3], [1, 2], [-3, 6]]),
    ],
    (6, 3, 3): [
        (3, [[13, 1], [-5, 2]]),
        (18, [[19, 1], [3, 3], [1, 8], [-3, 6]]),
    ],
    (8, 4, 3): [
        (3, [[17, 1], [-7, 2]]),
        (24, [[25, 1], [9, 3], [1, 8], [-3, 12]]),
    ],
    (10, 5, 3): [
        (3, [[21, 1], [-9, 2]]),
        (30, [[31, 1], [7, 3], [1, 14], [-3, 12]]),
    ],
    (12, 6, 3): [
        (3, [[25, 1], [-11, 2]]),
        (36, [[37, 1], [13, 3], [1, 14], [-3, 18]]),
    ],
    (4, 2, 4): [
        (4, [[13, 1], [-3, 3]]),
        (24, [[21, 1], [5, 9], [-3, 14]]),
    ],
    (6, 3, 4): [
        (4, [[19, 1], [-5, 3]]),
        (36, [[31, 1], [7, 3], [3, 6], [1, 12], [-3, 12], [-5, 2]]),
    ],
    (8, 4, 4): [
        (4, [[25, 1], [-7, 3]]),
        (48, [[41, 1], [9, 9], [1, 12], [-3, 24], [-7, 2]]),
    ],
}


def sign_of(factors) -> int:
    return -1 if sum(mult for _, mult in factors) % 2 else 1


def row(group: str, class_size: int, factors) -> dict:
    return {
        "group": group,
        "class_size": class_size,
        "sign": sign_of(factors),
        "factors": [list(f) for f in factors],
    }


def closed_form_rows() -> list[dict]:
    rows = []
    for n in range(3, 8):
        factors, _ = _closed_form(_A_FORMULA, n)
        rows.append(row(f"A{n - 1}", n * (n - 1) // 2, factors))
    for n in range(2, 7):
        diag, _ = _closed_form(_B_DIAG, n)
        trans, _ = _closed_form(_B_TRANS, n)
        rows.append(row(f"B{n}", n, diag))
        rows.append(row(f"B{n}", n * (n - 1), trans))
    for n in range(4, 7):
        factors, _ = _closed_form(_D_FORMULA, n)
        rows.append(row(f"D{n}", n * (n - 1), factors))
    for e in range(3, 15):
        if e % 2:
            factors, _ = _closed_form(_I_ODD, e)
            rows.append(row(f"I2({e})", e, factors))
        else:
            factors, _ = _closed_form(_I_EVEN, e)
            rows.append(row(f"I2({e})", e // 2, factors))
            rows.append(row(f"I2({e})", e // 2, factors))
    return rows


def main() -> None:
    rows = []
    for (e, r), factors in sorted(TABLE1_SERIES.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        size = e * r * (r - 1) // 2
        rows.append(row(f"G({e},{e},{r})", size, factors))
    for name in sorted(TABLE1_EXCEPTIONAL, key=lambda s: int(s[1:])):
        for size, factors in TABLE1_EXCEPTIONAL[name]:
            rows.append(row(name, size, factors))
    for (m, p, r) in sorted(TABLE2, key=lambda k: (k[2], k[1])):
        for size, factors in TABLE2[(m, p, r)]:
            rows.append(row(f"G({m},{p},{r})", size, factors))
    rows.extend(closed_form_rows())
    for entry in rows:
        total = sum(mult for _, mult in entry["factors"])
        assert total == entry["class_size"], entry
    with open(OUT, "w") as fh:
        json.dump(rows, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(rows)} rows -> {OUT}")


if __name__ == "__main__":
    main()
