#!/usr/bin/env python3
"""Regenerate the vendored OEIS b-file snapshots under data/oeis/.

Each sequence is produced from its OEIS definition (recurrence, formula or
generating function), never from the C++ engine, so the crosscheck in
`bernoulli oeis-check` compares two independent routes.

Sequences marked RECONSTRUCTED could not be compared with oeis.org when the
snapshots were produced; run `bernoulli oeis-check --all --online` to compare
against live b-files once network access is available.
"""

import argparse
import pathlib
from math import comb

TERMS = 200


def linear(initial, coeffs, count):
    a = list(initial)
    while len(a) < count:
        a.append(sum(c * a[-1 - i] for i, c in enumerate(coeffs)))
    return a[:count]


def bernoulli_triangle(order, count):
    out = []
    n = 0
    while len(out) < count:
        row = [comb(n, k) for k in range(n + 1)]
        for _ in range(order - 1):
            acc = 0
            for k in range(n + 1):
                acc += row[k]
                row[k] = acc
        out.extend(row)
        n += 1
    return out[:count]


SEQUENCES = {
    "A000045": (0, "Fibonacci numbers: F(n) = F(n-1) + F(n-2), F(0)=0, F(1)=1.",
                lambda k: linear([0, 1], [1, 1], k), False),
    "A000930": (0, "Narayana's cows: a(n) = a(n-1) + a(n-3), a(0)=a(1)=a(2)=1.",
                lambda k: linear([1, 1, 1], [1, 0, 1], k), False),
    "A003269": (0, "a(n) = a(n-1) + a(n-4), a(0)=0, a(1)=a(2)=a(3)=1.",
                lambda k: linear([0, 1, 1, 1], [1, 0, 0, 1], k), False),
    "A003520": (0, "a(n) = a(n-1) + a(n-5), a(0)=...=a(4)=1.",
                lambda k: linear([1, 1, 1, 1, 1], [1, 0, 0, 0, 1], k), False),
    "A005251": (0, "a(n) = a(n-1) + a(n-2) + a(n-4), a(0)=0, a(1)=a(2)=a(3)=1.",
                lambda k: linear([0, 1, 1, 1], [1, 1, 0, 1], k), False),
    "A005314": (0, "a(n) = 2a(n-1) - a(n-2) + a(n-3), a(0)=0, a(1)=1, a(2)=2.",
                lambda k: linear([0, 1, 2], [2, -1, 1], k), False),
    "A008949": (0, "Triangle read by rows: T(n,k) = Sum_{j=0..k} C(n,j).",
                lambda k: bernoulli_triangle(2, k), False),
    "A027934": (0, "a(n) = 3a(n-1) - a(n-2) - 2a(n-3), a(0)=0, a(1)=1, a(2)=2.",
                lambda k: linear([0, 1, 2], [3, -1, -2], k), True),
    "A099568": (0, "Expansion of (1-x)/((1-2x)(1-x-x^3)).",
                lambda k: linear([1, 2, 4, 9], [3, -2, 1, -2], k), True),
    "A138653": (0, "a(n) = 3a(n-1) - 3a(n-2) + a(n-3) + a(n-4), a(0..3)=1,2,4,8.",
                lambda k: linear([1, 2, 4, 8], [3, -3, 1, 1], k), True),
    "A193605": (0, "Triangle read by rows: T(n,k) = Sum_{j=0..k} Sum_{i=0..j} C(n,i).",
                lambda k: bernoulli_triangle(3, k), False),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    root = pathlib.Path(__file__).resolve().parent.parent
    parser.add_argument("--out", type=pathlib.Path, default=root / "data" / "oeis")
    parser.add_argument("--terms", type=int, default=TERMS)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for ident, (offset, title, gen, reconstructed) in SEQUENCES.items():
        lines = [f"# {ident}: {title}"]
        if reconstructed:
            lines.append("# RECONSTRUCTED: definition not confirmed against oeis.org")
        lines.append("# Snapshot generated by tools/gen_oeis_snapshots.py")
        for i, v in enumerate(gen(args.terms)):
            lines.append(f"{offset + i} {v}")
        path = args.out / f"b{ident[1:]}.txt"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")


if __name__ == "__main__":
    main()
