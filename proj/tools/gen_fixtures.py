#!/usr/bin/env python3
"""Regenerate the offline b-file fixtures under data/bfiles.

The build sandbox has no route to oeis.org, so every fixture is rebuilt here
from the sequence's own definition. Nothing in this script shares code with
the C++ library: triangles are written as explicit row formulas and the
permutation tables are produced by walking the grid cell by cell.

Usage: tools/gen_fixtures.py [output-dir] [terms]
"""

import itertools
import os
import sys

TERMS = 1000


def primes_upto(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, ok in enumerate(sieve) if ok]


PRIMES = primes_upto(200_000)


def prime(n):
    return PRIMES[n - 1]


def phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def iterate(f, times, x):
    for _ in range(times):
        x = f(x)
    return x


def triangle(row_fn, first_row=1):
    """Triangle read by rows; row_fn(n) yields the entries of row n."""
    for n in itertools.count(first_row):
        yield from row_fn(n)


def antidiagonals(table):
    """Square array read by antidiagonals, row index ascending."""
    for d in itertools.count(1):
        for i in range(1, d + 1):
            yield table(i, d + 1 - i)


def transposed(table):
    return lambda i, j: table(j, i)


def numbering(walk, cells):
    """Position table of a traversal: cell -> 1-based visit number."""
    pos = {}
    for n, cell in enumerate(itertools.islice(walk(), cells), start=1):
        pos[cell] = n
    return lambda i, j: pos[(i, j)]


def boustrophedon_walk():
    for d in itertools.count(1):
        rows = range(1, d + 1) if d % 2 == 0 else range(d, 0, -1)
        for i in rows:
            yield (i, d + 1 - i)


def edges_in_walk():
    for d in itertools.count(1):
        lo, hi = 1, d
        while lo < hi:
            yield (lo, d + 1 - lo)
            yield (hi, d + 1 - hi)
            lo += 1
            hi -= 1
        if lo == hi:
            yield (lo, lo)


def shell_walk(reverse_odd):
    for s in itertools.count(1):
        side = [(r, s) for r in range(1, s + 1)] + [(s, c) for c in range(s - 1, 0, -1)]
        if reverse_odd and s % 2 == 1:
            side.reverse()
        yield from side


def concat(a, b):
    return int(f"{a}{b}")


def take(gen, n):
    return list(itertools.islice(gen, n))


def definitions(terms):
    # Permutation tables need every cell of the first antidiagonals that the
    # reading touches; 200 diagonals cover 20100 cells.
    span = 200 * 201 // 2
    walk_cells = 250 * 250
    bous = numbering(boustrophedon_walk, walk_cells)
    edges = numbering(edges_in_walk, walk_cells)
    angle = numbering(lambda: shell_walk(False), walk_cells)
    oxplow = numbering(lambda: shell_walk(True), walk_cells)
    assert span >= terms

    return {
        "A000040": (1, [prime(n) for n in range(1, terms + 1)]),
        "A000010": (1, [phi(n) for n in range(1, terms + 1)]),
        "A010554": (1, [iterate(phi, 2, n) for n in range(1, terms + 1)]),
        "A049099": (1, [iterate(phi, 3, n) for n in range(1, terms + 1)]),
        "A049100": (1, [iterate(phi, 4, n) for n in range(1, terms + 1)]),
        "A006450": (1, [prime(prime(n)) for n in range(1, terms + 1)]),
        "A002260": (1, take(triangle(lambda n: range(1, n + 1)), terms)),
        "A004736": (1, take(triangle(lambda n: range(n, 0, -1)), terms)),
        "A002024": (1, take(triangle(lambda n: [n] * n), terms)),
        "A128076": (1, take(triangle(lambda n: (2 * n - k for k in range(1, n + 1))), terms)),
        "A131914": (1, take(triangle(lambda n: (3 * n - 2 * k for k in range(1, n + 1))), terms)),
        "A204004": (1, take(antidiagonals(lambda i, j: max(2 * i + j - 2, i + 2 * j - 2)), terms)),
        "A204008": (1, take(antidiagonals(lambda i, j: max(3 * i + j - 3, i + 3 * j - 3)), terms)),
        "A143182": (0, take(triangle(lambda n: (1 + abs(n - 2 * m) for m in range(0, n + 1)), 0), terms)),
        "A066686": (1, take(antidiagonals(concat), terms)),
        "A056011": (1, take(antidiagonals(bous), terms)),
        "A056023": (1, take(antidiagonals(transposed(bous)), terms)),
        "A064578": (1, take(antidiagonals(edges), terms)),
        "A194982": (1, take(antidiagonals(transposed(edges)), terms)),
        "A060734": (1, take(antidiagonals(angle), terms)),
        "A060736": (1, take(antidiagonals(transposed(angle)), terms)),
        "A081344": (1, take(antidiagonals(oxplow), terms)),
        "A004738": (1, take(triangle(lambda n: list(range(1, n + 1)) + list(range(n - 1, 1, -1)), 2), terms)),
        "A004739": (1, take(triangle(lambda n: list(range(1, n + 1)) + list(range(n, 0, -1))), terms)),
    }


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data", "bfiles")
    terms = int(sys.argv[2]) if len(sys.argv) > 2 else TERMS
    os.makedirs(out, exist_ok=True)
    for anum, (offset, values) in definitions(terms).items():
        path = os.path.join(out, f"b{anum[1:]}.txt")
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(f"# {anum}: offline fixture rebuilt from the sequence definition\n")
            for k, v in enumerate(values):
                fh.write(f"{offset + k} {v}\n")


if __name__ == "__main__":
    main()
