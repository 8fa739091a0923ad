"""Brute-force reference implementations over plain sets of pairs.

Nothing here imports the package; these are the independent side of the
checks in the test suite.
"""

from itertools import combinations, product


def subsets(xs):
    xs = sorted(xs)
    for k in range(len(xs) + 1):
        for c in combinations(xs, k):
            yield frozenset(c)


def axioms_hold(carrier, rel):
    if any(x not in carrier or y not in carrier for x, y in rel):
        return False
    refl = all((x, x) in rel for x in carrier)
    anti = all(not ((x, y) in rel and (y, x) in rel) or x == y
               for x, y in product(carrier, repeat=2))
    trans = all(not ((x, y) in rel and (y, z) in rel) or (x, z) in rel
                for x, y, z in product(carrier, repeat=3))
    return refl and anti and trans


def closure(carrier, rel):
    out = set(rel) | {(x, x) for x in carrier}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(out), repeat=2):
            if b == c and (a, d) not in out:
                out.add((a, d))
                changed = True
    return out


def ubs(rel, universe, s):
    return {u for u in universe if all((x, u) in rel for x in s)}


def lubs(rel, universe, s):
    up = ubs(rel, universe, s)
    return {u for u in up if all((u, v) in rel for v in up)}


def is_basis(rel, b):
    if not b:
        return False
    return all(not ubs(rel, b, s) or lubs(rel, b, s) for s in subsets(b))


def directed(rel, s):
    return all(ubs(rel, s, f) for f in subsets(s))


def down_closed(rel, b, i):
    return all(x in i for e in i for x in b if (x, e) in rel)


def ideals(rel, b):
    return {i for i in subsets(b) if down_closed(rel, b, i) and directed(rel, i)}


def count_posets_by_relation_scan(n):
    """Count partial orders on n points by testing every off-diagonal relation."""
    pts = range(n)
    off = [(i, j) for i in pts for j in pts if i != j]
    diag = {(i, i) for i in pts}
    count = 0
    for bits in range(1 << len(off)):
        rel = diag | {off[k] for k in range(len(off)) if bits >> k & 1}
        # antisymmetry and transitivity only; reflexivity is built in
        if any((j, i) in rel for i, j in rel if i != j):
            continue
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            count += 1
    return count


def covering(rel, carrier):
    strict = {(x, y) for x, y in rel if x != y}
    return {(x, y) for x, y in strict
            if not any((x, z) in strict and (z, y) in strict for z in carrier)}
