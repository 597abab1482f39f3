#!/usr/bin/env python3
"""Writes the bundled complexes and presentations under data/."""
import itertools
import json
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def label(s):
    return "Y" + "_".join(str(i) for i in s)


def complex_json(m, sets, h2=None):
    strata = []
    for s in sorted(sets, key=lambda s: (len(s), s)):
        if len(s) < 2:
            continue
        strata.append({
            "label": label(s),
            "level": len(s) - 1,
            "indexSet": list(s),
            "parents": {str(j): label(tuple(x for x in s if x != j)) for j in s},
        })
    out = {"components": [label((i,)) for i in range(1, m + 1)], "strata": strata}
    if h2 is not None:
        out["h2"] = h2
    return out


def mgon_sets(m):
    return [tuple(sorted((i, i % m + 1))) for i in range(1, m + 1)]


def tetra_sets():
    return [s for k in (2, 3) for s in itertools.combinations(range(1, 5), k)]


def det(a):
    if len(a) == 0:
        return 1
    return sum((-1) ** j * a[0][j] * det([row[:j] + row[j + 1:] for row in a[1:]]) for j in range(len(a)))


def pl_presentations(m, sets, p, weights, b):
    """On component i the order of f_lk along the wall to j is b[l][k][j] - b[l][k][i]."""
    out = []
    for i in range(1, m + 1):
        flags = {}
        for s in sets:
            if i not in s:
                continue
            others = [j for j in s if j != i]
            rows = []
            for l in range(len(weights)):
                for k in range(p):
                    rows.append([b[l][k][j - 1] - b[l][k][i - 1] for j in others])
            flags[label(s)] = rows
        out.append({"component": label((i,)), "p": p, "weights": weights, "flags": flags})
    return out


def cyclic(m):
    pres = []
    for i in range(1, m + 1):
        walls = {}
        for s in mgon_sets(m):
            if i not in s:
                continue
            lo, hi = s
            v = -1 if (lo == 1 and hi == m) else 1
            if i == hi:
                v = -v
            walls[label(s)] = [[v]]
        pres.append({"component": i, "weights": ["1"], "wallOrders": walls})
    return pres


def write(rel, obj):
    path = os.path.join(ROOT, rel)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")


def main():
    write("complexes/point.json", complex_json(1, []))
    write("complexes/chain2.json", complex_json(2, [(1, 2)], h2="unit"))
    for m in range(3, 8):
        write(f"complexes/mgon{m}.json", complex_json(m, mgon_sets(m), h2="unit"))
        write(f"presentations/mgon{m}_cyclic.json", cyclic(m))
    write("complexes/tetra.json", complex_json(4, tetra_sets(), h2="unit"))
    b2 = [[[0, 1, 3, -2], [2, 0, -1, 5]], [[1, -1, 0, 2], [0, 3, 1, 1]]]
    write("presentations/tetra_p2.json", pl_presentations(4, tetra_sets(), 2, ["1", "-1/2"], b2))
    b1 = [[[0, 2, -1, 4]]]
    write("presentations/tetra_p1.json", pl_presentations(4, tetra_sets(), 1, ["3/2"], b1))
    # expected ord values on the tetrahedron, for the tests
    exp = {}
    for s in itertools.combinations(range(1, 5), 3):
        i0, others = s[0], s[1:]
        exp[label(s)] = sum(
            w * det([[b2[l][k][j - 1] - b2[l][k][i0 - 1] for j in others] for k in range(2)])
            for l, w in enumerate([1.0, -0.5]))
    json.dump(exp, sys.stdout)
    print()


if __name__ == "__main__":
    main()
