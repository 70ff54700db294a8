#!/usr/bin/env python3
"""Exact marginal law of the noisy projection by brute force.

Writes the golden file read by test_oracle. Pair bits follow lexicographic
order of (i, j), i < j, over vertices 1..n.
"""
import itertools
import json
import math
import sys


def marginal(n, d, s, p, q):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    bit = {pr: k for k, pr in enumerate(pairs)}
    subsets = list(itertools.combinations(range(1, n + 1), d))
    out = {}
    for chosen in itertools.product((0, 1), repeat=len(subsets)):
        k = sum(chosen)
        mu = s**k * (1 - s) ** (len(subsets) - k)
        covered = set()
        for take, sub in zip(chosen, subsets):
            if take:
                covered.update(bit[pr] for pr in itertools.combinations(sub, 2))
        for a in range(1 << len(pairs)):
            w = mu
            for b in range(len(pairs)):
                on = (a >> b) & 1
                r = p if b in covered else q
                w *= r if on else 1 - r
            out.setdefault(a, []).append(w)
    support = sorted(a for a, ws in out.items() if math.fsum(ws) > 0)
    return support, [math.fsum(out[a]) for a in support]


def main():
    n, d, s, p, q = 4, 3, 0.3, 0.8, 0.1
    support, probs = marginal(n, d, s, p, q)
    doc = {
        "params": {"n": n, "d": d, "s": s, "p": p, "q": q},
        "support_encoding": support,
        "probs": probs,
    }
    path = sys.argv[1] if len(sys.argv) > 1 else "marginal_n4_d3.json"
    with open(path, "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
