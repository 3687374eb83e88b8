#!/usr/bin/env python3
# Apache License, Version 2.0, refer to LICENSE.txt
#
# Recomputes per-parameter mean, sd and quantiles from draws.csv and
# compares them with summary.json.

import csv
import json
import math
import sys


def quantile7(xs, p):
    s = sorted(xs)
    h = (len(s) - 1) * p
    lo = math.floor(h)
    hi = min(lo + 1, len(s) - 1)
    return s[lo] + (h - lo) * (s[hi] - s[lo])


def weighted_quantile(xs, ws, p):
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    total = sum(ws)
    cum = 0.0
    for i in order:
        cum += ws[i] / total
        if cum >= p:
            return xs[i]
    return xs[order[-1]]


def main(directory):
    with open(f"{directory}/summary.json") as f:
        summary = json.load(f)
    with open(f"{directory}/draws.csv", newline="") as f:
        rows = list(csv.DictReader(f))
    weighted = summary["algorithm"] == "is"
    weights = [float(r["weight"]) for r in rows]
    levels = {"q2.5": 0.025, "q25": 0.25, "q50": 0.5, "q75": 0.75, "q97.5": 0.975}
    bad = 0
    for name, stats in summary["parameters"].items():
        xs = [float(r[name]) for r in rows]
        if weighted:
            expected = {k: weighted_quantile(xs, weights, p) for k, p in levels.items()}
            expected["mean"] = sum(w * x for w, x in zip(weights, xs)) / sum(weights)
        else:
            expected = {k: quantile7(xs, p) for k, p in levels.items()}
            m = sum(xs) / len(xs)
            expected["mean"] = m
            expected["sd"] = math.sqrt(sum((x - m) ** 2 for x in xs) / (len(xs) - 1))
        for key, value in expected.items():
            tol = 1e-9 * max(1.0, abs(value))
            if abs(stats[key] - value) > tol:
                print(f"{name}.{key}: summary {stats[key]!r} recomputed {value!r}")
                bad += 1
    print("summary ok" if bad == 0 else f"{bad} mismatches")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
