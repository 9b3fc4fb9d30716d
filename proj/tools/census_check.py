#!/usr/bin/env python3
"""Counts soft topologies over a standard context by brute force.

Independent of the C++ enumerator: every subset of the non-implicit soft
sets is tested for closure under union and intersection. Prints the number
of closed families and how many have a reduced listing of at most M sets.

    python3 tools/census_check.py 2 2 6
"""
import argparse
import itertools


def union(a, b):
    out = []
    for x, y in zip(a, b):
        if x is None:
            out.append(y)
        elif y is None:
            out.append(x)
        else:
            out.append(x | y)
    return tuple(out)


def intersection(a, b):
    return tuple(None if x is None or y is None else x & y for x, y in zip(a, b))


def pads(f, m):
    """f equals m on dom(m) and is empty on the rest of its domain."""
    for x, y in zip(f, m):
        if y is None:
            if x not in (None, 0):
                return False
        elif x != y:
            return False
    return True


def census(universe, params, members):
    whole = tuple([(1 << universe) - 1] * params)
    sets = list(itertools.product([None] + list(range(1 << universe)), repeat=params))
    index = {s: i for i, s in enumerate(sets)}
    implicit = [i for i, s in enumerate(sets) if s == whole or all(v in (None, 0) for v in s)]
    core = [i for i in range(len(sets)) if i not in implicit]
    needs = [[(1 << index[union(a, b)]) | (1 << index[intersection(a, b)]) for b in sets] for a in sets]
    base = sum(1 << i for i in implicit)
    closed = bounded = 0
    for bits in range(1 << len(core)):
        chosen = [c for k, c in enumerate(core) if bits >> k & 1]
        mask = base | sum(1 << c for c in chosen)
        family = implicit + chosen
        if any(needs[a][b] & ~mask for a in family for b in family):
            continue
        closed += 1
        listing = [m for m in chosen if not any(o != m and pads(sets[m], sets[o]) for o in chosen)]
        bounded += len(listing) <= members
    return closed, bounded


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("universe", type=int)
    parser.add_argument("params", type=int)
    parser.add_argument("members", type=int, nargs="?", default=6)
    args = parser.parse_args()
    closed, bounded = census(args.universe, args.params, args.members)
    print(f"|U|={args.universe} |E|={args.params}: {closed} closed families, "
          f"{bounded} with at most {args.members} listed sets")


if __name__ == "__main__":
    main()
