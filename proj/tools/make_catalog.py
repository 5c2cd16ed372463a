#!/usr/bin/env python3
"""Regenerates data/groups.catalog: permutation generators for every group of
order <= 16, one record per isomorphism class.

Groups with an obvious small-degree action are written directly; the rest are
built from a concrete multiplication and emitted in their left regular
representation.
"""
import itertools
import sys


def compose(p, q):  # (p*q)(x) = p(q(x)), permutations as tuples on 0..n-1
    return tuple(p[q[x]] for x in range(len(q)))


def perm_from_cycles(degree, cycles):
    img = list(range(degree))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            img[v - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def cycles_of(p):
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            seen.add(s)
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        out.append(cyc)
    return out


def fmt_cycles(p):
    cs = cycles_of(p)
    return "()" if not cs else "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def closure(gens, ident, mul):
    elems, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def regular(gens, ident, mul):
    elems = sorted(closure(gens, ident, mul), key=repr)
    # put identity first for readability
    elems.remove(ident)
    elems.insert(0, ident)
    pos = {e: i for i, e in enumerate(elems)}
    perms = [tuple(pos[mul(g, e)] for e in elems) for g in gens]
    return len(elems), perms


def metacyclic(n, m, s, r):
    """<a, b | a^n = 1, b^m = a^s, b a b^-1 = a^r>, elements (i, j) = a^i b^j."""
    def mul(x, y):
        i, j = x
        k, l = y
        e = i + k * pow(r, j, n)
        jj = j + l
        if jj >= m:
            jj -= m
            e += s
        return (e % n, jj)
    return [(1, 0), (0, 1)], (0, 0), mul


def c22_by_c4():
    # (C2 x C2) x| C4, the generator of C4 swapping the two C2 factors
    def act(v, j):
        return v if j % 2 == 0 else (v[1], v[0])

    def mul(x, y):
        (v1, j1), (v2, j2) = x, y
        w = act(v2, j1)
        return (((v1[0] + w[0]) % 2, (v1[1] + w[1]) % 2), (j1 + j2) % 4)
    return [((1, 0), 0), ((0, 0), 1)], ((0, 0), 0), mul


def pauli():
    # 2x2 matrices over Z[i]; entries stored as (re, im)
    def cmul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def cadd(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mul(x, y):
        return tuple(tuple(cadd(cmul(x[i][0], y[0][j]), cmul(x[i][1], y[1][j]))
                           for j in range(2)) for i in range(2))
    o, z, mo, i_ = (1, 0), (0, 0), (-1, 0), (0, 1)
    X = ((z, o), (o, z))
    Z = ((o, z), (z, mo))
    iI = ((i_, z), (z, i_))
    ident = ((o, z), (z, o))
    return [X, Z, iI], ident, mul


def direct_with_c2(desc):
    gens, ident, mul = desc

    def mul2(x, y):
        return (mul(x[0], y[0]), (x[1] + y[1]) % 2)
    return [(g, 0) for g in gens] + [(ident, 1)], (ident, 0), mul2


def cyc(n):
    return n, [list(range(1, n + 1))] if n > 1 else []


def small(name, degree, cycle_gens):
    return (name, degree, [perm_from_cycles(degree, c) for c in cycle_gens])


def from_concrete(name, desc):
    degree, perms = regular(*desc)
    return (name, degree, perms)


def build():
    out = []
    for n in range(1, 17):
        out.append(small(f"C{n}", n, [[list(range(1, n + 1))]] if n > 1 else []))
    out += [
        small("C2xC2", 4, [[[1, 2]], [[3, 4]]]),
        small("S3", 3, [[[1, 2]], [[1, 2, 3]]]),
        small("C4xC2", 6, [[[1, 2, 3, 4]], [[5, 6]]]),
        small("C2xC2xC2", 6, [[[1, 2]], [[3, 4]], [[5, 6]]]),
        small("D8", 4, [[[1, 2, 3, 4]], [[1, 3]]]),
        from_concrete("Q8", metacyclic(4, 2, 2, 3)),
        small("C3xC3", 6, [[[1, 2, 3]], [[4, 5, 6]]]),
        small("D10", 5, [[[1, 2, 3, 4, 5]], [[2, 5], [3, 4]]]),
        small("C6xC2", 8, [[[1, 2, 3, 4, 5, 6]], [[7, 8]]]),
        small("A4", 4, [[[1, 2], [3, 4]], [[1, 2, 3]]]),
        small("D12", 6, [[[1, 2, 3, 4, 5, 6]], [[2, 6], [3, 5]]]),
        small("Dic12", 7, [[[1, 2, 3]], [[2, 3], [4, 5, 6, 7]]]),
        small("D14", 7, [[[1, 2, 3, 4, 5, 6, 7]], [[2, 7], [3, 6], [4, 5]]]),
        small("C4xC4", 8, [[[1, 2, 3, 4]], [[5, 6, 7, 8]]]),
        small("C8xC2", 10, [[[1, 2, 3, 4, 5, 6, 7, 8]], [[9, 10]]]),
        small("C4xC2xC2", 8, [[[1, 2, 3, 4]], [[5, 6]], [[7, 8]]]),
        small("C2^4", 8, [[[1, 2]], [[3, 4]], [[5, 6]], [[7, 8]]]),
        small("D16", 8, [[[1, 2, 3, 4, 5, 6, 7, 8]], [[2, 8], [3, 7], [4, 6]]]),
        small("C2xD8", 6, [[[1, 2, 3, 4]], [[1, 3]], [[5, 6]]]),
        from_concrete("C2xQ8", direct_with_c2(metacyclic(4, 2, 2, 3))),
        from_concrete("Q16", metacyclic(8, 2, 4, 7)),
        from_concrete("QD16", metacyclic(8, 2, 0, 3)),
        from_concrete("M16", metacyclic(8, 2, 0, 5)),
        from_concrete("C4:C4", metacyclic(4, 4, 0, 3)),
        from_concrete("C2^2:C4", c22_by_c4()),
        from_concrete("C4oD8", pauli()),
    ]
    return out


def fingerprint(elems, degree):
    ident = tuple(range(degree))
    def order(p):
        k, q = 1, p
        while q != ident:
            q, k = compose(q, p), k + 1
        return k
    profile = tuple(sorted(order(p) for p in elems))
    abelian = all(compose(a, b) == compose(b, a) for a in elems for b in elems)
    centre = sum(all(compose(a, b) == compose(b, a) for b in elems) for a in elems)
    return profile, abelian, centre


def main():
    groups = build()
    seen = {}
    records = []
    for name, degree, perms in groups:
        ident = tuple(range(degree))
        elems = closure(perms, ident, compose)
        fp = fingerprint(elems, degree)
        key = (len(elems), fp)
        if key in seen:
            # element orders and centre size alone do not separate every pair;
            # the loader's fingerprint adds subgroup counts.
            print(f"note: {name} shares element-order fingerprint with {seen[key]}", file=sys.stderr)
        seen.setdefault(key, name)
        records.append((name, degree, len(elems), perms))
    records.sort(key=lambda r: (r[2], r[0] != f"C{r[2]}", r[0]))
    w = sys.stdout
    w.write("# Permutation generators for the groups of order <= 16, one per isomorphism class.\n")
    w.write("# Regenerate with tools/make_catalog.py.\n")
    for name, degree, order, perms in records:
        w.write(f"\ngroup {name}\n  degree {degree}\n  expected_order {order}\n")
        for p in perms:
            w.write(f"  generator {fmt_cycles(p)}\n")
        w.write("end\n")
    print(f"{len(records)} groups", file=sys.stderr)


if __name__ == "__main__":
    main()
