"""Independent brute-force oracles the tests compare the library against.

Nothing here may call into the package's enumeration or search routines;
the point is to recompute the same quantities along a different route.
"""

import itertools


def gl3_tables():
    """All 168 invertible GF(2)^3 matrices as value-lookup tables.

    A matrix is an ordered basis image (b1, b2, b3); table[v] is the image
    of the packed vector v.
    """
    mats = []
    for b1 in range(1, 8):
        for b2 in range(1, 8):
            if b2 == b1:
                continue
            for b3 in range(1, 8):
                if b3 in (b1, b2, b1 ^ b2):
                    continue
                table = [0] * 8
                for v in range(8):
                    t = 0
                    if v & 1:
                        t ^= b1
                    if v & 2:
                        t ^= b2
                    if v & 4:
                        t ^= b3
                    table[v] = t
                mats.append(tuple(table))
    return mats


_TRIPLE_OK = [
    [
        [
            bool(a and b and c and len({a, b, c}) == 3 and a ^ b ^ c)
            for c in range(8)
        ]
        for b in range(8)
    ]
    for a in range(8)
]


def _is_orientable(vals):
    return any(
        all((xi & v).bit_count() % 2 for v in vals) for xi in range(1, 8)
    )


def brute_force_class_counts(P):
    """(total, orientable) orbit counts from the naive 7^F filter.

    Every assignment is generated, filtered by the vertex independence
    condition, and grouped into orbits under all 168 basis changes.
    """
    mats = gl3_tables()
    vfs = [P.vertex_facets[v] for v in range(P.vertex_count)]
    seen = set()
    total = orientable = 0
    for vals in itertools.product(range(1, 8), repeat=P.facet_count):
        ok = True
        for f1, f2, f3 in vfs:
            if not _TRIPLE_OK[vals[f1]][vals[f2]][vals[f3]]:
                ok = False
                break
        if not ok or vals in seen:
            continue
        total += 1
        if _is_orientable(vals):
            orientable += 1
        for m in mats:
            seen.add(tuple(m[x] for x in vals))
    return total, orientable


def naive_hamiltonian_count(P):
    """Directed Hamiltonian cycles through vertex 0, no canonicalization.

    Every undirected cycle is found twice (once per direction), so this
    should equal 2x the library's deduplicated count.
    """
    n = P.vertex_count
    count = 0
    on = [False] * n
    on[0] = True
    depth = 1

    def go(u):
        nonlocal count, depth
        for w in P.neighbors(u):
            if depth == n and w == 0:
                count += 1
            elif not on[w]:
                on[w] = True
                depth += 1
                go(w)
                depth -= 1
                on[w] = False

    go(0)
    return count


def cyclically_equal(a, b):
    """Same cyclic sequence up to rotation and reflection."""
    a, b = list(a), list(b)
    if len(a) != len(b) or set(a) != set(b):
        return False
    i = a.index(b[0])
    r = a[i:] + a[:i]
    return r == b or [r[0]] + r[1:][::-1] == b
