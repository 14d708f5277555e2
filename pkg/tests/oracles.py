"""Independent brute-force oracles used to pin expected values in the tests.

Everything in here works on raw data (rank lists, cover-pair lists, facet
lists) and deliberately avoids the library under test: chains are enumerated
explicitly instead of counted by dynamic programming, descent sets come from
walking all n! permutations, and homology ranks are taken from sympy's exact
rational elimination rather than our own kernels.
"""

from fractions import Fraction
from itertools import combinations, permutations

import sympy


def closure_from_covers(m, covers):
    """Reflexive-transitive closure of a cover list, as a set of (a, b)."""
    leq = {(x, x) for x in range(m)}
    adj = {x: [] for x in range(m)}
    for a, b in covers:
        adj[a].append(b)
    for x in range(m):
        stack = list(adj[x])
        while stack:
            y = stack.pop()
            if (x, y) not in leq:
                leq.add((x, y))
                stack.extend(adj[y])
    return leq


def all_chains(elements, leq):
    """Every chain (as a tuple) inside `elements`, the empty chain included."""
    elements = sorted(elements)
    out = [()]

    def grow(chain):
        last = chain[-1]
        for y in elements:
            if y != last and (last, y) in leq:
                ext = chain + (y,)
                out.append(ext)
                grow(ext)

    for x in elements:
        out.append((x,))
        grow((x,))
    return out

def chain_counts_by_rankset(m, ranks, covers, bottom, top):
    """Flag-f oracle: chains of the proper part, keyed by their rank set."""
    leq = closure_from_covers(m, covers)
    proper = [x for x in range(m) if x not in (bottom, top)]
    counts = {}
    for chain in all_chains(proper, leq):
        key = frozenset(ranks[x] for x in chain)
        counts[key] = counts.get(key, 0) + 1
    return counts


def descent_counts(n):
    """h-vector oracle for the subset lattice: permutation counts by descent set."""
    counts = {}
    for perm in permutations(range(1, n + 1)):
        des = frozenset(i + 1 for i in range(n - 1) if perm[i] > perm[i + 1])
        counts[des] = counts.get(des, 0) + 1
    return counts


def mobius_recursive(m, covers, a, b):
    leq = closure_from_covers(m, covers)
    if (a, b) not in leq:
        raise ValueError("a must be <= b")
    memo = {}

    def mu(z):
        if z == a:
            return 1
        if z not in memo:
            memo[z] = -sum(
                mu(w) for w in range(m)
                if (a, w) in leq and (w, z) in leq and w != z
            )
        return memo[z]

    return mu(b)


def betti_via_sympy(vertex_count, facets):
    """Reduced Betti numbers over Q from sympy's exact rank. facets: sorted tuples."""
    faces = {()}
    for f in facets:
        for k in range(len(f) + 1):
            faces.update(combinations(f, k))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    top = max(by_dim)
    if top == -1:
        return {-1: 1}
    ranks = {}
    for d in range(0, top + 1):
        rows = {f: i for i, f in enumerate(by_dim[d - 1])}
        mat = sympy.zeros(len(by_dim[d - 1]), len(by_dim[d]))
        for j, f in enumerate(by_dim[d]):
            for i in range(len(f)):
                sub = f[:i] + f[i + 1:]
                mat[rows[sub], j] = Fraction(-1) ** i
        ranks[d] = mat.rank()
    ranks[top + 1] = 0
    betti = {-1: 1 - ranks[0] if by_dim.get(0) else 1}
    for d in range(0, top + 1):
        betti[d] = len(by_dim[d]) - ranks[d] - ranks[d + 1]
    return betti


def order_complex_facets(m, ranks, covers, elements):
    """Maximal chains of the induced subposet, as sorted vertex tuples.

    Vertices are re-labelled 0..v-1 following (rank, id) order, matching the
    library's convention, so facet lists are directly comparable.
    """
    leq = closure_from_covers(m, covers)
    elems = sorted(elements, key=lambda x: (ranks[x], x))
    index = {x: i for i, x in enumerate(elems)}
    chains = [c for c in all_chains(elements, leq) if c]
    chain_set = {frozenset(c) for c in chains}
    maximal = []
    for c in chains:
        s = frozenset(c)
        if any(s < other for other in chain_set):
            continue
        maximal.append(tuple(sorted(index[x] for x in c)))
    return sorted(set(maximal))


# ---------------------------------------------------------------------------
# Raw reference posets (labels, ranks, covers), built without the library.
# ---------------------------------------------------------------------------

def boolean_raw(n):
    subsets = sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))
    index = {s: i for i, s in enumerate(subsets)}
    ranks = [bin(s).count("1") for s in subsets]
    covers = []
    for s in subsets:
        for b in range(n):
            if not s & (1 << b):
                covers.append((index[s], index[s | (1 << b)]))
    return len(subsets), ranks, sorted(covers)


def partition_raw(n):
    def parts(universe):
        if not universe:
            yield ()
            return
        first = universe[0]
        rest = universe[1:]
        for sub in parts(rest):
            yield ((first,),) + sub
            for i, block in enumerate(sub):
                yield sub[:i] + (tuple(sorted(block + (first,))),) + sub[i + 1:]

    def norm(p):
        return tuple(sorted(tuple(sorted(b)) for b in p))

    all_parts = sorted({norm(p) for p in parts(tuple(range(1, n + 1)))},
                       key=lambda p: (n - len(p), p))
    index = {p: i for i, p in enumerate(all_parts)}
    ranks = [n - len(p) for p in all_parts]

    def finer(p, q):
        return all(any(set(bp) <= set(bq) for bq in q) for bp in p)

    covers = []
    for p in all_parts:
        for q in all_parts:
            if len(q) == len(p) - 1 and finer(p, q):
                covers.append((index[p], index[q]))
    labels = ["|".join("".join(map(str, b)) for b in p) for p in all_parts]
    return len(all_parts), ranks, sorted(covers), labels


def butterfly_raw():
    # 0^ < a,b < c,d < 1^ with both middle levels fully connected
    ranks = [0, 1, 1, 2, 2, 3]
    covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    return 6, ranks, covers
