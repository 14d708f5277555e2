"""Scratch: compute the derived values to freeze into tests."""
import sys
sys.path.insert(0, "tests")
from oracles import (
    boolean_raw, partition_raw, butterfly_raw, chain_counts_by_rankset,
    descent_counts, mobius_recursive, betti_via_sympy, order_complex_facets,
    closure_from_covers,
)

# --- B_3 flag f ---
m, ranks, covers = boolean_raw(3)
cc = chain_counts_by_rankset(m, ranks, covers, 0, m - 1)
print("B3 flag f:", {tuple(sorted(k)): v for k, v in sorted(cc.items(), key=lambda kv: sorted(kv[0]))})

# --- Pi_4 ---
m, ranks, covers, labels = partition_raw(4)
print("Pi4 elements:", m, "rank sizes:", [ranks.count(r) for r in range(4)])
cc = chain_counts_by_rankset(m, ranks, covers, 0, m - 1)
print("Pi4 flag f:", {tuple(sorted(k)): v for k, v in sorted(cc.items(), key=lambda kv: sorted(kv[0]))})
print("Pi4 mobius:", mobius_recursive(m, covers, 0, m - 1))
facets = order_complex_facets(m, ranks, covers, [x for x in range(m) if x not in (0, m - 1)])
print("Pi4 proper facets:", len(facets))
print("Pi4 proper betti:", betti_via_sympy(13, facets))
print("Pi4 labels:", labels)

# Pi4 good counts: for each x of rank k >= 1, betti_{k-2} of open (0,x)
leq = closure_from_covers(m, covers)
good = [True]  # bottom
for x in range(1, m):
    k = ranks[x]
    between = [z for z in range(m) if (0, z) in leq and (z, x) in leq and z not in (0, x)]
    if not between:
        good.append(True)  # empty complex: betti(-1)=1
        continue
    fac = order_complex_facets(m, ranks, covers, between)
    b = betti_via_sympy(len(between), fac)
    good.append(b.get(k - 2, 0) != 0)
print("Pi4 good counts by rank:", [sum(1 for x in range(m) if ranks[x] == r and good[x]) for r in range(4)])

# --- descents ---
for n in (3, 4):
    dc = descent_counts(n)
    print(f"beta_{n}:", {tuple(sorted(k)): v for k, v in sorted(dc.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))})

# --- mobius of B_n ---
for n in range(1, 6):
    m, ranks, covers = boolean_raw(n)
    print(f"mu(B_{n}) =", mobius_recursive(m, covers, 0, m - 1))

# --- B_3 hexagon betti, B_4 betti ---
for n in (3, 4):
    m, ranks, covers = boolean_raw(n)
    fac = order_complex_facets(m, ranks, covers, list(range(1, m - 1)))
    print(f"B_{n} proper facets {len(fac)} betti:", betti_via_sympy(m - 2, fac))

# --- butterfly: maximal common lower bounds of c=3,d=4 ---
m, ranks, covers = butterfly_raw()
leq = closure_from_covers(m, covers)
common = [z for z in range(m) if (z, 3) in leq and (z, 4) in leq]
maximal = [z for z in common if not any((z, w) in leq and w != z for w in common)]
print("butterfly common lower bounds of c,d:", common, "maximal:", maximal)

# --- delete_coatom(B_3, {1,2}) ---
m, ranks, covers = boolean_raw(3)
# coatoms: rank-2 elements; {1,2} is bitmask 0b011 = 3 -> which index?
subsets = sorted(range(8), key=lambda s: (bin(s).count("1"), s))
print("B3 element order:", [f"{i}:{bin(s)}" for i, s in enumerate(subsets)])
idx_12 = subsets.index(0b011)
coatoms = [x for x in range(m) if ranks[x] == 2]
keep = set()
for d in coatoms:
    if d == idx_12:
        continue
    for x in range(m):
        if (x, d) in leq or x == d:
            pass
leq3 = closure_from_covers(m, covers)
J = {x for d in coatoms if d != idx_12 for x in range(m) if (x, d) in leq3}
print("delete_coatom(B3,{1,2}) J:", sorted(J), "M size:", len(J) + 1)

# --- Pi4 refinement example: 12|3|4 <= 12|34 ---
m, ranks, covers, labels = partition_raw(4)
leq4 = closure_from_covers(m, covers)
a = labels.index("12|3|4")
b = labels.index("12|34")
print("12|3|4 <= 12|34:", (a, b) in leq4)

# --- B_3 good counts ---
m, ranks, covers = boolean_raw(3)
leq = closure_from_covers(m, covers)
good = [True]
for x in range(1, m):
    k = ranks[x]
    between = [z for z in range(m) if (0, z) in leq and (z, x) in leq and z not in (0, x)]
    if not between:
        good.append(True)
        continue
    fac = order_complex_facets(m, ranks, covers, between)
    bb = betti_via_sympy(len(between), fac)
    good.append(bb.get(k - 2, 0) != 0)
print("B3 good counts:", [sum(1 for x in range(m) if ranks[x] == r and good[x]) for r in range(4)])
