"""Independent brute-force reference computations on plain image tuples.

Nothing here uses the package's chain, table, or lattice code.
"""


def mul(a, b):
    # apply a first, then b
    return tuple(b[x] for x in a)


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def all_subgroups(elements, degree):
    """Every subgroup, found by repeatedly adjoining one element to a known
    subgroup and closing.  Any subgroup is reached from the trivial one by
    adjoining its elements one at a time, so the search is exhaustive."""
    elements = list(elements)
    start = frozenset([tuple(range(degree))])
    found = {start}
    stack = [start]
    while stack:
        S = stack.pop()
        for g in elements:
            if g in S:
                continue
            T = closure(list(S) + [g], degree) if len(S) < 8 else closure(_gens(S, degree) + [g], degree)
            if T not in found:
                found.add(T)
                stack.append(T)
    return found


def _gens(S, degree):
    """A small generating set of the subgroup S (greedy)."""
    out, span = [], frozenset([tuple(range(degree))])
    for x in sorted(S):
        if x not in span:
            out.append(x)
            span = closure(out, degree)
    return out


def is_subset_closed(S):
    return all(mul(a, b) in S for a in S for b in S)
