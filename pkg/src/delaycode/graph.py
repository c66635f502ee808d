"""Small directed-graph helpers over hashable nodes.

``succ`` maps every node to an iterable of successors; all successors must
themselves be keys.
"""


def reachable(succ, start):
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def strongly_connected_components(succ):
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order (sinks first)."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    for root in succ:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            u, it = work[-1]
            advanced = False
            for v in it:
                if v not in index:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack.add(v)
                    work.append((v, iter(succ[v])))
                    advanced = True
                    break
                if v in on_stack:
                    low[u] = min(low[u], index[v])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[u])
            if low[u] == index[u]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == u:
                        break
                comps.append(frozenset(comp))
    return comps


def bottom_components(succ):
    """SCCs with no edge leaving them (the minimal non-empty closed sets)."""
    out = []
    for comp in strongly_connected_components(succ):
        if all(v in comp for u in comp for v in succ[u]):
            out.append(comp)
    return out
