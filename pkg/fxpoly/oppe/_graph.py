from pathlib import Path

from graphviz import Digraph

from fxpoly.oppe._trace import OpTrace

# Chains of stages that run independently before joining at the term products
_BRANCHES = (('mask', 'select'), ('kx',))


# Saves a dot rendering of one evaluation trace, one node per record
def render_trace_graph(trace: OpTrace, filename) -> str:
    Path(filename).parent.mkdir(parents=True, exist_ok=True)

    g = Digraph('G', filename=str(filename))
    g.attr(rankdir='LR')
    g.node('__start0', label='', _attributes={'height': '0', 'width': '0', 'shape': 'none'})

    by_stage = {}
    for idx, record in enumerate(trace):
        name = f'op{idx}'
        g.node(name, label=f'{record.kind.value}\\n{record.length}', shape='box')
        by_stage.setdefault(record.stage, []).append(name)

    tails = []
    for branch in _BRANCHES:
        chain = [name for stage in branch for name in by_stage.get(stage, [])]
        if not chain:
            continue
        g.edge('__start0', chain[0])
        for a, b in zip(chain, chain[1:]):
            g.edge(a, b)
        tails.append(chain[-1])

    # Anything outside the branches runs after them, in record order
    rest = [name for stage, names in by_stage.items()
            if all(stage not in branch for branch in _BRANCHES) for name in names]
    if rest:
        for tail in tails:
            g.edge(tail, rest[0])
        for a, b in zip(rest, rest[1:]):
            g.edge(a, b)

    return g.save()
