"""DOT and JSON renderings of crystal components, diagram components and reports."""

import json

from .crystal import CrystalComponent
from .parray import PArray, is_p_tableau, trim, weight
from .symfunc import format_combination
from .tworow import array_of, diagram_component, filling

# one pen colour per operator index; cycles past the end
EDGE_COLOURS = ["blue", "magenta", "darkgreen", "orange", "red", "purple", "brown", "cyan", "gray"]


def edge_colour(r):
    return EDGE_COLOURS[(r - 1) % len(EDGE_COLOURS)]


def _quote(text):
    text = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return '"' + text + '"'


def array_label(A):
    rows = A.key() or ((),)
    return "\n".join(" ".join(row) if row else "." for row in rows)


def _component_lines(C, highlight, prefix="v", indent="  "):
    ids = {A: f"{prefix}{i}" for i, A in enumerate(C.vertices)}
    lines = []
    for A in C.vertices:
        attrs = [f"label={_quote(array_label(A))}"]
        if is_p_tableau(A):
            attrs.append("peripheries=2")
        if A in highlight:
            attrs.append('style=filled, fillcolor="gray85"')
        lines.append(f"{indent}{ids[A]} [{', '.join(attrs)}];")
    for src, r, tgt in C.edges:
        colour = edge_colour(r)
        lines.append(f'{indent}{ids[src]} -> {ids[tgt]} [label="{r}", color={colour}, fontcolor={colour}];')
    return lines


def crystal_to_dot(C, highlight=(), name="crystal"):
    """DOT digraph of a component; edges point along ``f_r`` and carry label ``r``.

    Arrays in ``highlight`` are filled grey, P-tableaux get a double border.
    """
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    lines += _component_lines(C, set(highlight))
    return "\n".join(lines + ["}"]) + "\n"


def components_to_dot(components, highlight=(), name="crystal"):
    """Several components in one digraph, each as a cluster."""
    highlight = set(highlight)
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for k, C in enumerate(components):
        lines.append(f"  subgraph cluster_{k} {{")
        lines += _component_lines(C, highlight, f"c{k}v", "    ")
        lines.append("  }")
    return "\n".join(lines + ["}"]) + "\n"


def diagram_label(D, n_rows):
    return D.render(n_rows)


def diagrams_to_dot(diagrams, edges, n_rows, name="diagrams"):
    """DOT digraph of diagrams; ``edges`` are ``(D, r, lower_d(D, r))``."""
    ids = {D: f"d{i}" for i, D in enumerate(diagrams)}
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for D in diagrams:
        lines.append(f"  {ids[D]} [label={_quote(diagram_label(D, n_rows))}];")
    for src, r, tgt in edges:
        lines.append(f'  {ids[src]} -> {ids[tgt]} [label="{r}", color={edge_colour(r)}, fontcolor={edge_colour(r)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def expansion_to_json(expansion):
    """Coefficient map as a list of ``[partition, coefficient]`` pairs, canonical order."""
    return [[list(lam), c] for lam, c in sorted(expansion.items(), reverse=True)]


def expansion_from_json(data):
    return {tuple(lam): c for lam, c in data}


def rows_of(A):
    return [list(row) for row in A.key()]


def component_to_dict(C, expansion=None):
    index = {A: i for i, A in enumerate(C.vertices)}
    out = {
        "n_rows": C.n_rows,
        "vertices": [rows_of(A) for A in C.vertices],
        "edges": [[index[s], r, index[t]] for s, r, t in C.edges],
        "roots": [index[T] for T in C.roots],
    }
    if expansion is not None:
        out["expansion"] = expansion_to_json(expansion)
        out["text"] = format_combination(expansion)
    return out


def component_from_dict(P, data):
    n = data["n_rows"]
    vertices = tuple(PArray(P, rows, n) for rows in data["vertices"])
    edges = tuple((vertices[i], r, vertices[j]) for i, r, j in data["edges"])
    roots = tuple(vertices[i] for i in data["roots"])
    return CrystalComponent(vertices, edges, n, roots)


def quadruples(T, n_rows=None):
    """``(T, D, filling, array)`` records for every diagram in the component of ``T``'s diagram."""
    n_rows = n_rows or T.n_rows
    out = []
    for D in diagram_component(T, n_rows):
        L = filling(D, T, n_rows, check_component=False)
        out.append({
            "tableau": rows_of(T),
            "diagram": [list(cell) for cell in D.sorted_cells()],
            "filling": {x: list(cell) for x, cell in sorted(L.assign.items())},
            "rules": list(L.rules),
            "array": rows_of(array_of(L)),
        })
    return out


def shape_of(T):
    return list(trim(weight(T)))


def dumps(data):
    """Canonical JSON: sorted keys, two-space indent."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
