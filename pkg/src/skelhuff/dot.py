"""Graphviz dumps of code trees and skeletons."""

from __future__ import annotations


def _walk(root):
    """Yield (node id, node, parent id) in preorder, left child first."""
    counter = 0
    stack = [(root, None)]
    while stack:
        node, parent = stack.pop()
        nid = counter
        counter += 1
        yield nid, node, parent
        if node.left is not None:
            stack.append((node.right, nid))
            stack.append((node.left, nid))


def tree_to_dot(root, name: str = "code_tree") -> str:
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    edges = []
    for nid, node, parent in _walk(root):
        if node.left is None:
            label = f"{node.weight}"
            if node.symbol is not None:
                label += f"\\ns{node.symbol}"
            lines.append(f'  n{nid} [shape=box, label="{label}"];')
        else:
            lines.append(f'  n{nid} [label="{node.weight}"];')
        if parent is not None:
            edges.append(f"  n{parent} -> n{nid};")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def skeleton_to_dot(skel, name: str = "skeleton") -> str:
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    edges = []
    for nid, node, parent in _walk(skel):
        if node.left is None:
            label = f"m={node.height}"
            if node.weight is not None:
                label += f"\\nw={node.weight}"
            style = ', style=filled, fillcolor=lightgray' if node.height else ""
            lines.append(f'  n{nid} [shape=box, label="{label}"{style}];')
        else:
            lines.append(f'  n{nid} [label=""];')
        if parent is not None:
            edges.append(f"  n{parent} -> n{nid};")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
