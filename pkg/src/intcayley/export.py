"""Adjacency exports: 0/1 CSV and undirected DOT with coordinate labels."""
from .group import format_element
from .spectra import adjacency_matrix


def adjacency_csv(G, S):
    A = adjacency_matrix(G, S)
    return "".join(",".join(str(int(v)) for v in row) + "\n" for row in A)


def adjacency_dot(G, S, name="cayley"):
    A = adjacency_matrix(G, S)
    labels = [format_element(x) for x in G.elements()]
    lines = [f"graph {name} {{"]
    lines.extend(f'    "{lab}";' for lab in labels)
    n = len(labels)
    for i in range(n):
        for j in range(i + 1, n):
            if A[i, j]:
                lines.append(f'    "{labels[i]}" -- "{labels[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
