"""Shared generators and brute-force oracles for the test suite."""

import itertools
import random

import numpy as np

from hyperqec.hypergraph import Hypergraph

# Equation groups worked by hand for the ring code: check vertices -> unknowns.
RING_TABLES = {
    (1, 2, 3, 4): {
        (5, 6): (0, 1, 2, 3, 4),
        (7, 8, 9): (0, 4),
        (10, 11, 12): (0,),
        (13, 14, 15): (0, 1, 2, 3),
    },
    (1, 3, 5, 7): {
        (2,): (0, 1, 3, 5),
        (4, 6): (0, 1, 3, 5, 7),
        (8, 9): (0, 5, 7),
        (10, 11, 12): (0, 7),
        (13, 14, 15): (0, 1, 3),
    },
    (1, 2, 10, 11): {
        (3, 4, 5, 6): (0, 1, 2),
        (7, 8, 9, 12): (0, 10, 11),
        (13, 14, 15): (0, 1, 2, 10, 11),
    },
    (1, 2, 9, 10): {
        (3,): (0, 1, 2),
        (4, 5, 6): (0, 1, 2, 9),
        (7, 8, 11, 12): (0, 9, 10),
        (13, 14, 15): (0, 1, 2, 10),
    },
    (1, 7, 8, 9): {
        (2, 3, 13, 14, 15): (0, 1),
        (4, 5, 6): (0, 1, 7, 8, 9),
        (10, 11, 12): (0, 7, 8, 9),
    },
    (2, 5, 8, 11): {
        (1, 3): (0, 2, 5),
        (4, 6): (0, 2, 5, 8),
        (7, 9): (0, 5, 8, 11),
        (10, 12): (0, 8, 11),
        (13, 14, 15): (0, 2, 11),
    },
}

CLAIMED_RADIUS = 4


def all_subsets(vertices, min_size=1, max_size=None):
    vertices = tuple(vertices)
    top = len(vertices) if max_size is None else max_size
    return [c for k in range(min_size, top + 1) for c in itertools.combinations(vertices, k)]


def random_graph(rng, n_inputs, n_outputs, p=0.35, max_edge=None, implicit=False, modulus=2, first=0):
    verts = list(range(first, first + n_inputs + n_outputs))
    cand = all_subsets(verts, 1, max_edge)
    edges = [e for e in cand if rng.random() < p]
    return Hypergraph(
        tuple(verts[:n_inputs]), tuple(verts[n_inputs:]), tuple(edges), implicit, modulus
    )


def oracle_suite(seed=20240601, samples_per_size=150):
    """One input, up to four outputs: every edge set for |Y| <= 2, random
    edge sets for |Y| = 3, 4."""
    graphs = []
    for ny in (1, 2):
        cand = all_subsets(range(ny + 1))
        for mask in range(1 << len(cand)):
            edges = tuple(e for i, e in enumerate(cand) if mask >> i & 1)
            graphs.append(Hypergraph((0,), tuple(range(1, ny + 1)), edges))
    rng = random.Random(seed)
    for ny in (3, 4):
        cand = all_subsets(range(ny + 1))
        for _ in range(samples_per_size):
            edges = tuple(e for e in cand if rng.random() < 0.5)
            graphs.append(Hypergraph((0,), tuple(range(1, ny + 1)), edges))
    return graphs


def brute_force_solutions(matrix, d):
    """All x in Z_d^n with matrix @ x = 0 (mod d), encoded as base-d integers."""
    a = np.asarray(matrix, dtype=np.int64)
    n = a.shape[1]
    pts = np.indices((d,) * n).reshape(n, -1).T
    ok = np.all(pts @ a.T % d == 0, axis=1) if a.shape[0] else np.ones(len(pts), bool)
    return set(encode_rows(pts[ok], d))


def encode_rows(rows, d):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return [0] * len(rows)
    weights = d ** np.arange(rows.shape[1] - 1, -1, -1, dtype=np.int64)
    return (rows @ weights).tolist()


def generated_subgroup(generators, n, d):
    span = np.zeros((1, n), dtype=np.int64)
    for gen in generators:
        g = np.asarray(gen, dtype=np.int64)
        span = (span[:, None, :] + np.arange(d)[None, :, None] * g) % d
        span = np.unique(span.reshape(-1, n), axis=0)
    return set(encode_rows(span, d))


def brute_force_detected(g, errors, d):
    """Enumerate every assignment on X ∪ E and apply the detection condition directly."""
    errors = tuple(sorted(errors))
    nb = {v: set() for v in g.vertices}
    for e in g.edges:
        for v in e:
            nb[v] |= set(e) - {v}
    if g.implicit_input_adjacency:
        for x in g.inputs:
            for y in g.outputs:
                nb[x].add(y)
                nb[y].add(x)
    cols = g.inputs + errors
    checks = [y for y in g.outputs if y not in errors]
    for values in itertools.product(range(d), repeat=len(cols)):
        a = dict(zip(cols, values))
        if any(sum(a[c] for c in cols if c in nb[i]) % d for i in checks):
            continue
        if any(a[x] for x in g.inputs):
            return False
        if any(sum(a[e] for e in errors if e in nb[x]) % d for x in g.inputs):
            return False
    return True


def slow_kl_factorizes(g, errors, d=2, atol=1e-7):
    """Knill-Laflamme test with explicit operator matrices, one matrix unit at a time."""
    from hyperqec.statesim import isometry_matrix

    v = isometry_matrix(g, d).entries
    ny = len(g.outputs)
    pos = [g.outputs.index(y) for y in sorted(errors)]
    basis = list(itertools.product(range(d), repeat=ny))
    for a in itertools.product(range(d), repeat=len(pos)):
        for b in itertools.product(range(d), repeat=len(pos)):
            f = np.zeros((d**ny, d**ny))
            for r, row in enumerate(basis):
                if all(row[p] == a[j] for j, p in enumerate(pos)):
                    col = list(row)
                    for j, p in enumerate(pos):
                        col[p] = b[j]
                    f[r, basis.index(tuple(col))] = 1
            m = v.conj().T @ f @ v
            off = m - np.diag(np.diag(m))
            if np.abs(off).max(initial=0) > atol:
                return False
            if np.abs(np.diag(m) - m[0, 0]).max() > atol:
                return False
    return True
