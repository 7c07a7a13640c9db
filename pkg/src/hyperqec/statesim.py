"""Dense qudit statevectors for hypergraph states, the code isometry and a
brute-force Knill-Laflamme check.

Sites follow ``Hypergraph.vertices`` (inputs, then outputs) and the first
site is the most significant digit of a basis index. The generalized
controlled-Z on a set of sites multiplies each basis amplitude by
``ω^(product of the site digits)``, which is ``diag(1, …, 1, -1)`` at d = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from .group import Modulus, as_modulus
from .hypergraph import ErrorConfiguration, GraphError, Hypergraph

STATE_CAP = 2**22
ISOMETRY_CAP = 2**20
KL_CAP = 2**24
STATE_ATOL = 1e-9
KL_ATOL = 1e-7


class CapacityError(ValueError):
    """Requested dense object would exceed the desk-scale size cap."""


@dataclass(frozen=True, eq=False)
class StateVector:
    amplitudes: np.ndarray
    local_dim: int
    labels: tuple[Hashable, ...]

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != self.local_dim ** len(self.labels):
            raise ValueError(f"{amps.size} amplitudes do not fit {len(self.labels)} sites of dimension {self.local_dim}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("site labels must be distinct")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def num_sites(self) -> int:
        return len(self.labels)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((self.local_dim,) * self.num_sites)

    def axes(self, sites: Iterable[Hashable]) -> list[int]:
        index = {label: i for i, label in enumerate(self.labels)}
        out = []
        for s in sites:
            if s not in index:
                raise GraphError(f"unknown site {s!r}")
            out.append(index[s])
        return out

    def inner(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def allclose(self, other: "StateVector", atol: float = STATE_ATOL) -> bool:
        return self.labels == other.labels and np.allclose(self.amplitudes, other.amplitudes, rtol=0, atol=atol)

    def with_amplitudes(self, amps: np.ndarray) -> "StateVector":
        return StateVector(amps.reshape(-1), self.local_dim, self.labels)


def _check_cap(d: int, n: int, cap: int, what: str):
    if d**n > cap:
        raise CapacityError(f"{what} needs {d}^{n} = {d**n} entries, above the cap of {cap}")


def basis_state(digits: Sequence[int], d: int, labels: Sequence[Hashable] | None = None) -> StateVector:
    labels = tuple(range(len(digits))) if labels is None else tuple(labels)
    amps = np.zeros(d ** len(digits), dtype=complex)
    amps[np.ravel_multi_index(tuple(digits), (d,) * len(digits)) if digits else 0] = 1
    return StateVector(amps, d, labels)


def plus_state(labels: Sequence[Hashable], d: int) -> StateVector:
    n = len(labels)
    return StateVector(np.full(d**n, d ** (-n / 2), dtype=complex), d, tuple(labels))


def _digit_product(shape: tuple[int, ...], axes: Sequence[int], d: int) -> np.ndarray:
    """Broadcastable array holding the product of the digits on ``axes`` (mod d)."""
    out = np.ones((1,) * len(shape), dtype=np.int64)
    for ax in axes:
        view = [1] * len(shape)
        view[ax] = d
        out = out * np.arange(d).reshape(view) % d
    return out


def apply_ckz(state: StateVector, sites: Iterable[Hashable]) -> StateVector:
    """Generalized multi-controlled Z on ``sites``; an empty site set is the global phase ω."""
    sites = list(sites)
    if len(set(sites)) != len(sites):
        raise GraphError(f"repeated site in {sites}")
    d = state.local_dim
    t = state.tensor()
    exponent = _digit_product(t.shape, state.axes(sites), d)
    return state.with_amplitudes(t * np.exp(2j * np.pi * exponent / d))


def apply_x(state: StateVector, sites: Iterable[Hashable]) -> StateVector:
    """Cyclic shift ``|k> -> |k+1>`` on each site (the bit flip at d = 2)."""
    t = state.tensor()
    for ax in state.axes(sites):
        t = np.roll(t, 1, axis=ax)
    return state.with_amplitudes(t)


def hypergraph_state(g: Hypergraph, d: int | Modulus | None = None) -> StateVector:
    """|+>^n followed by one generalized controlled-Z per edge."""
    m = as_modulus(g.modulus if d is None else d)
    _check_cap(m.d, len(g.vertices), STATE_CAP, "hypergraph state")
    state = plus_state(g.vertices, m.d)
    for edge in g.state_edges():
        state = apply_ckz(state, edge)
    return state


def verify_stabilizer(g: Hypergraph, vertex: int) -> bool:
    """Check that ``X_v`` times C^(|e|-1)Z on ``e - {v}`` for each edge ``e ∋ v`` fixes the state."""
    if g.modulus != 2:
        raise ValueError("stabilizer check is defined for qubits only (modulus 2)")
    g.require(vertex)
    state = hypergraph_state(g, 2)
    out = apply_x(state, [vertex])
    for edge in g.state_edges():
        if vertex in edge:
            out = apply_ckz(out, [v for v in edge if v != vertex])
    return out.allclose(state)


DATA_LABEL = "D"


def encode(g: Hypergraph, logical: int) -> StateVector:
    """Secret-sharing style codeword: |0> -> |0>_D |Γ>, |1> -> |1>_D X…X |Γ>."""
    if g.modulus != 2:
        raise ValueError("encoding is defined for qubits only (modulus 2)")
    if logical not in (0, 1):
        raise ValueError("logical value must be 0 or 1")
    _check_cap(2, len(g.vertices) + 1, STATE_CAP, "encoded state")
    graph = hypergraph_state(g, 2)
    if logical:
        graph = apply_x(graph, g.vertices)
    register = np.zeros(2, dtype=complex)
    register[logical] = 1
    return StateVector(np.kron(register, graph.amplitudes), 2, (DATA_LABEL,) + graph.labels)


@dataclass(frozen=True, eq=False)
class IsometryMatrix:
    """Code map from input assignments (columns) to output assignments (rows)."""

    entries: np.ndarray
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    local_dim: int

    def gram_deviation(self) -> float:
        """max |V†V - I|; zero exactly when the columns are orthonormal."""
        v = self.entries
        return float(np.abs(v.conj().T @ v - np.eye(v.shape[1])).max()) if v.size else 0.0

    def is_isometry(self, atol: float = STATE_ATOL) -> bool:
        return self.gram_deviation() <= atol

    def output_tensor(self) -> np.ndarray:
        """Entries with one axis per output site, then one column axis."""
        return self.entries.reshape((self.local_dim,) * len(self.outputs) + (self.entries.shape[1],))


def isometry_matrix(g: Hypergraph, d: int | Modulus | None = None) -> IsometryMatrix:
    """Kernel ``∏_edges χ(g_e)`` as a d^|Y| × d^|X| matrix with unit-norm columns.

    The kernel has unit-modulus entries, so each column is scaled by
    ``d^(-|Y|/2)``. Columns are orthonormal only when the code is
    non-degenerate; see ``IsometryMatrix.is_isometry``.
    """
    m = as_modulus(g.modulus if d is None else d)
    n = len(g.vertices)
    _check_cap(m.d, n, ISOMETRY_CAP, "isometry matrix")
    shape = (m.d,) * n
    pos = {v: i for i, v in enumerate(g.vertices)}
    exponent = np.zeros(shape, dtype=np.int64)
    for edge in g.state_edges():
        exponent = (exponent + _digit_product(shape, [pos[v] for v in edge], m.d)) % m.d
    kernel = np.exp(2j * np.pi * exponent / m.d)
    # axes are (inputs..., outputs...); rows index outputs
    nx = len(g.inputs)
    kernel = np.moveaxis(kernel, list(range(nx)), list(range(n - nx, n)))
    entries = kernel.reshape(m.d ** len(g.outputs), m.d**nx) * m.d ** (-len(g.outputs) / 2)
    return IsometryMatrix(entries, g.inputs, g.outputs, m.d)


@dataclass(frozen=True)
class FactorizationReport:
    factorizes: bool
    max_deviation: float
    offending_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    error_vertices: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "factorizes": self.factorizes,
            "config": list(self.error_vertices),
            "max_deviation": self.max_deviation,
            "offending_pair": None if self.offending_pair is None else [list(p) for p in self.offending_pair],
        }


def kl_factorization_check(
    g: Hypergraph,
    errors: ErrorConfiguration | Iterable[int],
    d: int | Modulus | None = None,
    iso: IsometryMatrix | None = None,
) -> FactorizationReport:
    """For every matrix unit ``F = |a><b|`` on the error sites, test whether
    ``V† (F ⊗ 1) V`` is a multiple of the identity on the input register.

    All pairs ``(a, b)`` are evaluated in one tensor contraction.
    """
    m = as_modulus(g.modulus if d is None else d)
    e = (errors if isinstance(errors, ErrorConfiguration) else ErrorConfiguration(errors)).checked(g)
    evs = e.sorted()
    _check_cap(m.d, 2 * len(evs) + 2 * len(g.inputs), KL_CAP, "factorization check")
    if iso is None:
        iso = isometry_matrix(g, m)
    pos = {y: i for i, y in enumerate(g.outputs)}
    err_axes = [pos[y] for y in evs]
    clean_axes = [pos[y] for y in e.clean(g)]
    t = iso.output_tensor()
    cols = t.shape[-1]
    t = np.transpose(t, err_axes + clean_axes + [len(g.outputs)])
    t = t.reshape(m.d ** len(evs), m.d ** len(clean_axes), cols)
    # w[a, b, x, y] = <a, i; x| V ... V |b, i; y> summed over clean digits i
    w = np.einsum("aix,biy->abxy", t.conj(), t)
    diag = np.einsum("abxx->abx", w)
    off = w - np.einsum("abx,xy->abxy", diag, np.eye(cols))
    spread = np.abs(diag - diag[:, :, :1]).max(axis=2) if cols else np.zeros(w.shape[:2])
    per_pair = np.maximum(np.abs(off).max(axis=(2, 3)) if cols else 0.0, spread)
    worst = float(per_pair.max()) if per_pair.size else 0.0
    ok = worst <= KL_ATOL
    pair = None
    if not ok:
        a, b = np.unravel_index(int(np.argmax(per_pair)), per_pair.shape)
        shape = (m.d,) * len(evs)
        pair = (tuple(int(x) for x in np.unravel_index(a, shape)), tuple(int(x) for x in np.unravel_index(b, shape)))
    return FactorizationReport(ok, worst, pair, evs)


def amplitude_dump(state: StateVector, limit: int = 64) -> dict:
    """JSON-ready listing of the first ``limit`` amplitudes in basis order."""
    d, n = state.local_dim, state.num_sites
    rows = []
    for idx in range(min(limit, state.amplitudes.size)):
        amp = state.amplitudes[idx]
        digits = np.unravel_index(idx, (d,) * n) if n else ()
        rows.append({"basis": "".join(str(int(x)) for x in digits), "re": _clean(amp.real), "im": _clean(amp.imag)})
    return {
        "labels": [str(x) for x in state.labels],
        "local_dim": d,
        "num_sites": n,
        "norm": _clean(state.norm),
        "amplitudes": rows,
        "truncated": state.amplitudes.size > limit,
    }


def _clean(x: float) -> float:
    x = round(float(x), 12)
    return 0.0 if x == 0 else x


def norm_ok(state: StateVector) -> bool:
    return math.isclose(state.norm, 1.0, abs_tol=STATE_ATOL)
