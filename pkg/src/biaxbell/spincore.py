"""Shared substrate: parameter validation, collective spin operators, and
construction of the biaxial + Bell superposition state.

Everything downstream works in the symmetric (j = 1) sector of two qubits,
basis ordered |1,1>, |1,0>, |1,-1>.  Operators are built for general
half-integer j so the ladder algebra can be property-tested beyond j = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

N_QUBITS = 2
TOTAL_SPIN = N_QUBITS / 2.0          # j = 1 for the state family
DEFAULT_MAX_DIM = 64


@dataclass(frozen=True)
class SqueezeParams:
    """Parameters of the superposition.

    beta is the Bell-component weight, mu the biaxial shape angle in
    [0, pi], nu the relative phase in radians (any real value, used only
    through cos/sin).  alpha is derived as sqrt(1 - beta^2), so alpha and
    beta are both nonnegative and alpha^2 + beta^2 = 1 by construction.
    """

    beta: float
    mu: float
    nu: float
    alpha: float = field(init=False)

    def __post_init__(self) -> None:
        for name in ("beta", "mu", "nu"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ValueError(f"{name} must be a finite real number, got {value!r}")
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {self.beta!r}")
        if not 0.0 <= self.mu <= math.pi:
            raise ValueError(f"mu must lie in [0, pi], got {self.mu!r}")
        object.__setattr__(self, "alpha", math.sqrt(max(0.0, 1.0 - self.beta ** 2)))


@dataclass(frozen=True)
class SpinOperatorSet:
    """Dense collective spin matrices for one j, basis m = +j ... -j."""

    j: float
    dim: int
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray
    jplus: np.ndarray
    jminus: np.ndarray


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def build_spin_operators(j: float, max_dim: int = DEFAULT_MAX_DIM) -> SpinOperatorSet:
    """Build jx, jy, jz, j+, j- as (2j+1) x (2j+1) complex matrices.

    j must be a nonnegative half-integer.  Ladder matrix elements are
    sqrt(j(j+1) - m(m+1)) on the superdiagonal of j+.
    """
    if not math.isfinite(j) or j < 0:
        raise ValueError(f"j must be a nonnegative half-integer, got {j!r}")
    twoj = 2.0 * j
    if abs(twoj - round(twoj)) > 1e-9:
        raise ValueError(f"j must be a half-integer, got {j!r}")
    dim = int(round(twoj)) + 1
    if dim > max_dim:
        raise ValueError(f"dimension {dim} exceeds the configured maximum {max_dim}")

    m = j - np.arange(dim)               # m = +j ... -j down the basis
    jplus = np.zeros((dim, dim), dtype=complex)
    # j+ maps column state m to row state m+1
    for k in range(1, dim):
        jplus[k - 1, k] = math.sqrt(j * (j + 1) - m[k] * (m[k] + 1))
    jminus = jplus.conj().T
    jz = np.diag(m).astype(complex)
    jx = (jplus + jminus) / 2.0
    jy = (jplus - jminus) / 2.0j
    return SpinOperatorSet(
        j=j,
        dim=dim,
        jx=_readonly(jx),
        jy=_readonly(jy),
        jz=_readonly(jz),
        jplus=_readonly(jplus),
        jminus=_readonly(jminus),
    )


def build_superposition_state(params: SqueezeParams) -> np.ndarray:
    """Amplitudes of the biaxial + Bell superposition in the j = 1 basis.

    (a cos^2(mu/2), beta e^{i nu}, -a sin^2(mu/2)) with
    a = alpha sqrt(2) / sqrt(1 + cos^2 mu).  Unit norm holds analytically;
    no renormalization is applied.
    """
    a = params.alpha * math.sqrt(2.0) / math.sqrt(1.0 + math.cos(params.mu) ** 2)
    half = params.mu / 2.0
    state = np.array(
        [
            a * math.cos(half) ** 2,
            params.beta * complex(math.cos(params.nu), math.sin(params.nu)),
            -a * math.sin(half) ** 2,
        ],
        dtype=complex,
    )
    return _readonly(state)


def expectation(op: np.ndarray, state: np.ndarray) -> complex:
    """<state| op |state> for a dense square matrix and a matching vector."""
    op = np.asarray(op)
    state = np.asarray(state)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise ValueError(f"operator must be square, got shape {op.shape}")
    if state.ndim != 1 or state.shape[0] != op.shape[0]:
        raise ValueError(
            f"state shape {state.shape} does not match operator shape {op.shape}"
        )
    return complex(state.conj() @ (op @ state))
