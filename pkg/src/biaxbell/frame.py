"""Mean-spin vector and the orthonormal frame aligned with it.

The closed-form first moments are evaluated exactly as written in the
analytic model, including the sign convention of the nu-dependent term in
<Jy>.  The crosscheck module is the place where that convention is compared
against the operator oracle; nothing here takes a side.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .spincore import SpinOperatorSet, SqueezeParams

DEFAULT_EPS = 1e-12


class DegenerateFrameError(ValueError):
    """Raised when an operation needs transverse directions that do not exist."""


class FrameStatus(Enum):
    REGULAR = "regular"
    POLAR_DEGENERATE = "polar-degenerate"
    FULLY_DEGENERATE = "fully-degenerate"


@dataclass(frozen=True)
class MeanSpin:
    jx: float
    jy: float
    jz: float

    def as_array(self) -> np.ndarray:
        return np.array([self.jx, self.jy, self.jz])


@dataclass(frozen=True)
class SpinFrame:
    """Right-handed orthonormal triad with n3 along the mean spin.

    theta and phi are the spherical angles of n3; r is the mean-spin length.
    status records whether the angles were fully determined by the mean spin
    (regular), fixed by the phi = 0 convention on the polar axis
    (polar-degenerate), or purely conventional because r vanished
    (fully-degenerate).
    """

    n1: np.ndarray
    n2: np.ndarray
    n3: np.ndarray
    theta: float
    phi: float
    r: float
    status: FrameStatus


def mean_spin_closed_form(params: SqueezeParams) -> MeanSpin:
    """First moments (<Jx>, <Jy>, <Jz>) from the closed-form expressions."""
    alpha, beta, mu, nu = params.alpha, params.beta, params.mu, params.nu
    denom = 1.0 + math.cos(mu) ** 2
    k = 2.0 * alpha * beta / math.sqrt(denom)
    return MeanSpin(
        jx=k * math.cos(nu) * math.cos(mu),
        jy=-k * math.sin(nu),
        jz=2.0 * alpha ** 2 * math.cos(mu) / denom,
    )


def mean_spin_length(ms: MeanSpin) -> float:
    """Euclidean length of the mean-spin vector."""
    return math.sqrt(ms.jx ** 2 + ms.jy ** 2 + ms.jz ** 2)


def mean_spin_length_closed_form(params: SqueezeParams) -> float:
    """Mean-spin length evaluated directly from the single-radical closed form."""
    alpha, beta, mu, nu = params.alpha, params.beta, params.mu, params.nu
    cmu = math.cos(mu)
    denom = 1.0 + cmu ** 2
    radicand = (
        beta ** 2 * math.cos(nu) ** 2 * cmu ** 4
        + beta ** 2 * math.sin(nu) ** 2
        + cmu ** 2
    )
    return 2.0 * alpha / denom * math.sqrt(radicand)


def _clamp(x: float) -> float:
    return min(1.0, max(-1.0, x))


def compute_frame(ms: MeanSpin, eps: float = DEFAULT_EPS) -> SpinFrame:
    """Build the frame (n1, n2, n3) from a mean-spin vector.

    theta = arccos(<Jz>/r).  phi = arccos(<Jx>/(r sin theta)) when <Jy> > 0,
    and 2 pi minus that otherwise; the boundary <Jy> = 0 goes to the second
    branch, whose value 2 pi at <Jx> > 0 is stored as 0 so phi stays in
    [0, 2 pi).  Degenerate cases take conventional angles: phi = 0 when the
    transverse component vanishes (polar-degenerate), theta = phi = 0 when
    the whole vector vanishes (fully-degenerate).  arccos arguments are
    clamped to [-1, 1] before evaluation.
    """
    if eps <= 0.0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    r = mean_spin_length(ms)
    if r < eps:
        status = FrameStatus.FULLY_DEGENERATE
        theta = 0.0
        phi = 0.0
    else:
        theta = math.acos(_clamp(ms.jz / r))
        rho = math.hypot(ms.jx, ms.jy)
        if rho / r < eps:
            status = FrameStatus.POLAR_DEGENERATE
            phi = 0.0
        else:
            status = FrameStatus.REGULAR
            base = math.acos(_clamp(ms.jx / rho))
            phi = base if ms.jy > 0.0 else 2.0 * math.pi - base
            if phi >= 2.0 * math.pi:
                phi = 0.0
    st, ct = math.sin(theta), math.cos(theta)
    sp, cp = math.sin(phi), math.cos(phi)
    n1 = np.array([-sp, cp, 0.0])
    n2 = np.array([-ct * cp, -ct * sp, st])
    n3 = np.array([st * cp, st * sp, ct])
    for v in (n1, n2, n3):
        v.setflags(write=False)
    return SpinFrame(n1=n1, n2=n2, n3=n3, theta=theta, phi=phi, r=r, status=status)


def project_transverse_operators(
    frame: SpinFrame, ops: SpinOperatorSet
) -> tuple[np.ndarray, np.ndarray]:
    """Spin components along n1 and n2, as dense matrices.

    Defined for regular and polar-degenerate frames; a fully-degenerate frame
    has no distinguished transverse plane and raises DegenerateFrameError.
    """
    if frame.status is FrameStatus.FULLY_DEGENERATE:
        raise DegenerateFrameError(
            "transverse projection undefined: mean spin length is below eps"
        )
    cart = (ops.jx, ops.jy, ops.jz)
    jn1 = sum(c * op for c, op in zip(frame.n1, cart))
    jn2 = sum(c * op for c, op in zip(frame.n2, cart))
    return jn1, jn2
