"""Closed-form second moments and the squeezing parameter built from them.

The raising-operator moments <J+^2>, <Jz^2>, <J+(2Jz+1)> are evaluated from
their analytic expressions; everything Cartesian follows from them through
exact operator identities at j = 1, and the transverse moments follow by
rotating into the mean-spin frame.  No state vector is ever constructed on
this path, which is what makes it an independent counterpart to the oracle.

Two squeezing normalizations are provided.  squeezing_standard calibrates a
coherent state to 1 and is the default everywhere; squeezing_literal keeps
the variant without the one-half factor in the minimal variance, which is
exactly twice the standard value.  Selection between them is a reporting
choice (see the crosscheck module); both are always computed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .frame import DegenerateFrameError, FrameStatus, SpinFrame
from .spincore import N_QUBITS, TOTAL_SPIN, SqueezeParams


@dataclass(frozen=True)
class MomentSet:
    """Raising-operator second moments: <J+^2>, <Jz^2>, <J+(2Jz+1)>."""

    jplus_sq: complex
    jz_sq: float
    jplus_2jz1: complex


class CartesianSecondMoments(NamedTuple):
    jx2_plus_jy2: float
    jx2_minus_jy2: float
    xy_anticomm: float
    xz_anticomm: float
    yz_anticomm: float


@dataclass(frozen=True)
class FrameMoments:
    """Transverse second moments <Jn1^2>, <Jn2^2>, <{Jn1, Jn2}>."""

    jn1_sq: float
    jn2_sq: float
    anticomm: float


def second_moments_closed_form(params: SqueezeParams) -> MomentSet:
    """Raising-operator moments from their closed forms (same nu convention
    as the closed-form first moments)."""
    alpha, beta, mu, nu = params.alpha, params.beta, params.mu, params.nu
    cmu, smu2 = math.cos(mu), math.sin(mu) ** 2
    denom = 1.0 + cmu ** 2
    k = 2.0 * alpha * beta / math.sqrt(denom)
    return MomentSet(
        jplus_sq=complex(-alpha ** 2 * smu2 / denom, 0.0),
        jz_sq=2.0 * alpha ** 2 / denom * (1.0 - 0.5 * smu2),
        jplus_2jz1=k * complex(math.cos(nu), -math.sin(nu) * cmu),
    )


def cartesian_from_raising(moments: MomentSet) -> CartesianSecondMoments:
    """Cartesian second moments via the ladder identities.

    <Jx^2 + Jy^2> = s(s+1) - <Jz^2> with s = N/2, <Jx^2 - Jy^2> = Re<J+^2>,
    <{Jx,Jy}> = Im<J+^2>, <{Jx,Jz}> = Re<J+(2Jz+1)>, <{Jy,Jz}> = Im<J+(2Jz+1)>.
    """
    casimir = TOTAL_SPIN * (TOTAL_SPIN + 1.0)
    return CartesianSecondMoments(
        jx2_plus_jy2=casimir - moments.jz_sq,
        jx2_minus_jy2=moments.jplus_sq.real,
        xy_anticomm=moments.jplus_sq.imag,
        xz_anticomm=moments.jplus_2jz1.real,
        yz_anticomm=moments.jplus_2jz1.imag,
    )


def frame_moments_closed_form(params: SqueezeParams, frame: SpinFrame) -> FrameMoments:
    """Transverse second moments in a mean-spin frame, from closed forms only.

    The Cartesian moments are contracted with the frame rows
    n1 = (-sin phi, cos phi, 0) and n2 = (-cos theta cos phi,
    -cos theta sin phi, sin theta), which gives

      <Jn1^2>     = (X + Y)/2 - cos(2 phi) (X - Y)/2 - sin(2 phi) Sxy
      <Jn2^2>     = cos^2(theta) [(X + Y)/2 + cos(2 phi) (X - Y)/2
                    + sin(2 phi) Sxy] + sin^2(theta) <Jz^2>
                    - cos(theta) sin(theta) [cos(phi) <{Jx,Jz}>
                    + sin(phi) <{Jy,Jz}>]
      <{Jn1,Jn2}> = sin(2 phi) cos(theta) (X - Y)
                    - 2 cos(2 phi) cos(theta) Sxy
                    - sin(theta) [sin(phi) <{Jx,Jz}> - cos(phi) <{Jy,Jz}>]

    with X = <Jx^2>, Y = <Jy^2>, Sxy = <{Jx,Jy}>/2.  Requires a frame with a
    defined transverse plane (regular or polar-degenerate).
    """
    if frame.status is FrameStatus.FULLY_DEGENERATE:
        raise DegenerateFrameError(
            "transverse moments undefined on a fully-degenerate frame"
        )
    cart = cartesian_from_raising(second_moments_closed_form(params))
    jz_sq = second_moments_closed_form(params).jz_sq
    half_sum = cart.jx2_plus_jy2 / 2.0
    half_diff = cart.jx2_minus_jy2 / 2.0
    sxy = cart.xy_anticomm / 2.0
    st, ct = math.sin(frame.theta), math.cos(frame.theta)
    sp, cp = math.sin(frame.phi), math.cos(frame.phi)
    c2p, s2p = math.cos(2.0 * frame.phi), math.sin(2.0 * frame.phi)

    jn1_sq = half_sum - c2p * half_diff - s2p * sxy
    jn2_sq = (
        ct ** 2 * (half_sum + c2p * half_diff + s2p * sxy)
        + st ** 2 * jz_sq
        - ct * st * (cp * cart.xz_anticomm + sp * cart.yz_anticomm)
    )
    anticomm = (
        s2p * ct * cart.jx2_minus_jy2
        - 2.0 * c2p * ct * sxy
        - st * (sp * cart.xz_anticomm - cp * cart.yz_anticomm)
    )
    return FrameMoments(jn1_sq=jn1_sq, jn2_sq=jn2_sq, anticomm=anticomm)


def _minimal_variance_radical(fm: FrameMoments) -> float:
    a, b, c = fm.jn1_sq, fm.jn2_sq, fm.anticomm
    return (a + b) - math.hypot(a - b, c)


def minimal_variance_closed_form(fm: FrameMoments) -> float:
    """Smallest transverse variance: the lower eigenvalue
    [(A + B) - sqrt((A - B)^2 + C^2)] / 2 of the moment matrix.

    Directly comparable to the oracle minimum; the literal normalization
    drops the one-half and is handled by squeezing_literal instead.
    """
    return 0.5 * _minimal_variance_radical(fm)


def squeezing_literal(fm: FrameMoments) -> float:
    """Squeezing parameter from the minimal-variance form without the
    one-half factor: (4/N) [(A + B) - sqrt((A - B)^2 + C^2)]."""
    return (4.0 / N_QUBITS) * _minimal_variance_radical(fm)


def squeezing_standard(fm: FrameMoments) -> float:
    """Squeezing parameter with the minimal variance taken as the smallest
    eigenvalue of the transverse moment matrix, so a coherent state gives 1.
    Identically half of squeezing_literal."""
    return (4.0 / N_QUBITS) * 0.5 * _minimal_variance_radical(fm)
