"""Asymmetric and symmetric field constructions and the six-channel stack."""

import logging

import numpy as np
from numpy.typing import ArrayLike

from src.config.enums import GafKind, GafVariant, KinematicChannel
from src.config.models import EncodingConfig
from src.exceptions import GafEncodingError, OddLengthError
from src.gaf.fields import field_values
from src.gaf.models import STACK_CHANNELS, GafMatrix, GafStack
from src.signature.kinematics import extract_channels, kinematics, minmax_normalize, resample
from src.signature.models import KinematicChannels, RawSignature

logger = logging.getLogger(__name__)

_KINDS = (GafKind.GASF, GafKind.GADF)


def asymmetric_values(series: ArrayLike, kind: GafKind) -> np.ndarray:
    """Upper triangle (diagonal included) from the first half, strict lower from the second."""
    x = np.asarray(series, dtype=np.float64)
    if x.ndim != 1:
        raise GafEncodingError(f"expected a 1-D series, got shape {x.shape}")
    if x.shape[0] % 2:
        raise OddLengthError(x.shape[0])
    half = x.shape[0] // 2
    first = field_values(x[:half], kind)
    second = field_values(x[half:], kind)
    upper = np.triu(np.ones((half, half), dtype=bool))
    return np.where(upper, first, second)


def asymmetric_gaf(series: ArrayLike, kind: GafKind) -> GafMatrix:
    """Asymmetric field of side M/2 for a series normalised over its full length M.

    Raises:
        OddLengthError: If M is odd
    """
    return GafMatrix(kind, asymmetric_values(series, kind))


def symmetric_values(
    series: ArrayLike, target: int, kind: GafKind, timestamps: ArrayLike | None = None
) -> np.ndarray:
    x = np.asarray(series, dtype=np.float64)
    n = x.shape[0]
    if target > n:
        raise GafEncodingError(f"symmetric GAF target side {target} exceeds series length {n}")
    t = np.arange(n, dtype=np.float64) if timestamps is None else np.asarray(timestamps, dtype=np.float64)
    return field_values(minmax_normalize(resample(x, t, target)), kind)


def symmetric_gaf(
    series: ArrayLike, target: int, kind: GafKind, timestamps: ArrayLike | None = None
) -> GafMatrix:
    """Standard Gramian field of a series downsampled to ``target`` points.

    Args:
        series: Raw length-n series
        target: Output side H (H <= n)
        kind: GASF or GADF
        timestamps: Sample times of ``series``; uniform spacing when omitted
    """
    return GafMatrix(kind, symmetric_values(series, target, kind, timestamps))


def encode_six_channel(k: KinematicChannels) -> GafStack:
    """Stack asymmetric GASF/GADF fields of v, dp and theta in canonical order."""
    channels = np.stack(
        [asymmetric_values(series, kind) for series in k.as_tuple() for kind in _KINDS]
    )
    return GafStack(channels=channels, M=k.M)


def encode_signature(sig: RawSignature, encoding: EncodingConfig) -> GafStack:
    """Encode a signature with the configured variant and channel subset.

    Channels outside ``encoding.channels`` are left as zero fields so the stack
    keeps its six-channel layout.
    """
    side = encoding.side
    channels = np.zeros((STACK_CHANNELS, side, side), dtype=np.float64)

    if encoding.gaf_variant is GafVariant.ASYM:
        series = extract_channels(sig, encoding.M).as_tuple()
        for channel in encoding.channels:
            for kind, slot in zip(_KINDS, channel.stack_slots):
                channels[slot] = asymmetric_values(series[channel.index], kind)
    else:
        raw = kinematics(sig)
        for channel in encoding.channels:
            for kind, slot in zip(_KINDS, channel.stack_slots):
                channels[slot] = symmetric_values(raw[channel.index], side, kind, sig.t)

    if len(encoding.channels) < len(KinematicChannel):
        logger.debug(f"Encoded {sig.writer_id} with channel subset {[c.value for c in encoding.channels]}")
    return GafStack(channels=channels, M=encoding.M)
