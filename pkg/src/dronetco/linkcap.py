"""Shannon-limit mapping between link capacity and required SNR.

The drone link runs in a fixed 100 MHz allocation, so every capacity target
translates into a received-SNR requirement via C = B*log2(1 + SNR). Each
added bit/s/Hz costs at least 10*log10(2) ~= 3.0103 dB, approaching that
floor only asymptotically -- so at finite SNR a "+3 dB per 100 Mbps" rule is
slightly optimistic. The cost model keeps its exact 100 Mbps steps; this
module reports what each step truly demands of the radio.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, ValidationError

__all__ = [
    "DEFAULT_BANDWIDTH_HZ",
    "DB_PER_DOUBLING",
    "LinkBudget",
    "shannon_capacity",
    "required_snr",
]

DEFAULT_BANDWIDTH_HZ = 1e8

# SNR increase (dB) that doubles (1 + SNR_linear): the asymptotic cost of
# one extra bit/s/Hz.
DB_PER_DOUBLING = 10.0 * math.log10(2.0)


def shannon_capacity(bandwidth_hz: float, snr_db: float) -> float:
    """Shannon capacity in Mbps of a ``bandwidth_hz`` channel at ``snr_db``."""
    if not bandwidth_hz > 0:
        raise DomainError(f"bandwidth_hz must be > 0 (got {bandwidth_hz})")
    if not math.isfinite(snr_db):
        raise DomainError(f"snr_db must be finite (got {snr_db})")
    snr_linear = 10.0 ** (snr_db / 10.0)
    return bandwidth_hz * math.log2(1.0 + snr_linear) / 1e6


def required_snr(capacity_mbps: float, bandwidth_hz: float) -> float:
    """SNR in dB at which ``bandwidth_hz`` carries ``capacity_mbps``.

    Exact inverse of shannon_capacity.
    """
    if not capacity_mbps > 0:
        raise DomainError(f"capacity_mbps must be > 0 (got {capacity_mbps})")
    if not bandwidth_hz > 0:
        raise DomainError(f"bandwidth_hz must be > 0 (got {bandwidth_hz})")
    bits_per_hz = capacity_mbps * 1e6 / bandwidth_hz
    snr_linear = 2.0 ** bits_per_hz - 1.0
    return 10.0 * math.log10(snr_linear)


@dataclass(frozen=True)
class LinkBudget:
    """A consistent (SNR, capacity) operating point on one link.

    The capacity must be the Shannon capacity of the channel at the stated
    SNR (to 1e-9 relative); use :meth:`from_snr` or :meth:`from_capacity`
    to build one without computing the matching value yourself.
    """

    snr_db: float
    capacity_mbps: float
    bandwidth_hz: float = DEFAULT_BANDWIDTH_HZ

    def __post_init__(self):
        if not self.bandwidth_hz > 0:
            raise ValidationError(
                f"bandwidth_hz must be > 0 (got {self.bandwidth_hz})")
        expected = shannon_capacity(self.bandwidth_hz, self.snr_db)
        if abs(self.capacity_mbps - expected) > 1e-9 * abs(expected):
            raise ValidationError(
                f"capacity_mbps {self.capacity_mbps} is not the Shannon "
                f"capacity at {self.snr_db} dB over {self.bandwidth_hz} Hz "
                f"(expected {expected!r})")

    @classmethod
    def from_snr(cls, snr_db: float,
                 bandwidth_hz: float = DEFAULT_BANDWIDTH_HZ) -> "LinkBudget":
        return cls(snr_db, shannon_capacity(bandwidth_hz, snr_db), bandwidth_hz)

    @classmethod
    def from_capacity(cls, capacity_mbps: float,
                      bandwidth_hz: float = DEFAULT_BANDWIDTH_HZ) -> "LinkBudget":
        return cls(required_snr(capacity_mbps, bandwidth_hz), capacity_mbps,
                   bandwidth_hz)
