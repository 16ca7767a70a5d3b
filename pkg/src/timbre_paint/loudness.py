"""A-weighted log-power loudness frames.

One loudness value per 32 input samples: short Hann-windowed power spectra,
per-bin A-weighting (IEC 61672 curve) added to the dB power, averaged over
bins and floored at -90 dB.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .audio import AudioBuffer
from .spectral import frame_signal, hann_window

LOUDNESS_WINDOW = 256
LOUDNESS_HOP = 32
LOUDNESS_FLOOR_DB = -90.0
_POWER_GUARD = 1e-10


@dataclass
class LoudnessTrack:
    """Frame-rate loudness signal; exactly floor(n_samples / hop) frames."""

    values: np.ndarray
    hop: int
    source_rate: int

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64).reshape(-1)

    def __len__(self):
        return self.values.size

    @property
    def frame_rate(self) -> float:
        return self.source_rate / self.hop


def a_weighting_db(frequencies: np.ndarray, floor_db: float = -80.0) -> np.ndarray:
    """IEC 61672 A-weighting curve in dB at the given frequencies.

    The curve diverges to -inf at 0 Hz, so it is floored (librosa uses the
    same convention) to keep the DC bin finite.
    """
    f2 = np.asarray(frequencies, dtype=np.float64) ** 2
    c1, c2, c3, c4 = 12194.217**2, 20.598997**2, 107.65265**2, 737.86223**2
    with np.errstate(divide="ignore"):
        gain = (
            np.log10(c1)
            + 2.0 * np.log10(np.maximum(f2, 1e-30))
            - np.log10(f2 + c1)
            - np.log10(f2 + c2)
            - 0.5 * np.log10(f2 + c3)
            - 0.5 * np.log10(f2 + c4)
        )
    return np.maximum(2.0 + 20.0 * gain, floor_db)


def loudness(x: AudioBuffer) -> LoudnessTrack:
    """Extract the loudness track of a buffer (one frame per 32 samples)."""
    if len(x) < LOUDNESS_WINDOW:
        raise ValueError(
            f"buffer too short for loudness analysis: {len(x)} < {LOUDNESS_WINDOW}"
        )
    n_frames = len(x) // LOUDNESS_HOP
    frames = frame_signal(x.samples, LOUDNESS_WINDOW, LOUDNESS_HOP)[:n_frames]
    power = np.abs(np.fft.rfft(frames * hann_window(LOUDNESS_WINDOW), axis=-1)) ** 2
    log_power_db = 10.0 * np.log10(power + _POWER_GUARD)
    freqs = np.fft.rfftfreq(LOUDNESS_WINDOW, d=1.0 / x.sample_rate)
    weighted = log_power_db + a_weighting_db(freqs)
    values = np.maximum(weighted.mean(axis=-1), LOUDNESS_FLOOR_DB)
    return LoudnessTrack(values, LOUDNESS_HOP, x.sample_rate)
