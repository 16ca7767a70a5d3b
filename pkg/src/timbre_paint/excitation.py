"""Sine excitation: the raw waveform handed to the coarsest generator.

The f0 track is linearly interpolated up to the audio rate and the output
is the sine of the running phase sum, optionally with additive Gaussian
noise (a training-time regularizer).
"""

from __future__ import annotations

import numpy as np

from .audio import AudioBuffer
from .pitch import F0Track


def sine_excitation(
    f0: F0Track,
    target_rate: int,
    noise_std: float = 0.0,
    confidence_threshold: float = 0.0,
    rng: np.random.Generator | None = None,
) -> AudioBuffer:
    """Render sin(cumulative phase of the upsampled f0) at `target_rate`.

    Unvoiced frames (zero frequency, or confidence below the threshold)
    contribute no phase increment. Phase at sample t accumulates the
    increments of samples 0..t-1, so a constant f0 yields exactly
    sin(2*pi*f0*t/rate).
    """
    if noise_std < 0:
        raise ValueError("noise_std must be >= 0")
    frame_rate = f0.frame_rate
    factor = target_rate / frame_rate
    if abs(factor - round(factor)) > 1e-9 or round(factor) < 1:
        raise ValueError(
            f"target rate {target_rate} is not an integer multiple of the "
            f"f0 frame rate {frame_rate}"
        )
    factor = int(round(factor))
    freqs = f0.frequencies.astype(np.float64).copy()
    voiced = freqs > 0
    if confidence_threshold > 0:
        voiced &= f0.confidences >= confidence_threshold
    freqs[~voiced] = 0.0

    n_out = len(freqs) * factor
    positions = np.arange(n_out) / factor
    f_up = np.interp(positions, np.arange(len(freqs)), freqs)
    increments = 2.0 * np.pi * f_up / target_rate
    phase = np.concatenate(([0.0], np.cumsum(increments[:-1])))
    samples = np.sin(phase)
    if noise_std > 0:
        rng = np.random.default_rng() if rng is None else rng
        samples = samples + rng.normal(0.0, noise_std, size=n_out)
    return AudioBuffer(samples, target_rate)
