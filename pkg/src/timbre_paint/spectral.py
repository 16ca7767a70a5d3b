"""STFT magnitude analysis shared by features, losses and diagnostics."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .audio import AudioBuffer


@lru_cache(maxsize=32)
def hann_window(size: int) -> np.ndarray:
    """Periodic Hann window."""
    w = 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(size) / size)
    w.setflags(write=False)
    return w


def frame_count(length: int, hop: int) -> int:
    return -(-length // hop)


def reflect_pad(x: np.ndarray, pad: int) -> np.ndarray:
    """Mirror-pad (edge sample not repeated) along the last axis."""
    if x.shape[-1] <= pad:
        raise ValueError(
            f"signal of length {x.shape[-1]} too short for reflection pad {pad}"
        )
    width = [(0, 0)] * (x.ndim - 1) + [(pad, pad)]
    return np.pad(x, width, mode="reflect")


def frame_signal(x: np.ndarray, size: int, hop: int) -> np.ndarray:
    """Cut a center-padded signal into ceil(n/hop) frames of `size` samples.

    Works on (..., n) arrays; frames are copies laid out as (..., frames, size).
    """
    n = x.shape[-1]
    n_frames = frame_count(n, hop)
    padded = reflect_pad(x, size // 2)
    strides = padded.strides[:-1] + (hop * padded.strides[-1], padded.strides[-1])
    shape = padded.shape[:-1] + (n_frames, size)
    view = np.lib.stride_tricks.as_strided(padded, shape=shape, strides=strides)
    return np.ascontiguousarray(view)


@dataclass
class Spectrogram:
    """Non-negative STFT magnitudes, frames x bins."""

    magnitudes: np.ndarray
    fft_size: int
    hop: int
    window: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.window is None:
            self.window = hann_window(self.fft_size)

    @property
    def bins(self) -> int:
        return self.fft_size // 2 + 1


def stft_magnitude(x: AudioBuffer, fft_size: int, hop: int) -> Spectrogram:
    """Hann-windowed STFT magnitudes with center reflection padding.

    Frame count is ceil(len(x) / hop); bins = fft_size/2 + 1.
    """
    if fft_size < 2 or fft_size & (fft_size - 1):
        raise ValueError(f"fft_size must be a power of two, got {fft_size}")
    if hop < 1:
        raise ValueError("hop must be >= 1")
    mags = stft_magnitude_array(x.samples, fft_size, hop)
    return Spectrogram(mags, fft_size, hop)


def stft_magnitude_array(x: np.ndarray, fft_size: int, hop: int) -> np.ndarray:
    """Array-level STFT magnitude on (..., n) input -> (..., frames, bins)."""
    frames = frame_signal(np.asarray(x, dtype=np.float64), fft_size, hop)
    return np.abs(np.fft.rfft(frames * hann_window(fft_size), axis=-1))
