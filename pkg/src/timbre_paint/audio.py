"""Audio buffers and RIFF/WAVE file I/O.

Input accepts PCM16 or 32-bit float WAV, any channel count; multi-channel
audio is mixed down to mono at ingest. Output is always PCM16 mono.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from scipy.io import wavfile

PCM16_SCALE = 32768.0


@dataclass
class AudioBuffer:
    """Mono sample sequence plus its sample rate in Hz."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64).reshape(-1)
        if int(self.sample_rate) <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        self.sample_rate = int(self.sample_rate)
        if self.samples.size and not np.all(np.isfinite(self.samples)):
            raise ValueError("audio samples must be finite")

    def __len__(self):
        return self.samples.size

    @property
    def duration(self) -> float:
        return self.samples.size / self.sample_rate

    def copy(self) -> "AudioBuffer":
        return AudioBuffer(self.samples.copy(), self.sample_rate)


def read_wav(path) -> AudioBuffer:
    """Read a WAV file into a mono AudioBuffer at the file's native rate.

    PCM16 samples are scaled by 1/32768; float32 files are taken as-is.
    Multi-channel input is averaged down to one channel.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"no such audio file: {path}")
    try:
        rate, data = wavfile.read(path)
    except Exception as exc:
        raise ValueError(f"unreadable WAV file {path}: {exc}") from None
    if data.dtype == np.int16:
        samples = data.astype(np.float64) / PCM16_SCALE
    elif data.dtype in (np.float32, np.float64):
        samples = data.astype(np.float64)
    else:
        raise ValueError(
            f"unsupported WAV sample format {data.dtype} in {path}; "
            "expected PCM16 or 32-bit float"
        )
    if samples.ndim == 2:
        samples = samples.mean(axis=1)
    return AudioBuffer(samples, rate)


def write_wav(buffer: AudioBuffer, path) -> None:
    """Write a buffer as PCM16 mono, clamping samples to [-1, 1] first.

    Quantization is round-to-nearest at 1/32768 steps, so a read-back
    differs from the original by at most one quantization step.
    """
    x = np.clip(buffer.samples, -1.0, 1.0)
    q = np.clip(np.rint(x * PCM16_SCALE), -32768, 32767).astype(np.int16)
    try:
        wavfile.write(path, buffer.sample_rate, q)
    except Exception as exc:
        raise OSError(f"cannot write WAV file {path}: {exc}") from None
