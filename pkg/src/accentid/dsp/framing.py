"""Short-time framing with a Hamming window."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DataError
from .audio_io import AudioClip
from .config import DspConfig


@dataclass(frozen=True)
class FrameSequence:
    """Windowed frames plus the raw (unwindowed) frames.

    `frames` carries the Hamming-windowed signal used for spectral
    analysis; `raw` keeps the plain samples for pitch and LPC stages that
    apply their own conditioning.
    """

    frames: np.ndarray  # (num_frames, frame_len), windowed
    raw: np.ndarray  # (num_frames, frame_len)
    frame_len: int
    hop: int
    sample_rate: int
    window: str = "hamming"

    @property
    def num_frames(self) -> int:
        return self.frames.shape[0]


def hamming(n: int) -> np.ndarray:
    # w[k] = 0.54 - 0.46 cos(2 pi k / (n - 1))
    return np.hamming(n)


def frame_signal(clip: AudioClip, config: DspConfig) -> FrameSequence:
    """Slice a clip into hop-spaced frames; num = 1 + (len - frame)//hop."""
    frame_len = config.frame_samples
    hop = config.hop_samples
    x = clip.samples
    if len(x) < frame_len:
        raise DataError(
            f"clip of {len(x)} samples is shorter than one {frame_len}-sample frame"
        )
    num_frames = 1 + (len(x) - frame_len) // hop
    idx = np.arange(frame_len)[None, :] + hop * np.arange(num_frames)[:, None]
    raw = x[idx]
    window = hamming(frame_len)
    return FrameSequence(
        frames=raw * window,
        raw=raw,
        frame_len=frame_len,
        hop=hop,
        sample_rate=clip.sample_rate,
    )
