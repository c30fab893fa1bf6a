"""WAV loading: decode, downmix, resample to the canonical 16 kHz."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from pathlib import Path

import numpy as np
from scipy.io import wavfile
from scipy.signal import resample_poly

from ..errors import DataError
from .config import TARGET_SAMPLE_RATE


@dataclass(frozen=True)
class AudioClip:
    """Mono waveform in [-1, 1] plus its sample rate."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self) -> None:
        if self.samples.ndim != 1 or len(self.samples) == 0:
            raise DataError("AudioClip requires a non-empty mono signal")
        if self.sample_rate <= 0:
            raise DataError("sample_rate must be positive")

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.sample_rate


_PCM_SCALE = {
    np.dtype(np.int16): 32768.0,
    np.dtype(np.int32): 2147483648.0,
}


def load_audio(path: str | Path, target_rate: int = TARGET_SAMPLE_RATE) -> AudioClip:
    """Read a RIFF/WAV file into a mono, 16 kHz, [-1, 1] clip.

    Accepts PCM 8/16/24/32-bit and 32/64-bit float, mono or stereo, any
    sample rate. Stereo is downmixed by channel average; rate conversion
    uses polyphase windowed-sinc resampling.
    """
    path = Path(path)
    try:
        rate, data = wavfile.read(path)
    except FileNotFoundError:
        raise DataError(f"audio file not found: {path}") from None
    except ValueError as exc:
        raise DataError(f"unreadable audio {path}: {exc}") from exc

    if data.size == 0:
        raise DataError(f"zero-length audio: {path}")

    x = np.asarray(data)
    if x.dtype == np.uint8:  # 8-bit WAV is unsigned
        x = (x.astype(np.float64) - 128.0) / 128.0
    elif x.dtype in _PCM_SCALE:
        x = x.astype(np.float64) / _PCM_SCALE[x.dtype]
    else:  # float32/float64 already in [-1, 1] by convention
        x = x.astype(np.float64)

    if x.ndim == 2:
        x = x.mean(axis=1)

    if rate != target_rate:
        g = gcd(int(rate), int(target_rate))
        x = resample_poly(x, target_rate // g, rate // g)
        if len(x) == 0:
            raise DataError(f"zero-length audio after resampling: {path}")

    peak = np.max(np.abs(x))
    if peak > 1.0:  # resampling ripple or hot float input
        x = x / peak
    return AudioClip(samples=x, sample_rate=target_rate)


def write_wav(path: str | Path, samples: np.ndarray, rate: int) -> None:
    """Write 16-bit PCM. Test and toy-corpus helper, not a pipeline stage."""
    x = np.clip(np.asarray(samples, dtype=np.float64), -1.0, 1.0)
    wavfile.write(Path(path), rate, (x * 32767.0).astype(np.int16))
