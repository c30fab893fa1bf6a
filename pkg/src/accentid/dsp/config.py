"""Configuration for the acoustic feature extractor."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ConfigError

TARGET_SAMPLE_RATE = 16_000

# Statistics collapsing each per-frame track into static features.
DEFAULT_FUNCTIONALS = (
    "mean",
    "stddev",
    "skewness",
    "kurtosis",
    "min",
    "max",
    "range",
    "quartile1",
    "quartile2",
    "quartile3",
    "iqr",
    "slope",
    "offset",
    "mcr",
)

GROUPS = (
    "energy_amplitude",
    "spectral",
    "mfcc",
    "auditory_spectrum",
    "voicing",
    "formant",
)


@dataclass(frozen=True)
class DspConfig:
    frame_ms: float = 25.0
    hop_ms: float = 10.0
    fft_size: int = 512
    mel_bands: int = 26
    mfcc_count: int = 13  # plus delta and delta-delta tracks
    lpc_order: int = 16
    formant_count: int = 4
    f0_range_hz: tuple[float, float] = (60.0, 400.0)
    functional_set: tuple[str, ...] = DEFAULT_FUNCTIONALS
    # numeric guards, exposed rather than hard-coded
    energy_floor_nats: float = -50.0
    formant_max_bandwidth_hz: float = 400.0
    formant_freq_range_hz: tuple[float, float] = (90.0, 5500.0)
    preemphasis: float = 0.97
    rolloff_fraction: float = 0.85
    voicing_threshold: float = 0.45
    silence_rms: float = 1e-7
    delta_window: int = 2
    sample_rate: int = TARGET_SAMPLE_RATE

    def __post_init__(self) -> None:
        if self.fft_size < self.frame_samples:
            raise ConfigError(
                f"fft_size {self.fft_size} < frame of {self.frame_samples} samples"
            )
        if self.mfcc_count > self.mel_bands:
            raise ConfigError("mfcc_count must not exceed mel_bands")
        if self.lpc_order < 2 * self.formant_count + 2:
            raise ConfigError("lpc_order must be >= 2*formant_count + 2")
        if not 0 < self.f0_range_hz[0] < self.f0_range_hz[1]:
            raise ConfigError("f0_range_hz must be an increasing positive pair")
        unknown = set(self.functional_set) - set(DEFAULT_FUNCTIONALS)
        if unknown:
            raise ConfigError(f"unknown functionals: {sorted(unknown)}")

    @property
    def frame_samples(self) -> int:
        return int(round(self.frame_ms * self.sample_rate / 1000.0))

    @property
    def hop_samples(self) -> int:
        return int(round(self.hop_ms * self.sample_rate / 1000.0))
