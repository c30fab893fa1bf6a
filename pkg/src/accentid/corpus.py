"""Dataset manifests: labeled instances with audio path, transcript and prompt.

A manifest is a CSV with header ``id,audio_path,transcript_path,label,prompt``.
Paths are resolved relative to the manifest's directory at parse time, so a
manifest can travel with its data. Instances are kept in lexicographic id
order, which fixes the canonical ordering for everything downstream.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError

# The 11 first-language classes, in canonical (alphabetical) order. All
# tie-breaking throughout the pipeline uses this ordering.
L1_CODES = ("CHN", "ENS", "HKG", "IDN", "JPN", "KOR", "PAK", "PHL", "SIN", "THA", "TWN")

PROMPTS = ("P1", "P2")

MANIFEST_HEADER = ["id", "audio_path", "transcript_path", "label", "prompt"]


def label_index(code: str) -> int:
    return L1_CODES.index(code)


@dataclass(frozen=True)
class Instance:
    """One recording: audio file, optional transcript, L1 label, prompt."""

    id: str
    audio_path: Path
    transcript_path: Path | None
    label: str
    prompt: str

    def load_transcript(self) -> str:
        """Read the transcript text. Errors at use time, not parse time."""
        if self.transcript_path is None:
            raise DataError(f"instance {self.id} has no transcript")
        try:
            return self.transcript_path.read_text(encoding="utf-8")
        except OSError as exc:
            raise DataError(f"cannot read transcript for {self.id}: {exc}") from exc


@dataclass(frozen=True)
class CorpusManifest:
    """Immutable, id-sorted collection of instances."""

    instances: tuple[Instance, ...]
    provenance: str = ""

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.instances, key=lambda inst: inst.id))
        object.__setattr__(self, "instances", ordered)

    def __len__(self) -> int:
        return len(self.instances)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(inst.id for inst in self.instances)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(inst.label for inst in self.instances)


def parse_manifest(path: str | Path) -> CorpusManifest:
    """Parse a manifest CSV, validating labels, prompts and id uniqueness."""
    path = Path(path)
    if not path.is_file():
        raise DataError(f"manifest not found: {path}")
    base = path.resolve().parent

    instances: list[Instance] = []
    seen: set[str] = set()
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"empty manifest: {path}") from None
        if [h.strip() for h in header] != MANIFEST_HEADER:
            raise DataError(
                f"bad manifest header {header!r}, expected {MANIFEST_HEADER!r}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 5:
                raise DataError(f"malformed row at line {lineno}: expected 5 fields, got {len(row)}")
            inst_id, audio_path, transcript_path, label, prompt = (f.strip() for f in row)
            if not inst_id:
                raise DataError(f"empty id at line {lineno}")
            if inst_id in seen:
                raise DataError(f"duplicate id {inst_id} at line {lineno}")
            if label not in L1_CODES:
                raise DataError(f"unknown label {label} at line {lineno}")
            if prompt not in PROMPTS:
                raise DataError(f"unknown prompt {prompt} at line {lineno}")
            seen.add(inst_id)
            instances.append(
                Instance(
                    id=inst_id,
                    audio_path=(base / audio_path).resolve() if audio_path else Path(),
                    transcript_path=(base / transcript_path).resolve() if transcript_path else None,
                    label=label,
                    prompt=prompt,
                )
            )
    return CorpusManifest(instances=tuple(instances), provenance=str(path))


def write_manifest(manifest: CorpusManifest, path: str | Path) -> None:
    """Serialize a manifest back to CSV (absolute paths, id order)."""
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(MANIFEST_HEADER)
        for inst in manifest.instances:
            writer.writerow(
                [
                    inst.id,
                    str(inst.audio_path) if inst.audio_path != Path() else "",
                    str(inst.transcript_path) if inst.transcript_path else "",
                    inst.label,
                    inst.prompt,
                ]
            )


def class_distribution(manifest: CorpusManifest) -> dict[str, int]:
    """Per-class instance counts over all 11 labels (zero-filled)."""
    counts = Counter(inst.label for inst in manifest.instances)
    return {code: counts.get(code, 0) for code in L1_CODES}


def split_by_prompt(manifest: CorpusManifest) -> tuple[CorpusManifest, CorpusManifest]:
    """Partition into (P1, P2) manifests; disjoint union equals the input."""
    p1 = tuple(i for i in manifest.instances if i.prompt == "P1")
    p2 = tuple(i for i in manifest.instances if i.prompt == "P2")
    note = manifest.provenance
    return (
        CorpusManifest(instances=p1, provenance=f"{note} [P1]"),
        CorpusManifest(instances=p2, provenance=f"{note} [P2]"),
    )
