"""Mapping of control vectors and corpus lines onto playable utterance plans.

Simulated (x, y, z) triples become speech parameters through three clamps:

* rate:   |x| when 20 <= |x| <= 1000, otherwise the 50 fallback
* volume: z when |z| <= 1 (sign preserved; playback treats it as a
  magnitude), otherwise the 0.5 fallback
* voice:  a fixed slot in single-voice modes; in multi-voice mode the
  truncated y indexes slots 0..47, with 17 as the overflow slot above 47

The rhythmic mode skips the simulators entirely: each line draws an
integer rate from [170, 200); above 185 the line is spoken whole, below it
is split into 2, 3 or 4 near-equal word segments, each later segment 5/4
faster than the previous (capped at 250) and 0.15 louder than the base.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional
from xml.sax.saxutils import escape

import numpy as np

from .corpus import Corpus
from .errors import EmptyLogError, InvalidConfigError, PlanRangeError
from .sequencers import (
    METHOD_GIBBS,
    METHOD_LORENZ,
    RNG_ALGORITHM,
    ControlVector,
    GibbsConfig,
    LorenzConfig,
    SampleLog,
)

MODE_GIBBS_SINGLE = "gibbs_single"
MODE_GIBBS_MULTI = "gibbs_multi"
MODE_LORENZ = "lorenz"
MODE_RHYTHMIC = "rhythmic"
MODES = (MODE_GIBBS_SINGLE, MODE_GIBBS_MULTI, MODE_LORENZ, MODE_RHYTHMIC)
VECTOR_MODES = (MODE_GIBBS_SINGLE, MODE_GIBBS_MULTI, MODE_LORENZ)

RATE_MIN = 20.0
RATE_MAX = 1000.0
RATE_FALLBACK = 50.0
VOLUME_FALLBACK = 0.5

RHYTHMIC_RATE_LOW = 170
RHYTHMIC_RATE_HIGH = 200  # exclusive, like randrange
WHOLE_LINE_RATE = 185  # strictly above: speak the line unsplit
SEGMENT_RATE_GROWTH = 5.0 / 4.0
SEGMENT_RATE_CAP = 250.0
SEGMENT_VOLUME_BUMP = 0.15

SPLIT_SEGMENTS = {"half": 2, "third": 3, "quarter": 4}

MAX_LINES = 10
DEFAULT_PAUSE_MS = 300


def clamp_rate(x: float) -> float:
    """Usable speech rate from raw rate material; |x| in range, else 50."""
    magnitude = abs(x)
    if RATE_MIN <= magnitude <= RATE_MAX:
        return magnitude
    return RATE_FALLBACK


def clamp_volume(z: float) -> float:
    """Signed volume from raw volume material; z when |z| <= 1, else 0.5."""
    if abs(z) <= 1.0:
        return z
    return VOLUME_FALLBACK


@dataclass(frozen=True)
class PlannerConfig:
    """Line-selection and voice settings shared by all planning modes.

    ``base_volume`` only matters to the rhythmic mode, where it plays the
    role the volume slider plays for the simulated modes.
    """

    number_of_lines: int = 1
    starting_point: int = 0
    split: str = "half"
    fixed_voice: int = 7
    multi_voice_cap: int = 47
    overflow_voice: int = 17
    base_volume: float = 0.5
    pause_ms: int = DEFAULT_PAUSE_MS

    def __post_init__(self):
        if not isinstance(self.number_of_lines, int) or not 1 <= self.number_of_lines <= MAX_LINES:
            raise InvalidConfigError(
                "number_of_lines", f"must be an integer in [1, {MAX_LINES}]"
            )
        if not isinstance(self.starting_point, int) or self.starting_point < 0:
            raise InvalidConfigError("starting_point", "must be a non-negative integer")
        if self.split not in SPLIT_SEGMENTS:
            raise InvalidConfigError(
                "split", f"must be one of {sorted(SPLIT_SEGMENTS)}"
            )
        for name in ("fixed_voice", "multi_voice_cap", "overflow_voice"):
            slot = getattr(self, name)
            if not isinstance(slot, int) or not 0 <= slot <= 47:
                raise InvalidConfigError(name, "must be an integer voice slot in [0, 47]")
        if self.pause_ms < 0:
            raise InvalidConfigError("pause_ms", "must be >= 0")

    def to_dict(self) -> dict:
        return {
            "number_of_lines": self.number_of_lines,
            "starting_point": self.starting_point,
            "split": self.split,
            "fixed_voice": self.fixed_voice,
            "multi_voice_cap": self.multi_voice_cap,
            "overflow_voice": self.overflow_voice,
            "base_volume": self.base_volume,
            "pause_ms": self.pause_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PlannerConfig":
        return cls(**d)


def select_voice(y: float, mode: str, config: PlannerConfig) -> int:
    """Voice slot for one event: fixed in single-voice modes, y-indexed in
    multi-voice mode with the overflow slot above the cap."""
    if mode != MODE_GIBBS_MULTI:
        return config.fixed_voice
    slot = int(y)  # truncates toward zero
    if slot > config.multi_voice_cap:
        return config.overflow_voice
    return min(max(slot, 0), config.multi_voice_cap)


@dataclass(frozen=True)
class ControlEvent:
    """One playable utterance: a text segment plus clamped speech parameters."""

    line_index: int
    text: str
    rate: float
    volume: float
    voice_slot: int
    leading_pause: bool

    def __post_init__(self):
        if not self.text:
            raise InvalidConfigError("text", "event text must be non-empty")
        if not -1.0 <= self.volume <= 1.0:
            raise InvalidConfigError("volume", "must be within [-1, 1]")
        if not 0 <= self.voice_slot <= 47:
            raise InvalidConfigError("voice_slot", "must be within [0, 47]")

    def to_dict(self) -> dict:
        return {
            "line_index": self.line_index,
            "text": self.text,
            "rate": self.rate,
            "volume": self.volume,
            "voice_slot": self.voice_slot,
            "leading_pause": self.leading_pause,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ControlEvent":
        return cls(**d)


@dataclass(frozen=True)
class PerformancePlan:
    """A deterministic, seed-stamped sequence of utterance events.

    ``config`` is the full generation snapshot (planner plus sequencer
    settings).  ``created_at`` is kept out of the canonical JSON so
    identical inputs always serialize to identical bytes.
    """

    mode: str
    seed: int
    events: tuple[ControlEvent, ...]
    config: dict
    sample_log: Optional[SampleLog]
    created_at: str

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "seed": self.seed,
            "config": self.config,
            "events": [ev.to_dict() for ev in self.events],
            "samples": self.sample_log.samples() if self.sample_log else [],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @property
    def plan_id(self) -> str:
        """Content hash of the canonical JSON; identical plans share an id."""
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()[:16]

    @classmethod
    def from_dict(cls, d: dict, created_at: str = "") -> "PerformancePlan":
        seq = d["config"].get("sequencer") or {}
        kind = seq.get("kind")
        log: Optional[SampleLog] = None
        if kind in (METHOD_GIBBS, METHOD_LORENZ) and d.get("samples"):
            params = {k: v for k, v in seq.items() if k not in ("kind", "rng")}
            config = GibbsConfig(**params) if kind == METHOD_GIBBS else LorenzConfig(**params)
            vectors = tuple(ControlVector(*row) for row in d["samples"])
            log = SampleLog(vectors, kind, config, rng=seq.get("rng", RNG_ALGORITHM))
        return cls(
            mode=d["mode"],
            seed=d["seed"],
            events=tuple(ControlEvent.from_dict(e) for e in d["events"]),
            config=d["config"],
            sample_log=log,
            created_at=created_at,
        )


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _check_slice(corpus: Corpus, start: int, count: int) -> None:
    if start < 0 or start + count > len(corpus.lines):
        raise PlanRangeError(
            f"lines [{start}, {start + count}) fall outside corpus of "
            f"{len(corpus.lines)} lines"
        )


def plan_lines(corpus: Corpus, log: SampleLog, config: PlannerConfig,
               mode: str) -> PerformancePlan:
    """Build one clamped utterance event per corpus line from a sample log.

    Every event opens with the inter-line pause.  Raises EmptyLogError for
    a log without vectors and PlanRangeError when the corpus slice starting
    at ``config.starting_point`` runs past the last line.
    """
    if mode not in VECTOR_MODES:
        raise InvalidConfigError("mode", f"must be one of {VECTOR_MODES}")
    if log is None or not log.vectors:
        raise EmptyLogError("cannot plan from an empty sample log")
    start = config.starting_point
    _check_slice(corpus, start, len(log.vectors))
    events = []
    for offset, vec in enumerate(log.vectors):
        line = corpus.lines[start + offset]
        events.append(ControlEvent(
            line_index=line.index,
            text=line.text,
            rate=clamp_rate(vec.x),
            volume=clamp_volume(vec.z),
            voice_slot=select_voice(vec.y, mode, config),
            leading_pause=True,
        ))
    snapshot = {"planner": config.to_dict(), "sequencer": log.config.to_dict()}
    return PerformancePlan(
        mode=mode,
        seed=log.config.seed,
        events=tuple(events),
        config=snapshot,
        sample_log=log,
        created_at=_now(),
    )


def _segment_bounds(length: int, k: int) -> list[int]:
    return [(s * length) // k for s in range(k + 1)]


def plan_rhythmic(corpus: Corpus, config: PlannerConfig, seed: int) -> PerformancePlan:
    """Build the within-line split plan driven by seeded random rates.

    Per line, an integer rate is drawn from [170, 200).  Above 185 the line
    is spoken whole; otherwise it is split into near-equal segments, each
    later segment 5/4 faster than the previous (never beyond 250) at base
    volume + 0.15 (never beyond 1).  Lines shorter than the segment count
    collapse to a single whole-line event.  Only the first segment of each
    line carries the inter-line pause.
    """
    start, n = config.starting_point, config.number_of_lines
    _check_slice(corpus, start, n)
    rng = np.random.Generator(np.random.PCG64(seed))
    k = SPLIT_SEGMENTS[config.split]
    base = clamp_volume(config.base_volume)
    bumped = min(base + SEGMENT_VOLUME_BUMP, 1.0)
    events = []
    for offset in range(n):
        line = corpus.lines[start + offset]
        rate = float(rng.integers(RHYTHMIC_RATE_LOW, RHYTHMIC_RATE_HIGH))
        if rate > WHOLE_LINE_RATE or len(line.words) < k:
            events.append(ControlEvent(
                line_index=line.index,
                text=line.text,
                rate=rate,
                volume=base,
                voice_slot=config.fixed_voice,
                leading_pause=True,
            ))
            continue
        bounds = _segment_bounds(len(line.words), k)
        seg_rate = rate
        for si in range(k):
            if si > 0:
                seg_rate = min(seg_rate * SEGMENT_RATE_GROWTH, SEGMENT_RATE_CAP)
            events.append(ControlEvent(
                line_index=line.index,
                text=" ".join(line.words[bounds[si]:bounds[si + 1]]),
                rate=seg_rate,
                volume=base if si == 0 else bumped,
                voice_slot=config.fixed_voice,
                leading_pause=si == 0,
            ))
    snapshot = {
        "planner": config.to_dict(),
        "sequencer": {"kind": MODE_RHYTHMIC, "seed": seed, "rng": RNG_ALGORITHM},
    }
    return PerformancePlan(
        mode=MODE_RHYTHMIC,
        seed=seed,
        events=tuple(events),
        config=snapshot,
        sample_log=None,
        created_at=_now(),
    )


def render_ssml(plan: PerformancePlan) -> str:
    """Serialize a plan as speech markup: one prosody element per event,
    preceded by a break element wherever the event opens with a pause."""
    pause_ms = plan.config.get("planner", {}).get("pause_ms", DEFAULT_PAUSE_MS)
    lines = ["<speak>"]
    for ev in plan.events:
        if ev.leading_pause:
            lines.append(f'  <break time="{pause_ms}ms"/>')
        lines.append(
            f'  <voice name="slot{ev.voice_slot}">'
            f'<prosody rate="{ev.rate!r}" volume="{ev.volume!r}">'
            f"{escape(ev.text)}</prosody></voice>"
        )
    lines.append("</speak>")
    return "\n".join(lines) + "\n"
