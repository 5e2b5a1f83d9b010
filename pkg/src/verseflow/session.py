"""Session state, the volume-arming trigger, plan generation and persistence.

A session owns one flat parameter set mirroring the control panel sliders:
``mode, lines, start, rho, x, y, z, seed, sigma, rho_l, beta, dt, split``.
The x/y/z initial values feed whichever sequencer the mode selects, so the
session has a single z parameter; the session is *armed* exactly while
z != 0, and the false-to-true arming transition is the only thing that
triggers generation implicitly.  Everything else goes through the explicit
generate call.

Plans persist as content-addressed JSON files; identical plans share an id
and the stored file is never rewritten.
"""

from __future__ import annotations

import json
import math
import os
import threading
import uuid
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .corpus import Corpus
from .errors import (
    InvalidConfigError,
    NoPlanError,
    NotArmedError,
    PlanRangeError,
    UnknownPlanError,
    UnknownSessionError,
)
from .planner import (
    MODE_GIBBS_MULTI,
    MODE_GIBBS_SINGLE,
    MODE_LORENZ,
    MODES,
    SPLIT_SEGMENTS,
    PerformancePlan,
    PlannerConfig,
    plan_lines,
    plan_rhythmic,
)
from .sequencers import GibbsConfig, LorenzConfig, collapsed_gibbs, lorenz_sequence

DATA_DIR_ENV = "MCMCHAOS_DATA_DIR"
DEFAULT_DATA_DIR = "plans"

DEFAULT_PARAMS = {
    "mode": MODE_GIBBS_SINGLE,
    "lines": 1,
    "start": 1,
    "rho": 0.99,
    "x": 50.0,
    "y": 45.0,
    "z": 0.0,
    "seed": 0,
    "sigma": 10.0,
    "rho_l": 28.0,
    "beta": 8.0 / 3.0,
    "dt": 0.01,
    "split": "half",
}

# Patch key -> the config field named in InvalidConfig errors.
_FIELD_NAMES = {
    "lines": "number_of_lines",
    "start": "starting_point",
}


@dataclass
class Session:
    """Mutable per-client state: slider values, configs, and the last plan."""

    id: str
    params: dict
    gibbs: GibbsConfig
    lorenz: LorenzConfig
    planner: PlannerConfig
    armed: bool
    latest_plan: Optional[PerformancePlan] = None
    plan_version: int = 0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "mode": self.params["mode"],
            "armed": self.armed,
            "params": dict(self.params),
            "plan_id": self.latest_plan.plan_id if self.latest_plan else None,
            "plan_version": self.plan_version,
        }


def _coerce_int(key: str, value, minimum: int | None = None,
                maximum: int | None = None) -> int:
    field_name = _FIELD_NAMES.get(key, key)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidConfigError(field_name, "must be an integer")
    if isinstance(value, float):
        if not value.is_integer():
            raise InvalidConfigError(field_name, "must be an integer")
        value = int(value)
    if minimum is not None and value < minimum:
        raise InvalidConfigError(field_name, f"must be >= {minimum}")
    if maximum is not None and value > maximum:
        raise InvalidConfigError(field_name, f"must be <= {maximum}")
    return value


def _coerce_float(key: str, value) -> float:
    field_name = _FIELD_NAMES.get(key, key)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidConfigError(field_name, "must be a number")
    value = float(value)
    if not math.isfinite(value):
        raise InvalidConfigError(field_name, "must be finite")
    return value


def validate_params(params: dict) -> dict:
    """Validate and normalize a full flat parameter set.

    Raises InvalidConfig with the offending config field's name.
    """
    out = dict(params)
    if out["mode"] not in MODES:
        raise InvalidConfigError("mode", f"must be one of {MODES}")
    out["lines"] = _coerce_int("lines", out["lines"], 1, 10)
    out["start"] = _coerce_int("start", out["start"], 0)
    out["seed"] = _coerce_int("seed", out["seed"], 0)
    out["rho"] = _coerce_float("rho", out["rho"])
    if out["rho"] + out["rho"] ** 3 < 0:
        raise InvalidConfigError("rho", "rho + rho^3 must be >= 0")
    for key in ("x", "y", "z", "sigma", "rho_l", "beta"):
        out[key] = _coerce_float(key, out[key])
    out["dt"] = _coerce_float("dt", out["dt"])
    if out["dt"] <= 0:
        raise InvalidConfigError("dt", "must be > 0")
    if out["split"] not in SPLIT_SEGMENTS:
        raise InvalidConfigError("split", f"must be one of {sorted(SPLIT_SEGMENTS)}")
    return out


def _build_session(sid: str, params: dict) -> Session:
    p = validate_params(params)
    gibbs = GibbsConfig(n=p["lines"], rho=p["rho"], x0=p["x"], y0=p["y"],
                        z0=p["z"], seed=p["seed"])
    lorenz = LorenzConfig(n=p["lines"], dt=p["dt"], sigma=p["sigma"],
                          rho_l=p["rho_l"], beta=p["beta"], x0=p["x"],
                          y0=p["y"], z0=p["z"], seed=p["seed"])
    planner = PlannerConfig(number_of_lines=p["lines"], starting_point=p["start"],
                            split=p["split"], base_volume=p["z"])
    return Session(id=sid, params=p, gibbs=gibbs, lorenz=lorenz,
                   planner=planner, armed=p["z"] != 0)


def apply_params(session: Session, patch: dict) -> tuple[Session, bool]:
    """Apply a partial parameter patch; returns (session, armed_now).

    ``armed_now`` is True only for a false-to-true arming transition.
    Unknown keys raise InvalidConfig.
    """
    unknown = set(patch) - set(DEFAULT_PARAMS)
    if unknown:
        raise InvalidConfigError(sorted(unknown)[0], "unknown parameter")
    was_armed = session.armed
    merged = dict(session.params)
    merged.update(patch)
    rebuilt = _build_session(session.id, merged)
    session.params = rebuilt.params
    session.gibbs = rebuilt.gibbs
    session.lorenz = rebuilt.lorenz
    session.planner = rebuilt.planner
    session.armed = rebuilt.armed
    return session, session.armed and not was_armed


class PlanStore:
    """Content-addressed JSON plan files under one directory.

    The directory comes from the explicit argument, the MCMCHAOS_DATA_DIR
    environment variable, or ./plans, in that order.  Stored plans are
    immutable: storing an identical plan is a no-op returning the same id.
    """

    def __init__(self, root: str | Path | None = None):
        self.root = Path(root or os.environ.get(DATA_DIR_ENV) or DEFAULT_DATA_DIR)

    def _path(self, plan_id: str) -> Path:
        return self.root / f"{plan_id}.json"

    def store(self, plan: PerformancePlan) -> str:
        plan_id = plan.plan_id
        path = self._path(plan_id)
        if not path.exists():
            self.root.mkdir(parents=True, exist_ok=True)
            record = {"id": plan_id, "created_at": plan.created_at,
                      "plan": plan.to_dict()}
            path.write_text(json.dumps(record, indent=2, sort_keys=True) + "\n",
                            encoding="utf-8")
        return plan_id

    def load(self, plan_id: str) -> PerformancePlan:
        path = self._path(plan_id)
        if not path.exists():
            raise UnknownPlanError(plan_id)
        record = json.loads(path.read_text(encoding="utf-8"))
        return PerformancePlan.from_dict(record["plan"],
                                         created_at=record["created_at"])

    def ids(self) -> list[str]:
        if not self.root.exists():
            return []
        return sorted(p.stem for p in self.root.glob("*.json"))


class PlanService:
    """Owns the corpus, the sessions, and the plan store.

    Requests to one session are serialized by a per-session lock; distinct
    sessions never interact.
    """

    def __init__(self, corpus: Corpus, store: PlanStore | None = None):
        self.corpus = corpus
        self.store = store if store is not None else PlanStore()
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.RLock] = {}
        self._registry_lock = threading.Lock()

    def create_session(self, overrides: dict | None = None) -> Session:
        params = dict(DEFAULT_PARAMS)
        if overrides:
            unknown = set(overrides) - set(DEFAULT_PARAMS)
            if unknown:
                raise InvalidConfigError(sorted(unknown)[0], "unknown parameter")
            params.update(overrides)
        session = _build_session(uuid.uuid4().hex, params)
        with self._registry_lock:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.RLock()
        return session

    def _lock(self, session_id: str) -> threading.RLock:
        try:
            return self._locks[session_id]
        except KeyError:
            raise UnknownSessionError(session_id) from None

    def get_session(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSessionError(session_id) from None

    def update_params(self, session_id: str, patch: dict) -> Session:
        """Apply a patch; a false-to-true arming transition generates a plan."""
        with self._lock(session_id):
            session = self.get_session(session_id)
            session, armed_now = apply_params(session, patch)
            if armed_now:
                self._generate_locked(session)
            return session

    def generate(self, session_id: str) -> PerformancePlan:
        with self._lock(session_id):
            session = self.get_session(session_id)
            return self._generate_locked(session)

    def _generate_locked(self, session: Session) -> PerformancePlan:
        if not session.armed:
            raise NotArmedError("volume trigger z is 0; no plan is generated")
        mode = session.params["mode"]
        try:
            if mode in (MODE_GIBBS_SINGLE, MODE_GIBBS_MULTI):
                log = collapsed_gibbs(session.gibbs)
                plan = plan_lines(self.corpus, log, session.planner, mode)
            elif mode == MODE_LORENZ:
                log = lorenz_sequence(session.lorenz)
                plan = plan_lines(self.corpus, log, session.planner, mode)
            else:
                plan = plan_rhythmic(self.corpus, session.planner,
                                     seed=session.params["seed"])
        except PlanRangeError as exc:
            raise PlanRangeError(f"session {session.id}: {exc}") from exc
        session.latest_plan = plan
        session.plan_version += 1
        self.store.store(plan)
        return plan

    def get_plan(self, plan_id: str) -> PerformancePlan:
        return self.store.load(plan_id)

    def corpus_lines(self, start: int = 0, count: int | None = None) -> dict:
        if start < 0:
            raise InvalidConfigError("start", "must be >= 0")
        if count is not None and count < 0:
            raise InvalidConfigError("count", "must be >= 0")
        stop = len(self.corpus.lines) if count is None else start + count
        window = self.corpus.lines[start:stop]
        return {
            "source_id": self.corpus.source_id,
            "total": len(self.corpus.lines),
            "lines": [{"index": ln.index, "words": list(ln.words)} for ln in window],
        }

    def stream(self, session_id: str) -> Iterator[dict]:
        return stream_events(self.get_session(session_id))


def stream_events(session: Session) -> Iterator[dict]:
    """Yield the session's plan as an ordered message stream.

    Messages: a header carrying mode/seed/config, one message per event,
    and an end-of-plan marker.  If the session regenerates mid-stream, the
    old plan is closed with its end marker and the new plan's header
    follows on the same stream.  Raises NoPlan eagerly, before the first
    message, when nothing has been generated yet.
    """
    if session.latest_plan is None:
        raise NoPlanError("no plan generated for this session yet")
    return _stream_messages(session)


def _stream_messages(session: Session) -> Iterator[dict]:
    while True:
        version = session.plan_version
        plan = session.latest_plan
        yield {"type": "header", "mode": plan.mode, "seed": plan.seed,
               "plan_id": plan.plan_id, "config": plan.config}
        interrupted = False
        for event in plan.events:
            if session.plan_version != version:
                interrupted = True
                break
            yield {"type": "event", "event": event.to_dict()}
        yield {"type": "end", "plan_id": plan.plan_id}
        if not interrupted and session.plan_version == version:
            return
