from __future__ import annotations

import pytest

from verseflow.errors import (
    InvalidConfigError,
    NoPlanError,
    NotArmedError,
    PlanRangeError,
    UnknownPlanError,
    UnknownSessionError,
)
from verseflow.session import (
    DEFAULT_PARAMS,
    PlanService,
    PlanStore,
    stream_events,
)

from .conftest import make_corpus


@pytest.fixture
def service(tmp_path):
    return PlanService(make_corpus(16, words_per_line=8),
                       PlanStore(tmp_path / "plans"))


class TestCreateSession:
    def test_defaults(self, service):
        session = service.create_session()
        p = session.params
        assert p["mode"] == "gibbs_single"
        assert p["lines"] == 1 and p["start"] == 1
        assert p["rho"] == 0.99 and p["x"] == 50.0 and p["y"] == 45.0 and p["z"] == 0.0
        assert p["sigma"] == 10.0 and p["rho_l"] == 28.0 and p["dt"] == 0.01
        assert p["beta"] == pytest.approx(8.0 / 3.0)
        assert session.armed is False
        assert session.latest_plan is None

    def test_line_cap_override(self, service):
        with pytest.raises(InvalidConfigError) as err:
            service.create_session({"lines": 11})
        assert err.value.field == "number_of_lines"

    def test_nonzero_z_override_arms(self, service):
        session = service.create_session({"z": 0.5})
        assert session.armed is True
        # creation is not an arming transition; nothing generated yet
        assert session.latest_plan is None

    def test_unknown_override_rejected(self, service):
        with pytest.raises(InvalidConfigError):
            service.create_session({"volume": 1})

    def test_configs_share_xyz(self, service):
        session = service.create_session({"x": 3.0, "y": 4.0, "z": 0.25})
        assert (session.gibbs.x0, session.gibbs.y0, session.gibbs.z0) == (3.0, 4.0, 0.25)
        assert (session.lorenz.x0, session.lorenz.y0, session.lorenz.z0) == (3.0, 4.0, 0.25)


class TestUpdateParams:
    def test_arming_transition_generates(self, service):
        session = service.create_session({"start": 0, "lines": 3})
        assert session.latest_plan is None
        session = service.update_params(session.id, {"z": 0.8})
        assert session.armed is True
        assert session.latest_plan is not None
        assert len(session.latest_plan.events) == 3

    def test_zero_patch_does_not_generate(self, service):
        session = service.create_session({"start": 0})
        session = service.update_params(session.id, {"z": 0.0})
        assert session.armed is False
        assert session.latest_plan is None

    def test_nonzero_to_nonzero_does_not_regenerate(self, service):
        session = service.create_session({"start": 0})
        service.update_params(session.id, {"z": 0.8})
        version = session.plan_version
        service.update_params(session.id, {"z": 0.3})
        assert session.plan_version == version

    def test_invalid_rho_names_field(self, service):
        session = service.create_session()
        with pytest.raises(InvalidConfigError) as err:
            service.update_params(session.id, {"rho": -0.5})
        assert err.value.field == "rho"

    def test_unknown_key_rejected(self, service):
        session = service.create_session()
        with pytest.raises(InvalidConfigError):
            service.update_params(session.id, {"bogus": 1})

    def test_scripted_trigger_sequence_counts_one_plan(self, service):
        session = service.create_session({"start": 0})
        versions = []
        for z in (0.0, 0.0, 0.8, 0.3, 0.0):
            service.update_params(session.id, {"z": z})
            versions.append(session.plan_version)
        assert versions == [0, 0, 1, 1, 1]

    def test_disarm_keeps_last_plan(self, service):
        session = service.create_session({"start": 0})
        service.update_params(session.id, {"z": 0.8})
        plan = session.latest_plan
        service.update_params(session.id, {"z": 0.0})
        assert session.armed is False
        assert session.latest_plan is plan

    def test_rearming_generates_again(self, service):
        session = service.create_session({"start": 0})
        service.update_params(session.id, {"z": 0.8})
        service.update_params(session.id, {"z": 0.0})
        service.update_params(session.id, {"z": 0.4})
        assert session.plan_version == 2


class TestGenerate:
    def test_unarmed_rejected(self, service):
        session = service.create_session({"start": 0})
        with pytest.raises(NotArmedError):
            service.generate(session.id)

    def test_gibbs_plan_counts(self, service):
        session = service.create_session({"start": 0, "lines": 3, "z": 1.0})
        plan = service.generate(session.id)
        assert len(plan.events) == 3
        assert len(plan.sample_log) == 3

    def test_lorenz_known_first_event(self, service):
        session = service.create_session({
            "mode": "lorenz", "start": 0, "lines": 2,
            "x": 1.0, "y": 1.0, "z": 1.0,
        })
        plan = service.generate(session.id)
        assert plan.events[0].rate == 100.0
        assert plan.events[0].volume == 0.0

    def test_rhythmic_mode_uses_session_volume(self, service):
        session = service.create_session({
            "mode": "rhythmic", "start": 0, "lines": 2, "z": 0.3, "seed": 98,
        })
        plan = service.generate(session.id)
        assert plan.mode == "rhythmic"
        assert plan.sample_log is None
        assert plan.events[0].volume == pytest.approx(0.3)

    def test_range_error_carries_session_context(self, service):
        session = service.create_session({"start": 14, "lines": 5, "z": 1.0})
        with pytest.raises(PlanRangeError) as err:
            service.generate(session.id)
        assert session.id in str(err.value)

    def test_plan_persisted_on_generate(self, service):
        session = service.create_session({"start": 0, "z": 1.0})
        plan = service.generate(session.id)
        assert service.get_plan(plan.plan_id).to_json() == plan.to_json()

    def test_unknown_session(self, service):
        with pytest.raises(UnknownSessionError):
            service.generate("nope")


class TestStreamEvents:
    def test_header_events_end(self, service):
        session = service.create_session({"start": 0, "lines": 3, "z": 1.0})
        service.generate(session.id)
        messages = list(service.stream(session.id))
        assert [m["type"] for m in messages] == ["header", "event", "event", "event", "end"]
        header = messages[0]
        assert header["mode"] == "gibbs_single"
        assert header["seed"] == 0
        assert header["config"] == session.latest_plan.config

    def test_no_plan_raises_eagerly(self, service):
        session = service.create_session()
        with pytest.raises(NoPlanError):
            service.stream(session.id)

    def test_regenerate_mid_stream_closes_before_new_header(self, service):
        session = service.create_session({"start": 0, "lines": 3, "z": 1.0})
        service.generate(session.id)
        stream = stream_events(session)
        seen = [next(stream), next(stream)]  # header + first event
        service.update_params(session.id, {"seed": 1})
        service.generate(session.id)
        rest = list(stream)
        types = [m["type"] for m in seen + rest]
        # old stream ends, then the new plan replays in full
        assert types == ["header", "event", "end",
                         "header", "event", "event", "event", "end"]
        assert rest[0]["plan_id"] == seen[0]["plan_id"]
        assert rest[1]["plan_id"] != seen[0]["plan_id"]

    def test_event_order_matches_plan(self, service):
        session = service.create_session({"start": 0, "lines": 4, "z": 1.0})
        plan = service.generate(session.id)
        events = [m["event"] for m in service.stream(session.id) if m["type"] == "event"]
        assert events == [e.to_dict() for e in plan.events]


class TestPlanStore:
    def test_round_trip_field_identical(self, service, tmp_path):
        session = service.create_session({"start": 0, "lines": 2, "z": 0.7, "seed": 5})
        plan = service.generate(session.id)
        loaded = service.store.load(plan.plan_id)
        assert loaded == plan  # includes created_at, via stored metadata

    def test_store_is_idempotent(self, tmp_path, service):
        session = service.create_session({"start": 0, "z": 1.0})
        plan = service.generate(session.id)
        first = service.store.store(plan)
        second = service.store.store(plan)
        assert first == second
        assert service.store.ids() == [first]

    def test_unknown_plan(self, service):
        with pytest.raises(UnknownPlanError):
            service.get_plan("ffffffffffffffff")

    def test_env_var_controls_default_root(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MCMCHAOS_DATA_DIR", str(tmp_path / "env-plans"))
        store = PlanStore()
        assert store.root == tmp_path / "env-plans"

    def test_explicit_root_wins_over_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MCMCHAOS_DATA_DIR", str(tmp_path / "env-plans"))
        store = PlanStore(tmp_path / "explicit")
        assert store.root == tmp_path / "explicit"


class TestCorpusLines:
    def test_window(self, service):
        doc = service.corpus_lines(start=2, count=2)
        assert doc["total"] == 16
        assert [ln["index"] for ln in doc["lines"]] == [2, 3]

    def test_defaults_to_everything(self, service):
        assert len(service.corpus_lines()["lines"]) == 16

    def test_overrun_returns_partial(self, service):
        assert [ln["index"] for ln in service.corpus_lines(15, 10)["lines"]] == [15]


class TestDefaultsTable:
    def test_default_params_complete(self):
        assert set(DEFAULT_PARAMS) == {
            "mode", "lines", "start", "rho", "x", "y", "z", "seed",
            "sigma", "rho_l", "beta", "dt", "split",
        }
