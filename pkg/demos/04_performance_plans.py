"""
From samples to performance plans
=================================

A plan is the playable artifact: per line (or line segment) a text, a
clamped rate, a signed volume, a voice slot, and whether a pause precedes
it.  Rates outside [20, 1000] fall back to 50; volumes outside [-1, 1]
fall back to 0.5; the multi-voice mode indexes voices by the truncated y
with slot 17 as the overflow.  Plans serialize to canonical JSON and to
speech markup.
"""

from pathlib import Path

from verseflow import (
    GibbsConfig,
    PlannerConfig,
    collapsed_gibbs,
    load_corpus,
    plan_lines,
    plan_rhythmic,
    render_ssml,
)

HERE = Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

corpus = load_corpus(HERE / "data" / "demo.silbe")


def show(plan, title):
    print(f"\n{title} ({len(plan.events)} events)")
    for e in plan.events:
        pause = "pause " if e.leading_pause else "      "
        print(f"  {pause}line {e.line_index}  rate {e.rate:7.2f}  "
              f"vol {e.volume:+.2f}  voice {e.voice_slot:2d}  | {e.text}")


# Single-voice: every event speaks through voice slot 7.
log = collapsed_gibbs(GibbsConfig(n=4, rho=0.99, x0=50, y0=45, z0=1, seed=7))
single = plan_lines(corpus, log, PlannerConfig(number_of_lines=4, starting_point=0),
                    "gibbs_single")
show(single, "gibbs, single voice")

# Multi-voice: the y component picks the voice slot.
multi = plan_lines(corpus, log, PlannerConfig(number_of_lines=4, starting_point=0),
                   "gibbs_multi")
show(multi, "gibbs, multi voice")

# Rhythmic: no simulation; a seeded rate in [170, 200) per line. Fast
# draws (>185) keep the line whole, slower ones split it, each later
# segment 5/4 faster and one volume bump louder.
rhythmic = plan_rhythmic(
    corpus,
    PlannerConfig(number_of_lines=6, starting_point=0, split="half", base_volume=0.4),
    seed=98,
)
show(rhythmic, "rhythmic, half splits")

plan_path = OUT / "plan.json"
plan_path.write_text(single.to_json(), encoding="utf-8")
ssml_path = OUT / "plan.ssml"
ssml_path.write_text(render_ssml(single), encoding="utf-8")
print(f"\nwrote {plan_path} and {ssml_path}")
print(f"plan id (content hash): {single.plan_id}")
