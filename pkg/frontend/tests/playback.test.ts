import { describe, expect, it } from "vitest";

import { hostRate, playPlan, resolveEvent, type Pacer, type SpeechEngine } from "../src/playback";
import type { ControlEvent } from "../src/types";

function event(overrides: Partial<ControlEvent> = {}): ControlEvent {
  return {
    line_index: 0,
    text: "one two three",
    rate: 200,
    volume: 0.5,
    voice_slot: 7,
    leading_pause: true,
    ...overrides,
  };
}

function recordingEngine(calls: string[], voices = 4): SpeechEngine {
  return {
    available: () => true,
    voiceCount: () => voices,
    speak: async (request) => {
      calls.push(`speak:${request.text}`);
    },
  };
}

function recordingPacer(calls: string[]): Pacer {
  return {
    pause: async (ms) => {
      calls.push(`pause:${ms}`);
    },
  };
}

describe("playback ordering", () => {
  it("speaks a 3-event plan in order with a pause before each pausing event", async () => {
    const calls: string[] = [];
    const events = [
      event({ text: "alpha", leading_pause: true }),
      event({ text: "beta", leading_pause: true }),
      event({ text: "gamma", leading_pause: true }),
    ];
    await playPlan(events, recordingEngine(calls), recordingPacer(calls), 300);
    expect(calls).toEqual([
      "pause:300",
      "speak:alpha",
      "pause:300",
      "speak:beta",
      "pause:300",
      "speak:gamma",
    ]);
  });

  it("skips the pause on within-line segments", async () => {
    const calls: string[] = [];
    const events = [
      event({ text: "first half", leading_pause: true }),
      event({ text: "second half", leading_pause: false }),
      event({ text: "next line", leading_pause: true }),
    ];
    await playPlan(events, recordingEngine(calls), recordingPacer(calls), 250);
    expect(calls).toEqual([
      "pause:250",
      "speak:first half",
      "speak:second half",
      "pause:250",
      "speak:next line",
    ]);
  });

  it("completes immediately on an empty plan", async () => {
    const calls: string[] = [];
    await playPlan([], recordingEngine(calls), recordingPacer(calls), 300);
    expect(calls).toEqual([]);
  });

  it("falls back to the teleprompter when synthesis is unavailable", async () => {
    const calls: string[] = [];
    const engine: SpeechEngine = {
      available: () => false,
      voiceCount: () => 0,
      speak: async () => {
        calls.push("speak");
      },
    };
    const shown: string[] = [];
    await playPlan([event({ text: "visual only" })], engine, recordingPacer(calls), 300, {
      onText: (e) => shown.push(e.text),
    });
    expect(shown).toEqual(["visual only"]);
    expect(calls.filter((c) => c === "speak")).toHaveLength(0);
  });
});

describe("event resolution", () => {
  it("plays negative volume at its magnitude", () => {
    expect(resolveEvent(event({ volume: -0.4 }), 4).volume).toBeCloseTo(0.4);
  });

  it("resolves voice slots modulo the host catalog", () => {
    expect(resolveEvent(event({ voice_slot: 7 }), 5).voiceIndex).toBe(2);
    expect(resolveEvent(event({ voice_slot: 3 }), 5).voiceIndex).toBe(3);
    expect(resolveEvent(event({ voice_slot: 17 }), 1).voiceIndex).toBe(0);
  });

  it("maps the anchor rate 200 to host rate 1.0", () => {
    expect(hostRate(200)).toBeCloseTo(1.0);
  });

  it("is monotone across the plan-rate range", () => {
    let previous = -Infinity;
    for (let rate = 20; rate <= 1000; rate += 5) {
      const mapped = hostRate(rate);
      expect(mapped).toBeGreaterThanOrEqual(previous);
      previous = mapped;
    }
  });

  it("clamps outside the anchored range", () => {
    expect(hostRate(5)).toBeCloseTo(0.1);
    expect(hostRate(5000)).toBeCloseTo(4.0);
  });
});
