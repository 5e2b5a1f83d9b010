// Speech playback: one utterance in flight, a pause before every event
// that opens a line.  The synthesis engine is injected so tests can mock
// it and environments without speech fall back to the teleprompter.

import type { ControlEvent } from "./types.js";

export interface SpeakRequest {
  text: string;
  rate: number; // engine scalar, already mapped from the plan rate
  volume: number; // magnitude in [0, 1]
  voiceIndex: number; // index into the host catalog
}

export interface SpeechEngine {
  available(): boolean;
  voiceCount(): number;
  speak(request: SpeakRequest): Promise<void>;
}

export interface Pacer {
  pause(ms: number): Promise<void>;
}

// Plan rates (about 20..1000, engine-native units) map onto the host
// scalar through a piecewise-linear curve anchored at plan rate 200 =
// host rate 1.0, so the comfortable plan band lands in the intelligible
// host range.  Monotone by construction.
const RATE_ANCHORS: [number, number][] = [
  [20, 0.1],
  [200, 1.0],
  [1000, 4.0],
];

export function hostRate(planRate: number): number {
  const first = RATE_ANCHORS[0];
  const last = RATE_ANCHORS[RATE_ANCHORS.length - 1];
  if (planRate <= first[0]) return first[1];
  if (planRate >= last[0]) return last[1];
  for (let i = 1; i < RATE_ANCHORS.length; i++) {
    const [x1, y1] = RATE_ANCHORS[i - 1];
    const [x2, y2] = RATE_ANCHORS[i];
    if (planRate <= x2) {
      return y1 + ((planRate - x1) / (x2 - x1)) * (y2 - y1);
    }
  }
  return last[1];
}

export function resolveEvent(event: ControlEvent, voiceCount: number): SpeakRequest {
  return {
    text: event.text,
    rate: hostRate(event.rate),
    volume: Math.abs(event.volume), // signed plan volume plays as magnitude
    voiceIndex: voiceCount > 0 ? event.voice_slot % voiceCount : 0,
  };
}

export interface PlayOptions {
  // Called per event when the engine is unavailable: the visual-only
  // teleprompter fallback.
  onText?: (event: ControlEvent) => void;
}

export async function playPlan(
  events: ControlEvent[],
  engine: SpeechEngine,
  pacer: Pacer,
  pauseMs: number,
  options: PlayOptions = {},
): Promise<void> {
  const spoken = engine.available();
  for (const event of events) {
    if (event.leading_pause) {
      await pacer.pause(pauseMs);
    }
    if (spoken) {
      await engine.speak(resolveEvent(event, engine.voiceCount()));
    } else {
      options.onText?.(event);
      // keep the teleprompter roughly paced: faster rate, shorter dwell
      await pacer.pause(Math.min(2000, (event.text.length * 9000) / Math.max(event.rate, 20)));
    }
  }
}

export function timerPacer(): Pacer {
  return { pause: (ms) => new Promise((resolve) => setTimeout(resolve, ms)) };
}

// Adapter over the browser's native synthesis.
export function webSpeechEngine(): SpeechEngine {
  const synth = typeof window !== "undefined" ? window.speechSynthesis : undefined;
  return {
    available: () => !!synth,
    voiceCount: () => (synth ? Math.max(synth.getVoices().length, 1) : 0),
    speak: (request) =>
      new Promise<void>((resolve) => {
        if (!synth) return resolve();
        const utterance = new SpeechSynthesisUtterance(request.text);
        const voices = synth.getVoices();
        if (voices.length > 0) utterance.voice = voices[request.voiceIndex % voices.length];
        utterance.rate = request.rate;
        utterance.volume = request.volume;
        utterance.onend = () => resolve();
        utterance.onerror = () => resolve();
        synth.speak(utterance);
      }),
  };
}
