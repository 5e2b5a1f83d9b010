// Panel state and the slider model.  Slider bounds repeat the service's
// validation so bad values are flagged inline before a patch is even
// attempted; whatever the service echoes back is the single source of
// truth for what the panel displays.

import { ServiceClient, ServiceError } from "./client.js";
import type { ControlEvent, SessionParams, SessionState, StreamMessage } from "./types.js";

export const MODES = ["gibbs_single", "gibbs_multi", "lorenz", "rhythmic"] as const;
export const SPLITS = ["half", "quarter", "third"] as const;

export interface SliderSpec {
  key: keyof SessionParams;
  label: string;
  min: number;
  max: number;
  step: number;
}

// The same ranges the service validates (lines capped at 10, rho >= 0, dt > 0).
export const SLIDERS: SliderSpec[] = [
  { key: "lines", label: "number of lines", min: 1, max: 10, step: 1 },
  { key: "start", label: "starting line", min: 0, max: 200, step: 1 },
  { key: "rho", label: "correlation rho", min: 0, max: 0.999, step: 0.001 },
  { key: "x", label: "initial x (rate)", min: -1000, max: 1000, step: 1 },
  { key: "y", label: "initial y (voice)", min: -48, max: 48, step: 1 },
  { key: "z", label: "initial z (volume)", min: -1, max: 1, step: 0.05 },
  { key: "seed", label: "seed", min: 0, max: 9999, step: 1 },
  { key: "sigma", label: "lorenz sigma", min: 0, max: 20, step: 0.1 },
  { key: "rho_l", label: "lorenz rho", min: 0, max: 50, step: 0.1 },
  { key: "beta", label: "lorenz beta", min: 0, max: 10, step: 0.01 },
  { key: "dt", label: "lorenz dt", min: 0.001, max: 0.1, step: 0.001 },
];

export function validateParam(key: string, value: unknown): string | null {
  if (key === "mode") {
    return MODES.includes(value as (typeof MODES)[number]) ? null : "unknown mode";
  }
  if (key === "split") {
    return SPLITS.includes(value as (typeof SPLITS)[number]) ? null : "unknown split";
  }
  if (typeof value !== "number" || !Number.isFinite(value)) return "must be a finite number";
  switch (key) {
    case "lines":
      return Number.isInteger(value) && value >= 1 && value <= 10
        ? null
        : "must be an integer in [1, 10]";
    case "start":
      return Number.isInteger(value) && value >= 0 ? null : "must be an integer >= 0";
    case "seed":
      return Number.isInteger(value) && value >= 0 ? null : "must be an integer >= 0";
    case "rho":
      return value + value ** 3 >= 0 ? null : "rho + rho^3 must be >= 0";
    case "dt":
      return value > 0 ? null : "must be > 0";
    default:
      return null;
  }
}

export type PlaybackState = "idle" | "playing" | "paused";

export interface PanelState {
  connected: boolean;
  session: SessionState | null;
  playback: PlaybackState;
  banner: string | null;
  fieldErrors: Record<string, string>;
  samples: number[][];
}

export interface PlaybackSink {
  // Receives the ordered events of a freshly generated plan plus the
  // pause length to honor before leading_pause events.
  play(events: ControlEvent[], pauseMs: number): Promise<void>;
}

type Listener = (state: PanelState) => void;

export class PanelController {
  private client: ServiceClient;
  private sink: PlaybackSink | null;
  private listeners: Listener[] = [];

  state: PanelState = {
    connected: false,
    session: null,
    playback: "idle",
    banner: null,
    fieldErrors: {},
    samples: [],
  };

  constructor(client: ServiceClient, sink: PlaybackSink | null = null) {
    this.client = client;
    this.sink = sink;
  }

  onChange(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  private setState(patch: Partial<PanelState>): void {
    this.state = { ...this.state, ...patch };
    this.emit();
  }

  // Create the session; on failure the panel stays disabled with a banner.
  async bind(overrides: Record<string, unknown> = {}): Promise<void> {
    try {
      const session = await this.client.createSession(overrides);
      this.setState({ connected: true, session, banner: null });
    } catch (error) {
      this.setState({
        connected: false,
        session: null,
        banner: `service unreachable: ${(error as Error).message}`,
      });
    }
  }

  // One slider moved.  Validate locally, patch, mirror the echoed session;
  // an arming transition starts streaming and playback.
  async onSliderChange(key: string, value: unknown): Promise<void> {
    if (!this.state.connected || !this.state.session) return;
    const problem = validateParam(key, value);
    if (problem) {
      this.setState({ fieldErrors: { ...this.state.fieldErrors, [key]: problem } });
      return;
    }
    const wasArmed = this.state.session.armed;
    let session: SessionState;
    try {
      session = await this.client.patchParams(this.state.session.id, { [key]: value });
    } catch (error) {
      if (error instanceof ServiceError && error.field) {
        this.setState({ fieldErrors: { ...this.state.fieldErrors, [error.field]: error.message } });
      } else {
        this.setState({ banner: (error as Error).message });
      }
      return;
    }
    const fieldErrors = { ...this.state.fieldErrors };
    delete fieldErrors[key];
    this.setState({ session, fieldErrors });
    if (!wasArmed && session.armed) {
      await this.followPlan(session);
    }
  }

  async regenerate(): Promise<void> {
    if (!this.state.session) return;
    try {
      await this.client.generate(this.state.session.id);
      const session = await this.client.getSession(this.state.session.id);
      this.setState({ session });
      await this.followPlan(session);
    } catch (error) {
      this.setState({ banner: (error as Error).message });
    }
  }

  // Pull the plan's samples for the charts, then replay the stream into
  // the playback sink.
  private async followPlan(session: SessionState): Promise<void> {
    if (session.plan_id) {
      try {
        const plan = await this.client.getPlan(session.plan_id);
        this.setState({ samples: plan.samples });
      } catch {
        this.setState({ samples: [] });
      }
    }
    if (!this.sink) return;
    const events: ControlEvent[] = [];
    let pauseMs = 300;
    await this.client.stream(session.id, (message: StreamMessage) => {
      if (message.type === "header") {
        const planner = message.config.planner as { pause_ms?: number } | undefined;
        pauseMs = planner?.pause_ms ?? 300;
      } else if (message.type === "event") {
        events.push(message.event);
      }
    });
    this.setState({ playback: "playing" });
    try {
      await this.sink.play(events, pauseMs);
    } finally {
      this.setState({ playback: "idle" });
    }
  }
}
