// Wire shapes, exactly as the plan service serializes them.

export interface SessionParams {
  mode: string;
  lines: number;
  start: number;
  rho: number;
  x: number;
  y: number;
  z: number;
  seed: number;
  sigma: number;
  rho_l: number;
  beta: number;
  dt: number;
  split: string;
}

export interface SessionState {
  id: string;
  mode: string;
  armed: boolean;
  params: SessionParams;
  plan_id: string | null;
  plan_version: number;
}

export interface ControlEvent {
  line_index: number;
  text: string;
  rate: number;
  volume: number;
  voice_slot: number;
  leading_pause: boolean;
}

export interface PlanDocument {
  mode: string;
  seed: number;
  config: { planner: { pause_ms: number } & Record<string, unknown> } & Record<string, unknown>;
  events: ControlEvent[];
  samples: number[][];
}

export type StreamMessage =
  | { type: "header"; mode: string; seed: number; plan_id: string; config: PlanDocument["config"] }
  | { type: "event"; event: ControlEvent }
  | { type: "end"; plan_id: string };
