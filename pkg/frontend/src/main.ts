// Bootstrap against a running service (verseflow-serve).  The service
// origin defaults to same-origin and can be overridden with ?service=.

import { ServiceClient } from "./client.js";
import { playPlan, timerPacer, webSpeechEngine } from "./playback.js";
import { buildPanel, showTeleprompterLine } from "./panel.js";
import { PanelController } from "./state.js";
import type { ControlEvent } from "./types.js";

const params = new URLSearchParams(window.location.search);
const base = params.get("service") ?? "";
const client = new ServiceClient(base);

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");

const engine = webSpeechEngine();
const pacer = timerPacer();
const controller = new PanelController(client, {
  play: (events: ControlEvent[], pauseMs: number) =>
    playPlan(events, engine, pacer, pauseMs, {
      onText: (event) => showTeleprompterLine(root, event.text),
    }),
});

buildPanel(root, controller);
window.speechSynthesis?.getVoices(); // warm the catalog on Chromium
void controller.bind();
