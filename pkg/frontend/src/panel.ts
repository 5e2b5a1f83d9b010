// DOM wiring: sliders for every parameter, mode/split selectors, an
// error banner, a teleprompter line, and the diagnostics charts.  All
// displayed numbers come from the controller's mirrored session state.

import { component, renderHistogram, renderTrace } from "./charts.js";
import { MODES, PanelController, SLIDERS, SPLITS } from "./state.js";
import type { SessionParams } from "./types.js";

export function buildPanel(root: HTMLElement, controller: PanelController): void {
  root.innerHTML = "";

  const banner = el("div", "banner");
  root.appendChild(banner);

  const controls = el("div", "controls");
  root.appendChild(controls);

  const modeSelect = selector("mode", [...MODES], (value) =>
    controller.onSliderChange("mode", value),
  );
  controls.appendChild(modeSelect.wrap);
  const splitSelect = selector("split", [...SPLITS], (value) =>
    controller.onSliderChange("split", value),
  );
  controls.appendChild(splitSelect.wrap);

  const sliders = new Map<string, { input: HTMLInputElement; value: HTMLElement; error: HTMLElement }>();
  for (const spec of SLIDERS) {
    const wrap = el("label", "slider");
    wrap.append(`${spec.label} `);
    const input = document.createElement("input");
    input.type = "range";
    input.min = String(spec.min);
    input.max = String(spec.max);
    input.step = String(spec.step);
    const value = el("span", "value");
    const error = el("span", "error");
    input.addEventListener("change", () => {
      void controller.onSliderChange(spec.key, Number(input.value));
    });
    wrap.append(input, value, error);
    controls.appendChild(wrap);
    sliders.set(spec.key, { input, value, error });
  }

  const regen = document.createElement("button");
  regen.textContent = "generate again";
  regen.addEventListener("click", () => void controller.regenerate());
  controls.appendChild(regen);

  const teleprompter = el("div", "teleprompter");
  root.appendChild(teleprompter);

  const charts = el("div", "charts");
  const histCanvas = canvas(260, 120);
  const traceCanvas = canvas(260, 120);
  charts.append(histCanvas, traceCanvas);
  root.appendChild(charts);

  controller.onChange((state) => {
    banner.textContent = state.banner ?? "";
    banner.style.display = state.banner ? "block" : "none";
    const disabled = !state.connected;
    modeSelect.select.disabled = disabled;
    splitSelect.select.disabled = disabled;
    regen.disabled = disabled || !state.session?.armed;
    if (state.session) {
      modeSelect.select.value = state.session.params.mode;
      splitSelect.select.value = state.session.params.split;
      for (const spec of SLIDERS) {
        const widgets = sliders.get(spec.key);
        if (!widgets) continue;
        widgets.input.disabled = disabled;
        const current = state.session.params[spec.key as keyof SessionParams];
        widgets.input.value = String(current);
        widgets.value.textContent = ` ${current}`;
        widgets.error.textContent = state.fieldErrors[spec.key] ?? "";
      }
    }
    if (state.samples.length > 0) {
      renderHistogram(histCanvas, component(state.samples, 0));
      renderTrace(traceCanvas, [
        component(state.samples, 0),
        component(state.samples, 1),
        component(state.samples, 2),
      ]);
    }
  });
}

export function showTeleprompterLine(root: HTMLElement, text: string): void {
  const line = root.querySelector(".teleprompter");
  if (line) line.textContent = text;
}

function el(tag: string, className: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  return node;
}

function canvas(width: number, height: number): HTMLCanvasElement {
  const node = document.createElement("canvas");
  node.width = width;
  node.height = height;
  return node;
}

function selector(
  label: string,
  options: string[],
  onPick: (value: string) => Promise<void>,
): { wrap: HTMLElement; select: HTMLSelectElement } {
  const wrap = el("label", "selector");
  wrap.append(`${label} `);
  const select = document.createElement("select");
  for (const option of options) {
    const node = document.createElement("option");
    node.value = option;
    node.textContent = option;
    select.appendChild(node);
  }
  select.addEventListener("change", () => void onPick(select.value));
  wrap.appendChild(select);
  return { wrap, select };
}
