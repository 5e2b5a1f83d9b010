// Diagnostic charts over the plan's raw samples: per-component histogram
// and step-indexed trace.  The binning and scaling are pure functions so
// they can be tested without a canvas; rendering is plain 2D canvas.

export interface Histogram {
  edges: number[]; // binCount + 1 edges
  counts: number[];
}

export function histogram(values: number[], binCount: number): Histogram {
  if (binCount < 1) throw new Error("binCount must be >= 1");
  if (values.length === 0) {
    return { edges: [0, 1], counts: [] };
  }
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const width = (hi - lo) / binCount;
  const counts = new Array<number>(binCount).fill(0);
  for (const v of values) {
    const bin = Math.min(Math.floor((v - lo) / width), binCount - 1);
    counts[bin] += 1;
  }
  const edges = Array.from({ length: binCount + 1 }, (_, i) => lo + i * width);
  return { edges, counts };
}

export interface Point {
  x: number;
  y: number;
}

// Scale a value series onto a width x height box, step index along x.
export function tracePoints(values: number[], width: number, height: number): Point[] {
  if (values.length === 0) return [];
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const dx = values.length > 1 ? width / (values.length - 1) : 0;
  return values.map((v, i) => ({
    x: i * dx,
    y: height - ((v - lo) / (hi - lo)) * height,
  }));
}

export function component(samples: number[][], index: 0 | 1 | 2): number[] {
  return samples.map((row) => row[index]);
}

const COMPONENT_COLORS = ["#d45500", "#2266aa", "#338844"];

export function renderHistogram(canvas: HTMLCanvasElement, values: number[], color = COMPONENT_COLORS[0]): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const { counts } = histogram(values, 24);
  if (counts.length === 0) return; // empty log: empty axes
  const peak = Math.max(...counts, 1);
  const barWidth = canvas.width / counts.length;
  ctx.fillStyle = color;
  counts.forEach((count, i) => {
    const barHeight = (count / peak) * (canvas.height - 2);
    ctx.fillRect(i * barWidth, canvas.height - barHeight, barWidth - 1, barHeight);
  });
}

export function renderTrace(canvas: HTMLCanvasElement, series: number[][], colors = COMPONENT_COLORS): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  series.forEach((values, component_) => {
    const points = tracePoints(values, canvas.width, canvas.height - 2);
    if (points.length === 0) return;
    ctx.strokeStyle = colors[component_ % colors.length];
    ctx.beginPath();
    points.forEach((p, i) => (i === 0 ? ctx.moveTo(p.x, p.y + 1) : ctx.lineTo(p.x, p.y + 1)));
    ctx.stroke();
  });
}
