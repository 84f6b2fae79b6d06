/** SVG renderers for every panel: hand-rolled, no chart library.
 *
 * Color encoding is fixed throughout: negative class black, positive
 * class orange, decision threshold green.
 */

import type {
  ConfusionCounts,
  Curve,
  EvaluateResponse,
  MetricSuite,
  MetricValue,
} from "./types.js";

export const COLORS = {
  negative: "#111111",
  positive: "#e8871a",
  threshold: "#2e9e44",
  baseline: "#888888",
};

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 380;
const HEIGHT = 250;
const MARGIN = { left: 44, right: 12, top: 12, bottom: 32 };

export interface Pt {
  x: number;
  y: number;
}

type Scale = (value: number) => number;

function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function baseSvg(): { svg: SVGSVGElement; sx: Scale; sy: Scale } {
  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: WIDTH,
    height: HEIGHT,
    role: "img",
  });
  const sx = linearScale(0, 1, MARGIN.left, WIDTH - MARGIN.right);
  const sy = linearScale(0, 1, HEIGHT - MARGIN.bottom, MARGIN.top);
  return { svg, sx, sy };
}

function axes(svg: SVGSVGElement, sx: Scale, sy: Scale, xLabel: string, yLabel: string): void {
  const x0 = sx(0);
  const x1 = sx(1);
  const y0 = sy(0);
  const y1 = sy(1);
  svg.append(
    svgEl("line", { x1: x0, y1: y0, x2: x1, y2: y0, stroke: "#444" }),
    svgEl("line", { x1: x0, y1: y0, x2: x0, y2: y1, stroke: "#444" }),
  );
  for (const v of [0, 0.5, 1]) {
    const tx = svgEl("text", { x: sx(v), y: y0 + 16, "text-anchor": "middle", class: "tick" });
    tx.textContent = v.toString();
    const ty = svgEl("text", { x: x0 - 6, y: sy(v) + 4, "text-anchor": "end", class: "tick" });
    ty.textContent = v.toString();
    svg.append(tx, ty);
  }
  const lx = svgEl("text", {
    x: (x0 + x1) / 2,
    y: HEIGHT - 4,
    "text-anchor": "middle",
    class: "axis-label",
  });
  lx.textContent = xLabel;
  const ly = svgEl("text", {
    x: 12,
    y: (y0 + y1) / 2,
    "text-anchor": "middle",
    class: "axis-label",
    transform: `rotate(-90 12 ${(y0 + y1) / 2})`,
  });
  ly.textContent = yLabel;
  svg.append(lx, ly);
}

function polylinePath(points: Pt[], sx: Scale, sy: Scale): string {
  return points
    .map((p, i) => `${i === 0 ? "M" : "L"}${sx(p.x).toFixed(2)},${sy(p.y).toFixed(2)}`)
    .join("");
}

function pointsAttr(points: Pt[], sx: Scale, sy: Scale): string {
  return points.map((p) => `${sx(p.x).toFixed(2)},${sy(p.y).toFixed(2)}`).join(" ");
}

/** Connected runs of the curve strictly above the baseline, each closed
 * down onto the baseline, with crossings interpolated.  Every returned
 * vertex satisfies y >= baseline, which is exactly the "shade only above
 * the baseline" rule. */
export function aboveBaselineRegions(points: Pt[], baseline: number): Pt[][] {
  const regions: Pt[][] = [];
  let run: Pt[] = [];

  const crossing = (a: Pt, b: Pt): Pt => {
    const t = (baseline - a.y) / (b.y - a.y);
    return { x: a.x + t * (b.x - a.x), y: baseline };
  };

  for (let i = 0; i < points.length; i++) {
    const p = points[i];
    const above = p.y > baseline;
    if (i === 0) {
      if (above) run = [{ x: p.x, y: baseline }, { ...p }];
      continue;
    }
    const prev = points[i - 1];
    const prevAbove = prev.y > baseline;
    if (prevAbove && above) {
      run.push({ ...p });
    } else if (prevAbove && !above) {
      // sides of the crossing differ, so prev.y != p.y
      run.push(crossing(prev, p));
      if (run.length >= 3) regions.push(run);
      run = [];
    } else if (!prevAbove && above) {
      run = [crossing(prev, p), { ...p }];
    }
  }
  if (run.length > 0) {
    run.push({ x: points[points.length - 1].x, y: baseline });
    if (run.length >= 3) regions.push(run);
  }
  return regions;
}

function clearChildren(el: Element): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

export function renderDistributions(
  container: HTMLElement,
  response: EvaluateResponse,
): void {
  clearChildren(container);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: WIDTH,
    height: HEIGHT,
  });

  const xs = response.neg_pdf_trace.x;
  const xLo = Math.min(xs[0], response.neg_histogram.edges[0], response.pos_histogram.edges[0]);
  const xHi = Math.max(
    xs[xs.length - 1],
    response.neg_histogram.edges[response.neg_histogram.edges.length - 1],
    response.pos_histogram.edges[response.pos_histogram.edges.length - 1],
  );
  const maxCount = Math.max(1, ...response.neg_histogram.counts, ...response.pos_histogram.counts);
  const sx = linearScale(xLo, xHi, MARGIN.left, WIDTH - MARGIN.right);
  const sy = linearScale(0, maxCount * 1.05, HEIGHT - MARGIN.bottom, MARGIN.top);

  for (const [hist, color, cls] of [
    [response.neg_histogram, COLORS.negative, "neg-bars"],
    [response.pos_histogram, COLORS.positive, "pos-bars"],
  ] as const) {
    const group = svgEl("g", { class: cls, fill: color, opacity: 0.45 });
    hist.counts.forEach((count, i) => {
      const x0 = sx(hist.edges[i]);
      const x1 = sx(hist.edges[i + 1]);
      group.append(
        svgEl("rect", {
          x: x0,
          y: sy(count),
          width: Math.max(x1 - x0, 0.5),
          height: Math.max(sy(0) - sy(count), 0),
        }),
      );
    });
    svg.append(group);
  }

  // density overlays, rescaled to expected bin counts per class
  for (const [trace, hist, n, color] of [
    [
      response.neg_pdf_trace,
      response.neg_histogram,
      response.config.negative.n,
      COLORS.negative,
    ],
    [
      response.pos_pdf_trace,
      response.pos_histogram,
      response.config.positive.n,
      COLORS.positive,
    ],
  ] as const) {
    const binWidth = hist.edges.length > 1 ? hist.edges[1] - hist.edges[0] : 1;
    const pts: Pt[] = trace.x.map((x, i) => ({ x, y: trace.y[i] * n * binWidth }));
    svg.append(
      svgEl("path", {
        d: polylinePath(pts, sx, sy),
        fill: "none",
        stroke: color,
        "stroke-width": 1.8,
      }),
    );
  }

  const tx = sx(response.config.threshold);
  svg.append(
    svgEl("line", {
      class: "threshold-marker",
      x1: tx,
      y1: sy(0),
      x2: tx,
      y2: MARGIN.top,
      stroke: COLORS.threshold,
      "stroke-width": 2.5,
    }),
  );
  const baseline = svgEl("line", {
    x1: MARGIN.left,
    y1: sy(0),
    x2: WIDTH - MARGIN.right,
    y2: sy(0),
    stroke: "#444",
  });
  const label = svgEl("text", { x: sx(response.config.threshold) + 4, y: MARGIN.top + 10, class: "tick" });
  label.textContent = "threshold";
  label.setAttribute("fill", COLORS.threshold);
  svg.append(baseline, label);
  container.append(svg);
}

export function renderRoc(container: HTMLElement, curve: Curve): void {
  clearChildren(container);
  const { svg, sx, sy } = baseSvg();
  axes(svg, sx, sy, "false positive rate", "true positive rate");
  const pts: Pt[] = curve.points.map((p) => ({ x: p.x, y: p.y }));
  const shade = [...pts, { x: pts[pts.length - 1].x, y: 0 }, { x: pts[0].x, y: 0 }];
  svg.append(
    svgEl("polygon", {
      class: "roc-shade",
      points: pointsAttr(shade, sx, sy),
      fill: COLORS.negative,
      opacity: 0.12,
    }),
    svgEl("line", {
      x1: sx(0),
      y1: sy(0),
      x2: sx(1),
      y2: sy(1),
      stroke: COLORS.baseline,
      "stroke-dasharray": "4 3",
    }),
    svgEl("path", {
      d: polylinePath(pts, sx, sy),
      fill: "none",
      stroke: COLORS.negative,
      "stroke-width": 2,
    }),
  );
  const label = svgEl("text", { x: sx(0.62), y: sy(0.08), class: "plot-label" });
  label.textContent = `ROC AUC = ${(curve.auc ?? 0).toFixed(3)}`;
  svg.append(label);
  container.append(svg);
}

export function renderPr(container: HTMLElement, curve: Curve): void {
  clearChildren(container);
  const { svg, sx, sy } = baseSvg();
  axes(svg, sx, sy, "recall", "precision");
  const baseline = curve.baseline ?? 0;
  const pts: Pt[] = curve.points.map((p) => ({ x: p.x, y: p.y }));

  for (const region of aboveBaselineRegions(pts, baseline)) {
    svg.append(
      svgEl("polygon", {
        class: "pr-shade",
        points: pointsAttr(region, sx, sy),
        fill: COLORS.positive,
        opacity: 0.3,
      }),
    );
  }
  svg.append(
    svgEl("line", {
      class: "pr-baseline",
      x1: sx(0),
      y1: sy(baseline),
      x2: sx(1),
      y2: sy(baseline),
      stroke: COLORS.baseline,
      "stroke-dasharray": "4 3",
    }),
    svgEl("path", {
      d: polylinePath(pts, sx, sy),
      fill: "none",
      stroke: COLORS.positive,
      "stroke-width": 2,
    }),
  );
  const label = svgEl("text", { x: sx(0.05), y: sy(0.06), class: "plot-label" });
  label.textContent = `PR AUC = ${(curve.auc ?? 0).toFixed(3)}  baseline = ${baseline.toFixed(3)}`;
  svg.append(label);
  container.append(svg);
}

export function renderMccF1(container: HTMLElement, curve: Curve): void {
  clearChildren(container);
  const { svg, sx, sy } = baseSvg();
  axes(svg, sx, sy, "F1 score", "unit-normalized MCC");
  const pts: Pt[] = curve.points.map((p) => ({ x: p.x, y: p.y }));
  svg.append(
    svgEl("line", {
      x1: sx(0),
      y1: sy(0.5),
      x2: sx(1),
      y2: sy(0.5),
      stroke: COLORS.baseline,
      "stroke-dasharray": "4 3",
    }),
    svgEl("path", {
      d: polylinePath(pts, sx, sy),
      fill: "none",
      stroke: "#5454c0",
      "stroke-width": 2,
    }),
  );
  if (curve.best_point) {
    svg.append(
      svgEl("circle", {
        class: "best-point",
        cx: sx(curve.best_point.x),
        cy: sy(curve.best_point.y),
        r: 5,
        fill: "none",
        stroke: "#5454c0",
        "stroke-width": 2,
      }),
    );
    const label = svgEl("text", {
      x: sx(0.05),
      y: sy(0.06),
      class: "plot-label",
    });
    const t = curve.best_point.threshold;
    label.textContent = `best threshold = ${t === null ? "∞" : t.toFixed(3)}`;
    svg.append(label);
  }
  container.append(svg);
}

export function renderConfusion(container: HTMLElement, confusion: ConfusionCounts): void {
  clearChildren(container);
  const table = document.createElement("table");
  table.className = "confusion";
  table.innerHTML = `
    <tr><td></td><th scope="col">predicted +</th><th scope="col">predicted −</th></tr>
    <tr><th scope="row">actual +</th><td class="cell-tp">TP ${confusion.tp}</td><td class="cell-fn">FN ${confusion.fn}</td></tr>
    <tr><th scope="row">actual −</th><td class="cell-fp">FP ${confusion.fp}</td><td class="cell-tn">TN ${confusion.tn}</td></tr>
  `;
  container.append(table);
}

const METRIC_LABELS: Array<{ key: keyof MetricSuite; label: string }> = [
  { key: "accuracy", label: "Accuracy" },
  { key: "recall", label: "Recall (TPR)" },
  { key: "specificity", label: "Specificity (TNR)" },
  { key: "precision", label: "Precision (PPV)" },
  { key: "npv", label: "NPV" },
  { key: "f1", label: "F1 score" },
  { key: "mcc_raw", label: "MCC (raw)" },
  { key: "mcc_norm", label: "MCC (unit-normalized)" },
];

function metricRow(label: string, key: string, metric: MetricValue): HTMLElement {
  const row = document.createElement("div");
  row.className = "metric-row";
  row.dataset.metric = key;
  const name = document.createElement("span");
  name.className = "metric-name";
  name.textContent = label;
  const value = document.createElement("span");
  value.className = "metric-value";
  value.textContent = metric.value.toFixed(3);
  row.append(name, value);
  if (!metric.defined) {
    row.classList.add("undefined-metric");
    const note = document.createElement("span");
    note.className = "metric-note";
    note.textContent = `by convention (${metric.convention})`;
    row.append(note);
  }
  return row;
}

export function renderMetrics(container: HTMLElement, metrics: MetricSuite): void {
  clearChildren(container);
  for (const { key, label } of METRIC_LABELS) {
    container.append(metricRow(label, key, metrics[key]));
  }
}
