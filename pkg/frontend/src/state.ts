import type { DistributionParams, EvaluateRequest } from "./types.js";

export type PanelId =
  | "distributions"
  | "roc"
  | "pr"
  | "confusion"
  | "mccf1"
  | "metrics";

export const PANELS: Array<{ id: PanelId; label: string }> = [
  { id: "distributions", label: "Class distributions" },
  { id: "roc", label: "ROC curve" },
  { id: "pr", label: "Precision-Recall curve" },
  { id: "confusion", label: "Confusion matrix" },
  { id: "mccf1", label: "MCC-F1 curve" },
  { id: "metrics", label: "Metric readouts" },
];

export interface ControlState {
  negative: DistributionParams;
  positive: DistributionParams;
  threshold: number;
  seed: number;
  visible: Record<PanelId, boolean>;
}

export interface SliderSpec {
  id: string;
  label: string;
  min: number;
  max: number;
  step: number;
  read(state: ControlState): number;
  write(state: ControlState, value: number): ControlState;
}

function withClass(
  state: ControlState,
  side: "negative" | "positive",
  patch: Partial<DistributionParams>,
): ControlState {
  return { ...state, [side]: { ...state[side], ...patch } };
}

function classSliders(side: "negative" | "positive", prefix: string): SliderSpec[] {
  const title = side === "negative" ? "Negative" : "Positive";
  return [
    {
      id: `${prefix}-n`,
      label: `${title} N`,
      min: 1,
      max: 10000,
      step: 1,
      read: (s) => s[side].n,
      write: (s, v) => withClass(s, side, { n: v }),
    },
    {
      id: `${prefix}-loc`,
      label: `${title} location`,
      min: -10,
      max: 10,
      step: 0.1,
      read: (s) => s[side].loc,
      write: (s, v) => withClass(s, side, { loc: v }),
    },
    {
      id: `${prefix}-scale`,
      label: `${title} scale`,
      min: 0.1,
      max: 10,
      step: 0.1,
      read: (s) => s[side].scale,
      write: (s, v) => withClass(s, side, { scale: v }),
    },
    {
      id: `${prefix}-shape`,
      label: `${title} skew shape`,
      min: -10,
      max: 10,
      step: 0.1,
      read: (s) => s[side].shape,
      write: (s, v) => withClass(s, side, { shape: v }),
    },
  ];
}

/** The nine interactive sliders: 4 per class plus the decision threshold. */
export const SLIDERS: SliderSpec[] = [
  ...classSliders("negative", "neg"),
  ...classSliders("positive", "pos"),
  {
    id: "threshold",
    label: "Threshold",
    min: -15,
    max: 15,
    step: 0.1,
    read: (s) => s.threshold,
    write: (s, v) => ({ ...s, threshold: v }),
  },
];

export function clampToSlider(spec: SliderSpec, value: number): number {
  if (Number.isNaN(value)) return spec.min;
  return Math.min(spec.max, Math.max(spec.min, value));
}

export function defaultState(): ControlState {
  return {
    negative: { n: 500, loc: 0, scale: 1, shape: 0 },
    positive: { n: 500, loc: 2, scale: 1, shape: 0 },
    threshold: 1,
    seed: 42,
    visible: {
      distributions: true,
      roc: true,
      pr: true,
      confusion: true,
      mccf1: true,
      metrics: true,
    },
  };
}

export function toRequest(state: ControlState): EvaluateRequest {
  return {
    negative: { ...state.negative },
    positive: { ...state.positive },
    threshold: state.threshold,
    seed: state.seed,
  };
}

/** Move every control to a preset's values; visibility flags are untouched. */
export function applyConfig(state: ControlState, config: EvaluateRequest): ControlState {
  return {
    ...state,
    negative: { ...config.negative },
    positive: { ...config.positive },
    threshold: config.threshold,
    seed: config.seed,
  };
}
