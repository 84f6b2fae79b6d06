/** Wire-format types for the evaluation service (see the API section of the README). */

export interface DistributionParams {
  n: number;
  loc: number;
  scale: number;
  shape: number;
}

export interface EvaluateRequest {
  negative: DistributionParams;
  positive: DistributionParams;
  threshold: number;
  seed: number;
}

export interface MetricValue {
  value: number;
  defined: boolean;
  convention: string | null;
}

export interface MetricSuite {
  accuracy: MetricValue;
  recall: MetricValue;
  specificity: MetricValue;
  precision: MetricValue;
  npv: MetricValue;
  f1: MetricValue;
  mcc_raw: MetricValue;
  mcc_norm: MetricValue;
}

export interface ConfusionCounts {
  tp: number;
  fp: number;
  tn: number;
  fn: number;
}

export interface HistogramData {
  edges: number[];
  counts: number[];
}

export interface PdfTrace {
  x: number[];
  y: number[];
}

export interface CurvePoint {
  /** null marks the sweep's sentinel threshold (above every score). */
  threshold: number | null;
  x: number;
  y: number;
}

export interface Curve {
  kind: string;
  points: CurvePoint[];
  auc: number | null;
  baseline: number | null;
  area_above_baseline: number | null;
  best_point: CurvePoint | null;
}

export interface EvaluateResponse {
  config: EvaluateRequest;
  neg_histogram: HistogramData;
  pos_histogram: HistogramData;
  neg_pdf_trace: PdfTrace;
  pos_pdf_trace: PdfTrace;
  confusion: ConfusionCounts;
  metrics: MetricSuite;
  roc: Curve;
  pr: Curve;
  mccf1: Curve;
}

export interface Preset {
  name: string;
  config: EvaluateRequest;
}
