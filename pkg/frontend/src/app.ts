import { ApiError, evaluate as apiEvaluate, fetchPresets as apiFetchPresets } from "./api.js";
import {
  renderConfusion,
  renderDistributions,
  renderMccF1,
  renderMetrics,
  renderPr,
  renderRoc,
} from "./plots.js";
import { DEBOUNCE_MS, EvaluationScheduler } from "./scheduler.js";
import {
  type ControlState,
  PANELS,
  type PanelId,
  SLIDERS,
  type SliderSpec,
  applyConfig,
  clampToSlider,
  defaultState,
  toRequest,
} from "./state.js";
import type { EvaluateRequest, EvaluateResponse, Preset } from "./types.js";

export interface AppDeps {
  fetchPresets: () => Promise<Preset[]>;
  evaluate: (request: EvaluateRequest) => Promise<EvaluateResponse>;
  debounceMs?: number;
}

export interface AppHandle {
  currentState(): ControlState;
  latestResponse(): EvaluateResponse | null;
  scheduler: EvaluationScheduler<EvaluateRequest, EvaluateResponse>;
}

function sliderMarkup(spec: SliderSpec, value: number): HTMLLabelElement {
  const label = document.createElement("label");
  label.className = "slider";
  label.htmlFor = spec.id;
  const name = document.createElement("span");
  name.className = "slider-name";
  name.textContent = spec.label;
  const input = document.createElement("input");
  input.type = "range";
  input.id = spec.id;
  input.min = String(spec.min);
  input.max = String(spec.max);
  input.step = String(spec.step);
  input.value = String(value);
  const output = document.createElement("output");
  output.id = `${spec.id}-value`;
  output.textContent = String(value);
  label.append(name, input, output);
  return label;
}

function buildDom(root: HTMLElement): void {
  root.innerHTML = `
    <header class="topbar">
      <h1>metriclab</h1>
      <div class="preset-bar">
        <select id="preset-select" aria-label="preset"></select>
        <button id="load-preset" type="button">Load preset</button>
        <label class="seed-box">seed
          <input id="seed" type="number" min="0" step="1" value="42">
        </label>
        <button id="reroll" type="button" title="pick a random seed">reroll</button>
      </div>
      <div id="banner" class="banner hidden" role="alert"></div>
    </header>
    <section class="controls">
      <div class="sliders" id="sliders"></div>
      <div class="panel-toggles" id="panel-toggles"></div>
    </section>
    <main class="panels" id="panels"></main>
  `;

  const state = defaultState();
  const sliders = root.querySelector<HTMLElement>("#sliders")!;
  for (const spec of SLIDERS) {
    sliders.append(sliderMarkup(spec, spec.read(state)));
  }

  const toggles = root.querySelector<HTMLElement>("#panel-toggles")!;
  for (const { id, label } of PANELS) {
    const wrap = document.createElement("label");
    wrap.className = "toggle";
    const box = document.createElement("input");
    box.type = "checkbox";
    box.id = `toggle-${id}`;
    box.checked = true;
    wrap.append(box, document.createTextNode(` ${label}`));
    toggles.append(wrap);
  }

  const panels = root.querySelector<HTMLElement>("#panels")!;
  for (const { id, label } of PANELS) {
    const section = document.createElement("section");
    section.className = "panel";
    section.id = `panel-${id}`;
    const heading = document.createElement("h2");
    heading.textContent = label;
    const body = document.createElement("div");
    body.className = "panel-body";
    body.id = `body-${id}`;
    section.append(heading, body);
    panels.append(section);
  }
}

const FIELD_TO_CONTROL: Array<[RegExp, (path: string) => string]> = [
  [/^negative\.(\w+)$/, (p) => `neg-${p.split(".")[1]}`],
  [/^positive\.(\w+)$/, (p) => `pos-${p.split(".")[1]}`],
  [/^threshold$/, () => "threshold"],
  [/^seed$/, () => "seed"],
];

function controlForField(path: string): string | null {
  for (const [pattern, mapper] of FIELD_TO_CONTROL) {
    if (pattern.test(path)) return mapper(path);
  }
  return null;
}

export function initApp(root: HTMLElement, deps?: Partial<AppDeps>): AppHandle {
  const fetchPresets = deps?.fetchPresets ?? apiFetchPresets;
  const evaluate = deps?.evaluate ?? apiEvaluate;
  const debounceMs = deps?.debounceMs ?? DEBOUNCE_MS;

  buildDom(root);

  let state = defaultState();
  let latest: EvaluateResponse | null = null;

  const banner = root.querySelector<HTMLElement>("#banner")!;
  const seedInput = root.querySelector<HTMLInputElement>("#seed")!;

  const showBanner = (message: string) => {
    banner.textContent = message;
    banner.classList.remove("hidden");
  };
  const hideBanner = () => {
    banner.textContent = "";
    banner.classList.add("hidden");
  };

  const clearInvalid = () => {
    for (const el of root.querySelectorAll(".invalid")) el.classList.remove("invalid");
  };

  const panelBody = (id: PanelId) => root.querySelector<HTMLElement>(`#body-${id}`)!;

  const renderPanel = (id: PanelId, response: EvaluateResponse) => {
    switch (id) {
      case "distributions":
        renderDistributions(panelBody(id), response);
        break;
      case "roc":
        renderRoc(panelBody(id), response.roc);
        break;
      case "pr":
        renderPr(panelBody(id), response.pr);
        break;
      case "confusion":
        renderConfusion(panelBody(id), response.confusion);
        break;
      case "mccf1":
        renderMccF1(panelBody(id), response.mccf1);
        break;
      case "metrics":
        renderMetrics(panelBody(id), response.metrics);
        break;
    }
  };

  const renderVisiblePanels = (response: EvaluateResponse) => {
    for (const { id } of PANELS) {
      if (state.visible[id]) renderPanel(id, response);
    }
  };

  const scheduler = new EvaluationScheduler<EvaluateRequest, EvaluateResponse>(
    evaluate,
    (_request, response) => {
      latest = response;
      hideBanner();
      clearInvalid();
      renderVisiblePanels(response);
    },
    (_request, error) => {
      if (error instanceof ApiError) {
        const path = error.fieldPath();
        const control = path === null ? null : controlForField(path);
        if (control) {
          root.querySelector(`#${control}`)?.classList.add("invalid");
        }
        showBanner(`rejected: ${error.message}`);
      } else {
        showBanner("service unreachable; controls stay live");
      }
    },
    debounceMs,
  );

  const requestEvaluation = () => scheduler.request(toRequest(state));

  const syncControls = () => {
    for (const spec of SLIDERS) {
      const input = root.querySelector<HTMLInputElement>(`#${spec.id}`)!;
      const output = root.querySelector<HTMLOutputElement>(`#${spec.id}-value`)!;
      input.value = String(spec.read(state));
      output.textContent = String(spec.read(state));
    }
    seedInput.value = String(state.seed);
  };

  for (const spec of SLIDERS) {
    const input = root.querySelector<HTMLInputElement>(`#${spec.id}`)!;
    input.addEventListener("input", () => {
      const value = clampToSlider(spec, Number(input.value));
      state = spec.write(state, value);
      root.querySelector<HTMLOutputElement>(`#${spec.id}-value`)!.textContent = String(value);
      clearInvalid();
      requestEvaluation();
    });
  }

  seedInput.addEventListener("change", () => {
    const value = Math.max(0, Math.floor(Number(seedInput.value) || 0));
    state = { ...state, seed: value };
    seedInput.value = String(value);
    requestEvaluation();
  });

  root.querySelector<HTMLButtonElement>("#reroll")!.addEventListener("click", () => {
    state = { ...state, seed: Math.floor(Math.random() * 2 ** 32) };
    seedInput.value = String(state.seed);
    requestEvaluation();
  });

  const applyVisibility = () => {
    for (const { id } of PANELS) {
      const panel = root.querySelector<HTMLElement>(`#panel-${id}`)!;
      panel.classList.toggle("hidden", !state.visible[id]);
    }
  };

  for (const { id } of PANELS) {
    const box = root.querySelector<HTMLInputElement>(`#toggle-${id}`)!;
    box.addEventListener("change", () => {
      // presentation only: no network traffic, data stays in the last bundle
      state = { ...state, visible: { ...state.visible, [id]: box.checked } };
      applyVisibility();
      if (box.checked && latest !== null) renderPanel(id, latest);
    });
  }

  const presetSelect = root.querySelector<HTMLSelectElement>("#preset-select")!;
  let presets: Preset[] = [];
  fetchPresets().then(
    (list) => {
      presets = list;
      for (const p of list) {
        const option = document.createElement("option");
        option.value = p.name;
        option.textContent = p.name;
        presetSelect.append(option);
      }
    },
    () => showBanner("could not load presets"),
  );

  root.querySelector<HTMLButtonElement>("#load-preset")!.addEventListener("click", () => {
    const chosen = presets.find((p) => p.name === presetSelect.value);
    if (!chosen) return;
    state = applyConfig(state, chosen.config);
    syncControls();
    clearInvalid();
    requestEvaluation();
  });

  requestEvaluation();

  return {
    currentState: () => state,
    latestResponse: () => latest,
    scheduler,
  };
}
