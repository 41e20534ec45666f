// Browser entry point: wires the session to the DOM. All logic that is
// worth testing lives in the imported modules; this file only moves
// data between them and the page.
import { ApiClient } from "./api.js";
import { diffRowText } from "./diff.js";
import { fmt2 } from "./format.js";
import { diagramToSvg } from "./render.js";
import { Session } from "./session.js";
import { tooltipFor } from "./tooltip.js";
import type { CircuitJson } from "./types.js";

const GROVER_ONE_ITERATION: CircuitJson = {
  qubits: 2,
  gates: [
    { name: "h", params: [], targets: [0] },
    { name: "h", params: [], targets: [1] },
    { name: "cz", params: [], targets: [0, 1] },
    { name: "h", params: [], targets: [0] },
    { name: "h", params: [], targets: [1] },
    { name: "x", params: [], targets: [0] },
    { name: "x", params: [], targets: [1] },
    { name: "cz", params: [], targets: [0, 1] },
    { name: "x", params: [], targets: [0] },
    { name: "x", params: [], targets: [1] },
    { name: "h", params: [], targets: [0] },
    { name: "h", params: [], targets: [1] },
  ],
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function main(): Promise<void> {
  const api = new ApiClient("");
  const session = new Session(api, GROVER_ONE_ITERATION);

  const panel = el<HTMLDivElement>("panel");
  const strip = el<HTMLDivElement>("circuit-strip");
  const noticeBox = el<HTMLDivElement>("notice");
  const tooltipBox = el<HTMLDivElement>("tooltip");
  const diffBox = el<HTMLDivElement>("diff-panel");
  const draftBox = el<HTMLTextAreaElement>("circuit-json");
  const stepLabel = el<HTMLSpanElement>("step-label");
  const probsBox = el<HTMLDivElement>("probabilities");

  function redraw(): void {
    const frame = session.currentFrame;
    const diagram = session.currentDiagram();
    panel.innerHTML = diagram ? diagramToSvg(diagram) : "";
    stepLabel.textContent = `step ${session.currentStep} / ${
      Math.max(0, session.panelCount - 1)
    }`;
    noticeBox.textContent = session.notice ? session.notice.message : "";
    probsBox.textContent = frame
      ? frame.probabilities
          .map((p, i) => {
            const bits = i.toString(2).padStart(session.draft.qubits, "0");
            return `P${bits} = ${fmt2(p)}`;
          })
          .join("   ")
      : "";

    strip.innerHTML = "";
    const chips = ["init", ...session.draft.gates.map((g) => `${g.name}${g.targets.join("")}`)];
    chips.forEach((label, step) => {
      const chip = document.createElement("span");
      chip.textContent = label;
      chip.className = session.currentStep === step ? "gate active" : "gate";
      chip.onclick = () => {
        session.jump(step);
        redraw();
      };
      strip.appendChild(chip);
    });
    draftBox.value = JSON.stringify(session.draft, null, 1);

    if (!frame || !diagram) return;
    panel.querySelectorAll<SVGElement>("[data-index]").forEach((node) => {
      const index = Number(node.dataset.index);
      node.addEventListener("mousemove", (ev) => {
        const text = tooltipFor(
          diagram.primitives[index],
          frame.state,
          diagram.num_qubits,
        );
        if (text === null) {
          tooltipBox.style.display = "none";
          return;
        }
        tooltipBox.textContent = text;
        tooltipBox.style.display = "block";
        tooltipBox.style.left = `${ev.pageX + 12}px`;
        tooltipBox.style.top = `${ev.pageY + 12}px`;
      });
      node.addEventListener("mouseleave", () => {
        tooltipBox.style.display = "none";
      });
    });
  }

  async function applyDraft(mutate: (c: CircuitJson) => void): Promise<void> {
    const result = await session.edit(mutate);
    if (!result.ok) {
      diffBox.textContent = result.diagnostics
        .map((d) => `${d.location}: ${d.message}`)
        .join("\n");
    } else if (result.diff) {
      diffBox.textContent =
        "final probabilities (before -> after):\n" +
        result.diff.map((row) => diffRowText(row, session.draft.qubits)).join("\n");
    }
    redraw();
  }

  el<HTMLButtonElement>("btn-back").onclick = () => {
    session.step("back");
    redraw();
  };
  el<HTMLButtonElement>("btn-forward").onclick = () => {
    session.step("forward");
    redraw();
  };
  el<HTMLButtonElement>("btn-order").onclick = async () => {
    await session.toggleOrder();
    redraw();
  };
  el<HTMLButtonElement>("btn-append-iteration").onclick = () =>
    applyDraft((draft) => {
      draft.gates.push(...GROVER_ONE_ITERATION.gates.slice(2));
    });
  el<HTMLButtonElement>("btn-apply-json").onclick = () => {
    let parsed: CircuitJson;
    try {
      parsed = JSON.parse(draftBox.value);
    } catch (e) {
      diffBox.textContent = `draft is not valid JSON: ${e}`;
      return;
    }
    void applyDraft((draft) => {
      draft.qubits = parsed.qubits;
      draft.gates = parsed.gates;
    });
  };

  await session.loadFrames();
  redraw();
}

main().catch((e) => {
  document.body.textContent = `failed to start: ${e}`;
});
