import { cssCursor } from "./cursors.js";
import { PointerForwarder } from "./forwarder.js";
import { HttpClient } from "./http-client.js";
import { paint } from "./painter.js";
import type { SceneDoc, UiResponse } from "./protocol.js";

const client = new HttpClient();
const forwarder = new PointerForwarder(client);

const canvas = document.getElementById("surface") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const scenePicker = document.getElementById("scene") as HTMLSelectElement;
const policyPicker = document.getElementById("policy") as HTMLSelectElement;
const contoursBox = document.getElementById("contours") as HTMLInputElement;
const infoList = document.getElementById("info") as HTMLUListElement;
const status = document.getElementById("status") as HTMLSpanElement;

function applyResponse(response: UiResponse) {
  if (response.error) {
    status.textContent = response.error;
    return;
  }
  canvas.style.cursor = cssCursor(response.cursor);
  if (response.repaint) {
    paint(ctx, response.render, canvas.width, canvas.height);
  }
  infoList.replaceChildren(
    ...response.info.map((entry) => {
      const li = document.createElement("li");
      const [x, y, w, h] = entry.bounds;
      li.textContent = `#${entry.index} ${entry.type}  ${w}×${h} at (${x}, ${y})`;
      if (entry.caught) li.className = "caught";
      return li;
    }),
  );
}

forwarder.onResponse = applyResponse;

async function loadScene(doc: SceneDoc) {
  canvas.width = doc.work.width;
  canvas.height = doc.work.height;
  const response = await client.send({ cmd: "load_scene", scene: doc });
  applyResponse(response);
  // view toggles survive a reload on the UI side; re-apply them
  const toggled = await client.send({ cmd: "set_contours", visible: contoursBox.checked });
  applyResponse(toggled);
}

async function loadPicked() {
  const slug = scenePicker.value;
  const doc = await client.galleryScene(slug);
  if (![...policyPicker.options].some((o) => o.value === doc.policy)) {
    const option = document.createElement("option");
    option.value = option.textContent = doc.policy;
    policyPicker.append(option);
  }
  policyPicker.value = doc.policy;
  await loadScene(doc);
}

function download(name: string, text: string, type: string) {
  const a = document.createElement("a");
  a.href = URL.createObjectURL(new Blob([text], { type }));
  a.download = name;
  a.click();
  URL.revokeObjectURL(a.href);
}

async function exportWhat(what: "scene" | "trace" | "svg", name: string, type: string) {
  const response = await client.send({ cmd: "export", what });
  applyResponse(response);
  if (response.export) download(name, response.export.text, type);
}

canvas.addEventListener("mousedown", (e) => {
  e.preventDefault();
  forwarder.down(e.offsetX, e.offsetY, e.button === 2 ? "right" : "left");
});
canvas.addEventListener("mousemove", (e) => {
  status.textContent = `(${Math.trunc(e.offsetX)}, ${Math.trunc(e.offsetY)})`;
  forwarder.move(e.offsetX, e.offsetY);
});
canvas.addEventListener("mouseup", (e) => {
  forwarder.up(e.offsetX, e.offsetY);
});
canvas.addEventListener("mouseleave", () => {
  forwarder.leave();
});
canvas.addEventListener("contextmenu", (e) => e.preventDefault());

scenePicker.addEventListener("change", loadPicked);
policyPicker.addEventListener("change", async () => {
  applyResponse(await client.send({ cmd: "set_policy", policy: policyPicker.value }));
});
contoursBox.addEventListener("change", async () => {
  applyResponse(await client.send({ cmd: "set_contours", visible: contoursBox.checked }));
});

document.getElementById("export-scene")!.addEventListener("click", () => {
  exportWhat("scene", "scene.json", "application/json");
});
document.getElementById("export-trace")!.addEventListener("click", () => {
  exportWhat("trace", "trace.jsonl", "application/jsonl");
});
document.getElementById("export-svg")!.addEventListener("click", () => {
  exportWhat("svg", "scene.svg", "image/svg+xml");
});

async function boot() {
  const cases = await client.galleryCases();
  for (const slug of ["combined", ...cases]) {
    const option = document.createElement("option");
    option.value = option.textContent = slug;
    scenePicker.append(option);
  }
  await loadPicked();
}

boot().catch((e) => {
  status.textContent = `failed to start: ${e}`;
});
