import { ApiError, ServiceClient } from "./api.js";
import { WorkbenchApp } from "./app.js";
import { quiverSvg } from "./render.js";
import { parseSession, sessionText } from "./session.js";
import type { QuiverData, SessionData } from "./types.js";

// Page wiring. Everything stateful lives in WorkbenchApp; this file
// only moves strings between the DOM and the app.

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const quiverInput = $<HTMLTextAreaElement>("quiver-input");
const loadButton = $<HTMLButtonElement>("load");
const undoButton = $<HTMLButtonElement>("undo");
const redoButton = $<HTMLButtonElement>("redo");
const exportButton = $<HTMLButtonElement>("export");
const importInput = $<HTMLInputElement>("import");
const drawing = $<HTMLDivElement>("drawing");
const latest = $<HTMLDivElement>("latest");
const clusterList = $<HTMLOListElement>("cluster");
const statusLine = $<HTMLDivElement>("status");

const serviceUrl = new URLSearchParams(location.search).get("service") ?? "http://127.0.0.1:8787";
const app = new WorkbenchApp(new ServiceClient(serviceUrl));

function setStatus(text: string, isError = false) {
  statusLine.textContent = text;
  statusLine.classList.toggle("error", isError);
}

function redraw() {
  if (!app.loaded) return;
  const snapshot = app.snapshot;
  drawing.innerHTML = quiverSvg(snapshot.seed.quiver);
  latest.textContent = app.latestDisplay();
  clusterList.replaceChildren(
    ...app.clusterDisplay().map((text) => {
      const item = document.createElement("li");
      item.textContent = text;
      return item;
    }),
  );
  undoButton.disabled = !app.canUndo();
  redoButton.disabled = !app.canRedo();
  const type = snapshot.dynkinType ? ` type=${snapshot.dynkinType}` : "";
  setStatus(`clicks: ${snapshot.sequence.join(",") || "none"}${type}`);
}

function reportError(err: unknown) {
  if (err instanceof ApiError) {
    setStatus(err.detail, true);
  } else {
    setStatus(String(err), true);
  }
}

async function loadFromTextarea() {
  let quiver: QuiverData;
  try {
    quiver = JSON.parse(quiverInput.value) as QuiverData;
  } catch {
    setStatus("quiver box does not hold valid JSON", true);
    return;
  }
  try {
    await app.load(quiver);
    redraw();
  } catch (err) {
    reportError(err);
  }
}

drawing.addEventListener("click", async (event) => {
  const vertex = (event.target as Element).closest("[data-vertex]");
  if (!vertex || !app.loaded) return;
  const k = Number(vertex.getAttribute("data-vertex"));
  try {
    await app.clickVertex(k);
    redraw();
  } catch (err) {
    reportError(err);
  }
});

loadButton.addEventListener("click", loadFromTextarea);
undoButton.addEventListener("click", () => {
  app.undo();
  redraw();
});
redoButton.addEventListener("click", () => {
  app.redo();
  redraw();
});

exportButton.addEventListener("click", () => {
  const blob = new Blob([sessionText(app.exportSession())], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "session.json";
  link.click();
  URL.revokeObjectURL(link.href);
});

importInput.addEventListener("change", async () => {
  const file = importInput.files?.[0];
  if (!file) return;
  let session: SessionData;
  try {
    session = parseSession(await file.text());
  } catch (err) {
    reportError(err);
    return;
  }
  try {
    await app.importSession(session);
    quiverInput.value = JSON.stringify(session.quiver);
    redraw();
  } catch (err) {
    reportError(err);
  }
});

quiverInput.value = JSON.stringify({ n: 3, arrows: [[2, 1, 1], [1, 3, 1], [3, 2, 1]] });
void loadFromTextarea();
