/**
 * Browser entry: wires the websocket transport, the command panel, the
 * skeleton canvas, the event feed, and the statuses pane to the DOM in
 * index.html. Serve the directory statically and run the TCP bridge
 * (npm run bridge) in front of `gav serve`.
 */

import { ConsoleClient } from "./client.js";
import { mirrorMatchesSnapshot } from "./mirror.js";
import { commandButtons, selectPartMessage } from "./panel.js";
import { parseRecording } from "./recording.js";
import { renderSkeleton, type Canvas2D } from "./render.js";
import { WebSocketTransport } from "./transport.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function connect(): void {
  const url = (el<HTMLInputElement>("bridge-url")).value;
  const socket = new WebSocket(url);
  socket.addEventListener("open", async () => {
    const client = new ConsoleClient(new WebSocketTransport(socket));
    await client.connect();
    wire(client);
  });
  socket.addEventListener("error", () => {
    el("connection").textContent = "bridge unreachable";
  });
}

function wire(client: ConsoleClient): void {
  const buttonsPane = el("buttons");
  const feedPane = el("feed");
  const statusesPane = el("statuses");
  const statePane = el("state");
  const connectionPane = el("connection");
  const canvas = el<HTMLCanvasElement>("skeleton");
  const ctx = canvas.getContext("2d") as unknown as Canvas2D;

  const buttons = commandButtons();
  const domButtons: HTMLButtonElement[] = [];
  for (const spec of buttons) {
    const node = document.createElement("button");
    node.textContent = spec.label;
    node.dataset.group = spec.group;
    // Visibly disabled outside its states, but still sendable on purpose.
    node.addEventListener("click", () => client.send(spec.message));
    buttonsPane.appendChild(node);
    domButtons.push(node);
  }
  const partInput = document.createElement("input");
  partInput.type = "number";
  partInput.min = "1";
  partInput.value = "1";
  const partButton = document.createElement("button");
  partButton.textContent = "Select Part";
  partButton.addEventListener("click", () =>
    client.send(selectPartMessage(Number(partInput.value))),
  );
  buttonsPane.append(partInput, partButton);

  el<HTMLButtonElement>("refresh-status").addEventListener("click", () => {
    client.requestStatus();
  });

  el<HTMLInputElement>("recording-file").addEventListener("change", async (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (!file) {
      return;
    }
    const recording = parseRecording(await file.text());
    const interval = 1000 / Math.max(recording.fps, 10);
    for (const frame of recording.frames) {
      client.send(frame);
      repaint();
      await new Promise((resolve) => setTimeout(resolve, interval));
    }
  });

  function repaint(): void {
    connectionPane.textContent = client.mirror.connection;
    const state = client.mirror.state;
    statePane.textContent =
      "step" in state ? `${state.kind} (step ${state.step})` : state.kind;
    for (const [index, spec] of buttons.entries()) {
      domButtons[index]!.classList.toggle("inactive", !spec.enabledIn(state));
    }
    feedPane.textContent = client.mirror.feed
      .slice(-30)
      .map((entry) => (entry.invalid ? "! " : "  ") + entry.text)
      .join("\n");
    statusesPane.textContent = client.mirror.statuses
      .map((status, step) => `step ${step}: ${status}`)
      .join("\n");
    const snapshot = client.mirror.lastStatuses;
    el("mirror-check").textContent = snapshot
      ? mirrorMatchesSnapshot(client.mirror, snapshot)
        ? "mirror = harness"
        : "mirror DIVERGED"
      : "";
    const frame = client.mirror.latestFrame();
    if (frame) {
      renderSkeleton(ctx, frame, { width: canvas.width, height: canvas.height });
    }
  }

  const repaintTimer = setInterval(repaint, 100); // >= 10 Hz during replay
  client.waitFor(() => false, 1 << 30).catch(() => clearInterval(repaintTimer));
  repaint();
}

el<HTMLButtonElement>("connect").addEventListener("click", connect);
