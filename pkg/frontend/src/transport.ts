/** Transport abstraction: a bidirectional line stream to the harness. */

export interface Transport {
  send(line: string): void;
  onLine(handler: (line: string) => void): void;
  onClose(handler: () => void): void;
  close(): void;
}

/**
 * WebSocket transport for the browser build. Raw TCP is not reachable
 * from a page, so this expects the bundled TCP bridge
 * (bridge/tcp-ws-bridge.mjs) in front of the harness; each websocket
 * message carries one protocol line.
 */
export class WebSocketTransport implements Transport {
  private lineHandler: (line: string) => void = () => {};
  private closeHandler: () => void = () => {};

  constructor(private readonly socket: WebSocket) {
    socket.addEventListener("message", (event) => {
      for (const line of String(event.data).split("\n")) {
        if (line.length > 0) {
          this.lineHandler(line);
        }
      }
    });
    socket.addEventListener("close", () => this.closeHandler());
  }

  send(line: string): void {
    this.socket.send(line.endsWith("\n") ? line : line + "\n");
  }

  onLine(handler: (line: string) => void): void {
    this.lineHandler = handler;
  }

  onClose(handler: () => void): void {
    this.closeHandler = handler;
  }

  close(): void {
    this.socket.close();
  }
}
