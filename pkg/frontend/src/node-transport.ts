/** TCP transport used when the console core runs under node (tests, TUIs). */

import { createConnection, type Socket } from "node:net";

import { LineBuffer } from "./protocol.js";
import type { Transport } from "./transport.js";

export class NodeTcpTransport implements Transport {
  private readonly buffer = new LineBuffer();
  private lineHandler: (line: string) => void = () => {};
  private closeHandler: () => void = () => {};

  constructor(private readonly socket: Socket) {
    socket.setEncoding("utf-8");
    socket.on("data", (chunk: string) => {
      for (const line of this.buffer.push(chunk)) {
        this.lineHandler(line);
      }
    });
    socket.on("close", () => this.closeHandler());
  }

  static connect(host: string, port: number): Promise<NodeTcpTransport> {
    return new Promise((resolve, reject) => {
      const socket = createConnection({ host, port }, () => {
        socket.off("error", reject);
        resolve(new NodeTcpTransport(socket));
      });
      socket.once("error", reject);
    });
  }

  send(line: string): void {
    this.socket.write(line.endsWith("\n") ? line : line + "\n");
  }

  onLine(handler: (line: string) => void): void {
    this.lineHandler = handler;
  }

  onClose(handler: () => void): void {
    this.closeHandler = handler;
  }

  close(): void {
    this.socket.destroy();
  }
}
