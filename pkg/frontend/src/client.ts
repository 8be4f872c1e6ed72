/** Console client: one transport, one mirror, strictly ordered apply. */

import { ConsoleMirror } from "./mirror.js";
import {
  decode,
  encode,
  gesture,
  hello,
  speech,
  statusQuery,
  type InboundMessage,
  type OutboundMessage,
  type WireFrame,
} from "./protocol.js";
import type { Transport } from "./transport.js";

export class ConsoleClient {
  readonly mirror = new ConsoleMirror();
  private waiters: { predicate: (m: OutboundMessage) => boolean; resolve: (m: OutboundMessage) => void }[] = [];

  constructor(private readonly transport: Transport) {
    this.mirror.connection = "connecting";
    transport.onLine((line) => this.receive(line));
    transport.onClose(() => {
      this.mirror.connection = "disconnected";
    });
  }

  /** Sends the handshake; resolves once the harness acknowledges it. */
  async connect(): Promise<void> {
    const acked = this.waitFor((m) => m.kind === "ack" || m.kind === "error");
    this.send(hello());
    const reply = await acked;
    if (reply.kind === "error") {
      throw new Error(`handshake refused: ${reply.message}`);
    }
    this.mirror.connection = "connected";
  }

  send(message: InboundMessage): void {
    if (message.kind === "frame") {
      this.mirror.recordSentFrame(message as WireFrame);
    }
    this.transport.send(encode(message));
  }

  sendSpeech(text: string): void {
    this.send(speech(text));
  }

  sendGesture(name: string): void {
    this.send(gesture(name));
  }

  requestStatus(): void {
    this.send(statusQuery());
  }

  /** Resolves with the next message matching the predicate. */
  waitFor(predicate: (m: OutboundMessage) => boolean, timeoutMs = 5000): Promise<OutboundMessage> {
    return new Promise((resolve, reject) => {
      const timer = setTimeout(
        () => reject(new Error("timed out waiting for harness message")),
        timeoutMs,
      );
      this.waiters.push({
        predicate,
        resolve: (message) => {
          clearTimeout(timer);
          resolve(message);
        },
      });
    });
  }

  waitForEvent(name: string, timeoutMs = 5000): Promise<OutboundMessage> {
    return this.waitFor((m) => m.kind === "event" && m.name === name, timeoutMs);
  }

  close(): void {
    this.transport.close();
  }

  private receive(line: string): void {
    const message = decode(line);
    this.mirror.apply(message);
    const remaining: typeof this.waiters = [];
    let consumed = false;
    for (const waiter of this.waiters) {
      if (!consumed && waiter.predicate(message)) {
        consumed = true;
        waiter.resolve(message);
      } else {
        remaining.push(waiter);
      }
    }
    this.waiters = remaining;
  }
}
