import { type ChildProcessByStdio, spawn } from "node:child_process";
import { createInterface, type Interface } from "node:readline";
import type { Readable, Writable } from "node:stream";

import type { CoreClient, UiCommand, UiResponse } from "../src/protocol.js";

// Hosts the engine as a child process speaking the line protocol
// (`python3 -m gripkit session`). Responses come back in command order,
// so a FIFO of pending resolvers pairs them up.
export class StdioCore implements CoreClient {
  private child: ChildProcessByStdio<Writable, Readable, null>;
  private lines: Interface;
  private pending: Array<(response: UiResponse) => void> = [];

  constructor() {
    this.child = spawn("python3", ["-m", "gripkit", "session"], {
      stdio: ["pipe", "pipe", "inherit"],
    });
    this.lines = createInterface({ input: this.child.stdout });
    this.lines.on("line", (line) => {
      const resolve = this.pending.shift();
      if (resolve) resolve(JSON.parse(line) as UiResponse);
    });
  }

  send(command: UiCommand): Promise<UiResponse> {
    return new Promise((resolve) => {
      this.pending.push(resolve);
      this.child.stdin.write(JSON.stringify(command) + "\n");
    });
  }

  close() {
    this.lines.close();
    this.child.stdin.end();
    this.child.kill();
  }
}
