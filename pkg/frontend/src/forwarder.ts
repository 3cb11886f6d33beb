import type { ButtonName, CoreClient, UiResponse } from "./protocol.js";

// Raw pointer events -> protocol commands, 1:1. Browser coordinates come in
// fractional; the engine lives on an integer grid, so they are truncated.
// If the pointer leaves the canvas while a button is held the gesture must
// still end, so leave() synthesizes the missing up at the last position.
export class PointerForwarder {
  onResponse: (response: UiResponse) => void = () => {};

  private client: CoreClient;
  private buttonHeld = false;
  private lastX = 0;
  private lastY = 0;

  constructor(client: CoreClient) {
    this.client = client;
  }

  async down(x: number, y: number, button: ButtonName = "left"): Promise<UiResponse> {
    this.buttonHeld = true;
    this.remember(x, y);
    return this.forward({ cmd: "pointer", kind: "down", x: this.lastX, y: this.lastY, button });
  }

  async move(x: number, y: number): Promise<UiResponse> {
    this.remember(x, y);
    return this.forward({ cmd: "pointer", kind: "move", x: this.lastX, y: this.lastY });
  }

  async up(x: number, y: number): Promise<UiResponse> {
    this.buttonHeld = false;
    this.remember(x, y);
    return this.forward({ cmd: "pointer", kind: "up", x: this.lastX, y: this.lastY });
  }

  // Returns null when there was nothing to release.
  async leave(): Promise<UiResponse | null> {
    if (!this.buttonHeld) return null;
    return this.up(this.lastX, this.lastY);
  }

  private remember(x: number, y: number) {
    this.lastX = Math.trunc(x);
    this.lastY = Math.trunc(y);
  }

  private async forward(command: Parameters<CoreClient["send"]>[0]): Promise<UiResponse> {
    const response = await this.client.send(command);
    this.onResponse(response);
    return response;
  }
}
