import type { CoreClient, SceneDoc, UiCommand, UiResponse } from "./protocol.js";

// Talks to `gripkit serve`. One outstanding command at a time: each send
// waits for every earlier one, so responses come back in command order even
// when callers fire without awaiting.
export class HttpClient implements CoreClient {
  private base: string;
  private queue: Promise<unknown> = Promise.resolve();

  constructor(base = "") {
    this.base = base;
  }

  send(command: UiCommand): Promise<UiResponse> {
    const next = this.queue.then(async () => {
      const res = await fetch(`${this.base}/command`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(command),
      });
      return (await res.json()) as UiResponse;
    });
    this.queue = next.catch(() => {});
    return next;
  }

  async galleryCases(): Promise<string[]> {
    const res = await fetch(`${this.base}/gallery`);
    const body = (await res.json()) as { cases: string[] };
    return body.cases;
  }

  async galleryScene(slug: string): Promise<SceneDoc> {
    const res = await fetch(`${this.base}/gallery/${slug}`);
    if (!res.ok) throw new Error(`no such gallery case: ${slug}`);
    return (await res.json()) as SceneDoc;
  }
}
