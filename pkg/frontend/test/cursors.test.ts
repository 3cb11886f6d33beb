import { describe, expect, it } from "vitest";

import { CURSOR_NAMES, cssCursor } from "../src/cursors.js";

describe("cursor mapping", () => {
  it("covers every hint the engine can send", () => {
    expect(CURSOR_NAMES.sort()).toEqual(
      ["default", "hand", "size_all", "size_ns", "size_nesw", "size_nwse", "size_we"].sort(),
    );
  });

  it("uses the standard resize cursors", () => {
    expect(cssCursor("size_nwse")).toBe("nwse-resize");
    expect(cssCursor("size_nesw")).toBe("nesw-resize");
    expect(cssCursor("size_ns")).toBe("ns-resize");
    expect(cssCursor("size_we")).toBe("ew-resize");
  });

  it("maps grab hints to pointer and move", () => {
    expect(cssCursor("hand")).toBe("pointer");
    expect(cssCursor("size_all")).toBe("move");
  });

  it("falls back to default for anything unknown", () => {
    expect(cssCursor("default")).toBe("default");
    expect(cssCursor("spiral")).toBe("default");
    expect(cssCursor("")).toBe("default");
  });
});
