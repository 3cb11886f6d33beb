// Engine cursor hints -> CSS cursor values.

const CURSOR_CSS: Record<string, string> = {
  default: "default",
  hand: "pointer",
  size_all: "move",
  size_ns: "ns-resize",
  size_we: "ew-resize",
  size_nwse: "nwse-resize",
  size_nesw: "nesw-resize",
};

export const CURSOR_NAMES = Object.keys(CURSOR_CSS);

export function cssCursor(hint: string): string {
  return CURSOR_CSS[hint] ?? "default";
}
