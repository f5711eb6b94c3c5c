/** Explorer bootstrap: mount the app and surface startup failures. */
import { ExplorerApp } from "./app.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}

const app = new ExplorerApp(root);
app.start().catch((err: unknown) => {
  const div = document.createElement("div");
  div.className = "banner visible";
  div.textContent = `failed to start: ${err instanceof Error ? err.message : String(err)}`;
  root.prepend(div);
});
