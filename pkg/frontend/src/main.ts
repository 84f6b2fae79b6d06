import { initApp } from "./app.js";

const root = document.getElementById("app-root");
if (root) {
  initApp(root);
}
