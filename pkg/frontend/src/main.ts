import { ApiClient } from "./api";
import { App } from "./app";
import "./styles.css";

const root = document.querySelector<HTMLElement>("#app");
if (!root) throw new Error("missing #app mount point");

const app = new App(root, new ApiClient());
void app.init();
