import { readFileSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import type { ConferenceEvent, ConfigData, LayoutEntry, Paper } from "../src/types";

const here = path.dirname(fileURLToPath(import.meta.url));

export function loadFixture<T>(name: string): T {
  const file = path.join(here, "fixtures", name);
  return JSON.parse(readFileSync(file, "utf-8")) as T;
}

export const papers = () => loadFixture<Paper[]>("site/papers.json");
export const events = () => loadFixture<ConferenceEvent[]>("site/events.json");
export const layout = () => loadFixture<LayoutEntry[]>("site/layout.json");
export const config = () => loadFixture<ConfigData>("site/config.json");
