import { effectiveZone, groupByDay } from "./calendar";
import { loadTzOverride, saveTzOverride } from "./storage";
import type { ConferenceEvent } from "./types";

const script = document.currentScript as HTMLScriptElement | null;

const COMMON_ZONES = [
  "UTC",
  "America/Los_Angeles",
  "America/New_York",
  "America/Sao_Paulo",
  "Europe/London",
  "Europe/Berlin",
  "Africa/Nairobi",
  "Asia/Kolkata",
  "Asia/Tokyo",
  "Australia/Sydney",
];

function renderCalendar(
  container: HTMLElement,
  events: ConferenceEvent[],
  zone: string,
  root: string,
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  const groups = groupByDay(events, zone);
  if (groups.length === 0) {
    const empty = doc.createElement("p");
    empty.className = "empty-state";
    empty.textContent = container.dataset.emptyMessage ?? "No events scheduled.";
    container.appendChild(empty);
    return;
  }
  for (const group of groups) {
    const section = doc.createElement("section");
    section.className = "day";
    const heading = doc.createElement("h2");
    heading.textContent = group.day;
    section.appendChild(heading);
    const list = doc.createElement("ul");
    for (const le of group.events) {
      const item = doc.createElement("li");
      item.className = `event kind-${le.event.kind}`;
      const time = doc.createElement("span");
      time.className = "time";
      time.textContent = `${le.localStart}–${le.localEnd}`;
      item.appendChild(time);
      const link = doc.createElement("a");
      link.href =
        le.event.kind === "paper-session"
          ? `${root}papers.html#session-${le.event.uid}`
          : `${root}events/${le.event.uid}.html`;
      link.textContent = le.event.title;
      item.appendChild(link);
      const kind = doc.createElement("span");
      kind.className = "kind";
      kind.textContent = le.event.kind;
      item.appendChild(kind);
      list.appendChild(item);
    }
    section.appendChild(list);
    container.appendChild(section);
  }
}

async function main(): Promise<void> {
  const root = script?.dataset.root ?? "";
  const container = document.getElementById("calendar");
  const select = document.getElementById("tz-select") as HTMLSelectElement | null;
  const label = document.getElementById("tz-label");
  if (container === null) {
    return;
  }
  const resp = await fetch(`${root}data/events.json`);
  const events = (await resp.json()) as ConferenceEvent[];

  const apply = (override: string | null) => {
    const zone = effectiveZone(override);
    renderCalendar(container, events, zone, root);
    if (label !== null) {
      label.textContent = zone;
    }
  };

  if (select !== null) {
    for (const zone of COMMON_ZONES) {
      const option = document.createElement("option");
      option.value = zone;
      option.textContent = zone;
      select.appendChild(option);
    }
    const stored = loadTzOverride(window.localStorage);
    if (stored !== null) {
      select.value = stored;
    }
    select.addEventListener("change", () => {
      saveTzOverride(window.localStorage, select.value || null);
      apply(select.value || null);
    });
  }

  apply(loadTzOverride(window.localStorage));
}

main().catch((err) => console.error("calendar init failed:", err));
