"use strict";
(() => {
  // src/calendar.ts
  function formatter(zone) {
    return new Intl.DateTimeFormat("en-CA", {
      timeZone: zone,
      year: "numeric",
      month: "2-digit",
      day: "2-digit",
      hour: "2-digit",
      minute: "2-digit",
      hourCycle: "h23"
    });
  }
  function localParts(fmt, ms) {
    const parts = {};
    for (const { type, value } of fmt.formatToParts(ms)) {
      parts[type] = value;
    }
    return {
      day: `${parts.year}-${parts.month}-${parts.day}`,
      time: `${parts.hour}:${parts.minute}`
    };
  }
  function groupByDay(events, zone) {
    const fmt = formatter(zone);
    const localized = events.map((event) => {
      const startMs = Date.parse(event.start_utc);
      const endMs = Date.parse(event.end_utc);
      const start = localParts(fmt, startMs);
      const end = localParts(fmt, endMs);
      return {
        event,
        dayKey: start.day,
        localStart: start.time,
        localEnd: end.time,
        startMs
      };
    });
    localized.sort((a, b) => {
      if (a.dayKey !== b.dayKey) return a.dayKey < b.dayKey ? -1 : 1;
      if (a.startMs !== b.startMs) return a.startMs - b.startMs;
      return a.event.uid < b.event.uid ? -1 : a.event.uid > b.event.uid ? 1 : 0;
    });
    const groups = [];
    for (const le of localized) {
      const last = groups[groups.length - 1];
      if (last === void 0 || last.day !== le.dayKey) {
        groups.push({ day: le.dayKey, events: [le] });
      } else {
        last.events.push(le);
      }
    }
    return groups;
  }
  function effectiveZone(override) {
    if (override !== null && override !== "") {
      return override;
    }
    return Intl.DateTimeFormat().resolvedOptions().timeZone;
  }

  // src/storage.ts
  var TZ_KEY = "tz_override";
  function loadTzOverride(storage) {
    return storage.getItem(TZ_KEY);
  }
  function saveTzOverride(storage, zone) {
    if (zone === null || zone === "") {
      storage.removeItem(TZ_KEY);
    } else {
      storage.setItem(TZ_KEY, zone);
    }
  }

  // src/calendar_main.ts
  var script = document.currentScript;
  var COMMON_ZONES = [
    "UTC",
    "America/Los_Angeles",
    "America/New_York",
    "America/Sao_Paulo",
    "Europe/London",
    "Europe/Berlin",
    "Africa/Nairobi",
    "Asia/Kolkata",
    "Asia/Tokyo",
    "Australia/Sydney"
  ];
  function renderCalendar(container, events, zone, root) {
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
        time.textContent = `${le.localStart}\u2013${le.localEnd}`;
        item.appendChild(time);
        const link = doc.createElement("a");
        link.href = le.event.kind === "paper-session" ? `${root}papers.html#session-${le.event.uid}` : `${root}events/${le.event.uid}.html`;
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
  async function main() {
    const root = script?.dataset.root ?? "";
    const container = document.getElementById("calendar");
    const select = document.getElementById("tz-select");
    const label = document.getElementById("tz-label");
    if (container === null) {
      return;
    }
    const resp = await fetch(`${root}data/events.json`);
    const events = await resp.json();
    const apply = (override) => {
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
})();
