import type { ConferenceEvent } from "./types";

export interface LocalizedEvent {
  event: ConferenceEvent;
  dayKey: string; // local YYYY-MM-DD
  localStart: string; // local HH:MM
  localEnd: string;
  startMs: number;
}

export interface DayGroup {
  day: string;
  events: LocalizedEvent[];
}

function formatter(zone: string): Intl.DateTimeFormat {
  // en-CA yields YYYY-MM-DD ordering of date parts
  return new Intl.DateTimeFormat("en-CA", {
    timeZone: zone,
    year: "numeric",
    month: "2-digit",
    day: "2-digit",
    hour: "2-digit",
    minute: "2-digit",
    hourCycle: "h23",
  });
}

function localParts(fmt: Intl.DateTimeFormat, ms: number) {
  const parts: Record<string, string> = {};
  for (const { type, value } of fmt.formatToParts(ms)) {
    parts[type] = value;
  }
  return {
    day: `${parts.year}-${parts.month}-${parts.day}`,
    time: `${parts.hour}:${parts.minute}`,
  };
}

/**
 * Group events into local calendar days: days ascending, events within a
 * day by absolute start time with ties broken by uid. Matches the
 * generator's schedule grouping on shared fixtures.
 */
export function groupByDay(
  events: ConferenceEvent[],
  zone: string,
): DayGroup[] {
  const fmt = formatter(zone);
  const localized: LocalizedEvent[] = events.map((event) => {
    const startMs = Date.parse(event.start_utc);
    const endMs = Date.parse(event.end_utc);
    const start = localParts(fmt, startMs);
    const end = localParts(fmt, endMs);
    return {
      event,
      dayKey: start.day,
      localStart: start.time,
      localEnd: end.time,
      startMs,
    };
  });
  localized.sort((a, b) => {
    if (a.dayKey !== b.dayKey) return a.dayKey < b.dayKey ? -1 : 1;
    if (a.startMs !== b.startMs) return a.startMs - b.startMs;
    return a.event.uid < b.event.uid ? -1 : a.event.uid > b.event.uid ? 1 : 0;
  });
  const groups: DayGroup[] = [];
  for (const le of localized) {
    const last = groups[groups.length - 1];
    if (last === undefined || last.day !== le.dayKey) {
      groups.push({ day: le.dayKey, events: [le] });
    } else {
      last.events.push(le);
    }
  }
  return groups;
}

/** The zone to display: stored override if any, else the browser zone. */
export function effectiveZone(override: string | null): string {
  if (override !== null && override !== "") {
    return override;
  }
  return Intl.DateTimeFormat().resolvedOptions().timeZone;
}
