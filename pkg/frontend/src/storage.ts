/** Client-local persistence: visited papers and the timezone override. */

const VISITED_KEY = "visited";
const TZ_KEY = "tz_override";

export function loadVisited(storage: Storage): Set<string> {
  try {
    const raw = storage.getItem(VISITED_KEY);
    const parsed = raw === null ? [] : JSON.parse(raw);
    return new Set(Array.isArray(parsed) ? parsed : []);
  } catch {
    return new Set();
  }
}

export function saveVisited(storage: Storage, visited: Set<string>): void {
  storage.setItem(VISITED_KEY, JSON.stringify([...visited].sort()));
}

export function markVisited(storage: Storage, uid: string): Set<string> {
  const visited = loadVisited(storage);
  visited.add(uid);
  saveVisited(storage, visited);
  return visited;
}

export function unmarkVisited(storage: Storage, uid: string): Set<string> {
  const visited = loadVisited(storage);
  visited.delete(uid);
  saveVisited(storage, visited);
  return visited;
}

export function loadTzOverride(storage: Storage): string | null {
  return storage.getItem(TZ_KEY);
}

export function saveTzOverride(storage: Storage, zone: string | null): void {
  if (zone === null || zone === "") {
    storage.removeItem(TZ_KEY);
  } else {
    storage.setItem(TZ_KEY, zone);
  }
}
