/** Shapes of the JSON data bundles emitted by the generator. */

export interface Paper {
  uid: string;
  title: string;
  authors: string[];
  abstract: string;
  keywords: string[];
  session_uids: string[];
  pdf_url: string | null;
  video_url: string | null;
  image_path: string | null;
  chat_channel: string;
}

export interface ConferenceEvent {
  uid: string;
  title: string;
  kind: "keynote" | "social" | "paper-session" | "qa";
  start_utc: string; // ISO-8601, Z suffix
  end_utc: string;
  link_url: string | null;
}

export interface LayoutEntry {
  uid: string;
  x: number; // normalized to [0,1]
  y: number;
}

export interface ConfigData {
  name: string;
  default_timezone: string;
  chat_server_url: string | null;
  page_toggles: Record<string, boolean>;
}

export type Facet = "title" | "author" | "keyword" | "all";
export type DetailLevel = "list" | "compact" | "details";
