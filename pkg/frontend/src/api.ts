/** Typed client for the capture service. All form behavior flows through
 * these endpoints; the UI never computes menus or fillin locally. */

export interface FieldSpec {
  id: string;
  label: string;
  kind: string;
  static_choices: string[];
  adaptive_menu: boolean;
  menu_capacity: number;
  category_choices: string[];
}

export interface Schema {
  fields: FieldSpec[];
}

export interface SplitMenu {
  recent: string[];
  fixed: string[];
}

export interface FillinEvent {
  target: string;
  value: string;
  source_seq: number;
}

export interface CommitResponse {
  fillin_events: FillinEvent[];
  menu: SplitMenu | null;
}

export type CommitSource = "typed" | "written" | "menu";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface CaptureClient {
  schema(): Promise<Schema>;
  createDraft(): Promise<string>;
  commitField(
    draftId: string,
    fieldId: string,
    value: string,
    source?: CommitSource,
  ): Promise<CommitResponse>;
  finalizeDraft(draftId: string): Promise<number>;
  fieldMenu(fieldId: string): Promise<SplitMenu>;
}

export class CaptureApi implements CaptureClient {
  constructor(private baseUrl: string = "") {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data = (await resp.json()) as T & { error?: string };
    if (!resp.ok) {
      throw new ApiError(resp.status, data.error ?? `HTTP ${resp.status}`);
    }
    return data;
  }

  schema(): Promise<Schema> {
    return this.request<Schema>("GET", "/schema");
  }

  async createDraft(): Promise<string> {
    const body = await this.request<{ draft_id: string }>("POST", "/drafts", {});
    return body.draft_id;
  }

  commitField(
    draftId: string,
    fieldId: string,
    value: string,
    source: CommitSource = "typed",
  ): Promise<CommitResponse> {
    return this.request<CommitResponse>(
      "POST",
      `/drafts/${draftId}/fields/${fieldId}`,
      { value, source },
    );
  }

  async finalizeDraft(draftId: string): Promise<number> {
    const body = await this.request<{ seq: number }>("POST", `/drafts/${draftId}/finalize`, {});
    return body.seq;
  }

  fieldMenu(fieldId: string): Promise<SplitMenu> {
    return this.request<SplitMenu>("GET", `/fields/${fieldId}/menu`);
  }
}
