/** DOM behavior with a scripted client: rendering, badges, menus, errors.
 * Responses are canned; nothing here recomputes engine logic. */

import { beforeEach, describe, expect, it } from "vitest";

import {
  ApiError,
  type CaptureClient,
  type CommitResponse,
  type Schema,
  type SplitMenu,
} from "../src/api.js";
import { FormView } from "../src/form.js";
import { FormViewState } from "../src/state.js";

const SCHEMA: Schema = {
  fields: [
    {
      id: "company",
      label: "Company",
      kind: "text",
      static_choices: [],
      adaptive_menu: true,
      menu_capacity: 4,
      category_choices: [],
    },
    {
      id: "first_name",
      label: "First Name",
      kind: "text",
      static_choices: [],
      adaptive_menu: false,
      menu_capacity: 4,
      category_choices: [],
    },
    {
      id: "city",
      label: "City",
      kind: "text",
      static_choices: [],
      adaptive_menu: true,
      menu_capacity: 4,
      category_choices: [],
    },
  ],
};

class ScriptedClient implements CaptureClient {
  drafts = 0;
  commits: Array<{ draftId: string; fieldId: string; value: string; source: string }> = [];
  commitScript = new Map<string, CommitResponse>();
  menuScript = new Map<string, SplitMenu>();
  failNextCommit: ApiError | null = null;

  async schema(): Promise<Schema> {
    return SCHEMA;
  }

  async createDraft(): Promise<string> {
    this.drafts += 1;
    return `d${this.drafts}`;
  }

  async commitField(
    draftId: string,
    fieldId: string,
    value: string,
    source = "typed",
  ): Promise<CommitResponse> {
    if (this.failNextCommit) {
      const err = this.failNextCommit;
      this.failNextCommit = null;
      throw err;
    }
    this.commits.push({ draftId, fieldId, value, source });
    return (
      this.commitScript.get(fieldId) ?? { fillin_events: [], menu: { recent: [], fixed: [] } }
    );
  }

  async finalizeDraft(): Promise<number> {
    return 1;
  }

  async fieldMenu(fieldId: string): Promise<SplitMenu> {
    const menu = this.menuScript.get(fieldId);
    if (!menu) throw new ApiError(404, "no menu");
    return menu;
  }
}

function input(id: string): HTMLInputElement {
  return document.getElementById(`field-${id}`) as HTMLInputElement;
}

describe("FormView", () => {
  let client: ScriptedClient;
  let view: FormView;

  beforeEach(async () => {
    document.body.innerHTML = '<div id="app"></div>';
    client = new ScriptedClient();
    view = new FormView(client, new FormViewState(SCHEMA), document);
    view.render(document.getElementById("app")!);
    await view.newDraft();
  });

  it("renders fields in schema order with inputs and controls", () => {
    const rows = [...document.querySelectorAll(".field-row")].map((r) => r.id);
    expect(rows).toEqual(["row-company", "row-first_name", "row-city"]);
    expect(document.getElementById("new-draft")).toBeTruthy();
    expect(document.getElementById("finalize-draft")).toBeTruthy();
  });

  it("menu fields get tappable labels, plain fields do not", () => {
    expect(document.getElementById("label-company")?.tagName).toBe("BUTTON");
    expect(document.getElementById("label-first_name")?.tagName).toBe("SPAN");
  });

  it("commit applies fillin events as badged values", async () => {
    client.commitScript.set("company", {
      fillin_events: [{ target: "city", value: "Springfield", source_seq: 3 }],
      menu: { recent: [], fixed: [] },
    });
    await view.commitField("company", "Acme");
    expect(input("city").value).toBe("Springfield");
    expect(document.getElementById("badge-city")?.hidden).toBe(false);
    expect(document.getElementById("badge-company")?.hidden).toBe(true);
  });

  it("change events drive commits through the client", async () => {
    const box = input("company");
    box.value = "Acme";
    box.dispatchEvent(new Event("change"));
    await view.idle();
    expect(client.commits).toEqual([
      { draftId: "d1", fieldId: "company", value: "Acme", source: "typed" },
    ]);
  });

  it("editing a badged field clears the badge before the commit", async () => {
    client.commitScript.set("company", {
      fillin_events: [{ target: "city", value: "Springfield", source_seq: 3 }],
      menu: { recent: [], fixed: [] },
    });
    await view.commitField("company", "Acme");
    const city = input("city");
    city.value = "Shelbyville";
    city.dispatchEvent(new Event("input"));
    expect(document.getElementById("badge-city")?.hidden).toBe(true);
  });

  it("menu opens with recent above a separator and fixed below", async () => {
    client.menuScript.set("city", { recent: ["Springfield"], fixed: ["Portland", "Salem"] });
    await view.openMenu("city");
    const items = [...document.querySelectorAll("#menu-city li")];
    expect(items.map((li) => li.className)).toEqual([
      "recent-item",
      "menu-separator",
      "fixed-item",
      "fixed-item",
    ]);
    expect(items[0]?.textContent).toBe("Springfield");
  });

  it("choosing from the menu commits with menu provenance", async () => {
    client.menuScript.set("city", { recent: ["Springfield"], fixed: [] });
    await view.openMenu("city");
    const button = document.querySelector("#menu-city .recent-item button") as HTMLButtonElement;
    button.click();
    await view.idle();
    expect(client.commits.at(-1)).toEqual({
      draftId: "d1",
      fieldId: "city",
      value: "Springfield",
      source: "menu",
    });
    expect(input("city").value).toBe("Springfield");
  });

  it("http errors surface inline and keep the value for retry", async () => {
    client.failNextCommit = new ApiError(409, "draft 'd1' already finalized");
    await view.commitField("company", "Acme");
    const errorBox = document.getElementById("form-error")!;
    expect(errorBox.hidden).toBe(false);
    expect(errorBox.textContent).toContain("already finalized");
    expect(input("company").value).toBe("Acme");
    await view.commitField("company", "Acme");
    expect(errorBox.hidden).toBe(true);
  });

  it("new draft resets inputs and badges", async () => {
    client.commitScript.set("company", {
      fillin_events: [{ target: "city", value: "Springfield", source_seq: 3 }],
      menu: { recent: [], fixed: [] },
    });
    await view.commitField("company", "Acme");
    await view.newDraft();
    expect(input("company").value).toBe("");
    expect(input("city").value).toBe("");
    expect(document.getElementById("badge-city")?.hidden).toBe(true);
  });
});
