/** Full loop against the live service: two records sharing a company entered
 * through the DOM form. Exercises fillin badges, split-menu ordering, and
 * user-override protection end to end. */

import { describe, expect, it } from "vitest";

import { CaptureApi } from "../src/api.js";
import { FormView } from "../src/form.js";
import { FormViewState } from "../src/state.js";

const BASE = `http://127.0.0.1:${process.env.CAPTURE_TEST_PORT ?? 8977}`;

function field(id: string): HTMLInputElement {
  return document.getElementById(`field-${id}`) as HTMLInputElement;
}

function badgeVisible(id: string): boolean {
  return !(document.getElementById(`badge-${id}`) as HTMLElement).hidden;
}

function typeInto(id: string, value: string): void {
  const box = field(id);
  box.value = value;
  box.dispatchEvent(new Event("input"));
  box.dispatchEvent(new Event("change"));
}

describe("browser form against the live service", () => {
  it("second record of a company arrives mostly pre-filled and user edits win", async () => {
    const api = new CaptureApi(BASE);
    const schema = await api.schema();
    expect(schema.fields).toHaveLength(17);

    document.body.innerHTML = '<div id="app"></div>';
    const view = new FormView(api, new FormViewState(schema), document);
    view.render(document.getElementById("app")!);

    // first record, typed through the form field by field
    await view.newDraft();
    const firstRecord: Array<[string, string]> = [
      ["first_name", "Ada"],
      ["last_name", "Nguyen"],
      ["title", "Engineer"],
      ["company", "Acme Systems"],
      ["address", "100 Pine St"],
      ["address2", "Suite 9"],
      ["city", "Springfield"],
      ["state", "IL"],
      ["zip_code", "62701"],
      ["email", "ada@acme.example"],
      ["phone1", "217 555 0100"],
    ];
    for (const [fid, value] of firstRecord) {
      typeInto(fid, value);
    }
    await view.idle();
    const seq = await view.finalize();
    expect(seq).toBe(1);

    // second record: committing the shared company pre-fills the rest
    await view.newDraft();
    typeInto("first_name", "Ben");
    typeInto("company", "Acme Systems");
    await view.idle();

    const badged = view.state.badgedFields();
    expect(badged.length).toBeGreaterThanOrEqual(5);
    for (const fid of ["address", "address2", "city", "state", "zip_code"]) {
      expect(badged).toContain(fid);
      expect(badgeVisible(fid)).toBe(true);
    }
    expect(field("city").value).toBe("Springfield");
    expect(field("phone1").value).toBe("217 555"); // extension dropped
    expect(field("email").value).toBe("@acme.example"); // user id dropped

    // the city menu lists the first record's city at the top
    (document.getElementById("label-city") as HTMLButtonElement).click();
    await view.idle();
    const cityItems = [...document.querySelectorAll("#menu-city li button")];
    expect(cityItems[0]?.textContent).toBe("Springfield");

    // editing a badged field clears its badge...
    typeInto("state", "MO");
    await view.idle();
    expect(badgeVisible("state")).toBe(false);
    expect(field("state").value).toBe("MO");

    // ...and the edit survives a company re-commit
    typeInto("company", "Acme Systems");
    await view.idle();
    expect(field("state").value).toBe("MO");
    expect(badgeVisible("state")).toBe(false);
    // untouched fillin fields were recopied and stay badged
    expect(badgeVisible("city")).toBe(true);
    expect(field("city").value).toBe("Springfield");
  });
});
