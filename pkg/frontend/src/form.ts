/** DOM form bound to the capture service.
 *
 * Fields render in schema order. Labels of fields with any menu are buttons
 * that open a split menu: recent values above a separator, fixed choices
 * below. Fillin events show as badges next to the affected inputs; editing a
 * badged field clears the badge, and the edited value re-commits with user
 * provenance so a later trigger re-commit cannot overwrite it. Commits are
 * issued strictly one at a time.
 */

import type { CaptureClient, CommitSource } from "./api.js";
import { FormViewState } from "./state.js";

interface Row {
  input: HTMLInputElement;
  badge: HTMLElement;
  label: HTMLElement;
  menuBox: HTMLElement;
}

export class FormView {
  private rows = new Map<string, Row>();
  private errorBox!: HTMLElement;
  private queue: Promise<unknown> = Promise.resolve();

  constructor(
    private api: CaptureClient,
    readonly state: FormViewState,
    private doc: Document,
  ) {}

  /** Serialize operations: each awaits the previous one's completion. */
  private enqueue<T>(op: () => Promise<T>): Promise<T> {
    const next = this.queue.then(op);
    this.queue = next.catch(() => undefined);
    return next;
  }

  /** Resolves once every queued operation has settled. */
  idle(): Promise<void> {
    return this.queue.then(() => undefined);
  }

  render(into: HTMLElement): void {
    into.textContent = "";
    const form = this.doc.createElement("form");
    form.id = "capture-form";
    form.addEventListener("submit", (e) => e.preventDefault());

    const controls = this.doc.createElement("div");
    controls.className = "controls";
    const newButton = this.doc.createElement("button");
    newButton.id = "new-draft";
    newButton.type = "button";
    newButton.textContent = "New";
    newButton.addEventListener("click", () => void this.newDraft());
    const doneButton = this.doc.createElement("button");
    doneButton.id = "finalize-draft";
    doneButton.type = "button";
    doneButton.textContent = "Done";
    doneButton.addEventListener("click", () => void this.finalize());
    controls.append(newButton, doneButton);
    form.append(controls);

    this.errorBox = this.doc.createElement("div");
    this.errorBox.id = "form-error";
    this.errorBox.hidden = true;
    form.append(this.errorBox);

    for (const spec of this.state.schema.fields) {
      const row = this.doc.createElement("div");
      row.className = "field-row";
      row.id = `row-${spec.id}`;

      const label = this.doc.createElement(this.state.hasMenu(spec.id) ? "button" : "span");
      label.id = `label-${spec.id}`;
      label.textContent = spec.label;
      if (label instanceof HTMLButtonElement) {
        label.type = "button";
        label.className = "field-label tappable";
        label.addEventListener("click", () => void this.openMenu(spec.id));
      } else {
        label.className = "field-label";
      }

      const input = this.doc.createElement("input");
      input.id = `field-${spec.id}`;
      input.name = spec.id;
      input.type = "text";
      input.addEventListener("input", () => {
        this.state.userEdit(spec.id, input.value);
        this.syncRow(spec.id);
      });
      input.addEventListener("change", () => {
        void this.commitField(spec.id, input.value);
      });

      const badge = this.doc.createElement("span");
      badge.id = `badge-${spec.id}`;
      badge.className = "fillin-badge";
      badge.textContent = "auto";
      badge.hidden = true;

      const menuBox = this.doc.createElement("div");
      menuBox.id = `menu-${spec.id}`;
      menuBox.className = "split-menu";
      menuBox.hidden = true;

      row.append(label, input, badge, menuBox);
      form.append(row);
      this.rows.set(spec.id, { input, badge, label, menuBox });
    }

    into.append(form);
  }

  async newDraft(): Promise<string> {
    return this.enqueue(async () => {
      const draftId = await this.api.createDraft();
      this.state.startDraft(draftId);
      this.clearError();
      this.syncAll();
      return draftId;
    });
  }

  async commitField(fieldId: string, value: string, source: CommitSource = "typed"): Promise<void> {
    return this.enqueue(async () => {
      const draftId = this.state.draftId;
      if (!draftId) return;
      try {
        const resp = await this.api.commitField(draftId, fieldId, value, source);
        this.state.applyCommit(fieldId, value, resp);
        this.clearError();
      } catch (err) {
        // surface the failure inline and keep the value for retry
        this.state.userEdit(fieldId, value);
        this.showError(err);
      }
      this.syncAll();
    });
  }

  async finalize(): Promise<number | null> {
    return this.enqueue(async () => {
      const draftId = this.state.draftId;
      if (!draftId) return null;
      try {
        const seq = await this.api.finalizeDraft(draftId);
        this.state.draftId = null;
        this.clearError();
        return seq;
      } catch (err) {
        this.showError(err);
        return null;
      }
    });
  }

  async openMenu(fieldId: string): Promise<void> {
    return this.enqueue(async () => {
      try {
        const menu = await this.api.fieldMenu(fieldId);
        this.state.setMenu(fieldId, menu);
        this.state.openMenu(fieldId);
        this.clearError();
      } catch (err) {
        this.showError(err);
      }
      this.syncAll();
    });
  }

  chooseFromMenu(fieldId: string, value: string): Promise<void> {
    this.state.closeMenus();
    return this.commitField(fieldId, value, "menu");
  }

  // -- DOM sync ---------------------------------------------------------------

  private syncAll(): void {
    for (const fid of this.rows.keys()) this.syncRow(fid);
  }

  private syncRow(fieldId: string): void {
    const row = this.rows.get(fieldId);
    if (!row) return;
    const view = this.state.field(fieldId);
    if (row.input.value !== view.value) row.input.value = view.value;
    row.badge.hidden = !view.badge;
    row.menuBox.hidden = !view.menuOpen;
    if (view.menuOpen) this.renderMenu(fieldId, row);
  }

  private renderMenu(fieldId: string, row: Row): void {
    row.menuBox.textContent = "";
    const menu = this.state.field(fieldId).menu;
    if (!menu) return;
    const list = this.doc.createElement("ul");
    const addItem = (value: string, cls: string) => {
      const item = this.doc.createElement("li");
      item.className = cls;
      const button = this.doc.createElement("button");
      button.type = "button";
      button.textContent = value;
      button.addEventListener("click", () => void this.chooseFromMenu(fieldId, value));
      item.append(button);
      list.append(item);
    };
    for (const value of menu.recent) addItem(value, "recent-item");
    if (menu.recent.length > 0 && menu.fixed.length > 0) {
      const sep = this.doc.createElement("li");
      sep.className = "menu-separator";
      list.append(sep);
    }
    for (const value of menu.fixed) addItem(value, "fixed-item");
    row.menuBox.append(list);
  }

  private showError(err: unknown): void {
    this.errorBox.hidden = false;
    this.errorBox.textContent = err instanceof Error ? err.message : String(err);
  }

  private clearError(): void {
    this.errorBox.hidden = true;
    this.errorBox.textContent = "";
  }
}
