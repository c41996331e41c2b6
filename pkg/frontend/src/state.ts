/** View state for one draft: per-field value, fillin badge, and menu echo.
 *
 * The badge mirrors server-side provenance: it is shown exactly when the
 * value arrived through a fillin event and the user has not touched the
 * field since. Every transition here is driven by a service response.
 */

import type { CommitResponse, Schema, SplitMenu } from "./api.js";

export interface FieldView {
  value: string;
  badge: boolean;
  menu: SplitMenu | null;
  menuOpen: boolean;
}

export class FormViewState {
  draftId: string | null = null;
  readonly fields = new Map<string, FieldView>();

  constructor(readonly schema: Schema) {
    this.resetFields();
  }

  private resetFields(): void {
    for (const spec of this.schema.fields) {
      this.fields.set(spec.id, { value: "", badge: false, menu: null, menuOpen: false });
    }
  }

  startDraft(draftId: string): void {
    this.draftId = draftId;
    this.resetFields();
  }

  field(fieldId: string): FieldView {
    const view = this.fields.get(fieldId);
    if (!view) throw new Error(`unknown field ${fieldId}`);
    return view;
  }

  hasMenu(fieldId: string): boolean {
    const spec = this.schema.fields.find((f) => f.id === fieldId);
    if (!spec) return false;
    return spec.adaptive_menu || spec.static_choices.length > 0 || spec.category_choices.length > 0;
  }

  /** The user is editing the field: the fillin badge clears immediately. */
  userEdit(fieldId: string, value: string): void {
    const view = this.field(fieldId);
    view.value = value;
    view.badge = false;
  }

  /** Fold a commit response in: the committed field becomes a user value,
   * fillin events populate their targets with badges, and the echoed menu
   * replaces whatever the field showed before. */
  applyCommit(fieldId: string, value: string, resp: CommitResponse): void {
    const view = this.field(fieldId);
    view.value = value;
    view.badge = false;
    view.menu = resp.menu;
    for (const event of resp.fillin_events) {
      const target = this.field(event.target);
      target.value = event.value;
      target.badge = true;
    }
  }

  badgedFields(): string[] {
    return [...this.fields.entries()].filter(([, v]) => v.badge).map(([fid]) => fid);
  }

  setMenu(fieldId: string, menu: SplitMenu): void {
    this.field(fieldId).menu = menu;
  }

  openMenu(fieldId: string): void {
    for (const [fid, view] of this.fields) {
      view.menuOpen = fid === fieldId;
    }
  }

  closeMenus(): void {
    for (const view of this.fields.values()) {
      view.menuOpen = false;
    }
  }
}
