import { CaptureApi } from "./api.js";
import { FormView } from "./form.js";
import { FormViewState } from "./state.js";

declare global {
  interface Window {
    CAPTURE_API?: string;
  }
}

export async function boot(doc: Document, mountId = "app"): Promise<FormView> {
  const mount = doc.getElementById(mountId);
  if (!mount) throw new Error(`missing #${mountId} element`);
  const api = new CaptureApi(doc.defaultView?.CAPTURE_API ?? "");
  try {
    const schema = await api.schema();
    const view = new FormView(api, new FormViewState(schema), doc);
    view.render(mount);
    await view.newDraft();
    return view;
  } catch (err) {
    mount.textContent = `could not load form schema: ${
      err instanceof Error ? err.message : String(err)
    }`;
    throw err;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot(document);
}
