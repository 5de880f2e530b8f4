import { ApiClient, fetchTransport } from "./client.js";
import { bannerHtml, tableHtml } from "./render.js";
import { ViewModel } from "./viewmodel.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

function download(name: string, mime: string, content: string): void {
  const url = URL.createObjectURL(new Blob([content], { type: mime }));
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

function isTyping(target: EventTarget | null): boolean {
  return (
    target instanceof HTMLTextAreaElement ||
    target instanceof HTMLInputElement ||
    (target instanceof HTMLElement && target.isContentEditable)
  );
}

function main(): void {
  const baseUrl = byId<HTMLInputElement>("base-url");
  const oldText = byId<HTMLTextAreaElement>("old-text");
  const newText = byId<HTMLTextAreaElement>("new-text");
  const compare = byId<HTMLButtonElement>("compare");
  const undoBtn = byId<HTMLButtonElement>("undo");
  const redoBtn = byId<HTMLButtonElement>("redo");
  const exportPatch = byId<HTMLButtonElement>("export-patch");
  const exportActions = byId<HTMLButtonElement>("export-actions");
  const banner = byId<HTMLDivElement>("banner");
  const table = byId<HTMLDivElement>("table");
  const status = byId<HTMLSpanElement>("status");

  let vm = new ViewModel(new ApiClient(fetchTransport(baseUrl.value)));

  const render = (): void => {
    banner.innerHTML = bannerHtml(vm.banner);
    table.innerHTML = vm.state ? tableHtml(vm.rows()) : "";
    status.textContent = vm.busy ? "working..." : vm.state ? `revision ${vm.state.revision}` : "";
    const s = vm.state;
    undoBtn.disabled = vm.busy || !s || !s.can_undo;
    redoBtn.disabled = vm.busy || !s || !s.can_redo;
    exportPatch.disabled = !s;
    exportActions.disabled = !s;
    compare.disabled = vm.busy;
  };
  vm.onChange = render;

  compare.addEventListener("click", () => {
    // a new base URL means a new backend; rebuild the client for it
    vm = new ViewModel(new ApiClient(fetchTransport(baseUrl.value)));
    vm.onChange = render;
    void vm.load(oldText.value, newText.value);
  });

  table.addEventListener("click", (ev) => {
    const tr = (ev.target as HTMLElement).closest("tr[data-row]");
    if (!tr) return;
    void vm.clickRow(Number(tr.getAttribute("data-row")));
  });

  undoBtn.addEventListener("click", () => void vm.undo());
  redoBtn.addEventListener("click", () => void vm.redo());

  exportPatch.addEventListener("click", async () => {
    try {
      download("session.patch", "text/x-diff", await vm.exportUnified());
    } catch (err) {
      banner.innerHTML = bannerHtml(String(err));
    }
  });
  exportActions.addEventListener("click", async () => {
    try {
      download("actions.json", "application/json", await vm.exportActions());
    } catch (err) {
      banner.innerHTML = bannerHtml(String(err));
    }
  });

  document.addEventListener("keydown", (ev) => {
    if (isTyping(ev.target) || ev.ctrlKey || ev.metaKey || ev.altKey) return;
    if (ev.key === "u") void vm.undo();
    if (ev.key === "r") void vm.redo();
  });

  render();
}

main();
