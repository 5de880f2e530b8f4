import type { ViewRow } from "./viewmodel.js";

/** HTML string assembly, kept free of DOM calls so it runs under plain
 * node tests; main.ts owns the document. */

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function gutter(num: number | null): string {
  return `<td class="gutter">${num === null ? "" : num}</td>`;
}

/** One side-by-side row: deletions fill only the left column, additions
 * only the right, context spans both with the shared text. */
export function rowHtml(row: ViewRow, index: number): string {
  const classes = [`kind-${row.kind}`];
  if (row.changed) classes.push("changed");
  const text = escapeHtml(row.text);
  let cells: string;
  if (row.kind === "del") {
    cells = `${gutter(row.old)}<td class="line del">${text}</td>${gutter(null)}<td class="line empty"></td>`;
  } else if (row.kind === "add") {
    cells = `${gutter(null)}<td class="line empty"></td>${gutter(row.new)}<td class="line add">${text}</td>`;
  } else {
    cells = `${gutter(row.old)}<td class="line ctx">${text}</td>${gutter(row.new)}<td class="line ctx">${text}</td>`;
  }
  return `<tr data-row="${index}" class="${classes.join(" ")}">${cells}</tr>`;
}

export function tableHtml(rows: ViewRow[]): string {
  const body = rows.map(rowHtml).join("\n");
  return `<table class="diff"><tbody>\n${body}\n</tbody></table>`;
}

export function bannerHtml(text: string | null): string {
  if (text === null) return "";
  return `<div class="banner">${escapeHtml(text)}</div>`;
}
