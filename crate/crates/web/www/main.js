import init, { lint, tokenize, parse_method, bundles } from "./pkg/isar_lint_web.js";

const $ = (id) => document.getElementById(id);
const output = $("output");
let view = "lint";

function el(tag, attrs = {}, ...children) {
  const node = document.createElement(tag);
  Object.assign(node, attrs);
  node.append(...children);
  return node;
}

function selectedBundles() {
  return [...document.querySelectorAll("#bundles input:checked")].map((b) => b.value).join(",");
}

function renderLint() {
  const doc = JSON.parse(lint($("source").value, selectedBundles()));
  if (doc.error) return [el("p", { className: "error" }, doc.error)];
  const file = doc.files[0];
  const rows = file.lints.map((l) => {
    const row = el("div", { className: `result ${l.severity}` },
      `${l.start_line}:${l.start_col} ${l.severity}: ${l.message} [${l.name}]`);
    if (l.edit) row.append(el("div", { className: "muted" }, `  suggestion: ${l.edit.replacement}`));
    return row;
  });
  const s = doc.summary;
  const lpl = s.lines_per_lint === null ? "n/a" : s.lines_per_lint;
  return [el("p", { className: "muted" }, `${s.total} results, ${s.sloc} SLOC, lines per lint: ${lpl}`), ...rows];
}

function renderTokens() {
  return JSON.parse(tokenize($("source").value)).map((t) =>
    el("span", {
      className: `tok ${t.kind}${t.proper ? "" : " improper"}`,
      title: `${t.kind} at ${t.line}:${t.col}`,
    }, t.text));
}

function treeNode(t) {
  const mods = t.modifiers && t.modifiers.length ? ` ${t.modifiers.join("")}` : "";
  if (t.type === "placeholder") return el("li", {}, "- (placeholder)");
  if (t.type === "simple") return el("li", {}, `${t.name}${t.args ? " " + t.args : ""}${mods}`);
  return el("li", {}, `${t.combinator}${mods}`, el("ul", { className: "tree" }, treeNode(t.left), treeNode(t.right)));
}

function renderMethod() {
  const doc = JSON.parse(parse_method($("method").value));
  if (doc.error) return [el("p", { className: "error" }, doc.error)];
  return [
    el("p", {}, "normalised: ", el("code", {}, doc.display)),
    el("p", { className: "muted" }, `${doc.combinators} combinators`),
    el("ul", { className: "tree" }, treeNode(doc.tree)),
  ];
}

function refresh() {
  const render = { lint: renderLint, tokens: renderTokens, method: renderMethod }[view];
  output.replaceChildren(...render());
}

await init();
for (const b of JSON.parse(bundles())) {
  const box = el("input", { type: "checkbox", value: b.name, checked: b.name === "default" });
  box.addEventListener("change", refresh);
  const label = el("label", { title: b.lints.join(", ") }, box, ` ${b.name}${b.add_on ? " (add-on)" : ""} `);
  $("bundles").append(label);
}
for (const button of document.querySelectorAll("nav button")) {
  button.addEventListener("click", () => {
    view = button.dataset.view;
    document.querySelectorAll("nav button").forEach((b) => b.classList.toggle("active", b === button));
    refresh();
  });
}
$("source").addEventListener("input", refresh);
$("method").addEventListener("input", () => { if (view === "method") refresh(); });
refresh();
