import init, { explore, reducts, greedy, random_matroid_text } from "./pkg/matred_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";

function run(fn, out) {
  $("status").textContent = "";
  try {
    const v = JSON.parse(fn());
    out(v);
  } catch (e) {
    $("status").textContent = String(e);
  }
}

function node(tag, attrs, text) {
  const el = document.createElementNS(SVG, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  if (text !== undefined) el.textContent = text;
  return el;
}

// Flats drawn in rows by rank, bottom to top, with cover edges.
function drawLattice(v) {
  const svg = $("lattice");
  svg.replaceChildren();
  const rows = [];
  v.flats.forEach((f, i) => (rows[f.rank] ??= []).push(i));
  const width = +svg.getAttribute("width");
  const rowH = 60;
  const height = rowH * (v.rank + 1) + 20;
  svg.setAttribute("height", height);
  const pos = [];
  rows.forEach((row, r) => {
    row.forEach((i, k) => {
      pos[i] = [((k + 1) * width) / (row.length + 1), height - 30 - r * rowH];
    });
  });
  for (const [a, b] of v.covers) {
    svg.append(node("line", { x1: pos[a][0], y1: pos[a][1], x2: pos[b][0], y2: pos[b][1], stroke: "#999" }));
  }
  v.flats.forEach((f, i) => {
    const fill = f.is_closure ? "#fd6" : f.hyperplane ? "#cdf" : "#fff";
    const label = f.set;
    const w = 8 * label.length + 10;
    svg.append(node("rect", { x: pos[i][0] - w / 2, y: pos[i][1] - 10, width: w, height: 20, rx: 4, fill, stroke: "#333" }));
    svg.append(node("text", { x: pos[i][0], y: pos[i][1] + 4, "text-anchor": "middle" }, label));
  });
}

function doExplore() {
  run(() => explore($("matroid").value, $("set").value), (v) => {
    $("explore-out").textContent =
      `rank(M) = ${v.rank}, rank(X) = ${v.set_rank}, X independent: ${v.independent}\n` +
      `cl(X) = ${v.closure}\n` +
      `intersection of hyperplanes containing X = ${v.closure_via_hyperplanes}` +
      ` (${v.containing_hyperplanes.join(" ") || "none"})\n` +
      `bases: ${v.bases.join(" ")}\n` +
      `yellow: cl(X), blue: hyperplanes`;
    drawLattice(v);
  });
}

function doReducts() {
  run(() => reducts($("matroid").value, $("rset").value), (v) => {
    const lines = Object.entries(v.routes).map(([k, f]) => `${k.padEnd(12)} ${f.join(" ") || "(none)"}`);
    $("reducts-out").textContent =
      `cl(X) = ${v.closure}\nX minus hyperplanes: ${v.differences.join(" ") || "(none)"}\n` +
      lines.join("\n") + `\nroutes agree: ${v.agree}`;
  });
}

function doGreedy() {
  run(() => greedy($("matroid").value, $("weights").value), (v) => {
    const all = v.bases.map((b) => `${b.set}: ${b.weight}`).join("\n");
    $("greedy-out").textContent =
      `greedy base ${v.base} weight ${v.weight} optimal: ${v.optimal}\n\nall bases\n${all}`;
  });
}

await init();
$("explore").onclick = doExplore;
$("reducts").onclick = doReducts;
$("greedy").onclick = doGreedy;
$("random").onclick = () => {
  $("matroid").value = random_matroid_text(+$("seed").value, +$("kind").value, +$("n").value);
  $("seed").value = +$("seed").value + 1;
  doExplore();
};
doExplore();
