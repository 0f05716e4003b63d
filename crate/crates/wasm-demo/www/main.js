import init, { two_row_product, hook_product, generating_function } from "./pkg/kron_wasm.js";

const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

function el(tag, attrs = {}, ns = null) {
  const node = ns ? document.createElementNS(ns, tag) : document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

// English-convention Young diagram; cell size shrinks for large shapes.
function youngDiagram(parts) {
  const rows = parts.length || 1;
  const cols = parts[0] || 1;
  const cell = Math.max(5, Math.min(14, Math.floor(90 / Math.max(rows, cols))));
  const svg = el("svg", { width: cols * cell + 2, height: rows * cell + 2 }, SVG);
  parts.forEach((len, i) => {
    for (let j = 0; j < len; j++) {
      svg.appendChild(el("rect", {
        x: j * cell + 1, y: i * cell + 1, width: cell, height: cell,
        fill: "#fff", stroke: "#333", "stroke-width": 1,
      }, SVG));
    }
  });
  return svg;
}

function showError(target, err) {
  target.replaceChildren();
  const p = el("p", { class: "error" });
  p.textContent = String(err.message ?? err);
  target.appendChild(p);
}

function renderProduct() {
  const d = Number($("d").value);
  const k = Number($("k").value);
  const kind = $("kind").value;
  const summary = $("product-summary");
  const terms = $("terms");
  let data;
  try {
    data = JSON.parse(kind === "hook" ? hook_product(d, k) : two_row_product(d, k));
  } catch (err) {
    summary.textContent = "";
    showError(terms, err);
    return;
  }
  const total = data.terms.reduce((s, t) => s + BigInt(t.coeff), 0n);
  summary.textContent =
    `s[${data.mu}] ∗ s[${data.nu}]: ${data.terms.length} shapes, ` +
    `coefficient sum ${total}, largest coefficient ${data.max_coeff}`;
  terms.replaceChildren(...data.terms.map((t) => {
    const box = el("div", { class: `term c${Math.min(Number(t.coeff), 3)}` });
    const label = el("div");
    label.innerHTML = `<span class="coeff">${t.coeff}</span> × [${t.lambda}]`;
    box.append(youngDiagram(t.lambda), label);
    return box;
  }));
}

function renderSeries() {
  const k = Number($("gf-k").value);
  const r = Number($("gf-r").value);
  const order = Number($("gf-order").value);
  const chart = $("series-chart");
  let data;
  try {
    data = JSON.parse(generating_function(k, r, order));
  } catch (err) {
    showError($("gf-rational"), err);
    chart.replaceChildren();
    return;
  }
  $("gf-rational").textContent = `${data.rational}  =  ${data.series.join(", ")}, …`;
  const values = data.series.map(Number);
  const width = Number(chart.getAttribute("width"));
  const height = Number(chart.getAttribute("height"));
  const pad = 24;
  const max = Math.max(1, ...values);
  const bar = (width - 2 * pad) / values.length;
  chart.replaceChildren();
  values.forEach((v, i) => {
    const h = ((height - 2 * pad) * v) / max;
    const rect = el("rect", {
      x: pad + i * bar + 1, y: height - pad - h, width: Math.max(1, bar - 2), height: h, fill: "#4a78b5",
    }, SVG);
    const title = el("title", {}, SVG);
    title.textContent = `q^${i}: ${data.series[i]}`;
    rect.appendChild(title);
    chart.appendChild(rect);
    if (i % Math.ceil(values.length / 12) === 0) {
      const tick = el("text", { x: pad + i * bar + bar / 2, y: height - 6, "font-size": 11, "text-anchor": "middle" }, SVG);
      tick.textContent = i;
      chart.appendChild(tick);
    }
  });
  const top = el("text", { x: 2, y: pad - 6, "font-size": 11 }, SVG);
  top.textContent = `max ${data.series.reduce((a, b) => (BigInt(a) > BigInt(b) ? a : b), "0")}`;
  chart.appendChild(top);
}

await init();
for (const id of ["kind", "d", "k"]) $(id).addEventListener("input", renderProduct);
for (const id of ["gf-k", "gf-r", "gf-order"]) $(id).addEventListener("input", renderSeries);
renderProduct();
renderSeries();
