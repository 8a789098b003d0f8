// Thin glue between the form controls and the wasm exports. Build the
// wasm bundle into ./pkg first (see the repository README).
import init, {
  variety_json,
  classify_json,
  plane_svg_marked,
  deltamin_json,
} from "./pkg/cicrit_wasm.js";

const el = (id) => document.getElementById(id);
const inputs = ["type", "rank", "node", "d", "n", "dmax"].map(el);

function tableValue(v) {
  if (v === null || v === undefined) return "unavailable";
  return (v.lower_bound ? ">= " : "") + v.value;
}

function renderInvariants(inv) {
  el("invariants").innerHTML = `
    <table>
      <tr><th>dim</th><td>${inv.dim}</td><th>index</th><td>${inv.index}</td></tr>
      <tr><th>m</th><td>${inv.m}</td><th>p</th><td>${tableValue(inv.p)}</td></tr>
      <tr><th>sp</th><td>${tableValue(inv.sp)}</td>
          <th>Pic iso</th><td>${inv.picard_iso}</td></tr>
    </table>`;
}

function renderVerdict(res) {
  const v = el("verdict");
  const audit = el("audit");
  audit.innerHTML = "";
  if (res.verdict.kind === "CompleteIntersection") {
    v.className = "ci";
    v.textContent = `Complete intersection (criterion ${res.verdict.criterion})`;
  } else if (res.verdict.kind === "ExcludedNoSuchSubvariety") {
    v.className = "excluded";
    v.textContent = `No such subvariety exists (${res.verdict.reason})`;
  } else {
    v.className = "unknown";
    v.textContent = `Unknown (region ${res.region}, delta = ${res.delta})`;
  }
  for (const a of res.applied) {
    const li = document.createElement("li");
    li.textContent = `${a.satisfied ? "[x]" : "[ ]"} ${a.id}: ${a.inputs}`;
    audit.appendChild(li);
  }
}

function refresh() {
  const [type, rank, node, d, n, dmax] = inputs.map((i) => i.value);
  try {
    renderInvariants(JSON.parse(variety_json(type, Number(rank), Number(node))));
  } catch (e) {
    el("invariants").innerHTML = `<p><code>${e.message ?? e}</code></p>`;
  }
  try {
    const res = JSON.parse(
      classify_json(type, Number(rank), Number(node), BigInt(d), BigInt(n))
    );
    renderVerdict(res);
  } catch (e) {
    const v = el("verdict");
    v.className = "err";
    v.textContent = String(e.message ?? e);
    el("audit").innerHTML = "";
  }
  try {
    el("plane").innerHTML = plane_svg_marked(
      type, Number(rank), Number(node), BigInt(d), BigInt(n), BigInt(dmax)
    );
  } catch (e) {
    el("plane").innerHTML = `<p><code>${e.message ?? e}</code></p>`;
  }
}

function runDeltamin() {
  try {
    const table = JSON.parse(deltamin_json(Number(el("pmax").value)));
    el("deltamin-out").innerHTML =
      "<tr><th>p</th><th>delta_min</th><th>c1</th><th>d</th></tr>" +
      table.rows
        .map((r) => `<tr><td>${r.p}</td><td>${r.delta}</td><td>${r.c1}</td><td>${r.d}</td></tr>`)
        .join("");
  } catch (e) {
    el("deltamin-out").innerHTML = `<tr><td><code>${e.message ?? e}</code></td></tr>`;
  }
}

await init();
for (const input of inputs) input.addEventListener("input", refresh);
el("deltamin-run").addEventListener("click", runDeltamin);
refresh();
