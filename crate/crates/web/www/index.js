import init, { werner, werner_curve, molecule, analyze, preset } from "../pkg/qsep_web.js";

const $ = (id) => document.getElementById(id);
const fmt = (v) => (Math.abs(v) < 5e-13 ? 0 : v).toFixed(6);

function renderTable(el, w) {
  if (w.error) {
    el.innerHTML = `<p class="error">${w.error}</p>`;
    return;
  }
  const rows = w.rows
    .map((r) => `<tr class="${r.separable ? "" : "npt"}"><td>${r.label}</td><td>${fmt(r.min_pt)}</td><td>${r.separable ? "PPT" : "NPT"}</td></tr>`)
    .join("");
  const why = w.culprit ? ` (culprit ${w.culprit})` : " (every reduction is PPT)";
  el.innerHTML =
    `<p class="verdict">${w.conclusion}${why}</p>` +
    `<table><tr><th>reduction</th><th>min PT eigenvalue</th><th>verdict</th></tr>${rows}</table>`;
}

function plot(canvas, curve, threshold, x, value) {
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 36;
  const lo = -0.55, hi = 0.3;
  const px = (t) => pad + t * (W - 2 * pad);
  const py = (v) => H - pad - ((v - lo) / (hi - lo)) * (H - 2 * pad);
  ctx.clearRect(0, 0, W, H);
  ctx.font = "11px sans-serif";
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, py(0));
  ctx.lineTo(W - pad, py(0));
  ctx.moveTo(pad, pad / 2);
  ctx.lineTo(pad, H - pad);
  ctx.stroke();
  ctx.fillStyle = "#555";
  ctx.fillText("0", pad - 12, py(0) + 4);
  ctx.fillText("-1/2", pad - 30, py(-0.5) + 4);
  ctx.fillText("x = 0", px(0) - 10, H - pad + 16);
  ctx.fillText("1", px(1) - 3, H - pad + 16);
  ctx.fillText("min PT eigenvalue over all six reductions", pad + 8, pad / 2 + 4);
  ctx.strokeStyle = "#1f5fbf";
  ctx.lineWidth = 2;
  ctx.beginPath();
  curve.forEach(([t, v], i) => (i ? ctx.lineTo(px(t), py(v)) : ctx.moveTo(px(t), py(v))));
  ctx.stroke();
  ctx.lineWidth = 1;
  if (threshold !== null) {
    ctx.strokeStyle = "#b00";
    ctx.setLineDash([4, 4]);
    ctx.beginPath();
    ctx.moveTo(px(threshold), pad / 2);
    ctx.lineTo(px(threshold), H - pad);
    ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillStyle = "#b00";
    ctx.fillText(`threshold ${threshold.toFixed(6)}`, px(threshold) + 4, H - pad - 6);
  }
  ctx.fillStyle = "#000";
  ctx.beginPath();
  ctx.arc(px(x), py(value), 4, 0, 2 * Math.PI);
  ctx.fill();
}

let scan = null;

function updateWerner() {
  const x = parseFloat($("wx").value);
  $("wxv").textContent = x.toFixed(3);
  const r = JSON.parse(werner(x));
  if (r.error) {
    $("wtable").innerHTML = `<p class="error">${r.error}</p>`;
    return;
  }
  plot($("wplot"), scan.curve, scan.threshold, x, r.witness.min_pt);
  $("wspec").innerHTML = `PT spectrum of the A,BC reduction: <code>[${r.spectrum.map(fmt).join(", ")}]</code>`;
  renderTable($("wtable"), r.witness);
}

function updateMolecule() {
  const r = JSON.parse(molecule(+$("pab").value, +$("pac").value, +$("pbc").value));
  if (r.error) {
    $("mtable").innerHTML = `<p class="error">${r.error}</p>`;
    $("mweights").textContent = "";
    return;
  }
  $("mweights").textContent = `p_AB = ${r.weights[0].toFixed(3)}, p_AC = ${r.weights[1].toFixed(3)}, p_BC = ${r.weights[2].toFixed(3)}`;
  renderTable($("mtable"), r.witness);
}

function runAnalyze() {
  renderTable($("atable"), JSON.parse(analyze($("mat").value)));
}

await init();
scan = JSON.parse(werner_curve(201));
$("wx").addEventListener("input", updateWerner);
for (const id of ["pab", "pac", "pbc"]) $(id).addEventListener("input", updateMolecule);
$("run").addEventListener("click", runAnalyze);
for (const b of document.querySelectorAll("[data-preset]")) {
  b.addEventListener("click", () => {
    $("mat").value = JSON.stringify(JSON.parse(preset(b.dataset.preset)));
    runAnalyze();
  });
}
updateWerner();
updateMolecule();
$("mat").value = JSON.stringify(JSON.parse(preset("upb")));
runAnalyze();
