import init, { apery, scan, fit } from "./pkg/apery_wasm.js";

const $ = (id) => document.getElementById(id);

function fillTable(table, header, rows) {
  table.replaceChildren();
  const head = table.insertRow();
  for (const h of header) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  for (const row of rows) {
    const tr = table.insertRow();
    for (const cell of row) {
      const td = tr.insertCell();
      td.textContent = cell ?? "";
      if (cell === "fast" || cell === "classic") td.className = cell;
    }
  }
}

function guarded(handler) {
  return (event) => {
    event.preventDefault();
    $("error").textContent = "";
    try {
      handler();
    } catch (err) {
      $("error").textContent = err.message ?? String(err);
    }
  };
}

function showApery() {
  const out = JSON.parse(apery($("apery-gens").value));
  const r = out.report;
  const pf = r.pseudo_frobenius ? `{${r.pseudo_frobenius.join(", ")}}` : "n/a";
  $("apery-summary").textContent =
    `Ap(M; ${out.base}) by the ${out.path} path. F = ${r.frobenius}, g = ${r.genus}, ` +
    `PF = ${pf}, t = ${r.type ?? "n/a"}, W = ${r.wilf ?? "n/a"}`;
  const step = r.gcd;
  fillTable($("apery-elements"), ["residue", "element"],
    out.elements.map((a, j) => [(j * step) % out.base, a]));
}

function showScan() {
  const rows = JSON.parse(scan($("scan-base").value, BigInt($("scan-from").value), BigInt($("scan-to").value)));
  fillTable($("scan-rows"), ["n", "path", "F", "g", "t", "W"],
    rows.map((r) => [r.n, r.path, r.frobenius, r.genus, r.type, r.wilf]));
}

function showFit() {
  const out = JSON.parse(fit($("fit-base").value, $("fit-invariant").value));
  $("fit-summary").textContent =
    `Period ${out.period}, degree ${out.degree}, valid from n = ${out.valid_from}. ` +
    `Held-out check: ${out.exact ? "exact" : "mismatch"} on ${out.checked} shifts.`;
  const powers = Array.from({ length: out.degree + 1 }, (_, i) => `n^${out.degree - i}`);
  fillTable($("fit-classes"), ["n mod period", ...powers],
    out.classes.map((c) => [c.residue, ...c.coefficients]));
}

await init();
$("apery-form").addEventListener("submit", guarded(showApery));
$("scan-form").addEventListener("submit", guarded(showScan));
$("fit-form").addEventListener("submit", guarded(showFit));
guarded(showApery)(new Event("submit"));
