import init, { cosets, bch, gv_heatmap, enlarge } from "./pkg/eaqecc_web.js";

const $ = (id) => document.getElementById(id);
const num = (form, name) => Number(form.elements[name].value);

function show(el, fn) {
  try {
    el.classList.remove("error");
    el.textContent = fn();
  } catch (e) {
    el.classList.add("error");
    el.textContent = String(e);
  }
}

function listOf(input) {
  return input.value.split(/[\s,]+/).filter((t) => t !== "").map(Number);
}

function toggle(input, rep) {
  const set = new Set(listOf(input));
  set.has(rep) ? set.delete(rep) : set.add(rep);
  input.value = [...set].sort((a, b) => a - b).join(",");
}

// Left click toggles a coset in C1, right click in C2.
function renderCosets() {
  const f = $("bch-form");
  const box = $("cosets");
  box.textContent = "";
  let view;
  try {
    view = JSON.parse(cosets(num(f, "q"), num(f, "n")));
  } catch (e) {
    box.innerHTML = `<span class="error">${e}</span>`;
    return;
  }
  const c1 = new Set(listOf(f.elements.c1));
  const c2 = new Set(listOf(f.elements.c2));
  const caption = document.createElement("p");
  caption.textContent = `GF(${view.big_field}) evaluation points; click: C1, right click: C2`;
  box.append(caption);
  for (const coset of view.cosets) {
    const s = document.createElement("span");
    s.textContent = `{${coset.join(" ")}}`;
    if (coset.some((x) => c1.has(x))) s.classList.add("c1");
    if (coset.some((x) => c2.has(x))) s.classList.add("c2");
    s.onclick = () => { toggle(f.elements.c1, coset[0]); renderCosets(); };
    s.oncontextmenu = (e) => { e.preventDefault(); toggle(f.elements.c2, coset[0]); renderCosets(); };
    box.append(s);
  }
}

function runBch(ev) {
  ev.preventDefault();
  const f = $("bch-form");
  show($("bch-out"), () => {
    const v = JSON.parse(bch(num(f, "q"), num(f, "n"), f.elements.c1.value, f.elements.c2.value, num(f, "budget")));
    const d = (w) => (w.exact ? "" : "≥") + (w.distance.value ?? "empty") + (w.exact ? " (exact)" : " (bound)");
    return [
      v.code,
      `k1 = ${v.k1}, k2 = ${v.k2}, c = ${v.params.c}`,
      `C1 set {${v.delta1.join(" ")}}`,
      `C2 set {${v.delta2.join(" ")}}`,
      `HT bounds ${v.ht_z} / ${v.ht_x}`,
      `d(C1^⊥) ${d(v.dz_dual)}, d(C2^⊥) ${d(v.dx_dual)}`,
      `d_z ${d(v.params.dz)}, d_x ${d(v.params.dx)}`,
    ].join("\n");
  });
}

function runGv(ev) {
  ev.preventDefault();
  const f = $("gv-form");
  const canvas = $("gv-canvas");
  const ctx = canvas.getContext("2d");
  const label = $("gv-threshold");
  let v;
  try {
    v = JSON.parse(gv_heatmap(num(f, "q"), num(f, "n"), num(f, "k1"), num(f, "k2"), num(f, "c"), num(f, "max_d"), f.elements.per_term.checked));
    label.classList.remove("error");
  } catch (e) {
    label.classList.add("error");
    label.textContent = String(e);
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    return;
  }
  const m = v.sums.length;
  const cell = canvas.width / m;
  const onSet = new Set(v.threshold_set.map((p) => `${p.dz},${p.dx}`));
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.font = `${Math.max(8, Math.min(14, cell / 3))}px monospace`;
  // Rows are d_z (top to bottom), columns d_x; colour is log of the sum.
  for (let i = 0; i < m; i++) {
    for (let j = 0; j < m; j++) {
      const s = v.sums[i][j];
      const t = Math.max(-1, Math.min(1, Math.log10(s) / 4));
      const hue = s < 1 ? 210 : 10;
      ctx.fillStyle = `hsl(${hue}, 60%, ${80 - Math.abs(t) * 40}%)`;
      ctx.fillRect(j * cell, i * cell, cell, cell);
      if (onSet.has(`${i + 1},${j + 1}`)) {
        ctx.strokeStyle = "#000";
        ctx.lineWidth = 2;
        ctx.strokeRect(j * cell + 1, i * cell + 1, cell - 2, cell - 2);
      }
    }
  }
  const t = v.threshold;
  label.textContent = `threshold (d_z, d_x) = (${t.dz},${t.dx}); blue cells: GV certifies, boxed: threshold set. Rows d_z, columns d_x.`;
}

function runEnlarge(ev) {
  ev.preventDefault();
  const f = $("enl-form");
  show($("enl-out"), () => {
    const v = JSON.parse(enlarge(num(f, "q"), 1e7));
    return `without entanglement  ${v.before}\nwith entanglement     ${v.after}`;
  });
}

await init();
$("status").textContent = "";
$("show-cosets").onclick = renderCosets;
$("bch-form").onsubmit = runBch;
$("gv-form").onsubmit = runGv;
$("enl-form").onsubmit = runEnlarge;
renderCosets();
