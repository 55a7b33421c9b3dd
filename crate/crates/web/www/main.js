import init, { classify, weyl, suite, suites } from "./pkg/krel_web.js";

const samples = {
  identity: {
    kind: "gbr", schemaVersion: 1,
    payload: { K: { dim: 1, gram: [["1"]] }, H: { dim: 1, gram: [["1"]] },
               graph: [["1", "0", "1", "0"], ["0", "1", "0", "1"]] },
  },
  diagonal: {
    kind: "gbr", schemaVersion: 1,
    payload: { K: { dim: 1, gram: [["-1"]] }, H: { dim: 1, gram: [["1"]] },
               graph: [["1", "0", "1", "0"], ["0", "1", "0", "-1"]] },
  },
  relation: {
    kind: "relation", schemaVersion: 1,
    payload: { from: { dim: 2, gram: [["1", "0"], ["0", "-1"]] },
               to: { dim: 2, gram: [["1", "0"], ["0", "-1"]] },
               graph: [["1", "1", "1", "1"], ["0", "1", "1", "0"]] },
  },
};

const $ = (id) => document.getElementById(id);
const show = (f) => {
  try {
    $("out").textContent = f();
  } catch (e) {
    $("out").textContent = "error: " + (e.message ?? e);
  }
};

function loadSample() {
  $("doc").value = JSON.stringify(samples[$("sample").value], null, 2);
}

await init();
for (const id of JSON.parse(suites())) {
  $("suite").add(new Option(id, id));
}
$("suite").value = "prop3.4";
$("sample").onchange = loadSample;
$("classify").onclick = () => show(() => classify($("doc").value));
$("weyl").onclick = () => show(() => weyl($("doc").value, $("points").value));
$("run").onclick = () => {
  $("out").textContent = "running…";
  setTimeout(() => show(() => suite($("suite").value, BigInt($("seed").value), +$("trials").value, +$("maxdim").value)), 0);
};
loadSample();
$("out").textContent = "ready";
