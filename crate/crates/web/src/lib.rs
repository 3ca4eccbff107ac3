//! Browser bindings. Every export takes plain numbers or strings and returns JSON.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use eaqecc::bch::{hartmann_tzeng_bound, BchFamily};
use eaqecc::eaqecc::{enlargement_demo, entanglement_witness, DistanceOptions};
use eaqecc::gv::{gv_grid, gv_threshold_with, threshold_set, GvRule, ThresholdPair};
use eaqecc::tables::{pair_distances, ReproOptions};
use eaqecc::{AsymEaqeccParams, FiniteField, SearchOptions, WeightReport};

type Out = Result<String, String>;

fn to_json<T: Serialize>(v: &T) -> Out {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| format!("`{t}` is not an exponent"))
        })
        .collect()
}

fn search(budget: f64) -> SearchOptions {
    SearchOptions {
        budget: budget.max(1.0) as u64,
        parallel: false,
        ..Default::default()
    }
}

#[derive(Serialize)]
struct CosetView {
    q: u64,
    n: u32,
    big_field: String,
    cosets: Vec<Vec<u32>>,
}

/// Cyclotomic cosets of `Z_n` under multiplication by `q`.
pub fn cosets_json(q: u64, n: u32) -> Out {
    let fam = BchFamily::new(q, n, None).map_err(|e| e.to_string())?;
    to_json(&CosetView {
        q,
        n,
        big_field: fam.big.designator(),
        cosets: fam.cosets.cosets().to_vec(),
    })
}

#[derive(Serialize)]
struct BchView {
    code: String,
    params: AsymEaqeccParams,
    delta1: Vec<u32>,
    delta2: Vec<u32>,
    k1: usize,
    k2: usize,
    ht_z: u32,
    ht_x: u32,
    dz_dual: WeightReport,
    dx_dual: WeightReport,
}

/// Code pair from the cosets containing the listed exponents.
pub fn bch_json(q: u64, n: u32, c1_cosets: &str, c2_cosets: &str, budget: f64) -> Out {
    let err = |e: eaqecc::Error| e.to_string();
    let fam = BchFamily::new(q, n, None).map_err(err)?;
    let (delta1, code1) = fam.code_from_cosets(&parse_list(c1_cosets)?).map_err(err)?;
    let (delta2, code2) = fam.code_from_cosets(&parse_list(c2_cosets)?).map_err(err)?;
    let ht_z = hartmann_tzeng_bound(n, &delta1).map_err(err)?;
    let ht_x = hartmann_tzeng_bound(n, &delta2).map_err(err)?;
    let opts = ReproOptions {
        search: search(budget),
        ..Default::default()
    };
    let d = pair_distances(&code1, &code2, ht_z, ht_x, &opts).map_err(err)?;
    let c = entanglement_witness(&code1, &code2).map_err(err)?.rank;
    let (n_, k1, k2) = (n as usize, code1.k(), code2.k());
    let k = (n_ + c)
        .checked_sub(k1 + k2)
        .ok_or("inadmissible entanglement")?;
    let params = AsymEaqeccParams {
        q: code1.field().order(),
        n: n_,
        k,
        dz: d.dz,
        dx: d.dx,
        c,
    };
    to_json(&BchView {
        code: params.to_string(),
        params,
        delta1,
        delta2,
        k1,
        k2,
        ht_z,
        ht_x,
        dz_dual: d.dz_dual,
        dx_dual: d.dx_dual,
    })
}

#[derive(Serialize)]
struct HeatmapView {
    /// `sums[dz - 1][dx - 1]`; the inequality holds where the value is below 1.
    sums: Vec<Vec<f64>>,
    threshold: ThresholdPair,
    threshold_set: Vec<ThresholdPair>,
}

/// GV sums on the grid `1..=max_d` and the threshold pair.
pub fn gv_heatmap_json(
    q: u64,
    n: u32,
    k1: u32,
    k2: u32,
    c: u32,
    max_d: u32,
    per_term: bool,
) -> Out {
    let err = |e: eaqecc::Error| e.to_string();
    let rule = if per_term {
        GvRule::PerTerm
    } else {
        GvRule::Sum
    };
    let max_d = max_d.clamp(1, n + 1);
    to_json(&HeatmapView {
        sums: gv_grid(q, n, k1, k2, c, max_d).map_err(err)?,
        threshold: gv_threshold_with(q, n, k1, k2, c, rule).map_err(err)?,
        threshold_set: threshold_set(q, n, k1, k2, c, rule).map_err(err)?,
    })
}

/// Entanglement raising `d_z` at fixed length and dimension over `GF(q)`.
pub fn enlarge_json(q: u64, budget: f64) -> Out {
    let err = |e: eaqecc::Error| e.to_string();
    let f = std::sync::Arc::new(FiniteField::with_order(q).map_err(err)?);
    let opts = DistanceOptions {
        search: search(budget),
        ..Default::default()
    };
    let e = enlargement_demo(f, &opts).map_err(err)?;
    #[derive(Serialize)]
    struct View {
        before: String,
        after: String,
        detail: eaqecc::Enlargement,
    }
    to_json(&View {
        before: e.before.to_string(),
        after: e.after.to_string(),
        detail: e,
    })
}

fn js(r: Out) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn cosets(q: u32, n: u32) -> Result<String, JsValue> {
    js(cosets_json(q as u64, n))
}

#[wasm_bindgen]
pub fn bch(
    q: u32,
    n: u32,
    c1_cosets: &str,
    c2_cosets: &str,
    budget: f64,
) -> Result<String, JsValue> {
    js(bch_json(q as u64, n, c1_cosets, c2_cosets, budget))
}

#[wasm_bindgen]
pub fn gv_heatmap(
    q: u32,
    n: u32,
    k1: u32,
    k2: u32,
    c: u32,
    max_d: u32,
    per_term: bool,
) -> Result<String, JsValue> {
    js(gv_heatmap_json(q as u64, n, k1, k2, c, max_d, per_term))
}

#[wasm_bindgen]
pub fn enlarge(q: u32, budget: f64) -> Result<String, JsValue> {
    js(enlarge_json(q as u64, budget))
}
