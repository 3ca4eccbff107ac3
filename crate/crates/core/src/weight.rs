//! Minimum and relative minimum Hamming weights.
//!
//! Two exhaustive engines are available for any pair:
//!
//! * a codeword scan that walks the whole message space in a p-ary Gray
//!   order, so that each step adds one precomputed row;
//! * a support search that tries supports of increasing size and detects
//!   codewords through column dependencies of a parity-check matrix.
//!
//! When `A ∩ B = 0` the minimum weight also follows from the weight
//! distribution of `A^⊥` through the MacWilliams identity.
//!
//! All are exact. `Auto` tries the support search first within the cost of
//! the cheapest enumeration and otherwise runs that enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::field::FiniteField;

pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Value(u32),
    /// The set difference has no elements.
    EmptySet,
}

impl Distance {
    pub fn value(self) -> Option<u32> {
        match self {
            Distance::Value(v) => Some(v),
            Distance::EmptySet => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Trivial,
    CodewordScan,
    SupportSearch,
    /// Weight distribution of the dual, transformed by the MacWilliams identity.
    MacWilliams,
    /// Lower bound supplied from outside; nothing was enumerated.
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub distance: Distance,
    pub exact: bool,
    pub enumerated: u64,
    pub method: Method,
}

impl WeightReport {
    pub fn bound(value: u32) -> Self {
        WeightReport {
            distance: Distance::Value(value),
            exact: false,
            enumerated: 0,
            method: Method::Bound,
        }
    }

    pub fn value(&self) -> Option<u32> {
        self.distance.value()
    }
}

impl fmt::Display for WeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.distance, self.exact) {
            (Distance::EmptySet, _) => write!(f, "empty"),
            (Distance::Value(v), true) => write!(f, "{v}"),
            (Distance::Value(v), false) => write!(f, "≥{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Auto,
    CodewordScan,
    SupportSearch,
    /// Only when `A ∩ B = 0`; enumerates `A^⊥`.
    MacWilliams,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub budget: u64,
    pub parallel: bool,
    pub engine: Engine,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            parallel: cfg!(feature = "parallel"),
            engine: Engine::Auto,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Minimum weight of the nonzero codewords of `c`.
pub fn min_weight(c: &LinearCode, budget: u64) -> Result<WeightReport> {
    min_weight_with(c, &SearchOptions::with_budget(budget))
}

pub fn min_weight_with(c: &LinearCode, opts: &SearchOptions) -> Result<WeightReport> {
    let zero = LinearCode::zero(c.field().clone(), c.n());
    relative_min_weight_with(c, &zero, opts)
}

/// Minimum weight over `A \ (A ∩ B)`.
pub fn relative_min_weight(a: &LinearCode, b: &LinearCode, budget: u64) -> Result<WeightReport> {
    relative_min_weight_with(a, b, &SearchOptions::with_budget(budget))
}

pub fn relative_min_weight_with(
    a: &LinearCode,
    b: &LinearCode,
    opts: &SearchOptions,
) -> Result<WeightReport> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.n() != b.n() {
        return Err(Error::ShapeMismatch(format!(
            "codes of length {} and {}",
            a.n(),
            b.n()
        )));
    }
    if a.is_subcode_of(b)? {
        return Ok(WeightReport {
            distance: Distance::EmptySet,
            exact: true,
            enumerated: 0,
            method: Method::Trivial,
        });
    }
    let q = a.field().order() as u128;
    let scan_cost = q.checked_pow(a.k() as u32).unwrap_or(u128::MAX);
    // With A ∩ B = 0 the relative weight is the plain minimum weight of A.
    let mw_cost = if b.k() == 0 || a.intersect(b)?.k() == 0 {
        q.checked_pow((a.n() - a.k()) as u32).unwrap_or(u128::MAX)
    } else {
        u128::MAX
    };
    let budget = opts.budget as u128;
    let exceeded = |needed: u128| Error::BudgetExceeded {
        needed,
        budget: opts.budget,
    };

    match opts.engine {
        Engine::CodewordScan => {
            if scan_cost > budget {
                return Err(exceeded(scan_cost));
            }
            Ok(CodewordScan::new(a, b).run(opts.parallel))
        }
        Engine::SupportSearch => SupportSearch::new(a, b)
            .run(opts.budget, opts.parallel)
            .ok_or_else(|| exceeded(scan_cost)),
        Engine::MacWilliams => {
            if mw_cost > budget {
                return Err(exceeded(mw_cost));
            }
            Ok(macwilliams_min_weight(a, opts.parallel))
        }
        Engine::Auto => {
            let cheapest = scan_cost.min(mw_cost);
            let limit = budget.min(cheapest) as u64;
            if let Some(r) = SupportSearch::new(a, b).run(limit, opts.parallel) {
                return Ok(r);
            }
            if cheapest > budget {
                return Err(exceeded(cheapest));
            }
            if scan_cost <= mw_cost {
                Ok(CodewordScan::new(a, b).run(opts.parallel))
            } else {
                Ok(macwilliams_min_weight(a, opts.parallel))
            }
        }
    }
}

/// Number of codewords of `c` of each weight `0..=n`.
pub fn weight_distribution(c: &LinearCode, opts: &SearchOptions) -> Result<Vec<u64>> {
    let q = c.field().order() as u128;
    let cost = q.checked_pow(c.k() as u32).unwrap_or(u128::MAX);
    if cost > opts.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: cost,
            budget: opts.budget,
        });
    }
    let zero = LinearCode::zero(c.field().clone(), c.n());
    Ok(CodewordScan::new(c, &zero).distribution(opts.parallel))
}

/// Weight distribution of the dual of a code with distribution `a`:
/// `B_j = q^{-k} Σ_i A_i K_j(i)` with Krawtchouk polynomials `K_j`.
pub fn macwilliams_transform(a: &[u64], q: u32) -> Vec<BigInt> {
    let n = a.len() - 1;
    let size: BigInt = a.iter().map(|&x| BigInt::from(x)).sum();
    (0..=n)
        .map(|j| {
            let s: BigInt = (0..=n)
                .filter(|&i| a[i] != 0)
                .map(|i| BigInt::from(a[i]) * krawtchouk(n, q, j, i))
                .sum();
            debug_assert!((&s % &size).is_zero());
            s / &size
        })
        .collect()
}

fn krawtchouk(n: usize, q: u32, j: usize, i: usize) -> BigInt {
    let qm1 = BigInt::from(q - 1);
    (0..=j.min(i))
        .filter(|&h| j - h <= n - i)
        .map(|h| {
            let t = qm1.pow((j - h) as u32) * big_binomial(i, h) * big_binomial(n - i, j - h);
            if h % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

fn big_binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn macwilliams_min_weight(a: &LinearCode, parallel: bool) -> WeightReport {
    let dual = a.dual();
    let scan = CodewordScan::new(&dual, &LinearCode::zero(a.field().clone(), a.n()));
    let dist = scan.distribution(parallel);
    let b = macwilliams_transform(&dist, a.field().order());
    let d = (1..b.len())
        .find(|&j| !b[j].is_zero())
        .expect("A is nonzero");
    WeightReport {
        distance: Distance::Value(d as u32),
        exact: true,
        enumerated: (scan.total() - 1) as u64,
        method: Method::MacWilliams,
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(feature = "parallel")]
fn map_tasks<T, R, F>(tasks: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        tasks.par_iter().map(f).collect()
    } else {
        tasks.iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn map_tasks<T, R, F>(tasks: &[T], _parallel: bool, f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    tasks.iter().map(f).collect()
}

/// Sparse row: (position, value) pairs.
type Sparse = Vec<(usize, u32)>;

fn sparse(v: &[u32]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i, x))
        .collect()
}

struct CodewordScan<'a> {
    field: &'a FiniteField,
    n: usize,
    s: usize,
    /// GF(p)-basis of the code: x^t * g_j.
    rows: Vec<Vec<u32>>,
    row_supp: Vec<Sparse>,
    syn_supp: Vec<Sparse>,
    /// B is the zero code: every nonzero codeword qualifies.
    all_count: bool,
}

impl<'a> CodewordScan<'a> {
    fn new(a: &'a LinearCode, b: &LinearCode) -> Self {
        let field: &FiniteField = a.field();
        let n = a.n();
        let m = field.degree();
        let p = field.p();
        // The polynomial generator x has integer encoding p.
        let x = if m > 1 { p } else { 1 };
        let mut rows = Vec::new();
        for j in 0..a.k() {
            let g = a.generator().row(j);
            for t in 0..m {
                let scale = field.pow(x, t as u64);
                rows.push(g.iter().map(|&v| field.mul(scale, v)).collect::<Vec<u32>>());
            }
        }
        let all_count = b.k() == 0;
        let hb = b.parity_check();
        let syn_supp = rows.iter().map(|r| sparse(&hb.apply(r))).collect();
        let row_supp = rows.iter().map(|r| sparse(r)).collect();
        CodewordScan {
            field,
            n,
            s: hb.rows(),
            rows,
            row_supp,
            syn_supp,
            all_count,
        }
    }

    fn total(&self) -> u128 {
        (self.field.p() as u128).pow(self.rows.len() as u32)
    }

    /// Nonzero message counters split into contiguous chunks.
    fn ranges(&self, parallel: bool) -> Vec<(u128, u128)> {
        let total = self.total();
        let chunks: u128 = if parallel { 64 } else { 1 };
        let step = total.div_ceil(chunks).max(1);
        (0..chunks)
            .map(|i| ((i * step).max(1), ((i + 1) * step).min(total)))
            .filter(|(lo, hi)| lo < hi)
            .collect()
    }

    fn scan(&self, lo: u128, hi: u128, visit: impl FnMut(u32, bool)) {
        if self.field.order() == 2 && self.n <= 128 {
            self.scan_binary(lo, hi, visit)
        } else {
            self.scan_general(lo, hi, visit)
        }
    }

    fn run(&self, parallel: bool) -> WeightReport {
        let total = self.total();
        let best = map_tasks(&self.ranges(parallel), parallel, |&(lo, hi)| {
            let mut best = u32::MAX;
            self.scan(lo, hi, |w, counts| {
                if counts && w < best {
                    best = w;
                }
            });
            best
        })
        .into_iter()
        .min()
        .expect("at least one range");
        WeightReport {
            distance: Distance::Value(best),
            exact: true,
            enumerated: (total - 1) as u64,
            method: Method::CodewordScan,
        }
    }

    /// Number of codewords of each weight, the zero word included.
    fn distribution(&self, parallel: bool) -> Vec<u64> {
        let n = self.n;
        let parts = map_tasks(&self.ranges(parallel), parallel, |&(lo, hi)| {
            let mut counts = vec![0u64; n + 1];
            self.scan(lo, hi, |w, _| counts[w as usize] += 1);
            counts
        });
        let mut total = vec![0u64; n + 1];
        total[0] = 1;
        for part in parts {
            for (t, c) in total.iter_mut().zip(part) {
                *t += c;
            }
        }
        total
    }

    fn gray_digits(&self, counter: u128) -> Vec<u32> {
        let p = self.field.p() as u128;
        let len = self.rows.len();
        let mut d = vec![0u32; len + 1];
        let mut c = counter;
        for digit in d.iter_mut().take(len) {
            *digit = (c % p) as u32;
            c /= p;
        }
        let p = p as u32;
        (0..len).map(|i| (d[i] + p - d[i + 1]) % p).collect()
    }

    fn counter_digits(&self, counter: u128) -> Vec<u32> {
        let p = self.field.p() as u128;
        let mut c = counter;
        (0..self.rows.len())
            .map(|_| {
                let v = (c % p) as u32;
                c /= p;
                v
            })
            .collect()
    }

    /// Advances the base-p counter and returns the index of the changed Gray digit.
    fn increment(digits: &mut [u32], p: u32) -> usize {
        let mut j = 0;
        while j < digits.len() && digits[j] == p - 1 {
            digits[j] = 0;
            j += 1;
        }
        if j < digits.len() {
            digits[j] += 1;
        }
        j
    }

    fn scan_binary(&self, lo: u128, hi: u128, mut visit: impl FnMut(u32, bool)) {
        let to_bits = |v: &[u32]| -> u128 {
            v.iter()
                .enumerate()
                .fold(0u128, |acc, (i, &x)| acc | ((x as u128 & 1) << i))
        };
        let hb_rows: Vec<u128> = self
            .syn_supp
            .iter()
            .map(|s| s.iter().fold(0u128, |acc, &(i, _)| acc | (1u128 << i)))
            .collect();
        let rows: Vec<u128> = self.rows.iter().map(|r| to_bits(r)).collect();
        let g = self.gray_digits(lo);
        let mut word = 0u128;
        let mut syn = 0u128;
        for (i, &gi) in g.iter().enumerate() {
            if gi == 1 {
                word ^= rows[i];
                syn ^= hb_rows[i];
            }
        }
        let use_syn = !self.all_count && self.s <= 128;
        let mut counter = lo;
        loop {
            visit(word.count_ones(), self.all_count || (use_syn && syn != 0));
            counter += 1;
            if counter >= hi {
                break;
            }
            let j = (counter.trailing_zeros()) as usize;
            word ^= rows[j];
            syn ^= hb_rows[j];
        }
        debug_assert!(use_syn || self.all_count);
    }

    fn scan_general(&self, lo: u128, hi: u128, mut visit: impl FnMut(u32, bool)) {
        let f = self.field;
        let p = f.p();
        let g = self.gray_digits(lo);
        let mut word = vec![0u32; self.n];
        let mut syn = vec![0u32; self.s];
        for (i, &gi) in g.iter().enumerate() {
            for _ in 0..gi {
                for &(pos, v) in &self.row_supp[i] {
                    word[pos] = f.add(word[pos], v);
                }
                for &(pos, v) in &self.syn_supp[i] {
                    syn[pos] = f.add(syn[pos], v);
                }
            }
        }
        let mut weight = word.iter().filter(|&&x| x != 0).count() as u32;
        let mut syn_nz = syn.iter().filter(|&&x| x != 0).count();
        let mut digits = self.counter_digits(lo);
        let mut counter = lo;
        loop {
            visit(weight, self.all_count || syn_nz > 0);
            counter += 1;
            if counter >= hi {
                break;
            }
            let j = Self::increment(&mut digits, p);
            for &(pos, v) in &self.row_supp[j] {
                let old = word[pos];
                let new = f.add(old, v);
                word[pos] = new;
                weight = weight + (new != 0) as u32 - (old != 0) as u32;
            }
            if !self.all_count {
                for &(pos, v) in &self.syn_supp[j] {
                    let old = syn[pos];
                    let new = f.add(old, v);
                    syn[pos] = new;
                    syn_nz = syn_nz + (new != 0) as usize - (old != 0) as usize;
                }
            }
        }
    }
}

/// Iterative deepening over support size. A support `S` with `|S| = w`
/// carries a codeword of `A` outside `B` iff the last column of `H_A[:, S]`
/// depends on the others and the dependency vector has a nonzero
/// `B`-syndrome; smaller supports were excluded at earlier levels, which
/// also lets any subtree whose prefix columns are dependent be pruned.
struct SupportSearch<'a> {
    field: &'a FiniteField,
    n: usize,
    r: usize,
    /// Parity check of A, row-major r × n.
    ha: Vec<u32>,
    /// Columns of the parity check of B.
    hb_cols: Vec<Vec<u32>>,
    fix_first: bool,
}

struct Elim {
    m: Vec<u32>,
    is_pivot: Vec<bool>,
    /// (row, column) of each chosen prefix position.
    pivots: Vec<(usize, usize)>,
}

impl<'a> SupportSearch<'a> {
    fn new(a: &'a LinearCode, b: &LinearCode) -> Self {
        let ha_m = a.parity_check();
        let hb = b.parity_check();
        let n = a.n();
        let hb_cols = (0..n).map(|j| hb.column(j)).collect();
        SupportSearch {
            field: a.field(),
            n,
            r: ha_m.rows(),
            ha: (0..ha_m.rows())
                .flat_map(|r| ha_m.row(r).to_vec())
                .collect(),
            hb_cols,
            fix_first: a.is_cyclic() && b.is_cyclic(),
        }
    }

    fn leaves_at(&self, w: usize) -> u128 {
        if self.fix_first {
            binomial(self.n as u64 - 1, w as u64 - 1)
        } else {
            binomial(self.n as u64, w as u64)
        }
    }

    fn run(&self, budget: u64, parallel: bool) -> Option<WeightReport> {
        let mut spent: u128 = 0;
        for w in 1..=self.n.min(self.r + 1) {
            let bound = self.leaves_at(w);
            if spent + bound > budget as u128 {
                return None;
            }
            let (found, leaves) = self.level(w, parallel);
            spent += leaves as u128;
            if found {
                return Some(WeightReport {
                    distance: Distance::Value(w as u32),
                    exact: true,
                    enumerated: spent as u64,
                    method: Method::SupportSearch,
                });
            }
        }
        // A ⊄ B always yields a word of weight at most r + 1.
        unreachable!("support search exhausted without a codeword")
    }

    fn first_range(&self) -> std::ops::Range<usize> {
        if self.fix_first {
            0..1
        } else {
            0..self.n
        }
    }

    fn level(&self, w: usize, parallel: bool) -> (bool, u64) {
        let prefix_len = w.saturating_sub(2).min(2);
        let mut tasks: Vec<Vec<usize>> = vec![vec![]];
        for depth in 0..prefix_len {
            let mut next = Vec::new();
            for t in &tasks {
                let range = match t.last() {
                    None => self.first_range(),
                    Some(&x) => x + 1..self.n,
                };
                for x in range {
                    if self.n - x >= w - depth {
                        let mut e = t.clone();
                        e.push(x);
                        next.push(e);
                    }
                }
            }
            tasks = next;
        }
        if parallel {
            let results = map_tasks(&tasks, true, |t| self.task(t, w));
            let mut leaves = 0;
            for (found, l) in results {
                leaves += l;
                if found {
                    return (true, leaves);
                }
            }
            (false, leaves)
        } else {
            let mut leaves = 0;
            for t in &tasks {
                let (found, l) = self.task(t, w);
                leaves += l;
                if found {
                    return (true, leaves);
                }
            }
            (false, leaves)
        }
    }

    fn task(&self, prefix: &[usize], w: usize) -> (bool, u64) {
        let mut st = Elim {
            m: self.ha.clone(),
            is_pivot: vec![false; self.r],
            pivots: Vec::new(),
        };
        if w == 1 {
            let mut leaves = 0;
            for b in self.first_range() {
                leaves += 1;
                if self.leaf(&st, None, b) {
                    return (true, leaves);
                }
            }
            return (false, leaves);
        }
        for &x in prefix {
            match self.push(&st, x) {
                Some(next) => st = next,
                None => return (false, 0),
            }
        }
        let mut leaves = 0;
        let start = prefix.last().map(|&x| x + 1);
        let found = self.dfs(&st, w - 1 - prefix.len(), start, &mut leaves);
        (found, leaves)
    }

    /// `remaining` positions are still to be chosen before the leaf.
    fn dfs(&self, st: &Elim, remaining: usize, start: Option<usize>, leaves: &mut u64) -> bool {
        let range = match start {
            None => self.first_range(),
            Some(s) => s..self.n,
        };
        for a in range {
            if self.n - a < remaining + 1 {
                break;
            }
            if remaining == 1 {
                // `a` is the last interior position; test leaves lazily.
                let Some(lazy) = self.lazy_pivot(st, a) else {
                    continue;
                };
                for b in a + 1..self.n {
                    *leaves += 1;
                    if self.leaf(st, Some((a, &lazy)), b) {
                        return true;
                    }
                }
            } else if let Some(next) = self.push(st, a) {
                if self.dfs(&next, remaining - 1, Some(a + 1), leaves) {
                    return true;
                }
            }
        }
        false
    }

    /// Column `a` of the current matrix and its first non-pivot nonzero row.
    fn lazy_pivot(&self, st: &Elim, a: usize) -> Option<(Vec<u32>, usize)> {
        let y: Vec<u32> = (0..self.r).map(|t| st.m[t * self.n + a]).collect();
        let u = (0..self.r).find(|&t| !st.is_pivot[t] && y[t] != 0)?;
        Some((y, u))
    }

    /// Eliminates on column `a`; `None` if it depends on the prefix.
    fn push(&self, st: &Elim, a: usize) -> Option<Elim> {
        let f = self.field;
        let n = self.n;
        let u = (0..self.r).find(|&t| !st.is_pivot[t] && st.m[t * n + a] != 0)?;
        let mut m = st.m.clone();
        let inv = f.inv(m[u * n + a]).expect("nonzero pivot");
        for j in a..n {
            m[u * n + j] = f.mul(m[u * n + j], inv);
        }
        for t in 0..self.r {
            if t == u {
                continue;
            }
            let factor = m[t * n + a];
            if factor == 0 {
                continue;
            }
            let neg = f.neg(factor);
            for j in a..n {
                m[t * n + j] = f.add(m[t * n + j], f.mul(neg, m[u * n + j]));
            }
        }
        let mut is_pivot = st.is_pivot.clone();
        is_pivot[u] = true;
        let mut pivots = st.pivots.clone();
        pivots.push((u, a));
        Some(Elim {
            m,
            is_pivot,
            pivots,
        })
    }

    fn leaf(&self, st: &Elim, lazy: Option<(usize, &(Vec<u32>, usize))>, b: usize) -> bool {
        let f = self.field;
        let n = self.n;
        let col = |t: usize| st.m[t * n + b];
        let lambda = match lazy {
            Some((_, (y, u))) => f.div(col(*u), y[*u]).expect("nonzero pivot"),
            None => 0,
        };
        let residual = |t: usize| match lazy {
            Some((_, (y, _))) if lambda != 0 => f.sub(col(t), f.mul(lambda, y[t])),
            _ => col(t),
        };
        for t in 0..self.r {
            if st.is_pivot[t] {
                continue;
            }
            if let Some((_, (_, u))) = lazy {
                if t == *u {
                    continue;
                }
            }
            if residual(t) != 0 {
                return false;
            }
        }
        // Dependency: H[:, b] = lambda * H[:, a] + sum residual(rho) * H[:, col_rho].
        let mut x: Vec<(usize, u32)> = vec![(b, 1)];
        if let Some((a, _)) = lazy {
            x.push((a, f.neg(lambda)));
        }
        for &(rho, c) in &st.pivots {
            x.push((c, f.neg(residual(rho))));
        }
        let s = self.hb_cols.first().map_or(0, |c| c.len());
        (0..s).any(|t| {
            x.iter().fold(0, |acc, &(pos, v)| {
                f.add(acc, f.mul(v, self.hb_cols[pos][t]))
            }) != 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn gf(q: u64) -> Arc<FiniteField> {
        Arc::new(FiniteField::with_order(q).unwrap())
    }

    fn code(q: u64, n: usize, rows: &[Vec<u32>]) -> LinearCode {
        LinearCode::from_rows(gf(q), n, rows).unwrap()
    }

    fn hamming74() -> LinearCode {
        code(
            2,
            7,
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
    }

    /// Lexicographic enumeration of all messages, weights by direct encoding.
    fn naive_relative(a: &LinearCode, b: &LinearCode) -> Distance {
        let q = a.field().order();
        let k = a.k();
        let mut best = None;
        let mut msg = vec![0u32; k];
        loop {
            let mut i = 0;
            while i < k && msg[i] == q - 1 {
                msg[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            msg[i] += 1;
            let c = a.encode(&msg);
            if !b.contains(&c) {
                let w = c.iter().filter(|&&v| v != 0).count() as u32;
                best = Some(best.map_or(w, |x: u32| x.min(w)));
            }
        }
        best.map_or(Distance::EmptySet, Distance::Value)
    }

    fn all_engines(a: &LinearCode, b: &LinearCode) -> Vec<WeightReport> {
        let mut out = Vec::new();
        for engine in [Engine::Auto, Engine::CodewordScan, Engine::SupportSearch] {
            for parallel in [false, true] {
                let opts = SearchOptions {
                    budget: DEFAULT_BUDGET,
                    parallel,
                    engine,
                };
                out.push(relative_min_weight_with(a, b, &opts).unwrap());
            }
        }
        out
    }

    #[test]
    fn min_weight_examples() {
        let rep = code(2, 3, &[vec![1, 1, 1]]);
        assert_eq!(
            min_weight(&rep, DEFAULT_BUDGET).unwrap().distance,
            Distance::Value(3)
        );
        let h = hamming74();
        for r in all_engines(&h, &LinearCode::zero(h.field().clone(), 7)) {
            assert_eq!(r.distance, Distance::Value(3));
            assert!(r.exact);
        }
        let simplex = h.dual();
        let r = min_weight(&simplex, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.distance, Distance::Value(4));
        let zero = LinearCode::zero(gf(2), 4);
        assert_eq!(
            min_weight(&zero, DEFAULT_BUDGET).unwrap().distance,
            Distance::EmptySet
        );
    }

    #[test]
    fn codeword_scan_counts_every_word() {
        let h = hamming74();
        let opts = SearchOptions {
            engine: Engine::CodewordScan,
            ..Default::default()
        };
        assert_eq!(min_weight_with(&h, &opts).unwrap().enumerated, 15);
        let f9 = LinearCode::full(gf(9), 3);
        let r = min_weight_with(&f9, &opts).unwrap();
        assert_eq!(r.enumerated, 728);
        assert_eq!(r.distance, Distance::Value(1));
    }

    #[test]
    fn relative_examples() {
        let full = LinearCode::full(gf(2), 2);
        let diag = code(2, 2, &[vec![1, 1]]);
        for r in all_engines(&full, &diag) {
            assert_eq!(r.distance, Distance::Value(1));
        }
        assert_eq!(
            relative_min_weight(&diag, &full, DEFAULT_BUDGET)
                .unwrap()
                .distance,
            Distance::EmptySet
        );
        let simplex = hamming74().dual();
        let even = code(2, 7, &[vec![1; 7]]).dual();
        assert_eq!(even.k(), 6);
        for r in all_engines(&even, &simplex) {
            assert_eq!(r.distance, Distance::Value(2));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = LinearCode::full(gf(4), 12).dual().dual();
        let opts = SearchOptions {
            budget: 1 << 10,
            engine: Engine::CodewordScan,
            ..Default::default()
        };
        match min_weight_with(&f, &opts) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 1 << 24);
                assert_eq!(budget, 1 << 10);
            }
            other => panic!("{other:?}"),
        }
        // Support search still finds weight 1 cheaply.
        assert_eq!(
            min_weight(&f, 1 << 10).unwrap().distance,
            Distance::Value(1)
        );
    }

    #[test]
    fn mismatched_inputs() {
        let a = LinearCode::full(gf(2), 3);
        let b = LinearCode::full(gf(3), 3);
        let c = LinearCode::full(gf(2), 4);
        assert_eq!(
            relative_min_weight(&a, &b, 100).unwrap_err(),
            Error::FieldMismatch
        );
        assert!(matches!(
            relative_min_weight(&a, &c, 100).unwrap_err(),
            Error::ShapeMismatch(_)
        ));
    }

    fn random_code(q: u64, n: usize, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
        let f = gf(q);
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.order())).collect())
            .collect();
        LinearCode::from_rows(f, n, &rows).unwrap()
    }

    #[test]
    fn engines_agree_with_naive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for _ in 0..30 {
                let n = rng.gen_range(2..9);
                let ka = rng.gen_range(1..n.min(5) + 1);
                let a = random_code(q, n, ka, &mut rng);
                if (q as u128).pow(a.k() as u32) > 1 << 12 {
                    continue;
                }
                let kb = rng.gen_range(0..n);
                let b = random_code(q, n, kb, &mut rng);
                let want = naive_relative(&a, &b);
                let reports = all_engines(&a, &b);
                for r in &reports {
                    assert_eq!(r.distance, want, "q={q} a={a:?} b={b:?} {r:?}");
                }
                // Identical reports per engine across serial and parallel runs.
                for pair in reports.chunks(2) {
                    assert_eq!(pair[0], pair[1]);
                }
                let zero = LinearCode::zero(a.field().clone(), n);
                let plain = naive_relative(&a, &zero);
                assert_eq!(min_weight(&a, DEFAULT_BUDGET).unwrap().distance, plain);
                let mw = SearchOptions {
                    engine: Engine::MacWilliams,
                    ..Default::default()
                };
                assert_eq!(min_weight_with(&a, &mw).unwrap().distance, plain);
            }
        }
    }

    fn naive_distribution(c: &LinearCode) -> Vec<u64> {
        let q = c.field().order();
        let mut counts = vec![0u64; c.n() + 1];
        let mut msg = vec![0u32; c.k()];
        loop {
            let w = hamming_weight_of(&c.encode(&msg));
            counts[w] += 1;
            let mut i = 0;
            while i < msg.len() && msg[i] == q - 1 {
                msg[i] = 0;
                i += 1;
            }
            if i == msg.len() {
                break;
            }
            msg[i] += 1;
        }
        counts
    }

    fn hamming_weight_of(v: &[u32]) -> usize {
        v.iter().filter(|&&x| x != 0).count()
    }

    #[test]
    fn distributions_and_macwilliams() {
        let h = hamming74();
        let dist = weight_distribution(&h, &SearchOptions::default()).unwrap();
        assert_eq!(dist, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        let simplex: Vec<i64> = macwilliams_transform(&dist, 2)
            .iter()
            .map(|b| i64::try_from(b.clone()).unwrap())
            .collect();
        assert_eq!(simplex, vec![1, 0, 0, 0, 7, 0, 0, 0]);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for _ in 0..10 {
                let n = rng.gen_range(2..8);
                let c = random_code(q, n, rng.gen_range(1..n.min(4) + 1), &mut rng);
                for parallel in [false, true] {
                    let opts = SearchOptions {
                        parallel,
                        ..Default::default()
                    };
                    assert_eq!(
                        weight_distribution(&c, &opts).unwrap(),
                        naive_distribution(&c)
                    );
                }
                let d = c.dual();
                if d.k() == 0 {
                    continue;
                }
                let direct: Vec<BigInt> = naive_distribution(&d)
                    .into_iter()
                    .map(BigInt::from)
                    .collect();
                assert_eq!(
                    macwilliams_transform(&naive_distribution(&c), q as u32),
                    direct
                );
            }
        }
    }

    #[test]
    fn macwilliams_needs_trivial_intersection() {
        let full = LinearCode::full(gf(2), 2);
        let diag = code(2, 2, &[vec![1, 1]]);
        let opts = SearchOptions {
            engine: Engine::MacWilliams,
            ..Default::default()
        };
        assert!(matches!(
            relative_min_weight_with(&full, &diag, &opts),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn relative_weight_at_least_min_weight() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let q = [2u64, 3, 4][rng.gen_range(0..3)];
            let n = rng.gen_range(3..10);
            let a = random_code(q, n, rng.gen_range(1..n), &mut rng);
            let b = random_code(q, n, rng.gen_range(0..n), &mut rng);
            let d = min_weight(&a, DEFAULT_BUDGET).unwrap().value().unwrap();
            if let Some(rel) = relative_min_weight(&a, &b, DEFAULT_BUDGET).unwrap().value() {
                assert!(rel >= d);
            }
            let zero = LinearCode::zero(a.field().clone(), n);
            assert_eq!(
                relative_min_weight(&a, &zero, DEFAULT_BUDGET)
                    .unwrap()
                    .value(),
                Some(d)
            );
        }
    }

    #[test]
    fn display() {
        assert_eq!(WeightReport::bound(5).to_string(), "≥5");
        let r = WeightReport {
            distance: Distance::Value(3),
            exact: true,
            enumerated: 1,
            method: Method::CodewordScan,
        };
        assert_eq!(r.to_string(), "3");
    }
}
