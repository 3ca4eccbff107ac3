//! Cyclotomic cosets, evaluation codes at roots of unity, subfield subcodes
//! and the BCH-type asymmetric construction.

use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::codes::LinearCode;
use crate::eaqecc::{asym_params, AsymEaqeccParams, DistanceOptions};
use crate::error::{Error, Result};
use crate::field::{Embedding, FiniteField};
use crate::linalg::MatrixGF;

/// Cyclotomic cosets of `Z_n` under multiplication by `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetStructure {
    n: u32,
    q: u32,
    cosets: Vec<Vec<u32>>,
    #[serde(skip)]
    coset_of: Vec<usize>,
}

impl CosetStructure {
    pub fn new(n: u32, q: u32) -> Result<Self> {
        if n == 0 || q < 2 {
            return Err(Error::InvalidParameters(format!("n = {n}, q = {q}")));
        }
        if n.gcd(&q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        let mut coset_of = vec![usize::MAX; n as usize];
        let mut cosets = Vec::new();
        for a in 0..n {
            if coset_of[a as usize] != usize::MAX {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = a;
            loop {
                coset_of[x as usize] = cosets.len();
                orbit.push(x);
                x = ((x as u64 * q as u64) % n as u64) as u32;
                if x == a {
                    break;
                }
            }
            orbit.sort_unstable();
            cosets.push(orbit);
        }
        Ok(CosetStructure {
            n,
            q,
            cosets,
            coset_of,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn cosets(&self) -> &[Vec<u32>] {
        &self.cosets
    }

    /// Sorted minimal representatives `a_0 = 0 < a_1 < ...`.
    pub fn reps(&self) -> Vec<u32> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cosets.iter().map(Vec::len).collect()
    }

    /// Index `z` of the last representative.
    pub fn z(&self) -> usize {
        self.cosets.len() - 1
    }

    fn check(&self, x: u32) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::ExponentOutOfRange(x))
        }
    }

    pub fn coset_containing(&self, x: u32) -> Result<&[u32]> {
        self.check(x)?;
        Ok(&self.cosets[self.coset_of[x as usize]])
    }

    /// Union of the cosets meeting `set`, sorted.
    pub fn closure(&self, set: &[u32]) -> Result<Vec<u32>> {
        let mut hit = vec![false; self.cosets.len()];
        for &x in set {
            self.check(x)?;
            hit[self.coset_of[x as usize]] = true;
        }
        let mut out: Vec<u32> = hit
            .iter()
            .enumerate()
            .filter(|(_, &h)| h)
            .flat_map(|(i, _)| self.cosets[i].iter().copied())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn is_closed(&self, set: &[u32]) -> Result<bool> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Ok(self.closure(&sorted)? == sorted)
    }

    /// Representative of the coset containing `n - a`.
    pub fn reciprocal_rep(&self, a: u32) -> Result<u32> {
        self.check(a)?;
        if self.coset_containing(a)?[0] != a {
            return Err(Error::InvalidParameters(format!(
                "{a} is not a coset representative"
            )));
        }
        Ok(self.coset_containing((self.n - a) % self.n)?[0])
    }

    /// `{-x mod n : x in set}`, sorted.
    pub fn negate(&self, set: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = set
            .iter()
            .map(|&x| (self.n - x % self.n) % self.n)
            .collect();
        out.sort_unstable();
        out
    }

    /// Union of the first `t + 1` cosets.
    pub fn initial_union(&self, t: usize) -> Result<Vec<u32>> {
        if t > self.z() {
            return Err(Error::IndexOutOfRange {
                index: t,
                max: self.z(),
            });
        }
        let reps: Vec<u32> = self.reps()[..=t].to_vec();
        self.closure(&reps)
    }

    /// `a_{t+1} + 1`.
    pub fn bch_bound(&self, t: usize) -> Result<u32> {
        if t >= self.z() {
            return Err(Error::IndexOutOfRange {
                index: t,
                max: self.z().saturating_sub(1),
            });
        }
        Ok(self.cosets[t + 1][0] + 1)
    }
}

/// Complement of `-Δ`: the defining set of the dual of `E_Δ` restricted to the subfield.
pub fn dual_defining_set(cosets: &CosetStructure, delta: &[u32]) -> Result<Vec<u32>> {
    if !cosets.is_closed(delta)? {
        return Err(Error::NotCosetClosed);
    }
    let neg = cosets.negate(delta);
    let mut member = vec![false; cosets.n() as usize];
    for x in neg {
        member[x as usize] = true;
    }
    Ok((0..cosets.n()).filter(|&x| !member[x as usize]).collect())
}

/// Largest `δ + s` such that `{b + i·a1 + j·a2 : 0 ≤ i ≤ δ-2, 0 ≤ j ≤ s}`
/// lies in `set`, with `gcd(a1, n) = 1` and `gcd(a2, n) < δ`. The values
/// `b + j·a2` are kept distinct. An empty set gives 1 and the full set `n + 1`.
pub fn hartmann_tzeng_bound(n: u32, set: &[u32]) -> Result<u32> {
    let nu = n as usize;
    let mut mem = vec![false; nu];
    for &x in set {
        if x >= n {
            return Err(Error::ExponentOutOfRange(x));
        }
        mem[x as usize] = true;
    }
    let size = mem.iter().filter(|&&m| m).count();
    if size == 0 {
        return Ok(1);
    }
    if size == nu {
        return Ok(n + 1);
    }
    let mut best = 2;
    let mut run = vec![0usize; nu];
    for a1 in 1..nu.max(2) {
        if a1.gcd(&nu) != 1 {
            continue;
        }
        // run[b] = number of consecutive members b, b+a1, b+2a1, ...
        // Walk the single cycle backwards starting just after a non-member.
        let start = (0..nu).find(|&x| !mem[x]).expect("set is not full");
        let mut x = start;
        let mut len = 0;
        for _ in 0..nu {
            x = (x + nu - a1 % nu) % nu;
            len = if mem[x] { len + 1 } else { 0 };
            run[x] = len;
        }
        for b in 0..nu {
            let r = run[b];
            if r == 0 {
                continue;
            }
            best = best.max(r as u32 + 1);
            for delta in 2..=r + 1 {
                let need = delta - 1;
                for a2 in 1..nu {
                    let g = a2.gcd(&nu);
                    if g >= delta {
                        continue;
                    }
                    let period = nu / g;
                    if (delta + period - 1) as u32 <= best {
                        continue;
                    }
                    let mut s = 0;
                    let mut y = (b + a2) % nu;
                    while s + 1 < period && run[y] >= need {
                        s += 1;
                        y = (y + a2) % nu;
                    }
                    best = best.max((delta + s) as u32);
                }
            }
        }
    }
    Ok(best)
}

/// The order of `q` modulo `n`.
fn multiplicative_order(q: u32, n: u32) -> Result<u32> {
    if n.gcd(&q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    if n == 1 {
        return Ok(1);
    }
    let mut x = q as u64 % n as u64;
    let mut k = 1;
    while x != 1 {
        x = x * q as u64 % n as u64;
        k += 1;
    }
    Ok(k)
}

/// Code spanned by the evaluations of `X^i`, `i ∈ Δ`, at the powers of the
/// canonical primitive `n`-th root of unity.
#[derive(Debug, Clone)]
pub struct EvaluationCode {
    pub big_field: Arc<FiniteField>,
    pub n: u32,
    pub delta: Vec<u32>,
    pub alpha: u32,
    pub gen: MatrixGF,
}

impl EvaluationCode {
    pub fn new(big_field: Arc<FiniteField>, n: u32, delta: &[u32]) -> Result<Self> {
        let alpha = big_field.primitive_nth_root(n)?;
        let mut delta = delta.to_vec();
        delta.sort_unstable();
        delta.dedup();
        if let Some(&bad) = delta.iter().find(|&&i| i >= n) {
            return Err(Error::ExponentOutOfRange(bad));
        }
        let f = &big_field;
        let rows: Vec<Vec<u32>> = delta
            .iter()
            .map(|&i| {
                let step = f.pow(alpha, i as u64);
                let mut v = 1;
                (0..n)
                    .map(|_| {
                        let out = v;
                        v = f.mul(v, step);
                        out
                    })
                    .collect()
            })
            .collect();
        let gen = MatrixGF::from_rows(big_field.clone(), n as usize, &rows)?;
        Ok(EvaluationCode {
            big_field,
            n,
            delta,
            alpha,
            gen,
        })
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::from_generator(&self.gen)
    }
}

/// Subfield subcode of `E_Δ` via the relative trace of `γ_s · ev(X^a)`,
/// with `γ_s = x^s` running over a basis of the big field over the subfield
/// and `a` over the coset representatives in `Δ`.
pub fn subfield_subcode(e: &EvaluationCode, emb: &Embedding) -> Result<LinearCode> {
    let big = emb.big();
    let sub = emb.sub();
    if **big != *e.big_field {
        return Err(Error::FieldMismatch);
    }
    let cosets = CosetStructure::new(e.n, sub.order())?;
    if !cosets.is_closed(&e.delta)? {
        return Err(Error::NotCosetClosed);
    }
    let m = big.degree() / sub.degree();
    let x = if big.degree() > 1 { big.p() } else { 1 };
    let n = e.n as usize;
    let mut rows = Vec::new();
    for (idx, &a) in e.delta.iter().enumerate() {
        if cosets.coset_containing(a)?[0] != a {
            continue;
        }
        let ev = e.gen.row(idx);
        for s in 0..m {
            let gamma = big.pow(x, s as u64);
            let row = ev
                .iter()
                .map(|&v| {
                    let t = big.trace(big.mul(gamma, v), sub.degree())?;
                    emb.restrict(t)
                        .ok_or_else(|| Error::Inconsistent("trace left the subfield".into()))
                })
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
        }
    }
    let code = if rows.is_empty() {
        LinearCode::zero(sub.clone(), n)
    } else {
        LinearCode::from_rows(sub.clone(), n, &rows)?
    };
    if code.k() != e.delta.len() {
        return Err(Error::Inconsistent(format!(
            "subfield subcode has dimension {}, expected {}",
            code.k(),
            e.delta.len()
        )));
    }
    Ok(code)
}

/// Field pair, cosets and root of unity shared by all codes of length `n` over `GF(q)`.
#[derive(Debug, Clone)]
pub struct BchFamily {
    pub sub: Arc<FiniteField>,
    pub big: Arc<FiniteField>,
    pub embedding: Embedding,
    pub cosets: CosetStructure,
    pub n: u32,
}

/// Output of the BCH-type asymmetric construction.
#[derive(Debug, Clone)]
pub struct BchConstruction {
    pub s: usize,
    pub t: usize,
    pub delta1: Vec<u32>,
    pub delta2: Vec<u32>,
    pub c1: LinearCode,
    pub c2: LinearCode,
    pub dz_bound: u32,
    pub dx_bound: u32,
    pub params: AsymEaqeccParams,
}

impl BchFamily {
    /// `big` defaults to the smallest extension `GF(q^m)` with `n | q^m - 1`.
    pub fn new(q: u64, n: u32, big: Option<&str>) -> Result<Self> {
        let sub = Arc::new(FiniteField::with_order(q)?);
        let cosets = CosetStructure::new(n, sub.order())?;
        let big = match big {
            Some(d) => Arc::new(FiniteField::parse(d)?),
            None => {
                let m = multiplicative_order(sub.order(), n)?;
                Arc::new(FiniteField::new(sub.p(), sub.degree() * m)?)
            }
        };
        if big.p() != sub.p() || big.degree() % sub.degree() != 0 {
            return Err(Error::NotASubfield {
                sub: sub.degree(),
                degree: big.degree(),
            });
        }
        let embedding = big.embed(&sub)?;
        big.primitive_nth_root(n)?;
        Ok(BchFamily {
            sub,
            big,
            embedding,
            cosets,
            n,
        })
    }

    /// `E_Δ|_{F_q}` for a coset-closed `Δ`.
    pub fn code(&self, delta: &[u32]) -> Result<LinearCode> {
        let e = EvaluationCode::new(self.big.clone(), self.n, delta)?;
        subfield_subcode(&e, &self.embedding)
    }

    /// Code for the union of the cosets containing `elements`.
    pub fn code_from_cosets(&self, elements: &[u32]) -> Result<(Vec<u32>, LinearCode)> {
        let delta = self.cosets.closure(elements)?;
        let code = self.code(&delta)?;
        Ok((delta, code))
    }

    /// Dual defining set, checked against the dual computed by elimination.
    pub fn verified_dual_defining_set(&self, delta: &[u32]) -> Result<Vec<u32>> {
        let dual_set = dual_defining_set(&self.cosets, delta)?;
        let direct = self.code(delta)?.dual();
        let via_set = self.code(&dual_set)?;
        if direct != via_set {
            return Err(Error::Inconsistent(
                "dual defining set disagrees with the computed dual".into(),
            ));
        }
        Ok(dual_set)
    }

    pub fn bch_asym_code(
        &self,
        s: usize,
        t: usize,
        opts: &DistanceOptions,
    ) -> Result<BchConstruction> {
        let cs = &self.cosets;
        let z = cs.z();
        if s >= t {
            return Err(Error::InvalidParameters(format!(
                "need s < t, got s = {s}, t = {t}"
            )));
        }
        if t + 1 > z {
            return Err(Error::IndexOutOfRange {
                index: t,
                max: z.saturating_sub(1),
            });
        }
        let reps = cs.reps();
        let sizes = cs.sizes();
        let delta1 = cs.initial_union(t)?;
        let recips = (0..=s)
            .map(|j| cs.reciprocal_rep(reps[j]))
            .collect::<Result<Vec<u32>>>()?;
        let delta2 = cs.closure(&recips)?;
        let c1 = self.code(&delta1)?;
        let c2 = self.code(&delta2)?;
        let k1: usize = sizes[..=t].iter().sum();
        let k2: usize = sizes[..=s].iter().sum();
        if c1.k() != k1 || c2.k() != k2 {
            return Err(Error::Inconsistent(format!(
                "dimensions ({}, {}) differ from coset sums ({k1}, {k2})",
                c1.k(),
                c2.k()
            )));
        }
        let dz_bound = cs.bch_bound(t)?;
        let dx_bound = cs.bch_bound(s)?;
        let opts = DistanceOptions {
            dz_bound: Some(dz_bound),
            dx_bound: Some(dx_bound),
            ..opts.clone()
        };
        let params = asym_params(&c1, &c2, &opts)?;
        if params.c != k2 {
            return Err(Error::Inconsistent(format!(
                "entanglement {} differs from {k2}",
                params.c
            )));
        }
        Ok(BchConstruction {
            s,
            t,
            delta1,
            delta2,
            c1,
            c2,
            dz_bound,
            dx_bound,
            params,
        })
    }
}

/// Closed-form parameters for the case where every nonzero coset used has
/// size `ℓ/r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorollaryParams {
    pub q: u32,
    pub n: u32,
    pub k: u32,
    pub dz_bound: u32,
    pub dx_bound: u32,
    pub c: u32,
}

pub fn corollary_params(
    p: u32,
    r: u32,
    ell: u32,
    n: u32,
    s: usize,
    t: usize,
) -> Result<CorollaryParams> {
    if r == 0 || !ell.is_multiple_of(r) {
        return Err(Error::NotASubfield {
            sub: r,
            degree: ell,
        });
    }
    let q = FiniteField::new(p, r)?.order() as u128;
    let big = (p as u128).pow(ell);
    let m = ell / r;
    let qf = q.pow(ell / (2 * r));
    let nn = n as u128;
    if !(qf < nn && nn < big) {
        return Err(Error::ConditionViolated(format!(
            "need {qf} < n <= {}, got n = {n}",
            big - 1
        )));
    }
    if !(big - 1).is_multiple_of(nn) {
        return Err(Error::NoRootOfUnity {
            n,
            order: (big as u64).min(u32::MAX as u64) as u32,
        });
    }
    let cs = CosetStructure::new(n, q as u32)?;
    if s >= t {
        return Err(Error::InvalidParameters(format!(
            "need s < t, got s = {s}, t = {t}"
        )));
    }
    if t + 1 > cs.z() {
        return Err(Error::IndexOutOfRange {
            index: t,
            max: cs.z().saturating_sub(1),
        });
    }
    let reps = cs.reps();
    let at1 = reps[t + 1] as u128;
    // a_{t+1} <= n q^{⌊ℓ/2r⌋} / (p^ℓ - 1), compared without division.
    if at1 < 2 || at1 * (big - 1) > nn * qf || at1 > nn {
        return Err(Error::ConditionViolated(format!(
            "a_(t+1) = {at1} outside [2, min(n q^floor(l/2r) / (p^l - 1), n)]"
        )));
    }
    let sizes = cs.sizes();
    if sizes[1..=t].iter().any(|&z| z as u32 != m) {
        return Err(Error::Inconsistent(format!(
            "a nonzero coset among the first {t} has size other than {m}"
        )));
    }
    // Number of nonzero cosets below a_{j+1}: ⌈(a_{j+1} - 1)(1 - 1/q)⌉.
    let count = |a: u128| ((a - 1) * (q - 1)).div_ceil(q) as u32;
    let as1 = reps[s + 1] as u128;
    if count(at1) != t as u32 || count(as1) != s as u32 {
        return Err(Error::Inconsistent(
            "coset count differs from the closed form".into(),
        ));
    }
    Ok(CorollaryParams {
        q: q as u32,
        n,
        k: n - m * t as u32 - 1,
        dz_bound: at1 as u32 + 1,
        dx_bound: as1 as u32 + 1,
        c: m * s as u32 + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{min_weight, DEFAULT_BUDGET};

    #[test]
    fn cosets_binary_15() {
        let cs = CosetStructure::new(15, 2).unwrap();
        assert_eq!(cs.reps(), vec![0, 1, 3, 5, 7]);
        assert_eq!(cs.sizes(), vec![1, 4, 4, 2, 4]);
        assert_eq!(cs.reciprocal_rep(1).unwrap(), 7);
        assert_eq!(cs.reciprocal_rep(0).unwrap(), 0);
        assert!(cs.reciprocal_rep(2).is_err());
    }

    #[test]
    fn cosets_quaternary_15() {
        let cs = CosetStructure::new(15, 4).unwrap();
        assert_eq!(cs.reps(), vec![0, 1, 2, 3, 5, 6, 7, 10, 11]);
        assert_eq!(cs.coset_containing(1).unwrap(), &[1, 4]);
        assert_eq!(cs.coset_containing(5).unwrap(), &[5]);
        assert_eq!(cs.bch_bound(1).unwrap(), 3);
        assert_eq!(cs.bch_bound(0).unwrap(), 2);
        assert!(cs.bch_bound(8).is_err());
    }

    #[test]
    fn cosets_misc() {
        let cs = CosetStructure::new(24, 5).unwrap();
        assert_eq!(cs.coset_containing(23).unwrap(), &[19, 23]);
        assert_eq!(cs.reciprocal_rep(1).unwrap(), 19);
        let trivial = CosetStructure::new(6, 7).unwrap();
        assert!(trivial.sizes().iter().all(|&s| s == 1));
        assert_eq!(
            CosetStructure::new(15, 3).unwrap_err(),
            Error::NotCoprime { n: 15, q: 3 }
        );
        let cs = CosetStructure::new(63, 8).unwrap();
        assert_eq!(cs.bch_bound(5).unwrap(), 7);
    }

    #[test]
    fn evaluation_codes() {
        let f7 = Arc::new(FiniteField::new(7, 1).unwrap());
        let rep = EvaluationCode::new(f7.clone(), 6, &[0]).unwrap().code();
        assert_eq!(rep.generator().row(0), &[1; 6]);
        let full = EvaluationCode::new(f7.clone(), 6, &(0..6).collect::<Vec<_>>()).unwrap();
        assert_eq!(full.code().k(), 6);
        let e = EvaluationCode::new(f7.clone(), 6, &[2]).unwrap();
        let a = e.alpha;
        assert_eq!(f7.element_order(a).unwrap(), 6);
        let a2 = f7.mul(a, a);
        let a4 = f7.mul(a2, a2);
        assert_eq!(e.gen.row(0), &[1, a2, a4, 1, a2, a4]);
        assert_eq!(
            EvaluationCode::new(f7.clone(), 6, &[6]).unwrap_err(),
            Error::ExponentOutOfRange(6)
        );
        assert!(EvaluationCode::new(f7, 5, &[0]).is_err());
    }

    #[test]
    fn subfield_dimensions() {
        let fam = BchFamily::new(4, 15, None).unwrap();
        assert_eq!(fam.big.order(), 16);
        let (_, c) = fam.code_from_cosets(&[0, 1]).unwrap();
        assert_eq!(c.k(), 3);
        let fam2 = BchFamily::new(2, 15, None).unwrap();
        let (d, c) = fam2.code_from_cosets(&[0, 1, 3, 5]).unwrap();
        assert_eq!(d.len(), 11);
        assert_eq!(c.k(), 11);
        let (_, rep) = fam2.code_from_cosets(&[0]).unwrap();
        assert_eq!(rep.generator().row(0), &[1; 15]);
        assert_eq!(fam2.code(&[1]).unwrap_err(), Error::NotCosetClosed);
    }

    #[test]
    fn dual_sets() {
        let fam = BchFamily::new(4, 15, None).unwrap();
        let d = fam.verified_dual_defining_set(&[0, 1, 4]).unwrap();
        assert_eq!(d.len(), 12);
        assert_eq!(fam.code(&d).unwrap().k(), 12);
        let all: Vec<u32> = (0..15).collect();
        assert!(fam.verified_dual_defining_set(&all).unwrap().is_empty());
        assert_eq!(fam.verified_dual_defining_set(&[]).unwrap(), all);
        // Plain complement is not the dual for a non-self-reciprocal set.
        let plain: Vec<u32> = (0..15).filter(|x| ![0, 1, 4].contains(x)).collect();
        assert_ne!(
            fam.code(&plain).unwrap(),
            fam.code(&[0, 1, 4]).unwrap().dual()
        );
    }

    #[test]
    fn hartmann_tzeng_examples() {
        assert_eq!(hartmann_tzeng_bound(15, &[]).unwrap(), 1);
        assert_eq!(
            hartmann_tzeng_bound(15, &(0..15).collect::<Vec<_>>()).unwrap(),
            16
        );
        assert_eq!(hartmann_tzeng_bound(15, &[0, 1, 2, 3]).unwrap(), 5);
        let cs = CosetStructure::new(15, 2).unwrap();
        let d = cs.closure(&[0, 1, 3, 5]).unwrap();
        assert!(hartmann_tzeng_bound(15, &d).unwrap() >= 8);
        let cs = CosetStructure::new(31, 2).unwrap();
        let d = cs.closure(&[0, 1, 5, 7, 15]).unwrap();
        assert_eq!(hartmann_tzeng_bound(31, &d).unwrap(), 12);
        assert!(hartmann_tzeng_bound(15, &[15]).is_err());
    }

    #[test]
    fn hartmann_tzeng_is_sound_on_small_cyclic_codes() {
        // The dual of E_Δ|F_2 has zeros Δ, so its distance is bounded by HT(Δ).
        let fam = BchFamily::new(2, 15, None).unwrap();
        let reps = fam.cosets.reps();
        for mask in 1u32..(1 << reps.len()) - 1 {
            let chosen: Vec<u32> = (0..reps.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| reps[i])
                .collect();
            let (delta, code) = fam.code_from_cosets(&chosen).unwrap();
            let d = min_weight(&code.dual(), DEFAULT_BUDGET)
                .unwrap()
                .value()
                .unwrap();
            let ht = hartmann_tzeng_bound(15, &delta).unwrap();
            assert!(d >= ht, "Δ={delta:?}: exact {d} < HT {ht}");
        }
    }

    #[test]
    fn bch_construction_small() {
        let fam = BchFamily::new(4, 15, None).unwrap();
        let b = fam
            .bch_asym_code(0, 1, &DistanceOptions::default())
            .unwrap();
        assert_eq!(b.params.to_string(), "[[15,12,3/2;1]]_4");
        assert!(fam
            .bch_asym_code(1, 1, &DistanceOptions::default())
            .is_err());
        assert!(fam
            .bch_asym_code(0, 8, &DistanceOptions::default())
            .is_err());
    }

    #[test]
    fn corollary_examples() {
        let c = corollary_params(2, 2, 4, 15, 0, 1).unwrap();
        assert_eq!((c.k, c.dz_bound, c.dx_bound, c.c), (12, 3, 2, 1));
        let c = corollary_params(2, 2, 4, 15, 0, 2).unwrap();
        assert_eq!(c.k, 10);
        assert!(matches!(
            corollary_params(2, 2, 4, 15, 0, 3),
            Err(Error::ConditionViolated(_))
        ));
        let c = corollary_params(2, 1, 4, 15, 0, 1).unwrap();
        assert_eq!((c.k, c.dz_bound, c.dx_bound, c.c), (10, 4, 2, 1));
        assert!(corollary_params(2, 4, 8, 51, 1, 4).is_err());
        assert!(corollary_params(2, 3, 8, 51, 0, 1).is_err());
    }
}
