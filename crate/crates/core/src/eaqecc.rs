//! Parameters of asymmetric entanglement-assisted codes built from two
//! classical codes.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bch::EvaluationCode;
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::MatrixGF;
use crate::weight::{
    min_weight_with, relative_min_weight_with, Distance, SearchOptions, WeightReport,
};

/// `[[n, k, d_z/d_x; c]]_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AsymEaqeccParams {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub dz: WeightReport,
    pub dx: WeightReport,
    pub c: usize,
}

impl AsymEaqeccParams {
    /// Either distance is taken over an empty set.
    pub fn is_degenerate(&self) -> bool {
        self.dz.distance == Distance::EmptySet || self.dx.distance == Distance::EmptySet
    }

    /// Both distances are exact.
    pub fn is_exact(&self) -> bool {
        self.dz.exact && self.dx.exact
    }
}

impl fmt::Display for AsymEaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{},{}/{};{}]]_{}",
            self.n, self.k, self.dz, self.dx, self.c, self.q
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct DistanceOptions {
    pub search: SearchOptions,
    /// Proven lower bounds used when enumeration exceeds the budget.
    pub dz_bound: Option<u32>,
    pub dx_bound: Option<u32>,
}

impl DistanceOptions {
    pub fn with_budget(budget: u64) -> Self {
        DistanceOptions {
            search: SearchOptions::with_budget(budget),
            ..Default::default()
        }
    }
}

/// The three expressions for the entanglement parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EntanglementWitness {
    /// rank(H1 H2^T).
    pub rank: usize,
    /// dim C1 - dim(C1 ∩ C2^⊥).
    pub via_c1: usize,
    /// dim C2 - dim(C2 ∩ C1^⊥).
    pub via_c2: usize,
}

fn check_pair(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    if c1.n() != c2.n() {
        return Err(Error::ShapeMismatch(format!(
            "codes of length {} and {}",
            c1.n(),
            c2.n()
        )));
    }
    Ok(())
}

pub fn entanglement_witness(c1: &LinearCode, c2: &LinearCode) -> Result<EntanglementWitness> {
    check_pair(c1, c2)?;
    let rank = c1.generator().mul(&c2.generator().transpose())?.rank();
    let via_c1 = c1.k() - c1.intersect(&c2.dual())?.k();
    let via_c2 = c2.k() - c2.intersect(&c1.dual())?.k();
    Ok(EntanglementWitness {
        rank,
        via_c1,
        via_c2,
    })
}

/// `rank(H1 H2^T)`, checked against both dimension formulas.
pub fn entanglement_c(c1: &LinearCode, c2: &LinearCode) -> Result<usize> {
    let w = entanglement_witness(c1, c2)?;
    if w.rank != w.via_c1 || w.rank != w.via_c2 {
        return Err(Error::Inconsistent(format!(
            "entanglement formulas disagree: {} / {} / {}",
            w.rank, w.via_c1, w.via_c2
        )));
    }
    Ok(w.rank)
}

fn distance(
    a: &LinearCode,
    b: &LinearCode,
    bound: Option<u32>,
    search: &SearchOptions,
) -> Result<WeightReport> {
    match relative_min_weight_with(a, b, search) {
        Ok(r) => {
            if let (Some(v), Some(bound)) = (r.value(), bound) {
                if v < bound {
                    return Err(Error::Inconsistent(format!(
                        "exact distance {v} is below the claimed bound {bound}"
                    )));
                }
            }
            Ok(r)
        }
        Err(Error::BudgetExceeded { .. }) => Ok(WeightReport::bound(bound.unwrap_or(1))),
        Err(e) => Err(e),
    }
}

/// `d_z = wt(C1^⊥ \ (C2 ∩ C1^⊥))`, `d_x = wt(C2^⊥ \ (C1 ∩ C2^⊥))`,
/// `k = n - k1 - k2 + c`.
pub fn asym_params(
    c1: &LinearCode,
    c2: &LinearCode,
    opts: &DistanceOptions,
) -> Result<AsymEaqeccParams> {
    let c = entanglement_c(c1, c2)?;
    let (n, k1, k2) = (c1.n(), c1.k(), c2.k());
    if c > k1.min(k2) || c + n < k1 + k2 {
        return Err(Error::Inconsistent(format!(
            "c = {c} outside the admissible range"
        )));
    }
    let dz = distance(&c1.dual(), c2, opts.dz_bound, &opts.search)?;
    let dx = distance(&c2.dual(), c1, opts.dx_bound, &opts.search)?;
    Ok(AsymEaqeccParams {
        q: c1.field().order(),
        n,
        k: n + c - k1 - k2,
        dz,
        dx,
        c,
    })
}

/// The block form `H_X = [H1; 0]`, `H_Z = [0; H2]`.
pub fn css_stack(c1: &LinearCode, c2: &LinearCode) -> Result<(MatrixGF, MatrixGF)> {
    check_pair(c1, c2)?;
    let f = c1.field().clone();
    let n = c1.n();
    let hx = c1
        .generator()
        .stack(&MatrixGF::zeros(f.clone(), c2.k(), n))?;
    let hz = MatrixGF::zeros(f, c1.k(), n).stack(c2.generator())?;
    Ok((hx, hz))
}

/// `rank(H_X H_Z^T - H_Z H_X^T) / 2`.
pub fn symplectic_c(hx: &MatrixGF, hz: &MatrixGF) -> Result<usize> {
    if hx.rows() != hz.rows() || hx.cols() != hz.cols() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} and {}x{}",
            hx.rows(),
            hx.cols(),
            hz.rows(),
            hz.cols()
        )));
    }
    let a = hx.mul(&hz.transpose())?;
    let b = hz.mul(&hx.transpose())?;
    let rank = a.sub(&b)?.rank();
    if rank % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "alternating form of odd rank {rank}"
        )));
    }
    Ok(rank / 2)
}

/// Puncturing of a nested pair `C2 ⊆ C1` on `c` coordinates:
/// `[[n - c, k1 - k2 + c, d_z/d_x; c]]` with `d_z = wt(C2^⊥ \ C1^⊥)` and
/// `d_x = wt(C1 \ C2)`, valid for `1 ≤ c ≤ min{d(C1^⊥), d(C2)} - 1`.
pub fn punctured_params(
    c1: &LinearCode,
    c2: &LinearCode,
    c: usize,
    opts: &DistanceOptions,
) -> Result<AsymEaqeccParams> {
    check_pair(c1, c2)?;
    if !c2.is_subcode_of(c1)? {
        return Err(Error::NotNested);
    }
    let d1_perp = min_weight_with(&c1.dual(), &opts.search)?;
    let d2 = min_weight_with(c2, &opts.search)?;
    let (Some(d1_perp), Some(d2)) = (d1_perp.value(), d2.value()) else {
        return Err(Error::Degenerate);
    };
    let hi = d1_perp.min(d2) as usize - 1;
    if c < 1 || c > hi {
        return Err(Error::EntanglementOutOfRange { c, lo: 1, hi });
    }
    let dz = relative_min_weight_with(&c2.dual(), &c1.dual(), &opts.search)?;
    let dx = relative_min_weight_with(c1, c2, &opts.search)?;
    Ok(AsymEaqeccParams {
        q: c1.field().order(),
        n: c1.n() - c,
        k: c1.k() - c2.k() + c,
        dz,
        dx,
        c,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Enlargement {
    pub before: AsymEaqeccParams,
    pub after: AsymEaqeccParams,
}

/// Over `F` with `n = |F| - 1`: the pair `E_{2}`, `E_{0, n-1}` against the
/// enlarged pair `E_{1, 2}`, `E_{0, n-1}`.
pub fn enlargement_demo(field: Arc<FiniteField>, opts: &DistanceOptions) -> Result<Enlargement> {
    let q = field.order();
    if q < 4 {
        return Err(Error::FieldTooSmall(q));
    }
    let n = q - 1;
    let code = |delta: &[u32]| -> Result<LinearCode> {
        Ok(EvaluationCode::new(field.clone(), n, delta)?.code())
    };
    let c1 = code(&[2])?;
    let c2 = code(&[0, n - 1])?;
    let c1_big = code(&[1, 2])?;
    let plain = DistanceOptions {
        dz_bound: None,
        dx_bound: None,
        ..opts.clone()
    };
    let before = asym_params(&c1, &c2, &plain)?;
    let after = asym_params(&c1_big, &c2, &plain)?;
    if before.is_degenerate() || after.is_degenerate() {
        return Err(Error::Degenerate);
    }
    if before.k != after.k || before.dx != after.dx {
        return Err(Error::Inconsistent(
            "enlargement changed the rate or d_x".into(),
        ));
    }
    Ok(Enlargement { before, after })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

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

    #[test]
    fn entanglement_examples() {
        let a = code(2, 3, &[vec![1, 1, 1]]);
        let b = code(2, 3, &[vec![1, 0, 1]]);
        assert_eq!(entanglement_c(&a, &b).unwrap(), 0);
        let e = code(2, 3, &[vec![1, 0, 0]]);
        assert_eq!(entanglement_c(&e, &e).unwrap(), 1);
        let f3 = code(3, 3, &[vec![1, 0, 0]]);
        assert_eq!(entanglement_c(&e, &f3).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn zero_codes_give_full_space() {
        let f = gf(3);
        let z = LinearCode::zero(f, 4);
        let p = asym_params(&z, &z, &DistanceOptions::default()).unwrap();
        assert_eq!((p.n, p.k, p.c), (4, 4, 0));
        assert_eq!(p.dz.value(), Some(1));
        assert_eq!(p.dx.value(), Some(1));
        assert_eq!(p.to_string(), "[[4,4,1/1;0]]_3");
    }

    #[test]
    fn degenerate_pair_is_marked() {
        // C2 = C1^⊥ leaves nothing for d_z.
        let c1 = code(2, 3, &[vec![1, 1, 1]]);
        let c2 = c1.dual();
        let p = asym_params(&c1, &c2, &DistanceOptions::default()).unwrap();
        assert!(p.is_degenerate());
        assert_eq!(p.dz.distance, Distance::EmptySet);
    }

    #[test]
    fn budget_fallback_uses_bound() {
        let f = gf(2);
        let c1 = LinearCode::zero(f.clone(), 40);
        let c2 = LinearCode::zero(f, 40);
        let mut opts = DistanceOptions::with_budget(1 << 10);
        opts.search.engine = crate::weight::Engine::CodewordScan;
        opts.dz_bound = Some(1);
        let p = asym_params(&c1, &c2, &opts).unwrap();
        assert!(!p.dz.exact);
        assert_eq!(p.dz.to_string(), "≥1");
        assert_eq!(p.dx.to_string(), "≥1");
    }

    #[test]
    fn symplectic_examples() {
        let f = gf(2);
        let one = MatrixGF::from_rows(f.clone(), 1, &[vec![1]]).unwrap();
        assert_eq!(symplectic_c(&one, &one).unwrap(), 0);
        let a = MatrixGF::from_rows(f.clone(), 2, &[vec![1, 0]]).unwrap();
        let b = MatrixGF::from_rows(f.clone(), 2, &[vec![0, 1]]).unwrap();
        assert!(symplectic_c(&a, &MatrixGF::identity(f, 2)).is_err());
        assert_eq!(symplectic_c(&a, &b).unwrap(), 0);
        let e = code(2, 3, &[vec![1, 0, 0]]);
        let (hx, hz) = css_stack(&e, &e).unwrap();
        assert_eq!(symplectic_c(&hx, &hz).unwrap(), 1);
    }

    fn random_code(q: u64, n: usize, rng: &mut ChaCha8Rng) -> LinearCode {
        let f = gf(q);
        let k = rng.gen_range(0..=n);
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.order())).collect())
            .collect();
        if rows.is_empty() {
            LinearCode::zero(f, n)
        } else {
            LinearCode::from_rows(f, n, &rows).unwrap()
        }
    }

    #[test]
    fn entanglement_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for _ in 0..100 {
                let n = rng.gen_range(1..9);
                let a = random_code(q, n, &mut rng);
                let b = random_code(q, n, &mut rng);
                let w = entanglement_witness(&a, &b).unwrap();
                assert_eq!(w.rank, w.via_c1);
                assert_eq!(w.rank, w.via_c2);
                let c = entanglement_c(&a, &b).unwrap();
                assert_eq!(c, entanglement_c(&b, &a).unwrap());
                assert!(c <= a.k().min(b.k()) && c + n >= a.k() + b.k());
                assert_eq!(c == 0, b.is_subcode_of(&a.dual()).unwrap());
                let (hx, hz) = css_stack(&a, &b).unwrap();
                assert_eq!(symplectic_c(&hx, &hz).unwrap(), c);
                // A nested orthogonal pair has no entanglement.
                let sub = a.intersect(&b).unwrap().intersect(&a.dual()).unwrap();
                assert_eq!(entanglement_c(&a, &sub).unwrap(), 0);
            }
        }
    }

    #[test]
    fn puncturing_examples() {
        let h = hamming74();
        let rep = code(2, 7, &[vec![1; 7]]);
        let opts = DistanceOptions::default();
        let p = punctured_params(&h, &rep, 1, &opts).unwrap();
        assert_eq!(p.to_string(), "[[6,4,2/3;1]]_2");
        let p = punctured_params(&h, &rep, 3, &opts).unwrap();
        assert_eq!(p.to_string(), "[[4,6,2/3;3]]_2");
        assert_eq!(
            punctured_params(&h, &rep, 4, &opts).unwrap_err(),
            Error::EntanglementOutOfRange { c: 4, lo: 1, hi: 3 }
        );
        assert_eq!(
            punctured_params(&h, &rep, 0, &opts).unwrap_err(),
            Error::EntanglementOutOfRange { c: 0, lo: 1, hi: 3 }
        );
        assert_eq!(
            punctured_params(&rep, &h, 1, &opts).unwrap_err(),
            Error::NotNested
        );
    }

    #[test]
    fn enlargement() {
        let opts = DistanceOptions::default();
        for q in [7u64, 8] {
            let e = enlargement_demo(gf(q), &opts).unwrap();
            assert_eq!(e.before.dz.value(), Some(2));
            assert!(e.after.dz.value().unwrap() >= 3);
            assert!(e.before.is_exact() && e.after.is_exact());
            assert_eq!(e.before.dx, e.after.dx);
            assert_eq!(e.before.k, e.after.k);
            assert_eq!((e.before.c, e.after.c), (0, 1));
        }
        assert_eq!(
            enlargement_demo(gf(4), &opts).unwrap_err(),
            Error::Degenerate
        );
        assert_eq!(
            enlargement_demo(gf(3), &opts).unwrap_err(),
            Error::FieldTooSmall(3)
        );
    }
}
