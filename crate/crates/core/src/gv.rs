//! Finite and asymptotic Gilbert-Varshamov bounds for asymmetric
//! entanglement-assisted codes.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::split_prime_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GvQuery {
    pub q: u64,
    pub n: u32,
    pub k1: u32,
    pub k2: u32,
    pub c: u32,
    pub dz: u32,
    pub dx: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ThresholdPair {
    pub dz: u32,
    pub dx: u32,
}

impl std::fmt::Display for ThresholdPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.dz, self.dx)
    }
}

/// How the inequality is read when deciding whether a pair is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GvRule {
    /// The sum of both terms is below 1.
    Sum,
    /// Each of the two terms is separately below 1.
    PerTerm,
}

fn validate(q: u64, n: u32, k1: u32, k2: u32, c: u32) -> Result<()> {
    split_prime_power(q)?;
    if n == 0 {
        return Err(Error::InvalidParameters("n must be positive".into()));
    }
    if k1 > n || k2 > n {
        return Err(Error::InvalidParameters(format!(
            "k1 = {k1}, k2 = {k2} exceed n = {n}"
        )));
    }
    if c > k1.min(k2) || c + n < k1 + k2 {
        return Err(Error::InvalidParameters(format!(
            "c = {c} outside [k1 + k2 - n, min(k1, k2)]"
        )));
    }
    Ok(())
}

/// Integer pieces of the inequality: `A·S(d_z) + B·S(d_x) < D` with
/// `S(d) = Σ_{i=1}^{d-1} C(n,i)(q-1)^i`.
struct Terms {
    a: BigUint,
    b: BigUint,
    denom: BigUint,
    /// partial[d] = S(d) for d = 0..=n+2 (S(0) = S(1) = 0).
    partial: Vec<BigUint>,
}

impl Terms {
    fn new(q: u64, n: u32, k1: u32, k2: u32, c: u32) -> Self {
        let qb = BigUint::from(q);
        let pow = |e: u32| qb.pow(e);
        let a = pow(n - k1) - pow(k2 - c);
        let b = pow(n - k2) - pow(k1 - c);
        let denom = pow(n) - BigUint::one();
        let mut partial = vec![BigUint::zero(), BigUint::zero()];
        let mut binom = BigUint::one();
        let mut qpow = BigUint::one();
        let mut acc = BigUint::zero();
        for i in 1..=n + 1 {
            if i <= n {
                binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
                qpow *= BigUint::from(q - 1);
                acc += &binom * &qpow;
            }
            partial.push(acc.clone());
        }
        Terms {
            a,
            b,
            denom,
            partial,
        }
    }

    fn s(&self, d: u32) -> &BigUint {
        &self.partial[(d as usize).min(self.partial.len() - 1)]
    }

    fn numerator(&self, dz: u32, dx: u32) -> BigUint {
        &self.a * self.s(dz) + &self.b * self.s(dx)
    }

    fn holds(&self, dz: u32, dx: u32, rule: GvRule) -> bool {
        match rule {
            GvRule::Sum => self.numerator(dz, dx) < self.denom,
            GvRule::PerTerm => {
                &self.a * self.s(dz) < self.denom && &self.b * self.s(dx) < self.denom
            }
        }
    }
}

fn check_query(qr: &GvQuery) -> Result<()> {
    validate(qr.q, qr.n, qr.k1, qr.k2, qr.c)?;
    if qr.dz == 0 || qr.dx == 0 {
        return Err(Error::InvalidParameters(
            "distances must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Exact value of the left-hand side.
pub fn gv_finite_sum(qr: &GvQuery) -> Result<BigRational> {
    check_query(qr)?;
    let t = Terms::new(qr.q, qr.n, qr.k1, qr.k2, qr.c);
    Ok(BigRational::new(
        BigInt::from(t.numerator(qr.dz, qr.dx)),
        BigInt::from(t.denom.clone()),
    ))
}

/// The two summands separately.
pub fn gv_finite_terms(qr: &GvQuery) -> Result<(BigRational, BigRational)> {
    check_query(qr)?;
    let t = Terms::new(qr.q, qr.n, qr.k1, qr.k2, qr.c);
    let d = BigInt::from(t.denom.clone());
    Ok((
        BigRational::new(BigInt::from(&t.a * t.s(qr.dz)), d.clone()),
        BigRational::new(BigInt::from(&t.b * t.s(qr.dx)), d),
    ))
}

/// True iff the sum is below 1, so that a code with these parameters exists.
pub fn gv_finite_holds(qr: &GvQuery) -> Result<bool> {
    gv_finite_holds_with(qr, GvRule::Sum)
}

pub fn gv_finite_holds_with(qr: &GvQuery, rule: GvRule) -> Result<bool> {
    check_query(qr)?;
    Ok(Terms::new(qr.q, qr.n, qr.k1, qr.k2, qr.c).holds(qr.dz, qr.dx, rule))
}

/// Lexicographic maximum (first coordinate first) of the pairs in
/// `1..=n+1` that are certified while one of their two upward neighbours is not.
pub fn gv_threshold(q: u64, n: u32, k1: u32, k2: u32, c: u32) -> Result<ThresholdPair> {
    gv_threshold_with(q, n, k1, k2, c, GvRule::Sum)
}

pub fn gv_threshold_with(
    q: u64,
    n: u32,
    k1: u32,
    k2: u32,
    c: u32,
    rule: GvRule,
) -> Result<ThresholdPair> {
    threshold_set(q, n, k1, k2, c, rule)?
        .into_iter()
        .max_by_key(|p| (p.dz, p.dx))
        .ok_or(Error::EmptyThresholdSet)
}

/// Every member of the threshold set, in lexicographic order.
pub fn threshold_set(
    q: u64,
    n: u32,
    k1: u32,
    k2: u32,
    c: u32,
    rule: GvRule,
) -> Result<Vec<ThresholdPair>> {
    validate(q, n, k1, k2, c)?;
    let t = Terms::new(q, n, k1, k2, c);
    let mut out = Vec::new();
    for d1 in 1..=n + 1 {
        for d2 in 1..=n + 1 {
            if t.holds(d1, d2, rule) && (!t.holds(d1 + 1, d2, rule) || !t.holds(d1, d2 + 1, rule)) {
                out.push(ThresholdPair { dz: d1, dx: d2 });
            }
        }
    }
    Ok(out)
}

/// Values of the sum on the grid `1..=max_d` squared, as floating point for display.
pub fn gv_grid(q: u64, n: u32, k1: u32, k2: u32, c: u32, max_d: u32) -> Result<Vec<Vec<f64>>> {
    validate(q, n, k1, k2, c)?;
    let t = Terms::new(q, n, k1, k2, c);
    let denom = BigInt::from(t.denom.clone());
    Ok((1..=max_d)
        .map(|dz| {
            (1..=max_d)
                .map(|dx| {
                    BigRational::new(BigInt::from(t.numerator(dz, dx)), denom.clone())
                        .to_f64()
                        .unwrap_or(f64::INFINITY)
                })
                .collect()
        })
        .collect())
}

/// The exact rational written by the shortest decimal representation of `x`.
pub fn decimal_rational(x: f64) -> Result<BigRational> {
    if !x.is_finite() {
        return Err(Error::InvalidParameters(format!("{x} is not finite")));
    }
    let s = format!("{x}");
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.as_str()),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let all: String = format!("{int_part}{frac_part}");
    let num: BigInt = all
        .parse()
        .map_err(|_| Error::InvalidParameters(format!("cannot read {s} as a decimal")))?;
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

const PREC: u64 = 320;
/// Values within this distance of the boundary count as the boundary.
const MARGIN_BITS: u64 = 200;

/// atanh(y) for y = num/den with |y| ≤ 1/3, scaled by 2^PREC.
fn atanh_fixed(num: &BigInt, den: &BigInt) -> BigInt {
    let scale = BigInt::one() << PREC;
    let y = (num << PREC) / den;
    let y2 = (&y * &y) / &scale;
    let mut term = y;
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        sum += &term / BigInt::from(k);
        term = (&term * &y2) / &scale;
        k += 2;
    }
    sum
}

/// ln(num/den) for positive integers, scaled by 2^PREC.
fn ln_fixed(num: &BigUint, den: &BigUint) -> BigInt {
    let k = num.bits() as i64 - den.bits() as i64;
    let (a, b) = if k >= 0 {
        (
            BigInt::from(num.clone()),
            BigInt::from(den.clone() << k as u64),
        )
    } else {
        (
            BigInt::from(num.clone() << (-k) as u64),
            BigInt::from(den.clone()),
        )
    };
    // a/b lies in (1/2, 2), so |(a-b)/(a+b)| < 1/3.
    let ln2 = atanh_fixed(&BigInt::one(), &BigInt::from(3)) * 2;
    BigInt::from(k) * ln2 + atanh_fixed(&(&a - &b), &(&a + &b)) * 2
}

fn ln_rational(r: &BigRational) -> BigInt {
    ln_fixed(
        &r.numer().to_biguint().expect("positive"),
        &r.denom().to_biguint().expect("positive"),
    )
}

fn mul_fixed(r: &BigRational, x: &BigInt) -> BigInt {
    (r.numer() * x).div_floor(r.denom())
}

/// Sign of `h_q(δ) + δ log_q(q-1) - K`, times ln q; `Equal` inside the margin.
fn entropy_gap(delta: &BigRational, k: &BigRational, q: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let lnq = ln_fixed(&BigUint::from(q), &BigUint::one());
    if delta.is_zero() {
        return BigRational::zero().cmp(k);
    }
    let one = BigRational::one();
    let rest = &one - delta;
    let mut v = -mul_fixed(delta, &ln_rational(delta)) - mul_fixed(&rest, &ln_rational(&rest));
    if q > 2 {
        v += mul_fixed(delta, &ln_fixed(&BigUint::from(q - 1), &BigUint::one()));
    }
    v -= mul_fixed(k, &lnq);
    let margin = BigInt::one() << (PREC - MARGIN_BITS);
    if v.abs() <= margin {
        Ordering::Equal
    } else if v.sign() == Sign::Minus {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `h_q(y) = -y log_q y - (1-y) log_q(1-y)`, as floating point.
pub fn q_entropy(y: f64, q: f64) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    if y >= 1.0 {
        return 0.0;
    }
    (-y * y.ln() - (1.0 - y) * (1.0 - y).ln()) / q.ln()
}

struct Rates {
    k1: BigRational,
    k2: BigRational,
    dz: BigRational,
    dx: BigRational,
    lambda: BigRational,
}

fn rates(k1: f64, k2: f64, dz: f64, dx: f64, lambda: f64) -> Result<Rates> {
    let r = Rates {
        k1: decimal_rational(k1)?,
        k2: decimal_rational(k2)?,
        dz: decimal_rational(dz)?,
        dx: decimal_rational(dx)?,
        lambda: decimal_rational(lambda)?,
    };
    let one = BigRational::one();
    let zero = BigRational::zero();
    if r.lambda < &r.k1 + &r.k2 - &one || r.lambda > r.k1.clone().min(r.k2.clone()) {
        return Err(Error::InvalidParameters(format!(
            "lambda = {lambda} outside [K1 + K2 - 1, min(K1, K2)]"
        )));
    }
    for (name, d) in [("delta_z", &r.dz), ("delta_x", &r.dx)] {
        if *d < zero || *d >= one {
            return Err(Error::InvalidParameters(format!(
                "{name} must lie in [0, 1)"
            )));
        }
    }
    Ok(r)
}

/// Both strict inequalities `h_q(δ_z) + δ_z log_q(q-1) < K1` and the
/// `δ_x`, `K2` analogue. Rates are read as the decimals they print as.
pub fn gv_asymptotic_holds(
    k1: f64,
    k2: f64,
    delta_z: f64,
    delta_x: f64,
    lambda: f64,
    q: u64,
) -> Result<bool> {
    split_prime_power(q)?;
    let r = rates(k1, k2, delta_z, delta_x, lambda)?;
    Ok(asymptotic_holds(&r, q))
}

fn asymptotic_holds(r: &Rates, q: u64) -> bool {
    use std::cmp::Ordering::Less;
    entropy_gap(&r.dz, &r.k1, q) == Less && entropy_gap(&r.dx, &r.k2, q) == Less
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AsymptoticParams {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub dz: u64,
    pub dx: u64,
    pub c: u64,
}

impl std::fmt::Display for AsymptoticParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{},{},{}/{};{}]]_{}",
            self.n, self.k, self.dz, self.dx, self.c, self.q
        )
    }
}

/// `[[n, ⌊n - nK1 - nK2 + nλ⌋, ⌊nδ_z⌋/⌊nδ_x⌋; ⌊nλ⌋]]_q`.
pub fn asymptotic_params(
    k1: f64,
    k2: f64,
    delta_z: f64,
    delta_x: f64,
    lambda: f64,
    n: u64,
    q: u64,
) -> Result<AsymptoticParams> {
    split_prime_power(q)?;
    let r = rates(k1, k2, delta_z, delta_x, lambda)?;
    if !asymptotic_holds(&r, q) {
        return Err(Error::ConditionViolated(
            "the asymptotic inequalities do not hold".into(),
        ));
    }
    let nr = BigRational::from_integer(BigInt::from(n));
    let floor = |x: BigRational| -> u64 { x.floor().to_integer().to_u64().unwrap_or(0) };
    Ok(AsymptoticParams {
        q,
        n,
        k: floor(&nr - &nr * &r.k1 - &nr * &r.k2 + &nr * &r.lambda),
        dz: floor(&nr * &r.dz),
        dx: floor(&nr * &r.dx),
        c: floor(&nr * &r.lambda),
    })
}
