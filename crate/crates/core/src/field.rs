//! Arithmetic in GF(p^r).
//!
//! Elements are integer-coded in the polynomial basis: the value
//! `c_0 + c_1 p + ... + c_{r-1} p^{r-1}` stands for the residue
//! `c_0 + c_1 x + ... + c_{r-1} x^{r-1}` modulo the field's modulus. The
//! modulus is the monic irreducible polynomial of degree `r` whose
//! coefficient list has the smallest such encoding, so every field is
//! reproducible from `(p, r)` alone.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest order for which log/antilog tables are built.
const TABLE_LIMIT: u32 = 1 << 16;
/// Largest odd-characteristic order with a full addition table.
const ADD_TABLE_LIMIT: u32 = 1 << 10;
const MAX_ORDER: u64 = 1 << 31;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q` into `(p, r)`.
pub fn split_prime_power(q: u64) -> Result<(u32, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = factors[0];
    let mut r = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        r += 1;
    }
    Ok((p as u32, r))
}

/// Parses a field designator: `"p^r"` or a prime power written out (`"4"`).
pub fn parse_designator(s: &str) -> Result<(u32, u32)> {
    let s = s.trim();
    let bad = || Error::BadDesignator(s.to_string());
    match s.split_once('^') {
        Some((p, r)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let r: u32 = r.trim().parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if r == 0 {
                return Err(Error::ZeroDegree);
            }
            Ok((p as u32, r))
        }
        None => {
            let q: u64 = s.parse().map_err(|_| bad())?;
            split_prime_power(q)
        }
    }
}

mod poly {
    //! Dense polynomials over GF(p), little-endian coefficient vectors.

    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        let lead_inv = inv_mod(f[df], p);
        while r.len() > df {
            let top = r.len() - 1;
            let c = r[top] as u64 * lead_inv as u64 % p as u64;
            for (j, &fj) in f.iter().enumerate() {
                let idx = top - df + j;
                r[idx] = ((r[idx] as u64 + (p as u64 - c) * fj as u64) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|v| v as u32).collect();
        trim(&mut out);
        out
    }

    pub fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        rem(&mul(a, b, p), f, p)
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        let mut result = 1u64;
        let mut base = a as u64 % p as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        result as u32
    }

    /// Ben-Or test: `f` (monic, degree d) is irreducible iff
    /// gcd(f, x^{p^i} - x) = 1 for every i <= d/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let d = f.len() - 1;
        if d == 1 {
            return true;
        }
        let x = vec![0, 1];
        let mut h = x.clone();
        for _ in 1..=d / 2 {
            // h <- h^p mod f
            let mut acc = vec![1];
            let mut base = h.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_mod(&acc, &base, f, p);
                }
                base = mul_mod(&base, &base, f, p);
                e >>= 1;
            }
            h = acc;
            let g = gcd(f, &sub(&h, &x, p), p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

/// The finite field GF(p^degree).
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    degree: u32,
    order: u32,
    /// Monic modulus, little-endian, length `degree + 1`.
    modulus: Vec<u32>,
    primitive: u32,
    log: Vec<u32>,
    exp: Vec<u32>,
    add_table: Vec<u32>,
    neg_table: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.designator())
    }
}

impl FiniteField {
    /// Builds GF(p^degree) with the lowest-encoding monic irreducible modulus.
    pub fn new(p: u32, degree: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(degree)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge {
                p: p as u64,
                degree,
            })?;
        let modulus = (0..order)
            .map(|e| {
                let mut f = digits(e as u32, p, degree);
                f.push(1);
                f
            })
            .find(|f| poly::is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        let mut field = FiniteField {
            p,
            degree,
            order: order as u32,
            modulus,
            primitive: 0,
            log: Vec::new(),
            exp: Vec::new(),
            add_table: Vec::new(),
            neg_table: Vec::new(),
        };
        if p != 2 && field.order <= TABLE_LIMIT {
            field.neg_table = (0..field.order).map(|a| field.neg_direct(a)).collect();
        }
        if p != 2 && field.order <= ADD_TABLE_LIMIT {
            let q = field.order;
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_direct(a, b);
                }
            }
            field.add_table = table;
        }
        field.primitive = field.find_primitive();
        if field.order <= TABLE_LIMIT {
            let m = (field.order - 1) as usize;
            let mut exp = vec![0; 2 * m.max(1)];
            let mut log = vec![0; field.order as usize];
            let mut x = 1;
            for i in 0..m {
                exp[i] = x;
                exp[i + m] = x;
                log[x as usize] = i as u32;
                x = field.mul_direct(x, field.primitive);
            }
            field.exp = exp;
            field.log = log;
        }
        Ok(field)
    }

    /// Builds the field of order `q` (a prime power).
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, r) = split_prime_power(q)?;
        Self::new(p, r)
    }

    /// Builds the field named by a designator such as `"2^4"` or `"7"`.
    pub fn parse(designator: &str) -> Result<Self> {
        let (p, r) = parse_designator(designator)?;
        Self::new(p, r)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Smallest-encoded generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    pub fn designator(&self) -> String {
        if self.degree == 1 {
            self.p.to_string()
        } else {
            format!("{}^{}", self.p, self.degree)
        }
    }

    pub fn contains(&self, value: u64) -> bool {
        value < self.order as u64
    }

    pub fn element(&self, value: u64) -> Result<Element<'_>> {
        if !self.contains(value) {
            return Err(Error::ElementOutOfRange {
                value,
                order: self.order,
            });
        }
        Ok(Element {
            field: self,
            value: value as u32,
        })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if !self.add_table.is_empty() {
            self.add_table[(a * self.order + b) as usize]
        } else {
            self.add_direct(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else if !self.neg_table.is_empty() {
            self.neg_table[a as usize]
        } else {
            self.neg_direct(a)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.mul_direct(a, b);
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.exp.is_empty() {
            return Ok(self.pow(a, self.order as u64 - 2));
        }
        let m = self.order - 1;
        Ok(self.exp[((m - self.log[a as usize]) % m) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Relative trace onto the subfield GF(p^sub_degree): the sum of the
    /// conjugates `a^{Q^i}`, `Q = p^sub_degree`. The result is returned in
    /// this field's encoding.
    pub fn trace(&self, a: u32, sub_degree: u32) -> Result<u32> {
        if sub_degree == 0 || !self.degree.is_multiple_of(sub_degree) {
            return Err(Error::NotASubfield {
                sub: sub_degree,
                degree: self.degree,
            });
        }
        let q_sub = (self.p as u64).pow(sub_degree);
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.degree / sub_degree {
            acc = self.add(acc, x);
            x = self.pow(x, q_sub);
        }
        Ok(acc)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = (self.order - 1) as u64;
        for f in prime_factors(ord) {
            while ord.is_multiple_of(f) && self.pow(a, ord / f) == 1 {
                ord /= f;
            }
        }
        Ok(ord as u32)
    }

    /// Smallest-encoded element of multiplicative order exactly `n`.
    pub fn primitive_nth_root(&self, n: u32) -> Result<u32> {
        if n == 0 || !(self.order - 1).is_multiple_of(n) {
            return Err(Error::NoRootOfUnity {
                n,
                order: self.order,
            });
        }
        (1..self.order)
            .find(|&a| self.element_order(a).ok() == Some(n))
            .ok_or(Error::NoRootOfUnity {
                n,
                order: self.order,
            })
    }

    fn find_primitive(&self) -> u32 {
        if self.order == 2 {
            return 1;
        }
        let m = (self.order - 1) as u64;
        let factors = prime_factors(m);
        (1..self.order)
            .find(|&a| factors.iter().all(|&f| self.pow_direct(a, m / f) != 1))
            .expect("multiplicative group is cyclic")
    }

    fn pow_direct(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_direct(result, base);
            }
            base = self.mul_direct(base, base);
            e >>= 1;
        }
        result
    }

    fn add_direct(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.degree {
            out += ((a % self.p + b % self.p) % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    fn neg_direct(&self, a: u32) -> u32 {
        let mut a = a;
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.degree {
            out += ((self.p - a % self.p) % self.p) * scale;
            a /= self.p;
            scale *= self.p;
        }
        out
    }

    fn mul_direct(&self, a: u32, b: u32) -> u32 {
        let pa = digits(a, self.p, self.degree);
        let pb = digits(b, self.p, self.degree);
        undigits(&poly::mul_mod(&pa, &pb, &self.modulus, self.p), self.p)
    }

    /// Locates GF(`sub`) inside this field.
    pub fn embed(self: &Arc<Self>, sub: &Arc<FiniteField>) -> Result<Embedding> {
        Embedding::new(sub.clone(), self.clone())
    }
}

fn digits(mut v: u32, p: u32, len: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(len as usize);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// An element bound to its field, with checked operations.
#[derive(Clone, Copy)]
pub struct Element<'f> {
    field: &'f FiniteField,
    value: u32,
}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.value, self.field)
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl<'f> Element<'f> {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &'f FiniteField {
        self.field
    }

    fn same_field(&self, other: &Element<'_>) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: u32) -> Element<'f> {
        Element {
            field: self.field,
            value,
        }
    }

    pub fn add(&self, other: &Element<'_>) -> Result<Element<'f>> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Element<'_>) -> Result<Element<'f>> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Element<'_>) -> Result<Element<'f>> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &Element<'_>) -> Result<Element<'f>> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> Element<'f> {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Element<'f>> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Element<'f> {
        self.wrap(self.field.pow(self.value, e))
    }
}

/// An explicit embedding GF(q) -> GF(p^l), fixed by sending the
/// polynomial generator of GF(q) to the smallest-encoded root of its
/// modulus inside the big field.
#[derive(Debug, Clone)]
pub struct Embedding {
    sub: Arc<FiniteField>,
    big: Arc<FiniteField>,
    image: Vec<u32>,
    preimage: HashMap<u32, u32>,
}

impl Embedding {
    pub fn new(sub: Arc<FiniteField>, big: Arc<FiniteField>) -> Result<Self> {
        if sub.p != big.p || !big.degree.is_multiple_of(sub.degree) {
            return Err(Error::NotASubfield {
                sub: sub.degree,
                degree: big.degree,
            });
        }
        // GF(p) coefficients are encoded identically in both fields.
        let eval = |x: u32| {
            sub.modulus
                .iter()
                .rev()
                .fold(0, |acc, &c| big.add(big.mul(acc, x), c))
        };
        let root = (0..big.order)
            .find(|&x| eval(x) == 0)
            .expect("every subfield modulus splits in the extension");
        let mut powers = vec![1];
        for i in 1..sub.degree as usize {
            powers.push(big.mul(powers[i - 1], root));
        }
        let image: Vec<u32> = (0..sub.order)
            .map(|v| {
                digits(v, sub.p, sub.degree)
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&c, &b)| big.add(acc, big.mul(c, b)))
            })
            .collect();
        let preimage = image
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        Ok(Embedding {
            sub,
            big,
            image,
            preimage,
        })
    }

    pub fn sub(&self) -> &Arc<FiniteField> {
        &self.sub
    }

    pub fn big(&self) -> &Arc<FiniteField> {
        &self.big
    }

    /// Image in the big field of a subfield element.
    pub fn lift(&self, a: u32) -> u32 {
        self.image[a as usize]
    }

    /// Subfield encoding of a big-field element, if it lies in the subfield.
    pub fn restrict(&self, a: u32) -> Option<u32> {
        self.preimage.get(&a).copied()
    }
}
