//! Exact arithmetic in GF(p^m).
//!
//! A [`Field`] is a cheap, clonable handle describing GF(p^m) in the polynomial
//! basis of a monic irreducible modulus over Z_p. Elements are plain [`Elem`]
//! values; every operation goes through the field that owns them.
//!
//! An element with coefficient vector `(c_0, ..., c_{m-1})` (constant term
//! first) is packed into a single integer with `c_0` as the most significant
//! base-p digit. The integer order therefore coincides with lexicographic
//! order on coefficient tuples, which is the order used for canonical states.

use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{domain, Error, Result};
use crate::poly::Poly;

const MAX_DIGITS: usize = 64;

/// A field element, meaningful only together with its [`Field`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    /// Position of the element in the field's lexicographic enumeration.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(PartialEq, Eq)]
struct Inner {
    p: u64,
    m: usize,
    q: u64,
    /// Monic modulus over Z_p, constant term first, length m + 1.
    modulus: Vec<u64>,
    /// weights[i] = p^(m-1-i), the place value of coefficient i.
    weights: Vec<u64>,
}

/// The field GF(p^m).
#[derive(Clone, PartialEq, Eq)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.m, self.0.modulus)
        }
    }
}

impl Field {
    /// The prime field Z_p.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// GF(p^m). When `m > 1` and no modulus is given, the lexicographically
    /// smallest monic irreducible of degree `m` is used (coefficients compared
    /// from the highest degree down).
    ///
    /// `modulus` is a constant-first coefficient list of length `m + 1`.
    pub fn new(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<Field> {
        if !arith::is_prime(p) {
            return domain(format!("characteristic {p} is not prime"));
        }
        if p > u32::MAX as u64 {
            return Err(Error::ResourceCap(format!(
                "characteristic {p} exceeds the supported 32-bit range"
            )));
        }
        if m == 0 {
            return domain("extension degree must be at least 1");
        }
        if m >= MAX_DIGITS {
            return Err(Error::ResourceCap(format!("extension degree {m} too large")));
        }
        let q = arith::checked_pow(p, m as u32)?;
        let prime = Field::from_parts(p, 1, vec![0, 1]);
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            match modulus {
                Some(coeffs) => {
                    if coeffs.len() != m + 1 {
                        return domain(format!(
                            "modulus must have {} coefficients, got {}",
                            m + 1,
                            coeffs.len()
                        ));
                    }
                    if coeffs[m] != 1 {
                        return domain("modulus must be monic");
                    }
                    if let Some(c) = coeffs.iter().find(|&&c| c >= p) {
                        return domain(format!("modulus coefficient {c} out of range for p = {p}"));
                    }
                    let poly = Poly::new(coeffs.iter().map(|&c| Elem(c)).collect());
                    if !poly.is_irreducible(&prime)? {
                        return domain("modulus is not irreducible over Z_p");
                    }
                    coeffs.to_vec()
                }
                None => default_modulus(&prime, m)?,
            }
        };
        let f = Field::from_parts(p, m, modulus);
        debug_assert_eq!(f.q(), q);
        Ok(f)
    }

    fn from_parts(p: u64, m: usize, modulus: Vec<u64>) -> Field {
        let mut weights = vec![1u64; m];
        for i in (0..m.saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * p;
        }
        let q = p.pow(m as u32);
        Field(Arc::new(Inner { p, m, q, modulus, weights }))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Constant-first coefficients of the defining modulus (`[0, 1]` when m = 1).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(self.0.weights[0])
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> Elem {
        let r = c.rem_euclid(self.0.p as i64) as u64;
        Elem(r * self.0.weights[0])
    }

    /// Element with index `i` in the lexicographic enumeration.
    pub fn elem(&self, i: u64) -> Result<Elem> {
        if i < self.0.q {
            Ok(Elem(i))
        } else {
            domain(format!("element index {i} outside field of size {}", self.0.q))
        }
    }

    /// Checks that `a` could belong to this field.
    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            domain(format!("element {a:?} does not belong to {self:?}"))
        }
    }

    /// Builds an element from constant-first coefficients.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() != self.0.m {
            return domain(format!(
                "element needs {} coefficients, got {}",
                self.0.m,
                coeffs.len()
            ));
        }
        let mut idx = 0;
        for (c, w) in coeffs.iter().zip(&self.0.weights) {
            if *c >= self.0.p {
                return domain(format!("coefficient {c} out of range for p = {}", self.0.p));
            }
            idx += c * w;
        }
        Ok(Elem(idx))
    }

    /// Constant-first coefficient vector of `a`.
    pub fn coeffs(&self, a: Elem) -> Vec<u64> {
        self.digits(a)[..self.0.m].to_vec()
    }

    /// Every element, in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    fn digits(&self, a: Elem) -> [u64; MAX_DIGITS] {
        let mut out = [0u64; MAX_DIGITS];
        let mut v = a.0;
        for i in (0..self.0.m).rev() {
            out[i] = v % self.0.p;
            v /= self.0.p;
        }
        out
    }

    fn pack(&self, d: &[u64]) -> Elem {
        let mut v = 0;
        for i in 0..self.0.m {
            v = v * self.0.p + d[i];
        }
        Elem(v)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= p { s - p } else { s });
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut z = [0u64; MAX_DIGITS];
        for i in 0..self.0.m {
            z[i] = (x[i] + y[i]) % p;
        }
        self.pack(&z)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if self.0.m == 1 {
            return Elem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let x = self.digits(a);
        let mut z = [0u64; MAX_DIGITS];
        for i in 0..self.0.m {
            z[i] = (p - x[i]) % p;
        }
        self.pack(&z)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        let m = self.0.m;
        if m == 1 {
            return Elem(a.0 * b.0 % p);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DIGITS];
        for i in 0..m {
            if x[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        let md = &self.0.modulus;
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            // x^k = x^(k-m) * x^m and x^m = -sum(md[j] x^j)
            for j in 0..m {
                prod[k - m + j] = (prod[k - m + j] + (p - c) * md[j]) % p;
            }
            prod[k] = 0;
        }
        self.pack(&prod[..m])
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse: extended Euclid for m = 1, Fermat otherwise.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.0.m == 1 {
            let (_, x, _) = arith::ext_gcd(a.0 as i128, self.0.p as i128);
            return Ok(Elem(x.rem_euclid(self.0.p as i128) as u64));
        }
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: Elem) -> Elem {
        self.pow(a, self.0.q / self.0.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut e = self.0.q - 1;
        for (r, _) in arith::factor_trial(e, arith::DEFAULT_FACTOR_CAP)? {
            while e % r == 0 && self.pow(a, e / r) == self.one() {
                e /= r;
            }
        }
        Ok(e)
    }

    /// Decimal residue for m = 1, `[c0,c1,...]` otherwise.
    pub fn render(&self, a: Elem) -> String {
        if self.0.m == 1 {
            a.0.to_string()
        } else {
            let d = self.digits(a);
            let parts: Vec<String> = d[..self.0.m].iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        crate::parse::parse_elem(text, self)
    }
}

fn default_modulus(prime: &Field, m: usize) -> Result<Vec<u64>> {
    let p = prime.p();
    // Walk (c_{m-1}, ..., c_0) as a base-p counter, high-degree digit most significant.
    let total = arith::checked_pow(p, m as u32)?;
    for code in 0..total {
        let mut coeffs = vec![0u64; m + 1];
        coeffs[m] = 1;
        let mut v = code;
        for c in coeffs.iter_mut().take(m) {
            *c = v % p;
            v /= p;
        }
        if coeffs[0] == 0 {
            continue;
        }
        let poly = Poly::new(coeffs.iter().map(|&c| Elem(c)).collect());
        if poly.is_irreducible(prime)? {
            return Ok(coeffs);
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {m} over Z_{p}")))
}
