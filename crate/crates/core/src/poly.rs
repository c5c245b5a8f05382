//! Univariate polynomials over GF(q): ring operations, irreducibility and
//! primitivity tests, complete factorization, and polynomial order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{domain, Error, Result};
use crate::gf::{Elem, Field};

/// Seed of the equal-degree splitting PRNG unless the caller overrides it.
pub const DEFAULT_FACTOR_SEED: u64 = 0x4c46_5352_2d43_5943;

/// Dense polynomial, constant term first. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

/// A monic factorization `unit * prod(g_i^b_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredPoly {
    pub unit: Elem,
    /// Pairwise distinct monic irreducibles with multiplicities, sorted by
    /// [`Poly::canonical_cmp`].
    pub factors: Vec<(Poly, u32)>,
}

impl FactoredPoly {
    pub fn reconstruct(&self, f: &Field) -> Poly {
        let mut acc = Poly::constant(self.unit);
        for (g, b) in &self.factors {
            acc = acc.mul(&g.pow(*b as u64, f), f);
        }
        acc
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from integers in the prime subfield, constant first.
    pub fn from_ints(f: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| f.from_int(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(vec![c])
    }

    pub fn one(f: &Field) -> Poly {
        Poly::constant(f.one())
    }

    pub fn x(f: &Field) -> Poly {
        Poly::monomial(f.one(), 1)
    }

    pub fn monomial(c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self, f: &Field) -> bool {
        self.leading() == f.one()
    }

    pub fn is_one(&self, f: &Field) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == f.one()
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, mut k: u64, f: &Field) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(f);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[k - dd] = t;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = f.sub(rem[k - dd + j], f.mul(t, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        Ok(self.divmod(divisor, f)?.1)
    }

    /// Exact quotient; the caller guarantees divisibility.
    fn exact_div(&self, divisor: &Poly, f: &Field) -> Poly {
        let (q, r) = self.divmod(divisor, f).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Splits off the leading coefficient: `self = unit * monic`.
    pub fn monic(&self, f: &Field) -> (Elem, Poly) {
        if self.is_zero() {
            return (Elem::ZERO, Poly::zero());
        }
        let lead = self.leading();
        let inv = f.inv(lead).expect("nonzero leading coefficient");
        (lead, self.scale(inv, f))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f).1
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int((i as u64 % f.p()) as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: Elem, f: &Field) -> Elem {
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly, f: &Field) -> Poly {
        self.mul(other, f).rem(modulus, f).expect("nonzero modulus")
    }

    pub fn pow_mod(&self, mut k: u64, modulus: &Poly, f: &Field) -> Poly {
        let mut base = self.rem(modulus, f).expect("nonzero modulus");
        let mut acc = Poly::one(f).rem(modulus, f).expect("nonzero modulus");
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_mod(&base, modulus, f);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_mod(&base, modulus, f);
            }
        }
        acc
    }

    /// Ordering by degree, then coefficients from the highest degree down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Rabin's test: `x^(q^n) = x mod g` and `gcd(x^(q^(n/r)) - x, g) = 1`
    /// for every prime `r | n`.
    pub fn is_irreducible(&self, f: &Field) -> Result<bool> {
        let n = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return domain("irreducibility is undefined for constant polynomials"),
        };
        if n == 1 {
            return Ok(true);
        }
        let g = self.monic(f).1;
        let x = Poly::x(f);
        // frob[k] = x^(q^k) mod g
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.rem(&g, f)?);
        for k in 1..=n {
            let next = frob[k - 1].pow_mod(f.q(), &g, f);
            frob.push(next);
        }
        if frob[n] != frob[0] {
            return Ok(false);
        }
        for (r, _) in arith::factor_trial(n as u64, u64::MAX)? {
            let h = frob[n / r as usize].sub(&x, f);
            if !h.gcd(&g, f).is_one(f) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Factorization with the default splitting seed.
    pub fn factorize(&self, f: &Field) -> Result<FactoredPoly> {
        self.factorize_with_seed(f, DEFAULT_FACTOR_SEED)
    }

    /// Square-free, distinct-degree, then equal-degree (Cantor-Zassenhaus)
    /// factorization. The output is sorted, so it does not depend on `seed`.
    pub fn factorize_with_seed(&self, f: &Field, seed: u64) -> Result<FactoredPoly> {
        if self.degree().is_none_or(|d| d == 0) {
            return domain("factorization needs a polynomial of degree at least 1");
        }
        let (unit, monic) = self.monic(f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut collected: BTreeMap<Vec<Elem>, (Poly, u32)> = BTreeMap::new();
        for (part, mult) in square_free(&monic, f) {
            for (chunk, d) in distinct_degree(&part, f) {
                for g in equal_degree(&chunk, d, f, &mut rng) {
                    collected
                        .entry(g.coeffs.clone())
                        .and_modify(|e| e.1 += mult)
                        .or_insert((g, mult));
                }
            }
        }
        let mut factors: Vec<(Poly, u32)> = collected.into_values().collect();
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        Ok(FactoredPoly { unit, factors })
    }

    /// Order of a monic irreducible with nonzero constant term, using the
    /// default trial-division cap.
    pub fn order(&self, f: &Field) -> Result<u64> {
        self.order_with_cap(f, arith::DEFAULT_FACTOR_CAP)
    }

    /// Least `e` with `g | x^e - 1`: start from `q^n - 1` and strip prime
    /// factors `r` while `x^(e/r) = 1 mod g`.
    pub fn order_with_cap(&self, f: &Field, cap: u64) -> Result<u64> {
        if self.coeff(0).is_zero() {
            return domain("order requires g(0) != 0");
        }
        if !self.is_irreducible(f)? {
            return domain("order computation requires an irreducible polynomial");
        }
        let g = self.monic(f).1;
        let n = g.deg() as u32;
        let total = arith::checked_pow(f.q(), n)? - 1;
        let x = Poly::x(f);
        let one = Poly::one(f);
        let mut e = total;
        for (r, _) in arith::factor_trial(total, cap)? {
            while e % r == 0 && x.pow_mod(e / r, &g, f) == one {
                e /= r;
            }
        }
        Ok(e)
    }

    pub fn is_primitive(&self, f: &Field) -> Result<bool> {
        self.is_primitive_with_cap(f, arith::DEFAULT_FACTOR_CAP)
    }

    pub fn is_primitive_with_cap(&self, f: &Field, cap: u64) -> Result<bool> {
        let Some(n) = self.degree() else { return Ok(false) };
        if n == 0 || self.coeff(0).is_zero() || !self.is_irreducible(f)? {
            return Ok(false);
        }
        let total = arith::checked_pow(f.q(), n as u32)? - 1;
        Ok(self.order_with_cap(f, cap)? == total)
    }

    /// Human-readable form, e.g. `x^3+2x+2`, parsable by [`crate::parse::parse_poly`].
    pub fn render(&self, f: &Field) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let coef = if k > 0 && c == f.one() { String::new() } else { f.render(c) };
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            terms.push(format!("{coef}{var}"));
        }
        terms.join("+")
    }
}

/// Square-free decomposition of a monic polynomial into `(part, multiplicity)`.
fn square_free(a: &Poly, f: &Field) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if a.deg() == 0 {
        return out;
    }
    let d = a.derivative(f);
    if d.is_zero() {
        // a(x) = b(x)^p
        for (part, m) in square_free(&pth_root(a, f), f) {
            out.push((part, m * f.p() as u32));
        }
        return out;
    }
    let mut c = a.gcd(&d, f);
    let mut w = a.exact_div(&c, f);
    let mut i = 1u32;
    while !w.is_one(f) {
        let y = w.gcd(&c, f);
        let fac = w.exact_div(&y, f);
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w, f);
        i += 1;
    }
    if c.deg() > 0 {
        for (part, m) in square_free(&pth_root(&c, f), f) {
            out.push((part, m * f.p() as u32));
        }
    }
    out
}

/// The `b` with `b^p = a` for `a` whose exponents are all multiples of p.
fn pth_root(a: &Poly, f: &Field) -> Poly {
    let p = f.p() as usize;
    Poly::new(a.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect())
}

/// Splits a monic square-free polynomial into products of same-degree irreducibles.
fn distinct_degree(a: &Poly, f: &Field) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = a.clone();
    let x = Poly::x(f);
    let mut h = x.rem(&rest, f).expect("nonzero");
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(f.q(), &rest, f);
        let g = rest.gcd(&h.sub(&x, f), f);
        if !g.is_one(f) {
            rest = rest.exact_div(&g, f);
            h = h.rem(&rest, f).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct degree-`d` irreducibles.
fn equal_degree(a: &Poly, d: usize, f: &Field, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = a.deg();
    if n == d {
        return vec![a.clone()];
    }
    loop {
        let r = Poly::new((0..n).map(|_| f.elem(rng.gen_range(0..f.q())).unwrap()).collect());
        if r.deg() == 0 {
            continue;
        }
        let b = splitting_map(&r, d, a, f);
        let g = a.gcd(&b, f);
        if g.deg() > 0 && g.deg() < n {
            let other = a.exact_div(&g, f);
            let mut out = equal_degree(&g, d, f, rng);
            out.extend(equal_degree(&other, d, f, rng));
            return out;
        }
    }
}

/// `r^((q^d-1)/2) - 1` for odd q, the absolute trace `sum r^(2^i)` for even q.
fn splitting_map(r: &Poly, d: usize, modulus: &Poly, f: &Field) -> Poly {
    if f.p() == 2 {
        let bits = f.m() * d;
        let mut term = r.rem(modulus, f).expect("nonzero");
        let mut acc = term.clone();
        for _ in 1..bits {
            term = term.mul_mod(&term, modulus, f);
            acc = acc.add(&term, f);
        }
        acc
    } else {
        // (q^d - 1)/2 = (1 + q + ... + q^(d-1)) * (q - 1)/2
        let mut term = r.rem(modulus, f).expect("nonzero");
        let mut norm = term.clone();
        for _ in 1..d {
            term = term.pow_mod(f.q(), modulus, f);
            norm = norm.mul_mod(&term, modulus, f);
        }
        norm.pow_mod((f.q() - 1) / 2, modulus, f).sub(&Poly::one(f), f)
    }
}
