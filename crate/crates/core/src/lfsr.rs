//! The sequence engine: recurrence stepping, companion matrix, period
//! generation, shift and decimation, trace-form m-sequences, and
//! minimal-polynomial recovery.

use crate::arith;
use crate::error::{domain, Error, Result};
use crate::ext::ExtField;
use crate::gf::{Elem, Field};
use crate::matrix::Matrix;
use crate::parse::render_state;
use crate::poly::Poly;

/// An n-stage register state `(s_i, ..., s_{i+n-1})`.
pub type LfsrState = Vec<Elem>;

/// One least period of a periodic sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sequence {
    entries: Vec<Elem>,
}

impl Sequence {
    /// Wraps entries known to be one period, trimming to the least period.
    pub fn from_period(entries: Vec<Elem>) -> Result<Sequence> {
        if entries.is_empty() {
            return domain("a sequence needs at least one entry");
        }
        let n = entries.len();
        for d in arith::divisors(n as u64) {
            let d = d as usize;
            if (d..n).all(|i| entries[i] == entries[i - d]) {
                let mut entries = entries;
                entries.truncate(d);
                return Ok(Sequence { entries });
            }
        }
        unreachable!("n divides itself")
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn period(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Elem {
        self.entries[i % self.entries.len()]
    }

    /// `L^i`, with negative `i` meaning right shifts.
    pub fn shift(&self, i: i64) -> Sequence {
        let n = self.entries.len() as i64;
        let k = i.rem_euclid(n) as usize;
        let mut entries = self.entries.clone();
        entries.rotate_left(k);
        Sequence { entries }
    }

    /// `v_j = s_{d*j}`.
    pub fn decimate(&self, d: u64) -> Result<Sequence> {
        if d == 0 {
            return domain("decimation factor must be positive");
        }
        let n = self.entries.len() as u64;
        let len = n / arith::gcd(n, d % n);
        let entries = (0..len).map(|j| self.entries[((d % n) * j % n) as usize]).collect();
        Sequence::from_period(entries)
    }

    /// `n` consecutive entries starting at `i`, wrapping around.
    pub fn window(&self, i: usize, n: usize) -> LfsrState {
        (i..i + n).map(|k| self.get(k)).collect()
    }

    pub fn render(&self, f: &Field) -> String {
        render_state(&self.entries, f)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

/// A register for a monic characteristic polynomial with nonzero constant term.
#[derive(Clone, Debug)]
pub struct Lfsr {
    field: Field,
    poly: Poly,
    /// feedback[i] = -c_i, so s_{k+n} = sum feedback[i] * s_{k+i}.
    feedback: Vec<Elem>,
}

impl Lfsr {
    pub fn new(poly: &Poly, field: &Field) -> Result<Lfsr> {
        let n = match poly.degree() {
            Some(d) if d >= 1 => d,
            _ => return domain("characteristic polynomial must have degree at least 1"),
        };
        if !poly.is_monic(field) {
            return domain("characteristic polynomial must be monic");
        }
        if poly.coeff(0).is_zero() {
            return domain("characteristic polynomial must satisfy f(0) != 0");
        }
        let feedback = (0..n).map(|i| field.neg(poly.coeff(i))).collect();
        Ok(Lfsr { field: field.clone(), poly: poly.clone(), feedback })
    }

    pub fn degree(&self) -> usize {
        self.feedback.len()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn check_len(&self, state: &[Elem]) -> Result<()> {
        if state.len() != self.degree() {
            return domain(format!(
                "state has {} entries, register has {} stages",
                state.len(),
                self.degree()
            ));
        }
        Ok(())
    }

    /// The entry following an n-entry window.
    pub fn next_entry(&self, window: &[Elem]) -> Elem {
        let f = &self.field;
        window
            .iter()
            .zip(&self.feedback)
            .fold(Elem::ZERO, |acc, (&s, &c)| f.add(acc, f.mul(s, c)))
    }

    /// Applies T once, in place.
    pub fn step(&self, state: &mut [Elem]) {
        let next = self.next_entry(state);
        state.rotate_left(1);
        if let Some(last) = state.last_mut() {
            *last = next;
        }
    }

    /// The companion matrix A, with `s_{j+1} = s_j A`.
    pub fn companion_matrix(&self) -> Matrix {
        let n = self.degree();
        let mut a = Matrix::zeros(n, n);
        for i in 1..n {
            a.set(i, i - 1, self.field.one());
        }
        for i in 0..n {
            a.set(i, n - 1, self.feedback[i]);
        }
        a
    }

    /// `T^k s`. Matrix powering is used once `k` exceeds `4n`.
    pub fn step_by(&self, state: &[Elem], k: u64) -> Result<LfsrState> {
        self.check_len(state)?;
        let n = self.degree() as u64;
        if k > 4 * n {
            let a = self.companion_matrix().pow(k, &self.field);
            return Ok(a.left_mul(state, &self.field));
        }
        let mut s = state.to_vec();
        for _ in 0..k {
            self.step(&mut s);
        }
        Ok(s)
    }

    /// The first `len` entries of the sequence with initial state `state`.
    pub fn extend(&self, state: &[Elem], len: usize) -> Result<Vec<Elem>> {
        self.check_len(state)?;
        let n = self.degree();
        let mut out = state.to_vec();
        while out.len() < len {
            let next = self.next_entry(&out[out.len() - n..]);
            out.push(next);
        }
        out.truncate(len);
        Ok(out)
    }

    /// Steps until the state returns to `s0` and returns one least period.
    pub fn generate(&self, s0: &[Elem]) -> Result<Sequence> {
        self.check_len(s0)?;
        let mut s = s0.to_vec();
        let mut entries = Vec::new();
        loop {
            entries.push(s[0]);
            self.step(&mut s);
            if s == s0 {
                break;
            }
        }
        Ok(Sequence { entries })
    }

    /// The lexicographically least state on the cycle of `s0`, with the cycle's period.
    pub fn least_state(&self, s0: &[Elem]) -> Result<(LfsrState, u64)> {
        self.check_len(s0)?;
        let mut s = s0.to_vec();
        let mut best = s.clone();
        let mut e = 0u64;
        loop {
            self.step(&mut s);
            e += 1;
            if s == s0 {
                return Ok((best, e));
            }
            if s < best {
                best.clone_from(&s);
            }
        }
    }

    /// Period of the cycle containing `s0`, by walking.
    pub fn period_of(&self, s0: &[Elem]) -> Result<u64> {
        self.check_len(s0)?;
        let mut s = s0.to_vec();
        let mut e = 0u64;
        loop {
            self.step(&mut s);
            e += 1;
            if s == s0 {
                return Ok(e);
            }
        }
    }
}

pub fn companion_matrix(f: &Poly, field: &Field) -> Result<Matrix> {
    Ok(Lfsr::new(f, field)?.companion_matrix())
}

pub fn step_state(f: &Poly, s: &[Elem], k: u64, field: &Field) -> Result<LfsrState> {
    Lfsr::new(f, field)?.step_by(s, k)
}

pub fn generate_sequence(f: &Poly, s0: &[Elem], field: &Field) -> Result<Sequence> {
    Lfsr::new(f, field)?.generate(s0)
}

/// `Tr(alpha^i)` for `i = 0 .. q^n - 2`, alpha the class of x modulo `qpoly`.
pub fn trace_sequence(qpoly: &Poly, field: &Field) -> Result<Vec<Elem>> {
    let ext = ExtField::new(qpoly, field)?;
    let n = ext.degree() as u32;
    let len = arith::checked_pow(field.q(), n)? - 1;
    let alpha = ext.generator();
    let mut a = ext.one();
    let mut out = Vec::with_capacity(len as usize);
    for _ in 0..len {
        out.push(ext.trace(&a)?);
        a = ext.mul(&a, &alpha);
    }
    Ok(out)
}

/// The m-sequence of a primitive polynomial in trace form `Tr(gamma alpha^i)`,
/// with `gamma` fixed so that the sequence opens with n ones.
pub fn m_sequence(qpoly: &Poly, field: &Field) -> Result<Sequence> {
    if !qpoly.is_monic(field) || !qpoly.is_primitive(field)? {
        return domain(format!("{} is not a monic primitive polynomial", qpoly.render(field)));
    }
    let n = qpoly.deg();
    let tr = trace_sequence(qpoly, field)?;
    let len = tr.len();
    let one = field.one();
    let start = (0..len)
        .find(|&k| (0..n).all(|j| tr[(k + j) % len] == one))
        .ok_or_else(|| Error::Internal("m-sequence lacks the all-one window".into()))?;
    let mut entries = tr;
    entries.rotate_left(start);
    Ok(Sequence { entries })
}

/// Result of minimal-polynomial recovery.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MinimalPolynomial {
    /// The all-zero sequence, which has no positive-degree minimal polynomial.
    ZeroSequence,
    Poly(Poly),
}

impl MinimalPolynomial {
    pub fn poly(&self) -> Option<&Poly> {
        match self {
            MinimalPolynomial::ZeroSequence => None,
            MinimalPolynomial::Poly(p) => Some(p),
        }
    }
}

/// Berlekamp-Massey. Returns the connection polynomial
/// `C(x) = 1 + c_1 x + ... + c_L x^L` and the linear complexity `L`.
pub fn berlekamp_massey(s: &[Elem], f: &Field) -> (Vec<Elem>, usize) {
    let mut c = vec![f.one()];
    let mut b = vec![f.one()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last_disc = f.one();
    for n in 0..s.len() {
        let mut d = s[n];
        for i in 1..=l.min(c.len() - 1) {
            d = f.add(d, f.mul(c[i], s[n - i]));
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = f.div(d, last_disc).expect("nonzero discrepancy");
        let mut next = c.clone();
        if next.len() < b.len() + shift {
            next.resize(b.len() + shift, Elem::ZERO);
        }
        for (i, &bi) in b.iter().enumerate() {
            next[i + shift] = f.sub(next[i + shift], f.mul(coef, bi));
        }
        if 2 * l <= n {
            b = std::mem::replace(&mut c, next);
            l = n + 1 - l;
            last_disc = d;
            shift = 1;
        } else {
            c = next;
            shift += 1;
        }
    }
    c.resize(l + 1, Elem::ZERO);
    (c, l)
}

fn reciprocal_monic(conn: &[Elem], l: usize) -> Poly {
    // m(x) = x^L C(1/x): coefficient of x^j is c_{L-j}
    Poly::new((0..=l).map(|j| conn[l - j]).collect())
}

/// Minimal polynomial from a finite prefix. Needs at least twice the linear
/// complexity in entries.
pub fn minimal_polynomial_of_prefix(entries: &[Elem], f: &Field) -> Result<MinimalPolynomial> {
    let (conn, l) = berlekamp_massey(entries, f);
    if l == 0 {
        return Ok(MinimalPolynomial::ZeroSequence);
    }
    if 2 * l > entries.len() {
        return domain(format!(
            "{} entries cannot certify linear complexity {l}",
            entries.len()
        ));
    }
    Ok(MinimalPolynomial::Poly(reciprocal_monic(&conn, l)))
}

/// Minimal polynomial of a periodic sequence, using two full periods.
pub fn minimal_polynomial(seq: &Sequence, f: &Field) -> MinimalPolynomial {
    let doubled: Vec<Elem> = seq.entries.iter().chain(&seq.entries).copied().collect();
    let (conn, l) = berlekamp_massey(&doubled, f);
    if l == 0 {
        MinimalPolynomial::ZeroSequence
    } else {
        MinimalPolynomial::Poly(reciprocal_monic(&conn, l))
    }
}
