//! Nonzero cycles of Ω(g) for an irreducible g, found either through
//! cyclotomic classes or by decimating an m-sequence of an associated
//! primitive polynomial.

use crate::arith;
use crate::error::{domain, Error, Result};
use crate::ext::ExtField;
use crate::gf::{Elem, Field};
use crate::lfsr::{Lfsr, LfsrState};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::Options;

/// Order data for an irreducible `g` and the primitive polynomial it is paired with.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrreducibleFactorInfo {
    pub g: Poly,
    pub n: usize,
    /// Order of `g`.
    pub e: u64,
    /// `(q^n - 1) / e`.
    pub t: u64,
    pub associated_primitive: Poly,
    /// `β = α^beta_power` is a root of `g` when α is a root of the primitive.
    pub beta_power: u64,
}

/// Number of primitive polynomials that can be paired with `g`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AssociatedCount {
    pub count: u64,
    /// Set when `g` is itself primitive; `count` is then 1.
    pub self_associated: bool,
}

fn require_irreducible(g: &Poly, f: &Field) -> Result<usize> {
    if !g.is_monic(f) {
        return domain("expected a monic polynomial");
    }
    if g.coeff(0).is_zero() {
        return domain("expected g(0) != 0");
    }
    if !g.is_irreducible(f)? {
        return domain(format!("{} is not irreducible", g.render(f)));
    }
    Ok(g.deg())
}

/// `φ(q^n - 1) / φ(e)`.
pub fn count_associated_primitives(g: &Poly, f: &Field, opts: &Options) -> Result<AssociatedCount> {
    let n = require_irreducible(g, f)?;
    let total = arith::checked_pow(f.q(), n as u32)? - 1;
    let e = g.order_with_cap(f, opts.factor_cap)?;
    if e == total {
        return Ok(AssociatedCount { count: 1, self_associated: true });
    }
    let count = arith::totient(total, opts.factor_cap)? / arith::totient(e, opts.factor_cap)?;
    Ok(AssociatedCount { count, self_associated: false })
}

/// Every monic primitive polynomial of degree `n`, in lexicographic order of
/// `(c_0, ..., c_{n-1})`.
pub fn primitive_candidates(n: usize, f: &Field, opts: &Options) -> Result<Vec<Poly>> {
    if n == 0 {
        return domain("degree must be positive");
    }
    let q = f.q();
    let count = arith::checked_pow(q, n as u32)?;
    let mut out = Vec::new();
    for idx in 0..count {
        // most significant digit is c_0
        let mut coeffs = vec![Elem::ZERO; n + 1];
        let mut rest = idx;
        for i in (0..n).rev() {
            coeffs[i] = f.elem(rest % q)?;
            rest /= q;
        }
        coeffs[n] = f.one();
        if coeffs[0].is_zero() {
            continue;
        }
        let cand = Poly::new(coeffs);
        if cand.is_primitive_with_cap(f, opts.factor_cap)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// The first `len` entries of the normalized m-sequence of `qpoly`.
fn m_prefix(qpoly: &Poly, f: &Field, len: usize) -> Result<Vec<Elem>> {
    let reg = Lfsr::new(qpoly, f)?;
    reg.extend(&vec![f.one(); qpoly.deg()], len)
}

/// True when `2n` consecutive entries of `m^(t)` obey the recurrence of `g`.
fn decimation_matches(g: &Poly, qpoly: &Poly, t: u64, f: &Field) -> Result<bool> {
    let n = g.deg();
    let t = t as usize;
    let m = m_prefix(qpoly, f, 2 * n * t)?;
    let window: Vec<Elem> = (0..2 * n).map(|j| m[j * t]).collect();
    let reg = Lfsr::new(g, f)?;
    Ok(reg.extend(&window[..n], 2 * n)? == window)
}

/// The first candidate whose `t`-decimated m-sequence has minimal polynomial `g`.
pub fn associate_primitive(g: &Poly, candidates: &[Poly], f: &Field, opts: &Options) -> Result<Poly> {
    let n = require_irreducible(g, f)?;
    if candidates.is_empty() {
        return domain("no candidate primitive polynomials given");
    }
    let total = arith::checked_pow(f.q(), n as u32)? - 1;
    let t = total / g.order_with_cap(f, opts.factor_cap)?;
    for cand in candidates {
        if cand.deg() != n {
            return domain(format!("candidate {} has the wrong degree", cand.render(f)));
        }
        if decimation_matches(g, cand, t, f)? {
            return Ok(cand.clone());
        }
    }
    Err(Error::NotFound(format!(
        "no listed primitive polynomial associates with {}",
        g.render(f)
    )))
}

impl IrreducibleFactorInfo {
    pub fn new(g: &Poly, f: &Field, opts: &Options) -> Result<IrreducibleFactorInfo> {
        let n = require_irreducible(g, f)?;
        let total = arith::checked_pow(f.q(), n as u32)? - 1;
        let e = g.order_with_cap(f, opts.factor_cap)?;
        let t = total / e;
        let associated_primitive = if e == total {
            g.clone()
        } else {
            associate_primitive(g, &primitive_candidates(n, f, opts)?, f, opts)?
        };
        let info = IrreducibleFactorInfo {
            g: g.clone(),
            n,
            e,
            t,
            associated_primitive,
            beta_power: t,
        };
        let ext = ExtField::new(&info.associated_primitive, f)?;
        let beta = ext.pow(&ext.generator(), t);
        if !root_of(g, &beta, &ext).is_zero() {
            return Err(Error::Internal("α^t is not a root of g".into()));
        }
        Ok(info)
    }
}

fn root_of(g: &Poly, x: &Poly, ext: &ExtField) -> Poly {
    // Horner evaluation inside the extension
    let mut acc = Poly::zero();
    for &c in g.coeffs().iter().rev() {
        acc = ext.add(&ext.mul(&acc, x), &ext.embed(c));
    }
    acc
}

/// State `i` takes entries `i, i+t, ..., i+(n-1)t` of the m-sequence.
pub fn states_by_decimation(info: &IrreducibleFactorInfo, f: &Field) -> Result<Vec<LfsrState>> {
    let (n, t) = (info.n, info.t as usize);
    let m = m_prefix(&info.associated_primitive, f, n * t)?;
    Ok((0..t).map(|i| (0..n).map(|k| m[i + k * t]).collect()).collect())
}

/// The basis change `(1, β, ..., β^(n-1)) = (1, α, ..., α^(n-1)) M`.
pub fn basis_change(info: &IrreducibleFactorInfo, f: &Field) -> Result<Matrix> {
    let ext = ExtField::new(&info.associated_primitive, f)?;
    let beta = ext.pow(&ext.generator(), info.beta_power);
    let mut m = Matrix::zeros(info.n, info.n);
    let mut power = ext.one();
    for col in 0..info.n {
        for (row, c) in ext.coords(&power).into_iter().enumerate() {
            m.set(row, col, c);
        }
        power = ext.mul(&power, &beta);
    }
    Ok(m)
}

/// `φ(α^i)` for `i = 0 .. t-1`, one state per cyclotomic class.
pub fn states_by_cyclotomy(info: &IrreducibleFactorInfo, f: &Field) -> Result<Vec<LfsrState>> {
    let n = info.n;
    let m_inv = basis_change(info, f)?
        .inverse(f)
        .ok_or_else(|| Error::Internal("basis change matrix is singular".into()))?;
    let ext = ExtField::new(&info.associated_primitive, f)?;
    let alpha = ext.generator();
    let g = &info.g;
    let mut alpha_i = ext.one();
    let mut out = Vec::with_capacity(info.t as usize);
    for _ in 0..info.t {
        let c = ext.coords(&alpha_i);
        // β-coordinates of α^i
        let mut a: Vec<Elem> = (0..n)
            .map(|r| (0..n).fold(Elem::ZERO, |acc, s| f.add(acc, f.mul(m_inv.get(r, s), c[s]))))
            .collect();
        let mut state = Vec::with_capacity(n);
        for _ in 0..n {
            state.push(a[0]);
            // multiply by β, reducing β^n through g
            let top = a[n - 1];
            let mut next = vec![Elem::ZERO; n];
            for i in 0..n {
                let carried = if i == 0 { Elem::ZERO } else { a[i - 1] };
                next[i] = f.sub(carried, f.mul(top, g.coeff(i)));
            }
            a = next;
        }
        out.push(state);
        alpha_i = ext.mul(&alpha_i, &alpha);
    }
    Ok(out)
}

/// The zero cycle followed by the `t` nonzero cycles, each as `(period, state)`.
pub fn cycle_structure_irreducible(g: &Poly, f: &Field, opts: &Options) -> Result<Vec<(u64, LfsrState)>> {
    let info = IrreducibleFactorInfo::new(g, f, opts)?;
    let mut out = vec![(1, vec![Elem::ZERO; info.n])];
    for s in states_by_decimation(&info, f)? {
        out.push((info.e, s));
    }
    Ok(out)
}
