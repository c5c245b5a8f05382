//! Lifting cycle representatives from Ω(g^r) to Ω(g^(r+1)) through the
//! D-morphism, giving every cycle of Ω(g^b).

use std::collections::HashSet;

use crate::arith;
use crate::error::{domain, Error, Result};
use crate::gf::{Elem, Field};
use crate::irreducible::{states_by_decimation, IrreducibleFactorInfo};
use crate::lfsr::{Lfsr, LfsrState};
use crate::poly::Poly;
use crate::Options;

/// One lifting step from level `r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiftContext {
    pub g: Poly,
    pub n: usize,
    /// Order of `g`.
    pub e: u64,
    pub r: u64,
    /// Least `c` with `p^c >= r`.
    pub c: u32,
}

impl LiftContext {
    pub fn new(g: &Poly, e: u64, r: u64, f: &Field) -> Result<LiftContext> {
        if r == 0 {
            return domain("lifting starts at level 1");
        }
        let n = match g.degree() {
            Some(n) if n >= 1 => n,
            _ => return domain("g must have positive degree"),
        };
        Ok(LiftContext { g: g.clone(), n, e, r, c: arith::least_exponent_covering(r, f.p()) })
    }

    /// Period of every cycle at this level, `e * p^c`.
    pub fn period(&self, f: &Field) -> Result<u64> {
        self.e
            .checked_mul(arith::checked_pow(f.p(), self.c)?)
            .ok_or_else(|| Error::ResourceCap("period overflows u64".into()))
    }
}

/// `b_i = g_0 a_i + ... + g_(n-1) a_(i+n-1) + a_(i+n)`.
pub fn d_map(g: &Poly, a: &[Elem], f: &Field) -> Result<Vec<Elem>> {
    let n = g.deg();
    if n == 0 || a.len() % n != 0 || a.len() < 2 * n {
        return domain(format!("D expects (r+1)*{n} entries with r >= 1, got {}", a.len()));
    }
    Ok((0..a.len() - n)
        .map(|i| {
            (0..=n).fold(Elem::ZERO, |acc, j| f.add(acc, f.mul(g.coeff(j), a[i + j])))
        })
        .collect())
}

/// The unique `a` starting with `prefix` and satisfying `D(a) = b`.
pub fn d_preimage(g: &Poly, b: &[Elem], prefix: &[Elem], f: &Field) -> Result<Vec<Elem>> {
    let n = g.deg();
    if prefix.len() != n {
        return domain(format!("prefix must have {n} entries"));
    }
    let mut a = prefix.to_vec();
    for (i, &bi) in b.iter().enumerate() {
        let known = (0..n).fold(Elem::ZERO, |acc, j| f.add(acc, f.mul(g.coeff(j), a[i + j])));
        a.push(f.sub(bi, known));
    }
    Ok(a)
}

/// All `q^n` seeds of length `n`, in lexicographic order.
pub(crate) fn all_states(n: usize, f: &Field) -> Result<Vec<LfsrState>> {
    let q = f.q();
    let count = arith::checked_pow(q, n as u32)?;
    let mut out = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let mut s = vec![Elem::ZERO; n];
        let mut rest = idx;
        for slot in s.iter_mut().rev() {
            *slot = f.elem(rest % q)?;
            rest /= q;
        }
        out.push(s);
    }
    Ok(out)
}

/// The `(r+1)n`-stage states of every sequence in Ω(g), which form the kernel of D.
pub fn kernel_states(g: &Poly, r: u64, f: &Field) -> Result<Vec<LfsrState>> {
    let reg = Lfsr::new(g, f)?;
    let len = (r as usize + 1) * reg.degree();
    all_states(reg.degree(), f)?
        .iter()
        .map(|seed| reg.extend(seed, len))
        .collect()
}

fn add_states(a: &[Elem], b: &[Elem], f: &Field) -> LfsrState {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

/// `a' = T^(e r) a - a` under the register of `g^(r+1)`.
pub fn shift_difference(ctx: &LiftContext, a: &[Elem], f: &Field) -> Result<LfsrState> {
    let reg = Lfsr::new(&ctx.g.pow(ctx.r + 1, f), f)?;
    let moved = reg.step_by(a, ctx.e * ctx.r)?;
    Ok(moved.iter().zip(a).map(|(&x, &y)| f.sub(x, y)).collect())
}

/// Representatives of all cycles with minimal polynomial `g^(r+1)`, given
/// `r n`-stage representatives of all cycles with minimal polynomial `g^r`.
pub fn lift_level(ctx: &LiftContext, reps: &[LfsrState], f: &Field) -> Result<Vec<LfsrState>> {
    let n = ctx.n;
    let rn = ctx.r as usize * n;
    let mut kernel = kernel_states(&ctx.g, ctx.r, f)?;
    let zero = vec![Elem::ZERO; n];
    let branch_b = arith::is_power_of(ctx.r, f.p());
    if branch_b {
        kernel.sort();
    }
    let mut out = Vec::new();
    for b in reps {
        if b.len() != rn {
            return domain(format!("level-{} states need {rn} entries", ctx.r));
        }
        let a = d_preimage(&ctx.g, b, &zero, f)?;
        if !branch_b {
            out.extend(kernel.iter().map(|k| add_states(&a, k, f)));
            continue;
        }
        let a_prime = shift_difference(ctx, &a, f)?;
        if a_prime.iter().all(|x| x.is_zero()) {
            return Err(Error::Internal("T^(e r) fixes a lifted state".into()));
        }
        let multiples: Vec<LfsrState> = (0..f.p() as i64)
            .map(|eta| a_prime.iter().map(|&x| f.mul(f.from_int(eta), x)).collect())
            .collect();
        let mut covered: HashSet<&[Elem]> = HashSet::new();
        let mut coset_members = Vec::new();
        for k in &kernel {
            if covered.contains(k.as_slice()) {
                continue;
            }
            out.push(add_states(&a, k, f));
            coset_members.clear();
            coset_members.extend(multiples.iter().map(|m| add_states(k, m, f)));
            for member in &coset_members {
                if let Some(hit) = kernel.binary_search(member).ok().map(|i| kernel[i].as_slice()) {
                    covered.insert(hit);
                }
            }
        }
    }
    Ok(out)
}

/// One cycle of Ω(g^b).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelCycle {
    /// The minimal polynomial of the cycle is `g^r`; `r = 0` is the zero cycle.
    pub r: u32,
    pub period: u64,
    /// A `b n`-stage state.
    pub state: LfsrState,
}

/// Every cycle of Ω(g^b), grouped by level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimePowerCycles {
    pub info: IrreducibleFactorInfo,
    pub b: u32,
    pub cycles: Vec<LevelCycle>,
}

impl PrimePowerCycles {
    /// `σ`, the number of nonzero cycles.
    pub fn nonzero_count(&self) -> usize {
        self.cycles.len() - 1
    }
}

/// Expected number of cycles with minimal polynomial `g^r`, `t q^(n(r-1)) / p^c`.
pub fn level_count(info: &IrreducibleFactorInfo, r: u32, f: &Field) -> Result<u64> {
    if r == 0 {
        return Ok(1);
    }
    let c = arith::least_exponent_covering(r as u64, f.p());
    let big = arith::checked_pow(f.q(), info.n as u32 * (r - 1))?;
    Ok(info.t * big / arith::checked_pow(f.p(), c)?)
}

pub fn cycle_structure_prime_power(g: &Poly, b: u32, f: &Field, opts: &Options) -> Result<PrimePowerCycles> {
    if b == 0 {
        return domain("multiplicity must be positive");
    }
    let info = IrreducibleFactorInfo::new(g, f, opts)?;
    let n = info.n;
    let total = b as usize * n;
    let mut cycles = vec![LevelCycle { r: 0, period: 1, state: vec![Elem::ZERO; total] }];
    let mut level = states_by_decimation(&info, f)?;
    for r in 1..=b {
        let ctx = LiftContext::new(g, info.e, r as u64, f)?;
        let period = ctx.period(f)?;
        let reg = Lfsr::new(&g.pow(r as u64, f), f)?;
        for s in &level {
            cycles.push(LevelCycle { r, period, state: reg.extend(s, total)? });
        }
        if r < b {
            level = lift_level(&ctx, &level, f)?;
        }
    }
    Ok(PrimePowerCycles { info, b, cycles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn gf3() -> Field {
        Field::prime(3).unwrap()
    }

    fn st(f: &Field, v: &[i64]) -> LfsrState {
        v.iter().map(|&c| f.from_int(c)).collect()
    }

    #[test]
    fn d_examples() {
        let f = gf3();
        let g = parse_poly("x^3+2x+2", &f).unwrap();
        let a = d_preimage(&g, &st(&f, &[1, 0, 0]), &st(&f, &[0, 0, 0]), &f).unwrap();
        assert_eq!(a, st(&f, &[0, 0, 0, 1, 0, 1]));
        assert_eq!(d_map(&g, &a, &f).unwrap(), st(&f, &[1, 0, 0]));
        let a = d_preimage(&g, &st(&f, &[2, 1, 1]), &st(&f, &[0, 0, 0]), &f).unwrap();
        assert_eq!(a, st(&f, &[0, 0, 0, 2, 1, 0]));
        assert!(d_map(&g, &st(&f, &[1, 0, 0]), &f).is_err());
        assert!(d_map(&g, &st(&f, &[1, 0, 0, 1]), &f).is_err());
    }

    #[test]
    fn binary_kernel() {
        let f = Field::prime(2).unwrap();
        let g = parse_poly("x+1", &f).unwrap();
        assert_eq!(kernel_states(&g, 2, &f).unwrap(), vec![st(&f, &[0, 0, 0]), st(&f, &[1, 1, 1])]);
    }

    #[test]
    fn example_shift_difference() {
        let f = gf3();
        let g = parse_poly("x^3+2x+2", &f).unwrap();
        let ctx = LiftContext::new(&g, 13, 1, &f).unwrap();
        let a = st(&f, &[0, 0, 0, 1, 0, 1]);
        assert_eq!(shift_difference(&ctx, &a, &f).unwrap(), st(&f, &[1, 2, 0, 0, 2, 0]));
        let a = st(&f, &[0, 0, 0, 2, 1, 0]);
        assert_eq!(shift_difference(&ctx, &a, &f).unwrap(), st(&f, &[1, 1, 2, 2, 0, 1]));
        let lifted = lift_level(&ctx, &[st(&f, &[1, 0, 0])], &f).unwrap();
        assert_eq!(lifted.len(), 9);
        assert!(lifted.contains(&st(&f, &[0, 0, 0, 1, 0, 1])));
        // a + (0,0,1,0,1,1)
        assert!(lifted.contains(&st(&f, &[0, 0, 1, 1, 1, 2])));
    }

    #[test]
    fn binary_power_of_two_merges() {
        // r = 2 is a power of p = 2, so a_0 and a_0 + 1 share a cycle
        let f = Field::prime(2).unwrap();
        let g = parse_poly("x+1", &f).unwrap();
        let ctx = LiftContext::new(&g, 1, 2, &f).unwrap();
        let lifted = lift_level(&ctx, &[st(&f, &[0, 1])], &f).unwrap();
        assert_eq!(lifted.len(), 1);
        let ctx = LiftContext::new(&g, 1, 3, &f).unwrap();
        let lifted = lift_level(&ctx, &[st(&f, &[0, 0, 1])], &f).unwrap();
        assert_eq!(lifted.len(), 2);
    }

    #[test]
    fn level_periods_and_counts() {
        let f = gf3();
        let g = parse_poly("x^2+1", &f).unwrap();
        let pp = cycle_structure_prime_power(&g, 2, &f, &Options::default()).unwrap();
        let periods: Vec<u64> = pp.cycles.iter().map(|c| c.period).collect();
        assert_eq!(periods, [1, 4, 4, 12, 12, 12, 12, 12, 12]);
        for r in 0..=2 {
            let got = pp.cycles.iter().filter(|c| c.r == r).count() as u64;
            assert_eq!(got, level_count(&pp.info, r, &f).unwrap());
        }
        assert!(pp.cycles.iter().all(|c| c.state.len() == 4));
    }
}
