//! Cycle structure of Ω(f) for arbitrary f: component states through the
//! block matrix 𝒫, full enumeration of cycles, and the same-cycle test.

use crate::arith;
use crate::error::{domain, Error, Result};
use crate::gf::{Elem, Field};
use crate::lfsr::{Lfsr, LfsrState};
use crate::lifting::{cycle_structure_prime_power, PrimePowerCycles};
use crate::matrix::Matrix;
use crate::poly::{FactoredPoly, Poly};
use crate::Options;

/// The matrix 𝒫 stacking one block per factor power `g_i^b_i`, and its inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMatrixP {
    pub p: Matrix,
    pub p_inv: Matrix,
    /// `g_i^b_i`, in factor order.
    pub powers: Vec<Poly>,
    /// Row offset of each block.
    pub offsets: Vec<usize>,
}

impl BlockMatrixP {
    pub fn n(&self) -> usize {
        self.p.rows()
    }

    pub fn block_size(&self, i: usize) -> usize {
        self.powers[i].deg()
    }

    /// `v = (a_1, ..., a_k) 𝒫`.
    pub fn compose(&self, components: &[LfsrState], f: &Field) -> Result<LfsrState> {
        if components.len() != self.powers.len() {
            return domain(format!(
                "expected {} component states, got {}",
                self.powers.len(),
                components.len()
            ));
        }
        let mut joined = Vec::with_capacity(self.n());
        for (i, c) in components.iter().enumerate() {
            if c.len() != self.block_size(i) {
                return domain(format!(
                    "component {i} needs {} entries, got {}",
                    self.block_size(i),
                    c.len()
                ));
            }
            joined.extend_from_slice(c);
        }
        Ok(self.p.left_mul(&joined, f))
    }

    /// `v 𝒫^-1`, split at the block offsets.
    pub fn decompose(&self, v: &[Elem], f: &Field) -> Result<Vec<LfsrState>> {
        if v.len() != self.n() {
            return domain(format!("state needs {} entries, got {}", self.n(), v.len()));
        }
        let flat = self.p_inv.left_mul(v, f);
        Ok(self
            .offsets
            .iter()
            .enumerate()
            .map(|(i, &o)| flat[o..o + self.block_size(i)].to_vec())
            .collect())
    }
}

/// Row `j` of block `i` holds the first `n` entries of the sequence of
/// `g_i^b_i` seeded with the `j`-th unit vector.
pub fn build_p(factored: &FactoredPoly, f: &Field) -> Result<BlockMatrixP> {
    if factored.factors.is_empty() {
        return domain("need at least one factor");
    }
    let powers: Vec<Poly> = factored.factors.iter().map(|(g, b)| g.pow(*b as u64, f)).collect();
    let n: usize = powers.iter().map(Poly::deg).sum();
    let mut rows = Vec::with_capacity(n);
    let mut offsets = Vec::with_capacity(powers.len());
    for power in &powers {
        offsets.push(rows.len());
        let reg = Lfsr::new(power, f)?;
        let size = power.deg();
        for j in 0..size {
            let mut seed = vec![Elem::ZERO; size];
            seed[j] = f.one();
            rows.push(reg.extend(&seed, n)?);
        }
    }
    let p = Matrix::from_rows(rows);
    let p_inv = p
        .inverse(f)
        .ok_or_else(|| Error::Internal("block matrix is singular".into()))?;
    Ok(BlockMatrixP { p, p_inv, powers, offsets })
}

/// One cycle of Ω(f).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleClass {
    /// The minimal polynomial of the cycle is `prod g_i^r_i`.
    pub factor_exponents: Vec<u32>,
    pub period: u64,
    pub representative: LfsrState,
    pub component_states: Vec<LfsrState>,
    /// Lexicographically least state of the cycle, when the state space is
    /// within `Options::canonical_cap`.
    pub canonical: Option<LfsrState>,
}

impl CycleClass {
    /// The canonical state when known, else the representative.
    pub fn key_state(&self) -> &LfsrState {
        self.canonical.as_ref().unwrap_or(&self.representative)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleStructure {
    pub f: Poly,
    pub factored: FactoredPoly,
    pub p: BlockMatrixP,
    pub per_factor: Vec<PrimePowerCycles>,
    pub classes: Vec<CycleClass>,
}

impl CycleStructure {
    /// Sum of all periods; equals `q^deg f`.
    pub fn total_states(&self) -> u128 {
        self.classes.iter().map(|c| c.period as u128).sum()
    }

    pub fn same_cycle(&self, v1: &[Elem], v2: &[Elem], f: &Field) -> Result<SameCycle> {
        same_cycle(&self.p, v1, v2, f)
    }
}

struct Enumerator<'a> {
    field: &'a Field,
    regs: Vec<Lfsr>,
    per_factor: &'a [PrimePowerCycles],
    p: &'a BlockMatrixP,
    out: Vec<CycleClass>,
}

impl Enumerator<'_> {
    fn walk(&mut self, i: usize, lcm: u64, exps: &mut Vec<u32>, comps: &mut Vec<LfsrState>) -> Result<()> {
        if i == self.per_factor.len() {
            let representative = self.p.compose(comps, self.field)?;
            self.out.push(CycleClass {
                factor_exponents: exps.clone(),
                period: lcm,
                representative,
                component_states: comps.clone(),
                canonical: None,
            });
            return Ok(());
        }
        for cycle in &self.per_factor[i].cycles {
            let offsets = arith::gcd(cycle.period, lcm);
            let next = arith::lcm(lcm, cycle.period)?;
            exps.push(cycle.r);
            let mut state = cycle.state.clone();
            for _ in 0..offsets {
                comps.push(state.clone());
                self.walk(i + 1, next, exps, comps)?;
                comps.pop();
                self.regs[i].step(&mut state);
            }
            exps.pop();
        }
        Ok(())
    }
}

/// Every cycle of Ω(f), one class per choice of component cycles and shift offsets.
pub fn enumerate_cycles(f: &Poly, field: &Field, opts: &Options) -> Result<CycleStructure> {
    match f.degree() {
        Some(d) if d >= 1 => {}
        _ => return domain("characteristic polynomial must have degree at least 1"),
    }
    if !f.is_monic(field) {
        return domain("characteristic polynomial must be monic");
    }
    if f.coeff(0).is_zero() {
        return domain("characteristic polynomial must satisfy f(0) != 0");
    }
    let factored = f.factorize_with_seed(field, opts.seed)?;
    let p = build_p(&factored, field)?;
    let per_factor = factored
        .factors
        .iter()
        .map(|(g, b)| cycle_structure_prime_power(g, *b, field, opts))
        .collect::<Result<Vec<_>>>()?;
    let regs = p.powers.iter().map(|g| Lfsr::new(g, field)).collect::<Result<Vec<_>>>()?;
    let mut en = Enumerator { field, regs, per_factor: &per_factor, p: &p, out: Vec::new() };
    en.walk(0, 1, &mut Vec::new(), &mut Vec::new())?;
    let mut classes = en.out;

    let n = f.deg() as u32;
    let small = field.q().checked_pow(n).is_some_and(|s| s <= opts.canonical_cap);
    if small {
        let reg = Lfsr::new(f, field)?;
        for c in &mut classes {
            let (least, period) = reg.least_state(&c.representative)?;
            if period != c.period {
                return Err(Error::Internal(format!(
                    "cycle period {period} differs from predicted {}",
                    c.period
                )));
            }
            c.canonical = Some(least);
        }
    }
    classes.sort_by(|a, b| {
        (&a.factor_exponents, a.period, a.key_state()).cmp(&(&b.factor_exponents, b.period, b.key_state()))
    });
    Ok(CycleStructure { f: f.clone(), factored, p, per_factor, classes })
}

/// Least `l >= 0` with `l = residues[i] mod moduli[i]` for every `i`, or
/// `None` when the congruences are inconsistent.
pub fn generalized_crt(residues: &[u64], moduli: &[u64]) -> Result<Option<u64>> {
    if residues.len() != moduli.len() || residues.is_empty() {
        return domain("need equally many residues and moduli, at least one");
    }
    if moduli.contains(&0) {
        return domain("moduli must be positive");
    }
    let mut x: i128 = (residues[0] % moduli[0]) as i128;
    let mut m: i128 = moduli[0] as i128;
    for (&r, &mi) in residues.iter().zip(moduli).skip(1) {
        let (mi, r) = (mi as i128, (r % mi) as i128);
        let (g, inv, _) = arith::ext_gcd(m, mi);
        if (r - x) % g != 0 {
            return Ok(None);
        }
        let step = mi / g;
        let k = ((r - x) / g % step * inv % step).rem_euclid(step);
        x += m * k;
        m *= step;
        if m > u64::MAX as i128 {
            return Err(Error::ResourceCap("combined modulus overflows u64".into()));
        }
        x = x.rem_euclid(m);
    }
    Ok(Some(x as u64))
}

/// Outcome of the same-cycle test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SameCycle {
    /// `T^shift v1 = v2`, with `T^component_shifts[i] a_i = b_i` per factor.
    Yes { shift: u64, component_shifts: Vec<u64>, component_periods: Vec<u64> },
    No,
}

impl SameCycle {
    pub fn is_yes(&self) -> bool {
        matches!(self, SameCycle::Yes { .. })
    }
}

/// Decides whether `v1` and `v2` lie on one cycle by searching each
/// component cycle separately and combining the shifts.
pub fn same_cycle(p: &BlockMatrixP, v1: &[Elem], v2: &[Elem], f: &Field) -> Result<SameCycle> {
    let a = p.decompose(v1, f)?;
    let b = p.decompose(v2, f)?;
    let mut shifts = Vec::with_capacity(a.len());
    let mut periods = Vec::with_capacity(a.len());
    for ((ai, bi), power) in a.iter().zip(&b).zip(&p.powers) {
        let reg = Lfsr::new(power, f)?;
        let mut s = ai.clone();
        let mut found = (s == *bi).then_some(0u64);
        let mut e = 0u64;
        loop {
            reg.step(&mut s);
            e += 1;
            if s == *ai {
                break;
            }
            if found.is_none() && s == *bi {
                found = Some(e);
            }
        }
        match found {
            Some(l) => shifts.push(l),
            None => return Ok(SameCycle::No),
        }
        periods.push(e);
    }
    Ok(match generalized_crt(&shifts, &periods)? {
        Some(shift) => SameCycle::Yes { shift, component_shifts: shifts, component_periods: periods },
        None => SameCycle::No,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn crt_examples() {
        assert_eq!(generalized_crt(&[8, 35, 35], &[12, 39, 39]).unwrap(), Some(152));
        assert_eq!(generalized_crt(&[0], &[5]).unwrap(), Some(0));
        assert_eq!(generalized_crt(&[1, 2], &[4, 6]).unwrap(), None);
        assert_eq!(generalized_crt(&[3, 4], &[5, 7]).unwrap(), Some(18));
        assert!(generalized_crt(&[1], &[0]).is_err());
        assert!(generalized_crt(&[1, 2], &[3]).is_err());
    }

    #[test]
    fn crt_matches_scan() {
        for m1 in 1..13u64 {
            for m2 in 1..13u64 {
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let scan = (0..m1 * m2).find(|l| l % m1 == r1 && l % m2 == r2);
                        assert_eq!(generalized_crt(&[r1, r2], &[m1, m2]).unwrap(), scan);
                    }
                }
            }
        }
    }

    #[test]
    fn single_factor_p_is_identity() {
        let f = Field::prime(3).unwrap();
        let g = parse_poly("x^3+2x+2", &f).unwrap();
        let p = build_p(&g.factorize(&f).unwrap(), &f).unwrap();
        assert_eq!(p.p, Matrix::identity(3, &f));
    }

    #[test]
    fn small_product_structure() {
        let f = Field::prime(3).unwrap();
        let g = parse_poly("x^2+1", &f).unwrap().mul(&parse_poly("x^3+2x+2", &f).unwrap(), &f);
        let cs = enumerate_cycles(&g, &f, &Options::default()).unwrap();
        let mut periods: Vec<u64> = cs.classes.iter().map(|c| c.period).collect();
        periods.sort();
        assert_eq!(periods, [1, 4, 4, 13, 13, 52, 52, 52, 52]);
        assert_eq!(cs.total_states(), 243);
    }

    #[test]
    fn rejects_bad_input() {
        let f = Field::prime(3).unwrap();
        let o = Options::default();
        assert!(enumerate_cycles(&parse_poly("x^2", &f).unwrap(), &f, &o).is_err());
        assert!(enumerate_cycles(&parse_poly("2x+1", &f).unwrap(), &f, &o).is_err());
        assert!(enumerate_cycles(&parse_poly("1", &f).unwrap(), &f, &o).is_err());
    }
}
