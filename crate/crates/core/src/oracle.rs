//! Exhaustive reference implementations used to validate the algebraic ones.

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::lfsr::{Lfsr, LfsrState};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BruteCyclePartition {
    /// `(period, lexicographically least state)`, in order of the least state.
    pub cycles: Vec<(u64, LfsrState)>,
    pub visited_count: u64,
}

fn rank(s: &[Elem], q: u64) -> u64 {
    s.iter().fold(0, |acc, e| acc * q + e.index())
}

fn unrank(mut idx: u64, n: usize, f: &Field) -> Result<LfsrState> {
    let q = f.q();
    let mut s = vec![Elem::ZERO; n];
    for slot in s.iter_mut().rev() {
        *slot = f.elem(idx % q)?;
        idx /= q;
    }
    Ok(s)
}

fn state_count(reg: &Lfsr, cap: u64) -> Result<u64> {
    let n = reg.degree() as u32;
    let total = arith::checked_pow(reg.field().q(), n)?;
    if total > cap {
        return Err(Error::ResourceCap(format!(
            "{total} states exceed the oracle cap of {cap}"
        )));
    }
    Ok(total)
}

/// Walks every state in lexicographic order. The first unvisited state of a
/// cycle is its least state.
pub fn brute_partition(f: &Poly, field: &Field, cap: u64) -> Result<BruteCyclePartition> {
    let reg = Lfsr::new(f, field)?;
    let total = state_count(&reg, cap)?;
    let q = field.q();
    let mut visited = vec![false; total as usize];
    let mut cycles = Vec::new();
    let mut visited_count = 0u64;
    for idx in 0..total {
        if visited[idx as usize] {
            continue;
        }
        let start = unrank(idx, reg.degree(), field)?;
        let mut s = start.clone();
        let mut period = 0u64;
        loop {
            visited[rank(&s, q) as usize] = true;
            period += 1;
            reg.step(&mut s);
            if s == start {
                break;
            }
        }
        visited_count += period;
        cycles.push((period, start));
    }
    Ok(BruteCyclePartition { cycles, visited_count })
}

/// Least `j` with `T^j v2 = v1`, or `None` when the states lie on different cycles.
pub fn brute_same_cycle(f: &Poly, field: &Field, v1: &[Elem], v2: &[Elem], cap: u64) -> Result<Option<u64>> {
    let reg = Lfsr::new(f, field)?;
    if v1.len() != reg.degree() || v2.len() != reg.degree() {
        return Err(Error::Domain("state length differs from the register length".into()));
    }
    let mut s = v2.to_vec();
    for j in 0..cap {
        if s == v1 {
            return Ok(Some(j));
        }
        reg.step(&mut s);
        if s == v2 {
            return Ok(None);
        }
    }
    Err(Error::ResourceCap(format!("cycle longer than the oracle cap of {cap}")))
}
