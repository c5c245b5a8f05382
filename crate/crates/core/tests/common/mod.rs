#![allow(dead_code)]

use lfsr_cycles::lfsr::{Lfsr, LfsrState};
use lfsr_cycles::parse::parse_poly;
use lfsr_cycles::structure::CycleStructure;
use lfsr_cycles::{Field, Poly};

pub fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

pub fn poly(f: &Field, text: &str) -> Poly {
    parse_poly(text, f).unwrap()
}

pub fn st(f: &Field, v: &[i64]) -> LfsrState {
    v.iter().map(|&c| f.from_int(c)).collect()
}

/// `(period, least state)` pairs sorted by state.
pub fn canonical_cycles(cs: &CycleStructure) -> Vec<(u64, LfsrState)> {
    let mut out: Vec<(u64, LfsrState)> = cs
        .classes
        .iter()
        .map(|c| (c.period, c.canonical.clone().expect("canonical state")))
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

/// Least state of the cycle through `s` under `g`.
pub fn least(g: &Poly, f: &Field, s: &[lfsr_cycles::Elem]) -> LfsrState {
    Lfsr::new(g, f).unwrap().least_state(s).unwrap().0
}

/// Every monic polynomial of degree `n` with nonzero constant term.
pub fn monic_polys(f: &Field, n: usize) -> Vec<Poly> {
    let q = f.q();
    let mut out = Vec::new();
    for idx in 0..q.pow(n as u32) {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut rest = idx;
        for _ in 0..n {
            coeffs.push(f.elem(rest % q).unwrap());
            rest /= q;
        }
        coeffs.push(f.one());
        if coeffs[0].is_zero() {
            continue;
        }
        out.push(Poly::new(coeffs));
    }
    out
}
