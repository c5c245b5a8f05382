mod common;

use common::{gf, monic_polys, poly, st};
use lfsr_cycles::arith;
use lfsr_cycles::lfsr::{generate_sequence, m_sequence, minimal_polynomial, trace_sequence, Lfsr, MinimalPolynomial};
use lfsr_cycles::{Field, Poly, Sequence};
use proptest::prelude::*;

fn brute_order(g: &Poly, f: &Field) -> u64 {
    (1..).find(|&k| Poly::x(f).pow_mod(k, g, f).is_one(f)).unwrap()
}

fn rotations_equal(a: &Sequence, b: &Sequence) -> bool {
    a.period() == b.period() && (0..a.period() as i64).any(|k| a.shift(k) == *b)
}

#[test]
fn periods_divide_order_for_small_registers() {
    for p in [2, 3] {
        let f = gf(p);
        for n in 1..=4 {
            for g in monic_polys(&f, n) {
                let e = brute_order(&g, &f);
                let reg = Lfsr::new(&g, &f).unwrap();
                for idx in 0..f.q().pow(n as u32) {
                    let s: Vec<i64> = (0..n).map(|i| ((idx / f.q().pow(i as u32)) % f.q()) as i64).collect();
                    let period = reg.period_of(&st(&f, &s)).unwrap();
                    assert_eq!(e % period, 0, "{} {:?}", g.render(&f), s);
                }
            }
        }
    }
}

#[test]
fn minimal_polynomial_divides_register_polynomial() {
    let f = gf(3);
    for g in monic_polys(&f, 4) {
        let reg = Lfsr::new(&g, &f).unwrap();
        for s in [[1, 0, 0, 0], [0, 1, 2, 0], [2, 2, 1, 1], [0, 0, 0, 1]] {
            let seq = reg.generate(&st(&f, &s)).unwrap();
            match minimal_polynomial(&seq, &f) {
                MinimalPolynomial::Poly(h) => assert!(g.rem(&h, &f).unwrap().is_zero()),
                MinimalPolynomial::ZeroSequence => panic!("nonzero seed"),
            }
        }
    }
}

#[test]
fn trace_sequences_satisfy_their_recurrence() {
    let f = gf(3);
    for g in monic_polys(&f, 3).into_iter().filter(|g| g.is_primitive(&f).unwrap()) {
        let tr = trace_sequence(&g, &f).unwrap();
        assert_eq!(tr.len(), 26);
        let from_prefix = generate_sequence(&g, &tr[..3], &f).unwrap();
        assert_eq!(from_prefix.entries(), &tr[..]);
        let m = m_sequence(&g, &f).unwrap();
        assert_eq!(m.entries()[..3], st(&f, &[1, 1, 1])[..]);
        assert!(rotations_equal(&m, &from_prefix));
    }
}

#[test]
fn decimation_keeps_maximal_length_iff_coprime() {
    let f = gf(3);
    let m = m_sequence(&poly(&f, "x^3+x^2+2x+1"), &f).unwrap();
    for d in 1..26u64 {
        let dec = m.decimate(d).unwrap();
        let maximal = dec.period() == 26
            && matches!(minimal_polynomial(&dec, &f), MinimalPolynomial::Poly(ref h) if h.deg() == 3 && h.is_primitive(&f).unwrap());
        assert_eq!(maximal, arith::gcd(d, 26) == 1, "d={d}");
    }
}

#[test]
fn binary_triangle_register() {
    let f = gf(2);
    let seq = generate_sequence(&poly(&f, "x^2+x+1"), &st(&f, &[1, 1]), &f).unwrap();
    let expected = Sequence::from_period(st(&f, &[1, 1, 0])).unwrap();
    assert!(rotations_equal(&seq, &expected));
}

#[test]
fn step_by_matches_iteration() {
    let f = gf(3);
    let reg = Lfsr::new(&poly(&f, "x^4+x+2"), &f).unwrap();
    let mut s = st(&f, &[1, 0, 2, 1]);
    let start = s.clone();
    for k in 0..200u64 {
        assert_eq!(reg.step_by(&start, k).unwrap(), s);
        reg.step(&mut s);
    }
}

fn small_register() -> impl Strategy<Value = (u64, Vec<u64>, Vec<u64>)> {
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..6).prop_flat_map(|(p, n)| {
        (Just(p), prop::collection::vec(0..p, n), prop::collection::vec(0..p, n))
    })
}

proptest! {
    #[test]
    fn least_period_of_any_state_divides_order((p, mut c, s) in small_register()) {
        let f = gf(p);
        if c[0] == 0 { c[0] = 1; }
        let mut coeffs: Vec<_> = c.iter().map(|&x| f.elem(x).unwrap()).collect();
        coeffs.push(f.one());
        let g = Poly::new(coeffs);
        let reg = Lfsr::new(&g, &f).unwrap();
        let s: Vec<_> = s.iter().map(|&x| f.elem(x).unwrap()).collect();
        let period = reg.period_of(&s).unwrap();
        prop_assert_eq!(reg.step_by(&s, period).unwrap(), s.clone());
        let e = brute_order(&g, &f);
        prop_assert_eq!(e % period, 0);
    }
}
