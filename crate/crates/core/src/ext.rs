//! GF(q^n) modelled as GF(q)[x] / (h(x)) for an irreducible h of degree n.

use crate::error::{domain, Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct ExtField {
    base: Field,
    modulus: Poly,
}

impl ExtField {
    pub fn new(modulus: &Poly, base: &Field) -> Result<ExtField> {
        if !modulus.is_irreducible(base)? {
            return domain("extension modulus must be irreducible");
        }
        Ok(ExtField { base: base.clone(), modulus: modulus.monic(base).1 })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    /// The class of x, a root of the modulus.
    pub fn generator(&self) -> Poly {
        self.reduce(&Poly::x(&self.base))
    }

    pub fn one(&self) -> Poly {
        Poly::one(&self.base)
    }

    pub fn embed(&self, c: Elem) -> Poly {
        Poly::constant(c)
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        a.rem(&self.modulus, &self.base).expect("nonzero modulus")
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, &self.base)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b, &self.base)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul_mod(b, &self.modulus, &self.base)
    }

    pub fn pow(&self, a: &Poly, k: u64) -> Poly {
        a.pow_mod(k, &self.modulus, &self.base)
    }

    /// Coordinates in the basis 1, x, ..., x^(n-1).
    pub fn coords(&self, a: &Poly) -> Vec<Elem> {
        (0..self.degree()).map(|i| a.coeff(i)).collect()
    }

    /// a + a^q + ... + a^(q^(n-1)), as an element of the base field.
    pub fn trace(&self, a: &Poly) -> Result<Elem> {
        let a = self.reduce(a);
        let mut term = a.clone();
        let mut acc = a;
        for _ in 1..self.degree() {
            term = self.pow(&term, self.base.q());
            acc = self.add(&acc, &term);
        }
        match acc.degree() {
            None => Ok(Elem::ZERO),
            Some(0) => Ok(acc.coeff(0)),
            Some(_) => Err(Error::Internal("trace left the base field".into())),
        }
    }
}
