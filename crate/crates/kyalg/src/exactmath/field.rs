use super::{MathError, Poly, Rational, Result};
use num::{One, Zero};
use std::fmt::Debug;

/// A field in which matrices of [`Poly`] entries can be specialised and
/// row-reduced: ℚ with α set to a rational value, or ℚ[α]/(m) for an
/// irreducible `m`.
pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Self::Elem;
    /// Image of a polynomial in α.
    fn from_poly(&self, p: &Poly) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// ℚ, with polynomials evaluated at `alpha`.
#[derive(Clone, Debug)]
pub struct RationalField {
    pub alpha: Rational,
}

impl RationalField {
    pub fn at(alpha: Rational) -> Self {
        RationalField { alpha }
    }
}

impl Field for RationalField {
    type Elem = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
    fn from_poly(&self, p: &Poly) -> Rational {
        p.eval(&self.alpha)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            Err(MathError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

/// Element of an [`AlgebraicField`]: the reduced representative of degree
/// below that of the modulus.
pub type FieldElem = Poly;

/// ℚ[α]/(m).  The modulus is assumed irreducible; inversion fails with
/// [`MathError::NotInvertible`] if it meets a zero divisor.
#[derive(Clone, Debug)]
pub struct AlgebraicField {
    modulus: Poly,
}

impl AlgebraicField {
    pub fn new(modulus: Poly) -> Result<Self> {
        if modulus.deg() < 1 {
            return Err(MathError::Dimension("modulus must have positive degree".into()));
        }
        Ok(AlgebraicField { modulus: modulus.monic() })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        if p.deg() < self.modulus.deg() {
            p.clone()
        } else {
            p.rem(&self.modulus).expect("modulus nonzero")
        }
    }
}

impl Field for AlgebraicField {
    type Elem = FieldElem;
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn from_rational(&self, q: &Rational) -> Poly {
        Poly::constant(q.clone())
    }
    fn from_poly(&self, p: &Poly) -> Poly {
        self.reduce(p)
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a - b
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }
    fn neg(&self, a: &Poly) -> Poly {
        -a
    }
    fn inv(&self, a: &Poly) -> Result<Poly> {
        if a.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        // extended Euclid: s·a ≡ g (mod m)
        let (mut r0, mut r1) = (self.modulus.clone(), a.clone());
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.deg() != 0 {
            return Err(MathError::NotInvertible);
        }
        let c = r0.coeff(0).recip();
        Ok(self.reduce(&s0.scale(&c)))
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_quadratic_field() {
        let f = AlgebraicField::new(Poly::from_ints(&[-4, 1, 1])).unwrap();
        let a = Poly::from_ints(&[1, 1]);
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), Poly::one());
    }

    #[test]
    fn zero_divisor_detected() {
        let f = AlgebraicField::new(Poly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(f.inv(&Poly::from_ints(&[1, 1])), Err(MathError::NotInvertible));
    }
}
