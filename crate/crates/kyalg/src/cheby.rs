//! Chebyshev series `P_{n+1} = α P_n − P_{n−1}`.
//!
//! Note the minus sign: it is the only choice consistent with
//! `P^U_3 = α² − 1` and with the determinant recursion in `n`.

use crate::exactmath::{poly_gcd, MathError, Poly, Rational, Result};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The classical series: `P^U_0 = 0`, `P^U_1 = 1`, extended to negative
/// indices by `P^U_{−n} = −P^U_n`.
pub fn cheb_u(n: i64) -> Poly {
    if n < 0 {
        return -cheb_u(-n);
    }
    let (mut a, mut b) = (Poly::zero(), Poly::one());
    if n == 0 {
        return a;
    }
    let x = Poly::x();
    for _ in 1..n {
        let c = &(&x * &b) - &a;
        a = b;
        b = c;
    }
    b
}

/// Quantum number `[n]` as a polynomial in `δ = [2]` (same coefficients as
/// [`cheb_u`]).
pub fn quantum_number(n: i64) -> Poly {
    cheb_u(n)
}

/// A two-sided Chebyshev series fixed by two consecutive terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChebSeries {
    pub anchor: i64,
    #[serde(rename = "pN")]
    pub p_n: Poly,
    #[serde(rename = "pN1")]
    pub p_n1: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RampingReport {
    pub coprime: bool,
    pub monic: bool,
    pub degree_step: bool,
}

impl RampingReport {
    pub fn ok(&self) -> bool {
        self.coprime && self.monic && self.degree_step
    }
}

/// Coefficients `a_k` with `P_{N+j} = Σ_k a_k P^U_{k+j}` for every `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UExpansion {
    pub anchor: i64,
    pub coeffs: BTreeMap<i64, Rational>,
}

impl UExpansion {
    /// `P_n = Σ_s c_s P^U_{n−s}`, i.e. the expansion written as shifts of
    /// the classical series (`s = N − k`), zero coefficients dropped.
    pub fn shifts(&self) -> BTreeMap<i64, Rational> {
        self.coeffs
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&k, v)| (self.anchor - k, v.clone()))
            .collect()
    }

    pub fn term(&self, n: i64) -> Poly {
        let mut acc = Poly::zero();
        for (s, c) in self.shifts() {
            acc = &acc + &cheb_u(n - s).scale(&c);
        }
        acc
    }
}

/// Write `p` in the basis `P^U_1, P^U_2, ...`; entry `k-1` is the coefficient
/// of `P^U_k`.
pub fn u_coordinates(p: &Poly) -> Vec<Rational> {
    let mut rest = p.clone();
    let n = p.coeffs().len();
    let mut out = vec![Rational::zero(); n];
    while let Some(d) = rest.degree() {
        let c = rest.lead().unwrap().clone();
        out[d] = c.clone();
        rest = &rest - &cheb_u(d as i64 + 1).scale(&c);
    }
    out
}

impl ChebSeries {
    pub fn new(anchor: i64, p_n: Poly, p_n1: Poly) -> Self {
        ChebSeries { anchor, p_n, p_n1 }
    }

    /// The classical series `P^U` (anchors 0, 1 at index 0).
    pub fn classical() -> Self {
        ChebSeries::new(0, Poly::zero(), Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p_n.is_zero() && self.p_n1.is_zero()
    }

    pub fn term(&self, n: i64) -> Poly {
        let x = Poly::x();
        let (mut a, mut b) = (self.p_n.clone(), self.p_n1.clone());
        if n >= self.anchor {
            // (a, b) = (P_i, P_{i+1}), i = anchor
            for _ in self.anchor..n {
                let c = &(&x * &b) - &a;
                a = b;
                b = c;
            }
            a
        } else {
            for _ in n..self.anchor {
                let c = &(&x * &a) - &b;
                b = a;
                a = c;
            }
            a
        }
    }

    /// Same series, anchored at `m` instead.
    pub fn reanchor(&self, m: i64) -> Self {
        ChebSeries::new(m, self.term(m), self.term(m + 1))
    }

    /// Split off the monic gcd of the anchors.
    pub fn reduce(&self) -> Result<(Poly, ChebSeries)> {
        if self.is_zero() {
            return Err(MathError::GcdUndefined);
        }
        let g = poly_gcd(&self.p_n, &self.p_n1)?;
        let r = ChebSeries::new(self.anchor, self.p_n.exact_div(&g)?, self.p_n1.exact_div(&g)?);
        Ok((g, r))
    }

    pub fn ramping_check(&self) -> RampingReport {
        let coprime = match poly_gcd(&self.p_n, &self.p_n1) {
            Ok(g) => g.is_one(),
            Err(_) => false,
        };
        RampingReport {
            coprime,
            monic: self.p_n.is_monic() && self.p_n1.is_monic(),
            degree_step: !self.p_n.is_zero() && self.p_n1.deg() == self.p_n.deg() + 1,
        }
    }

    pub fn u_expansion(&self) -> Result<UExpansion> {
        if !self.ramping_check().ok() {
            return Err(MathError::Dimension("series does not ramp at its anchor".into()));
        }
        let d = self.p_n.deg();
        let b = u_coordinates(&self.p_n); // b[k-1], k = 1..=d+1
        let bp = u_coordinates(&self.p_n1); // k = 1..=d+2
        let get = |v: &Vec<Rational>, k: i64| v.get((k - 1) as usize).cloned().unwrap_or_else(Rational::zero);
        let mut a: BTreeMap<i64, Rational> = BTreeMap::new();
        a.insert(d + 1, get(&bp, d + 2));
        a.insert(d, get(&bp, d + 1));
        a.insert(-(d + 1), Rational::zero());
        for k in (1..=d).rev() {
            let ak = a[&k].clone();
            a.insert(-k, ak - get(&b, k));
            let v = get(&bp, k) + a[&(-(k + 1))].clone();
            a.insert(k - 1, v);
        }
        let e = UExpansion { anchor: self.anchor, coeffs: a };
        if e.term(self.anchor) != self.p_n || e.term(self.anchor + 1) != self.p_n1 {
            return Err(MathError::Inexact);
        }
        Ok(e)
    }
}
