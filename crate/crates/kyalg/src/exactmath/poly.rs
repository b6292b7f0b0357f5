use super::{denominator_lcm, rat_from_str, rat_to_string, MathError, Rational, Result};
use num::{BigInt, BigUint, Integer, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial over ℚ in the loop parameter α.
///
/// `coeffs()[i]` is the coefficient of α^i.  Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    /// The indeterminate α.
    pub fn x() -> Poly {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(q: Rational) -> Poly {
        Poly::from_coeffs(vec![q])
    }

    pub fn from_int(n: i64) -> Poly {
        Poly::constant(Rational::from_integer(n.into()))
    }

    /// `q·α^d`
    pub fn monomial(q: Rational, d: usize) -> Poly {
        let mut c = vec![Rational::zero(); d + 1];
        c[d] = q;
        Poly::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<Rational>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    /// Coefficients lowest degree first.
    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Poly {
        Poly::from_coeffs(c.iter().map(|v| Rational::from_integer(v.clone())).collect())
    }

    /// `α - r`
    pub fn linear_root(r: i64) -> Poly {
        Poly::from_ints(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the convention deg(0) = -1.
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.c.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|l| l.is_one())
    }

    pub fn scale(&self, q: &Rational) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|a| a * q).collect() }
    }

    /// Divide by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(x.into()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Multiply by α^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dl = d.lead().ok_or(MathError::DivisionByZero)?.clone();
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv = dl.recip();
        let mut r = self.c.clone();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            if t.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &t * dj;
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(MathError::Inexact)
        }
    }

    /// True iff `self` divides `other` (zero divides only zero).
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Write `self = scale · prim` with `prim` a primitive integer polynomial
    /// whose leading coefficient is positive.
    pub fn primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let l = denominator_lcm(self.c.iter());
        let ints: Vec<BigInt> = self.c.iter().map(|a| (a * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = content(&ints);
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|a| a / &g).collect();
        (Rational::new(g, l), prim)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.c.iter().all(|a| a.is_integer())
    }

    /// Square-free part (monic): `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_constant() {
            return self.monic();
        }
        let g = poly_gcd(self, &self.derivative()).expect("nonzero");
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return true;
        }
        poly_gcd(self, &self.derivative()).map(|g| g.is_constant()).unwrap_or(true)
    }

    /// Human-readable form, highest degree first, e.g. `α^4 - 7α^2 + 3`.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if !unit || i == 0 {
                out.push_str(&rat_to_string(&mag));
            }
            if i >= 1 {
                out.push_str(var);
                if i > 1 {
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }

    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.c.iter().map(rat_to_string).collect()
    }

    pub fn from_coeff_strings<S: AsRef<str>>(s: &[S]) -> Result<Poly> {
        Ok(Poly::from_coeffs(s.iter().map(|x| rat_from_str(x.as_ref())).collect::<Result<Vec<_>>>()?))
    }
}

/// Gcd of the integers in `v` (nonnegative; 1 for an all-zero list so that
/// division by it is harmless).
pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for a in v {
        if !a.is_zero() {
            g = g.gcd(a);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

fn primitive_int(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    v.iter().map(|a| a / &g).collect()
}

/// Pseudo-remainder of integer polynomials (`b` nonzero).
fn prem_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim_int(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[k + j] -= &lr * bj;
            }
        }
        trim_int(&mut r);
        // keep coefficient growth in check
        if r.len() > 1 {
            let g = content(&r);
            if !g.is_one() {
                for x in r.iter_mut() {
                    *x /= &g;
                }
            }
        }
    }
    r
}

/// Monic greatest common divisor over ℚ (primitive remainder sequence).
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(MathError::GcdUndefined);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Poly::one());
    }
    let (_, mut x) = a.primitive_integer();
    let (_, mut y) = b.primitive_integer();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem_int(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive_int(&r) };
        if y.len() == 1 {
            return Ok(Poly::one());
        }
    }
    Ok(Poly::from_bigints(&x).monic())
}

/// Exact `d`-th root: returns monic `q` with `q^d = p / lead(p)`.
pub fn poly_nth_root(p: &Poly, d: u32) -> Result<Poly> {
    if d == 0 {
        return Err(MathError::NotAPower { d, index: 0 });
    }
    let deg = p.degree().ok_or(MathError::NotAPower { d, index: 0 })?;
    if deg % d as usize != 0 {
        return Err(MathError::NotAPower { d, index: deg });
    }
    if d == 1 {
        return Ok(p.monic());
    }
    let e = deg / d as usize;
    let m = p.monic();
    // power-series root of the reversed polynomial r = 1 + r_1 t + ...
    let r: Vec<Rational> = m.c.iter().rev().cloned().collect();
    let inv_d = Rational::new(BigInt::one(), BigInt::from(d));
    let mut s = vec![Rational::one()];
    for k in 1..=e {
        let mut acc = Rational::zero();
        let kk = Rational::from_integer(BigInt::from(k));
        for j in 1..=k {
            if j >= r.len() || r[j].is_zero() {
                continue;
            }
            let jj = Rational::from_integer(BigInt::from(j));
            let w = &inv_d * &jj - &kk + &jj;
            acc += w * &r[j] * &s[k - j];
        }
        s.push(acc / &kk);
    }
    let q = Poly::from_coeffs(s.into_iter().rev().collect());
    let back = q.pow(d);
    if let Some(idx) = (0..=deg).find(|&i| back.coeff(i) != m.coeff(i)) {
        return Err(MathError::NotAPower { d, index: idx });
    }
    Ok(q)
}

// ---------------------------------------------------------------------------
// multiplication

const KRONECKER_MIN_LEN: usize = 24;

fn mul_int_school(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn write_bits(dst: &mut [u32], offset: usize, v: &BigUint) {
    let word = offset / 32;
    let sh = offset % 32;
    for (k, d) in v.to_u32_digits().into_iter().enumerate() {
        let wide = (d as u64) << sh;
        dst[word + k] |= wide as u32;
        if sh > 0 {
            dst[word + k + 1] |= (wide >> 32) as u32;
        }
    }
}

fn read_bits(src: &[u32], offset: usize, width: usize) -> BigUint {
    let mut digits = Vec::with_capacity(width / 32 + 2);
    let word = offset / 32;
    let sh = offset % 32;
    let nwords = width.div_ceil(32);
    for k in 0..nwords {
        let lo = *src.get(word + k).unwrap_or(&0) as u64;
        let hi = *src.get(word + k + 1).unwrap_or(&0) as u64;
        let v = ((hi << 32) | lo) >> sh;
        digits.push(v as u32);
    }
    let extra = nwords * 32 - width;
    if extra > 0 {
        if let Some(last) = digits.last_mut() {
            *last &= u32::MAX >> extra;
        }
    }
    BigUint::from_slice(&digits)
}

/// Product of polynomials with nonnegative coefficients by Kronecker substitution.
fn mul_nonneg_kronecker(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let ba = a.iter().map(|x| x.bits()).max().unwrap_or(0) as usize;
    let bb = b.iter().map(|x| x.bits()).max().unwrap_or(0) as usize;
    let n = a.len().min(b.len());
    let slot = ba + bb + (usize::BITS - n.leading_zeros()) as usize + 1;
    let pack = |v: &[BigUint]| {
        let mut buf = vec![0u32; (v.len() * slot).div_ceil(32) + 2];
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                write_bits(&mut buf, i * slot, x);
            }
        }
        BigUint::from_slice(&buf)
    };
    let prod = pack(a) * pack(b);
    let digits = prod.to_u32_digits();
    (0..a.len() + b.len() - 1).map(|i| read_bits(&digits, i * slot, slot)).collect()
}

fn split_sign(v: &[BigInt]) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut pos = Vec::with_capacity(v.len());
    let mut neg = Vec::with_capacity(v.len());
    for x in v {
        if x.is_negative() {
            pos.push(BigUint::zero());
            neg.push(x.magnitude().clone());
        } else {
            pos.push(x.magnitude().clone());
            neg.push(BigUint::zero());
        }
    }
    (pos, neg)
}

pub(crate) fn mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KRONECKER_MIN_LEN {
        let mut out = mul_int_school(a, b);
        trim_int(&mut out);
        return out;
    }
    let (ap, an) = split_sign(a);
    let (bp, bn) = split_sign(b);
    let any_neg = |v: &[BigUint]| v.iter().any(|x| !x.is_zero());
    let mut out: Vec<BigInt> = mul_nonneg_kronecker(&ap, &bp).into_iter().map(BigInt::from).collect();
    let mut add = |v: Vec<BigUint>, sign: bool| {
        for (o, x) in out.iter_mut().zip(v) {
            if sign {
                *o += BigInt::from(x);
            } else {
                *o -= BigInt::from(x);
            }
        }
    };
    if any_neg(&an) && any_neg(&bn) {
        add(mul_nonneg_kronecker(&an, &bn), true);
    }
    if any_neg(&bn) {
        add(mul_nonneg_kronecker(&ap, &bn), false);
    }
    if any_neg(&an) {
        add(mul_nonneg_kronecker(&an, &bp), false);
    }
    trim_int(&mut out);
    out
}

fn mul_poly(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    if a.c.len() == 1 {
        return b.scale(&a.c[0]);
    }
    if b.c.len() == 1 {
        return a.scale(&b.c[0]);
    }
    let la = denominator_lcm(a.c.iter());
    let lb = denominator_lcm(b.c.iter());
    let ia: Vec<BigInt> = a.c.iter().map(|x| (x * Rational::from_integer(la.clone())).to_integer()).collect();
    let ib: Vec<BigInt> = b.c.iter().map(|x| (x * Rational::from_integer(lb.clone())).to_integer()).collect();
    let prod = mul_int(&ia, &ib);
    let den = la * lb;
    Poly::from_coeffs(prod.into_iter().map(|x| Rational::new(x, den.clone())).collect())
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        mul_poly(self, o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                (&self).$m(o)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("α"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_var("a"))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson { coeffs: self.to_coeff_strings() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Poly::from_coeff_strings(&j.coeffs).map_err(serde::de::Error::custom)
    }
}
