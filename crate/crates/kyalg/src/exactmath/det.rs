use super::{denominator_lcm, det_modular, MathError, Poly, PolyMatrix, Rational, Result};
use num::{BigInt, One, Zero};
use rayon::prelude::*;

/// Size up to which [`det_auto`] uses rational evaluation/interpolation;
/// larger matrices go through the multi-modular route.
pub const DET_AUTO_EXACT_LIMIT: usize = 24;

const COFACTOR_LIMIT: usize = 8;

/// Fraction-free Gaussian elimination on an integer matrix.
pub(crate) fn bareiss_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let akk = &pivot_row[k];
        for row in tail.iter_mut() {
            let aik = row[k].clone();
            for j in k + 1..n {
                let v = akk * &row[j] - &aik * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Scale each row by the lcm of its denominators.  Returns the integer rows
/// and the product of the scale factors.
fn integer_rows(m: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut s = BigInt::one();
    let rows = m
        .iter()
        .map(|r| {
            let l = denominator_lcm(r.iter());
            let lr = Rational::from_integer(l.clone());
            s *= &l;
            r.iter().map(|q| (q * &lr).to_integer()).collect()
        })
        .collect();
    (rows, s)
}

/// Determinant of a rational matrix.
pub fn det_rational(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(MathError::NotSquare { rows: n, cols: m.first().map_or(0, |r| r.len()) });
    }
    let (rows, s) = integer_rows(m);
    Ok(Rational::new(bareiss_int(rows), s))
}

/// Scale every row of a polynomial matrix to integer coefficients.
pub(crate) fn integer_poly_rows(m: &PolyMatrix) -> (Vec<Vec<Vec<BigInt>>>, BigInt) {
    let mut s = BigInt::one();
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = denominator_lcm(row.iter().flat_map(|p| p.coeffs().iter()));
            let lr = Rational::from_integer(l.clone());
            s *= &l;
            row.iter().map(|p| p.coeffs().iter().map(|q| (q * &lr).to_integer()).collect()).collect()
        })
        .collect();
    (rows, s)
}

fn eval_int_poly(c: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for a in c.iter().rev() {
        acc = acc * x + a;
    }
    acc
}

/// Interpolation points 0, 1, -1, 2, -2, ...
pub(crate) fn sample_point(k: usize) -> i64 {
    let h = k.div_ceil(2) as i64;
    if k % 2 == 1 {
        h
    } else {
        -h
    }
}

/// Newton interpolation through `(xs[i], ys[i])`; the `xs` must be distinct.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Result<Poly> {
    if xs.len() != ys.len() {
        return Err(MathError::Dimension("interpolation data lengths differ".into()));
    }
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = &xs[i] - &xs[i - j];
            if den.is_zero() {
                return Err(MathError::DivisionByZero);
            }
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    let mut p = Poly::zero();
    for i in (0..n).rev() {
        p = &(&p * &Poly::from_coeffs(vec![-xs[i].clone(), Rational::one()])) + &Poly::constant(dd[i].clone());
    }
    Ok(p)
}

/// Determinant by evaluation at `D+1` integer points and interpolation over
/// ℚ, with `D` the row/column degree bound.
pub fn det_poly(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(MathError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() == 0 {
        return Ok(Poly::one());
    }
    let d = m.det_degree_bound();
    let (rows, s) = integer_poly_rows(m);
    let xs: Vec<i64> = (0..=d).map(sample_point).collect();
    let ys: Vec<Rational> = xs
        .par_iter()
        .map(|&x| {
            let x = BigInt::from(x);
            let a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|c| eval_int_poly(c, &x)).collect()).collect();
            Rational::from_integer(bareiss_int(a))
        })
        .collect();
    let xr: Vec<Rational> = xs.iter().map(|&x| Rational::from_integer(x.into())).collect();
    let p = interpolate(&xr, &ys)?;
    Ok(p.scale(&Rational::new(BigInt::one(), s)))
}

/// Fraction-free (Bareiss) elimination directly over ℚ[α].
pub fn det_bareiss_poly(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(MathError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let (irows, s) = integer_poly_rows(m);
    let mut a: Vec<Vec<Poly>> = irows.iter().map(|r| r.iter().map(|c| Poly::from_bigints(c)).collect()).collect();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = !sign;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = if prev.is_one() { v } else { v.exact_div(&prev)? };
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].scale(&Rational::new(BigInt::one(), s));
    Ok(if sign { -d } else { d })
}

/// Laplace expansion along the first row.  Only for tiny matrices; used as
/// an independent oracle.
pub fn det_cofactor(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(MathError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() > COFACTOR_LIMIT {
        return Err(MathError::TooLarge { size: m.rows(), limit: COFACTOR_LIMIT });
    }
    let rows: Vec<usize> = (0..m.rows()).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    Ok(cofactor_rec(m, &rows, &cols))
}

fn cofactor_rec(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Poly {
    if rows.is_empty() {
        return Poly::one();
    }
    let r = rows[0];
    let mut acc = Poly::zero();
    for (k, &c) in cols.iter().enumerate() {
        let e = m.get(r, c);
        if e.is_zero() {
            continue;
        }
        let sub: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let t = e * &cofactor_rec(m, &rows[1..], &sub);
        acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// Rational evaluation/interpolation for small matrices, multi-modular
/// otherwise.
pub fn det_auto(m: &PolyMatrix) -> Result<Poly> {
    if m.rows() <= DET_AUTO_EXACT_LIMIT {
        det_poly(m)
    } else {
        det_modular(m)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn small_integer_dets() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        assert_eq!(det_rational(&m).unwrap(), rat(5));
        let z = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(det_rational(&z).unwrap(), rat(-1));
    }

    #[test]
    fn interpolate_recovers_poly() {
        let p = Poly::from_ints(&[3, 0, -7, 0, 1]);
        let xs: Vec<Rational> = (0..5).map(|k| rat(sample_point(k))).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys).unwrap(), p);
    }

    #[test]
    fn routes_agree_on_tridiagonal() {
        let x = Poly::x();
        let one = Poly::one();
        let z = Poly::zero();
        let m = PolyMatrix::from_rows(vec![
            vec![x.clone(), one.clone(), z.clone()],
            vec![one.clone(), x.clone(), one.clone()],
            vec![z, one, x.clone()],
        ])
        .unwrap();
        let want = Poly::from_ints(&[0, -2, 0, 1]);
        assert_eq!(det_poly(&m).unwrap(), want);
        assert_eq!(det_bareiss_poly(&m).unwrap(), want);
        assert_eq!(det_cofactor(&m).unwrap(), want);
        assert_eq!(det_modular(&m).unwrap(), want);
    }

    #[test]
    fn cofactor_size_limit() {
        let m = PolyMatrix::identity(9);
        assert_eq!(det_cofactor(&m), Err(MathError::TooLarge { size: 9, limit: 8 }));
    }
}
