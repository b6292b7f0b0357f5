use super::det::integer_poly_rows;
use super::{MathError, Poly, PolyMatrix, Rational, Result};
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

/// Square of a bound `H` with `|c| ≤ H` for every coefficient `c` of the
/// determinant of the integer polynomial matrix `rows`.
///
/// On the unit circle each entry is bounded by the sum of its coefficient
/// magnitudes, Hadamard's inequality bounds |det| there, and each
/// coefficient is bounded by the maximum modulus on the circle.
pub fn hadamard_bound_sq(rows: &[Vec<Vec<BigInt>>]) -> BigInt {
    let mut h = BigInt::one();
    for r in rows {
        let mut s = BigInt::zero();
        for c in r {
            let l1: BigInt = c.iter().map(|x| x.abs()).sum();
            s += &l1 * &l1;
        }
        h *= s;
    }
    h
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes below 2^31, descending.
fn primes_from_top() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31)).rev().filter(|&n| is_prime(n))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if piv != k {
            a.swap(piv, k);
            det = (p - det) % p;
        }
        det = det * a[k][k] % p;
        let inv = inv_mod(a[k][k], p);
        let (head, tail) = a.split_at_mut(k + 1);
        let prow = &head[k];
        for row in tail.iter_mut() {
            if row[k] == 0 {
                continue;
            }
            let f = row[k] * inv % p;
            for j in k + 1..n {
                if prow[j] != 0 {
                    row[j] = (row[j] + p - f * prow[j] % p) % p;
                }
            }
            row[k] = 0;
        }
    }
    det
}

/// Coefficients of the interpolating polynomial through (i, ys[i]) mod p.
fn interpolate_mod(ys: &[u64], p: u64) -> Vec<u64> {
    let n = ys.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        let inv = inv_mod(j as u64, p);
        for i in (j..n).rev() {
            dd[i] = (dd[i] + p - dd[i - 1]) % p * inv % p;
        }
    }
    // Horner on the Newton form with nodes 0, 1, 2, ...
    let mut c = vec![0u64; n];
    for i in (0..n).rev() {
        // c <- c·(x - i) + dd[i]
        let xi = i as u64 % p;
        let mut next = vec![0u64; n];
        for k in 0..n {
            if c[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = (next[k + 1] + c[k]) % p;
            }
            next[k] = (next[k] + p - c[k] * xi % p) % p;
        }
        next[0] = (next[0] + dd[i]) % p;
        c = next;
    }
    c
}

fn image_mod(rows: &[Vec<Vec<BigInt>>], d: usize, p: u64) -> Vec<u64> {
    let red: Vec<Vec<Vec<u64>>> =
        rows.iter().map(|r| r.iter().map(|c| c.iter().map(|x| reduce(x, p)).collect()).collect()).collect();
    let ys: Vec<u64> = (0..=d as u64)
        .map(|t| {
            let a: Vec<Vec<u64>> = red
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| c.iter().rev().fold(0u64, |acc, &x| (acc * t + x) % p))
                        .collect()
                })
                .collect();
            det_mod(a, p)
        })
        .collect();
    interpolate_mod(&ys, p)
}

/// Determinant by evaluation/interpolation modulo many 31-bit primes and
/// Chinese remaindering, stopping once the modulus exceeds twice the
/// coefficient bound.
pub fn det_modular(m: &PolyMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(MathError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() == 0 {
        return Ok(Poly::one());
    }
    let d = m.det_degree_bound();
    let (rows, s) = integer_poly_rows(m);
    let bound = hadamard_bound_sq(&rows) * 4;
    let mut coeffs = vec![BigInt::zero(); d + 1];
    let mut modulus = BigInt::one();
    let mut primes = primes_from_top();
    let batch = rayon::current_num_threads().max(1);
    while &modulus * &modulus <= bound {
        let ps: Vec<u64> = primes.by_ref().take(batch).collect();
        let images: Vec<(u64, Vec<u64>)> = ps.par_iter().map(|&p| (p, image_mod(&rows, d, p))).collect();
        for (p, img) in images {
            let pb = BigInt::from(p);
            let minv = inv_mod(reduce(&modulus, p), p);
            for (c, &r) in coeffs.iter_mut().zip(&img) {
                let cur = reduce(c, p);
                let t = (r + p - cur) % p * minv % p;
                *c += &modulus * BigInt::from(t);
            }
            modulus *= pb;
        }
    }
    let half = &modulus >> 1;
    let out: Vec<Rational> = coeffs
        .into_iter()
        .map(|c| {
            let c = c.mod_floor(&modulus);
            let c = if c > half { c - &modulus } else { c };
            Rational::new(c, s.clone())
        })
        .collect();
    Ok(Poly::from_coeffs(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_mod_p() {
        let p = 1_000_003;
        // 3 + 2x + x^2
        let ys: Vec<u64> = (0..3u64).map(|x| (3 + 2 * x + x * x) % p).collect();
        assert_eq!(interpolate_mod(&ys, p), vec![3, 2, 1]);
    }

    #[test]
    fn negative_and_rational_entries() {
        let half = Poly::constant(Rational::new(1.into(), 2.into()));
        let m = PolyMatrix::from_rows(vec![
            vec![half.clone(), Poly::from_ints(&[-5, 0, 3])],
            vec![Poly::from_ints(&[7, -1]), half.clone()],
        ])
        .unwrap();
        assert_eq!(det_modular(&m).unwrap(), super::super::det_cofactor(&m).unwrap());
    }
}
