use super::{MathError, Poly, PolyMatrix, Result};

/// Invariant factors of a polynomial matrix over ℚ[α] (monic, each dividing
/// the next; trailing zeros for a rank-deficient matrix).
pub fn smith_invariants(m: &PolyMatrix) -> Result<Vec<Poly>> {
    let mut a = m.to_rows();
    let rows = m.rows();
    let cols = m.cols();
    let n = rows.min(cols);
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // pivot: nonzero entry of least degree in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].deg() < a[bi][bj].deg()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                out.extend(std::iter::repeat_n(Poly::zero(), n - t));
                return Ok(out);
            };
            a.swap(t, pi);
            for r in a.iter_mut() {
                r.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t])?;
                for j in t..cols {
                    let v = &a[i][j] - &(&q * &a[t][j]);
                    a[i][j] = v;
                }
                debug_assert_eq!(a[i][t], r);
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t])?;
                for row in a.iter_mut().skip(t) {
                    let v = &row[j] - &(&q * &row[t]);
                    row[j] = v;
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility of the rest by the pivot
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[t][t].divides(&a[i][j])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = &a[t][j] + &a[i][j];
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_zero() {
            return Err(MathError::Dimension("pivot vanished".into()));
        }
        out.push(a[t][t].monic());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tridiagonal_example() {
        let d = Poly::x();
        let one = Poly::one();
        let z = Poly::zero();
        let m = PolyMatrix::from_rows(vec![
            vec![d.clone(), one.clone(), z.clone()],
            vec![one.clone(), d.clone(), one.clone()],
            vec![z, one.clone(), d.clone()],
        ])
        .unwrap();
        let inv = smith_invariants(&m).unwrap();
        assert_eq!(inv, vec![one.clone(), one, Poly::from_ints(&[0, -2, 0, 1])]);
    }

    #[test]
    fn rank_deficient() {
        let m = PolyMatrix::from_int_rows(&[&[2, 4], &[1, 2]]).unwrap();
        assert_eq!(smith_invariants(&m).unwrap(), vec![Poly::one(), Poly::zero()]);
    }
}
