use super::{Field, MathError, Poly, Rational, Result};
use serde::{Deserialize, Serialize};

/// Dense matrix with [`Poly`] entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(MathError::Dimension("ragged rows".into()));
        }
        Ok(PolyMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix with integer-constant entries, handy in tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Poly::from_int(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = PolyMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != o.rows {
            return Err(MathError::Dimension(format!("{}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = PolyMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Largest entry degree, -1 for the zero matrix.
    pub fn max_degree(&self) -> i64 {
        self.data.iter().map(Poly::deg).max().unwrap_or(-1)
    }

    /// `min(Σ_rows max deg, Σ_cols max deg)`, an upper bound on the
    /// determinant degree.  Rows or columns that vanish contribute 0.
    pub fn det_degree_bound(&self) -> usize {
        let rowsum: i64 = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).deg()).max().unwrap_or(-1).max(0))
            .sum();
        let colsum: i64 = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).deg()).max().unwrap_or(-1).max(0))
            .sum();
        rowsum.min(colsum) as usize
    }

    /// Specialise α to a rational value.
    pub fn eval(&self, x: &Rational) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.eval(x)).collect()).collect()
    }

    /// Image of every entry in a field.
    pub fn map_field<F: Field>(&self, f: &F) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| f.from_poly(p)).collect()).collect()
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref<F: Field>(f: &F, m: &mut [Vec<F::Elem>]) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else { continue };
        m.swap(r, p);
        let inv = f.inv(&m[r][c])?;
        for j in c..cols {
            m[r][j] = f.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i == r || f.is_zero(&m[i][c]) {
                continue;
            }
            let t = m[i][c].clone();
            for j in c..cols {
                if !f.is_zero(&m[r][j]) {
                    let v = f.sub(&m[i][j], &f.mul(&t, &m[r][j]));
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank_over<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Result<usize> {
    let mut a = m.to_vec();
    Ok(rref(f, &mut a)?.len())
}

/// Basis of the right kernel `{v : M v = 0}`.
pub fn nullspace_over<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Result<Vec<Vec<F::Elem>>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.to_vec();
    let pivots = rref(f, &mut a)?;
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(&a[r][free]);
        }
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, RationalField};
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let f = RationalField::at(rat(0));
        let m = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(rank_over(&f, &m).unwrap(), 1);
        let k = nullspace_over(&f, &m).unwrap();
        assert_eq!(k, vec![vec![rat(-2), rat(1)]]);
    }

    #[test]
    fn degree_bound() {
        let x = Poly::x();
        let m = PolyMatrix::from_rows(vec![vec![x.pow(2), Poly::one()], vec![Poly::one(), x.clone()]]).unwrap();
        assert_eq!(m.det_degree_bound(), 3);
    }
}
