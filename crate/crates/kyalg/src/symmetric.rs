//! Group algebra ℚΣ_r, Young idempotents and rational Specht bases.
//!
//! Products follow diagram stacking: `(a·b)(i) = b(a(i))`, so `a·b` is the
//! permutation diagram of `a` placed on top of `b`.

use crate::exactmath::{MathError, Rational, Result};
use num::{BigInt, One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// Integer partition, weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(r: usize) -> Self {
        Partition::new(vec![r])
    }

    pub fn column(r: usize) -> Self {
        Partition::new(vec![1; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|c| self.0.iter().filter(|&&x| x >= c).count()).collect())
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            if i == 0 || self.0[i - 1] > cur {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition(p));
            }
        }
        out
    }

    /// All partitions of `r`, in reverse lexicographic order ((r) first).
    pub fn all(r: usize) -> Vec<Partition> {
        fn rec(r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if r == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=r.min(max)).rev() {
                cur.push(k);
                rec(r - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(r, r, &mut Vec::new(), &mut out);
        out
    }

    /// Dimension of the Specht module (hook length formula).
    pub fn hook_dimension(&self) -> usize {
        let conj = self.conjugate();
        let mut num = BigInt::one();
        for k in 2..=self.size() {
            num *= k;
        }
        let mut den = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                den *= (row - j - 1) + (conj.0[j] - i - 1) + 1;
            }
        }
        use num::ToPrimitive;
        (num / den).to_usize().unwrap()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = String;
    /// `"2,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(|c| c == ',' || c == '-')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad partition part {t:?} in {s:?}")))
            .collect::<std::result::Result<_, _>>()?;
        if parts.contains(&0) {
            return Err(format!("partition {s:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("partition {s:?} is not weakly decreasing"));
        }
        Ok(Partition(parts))
    }
}

/// Permutation of `{0..r}` as an image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(r: usize) -> Self {
        Perm((0..r as u8).collect())
    }

    pub fn from_images(v: &[usize]) -> Self {
        Perm(v.iter().map(|&x| x as u8).collect())
    }

    /// Transposition of `a` and `b` (0-based).
    pub fn transposition(r: usize, a: usize, b: usize) -> Self {
        let mut p = Perm::identity(r);
        p.0.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `self` then `o`: `i ↦ o(self(i))`.
    pub fn then(&self, o: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| o.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j as usize] = i as u8;
        }
        Perm(v)
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Restrict to the first `r` points; `None` unless the rest are fixed.
    pub fn restrict(&self, r: usize) -> Option<Perm> {
        if (r..self.0.len()).all(|i| self.0[i] as usize == i) {
            Some(Perm(self.0[..r].to_vec()))
        } else {
            None
        }
    }

    /// Extend by fixed points up to `r`.
    pub fn extend(&self, r: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u8..r as u8);
        Perm(v)
    }
}

/// Σ_r with a dense multiplication table.
pub struct SymGroup {
    r: usize,
    elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl SymGroup {
    fn build(r: usize) -> SymGroup {
        let mut elems = Vec::new();
        fn rec(cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if cur.len() == used.len() {
                out.push(Perm(cur.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(i as u8);
                    rec(cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(&mut Vec::new(), &mut vec![false; r], &mut elems);
        // order by (length, lexicographic images); identity first
        elems.sort_by_key(|p| (p.length(), p.clone()));
        let index: HashMap<Perm, usize> = elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elems.len();
        let mut mul = vec![0u16; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i * n + j] = index[&a.then(b)] as u16;
            }
        }
        let inv = elems.iter().map(|p| index[&p.inverse()] as u16).collect();
        SymGroup { r, elems, index, mul, inv }
    }

    /// Shared instance for `Σ_r`.
    pub fn get(r: usize) -> Arc<SymGroup> {
        static C: OnceLock<Mutex<HashMap<usize, Arc<SymGroup>>>> = OnceLock::new();
        let m = C.get_or_init(Default::default);
        if let Some(g) = m.lock().unwrap().get(&r) {
            return g.clone();
        }
        let g = Arc::new(SymGroup::build(r));
        m.lock().unwrap().insert(r, g.clone());
        g
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    /// Elements ordered by (length, lexicographic images).
    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn perm(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elems.len() + b] as usize
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inv[a] as usize
    }
}

/// Element of ℚΣ_r stored densely over the group's element order.
#[derive(Clone)]
pub struct GroupAlgebraElement {
    group: Arc<SymGroup>,
    coeffs: Vec<Rational>,
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, o: &Self) -> bool {
        self.group.r == o.group.r && self.coeffs == o.coeffs
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .map(|(p, c)| format!("{}·{:?}", crate::exactmath::rat_to_string(c), p.images()))
            .collect();
        write!(f, "[{}]", terms.join(" + "))
    }
}

impl GroupAlgebraElement {
    pub fn zero(r: usize) -> Self {
        let group = SymGroup::get(r);
        let n = group.order();
        GroupAlgebraElement { group, coeffs: vec![Rational::zero(); n] }
    }

    pub fn basis(p: &Perm) -> Self {
        let mut z = GroupAlgebraElement::zero(p.len());
        let i = z.group.index_of(p);
        z.coeffs[i] = Rational::one();
        z
    }

    pub fn identity(r: usize) -> Self {
        GroupAlgebraElement::basis(&Perm::identity(r))
    }

    pub fn from_terms(r: usize, terms: &[(Perm, Rational)]) -> Self {
        let mut z = GroupAlgebraElement::zero(r);
        for (p, c) in terms {
            let i = z.group.index_of(p);
            z.coeffs[i] += c;
        }
        z
    }

    pub fn degree(&self) -> usize {
        self.group.r
    }

    pub fn group(&self) -> &Arc<SymGroup> {
        &self.group
    }

    pub fn dense(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Perm) -> Rational {
        self.coeffs[self.group.index_of(p)].clone()
    }

    /// Coefficient of the identity.
    pub fn coeff_e(&self) -> Rational {
        self.coeffs[0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn support(&self) -> impl Iterator<Item = (&Perm, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.group.perm(i), c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        GroupAlgebraElement { group: self.group.clone(), coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        GroupAlgebraElement { group: self.group.clone(), coeffs }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        GroupAlgebraElement { group: self.group.clone(), coeffs: self.coeffs.iter().map(|a| a * q).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let g = &self.group;
        let mut out = vec![Rational::zero(); g.order()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[g.mul_idx(i, j)] += a * b;
                }
            }
        }
        GroupAlgebraElement { group: g.clone(), coeffs: out }
    }

    /// Left multiplication by a single permutation (by index).
    pub fn left_mul_perm(&self, p: usize) -> Self {
        let g = &self.group;
        let mut out = vec![Rational::zero(); g.order()];
        for (j, b) in self.coeffs.iter().enumerate() {
            if !b.is_zero() {
                out[g.mul_idx(p, j)] = b.clone();
            }
        }
        GroupAlgebraElement { group: g.clone(), coeffs: out }
    }

    /// Linear extension of `σ ↦ σ⁻¹`.
    pub fn star(&self) -> Self {
        let g = &self.group;
        let mut out = vec![Rational::zero(); g.order()];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[g.inv_idx(i)] = a.clone();
        }
        GroupAlgebraElement { group: g.clone(), coeffs: out }
    }
}

fn symmetrizer(r: usize, blocks: &[usize], signed: bool) -> GroupAlgebraElement {
    // product over consecutive blocks of the (anti)symmetrizer of each block
    let mut acc = GroupAlgebraElement::identity(r);
    let mut start = 0;
    for &b in blocks {
        let g = SymGroup::get(b);
        let mut s = GroupAlgebraElement::zero(r);
        for p in g.elements() {
            let mut img: Vec<usize> = (0..r).collect();
            for i in 0..b {
                img[start + i] = start + p.image(i);
            }
            let c = if signed { p.sign() } else { 1 };
            let idx = s.group.index_of(&Perm::from_images(&img));
            s.coeffs[idx] = Rational::from_integer(c.into());
        }
        acc = acc.mul(&s);
        start += b;
    }
    acc
}

/// Young idempotent and rational Specht basis for one partition.
pub struct Specht {
    pub lambda: Partition,
    /// Row symmetrizer `E_λ`.
    pub e: GroupAlgebraElement,
    /// Column antisymmetrizer `F_λ` (blocks of the conjugate partition).
    pub f: GroupAlgebraElement,
    /// Shortest `w'` with `E w' F ≠ 0`.
    pub w_prime: Perm,
    /// Normalised idempotent `C_λ`.
    pub c: GroupAlgebraElement,
    /// `x_1 = e, x_2, ...` with `{x_i C_λ}` a basis of the Specht module.
    pub basis: Vec<Perm>,
    /// `x_i C_λ` as dense vectors.
    basis_vecs: Vec<GroupAlgebraElement>,
    /// Rows of the left inverse used to read coordinates: `coord_k(v) =
    /// Σ_j solve[k][j] · v[pivots[j]]`.
    pivots: Vec<usize>,
    solve: Vec<Vec<Rational>>,
    /// `K(h) = coeff_e(C h C)` for every `h` (group order).
    kernel: Vec<Rational>,
}

impl Specht {
    fn build(lambda: &Partition) -> Specht {
        let r = lambda.size();
        let e = symmetrizer(r, lambda.parts(), false);
        let f = symmetrizer(r, lambda.conjugate().parts(), true);
        let g = SymGroup::get(r);
        let mut w_prime = None;
        for (i, p) in g.elements().iter().enumerate() {
            if !e.mul(&GroupAlgebraElement::identity(r).left_mul_perm(i)).mul(&f).is_zero() {
                w_prime = Some(p.clone());
                break;
            }
        }
        let w_prime = w_prime.expect("some w' exists");
        let wp = GroupAlgebraElement::basis(&w_prime);
        let w = GroupAlgebraElement::basis(&w_prime.inverse());
        let x = e.mul(&wp).mul(&f).mul(&w).mul(&e);
        let x2 = x.mul(&x);
        let i = x.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let kappa = &x2.coeffs[i] / &x.coeffs[i];
        let c = x.scale(&kappa.recip());
        debug_assert!(c.mul(&c) == c);

        // greedy basis by (length, lex)
        let dim = lambda.hook_dimension();
        let mut basis = Vec::new();
        let mut basis_vecs = Vec::new();
        let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
        for (i, p) in g.elements().iter().enumerate() {
            if basis.len() == dim {
                break;
            }
            let v = c.left_mul_perm(i);
            let mut red = v.coeffs.clone();
            for (piv, row) in &echelon {
                if !red[*piv].is_zero() {
                    let t = red[*piv].clone();
                    for (a, b) in red.iter_mut().zip(row) {
                        *a -= &t * b;
                    }
                }
            }
            if let Some(piv) = red.iter().position(|x| !x.is_zero()) {
                let inv = red[piv].recip();
                let row: Vec<Rational> = red.iter().map(|x| x * &inv).collect();
                for (_, other) in echelon.iter_mut() {
                    if !other[piv].is_zero() {
                        let t = other[piv].clone();
                        for (a, b) in other.iter_mut().zip(&row) {
                            *a -= &t * b;
                        }
                    }
                }
                echelon.push((piv, row));
                basis.push(p.clone());
                basis_vecs.push(v);
            }
        }
        assert_eq!(basis.len(), dim, "Specht basis size");

        // coordinate solver on pivot columns: B[j][k] = (x_k C)[pivot_j]
        let pivots: Vec<usize> = echelon.iter().map(|(p, _)| *p).collect();
        let bmat: Vec<Vec<Rational>> =
            pivots.iter().map(|&pj| basis_vecs.iter().map(|v| v.coeffs[pj].clone()).collect()).collect();
        let solve = invert(&bmat);

        let n = g.order();
        let mut kernel = vec![Rational::zero(); n];
        for h in 0..n {
            let mut acc = Rational::zero();
            for (a, ca) in c.coeffs.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let b = g.inv_idx(g.mul_idx(a, h));
                let cb = &c.coeffs[b];
                if !cb.is_zero() {
                    acc += ca * cb;
                }
            }
            kernel[h] = acc;
        }
        Specht { lambda: lambda.clone(), e, f, w_prime, c, basis, basis_vecs, pivots, solve, kernel }
    }

    /// Shared instance for `λ`.
    pub fn get(lambda: &Partition) -> Arc<Specht> {
        static C: OnceLock<Mutex<HashMap<Partition, Arc<Specht>>>> = OnceLock::new();
        let m = C.get_or_init(Default::default);
        if let Some(s) = m.lock().unwrap().get(lambda) {
            return s.clone();
        }
        let s = Arc::new(Specht::build(lambda));
        m.lock().unwrap().insert(lambda.clone(), s.clone());
        s
    }

    pub fn degree(&self) -> usize {
        self.lambda.size()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn group(&self) -> Arc<SymGroup> {
        SymGroup::get(self.degree())
    }

    /// `x_i C_λ`.
    pub fn basis_vector(&self, i: usize) -> &GroupAlgebraElement {
        &self.basis_vecs[i]
    }

    /// `coeff_e(C h C)` for `h` given by its group index.
    pub fn kernel(&self, h: usize) -> &Rational {
        &self.kernel[h]
    }

    /// `t` with `z = t·C_λ`; errors if `z` is not a multiple of `C_λ`.
    pub fn scalar_extract(&self, z: &GroupAlgebraElement) -> Result<Rational> {
        let t = z.coeff_e() / self.c.coeff_e();
        if z.sub(&self.c.scale(&t)).is_zero() {
            Ok(t)
        } else {
            Err(MathError::Dimension("element is not proportional to the idempotent".into()))
        }
    }

    /// Form value `⟨x_i C, σ x_j C⟩ = scalar of C x_i⁻¹ σ x_j C`; σ is a
    /// group index.
    pub fn form(&self, i: usize, sigma: usize, j: usize) -> Rational {
        let g = self.group();
        let xi = g.inv_idx(g.index_of(&self.basis[i]));
        let xj = g.index_of(&self.basis[j]);
        let h = g.mul_idx(g.mul_idx(xi, sigma), xj);
        &self.kernel[h] / self.c.coeff_e()
    }

    /// The `d_λ × d_λ` Gram matrix of the Specht basis (`σ = e`).
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.form(i, 0, j)).collect()).collect()
    }

    /// Coordinates of an element of the Specht module in the basis `{x_k C}`.
    pub fn coords(&self, v: &GroupAlgebraElement) -> Result<Vec<Rational>> {
        let vals: Vec<&Rational> = self.pivots.iter().map(|&p| &v.coeffs[p]).collect();
        let out: Vec<Rational> =
            self.solve.iter().map(|row| row.iter().zip(&vals).map(|(a, b)| a * *b).sum()).collect();
        let mut back = GroupAlgebraElement::zero(self.degree());
        for (k, c) in out.iter().enumerate() {
            back = back.add(&self.basis_vecs[k].scale(c));
        }
        if back != *v {
            return Err(MathError::Dimension("vector not in the Specht module".into()));
        }
        Ok(out)
    }

    /// Representation matrix: column `h` holds the coordinates of `τ x_h C`.
    pub fn rho(&self, tau: &Perm) -> Vec<Vec<Rational>> {
        let g = self.group();
        let t = g.index_of(tau);
        let d = self.dim();
        let mut m = vec![vec![Rational::zero(); d]; d];
        for h in 0..d {
            let col = self.coords(&self.basis_vecs[h].left_mul_perm(t)).expect("module is Σ-stable");
            for k in 0..d {
                m[k][h] = col[k].clone();
            }
        }
        m
    }
}

/// Inverse of a nonsingular rational matrix (Gauss–Jordan).
pub(crate) fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("nonsingular");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let t = a[i][c].clone();
                let (ri, rc) = if i < c {
                    let (lo, hi) = a.split_at_mut(c);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&mut hi[0], &lo[c])
                };
                for (x, y) in ri.iter_mut().zip(rc.iter()) {
                    *x -= &t * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Young idempotent `C_λ`.
pub fn young_idempotent(lambda: &Partition) -> GroupAlgebraElement {
    Specht::get(lambda).c.clone()
}

/// The permutations `x_i` of the rational Specht basis.
pub fn specht_basis(lambda: &Partition) -> Vec<Perm> {
    Specht::get(lambda).basis.clone()
}

pub fn scalar_extract(lambda: &Partition, z: &GroupAlgebraElement) -> Result<Rational> {
    Specht::get(lambda).scalar_extract(z)
}

pub fn hook_dimension(lambda: &Partition) -> usize {
    lambda.hook_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn idempotent_21_matches_closed_form() {
        let r = 3;
        let e = GroupAlgebraElement::identity(r);
        let t12 = GroupAlgebraElement::basis(&Perm::transposition(r, 0, 1));
        let t13 = GroupAlgebraElement::basis(&Perm::transposition(r, 0, 2));
        let a = e.add(&t12);
        let want = a.mul(&e.sub(&t13)).mul(&a).scale(&ratio(1, 6));
        assert_eq!(young_idempotent(&part("2,1")), want);
    }

    #[test]
    fn basis_and_dimensions() {
        assert_eq!(specht_basis(&part("2,1")), vec![Perm::identity(3), Perm::transposition(3, 1, 2)]);
        assert_eq!(specht_basis(&part("3")), vec![Perm::identity(3)]);
        assert_eq!(specht_basis(&part("2,2")).len(), 2);
        assert_eq!(part("3,1").hook_dimension(), 3);
        assert_eq!(part("3,2,1").hook_dimension(), 16);
    }

    #[test]
    fn full_symmetrizer() {
        let c = young_idempotent(&part("3"));
        assert!(c.dense().iter().all(|x| *x == ratio(1, 6)));
        let a = young_idempotent(&part("1,1,1"));
        for (p, x) in a.support() {
            assert_eq!(*x, ratio(p.sign(), 6));
        }
    }

    #[test]
    fn scalar_extract_basics() {
        let l = part("2,1");
        let s = Specht::get(&l);
        assert_eq!(scalar_extract(&l, &s.c).unwrap(), Rational::one());
        assert_eq!(scalar_extract(&l, &GroupAlgebraElement::zero(3)).unwrap(), Rational::zero());
        assert!(scalar_extract(&l, &GroupAlgebraElement::identity(3)).is_err());
        let z = s.c.mul(&GroupAlgebraElement::basis(&Perm::transposition(3, 0, 1))).mul(&s.c);
        let t = scalar_extract(&l, &z).unwrap();
        assert_eq!(t, s.form(0, s.group().index_of(&Perm::transposition(3, 0, 1)), 0));
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(part("2,1").parts(), &[2, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
        assert_eq!(Partition::all(4).len(), 5);
    }
}
