//! Standard modules Δ^n_{(p,λ)} of J_{l,n}, their Gram matrices over ℚ[α],
//! determinants and the one-cup factorisation `det = C · P^{d_λ}`.
//!
//! Basis vectors are `u · x_h C_λ` for half diagrams `u` and Specht basis
//! index `h`, with flat index `h·|half| + u` (Specht index outermost).

use crate::cheby::ChebSeries;
use crate::diagrams::{half_basis, DiagramError, HalfDiagram};
use crate::exactmath::{det_auto, poly_gcd, poly_nth_root, MathError, Poly, PolyMatrix, Rational};
use crate::symmetric::{Partition, Specht};
use num::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GramError {
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

pub type Result<T> = std::result::Result<T, GramError>;

/// `(l, n, p, λ)` with `λ ⊢ min(p, l+2)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub l: i64,
    pub n: usize,
    pub p: usize,
    #[serde(with = "partition_serde")]
    pub lambda: Partition,
}

pub(crate) mod partition_serde {
    use crate::symmetric::Partition;
    use serde::{Deserialize, Deserializer, Serializer};
    pub fn serialize<S: Serializer>(p: &Partition, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(p.parts())
    }
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Partition, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Ok(Partition::new(v))
    }
}

/// Size of the partitions labelling `p`-propagating modules at height `l`.
pub fn partition_size(l: i64, p: usize) -> usize {
    (p as i64).min(l + 2).max(0) as usize
}

impl ModuleLabel {
    pub fn new(l: i64, n: usize, p: usize, lambda: Partition) -> Result<Self> {
        if l < -1 {
            return Err(GramError::InvalidLabel(format!("height l={l} must be at least -1")));
        }
        if p > n || (n - p) % 2 != 0 {
            return Err(GramError::InvalidLabel(format!("n={n} and p={p} must satisfy p <= n and n ≡ p mod 2")));
        }
        let r = partition_size(l, p);
        if lambda.size() != r {
            return Err(GramError::InvalidLabel(format!(
                "lambda=({lambda}) must be a partition of min(p, l+2) = {r}"
            )));
        }
        Ok(ModuleLabel { l, n, p, lambda })
    }

    /// One-cup label `(l, n, n−2, λ)`.
    pub fn one_cup(l: i64, n: usize, lambda: &Partition) -> Result<Self> {
        if n < 2 {
            return Err(GramError::InvalidLabel("one-cup modules need n >= 2".into()));
        }
        ModuleLabel::new(l, n, n - 2, lambda.clone())
    }

    pub fn cups(&self) -> usize {
        (self.n - self.p) / 2
    }

    /// Canonical cache key.
    pub fn key(&self) -> String {
        format!("l{}_n{}_p{}_{}", self.l, self.n, self.p, self.lambda.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-"))
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(l={}, n={}, p={}, λ=({}))", self.l, self.n, self.p, self.lambda)
    }
}

impl fmt::Debug for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(loops, σ)` for `flip(u) ∘ u'`, or `None` when fewer than `p` lines
/// survive.  `σ` is a group index in `Σ_r`.
pub type Pairing = Option<(usize, usize)>;

/// Pairings of all half diagrams of `(l, n, p)` against each other.
pub fn pairing_table(l: i64, n: usize, p: usize) -> Result<(Arc<Vec<HalfDiagram>>, Vec<Vec<Pairing>>)> {
    let half = half_basis(l, n, p)?;
    let r = partition_size(l, p);
    let group = crate::symmetric::SymGroup::get(r);
    let flips: Vec<HalfDiagram> = half.iter().map(|u| u.flip()).collect();
    let rows: Vec<std::result::Result<Vec<Pairing>, GramError>> = flips
        .par_iter()
        .map(|fu| {
            half.iter()
                .map(|v| {
                    let (x, loops) = fu.compose(v)?;
                    if x.propagating() < p {
                        return Ok(None);
                    }
                    let perm = crate::symmetric::Perm::from_images(&x.perm().expect("p lines on p points"));
                    let s = perm.restrict(r).ok_or_else(|| {
                        GramError::Internal(format!("pairing permutation {perm:?} moves strands beyond {r}"))
                    })?;
                    Ok(Some((loops, group.index_of(&s))))
                })
                .collect()
        })
        .collect();
    let table = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok((half, table))
}

/// Rows `T[k]` giving Specht basis vectors `b_k = Σ_a T[k][a] x_a C_λ`.
pub type Frame = Vec<Vec<Rational>>;

pub fn identity_frame(d: usize) -> Frame {
    (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

/// Gram–Schmidt on `x_a C_λ`; keeps `b_1 = C_λ` and stays rational.
/// Returns the frame and the norms `⟨b_k, b_k⟩`.
pub fn orthogonal_frame(specht: &Specht) -> (Frame, Vec<Rational>) {
    let g = specht.gram();
    let d = specht.dim();
    let mut frame: Frame = Vec::new();
    let mut norms: Vec<Rational> = Vec::new();
    let form = |a: &[Rational], b: &[Rational]| -> Rational {
        let mut acc = Rational::zero();
        for i in 0..d {
            for j in 0..d {
                acc += &a[i] * &g[i][j] * &b[j];
            }
        }
        acc
    };
    for k in 0..d {
        let mut v: Vec<Rational> = (0..d).map(|j| if j == k { Rational::one() } else { Rational::zero() }).collect();
        for (b, nb) in frame.iter().zip(&norms) {
            let t = form(&v, b) / nb;
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &t * y;
            }
        }
        norms.push(form(&v, &v));
        frame.push(v);
    }
    (frame, norms)
}

fn transform_form(specht: &Specht, frame: &Frame, sigma: usize) -> Vec<Vec<Rational>> {
    let d = specht.dim();
    let raw: Vec<Vec<Rational>> = (0..d).map(|a| (0..d).map(|b| specht.form(a, sigma, b)).collect()).collect();
    let mut out = vec![vec![Rational::zero(); d]; d];
    for k in 0..d {
        for k2 in 0..d {
            let mut acc = Rational::zero();
            for a in 0..d {
                if frame[k][a].is_zero() {
                    continue;
                }
                for b in 0..d {
                    if !frame[k2][b].is_zero() {
                        acc += &frame[k][a] * &raw[a][b] * &frame[k2][b];
                    }
                }
            }
            out[k][k2] = acc;
        }
    }
    out
}

/// A Gram matrix together with the data that produced it.
pub struct GramInstance {
    pub label: ModuleLabel,
    pub half: Arc<Vec<HalfDiagram>>,
    pub specht: Arc<Specht>,
    pub matrix: PolyMatrix,
}

impl GramInstance {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn index(&self, h: usize, u: usize) -> usize {
        h * self.half.len() + u
    }
}

/// Gram matrix in the Specht basis given by `frame`.
pub fn gram_matrix_in_frame(label: &ModuleLabel, frame: &Frame) -> Result<GramInstance> {
    let (half, table) = pairing_table(label.l, label.n, label.p)?;
    let specht = Specht::get(&label.lambda);
    let d = specht.dim();
    let m = half.len();
    let mut forms: HashMap<usize, Vec<Vec<Rational>>> = HashMap::new();
    for row in &table {
        for (_, s) in row.iter().flatten() {
            forms.entry(*s).or_insert_with(|| transform_form(&specht, frame, *s));
        }
    }
    let mut matrix = PolyMatrix::zeros(d * m, d * m);
    for (u, row) in table.iter().enumerate() {
        for (v, pr) in row.iter().enumerate() {
            let Some((loops, s)) = pr else { continue };
            let f = &forms[s];
            for h in 0..d {
                for h2 in 0..d {
                    if !f[h][h2].is_zero() {
                        matrix.set(h * m + u, h2 * m + v, Poly::monomial(f[h][h2].clone(), *loops));
                    }
                }
            }
        }
    }
    Ok(GramInstance { label: label.clone(), half, specht, matrix })
}

/// Gram matrix in the rational Specht basis `x_h C_λ`.
pub fn gram_matrix(label: &ModuleLabel) -> Result<GramInstance> {
    let d = Specht::get(&label.lambda).dim();
    gram_matrix_in_frame(label, &identity_frame(d))
}

fn det_memo() -> &'static Mutex<HashMap<ModuleLabel, Poly>> {
    static C: OnceLock<Mutex<HashMap<ModuleLabel, Poly>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Seed the in-memory determinant memo (used by the persistent cache).
pub fn remember_det(label: &ModuleLabel, det: Poly) {
    det_memo().lock().unwrap().insert(label.clone(), det);
}

pub fn cached_det(label: &ModuleLabel) -> Option<Poly> {
    det_memo().lock().unwrap().get(label).cloned()
}

/// Monic Gram determinant.  Memoised per label.
pub fn gram_det(label: &ModuleLabel) -> Result<Poly> {
    if let Some(d) = cached_det(label) {
        return Ok(d);
    }
    let g = gram_matrix(label)?;
    let det = det_auto(&g.matrix)?;
    if det.is_zero() {
        return Err(GramError::Internal(format!("Gram determinant of {label} vanishes identically")));
    }
    let det = det.monic();
    remember_det(label, det.clone());
    Ok(det)
}

/// Module dimension `|half| · d_λ`.
pub fn module_dim(label: &ModuleLabel) -> Result<usize> {
    Ok(half_basis(label.l, label.n, label.p)?.len() * label.lambda.hook_dimension())
}

/// Proof data that `deg det Γ = k · dim` for a `k`-cup module without
/// computing the determinant: every entry has degree at most `k`, degree
/// `k` occurs exactly on the diagonal blocks `u = u'` (where the pairing is
/// `α^k · e`), so the coefficient of `α^{k·dim}` is `det(G^S)^{|half|} ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCertificate {
    pub dim: usize,
    pub cups: usize,
    pub degree: usize,
    pub holds: bool,
}

pub fn degree_certificate(label: &ModuleLabel) -> Result<DegreeCertificate> {
    let (half, table) = pairing_table(label.l, label.n, label.p)?;
    let k = label.cups();
    let specht = Specht::get(&label.lambda);
    let mut holds = true;
    for (u, row) in table.iter().enumerate() {
        for (v, pr) in row.iter().enumerate() {
            match pr {
                Some((loops, s)) if u == v => holds &= *loops == k && *s == 0,
                Some((loops, _)) => holds &= *loops < k,
                None => holds &= u != v,
            }
        }
    }
    let gs: Vec<Vec<Rational>> = specht.gram();
    holds &= !crate::exactmath::det_rational(&gs)?.is_zero();
    let dim = half.len() * specht.dim();
    Ok(DegreeCertificate { dim, cups: k, degree: k * dim, holds })
}

/// `Γ^{(λ)}_{(l, 𝐧)}`: the form on `{b_k u : u ∈ ℬ_{(l, n_k)}}` inside the
/// one-cup module at `n = max 𝐧`, in an orthogonal Specht frame so that the
/// tails of distinct `b_k` decouple.
pub fn gram_mixed(l: i64, lambda: &Partition, ns: &[usize]) -> Result<PolyMatrix> {
    let specht = Specht::get(lambda);
    let d = specht.dim();
    if ns.len() != d {
        return Err(GramError::InvalidLabel(format!("tuple length {} differs from d_λ = {d}", ns.len())));
    }
    if lambda.size() as i64 != l + 2 {
        return Err(GramError::InvalidLabel(format!("λ=({lambda}) must be a partition of l+2")));
    }
    if let Some(&bad) = ns.iter().find(|&&x| (x as i64) < l + 4) {
        return Err(GramError::InvalidLabel(format!("tuple entry {bad} below l+4")));
    }
    let n = *ns.iter().max().unwrap();
    let label = ModuleLabel::one_cup(l, n, lambda)?;
    let (frame, _) = orthogonal_frame(&specht);
    let g = gram_matrix_in_frame(&label, &frame)?;
    let m = g.half.len();
    let mut keep = Vec::new();
    for (h, &nh) in ns.iter().enumerate() {
        for (u, diag) in g.half.iter().enumerate() {
            // cup (j,k) lies in ℬ_{(l,nh)} iff k ≤ nh
            let (_, k) = diag.top_arcs()[0];
            if k < nh {
                keep.push(h * m + u);
            }
        }
    }
    Ok(g.matrix.select(&keep, &keep))
}

/// Monic determinant of [`gram_mixed`].
pub fn mixed_det(l: i64, lambda: &Partition, ns: &[usize]) -> Result<Poly> {
    Ok(det_auto(&gram_mixed(l, lambda, ns)?)?.monic())
}

fn check_one_cup_lambda(l: i64, lambda: &Partition) -> Result<()> {
    if l < -1 || lambda.size() as i64 != l + 2 {
        return Err(GramError::InvalidLabel(format!("λ=({lambda}) must be a partition of l+2 = {}", l + 2)));
    }
    Ok(())
}

/// One-cup determinant at rank `n`.
pub fn one_cup_det(l: i64, lambda: &Partition, n: usize) -> Result<Poly> {
    gram_det(&ModuleLabel::one_cup(l, n, lambda)?)
}

/// Series through the monic one-cup determinants at `n = l+4, l+5`.
pub fn one_cup_series(l: i64, lambda: &Partition) -> Result<ChebSeries> {
    check_one_cup_lambda(l, lambda)?;
    let n0 = (l + 4) as usize;
    Ok(ChebSeries::new(n0 as i64, one_cup_det(l, lambda, n0)?, one_cup_det(l, lambda, n0 + 1)?))
}

/// Result of splitting one-cup determinants as `C · P_n^{d_λ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCupFactor {
    pub c: Poly,
    pub p: ChebSeries,
    pub d: usize,
}

fn series_memo() -> &'static Mutex<HashMap<(i64, Partition), OneCupFactor>> {
    static C: OnceLock<Mutex<HashMap<(i64, Partition), OneCupFactor>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `C = gcd(det_{l+4}, det_{l+5})` and `P_n = (det_n / C)^{1/d_λ}` at the
/// two anchors; reconstruction is checked directly at `n = l+6`.
pub fn factor_one_cup(l: i64, lambda: &Partition) -> Result<OneCupFactor> {
    check_one_cup_lambda(l, lambda)?;
    if let Some(f) = series_memo().lock().unwrap().get(&(l, lambda.clone())) {
        return Ok(f.clone());
    }
    let s = one_cup_series(l, lambda)?;
    let d = lambda.hook_dimension();
    let c = poly_gcd(&s.p_n, &s.p_n1)?;
    let root = |det: &Poly| -> Result<Poly> { Ok(poly_nth_root(&det.exact_div(&c)?, d as u32)?) };
    let p = ChebSeries::new(s.anchor, root(&s.p_n)?, root(&s.p_n1)?);
    let n2 = (l + 6) as usize;
    let direct = one_cup_det(l, lambda, n2)?;
    let predicted = &c * &p.term(n2 as i64).pow(d as u32);
    if predicted.monic() != direct {
        return Err(GramError::Internal(format!("C·P^d reconstruction fails at n={n2} for l={l}, λ=({lambda})")));
    }
    let f = OneCupFactor { c, p, d };
    series_memo().lock().unwrap().insert((l, lambda.clone()), f.clone());
    Ok(f)
}
