//! Bootstrap morphisms into one-cup modules.
//!
//! The distinguished element `ξ^{(n)}_λ ∈ Δ^n_{(n−2,λ)}` is annihilated by
//! every cap except the last one, and `𝕦*_{n−1,n} ξ = D_n c_λ`.  Where
//! `D_n` vanishes, `ξ` generates a copy of `Δ^n_{(n,λ)}`.  This module
//! solves for `ξ`, runs its recursion in `n`, and verifies embeddings at
//! special parameter values exactly, either in ℚ or in ℚ[α]/(m).
//!
//! All module vectors here are written in the orthogonal Specht frame of
//! [`orthogonal_frame`] (so `b_1 = C_λ`), flat index `h·|half| + u`.

use crate::diagrams::{cup, DiagramError, HalfDiagram, PairPartition};
use crate::exactmath::{
    det_auto, nullspace_over, poly_gcd, rank_over, AlgebraicField, Field, MathError, Poly, PolyMatrix, Rational,
    RationalField,
};
use crate::gram::{factor_one_cup, gram_matrix_in_frame, orthogonal_frame, partition_size, Frame, GramError, ModuleLabel};
use crate::roots::{Claim, ClaimStatus};
use crate::symmetric::{invert, GroupAlgebraElement, Partition, Perm, Specht};
use num::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("alpha0 is not a root: {0}")]
    NotARoot(String),
    /// A computed identity that should hold failed; this is a finding, not
    /// a usage problem.
    #[error("consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

pub type Result<T> = std::result::Result<T, MorphismError>;

/// A standard module with its basis bookkeeping, able to act by diagrams.
pub struct ModuleContext {
    pub label: ModuleLabel,
    pub half: Arc<Vec<HalfDiagram>>,
    index: HashMap<HalfDiagram, usize>,
    pub specht: Arc<Specht>,
    pub frame: Frame,
    frame_inv: Frame,
    /// `⟨b_k, b_k⟩` for the orthogonal frame.
    pub norms: Vec<Rational>,
    pub gram: PolyMatrix,
}

/// Sparse linear map on a module: `(to, from, coeff, loops)` meaning
/// `e_from ↦ coeff · α^loops · e_to`.
#[derive(Clone, Debug, Default)]
pub struct SparseAction {
    pub dim: usize,
    pub terms: Vec<(usize, usize, Rational, usize)>,
}

impl SparseAction {
    pub fn apply_poly(&self, v: &[Poly]) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.dim];
        for (to, from, c, loops) in &self.terms {
            if !v[*from].is_zero() {
                out[*to] = &out[*to] + &v[*from].scale(c).shift(*loops);
            }
        }
        out
    }

    pub fn apply_field<F: Field>(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![f.zero(); self.dim];
        let alpha = f.from_poly(&Poly::x());
        for (to, from, c, loops) in &self.terms {
            if f.is_zero(&v[*from]) {
                continue;
            }
            let mut t = f.mul(&f.from_rational(c), &v[*from]);
            for _ in 0..*loops {
                t = f.mul(&t, &alpha);
            }
            out[*to] = f.add(&out[*to], &t);
        }
        out
    }

    fn add_scaled(&mut self, o: &SparseAction, q: &Rational) {
        self.terms.extend(o.terms.iter().map(|(a, b, c, l)| (*a, *b, c * q, *l)));
    }
}

impl ModuleContext {
    /// Context in the orthogonal Specht frame.
    pub fn new(label: &ModuleLabel) -> Result<Self> {
        let specht = Specht::get(&label.lambda);
        let (frame, norms) = orthogonal_frame(&specht);
        let frame_inv = invert(&frame);
        let g = gram_matrix_in_frame(label, &frame)?;
        let index = g.half.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(ModuleContext { label: label.clone(), half: g.half, index, specht, frame, frame_inv, norms, gram: g.matrix })
    }

    pub fn dim(&self) -> usize {
        self.half.len() * self.specht.dim()
    }

    pub fn index(&self, h: usize, u: usize) -> usize {
        h * self.half.len() + u
    }

    pub fn half_index(&self, d: &HalfDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// `σ b_h = Σ_k R[h][k] b_k` for a permutation of the `r` Specht strands.
    fn frame_rep(&self, pi: &Perm) -> Vec<Vec<Rational>> {
        let rho = self.specht.rho(pi);
        let d = self.specht.dim();
        let mut tr = vec![vec![Rational::zero(); d]; d];
        for h in 0..d {
            for c in 0..d {
                tr[h][c] = (0..d).map(|a| &self.frame[h][a] * &rho[c][a]).sum();
            }
        }
        (0..d).map(|h| (0..d).map(|k| (0..d).map(|c| &tr[h][c] * &self.frame_inv[c][k]).sum()).collect()).collect()
    }

    /// Action of an `n × n` diagram, modulo fewer propagating lines.
    pub fn diagram_action(&self, x: &PairPartition) -> Result<SparseAction> {
        let n = self.label.n;
        if x.n_top() != n || x.n_bot() != n {
            return Err(MorphismError::InvalidInput(format!("diagram is not {n}x{n}")));
        }
        let p = self.label.p;
        let r = partition_size(self.label.l, p);
        let d = self.specht.dim();
        let mut reps: HashMap<Perm, Vec<Vec<Rational>>> = HashMap::new();
        let mut out = SparseAction { dim: self.dim(), terms: Vec::new() };
        for (u, hd) in self.half.iter().enumerate() {
            let (w, loops) = x.compose(hd)?;
            if w.propagating() < p {
                continue;
            }
            let (tilde, tau) = w.split_noncrossing();
            let Some(v) = self.half_index(&tilde) else {
                return Err(MorphismError::Inconsistent(format!("{tilde} is outside the half basis of {}", self.label)));
            };
            let pi = Perm::from_images(&tau)
                .restrict(r)
                .ok_or_else(|| MorphismError::Inconsistent(format!("line permutation {tau:?} leaves Σ_{r}")))?;
            let rep = reps.entry(pi.clone()).or_insert_with(|| self.frame_rep(&pi));
            for h in 0..d {
                for k in 0..d {
                    if !rep[h][k].is_zero() {
                        out.terms.push((self.index(k, v), self.index(h, u), rep[h][k].clone(), loops));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Action of `z ∈ ℚΣ_s` placed on the first `s` strands.
    pub fn group_action(&self, z: &GroupAlgebraElement) -> Result<SparseAction> {
        let n = self.label.n;
        if z.degree() > n {
            return Err(MorphismError::InvalidInput(format!("Σ_{} does not act on {n} strands", z.degree())));
        }
        let mut out = SparseAction { dim: self.dim(), terms: Vec::new() };
        for (perm, c) in z.support() {
            let x = PairPartition::permutation(&perm.extend(n).images());
            out.add_scaled(&self.diagram_action(&x)?, c);
        }
        Ok(out)
    }

    /// The Specht vector `b_k = Σ_a T[k][a] x_a C_λ` as a group element.
    pub fn frame_element(&self, k: usize) -> GroupAlgebraElement {
        let mut z = GroupAlgebraElement::zero(self.specht.degree());
        for (a, t) in self.frame[k].iter().enumerate() {
            if !t.is_zero() {
                z = z.add(&self.specht.basis_vector(a).scale(t));
            }
        }
        z
    }

    /// `Γ v`, i.e. the pairings `⟨e_i, v⟩`.
    pub fn pair_with_basis(&self, v: &[Poly]) -> Vec<Poly> {
        (0..self.dim())
            .map(|i| {
                self.gram.row(i).iter().zip(v).fold(Poly::zero(), |acc, (g, x)| {
                    if g.is_zero() || x.is_zero() {
                        acc
                    } else {
                        &acc + &(g * x)
                    }
                })
            })
            .collect()
    }

    /// Index of `𝕦_{n−1,n} b_1`.
    pub fn last_cup_index(&self) -> Result<usize> {
        let n = self.label.n;
        let target = cup(n, n - 1, n);
        self.half_index(&target)
            .map(|u| self.index(0, u))
            .ok_or_else(|| MorphismError::Inconsistent(format!("last cup missing from {}", self.label)))
    }
}

/// `ξ^{(n)}_λ` with its scalar `D_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiElement {
    pub label: ModuleLabel,
    pub coeffs: Vec<Poly>,
    pub d: Poly,
}

impl fmt::Display for XiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ξ{}: D = {}", self.label, self.d)
    }
}

fn xi_label(l: i64, lambda: &Partition, n: usize) -> Result<ModuleLabel> {
    if lambda.size() as i64 != l + 2 {
        return Err(MorphismError::InvalidInput(format!("λ=({lambda}) must be a partition of l+2 = {}", l + 2)));
    }
    if (n as i64) < l + 4 {
        return Err(MorphismError::InvalidInput(format!("n={n} is below l+4 = {}", l + 4)));
    }
    Ok(ModuleLabel::one_cup(l, n, lambda)?)
}

/// Divide out the content and make `D` monic.
fn normalise(label: ModuleLabel, coeffs: Vec<Poly>, d: Poly) -> Result<XiElement> {
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.clone() } else { poly_gcd(&g, c)? };
    }
    if g.is_zero() {
        return Err(MorphismError::Inconsistent(format!("ξ vanishes identically in {label}")));
    }
    let coeffs: Vec<Poly> = coeffs.iter().map(|c| c.exact_div(&g)).collect::<std::result::Result<_, _>>()?;
    let d = d.exact_div(&g)?;
    let lead = d.lead().cloned().ok_or_else(|| MorphismError::Inconsistent("D vanishes generically".into()))?;
    let s = lead.recip();
    Ok(XiElement { label, coeffs: coeffs.iter().map(|c| c.scale(&s)).collect(), d: d.scale(&s) })
}

/// Solve `Γ·[ξ] = D·e_{(n−1,n),1}` over ℚ(α) by Cramer's rule, clear
/// denominators and content, and normalise `D` to be monic.
pub fn solve_xi(l: i64, lambda: &Partition, n: usize) -> Result<XiElement> {
    let label = xi_label(l, lambda, n)?;
    let ctx = ModuleContext::new(&label)?;
    let t = ctx.last_cup_index()?;
    let dim = ctx.dim();
    let gram = &ctx.gram;
    let det = det_auto(gram)?;
    if det.is_zero() {
        return Err(MorphismError::Inconsistent(format!("Γ{label} is generically singular")));
    }
    let numerators: Vec<Poly> = (0..dim)
        .into_par_iter()
        .map(|i| {
            let mut m = gram.clone();
            for row in 0..dim {
                m.set(row, i, if row == t { Poly::one() } else { Poly::zero() });
            }
            det_auto(&m)
        })
        .collect::<std::result::Result<_, _>>()?;
    // Γ y = det · e_t, and 𝕦*_t y = (det / ⟨b_1,b_1⟩) c_λ
    let xi = normalise(label, numerators, det.scale(&ctx.norms[0].recip()))?;
    check_xi_with(&ctx, &xi)?;
    Ok(xi)
}

/// Verify the defining conditions of `ξ` against the Gram matrix.
pub fn check_xi(xi: &XiElement) -> Result<()> {
    check_xi_with(&ModuleContext::new(&xi.label)?, xi)
}

fn check_xi_with(ctx: &ModuleContext, xi: &XiElement) -> Result<()> {
    let t = ctx.last_cup_index()?;
    let pairs = ctx.pair_with_basis(&xi.coeffs);
    for (i, v) in pairs.iter().enumerate() {
        let want = if i == t { xi.d.scale(&ctx.norms[0]) } else { Poly::zero() };
        if *v != want {
            return Err(MorphismError::Inconsistent(format!("cap condition fails at basis index {i} in {}", xi.label)));
        }
    }
    Ok(())
}

/// `ξ^{(n)} = D_{n−1} 𝕦_{n−1,n} c_λ − ξ^{(n−1)} ⊗ id`, with
/// `D_n = α D_{n−1} − [ξ^{(n−1)}]_{(n−2,n−1),1}`.
pub fn xi_step(prev: &XiElement) -> Result<XiElement> {
    let old = &prev.label;
    let label = ModuleLabel::one_cup(old.l, old.n + 1, &old.lambda)?;
    let ctx = ModuleContext::new(&label)?;
    let old_half = crate::diagrams::half_basis(old.l, old.n, old.p)?;
    let m_old = old_half.len();
    let id1 = PairPartition::identity(1);
    let embed: Vec<usize> = old_half
        .iter()
        .map(|u| {
            ctx.half_index(&u.tensor(&id1))
                .ok_or_else(|| MorphismError::Inconsistent(format!("{u} ⊗ id is not a basis diagram")))
        })
        .collect::<Result<_>>()?;
    let mut coeffs = vec![Poly::zero(); ctx.dim()];
    for (i, c) in prev.coeffs.iter().enumerate() {
        let (h, u) = (i / m_old, i % m_old);
        coeffs[ctx.index(h, embed[u])] = -c;
    }
    let t = ctx.last_cup_index()?;
    coeffs[t] = &coeffs[t] + &prev.d;
    let old_ctx_t = {
        let target = cup(old.n, old.n - 1, old.n);
        old_half.iter().position(|u| *u == target).ok_or_else(|| MorphismError::Inconsistent("last cup".into()))?
    };
    let d = &prev.d.shift(1) - &prev.coeffs[old_ctx_t];
    let xi = XiElement { label, coeffs, d };
    check_xi_with(&ctx, &xi)?;
    Ok(xi)
}

/// One row of the `ξ` chain comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiChainRow {
    pub n: usize,
    pub d: Poly,
    /// `xi_step` output equals `solve_xi` exactly.
    pub step_agrees: bool,
    /// `D_n = α D_{n−1} − D_{n−2}` (from the third term on).
    pub recursion: Option<bool>,
    /// `P^{(λ)}_n | D_n`.
    pub p_divides_d: bool,
    pub quotient: Option<Poly>,
}

/// Runs `solve_xi` for `n = l+4..=n_max` and compares with the recursion.
pub fn xi_chain(l: i64, lambda: &Partition, n_max: usize) -> Result<Vec<XiChainRow>> {
    let n0 = (l + 4) as usize;
    let series = factor_one_cup(l, lambda)?;
    let mut rows: Vec<XiChainRow> = Vec::new();
    let mut prev: Option<XiElement> = None;
    let mut ds: Vec<Poly> = Vec::new();
    for n in n0..=n_max {
        let xi = solve_xi(l, lambda, n)?;
        let step_agrees = match &prev {
            None => true,
            Some(p) => xi_step(p)? == xi,
        };
        let recursion = (ds.len() >= 2).then(|| xi.d == &ds[ds.len() - 1].shift(1) - &ds[ds.len() - 2]);
        let p = series.p.term(n as i64);
        let quotient = xi.d.exact_div(&p).ok();
        ds.push(xi.d.clone());
        rows.push(XiChainRow { n, d: xi.d.clone(), step_agrees, recursion, p_divides_d: quotient.is_some(), quotient });
        prev = Some(xi);
    }
    Ok(rows)
}

/// Exact divisibility `P^{(λ)}_n | D_n`.
pub fn divisibility_check(l: i64, lambda: &Partition, n: usize) -> Result<bool> {
    let xi = solve_xi(l, lambda, n)?;
    let p = factor_one_cup(l, lambda)?.p.term(n as i64);
    Ok(p.divides(&xi.d))
}

/// `c_λ ξ = ξ` over ℚ[α].
pub fn c_lambda_fixes(xi: &XiElement) -> Result<bool> {
    let ctx = ModuleContext::new(&xi.label)?;
    let c = ctx.group_action(&ctx.specht.c)?;
    Ok(c.apply_poly(&xi.coeffs) == xi.coeffs)
}

/// The vectors `ξ^{(b_k)} = (b_k ⊗ id) ξ`.
pub fn xi_images(xi: &XiElement) -> Result<Vec<Vec<Poly>>> {
    let ctx = ModuleContext::new(&xi.label)?;
    (0..ctx.specht.dim()).map(|k| Ok(ctx.group_action(&ctx.frame_element(k))?.apply_poly(&xi.coeffs))).collect()
}

/// Both parts of the "nice element" property: the `𝕦_{n−1,n} b_{k'}`
/// coefficients of `ξ^{(b_k)}` vanish off `k' = k` and are k-independent,
/// and the pairings `⟨ξ^{(b_k)}, 𝕦 b_{k'}⟩ / ⟨b_k,b_k⟩` equal `δ D` at the
/// last cup and vanish elsewhere.
pub fn nice_element_check(xi: &XiElement) -> Result<bool> {
    let ctx = ModuleContext::new(&xi.label)?;
    let m = ctx.half.len();
    let t_u = ctx.last_cup_index()?;
    let images = xi_images(xi)?;
    let mut diag: Option<Poly> = None;
    for (k, img) in images.iter().enumerate() {
        for k2 in 0..ctx.specht.dim() {
            let c = &img[k2 * m + t_u];
            if k2 != k && !c.is_zero() {
                return Ok(false);
            }
        }
        let c = img[k * m + t_u].clone();
        match &diag {
            None => diag = Some(c),
            Some(d0) if *d0 != c => return Ok(false),
            _ => {}
        }
        let pairs = ctx.pair_with_basis(img);
        let inv = ctx.norms[k].recip();
        for (i, v) in pairs.iter().enumerate() {
            let want = if i == k * m + t_u { xi.d.clone() } else { Poly::zero() };
            if v.scale(&inv) != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A special parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaSpec {
    Rational(Rational),
    /// A root of this (irreducible) polynomial.
    Minpoly(Poly),
}

impl AlphaSpec {
    /// Does `alpha0` annihilate `p`?
    pub fn annihilates(&self, p: &Poly) -> bool {
        match self {
            AlphaSpec::Rational(q) => p.eval(q).is_zero(),
            AlphaSpec::Minpoly(m) => m.divides(p),
        }
    }
}

impl fmt::Display for AlphaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaSpec::Rational(q) => write!(f, "α = {q}"),
            AlphaSpec::Minpoly(m) => write!(f, "{m} = 0"),
        }
    }
}

/// Outcome of an embedding check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub target: ModuleLabel,
    /// `λ` of the source module `Δ^n_{(n,λ)}`.
    pub source: Vec<usize>,
    pub alpha0: String,
    /// `"xi"` (the distinguished element) or `"radical"` (kernel of the form).
    pub method: String,
    pub gram_dim: usize,
    pub rank_deficiency: usize,
    pub embedding: bool,
    pub claims: Vec<Claim>,
}

impl EmbeddingReport {
    fn push(&mut self, id: &str, ok: bool, witness: Value) {
        let status = if ok { ClaimStatus::Pass } else { ClaimStatus::Fail };
        self.claims.push(Claim { id: id.to_string(), status, witness });
    }
}

fn elem_strings<F: Field>(v: &[F::Elem]) -> Value
where
    F::Elem: fmt::Display,
{
    json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn map_vec<F: Field>(f: &F, v: &[Poly]) -> Vec<F::Elem> {
    v.iter().map(|x| f.from_poly(x)).collect()
}

fn mat_vec<F: Field>(f: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
        .collect()
}

/// Shared core: given a candidate vector at `alpha0`, check that every
/// cap kills it and that `{b_k v}` spans a copy of `S_λ`.
fn verify_vector<F: Field>(
    f: &F,
    ctx: &ModuleContext,
    gram_f: &[Vec<F::Elem>],
    source: &Partition,
    v: &[F::Elem],
    report: &mut EmbeddingReport,
) -> Result<()>
where
    F::Elem: fmt::Display,
{
    let nonzero = v.iter().any(|x| !f.is_zero(x));
    report.push("witness-nonzero", nonzero, elem_strings::<F>(v));
    let gv = mat_vec(f, gram_f, v);
    let killed = gv.iter().all(|x| f.is_zero(x));
    report.push("caps-annihilate", killed, json!({ "pairings_nonzero": gv.iter().filter(|x| !f.is_zero(x)).count() }));
    let sp = Specht::get(source);
    let c = ctx.group_action(&sp.c)?;
    let fixed = c.apply_field(f, v) == *v;
    report.push("c-lambda-fixes", fixed, Value::Null);
    let images: Vec<Vec<F::Elem>> = (0..sp.dim())
        .map(|k| Ok(ctx.group_action(sp.basis_vector(k))?.apply_field(f, v)))
        .collect::<Result<_>>()?;
    let rank = rank_over(f, &images)?;
    report.push("images-independent", rank == sp.dim(), json!({ "rank": rank, "d_lambda": sp.dim() }));
    report.embedding = nonzero && killed && fixed && rank == sp.dim();
    Ok(())
}

fn gram_rank_deficiency<F: Field>(f: &F, gram_f: &[Vec<F::Elem>]) -> Result<usize> {
    Ok(gram_f.len() - rank_over(f, gram_f)?)
}

fn with_field<T>(
    alpha0: &AlphaSpec,
    q: impl FnOnce(&RationalField) -> Result<T>,
    a: impl FnOnce(&AlgebraicField) -> Result<T>,
) -> Result<T> {
    match alpha0 {
        AlphaSpec::Rational(x) => q(&RationalField::at(x.clone())),
        AlphaSpec::Minpoly(m) => a(&AlgebraicField::new(m.clone())?),
    }
}

/// `Δ^n_{(n,λ)} ↪ Δ^n_{(n−2,λ)}` at a root of `P^{(λ)}_n`, witnessed by
/// the specialised `ξ^{(n)}_λ`.
pub fn submodule_verify(l: i64, lambda: &Partition, n: usize, alpha0: &AlphaSpec) -> Result<EmbeddingReport> {
    let label = xi_label(l, lambda, n)?;
    let p = factor_one_cup(l, lambda)?.p.term(n as i64);
    if !alpha0.annihilates(&p) {
        return Err(MorphismError::NotARoot(format!("{alpha0} does not annihilate P_{n} = {p}")));
    }
    let xi = solve_xi(l, lambda, n)?;
    let ctx = ModuleContext::new(&label)?;
    let mut report = EmbeddingReport {
        target: label,
        source: lambda.parts().to_vec(),
        alpha0: alpha0.to_string(),
        method: "xi".into(),
        gram_dim: ctx.dim(),
        rank_deficiency: 0,
        embedding: false,
        claims: Vec::new(),
    };
    report.push("p-divides-d", p.divides(&xi.d), json!({ "P": p.to_string(), "D": xi.d.to_string() }));
    report.push("c-lambda-fixes-generic", c_lambda_fixes(&xi)?, Value::Null);
    fn run<F: Field>(f: &F, ctx: &ModuleContext, xi: &XiElement, lambda: &Partition, r: &mut EmbeddingReport) -> Result<()>
    where
        F::Elem: fmt::Display,
    {
        let gram_f = ctx.gram.map_field(f);
        r.rank_deficiency = gram_rank_deficiency(f, &gram_f)?;
        let v = map_vec(f, &xi.coeffs);
        verify_vector(f, ctx, &gram_f, lambda, &v, r)
    }
    match alpha0 {
        AlphaSpec::Rational(x) => run(&RationalField::at(x.clone()), &ctx, &xi, lambda, &mut report)?,
        AlphaSpec::Minpoly(m) => run(&AlgebraicField::new(m.clone())?, &ctx, &xi, lambda, &mut report)?,
    }
    report.embedding &= report.claims.iter().all(|c| c.status == ClaimStatus::Pass);
    Ok(report)
}

/// Search the radical of the form on `Δ^n_{(n−2,μ)}` at `alpha0` for a copy
/// of `Δ^n_{(n,λ)}`: apply `C_λ` to the kernel of `Γ(alpha0)` and test the
/// first nonzero image.  Works below `n = l+4` and for `λ ≠ μ`.
pub fn embedding_verify(l: i64, n: usize, target: &Partition, source: &Partition, alpha0: &AlphaSpec) -> Result<EmbeddingReport> {
    if n < 2 {
        return Err(MorphismError::InvalidInput("need n >= 2".into()));
    }
    let label = ModuleLabel::new(l, n, n - 2, target.clone())?;
    let r_src = partition_size(l, n);
    if source.size() != r_src {
        return Err(MorphismError::InvalidInput(format!("source λ=({source}) must be a partition of {r_src}")));
    }
    let ctx = ModuleContext::new(&label)?;
    let mut report = EmbeddingReport {
        target: label,
        source: source.parts().to_vec(),
        alpha0: alpha0.to_string(),
        method: "radical".into(),
        gram_dim: ctx.dim(),
        rank_deficiency: 0,
        embedding: false,
        claims: Vec::new(),
    };
    fn run<F: Field>(f: &F, ctx: &ModuleContext, source: &Partition, r: &mut EmbeddingReport) -> Result<()>
    where
        F::Elem: fmt::Display,
    {
        let gram_f = ctx.gram.map_field(f);
        r.rank_deficiency = gram_rank_deficiency(f, &gram_f)?;
        if r.rank_deficiency == 0 {
            return Err(MorphismError::NotARoot(format!("the form on {} is nondegenerate at {}", ctx.label, r.alpha0)));
        }
        let kernel = nullspace_over(f, &gram_f)?;
        let c = ctx.group_action(&Specht::get(source).c)?;
        let projected: Vec<Vec<F::Elem>> = kernel.iter().map(|k| c.apply_field(f, k)).collect();
        let multiplicity = rank_over(f, &projected)?;
        r.push("lambda-in-radical", multiplicity > 0, json!({ "multiplicity": multiplicity }));
        let zero = vec![f.zero(); ctx.dim()];
        let v = projected.iter().find(|v| v.iter().any(|x| !f.is_zero(x))).unwrap_or(&zero);
        verify_vector(f, ctx, &gram_f, source, v, r)
    }
    match alpha0 {
        AlphaSpec::Rational(x) => run(&RationalField::at(x.clone()), &ctx, source, &mut report)?,
        AlphaSpec::Minpoly(m) => run(&AlgebraicField::new(m.clone())?, &ctx, source, &mut report)?,
    }
    report.embedding &= report.claims.iter().all(|c| c.status == ClaimStatus::Pass);
    Ok(report)
}

/// `dim − rank Γ(alpha0)` for any module label.
pub fn rank_deficiency(label: &ModuleLabel, alpha0: &AlphaSpec) -> Result<usize> {
    let ctx = ModuleContext::new(label)?;
    with_field(
        alpha0,
        |f| gram_rank_deficiency(f, &ctx.gram.map_field(f)),
        |f| gram_rank_deficiency(f, &ctx.gram.map_field(f)),
    )
}
