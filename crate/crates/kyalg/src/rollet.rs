//! Rollet graphs Λ_{l,∞}: walk-count dimensions, determinant and
//! marginal-vertex-function decorations, the arm property, and the l = −1
//! recursive determinant oracle.

use crate::cheby::quantum_number;
use crate::exactmath::{Poly, RatFunc};
use crate::gram::{factor_one_cup, gram_det, partition_size, GramError, ModuleLabel, Result};
use crate::symmetric::Partition;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub p: usize,
    pub lambda: Partition,
}

impl Vertex {
    pub fn new(p: usize, lambda: Partition) -> Self {
        Vertex { p, lambda }
    }

    /// DOT node id `p_λ` with λ dash-joined.
    pub fn id(&self) -> String {
        let parts: Vec<String> = self.lambda.parts().iter().map(|x| x.to_string()).collect();
        format!("{}_{}", self.p, parts.join("-"))
    }

    pub fn label(&self, l: i64, n: usize) -> Result<ModuleLabel> {
        ModuleLabel::new(l, n, self.p, self.lambda.clone())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},({}))", self.p, self.lambda)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Vertices `(p, λ)` with `λ ⊢ min(p, l+2)`, `p ≤ max_p`; edges join
/// `(p, λ)` to `(p+1, λ′)` with `λ′ = λ` or `λ` plus one box.
#[derive(Clone, Debug)]
pub struct RolletGraph {
    pub l: i64,
    pub max_p: usize,
    pub vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl RolletGraph {
    pub fn new(l: i64, max_p: usize) -> Result<Self> {
        if l < -1 {
            return Err(GramError::InvalidLabel(format!("height l={l} must be at least -1")));
        }
        let mut vertices = Vec::new();
        for p in 0..=max_p {
            for lam in Partition::all(partition_size(l, p)) {
                vertices.push(Vertex::new(p, lam));
            }
        }
        let index: HashMap<Vertex, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut up = vec![Vec::new(); vertices.len()];
        let mut down = vec![Vec::new(); vertices.len()];
        for (i, v) in vertices.iter().enumerate() {
            if v.p == max_p {
                continue;
            }
            let targets = if partition_size(l, v.p + 1) > v.lambda.size() {
                v.lambda.add_box()
            } else {
                vec![v.lambda.clone()]
            };
            for t in targets {
                let j = index[&Vertex::new(v.p + 1, t)];
                up[i].push(j);
                down[j].push(i);
            }
        }
        Ok(RolletGraph { l, max_p, vertices, index, up, down })
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Neighbours `(p+1, μ)`.
    pub fn up(&self, v: &Vertex) -> Vec<&Vertex> {
        self.index_of(v).map_or(Vec::new(), |i| self.up[i].iter().map(|&j| &self.vertices[j]).collect())
    }

    /// Neighbours `(p−1, μ)`.
    pub fn down(&self, v: &Vertex) -> Vec<&Vertex> {
        self.index_of(v).map_or(Vec::new(), |i| self.down[i].iter().map(|&j| &self.vertices[j]).collect())
    }

    pub fn neighbours(&self, v: &Vertex) -> Vec<&Vertex> {
        let mut out = self.down(v);
        out.extend(self.up(v));
        out
    }

    pub fn edges(&self) -> Vec<(&Vertex, &Vertex)> {
        let mut out = Vec::new();
        for (i, ups) in self.up.iter().enumerate() {
            for &j in ups {
                out.push((&self.vertices[i], &self.vertices[j]));
            }
        }
        out
    }

    /// Walk counts from `(0, ∅)` after `n` steps, indexed like `vertices`.
    /// Needs `max_p ≥ n` to be exact.
    pub fn walk_counts(&self, n: usize) -> Vec<u128> {
        let mut cur = vec![0u128; self.vertices.len()];
        cur[0] = 1;
        for _ in 0..n {
            let mut next = vec![0u128; self.vertices.len()];
            for (i, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &j in self.up[i].iter().chain(&self.down[i]) {
                    next[j] += c;
                }
            }
            cur = next;
        }
        cur
    }

    /// Topology as DOT.
    pub fn to_dot(&self) -> String {
        let mut s = format!("graph rollet_l{} {{\n  rankdir=LR;\n", self.l);
        for v in &self.vertices {
            s.push_str(&format!("  \"{}\" [label=\"{}\"];\n", v.id(), v));
        }
        for (a, b) in self.edges() {
            s.push_str(&format!("  \"{}\" -- \"{}\";\n", a.id(), b.id()));
        }
        s.push_str("}\n");
        s
    }
}

/// `dim Δ^n_{(p,λ)}` as the number of walks of length `n` from `∅`.
pub fn dimension(l: i64, n: usize, v: &Vertex) -> Result<u128> {
    if v.p > n || (n - v.p) % 2 != 0 {
        return Ok(0);
    }
    let g = RolletGraph::new(l, n)?;
    let i = g.index_of(v).ok_or_else(|| GramError::InvalidLabel(format!("{v} is not a vertex at height {l}")))?;
    Ok(g.walk_counts(n)[i])
}

/// Monic determinant of `Δ^n_v`; `1` when the module does not exist.
pub fn det_or_one(l: i64, n: usize, v: &Vertex) -> Result<Poly> {
    if v.p > n || (n - v.p) % 2 != 0 {
        return Ok(Poly::one());
    }
    gram_det(&v.label(l, n)?)
}

/// Numerator and denominator of `𝒱^n_v` before reduction.
fn marginal_parts(g: &RolletGraph, v: &Vertex, n: usize) -> Result<(Poly, Poly)> {
    let num = det_or_one(g.l, n, v)?;
    let mut den = Poly::one();
    if n > 0 {
        for u in g.neighbours(v) {
            den = &den * &det_or_one(g.l, n - 1, u)?;
        }
    }
    Ok((num, den))
}

/// Marginal vertex function `𝒱^n_v = det_n(v) / Π_{u ~ v} det_{n−1}(u)`.
pub fn marginal_v(l: i64, v: &Vertex, n: usize) -> Result<RatFunc> {
    let g = RolletGraph::new(l, n.max(v.p + 1))?;
    let (a, b) = marginal_parts(&g, v, n)?;
    Ok(RatFunc::new(a, b)?)
}

/// Numerator and denominator of `𝒞^n_v`, unreduced, up to a constant.
fn chebyshev_parts(g: &RolletGraph, v: &Vertex, n: usize) -> Result<(Poly, Poly)> {
    let ups = g.up(v);
    let missing: Vec<String> = ups
        .iter()
        .filter(|u| u.lambda.size() as i64 != g.l + 2)
        .map(|u| format!("({})", u.lambda))
        .collect();
    if !missing.is_empty() {
        return Err(GramError::InvalidLabel(format!(
            "no one-cup P-series for {} at vertex {v}",
            missing.join(", ")
        )));
    }
    let (mut num, mut den) = (Poly::one(), Poly::one());
    for u in ups {
        let f = factor_one_cup(g.l, &u.lambda)?;
        let e = dimension(g.l, n - 1, u)? as u32;
        let k = v.p as i64 + 2;
        num = &num * &f.p.term(k).pow(e);
        den = &den * &f.p.term(k - 1).pow(e);
    }
    Ok((num, den))
}

/// `𝒞^n_v = Π_{(p+1,μ) ~ v} (P^{(μ)}_{p+2} / P^{(μ)}_{p+1})^{dim Δ^{n−1}_{(p+1,μ)}}`,
/// normalised to monic numerator.
pub fn chebyshev_c(l: i64, v: &Vertex, n: usize) -> Result<RatFunc> {
    let g = RolletGraph::new(l, n.max(v.p + 1))?;
    let (a, b) = chebyshev_parts(&g, v, n)?;
    let r = RatFunc::new(a, b)?;
    let (a, b) = r.monic_parts();
    Ok(RatFunc::new(a, b)?)
}

/// Outcome of one `𝒱 = 𝒞` comparison.
#[derive(Clone, Debug)]
pub struct ArmCheck {
    pub vertex: Vertex,
    pub n: usize,
    pub m: usize,
    pub holds: bool,
    /// `𝒞 / 𝒱` up to a constant; `1` when the identity holds.
    pub residual: RatFunc,
}

/// Compare `𝒱^n_v` and `𝒞^n_v` up to a nonzero constant.  Cross
/// multiplication decides equality; the residual is only reduced when it
/// is needed for reporting.
pub fn arm_check(l: i64, v: &Vertex, n: usize) -> Result<ArmCheck> {
    let g = RolletGraph::new(l, n.max(v.p + 1))?;
    let (vn, vd) = marginal_parts(&g, v, n)?;
    let (cn, cd) = chebyshev_parts(&g, v, n)?;
    let lhs = &cn * &vd;
    let rhs = &vn * &cd;
    let holds = lhs.monic() == rhs.monic();
    let residual = if holds {
        RatFunc::one()
    } else {
        let r = RatFunc::new(lhs, rhs)?;
        let (a, b) = r.monic_parts();
        RatFunc::new(a, b)?
    };
    Ok(ArmCheck { vertex: v.clone(), n, m: (n - v.p) / 2, holds, residual })
}

/// Arm property on `(p, λ)` for every `p` in `ps` and `m` in `ms`.
pub fn arm_verify(l: i64, lambda: &Partition, ps: &[usize], ms: &[usize]) -> Result<Vec<ArmCheck>> {
    if lambda.size() as i64 != l + 2 {
        return Err(GramError::InvalidLabel(format!("λ=({lambda}) must be a partition of l+2 = {}", l + 2)));
    }
    if let Some(&p) = ps.iter().find(|&&p| (p as i64) < l + 2) {
        return Err(GramError::InvalidLabel(format!("arm vertices need p >= l+2, got p={p}")));
    }
    // warm the series cache before fanning out
    factor_one_cup(l, lambda)?;
    let jobs: Vec<(usize, usize)> = ps.iter().flat_map(|&p| ms.iter().map(move |&m| (p, m))).collect();
    jobs.par_iter()
        .map(|&(p, m)| arm_check(l, &Vertex::new(p, lambda.clone()), p + 2 * m))
        .collect()
}

/// A product `Π [k]^{e_k}` of quantum numbers with integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QuantumProduct(pub BTreeMap<i64, i64>);

impl QuantumProduct {
    pub fn one() -> Self {
        QuantumProduct::default()
    }

    pub fn q(k: i64) -> Self {
        let mut m = BTreeMap::new();
        if k != 1 {
            m.insert(k, 1);
        }
        QuantumProduct(m)
    }

    pub fn mul(&mut self, o: &QuantumProduct, times: i64) {
        for (&k, &e) in &o.0 {
            let v = self.0.entry(k).or_insert(0);
            *v += e * times;
            if *v == 0 {
                self.0.remove(&k);
            }
        }
    }

    /// Exponents as written, e.g. `[3]^13[4]^6[5]/[2]^6`.
    pub fn from_exponents(pairs: &[(i64, i64)]) -> Self {
        let mut out = QuantumProduct::one();
        for &(k, e) in pairs {
            out.mul(&QuantumProduct::q(k), e);
        }
        out
    }

    /// Expand as a polynomial in δ; fails if the negative exponents do not
    /// cancel.
    pub fn to_poly(&self) -> Result<Poly> {
        let (mut num, mut den) = (Poly::one(), Poly::one());
        for (&k, &e) in &self.0 {
            let q = quantum_number(k).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &q;
            } else {
                den = &den * &q;
            }
        }
        num.exact_div(&den).map_err(|_| GramError::Internal(format!("{self} is not a polynomial")))
    }
}

impl fmt::Display for QuantumProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |pos: bool| -> String {
            self.0
                .iter()
                .filter(|(_, &e)| (e > 0) == pos)
                .map(|(k, e)| if e.abs() == 1 { format!("[{k}]") } else { format!("[{k}]^{}", e.abs()) })
                .collect()
        };
        let (n, d) = (part(true), part(false));
        let n = if n.is_empty() { "1".to_string() } else { n };
        if d.is_empty() {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

/// `det M_n(p)` for l = −1 via `det M_n(p) = det M_{n−1}(p−1) ·
/// ([p+2]/[p+1])^{dim M_{n−1}(p+1)} · det M_{n−1}(p+1)`, kept as a
/// multiset of quantum numbers.
pub fn tl_recursive_product(n: usize, p: usize) -> Result<QuantumProduct> {
    if p > n || (n - p) % 2 != 0 {
        return Err(GramError::InvalidLabel(format!("n={n} and p={p} must satisfy p <= n and n ≡ p mod 2")));
    }
    let g = RolletGraph::new(-1, n + 1)?;
    // rows[k][q] = det M_k(q)
    let mut rows: Vec<Vec<Option<QuantumProduct>>> = vec![vec![Some(QuantumProduct::one())]];
    for k in 1..=n {
        let dims = g.walk_counts(k - 1);
        let mut row = vec![None; k + 1];
        for q in (k % 2..=k).step_by(2) {
            let mut d = QuantumProduct::one();
            if q >= 1 {
                if let Some(prev) = &rows[k - 1][q - 1] {
                    d.mul(prev, 1);
                }
            }
            if q + 1 <= k - 1 {
                let e = dims[q + 1] as i64;
                d.mul(&QuantumProduct::q(q as i64 + 2), e);
                d.mul(&QuantumProduct::q(q as i64 + 1), -e);
                d.mul(rows[k - 1][q + 1].as_ref().expect("parity"), 1);
            }
            row[q] = Some(d);
        }
        rows.push(row);
    }
    let out = rows[n][p].clone().expect("parity checked");
    if out.0.values().any(|&e| e < 0) {
        // negative exponents are fine as long as the product is a polynomial
        out.to_poly()?;
    }
    Ok(out)
}

pub fn tl_recursive_det(n: usize, p: usize) -> Result<Poly> {
    tl_recursive_product(n, p)?.to_poly()
}

/// What to attach to each vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecorationKind {
    Det,
    Mvf,
}

#[derive(Clone, Debug)]
pub struct Fibre {
    pub dim: u128,
    pub det: Poly,
    pub mvf: Option<RatFunc>,
}

/// Rank-indexed decorations: `fibres[v][n]`.
#[derive(Clone, Debug)]
pub struct Decoration {
    pub graph: RolletGraph,
    pub max_n: usize,
    pub fibres: BTreeMap<Vertex, BTreeMap<usize, Fibre>>,
}

/// Decorate every vertex with its fibre for ranks `p ≤ n ≤ max_n`.
pub fn decorate(l: i64, max_n: usize, kind: DecorationKind) -> Result<Decoration> {
    let graph = RolletGraph::new(l, max_n + 1)?;
    let jobs: Vec<(Vertex, usize)> = graph
        .vertices
        .iter()
        .filter(|v| v.p <= max_n)
        .flat_map(|v| (v.p..=max_n).step_by(2).map(move |n| (v.clone(), n)))
        .collect();
    let walks: Vec<Vec<u128>> = (0..=max_n).map(|n| graph.walk_counts(n)).collect();
    // smallest first so that the memo fills bottom-up
    let mut sorted = jobs;
    sorted.sort_by_key(|(v, n)| (*n, v.p));
    let results: Vec<Result<(Vertex, usize, Fibre)>> = sorted
        .par_iter()
        .map(|(v, n)| {
            let det = det_or_one(l, *n, v)?;
            let mvf = match kind {
                DecorationKind::Det => None,
                DecorationKind::Mvf => Some(marginal_v(l, v, *n)?),
            };
            let dim = walks[*n][graph.index_of(v).unwrap()];
            Ok((v.clone(), *n, Fibre { dim, det, mvf }))
        })
        .collect();
    let mut fibres: BTreeMap<Vertex, BTreeMap<usize, Fibre>> = BTreeMap::new();
    for r in results {
        let (v, n, f) = r?;
        fibres.entry(v).or_default().insert(n, f);
    }
    Ok(Decoration { graph, max_n, fibres })
}

impl Decoration {
    /// The fixed-cup section `Roll^{(m)}`: `𝒱^{p+2m}_v` for each vertex.
    pub fn section(&self, m: usize) -> Vec<(&Vertex, &Fibre)> {
        self.fibres
            .iter()
            .filter_map(|(v, f)| f.get(&(v.p + 2 * m)).map(|x| (v, x)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .fibres
            .iter()
            .map(|(v, fs)| {
                let fibre: serde_json::Map<String, Value> = fs
                    .iter()
                    .map(|(n, f)| {
                        let mut o = json!({"dim": f.dim.to_string(), "det": f.det.to_string()});
                        if let Some(m) = &f.mvf {
                            o["mvf"] = json!(m.to_string());
                        }
                        (n.to_string(), o)
                    })
                    .collect();
                json!({"p": v.p, "lambda": v.lambda.parts(), "fibre": fibre})
            })
            .collect();
        json!({"l": self.graph.l, "vertices": vertices})
    }

    /// DOT with the `Roll^{(m)}` section (or the topology if `m` is None).
    pub fn to_dot(&self, m: Option<usize>) -> String {
        let Some(m) = m else { return self.graph.to_dot() };
        let sec: BTreeMap<&Vertex, &Fibre> = self.section(m).into_iter().collect();
        let mut s = format!("graph rollet_l{}_m{} {{\n  rankdir=LR;\n", self.graph.l, m);
        for v in &self.graph.vertices {
            if let Some(f) = sec.get(v) {
                let val = f.mvf.as_ref().map_or_else(|| f.det.to_string(), |x| x.to_string());
                s.push_str(&format!("  \"{}\" [label=\"{}\\n{}\"];\n", v.id(), v, val));
            }
        }
        for (a, b) in self.graph.edges() {
            if sec.contains_key(a) && sec.contains_key(b) {
                s.push_str(&format!("  \"{}\" -- \"{}\";\n", a.id(), b.id()));
            }
        }
        s.push_str("}\n");
        s
    }
}
