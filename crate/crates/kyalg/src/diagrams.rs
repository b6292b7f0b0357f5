//! Brauer pair partitions, composition with loop counting, and the
//! height-l bases obtained by generator closure.
//!
//! Points are numbered `0..n` along the top and `n..n+m` along the bottom.
//! Composition `a.compose(b)` stacks `a` on top of `b`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("size mismatch: {0} bottom points against {1} top points")]
    SizeMismatch(usize, usize),
    #[error("parity violation: n={n}, p={p} must have equal parity with p <= n")]
    Parity { n: usize, p: usize },
    #[error("not a perfect matching: {0}")]
    BadMatching(String),
    #[error("cannot parse diagram {0:?}")]
    Parse(String),
}

/// A pair partition of `n_top + n_bot` points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairPartition {
    n_top: usize,
    n_bot: usize,
    partner: Vec<u16>,
}

impl PairPartition {
    /// Build from a partner array over the combined point set.
    pub fn from_partner(n_top: usize, n_bot: usize, partner: Vec<usize>) -> Result<Self, DiagramError> {
        let t = n_top + n_bot;
        if partner.len() != t {
            return Err(DiagramError::BadMatching(format!("expected {t} points")));
        }
        for (i, &j) in partner.iter().enumerate() {
            if j >= t || j == i || partner[j] != i {
                return Err(DiagramError::BadMatching(format!("point {i}")));
            }
        }
        Ok(PairPartition { n_top, n_bot, partner: partner.into_iter().map(|x| x as u16).collect() })
    }

    /// Build from pairs of combined point indices.
    pub fn from_pairs(n_top: usize, n_bot: usize, pairs: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let t = n_top + n_bot;
        let mut partner = vec![usize::MAX; t];
        for &(a, b) in pairs {
            if a >= t || b >= t || partner[a] != usize::MAX || partner[b] != usize::MAX || a == b {
                return Err(DiagramError::BadMatching(format!("pair ({a},{b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(DiagramError::BadMatching("unmatched point".into()));
        }
        PairPartition::from_partner(n_top, n_bot, partner)
    }

    pub fn identity(n: usize) -> Self {
        PairPartition::permutation(&(0..n).collect::<Vec<_>>())
    }

    /// Permutation diagram: top `i` joined to bottom `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut partner = vec![0usize; 2 * n];
        for (i, &j) in perm.iter().enumerate() {
            partner[i] = n + j;
            partner[n + j] = i;
        }
        PairPartition::from_partner(n, n, partner).expect("valid permutation")
    }

    /// `e_i` (1-based): cup-cap on strands `i, i+1`.
    pub fn e(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut pairs: Vec<(usize, usize)> = (0..n).filter(|&k| k != i - 1 && k != i).map(|k| (k, n + k)).collect();
        pairs.push((i - 1, i));
        pairs.push((n + i - 1, n + i));
        PairPartition::from_pairs(n, n, &pairs).unwrap()
    }

    /// `s_i` (1-based): transposition of strands `i, i+1`.
    pub fn s(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i - 1, i);
        PairPartition::permutation(&perm)
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn n_bot(&self) -> usize {
        self.n_bot
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    fn is_top(&self, i: usize) -> bool {
        i < self.n_top
    }

    /// Sorted pairs `(a, b)`, `a < b`, in combined indices (bottom point
    /// `j` is `n_top + j`); this list is the canonical form.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&i| i < self.partner(i)).map(|i| (i, self.partner(i))).collect()
    }

    pub fn propagating(&self) -> usize {
        (0..self.n_top).filter(|&i| !self.is_top(self.partner(i))).count()
    }

    /// Propagating lines as (top, bottom) pairs sorted by top endpoint.
    pub fn lines(&self) -> Vec<(usize, usize)> {
        (0..self.n_top).filter(|&i| !self.is_top(self.partner(i))).map(|i| (i, self.partner(i) - self.n_top)).collect()
    }

    /// Top cups `(a, b)` with `a < b`.
    pub fn top_arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n_top).filter(|&i| self.is_top(self.partner(i)) && i < self.partner(i)).map(|i| (i, self.partner(i))).collect()
    }

    pub fn is_permutation(&self) -> bool {
        self.n_top == self.n_bot && self.propagating() == self.n_top
    }

    /// The permutation of a permutation diagram (top `i` ↦ bottom `perm[i]`).
    pub fn perm(&self) -> Option<Vec<usize>> {
        self.is_permutation().then(|| (0..self.n_top).map(|i| self.partner(i) - self.n_top).collect())
    }

    /// True when no two propagating lines cross.
    pub fn lines_noncrossing(&self) -> bool {
        self.lines().windows(2).all(|w| w[0].1 < w[1].1)
    }

    /// Vertical mirror image.
    pub fn flip(&self) -> Self {
        let (n, m) = (self.n_top, self.n_bot);
        let map = |i: usize| if i < n { m + i } else { i - n };
        let mut partner = vec![0u16; n + m];
        for i in 0..n + m {
            partner[map(i)] = map(self.partner(i)) as u16;
        }
        PairPartition { n_top: m, n_bot: n, partner }
    }

    /// `self` on top of `other`; returns the diagram and the number of closed loops.
    pub fn compose(&self, other: &PairPartition) -> Result<(PairPartition, usize), DiagramError> {
        let (n, m, k) = (self.n_top, self.n_bot, other.n_bot);
        if m != other.n_top {
            return Err(DiagramError::SizeMismatch(m, other.n_top));
        }
        let mut seen = vec![false; m];
        let mut partner = vec![usize::MAX; n + k];
        // Walk from an outer point; `in_a` tells which diagram we are in.
        let walk = |start_in_a: bool, start: usize, seen: &mut Vec<bool>| -> usize {
            let mut in_a = start_in_a;
            let mut pos = start;
            loop {
                if in_a {
                    let q = self.partner(pos);
                    if q < n {
                        return q;
                    }
                    let mid = q - n;
                    seen[mid] = true;
                    in_a = false;
                    pos = mid;
                } else {
                    let q = other.partner(pos);
                    if q >= m {
                        return n + (q - m);
                    }
                    seen[q] = true;
                    in_a = true;
                    pos = n + q;
                }
            }
        };
        for i in 0..n {
            if partner[i] == usize::MAX {
                let j = walk(true, i, &mut seen);
                partner[i] = j;
                partner[j] = i;
            }
        }
        for j in 0..k {
            if partner[n + j] == usize::MAX {
                let t = walk(false, m + j, &mut seen);
                partner[n + j] = t;
                partner[t] = n + j;
            }
        }
        let mut loops = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut mid = start;
            loop {
                seen[mid] = true;
                let a = self.partner(n + mid) - n;
                seen[a] = true;
                mid = other.partner(a);
                if mid == start {
                    break;
                }
            }
        }
        Ok((PairPartition { n_top: n, n_bot: k, partner: partner.into_iter().map(|x| x as u16).collect() }, loops))
    }

    /// Side-by-side juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &PairPartition) -> PairPartition {
        let (n1, m1, n2, m2) = (self.n_top, self.n_bot, other.n_top, other.n_bot);
        let n = n1 + n2;
        let map_a = |i: usize| if i < n1 { i } else { n + (i - n1) };
        let map_b = |i: usize| if i < n2 { n1 + i } else { n + m1 + (i - n2) };
        let mut partner = vec![0u16; n + m1 + m2];
        for i in 0..n1 + m1 {
            partner[map_a(i)] = map_a(self.partner(i)) as u16;
        }
        for i in 0..n2 + m2 {
            partner[map_b(i)] = map_b(other.partner(i)) as u16;
        }
        PairPartition { n_top: n, n_bot: m1 + m2, partner }
    }

    /// Write a diagram with `p` propagating lines as `ũ ∘ τ`, with `ũ` having
    /// the same arcs and non-crossing lines and `τ` a permutation of the
    /// lines: line `i` (ordered by top endpoint) ends at bottom `τ[i]`.
    pub fn split_noncrossing(&self) -> (PairPartition, Vec<usize>) {
        let lines = self.lines();
        let tau: Vec<usize> = lines.iter().map(|&(_, b)| b).collect();
        let n = self.n_top;
        let mut pairs = self.top_arcs();
        pairs.extend(lines.iter().enumerate().map(|(i, &(t, _))| (t, n + i)));
        let u = PairPartition::from_pairs(n, self.n_bot, &pairs).expect("valid");
        (u, tau)
    }
}

impl PartialOrd for PairPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: sizes, then more propagating lines first, then the
/// lexicographic pair list.
impl Ord for PairPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n_top, self.n_bot)
            .cmp(&(other.n_top, other.n_bot))
            .then_with(|| other.propagating().cmp(&self.propagating()))
            .then_with(|| self.pairs().cmp(&other.pairs()))
    }
}

impl fmt::Display for PairPartition {
    /// `n,m:[(1,2),(3,1'),...]` with 1-based labels, primes on bottom points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lab = |i: usize| {
            if i < self.n_top {
                format!("{}", i + 1)
            } else {
                format!("{}'", i - self.n_top + 1)
            }
        };
        let body: Vec<String> = self.pairs().iter().map(|&(a, b)| format!("({},{})", lab(a), lab(b))).collect();
        write!(f, "{},{}:[{}]", self.n_top, self.n_bot, body.join(","))
    }
}

impl fmt::Debug for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PairPartition {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let bad = || DiagramError::Parse(s.to_string());
        let (head, body) = s.split_once(':').ok_or_else(bad)?;
        let (n, m) = head.split_once(',').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let m: usize = m.trim().parse().map_err(|_| bad())?;
        let body = body.trim().strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
        let point = |t: &str| -> Result<usize, DiagramError> {
            let t = t.trim();
            let (num, bottom) = match t.strip_suffix('\'') {
                Some(x) => (x, true),
                None => (t, false),
            };
            let k: usize = num.parse().map_err(|_| bad())?;
            if k == 0 {
                return Err(bad());
            }
            Ok(if bottom { n + k - 1 } else { k - 1 })
        };
        let mut pairs = Vec::new();
        for chunk in body.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let chunk = chunk.trim_start_matches(',').trim().strip_prefix('(').ok_or_else(bad)?;
            let (a, b) = chunk.split_once(',').ok_or_else(bad)?;
            pairs.push((point(a)?, point(b)?));
        }
        PairPartition::from_pairs(n, m, &pairs)
    }
}

/// A half diagram in `ℬ(n, p)` with `p` non-crossing propagating lines.
pub type HalfDiagram = PairPartition;

/// Generators of `J_l(n,n)`: all `e_i` and `s_j` with `j ≤ l+1`.
pub fn generators(l: i64, n: usize) -> Vec<PairPartition> {
    let mut g: Vec<PairPartition> = (1..n).map(|i| PairPartition::e(n, i)).collect();
    let top = (l + 1).min(n as i64 - 1).max(0) as usize;
    g.extend((1..=top).map(|j| PairPartition::s(n, j)));
    g
}

/// All diagrams of `J_l(n,n)`, by closure of the identity under the
/// generators (loop scalars discarded).  Sorted canonically.
pub fn basis_by_closure(l: i64, n: usize) -> Vec<PairPartition> {
    let gens = generators(l, n);
    let start = PairPartition::identity(n);
    let mut seen: HashSet<PairPartition> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for g in &gens {
            let (x, _) = g.compose(&d).unwrap();
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    let mut v: Vec<_> = seen.into_iter().collect();
    v.sort();
    v
}

/// The half diagram with lines `1..p` straight down and top cups
/// `(p+1,p+2), (p+3,p+4), ...`.
pub fn standard_half(n: usize, p: usize) -> PairPartition {
    let mut pairs: Vec<(usize, usize)> = (0..p).map(|i| (i, n + i)).collect();
    let mut i = p;
    while i + 1 < n {
        pairs.push((i, i + 1));
        i += 2;
    }
    PairPartition::from_pairs(n, p, &pairs).unwrap()
}

fn compute_half_basis(l: i64, n: usize, p: usize) -> Vec<HalfDiagram> {
    let gens = generators(l, n);
    let start = standard_half(n, p);
    let mut seen: HashSet<PairPartition> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for g in &gens {
            let (x, _) = g.compose(&d).unwrap();
            if x.propagating() == p && seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    let mut v: Vec<_> = seen.into_iter().filter(|d| d.lines_noncrossing()).collect();
    v.sort();
    v
}

type HalfKey = (i64, usize, usize);

fn half_cache() -> &'static Mutex<HashMap<HalfKey, std::sync::Arc<Vec<HalfDiagram>>>> {
    static C: OnceLock<Mutex<HashMap<HalfKey, std::sync::Arc<Vec<HalfDiagram>>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Height-≤ l half diagrams `J_l^{||}(n, p)`, canonically ordered.  Memoised.
pub fn half_basis(l: i64, n: usize, p: usize) -> Result<std::sync::Arc<Vec<HalfDiagram>>, DiagramError> {
    if p > n || (n - p) % 2 != 0 {
        return Err(DiagramError::Parity { n, p });
    }
    let key = (l.max(-1).min(n as i64), n, p);
    if let Some(v) = half_cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = std::sync::Arc::new(compute_half_basis(l, n, p));
    half_cache().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// One-cup half diagram `u_{j,k}` (1-based cup endpoints) in `ℬ(n, n−2)`.
pub fn cup(n: usize, j: usize, k: usize) -> HalfDiagram {
    assert!(1 <= j && j < k && k <= n);
    let mut pairs = vec![(j - 1, k - 1)];
    let rest: Vec<usize> = (0..n).filter(|&i| i != j - 1 && i != k - 1).collect();
    pairs.extend(rest.iter().enumerate().map(|(b, &t)| (t, n + b)));
    PairPartition::from_pairs(n, n - 2, &pairs).unwrap()
}

/// Cup positions of the one-cup basis, ordered lexicographically.
pub fn one_cup_positions(l: i64, n: usize) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    let top = ((l + 3).max(0) as usize).min(n);
    for k in 3..=top {
        for j in 1..=k - 2 {
            v.push((j, k));
        }
    }
    v.sort();
    v
}

/// The one-cup basis of `Δ^n_{(n−2,λ)}`'s diagram part.
pub fn one_cup_basis(l: i64, n: usize) -> Vec<HalfDiagram> {
    one_cup_positions(l, n).into_iter().map(|(j, k)| cup(n, j, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_squared_gives_a_loop() {
        let e1 = PairPartition::e(4, 1);
        let (x, loops) = e1.compose(&e1).unwrap();
        assert_eq!((x, loops), (e1, 1));
    }

    #[test]
    fn small_closures() {
        assert_eq!(basis_by_closure(-1, 3).len(), 5);
        assert_eq!(basis_by_closure(1, 3).len(), 15);
        assert_eq!(basis_by_closure(-1, 0).len(), 1);
    }

    #[test]
    fn half_basis_counts() {
        assert_eq!(half_basis(1, 5, 3).unwrap().len(), 7);
        // l=0 Bratteli figure at n=6: 11 at the empty label, 16 at p=2
        assert_eq!(half_basis(0, 6, 0).unwrap().len(), 11);
        assert_eq!(half_basis(0, 6, 2).unwrap().len(), 16);
        assert_eq!(half_basis(2, 4, 4).unwrap().as_slice(), &[PairPartition::identity(4)]);
        assert!(half_basis(0, 5, 2).is_err());
    }

    #[test]
    fn one_cup_matches_closure() {
        for l in -1..=2 {
            for n in 2..=7 {
                let mut a = one_cup_basis(l, n);
                a.sort();
                assert_eq!(a.as_slice(), half_basis(l, n, n - 2).unwrap().as_slice(), "l={l} n={n}");
                // canonical order is already (j,k) order
                assert_eq!(a, one_cup_basis(l, n));
            }
        }
        assert_eq!(one_cup_basis(1, 7).len(), 9);
    }

    #[test]
    fn text_round_trip() {
        let d = cup(7, 2, 4);
        let s = d.to_string();
        assert_eq!(s.parse::<PairPartition>().unwrap(), d);
        assert_eq!("2,2:[(1,2'),(2,1')]".parse::<PairPartition>().unwrap(), PairPartition::s(2, 1));
    }

    #[test]
    fn cap_cup_gives_permutation() {
        let (x, loops) = cup(5, 1, 3).flip().compose(&cup(5, 1, 2)).unwrap();
        assert_eq!(loops, 0);
        assert!(x.is_permutation());
        assert_eq!(x.propagating(), 3);
    }

    #[test]
    fn split_recovers_diagram() {
        let d = PairPartition::from_pairs(4, 2, &[(0, 5), (1, 2), (3, 4)]).unwrap();
        let (u, tau) = d.split_noncrossing();
        assert!(u.lines_noncrossing());
        let (back, loops) = u.compose(&PairPartition::permutation(&tau)).unwrap();
        assert_eq!((back, loops), (d, 0));
    }
}
