//! Worked examples, each checked against an oracle written here rather
//! than the library's own pipeline: brute-force strand tracing, rational
//! Gaussian elimination at sample points, floating-point root location,
//! and closed counting formulas.

use kyalg::cheby::{cheb_u, quantum_number, ChebSeries};
use kyalg::diagrams::{basis_by_closure, cup, one_cup_basis, PairPartition};
use kyalg::exactmath::{
    det_poly, parse_poly, poly_gcd, poly_nth_root, rat, smith_invariants, Poly, PolyMatrix, Rational,
};
use kyalg::gram::{
    factor_one_cup, gram_det, gram_matrix, mixed_det, module_dim, one_cup_det, ModuleLabel,
};
use kyalg::morphisms::{divisibility_check, rank_deficiency, submodule_verify, xi_chain, AlphaSpec};
use kyalg::rollet::{
    arm_check, arm_verify, chebyshev_c, dimension, marginal_v, tl_recursive_det, RolletGraph, Vertex,
};
use kyalg::roots::{count_roots, count_roots_closed, lemma_roots_check, squarefree_check, sturm_isolate};
use kyalg::symmetric::{scalar_extract, specht_basis, young_idempotent, GroupAlgebraElement, Partition, Perm, SymGroup};
use num::{One, Signed, ToPrimitive, Zero};

fn p(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

// --- oracles ---------------------------------------------------------------

/// Row reduction over ℚ; returns (rank, determinant if square).
fn reduce_q(mut m: Vec<Vec<Rational>>) -> (usize, Rational) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut det = Rational::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            det = Rational::zero();
            continue;
        };
        if piv != rank {
            m.swap(piv, rank);
            det = -det;
        }
        let pv = m[rank][c].clone();
        det *= &pv;
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pv;
            for k in c..cols {
                let t = &f * &m[rank][k];
                m[r][k] -= t;
            }
        }
        rank += 1;
    }
    if rank < rows {
        det = Rational::zero();
    }
    (rank, det)
}

fn det_at(m: &PolyMatrix, t: i64) -> Rational {
    reduce_q(m.eval(&rat(t))).1
}

/// `det m` is a constant multiple of `want`, checked at more sample points
/// than either degree allows to vanish.
fn det_proportional(m: &PolyMatrix, want: &Poly) -> bool {
    let samples = (want.deg() as usize).max(2 * m.rows()) + 3;
    let mut ratio: Option<Rational> = None;
    for t in 0..samples as i64 {
        let x = 7 + 2 * t;
        let d = det_at(m, x);
        let w = want.eval(&rat(x));
        if w.is_zero() {
            continue;
        }
        let q = &d / &w;
        if q.is_zero() || ratio.as_ref().is_some_and(|r| *r != q) {
            return false;
        }
        ratio = Some(q);
    }
    true
}

/// Strand tracing on the glued picture: `a` on top of `b`.
fn trace_compose(a: &PairPartition, b: &PairPartition) -> (Vec<(usize, usize)>, usize) {
    let (n, m, k) = (a.n_top(), a.n_bot(), b.n_bot());
    assert_eq!(m, b.n_top());
    // nodes: top 0..n, middle n..n+m, bottom n+m..n+m+k
    let node_a = |i: usize| i; // a's combined index: top i, bottom n+j = middle j
    let node_b = |i: usize| if i < m { n + i } else { n + m + (i - m) };
    let total = n + m + k;
    let mut adj = vec![Vec::new(); total];
    for (x, y) in a.pairs() {
        adj[node_a(x)].push(node_a(y));
        adj[node_a(y)].push(node_a(x));
    }
    for (x, y) in b.pairs() {
        adj[node_b(x)].push(node_b(y));
        adj[node_b(y)].push(node_b(x));
    }
    let outer = |v: usize| v < n || v >= n + m;
    let mut seen = vec![false; total];
    let mut pairs = Vec::new();
    for s in (0..total).filter(|&v| outer(v)) {
        if seen[s] {
            continue;
        }
        let (mut prev, mut cur) = (usize::MAX, s);
        seen[s] = true;
        loop {
            let next = *adj[cur].iter().find(|&&w| w != prev || adj[cur].len() == 1).unwrap();
            seen[next] = true;
            if outer(next) {
                break pairs.push((s, next));
            }
            prev = cur;
            cur = next;
        }
    }
    let mut loops = 0;
    for s in n..n + m {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(adj[v].iter().copied());
            }
        }
    }
    // combined indices of the result: top as is, bottom shifted to n..
    let relabel = |v: usize| if v < n { v } else { v - m };
    let mut out: Vec<(usize, usize)> =
        pairs.into_iter().map(|(x, y)| (relabel(x).min(relabel(y)), relabel(x).max(relabel(y)))).collect();
    out.sort();
    (out, loops)
}

fn sorted_pairs(d: &PairPartition) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = d.pairs().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    v.sort();
    v
}

fn eval_f64(q: &Poly, x: f64) -> f64 {
    let coeffs: Vec<f64> = (0..=q.deg().max(0) as usize).map(|i| q.coeff(i).to_f64().unwrap()).collect();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Real roots located by sign changes on a fine grid (simple roots only).
fn grid_roots(q: &Poly, lo: f64, hi: f64) -> usize {
    let steps = 200_000;
    let h = (hi - lo) / steps as f64;
    let mut count = 0;
    let mut prev = eval_f64(q, lo);
    for i in 1..=steps {
        let v = eval_f64(q, lo + h * i as f64);
        if prev == 0.0 || prev * v < 0.0 {
            count += 1;
        }
        prev = v;
    }
    count
}

fn group_rank(elems: &[GroupAlgebraElement]) -> usize {
    reduce_q(elems.iter().map(|e| e.dense().to_vec()).collect()).0
}

// --- exact arithmetic ------------------------------------------------------

#[test]
fn gcd_examples() {
    assert_eq!(poly_gcd(&p("a^2-1"), &p("a-1")).unwrap(), p("a-1"));
    assert_eq!(poly_gcd(&p("a(a^2+a-4)"), &p("a^4+a^3-5a^2-a+2")).unwrap(), Poly::one());
    let d5 = one_cup_det(1, &part("2,1"), 5).unwrap();
    let d6 = one_cup_det(1, &part("2,1"), 6).unwrap();
    assert_eq!(poly_gcd(&d5, &d6).unwrap(), p("(a-2)^3 a (a+2)(a+4)"));
    assert!(poly_gcd(&Poly::zero(), &Poly::zero()).is_err());
}

#[test]
fn nth_root_examples() {
    assert_eq!(poly_nth_root(&p("(a-1)^2"), 2).unwrap(), p("a-1"));
    assert_eq!(poly_nth_root(&p("(a^4-7a^2+3)^2"), 2).unwrap(), p("a^4-7a^2+3"));
    assert_eq!(poly_nth_root(&p("a^3"), 3).unwrap(), p("a"));
    assert!(poly_nth_root(&p("a^2+1"), 2).is_err());
}

fn tridiagonal() -> PolyMatrix {
    let d = Poly::x();
    let o = Poly::one();
    let z = Poly::zero();
    PolyMatrix::from_rows(vec![
        vec![d.clone(), o.clone(), z.clone()],
        vec![o.clone(), d.clone(), o.clone()],
        vec![z, o, d],
    ])
    .unwrap()
}

#[test]
fn tridiagonal_determinant_and_smith_form() {
    let m = tridiagonal();
    assert_eq!(det_poly(&m).unwrap(), p("a(a^2-2)"));
    // invariant factors from gcds of minors: a 1×1 and a 2×2 minor equal 1
    assert_eq!(m.get(0, 1), &Poly::one());
    let minor = &(m.get(0, 1) * m.get(1, 2)) - &(m.get(0, 2) * m.get(1, 1));
    assert_eq!(minor, Poly::one());
    assert_eq!(smith_invariants(&m).unwrap(), vec![Poly::one(), Poly::one(), p("a(a^2-2)")]);
    assert_eq!(smith_invariants(&PolyMatrix::from_rows(vec![vec![Poly::one(), Poly::zero()], vec![Poly::zero(), Poly::one()]]).unwrap()).unwrap(), vec![Poly::one(); 2]);
    assert_eq!(det_poly(&PolyMatrix::from_rows(vec![vec![Poly::x()]]).unwrap()).unwrap(), Poly::x());
}

#[test]
fn l0_row_gram_rank_drop() {
    let label = ModuleLabel::new(0, 4, 2, part("2")).unwrap();
    let g = gram_matrix(&label).unwrap();
    let want = p("(a-1)a(a^2+a-4)");
    assert!(det_proportional(&g.matrix, &want));
    let inv = smith_invariants(&g.matrix).unwrap();
    let prod = inv.iter().fold(Poly::one(), |acc, x| &acc * x);
    assert_eq!(prod, want);
    // floating-point rank at the positive root of α²+α−4
    let root = (-1.0 + 17f64.sqrt()) / 2.0;
    let mut m: Vec<Vec<f64>> = (0..g.matrix.rows())
        .map(|i| (0..g.matrix.rows()).map(|j| eval_f64(g.matrix.get(i, j), root)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.len() {
        let piv = (rank..m.len()).max_by(|&x, &y| m[x][c].abs().total_cmp(&m[y][c].abs())).unwrap();
        if m[piv][c].abs() < 1e-9 {
            continue;
        }
        m.swap(piv, rank);
        for r in rank + 1..m.len() {
            let f = m[r][c] / m[rank][c];
            for k in c..m.len() {
                m[r][k] -= f * m[rank][k];
            }
        }
        rank += 1;
    }
    assert_eq!(m.len() - rank, 1);
    assert_eq!(rank_deficiency(&label, &AlphaSpec::Minpoly(p("a^2+a-4"))).unwrap(), 1);
}

// --- Chebyshev series ------------------------------------------------------

fn by_recursion(p0: &Poly, p1: &Poly, steps: usize) -> Poly {
    let (mut a, mut b) = (p0.clone(), p1.clone());
    for _ in 0..steps {
        let c = &(&Poly::x() * &b) - &a;
        a = b;
        b = c;
    }
    b
}

#[test]
fn classical_series_values() {
    assert_eq!(cheb_u(4), p("a^3-2a"));
    assert_eq!(cheb_u(0), Poly::zero());
    assert_eq!(cheb_u(-3), p("-(a^2-1)"));
    let s = ChebSeries::classical();
    for k in -6..12 {
        assert_eq!(s.term(k), cheb_u(k), "k={k}");
    }
    for k in 2..12 {
        assert_eq!(cheb_u(k), by_recursion(&Poly::zero(), &Poly::one(), (k - 1) as usize));
    }
}

#[test]
fn series_terms() {
    let s = ChebSeries::new(4, p("a(a^2+a-4)"), p("a^4+a^3-5a^2-a+2"));
    assert_eq!(s.term(6), p("(a-1)a(a^3+2a^2-4a-6)"));
    assert_eq!(s.term(6), by_recursion(&s.p_n, &s.p_n1, 1));
    let t = ChebSeries::new(5, p("a^4-7a^2+3"), p("(a-1)a(a+1)(a^2-7)"));
    assert_eq!(t.term(7), p("a^6-9a^4+14a^2-3"));
    // backwards: P_{n-1} = α P_n − P_{n+1}
    assert_eq!(t.term(4), &(&Poly::x() * &t.p_n) - &t.p_n1);
}

#[test]
fn reduce_examples() {
    let s = ChebSeries::new(0, p("a-1"), p("(a-1)(a+2)"));
    let (c, r) = s.reduce().unwrap();
    assert_eq!(c, p("a-1"));
    assert_eq!((r.p_n, r.p_n1), (Poly::one(), p("a+2")));
    let s = ChebSeries::new(4, p("a(a^2+a-4)"), p("a^4+a^3-5a^2-a+2"));
    let (c, r) = s.reduce().unwrap();
    assert_eq!((c, r), (Poly::one(), s));
    assert!(ChebSeries::new(0, Poly::zero(), Poly::zero()).reduce().is_err());
}

#[test]
fn u_expansions() {
    let t = ChebSeries::new(5, p("a^4-7a^2+3"), p("(a-1)a(a+1)(a^2-7)"));
    let e = t.u_expansion().unwrap();
    // rebuild from P^U and compare on a range of n
    for n in 0..14 {
        let mut sum = Poly::zero();
        for (s, c) in e.shifts() {
            sum = &sum + &cheb_u(n - s).scale(&c);
        }
        assert_eq!(sum, t.term(n), "n={n}");
    }
    let want = [(0, 1), (2, -4), (4, -4), (6, -2)].map(|(s, c)| (s, rat(c))).into_iter().collect();
    assert_eq!(e.shifts(), want);
    let col = factor_one_cup(0, &part("1,1")).unwrap().p.u_expansion().unwrap().shifts();
    assert_eq!(col, [(1, 1), (2, -1), (3, -1)].map(|(s, c)| (s, rat(c))).into_iter().collect());
    // at anchor 0 the pair (0, 1) is not monic, so the classical series is
    // expanded from anchor 1
    assert!(ChebSeries::classical().u_expansion().is_err());
    let cl = ChebSeries::classical().reanchor(1).u_expansion().unwrap().shifts();
    assert_eq!(cl, [(0, rat(1))].into_iter().collect());
}

#[test]
fn ramping_examples() {
    assert!(ChebSeries::new(4, p("a(a^2+a-4)"), p("a^4+a^3-5a^2-a+2")).ramping_check().ok());
    assert!(!ChebSeries::new(0, p("a"), p("a^2")).ramping_check().ok());
    assert!(!ChebSeries::new(0, p("2"), p("a-1")).ramping_check().ok());
    assert!(ChebSeries::new(0, p("a"), p("a^2")).u_expansion().is_err());
}

#[test]
fn quantum_numbers() {
    assert_eq!(quantum_number(2), p("a"));
    assert_eq!(quantum_number(4), p("a^3-2a"));
    assert_eq!(quantum_number(1), Poly::one());
    let prod = &(&quantum_number(2).pow(4) * &quantum_number(3).pow(4)) * &quantum_number(4);
    assert_eq!(prod, p("a^5(a^2-1)^4(a^2-2)"));
}

// --- diagrams --------------------------------------------------------------

#[test]
fn cup_cap_squares_to_a_loop() {
    let e1 = PairPartition::e(4, 1);
    let (x, loops) = e1.compose(&e1).unwrap();
    assert_eq!((x.clone(), loops), (e1.clone(), 1));
    assert_eq!(trace_compose(&e1, &e1), (sorted_pairs(&x), 1));
}

#[test]
fn identity_composition() {
    let d = cup(5, 2, 4);
    assert_eq!(PairPartition::identity(5).compose(&d).unwrap(), (d.clone(), 0));
    assert_eq!(trace_compose(&PairPartition::identity(5), &d), (sorted_pairs(&d), 0));
}

#[test]
fn crossed_cup_against_adjacent_cup() {
    let u13 = cup(5, 1, 3);
    let u12 = cup(5, 1, 2);
    let (x, loops) = u13.flip().compose(&u12).unwrap();
    assert_eq!(loops, 0);
    assert!(x.is_permutation());
    assert_eq!(x.propagating(), 3);
    assert_eq!(trace_compose(&u13.flip(), &u12), (sorted_pairs(&x), 0));
}

#[test]
fn composition_matches_strand_tracing() {
    let gens: Vec<PairPartition> = (1..5).map(|i| PairPartition::e(5, i)).chain((1..5).map(|j| PairPartition::s(5, j))).collect();
    for a in &gens {
        for b in &gens {
            let (x, k) = a.compose(b).unwrap();
            assert_eq!(trace_compose(a, b), (sorted_pairs(&x), k), "{a:?} ∘ {b:?}");
        }
    }
    let cups: Vec<PairPartition> = kyalg::diagrams::one_cup_positions(2, 6).into_iter().map(|(j, k)| cup(6, j, k)).collect();
    for a in &cups {
        for b in &cups {
            let (x, k) = a.flip().compose(b).unwrap();
            assert_eq!(trace_compose(&a.flip(), b), (sorted_pairs(&x), k));
        }
    }
}

#[test]
fn closure_counts() {
    // Catalan numbers for Temperley–Lieb, (2n−1)!! for Brauer
    assert_eq!(basis_by_closure(-1, 3).len(), 5);
    assert_eq!(basis_by_closure(-1, 4).len(), 14);
    assert_eq!(basis_by_closure(-1, 0).len(), 1);
    assert_eq!(basis_by_closure(1, 3).len(), 15);
    assert_eq!(basis_by_closure(2, 4).len(), 105);
}

#[test]
fn one_cup_counts() {
    assert_eq!(one_cup_basis(1, 5).len(), 7);
    for n in 2..9 {
        assert_eq!(one_cup_basis(-1, n).len(), n - 1);
    }
    assert_eq!(one_cup_basis(1, 7).len(), (7 - 1) + 1 + 2);
}

// --- symmetric groups ------------------------------------------------------

fn span_dim(lambda: &Partition) -> usize {
    let c = young_idempotent(lambda);
    let g = SymGroup::get(lambda.size());
    let elems: Vec<GroupAlgebraElement> = g.elements().iter().map(|s| GroupAlgebraElement::basis(s).mul(&c)).collect();
    group_rank(&elems)
}

#[test]
fn specht_bases() {
    assert_eq!(specht_basis(&part("2,1")), vec![Perm::identity(3), Perm::transposition(3, 1, 2)]);
    assert_eq!(specht_basis(&part("3")), vec![Perm::identity(3)]);
    assert_eq!(specht_basis(&part("2,2")).len(), 2);
    for lam in ["2,1", "3", "2,2", "3,1"] {
        let lam = part(lam);
        let c = young_idempotent(&lam);
        let basis: Vec<GroupAlgebraElement> =
            specht_basis(&lam).iter().map(|s| GroupAlgebraElement::basis(s).mul(&c)).collect();
        assert_eq!(group_rank(&basis), span_dim(&lam), "({lam})");
    }
}

#[test]
fn hook_dimensions_match_left_ideal_rank() {
    for r in 1..=5 {
        for lam in Partition::all(r) {
            assert_eq!(lam.hook_dimension(), span_dim(&lam), "({lam})");
        }
    }
    assert_eq!(part("3,1").hook_dimension(), 3);
    assert_eq!(part("2,1").hook_dimension(), 2);
}

#[test]
fn scalar_extraction() {
    let lam = part("2,1");
    let c = young_idempotent(&lam);
    assert_eq!(scalar_extract(&lam, &c).unwrap(), rat(1));
    assert_eq!(scalar_extract(&lam, &GroupAlgebraElement::zero(3)).unwrap(), rat(0));
    let z = c.mul(&GroupAlgebraElement::basis(&Perm::transposition(3, 0, 1))).mul(&c);
    // proportionality read off coefficient by coefficient
    let (i, lead) = c.dense().iter().enumerate().find(|(_, x)| !x.is_zero()).unwrap();
    let s = &z.dense()[i] / lead;
    assert_eq!(z, c.scale(&s));
    assert_eq!(scalar_extract(&lam, &z).unwrap(), s);
    assert!(scalar_extract(&lam, &GroupAlgebraElement::identity(3)).is_err());
}

// --- Gram matrices ---------------------------------------------------------

#[test]
fn mixed_l1_matrix() {
    let label = ModuleLabel::new(1, 5, 3, part("2,1")).unwrap();
    let g = gram_matrix(&label).unwrap();
    assert_eq!(g.matrix.rows(), 14);
    let want = p("(a-2)^3 a (a+2)(a+4)(a^4-7a^2+3)^2");
    assert!(det_proportional(&g.matrix, &want));
    assert_eq!(gram_det(&label).unwrap(), want);
    assert_eq!(mixed_det(1, &part("2,1"), &[5, 5]).unwrap(), want);
}

#[test]
fn head_gram_is_constant_specht_form() {
    for (l, lam) in [(1, "2,1"), (2, "3,1"), (0, "1,1")] {
        let lam = part(lam);
        let n = lam.size();
        let g = gram_matrix(&ModuleLabel::new(l, n, n, lam.clone()).unwrap()).unwrap();
        assert_eq!(g.matrix.rows(), lam.hook_dimension());
        for i in 0..g.matrix.rows() {
            for j in 0..g.matrix.rows() {
                assert!(g.matrix.get(i, j).deg() <= 0);
            }
        }
        assert!(!det_at(&g.matrix, 0).is_zero());
    }
}

#[test]
fn temperley_lieb_n4() {
    let label = ModuleLabel::new(-1, 4, 0, Partition::empty()).unwrap();
    let g = gram_matrix(&label).unwrap();
    let mut entries: Vec<String> = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| g.matrix.get(i, j).to_string()).collect();
    entries.sort();
    let mut want: Vec<String> = ["a^2", "a^2", "a", "a"].iter().map(|s| p(s).to_string()).collect();
    want.sort();
    assert_eq!(entries, want);
    assert_eq!(gram_det(&label).unwrap(), p("a^2(a^2-1)"));
}

#[test]
fn small_determinants() {
    for (l, n, pp, lam, want) in [
        (0, 4, 2, "2", "(a-1)a(a^2+a-4)"),
        (1, 5, 3, "1,1,1", "(a-3)(a-2)^2(a+1)(a+2)^3"),
        (0, 5, 3, "1,1", "(a-1)(a+2)(a^3-a^2-3a+1)"),
    ] {
        let label = ModuleLabel::new(l, n, pp, part(lam)).unwrap();
        let g = gram_matrix(&label).unwrap();
        assert!(det_proportional(&g.matrix, &p(want)), "{label:?}");
        assert_eq!(gram_det(&label).unwrap(), p(want));
    }
}

#[test]
fn factorisation_examples() {
    let f = factor_one_cup(1, &part("2,1")).unwrap();
    assert_eq!((f.c.clone(), f.p.term(5), f.p.term(6)), (p("(a-2)^3 a (a+2)(a+4)"), p("a^4-7a^2+3"), p("(a-1)a(a+1)(a^2-7)")));
    assert_eq!(factor_one_cup(2, &part("2,2")).unwrap().c, p("(a-3)^3(a-1)^6(a+1)^3(a+4)^4"));
    let f = factor_one_cup(0, &part("2")).unwrap();
    assert_eq!((f.c, f.p.term(4)), (p("a-1"), p("a(a^2+a-4)")));
}

/// `(l+1,1)^T` at l = 1, 2: C and the U-expansion of P as closed forms in l.
#[test]
fn transposed_hook_family() {
    let lin = |c: i64| &Poly::x() + &Poly::from_int(c);
    for l in 1..=2i64 {
        let e = |x: i64| x as u32;
        let want_c = [
            (lin(4), e(l * (l + 1) * (l + 2) / 6)),
            (lin(2), e(l * (l + 1) / 2)),
            (lin(1), e((l - 1) * (l + 1) * (l + 3) / 3)),
            (lin(-(l - 1)), e(l * (l + 1) / 2)),
            (lin(-(l + 1)), e((l + 1) * (l + 2) / 2)),
        ]
        .iter()
        .fold(Poly::one(), |acc, (f, k)| &acc * &f.pow(*k));
        let mut parts = vec![1; l as usize + 1];
        parts[0] = 2;
        let f = factor_one_cup(l, &Partition::new(parts)).unwrap();
        assert_eq!(f.c, want_c, "l={l}");
        let coeffs = [1, -2 * (l - 1), l * (l - 5), 3 * l * (l - 1), 2 * (l * l - 2 * l - 1), l * (l - 1), -(l + 1)];
        let want: std::collections::BTreeMap<i64, Rational> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(j, c)| (l - 1 + j as i64, rat(*c)))
            .collect();
        assert_eq!(f.p.u_expansion().unwrap().shifts(), want, "l={l}");
    }
}

// --- Rollet graphs ---------------------------------------------------------

#[test]
fn walk_dimensions() {
    assert_eq!(dimension(0, 7, &Vertex::new(1, part("1"))).unwrap(), 43);
    assert_eq!(dimension(1, 5, &Vertex::new(3, part("2,1"))).unwrap(), 14);
    for (l, lam) in [(0, "2"), (1, "2,1"), (2, "2,2"), (2, "3,1")] {
        let lam = part(lam);
        let n = lam.size();
        assert_eq!(dimension(l, n, &Vertex::new(n, lam.clone())).unwrap(), lam.hook_dimension() as u128);
    }
    for (l, n, pp, lam) in [(0, 7, 1, "1"), (1, 5, 3, "2,1"), (2, 8, 4, "3,1")] {
        let label = ModuleLabel::new(l, n, pp, part(lam)).unwrap();
        assert_eq!(dimension(l, n, &Vertex::new(pp, part(lam))).unwrap(), module_dim(&label).unwrap() as u128);
    }
    assert_eq!(dimension(0, 6, &Vertex::new(1, part("1"))).unwrap(), 0);
}

#[test]
fn marginal_vertex_examples() {
    let v = marginal_v(0, &Vertex::new(3, part("2")), 5).unwrap();
    assert_eq!(v.monic_parts(), (p("a^4+a^3-5a^2-a+2"), p("a(a^2+a-4)")));
    let v = marginal_v(1, &Vertex::new(3, part("1,1,1")), 7).unwrap();
    assert_eq!(v.monic_parts(), (p("(a-3)^8(a+1)^8"), p("(a-2)^8")));
}

/// For l = −1 the vertex function is `([p+2]/[p+1])^{dim Δ^{n−1}_{p+1}}`.
#[test]
fn temperley_lieb_vertex_functions() {
    for n in 2..=9usize {
        for pp in (n % 2..n).step_by(2) {
            let lam = if pp == 0 { Partition::empty() } else { part("1") };
            let v = marginal_v(-1, &Vertex::new(pp, lam), n).unwrap();
            let e = module_dim(&ModuleLabel::new(-1, n - 1, pp + 1, part("1")).unwrap()).unwrap() as u32;
            let num = quantum_number(pp as i64 + 2).pow(e);
            let den = quantum_number(pp as i64 + 1).pow(e);
            let want = kyalg::exactmath::RatFunc::new(num, den).unwrap();
            assert_eq!(v.monic_parts(), want.monic_parts(), "n={n} p={pp}");
        }
    }
}

#[test]
fn chebyshev_c_on_arms() {
    for l in 0..=1i64 {
        for lam in Partition::all((l + 2) as usize) {
            for pp in (l + 3) as usize..=(l + 5) as usize {
                let v = Vertex::new(pp, lam.clone());
                let a = marginal_v(l, &v, pp + 2).unwrap();
                let c = chebyshev_c(l, &v, pp + 2).unwrap();
                assert_eq!(a.monic_parts(), c.monic_parts(), "l={l} {v}");
            }
        }
    }
    assert!(arm_verify(0, &part("2"), &[2, 3, 4, 5, 6, 7, 8], &[2]).unwrap().iter().all(|c| c.holds));
}

/// Head residuals `𝒞/𝒱` one step off the arm at l = 1.
#[test]
fn l1_head_residuals() {
    let c = arm_check(1, &Vertex::new(2, part("2")), 6).unwrap();
    assert!(!c.holds);
    assert_eq!(c.residual.monic_parts(), (p("(a+2)^14"), p("(a+1)^14")));
    let c = arm_check(1, &Vertex::new(2, part("1,1")), 6).unwrap();
    assert_eq!(c.residual.monic_parts(), (p("a^14"), p("(a+1)^14")));
}

#[test]
fn temperley_lieb_recursive_determinants() {
    assert_eq!(tl_recursive_det(6, 0).unwrap().monic(), p("a^5(a^2-1)^4(a^2-2)"));
    let want = &(&quantum_number(4) * &quantum_number(3).pow(4)).exact_div(&quantum_number(2)).unwrap();
    assert_eq!(tl_recursive_det(5, 1).unwrap().monic(), want.monic());
    for n in 0..8 {
        assert_eq!(tl_recursive_det(n, n).unwrap(), Poly::one());
    }
}

#[test]
fn topology_only_export() {
    let g = RolletGraph::new(0, 3).unwrap();
    let dot = g.to_dot();
    assert!(dot.starts_with("graph rollet_l0"));
    assert_eq!(dot.matches(" -- ").count(), g.edges().len());
    assert!(!dot.contains('α'));
}

// --- roots -----------------------------------------------------------------

#[test]
fn isolating_intervals() {
    let iv = sturm_isolate(&p("a^2-4"));
    assert_eq!(iv.len(), 2);
    for (r, i) in [(-2, &iv[0]), (2, &iv[1])] {
        assert!(i.lo < rat(r) && rat(r) <= i.hi);
    }
    let q = p("(a+1)(a-3)");
    assert_eq!(count_roots(&q, None, None), 2);
    assert_eq!(count_roots(&q, Some(&rat(2)), None), 1);
}

#[test]
fn l1_mixed_series_roots() {
    let f = factor_one_cup(1, &part("2,1")).unwrap();
    let p7 = f.p.term(7);
    assert_eq!(count_roots(&p7, None, None), 6);
    assert_eq!(grid_roots(&p7, -10.0, 10.0), 6);
    for n in 5..=12 {
        assert!(squarefree_check(&f.p.term(n)), "n={n}");
    }
    for n in 5..=10 {
        let q = f.p.term(n);
        assert_eq!(count_roots_closed(&q, &rat(-2), &rat(2)), (n - 3) as usize, "n={n}");
        assert_eq!(grid_roots(&q, -2.0, 2.0), (n - 3) as usize, "n={n}");
    }
    assert!(!squarefree_check(&p("(a-1)^2")));
    assert!(!squarefree_check(&f.c));
}

#[test]
fn spacing_identity() {
    let check = |s: &ChebSeries, k: i64, k2: i64, r: i64| {
        let x = 2.0 * (r as f64 * std::f64::consts::PI / (k + k2) as f64).cos();
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        let lhs = eval_f64(&s.term(s.anchor + k), x);
        let rhs = sign * eval_f64(&s.term(s.anchor - k2), x);
        assert!((lhs - rhs).abs() < 1e-6 * (1.0 + lhs.abs()), "k={k} k′={k2} r={r}");
        assert!(lemma_roots_check(s, k, k2, r).unwrap());
    };
    let cl = ChebSeries::classical();
    for k in 1..4 {
        for k2 in 1..4 {
            for r in 1..k + k2 {
                check(&cl, k, k2, r);
            }
        }
    }
    check(&factor_one_cup(0, &part("1,1")).unwrap().p, 2, 2, 1);
    check(&factor_one_cup(1, &part("2,1")).unwrap().p, 3, 1, 2);
}

// --- bootstrap -------------------------------------------------------------

#[test]
fn divisibility_examples() {
    for n in 5..=7 {
        assert!(divisibility_check(1, &part("2,1"), n).unwrap());
    }
    for n in 4..=5 {
        assert!(divisibility_check(0, &part("1,1"), n).unwrap());
    }
    let rows = xi_chain(0, &part("2"), 4).unwrap();
    assert!(rows[0].p_divides_d);
    assert_eq!(rows[0].quotient.as_ref().unwrap().deg(), 0);
}

#[test]
fn l1_quartic_embedding_has_specht_dimension() {
    let r = submodule_verify(1, &part("2,1"), 5, &AlphaSpec::Minpoly(p("a^4-7a^2+3"))).unwrap();
    assert!(r.embedding);
    assert_eq!(r.rank_deficiency, part("2,1").hook_dimension());
}

#[test]
fn l0_gram_entries_are_signed_monomials() {
    let g = gram_matrix(&ModuleLabel::new(0, 6, 2, part("2")).unwrap()).unwrap();
    for i in 0..g.matrix.rows() {
        for j in 0..g.matrix.rows() {
            let e = g.matrix.get(i, j);
            let nonzero: Vec<Rational> = (0..=e.deg().max(0) as usize).map(|k| e.coeff(k)).filter(|c| !c.is_zero()).collect();
            assert!(nonzero.len() <= 1 && nonzero.iter().all(|c| c.abs() == rat(1)), "entry ({i},{j}) = {e}");
        }
    }
}
