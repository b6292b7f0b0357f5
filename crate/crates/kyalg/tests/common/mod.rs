//! Strategies and property bodies shared by the proptest suite and the
//! acceptance runner.

#![allow(dead_code)]

use kyalg::cache::Cache;
use kyalg::diagrams::PairPartition;
use kyalg::exactmath::{
    det_bareiss_poly, det_cofactor, det_modular, det_poly, parse_poly, rat_from_str, rat_to_string, smith_invariants,
    Poly, PolyMatrix, Rational,
};
use kyalg::symmetric::{young_idempotent, Partition};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub type Check = Result<(), TestCaseError>;

/// Fixed seed for every property run.
pub const SEED: u64 = 0x6b79_616c_67;

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() }
}

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(config(cases))
}

/// Uniformly random perfect matching on `n_top + n_bot` points.
pub fn diagram(n_top: usize, n_bot: usize) -> BoxedStrategy<PairPartition> {
    Just((0..n_top + n_bot).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |v| {
            let pairs: Vec<(usize, usize)> = v.chunks(2).map(|c| (c[0], c[1])).collect();
            PairPartition::from_pairs(n_top, n_bot, &pairs).unwrap()
        })
        .boxed()
}

/// Rank with a given parity, at most 5.
fn rank(par: usize) -> impl Strategy<Value = usize> {
    (0usize..=2).prop_map(move |s| 2 * s + par)
}

pub fn any_diagram() -> BoxedStrategy<PairPartition> {
    (0usize..=1).prop_flat_map(|par| (rank(par), rank(par))).prop_flat_map(|(a, b)| diagram(a, b)).boxed()
}

/// Two diagrams `a: n0 → n1`, `b: n1 → n2`.
pub fn composable_pair() -> BoxedStrategy<(PairPartition, PairPartition)> {
    (0usize..=1)
        .prop_flat_map(|par| (rank(par), rank(par), rank(par)))
        .prop_flat_map(|(a, b, c)| (diagram(a, b), diagram(b, c)))
        .boxed()
}

pub fn composable_triple() -> BoxedStrategy<(PairPartition, PairPartition, PairPartition)> {
    (0usize..=1)
        .prop_flat_map(|par| (rank(par), rank(par), rank(par), rank(par)))
        .prop_flat_map(|(a, b, c, d)| (diagram(a, b), diagram(b, c), diagram(c, d)))
        .boxed()
}

pub fn partition() -> BoxedStrategy<Partition> {
    (1usize..=5)
        .prop_flat_map(|r| {
            let all = Partition::all(r);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
        .boxed()
}

pub fn poly(max_deg: usize) -> BoxedStrategy<Poly> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| Poly::from_ints(&c)).boxed()
}

pub fn rational() -> BoxedStrategy<Rational> {
    (-1000i64..=1000, 1i64..=97).prop_map(|(n, d)| Rational::new(n.into(), d.into())).boxed()
}

pub fn poly_matrix(max_size: usize) -> BoxedStrategy<PolyMatrix> {
    (1usize..=max_size)
        .prop_flat_map(|s| prop::collection::vec(prop::collection::vec(poly(2), s), s))
        .prop_map(|rows| PolyMatrix::from_rows(rows).unwrap())
        .boxed()
}

pub fn flip_involution(d: &PairPartition) -> Check {
    prop_assert_eq!(&d.flip().flip(), d);
    prop_assert_eq!(d.flip().propagating(), d.propagating());
    Ok(())
}

/// `(a ∘ b)* = b* ∘ a*` with the same loop count.
pub fn flip_antihomomorphism(a: &PairPartition, b: &PairPartition) -> Check {
    let (ab, k) = a.compose(b).unwrap();
    let (ba, k2) = b.flip().compose(&a.flip()).unwrap();
    prop_assert_eq!(ab.flip(), ba);
    prop_assert_eq!(k, k2);
    Ok(())
}

/// `(a ∘ b) ∘ c = a ∘ (b ∘ c)` and the loops add up to the same total.
pub fn associativity(a: &PairPartition, b: &PairPartition, c: &PairPartition) -> Check {
    let (ab, k1) = a.compose(b).unwrap();
    let (abc, k2) = ab.compose(c).unwrap();
    let (bc, k3) = b.compose(c).unwrap();
    let (abc2, k4) = a.compose(&bc).unwrap();
    prop_assert_eq!(abc, abc2);
    prop_assert_eq!(k1 + k2, k3 + k4);
    Ok(())
}

pub fn identity_is_neutral(d: &PairPartition) -> Check {
    let (x, k) = PairPartition::identity(d.n_top()).compose(d).unwrap();
    prop_assert_eq!((&x, k), (d, 0));
    let (y, k) = d.compose(&PairPartition::identity(d.n_bot())).unwrap();
    prop_assert_eq!((&y, k), (d, 0));
    Ok(())
}

/// `C_λ² = C_λ` and `C_λ* = C_λ`.
pub fn idempotent_is_selfadjoint_projection(lambda: &Partition) -> Check {
    let c = young_idempotent(lambda);
    prop_assert!(c.mul(&c) == c, "C_λ² ≠ C_λ for ({})", lambda);
    prop_assert!(c.star() == c, "C_λ* ≠ C_λ for ({})", lambda);
    Ok(())
}

/// Interpolation, fraction-free elimination, modular CRT and cofactor
/// expansion agree.
pub fn det_oracles_agree(m: &PolyMatrix) -> Check {
    let reference = det_cofactor(m).unwrap();
    prop_assert_eq!(&det_poly(m).unwrap(), &reference, "interpolation");
    prop_assert_eq!(&det_bareiss_poly(m).unwrap(), &reference, "fraction-free");
    prop_assert_eq!(&det_modular(m).unwrap(), &reference, "modular");
    Ok(())
}

pub fn smith_product_is_det(m: &PolyMatrix) -> Check {
    let det = det_bareiss_poly(m).unwrap();
    let inv = smith_invariants(m).unwrap();
    prop_assert_eq!(inv.len(), m.rows());
    if det.is_zero() {
        prop_assert!(inv.iter().any(|p| p.is_zero()));
    } else {
        let prod = inv.iter().fold(Poly::one(), |acc, x| &acc * x);
        prop_assert_eq!(prod, det.monic());
        for w in inv.windows(2) {
            prop_assert!(w[0].divides(&w[1]), "invariant factors must divide successively");
        }
    }
    Ok(())
}

pub fn poly_round_trips(p: &Poly, d: &Poly) -> Check {
    prop_assert_eq!(&parse_poly(&p.to_string()).unwrap(), p);
    let json = serde_json::to_string(p).unwrap();
    prop_assert_eq!(&serde_json::from_str::<Poly>(&json).unwrap(), p);
    if !d.is_zero() {
        let (q, r) = p.div_rem(d).unwrap();
        prop_assert_eq!(&(&(&q * d) + &r), p);
        prop_assert!(r.is_zero() || r.deg() < d.deg());
    }
    Ok(())
}

pub fn rational_round_trips(q: &Rational) -> Check {
    prop_assert_eq!(&rat_from_str(&rat_to_string(q)).unwrap(), q);
    Ok(())
}

/// Two caches over one directory, one after the other, return the same
/// payload and leave byte-identical records.
pub fn cache_is_deterministic(key: &str, payload: &Poly) -> Check {
    let dir = tempfile::tempdir().unwrap();
    let a = Cache::new(dir.path());
    let (x, _) = a.get_or_put::<Poly, ()>(key, || Ok(payload.clone())).unwrap();
    let path = a.path_for(key).unwrap();
    let first = std::fs::read(&path).unwrap();
    let b = Cache::new(dir.path());
    let (y, status) = b.get_or_put::<Poly, ()>(key, || Ok(Poly::zero())).unwrap();
    prop_assert_eq!(status, kyalg::cache::CacheStatus::Hit);
    prop_assert_eq!(&x, &y);
    prop_assert_eq!(&x, payload);
    b.put(key, &serde_json::to_value(&y).unwrap()).unwrap();
    prop_assert_eq!(first, std::fs::read(&path).unwrap());
    Ok(())
}

pub fn cache_key() -> BoxedStrategy<String> {
    "[a-z0-9_]{1,12}".boxed()
}

/// Run every property with the fixed seed; returns one line per failure.
pub fn run_all(cases: u32) -> Vec<String> {
    let mut failures = Vec::new();
    macro_rules! check {
        ($name:expr, $strategy:expr, $body:expr) => {
            if let Err(e) = runner(cases).run(&$strategy, $body) {
                failures.push(format!("{}: {}", $name, e));
            }
        };
    }
    check!("flip involution", any_diagram(), |d| flip_involution(&d));
    check!("flip antihomomorphism", composable_pair(), |(a, b)| flip_antihomomorphism(&a, &b));
    check!("associativity", composable_triple(), |(a, b, c)| associativity(&a, &b, &c));
    check!("identity", any_diagram(), |d| identity_is_neutral(&d));
    check!("C_λ projection", partition(), |l| idempotent_is_selfadjoint_projection(&l));
    check!("determinant routes", poly_matrix(8), |m| det_oracles_agree(&m));
    check!("Smith product", poly_matrix(5), |m| smith_product_is_det(&m));
    check!("polynomial round trips", (poly(6), poly(3)), |(p, d)| poly_round_trips(&p, &d));
    check!("rational round trips", rational(), |q| rational_round_trips(&q));
    check!("cache determinism", (cache_key(), poly(5)), |(k, p)| cache_is_deterministic(&k, &p));
    failures
}
