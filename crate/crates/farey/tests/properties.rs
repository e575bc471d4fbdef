//! Property suites: the generator against its mediant-insertion oracle,
//! the number-theoretic identities of the sequence and table, and
//! randomized agreement of the search algorithms.

use proptest::prelude::*;

use farey::bench::trial_key;
use farey::geometry::{approximate_polygon, ApproxConfig, DigitalContour, GridPoint};
use farey::search::{closest_binary, closest_bruteforce, closest_regula_falsi, SearchKey};
use farey::{sequence_size, DirectionTable, FareySequence, FareyTable, Fraction};

/// Independent oracle: iterative mediant insertion, order by order.
/// O(n * f_max), used only to cross-check the fast generator.
fn mediant_insertion(order: u64) -> Vec<Fraction> {
    let mut seq = vec![Fraction::ZERO, Fraction::ONE];
    for n in 2..=order {
        let mut next = Vec::with_capacity(seq.len() * 2);
        for window in seq.windows(2) {
            next.push(window[0]);
            let m = Fraction::mediant(window[0], window[1]);
            if m.den() == n {
                next.push(m);
            }
        }
        next.push(*seq.last().unwrap());
        seq = next;
    }
    seq
}

#[test]
fn generator_matches_mediant_oracle() {
    for n in 1..=50 {
        let fast = FareySequence::generate(n).unwrap();
        assert_eq!(fast.fractions(), mediant_insertion(n), "order {n}");
    }
}

#[test]
fn sieve_size_matches_generation() {
    for n in 1..=500 {
        assert_eq!(
            sequence_size(n).unwrap(),
            FareySequence::generate(n).unwrap().f_max(),
            "order {n}"
        );
    }
}

#[test]
fn neighbor_identity() {
    // For consecutive a/b, c/d: bc - ad = 1 and b + d >= n + 1.
    for n in 1..=100 {
        let seq = FareySequence::generate(n).unwrap();
        for w in seq.fractions().windows(2) {
            let (a, b) = (w[0].num(), w[0].den());
            let (c, d) = (w[1].num(), w[1].den());
            assert_eq!(b * c - a * d, 1, "neighbors {}/{} {}/{} at {n}", a, b, c, d);
            assert!(b + d >= n + 1, "denominator sum at order {n}");
        }
    }
}

#[test]
fn interior_fractions_are_neighbor_mediants() {
    for n in 1..=100 {
        let seq = FareySequence::generate(n).unwrap();
        for w in seq.fractions().windows(3) {
            assert_eq!(Fraction::mediant(w[0], w[2]), w[1], "order {n}");
        }
    }
}

#[test]
fn asymptotic_density() {
    // | f_max / n^2 - 0.304 | <= 0.01 at n = 400, checked in integers:
    // |1000 f_max - 304 n^2| <= 10 n^2.
    let n = 400u64;
    let f_max = sequence_size(n).unwrap();
    let lhs = (1000 * f_max).abs_diff(304 * n * n);
    assert!(lhs <= 10 * n * n, "density off: f_max = {f_max}");
}

#[test]
fn approximation_bound() {
    // There is always a nearby a/b in F_n with |x - a/b| <= 1/(b(n+1)),
    // i.e. |p b - a q| (n+1) <= q for key x = p/q, exactly. This is an
    // existence bound: one of the two members bracketing the key
    // satisfies it with its own denominator (not always the closer one).
    use rand::{Rng, SeedableRng};
    for n in [50u64, 99] {
        let seq = FareySequence::generate(n).unwrap();
        let table = FareyTable::build(&seq).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xFA12 + n);
        for _ in 0..1000u64 {
            let q = rng.random_range(n + 1..=1_000_000);
            let p = rng.random_range(0..=q);
            let key = SearchKey::new(p, q).unwrap();
            let best = closest_regula_falsi(&seq, &table, key);
            let mut candidates = vec![best.closest];
            for r in [best.rank.saturating_sub(1), best.rank + 1] {
                if let Ok(f) = seq.fraction_at_rank(r) {
                    candidates.push(f);
                }
            }
            // |p/q - a/b| <= 1/(b(n+1))  <=>  |p b - a q| (n+1) <= q
            let witness = candidates.iter().any(|f| {
                let err = (key.p() as i128 * f.den() as i128
                    - f.num() as i128 * key.q() as i128)
                    .unsigned_abs();
                err * (n as u128 + 1) <= key.q() as u128
            });
            assert!(witness, "bound fails at n={n}, key {}/{}", key.p(), key.q());
        }
    }
}

#[test]
fn table_sequence_bijection() {
    for n in 1..=100 {
        let seq = FareySequence::generate(n).unwrap();
        let table = FareyTable::build(&seq).unwrap();
        for (idx0, f) in seq.fractions().iter().enumerate() {
            let rank = table.rank_of(f.num(), f.den()).unwrap();
            assert_eq!(rank, idx0 as u64 + 1);
            assert_eq!(seq.fraction_at_rank(rank).unwrap(), *f);
        }
    }
}

#[test]
fn table_properties_up_to_100() {
    for n in 1..=100 {
        let table = FareyTable::build(&FareySequence::generate(n).unwrap()).unwrap();
        let report = table.check_properties();
        assert!(report.all_hold(), "order {n}: {:?}", report.violations);
    }
}

#[test]
fn bracket_width_is_linear() {
    use farey::search::bracket_range;
    for n in [50u64, 100, 200] {
        let table = FareyTable::build(&FareySequence::generate(n).unwrap()).unwrap();
        for trial in 0..500u64 {
            let key = trial_key(0xB0B, n, trial);
            let (range, _, _) = bracket_range(&table, key);
            assert!(range.f2 - range.f1 <= 2 * n, "width at n={n}");
        }
    }
}

#[test]
fn iteration_bounds() {
    use farey::search::bracket_range;
    for n in [20u64, 55, 99] {
        let seq = FareySequence::generate(n).unwrap();
        let table = FareyTable::build(&seq).unwrap();
        let mut regula_not_worse = 0u32;
        let trials = 500u64;
        for trial in 0..trials {
            let key = trial_key(0x17E2, n, trial);
            let (range, _, _) = bracket_range(&table, key);
            let width = range.f2 - range.f1 + 1;
            let bin = closest_binary(&seq, &table, key);
            assert!(
                bin.iterations as u64 <= width.ilog2() as u64 + 2,
                "binary iterations at n={n}"
            );
            let reg = closest_regula_falsi(&seq, &table, key);
            if reg.iterations <= bin.iterations {
                regula_not_worse += 1;
            }
        }
        assert!(
            regula_not_worse as u64 * 10 >= trials * 9,
            "regula worse than binary too often at n={n}: {regula_not_worse}/{trials}"
        );
    }
}

proptest! {
    #[test]
    fn construction_reduces(p in 0u64..1_000_000, q in 1u64..1_000_000) {
        let f = Fraction::new(p, q).unwrap();
        prop_assert_eq!(p as u128 * f.den() as u128, f.num() as u128 * q as u128);
        let mut a = f.num();
        let mut b = f.den();
        while b != 0 { let t = a % b; a = b; b = t; }
        prop_assert_eq!(a.max(1), 1); // gcd(num, den) = 1 (0/1 included)
    }

    #[test]
    fn searches_agree_with_oracle(n in 2u64..40, p in 0u64..10_000, q in 1u64..10_000) {
        let (p, q) = (p.min(q), p.max(q).max(1));
        let seq = FareySequence::generate(n).unwrap();
        let table = FareyTable::build(&seq).unwrap();
        let key = SearchKey::new(p, q).unwrap();
        let oracle = closest_bruteforce(&seq, key);
        let bin = closest_binary(&seq, &table, key);
        let reg = closest_regula_falsi(&seq, &table, key);
        prop_assert_eq!(bin.closest, oracle.closest);
        prop_assert_eq!(reg.closest, oracle.closest);
        prop_assert_eq!(bin.rank, oracle.rank);
        prop_assert_eq!(reg.rank, oracle.rank);
    }

    #[test]
    fn approximation_vertices_are_subsequence(
        steps in prop::collection::vec(0u8..8, 8..60),
        delta_f in 0u64..200,
    ) {
        // random open 8-connected walk; drop immediate backtracking
        const DIRS: [(i64, i64); 8] = [
            (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1),
        ];
        let mut pts = vec![GridPoint::new(0, 0)];
        for s in steps {
            let last = *pts.last().unwrap();
            let d = DIRS[s as usize];
            let next = GridPoint::new(last.x + d.0, last.y + d.1);
            pts.push(next);
        }
        let contour = DigitalContour::new(pts, false).unwrap();
        let dt = DirectionTable::new(20).unwrap();
        let cfg = ApproxConfig { order: 20, delta_f };
        let (poly, metrics) = approximate_polygon(&dt, &contour, cfg).unwrap();
        // vertices form an ordered subsequence with endpoints preserved
        prop_assert_eq!(poly.vertices[0], contour.points()[0]);
        prop_assert_eq!(*poly.vertices.last().unwrap(), *contour.points().last().unwrap());
        let mut cursor = 0usize;
        for v in &poly.vertices {
            while cursor < contour.points().len() && contour.points()[cursor] != *v {
                cursor += 1;
            }
            prop_assert!(cursor < contour.points().len());
            cursor += 1;
        }
        prop_assert!(metrics.vertex_count >= 2);
        // determinism
        let (again, _) = approximate_polygon(&dt, &contour, cfg).unwrap();
        prop_assert_eq!(poly, again);
    }
}
