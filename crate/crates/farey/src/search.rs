//! Closest-fraction queries: given an arbitrary proper fraction p/q
//! (q unbounded by the order), find the member of F_n nearest to it.
//!
//! Both the binary search and the false-position search bracket the key
//! between floor(pn/q)/n and ceil(pn/q)/n, then close in on the
//! zero-crossing of the signed difference (member - key), which is
//! strictly increasing with rank. Every comparison is an integer cross
//! product.

use crate::error::Error;
use crate::fraction::Fraction;
use crate::sequence::FareySequence;
use crate::table::FareyTable;

/// A proper fraction to search for; not necessarily reduced, and its
/// denominator may far exceed the table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchKey {
    p: u64,
    q: u64,
}

impl SearchKey {
    pub fn new(p: u64, q: u64) -> Result<SearchKey, Error> {
        if q == 0 {
            return Err(Error::InvalidDenominator);
        }
        if p > q {
            return Err(Error::ImproperFraction { num: p, den: q });
        }
        Ok(SearchKey { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// Inclusive rank bracket [f1, f2] around a key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankRange {
    pub f1: u64,
    pub f2: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Binary,
    RegulaFalsi,
    Brute,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Binary => "binary",
            Algorithm::RegulaFalsi => "regula",
            Algorithm::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchResult {
    pub closest: Fraction,
    pub rank: u64,
    pub iterations: u32,
    pub algorithm: Algorithm,
}

/// Orders key vs member without materializing the difference.
fn key_cmp(key: SearchKey, f: Fraction) -> std::cmp::Ordering {
    (key.p as u128 * f.den() as u128).cmp(&(f.num() as u128 * key.q as u128))
}

/// Signed numerator of (f - key) over the common denominator q * f.den.
fn diff_numerator(key: SearchKey, f: Fraction) -> i128 {
    f.num() as i128 * key.q as i128 - key.p as i128 * f.den() as i128
}

/// true when |key - a| < |key - b|. Distances share the factor 1/q, so
/// the comparison is |n_a| * b.den vs |n_b| * a.den.
fn strictly_closer(key: SearchKey, a: Fraction, b: Fraction) -> bool {
    let na = diff_numerator(key, a).unsigned_abs();
    let nb = diff_numerator(key, b).unsigned_abs();
    na * (b.den() as u128) < nb * (a.den() as u128)
}

/// Picks the nearer of two bracketing members; exact ties go to the
/// larger fraction.
fn resolve_pair(
    key: SearchKey,
    lower: (Fraction, u64),
    upper: (Fraction, u64),
    iterations: u32,
    algorithm: Algorithm,
) -> SearchResult {
    let (closest, rank) = if strictly_closer(key, lower.0, upper.0) {
        lower
    } else {
        upper
    };
    SearchResult {
        closest,
        rank,
        iterations,
        algorithm,
    }
}

/// The rank bracket [f1, f2] with f1 = rank(floor(pn/q)/n) and
/// f2 = rank(ceil(pn/q)/n); lower <= key <= upper exactly.
pub fn bracket_range(
    table: &FareyTable,
    key: SearchKey,
) -> (RankRange, Fraction, Fraction) {
    let n = table.order();
    let scaled = key.p as u128 * n as u128;
    let lo = (scaled / key.q as u128) as u64;
    let hi = scaled.div_ceil(key.q as u128) as u64;
    let lower = Fraction::new(lo, n).expect("order >= 1");
    let upper = Fraction::new(hi, n).expect("order >= 1");
    let f1 = table.rank_of(lower.num(), lower.den()).expect("bracket in table");
    let f2 = table.rank_of(upper.num(), upper.den()).expect("bracket in table");
    (RankRange { f1, f2 }, lower, upper)
}

/// Binary search over ranks for the zero-crossing. Iterations count
/// midpoint probes; an exact bracket collapse costs none.
pub fn closest_binary(seq: &FareySequence, table: &FareyTable, key: SearchKey) -> SearchResult {
    let (range, lower, upper) = bracket_range(table, key);
    let (mut f1, mut f2) = (range.f1, range.f2);
    if f1 == f2 {
        return SearchResult {
            closest: lower,
            rank: f1,
            iterations: 0,
            algorithm: Algorithm::Binary,
        };
    }
    let mut iterations = 0;
    let (mut lo_frac, mut hi_frac) = (lower, upper);
    while f2 - f1 > 1 {
        iterations += 1;
        let mid = f1 + (f2 - f1) / 2;
        let probe = seq.fraction_at_rank(mid).expect("mid in range");
        if key_cmp(key, probe).is_lt() {
            f2 = mid;
            hi_frac = probe;
        } else {
            f1 = mid;
            lo_frac = probe;
        }
    }
    resolve_pair(key, (lo_frac, f1), (hi_frac, f2), iterations, Algorithm::Binary)
}

/// False-position search (FindClosestFast). Each iteration probes the
/// rank interpolated from the two signed differences
/// y1 = (p1 q - q1 p)/(q1 q) and y2 = (p2 q - q2 p)/(q2 q); the common
/// positive factor 1/q cancels, leaving
/// x = floor((f1 N2 q1 - f2 N1 q2) / (N2 q1 - N1 q2)) in pure integer
/// arithmetic. The probe is clamped to (f1, f2) so the bracket shrinks
/// every round.
pub fn closest_regula_falsi(
    seq: &FareySequence,
    table: &FareyTable,
    key: SearchKey,
) -> SearchResult {
    let (range, lower, upper) = bracket_range(table, key);
    let (mut f1, mut f2) = (range.f1, range.f2);
    if f1 == f2 {
        return SearchResult {
            closest: lower,
            rank: f1,
            iterations: 0,
            algorithm: Algorithm::RegulaFalsi,
        };
    }
    let (mut a, mut b) = (lower, upper);
    let mut iterations = 0;
    loop {
        if f2 - f1 == 1 {
            return resolve_pair(key, (a, f1), (b, f2), iterations, Algorithm::RegulaFalsi);
        }
        iterations += 1;
        // interpolated zero-crossing rank
        let n1 = diff_numerator(key, a); // <= 0
        let n2 = diff_numerator(key, b); // >= 0
        let q1 = a.den() as i128;
        let q2 = b.den() as i128;
        let den = n2 * q1 - n1 * q2;
        debug_assert!(den > 0);
        let num = f1 as i128 * n2 * q1 - f2 as i128 * n1 * q2;
        let x = (num / den) as u64;
        let x = x.clamp(f1 + 1, f2 - 1);

        let c1 = seq.fraction_at_rank(x).expect("probe in range");
        match key_cmp(key, c1) {
            std::cmp::Ordering::Equal => {
                return SearchResult {
                    closest: c1,
                    rank: x,
                    iterations,
                    algorithm: Algorithm::RegulaFalsi,
                }
            }
            std::cmp::Ordering::Greater => {
                let c2 = seq.fraction_at_rank(x + 1).expect("probe in range");
                if key_cmp(key, c2).is_le() {
                    return resolve_pair(
                        key,
                        (c1, x),
                        (c2, x + 1),
                        iterations,
                        Algorithm::RegulaFalsi,
                    );
                }
                // key above both probes: shrink from the left
                f1 = x + 1;
                a = c2;
            }
            std::cmp::Ordering::Less => {
                let c2 = seq.fraction_at_rank(x - 1).expect("probe in range");
                if key_cmp(key, c2).is_ge() {
                    return resolve_pair(
                        key,
                        (c2, x - 1),
                        (c1, x),
                        iterations,
                        Algorithm::RegulaFalsi,
                    );
                }
                f2 = x - 1;
                b = c2;
            }
        }
    }
}

/// Linear scan over the whole sequence; the independent oracle for both
/// searches, applying the same larger-on-tie rule.
pub fn closest_bruteforce(seq: &FareySequence, key: SearchKey) -> SearchResult {
    let mut best = (seq.fractions()[0], 1u64);
    for (idx0, &f) in seq.fractions().iter().enumerate().skip(1) {
        // ascending scan: >= keeps the later (larger) member on ties
        if !strictly_closer(key, best.0, f) {
            best = (f, idx0 as u64 + 1);
        }
    }
    SearchResult {
        closest: best.0,
        rank: best.1,
        iterations: 0,
        algorithm: Algorithm::Brute,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(n: u64) -> (FareySequence, FareyTable) {
        let seq = FareySequence::generate(n).unwrap();
        let table = FareyTable::build(&seq).unwrap();
        (seq, table)
    }

    fn frac(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn key_validation() {
        assert!(SearchKey::new(3, 0).is_err());
        assert!(SearchKey::new(5, 4).is_err());
        assert!(SearchKey::new(4, 4).is_ok());
    }

    #[test]
    fn bracket_examples() {
        let (_, table) = setup(4);
        let (range, lower, upper) = bracket_range(&table, SearchKey::new(2, 5).unwrap());
        assert_eq!(lower, frac(1, 4));
        assert_eq!(upper, frac(1, 2));
        assert_eq!((range.f1, range.f2), (2, 4));

        let (range, lower, upper) = bracket_range(&table, SearchKey::new(1, 2).unwrap());
        assert_eq!((range.f1, range.f2), (4, 4));
        assert_eq!(lower, upper);
    }

    #[test]
    fn bracket_contains_example_answer() {
        let (_, table) = setup(55);
        let (range, _, _) = bracket_range(&table, SearchKey::new(341, 556).unwrap());
        let rank_27_44 = table.rank_of(27, 44).unwrap();
        assert!(range.f1 <= rank_27_44 && rank_27_44 <= range.f2);
    }

    #[test]
    fn binary_examples() {
        let (seq, table) = setup(4);
        let r = closest_binary(&seq, &table, SearchKey::new(2, 5).unwrap());
        assert_eq!(r.closest, frac(1, 3));
        assert_eq!(r.rank, 3);

        let r = closest_binary(&seq, &table, SearchKey::new(1, 2).unwrap());
        assert_eq!(r.closest, frac(1, 2));
        assert_eq!(r.rank, 4);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn worked_example_both_algorithms() {
        let (seq, table) = setup(55);
        let key = SearchKey::new(341, 556).unwrap();
        assert_eq!(closest_binary(&seq, &table, key).closest, frac(27, 44));
        assert_eq!(closest_regula_falsi(&seq, &table, key).closest, frac(27, 44));
        assert_eq!(closest_bruteforce(&seq, key).closest, frac(27, 44));
    }

    #[test]
    fn brute_examples() {
        let (seq, _) = setup(4);
        assert_eq!(
            closest_bruteforce(&seq, SearchKey::new(2, 5).unwrap()).closest,
            frac(1, 3)
        );
        assert_eq!(
            closest_bruteforce(&seq, SearchKey::new(0, 9).unwrap()).closest,
            frac(0, 1)
        );
        // 5/8 sits between 1/2 and 3/4 but 2/3 is strictly closest
        assert_eq!(
            closest_bruteforce(&seq, SearchKey::new(5, 8).unwrap()).closest,
            frac(2, 3)
        );
        // 7/12 is equidistant from neighbors 1/2 and 2/3: larger one wins
        assert_eq!(
            closest_bruteforce(&seq, SearchKey::new(7, 12).unwrap()).closest,
            frac(2, 3)
        );
    }

    #[test]
    fn tie_rule_shared_by_all() {
        let (seq, table) = setup(4);
        let key = SearchKey::new(7, 12).unwrap();
        assert_eq!(closest_binary(&seq, &table, key).closest, frac(2, 3));
        assert_eq!(closest_regula_falsi(&seq, &table, key).closest, frac(2, 3));
    }

    #[test]
    fn interpolation_symmetric_case() {
        // f1=1, f2=3, y1=-1/10, y2=+1/10 must land exactly on rank 2.
        // Recreated through the cancelled form with q1 = q2 = 1.
        let (f1, f2) = (1i128, 3i128);
        let (n1, n2) = (-1i128, 1i128);
        let x = (f1 * n2 - f2 * n1) / (n2 - n1);
        assert_eq!(x, 2);
    }

    #[test]
    fn assorted_large_keys_agree() {
        for (n, p, q) in [(75u64, 78u64, 145u64), (99, 1957, 2788), (55, 375, 448)] {
            let (seq, table) = setup(n);
            let key = SearchKey::new(p, q).unwrap();
            let oracle = closest_bruteforce(&seq, key).closest;
            assert_eq!(closest_binary(&seq, &table, key).closest, oracle);
            assert_eq!(closest_regula_falsi(&seq, &table, key).closest, oracle);
        }
    }

    #[test]
    fn members_are_fixed_points() {
        let (seq, table) = setup(20);
        for &f in seq.fractions() {
            let key = SearchKey::new(f.num(), f.den()).unwrap();
            assert_eq!(closest_binary(&seq, &table, key).closest, f);
            assert_eq!(closest_regula_falsi(&seq, &table, key).closest, f);
        }
    }
}
