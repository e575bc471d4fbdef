//! Farey sequence generation and sizing.

use crate::error::Error;
use crate::fraction::Fraction;

/// The ascending sequence F_n of irreducible proper fractions with
/// denominators up to `order`. Ranks are 1-based: rank 1 is 0/1 and
/// rank `f_max` is 1/1.
#[derive(Debug, Clone)]
pub struct FareySequence {
    order: u64,
    fractions: Vec<Fraction>,
}

impl FareySequence {
    /// Builds the complete F_n using the neighbor recurrence: given
    /// consecutive terms a/b and c/d, the next term is
    /// (kc - a)/(kd - b) with k = (order + b) / d. Runs in O(f_max)
    /// time with constant working memory beyond the output.
    pub fn generate(order: u64) -> Result<FareySequence, Error> {
        if order == 0 {
            return Err(Error::InvalidOrder(order));
        }
        let size = sequence_size(order)? as usize;
        let mut fractions = Vec::with_capacity(size);
        fractions.push(Fraction::ZERO);
        let (mut a, mut b) = (0u64, 1u64);
        let (mut c, mut d) = (1u64, order);
        loop {
            fractions.push(Fraction::new(c, d).expect("recurrence keeps d >= 1"));
            if c == d {
                break;
            }
            let k = (order + b) / d;
            let next = (k * c - a, k * d - b);
            (a, b) = (c, d);
            (c, d) = next;
        }
        debug_assert_eq!(fractions.len(), size);
        Ok(FareySequence { order, fractions })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of fractions in the sequence.
    pub fn f_max(&self) -> u64 {
        self.fractions.len() as u64
    }

    /// The fraction at 1-based rank `k`.
    pub fn fraction_at_rank(&self, k: u64) -> Result<Fraction, Error> {
        if k == 0 || k > self.f_max() {
            return Err(Error::RankOutOfRange {
                rank: k,
                f_max: self.f_max(),
            });
        }
        Ok(self.fractions[(k - 1) as usize])
    }

    pub fn fractions(&self) -> &[Fraction] {
        &self.fractions
    }
}

/// |F_n| = 1 + sum of Euler totients phi(1..=n), computed by a sieve
/// without materializing the sequence.
pub fn sequence_size(order: u64) -> Result<u64, Error> {
    if order == 0 {
        return Err(Error::InvalidOrder(order));
    }
    let n = order as usize;
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            // i is prime
            for j in (i..=n).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    Ok(1 + phi[1..].iter().sum::<u64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(order: u64) -> Vec<(u64, u64)> {
        FareySequence::generate(order)
            .unwrap()
            .fractions()
            .iter()
            .map(|f| (f.num(), f.den()))
            .collect()
    }

    #[test]
    fn order_one() {
        assert_eq!(seq(1), vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn order_five() {
        assert_eq!(
            seq(5),
            vec![
                (0, 1),
                (1, 5),
                (1, 4),
                (1, 3),
                (2, 5),
                (1, 2),
                (3, 5),
                (2, 3),
                (3, 4),
                (4, 5),
                (1, 1)
            ]
        );
    }

    #[test]
    fn order_four_size() {
        assert_eq!(FareySequence::generate(4).unwrap().f_max(), 7);
    }

    #[test]
    fn middle_term_is_one_half() {
        for n in 2..=40 {
            let s = FareySequence::generate(n).unwrap();
            let f_max = s.f_max();
            assert_eq!(f_max % 2, 1, "f_max odd for order {n}");
            let mid = s.fraction_at_rank((f_max + 1) / 2).unwrap();
            assert_eq!((mid.num(), mid.den()), (1, 2));
        }
    }

    #[test]
    fn rank_access() {
        let s = FareySequence::generate(5).unwrap();
        assert_eq!(s.fraction_at_rank(6).unwrap(), Fraction::new(1, 2).unwrap());
        let s4 = FareySequence::generate(4).unwrap();
        assert_eq!(s4.fraction_at_rank(1).unwrap(), Fraction::ZERO);
        assert_eq!(s4.fraction_at_rank(5).unwrap(), Fraction::new(2, 3).unwrap());
        assert!(s4.fraction_at_rank(0).is_err());
        assert!(s4.fraction_at_rank(8).is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(sequence_size(4).unwrap(), 7);
        assert_eq!(sequence_size(5).unwrap(), 11);
        assert_eq!(sequence_size(200).unwrap(), 12233);
        assert!(sequence_size(0).is_err());
        assert!(FareySequence::generate(0).is_err());
    }
}
