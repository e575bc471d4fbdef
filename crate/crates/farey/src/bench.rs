//! Iteration-count benchmark comparing the two search algorithms on
//! seeded pseudo-random keys.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::search::{
    closest_binary, closest_bruteforce, closest_regula_falsi, SearchKey,
};
use crate::sequence::FareySequence;
use crate::table::FareyTable;

/// Per-algorithm aggregate over one order's trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgoStats {
    pub sum_iters: u64,
    pub min_iters: u32,
    pub max_iters: u32,
    /// Trials whose result matched the brute-force oracle.
    pub agreement: u64,
}

impl AlgoStats {
    fn empty() -> AlgoStats {
        AlgoStats {
            sum_iters: 0,
            min_iters: u32::MAX,
            max_iters: 0,
            agreement: 0,
        }
    }

    fn absorb(&mut self, iters: u32, agreed: bool) {
        self.sum_iters += iters as u64;
        self.min_iters = self.min_iters.min(iters);
        self.max_iters = self.max_iters.max(iters);
        self.agreement += agreed as u64;
    }

    fn merge(mut self, other: AlgoStats) -> AlgoStats {
        self.sum_iters += other.sum_iters;
        self.min_iters = self.min_iters.min(other.min_iters);
        self.max_iters = self.max_iters.max(other.max_iters);
        self.agreement += other.agreement;
        self
    }

    /// Mean iterations scaled by 1000 and rounded to nearest; keeps the
    /// reporting path integer-only.
    pub fn mean_milli(&self, trials: u64) -> u64 {
        (self.sum_iters * 1000 + trials / 2) / trials
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderStats {
    pub order: u64,
    pub trials: u64,
    pub binary: AlgoStats,
    pub regula: AlgoStats,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// One key per (seed, order, trial), drawn from an independent
/// deterministic substream: q uniform in [n+1, 100n], p uniform in
/// [0, q]. Keys are therefore generically absent from F_n.
pub fn trial_key(seed: u64, order: u64, trial: u64) -> SearchKey {
    let stream = splitmix(seed ^ splitmix(order) ^ splitmix(trial.wrapping_mul(0x5851f42d4c957f2d)));
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let q = rng.random_range(order + 1..=100 * order);
    let p = rng.random_range(0..=q);
    SearchKey::new(p, q).expect("p <= q by construction")
}

/// Runs both algorithms (plus the oracle) on `trials` seeded keys per
/// order. Trials fan out across worker threads; every trial draws its
/// own substream, so results are identical regardless of worker count.
pub fn bench_iterations(
    orders: &[u64],
    trials: u64,
    seed: u64,
) -> Result<Vec<OrderStats>, Error> {
    if orders.is_empty() {
        return Err(Error::InvalidArgument("empty order list".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be >= 1".into()));
    }
    let mut out = Vec::with_capacity(orders.len());
    for &order in orders {
        let seq = FareySequence::generate(order)?;
        let table = FareyTable::build(&seq)?;
        let (binary, regula) = (0..trials)
            .into_par_iter()
            .map(|trial| {
                let key = trial_key(seed, order, trial);
                let oracle = closest_bruteforce(&seq, key).closest;
                let b = closest_binary(&seq, &table, key);
                let r = closest_regula_falsi(&seq, &table, key);
                let mut bs = AlgoStats::empty();
                let mut rs = AlgoStats::empty();
                bs.absorb(b.iterations, b.closest == oracle);
                rs.absorb(r.iterations, r.closest == oracle);
                (bs, rs)
            })
            .reduce(
                || (AlgoStats::empty(), AlgoStats::empty()),
                |(b1, r1), (b2, r2)| (b1.merge(b2), r1.merge(r2)),
            );
        out.push(OrderStats {
            order,
            trials,
            binary,
            regula,
        });
    }
    Ok(out)
}
