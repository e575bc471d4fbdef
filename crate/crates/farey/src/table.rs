//! The dense rank table T_n: (numerator, denominator) -> rank in O(1).

use crate::error::Error;
use crate::sequence::FareySequence;

/// Orders above this would push f_max past u32 range (f_max ~ 0.304 n^2).
pub const MAX_TABLE_ORDER: u64 = 20_000;

/// Dense (n+1) x n grid holding the rank of i/j in F_n for every
/// 0 <= i <= j <= n, including reducible aliases (T(2,4) = T(1,2)).
/// Cells with i > j hold the sentinel 0 and are never exposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyTable {
    order: u64,
    f_max: u64,
    ranks: Vec<u32>,
}

impl FareyTable {
    /// Fills the grid in O(n^2): the rank k of each irreducible i/j is
    /// written to its own cell and to every multiple (il, jl) with
    /// jl <= n. Each valid cell is written exactly once.
    pub fn build(seq: &FareySequence) -> Result<FareyTable, Error> {
        let n = seq.order();
        if n > MAX_TABLE_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let cols = n as usize;
        let mut ranks = vec![0u32; (n as usize + 1) * cols];
        for (idx0, f) in seq.fractions().iter().enumerate() {
            let k = (idx0 + 1) as u32;
            let (i, j) = (f.num(), f.den());
            let mut l = 1;
            while j * l <= n {
                ranks[(i * l) as usize * cols + (j * l - 1) as usize] = k;
                l += 1;
            }
        }
        Ok(FareyTable {
            order: n,
            f_max: seq.f_max(),
            ranks,
        })
    }

    /// Reassembles a table from its serialized parts, validating shape
    /// and a few structural cells. Used by the binary cache loader.
    pub fn from_raw(order: u64, f_max: u64, ranks: Vec<u32>) -> Result<FareyTable, Error> {
        if order == 0 || order > MAX_TABLE_ORDER {
            return Err(Error::InvalidOrder(order));
        }
        let expected = (order as usize + 1) * order as usize;
        if ranks.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "grid has {} cells, expected {expected}",
                ranks.len()
            )));
        }
        if crate::sequence::sequence_size(order)? != f_max {
            return Err(Error::InvalidArgument(format!(
                "f_max {f_max} inconsistent with order {order}"
            )));
        }
        let table = FareyTable {
            order,
            f_max,
            ranks,
        };
        if table.cell(0, 1) != 1 || table.cell(order, order) as u64 != f_max {
            return Err(Error::InvalidArgument("corrupt grid contents".into()));
        }
        Ok(table)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn f_max(&self) -> u64 {
        self.f_max
    }

    /// Row-major cells, rows i = 0..=n, columns j = 1..=n, sentinel 0
    /// where i > j.
    pub fn cells(&self) -> &[u32] {
        &self.ranks
    }

    fn cell(&self, i: u64, j: u64) -> u32 {
        self.ranks[i as usize * self.order as usize + (j - 1) as usize]
    }

    /// The rank of p/q in F_n, one grid read. p/q need not be reduced.
    pub fn rank_of(&self, p: u64, q: u64) -> Result<u64, Error> {
        if q == 0 || p > q || q > self.order {
            return Err(Error::OutOfTable {
                num: p,
                den: q,
                order: self.order,
            });
        }
        Ok(self.cell(p, q) as u64)
    }

    /// Verifies the four structural symmetries of the table over every
    /// valid cell. Intended as a test utility and CLI diagnostic.
    pub fn check_properties(&self) -> PropertyReport {
        let n = self.order;
        let fm = self.f_max;
        let mut report = PropertyReport {
            rank_sum: true,
            row_monotone: true,
            column_monotone: true,
            column_palindrome: true,
            violations: Vec::new(),
        };

        // rank(i,j) + rank(j-i,j) = f_max + 1
        for j in 1..=n {
            for i in 0..=j {
                let sum = self.cell(i, j) as u64 + self.cell(j - i, j) as u64;
                if sum != fm + 1 {
                    report.rank_sum = false;
                    report
                        .violations
                        .push(format!("rank-sum fails at ({i},{j}): {sum} != {}", fm + 1));
                }
            }
        }
        // row 0 constant 1; rows i >= 1 strictly decreasing over j = i..n
        for j in 1..=n {
            if self.cell(0, j) != 1 {
                report.row_monotone = false;
                report.violations.push(format!("row 0 not 1 at column {j}"));
            }
        }
        for i in 1..=n {
            for j in i..n {
                if self.cell(i, j) <= self.cell(i, j + 1) {
                    report.row_monotone = false;
                    report
                        .violations
                        .push(format!("row {i} not decreasing at column {j}"));
                }
            }
        }
        // columns strictly increasing over i = 0..=j
        for j in 1..=n {
            for i in 0..j {
                if self.cell(i, j) >= self.cell(i + 1, j) {
                    report.column_monotone = false;
                    report
                        .violations
                        .push(format!("column {j} not increasing at row {i}"));
                }
            }
        }
        // rank(i+1,j) - rank(i,j) = rank(j-i,j) - rank(j-i-1,j)
        for j in 1..=n {
            for i in 0..j {
                let top = self.cell(i + 1, j) as i64 - self.cell(i, j) as i64;
                let bottom = self.cell(j - i, j) as i64 - self.cell(j - i - 1, j) as i64;
                if top != bottom {
                    report.column_palindrome = false;
                    report
                        .violations
                        .push(format!("difference symmetry fails at ({i},{j})"));
                }
            }
        }
        report
    }
}

/// Outcome of [`FareyTable::check_properties`].
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub rank_sum: bool,
    pub row_monotone: bool,
    pub column_monotone: bool,
    pub column_palindrome: bool,
    pub violations: Vec<String>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.rank_sum && self.row_monotone && self.column_monotone && self.column_palindrome
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: u64) -> FareyTable {
        FareyTable::build(&FareySequence::generate(n).unwrap()).unwrap()
    }

    #[test]
    fn golden_table_order_four() {
        let t = table(4);
        // Published grid: rows are numerators 0..=4, columns denominators 1..=4.
        let expected: [[u32; 4]; 5] = [
            [1, 1, 1, 1],
            [7, 4, 3, 2],
            [0, 7, 5, 4],
            [0, 0, 7, 6],
            [0, 0, 0, 7],
        ];
        for i in 0..5u64 {
            for j in 1..=4u64 {
                let want = expected[i as usize][(j - 1) as usize];
                if i > j {
                    assert!(t.rank_of(i, j).is_err());
                } else {
                    assert_eq!(t.rank_of(i, j).unwrap(), want as u64, "cell ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn order_one() {
        let t = table(1);
        assert_eq!(t.rank_of(0, 1).unwrap(), 1);
        assert_eq!(t.rank_of(1, 1).unwrap(), 2);
    }

    #[test]
    fn reducible_aliases() {
        let t = table(10);
        let half = t.rank_of(1, 2).unwrap();
        for (p, q) in [(2, 4), (3, 6), (4, 8), (5, 10)] {
            assert_eq!(t.rank_of(p, q).unwrap(), half);
        }
    }

    #[test]
    fn lookup_bounds() {
        let t = table(4);
        assert!(t.rank_of(3, 5).is_err());
        assert!(t.rank_of(1, 0).is_err());
        assert!(t.rank_of(3, 2).is_err());
    }

    #[test]
    fn property_report_examples() {
        let t = table(4);
        assert_eq!(t.rank_of(1, 4).unwrap() + t.rank_of(3, 4).unwrap(), 8);
        let report = t.check_properties();
        assert!(report.all_hold(), "{:?}", report.violations);
    }

    #[test]
    fn from_raw_round_trip_and_rejects() {
        let t = table(7);
        let again = FareyTable::from_raw(7, t.f_max(), t.cells().to_vec()).unwrap();
        assert_eq!(t, again);
        assert!(FareyTable::from_raw(7, t.f_max() + 1, t.cells().to_vec()).is_err());
        assert!(FareyTable::from_raw(6, t.f_max(), t.cells().to_vec()).is_err());
        let mut bad = t.cells().to_vec();
        bad[0] = 9;
        assert!(FareyTable::from_raw(7, t.f_max(), bad).is_err());
    }
}
