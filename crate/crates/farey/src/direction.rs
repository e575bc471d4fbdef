//! Full-circle direction index for integer displacement vectors.
//!
//! The rank table covers slopes in [0, 1]. Interchanging numerator and
//! denominator extends it to [0°, 90°], and quadrant reflections to the
//! full circle: d_total = 8 f_max - 8 distinct directions, indexed
//! 1..=d_total in strictly increasing angle, index 1 at (1, 0).

use crate::error::Error;
use crate::fraction::gcd;
use crate::sequence::FareySequence;
use crate::table::FareyTable;

#[derive(Debug, Clone)]
pub struct DirectionTable {
    seq: FareySequence,
    table: FareyTable,
    d_total: u64,
}

impl DirectionTable {
    pub fn new(order: u64) -> Result<DirectionTable, Error> {
        let seq = FareySequence::generate(order)?;
        let table = FareyTable::build(&seq)?;
        Self::from_parts(seq, table)
    }

    pub fn from_parts(seq: FareySequence, table: FareyTable) -> Result<DirectionTable, Error> {
        if seq.order() != table.order() || seq.f_max() != table.f_max() {
            return Err(Error::InvalidArgument(
                "sequence and table orders disagree".into(),
            ));
        }
        let d_total = 8 * table.f_max() - 8;
        Ok(DirectionTable {
            seq,
            table,
            d_total,
        })
    }

    pub fn order(&self) -> u64 {
        self.table.order()
    }

    pub fn f_max(&self) -> u64 {
        self.table.f_max()
    }

    /// Total count of distinct reduced directions over the full circle.
    pub fn d_total(&self) -> u64 {
        self.d_total
    }

    pub fn sequence(&self) -> &FareySequence {
        &self.seq
    }

    pub fn table(&self) -> &FareyTable {
        &self.table
    }

    /// Index in [1, 2 f_max - 1] of the first-quadrant direction
    /// (a, b), a = |dx|, b = |dy|, reduced, not both zero. Slopes up to
    /// 1 read the table directly; steeper slopes go through the
    /// numerator/denominator interchange 2 f_max - rank.
    fn quarter_index(&self, a: u64, b: u64) -> u64 {
        if b <= a {
            self.table.rank_of(b, a).expect("reduced components in range")
        } else {
            2 * self.f_max() - self.table.rank_of(a, b).expect("reduced components in range")
        }
    }

    /// Angle-ordered index of the displacement (dx, dy) over 1..=d_total.
    /// The vector is reduced by gcd first; reduced components must not
    /// exceed the table order.
    pub fn direction_index(&self, dx: i64, dy: i64) -> Result<u64, Error> {
        if dx == 0 && dy == 0 {
            return Err(Error::ZeroVector);
        }
        let g = gcd(dx.unsigned_abs(), dy.unsigned_abs());
        let a = dx.unsigned_abs() / g;
        let b = dy.unsigned_abs() / g;
        let n = self.order();
        if a > n || b > n {
            return Err(Error::OutOfTable {
                num: b.min(a),
                den: b.max(a),
                order: n,
            });
        }
        // Each quadrant spans m = 2 f_max - 2 indices.
        let m = 2 * self.f_max() - 2;
        let idx = if dx > 0 && dy >= 0 {
            self.quarter_index(a, b) // [0°, 90°)
        } else if dx <= 0 && dy > 0 {
            2 * m + 2 - self.quarter_index(a, b) // [90°, 180°)
        } else if dx < 0 && dy <= 0 {
            2 * m + self.quarter_index(a, b) // [180°, 270°)
        } else {
            4 * m + 2 - self.quarter_index(a, b) // [270°, 360°)
        };
        debug_assert!(idx >= 1 && idx <= self.d_total);
        Ok(idx)
    }

    /// Cyclic distance between two direction indices, in index units.
    pub fn cyclic_difference(&self, d1: u64, d2: u64) -> u64 {
        let diff = d1.abs_diff(d2) % self.d_total;
        diff.min(self.d_total - diff)
    }
}
