//! Rotation-robust shape description from direction-index differences.
//!
//! Each vertex of a closed polygon stores the exterior turn between its
//! incident edges as a cyclic difference of direction indices; the
//! descriptor is the cyclic array of those turns. Multiples of 90°
//! permute direction indices exactly, so right-angle rotations leave
//! the descriptor invariant up to cyclic shift.

use crate::direction::DirectionTable;
use crate::error::Error;
use crate::geometry::{edge_direction, GridPoint, Polygon};
use crate::ratio::Ratio;

/// Per-vertex direction-index differences of a closed polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeDescriptor {
    pub order: u64,
    pub d_total: u64,
    /// One exterior-turn entry per vertex, each in 0..d_total.
    pub entries: Vec<u64>,
}

/// Mean absolute angular difference in degrees under the best cyclic
/// alignment; zero iff the descriptors match under some shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchScore {
    pub degrees: Ratio,
}

fn signed_area_doubled(vertices: &[GridPoint]) -> i128 {
    let mut sum = 0i128;
    for i in 0..vertices.len() {
        let a = vertices[i];
        let b = vertices[(i + 1) % vertices.len()];
        sum += a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128;
    }
    sum
}

/// Extracts the descriptor of a closed polygon. Traversal is first
/// normalized to clockwise so orientation never reads as a shape
/// difference; entries are (d_in - d_out) mod d_total.
pub fn descriptor_of(dt: &DirectionTable, polygon: &Polygon) -> Result<ShapeDescriptor, Error> {
    if !polygon.closed {
        return Err(Error::OpenPolygonUnsupported);
    }
    if polygon.vertices.len() < 3 {
        return Err(Error::DegenerateObject);
    }
    let mut vertices = polygon.vertices.clone();
    if signed_area_doubled(&vertices) > 0 {
        vertices.reverse();
    }
    let len = vertices.len();
    let d_total = dt.d_total();
    let mut entries = Vec::with_capacity(len);
    for i in 0..len {
        let prev = vertices[(i + len - 1) % len];
        let here = vertices[i];
        let next = vertices[(i + 1) % len];
        let d_in = edge_direction(dt, prev, here)?;
        let d_out = edge_direction(dt, here, next)?;
        entries.push((d_in + d_total - d_out) % d_total);
    }
    Ok(ShapeDescriptor {
        order: dt.order(),
        d_total,
        entries,
    })
}

/// diff * 360 / d_total as an exact rational number of degrees.
pub fn index_to_degrees(d_total: u64, diff: u64) -> Ratio {
    Ratio::new(diff as i128 * 360, d_total as i128)
}

fn resample(entries: &[u64], target: usize) -> Vec<u64> {
    let src = entries.len();
    (0..target)
        .map(|i| entries[((i * src + target / 2) / target) % src])
        .collect()
}

fn best_alignment(a: &[u64], b: &[u64]) -> u64 {
    debug_assert_eq!(a.len(), b.len());
    let len = a.len();
    let mut best = u64::MAX;
    for shift in 0..len {
        let total: u64 = (0..len)
            .map(|i| a[i].abs_diff(b[(i + shift) % len]))
            .sum();
        best = best.min(total);
    }
    best
}

/// Compares two descriptors over all cyclic shifts in both scan
/// orientations. Different lengths are handled by nearest-neighbor
/// resampling of the shorter onto the longer (crude, but the score is
/// still exact for equal-length inputs).
pub fn compare_cyclic(a: &ShapeDescriptor, b: &ShapeDescriptor) -> Result<MatchScore, Error> {
    if a.d_total != b.d_total {
        return Err(Error::DescriptorMismatch {
            left: a.d_total,
            right: b.d_total,
        });
    }
    let (long, short) = if a.entries.len() >= b.entries.len() {
        (&a.entries, &b.entries)
    } else {
        (&b.entries, &a.entries)
    };
    let other = if short.len() == long.len() {
        short.to_vec()
    } else {
        resample(short, long.len())
    };
    let reversed: Vec<u64> = other.iter().rev().copied().collect();
    let best = best_alignment(long, &other).min(best_alignment(long, &reversed));
    Ok(MatchScore {
        degrees: Ratio::new(
            best as i128 * 360,
            long.len() as i128 * a.d_total as i128,
        ),
    })
}
