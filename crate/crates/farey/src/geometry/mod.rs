//! Rank-based geometry on the integer grid: multiplication-free
//! collinearity, contours, and direction-threshold polygonal
//! approximation.

mod trace;

pub use trace::{trace_boundary, Bitmap};

use crate::direction::DirectionTable;
use crate::error::Error;
use crate::fraction::gcd;
use crate::ratio::Ratio;
use crate::search::{closest_regula_falsi, SearchKey};

/// Pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub fn new(x: i64, y: i64) -> GridPoint {
        GridPoint { x, y }
    }
}

/// Ordered 8-connected pixel curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitalContour {
    points: Vec<GridPoint>,
    closed: bool,
}

impl DigitalContour {
    /// Validates 8-connectivity of consecutive points (wrapping when
    /// closed) and the minimum length: 3 points closed, 2 open.
    pub fn new(points: Vec<GridPoint>, closed: bool) -> Result<DigitalContour, Error> {
        let min = if closed { 3 } else { 2 };
        if points.len() < min {
            return Err(Error::DegenerateObject);
        }
        let pairs = if closed { points.len() } else { points.len() - 1 };
        for i in 0..pairs {
            let a = points[i];
            let b = points[(i + 1) % points.len()];
            let cheb = (a.x - b.x).abs().max((a.y - b.y).abs());
            if cheb != 1 {
                return Err(Error::InvalidArgument(format!(
                    "points {i} and {} are not 8-connected",
                    (i + 1) % points.len()
                )));
            }
        }
        Ok(DigitalContour { points, closed })
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn closed(&self) -> bool {
        self.closed
    }
}

/// Approximation parameters: table order and the merge threshold on
/// cyclic direction-index differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApproxConfig {
    pub order: u64,
    pub delta_f: u64,
}

/// Vertex list; always a subsequence of the source contour's points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    pub vertices: Vec<GridPoint>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxMetrics {
    pub vertex_count: u64,
    /// contour points / polygon vertices, exact.
    pub compression_ratio: Ratio,
    /// Maximum squared perpendicular distance of a contour point to its
    /// covering edge, exact.
    pub max_deviation_sq: Ratio,
}

/// Direction index of the displacement from `a` to `b`. Displacements
/// whose reduced components exceed the table order have their
/// proper-fraction slope snapped to F_n via the closest-fraction search
/// before indexing (error < one direction step).
pub fn edge_direction(dt: &DirectionTable, a: GridPoint, b: GridPoint) -> Result<u64, Error> {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    match dt.direction_index(dx, dy) {
        Err(Error::OutOfTable { .. }) => {
            let g = gcd(dx.unsigned_abs(), dy.unsigned_abs());
            let ax = dx.unsigned_abs() / g;
            let ay = dy.unsigned_abs() / g;
            let (lo, hi) = (ax.min(ay), ax.max(ay));
            let key = SearchKey::new(lo, hi).expect("lo <= hi");
            let snapped = closest_regula_falsi(dt.sequence(), dt.table(), key).closest;
            let (sx, sy) = if ax >= ay {
                (snapped.den(), snapped.num())
            } else {
                (snapped.num(), snapped.den())
            };
            dt.direction_index(dx.signum() * sx as i64, dy.signum() * sy as i64)
        }
        other => other,
    }
}

/// Rank-based collinearity of three grid points: b-a and c-a must index
/// to the same or antipodal direction. Equivalent to the cross-product
/// test whenever the reduced displacements fit the table.
pub fn is_collinear(
    dt: &DirectionTable,
    a: GridPoint,
    b: GridPoint,
    c: GridPoint,
) -> Result<bool, Error> {
    if c == a {
        return Ok(true);
    }
    let d1 = dt.direction_index(b.x - a.x, b.y - a.y)?;
    let d2 = dt.direction_index(c.x - a.x, c.y - a.y)?;
    Ok(d1 == d2 || dt.cyclic_difference(d1, d2) == dt.d_total() / 2)
}

/// Greedy single-pass edge merging: starting from unit pixel edges,
/// edge AB absorbs the next point C whenever the cyclic index
/// difference between directions AB and BC is within `delta_f`;
/// otherwise B becomes a vertex and the edge restarts there. Closed
/// contours wrap, and the seam junction at the trace start is tested
/// once with the same rule.
pub fn approximate_polygon(
    dt: &DirectionTable,
    contour: &DigitalContour,
    config: ApproxConfig,
) -> Result<(Polygon, ApproxMetrics), Error> {
    if config.order != dt.order() {
        return Err(Error::InvalidArgument(format!(
            "config order {} != table order {}",
            config.order,
            dt.order()
        )));
    }
    if config.delta_f >= dt.d_total() {
        return Err(Error::InvalidArgument(format!(
            "delta_f {} must be below d_total {}",
            config.delta_f,
            dt.d_total()
        )));
    }
    let pts = contour.points();
    let delta_f = config.delta_f;

    let mut vertices = vec![pts[0]];
    let mut start = pts[0];
    let mut mid = pts[1];
    let tail: &[GridPoint] = if contour.closed() { &pts[..1] } else { &[] };
    for &next in pts[2..].iter().chain(tail) {
        let d_ab = edge_direction(dt, start, mid)?;
        let d_bc = edge_direction(dt, mid, next)?;
        if dt.cyclic_difference(d_ab, d_bc) <= delta_f {
            mid = next;
        } else {
            vertices.push(mid);
            start = mid;
            mid = next;
        }
    }

    if contour.closed() {
        // mid is back at pts[0] = vertices[0]; the closing edge runs
        // start -> pts[0]. Re-test the junction at the trace start so an
        // arbitrary starting pixel does not force a vertex.
        if vertices.len() > 3 {
            let d_in = edge_direction(dt, start, pts[0])?;
            let d_out = edge_direction(dt, pts[0], vertices[1])?;
            if dt.cyclic_difference(d_in, d_out) <= delta_f {
                vertices.remove(0);
            }
        }
        if vertices.len() < 3 {
            // everything merged; keep a minimal valid subsequence
            let n = pts.len();
            vertices = vec![pts[0], pts[n / 3], pts[2 * n / 3]];
        }
    } else {
        vertices.push(mid); // last contour point is always kept
    }

    let polygon = Polygon {
        vertices,
        closed: contour.closed(),
    };
    let metrics = deviation_of(&polygon, contour)?;
    Ok((polygon, metrics))
}

fn dev_sq(a: GridPoint, b: GridPoint, p: GridPoint) -> Ratio {
    let ex = (b.x - a.x) as i128;
    let ey = (b.y - a.y) as i128;
    let px = (p.x - a.x) as i128;
    let py = (p.y - a.y) as i128;
    let len_sq = ex * ex + ey * ey;
    if len_sq == 0 {
        // degenerate edge: fall back to point distance
        return Ratio::from_integer(px * px + py * py);
    }
    let cross = ex * py - ey * px;
    Ratio::new(cross * cross, len_sq)
}

/// Per-edge maximum squared perpendicular deviation of the contour from
/// the polygon, exact rational. This evaluation path may multiply; the
/// approximation loop itself does not.
pub fn deviation_of(polygon: &Polygon, contour: &DigitalContour) -> Result<ApproxMetrics, Error> {
    let pts = contour.points();
    // locate the vertices as a subsequence of the contour
    let mut positions = Vec::with_capacity(polygon.vertices.len());
    let mut cursor = 0usize;
    for &v in &polygon.vertices {
        while cursor < pts.len() && pts[cursor] != v {
            cursor += 1;
        }
        if cursor == pts.len() {
            return Err(Error::InvalidArgument(
                "polygon vertices are not a subsequence of the contour".into(),
            ));
        }
        positions.push(cursor);
        cursor += 1;
    }

    let mut max_dev = Ratio::ZERO;
    let edges = if polygon.closed {
        polygon.vertices.len()
    } else {
        polygon.vertices.len() - 1
    };
    for e in 0..edges {
        let (a, b) = (
            polygon.vertices[e],
            polygon.vertices[(e + 1) % polygon.vertices.len()],
        );
        let (from, to) = (positions[e], positions[(e + 1) % positions.len()]);
        let span = if to >= from {
            to - from
        } else {
            pts.len() - from + to // wrapping closing edge
        };
        for step in 1..span {
            let p = pts[(from + step) % pts.len()];
            let d = dev_sq(a, b, p);
            if d > max_dev {
                max_dev = d;
            }
        }
    }

    Ok(ApproxMetrics {
        vertex_count: polygon.vertices.len() as u64,
        compression_ratio: Ratio::new(pts.len() as i128, polygon.vertices.len() as i128),
        max_deviation_sq: max_dev,
    })
}
