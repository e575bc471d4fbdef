//! Binary bitmaps and Moore-neighbor boundary tracing.

use crate::error::Error;

use super::{DigitalContour, GridPoint};

/// Binary raster; `true` is foreground.
#[derive(Debug, Clone)]
pub struct Bitmap {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl Bitmap {
    pub fn new(width: usize, height: usize) -> Bitmap {
        Bitmap {
            width,
            height,
            bits: vec![false; width * height],
        }
    }

    pub fn from_bits(width: usize, height: usize, bits: Vec<bool>) -> Result<Bitmap, Error> {
        if bits.len() != width * height {
            return Err(Error::InvalidArgument(format!(
                "bitmap bits {} != {width}x{height}",
                bits.len()
            )));
        }
        Ok(Bitmap {
            width,
            height,
            bits,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        self.bits[y * self.width + x] = value;
    }

    /// Out-of-bounds reads are background.
    pub fn get(&self, x: i64, y: i64) -> bool {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            return false;
        }
        self.bits[y as usize * self.width + x as usize]
    }
}

/// Moore neighborhood in clockwise order (y grows downward), starting west.
const DIRS: [(i64, i64); 8] = [
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
];

/// 8-connected components by flood fill; returns (size, min point) per
/// component, where min is lexicographic on (x, y).
fn components(bitmap: &Bitmap) -> Vec<(usize, GridPoint)> {
    let (w, h) = (bitmap.width, bitmap.height);
    let mut seen = vec![false; w * h];
    let mut out = Vec::new();
    for y0 in 0..h {
        for x0 in 0..w {
            if !bitmap.bits[y0 * w + x0] || seen[y0 * w + x0] {
                continue;
            }
            let mut stack = vec![(x0 as i64, y0 as i64)];
            seen[y0 * w + x0] = true;
            let mut size = 0usize;
            let mut min = GridPoint {
                x: x0 as i64,
                y: y0 as i64,
            };
            while let Some((x, y)) = stack.pop() {
                size += 1;
                if (x, y) < (min.x, min.y) {
                    min = GridPoint { x, y };
                }
                for (dx, dy) in DIRS {
                    let (nx, ny) = (x + dx, y + dy);
                    if bitmap.get(nx, ny) && !seen[ny as usize * w + nx as usize] {
                        seen[ny as usize * w + nx as usize] = true;
                        stack.push((nx, ny));
                    }
                }
            }
            out.push((size, min));
        }
    }
    out
}

/// Traces the closed outer boundary of the largest foreground
/// component, clockwise from its lexicographically smallest pixel,
/// stopping per Jacob's criterion (start re-entered with the original
/// backtrack).
pub fn trace_boundary(bitmap: &Bitmap) -> Result<DigitalContour, Error> {
    let comps = components(bitmap);
    let (size, start) = comps
        .into_iter()
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| ((b.1.x, b.1.y)).cmp(&(a.1.x, a.1.y))))
        .ok_or(Error::NoObject)?;

    let b0 = (start.x - 1, start.y); // background: start has minimal x
    let mut points = vec![start];
    let mut p = (start.x, start.y);
    let mut back = b0;
    // Stop on the first repeated (pixel, backtrack) state: the trace has
    // closed its cycle. This subsumes Jacob's criterion and also
    // terminates when the initial synthetic backtrack never recurs.
    let mut seen = std::collections::HashMap::new();
    seen.insert((p, back), 0usize);
    let max_steps = 8 * size + 8;
    'trace: for _ in 0..max_steps {
        let bi = DIRS
            .iter()
            .position(|&(dx, dy)| (p.0 + dx, p.1 + dy) == back)
            .expect("backtrack is a Moore neighbor");
        for i in 1..=8 {
            let idx = (bi + i) % 8;
            let c = (p.0 + DIRS[idx].0, p.1 + DIRS[idx].1);
            if bitmap.get(c.0, c.1) {
                let prev = (p.0 + DIRS[(bi + i - 1) % 8].0, p.1 + DIRS[(bi + i - 1) % 8].1);
                let new_back = if i == 1 { back } else { prev };
                if let Some(&k) = seen.get(&(c, new_back)) {
                    points = points.split_off(k);
                    break 'trace;
                }
                seen.insert((c, new_back), points.len());
                points.push(GridPoint { x: c.0, y: c.1 });
                p = c;
                back = new_back;
                continue 'trace;
            }
        }
        break; // isolated pixel: no foreground neighbor
    }

    if points.len() < 3 {
        return Err(Error::DegenerateObject);
    }
    DigitalContour::new(points, true)
}
