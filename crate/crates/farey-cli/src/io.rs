//! Input sniffing and the file formats: plain PBM (P1) bitmaps,
//! contour/polygon JSON, and the SVG emitter.

use serde::{Deserialize, Serialize};

use farey::geometry::{Bitmap, DigitalContour, GridPoint, Polygon};

/// Contour JSON: `{"closed": bool, "points": [[x, y], ...]}`. Extra
/// fields are ignored, so polygon output files load back as contours.
#[derive(Serialize, Deserialize)]
pub struct ContourFile {
    pub closed: bool,
    pub points: Vec<(i64, i64)>,
}

pub enum Input {
    Bitmap(Bitmap),
    Contour(DigitalContour),
}

/// Sniffs the payload: `P1` means PBM, `{` means contour JSON.
pub fn parse_input(bytes: &[u8]) -> Result<Input, String> {
    match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => parse_contour_json(bytes).map(Input::Contour),
        _ => parse_pbm(bytes).map(Input::Bitmap),
    }
}

fn parse_contour_json(bytes: &[u8]) -> Result<DigitalContour, String> {
    let file: ContourFile = serde_json::from_slice(bytes).map_err(|e| e.to_string())?;
    let points = file
        .points
        .into_iter()
        .map(|(x, y)| GridPoint::new(x, y))
        .collect();
    DigitalContour::new(points, file.closed).map_err(|e| format!("invalid contour: {e}"))
}

/// Plain-ASCII PBM (magic `P1`): width, height, then width*height
/// binary digits; `#` comments and whitespace separate tokens. A `1`
/// pixel is foreground. Errors name the byte offset.
pub fn parse_pbm(bytes: &[u8]) -> Result<Bitmap, String> {
    if bytes.len() < 2 || &bytes[..2] != b"P1" {
        return Err("bad PBM magic at byte offset 0 (expected \"P1\")".into());
    }
    let mut pos = 2usize;
    let width = next_number(bytes, &mut pos)?;
    let height = next_number(bytes, &mut pos)?;
    let mut bits = Vec::with_capacity(width * height);
    while bits.len() < width * height {
        skip_separators(bytes, &mut pos);
        match bytes.get(pos) {
            Some(b'0') => bits.push(false),
            Some(b'1') => bits.push(true),
            Some(b) => {
                return Err(format!("unexpected byte {b:#04x} at offset {pos} (want 0 or 1)"))
            }
            None => {
                return Err(format!(
                    "bitmap ends at offset {pos}: {} of {} pixels",
                    bits.len(),
                    width * height
                ))
            }
        }
        pos += 1;
    }
    Bitmap::from_bits(width, height, bits).map_err(|e| e.to_string())
}

fn skip_separators(bytes: &[u8], pos: &mut usize) {
    loop {
        match bytes.get(*pos) {
            Some(b) if b.is_ascii_whitespace() => *pos += 1,
            Some(b'#') => {
                while *pos < bytes.len() && bytes[*pos] != b'\n' {
                    *pos += 1;
                }
            }
            _ => return,
        }
    }
}

fn next_number(bytes: &[u8], pos: &mut usize) -> Result<usize, String> {
    skip_separators(bytes, pos);
    let start = *pos;
    while matches!(bytes.get(*pos), Some(b) if b.is_ascii_digit()) {
        *pos += 1;
    }
    if *pos == start {
        return Err(format!("expected a number at byte offset {start}"));
    }
    std::str::from_utf8(&bytes[start..*pos])
        .unwrap()
        .parse()
        .map_err(|e| format!("bad number at byte offset {start}: {e}"))
}

/// Static picture of a run: the source contour as a faint polyline
/// under the approximating polygon.
pub fn render_svg(contour: &DigitalContour, polygon: &Polygon) -> String {
    let xs = contour.points().iter().map(|p| p.x);
    let ys = contour.points().iter().map(|p| p.y);
    let (min_x, max_x) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (min_y, max_y) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let (w, h) = (max_x - min_x + 2, max_y - min_y + 2);

    let pts = |points: &[GridPoint]| {
        points
            .iter()
            .map(|p| format!("{},{}", p.x, p.y))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut path = String::new();
    for (i, v) in polygon.vertices.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        path.push_str(&format!("{cmd} {} {} ", v.x, v.y));
    }
    if polygon.closed {
        path.push('Z');
    }

    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" ",
            "viewBox=\"{} {} {} {}\">\n",
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.3\"/>\n",
            "  <path d=\"{}\" fill=\"none\" stroke=\"#cc2222\" stroke-width=\"0.8\" ",
            "stroke-linejoin=\"round\"/>\n",
            "</svg>\n"
        ),
        min_x - 1,
        min_y - 1,
        w,
        h,
        pts(contour.points()),
        path.trim_end(),
    )
}
