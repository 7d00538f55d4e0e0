//! Human-facing output of grid representations: an ASCII sketch and an SVG
//! drawing. Both are deterministic so emitted files are stable.

use crate::rep::{GridRepresentation, Orientation};

/// ASCII sketch, rows top to bottom. The character grid doubles the
/// coordinate grid so that the gaps between parallel paths stay visible:
/// grid point (r, c) maps to character (2r, 2c). Horizontal path cells are
/// `-`, vertical ones `|`, and any point where two paths meet (or a path
/// bends into a contact) is `+`.
pub fn render_ascii(rep: &GridRepresentation) -> String {
    let mut rep = rep.clone();
    rep.normalize();
    if rep.paths.is_empty() {
        return String::new();
    }
    let (rows, cols) = rep.bounding_box();
    let height = 2 * rows as usize + 1;
    let width = 2 * cols as usize + 1;
    let mut canvas = vec![vec!['.'; width]; height];
    let mut owners = vec![vec![0u8; width]; height];
    for seg in &rep.paths {
        let glyph = match seg.orient {
            Orientation::Horizontal => '-',
            Orientation::Vertical => '|',
        };
        for t in 2 * seg.lo..=2 * seg.hi {
            let (r, c) = match seg.orient {
                Orientation::Horizontal => (2 * seg.line as usize, t as usize),
                Orientation::Vertical => (t as usize, 2 * seg.line as usize),
            };
            owners[r][c] += 1;
            canvas[r][c] = if owners[r][c] > 1 || (canvas[r][c] != '.' && canvas[r][c] != glyph) {
                '+'
            } else {
                glyph
            };
        }
    }
    let mut out = String::new();
    for row in canvas {
        out.extend(row);
        out.push('\n');
    }
    out
}

/// SVG 1.1 document: one stroked line per path, endpoints as dots, vertex
/// ids as small labels at the path midpoint. One grid unit is 20 pixels.
pub fn render_svg(rep: &GridRepresentation) -> String {
    const UNIT: i64 = 20;
    const MARGIN: i64 = 20;
    let mut rep = rep.clone();
    rep.normalize();
    let (rows, cols) = rep.bounding_box();
    let w = cols * UNIT + 2 * MARGIN;
    let h = rows * UNIT + 2 * MARGIN;
    let x = |c: i64| MARGIN + c * UNIT;
    let y = |r: i64| MARGIN + r * UNIT;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    for (v, seg) in rep.paths.iter().enumerate() {
        let ((x1, y1), (x2, y2), (lx, ly)) = match seg.orient {
            Orientation::Horizontal => (
                (x(seg.lo), y(seg.line)),
                (x(seg.hi), y(seg.line)),
                (x(seg.lo + (seg.hi - seg.lo) / 2) + 4, y(seg.line) - 5),
            ),
            Orientation::Vertical => (
                (x(seg.line), y(seg.lo)),
                (x(seg.line), y(seg.hi)),
                (x(seg.line) + 5, y(seg.lo + (seg.hi - seg.lo) / 2) - 4),
            ),
        };
        out.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" \
             stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n"
        ));
        for (px, py) in [(x1, y1), (x2, y2)] {
            out.push_str(&format!(
                "  <circle cx=\"{px}\" cy=\"{py}\" r=\"4\" fill=\"black\"/>\n"
            ));
        }
        out.push_str(&format!(
            "  <text x=\"{lx}\" y=\"{ly}\" font-size=\"11\" \
             font-family=\"monospace\" fill=\"crimson\">{v}</text>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}
