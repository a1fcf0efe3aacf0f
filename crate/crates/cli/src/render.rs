//! ASCII and SVG drawings of fence diagrams and their cusped reductions.
//!
//! Fixed geometry: line `k` at `y = 10k`, band `t` at `x = 10t` in SVG;
//! line `k` on text row `2(k-1)`, band `t` on text column `4t` in ASCII.
//! Cusps are drawn as quadratic arcs through the corner point.
//! Bands are drawn over lines, so horizontals break at crossings.

use std::fmt::Write;

use fence_core::legendrian::{CornerShape, CuspedRenderData};
use fence_core::FenceDiagram;

const GAP: usize = 2;
const CUSP: usize = 3;

struct Grid {
    cells: Vec<Vec<char>>,
}

impl Grid {
    fn new(rows: usize, columns: usize) -> Grid {
        Grid {
            cells: vec![vec![' '; columns]; rows],
        }
    }

    fn put(&mut self, row: usize, column: usize, c: char) {
        self.cells[row][column] = c;
    }

    fn hline(&mut self, row: usize, from: usize, to: usize) {
        for column in from..=to {
            self.put(row, column, '-');
        }
    }

    fn vline(&mut self, column: usize, from: usize, to: usize) {
        for row in from..=to {
            self.put(row, column, '|');
        }
    }

    fn finish(self) -> String {
        let mut out = String::new();
        for row in self.cells {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Full-width lines with bands as vertical bars, `+` at band ends.
pub fn ascii_fence(f: &FenceDiagram) -> String {
    let width = 4 * (f.len() + 1) + 1;
    let mut grid = Grid::new(2 * f.strands() - 1, width);
    for k in 1..=f.strands() {
        grid.hline(2 * (k - 1), 0, width - 1);
    }
    for (t, band) in f.word().iter().enumerate() {
        let column = 4 * (t + 1);
        let (top, bottom) = (2 * (band.top() - 1), 2 * (band.bottom() - 1));
        grid.vline(column, top, bottom);
        grid.put(top, column, '+');
        grid.put(bottom, column, '+');
    }
    grid.finish()
}

/// Truncated lines with `<` for LT and `>` for RB cusps, `+` elsewhere;
/// band `t` on column `4(t-1)`.
pub fn ascii_cusped(data: &CuspedRenderData) -> String {
    if data.verticals.is_empty() {
        return String::new();
    }
    let lines = data.horizontals.iter().map(|h| h.line).max().unwrap_or(1);
    let positions = data.verticals.iter().map(|v| v.position).max().unwrap_or(0);
    let mut grid = Grid::new(2 * lines - 1, 4 * (positions - 1) + 1);
    for h in &data.horizontals {
        grid.hline(2 * (h.line - 1), 4 * (h.from - 1), 4 * (h.to - 1));
    }
    for v in &data.verticals {
        let column = 4 * (v.position - 1);
        let (top, bottom) = (2 * (v.top - 1), 2 * (v.bottom - 1));
        grid.vline(column, top, bottom);
        grid.put(top, column, '+');
        grid.put(bottom, column, '+');
    }
    for c in &data.cusps {
        let glyph = if c.shape == CornerShape::LT { '<' } else { '>' };
        grid.put(2 * (c.line - 1), 4 * (c.position - 1), glyph);
    }
    grid.finish()
}

fn svg_open(out: &mut String, width: usize, height: usize) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str(r#"<g fill="none" stroke="black" stroke-width="1">"#);
    out.push('\n');
}

fn svg_close(out: &mut String) {
    out.push_str("</g>\n</svg>\n");
}

/// Horizontal segment at `y` from `x1` to `x2`, with gaps at `breaks`.
fn svg_broken_line(out: &mut String, y: usize, x1: usize, x2: usize, breaks: &[usize]) {
    let mut start = x1;
    for &x in breaks {
        let _ = writeln!(out, r#"<line x1="{start}" y1="{y}" x2="{}" y2="{y}"/>"#, x - GAP);
        start = x + GAP;
    }
    let _ = writeln!(out, r#"<line x1="{start}" y1="{y}" x2="{x2}" y2="{y}"/>"#);
}

pub fn svg_fence(f: &FenceDiagram) -> String {
    let width = 10 * (f.len() + 1);
    let height = 10 * (f.strands() + 1);
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for k in 1..=f.strands() {
        let breaks: Vec<usize> = f
            .word()
            .iter()
            .enumerate()
            .filter(|(_, b)| b.passes_over(k))
            .map(|(t, _)| 10 * (t + 1))
            .collect();
        svg_broken_line(&mut out, 10 * k, 0, width, &breaks);
    }
    for (t, b) in f.word().iter().enumerate() {
        let x = 10 * (t + 1);
        let _ = writeln!(
            out,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
            10 * b.top(),
            10 * b.bottom()
        );
    }
    svg_close(&mut out);
    out
}

/// Reduced diagram with LT and RB corners drawn as cusp arcs.
pub fn svg_cusped(data: &CuspedRenderData) -> String {
    let lines = data.horizontals.iter().map(|h| h.line).max().unwrap_or(0);
    let positions = data.verticals.iter().map(|v| v.position).max().unwrap_or(0);
    let (width, height) = (10 * (positions + 1), 10 * (lines + 1));
    let mut out = String::new();
    svg_open(&mut out, width, height);
    let cusp_at = |line: usize, position: usize| {
        data.cusps
            .iter()
            .find(|c| c.line == line && c.position == position)
            .map(|c| c.shape)
    };
    for h in &data.horizontals {
        let y = 10 * h.line;
        let mut x1 = 10 * h.from;
        let mut x2 = 10 * h.to;
        if cusp_at(h.line, h.from).is_some() {
            x1 += CUSP;
        }
        if cusp_at(h.line, h.to).is_some() {
            x2 -= CUSP;
        }
        let mut breaks: Vec<usize> = data
            .crossings
            .iter()
            .filter(|c| c.line == h.line)
            .map(|c| 10 * c.position)
            .collect();
        breaks.sort_unstable();
        svg_broken_line(&mut out, y, x1, x2, &breaks);
    }
    for v in &data.verticals {
        let x = 10 * v.position;
        let mut y1 = 10 * v.top;
        let mut y2 = 10 * v.bottom;
        if cusp_at(v.top, v.position).is_some() {
            y1 += CUSP;
        }
        if cusp_at(v.bottom, v.position).is_some() {
            y2 -= CUSP;
        }
        let _ = writeln!(out, r#"<line x1="{x}" y1="{y1}" x2="{x}" y2="{y2}"/>"#);
    }
    for c in &data.cusps {
        let (x, y) = (10 * c.position, 10 * c.line);
        let path = match c.shape {
            CornerShape::LT => format!("M {} {y} Q {x} {y} {x} {}", x + CUSP, y + CUSP),
            _ => format!("M {} {y} Q {x} {y} {x} {}", x - CUSP, y - CUSP),
        };
        let _ = writeln!(out, r#"<path class="cusp" d="{path}"/>"#);
    }
    svg_close(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fence_core::legendrian::{cusped_render_data, reduce};

    fn fence(b: usize, pairs: &[(usize, usize)]) -> FenceDiagram {
        FenceDiagram::from_pairs(b, pairs).unwrap()
    }

    #[test]
    fn hopf_ascii() {
        let text = ascii_fence(&fence(2, &[(1, 2), (1, 2)]));
        assert_eq!(text, "----+---+----\n    |   |\n----+---+----\n");
    }

    #[test]
    fn crossing_keeps_vertical() {
        let text = ascii_fence(&fence(3, &[(1, 3)]));
        assert_eq!(text.lines().nth(2).unwrap(), "----|----");
    }

    #[test]
    fn cusped_hopf() {
        let data = cusped_render_data(&reduce(&fence(2, &[(1, 2), (1, 2)])).unwrap());
        assert_eq!(ascii_cusped(&data), "<---+\n|   |\n+--->\n");
        assert_eq!(svg_cusped(&data).matches("class=\"cusp\"").count(), 2);
    }

    #[test]
    fn svg_geometry() {
        let svg = svg_fence(&fence(3, &[(1, 3)]));
        assert!(svg.contains(r#"<line x1="10" y1="10" x2="10" y2="30"/>"#));
        assert!(svg.contains(r#"<line x1="0" y1="20" x2="8" y2="20"/>"#));
        assert!(svg.contains(r#"<line x1="12" y1="20" x2="20" y2="20"/>"#));
    }

    #[test]
    fn empty_cusped() {
        let data = cusped_render_data(&reduce(&fence(1, &[])).unwrap());
        assert_eq!(ascii_cusped(&data), "");
        assert!(!svg_cusped(&data).contains("<line"));
    }
}
