//! Deterministic SVG drawings of Young diagrams and Durfee rectangles.
//! Coordinates are integers, so output is byte-stable.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::partitions::{durfee_classify, DurfeeKind, Partition};

const CELL: i64 = 24;
const MARGIN: i64 = 32;
const LINE: i64 = 18;
const DASHES: [&str; 5] = ["8,4", "2,4", "12,4,2,4", "6,2", "1,3"];
const COLORS: [&str; 6] = ["#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#566573"];
const KMAX_CAP: i64 = 12;

/// `a k + b` as `k`, `3k+2`, `k+1` or `2`.
fn affine(a: i64, b: i64) -> String {
    let lead = match a {
        0 => return b.to_string(),
        1 => "k".to_string(),
        _ => format!("{a}k"),
    };
    match b {
        0 => lead,
        b if b > 0 => format!("({lead}+{b})"),
        b => format!("({lead}{b})"),
    }
}

/// Caption of the family `(l, n, m)`, e.g.
/// `Durfee rectangles k×(3k+2); Enveloping (k+1)×(3k+3), (k+1)×(3k+4)`.
pub fn family_caption(l: i64, n: i64, m: i64) -> String {
    let mut s = format!("Durfee rectangles {}×{}", affine(1, n), affine(l + 1, m));
    if l > 0 {
        let env: Vec<String> = (1..=l).map(|i| format!("{}×{}", affine(1, n + 1), affine(l + 1, m + i))).collect();
        s.push_str("; Enveloping ");
        s.push_str(&env.join(", "));
    }
    s
}

struct Canvas {
    rows: i64,
    cols: i64,
    legend: Vec<String>,
    body: String,
}

impl Canvas {
    fn new(rows: i64, cols: i64, legend: Vec<String>) -> Self {
        Canvas { rows: rows.max(1), cols: cols.max(1), legend, body: String::new() }
    }

    fn cell(&mut self, r: i64, c: i64) {
        let (x, y) = (MARGIN + c * CELL, MARGIN + r * CELL);
        let _ = writeln!(self.body, r##"  <rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="#e8eef5" stroke="#34495e" stroke-width="1"/>"##);
    }

    fn outline(&mut self, rows: i64, cols: i64, color: &str, dash: Option<&str>) {
        if rows <= 0 || cols <= 0 {
            return;
        }
        let dash = dash.map(|d| format!(r#" stroke-dasharray="{d}""#)).unwrap_or_default();
        let _ = writeln!(
            self.body,
            r#"  <rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="{color}" stroke-width="3"{dash}/>"#,
            cols * CELL,
            rows * CELL
        );
    }

    fn finish(self) -> String {
        let width = 2 * MARGIN + (self.cols + 1) * CELL;
        let grid_bottom = MARGIN + (self.rows + 1) * CELL;
        let height = grid_bottom + LINE * self.legend.len() as i64 + MARGIN;
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(s, r#"  <rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);
        let (x_end, y_end) = (MARGIN + (self.cols + 1) * CELL, grid_bottom);
        let _ = writeln!(s, r#"  <line x1="{MARGIN}" y1="{MARGIN}" x2="{x_end}" y2="{MARGIN}" stroke="black" stroke-width="1"/>"#);
        let _ = writeln!(s, r#"  <line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{y_end}" stroke="black" stroke-width="1"/>"#);
        s.push_str(&self.body);
        for (j, text) in self.legend.iter().enumerate() {
            let y = grid_bottom + LINE * (j as i64 + 1);
            let _ = writeln!(s, r#"  <text x="{MARGIN}" y="{y}" font-family="monospace" font-size="13">{text}</text>"#);
        }
        s.push_str("</svg>\n");
        s
    }
}

fn check(l: i64, n: i64, m: i64) -> Result<()> {
    if l < 0 || n < 0 || m < 0 {
        return Err(Error::InvalidParameter(format!("l, n, m must be nonnegative, got {l}, {n}, {m}")));
    }
    Ok(())
}

/// The Young diagram of `p` (English notation) with its Durfee rectangle solid
/// and the enveloping rectangles dashed.
pub fn render_durfee(p: &Partition, l: i64, n: i64, m: i64) -> Result<String> {
    check(l, n, m)?;
    let class = durfee_classify(p, l, n, m)?;
    let mut rects: Vec<(i64, i64)> = Vec::new();
    let mut legend = vec![format!("λ = {p}, l = {l}, n = {n}, m = {m}: {}", class.kind)];
    match class.kind {
        DurfeeKind::NoRect => {
            rects.push((n, m));
            legend.push(format!("Missing rectangle {n}×{m}"));
        }
        DurfeeKind::Rect { .. } => {
            let d = class.durfee_rect().expect("rect");
            rects.push(d);
            let env = class.enveloping_rects();
            let mut line = format!("Durfee rectangle {}×{}", d.0, d.1);
            if !env.is_empty() {
                let e: Vec<String> = env.iter().map(|(r, c)| format!("{r}×{c}")).collect();
                line.push_str(&format!("; Enveloping {}", e.join(", ")));
            }
            legend.push(line);
            rects.extend(env);
        }
    }
    let rows = rects.iter().map(|r| r.0).chain([p.len() as i64]).max().unwrap_or(0);
    let cols = rects.iter().map(|r| r.1).chain([p.part(1) as i64]).max().unwrap_or(0);
    let mut canvas = Canvas::new(rows, cols, legend);
    for (r, &len) in p.parts().iter().enumerate() {
        for c in 0..len as i64 {
            canvas.cell(r as i64, c);
        }
    }
    match class.kind {
        DurfeeKind::NoRect => canvas.outline(n, m, COLORS[5], Some("4,4")),
        DurfeeKind::Rect { .. } => {
            canvas.outline(rects[0].0, rects[0].1, COLORS[0], None);
            for (i, &(r, c)) in rects[1..].iter().enumerate() {
                canvas.outline(r, c, COLORS[1], Some(DASHES[i % DASHES.len()]));
            }
        }
    }
    Ok(canvas.finish())
}

/// Durfee rectangles of classes `k = 0..=kmax`, each with its enveloping
/// rectangles, nested at a common corner.
pub fn render_family(l: i64, n: i64, m: i64, kmax: i64) -> Result<String> {
    check(l, n, m)?;
    if !(0..=KMAX_CAP).contains(&kmax) {
        return Err(Error::InvalidParameter(format!("kmax must lie in 0..={KMAX_CAP}, got {kmax}")));
    }
    let legend = vec![format!("l = {l}, n = {n}, m = {m}, k = 0..{kmax}"), family_caption(l, n, m)];
    let rows = kmax + n + (l > 0) as i64;
    let cols = (l + 1) * kmax + m + l;
    let mut canvas = Canvas::new(rows, cols, legend);
    for k in (0..=kmax).rev() {
        let color = COLORS[k as usize % COLORS.len()];
        let c = (l + 1) * k + m;
        for i in (1..=l).rev() {
            canvas.outline(k + n + 1, c + i, color, Some(DASHES[(i - 1) as usize % DASHES.len()]));
        }
        canvas.outline(k + n, c, color, None);
    }
    Ok(canvas.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn captions() {
        assert_eq!(family_caption(2, 0, 2), "Durfee rectangles k×(3k+2); Enveloping (k+1)×(3k+3), (k+1)×(3k+4)");
        assert_eq!(family_caption(0, 0, 0), "Durfee rectangles k×k");
        assert_eq!(family_caption(1, 1, 0), "Durfee rectangles (k+1)×2k; Enveloping (k+2)×(2k+1)");
    }

    #[test]
    fn durfee_figure_contents() {
        let p = Partition::parse("4,3,1").unwrap();
        let svg = render_durfee(&p, 1, 0, 0).unwrap();
        assert!(svg.contains("Durfee rectangle 1×2; Enveloping 2×3"));
        assert_eq!(svg.matches("fill=\"#e8eef5\"").count(), 8);
        assert!(svg.contains(r#"width="48" height="24" fill="none""#));
        assert!(svg.contains(r#"width="72" height="48" fill="none""#));
        assert_eq!(svg, render_durfee(&p, 1, 0, 0).unwrap());
    }

    #[test]
    fn empty_partition_has_axes_only() {
        let svg = render_durfee(&Partition::default(), 0, 0, 0).unwrap();
        assert_eq!(svg.matches("<line").count(), 2);
        assert!(!svg.contains("fill=\"none\""));
        assert!(!svg.contains("#e8eef5"));
    }

    #[test]
    fn family_has_three_outlines_per_k() {
        let svg = render_family(2, 0, 2, 2).unwrap();
        // k = 0 has an empty 0x2 Durfee rectangle, so 2 + 3 + 3
        assert_eq!(svg.matches("fill=\"none\"").count(), 8);
        assert!(svg.contains("Durfee rectangles k×(3k+2)"));
        assert!(render_family(1, 0, 0, 99).is_err());
    }
}
