//! Minimal SVG line plot.

use std::fmt::Write;

const W: f64 = 640.0;
const H: f64 = 400.0;
const PAD: f64 = 60.0;

fn range(vals: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
        (a.min(v), b.max(v))
    });
    if hi > lo {
        (lo, hi)
    } else {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.05 };
        (lo - pad, hi + pad)
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// One polyline through `points` with labelled axes.
pub fn line_plot(points: &[(f64, f64)], x_label: &str, y_label: &str, title: &str) -> String {
    let (x0, x1) = range(points.iter().map(|p| p.0));
    let (y0, y1) = range(points.iter().map(|p| p.1));
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(out, r#"  <title>{}</title>"#, esc(title));
    let _ = writeln!(out, r#"  <rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <line x1="{PAD}" y1="{b}" x2="{r}" y2="{b}" stroke="black"/>"#,
        b = H - PAD,
        r = W - PAD
    );
    let _ = writeln!(
        out,
        r#"  <line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{b}" stroke="black"/>"#,
        b = H - PAD
    );
    let pts: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
        .collect();
    let _ = writeln!(
        out,
        r#"  <polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
        pts.join(" ")
    );
    for (x, anchor) in [(x0, "start"), (x1, "end")] {
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-size="11" text-anchor="{anchor}">{x:.4}</text>"#,
            sx(x),
            H - PAD + 16.0
        );
    }
    for y in [y0, y1] {
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{y:.4}</text>"#,
            PAD - 6.0,
            sy(y) + 4.0
        );
    }
    let _ = writeln!(
        out,
        r#"  <text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle">{}</text>"#,
        W / 2.0,
        H - 14.0,
        esc(x_label)
    );
    let _ = writeln!(
        out,
        r#"  <text x="16" y="{:.2}" font-size="13" text-anchor="middle" transform="rotate(-90 16 {:.2})">{}</text>"#,
        H / 2.0,
        H / 2.0,
        esc(y_label)
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_polyline() {
        let s = line_plot(&[(1.0, 2.0), (2.0, 3.0)], "radius", "d", "t");
        assert_eq!(s.matches("<polyline").count(), 1);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        // flat data still gets a finite scale
        let s = line_plot(&[(1.0, 2.0), (2.0, 2.0)], "x", "y", "flat");
        assert!(!s.contains("NaN"));
    }
}
