use std::fmt::Write;

use super::curve::CrossingSet;

/// Polyline sketch of the curve with crossing letters.
pub fn render(cs: &CrossingSet, samples: usize) -> String {
    let c = &cs.curve;
    let ts: Vec<f64> = (0..cs.params.len())
        .map(|k| cs.param(k).mid_f64())
        .chain([cs.left_fold.t.mid_f64(), cs.right_fold.t.mid_f64()])
        .collect();
    let lo = ts.iter().copied().fold(f64::MAX, f64::min);
    let hi = ts.iter().copied().fold(f64::MIN, f64::max);
    let pad = 0.25 * (hi - lo).abs().max(1.0);
    let (t0, t1) = (lo - pad, hi + pad);
    let n = samples.max(2);
    let pts: Vec<(f64, f64)> = (0..=n)
        .map(|k| {
            let t = t0 + (t1 - t0) * k as f64 / n as f64;
            (c.x.eval_f64(t), c.y.eval_f64(t))
        })
        .collect();
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let (w, h) = (640.0, 480.0);
    let sx = |x: f64| 20.0 + (x - xmin) / (xmax - xmin).max(1e-12) * (w - 40.0);
    let sy = |y: f64| h - 20.0 - (y - ymin) / (ymax - ymin).max(1e-12) * (h - 40.0);
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">"#);
    let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
    let _ = writeln!(out, r#"<polyline fill="none" stroke="black" points="{}"/>"#, path.join(" "));
    for cr in &cs.crossings {
        let (x, y) = (sx(cr.x.mid_f64()), sy(cr.y.mid_f64()));
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="red"/>"#);
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-size="12">{}</text>"#, x + 4.0, y - 4.0, cr.letter.as_char());
    }
    out.push_str("</svg>\n");
    out
}
