//! Diagnostic SVG plots: fixed 512×512 viewport, 5% padding, one polyline.

use std::fmt::Write as _;

const SIZE: f64 = 512.0;
const PAD: f64 = 0.05;

/// Render a closed polyline of plane points into an SVG document.
pub fn polyline_svg(points: &[[f64; 2]], title: &str) -> String {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in points {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let scale = SIZE * (1.0 - 2.0 * PAD) / span;
    let off = SIZE * PAD;
    let cx = 0.5 * (lo[0] + hi[0]);
    let cy = 0.5 * (lo[1] + hi[1]);
    let map = |p: &[f64; 2]| {
        (
            off + (SIZE * (1.0 - 2.0 * PAD)) * 0.5 + (p[0] - cx) * scale,
            // flip y so the plot reads in standard orientation
            off + (SIZE * (1.0 - 2.0 * PAD)) * 0.5 - (p[1] - cy) * scale,
        )
    };
    let mut path = String::new();
    for (k, p) in points.iter().enumerate() {
        let (x, y) = map(p);
        let _ = write!(path, "{}{:.2},{:.2} ", if k == 0 { "M" } else { "L" }, x, y);
    }
    path.push('Z');
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" ",
            "viewBox=\"0 0 512 512\">\n",
            "<title>{}</title>\n",
            "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n",
            "<path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n",
            "</svg>\n"
        ),
        title, path
    )
}
