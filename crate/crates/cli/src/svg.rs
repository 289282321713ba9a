//! Minimal SVG rendering of curves on the annulus: polylines as computed,
//! no smoothing. The outer boundary circle maps to a 512 px radius.

use annulus_core::CurveSample;

const CENTER: f64 = 550.0;
const SCALE: f64 = 512.0 / 2.0;

pub fn render_curves(curves: &[(&str, &CurveSample)]) -> String {
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1100\" height=\"1100\" \
         viewBox=\"0 0 1100 1100\">\n",
    );
    out.push_str("<rect width=\"1100\" height=\"1100\" fill=\"white\"/>\n");
    for r in [1.0, 2.0] {
        out.push_str(&format!(
            "<circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{:.3}\" fill=\"none\" \
             stroke=\"#999999\" stroke-width=\"1\"/>\n",
            SCALE * r
        ));
    }
    for (color, curve) in curves {
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\""
        ));
        for p in curve.points() {
            let (x, y) = p.to_plane();
            out.push_str(&format!(
                "{:.3},{:.3} ",
                CENTER + SCALE * x,
                CENTER - SCALE * y
            ));
        }
        out.push_str("\"/>\n");
    }
    out.push_str("</svg>\n");
    out
}
