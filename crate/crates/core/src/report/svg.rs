//! Minimal self-contained SVG line plots: axes, tick labels, a legend and
//! one polyline per series. No external renderer, deterministic output for
//! identical input.

pub(crate) struct Series<'a> {
    pub label: &'a str,
    pub color: &'a str,
    pub points: Vec<(f64, f64)>,
    pub markers: bool,
}

pub(crate) struct Plot<'a> {
    pub title: String,
    pub x_label: &'a str,
    pub y_label: &'a str,
    pub series: Vec<Series<'a>>,
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 540.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 44.0;
const MARGIN_BOTTOM: f64 = 52.0;
const TICKS: usize = 5;

impl Plot<'_> {
    pub(crate) fn render(&self) -> String {
        let (x_min, x_max) = padded_bounds(self.series.iter().flat_map(|s| &s.points).map(|p| p.0));
        let (y_min, y_max) = padded_bounds(self.series.iter().flat_map(|s| &s.points).map(|p| p.1));

        let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
        let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
        let to_px = |x: f64, y: f64| {
            (
                MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w,
                MARGIN_TOP + (y_max - y) / (y_max - y_min) * plot_h,
            )
        };

        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
             viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
        ));
        out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"16\">{}</text>\n",
            WIDTH / 2.0,
            escape(&self.title)
        ));

        // frame
        out.push_str(&format!(
            "<rect x=\"{MARGIN_LEFT:.2}\" y=\"{MARGIN_TOP:.2}\" width=\"{plot_w:.2}\" \
             height=\"{plot_h:.2}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
        ));

        // ticks with labels
        for i in 0..=TICKS {
            let frac = i as f64 / TICKS as f64;
            let xv = x_min + frac * (x_max - x_min);
            let yv = y_min + frac * (y_max - y_min);
            let (px, _) = to_px(xv, y_min);
            let (_, py) = to_px(x_min, yv);
            let bottom = MARGIN_TOP + plot_h;
            out.push_str(&format!(
                "<line x1=\"{px:.2}\" y1=\"{bottom:.2}\" x2=\"{px:.2}\" y2=\"{:.2}\" \
                 stroke=\"black\"/>\n",
                bottom + 5.0
            ));
            out.push_str(&format!(
                "<text x=\"{px:.2}\" y=\"{:.2}\" text-anchor=\"middle\" \
                 font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                bottom + 18.0,
                tick_label(xv)
            ));
            out.push_str(&format!(
                "<line x1=\"{:.2}\" y1=\"{py:.2}\" x2=\"{MARGIN_LEFT:.2}\" y2=\"{py:.2}\" \
                 stroke=\"black\"/>\n",
                MARGIN_LEFT - 5.0
            ));
            out.push_str(&format!(
                "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" \
                 font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                MARGIN_LEFT - 8.0,
                py + 4.0,
                tick_label(yv)
            ));
        }

        // axis labels
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"13\">{}</text>\n",
            MARGIN_LEFT + plot_w / 2.0,
            HEIGHT - 12.0,
            escape(self.x_label)
        ));
        out.push_str(&format!(
            "<text x=\"18\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"13\" transform=\"rotate(-90 18 {:.2})\">{}</text>\n",
            MARGIN_TOP + plot_h / 2.0,
            MARGIN_TOP + plot_h / 2.0,
            escape(self.y_label)
        ));

        // series
        for series in &self.series {
            let path: Vec<String> = series
                .points
                .iter()
                .map(|&(x, y)| {
                    let (px, py) = to_px(x, y);
                    format!("{px:.2},{py:.2}")
                })
                .collect();
            out.push_str(&format!(
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                path.join(" "),
                series.color
            ));
            if series.markers {
                for &(x, y) in &series.points {
                    let (px, py) = to_px(x, y);
                    out.push_str(&format!(
                        "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"3\" fill=\"{}\"/>\n",
                        series.color
                    ));
                }
            }
        }

        // legend, top-right corner of the frame
        for (i, series) in self.series.iter().enumerate() {
            let y = MARGIN_TOP + 16.0 + 18.0 * i as f64;
            let x0 = WIDTH - MARGIN_RIGHT - 150.0;
            out.push_str(&format!(
                "<line x1=\"{x0:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{}\" \
                 stroke-width=\"2\"/>\n",
                x0 + 26.0,
                series.color
            ));
            out.push_str(&format!(
                "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
                x0 + 32.0,
                y + 4.0,
                escape(series.label)
            ));
        }

        out.push_str("</svg>\n");
        out
    }
}

/// Data bounds padded by 5% so curves do not sit on the frame. Degenerate
/// (constant) ranges get a unit pad.
fn padded_bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for v in values {
        min = min.min(v);
        max = max.max(v);
    }
    let pad = if max > min { 0.05 * (max - min) } else { 1.0 };
    (min - pad, max + pad)
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let magnitude = v.abs();
    if !(1e-3..1e4).contains(&magnitude) {
        return format!("{v:.2e}");
    }
    let s = format!("{v:.3}");
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
