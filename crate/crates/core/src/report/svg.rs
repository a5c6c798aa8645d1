//! Self-contained SVG line charts.
//!
//! No rendering dependencies: the chart is assembled as text with linear
//! scales, axis ticks, one polyline per series, and a legend. Output is a
//! pure function of the spec, so identical specs give byte-identical files.

use std::fmt::Write as _;

use thiserror::Error;

use crate::real::Real;

/// One named line of (integer x, real y) points, x strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<F> {
    pub name: String,
    pub points: Vec<(i64, F)>,
}

/// Everything needed to draw one chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartSpec<F> {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series<F>>,
    pub width: u32,
    pub height: u32,
}

/// Chart validation failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartError {
    #[error("chart needs at least one series")]
    NoSeries,
    #[error("series '{name}' has no points")]
    EmptySeries { name: String },
    #[error("series '{name}' x values must be strictly increasing")]
    XNotIncreasing { name: String },
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
];

const MARGIN_LEFT: f64 = 62.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 42.0;
const MARGIN_BOTTOM: f64 = 52.0;
const TICKS: usize = 5;

/// Render the chart as a standalone SVG document.
pub fn render_chart<F: Real>(spec: &ChartSpec<F>) -> Result<String, ChartError> {
    if spec.series.is_empty() {
        return Err(ChartError::NoSeries);
    }
    for series in &spec.series {
        if series.points.is_empty() {
            return Err(ChartError::EmptySeries {
                name: series.name.clone(),
            });
        }
        if !series.points.windows(2).all(|w| w[0].0 < w[1].0) {
            return Err(ChartError::XNotIncreasing {
                name: series.name.clone(),
            });
        }
    }

    let width = spec.width as f64;
    let height = spec.height as f64;
    let plot_w = (width - MARGIN_LEFT - MARGIN_RIGHT).max(1.0);
    let plot_h = (height - MARGIN_TOP - MARGIN_BOTTOM).max(1.0);

    let (x_lo, x_hi) = padded_extent(
        spec.series
            .iter()
            .flat_map(|s| s.points.iter().map(|&(x, _)| x as f64)),
    );
    let (y_lo, y_hi) = padded_extent(
        spec.series
            .iter()
            .flat_map(|s| s.points.iter().map(|&(_, y)| y.to_f64().unwrap_or(0.0))),
    );
    let sx = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| MARGIN_TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif">"#,
        w = spec.width,
        h = spec.height
    );
    let _ = writeln!(svg, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        escape(&spec.title)
    );

    // Plot frame.
    let _ = writeln!(
        svg,
        r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#333" stroke-width="1"/>"##,
        MARGIN_LEFT, MARGIN_TOP, plot_w, plot_h
    );

    // Ticks and numeric labels.
    for i in 0..TICKS {
        let frac = i as f64 / (TICKS - 1) as f64;
        let xv = x_lo + frac * (x_hi - x_lo);
        let px = sx(xv);
        let _ = writeln!(
            svg,
            r##"<line x1="{px:.2}" y1="{y1:.2}" x2="{px:.2}" y2="{y2:.2}" stroke="#333" stroke-width="1"/>"##,
            y1 = MARGIN_TOP + plot_h,
            y2 = MARGIN_TOP + plot_h + 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{px:.2}" y="{y:.2}" text-anchor="middle" font-size="11">{label}</text>"#,
            y = MARGIN_TOP + plot_h + 18.0,
            label = tick_label(xv)
        );

        let yv = y_lo + frac * (y_hi - y_lo);
        let py = sy(yv);
        let _ = writeln!(
            svg,
            r##"<line x1="{x1:.2}" y1="{py:.2}" x2="{x2:.2}" y2="{py:.2}" stroke="#333" stroke-width="1"/>"##,
            x1 = MARGIN_LEFT - 5.0,
            x2 = MARGIN_LEFT
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x:.2}" y="{y:.2}" text-anchor="end" font-size="11">{label}</text>"#,
            x = MARGIN_LEFT - 8.0,
            y = py + 4.0,
            label = tick_label(yv)
        );
    }

    // Axis labels.
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        MARGIN_TOP + plot_h + 38.0,
        escape(&spec.x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{y:.2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 {y:.2})">{label}</text>"#,
        y = MARGIN_TOP + plot_h / 2.0,
        label = escape(&spec.y_label)
    );

    // Data lines.
    for (i, series) in spec.series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut points = String::new();
        for &(x, y) in &series.points {
            let _ = write!(
                points,
                "{}{:.2},{:.2}",
                if points.is_empty() { "" } else { " " },
                sx(x as f64),
                sy(y.to_f64().unwrap_or(0.0))
            );
        }
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>"#
        );
    }

    // Legend.
    for (i, series) in spec.series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let x = MARGIN_LEFT + plot_w + 14.0;
        let y = MARGIN_TOP + 14.0 + 20.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{color}" stroke-width="2"/>"#,
            x + 22.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-size="11">{}</text>"#,
            x + 28.0,
            y + 4.0,
            escape(&series.name)
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Data extent expanded by 5% on each side; zero spans widen by one unit.
fn padded_extent(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if lo > hi {
        return (0.0, 1.0);
    }
    if lo == hi {
        lo -= 1.0;
        hi += 1.0;
    }
    let margin = 0.05 * (hi - lo);
    (lo - margin, hi + margin)
}

fn tick_label(value: f64) -> String {
    format!("{value:.2}")
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}
