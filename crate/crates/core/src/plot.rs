//! Deterministic SVG rendering of the (d, n)-plane for one variety:
//! the two parabolas, the splitting line e(m) = 0, the degree
//! thresholds, and the region shading of the classification taxonomy.
//!
//! Rendering is the one place where floating point is allowed: the
//! lower parabola needs cos(pi/(p-1)) and is drawn, never decided on.
//! Output is byte-identical across runs for identical inputs; all
//! coordinates are written with fixed 6-decimal precision and element
//! order is fixed.

use std::fmt::Write as _;

use crate::plane::degree_lower_bound;
use crate::roots::{invariants, VarietyDescriptor};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct PlotOptions {
    /// Right edge of the d axis; defaults to max(2 m^2, 16).
    pub d_max: Option<u64>,
    pub width: u32,
    pub height: u32,
    /// Optional (d, n) point to mark on the plane.
    pub mark: Option<(u64, u64)>,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            d_max: None,
            width: 720,
            height: 520,
            mark: None,
        }
    }
}

const MARGIN_LEFT: f64 = 56.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 28.0;
const MARGIN_BOTTOM: f64 = 48.0;
const SAMPLES: u32 = 256;

fn fmt(x: f64) -> String {
    // Avoid the two distinct zero encodings ("0.000000" vs "-0.000000").
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.6}")
}

struct Frame {
    d_max: f64,
    n_max: f64,
    x0: f64,
    y0: f64,
    plot_w: f64,
    plot_h: f64,
}

impl Frame {
    fn x(&self, d: f64) -> f64 {
        self.x0 + d / self.d_max * self.plot_w
    }

    fn y(&self, n: f64) -> f64 {
        self.y0 - n / self.n_max * self.plot_h
    }

    fn point(&self, d: f64, n: f64) -> String {
        format!("{},{}", fmt(self.x(d)), fmt(self.y(n)))
    }
}

fn polyline(frame: &Frame, pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|&(d, n)| frame.point(d, n))
        .collect::<Vec<_>>()
        .join(" ")
}

fn sample_parabola(scale: f64, d_from: f64, d_to: f64) -> Vec<(f64, f64)> {
    (0..=SAMPLES)
        .map(|i| {
            let d = d_from + (d_to - d_from) * f64::from(i) / f64::from(SAMPLES);
            (d, scale * d.sqrt())
        })
        .collect()
}

/// Renders the (d, n)-plane of the given variety as standalone SVG 1.1.
///
/// Fails with `DataUnavailable` when the variety has no tabulated
/// m, p or sp value (it is then unplottable).
pub fn plane_svg(desc: &VarietyDescriptor, opts: &PlotOptions) -> Result<String> {
    let inv = invariants(desc)?;
    if inv.sp.is_none() {
        return Err(Error::DataUnavailable(format!(
            "no sp value for {desc}; the degree bound line cannot be placed"
        )));
    }
    if inv.m < 1 {
        return Err(Error::Precondition(format!(
            "plot needs m >= 1, but {desc} has m = {}",
            inv.m
        )));
    }
    let m = inv.m as f64;
    let p = f64::from(inv.p.value);
    let bound = degree_lower_bound(&inv, false)?;
    let bound_f = bound_to_f64(&bound);

    let d_max = opts.d_max.unwrap_or_else(|| ((2.0 * m * m) as u64).max(16)) as f64;
    let line = |d: f64| d / m + m;
    let n_max = (2.0 * d_max.sqrt()).max(line(d_max)).max(2.0 * m) * 1.08;
    let frame = Frame {
        d_max,
        n_max,
        x0: MARGIN_LEFT,
        y0: f64::from(opts.height) - MARGIN_BOTTOM,
        plot_w: f64::from(opts.width) - MARGIN_LEFT - MARGIN_RIGHT,
        plot_h: f64::from(opts.height) - MARGIN_TOP - MARGIN_BOTTOM,
    };

    let cos_tmax = (std::f64::consts::PI / (p - 1.0)).cos();
    let upper = sample_parabola(2.0, 0.0, d_max);
    let lower = sample_parabola(2.0 * cos_tmax, 0.0, d_max);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(svg, "<title>(d, n)-plane for {desc}</title>");
    svg.push_str(PATTERN_DEFS);

    // Region shading, drawn back to front.
    // e(m) <= 0 above the line: horizontal-stripe pattern.
    {
        let mut pts: Vec<(f64, f64)> = Vec::new();
        pts.push((0.0, m));
        if line(d_max) <= n_max {
            pts.push((d_max, line(d_max)));
            pts.push((d_max, n_max));
        } else {
            let d_hit = (n_max - m) * m;
            pts.push((d_hit, n_max));
        }
        pts.push((0.0, n_max));
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="url(#horiz)" stroke="none"/>"#,
            polyline(&frame, &pts)
        );
    }
    // Both splitting branches: grid pattern between the line and n = 2m.
    {
        let dm = (m * m).min(d_max);
        let pts = vec![(0.0, m), (dm, line(dm)), (dm, 2.0 * m), (0.0, 2.0 * m)];
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="url(#grid)" stroke="none"/>"#,
            polyline(&frame, &pts)
        );
    }
    // n low branch only: vertical stripes between the upper parabola
    // and the line, left of the tangency.
    {
        let dm = (m * m).min(d_max);
        let mut pts = sample_parabola(2.0, 0.0, dm);
        pts.push((dm, line(dm)));
        pts.push((0.0, m));
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="url(#vert)" stroke="none"/>"#,
            polyline(&frame, &pts)
        );
    }
    // Undecided comet body: checkerboard between the parabolas, right
    // of the degree bound.
    if bound_f < d_max {
        let mut pts = sample_parabola(2.0 * cos_tmax, bound_f, d_max);
        let mut back = sample_parabola(2.0, bound_f, d_max);
        back.reverse();
        pts.extend(back);
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="url(#checker)" stroke="none"/>"#,
            polyline(&frame, &pts)
        );
    }

    // Axes.
    let _ = writeln!(
        svg,
        r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black" stroke-width="1"/>"#,
        x0 = fmt(frame.x(0.0)),
        y0 = fmt(frame.y(0.0)),
        x1 = fmt(frame.x(d_max)),
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black" stroke-width="1"/>"#,
        x0 = fmt(frame.x(0.0)),
        y0 = fmt(frame.y(0.0)),
        y1 = fmt(frame.y(n_max)),
    );

    // Curves.
    let _ = writeln!(
        svg,
        r##"<polyline points="{}" fill="none" stroke="#1f4e79" stroke-width="1.5"/>"##,
        polyline(&frame, &upper)
    );
    let _ = writeln!(
        svg,
        r##"<polyline points="{}" fill="none" stroke="#7a1f2b" stroke-width="1.5"/>"##,
        polyline(&frame, &lower)
    );
    let line_end = line(d_max).min(n_max);
    let line_end_d = if line(d_max) <= n_max {
        d_max
    } else {
        (n_max - m) * m
    };
    let _ = writeln!(
        svg,
        r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#2d6a4f" stroke-width="1.5"/>"##,
        fmt(frame.x(0.0)),
        fmt(frame.y(m)),
        fmt(frame.x(line_end_d)),
        fmt(frame.y(line_end))
    );

    // Vertical markers: d = m^2 (solid) and the degree bound (dashed).
    if m * m <= d_max {
        let _ = writeln!(
            svg,
            r#"<line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="black" stroke-width="1.2"/>"#,
            x = fmt(frame.x(m * m)),
            y0 = fmt(frame.y(0.0)),
            y1 = fmt(frame.y(n_max)),
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x}" y="{y}" font-size="12" text-anchor="middle">d = m^2</text>"#,
            x = fmt(frame.x(m * m)),
            y = fmt(frame.y(0.0) + 16.0),
        );
    }
    if bound_f <= d_max {
        let _ = writeln!(
            svg,
            r##"<line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="#555555" stroke-width="1.2" stroke-dasharray="6 4"/>"##,
            x = fmt(frame.x(bound_f)),
            y0 = fmt(frame.y(0.0)),
            y1 = fmt(frame.y(n_max)),
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x}" y="{y}" font-size="12" text-anchor="middle">degree bound {b}</text>"#,
            x = fmt(frame.x(bound_f)),
            y = fmt(frame.y(n_max) - 8.0),
            b = bound,
        );
    }

    // Tangency marker (m^2, 2m).
    if m * m <= d_max {
        let _ = writeln!(
            svg,
            r#"<circle cx="{x}" cy="{y}" r="3.5" fill="black"/>"#,
            x = fmt(frame.x(m * m)),
            y = fmt(frame.y(2.0 * m)),
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x}" y="{y}" font-size="12">(m^2, 2m)</text>"#,
            x = fmt(frame.x(m * m) + 6.0),
            y = fmt(frame.y(2.0 * m) - 6.0),
        );
    }

    // Caller-supplied point of interest.
    if let Some((pd, pn)) = opts.mark {
        let (pd, pn) = (pd as f64, pn as f64);
        if pd <= d_max && pn <= n_max {
            let _ = writeln!(
                svg,
                r##"<circle cx="{x}" cy="{y}" r="4.5" fill="none" stroke="#c1121f" stroke-width="2"/>"##,
                x = fmt(frame.x(pd)),
                y = fmt(frame.y(pn)),
            );
        }
    }

    // Axis and curve labels.
    let _ = writeln!(
        svg,
        r#"<text x="{x}" y="{y}" font-size="13" text-anchor="end">d</text>"#,
        x = fmt(frame.x(d_max)),
        y = fmt(frame.y(0.0) + 32.0),
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x}" y="{y}" font-size="13">n</text>"#,
        x = fmt(frame.x(0.0) - 24.0),
        y = fmt(frame.y(n_max) + 4.0),
    );
    let _ = writeln!(
        svg,
        r##"<text x="{x}" y="{y}" font-size="12" fill="#1f4e79">n = 2 sqrt(d)</text>"##,
        x = fmt(frame.x(d_max * 0.72)),
        y = fmt(frame.y(2.0 * (d_max * 0.72).sqrt()) - 8.0),
    );
    let _ = writeln!(
        svg,
        r##"<text x="{x}" y="{y}" font-size="12" fill="#7a1f2b">n = 2 cos(pi/(p-1)) sqrt(d)</text>"##,
        x = fmt(frame.x(d_max * 0.55)),
        y = fmt(frame.y(2.0 * cos_tmax * (d_max * 0.55).sqrt()) + 16.0),
    );
    let _ = writeln!(
        svg,
        r##"<text x="{x}" y="{y}" font-size="12" fill="#2d6a4f">e(m) = 0: n = d/m + m</text>"##,
        x = fmt(frame.x(d_max * 0.05)),
        y = fmt(frame.y(line(d_max * 0.05)) - 8.0),
    );

    svg.push_str("</svg>\n");
    Ok(svg)
}

fn bound_to_f64(bound: &crate::exact::Rational) -> f64 {
    use num_traits::ToPrimitive;
    bound.to_f64().unwrap_or(f64::MAX)
}

const PATTERN_DEFS: &str = r##"<defs>
<pattern id="horiz" width="8" height="8" patternUnits="userSpaceOnUse">
<line x1="0" y1="4" x2="8" y2="4" stroke="#9db8d2" stroke-width="1"/>
</pattern>
<pattern id="vert" width="8" height="8" patternUnits="userSpaceOnUse">
<line x1="4" y1="0" x2="4" y2="8" stroke="#9dd2b4" stroke-width="1"/>
</pattern>
<pattern id="grid" width="8" height="8" patternUnits="userSpaceOnUse">
<line x1="0" y1="4" x2="8" y2="4" stroke="#b5a6cc" stroke-width="1"/>
<line x1="4" y1="0" x2="4" y2="8" stroke="#b5a6cc" stroke-width="1"/>
</pattern>
<pattern id="checker" width="10" height="10" patternUnits="userSpaceOnUse">
<rect x="0" y="0" width="5" height="5" fill="#d8c9a3"/>
<rect x="5" y="5" width="5" height="5" fill="#d8c9a3"/>
</pattern>
</defs>
"##;
