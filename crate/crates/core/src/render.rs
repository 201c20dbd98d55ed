//! SVG output.
//!
//! The y axis is flipped so counterclockwise in the plane stays
//! counterclockwise on screen. Coordinates are written with six decimals.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::convert::PentagonalTiling;
use crate::geom::{centroid, BBox, Point};
use crate::pentagon::{classify, ShapeClass};
use crate::subdivide::{subdivide_patch, Chirality};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Fill per `(n, chirality)`; families not listed get a generated color.
    pub palette: BTreeMap<(u32, Chirality), String>,
    /// Stroke width as a fraction of the (sub)rhombus side.
    pub stroke_width: f64,
    pub stroke_color: String,
    /// Color of the `DE` edge of trapezoids.
    pub e_edge_highlight: String,
    /// Draw `*` inside posterior trapezoids.
    pub asterisk: bool,
    /// Outline the rhombi (the pentagon diagonals `AC`) in red.
    pub show_rhombus_overlay: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            palette: BTreeMap::new(),
            stroke_width: 0.02,
            stroke_color: "#222222".into(),
            e_edge_highlight: "blue".into(),
            asterisk: true,
            show_rhombus_overlay: false,
        }
    }
}

impl RenderStyle {
    pub fn fill(&self, n: u32, chirality: Chirality) -> String {
        if let Some(c) = self.palette.get(&(n, chirality)) {
            return c.clone();
        }
        let hue = match n {
            4 => 45.0,
            5 => 200.0,
            6 => 120.0,
            8 => 280.0,
            10 => 20.0,
            12 => 330.0,
            _ => (n as f64 * 47.0) % 360.0,
        };
        let light = match chirality {
            Chirality::Anterior => 0.78,
            Chirality::Posterior => 0.60,
        };
        hsl_hex(hue, 0.55, light)
    }
}

fn hsl_hex(h: f64, s: f64, l: f64) -> String {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = h / 60.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    let byte = |v: f64| ((v + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    format!("#{:02x}{:02x}{:02x}", byte(r), byte(g), byte(b))
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn xy(p: Point) -> String {
    format!("{},{}", num(p.x), num(-p.y))
}

/// Renders one `<polygon>` per pentagon, blue `DE` edges on trapezoids,
/// asterisks on posterior trapezoids and optionally the rhombus outlines.
pub fn render_svg(tiling: &PentagonalTiling, style: &RenderStyle) -> String {
    let pts: Vec<Point> = tiling.pentagons.iter().flat_map(|p| p.vertices).collect();
    let bb = if pts.is_empty() {
        BBox {
            min: Point::new(-1.0, -1.0),
            max: Point::new(1.0, 1.0),
        }
    } else {
        BBox::of(&pts)
    };
    let pad = 0.03 * bb.width().max(bb.height()).max(1e-9);
    let (x0, y0) = (bb.min.x - pad, -bb.max.y - pad);
    let (w, h) = (bb.width() + 2.0 * pad, bb.height() + 2.0 * pad);
    let divisions = if tiling.division.u == 0 { 1 } else { 2 * tiling.division.u };
    let unit = tiling.source_patch.side_len / divisions as f64;
    let stroke = num(style.stroke_width * unit);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\">",
        num(x0),
        num(y0),
        num(w),
        num(h),
        (800.0 * h / w).round()
    );
    let _ = writeln!(
        s,
        "<g stroke=\"{}\" stroke-width=\"{stroke}\" stroke-linejoin=\"round\">",
        style.stroke_color
    );
    for p in &tiling.pentagons {
        let points: Vec<String> = p.vertices.iter().map(|&v| xy(v)).collect();
        let _ = writeln!(
            s,
            "<polygon points=\"{}\" fill=\"{}\"/>",
            points.join(" "),
            style.fill(p.n, p.chirality)
        );
    }
    s.push_str("</g>\n");

    let trapezoid = |n: u32| classify(n, tiling.theta) == Ok(ShapeClass::Trapezoid);
    let highlighted: Vec<_> = tiling.pentagons.iter().filter(|p| trapezoid(p.n)).collect();
    if !highlighted.is_empty() {
        let _ = writeln!(
            s,
            "<g stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\">",
            style.e_edge_highlight,
            num(2.0 * style.stroke_width * unit)
        );
        for p in &highlighted {
            let (d, e) = (p.vertices[3], p.vertices[4]);
            let _ = writeln!(
                s,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                num(d.x),
                num(-d.y),
                num(e.x),
                num(-e.y)
            );
        }
        s.push_str("</g>\n");
    }

    if style.asterisk {
        let marked: Vec<_> = tiling.pentagons.iter().filter(|p| p.posterior_mark).collect();
        if !marked.is_empty() {
            let _ = writeln!(
                s,
                "<g font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\" fill=\"#000000\">",
                num(0.5 * unit)
            );
            for p in marked {
                let c = centroid(&p.vertices);
                // baseline sits a little below the visual center of '*'
                let _ = writeln!(
                    s,
                    "<text x=\"{}\" y=\"{}\">*</text>",
                    num(c.x),
                    num(-c.y + 0.2 * unit)
                );
            }
            s.push_str("</g>\n");
        }
    }

    if style.show_rhombus_overlay {
        let (refined, _) = subdivide_patch(&tiling.source_patch, tiling.division);
        let mut d = String::new();
        for t in &refined.tiles {
            let c = t.corners;
            let _ = write!(d, "M{}L{}L{}L{}Z", xy(c[0]), xy(c[1]), xy(c[2]), xy(c[3]));
        }
        let _ = writeln!(
            s,
            "<path d=\"{d}\" fill=\"none\" stroke=\"red\" stroke-width=\"{stroke}\"/>"
        );
    }
    s.push_str("</svg>\n");
    s
}
