//! Deterministic SVG pictures of Russian arrays and θ-diagrams.
//!
//! Figures are built as a list of primitives in model coordinates (y up)
//! and serialized with fixed three-decimal formatting, so equal inputs give
//! byte-identical output.

use std::fmt::Write as _;

use crate::combinatorics::{Multipartition, Params};
use crate::cut::CutSpec;
use crate::exactpos::{ratio_to_f64, Position};
use crate::loading::node_position;
use crate::tableaux::{build_diagram, Tableau};

/// Pixels per model unit.
const SCALE: f64 = 24.0;
const MARGIN: f64 = 1.5;
/// Height of a θ-diagram in model units.
const DIAGRAM_HEIGHT: f64 = 8.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Box,
    Origin,
    Cut,
    Solid,
    Ghost,
    Red,
    Label,
}

impl Class {
    fn name(self) -> &'static str {
        match self {
            Class::Box => "box",
            Class::Origin => "origin",
            Class::Cut => "cut",
            Class::Solid => "solid",
            Class::Ghost => "ghost",
            Class::Red => "red",
            Class::Label => "label",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    Polygon { points: Vec<(f64, f64)>, class: Class },
    Line { from: (f64, f64), to: (f64, f64), class: Class },
    Circle { center: (f64, f64), radius: f64, class: Class },
    Text { at: (f64, f64), text: String, class: Class },
}

impl Primitive {
    pub fn class(&self) -> Class {
        match self {
            Primitive::Polygon { class, .. }
            | Primitive::Line { class, .. }
            | Primitive::Circle { class, .. }
            | Primitive::Text { class, .. } => *class,
        }
    }

    fn points(&self) -> Vec<(f64, f64)> {
        match self {
            Primitive::Polygon { points, .. } => points.clone(),
            Primitive::Line { from, to, .. } => vec![*from, *to],
            Primitive::Circle { center: (x, y), radius: r, .. } => vec![(x - r, y - r), (x + r, y + r)],
            Primitive::Text { at, .. } => vec![*at],
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Figure {
    pub primitives: Vec<Primitive>,
}

fn num(x: f64) -> String {
    let s = format!("{:.3}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".into()
    } else {
        s.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl Figure {
    fn push(&mut self, p: Primitive) {
        self.primitives.push(p);
    }

    pub fn count(&self, class: Class) -> usize {
        self.primitives.iter().filter(|p| p.class() == class).count()
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let mut b = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (x, y) in self.primitives.iter().flat_map(|p| p.points()) {
            b = (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y));
        }
        if b.0 > b.2 {
            (0.0, 0.0, 0.0, 0.0)
        } else {
            b
        }
    }

    pub fn to_svg(&self) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let px = |x: f64| num((x - x0 + MARGIN) * SCALE);
        let py = |y: f64| num((y1 - y + MARGIN) * SCALE);
        let width = num((x1 - x0 + 2.0 * MARGIN) * SCALE);
        let height = num((y1 - y0 + 2.0 * MARGIN) * SCALE);

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        out.push_str(concat!(
            "<style>",
            ".box{fill:none;stroke:#000;stroke-width:1}",
            ".origin{fill:#c00}",
            ".cut{stroke:#06c;stroke-width:1.5;stroke-dasharray:6 4}",
            ".solid{stroke:#000;stroke-width:1.5}",
            ".ghost{stroke:#777;stroke-width:1;stroke-dasharray:4 3}",
            ".red{stroke:#c00;stroke-width:2}",
            ".label{font-family:sans-serif;font-size:11px;text-anchor:middle;dominant-baseline:middle}",
            "</style>\n"
        ));
        for prim in &self.primitives {
            let class = prim.class().name();
            let _ = match prim {
                Primitive::Polygon { points, .. } => {
                    let pts: Vec<String> = points.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
                    writeln!(out, r#"<polygon class="{class}" points="{}"/>"#, pts.join(" "))
                }
                Primitive::Line { from, to, .. } => writeln!(
                    out,
                    r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    px(from.0),
                    py(from.1),
                    px(to.0),
                    py(to.1)
                ),
                Primitive::Circle { center, radius, .. } => writeln!(
                    out,
                    r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
                    px(center.0),
                    py(center.1),
                    num(radius * SCALE)
                ),
                Primitive::Text { at, text, .. } => {
                    writeln!(out, r#"<text class="{class}" x="{}" y="{}">{}</text>"#, px(at.0), py(at.1), escape(text))
                }
            };
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Horizontal offset used to draw one unit of ε.
fn eps_unit(p: &Params) -> f64 {
    0.02 * 2.0 * p.ell as f64
}

fn x_of(pos: &Position, p: &Params) -> f64 {
    pos.to_f64(eps_unit(p))
}

/// Russian array of `lambda`: node `(r,c,m)` is a diamond of diagonal `2ℓ`
/// whose bottom vertex is `(θ_m + ℓ(r−c), ℓ(r+c−2))`, nudged right by its ε.
/// Components are stacked with the first on top.
pub fn render_russian(lambda: &Multipartition, cut: Option<&CutSpec>, p: &Params) -> Figure {
    let ell = p.ell as f64;
    let gap = ell;
    let heights: Vec<f64> = lambda
        .components()
        .iter()
        .map(|part| {
            let top = part.iter().enumerate().map(|(i, &len)| (i + 1 + len) as f64).fold(2.0, f64::max);
            ell * top
        })
        .collect();

    let mut base = vec![0.0; lambda.level()];
    let mut y = 0.0;
    for m in (0..lambda.level()).rev() {
        base[m] = y;
        y += heights[m] + gap;
    }
    let total_height = (y - gap).max(0.0);

    let mut fig = Figure::default();
    for (m, &b) in base.iter().enumerate() {
        fig.push(Primitive::Circle { center: (p.theta[m] as f64, b), radius: 0.25, class: Class::Origin });
    }
    for node in lambda.nodes() {
        let pos = node_position(node, p);
        let x = x_of(&pos, p);
        let y = base[node.comp - 1] + ell * (node.row + node.col - 2) as f64;
        fig.push(Primitive::Polygon {
            points: vec![(x, y), (x + ell, y + ell), (x, y + 2.0 * ell), (x - ell, y + ell)],
            class: Class::Box,
        });
        fig.push(Primitive::Text { at: (x, y + ell), text: p.residue(node).0.to_string(), class: Class::Label });
    }
    if let Some(cut) = cut {
        let a = ratio_to_f64(cut.a());
        fig.push(Primitive::Line { from: (a, -0.5), to: (a, total_height + 0.5), class: Class::Cut });
    }
    fig
}

/// θ-diagram `C_T`: one solid strand per node from its loading position to
/// `T(node)`, its ghost shifted left by `ℓ`, and a red line per component.
pub fn render_theta_diagram(t: &Tableau, cut: Option<&CutSpec>, p: &Params) -> Figure {
    let d = build_diagram(t, p);
    let ell = p.ell as f64;
    let h = DIAGRAM_HEIGHT;
    let mut fig = Figure::default();
    for red in &d.reds {
        let x = x_of(&red.x, p);
        fig.push(Primitive::Line { from: (x, 0.0), to: (x, h), class: Class::Red });
        fig.push(Primitive::Text { at: (x, h + 0.6), text: red.label.0.to_string(), class: Class::Label });
    }
    for s in &d.strands {
        let (xb, xt) = (x_of(&s.bottom, p), x_of(&s.top, p));
        fig.push(Primitive::Line { from: (xb - ell, 0.0), to: (xt - ell, h), class: Class::Ghost });
    }
    for s in &d.strands {
        let (xb, xt) = (x_of(&s.bottom, p), x_of(&s.top, p));
        fig.push(Primitive::Line { from: (xb, 0.0), to: (xt, h), class: Class::Solid });
        fig.push(Primitive::Text { at: (xb, -0.6), text: s.label.0.to_string(), class: Class::Label });
    }
    if let Some(cut) = cut {
        let a = ratio_to_f64(cut.a());
        for x in [a, a - ell] {
            fig.push(Primitive::Line { from: (x, -1.0), to: (x, h + 1.0), class: Class::Cut });
        }
    }
    fig
}
