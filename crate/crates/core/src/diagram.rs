//! SVG diagrams: the design with its color-group elements, and the layer
//! group elements in the usual crystallographic glyphs.
//!
//! Every glyph carries a class naming its kind and side (`class="mirror s1"`),
//! so element counts can be read back from the document.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::analysis::{locate_element, AxisDir, ColorElement, ColorGroupAnalysis, ElementKind, Locus, Side};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::isometry::GridIsometry;
use crate::lattice::{HalfPoint, Hnf, IVec2};
use crate::layer::{LayerElement, LayerElementKind};

/// Rectangle in cell coordinates: `[x, x+w] x [y, y+h]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub x: i64,
    pub y: i64,
    pub w: i64,
    pub h: i64,
}

impl Window {
    pub fn new(x: i64, y: i64, w: i64, h: i64) -> Self {
        Window { x, y, w, h }
    }

    /// The smallest axis-aligned block of `lattice` at the origin.
    pub fn unit_cell(lattice: &Hnf) -> Self {
        let (w, h) = lattice.rect_block();
        Window { x: 0, y: 0, w, h }
    }

    fn contains(&self, p: HalfPoint) -> bool {
        let (x, y) = (p.x(), p.y());
        x >= self.x as f64 && x <= (self.x + self.w) as f64 && y >= self.y as f64 && y <= (self.y + self.h) as f64
    }

    /// Part of the line through `anchor` along `dir` inside the window, if it
    /// has positive length.
    fn clip(&self, anchor: HalfPoint, dir: AxisDir) -> Option<((f64, f64), (f64, f64))> {
        let u = dir.vector();
        let (px, py) = (anchor.x(), anchor.y());
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (p, d, a, b) in [
            (px, u.x as f64, self.x as f64, (self.x + self.w) as f64),
            (py, u.y as f64, self.y as f64, (self.y + self.h) as f64),
        ] {
            if d == 0.0 {
                if p < a || p > b {
                    return None;
                }
            } else {
                let (s0, s1) = ((a - p) / d, (b - p) / d);
                lo = lo.max(s0.min(s1));
                hi = hi.min(s0.max(s1));
            }
        }
        (hi - lo > 1e-9).then(|| ((px + lo * u.x as f64, py + lo * u.y as f64), (px + hi * u.x as f64, py + hi * u.y as f64)))
    }
}

#[derive(Clone, Debug)]
pub struct DiagramSpec {
    /// Pixels per unit square.
    pub cell_size: f64,
    /// Defaults to one rectangular cell of the color-preserving lattice.
    pub window: Option<Window>,
    pub black: String,
    pub white: String,
    pub s1_color: String,
    pub s2_color: String,
}

impl Default for DiagramSpec {
    fn default() -> Self {
        DiagramSpec {
            cell_size: 32.0,
            window: None,
            black: "#222222".into(),
            white: "#ffffff".into(),
            s1_color: "red".into(),
            s2_color: "blue".into(),
        }
    }
}

impl DiagramSpec {
    fn resolve_window(&self, lattice: &Hnf) -> Result<Window> {
        let w = self.window.unwrap_or_else(|| Window::unit_cell(lattice));
        if w.w <= 0 || w.h <= 0 {
            return Err(Error::Diagram(format!("empty window {}x{}", w.w, w.h)));
        }
        Ok(w)
    }

    fn side_color(&self, side: Side) -> &str {
        match side {
            Side::S1 => &self.s1_color,
            Side::S2 => &self.s2_color,
        }
    }
}

/// One located element meeting the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Instance {
    pub kind: ElementKind,
    pub side: Side,
    pub locus: Locus,
}

/// All elements of the records' cosets (translates by `lattice`) that meet
/// the window: rotation centers inside it, axes crossing it. Translations are
/// left out.
pub fn instances(records: &[(GridIsometry, Side)], lattice: &Hnf, window: Window) -> Vec<Instance> {
    let (rw, rh) = lattice.rect_block();
    let margin = 2 * (rw + rh) + 2;
    let mut found = BTreeSet::new();
    for &(g, side) in records {
        if g.op == crate::isometry::PointOp::I {
            continue;
        }
        let (x0, x1) = (2 * window.x - g.t.x - margin, 2 * (window.x + window.w) - g.t.x + margin);
        let (y0, y1) = (2 * window.y - g.t.y - margin, 2 * (window.y + window.h) - g.t.y + margin);
        for vy in y0..=y1 {
            for vx in x0..=x1 {
                let v = IVec2::new(vx, vy);
                if !lattice.contains(v) {
                    continue;
                }
                let e = locate_element(&GridIsometry::new(g.op, g.t + v), lattice).expect("not the identity");
                let inside = match e.locus {
                    Locus::Center(c) => window.contains(c),
                    Locus::Axis { dir, anchor } => window.clip(anchor, dir).is_some(),
                    Locus::Vector(_) => false,
                };
                if inside {
                    found.insert(Instance { kind: e.kind, side, locus: e.locus });
                }
            }
        }
    }
    found.into_iter().collect()
}

fn records_of(elements: &[ColorElement]) -> Vec<(GridIsometry, Side)> {
    elements.iter().map(|e| (e.iso, e.side)).collect()
}

struct Canvas {
    out: String,
    window: Window,
    cs: f64,
    pad: f64,
}

impl Canvas {
    fn new(window: Window, cs: f64, title: &str) -> Self {
        let pad = cs / 2.0;
        let (w, h) = (window.w as f64 * cs + 2.0 * pad, window.h as f64 * cs + 2.0 * pad);
        let mut out = String::new();
        writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        )
        .unwrap();
        writeln!(out, "<title>{}</title>", escape(title)).unwrap();
        Canvas { out, window, cs, pad }
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.window.x as f64) * self.cs + self.pad
    }

    fn py(&self, y: f64) -> f64 {
        (y - self.window.y as f64) * self.cs + self.pad
    }

    fn raster(&mut self, d: &Design, black: &str, white: &str) {
        self.out.push_str("<g class=\"raster\">\n");
        for j in self.window.y..self.window.y + self.window.h {
            for i in self.window.x..self.window.x + self.window.w {
                let (fill, tone) = if d.get(i, j) == 1 { (black, "black") } else { (white, "white") };
                let (x, y) = (self.px(i as f64), self.py(j as f64));
                writeln!(
                    self.out,
                    r#"<rect class="cell {tone}" x="{x:.2}" y="{y:.2}" width="{cs:.2}" height="{cs:.2}" fill="{fill}" stroke="gray" stroke-width="0.5"/>"#,
                    cs = self.cs
                )
                .unwrap();
            }
        }
        self.out.push_str("</g>\n");
    }

    fn frame(&mut self) {
        let (x, y) = (self.px(self.window.x as f64), self.py(self.window.y as f64));
        let (w, h) = (self.window.w as f64 * self.cs, self.window.h as f64 * self.cs);
        writeln!(
            self.out,
            r#"<rect class="frame" x="{x:.2}" y="{y:.2}" width="{w:.2}" height="{h:.2}" fill="none" stroke="gray" stroke-width="1"/>"#
        )
        .unwrap();
    }

    fn line(&mut self, class: &str, (a, b): ((f64, f64), (f64, f64)), color: &str, extra: &str) {
        writeln!(
            self.out,
            r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"{extra}/>"#,
            self.px(a.0),
            self.py(a.1),
            self.px(b.0),
            self.py(b.1)
        )
        .unwrap();
    }

    /// Two-fold marker: a lens elongated along x.
    fn lens(&mut self, class: &str, c: HalfPoint, fill: &str) {
        let (x, y) = (self.px(c.x()), self.py(c.y()));
        let r = self.cs * 0.18;
        writeln!(
            self.out,
            r#"<path class="{class}" d="M {:.2} {y:.2} A {R:.2} {R:.2} 0 0 1 {:.2} {y:.2} A {R:.2} {R:.2} 0 0 1 {:.2} {y:.2} Z" fill="{fill}"/>"#,
            x - r,
            x + r,
            x - r,
            R = r * 1.25
        )
        .unwrap();
    }

    fn square(&mut self, class: &str, c: HalfPoint, fill: &str) {
        let s = self.cs * 0.3;
        writeln!(
            self.out,
            r#"<rect class="{class}" x="{:.2}" y="{:.2}" width="{s:.2}" height="{s:.2}" fill="{fill}"/>"#,
            self.px(c.x()) - s / 2.0,
            self.py(c.y()) - s / 2.0
        )
        .unwrap();
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn side_class(side: Side) -> &'static str {
    match side {
        Side::S1 => "s1",
        Side::S2 => "s2",
    }
}

/// The design with its color-group elements drawn over it, red for
/// side-preserving and blue for side-reversing.
pub fn emit_color_group_svg(d: &Design, a: &ColorGroupAnalysis, spec: &DiagramSpec) -> Result<String> {
    let window = spec.resolve_window(a.lattice())?;
    let mut c = Canvas::new(window, spec.cell_size, "color group diagram");
    c.raster(d, &spec.black, &spec.white);
    c.out.push_str("<g class=\"elements\">\n");
    for inst in instances(&records_of(&a.elements), a.lattice(), window) {
        let color = spec.side_color(inst.side);
        let side = side_class(inst.side);
        match (inst.kind, inst.locus) {
            (ElementKind::Mirror, Locus::Axis { dir, anchor }) => {
                c.line(&format!("mirror {side}"), window.clip(anchor, dir).unwrap(), color, "")
            }
            (ElementKind::Glide, Locus::Axis { dir, anchor }) => c.line(
                &format!("glide {side}"),
                window.clip(anchor, dir).unwrap(),
                color,
                r#" stroke-dasharray="6 4""#,
            ),
            (ElementKind::Rotation2, Locus::Center(p)) => c.lens(&format!("rot2 {side}"), p, color),
            (ElementKind::Rotation4, Locus::Center(p)) => c.square(&format!("rot4 {side}"), p, color),
            _ => {}
        }
    }
    c.out.push_str("</g>\n");
    Ok(c.finish())
}

/// In-window instances of the lifted elements, each with its layer kind.
pub fn layer_instances(inv: &[LayerElement], lattice: &Hnf, window: Window) -> Vec<(LayerElementKind, Instance)> {
    let records: Vec<(GridIsometry, Side)> = inv.iter().filter_map(|e| e.source.map(|g| (g, e.side))).collect();
    let mut out: Vec<(LayerElementKind, Instance)> = instances(&records, lattice, window)
        .into_iter()
        .map(|i| (LayerElementKind::lift(i.kind, i.side), i))
        .collect();
    // a side-reversing translation is a glide plane through the whole layer
    if let Some(e) = inv.iter().find(|e| e.kind == LayerElementKind::GlidePlaneThroughP) {
        out.push((
            LayerElementKind::GlidePlaneThroughP,
            Instance { kind: ElementKind::Translation, side: Side::S2, locus: e.element.locus },
        ));
    }
    out
}

fn layer_class(kind: LayerElementKind) -> &'static str {
    match kind {
        LayerElementKind::Translation => "translation",
        LayerElementKind::GlidePlaneThroughP => "glide-plane-p",
        LayerElementKind::MirrorPlaneNormal => "mirror",
        LayerElementKind::GlidePlaneNormal => "glide",
        LayerElementKind::Axis2Normal => "rot2",
        LayerElementKind::Axis2InPlane => "axis2-inplane",
        LayerElementKind::Screw2InPlane => "screw2",
        LayerElementKind::InversionCenter => "inversion",
        LayerElementKind::Axis4Normal => "rot4",
        LayerElementKind::Rotoinversion4Normal => "rotoinversion4",
    }
}

const MARKERS: &str = r#"<defs>
<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 Z" fill="black"/></marker>
<marker id="half-arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 5 Z" fill="black"/></marker>
</defs>
"#;

/// Layer-group diagram over one window of `lattice`, optionally on top of the design.
pub fn emit_layer_svg(inv: &[LayerElement], lattice: &Hnf, design: Option<&Design>, spec: &DiagramSpec) -> Result<String> {
    let window = spec.resolve_window(lattice)?;
    let mut c = Canvas::new(window, spec.cell_size, "layer group diagram");
    c.out.push_str(MARKERS);
    if let Some(d) = design {
        c.raster(d, "#dddddd", &spec.white);
    }
    c.frame();
    c.out.push_str("<g class=\"elements\">\n");
    for (kind, inst) in layer_instances(inv, lattice, window) {
        let class = format!("{} {}", layer_class(kind), side_class(inst.side));
        match (kind, inst.locus) {
            (LayerElementKind::MirrorPlaneNormal, Locus::Axis { dir, anchor }) => {
                c.line(&class, window.clip(anchor, dir).unwrap(), "black", "")
            }
            (LayerElementKind::GlidePlaneNormal, Locus::Axis { dir, anchor }) => {
                c.line(&class, window.clip(anchor, dir).unwrap(), "black", r#" stroke-dasharray="6 4""#)
            }
            (LayerElementKind::Axis2InPlane, Locus::Axis { dir, anchor }) => c.line(
                &class,
                window.clip(anchor, dir).unwrap(),
                "black",
                r#" marker-start="url(#arrow)" marker-end="url(#arrow)""#,
            ),
            (LayerElementKind::Screw2InPlane, Locus::Axis { dir, anchor }) => c.line(
                &class,
                window.clip(anchor, dir).unwrap(),
                "black",
                r#" marker-start="url(#half-arrow)" marker-end="url(#half-arrow)""#,
            ),
            (LayerElementKind::Axis2Normal, Locus::Center(p)) => c.lens(&class, p, "black"),
            (LayerElementKind::Axis4Normal, Locus::Center(p)) => c.square(&class, p, "black"),
            (LayerElementKind::InversionCenter, Locus::Center(p)) => {
                writeln!(
                    c.out,
                    r#"<circle class="{class}" cx="{:.2}" cy="{:.2}" r="{:.2}" fill="white" stroke="black" stroke-width="1.5"/>"#,
                    c.px(p.x()),
                    c.py(p.y()),
                    c.cs * 0.12
                )
                .unwrap();
            }
            (LayerElementKind::Rotoinversion4Normal, Locus::Center(p)) => {
                let s = c.cs * 0.3;
                let (x, y) = (c.px(p.x()), c.py(p.y()));
                writeln!(
                    c.out,
                    r#"<g class="{class}"><rect x="{:.2}" y="{:.2}" width="{s:.2}" height="{s:.2}" fill="white" stroke="black"/><ellipse cx="{x:.2}" cy="{y:.2}" rx="{:.2}" ry="{:.2}" fill="black"/></g>"#,
                    x - s / 2.0,
                    y - s / 2.0,
                    s * 0.35,
                    s * 0.18
                )
                .unwrap();
            }
            (LayerElementKind::GlidePlaneThroughP, _) => {
                // corner symbol: a bent arrow for the glide parallel to the layer
                let (x, y) = (c.px(window.x as f64) - c.pad * 0.8, c.py(window.y as f64) - c.pad * 0.8);
                let l = c.pad * 0.6;
                writeln!(
                    c.out,
                    r#"<path class="{class}" d="M {x:.2} {:.2} L {x:.2} {y:.2} L {:.2} {y:.2}" fill="none" stroke="black" stroke-width="1.5" marker-end="url(#arrow)"/>"#,
                    y + l,
                    x + l
                )
                .unwrap();
            }
            _ => {}
        }
    }
    c.out.push_str("</g>\n");
    Ok(c.finish())
}
