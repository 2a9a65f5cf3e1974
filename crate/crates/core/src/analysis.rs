//! Color group of a design, its split into side-preserving and side-reversing
//! parts, and the geometric location of every symmetry element.

use std::fmt;

use serde::Serialize;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::isometry::{action_over, Chi, GridIsometry, PointOp};
use crate::lattice::{gcd, HalfPoint, Hnf, IVec2};

/// Whether a symmetry keeps the front of the weave in front (S1) or turns it over (S2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    S1,
    S2,
}

/// S1 exactly when the color action agrees with the direction action.
///
/// A side-preserving symmetry that swaps warp and weft directions turns
/// "weft on top" into "warp on top" and so swaps colors; turning the weave
/// over flips the colors once more.
pub fn side_split_rule(chi: Chi, delta: i8) -> Side {
    if chi.sign() * delta > 0 {
        Side::S1
    } else {
        Side::S2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisDir {
    Horizontal,
    Vertical,
    Diagonal,
    AntiDiagonal,
}

impl AxisDir {
    pub fn vector(self) -> IVec2 {
        match self {
            AxisDir::Horizontal => IVec2::new(1, 0),
            AxisDir::Vertical => IVec2::new(0, 1),
            AxisDir::Diagonal => IVec2::new(1, 1),
            AxisDir::AntiDiagonal => IVec2::new(1, -1),
        }
    }

    pub fn of_reflection(op: PointOp) -> Option<AxisDir> {
        match op {
            PointOp::MX => Some(AxisDir::Horizontal),
            PointOp::MY => Some(AxisDir::Vertical),
            PointOp::MD => Some(AxisDir::Diagonal),
            PointOp::MA => Some(AxisDir::AntiDiagonal),
            _ => None,
        }
    }

    pub fn is_axial(self) -> bool {
        matches!(self, AxisDir::Horizontal | AxisDir::Vertical)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Translation,
    Rotation2,
    Rotation4,
    Mirror,
    Glide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Locus {
    Vector(IVec2),
    Center(HalfPoint),
    /// The line through `anchor` with direction `dir`; anchors lie on `y = 0`
    /// except for horizontal axes, which are anchored on `x = 0`.
    Axis { dir: AxisDir, anchor: HalfPoint },
}

/// Which kinds of axes occur among all lattice translates of one reflection coset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AxisFamily {
    pub mirrors: bool,
    pub glides: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SymmetryElement2D {
    pub kind: ElementKind,
    pub locus: Locus,
    /// Glide component along the axis, reduced modulo the lattice period of the axis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub glide_vector: Option<HalfPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<AxisFamily>,
}

impl SymmetryElement2D {
    pub fn identity() -> Self {
        SymmetryElement2D {
            kind: ElementKind::Translation,
            locus: Locus::Vector(IVec2::ZERO),
            glide_vector: None,
            family: None,
        }
    }
}

/// Reflection `g` written as reflection in an axis followed by a glide along it.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ReflectionParts {
    pub dir: AxisDir,
    pub anchor: HalfPoint,
    /// Twice the glide component measured in units of `dir.vector()`.
    pub glide2: i64,
}

pub(crate) fn glide2_of(op: PointOp, t: IVec2) -> i64 {
    match op {
        PointOp::MX => 2 * t.x,
        PointOp::MY => 2 * t.y,
        PointOp::MD => t.x + t.y,
        PointOp::MA => t.x - t.y,
        _ => panic!("{op} is not a reflection"),
    }
}

pub(crate) fn reflection_parts(g: &GridIsometry) -> ReflectionParts {
    let t = g.t;
    let dir = AxisDir::of_reflection(g.op).expect("reflection");
    let anchor = match g.op {
        PointOp::MX => HalfPoint::from_doubled(0, t.y),
        PointOp::MY => HalfPoint::from_doubled(t.x, 0),
        PointOp::MD => HalfPoint::from_doubled(t.x - t.y, 0),
        _ => HalfPoint::from_doubled(t.x + t.y, 0),
    };
    ReflectionParts { dir, anchor, glide2: glide2_of(g.op, t) }
}

/// Fixed point of a rotation, doubled.
pub(crate) fn rotation_center(g: &GridIsometry) -> HalfPoint {
    let t = g.t;
    match g.op {
        PointOp::R180 => HalfPoint::from_doubled(t.x, t.y),
        PointOp::R90 => HalfPoint::from_doubled(t.x - t.y, t.x + t.y),
        PointOp::R270 => HalfPoint::from_doubled(t.x + t.y, t.y - t.x),
        op => panic!("{op} is not a rotation"),
    }
}

/// Kinds of axes among the translates of a reflection coset `g + L`.
pub(crate) fn axis_family(g: &GridIsometry, lattice: &Hnf) -> AxisFamily {
    let dir = AxisDir::of_reflection(g.op).expect("reflection");
    let [v0, v1] = lattice.basis();
    let step = gcd(glide2_of(g.op, v0), glide2_of(g.op, v1));
    let per_axis = 2 * lattice.line_period(dir.vector());
    let s = glide2_of(g.op, g.t);
    AxisFamily {
        mirrors: s.rem_euclid(step) == 0,
        glides: step < per_axis || s.rem_euclid(per_axis) != 0,
    }
}

/// Locates the geometric element of `g` relative to the translation lattice `lattice`.
pub fn locate_element(g: &GridIsometry, lattice: &Hnf) -> Result<SymmetryElement2D> {
    if g.is_identity() {
        return Err(Error::Internal("the identity has no symmetry element".into()));
    }
    Ok(match g.op {
        PointOp::I => SymmetryElement2D {
            kind: ElementKind::Translation,
            locus: Locus::Vector(g.t),
            glide_vector: None,
            family: None,
        },
        PointOp::R180 | PointOp::R90 | PointOp::R270 => SymmetryElement2D {
            kind: if g.op == PointOp::R180 { ElementKind::Rotation2 } else { ElementKind::Rotation4 },
            locus: Locus::Center(rotation_center(g)),
            glide_vector: None,
            family: None,
        },
        _ => {
            let parts = reflection_parts(g);
            let per_axis = 2 * lattice.line_period(parts.dir.vector());
            let s = parts.glide2.rem_euclid(per_axis);
            let u = parts.dir.vector();
            SymmetryElement2D {
                kind: if s == 0 { ElementKind::Mirror } else { ElementKind::Glide },
                locus: Locus::Axis { dir: parts.dir, anchor: parts.anchor },
                glide_vector: (s != 0).then(|| HalfPoint::from_doubled(s * u.x, s * u.y)),
                family: Some(axis_family(g, lattice)),
            }
        }
    })
}

/// Color-preserving translations and, when present, the coset of color-swapping ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TranslationLattices {
    #[serde(serialize_with = "ser_hnf")]
    pub preserve_basis: Hnf,
    pub swap_rep: Option<IVec2>,
}

fn ser_hnf<S: serde::Serializer>(h: &Hnf, s: S) -> std::result::Result<S::Ok, S::Error> {
    h.matrix().serialize(s)
}

impl TranslationLattices {
    /// Translation lattice of the whole color group.
    pub fn full(&self) -> Hnf {
        match self.swap_rep {
            Some(v) => self.preserve_basis.extend(v),
            None => self.preserve_basis,
        }
    }
}

pub fn translation_lattices(d: &Design) -> TranslationLattices {
    let (w, h) = (d.width() as i64, d.height() as i64);
    let block: Vec<IVec2> = (0..h).flat_map(|j| (0..w).map(move |i| IVec2::new(i, j))).collect();
    let mut preserve = vec![IVec2::new(w, 0), IVec2::new(0, h)];
    let mut swap = None;
    for &t in &block {
        if t == IVec2::ZERO {
            continue;
        }
        match action_over(&GridIsometry::translation(t), d, block.iter().copied()) {
            Some(Chi::Preserve) => preserve.push(t),
            Some(Chi::Swap) => {
                swap.get_or_insert(t);
            }
            None => {}
        }
    }
    let preserve_basis = Hnf::from_generators(preserve).expect("block periods span Z²");
    TranslationLattices { preserve_basis, swap_rep: swap.map(|t| preserve_basis.reduce(t)) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorElement {
    pub iso: GridIsometry,
    pub chi: Chi,
    pub side: Side,
    pub element: SymmetryElement2D,
}

impl Serialize for ColorElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Repr<'a> {
            point_op: PointOp,
            t: IVec2,
            chi: Chi,
            side: Side,
            element: &'a SymmetryElement2D,
        }
        Repr { point_op: self.iso.op, t: self.iso.t, chi: self.chi, side: self.side, element: &self.element }.serialize(s)
    }
}

impl ColorElement {
    pub fn t(&self) -> IVec2 {
        self.iso.t
    }
}

impl fmt::Display for ColorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?} {:?} {:?}", self.iso, self.chi, self.side, self.element.kind)
    }
}

/// The color group modulo color-preserving translations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorGroupAnalysis {
    pub lattices: TranslationLattices,
    /// One record per coset of the color-preserving lattice, identity first.
    pub elements: Vec<ColorElement>,
    /// The design presented on the smallest rectangular block of its period lattice.
    pub design: Design,
}

impl ColorGroupAnalysis {
    pub fn lattice(&self) -> &Hnf {
        &self.lattices.preserve_basis
    }

    pub fn side(&self, side: Side) -> impl Iterator<Item = &ColorElement> {
        self.elements.iter().filter(move |e| e.side == side)
    }

    pub fn has_s2(&self) -> bool {
        self.elements.iter().any(|e| e.side == Side::S2)
    }

    /// Coset representatives of the whole color group modulo its own translation lattice.
    pub fn s_cosets(&self) -> (Hnf, Vec<GridIsometry>) {
        let full = self.lattices.full();
        let mut reps: Vec<GridIsometry> = self
            .elements
            .iter()
            .map(|e| GridIsometry::new(e.iso.op, full.reduce(e.iso.t)))
            .collect();
        reps.sort();
        reps.dedup();
        (full, reps)
    }

    pub fn s1_cosets(&self) -> Vec<GridIsometry> {
        self.side(Side::S1).map(|e| e.iso).collect()
    }

    pub fn has_rotation4(&self) -> bool {
        self.elements.iter().any(|e| e.element.kind == ElementKind::Rotation4)
    }

    /// Looks up the record for the coset of `g`.
    pub fn find(&self, g: &GridIsometry) -> Option<&ColorElement> {
        let t = self.lattice().reduce(g.t);
        self.elements.iter().find(|e| e.iso.op == g.op && e.iso.t == t)
    }
}

/// Computes the color group, side tags and element locations of `d`.
pub fn color_group(d: &Design) -> ColorGroupAnalysis {
    let lattices = translation_lattices(d);
    let lattice = lattices.preserve_basis;
    let domain: Vec<IVec2> = lattice.transversal().collect();
    let mut elements = Vec::new();
    for op in PointOp::ALL {
        // a color symmetry normalizes the color-preserving translations
        if !lattice.basis().iter().all(|&v| lattice.contains(op.apply(v))) {
            continue;
        }
        for &t in &domain {
            let g = GridIsometry::new(op, t);
            if let Some(chi) = action_over(&g, d, domain.iter().copied()) {
                let element = if g.is_identity() {
                    SymmetryElement2D::identity()
                } else {
                    locate_element(&g, &lattice).expect("non-identity")
                };
                elements.push(ColorElement { iso: g, chi, side: side_split_rule(chi, op.delta()), element });
            }
        }
    }
    let (w, h) = lattice.rect_block();
    ColorGroupAnalysis { lattices, elements, design: d.block(w as usize, h as usize) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(op: PointOp, x: i64, y: i64) -> GridIsometry {
        GridIsometry::new(op, IVec2::new(x, y))
    }

    fn twill() -> Design {
        Design::from_fn(4, 4, |i, j| (i + 4 - j) % 4 < 2)
    }

    // Brute-force scan of all 16 translations of the 4x4 twill block.
    fn scan_translations(d: &Design) -> (Vec<IVec2>, Vec<IVec2>) {
        let (mut keep, mut swap) = (Vec::new(), Vec::new());
        for ty in 0..d.height() as i64 {
            for tx in 0..d.width() as i64 {
                let mut same = 0;
                for j in 0..d.height() as i64 {
                    for i in 0..d.width() as i64 {
                        same += (d.get(i + tx, j + ty) == d.get(i, j)) as usize;
                    }
                }
                let t = IVec2::new(tx, ty);
                if same == d.cells().len() {
                    keep.push(t);
                } else if same == 0 {
                    swap.push(t);
                }
            }
        }
        (keep, swap)
    }

    #[test]
    fn checkerboard_lattices() {
        let l = translation_lattices(&Design::checkerboard());
        assert_eq!(l.preserve_basis.matrix(), [[2, 1], [0, 1]]);
        assert_eq!(l.swap_rep, Some(IVec2::new(1, 0)));
        assert_eq!(l.full(), Hnf::integer());
    }

    #[test]
    fn constant_lattices() {
        let l = translation_lattices(&Design::constant(true));
        assert_eq!(l.preserve_basis, Hnf::integer());
        assert_eq!(l.swap_rep, None);
    }

    #[test]
    fn twill_lattices_match_scan() {
        let d = twill();
        let (keep, swap) = scan_translations(&d);
        // (1,1) keeps colors, (2,0) and (2,2)... swap; frozen from the scan
        assert_eq!(keep, vec![IVec2::new(0, 0), IVec2::new(1, 1), IVec2::new(2, 2), IVec2::new(3, 3)]);
        assert_eq!(swap, vec![IVec2::new(2, 0), IVec2::new(3, 1), IVec2::new(0, 2), IVec2::new(1, 3)]);
        let l = translation_lattices(&d);
        assert_eq!(l.preserve_basis.matrix(), [[4, 1], [0, 1]]);
        assert_eq!(l.swap_rep, Some(IVec2::new(2, 0)));
        let swap_rep = l.swap_rep.unwrap();
        assert!(l.preserve_basis.contains(swap_rep * 2));
        for s in swap {
            assert!(l.preserve_basis.contains(s - swap_rep));
        }
    }

    #[test]
    fn side_rule_table() {
        assert_eq!(side_split_rule(Chi::Preserve, 1), Side::S1);
        assert_eq!(side_split_rule(Chi::Swap, 1), Side::S2);
        assert_eq!(side_split_rule(Chi::Swap, -1), Side::S1);
        assert_eq!(side_split_rule(Chi::Preserve, -1), Side::S2);
    }

    #[test]
    fn locate_examples() {
        let z = Hnf::integer();
        let e = locate_element(&iso(PointOp::R180, 1, 1), &z).unwrap();
        assert_eq!(e.kind, ElementKind::Rotation2);
        assert_eq!(e.locus, Locus::Center(HalfPoint::from_doubled(1, 1)));

        let e = locate_element(&iso(PointOp::MY, 1, 0), &z).unwrap();
        assert_eq!(e.kind, ElementKind::Mirror);
        assert_eq!(e.locus, Locus::Axis { dir: AxisDir::Vertical, anchor: HalfPoint::from_doubled(1, 0) });

        let l = Hnf::rectangular(2, 1);
        let e = locate_element(&iso(PointOp::MX, 1, 0), &l).unwrap();
        assert_eq!(e.kind, ElementKind::Glide);
        assert_eq!(e.locus, Locus::Axis { dir: AxisDir::Horizontal, anchor: HalfPoint::from_doubled(0, 0) });
        assert_eq!(e.glide_vector, Some(HalfPoint::from_doubled(2, 0)));
        assert_eq!(locate_element(&iso(PointOp::MX, 1, 0), &z).unwrap().kind, ElementKind::Mirror);

        assert!(locate_element(&GridIsometry::IDENTITY, &z).is_err());
    }

    #[test]
    fn diagonal_axis_location() {
        // (x, y) -> (y + 1, x): reflection in y = x - 1 with no glide
        let e = locate_element(&iso(PointOp::MD, 1, -1), &Hnf::integer()).unwrap();
        assert_eq!(e.kind, ElementKind::Mirror);
        assert_eq!(e.locus, Locus::Axis { dir: AxisDir::Diagonal, anchor: HalfPoint::from_doubled(2, 0) });
        // (x, y) -> (y + 1, x): glide (1/2, 1/2) along y = x - 1/2
        let e = locate_element(&iso(PointOp::MD, 1, 0), &Hnf::integer()).unwrap();
        assert_eq!(e.kind, ElementKind::Glide);
        assert_eq!(e.glide_vector, Some(HalfPoint::from_doubled(1, 1)));
        assert_eq!(e.locus, Locus::Axis { dir: AxisDir::Diagonal, anchor: HalfPoint::from_doubled(1, 0) });
    }

    #[test]
    fn rotation_centers_are_fixed() {
        for op in [PointOp::R90, PointOp::R180, PointOp::R270] {
            for (x, y) in [(0, 0), (1, 0), (3, -2), (1, 1)] {
                let g = iso(op, x, y);
                let c = rotation_center(&g);
                assert_eq!(g.apply_half(c), c);
            }
        }
    }

    #[test]
    fn reflection_axes_are_fixed_up_to_glide() {
        for op in [PointOp::MX, PointOp::MY, PointOp::MD, PointOp::MA] {
            for (x, y) in [(0, 0), (1, 0), (3, -2), (1, 1), (0, 5)] {
                let g = iso(op, x, y);
                let p = reflection_parts(&g);
                let u = p.dir.vector();
                // anchor maps to anchor + glide
                let img = g.apply_half(p.anchor);
                assert_eq!((img.x2 - p.anchor.x2, img.y2 - p.anchor.y2), (p.glide2 * u.x, p.glide2 * u.y), "{g}");
            }
        }
    }

    #[test]
    fn checkerboard_color_group() {
        let a = color_group(&Design::checkerboard());
        // point group D4, two translation classes (the lattice has index 2)
        assert_eq!(a.elements.len(), 16);
        let mx = a.find(&iso(PointOp::MX, 0, 1)).unwrap();
        assert_eq!((mx.chi, mx.side), (Chi::Preserve, Side::S1));
        let shift = a.find(&iso(PointOp::I, 1, 0)).unwrap();
        assert_eq!((shift.chi, shift.side), (Chi::Swap, Side::S2));
        let quarter = a.find(&iso(PointOp::R90, 1, 0)).unwrap();
        assert_eq!((quarter.chi, quarter.side), (Chi::Preserve, Side::S2));
        assert_eq!(quarter.element.locus, Locus::Center(HalfPoint::from_doubled(1, 1)));
        let md = a.find(&iso(PointOp::MD, 1, 0)).unwrap();
        assert_eq!((md.chi, md.side), (Chi::Swap, Side::S1));
    }

    #[test]
    fn constant_color_group() {
        let a = color_group(&Design::constant(false));
        assert_eq!(a.elements.len(), 8);
        for e in &a.elements {
            assert_eq!(e.chi, Chi::Preserve);
            let expected = if e.iso.delta() > 0 { Side::S1 } else { Side::S2 };
            assert_eq!(e.side, expected);
        }
    }

    #[test]
    fn identity_first() {
        let a = color_group(&twill());
        assert!(a.elements[0].iso.is_identity());
        assert_eq!((a.elements[0].chi, a.elements[0].side), (Chi::Preserve, Side::S1));
    }
}
