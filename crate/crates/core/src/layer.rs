//! Lifting color-group elements to layer-group operations and naming the
//! layer group from the pair (S, S1).

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize, Serializer};

use crate::analysis::{ColorGroupAnalysis, ElementKind, Side, SymmetryElement2D};
use crate::error::{Error, Result};
use crate::isometry::GridIsometry;
use crate::plane::{plane_group_name, PlaneGroupName, PlaneGroupType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LayerElementKind {
    Translation,
    /// Glide reflection in the layer plane itself.
    GlidePlaneThroughP,
    MirrorPlaneNormal,
    GlidePlaneNormal,
    Axis2Normal,
    Axis2InPlane,
    Screw2InPlane,
    InversionCenter,
    Axis4Normal,
    Rotoinversion4Normal,
}

impl LayerElementKind {
    pub const fn name(self) -> &'static str {
        match self {
            LayerElementKind::Translation => "translation",
            LayerElementKind::GlidePlaneThroughP => "glide-plane-through-p",
            LayerElementKind::MirrorPlaneNormal => "mirror-plane-normal",
            LayerElementKind::GlidePlaneNormal => "glide-plane-normal",
            LayerElementKind::Axis2Normal => "axis2-normal",
            LayerElementKind::Axis2InPlane => "axis2-in-plane",
            LayerElementKind::Screw2InPlane => "screw2-in-plane",
            LayerElementKind::InversionCenter => "inversion-center",
            LayerElementKind::Axis4Normal => "axis4-normal",
            LayerElementKind::Rotoinversion4Normal => "rotoinversion4-normal",
        }
    }

    /// Three-dimensional counterpart of a planar element with the given side tag.
    pub const fn lift(kind: ElementKind, side: Side) -> LayerElementKind {
        use LayerElementKind::*;
        match (kind, side) {
            (ElementKind::Translation, Side::S1) => Translation,
            (ElementKind::Translation, Side::S2) => GlidePlaneThroughP,
            (ElementKind::Rotation2, Side::S1) => Axis2Normal,
            (ElementKind::Rotation2, Side::S2) => InversionCenter,
            (ElementKind::Mirror, Side::S1) => MirrorPlaneNormal,
            (ElementKind::Mirror, Side::S2) => Axis2InPlane,
            (ElementKind::Glide, Side::S1) => GlidePlaneNormal,
            (ElementKind::Glide, Side::S2) => Screw2InPlane,
            (ElementKind::Rotation4, Side::S1) => Axis4Normal,
            (ElementKind::Rotation4, Side::S2) => Rotoinversion4Normal,
        }
    }
}

impl fmt::Display for LayerElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for LayerElementKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LayerElement {
    pub kind: LayerElementKind,
    /// The other kind present among lattice translates (mirror planes
    /// interleaved with glide planes, 2-fold axes with screw axes).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub companion: Option<LayerElementKind>,
    pub side: Side,
    pub element: SymmetryElement2D,
    #[serde(skip)]
    pub source: Option<GridIsometry>,
}

impl LayerElement {
    /// Inventory label: the kind, or both kinds joined by `|` in sorted order.
    pub fn label(&self) -> String {
        match self.companion {
            None => self.kind.name().to_string(),
            Some(c) => {
                let mut names = [self.kind.name(), c.name()];
                names.sort_unstable();
                names.join("|")
            }
        }
    }
}

pub fn lift_table1(e: &SymmetryElement2D, side: Side) -> LayerElement {
    let kind = LayerElementKind::lift(e.kind, side);
    let companion = e.family.filter(|f| f.mirrors && f.glides).map(|_| {
        let other = if e.kind == ElementKind::Mirror { ElementKind::Glide } else { ElementKind::Mirror };
        LayerElementKind::lift(other, side)
    });
    LayerElement { kind, companion, side, element: *e, source: None }
}

/// Lifts every record of the analysis, one layer element per coset.
pub fn inventory(analysis: &ColorGroupAnalysis) -> Vec<LayerElement> {
    analysis
        .elements
        .iter()
        .map(|r| LayerElement { source: Some(r.iso), ..lift_table1(&r.element, r.side) })
        .collect()
}

/// Sorted inventory labels; the structural key of a layer group row.
pub fn signature(inventory: &[LayerElement]) -> Vec<String> {
    let mut labels: Vec<String> = inventory.iter().map(LayerElement::label).collect();
    labels.sort();
    labels
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub s: String,
    /// `None` when the whole color group preserves the side.
    pub s1: Option<String>,
    pub layer: String,
    pub inventory: Vec<String>,
    pub source: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairTable {
    pub version: u32,
    pub rows: Vec<PairRow>,
}

impl PairTable {
    pub fn from_json(text: &str) -> Result<Self> {
        let mut table: PairTable = serde_json::from_str(text)?;
        for row in &mut table.rows {
            row.s = parse_type(&row.s)?.symbol().to_string();
            if let Some(s1) = &mut row.s1 {
                *s1 = parse_type(s1)?.symbol().to_string();
            }
            row.inventory.sort();
        }
        Ok(table)
    }

    /// The table shipped with the crate.
    pub fn embedded() -> &'static PairTable {
        static TABLE: OnceLock<PairTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            PairTable::from_json(include_str!("../data/layer_pairs.json")).expect("embedded pair table is valid")
        })
    }

    pub fn lookup(&self, s: PlaneGroupType, s1: Option<PlaneGroupType>, signature: &[String]) -> Option<&PairRow> {
        self.rows.iter().find(|r| {
            r.s == s.symbol() && r.s1.as_deref() == s1.map(|t| t.symbol()) && r.inventory == signature
        })
    }

    pub fn by_layer(&self, symbol: &str) -> Option<&PairRow> {
        let key = normalize_layer_symbol(symbol);
        self.rows.iter().find(|r| normalize_layer_symbol(&r.layer) == key)
    }

    pub fn by_pair(&self, s: PlaneGroupType, s1: Option<PlaneGroupType>) -> Option<&PairRow> {
        self.rows.iter().find(|r| r.s == s.symbol() && r.s1.as_deref() == s1.map(|t| t.symbol()))
    }
}

fn parse_type(s: &str) -> Result<PlaneGroupType> {
    s.parse().map_err(Error::Internal)
}

/// Canonical spelling of a layer symbol: ASCII, no spaces, `2_1` for screw axes
/// and `-1` for the inversion.
pub fn normalize_layer_symbol(symbol: &str) -> String {
    symbol
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .replace('₁', "_1")
        .replace("\\bar{1}", "-1")
        .replace('\u{0304}', "")
        .replace('−', "-")
        .replace("2_{1}", "2_1")
        .replace('\\', "")
}

/// `(S, S1)`, or `(S, −)` when every element preserves the side.
pub fn pair_descriptor(s: PlaneGroupType, s1: Option<PlaneGroupType>) -> String {
    match s1 {
        Some(t) => format!("({}, {})", s.symbol(), t.symbol()),
        None => format!("({}, −)", s.symbol()),
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LayerGroupName {
    /// Layer symbol, or `unassigned` when the pair is not in the table.
    pub symbol: String,
    pub pair_descriptor: String,
    /// Oriented symbols of S and S1 as found on the grid.
    pub oriented_pair: String,
    pub provisional: bool,
    pub s: PlaneGroupName,
    pub s1: Option<PlaneGroupName>,
    pub inventory: Vec<LayerElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

pub fn layer_group_name(analysis: &ColorGroupAnalysis) -> Result<LayerGroupName> {
    layer_group_name_with(analysis, PairTable::embedded())
}

pub fn layer_group_name_with(analysis: &ColorGroupAnalysis, table: &PairTable) -> Result<LayerGroupName> {
    let (full, s_cosets) = analysis.s_cosets();
    let s = plane_group_name(&s_cosets, &full)?;
    let s1 = if analysis.has_s2() {
        Some(plane_group_name(&analysis.s1_cosets(), analysis.lattice())?)
    } else {
        None
    };
    let inventory = inventory(analysis);
    let signature = signature(&inventory);
    let s1_type = s1.as_ref().map(|n| n.group_type);
    let row = table.lookup(s.group_type, s1_type, &signature);
    let oriented_pair = match &s1 {
        Some(n) => format!("({}, {})", s.symbol, n.symbol),
        None => format!("({}, −)", s.symbol),
    };
    Ok(LayerGroupName {
        symbol: row.map_or_else(|| "unassigned".to_string(), |r| r.layer.clone()),
        pair_descriptor: pair_descriptor(s.group_type, s1_type),
        oriented_pair,
        provisional: row.is_none(),
        source: row.map(|r| r.source.clone()),
        s,
        s1,
        inventory,
    })
}
