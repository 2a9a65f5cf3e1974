//! Hermann–Mauguin names of plane groups made of grid isometries.
//!
//! Oriented symbols put the family of axes parallel to the first frame
//! direction (horizontal, or the main diagonal in the diagonal frame) in the
//! first reflection slot: `c1m1` has horizontal mirror and glide axes,
//! `c11m` vertical ones.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::analysis::{glide2_of, rotation_center, AxisDir};
use crate::error::{Error, Result};
use crate::isometry::{GridIsometry, PointOp};
use crate::lattice::{gcd, Hnf, IVec2};

/// The twelve plane-group types realizable on the square grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneGroupType {
    P1,
    P2,
    Pm,
    Pg,
    Cm,
    P2mm,
    P2mg,
    P2gg,
    C2mm,
    P4,
    P4mm,
    P4gm,
}

impl PlaneGroupType {
    pub const ALL: [PlaneGroupType; 12] = [
        PlaneGroupType::P1,
        PlaneGroupType::P2,
        PlaneGroupType::Pm,
        PlaneGroupType::Pg,
        PlaneGroupType::Cm,
        PlaneGroupType::P2mm,
        PlaneGroupType::P2mg,
        PlaneGroupType::P2gg,
        PlaneGroupType::C2mm,
        PlaneGroupType::P4,
        PlaneGroupType::P4mm,
        PlaneGroupType::P4gm,
    ];

    /// Full symbol in the default orientation.
    pub const fn symbol(self) -> &'static str {
        match self {
            PlaneGroupType::P1 => "p1",
            PlaneGroupType::P2 => "p211",
            PlaneGroupType::Pm => "p1m1",
            PlaneGroupType::Pg => "p1g1",
            PlaneGroupType::Cm => "c1m1",
            PlaneGroupType::P2mm => "p2mm",
            PlaneGroupType::P2mg => "p2mg",
            PlaneGroupType::P2gg => "p2gg",
            PlaneGroupType::C2mm => "c2mm",
            PlaneGroupType::P4 => "p4",
            PlaneGroupType::P4mm => "p4mm",
            PlaneGroupType::P4gm => "p4gm",
        }
    }

    const fn rotated_symbol(self) -> &'static str {
        match self {
            PlaneGroupType::Pm => "p11m",
            PlaneGroupType::Pg => "p11g",
            PlaneGroupType::Cm => "c11m",
            PlaneGroupType::P2mg => "p2gm",
            t => t.symbol(),
        }
    }

    pub const fn point_order(self) -> u8 {
        match self {
            PlaneGroupType::P1 => 1,
            PlaneGroupType::P2 | PlaneGroupType::Pm | PlaneGroupType::Pg | PlaneGroupType::Cm => 2,
            PlaneGroupType::P4mm | PlaneGroupType::P4gm => 8,
            _ => 4,
        }
    }

    pub const fn centered(self) -> bool {
        matches!(self, PlaneGroupType::Cm | PlaneGroupType::C2mm)
    }

    pub const fn has_glides(self) -> bool {
        matches!(
            self,
            PlaneGroupType::Pg
                | PlaneGroupType::Cm
                | PlaneGroupType::P2mg
                | PlaneGroupType::P2gg
                | PlaneGroupType::C2mm
                | PlaneGroupType::P4mm
                | PlaneGroupType::P4gm
        )
    }

    pub const fn has_rotation4(self) -> bool {
        matches!(self, PlaneGroupType::P4 | PlaneGroupType::P4mm | PlaneGroupType::P4gm)
    }

    /// Types occurring as subgroups of index exactly 2.
    pub fn index2_subgroups(self) -> &'static [PlaneGroupType] {
        use PlaneGroupType::*;
        match self {
            P1 => &[P1],
            P2 => &[P1, P2],
            Pm => &[P1, Pm, Pg, Cm],
            Pg => &[P1, Pg],
            Cm => &[P1, Pm, Pg],
            P2mm => &[P2, Pm, P2mm, P2mg, P2gg, C2mm],
            P2mg => &[P2, Pm, Pg, P2mg, P2gg],
            P2gg => &[P2, Pg, P2gg],
            C2mm => &[P2, Cm, P2mm, P2mg, P2gg],
            P4 => &[P2, P4],
            P4mm => &[P4, P2mm, C2mm, P4mm, P4gm],
            P4gm => &[P4, P2gg, C2mm, P4gm],
        }
    }
}

impl fmt::Display for PlaneGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for PlaneGroupType {
    type Err = String;

    /// Accepts full and short symbols in either orientation.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        use PlaneGroupType::*;
        let t = match s.trim().to_ascii_lowercase().as_str() {
            "p1" | "p111" => P1,
            "p2" | "p211" => P2,
            "pm" | "p1m1" | "p11m" => Pm,
            "pg" | "p1g1" | "p11g" => Pg,
            "cm" | "c1m1" | "c11m" => Cm,
            "pmm" | "p2mm" => P2mm,
            "pmg" | "pgm" | "p2mg" | "p2gm" => P2mg,
            "pgg" | "p2gg" => P2gg,
            "cmm" | "c2mm" => C2mm,
            "p4" => P4,
            "p4m" | "p4mm" => P4mm,
            "p4g" | "p4gm" => P4gm,
            other => return Err(format!("unknown plane group {other:?}")),
        };
        Ok(t)
    }
}

impl Serialize for PlaneGroupType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    /// Reflection axes horizontal and vertical.
    Axial,
    /// Reflection axes along the diagonals of the grid.
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PlaneGroupName {
    /// Oriented full symbol.
    pub symbol: &'static str,
    pub group_type: PlaneGroupType,
    pub centering: char,
    pub point_order: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame: Option<Frame>,
}

impl fmt::Display for PlaneGroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol)
    }
}

impl PlaneGroupName {
    fn new(group_type: PlaneGroupType, rotated: bool, frame: Option<Frame>) -> Self {
        PlaneGroupName {
            symbol: if rotated { group_type.rotated_symbol() } else { group_type.symbol() },
            group_type,
            centering: if group_type.centered() { 'c' } else { 'p' },
            point_order: group_type.point_order(),
            frame,
        }
    }
}

/// Names the group whose cosets modulo its translation lattice `lattice` are `cosets`.
///
/// `cosets` must contain every coset exactly once; the identity coset included.
pub fn plane_group_name(cosets: &[GridIsometry], lattice: &Hnf) -> Result<PlaneGroupName> {
    use PlaneGroupType::*;

    let ops: BTreeSet<PointOp> = cosets.iter().map(|g| g.op).collect();
    if ops.len() != cosets.len() {
        return Err(Error::Internal(format!("{} cosets for {} point operations", cosets.len(), ops.len())));
    }
    if !ops.contains(&PointOp::I) || ops.iter().any(|a| ops.iter().any(|b| !ops.contains(&a.then_after(*b)))) {
        return Err(Error::Internal(format!("point operations {ops:?} do not form a group")));
    }
    let rep = |op: PointOp| cosets.iter().find(|g| g.op == op).copied();
    let contains = |g: GridIsometry| rep(g.op).is_some_and(|r| lattice.contains(g.t - r.t));

    if let Some(quarter) = rep(PointOp::R90) {
        if !ops.iter().any(|op| op.is_reflection()) {
            return Ok(PlaneGroupName::new(P4, false, None));
        }
        // p4mm has mirrors through its 4-fold centers, p4gm does not
        let c = rotation_center(&quarter);
        let through_center = ops.iter().filter(|op| op.is_reflection()).any(|&m| {
            let mc = m.apply(IVec2::new(c.x2, c.y2));
            let (dx, dy) = (c.x2 - mc.x, c.y2 - mc.y);
            dx % 2 == 0 && dy % 2 == 0 && contains(GridIsometry::new(m, IVec2::new(dx / 2, dy / 2)))
        });
        return Ok(PlaneGroupName::new(if through_center { P4mm } else { P4gm }, false, None));
    }

    let reflections: Vec<GridIsometry> = cosets.iter().filter(|g| g.op.is_reflection()).copied().collect();
    let has_half_turn = ops.contains(&PointOp::R180);
    if reflections.is_empty() {
        return Ok(PlaneGroupName::new(if has_half_turn { P2 } else { P1 }, false, None));
    }

    let axial = reflections.iter().all(|g| matches!(g.op, PointOp::MX | PointOp::MY));
    let (first, second, frame) = if axial {
        (PointOp::MX, PointOp::MY, Frame::Axial)
    } else {
        (PointOp::MD, PointOp::MA, Frame::Diagonal)
    };
    let (u1, u2) = (
        AxisDir::of_reflection(first).unwrap().vector(),
        AxisDir::of_reflection(second).unwrap().vector(),
    );
    let k1 = lattice.line_period(u1);
    let k2 = lattice.line_period(u2);
    let rect = k1 * k2 * (u1.x * u2.y - u1.y * u2.x).abs();
    let centered = match rect / lattice.index() {
        1 => false,
        2 => true,
        r => {
            return Err(Error::Internal(format!(
                "lattice {lattice} has rectangular sublattice of index {r} along the reflection axes"
            )))
        }
    };
    let has_mirror = |op: PointOp| {
        rep(op).is_some_and(|g| {
            let [v0, v1] = lattice.basis();
            let step = gcd(glide2_of(op, v0), glide2_of(op, v1));
            glide2_of(op, g.t).rem_euclid(step) == 0
        })
    };

    let (group_type, rotated) = if has_half_turn {
        if centered {
            (C2mm, false)
        } else {
            match (has_mirror(first), has_mirror(second)) {
                (true, true) => (P2mm, false),
                (false, false) => (P2gg, false),
                (true, false) => (P2mg, false),
                (false, true) => (P2mg, true),
            }
        }
    } else {
        let op = reflections[0].op;
        let rotated = op == second;
        let t = if centered {
            Cm
        } else if has_mirror(op) {
            Pm
        } else {
            Pg
        };
        (t, rotated)
    };
    Ok(PlaneGroupName::new(group_type, rotated, Some(frame)))
}
