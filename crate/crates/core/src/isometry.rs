//! The symmetry group of the uncolored unit-square tiling: D4 point parts
//! combined with integer translations.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::design::Design;
use crate::lattice::{lcm, HalfPoint, IVec2};

/// Point part of a grid isometry.
///
/// `MX` reflects across a horizontal line, `MY` across a vertical line,
/// `MD` swaps the coordinates and `MA` swaps and negates them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointOp {
    I,
    R90,
    R180,
    R270,
    MX,
    MY,
    MD,
    MA,
}

impl PointOp {
    pub const ALL: [PointOp; 8] = [
        PointOp::I,
        PointOp::R90,
        PointOp::R180,
        PointOp::R270,
        PointOp::MX,
        PointOp::MY,
        PointOp::MD,
        PointOp::MA,
    ];

    /// Matrix acting on column vectors, given by rows.
    pub const fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            PointOp::I => [[1, 0], [0, 1]],
            PointOp::R90 => [[0, -1], [1, 0]],
            PointOp::R180 => [[-1, 0], [0, -1]],
            PointOp::R270 => [[0, 1], [-1, 0]],
            PointOp::MX => [[1, 0], [0, -1]],
            PointOp::MY => [[-1, 0], [0, 1]],
            PointOp::MD => [[0, 1], [1, 0]],
            PointOp::MA => [[0, -1], [-1, 0]],
        }
    }

    fn from_matrix(m: [[i64; 2]; 2]) -> PointOp {
        *PointOp::ALL
            .iter()
            .find(|op| op.matrix() == m)
            .expect("D4 is closed under multiplication")
    }

    /// +1 when rows map to rows, -1 when rows map to columns.
    pub const fn delta(self) -> i8 {
        match self {
            PointOp::I | PointOp::R180 | PointOp::MX | PointOp::MY => 1,
            _ => -1,
        }
    }

    pub const fn is_reflection(self) -> bool {
        matches!(self, PointOp::MX | PointOp::MY | PointOp::MD | PointOp::MA)
    }

    pub const fn is_rotation(self) -> bool {
        matches!(self, PointOp::R90 | PointOp::R180 | PointOp::R270)
    }

    pub fn apply(self, v: IVec2) -> IVec2 {
        let m = self.matrix();
        IVec2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
    }

    /// `self ∘ other`.
    pub fn then_after(self, other: PointOp) -> PointOp {
        let (a, b) = (self.matrix(), other.matrix());
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        PointOp::from_matrix(m)
    }

    pub fn inverse(self) -> PointOp {
        let m = self.matrix();
        PointOp::from_matrix([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub const fn name(self) -> &'static str {
        match self {
            PointOp::I => "I",
            PointOp::R90 => "R90",
            PointOp::R180 => "R180",
            PointOp::R270 => "R270",
            PointOp::MX => "MX",
            PointOp::MY => "MY",
            PointOp::MD => "MD",
            PointOp::MA => "MA",
        }
    }

    // Offset mapping the lower corner of a cell to the lower corner of its image.
    fn cell_offset(self) -> IVec2 {
        let m = self.matrix();
        IVec2::new((m[0][0] + m[0][1] - 1) / 2, (m[1][0] + m[1][1] - 1) / 2)
    }
}

impl fmt::Display for PointOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PointOp {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PointOp::ALL
            .iter()
            .copied()
            .find(|op| op.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown point operation {s:?}"))
    }
}

impl Serialize for PointOp {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// An isometry `x -> r(x) + t` of the plane that maps the unit-square tiling to itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridIsometry {
    pub op: PointOp,
    pub t: IVec2,
}

impl GridIsometry {
    pub const IDENTITY: GridIsometry = GridIsometry { op: PointOp::I, t: IVec2::ZERO };

    pub const fn new(op: PointOp, t: IVec2) -> Self {
        GridIsometry { op, t }
    }

    pub const fn translation(t: IVec2) -> Self {
        GridIsometry { op: PointOp::I, t }
    }

    pub fn is_identity(&self) -> bool {
        *self == GridIsometry::IDENTITY
    }

    pub fn delta(&self) -> i8 {
        self.op.delta()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GridIsometry) -> GridIsometry {
        GridIsometry {
            op: self.op.then_after(other.op),
            t: self.op.apply(other.t) + self.t,
        }
    }

    pub fn inverse(&self) -> GridIsometry {
        let inv = self.op.inverse();
        GridIsometry { op: inv, t: -inv.apply(self.t) }
    }

    pub fn apply_point(&self, p: IVec2) -> IVec2 {
        self.op.apply(p) + self.t
    }

    pub fn apply_half(&self, p: HalfPoint) -> HalfPoint {
        let q = self.op.apply(IVec2::new(p.x2, p.y2));
        HalfPoint::from_doubled(q.x + 2 * self.t.x, q.y + 2 * self.t.y)
    }

    /// Index of the image of the unit square `[i, i+1] x [j, j+1]`.
    pub fn apply_cell(&self, c: IVec2) -> IVec2 {
        self.op.apply(c) + self.op.cell_offset() + self.t
    }
}

impl fmt::Display for GridIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.op, self.t)
    }
}

/// How a symmetry permutes the two colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chi {
    Preserve,
    Swap,
}

impl Chi {
    pub fn sign(self) -> i8 {
        match self {
            Chi::Preserve => 1,
            Chi::Swap => -1,
        }
    }

    pub fn combine(self, other: Chi) -> Chi {
        if self == other {
            Chi::Preserve
        } else {
            Chi::Swap
        }
    }
}

/// Color action of `g` on `d`: `Some(Preserve)`, `Some(Swap)` or `None` when
/// `g` is not a color symmetry.
///
/// Both `c -> d(g c)` and `d` are periodic under `N Z²` with `N = lcm(width, height)`,
/// so one `N x N` block decides.
pub fn color_action(g: &GridIsometry, d: &Design) -> Option<Chi> {
    let n = lcm(d.width() as i64, d.height() as i64);
    let cells = (0..n).flat_map(|j| (0..n).map(move |i| IVec2::new(i, j)));
    action_over(g, d, cells)
}

pub(crate) fn action_over<I>(g: &GridIsometry, d: &Design, cells: I) -> Option<Chi>
where
    I: IntoIterator<Item = IVec2>,
{
    let mut preserve = true;
    let mut swap = true;
    for c in cells {
        let same = d.at(g.apply_cell(c)) == d.at(c);
        preserve &= same;
        swap &= !same;
        if !preserve && !swap {
            return None;
        }
    }
    if preserve {
        Some(Chi::Preserve)
    } else if swap {
        Some(Chi::Swap)
    } else {
        None
    }
}
