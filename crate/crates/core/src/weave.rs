//! Strand-colored weave structures and the patterns visible on either face.

use serde::{Deserialize, Serialize};

use crate::design::Design;
use crate::error::{Error, Result};
use crate::lattice::lcm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    fn bit(self) -> u8 {
        match self {
            Color::Black => 1,
            Color::White => 0,
        }
    }

    fn from_char(ch: char) -> Option<Color> {
        match ch {
            'B' => Some(Color::Black),
            'W' => Some(Color::White),
            _ => None,
        }
    }

    fn to_char(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }
}

/// Colors of the two faces of one strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Faces {
    pub front: Color,
    pub back: Color,
}

impl Faces {
    pub const BLACK: Faces = Faces { front: Color::Black, back: Color::Black };
    pub const WHITE: Faces = Faces { front: Color::White, back: Color::White };
    /// Black facing front, white facing back.
    pub const BW: Faces = Faces { front: Color::Black, back: Color::White };
    pub const WB: Faces = Faces { front: Color::White, back: Color::Black };

    pub fn is_one_sided(self) -> bool {
        self.front != self.back
    }

    pub fn code(self) -> String {
        [self.front.to_char(), self.back.to_char()].iter().collect()
    }

    pub fn parse(code: &str) -> Option<Faces> {
        let mut it = code.chars();
        let front = Color::from_char(it.next()?)?;
        let back = Color::from_char(it.next()?)?;
        it.next().is_none().then_some(Faces { front, back })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum View {
    Front,
    Back,
}

impl std::str::FromStr for View {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "front" => Ok(View::Front),
            "back" => Ok(View::Back),
            _ => Err(format!("side must be `front` or `back`, got {s:?}")),
        }
    }
}

/// Over/under map plus periodic per-strand face colors.
///
/// `overunder` uses the design convention: 1 where the weft (row) strand is on
/// top as seen from the front. `warp_faces[i]` colors column `i`,
/// `weft_faces[j]` colors row `j`; both repeat periodically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeaveStructure {
    pub overunder: Design,
    pub warp_faces: Vec<Faces>,
    pub weft_faces: Vec<Faces>,
}

impl WeaveStructure {
    pub fn new(overunder: Design, warp_faces: Vec<Faces>, weft_faces: Vec<Faces>) -> Result<Self> {
        if warp_faces.is_empty() || weft_faces.is_empty() {
            return Err(Error::Structure("face sequences must be non-empty".into()));
        }
        Ok(WeaveStructure { overunder, warp_faces, weft_faces })
    }

    /// White warp, black weft: the visible front pattern is the design itself.
    pub fn basket(overunder: Design) -> Self {
        WeaveStructure { overunder, warp_faces: vec![Faces::WHITE], weft_faces: vec![Faces::BLACK] }
    }

    /// One-sided strands, warp black in front and weft white in front.
    pub fn mat(overunder: Design) -> Self {
        WeaveStructure { overunder, warp_faces: vec![Faces::BW], weft_faces: vec![Faces::WB] }
    }

    /// Common period `(width, height)` of the over/under map and both face sequences.
    pub fn period(&self) -> (usize, usize) {
        let w = lcm(self.overunder.width() as i64, self.warp_faces.len() as i64);
        let h = lcm(self.overunder.height() as i64, self.weft_faces.len() as i64);
        (w as usize, h as usize)
    }

    fn warp(&self, i: usize) -> Faces {
        self.warp_faces[i % self.warp_faces.len()]
    }

    fn weft(&self, j: usize) -> Faces {
        self.weft_faces[j % self.weft_faces.len()]
    }

    /// Pattern seen on one face, black = 1.
    ///
    /// The back is seen from behind, so its columns run right to left: back
    /// cell `(i, j)` sits over front crossing `(w - 1 - i, j)` and shows the
    /// back face of the strand that is underneath from the front.
    pub fn render_visible(&self, view: View) -> Design {
        let (w, h) = self.period();
        Design::from_fn(w, h, |i, j| {
            let color = match view {
                View::Front => {
                    if self.overunder.get(i as i64, j as i64) == 1 {
                        self.weft(j).front
                    } else {
                        self.warp(i).front
                    }
                }
                View::Back => {
                    let x = w - 1 - i;
                    if self.overunder.get(x as i64, j as i64) == 1 {
                        self.warp(x).back
                    } else {
                        self.weft(j).back
                    }
                }
            };
            color.bit() == 1
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawStructure = serde_json::from_str(text)?;
        raw.try_into()
    }

    pub fn to_json(&self) -> String {
        let raw = RawStructure {
            overunder: self.overunder.rows().collect(),
            warp_faces: self.warp_faces.iter().map(|f| f.code()).collect(),
            weft_faces: self.weft_faces.iter().map(|f| f.code()).collect(),
        };
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct RawStructure {
    overunder: Vec<String>,
    warp_faces: Vec<String>,
    weft_faces: Vec<String>,
}

impl TryFrom<RawStructure> for WeaveStructure {
    type Error = Error;

    fn try_from(raw: RawStructure) -> Result<Self> {
        let width = raw.overunder.first().map_or(0, |r| r.chars().count());
        if width == 0 {
            return Err(Error::Structure("overunder must have at least one non-empty row".into()));
        }
        let mut cells = Vec::new();
        for (n, row) in raw.overunder.iter().enumerate() {
            if row.chars().count() != width {
                return Err(Error::Structure(format!("overunder row {} has {} cells, expected {width}", n + 1, row.chars().count())));
            }
            for ch in row.chars() {
                cells.push(match ch {
                    '#' => 1,
                    '.' => 0,
                    _ => return Err(Error::Structure(format!("unexpected character {ch:?} in overunder"))),
                });
            }
        }
        let faces = |key: &str, codes: &[String]| -> Result<Vec<Faces>> {
            codes
                .iter()
                .map(|c| Faces::parse(c).ok_or_else(|| Error::Structure(format!("{key}: bad face code {c:?}"))))
                .collect()
        };
        let overunder = Design::new(width, raw.overunder.len(), cells);
        WeaveStructure::new(overunder, faces("warp_faces", &raw.warp_faces)?, faces("weft_faces", &raw.weft_faces)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::{GridIsometry, PointOp};
    use crate::lattice::IVec2;

    fn twill_4x4() -> Design {
        Design::from_fn(4, 4, |i, j| (i + 4 - j) % 4 < 2)
    }

    fn mirror_x(d: &Design) -> Design {
        d.transform(&GridIsometry::new(PointOp::MY, IVec2::new(d.width() as i64, 0)))
    }

    #[test]
    fn basket_front_is_the_design() {
        let d = twill_4x4();
        assert_eq!(WeaveStructure::basket(d.clone()).render_visible(View::Front), d);
    }

    #[test]
    fn mat_back_is_mirrored_front_on_twill() {
        // direct simulation: front shows black where the warp is on top,
        // back (seen from behind) shows black where the weft is on top underneath
        let d = twill_4x4();
        let w = WeaveStructure::mat(d.clone());
        let front = w.render_visible(View::Front);
        let back = w.render_visible(View::Back);
        for j in 0..4 {
            for i in 0..4 {
                assert_eq!(front.get(i, j), 1 - d.get(i, j));
                assert_eq!(back.get(3 - i, j), 1 - d.get(i, j));
            }
        }
        assert_eq!(back, mirror_x(&front));
    }

    #[test]
    fn uniform_black_is_all_ones() {
        let w = WeaveStructure::new(twill_4x4(), vec![Faces::BLACK], vec![Faces::BLACK]).unwrap();
        assert_eq!(w.render_visible(View::Front).count_black(), 16);
        assert_eq!(w.render_visible(View::Back).count_black(), 16);
    }

    #[test]
    fn period_expands_to_lcm() {
        let w = WeaveStructure::new(twill_4x4(), vec![Faces::BW; 6], vec![Faces::WB; 3]).unwrap();
        assert_eq!(w.period(), (12, 12));
        assert_eq!(w.render_visible(View::Front).width(), 12);
    }

    #[test]
    fn json_round_trip() {
        let w = WeaveStructure::new(twill_4x4(), vec![Faces::BW, Faces::WB], vec![Faces::WB]).unwrap();
        let back = WeaveStructure::from_json(&w.to_json()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn json_errors() {
        assert!(WeaveStructure::from_json(r##"{"overunder":["#."],"warp_faces":["BX"],"weft_faces":["B"]}"##).is_err());
        assert!(WeaveStructure::from_json(r##"{"overunder":["#.","#"],"warp_faces":["BW"],"weft_faces":["BW"]}"##).is_err());
        assert!(WeaveStructure::from_json(r##"{"overunder":["#."],"warp_faces":[],"weft_faces":["BW"]}"##).is_err());
    }
}
