//! Designs: doubly periodic 2-colorings of the unit-square tiling.
//!
//! Cell `(i, j)` is the unit square `[i, i+1] x [j, j+1]`; `i` grows to the
//! right along the weft, `j` grows downward along the warp. A cell is `1`
//! (black) when the weft strand is on top and `0` (white) when the warp is.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::isometry::GridIsometry;
use crate::lattice::{lcm, IVec2};

pub const MAGIC: &str = "weave-design v1";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Design {
    width: usize,
    height: usize,
    cells: Vec<u8>,
}

impl Design {
    /// # Panics
    /// If a dimension is zero or `cells` has the wrong length or a value other than 0/1.
    pub fn new(width: usize, height: usize, cells: Vec<u8>) -> Self {
        assert!(width > 0 && height > 0, "design dimensions must be positive");
        assert_eq!(cells.len(), width * height, "cell count does not match block size");
        assert!(cells.iter().all(|&c| c <= 1), "cells must be 0 or 1");
        Design { width, height, cells }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut cells = Vec::with_capacity(width * height);
        for j in 0..height {
            for i in 0..width {
                cells.push(f(i, j) as u8);
            }
        }
        Design::new(width, height, cells)
    }

    /// Rows written with `#` for black and `.` for white.
    ///
    /// # Panics
    /// On ragged rows or other characters; use [`parse_design`] for untrusted text.
    pub fn from_rows(rows: &[&str]) -> Self {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.chars().count());
        let mut cells = Vec::with_capacity(width * height);
        for r in rows {
            assert_eq!(r.chars().count(), width, "ragged rows");
            cells.extend(r.chars().map(|ch| match ch {
                '#' => 1,
                '.' => 0,
                _ => panic!("unexpected character {ch:?}"),
            }));
        }
        Design::new(width, height, cells)
    }

    pub fn checkerboard() -> Self {
        Design::from_rows(&["#.", ".#"])
    }

    pub fn constant(black: bool) -> Self {
        Design::new(1, 1, vec![black as u8])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Color of cell `(i, j)` with indices taken modulo the block.
    pub fn get(&self, i: i64, j: i64) -> u8 {
        let x = i.rem_euclid(self.width as i64) as usize;
        let y = j.rem_euclid(self.height as i64) as usize;
        self.cells[y * self.width + x]
    }

    pub fn at(&self, c: IVec2) -> u8 {
        self.get(c.x, c.y)
    }

    pub fn complement(&self) -> Design {
        Design {
            width: self.width,
            height: self.height,
            cells: self.cells.iter().map(|&c| 1 - c).collect(),
        }
    }

    /// Design `d'` with `d'(g c) = d(c)` for every cell `c`.
    pub fn transform(&self, g: &GridIsometry) -> Design {
        let (w, h) = if g.delta() > 0 {
            (self.width, self.height)
        } else {
            (self.height, self.width)
        };
        let inv = g.inverse();
        Design::from_fn(w, h, |i, j| self.at(inv.apply_cell(IVec2::new(i as i64, j as i64))) == 1)
    }

    /// The pattern restricted to the block `[0, w) x [0, h)`.
    pub fn block(&self, w: usize, h: usize) -> Design {
        Design::from_fn(w, h, |i, j| self.get(i as i64, j as i64) == 1)
    }

    /// The same pattern presented with an `nx x ny` times larger block.
    pub fn tile(&self, nx: usize, ny: usize) -> Design {
        self.block(self.width * nx, self.height * ny)
    }

    /// Whether two designs color the plane identically, regardless of block size.
    pub fn same_pattern(&self, other: &Design) -> bool {
        let w = lcm(self.width as i64, other.width as i64);
        let h = lcm(self.height as i64, other.height as i64);
        (0..h).all(|j| (0..w).all(|i| self.get(i, j) == other.get(i, j)))
    }

    pub fn rows(&self) -> impl Iterator<Item = String> + '_ {
        self.cells
            .chunks(self.width)
            .map(|row| row.iter().map(|&c| if c == 1 { '#' } else { '.' }).collect())
    }

    pub fn count_black(&self) -> usize {
        self.cells.iter().filter(|&&c| c == 1).count()
    }
}

impl fmt::Debug for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Design({}x{}: {})", self.width, self.height, self.rows().collect::<Vec<_>>().join("/"))
    }
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_design(self))
    }
}

impl FromStr for Design {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_design(s)
    }
}

impl Serialize for Design {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            width: usize,
            height: usize,
            rows: Vec<String>,
        }
        Repr { width: self.width, height: self.height, rows: self.rows().collect() }.serialize(s)
    }
}

/// Parses the `weave-design v1` text format.
///
/// The `weave-design v1` line may be omitted; the `block W H` line may not.
pub fn parse_design(text: &str) -> Result<Design> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim_end()))
        .filter(|(_, l)| !l.starts_with("//") && !l.trim().is_empty());

    let (mut line_no, mut line) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    if line.trim() == MAGIC {
        (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(line_no + 1, "missing `block W H` line"))?;
    } else if line.starts_with("weave-design") {
        return Err(Error::parse(line_no, format!("unsupported format {:?}", line.trim())));
    }
    let mut parts = line.split_whitespace();
    if parts.next() != Some("block") {
        return Err(Error::parse(line_no, "missing header: expected `block W H`"));
    }
    let mut dim = |name: &str| -> Result<usize> {
        let tok = parts
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("missing block {name}")))?;
        let v: usize = tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("block {name} {tok:?} is not a number")))?;
        if v == 0 {
            return Err(Error::parse(line_no, format!("block {name} must be positive")));
        }
        Ok(v)
    };
    let width = dim("width")?;
    let height = dim("height")?;
    if parts.next().is_some() {
        return Err(Error::parse(line_no, "trailing tokens after `block W H`"));
    }

    let mut cells = Vec::with_capacity(width * height);
    let mut rows = 0;
    let mut last_line = line_no;
    for (n, l) in lines {
        last_line = n;
        rows += 1;
        if rows > height {
            return Err(Error::parse(n, format!("more than {height} rows")));
        }
        let row: Vec<char> = l.trim().chars().collect();
        for (k, ch) in row.iter().enumerate() {
            match ch {
                '#' => cells.push(1),
                '.' => cells.push(0),
                _ => {
                    return Err(Error::parse(n, format!("unexpected character {ch:?} at column {}", k + 1)))
                }
            }
        }
        if row.len() != width {
            return Err(Error::parse(n, format!("row {rows} has {} cells, expected {width}", row.len())));
        }
    }
    if rows < height {
        return Err(Error::parse(last_line, format!("expected {height} rows, found {rows}")));
    }
    Ok(Design::new(width, height, cells))
}

pub fn serialize_design(d: &Design) -> String {
    let mut out = format!("{MAGIC}\nblock {} {}\n", d.width, d.height);
    for r in d.rows() {
        out.push_str(&r);
        out.push('\n');
    }
    out
}
