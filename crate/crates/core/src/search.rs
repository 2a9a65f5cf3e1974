//! Exhaustive enumeration of small blocks realizing a target pair or layer group.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analysis::color_group;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::isometry::{GridIsometry, PointOp};
use crate::lattice::IVec2;
use crate::layer::{layer_group_name, normalize_layer_symbol, pair_descriptor, LayerGroupName, PairTable};
use crate::plane::PlaneGroupType;

/// Blocks with more cells than this are not enumerated unless asked.
pub const DEFAULT_AREA_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    Pair { s: PlaneGroupType, s1: Option<PlaneGroupType> },
    Layer(String),
}

impl SearchTarget {
    pub fn pair(s: PlaneGroupType, s1: Option<PlaneGroupType>) -> Result<Self> {
        let t = SearchTarget::Pair { s, s1 };
        t.validate()?;
        Ok(t)
    }

    pub fn layer(symbol: &str) -> Result<Self> {
        let t = SearchTarget::Layer(symbol.to_string());
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        match self {
            SearchTarget::Pair { s, s1: Some(s1) } if !s.index2_subgroups().contains(s1) => Err(Error::InvalidTarget {
                target: self.to_string(),
                reason: format!("S₁ must be a subgroup of S of index 2; {s1} is not one in {s}"),
            }),
            SearchTarget::Layer(sym) if PairTable::embedded().by_layer(sym).is_none() => Err(Error::InvalidTarget {
                target: sym.clone(),
                reason: "unknown layer symbol".into(),
            }),
            _ => Ok(()),
        }
    }

    pub fn matches(&self, name: &LayerGroupName) -> bool {
        match self {
            SearchTarget::Pair { s, s1 } => {
                name.s.group_type == *s && name.s1.as_ref().map(|n| n.group_type) == *s1
            }
            SearchTarget::Layer(sym) => {
                !name.provisional && normalize_layer_symbol(&name.symbol) == normalize_layer_symbol(sym)
            }
        }
    }
}

impl fmt::Display for SearchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchTarget::Pair { s, s1 } => f.write_str(&pair_descriptor(*s, *s1)),
            SearchTarget::Layer(sym) => f.write_str(sym),
        }
    }
}

/// `"S,S1"`, with or without parentheses; `-` or `−` for an absent S₁.
impl FromStr for SearchTarget {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = |reason: String| Error::InvalidTarget { target: text.to_string(), reason };
        let (a, b) = inner.split_once(',').ok_or_else(|| bad("expected `S,S1`".into()))?;
        let s: PlaneGroupType = a.parse().map_err(bad)?;
        let b = b.trim();
        let s1 = if b == "-" || b == "−" || b.is_empty() { None } else { Some(b.parse().map_err(bad)?) };
        SearchTarget::pair(s, s1)
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub max_block: (usize, usize),
    pub limit: Option<usize>,
    pub area_cap: usize,
}

impl SearchOptions {
    pub fn new(max_w: usize, max_h: usize) -> Self {
        SearchOptions { max_block: (max_w, max_h), limit: None, area_cap: DEFAULT_AREA_CAP }
    }
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub design: Design,
    pub name: LayerGroupName,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    /// Block sizes inside `max_block` left out by the area cap.
    pub skipped: Vec<(usize, usize)>,
    /// Canonical blocks classified.
    pub examined: usize,
}

impl SearchOutcome {
    pub fn designs(&self) -> Vec<Design> {
        self.hits.iter().map(|h| h.design.clone()).collect()
    }
}

/// Block shapes in search order: by area, then width. Only `w <= h` is
/// enumerated since a quarter turn maps one shape onto the other.
pub fn block_shapes(max_w: usize, max_h: usize) -> Vec<(usize, usize)> {
    let mut shapes: Vec<(usize, usize)> = (1..=max_w)
        .flat_map(|w| (1..=max_h).map(move |h| (w, h)))
        .filter(|&(w, h)| w <= h || h > max_w || w > max_h)
        .collect();
    shapes.sort_by_key(|&(w, h)| (w * h, w, h));
    shapes
}

/// Every design in `max_block` whose classification matches `target`, one per
/// orbit under grid isometries, each with its minimal rectangular block.
///
/// Results are ordered by block area, then width, then cell rows.
pub fn search_designs(target: &SearchTarget, opts: &SearchOptions) -> Result<SearchOutcome> {
    target.validate()?;
    let mut out = SearchOutcome::default();
    let (max_w, max_h) = opts.max_block;
    for (w, h) in block_shapes(max_w, max_h) {
        if opts.limit.is_some_and(|n| out.hits.len() >= n) {
            break;
        }
        if w * h > opts.area_cap || w * h > 63 {
            out.skipped.push((w, h));
            continue;
        }
        let (examined, hits) = search_shape(w, h, target)?;
        out.examined += examined;
        out.hits.extend(hits);
    }
    if let Some(n) = opts.limit {
        out.hits.truncate(n);
    }
    Ok(out)
}

fn search_shape(w: usize, h: usize, target: &SearchTarget) -> Result<(usize, Vec<SearchHit>)> {
    let shape = Shape::new(w, h);
    let results: Vec<Option<Result<SearchHit>>> = (0u64..1 << (w * h))
        .into_par_iter()
        .filter(|&m| shape.is_primitive(m) && shape.is_canonical(m))
        .map(|m| {
            let d = shape.design(m);
            let name = match layer_group_name(&color_group(&d)) {
                Ok(n) => n,
                Err(e) => return Some(Err(e)),
            };
            target.matches(&name).then_some(Ok(SearchHit { design: d, name }))
        })
        .collect();
    let examined = results.len();
    let mut hits = results.into_iter().flatten().collect::<Result<Vec<_>>>()?;
    hits.sort_by(|a, b| a.design.cells().cmp(b.design.cells()));
    Ok((examined, hits))
}

/// Bit masks of a `w x h` block, bit `j*w + i` for cell `(i, j)`.
struct Shape {
    w: usize,
    h: usize,
    /// Cell permutations of the block under shape-preserving isometries
    /// composed with block translations, excluding the identity.
    perms: Vec<Vec<u8>>,
}

impl Shape {
    fn new(w: usize, h: usize) -> Self {
        let n = w * h;
        let mut perms = Vec::new();
        for op in PointOp::ALL {
            let m = op.matrix();
            let keeps_shape = w == h || m[0][1] == 0;
            if !keeps_shape {
                continue;
            }
            for ty in 0..h as i64 {
                for tx in 0..w as i64 {
                    let g = GridIsometry::new(op, IVec2::new(tx, ty));
                    if g.is_identity() {
                        continue;
                    }
                    let mut p = vec![0u8; n];
                    for j in 0..h as i64 {
                        for i in 0..w as i64 {
                            let c = g.apply_cell(IVec2::new(i, j));
                            let x = c.x.rem_euclid(w as i64) as usize;
                            let y = c.y.rem_euclid(h as i64) as usize;
                            p[y * w + x] = (j as usize * w + i as usize) as u8;
                        }
                    }
                    perms.push(p);
                }
            }
        }
        Shape { w, h, perms }
    }

    fn design(&self, m: u64) -> Design {
        Design::from_fn(self.w, self.h, |i, j| m >> (j * self.w + i) & 1 == 1)
    }

    /// No smaller horizontal or vertical period.
    fn is_primitive(&self, m: u64) -> bool {
        let (w, h) = (self.w, self.h);
        let bit = |i: usize, j: usize| m >> (j * w + i) & 1;
        let x_ok = (1..w).filter(|p| w % p == 0).all(|p| (0..h).any(|j| (0..w).any(|i| bit(i, j) != bit((i + p) % w, j))));
        let y_ok = (1..h).filter(|p| h % p == 0).all(|p| (0..h).any(|j| (0..w).any(|i| bit(i, j) != bit(i, (j + p) % h))));
        x_ok && y_ok
    }

    /// Whether `m` is the smallest mask in its orbit, comparing from the
    /// highest cell index down.
    fn is_canonical(&self, m: u64) -> bool {
        let n = self.w * self.h;
        self.perms.iter().all(|p| {
            // image bit k is the bit of m at p[k]
            for k in (0..n).rev() {
                let a = m >> k & 1;
                let b = m >> p[k] & 1;
                if a != b {
                    return b > a;
                }
            }
            true
        })
    }
}
