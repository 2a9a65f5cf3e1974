#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use weavesym::analysis::{ElementKind, Locus};
use weavesym::lattice::lcm;
use weavesym::layer::LayerElementKind;
use weavesym::{classify, color_group, Chi, Design, GridIsometry, IVec2, PointOp, Side};

pub type Tagged = (PointOp, (i64, i64), Chi, Side);

/// Matrices written out by hand, rows first.
fn matrix(op: PointOp) -> [[i64; 2]; 2] {
    match op {
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

/// Image of cell `(i, j)`: the cell containing the image of its center.
fn image_cell(op: PointOp, t: (i64, i64), i: i64, j: i64) -> (i64, i64) {
    let m = matrix(op);
    let (cx, cy) = (2 * i + 1, 2 * j + 1);
    let x = m[0][0] * cx + m[0][1] * cy + 2 * t.0;
    let y = m[1][0] * cx + m[1][1] * cy + 2 * t.1;
    ((x - 1).div_euclid(2), (y - 1).div_euclid(2))
}

/// Every grid isometry modulo the `N x N` period, `N = lcm(W, H)`, tested cell
/// by cell. The side is read off the strands: black cells have the horizontal
/// strand on top, and a symmetry keeps the side iff it carries the top strand
/// at each crossing onto the top strand at the image crossing.
pub fn brute_force(d: &Design) -> BTreeSet<Tagged> {
    let n = lcm(d.width() as i64, d.height() as i64);
    let mut out = BTreeSet::new();
    for op in PointOp::ALL {
        let swaps_directions = matrix(op)[0][0] == 0;
        for ty in 0..n {
            for tx in 0..n {
                let mut chi = None;
                let mut side = None;
                let mut ok = true;
                'cells: for j in 0..n {
                    for i in 0..n {
                        let (x, y) = image_cell(op, (tx, ty), i, j);
                        let (a, b) = (d.get(i, j), d.get(x, y));
                        let c = if a == b { Chi::Preserve } else { Chi::Swap };
                        let top_horizontal = a == 1;
                        let image_of_top_horizontal = top_horizontal != swaps_directions;
                        let s = if image_of_top_horizontal == (b == 1) { Side::S1 } else { Side::S2 };
                        if *chi.get_or_insert(c) != c || *side.get_or_insert(s) != s {
                            ok = false;
                            break 'cells;
                        }
                    }
                }
                if ok {
                    out.insert((op, (tx, ty), chi.unwrap(), side.unwrap()));
                }
            }
        }
    }
    out
}

/// The pipeline's records expanded to every translate in `[0, N)^2`.
pub fn expanded_pipeline(d: &Design) -> BTreeSet<Tagged> {
    let n = lcm(d.width() as i64, d.height() as i64);
    let a = color_group(d);
    let mut out = BTreeSet::new();
    for e in &a.elements {
        for ty in 0..n {
            for tx in 0..n {
                if a.lattice().contains(IVec2::new(tx, ty) - e.iso.t) {
                    out.insert((e.iso.op, (tx, ty), e.chi, e.side));
                }
            }
        }
    }
    out
}

pub fn random_design(rng: &mut impl Rng, max: usize) -> Design {
    let w = rng.gen_range(1..=max);
    let h = rng.gen_range(1..=max);
    Design::from_fn(w, h, |_, _| rng.gen_bool(0.5))
}

/// Designs produced by the generators.
pub fn generated_designs() -> Vec<Design> {
    use weavesym::generate::{gen_striped_coloring, gen_twill};
    use weavesym::{View, WeaveStructure};
    let mut out = Vec::new();
    for over in 1..=4 {
        for under in 1..=4 {
            for shift in 0..(over + under) as i64 {
                let d = gen_twill(over, under, shift, over + under);
                for x in 1..=3 {
                    let (warp, weft) = gen_striped_coloring(x, x, 0, 0);
                    let w = WeaveStructure::new(d.clone(), warp, weft).unwrap();
                    let front = w.render_visible(View::Front);
                    if front.width() <= 12 && front.height() <= 12 {
                        out.push(front);
                    }
                }
                out.push(d);
            }
        }
    }
    out
}

/// Horizontal mirror of a block: column `i` becomes column `w - 1 - i`.
pub fn mirror_x(d: &Design) -> Design {
    Design::from_fn(d.width(), d.height(), |i, j| d.get((d.width() - 1 - i) as i64, j as i64) == 1)
}

fn side_sign(s: Side) -> i8 {
    if s == Side::S1 {
        1
    } else {
        -1
    }
}

/// Structural checks on one design; returns the first violation.
pub fn check_properties(d: &Design) -> Result<(), String> {
    let a = color_group(d);
    let ctx = |m: &str| format!("{d:?}: {m}");

    // identity first, preserving and side-keeping
    let id = a.elements.first().ok_or_else(|| ctx("no records"))?;
    if !id.iso.is_identity() || id.chi != Chi::Preserve || id.side != Side::S1 {
        return Err(ctx("identity record is not (preserve, S1)"));
    }

    // closure with multiplicative chi, delta and side
    for x in &a.elements {
        for y in &a.elements {
            let g = x.iso.compose(&y.iso);
            let z = a.find(&g).ok_or_else(|| ctx(&format!("{} * {} not in the group", x.iso, y.iso)))?;
            if z.chi.sign() != x.chi.sign() * y.chi.sign() {
                return Err(ctx("chi is not multiplicative"));
            }
            if g.delta() != x.iso.delta() * y.iso.delta() {
                return Err(ctx("delta is not multiplicative"));
            }
            if side_sign(z.side) != side_sign(x.side) * side_sign(y.side) {
                return Err(ctx("side is not multiplicative"));
            }
        }
    }
    let s1 = a.elements.iter().filter(|e| e.side == Side::S1).count();
    if a.elements.len() != s1 && a.elements.len() != 2 * s1 {
        return Err(ctx("S1 index is not 1 or 2"));
    }

    let c = classify(d).map_err(|e| ctx(&e.to_string()))?;

    // complement changes nothing
    let comp = classify(&d.complement()).map_err(|e| ctx(&e.to_string()))?;
    if comp.analysis.elements != c.analysis.elements || comp.layer.symbol != c.layer.symbol {
        return Err(ctx("complement changed the analysis"));
    }

    // a doubled block is the same pattern
    let doubled = classify(&d.tile(2, 1)).map_err(|e| ctx(&e.to_string()))?;
    if doubled.analysis != c.analysis {
        return Err(ctx("block doubling changed the analysis"));
    }

    // conjugation by the point group keeps every name
    for op in PointOp::ALL {
        let moved = classify(&d.transform(&GridIsometry::new(op, IVec2::ZERO))).map_err(|e| ctx(&e.to_string()))?;
        if moved.layer.symbol != c.layer.symbol
            || moved.layer.pair_descriptor != c.layer.pair_descriptor
            || moved.layer.provisional != c.layer.provisional
            || moved.analysis.elements.len() != c.analysis.elements.len()
        {
            return Err(ctx(&format!("conjugation by {op} changed {} to {}", c.summary(), moved.summary())));
        }
    }

    // lift
    let inv = &c.layer.inventory;
    if inv.len() != c.analysis.elements.len() {
        return Err(ctx("inventory size differs from the record count"));
    }
    for (rec, lifted) in c.analysis.elements.iter().zip(inv) {
        if rec.side == Side::S2 && rec.element.kind == ElementKind::Rotation2 {
            if lifted.kind != LayerElementKind::InversionCenter || lifted.element.locus != rec.element.locus {
                return Err(ctx("S2 2-fold rotation did not become an inversion at the same point"));
            }
        }
        // a side-reversing translation by zero would be a mirror plane parallel to the layer
        if lifted.kind == LayerElementKind::GlidePlaneThroughP && lifted.element.locus == Locus::Vector(IVec2::ZERO) {
            return Err(ctx("mirror plane parallel to the layer"));
        }
    }
    Ok(())
}
