//! Twill over/under maps and striped strand colorings.

use crate::design::Design;
use crate::weave::Faces;

/// Twill with `over` weft-over cells followed by `under` warp-over cells in
/// each row, each row shifted `shift` cells to the right of the one above.
///
/// Cell `(i, j)` is 1 iff `(i - shift*j) mod (over+under) < over`; the block
/// is `(over+under) x rows`.
///
/// # Panics
/// If `over + under < 2`, `over` or `under` is zero, or `rows` is zero.
pub fn gen_twill(over: usize, under: usize, shift: i64, rows: usize) -> Design {
    assert!(over > 0 && under > 0, "over and under must be positive");
    assert!(rows > 0, "rows must be positive");
    let p = (over + under) as i64;
    Design::from_fn(p as usize, rows, |i, j| (i as i64 - shift * j as i64).rem_euclid(p) < over as i64)
}

/// Faces for strands striped in runs of `x` one-sided strands, alternating
/// black-front and white-front. Returns one full period, `2x` strands.
pub fn stripes(x: usize, phase: i64) -> Vec<Faces> {
    assert!(x > 0, "stripe width must be positive");
    let x = x as i64;
    (0..2 * x)
        .map(|i| if (i + phase).div_euclid(x) % 2 == 0 { Faces::BW } else { Faces::WB })
        .collect()
}

/// Warp and weft face sequences for striped one-sided strands.
pub fn gen_striped_coloring(x_warp: usize, x_weft: usize, phase_warp: i64, phase_weft: i64) -> (Vec<Faces>, Vec<Faces>) {
    (stripes(x_warp, phase_warp), stripes(x_weft, phase_weft))
}
