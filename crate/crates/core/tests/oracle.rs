mod common;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use weavesym::Design;

fn check(d: &Design) {
    let brute = common::brute_force(d);
    let fast = common::expanded_pipeline(d);
    assert_eq!(brute, fast, "{d:?}");
}

#[test]
fn every_block_up_to_nine_cells() {
    let mut n = 0;
    for w in 1..=9usize {
        for h in 1..=9usize {
            if w * h > 9 {
                continue;
            }
            for m in 0u32..1 << (w * h) {
                check(&Design::from_fn(w, h, |i, j| m >> (j * w + i) & 1 == 1));
                n += 1;
            }
        }
    }
    assert!(n > 2000);
}

#[test]
fn sampled_blocks_up_to_four_by_four() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..600 {
        let w = rng.gen_range(1..=4);
        let h = rng.gen_range(1..=4);
        let d = Design::from_fn(w, h, |_, _| rng.gen_bool(0.5));
        check(&d);
    }
}

#[test]
fn checkerboard_by_hand() {
    let tagged = common::brute_force(&Design::checkerboard());
    // 8 point operations times 4 translations modulo the 2x2 period
    assert_eq!(tagged.len(), 32);
}
