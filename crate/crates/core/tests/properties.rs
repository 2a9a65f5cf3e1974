mod common;

use proptest::prelude::*;
use weavesym::layer::layer_group_name;
use weavesym::{color_group, Design, Faces, GridIsometry, IVec2, PointOp, View, WeaveStructure};

fn design(max: usize) -> impl Strategy<Value = Design> {
    (1..=max, 1..=max).prop_flat_map(|(w, h)| {
        proptest::collection::vec(any::<bool>(), w * h)
            .prop_map(move |cells| Design::from_fn(w, h, |i, j| cells[j * w + i]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_designs_satisfy_the_structural_checks(d in design(8)) {
        if let Err(e) = common::check_properties(&d) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn quarter_turn_keeps_the_layer_symbol(d in design(6), k in 0usize..8, tx in -3i64..3, ty in -3i64..3) {
        let a = layer_group_name(&color_group(&d)).unwrap();
        let g = GridIsometry::new(PointOp::ALL[k], IVec2::new(tx, ty));
        let b = layer_group_name(&color_group(&d.transform(&g))).unwrap();
        prop_assert_eq!(a.symbol, b.symbol);
        prop_assert_eq!(a.s.group_type, b.s.group_type);
    }

    #[test]
    fn mat_back_is_the_mirrored_front(d in design(8), flip in any::<bool>()) {
        let (warp, weft) = if flip { (Faces::WB, Faces::BW) } else { (Faces::BW, Faces::WB) };
        let w = WeaveStructure::new(d, vec![warp], vec![weft]).unwrap();
        prop_assert_eq!(w.render_visible(View::Back), common::mirror_x(&w.render_visible(View::Front)));
    }

    #[test]
    fn basket_front_is_the_overunder(d in design(8)) {
        prop_assert_eq!(WeaveStructure::basket(d.clone()).render_visible(View::Front), d);
    }

    #[test]
    fn striped_back_mirrors_front_up_to_same_colored_crossings(
        d in design(6), xw in 1usize..4, xf in 1usize..4, pw in 0i64..4, pf in 0i64..4,
    ) {
        // where the two strands show the same color in front, the back shows the other one
        let (warp, weft) = weavesym::gen_striped_coloring(xw, xf, pw, pf);
        let w = WeaveStructure::new(d, warp.clone(), weft.clone()).unwrap();
        let front = w.render_visible(View::Front);
        let back = common::mirror_x(&w.render_visible(View::Back));
        for j in 0..front.height() {
            for i in 0..front.width() {
                let same = warp[i % warp.len()].front == weft[j % weft.len()].front;
                let (f, b) = (front.get(i as i64, j as i64), back.get(i as i64, j as i64));
                prop_assert_eq!(f == b, !same, "cell ({}, {})", i, j);
            }
        }
    }
}

#[test]
fn generated_designs_satisfy_the_structural_checks() {
    let designs = common::generated_designs();
    assert!(designs.len() > 100);
    for d in designs {
        common::check_properties(&d).unwrap();
    }
}
