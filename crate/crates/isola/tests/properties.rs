//! Property tests: format round trips, relabeling invariance, and order
//! monotonicity on randomized inputs.

use isola::cograph::{Cograph, SumKind};
use isola::cotree::{canonical_key, CographExpr};
use isola::io::{parse_cograph_text, render_cograph_text, CographJson};
use proptest::prelude::*;

/// Random cotrees with a bounded leaf count; realized to random cographs.
fn arb_expr() -> impl Strategy<Value = CographExpr> {
    let leaf = prop_oneof![
        Just(CographExpr::Leaf { looped: false }),
        Just(CographExpr::Leaf { looped: true }),
    ];
    leaf.prop_recursive(3, 6, 3, |inner| {
        (prop_oneof![Just(SumKind::Dsum), Just(SumKind::Csum)], prop::collection::vec(inner, 2..4))
            .prop_map(|(kind, children)| CographExpr::Node { kind, children })
    })
    .prop_filter("bounded vertex count", |e| e.leaf_count() <= 6)
}

fn arb_cograph() -> impl Strategy<Value = Cograph> {
    arb_expr().prop_map(|e| e.realize())
}

proptest! {
    #[test]
    fn text_format_round_trips(c in arb_cograph()) {
        let s = render_cograph_text(&c);
        prop_assert_eq!(parse_cograph_text(&s).unwrap(), c);
    }

    #[test]
    fn json_format_round_trips(c in arb_cograph()) {
        let j = serde_json::to_string(&CographJson::from_cograph(&c)).unwrap();
        let back: CographJson = serde_json::from_str(&j).unwrap();
        prop_assert_eq!(back.to_cograph().unwrap(), c);
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(c in arb_cograph(), seed in any::<u64>()) {
        let n = c.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // a cheap seeded shuffle
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s as usize) % (i + 1));
        }
        prop_assert_eq!(canonical_key(&c.relabel(&perm)), canonical_key(&c));
    }

    #[test]
    fn negation_is_an_involution_and_swaps_depths(c in arb_cograph()) {
        prop_assert_eq!(c.neg().neg(), c.clone());
        prop_assert_eq!(c.neg().depth(), c.codepth());
    }

    #[test]
    fn weak_order_pullback_is_monotone(f in prop::collection::vec(0usize..3, 0..5), pick in any::<u64>()) {
        let target = isola::stratline::all_weak_orders(3);
        let a = &target[(pick as usize) % target.len()];
        let b = &target[(pick as usize / 64) % target.len()];
        if a.refines_into(b) {
            prop_assert!(a.pullback(&f).refines_into(&b.pullback(&f)));
        }
    }
}
