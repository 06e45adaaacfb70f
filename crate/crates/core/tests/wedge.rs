use brauer_blocks::halfint::HalfInt;
use brauer_blocks::partitions::{enumerate_partitions, Partition};
use brauer_blocks::rational::{int, rat, Rational};
use brauer_blocks::sequences::make_sequence;
use brauer_blocks::wedge::{apply_b, apply_lowering, apply_raising, relative_weight, WedgeVector};
use brauer_blocks::weights::{alpha_part, reduce_mod_qtheta, RootVector};
use proptest::prelude::*;

fn charge(delta: i64) -> HalfInt {
    HalfInt::from_twice(delta - 2)
}

#[test]
fn weight_bridge_through_transpose() {
    for delta in -4..=6 {
        for lambda in enumerate_partitions(10) {
            let seq = make_sequence(&lambda.transpose(), charge(delta));
            assert_eq!(relative_weight(&seq), -&alpha_part(&lambda, delta), "{lambda:?} δ={delta}");
        }
    }
}

#[test]
fn b_shifts_bar_weight_by_one_class() {
    for delta in -2..=4 {
        let d = charge(delta);
        for shape in enumerate_partitions(6) {
            let seq = make_sequence(&shape, d);
            for twice in (-20..=20).filter(|t| (t - (delta - 1)).rem_euclid(2) == 0) {
                let i = HalfInt::from_twice(twice);
                let out = apply_b(i, &WedgeVector::basis(&seq)).unwrap();
                assert!(out.len() <= 2);
                let class_of_alpha = reduce_mod_qtheta(&RootVector::alpha(i), delta).unwrap();
                for (t, c) in out.terms() {
                    assert_eq!(*c, int(1));
                    let shift = &relative_weight(&t) - &relative_weight(&seq);
                    assert!(shift == RootVector::alpha(i) || shift == -&RootVector::alpha(-i));
                    assert_eq!(reduce_mod_qtheta(&shift, delta).unwrap(), class_of_alpha);
                }
            }
        }
    }
}

fn vector(delta: i64) -> impl Strategy<Value = WedgeVector> {
    let term = (prop::collection::vec(1usize..5, 0..4), -4i64..5, 1i64..4);
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut v = WedgeVector::zero(charge(delta));
        for (mut parts, num, den) in terms {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            v.add_term(Partition::new(parts).unwrap(), rat(num, den));
        }
        v
    })
}

proptest! {
    #[test]
    fn generators_are_linear(
        (delta, v, w) in (-2i64..5).prop_flat_map(|d| (Just(d), vector(d), vector(d))),
        k in -4i64..5,
        scale in -3i64..4,
    ) {
        let i = HalfInt::from_twice(2 * k + delta - 1);
        let c: Rational = int(scale);
        let sum = v.add(&w.scale(&c));
        for op in [apply_raising, apply_lowering, apply_b] {
            let lhs = op(i, &sum).unwrap();
            let rhs = op(i, &v).unwrap().add(&op(i, &w).unwrap().scale(&c));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
