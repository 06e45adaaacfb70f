use brauer_blocks::blocks::{
    block_key_int, brauer_algebra_blocks, classify_weight_class_int, dot_orbit_member, enumerate_block_members,
    module_sequence, same_block_int, BlockClassification, DEFAULT_RANK_CAP,
};
use brauer_blocks::halfint::HalfInt;
use brauer_blocks::partitions::{enumerate_partitions, Partition};
use brauer_blocks::rational::int;
use brauer_blocks::sequences::{make_sequence, same_orbit};
use brauer_blocks::weights::same_bar_weight_int;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn dot_oracle_is_stable_in_rank() {
    let labels = enumerate_partitions(4);
    for delta in -3..=5 {
        let d = HalfInt::from_twice(delta - 2);
        for a in &labels {
            for b in &labels {
                if a.size() % 2 != b.size() % 2 {
                    continue;
                }
                let n = a.size().max(b.size()).max(2);
                let small = dot_orbit_member(a, b, n, delta, DEFAULT_RANK_CAP).unwrap();
                let large = dot_orbit_member(a, b, n + 2, delta, DEFAULT_RANK_CAP).unwrap();
                assert_eq!(small, large, "{a:?} {b:?} n={n} δ={delta}");
                let fast = same_orbit(&make_sequence(a, d), &make_sequence(b, d)).unwrap();
                assert_eq!(small, fast, "{a:?} {b:?} n={n} δ={delta}");
            }
        }
    }
}

#[test]
fn same_block_matches_keys_and_refines_bar_weight() {
    let labels = enumerate_partitions(8);
    for delta in -4..=6 {
        let keys: Vec<_> = labels.iter().map(|l| block_key_int(l, delta)).collect();
        for (i, l) in labels.iter().enumerate() {
            for (j, m) in labels.iter().enumerate() {
                let same = same_block_int(l, m, delta);
                assert_eq!(same, keys[i] == keys[j], "{l:?} {m:?} δ={delta}");
                if same {
                    assert!(same_bar_weight_int(l, m, delta), "{l:?} {m:?} δ={delta}");
                }
            }
        }
    }
}

#[test]
fn split_partners() {
    for delta in [-4, -2, 0, 2, 4, 6] {
        for lambda in enumerate_partitions(8) {
            let zero = module_sequence(&lambda, delta).has_zero_entry();
            match classify_weight_class_int(&lambda, delta) {
                BlockClassification::Split { partner } => {
                    assert!(!zero);
                    assert!(same_bar_weight_int(&lambda, &partner, delta), "{lambda:?} δ={delta}");
                    assert!(!same_block_int(&lambda, &partner, delta), "{lambda:?} δ={delta}");
                }
                BlockClassification::Single => assert!(zero, "{lambda:?} δ={delta}"),
            }
        }
    }
    for delta in [-3, -1, 1, 3, 5] {
        for lambda in enumerate_partitions(6) {
            assert_eq!(classify_weight_class_int(&lambda, delta), BlockClassification::Single);
        }
    }
}

#[test]
fn enumeration_agrees_with_pairwise_decision() {
    for delta in -2..=4 {
        for lambda in enumerate_partitions(4) {
            let members = enumerate_block_members(&lambda, &int(delta), 9);
            let expected: Vec<_> = enumerate_partitions(9)
                .into_iter()
                .filter(|mu| same_block_int(&lambda, mu, delta))
                .collect();
            assert_eq!(members, expected);
            assert!(members.contains(&lambda));
        }
    }
}

#[test]
fn brauer_blocks_partition_the_labels() {
    for delta in -3..=5 {
        for n in 0..=7 {
            let blocks = brauer_algebra_blocks(n, delta);
            let mut all: Vec<_> = blocks.iter().flatten().cloned().collect();
            all.sort();
            let labels: Vec<_> = enumerate_partitions(n).into_iter().filter(|l| l.size() % 2 == n % 2).collect();
            assert_eq!(all, labels);
            for block in &blocks {
                assert!(block.windows(2).all(|w| w[0] < w[1]));
                for m in block {
                    assert!(same_block_int(&block[0], m, delta));
                }
            }
            for (x, y) in blocks.iter().zip(blocks.iter().skip(1)) {
                assert!(x[0] < y[0]);
                assert!(!same_block_int(&x[0], &y[0], delta));
            }
            assert_eq!(blocks, brauer_algebra_blocks(n, delta), "deterministic");
        }
    }
}

#[test]
fn worked_example_from_dot_action() {
    // L(∅) and L((2,2,2)) at δ = 2: transposes ∅ and (3,3) are dot-linked at n = 6
    assert!(same_block_int(&Partition::empty(), &p(&[2, 2, 2]), 2));
    assert!(dot_orbit_member(&Partition::empty(), &p(&[3, 3]), 6, 2, DEFAULT_RANK_CAP).unwrap());
}

#[test]
fn block_key_json() {
    let key = block_key_int(&p(&[1, 1]), 2);
    assert_eq!(
        serde_json::to_string(&key).unwrap(),
        r#"{"delta":2,"twiceCharge":0,"devMap":[],"negParity":1}"#
    );
    let c = classify_weight_class_int(&Partition::empty(), 2);
    assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"kind":"split","partner":[1,1]}"#);
}
