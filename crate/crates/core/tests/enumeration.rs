mod common;

use circle_core::lab::{connected_cubic_classes, enumerate_cubic};
use common::{labeled_cubic, oracle_connected_cubic_count};

#[test]
fn labeled_counts() {
    // labeled cubic graphs on 4, 6 and 8 vertices
    assert_eq!(labeled_cubic(4, false).len(), 1);
    assert_eq!(labeled_cubic(6, false).len(), 70);
    assert_eq!(labeled_cubic(8, false).len(), 19_355);
}

#[test]
fn class_counts_match_oracle() {
    for (n, expected) in [(4, 1), (6, 2), (8, 5), (10, 19)] {
        assert_eq!(oracle_connected_cubic_count(n), expected, "n = {n}");
        assert_eq!(connected_cubic_classes(n).unwrap().len(), expected, "n = {n}");
    }
}

#[test]
fn larger_generator_counts() {
    assert_eq!(connected_cubic_classes(12).unwrap().len(), 85);
    // 10 vertices: 19 connected plus K4 + prism and K4 + K3,3
    assert_eq!(enumerate_cubic(10, false).unwrap().len(), 21);
    // 12 vertices: 85 connected; K4+K4+K4; K4 + each of the 5 on 8; the 3 pairs from {prism, K3,3}
    assert_eq!(enumerate_cubic(12, false).unwrap().len(), 85 + 1 + 5 + 3);
}
