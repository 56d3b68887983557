//! Isomorphism search checked against independent answers: exhaustive
//! enumeration of bijections up to order 8, and known isomorphism classes
//! up to order 16.

use spin_cover::finite::{abstract_group, find_isomorphism, verify_isomorphism, FiniteGroup, GroupKind};

fn group(name: &str) -> FiniteGroup {
    abstract_group(&name.parse::<GroupKind>().unwrap()).unwrap()
}

/// Heap's algorithm over all bijections; true if any is a homomorphism.
fn brute_force_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let n = g.order();
    if n != h.order() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    if verify_isomorphism(g, h, &perm) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if verify_isomorphism(g, h, &perm) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// (name, class id); equal ids mean isomorphic.
const SMALL: &[(&str, u32)] = &[
    ("Z1", 1),
    ("Z2", 2),
    ("Dih2", 2),
    ("Z3", 3),
    ("Z4", 4),
    ("Z2xZ2", 5),
    ("Dih4", 5),
    ("Z5", 6),
    ("Z6", 7),
    ("Z2xZ3", 7),
    ("Dih6", 8),
    ("Dic4", 4),
    ("Z7", 9),
    ("Z8", 10),
    ("Z4xZ2", 11),
    ("Z2xZ4", 11),
    ("Z2xZ2xZ2", 12),
    ("Dih8", 13),
    ("Dic8", 14),
];

const MEDIUM: &[(&str, u32)] = &[
    ("Z9", 20),
    ("Z3xZ3", 21),
    ("Z10", 22),
    ("Z2xZ5", 22),
    ("Dih10", 23),
    ("Z12", 24),
    ("Z3xZ4", 24),
    ("Z2xZ6", 25),
    ("Z2xZ2xZ3", 25),
    ("Dih12", 26),
    ("Z2xDih6", 26),
    ("Dic12", 27),
    ("Z14", 28),
    ("Dih14", 29),
    ("Z15", 30),
    ("Z3xZ5", 30),
    ("Z16", 31),
    ("Z4xZ4", 32),
    ("Z2xZ8", 33),
    ("Z2xZ2xZ4", 34),
    ("Z2xZ2xZ2xZ2", 35),
    ("Dih16", 36),
    ("Dic16", 37),
    ("Z2xDih8", 38),
    ("Z2xDic8", 39),
    ("Z4xZ2xZ2", 34),
];

#[test]
fn matches_bijection_enumeration_up_to_order_eight() {
    for (a, ca) in SMALL {
        for (b, cb) in SMALL {
            let (g, h) = (group(a), group(b));
            if g.order() != h.order() {
                continue;
            }
            let oracle = brute_force_isomorphic(&g, &h);
            assert_eq!(oracle, ca == cb, "class table disagrees with enumeration for {a} vs {b}");
            let found = find_isomorphism(&g, &h).unwrap();
            assert_eq!(found.is_some(), oracle, "{a} vs {b}");
            if let Some(w) = found {
                assert!(verify_isomorphism(&g, &h, &w.mapping));
            }
        }
    }
}

#[test]
fn matches_known_classes_up_to_order_sixteen() {
    for (a, ca) in MEDIUM {
        for (b, cb) in MEDIUM {
            let (g, h) = (group(a), group(b));
            if g.order() != h.order() {
                continue;
            }
            let found = find_isomorphism(&g, &h).unwrap();
            assert_eq!(found.is_some(), ca == cb, "{a} vs {b}");
            if let Some(w) = found {
                assert!(verify_isomorphism(&g, &h, &w.mapping), "{a} vs {b}");
            }
        }
    }
}
