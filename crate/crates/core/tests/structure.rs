mod common;

use common::{action_fixtures, oracle};
use restriction_core::actions::{box_product, principal_action, projection_action};
use restriction_core::em_sets::{from_action, to_action};
use restriction_core::generators::{pt, PartialMap};
use restriction_core::matched_pair::from_lrm;

#[test]
fn common_upper_bounds_force_compatibility() {
    let s = pt(2);
    for (name, a) in action_fixtures(&s, 9) {
        for x in 0..a.size() {
            for y in 0..a.size() {
                for z in 0..a.size() {
                    if a.leq(x, z) && a.leq(y, z) {
                        assert!(a.compat(x, y), "{name}: {x}, {y} ≤ {z}");
                    }
                }
            }
        }
        for x in 0..a.size() {
            assert_eq!(a.minimum().map(|m| a.leq(m, x)), a.minimum().map(|_| true));
            assert_eq!(a.join(x, x), Some(x));
            for y in 0..a.size() {
                assert_eq!(a.join(x, y), oracle::join(&a, x, y));
            }
        }
        assert_eq!(a.minimum(), oracle::minimum(&a), "{name}");
    }
}

#[test]
fn box_product_sizes() {
    let s = pt(2);
    let whole = principal_action(&s, s.identity()).action;
    let t = projection_action(&s).action;
    let expected = (0..whole.size())
        .flat_map(|x| (0..t.size()).map(move |y| (x, y)))
        .filter(|&(x, y)| whole.support(x) == t.support(y))
        .count();
    assert_eq!(expected, 9);
    assert_eq!(box_product(&whole, &t).size(), expected);
}

#[test]
fn points_over_one_of_pt2_are_the_total_maps() {
    let s = pt(2);
    let ext = from_lrm(&s).unwrap();
    let whole = principal_action(&s, s.identity());
    let f = from_action(&whole.action, &ext).unwrap();
    let totals: Vec<usize> = f.points.iter().map(|&i| whole.labels[i]).collect();
    assert_eq!(totals, s.totals());
    for (ei, &e) in ext.proj.iter().enumerate() {
        let dom = PartialMap::from_index(2, e).0;
        for i in 0..totals.len() {
            for j in 0..totals.len() {
                let (m, n) = (PartialMap::from_index(2, totals[i]).0, PartialMap::from_index(2, totals[j]).0);
                let agree = (0..2).all(|k| dom[k].is_none() || m[k] == n[k]);
                assert_eq!(f.set.equiv(ei, i, j), agree);
            }
        }
    }
    let to = to_action(&f.set, &s, &ext).unwrap();
    assert_eq!(to.action.size(), 9);
    // the minimum is [y]₀ for every y
    let zero = ext.e_of(s.zero().unwrap()).unwrap();
    let min = to.action.action.minimum().unwrap();
    for y in 0..f.set.size() {
        assert_eq!(to.point(zero, f.set.class_rep(zero, y)), Some(min));
    }
}
