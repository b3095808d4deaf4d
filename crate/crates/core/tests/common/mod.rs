#![allow(dead_code)]

pub mod mutants;
pub mod oracle;

use restriction_core::actions::{principal_action, small_actions, BooleanSemantics};
use restriction_core::generators::{boolean_as_lrm, cyclic, powerset, pt, right_zeros, sym_inv, transformations, trivial_plus};
use restriction_core::matched_pair::{from_lrm, from_lrm_plain, MatchedPair, PairBase};
use restriction_core::{BooleanLrm, FiniteMonoid, LeftRestrictionMonoid, Partition, Semilattice, SupportedAction};

pub struct LrmFixture {
    pub name: String,
    pub lrm: LeftRestrictionMonoid,
    pub boolean: bool,
}

fn fx(name: &str, lrm: LeftRestrictionMonoid, boolean: bool) -> LrmFixture {
    LrmFixture { name: name.into(), lrm, boolean }
}

pub fn lrm_fixtures() -> Vec<LrmFixture> {
    vec![
        fx("pt(2)", pt(2), true),
        fx("pt(3)", pt(3), true),
        fx("sym_inv(2)", sym_inv(2).lrm, false),
        fx("powerset(1)", boolean_as_lrm(1), true),
        fx("powerset(2)", boolean_as_lrm(2), true),
        fx("powerset(3)", boolean_as_lrm(3), true),
        fx("trivial_plus(cyclic(2))", trivial_plus(cyclic(2)), false),
        fx("trivial_plus(cyclic(3))", trivial_plus(cyclic(3)), false),
        fx("trivial_plus(right_zeros(2))", trivial_plus(right_zeros(2)), false),
        fx("trivial_plus(transformations(2))", trivial_plus(transformations(2)), false),
    ]
}

/// Monoids of size at most 4 for the trivial-plus part of the closure checks.
pub fn small_trivial_plus() -> Vec<(String, LeftRestrictionMonoid)> {
    vec![
        ("trivial_plus(cyclic(2))".into(), trivial_plus(cyclic(2))),
        ("trivial_plus(right_zeros(2))".into(), trivial_plus(right_zeros(2))),
        ("trivial_plus(transformations(2))".into(), trivial_plus(transformations(2))),
    ]
}

/// The three-element chain `0 < 1 < 2` with meet = min.
pub fn chain3() -> Semilattice {
    Semilattice::new(FiniteMonoid::from_fn(3, 2, |a, b| a.min(b)).unwrap())
}

/// `{1, z}` with `z` idempotent.
pub fn two_element_idempotent() -> FiniteMonoid {
    FiniteMonoid::from_rows(&[vec![0, 1], vec![1, 1]], 0).unwrap()
}

pub fn pair_fixtures() -> Vec<(String, MatchedPair)> {
    let mut out = Vec::new();
    for f in lrm_fixtures() {
        let ext = if f.boolean { from_lrm(&f.lrm) } else { from_lrm_plain(&f.lrm) }.unwrap();
        out.push((format!("[Proj|Tot] of {}", f.name), ext.pair));
    }
    for (name, m) in [
        ("cyclic(3)", cyclic(3)),
        ("right_zeros(2)", right_zeros(2)),
        ("transformations(2)", transformations(2)),
    ] {
        out.push((format!("[1|{name}]"), MatchedPair::point(m)));
    }
    for k in 1..=3 {
        out.push((format!("[powerset({k})|1]"), MatchedPair::over_trivial_monoid(powerset(k))));
    }
    // E a chain acting trivially, congruences coarser going down
    let chain = chain3();
    let m = cyclic(2);
    out.push((
        "[chain(3)|cyclic(2)]".into(),
        MatchedPair::new(
            PairBase::Semilattice(chain),
            m,
            vec![0, 1, 2, 0, 1, 2],
            vec![Partition::universal(2), Partition::universal(2), Partition::identity(2)],
        )
        .unwrap(),
    ));
    // Boolean pair whose monoid has a non-unit idempotent
    out.push((
        "[powerset(1)|{1,z}]".into(),
        MatchedPair::new(
            PairBase::Boolean(powerset(1)),
            two_element_idempotent(),
            vec![0, 1, 0, 1],
            vec![Partition::universal(2), Partition::identity(2)],
        )
        .unwrap(),
    ));
    out
}

/// Small actions plus, when it fits, the principal action `S·1`.
pub fn action_fixtures(s: &LeftRestrictionMonoid, max_carrier: usize) -> Vec<(String, SupportedAction<'_>)> {
    let mut out = small_actions(s, max_carrier);
    let whole = principal_action(s, s.identity()).action;
    if whole.size() <= max_carrier && !out.iter().any(|(_, a)| *a == whole) {
        out.push(("S".into(), whole));
    }
    out
}

pub fn boolean_actions<'s>(
    s: &BooleanLrm,
    actions: Vec<(String, SupportedAction<'s>)>,
) -> Vec<(String, SupportedAction<'s>)> {
    let sem = BooleanSemantics::of_lrm(s);
    actions
        .into_iter()
        .filter(|(_, a)| a.size() > 0 && a.check_boolean(&sem).map_or(false, |r| r.passed()))
        .collect()
}
