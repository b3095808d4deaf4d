//! Partial units, the inverse monoid `Inv(S)`, the étale property and the
//! extension of supported `Inv(S)`-actions to `S`.
//!
//! `a` is a partial unit when some `b` has `ab = a⁺` and `ba = b⁺`. `S` is
//! étale when every element is a right-compatible join of partial units, and
//! then `a·y = ⋁ aᵢ·y` extends an `Inv(S)`-action along any decomposition
//! `a = ⋁ aᵢ`.

use crate::actions::{check_action_hom, enumerate_homs, BooleanSemantics, SupportedAction};
use crate::error::{Error, Result, Violation};
use crate::report::{AxiomReport, LawSet};
use crate::restriction::{BooleanLrm, LeftRestrictionMonoid, SubLrm};

/// Largest number of partial units below one element for which every subset
/// is examined.
pub const MAX_UNITS_BELOW: usize = 20;

/// `Inv(S)` as a sub-LRM of `S`.
#[derive(Clone, Debug)]
pub struct PartialUnits {
    pub sub: SubLrm,
    /// Sub index → sub index of the least inverse witness.
    pub inverse: Vec<usize>,
}

impl PartialUnits {
    pub fn lrm(&self) -> &LeftRestrictionMonoid {
        &self.sub.lrm
    }

    pub fn size(&self) -> usize {
        self.sub.embedding.len()
    }

    /// Parent indices, increasing.
    pub fn elements(&self) -> &[usize] {
        &self.sub.embedding
    }

    pub fn contains(&self, a: usize) -> bool {
        self.sub.index_of(a).is_some()
    }

    fn is_idempotent(&self, a: usize) -> bool {
        self.lrm().mul(a, a) == a
    }

    /// `s ~ t` iff `s⁻¹t` and `st⁻¹` are idempotent (sub indices).
    pub fn fully_compatible(&self, s: usize, t: usize) -> bool {
        let m = self.lrm();
        self.is_idempotent(m.mul(self.inverse[s], t)) && self.is_idempotent(m.mul(s, self.inverse[t]))
    }

    /// Witness, uniqueness and closure laws, over sub indices.
    pub fn laws(&self) -> LawSet<'_> {
        let m = self.lrm();
        let k = self.size();
        let mut laws = LawSet::new();
        laws.law("inverse witness", &["a"], &[k], move |t| {
            let (a, b) = (t[0], self.inverse[t[0]]);
            m.mul(a, b) == m.plus(a) && m.mul(b, a) == m.plus(b)
        });
        laws.law("unique witness", &["a", "b"], &[k, k], move |t| {
            let (a, b) = (t[0], t[1]);
            !(m.mul(a, b) == m.plus(a) && m.mul(b, a) == m.plus(b)) || b == self.inverse[a]
        });
        laws.law("inverse is an involution", &["a"], &[k], move |t| self.inverse[self.inverse[t[0]]] == t[0]);
        laws.law("inverse reverses products", &["a", "b"], &[k, k], move |t| {
            let (a, b) = (t[0], t[1]);
            self.inverse[m.mul(a, b)] == m.mul(self.inverse[b], self.inverse[a])
        });
        laws.law("idempotents are projections", &["a"], &[k], move |t| {
            !self.is_idempotent(t[0]) || m.plus(t[0]) == t[0]
        });
        laws
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("Inv(S)")
    }

    /// `zero` plus joins of fully compatible pairs, the ones (E7) ranges over.
    pub fn semantics(&self, s: &BooleanLrm) -> BooleanSemantics {
        let k = self.size();
        let emb = &self.sub.embedding;
        let join = (0..k * k)
            .map(|i| {
                let (a, b) = (i / k, i % k);
                if !self.fully_compatible(a, b) {
                    return None;
                }
                s.join(emb[a], emb[b]).ok().and_then(|j| self.sub.index_of(j))
            })
            .collect();
        BooleanSemantics::new(self.sub.index_of(s.zero()).expect("0 is a partial unit"), k, join)
    }
}

/// All elements with an inverse witness; the witness is the least one.
pub fn partial_units(s: &BooleanLrm) -> Result<PartialUnits> {
    let m = s.lrm();
    let n = m.size();
    let witness = |a: usize| (0..n).find(|&b| m.mul(a, b) == m.plus(a) && m.mul(b, a) == m.plus(b));
    let (units, witnesses): (Vec<usize>, Vec<usize>) =
        (0..n).filter_map(|a| witness(a).map(|b| (a, b))).unzip();
    let sub = m.sub_lrm(&units)?;
    let inverse = witnesses
        .iter()
        .map(|&b| sub.index_of(b).ok_or_else(|| Violation::new("witness is a partial unit", vec![b])))
        .collect::<Result<Vec<_>, _>>()?;
    let pu = PartialUnits { sub, inverse };
    pu.check().ensure_passed()?;
    Ok(pu)
}

/// One decomposition per element of `S`, or the first element without one.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaleTable {
    /// `decompositions[a]`: fewest partial units, least indices first.
    pub decompositions: Vec<Option<Vec<usize>>>,
}

impl EtaleTable {
    pub fn is_etale(&self) -> bool {
        self.decompositions.iter().all(Option::is_some)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.decompositions.iter().position(Option::is_none)
    }

    pub fn decomposition(&self, a: usize) -> Result<&[usize]> {
        self.decompositions[a]
            .as_deref()
            .ok_or(Error::NotEtale { element: a })
    }
}

/// Partial units below `a`, increasing.
pub fn units_below(s: &BooleanLrm, pu: &PartialUnits, a: usize) -> Vec<usize> {
    pu.elements()
        .iter()
        .copied()
        .filter(|&u| s.lrm().natural_leq(u, a))
        .collect()
}

fn pairwise_compatible(s: &BooleanLrm, items: &[usize]) -> bool {
    items
        .iter()
        .enumerate()
        .all(|(i, &a)| items[i + 1..].iter().all(|&b| s.lrm().right_compatible(a, b)))
}

fn joins_to(s: &BooleanLrm, items: &[usize], a: usize) -> bool {
    pairwise_compatible(s, items) && s.join_all(items).ok() == Some(a)
}

/// Every non-empty set of pairwise right-compatible partial units with join
/// `a`, by size and then lexicographically.
pub fn all_decompositions(s: &BooleanLrm, pu: &PartialUnits, a: usize) -> Result<Vec<Vec<usize>>> {
    let below = units_below(s, pu, a);
    if below.len() > MAX_UNITS_BELOW {
        return Err(Error::SearchCapExceeded { cap: 1 << MAX_UNITS_BELOW });
    }
    let mut out: Vec<Vec<usize>> = (1u32..1 << below.len())
        .map(|mask| {
            (0..below.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| below[i])
                .collect::<Vec<_>>()
        })
        .filter(|items| joins_to(s, items, a))
        .collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Decomposes each element; `S` is étale iff the join of the partial units
/// below every `a` is `a`.
pub fn is_etale(s: &BooleanLrm, pu: &PartialUnits) -> Result<EtaleTable> {
    let n = s.lrm().size();
    let mut decompositions = Vec::with_capacity(n);
    for a in 0..n {
        let below = units_below(s, pu, a);
        if !joins_to(s, &below, a) {
            decompositions.push(None);
            continue;
        }
        let minimal = (1..=below.len()).find_map(|k| first_combination(&below, k, &|c| joins_to(s, c, a)));
        decompositions.push(minimal);
    }
    Ok(EtaleTable { decompositions })
}

/// Least `k`-subset of `items`, in lexicographic order, satisfying `ok`.
fn first_combination(items: &[usize], k: usize, ok: &dyn Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, ok: &dyn Fn(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return ok(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if go(items, k, i + 1, cur, ok) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::with_capacity(k);
    go(items, k, 0, &mut cur, ok).then_some(cur)
}

/// (E1), (E2) and the Boolean laws with (E7) over fully compatible pairs.
pub fn check_inv_supported(a: &SupportedAction<'_>, sem: &BooleanSemantics) -> Result<AxiomReport> {
    let mut report = a.check();
    report.merge(a.check_boolean(sem)?);
    report.structure = "supported Inv(S)-action".into();
    Ok(report)
}

/// The literal sub-table of `a` over `Inv(S)`.
pub fn restrict_action<'t>(a: &SupportedAction<'_>, pu: &'t PartialUnits) -> Result<SupportedAction<'t>, Violation> {
    a.restrict_to(&pu.sub)
}

/// `aᵢ·y ≈ aⱼ·y` for right-compatible partial units `aᵢ`, `aⱼ`.
pub fn check_compatible_units(a: &SupportedAction<'_>, s: &BooleanLrm, pu: &PartialUnits) -> Result<(), Violation> {
    let units = pu.elements();
    for (i, &u) in units.iter().enumerate() {
        for (j, &v) in units.iter().enumerate() {
            if !s.lrm().right_compatible(u, v) {
                continue;
            }
            for y in 0..a.size() {
                if !a.compat(a.act(i, y), a.act(j, y)) {
                    return Err(Violation::new("compatible partial units give compatible points", vec![u, v, y]));
                }
            }
        }
    }
    Ok(())
}

fn join_points(a: &SupportedAction<'_>, points: impl Iterator<Item = usize>) -> Option<usize> {
    let mut acc: Option<usize> = None;
    for p in points {
        acc = Some(match acc {
            None => p,
            Some(q) => a.join(q, p)?,
        });
    }
    acc
}

/// `a·y = ⋁ aᵢ·y` along the stored decompositions. Every decomposition of
/// every element is checked to give the same value, the result is checked as
/// a Boolean supported `S`-action, and its restriction must give back `inv`.
pub fn extend_action<'s>(
    inv: &SupportedAction<'_>,
    s: &'s BooleanLrm,
    pu: &PartialUnits,
    table: &EtaleTable,
) -> Result<SupportedAction<'s>> {
    if let Some(element) = table.first_failure() {
        return Err(Error::NotEtale { element });
    }
    check_inv_supported(inv, &pu.semantics(s))?.ensure_passed()?;
    check_compatible_units(inv, s, pu)?;
    let m = s.lrm();
    let k = inv.size();
    let sub = |u: usize| pu.sub.index_of(u).unwrap();
    let value = |decomp: &[usize], y: usize| join_points(inv, decomp.iter().map(|&u| inv.act(sub(u), y)));
    let mut act = Vec::with_capacity(m.size() * k);
    for a in 0..m.size() {
        let stored = table.decomposition(a)?;
        let all = all_decompositions(s, pu, a)?;
        for y in 0..k {
            let v = value(stored, y).ok_or_else(|| Violation::new("the join ⋁ aᵢ·y exists", vec![a, y]))?;
            if let Some(d) = all.iter().find(|d| value(d, y) != Some(v)) {
                return Err(Error::ChoiceDependence(format!(
                    "a = {a}, y = {y}: decompositions {stored:?} and {d:?} disagree"
                )));
            }
            act.push(v);
        }
    }
    let support = (0..k).map(|y| pu.elements()[inv.support(y)]).collect();
    let ext = SupportedAction::new(m, k, act, support)?;
    ext.check().ensure_passed()?;
    ext.check_boolean(&BooleanSemantics::of_lrm(s))?.ensure_passed()?;
    check_join_action(&ext, s)?;
    if restrict_action(&ext, pu)? != *inv {
        return Err(Violation::new("restricting the extension gives the action back", vec![]).into());
    }
    Ok(ext)
}

/// `(a ∨ b)·y = a·y ∨ b·y` for right-compatible `a`, `b`.
pub fn check_join_action(a: &SupportedAction<'_>, s: &BooleanLrm) -> Result<(), Violation> {
    let n = s.lrm().size();
    for x in 0..n {
        for z in 0..n {
            let Ok(j) = s.join(x, z) else { continue };
            for y in 0..a.size() {
                if a.join(a.act(x, y), a.act(z, y)) != Some(a.act(j, y)) {
                    return Err(Violation::new("(a ∨ b)·y = a·y ∨ b·y", vec![x, z, y]));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CategoryIsoReport {
    pub objects: usize,
    /// `(i, j, |hom_S(Aᵢ, Aⱼ)|, |hom_Inv(Aᵢ, Aⱼ)|)`.
    pub hom_counts: Vec<(usize, usize, usize, usize)>,
    pub warning: Option<String>,
}

/// On every fixture: extending the restriction gives the same table, and the
/// hom sets over `S` and over `Inv(S)` are the same sets of maps.
pub fn check_category_iso(
    s: &BooleanLrm,
    pu: &PartialUnits,
    table: &EtaleTable,
    fixtures: &[SupportedAction<'_>],
    cap: u64,
) -> Result<CategoryIsoReport> {
    let mut report = CategoryIsoReport { objects: fixtures.len(), hom_counts: Vec::new(), warning: None };
    if fixtures.is_empty() {
        report.warning = Some("no fixture actions; the check is vacuous".into());
        return Ok(report);
    }
    let mut restricted = Vec::with_capacity(fixtures.len());
    for (i, a) in fixtures.iter().enumerate() {
        let r = restrict_action(a, pu)?;
        let e = extend_action(&r, s, pu, table)?;
        if e != *a {
            return Err(Violation::new("extend ∘ restrict = id", vec![i]).into());
        }
        restricted.push(r);
    }
    for (i, a) in fixtures.iter().enumerate() {
        for (j, b) in fixtures.iter().enumerate() {
            let over_s = enumerate_homs(a, b, cap)?;
            let over_inv = enumerate_homs(&restricted[i], &restricted[j], cap)?;
            if over_s != over_inv {
                return Err(Violation::new("hom sets coincide", vec![i, j]).into());
            }
            for h in &over_inv {
                check_action_hom(a, b, h)?;
            }
            report.hom_counts.push((i, j, over_s.len(), over_inv.len()));
        }
    }
    Ok(report)
}
