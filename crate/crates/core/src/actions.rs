//! Supported actions `(S, X, p)` of a left restriction monoid, their
//! homomorphisms, and the Cartesian closed structure: the terminal action on
//! `Proj(S)`, the box product, and exponentials `B^A = ⊔_e hom(Se □ A, B)`.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use crate::error::{Error, Result, StructureError, Violation};
use crate::report::{AxiomReport, LawSet};
use crate::restriction::{BooleanLrm, LeftRestrictionMonoid, SubLrm};
use crate::search::EquivariantSearch;

/// What the Boolean axioms need from the acting monoid: its zero, and the
/// joins over which (E7) quantifies.
#[derive(Clone, Debug)]
pub struct BooleanSemantics {
    zero: usize,
    size: usize,
    join: Vec<Option<usize>>,
}

impl BooleanSemantics {
    /// `join[s * size + t]` is `Some(s ∨ t)` exactly on the pairs (E7) ranges over.
    pub fn new(zero: usize, size: usize, join: Vec<Option<usize>>) -> Self {
        assert_eq!(join.len(), size * size);
        BooleanSemantics { zero, size, join }
    }

    /// Joins of right-compatible pairs.
    pub fn of_lrm(s: &BooleanLrm) -> Self {
        let n = s.lrm().size();
        let join = (0..n * n).map(|i| s.join(i / n, i % n).ok()).collect();
        BooleanSemantics { zero: s.zero(), size: n, join }
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn join(&self, s: usize, t: usize) -> Option<usize> {
        self.join[s * self.size + t]
    }
}

#[derive(Clone, Debug)]
pub struct SupportedAction<'s> {
    lrm: &'s LeftRestrictionMonoid,
    size: usize,
    /// `act[s * size + x] = s·x`.
    act: Vec<usize>,
    support: Vec<usize>,
    order: OnceLock<Vec<bool>>,
    joins: OnceLock<Vec<Option<usize>>>,
}

impl PartialEq for SupportedAction<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.lrm == other.lrm && self.act == other.act && self.support == other.support
    }
}

impl<'s> SupportedAction<'s> {
    pub fn new(
        lrm: &'s LeftRestrictionMonoid,
        size: usize,
        act: Vec<usize>,
        support: Vec<usize>,
    ) -> Result<Self, StructureError> {
        StructureError::check_len("act", act.len(), lrm.size() * size)?;
        StructureError::check_range("act", &act, size)?;
        StructureError::check_len("support", support.len(), size)?;
        StructureError::check_range("support", &support, lrm.size())?;
        Ok(SupportedAction { lrm, size, act, support, order: OnceLock::new(), joins: OnceLock::new() })
    }

    /// `rows[s][x] = s·x`.
    pub fn from_rows(
        lrm: &'s LeftRestrictionMonoid,
        rows: &[Vec<usize>],
        support: Vec<usize>,
    ) -> Result<Self, StructureError> {
        let size = support.len();
        let act = StructureError::flatten("act", rows, lrm.size(), size, size)?;
        Self::new(lrm, size, act, support)
    }

    pub fn from_fn(
        lrm: &'s LeftRestrictionMonoid,
        size: usize,
        act: impl Fn(usize, usize) -> usize,
        support: impl Fn(usize) -> usize,
    ) -> Result<Self, StructureError> {
        let table = (0..lrm.size() * size).map(|i| act(i / size.max(1), i % size.max(1))).collect();
        Self::new(lrm, size, table, (0..size).map(support).collect())
    }

    pub fn lrm(&self) -> &'s LeftRestrictionMonoid {
        self.lrm
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, s: usize, x: usize) -> usize {
        self.act[s * self.size + x]
    }

    #[inline]
    pub fn support(&self, x: usize) -> usize {
        self.support[x]
    }

    pub fn act_table(&self) -> &[usize] {
        &self.act
    }

    pub fn support_table(&self) -> &[usize] {
        &self.support
    }

    pub fn act_rows(&self) -> Vec<Vec<usize>> {
        if self.size == 0 {
            return vec![Vec::new(); self.lrm.size()];
        }
        self.act.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn laws(&self) -> LawSet<'_> {
        let (n, k) = (self.lrm.size(), self.size);
        let s = self.lrm;
        let one = s.identity();
        let mut laws = LawSet::new();
        laws.law("unit", &["x"], &[k], move |t| self.act(one, t[0]) == t[0]);
        laws.law("action", &["s", "t", "x"], &[n, n, k], move |t| {
            self.act(s.mul(t[0], t[1]), t[2]) == self.act(t[0], self.act(t[1], t[2]))
        });
        laws.law("support is a projection", &["x"], &[k], move |t| {
            s.is_projection(self.support(t[0]))
        });
        laws.law("E1", &["x"], &[k], move |t| self.act(self.support(t[0]), t[0]) == t[0]);
        laws.law("E2", &["s", "x"], &[n, k], move |t| {
            let (a, x) = (t[0], t[1]);
            self.support(self.act(a, x)) == s.plus(s.mul(a, self.support(x)))
        });
        laws
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("supported action")
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }

    /// (E3)–(E7). The minimum is the one found by [`minimum`](Self::minimum).
    pub fn boolean_laws<'a>(&'a self, sem: &'a BooleanSemantics) -> LawSet<'a> {
        let (n, k) = (self.lrm.size(), self.size);
        let mut laws = LawSet::new();
        let z = self.minimum();
        laws.law("E3 minimum", &[], &[], move |_| z.is_some());
        match z {
            Some(z) => {
                laws.law("E3 fixed", &["s"], &[n], move |t| self.act(t[0], z) == z);
                laws.law("E4", &["x"], &[k], move |t| self.act(sem.zero(), t[0]) == z);
            }
            None => {
                laws.skip("E3 fixed", "no minimum element");
                laws.skip("E4", "no minimum element");
            }
        }
        laws.law("E5", &["x", "y"], &[k, k], move |t| {
            let (x, y) = (t[0], t[1]);
            if !self.compat(x, y) {
                return true;
            }
            match self.join(x, y) {
                Some(j) => sem.join(self.support(x), self.support(y)) == Some(self.support(j)),
                None => false,
            }
        });
        laws.law("E6", &["s", "x", "y"], &[n, k, k], move |t| {
            let (a, x, y) = (t[0], t[1], t[2]);
            match (self.compat(x, y), self.join(x, y)) {
                (true, Some(j)) => self.join(self.act(a, x), self.act(a, y)) == Some(self.act(a, j)),
                _ => true,
            }
        });
        laws.law("E7", &["s", "t", "x"], &[n, n, k], move |t| {
            let (a, b, x) = (t[0], t[1], t[2]);
            match sem.join(a, b) {
                Some(j) => self.join(self.act(a, x), self.act(b, x)) == Some(self.act(j, x)),
                None => true,
            }
        });
        laws
    }

    /// Errors with [`Error::EmptyCarrier`] on an empty carrier.
    pub fn check_boolean(&self, sem: &BooleanSemantics) -> Result<AxiomReport> {
        if self.size == 0 {
            return Err(Error::EmptyCarrier);
        }
        Ok(self.boolean_laws(sem).run("Boolean supported action"))
    }

    fn order(&self) -> &[bool] {
        self.order.get_or_init(|| {
            let k = self.size;
            (0..k * k)
                .map(|i| i / k == self.act(self.support(i / k), i % k))
                .collect()
        })
    }

    /// `x ≤ y` iff `x = p(x)·y`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order()[x * self.size + y]
    }

    /// `x ≈ y` iff `p(x)·y = p(y)·x`.
    #[inline]
    pub fn compat(&self, x: usize, y: usize) -> bool {
        self.act(self.support(x), y) == self.act(self.support(y), x)
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(x, y)))
    }

    /// Least upper bound in `(X, ≤)`, by scan.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let k = self.size;
        self.joins.get_or_init(|| {
            let mut table = vec![None; k * k];
            for a in 0..k {
                for b in a..k {
                    let upper: Vec<usize> =
                        (0..k).filter(|&u| self.leq(a, u) && self.leq(b, u)).collect();
                    let j = upper.iter().copied().find(|&u| upper.iter().all(|&v| self.leq(u, v)));
                    table[a * k + b] = j;
                    table[b * k + a] = j;
                }
            }
            table
        })[x * k + y]
    }

    /// `X_e`, increasing.
    pub fn fiber(&self, e: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.support(x) == e).collect()
    }

    /// `φ^e_f: X_e → X_f`, `x ↦ f·x`, listed in the order of `fiber(e)`.
    pub fn restriction_map(&self, e: usize, f: usize) -> Result<Vec<usize>> {
        let s = self.lrm;
        if !(s.is_projection(e) && s.is_projection(f) && s.natural_leq(f, e)) {
            return Err(Error::Precondition(format!("{f} ≤ {e} in Proj(S)")));
        }
        Ok(self.fiber(e).into_iter().map(|x| self.act(f, x)).collect())
    }

    /// `Err(y)` for the least `y` lying below no point of `X₁`.
    pub fn is_factorizable(&self) -> Result<(), usize> {
        let top = self.fiber(self.lrm.identity());
        match (0..self.size).find(|&y| !top.iter().any(|&x| self.leq(y, x))) {
            Some(y) => Err(y),
            None => Ok(()),
        }
    }

    pub fn has_surjective_support(&self) -> bool {
        self.lrm.projections().iter().all(|&e| self.support.contains(&e))
    }

    /// The same action restricted to a sub-LRM of the acting monoid.
    pub fn restrict_to<'t>(&self, sub: &'t SubLrm) -> Result<SupportedAction<'t>, Violation> {
        let support = self
            .support
            .iter()
            .enumerate()
            .map(|(x, &e)| sub.index_of(e).ok_or_else(|| Violation::new("support lies in the sub-LRM", vec![x])))
            .collect::<Result<Vec<_>, _>>()?;
        let act = sub
            .embedding
            .iter()
            .flat_map(|&s| (0..self.size).map(move |x| self.act(s, x)))
            .collect();
        Ok(SupportedAction::new(&sub.lrm, self.size, act, support).expect("same carrier"))
    }
}

pub fn check_supported(a: &SupportedAction<'_>) -> AxiomReport {
    a.check()
}

pub fn check_boolean_supported(a: &SupportedAction<'_>, sem: &BooleanSemantics) -> Result<AxiomReport> {
    a.check_boolean(sem)
}

/// An action whose points carry labels, such as the pairs of a box product.
#[derive(Clone, Debug)]
pub struct LabeledAction<'s, L> {
    pub action: SupportedAction<'s>,
    pub labels: Vec<L>,
    index: HashMap<L, usize>,
}

impl<'s, L: Clone + Eq + Hash> LabeledAction<'s, L> {
    pub fn new(action: SupportedAction<'s>, labels: Vec<L>) -> Self {
        assert_eq!(action.size(), labels.len());
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        LabeledAction { action, labels, index }
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }
}

/// `Proj(S)` with `s·e = (se)⁺` and `p = id`; labels are the projections.
pub fn projection_action(s: &LeftRestrictionMonoid) -> LabeledAction<'_, usize> {
    let proj = s.projections().to_vec();
    let k = proj.len();
    let act = (0..s.size() * k)
        .map(|i| s.proj_pos(s.plus(s.mul(i / k, proj[i % k]))).unwrap())
        .collect();
    let action = SupportedAction::new(s, k, act, proj.clone()).expect("sized from S");
    LabeledAction::new(action, proj)
}

/// `Se` acted on by left multiplication with support `x ↦ x⁺`.
pub fn principal_action(s: &LeftRestrictionMonoid, e: usize) -> LabeledAction<'_, usize> {
    let carrier: Vec<usize> = (0..s.size()).filter(|&t| s.mul(t, e) == t).collect();
    let pos: HashMap<usize, usize> = carrier.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let k = carrier.len();
    let act = (0..s.size() * k).map(|i| pos[&s.mul(i / k, carrier[i % k])]).collect();
    let support = carrier.iter().map(|&t| s.plus(t)).collect();
    let action = SupportedAction::new(s, k, act, support).expect("Se is closed");
    LabeledAction::new(action, carrier)
}

/// `A □ B = {(x, y) : p(x) = q(y)}`, pairs in lexicographic order.
pub fn box_product<'s>(a: &SupportedAction<'s>, b: &SupportedAction<'s>) -> LabeledAction<'s, (usize, usize)> {
    let s = a.lrm();
    let pairs: Vec<(usize, usize)> = (0..a.size())
        .flat_map(|x| (0..b.size()).map(move |y| (x, y)))
        .filter(|&(x, y)| a.support(x) == b.support(y))
        .collect();
    let pos: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let k = pairs.len();
    let act = (0..s.size() * k)
        .map(|i| {
            let (x, y) = pairs[i % k];
            pos[&(a.act(i / k, x), b.act(i / k, y))]
        })
        .collect();
    let support = pairs.iter().map(|&(x, _)| a.support(x)).collect();
    let action = SupportedAction::new(s, k, act, support).expect("pairs are closed");
    LabeledAction::new(action, pairs)
}

/// The two projection homomorphisms out of a box product.
pub fn product_projections(prod: &LabeledAction<'_, (usize, usize)>) -> (Vec<usize>, Vec<usize>) {
    (
        prod.labels.iter().map(|&(x, _)| x).collect(),
        prod.labels.iter().map(|&(_, y)| y).collect(),
    )
}

/// `⟨f, g⟩: Z → A □ B`.
pub fn pairing(prod: &LabeledAction<'_, (usize, usize)>, f: &[usize], g: &[usize]) -> Result<Vec<usize>, Violation> {
    f.iter()
        .zip(g)
        .enumerate()
        .map(|(z, (&x, &y))| prod.index_of(&(x, y)).ok_or_else(|| Violation::new("supports agree", vec![z])))
        .collect()
}

/// `A ⊔ B`, points of `B` shifted by `|A|`.
pub fn disjoint_union<'s>(a: &SupportedAction<'s>, b: &SupportedAction<'s>) -> SupportedAction<'s> {
    let (ka, k) = (a.size(), a.size() + b.size());
    SupportedAction::from_fn(
        a.lrm(),
        k,
        |s, x| if x < ka { a.act(s, x) } else { ka + b.act(s, x - ka) },
        |x| if x < ka { a.support(x) } else { b.support(x - ka) },
    )
    .expect("sized from parts")
}

/// S-equivariant and support preserving.
pub fn check_action_hom(a: &SupportedAction<'_>, b: &SupportedAction<'_>, map: &[usize]) -> Result<(), Violation> {
    if map.len() != a.size() || map.iter().any(|&y| y >= b.size()) {
        return Err(Violation::new("map X → X'", vec![]));
    }
    for x in 0..a.size() {
        if b.support(map[x]) != a.support(x) {
            return Err(Violation::new("preserves support", vec![x]));
        }
    }
    for s in 0..a.lrm().size() {
        for x in 0..a.size() {
            if map[a.act(s, x)] != b.act(s, map[x]) {
                return Err(Violation::new("equivariance", vec![s, x]));
            }
        }
    }
    Ok(())
}

/// [`check_action_hom`] plus preservation of the minimum and of binary joins.
pub fn check_boolean_action_hom(
    a: &SupportedAction<'_>,
    b: &SupportedAction<'_>,
    map: &[usize],
) -> Result<(), Violation> {
    check_action_hom(a, b, map)?;
    if !preserves_boolean(a, b, map) {
        let (x, y) = first_join_failure(a, b, map).unwrap_or((0, 0));
        return Err(Violation::new("preserves minimum and joins", vec![x, y]));
    }
    Ok(())
}

fn first_join_failure(a: &SupportedAction<'_>, b: &SupportedAction<'_>, map: &[usize]) -> Option<(usize, usize)> {
    (0..a.size())
        .flat_map(|x| (0..a.size()).map(move |y| (x, y)))
        .find(|&(x, y)| {
            a.compat(x, y) && a.join(x, y).map(|j| map[j]) != b.join(map[x], map[y])
        })
}

fn preserves_boolean(a: &SupportedAction<'_>, b: &SupportedAction<'_>, map: &[usize]) -> bool {
    match (a.minimum(), b.minimum()) {
        (Some(z), Some(z2)) if map[z] == z2 => {}
        (None, _) if a.size() == 0 => {}
        _ => return false,
    }
    first_join_failure(a, b, map).is_none()
}

/// `hom(A, B)` in lexicographic order, fiber by fiber.
pub fn enumerate_homs(a: &SupportedAction<'_>, b: &SupportedAction<'_>, cap: u64) -> Result<Vec<Vec<usize>>> {
    EquivariantSearch::new(a.size(), b.size(), a.lrm().size(), |s, x| a.act(s, x), |s, y| b.act(s, y))
        .allow(|x, y| a.support(x) == b.support(y))
        .cap(cap)
        .run()
}

/// Homomorphisms that also preserve the minimum and binary joins.
pub fn enumerate_boolean_homs(
    a: &SupportedAction<'_>,
    b: &SupportedAction<'_>,
    cap: u64,
) -> Result<Vec<Vec<usize>>> {
    let za = a.minimum();
    let zb = b.minimum();
    EquivariantSearch::new(a.size(), b.size(), a.lrm().size(), |s, x| a.act(s, x), |s, y| b.act(s, y))
        .allow(move |x, y| a.support(x) == b.support(y) && (Some(x) != za || Some(y) == zb))
        .accept(|map| preserves_boolean(a, b, map))
        .cap(cap)
        .run()
}

/// Homomorphisms in the plain or the Boolean category.
pub fn enumerate_homs_in(
    a: &SupportedAction<'_>,
    b: &SupportedAction<'_>,
    boolean: bool,
    cap: u64,
) -> Result<Vec<Vec<usize>>> {
    if boolean {
        enumerate_boolean_homs(a, b, cap)
    } else {
        enumerate_homs(a, b, cap)
    }
}

/// `B^A`: point `i` is a homomorphism `Se □ A → B` stored as a table over
/// the points of `Se □ A`, whose labels are `(t, x)` with `t ∈ Se`.
#[derive(Clone, Debug)]
pub struct Exponential<'s> {
    pub action: SupportedAction<'s>,
    /// `(e, table)`, ordered by `e` and then by table.
    pub points: Vec<(usize, Vec<usize>)>,
    domains: HashMap<usize, LabeledAction<'s, (usize, usize)>>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl<'s> Exponential<'s> {
    /// `Se □ A` with labels `(t, x)`.
    pub fn domain(&self, e: usize) -> &LabeledAction<'s, (usize, usize)> {
        &self.domains[&e]
    }

    pub fn point_of(&self, e: usize, table: &[usize]) -> Option<usize> {
        self.index.get(&(e, table.to_vec())).copied()
    }

    /// The point as a partial function `S □ A → B`.
    pub fn graph(&self, i: usize) -> Vec<((usize, usize), usize)> {
        let (e, table) = &self.points[i];
        let mut g: Vec<_> = self.domains[e].labels.iter().copied().zip(table.iter().copied()).collect();
        g.sort_unstable();
        g
    }
}

fn exp_domain<'s>(a: &SupportedAction<'s>, e: usize) -> LabeledAction<'s, (usize, usize)> {
    let se = principal_action(a.lrm(), e);
    let prod = box_product(&se.action, a);
    let labels = prod.labels.iter().map(|&(i, x)| (se.labels[i], x)).collect();
    LabeledAction::new(prod.action, labels)
}

/// `B^A = ⊔_e hom(Se □ A, B)` with `(s·θ)(t, x) = θ(ts, (ts)⁺·x)` and
/// `π(θ) = e`. With `boolean` set the fibers are Boolean homomorphisms.
pub fn exponential<'s>(
    a: &SupportedAction<'s>,
    b: &SupportedAction<'s>,
    boolean: bool,
    cap: u64,
) -> Result<Exponential<'s>> {
    let s = a.lrm();
    let mut domains = HashMap::new();
    let mut points = Vec::new();
    for &e in s.projections() {
        let dom = exp_domain(a, e);
        for table in enumerate_homs_in(&dom.action, b, boolean, cap)? {
            points.push((e, table));
        }
        domains.insert(e, dom);
    }
    let index: HashMap<(usize, Vec<usize>), usize> =
        points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let k = points.len();
    let mut act = Vec::with_capacity(s.size() * k);
    for g in 0..s.size() {
        for (i, (e, table)) in points.iter().enumerate() {
            let e2 = s.plus(s.mul(g, *e));
            let (dom, dom2) = (&domains[e], &domains[&e2]);
            let moved: Vec<usize> = dom2
                .labels
                .iter()
                .map(|&(t, x)| {
                    let tg = s.mul(t, g);
                    table[dom.index_of(&(tg, a.act(s.plus(tg), x))).expect("(ts, (ts)⁺·x) ∈ Se □ A")]
                })
                .collect();
            let j = index
                .get(&(e2, moved))
                .ok_or_else(|| Violation::new("s·θ is a homomorphism", vec![g, i]))?;
            act.push(*j);
        }
    }
    let support = points.iter().map(|(e, _)| *e).collect();
    let action = SupportedAction::new(s, k, act, support)?;
    Ok(Exponential { action, points, domains, index })
}

/// `eval: B^A □ A → B`, `(θ, x) ↦ θ(π(θ), x)`.
pub fn eval<'s>(exp: &Exponential<'s>, a: &SupportedAction<'s>) -> (LabeledAction<'s, (usize, usize)>, Vec<usize>) {
    let prod = box_product(&exp.action, a);
    let map = prod
        .labels
        .iter()
        .map(|&(i, x)| {
            let (e, table) = &exp.points[i];
            table[exp.domains[e].index_of(&(*e, x)).expect("(e, x) ∈ Se □ A")]
        })
        .collect();
    (prod, map)
}

/// `ĝ: Z → B^A` for `g: Z □ A → B`, `ĝ(z)(t, x) = g(t·z, x)`.
pub fn curry<'s>(
    z: &SupportedAction<'s>,
    za: &LabeledAction<'s, (usize, usize)>,
    exp: &Exponential<'s>,
    g: &[usize],
) -> Result<Vec<usize>> {
    let mut map = Vec::with_capacity(z.size());
    for zi in 0..z.size() {
        let r = z.support(zi);
        let table: Vec<usize> = exp.domains[&r]
            .labels
            .iter()
            .map(|&(t, x)| {
                za.index_of(&(z.act(t, zi), x))
                    .map(|i| g[i])
                    .ok_or_else(|| Violation::new("(t·z, x) ∈ Z □ A", vec![zi, t, x]))
            })
            .collect::<Result<_, _>>()?;
        let p = exp
            .point_of(r, &table)
            .ok_or_else(|| Violation::new("ĝ(z) is a homomorphism", vec![zi]))?;
        map.push(p);
    }
    check_action_hom(z, &exp.action, &map)?;
    Ok(map)
}

/// Inverse of [`curry`]: `h ↦ eval ∘ (h □ id)`.
pub fn uncurry(za: &LabeledAction<'_, (usize, usize)>, exp: &Exponential<'_>, h: &[usize]) -> Vec<usize> {
    za.labels
        .iter()
        .map(|&(zi, x)| {
            let (e, table) = &exp.points[h[zi]];
            table[exp.domains[e].index_of(&(*e, x)).expect("(e, x) ∈ Se □ A")]
        })
        .collect()
}

/// Small named actions of `s`: the terminal action, principal actions, box
/// products and disjoint unions, keeping those with at most `max_carrier` points.
pub fn small_actions(s: &LeftRestrictionMonoid, max_carrier: usize) -> Vec<(String, SupportedAction<'_>)> {
    let mut base: Vec<(String, SupportedAction<'_>)> = Vec::new();
    base.push(("terminal".into(), projection_action(s).action));
    for &e in s.projections() {
        base.push((format!("S{e}"), principal_action(s, e).action));
    }
    base.retain(|(_, a)| a.size() <= max_carrier && a.size() > 0);
    let mut out = base.clone();
    for (i, (na, a)) in base.iter().enumerate() {
        for (nb, b) in &base[i..] {
            let prod = box_product(a, b).action;
            if prod.size() <= max_carrier && !out.iter().any(|(_, c)| *c == prod) {
                out.push((format!("{na}□{nb}"), prod));
            }
            let sum = disjoint_union(a, b);
            if sum.size() <= max_carrier && !out.iter().any(|(_, c)| *c == sum) {
                out.push((format!("{na}⊔{nb}"), sum));
            }
        }
    }
    let mut seen: Vec<SupportedAction<'_>> = Vec::new();
    out.retain(|(_, a)| {
        if seen.contains(a) {
            false
        } else {
            seen.push(a.clone());
            true
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{pt, right_zeros, trivial_plus, PartialMap};
    use crate::search::DEFAULT_SEARCH_CAP;

    #[test]
    fn examples_are_supported() {
        let s = pt(2);
        assert!(projection_action(&s).action.is_valid());
        for &e in s.projections() {
            assert!(principal_action(&s, e).action.is_valid());
        }
        let full = principal_action(&s, s.identity());
        assert_eq!(full.size(), 9);
    }

    #[test]
    fn corrupt_support_fails() {
        let s = pt(2);
        let a = projection_action(&s).action;
        let mut support = a.support_table().to_vec();
        support[1] = support[2];
        let bad = SupportedAction::new(&s, a.size(), a.act_table().to_vec(), support).unwrap();
        let r = bad.check();
        assert!(!r.passed());
        assert!(bad.laws().reverify(&r).is_ok());
    }

    #[test]
    fn projection_order_is_boolean_order() {
        let s = pt(2);
        let t = projection_action(&s);
        for x in 0..t.size() {
            for y in 0..t.size() {
                assert_eq!(t.action.leq(x, y), s.natural_leq(t.labels[x], t.labels[y]));
            }
        }
        assert_eq!(t.action.fiber(s.identity()).len(), 1);
        assert!(t.action.is_factorizable().is_ok());
    }

    #[test]
    fn presheaf_laws() {
        let s = pt(2);
        let a = principal_action(&s, s.identity()).action;
        let proj = s.projections();
        for &e in proj {
            let fe = a.fiber(e);
            assert_eq!(a.restriction_map(e, e).unwrap(), fe);
            for &f in proj.iter().filter(|&&f| s.natural_leq(f, e)) {
                for &g in proj.iter().filter(|&&g| s.natural_leq(g, f)) {
                    let ef = a.restriction_map(e, f).unwrap();
                    let ff = a.fiber(f);
                    let fg = a.restriction_map(f, g).unwrap();
                    let eg = a.restriction_map(e, g).unwrap();
                    for (i, &x) in ef.iter().enumerate() {
                        let k = ff.iter().position(|&y| y == x).unwrap();
                        assert_eq!(fg[k], eg[i]);
                    }
                }
            }
        }
        let (e, f) = (proj[1], proj[2]);
        assert!(a.restriction_map(e, f).is_err());
    }

    #[test]
    fn boolean_axioms() {
        let s = pt(2);
        let b = BooleanLrm::new(s.clone()).unwrap();
        let sem = BooleanSemantics::of_lrm(&b);
        let t = projection_action(&s).action;
        assert!(t.check_boolean(&sem).unwrap().passed());
        let full = principal_action(&s, s.identity()).action;
        assert!(full.check_boolean(&sem).unwrap().passed());
        // two copies of the terminal action: a valid action with two minimal points
        let sub = disjoint_union(&t, &t);
        assert!(sub.is_valid());
        let r = sub.check_boolean(&sem).unwrap();
        assert_eq!(r.status("E3 minimum"), Some(crate::report::Status::Fail));
        let empty = SupportedAction::new(&s, 0, vec![], vec![]).unwrap();
        assert!(matches!(empty.check_boolean(&sem), Err(Error::EmptyCarrier)));
    }

    #[test]
    fn terminal_and_products() {
        let s = pt(2);
        let t = projection_action(&s).action;
        for (_, a) in small_actions(&s, 5) {
            let homs = enumerate_homs(&a, &t, DEFAULT_SEARCH_CAP).unwrap();
            assert_eq!(homs, vec![(0..a.size()).map(|x| s.proj_pos(a.support(x)).unwrap()).collect::<Vec<_>>()]);
        }
        let tt = box_product(&t, &t);
        assert_eq!(tt.size(), 4);
        let full = principal_action(&s, s.identity());
        let ft = box_product(&full.action, &t);
        assert_eq!(ft.size(), 9);
        let (p1, p2) = product_projections(&ft);
        assert!(check_action_hom(&ft.action, &full.action, &p1).is_ok());
        assert!(check_action_hom(&ft.action, &t, &p2).is_ok());
    }

    #[test]
    fn exponential_over_trivial_plus() {
        // supported actions are monoid actions and B^A = hom(M × A, B)
        let s = trivial_plus(right_zeros(1));
        let m = principal_action(&s, s.identity()).action;
        let exp = exponential(&m, &m, false, DEFAULT_SEARCH_CAP).unwrap();
        let mm = box_product(&m, &m).action;
        assert_eq!(exp.action.size(), enumerate_homs(&mm, &m, DEFAULT_SEARCH_CAP).unwrap().len());
        assert!(exp.action.is_valid());
    }

    #[test]
    fn curry_eval_round_trip() {
        let s = pt(2);
        let t = projection_action(&s).action;
        let a = principal_action(&s, PartialMap(vec![Some(0), None]).index()).action;
        let exp = exponential(&a, &t, false, DEFAULT_SEARCH_CAP).unwrap();
        assert!(exp.action.is_valid());
        assert!(exp.action.is_factorizable().is_ok());
        let (ea, ev) = eval(&exp, &a);
        assert!(check_action_hom(&ea.action, &t, &ev).is_ok());
        let id: Vec<usize> = (0..exp.action.size()).collect();
        assert_eq!(curry(&exp.action, &ea, &exp, &ev).unwrap(), id);
    }
}
