//! `[E|M]`-sets: an `M`-set `Y` with equivalences `≡_e` indexed by `E`, and
//! the two functors relating them to factorizable supported actions.
//!
//! `from_action` keeps the points of support 1 with `x ≡_e y` iff
//! `e·x = e·y`. `to_action` rebuilds the action on `⊔_e Y/≡_e` with
//! `s•[x]_e = [ŝ·x]_{(se)⁺}`, where `ŝ` is a total element above `s`.

use std::collections::HashMap;

use crate::actions::{
    check_action_hom, check_boolean_action_hom, Exponential, LabeledAction, SupportedAction,
};
use crate::algebra::Partition;
use crate::error::{Error, Result, StructureError, Violation};
use crate::matched_pair::{check_mp_hom, invert, ExtractedPair, MPHom, MatchedPair};
use crate::report::{AxiomReport, LawSet};
use crate::restriction::{BooleanLrm, LeftRestrictionMonoid};
use crate::search::EquivariantSearch;

#[derive(Clone, Debug, PartialEq)]
pub struct EmSet<'p> {
    pair: &'p MatchedPair,
    size: usize,
    /// `act[m * size + y] = m·y`.
    act: Vec<usize>,
    eq: Vec<Partition>,
    boolean: bool,
}

impl<'p> EmSet<'p> {
    /// Boolean exactly when the pair is.
    pub fn new(pair: &'p MatchedPair, size: usize, act: Vec<usize>, eq: Vec<Partition>) -> Result<Self, StructureError> {
        StructureError::check_len("act", act.len(), pair.m_size() * size)?;
        StructureError::check_range("act", &act, size)?;
        StructureError::check_len("eq", eq.len(), pair.e_size())?;
        for (e, p) in eq.iter().enumerate() {
            StructureError::check_len(&format!("eq[{e}]"), p.len(), size)?;
        }
        Ok(EmSet { pair, size, act, eq, boolean: pair.is_boolean() })
    }

    /// `rows[m][y] = m·y`; `labels[e][y]` is any block label.
    pub fn from_rows(pair: &'p MatchedPair, rows: &[Vec<usize>], labels: &[Vec<usize>]) -> Result<Self, StructureError> {
        let size = labels.first().map_or(0, Vec::len);
        let act = StructureError::flatten("act", rows, pair.m_size(), size, size)?;
        let eq = labels.iter().map(|l| Partition::from_labels(l)).collect();
        Self::new(pair, size, act, eq)
    }

    /// `M` acting on itself with the pair's own congruences.
    pub fn regular(pair: &'p MatchedPair) -> Self {
        let n = pair.m_size();
        let act = (0..n * n).map(|i| pair.monoid().mul(i / n, i % n)).collect();
        EmSet { pair, size: n, act, eq: pair.congruences().to_vec(), boolean: pair.is_boolean() }
    }

    /// Drops the Boolean axioms.
    pub fn plain(mut self) -> Self {
        self.boolean = false;
        self
    }

    pub fn pair(&self) -> &'p MatchedPair {
        self.pair
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_boolean(&self) -> bool {
        self.boolean
    }

    #[inline]
    pub fn act(&self, m: usize, y: usize) -> usize {
        self.act[m * self.size + y]
    }

    pub fn act_table(&self) -> &[usize] {
        &self.act
    }

    pub fn equivalences(&self) -> &[Partition] {
        &self.eq
    }

    #[inline]
    pub fn equiv(&self, e: usize, x: usize, y: usize) -> bool {
        self.eq[e].same(x, y)
    }

    #[inline]
    pub fn class_rep(&self, e: usize, x: usize) -> usize {
        self.eq[e].rep(x)
    }

    /// The same set over `target`, along an isomorphism `h: pair → target`.
    pub fn transport<'q>(&self, target: &'q MatchedPair, h: &MPHom) -> Result<EmSet<'q>> {
        check_mp_hom(self.pair, target, h)?;
        let inv = h
            .inverse()
            .ok_or_else(|| Violation::new("alpha and beta are bijections", vec![]))?;
        let k = self.size;
        let act = (0..target.m_size() * k)
            .map(|i| self.act(inv.alpha[i / k.max(1)], i % k.max(1)))
            .collect();
        let eq = (0..target.e_size()).map(|e| self.eq[inv.beta[e]].clone()).collect();
        let mut out = EmSet::new(target, k, act, eq)?;
        out.boolean = self.boolean && target.is_boolean();
        Ok(out)
    }

    /// (MPA1)–(MPA6).
    pub fn laws(&self) -> LawSet<'_> {
        let p = self.pair;
        let (ne, nm, k) = (p.e_size(), p.m_size(), self.size);
        let one = p.monoid().identity();
        let top = p.top();
        let mut laws = LawSet::new();
        laws.law("MPA1 unit", &["y"], &[k], move |t| self.act(one, t[0]) == t[0]);
        laws.law("MPA1 action", &["m", "n", "y"], &[nm, nm, k], move |t| {
            self.act(p.monoid().mul(t[0], t[1]), t[2]) == self.act(t[0], self.act(t[1], t[2]))
        });
        // partitions are equivalences by construction; only coverage can fail
        laws.law("MPA2", &["e"], &[ne], move |t| self.eq[t[0]].len() == k);
        laws.law("MPA3", &["x", "y"], &[k, k], move |t| !self.equiv(top, t[0], t[1]) || t[0] == t[1]);
        laws.law("MPA4", &["e", "f", "x", "y"], &[ne, ne, k, k], move |t| {
            let (e, f, x, y) = (t[0], t[1], t[2], t[3]);
            !(p.leq(f, e) && self.equiv(e, x, y)) || self.equiv(f, x, y)
        });
        laws.law("MPA5", &["e", "m", "n", "y"], &[ne, nm, nm, k], move |t| {
            let (e, m, n, y) = (t[0], t[1], t[2], t[3]);
            !p.congruent(e, m, n) || self.equiv(e, self.act(m, y), self.act(n, y))
        });
        laws.law("MPA6", &["e", "x", "y", "m"], &[ne, k, k, nm], move |t| {
            let (e, x, y, m) = (t[0], t[1], t[2], t[3]);
            !self.equiv(e, x, y) || self.equiv(p.star(m, e), self.act(m, x), self.act(m, y))
        });
        laws
    }

    /// (MPA7)–(MPA9); skipped when the set is not Boolean.
    pub fn boolean_laws(&self) -> LawSet<'_> {
        let mut laws = LawSet::new();
        let b = match (self.boolean, self.pair.boolean()) {
            (true, Some(b)) => b,
            _ => {
                for name in ["MPA7", "MPA8", "MPA9"] {
                    laws.skip(name, "not a Boolean [E|M]-set");
                }
                return laws;
            }
        };
        let (ne, k) = (self.pair.e_size(), self.size);
        let bottom = b.bottom();
        laws.law("MPA7", &["x", "y"], &[k, k], move |t| self.equiv(bottom, t[0], t[1]));
        laws.law("MPA8", &["e", "f", "x", "y"], &[ne, ne, k, k], move |t| {
            let (e, f, x, y) = (t[0], t[1], t[2], t[3]);
            !(self.equiv(e, x, y) && self.equiv(f, x, y)) || self.equiv(b.join(e, f), x, y)
        });
        laws.law("MPA9", &["x", "y", "e"], &[k, k, ne], move |t| {
            let (x, y, e) = (t[0], t[1], t[2]);
            let c = b.complement(e);
            (0..k).any(|z| self.equiv(e, z, x) && self.equiv(c, z, y))
        });
        laws
    }

    pub fn check(&self) -> AxiomReport {
        let mut laws = self.laws();
        laws.append(self.boolean_laws());
        laws.run("[E|M]-set")
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }
}

pub fn check_em_set(y: &EmSet<'_>) -> AxiomReport {
    y.check()
}

/// `M`-equivariant and `x ≡_e y ⇒ α(x) ≡_e α(y)`.
pub fn check_em_hom(y1: &EmSet<'_>, y2: &EmSet<'_>, alpha: &[usize]) -> Result<(), Violation> {
    if alpha.len() != y1.size() || alpha.iter().any(|&v| v >= y2.size()) {
        return Err(Violation::new("map Y → Y'", vec![]));
    }
    for m in 0..y1.pair().m_size() {
        for x in 0..y1.size() {
            if alpha[y1.act(m, x)] != y2.act(m, alpha[x]) {
                return Err(Violation::new("equivariance", vec![m, x]));
            }
        }
    }
    for e in 0..y1.pair().e_size() {
        for x in 0..y1.size() {
            let r = y1.class_rep(e, x);
            if !y2.equiv(e, alpha[r], alpha[x]) {
                return Err(Violation::new("preserves equivalences", vec![e, r, x]));
            }
        }
    }
    Ok(())
}

pub fn enumerate_em_homs(y1: &EmSet<'_>, y2: &EmSet<'_>, cap: u64) -> Result<Vec<Vec<usize>>> {
    let ne = y1.pair().e_size();
    EquivariantSearch::new(y1.size(), y2.size(), y1.pair().m_size(), |m, x| y1.act(m, x), |m, y| y2.act(m, y))
        .pairwise(move |x, tx, w, tw| (0..ne).all(|e| !y1.equiv(e, x, w) || y2.equiv(e, tx, tw)))
        .cap(cap)
        .run()
}

fn require_boolean<'a>(y: &'a EmSet<'_>) -> Result<&'a crate::algebra::BooleanAlgebra> {
    match (y.is_boolean(), y.pair().boolean()) {
        (true, Some(b)) => Ok(b),
        _ => Err(Error::Precondition("not a Boolean [E|M]-set".into())),
    }
}

/// Least `z` with `z ≡_e x` and `z ≡_ē y`.
pub fn mpa9_witness(set: &EmSet<'_>, x: usize, y: usize, e: usize) -> Result<usize> {
    let b = require_boolean(set)?;
    let c = b.complement(e);
    (0..set.size())
        .find(|&z| set.equiv(e, z, x) && set.equiv(c, z, y))
        .ok_or_else(|| Error::NoWitness { law: "MPA9".into(), args: vec![x, y, e] })
}

/// Least `w` with `w ≡_e x` and `w ≡_f y`, given `x ≡_{ef} y`. The witness
/// obtained from [`mpa9_witness`] is checked too, and all valid `w` must lie
/// in one `≡_{e+f}` class.
pub fn w_interpolate(set: &EmSet<'_>, x: usize, y: usize, e: usize, f: usize) -> Result<usize> {
    let b = require_boolean(set)?;
    let p = set.pair();
    if !set.equiv(p.meet(e, f), x, y) {
        return Err(Error::Precondition(format!("{x} ≢ {y} modulo e·f")));
    }
    let valid = |w: usize| set.equiv(e, w, x) && set.equiv(f, w, y);
    let routed = mpa9_witness(set, x, y, e)?;
    if !valid(routed) {
        return Err(Error::NoWitness { law: "w-interpolant".into(), args: vec![x, y, e, f] });
    }
    let least = (0..set.size()).find(|&w| valid(w)).expect("routed is valid");
    let ef = b.join(e, f);
    if let Some(other) = (0..set.size()).find(|&w| valid(w) && !set.equiv(ef, w, least)) {
        return Err(Error::ChoiceDependence(format!(
            "interpolants {least} and {other} differ modulo e+f"
        )));
    }
    Ok(least)
}

fn same_source(s: &LeftRestrictionMonoid, ext: &ExtractedPair) -> Result<()> {
    if s.projections() != ext.proj.as_slice() || s.totals() != ext.tot.as_slice() {
        return Err(Error::Precondition("the pair was not extracted from this monoid".into()));
    }
    Ok(())
}

/// `X₁` as an `[E|M]`-set, with `points[i]` the action point behind `i`.
#[derive(Clone, Debug)]
pub struct FromAction<'p> {
    pub set: EmSet<'p>,
    pub points: Vec<usize>,
}

impl FromAction<'_> {
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.points.binary_search(&x).ok()
    }
}

pub fn from_action<'p>(a: &SupportedAction<'_>, ext: &'p ExtractedPair) -> Result<FromAction<'p>> {
    let s = a.lrm();
    same_source(s, ext)?;
    if let Err(element) = a.is_factorizable() {
        return Err(Error::NotFactorizable { element });
    }
    let points = a.fiber(s.identity());
    let pos: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let k = points.len();
    let act = (0..ext.tot.len() * k)
        .map(|i| pos[&a.act(ext.tot[i / k.max(1)], points[i % k.max(1)])])
        .collect();
    let eq = ext
        .proj
        .iter()
        .map(|&e| Partition::by_key(k, |i| a.act(e, points[i])))
        .collect();
    let set = EmSet::new(&ext.pair, k, act, eq)?;
    Ok(FromAction { set, points })
}

/// The action on `⊔_e Y/≡_e`; point labels are `(e, least member)`.
#[derive(Clone, Debug)]
pub struct ToAction<'s> {
    pub action: LabeledAction<'s, (usize, usize)>,
}

impl ToAction<'_> {
    pub fn point(&self, e: usize, rep: usize) -> Option<usize> {
        self.action.index_of(&(e, rep))
    }

    /// `[x′]_f ≤ [x]_e` iff `f ≤ e` and `x′ ≡_f x`.
    pub fn formula_leq(&self, set: &EmSet<'_>, i: usize, j: usize) -> bool {
        let ((f, x2), (e, x)) = (self.action.labels[i], self.action.labels[j]);
        set.pair().leq(f, e) && set.equiv(f, x2, x)
    }
}

/// Checks `Y`, then builds its action over `s`. The class representative and
/// the total element above `s` are both checked not to matter.
pub fn to_action<'s>(set: &EmSet<'_>, s: &'s LeftRestrictionMonoid, ext: &ExtractedPair) -> Result<ToAction<'s>> {
    same_source(s, ext)?;
    if ext.pair != *set.pair() {
        return Err(Error::Precondition("the set is over a different matched pair".into()));
    }
    if let Err(element) = s.is_factorizable() {
        return Err(Error::NotFactorizable { element });
    }
    if set.is_boolean() && set.size() == 0 {
        return Err(Error::EmptyCarrier);
    }
    set.check().ensure_passed()?;
    let p = set.pair();
    let labels: Vec<(usize, usize)> = (0..p.e_size())
        .flat_map(|e| set.equivalences()[e].reps().into_iter().map(move |r| (e, r)))
        .collect();
    let pos: HashMap<(usize, usize), usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let k = labels.len();
    let mut act = Vec::with_capacity(s.size() * k);
    for a in 0..s.size() {
        let covers: Vec<usize> = s.totals_above(a).map(|m| ext.m_of(m).unwrap()).collect();
        for &(e, x) in &labels {
            let e2 = ext.e_of(s.plus(s.mul(a, ext.proj[e]))).unwrap();
            let value = set.class_rep(e2, set.act(covers[0], x));
            for &m in &covers {
                for x2 in (0..set.size()).filter(|&x2| set.equiv(e, x2, x)) {
                    if set.class_rep(e2, set.act(m, x2)) != value {
                        return Err(Error::ChoiceDependence(format!(
                            "s = {a} on [{x}]_{e}: total {m} and member {x2} disagree"
                        )));
                    }
                }
            }
            act.push(pos[&(e2, value)]);
        }
    }
    let support = labels.iter().map(|&(e, _)| ext.proj[e]).collect();
    let action = SupportedAction::new(s, k, act, support)?;
    Ok(ToAction { action: LabeledAction::new(action, labels) })
}

/// `θ: A → to_action(from_action(A))`, `x ↦ [y]_{p(x)}` for `y ∈ X₁` above `x`.
#[derive(Clone, Debug)]
pub struct ActionRoundTrip<'s, 'p> {
    pub from: FromAction<'p>,
    pub to: ToAction<'s>,
    pub theta: Vec<usize>,
}

pub fn roundtrip_action_iso<'s, 'p>(a: &SupportedAction<'s>, ext: &'p ExtractedPair) -> Result<ActionRoundTrip<'s, 'p>> {
    let s = a.lrm();
    let from = from_action(a, ext)?;
    let to = to_action(&from.set, s, ext)?;
    let mut theta = Vec::with_capacity(a.size());
    for x in 0..a.size() {
        let e = ext.e_of(a.support(x)).unwrap();
        let above: Vec<usize> = (0..from.points.len()).filter(|&i| a.leq(x, from.points[i])).collect();
        let rep = from.set.class_rep(e, above[0]);
        if above.iter().any(|&i| from.set.class_rep(e, i) != rep) {
            return Err(Error::ChoiceDependence(format!("points of X₁ above {x} differ at its support")));
        }
        theta.push(to.point(e, rep).unwrap());
    }
    let inv = invert(&theta).ok_or_else(|| Violation::new("θ is a bijection", vec![]))?;
    if from.set.is_boolean() {
        check_boolean_action_hom(a, &to.action.action, &theta)?;
        check_boolean_action_hom(&to.action.action, a, &inv)?;
    } else {
        check_action_hom(a, &to.action.action, &theta)?;
        check_action_hom(&to.action.action, a, &inv)?;
    }
    Ok(ActionRoundTrip { from, to, theta })
}

/// `Y → from_action(to_action(Y))`, `y ↦ [y]₁`; checked in both directions.
pub fn roundtrip_em_iso<'p>(set: &EmSet<'p>, s: &LeftRestrictionMonoid, ext: &'p ExtractedPair) -> Result<Vec<usize>> {
    let to = to_action(set, s, ext)?;
    let back = from_action(&to.action.action, ext)?;
    let top = set.pair().top();
    let map: Vec<usize> = (0..set.size())
        .map(|y| back.index_of(to.point(top, y).unwrap()).unwrap())
        .collect();
    let inv = invert(&map).ok_or_else(|| Violation::new("y ↦ [y]₁ is a bijection", vec![]))?;
    check_em_hom(set, &back.set, &map)?;
    check_em_hom(&back.set, set, &inv)?;
    Ok(map)
}

/// `θ ↦ θ|X₁` as a map between the index sets of `from_action`.
pub fn action_hom_to_em(
    fa: &FromAction<'_>,
    fb: &FromAction<'_>,
    a: &SupportedAction<'_>,
    b: &SupportedAction<'_>,
    theta: &[usize],
) -> Result<Vec<usize>, Violation> {
    check_action_hom(a, b, theta)?;
    let alpha: Vec<usize> = fa
        .points
        .iter()
        .map(|&x| fb.index_of(theta[x]).ok_or_else(|| Violation::new("X₁ → X′₁", vec![x])))
        .collect::<Result<_, _>>()?;
    check_em_hom(&fa.set, &fb.set, &alpha)?;
    Ok(alpha)
}

/// `α ↦ ([y]_e ↦ [α(y)]_e)`.
pub fn em_hom_to_action(
    y1: &EmSet<'_>,
    y2: &EmSet<'_>,
    t1: &ToAction<'_>,
    t2: &ToAction<'_>,
    alpha: &[usize],
) -> Result<Vec<usize>, Violation> {
    check_em_hom(y1, y2, alpha)?;
    let map: Vec<usize> = t1
        .action
        .labels
        .iter()
        .map(|&(e, y)| t2.point(e, y2.class_rep(e, alpha[y])).unwrap())
        .collect();
    if y1.is_boolean() && y2.is_boolean() {
        check_boolean_action_hom(&t1.action.action, &t2.action.action, &map)?;
    } else {
        check_action_hom(&t1.action.action, &t2.action.action, &map)?;
    }
    Ok(map)
}

/// The bijection between `(B^A)₁ = hom(S □ A, B)` and admissible maps
/// `φ′: M × A₁ → B₁`, both sides listed in matching order.
#[derive(Clone, Debug)]
pub struct PointTransport {
    /// Domain of `φ′`: pairs `(m, x′)` with `m` a total element and `x′ ∈ A₁`.
    pub domain: Vec<(usize, usize)>,
    /// Exponential points of support 1.
    pub points: Vec<usize>,
    /// `restricted[i]` is the restriction of `points[i]`, as indices into `B₁`.
    pub restricted: Vec<Vec<usize>>,
    /// All admissible maps, sorted.
    pub admissible: Vec<Vec<usize>>,
}

/// Restricts each point of `(B^A)₁` to `M × A₁`, extends back with
/// `θ(s, x) = s⁺·φ′(ŝ, x′)`, and checks that both composites are identities and
/// that the restrictions are exactly the admissible maps. `ŝ` is the total
/// cover when `boolean` is given and the least total above `s` otherwise.
pub fn exponential_point_transport(
    a: &SupportedAction<'_>,
    b: &SupportedAction<'_>,
    exp: &Exponential<'_>,
    boolean: Option<&BooleanLrm>,
    cap: u64,
) -> Result<PointTransport> {
    let s = a.lrm();
    let one = s.identity();
    for (act, name) in [(a, "A"), (b, "B")] {
        if let Err(element) = act.is_factorizable() {
            return Err(Error::Precondition(format!("{name} is not factorizable at {element}")));
        }
    }
    let a1 = a.fiber(one);
    let b1 = b.fiber(one);
    let b1_pos: HashMap<usize, usize> = b1.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    let domain: Vec<(usize, usize)> = s
        .totals()
        .iter()
        .flat_map(|&m| a1.iter().map(move |&x| (m, x)))
        .collect();
    let dpos: HashMap<(usize, usize), usize> = domain.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let cover = |t: usize| match boolean {
        Some(bl) => bl.total_cover(t),
        None => s.least_total_above(t).expect("S is factorizable"),
    };
    let full = exp.domain(one);

    let points: Vec<usize> = exp.action.fiber(one);
    let restricted: Vec<Vec<usize>> = points
        .iter()
        .map(|&i| {
            let table = &exp.points[i].1;
            domain
                .iter()
                .map(|&(m, x)| b1_pos[&table[full.index_of(&(m, x)).unwrap()]])
                .collect()
        })
        .collect();

    let extend = |phi: &[usize]| -> Result<Vec<usize>> {
        let mut table = Vec::with_capacity(full.size());
        for &(t, x) in &full.labels {
            let hat = cover(t);
            let above: Vec<usize> = a1.iter().copied().filter(|&x1| a.leq(x, x1)).collect();
            let value = b.act(s.plus(t), b1[phi[dpos[&(hat, above[0])]]]);
            for &x1 in &above {
                if b.act(s.plus(t), b1[phi[dpos[&(hat, x1)]]]) != value {
                    return Err(Error::ChoiceDependence(format!("φ′ at ({t}, {x}) depends on x′")));
                }
            }
            table.push(value);
        }
        Ok(table)
    };

    let tots: Vec<usize> = s.totals().to_vec();
    let proj: Vec<usize> = s.projections().to_vec();
    let admissible = EquivariantSearch::new(
        domain.len(),
        b1.len(),
        tots.len(),
        |m, i| {
            let (n, x) = domain[i];
            dpos[&(s.mul(tots[m], n), a.act(tots[m], x))]
        },
        |m, j| b1_pos[&b.act(tots[m], b1[j])],
    )
    .pairwise(|i, ti, j, tj| {
        let ((n1, x1), (n2, x2)) = (domain[i], domain[j]);
        proj.iter().all(|&e| {
            !(s.mul(e, n1) == s.mul(e, n2) && a.act(e, x1) == a.act(e, x2))
                || b.act(e, b1[ti]) == b.act(e, b1[tj])
        })
    })
    .cap(cap)
    .run()?;

    for (k, &i) in points.iter().enumerate() {
        if extend(&restricted[k])? != exp.points[i].1 {
            return Err(Violation::new("extend ∘ restrict = id", vec![i]).into());
        }
    }
    let mut sorted = restricted.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != restricted.len() || sorted != admissible {
        return Err(Violation::new("restrictions are exactly the admissible maps", vec![]).into());
    }
    for phi in &admissible {
        let table = extend(phi)?;
        let back = exp
            .point_of(one, &table)
            .ok_or_else(|| Violation::new("extension is a point of (B^A)₁", vec![]))?;
        let k = points.iter().position(|&p| p == back).unwrap();
        if restricted[k] != *phi {
            return Err(Violation::new("restrict ∘ extend = id", vec![]).into());
        }
    }
    Ok(PointTransport { domain, points, restricted, admissible })
}
