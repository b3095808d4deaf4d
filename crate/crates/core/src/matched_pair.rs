//! Matched pairs `[E|M]`: a semilattice (or Boolean algebra) `E`, a monoid `M`
//! acting on it by `m ∗ e`, and right congruences `≡_e` on `M` indexed by `E`.
//!
//! Pairs are extracted from left restriction monoids as `[Proj(S)|Tot(S)]`
//! and turned back into monoids `S[E|M]` whose elements are `(e, [a]_e)`,
//! each class named by its least member.

use std::collections::HashMap;

use crate::algebra::{BooleanAlgebra, FiniteMonoid, Partition, Semilattice};
use crate::error::{Error, Result, StructureError, Violation};
use crate::report::{AxiomReport, LawSet};
use crate::restriction::{
    check_boolean_lrm, check_boolean_lrm_hom, check_lrm_hom, BooleanLrm, LeftRestrictionMonoid,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairBase {
    Semilattice(Semilattice),
    Boolean(BooleanAlgebra),
}

impl PairBase {
    pub fn lattice(&self) -> &Semilattice {
        match self {
            PairBase::Semilattice(l) => l,
            PairBase::Boolean(b) => b.lattice(),
        }
    }

    pub fn boolean(&self) -> Option<&BooleanAlgebra> {
        match self {
            PairBase::Semilattice(_) => None,
            PairBase::Boolean(b) => Some(b),
        }
    }

    pub fn size(&self) -> usize {
        self.lattice().size()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    base: PairBase,
    monoid: FiniteMonoid,
    /// `act[m * |E| + e] = m ∗ e`.
    act: Vec<usize>,
    cong: Vec<Partition>,
}

impl MatchedPair {
    pub fn new(
        base: PairBase,
        monoid: FiniteMonoid,
        act: Vec<usize>,
        cong: Vec<Partition>,
    ) -> Result<Self, StructureError> {
        let (ne, nm) = (base.size(), monoid.size());
        StructureError::check_len("act", act.len(), nm * ne)?;
        StructureError::check_range("act", &act, ne)?;
        StructureError::check_len("cong", cong.len(), ne)?;
        for (e, p) in cong.iter().enumerate() {
            StructureError::check_len(&format!("cong[{e}]"), p.len(), nm)?;
        }
        Ok(MatchedPair { base, monoid, act, cong })
    }

    /// `act_rows[m][e] = m ∗ e`; `cong_labels[e][m]` is any block label.
    pub fn from_rows(
        base: PairBase,
        monoid: FiniteMonoid,
        act_rows: &[Vec<usize>],
        cong_labels: &[Vec<usize>],
    ) -> Result<Self, StructureError> {
        let (ne, nm) = (base.size(), monoid.size());
        let act = StructureError::flatten("act", act_rows, nm, ne, ne)?;
        let cong = cong_labels.iter().map(|l| Partition::from_labels(l)).collect();
        Self::new(base, monoid, act, cong)
    }

    /// `[{1}|M]` with `≡₁` the identity.
    pub fn point(monoid: FiniteMonoid) -> Self {
        let base = PairBase::Semilattice(Semilattice::new(FiniteMonoid::trivial()));
        let n = monoid.size();
        MatchedPair { base, monoid, act: vec![0; n], cong: vec![Partition::identity(n)] }
    }

    /// `[B|1]`: the trivial monoid acting trivially on a Boolean algebra.
    pub fn over_trivial_monoid(b: BooleanAlgebra) -> Self {
        let n = b.size();
        MatchedPair {
            base: PairBase::Boolean(b),
            monoid: FiniteMonoid::trivial(),
            act: (0..n).collect(),
            cong: vec![Partition::identity(1); n],
        }
    }

    pub fn base(&self) -> &PairBase {
        &self.base
    }

    pub fn lattice(&self) -> &Semilattice {
        self.base.lattice()
    }

    pub fn boolean(&self) -> Option<&BooleanAlgebra> {
        self.base.boolean()
    }

    pub fn is_boolean(&self) -> bool {
        self.boolean().is_some()
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn e_size(&self) -> usize {
        self.base.size()
    }

    pub fn m_size(&self) -> usize {
        self.monoid.size()
    }

    pub fn act_table(&self) -> &[usize] {
        &self.act
    }

    pub fn congruences(&self) -> &[Partition] {
        &self.cong
    }

    pub fn congruence(&self, e: usize) -> &Partition {
        &self.cong[e]
    }

    #[inline]
    pub fn star(&self, m: usize, e: usize) -> usize {
        self.act[m * self.e_size() + e]
    }

    #[inline]
    pub fn congruent(&self, e: usize, m: usize, n: usize) -> bool {
        self.cong[e].same(m, n)
    }

    /// Least member of `[m]_e`.
    #[inline]
    pub fn class_rep(&self, e: usize, m: usize) -> usize {
        self.cong[e].rep(m)
    }

    #[inline]
    pub fn meet(&self, e: usize, f: usize) -> usize {
        self.lattice().meet(e, f)
    }

    #[inline]
    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.lattice().leq(e, f)
    }

    pub fn top(&self) -> usize {
        self.lattice().top()
    }

    /// Laws of `E` and `M` on their own, prefixed `E:` and `M:`.
    pub fn component_laws(&self) -> LawSet<'_> {
        let mut laws = match &self.base {
            PairBase::Semilattice(l) => l.laws(),
            PairBase::Boolean(b) => b.laws(),
        }
        .prefixed("E");
        laws.append(self.monoid.laws().prefixed("M"));
        laws
    }

    /// (MP1)–(MP8).
    pub fn laws(&self) -> LawSet<'_> {
        let (ne, nm) = (self.e_size(), self.m_size());
        let one = self.monoid.identity();
        let top = self.top();
        let mul = move |a: usize, b: usize| self.monoid.mul(a, b);
        let mut laws = LawSet::new();
        laws.law("MP1 unit", &["e"], &[ne], move |t| self.star(one, t[0]) == t[0]);
        laws.law("MP1 action", &["m", "n", "e"], &[nm, nm, ne], move |t| {
            self.star(mul(t[0], t[1]), t[2]) == self.star(t[0], self.star(t[1], t[2]))
        });
        laws.law("MP2", &["m"], &[nm], move |t| self.star(t[0], top) == top);
        laws.law("MP3", &["m", "e", "f"], &[nm, ne, ne], move |t| {
            let (m, e, f) = (t[0], t[1], t[2]);
            self.star(m, self.meet(e, f)) == self.meet(self.star(m, e), self.star(m, f))
        });
        laws.law("MP4", &["e", "a", "b", "k"], &[ne, nm, nm, nm], move |t| {
            let (e, a, b, k) = (t[0], t[1], t[2], t[3]);
            !self.congruent(e, a, b) || self.congruent(e, mul(a, k), mul(b, k))
        });
        laws.law("MP5", &["m", "n"], &[nm, nm], move |t| {
            !self.congruent(top, t[0], t[1]) || t[0] == t[1]
        });
        laws.law("MP6", &["e", "f", "m", "n"], &[ne, ne, nm, nm], move |t| {
            let (e, f, m, n) = (t[0], t[1], t[2], t[3]);
            !(self.leq(f, e) && self.congruent(e, m, n)) || self.congruent(f, m, n)
        });
        laws.law("MP7", &["e", "a", "a'", "m"], &[ne, nm, nm, nm], move |t| {
            let (e, a, a2, m) = (t[0], t[1], t[2], t[3]);
            !self.congruent(e, a, a2) || self.congruent(self.star(m, e), mul(m, a), mul(m, a2))
        });
        laws.law("MP8", &["e", "a", "a'", "f"], &[ne, nm, nm, ne], move |t| {
            let (e, a, a2, f) = (t[0], t[1], t[2], t[3]);
            !self.congruent(e, a, a2) || self.meet(e, self.star(a, f)) == self.meet(e, self.star(a2, f))
        });
        laws
    }

    /// (MP9)–(MP12); every law is skipped when `E` is only a semilattice.
    pub fn boolean_laws(&self) -> LawSet<'_> {
        let mut laws = LawSet::new();
        let Some(b) = self.boolean() else {
            for name in ["MP9", "MP10", "MP11", "MP12"] {
                laws.skip(name, "E is not a Boolean algebra");
            }
            return laws;
        };
        let (ne, nm) = (self.e_size(), self.m_size());
        let bottom = b.bottom();
        laws.law("MP9", &["m", "n"], &[nm, nm], move |t| self.congruent(bottom, t[0], t[1]));
        laws.law("MP10", &["m", "e", "f"], &[nm, ne, ne], move |t| {
            let (m, e, f) = (t[0], t[1], t[2]);
            self.star(m, b.join(e, f)) == b.join(self.star(m, e), self.star(m, f))
        });
        laws.law("MP11", &["e", "f", "m", "n"], &[ne, ne, nm, nm], move |t| {
            let (e, f, m, n) = (t[0], t[1], t[2], t[3]);
            !(self.congruent(e, m, n) && self.congruent(f, m, n)) || self.congruent(b.join(e, f), m, n)
        });
        laws.law("MP12", &["m", "n", "e"], &[nm, nm, ne], move |t| {
            let (m, n, e) = (t[0], t[1], t[2]);
            let c = b.complement(e);
            (0..nm).any(|p| self.congruent(e, p, m) && self.congruent(c, p, n))
        });
        laws
    }

    pub fn check_components(&self) -> AxiomReport {
        self.component_laws().run("matched pair components")
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("matched pair")
    }

    pub fn check_boolean(&self) -> AxiomReport {
        self.boolean_laws().run("Boolean matched pair")
    }

    /// Components, (MP1)–(MP8) and, for Boolean `E`, (MP9)–(MP12).
    pub fn validate(&self) -> Result<()> {
        self.check_components().ensure_passed()?;
        self.check().ensure_passed()?;
        if self.is_boolean() {
            self.check_boolean().ensure_passed()?;
        }
        Ok(())
    }
}

pub fn check_matched_pair(p: &MatchedPair) -> AxiomReport {
    p.check()
}

pub fn check_boolean_matched_pair(p: &MatchedPair) -> AxiomReport {
    p.check_boolean()
}

/// `[Proj(S)|Tot(S)]` together with the positions it was read from.
#[derive(Clone, Debug)]
pub struct ExtractedPair {
    pub pair: MatchedPair,
    /// `E` index → S element.
    pub proj: Vec<usize>,
    /// `M` index → S element.
    pub tot: Vec<usize>,
    /// The Boolean structure of S when it has one.
    pub boolean: Option<BooleanLrm>,
}

impl ExtractedPair {
    pub fn e_of(&self, s_elem: usize) -> Option<usize> {
        self.proj.binary_search(&s_elem).ok()
    }

    pub fn m_of(&self, s_elem: usize) -> Option<usize> {
        self.tot.binary_search(&s_elem).ok()
    }
}

fn extract(s: &LeftRestrictionMonoid, boolean: Option<BooleanLrm>) -> ExtractedPair {
    let proj = s.projections().to_vec();
    let tot = s.totals().to_vec();
    let ppos = |a: usize| s.proj_pos(a).expect("(me)⁺ is a projection");
    let tpos = |a: usize| s.tot_pos(a).expect("totals form a submonoid");
    let one = tpos(s.identity());
    let monoid = FiniteMonoid::from_fn(tot.len(), one, |i, j| tpos(s.mul(tot[i], tot[j])))
        .expect("totals form a submonoid");
    let act = (0..tot.len() * proj.len())
        .map(|i| ppos(s.plus(s.mul(tot[i / proj.len()], proj[i % proj.len()]))))
        .collect();
    let cong = proj
        .iter()
        .map(|&e| Partition::by_key(tot.len(), |m| s.mul(e, tot[m])))
        .collect();
    let base = match &boolean {
        Some(b) => PairBase::Boolean(b.proj_algebra().clone()),
        None => PairBase::Semilattice(s.projection_semilattice()),
    };
    let pair = MatchedPair::new(base, monoid, act, cong).expect("tables sized from S");
    ExtractedPair { pair, proj, tot, boolean }
}

/// `[Proj(S)|Tot(S)]` with `m ∗ e = (me)⁺` and `m ≡_e n` iff `em = en`.
/// `E` is a Boolean algebra exactly when S passes the Boolean checks.
pub fn from_lrm(s: &LeftRestrictionMonoid) -> Result<ExtractedPair> {
    s.check().ensure_passed()?;
    let boolean = if s.zero().is_some() && check_boolean_lrm(s).passed() {
        Some(BooleanLrm::new(s.clone())?)
    } else {
        None
    };
    Ok(extract(s, boolean))
}

/// Like [`from_lrm`] but never marks `E` as Boolean.
pub fn from_lrm_plain(s: &LeftRestrictionMonoid) -> Result<ExtractedPair> {
    s.check().ensure_passed()?;
    Ok(extract(s, None))
}

pub fn from_boolean_lrm(s: &BooleanLrm) -> ExtractedPair {
    extract(s.lrm(), Some(s.clone()))
}

/// `S[E|M]` with its elements `(e, rep)` in increasing order.
#[derive(Clone, Debug)]
pub struct BuiltLrm {
    pub pair: MatchedPair,
    pub lrm: LeftRestrictionMonoid,
    pub elems: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    pub boolean: Option<BooleanLrm>,
}

impl BuiltLrm {
    /// Index of `(e, [a]_e)`.
    pub fn element(&self, e: usize, a: usize) -> usize {
        self.index[&(e, self.pair.class_rep(e, a))]
    }

    pub fn parts(&self, i: usize) -> (usize, usize) {
        self.elems[i]
    }

    /// `(e,[a]) ≤ (f,[b])` iff `e ≤ f` and `a ≡_e b`.
    pub fn formula_leq(&self, i: usize, j: usize) -> bool {
        let ((e, a), (f, b)) = (self.elems[i], self.elems[j]);
        self.pair.leq(e, f) && self.pair.congruent(e, a, b)
    }

    /// `(e,[a]) ∨ (f,[b]) = (e+f, [p]_{e+f})` with `p` the interpolant of `a`, `b`.
    pub fn formula_join(&self, i: usize, j: usize) -> Result<usize> {
        let b = self
            .pair
            .boolean()
            .ok_or_else(|| Error::Precondition("E is not a Boolean algebra".into()))?;
        if !self.lrm.right_compatible(i, j) {
            return Err(Error::NotCompatible { a: i, b: j });
        }
        let ((e, m), (f, n)) = (self.elems[i], self.elems[j]);
        let p = amelia_interpolate(&self.pair, m, n, e, f)?;
        Ok(self.element(b.join(e, f), p))
    }
}

/// The monoid `S[E|M]`; for Boolean `E` also its Boolean structure.
pub fn build_lrm(p: &MatchedPair) -> Result<BuiltLrm> {
    p.validate()?;
    let mut elems = Vec::new();
    for e in 0..p.e_size() {
        for rep in p.congruence(e).reps() {
            elems.push((e, rep));
        }
    }
    let index: HashMap<(usize, usize), usize> =
        elems.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let one = p.monoid().identity();
    let at = |e: usize, a: usize| index[&(e, p.class_rep(e, a))];
    let identity = at(p.top(), one);
    let monoid = FiniteMonoid::from_fn(elems.len(), identity, |i, j| {
        let ((e, a), (f, b)) = (elems[i], elems[j]);
        let g = p.meet(e, p.star(a, f));
        at(g, p.monoid().mul(a, b))
    })?;
    let plus = elems.iter().map(|&(e, _)| at(e, one)).collect();
    let zero = p.boolean().map(|b| at(b.bottom(), one));
    let lrm = LeftRestrictionMonoid::new(monoid, plus, zero)?;
    let boolean = match p.boolean() {
        Some(_) => Some(BooleanLrm::new(lrm.clone())?),
        None => None,
    };
    Ok(BuiltLrm { pair: p.clone(), lrm, elems, index, boolean })
}

/// Alias of [`build_lrm`] that insists on a Boolean pair.
pub fn build_boolean_lrm(p: &MatchedPair) -> Result<BuiltLrm> {
    if !p.is_boolean() {
        return Err(Error::Precondition("E is not a Boolean algebra".into()));
    }
    build_lrm(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPHom {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl MPHom {
    pub fn identity(p: &MatchedPair) -> Self {
        MPHom { alpha: (0..p.m_size()).collect(), beta: (0..p.e_size()).collect() }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &MPHom) -> MPHom {
        MPHom {
            alpha: self.alpha.iter().map(|&a| next.alpha[a]).collect(),
            beta: self.beta.iter().map(|&e| next.beta[e]).collect(),
        }
    }

    /// The inverse pair of maps when both are bijections.
    pub fn inverse(&self) -> Option<MPHom> {
        Some(MPHom { alpha: invert(&self.alpha)?, beta: invert(&self.beta)? })
    }
}

pub(crate) fn invert(map: &[usize]) -> Option<Vec<usize>> {
    let mut inv = vec![usize::MAX; map.len()];
    for (i, &v) in map.iter().enumerate() {
        if v >= map.len() || inv[v] != usize::MAX {
            return None;
        }
        inv[v] = i;
    }
    Some(inv)
}

/// Both maps homomorphisms, `β(m∗e) = α(m)∗β(e)`, and `m ≡_e n ⇒ α(m) ≡_{β(e)} α(n)`.
/// Between Boolean pairs `β` must also preserve bottom and joins.
pub fn check_mp_hom(p: &MatchedPair, q: &MatchedPair, h: &MPHom) -> Result<(), Violation> {
    if h.alpha.len() != p.m_size() || h.alpha.iter().any(|&a| a >= q.m_size()) {
        return Err(Violation::new("alpha: M → M'", vec![]));
    }
    if h.beta.len() != p.e_size() || h.beta.iter().any(|&e| e >= q.e_size()) {
        return Err(Violation::new("beta: E → E'", vec![]));
    }
    p.monoid().check_hom(q.monoid(), &h.alpha)?;
    p.lattice().check_hom(q.lattice(), &h.beta)?;
    if let (Some(b), Some(b2)) = (p.boolean(), q.boolean()) {
        if h.beta[b.bottom()] != b2.bottom() {
            return Err(Violation::new("beta preserves bottom", vec![]));
        }
        for e in 0..p.e_size() {
            for f in 0..p.e_size() {
                if h.beta[b.join(e, f)] != b2.join(h.beta[e], h.beta[f]) {
                    return Err(Violation::new("beta preserves joins", vec![e, f]));
                }
            }
        }
    }
    for m in 0..p.m_size() {
        for e in 0..p.e_size() {
            if h.beta[p.star(m, e)] != q.star(h.alpha[m], h.beta[e]) {
                return Err(Violation::new("equivariance", vec![m, e]));
            }
        }
    }
    for e in 0..p.e_size() {
        for m in 0..p.m_size() {
            let rm = p.class_rep(e, m);
            if rm != m && !q.congruent(h.beta[e], h.alpha[m], h.alpha[rm]) {
                return Err(Violation::new("preserves congruences", vec![e, rm, m]));
            }
        }
    }
    Ok(())
}

/// `(e,[a]_e) ↦ (β(e), [α(a)]_{β(e)})`, checked to be an LRM homomorphism.
pub fn hom_to_lrm_hom(sp: &BuiltLrm, sq: &BuiltLrm, h: &MPHom) -> Result<Vec<usize>, Violation> {
    check_mp_hom(&sp.pair, &sq.pair, h)?;
    let map: Vec<usize> = sp
        .elems
        .iter()
        .map(|&(e, a)| sq.element(h.beta[e], h.alpha[a]))
        .collect();
    check_lrm_hom(&sp.lrm, &sq.lrm, &map)?;
    if let (Some(bs), Some(bt)) = (&sp.boolean, &sq.boolean) {
        check_boolean_lrm_hom(bs, bt, &map)?;
    }
    Ok(map)
}

/// `(θ|Tot(S), θ|Proj(S))` for an LRM homomorphism `θ: S → T`.
pub fn induced_mp_hom(
    s: &LeftRestrictionMonoid,
    t: &LeftRestrictionMonoid,
    ps: &ExtractedPair,
    pt: &ExtractedPair,
    theta: &[usize],
) -> Result<MPHom, Violation> {
    check_lrm_hom(s, t, theta)?;
    let alpha = ps
        .tot
        .iter()
        .map(|&m| pt.m_of(theta[m]).ok_or_else(|| Violation::new("maps totals to totals", vec![m])))
        .collect::<Result<Vec<_>, _>>()?;
    let beta = ps
        .proj
        .iter()
        .map(|&e| pt.e_of(theta[e]).ok_or_else(|| Violation::new("maps projections to projections", vec![e])))
        .collect::<Result<Vec<_>, _>>()?;
    let h = MPHom { alpha, beta };
    check_mp_hom(&ps.pair, &pt.pair, &h)?;
    Ok(h)
}

/// `[E|M] ≅ [Proj(S[E|M])|Tot(S[E|M])]` via `α(a) = (1,[a]₁)`, `β(e) = (e,[1]_e)`.
#[derive(Clone, Debug)]
pub struct PairIso {
    pub built: BuiltLrm,
    pub extracted: ExtractedPair,
    pub hom: MPHom,
}

pub fn pair_iso(p: &MatchedPair) -> Result<PairIso> {
    let built = build_lrm(p)?;
    let extracted = match &built.boolean {
        Some(b) => from_boolean_lrm(b),
        None => from_lrm_plain(&built.lrm)?,
    };
    let one = p.monoid().identity();
    let alpha = (0..p.m_size())
        .map(|a| extracted.m_of(built.element(p.top(), a)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Precondition("(1,[a]₁) is not total".into()))?;
    let beta = (0..p.e_size())
        .map(|e| extracted.e_of(built.element(e, one)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Precondition("(e,[1]_e) is not a projection".into()))?;
    let hom = MPHom { alpha, beta };
    check_mp_hom(p, &extracted.pair, &hom)?;
    let inv = hom
        .inverse()
        .ok_or_else(|| Violation::new("alpha and beta are bijections", vec![]))?;
    check_mp_hom(&extracted.pair, p, &inv)?;
    Ok(PairIso { built, extracted, hom })
}

/// `θ: S → S[Proj(S)|Tot(S)]`, `a ↦ (a⁺, [m]_{a⁺})` for a total `m ≥ a`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub extracted: ExtractedPair,
    pub built: BuiltLrm,
    pub theta: Vec<usize>,
}

impl Reconstruction {
    pub fn inverse(&self) -> Vec<usize> {
        invert(&self.theta).expect("θ is a bijection")
    }

    /// The table of S transported along θ; equals the table of `S[E|M]`.
    pub fn relabeled_table(&self, s: &LeftRestrictionMonoid) -> Vec<usize> {
        let n = s.size();
        let inv = self.inverse();
        (0..n * n)
            .map(|i| self.theta[s.mul(inv[i / n], inv[i % n])])
            .collect()
    }
}

pub fn reconstruction_iso(s: &LeftRestrictionMonoid) -> Result<Reconstruction> {
    if let Err(element) = s.is_factorizable() {
        return Err(Error::NotFactorizable { element });
    }
    let extracted = from_lrm(s)?;
    let built = build_lrm(&extracted.pair)?;
    let mut theta = Vec::with_capacity(s.size());
    for a in 0..s.size() {
        let e = s.plus(a);
        let m = s.least_total_above(a).expect("factorizable");
        let em = s.mul(e, m);
        if let Some(n) = s.totals_above(a).find(|&n| s.mul(e, n) != em) {
            return Err(Error::ChoiceDependence(format!(
                "totals {m} and {n} above {a} differ on {e}"
            )));
        }
        let (ei, mi) = (extracted.e_of(e).unwrap(), extracted.m_of(m).unwrap());
        theta.push(built.element(ei, mi));
    }
    let inv = invert(&theta).ok_or_else(|| Violation::new("θ is a bijection", vec![]))?;
    check_lrm_hom(s, &built.lrm, &theta)?;
    check_lrm_hom(&built.lrm, s, &inv)?;
    if let (Some(bs), Some(bt)) = (&extracted.boolean, &built.boolean) {
        check_boolean_lrm_hom(bs, bt, &theta)?;
        check_boolean_lrm_hom(bt, bs, &inv)?;
    }
    Ok(Reconstruction { extracted, built, theta })
}

fn require_boolean(p: &MatchedPair) -> Result<&BooleanAlgebra> {
    p.boolean()
        .ok_or_else(|| Error::Precondition("E is not a Boolean algebra".into()))
}

/// Least `p` with `p ≡_e m` and `p ≡_ē n`.
pub fn mp12_witness(pair: &MatchedPair, m: usize, n: usize, e: usize) -> Result<usize> {
    let b = require_boolean(pair)?;
    let c = b.complement(e);
    (0..pair.m_size())
        .find(|&p| pair.congruent(e, p, m) && pair.congruent(c, p, n))
        .ok_or_else(|| Error::NoWitness { law: "MP12".into(), args: vec![m, n, e] })
}

/// Least `p` with `p ≡_e m` and `p ≡_f n`, given `m ≡_{ef} n`.
///
/// The witness built from [`mp12_witness`] is checked as well, and every
/// valid `p` is checked to lie in one `≡_{e+f}` class.
pub fn amelia_interpolate(pair: &MatchedPair, m: usize, n: usize, e: usize, f: usize) -> Result<usize> {
    let b = require_boolean(pair)?;
    if !pair.congruent(pair.meet(e, f), m, n) {
        return Err(Error::Precondition(format!("{m} ≢ {n} modulo e·f")));
    }
    let valid = |p: usize| pair.congruent(e, p, m) && pair.congruent(f, p, n);
    let routed = mp12_witness(pair, m, n, e)?;
    if !valid(routed) {
        return Err(Error::NoWitness { law: "interpolant".into(), args: vec![m, n, e, f] });
    }
    let least = (0..pair.m_size()).find(|&p| valid(p)).expect("routed is valid");
    let ef = b.join(e, f);
    if let Some(other) = (0..pair.m_size()).find(|&p| valid(p) && !pair.congruent(ef, p, least)) {
        return Err(Error::ChoiceDependence(format!(
            "interpolants {least} and {other} differ modulo e+f"
        )));
    }
    Ok(least)
}
