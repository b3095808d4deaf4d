//! Left restriction monoids: the plus operation, projections and total
//! elements, the natural partial order, right-compatibility and joins.
//!
//! The Boolean structure is never taken as input. [`BooleanDiscovery`]
//! recovers it from the natural order by exhaustive search: joins of
//! projections, complements, and joins of right-compatible pairs. A missing
//! join or complement is itself the certificate that the candidate is not
//! Boolean.

use std::sync::OnceLock;

use crate::algebra::{BooleanAlgebra, FiniteMonoid, Semilattice};
use crate::error::{Error, Result, StructureError, Violation};
use crate::report::{AxiomReport, LawSet};

#[derive(Clone, Debug)]
pub struct LeftRestrictionMonoid {
    monoid: FiniteMonoid,
    plus: Vec<usize>,
    zero: Option<usize>,
    derived: OnceLock<Derived>,
}

#[derive(Clone, Debug)]
struct Derived {
    projections: Vec<usize>,
    totals: Vec<usize>,
    proj_pos: Vec<Option<usize>>,
    tot_pos: Vec<Option<usize>>,
}

impl PartialEq for LeftRestrictionMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.monoid == other.monoid && self.plus == other.plus && self.zero == other.zero
    }
}

impl Eq for LeftRestrictionMonoid {}

impl LeftRestrictionMonoid {
    pub fn new(monoid: FiniteMonoid, plus: Vec<usize>, zero: Option<usize>) -> Result<Self, StructureError> {
        let n = monoid.size();
        StructureError::check_len("plus", plus.len(), n)?;
        StructureError::check_range("plus", &plus, n)?;
        if let Some(z) = zero {
            StructureError::check_range("zero", &[z], n)?;
        }
        Ok(LeftRestrictionMonoid { monoid, plus, zero, derived: OnceLock::new() })
    }

    /// Any monoid with `m⁺ = 1` for every `m`.
    pub fn trivial_plus(monoid: FiniteMonoid) -> Self {
        let plus = vec![monoid.identity(); monoid.size()];
        LeftRestrictionMonoid { monoid, plus, zero: None, derived: OnceLock::new() }
    }

    /// A Boolean algebra with product = meet and `e⁺ = e`.
    pub fn from_boolean_algebra(b: &BooleanAlgebra) -> Self {
        let plus = (0..b.size()).collect();
        LeftRestrictionMonoid {
            monoid: b.lattice().as_monoid().clone(),
            plus,
            zero: Some(b.bottom()),
            derived: OnceLock::new(),
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.monoid.identity()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    #[inline]
    pub fn plus(&self, s: usize) -> usize {
        self.plus[s]
    }

    #[inline]
    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn plus_table(&self) -> &[usize] {
        &self.plus
    }

    fn derived(&self) -> &Derived {
        self.derived.get_or_init(|| {
            let n = self.size();
            let projections: Vec<usize> = (0..n).filter(|&a| self.plus[a] == a).collect();
            let totals: Vec<usize> = (0..n).filter(|&a| self.plus[a] == self.identity()).collect();
            let mut proj_pos = vec![None; n];
            for (i, &e) in projections.iter().enumerate() {
                proj_pos[e] = Some(i);
            }
            let mut tot_pos = vec![None; n];
            for (i, &m) in totals.iter().enumerate() {
                tot_pos[m] = Some(i);
            }
            Derived { projections, totals, proj_pos, tot_pos }
        })
    }

    /// `Proj(S) = {a : a⁺ = a}`, increasing.
    pub fn projections(&self) -> &[usize] {
        &self.derived().projections
    }

    /// `Tot(S) = {a : a⁺ = 1}`, increasing.
    pub fn totals(&self) -> &[usize] {
        &self.derived().totals
    }

    /// Position of `e` in [`projections`](Self::projections).
    pub fn proj_pos(&self, e: usize) -> Option<usize> {
        self.derived().proj_pos[e]
    }

    pub fn tot_pos(&self, m: usize) -> Option<usize> {
        self.derived().tot_pos[m]
    }

    pub fn is_projection(&self, a: usize) -> bool {
        self.plus[a] == a
    }

    pub fn is_total(&self, a: usize) -> bool {
        self.plus[a] == self.identity()
    }

    /// `s ≤ t` iff `s = s⁺t`.
    #[inline]
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        s == self.mul(self.plus(s), t)
    }

    /// `a ~_r b` iff `a⁺b = b⁺a`.
    #[inline]
    pub fn right_compatible(&self, a: usize, b: usize) -> bool {
        self.mul(self.plus(a), b) == self.mul(self.plus(b), a)
    }

    /// `s⁺t⁺ = 0`; false when there is no zero.
    pub fn right_orthogonal(&self, s: usize, t: usize) -> bool {
        self.zero == Some(self.mul(self.plus(s), self.plus(t)))
    }

    /// The semilattice of projections, indexed by position in `projections()`.
    pub fn projection_semilattice(&self) -> Semilattice {
        let proj = self.projections();
        let top = self.proj_pos(self.identity()).expect("identity is a projection");
        let meet = FiniteMonoid::from_fn(proj.len(), top, |i, j| {
            self.proj_pos(self.mul(proj[i], proj[j])).unwrap_or(usize::MAX)
        });
        // A product of projections that is not a projection breaks (LR2); keep
        // the table well-formed and let the caller's checks report it.
        match meet {
            Ok(m) => Semilattice::new(m),
            Err(_) => Semilattice::new(FiniteMonoid::from_fn(proj.len(), top, |i, _| i).unwrap()),
        }
    }

    pub fn laws(&self) -> LawSet<'_> {
        let n = self.size();
        let p = |s: usize| self.plus(s);
        let m = |a: usize, b: usize| self.mul(a, b);
        let mut laws = self.monoid.laws();
        laws.law("LR1", &["s"], &[n], move |t| p(p(t[0])) == p(t[0]));
        laws.law("LR2", &["s", "t"], &[n, n], move |t| {
            let st = m(p(t[0]), p(t[1]));
            p(st) == st
        });
        laws.law("LR3", &["s", "t"], &[n, n], move |t| {
            m(p(t[0]), p(t[1])) == m(p(t[1]), p(t[0]))
        });
        laws.law("LR4", &["s"], &[n], move |t| m(p(t[0]), t[0]) == t[0]);
        laws.law("LR5", &["s", "t"], &[n, n], move |t| {
            p(m(t[0], t[1])) == p(m(t[0], p(t[1])))
        });
        laws.law("LR6", &["s", "t"], &[n, n], move |t| {
            m(t[0], p(t[1])) == m(p(m(t[0], t[1])), t[0])
        });
        if let Some(z) = self.zero {
            laws.law("zero", &["s"], &[n], move |t| {
                p(z) == z && m(z, t[0]) == z && m(t[0], z) == z
            });
        }
        laws
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("left restriction monoid")
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }

    /// Least-index total element above `s`.
    pub fn least_total_above(&self, s: usize) -> Option<usize> {
        self.totals().iter().copied().find(|&m| self.natural_leq(s, m))
    }

    pub fn totals_above(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        self.totals().iter().copied().filter(move |&m| self.natural_leq(s, m))
    }

    /// `Err(s)` for the least `s` lying below no total element.
    pub fn is_factorizable(&self) -> Result<(), usize> {
        match (0..self.size()).find(|&s| self.least_total_above(s).is_none()) {
            Some(s) => Err(s),
            None => Ok(()),
        }
    }

    /// The least upper bound of `a` and `b`, found by scanning all upper bounds.
    pub fn join_by_scan(&self, a: usize, b: usize) -> Result<usize> {
        if !self.right_compatible(a, b) {
            return Err(Error::NotCompatible { a, b });
        }
        let upper: Vec<usize> = (0..self.size())
            .filter(|&u| self.natural_leq(a, u) && self.natural_leq(b, u))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&u| upper.iter().all(|&v| self.natural_leq(u, v)))
            .ok_or(Error::NoJoin { a, b })
    }

    /// The sub-LRM on `elements`, which must contain the identity and be
    /// closed under product and plus.
    pub fn sub_lrm(&self, elements: &[usize]) -> Result<SubLrm, Violation> {
        let mut embedding = elements.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        let mut position = vec![None; self.size()];
        for (i, &a) in embedding.iter().enumerate() {
            position[a] = Some(i);
        }
        let id = position[self.identity()].ok_or_else(|| Violation::new("contains identity", vec![]))?;
        for &a in &embedding {
            if position[self.plus(a)].is_none() {
                return Err(Violation::new("closed under plus", vec![a]));
            }
            for &b in &embedding {
                if position[self.mul(a, b)].is_none() {
                    return Err(Violation::new("closed under product", vec![a, b]));
                }
            }
        }
        let k = embedding.len();
        let monoid = FiniteMonoid::from_fn(k, id, |i, j| {
            position[self.mul(embedding[i], embedding[j])].unwrap()
        })
        .expect("closed subset");
        let plus = embedding.iter().map(|&a| position[self.plus(a)].unwrap()).collect();
        let zero = self.zero.and_then(|z| position[z]);
        let lrm = LeftRestrictionMonoid::new(monoid, plus, zero).expect("closed subset");
        Ok(SubLrm { lrm, embedding, position })
    }

    /// `Tot(S)↓`: the elements lying below some total element.
    pub fn factorizable_part(&self) -> SubLrm {
        let below: Vec<usize> = (0..self.size())
            .filter(|&s| self.least_total_above(s).is_some())
            .collect();
        self.sub_lrm(&below).expect("the down-set of the totals is a sub-LRM")
    }
}

pub fn check_lrm(s: &LeftRestrictionMonoid) -> AxiomReport {
    s.check()
}

/// A sub-LRM together with its embedding into the parent.
#[derive(Clone, Debug)]
pub struct SubLrm {
    pub lrm: LeftRestrictionMonoid,
    /// Sub index → parent index, increasing.
    pub embedding: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl SubLrm {
    /// Parent index → sub index.
    pub fn index_of(&self, parent: usize) -> Option<usize> {
        self.position.get(parent).copied().flatten()
    }
}

/// Boolean structure recovered from the natural order by exhaustive search.
pub struct BooleanDiscovery<'s> {
    s: &'s LeftRestrictionMonoid,
    /// Joins of projections inside `Proj(S)`, indexed by S elements.
    proj_join: Vec<Option<usize>>,
    complement: Vec<Option<usize>>,
    /// Joins of right-compatible pairs in S.
    join: Vec<Option<usize>>,
}

impl<'s> BooleanDiscovery<'s> {
    pub fn new(s: &'s LeftRestrictionMonoid) -> Self {
        let n = s.size();
        let proj = s.projections();
        let mut proj_join = vec![None; n * n];
        for &e in proj {
            for &f in proj {
                let upper: Vec<usize> = proj
                    .iter()
                    .copied()
                    .filter(|&u| s.natural_leq(e, u) && s.natural_leq(f, u))
                    .collect();
                proj_join[e * n + f] = upper
                    .iter()
                    .copied()
                    .find(|&u| upper.iter().all(|&v| s.natural_leq(u, v)));
            }
        }
        let mut complement = vec![None; n];
        if let Some(z) = s.zero() {
            for &e in proj {
                complement[e] = proj.iter().copied().find(|&c| {
                    s.mul(e, c) == z && proj_join[e * n + c] == Some(s.identity())
                });
            }
        }
        let mut join = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if b < a {
                    join[a * n + b] = join[b * n + a];
                } else {
                    join[a * n + b] = s.join_by_scan(a, b).ok();
                }
            }
        }
        BooleanDiscovery { s, proj_join, complement, join }
    }

    pub fn lrm(&self) -> &'s LeftRestrictionMonoid {
        self.s
    }

    pub fn proj_join(&self, e: usize, f: usize) -> Option<usize> {
        self.proj_join[e * self.s.size() + f]
    }

    pub fn complement(&self, e: usize) -> Option<usize> {
        self.complement[e]
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a * self.s.size() + b]
    }

    fn b1_laws(&self) -> LawSet<'_> {
        let s = self.s;
        let n = s.size();
        let is_p = move |e: usize| s.is_projection(e);
        let mut laws = LawSet::new();
        laws.law("B1 zero", &[], &[], move |_| match s.zero() {
            Some(z) => s.is_projection(z) && (0..n).all(|a| s.mul(z, a) == z && s.mul(a, z) == z),
            None => false,
        });
        laws.law("B1 non-degenerate", &[], &[], move |_| s.zero() != Some(s.identity()));
        laws.law("B1 joins", &["e", "f"], &[n, n], move |t| {
            !(is_p(t[0]) && is_p(t[1])) || self.proj_join(t[0], t[1]).is_some()
        });
        laws.law("B1 complements", &["e"], &[n], move |t| {
            !is_p(t[0]) || self.complement(t[0]).is_some()
        });
        laws.law("B1 distributive", &["e", "f", "g"], &[n, n, n], move |t| {
            let (e, f, g) = (t[0], t[1], t[2]);
            if !(is_p(e) && is_p(f) && is_p(g)) {
                return true;
            }
            match (self.proj_join(f, g), self.proj_join(s.mul(e, f), s.mul(e, g))) {
                (Some(fg), Some(r)) => s.mul(e, fg) == r,
                _ => true,
            }
        });
        laws
    }

    pub fn laws(&self) -> LawSet<'_> {
        let s = self.s;
        let n = s.size();
        let mut laws = self.b1_laws();
        let b1_ok = laws.run("B1").passed();
        laws.law("B2", &["a", "b"], &[n, n], move |t| {
            !s.right_compatible(t[0], t[1]) || self.join(t[0], t[1]).is_some()
        });
        laws.law("B3 left", &["a", "b", "c"], &[n, n, n], move |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            match self.join(b, c) {
                Some(j) => self.join(s.mul(a, b), s.mul(a, c)) == Some(s.mul(a, j)),
                None => true,
            }
        });
        laws.law("B3 right", &["a", "b", "c"], &[n, n, n], move |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            match self.join(b, c) {
                Some(j) => self.join(s.mul(b, a), s.mul(c, a)) == Some(s.mul(j, a)),
                None => true,
            }
        });
        laws.law("orthogonal implies compatible", &["a", "b"], &[n, n], move |t| {
            !s.right_orthogonal(t[0], t[1]) || s.right_compatible(t[0], t[1])
        });
        if b1_ok {
            laws.law("join support", &["b", "c"], &[n, n], move |t| {
                let (b, c) = (t[0], t[1]);
                match self.join(b, c) {
                    Some(j) => Some(s.plus(j)) == self.proj_join(s.plus(b), s.plus(c)),
                    None => true,
                }
            });
            laws.law("complement transport", &["s", "e"], &[n, n], move |t| {
                let (x, e) = (t[0], t[1]);
                if !s.is_projection(e) {
                    return true;
                }
                let lhs = s.mul(x, self.complement(e).unwrap());
                let rhs = s.mul(self.complement(s.plus(s.mul(x, e))).unwrap(), x);
                lhs == rhs
            });
        } else {
            laws.skip("join support", "Proj(S) is not a Boolean algebra");
            laws.skip("complement transport", "Proj(S) is not a Boolean algebra");
        }
        laws
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("Boolean left restriction monoid")
    }
}

/// Checks (B1)–(B3) plus the corollaries on join supports and complements.
pub fn check_boolean_lrm(s: &LeftRestrictionMonoid) -> AxiomReport {
    BooleanDiscovery::new(s).check()
}

#[derive(Clone, Debug)]
pub struct BooleanLrm {
    lrm: LeftRestrictionMonoid,
    zero: usize,
    proj_algebra: BooleanAlgebra,
    complement: Vec<usize>,
    join: Vec<Option<usize>>,
}

impl PartialEq for BooleanLrm {
    fn eq(&self, other: &Self) -> bool {
        self.lrm == other.lrm
    }
}

impl BooleanLrm {
    /// Validates every LRM and Boolean law and records the discovered structure.
    pub fn new(lrm: LeftRestrictionMonoid) -> Result<Self> {
        lrm.check().ensure_passed()?;
        let zero = lrm.zero().ok_or(Error::NoZero)?;
        let disc = BooleanDiscovery::new(&lrm);
        disc.check().ensure_passed()?;
        let n = lrm.size();
        let proj = lrm.projections();
        let k = proj.len();
        let pos = |e: usize| lrm.proj_pos(e).unwrap();
        let lattice = lrm.projection_semilattice();
        let pjoin = (0..k * k).map(|i| pos(disc.proj_join(proj[i / k], proj[i % k]).unwrap())).collect();
        let pcomp = proj.iter().map(|&e| pos(disc.complement(e).unwrap())).collect();
        let proj_algebra = BooleanAlgebra::new(lattice, pos(zero), pjoin, pcomp)?;
        let complement = (0..n).map(|e| disc.complement(e).unwrap_or(usize::MAX)).collect();
        let join = disc.join.clone();
        drop(disc);
        Ok(BooleanLrm { lrm, zero, proj_algebra, complement, join })
    }

    pub fn lrm(&self) -> &LeftRestrictionMonoid {
        &self.lrm
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// `Proj(S)` as a Boolean algebra indexed by position in `projections()`.
    pub fn proj_algebra(&self) -> &BooleanAlgebra {
        &self.proj_algebra
    }

    /// Complement of the projection `e` inside `Proj(S)`.
    pub fn complement(&self, e: usize) -> usize {
        assert!(self.lrm.is_projection(e), "{e} is not a projection");
        self.complement[e]
    }

    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        if !self.lrm.right_compatible(a, b) {
            return Err(Error::NotCompatible { a, b });
        }
        self.join[a * self.lrm.size() + b].ok_or(Error::NoJoin { a, b })
    }

    /// Join of a non-empty family of pairwise right-compatible elements.
    pub fn join_all(&self, items: &[usize]) -> Result<usize> {
        let (&first, rest) = items
            .split_first()
            .ok_or_else(|| Error::Precondition("join of an empty family".into()))?;
        rest.iter().try_fold(first, |acc, &b| self.join(acc, b))
    }

    /// `ŝ = s ∨ (s⁺)‾`, a total element with `s = s⁺ŝ`.
    pub fn total_cover(&self, s: usize) -> usize {
        let c = self.complement(self.lrm.plus(s));
        self.join(s, c).expect("s and the complement of s⁺ are right-orthogonal")
    }
}

pub fn total_cover(s: &BooleanLrm, a: usize) -> usize {
    s.total_cover(a)
}

/// Monoid homomorphism that commutes with plus.
pub fn check_lrm_hom(
    s: &LeftRestrictionMonoid,
    t: &LeftRestrictionMonoid,
    map: &[usize],
) -> Result<(), Violation> {
    s.monoid().check_hom(t.monoid(), map)?;
    for a in 0..s.size() {
        if map[s.plus(a)] != t.plus(map[a]) {
            return Err(Violation::new("preserves plus", vec![a]));
        }
    }
    Ok(())
}

/// [`check_lrm_hom`] plus preservation of the zero and of binary joins.
pub fn check_boolean_lrm_hom(s: &BooleanLrm, t: &BooleanLrm, map: &[usize]) -> Result<(), Violation> {
    check_lrm_hom(s.lrm(), t.lrm(), map)?;
    if map[s.zero()] != t.zero() {
        return Err(Violation::new("preserves zero", vec![]));
    }
    let n = s.lrm().size();
    for a in 0..n {
        for b in 0..n {
            if let Ok(j) = s.join(a, b) {
                if t.join(map[a], map[b]).ok() != Some(map[j]) {
                    return Err(Violation::new("preserves joins", vec![a, b]));
                }
            }
        }
    }
    Ok(())
}
