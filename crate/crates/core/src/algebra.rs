//! Finite monoids, semilattices, Boolean algebras and partitions, all given
//! by explicit tables over dense indices `0..n`.

use crate::error::{StructureError, Violation};
use crate::report::{AxiomReport, LawSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    size: usize,
    mult: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    /// Builds a monoid from a multiplication table, checking only its shape.
    /// Use [`FiniteMonoid::check`] for the monoid laws.
    pub fn from_rows(rows: &[Vec<usize>], identity: usize) -> Result<Self, StructureError> {
        let size = rows.len();
        if size == 0 {
            return Err(StructureError::Empty { field: "table".into() });
        }
        let mult = StructureError::flatten("table", rows, size, size, size)?;
        StructureError::check_range("identity", &[identity], size)?;
        Ok(FiniteMonoid { size, mult, identity })
    }

    pub fn from_fn(
        size: usize,
        identity: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, StructureError> {
        if size == 0 {
            return Err(StructureError::Empty { field: "table".into() });
        }
        let mult: Vec<usize> = (0..size * size).map(|i| f(i / size, i % size)).collect();
        StructureError::check_range("table", &mult, size)?;
        StructureError::check_range("identity", &[identity], size)?;
        Ok(FiniteMonoid { size, mult, identity })
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        FiniteMonoid { size: 1, mult: vec![0], identity: 0 }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.size + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn table(&self) -> &[usize] {
        &self.mult
    }

    pub fn laws(&self) -> LawSet<'_> {
        let n = self.size;
        let mut laws = LawSet::new();
        laws.law("associativity", &["a", "b", "c"], &[n, n, n], move |t| {
            self.mul(self.mul(t[0], t[1]), t[2]) == self.mul(t[0], self.mul(t[1], t[2]))
        });
        laws.law("identity", &["a"], &[n], move |t| {
            self.mul(self.identity, t[0]) == t[0] && self.mul(t[0], self.identity) == t[0]
        });
        laws
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("monoid")
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }

    /// Checks that `map` is an identity-preserving multiplicative map into `target`.
    pub fn check_hom(&self, target: &FiniteMonoid, map: &[usize]) -> Result<(), Violation> {
        check_map_shape(map, self.size, target.size)?;
        if map[self.identity] != target.identity {
            return Err(Violation::new("preserves identity", vec![]));
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Violation::new("preserves product", vec![a, b]));
                }
            }
        }
        Ok(())
    }
}

pub fn check_monoid(m: &FiniteMonoid) -> AxiomReport {
    m.check()
}

pub(crate) fn check_map_shape(map: &[usize], from: usize, to: usize) -> Result<(), Violation> {
    if map.len() != from {
        return Err(Violation::new("map is total", vec![map.len()]));
    }
    if let Some(i) = map.iter().position(|&v| v >= to) {
        return Err(Violation::new("map lands in target", vec![i]));
    }
    Ok(())
}

/// A meet semilattice with top, stored as a commutative idempotent monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semilattice {
    meet: FiniteMonoid,
}

impl Semilattice {
    pub fn new(meet: FiniteMonoid) -> Self {
        Semilattice { meet }
    }

    pub fn from_rows(rows: &[Vec<usize>], top: usize) -> Result<Self, StructureError> {
        Ok(Semilattice { meet: FiniteMonoid::from_rows(rows, top)? })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.meet.size()
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.meet.identity()
    }

    #[inline]
    pub fn meet(&self, e: usize, f: usize) -> usize {
        self.meet.mul(e, f)
    }

    #[inline]
    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.meet(e, f) == e
    }

    pub fn as_monoid(&self) -> &FiniteMonoid {
        &self.meet
    }

    pub fn laws(&self) -> LawSet<'_> {
        let n = self.size();
        let mut laws = self.meet.laws();
        laws.law("meet commutative", &["e", "f"], &[n, n], move |t| {
            self.meet(t[0], t[1]) == self.meet(t[1], t[0])
        });
        laws.law("meet idempotent", &["e"], &[n], move |t| self.meet(t[0], t[0]) == t[0]);
        laws
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("semilattice")
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }

    pub fn check_hom(&self, target: &Semilattice, map: &[usize]) -> Result<(), Violation> {
        self.meet.check_hom(&target.meet, map)
    }
}

pub fn semilattice_leq(e_lattice: &Semilattice, e: usize, f: usize) -> bool {
    e_lattice.leq(e, f)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanAlgebra {
    lattice: Semilattice,
    bottom: usize,
    join: Vec<usize>,
    complement: Vec<usize>,
}

impl BooleanAlgebra {
    pub fn new(
        lattice: Semilattice,
        bottom: usize,
        join: Vec<usize>,
        complement: Vec<usize>,
    ) -> Result<Self, StructureError> {
        let n = lattice.size();
        StructureError::check_range("bottom", &[bottom], n)?;
        StructureError::check_len("join", join.len(), n * n)?;
        StructureError::check_range("join", &join, n)?;
        StructureError::check_len("complement", complement.len(), n)?;
        StructureError::check_range("complement", &complement, n)?;
        Ok(BooleanAlgebra { lattice, bottom, join, complement })
    }

    pub fn from_rows(
        meet: &[Vec<usize>],
        join: &[Vec<usize>],
        complement: &[usize],
        top: usize,
        bottom: usize,
    ) -> Result<Self, StructureError> {
        let lattice = Semilattice::from_rows(meet, top)?;
        let n = lattice.size();
        let join = StructureError::flatten("join", join, n, n, n)?;
        Self::new(lattice, bottom, join, complement.to_vec())
    }

    /// The algebra of subsets of a `k`-set; element `i` is the subset with bitmask `i`.
    pub fn powerset(k: u32) -> Self {
        let n = 1usize << k;
        let lattice = Semilattice::new(FiniteMonoid::from_fn(n, n - 1, |a, b| a & b).unwrap());
        let join = (0..n * n).map(|i| (i / n) | (i % n)).collect();
        let complement = (0..n).map(|a| !a & (n - 1)).collect();
        BooleanAlgebra { lattice, bottom: 0, join, complement }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn lattice(&self) -> &Semilattice {
        &self.lattice
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn meet(&self, e: usize, f: usize) -> usize {
        self.lattice.meet(e, f)
    }

    #[inline]
    pub fn join(&self, e: usize, f: usize) -> usize {
        self.join[e * self.size() + f]
    }

    #[inline]
    pub fn complement(&self, e: usize) -> usize {
        self.complement[e]
    }

    #[inline]
    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.lattice.leq(e, f)
    }

    pub fn join_rows(&self) -> Vec<Vec<usize>> {
        self.join.chunks(self.size()).map(|r| r.to_vec()).collect()
    }

    pub fn complements(&self) -> &[usize] {
        &self.complement
    }

    pub fn laws(&self) -> LawSet<'_> {
        let n = self.size();
        let mut laws = self.lattice.laws();
        let (j, m, c) = (
            move |a, b| self.join(a, b),
            move |a, b| self.meet(a, b),
            move |a| self.complement(a),
        );
        laws.law("join associative", &["e", "f", "g"], &[n, n, n], move |t| {
            j(j(t[0], t[1]), t[2]) == j(t[0], j(t[1], t[2]))
        });
        laws.law("join commutative", &["e", "f"], &[n, n], move |t| j(t[0], t[1]) == j(t[1], t[0]));
        laws.law("join idempotent", &["e"], &[n], move |t| j(t[0], t[0]) == t[0]);
        laws.law("absorption", &["e", "f"], &[n, n], move |t| {
            m(t[0], j(t[0], t[1])) == t[0] && j(t[0], m(t[0], t[1])) == t[0]
        });
        laws.law("meet distributes", &["e", "f", "g"], &[n, n, n], move |t| {
            m(t[0], j(t[1], t[2])) == j(m(t[0], t[1]), m(t[0], t[2]))
        });
        laws.law("join distributes", &["e", "f", "g"], &[n, n, n], move |t| {
            j(t[0], m(t[1], t[2])) == m(j(t[0], t[1]), j(t[0], t[2]))
        });
        laws.law("bottom", &["e"], &[n], move |t| {
            j(self.bottom, t[0]) == t[0] && m(self.bottom, t[0]) == self.bottom
        });
        laws.law("complement", &["e"], &[n], move |t| {
            m(t[0], c(t[0])) == self.bottom && j(t[0], c(t[0])) == self.top()
        });
        laws.law("de morgan", &["e", "f"], &[n, n], move |t| {
            c(m(t[0], t[1])) == j(c(t[0]), c(t[1])) && c(j(t[0], t[1])) == m(c(t[0]), c(t[1]))
        });
        laws.law("non-degenerate", &[], &[], move |_| self.bottom != self.top());
        laws
    }

    pub fn check(&self) -> AxiomReport {
        self.laws().run("boolean algebra")
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }
}

pub fn check_boolean_algebra(b: &BooleanAlgebra) -> AxiomReport {
    b.check()
}

/// A partition of `0..n`; each element is labelled by the least element of its block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rep: Vec<usize>,
}

impl Partition {
    /// Canonicalizes arbitrary block labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first: std::collections::HashMap<usize, usize> = Default::default();
        let rep = labels
            .iter()
            .enumerate()
            .map(|(i, l)| *first.entry(*l).or_insert(i))
            .collect();
        Partition { rep }
    }

    /// Groups `0..n` by the value of `key`.
    pub fn by_key<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut first: std::collections::HashMap<K, usize> = Default::default();
        let rep = (0..n).map(|i| *first.entry(key(i)).or_insert(i)).collect();
        Partition { rep }
    }

    pub fn identity(n: usize) -> Self {
        Partition { rep: (0..n).collect() }
    }

    pub fn universal(n: usize) -> Self {
        Partition { rep: vec![0; n] }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    /// Least element of the block containing `a`.
    #[inline]
    pub fn rep(&self, a: usize) -> usize {
        self.rep[a]
    }

    #[inline]
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    pub fn labels(&self) -> &[usize] {
        &self.rep
    }

    /// Block representatives in increasing order.
    pub fn reps(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.rep[i] == i).collect()
    }

    pub fn num_blocks(&self) -> usize {
        (0..self.len()).filter(|&i| self.rep[i] == i).count()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let reps = self.reps();
        reps.iter()
            .map(|&r| (0..self.len()).filter(|&i| self.rep[i] == r).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rep.iter().enumerate().all(|(i, &r)| i == r)
    }

    pub fn is_universal(&self) -> bool {
        self.rep.iter().all(|&r| r == 0)
    }

    /// True if every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        (0..self.len()).all(|i| coarser.same(i, self.rep[i]))
    }
}

/// Right-closure scan: `Err((a, b, k))` with `a ≡ b` but `ak ≢ bk`,
/// lexicographically least.
pub fn check_right_congruence(m: &FiniteMonoid, p: &Partition) -> Result<(), (usize, usize, usize)> {
    assert_eq!(p.len(), m.size(), "partition must cover the monoid");
    let n = m.size();
    for a in 0..n {
        for b in 0..n {
            if !p.same(a, b) {
                continue;
            }
            for k in 0..n {
                if !p.same(m.mul(a, k), m.mul(b, k)) {
                    return Err((a, b, k));
                }
            }
        }
    }
    Ok(())
}

/// A partition of a monoid known to be stable under right multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightCongruence {
    partition: Partition,
}

impl RightCongruence {
    pub fn new(m: &FiniteMonoid, partition: Partition) -> Result<Self, Violation> {
        if partition.len() != m.size() {
            return Err(Violation::new("partition covers monoid", vec![partition.len()]));
        }
        check_right_congruence(m, &partition)
            .map_err(|(a, b, k)| Violation::new("right closure", vec![a, b, k]))?;
        Ok(RightCongruence { partition })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }
}
