//! Built-in structures used as fixtures.
//!
//! Partial maps on `{0,..,n-1}` are encoded in base `n+1`: digit `i` is `0`
//! when `i` is outside the domain and `v+1` when `i ↦ v`. Composition is
//! left to right, `x·(fg) = g(f(x))`, so `f⁺` is the partial identity on the
//! domain of `f`.

use crate::algebra::{BooleanAlgebra, FiniteMonoid};
use crate::error::{Error, Result};
use crate::restriction::{LeftRestrictionMonoid, SubLrm};

pub const DEFAULT_SIZE_CAP: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialMap(pub Vec<Option<usize>>);

impl PartialMap {
    pub fn from_index(n: usize, mut index: usize) -> Self {
        let mut digits = Vec::with_capacity(n);
        for _ in 0..n {
            let d = index % (n + 1);
            index /= n + 1;
            digits.push(if d == 0 { None } else { Some(d - 1) });
        }
        PartialMap(digits)
    }

    pub fn index(&self) -> usize {
        let n = self.0.len();
        self.0
            .iter()
            .rev()
            .fold(0, |acc, d| acc * (n + 1) + d.map_or(0, |v| v + 1))
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &PartialMap) -> PartialMap {
        PartialMap(self.0.iter().map(|x| x.and_then(|x| other.0[x])).collect())
    }

    pub fn domain_identity(&self) -> PartialMap {
        PartialMap(
            self.0
                .iter()
                .enumerate()
                .map(|(i, x)| x.map(|_| i))
                .collect(),
        )
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().flatten().all(|v| seen.insert(*v))
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }
}

/// `PT_n`: all partial transformations of an `n`-set. Zero is index 0.
pub fn pt(n: usize) -> LeftRestrictionMonoid {
    let size = (n + 1).pow(n as u32);
    let maps: Vec<PartialMap> = (0..size).map(|i| PartialMap::from_index(n, i)).collect();
    let identity = PartialMap((0..n).map(Some).collect()).index();
    let monoid = FiniteMonoid::from_fn(size, identity, |a, b| maps[a].then(&maps[b]).index())
        .expect("PT_n table is well-formed");
    let plus = maps.iter().map(|m| m.domain_identity().index()).collect();
    LeftRestrictionMonoid::new(monoid, plus, Some(0)).expect("PT_n table is well-formed")
}

/// The symmetric inverse monoid: partial injections, as a sub-LRM of `PT_n`.
pub fn sym_inv(n: usize) -> SubLrm {
    let parent = pt(n);
    let injective: Vec<usize> = (0..parent.size())
        .filter(|&i| PartialMap::from_index(n, i).is_injective())
        .collect();
    parent.sub_lrm(&injective).expect("partial injections are closed")
}

/// `T_n`: total transformations of an `n`-set, composed left to right.
pub fn transformations(n: usize) -> FiniteMonoid {
    let size = n.pow(n as u32);
    let decode = |mut i: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let d = i % n;
                i /= n;
                d
            })
            .collect()
    };
    let encode = |f: &[usize]| f.iter().rev().fold(0, |acc, &d| acc * n + d);
    let identity = encode(&(0..n).collect::<Vec<_>>());
    FiniteMonoid::from_fn(size, identity, |a, b| {
        let (f, g) = (decode(a), decode(b));
        encode(&f.iter().map(|&x| g[x]).collect::<Vec<_>>())
    })
    .expect("T_n table is well-formed")
}

/// The cyclic group of order `n`.
pub fn cyclic(n: usize) -> FiniteMonoid {
    FiniteMonoid::from_fn(n, 0, |a, b| (a + b) % n).expect("n > 0")
}

/// `{1, a_1, .., a_k}` with `x·a_i = a_i`: an identity adjoined to a right-zero semigroup.
pub fn right_zeros(k: usize) -> FiniteMonoid {
    FiniteMonoid::from_fn(k + 1, 0, |x, y| if y == 0 { x } else { y }).expect("k + 1 > 0")
}

pub fn powerset(k: u32) -> BooleanAlgebra {
    BooleanAlgebra::powerset(k)
}

pub fn boolean_as_lrm(k: u32) -> LeftRestrictionMonoid {
    LeftRestrictionMonoid::from_boolean_algebra(&BooleanAlgebra::powerset(k))
}

pub fn trivial_plus(m: FiniteMonoid) -> LeftRestrictionMonoid {
    LeftRestrictionMonoid::trivial_plus(m)
}

/// A structure produced from a generator name such as `pt(2)`.
#[derive(Clone, Debug)]
pub enum Generated {
    Monoid(FiniteMonoid),
    BooleanAlgebra(BooleanAlgebra),
    Lrm(LeftRestrictionMonoid),
}

impl Generated {
    pub fn size(&self) -> usize {
        match self {
            Generated::Monoid(m) => m.size(),
            Generated::BooleanAlgebra(b) => b.size(),
            Generated::Lrm(s) => s.size(),
        }
    }
}

/// Splits `name(arg)` into its parts.
fn split_call(call: &str) -> Result<(&str, &str)> {
    let call = call.trim();
    let open = call
        .find('(')
        .ok_or_else(|| Error::UnknownGenerator(call.to_string()))?;
    if !call.ends_with(')') {
        return Err(Error::UnknownGenerator(call.to_string()));
    }
    Ok((&call[..open], &call[open + 1..call.len() - 1]))
}

fn parse_arg(call: &str, arg: &str) -> Result<usize> {
    arg.trim()
        .parse()
        .map_err(|_| Error::UnknownGenerator(call.to_string()))
}

fn capped(name: &str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::SizeCap { name: name.to_string(), size, cap });
    }
    Ok(())
}

/// Builds a generator by name: `pt(n)`, `sym_inv(n)`, `powerset(k)`,
/// `boolean_as_lrm(k)`, `cyclic(n)`, `transformations(n)`, `right_zeros(k)`,
/// `trivial_plus(<monoid generator>)`.
pub fn generate(call: &str, cap: usize) -> Result<Generated> {
    let (name, arg) = split_call(call)?;
    let checked_pow = |base: usize, exp: usize| base.checked_pow(exp as u32).unwrap_or(usize::MAX);
    Ok(match name {
        "pt" => {
            let n = parse_arg(call, arg)?;
            capped(call, checked_pow(n + 1, n), cap)?;
            Generated::Lrm(pt(n))
        }
        "sym_inv" => {
            let n = parse_arg(call, arg)?;
            capped(call, checked_pow(n + 1, n), cap)?;
            Generated::Lrm(sym_inv(n).lrm)
        }
        "powerset" | "boolean_as_lrm" => {
            let k = parse_arg(call, arg)?;
            if k == 0 {
                return Err(Error::UnknownGenerator(call.to_string()));
            }
            capped(call, checked_pow(2, k), cap)?;
            if name == "powerset" {
                Generated::BooleanAlgebra(powerset(k as u32))
            } else {
                Generated::Lrm(boolean_as_lrm(k as u32))
            }
        }
        "cyclic" | "transformations" | "right_zeros" => {
            let n = parse_arg(call, arg)?;
            let size = match name {
                "cyclic" => n,
                "transformations" => checked_pow(n, n),
                _ => n + 1,
            };
            if size == 0 {
                return Err(Error::UnknownGenerator(call.to_string()));
            }
            capped(call, size, cap)?;
            Generated::Monoid(match name {
                "cyclic" => cyclic(n),
                "transformations" => transformations(n),
                _ => right_zeros(n),
            })
        }
        "trivial_plus" => match generate(arg, cap)? {
            Generated::Monoid(m) => Generated::Lrm(trivial_plus(m)),
            Generated::Lrm(s) => Generated::Lrm(trivial_plus(s.monoid().clone())),
            Generated::BooleanAlgebra(b) => {
                Generated::Lrm(trivial_plus(b.lattice().as_monoid().clone()))
            }
        },
        _ => return Err(Error::UnknownGenerator(call.to_string())),
    })
}
