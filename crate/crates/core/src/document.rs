//! JSON documents for every structure, and their canonical text form.
//!
//! A document is an object with a `kind` field, optional `name` and `note`,
//! and kind-specific dense tables. Actions and `[E|M]`-sets embed the
//! structure they are over. Canonical output sorts keys and puts each table
//! row on its own line, so equal structures serialize byte-identically.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::actions::SupportedAction;
use crate::algebra::{BooleanAlgebra, FiniteMonoid, Partition, Semilattice};
use crate::em_sets::EmSet;
use crate::error::{Error, Result, StructureError};
use crate::generators::Generated;
use crate::matched_pair::{MatchedPair, PairBase};
use crate::restriction::LeftRestrictionMonoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDoc {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemilatticeDoc {
    pub meet: Vec<Vec<usize>>,
    pub top: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanAlgebraDoc {
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub complement: Vec<usize>,
    pub top: usize,
    pub bottom: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrmDoc {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub plus: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
}

/// `E` is Boolean exactly when `join`, `complement` and `bottom` are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseDoc {
    pub meet: Vec<Vec<usize>>,
    pub top: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub e: BaseDoc,
    pub monoid: MonoidDoc,
    /// `act[m][e] = m ∗ e`.
    pub act: Vec<Vec<usize>>,
    /// Block ids of `≡_e`, one array per element of `E`.
    pub congruences: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub lrm: LrmDoc,
    /// `act[s][x] = s·x`.
    pub act: Vec<Vec<usize>>,
    pub support: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmSetDoc {
    pub pair: PairDoc,
    /// `act[m][y] = m·y`.
    pub act: Vec<Vec<usize>>,
    /// Block ids of `≡_e`, one array per element of `E`.
    pub equivalences: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Monoid(MonoidDoc),
    Semilattice(SemilatticeDoc),
    BooleanAlgebra(BooleanAlgebraDoc),
    Lrm(LrmDoc),
    MatchedPair(PairDoc),
    Action(ActionDoc),
    EmSet(EmSetDoc),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Monoid(_) => "monoid",
            Body::Semilattice(_) => "semilattice",
            Body::BooleanAlgebra(_) => "boolean_algebra",
            Body::Lrm(_) => "lrm",
            Body::MatchedPair(_) => "matched_pair",
            Body::Action(_) => "action",
            Body::EmSet(_) => "em_set",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(flatten)]
    pub body: Body,
}

fn rows(flat: &[usize], nrows: usize, width: usize) -> Vec<Vec<usize>> {
    (0..nrows).map(|r| flat[r * width..(r + 1) * width].to_vec()).collect()
}

fn labels(ps: &[Partition]) -> Vec<Vec<usize>> {
    ps.iter().map(|p| p.labels().to_vec()).collect()
}

fn partitions(field: &str, labels: &[Vec<usize>], n: usize) -> Result<Vec<Partition>, StructureError> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| {
            StructureError::check_len(&format!("{field}[{i}]"), l.len(), n)?;
            Ok(Partition::from_labels(l))
        })
        .collect()
}

fn wrong_kind(expected: &str, found: &Body) -> Error {
    Error::Precondition(format!("expected a {expected} document, found {}", found.kind()))
}

impl MonoidDoc {
    pub fn of(m: &FiniteMonoid) -> Self {
        MonoidDoc { table: m.rows(), identity: m.identity() }
    }

    pub fn decode(&self) -> Result<FiniteMonoid, StructureError> {
        FiniteMonoid::from_rows(&self.table, self.identity)
    }
}

impl LrmDoc {
    pub fn of(s: &LeftRestrictionMonoid) -> Self {
        LrmDoc {
            table: s.monoid().rows(),
            identity: s.identity(),
            plus: s.plus_table().to_vec(),
            zero: s.zero(),
        }
    }

    pub fn decode(&self) -> Result<LeftRestrictionMonoid, StructureError> {
        let m = FiniteMonoid::from_rows(&self.table, self.identity)?;
        LeftRestrictionMonoid::new(m, self.plus.clone(), self.zero)
    }
}

impl BaseDoc {
    pub fn of(base: &PairBase) -> Self {
        let l = base.lattice();
        let meet = l.as_monoid().rows();
        match base.boolean() {
            Some(b) => BaseDoc {
                meet,
                top: l.top(),
                join: Some(b.join_rows()),
                complement: Some(b.complements().to_vec()),
                bottom: Some(b.bottom()),
            },
            None => BaseDoc { meet, top: l.top(), join: None, complement: None, bottom: None },
        }
    }

    pub fn decode(&self) -> Result<PairBase, StructureError> {
        match (&self.join, &self.complement, self.bottom) {
            (Some(j), Some(c), Some(b)) => Ok(PairBase::Boolean(BooleanAlgebra::from_rows(&self.meet, j, c, self.top, b)?)),
            (None, None, None) => Ok(PairBase::Semilattice(Semilattice::from_rows(&self.meet, self.top)?)),
            _ => Err(StructureError::Invalid(
                "e: join, complement and bottom must be given together".into(),
            )),
        }
    }
}

impl PairDoc {
    pub fn of(p: &MatchedPair) -> Self {
        PairDoc {
            e: BaseDoc::of(p.base()),
            monoid: MonoidDoc::of(p.monoid()),
            act: rows(p.act_table(), p.m_size(), p.e_size()),
            congruences: labels(p.congruences()),
        }
    }

    pub fn decode(&self) -> Result<MatchedPair, StructureError> {
        let base = self.e.decode()?;
        let monoid = self.monoid.decode()?;
        let (ne, nm) = (base.size(), monoid.size());
        let act = StructureError::flatten("act", &self.act, nm, ne, ne)?;
        StructureError::check_len("congruences", self.congruences.len(), ne)?;
        let cong = partitions("congruences", &self.congruences, nm)?;
        MatchedPair::new(base, monoid, act, cong)
    }
}

impl StructureDocument {
    pub fn new(body: Body) -> Self {
        StructureDocument { name: None, note: None, body }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn kind(&self) -> &'static str {
        self.body.kind()
    }

    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        Self::new(Body::Monoid(MonoidDoc::of(m)))
    }

    pub fn from_semilattice(l: &Semilattice) -> Self {
        Self::new(Body::Semilattice(SemilatticeDoc { meet: l.as_monoid().rows(), top: l.top() }))
    }

    pub fn from_boolean_algebra(b: &BooleanAlgebra) -> Self {
        Self::new(Body::BooleanAlgebra(BooleanAlgebraDoc {
            meet: b.lattice().as_monoid().rows(),
            join: b.join_rows(),
            complement: b.complements().to_vec(),
            top: b.top(),
            bottom: b.bottom(),
        }))
    }

    pub fn from_lrm(s: &LeftRestrictionMonoid) -> Self {
        Self::new(Body::Lrm(LrmDoc::of(s)))
    }

    pub fn from_pair(p: &MatchedPair) -> Self {
        Self::new(Body::MatchedPair(PairDoc::of(p)))
    }

    pub fn from_action(a: &SupportedAction<'_>) -> Self {
        Self::new(Body::Action(ActionDoc {
            lrm: LrmDoc::of(a.lrm()),
            act: a.act_rows(),
            support: a.support_table().to_vec(),
        }))
    }

    pub fn from_em_set(y: &EmSet<'_>) -> Self {
        Self::new(Body::EmSet(EmSetDoc {
            pair: PairDoc::of(y.pair()),
            act: rows(y.act_table(), y.pair().m_size(), y.size()),
            equivalences: labels(y.equivalences()),
        }))
    }

    pub fn from_generated(g: &Generated) -> Self {
        match g {
            Generated::Monoid(m) => Self::from_monoid(m),
            Generated::BooleanAlgebra(b) => Self::from_boolean_algebra(b),
            Generated::Lrm(s) => Self::from_lrm(s),
        }
    }

    /// Parse errors carry the line and column; table errors name the field and row.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_canonical(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        let mut out = String::new();
        write_value(&value, 0, &mut out);
        out.push('\n');
        out
    }

    pub fn monoid(&self) -> Result<FiniteMonoid> {
        match &self.body {
            Body::Monoid(d) => Ok(d.decode()?),
            Body::Lrm(d) => Ok(d.decode()?.monoid().clone()),
            other => Err(wrong_kind("monoid", other)),
        }
    }

    pub fn semilattice(&self) -> Result<Semilattice> {
        match &self.body {
            Body::Semilattice(d) => Ok(Semilattice::from_rows(&d.meet, d.top)?),
            Body::BooleanAlgebra(d) => Ok(Semilattice::from_rows(&d.meet, d.top)?),
            other => Err(wrong_kind("semilattice", other)),
        }
    }

    pub fn boolean_algebra(&self) -> Result<BooleanAlgebra> {
        match &self.body {
            Body::BooleanAlgebra(d) => Ok(BooleanAlgebra::from_rows(&d.meet, &d.join, &d.complement, d.top, d.bottom)?),
            other => Err(wrong_kind("boolean_algebra", other)),
        }
    }

    /// The LRM of an `lrm` or `action` document.
    pub fn lrm(&self) -> Result<LeftRestrictionMonoid> {
        match &self.body {
            Body::Lrm(d) => Ok(d.decode()?),
            Body::Action(d) => Ok(d.lrm.decode()?),
            other => Err(wrong_kind("lrm", other)),
        }
    }

    /// The pair of a `matched_pair` or `em_set` document.
    pub fn pair(&self) -> Result<MatchedPair> {
        match &self.body {
            Body::MatchedPair(d) => Ok(d.decode()?),
            Body::EmSet(d) => Ok(d.pair.decode()?),
            other => Err(wrong_kind("matched_pair", other)),
        }
    }

    /// The action, over `s` (normally the result of [`lrm`](Self::lrm)).
    pub fn action<'s>(&self, s: &'s LeftRestrictionMonoid) -> Result<SupportedAction<'s>> {
        match &self.body {
            Body::Action(d) => {
                if d.lrm.decode()? != *s {
                    return Err(Error::Precondition("the action is over a different monoid".into()));
                }
                Ok(SupportedAction::from_rows(s, &d.act, d.support.clone())?)
            }
            other => Err(wrong_kind("action", other)),
        }
    }

    /// The `[E|M]`-set, over `p` (normally the result of [`pair`](Self::pair)).
    pub fn em_set<'p>(&self, p: &'p MatchedPair) -> Result<EmSet<'p>> {
        match &self.body {
            Body::EmSet(d) => {
                if d.pair.decode()? != *p {
                    return Err(Error::Precondition("the set is over a different pair".into()));
                }
                StructureError::check_len("equivalences", d.equivalences.len(), p.e_size())?;
                Ok(EmSet::from_rows(p, &d.act, &d.equivalences)?)
            }
            other => Err(wrong_kind("em_set", other)),
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Sorted keys, scalar arrays inline, one line per nested array or entry.
fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&map[*k], indent + 1, out);
                if i + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::projection_action;
    use crate::generators::{pt, sym_inv};
    use crate::matched_pair::from_lrm;

    #[test]
    fn lrm_round_trip() {
        let s = pt(2);
        let doc = StructureDocument::from_lrm(&s).named("pt(2)");
        let text = doc.to_canonical();
        let back = StructureDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.lrm().unwrap(), s);
        assert_eq!(back.to_canonical(), text);
        assert!(text.contains("\"kind\": \"lrm\""));
    }

    #[test]
    fn pair_action_and_set_round_trip() {
        let s = pt(2);
        let ext = from_lrm(&s).unwrap();
        let pd = StructureDocument::from_pair(&ext.pair);
        let back = StructureDocument::parse(&pd.to_canonical()).unwrap();
        assert_eq!(back.pair().unwrap(), ext.pair);

        let a = projection_action(&s).action;
        let ad = StructureDocument::from_action(&a);
        let back = StructureDocument::parse(&ad.to_canonical()).unwrap();
        let s2 = back.lrm().unwrap();
        assert_eq!(back.action(&s2).unwrap().act_table(), a.act_table());

        let y = EmSet::regular(&ext.pair);
        let yd = StructureDocument::from_em_set(&y);
        let back = StructureDocument::parse(&yd.to_canonical()).unwrap();
        let p2 = back.pair().unwrap();
        assert_eq!(back.em_set(&p2).unwrap().act_table(), y.act_table());

        let inv = sym_inv(2).lrm;
        assert_eq!(StructureDocument::parse(&StructureDocument::from_lrm(&inv).to_canonical()).unwrap().lrm().unwrap(), inv);
    }

    #[test]
    fn errors_name_their_locus() {
        let text = r#"{"kind": "monoid", "identity": 0, "table": [[0, 1], [1]]}"#;
        let err = StructureDocument::parse(text).unwrap().monoid().unwrap_err();
        assert!(err.to_string().contains("row 1"), "{err}");

        let bad_json = "{\"kind\": \"monoid\",\n \"table\": [[0]] \"identity\": 0}";
        match StructureDocument::parse(bad_json) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }

        let s = pt(2);
        let ext = from_lrm(&s).unwrap();
        let mut pd = PairDoc::of(&ext.pair);
        pd.congruences.pop();
        let doc = StructureDocument::new(Body::MatchedPair(pd));
        let err = doc.pair().unwrap_err();
        assert!(matches!(err, Error::Structure(StructureError::Length { .. })), "{err}");
    }
}
