//! `lrm`: check, build and convert finite restriction-monoid structures.
//!
//! Exit status: 0 when every check passes, 1 on an axiom failure (the report
//! with witnesses is still printed), 2 on malformed input or misuse.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use restriction_core::actions::{
    box_product, curry, enumerate_homs_in, exponential, small_actions, uncurry, BooleanSemantics,
};
use restriction_core::em_sets::{enumerate_em_homs, from_action, roundtrip_action_iso, roundtrip_em_iso, to_action};
use restriction_core::etale::{check_category_iso, extend_action, is_etale, partial_units};
use restriction_core::generators::{generate, DEFAULT_SIZE_CAP};
use restriction_core::matched_pair::{build_lrm, from_lrm, pair_iso, reconstruction_iso};
use restriction_core::restriction::check_boolean_lrm;
use restriction_core::search::DEFAULT_SEARCH_CAP;
use restriction_core::{
    AxiomReport, BooleanLrm, EmSet, Error, LeftRestrictionMonoid, StructureDocument,
    SupportedAction,
};

#[derive(Parser)]
#[command(name = "lrm", version, about = "Finite left restriction monoids and their actions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Cap on candidate evaluations during homomorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_CAP)]
    max_search: u64,
    /// Also run the Boolean checks, and use Boolean homomorphisms.
    #[arg(long, global = true)]
    boolean: bool,
    /// Read inputs as built-in generator names such as `pt(2)` instead of files.
    #[arg(long, global = true)]
    fixtures: bool,
    /// Interpret the input as this kind of structure.
    #[arg(long, global = true)]
    kind: Option<Kind>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    Monoid,
    Semilattice,
    BooleanAlgebra,
    Lrm,
    MatchedPair,
    Action,
    EmSet,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a structure against its axioms.
    Check { input: String },
    /// Build the monoid S[E|M] of a matched pair.
    Build { input: String },
    /// Extract [Proj(S)|Tot(S)] from a monoid.
    Extract { input: String },
    /// Turn an [E|M]-set into a supported action.
    Act {
        input: String,
        /// The monoid to act through; defaults to S[E|M].
        #[arg(long)]
        lrm: Option<String>,
    },
    /// Turn a factorizable supported action into an [E|M]-set.
    Unact { input: String },
    /// Enumerate homomorphisms between two actions or two [E|M]-sets.
    Hom { a: String, b: String },
    /// Box product of two actions.
    Product { a: String, b: String },
    /// Exponential B^A of two actions.
    Exp { a: String, b: String },
    /// Check that currying is a bijection hom(Z □ A, B) → hom(Z, B^A).
    Curry { z: String, a: String, b: String },
    /// The inverse monoid of partial units.
    Inv { input: String },
    /// Decompose every element into partial units.
    Etale { input: String },
    /// Extend an action of Inv(S) to S.
    Extend {
        input: String,
        #[arg(long)]
        lrm: String,
    },
    /// Compare the action categories of S and Inv(S) on small actions.
    Catiso {
        input: String,
        #[arg(long, default_value_t = 4)]
        max_carrier: usize,
    },
    /// Verify the round-trip isomorphism of a monoid, pair, action or [E|M]-set.
    Roundtrip { input: String },
    /// Every applicable check and some derived facts.
    Report { input: String },
    /// Print the document of a built-in structure.
    Generate { name: String },
}

enum Output {
    Doc(StructureDocument),
    Json(Value),
}

struct Outcome {
    output: Output,
    passed: bool,
}

impl Outcome {
    fn doc(d: StructureDocument) -> Self {
        Outcome { output: Output::Doc(d), passed: true }
    }

    fn json(v: Value, passed: bool) -> Self {
        Outcome { output: Output::Json(v), passed }
    }

    fn report(r: AxiomReport) -> Self {
        let passed = r.passed();
        Outcome { output: Output::Json(serde_json::to_value(&r).unwrap()), passed }
    }
}

/// Failure kinds that mean the mathematics did not hold, as opposed to bad input.
fn is_axiom_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::AxiomFailure { .. }
            | Error::Violation(_)
            | Error::NoZero
            | Error::NotCompatible { .. }
            | Error::NoJoin { .. }
            | Error::NotFactorizable { .. }
            | Error::NoWitness { .. }
            | Error::ChoiceDependence(_)
            | Error::EmptyCarrier
            | Error::NotEtale { .. }
    )
}

struct Ctx {
    fixtures: bool,
    boolean: bool,
    cap: u64,
    kind: Option<Kind>,
}

impl Ctx {
    fn load(&self, input: &str) -> Result<StructureDocument, Error> {
        if self.fixtures {
            let g = generate(input, DEFAULT_SIZE_CAP)?;
            return Ok(StructureDocument::from_generated(&g).named(input));
        }
        let text = fs::read_to_string(input)
            .map_err(|e| Error::Precondition(format!("cannot read {input}: {e}")))?;
        StructureDocument::parse(&text)
    }

    fn kind_of(&self, doc: &StructureDocument) -> Result<Kind, Error> {
        let found = match doc.kind() {
            "monoid" => Kind::Monoid,
            "semilattice" => Kind::Semilattice,
            "boolean_algebra" => Kind::BooleanAlgebra,
            "lrm" => Kind::Lrm,
            "matched_pair" => Kind::MatchedPair,
            "action" => Kind::Action,
            _ => Kind::EmSet,
        };
        Ok(self.kind.unwrap_or(found))
    }
}

fn boolean_report(s: &LeftRestrictionMonoid) -> AxiomReport {
    check_boolean_lrm(s)
}

fn check_doc(ctx: &Ctx, doc: &StructureDocument) -> Result<AxiomReport, Error> {
    Ok(match ctx.kind_of(doc)? {
        Kind::Monoid => doc.monoid()?.check(),
        Kind::Semilattice => doc.semilattice()?.check(),
        Kind::BooleanAlgebra => doc.boolean_algebra()?.check(),
        Kind::Lrm => {
            let s = doc.lrm()?;
            let mut r = s.check();
            if ctx.boolean {
                r.merge(boolean_report(&s));
            }
            r
        }
        Kind::MatchedPair => {
            let p = doc.pair()?;
            let mut r = p.check_components();
            r.structure = "matched pair".into();
            r.merge(p.check());
            if p.is_boolean() || ctx.boolean {
                r.merge(p.check_boolean());
            }
            r
        }
        Kind::Action => {
            let s = doc.lrm()?;
            let a = doc.action(&s)?;
            let mut r = a.check();
            if ctx.boolean {
                let b = BooleanLrm::new(s.clone())?;
                r.merge(a.check_boolean(&BooleanSemantics::of_lrm(&b))?);
            }
            r
        }
        Kind::EmSet => {
            let p = doc.pair()?;
            let y = doc.em_set(&p)?;
            y.check()
        }
    })
}

fn same_lrm(a: &StructureDocument, b: &StructureDocument) -> Result<LeftRestrictionMonoid, Error> {
    let s = a.lrm()?;
    if b.lrm()? != s {
        return Err(Error::Precondition("the two actions are over different monoids".into()));
    }
    Ok(s)
}

fn valid_action<'s>(doc: &StructureDocument, s: &'s LeftRestrictionMonoid) -> Result<SupportedAction<'s>, Error> {
    let a = doc.action(s)?;
    a.check().ensure_passed()?;
    Ok(a)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let ctx = Ctx { fixtures: cli.fixtures, boolean: cli.boolean, cap: cli.max_search, kind: cli.kind };
    Ok(match cli.cmd {
        Cmd::Generate { name } => {
            let g = generate(&name, DEFAULT_SIZE_CAP)?;
            Outcome::doc(StructureDocument::from_generated(&g).named(name))
        }
        Cmd::Check { input } => Outcome::report(check_doc(&ctx, &ctx.load(&input)?)?),
        Cmd::Build { input } => {
            let p = ctx.load(&input)?.pair()?;
            let built = build_lrm(&p)?;
            built.lrm.check().ensure_passed()?;
            if let Err(element) = built.lrm.is_factorizable() {
                return Err(Error::NotFactorizable { element });
            }
            Outcome::doc(StructureDocument::from_lrm(&built.lrm).with_note(format!("built from {input}")))
        }
        Cmd::Extract { input } => {
            let s = ctx.load(&input)?.lrm()?;
            let ext = from_lrm(&s)?;
            Outcome::doc(StructureDocument::from_pair(&ext.pair).with_note(format!("extracted from {input}")))
        }
        Cmd::Act { input, lrm } => {
            let doc = ctx.load(&input)?;
            let p = doc.pair()?;
            let y = doc.em_set(&p)?;
            let s = match lrm {
                Some(path) => ctx.load(&path)?.lrm()?,
                None => build_lrm(&p)?.lrm,
            };
            let ext = from_lrm(&s)?;
            let moved;
            let y = if ext.pair == p {
                &y
            } else {
                let iso = pair_iso(&p)?;
                if iso.extracted.pair != ext.pair {
                    return Err(Error::Precondition("the set's pair is not the pair of this monoid".into()));
                }
                moved = y.transport(&ext.pair, &iso.hom)?;
                &moved
            };
            let to = to_action(y, &s, &ext)?;
            Outcome::doc(StructureDocument::from_action(&to.action.action))
        }
        Cmd::Unact { input } => {
            let doc = ctx.load(&input)?;
            let s = doc.lrm()?;
            let a = valid_action(&doc, &s)?;
            let ext = from_lrm(&s)?;
            let f = from_action(&a, &ext)?;
            Outcome::doc(StructureDocument::from_em_set(&f.set))
        }
        Cmd::Hom { a, b } => {
            let (da, db) = (ctx.load(&a)?, ctx.load(&b)?);
            let homs = match (da.kind(), db.kind()) {
                ("action", "action") => {
                    let s = same_lrm(&da, &db)?;
                    let (x, y) = (valid_action(&da, &s)?, valid_action(&db, &s)?);
                    enumerate_homs_in(&x, &y, ctx.boolean, ctx.cap)?
                }
                ("em_set", "em_set") => {
                    let p = da.pair()?;
                    if db.pair()? != p {
                        return Err(Error::Precondition("the two sets are over different pairs".into()));
                    }
                    let (x, y) = (da.em_set(&p)?, db.em_set(&p)?);
                    x.check().ensure_passed()?;
                    y.check().ensure_passed()?;
                    enumerate_em_homs(&x, &y, ctx.cap)?
                }
                (ka, kb) => return Err(Error::Precondition(format!("cannot compare {ka} with {kb}"))),
            };
            Outcome::json(json!({ "count": homs.len(), "homs": homs }), true)
        }
        Cmd::Product { a, b } => {
            let (da, db) = (ctx.load(&a)?, ctx.load(&b)?);
            let s = same_lrm(&da, &db)?;
            let (x, y) = (valid_action(&da, &s)?, valid_action(&db, &s)?);
            Outcome::doc(StructureDocument::from_action(&box_product(&x, &y).action))
        }
        Cmd::Exp { a, b } => {
            let (da, db) = (ctx.load(&a)?, ctx.load(&b)?);
            let s = same_lrm(&da, &db)?;
            let (x, y) = (valid_action(&da, &s)?, valid_action(&db, &s)?);
            let e = exponential(&x, &y, ctx.boolean, ctx.cap)?;
            Outcome::doc(StructureDocument::from_action(&e.action))
        }
        Cmd::Curry { z, a, b } => {
            let (dz, da, db) = (ctx.load(&z)?, ctx.load(&a)?, ctx.load(&b)?);
            let s = same_lrm(&dz, &da)?;
            same_lrm(&da, &db)?;
            let (zx, ax, bx) = (valid_action(&dz, &s)?, valid_action(&da, &s)?, valid_action(&db, &s)?);
            let za = box_product(&zx, &ax);
            let exp = exponential(&ax, &bx, ctx.boolean, ctx.cap)?;
            let left = enumerate_homs_in(&za.action, &bx, ctx.boolean, ctx.cap)?;
            let right = enumerate_homs_in(&zx, &exp.action, ctx.boolean, ctx.cap)?;
            let mut curried = Vec::with_capacity(left.len());
            let mut inverse_ok = true;
            for g in &left {
                let h = curry(&zx, &za, &exp, g)?;
                inverse_ok &= uncurry(&za, &exp, &h) == *g;
                curried.push(h);
            }
            curried.sort();
            let bijective = inverse_ok && curried == right;
            Outcome::json(
                json!({ "hom_product": left.len(), "hom_exponential": right.len(), "bijective": bijective }),
                bijective,
            )
        }
        Cmd::Inv { input } => {
            let s = BooleanLrm::new(ctx.load(&input)?.lrm()?)?;
            let pu = partial_units(&s)?;
            let note = format!("partial units of {input}: {:?}", pu.elements());
            Outcome::doc(StructureDocument::from_lrm(pu.lrm()).with_note(note))
        }
        Cmd::Etale { input } => {
            let s = BooleanLrm::new(ctx.load(&input)?.lrm()?)?;
            let pu = partial_units(&s)?;
            let t = is_etale(&s, &pu)?;
            let etale = t.is_etale();
            Outcome::json(
                json!({
                    "etale": etale,
                    "first_failure": t.first_failure(),
                    "decompositions": t.decompositions,
                }),
                etale,
            )
        }
        Cmd::Extend { input, lrm } => {
            let s = BooleanLrm::new(ctx.load(&lrm)?.lrm()?)?;
            let pu = partial_units(&s)?;
            let doc = ctx.load(&input)?;
            if doc.lrm()? != *pu.lrm() {
                return Err(Error::Precondition("the action is not over Inv(S)".into()));
            }
            let inv = doc.action(pu.lrm())?;
            let t = is_etale(&s, &pu)?;
            let ext = extend_action(&inv, &s, &pu, &t)?;
            Outcome::doc(StructureDocument::from_action(&ext))
        }
        Cmd::Catiso { input, max_carrier } => {
            let s = BooleanLrm::new(ctx.load(&input)?.lrm()?)?;
            let pu = partial_units(&s)?;
            let t = is_etale(&s, &pu)?;
            let sem = BooleanSemantics::of_lrm(&s);
            let fixtures: Vec<(String, SupportedAction<'_>)> = small_actions(s.lrm(), max_carrier)
                .into_iter()
                .filter(|(_, a)| a.check_boolean(&sem).map_or(false, |r| r.passed()))
                .collect();
            let actions: Vec<SupportedAction<'_>> = fixtures.iter().map(|(_, a)| a.clone()).collect();
            let r = check_category_iso(&s, &pu, &t, &actions, ctx.cap)?;
            let names: Vec<&str> = fixtures.iter().map(|(n, _)| n.as_str()).collect();
            Outcome::json(
                json!({ "fixtures": names, "hom_counts": r.hom_counts, "warning": r.warning }),
                true,
            )
        }
        Cmd::Roundtrip { input } => {
            let doc = ctx.load(&input)?;
            match doc.kind() {
                "lrm" => {
                    let s = doc.lrm()?;
                    let rec = reconstruction_iso(&s)?;
                    let identical = rec.relabeled_table(&s) == rec.built.lrm.monoid().table();
                    Outcome::json(
                        json!({ "size": s.size(), "theta": rec.theta, "table_identical": identical }),
                        identical,
                    )
                }
                "matched_pair" => {
                    let p = doc.pair()?;
                    let iso = pair_iso(&p)?;
                    Outcome::json(
                        json!({ "size": iso.built.lrm.size(), "alpha": iso.hom.alpha, "beta": iso.hom.beta }),
                        true,
                    )
                }
                "action" => {
                    let s = doc.lrm()?;
                    let a = valid_action(&doc, &s)?;
                    let ext = from_lrm(&s)?;
                    let rt = roundtrip_action_iso(&a, &ext)?;
                    Outcome::json(json!({ "size": a.size(), "theta": rt.theta }), true)
                }
                _ => {
                    let p = doc.pair()?;
                    let y = doc.em_set(&p)?;
                    let iso = pair_iso(&p)?;
                    let moved: EmSet<'_> = y.transport(&iso.extracted.pair, &iso.hom)?;
                    let map = roundtrip_em_iso(&moved, &iso.built.lrm, &iso.extracted)?;
                    Outcome::json(json!({ "size": y.size(), "map": map }), true)
                }
            }
        }
        Cmd::Report { input } => {
            let doc = ctx.load(&input)?;
            let main = check_doc(&ctx, &doc)?;
            let passed = main.passed();
            let mut facts = json!({ "kind": doc.kind() });
            if passed && matches!(ctx.kind_of(&doc)?, Kind::Lrm) {
                let s = doc.lrm()?;
                let boolean = boolean_report(&s);
                facts = json!({
                    "kind": "lrm",
                    "size": s.size(),
                    "projections": s.projections().len(),
                    "totals": s.totals().len(),
                    "factorizable": s.is_factorizable().is_ok(),
                    "boolean": boolean.passed(),
                    "boolean_report": boolean,
                });
                if let Ok(b) = BooleanLrm::new(s.clone()) {
                    let pu = partial_units(&b)?;
                    facts["partial_units"] = json!(pu.size());
                    facts["etale"] = json!(is_etale(&b, &pu)?.is_etale());
                }
            }
            Outcome::json(json!({ "report": main, "facts": facts }), passed)
        }
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(outcome) => {
            let text = match &outcome.output {
                Output::Doc(d) => d.to_canonical(),
                Output::Json(v) => format!("{}\n", serde_json::to_string_pretty(v).unwrap()),
            };
            if let Err(e) = emit(&out, &text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if is_axiom_failure(&e) {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
