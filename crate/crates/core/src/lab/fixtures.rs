//! Stated values of the worked examples, recomputed from their relations.

use std::fmt;

use crate::ideal::Ideal;
use crate::neighborhood::{ApproximationSpace, Family, NeighborhoodKind};
use crate::relation::FiniteRelation;
use crate::topology::{generate_topology_ideal, is_topology, SetFamily};
use crate::universe::{Subset, Universe};

use super::{check_claim, claim, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub block: &'static str,
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FixtureCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn blocks(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for c in &self.checks {
            if !out.contains(&c.block) {
                out.push(c.block);
            }
        }
        out
    }

    pub fn block(&self, name: &str) -> impl Iterator<Item = &FixtureCheck> + '_ {
        let name = name.to_string();
        self.checks.iter().filter(move |c| c.block == name)
    }
}

impl fmt::Display for FixtureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            let (pass, total) = self
                .block(block)
                .fold((0, 0), |(p, t), c| (p + usize::from(c.pass), t + 1));
            writeln!(f, "[{}] {block}: {pass}/{total}", if pass == total { "PASS" } else { "FAIL" })?;
            for c in self.block(block).filter(|c| !c.pass) {
                writeln!(f, "    {}: expected {}, got {}", c.label, c.expected, c.actual)?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// `(family, kind, element, stated members)`
type Stated = (Family, &'static str, &'static str, &'static [&'static str]);

struct Block {
    name: &'static str,
    universe: &'static [&'static str],
    pairs: &'static [(&'static str, &'static str)],
    carrier: &'static [&'static str],
    stated: &'static [Stated],
}

use Family::{Omega as W, Rho as P, I, IK};

const PQST: &[&str] = &["p", "q", "s", "t"];
const ALL4: &[&str] = PQST;

const REFLEXIVE: Block = Block {
    name: "reflexive",
    universe: PQST,
    pairs: &[
        ("p", "s"), ("p", "t"), ("q", "t"), ("t", "q"),
        ("p", "p"), ("q", "q"), ("s", "s"), ("t", "t"),
    ],
    carrier: &["t"],
    stated: &[
        (W, "a", "t", &["q", "t"]),
        (W, "b", "t", &["p", "q", "t"]),
        (W, "i", "t", &["q", "t"]),
        (W, "u", "t", &["p", "q", "t"]),
        (W, "<a>", "t", &["t"]),
        (W, "<b>", "t", &["q", "t"]),
        (W, "<i>", "t", &["t"]),
        (W, "<u>", "t", &["q", "t"]),
        (P, "a", "t", &["q", "t"]),
        (P, "b", "t", &["t"]),
        (P, "i", "t", &["t"]),
        (P, "u", "t", &["q", "t"]),
        (P, "<a>", "t", &["t"]),
        (P, "<b>", "t", &["q", "t"]),
        (P, "<i>", "t", &["t"]),
        (P, "<u>", "t", &["q", "t"]),
        (IK, "a", "t", &["q", "t"]),
        (IK, "b", "t", ALL4),
        (IK, "i", "t", &["q", "t"]),
        (IK, "u", "t", ALL4),
        (IK, "<a>", "t", &[]),
        (IK, "<b>", "t", &["q", "t"]),
        (IK, "<i>", "t", &[]),
        (IK, "<u>", "t", &["q", "t"]),
    ],
};

const SERIAL: Block = Block {
    name: "serial",
    universe: PQST,
    pairs: &[("p", "p"), ("s", "p"), ("t", "p"), ("q", "t"), ("t", "q"), ("t", "t")],
    carrier: &["t"],
    stated: &[
        (W, "a", "p", &["p"]),
        (W, "a", "q", &["t"]),
        (W, "a", "s", &["p"]),
        (W, "a", "t", &["p", "q", "t"]),
        (P, "a", "p", &["p", "s"]),
        (P, "a", "q", &["q"]),
        (P, "a", "s", &["p", "s"]),
        (P, "a", "t", &["t"]),
        (I, "a", "p", &["p", "s", "t"]),
        (I, "a", "q", &["q", "t"]),
        (I, "a", "s", &["p", "s", "t"]),
        (I, "a", "t", ALL4),
        (IK, "a", "p", &["p", "s", "t"]),
        (IK, "a", "q", &[]),
        (IK, "a", "s", &["p", "s", "t"]),
        (IK, "a", "t", &["p", "s", "t"]),
    ],
};

const TRANSITIVE: Block = Block {
    name: "transitive",
    universe: PQST,
    pairs: &[("p", "s"), ("p", "t"), ("p", "q"), ("t", "q"), ("t", "t")],
    carrier: &["t"],
    stated: &[
        (W, "b", "p", &[]),
        (W, "b", "q", &["p", "t"]),
        (W, "b", "s", &["p"]),
        (W, "b", "t", &["p", "t"]),
        (W, "<b>", "p", &["p"]),
        (W, "<b>", "q", &[]),
        (W, "<b>", "s", &[]),
        (W, "<b>", "t", &["p", "t"]),
        (P, "b", "p", &["p"]),
        (P, "b", "q", &["q", "t"]),
        (P, "b", "s", &["s"]),
        (P, "b", "t", &["q", "t"]),
        (P, "<b>", "p", &["p"]),
        (P, "<b>", "q", &["q", "s"]),
        (P, "<b>", "s", &["q", "s"]),
        (P, "<b>", "t", &["t"]),
        (IK, "b", "p", &[]),
        (IK, "b", "q", &["q", "s", "t"]),
        (IK, "b", "s", &["q", "s", "t"]),
        (IK, "b", "t", &["q", "s", "t"]),
        (IK, "<b>", "p", &["p", "t"]),
        (IK, "<b>", "q", &[]),
        (IK, "<b>", "s", &[]),
        (IK, "<b>", "t", &["p", "t"]),
    ],
};

const PREORDER: Block = Block {
    name: "preorder",
    universe: &["p", "q", "s"],
    pairs: &[("p", "p"), ("q", "q"), ("s", "s"), ("p", "q"), ("p", "s"), ("q", "s")],
    carrier: &["s"],
    stated: &[
        (W, "a", "p", &["p", "q", "s"]),
        (W, "a", "q", &["q", "s"]),
        (W, "a", "s", &["s"]),
        (P, "a", "p", &["p"]),
        (P, "a", "q", &["q"]),
        (P, "a", "s", &["s"]),
        (IK, "a", "p", &["p", "q"]),
        (IK, "a", "q", &["p", "q"]),
        (IK, "a", "s", &[]),
    ],
};

const SYMMETRIC_TRANSITIVE: Block = Block {
    name: "symmetric-transitive",
    universe: PQST,
    pairs: &[("t", "t")],
    carrier: &["t"],
    stated: &[(W, "a", "t", &["t"]), (IK, "a", "t", &[])],
};

const REFLEXIVE_TOPOLOGIES: Block = Block {
    name: "reflexive-topologies",
    universe: PQST,
    pairs: &[
        ("p", "p"), ("p", "s"), ("p", "t"), ("q", "t"),
        ("q", "q"), ("s", "s"), ("t", "q"), ("t", "t"),
    ],
    carrier: &["s", "t"],
    stated: &[],
};

/// The twelve open sets stated for the after-kind 𝕀^𝒦 topology.
const AFTER_TOPOLOGY: &[&[&str]] = &[
    &[], &["p"], &["q"], &["s"], &["p", "q"], &["p", "s"], &["q", "s"], &["q", "t"],
    &["p", "q", "s"], &["p", "q", "t"], &["q", "s", "t"], &["p", "q", "s", "t"],
];

struct Instance {
    space: ApproximationSpace,
}

impl Instance {
    fn build(block: &Block) -> Instance {
        let universe = Universe::new(block.universe.iter().copied()).expect("fixture universe");
        let relation = FiniteRelation::from_named_pairs(universe.clone(), block.pairs.iter().copied())
            .expect("fixture relation");
        let carrier = universe.subset(block.carrier.iter().copied()).expect("fixture carrier");
        let ideal = Ideal::from_carrier(universe, carrier).expect("fixture ideal");
        Instance { space: ApproximationSpace::new(relation, ideal).expect("fixture space") }
    }

    fn universe(&self) -> &Universe {
        self.space.universe()
    }

    fn set(&self, names: &[&str]) -> Subset {
        self.universe().subset(names.iter().copied()).expect("fixture set")
    }

    fn nbhd(&self, family: Family, kind: &str, element: &str) -> Subset {
        let kind: NeighborhoodKind = kind.parse().expect("fixture kind");
        let s = self.universe().index_of(element).expect("fixture element");
        self.space.nbhd(family, kind, s)
    }
}

fn family_symbol(family: Family) -> &'static str {
    match family {
        Family::Omega => "ω",
        Family::Rho => "ρ",
        Family::I => "𝕀",
        Family::IK => "𝕀^𝒦",
    }
}

struct Recorder<'a> {
    block: &'static str,
    checks: &'a mut Vec<FixtureCheck>,
}

impl Recorder<'_> {
    fn push(&mut self, label: String, expected: String, actual: String) {
        let pass = expected == actual;
        self.checks.push(FixtureCheck { block: self.block, label, expected, actual, pass });
    }

    fn flag(&mut self, label: impl Into<String>, actual: bool) {
        self.push(label.into(), "true".into(), actual.to_string());
    }
}

fn replay_stated(block: &Block, inst: &Instance, rec: &mut Recorder<'_>) {
    let u = inst.universe();
    for &(family, kind, element, members) in block.stated {
        let got = inst.nbhd(family, kind, element);
        rec.push(
            format!("{}_{kind}({element})", family_symbol(family)),
            u.format_set(inst.set(members)),
            u.format_set(got),
        );
    }
}

fn verdict_label(v: &Verdict) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::Violated(_) => "violated".into(),
        Verdict::HypothesisUnmet(_) => "hypothesis unmet".into(),
    }
}

fn record_verdict(rec: &mut Recorder<'_>, inst: &Instance, id: &str, expected: &str) {
    let c = claim(id).expect("registered claim");
    let v = check_claim(&c, inst.space.relation(), inst.space.ideal()).expect("fixture verdict");
    rec.push(format!("claim {id}"), expected.into(), verdict_label(&v));
}

fn not_within(inst: &Instance, lhs: Family, rhs: Family, kind: &str, element: &str) -> bool {
    !inst.nbhd(lhs, kind, element).is_subset(inst.nbhd(rhs, kind, element))
}

fn reflexive(rec: &mut Recorder<'_>, inst: &Instance) {
    for kind in ["<a>", "<i>"] {
        rec.flag(format!("ρ_{kind}(t) ⊄ 𝕀^𝒦_{kind}(t)"), not_within(inst, P, IK, kind, "t"));
        rec.flag(format!("ω_{kind}(t) ⊄ 𝕀^𝒦_{kind}(t)"), not_within(inst, W, IK, kind, "t"));
    }
    record_verdict(rec, inst, "reflexive-ik-minimal-within", "holds");
    record_verdict(rec, inst, "reflexive-rho-within-ik", "violated");
}

fn serial(rec: &mut Recorder<'_>, inst: &Instance) {
    rec.flag("ρ_a(q) ⊄ 𝕀^𝒦_a(q)", not_within(inst, P, IK, "a", "q"));
    record_verdict(rec, inst, "serial-rho-within-ik", "violated");
}

fn transitive(rec: &mut Recorder<'_>, inst: &Instance) {
    for &x in PQST {
        let differs = inst.nbhd(IK, "b", x) != inst.nbhd(IK, "<b>", x);
        rec.flag(format!("𝕀^𝒦_b({x}) ≠ 𝕀^𝒦_<b>({x})"), differs);
    }
    record_verdict(rec, inst, "transitive-ik-within-minimal", "violated");
}

fn preorder(rec: &mut Recorder<'_>, inst: &Instance) {
    for x in ["p", "q", "s"] {
        rec.flag(format!("ω_a({x}) ⊄ 𝕀^𝒦_a({x})"), not_within(inst, W, IK, "a", x));
    }
    rec.flag("ρ_a(s) ⊄ 𝕀^𝒦_a(s)", not_within(inst, P, IK, "a", "s"));
    record_verdict(rec, inst, "preorder-ik-minimal-equal", "holds");
    record_verdict(rec, inst, "preorder-rho-within-ik", "violated");
}

fn symmetric_transitive(rec: &mut Recorder<'_>, inst: &Instance) {
    rec.flag("ω_a(t) ⊄ 𝕀^𝒦_a(t)", not_within(inst, W, IK, "a", "t"));
    record_verdict(rec, inst, "symtrans-ik-within-omega", "holds");
    record_verdict(rec, inst, "symtrans-omega-within-ik", "violated");
}

fn render_family(u: &Universe, family: &SetFamily) -> String {
    let sets: Vec<String> = family.members().iter().map(|s| u.format_set(*s)).collect();
    format!("[{}]", sets.join(", "))
}

fn reflexive_topologies(rec: &mut Recorder<'_>, inst: &Instance) {
    let u = inst.universe().clone();
    let tau = |kind: &str| {
        let kind: NeighborhoodKind = kind.parse().expect("kind");
        generate_topology_ideal(&inst.space.system(IK, kind), inst.space.ideal()).expect("topology")
    };
    let minimal = tau("<a>");
    let after = tau("a");

    let power = SetFamily::power_set(u.clone());
    rec.push("τ(𝕀^𝒦_<a>)".into(), render_family(&u, &power), render_family(&u, &minimal));
    rec.push("|τ(𝕀^𝒦_<a>)|".into(), "16".into(), minimal.len().to_string());

    let stated = SetFamily::new(u.clone(), AFTER_TOPOLOGY.iter().map(|names| inst.set(names)))
        .expect("stated family");
    rec.push("τ(𝕀^𝒦_a)".into(), render_family(&u, &stated), render_family(&u, &after));
    rec.push("|τ(𝕀^𝒦_a)|".into(), "12".into(), after.len().to_string());

    rec.flag("τ(𝕀^𝒦_<a>) is a topology", is_topology(&minimal));
    rec.flag("τ(𝕀^𝒦_a) is a topology", is_topology(&after));
    rec.flag("τ(𝕀^𝒦_<a>) ⊄ τ(𝕀^𝒦_a)", !minimal.is_subfamily_of(&after));
    record_verdict(rec, inst, "reflexive-tau-within-minimal-tau", "holds");
    record_verdict(rec, inst, "reflexive-minimal-tau-within-tau", "violated");
}

/// Recomputes every stated neighborhood value and topology of the six worked
/// examples; mismatches become failing entries rather than errors.
pub fn replay_fixtures() -> FixtureReport {
    type Extra = fn(&mut Recorder<'_>, &Instance);
    let blocks: [(&Block, Extra); 6] = [
        (&REFLEXIVE, reflexive),
        (&SERIAL, serial),
        (&TRANSITIVE, transitive),
        (&PREORDER, preorder),
        (&SYMMETRIC_TRANSITIVE, symmetric_transitive),
        (&REFLEXIVE_TOPOLOGIES, reflexive_topologies),
    ];
    let mut report = FixtureReport::default();
    for (block, extra) in blocks {
        let inst = Instance::build(block);
        let mut rec = Recorder { block: block.name, checks: &mut report.checks };
        replay_stated(block, &inst, &mut rec);
        extra(&mut rec, &inst);
    }
    report
}
