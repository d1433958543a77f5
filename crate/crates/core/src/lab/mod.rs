//! Executable claims about neighborhood structures, checked per instance or
//! swept exhaustively over every small relation and ideal.

mod claims;
mod fixtures;

pub use claims::{claim, registry};
pub use fixtures::{replay_fixtures, FixtureCheck, FixtureReport};

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, Ideal};
use crate::neighborhood::{ApproximationSpace, NeighborhoodKind};
use crate::relation::{enumerate_relations, FiniteRelation, RelationProperty, MAX_ENUMERATION_N};
use crate::universe::Subset;

/// Default upper bound for counterexample searches.
pub const DEFAULT_SEARCH_N: usize = 4;

/// Environment variable that raises the search bound (never above 5).
pub const MAX_N_ENV: &str = "ROUGHLAB_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// No counterexample may exist.
    Theorem,
    /// A counterexample must exist.
    Refuted,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::Theorem => "theorem",
            Expectation::Refuted => "refuted",
        })
    }
}

/// The first place an assertion fails on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: Option<NeighborhoodKind>,
    pub elements: Vec<usize>,
    pub sets: Vec<(String, Subset)>,
    pub message: String,
}

impl Violation {
    pub(crate) fn new(message: impl Into<String>) -> Self {
        Violation { kind: None, elements: Vec::new(), sets: Vec::new(), message: message.into() }
    }

    pub(crate) fn kind(mut self, kind: NeighborhoodKind) -> Self {
        self.kind = Some(kind);
        self
    }

    pub(crate) fn at(mut self, elements: &[usize]) -> Self {
        self.elements.extend_from_slice(elements);
        self
    }

    pub(crate) fn with(mut self, label: impl Into<String>, set: Subset) -> Self {
        self.sets.push((label.into(), set));
        self
    }
}

pub type Assertion = fn(&ApproximationSpace) -> Option<Violation>;

/// A registered statement: hypotheses on the relation, an executable
/// assertion over `(R, 𝒦)`, and whether it is expected to hold.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypothesis: &'static [RelationProperty],
    pub expected: Expectation,
    pub assertion: Assertion,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("hypothesis", &self.hypothesis)
            .field("expected", &self.expected)
            .finish()
    }
}

impl Claim {
    pub fn evaluate(&self, space: &ApproximationSpace) -> Option<Violation> {
        (self.assertion)(space)
    }

    pub fn missing_hypotheses(&self, relation: &FiniteRelation) -> Vec<RelationProperty> {
        self.hypothesis
            .iter()
            .copied()
            .filter(|p| !relation.has_property(*p))
            .collect()
    }
}

/// A concrete `(R, 𝒦)` on which a claim's assertion fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub relation: FiniteRelation,
    pub ideal: Ideal,
    pub violation: Violation,
}

impl Witness {
    /// One human-readable line naming the relation, the ideal and the failure.
    pub fn describe(&self) -> String {
        let u = self.relation.universe();
        let pairs: Vec<String> = self
            .relation
            .pairs()
            .map(|(s, t)| format!("({},{})", u.name(s), u.name(t)))
            .collect();
        let mut line = format!(
            "U = {}, R = {{{}}}, carrier(K) = {}: {}",
            u.format_set(u.full()),
            pairs.join(", "),
            u.format_set(self.ideal.carrier()),
            self.violation.message
        );
        if let Some(k) = self.violation.kind {
            line.push_str(&format!(" [j = {k}]"));
        }
        for (label, set) in &self.violation.sets {
            line.push_str(&format!("; {label} = {}", u.format_set(*set)));
        }
        line
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated(Witness),
    /// The relation lacks a hypothesis; the assertion was not evaluated.
    HypothesisUnmet(Vec<RelationProperty>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Violated(w) => Some(w),
            _ => None,
        }
    }
}

pub fn check_claim(claim: &Claim, relation: &FiniteRelation, ideal: &Ideal) -> Result<Verdict> {
    relation.universe().ensure_same(ideal.universe(), "relation vs ideal")?;
    let missing = claim.missing_hypotheses(relation);
    if !missing.is_empty() {
        return Ok(Verdict::HypothesisUnmet(missing));
    }
    let space = ApproximationSpace::new(relation.clone(), ideal.clone())?;
    Ok(match claim.evaluate(&space) {
        None => Verdict::Holds,
        Some(violation) => Verdict::Violated(Witness {
            relation: relation.clone(),
            ideal: ideal.clone(),
            violation,
        }),
    })
}

/// The largest `max_n` a search accepts: 4, or the value of
/// `ROUGHLAB_MAX_N` when set, capped at 5.
pub fn search_limit() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_SEARCH_N, |n| n.clamp(1, MAX_ENUMERATION_N))
}

/// Every `(R, 𝒦)` pair on `n` points satisfying the claim's hypotheses, in
/// enumeration order: relation code first, then ideal carrier.
fn instances(claim: &Claim, n: usize) -> Result<impl Iterator<Item = ApproximationSpace> + '_> {
    let first = claim.hypothesis.first().copied();
    let relations = enumerate_relations(n, first)?;
    let universe = relations.universe().clone();
    Ok(relations
        .filter(move |r| r.has_all(claim.hypothesis))
        .flat_map(move |r| {
            let ideals: Vec<Ideal> = enumerate_ideals(&universe).collect();
            ideals.into_iter().map(move |k| {
                ApproximationSpace::new(r.clone(), k).expect("shared canonical universe")
            })
        }))
}

/// First witness over `n = 1..=max_n`, or `None` when the claim survives.
pub fn search_counterexample(claim: &Claim, max_n: usize) -> Result<Option<Witness>> {
    search_counterexample_with_limit(claim, max_n, search_limit())
}

pub fn search_counterexample_with_limit(
    claim: &Claim,
    max_n: usize,
    limit: usize,
) -> Result<Option<Witness>> {
    if max_n == 0 || max_n > limit {
        return Err(Error::SizeLimit(format!(
            "search needs 1 <= max_n <= {limit}, got {max_n} (raise with {MAX_N_ENV}, at most {MAX_ENUMERATION_N})"
        )));
    }
    for n in 1..=max_n {
        for space in instances(claim, n)? {
            if let Some(violation) = claim.evaluate(&space) {
                return Ok(Some(Witness {
                    relation: space.relation().clone(),
                    ideal: space.ideal().clone(),
                    violation,
                }));
            }
        }
    }
    Ok(None)
}

/// Counts from evaluating a claim on every instance of one size.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub n: usize,
    pub relations: usize,
    pub instances: usize,
    pub violations: usize,
    pub first_witness: Option<Witness>,
}

/// Evaluates the claim on every `(R, 𝒦)` with `|U| = n`, without stopping
/// at the first failure.
pub fn exhaustive_sweep(claim: &Claim, n: usize) -> Result<SweepReport> {
    let mut report = SweepReport { n, relations: 0, instances: 0, violations: 0, first_witness: None };
    let ideals_per_relation = 1usize << n;
    for space in instances(claim, n)? {
        report.instances += 1;
        if let Some(violation) = claim.evaluate(&space) {
            report.violations += 1;
            if report.first_witness.is_none() {
                report.first_witness = Some(Witness {
                    relation: space.relation().clone(),
                    ideal: space.ideal().clone(),
                    violation,
                });
            }
        }
    }
    report.relations = report.instances / ideals_per_relation;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    fn pqst() -> Universe {
        Universe::new(["p", "q", "s", "t"]).unwrap()
    }

    fn rel(pairs: &[(&str, &str)]) -> FiniteRelation {
        FiniteRelation::from_named_pairs(pqst(), pairs.iter().copied()).unwrap()
    }

    fn k(names: &[&str]) -> Ideal {
        Ideal::from_carrier(pqst(), pqst().subset(names.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn registry_ids_are_unique() {
        let reg = registry();
        for (i, c) in reg.iter().enumerate() {
            assert!(reg[..i].iter().all(|d| d.id != c.id), "duplicate id {}", c.id);
            assert!(claim(c.id).is_some());
        }
        assert!(claim("no-such-claim").is_none());
    }

    #[test]
    fn reflexive_minimal_inclusion_holds_on_reflexive_example() {
        let r = rel(&[
            ("p", "s"), ("p", "t"), ("q", "t"), ("t", "q"),
            ("p", "p"), ("q", "q"), ("s", "s"), ("t", "t"),
        ]);
        let c = claim("reflexive-ik-minimal-within").unwrap();
        assert!(check_claim(&c, &r, &k(&["t"])).unwrap().holds());
    }

    #[test]
    fn serial_rho_inclusion_fails_at_q() {
        let r = rel(&[("p", "p"), ("s", "p"), ("t", "p"), ("q", "t"), ("t", "q"), ("t", "t")]);
        let c = claim("serial-rho-within-ik").unwrap();
        let v = check_claim(&c, &r, &k(&["t"])).unwrap();
        let w = v.witness().expect("violated");
        assert_eq!(w.violation.kind, Some(NeighborhoodKind::After));
        assert_eq!(w.violation.elements, vec![1]);
        let u = pqst();
        assert_eq!(w.violation.sets[0].1, u.subset(["q"]).unwrap());
        assert!(w.violation.sets[1].1.is_empty());
    }

    #[test]
    fn symmetric_transitive_pair() {
        let r = rel(&[("t", "t")]);
        let holds = claim("symtrans-ik-within-omega").unwrap();
        assert!(check_claim(&holds, &r, &k(&["t"])).unwrap().holds());
        let converse = claim("symtrans-omega-within-ik").unwrap();
        let v = check_claim(&converse, &r, &k(&["t"])).unwrap();
        assert_eq!(v.witness().unwrap().violation.elements, vec![3]);
    }

    #[test]
    fn unmet_hypothesis_is_its_own_status() {
        let r = rel(&[("p", "q")]);
        let c = claim("reflexive-ik-minimal-within").unwrap();
        assert_eq!(
            check_claim(&c, &r, &k(&[])).unwrap(),
            Verdict::HypothesisUnmet(vec![RelationProperty::Reflexive])
        );
    }

    #[test]
    fn mismatched_universes_are_errors() {
        let c = claim("ik-symmetric").unwrap();
        let r = FiniteRelation::empty(Universe::canonical(3).unwrap());
        assert!(matches!(check_claim(&c, &r, &k(&[])), Err(Error::UniverseMismatch(_))));
    }

    #[test]
    fn search_guards() {
        let c = claim("ik-symmetric").unwrap();
        assert!(matches!(search_counterexample_with_limit(&c, 0, 4), Err(Error::SizeLimit(_))));
        assert!(matches!(search_counterexample_with_limit(&c, 5, 4), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn small_searches() {
        let serial = claim("serial-rho-within-ik").unwrap();
        let w = search_counterexample_with_limit(&serial, 4, 4).unwrap().expect("refuted");
        assert!(w.relation.has_property(RelationProperty::Serial));
        assert_eq!(search_counterexample_with_limit(&serial, 4, 4).unwrap(), Some(w));

        let thm = claim("reflexive-ik-minimal-within").unwrap();
        assert_eq!(search_counterexample_with_limit(&thm, 3, 4).unwrap(), None);
    }

    #[test]
    fn equivalence_special_case_survives() {
        // The symmetric-transitive inclusion restricted to equivalences.
        let special = Claim {
            id: "equivalence-ik-after-within-omega",
            statement: "equivalence ⇒ 𝕀^𝒦_a(s) ⊆ ω_a(s)",
            hypothesis: &[RelationProperty::Equivalence],
            expected: Expectation::Theorem,
            assertion: |space| {
                (0..space.len()).find_map(|s| {
                    let ik = space.nbhd(crate::Family::IK, NeighborhoodKind::After, s);
                    let om = space.nbhd(crate::Family::Omega, NeighborhoodKind::After, s);
                    (!ik.is_subset(om)).then(|| Violation::new("not included").at(&[s]))
                })
            },
        };
        assert_eq!(search_counterexample_with_limit(&special, 3, 4).unwrap(), None);
        let sweep = exhaustive_sweep(&special, 3).unwrap();
        // Five equivalences on three points (Bell number), eight ideals each.
        assert_eq!(sweep.relations, 5);
        assert_eq!(sweep.instances, 40);
    }
}
