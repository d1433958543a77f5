use crate::approx::upper_approx;
use crate::neighborhood::{ApproximationSpace, Family, NeighborhoodKind};
use crate::relation::RelationProperty::{self, *};
use crate::topology::{first_axiom_violation, generate_topology, generate_topology_ideal};
use crate::universe::Subset;

use super::{Claim, Expectation, Violation};

use NeighborhoodKind as K;

const ALL: &[K] = &K::ALL;
const PLAIN: &[K] = &K::PLAIN;

fn symbol(family: Family) -> &'static str {
    match family {
        Family::Omega => "ω",
        Family::Rho => "ρ",
        Family::I => "𝕀",
        Family::IK => "𝕀^𝒦",
    }
}

fn label(space: &ApproximationSpace, family: Family, kind: K, s: usize) -> String {
    format!("{}_{kind}({})", symbol(family), space.universe().name(s))
}

/// `lhs(j, s) ⊆ rhs(j, s)` for every listed kind and every element.
fn pointwise_inclusion(
    space: &ApproximationSpace,
    kinds: &[K],
    lhs: (Family, fn(K) -> K),
    rhs: (Family, fn(K) -> K),
) -> Option<Violation> {
    for &kind in kinds {
        let (lk, rk) = (lhs.1(kind), rhs.1(kind));
        for s in 0..space.len() {
            let a = space.nbhd(lhs.0, lk, s);
            let b = space.nbhd(rhs.0, rk, s);
            if !a.is_subset(b) {
                let (la, lb) = (label(space, lhs.0, lk, s), label(space, rhs.0, rk, s));
                return Some(
                    Violation::new(format!("{la} ⊄ {lb}"))
                        .kind(kind)
                        .at(&[s])
                        .with(la, a)
                        .with(lb, b),
                );
            }
        }
    }
    None
}

fn same(k: K) -> K {
    k
}

fn minimal(k: K) -> K {
    k.minimal().expect("plain kind")
}

fn ik_symmetric(space: &ApproximationSpace) -> Option<Violation> {
    for &kind in ALL {
        for s in 0..space.len() {
            let ns = space.nbhd(Family::IK, kind, s);
            for t in 0..space.len() {
                let nt = space.nbhd(Family::IK, kind, t);
                if ns.contains(t) != nt.contains(s) {
                    let u = space.universe();
                    return Some(
                        Violation::new(format!(
                            "membership of {} in 𝕀^𝒦_{kind}({}) differs from membership of {} in 𝕀^𝒦_{kind}({})",
                            u.name(t), u.name(s), u.name(s), u.name(t)
                        ))
                        .kind(kind)
                        .at(&[s, t])
                        .with(label(space, Family::IK, kind, s), ns)
                        .with(label(space, Family::IK, kind, t), nt),
                    );
                }
            }
        }
    }
    None
}

fn reflexive_ik_minimal_within(space: &ApproximationSpace) -> Option<Violation> {
    pointwise_inclusion(space, PLAIN, (Family::IK, minimal), (Family::IK, same))
}

fn preorder_ik_minimal_equal(space: &ApproximationSpace) -> Option<Violation> {
    pointwise_inclusion(space, PLAIN, (Family::IK, minimal), (Family::IK, same))
        .or_else(|| pointwise_inclusion(space, PLAIN, (Family::IK, same), (Family::IK, minimal)))
}

fn reflexive_rho_within_omega(space: &ApproximationSpace) -> Option<Violation> {
    for &kind in ALL {
        for s in 0..space.len() {
            let r = space.nbhd(Family::Rho, kind, s);
            let w = space.nbhd(Family::Omega, kind, s);
            if (r & w) != r || (r | w) != w {
                let (lr, lw) = (label(space, Family::Rho, kind, s), label(space, Family::Omega, kind, s));
                return Some(
                    Violation::new(format!("{lr} ∩ {lw} ≠ {lr} or {lr} ∪ {lw} ≠ {lw}"))
                        .kind(kind)
                        .at(&[s])
                        .with(lr, r)
                        .with(lw, w),
                );
            }
        }
    }
    None
}

fn symmetric_ik_kinds_coincide(space: &ApproximationSpace) -> Option<Violation> {
    let groups = [
        [K::Intersection, K::After, K::Before, K::Union],
        [K::MinIntersection, K::MinAfter, K::MinBefore, K::MinUnion],
    ];
    for group in groups {
        for s in 0..space.len() {
            let first = space.nbhd(Family::IK, group[0], s);
            for &kind in &group[1..] {
                let other = space.nbhd(Family::IK, kind, s);
                if other != first {
                    let (l0, l1) = (label(space, Family::IK, group[0], s), label(space, Family::IK, kind, s));
                    return Some(
                        Violation::new(format!("{l0} ≠ {l1}"))
                            .kind(kind)
                            .at(&[s])
                            .with(l0, first)
                            .with(l1, other),
                    );
                }
            }
        }
    }
    None
}

fn symtrans_omega_constant(space: &ApproximationSpace) -> Option<Violation> {
    for &kind in ALL {
        for t in 0..space.len() {
            let wt = space.nbhd(Family::Omega, kind, t);
            for s in wt.iter() {
                let ws = space.nbhd(Family::Omega, kind, s);
                if ws != wt {
                    let u = space.universe();
                    return Some(
                        Violation::new(format!(
                            "{} ∈ ω_{kind}({}) but their ω_{kind}-neighborhoods differ",
                            u.name(s),
                            u.name(t)
                        ))
                        .kind(kind)
                        .at(&[s, t])
                        .with(label(space, Family::Omega, kind, s), ws)
                        .with(label(space, Family::Omega, kind, t), wt),
                    );
                }
            }
        }
    }
    None
}

fn symtrans_ik_within_omega(space: &ApproximationSpace) -> Option<Violation> {
    pointwise_inclusion(space, ALL, (Family::IK, same), (Family::Omega, same))
}

fn symtrans_ik_nested(space: &ApproximationSpace) -> Option<Violation> {
    for &kind in ALL {
        for t in 0..space.len() {
            let it = space.nbhd(Family::IK, kind, t);
            for s in it.iter() {
                let is = space.nbhd(Family::IK, kind, s);
                if !is.is_subset(it) {
                    let u = space.universe();
                    return Some(
                        Violation::new(format!(
                            "{} ∈ 𝕀^𝒦_{kind}({}) but 𝕀^𝒦_{kind}({}) ⊄ 𝕀^𝒦_{kind}({})",
                            u.name(s),
                            u.name(t),
                            u.name(s),
                            u.name(t)
                        ))
                        .kind(kind)
                        .at(&[s, t])
                        .with(label(space, Family::IK, kind, s), is)
                        .with(label(space, Family::IK, kind, t), it),
                    );
                }
            }
        }
    }
    None
}

/// `τ(lhs_j) ⊆ τ(rhs_j)` for the ideal-relativized topologies of the 𝕀^𝒦 family.
fn tau_inclusion(space: &ApproximationSpace, lhs: fn(K) -> K, rhs: fn(K) -> K) -> Option<Violation> {
    for &kind in PLAIN {
        let (lk, rk) = (lhs(kind), rhs(kind));
        let tl = generate_topology_ideal(&space.system(Family::IK, lk), space.ideal()).ok()?;
        let tr = generate_topology_ideal(&space.system(Family::IK, rk), space.ideal()).ok()?;
        if let Some(open) = tl.first_missing_from(&tr) {
            return Some(
                Violation::new(format!("τ(𝕀^𝒦_{lk}) ⊄ τ(𝕀^𝒦_{rk})"))
                    .kind(kind)
                    .with(format!("open in τ(𝕀^𝒦_{lk}) but not in τ(𝕀^𝒦_{rk})"), open),
            );
        }
    }
    None
}

fn reflexive_tau_within_minimal_tau(space: &ApproximationSpace) -> Option<Violation> {
    tau_inclusion(space, same, minimal)
}

/// `(combined, left, right, pointwise operation)`
type Rule = (K, K, K, fn(Subset, Subset) -> Subset);

fn ik_combined_by_definition(space: &ApproximationSpace) -> Option<Violation> {
    let rules: [Rule; 4] = [
        (K::Intersection, K::After, K::Before, |a, b| a & b),
        (K::Union, K::After, K::Before, |a, b| a | b),
        (K::MinIntersection, K::MinAfter, K::MinBefore, |a, b| a & b),
        (K::MinUnion, K::MinAfter, K::MinBefore, |a, b| a | b),
    ];
    for (combined, x, y, op) in rules {
        for s in 0..space.len() {
            let got = space.nbhd(Family::IK, combined, s);
            let want = op(space.nbhd(Family::IK, x, s), space.nbhd(Family::IK, y, s));
            if got != want {
                return Some(
                    Violation::new(format!("{} differs from its constituents", label(space, Family::IK, combined, s)))
                        .kind(combined)
                        .at(&[s])
                        .with(label(space, Family::IK, combined, s), got)
                        .with("expected", want),
                );
            }
        }
    }
    None
}

fn generated_families_are_topologies(space: &ApproximationSpace) -> Option<Violation> {
    for &kind in ALL {
        let candidates = [
            ("τ(𝕀^𝒦)", generate_topology_ideal(&space.system(Family::IK, kind), space.ideal())),
            ("τ(ρ^𝒦)", generate_topology_ideal(&space.system(Family::Rho, kind), space.ideal())),
            ("⊤(ω)", generate_topology(&space.system(Family::Omega, kind))),
            ("⊤(ρ)", generate_topology(&space.system(Family::Rho, kind))),
            ("⊤(𝕀)", generate_topology(&space.system(Family::I, kind))),
        ];
        for (name, family) in candidates {
            let family = match family {
                Ok(f) => f,
                Err(e) => return Some(Violation::new(format!("{name}: {e}")).kind(kind)),
            };
            if let Some(v) = first_axiom_violation(&family) {
                return Some(Violation::new(format!("{name}_{kind} is not a topology: {v:?}")).kind(kind));
            }
        }
    }
    None
}

fn rho_omega_within_ik(space: &ApproximationSpace) -> Option<Violation> {
    for &kind in ALL {
        for s in 0..space.len() {
            let joined = space.nbhd(Family::Rho, kind, s) | space.nbhd(Family::Omega, kind, s);
            let ik = space.nbhd(Family::IK, kind, s);
            if !joined.is_subset(ik) {
                let u = space.universe();
                let lhs = format!("ρ_{kind}({0}) ∪ ω_{kind}({0})", u.name(s));
                let rhs = label(space, Family::IK, kind, s);
                return Some(
                    Violation::new(format!("{lhs} ⊄ {rhs}"))
                        .kind(kind)
                        .at(&[s])
                        .with(lhs, joined)
                        .with(rhs, ik),
                );
            }
        }
    }
    None
}

fn rho_within_ik(space: &ApproximationSpace) -> Option<Violation> {
    pointwise_inclusion(space, ALL, (Family::Rho, same), (Family::IK, same))
}

fn transitive_ik_within_minimal(space: &ApproximationSpace) -> Option<Violation> {
    pointwise_inclusion(space, PLAIN, (Family::IK, same), (Family::IK, minimal))
}

fn reflexive_minimal_tau_within_tau(space: &ApproximationSpace) -> Option<Violation> {
    tau_inclusion(space, minimal, same)
}

/// `A(x) ∩ A(y) ≠ ∅ ⇒ A(x) ∩ A(y) ∉ 𝒦` over every pair and kind.
fn meet_outside_ideal(space: &ApproximationSpace, family: Family) -> Option<Violation> {
    for &kind in ALL {
        for x in 0..space.len() {
            for y in 0..space.len() {
                let meet = space.nbhd(family, kind, x) & space.nbhd(family, kind, y);
                if !meet.is_empty() && space.ideal().admits(meet) {
                    let u = space.universe();
                    let l = format!("{0}_{kind}({1}) ∩ {0}_{kind}({2})", symbol(family), u.name(x), u.name(y));
                    return Some(
                        Violation::new(format!("{l} is nonempty but belongs to 𝒦"))
                            .kind(kind)
                            .at(&[x, y])
                            .with(l, meet),
                    );
                }
            }
        }
    }
    None
}

fn omega_meet_outside_ideal(space: &ApproximationSpace) -> Option<Violation> {
    meet_outside_ideal(space, Family::Omega)
}

fn ik_meet_outside_ideal(space: &ApproximationSpace) -> Option<Violation> {
    meet_outside_ideal(space, Family::IK)
}

fn symtrans_omega_within_ik(space: &ApproximationSpace) -> Option<Violation> {
    pointwise_inclusion(space, ALL, (Family::Omega, same), (Family::IK, same))
}

fn ik_upper_of_universe_is_universe(space: &ApproximationSpace) -> Option<Violation> {
    let u = space.universe();
    for &kind in ALL {
        let upper = upper_approx(&space.system(Family::IK, kind), space.ideal(), u.full()).ok()?;
        if !upper.is_full() {
            return Some(
                Violation::new(format!("upper approximation of U under 𝕀^𝒦_{kind} is not U"))
                    .kind(kind)
                    .with("upper(U)", upper),
            );
        }
    }
    None
}

const fn theorem(
    id: &'static str,
    statement: &'static str,
    hypothesis: &'static [RelationProperty],
    assertion: super::Assertion,
) -> Claim {
    Claim { id, statement, hypothesis, expected: Expectation::Theorem, assertion }
}

const fn refuted(
    id: &'static str,
    statement: &'static str,
    hypothesis: &'static [RelationProperty],
    assertion: super::Assertion,
) -> Claim {
    Claim { id, statement, hypothesis, expected: Expectation::Refuted, assertion }
}

const REGISTRY: &[Claim] = &[
    theorem(
        "ik-symmetric",
        "t ∈ 𝕀^𝒦_j(s) ⇔ s ∈ 𝕀^𝒦_j(t) for all j ∈ Ω",
        &[],
        ik_symmetric,
    ),
    theorem(
        "reflexive-ik-minimal-within",
        "R reflexive ⇒ 𝕀^𝒦_<j>(s) ⊆ 𝕀^𝒦_j(s) for j ∈ {a, b, i, u}",
        &[Reflexive],
        reflexive_ik_minimal_within,
    ),
    theorem(
        "preorder-ik-minimal-equal",
        "R preorder ⇒ 𝕀^𝒦_<j>(s) = 𝕀^𝒦_j(s) for j ∈ {a, b, i, u}",
        &[Preorder],
        preorder_ik_minimal_equal,
    ),
    theorem(
        "reflexive-rho-within-omega",
        "R reflexive ⇒ ρ_j(s) ∩ ω_j(s) = ρ_j(s) and ρ_j(s) ∪ ω_j(s) = ω_j(s) for all j ∈ Ω",
        &[Reflexive],
        reflexive_rho_within_omega,
    ),
    theorem(
        "symmetric-ik-kinds-coincide",
        "R symmetric ⇒ 𝕀^𝒦_i = 𝕀^𝒦_a = 𝕀^𝒦_b = 𝕀^𝒦_u and 𝕀^𝒦_<i> = 𝕀^𝒦_<a> = 𝕀^𝒦_<b> = 𝕀^𝒦_<u>",
        &[Symmetric],
        symmetric_ik_kinds_coincide,
    ),
    theorem(
        "symtrans-omega-constant",
        "R symmetric and transitive, s ∈ ω_j(t) ⇒ ω_j(s) = ω_j(t) for all j ∈ Ω",
        &[Symmetric, Transitive],
        symtrans_omega_constant,
    ),
    theorem(
        "symtrans-ik-within-omega",
        "R symmetric and transitive ⇒ 𝕀^𝒦_j(s) ⊆ ω_j(s) for all j ∈ Ω",
        &[Symmetric, Transitive],
        symtrans_ik_within_omega,
    ),
    theorem(
        "symtrans-ik-nested",
        "R symmetric and transitive, s ∈ 𝕀^𝒦_j(t) ⇒ 𝕀^𝒦_j(s) ⊆ 𝕀^𝒦_j(t) for all j ∈ Ω",
        &[Symmetric, Transitive],
        symtrans_ik_nested,
    ),
    theorem(
        "reflexive-tau-within-minimal-tau",
        "R reflexive ⇒ τ(𝕀^𝒦_j) ⊆ τ(𝕀^𝒦_<j>) for j ∈ {a, b, i, u}",
        &[Reflexive],
        reflexive_tau_within_minimal_tau,
    ),
    theorem(
        "ik-combined-kinds-by-definition",
        "𝕀^𝒦_i = 𝕀^𝒦_a ∩ 𝕀^𝒦_b, 𝕀^𝒦_u = 𝕀^𝒦_a ∪ 𝕀^𝒦_b, and likewise for <i>, <u>",
        &[],
        ik_combined_by_definition,
    ),
    theorem(
        "generated-families-are-topologies",
        "τ(𝕀^𝒦_j), τ(ρ^𝒦_j), ⊤(ω_j), ⊤(ρ_j), ⊤(𝕀_j) are topologies for all j ∈ Ω",
        &[],
        generated_families_are_topologies,
    ),
    refuted(
        "reflexive-rho-omega-within-ik",
        "R reflexive ⇒ ρ_j(s) ∪ ω_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Reflexive],
        rho_omega_within_ik,
    ),
    refuted(
        "serial-rho-within-ik",
        "R serial ⇒ ρ_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Serial],
        rho_within_ik,
    ),
    refuted(
        "transitive-ik-within-minimal",
        "R transitive ⇒ 𝕀^𝒦_j(s) ⊆ 𝕀^𝒦_<j>(s) for j ∈ {a, b, i, u}",
        &[Transitive],
        transitive_ik_within_minimal,
    ),
    refuted(
        "reflexive-minimal-tau-within-tau",
        "R reflexive ⇒ τ(𝕀^𝒦_<j>) ⊆ τ(𝕀^𝒦_j) for j ∈ {a, b, i, u}",
        &[Reflexive],
        reflexive_minimal_tau_within_tau,
    ),
    refuted(
        "omega-meet-outside-ideal",
        "ω_j(x) ∩ ω_j(y) ≠ ∅ ⇒ ω_j(x) ∩ ω_j(y) ∉ 𝒦 for all j ∈ Ω",
        &[],
        omega_meet_outside_ideal,
    ),
    refuted(
        "ik-meet-outside-ideal",
        "𝕀^𝒦_j(x) ∩ 𝕀^𝒦_j(y) ≠ ∅ ⇒ 𝕀^𝒦_j(x) ∩ 𝕀^𝒦_j(y) ∉ 𝒦 for all j ∈ Ω",
        &[],
        ik_meet_outside_ideal,
    ),
    refuted(
        "symtrans-omega-within-ik",
        "R symmetric and transitive ⇒ ω_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Symmetric, Transitive],
        symtrans_omega_within_ik,
    ),
    refuted(
        "reflexive-rho-within-ik",
        "R reflexive ⇒ ρ_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Reflexive],
        rho_within_ik,
    ),
    refuted(
        "symmetric-rho-within-ik",
        "R symmetric ⇒ ρ_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Symmetric],
        rho_within_ik,
    ),
    refuted(
        "transitive-rho-within-ik",
        "R transitive ⇒ ρ_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Transitive],
        rho_within_ik,
    ),
    refuted(
        "preorder-rho-within-ik",
        "R preorder ⇒ ρ_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Preorder],
        rho_within_ik,
    ),
    refuted(
        "similarity-rho-within-ik",
        "R reflexive and symmetric ⇒ ρ_j(s) ⊆ 𝕀^𝒦_j(s) for all j ∈ Ω",
        &[Reflexive, Symmetric],
        rho_within_ik,
    ),
    refuted(
        "ik-upper-covers-universe",
        "upper approximation of U under 𝕀^𝒦_j contains U for all j ∈ Ω",
        &[],
        ik_upper_of_universe_is_universe,
    ),
];

/// Every registered claim, theorems first.
pub fn registry() -> &'static [Claim] {
    REGISTRY
}

pub fn claim(id: &str) -> Option<Claim> {
    REGISTRY.iter().find(|c| c.id == id).copied()
}
