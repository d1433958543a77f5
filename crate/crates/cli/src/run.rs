use std::process::ExitCode;

use roughlab::io::{
    ideal_json_line, ingest_information_table, parse_set, parse_threshold, read_ideal, read_relation,
    relation_json_line, relation_to_json, write_relation, InformationTable,
};
use roughlab::lab::{self, check_claim, Claim, Expectation, Verdict, Witness};
use roughlab::report::{render_approx, render_topo_approx, topology_json};
use roughlab::{
    approx_report, approx_table, generate_topology, generate_topology_ideal, is_topology, topo_approx,
    AccuracyVariant, ApproximationSpace, Error, Family, FiniteRelation, Ideal, Result,
};

use crate::{Command, Space};

const ALL_SUBSETS_MAX_N: usize = 5;

struct Loaded {
    relation: FiniteRelation,
    ideal: Option<Ideal>,
}

impl Loaded {
    fn read(space: &Space) -> Result<Self> {
        let relation = read_relation(&space.relation)?;
        let ideal = match &space.ideal {
            Some(path) => Some(read_ideal(path, relation.universe())?),
            None => None,
        };
        if let Some(k) = &ideal {
            if k.is_improper() {
                eprintln!("note: the ideal is improper (every subset belongs to it)");
            }
        }
        Ok(Loaded { relation, ideal })
    }

    fn require_ideal(&self, why: &str) -> Result<&Ideal> {
        self.ideal
            .as_ref()
            .ok_or_else(|| Error::Configuration(format!("{why} needs --ideal")))
    }

    /// The ideal for operators and topologies: the given one, or `{∅}`.
    fn ideal_or_trivial(&self) -> Ideal {
        self.ideal.clone().unwrap_or_else(|| Ideal::trivial(self.relation.universe().clone()))
    }

    fn space(&self) -> Result<ApproximationSpace> {
        ApproximationSpace::new(self.relation.clone(), self.ideal_or_trivial())
    }
}

pub fn dispatch(command: Command) -> Result<ExitCode> {
    match command {
        Command::Nbhd { space, family, kind, element } => {
            let loaded = Loaded::read(&space)?;
            if family == Family::IK {
                loaded.require_ideal("the ik family")?;
            }
            let sp = loaded.space()?;
            let u = sp.universe();
            match element {
                Some(name) => {
                    let s = u.index_of(&name)?;
                    println!("{}", u.format_set(sp.nbhd(family, kind, s)));
                }
                None => {
                    for s in 0..u.len() {
                        println!("{}: {}", u.name(s), u.format_set(sp.nbhd(family, kind, s)));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Approx { space, family, kind, set, all, variant, format } => {
            let loaded = Loaded::read(&space)?;
            if family == Family::IK {
                loaded.require_ideal("the ik family")?;
            }
            let sp = loaded.space()?;
            let system = sp.system(family, kind);
            let variant = variant.unwrap_or_else(|| AccuracyVariant::default_for(family));
            let rows = if all {
                approx_table(&system, sp.ideal(), variant, ALL_SUBSETS_MAX_N)?
            } else {
                let literal = set.expect("clap requires --set without --all");
                let f = parse_set(sp.universe(), &literal)?;
                vec![approx_report(&system, sp.ideal(), f, variant)?]
            };
            print!("{}", render_approx(sp.universe(), &rows, variant, format)?);
            Ok(ExitCode::SUCCESS)
        }

        Command::Topology { space, family, kind, set, json } => {
            let loaded = Loaded::read(&space)?;
            let family = family.unwrap_or(if loaded.ideal.is_some() { Family::IK } else { Family::Omega });
            if family == Family::IK {
                loaded.require_ideal("the ik family")?;
            }
            let sp = loaded.space()?;
            let system = sp.system(family, kind);
            let topology = match &loaded.ideal {
                Some(k) => generate_topology_ideal(&system, k)?,
                None => generate_topology(&system)?,
            };
            let ok = is_topology(&topology);
            let u = sp.universe();
            if json {
                println!("{}", topology_json(&topology));
            } else {
                for m in topology.members() {
                    println!("{}", u.format_set(*m));
                }
                println!("{} sets", topology.len());
                println!("topology: {}", if ok { "yes" } else { "no" });
            }
            if let Some(literal) = set {
                let f = parse_set(u, &literal)?;
                print!("{}", render_topo_approx(u, &topo_approx(&topology, f)?));
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }

        Command::Check { space, claim } => {
            let c = find_claim(&claim)?;
            let loaded = Loaded::read(&space)?;
            let ideal = loaded.require_ideal("check")?;
            let verdict = check_claim(&c, &loaded.relation, ideal)?;
            println!("{} [{}]: {}", c.id, c.expected, c.statement);
            match &verdict {
                Verdict::Holds => println!("holds"),
                Verdict::Violated(w) => println!("violated: {}", w.describe()),
                Verdict::HypothesisUnmet(missing) => {
                    let names: Vec<&str> = missing.iter().map(|p| p.name()).collect();
                    println!("hypothesis unmet: relation is not {}", names.join(", "));
                }
            }
            let falsified = c.expected == Expectation::Theorem && verdict.witness().is_some();
            Ok(if falsified { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }

        Command::Search { claim, all, list, max_n } => {
            if list {
                for c in lab::registry() {
                    println!("{:<36} {:<8} {}", c.id, c.expected.to_string(), c.statement);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let claims: Vec<Claim> = if all {
                lab::registry().to_vec()
            } else {
                vec![find_claim(claim.as_deref().expect("clap requires --claim without --all"))?]
            };
            let mut unexpected = 0;
            for c in &claims {
                let found = lab::search_counterexample(c, max_n)?;
                match &found {
                    Some(w) => print_witness(c, w),
                    None => println!("{}: no counterexample up to n={max_n}", c.id),
                }
                let expected = match c.expected {
                    Expectation::Theorem => found.is_none(),
                    Expectation::Refuted => found.is_some(),
                };
                if !expected {
                    eprintln!("{}: expected {} but the search disagrees", c.id, c.expected);
                    unexpected += 1;
                }
            }
            Ok(if unexpected == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }

        Command::Ingest { table, threshold, output } => {
            let threshold = parse_threshold(&threshold)?;
            let table = InformationTable::read(&table)?;
            let relation = ingest_information_table(&table, threshold)?;
            match output {
                Some(path) => write_relation(path, &relation)?,
                None => println!("{}", relation_to_json(&relation)),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Examples => {
            let report = lab::replay_fixtures();
            println!("{report}");
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn find_claim(id: &str) -> Result<Claim> {
    lab::claim(id).ok_or_else(|| Error::Parse(format!("unknown claim `{id}` (see `search --list`)")))
}

fn print_witness(claim: &Claim, w: &Witness) {
    println!("{}: counterexample on {} elements", claim.id, w.relation.len());
    println!("  {}", w.describe());
    println!("  relation: {}", relation_json_line(&w.relation));
    println!("  ideal: {}", ideal_json_line(&w.ideal));
}
