//! File formats: relation and ideal JSON, set literals, information tables.

use std::path::Path;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::relation::FiniteRelation;
use crate::universe::{Subset, Universe};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub universe: Vec<String>,
    #[serde(default)]
    pub pairs: Vec<(String, String)>,
}

impl RelationFile {
    pub fn from_relation(relation: &FiniteRelation) -> Self {
        let u = relation.universe();
        RelationFile {
            universe: u.names().to_vec(),
            pairs: relation
                .pairs()
                .map(|(s, t)| (u.name(s).to_string(), u.name(t).to_string()))
                .collect(),
        }
    }

    pub fn to_relation(&self) -> Result<FiniteRelation> {
        let universe = Universe::new(self.universe.iter())?;
        FiniteRelation::from_named_pairs(universe, self.pairs.iter().map(|(s, t)| (s, t)))
    }
}

pub fn parse_relation_json(text: &str) -> Result<FiniteRelation> {
    serde_json::from_str::<RelationFile>(text)?.to_relation()
}

/// Pretty-printed, pairs in row-major order.
pub fn relation_to_json(relation: &FiniteRelation) -> String {
    serde_json::to_string_pretty(&RelationFile::from_relation(relation)).expect("plain data serializes")
}

/// Single-line form for logs and witness reports.
pub fn relation_json_line(relation: &FiniteRelation) -> String {
    serde_json::to_string(&RelationFile::from_relation(relation)).expect("plain data serializes")
}

pub fn read_relation(path: impl AsRef<Path>) -> Result<FiniteRelation> {
    parse_relation_json(&std::fs::read_to_string(path)?)
}

pub fn write_relation(path: impl AsRef<Path>, relation: &FiniteRelation) -> Result<()> {
    let mut text = relation_to_json(relation);
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// `{"basis": [["t"]]}` or `{"carrier": ["s","t"]}`; both may appear if
/// they agree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<String>>,
}

impl IdealFile {
    pub fn from_ideal(ideal: &Ideal) -> Self {
        IdealFile { basis: None, carrier: Some(ideal.universe().set_names(ideal.carrier())) }
    }

    pub fn to_ideal(&self, universe: &Universe) -> Result<Ideal> {
        let from_basis = match &self.basis {
            Some(basis) => {
                let members = basis.iter().map(|m| universe.subset(m.iter())).collect::<Result<Vec<_>>>()?;
                Some(Ideal::from_basis(universe.clone(), members)?)
            }
            None => None,
        };
        let from_carrier = match &self.carrier {
            Some(names) => Some(Ideal::from_carrier(universe.clone(), universe.subset(names.iter())?)?),
            None => None,
        };
        match (from_basis, from_carrier) {
            (Some(b), Some(c)) if b.carrier() != c.carrier() => Err(Error::Parse(format!(
                "ideal basis induces carrier {} but carrier {} is given",
                universe.format_set(b.carrier()),
                universe.format_set(c.carrier())
            ))),
            (Some(k), _) | (None, Some(k)) => Ok(k),
            (None, None) => Err(Error::Parse("ideal file needs `basis` or `carrier`".into())),
        }
    }
}

pub fn parse_ideal_json(text: &str, universe: &Universe) -> Result<Ideal> {
    serde_json::from_str::<IdealFile>(text)?.to_ideal(universe)
}

/// Single-line `{"carrier": [...]}`.
pub fn ideal_json_line(ideal: &Ideal) -> String {
    serde_json::to_string(&IdealFile::from_ideal(ideal)).expect("plain data serializes")
}

pub fn read_ideal(path: impl AsRef<Path>, universe: &Universe) -> Result<Ideal> {
    parse_ideal_json(&std::fs::read_to_string(path)?, universe)
}

/// `"q,t"`; `""` and `"∅"` denote the empty set. Whitespace and braces are ignored.
pub fn parse_set(universe: &Universe, literal: &str) -> Result<Subset> {
    let body = literal.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if body.is_empty() || body == "∅" {
        return Ok(universe.empty());
    }
    let names = body.split(',').map(str::trim);
    let mut set = universe.empty();
    for name in names {
        if name.is_empty() {
            return Err(Error::Parse(format!("empty element name in set literal `{literal}`")));
        }
        set.insert(universe.index_of(name)?);
    }
    Ok(set)
}

/// Rows of categorical attribute values keyed by object name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InformationTable {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub values: Vec<Vec<String>>,
}

impl InformationTable {
    pub fn new(objects: Vec<String>, attributes: Vec<String>, values: Vec<Vec<String>>) -> Result<Self> {
        if values.len() != objects.len() {
            return Err(Error::Parse(format!(
                "{} objects but {} value rows",
                objects.len(),
                values.len()
            )));
        }
        if let Some((i, row)) = values.iter().enumerate().find(|(_, r)| r.len() != attributes.len()) {
            return Err(Error::Parse(format!(
                "row `{}` has {} values, expected {}",
                objects[i],
                row.len(),
                attributes.len()
            )));
        }
        Ok(InformationTable { objects, attributes, values })
    }

    /// Header row first; the first column holds object names.
    pub fn from_csv<R: std::io::Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().flexible(true).trim(csv::Trim::All).from_reader(reader);
        let header = rdr.headers()?.clone();
        if header.is_empty() {
            return Err(Error::Parse("information table has no header".into()));
        }
        let attributes: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        let mut objects = Vec::new();
        let mut values = Vec::new();
        for record in rdr.records() {
            let record = record?;
            if record.len() != header.len() {
                let line = record.position().map_or(0, |p| p.line());
                return Err(Error::Parse(format!(
                    "ragged information table: line {line} has {} fields, header has {}",
                    record.len(),
                    header.len()
                )));
            }
            objects.push(record[0].to_string());
            values.push(record.iter().skip(1).map(str::to_string).collect());
        }
        InformationTable::new(objects, attributes, values)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        InformationTable::from_csv(std::fs::File::open(path)?)
    }

    /// Number of attributes on which objects `s` and `t` agree.
    pub fn agreement(&self, s: usize, t: usize) -> usize {
        self.values[s].iter().zip(&self.values[t]).filter(|(a, b)| a == b).count()
    }
}

/// `"2/3"`, `"0.5"` or `"1"`, exactly; must lie in `[0, 1]`.
pub fn parse_threshold(text: &str) -> Result<Ratio<u64>> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid threshold `{text}` (expected a fraction or decimal in [0, 1])"));
    let value = if let Some((n, d)) = text.split_once('/') {
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let d: u64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ratio::new(n, d)
    } else if let Some((whole, frac)) = text.split_once('.') {
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
        let frac_value: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let scale = 10u64.pow(frac.len() as u32);
        let numer = whole.checked_mul(scale).and_then(|w| w.checked_add(frac_value)).ok_or_else(bad)?;
        Ratio::new(numer, scale)
    } else {
        Ratio::from_integer(text.parse::<u64>().map_err(|_| bad())?)
    };
    if value > Ratio::from_integer(1) {
        return Err(bad());
    }
    Ok(value)
}

/// `s R t` iff the fraction of attributes on which `s` and `t` agree is at
/// least `threshold`.
pub fn ingest_information_table(table: &InformationTable, threshold: Ratio<u64>) -> Result<FiniteRelation> {
    if threshold > Ratio::from_integer(1) {
        return Err(Error::Precondition("threshold must lie in [0, 1]".into()));
    }
    if table.attributes.is_empty() {
        return Err(Error::Parse("information table has no attributes".into()));
    }
    let universe = Universe::new(table.objects.iter())?;
    let attrs = table.attributes.len() as u64;
    let n = universe.len();
    let mut relation = FiniteRelation::empty(universe);
    for s in 0..n {
        for t in 0..n {
            let agree = table.agreement(s, t) as u64;
            if agree * threshold.denom() >= threshold.numer() * attrs {
                relation.insert(s, t)?;
            }
        }
    }
    Ok(relation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::RelationProperty;

    fn pqst() -> Universe {
        Universe::new(["p", "q", "s", "t"]).unwrap()
    }

    #[test]
    fn relation_json_round_trip() {
        let text = r#"{"universe": ["p","q","s","t"], "pairs": [["p","s"],["t","q"],["p","s"]]}"#;
        let r = parse_relation_json(text).unwrap();
        assert_eq!(r.pair_count(), 2);
        let again = parse_relation_json(&relation_to_json(&r)).unwrap();
        assert_eq!(again, r);
    }

    #[test]
    fn unknown_names_rejected() {
        let text = r#"{"universe": ["p","q"], "pairs": [["p","z"]]}"#;
        assert!(matches!(parse_relation_json(text), Err(Error::UnknownElement(_))));
        assert!(matches!(parse_relation_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn ideal_files() {
        let u = pqst();
        let k = parse_ideal_json(r#"{"basis": [["s"], ["t"]]}"#, &u).unwrap();
        assert_eq!(k.carrier(), u.subset(["s", "t"]).unwrap());
        let c = parse_ideal_json(r#"{"carrier": ["t"]}"#, &u).unwrap();
        assert_eq!(c.carrier(), u.subset(["t"]).unwrap());
        assert!(parse_ideal_json(r#"{"basis": [["t"]], "carrier": ["t"]}"#, &u).is_ok());
        assert!(matches!(
            parse_ideal_json(r#"{"basis": [["t"]], "carrier": ["s","t"]}"#, &u),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_ideal_json(r#"{"basis": []}"#, &u), Err(Error::InvalidBasis(_))));
        assert!(matches!(parse_ideal_json("{}", &u), Err(Error::Parse(_))));
        assert!(parse_ideal_json(r#"{"basis": [[]]}"#, &u).unwrap().is_trivial());
    }

    #[test]
    fn set_literals() {
        let u = pqst();
        assert_eq!(parse_set(&u, "q,t").unwrap(), u.subset(["q", "t"]).unwrap());
        assert_eq!(parse_set(&u, " {q, t} ").unwrap(), u.subset(["q", "t"]).unwrap());
        assert!(parse_set(&u, "").unwrap().is_empty());
        assert!(parse_set(&u, "∅").unwrap().is_empty());
        assert!(parse_set(&u, "q,,t").is_err());
        assert!(matches!(parse_set(&u, "x"), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn thresholds() {
        assert_eq!(parse_threshold("2/3").unwrap(), Ratio::new(2, 3));
        assert_eq!(parse_threshold("0.5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_threshold("1").unwrap(), Ratio::from_integer(1));
        assert_eq!(parse_threshold("0").unwrap(), Ratio::from_integer(0));
        assert_eq!(parse_threshold(".25").unwrap(), Ratio::new(1, 4));
        for bad in ["3/2", "1.5", "-1", "x", "1/0", ""] {
            assert!(parse_threshold(bad).is_err(), "{bad}");
        }
    }

    const TOY: &str = "object,colour,size,shape\n\
                       o1,red,big,round\n\
                       o2,red,big,square\n\
                       o3,blue,big,square\n\
                       o4,blue,small,round\n";

    #[test]
    fn two_thirds_agreement_matches_hand_count() {
        let table = InformationTable::from_csv(TOY.as_bytes()).unwrap();
        let r = ingest_information_table(&table, Ratio::new(2, 3)).unwrap();
        // Agreements: o1-o2 2, o1-o3 1, o1-o4 1, o2-o3 2, o2-o4 0, o3-o4 1.
        let u = r.universe().clone();
        let mut expected: Vec<(usize, usize)> = (0..4).map(|i| (i, i)).collect();
        expected.extend([(0, 1), (1, 0), (1, 2), (2, 1)]);
        let want = FiniteRelation::from_pairs(u, expected).unwrap();
        assert_eq!(r, want);
    }

    #[test]
    fn extreme_thresholds() {
        let table = InformationTable::from_csv(TOY.as_bytes()).unwrap();
        let full = ingest_information_table(&table, Ratio::from_integer(0)).unwrap();
        assert_eq!(full.pair_count(), 16);
        let exact = ingest_information_table(&table, Ratio::from_integer(1)).unwrap();
        assert!(exact.has_property(RelationProperty::Equivalence));
        assert_eq!(exact.pair_count(), 4);
    }

    #[test]
    fn malformed_tables() {
        let ragged = "object,a,b\no1,x,y\no2,x\n";
        assert!(matches!(InformationTable::from_csv(ragged.as_bytes()), Err(Error::Parse(_))));
        let no_attrs = "object\no1\no2\n";
        let t = InformationTable::from_csv(no_attrs.as_bytes()).unwrap();
        assert!(ingest_information_table(&t, Ratio::from_integer(1)).is_err());
        let dup = "object,a\no1,x\no1,y\n";
        let t = InformationTable::from_csv(dup.as_bytes()).unwrap();
        assert!(matches!(ingest_information_table(&t, Ratio::from_integer(1)), Err(Error::DuplicateElement(_))));
    }
}
