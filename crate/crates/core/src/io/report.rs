//! The JSON report written by `solve`.
//!
//! Member sets are sorted id arrays and counts are decimal strings, since
//! they routinely exceed 64 bits. With timing disabled, identical inputs
//! give byte-identical reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::format::digest;
use crate::relation::{DecisionProblem, DEFAULT_DENSE_THRESHOLD};
use crate::solutions::{Analysis, ChoiceSetComparison, Concept, DEFAULT_ENUMERATION_CEILING, DEFAULT_LIMIT};
use crate::witness::{verify_theorem1_forward, WitnessReport};

pub(crate) mod biguint_string {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// One thing `solve` can be asked to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveItem {
    Concept(Concept),
    WStableCount,
    Condensation,
    Witness,
    ChoiceSets,
}

impl SolveItem {
    pub fn all() -> Vec<SolveItem> {
        let mut items: Vec<SolveItem> = Concept::ALL.into_iter().map(SolveItem::Concept).collect();
        items.extend([SolveItem::WStableCount, SolveItem::Condensation, SolveItem::Witness, SolveItem::ChoiceSets]);
        items
    }

    pub fn name(self) -> &'static str {
        match self {
            SolveItem::Concept(c) => c.name(),
            SolveItem::WStableCount => "w_stable_count",
            SolveItem::Condensation => "condensation",
            SolveItem::Witness => "witness",
            SolveItem::ChoiceSets => "choice_sets",
        }
    }
}

impl fmt::Display for SolveItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolveItem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // accept hyphenated spellings too
        let s = s.trim().replace('-', "_");
        SolveItem::all()
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown concept `{s}`")))
    }
}

pub fn parse_items(list: &str) -> Result<Vec<SolveItem>> {
    let mut items = Vec::new();
    for part in list.split(',').filter(|s| !s.trim().is_empty()) {
        let item: SolveItem = part.parse()?;
        if !items.contains(&item) {
            items.push(item);
        }
    }
    Ok(items)
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// `None` selects every item, skipping those that are too large.
    pub items: Option<Vec<SolveItem>>,
    pub limit: usize,
    pub dense_threshold: usize,
    pub ceiling: usize,
    pub verify: bool,
    pub timing: bool,
    pub seed: Option<u64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            items: None,
            limit: DEFAULT_LIMIT,
            dense_threshold: DEFAULT_DENSE_THRESHOLD,
            ceiling: DEFAULT_ENUMERATION_CEILING,
            verify: true,
            timing: true,
            seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemEcho {
    pub n: usize,
    pub labels: Vec<Option<String>>,
    pub edges: Vec<(usize, usize)>,
}

impl ProblemEcho {
    pub fn of(p: &DecisionProblem) -> Self {
        Self { n: p.n(), labels: p.labels().to_vec(), edges: p.edges().to_vec() }
    }

    pub fn to_problem(&self) -> Result<DecisionProblem> {
        let labels = self.labels.iter().enumerate().filter_map(|(i, l)| l.clone().map(|l| (i, l)));
        DecisionProblem::new(self.n, self.edges.iter().copied())?.with_labels(labels)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub items: Vec<String>,
    pub limit: usize,
    pub dense_threshold: usize,
    pub ceiling: usize,
    pub verify: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptResult {
    pub concept: Concept,
    pub sets: Vec<Vec<usize>>,
    #[serde(with = "biguint_string")]
    pub total: num_bigint::BigUint,
    pub truncated: bool,
    pub all_verified: bool,
    pub fast_path: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CondensationSummary {
    pub components: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
    pub maximal: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub item: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub item: String,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub digest: String,
    pub problem: ProblemEcho,
    pub config: ConfigEcho,
    pub concepts: Vec<ConceptResult>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_biguint")]
    pub w_stable_count: Option<num_bigint::BigUint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condensation: Option<CondensationSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub choice_sets: Option<ChoiceSetComparison>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Vec<Timing>>,
}

mod opt_biguint {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?.map(|t| t.parse().map_err(D::Error::custom)).transpose()
    }
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn concept(&self, concept: Concept) -> Option<&ConceptResult> {
        self.concepts.iter().find(|c| c.concept == concept)
    }
}

pub fn solve(p: &DecisionProblem, options: &SolveOptions) -> Result<ReportFile> {
    let analysis = Analysis::new(p)
        .with_dense_threshold(options.dense_threshold)
        .with_ceiling(options.ceiling)
        .with_verification(options.verify);
    let explicit = options.items.is_some();
    let items = options.items.clone().unwrap_or_else(SolveItem::all);

    let mut report = ReportFile {
        digest: digest(p),
        problem: ProblemEcho::of(p),
        config: ConfigEcho {
            items: items.iter().map(|i| i.name().to_string()).collect(),
            limit: options.limit,
            dense_threshold: options.dense_threshold,
            ceiling: options.ceiling,
            verify: options.verify,
            seed: options.seed,
        },
        concepts: Vec::new(),
        w_stable_count: None,
        condensation: None,
        witness: None,
        choice_sets: None,
        skipped: Vec::new(),
        timing: options.timing.then(Vec::new),
    };

    for item in items {
        let start = Instant::now();
        match item {
            SolveItem::Concept(concept) => match analysis.enumerate(concept, options.limit) {
                Ok(e) => report.concepts.push(ConceptResult {
                    concept,
                    all_verified: e.all_verified(),
                    sets: e.member_sets(),
                    total: e.total,
                    truncated: e.truncated,
                    fast_path: e.fast_path,
                    notes: e.notes,
                }),
                Err(err @ Error::TooLarge { .. }) if !explicit => {
                    report.skipped.push(Skipped { item: item.name().to_string(), reason: err.to_string() })
                }
                Err(err) => return Err(err),
            },
            SolveItem::WStableCount => report.w_stable_count = Some(analysis.count_w_stable()),
            SolveItem::Condensation => {
                let c = analysis.condensation();
                report.condensation = Some(CondensationSummary {
                    components: c.components().iter().map(|k| k.members.clone()).collect(),
                    edges: c.edges().to_vec(),
                    maximal: analysis.maximal_family().indices.clone(),
                });
            }
            SolveItem::Witness => report.witness = Some(verify_theorem1_forward(&analysis, options.limit)),
            SolveItem::ChoiceSets => report.choice_sets = Some(analysis.compare_choice_sets()),
        }
        if let Some(timing) = &mut report.timing {
            timing.push(Timing { item: item.name().to_string(), millis: start.elapsed().as_secs_f64() * 1e3 });
        }
    }
    Ok(report)
}
