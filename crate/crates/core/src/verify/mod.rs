//! Verification suites: each checks one structural fact about forts, spark
//! and matrices over every item of a graph corpus and records violations.

mod corpus_spec;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use corpus_spec::{read_graph6_lines, CorpusSpec, DEFAULT_RANDOM_MAX_N};

use crate::error::{Error, Result};
use corpus_spec::GraphKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Supports of null vectors are forts, and every fort is the support of
    /// a null vector of some matrix with the pattern.
    FortSupport,
    /// Every `(n - m + 1)`-subset is a fort exactly when `m <= min degree`.
    LargeSubsets,
    /// If every `k`-subset is a fort then so is every `(k + 1)`-subset.
    SubsetMonotone,
    /// Failed zero forcing number is `n - spark` and zero blocking number is
    /// the spark, against a brute-force search.
    FailedForcing,
    /// Full spark, nonsingular `k x k` principal minors and nonsingular
    /// maximal null-basis minors coincide.
    FullSpark,
    /// Bordering keeps the rank and adds a null vector.
    Border,
    /// Raising one diagonal entry lifts the rank by one and keeps the spark.
    RankBump,
    /// Full-spark matrices of rank `k` have an `(n - k)`-connected pattern.
    Connectivity,
    /// Semidefinite matrices of rank below `n - kappa` have spark at most
    /// `n - min degree - 1`.
    PsdSpark,
    /// Spark two exactly when there are duplicate vertices.
    Duplicates,
    /// Rank-4 semidefinite matrices on the 3-cube have spark 4.
    CubePsd,
    /// Fiedler vertices are exactly those outside the null-space support.
    FiedlerSupport,
    /// On trees: full spark, full null support and no Parter vertex coincide.
    TreeSpark,
    /// Null spaces of singular full-spark matrices admit a generic basis.
    GenericNullity,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::FortSupport,
        Suite::LargeSubsets,
        Suite::SubsetMonotone,
        Suite::FailedForcing,
        Suite::FullSpark,
        Suite::Border,
        Suite::RankBump,
        Suite::Connectivity,
        Suite::PsdSpark,
        Suite::Duplicates,
        Suite::CubePsd,
        Suite::FiedlerSupport,
        Suite::TreeSpark,
        Suite::GenericNullity,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::FortSupport => "fort-support",
            Suite::LargeSubsets => "large-subsets",
            Suite::SubsetMonotone => "subset-monotone",
            Suite::FailedForcing => "failed-forcing",
            Suite::FullSpark => "full-spark",
            Suite::Border => "border",
            Suite::RankBump => "rank-bump",
            Suite::Connectivity => "connectivity",
            Suite::PsdSpark => "psd-spark",
            Suite::Duplicates => "duplicates",
            Suite::CubePsd => "cube-psd",
            Suite::FiedlerSupport => "fiedler-support",
            Suite::TreeSpark => "tree-spark",
            Suite::GenericNullity => "generic-nullity",
        }
    }

    fn kind(self) -> GraphKind {
        match self {
            Suite::TreeSpark => GraphKind::Tree,
            _ => GraphKind::Connected,
        }
    }

    fn min_order(self) -> usize {
        match self {
            Suite::RankBump => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// A failed check, with enough context to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position in the corpus; with the corpus and seed this regenerates
    /// the case.
    pub case: usize,
    pub graph6: String,
    /// Offending matrix in the text format, when one is involved.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub corpus: String,
    pub seed: u64,
    pub cases: usize,
    /// Individual assertions evaluated.
    pub checks: u64,
    /// Cases outside the suite's hypotheses.
    pub skipped: usize,
    pub violations: Vec<Violation>,
    pub stats: BTreeMap<String, u64>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Seed for the per-case random streams of non-random corpora.
    pub seed: u64,
    /// Run only this corpus position (for replaying a violation).
    pub only: Option<usize>,
}

/// Runs `suite` over `corpus`. Cases are checked in parallel; the report is
/// identical for identical inputs.
pub fn run_verify(suite: Suite, corpus: &CorpusSpec, opts: &VerifyOptions) -> Result<VerifyReport> {
    let start = Instant::now();
    let seed = corpus.effective_seed(opts.seed);
    let mut cases = corpus.cases(suite.kind(), suite.min_order(), seed)?;
    // the connectivity suite also replays the rank-bump suite's draws
    let mut companions: Vec<Option<corpus_spec::Case>> = if suite == Suite::Connectivity {
        corpus
            .cases(suite.kind(), Suite::RankBump.min_order(), seed)?
            .into_iter()
            .map(Some)
            .collect()
    } else {
        cases.iter().map(|_| None).collect()
    };
    if let Some(i) = opts.only {
        cases.retain(|c| c.index == i);
        companions.retain(|c| c.as_ref().is_none_or(|c| c.index == i));
        companions.truncate(cases.len());
    }
    let outcomes: Vec<suites::Outcome> = cases
        .into_par_iter()
        .zip(companions)
        .map(|(case, companion)| suites::run_case(suite, case, companion))
        .collect();

    let mut report = VerifyReport {
        suite,
        corpus: corpus.to_string(),
        seed,
        cases: outcomes.len(),
        checks: 0,
        skipped: 0,
        violations: Vec::new(),
        stats: BTreeMap::new(),
        elapsed_ms: 0,
    };
    for o in outcomes {
        report.checks += o.checks;
        report.skipped += usize::from(o.skipped);
        report.violations.extend(o.violations);
        for (k, v) in o.stats {
            *report.stats.entry(k.to_string()).or_insert(0) += v;
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}
