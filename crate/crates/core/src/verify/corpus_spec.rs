use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{connected_graphs_up_to, random_connected_graph, random_tree, MAX_EXHAUSTIVE_ORDER};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// Where the graphs of a verification run come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSpec {
    /// Every connected graph on at most `max_n` vertices.
    Exhaustive { max_n: usize },
    /// One graph6 string per line; blank lines and `#` comments skipped.
    File { path: PathBuf },
    /// `count` random graphs on at most `max_n` vertices.
    Random { seed: u64, count: usize, max_n: usize },
}

pub const DEFAULT_RANDOM_MAX_N: usize = 7;

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Exhaustive { max_n } => write!(f, "exhaustive:{max_n}"),
            CorpusSpec::File { path } => write!(f, "file:{}", path.display()),
            CorpusSpec::Random { seed, count, max_n } => write!(f, "random:{seed}:{count}:{max_n}"),
        }
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    /// `exhaustive:N`, `file:PATH` or `random:SEED:COUNT[:MAXN]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::parse(0, format!("corpus {s:?}: {m}"));
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad("expected a number"));
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        match kind {
            "exhaustive" => Ok(CorpusSpec::Exhaustive {
                max_n: num(rest)? as usize,
            }),
            "file" if !rest.is_empty() => Ok(CorpusSpec::File { path: rest.into() }),
            "random" => {
                let parts: Vec<&str> = rest.split(':').collect();
                if !(2..=3).contains(&parts.len()) {
                    return Err(bad("expected random:SEED:COUNT[:MAXN]"));
                }
                Ok(CorpusSpec::Random {
                    seed: num(parts[0])?,
                    count: num(parts[1])? as usize,
                    max_n: parts
                        .get(2)
                        .map(|p| num(p))
                        .transpose()?
                        .map_or(DEFAULT_RANDOM_MAX_N, |v| v as usize),
                })
            }
            _ => Err(bad("unknown corpus kind")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum GraphKind {
    Connected,
    Tree,
}

/// One corpus item with its private random stream.
pub(crate) struct Case {
    pub index: usize,
    pub graph: Graph,
    pub rng: ChaCha8Rng,
}

fn stream(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for (lineno, line) in text.split_inclusive('\n').enumerate() {
        let body = line.trim();
        if !body.is_empty() && !body.starts_with('#') {
            let g = parse_graph6(body).map_err(|e| match e {
                Error::Parse { offset: o, message } => {
                    Error::parse(offset + o, format!("line {}: {message}", lineno + 1))
                }
                e => e,
            })?;
            out.push(g);
        }
        offset += line.len();
    }
    Ok(out)
}

impl CorpusSpec {
    /// Seed that drives the random streams: the corpus seed for random
    /// corpora, otherwise `seed`.
    pub fn effective_seed(&self, seed: u64) -> u64 {
        match self {
            CorpusSpec::Random { seed, .. } => *seed,
            _ => seed,
        }
    }

    pub(crate) fn cases(&self, kind: GraphKind, min_n: usize, seed: u64) -> Result<Vec<Case>> {
        let graphs = match self {
            CorpusSpec::Exhaustive { max_n } => {
                if *max_n > MAX_EXHAUSTIVE_ORDER {
                    return Err(Error::Capacity(format!(
                        "exhaustive corpora go up to {MAX_EXHAUSTIVE_ORDER} vertices"
                    )));
                }
                connected_graphs_up_to(*max_n)?
            }
            CorpusSpec::File { path } => read_graph6_lines(&std::fs::read_to_string(path)?)?,
            CorpusSpec::Random { seed, count, max_n } => {
                let lo = min_n.max(1);
                if *max_n < lo {
                    return Err(Error::Domain(format!(
                        "max order {max_n} is below the suite minimum {lo}"
                    )));
                }
                return Ok((0..*count)
                    .map(|index| {
                        let mut rng = stream(*seed, index);
                        let n = rand::Rng::random_range(&mut rng, lo..=*max_n);
                        let graph = match kind {
                            GraphKind::Connected => random_connected_graph(&mut rng, n),
                            GraphKind::Tree => random_tree(&mut rng, n),
                        }
                        .expect("order is in range");
                        Case { index, graph, rng }
                    })
                    .collect());
            }
        };
        Ok(graphs
            .into_iter()
            .enumerate()
            .map(|(index, graph)| Case {
                index,
                graph,
                rng: stream(seed, index),
            })
            .collect())
    }
}
