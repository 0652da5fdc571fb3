use graphspark::constructions::{self, FortVectorAssignment};
use graphspark::forts::{self, SearchMethod};
use graphspark::graph::{encode_graph6, minimum_vertex_cut, vertex_connectivity, Graph};
use graphspark::linalg::{self, io, GenericNullityOptions, RationalMatrix};
use graphspark::verify::{run_verify, CorpusSpec, Suite, VerifyOptions, VerifyReport};
use serde_json::{json, Value};

use crate::args::{BatchCommand, ConstructCommand, MatCommand, Method};
use crate::config::Config;
use crate::input;

/// Largest order accepted by the brute-force spark search.
const BRUTE_FORCE_LIMIT: usize = 30;

pub fn spark(g: &Graph, method: Method) -> Result<Value, String> {
    let method = match method {
        Method::BranchAndBound => SearchMethod::BranchAndBound,
        Method::BruteForce if g.order() > BRUTE_FORCE_LIMIT => {
            return Err(format!("brute force is limited to {BRUTE_FORCE_LIMIT} vertices"))
        }
        Method::BruteForce => SearchMethod::BruteForce,
    };
    let r = forts::spark_with(g, method);
    Ok(json!({
        "graph6": encode_graph6(g),
        "n": g.order(),
        "spark": r.size,
        "fort": r.minimum_fort,
        "method": r.method.to_string(),
    }))
}

pub fn fort_sequence(g: &Graph, limit: usize, list: bool) -> Result<Value, String> {
    let seq = forts::fort_sequence_with_limit(g, limit).map_err(|e| e.to_string())?;
    let mut v = json!({
        "graph6": encode_graph6(g),
        "n": g.order(),
        "total": seq.total(),
        "sequence": seq.sequence(),
    });
    if list {
        let all = forts::enumerate_forts(g).map_err(|e| e.to_string())?;
        v["forts"] = json!(all);
    }
    Ok(v)
}

pub fn zero_forcing(g: &Graph, initial: &str) -> Result<Value, String> {
    let b = input::vertex_set(initial, g)?;
    let closure = forts::zf_closure(g, b).map_err(|e| e.to_string())?;
    Ok(json!({
        "graph6": encode_graph6(g),
        "initial": b,
        "closure": closure,
        "forcing": closure == g.vertices(),
    }))
}

pub fn failed_forcing(g: &Graph) -> Value {
    json!({
        "graph6": encode_graph6(g),
        "n": g.order(),
        "failed_zero_forcing": forts::failed_zero_forcing_number(g),
        "zero_blocking": forts::zero_blocking_number(g),
    })
}

pub fn connectivity(g: &Graph) -> Value {
    json!({
        "graph6": encode_graph6(g),
        "n": g.order(),
        "connectivity": vertex_connectivity(g),
        "cut": minimum_vertex_cut(g),
    })
}

pub fn batch_record(cmd: BatchCommand, g: &Graph, cfg: &Config) -> Result<Value, String> {
    match cmd {
        BatchCommand::Spark => spark(g, Method::BranchAndBound),
        BatchCommand::Forts => fort_sequence(g, fort_limit(cfg), false),
        BatchCommand::Connectivity => Ok(connectivity(g)),
        BatchCommand::Zfn => Ok(failed_forcing(g)),
    }
}

pub fn fort_limit(cfg: &Config) -> usize {
    cfg.fort_limit.unwrap_or(forts::DEFAULT_EXHAUSTIVE_LIMIT)
}

fn err(e: graphspark::Error) -> String {
    e.to_string()
}

fn vector_json(x: &[linalg::Rational]) -> Value {
    io::vector_to_json(x)
}

pub fn mat(cmd: &MatCommand, cfg: &Config) -> Result<Value, String> {
    match cmd {
        MatCommand::Rank(m) => {
            let a = input::matrix_file(&m.file)?;
            Ok(json!({"rows": a.rows(), "cols": a.cols(), "rank": linalg::rank(&a), "nullity": linalg::nullity(&a)}))
        }
        MatCommand::Spark(m) => {
            let a = input::matrix_file(&m.file)?;
            let c = linalg::matrix_spark(&a).map_err(err)?;
            Ok(json!({"spark": c.spark, "support": c.support, "witness": vector_json(&c.witness)}))
        }
        MatCommand::Null(m) => {
            let a = input::matrix_file(&m.file)?;
            let basis = linalg::null_basis(&a);
            let mut v = json!({
                "nullity": basis.dimension(),
                "basis": basis.vectors.iter().map(|x| vector_json(x)).collect::<Vec<_>>(),
            });
            if a.is_square() {
                v["support"] = json!(linalg::null_support(&a).map_err(err)?);
            }
            Ok(v)
        }
        MatCommand::Classify { vertex, file } => {
            let a = input::matrix_file(file)?;
            let vertices: Vec<usize> = match vertex {
                Some(v) => vec![*v],
                None => (0..a.rows()).collect(),
            };
            let classes = vertices
                .into_iter()
                .map(|v| linalg::parter_fiedler(&a, v).map_err(err))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(match vertex {
                Some(_) => json!(classes[0]),
                None => json!({"vertices": classes}),
            })
        }
        MatCommand::Generic { seed, file } => {
            let a = input::matrix_file(file)?;
            let basis = linalg::null_basis(&a);
            let basis_generic = match basis.as_matrix() {
                Some(x) => Some(linalg::is_generic(&x).map_err(err)?),
                None => None,
            };
            let defaults = GenericNullityOptions::default();
            let opts = GenericNullityOptions {
                bound: cfg.generic_bound.unwrap_or(defaults.bound),
                trials: cfg.generic_trials.unwrap_or(defaults.trials),
                seed: seed.or(cfg.seed).unwrap_or(defaults.seed),
                ..defaults
            };
            let r = linalg::generic_nullity(&a, &opts).map_err(err)?;
            let mut v = json!(r);
            v["null_basis_generic"] = json!(basis_generic);
            if let Some(w) = &r.witness {
                v["witness"] = io::matrix_to_json(w);
            }
            Ok(v)
        }
        MatCommand::FullSpark(m) => {
            let a = input::matrix_file(&m.file)?;
            Ok(json!(linalg::full_spark_check(&a).map_err(err)?))
        }
        MatCommand::Psd(m) => {
            let a = input::matrix_file(&m.file)?;
            Ok(json!({"psd": linalg::is_positive_semidefinite(&a).map_err(err)?}))
        }
    }
}

pub fn construct(cmd: &ConstructCommand) -> Result<(RationalMatrix, Value), String> {
    match cmd {
        ConstructCommand::FromFort { fort, values, graph } => {
            let g = input::single_graph(graph)?;
            let f = input::vertex_set(fort, &g)?;
            let fva = match values {
                Some(v) => FortVectorAssignment::new(f, input::vector(v)?),
                None => FortVectorAssignment::ones(f),
            }
            .map_err(err)?;
            let a = constructions::matrix_from_fort(&g, &fva).map_err(err)?;
            let x = fva.vector(g.order());
            Ok((a, json!({"null_vector": vector_json(&x)})))
        }
        ConstructCommand::Bump(m) => {
            let a = input::matrix_file(&m.file)?;
            let b = constructions::rank_bump(&a).map_err(err)?;
            let info = json!({"vertex": b.vertex, "rank": b.rank, "spark": b.spark});
            Ok((b.matrix, info))
        }
        ConstructCommand::Border { x, file } => {
            let a = input::matrix_file(file)?;
            let x = input::vector(x)?;
            Ok((constructions::border(&a, &x).map_err(err)?, json!({})))
        }
        ConstructCommand::Laplacian(g) => Ok((constructions::laplacian(&input::single_graph(&g.graph)?), json!({}))),
        ConstructCommand::Adjacency(g) => Ok((constructions::adjacency(&input::single_graph(&g.graph)?), json!({}))),
    }
}

pub fn verify(suite: &str, corpus: &str, seed: u64, case: Option<usize>) -> Result<Vec<VerifyReport>, String> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(err)?]
    };
    let corpus: CorpusSpec = corpus.parse().map_err(err)?;
    let opts = VerifyOptions { seed, only: case };
    suites
        .into_iter()
        .map(|s| run_verify(s, &corpus, &opts).map_err(err))
        .collect()
}
