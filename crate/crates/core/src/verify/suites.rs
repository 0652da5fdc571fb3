use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::Rng;

use super::corpus_spec::Case;
use super::{Suite, Violation};
use crate::constructions::{border, matrix_from_fort, rank_bump, FortVectorAssignment};
use crate::corpus::{
    are_isomorphic, conference_q3_gram, high_nullity_matrix, random_gram, random_nonsingular, random_rational,
    singular_matrix, tree_matrix, MatrixSource,
};
use crate::error::Result;
use crate::forts::{
    enumerate_forts, every_subset_is_fort, failed_zero_forcing_number, is_fort, is_zero_forcing_set, spark,
    zero_blocking_number,
};
use crate::graph::{vertex_connectivity, FamilySpec, Graph, VertexSet};
use crate::linalg::{
    full_spark_check, generic_nullity, graph_of, in_column_space, is_generic_with_limit, is_positive_semidefinite,
    matrix_spark, matrix_spark_with, null_basis, null_support, nullity, parter_fiedler, rank, GenericNullityOptions,
    Rational, RationalMatrix, SubsetScreen, VertexClass, DEFAULT_GENERIC_LIMIT,
};

/// Largest order for which failed zero forcing is brute-forced.
const BRUTE_FORCE_FORCING_LIMIT: usize = 12;

#[derive(Default)]
pub(crate) struct Outcome {
    pub checks: u64,
    pub skipped: bool,
    pub violations: Vec<Violation>,
    pub stats: BTreeMap<&'static str, u64>,
}

struct Ctx<'a> {
    case: usize,
    graph: &'a Graph,
    out: Outcome,
}

impl Ctx<'_> {
    fn check(&mut self, ok: bool, matrix: Option<&RationalMatrix>, detail: impl FnOnce() -> String) {
        self.out.checks += 1;
        if !ok {
            self.out.violations.push(Violation {
                case: self.case,
                graph6: self.graph.to_string(),
                matrix: matrix.map(|m| m.to_string()),
                detail: detail(),
            });
        }
    }

    fn fail(&mut self, matrix: Option<&RationalMatrix>, detail: String) {
        self.check(false, matrix, || detail);
    }

    fn count(&mut self, key: &'static str) {
        *self.out.stats.entry(key).or_insert(0) += 1;
    }

    fn skip(&mut self) {
        self.out.skipped = true;
    }
}

/// `companion` is the rank-bump suite's case at the same corpus position,
/// used only by the connectivity suite.
pub(crate) fn run_case(suite: Suite, case: Case, companion: Option<Case>) -> Outcome {
    let Case { index, graph, mut rng } = case;
    let mut ctx = Ctx {
        case: index,
        graph: &graph,
        out: Outcome::default(),
    };
    let result = match suite {
        Suite::FortSupport => fort_support(&mut ctx, &mut rng),
        Suite::LargeSubsets => large_subsets(&mut ctx),
        Suite::SubsetMonotone => subset_monotone(&mut ctx),
        Suite::FailedForcing => failed_forcing(&mut ctx),
        Suite::FullSpark => full_spark(&mut ctx, &mut rng),
        Suite::Border => bordering(&mut ctx, &mut rng),
        Suite::RankBump => bump(&mut ctx, &mut rng),
        Suite::Connectivity => connectivity(&mut ctx, &mut rng, companion),
        Suite::PsdSpark => psd_spark(&mut ctx, &mut rng),
        Suite::Duplicates => duplicates(&mut ctx),
        Suite::CubePsd => cube_psd(&mut ctx, &mut rng),
        Suite::FiedlerSupport => fiedler_support(&mut ctx, &mut rng),
        Suite::TreeSpark => tree_spark(&mut ctx, &mut rng),
        Suite::GenericNullity => generic(&mut ctx, &mut rng),
    };
    if let Err(e) = result {
        ctx.fail(None, format!("error: {e}"));
    }
    ctx.out
}

fn support(x: &[Rational]) -> VertexSet {
    VertexSet::from_indices((0..x.len()).filter(|&i| !x[i].is_zero())).expect("order fits")
}

fn source_key(src: MatrixSource) -> &'static str {
    match src {
        MatrixSource::DiagonalFix => "source_diagonal_fix",
        MatrixSource::Fort => "source_fort",
        MatrixSource::LowRank => "source_low_rank",
        MatrixSource::Bordered => "source_bordered",
        MatrixSource::Laplacian => "source_laplacian",
    }
}

fn forts_to_construct(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.order() <= 10 {
        enumerate_forts(g)
    } else {
        Ok(vec![spark(g).minimum_fort])
    }
}

fn fort_support<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let g = ctx.graph;
    let (a, src) = singular_matrix(rng, g);
    ctx.count(source_key(src));
    let pattern = graph_of(&a)?;
    let basis = null_basis(&a);
    let mut vectors = basis.vectors.clone();
    for _ in 0..3 {
        let coeffs: Vec<i64> = (0..basis.dimension()).map(|_| rng.random_range(-9..=9)).collect();
        let v: Vec<Rational> = (0..a.cols())
            .map(|i| {
                coeffs.iter().zip(&basis.vectors).fold(Rational::zero(), |acc, (c, b)| {
                    acc + Rational::from_integer((*c).into()) * &b[i]
                })
            })
            .collect();
        if !RationalMatrix::is_zero_vector(&v) {
            vectors.push(v);
        }
    }
    vectors.push(matrix_spark(&a)?.witness);
    for v in &vectors {
        let s = support(v);
        ctx.count("null_vectors");
        ctx.check(is_fort(&pattern, s)?, Some(&a), || {
            format!("null vector support {s} is not a fort")
        });
    }
    let cert = matrix_spark(&a)?;
    let graph_spark = spark(&pattern).size;
    ctx.check(cert.spark >= graph_spark, Some(&a), || {
        format!("matrix spark {} below graph spark {graph_spark}", cert.spark)
    });

    for f in forts_to_construct(g)? {
        for fva in [
            FortVectorAssignment::ones(f)?,
            FortVectorAssignment::new(f, (0..f.len()).map(|_| random_rational(rng)).collect())?,
        ] {
            ctx.count("forts_constructed");
            match matrix_from_fort(g, &fva) {
                Ok(m) => {
                    let ok = RationalMatrix::is_zero_vector(&m.mul_vec(&fva.vector(g.order()))?) && graph_of(&m)? == *g;
                    ctx.check(ok, Some(&m), || format!("construction from fort {f} is wrong"));
                }
                Err(e) => ctx.fail(None, format!("fort {f}: {e}")),
            }
        }
    }
    Ok(())
}

fn large_subsets(ctx: &mut Ctx) -> Result<()> {
    let g = ctx.graph;
    let (n, delta) = (g.order(), g.min_degree());
    if delta == 0 {
        ctx.skip();
        return Ok(());
    }
    for m in 1..=n {
        let all = every_subset_is_fort(g, n - m + 1);
        ctx.check(all == (m <= delta), None, || {
            format!("m = {m}, min degree {delta}: every {}-subset fort = {all}", n - m + 1)
        });
    }
    Ok(())
}

fn subset_monotone(ctx: &mut Ctx) -> Result<()> {
    let g = ctx.graph;
    let flags: Vec<bool> = (1..=g.order()).map(|k| every_subset_is_fort(g, k)).collect();
    for k in 1..g.order() {
        ctx.check(!flags[k - 1] || flags[k], None, || {
            format!("every {k}-subset is a fort but not every {}-subset", k + 1)
        });
    }
    if let Some(k) = flags.iter().position(|&f| f) {
        ctx.out.stats.insert("threshold_sum", (k + 1) as u64);
    }
    Ok(())
}

fn failed_forcing(ctx: &mut Ctx) -> Result<()> {
    let g = ctx.graph;
    let n = g.order();
    let s = spark(g).size;
    ctx.check(failed_zero_forcing_number(g) == n - s, None, || {
        "failed forcing number".into()
    });
    ctx.check(zero_blocking_number(g) == s, None, || "zero blocking number".into());
    if n > BRUTE_FORCE_FORCING_LIMIT {
        return Ok(());
    }
    let mut largest_failed = 0;
    for bits in 0u64..1 << n {
        let b = VertexSet::from_bits(bits);
        if b.len() > largest_failed && !is_zero_forcing_set(g, b)? {
            largest_failed = b.len();
        }
    }
    ctx.check(largest_failed == n - s, None, || {
        format!("largest failed set has {largest_failed} vertices, spark is {s}")
    });
    Ok(())
}

fn full_spark<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let (a, src) = singular_matrix(rng, ctx.graph);
    ctx.count(source_key(src));
    let r = full_spark_check(&a)?;
    ctx.count(if r.full_spark { "full_spark" } else { "not_full_spark" });
    ctx.check(!r.nonsingular, Some(&a), || {
        "generator returned a nonsingular matrix".into()
    });
    ctx.check(r.conditions_agree(), Some(&a), || {
        format!(
            "principal {} / null minors {} / spark {}",
            r.principal_minors_nonsingular, r.null_minors_nonsingular, r.spark_condition
        )
    });
    ctx.check(r.spark <= r.rank + 1, Some(&a), || "spark exceeds rank + 1".into());
    Ok(())
}

fn bordering<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let n = ctx.graph.order();
    let a = if rng.random_bool(0.5) {
        ctx.count("nonsingular_core");
        random_nonsingular(rng, n)
    } else {
        singular_matrix(rng, ctx.graph).0
    };
    let mut x: Vec<Rational> = (0..n)
        .map(|_| {
            if rng.random_bool(0.4) {
                Rational::zero()
            } else {
                random_rational(rng)
            }
        })
        .collect();
    if RationalMatrix::is_zero_vector(&x) {
        x[rng.random_range(0..n)] = Rational::one();
    }
    let b = border(&a, &x)?;
    let mut y = vec![-Rational::one()];
    y.extend(x.iter().cloned());
    let k = support(&x).len();
    let sb = matrix_spark(&b)?.spark;
    ctx.check(rank(&b) == rank(&a), Some(&b), || "rank changed".into());
    ctx.check(RationalMatrix::is_zero_vector(&b.mul_vec(&y)?), Some(&b), || {
        "(-1, x) is not a null vector".into()
    });
    ctx.check(sb <= k + 1, Some(&b), || {
        format!("spark {sb} exceeds |supp x| + 1 = {}", k + 1)
    });
    if rank(&a) == n {
        ctx.check(sb == k + 1, Some(&b), || format!("spark {sb}, expected {}", k + 1));
    }
    Ok(())
}

/// Applies [`rank_bump`] until the nullity is one, checking each step
/// independently. Returns every matrix along the way.
fn bump_chain(ctx: &mut Ctx, a: RationalMatrix) -> Result<Vec<RationalMatrix>> {
    let s = matrix_spark_with(&a, SubsetScreen::Exhaustive)?.spark;
    let pattern = graph_of(&a)?;
    let mut chain = vec![a];
    while nullity(chain.last().expect("nonempty")) >= 2 {
        let a = chain.last().expect("nonempty");
        let k = rank(a);
        let r = match rank_bump(a) {
            Ok(r) => r,
            Err(e) => {
                ctx.fail(Some(a), format!("rank_bump: {e}"));
                break;
            }
        };
        ctx.count("bumps");
        let b = r.matrix;
        ctx.check(rank(&b) == k + 1, Some(a), || {
            format!("rank after bump at {} is not {}", r.vertex, k + 1)
        });
        let sb = matrix_spark_with(&b, SubsetScreen::Exhaustive)?.spark;
        ctx.check(sb == s, Some(a), || format!("spark {sb} after bump, expected {s}"));
        ctx.check(graph_of(&b)? == pattern, Some(a), || "pattern changed".into());
        chain.push(b);
    }
    Ok(chain)
}

fn bump<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let n = ctx.graph.order();
    if n < 3 {
        ctx.skip();
        return Ok(());
    }
    let (a, src) = high_nullity_matrix(rng, n);
    ctx.count(source_key(src));
    bump_chain(ctx, a)?;
    Ok(())
}

fn connectivity(ctx: &mut Ctx, rng: &mut rand_chacha::ChaCha8Rng, companion: Option<Case>) -> Result<()> {
    let g = ctx.graph;
    // the same draws the fort-support and full-spark suites make
    let mut matrices = vec![singular_matrix(rng, g).0];
    for f in forts_to_construct(g)? {
        matrices.push(matrix_from_fort(g, &FortVectorAssignment::ones(f)?)?);
    }
    // and the rank-bump suite's matrix with all its bumps
    if let Some(mut c) = companion {
        let m = c.graph.order();
        if m >= 3 {
            let (a, _) = high_nullity_matrix(&mut c.rng, m);
            matrices.extend(bump_chain(ctx, a)?);
        }
    }
    for a in &matrices {
        let n = a.rows();
        let k = rank(a);
        if matrix_spark(a)?.spark != k + 1 {
            continue;
        }
        if k == 0 {
            // the zero matrix: spark 1 on an edgeless pattern
            ctx.count("rank_zero");
            continue;
        }
        ctx.count("full_spark");
        let kappa = vertex_connectivity(&graph_of(a)?);
        ctx.check(kappa + k >= n, Some(a), || {
            format!("rank {k} full spark but connectivity {kappa}")
        });
    }
    Ok(())
}

fn psd_spark<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let n = ctx.graph.order();
    let a = if n == 8 && rng.random_bool(0.5) {
        ctx.count("cube_instances");
        conference_q3_gram(rng)
    } else {
        let r = rng.random_range(1..=n);
        random_gram(rng, n, r)
    };
    ctx.check(is_positive_semidefinite(&a)?, Some(&a), || {
        "Gram matrix is not semidefinite".into()
    });
    let g = graph_of(&a)?;
    let (k, kappa, delta) = (rank(&a), vertex_connectivity(&g), g.min_degree());
    if k + kappa >= n {
        ctx.count("rank_at_least_threshold");
        return Ok(());
    }
    ctx.count("rank_below_threshold");
    let s = matrix_spark(&a)?.spark;
    ctx.check(s + delta < n, Some(&a), || {
        format!(
            "rank {k} < n - kappa = {} but spark {s} > n - delta - 1 = {}",
            n - kappa,
            n as i64 - delta as i64 - 1
        )
    });
    Ok(())
}

fn duplicates(ctx: &mut Ctx) -> Result<()> {
    let g = ctx.graph;
    let r = spark(g);
    let dup = g.duplicate_vertices();
    ctx.count(if r.size == 2 { "spark_two" } else { "spark_other" });
    ctx.check((r.size == 2) == dup.is_some(), None, || {
        format!("spark {} but duplicates {dup:?}", r.size)
    });
    if let Some((u, v)) = dup {
        let pair = VertexSet::from_indices([u, v])?;
        ctx.check(is_fort(g, pair)?, None, || {
            format!("duplicate pair {pair} is not a fort")
        });
    }
    Ok(())
}

fn cube_psd<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let q3 = FamilySpec::Hypercube3.generate()?;
    let a = conference_q3_gram(rng);
    ctx.check(is_positive_semidefinite(&a)?, Some(&a), || "not semidefinite".into());
    ctx.check(rank(&a) == 4, Some(&a), || "rank is not 4".into());
    ctx.check(are_isomorphic(&graph_of(&a)?, &q3), Some(&a), || {
        "pattern is not the cube".into()
    });
    let s = matrix_spark(&a)?.spark;
    ctx.check(s == 4, Some(&a), || format!("spark {s}"));
    Ok(())
}

fn fiedler_support<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let (a, src) = singular_matrix(rng, ctx.graph);
    ctx.count(source_key(src));
    let n = a.rows();
    let ns = null_support(&a)?;
    for v in 0..n {
        let c = parter_fiedler(&a, v)?;
        ctx.count(match c.class {
            VertexClass::Parter => "parter",
            VertexClass::FiedlerNotParter => "fiedler_not_parter",
            VertexClass::Neither => "neither",
        });
        ctx.check(c.is_fiedler() != ns.contains(v), Some(&a), || {
            format!("vertex {v}: {:?} but null support {ns}", c.class)
        });
        let mut e = vec![Rational::zero(); n];
        e[v] = Rational::one();
        ctx.check(in_column_space(&a, &e) != ns.contains(v), Some(&a), || {
            format!("e_{v} column-space membership disagrees with null support {ns}")
        });
    }
    // recombined basis gives the same support
    let basis = null_basis(&a);
    let mut recombined = VertexSet::EMPTY;
    for _ in 0..basis.dimension() {
        let coeffs: Vec<i64> = (0..basis.dimension()).map(|_| rng.random_range(-100..=100)).collect();
        let v: Vec<Rational> = (0..n)
            .map(|i| {
                coeffs.iter().zip(&basis.vectors).fold(Rational::zero(), |acc, (c, b)| {
                    acc + Rational::from_integer((*c).into()) * &b[i]
                })
            })
            .collect();
        recombined = recombined | support(&v);
    }
    ctx.check(recombined == ns, Some(&a), || {
        format!("recombined support {recombined} vs {ns}")
    });
    Ok(())
}

fn tree_spark<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    let t = ctx.graph;
    if !t.is_tree() {
        ctx.skip();
        return Ok(());
    }
    let (a, src) = tree_matrix(rng, t);
    ctx.count(source_key(src));
    let n = a.rows();
    let k = rank(&a);
    let full = matrix_spark(&a)?.spark == k + 1;
    let full_support = null_support(&a)? == t.vertices();
    let mut no_parter = true;
    for v in 0..n {
        no_parter &= parter_fiedler(&a, v)?.class != VertexClass::Parter;
    }
    ctx.count(if full { "full_spark" } else { "not_full_spark" });
    ctx.check(k < n, Some(&a), || "generator returned a nonsingular matrix".into());
    ctx.check(full == full_support && full_support == no_parter, Some(&a), || {
        format!("full spark {full}, full null support {full_support}, no Parter vertex {no_parter}")
    });
    if full_support {
        ctx.check(nullity(&a) == 1, Some(&a), || {
            "full null support with nullity above one".into()
        });
    }
    Ok(())
}

fn generic<R: Rng>(ctx: &mut Ctx, rng: &mut R) -> Result<()> {
    // the matrix the full-spark suite draws for this case
    let (a, _) = singular_matrix(rng, ctx.graph);
    let n = a.rows();
    let k = rank(&a);
    if matrix_spark(&a)?.spark != k + 1 {
        ctx.count("not_full_spark");
        return Ok(());
    }
    ctx.count("full_spark");
    let d = n - k;
    if d >= 2 {
        ctx.count("multi_dimensional");
    }
    let limit = DEFAULT_GENERIC_LIMIT.max(n);
    // every maximal minor of a basis is nonsingular
    let basis = null_basis(&a).as_matrix().expect("singular");
    let cols: Vec<usize> = (0..d).collect();
    let maximal_ok = (0..n)
        .combinations(d)
        .all(|rows| rank(&basis.submatrix(&rows, &cols).expect("in range")) == d);
    ctx.check(maximal_ok, Some(&a), || "a maximal null-basis minor is singular".into());

    let opts = GenericNullityOptions {
        seed: ctx.case as u64,
        limit,
        ..GenericNullityOptions::default()
    };
    let report = generic_nullity(&a, &opts)?;
    ctx.check(report.lower_bound >= d, Some(&a), || {
        format!(
            "generic nullity lower bound {} below n - rank = {d}",
            report.lower_bound
        )
    });
    if let Some(x) = &report.witness {
        ctx.check(is_generic_with_limit(x, limit)?, Some(&a), || {
            "witness is not generic".into()
        });
        let ax = a.mul(x)?;
        ctx.check(ax.entries().iter().all(Zero::is_zero), Some(&a), || {
            "witness is not in the null space".into()
        });
    }
    Ok(())
}
