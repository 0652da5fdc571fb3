use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// A named graph family with its parameters.
///
/// Vertex labels are fixed so that known forts land on predictable indices:
///
/// * `Path(n)`, `Cycle(n)`, `Complete(n)`: `0..n` in order around the path/cycle.
/// * `CompleteBipartite(m, n)`: the `m`-side is `0..m`, the `n`-side `m..m+n`.
/// * `Spider(legs)`: the center is `0`, then each leg in order, walking
///   outward from the center.
/// * `Friendship(k)`: the center is `0`, triangle `i` uses `2i+1, 2i+2`.
/// * `Hypercube3`: `C4 □ P2`.
/// * `Cartesian(g, h)`: `(u, v)` is `u * |h| + v`.
///
/// Text syntax: `path:5`, `cycle:4`, `complete:6`, `kbip:2,3`,
/// `spider:4,1,1`, `friendship:3`, `hypercube3` (or `q3`),
/// `cart:(cycle:4)x(path:2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Spider(Vec<usize>),
    Friendship(usize),
    Hypercube3,
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => {
                if *n == 0 {
                    return Err(Error::Domain("path needs n >= 1".into()));
                }
                Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return Err(Error::Domain(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))
            }
            FamilySpec::Complete(n) => {
                if *n == 0 {
                    return Err(Error::Domain("complete graph needs n >= 1".into()));
                }
                Graph::from_edges(*n, (0..*n).flat_map(|i| (i + 1..*n).map(move |j| (i, j))))
            }
            FamilySpec::CompleteBipartite(m, n) => {
                if *m == 0 || *n == 0 {
                    return Err(Error::Domain("complete bipartite parts must be nonempty".into()));
                }
                Graph::from_edges(m + n, (0..*m).flat_map(|i| (*m..m + n).map(move |j| (i, j))))
            }
            FamilySpec::Spider(legs) => {
                if legs.is_empty() || legs.contains(&0) {
                    return Err(Error::Domain("spider legs must be nonempty with length >= 1".into()));
                }
                let order = 1 + legs.iter().sum::<usize>();
                let mut edges = Vec::with_capacity(order - 1);
                let mut next = 1;
                for &len in legs {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                Graph::from_edges(order, edges)
            }
            FamilySpec::Friendship(k) => {
                if *k == 0 {
                    return Err(Error::Domain("friendship graph needs k >= 1".into()));
                }
                let mut edges = Vec::new();
                for t in 0..*k {
                    let (a, b) = (2 * t + 1, 2 * t + 2);
                    edges.extend([(0, a), (0, b), (a, b)]);
                }
                Graph::from_edges(2 * k + 1, edges)
            }
            FamilySpec::Hypercube3 => FamilySpec::Cycle(4)
                .generate()?
                .cartesian(&FamilySpec::Path(2).generate()?),
            FamilySpec::Cartesian(g, h) => g.generate()?.cartesian(&h.generate()?),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "kbip:{m},{n}"),
            FamilySpec::Spider(legs) => {
                let parts: Vec<String> = legs.iter().map(|l| l.to_string()).collect();
                write!(f, "spider:{}", parts.join(","))
            }
            FamilySpec::Friendship(k) => write!(f, "friendship:{k}"),
            FamilySpec::Hypercube3 => write!(f, "hypercube3"),
            FamilySpec::Cartesian(g, h) => write!(f, "cart:({g})x({h})"),
        }
    }
}

fn parse_params(text: &str, offset: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut at = offset;
    for part in text.split(',') {
        let v = part
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(at, format!("expected a non-negative integer, found {part:?}")))?;
        out.push(v);
        at += part.len() + 1;
    }
    Ok(out)
}

fn exactly<const K: usize>(kind: &str, params: Vec<usize>) -> Result<[usize; K]> {
    params
        .try_into()
        .map_err(|p: Vec<usize>| Error::Domain(format!("{kind} takes {K} parameter(s), got {}", p.len())))
}

/// Finds the matching `)` for the `(` at `open`.
fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s[open..].char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_spec(s: &str, offset: usize) -> Result<FamilySpec> {
    let s_trim = s.trim();
    let lower = s_trim.to_ascii_lowercase();
    if lower == "hypercube3" || lower == "q3" {
        return Ok(FamilySpec::Hypercube3);
    }
    let Some((kind, rest)) = s_trim.split_once(':') else {
        return Err(Error::parse(
            offset,
            format!("expected `kind:params`, found {s_trim:?}"),
        ));
    };
    let poff = offset + kind.len() + 1;
    match kind.to_ascii_lowercase().as_str() {
        "path" => Ok(FamilySpec::Path(exactly::<1>("path", parse_params(rest, poff)?)?[0])),
        "cycle" => Ok(FamilySpec::Cycle(exactly::<1>("cycle", parse_params(rest, poff)?)?[0])),
        "complete" => Ok(FamilySpec::Complete(
            exactly::<1>("complete", parse_params(rest, poff)?)?[0],
        )),
        "kbip" => {
            let [m, n] = exactly::<2>("kbip", parse_params(rest, poff)?)?;
            Ok(FamilySpec::CompleteBipartite(m, n))
        }
        "spider" => Ok(FamilySpec::Spider(parse_params(rest, poff)?)),
        "friendship" => Ok(FamilySpec::Friendship(
            exactly::<1>("friendship", parse_params(rest, poff)?)?[0],
        )),
        "cart" => {
            let r = rest.trim_start();
            let lead = rest.len() - r.len();
            if !r.starts_with('(') {
                return Err(Error::parse(poff + lead, "expected `(` after `cart:`"));
            }
            let close = matching_paren(r, 0).ok_or_else(|| Error::parse(poff + lead, "unbalanced parenthesis"))?;
            let left = parse_spec(&r[1..close], poff + lead + 1)?;
            let tail = &r[close + 1..];
            let xpos = poff + lead + close + 1;
            let tail = tail
                .trim_start()
                .strip_prefix(['x', 'X'])
                .ok_or_else(|| Error::parse(xpos, "expected `x` between factors"))?
                .trim_start();
            if !tail.starts_with('(') {
                return Err(Error::parse(xpos, "expected `(` for the second factor"));
            }
            let close2 = matching_paren(tail, 0).ok_or_else(|| Error::parse(xpos, "unbalanced parenthesis"))?;
            if !tail[close2 + 1..].trim().is_empty() {
                return Err(Error::parse(xpos, "unexpected text after second factor"));
            }
            let right = parse_spec(&tail[1..close2], xpos + 1)?;
            Ok(FamilySpec::Cartesian(Box::new(left), Box::new(right)))
        }
        other => Err(Error::parse(offset, format!("unknown graph family {other:?}"))),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn spider_4_1_1_shape() {
        let g = gen("spider:4,1,1");
        assert_eq!(g.order(), 7);
        assert!(g.is_tree());
        assert_eq!(g.degree(0), 3);
        // leg of length 4 is 1-2-3-4, the short legs are 5 and 6
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 5), (0, 6), (1, 2), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn friendship_3_shape() {
        let g = gen("friendship:3");
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.edge_count(), 9);
        assert!((1..7).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn cartesian_c4_p2_is_q3() {
        let g = gen("cart:(cycle:4)x(path:2)");
        assert_eq!(g.order(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert_eq!(g, gen("hypercube3"));
        assert_eq!(g, gen("q3"));
    }

    #[test]
    fn cartesian_degrees_add() {
        let p3 = gen("path:3");
        let k3 = gen("complete:3");
        let g = gen("cart:(path:3)x(complete:3)");
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(g.degree(u * 3 + v), p3.degree(u) + k3.degree(v));
            }
        }
    }

    #[test]
    fn nested_cartesian_parses() {
        let g = gen("cart:(cart:(path:2)x(path:2))x(path:2)");
        assert_eq!(g.order(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn kbip_parts() {
        let g = gen("kbip:2,3");
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(2, 3));
        assert!(g.has_edge(1, 4));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "path:5",
            "cycle:4",
            "complete:6",
            "kbip:2,3",
            "spider:4,1,1",
            "friendship:3",
            "hypercube3",
            "cart:(cycle:4)x(path:2)",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            "cycle:2".parse::<FamilySpec>().unwrap().generate(),
            Err(Error::Domain(_))
        ));
        assert!("path:0".parse::<FamilySpec>().unwrap().generate().is_err());
        assert!("spider:3,0".parse::<FamilySpec>().unwrap().generate().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!("kbip:2".parse::<FamilySpec>().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        assert!("cart:(path:2)(path:2)".parse::<FamilySpec>().is_err());
        assert!("cart:(path:2x(path:2)".parse::<FamilySpec>().is_err());
    }
}
