//! JSON and CSV interchange formats.
//!
//! * graph: `{"vertices": ["x1", ..], "edges": [["x1", "x2"], ..]}`, with an
//!   optional `"roles": {"x1": ["w", 1, 1], "y1": ["v", 1]}` for
//!   clique-whiskered graphs;
//! * partition: `{"cliques": [["x1"], ["x2", "x3"]]}`;
//! * ideal: `{"variables": [..], "generators": [{"x1": 1, "x3": 1}, ..]}`,
//!   where a generator may also be written `"x1x3"`, and a bare list of such
//!   strings is accepted with variables inferred from the strings.

use crate::covers::CoverSet;
use crate::error::{Error, Result};
use crate::graph::{CliquePartition, CliqueWhiskeredGraph, Graph, Role};
use crate::linear_quotients::{LinearQuotientOrder, OrderFailure};
use crate::monomial::{Monomial, MonomialIdeal, Ring};
use crate::resolution::BettiTable;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    roles: Option<BTreeMap<String, Vec<Value>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionDoc {
    cliques: Vec<Vec<String>>,
}

/// A graph file, with or without clique-whiskered roles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphInput {
    Plain(Graph),
    Whiskered(CliqueWhiskeredGraph),
}

impl GraphInput {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphInput::Plain(g) => g,
            GraphInput::Whiskered(w) => w.graph(),
        }
    }
}

fn role_from_json(label: &str, v: &[Value]) -> Result<Role> {
    let bad = || Error::Parse(format!("role of `{label}` must be [\"w\", i, j] or [\"v\", i]"));
    let idx = |x: &Value| x.as_u64().filter(|&n| n >= 1).map(|n| n as usize).ok_or_else(bad);
    match (v.first().and_then(Value::as_str), v.len()) {
        (Some("w"), 3) => Ok(Role::W {
            clique: idx(&v[1])?,
            pos: idx(&v[2])?,
        }),
        (Some("v"), 2) => Ok(Role::V { clique: idx(&v[1])? }),
        _ => Err(bad()),
    }
}

fn role_to_json(r: Role) -> Vec<Value> {
    match r {
        Role::W { clique, pos } => vec![json!("w"), json!(clique), json!(pos)],
        Role::V { clique } => vec![json!("v"), json!(clique)],
    }
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let g = Graph::new(&doc.vertices, &doc.edges)?;
    match doc.roles {
        None => Ok(GraphInput::Plain(g)),
        Some(roles) => {
            let roles = roles
                .iter()
                .map(|(k, v)| Ok((k.clone(), role_from_json(k, v)?)))
                .collect::<Result<HashMap<_, _>>>()?;
            Ok(GraphInput::Whiskered(CliqueWhiskeredGraph::from_roles(&g, &roles)?))
        }
    }
}

pub fn graph_to_json(g: &Graph) -> Value {
    serde_json::to_value(GraphDoc {
        vertices: g.labels().to_vec(),
        edges: g.edges(),
        roles: None,
    })
    .expect("graph documents serialize")
}

pub fn whiskered_to_json(gpi: &CliqueWhiskeredGraph) -> Value {
    let g = gpi.graph();
    let roles = g
        .labels()
        .iter()
        .zip(gpi.roles())
        .map(|(l, &r)| (l.clone(), role_to_json(r)))
        .collect();
    serde_json::to_value(GraphDoc {
        vertices: g.labels().to_vec(),
        edges: g.edges(),
        roles: Some(roles),
    })
    .expect("graph documents serialize")
}

pub fn parse_partition(text: &str) -> Result<CliquePartition> {
    let doc: PartitionDoc = serde_json::from_str(text)?;
    Ok(CliquePartition { cliques: doc.cliques })
}

pub fn partition_to_json(p: &CliquePartition) -> Value {
    json!({ "cliques": p.cliques })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IdealDoc {
    Full {
        variables: Vec<String>,
        generators: Vec<GeneratorDoc>,
    },
    Short(Vec<String>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneratorDoc {
    Exponents(BTreeMap<String, u32>),
    Text(String),
}

/// Splits `x1y2zz3` into `x1`, `y2`, `zz3`: a variable is a run of letters
/// followed by a run of digits and underscores.
fn infer_variables(words: &[String]) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for w in words {
        let mut rest = w.trim();
        if rest == "1" {
            continue;
        }
        while !rest.is_empty() {
            let letters = rest.find(|c: char| !c.is_alphabetic()).unwrap_or(rest.len());
            let tail = &rest[letters..];
            let digits = tail
                .find(|c: char| !(c.is_ascii_digit() || c == '_'))
                .unwrap_or(tail.len());
            if letters == 0 {
                return Err(Error::Parse(format!("cannot split `{w}` into variables")));
            }
            let name = &rest[..letters + digits];
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
            rest = &tail[digits..];
            if let Some(after) = rest.strip_prefix('^') {
                let n = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
                rest = &after[n..];
            }
        }
    }
    names.sort_by_key(|a| natural_key(a));
    Ok(names)
}

fn natural_key(s: &str) -> (String, u64, String) {
    let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    let (head, tail) = s.split_at(split);
    let num = tail.chars().take_while(char::is_ascii_digit).collect::<String>();
    (head.to_string(), num.parse().unwrap_or(0), tail.to_string())
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    match serde_json::from_str::<IdealDoc>(text)? {
        IdealDoc::Full { variables, generators } => {
            let ring = Ring::new(variables)?;
            let gens = generators
                .into_iter()
                .map(|g| match g {
                    GeneratorDoc::Text(s) => ring.parse_monomial(&s),
                    GeneratorDoc::Exponents(map) => {
                        let mut m = ring.one();
                        for (name, e) in map {
                            let i = ring
                                .index_of(&name)
                                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                            m.exps_mut()[i] = e;
                        }
                        Ok(m)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            MonomialIdeal::new(ring, gens)
        }
        IdealDoc::Short(words) => {
            let ring = Ring::new(infer_variables(&words)?)?;
            MonomialIdeal::from_strings(ring, &words)
        }
    }
}

pub fn monomial_to_json(ring: &Ring, m: &Monomial) -> Value {
    let map: Map<String, Value> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (ring.name(i).to_string(), json!(e)))
        .collect();
    Value::Object(map)
}

pub fn ideal_to_json(i: &MonomialIdeal) -> Value {
    json!({
        "variables": i.ring().names(),
        "generators": i.generators().iter().map(|g| monomial_to_json(i.ring(), g)).collect::<Vec<_>>(),
    })
}

pub fn covers_to_json(covers: &CoverSet, ideal: &MonomialIdeal) -> Value {
    json!({ "covers": covers.labels(), "ideal": ideal_to_json(ideal) })
}

pub fn betti_to_json(t: &BettiTable) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .iter()
        .map(|e| json!({ "k": e.k, "multidegree": monomial_to_json(t.ring(), &e.multidegree), "beta": e.beta }))
        .collect();
    json!({
        "entries": entries,
        "pd": t.projective_dimension().ok(),
        "reg": t.regularity().ok(),
    })
}

/// Columns `k, degree, multidegree, beta`; the multidegree is printed as a
/// monomial.
pub fn betti_to_csv(t: &BettiTable) -> String {
    let mut out = String::from("k,degree,multidegree,beta\n");
    for e in t.entries() {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            e.k,
            e.multidegree.degree(),
            t.ring().format(&e.multidegree),
            e.beta
        );
    }
    out
}

pub fn order_to_json(o: &LinearQuotientOrder) -> Value {
    let ring = o.ideal().ring();
    json!({
        "sequence": o.sequence().iter().map(|m| ring.format(m)).collect::<Vec<_>>(),
        "sets": (0..o.sequence().len()).map(|j| o.set_names(j)).collect::<Vec<_>>(),
    })
}

pub fn failure_to_json(ring: &Ring, f: &OrderFailure) -> Value {
    json!({
        "position": f.position,
        "generator": ring.format(&f.generator),
        "witness": ring.format(&f.witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::covers::cover_ideal;
    use crate::resolution::betti_table;

    #[test]
    fn graph_round_trip() {
        let c4 = Graph::cycle(4).unwrap();
        let text = graph_to_json(&c4).to_string();
        assert_eq!(parse_graph(&text).unwrap(), GraphInput::Plain(c4));
        let g2 = CliqueWhiskeredGraph::whiskered_cycle(2).unwrap();
        let text = whiskered_to_json(&g2).to_string();
        assert_eq!(parse_graph(&text).unwrap(), GraphInput::Whiskered(g2));
        let cw = CliqueWhiskeredGraph::cm_cameron_walker(&Graph::path(2).unwrap(), &["x1"]).unwrap();
        let text = whiskered_to_json(&cw).to_string();
        assert_eq!(parse_graph(&text).unwrap(), GraphInput::Whiskered(cw));
    }

    #[test]
    fn role_errors() {
        let text = r#"{"vertices":["a","v1"],"edges":[["a","v1"]],"roles":{"a":["w",1],"v1":["v",1]}}"#;
        assert!(matches!(parse_graph(text), Err(Error::Parse(_))));
        let text = r#"{"vertices":["a","v1"],"edges":[["a","v1"]],"roles":{"a":["w",1,1]}}"#;
        assert!(parse_graph(text).is_err());
        assert!(parse_graph("{\"vertices\": [\"a\"]").is_err());
        assert!(parse_graph(r#"{"vertices":["a"],"edges":[],"colour":1}"#).is_err());
    }

    #[test]
    fn ideal_formats() {
        let full = r#"{"variables":["x1","x2","x3","x4"],"generators":[{"x1":1,"x3":1},"x2x4"]}"#;
        let i = parse_ideal(full).unwrap();
        assert_eq!(i.format_generators(), ["x1x3", "x2x4"]);
        let short = parse_ideal(r#"["x1x3","x2x4"]"#).unwrap();
        assert_eq!(short.ring().names(), ["x1", "x2", "x3", "x4"]);
        assert_eq!(short, i);
        assert_eq!(parse_ideal(&ideal_to_json(&i).to_string()).unwrap(), i);
        let powers = parse_ideal(r#"["x1^2x10","x2"]"#).unwrap();
        assert_eq!(powers.ring().names(), ["x1", "x2", "x10"]);
        assert!(parse_ideal(r#"{"variables":["a"],"generators":[{"b":1}]}"#).is_err());
    }

    #[test]
    fn betti_exports() {
        let i = parse_ideal(r#"["x1x3","x2x4"]"#).unwrap();
        let t = betti_table(&i, &Config::default()).unwrap();
        let v = betti_to_json(&t);
        assert_eq!(v["pd"], 1);
        assert_eq!(v["reg"], 3);
        assert_eq!(v["entries"][2], json!({"k":1,"multidegree":{"x1":1,"x2":1,"x3":1,"x4":1},"beta":1}));
        let csv = betti_to_csv(&t);
        assert_eq!(csv.lines().last().unwrap(), "1,4,x1x2x3x4,1");
    }

    #[test]
    fn covers_output() {
        let k2 = Graph::path(2).unwrap();
        let covers = crate::covers::minimal_vertex_covers(&k2, &Config::default()).unwrap();
        let j = cover_ideal(&k2, &Config::default()).unwrap();
        let v = covers_to_json(&covers, &j);
        assert_eq!(v["covers"], json!([["x1"], ["x2"]]));
    }
}
