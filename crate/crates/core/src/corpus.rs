//! Seeded instance families for the theorem suites.

use crate::config::Config;
use crate::covers::cover_ideal;
use crate::error::Result;
use crate::graph::{CliquePartition, CliqueWhiskeredGraph, Graph};
use crate::resolution::lcm_lattice;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Largest base graph drawn by [`random_instance`].
pub const MAX_BASE_VERTICES: usize = 5;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub seed: Option<u64>,
    pub gpi: CliqueWhiskeredGraph,
}

impl Instance {
    fn named(name: impl Into<String>, gpi: CliqueWhiskeredGraph) -> Instance {
        Instance {
            name: name.into(),
            seed: None,
            gpi,
        }
    }
}

const LABELS: [&str; MAX_BASE_VERTICES] = ["a", "b", "c", "d", "e"];

/// A random base graph on 1..=5 vertices (edge probability 1/2) with a
/// random clique partition, whiskered.
pub fn random_instance(seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=MAX_BASE_VERTICES);
    let labels = &LABELS[..n];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((labels[i], labels[j]));
            }
        }
    }
    let g = Graph::new(labels, &edges)?;
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(&mut rng);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for v in vertices {
        let fits: Vec<usize> = (0..cliques.len())
            .filter(|&c| cliques[c].iter().all(|&u| g.has_edge(u, v)))
            .collect();
        if fits.is_empty() || rng.gen_bool(0.5) {
            cliques.push(vec![v]);
        } else {
            cliques[fits[rng.gen_range(0..fits.len())]].push(v);
        }
    }
    let partition = CliquePartition::new(
        &cliques
            .iter()
            .map(|c| c.iter().map(|&i| labels[i]).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    Ok(Instance {
        name: format!("random-{seed}"),
        seed: Some(seed),
        gpi: CliqueWhiskeredGraph::clique_whisker(&g, &partition)?,
    })
}

/// `count` random instances whose cover ideal is small enough for the Betti
/// oracle, drawn from seeds `seed, seed + 1, ...`.
pub fn seeded_corpus(seed: u64, count: usize, cfg: &Config) -> Result<Vec<Instance>> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        let inst = random_instance(s)?;
        s = s.wrapping_add(1);
        let j = cover_ideal(inst.gpi.graph(), cfg)?;
        if j.len() <= cfg.caps.max_generators && lcm_lattice(&j, &cfg.caps).is_ok() {
            out.push(inst);
        }
    }
    Ok(out)
}

fn whiskered(g: &Graph) -> Result<CliqueWhiskeredGraph> {
    CliqueWhiskeredGraph::clique_whisker(g, &CliquePartition::singletons(g))
}

fn with_partition(g: &Graph, cliques: &[Vec<&str>]) -> Result<CliqueWhiskeredGraph> {
    CliqueWhiskeredGraph::clique_whisker(g, &CliquePartition::new(cliques))
}

fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Graph> {
    Graph::new(vertices, edges)
}

/// Cohen–Macaulay chordal instances: whiskered paths and trees, and chordal
/// bases with mixed clique partitions.
pub fn chordal_instances() -> Result<Vec<Instance>> {
    let k3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])?;
    let p4 = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])?;
    let diamond = graph(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")],
    )?;
    let star = graph(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d")])?;
    let spider = graph(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("b", "d"), ("d", "e")],
    )?;
    let k4 = Graph::complete(4)?;
    Ok(vec![
        Instance::named("whiskered-P1", whiskered(&Graph::path(1)?)?),
        Instance::named("whiskered-P2", whiskered(&Graph::path(2)?)?),
        Instance::named("whiskered-P3", whiskered(&Graph::path(3)?)?),
        Instance::named("whiskered-P4", whiskered(&Graph::path(4)?)?),
        Instance::named("whiskered-star", whiskered(&star)?),
        Instance::named("whiskered-spider", whiskered(&spider)?),
        Instance::named("K3-one-clique", with_partition(&k3, &[vec!["a", "b", "c"]])?),
        Instance::named("K3-edge-point", with_partition(&k3, &[vec!["a", "b"], vec!["c"]])?),
        Instance::named("K3-whiskered", whiskered(&k3)?),
        Instance::named("P4-two-edges", with_partition(&p4, &[vec!["a", "b"], vec!["c", "d"]])?),
        Instance::named("P4-mixed", with_partition(&p4, &[vec!["a"], vec!["b", "c"], vec!["d"]])?),
        Instance::named("diamond-triangle", with_partition(&diamond, &[vec!["a", "b", "c"], vec!["d"]])?),
        Instance::named("diamond-middle", with_partition(&diamond, &[vec!["b", "c"], vec!["a"], vec!["d"]])?),
        Instance::named(
            "K4-two-edges",
            with_partition(&k4, &[vec!["x1", "x2"], vec!["x3", "x4"]])?,
        ),
    ])
}

/// Cohen–Macaulay Cameron–Walker instances, starting with the 5-vertex one
/// on a single edge.
pub fn cameron_walker_instances() -> Result<Vec<Instance>> {
    let edge = graph(&["a", "b"], &[("a", "b")])?;
    let cherry = graph(&["a", "b", "c"], &[("a", "b"), ("a", "c")])?;
    let p4 = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])?;
    let c4 = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])?;
    let claw = graph(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d")])?;
    let cw = CliqueWhiskeredGraph::cm_cameron_walker;
    Ok(vec![
        Instance::named("cw-edge", cw(&edge, &["a"])?),
        Instance::named("cw-cherry-left-centre", cw(&cherry, &["a"])?),
        Instance::named("cw-cherry-right-centre", cw(&cherry, &["b", "c"])?),
        Instance::named("cw-P4", cw(&p4, &["a", "c"])?),
        Instance::named("cw-C4", cw(&c4, &["a", "c"])?),
        Instance::named("cw-claw", cw(&claw, &["a"])?),
    ])
}

/// Clique coronas over `K_2`, `P_3` and `C_4` with every `t_i = 2`.
pub fn clique_corona_instances() -> Result<Vec<Instance>> {
    Ok(vec![
        Instance::named("corona-K2", CliqueWhiskeredGraph::clique_corona(&Graph::path(2)?, &[2, 2])?),
        Instance::named("corona-P3", CliqueWhiskeredGraph::clique_corona(&Graph::path(3)?, &[2, 2, 2])?),
        Instance::named(
            "corona-C4",
            CliqueWhiskeredGraph::clique_corona(&Graph::cycle(4)?, &[2, 2, 2, 2])?,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_instances_are_reproducible() {
        for seed in 0..20 {
            let a = random_instance(seed).unwrap();
            let b = random_instance(seed).unwrap();
            assert_eq!(a.gpi, b.gpi);
            assert!(a.gpi.base().len() <= MAX_BASE_VERTICES);
            assert!(!a.gpi.base().is_empty());
        }
    }

    #[test]
    fn corpus_respects_caps() {
        let cfg = Config::default();
        let corpus = seeded_corpus(DEFAULT_SEED, 12, &cfg).unwrap();
        assert_eq!(corpus.len(), 12);
        for inst in &corpus {
            assert!(cover_ideal(inst.gpi.graph(), &cfg).unwrap().len() <= cfg.caps.max_generators);
        }
    }

    #[test]
    fn families_have_expected_shapes() {
        let chordal = chordal_instances().unwrap();
        assert!(chordal.len() >= 10);
        assert!(chordal.iter().all(|i| i.gpi.base().is_chordal()));
        let cw = cameron_walker_instances().unwrap();
        assert_eq!(cw[0].gpi.graph().len(), 5);
        assert!(cw.len() >= 6);
        assert_eq!(clique_corona_instances().unwrap().len(), 3);
    }
}
