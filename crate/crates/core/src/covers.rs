//! Minimal vertex covers and cover ideals.
//!
//! Minimal covers are the complements of maximal independent sets, which are
//! enumerated by Bron–Kerbosch with pivoting on the complement graph. A second,
//! independent path filters all vertex subsets directly; it is only available
//! up to [`BRUTE_FORCE_LIMIT`] vertices.

use crate::config::{Caps, Config};
use crate::error::{Error, Result};
use crate::graph::{CliqueWhiskeredGraph, Graph};
use crate::monomial::{Monomial, MonomialIdeal};

pub const BRUTE_FORCE_LIMIT: usize = 16;

/// All minimal vertex covers of a graph, lex-descending by `X_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSet {
    graph: Graph,
    covers: Vec<u64>,
}

impl CoverSet {
    fn from_masks(graph: &Graph, mut covers: Vec<u64>) -> CoverSet {
        let n = graph.len();
        covers.sort_by_cached_key(|&c| std::cmp::Reverse(mask_monomial(n, c)));
        covers.dedup();
        CoverSet {
            graph: graph.clone(),
            covers,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// Covers as vertex-index lists, each in vertex order.
    pub fn indices(&self) -> Vec<Vec<usize>> {
        self.covers.iter().map(|&c| mask_indices(c)).collect()
    }

    pub fn labels(&self) -> Vec<Vec<String>> {
        self.covers
            .iter()
            .map(|&c| mask_indices(c).into_iter().map(|i| self.graph.label(i).to_string()).collect())
            .collect()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.covers
            .iter()
            .map(|&c| mask_monomial(self.graph.len(), c))
            .collect()
    }

    #[cfg(test)]
    pub(crate) fn masks(&self) -> &[u64] {
        &self.covers
    }
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn mask_monomial(n: usize, mask: u64) -> Monomial {
    Monomial::from_support(n, mask_indices(mask))
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.len())
        .map(|i| g.neighbors(i).iter().fold(0u64, |m, &j| m | 1 << j))
        .collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_size(g: &Graph, caps: &Caps) -> Result<()> {
    Caps::check("vertex", caps.max_vertices.min(64), g.len())
}

/// True iff `set` meets every edge.
pub fn is_vertex_cover<S: AsRef<str>>(g: &Graph, set: &[S]) -> Result<bool> {
    let mut inside = vec![false; g.len()];
    for v in set {
        inside[g.index_of(v.as_ref())?] = true;
    }
    Ok(g.edge_indices().iter().all(|&(i, j)| inside[i] || inside[j]))
}

fn covers_mask(edges: &[(usize, usize)], mask: u64) -> bool {
    edges
        .iter()
        .all(|&(i, j)| mask >> i & 1 == 1 || mask >> j & 1 == 1)
}

fn is_minimal_cover_mask(g: &Graph, adj: &[u64], mask: u64) -> bool {
    covers_mask(g.edge_indices(), mask)
        // each chosen vertex must have a neighbor outside the cover
        && mask_indices(mask).into_iter().all(|v| adj[v] & !mask != 0)
}

/// True iff the labels form a minimal vertex cover of `g`.
pub fn is_minimal_vertex_cover<S: AsRef<str>>(g: &Graph, set: &[S]) -> Result<bool> {
    let mut mask = 0u64;
    if g.len() > 64 {
        return Err(Error::CapExceeded {
            what: "vertex",
            limit: 64,
            actual: g.len(),
        });
    }
    for v in set {
        mask |= 1 << g.index_of(v.as_ref())?;
    }
    Ok(is_minimal_cover_mask(g, &adjacency_masks(g), mask))
}

/// Every minimal vertex cover of `g`.
pub fn minimal_vertex_covers(g: &Graph, cfg: &Config) -> Result<CoverSet> {
    check_size(g, &cfg.caps)?;
    let n = g.len();
    let adj = adjacency_masks(g);
    let all = full_mask(n);
    // Independent-set extension candidates: vertices that are neither v nor adjacent to v.
    let compat: Vec<u64> = (0..n).map(|v| all & !adj[v] & !(1 << v)).collect();

    // Unroll the top level of Bron–Kerbosch so the branches can run in parallel.
    let mut branches = Vec::new();
    let (mut p, mut x) = (all, 0u64);
    if p == 0 {
        branches.push((0u64, 0u64, 0u64));
    } else {
        let pivot = choose_pivot(p, x, &compat);
        let mut cand = p & !compat[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            branches.push((1 << v, p & compat[v], x & compat[v]));
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let found: Vec<Vec<u64>> = cfg.exec.map(branches, |(r, p, x)| {
        let mut out = Vec::new();
        bron_kerbosch(r, p, x, &compat, &mut out);
        out
    });
    let covers = found.into_iter().flatten().map(|mis| all & !mis).collect();
    Ok(CoverSet::from_masks(g, covers))
}

fn choose_pivot(p: u64, x: u64, compat: &[u64]) -> usize {
    let mut best = (0u32, usize::MAX);
    let mut cand = p | x;
    while cand != 0 {
        let u = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let score = (p & compat[u]).count_ones();
        if best.1 == usize::MAX || score > best.0 {
            best = (score, u);
        }
    }
    best.1
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, compat: &[u64], out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = choose_pivot(p, x, compat);
    let mut cand = p & !compat[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(r | 1 << v, p & compat[v], x & compat[v], compat, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Direct subset filtering; the independent check for the enumerator.
pub fn minimal_vertex_covers_brute_force(g: &Graph) -> Result<CoverSet> {
    Caps::check("brute-force vertex", BRUTE_FORCE_LIMIT, g.len())?;
    let adj = adjacency_masks(g);
    let covers = (0..1u64 << g.len())
        .filter(|&m| is_minimal_cover_mask(g, &adj, m))
        .collect();
    Ok(CoverSet::from_masks(g, covers))
}

/// `J(G)`, generated by `X_C` over all minimal vertex covers `C`.
pub fn cover_ideal(g: &Graph, cfg: &Config) -> Result<MonomialIdeal> {
    let covers = minimal_vertex_covers(g, cfg)?;
    MonomialIdeal::new(g.ring(), covers.monomials())
}

/// Whether `|N[v_i] ∩ C| = |N[v_i]| - 1` holds for every apex `v_i`.
pub fn check_apex_count<S: AsRef<str>>(gpi: &CliqueWhiskeredGraph, cover: &[S]) -> Result<bool> {
    let g = gpi.graph();
    let mut inside = vec![false; g.len()];
    for v in cover {
        inside[g.index_of(v.as_ref())?] = true;
    }
    Ok(gpi.cliques().iter().all(|c| {
        let closed = g.neighborhood_indices(c.apex, true);
        closed.iter().filter(|&&i| inside[i]).count() + 1 == closed.len()
    }))
}

/// Given a minimal cover `C` of `G^π \ w`, returns `C \ N(w)`, which covers
/// `G^π \ N[w]`.
pub fn restrict_cover<S: AsRef<str>>(
    gpi: &CliqueWhiskeredGraph,
    w: &str,
    cover: &[S],
) -> Result<Vec<String>> {
    let wi = gpi.graph().index_of(w)?;
    if gpi.is_apex(wi) {
        return Err(Error::ApexVertex(w.to_string()));
    }
    let minus_w = gpi.graph().induced_delete(&[w])?;
    if !is_minimal_vertex_cover(&minus_w, cover)? {
        return Err(Error::NotMinimalCover(
            cover.iter().map(|s| s.as_ref().to_string()).collect(),
        ));
    }
    let open = gpi.graph().neighborhood(w, false)?;
    let restricted: Vec<String> = cover
        .iter()
        .map(|s| s.as_ref().to_string())
        .filter(|v| !open.contains(v))
        .collect();
    let closed = gpi.graph().neighborhood(w, true)?;
    let rest = gpi.graph().induced_delete(&closed)?;
    let inside: Vec<&String> = restricted.iter().filter(|v| rest.contains(v)).collect();
    if !is_vertex_cover(&rest, &inside)? {
        return Err(Error::InvalidArgument(format!(
            "restriction {restricted:?} fails to cover G \\ N[{w}]"
        )));
    }
    Ok(restricted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CliquePartition;
    use proptest::prelude::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn is_vertex_cover_examples() {
        let k2 = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(is_vertex_cover(&k2, &["a"]).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert!(!is_vertex_cover(&c4, &["x1", "x2"]).unwrap());
        assert!(is_vertex_cover(&c4, c4.labels()).unwrap());
        assert!(is_vertex_cover(&c4, &["zz"]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let covers = minimal_vertex_covers(&c4, &cfg()).unwrap();
        assert_eq!(covers.labels(), [vec!["x1", "x3"], vec!["x2", "x4"]]);
        let k2 = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(minimal_vertex_covers(&k2, &cfg()).unwrap().labels(), [["a"], ["b"]]);
        let g2 = CliqueWhiskeredGraph::whiskered_cycle(2).unwrap();
        let covers = minimal_vertex_covers(g2.graph(), &cfg()).unwrap();
        assert_eq!(covers.len(), 7);
        assert!(covers.indices().iter().all(|c| c.len() == 4));
        assert_eq!(covers, minimal_vertex_covers_brute_force(g2.graph()).unwrap());
    }

    #[test]
    fn cover_ideal_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(cover_ideal(&c4, &cfg()).unwrap().format_generators(), ["x1x3", "x2x4"]);
        let k2 = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(cover_ideal(&k2, &cfg()).unwrap().format_generators(), ["a", "b"]);
        let edgeless = Graph::new::<&str>(&["a", "b"], &[]).unwrap();
        assert!(cover_ideal(&edgeless, &cfg()).unwrap().is_unit());
        assert!(cover_ideal(&Graph::empty(), &cfg()).unwrap().is_unit());
    }

    #[test]
    fn vertex_cap_is_a_hard_error() {
        let p = Graph::path(30).unwrap();
        assert!(matches!(
            minimal_vertex_covers(&p, &cfg()),
            Err(Error::CapExceeded { what: "vertex", .. })
        ));
        assert!(minimal_vertex_covers_brute_force(&p).is_err());
    }

    #[test]
    fn apex_count_examples() {
        let k2 = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let tri = CliqueWhiskeredGraph::clique_whisker(&k2, &CliquePartition::new(&[vec!["a", "b"]])).unwrap();
        assert!(check_apex_count(&tri, &["a", "v1"]).unwrap());
        assert!(!check_apex_count(&tri, &["a", "b", "v1"]).unwrap());
        for c in minimal_vertex_covers(tri.graph(), &cfg()).unwrap().labels() {
            assert!(check_apex_count(&tri, &c).unwrap());
        }
    }

    #[test]
    fn restrict_cover_examples() {
        let k2 = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let tri = CliqueWhiskeredGraph::clique_whisker(&k2, &CliquePartition::new(&[vec!["a", "b"]])).unwrap();
        assert!(restrict_cover(&tri, "a", &["b"]).unwrap().is_empty());

        let g2 = CliqueWhiskeredGraph::whiskered_cycle(2).unwrap();
        let minus = g2.graph().induced_delete(&["x1"]).unwrap();
        let covers = minimal_vertex_covers(&minus, &cfg()).unwrap();
        assert!(!covers.is_empty());
        for c in covers.labels() {
            restrict_cover(&g2, "x1", &c).unwrap();
        }
        assert!(matches!(
            restrict_cover(&g2, "x1", &["x2"]),
            Err(Error::NotMinimalCover(_))
        ));
        assert!(matches!(restrict_cover(&g2, "y1", &["x2"]), Err(Error::ApexVertex(_))));
    }

    #[test]
    fn isolated_vertices_never_appear() {
        let g = Graph::new(&["a", "b", "z"], &[("a", "b")]).unwrap();
        let covers = minimal_vertex_covers(&g, &cfg()).unwrap();
        assert!(covers.labels().iter().all(|c| !c.contains(&"z".to_string())));
        assert_eq!(covers.len(), 2);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let labels: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if bits[k] {
                            edges.push((labels[i].clone(), labels[j].clone()));
                        }
                        k += 1;
                    }
                }
                Graph::new(&labels, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn enumerators_agree(g in arb_graph(11)) {
            let fast = minimal_vertex_covers(&g, &cfg()).unwrap();
            let seq = minimal_vertex_covers(&g, &Config::sequential()).unwrap();
            let brute = minimal_vertex_covers_brute_force(&g).unwrap();
            prop_assert_eq!(&fast, &brute);
            prop_assert_eq!(&fast, &seq);
            let adj = adjacency_masks(&g);
            for &c in fast.masks() {
                // complement is a maximal independent set
                let ind = full_mask(g.len()) & !c;
                prop_assert!((0..g.len()).filter(|&v| ind >> v & 1 == 1).all(|v| adj[v] & ind == 0));
                prop_assert!((0..g.len()).filter(|&v| c >> v & 1 == 1).all(|v| adj[v] & ind != 0));
            }
        }

        #[test]
        fn whiskered_covers_satisfy_apex_count(g in arb_graph(6)) {
            let w = CliqueWhiskeredGraph::clique_whisker(&g, &CliquePartition::singletons(&g)).unwrap();
            let covers = minimal_vertex_covers(w.graph(), &cfg()).unwrap();
            let sizes: Vec<usize> = covers.indices().iter().map(Vec::len).collect();
            prop_assert!(sizes.windows(2).all(|p| p[0] == p[1]));
            for c in covers.labels() {
                prop_assert!(check_apex_count(&w, &c).unwrap());
            }
        }
    }
}
