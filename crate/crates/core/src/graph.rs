//! Finite simple graphs and the clique-whiskered construction.
//!
//! Vertex labels are strings. Each graph assigns indices in declared order, and
//! that order drives every deterministic iteration and lex comparison
//! downstream (the variables of a cover ideal follow the vertex order).

use crate::error::{Error, Result};
use crate::monomial::Ring;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph> {
        let labels: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(s.to_string()))
        };
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if i == j {
                return Err(Error::LoopEdge(a.as_ref().to_string()));
            }
            set.insert((i.min(j), i.max(j)));
        }
        Ok(Graph::from_parts(labels, index, set))
    }

    fn from_parts(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        edges: BTreeSet<(usize, usize)>,
    ) -> Graph {
        let mut adj = vec![Vec::new(); labels.len()];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph {
            labels,
            index,
            adj,
            edges: edges.into_iter().collect(),
        }
    }

    /// Graph on index-labelled vertices; used by constructors that already
    /// validated their labels.
    fn from_indexed(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::LabelCollision(l.clone()));
            }
        }
        let set = edges
            .into_iter()
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect::<BTreeSet<_>>();
        Ok(Graph::from_parts(labels, index, set))
    }

    pub fn empty() -> Graph {
        Graph::from_parts(Vec::new(), HashMap::new(), BTreeSet::new())
    }

    /// Cycle `x1 - x2 - ... - xn - x1`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
        }
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        Graph::from_indexed(labels, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `x1 - x2 - ... - xn`.
    pub fn path(n: usize) -> Result<Graph> {
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        Graph::from_indexed(labels, (1..n).map(|i| (i - 1, i)))
    }

    /// Complete graph on `x1..xn`.
    pub fn complete(n: usize) -> Result<Graph> {
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        Graph::from_indexed(labels, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edges(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Ring whose variables are the vertices, in vertex order.
    pub fn ring(&self) -> Ring {
        Ring::new(self.labels.iter().cloned()).expect("graph labels are unique")
    }

    /// `N(a)` or `N[a]`, in vertex order.
    pub fn neighborhood(&self, a: &str, closed: bool) -> Result<Vec<String>> {
        let i = self.index_of(a)?;
        Ok(self
            .neighborhood_indices(i, closed)
            .into_iter()
            .map(|j| self.labels[j].clone())
            .collect())
    }

    pub fn neighborhood_indices(&self, i: usize, closed: bool) -> Vec<usize> {
        let mut n = self.adj[i].clone();
        if closed {
            let pos = n.binary_search(&i).unwrap_err();
            n.insert(pos, i);
        }
        n
    }

    /// `G \ W`: drops `W` and every edge meeting it. Vertex order is inherited.
    pub fn induced_delete<S: AsRef<str>>(&self, remove: &[S]) -> Result<Graph> {
        let mut gone = vec![false; self.len()];
        for w in remove {
            gone[self.index_of(w.as_ref())?] = true;
        }
        Ok(self.keep(|i| !gone[i]))
    }

    /// Induced subgraph on the vertices satisfying `keep`.
    pub(crate) fn keep(&self, keep: impl Fn(usize) -> bool) -> Graph {
        let mut new_index = vec![usize::MAX; self.len()];
        let mut labels = Vec::new();
        for (i, slot) in new_index.iter_mut().enumerate() {
            if keep(i) {
                *slot = labels.len();
                labels.push(self.labels[i].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| new_index[i] != usize::MAX && new_index[j] != usize::MAX)
            .map(|&(i, j)| (new_index[i], new_index[j]));
        Graph::from_indexed(labels, edges).expect("labels inherited from a valid graph")
    }

    /// The same graph with its vertex list permuted: `order[k]` is the old
    /// index of the new k-th vertex.
    pub(crate) fn reordered(&self, order: &[usize]) -> Graph {
        let mut new_index = vec![0; self.len()];
        for (k, &old) in order.iter().enumerate() {
            new_index[old] = k;
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        Graph::from_indexed(labels, self.edges.iter().map(|&(i, j)| (new_index[i], new_index[j])))
            .expect("labels inherited from a valid graph")
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &i)| {
            vertices[a + 1..].iter().all(|&j| i != j && self.has_edge(i, j))
        })
    }

    /// Vertices whose open neighborhood induces a complete graph, in vertex
    /// order. Isolated vertices count as simplicial.
    pub fn simplicial_vertices(&self) -> Vec<String> {
        self.simplicial_indices()
            .into_iter()
            .map(|i| self.labels[i].clone())
            .collect()
    }

    pub(crate) fn simplicial_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_clique(&self.adj[i])).collect()
    }

    /// Chordality by repeated deletion of simplicial vertices.
    pub fn is_chordal(&self) -> bool {
        let mut g = self.clone();
        while !g.is_empty() {
            match g.simplicial_indices().first() {
                Some(&s) => g = g.keep(|i| i != s),
                None => return false,
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !std::mem::replace(&mut seen[u], true) {
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Disjoint cliques covering the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartition {
    pub cliques: Vec<Vec<String>>,
}

impl CliquePartition {
    pub fn new<S: AsRef<str>>(cliques: &[Vec<S>]) -> CliquePartition {
        CliquePartition {
            cliques: cliques
                .iter()
                .map(|c| c.iter().map(|s| s.as_ref().to_string()).collect())
                .collect(),
        }
    }

    /// Every vertex in its own block.
    pub fn singletons(g: &Graph) -> CliquePartition {
        CliquePartition {
            cliques: g.labels().iter().map(|l| vec![l.clone()]).collect(),
        }
    }

    /// Checks the partition against `g` and returns the blocks as indices.
    pub fn validate(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        let mut seen = vec![false; g.len()];
        let mut blocks = Vec::with_capacity(self.cliques.len());
        for c in &self.cliques {
            if c.is_empty() {
                return Err(Error::NotAPartition("empty block".into()));
            }
            let mut block = Vec::with_capacity(c.len());
            for v in c {
                let i = g.index_of(v)?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::NotAPartition(format!("`{v}` appears twice")));
                }
                block.push(i);
            }
            if !g.is_clique(&block) {
                return Err(Error::NotAClique(c.clone()));
            }
            blocks.push(block);
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::NotAPartition(format!("`{}` is not covered", g.label(i))));
        }
        Ok(blocks)
    }
}

/// Role of a vertex in a clique-whiskered graph. Indices are 1-based, as in
/// the interchange format: `W { clique: i, pos: j }` is `w(i,j)` and
/// `V { clique: i }` is the whisker apex `v(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    W { clique: usize, pos: usize },
    V { clique: usize },
}

/// One block `A_i` of the partition with its apex. Indices refer to the
/// whiskered graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskerClique {
    pub members: Vec<usize>,
    pub apex: usize,
}

/// A graph `G` together with a clique partition, extended by one apex per
/// clique. The vertex list of [`CliqueWhiskeredGraph::graph`] is the total
/// order `w11 > w12 > .. > v1 > w21 > .. > vt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueWhiskeredGraph {
    graph: Graph,
    base: Graph,
    roles: Vec<Role>,
    cliques: Vec<WhiskerClique>,
}

impl CliqueWhiskeredGraph {
    /// Builds `G^π` with apexes labelled `v1, v2, ...`.
    pub fn clique_whisker(g: &Graph, partition: &CliquePartition) -> Result<Self> {
        let apexes = (1..=partition.cliques.len()).map(|i| format!("v{i}")).collect();
        Self::whisker_with(g, partition, apexes)
    }

    fn whisker_with(g: &Graph, partition: &CliquePartition, apexes: Vec<String>) -> Result<Self> {
        let blocks = partition.validate(g)?;
        let mut labels = Vec::with_capacity(g.len() + blocks.len());
        let mut roles = Vec::with_capacity(labels.capacity());
        let mut cliques = Vec::with_capacity(blocks.len());
        let mut new_of_old = vec![0; g.len()];
        for (ci, (block, apex)) in blocks.iter().zip(apexes).enumerate() {
            if g.contains(&apex) {
                return Err(Error::LabelCollision(apex));
            }
            let mut members = Vec::with_capacity(block.len());
            for (pos, &old) in block.iter().enumerate() {
                new_of_old[old] = labels.len();
                members.push(labels.len());
                labels.push(g.label(old).to_string());
                roles.push(Role::W {
                    clique: ci + 1,
                    pos: pos + 1,
                });
            }
            cliques.push(WhiskerClique {
                members,
                apex: labels.len(),
            });
            labels.push(apex);
            roles.push(Role::V { clique: ci + 1 });
        }
        let mut edges: Vec<(usize, usize)> = g
            .edge_indices()
            .iter()
            .map(|&(i, j)| (new_of_old[i], new_of_old[j]))
            .collect();
        for c in &cliques {
            edges.extend(c.members.iter().map(|&m| (m, c.apex)));
        }
        let graph = Graph::from_indexed(labels, edges)?;
        let base = graph.keep(|i| matches!(roles[i], Role::W { .. }));
        Ok(CliqueWhiskeredGraph {
            graph,
            base,
            roles,
            cliques,
        })
    }

    /// The whiskered `2k`-cycle: `x_i - y_i` whiskers on the cycle `x_1..x_2k`.
    pub fn whiskered_cycle(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("whiskered cycle needs k >= 2, got {k}")));
        }
        let cycle = Graph::cycle(2 * k)?;
        let apexes = (1..=2 * k).map(|i| format!("y{i}")).collect();
        Self::whisker_with(&cycle, &CliquePartition::singletons(&cycle), apexes)
    }

    /// Cohen–Macaulay Cameron–Walker graph on a bipartite core `h`: a pendant
    /// triangle `{w, u_i, v_i}` at each vertex of `left` and a leaf `v_j` at
    /// each other vertex.
    pub fn cm_cameron_walker<S: AsRef<str>>(h: &Graph, left: &[S]) -> Result<Self> {
        let mut is_left = vec![false; h.len()];
        for l in left {
            is_left[h.index_of(l.as_ref())?] = true;
        }
        let left_idx: Vec<usize> = left
            .iter()
            .map(|l| h.index_of(l.as_ref()))
            .collect::<Result<_>>()?;
        let right_idx: Vec<usize> = (0..h.len()).filter(|&i| !is_left[i]).collect();
        if left_idx.is_empty() || right_idx.is_empty() || left_idx.iter().collect::<HashSet<_>>().len() != left_idx.len() {
            return Err(Error::InvalidArgument(
                "Cameron–Walker core needs distinct left vertices and a non-empty right part".into(),
            ));
        }
        if let Some(&(i, j)) = h.edge_indices().iter().find(|&&(i, j)| is_left[i] == is_left[j]) {
            return Err(Error::InvalidArgument(format!(
                "edge {{{}, {}}} does not cross the bipartition",
                h.label(i),
                h.label(j)
            )));
        }
        if !h.is_connected() {
            return Err(Error::InvalidArgument("Cameron–Walker core must be connected".into()));
        }
        let m = left_idx.len();
        let mut labels: Vec<String> = h.labels().to_vec();
        let mut edges: Vec<(usize, usize)> = h.edge_indices().to_vec();
        let mut cliques: Vec<Vec<String>> = Vec::new();
        for (i, &w) in left_idx.iter().enumerate() {
            let partner = format!("u{}", i + 1);
            if h.contains(&partner) {
                return Err(Error::LabelCollision(partner));
            }
            edges.push((w, labels.len()));
            cliques.push(vec![h.label(w).to_string(), partner.clone()]);
            labels.push(partner);
        }
        cliques.extend(right_idx.iter().map(|&j| vec![h.label(j).to_string()]));
        let base = Graph::from_indexed(labels, edges)?;
        let apexes = (1..=m + right_idx.len()).map(|i| format!("v{i}")).collect();
        Self::whisker_with(&base, &CliquePartition { cliques }, apexes)
    }

    /// Clique corona `Γ ∘ {K_t1, .., K_tn}`: vertex `i` of `Γ` is joined to a
    /// complete graph on `w{i}_2, .., w{i}_{t_i}, v{i}`.
    pub fn clique_corona(gamma: &Graph, t: &[usize]) -> Result<Self> {
        if t.len() != gamma.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} clique sizes, got {}",
                gamma.len(),
                t.len()
            )));
        }
        if let Some(pos) = t.iter().position(|&ti| ti < 1) {
            return Err(Error::InvalidArgument(format!("clique size t_{} must be >= 1", pos + 1)));
        }
        let mut labels: Vec<String> = gamma.labels().to_vec();
        let mut edges: Vec<(usize, usize)> = gamma.edge_indices().to_vec();
        let mut cliques = Vec::with_capacity(gamma.len());
        for (i, &ti) in t.iter().enumerate() {
            let mut block = vec![i];
            for j in 2..=ti {
                let label = format!("w{}_{}", i + 1, j);
                if gamma.contains(&label) {
                    return Err(Error::LabelCollision(label));
                }
                block.push(labels.len());
                labels.push(label);
            }
            for (a, &p) in block.iter().enumerate() {
                edges.extend(block[a + 1..].iter().map(|&q| (p, q)));
            }
            cliques.push(block.iter().map(|&b| labels[b].clone()).collect());
        }
        let base = Graph::from_indexed(labels, edges)?;
        Self::clique_whisker(&base, &CliquePartition { cliques })
    }

    /// Reassembles a clique-whiskered graph from a graph and per-vertex roles,
    /// validating every structural invariant. The vertex list is put into the
    /// canonical total order.
    pub fn from_roles(graph: &Graph, roles: &HashMap<String, Role>) -> Result<Self> {
        let mut keyed = Vec::with_capacity(graph.len());
        for (i, label) in graph.labels().iter().enumerate() {
            let role = *roles
                .get(label)
                .ok_or_else(|| Error::InvalidArgument(format!("vertex `{label}` has no role")))?;
            let key = match role {
                Role::W { clique, pos } => (clique, pos),
                Role::V { clique } => (clique, usize::MAX),
            };
            keyed.push((key, i, role));
        }
        if let Some(extra) = roles.keys().find(|k| !graph.contains(k)) {
            return Err(Error::UnknownVertex(extra.clone()));
        }
        keyed.sort();
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        let mut expected_clique = 1;
        let mut expected_pos = 1;
        for w in keyed.iter() {
            let ((c, p), i, _) = *w;
            if c != expected_clique {
                return bad(format!("roles of `{}` skip or repeat clique numbers", graph.label(i)));
            }
            if p == usize::MAX {
                if expected_pos == 1 {
                    return bad(format!("clique {c} has an apex but no members"));
                }
                expected_clique += 1;
                expected_pos = 1;
            } else if p != expected_pos {
                return bad(format!("clique {c} positions are not 1..r"));
            } else {
                expected_pos += 1;
            }
        }
        if expected_pos != 1 {
            return bad(format!("clique {expected_clique} has no apex"));
        }
        let order: Vec<usize> = keyed.iter().map(|&(_, i, _)| i).collect();
        let g = graph.reordered(&order);
        let roles: Vec<Role> = keyed.iter().map(|&(_, _, r)| r).collect();
        let mut cliques: Vec<WhiskerClique> = Vec::new();
        let mut members = Vec::new();
        for (i, r) in roles.iter().enumerate() {
            match r {
                Role::W { .. } => members.push(i),
                Role::V { .. } => cliques.push(WhiskerClique {
                    members: std::mem::take(&mut members),
                    apex: i,
                }),
            }
        }
        for c in &cliques {
            if g.neighbors(c.apex) != c.members.as_slice() {
                return bad(format!("apex `{}` is not adjacent exactly to its clique", g.label(c.apex)));
            }
            if !g.is_clique(&c.members) {
                return Err(Error::NotAClique(c.members.iter().map(|&m| g.label(m).to_string()).collect()));
            }
        }
        let base = g.keep(|i| matches!(roles[i], Role::W { .. }));
        Ok(CliqueWhiskeredGraph {
            graph: g,
            base,
            roles,
            cliques,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The underlying graph `G` (all apexes removed).
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role_of(&self, label: &str) -> Result<Role> {
        Ok(self.roles[self.graph.index_of(label)?])
    }

    pub fn cliques(&self) -> &[WhiskerClique] {
        &self.cliques
    }

    /// Vertex labels in the canonical total order.
    pub fn order(&self) -> &[String] {
        self.graph.labels()
    }

    pub fn is_apex(&self, i: usize) -> bool {
        matches!(self.roles[i], Role::V { .. })
    }

    /// Base vertices as indices into [`Self::graph`].
    pub fn base_indices(&self) -> Vec<usize> {
        (0..self.graph.len()).filter(|&i| !self.is_apex(i)).collect()
    }

    pub fn partition(&self) -> CliquePartition {
        CliquePartition {
            cliques: self
                .cliques
                .iter()
                .map(|c| c.members.iter().map(|&m| self.graph.label(m).to_string()).collect())
                .collect(),
        }
    }

    /// `G^π \ W`. Cliques emptied by the deletion lose their (now isolated)
    /// apex as well; deleting an apex whose clique survives is rejected
    /// because the result would not be clique-whiskered.
    pub fn delete<S: AsRef<str>>(&self, remove: &[S]) -> Result<Self> {
        let mut gone = vec![false; self.graph.len()];
        for w in remove {
            gone[self.graph.index_of(w.as_ref())?] = true;
        }
        let mut roles = HashMap::new();
        let mut next = 0;
        for c in &self.cliques {
            let kept: Vec<usize> = c.members.iter().copied().filter(|&m| !gone[m]).collect();
            if kept.is_empty() {
                gone[c.apex] = true;
                continue;
            }
            if gone[c.apex] {
                return Err(Error::InvalidArgument(format!(
                    "cannot delete apex `{}` while its clique survives",
                    self.graph.label(c.apex)
                )));
            }
            next += 1;
            for (p, &m) in kept.iter().enumerate() {
                roles.insert(self.graph.label(m).to_string(), Role::W { clique: next, pos: p + 1 });
            }
            roles.insert(self.graph.label(c.apex).to_string(), Role::V { clique: next });
        }
        let g = self.graph.keep(|i| !gone[i]);
        Self::from_roles(&g, &roles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::new(&["a", "b"], &[("a", "b")]).unwrap()
    }

    #[test]
    fn build_graph_examples() {
        let g = k2();
        assert_eq!((g.len(), g.num_edges()), (2, 1));
        let c4 = Graph::new(
            &["x1", "x2", "x3", "x4"],
            &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x1"), ("x2", "x1")],
        )
        .unwrap();
        assert_eq!(c4.num_edges(), 4);
        assert_eq!(c4, Graph::cycle(4).unwrap());
        let iso = Graph::new::<&str>(&["a"], &[]).unwrap();
        assert_eq!((iso.len(), iso.num_edges()), (1, 0));
    }

    #[test]
    fn build_graph_errors() {
        assert!(matches!(Graph::new(&["a", "a"], &[]), Err(Error::DuplicateVertex(_))));
        assert!(matches!(Graph::new(&["a"], &[("a", "z")]), Err(Error::UnknownVertex(_))));
        assert!(matches!(Graph::new(&["a"], &[("a", "a")]), Err(Error::LoopEdge(_))));
    }

    #[test]
    fn induced_delete_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let p = c4.induced_delete(&["x1"]).unwrap();
        assert_eq!(p, Graph::new(&["x2", "x3", "x4"], &[("x2", "x3"), ("x3", "x4")]).unwrap());
        assert_eq!(c4.induced_delete::<&str>(&[]).unwrap(), c4);
        assert!(k2().induced_delete(&["a", "b"]).unwrap().is_empty());
        assert!(c4.induced_delete(&["q"]).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(k2().neighborhood("a", false).unwrap(), ["b"]);
        let c4 = Graph::cycle(4).unwrap();
        let mut n = c4.neighborhood("x1", true).unwrap();
        n.sort();
        assert_eq!(n, ["x1", "x2", "x4"]);
        let iso = Graph::new::<&str>(&["a"], &[]).unwrap();
        assert!(iso.neighborhood("a", false).unwrap().is_empty());
        assert!(iso.neighborhood("b", false).is_err());
    }

    #[test]
    fn clique_whisker_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let w = CliqueWhiskeredGraph::clique_whisker(&c4, &CliquePartition::singletons(&c4)).unwrap();
        assert_eq!((w.graph().len(), w.graph().num_edges()), (8, 8));
        assert_eq!(w.order(), ["x1", "v1", "x2", "v2", "x3", "v3", "x4", "v4"]);

        let t = CliqueWhiskeredGraph::clique_whisker(&k2(), &CliquePartition::new(&[vec!["a", "b"]])).unwrap();
        assert_eq!(t.graph().num_edges(), 3);
        assert_eq!(t.order(), ["a", "b", "v1"]);
        assert_eq!(t.role_of("b").unwrap(), Role::W { clique: 1, pos: 2 });

        let e = CliqueWhiskeredGraph::clique_whisker(&Graph::empty(), &CliquePartition { cliques: vec![] })
            .unwrap();
        assert!(e.graph().is_empty());
    }

    #[test]
    fn clique_whisker_errors() {
        let c4 = Graph::cycle(4).unwrap();
        let not_clique = CliquePartition::new(&[vec!["x1", "x3"], vec!["x2"], vec!["x4"]]);
        assert!(matches!(
            CliqueWhiskeredGraph::clique_whisker(&c4, &not_clique),
            Err(Error::NotAClique(_))
        ));
        let missing = CliquePartition::new(&[vec!["x1", "x2"]]);
        assert!(matches!(
            CliqueWhiskeredGraph::clique_whisker(&c4, &missing),
            Err(Error::NotAPartition(_))
        ));
        let twice = CliquePartition::new(&[vec!["x1", "x2"], vec!["x2", "x3"], vec!["x4"]]);
        assert!(CliqueWhiskeredGraph::clique_whisker(&c4, &twice).is_err());
        let g = Graph::new(&["v1", "a"], &[("v1", "a")]).unwrap();
        assert!(matches!(
            CliqueWhiskeredGraph::clique_whisker(&g, &CliquePartition::singletons(&g)),
            Err(Error::LabelCollision(_))
        ));
    }

    #[test]
    fn whiskered_cycle_examples() {
        let g2 = CliqueWhiskeredGraph::whiskered_cycle(2).unwrap();
        assert_eq!((g2.graph().len(), g2.graph().num_edges()), (8, 8));
        assert_eq!(g2.base(), &Graph::cycle(4).unwrap());
        let g3 = CliqueWhiskeredGraph::whiskered_cycle(3).unwrap();
        assert_eq!((g3.graph().len(), g3.graph().num_edges()), (12, 12));
        assert!(CliqueWhiskeredGraph::whiskered_cycle(1).is_err());
    }

    #[test]
    fn cameron_walker_examples() {
        let h = Graph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let cw = CliqueWhiskeredGraph::cm_cameron_walker(&h, &["a"]).unwrap();
        assert_eq!(cw.graph().len(), 5);
        assert_eq!(cw.order(), ["a", "u1", "v1", "b", "v2"]);
        assert_eq!(cw.graph().num_edges(), 5);

        let c4 = Graph::new(
            &["w11", "w21", "w31", "w41"],
            &[("w11", "w31"), ("w31", "w21"), ("w21", "w41"), ("w41", "w11")],
        )
        .unwrap();
        let cw = CliqueWhiskeredGraph::cm_cameron_walker(&c4, &["w11", "w21"]).unwrap();
        assert_eq!(cw.graph().len(), 10);

        let not_bip = Graph::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        assert!(CliqueWhiskeredGraph::cm_cameron_walker(&not_bip, &["a", "b"]).is_err());
        assert!(CliqueWhiskeredGraph::cm_cameron_walker(&h, &["a", "b"]).is_err());
    }

    #[test]
    fn clique_corona_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let ones = CliqueWhiskeredGraph::clique_corona(&c4, &[1, 1, 1, 1]).unwrap();
        let whiskered = CliqueWhiskeredGraph::clique_whisker(&c4, &CliquePartition::singletons(&c4)).unwrap();
        assert_eq!(ones, whiskered);
        // Same as the whiskered 4-cycle up to renaming v_i -> y_i.
        let g2 = CliqueWhiskeredGraph::whiskered_cycle(2).unwrap();
        let renamed: Vec<String> = ones.order().iter().map(|l| l.replace('v', "y")).collect();
        assert_eq!(renamed, g2.order());
        assert_eq!(ones.graph().edge_indices(), g2.graph().edge_indices());

        let k2 = Graph::complete(2).unwrap();
        let cc = CliqueWhiskeredGraph::clique_corona(&k2, &[2, 2]).unwrap();
        assert_eq!(cc.graph().len(), 6);
        assert_eq!(cc.graph().num_edges(), 1 + 2 * 3);

        let k1 = Graph::complete(1).unwrap();
        let tri = CliqueWhiskeredGraph::clique_corona(&k1, &[2]).unwrap();
        assert_eq!((tri.graph().len(), tri.graph().num_edges()), (3, 3));

        assert!(CliqueWhiskeredGraph::clique_corona(&k2, &[2]).is_err());
        assert!(CliqueWhiskeredGraph::clique_corona(&k2, &[2, 0]).is_err());
    }

    #[test]
    fn simplicial_and_chordal() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.simplicial_vertices(), ["x1", "x2", "x3"]);
        assert!(Graph::cycle(4).unwrap().simplicial_vertices().is_empty());
        assert_eq!(Graph::path(3).unwrap().simplicial_vertices(), ["x1", "x3"]);
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        let star = Graph::new(&["c", "a", "b", "d"], &[("c", "a"), ("c", "b"), ("c", "d")]).unwrap();
        assert!(star.is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
    }

    #[test]
    fn whisker_invariants() {
        let g = Graph::new(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")],
        )
        .unwrap();
        let pi = CliquePartition::new(&[vec!["c", "a", "b"], vec!["d"]]);
        let w = CliqueWhiskeredGraph::clique_whisker(&g, &pi).unwrap();
        for c in w.cliques() {
            let closed = w.graph().neighborhood_indices(c.apex, true);
            assert!(w.graph().is_clique(&closed));
        }
        let apexes: Vec<String> = w.cliques().iter().map(|c| w.graph().label(c.apex).to_string()).collect();
        let stripped = w.graph().induced_delete(&apexes).unwrap();
        let mut a: Vec<_> = stripped.edges().into_iter().map(|(x, y)| if x < y { (x, y) } else { (y, x) }).collect();
        let mut b: Vec<_> = g.edges().into_iter().map(|(x, y)| if x < y { (x, y) } else { (y, x) }).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(w.order(), ["c", "a", "b", "v1", "d", "v2"]);
    }

    #[test]
    fn delete_renumbers_and_drops_isolated_apexes() {
        let g2 = CliqueWhiskeredGraph::whiskered_cycle(2).unwrap();
        let closed = g2.graph().neighborhood("x1", true).unwrap();
        let sub = g2.delete(&closed).unwrap();
        assert_eq!(sub.order(), ["x3", "y3"]);
        assert_eq!(sub.role_of("y3").unwrap(), Role::V { clique: 1 });
        let sub = g2.delete(&["x1"]).unwrap();
        assert_eq!(sub.order(), ["x2", "y2", "x3", "y3", "x4", "y4"]);
        assert!(g2.delete(&["y1"]).is_err());
    }

    #[test]
    fn from_roles_round_trip_and_rejects_bad_roles() {
        let w = CliqueWhiskeredGraph::cm_cameron_walker(&k2(), &["a"]).unwrap();
        let roles: HashMap<String, Role> = w
            .order()
            .iter()
            .zip(w.roles())
            .map(|(l, r)| (l.clone(), *r))
            .collect();
        let shuffled = w.graph().reordered(&[4, 2, 0, 3, 1]);
        assert_eq!(CliqueWhiskeredGraph::from_roles(&shuffled, &roles).unwrap(), w);

        let mut bad = roles.clone();
        bad.insert("v2".into(), Role::V { clique: 1 });
        assert!(CliqueWhiskeredGraph::from_roles(w.graph(), &bad).is_err());
        let mut bad = roles;
        bad.remove("u1");
        assert!(CliqueWhiskeredGraph::from_roles(w.graph(), &bad).is_err());
    }
}
