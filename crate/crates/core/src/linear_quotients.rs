//! Linear quotients: verification, exhaustive search, the closed-form orders
//! for clique-whiskered graphs and the weakly polymatroidal exchange test.

use crate::config::Config;
use crate::covers::{cover_ideal, is_minimal_vertex_cover};
use crate::error::{Error, Result};
use crate::graph::CliqueWhiskeredGraph;
use crate::monomial::{embedding, map_monomial, minimalize, Monomial, MonomialIdeal, Ring, VarOrder};
use std::collections::HashSet;

/// A generator order of an ideal under which every colon
/// `<m_1, .., m_{j-1}> : m_j` is generated by variables. Only constructed by
/// [`verify_order`], so holding one is proof of the property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientOrder {
    ideal: MonomialIdeal,
    sequence: Vec<Monomial>,
    sets: Vec<Vec<usize>>,
}

impl LinearQuotientOrder {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn sequence(&self) -> &[Monomial] {
        &self.sequence
    }

    /// `set(m_j)` as sorted variable indices; empty for the first generator.
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set_names(&self, j: usize) -> Vec<String> {
        self.sets[j]
            .iter()
            .map(|&v| self.ideal.ring().name(v).to_string())
            .collect()
    }

    /// `Σ_m C(|set(m)|, k)`, the total k-th Betti number predicted by the order.
    pub fn betti_count(&self, k: usize) -> u128 {
        self.sets.iter().map(|s| binomial(s.len(), k)).sum()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Where an order stops having linear quotients. `position` is 1-based and
/// `witness` is a minimal generator of the colon of degree at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderFailure {
    pub position: usize,
    pub generator: Monomial,
    pub witness: Monomial,
}

fn check_permutation(ideal: &MonomialIdeal, seq: &[Monomial]) -> Result<()> {
    let ring = ideal.ring();
    let fmt = |m: &Monomial| {
        if m.nvars() == ring.len() {
            ring.format(m)
        } else {
            format!("{:?}", m.exponents())
        }
    };
    if seq.iter().any(|m| m.nvars() != ring.len()) {
        return Err(Error::RingMismatch);
    }
    let mut seen = HashSet::new();
    for m in seq {
        if !seen.insert(m) {
            return Err(Error::NotPermutation(format!("`{}` occurs twice", fmt(m))));
        }
        if !ideal.is_minimal_generator(m) {
            return Err(Error::NotPermutation(format!("`{}` is not a minimal generator", fmt(m))));
        }
    }
    if seq.len() != ideal.len() {
        return Err(Error::NotPermutation(format!(
            "{} of {} generators listed",
            seq.len(),
            ideal.len()
        )));
    }
    Ok(())
}

/// Checks that `seq` gives linear quotients, computing every colon.
pub fn verify_order(
    ideal: &MonomialIdeal,
    seq: &[Monomial],
) -> Result<std::result::Result<LinearQuotientOrder, OrderFailure>> {
    check_permutation(ideal, seq)?;
    let mut sets = Vec::with_capacity(seq.len());
    for (j, m) in seq.iter().enumerate() {
        let colon = minimalize(seq[..j].iter().map(|p| p.colon_raw(m)).collect());
        if let Some(bad) = colon.iter().find(|c| c.degree() != 1) {
            return Ok(Err(OrderFailure {
                position: j + 1,
                generator: m.clone(),
                witness: bad.clone(),
            }));
        }
        let mut set: Vec<usize> = colon.iter().flat_map(|c| c.support()).collect();
        set.sort_unstable();
        sets.push(set);
    }
    Ok(Ok(LinearQuotientOrder {
        ideal: ideal.clone(),
        sequence: seq.to_vec(),
        sets,
    }))
}

/// Generators sorted lex-descending under `order`.
pub fn lex_order(ideal: &MonomialIdeal, order: &VarOrder) -> Vec<Monomial> {
    ideal.lex_sorted(order)
}

/// Searches all generator orders for one with linear quotients.
///
/// Whether a generator may follow a prefix depends only on the set of
/// generators in the prefix, so the search runs over subsets and remembers
/// the dead ones. `None` means no order exists.
pub fn find_order(ideal: &MonomialIdeal, cfg: &Config) -> Result<Option<LinearQuotientOrder>> {
    let gens = ideal.generators();
    let r = gens.len();
    crate::config::Caps::check("order-search generator", cfg.caps.max_order_search.min(32), r)?;
    if ideal.ring().len() > 64 {
        return Err(Error::CapExceeded {
            what: "variable",
            limit: 64,
            actual: ideal.ring().len(),
        });
    }
    if r == 0 {
        return Ok(verify_order(ideal, &[])?.ok());
    }
    // colon[i][j] = support of g_i : g_j, with its degree
    let colon: Vec<Vec<(u64, u32)>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let c = gens[i].colon_raw(&gens[j]);
                    (c.support_mask(), c.degree())
                })
                .collect()
        })
        .collect();
    let search = Search { colon: &colon, r };
    let found = cfg.exec.find_map_first((0..r).collect(), |first| {
        let mut dead = HashSet::new();
        let mut path = vec![first];
        search.extend(1 << first, &mut path, &mut dead).then_some(path)
    });
    match found {
        Some(path) => {
            let seq: Vec<Monomial> = path.into_iter().map(|i| gens[i].clone()).collect();
            Ok(verify_order(ideal, &seq)?.ok())
        }
        None => Ok(None),
    }
}

struct Search<'a> {
    colon: &'a [Vec<(u64, u32)>],
    r: usize,
}

impl Search<'_> {
    fn admissible(&self, chosen: u32, j: usize) -> bool {
        let members = (0..self.r).filter(|&i| chosen >> i & 1 == 1);
        let linear: u64 = members
            .clone()
            .filter(|&i| self.colon[i][j].1 == 1)
            .fold(0, |acc, i| acc | self.colon[i][j].0);
        members.into_iter().all(|i| self.colon[i][j].0 & linear != 0)
    }

    fn extend(&self, chosen: u32, path: &mut Vec<usize>, dead: &mut HashSet<u32>) -> bool {
        if path.len() == self.r {
            return true;
        }
        if dead.contains(&chosen) {
            return false;
        }
        for j in 0..self.r {
            if chosen >> j & 1 == 0 && self.admissible(chosen, j) {
                path.push(j);
                if self.extend(chosen | 1 << j, path, dead) {
                    return true;
                }
                path.pop();
            }
        }
        dead.insert(chosen);
        false
    }
}

/// `∪_i (N(v_i) \ C)` over all apexes, in the canonical vertex order.
pub fn set_formula<S: AsRef<str>>(gpi: &CliqueWhiskeredGraph, cover: &[S]) -> Result<Vec<String>> {
    let g = gpi.graph();
    if !is_minimal_vertex_cover(g, cover)? {
        return Err(Error::NotMinimalCover(
            cover.iter().map(|s| s.as_ref().to_string()).collect(),
        ));
    }
    let inside: HashSet<usize> = cover
        .iter()
        .map(|s| g.index_of(s.as_ref()))
        .collect::<Result<_>>()?;
    let mut out: Vec<usize> = gpi
        .cliques()
        .iter()
        .flat_map(|c| g.neighbors(c.apex).iter().copied())
        .filter(|v| !inside.contains(v))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out.into_iter().map(|i| g.label(i).to_string()).collect())
}

/// `HS_k` read off a linear-quotient order, with bookkeeping on products
/// that did not survive minimalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LqShifts {
    pub ideal: MonomialIdeal,
    /// Products `m·X_σ` arising from more than one pair `(m, σ)`.
    pub duplicates: Vec<Monomial>,
    /// Products strictly divisible by another product.
    pub discarded: Vec<Monomial>,
}

/// `minimalize{ m·X_σ : σ ⊆ set(m), |σ| = k }`.
pub fn hs_via_linear_quotients(order: &LinearQuotientOrder, k: usize) -> Result<LqShifts> {
    let ideal = order.ideal();
    if !ideal.is_zero() && ideal.generation_degree().is_none() {
        return Err(Error::NotEquigenerated);
    }
    let mut products = Vec::new();
    for (m, set) in order.sequence.iter().zip(&order.sets) {
        for sigma in subsets_of_size(set, k) {
            let mut p = m.clone();
            for v in sigma {
                p.exps_mut()[v] += 1;
            }
            products.push(p);
        }
    }
    let mut seen = HashSet::new();
    let mut duplicates = Vec::new();
    for p in &products {
        if !seen.insert(p) && !duplicates.contains(p) {
            duplicates.push(p.clone());
        }
    }
    let minimal = minimalize(products.clone());
    let keep: HashSet<&Monomial> = minimal.iter().collect();
    let mut discarded: Vec<Monomial> = seen.into_iter().filter(|p| !keep.contains(p)).cloned().collect();
    discarded.sort_by(|a, b| b.cmp(a));
    duplicates.sort_by(|a, b| b.cmp(a));
    Ok(LqShifts {
        ideal: MonomialIdeal::new(ideal.ring().clone(), minimal)?,
        duplicates,
        discarded,
    })
}

fn subsets_of_size(set: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(set: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..set.len() {
            if set.len() - i < k - cur.len() {
                break;
            }
            cur.push(set[i]);
            rec(set, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(set, k, 0, &mut cur, &mut out);
    out
}

/// A generator `α` with `v_i | α`, `w_ij ∤ α` whose exchange `w_ij·α/v_i`
/// is not a minimal generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub alpha: Monomial,
    pub apex: String,
    pub member: String,
}

/// Runs the apex exchange over every generator of `hs`, an ideal over the
/// ring of `gpi`.
pub fn exchange_violation(gpi: &CliqueWhiskeredGraph, hs: &MonomialIdeal) -> Option<ExchangeViolation> {
    let g = gpi.graph();
    for alpha in hs.generators() {
        for c in gpi.cliques() {
            if alpha.exponent(c.apex) == 0 {
                continue;
            }
            for &w in &c.members {
                if alpha.exponent(w) != 0 {
                    continue;
                }
                let mut swapped = alpha.clone();
                swapped.exps_mut()[c.apex] -= 1;
                swapped.exps_mut()[w] += 1;
                if !hs.is_minimal_generator(&swapped) {
                    return Some(ExchangeViolation {
                        alpha: alpha.clone(),
                        apex: g.label(c.apex).to_string(),
                        member: g.label(w).to_string(),
                    });
                }
            }
        }
    }
    None
}

/// The exchange property for `HS_k(J(G^π))` computed by the Betti oracle.
pub fn exchange_check(gpi: &CliqueWhiskeredGraph, k: usize, cfg: &Config) -> Result<bool> {
    let j = cover_ideal(gpi.graph(), cfg)?;
    let hs = crate::resolution::hs_from_betti(&j, k, cfg)?;
    Ok(exchange_violation(gpi, &hs).is_none())
}

/// A pair `u >lex v` with first difference at variable `t` for which no
/// later `x_j | v` gives `x_t·v/x_j ∈ G(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpmViolation {
    pub u: Monomial,
    pub v: Monomial,
    pub t: usize,
}

/// The weakly polymatroidal exchange test under `order`, by direct
/// inspection of every lex-comparable pair of generators.
pub fn weakly_polymatroidal_violation(
    ideal: &MonomialIdeal,
    order: &VarOrder,
    cfg: &Config,
) -> Option<WpmViolation> {
    let sorted = lex_order(ideal, order);
    let perm = order.as_slice();
    let gens: HashSet<&Monomial> = ideal.generators().iter().collect();
    cfg.exec.find_map_first((0..sorted.len()).collect(), |a| {
        let u = &sorted[a];
        for v in &sorted[a + 1..] {
            let Some(pos) = perm.iter().position(|&x| u.exponent(x) != v.exponent(x)) else {
                continue;
            };
            let t = perm[pos];
            let ok = perm[pos + 1..].iter().any(|&j| {
                if v.exponent(j) == 0 {
                    return false;
                }
                let mut w = v.clone();
                w.exps_mut()[j] -= 1;
                w.exps_mut()[t] += 1;
                gens.contains(&w)
            });
            if !ok {
                return Some(WpmViolation {
                    u: u.clone(),
                    v: v.clone(),
                    t,
                });
            }
        }
        None
    })
}

pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal, order: &VarOrder, cfg: &Config) -> bool {
    weakly_polymatroidal_violation(ideal, order, cfg).is_none()
}

/// Largest ring for [`find_weakly_polymatroidal_order`].
pub const WPM_ORDER_SEARCH_LIMIT: usize = 8;

/// Tries every variable order; only for rings with at most
/// [`WPM_ORDER_SEARCH_LIMIT`] variables.
pub fn find_weakly_polymatroidal_order(ideal: &MonomialIdeal, cfg: &Config) -> Result<Option<VarOrder>> {
    let n = ideal.ring().len();
    crate::config::Caps::check("order-search variable", WPM_ORDER_SEARCH_LIMIT, n)?;
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut perms);
    Ok(cfg.exec.find_map_first(perms, |p| {
        let order = VarOrder::new(p).expect("generated permutation");
        weakly_polymatroidal_violation(ideal, &order, &Config { exec: crate::config::Exec::Sequential, ..*cfg })
            .is_none()
            .then_some(order)
    }))
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Which simplicial base vertex the chordal recursion splits on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SimplicialChoice {
    /// The simplicial vertex lowest in the canonical order.
    #[default]
    Last,
    /// The simplicial vertex highest in the canonical order.
    First,
}

/// Generator order of `HS_k(J(G^π))` for a chordal base, built recursively
/// from a split at a simplicial base vertex `w`:
/// `a·f_1 > .. > a·f_p > b·g_θ.. > c·e_1 > .. > c·e_s` with `a = X_N[w]`,
/// `b = w`, `c = X_N(w)`. The order is returned unverified.
pub fn chordal_hs_order(
    gpi: &CliqueWhiskeredGraph,
    k: usize,
    choice: SimplicialChoice,
    cfg: &Config,
) -> Result<Vec<Monomial>> {
    if !gpi.base().is_chordal() {
        return Err(Error::NotChordal);
    }
    chordal_rec(gpi, k, choice, cfg)
}

fn chordal_rec(
    gpi: &CliqueWhiskeredGraph,
    k: usize,
    choice: SimplicialChoice,
    cfg: &Config,
) -> Result<Vec<Monomial>> {
    let g = gpi.graph();
    if k == 0 {
        return Ok(cover_ideal(g, cfg)?.generators().to_vec());
    }
    if g.num_edges() == 0 {
        return Ok(Vec::new());
    }
    let simplicial = gpi.base().simplicial_vertices();
    let pick = match choice {
        SimplicialChoice::Last => simplicial.last(),
        SimplicialChoice::First => simplicial.first(),
    };
    let w = pick.expect("a chordal graph has a simplicial vertex").clone();
    let wi = g.index_of(&w)?;
    let closed = g.neighborhood(&w, true)?;
    let open = g.neighborhood(&w, false)?;
    let ring = g.ring();
    let a = ring.product(&closed)?;
    let b = Monomial::variable(ring.len(), wi);
    let c = ring.product(&open)?;

    let minus_closed = gpi.delete(&closed)?;
    let minus_w = gpi.delete(&[w.as_str()])?;
    let f = lift(&chordal_rec(&minus_closed, k - 1, choice, cfg)?, minus_closed.graph(), &ring, &a)?;
    let gs = lift(&chordal_rec(&minus_w, k, choice, cfg)?, minus_w.graph(), &ring, &b)?;
    let e = lift(&chordal_rec(&minus_closed, k, choice, cfg)?, minus_closed.graph(), &ring, &c)?;

    let a_block: HashSet<&Monomial> = f.iter().collect();
    let mut seq: Vec<Monomial> = f.clone();
    seq.extend(gs.into_iter().filter(|m| !a_block.contains(m)));
    seq.extend(e);
    let minimal: HashSet<Monomial> = minimalize(seq.clone()).into_iter().collect();
    let mut seen = HashSet::new();
    Ok(seq
        .into_iter()
        .filter(|m| minimal.contains(m) && seen.insert(m.clone()))
        .collect())
}

fn lift(
    gens: &[Monomial],
    sub: &crate::graph::Graph,
    ring: &Ring,
    factor: &Monomial,
) -> Result<Vec<Monomial>> {
    let map = embedding(&sub.ring(), ring)?;
    gens.iter()
        .map(|m| Ok(map_monomial(m, &map, ring.len())?.mul_raw(factor)))
        .collect()
}
