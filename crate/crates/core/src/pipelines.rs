//! Theorem-level pipelines over clique-whiskered graphs: the Betti-splitting
//! recursion, the whiskered-cycle counterexample and per-instance suites.
//!
//! Every homological shift ideal is produced by one of two routes. The
//! oracle route reads it off the full Betti table; the linear-quotient route
//! expands `m·X_σ` over the lex order of the canonical vertex order. The
//! oracle is used whenever the ideal fits the caps, and each report records
//! which route produced what.

use crate::config::Config;
use crate::covers::{check_apex_count, cover_ideal, minimal_vertex_covers};
use crate::error::{Error, Result};
use crate::graph::{CliqueWhiskeredGraph, Graph, Role};
use crate::linear_quotients::{
    chordal_hs_order, exchange_violation, find_order, hs_via_linear_quotients, lex_order, set_formula,
    verify_order, weakly_polymatroidal_violation, LinearQuotientOrder, SimplicialChoice,
};
use crate::monomial::{embedding, map_monomial, Monomial, MonomialIdeal, Ring, VarOrder};
use crate::resolution::{
    betti_table, euler_characteristic_check, has_linear_resolution, hs_from_betti, hs_from_table, BettiTable,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Oracle,
    LinearQuotients,
}

/// `HS_0, .., HS_pd` of one cover ideal, from a single route.
#[derive(Clone, Debug)]
pub struct ShiftFamily {
    pub ideal: MonomialIdeal,
    pub route: Route,
    pub shifts: Vec<MonomialIdeal>,
    pub table: Option<BettiTable>,
    pub order: Option<LinearQuotientOrder>,
    /// Products `m·X_σ` dropped by minimalization, summed over k.
    pub lq_discarded: usize,
    pub lq_duplicates: usize,
}

impl ShiftFamily {
    pub fn pd(&self) -> usize {
        self.shifts.len().saturating_sub(1)
    }

    /// `HS_k`, the zero ideal beyond `pd`.
    pub fn hs(&self, k: usize) -> MonomialIdeal {
        self.shifts
            .get(k)
            .cloned()
            .unwrap_or_else(|| MonomialIdeal::zero(self.ideal.ring().clone()))
    }
}

/// Verified lex order of `J(G^π)` under the canonical vertex order.
pub fn canonical_order(gpi: &CliqueWhiskeredGraph, cfg: &Config) -> Result<(MonomialIdeal, std::result::Result<LinearQuotientOrder, crate::linear_quotients::OrderFailure>)> {
    let j = cover_ideal(gpi.graph(), cfg)?;
    let lex = lex_order(&j, &VarOrder::identity(j.ring().len()));
    let verdict = verify_order(&j, &lex)?;
    Ok((j, verdict))
}

fn lq_family(j: MonomialIdeal, order: LinearQuotientOrder) -> Result<ShiftFamily> {
    let pd = order.sets().iter().map(Vec::len).max().unwrap_or(0);
    let mut shifts = Vec::with_capacity(pd + 1);
    let (mut discarded, mut duplicates) = (0, 0);
    for k in 0..=pd {
        let s = hs_via_linear_quotients(&order, k)?;
        discarded += s.discarded.len();
        duplicates += s.duplicates.len();
        shifts.push(s.ideal);
    }
    Ok(ShiftFamily {
        ideal: j,
        route: Route::LinearQuotients,
        shifts,
        table: None,
        order: Some(order),
        lq_discarded: discarded,
        lq_duplicates: duplicates,
    })
}

fn oracle_family(j: MonomialIdeal, cfg: &Config) -> Result<ShiftFamily> {
    let table = betti_table(&j, cfg)?;
    let pd = table.projective_dimension()?;
    let shifts = (0..=pd).map(|k| hs_from_table(&table, k)).collect();
    Ok(ShiftFamily {
        ideal: j,
        route: Route::Oracle,
        shifts,
        table: Some(table),
        order: None,
        lq_discarded: 0,
        lq_duplicates: 0,
    })
}

/// All shift ideals of `J(G^π)` by the route policy: the oracle when the
/// ideal fits the caps, otherwise linear quotients along the canonical lex
/// order.
pub fn shift_family(gpi: &CliqueWhiskeredGraph, cfg: &Config) -> Result<ShiftFamily> {
    let j = cover_ideal(gpi.graph(), cfg)?;
    if j.len() <= cfg.caps.max_generators {
        match oracle_family(j.clone(), cfg) {
            Err(Error::CapExceeded { .. }) => {}
            other => return other,
        }
    }
    linear_quotient_family(gpi, cfg)
}

/// All shift ideals of `J(G^π)` by the linear-quotient route.
pub fn linear_quotient_family(gpi: &CliqueWhiskeredGraph, cfg: &Config) -> Result<ShiftFamily> {
    let (j, verdict) = canonical_order(gpi, cfg)?;
    let order = verdict.map_err(|f| {
        Error::InvalidArgument(format!(
            "canonical lex order fails at position {} with {}",
            f.position,
            j.ring().format(&f.witness)
        ))
    })?;
    lq_family(j, order)
}

fn embed_scaled(i: &MonomialIdeal, ring: &Ring, factor: &Monomial) -> Result<Vec<Monomial>> {
    let map = embedding(i.ring(), ring)?;
    i.generators()
        .iter()
        .map(|m| Ok(map_monomial(m, &map, ring.len())?.mul_raw(factor)))
        .collect()
}

fn base_vertex(gpi: &CliqueWhiskeredGraph, w: &str) -> Result<usize> {
    let wi = gpi.graph().index_of(w)?;
    if gpi.is_apex(wi) {
        return Err(Error::ApexVertex(w.to_string()));
    }
    Ok(wi)
}

/// The three-term sum
/// `X_N[w]·HS_{k-1}(J(G \ N[w])) + w·HS_k(J(G \ w)) + X_N(w)·HS_k(J(G \ N[w]))`
/// given shift families of the two subgraphs.
fn splitting_sum(
    gpi: &CliqueWhiskeredGraph,
    w: &str,
    k: usize,
    minus_closed: &ShiftFamily,
    minus_w: &ShiftFamily,
) -> Result<MonomialIdeal> {
    let g = gpi.graph();
    let ring = g.ring();
    let a = ring.product(&g.neighborhood(w, true)?)?;
    let b = ring.product([w])?;
    let c = ring.product(&g.neighborhood(w, false)?)?;
    let mut gens = embed_scaled(&minus_closed.hs(k - 1), &ring, &a)?;
    gens.extend(embed_scaled(&minus_w.hs(k), &ring, &b)?);
    gens.extend(embed_scaled(&minus_closed.hs(k), &ring, &c)?);
    MonomialIdeal::new(ring, gens)
}

fn split_families(gpi: &CliqueWhiskeredGraph, w: &str, cfg: &Config, oracle_only: bool) -> Result<(ShiftFamily, ShiftFamily)> {
    let closed = gpi.graph().neighborhood(w, true)?;
    let minus_closed = gpi.delete(&closed)?;
    let minus_w = gpi.delete(&[w])?;
    if oracle_only {
        Ok((
            oracle_family(cover_ideal(minus_closed.graph(), cfg)?, cfg)?,
            oracle_family(cover_ideal(minus_w.graph(), cfg)?, cfg)?,
        ))
    } else {
        Ok((shift_family(&minus_closed, cfg)?, shift_family(&minus_w, cfg)?))
    }
}

/// `HS_k(J(G^π))` assembled from the Betti splitting at the base vertex `w`,
/// with every subgraph shift ideal computed by the Betti oracle.
pub fn betti_splitting_hs(gpi: &CliqueWhiskeredGraph, w: &str, k: usize, cfg: &Config) -> Result<MonomialIdeal> {
    base_vertex(gpi, w)?;
    if k == 0 {
        return Err(Error::InvalidArgument("the splitting identity needs k >= 1".into()));
    }
    let (minus_closed, minus_w) = split_families(gpi, w, cfg, true)?;
    splitting_sum(gpi, w, k, &minus_closed, &minus_w)
}

/// Whether [`betti_splitting_hs`] agrees with `HS_k` read off the Betti table.
pub fn betti_splitting_check(gpi: &CliqueWhiskeredGraph, w: &str, k: usize, cfg: &Config) -> Result<bool> {
    let direct = hs_from_betti(&cover_ideal(gpi.graph(), cfg)?, k, cfg)?;
    Ok(betti_splitting_hs(gpi, w, k, cfg)? == direct)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    /// Facts worth recording that are not pass/fail checks.
    pub observations: serde_json::Map<String, Value>,
    pub millis: f64,
}

impl TheoremReport {
    fn new(subject: impl Into<String>) -> TheoremReport {
        TheoremReport {
            subject: subject.into(),
            mode: None,
            seed: None,
            checks: Vec::new(),
            observations: Default::default(),
            millis: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> impl Iterator<Item = &Check> {
        let name = name.to_string();
        self.checks.iter().filter(move |c| c.name == name)
    }

    /// Runs `f`, timing it. `Ok(None)` is a pass, `Ok(Some(w))` a failure with
    /// witness `w`.
    fn run(
        &mut self,
        name: &str,
        k: Option<usize>,
        route: Option<Route>,
        f: impl FnOnce() -> Result<Option<Value>>,
    ) -> Result<()> {
        let start = Instant::now();
        let outcome = f();
        let millis = start.elapsed().as_secs_f64() * 1e3;
        let (status, witness) = match outcome {
            Ok(None) => (Status::Pass, Value::Null),
            Ok(Some(w)) => (Status::Fail, w),
            Err(e @ Error::CapExceeded { .. }) => (Status::Skipped, json!({ "reason": e.to_string() })),
            Err(e) => return Err(e),
        };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            k,
            route,
            witness,
            millis,
        });
        Ok(())
    }

    fn skip(&mut self, name: &str, k: Option<usize>, reason: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            status: Status::Skipped,
            k,
            route: None,
            witness: json!({ "reason": reason }),
            millis: 0.0,
        });
    }
}

fn fmt_all(ring: &Ring, ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| ring.format(m)).collect()
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!(i.format_generators())
}

/// Whether two ideals agree; otherwise a witness listing both sides.
fn compare(left_name: &str, left: &MonomialIdeal, right_name: &str, right: &MonomialIdeal) -> Option<Value> {
    (left != right).then(|| json!({ left_name: ideal_json(left), right_name: ideal_json(right) }))
}

/// `∏ x_i · <y_1 y_3 .. y_{2k-1}, y_2 y_4 .. y_{2k}>` over the ring of `G_k`.
pub fn counterexample_closed_form(k: usize) -> Result<MonomialIdeal> {
    let gk = CliqueWhiskeredGraph::whiskered_cycle(k)?;
    let ring = gk.graph().ring();
    let xs: Vec<String> = (1..=2 * k).map(|i| format!("x{i}")).collect();
    let odd: Vec<String> = (1..=2 * k).step_by(2).map(|i| format!("y{i}")).collect();
    let even: Vec<String> = (2..=2 * k).step_by(2).map(|i| format!("y{i}")).collect();
    let x = ring.product(&xs)?;
    let gens = vec![ring.product(&odd)?.mul_raw(&x), ring.product(&even)?.mul_raw(&x)];
    MonomialIdeal::new(ring, gens)
}

/// The five claims about `HS_k(J(G_k))` for the whiskered `2k`-cycle: the
/// closed form, generation degree `3k`, regularity `4k - 1`, no linear
/// resolution and no linear quotients. For `k = 2` the closed form is checked
/// on both routes; beyond that only the linear-quotient route is used and the
/// oracle runs on the resulting two-generator ideal.
pub fn verify_counterexample(k: usize, cfg: &Config) -> Result<TheoremReport> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("counterexample needs k >= 2, got {k}")));
    }
    let start = Instant::now();
    let gk = CliqueWhiskeredGraph::whiskered_cycle(k)?;
    let mut report = TheoremReport::new(format!("whiskered-cycle-{}", 2 * k));
    let expected = counterexample_closed_form(k)?;
    let (j, verdict) = canonical_order(&gk, cfg)?;
    report.observations.insert("cover_ideal_generators".into(), json!(j.len()));

    let order = verdict.map_err(|f| Error::InvalidArgument(format!("lex order fails at {}", f.position)))?;
    let lq = hs_via_linear_quotients(&order, k)?;
    report.observations.insert("lq_discarded_products".into(), json!(fmt_all(j.ring(), &lq.discarded)));
    let hs = lq.ideal.clone();
    report.run("closed_form", Some(k), Some(Route::LinearQuotients), || {
        Ok(compare("computed", &hs, "expected", &expected))
    })?;
    if k == 2 {
        report.run("closed_form", Some(k), Some(Route::Oracle), || {
            Ok(compare("computed", &hs_from_betti(&j, k, cfg)?, "expected", &expected))
        })?;
    }
    report.run("generation_degree", Some(k), None, || {
        let d = hs.generation_degree();
        Ok((d != Some(3 * k as u32)).then(|| json!({ "degree": d, "expected": 3 * k })))
    })?;
    report.run("regularity", Some(k), Some(Route::Oracle), || {
        let reg = betti_table(&hs, cfg)?.regularity()?;
        Ok((reg != 4 * k as i64 - 1).then(|| json!({ "regularity": reg, "expected": 4 * k - 1 })))
    })?;
    report.run("no_linear_resolution", Some(k), Some(Route::Oracle), || {
        Ok(has_linear_resolution(&hs, cfg)?.then(|| json!({ "has_linear_resolution": true })))
    })?;
    report.run("no_linear_quotients", Some(k), None, || {
        Ok(find_order(&hs, cfg)?.map(|o| json!({ "order": fmt_all(hs.ring(), o.sequence()) })))
    })?;
    report.millis = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Generic,
    Chordal,
    CameronWalker,
    CliqueCorona,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Generic => "generic",
            Mode::Chordal => "chordal",
            Mode::CameronWalker => "cameron_walker",
            Mode::CliqueCorona => "clique_corona",
        }
    }

    pub fn parse(s: &str) -> Result<Mode> {
        match s.replace('-', "_").as_str() {
            "generic" => Ok(Mode::Generic),
            "chordal" => Ok(Mode::Chordal),
            "cameron_walker" => Ok(Mode::CameronWalker),
            "clique_corona" => Ok(Mode::CliqueCorona),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

fn shape_error(mode: Mode, reason: impl Into<String>) -> Error {
    Error::ModeShape {
        mode: mode.name(),
        reason: reason.into(),
    }
}

/// Checks the structure a mode's theorem presumes, including that the
/// canonical vertex order is the one the theorem's proof uses.
pub fn validate_mode(gpi: &CliqueWhiskeredGraph, mode: Mode) -> Result<()> {
    let g = gpi.graph();
    let base = gpi.base();
    match mode {
        Mode::Generic => Ok(()),
        Mode::Chordal => {
            if base.is_chordal() {
                Ok(())
            } else {
                Err(shape_error(mode, "base graph is not chordal"))
            }
        }
        Mode::CameronWalker => {
            let cliques = gpi.cliques();
            let m = cliques.iter().take_while(|c| c.members.len() == 2).count();
            if m == 0 || m == cliques.len() {
                return Err(shape_error(mode, "need pendant triangles followed by leaves"));
            }
            if cliques[m..].iter().any(|c| c.members.len() != 1) {
                return Err(shape_error(mode, "triangle cliques must precede all leaf cliques"));
            }
            let mut core = vec![false; g.len()];
            let mut left = vec![false; g.len()];
            for c in &cliques[..m] {
                let (w, partner) = (c.members[0], c.members[1]);
                if g.degree(partner) != 2 {
                    return Err(shape_error(mode, format!("`{}` is not a triangle tip", g.label(partner))));
                }
                core[w] = true;
                left[w] = true;
            }
            for c in &cliques[m..] {
                core[c.members[0]] = true;
            }
            let h: Graph = g.keep(|i| core[i]);
            for (a, b) in g.edge_indices() {
                if core[*a] && core[*b] && left[*a] == left[*b] {
                    return Err(shape_error(
                        mode,
                        format!("edge {{{}, {}}} does not cross the bipartition", g.label(*a), g.label(*b)),
                    ));
                }
            }
            if !h.is_connected() {
                return Err(shape_error(mode, "bipartite core is not connected"));
            }
            Ok(())
        }
        Mode::CliqueCorona => {
            for (i, c) in gpi.cliques().iter().enumerate() {
                if c.members.len() < 2 {
                    return Err(shape_error(
                        mode,
                        format!("clique {} has t = {}; the theorem needs every t_i >= 2", i + 1, c.members.len()),
                    ));
                }
                for &x in &c.members[1..] {
                    if g.degree(x) != c.members.len() {
                        return Err(shape_error(
                            mode,
                            format!("`{}` has neighbours outside its clique", g.label(x)),
                        ));
                    }
                }
            }
            Ok(())
        }
    }
}

/// Per-instance checks for every `0 <= k <= pd`, plus the property the mode's
/// theorem asserts.
pub fn theorem_suite(gpi: &CliqueWhiskeredGraph, mode: Mode, cfg: &Config) -> Result<TheoremReport> {
    theorem_suite_named(gpi, mode, "instance", None, cfg)
}

pub fn theorem_suite_named(
    gpi: &CliqueWhiskeredGraph,
    mode: Mode,
    subject: &str,
    seed: Option<u64>,
    cfg: &Config,
) -> Result<TheoremReport> {
    validate_mode(gpi, mode)?;
    let start = Instant::now();
    let mut report = TheoremReport::new(subject);
    report.mode = Some(mode);
    report.seed = seed;
    let g = gpi.graph();
    let ring = g.ring();

    let (j, verdict) = canonical_order(gpi, cfg)?;
    report.observations.insert("vertices".into(), json!(g.len()));
    report.observations.insert("cover_ideal_generators".into(), json!(j.len()));

    // Linear quotients along the canonical lex order, with set(C) equal to
    // the apex-neighbourhood formula.
    report.run("canonical_lex_order", Some(0), None, || {
        let order = match &verdict {
            Ok(o) => o,
            Err(f) => {
                return Ok(Some(json!({
                    "position": f.position,
                    "generator": ring.format(&f.generator),
                    "witness": ring.format(&f.witness),
                })))
            }
        };
        let base: Vec<usize> = gpi.base_indices();
        for (m, set) in order.sequence().iter().zip(order.sets()) {
            let cover: Vec<&str> = m.support().into_iter().map(|i| g.label(i)).collect();
            let formula = set_formula(gpi, &cover)?;
            let got: Vec<&str> = set.iter().map(|&i| g.label(i)).collect();
            if got != formula {
                return Ok(Some(json!({ "cover": cover, "set": got, "formula": formula })));
            }
            if let Some(&v) = base.iter().find(|&&v| m.exponent(v) == 0 && !set.contains(&v)) {
                return Ok(Some(json!({ "cover": cover, "base_vertex_outside_set": g.label(v) })));
            }
        }
        Ok(None)
    })?;

    report.run("apex_count", Some(0), None, || {
        for cover in minimal_vertex_covers(g, cfg)?.labels() {
            if !check_apex_count(gpi, &cover)? {
                return Ok(Some(json!({ "cover": cover })));
            }
        }
        Ok(None)
    })?;

    let family = shift_family(gpi, cfg)?;
    let pd = family.pd();
    report.observations.insert("route".into(), json!(family.route));
    report.observations.insert("pd".into(), json!(pd));
    let lq = match &verdict {
        Ok(order) => Some(lq_family(j.clone(), order.clone())?),
        Err(_) => None,
    };
    if let Some(lq) = &lq {
        report.observations.insert("lq_discarded_products".into(), json!(lq.lq_discarded));
        report.observations.insert("lq_duplicate_products".into(), json!(lq.lq_duplicates));
    }

    match (&family.table, &lq) {
        (Some(table), Some(lq)) => {
            for k in 0..=pd + 1 {
                report.run("route_equality", Some(k), None, || {
                    Ok(compare("oracle", &family.hs(k), "linear_quotients", &lq.hs(k)))
                })?;
                report.run("betti_count", Some(k), Some(Route::Oracle), || {
                    let predicted = lq.order.as_ref().expect("lq family has an order").betti_count(k);
                    let total = table.total(k) as u128;
                    Ok((predicted != total).then(|| json!({ "oracle": total, "set_sizes": predicted })))
                })?;
            }
        }
        _ => report.skip("route_equality", None, "oracle route infeasible under the caps"),
    }

    if let Some(table) = &family.table {
        report.run("euler_characteristic", None, Some(Route::Oracle), || {
            let check = euler_characteristic_check(&j, table, cfg)?;
            Ok((!check.failures.is_empty())
                .then(|| json!({ "multidegrees": fmt_all(&ring, &check.failures) })))
        })?;
        report.run("vanishing_beyond_pd", Some(pd + 1), Some(Route::Oracle), || {
            let beyond = hs_from_table(table, pd + 1);
            Ok((!beyond.is_zero()).then(|| json!({ "hs": ideal_json(&beyond) })))
        })?;
    }

    for k in 0..=pd {
        let hs = family.hs(k);
        report.run("exchange", Some(k), Some(family.route), || {
            Ok(exchange_violation(gpi, &hs).map(|v| {
                json!({ "alpha": ring.format(&v.alpha), "apex": v.apex, "member": v.member })
            }))
        })?;
    }

    for w in gpi.base_indices().into_iter().map(|i| g.label(i).to_string()) {
        let families = split_families(gpi, &w, cfg, false);
        let (minus_closed, minus_w) = match families {
            Ok(f) => f,
            Err(Error::CapExceeded { .. }) => {
                report.skip("betti_splitting", None, "subgraph shift ideals exceed the caps");
                continue;
            }
            Err(e) => return Err(e),
        };
        for k in 1..=pd + 1 {
            report.run("betti_splitting", Some(k), Some(family.route), || {
                let sum = splitting_sum(gpi, &w, k, &minus_closed, &minus_w)?;
                Ok(compare("three_term_sum", &sum, "direct", &family.hs(k))
                    .map(|mut v| {
                        v["vertex"] = json!(w);
                        v
                    }))
            })?;
        }
    }

    match mode {
        Mode::Generic => {}
        Mode::Chordal => {
            for k in 0..=pd {
                let hs = family.hs(k);
                for (name, choice) in [
                    ("chordal_order", SimplicialChoice::Last),
                    ("chordal_order_first_simplicial", SimplicialChoice::First),
                ] {
                    report.run(name, Some(k), Some(family.route), || {
                        let seq = chordal_hs_order(gpi, k, choice, cfg)?;
                        let generated = MonomialIdeal::new(ring.clone(), seq.clone())?;
                        if generated != hs {
                            return Ok(Some(json!({ "order_generates": ideal_json(&generated), "hs": ideal_json(&hs) })));
                        }
                        Ok(verify_order(&hs, &seq)?.err().map(|f| {
                            json!({
                                "position": f.position,
                                "generator": ring.format(&f.generator),
                                "witness": ring.format(&f.witness),
                                "order": fmt_all(&ring, &seq),
                            })
                        }))
                    })?;
                }
            }
        }
        Mode::CameronWalker | Mode::CliqueCorona => {
            let order = VarOrder::identity(ring.len());
            report.observations.insert("variable_order".into(), json!(g.labels()));
            for k in 0..=pd {
                let hs = family.hs(k);
                report.run("weakly_polymatroidal", Some(k), Some(family.route), || {
                    Ok(weakly_polymatroidal_violation(&hs, &order, cfg).map(|v| {
                        json!({ "u": ring.format(&v.u), "v": ring.format(&v.v), "t": ring.name(v.t) })
                    }))
                })?;
                report.run("lex_linear_quotients", Some(k), Some(family.route), || {
                    Ok(verify_order(&hs, &lex_order(&hs, &order))?.err().map(|f| {
                        json!({ "position": f.position, "witness": ring.format(&f.witness) })
                    }))
                })?;
            }
        }
    }
    report.millis = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

/// For each `k`, whether `HS_k(J(G^π))` is weakly polymatroidal under the
/// canonical vertex order. No shape requirement, so it also runs on
/// whiskered graphs where the clique-corona theorem does not apply.
pub fn weakly_polymatroidal_profile(gpi: &CliqueWhiskeredGraph, cfg: &Config) -> Result<Vec<bool>> {
    let family = shift_family(gpi, cfg)?;
    let order = VarOrder::identity(gpi.graph().len());
    Ok((0..=family.pd())
        .map(|k| weakly_polymatroidal_violation(&family.hs(k), &order, cfg).is_none())
        .collect())
}

/// Runs the suite on many instances, one job each.
pub fn batch_suite(
    instances: Vec<crate::corpus::Instance>,
    mode: Mode,
    cfg: &Config,
) -> Vec<Result<TheoremReport>> {
    cfg.exec.map(instances, |inst| {
        theorem_suite_named(&inst.gpi, mode, &inst.name, inst.seed, cfg)
    })
}

/// Role of every vertex, for reports.
pub fn role_names(gpi: &CliqueWhiskeredGraph) -> Vec<(String, String)> {
    gpi.order()
        .iter()
        .zip(gpi.roles())
        .map(|(l, r)| {
            let role = match r {
                Role::W { clique, pos } => format!("w{clique}{pos}"),
                Role::V { clique } => format!("v{clique}"),
            };
            (l.clone(), role)
        })
        .collect()
}
