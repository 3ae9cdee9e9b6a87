use homshift::config::Config;
use homshift::corpus::random_instance;
use homshift::covers::{cover_ideal, is_minimal_vertex_cover, minimal_vertex_covers, minimal_vertex_covers_brute_force};
use homshift::io::{ideal_to_json, parse_graph, parse_ideal, whiskered_to_json, GraphInput};
use homshift::linear_quotients::{find_order, hs_via_linear_quotients, verify_order};
use homshift::pipelines::{linear_quotient_family, shift_family, Route};
use homshift::resolution::{betti_table, hs_from_betti};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn covers_match_brute_force(seed in any::<u64>()) {
        let gpi = random_instance(seed).unwrap().gpi;
        let g = gpi.graph();
        let fast = minimal_vertex_covers(g, &Config::default()).unwrap();
        let slow = minimal_vertex_covers_brute_force(g).unwrap();
        prop_assert_eq!(fast.labels(), slow.labels());
        for c in fast.labels() {
            prop_assert!(is_minimal_vertex_cover(g, &c).unwrap());
        }
    }

    #[test]
    fn whiskered_json_round_trips(seed in any::<u64>()) {
        let gpi = random_instance(seed).unwrap().gpi;
        let text = whiskered_to_json(&gpi).to_string();
        prop_assert_eq!(parse_graph(&text).unwrap(), GraphInput::Whiskered(gpi));
    }

    #[test]
    fn ideal_json_round_trips(seed in any::<u64>()) {
        let gpi = random_instance(seed).unwrap().gpi;
        let j = cover_ideal(gpi.graph(), &Config::default()).unwrap();
        prop_assert_eq!(parse_ideal(&ideal_to_json(&j).to_string()).unwrap(), j);
    }

    #[test]
    fn sequential_and_parallel_agree(seed in any::<u64>()) {
        let gpi = random_instance(seed).unwrap().gpi;
        let j = cover_ideal(gpi.graph(), &Config::default()).unwrap();
        prop_assume!(j.len() <= 14);
        let par = betti_table(&j, &Config::default());
        let seq = betti_table(&j, &Config::sequential());
        match (par, seq) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.entries(), b.entries()),
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
    }
}

#[test]
fn routes_agree_beyond_the_acceptance_corpus() {
    let cfg = Config::default();
    let mut compared = 0;
    for seed in 1_000..1_060 {
        let gpi = random_instance(seed).unwrap().gpi;
        let Ok(oracle) = shift_family(&gpi, &cfg) else { continue };
        if oracle.route != Route::Oracle {
            continue;
        }
        let lq = linear_quotient_family(&gpi, &cfg).unwrap();
        assert_eq!(oracle.shifts, lq.shifts, "seed {seed}");
        compared += 1;
    }
    assert!(compared >= 40, "only {compared} instances fit the oracle");
}

#[test]
fn found_orders_verify_and_reproduce_shifts() {
    let cfg = Config::default();
    for seed in 0..30 {
        let gpi = random_instance(seed).unwrap().gpi;
        let j = cover_ideal(gpi.graph(), &cfg).unwrap();
        if j.len() > cfg.caps.max_order_search {
            continue;
        }
        let order = find_order(&j, &cfg).unwrap().expect("cover ideals of clique-whiskered graphs have linear quotients");
        let again = verify_order(&j, order.sequence()).unwrap().unwrap();
        assert_eq!(again.sets(), order.sets());
        for k in 1..=2 {
            let Ok(direct) = hs_from_betti(&j, k, &cfg) else { continue };
            assert_eq!(hs_via_linear_quotients(&order, k).unwrap().ideal, direct, "seed {seed}, k {k}");
        }
    }
}
