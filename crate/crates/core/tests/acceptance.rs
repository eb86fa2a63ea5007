//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line.
//!
//! Run with `cargo test -p oed --test acceptance -- --nocapture --test-threads=1`.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use oed::bench::run_bench;
use oed::verify::{labelled_graphs, random_trial_graph};
use oed::{
    brute_force_vc_count, check_properties, delta_by_components, delta_graycode, delta_naive,
    gen_family, inclusion_exclusion_direct, independent_set_count, strip_isolated,
    vc_count_reduction, w_polynomial, CoverCount, Engine, EngineOptions, Family, Graph,
};

const SEED: u64 = 20_240_601;

fn verdict(id: &str, what: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] AC{id}: {what}");
    for f in failures.iter().take(10) {
        println!("        {f}");
    }
    assert!(
        failures.is_empty(),
        "AC{id} failed with {} failures",
        failures.len()
    );
}

fn random_corpus(stream: u64, count: usize, n_max: usize, m_max: usize) -> Vec<Graph> {
    (0..count)
        .map(|t| random_trial_graph(SEED ^ stream, t, n_max, m_max))
        .collect()
}

#[test]
fn ac1_exhaustive_reduction_small_graphs() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=5 {
        for g in labelled_graphs(n) {
            checked += 1;
            let reduction = vc_count_reduction(&g).unwrap();
            let brute = brute_force_vc_count(&g).unwrap();
            let independent = independent_set_count(&g).unwrap();
            if reduction != brute || independent != brute {
                failures.push(format!(
                    "{g}: reduction {reduction}, brute {brute}, independent {independent}"
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}"));
    }
    verdict(
        "1",
        &format!("{checked} labelled graphs on <= 5 vertices, reduction = brute = independent in {elapsed:.2?}"),
        &failures,
    );
    assert_eq!(checked, 1 + 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn ac2_hardness_class_instances() {
    let mut failures = Vec::new();
    // Frozen from a standalone 2^8 and 2^12 subset scan.
    for (family, size, expected) in [(Family::CubeQ3, 0, 35u64), (Family::Prism, 6, 199)] {
        let g = gen_family(family, size).unwrap();
        let props = check_properties(&g);
        if props.regular_degree != Some(3) || !props.is_bipartite {
            failures.push(format!("{family}: not 3-regular bipartite"));
        }
        let expected = CoverCount::from(expected);
        let counts = [
            ("reduction", vc_count_reduction(&g).unwrap()),
            ("brute", brute_force_vc_count(&g).unwrap()),
            ("independent", independent_set_count(&g).unwrap()),
        ];
        for (method, got) in counts {
            if got != expected {
                failures.push(format!("{family}({size}) {method}: {got} != {expected}"));
            }
        }
    }
    verdict(
        "2",
        "cube_q3 -> 35 and prism(6) -> 199 by all three methods",
        &failures,
    );
}

#[test]
fn ac3_census_completeness() {
    let mut failures = Vec::new();
    let corpus = random_corpus(3, 200, 12, 20);
    for g in &corpus {
        let m = g.edge_count();
        for p in [delta_naive(g).unwrap(), delta_graycode(g).unwrap()] {
            let total = p.census_total().unwrap();
            if total != (BigUint::one() << m) - 1u32 {
                failures.push(format!("{g}: census total {total}"));
            }
            let expected = if m >= 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            if p.signed_sum() != expected {
                failures.push(format!("{g}: signed sum {}", p.signed_sum()));
            }
        }
    }
    verdict(
        "3",
        "200 random graphs: sum(O+E) = 2^m - 1, sum(delta) = 1",
        &failures,
    );
}

#[test]
fn ac4_engine_agreement_and_multiplicativity() {
    let mut failures = Vec::new();
    let mut corpus = random_corpus(4, 80, 12, 20);
    // Twenty guaranteed-disconnected instances built from pairs of small graphs.
    for (a, b) in random_corpus(40, 20, 6, 10)
        .iter()
        .zip(&random_corpus(41, 20, 6, 10))
    {
        corpus.push(a.disjoint_union(b));
    }
    let disconnected = corpus
        .iter()
        .filter(|g| !check_properties(g).is_connected)
        .count();
    if disconnected < 20 {
        failures.push(format!("only {disconnected} disconnected instances"));
    }
    for g in &corpus {
        assert!(g.vertex_count() <= 12 && g.edge_count() <= 20);
        let naive = delta_naive(g).unwrap();
        let gray = delta_graycode(g).unwrap();
        let comp = delta_by_components(g).unwrap();
        if naive.delta() != gray.delta() || naive.delta() != comp.delta() {
            failures.push(format!("{g}: engines disagree"));
        }
    }

    let lefts = random_corpus(42, 50, 6, 10);
    let rights = random_corpus(43, 50, 6, 10);
    for (a, b) in lefts.iter().zip(&rights) {
        let union = a.disjoint_union(b);
        let product =
            &w_polynomial(&delta_naive(a).unwrap()) * &w_polynomial(&delta_naive(b).unwrap());
        if w_polynomial(&delta_by_components(&union).unwrap()) != product {
            failures.push(format!("W not multiplicative for {a} + {b}"));
        }
    }
    verdict(
        "4",
        &format!("3 engines agree on {} graphs ({disconnected} disconnected); W multiplicative on 50 pairs", corpus.len()),
        &failures,
    );
}

#[test]
fn ac5_inclusion_exclusion_bridge() {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut t = 0;
    while checked < 100 {
        let g = strip_isolated(&random_trial_graph(SEED ^ 5, t, 12, 18)).stripped;
        t += 1;
        if !(1..=18).contains(&g.edge_count()) {
            continue;
        }
        checked += 1;
        let direct = BigInt::from(inclusion_exclusion_direct(&g).unwrap());
        let census = delta_naive(&g).unwrap().weighted_sum();
        let complement = BigInt::from(BigUint::one() << g.vertex_count())
            - BigInt::from(brute_force_vc_count(&g).unwrap().into_inner());
        if direct != census || census != complement {
            failures.push(format!(
                "{g}: direct {direct}, census {census}, 2^n - covers {complement}"
            ));
        }
    }
    verdict(
        "5",
        "100 graphs: inclusion-exclusion = sum delta_k 2^(n-k) = 2^n - covers",
        &failures,
    );
}

#[test]
fn ac6_isolated_vertex_factor() {
    let mut failures = Vec::new();
    let corpus = random_corpus(6, 50, 12, 20);
    for (i, g) in corpus.iter().enumerate() {
        let core = strip_isolated(g).stripped;
        let t = 1 + i % 5;
        let padded = core.with_isolated(t);
        let got = vc_count_reduction(&padded).unwrap().into_inner();
        let base = vc_count_reduction(&core).unwrap().into_inner();
        if got != &base << t {
            failures.push(format!("{core} + {t} isolated: {got} != 2^{t} * {base}"));
        }
        if padded.vertex_count() <= 16 && brute_force_vc_count(&padded).unwrap().into_inner() != got
        {
            failures.push(format!("{core} + {t} isolated: brute force disagrees"));
        }
    }
    verdict(
        "6",
        "50 graphs with 1..5 isolated vertices scale by 2^t",
        &failures,
    );
}

#[test]
fn ac7_gray_code_performance_floor() {
    let g = gen_family(Family::Prism, 8).unwrap();
    assert_eq!(g.edge_count(), 24);
    let opts = EngineOptions { threads: 1 };
    let records = run_bench(&g, &[Engine::Naive, Engine::Gray], 1, &opts).unwrap();
    let naive = &records[0];
    let gray = &records[1];
    let mut failures = Vec::new();
    for r in &records {
        if r.subsets_visited != (1 << 24) - 1 {
            failures.push(format!("{} visited {}", r.engine, r.subsets_visited));
        }
    }
    if gray.wall_time > 30.0 {
        failures.push(format!("gray took {:.2}s", gray.wall_time));
    }
    if gray.wall_time >= naive.wall_time {
        failures.push(format!(
            "gray {:.3}s not faster than naive {:.3}s",
            gray.wall_time, naive.wall_time
        ));
    }
    if naive.profile_hash != gray.profile_hash {
        failures.push("profiles differ".into());
    }
    verdict(
        "7",
        &format!(
            "prism(8), 2^24 - 1 subsets: gray {:.3}s vs naive {:.3}s",
            gray.wall_time, naive.wall_time
        ),
        &failures,
    );
}
