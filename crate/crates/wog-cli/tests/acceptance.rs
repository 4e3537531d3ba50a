//! Acceptance gate. Each test enforces one numbered criterion; the shared
//! fuzz corpus is built once and reused. Run with `-- --nocapture` to see
//! the per-criterion summary lines.

use std::path::Path;
use std::sync::OnceLock;
use std::time::{Duration, Instant};
use wog::criteria::{self, DecideConfig, Verdict};
use wog::matching;
use wog::oracle::{self, CampaignConfig, CampaignRun, Family, InstanceConfig};
use wog::{Normalization, WeightedOrientedGraph};
use wog_cli::format;

const BOUND: usize = 24;

fn decide_cfg() -> DecideConfig {
    DecideConfig { bound: BOUND, first_matching_only: false }
}

struct Corpus {
    batches: Vec<(CampaignConfig, Vec<CampaignRun>)>,
    build_time: Duration,
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let configs = [
            CampaignConfig {
                family: Family::Whisker,
                count: 1000,
                base_seed: 1_000,
                max_n: 10,
                bound: BOUND,
            },
            CampaignConfig {
                family: Family::Bipartite,
                count: 1000,
                base_seed: 2_000,
                max_n: 10,
                bound: BOUND,
            },
            CampaignConfig {
                family: Family::GirthConstrained { min_girth: 8 },
                count: 200,
                base_seed: 3_000,
                max_n: 12,
                bound: BOUND,
            },
        ];
        let start = Instant::now();
        let batches = configs
            .into_iter()
            .map(|cfg| {
                let runs = oracle::run_campaign(&cfg).expect("campaign runs within the bound");
                (cfg, runs)
            })
            .collect();
        Corpus { batches, build_time: start.elapsed() }
    })
}

fn all_runs() -> impl Iterator<Item = &'static CampaignRun> {
    corpus().batches.iter().flat_map(|(_, runs)| runs.iter())
}

fn instance_of(cfg: &CampaignConfig, run: &CampaignRun) -> WeightedOrientedGraph {
    oracle::campaign_instance(cfg, run.index).expect("instance regenerates").1
}

fn pass(criterion: &str, detail: String) {
    println!("[PASS] {criterion}: {detail}");
}

#[test]
fn criterion_1_figure_fixtures() {
    let start = Instant::now();
    let expected = [
        ("fig1_left.json", Verdict::False, Verdict::False),
        ("fig1_right.json", Verdict::False, Verdict::False),
        ("fig2_left.json", Verdict::True, Verdict::False),
        ("fig2_right.json", Verdict::True, Verdict::False),
        ("fig3.json", Verdict::True, Verdict::True),
    ];
    for (file, unmixed, cm) in expected {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(file);
        let d = format::load_graph(&path).expect("fixture loads");
        assert_eq!(
            criteria::decide_unmixed(&d, &decide_cfg()).unwrap().verdict,
            unmixed,
            "{file} unmixedness"
        );
        assert_eq!(
            criteria::decide_cm(&d, &decide_cfg()).unwrap().verdict,
            cm,
            "{file} Cohen-Macaulayness"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "figure fixtures took {elapsed:?}");
    pass("criterion 1 (figure fixtures)", format!("5 fixtures verified in {elapsed:?}"));
}

#[test]
fn criterion_2_oracle_criteria_equivalence() {
    let c = corpus();
    let mut decided = 0usize;
    for run in all_runs() {
        assert!(run.report.consistent(), "inconsistent: {}", run.summary_line());
        for entry in &run.report.agreement {
            if entry.pair == "unmixed-decider-vs-oracle" {
                decided += 1;
                assert!(entry.agree, "oracle disagreement: {}", run.summary_line());
            }
        }
    }
    let total: usize = c.batches.iter().map(|(_, runs)| runs.len()).sum();
    assert_eq!(total, 2200);
    assert!(decided > 0, "no instance passed the gates");
    assert!(c.build_time < Duration::from_secs(300), "campaigns took {:?}", c.build_time);
    pass(
        "criterion 2 (oracle equivalence fuzz)",
        format!(
            "{total} instances, {decided} gate-decided, zero disagreements, built in {:?}",
            c.build_time
        ),
    );
}

#[test]
fn criterion_3_three_way_equivalence() {
    let mut very_well_covered_count = 0usize;
    for seed in 0..10_000u64 {
        let cfg = InstanceConfig {
            n: 4 + (seed % 5) as usize,
            edge_density: 0.15 + 0.5 * ((seed % 97) as f64) / 97.0,
            weight_prob: 0.0,
            family: Family::GirthConstrained { min_girth: 3 },
        };
        let g = oracle::random_instance(&cfg, seed).unwrap().underlying();
        let matchings = matching::enumerate_perfect_matchings(&g, BOUND).unwrap();
        let any_p = matchings.iter().any(|m| matching::has_property_p(&g, m));
        let all_p =
            !matchings.is_empty() && matchings.iter().all(|m| matching::has_property_p(&g, m));
        let vwc = matching::is_very_well_covered(&g, BOUND).unwrap();
        assert_eq!(vwc, any_p, "seed {seed}: very-well-covered vs some matching");
        assert_eq!(any_p, all_p, "seed {seed}: some matching vs all matchings");
        very_well_covered_count += usize::from(vwc);
    }
    assert!(very_well_covered_count > 0, "sample never hit a very well covered graph");
    pass(
        "criterion 3 (three-way equivalence)",
        format!(
            "10000 connected graphs on 4..=8 vertices, {very_well_covered_count} very well covered, all pairwise agreements hold"
        ),
    );
}

#[test]
fn criterion_4_equivalence_corollaries() {
    let mut konig_no4 = 0usize;
    let mut girth_gt7 = 0usize;
    for run in all_runs() {
        for entry in &run.report.agreement {
            match entry.pair.as_str() {
                "konig-no4-unmixed-iff-cm" => {
                    konig_no4 += 1;
                    assert!(entry.agree, "{}", run.summary_line());
                }
                "girth-above-7-unmixed-iff-cm" => {
                    girth_gt7 += 1;
                    assert!(entry.agree, "{}", run.summary_line());
                }
                _ => {}
            }
        }
    }
    assert!(konig_no4 > 0, "no Koenig instance without 4-cycles in the corpus");
    assert!(girth_gt7 > 0, "no girth>7 instance in the corpus");
    pass(
        "criterion 4 (equivalence corollaries)",
        format!("{konig_no4} Koenig/no-4-cycle and {girth_gt7} girth>7 instances, verdicts coincide"),
    );
}

#[test]
fn criterion_5_weight_cap_invariance() {
    let mut inflated_count = 0usize;
    for (cfg, runs) in &corpus().batches {
        for run in runs {
            let d = instance_of(cfg, run);
            let weights: Vec<u32> = d
                .weights()
                .iter()
                .enumerate()
                .map(|(v, &w)| if w > 1 { 3 + ((run.seed + v as u64) % 6) as u32 } else { 1 })
                .collect();
            if weights.iter().any(|&w| w > 2) {
                inflated_count += 1;
            }
            let inflated = WeightedOrientedGraph::from_parts(
                d.name().map(str::to_owned),
                d.labels().to_vec(),
                weights,
                d.edges().to_vec(),
                Normalization::Strict,
            )
            .expect("weighted vertices of a normalized instance are never sources or sinks");
            assert_eq!(inflated.cap_weights(), d, "capping must recover the instance");
            assert_eq!(
                criteria::decide_unmixed(&inflated, &decide_cfg()).unwrap().verdict,
                criteria::decide_unmixed(&d, &decide_cfg()).unwrap().verdict,
                "unmixedness changed under weight inflation: {}",
                run.summary_line()
            );
            assert_eq!(
                criteria::decide_cm(&inflated, &decide_cfg()).unwrap().verdict,
                criteria::decide_cm(&d, &decide_cfg()).unwrap().verdict,
                "Cohen-Macaulayness changed under weight inflation: {}",
                run.summary_line()
            );
        }
    }
    assert!(inflated_count > 0, "no instance had a weight to inflate");
    pass(
        "criterion 5 (weight-cap invariance)",
        format!("2200 instances, {inflated_count} with inflated weights, verdicts invariant"),
    );
}

#[test]
fn criterion_6_necessary_conditions() {
    let mut cm_true = 0usize;
    let mut degree_one_checked = 0usize;
    for (cfg, runs) in &corpus().batches {
        for run in runs {
            if run.report.criteria_cm != Verdict::True {
                continue;
            }
            cm_true += 1;
            let d = instance_of(cfg, run);
            assert!(
                oracle::strong_covers_are_minimal(&d, BOUND).unwrap(),
                "non-minimal strong cover on a Cohen-Macaulay instance: {}",
                run.summary_line()
            );
            let g = d.underlying();
            if matching::is_konig(&g, BOUND).unwrap() && g.isolated_vertices().is_empty() {
                degree_one_checked += 1;
                assert!(
                    g.has_degree_one_vertex(),
                    "Koenig Cohen-Macaulay instance without a degree-1 vertex: {}",
                    run.summary_line()
                );
            }
        }
    }
    assert!(cm_true > 0, "no Cohen-Macaulay instance in the corpus");
    pass(
        "criterion 6 (necessary conditions)",
        format!("{cm_true} Cohen-Macaulay instances, {degree_one_checked} checked for a degree-1 vertex"),
    );
}

#[test]
fn criterion_7_certificate_lemmas() {
    let lemma_invariants = [
        "exchange-endpoints-common-neighbor",
        "partner-pair-adjacent",
        "partner-neighborhood-containment",
        "weighted-in-neighbor-exclusion",
    ];
    let mut checked = 0usize;
    for run in all_runs() {
        if run.report.lemma_checked {
            checked += 1;
        }
        for anomaly in &run.report.anomalies {
            assert!(
                !lemma_invariants.contains(&anomaly.invariant.as_str()),
                "certificate lemma violated: {} {:?}",
                run.summary_line(),
                anomaly
            );
        }
    }
    assert!(checked > 0, "no certifying matching was ever produced");
    pass(
        "criterion 7 (certificate lemmas)",
        format!("{checked} certifying matchings checked, zero violations"),
    );
}

#[test]
fn criterion_8_depth_is_out_of_scope() {
    // Ring-theoretic depth is not computed here; criteria 1-7 are the
    // combinatorial substitute. Record the one informational probe that is
    // tracked but deliberately not a failure: matchings with the exchange
    // property may disagree about the 4-cycle condition.
    let dependent = all_runs().filter(|r| r.report.four_cycle_matching_dependent).count();
    println!(
        "[NOTE] criterion 8: depth itself is out of scope; combinatorial criteria 1-7 stand in. \
         {dependent} of 2200 instances show matching-dependent 4-cycle behavior (informational)."
    );
}
