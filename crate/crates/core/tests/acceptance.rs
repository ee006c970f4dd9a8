//! One line per acceptance criterion. Exits non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use neardomain::equivalence::{bijections, roundtrip_theorem1_near_domain, roundtrip_theorem1_phi};
use neardomain::two_transitive::{roundtrip_theorem2_action, roundtrip_theorem2_phi};
use neardomain::{
    build_group, check_derived_identities, classify, f_l_map, lemma_closed_forms, make_example,
    nearfield_census, search_phi, validate_near_domain, validate_phi, verify_example_formulas,
    ExampleSpec, Field, GroupTable, NearDomain, PhiSystem, Report,
};

type Criterion = (&'static str, fn() -> Outcome);

const AXIOM_ORDERS: [usize; 6] = [3, 4, 5, 7, 8, 9];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn standard(q: usize) -> PhiSystem {
    PhiSystem::standard(&Field::of_order(q).unwrap())
}

fn first_failure(reports: &[Report]) -> Option<String> {
    reports.iter().find(|r| !r.passed()).map(|r| r.summary())
}

fn timed(limit: Duration, elapsed: Duration, mut o: Outcome) -> Outcome {
    o.detail = format!(
        "{} in {:.3}s (limit {}s)",
        o.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    o.passed &= elapsed < limit;
    o
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut cells = 0;
    for q in AXIOM_ORDERS {
        let s = standard(q);
        for r in [validate_phi(&s), check_derived_identities(&s)] {
            cells += r.checks.iter().map(|c| c.cells).sum::<usize>();
            reports.push(r);
        }
    }
    let o = match first_failure(&reports) {
        None => Outcome::new(
            true,
            format!("F1..F4 and derived identities, {cells} cells, 0 counterexamples"),
        ),
        Some(f) => Outcome::new(false, f),
    };
    timed(Duration::from_secs(1), start.elapsed(), o)
}

fn theorem2_forward() -> Outcome {
    let start = Instant::now();
    let mut orders = Vec::new();
    for q in AXIOM_ORDERS {
        let g = match build_group(&standard(q)) {
            Ok(g) => g,
            Err(e) => return Outcome::new(false, format!("q = {q}: {e}")),
        };
        if g.order() != q * (q - 1) {
            return Outcome::new(false, format!("q = {q}: |G| = {}", g.order()));
        }
        let perms: Vec<_> = (0..g.order()).map(|i| g.permutation(i)).collect();
        if !oracle_sharply_two_transitive(q, &perms) {
            return Outcome::new(false, format!("q = {q}: some pair-to-pair count is not 1"));
        }
        orders.push(g.order());
    }
    timed(
        Duration::from_secs(5),
        start.elapsed(),
        Outcome::new(
            true,
            format!("orders {orders:?}, every ordered pair reached exactly once"),
        ),
    )
}

fn theorem2_roundtrips() -> Outcome {
    let mut runs = 0;
    for q in [3, 4, 5] {
        let s = standard(q);
        let bases = [(1, 0), (0, 1), (2, 0), (q - 1, 1)];
        let group = build_group(&s).unwrap();
        for base in bases {
            let forward = roundtrip_theorem2_phi(&s, base);
            let backward = group
                .to_permutation_action(base)
                .and_then(|p| roundtrip_theorem2_action(&p));
            match (forward, backward) {
                (Ok(f), Ok(b)) if f.passed() && b.passed() => runs += 1,
                (Ok(f), Ok(b)) => {
                    return Outcome::new(
                        false,
                        format!("q = {q}, base {base:?}: {} / {}", f.summary(), b.summary()),
                    )
                }
                (Err(e), _) | (_, Err(e)) => {
                    return Outcome::new(false, format!("q = {q}, base {base:?}: {e}"))
                }
            }
        }
    }
    Outcome::new(
        true,
        format!("{runs} (q, base pair) runs, both directions table-exact, 0 mismatches"),
    )
}

fn theorem1_sweep() -> Outcome {
    let start = Instant::now();
    let mut maps = 0;
    for q in [3, 4, 5] {
        let s = standard(q);
        let r = roundtrip_theorem1_phi(&s);
        if !r.passed() {
            return Outcome::new(false, r.summary());
        }
        for l in bijections(q) {
            let d = f_l_map(&s, &l).unwrap();
            match roundtrip_theorem1_near_domain(&d) {
                Ok(r) if r.passed() => maps += 1,
                Ok(r) => {
                    return Outcome::new(false, format!("q = {q}, L = {l:?}: {}", r.summary()))
                }
                Err(e) => return Outcome::new(false, format!("q = {q}, L = {l:?}: {e}")),
            }
        }
    }
    timed(
        Duration::from_secs(10),
        start.elapsed(),
        Outcome::new(
            true,
            format!("{maps} maps L, each against every L', 0 exceptions"),
        ),
    )
}

/// Every near-domain the tests build: both families over every pinned order
/// up to 9, and `F_L` of the standard systems for every `L` at n ≤ 5.
fn corpus() -> Vec<(String, NearDomain)> {
    let mut out = Vec::new();
    for q in AXIOM_ORDERS {
        for a in 1..q {
            out.push((
                format!("scaling GF({q}) a={a}"),
                make_example(&ExampleSpec::scaling(q, a)).unwrap(),
            ));
        }
        out.push((
            format!("inverse GF({q})"),
            make_example(&ExampleSpec::inverse(q)).unwrap(),
        ));
    }
    for q in [3, 4, 5] {
        let s = standard(q);
        for l in bijections(q) {
            out.push((format!("F_L GF({q}) L={l:?}"), f_l_map(&s, &l).unwrap()));
        }
    }
    out
}

fn lemma_suite() -> Outcome {
    let mut validated = 0;
    let mut cells = 0;
    for (name, d) in corpus() {
        let (report, w) = validate_near_domain(&d);
        if !report.passed() {
            continue;
        }
        validated += 1;
        let lemma = lemma_closed_forms(&d, &w);
        if !lemma.passed() {
            return Outcome::new(false, format!("{name}: {}", lemma.summary()));
        }
        cells += lemma.checks.iter().map(|c| c.cells).sum::<usize>();
    }
    Outcome::new(
        validated > 0,
        format!("{validated} near-domains, {cells} cells incl. the h cocycle, 0 counterexamples"),
    )
}

fn family_reports(spec: &ExampleSpec) -> (NearDomain, Report, Report) {
    let d = make_example(spec).unwrap();
    let (report, w) = validate_near_domain(&d);
    let formulas = verify_example_formulas(spec, &d, &w).unwrap();
    (d, report, formulas)
}

fn example_families() -> Outcome {
    let mut runs = 0;
    for q in [5, 7] {
        for a in 1..q {
            let spec = ExampleSpec::scaling(q, a);
            let (d, report, formulas) = family_reports(&spec);
            if !report.passed() || !formulas.passed() {
                return Outcome::new(
                    false,
                    format!("{} over GF({q}): {}", spec.family, formulas.summary()),
                );
            }
            let c = classify(&d);
            if !(c.left_distributive && c.right_distributive && c.l_additive) {
                return Outcome::new(
                    false,
                    format!(
                        "{} over GF({q}): flags {:?}",
                        spec.family,
                        c.details.summary()
                    ),
                );
            }
            runs += 1;
        }
        let spec = ExampleSpec::inverse(q);
        let (d, report, formulas) = family_reports(&spec);
        if !report.passed() || !formulas.holds("h_formula") {
            return Outcome::new(
                false,
                format!("inverse over GF({q}): {}", formulas.summary()),
            );
        }
        let c = classify(&d);
        if c.l_additive || !c.symmetric_zero {
            return Outcome::new(
                false,
                format!("inverse over GF({q}): flags {}", c.details.summary()),
            );
        }
        runs += 1;
    }
    Outcome::new(
        true,
        format!("{runs} family members: scaling r = -1/a and v = 1/a^2, inverse h = 1/z, distributivity and L flags as claimed"),
    )
}

fn inverse_r_formula() -> Outcome {
    let mut failures = Vec::new();
    let mut cells = 0;
    for q in [5, 7] {
        let (_, _, formulas) = family_reports(&ExampleSpec::inverse(q));
        let check = formulas.get("r_formula").expect("r_formula is reported");
        cells += check.cells;
        if !check.passed {
            let cx = check.counterexample.as_ref().unwrap();
            failures.push(format!("GF({q}) at {:?}: {}", cx.cell, cx.detail));
        }
    }
    if failures.is_empty() {
        Outcome::new(true, format!("{cells} doubly-defined cells"))
    } else {
        Outcome::new(
            false,
            format!("{cells} doubly-defined cells; {}", failures.join("; ")),
        )
    }
}

fn search_cross_validation() -> Outcome {
    let groups = [
        (GroupTable::cyclic(2).unwrap(), raw_cyclic(2)),
        (GroupTable::cyclic(3).unwrap(), raw_cyclic(3)),
        (GroupTable::cyclic(4).unwrap(), raw_cyclic(4)),
        (GroupTable::klein_four(), raw_klein()),
    ];
    let mut counts = Vec::new();
    let mut rows = 0;
    for (table, g) in groups {
        let result = search_phi(&table, 5).unwrap();
        let survivors = oracle_survivors(&g);
        let classes = oracle_classes(&g, &survivors);
        if result.survivors != survivors || result.representatives.len() != classes {
            return Outcome::new(
                false,
                format!(
                    "n = {}: search {}/{}, oracle {}/{}",
                    g.n,
                    result.survivors.len(),
                    result.representatives.len(),
                    survivors.len(),
                    classes
                ),
            );
        }
        let census = nearfield_census(&result);
        let mut direct = 0;
        for row in result.rows.iter().filter(|r| r.valid) {
            let assoc =
                oracle_associative(&g, result.representatives[row.phi_index].phi_map(), &row.l);
            if assoc != row.classification.additive_associative {
                return Outcome::new(
                    false,
                    format!("n = {}: census flag disagrees at L = {:?}", g.n, row.l),
                );
            }
            direct += usize::from(assoc);
            rows += 1;
        }
        if direct != census.associative {
            return Outcome::new(
                false,
                format!(
                    "n = {}: associative count {} vs {direct}",
                    g.n, census.associative
                ),
            );
        }
        counts.push(format!(
            "n={}: {} maps, {} classes",
            g.n,
            survivors.len(),
            classes
        ));
    }
    Outcome::new(
        true,
        format!("{}; {rows} census rows, 0 disagreements", counts.join(", ")),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("axiom suite", axiom_suite),
        ("theorem 2 forward", theorem2_forward),
        ("theorem 2 round trips", theorem2_roundtrips),
        ("theorem 1 sweep", theorem1_sweep),
        ("lemma suite", lemma_suite),
        ("example families", example_families),
        (
            "example families: inverse r(y,z) = y^2 z (z+y)^-1 (yz+1)",
            inverse_r_formula,
        ),
        ("search cross-validation", search_cross_validation),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!(
            "{}  {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
