//! Acceptance suite: one pass/fail line per criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see every line; the
//! harness prints the line of a failing criterion in its panic message.

use std::time::Instant;

use cgh::constructions::{
    clique_union, lift_odd, stack_free_construction, stack_free_member, PairIndexMode,
};
use cgh::good::enumerate_good_ends;
use cgh::hypergraph::{all_graphs, all_r_sets, binom, instance_rng, random_cgh_with};
use cgh::patterns::{contains_stack, contains_zigzag, enumerate_ends, enumerate_ends_oracle, StackMode};
use cgh::search::{max_edges_avoiding, PatternPredicate, SearchConfig};
use cgh::verify::{
    bound_values, check_end_count_inequality, check_good_path_inequalities, check_injections,
    coloring_reduction, ell_for_k, expected_counts_enumerated, expected_counts_exact,
    expected_counts_sampled, phi,
};
use cgh::Rat;

fn report(criterion: usize, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {verdict} — {detail}");
    assert!(pass, "criterion {criterion}: FAIL — {detail}");
}

fn search(n: usize, r: usize, p: PatternPredicate) -> cgh::search::ExtremalResult {
    max_edges_avoiding(n, r, p, &SearchConfig::default()).expect("search")
}

#[test]
fn criterion_01_exact_extremal_reproduction() {
    let t0 = Instant::now();
    let a = search(5, 3, PatternPredicate::TightPath(4));
    let t_a = t0.elapsed();
    let t1 = Instant::now();
    let b = search(6, 3, PatternPredicate::TightPath(4));
    let t_b = t1.elapsed();
    let pass = a.exact
        && a.max_edges == 10
        && b.exact
        && b.max_edges == 15
        && t_a.as_secs() < 60
        && t_b.as_secs() < 60;
    report(
        1,
        pass,
        &format!(
            "max(5,3,k=4) = {} in {:.2?}, max(6,3,k=4) = {} in {:.2?} (expected 10 and 15)",
            a.max_edges, t_a, b.max_edges, t_b
        ),
    );
}

#[test]
fn criterion_02_zigzag_tightness_with_witness() {
    let t0 = Instant::now();
    let res = search(6, 2, PatternPredicate::Zigzag(3));
    let elapsed = t0.elapsed();
    let cliques = clique_union(6, 3).expect("clique_union");
    let witness_free = !contains_zigzag(&cliques.cgh, 3).expect("detect");
    let pass = res.exact
        && res.max_edges == 6
        && cliques.edge_count == 6
        && witness_free
        && elapsed.as_secs() < 10;
    report(
        2,
        pass,
        &format!(
            "zigzag max(6,2,k=3) = {} in {:.2?}; clique_union has {} edges, zigzag-free: {}",
            res.max_edges, elapsed, cliques.edge_count, witness_free
        ),
    );
}

#[test]
fn criterion_03_end_count_inequality() {
    let mut violations = 0usize;
    let mut cases = 0usize;
    for (family, r, k_max) in [(31u64, 2usize, 5usize), (32, 4, 4)] {
        for i in 0..200u64 {
            let mut rng = instance_rng(family, i);
            let n = 6 + (i as usize % 7); // 6..=12
            let p = if r == 2 { 0.4 } else { 0.15 };
            let h = random_cgh_with(n, r, p, &mut rng).unwrap();
            for k in 1..=k_max {
                cases += 1;
                if !check_end_count_inequality(&h, k).unwrap().holds {
                    violations += 1;
                }
            }
        }
    }
    for n in 3..=5 {
        for g in all_graphs(n) {
            for k in 1..=3 {
                cases += 1;
                if !check_end_count_inequality(&g, k).unwrap().holds {
                    violations += 1;
                }
            }
        }
    }
    report(3, violations == 0, &format!("{violations} violations over {cases} cases"));
}

#[test]
fn criterion_04_injections() {
    let mut violations = 0usize;
    let mut cases = 0usize;
    for n in 4..=6 {
        for g in all_graphs(n) {
            for k in 1..=2 {
                cases += 1;
                let (eq1, eq2) = check_injections(&g, k).unwrap();
                if !(eq1.holds && eq2.holds) {
                    violations += 1;
                }
            }
        }
    }
    for i in 0..200u64 {
        let mut rng = instance_rng(4, i);
        let n = 7 + (i as usize % 4); // 7..=10
        let h = random_cgh_with(n, 4, 0.15, &mut rng).unwrap();
        for k in 1..=3 {
            cases += 1;
            let (eq1, eq2) = check_injections(&h, k).unwrap();
            if !(eq1.holds && eq2.holds) {
                violations += 1;
            }
        }
    }
    report(4, violations == 0, &format!("{violations} violations over {cases} cases"));
}

#[test]
fn criterion_05_dp_vs_oracle() {
    let mut mismatches = 0usize;
    let mut cases = 0usize;
    for n in 4..=6 {
        for g in all_graphs(n) {
            for k in 1..=4 {
                cases += 1;
                if enumerate_ends(&g, k).unwrap() != enumerate_ends_oracle(&g, k).unwrap() {
                    mismatches += 1;
                }
            }
        }
    }
    for i in 0..100u64 {
        let mut rng = instance_rng(5, i);
        let n = 7 + (i as usize % 3); // 7..=9
        let h = random_cgh_with(n, 4, 0.2, &mut rng).unwrap();
        for k in 1..=3 {
            cases += 1;
            if enumerate_ends(&h, k).unwrap() != enumerate_ends_oracle(&h, k).unwrap() {
                mismatches += 1;
            }
        }
    }
    report(5, mismatches == 0, &format!("{mismatches} mismatches over {cases} cases"));
}

#[test]
fn criterion_06_stack_free_construction() {
    let (n, r, k) = (12usize, 4usize, 3usize);
    let mut stack_free = true;
    let mut counts_match = true;
    for mode in [PairIndexMode::Cyclic, PairIndexMode::Adjacent] {
        let rep = stack_free_construction(n, r, k, mode).unwrap();
        let filtered = all_r_sets(n, r)
            .into_iter()
            .filter(|e| stack_free_member(n, r, k, mode, e))
            .count();
        counts_match &= rep.edge_count == filtered;
        stack_free &= !contains_stack(&rep.cgh, k, StackMode::Exhaustive).unwrap();
    }
    // leading-coefficient trend toward (k-1)(r-1) = 6
    let ratio = |n: usize| -> f64 {
        let count = all_r_sets(n, r)
            .into_iter()
            .filter(|e| stack_free_member(n, r, k, PairIndexMode::Cyclic, e))
            .count();
        count as f64 / binom(n, r - 1) as f64
    };
    let (r16, r24, r32) = (ratio(16), ratio(24), ratio(32));
    let trend = r16 < r24 && r24 < r32 && r32 < 6.0;
    let pass = stack_free && counts_match && trend;
    report(
        6,
        pass,
        &format!(
            "stack-free(12,4,3): {stack_free}, count-vs-filter match: {counts_match}, \
             ratio trend 16/24/32 = {r16:.3}/{r24:.3}/{r32:.3} (monotone toward 6: {trend})"
        ),
    );
}

#[test]
fn criterion_07_expected_counts() {
    let mut exact_ok = true;
    for i in 0..10u64 {
        let mut rng = instance_rng(7, i);
        let n = 8 + (i as usize % 5); // 8..=12
        let h = random_cgh_with(n, 4, 0.1, &mut rng).unwrap();
        let exact = expected_counts_exact(&h).unwrap();
        let enumerated = expected_counts_enumerated(&h).unwrap();
        exact_ok &= exact.edges == enumerated.edges && exact.shadow_parts == enumerated.shadow_parts;
    }
    let mut mc_ok = true;
    let mut worst = 0.0f64;
    for i in 0..20u64 {
        let mut rng = instance_rng(71, i);
        let n = 8 + (i as usize % 5);
        let h = random_cgh_with(n, 4, 0.1, &mut rng).unwrap();
        let exact = expected_counts_exact(&h).unwrap();
        let mc = expected_counts_sampled(&h, 100_000, 710 + i).unwrap();
        let as_f64 = |x: Rat| *x.numer() as f64 / *x.denom() as f64;
        let mut sigmas = |mean: f64, se: f64, target: f64| {
            if se == 0.0 {
                mc_ok &= mean == target;
            } else {
                let z = (mean - target).abs() / se;
                worst = worst.max(z);
                mc_ok &= z <= 3.0;
            }
        };
        sigmas(mc.mean_edges, mc.se_edges, as_f64(exact.edges));
        for j in 0..exact.shadow_parts.len() {
            sigmas(mc.mean_parts[j], mc.se_parts[j], as_f64(exact.shadow_parts[j]));
        }
    }
    report(
        7,
        exact_ok && mc_ok,
        &format!("exact-vs-enumeration: {exact_ok}; Monte Carlo worst deviation {worst:.2} SE (limit 3)"),
    );
}

#[test]
fn criterion_08_good_path_inequalities() {
    let mut violations = 0usize;
    let mut base_failures = 0usize;
    let mut cases = 0usize;
    for i in 0..100u64 {
        let mut rng = instance_rng(8, i);
        let n = 8 + (i as usize % 5); // 8..=12
        let h = random_cgh_with(n, 4, 0.15, &mut rng).unwrap();
        let (coloring, g, _) = coloring_reduction(&h, &mut rng).unwrap();
        let s1 = enumerate_good_ends(&g, &coloring, 1).unwrap();
        if s1.len() != (1 << coloring.s()) * g.len() {
            base_failures += 1;
        }
        for k in 1..=3 {
            for rep in check_good_path_inequalities(&g, &coloring, k).unwrap() {
                cases += 1;
                if !rep.holds {
                    violations += 1;
                }
            }
        }
    }
    report(
        8,
        violations == 0 && base_failures == 0,
        &format!("{violations} inequality violations over {cases} checks; {base_failures} base-case failures"),
    );
}

#[test]
fn criterion_09_odd_case_arithmetic() {
    let mut identity_failures = 0usize;
    let mut identity_cases = 0usize;
    for r in (3..=15usize).step_by(2) {
        for k in 1..=100usize {
            identity_cases += 1;
            let ell = ell_for_k(k, r).unwrap();
            if ell + 1 - phi(ell, r).unwrap() != k {
                identity_failures += 1;
            }
        }
    }
    let mut lift_failures = 0usize;
    for i in 0..50u64 {
        let mut rng = instance_rng(9, i);
        let n = 6 + (i as usize % 5); // 6..=10
        let h = random_cgh_with(n, 3, 0.25, &mut rng).unwrap();
        let x = 1 + (i as usize % 4);
        let lifted = lift_odd(&h, x).unwrap();
        if lifted.len() != x * h.len()
            || lifted.shadow().len() != x * h.shadow().len() + h.len()
        {
            lift_failures += 1;
        }
    }
    report(
        9,
        identity_failures == 0 && lift_failures == 0,
        &format!(
            "identity: {identity_failures} failures over {identity_cases} cases; lift identities: {lift_failures} failures over 50 instances"
        ),
    );
}

#[test]
fn criterion_10_bound_consistency() {
    let tight_cells = [(5usize, 3usize, 4usize), (6, 3, 4), (6, 2, 3), (7, 2, 4)];
    let zigzag_cells = [(6usize, 2usize, 2usize), (6, 2, 3), (7, 2, 3)];
    let mut ok = true;
    let mut notes = Vec::new();
    for (n, r, k) in tight_cells {
        let res = search(n, r, PatternPredicate::TightPath(k));
        let b = bound_values(n, r, k).unwrap();
        let m = Rat::new(res.max_edges as i128, 1);
        let mut cell_ok = res.exact && m <= b.thm2 && m <= b.trivial;
        if let Some(link) = b.link_recursion {
            cell_ok &= m <= link;
        }
        if (n, r, k) == (5, 3, 4) {
            cell_ok &= m == b.conj1;
            notes.push(format!("conj1 equality at (5,3,4): {}", m == b.conj1));
        }
        ok &= cell_ok;
        if !cell_ok {
            notes.push(format!("tight-path cell ({n},{r},{k}) failed with max {}", res.max_edges));
        }
    }
    for (n, r, k) in zigzag_cells {
        let res = search(n, r, PatternPredicate::Zigzag(k));
        let b = bound_values(n, r, k).unwrap();
        let m = Rat::new(res.max_edges as i128, 1);
        let cell_ok = res.exact && m <= b.thm4.unwrap() && m <= b.trivial;
        ok &= cell_ok;
        if !cell_ok {
            notes.push(format!("zigzag cell ({n},{r},{k}) failed with max {}", res.max_edges));
        }
    }
    report(10, ok, &format!("all table cells within bounds; {}", notes.join("; ")));
}
