//! Acceptance suite: one PASS/FAIL line per criterion, with its time limit.
//! Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use sgt_core::classify::classify;
use sgt_core::structure::{
    archimedean_decomposition, cr_decomposition, diagonal_cyclic_witness, rees_construct,
    rees_coordinates, theta_congruence, ReesStructure, SandwichEntry,
};
use sgt_core::verify::{self, Construction};
use sgt_core::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn check(ok: bool, message: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn small_pair_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let mut out = vec![vec![]];
    for (i, &p) in pairs.iter().enumerate() {
        out.push(vec![p]);
        for &q in &pairs[i + 1..] {
            out.push(vec![p, q]);
        }
    }
    out
}

fn closure_oracle_equivalence() -> Outcome {
    let library = library::up_to(5);
    let names: BTreeSet<&str> = library.iter().map(|(n, _)| n.as_str()).collect();
    for required in [
        "trivial", "Z2", "Z3", "Z4", "Z5", "chain2", "chain3", "L2", "L3", "L4", "R2", "R3", "R4",
        "RB2x2", "N3", "T2",
    ] {
        check(names.contains(required), || {
            format!("library lacks {required}")
        })?;
    }
    let mut cases = 0;
    for (name, s) in &library {
        let all = right_congruences(s);
        for pairs in small_pair_sets(s.size()) {
            let x: PairSet = pairs.iter().copied().collect();
            let expected = closure_oracle(s, &all, &pairs);
            check(rc_generate(s, &x, false) == expected, || {
                format!("{name} {pairs:?}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{} semigroups, {cases} pair sets", library.len()))
}

fn bell_numbers() -> Outcome {
    let counts: Vec<usize> = (2..=4)
        .map(|n| enumerate_right_congruences(&library::right_zero(n), None).map(|l| l.len()))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    check(counts == [2, 5, 15], || format!("counts {counts:?}"))?;
    Ok(format!("counts {counts:?}"))
}

fn group_subgroup_correspondence() -> Outcome {
    let counts: Vec<usize> = (2..=8)
        .map(|n| enumerate_right_congruences(&library::cyclic_group(n), None).map(|l| l.len()))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    check(counts == [2, 2, 3, 2, 4, 2, 4], || {
        format!("counts {counts:?}")
    })?;
    Ok(format!("counts {counts:?}"))
}

fn schutzenberger_size_law() -> Outcome {
    let mut rng = seeded(2024);
    let (mut samples, mut h_classes, mut isomorphisms) = (0, 0, 0);
    while samples < 120 {
        let k = rng.random_range(1..=3);
        let s = random_transformation_semigroup(&mut rng, 4, k);
        samples += 1;
        for h in green_data(&s).h.classes() {
            let sg = schutzenberger(&s, h[0]).map_err(|e| e.to_string())?;
            check(sg.group.size() == h.len(), || {
                format!(
                    "sample {samples}: |Γ| {} vs |H| {}",
                    sg.group.size(),
                    h.len()
                )
            })?;
            h_classes += 1;
            if h.iter().any(|&a| s.is_idempotent(a)) && h.len() <= 8 {
                let sub = s.restrict(&h).map_err(|e| e.to_string())?;
                let map = isomorphic(&sub, &sg.group, 8)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| {
                        format!("sample {samples}: group H-class not isomorphic to Γ(H)")
                    })?;
                check(is_isomorphism(&sub, &sg.group, &map), || {
                    format!("sample {samples}: bad bijection")
                })?;
                isomorphisms += 1;
            }
        }
    }
    Ok(format!(
        "{samples} subsemigroups of T4, {h_classes} H-classes, {isomorphisms} isomorphisms"
    ))
}

fn constructive_sweep() -> Outcome {
    let mut summary = Vec::new();
    for c in [
        Construction::Fg,
        Construction::Lclass,
        Construction::Extend,
        Construction::Quotient,
        Construction::Ideal,
        Construction::Dp,
    ] {
        let line = verify::sweep(c, 5, 3);
        check(line.passed(), || {
            format!(
                "{c}: {} failures, first {}",
                line.failures.len(),
                line.failures[0]
            )
        })?;
        check(line.instances > 0, || format!("{c}: no instances"))?;
        summary.push(format!("{c} {}", line.instances));
    }
    Ok(summary.join(", "))
}

fn schutzenberger_generators() -> Outcome {
    let line = verify::sweep(Construction::Schutz, 6, 0);
    check(line.passed(), || {
        format!(
            "{} failures, first {}",
            line.failures.len(),
            line.failures[0]
        )
    })?;
    Ok(format!("{} reports", line.instances))
}

fn groups_up_to_three() -> Vec<FiniteSemigroup> {
    (1..=3).map(library::cyclic_group).collect()
}

/// Classes by pairwise comparison of the sandwich rows, independent of the
/// library's pattern bookkeeping.
fn brute_force_theta_index(r: &ReesStructure) -> usize {
    let size = r.size();
    let zero = r.zero_index().expect("with zero");
    let same = |a: usize, b: usize| match (r.triple(a), r.triple(b)) {
        (None, None) => true,
        (Some((_, _, ja)), Some((_, _, jb))) => {
            (0..r.i_size()).all(|i| r.entry(ja, i).is_zero() == r.entry(jb, i).is_zero())
        }
        _ => false,
    };
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..size {
        if !reps.iter().any(|&b| same(a, b)) {
            reps.push(a);
        }
    }
    debug_assert!(reps.contains(&zero));
    reps.len()
}

fn theta_law() -> Outcome {
    let mut rng = seeded(7);
    let mut structures = Vec::new();
    for g in groups_up_to_three() {
        for i in 1..=3 {
            for j in 1..=3 {
                let identity_pattern: Vec<Vec<SandwichEntry>> = (0..j)
                    .map(|row| {
                        (0..i)
                            .map(|col| {
                                if row == col {
                                    SandwichEntry::Group(0)
                                } else {
                                    SandwichEntry::Zero
                                }
                            })
                            .collect()
                    })
                    .collect();
                let all_nonzero = vec![vec![SandwichEntry::Group(0); i]; j];
                structures.push(ReesStructure::new(g.clone(), i, j, identity_pattern, true));
                structures.push(ReesStructure::new(g.clone(), i, j, all_nonzero, true));
            }
        }
    }
    for _ in 0..240 {
        let g = library::cyclic_group(rng.random_range(1..=3));
        let (i, j) = (rng.random_range(1..=3), rng.random_range(1..=3));
        let p = (0..j)
            .map(|_| {
                (0..i)
                    .map(|_| {
                        if rng.random_bool(0.35) {
                            SandwichEntry::Zero
                        } else {
                            SandwichEntry::Group(rng.random_range(0..g.size()))
                        }
                    })
                    .collect()
            })
            .collect();
        structures.push(ReesStructure::new(g, i, j, p, true));
    }
    let total = structures.len();
    for (k, r) in structures.into_iter().enumerate() {
        let r = r.map_err(|e| e.to_string())?;
        let s = rees_construct(&r).map_err(|e| e.to_string())?.semigroup;
        let (pattern, rho) = theta_congruence(&s, &r).map_err(|e| format!("structure {k}: {e}"))?;
        check(right_compatible(&s, rho.class_of()), || {
            format!("structure {k}: not right compatible")
        })?;
        check(rho.index() == pattern.distinct() + 1, || {
            format!("structure {k}: index {}", rho.index())
        })?;
        check(brute_force_theta_index(&r) == rho.index(), || {
            format!("structure {k}: brute-force count differs")
        })?;
    }
    Ok(format!("{total} sandwich matrices"))
}

fn rees_round_trip() -> Outcome {
    let mut count = 0;
    for g in groups_up_to_three() {
        let order = g.size();
        for i in 1..=3 {
            for j in 1..=3 {
                let cells = i * j;
                for code in 0..order.pow(cells as u32) {
                    let mut c = code;
                    let p: Vec<Vec<SandwichEntry>> = (0..j)
                        .map(|_| {
                            (0..i)
                                .map(|_| {
                                    let e = SandwichEntry::Group(c % order);
                                    c /= order;
                                    e
                                })
                                .collect()
                        })
                        .collect();
                    let r =
                        ReesStructure::new(g.clone(), i, j, p, false).map_err(|e| e.to_string())?;
                    let original = rees_construct(&r).map_err(|e| e.to_string())?.semigroup;
                    let coords = rees_coordinates(&original).map_err(|e| format!("{r:?}: {e}"))?;
                    let rebuilt = rees_construct(&coords.structure)
                        .map_err(|e| e.to_string())?
                        .semigroup;
                    check(
                        is_isomorphism(&rebuilt, &original, &coords.to_original),
                        || format!("{r:?}"),
                    )?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} structures"))
}

fn decomposition_guarantees() -> Outcome {
    let (mut regular, mut commutative) = (0, 0);
    for (name, s) in library::standard() {
        let p = classify(&s);
        if p.completely_regular {
            let d = cr_decomposition(&s).map_err(|e| format!("{name}: {e}"))?;
            check(classify(&d.semilattice).semilattice, || {
                format!("{name}: cr quotient")
            })?;
            check(
                d.components
                    .iter()
                    .all(|(_, c)| classify(c).completely_simple),
                || format!("{name}: cr component"),
            )?;
            regular += 1;
        }
        if p.commutative {
            let d = archimedean_decomposition(&s).map_err(|e| format!("{name}: {e}"))?;
            check(classify(&d.semilattice).semilattice, || {
                format!("{name}: archimedean quotient")
            })?;
            for (members, _) in &d.components {
                let ok = members
                    .iter()
                    .all(|&a| members.iter().all(|&b| power_divides(&s, a, b)));
                check(ok, || {
                    format!("{name}: component {members:?} is not archimedean")
                })?;
            }
            commutative += 1;
        }
    }
    Ok(format!(
        "{regular} completely regular, {commutative} commutative"
    ))
}

fn diameter_sanity() -> Outcome {
    let z3 = library::cyclic_group(3);
    let x: PairSet = [(0, 1)].into_iter().collect();
    let mut problems = Vec::new();
    let z3_diameter = rc_diameter(&z3, &x);
    if z3_diameter != (Diameter::Bounded { diameter: 2 }) {
        problems.push(format!(
            "Z3 with {{(e,g)}} has {z3_diameter:?}, criterion states 2"
        ));
    }
    for (name, s) in library::standard() {
        let universal = RightCongruence::universal(s.size());
        let gens = minimal_generating_pairs(&s, &universal, DEFAULT_EXACT_LIMIT).pairs;
        match rc_diameter(&s, &gens) {
            Diameter::Bounded { diameter } if diameter < s.size() => {}
            other => problems.push(format!("{name}: {other:?}")),
        }
    }
    if problems.is_empty() {
        Ok("Z3 diameter 2; all library diameters below |S|".into())
    } else {
        Err(problems.join("; "))
    }
}

fn diagonal_act() -> Outcome {
    for (name, s) in library::standard() {
        let expected = (s.size() == 1).then_some((0, 0));
        check(diagonal_cyclic_witness(&s) == expected, || name.clone())?;
    }
    Ok("no witness for |S| >= 2, (0,0) for the trivial semigroup".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("closure-oracle equivalence", 30, closure_oracle_equivalence),
        ("Bell-number check", 5, bell_numbers),
        (
            "group-subgroup correspondence",
            10,
            group_subgroup_correspondence,
        ),
        ("Schutzenberger size law", 60, schutzenberger_size_law),
        ("constructive-proof sweep", 120, constructive_sweep),
        ("Schutzenberger generators", 60, schutzenberger_generators),
        ("theta-congruence law", 60, theta_law),
        ("Rees round-trip", 60, rees_round_trip),
        ("decomposition guarantees", 30, decomposition_guarantees),
        ("diameter sanity", 10, diameter_sanity),
        ("diagonal-act negative invariant", 5, diagonal_act),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(limit) => {
                Err(format!("{detail}; over the {limit} s limit"))
            }
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "PASS {:>2} {name} ({secs:.2} s / {limit} s): {detail}",
                k + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {name} ({secs:.2} s / {limit} s): {detail}",
                    k + 1
                );
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
