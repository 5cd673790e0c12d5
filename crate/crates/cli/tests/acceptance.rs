//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Every tolerance is pinned here.
//!
//! 1. hypothesis verification on groups, under one second
//! 2. the order-12 Chein double: Moufang and IP but not associative
//! 3. exact round-trip reconstruction over all fixtures
//! 4. theorem end to end, with at least 100 rejected negative triples
//! 5. mutation sensitivity: 50 deterministic mutations per fixture
//! 6. exhaustive sweep of all loops of order <= 5, under a minute
//! 7. the CLI exit-code contract

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use moufang_cli::format;
use moufang_core::axioms;
use moufang_core::triality::{self, TranslationTriple};
use moufang_core::{fixtures, CayleyTable, Perm};

fn group_fixtures() -> Vec<CayleyTable> {
    let mut tables: Vec<CayleyTable> = (1..=8)
        .map(|n| fixtures::cyclic_group(n).unwrap())
        .collect();
    tables.push(fixtures::symmetric_group_3());
    tables
}

fn moufang_fixtures() -> Vec<CayleyTable> {
    let mut tables = group_fixtures();
    tables.push(fixtures::chein_double(&fixtures::cyclic_group(2).unwrap()).unwrap());
    tables.push(fixtures::chein_double(&fixtures::cyclic_group(3).unwrap()).unwrap());
    tables.push(fixtures::chein_double(&fixtures::symmetric_group_3()).unwrap());
    tables
}

#[test]
fn criterion_1_hypotheses_on_groups() {
    let start = Instant::now();
    for tbl in group_fixtures() {
        let triple = triality::extract_triple(&tbl).unwrap();
        let report = triality::verify_hypotheses(&triple, &tbl).unwrap();
        assert!(
            report.overall,
            "order {}: {:?}",
            tbl.order(),
            report.first_failure()
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 1: PASS — hypotheses all-pass on cyclic groups of orders 1..=8 and S3 in {elapsed:?}"
    );
}

#[test]
fn criterion_2_smallest_proper_moufang_loop() {
    let start = Instant::now();
    let chein = fixtures::chein_double(&fixtures::symmetric_group_3()).unwrap();
    assert_eq!(chein.order(), 12);

    assert!(axioms::check_moufang(&chein).unwrap().passed);
    assert!(axioms::check_inverse_property(&chein).unwrap().passed);
    let assoc = axioms::check_associative(&chein);
    assert!(!assoc.passed);
    let witness = assoc
        .witness
        .clone()
        .expect("failed checks carry witnesses");

    let triple = triality::extract_triple(&chein).unwrap();
    let report = triality::verify_hypotheses(&triple, &chein).unwrap();
    assert!(report.overall, "{:?}", report.first_failure());

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 2: PASS — order-12 Chein double is Moufang and IP, \
         fails associativity at {witness}, hypotheses all-pass, in {elapsed:?}"
    );
}

#[test]
fn criterion_3_round_trip_reconstruction() {
    let fixtures = moufang_fixtures();
    for tbl in &fixtures {
        let triple = triality::extract_triple(tbl).unwrap();
        let rebuilt = triality::reconstruct_multiplication(&triple).unwrap();
        assert_eq!(
            &rebuilt,
            tbl,
            "order {} reconstruction differs",
            tbl.order()
        );
    }
    println!(
        "criterion 3: PASS — {} fixture tables reconstruct entrywise, zero tolerance",
        fixtures.len()
    );
}

#[test]
fn criterion_4_theorem_end_to_end() {
    // every verified fixture triple yields an all-pass proposition suite
    for tbl in moufang_fixtures() {
        let triple = triality::extract_triple(&tbl).unwrap();
        for report in triality::run_proposition_suite(&triple, &tbl).unwrap() {
            assert!(report.passed, "order {}: {report}", tbl.order());
        }
    }

    // negative attempts: raw translation triples of random loops; a
    // non-Moufang table must be rejected at the hypotheses, a Moufang one
    // must sail through the whole suite
    let mut negatives = 0;
    let mut sampled = 0;
    let mut seed = 0u64;
    while negatives < 100 {
        assert!(seed < 10_000, "not enough negatives found in 10000 draws");
        let n = 5 + (seed % 4) as usize;
        let tbl = fixtures::random_loop(n, seed).unwrap();
        seed += 1;
        sampled += 1;
        let triple = triality::translations_of(&tbl).unwrap();
        let hypotheses = triality::verify_hypotheses(&triple, &tbl).unwrap();
        let moufang = axioms::check_moufang(&tbl).unwrap().passed;
        assert_eq!(
            hypotheses.overall,
            moufang,
            "seed {}: hypotheses and Moufang check disagree on order {n}",
            seed - 1
        );
        if moufang {
            for report in triality::run_proposition_suite(&triple, &tbl).unwrap() {
                assert!(report.passed, "seed {}: {report}", seed - 1);
            }
        } else {
            negatives += 1;
        }
    }
    println!(
        "criterion 4: PASS — proposition suite all-pass on every verified triple; \
         {negatives} of {sampled} random loops rejected at the hypotheses, none slipped through"
    );
}

/// Deterministic mutation k of a triple: pick the map `k mod 3`, the
/// element `(k / 3) mod n`, and swap the images at positions `k mod m` and
/// `(k mod m) + 1 + (k mod (m - 1))` wrapped, which are always distinct.
/// Swapping two images is the smallest corruption that still leaves a
/// valid permutation; overwriting a single image is rejected earlier, at
/// construction.
fn mutate(triple: &TranslationTriple, k: usize) -> TranslationTriple {
    let n = triple.loop_order();
    let m = triple.degree();
    let which = k % 3;
    let g = (k / 3) % n;
    let a = k % m;
    let b = (a + 1 + k % (m - 1)) % m;
    assert_ne!(a, b);
    let rebuild = |idx: usize| -> Vec<Perm> {
        (0..n)
            .map(|i| {
                let src = match idx {
                    0 => triple.s(i),
                    1 => triple.t(i),
                    _ => triple.p(i),
                };
                let mut images = src.images().to_vec();
                if idx == which && i == g {
                    images.swap(a, b);
                }
                Perm::from_images(images).unwrap()
            })
            .collect()
    };
    TranslationTriple::new(rebuild(0), rebuild(1), rebuild(2)).unwrap()
}

#[test]
fn criterion_5_mutation_sensitivity() {
    // literal single-image overwrites never reach the verifier: they break
    // bijectivity and are rejected when the permutation is built
    assert!(Perm::from_images(vec![0, 0, 2]).is_err());

    let mut mutations_checked = 0;
    for tbl in moufang_fixtures() {
        if tbl.order() < 2 {
            continue; // a degree-1 permutation admits no swap
        }
        let triple = triality::extract_triple(&tbl).unwrap();
        for k in 0..50 {
            let mutated = mutate(&triple, k);
            assert_ne!(&mutated, &triple, "mutation {k} was a no-op");
            let detected = triality::derive_bar(&mutated).is_err()
                || !triality::verify_hypotheses(&mutated, &tbl).unwrap().overall;
            assert!(
                detected,
                "mutation {k} on the order-{} triple passed verification",
                tbl.order()
            );
            mutations_checked += 1;
        }
    }
    println!(
        "criterion 5: PASS — {mutations_checked} single-permutation mutations, all detected, zero false-passes"
    );
}

#[test]
fn criterion_6_small_order_sweep() {
    let start = Instant::now();
    let mut total = 0;
    let mut moufang_count = 0;
    for n in 1..=5 {
        for tbl in fixtures::enumerate_loops(n) {
            total += 1;
            if axioms::check_moufang(&tbl).unwrap().passed {
                moufang_count += 1;
                assert!(
                    axioms::check_associative(&tbl).passed,
                    "an order-{n} Moufang loop escaped associativity"
                );
            }
        }
    }
    assert_eq!(total, 1 + 1 + 1 + 4 + 56);
    assert_eq!(moufang_count, 1 + 1 + 1 + 4 + 6);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 6: PASS — all {total} loops of order <= 5 enumerated, every Moufang one \
         ({moufang_count}) is associative, in {elapsed:?}"
    );
}

fn moufang_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moufang"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("moufang-acc-{}-{name}", std::process::id()));
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn criterion_7_cli_exit_codes() {
    let s3 = fixtures::symmetric_group_3();
    let chein = fixtures::chein_double(&s3).unwrap();
    let triple_text = format::emit_triple(&triality::extract_triple(&s3).unwrap());

    let good_table = write_temp("good.cay", &format::emit_cayley(&chein));
    let bad_table = write_temp("bad.cay", "2\n0 1\n0 1\n");
    let table_s3 = write_temp("s3.cay", &format::emit_cayley(&s3));
    let good_triple = write_temp("good.trp", &triple_text);
    let malformed = write_temp("malformed.cay", "three cats\nsat 0n a mat\n");

    // mutated triple: swap two images on element 1's S line (line 5);
    // still parses, no longer verifies
    let mut lines: Vec<String> = triple_text.lines().map(String::from).collect();
    let mut tokens: Vec<String> = lines[4].split_whitespace().map(String::from).collect();
    assert_eq!(tokens[0], "S");
    tokens.swap(1, 2);
    lines[4] = tokens.join(" ");
    let mutated_triple = write_temp("mutated.trp", &(lines.join("\n") + "\n"));

    let cases: Vec<(Vec<&str>, i32, &str)> = vec![
        (
            vec!["classify", good_table.to_str().unwrap()],
            0,
            "good table classifies clean",
        ),
        (
            vec!["classify", bad_table.to_str().unwrap()],
            1,
            "bad table fails a check",
        ),
        (
            vec![
                "verify",
                good_triple.to_str().unwrap(),
                table_s3.to_str().unwrap(),
            ],
            0,
            "good triple verifies",
        ),
        (
            vec![
                "verify",
                mutated_triple.to_str().unwrap(),
                table_s3.to_str().unwrap(),
            ],
            1,
            "mutated triple fails a hypothesis",
        ),
        (
            vec!["classify", malformed.to_str().unwrap()],
            2,
            "malformed file is a parse error",
        ),
        (
            vec![
                "verify",
                malformed.to_str().unwrap(),
                table_s3.to_str().unwrap(),
            ],
            2,
            "malformed triple is a parse error",
        ),
    ];
    let case_count = cases.len();
    for (args, expected, what) in &cases {
        let out = moufang_bin(args);
        assert_eq!(
            out.status.code(),
            Some(*expected),
            "{what}: {:?}\nstdout: {}\nstderr: {}",
            args,
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr),
        );
    }
    drop(cases);

    for p in [
        good_table,
        bad_table,
        table_s3,
        good_triple,
        malformed,
        mutated_triple,
    ] {
        fs::remove_file(p).ok();
    }
    println!(
        "criterion 7: PASS — exit codes 0/1/2 hold across {case_count} scripted cases"
    );
}
