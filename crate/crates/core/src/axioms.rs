//! Exhaustive checkers for the loop axiom ladder.
//!
//! Every checker scans the whole table (no sampling — orders stay at desk
//! scale) and reports the lexicographically first counterexample. The
//! ladder runs groupoid → quasigroup → loop → IP-loop → Moufang loop →
//! group; [`classify`] climbs it and returns the report that stopped the
//! climb.

use std::fmt;

use thiserror::Error;

use crate::magma::{self, CayleyTable, CheckReport, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("not a loop: {report}")]
    NotALoop { report: Box<CheckReport> },
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
}

/// Quasigroup law: in `g * h = k` any two of `g`, `h`, `k` determine the
/// third, i.e. the table is a Latin square.
pub fn check_quasigroup(tbl: &CayleyTable) -> CheckReport {
    let latin = magma::is_latin_square(tbl);
    CheckReport {
        law: "quasigroup".into(),
        ..latin
    }
}

/// Loop law: quasigroup with a two-sided unit.
pub fn check_loop(tbl: &CayleyTable) -> CheckReport {
    const LAW: &str = "loop";
    let quasigroup = check_quasigroup(tbl);
    if !quasigroup.passed {
        return CheckReport {
            law: LAW.into(),
            passed: false,
            witness: quasigroup.witness,
            detail: format!("not a quasigroup: {}", quasigroup.detail),
        };
    }
    if let Some(e) = magma::find_unit(tbl) {
        return CheckReport::pass_with(LAW, format!("two-sided unit at index {e}"));
    }
    // In a quasigroup a two-sided unit e must satisfy e * 0 = 0, and the
    // solution of x * 0 = 0 is unique, so there is exactly one candidate.
    let n = tbl.order();
    let candidate = (0..n)
        .find(|&x| tbl.product(x, 0) == 0)
        .expect("column 0 of a Latin square is a bijection");
    let bad = (0..n)
        .find(|&h| tbl.product(candidate, h) != h || tbl.product(h, candidate) != h)
        .expect("candidate failed somewhere, or find_unit would have returned it");
    CheckReport::fail(
        LAW,
        Witness::Elements(vec![candidate, bad]),
        format!("the only unit candidate {candidate} fails at {bad}"),
    )
}

/// Moufang identity: `(g h)(k g) = g (h k) g` for all triples.
///
/// Both bracketings of the right-hand side are required, `(g (h k)) g` and
/// `g ((h k) g)`; before flexibility is established the unparenthesized
/// form is ambiguous, and demanding both is the strongest reading.
pub fn check_moufang(tbl: &CayleyTable) -> Result<CheckReport, AxiomError> {
    const LAW: &str = "Moufang identity";
    let loop_report = check_loop(tbl);
    if !loop_report.passed {
        return Err(AxiomError::NotALoop {
            report: Box::new(loop_report),
        });
    }
    let n = tbl.order();
    for g in 0..n {
        for h in 0..n {
            let gh = tbl.product(g, h);
            for k in 0..n {
                let lhs = tbl.product(gh, tbl.product(k, g));
                let hk = tbl.product(h, k);
                if lhs != tbl.product(tbl.product(g, hk), g)
                    || lhs != tbl.product(g, tbl.product(hk, g))
                {
                    return Ok(CheckReport::fail(
                        LAW,
                        Witness::Elements(vec![g, h, k]),
                        "(g h)(k g) differs from g (h k) g",
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass_with(
        LAW,
        format!("holds for all {n}^3 triples"),
    ))
}

/// Flexible law: `(g h) g = g (h g)` for all pairs.
pub fn check_flexible(tbl: &CayleyTable) -> CheckReport {
    const LAW: &str = "flexible law";
    let n = tbl.order();
    for g in 0..n {
        for h in 0..n {
            if tbl.product(tbl.product(g, h), g) != tbl.product(g, tbl.product(h, g)) {
                return CheckReport::fail(
                    LAW,
                    Witness::Elements(vec![g, h]),
                    "(g h) g differs from g (h g)",
                );
            }
        }
    }
    CheckReport::pass(LAW)
}

/// Two-sided inverses in a loop, or `None` where an element has no inverse.
fn two_sided_inverses(tbl: &CayleyTable, unit: usize) -> Vec<Option<usize>> {
    let n = tbl.order();
    (0..n)
        .map(|g| (0..n).find(|&x| tbl.product(g, x) == unit && tbl.product(x, g) == unit))
        .collect()
}

/// Inverse property: two-sided inverses exist and cancel on both sides,
/// `g^-1 (g h) = h = (h g) g^-1`.
pub fn check_inverse_property(tbl: &CayleyTable) -> Result<CheckReport, AxiomError> {
    const LAW: &str = "inverse property";
    let loop_report = check_loop(tbl);
    if !loop_report.passed {
        return Err(AxiomError::NotALoop {
            report: Box::new(loop_report),
        });
    }
    let unit = magma::find_unit(tbl).expect("check_loop established a unit");
    let inverses = two_sided_inverses(tbl, unit);
    let n = tbl.order();
    for (g, inv) in inverses.iter().enumerate() {
        if inv.is_none() {
            return Ok(CheckReport::fail(
                LAW,
                Witness::Elements(vec![g]),
                format!("element {g} has no two-sided inverse"),
            ));
        }
    }
    for (g, inv) in inverses.iter().enumerate() {
        let gi = inv.expect("checked above");
        for h in 0..n {
            if tbl.product(gi, tbl.product(g, h)) != h || tbl.product(tbl.product(h, g), gi) != h {
                return Ok(CheckReport::fail(
                    LAW,
                    Witness::Elements(vec![g, h]),
                    "g^-1 (g h) or (h g) g^-1 differs from h",
                ));
            }
        }
    }
    Ok(CheckReport::pass_with(
        LAW,
        "two-sided inverses cancel on both sides",
    ))
}

/// Inversion is an antiautomorphism: `(g h)^-1 = h^-1 g^-1`.
pub fn check_antiautomorphism(tbl: &CayleyTable) -> Result<CheckReport, AxiomError> {
    const LAW: &str = "antiautomorphism of inversion";
    let loop_report = check_loop(tbl);
    if !loop_report.passed {
        return Err(AxiomError::NotALoop {
            report: Box::new(loop_report),
        });
    }
    let unit = magma::find_unit(tbl).expect("check_loop established a unit");
    let inverses = two_sided_inverses(tbl, unit);
    let inv = |g: usize| -> Result<usize, AxiomError> {
        inverses[g].ok_or(AxiomError::MissingInverse { element: g })
    };
    let n = tbl.order();
    for g in 0..n {
        inv(g)?;
    }
    for g in 0..n {
        for h in 0..n {
            if inv(tbl.product(g, h))? != tbl.product(inv(h)?, inv(g)?) {
                return Ok(CheckReport::fail(
                    LAW,
                    Witness::Elements(vec![g, h]),
                    "(g h)^-1 differs from h^-1 g^-1",
                ));
            }
        }
    }
    Ok(CheckReport::pass(LAW))
}

/// Associativity: `(g h) k = g (h k)` for all triples.
pub fn check_associative(tbl: &CayleyTable) -> CheckReport {
    const LAW: &str = "associativity";
    let n = tbl.order();
    for g in 0..n {
        for h in 0..n {
            let gh = tbl.product(g, h);
            for k in 0..n {
                if tbl.product(gh, k) != tbl.product(g, tbl.product(h, k)) {
                    return CheckReport::fail(
                        LAW,
                        Witness::Elements(vec![g, h, k]),
                        "(g h) k differs from g (h k)",
                    );
                }
            }
        }
    }
    CheckReport::pass(LAW)
}

/// The rungs of the classification ladder, in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StructureClass {
    Groupoid,
    Quasigroup,
    Loop,
    IpLoop,
    MoufangLoop,
    Group,
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureClass::Groupoid => write!(f, "groupoid"),
            StructureClass::Quasigroup => write!(f, "quasigroup"),
            StructureClass::Loop => write!(f, "loop"),
            StructureClass::IpLoop => write!(f, "IP-loop"),
            StructureClass::MoufangLoop => write!(f, "Moufang loop"),
            StructureClass::Group => write!(f, "group"),
        }
    }
}

/// The highest rung reached plus the report that stopped the climb
/// (`None` when the table is a group and the ladder ran out).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: StructureClass,
    pub blocking: Option<CheckReport>,
}

pub fn classify(tbl: &CayleyTable) -> Classification {
    let quasigroup = check_quasigroup(tbl);
    if !quasigroup.passed {
        return Classification {
            class: StructureClass::Groupoid,
            blocking: Some(quasigroup),
        };
    }
    let loop_report = check_loop(tbl);
    if !loop_report.passed {
        return Classification {
            class: StructureClass::Quasigroup,
            blocking: Some(loop_report),
        };
    }
    let ip = check_inverse_property(tbl).expect("loop established");
    if !ip.passed {
        return Classification {
            class: StructureClass::Loop,
            blocking: Some(ip),
        };
    }
    let moufang = check_moufang(tbl).expect("loop established");
    if !moufang.passed {
        return Classification {
            class: StructureClass::IpLoop,
            blocking: Some(moufang),
        };
    }
    let assoc = check_associative(tbl);
    if !assoc.passed {
        return Classification {
            class: StructureClass::MoufangLoop,
            blocking: Some(assoc),
        };
    }
    Classification {
        class: StructureClass::Group,
        blocking: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn table(rows: &[&[usize]]) -> CayleyTable {
        CayleyTable::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn chein_s3() -> CayleyTable {
        fixtures::chein_double(&fixtures::symmetric_group_3()).unwrap()
    }

    /// Backtracking enumeration of all n-by-n Latin squares, row-major,
    /// candidates ascending. Test-only oracle, independent of the checkers.
    fn all_latin_squares(n: usize) -> Vec<CayleyTable> {
        fn rec(n: usize, cell: usize, flat: &mut Vec<usize>, out: &mut Vec<CayleyTable>) {
            if cell == n * n {
                out.push(CayleyTable::from_flat(n, flat.clone()).unwrap());
                return;
            }
            let (g, h) = (cell / n, cell % n);
            'candidates: for v in 0..n {
                for x in 0..h {
                    if flat[g * n + x] == v {
                        continue 'candidates;
                    }
                }
                for x in 0..g {
                    if flat[x * n + h] == v {
                        continue 'candidates;
                    }
                }
                flat.push(v);
                rec(n, cell + 1, flat, out);
                flat.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn quasigroup_verdicts() {
        assert!(check_quasigroup(&fixtures::cyclic_group(6).unwrap()).passed);
        let bad = table(&[&[0, 0], &[1, 1]]);
        let report = check_quasigroup(&bad);
        assert!(!report.passed);
        assert_eq!(report.law, "quasigroup");
        for seed in 0..5 {
            assert!(check_quasigroup(&fixtures::random_loop(5, seed).unwrap()).passed);
        }
    }

    #[test]
    fn loop_verdicts() {
        assert!(check_loop(&fixtures::symmetric_group_3()).passed);
        assert!(check_loop(&chein_s3()).passed);

        // Latin square with no two-sided unit: no row is the identity.
        let unit_free = table(&[&[0, 2, 1], &[1, 0, 2], &[2, 1, 0]]);
        let report = check_loop(&unit_free);
        assert!(!report.passed);
        let Some(Witness::Elements(w)) = &report.witness else {
            panic!("expected element witness, got {:?}", report.witness);
        };
        // the witness names the unique candidate and a point where it fails
        let (candidate, bad) = (w[0], w[1]);
        assert_eq!(unit_free.product(candidate, 0), 0);
        assert!(
            unit_free.product(candidate, bad) != bad || unit_free.product(bad, candidate) != bad
        );

        // A relabeled Z2 is still a loop; its unit just sits at index 1.
        assert!(check_loop(&table(&[&[1, 0], &[0, 1]])).passed);
    }

    #[test]
    fn groups_satisfy_moufang() {
        for n in 1..=8 {
            let tbl = fixtures::cyclic_group(n).unwrap();
            assert!(check_moufang(&tbl).unwrap().passed);
        }
        assert!(
            check_moufang(&fixtures::symmetric_group_3())
                .unwrap()
                .passed
        );
    }

    #[test]
    fn chein_double_is_moufang_but_not_associative() {
        let tbl = chein_s3();
        assert!(check_moufang(&tbl).unwrap().passed);
        let assoc = check_associative(&tbl);
        assert!(!assoc.passed);
        assert_eq!(assoc.witness, Some(Witness::Elements(vec![1, 2, 6])));
    }

    #[test]
    fn moufang_rejects_not_a_loop() {
        let bad = table(&[&[0, 1], &[0, 1]]);
        assert!(matches!(
            check_moufang(&bad),
            Err(AxiomError::NotALoop { .. })
        ));
    }

    #[test]
    fn nonassociative_order_five_loop_fails_moufang() {
        // search the enumerated order-5 loops for the first associativity
        // failure and confirm the Moufang identity fails there too
        let loops = fixtures::enumerate_loops(5);
        let nonassoc = loops
            .iter()
            .find(|t| !check_associative(t).passed)
            .expect("nonassociative order-5 loops exist");
        assert_eq!(
            nonassoc.rows().map(|r| r.to_vec()).collect::<Vec<_>>(),
            vec![
                vec![0, 1, 2, 3, 4],
                vec![1, 0, 3, 4, 2],
                vec![2, 3, 4, 0, 1],
                vec![3, 4, 1, 2, 0],
                vec![4, 2, 0, 1, 3],
            ],
        );
        let report = check_moufang(nonassoc).unwrap();
        assert!(!report.passed);
        assert_eq!(report.witness, Some(Witness::Elements(vec![1, 1, 2])));
    }

    #[test]
    fn commutative_latin_squares_are_flexible() {
        // verified exhaustively over all 4x4 Latin squares, not assumed
        let mut commutative = 0;
        for tbl in all_latin_squares(4) {
            let is_comm = (0..4).all(|g| (0..4).all(|h| tbl.product(g, h) == tbl.product(h, g)));
            if is_comm {
                commutative += 1;
                assert!(check_flexible(&tbl).passed);
            }
        }
        assert_eq!(commutative, 96);
    }

    #[test]
    fn flexibility_verdicts() {
        assert!(check_flexible(&fixtures::symmetric_group_3()).passed);

        // found by searching the 4x4 Latin squares
        let nonflex = all_latin_squares(4)
            .into_iter()
            .find(|t| !check_flexible(t).passed)
            .expect("non-flexible 4x4 Latin squares exist");
        assert_eq!(
            nonflex.rows().map(|r| r.to_vec()).collect::<Vec<_>>(),
            vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![3, 2, 0, 1],
                vec![2, 3, 1, 0],
            ],
        );
        let report = check_flexible(&nonflex);
        assert_eq!(report.witness, Some(Witness::Elements(vec![2, 0])));
    }

    #[test]
    fn inverse_property_verdicts() {
        let z5 = fixtures::cyclic_group(5).unwrap();
        assert!(check_inverse_property(&z5).unwrap().passed);
        let unit = magma::find_unit(&z5).unwrap();
        let inverses = two_sided_inverses(&z5, unit);
        assert_eq!(inverses, vec![Some(0), Some(4), Some(3), Some(2), Some(1)],);

        assert!(check_inverse_property(&chein_s3()).unwrap().passed);

        let non_ip = fixtures::enumerate_loops(5)
            .into_iter()
            .find(|t| !check_inverse_property(t).unwrap().passed)
            .expect("non-IP order-5 loops exist");
        let report = check_inverse_property(&non_ip).unwrap();
        assert!(!report.passed);
        assert!(report.witness.is_some());
    }

    #[test]
    fn antiautomorphism_verdicts() {
        assert!(
            check_antiautomorphism(&fixtures::cyclic_group(6).unwrap())
                .unwrap()
                .passed
        );
        assert!(
            check_antiautomorphism(&fixtures::symmetric_group_3())
                .unwrap()
                .passed
        );
        assert!(check_antiautomorphism(&chein_s3()).unwrap().passed);
    }

    #[test]
    fn antiautomorphism_missing_inverse() {
        // the first enumerated nonassociative order-5 loop has elements
        // with one-sided inverses only; 2 is the first of them
        let loops = fixtures::enumerate_loops(5);
        let non_ip = loops
            .iter()
            .find(|t| !check_inverse_property(t).unwrap().passed)
            .unwrap();
        assert_eq!(
            check_antiautomorphism(non_ip),
            Err(AxiomError::MissingInverse { element: 2 })
        );
    }

    #[test]
    fn associativity_verdicts() {
        assert!(check_associative(&fixtures::cyclic_group(8).unwrap()).passed);
        assert!(check_associative(&fixtures::cyclic_group(1).unwrap()).passed);
        assert!(!check_associative(&chein_s3()).passed);
    }

    #[test]
    fn classify_ladder() {
        assert_eq!(
            classify(&fixtures::cyclic_group(6).unwrap()).class,
            StructureClass::Group
        );

        let chein = classify(&chein_s3());
        assert_eq!(chein.class, StructureClass::MoufangLoop);
        assert_eq!(chein.blocking.as_ref().unwrap().law, "associativity");

        let groupoid = classify(&table(&[&[0, 1], &[0, 1]]));
        assert_eq!(groupoid.class, StructureClass::Groupoid);
        assert!(groupoid.blocking.is_some());
    }

    #[test]
    fn ladder_is_monotone_on_small_corpora() {
        let mut corpus: Vec<CayleyTable> = (1..=6)
            .map(|n| fixtures::cyclic_group(n).unwrap())
            .collect();
        corpus.push(fixtures::symmetric_group_3());
        corpus.push(chein_s3());
        corpus.extend(fixtures::enumerate_loops(4));
        corpus.extend(fixtures::enumerate_loops(5));
        for tbl in &corpus {
            let c = classify(tbl);
            if c.class >= StructureClass::Quasigroup {
                assert!(check_quasigroup(tbl).passed);
            }
            if c.class >= StructureClass::Loop {
                assert!(check_loop(tbl).passed);
            }
            if c.class >= StructureClass::IpLoop {
                assert!(check_inverse_property(tbl).unwrap().passed);
            }
            if c.class >= StructureClass::MoufangLoop {
                assert!(check_moufang(tbl).unwrap().passed);
                // consequences of the Moufang identity, checked not assumed
                assert!(check_flexible(tbl).passed);
                assert!(check_inverse_property(tbl).unwrap().passed);
                assert!(check_antiautomorphism(tbl).unwrap().passed);
            }
            if c.class >= StructureClass::Group {
                assert!(check_associative(tbl).passed);
            }
        }
    }

    #[test]
    fn failed_witnesses_reevaluate_to_violations() {
        let cases = [
            check_associative(&chein_s3()),
            check_moufang(
                &fixtures::enumerate_loops(5)
                    .into_iter()
                    .find(|t| !check_associative(t).passed)
                    .unwrap(),
            )
            .unwrap(),
        ];
        let tables = [
            chein_s3(),
            fixtures::enumerate_loops(5)
                .into_iter()
                .find(|t| !check_associative(t).passed)
                .unwrap(),
        ];
        for (report, tbl) in cases.iter().zip(tables.iter()) {
            let Some(Witness::Elements(w)) = &report.witness else {
                panic!("expected element witness");
            };
            let (g, h, k) = (w[0], w[1], w[2]);
            match report.law.as_str() {
                "associativity" => assert_ne!(
                    tbl.product(tbl.product(g, h), k),
                    tbl.product(g, tbl.product(h, k))
                ),
                "Moufang identity" => {
                    let lhs = tbl.product(tbl.product(g, h), tbl.product(k, g));
                    let hk = tbl.product(h, k);
                    assert!(
                        lhs != tbl.product(tbl.product(g, hk), g)
                            || lhs != tbl.product(g, tbl.product(hk, g))
                    );
                }
                other => panic!("unexpected law {other}"),
            }
        }
    }
}
