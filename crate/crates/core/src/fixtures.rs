//! Deterministic table generators for test corpora.

use thiserror::Error;

use crate::axioms;
use crate::magma::{self, CayleyTable, CheckReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("order must be positive")]
    ZeroOrder,
    #[error("input is not a group: {report}")]
    NotAGroup { report: Box<CheckReport> },
}

/// The cyclic group of order `n`: `g * h = (g + h) mod n`.
pub fn cyclic_group(n: usize) -> Result<CayleyTable, FixtureError> {
    if n == 0 {
        return Err(FixtureError::ZeroOrder);
    }
    let flat = (0..n)
        .flat_map(|g| (0..n).map(move |h| (g + h) % n))
        .collect();
    Ok(CayleyTable::from_flat(n, flat).expect("entries reduced mod n"))
}

/// The symmetric group on three points, order 6.
///
/// Elements are the permutations of `{0, 1, 2}` enumerated in lexicographic
/// order of their image arrays:
///
/// ```text
/// 0: 0 1 2    1: 0 2 1    2: 1 0 2    3: 1 2 0    4: 2 0 1    5: 2 1 0
/// ```
///
/// The product `i * j` composes permutation `j` first, then `i`, matching
/// [`crate::perm::Perm::compose`].
pub fn symmetric_group_3() -> CayleyTable {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index_of = |p: [usize; 3]| PERMS.iter().position(|q| *q == p).unwrap();
    let flat = (0..6)
        .flat_map(|i| {
            (0..6).map(move |j| {
                let composed = [
                    PERMS[i][PERMS[j][0]],
                    PERMS[i][PERMS[j][1]],
                    PERMS[i][PERMS[j][2]],
                ];
                index_of(composed)
            })
        })
        .collect();
    CayleyTable::from_flat(6, flat).expect("compositions of permutations are permutations")
}

/// The Chein double M(G, 2) of a group G of order n: an order-2n table
/// that is always a Moufang loop, and nonassociative exactly when G is
/// nonabelian.
///
/// Indices `0..n` are G itself and `n..2n` the coset Gu, with `gu` at
/// index `n + g`. The products are
///
/// ```text
/// g * h = gh      g * (hu) = (hg)u      (gu) * h = (g h^-1)u      (gu) * (hu) = h^-1 g
/// ```
///
/// The output is brute-force checked against the Moufang identity before
/// it is returned.
pub fn chein_double(group: &CayleyTable) -> Result<CayleyTable, FixtureError> {
    let loop_report = axioms::check_loop(group);
    if !loop_report.passed {
        return Err(FixtureError::NotAGroup {
            report: Box::new(loop_report),
        });
    }
    let assoc = axioms::check_associative(group);
    if !assoc.passed {
        return Err(FixtureError::NotAGroup {
            report: Box::new(assoc),
        });
    }
    let n = group.order();
    let unit = magma::find_unit(group).expect("loop check established a unit");
    let inverse: Vec<usize> = (0..n)
        .map(|g| {
            (0..n)
                .find(|&x| group.product(g, x) == unit)
                .expect("rows of a group table are bijections")
        })
        .collect();

    let mut flat = vec![0; 4 * n * n];
    let order = 2 * n;
    for g in 0..n {
        for h in 0..n {
            flat[g * order + h] = group.product(g, h);
            flat[g * order + (n + h)] = n + group.product(h, g);
            flat[(n + g) * order + h] = n + group.product(g, inverse[h]);
            flat[(n + g) * order + (n + h)] = group.product(inverse[h], g);
        }
    }
    let result = CayleyTable::from_flat(order, flat).expect("entries in range by construction");

    let self_check = axioms::check_moufang(&result).expect("the double of a group is a loop");
    assert!(
        self_check.passed,
        "Chein double failed its Moufang self-check: {self_check}"
    );
    Ok(result)
}

/// Linear congruential generator used by [`random_loop`], fixed so tables
/// are reproducible bit for bit: `x <- (1664525 x + 1013904223) mod 2^32`,
/// seeded with the low 32 bits of the seed; each draw below a bound `b`
/// takes the high half of the fresh state, `(x >> 16) mod b`.
struct Lcg(u32);

impl Lcg {
    fn new(seed: u64) -> Lcg {
        Lcg(seed as u32)
    }

    fn below(&mut self, bound: usize) -> usize {
        self.0 = self.0.wrapping_mul(1_664_525).wrapping_add(1_013_904_223);
        (self.0 >> 16) as usize % bound
    }

    /// Fisher-Yates: for j from len-1 down to 1, swap a[j] with a[draw(j+1)].
    fn shuffle(&mut self, values: &mut [usize]) {
        for j in (1..values.len()).rev() {
            values.swap(j, self.below(j + 1));
        }
    }
}

/// Tracks which values are still available in each row and column while a
/// partial table is completed by backtracking.
struct Completion {
    n: usize,
    flat: Vec<usize>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
}

impl Completion {
    /// A fresh order-n table with the unit fixed at 0: row 0 is the
    /// identity and column 0 is `g -> g`.
    fn with_unit_border(n: usize) -> Completion {
        let mut c = Completion {
            n,
            flat: vec![0; n * n],
            row_used: vec![false; n * n],
            col_used: vec![false; n * n],
        };
        for h in 0..n {
            c.place(0, h, h);
        }
        for g in 1..n {
            c.place(g, 0, g);
        }
        c
    }

    fn feasible(&self, g: usize, h: usize, v: usize) -> bool {
        !self.row_used[g * self.n + v] && !self.col_used[h * self.n + v]
    }

    fn place(&mut self, g: usize, h: usize, v: usize) {
        self.flat[g * self.n + h] = v;
        self.row_used[g * self.n + v] = true;
        self.col_used[h * self.n + v] = true;
    }

    fn remove(&mut self, g: usize, h: usize, v: usize) {
        debug_assert_eq!(self.flat[g * self.n + h], v);
        self.row_used[g * self.n + v] = false;
        self.col_used[h * self.n + v] = false;
    }

    /// The interior cells (g, h) with g, h >= 1, row-major.
    fn interior_cells(n: usize) -> Vec<(usize, usize)> {
        (1..n).flat_map(|g| (1..n).map(move |h| (g, h))).collect()
    }
}

fn fill_first(
    c: &mut Completion,
    cells: &[(usize, usize)],
    orders: &[Vec<usize>],
    i: usize,
) -> bool {
    let Some(&(g, h)) = cells.get(i) else {
        return true;
    };
    for &v in &orders[i] {
        if c.feasible(g, h, v) {
            c.place(g, h, v);
            if fill_first(c, cells, orders, i + 1) {
                return true;
            }
            c.remove(g, h, v);
        }
    }
    false
}

/// A deterministic pseudo-random loop of order `n` with unit 0.
///
/// Row 0 and column 0 are fixed by the unit; the interior is completed
/// cell by cell in row-major order by backtracking. Before the search
/// starts, a candidate order for every interior cell is drawn by
/// shuffling `0..n` with the documented LCG, so the result depends only
/// on `(n, seed)`.
///
/// The naive completion is instant up to order ~20 but its backtracking
/// tail grows steeply past that; this generator targets small test
/// corpora, not bulk sampling of large squares.
pub fn random_loop(n: usize, seed: u64) -> Result<CayleyTable, FixtureError> {
    if n == 0 {
        return Err(FixtureError::ZeroOrder);
    }
    let mut rng = Lcg::new(seed);
    let cells = Completion::interior_cells(n);
    let orders: Vec<Vec<usize>> = cells
        .iter()
        .map(|_| {
            let mut values: Vec<usize> = (0..n).collect();
            rng.shuffle(&mut values);
            values
        })
        .collect();
    let mut c = Completion::with_unit_border(n);
    let filled = fill_first(&mut c, &cells, &orders, 0);
    assert!(filled, "a loop of every positive order exists");
    Ok(CayleyTable::from_flat(n, c.flat).expect("completion keeps entries in range"))
}

fn fill_all(c: &mut Completion, cells: &[(usize, usize)], i: usize, out: &mut Vec<CayleyTable>) {
    let Some(&(g, h)) = cells.get(i) else {
        out.push(
            CayleyTable::from_flat(c.n, c.flat.clone()).expect("completion keeps entries in range"),
        );
        return;
    };
    for v in 0..c.n {
        if c.feasible(g, h, v) {
            c.place(g, h, v);
            fill_all(c, cells, i + 1, out);
            c.remove(g, h, v);
        }
    }
}

/// Every loop of order `n` with the unit fixed at index 0, in the
/// deterministic order produced by row-major backtracking with ascending
/// candidates. Intended for small orders; the count grows fast (56 at
/// order 5, 9408 at order 6).
pub fn enumerate_loops(n: usize) -> Vec<CayleyTable> {
    if n == 0 {
        return Vec::new();
    }
    let cells = Completion::interior_cells(n);
    let mut c = Completion::with_unit_border(n);
    let mut out = Vec::new();
    fill_all(&mut c, &cells, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{classify, StructureClass};

    #[test]
    fn cyclic_small_orders() {
        assert_eq!(
            cyclic_group(1).unwrap().rows().collect::<Vec<_>>(),
            vec![&[0][..]]
        );
        assert_eq!(
            cyclic_group(2).unwrap().rows().collect::<Vec<_>>(),
            vec![&[0, 1][..], &[1, 0][..]]
        );
        assert_eq!(
            classify(&cyclic_group(4).unwrap()).class,
            StructureClass::Group
        );
        assert_eq!(cyclic_group(0), Err(FixtureError::ZeroOrder));
    }

    #[test]
    fn s3_is_a_nonabelian_group() {
        let s3 = symmetric_group_3();
        assert!(axioms::check_associative(&s3).passed);
        assert_eq!(classify(&s3).class, StructureClass::Group);
        // first non-commuting pair in scan order: two transpositions
        let witness = (0..6)
            .flat_map(|g| (0..6).map(move |h| (g, h)))
            .find(|&(g, h)| s3.product(g, h) != s3.product(h, g));
        assert_eq!(witness, Some((1, 2)));
    }

    #[test]
    fn chein_double_orders_and_classes() {
        let m4 = chein_double(&cyclic_group(2).unwrap()).unwrap();
        assert_eq!(m4.order(), 4);
        assert_eq!(classify(&m4).class, StructureClass::Group);

        let m6 = chein_double(&cyclic_group(3).unwrap()).unwrap();
        assert_eq!(m6.order(), 6);
        assert_eq!(classify(&m6).class, StructureClass::Group);

        let m12 = chein_double(&symmetric_group_3()).unwrap();
        assert_eq!(m12.order(), 12);
        assert_eq!(classify(&m12).class, StructureClass::MoufangLoop);
    }

    #[test]
    fn chein_double_rejects_non_groups() {
        let unit_free =
            CayleyTable::from_rows(vec![vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]).unwrap();
        assert!(matches!(
            chein_double(&unit_free),
            Err(FixtureError::NotAGroup { .. })
        ));

        let m12 = chein_double(&symmetric_group_3()).unwrap();
        assert!(matches!(
            chein_double(&m12),
            Err(FixtureError::NotAGroup { .. })
        ));
    }

    #[test]
    fn random_loop_is_deterministic_and_valid() {
        assert_eq!(
            random_loop(1, 99).unwrap().rows().collect::<Vec<_>>(),
            vec![&[0][..]]
        );
        let a = random_loop(5, 42).unwrap();
        let b = random_loop(5, 42).unwrap();
        assert_eq!(a, b);
        assert!(axioms::check_loop(&a).passed);
        assert_eq!(random_loop(0, 1), Err(FixtureError::ZeroOrder));
        for seed in 0..20 {
            for n in [2, 3, 5, 8] {
                assert!(axioms::check_loop(&random_loop(n, seed).unwrap()).passed);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_loops(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 56]);
        for tbl in enumerate_loops(4) {
            assert!(axioms::check_loop(&tbl).passed);
            assert_eq!(magma::find_unit(&tbl), Some(0));
        }
    }

    #[test]
    fn enumeration_order_six_count() {
        assert_eq!(enumerate_loops(6).len(), 9408);
    }

    #[test]
    fn generators_reach_their_declared_rungs() {
        for n in 1..=8 {
            assert_eq!(
                classify(&cyclic_group(n).unwrap()).class,
                StructureClass::Group
            );
        }
        for seed in [7, 11] {
            let tbl = random_loop(6, seed).unwrap();
            assert!(classify(&tbl).class >= StructureClass::Loop);
        }
        let m12 = chein_double(&symmetric_group_3()).unwrap();
        assert!(classify(&m12).class >= StructureClass::MoufangLoop);
    }
}
