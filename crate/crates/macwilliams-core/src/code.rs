//! Linear codes over Galois rings: codeword enumeration, duals (brute
//! force and via the standard-form parity-check matrix), subtypes, and
//! decomposition / weight enumerators.
//!
//! A code is an R-submodule of R^n given by generator rows. Codewords
//! are materialized eagerly by coefficient-space enumeration, so every
//! constructor takes a guard bounding the enumeration size.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::partition::{decomposition_weight, AlphabetPartition};
use crate::ring::{Element, Ring};
use crate::weight::{tuple_weight, WeightKind};
use crate::Error;

/// An R-linear code with its codeword set materialized, sorted, and
/// deduplicated. Equality compares ring, length, and codeword sets, not
/// the generating rows.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ring: Ring,
    n: usize,
    generators: Vec<Vec<Element>>,
    codewords: Vec<Vec<Element>>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.codewords == other.codewords
    }
}
impl Eq for LinearCode {}

impl LinearCode {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    /// Block length n.
    pub fn length(&self) -> usize {
        self.n
    }
    pub fn generators(&self) -> &[Vec<Element>] {
        &self.generators
    }
    /// All codewords, sorted.
    pub fn codewords(&self) -> &[Vec<Element>] {
        &self.codewords
    }
    /// |C|.
    pub fn size(&self) -> u64 {
        self.codewords.len() as u64
    }
    pub fn contains(&self, word: &[Element]) -> bool {
        self.codewords
            .binary_search_by(|c| c.as_slice().cmp(word))
            .is_ok()
    }
}

/// Materializes the code generated by `rows` inside R^n: all R-linear
/// combinations, found by iterating coefficient tuples over R^#rows.
/// The guard bounds that coefficient space.
pub fn code_from_generator(
    ring: &Ring,
    n: usize,
    rows: &[Vec<Element>],
    guard: u64,
) -> Result<LinearCode, Error> {
    for row in rows {
        if row.len() != n {
            return Err(Error::LengthMismatch {
                left: row.len(),
                right: n,
            });
        }
    }
    let space = ring.tuple_space_size(rows.len());
    if space > guard as u128 {
        return Err(Error::GuardExceeded { size: space, guard });
    }
    let mut words: BTreeSet<Vec<Element>> = BTreeSet::new();
    ring.for_each_tuple(rows.len(), |coeffs| {
        let mut word = vec![ring.zero(); n];
        for (c, row) in coeffs.iter().zip(rows) {
            if ring.is_zero(c) {
                continue;
            }
            for (acc, entry) in word.iter_mut().zip(row) {
                *acc = ring.add(acc, &ring.mul(c, entry));
            }
        }
        words.insert(word);
    });
    Ok(LinearCode {
        ring: ring.clone(),
        n,
        generators: rows.to_vec(),
        codewords: words.into_iter().collect(),
    })
}

/// The ambient code R^n.
pub fn ambient_code(ring: &Ring, n: usize, guard: u64) -> Result<LinearCode, Error> {
    let rows: Vec<Vec<Element>> = (0..n)
        .map(|i| {
            let mut row = vec![ring.zero(); n];
            row[i] = ring.one();
            row
        })
        .collect();
    code_from_generator(ring, n, &rows, guard)
}

fn from_codewords(ring: &Ring, n: usize, mut words: Vec<Vec<Element>>) -> LinearCode {
    // Scan order is encoding order, which differs from element order
    // for r > 1; `contains` and equality rely on sorted codewords.
    words.sort();
    LinearCode {
        ring: ring.clone(),
        n,
        generators: words.clone(),
        codewords: words,
    }
}

/// Brute-force dual: scans all of R^n for tuples orthogonal to every
/// generator row.
pub fn dual_brute_force(code: &LinearCode, guard: u64) -> Result<LinearCode, Error> {
    let ring = &code.ring;
    let space = ring.tuple_space_size(code.n);
    if space > guard as u128 {
        return Err(Error::GuardExceeded { size: space, guard });
    }
    let mut words = Vec::new();
    ring.for_each_tuple(code.n, |x| {
        if code
            .generators
            .iter()
            .all(|g| ring.is_zero(&ring.inner_product(x, g)))
        {
            words.push(x.to_vec());
        }
    });
    Ok(from_codewords(ring, code.n, words))
}

/// Generator matrix in chain-ring standard form, found by γ-adic
/// Gaussian elimination with column permutation.
#[derive(Clone, Debug)]
pub struct StandardForm {
    /// Permuted column j holds original column `permutation[j]`.
    pub permutation: Vec<usize>,
    /// K pivot rows over the permuted coordinates: row for pivot level v
    /// starts with zeros, carries p^v at its pivot, zeros at the other
    /// pivots of the same level, and entries of valuation ≥ v after.
    pub rows: Vec<Vec<Element>>,
    /// Pivot level of each row, nondecreasing.
    pub levels: Vec<u32>,
    /// Subtype (k_0, …, k_{s−1}): number of pivots per level.
    pub subtype: Vec<u64>,
}

impl StandardForm {
    /// Rank K = Σ k_i.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// |C| determined by the subtype: Π_i q^((s−i)·k_i).
pub fn size_from_subtype(ring: &Ring, subtype: &[u64]) -> BigInt {
    let mut total = BigInt::from(1);
    for (i, &k) in subtype.iter().enumerate() {
        let exp = (ring.s() as u64 - i as u64) * k;
        total *= BigInt::from(ring.residue_size()).pow(exp as u32);
    }
    total
}

/// Reduces the generator rows to standard form. Always succeeds over a
/// chain ring: every nonzero entry factors as p^v · unit.
pub fn standard_form(code: &LinearCode) -> StandardForm {
    let ring = &code.ring;
    let n = code.n;
    let mut rows: Vec<Vec<Element>> = code.generators.to_vec();
    let mut permutation: Vec<usize> = (0..n).collect();
    let mut levels: Vec<u32> = Vec::new();
    let mut pivots = 0usize;

    loop {
        // Minimal valuation over the untouched submatrix.
        let mut best: Option<(u32, usize, usize)> = None;
        for (ri, row) in rows.iter().enumerate().skip(pivots) {
            for (ci, cell) in row.iter().enumerate().skip(pivots) {
                let v = ring.valuation(cell);
                if v < ring.s() && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, ri, ci));
                }
            }
        }
        let Some((v, ri, ci)) = best else {
            break;
        };
        rows.swap(pivots, ri);
        for row in rows.iter_mut() {
            row.swap(pivots, ci);
        }
        permutation.swap(pivots, ci);

        // Normalize the pivot to exactly p^v.
        let unit = ring.exact_div_p(&rows[pivots][pivots], v);
        let inv = ring.inverse(&unit).expect("p^v-cofactor is a unit");
        for entry in rows[pivots].iter_mut() {
            *entry = ring.mul(entry, &inv);
        }

        // Clear the pivot column in every unpivoted row and in pivot
        // rows of the same level, leaving the block-triangular shape
        // with identity diagonal blocks.
        let pivot_row = rows[pivots].clone();
        for (ri, row) in rows.iter_mut().enumerate() {
            if ri == pivots || (ri < pivots && levels[ri] < v) {
                continue;
            }
            let entry = &row[pivots];
            if ring.is_zero(entry) {
                continue;
            }
            let factor = ring.exact_div_p(entry, v);
            for (target, source) in row.iter_mut().zip(&pivot_row) {
                *target = ring.sub(target, &ring.mul(&factor, source));
            }
        }

        levels.push(v);
        pivots += 1;
    }

    rows.truncate(pivots);
    let mut subtype = vec![0u64; ring.s() as usize];
    for &v in &levels {
        subtype[v as usize] += 1;
    }
    StandardForm {
        permutation,
        rows,
        levels,
        subtype,
    }
}

/// Parity-check rows of the code (generator rows of the dual), derived
/// from the standard form by back-substitution, over the original
/// coordinate order. Dual subtype: (n−K, k_{s−1}, …, k₁).
pub fn parity_check_rows(code: &LinearCode, sf: &StandardForm) -> Vec<Vec<Element>> {
    let ring = &code.ring;
    let n = code.n;
    let k = sf.rank();
    // Row r constrains x[r] ≡ −Σ_{c>r} A[r][c]·x[c] mod p^(s−level),
    // where A is the pivot row divided by p^level.
    let reduced: Vec<Vec<Element>> = sf
        .rows
        .iter()
        .zip(&sf.levels)
        .map(|(row, &v)| row.iter().map(|e| ring.exact_div_p(e, v)).collect())
        .collect();

    let back_substitute = |x: &mut Vec<Element>, limit: usize| {
        for r in (0..limit).rev() {
            let mut acc = ring.zero();
            for c in r + 1..n {
                acc = ring.add(&acc, &ring.mul(&reduced[r][c], &x[c]));
            }
            x[r] = ring.neg(&acc);
        }
    };

    let mut out = Vec::new();
    // Free rows: one per tail coordinate.
    for t in k..n {
        let mut x = vec![ring.zero(); n];
        x[t] = ring.one();
        back_substitute(&mut x, k);
        out.push(x);
    }
    // Torsion rows: p^(s−level) at each pivot of level ≥ 1.
    for r in 0..k {
        let v = sf.levels[r];
        if v == 0 {
            continue;
        }
        let mut x = vec![ring.zero(); n];
        x[r] = ring.scalar(ring.p().pow(ring.s() - v));
        back_substitute(&mut x, r);
        out.push(x);
    }

    // Undo the column permutation.
    out.into_iter()
        .map(|x| {
            let mut orig = vec![ring.zero(); n];
            for (j, e) in x.into_iter().enumerate() {
                orig[sf.permutation[j]] = e;
            }
            orig
        })
        .collect()
}

/// Dual via the standard-form parity-check matrix; reaches codes whose
/// ambient space is too large for the brute-force scan.
pub fn dual_from_standard_form(code: &LinearCode, guard: u64) -> Result<LinearCode, Error> {
    let sf = standard_form(code);
    let rows = parity_check_rows(code, &sf);
    code_from_generator(&code.ring, code.n, &rows, guard)
}

/// The dual code: brute-force scan when R^n fits the guard, otherwise
/// the standard-form parity-check construction.
pub fn dual_code(code: &LinearCode, guard: u64) -> Result<LinearCode, Error> {
    if code.ring.tuple_space_size(code.n) <= guard as u128 {
        dual_brute_force(code, guard)
    } else {
        dual_from_standard_form(code, guard)
    }
}

/// A decomposition enumerator: decomposition π ↦ |P_π ∩ C|. Only
/// nonzero counts are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enumerator {
    entries: BTreeMap<Vec<u64>, u64>,
}

impl Enumerator {
    /// Wraps precomputed counts (from the identity transform or a file).
    /// Zero counts are dropped so equality is well defined.
    pub fn from_counts(entries: BTreeMap<Vec<u64>, u64>) -> Enumerator {
        let entries = entries.into_iter().filter(|&(_, c)| c != 0).collect();
        Enumerator { entries }
    }
    pub fn entries(&self) -> &BTreeMap<Vec<u64>, u64> {
        &self.entries
    }
    pub fn get(&self, pi: &[u64]) -> u64 {
        self.entries.get(pi).copied().unwrap_or(0)
    }
    /// Σ counts = |C|.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Counts codewords per decomposition class of the partition.
pub fn decomposition_enumerator(
    code: &LinearCode,
    partition: &AlphabetPartition,
) -> Result<Enumerator, Error> {
    if partition.ring() != &code.ring {
        return Err(Error::IncompatiblePartition(format!(
            "partition ring differs from the code's ring GR({}^{}, {})",
            code.ring.p(),
            code.ring.s(),
            code.ring.r()
        )));
    }
    let mut entries: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    for word in &code.codewords {
        *entries.entry(partition.decompose(word)).or_insert(0) += 1;
    }
    Ok(Enumerator { entries })
}

/// Weight enumerator by direct per-codeword tally: weight ↦ count.
pub fn weight_enumerator(
    code: &LinearCode,
    kind: &WeightKind,
) -> Result<BTreeMap<BigRational, u64>, Error> {
    kind.check_compatible(&code.ring)?;
    let mut out: BTreeMap<BigRational, u64> = BTreeMap::new();
    for word in &code.codewords {
        let w = tuple_weight(&code.ring, kind, word)?;
        *out.entry(w).or_insert(0) += 1;
    }
    Ok(out)
}

/// The minimum `kind`-weight over the nonzero codewords, or `None` for
/// the zero code (whose minimum distance is conventionally infinite).
pub fn min_weight(code: &LinearCode, kind: &WeightKind) -> Result<Option<BigRational>, Error> {
    kind.check_compatible(&code.ring)?;
    let mut best: Option<BigRational> = None;
    for word in &code.codewords {
        if word.iter().all(|a| code.ring.is_zero(a)) {
            continue;
        }
        let w = tuple_weight(&code.ring, kind, word)?;
        if best.as_ref().is_none_or(|b| w < *b) {
            best = Some(w);
        }
    }
    Ok(best)
}

/// Weight enumerator by aggregating a decomposition enumerator through
/// the per-block weights; must equal the direct tally whenever the
/// weight is constant on the partition's blocks.
pub fn aggregate_enumerator(
    enumerator: &Enumerator,
    partition: &AlphabetPartition,
    kind: &WeightKind,
) -> Result<BTreeMap<BigRational, u64>, Error> {
    let mut out: BTreeMap<BigRational, u64> = BTreeMap::new();
    for (pi, &count) in enumerator.entries() {
        let w = decomposition_weight(pi, partition, kind)?;
        *out.entry(w).or_insert(0) += count;
    }
    Ok(out)
}

/// Counts codewords by their per-weight-value coordinate profile: for
/// weight values w_0 < w_1 < … over the alphabet, the key counts how
/// many coordinates carry each value.
pub fn weight_class_enumerator(
    code: &LinearCode,
    kind: &WeightKind,
) -> Result<BTreeMap<Vec<u64>, u64>, Error> {
    kind.check_compatible(&code.ring)?;
    let values = crate::weight::weight_values(&code.ring, kind)?;
    let index: BTreeMap<&BigRational, usize> =
        values.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut out: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    for word in &code.codewords {
        let mut profile = vec![0u64; values.len()];
        for a in word {
            let w = crate::weight::element_weight(&code.ring, kind, a)?;
            profile[index[&w]] += 1;
        }
        *out.entry(profile).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{build_partition, PartitionKind};
    use crate::weight::{rat, rat_frac};
    use crate::DEFAULT_GUARD;
    use proptest::prelude::*;

    fn z9() -> Ring {
        Ring::zn(3, 2).unwrap()
    }

    fn scalars(ring: &Ring, values: &[u64]) -> Vec<Element> {
        values.iter().map(|&v| ring.scalar(v)).collect()
    }

    fn z9_example_code() -> LinearCode {
        let ring = z9();
        let row = scalars(&ring, &[3, 2, 8]);
        code_from_generator(&ring, 3, &[row], DEFAULT_GUARD).unwrap()
    }

    #[test]
    fn z9_generator_enumerates_nine_words() {
        let code = z9_example_code();
        assert_eq!(code.size(), 9);
        let ring = z9();
        let expected: Vec<Vec<Element>> = [
            [0, 0, 0],
            [0, 3, 3],
            [0, 6, 6],
            [3, 2, 8],
            [3, 5, 2],
            [3, 8, 5],
            [6, 1, 4],
            [6, 4, 7],
            [6, 7, 1],
        ]
        .iter()
        .map(|w| scalars(&ring, w))
        .collect();
        assert_eq!(code.codewords(), expected.as_slice());
        assert!(code.contains(&scalars(&ring, &[6, 7, 1])));
        assert!(!code.contains(&scalars(&ring, &[1, 0, 0])));
    }

    #[test]
    fn identity_generator_gives_ambient() {
        let ring = Ring::zn(2, 2).unwrap();
        let code = ambient_code(&ring, 2, DEFAULT_GUARD).unwrap();
        assert_eq!(code.size(), 16);

        let f27 = Ring::new(3, 3, 1, None).unwrap();
        let alpha = f27.element(&[0, 1, 0]).unwrap();
        let row = vec![f27.one(), alpha, f27.one()];
        let code = code_from_generator(&f27, 3, &[row], DEFAULT_GUARD).unwrap();
        assert_eq!(code.size(), 27);
    }

    #[test]
    fn guard_bounds_enumeration() {
        let ring = z9();
        let rows: Vec<Vec<Element>> = (0..9).map(|_| scalars(&ring, &[1, 0])).collect();
        assert!(matches!(
            code_from_generator(&ring, 2, &rows, 1000),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn dual_of_z9_example() {
        let code = z9_example_code();
        let dual = dual_brute_force(&code, DEFAULT_GUARD).unwrap();
        assert_eq!(dual.size(), 81);
        let ring = z9();
        assert!(dual.contains(&scalars(&ring, &[3, 0, 0])));
        assert!(dual.contains(&scalars(&ring, &[6, 0, 0])));
        // The listed dual generator rows regenerate the same set.
        let regen = code_from_generator(
            &ring,
            3,
            &[scalars(&ring, &[1, 0, 3]), scalars(&ring, &[0, 1, 2])],
            DEFAULT_GUARD,
        )
        .unwrap();
        assert_eq!(regen, dual);
    }

    #[test]
    fn dual_extremes() {
        let ring = Ring::zn(2, 2).unwrap();
        let ambient = ambient_code(&ring, 2, DEFAULT_GUARD).unwrap();
        let dual = dual_brute_force(&ambient, DEFAULT_GUARD).unwrap();
        assert_eq!(dual.size(), 1);
        let back = dual_brute_force(&dual, DEFAULT_GUARD).unwrap();
        assert_eq!(back, ambient);
    }

    #[test]
    fn f8_dual_size() {
        let f8 = Ring::new(2, 3, 1, None).unwrap();
        let alpha = f8.element(&[0, 1, 0]).unwrap();
        let alpha2 = f8.element(&[0, 0, 1]).unwrap();
        let code =
            code_from_generator(&f8, 3, &[vec![f8.one(), alpha, alpha2]], DEFAULT_GUARD).unwrap();
        assert_eq!(code.size(), 8);
        let dual = dual_brute_force(&code, DEFAULT_GUARD).unwrap();
        assert_eq!(dual.size(), 64);
        assert_eq!(code.size() * dual.size(), 8u64.pow(3));
    }

    #[test]
    fn standard_form_subtypes() {
        let code = z9_example_code();
        let sf = standard_form(&code);
        assert_eq!(sf.subtype, vec![1, 0]);
        assert_eq!(size_from_subtype(&z9(), &sf.subtype), BigInt::from(9));

        let ring = z9();
        let zero = code_from_generator(&ring, 2, &[], DEFAULT_GUARD).unwrap();
        assert_eq!(standard_form(&zero).subtype, vec![0, 0]);

        let ambient = ambient_code(&ring, 3, DEFAULT_GUARD).unwrap();
        assert_eq!(standard_form(&ambient).subtype, vec![3, 0]);

        // Non-free code: ⟨(3,0), (0,3)⟩ has subtype (0, 2) and 9 words.
        let torsion = code_from_generator(
            &ring,
            2,
            &[scalars(&ring, &[3, 0]), scalars(&ring, &[0, 3])],
            DEFAULT_GUARD,
        )
        .unwrap();
        let sf = standard_form(&torsion);
        assert_eq!(sf.subtype, vec![0, 2]);
        assert_eq!(torsion.size(), 9);
        assert_eq!(
            size_from_subtype(&ring, &sf.subtype),
            BigInt::from(torsion.size())
        );
    }

    #[test]
    fn standard_form_shape() {
        let ring = Ring::zn(2, 3).unwrap();
        let rows = vec![
            scalars(&ring, &[2, 3, 5, 1]),
            scalars(&ring, &[4, 2, 6, 0]),
            scalars(&ring, &[0, 4, 4, 4]),
        ];
        let code = code_from_generator(&ring, 4, &rows, DEFAULT_GUARD).unwrap();
        let sf = standard_form(&code);
        assert!(sf.levels.windows(2).all(|w| w[0] <= w[1]));
        for (r, row) in sf.rows.iter().enumerate() {
            let v = sf.levels[r];
            for (c, entry) in row.iter().enumerate() {
                if c < r {
                    assert!(ring.is_zero(entry), "row {} col {}", r, c);
                } else if c == r {
                    assert_eq!(*entry, ring.scalar(ring.p().pow(v)));
                } else if c < sf.rank() && sf.levels[c] == v {
                    // Same-level identity block is diagonal.
                    assert!(ring.is_zero(entry), "row {} col {}", r, c);
                } else {
                    assert!(ring.valuation(entry) >= v);
                }
            }
        }
    }

    #[test]
    fn standard_form_regenerates_permuted_code() {
        let ring = z9();
        let samples = [
            vec![scalars(&ring, &[3, 2, 8])],
            vec![scalars(&ring, &[1, 4, 7]), scalars(&ring, &[0, 3, 6])],
            vec![scalars(&ring, &[6, 3, 0]), scalars(&ring, &[0, 0, 3])],
        ];
        for rows in &samples {
            let code = code_from_generator(&ring, 3, rows, DEFAULT_GUARD).unwrap();
            let sf = standard_form(&code);
            let regen = code_from_generator(&ring, 3, &sf.rows, DEFAULT_GUARD).unwrap();
            let permuted: BTreeSet<Vec<Element>> = code
                .codewords()
                .iter()
                .map(|w| sf.permutation.iter().map(|&j| w[j].clone()).collect())
                .collect();
            let regen_set: BTreeSet<Vec<Element>> = regen.codewords().iter().cloned().collect();
            assert_eq!(permuted, regen_set);
            assert_eq!(
                size_from_subtype(&ring, &sf.subtype),
                BigInt::from(code.size())
            );
        }
    }

    #[test]
    fn dual_routes_agree() {
        let cases: Vec<(Ring, usize, Vec<Vec<u64>>)> = vec![
            (z9(), 3, vec![vec![3, 2, 8]]),
            (z9(), 2, vec![vec![3, 0], vec![0, 3]]),
            (
                Ring::zn(2, 2).unwrap(),
                3,
                vec![vec![1, 1, 1], vec![0, 2, 0]],
            ),
            (Ring::zn(2, 3).unwrap(), 2, vec![vec![2, 6]]),
            (Ring::zn(2, 2).unwrap(), 2, vec![]),
        ];
        for (ring, n, raw_rows) in cases {
            let rows: Vec<Vec<Element>> = raw_rows.iter().map(|r| scalars(&ring, r)).collect();
            let code = code_from_generator(&ring, n, &rows, DEFAULT_GUARD).unwrap();
            let brute = dual_brute_force(&code, DEFAULT_GUARD).unwrap();
            let standard = dual_from_standard_form(&code, DEFAULT_GUARD).unwrap();
            assert_eq!(brute, standard);
            assert_eq!(
                BigInt::from(code.size()) * BigInt::from(brute.size()),
                BigInt::from(ring.size()).pow(n as u32)
            );
        }

        // Extension rings exercise non-scalar arithmetic in both routes.
        let gr = Ring::new(2, 2, 2, None).unwrap();
        let alpha = gr.element(&[0, 1]).unwrap();
        let rows = vec![vec![gr.one(), alpha.clone(), gr.scalar(2)]];
        let code = code_from_generator(&gr, 3, &rows, DEFAULT_GUARD).unwrap();
        let brute = dual_brute_force(&code, DEFAULT_GUARD).unwrap();
        let standard = dual_from_standard_form(&code, DEFAULT_GUARD).unwrap();
        assert_eq!(brute, standard);
    }

    #[test]
    fn dual_subtype_reverses() {
        // Subtype (k_0, …, k_{s−1}) dualizes to (n−K, k_{s−1}, …, k_1).
        let ring = Ring::zn(2, 3).unwrap();
        let rows = vec![
            scalars(&ring, &[1, 3, 5]),
            scalars(&ring, &[0, 2, 2]),
            scalars(&ring, &[0, 0, 4]),
        ];
        let code = code_from_generator(&ring, 3, &rows, DEFAULT_GUARD).unwrap();
        let sf = standard_form(&code);
        assert_eq!(sf.subtype, vec![1, 1, 1]);
        let dual = dual_code(&code, DEFAULT_GUARD).unwrap();
        let dual_sf = standard_form(&dual);
        assert_eq!(dual_sf.subtype, vec![0, 1, 1]);
    }

    #[test]
    fn lee_enumerator_of_z9_example() {
        let code = z9_example_code();
        let lee = build_partition(PartitionKind::LeeBlocks, &z9()).unwrap();
        let e = decomposition_enumerator(&code, &lee).unwrap();
        assert_eq!(e.get(&[3, 0, 0, 0, 0]), 1);
        assert_eq!(e.get(&[0, 1, 1, 1, 0]), 2);
        assert_eq!(e.get(&[0, 0, 1, 1, 1]), 2);
        assert_eq!(e.get(&[1, 0, 0, 2, 0]), 2);
        assert_eq!(e.get(&[0, 1, 0, 1, 1]), 2);
        assert_eq!(e.total(), 9);
        assert!(e.entries().keys().all(|pi| pi.iter().sum::<u64>() == 3));
    }

    #[test]
    fn hom_enumerator_of_z9_example() {
        let code = z9_example_code();
        let hom = build_partition(PartitionKind::HomZUSR, &z9()).unwrap();
        let e = decomposition_enumerator(&code, &hom).unwrap();
        assert_eq!(e.get(&[3, 0, 0]), 1);
        assert_eq!(e.get(&[1, 0, 2]), 2);
        assert_eq!(e.get(&[0, 2, 1]), 6);
        assert_eq!(e.total(), 9);
    }

    #[test]
    fn subfield_enumerator_of_f27_dual() {
        let f27 = Ring::new(3, 3, 1, None).unwrap();
        let alpha = f27.element(&[0, 1, 0]).unwrap();
        let code =
            code_from_generator(&f27, 3, &[vec![f27.one(), alpha, f27.one()]], DEFAULT_GUARD)
                .unwrap();
        let dual = dual_brute_force(&code, DEFAULT_GUARD).unwrap();
        assert_eq!(dual.size(), 729);
        let partition = build_partition(PartitionKind::SubfieldOrbits, &f27).unwrap();
        let e = decomposition_enumerator(&dual, &partition).unwrap();
        // (1, alpha^2 + 2, 0) is a dual word; exactly four dual words share
        // its orbit decomposition.
        let witness = vec![f27.one(), f27.element(&[2, 0, 1]).unwrap(), f27.zero()];
        assert!(dual.contains(&witness));
        let rho = partition.decompose(&witness);
        assert_eq!(rho.iter().sum::<u64>(), 3);
        assert_eq!(e.get(&rho), 4);
    }

    #[test]
    fn weight_enumerators_of_z9_example() {
        let code = z9_example_code();
        let lee = weight_enumerator(&code, &WeightKind::Lee).unwrap();
        let expected: BTreeMap<BigRational, u64> =
            [(rat(0), 1), (rat(6), 4), (rat(8), 2), (rat(9), 2)].into();
        assert_eq!(lee, expected);

        let ring = z9();
        let zero = code_from_generator(&ring, 3, &[], DEFAULT_GUARD).unwrap();
        let w = weight_enumerator(&zero, &WeightKind::Hamming).unwrap();
        assert_eq!(w, [(rat(0), 1)].into());

        // Aggregation through the Lee partition reproduces the tally.
        let partition = build_partition(PartitionKind::LeeBlocks, &ring).unwrap();
        let e = decomposition_enumerator(&code, &partition).unwrap();
        assert_eq!(
            aggregate_enumerator(&e, &partition, &WeightKind::Lee).unwrap(),
            lee
        );
        // Homogeneous weights of the same code via the same partition.
        let hom_direct = weight_enumerator(&code, &WeightKind::Homogeneous).unwrap();
        assert_eq!(
            aggregate_enumerator(&e, &partition, &WeightKind::Homogeneous).unwrap(),
            hom_direct
        );
        assert_eq!(hom_direct.get(&rat_frac(7, 2)), Some(&6));
    }

    #[test]
    fn weight_class_profile_of_f8_code() {
        let f8 = Ring::new(2, 3, 1, None).unwrap();
        let alpha = f8.element(&[0, 1, 0]).unwrap();
        let alpha2 = f8.element(&[0, 0, 1]).unwrap();
        let code =
            code_from_generator(&f8, 3, &[vec![f8.one(), alpha, alpha2]], DEFAULT_GUARD).unwrap();
        let profile = weight_class_enumerator(&code, &WeightKind::subfield_default()).unwrap();
        let expected: BTreeMap<Vec<u64>, u64> =
            [(vec![3, 0, 0], 1), (vec![0, 0, 3], 4), (vec![0, 1, 2], 3)].into();
        assert_eq!(profile, expected);
    }

    #[test]
    fn codewords_form_a_module() {
        let code = z9_example_code();
        let ring = z9();
        for a in code.codewords() {
            for b in code.codewords() {
                let sum: Vec<Element> = a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect();
                assert!(code.contains(&sum));
            }
            let scaled: Vec<Element> = a.iter().map(|x| ring.scalar_mul(5, x)).collect();
            assert!(code.contains(&scaled));
        }
    }

    #[test]
    fn code_level_character_sums() {
        // Σ_{c∈C} χ_a(c) = |C| when a ∈ C⊥, 0 otherwise.
        let code = z9_example_code();
        let ring = z9();
        let dual = dual_brute_force(&code, DEFAULT_GUARD).unwrap();
        let mut checked_zero = 0;
        ring.for_each_tuple(3, |a| {
            let mut sum = crate::cyclotomic::CycInt::zero(ring.p(), ring.char_order());
            for c in code.codewords() {
                let chi = crate::cyclotomic::character(&ring, a, c).unwrap();
                sum = sum.add(&chi).unwrap();
            }
            if dual.contains(a) {
                assert_eq!(sum.to_integer().unwrap(), BigInt::from(code.size()));
            } else {
                assert!(sum.is_zero());
                checked_zero += 1;
            }
        });
        assert_eq!(checked_zero, 729 - 81);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn random_codes_respect_duality(
            ring_pick in 0usize..3,
            raw_rows in proptest::collection::vec(
                proptest::collection::vec(0u64..16, 2),
                1..=2,
            ),
        ) {
            let rings = [
                Ring::zn(2, 2).unwrap(),
                Ring::zn(3, 2).unwrap(),
                Ring::new(2, 2, 1, None).unwrap(),
            ];
            let ring = &rings[ring_pick];
            let rows: Vec<Vec<Element>> = raw_rows
                .iter()
                .map(|r| r.iter().map(|&v| ring.decode(v % ring.size())).collect())
                .collect();
            let code = code_from_generator(ring, 2, &rows, DEFAULT_GUARD).unwrap();
            let dual = dual_brute_force(&code, DEFAULT_GUARD).unwrap();
            prop_assert_eq!(
                BigInt::from(code.size()) * BigInt::from(dual.size()),
                BigInt::from(ring.size()).pow(2)
            );
            let back = dual_brute_force(&dual, DEFAULT_GUARD).unwrap();
            prop_assert_eq!(&back, &code);
            let standard = dual_from_standard_form(&code, DEFAULT_GUARD).unwrap();
            prop_assert_eq!(&standard, &dual);
            prop_assert_eq!(
                size_from_subtype(ring, &standard_form(&code).subtype),
                BigInt::from(code.size())
            );
        }
    }
}
