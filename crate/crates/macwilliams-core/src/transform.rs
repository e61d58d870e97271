//! The identity engine: dual enumerators predicted from primal ones.
//!
//! For a linear code C over a Galois ring and any of the four alphabet
//! partitions, the dual decomposition enumerator is determined by the
//! primal one:
//!
//! ```text
//! E_ρ(C⊥) = (1/|C|) · Σ_π K_π(ρ) · E_π(C)
//! ```
//!
//! This module computes that right-hand side exactly, verifies it
//! against brute-force dual enumeration for every ρ, checks the two
//! classical Hamming-weight identities over fields (the binomial-moment
//! form and the Krawtchouk form), and searches for pairs of codes
//! showing that plain weight enumerators do not determine the dual's
//! weight enumerator — the failure that decomposition enumerators
//! repair.
//!
//! Every value is exact: a non-integer or negative predicted count is a
//! hard error, never rounded.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::code::{
    code_from_generator, decomposition_enumerator, dual_brute_force, dual_code,
    weight_class_enumerator, weight_enumerator, Enumerator, LinearCode,
};
use crate::cyclotomic::CycInt;
use crate::error::Error;
use crate::krawtchouk::{block_pair_table, kraw_cyc, kraw_hamming, BlockPairTable};
use crate::partition::{all_decompositions, AlphabetPartition, PartitionKind};
use crate::ring::{Element, Ring};
use crate::weight::WeightKind;

/// One compared value: a predicted count against an independently
/// computed one. For decomposition identities `rho` is the dual-side
/// decomposition; for the classical Hamming checks it is the singleton
/// `[j]` (dual weight) or `[ν]` (moment order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRow {
    pub rho: Vec<u64>,
    pub predicted: BigRational,
    pub oracle: BigRational,
    pub matches: bool,
}

impl IdentityRow {
    fn new(rho: Vec<u64>, predicted: BigRational, oracle: BigRational) -> IdentityRow {
        let matches = predicted == oracle;
        IdentityRow {
            rho,
            predicted,
            oracle,
            matches,
        }
    }
}

/// Outcome of checking an identity on one code: per-ρ comparisons, the
/// binomial-moment comparisons where applicable, and the overall
/// verdict. `pass` holds exactly when every row matches.
///
/// The crate has no clock; callers that time a verification fill
/// `elapsed_micros` themselves.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub kind: PartitionKind,
    pub rows: Vec<IdentityRow>,
    pub moment_rows: Vec<IdentityRow>,
    pub pass: bool,
    pub elapsed_micros: Option<u64>,
}

impl IdentityReport {
    fn new(kind: PartitionKind, rows: Vec<IdentityRow>, moment_rows: Vec<IdentityRow>) -> Self {
        let pass = rows.iter().all(|r| r.matches) && moment_rows.iter().all(|r| r.matches);
        IdentityReport {
            kind,
            rows,
            moment_rows,
            pass,
            elapsed_micros: None,
        }
    }
}

/// Σ_π K_π(ρ)·E_π(C) / |C| as a checked non-negative integer. The sum
/// runs in ℤ[ξ] because single coefficients can be irrational; the
/// aggregate is a codeword count, so anything but a non-negative
/// integer is an upstream bug.
fn rhs_count(
    e: &Enumerator,
    table: &BlockPairTable,
    rho: &[u64],
    size: &BigInt,
) -> Result<u64, Error> {
    let ring = table.partition().ring();
    let mut acc = CycInt::zero(ring.p(), ring.char_order());
    for (pi, &count) in e.entries() {
        let k = kraw_cyc(table, pi, rho)?;
        acc = acc.add(&k.scale(&BigInt::from(count)))?;
    }
    let rhs = acc.to_rational()? / BigRational::from_integer(size.clone());
    if !rhs.is_integer() || rhs.is_negative() {
        return Err(Error::NonIntegerResult(format!(
            "predicted count {rhs} at {rho:?}"
        )));
    }
    rhs.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegerResult(format!("predicted count {rhs} overflows u64")))
}

/// The identity's right-hand side (1/|C|)·Σ_π K_π(ρ)·E_π(C) for one
/// dual-side decomposition ρ. Accepts the four-count Z/U/S/R form of ρ
/// where that partition collapses. Errors if the value is not a
/// non-negative integer.
pub fn identity_rhs(
    code: &LinearCode,
    table: &BlockPairTable,
    rho: &[u64],
) -> Result<BigRational, Error> {
    let partition = table.partition();
    let rho = partition.adapt_counts(rho)?;
    let n = code.length() as u64;
    let total: u64 = rho.iter().sum();
    if total != n {
        return Err(Error::BadElement(format!(
            "decomposition sums to {total}, code length is {n}"
        )));
    }
    let e = decomposition_enumerator(code, partition)?;
    let count = rhs_count(&e, table, &rho, &BigInt::from(code.size()))?;
    Ok(BigRational::from_integer(BigInt::from(count)))
}

/// The full predicted dual enumerator: the identity's right-hand side
/// evaluated at every decomposition of length n, zero counts dropped.
pub fn predicted_dual_enumerator(
    code: &LinearCode,
    table: &BlockPairTable,
) -> Result<Enumerator, Error> {
    let e = decomposition_enumerator(code, table.partition())?;
    predicted_from(&e, table, code.length() as u64)
}

/// The predicted dual enumerator from a code-side enumerator given as
/// data: count at ρ is (1/Σ_π E_π)·Σ_π K_π(ρ)·E_π over all ρ of weight
/// n. The divisor is the enumerator's own total.
fn predicted_from(e: &Enumerator, table: &BlockPairTable, n: u64) -> Result<Enumerator, Error> {
    let partition = table.partition();
    let size = BigInt::from(e.total());
    let mut out: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    for rho in all_decompositions(partition.block_count(), n) {
        let count = rhs_count(e, table, &rho, &size)?;
        if count != 0 {
            out.insert(rho, count);
        }
    }
    Ok(Enumerator::from_counts(out))
}

/// Compares the predicted dual enumerator against the actual dual's,
/// decomposition by decomposition. Rows cover every ρ on which either
/// side is nonzero; a ρ missing from both sides matches trivially.
pub fn verify_identity(
    code: &LinearCode,
    partition: &AlphabetPartition,
    guard: u64,
) -> Result<IdentityReport, Error> {
    let e = decomposition_enumerator(code, partition)?;
    verify_identity_with(code, partition, &e, guard)
}

/// Like [`verify_identity`], but takes the code-side enumerator as
/// given instead of recomputing it, so a previously emitted enumerator
/// can be checked against the code's actual dual. The divisor |C| is
/// the enumerator's total; an enumerator that does not belong to the
/// code yields non-matching rows or an error flagging a non-rational or
/// non-integer prediction, never a silent pass.
pub fn verify_identity_with(
    code: &LinearCode,
    partition: &AlphabetPartition,
    e: &Enumerator,
    guard: u64,
) -> Result<IdentityReport, Error> {
    let table = block_pair_table(partition);
    let predicted = predicted_from(e, &table, code.length() as u64)?;
    let dual = dual_code(code, guard)?;
    let oracle = decomposition_enumerator(&dual, partition)?;

    let mut keys: BTreeSet<&Vec<u64>> = predicted.entries().keys().collect();
    keys.extend(oracle.entries().keys());
    let rows = keys
        .into_iter()
        .map(|rho| {
            IdentityRow::new(
                rho.clone(),
                BigRational::from_integer(BigInt::from(predicted.get(rho))),
                BigRational::from_integer(BigInt::from(oracle.get(rho))),
            )
        })
        .collect();
    Ok(IdentityReport::new(partition.kind(), rows, Vec::new()))
}

/// Hamming weight distribution (A_0, …, A_n) of a code.
fn hamming_distribution(code: &LinearCode) -> Vec<u64> {
    let ring = code.ring();
    let mut a = vec![0u64; code.length() + 1];
    for word in code.codewords() {
        let w = word.iter().filter(|x| !ring.is_zero(x)).count();
        a[w] += 1;
    }
    a
}

/// Checks both classical Hamming-weight identities on a field code:
/// the Krawtchouk form B_j = (1/|C|)·Σ_i A_i·K_j(i) for every j (the
/// `rows`), and the binomial-moment form
/// Σ_{j≤n−ν} C(n−j, ν)·A_j = (|C|/q^ν)·Σ_{j≤ν} C(n−j, n−ν)·B_j for
/// every ν (the `moment_rows`). B comes from the brute-force dual.
pub fn verify_classical_hamming(code: &LinearCode, guard: u64) -> Result<IdentityReport, Error> {
    let ring = code.ring();
    if ring.s() != 1 {
        return Err(Error::IncompatibleWeight(format!(
            "classical Hamming identities need a field (s = 1), got s = {}",
            ring.s()
        )));
    }
    let n = code.length();
    let q = ring.size();
    let a = hamming_distribution(code);
    let dual = dual_code(code, guard)?;
    let b = hamming_distribution(&dual);
    let size = BigRational::from_integer(BigInt::from(code.size()));

    let mut rows = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, &ai) in a.iter().enumerate() {
            acc += BigInt::from(ai) * kraw_hamming(n as u64, q, i as u64, j as u64);
        }
        let predicted = BigRational::from_integer(acc) / size.clone();
        if !predicted.is_integer() || predicted.is_negative() {
            return Err(Error::NonIntegerResult(format!(
                "predicted dual weight count {predicted} at j = {j}"
            )));
        }
        let oracle = BigRational::from_integer(BigInt::from(b[j]));
        rows.push(IdentityRow::new(vec![j as u64], predicted, oracle));
    }

    let mut moment_rows = Vec::with_capacity(n + 1);
    for nu in 0..=n {
        let mut lhs = BigInt::zero();
        for (j, &aj) in a.iter().enumerate().take(n - nu + 1) {
            lhs += binomial(BigInt::from(n - j), BigInt::from(nu)) * BigInt::from(aj);
        }
        let mut rhs = BigInt::zero();
        for (j, &bj) in b.iter().enumerate().take(nu + 1) {
            rhs += binomial(BigInt::from(n - j), BigInt::from(n - nu)) * BigInt::from(bj);
        }
        let scale = size.clone() / BigRational::from_integer(BigInt::from(q).pow(nu as u32));
        moment_rows.push(IdentityRow::new(
            vec![nu as u64],
            BigRational::from_integer(lhs),
            scale * BigRational::from_integer(rhs),
        ));
    }

    Ok(IdentityReport::new(
        PartitionKind::HammingPair,
        rows,
        moment_rows,
    ))
}

/// Two codes with identical weight enumerators whose duals' weight
/// enumerators differ — a witness that the plain weight enumerator
/// carries too little information for a MacWilliams-type identity.
/// Every pair is re-verified by brute-force dual enumeration before
/// being returned.
#[derive(Clone, Debug)]
pub struct CounterexamplePair {
    pub first: LinearCode,
    pub second: LinearCode,
    pub shared_weights: BTreeMap<BigRational, u64>,
    pub first_dual_weights: BTreeMap<BigRational, u64>,
    pub second_dual_weights: BTreeMap<BigRational, u64>,
}

/// All tuples of length n over the ring, in encoding order, zero first.
pub(crate) fn all_tuples(ring: &Ring, n: usize, guard: u64) -> Result<Vec<Vec<Element>>, Error> {
    let size = ring.tuple_space_size(n);
    if size > u128::from(guard) {
        return Err(Error::GuardExceeded { size, guard });
    }
    let mut out = Vec::with_capacity(size as usize);
    ring.for_each_tuple(n, |t| out.push(t.to_vec()));
    Ok(out)
}

/// Searches pairs of length-n codes with equal weight enumerators and
/// differing dual weight enumerators. Candidate generator matrices are
/// examined in a fixed order — every single nonzero row, then every
/// unordered pair of distinct nonzero rows — so the result is
/// deterministic. `budget` caps the number of candidates examined; on
/// exhaustion the result is `None`, never an error. Any hit is
/// re-verified with brute-force duals before being returned.
pub fn counterexample_search(
    ring: &Ring,
    kind: &WeightKind,
    n: usize,
    budget: u64,
    guard: u64,
) -> Result<Option<CounterexamplePair>, Error> {
    kind.check_compatible(ring)?;
    let tuples = all_tuples(ring, n, guard)?;
    let nonzero: Vec<&Vec<Element>> = tuples
        .iter()
        .filter(|t| t.iter().any(|x| !ring.is_zero(x)))
        .collect();

    // Candidate generator matrices as row indices into `nonzero`,
    // trimmed to the budget up front so memory stays proportional to it.
    let mut specs: Vec<Vec<usize>> = Vec::new();
    'collect: for i in 0..nonzero.len() {
        specs.push(vec![i]);
        if specs.len() as u64 == budget {
            break 'collect;
        }
    }
    if (specs.len() as u64) < budget {
        'pairs: for i in 0..nonzero.len() {
            for j in i + 1..nonzero.len() {
                specs.push(vec![i, j]);
                if specs.len() as u64 == budget {
                    break 'pairs;
                }
            }
        }
    }

    // Distinct codes seen so far, keyed by codeword-set encoding, with
    // their weight enumerator and their dual's.
    type WeightMap = BTreeMap<BigRational, u64>;
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut kept: Vec<(LinearCode, WeightMap, WeightMap)> = Vec::new();
    let mut groups: BTreeMap<WeightMap, Vec<usize>> = BTreeMap::new();

    for spec in specs {
        let rows: Vec<Vec<Element>> = spec.iter().map(|&i| nonzero[i].clone()).collect();
        let code = code_from_generator(ring, n, &rows, guard)?;
        let key: Vec<Vec<u64>> = code
            .codewords()
            .iter()
            .map(|w| w.iter().map(|x| ring.encode(x)).collect())
            .collect();
        if !seen.insert(key) {
            continue;
        }
        let weights = weight_enumerator(&code, kind)?;
        let dual_weights = weight_enumerator(&dual_code(&code, guard)?, kind)?;
        if let Some(indices) = groups.get(&weights) {
            for &idx in indices {
                if kept[idx].2 != dual_weights {
                    let (other, _, _) = &kept[idx];
                    return Ok(Some(verified_pair(other, &code, kind, guard)?));
                }
            }
        }
        groups.entry(weights.clone()).or_default().push(kept.len());
        kept.push((code, weights, dual_weights));
    }
    Ok(None)
}

/// Re-derives both weight enumerators and both dual weight enumerators
/// from scratch, with the dual taken by exhaustive orthogonality rather
/// than whatever route the search used.
fn verified_pair(
    first: &LinearCode,
    second: &LinearCode,
    kind: &WeightKind,
    guard: u64,
) -> Result<CounterexamplePair, Error> {
    let shared = weight_enumerator(first, kind)?;
    assert_eq!(
        shared,
        weight_enumerator(second, kind)?,
        "candidate pair must share a weight enumerator"
    );
    let first_dual = weight_enumerator(&dual_brute_force(first, guard)?, kind)?;
    let second_dual = weight_enumerator(&dual_brute_force(second, guard)?, kind)?;
    assert_ne!(
        first_dual, second_dual,
        "candidate pair must have differing dual weight enumerators"
    );
    Ok(CounterexamplePair {
        first: first.clone(),
        second: second.clone(),
        shared_weights: shared,
        first_dual_weights: first_dual,
        second_dual_weights: second_dual,
    })
}

/// The canonical subfield-weight counterexample over 𝔽₈: the code
/// generated by (1, α, α²), a second one-dimensional code with the same
/// per-word weight-value profile, and their duals' differing profiles.
/// Profile keys count coordinates of weight 0, 1, λ respectively.
#[derive(Clone, Debug)]
pub struct SubfieldTables {
    pub first: LinearCode,
    pub second: LinearCode,
    pub shared_profile: BTreeMap<Vec<u64>, u64>,
    pub first_dual_profile: BTreeMap<Vec<u64>, u64>,
    pub second_dual_profile: BTreeMap<Vec<u64>, u64>,
}

/// Builds the 𝔽₈ code ⟨(1, α, α²)⟩ and searches every one-dimensional
/// length-3 code for a partner with the identical weight-value profile
/// whose dual profile is the expected differing one. The first code's
/// dual profile is always recomputed by brute force. Errors with
/// `NotFound` if no partner exists — that would falsify the premise at
/// this size.
pub fn reproduce_subfield_counterexample(guard: u64) -> Result<SubfieldTables, Error> {
    let f8 = Ring::new(2, 3, 1, None)?;
    let alpha = f8.element(&[0, 1, 0])?;
    let alpha2 = f8.element(&[0, 0, 1])?;
    let kind = WeightKind::subfield_default();

    let first = code_from_generator(&f8, 3, &[vec![f8.one(), alpha, alpha2]], guard)?;
    let shared = weight_class_enumerator(&first, &kind)?;
    let first_dual_profile = weight_class_enumerator(&dual_brute_force(&first, guard)?, &kind)?;

    // The dual profile that identifies the partner code. Its (0,3,0)
    // entry is the dual word (1,1,1): the partner's generator sums to
    // zero, the first code's does not.
    let expected_second_dual: BTreeMap<Vec<u64>, u64> = [
        (vec![3, 0, 0], 1),
        (vec![0, 3, 0], 1),
        (vec![0, 0, 3], 26),
        (vec![1, 0, 2], 15),
        (vec![0, 1, 2], 15),
        (vec![1, 1, 1], 6),
    ]
    .into();

    for row in all_tuples(&f8, 3, guard)? {
        if row.iter().all(|x| f8.is_zero(x)) {
            continue;
        }
        let second = code_from_generator(&f8, 3, &[row], guard)?;
        if second == first || weight_class_enumerator(&second, &kind)? != shared {
            continue;
        }
        let second_dual_profile =
            weight_class_enumerator(&dual_brute_force(&second, guard)?, &kind)?;
        if second_dual_profile != expected_second_dual {
            continue;
        }
        assert_eq!(
            weight_enumerator(&first, &kind)?,
            weight_enumerator(&second, &kind)?,
            "equal profiles must aggregate to equal weight enumerators"
        );
        assert_ne!(
            weight_enumerator(&dual_brute_force(&first, guard)?, &kind)?,
            weight_enumerator(&dual_brute_force(&second, guard)?, &kind)?,
            "the dual weight enumerators must differ"
        );
        return Ok(SubfieldTables {
            first,
            second,
            shared_profile: shared,
            first_dual_profile,
            second_dual_profile,
        });
    }
    Err(Error::NotFound(String::from(
        "no one-dimensional partner with matching profile and the expected dual profile",
    )))
}
