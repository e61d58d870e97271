//! Krawtchouk coefficients of alphabet partitions.
//!
//! The closed form runs through a single block-pair character table:
//! c[i][j] = Σ_{x ∈ block_j} ξ^trace(α_i·x) for a representative α_i of
//! block_i, and K_π(ρ) = Σ over contingency tables t of Π multinomials ·
//! Π c[i][j]^t_ij. The classical Hamming form, a brute-force
//! character-sum oracle, and well-definedness checks for arbitrary tuple
//! groupings round out the module.
//!
//! Individual coefficients live in ℤ[ξ] and are not always rational
//! (Lee blocks over ℤ/9ℤ already produce 2cos(2π/9)); `kraw` converts
//! and reports failure, `kraw_cyc` stays exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclotomic::CycInt;
use crate::num::{binomial, multinomial};
use crate::partition::{all_decompositions, composition_tables, AlphabetPartition};
use crate::ring::{Element, Ring};
use crate::weight::{tuple_weight, WeightKind};
use crate::Error;

/// Rings up to this size get the exhaustive representative-independence
/// check at table construction; larger rings check one alternative
/// representative per block.
const EXHAUSTIVE_CHECK_LIMIT: u64 = 2048;

/// The B×B character-sum table shared by every Krawtchouk evaluation
/// over one partition. Construct once per (ring, partition) and share;
/// all evaluations borrow it read-only.
#[derive(Clone, Debug)]
pub struct BlockPairTable {
    partition: AlphabetPartition,
    c: Vec<Vec<CycInt>>,
}

fn char_sum_row(ring: &Ring, a: &Element, partition: &AlphabetPartition) -> Vec<CycInt> {
    let m = ring.char_order();
    partition
        .blocks()
        .iter()
        .map(|block| {
            let mut counts = vec![0u64; m as usize];
            for x in block {
                counts[ring.trace(&ring.mul(a, x)) as usize] += 1;
            }
            CycInt::from_counts(ring.p(), m, &counts)
        })
        .collect()
}

/// Builds the block-pair table for a partition.
///
/// Panics if some block's character-sum row depends on the choice of
/// representative; that would mean the partition is not Fourier-invariant
/// and the closed form does not exist for it.
pub fn block_pair_table(partition: &AlphabetPartition) -> BlockPairTable {
    let ring = partition.ring();
    let c: Vec<Vec<CycInt>> = (0..partition.block_count())
        .map(|i| char_sum_row(ring, partition.representative(i), partition))
        .collect();

    // Representative independence: every other element of block_i must
    // reproduce row i. Exhaustive for small rings, spot-checked beyond.
    for (i, block) in partition.blocks().iter().enumerate() {
        let alternates: &[Element] = if ring.size() <= EXHAUSTIVE_CHECK_LIMIT {
            &block[1..]
        } else {
            &block[block.len() - 1..]
        };
        for a in alternates {
            assert!(
                char_sum_row(ring, a, partition) == c[i],
                "character sums over block {} depend on the representative",
                i
            );
        }
    }

    BlockPairTable {
        partition: partition.clone(),
        c,
    }
}

impl BlockPairTable {
    pub fn partition(&self) -> &AlphabetPartition {
        &self.partition
    }
    /// c[i][j] = Σ_{x ∈ block_j} ξ^trace(α_i·x).
    pub fn entry(&self, i: usize, j: usize) -> &CycInt {
        &self.c[i][j]
    }
    pub fn entries(&self) -> &[Vec<CycInt>] {
        &self.c
    }
}

fn check_counts(
    partition: &AlphabetPartition,
    pi: &[u64],
    rho: &[u64],
) -> Result<(Vec<u64>, Vec<u64>), Error> {
    let pi = partition.adapt_counts(pi)?;
    let rho = partition.adapt_counts(rho)?;
    let (np, nr) = (pi.iter().sum::<u64>(), rho.iter().sum::<u64>());
    if np != nr {
        return Err(Error::BadElement(format!(
            "decompositions must share a total: {} vs {}",
            np, nr
        )));
    }
    Ok((pi, rho))
}

/// Exact Krawtchouk coefficient K_π(ρ) in ℤ[ξ]:
/// Σ_{t ∈ Comp_π(ρ)} Π_i multinomial(π_i; t_i) · Π_j c[i][j]^t_ij.
/// Accepts four-class count vectors for the zero/units/socle/rest
/// partition (absent classes must carry count 0).
pub fn kraw_cyc(table: &BlockPairTable, pi: &[u64], rho: &[u64]) -> Result<CycInt, Error> {
    let (pi, rho) = check_counts(&table.partition, pi, rho)?;
    let ring = table.partition.ring();
    let (p, m) = (ring.p(), ring.char_order());
    let mut total = CycInt::zero(p, m);
    for t in composition_tables(&pi, &rho) {
        let mut coeff = BigInt::one();
        for (i, row) in t.iter().enumerate() {
            coeff *= multinomial(pi[i], row);
        }
        let mut term = CycInt::from_int(p, m, coeff);
        for (i, row) in t.iter().enumerate() {
            for (j, &tij) in row.iter().enumerate() {
                if tij > 0 {
                    term = term
                        .mul(&table.c[i][j].pow(tij))
                        .expect("table entries share one cyclotomic order");
                }
            }
        }
        total = total
            .add(&term)
            .expect("table entries share one cyclotomic order");
    }
    Ok(total)
}

/// K_π(ρ) as an exact rational; errors with [`Error::NotRational`] when
/// the coefficient genuinely lives outside ℚ.
pub fn kraw(table: &BlockPairTable, pi: &[u64], rho: &[u64]) -> Result<BigRational, Error> {
    kraw_cyc(table, pi, rho)?.to_rational()
}

/// Classical Hamming Krawtchouk polynomial value
/// K_j(i) = Σ_k (−1)^k (q−1)^(j−k) C(i,k) C(n−i, j−k)
/// for an alphabet of size q.
pub fn kraw_hamming(n: u64, q: u64, i: u64, j: u64) -> BigInt {
    let mut total = BigInt::from(0);
    let qm1 = BigInt::from(q - 1);
    for k in 0..=i.min(j) {
        let term = qm1.pow((j - k) as u32) * binomial(i, k) * binomial(n.saturating_sub(i), j - k);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn guard_tuples(ring: &Ring, n: usize, guard: u64) -> Result<(), Error> {
    let size = ring.tuple_space_size(n);
    if size > guard as u128 {
        return Err(Error::GuardExceeded { size, guard });
    }
    Ok(())
}

/// Brute-force oracle: Σ_{x: decompose(x)=ρ} ξ^trace(⟨a,x⟩) in ℤ[ξ],
/// scanning all |R|^n tuples. The probe `a` must decompose to π.
pub fn kraw_oracle_cyc(
    partition: &AlphabetPartition,
    pi: &[u64],
    rho: &[u64],
    a: &[Element],
    guard: u64,
) -> Result<CycInt, Error> {
    let (pi, rho) = check_counts(partition, pi, rho)?;
    if partition.decompose(a) != pi {
        return Err(Error::BadElement(format!(
            "probe tuple does not decompose to π = {:?}",
            pi
        )));
    }
    let ring = partition.ring();
    guard_tuples(ring, a.len(), guard)?;
    let m = ring.char_order();
    let mut counts = vec![0u64; m as usize];
    ring.for_each_tuple(a.len(), |x| {
        if partition.decompose(x) == rho {
            counts[ring.trace(&ring.inner_product(a, x)) as usize] += 1;
        }
    });
    Ok(CycInt::from_counts(ring.p(), m, &counts))
}

/// Rational wrapper over [`kraw_oracle_cyc`].
pub fn kraw_oracle(
    partition: &AlphabetPartition,
    pi: &[u64],
    rho: &[u64],
    a: &[Element],
    guard: u64,
) -> Result<BigRational, Error> {
    kraw_oracle_cyc(partition, pi, rho, a, guard)?.to_rational()
}

/// One scan, every column: ρ ↦ Σ_{x ∈ P_ρ} ξ^trace(⟨a,x⟩) for all
/// decompositions ρ of length-|a| tuples.
pub fn kraw_oracle_row(
    partition: &AlphabetPartition,
    a: &[Element],
    guard: u64,
) -> Result<BTreeMap<Vec<u64>, CycInt>, Error> {
    let ring = partition.ring();
    guard_tuples(ring, a.len(), guard)?;
    let m = ring.char_order();
    let mut rows: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
    ring.for_each_tuple(a.len(), |x| {
        let counts = rows
            .entry(partition.decompose(x))
            .or_insert_with(|| vec![0u64; m as usize]);
        counts[ring.trace(&ring.inner_product(a, x)) as usize] += 1;
    });
    Ok(rows
        .into_iter()
        .map(|(rho, counts)| (rho, CycInt::from_counts(ring.p(), m, &counts)))
        .collect())
}

/// Checks a family of disjoint tuple classes for Fourier invariance:
/// for classes P, Q in the family and probes a, a' ∈ P, the sums
/// Σ_{x∈Q} χ_a(x) and Σ_{x∈Q} χ_{a'}(x) must agree.
fn classes_consistent(ring: &Ring, classes: &[Vec<Vec<Element>>]) -> bool {
    let m = ring.char_order();
    let sum_over = |a: &[Element], class: &[Vec<Element>]| {
        let mut counts = vec![0u64; m as usize];
        for x in class {
            counts[ring.trace(&ring.inner_product(a, x)) as usize] += 1;
        }
        CycInt::from_counts(ring.p(), m, &counts)
    };
    for probes in classes {
        for target in classes {
            let first = sum_over(&probes[0], target);
            for a in &probes[1..] {
                if sum_over(a, target) != first {
                    return false;
                }
            }
        }
    }
    true
}

fn group_tuples_by<K: Ord>(
    ring: &Ring,
    n: usize,
    guard: u64,
    mut key: impl FnMut(&[Element]) -> K,
) -> Result<Vec<Vec<Vec<Element>>>, Error> {
    guard_tuples(ring, n, guard)?;
    let mut classes: BTreeMap<K, Vec<Vec<Element>>> = BTreeMap::new();
    ring.for_each_tuple(n, |x| {
        classes.entry(key(x)).or_default().push(x.to_vec());
    });
    Ok(classes.into_values().collect())
}

/// Whether the oracle sum Σ_{x ∈ P_ρ} χ_a(x) is independent of the probe
/// a ∈ P_π, checked over every probe.
pub fn well_defined(
    partition: &AlphabetPartition,
    pi: &[u64],
    rho: &[u64],
    guard: u64,
) -> Result<bool, Error> {
    let (pi, rho) = check_counts(partition, pi, rho)?;
    let n = pi.iter().sum::<u64>() as usize;
    let ring = partition.ring();
    let mut probes = Vec::new();
    let mut target = Vec::new();
    guard_tuples(ring, n, guard)?;
    ring.for_each_tuple(n, |x| {
        let dec = partition.decompose(x);
        if dec == pi {
            probes.push(x.to_vec());
        }
        if dec == rho {
            target.push(x.to_vec());
        }
    });
    Ok(classes_consistent(ring, &[probes, target]))
}

/// Whether every (π, ρ) pair of a partition's length-n decompositions is
/// probe-independent. True for Fourier-invariant partitions.
pub fn well_defined_all(
    partition: &AlphabetPartition,
    n: usize,
    guard: u64,
) -> Result<bool, Error> {
    let classes = group_tuples_by(partition.ring(), n, guard, |x| partition.decompose(x))?;
    Ok(classes_consistent(partition.ring(), &classes))
}

/// Groups length-n tuples by total weight alone and checks probe
/// independence. Fails for the Lee weight on (ℤ/9ℤ)³: grouping by weight
/// without the block refinement is not Fourier-invariant.
pub fn weight_partition_well_defined(
    ring: &Ring,
    kind: WeightKind,
    n: usize,
    guard: u64,
) -> Result<bool, Error> {
    kind.check_compatible(ring)?;
    let classes = group_tuples_by(ring, n, guard, |x| {
        tuple_weight(ring, &kind, x).expect("compatibility checked above")
    })?;
    Ok(classes_consistent(ring, &classes))
}

/// Convenience: the K matrix over all decomposition pairs of length n,
/// row index π, column index ρ, in [`all_decompositions`] order.
pub fn kraw_matrix(table: &BlockPairTable, n: u64) -> Vec<Vec<CycInt>> {
    let decs = all_decompositions(table.partition.block_count(), n);
    decs.iter()
        .map(|pi| {
            decs.iter()
                .map(|rho| kraw_cyc(table, pi, rho).expect("matched totals"))
                .collect()
        })
        .collect()
}
