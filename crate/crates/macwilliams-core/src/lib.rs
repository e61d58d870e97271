//! Exact MacWilliams-type identities for additive weights over Galois rings.
//!
//! The crate provides, over any Galois ring GR(p^s, r) — including the
//! integer residue rings ℤ/p^sℤ (r = 1) and the finite fields 𝔽_(p^r)
//! (s = 1) — the machinery to state and verify identities of the form
//!
//! ```text
//! E_ρ(C⊥) = (1/|C|) · Σ_π K_π(ρ) · E_π(C)
//! ```
//!
//! where E is a decomposition enumerator of a linear code with respect to
//! one of three alphabet partitions (Lee negation orbits, the
//! zero/unit/socle/rest partition, base-field orbits), and K_π(ρ) are
//! Krawtchouk coefficients with exact closed forms. All arithmetic is
//! exact: big integers, big rationals, and cyclotomic integers ℤ[ξ].
//!
//! On top of the identity engine sit brute-force verification oracles,
//! counterexample search over weight enumerators, and Delsarte-style
//! linear programming bounds solved by an exact rational simplex.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI
//! live in the companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod code;
pub mod cyclotomic;
pub mod error;
pub mod krawtchouk;
pub mod lp;
pub mod partition;
pub mod ring;
pub mod transform;
pub mod weight;

pub use error::Error;
pub use ring::{Element, Ring};

/// Default ceiling on the number of elements any exhaustive enumeration
/// (codeword materialization, brute-force duals, character-sum oracles)
/// is allowed to visit. Callers may raise or lower it per call.
pub const DEFAULT_GUARD: u64 = 10_000_000;

/// Exact arithmetic aliases used across the crate.
pub mod num {
    pub use num_bigint::BigInt;
    pub use num_rational::BigRational;
    pub use num_traits::{One, Signed, Zero};

    use alloc::vec::Vec;

    /// n! / (t_0! · t_1! · … · t_k!) for a composition t of n.
    /// Computed multiplicatively to stay in integers throughout.
    pub fn multinomial(n: u64, parts: &[u64]) -> BigInt {
        debug_assert_eq!(parts.iter().sum::<u64>(), n);
        let mut acc = BigInt::from(1u32);
        let mut upper = 0u64;
        for &part in parts {
            for k in 1..=part {
                upper += 1;
                acc = acc * BigInt::from(upper) / BigInt::from(k);
            }
        }
        acc
    }

    /// Binomial coefficient C(n, k) as a big integer.
    pub fn binomial(n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::from(0u32);
        }
        multinomial(n, &[k, n - k])
    }

    /// All compositions of `n` into `parts` non-negative summands,
    /// lexicographically descending, so (n, 0, …, 0) comes first.
    pub fn compositions(n: u64, parts: usize) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![0u64; parts];
        fn rec(cur: &mut Vec<u64>, pos: usize, left: u64, out: &mut Vec<Vec<u64>>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(cur.clone());
                return;
            }
            for v in (0..=left).rev() {
                cur[pos] = v;
                rec(cur, pos + 1, left - v, out);
            }
        }
        if parts == 0 {
            if n == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        rec(&mut cur, 0, n, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::num::*;
    use num_bigint::BigInt;

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(3, &[2, 0, 0, 1, 0]), BigInt::from(3));
        assert_eq!(multinomial(3, &[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(0, &[0, 0]), BigInt::from(1));
        assert_eq!(binomial(30, 15), "155117520".parse::<BigInt>().unwrap());
    }

    #[test]
    fn composition_count_matches_stars_and_bars() {
        // C(n + B - 1, B - 1) compositions of n into B parts.
        for (n, b) in [(3u64, 5usize), (3, 4), (0, 3), (4, 1)] {
            let all = compositions(n, b);
            let expect = binomial(n + b as u64 - 1, b as u64 - 1);
            assert_eq!(BigInt::from(all.len()), expect);
            // Unique and ordered descending.
            for w in all.windows(2) {
                assert!(w[0] > w[1]);
            }
        }
    }
}
