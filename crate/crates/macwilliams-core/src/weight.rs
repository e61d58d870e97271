//! Additive weights on Galois-ring alphabets, with exact rational values.
//!
//! Four kinds: Hamming (any ring), Lee (ℤ/p^sℤ only), homogeneous (value
//! q/(q−1) on the nonzero socle), and the parametrized subfield weight
//! (finite fields only). Tuple weights extend additively.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{Element, Ring};
use crate::Error;

/// A weight function on ring elements. All values are exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightKind {
    /// 0 on zero, 1 elsewhere. Any ring.
    Hamming,
    /// min(a, p^s − a) on ℤ/p^sℤ. Requires r = 1.
    Lee,
    /// 0 on zero, q/(q−1) on the rest of the socle ⟨p^(s−1)⟩, 1 elsewhere.
    Homogeneous,
    /// 0 on zero, 1 on 𝔽_p∖{0}, λ on 𝔽_(p^r)∖𝔽_p. Requires s = 1 and λ ≥ 1.
    Subfield(BigRational),
}

/// Exact rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational n/d.
pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl WeightKind {
    /// The default subfield weight, λ = 2.
    pub fn subfield_default() -> WeightKind {
        WeightKind::Subfield(rat(2))
    }

    /// Checks the kind is defined on this ring (and λ ≥ 1).
    pub fn check_compatible(&self, ring: &Ring) -> Result<(), Error> {
        match self {
            WeightKind::Hamming | WeightKind::Homogeneous => Ok(()),
            WeightKind::Lee => {
                if ring.r() != 1 {
                    Err(Error::IncompatibleWeight(format!(
                        "Lee weight needs a residue ring (r = 1), got r = {}",
                        ring.r()
                    )))
                } else {
                    Ok(())
                }
            }
            WeightKind::Subfield(lambda) => {
                if ring.s() != 1 {
                    Err(Error::IncompatibleWeight(format!(
                        "subfield weight needs a field (s = 1), got s = {}",
                        ring.s()
                    )))
                } else if *lambda < rat(1) {
                    Err(Error::IncompatibleWeight(format!(
                        "subfield parameter must be >= 1, got {lambda}"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// The weight of a single element.
pub fn element_weight(ring: &Ring, kind: &WeightKind, a: &Element) -> Result<BigRational, Error> {
    kind.check_compatible(ring)?;
    if ring.is_zero(a) {
        return Ok(BigRational::zero());
    }
    Ok(match kind {
        WeightKind::Hamming => BigRational::one(),
        WeightKind::Lee => {
            let v = a.coeffs()[0];
            BigRational::from_integer(BigInt::from(v.min(ring.char_order() - v)))
        }
        WeightKind::Homogeneous => {
            if ring.valuation(a) >= ring.s() - 1 {
                // Nonzero socle element.
                let q = BigInt::from(ring.residue_size());
                BigRational::new(q.clone(), q - BigInt::one())
            } else {
                BigRational::one()
            }
        }
        WeightKind::Subfield(lambda) => {
            if a.coeffs()[1..].iter().all(|&c| c == 0) {
                // Nonzero constant: lies in the prime subfield.
                BigRational::one()
            } else {
                lambda.clone()
            }
        }
    })
}

/// The additive extension Σ wt(x_i) over a tuple.
pub fn tuple_weight(ring: &Ring, kind: &WeightKind, x: &[Element]) -> Result<BigRational, Error> {
    let mut acc = BigRational::zero();
    for a in x {
        acc += element_weight(ring, kind, a)?;
    }
    Ok(acc)
}

/// The largest single-element weight, by direct scan of the alphabet.
pub fn max_element_weight(ring: &Ring, kind: &WeightKind) -> Result<BigRational, Error> {
    kind.check_compatible(ring)?;
    let mut best = BigRational::zero();
    for a in ring.elements() {
        let w = element_weight(ring, kind, &a)?;
        if w > best {
            best = w;
        }
    }
    Ok(best)
}

/// All distinct element weights, sorted ascending (0 always first).
pub fn weight_values(ring: &Ring, kind: &WeightKind) -> Result<Vec<BigRational>, Error> {
    kind.check_compatible(ring)?;
    let mut vals: Vec<BigRational> = Vec::new();
    for a in ring.elements() {
        let w = element_weight(ring, kind, &a)?;
        if !vals.contains(&w) {
            vals.push(w);
        }
    }
    vals.sort();
    Ok(vals)
}
