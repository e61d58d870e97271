//! Exact arithmetic in ℤ[ξ] for ξ a primitive p^s-th root of unity, and
//! the additive characters χ_a(x) = ξ^trace(⟨a,x⟩) built on it.
//!
//! Values are integer coefficient vectors over the power basis
//! ξ⁰ … ξ^(m−1), m = p^s, multiplied by cyclic convolution and reduced
//! on demand by the cyclotomic relation Σ_{j<p} ξ^(j·p^(s−1)) = 0. A
//! canonical vector is supported on exponents below (p−1)·p^(s−1), which
//! makes equality and rationality checks exact.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{Element, Ring};
use crate::Error;

/// An element of ℤ[ξ], ξ = primitive m-th root of unity, m = p^s.
#[derive(Clone, Debug)]
pub struct CycInt {
    p: u64,
    m: u64,
    /// Coefficient of ξ^e at index e; length m. Not necessarily
    /// canonical; see [`CycInt::canonical`].
    coeffs: Vec<BigInt>,
}

fn assert_prime_power(p: u64, m: u64) {
    let mut t = m;
    while t.is_multiple_of(p) {
        t /= p;
    }
    assert_eq!(t, 1, "order {m} is not a power of {p}");
}

impl CycInt {
    pub fn zero(p: u64, m: u64) -> CycInt {
        assert_prime_power(p, m);
        CycInt {
            p,
            m,
            coeffs: vec![BigInt::zero(); m as usize],
        }
    }

    pub fn one(p: u64, m: u64) -> CycInt {
        Self::zeta_pow(p, m, 0)
    }

    /// ξ^e (exponent taken mod m).
    pub fn zeta_pow(p: u64, m: u64, e: u64) -> CycInt {
        let mut c = Self::zero(p, m);
        c.coeffs[(e % m) as usize] = BigInt::one();
        c
    }

    /// Σ ξ^e over a list of exponents (each taken mod m).
    pub fn from_powers(p: u64, m: u64, powers: &[u64]) -> CycInt {
        let mut c = Self::zero(p, m);
        for &e in powers {
            c.coeffs[(e % m) as usize] += 1;
        }
        c
    }

    pub fn from_int(p: u64, m: u64, v: BigInt) -> CycInt {
        let mut c = Self::zero(p, m);
        c.coeffs[0] = v;
        c
    }

    /// Σ counts[e]·ξ^e from a dense exponent-count table of length m.
    pub fn from_counts(p: u64, m: u64, counts: &[u64]) -> CycInt {
        assert_eq!(counts.len(), m as usize, "count table length must be m");
        let mut c = Self::zero(p, m);
        for (slot, &count) in c.coeffs.iter_mut().zip(counts) {
            *slot = BigInt::from(count);
        }
        c
    }

    /// Root-of-unity order m = p^s.
    pub fn order(&self) -> u64 {
        self.m
    }

    /// The prime p with m = p^s.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Canonical coefficients: entry e is the coefficient of ξ^e,
    /// supported on exponents below (p−1)·p^(s−1). Two values are equal
    /// iff their canonical coefficients are.
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.canonical().coeffs
    }

    fn check_order(&self, other: &CycInt) -> Result<(), Error> {
        if self.m != other.m || self.p != other.p {
            return Err(Error::MixedCyclotomicOrder {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt, Error> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt {
            p: self.p,
            m: self.m,
            coeffs,
        })
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            p: self.p,
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt, Error> {
        self.add(&other.neg())
    }

    /// Cyclic convolution: ξ^m = 1 folds exponents mod m, and the deeper
    /// cyclotomic relation is left for canonicalization.
    pub fn mul(&self, other: &CycInt) -> Result<CycInt, Error> {
        self.check_order(other)?;
        let m = self.m as usize;
        let mut coeffs = vec![BigInt::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % m;
                coeffs[k] += a * b;
            }
        }
        Ok(CycInt {
            p: self.p,
            m: self.m,
            coeffs,
        })
    }

    pub fn scale(&self, k: &BigInt) -> CycInt {
        CycInt {
            p: self.p,
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> CycInt {
        let mut acc = CycInt::one(self.p, self.m);
        for _ in 0..e {
            acc = acc.mul(self).expect("same order by construction");
        }
        acc
    }

    /// Reduces modulo the m-th cyclotomic polynomial
    /// Φ(x) = Σ_{j<p} x^(j·p^(s−1)): every exponent e ≥ (p−1)·p^(s−1)
    /// rewrites as ξ^e = −Σ_{j<p−1} ξ^(e−(p−1)p^(s−1)+j·p^(s−1)), whose
    /// targets all lie below the cut. Canonical vectors are supported on
    /// the φ(m) = (p−1)·p^(s−1) low exponents.
    pub fn canonical(&self) -> CycInt {
        let step = (self.m / self.p) as usize; // p^(s−1)
        let cut = (self.p as usize - 1) * step;
        let mut coeffs = self.coeffs.clone();
        for e in cut..self.m as usize {
            if coeffs[e].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut coeffs[e], BigInt::zero());
            let rem = e - cut;
            for j in 0..self.p as usize - 1 {
                coeffs[rem + j * step] -= &c;
            }
        }
        CycInt {
            p: self.p,
            m: self.m,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value of a canonical-constant element; `NotRational`
    /// when any non-constant canonical coefficient survives (that always
    /// signals an upstream bug in identity computations).
    pub fn to_rational(&self) -> Result<BigRational, Error> {
        let c = self.canonical();
        if c.coeffs[1..].iter().any(|v| !v.is_zero()) {
            return Err(Error::NotRational);
        }
        Ok(BigRational::from_integer(c.coeffs[0].clone()))
    }

    /// Integer value; ℤ[ξ] ∩ ℚ = ℤ, so this is what rational values are.
    pub fn to_integer(&self) -> Result<BigInt, Error> {
        Ok(self.to_rational()?.to_integer())
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.sub(other).unwrap().is_zero()
    }
}
impl Eq for CycInt {}

/// The additive character value χ_a(x) = ξ^trace(⟨a,x⟩) with the inner
/// product taken in the ring and ξ of order p^s.
pub fn character(ring: &Ring, a: &[Element], x: &[Element]) -> Result<CycInt, Error> {
    if a.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: x.len(),
        });
    }
    let t = ring.trace(&ring.inner_product(a, x));
    Ok(CycInt::zeta_pow(ring.p(), ring.char_order(), t))
}

/// χ value for a single alphabet pair: ξ^trace(a·x).
pub fn character1(ring: &Ring, a: &Element, x: &Element) -> CycInt {
    CycInt::zeta_pow(ring.p(), ring.char_order(), ring.trace(&ring.mul(a, x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn frozen_small_values() {
        // m = 9: ξ³ + ξ⁶ = −1 (a primitive cube root pair).
        let c = CycInt::from_powers(3, 9, &[3, 6]);
        assert_eq!(
            c.to_rational().unwrap(),
            BigRational::from_integer((-1).into())
        );
        // Full sum of all 9-th roots vanishes.
        let all: Vec<u64> = (0..9).collect();
        assert!(CycInt::from_powers(3, 9, &all).is_zero());
        // ξ itself is irrational.
        assert_eq!(
            CycInt::zeta_pow(3, 9, 1).to_rational(),
            Err(Error::NotRational)
        );
        assert_eq!(
            CycInt::from_powers(3, 9, &[0]).to_rational().unwrap(),
            BigRational::from_integer(1.into())
        );
    }

    #[test]
    fn phi_relation_and_root_order() {
        for (p, m) in [
            (2u64, 2u64),
            (2, 4),
            (2, 8),
            (3, 3),
            (3, 9),
            (3, 27),
            (5, 5),
        ] {
            let step = m / p;
            let phi: Vec<u64> = (0..p).map(|j| j * step).collect();
            assert!(CycInt::from_powers(p, m, &phi).is_zero());
            let zeta = CycInt::zeta_pow(p, m, 1);
            assert_eq!(zeta.pow(m), CycInt::one(p, m));
            for e in 1..m {
                assert_ne!(zeta.pow(e), CycInt::one(p, m), "order divides {e} < {m}");
            }
        }
    }

    #[test]
    fn ring_axioms_spot_checks() {
        let a = CycInt::from_powers(3, 9, &[1, 2, 2]);
        let b = CycInt::from_powers(3, 9, &[0, 5]);
        let c = CycInt::from_powers(3, 9, &[4, 4, 7]);
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        assert_eq!(a.sub(&a).unwrap(), CycInt::zero(3, 9));
    }

    #[test]
    fn mixed_orders_rejected() {
        let a = CycInt::one(3, 9);
        let b = CycInt::one(3, 3);
        assert_eq!(
            a.add(&b),
            Err(Error::MixedCyclotomicOrder { left: 9, right: 3 })
        );
    }

    #[test]
    fn character_values() {
        let z9 = Ring::zn(3, 2).unwrap();
        let a = vec![z9.scalar(3), z9.scalar(0), z9.scalar(0)];
        let x = vec![z9.scalar(3), z9.scalar(2), z9.scalar(8)];
        assert_eq!(character(&z9, &a, &x).unwrap(), CycInt::one(3, 9));
        let zero = vec![z9.zero(); 3];
        assert_eq!(character(&z9, &zero, &x).unwrap(), CycInt::one(3, 9));
        assert_eq!(
            character(&z9, &a[..2], &x),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
        // 𝔽₂₇: χ_1(α) = ξ^trace(α) with ξ a cube root of unity.
        let f27 = Ring::new(3, 3, 1, None).unwrap();
        let alpha = f27.element(&[0, 1, 0]).unwrap();
        let got = character(&f27, &[f27.one()], core::slice::from_ref(&alpha)).unwrap();
        assert_eq!(got, CycInt::zeta_pow(3, 3, f27.trace(&alpha)));
    }

    #[test]
    fn group_schur_orthogonality() {
        // Σ_{x∈R} χ_a(x) is |R| for a = 0 and 0 otherwise.
        for ring in [
            Ring::zn(3, 2).unwrap(),
            Ring::zn(2, 3).unwrap(),
            Ring::new(2, 3, 1, None).unwrap(),
            Ring::new(2, 2, 2, None).unwrap(),
        ] {
            for a in ring.elements() {
                let mut acc = CycInt::zero(ring.p(), ring.char_order());
                for x in ring.elements() {
                    acc = acc.add(&character1(&ring, &a, &x)).unwrap();
                }
                if ring.is_zero(&a) {
                    let expect = CycInt::from_int(ring.p(), ring.char_order(), ring.size().into());
                    assert_eq!(acc, expect);
                } else {
                    assert!(acc.is_zero());
                }
            }
        }
    }

    #[test]
    fn ideal_sums() {
        // For a proper nonzero ideal I and any character whose RESTRICTION
        // to I is non-principal: Σ_{x∈I} χ(x) = 0, so Σ over I∖{0} = −1.
        // Characters that restrict to the principal character on I (they
        // exist: a = 3 on I = ⟨3⟩ in ℤ/9) instead sum to |I|.
        let rings = [
            Ring::zn(2, 2).unwrap(),
            Ring::zn(2, 3).unwrap(),
            Ring::zn(3, 2).unwrap(),
            Ring::zn(3, 3).unwrap(),
            Ring::new(2, 2, 2, None).unwrap(),
            Ring::new(3, 2, 2, Some(&[1, 0, 1])).unwrap(),
        ];
        let mut principal_restrictions = 0u32;
        for ring in &rings {
            assert!(ring.size() <= 81);
            for v in 1..ring.s() {
                let ideal = ring.ideal(v);
                for a in ring.elements() {
                    let non_principal = ideal.iter().any(|x| ring.trace(&ring.mul(&a, x)) != 0);
                    let mut acc = CycInt::zero(ring.p(), ring.char_order());
                    for x in &ideal {
                        acc = acc.add(&character1(ring, &a, x)).unwrap();
                    }
                    if non_principal {
                        assert!(acc.is_zero());
                        let one = CycInt::one(ring.p(), ring.char_order());
                        let punctured = acc.sub(&one).unwrap();
                        assert_eq!(
                            punctured.to_rational().unwrap(),
                            BigRational::from_integer((-1).into())
                        );
                    } else {
                        let expect = CycInt::from_int(
                            ring.p(),
                            ring.char_order(),
                            (ideal.len() as u64).into(),
                        );
                        assert_eq!(acc, expect);
                        if !ring.is_zero(&a) {
                            principal_restrictions += 1;
                        }
                    }
                }
            }
        }
        // The hypothesis really is about the restriction: some nonzero a
        // give a principal restriction and the sum |I|, not 0.
        assert!(principal_restrictions > 0);
    }
}
