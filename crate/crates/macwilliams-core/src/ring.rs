//! Exact arithmetic in Galois rings GR(p^s, r).
//!
//! GR(p^s, r) = (ℤ/p^sℤ)[x] / (h(x)) for a monic basic irreducible h of
//! degree r. The special cases are the integer residue rings ℤ/p^sℤ
//! (r = 1) and the finite fields 𝔽_(p^r) (s = 1). The maximal ideal is
//! ⟨p⟩, the nilpotency index is s, and the residue field has q = p^r
//! elements.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

/// An element of a Galois ring: a polynomial of degree < r with
/// coefficients in [0, p^s), canonical (equal elements have equal
/// coefficient vectors). Arithmetic goes through [`Ring`] methods.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Element {
    coeffs: Vec<u64>,
}

impl Element {
    /// Coefficients, constant term first, length r.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// A validated Galois ring GR(p^s, r) with cached modulus-reduction and
/// Teichmüller data. Immutable after construction; all operations are
/// pure.
#[derive(Clone, Debug)]
pub struct Ring {
    p: u64,
    r: usize,
    s: u32,
    /// Residue field size q = p^r.
    q: u64,
    /// Coefficient modulus and character order m = p^s.
    m: u64,
    /// Total number of elements p^(r·s).
    size: u64,
    /// Monic modulus polynomial, constant term first, length r + 1.
    /// For r = 1 this is the formal "x" and plays no role.
    h: Vec<u64>,
    /// x^(r+k) mod h, fully reduced, for k in 0..r-1.
    xpow: Vec<Vec<u64>>,
    /// The q Teichmüller elements, sorted by integer encoding.
    teich: Vec<Element>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.s == other.s && self.h == other.h
    }
}
impl Eq for Ring {}

/// Built-in moduli for commonly used extension rings, keyed by (p, r).
/// Valid for every nilpotency index s since each is irreducible mod p.
const BUILTIN_MODULI: &[(u64, usize, &[u64])] = &[
    (2, 2, &[1, 1, 1]),    // x^2 + x + 1 (𝔽₄ and GR(4,2), …)
    (2, 3, &[1, 1, 0, 1]), // x^3 + x + 1 (𝔽₈, …)
    (3, 3, &[1, 2, 0, 1]), // x^3 + 2x + 1 (𝔽₂₇, …)
];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder of `a` by monic `b` over 𝔽_p (used only by the
/// irreducibility check). Coefficients constant term first.
fn poly_rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut rem: Vec<u64> = a.iter().map(|&c| c % p).collect();
    let db = b.len() - 1;
    while rem.len() > db {
        let lead = *rem.last().unwrap() % p;
        let k = rem.len() - 1 - db;
        if lead != 0 {
            for j in 0..=db {
                let sub = (lead * (b[j] % p)) % p;
                rem[k + j] = (rem[k + j] + p * p - sub) % p;
            }
        }
        rem.pop();
    }
    while rem.last() == Some(&0) {
        rem.pop();
    }
    rem
}

/// Exhaustively tests irreducibility of a monic polynomial over 𝔽_p by
/// trial division with every monic polynomial of degree ≤ deg/2.
fn is_irreducible_mod_p(h: &[u64], p: u64) -> bool {
    let deg = h.len() - 1;
    if h[0] % p == 0 {
        return false; // divisible by x
    }
    for d in 1..=deg / 2 {
        // All monic candidates of degree d: p^d lower coefficient vectors.
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                g.push(t % p);
                t /= p;
            }
            g.push(1);
            if poly_rem_mod_p(h, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Ring {
    /// Builds GR(p^s, r). `h` (monic, degree r, coefficients in [0, p^s),
    /// constant term first) is required when r > 1 unless a built-in
    /// modulus exists for (p, r); it is ignored when r = 1.
    pub fn new(p: u64, r: usize, s: u32, h: Option<&[u64]>) -> Result<Ring, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r < 1 || s < 1 {
            return Err(Error::Unsupported(format!(
                "need r >= 1 and s >= 1, got r = {r}, s = {s}"
            )));
        }
        let m = p
            .checked_pow(s)
            .ok_or_else(|| Error::Unsupported(format!("p^s = {p}^{s} overflows")))?;
        let size = m.checked_pow(r as u32).ok_or_else(|| {
            Error::Unsupported(format!("p^(r*s) = {p}^{} overflows", r as u32 * s))
        })?;
        let q = p.pow(r as u32);

        let h = if r == 1 {
            vec![0, 1]
        } else {
            let given: Option<Vec<u64>> = h.map(|c| c.to_vec());
            let table = BUILTIN_MODULI
                .iter()
                .find(|&&(bp, br, _)| bp == p && br == r)
                .map(|&(_, _, c)| c.to_vec());
            let h = given.or(table).ok_or(Error::MissingModulus { p, r })?;
            if h.len() != r + 1 {
                return Err(Error::BadModulus(format!(
                    "expected degree {r} (length {}), got length {}",
                    r + 1,
                    h.len()
                )));
            }
            if h[r] != 1 {
                return Err(Error::BadModulus("not monic".into()));
            }
            if h.iter().any(|&c| c >= m) {
                return Err(Error::BadModulus(format!(
                    "coefficient out of range [0, {m})"
                )));
            }
            if !is_irreducible_mod_p(&h, p) {
                return Err(Error::BadModulus(format!("reducible mod {p}")));
            }
            h
        };

        // x^(r+k) mod h for k = 0..r-1: x^r = -(h_0 + … + h_{r-1} x^{r-1}).
        let mut xpow: Vec<Vec<u64>> = Vec::with_capacity(r.saturating_sub(1).max(1));
        if r > 1 {
            let base: Vec<u64> = (0..r).map(|j| (m - h[j] % m) % m).collect();
            xpow.push(base);
            for _ in 1..r {
                let prev = xpow.last().unwrap().clone();
                let mut next = vec![0u64; r];
                // Multiply by x: shift up, then reduce the spilled top term.
                for j in 0..r - 1 {
                    next[j + 1] = prev[j];
                }
                let top = prev[r - 1];
                for j in 0..r {
                    next[j] = (next[j] + mulmod(top, xpow[0][j], m)) % m;
                }
                xpow.push(next);
            }
        }

        let mut ring = Ring {
            p,
            r,
            s,
            q,
            m,
            size,
            h,
            xpow,
            teich: Vec::new(),
        };
        // Teichmüller set: lift one representative per residue class
        // (the q elements with all coefficients < p).
        let mut teich: Vec<Element> = (0..q)
            .map(|idx| {
                let mut coeffs = Vec::with_capacity(r);
                let mut t = idx;
                for _ in 0..r {
                    coeffs.push(t % p);
                    t /= p;
                }
                ring.teichmuller_lift(&Element { coeffs })
            })
            .collect();
        teich.sort();
        debug_assert!(teich.windows(2).all(|w| w[0] != w[1]));
        ring.teich = teich;
        Ok(ring)
    }

    /// The integer residue ring ℤ/p^sℤ as GR(p^s, 1).
    pub fn zn(p: u64, s: u32) -> Result<Ring, Error> {
        Ring::new(p, 1, s, None)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    /// Residue field size q = p^r.
    pub fn residue_size(&self) -> u64 {
        self.q
    }
    /// Character order (and coefficient modulus) m = p^s.
    pub fn char_order(&self) -> u64 {
        self.m
    }
    /// Number of ring elements, p^(r·s).
    pub fn size(&self) -> u64 {
        self.size
    }
    /// Number of units, p^(r(s-1))·(p^r − 1).
    pub fn units_count(&self) -> u64 {
        self.q.pow(self.s - 1) * (self.q - 1)
    }
    /// Modulus polynomial, constant term first (formal x when r = 1).
    pub fn modulus(&self) -> &[u64] {
        &self.h
    }

    pub fn zero(&self) -> Element {
        Element {
            coeffs: vec![0; self.r],
        }
    }
    pub fn one(&self) -> Element {
        self.scalar(1)
    }
    /// The constant polynomial c mod p^s.
    pub fn scalar(&self, c: u64) -> Element {
        let mut coeffs = vec![0; self.r];
        coeffs[0] = c % self.m;
        Element { coeffs }
    }
    pub fn is_zero(&self, a: &Element) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    /// Validates raw coefficients into an element.
    pub fn element(&self, coeffs: &[u64]) -> Result<Element, Error> {
        if coeffs.len() != self.r {
            return Err(Error::BadElement(format!(
                "expected {} coefficients, got {}",
                self.r,
                coeffs.len()
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.m) {
            return Err(Error::BadElement(format!(
                "coefficient {c} not in [0, {})",
                self.m
            )));
        }
        Ok(Element {
            coeffs: coeffs.to_vec(),
        })
    }

    /// Mixed-radix integer encoding Σ c_k·(p^s)^k; a bijection onto
    /// [0, size). Orders elements canonically for block layouts and IO.
    pub fn encode(&self, a: &Element) -> u64 {
        debug_assert_eq!(a.coeffs.len(), self.r);
        let mut acc = 0u64;
        for &c in a.coeffs.iter().rev() {
            acc = acc * self.m + c;
        }
        acc
    }
    /// Inverse of [`Ring::encode`].
    pub fn decode(&self, mut idx: u64) -> Element {
        debug_assert!(idx < self.size);
        let mut coeffs = Vec::with_capacity(self.r);
        for _ in 0..self.r {
            coeffs.push(idx % self.m);
            idx /= self.m;
        }
        Element { coeffs }
    }
    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size).map(move |i| self.decode(i))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        debug_assert_eq!(a.coeffs.len(), self.r);
        debug_assert_eq!(b.coeffs.len(), self.r);
        Element {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % self.m)
                .collect(),
        }
    }
    pub fn neg(&self, a: &Element) -> Element {
        Element {
            coeffs: a.coeffs.iter().map(|&x| (self.m - x) % self.m).collect(),
        }
    }
    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let r = self.r;
        if r == 1 {
            return Element {
                coeffs: vec![mulmod(a.coeffs[0], b.coeffs[0], self.m)],
            };
        }
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(x, y, self.m)) % self.m;
            }
        }
        let mut out = vec![0u64; r];
        out.copy_from_slice(&prod[..r]);
        for k in r..2 * r - 1 {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for j in 0..r {
                out[j] = (out[j] + mulmod(c, self.xpow[k - r][j], self.m)) % self.m;
            }
        }
        Element { coeffs: out }
    }
    /// Scalar multiple c·a for c in ℤ/p^sℤ.
    pub fn scalar_mul(&self, c: u64, a: &Element) -> Element {
        let c = c % self.m;
        Element {
            coeffs: a.coeffs.iter().map(|&x| mulmod(c, x, self.m)).collect(),
        }
    }
    pub fn pow(&self, a: &Element, mut e: u64) -> Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// γ-adic valuation: the largest v with a ∈ ⟨p^v⟩; valuation(0) = s
    /// by convention. a ∈ ⟨p^v⟩ iff every coefficient is divisible by p^v.
    pub fn valuation(&self, a: &Element) -> u32 {
        let mut v = self.s;
        for &c in &a.coeffs {
            if c == 0 {
                continue;
            }
            let mut cv = 0u32;
            let mut t = c;
            while t % self.p == 0 {
                cv += 1;
                t /= self.p;
            }
            v = v.min(cv);
        }
        v
    }
    pub fn is_unit(&self, a: &Element) -> bool {
        self.valuation(a) == 0
    }
    /// Multiplicative inverse of a unit, None otherwise.
    /// Computed as a^(|units| − 1) since units form a group.
    pub fn inverse(&self, a: &Element) -> Option<Element> {
        if !self.is_unit(a) {
            return None;
        }
        let inv = self.pow(a, self.units_count() - 1);
        debug_assert_eq!(self.mul(a, &inv), self.one());
        Some(inv)
    }

    /// The Teichmüller representative congruent to a mod p: the fixed
    /// point reached by iterating the q-power map (stable within s
    /// q-powerings since each p-powering deepens the 1 + p-part).
    pub fn teichmuller_lift(&self, a: &Element) -> Element {
        let mut cur = a.clone();
        for _ in 0..=2 * self.s as usize + 2 {
            let next = self.pow(&cur, self.q);
            if next == cur {
                return cur;
            }
            cur = next;
        }
        unreachable!("q-power map failed to stabilize");
    }

    /// The q elements fixed by the q-power map: 0 together with the
    /// cyclic group of (q−1)-st roots of unity. Sorted by encoding.
    pub fn teichmuller_set(&self) -> &[Element] {
        &self.teich
    }

    /// The p-adic digit decomposition a = a_0 + p·a_1 + … + p^(s−1)·a_(s−1)
    /// with every digit in the Teichmüller set; unique.
    pub fn padic_digits(&self, a: &Element) -> Vec<Element> {
        let mut digits = Vec::with_capacity(self.s as usize);
        let mut rest = a.clone();
        for level in 0..self.s {
            let d = self.teichmuller_lift(&rest);
            digits.push(d.clone());
            if level + 1 < self.s {
                let diff = self.sub(&rest, &d);
                // diff ∈ ⟨p⟩: exact coefficient-wise division by p.
                debug_assert!(diff.coeffs.iter().all(|&c| c % self.p == 0));
                rest = Element {
                    coeffs: diff.coeffs.iter().map(|&c| c / self.p).collect(),
                };
            }
        }
        debug_assert_eq!(&self.from_digits(&digits), a);
        digits
    }

    fn from_digits(&self, digits: &[Element]) -> Element {
        let mut acc = self.zero();
        let mut scale = 1u64;
        for d in digits {
            acc = self.add(&acc, &self.scalar_mul(scale, d));
            scale *= self.p;
        }
        acc
    }

    /// Generalized Frobenius: a_0^p + p·a_1^p + … over the p-adic digits.
    /// The identity map when r = 1; the field Frobenius x ↦ x^p when s = 1.
    pub fn frobenius(&self, a: &Element) -> Element {
        let digits = self.padic_digits(a);
        let powered: Vec<Element> = digits.iter().map(|d| self.pow(d, self.p)).collect();
        self.from_digits(&powered)
    }

    /// Generalized trace a + a^f + … + a^(f^(r−1)), a ℤ/p^sℤ-linear map
    /// onto ℤ/p^sℤ; returns the constant value in [0, p^s).
    pub fn trace(&self, a: &Element) -> u64 {
        let mut acc = a.clone();
        let mut frob = a.clone();
        for _ in 1..self.r {
            frob = self.frobenius(&frob);
            acc = self.add(&acc, &frob);
        }
        assert!(
            acc.coeffs[1..].iter().all(|&c| c == 0),
            "trace landed outside the base ring"
        );
        acc.coeffs[0]
    }

    /// Σ x_i·y_i in the ring. Lengths must match.
    pub fn inner_product(&self, x: &[Element], y: &[Element]) -> Element {
        assert_eq!(x.len(), y.len(), "inner product length mismatch");
        let mut acc = self.zero();
        for (a, b) in x.iter().zip(y) {
            acc = self.add(&acc, &self.mul(a, b));
        }
        acc
    }

    /// The ideal ⟨p^v⟩ as an explicit sorted element list (p^(r(s−v))
    /// elements). v ≤ s; v = 0 gives the whole ring, v = s gives {0}.
    pub fn ideal(&self, v: u32) -> Vec<Element> {
        assert!(v <= self.s);
        let mut out: Vec<Element> = self.elements().filter(|a| self.valuation(a) >= v).collect();
        out.sort();
        out
    }

    /// Multiset of trace values over the whole ring (for uniformity
    /// checks): value → multiplicity.
    pub fn trace_fibers(&self) -> BTreeMap<u64, u64> {
        let mut fibers = BTreeMap::new();
        for a in self.elements() {
            *fibers.entry(self.trace(&a)).or_insert(0u64) += 1;
        }
        fibers
    }

    /// Exact division by p^v: the element b with b·p^v = a, well-defined
    /// as a representative. Panics unless valuation(a) ≥ v.
    pub fn exact_div_p(&self, a: &Element, v: u32) -> Element {
        let digits = self.padic_digits(a);
        assert!(
            digits[..v as usize].iter().all(|d| self.is_zero(d)),
            "element not divisible by p^{}",
            v
        );
        self.from_digits(&digits[v as usize..])
    }

    /// Number of length-n tuples, |R|^n, saturating at u128::MAX.
    pub fn tuple_space_size(&self, n: usize) -> u128 {
        let mut total: u128 = 1;
        for _ in 0..n {
            total = total.saturating_mul(self.size as u128);
        }
        total
    }

    /// Visit every length-n tuple over the ring exactly once, in
    /// lexicographic encoding order (last coordinate fastest).
    pub fn for_each_tuple(&self, n: usize, mut f: impl FnMut(&[Element])) {
        let mut x = vec![self.zero(); n];
        'outer: loop {
            f(&x);
            let mut pos = n;
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                let next = self.encode(&x[pos]) + 1;
                if next < self.size {
                    x[pos] = self.decode(next);
                    continue 'outer;
                }
                x[pos] = self.zero();
            }
        }
    }
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    // Coefficients stay below p^s ≤ 2^32 in every supported ring far
    // before other guards trip; widen to u128 to keep this total.
    ((a as u128 * b as u128) % m as u128) as u64
}
