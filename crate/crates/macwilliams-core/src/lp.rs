//! Linear programming bounds on code size from the identity constraints.
//!
//! Every true decomposition enumerator of a linear code C ⊆ R^n
//! satisfies, at every column decomposition ρ,
//!
//! ```text
//! Σ_π E_π(C) · K_π(ρ)  =  |C| · E_ρ(C⊥)  ≥  0,
//! ```
//!
//! so maximizing 1 + Σ_π E_π over nonnegative solutions of those
//! inequalities — with E at the zero decomposition pinned to 1 and the
//! entries of weight below d forced to zero — bounds |C| from above for
//! codes of minimum weight ≥ d. This module builds that program with
//! exact rational data: Krawtchouk columns are summed over unit-rescaling
//! orbits, whose sums are rational because the summands are Galois
//! conjugates of one another. The program is solved by an exact two-phase
//! dense simplex under Bland's anti-cycling rule, and every reported
//! optimum is re-checked against a duality certificate that is
//! independent of the pivot path.
//!
//! A brute-force companion enumerates all desk-scale codes outright, so
//! the bound can be tested for soundness against the true optimum.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::code::{code_from_generator, decomposition_enumerator, min_weight, LinearCode};
use crate::cyclotomic::CycInt;
use crate::error::Error;
use crate::krawtchouk::{block_pair_table, kraw_cyc};
use crate::partition::{
    all_decompositions, build_partition, decomposition_weight, AlphabetPartition, PartitionKind,
};
use crate::ring::{Element, Ring};
use crate::transform::all_tuples;
use crate::weight::WeightKind;

/// Whether a constraint row demands at-least or exact equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Σ coeffs·x ≥ rhs.
    Ge,
    /// Σ coeffs·x = rhs.
    Eq,
}

/// One linear constraint over the problem variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    /// Row of the constraint matrix, one entry per variable.
    pub coeffs: Vec<BigRational>,
    /// The sense of the row.
    pub relation: Relation,
    /// The right-hand side.
    pub rhs: BigRational,
}

/// One LP variable: the enumerator entry (or the shared value of a class
/// of entries) it stands for. Empty for bare programs built with
/// [`LpProblem::raw`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpVariable {
    /// The decompositions whose enumerator entries this variable carries.
    pub decompositions: Vec<Vec<u64>>,
}

/// An exact-rational linear program: maximize `objective · x` subject to
/// `constraints` and `x ≥ 0`.
#[derive(Clone, Debug)]
pub struct LpProblem {
    /// What each variable means; parallel to `objective`.
    pub variables: Vec<LpVariable>,
    /// The constraint rows.
    pub constraints: Vec<Constraint>,
    /// The objective row; for bound programs the coefficient is the
    /// number of decompositions the variable aggregates.
    pub objective: Vec<BigRational>,
}

impl LpProblem {
    /// A bare program with no decomposition bookkeeping: maximize
    /// `objective · x` subject to the constraints and `x ≥ 0`.
    pub fn raw(constraints: Vec<Constraint>, objective: Vec<BigRational>) -> LpProblem {
        let variables = objective
            .iter()
            .map(|_| LpVariable {
                decompositions: Vec::new(),
            })
            .collect();
        LpProblem {
            variables,
            constraints,
            objective,
        }
    }
}

/// How `build_lp` treats the unit-rescaling symmetry of the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpMode {
    /// One variable per nonzero decomposition. Constraints are summed
    /// over unit-rescaling orbits of the column index, which keeps every
    /// entry rational; wherever those orbits are nontrivial this is a
    /// sound relaxation of the per-column system, elsewhere it is that
    /// system verbatim.
    PerDecomposition,
    /// One shared variable per unit-rescaling orbit of decompositions,
    /// valid because a linear code is closed under rescaling by units,
    /// so its enumerator is constant on each orbit. Needs the Lee blocks
    /// of ℤ/p^sℤ. Never weaker than `PerDecomposition`.
    UnitOrbits,
}

/// The distinct images of one decomposition under rescaling the alphabet
/// by every unit of ℤ/p^sℤ; the units permute the Lee blocks, so the
/// counts travel with them. Members are sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryOrbit {
    /// The orbit, sorted and deduplicated.
    pub members: Vec<Vec<u64>>,
}

/// An optimum reported by [`solve_lp`]: the value, one maximizing
/// assignment, and a certificate — the final basis together with the
/// independent constraint rows it prices — that [`verify_optimality`]
/// can check without retracing any pivots.
#[derive(Clone, Debug)]
pub struct LpSolution {
    /// The optimal objective value.
    pub value: BigRational,
    /// One optimal assignment of the problem variables.
    pub assignment: Vec<BigRational>,
    /// Column indices (variables first, then one surplus column per ≥
    /// row) forming the final basis.
    pub basis: Vec<usize>,
    /// The constraint rows the basis prices: a maximal independent
    /// subset, in input order.
    pub rows: Vec<usize>,
}

/// The block permutations induced by multiplying the alphabet by each
/// scalar unit c (p ∤ c). Every partition built by this crate is stable
/// under unit rescaling, so c maps blocks onto blocks; the returned
/// permutations are deduplicated.
fn scalar_unit_block_perms(partition: &AlphabetPartition) -> Vec<Vec<usize>> {
    let ring = partition.ring();
    let mut perms: BTreeSet<Vec<usize>> = BTreeSet::new();
    for c in 1..ring.char_order() {
        if c % ring.p() == 0 {
            continue;
        }
        let perm: Vec<usize> = (0..partition.block_count())
            .map(|i| partition.block_index(&ring.scalar_mul(c, partition.representative(i))))
            .collect();
        debug_assert!(partition.blocks().iter().enumerate().all(|(i, block)| {
            block
                .iter()
                .all(|a| partition.block_index(&ring.scalar_mul(c, a)) == perm[i])
        }));
        perms.insert(perm);
    }
    perms.into_iter().collect()
}

/// Applies each block permutation to the decomposition and collects the
/// distinct images: counts move to the image block.
fn decomposition_orbit(pi: &[u64], perms: &[Vec<usize>]) -> Vec<Vec<u64>> {
    let mut out: BTreeSet<Vec<u64>> = BTreeSet::new();
    for perm in perms {
        let mut image = vec![0u64; pi.len()];
        for (i, &count) in pi.iter().enumerate() {
            image[perm[i]] = count;
        }
        out.insert(image);
    }
    out.into_iter().collect()
}

/// The unit-rescaling orbit of a decomposition with respect to the Lee
/// blocks of ℤ/p^sℤ. The enumerator of any linear code takes one value
/// on the whole orbit, which is what lets [`build_lp`] share a single
/// variable per orbit in [`LpMode::UnitOrbits`].
pub fn symmetry_orbit(pi: &[u64], ring: &Ring) -> Result<SymmetryOrbit, Error> {
    if ring.r() != 1 {
        return Err(Error::IncompatiblePartition(format!(
            "unit rescaling permutes Lee blocks only over ℤ/p^sℤ; got GR({}^{}, {})",
            ring.p(),
            ring.s(),
            ring.r()
        )));
    }
    let partition = build_partition(PartitionKind::LeeBlocks, ring)?;
    if pi.len() != partition.block_count() {
        return Err(Error::LengthMismatch {
            left: pi.len(),
            right: partition.block_count(),
        });
    }
    let perms = scalar_unit_block_perms(&partition);
    Ok(SymmetryOrbit {
        members: decomposition_orbit(pi, &perms),
    })
}

/// The finest partition this crate attaches to a ring, used by
/// [`lp_bound`] so the program sees as many independent enumerator
/// entries as possible: Lee blocks on ℤ/p^sℤ, base-field orbits on
/// fields, the zero/unit/socle/rest split on proper extension rings.
pub fn partition_for_lp(ring: &Ring) -> PartitionKind {
    if ring.r() == 1 {
        PartitionKind::LeeBlocks
    } else if ring.s() == 1 {
        PartitionKind::SubfieldOrbits
    } else {
        PartitionKind::HomZUSR
    }
}

/// Builds the bound program for codes in R^n of minimum `kind`-weight
/// ≥ d over the given partition: variables as dictated by `mode` (those
/// of weight below d dropped, i.e. forced to zero), and for every column
/// orbit the inequality
///
/// ```text
/// Σ_i E_i · ( Σ_{ρ ∈ orbit} K_{π(i)}(ρ) )  ≥  − Σ_{ρ ∈ orbit} |column class of ρ|,
/// ```
///
/// the right-hand side being the contribution of the pinned E = 1 at the
/// zero decomposition, whose Krawtchouk value is the class size itself.
pub fn build_lp(
    partition: &AlphabetPartition,
    kind: &WeightKind,
    n: u64,
    d: &BigRational,
    mode: LpMode,
    guard: u64,
) -> Result<LpProblem, Error> {
    let ring = partition.ring();
    kind.check_compatible(ring)?;
    if mode == LpMode::UnitOrbits && (ring.r() != 1 || partition.kind() != PartitionKind::LeeBlocks)
    {
        return Err(Error::IncompatiblePartition(format!(
            "orbit folding needs the Lee blocks of ℤ/p^sℤ; got {:?} over GR({}^{}, {})",
            partition.kind(),
            ring.p(),
            ring.s(),
            ring.r()
        )));
    }
    let b = partition.block_count();
    let decomp_count = crate::num::binomial(n + b as u64 - 1, b as u64 - 1);
    if decomp_count > BigInt::from(guard) {
        return Err(Error::GuardExceeded {
            size: decomp_count.to_u128().unwrap_or(u128::MAX),
            guard,
        });
    }
    let decomps = all_decompositions(b, n);
    let pi0 = partition.decompose(&vec![ring.zero(); n as usize]);
    let table = block_pair_table(partition);
    let perms = scalar_unit_block_perms(partition);

    // Unit-rescaling orbits of all decompositions, ordered by first
    // appearance; they are the constraint columns, and in orbit mode the
    // variables as well.
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut orbits: Vec<Vec<Vec<u64>>> = Vec::new();
    for pi in &decomps {
        if seen.contains(pi) {
            continue;
        }
        let members = decomposition_orbit(pi, &perms);
        for member in &members {
            seen.insert(member.clone());
        }
        orbits.push(members);
    }

    let classes: Vec<Vec<Vec<u64>>> = match mode {
        LpMode::PerDecomposition => decomps
            .iter()
            .filter(|pi| **pi != pi0)
            .map(|pi| vec![pi.clone()])
            .collect(),
        LpMode::UnitOrbits => orbits
            .iter()
            .filter(|orbit| !orbit.contains(&pi0))
            .cloned()
            .collect(),
    };
    let mut variables = Vec::new();
    for class in classes {
        // A class is dropped as soon as one member dips below d: on a
        // real code the members share their entry, so the shared value
        // would have to be zero anyway.
        let mut below = false;
        for pi in &class {
            if decomposition_weight(pi, partition, kind)? < *d {
                below = true;
                break;
            }
        }
        if !below {
            variables.push(LpVariable {
                decompositions: class,
            });
        }
    }

    let mut constraints = Vec::with_capacity(orbits.len());
    for rho_orbit in &orbits {
        let mut coeffs = Vec::with_capacity(variables.len());
        for var in &variables {
            let mut acc = CycInt::zero(ring.p(), ring.char_order());
            for rho in rho_orbit {
                for pi in &var.decompositions {
                    acc = acc.add(&kraw_cyc(&table, pi, rho)?)?;
                }
            }
            // The orbit sum is a sum of Galois conjugates, so this
            // conversion cannot fail on a correctly built orbit.
            coeffs.push(acc.to_rational()?);
        }
        let mut rhs = BigRational::zero();
        for rho in rho_orbit {
            rhs -= BigRational::from_integer(partition.tuple_class_size(rho));
        }
        constraints.push(Constraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        });
    }
    let objective = variables
        .iter()
        .map(|v| BigRational::from_integer(BigInt::from(v.decompositions.len() as u64)))
        .collect();
    Ok(LpProblem {
        variables,
        constraints,
        objective,
    })
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Whether the point is nonnegative and satisfies every constraint.
pub fn satisfies(problem: &LpProblem, point: &[BigRational]) -> bool {
    if point.len() != problem.objective.len() || point.iter().any(|v| v.is_negative()) {
        return false;
    }
    problem.constraints.iter().all(|con| {
        let lhs = dot(&con.coeffs, point);
        match con.relation {
            Relation::Ge => lhs >= con.rhs,
            Relation::Eq => lhs == con.rhs,
        }
    })
}

/// The point a concrete code induces in a problem's variable space: each
/// variable reads the code's enumerator entry at its decomposition; a
/// folded variable checks all members agree and takes the shared value.
pub fn enumerator_assignment(
    problem: &LpProblem,
    code: &LinearCode,
    partition: &AlphabetPartition,
) -> Result<Vec<BigRational>, Error> {
    let e = decomposition_enumerator(code, partition)?;
    let mut out = Vec::with_capacity(problem.variables.len());
    for var in &problem.variables {
        let counts: Vec<u64> = var.decompositions.iter().map(|pi| e.get(pi)).collect();
        let first = counts.first().copied().unwrap_or(0);
        // Members of one variable share their entry on any linear code.
        assert!(
            counts.iter().all(|&c| c == first),
            "orbit members disagree on a linear code"
        );
        out.push(BigRational::from_integer(BigInt::from(first)));
    }
    Ok(out)
}

/// The equality standardization solve and verify share: one surplus
/// column per ≥ row (so `A x = b`, `x ≥ 0`), objective extended by
/// zeros. Column j < n_struct is problem variable j.
struct StandardForm {
    a: Vec<Vec<BigRational>>,
    b: Vec<BigRational>,
    c: Vec<BigRational>,
    n_struct: usize,
}

fn standard_form(problem: &LpProblem) -> Result<StandardForm, Error> {
    let n_struct = problem.objective.len();
    let surplus_total = problem
        .constraints
        .iter()
        .filter(|con| con.relation == Relation::Ge)
        .count();
    let n_total = n_struct + surplus_total;
    let mut a = Vec::with_capacity(problem.constraints.len());
    let mut b = Vec::with_capacity(problem.constraints.len());
    let mut surplus_seen = 0usize;
    for con in &problem.constraints {
        if con.coeffs.len() != n_struct {
            return Err(Error::LengthMismatch {
                left: con.coeffs.len(),
                right: n_struct,
            });
        }
        let mut row = vec![BigRational::zero(); n_total];
        row[..n_struct].clone_from_slice(&con.coeffs);
        if con.relation == Relation::Ge {
            row[n_struct + surplus_seen] = -BigRational::one();
            surplus_seen += 1;
        }
        a.push(row);
        b.push(con.rhs.clone());
    }
    let mut c = vec![BigRational::zero(); n_total];
    c[..n_struct].clone_from_slice(&problem.objective);
    Ok(StandardForm { a, b, c, n_struct })
}

/// A maximal independent subset of the rows of [A | b], in input order.
/// A row that reduces to 0 = nonzero proves the equality system (hence
/// the program) infeasible on the spot.
fn independent_rows(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<usize>, Error> {
    let width = a.first().map_or(0, |row| row.len());
    let mut reduced: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut kept = Vec::new();
    for (idx, row) in a.iter().enumerate() {
        let mut r = row.clone();
        let mut rb = b[idx].clone();
        for (k, &pc) in pivots.iter().enumerate() {
            if r[pc].is_zero() {
                continue;
            }
            let f = r[pc].clone();
            for (rj, cj) in r.iter_mut().zip(&reduced[k].0) {
                *rj -= &f * cj;
            }
            let delta = &f * &reduced[k].1;
            rb -= delta;
        }
        if let Some(pc) = (0..width).find(|&j| !r[j].is_zero()) {
            let piv = r[pc].clone();
            let normalized: Vec<BigRational> = r.iter().map(|e| e / &piv).collect();
            reduced.push((normalized, rb / &piv));
            pivots.push(pc);
            kept.push(idx);
        } else if !rb.is_zero() {
            return Err(Error::Infeasible);
        }
    }
    Ok(kept)
}

fn pivot(tab: &mut [Vec<BigRational>], basis: &mut [usize], row: usize, col: usize) {
    let piv = tab[row][col].clone();
    let normalized: Vec<BigRational> = tab[row].iter().map(|e| e / &piv).collect();
    tab[row] = normalized;
    for i in 0..tab.len() {
        if i == row || tab[i][col].is_zero() {
            continue;
        }
        let factor = tab[i][col].clone();
        let updated: Vec<BigRational> = tab[i]
            .iter()
            .zip(tab[row].iter())
            .map(|(a, b)| a - &(&factor * b))
            .collect();
        tab[i] = updated;
    }
    basis[row] = col;
}

fn reduced_cost(
    tab: &[Vec<BigRational>],
    basis: &[usize],
    cost: &[BigRational],
    j: usize,
) -> BigRational {
    let mut acc = cost[j].clone();
    for (i, &bi) in basis.iter().enumerate() {
        if cost[bi].is_zero() || tab[i][j].is_zero() {
            continue;
        }
        acc -= &cost[bi] * &tab[i][j];
    }
    acc
}

fn ratio_leave(tab: &[Vec<BigRational>], basis: &[usize], col: usize, rhs: usize) -> Option<usize> {
    let mut leave: Option<(usize, BigRational)> = None;
    for i in 0..tab.len() {
        if !tab[i][col].is_positive() {
            continue;
        }
        let ratio = &tab[i][rhs] / &tab[i][col];
        let better = match &leave {
            None => true,
            // Smallest ratio, ties broken on the smallest basic index:
            // the anti-cycling rule.
            Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
        };
        if better {
            leave = Some((i, ratio));
        }
    }
    leave.map(|(i, _)| i)
}

/// One simplex phase: repeatedly enter the smallest-index active column
/// with positive reduced cost (Bland's rule, so no cycle is possible)
/// until none remains or unboundedness is proven.
fn run_simplex(
    tab: &mut [Vec<BigRational>],
    basis: &mut [usize],
    cost: &[BigRational],
    active: &[bool],
) -> Result<(), Error> {
    let rhs = cost.len();
    loop {
        let entering = (0..cost.len())
            .filter(|&j| active[j] && !basis.contains(&j))
            .find(|&j| reduced_cost(tab, basis, cost, j).is_positive());
        let Some(col) = entering else {
            return Ok(());
        };
        let Some(row) = ratio_leave(tab, basis, col, rhs) else {
            return Err(Error::Unbounded);
        };
        pivot(tab, basis, row, col);
    }
}

/// Solves the program exactly: two-phase dense simplex over ℚ with
/// Bland's anti-cycling rule. Returns [`Error::Infeasible`] or
/// [`Error::Unbounded`] when the program is.
pub fn solve_lp(problem: &LpProblem) -> Result<LpSolution, Error> {
    let form = standard_form(problem)?;
    let n_total = form.c.len();
    let rows = independent_rows(&form.a, &form.b)?;
    let m = rows.len();
    let rhs_col = n_total + m;

    // Tableau over the independent rows with b ≥ 0 and one artificial
    // basic variable per row.
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (k, &i) in rows.iter().enumerate() {
        let flip = form.b[i].is_negative();
        let mut row = Vec::with_capacity(rhs_col + 1);
        for j in 0..n_total {
            let v = form.a[i][j].clone();
            row.push(if flip { -v } else { v });
        }
        for l in 0..m {
            row.push(if l == k {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        row.push(if flip {
            -form.b[i].clone()
        } else {
            form.b[i].clone()
        });
        tab.push(row);
    }
    let mut basis: Vec<usize> = (0..m).map(|k| n_total + k).collect();

    // Phase one: price the artificials at -1 and drive them to zero.
    // They may leave the basis but never re-enter.
    let mut cost = vec![BigRational::zero(); rhs_col];
    for k in 0..m {
        cost[n_total + k] = -BigRational::one();
    }
    let mut active = vec![false; rhs_col];
    for slot in active.iter_mut().take(n_total) {
        *slot = true;
    }
    run_simplex(&mut tab, &mut basis, &cost, &active)?;
    let mut residue = BigRational::zero();
    for (k, &bk) in basis.iter().enumerate() {
        if bk >= n_total {
            residue += tab[k][rhs_col].clone();
        }
    }
    if !residue.is_zero() {
        return Err(Error::Infeasible);
    }
    // Any artificial still basic sits at level zero; its row is
    // independent, so it has a real column to pivot out on, and the
    // degenerate pivot leaves the solution unchanged.
    for k in 0..m {
        if basis[k] >= n_total {
            let col = (0..n_total)
                .find(|&j| !tab[k][j].is_zero())
                .expect("independent row must touch a real column");
            pivot(&mut tab, &mut basis, k, col);
        }
    }

    // Phase two: the real objective over the real columns.
    for (j, slot) in cost.iter_mut().enumerate() {
        *slot = if j < n_total {
            form.c[j].clone()
        } else {
            BigRational::zero()
        };
    }
    run_simplex(&mut tab, &mut basis, &cost, &active)?;

    let mut x = vec![BigRational::zero(); n_total];
    for (k, &bk) in basis.iter().enumerate() {
        debug_assert!(bk < n_total, "artificial survived into phase two");
        x[bk] = tab[k][rhs_col].clone();
    }
    let value = dot(&form.c, &x);
    Ok(LpSolution {
        value,
        assignment: x[..form.n_struct].to_vec(),
        basis,
        rows,
    })
}

/// Gauss-Jordan solve of a square exact system; `None` when singular.
fn solve_square(mat: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = mat.len();
    let mut a: Vec<Vec<BigRational>> = mat
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    for col in 0..n {
        let piv_row = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, piv_row);
        let piv = a[col][col].clone();
        let normalized: Vec<BigRational> = a[col].iter().map(|e| e / &piv).collect();
        a[col] = normalized;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            let updated: Vec<BigRational> = a[i]
                .iter()
                .zip(a[col].iter())
                .map(|(x, y)| x - &(&f * y))
                .collect();
            a[i] = updated;
        }
    }
    Some((0..n).map(|i| a[i][n].clone()).collect())
}

/// Checks a reported optimum without retracing the pivots: the
/// assignment must be feasible and price the objective at the claimed
/// value, and the dual prices recovered from the certificate basis must
/// dominate every column (yᵀA ≥ c) while meeting the same value (yᵀb
/// equal to it). Together those squeeze the true optimum to exactly the
/// claim. Any failure yields `Ok(false)`.
pub fn verify_optimality(problem: &LpProblem, solution: &LpSolution) -> Result<bool, Error> {
    let form = standard_form(problem)?;
    let n_total = form.c.len();
    if !satisfies(problem, &solution.assignment) {
        return Ok(false);
    }
    if dot(&problem.objective, &solution.assignment) != solution.value {
        return Ok(false);
    }
    let rows = &solution.rows;
    let basis = &solution.basis;
    if rows.len() != basis.len()
        || rows.iter().any(|&i| i >= form.a.len())
        || basis.iter().any(|&j| j >= n_total)
    {
        return Ok(false);
    }
    // Dual prices y from Bᵀ y = c_B, solved afresh.
    let m = rows.len();
    let bt: Vec<Vec<BigRational>> = (0..m)
        .map(|l| (0..m).map(|k| form.a[rows[k]][basis[l]].clone()).collect())
        .collect();
    let cb: Vec<BigRational> = basis.iter().map(|&j| form.c[j].clone()).collect();
    let Some(y) = solve_square(&bt, &cb) else {
        return Ok(false);
    };
    for j in 0..n_total {
        let mut rc = form.c[j].clone();
        for (k, &ri) in rows.iter().enumerate() {
            rc -= &y[k] * &form.a[ri][j];
        }
        if rc.is_positive() {
            return Ok(false);
        }
    }
    let mut dual_value = BigRational::zero();
    for (k, &ri) in rows.iter().enumerate() {
        dual_value += &y[k] * &form.b[ri];
    }
    Ok(dual_value == solution.value)
}

/// The LP upper bound on |C| for linear codes C ⊆ R^n of minimum
/// `kind`-weight ≥ d (the zero code has no nonzero word, so the bound is
/// at least 1). Builds the program over the finest partition for the
/// ring, solves it exactly, re-checks the optimum, and restores the
/// pinned entry: bound = 1 + optimum.
pub fn lp_bound(
    ring: &Ring,
    kind: &WeightKind,
    n: u64,
    d: &BigRational,
    mode: LpMode,
    guard: u64,
) -> Result<BigRational, Error> {
    let partition = build_partition(partition_for_lp(ring), ring)?;
    let problem = build_lp(&partition, kind, n, d, mode, guard)?;
    let solution = solve_lp(&problem)?;
    assert!(
        verify_optimality(&problem, &solution)?,
        "optimality certificate failed"
    );
    Ok(BigRational::one() + solution.value)
}

/// Brute-force companion to [`lp_bound`]: the exact maximum size of a
/// linear code in R^n of minimum `kind`-weight ≥ d, found by
/// materializing every code generated by up to `max_rows` nonzero tuples
/// (every submodule of R^n is generated by n rows, so `max_rows = n` is
/// exhaustive). Desk scale only; the guard bounds the tuple space and
/// the number of generator sets.
pub fn exhaustive_optimum(
    ring: &Ring,
    kind: &WeightKind,
    n: usize,
    d: &BigRational,
    max_rows: usize,
    guard: u64,
) -> Result<u64, Error> {
    kind.check_compatible(ring)?;
    let nonzero: Vec<Vec<Element>> = all_tuples(ring, n, guard)?
        .into_iter()
        .filter(|t| !t.iter().all(|a| ring.is_zero(a)))
        .collect();
    let t = nonzero.len() as u64;
    let mut sets = BigInt::from(0u32);
    for k in 0..=max_rows as u64 {
        sets += crate::num::binomial(t, k);
    }
    if sets > BigInt::from(guard) {
        return Err(Error::GuardExceeded {
            size: sets.to_u128().unwrap_or(u128::MAX),
            guard,
        });
    }
    let mut best = 1u64; // the zero code satisfies any distance demand
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    for k in 1..=max_rows.min(nonzero.len()) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let rows: Vec<Vec<Element>> = idx.iter().map(|&i| nonzero[i].clone()).collect();
            let code = code_from_generator(ring, n, &rows, guard)?;
            let key: Vec<Vec<u64>> = code
                .codewords()
                .iter()
                .map(|w| w.iter().map(|a| ring.encode(a)).collect())
                .collect();
            if seen.insert(key) {
                let admissible = match min_weight(&code, kind)? {
                    None => true,
                    Some(w) => w >= *d,
                };
                if admissible {
                    best = best.max(code.size());
                }
            }
            let mut advanced = false;
            let mut pos = k;
            while pos > 0 {
                pos -= 1;
                if idx[pos] + 1 + (k - 1 - pos) < nonzero.len() {
                    idx[pos] += 1;
                    for q in pos + 1..k {
                        idx[q] = idx[q - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{rat, rat_frac};
    use proptest::prelude::*;

    const GUARD: u64 = 10_000_000;

    fn z4() -> Ring {
        Ring::zn(2, 2).unwrap()
    }

    fn z5() -> Ring {
        Ring::zn(5, 1).unwrap()
    }

    fn z9() -> Ring {
        Ring::zn(3, 2).unwrap()
    }

    fn lee_partition(ring: &Ring) -> AlphabetPartition {
        build_partition(PartitionKind::LeeBlocks, ring).unwrap()
    }

    fn gens(ring: &Ring, rows: &[&[u64]]) -> Vec<Vec<Element>> {
        rows.iter()
            .map(|row| row.iter().map(|&v| ring.scalar(v)).collect())
            .collect()
    }

    fn big(v: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn unit_rescaling_orbits_match_hand_computation() {
        let z9 = z9();
        let fixed = symmetry_orbit(&[3, 0, 0, 0, 0], &z9).unwrap();
        assert_eq!(fixed.members, vec![vec![3, 0, 0, 0, 0]]);
        // Lee blocks of ℤ/9: {0}, {1,8}, {2,7}, {3,6}, {4,5}. Doubling
        // cycles the three unit blocks and fixes the other two.
        let orbit = symmetry_orbit(&[0, 2, 0, 1, 0], &z9).unwrap();
        assert_eq!(
            orbit.members,
            vec![
                vec![0, 0, 0, 1, 2],
                vec![0, 0, 2, 1, 0],
                vec![0, 2, 0, 1, 0]
            ]
        );
        // ±1 are the only units of ℤ/4 and negation fixes every block.
        let z4 = z4();
        let still = symmetry_orbit(&[0, 1, 1], &z4).unwrap();
        assert_eq!(still.members, vec![vec![0, 1, 1]]);
        let f4 = Ring::new(2, 2, 1, None).unwrap();
        assert!(matches!(
            symmetry_orbit(&[1, 1, 0], &f4),
            Err(Error::IncompatiblePartition(_))
        ));
        assert!(matches!(
            symmetry_orbit(&[1, 1], &z9),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn orbit_members_share_the_code_enumerator() {
        let z9 = z9();
        let z8 = Ring::zn(2, 3).unwrap();
        let z4 = z4();
        let cases = [
            (&z9, gens(&z9, &[&[3, 2, 8]])),
            (&z8, gens(&z8, &[&[1, 2]])),
            (&z4, gens(&z4, &[&[1, 1], &[0, 2]])),
        ];
        for (ring, rows) in cases {
            let n = rows[0].len();
            let code = code_from_generator(ring, n, &rows, GUARD).unwrap();
            let partition = lee_partition(ring);
            let e = decomposition_enumerator(&code, &partition).unwrap();
            for pi in e.entries().keys() {
                let orbit = symmetry_orbit(pi, ring).unwrap();
                for member in &orbit.members {
                    assert_eq!(e.get(member), e.get(pi), "{:?} vs {:?}", member, pi);
                }
            }
        }
    }

    #[test]
    fn toy_programs_solve_exactly() {
        // max x subject to x ≤ 3.
        let p = LpProblem::raw(
            vec![Constraint {
                coeffs: vec![rat(-1)],
                relation: Relation::Ge,
                rhs: rat(-3),
            }],
            vec![rat(1)],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.value, rat(3));
        assert_eq!(s.assignment, vec![rat(3)]);
        assert!(verify_optimality(&p, &s).unwrap());

        // max x + y subject to x + y ≤ 2 and x ≤ 1.
        let p = LpProblem::raw(
            vec![
                Constraint {
                    coeffs: vec![rat(-1), rat(-1)],
                    relation: Relation::Ge,
                    rhs: rat(-2),
                },
                Constraint {
                    coeffs: vec![rat(-1), rat(0)],
                    relation: Relation::Ge,
                    rhs: rat(-1),
                },
            ],
            vec![rat(1), rat(1)],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.value, rat(2));
        assert!(verify_optimality(&p, &s).unwrap());

        // Equality rows, one redundant: max x subject to x = 2 (twice).
        let p = LpProblem::raw(
            vec![
                Constraint {
                    coeffs: vec![rat(1)],
                    relation: Relation::Eq,
                    rhs: rat(2),
                },
                Constraint {
                    coeffs: vec![rat(1)],
                    relation: Relation::Eq,
                    rhs: rat(2),
                },
            ],
            vec![rat(1)],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.value, rat(2));
        assert_eq!(s.rows, vec![0]);
        assert!(verify_optimality(&p, &s).unwrap());
    }

    #[test]
    fn cycling_prone_program_terminates_at_the_known_optimum() {
        // A classic degenerate instance on which the naive largest-gain
        // pivot rule loops forever; the anti-cycling rule must finish,
        // at optimum 1 (x1 = x3 = 1).
        let p = LpProblem::raw(
            vec![
                Constraint {
                    coeffs: vec![rat_frac(-1, 2), rat_frac(11, 2), rat_frac(5, 2), rat(-9)],
                    relation: Relation::Ge,
                    rhs: rat(0),
                },
                Constraint {
                    coeffs: vec![rat_frac(-1, 2), rat_frac(3, 2), rat_frac(1, 2), rat(-1)],
                    relation: Relation::Ge,
                    rhs: rat(0),
                },
                Constraint {
                    coeffs: vec![rat(-1), rat(0), rat(0), rat(0)],
                    relation: Relation::Ge,
                    rhs: rat(-1),
                },
            ],
            vec![rat(10), rat(-57), rat(-9), rat(-24)],
        );
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.value, rat(1));
        assert!(verify_optimality(&p, &s).unwrap());
    }

    #[test]
    fn infeasible_and_unbounded_programs_are_flagged() {
        let p = LpProblem::raw(
            vec![
                Constraint {
                    coeffs: vec![rat(1)],
                    relation: Relation::Ge,
                    rhs: rat(1),
                },
                Constraint {
                    coeffs: vec![rat(-1)],
                    relation: Relation::Ge,
                    rhs: rat(0),
                },
            ],
            vec![rat(1)],
        );
        assert!(matches!(solve_lp(&p), Err(Error::Infeasible)));

        let p = LpProblem::raw(Vec::new(), vec![rat(1)]);
        assert!(matches!(solve_lp(&p), Err(Error::Unbounded)));

        // Inconsistent equalities are caught during row reduction.
        let p = LpProblem::raw(
            vec![
                Constraint {
                    coeffs: vec![rat(1)],
                    relation: Relation::Eq,
                    rhs: rat(2),
                },
                Constraint {
                    coeffs: vec![rat(1)],
                    relation: Relation::Eq,
                    rhs: rat(3),
                },
            ],
            vec![rat(0)],
        );
        assert!(matches!(solve_lp(&p), Err(Error::Infeasible)));
    }

    #[test]
    fn certificates_reject_tampered_solutions() {
        let p = LpProblem::raw(
            vec![Constraint {
                coeffs: vec![rat(-1)],
                relation: Relation::Ge,
                rhs: rat(-3),
            }],
            vec![rat(1)],
        );
        let good = solve_lp(&p).unwrap();
        assert!(verify_optimality(&p, &good).unwrap());

        let mut wrong_value = good.clone();
        wrong_value.value += rat(1);
        assert!(!verify_optimality(&p, &wrong_value).unwrap());

        // Feasible but suboptimal point: the claimed value disagrees
        // with the dual price.
        let mut sub = good.clone();
        sub.assignment[0] = rat(2);
        sub.value = rat(2);
        assert!(!verify_optimality(&p, &sub).unwrap());

        let mut outside = good.clone();
        outside.assignment[0] = rat(4);
        outside.value = rat(4);
        assert!(!verify_optimality(&p, &outside).unwrap());
    }

    #[test]
    fn constraint_offsets_match_direct_counts() {
        // The right-hand side of a column constraint is minus the size
        // of the column's tuple class: as a Krawtchouk value at the zero
        // decomposition, as the stored class size, and in closed form
        // multinomial(n; ρ) · 2^(coordinates on two-element blocks).
        for ring in [z5(), z9()] {
            let partition = lee_partition(&ring);
            let table = block_pair_table(&partition);
            let n = 2u64;
            let pi0 = partition.decompose(&vec![ring.zero(); n as usize]);
            for rho in all_decompositions(partition.block_count(), n) {
                let counted = partition.tuple_class_size(&rho);
                let k = kraw_cyc(&table, &pi0, &rho).unwrap().to_rational().unwrap();
                assert_eq!(k, BigRational::from_integer(counted.clone()));
                // Odd characteristic: every nonzero Lee block is a pair.
                let moved: u64 = rho.iter().skip(1).sum();
                let closed = crate::num::multinomial(n, &rho) * BigInt::from(1u64 << moved);
                assert_eq!(counted, closed);
            }
        }
    }

    #[test]
    fn bound_is_one_past_the_alphabet_diameter() {
        let z4 = z4();
        for mode in [LpMode::PerDecomposition, LpMode::UnitOrbits] {
            let bound = lp_bound(&z4, &WeightKind::Lee, 2, &rat(5), mode, GUARD).unwrap();
            assert_eq!(bound, rat(1));
        }
    }

    #[test]
    fn quaternary_lee_bounds_dominate_the_exhaustive_optimum() {
        let z4 = z4();
        // Hand-checkable optima over (ℤ/4)²: everything, the even-sum
        // code ⟨(1,1),(0,2)⟩, then ⟨(2,2)⟩ once weight 3 is demanded.
        let expected = [16u64, 8, 2, 2];
        for d in 1i64..=4 {
            let opt = exhaustive_optimum(&z4, &WeightKind::Lee, 2, &rat(d), 2, GUARD).unwrap();
            assert_eq!(opt, expected[(d - 1) as usize]);
            let plain = lp_bound(
                &z4,
                &WeightKind::Lee,
                2,
                &rat(d),
                LpMode::PerDecomposition,
                GUARD,
            )
            .unwrap();
            let folded =
                lp_bound(&z4, &WeightKind::Lee, 2, &rat(d), LpMode::UnitOrbits, GUARD).unwrap();
            // Unit rescaling fixes every Lee block of ℤ/4, so the two
            // modes build the same program.
            assert_eq!(plain, folded);
            assert!(plain >= big(opt), "d = {d}: {plain} < {opt}");
        }
    }

    #[test]
    fn bounds_shrink_as_the_distance_grows() {
        let z9 = z9();
        for mode in [LpMode::PerDecomposition, LpMode::UnitOrbits] {
            let mut last: Option<BigRational> = None;
            for d in 1i64..=8 {
                let bound = lp_bound(&z9, &WeightKind::Lee, 2, &rat(d), mode, GUARD).unwrap();
                if let Some(prev) = &last {
                    assert!(bound <= *prev, "d = {d}");
                }
                assert!(bound >= BigRational::one());
                last = Some(bound);
            }
        }
    }

    #[test]
    fn orbit_folding_never_weakens_the_bound() {
        // Over ℤ/5 and ℤ/9 the units genuinely permute Lee blocks, so
        // the folded program is a strict refinement, never weaker.
        let z5 = z5();
        let z9 = z9();
        for (ring, dmax) in [(&z5, 4i64), (&z9, 6i64)] {
            for d in 1..=dmax {
                let plain = lp_bound(
                    ring,
                    &WeightKind::Lee,
                    2,
                    &rat(d),
                    LpMode::PerDecomposition,
                    GUARD,
                )
                .unwrap();
                let folded = lp_bound(
                    ring,
                    &WeightKind::Lee,
                    2,
                    &rat(d),
                    LpMode::UnitOrbits,
                    GUARD,
                )
                .unwrap();
                assert!(folded <= plain, "d = {d}: {folded} > {plain}");
            }
        }
    }

    #[test]
    fn true_enumerators_are_feasible_points() {
        // The enumerator of a real code satisfies the program built at
        // the code's own minimum distance and prices the objective at
        // |C| − 1; the solved bound therefore dominates |C|.
        let z9 = z9();
        let nine = code_from_generator(&z9, 3, &gens(&z9, &[&[3, 2, 8]]), GUARD).unwrap();
        let z4 = z4();
        let four = code_from_generator(&z4, 2, &gens(&z4, &[&[1, 1]]), GUARD).unwrap();
        for code in [&nine, &four] {
            let ring = code.ring();
            let d = min_weight(code, &WeightKind::Lee).unwrap().unwrap();
            let partition = lee_partition(ring);
            for mode in [LpMode::PerDecomposition, LpMode::UnitOrbits] {
                let problem = build_lp(
                    &partition,
                    &WeightKind::Lee,
                    code.length() as u64,
                    &d,
                    mode,
                    GUARD,
                )
                .unwrap();
                let point = enumerator_assignment(&problem, code, &partition).unwrap();
                assert!(satisfies(&problem, &point));
                assert_eq!(dot(&problem.objective, &point), big(code.size() - 1));
                let bound = BigRational::one() + solve_lp(&problem).unwrap().value;
                assert!(bound >= big(code.size()));
            }
        }

        // Base-field orbits with Hamming weight over 𝔽₈; orbit folding
        // is refused there.
        let f8 = Ring::new(2, 3, 1, None).unwrap();
        let alpha = f8.element(&[0, 1, 0]).unwrap();
        let row = vec![f8.one(), alpha.clone(), f8.mul(&alpha, &alpha)];
        let cube = code_from_generator(&f8, 3, &[row], GUARD).unwrap();
        let partition = build_partition(PartitionKind::SubfieldOrbits, &f8).unwrap();
        let d = min_weight(&cube, &WeightKind::Hamming).unwrap().unwrap();
        assert_eq!(d, rat(3));
        let problem = build_lp(
            &partition,
            &WeightKind::Hamming,
            3,
            &d,
            LpMode::PerDecomposition,
            GUARD,
        )
        .unwrap();
        let point = enumerator_assignment(&problem, &cube, &partition).unwrap();
        assert!(satisfies(&problem, &point));
        assert!(matches!(
            build_lp(
                &partition,
                &WeightKind::Hamming,
                3,
                &d,
                LpMode::UnitOrbits,
                GUARD
            ),
            Err(Error::IncompatiblePartition(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn random_codes_never_beat_the_bound(
            ring_pick in 0usize..2,
            seeds in proptest::collection::vec(0u64..256, 1..=2),
        ) {
            let ring = if ring_pick == 0 { z4() } else { z5() };
            let rows: Vec<Vec<Element>> = seeds
                .iter()
                .map(|s| (0..2).map(|i| ring.decode((s >> (8 * i)) % ring.size())).collect())
                .collect();
            let code = code_from_generator(&ring, 2, &rows, GUARD).unwrap();
            if let Some(d) = min_weight(&code, &WeightKind::Lee).unwrap() {
                for mode in [LpMode::PerDecomposition, LpMode::UnitOrbits] {
                    let bound = lp_bound(&ring, &WeightKind::Lee, 2, &d, mode, GUARD).unwrap();
                    prop_assert!(bound >= big(code.size()));
                }
            }
        }
    }
}
