//! Brute-force evaluators that never touch the structure constants of `B`:
//! tuple counts in `N` for closed surfaces, integer matrix traces on `V_X` for
//! surfaces with boundary, and chain counts in `X^n` for the T-tensor.

use num_bigint::BigInt;

use crate::action::FieldCatalog;
use crate::cardy::CardyFrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::frobenius::AlgebraElement;
use crate::group::{ConjugacyClass, FiniteGroup};
use crate::hurwitz::SurfaceSpec;
use crate::linalg::Matrix;
use crate::rational::{int, Rational};
use crate::report::{first_failure, Report};

pub const DEFAULT_TUPLE_BOUND: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: Rational,
    /// Group tuples, point chains, or integer matrix products, depending on
    /// the oracle.
    pub tuples_examined: u64,
}

fn per_group(count: u64, n: usize) -> Rational {
    Rational::new(BigInt::from(count), BigInt::from(n))
}

/// Counts choices, one per slot, whose contributions multiply to `e`.
fn count_identity_products(group: &FiniteGroup, slots: &[Vec<usize>], bound: u64) -> Result<(u64, u64)> {
    let total = slots.iter().try_fold(1u64, |acc, s| acc.checked_mul(s.len() as u64));
    let total = match total {
        Some(t) if t <= bound => t,
        _ => return Err(Error::Resource(format!("enumeration exceeds the tuple bound {bound}"))),
    };
    fn walk(group: &FiniteGroup, slots: &[Vec<usize>], acc: usize) -> u64 {
        match slots.split_first() {
            None => u64::from(acc == group.identity()),
            Some((last, [])) => last.iter().filter(|&&x| group.mul(acc, x) == group.identity()).count() as u64,
            Some((first, rest)) => first.iter().map(|&x| walk(group, rest, group.mul(acc, x))).sum(),
        }
    }
    Ok((walk(group, slots, group.identity()), total))
}

/// `(1/|N|) #{(a_i ∈ α_i, x_j, y_j) : a_1⋯a_m [x_1,y_1]⋯[x_g,y_g] = e}`.
pub fn closed_orientable_oracle(n: &FiniteGroup, g: u32, classes: &[&ConjugacyClass], bound: u64) -> Result<OracleResult> {
    let mut slots: Vec<Vec<usize>> = classes.iter().map(|c| c.members.clone()).collect();
    if g > 0 {
        let commutators: Vec<usize> = n.elements().flat_map(|x| n.elements().map(move |y| (x, y))).map(|(x, y)| n.commutator(x, y)).collect();
        slots.extend(std::iter::repeat_n(commutators, g as usize));
    }
    let (count, tuples) = count_identity_products(n, &slots, bound)?;
    Ok(OracleResult { value: per_group(count, n.order()), tuples_examined: tuples })
}

/// `(1/|N|) #{(a_i ∈ α_i, x_j) : a_1⋯a_m x_1²⋯x_{2g}² = e}`.
pub fn closed_nonorientable_oracle(n: &FiniteGroup, two_g: u32, classes: &[&ConjugacyClass], bound: u64) -> Result<OracleResult> {
    if two_g == 0 {
        return Err(Error::input("non-orientable oracle needs 2g ≥ 1"));
    }
    let squares: Vec<usize> = n.elements().map(|x| n.mul(x, x)).collect();
    let mut slots: Vec<Vec<usize>> = classes.iter().map(|c| c.members.clone()).collect();
    slots.extend(std::iter::repeat_n(squares, two_g as usize));
    let (count, tuples) = count_identity_products(n, &slots, bound)?;
    Ok(OracleResult { value: per_group(count, n.order()), tuples_examined: tuples })
}

type BigMatrix = Matrix<BigInt>;

fn widen(m: &Matrix<i64>) -> BigMatrix {
    m.map(|&x| BigInt::from(x))
}

fn sum_matrices(dim: usize, items: impl IntoIterator<Item = BigMatrix>) -> BigMatrix {
    items.into_iter().fold(BigMatrix::zeros(dim, dim), |acc, m| acc.add(&m))
}

/// `(1/|N|) tr(ρ(E_{α_1})⋯ρ(handles)·ν(P_1)·W_2⋯W_s)` with
/// `W_i = Σ_β |Aut β| ν(β) ν(P_i) ν(β*)`, every factor built from permutation
/// and orbit-indicator matrices.
pub fn trace_oracle(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec) -> Result<OracleResult> {
    if spec.boundary.is_empty() {
        return Err(Error::input("trace oracle needs at least one boundary contour"));
    }
    let resolved = spec.resolve(&h.catalog)?;
    let reps = &h.reps;
    let n = h.catalog.group();
    let dim = reps.dimension;

    let mut factors: Vec<BigMatrix> = resolved.interior.iter().map(|&a| widen(&reps.class_sums[a])).collect();
    if spec.orientable {
        let k_a = sum_matrices(
            dim,
            n.elements().flat_map(|x| n.elements().map(move |y| (x, y))).map(|(x, y)| widen(&reps.rho[n.commutator(x, y)])),
        );
        factors.extend(std::iter::repeat_n(k_a, (spec.twice_genus / 2) as usize));
    } else {
        let u = sum_matrices(dim, n.elements().map(|x| widen(&reps.rho[n.mul(x, x)])));
        factors.extend(std::iter::repeat_n(u, spec.twice_genus as usize));
    }
    let nu = |b: usize| widen(&reps.nu[b]);
    let word = |contour: &[usize]| contour.iter().skip(1).fold(nu(contour[0]), |acc, &b| acc.matmul(&nu(b)));
    let mut multiplications = 0u64;
    for (i, contour) in resolved.boundary.iter().enumerate() {
        if i == 0 {
            factors.push(word(contour));
            continue;
        }
        let inner = word(contour);
        let wrapped = sum_matrices(
            dim,
            h.catalog.boundary.iter().enumerate().map(|(j, beta)| {
                multiplications += 2;
                nu(j).matmul(&inner).matmul(&nu(beta.star)).map(|x| x * BigInt::from(beta.aut_order))
            }),
        );
        factors.push(wrapped);
    }
    let count = factors.len() as u64 + multiplications;
    let product = factors.iter().skip(1).fold(factors[0].clone(), |acc, m| acc.matmul(m));
    Ok(OracleResult {
        value: Rational::new(product.trace(), BigInt::from(n.order())),
        tuples_examined: count,
    })
}

/// `#{(x_1..x_n) ∈ X^n : (x_i, x_{i+1}) ∈ β_i cyclically} / |N|`.
pub fn t_tensor_oracle(catalog: &FieldCatalog, betas: &[usize]) -> Result<OracleResult> {
    if betas.is_empty() {
        return Err(Error::input("T-tensor needs at least one field"));
    }
    let npts = catalog.nset.len();
    let n = betas.len();
    let mut point = vec![0usize; n];
    let mut count = 0u64;
    let mut visited = 0u64;
    loop {
        visited += 1;
        if (0..n).all(|i| catalog.orbit_of(point[i], point[(i + 1) % n]) == betas[i]) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            point[i] += 1;
            if point[i] < npts {
                break;
            }
            point[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(OracleResult { value: per_group(count, catalog.group().order()), tuples_examined: visited })
}

/// The brute-force oracle matching the shape of the spec.
pub fn oracle_for_spec(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec, bound: u64) -> Result<OracleResult> {
    let resolved = spec.resolve(&h.catalog)?;
    if !spec.boundary.is_empty() {
        return trace_oracle(h, spec);
    }
    let classes: Vec<&ConjugacyClass> = resolved.interior.iter().map(|&a| &h.catalog.interior[a].class).collect();
    let n = h.catalog.group();
    if spec.orientable {
        closed_orientable_oracle(n, spec.twice_genus / 2, &classes, bound)
    } else {
        closed_nonorientable_oracle(n, spec.twice_genus, &classes, bound)
    }
}

/// Checks that the stored `K_A` and `U` equal `Σ_{x,y} [x,y]` and `Σ_x x²`
/// in the group algebra.
pub fn preliminary_check(h: &CardyFrobeniusAlgebra) -> Report {
    let n = h.catalog.group();
    let classes = &h.catalog.interior;
    let mut commutators = vec![0i64; n.order()];
    let mut squares = vec![0i64; n.order()];
    for x in n.elements() {
        squares[n.mul(x, x)] += 1;
        for y in n.elements() {
            commutators[n.commutator(x, y)] += 1;
        }
    }
    let as_class_sums = |counts: &[i64]| -> std::result::Result<AlgebraElement, String> {
        for x in n.elements() {
            if counts[x] != counts[classes[h.catalog.class_of(x)].class.representative] {
                return Err(format!("not constant on the class of {}", n.name(x)));
            }
        }
        Ok(AlgebraElement::from_coeffs(classes.iter().map(|c| int(counts[c.class.representative])).collect()))
    };
    let mut report = Report::new();
    report.record(
        "k_a_commutator_sum",
        as_class_sums(&commutators).and_then(|k| if k == h.k_a { Ok(()) } else { Err("K_A ≠ Σ [x,y]".into()) }),
    );
    report.record(
        "u_square_sum",
        as_class_sums(&squares).and_then(|u| if u == h.u { Ok(()) } else { Err("U ≠ Σ x²".into()) }),
    );
    report
}

/// Compares `l_B(β_1⋯β_n)` with the T-tensor count for every cyclic list of
/// length up to `max_len`.
pub fn t_tensor_check(h: &CardyFrobeniusAlgebra, max_len: usize) -> Result<Report> {
    let dim = h.b.dim();
    let mut report = Report::new();
    for len in 1..=max_len {
        let total = (dim as u64).checked_pow(len as u32).unwrap_or(u64::MAX);
        if total > DEFAULT_TUPLE_BOUND {
            return Err(Error::Resource(format!("{total} field lists of length {len}")));
        }
        let outcome = first_failure(0..total, |mut code| {
            let mut betas = Vec::with_capacity(len);
            for _ in 0..len {
                betas.push((code % dim as u64) as usize);
                code /= dim as u64;
            }
            let product = betas.iter().fold(h.b.unit().clone(), |acc, &b| h.b.mul(&acc, &h.b.basis_element(b)));
            let lhs = h.b.apply_form(&product);
            let rhs = t_tensor_oracle(&h.catalog, &betas).map_err(|e| e.to_string())?.value;
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("{betas:?}: {lhs} ≠ {rhs}"))
            }
        });
        report.record(format!("t_tensor[{len}]"), outcome);
    }
    Ok(report)
}
