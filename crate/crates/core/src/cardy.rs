//! The Cardy-Frobenius algebra `H_{N:X} = A ⊕ B` of a group `N` acting on a
//! finite set `X`.
//!
//! `A` is the center of the group algebra of `N` in the class-sum basis, with
//! linear form `l_A(x) = coeff_e(x) / |N|`. `B` has one basis element per
//! `N`-orbit on `X × X`; its product is read off the cyclic triple counts
//! through the inverse of the pairing `(β, γ)_B = δ_{β,γ*} / |Aut β|`.
//! `φ: A → B` is obtained by matching the permutation representation of `A`
//! on `V_X` against the orbit-indicator matrices of `B`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::action::{build_catalog, coset_nset, ConjugationAction, FieldCatalog};
use crate::error::{Error, Result};
use crate::frobenius::{AlgebraElement, EquippedFrobeniusAlgebra, SparseVec};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{self, Matrix};
use crate::rational::{int, Rational};
use crate::report::{first_failure, Report};

pub type IntMatrix = Matrix<i64>;

/// Matrices of `N`, of the class sums `E_α`, and of the orbit indicators `β`
/// acting on `V_X`.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub dimension: usize,
    /// `ρ(n)` with `ρ(n) e_x = e_{n(x)}`.
    pub rho: Vec<IntMatrix>,
    /// `ρ(E_α) = Σ_{x ∈ X, g ∈ α} E_{g(x), x}`.
    pub class_sums: Vec<IntMatrix>,
    /// `ν(β) = Σ_{(x1, x2) ∈ β} E_{x1, x2}`.
    pub nu: Vec<IntMatrix>,
}

fn rat(n: usize) -> Rational {
    int(n as i64)
}

pub fn build_a(catalog: &FieldCatalog) -> Result<EquippedFrobeniusAlgebra> {
    let group = catalog.group();
    let classes = &catalog.interior;
    let dim = classes.len();
    let mut products = Vec::with_capacity(dim * dim);
    for alpha in classes {
        for beta in classes {
            let mut tally = vec![0usize; dim];
            for &a in &alpha.class.members {
                for &b in &beta.class.members {
                    tally[catalog.class_of(group.mul(a, b))] += 1;
                }
            }
            let mut v: SparseVec = Vec::new();
            for (gamma, &t) in tally.iter().enumerate() {
                if t > 0 {
                    let size = classes[gamma].class.size();
                    if t % size != 0 {
                        return Err(Error::logic("class sum product is not a combination of class sums"));
                    }
                    v.push((gamma, rat(t / size)));
                }
            }
            products.push(v);
        }
    }
    if classes[0].class.members != [0] {
        return Err(Error::logic("first interior field is not the identity class"));
    }
    let mut linear_form = vec![Rational::zero(); dim];
    linear_form[0] = Rational::new(BigInt::one(), BigInt::from(group.order()));
    EquippedFrobeniusAlgebra::new(
        classes.iter().map(|f| f.label.clone()).collect(),
        products,
        AlgebraElement::basis(dim, 0),
        linear_form,
        classes.iter().map(|f| f.star).collect(),
    )
}

pub fn build_b(catalog: &FieldCatalog) -> Result<EquippedFrobeniusAlgebra> {
    let n_order = catalog.group().order();
    let npts = catalog.nset.len();
    let dim = catalog.boundary.len();
    let per_group = |count: u64| Rational::new(BigInt::from(count), BigInt::from(n_order));

    // Two-point tensor: the pairing.
    let mut pairing_counts = vec![0u64; dim * dim];
    for x1 in 0..npts {
        for x2 in 0..npts {
            pairing_counts[catalog.orbit_of(x1, x2) * dim + catalog.orbit_of(x2, x1)] += 1;
        }
    }
    let pairing = Matrix::from_vec(dim, dim, pairing_counts.into_iter().map(per_group).collect());
    let pairing_inv = linalg::inverse(&pairing).ok_or_else(|| Error::logic("boundary pairing is degenerate"))?;

    // Three-point tensor T_{β1 β2 β3} = #{(x1, x2, x3) : cyclic chain} / |N|.
    let mut triple_counts: HashMap<(usize, usize, usize), u64> = HashMap::new();
    for x1 in 0..npts {
        for x2 in 0..npts {
            let b1 = catalog.orbit_of(x1, x2);
            for x3 in 0..npts {
                let key = (b1, catalog.orbit_of(x2, x3), catalog.orbit_of(x3, x1));
                *triple_counts.entry(key).or_default() += 1;
            }
        }
    }
    // (β1 β2, β3) = T  ⇒  coefficient_k(β1 β2) = Σ_{β3} T_{β1 β2 β3} F^{-1}[β3][k]
    let mut terms: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim * dim];
    let mut keys: Vec<_> = triple_counts.into_iter().collect();
    keys.sort_unstable();
    for ((b1, b2, b3), count) in keys {
        let t = per_group(count);
        for k in 0..dim {
            let f = &pairing_inv[(b3, k)];
            if !f.is_zero() {
                terms[b1 * dim + b2].push((k, &t * f));
            }
        }
    }

    let mut unit_coeffs = vec![Rational::zero(); dim];
    for (i, b) in catalog.boundary.iter().enumerate() {
        if b.is_diagonal() {
            unit_coeffs[i] = Rational::one();
        }
    }
    let unit = AlgebraElement::from_coeffs(unit_coeffs);
    // l_B(β) = (β, 1_B)_B
    let linear_form: Vec<Rational> = (0..dim)
        .map(|i| (0..dim).fold(Rational::zero(), |acc, j| acc + &pairing[(i, j)] * unit.coeff(j)))
        .collect();

    let b = EquippedFrobeniusAlgebra::new(
        catalog.boundary.iter().map(|f| f.label.clone()).collect(),
        terms,
        unit,
        linear_form,
        catalog.boundary.iter().map(|f| f.star).collect(),
    )?;
    if b.form() != &pairing {
        return Err(Error::logic("l_B(xy) does not reproduce the two-point tensor"));
    }
    for i in 0..dim {
        let e = b.basis_element(i);
        if b.mul(b.unit(), &e) != e || b.mul(&e, b.unit()) != e {
            return Err(Error::logic(format!("1_B is not a unit at {}", catalog.boundary[i].label)));
        }
    }
    Ok(b)
}

pub fn build_reps(catalog: &FieldCatalog) -> MatrixRep {
    let group = catalog.group();
    let npts = catalog.nset.len();
    let rho: Vec<IntMatrix> = group
        .elements()
        .map(|g| {
            let mut m = IntMatrix::zeros(npts, npts);
            for x in 0..npts {
                m[(catalog.nset.act(g, x), x)] = 1;
            }
            m
        })
        .collect();
    let class_sums = catalog
        .interior
        .iter()
        .map(|f| f.class.members.iter().fold(IntMatrix::zeros(npts, npts), |acc, &g| acc.add(&rho[g])))
        .collect();
    let nu = catalog
        .boundary
        .iter()
        .map(|b| {
            let mut m = IntMatrix::zeros(npts, npts);
            for &(x1, x2) in &b.orbit {
                m[(x1, x2)] = 1;
            }
            m
        })
        .collect();
    MatrixRep { dimension: npts, rho, class_sums, nu }
}

/// `φ(E_α)` is the unique `B`-element with `ν(φ(E_α)) = ρ(E_α)`; returned as
/// the `dim B × dim A` matrix whose column `α` holds `φ(E_α)`.
pub fn build_phi(catalog: &FieldCatalog, reps: &MatrixRep) -> Result<Matrix<Rational>> {
    let dim_a = catalog.interior.len();
    let dim_b = catalog.boundary.len();
    let npts = reps.dimension;
    let mut phi = Matrix::zeros(dim_b, dim_a);
    for (alpha, v) in reps.class_sums.iter().enumerate() {
        for (beta, b) in catalog.boundary.iter().enumerate() {
            let (x1, x2) = b.representative;
            phi[(beta, alpha)] = int(v[(x1, x2)]);
        }
        for x in 0..npts {
            for y in 0..npts {
                if int(v[(x, y)]) != phi[(catalog.orbit_of(x, y), alpha)] {
                    return Err(Error::logic(format!(
                        "ρ(E_{alpha}) is not constant on the orbit of ({x}, {y}); it is not in the image of ν"
                    )));
                }
            }
        }
    }
    Ok(phi)
}

/// `U = Σ_{n ∈ N} n²` in the class-sum basis.
pub fn build_u(catalog: &FieldCatalog) -> AlgebraElement {
    let group = catalog.group();
    let mut squares = vec![0usize; group.order()];
    for n in group.elements() {
        squares[group.mul(n, n)] += 1;
    }
    AlgebraElement::from_coeffs(catalog.interior.iter().map(|f| rat(squares[f.class.representative])).collect())
}

#[derive(Clone, Debug)]
pub struct CardyFrobeniusAlgebra {
    pub catalog: FieldCatalog,
    pub a: EquippedFrobeniusAlgebra,
    pub b: EquippedFrobeniusAlgebra,
    /// Column `α` is `φ(E_α)` in the `B` basis.
    pub phi: Matrix<Rational>,
    pub u: AlgebraElement,
    pub reps: MatrixRep,
    /// Casimir elements `K_A = Σ |Aut α| E_α E_α*` and `K_B = Σ |Aut β| β β*`.
    pub k_a: AlgebraElement,
    pub k_b: AlgebraElement,
}

impl CardyFrobeniusAlgebra {
    pub fn build(catalog: FieldCatalog) -> Result<Self> {
        let a = build_a(&catalog)?;
        let b = build_b(&catalog)?;
        let reps = build_reps(&catalog);
        let phi = build_phi(&catalog, &reps)?;
        let u = build_u(&catalog);
        let k_a = a.casimir()?;
        let k_b = b.casimir()?;
        Ok(CardyFrobeniusAlgebra { catalog, a, b, phi, u, reps, k_a, k_b })
    }

    /// `H_{N:X}` for `N = N_G(K)/K` acting on the subgroups containing `K`.
    pub fn from_pair(group: &FiniteGroup, k: &Subgroup) -> Result<Self> {
        let action = ConjugationAction::new(group, k)?;
        Self::build(build_catalog(action.nset)?)
    }

    pub fn n_order(&self) -> usize {
        self.catalog.group().order()
    }

    pub fn phi_apply(&self, x: &AlgebraElement) -> AlgebraElement {
        let (dim_b, dim_a) = (self.phi.rows(), self.phi.cols());
        assert_eq!(x.dim(), dim_a, "φ applied to a non-A element");
        AlgebraElement::from_coeffs(
            (0..dim_b)
                .map(|beta| (0..dim_a).fold(Rational::zero(), |acc, a| acc + &self.phi[(beta, a)] * x.coeff(a)))
                .collect(),
        )
    }

    /// The adjoint `φ*: B → A`, `(a, φ*(b))_A = (φ(a), b)_B`.
    pub fn phi_dual(&self, b: &AlgebraElement) -> Result<AlgebraElement> {
        let dim_a = self.a.dim();
        let inv = self.a.form_inverse().ok_or_else(|| Error::logic("A's form is degenerate"))?;
        let rhs: Vec<Rational> =
            (0..dim_a).map(|g| self.b.pairing(&self.phi_apply(&self.a.basis_element(g)), b)).collect();
        // F_A c = rhs with F_A symmetric
        Ok(AlgebraElement::from_coeffs(
            (0..dim_a).map(|i| (0..dim_a).fold(Rational::zero(), |acc, j| acc + &inv[(i, j)] * &rhs[j])).collect(),
        ))
    }

    /// `tr W_{x,y}` for basis elements, `W_{x,y}(z) = x z y`.
    fn cardy_trace(&self, x: usize, y: usize) -> Rational {
        let mut acc = Rational::zero();
        for k in 0..self.b.dim() {
            for (m, c) in self.b.basis_product(x, k) {
                let d = self.b.structure_constant(*m, y, k);
                if !d.is_zero() {
                    acc += c * d;
                }
            }
        }
        acc
    }

    /// Checks the Cardy-Frobenius conditions and the representation identities.
    pub fn verify_cardy_frobenius(&self) -> Report {
        let mut report = Report::new();
        let (a, b) = (&self.a, &self.b);
        let dim_a = a.dim();
        let dim_b = b.dim();
        let a_label = |i: usize| a.basis_labels()[i].clone();
        let b_label = |i: usize| b.basis_labels()[i].clone();
        let phis: Vec<AlgebraElement> = (0..dim_a).map(|i| self.phi_apply(&a.basis_element(i))).collect();

        report.record("a_commutative", if a.is_commutative() { Ok(()) } else { Err("A".into()) });

        report.record(
            "phi_homomorphism",
            first_failure((0..dim_a).flat_map(|i| (0..dim_a).map(move |j| (i, j))), |(i, j)| {
                let lhs = self.phi_apply(&a.mul(&a.basis_element(i), &a.basis_element(j)));
                if lhs == b.mul(&phis[i], &phis[j]) {
                    Ok(())
                } else {
                    Err(format!("({}, {})", a_label(i), a_label(j)))
                }
            }),
        );

        report.record(
            "phi_unit",
            if &self.phi_apply(a.unit()) == b.unit() { Ok(()) } else { Err("φ(1_A) ≠ 1_B".into()) },
        );

        report.record(
            "phi_central",
            first_failure(0..dim_a, |i| if b.is_central(&phis[i]) { Ok(()) } else { Err(a_label(i)) }),
        );

        report.record(
            "phi_star",
            first_failure(0..dim_a, |i| {
                if phis[a.involution()[i]] == b.star(&phis[i]) {
                    Ok(())
                } else {
                    Err(a_label(i))
                }
            }),
        );

        report.record(
            "u_squared_twisted_casimir",
            match a.twisted_casimir() {
                Ok(k) if a.mul(&self.u, &self.u) == k => Ok(()),
                Ok(_) => Err("U² ≠ K_A*".into()),
                Err(e) => Err(e.to_string()),
            },
        );

        report.record(
            "phi_u_twisted_casimir",
            match b.twisted_casimir() {
                Ok(k) if self.phi_apply(&self.u) == k => Ok(()),
                Ok(_) => Err("φ(U) ≠ K_B*".into()),
                Err(e) => Err(e.to_string()),
            },
        );

        report.record(
            "u_coefficients_d_alpha",
            first_failure(0..dim_a, |i| {
                let star = &self.catalog.interior[self.catalog.interior[i].star];
                if self.u.coeff(i) == &rat(star.d_alpha) {
                    Ok(())
                } else {
                    Err(a_label(i))
                }
            }),
        );

        let duals: std::result::Result<Vec<AlgebraElement>, Error> =
            (0..dim_b).map(|i| self.phi_dual(&b.basis_element(i))).collect();
        report.record(
            "cardy_condition",
            match duals {
                Err(e) => Err(e.to_string()),
                Ok(duals) => first_failure((0..dim_b).flat_map(|i| (0..dim_b).map(move |j| (i, j))), |(i, j)| {
                    let lhs = a.pairing(&duals[i], &duals[j]);
                    let rhs = self.cardy_trace(i, j);
                    if lhs == rhs {
                        Ok(())
                    } else {
                        Err(format!("({}, {}): {lhs} ≠ {rhs}", b_label(i), b_label(j)))
                    }
                }),
            },
        );

        self.verify_reps(&mut report);
        report
    }

    fn verify_reps(&self, report: &mut Report) {
        let reps = &self.reps;
        let b = &self.b;
        let group = self.catalog.group();
        let n = self.n_order();
        let dim_b = b.dim();
        let b_label = |i: usize| b.basis_labels()[i].clone();

        report.record(
            "rho_multiplicative",
            first_failure(group.elements().flat_map(|g| group.elements().map(move |h| (g, h))), |(g, h)| {
                if reps.rho[g].matmul(&reps.rho[h]) == reps.rho[group.mul(g, h)] {
                    Ok(())
                } else {
                    Err(format!("({}, {})", group.name(g), group.name(h)))
                }
            }),
        );

        report.record(
            "nu_multiplicative",
            first_failure((0..dim_b).flat_map(|i| (0..dim_b).map(move |j| (i, j))), |(i, j)| {
                let prod = reps.nu[i].matmul(&reps.nu[j]);
                let coeffs = b.basis_product(i, j);
                for x in 0..reps.dimension {
                    for y in 0..reps.dimension {
                        let beta = self.catalog.orbit_of(x, y);
                        let expected = coeffs.iter().find(|t| t.0 == beta).map(|t| t.1.clone()).unwrap_or_else(Rational::zero);
                        if int(prod[(x, y)]) != expected {
                            return Err(format!("({}, {}) at entry ({x}, {y})", b_label(i), b_label(j)));
                        }
                    }
                }
                Ok(())
            }),
        );

        report.record(
            "nu_faithful",
            first_failure(0..dim_b, |i| {
                let ones: i64 = (0..reps.dimension)
                    .flat_map(|x| (0..reps.dimension).map(move |y| (x, y)))
                    .map(|e| reps.nu[i][e])
                    .sum();
                if ones as usize == self.catalog.boundary[i].orbit.len() && ones > 0 {
                    Ok(())
                } else {
                    Err(b_label(i))
                }
            }),
        );

        report.record(
            "nu_star_transpose",
            first_failure(0..dim_b, |i| {
                if reps.nu[b.involution()[i]] == reps.nu[i].transpose() {
                    Ok(())
                } else {
                    Err(b_label(i))
                }
            }),
        );

        report.record(
            "nu_commutes_rho",
            first_failure((0..dim_b).flat_map(|i| group.elements().map(move |g| (i, g))), |(i, g)| {
                if reps.nu[i].matmul(&reps.rho[g]) == reps.rho[g].matmul(&reps.nu[i]) {
                    Ok(())
                } else {
                    Err(format!("({}, {})", b_label(i), group.name(g)))
                }
            }),
        );

        report.record(
            "burnside_dimension",
            match self.catalog.nset.burnside_pair_count() {
                Ok(count) if count == dim_b => Ok(()),
                Ok(count) => Err(format!("dim B = {dim_b}, Burnside count = {count}")),
                Err(e) => Err(e.to_string()),
            },
        );

        let per_n = |t: i64| Rational::new(BigInt::from(t), BigInt::from(n));
        report.record(
            "trace_form_identity",
            first_failure((0..dim_b).flat_map(|i| (0..dim_b).map(move |j| (i, j))), |(i, j)| {
                if b.form()[(i, j)] == per_n(reps.nu[i].matmul(&reps.nu[j]).trace()) {
                    Ok(())
                } else {
                    Err(format!("({}, {})", b_label(i), b_label(j)))
                }
            }),
        );

        report.record(
            "l_b_trace",
            first_failure(0..dim_b, |i| {
                if b.linear_form_vector()[i] == per_n(reps.nu[i].trace()) {
                    Ok(())
                } else {
                    Err(b_label(i))
                }
            }),
        );
    }
}

#[derive(Clone, Debug)]
pub struct HeckeReport {
    pub double_cosets: usize,
    pub dim_b: usize,
    pub report: Report,
}

/// Compares `B_{G:G/S}` with the Hecke algebra of `S`-bi-invariant functions:
/// orbits on pairs of cosets against double cosets `S g S`, and structure
/// constants against brute-force convolution over `G`.
pub fn hecke_check(group: &FiniteGroup, s: &Subgroup) -> Result<HeckeReport> {
    let (nset, cosets) = coset_nset(group, s)?;
    let catalog = build_catalog(nset)?;
    let b = build_b(&catalog)?;

    let mut double_of = vec![usize::MAX; group.order()];
    let mut doubles: Vec<Vec<usize>> = Vec::new();
    for x in group.elements() {
        if double_of[x] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = s
            .elements()
            .iter()
            .flat_map(|&a| s.elements().iter().map(move |&c| (a, c)))
            .map(|(a, c)| group.mul(group.mul(a, x), c))
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            double_of[m] = doubles.len();
        }
        doubles.push(members);
    }

    let mut report = Report::new();
    // (aS, bS) ↦ S a⁻¹ b S
    let mut orbit_to_double = vec![usize::MAX; catalog.boundary.len()];
    let bijection = first_failure(catalog.boundary.iter().enumerate(), |(i, beta)| {
        let mut targets: Vec<usize> = beta
            .orbit
            .iter()
            .map(|&(c1, c2)| double_of[group.mul(group.inv(cosets[c1][0]), cosets[c2][0])])
            .collect();
        targets.dedup();
        if targets.len() != 1 {
            return Err(format!("{} meets several double cosets", beta.label));
        }
        orbit_to_double[i] = targets[0];
        Ok(())
    })
    .and_then(|()| {
        let mut seen = orbit_to_double.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() == doubles.len() && orbit_to_double.len() == doubles.len() {
            Ok(())
        } else {
            Err(format!("{} orbits vs {} double cosets", orbit_to_double.len(), doubles.len()))
        }
    });
    let bijective = bijection.is_ok();
    report.record("orbits_match_double_cosets", bijection);

    if bijective {
        let mut beta_of_double = vec![0; doubles.len()];
        for (beta, &d) in orbit_to_double.iter().enumerate() {
            beta_of_double[d] = beta;
        }
        let s_order = BigInt::from(s.order());
        let nd = doubles.len();
        report.record(
            "convolution_constants",
            first_failure((0..nd * nd * nd).map(|t| (t / (nd * nd), (t / nd) % nd, t % nd)), |(d1, d2, d)| {
                let z = doubles[d][0];
                let count = doubles[d1].iter().filter(|&&y| double_of[group.mul(group.inv(y), z)] == d2).count();
                let convolution = Rational::new(BigInt::from(count), s_order.clone());
                let constant = b.structure_constant(beta_of_double[d1], beta_of_double[d2], beta_of_double[d]);
                if convolution == constant {
                    Ok(())
                } else {
                    Err(format!("(D{d1}, D{d2}; D{d}): convolution {convolution}, B {constant}"))
                }
            }),
        );
    }

    Ok(HeckeReport { double_cosets: doubles.len(), dim_b: b.dim(), report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, DEFAULT_ORDER_BOUND};
    use crate::rational::ratio;

    fn group(degree: usize, gens: &[&[usize]]) -> FiniteGroup {
        let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
        build_group(degree, &gens, DEFAULT_ORDER_BOUND).unwrap()
    }

    fn z2_h() -> CardyFrobeniusAlgebra {
        CardyFrobeniusAlgebra::from_pair(&group(2, &[&[1, 0]]), &Subgroup::trivial()).unwrap()
    }

    #[test]
    fn z2_a_form() {
        let h = z2_h();
        let f = h.a.form();
        assert_eq!(f[(0, 0)], ratio(1, 2));
        assert_eq!(f[(1, 1)], ratio(1, 2));
        assert_eq!(f[(0, 1)], int(0));
        assert_eq!(h.a.apply_form(h.a.unit()), ratio(1, 2));
    }

    #[test]
    fn a_form_is_inverse_aut_on_star_pairs() {
        let s3 = group(3, &[&[1, 0, 2], &[1, 2, 0]]);
        let h = CardyFrobeniusAlgebra::from_pair(&s3, &Subgroup::trivial()).unwrap();
        for (i, alpha) in h.catalog.interior.iter().enumerate() {
            for j in 0..h.a.dim() {
                let expected = if j == alpha.star { ratio(1, alpha.aut_order as i64) } else { int(0) };
                assert_eq!(h.a.form()[(i, j)], expected);
            }
        }
    }

    #[test]
    fn z2_b_is_matrix_units() {
        let h = z2_h();
        // b0 = (0,0), b1 = (0,1), b2 = (1,0), b3 = (1,1)
        let pair = |x: usize, y: usize| 2 * x + y;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let prod = h.b.basis_product(pair(i, j), pair(k, l));
                        if j == k {
                            assert_eq!(prod, &vec![(pair(i, l), int(1))]);
                        } else {
                            assert!(prod.is_empty());
                        }
                    }
                }
            }
        }
        assert_eq!(h.b.linear_form_vector()[0], ratio(1, 2));
        assert_eq!(h.b.linear_form_vector()[1], int(0));
    }

    #[test]
    fn z2_reps_and_phi() {
        let h = z2_h();
        let mut e01 = IntMatrix::zeros(2, 2);
        e01[(0, 1)] = 1;
        assert_eq!(h.reps.nu[1], e01);
        assert_eq!(h.reps.class_sums[1], IntMatrix::identity(2));
        let one_b = h.b.unit().clone();
        assert_eq!(h.phi_apply(&h.a.basis_element(0)), one_b);
        assert_eq!(h.phi_apply(&h.a.basis_element(1)), one_b);
    }

    #[test]
    fn u_for_small_groups() {
        let h = z2_h();
        assert_eq!(h.u, AlgebraElement::from_coeffs(vec![int(2), int(0)]));
        let z3 = CardyFrobeniusAlgebra::from_pair(&group(3, &[&[1, 2, 0]]), &Subgroup::trivial()).unwrap();
        assert_eq!(z3.u, AlgebraElement::from_coeffs(vec![int(1), int(1), int(1)]));
    }

    #[test]
    fn z2_cardy_values() {
        let h = z2_h();
        assert_eq!(h.a.mul(&h.u, &h.u), h.a.unit().scale(&int(4)));
        assert_eq!(h.a.twisted_casimir().unwrap(), h.a.unit().scale(&int(4)));
        assert_eq!(h.phi_apply(&h.u), h.b.unit().scale(&int(2)));
        assert_eq!(h.b.twisted_casimir().unwrap(), h.b.unit().scale(&int(2)));
        let d = h.phi_dual(&h.b.basis_element(0)).unwrap();
        assert_eq!(h.a.pairing(&d, &d), int(1));
        assert_eq!(h.cardy_trace(0, 0), int(1));
        let report = h.verify_cardy_frobenius();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn unit_u_breaks_the_twisted_casimir_identity() {
        let mut h = z2_h();
        h.u = h.a.unit().clone();
        let report = h.verify_cardy_frobenius();
        assert!(!report.passed("u_squared_twisted_casimir"));
    }

    #[test]
    fn s3_everything_passes() {
        let s3 = group(3, &[&[1, 0, 2], &[1, 2, 0]]);
        let t = s3.element_of_permutation(&[1, 0, 2]).unwrap();
        for k in [Subgroup::trivial(), Subgroup::generated_by(&s3, &[t])] {
            let h = CardyFrobeniusAlgebra::from_pair(&s3, &k).unwrap();
            assert!(h.a.verify_equipped().all_passed());
            assert!(h.b.verify_equipped().all_passed());
            let report = h.verify_cardy_frobenius();
            assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
            assert!(h.b.is_semisimple());
        }
    }

    #[test]
    fn hecke_small_cases() {
        let s3 = group(3, &[&[1, 0, 2], &[1, 2, 0]]);
        let t = s3.element_of_permutation(&[1, 0, 2]).unwrap();
        let r = hecke_check(&s3, &Subgroup::generated_by(&s3, &[t])).unwrap();
        assert_eq!(r.double_cosets, 2);
        assert!(r.report.all_passed(), "{:?}", r.report);

        let r = hecke_check(&s3, &Subgroup::whole(&s3)).unwrap();
        assert_eq!((r.double_cosets, r.dim_b), (1, 1));
        assert!(r.report.all_passed());

        let r = hecke_check(&s3, &Subgroup::trivial()).unwrap();
        assert_eq!((r.double_cosets, r.dim_b), (6, 6));
        assert!(r.report.all_passed());
    }
}
