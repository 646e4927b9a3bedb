//! Finite-dimensional equipped Frobenius algebras over the rationals: a unital
//! algebra with an involutive anti-automorphism and a linear form `l` whose
//! pairing `(x, y) = l(xy)` is symmetric, invariant and nondegenerate.

use std::ops::{Add, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::Rational;
use crate::report::{first_failure, Report};

/// A sparse vector: `(basis index, coefficient)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Sums the terms of an unsorted, possibly repeating coefficient list.
pub(crate) fn combine(mut terms: Vec<(usize, Rational)>) -> SparseVec {
    terms.sort_by_key(|t| t.0);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (i, q) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += q,
            _ => out.push((i, q)),
        }
    }
    out.retain(|(_, q)| !q.is_zero());
    out
}

fn sparse_coeff(v: &SparseVec, i: usize) -> Option<&Rational> {
    v.binary_search_by_key(&i, |t| t.0).ok().map(|p| &v[p].1)
}

/// An element of an algebra, as coefficients against its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coeffs: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        AlgebraElement { coeffs: vec![Rational::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rational::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        AlgebraElement { coeffs }
    }

    fn from_sparse(dim: usize, v: &SparseVec) -> Self {
        let mut e = Self::zero(dim);
        for (i, q) in v {
            e.coeffs[*i] = q.clone();
        }
        e
    }

    fn to_sparse(&self) -> SparseVec {
        self.coeffs.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(|(i, q)| (i, q.clone())).collect()
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        AlgebraElement { coeffs: self.coeffs.iter().map(|q| q * s).collect() }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.dim(), rhs.dim(), "adding elements of different algebras");
        AlgebraElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.dim(), rhs.dim(), "subtracting elements of different algebras");
        AlgebraElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

#[derive(Clone, Debug)]
pub struct EquippedFrobeniusAlgebra {
    basis: Vec<String>,
    /// `products[i * dim + j]` is `e_i · e_j`.
    products: Vec<SparseVec>,
    unit: AlgebraElement,
    linear_form: Vec<Rational>,
    involution: Vec<usize>,
    form: Matrix<Rational>,
    form_inverse: Option<Matrix<Rational>>,
}

impl EquippedFrobeniusAlgebra {
    /// Assembles an algebra from its structure constants. Only shapes are
    /// validated here; the algebra axioms are checked by
    /// [`verify_equipped`](Self::verify_equipped).
    pub fn new(
        basis: Vec<String>,
        products: Vec<SparseVec>,
        unit: AlgebraElement,
        linear_form: Vec<Rational>,
        involution: Vec<usize>,
    ) -> Result<Self> {
        let dim = basis.len();
        if products.len() != dim * dim {
            return Err(Error::input("structure constants have the wrong shape"));
        }
        if products.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::input("structure constant references an unknown basis element"));
        }
        if unit.dim() != dim || linear_form.len() != dim || involution.len() != dim {
            return Err(Error::input("unit, linear form and involution must match the basis"));
        }
        let mut seen = vec![false; dim];
        for &i in &involution {
            if i >= dim || std::mem::replace(&mut seen[i], true) {
                return Err(Error::input("involution is not a permutation of the basis"));
            }
        }
        let products: Vec<SparseVec> = products.into_iter().map(combine).collect();
        let mut form = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                form[(i, j)] = products[i * dim + j]
                    .iter()
                    .fold(Rational::zero(), |acc, (k, c)| acc + c * &linear_form[*k]);
            }
        }
        let form_inverse = linalg::inverse(&form);
        Ok(EquippedFrobeniusAlgebra { basis, products, unit, linear_form, involution, form, form_inverse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| Error::input(format!("`{label}` is not a basis label")))
    }

    /// Builds an element from `(label, coefficient)` pairs.
    pub fn element(&self, terms: &[(&str, Rational)]) -> Result<AlgebraElement> {
        let mut e = AlgebraElement::zero(self.dim());
        for (label, q) in terms {
            let i = self.index_of(label)?;
            e.coeffs[i] += q;
        }
        Ok(e)
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.dim(), i)
    }

    pub fn unit(&self) -> &AlgebraElement {
        &self.unit
    }

    pub fn linear_form_vector(&self) -> &[Rational] {
        &self.linear_form
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    /// `e_i · e_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        sparse_coeff(self.basis_product(i, j), k).cloned().unwrap_or_else(Rational::zero)
    }

    fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.basis_product(*i, *j) {
                    terms.push((*k, &ab * c));
                }
            }
        }
        combine(terms)
    }

    /// Exact product; errors if either operand belongs to another algebra.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.dim() != self.dim() || y.dim() != self.dim() {
            return Err(Error::input("operand is not an element of this algebra"));
        }
        Ok(self.mul(x, y))
    }

    /// Product of elements known to belong to this algebra.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        assert!(x.dim() == self.dim() && y.dim() == self.dim(), "operand dimension mismatch");
        AlgebraElement::from_sparse(self.dim(), &self.mul_sparse(&x.to_sparse(), &y.to_sparse()))
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a AlgebraElement>) -> AlgebraElement {
        factors.into_iter().fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, x: &AlgebraElement, n: u32) -> AlgebraElement {
        (0..n).fold(self.unit.clone(), |acc, _| self.mul(&acc, x))
    }

    /// The linear form `l`.
    pub fn apply_form(&self, x: &AlgebraElement) -> Rational {
        x.coeffs.iter().zip(&self.linear_form).fold(Rational::zero(), |acc, (a, l)| acc + a * l)
    }

    /// `(x, y) = l(xy)`.
    pub fn pairing(&self, x: &AlgebraElement, y: &AlgebraElement) -> Rational {
        self.apply_form(&self.mul(x, y))
    }

    pub fn star(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.dim());
        for (i, q) in x.coeffs.iter().enumerate() {
            out.coeffs[self.involution[i]] = q.clone();
        }
        out
    }

    /// Gram matrix `F[i][j] = (e_i, e_j)`.
    pub fn form(&self) -> &Matrix<Rational> {
        &self.form
    }

    pub fn form_inverse(&self) -> Option<&Matrix<Rational>> {
        self.form_inverse.as_ref()
    }

    /// `F*[i][j] = (e_i, e_j*)`.
    pub fn twisted_form(&self) -> Matrix<Rational> {
        let dim = self.dim();
        let mut t = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                t[(i, j)] = self.form[(i, self.involution[j])].clone();
            }
        }
        t
    }

    fn contract(&self, inverse: &Matrix<Rational>) -> AlgebraElement {
        let dim = self.dim();
        let mut terms = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let f = &inverse[(i, j)];
                if f.is_zero() {
                    continue;
                }
                for (k, c) in self.basis_product(i, j) {
                    terms.push((*k, f * c));
                }
            }
        }
        AlgebraElement::from_sparse(dim, &combine(terms))
    }

    /// `K = Σ F^{ij} e_i e_j`.
    pub fn casimir(&self) -> Result<AlgebraElement> {
        let inv = self.form_inverse.as_ref().ok_or_else(|| Error::logic("bilinear form is degenerate"))?;
        Ok(self.contract(inv))
    }

    /// `K* = Σ (F*)^{ij} e_i e_j`.
    pub fn twisted_casimir(&self) -> Result<AlgebraElement> {
        let inv = linalg::inverse(&self.twisted_form())
            .ok_or_else(|| Error::logic("twisted bilinear form is degenerate"))?;
        Ok(self.contract(&inv))
    }

    pub fn is_central(&self, x: &AlgebraElement) -> bool {
        (0..self.dim()).all(|j| {
            let e = self.basis_element(j);
            self.mul(x, &e) == self.mul(&e, x)
        })
    }

    pub fn is_commutative(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Gram matrix of `tr(L_x L_y)` on the regular representation.
    pub fn regular_trace_form(&self) -> Matrix<Rational> {
        let dim = self.dim();
        let mut t = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                // tr(L_i L_j) = Σ_k Σ_m c_{jk}^m c_{im}^k
                let mut acc = Rational::zero();
                for k in 0..dim {
                    for (m, c) in self.basis_product(j, k) {
                        if let Some(d) = sparse_coeff(self.basis_product(i, *m), k) {
                            acc += c * d;
                        }
                    }
                }
                t[(i, j)] = acc;
            }
        }
        t
    }

    /// Over a field of characteristic zero the algebra is semisimple iff
    /// the regular trace form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        !linalg::determinant(&self.regular_trace_form()).is_zero()
    }

    /// Dimension of the center, as the kernel of `x ↦ (x e_j − e_j x)_j`.
    pub fn center_dimension(&self) -> usize {
        let dim = self.dim();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for j in 0..dim {
            for k in 0..dim {
                let row: Vec<Rational> = (0..dim)
                    .map(|i| self.structure_constant(i, j, k) - self.structure_constant(j, i, k))
                    .collect();
                if row.iter().any(|q| !q.is_zero()) && !rows.contains(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return dim;
        }
        let m = Matrix::from_vec(rows.len(), dim, rows.into_iter().flatten().collect());
        dim - linalg::rank(&m)
    }

    /// The same algebra with basis index `p` holding old basis element `perm[p]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let dim = self.dim();
        let mut position = vec![usize::MAX; dim];
        for (p, &old) in perm.iter().enumerate() {
            if old >= dim || position[old] != usize::MAX {
                return Err(Error::input("not a permutation of the basis"));
            }
            position[old] = p;
        }
        if perm.len() != dim {
            return Err(Error::input("not a permutation of the basis"));
        }
        let relabel = |v: &SparseVec| -> SparseVec { combine(v.iter().map(|(k, c)| (position[*k], c.clone())).collect()) };
        let mut products = Vec::with_capacity(dim * dim);
        for p in 0..dim {
            for q in 0..dim {
                products.push(relabel(self.basis_product(perm[p], perm[q])));
            }
        }
        Self::new(
            perm.iter().map(|&o| self.basis[o].clone()).collect(),
            products,
            AlgebraElement::from_coeffs(perm.iter().map(|&o| self.unit.coeffs[o].clone()).collect()),
            perm.iter().map(|&o| self.linear_form[o].clone()).collect(),
            perm.iter().map(|&o| position[self.involution[o]]).collect(),
        )
    }

    /// Checks every equipped-Frobenius axiom on basis elements.
    pub fn verify_equipped(&self) -> Report {
        let dim = self.dim();
        let mut report = Report::new();

        report.record(
            "associativity",
            first_failure(0..dim * dim * dim, |t| {
                let (i, j, k) = (t / (dim * dim), (t / dim) % dim, t % dim);
                let left = self.mul_sparse(self.basis_product(i, j), &vec![(k, Rational::one())]);
                let right = self.mul_sparse(&vec![(i, Rational::one())], self.basis_product(j, k));
                if left == right {
                    Ok(())
                } else {
                    Err(format!("({}, {}, {})", self.basis[i], self.basis[j], self.basis[k]))
                }
            }),
        );

        let unit = self.unit.to_sparse();
        report.record(
            "unit",
            first_failure(0..dim, |i| {
                let e = vec![(i, Rational::one())];
                if self.mul_sparse(&unit, &e) == e && self.mul_sparse(&e, &unit) == e {
                    Ok(())
                } else {
                    Err(self.basis[i].clone())
                }
            }),
        );

        report.record(
            "form_symmetric",
            first_failure((0..dim).flat_map(|i| (0..i).map(move |j| (i, j))), |(i, j)| {
                if self.form[(i, j)] == self.form[(j, i)] {
                    Ok(())
                } else {
                    Err(format!("({}, {})", self.basis[i], self.basis[j]))
                }
            }),
        );

        report.record(
            "form_nondegenerate",
            if self.form_inverse.is_some() { Ok(()) } else { Err("singular Gram matrix".into()) },
        );

        report.record(
            "form_invariant",
            first_failure(0..dim * dim * dim, |t| {
                let (i, j, k) = (t / (dim * dim), (t / dim) % dim, t % dim);
                let left = self.basis_product(i, j).iter().fold(Rational::zero(), |a, (m, c)| a + c * &self.form[(*m, k)]);
                let right = self.basis_product(j, k).iter().fold(Rational::zero(), |a, (m, c)| a + c * &self.form[(i, *m)]);
                if left == right {
                    Ok(())
                } else {
                    Err(format!("({}, {}, {})", self.basis[i], self.basis[j], self.basis[k]))
                }
            }),
        );

        report.record(
            "involution_involutive",
            first_failure(0..dim, |i| {
                if self.involution[self.involution[i]] == i {
                    Ok(())
                } else {
                    Err(self.basis[i].clone())
                }
            }),
        );

        report.record(
            "involution_anti_automorphism",
            first_failure(0..dim * dim, |t| {
                let (i, j) = (t / dim, t % dim);
                let starred: SparseVec =
                    combine(self.basis_product(i, j).iter().map(|(k, c)| (self.involution[*k], c.clone())).collect());
                if &starred == self.basis_product(self.involution[j], self.involution[i]) {
                    Ok(())
                } else {
                    Err(format!("({}, {})", self.basis[i], self.basis[j]))
                }
            }),
        );

        report.record(
            "form_star_invariant",
            first_failure(0..dim, |i| {
                if self.linear_form[i] == self.linear_form[self.involution[i]] {
                    Ok(())
                } else {
                    Err(self.basis[i].clone())
                }
            }),
        );

        report
    }
}
