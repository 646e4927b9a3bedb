//! Surface types with field assignments and the closed formula for their
//! Hurwitz numbers, together with the cut identities and invariance checks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::action::FieldCatalog;
use crate::cardy::CardyFrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::frobenius::AlgebraElement;
use crate::rational::{format, int, Rational};
use crate::report::Report;

/// A connected surface with marked points.
///
/// `twice_genus` is `2g`; orientable surfaces have it even, non-orientable
/// ones count crosscaps with it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    pub orientable: bool,
    pub twice_genus: u32,
    pub interior: Vec<String>,
    pub boundary: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedSpec {
    pub interior: Vec<usize>,
    pub boundary: Vec<Vec<usize>>,
}

fn labels(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl SurfaceSpec {
    pub fn orientable(genus: u32, interior: &[&str], boundary: &[&[&str]]) -> Self {
        SurfaceSpec {
            orientable: true,
            twice_genus: 2 * genus,
            interior: labels(interior),
            boundary: boundary.iter().map(|c| labels(c)).collect(),
        }
    }

    pub fn non_orientable(twice_genus: u32, interior: &[&str], boundary: &[&[&str]]) -> Self {
        SurfaceSpec {
            orientable: false,
            twice_genus,
            interior: labels(interior),
            boundary: boundary.iter().map(|c| labels(c)).collect(),
        }
    }

    /// Builds a spec from a rational genus, rejecting values that do not fit
    /// the orientability.
    pub fn with_genus(orientable: bool, genus: &Rational, interior: Vec<String>, boundary: Vec<Vec<String>>) -> Result<Self> {
        let twice = genus * int(2);
        if !twice.is_integer() || twice < int(0) {
            return Err(Error::input(format!("genus {} is not a non-negative half-integer", format(genus))));
        }
        let twice_genus: u32 = twice
            .to_integer()
            .try_into()
            .map_err(|_| Error::input(format!("genus {} is too large", format(genus))))?;
        let spec = SurfaceSpec { orientable, twice_genus, interior, boundary };
        spec.check_genus()?;
        Ok(spec)
    }

    pub fn genus(&self) -> Rational {
        Rational::new(BigInt::from(self.twice_genus), BigInt::from(2))
    }

    pub fn s(&self) -> usize {
        self.boundary.len()
    }

    fn check_genus(&self) -> Result<()> {
        if self.orientable && !self.twice_genus.is_multiple_of(2) {
            return Err(Error::input(format!("orientable surface with genus {}", format(&self.genus()))));
        }
        if !self.orientable && self.twice_genus == 0 {
            return Err(Error::input("non-orientable surface needs at least one crosscap (2g ≥ 1)"));
        }
        Ok(())
    }

    pub fn resolve(&self, catalog: &FieldCatalog) -> Result<ResolvedSpec> {
        self.check_genus()?;
        let interior = self
            .interior
            .iter()
            .map(|l| catalog.interior_index(l).ok_or_else(|| Error::input(format!("unknown interior field {l:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let boundary = self
            .boundary
            .iter()
            .enumerate()
            .map(|(i, contour)| {
                if contour.is_empty() {
                    return Err(Error::input(format!("boundary contour {i} has no marked point")));
                }
                contour
                    .iter()
                    .map(|l| catalog.boundary_index(l).ok_or_else(|| Error::input(format!("unknown boundary field {l:?}"))))
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ResolvedSpec { interior, boundary })
    }

    /// The spec with 2g lowered by one; a closed-off last crosscap leaves an
    /// orientable genus-0 surface.
    fn without_crosscap(&self) -> Self {
        let mut out = self.clone();
        out.twice_genus -= 1;
        if out.twice_genus == 0 {
            out.orientable = true;
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct HurwitzResult {
    pub value: Rational,
    /// Intermediate elements: the `A`-side product, then the running `B`-side
    /// product after each contour.
    pub trace: Vec<(String, AlgebraElement)>,
}

/// `E_{α_1} ⋯ E_{α_m} · K_A^g` (orientable) or `· U^{2g}`.
pub fn interior_product(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec, resolved: &ResolvedSpec) -> AlgebraElement {
    let a = &h.a;
    let mut x = a.unit().clone();
    for &alpha in &resolved.interior {
        x = a.mul(&x, &a.basis_element(alpha));
    }
    let handle = if spec.orientable {
        a.pow(&h.k_a, spec.twice_genus / 2)
    } else {
        a.pow(&h.u, spec.twice_genus)
    };
    a.mul(&x, &handle)
}

/// `Σ_β |Aut β| β·x·β*`: the copairing `K_B^⊗` with its legs around `x`.
pub fn wrap_contour(h: &CardyFrobeniusAlgebra, x: &AlgebraElement) -> AlgebraElement {
    let b = &h.b;
    let mut out = AlgebraElement::zero(b.dim());
    for (i, beta) in h.catalog.boundary.iter().enumerate() {
        let left = b.mul(&b.basis_element(i), x);
        let term = b.mul(&left, &b.basis_element(beta.star));
        out = &out + &term.scale(&int(beta.aut_order as i64));
    }
    out
}

fn contour_product(h: &CardyFrobeniusAlgebra, contour: &[usize]) -> AlgebraElement {
    contour.iter().fold(h.b.unit().clone(), |acc, &beta| h.b.mul(&acc, &h.b.basis_element(beta)))
}

/// `l_B(φ(a)·P_1·K_B P_2·…·K_B P_s)` where each `K_B` is the copairing
/// `Σ |Aut β| β ⊗ β*` whose legs enclose the following contour word `P_i`;
/// for `s = 0`, `l_A(a)`.
pub fn evaluate(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec) -> Result<HurwitzResult> {
    let resolved = spec.resolve(&h.catalog)?;
    let a = interior_product(h, spec, &resolved);
    let mut trace = vec![("A".to_string(), a.clone())];
    let Some((first, rest)) = resolved.boundary.split_first() else {
        return Ok(HurwitzResult { value: h.a.apply_form(&a), trace });
    };
    let b = &h.b;
    let mut x = b.mul(&h.phi_apply(&a), &contour_product(h, first));
    trace.push(("B[0]".to_string(), x.clone()));
    for (i, contour) in rest.iter().enumerate() {
        x = b.mul(&x, &wrap_contour(h, &contour_product(h, contour)));
        trace.push((format!("B[{}]", i + 1), x.clone()));
    }
    Ok(HurwitzResult { value: b.apply_form(&x), trace })
}

pub fn evaluate_value(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec) -> Result<Rational> {
    evaluate(h, spec).map(|r| r.value)
}

/// Product over the components of a disconnected surface.
pub fn evaluate_disjoint(h: &CardyFrobeniusAlgebra, specs: &[SurfaceSpec]) -> Result<Rational> {
    specs.iter().try_fold(Rational::one(), |acc, s| Ok(acc * evaluate_value(h, s)?))
}

fn compare(report: &mut Report, axiom: &str, lhs: Rational, rhs: Rational) {
    report.record(
        axiom,
        if lhs == rhs { Ok(()) } else { Err(format!("{} ≠ {}", format(&lhs), format(&rhs))) },
    );
}

/// `H(Ω) = Σ_α |Aut α| H(Ω with one handle fewer and fields α, α*)`.
pub fn cut_check_handle(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec) -> Result<Report> {
    if !spec.orientable || spec.twice_genus < 2 {
        return Err(Error::input("handle cut needs an orientable surface of genus ≥ 1"));
    }
    let lhs = evaluate_value(h, spec)?;
    let mut rhs = Rational::zero();
    for alpha in &h.catalog.interior {
        let mut cut = spec.clone();
        cut.twice_genus -= 2;
        cut.interior.push(alpha.label.clone());
        cut.interior.push(h.catalog.interior[alpha.star].label.clone());
        rhs += int(alpha.aut_order as i64) * evaluate_value(h, &cut)?;
    }
    let mut report = Report::new();
    compare(&mut report, "handle_cut", lhs, rhs);
    Ok(report)
}

/// `H(Ω) = Σ_α d^α H(Ω with one crosscap fewer and field α)`.
pub fn cut_check_crosscap(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec) -> Result<Report> {
    if spec.orientable {
        return Err(Error::input("crosscap cut needs a non-orientable surface"));
    }
    let lhs = evaluate_value(h, spec)?;
    let mut rhs = Rational::zero();
    for alpha in &h.catalog.interior {
        if alpha.d_alpha == 0 {
            continue;
        }
        let mut cut = spec.without_crosscap();
        cut.interior.push(alpha.label.clone());
        rhs += int(alpha.d_alpha as i64) * evaluate_value(h, &cut)?;
    }
    let mut report = Report::new();
    compare(&mut report, "crosscap_cut", lhs, rhs);
    Ok(report)
}

/// For each pair of consecutive contours, `H(Ω) = Σ_β |Aut β| H(Ω′)` where
/// `Ω′` merges the two contours into `P_i β P_{i+1} β*`, with `β` and `β*`
/// at the two junction points of the cut segment.
pub fn cut_check_boundary(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec) -> Result<Report> {
    if spec.s() < 2 {
        return Err(Error::input("boundary cut needs at least two contours"));
    }
    let lhs = evaluate_value(h, spec)?;
    let mut report = Report::new();
    for i in 0..spec.s() - 1 {
        let mut rhs = Rational::zero();
        for beta in &h.catalog.boundary {
            let mut cut = spec.clone();
            let next = cut.boundary.remove(i + 1);
            let merged = &mut cut.boundary[i];
            merged.push(beta.label.clone());
            merged.extend(next);
            merged.push(h.catalog.boundary[beta.star].label.clone());
            rhs += int(beta.aut_order as i64) * evaluate_value(h, &cut)?;
        }
        compare(&mut report, &format!("boundary_cut[{i}]"), lhs.clone(), rhs);
    }
    Ok(report)
}

/// Every interior field starred; every contour reversed with its labels starred.
pub fn orientation_reversed(catalog: &FieldCatalog, spec: &SurfaceSpec) -> Result<SurfaceSpec> {
    let resolved = spec.resolve(catalog)?;
    let mut out = spec.clone();
    out.interior = resolved.interior.iter().map(|&i| catalog.interior[catalog.interior[i].star].label.clone()).collect();
    out.boundary = resolved
        .boundary
        .iter()
        .map(|c| c.iter().rev().map(|&b| catalog.boundary[catalog.boundary[b].star].label.clone()).collect())
        .collect();
    Ok(out)
}

/// Orientation reversal, cyclic rotation of every contour, and insertion of
/// the units `1_A` and `1_B`.
pub fn check_invariances(h: &CardyFrobeniusAlgebra, spec: &SurfaceSpec) -> Result<Report> {
    let base = evaluate_value(h, spec)?;
    let mut report = Report::new();

    let reversed = orientation_reversed(&h.catalog, spec)?;
    compare(&mut report, "orientation_reversal", base.clone(), evaluate_value(h, &reversed)?);

    let mut rotations = Ok(());
    for (i, contour) in spec.boundary.iter().enumerate() {
        for shift in 1..contour.len() {
            let mut rotated = spec.clone();
            rotated.boundary[i].rotate_left(shift);
            let v = evaluate_value(h, &rotated)?;
            if v != base && rotations.is_ok() {
                rotations = Err(format!("contour {i} rotated by {shift}: {} ≠ {}", format(&v), format(&base)));
            }
        }
    }
    report.record("cyclic_invariance", rotations);

    let identity_class = h.catalog.interior[0].label.clone();
    let mut with_unit = spec.clone();
    with_unit.interior.push(identity_class);
    compare(&mut report, "unit_insertion_a", base.clone(), evaluate_value(h, &with_unit)?);

    if !spec.boundary.is_empty() {
        let mut outcome = Ok(());
        for (i, contour) in spec.boundary.iter().enumerate() {
            for pos in 0..=contour.len() {
                let mut total = Rational::zero();
                for diagonal in h.catalog.boundary.iter().filter(|b| b.is_diagonal()) {
                    let mut inserted = spec.clone();
                    inserted.boundary[i].insert(pos, diagonal.label.clone());
                    total += evaluate_value(h, &inserted)?;
                }
                if total != base && outcome.is_ok() {
                    outcome = Err(format!("contour {i} position {pos}: {} ≠ {}", format(&total), format(&base)));
                }
            }
        }
        report.record("unit_insertion_b", outcome);
    }
    Ok(report)
}
