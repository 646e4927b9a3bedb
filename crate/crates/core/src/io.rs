//! JSON documents in and out. Rationals travel as canonical strings.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::action::{ConjugationAction, FieldCatalog};
use crate::cardy::CardyFrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::frobenius::{AlgebraElement, EquippedFrobeniusAlgebra};
use crate::group::{build_group, FiniteGroup, Subgroup};
use crate::hurwitz::SurfaceSpec;
use crate::rational::{self, format, Rational};

/// Deserializes `text`, reporting the JSON path of the first offending node.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Parse { path: e.path().to_string(), message: e.inner().to_string() })
}

fn parse_value<T: DeserializeOwned>(value: Value, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let inner = e.path().to_string();
        let path = match (prefix.is_empty(), inner.as_str()) {
            (true, _) => inner.clone(),
            (false, ".") => prefix.to_string(),
            (false, _) => format!("{prefix}.{inner}"),
        };
        Error::Parse { path, message: e.inner().to_string() }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDocument {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub k_generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct GroupInput {
    pub group: FiniteGroup,
    pub k: Subgroup,
    pub digest: String,
}

impl GroupDocument {
    /// Hex SHA-256 of the canonical serialization.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("group document serializes");
        format!("{:x}", Sha256::digest(canonical.as_bytes()))
    }

    pub fn build(&self, order_bound: usize) -> Result<GroupInput> {
        let group = build_group(self.degree, &self.generators, order_bound)?;
        let k = subgroup_from_generators(&group, &self.k_generators)?;
        Ok(GroupInput { group, k, digest: self.digest() })
    }
}

/// The subgroup generated by permutations, each of which must lie in `group`.
pub fn subgroup_from_generators(group: &FiniteGroup, generators: &[Vec<usize>]) -> Result<Subgroup> {
    let elements = generators
        .iter()
        .enumerate()
        .map(|(i, p)| {
            group
                .element_of_permutation(p)
                .ok_or_else(|| Error::input(format!("generator {i} {p:?} is not an element of the group")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subgroup::generated_by(group, &elements))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Genus {
    Integer(u64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceDocument {
    orientable: bool,
    genus: Genus,
    #[serde(default)]
    interior: Vec<String>,
    #[serde(default)]
    boundary: Vec<Vec<String>>,
}

impl SurfaceDocument {
    fn into_spec(self, prefix: &str) -> Result<SurfaceSpec> {
        let genus = match &self.genus {
            Genus::Integer(n) => Rational::from_integer((*n).into()),
            Genus::Text(s) => rational::parse(s).map_err(|e| Error::Parse {
                path: format!("{prefix}genus"),
                message: e.to_string(),
            })?,
        };
        SurfaceSpec::with_genus(self.orientable, &genus, self.interior, self.boundary)
    }
}

/// One surface object, or an array of them describing a disconnected surface.
pub fn parse_surfaces(text: &str) -> Result<Vec<SurfaceSpec>> {
    let value: Value = parse_json(text)?;
    match value {
        Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, item)| {
                let prefix = format!("[{i}]");
                parse_value::<SurfaceDocument>(item, &prefix)?.into_spec(&format!("{prefix}."))
            })
            .collect(),
        other => Ok(vec![parse_value::<SurfaceDocument>(other, "")?.into_spec("")?]),
    }
}

pub fn surface_json(spec: &SurfaceSpec) -> Value {
    json!({
        "orientable": spec.orientable,
        "genus": format(&spec.genus()),
        "interior": spec.interior,
        "boundary": spec.boundary,
    })
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format(q))
}

/// Nonzero coefficients keyed by basis label.
pub fn element_json(alg: &EquippedFrobeniusAlgebra, x: &AlgebraElement) -> Value {
    let mut map = Map::new();
    for (label, c) in alg.basis_labels().iter().zip(x.coeffs()) {
        if !num_traits::Zero::is_zero(c) {
            map.insert(label.clone(), rational_json(c));
        }
    }
    Value::Object(map)
}

pub fn catalog_json(catalog: &FieldCatalog) -> Value {
    let group = catalog.group();
    let interior: Vec<Value> = catalog
        .interior
        .iter()
        .map(|f| {
            json!({
                "label": f.label,
                "representative": group.name(f.class.representative),
                "class_size": f.class.size(),
                "aut": f.aut_order,
                "star": catalog.interior[f.star].label,
                "d": f.d_alpha,
            })
        })
        .collect();
    let boundary: Vec<Value> = catalog
        .boundary
        .iter()
        .map(|f| {
            json!({
                "label": f.label,
                "rep": [f.representative.0, f.representative.1],
                "orbit_size": f.orbit.len(),
                "aut": f.aut_order,
                "star": catalog.boundary[f.star].label,
            })
        })
        .collect();
    let points: Vec<&str> = (0..catalog.nset.len()).map(|x| catalog.nset.point_name(x)).collect();
    json!({
        "interior": interior,
        "boundary": boundary,
        "points": points,
        "provenance": catalog.provenance,
    })
}

pub fn algebra_json(alg: &EquippedFrobeniusAlgebra) -> Value {
    let labels = alg.basis_labels();
    let mut products = Map::new();
    for (i, li) in labels.iter().enumerate() {
        let mut row = Map::new();
        for (j, lj) in labels.iter().enumerate() {
            let terms = alg.basis_product(i, j);
            if !terms.is_empty() {
                let entry: Map<String, Value> = terms.iter().map(|(k, c)| (labels[*k].clone(), rational_json(c))).collect();
                row.insert(lj.clone(), Value::Object(entry));
            }
        }
        products.insert(li.clone(), Value::Object(row));
    }
    let form: Vec<Vec<Value>> = (0..alg.dim()).map(|i| (0..alg.dim()).map(|j| rational_json(&alg.form()[(i, j)])).collect()).collect();
    json!({
        "basis": labels,
        "structure_constants": products,
        "form": form,
        "linear_form": alg.linear_form_vector().iter().map(rational_json).collect::<Vec<_>>(),
        "involution": alg.involution().iter().map(|&i| labels[i].clone()).collect::<Vec<_>>(),
        "unit": element_json(alg, alg.unit()),
    })
}

pub fn cardy_json(h: &CardyFrobeniusAlgebra) -> Value {
    let phi: Map<String, Value> = h
        .a
        .basis_labels()
        .iter()
        .enumerate()
        .map(|(i, label)| (label.clone(), element_json(&h.b, &h.phi_apply(&h.a.basis_element(i)))))
        .collect();
    json!({
        "A": algebra_json(&h.a),
        "B": algebra_json(&h.b),
        "phi": phi,
        "U": element_json(&h.a, &h.u),
        "K_A": element_json(&h.a, &h.k_a),
        "K_B": element_json(&h.b, &h.k_b),
    })
}

pub fn info_json(input: &GroupInput, action: &ConjugationAction) -> Value {
    let mut warnings = Vec::new();
    if !action.core_free {
        warnings.push("K is not core-free in G");
    }
    json!({
        "G_order": input.group.order(),
        "K_order": input.k.order(),
        "normalizer_order": action.normalizer.order(),
        "N_order": action.quotient.group.order(),
        "X_size": action.nset.len(),
        "core_free": action.core_free,
        "warnings": warnings,
        "provenance": input.digest,
    })
}
