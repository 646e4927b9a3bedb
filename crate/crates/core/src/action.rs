//! The action of `N = N_G(K)/K` on the subgroups containing `K`, and the
//! labelled interior/boundary field catalogs built from it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{
    centralizer, conjugacy_classes, is_core_free, normalizer, quotient_group, subgroups_containing,
    ConjugacyClass, FiniteGroup, Quotient, Subgroup,
};

/// A finite group acting on the points `0..len` on the left.
#[derive(Clone, Debug)]
pub struct NSet {
    group: FiniteGroup,
    point_names: Vec<String>,
    act: Vec<u32>,
}

impl NSet {
    /// `act[g * points + x]` is the image of point `x` under `g`.
    pub fn new(group: FiniteGroup, point_names: Vec<String>, act: Vec<u32>) -> Result<Self> {
        let n = point_names.len();
        if act.len() != group.order() * n {
            return Err(Error::input("action table has the wrong size"));
        }
        if act.iter().any(|&y| y as usize >= n) {
            return Err(Error::input("action table references an unknown point"));
        }
        let nset = NSet { group, point_names, act };
        for x in 0..n {
            if nset.act(0, x) != x {
                return Err(Error::logic("identity does not act trivially"));
            }
        }
        for g in nset.group.elements() {
            for h in nset.group.elements() {
                let gh = nset.group.mul(g, h);
                for x in 0..n {
                    if nset.act(g, nset.act(h, x)) != nset.act(gh, x) {
                        return Err(Error::logic(format!("table is not an action at ({g}, {h}, {x})")));
                    }
                }
            }
        }
        Ok(nset)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.point_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.point_names.is_empty()
    }

    pub fn point_name(&self, x: usize) -> &str {
        &self.point_names[x]
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g * self.len() + x] as usize
    }

    pub fn fixed_points(&self, g: usize) -> usize {
        (0..self.len()).filter(|&x| self.act(g, x) == x).count()
    }

    pub fn is_effective(&self) -> bool {
        self.group.elements().skip(1).all(|g| self.fixed_points(g) < self.len())
    }

    /// `(1/|N|) Σ_n fix(n)²`, the number of orbits on ordered pairs.
    pub fn burnside_pair_count(&self) -> Result<usize> {
        let total: usize = self.group.elements().map(|g| self.fixed_points(g).pow(2)).sum();
        if !total.is_multiple_of(self.group.order()) {
            return Err(Error::logic("Burnside sum is not divisible by the group order"));
        }
        Ok(total / self.group.order())
    }
}

/// Everything derived from a pair `G ⊇ K`: normalizer, quotient `N`, the
/// subgroup set `X`, and the conjugation action of `N` on `X`.
#[derive(Clone, Debug)]
pub struct ConjugationAction {
    pub k: Subgroup,
    pub normalizer: Subgroup,
    pub quotient: Quotient,
    pub subgroups: Vec<Subgroup>,
    pub core_free: bool,
    pub nset: NSet,
}

impl ConjugationAction {
    pub fn new(group: &FiniteGroup, k: &Subgroup) -> Result<Self> {
        let norm = normalizer(group, k);
        let quotient = quotient_group(group, &norm, k)?;
        let subgroups = subgroups_containing(group, k);
        let index: HashMap<&Subgroup, usize> = subgroups.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let n = quotient.group.order();
        let mut act = Vec::with_capacity(n * subgroups.len());
        for &h in &quotient.representatives {
            for s in &subgroups {
                let image = s.conjugate_by(group, h);
                let j = *index.get(&image).ok_or_else(|| Error::logic("conjugate of X left X"))?;
                act.push(j as u32);
            }
        }
        // Every element of a coset must act like its representative.
        for &h in norm.elements() {
            let c = quotient.project(h).expect("normalizer element projects");
            for (i, s) in subgroups.iter().enumerate() {
                if index[&s.conjugate_by(group, h)] != act[c * subgroups.len() + i] as usize {
                    return Err(Error::logic("conjugation does not factor through N_G(K)/K"));
                }
            }
        }
        let names = subgroups.iter().enumerate().map(|(i, s)| format!("S{i}[{}]", s.order())).collect();
        let nset = NSet::new(quotient.group.clone(), names, act)?;
        Ok(ConjugationAction {
            k: k.clone(),
            core_free: is_core_free(group, k),
            normalizer: norm,
            quotient,
            subgroups,
            nset,
        })
    }
}

/// `N_G(K)/K` acting by conjugation on the subgroups of `G` containing `K`.
pub fn conjugation_nset(group: &FiniteGroup, k: &Subgroup) -> Result<NSet> {
    Ok(ConjugationAction::new(group, k)?.nset)
}

/// `G` acting on the left cosets `G/S` by left translation. Cosets are
/// numbered by their minimal element.
pub fn coset_nset(group: &FiniteGroup, s: &Subgroup) -> Result<(NSet, Vec<Vec<usize>>)> {
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in group.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = s.elements().iter().map(|&y| group.mul(x, y)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        cosets.push(members);
    }
    let mut act = Vec::with_capacity(group.order() * cosets.len());
    for g in group.elements() {
        for c in &cosets {
            act.push(coset_of[group.mul(g, c[0])] as u32);
        }
    }
    let names = cosets.iter().map(|c| format!("{}S", group.name(c[0]))).collect();
    Ok((NSet::new(group.clone(), names, act)?, cosets))
}

#[derive(Clone, Debug)]
pub struct InteriorField {
    pub label: String,
    pub class: ConjugacyClass,
    /// `|C_N(a)|` for a representative `a`.
    pub aut_order: usize,
    /// Index of the class of inverses.
    pub star: usize,
    pub d_alpha: usize,
}

#[derive(Clone, Debug)]
pub struct BoundaryField {
    pub label: String,
    /// The `N`-orbit on `X × X`, sorted.
    pub orbit: Vec<(usize, usize)>,
    pub aut_order: usize,
    pub star: usize,
    pub representative: (usize, usize),
}

impl BoundaryField {
    /// Orbit of a pair `(S, S)`.
    pub fn is_diagonal(&self) -> bool {
        self.representative.0 == self.representative.1
    }
}

#[derive(Clone, Debug)]
pub struct FieldCatalog {
    pub interior: Vec<InteriorField>,
    pub boundary: Vec<BoundaryField>,
    pub nset: NSet,
    /// Digest of the input that produced the catalog, when known.
    pub provenance: Option<String>,
    class_of: Vec<usize>,
    orbit_of: Vec<u32>,
}

/// Number of `n ∈ N` with `n² = a⁻¹`.
pub fn d_alpha(group: &FiniteGroup, representative: usize) -> usize {
    let target = group.inv(representative);
    group.elements().filter(|&n| group.mul(n, n) == target).count()
}

pub fn build_catalog(nset: NSet) -> Result<FieldCatalog> {
    let group = nset.group();
    let classes = conjugacy_classes(group);
    let mut class_of = vec![0; group.order()];
    for (i, c) in classes.iter().enumerate() {
        for &m in &c.members {
            class_of[m] = i;
        }
    }
    let interior: Vec<InteriorField> = classes
        .into_iter()
        .map(|class| {
            let a = class.representative;
            InteriorField {
                label: class.label.clone(),
                aut_order: centralizer(group, a).order(),
                star: class_of[group.inv(a)],
                d_alpha: d_alpha(group, a),
                class,
            }
        })
        .collect();

    let npts = nset.len();
    let mut orbit_of = vec![u32::MAX; npts * npts];
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for x in 0..npts {
        for y in 0..npts {
            if orbit_of[x * npts + y] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            let mut orbit: Vec<(usize, usize)> =
                group.elements().map(|g| (nset.act(g, x), nset.act(g, y))).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &(a, b) in &orbit {
                orbit_of[a * npts + b] = id;
            }
            orbits.push(orbit);
        }
    }
    let boundary = orbits
        .into_iter()
        .enumerate()
        .map(|(k, orbit)| {
            let representative = orbit[0];
            BoundaryField {
                label: format!("b{k}"),
                aut_order: group.order() / orbit.len(),
                star: orbit_of[representative.1 * npts + representative.0] as usize,
                representative,
                orbit,
            }
        })
        .collect();
    let catalog = FieldCatalog { interior, boundary, nset, provenance: None, class_of, orbit_of };
    if catalog.boundary.len() != catalog.nset.burnside_pair_count()? {
        return Err(Error::logic("orbit count disagrees with the Burnside count"));
    }
    Ok(catalog)
}

impl FieldCatalog {
    pub fn group(&self) -> &FiniteGroup {
        self.nset.group()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn orbit_of(&self, x: usize, y: usize) -> usize {
        self.orbit_of[x * self.nset.len() + y] as usize
    }

    pub fn interior_index(&self, label: &str) -> Option<usize> {
        self.interior.iter().position(|f| f.label == label)
    }

    pub fn boundary_index(&self, label: &str) -> Option<usize> {
        self.boundary.iter().position(|f| f.label == label)
    }

    pub fn with_provenance(mut self, digest: impl Into<String>) -> Self {
        self.provenance = Some(digest.into());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, DEFAULT_ORDER_BOUND};

    fn group(degree: usize, gens: &[&[usize]]) -> FiniteGroup {
        let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
        build_group(degree, &gens, DEFAULT_ORDER_BOUND).unwrap()
    }

    fn a5_pair() -> (FiniteGroup, Subgroup) {
        let g = group(5, &[&[1, 2, 3, 4, 0], &[1, 2, 0, 3, 4]]);
        let t = g.element_of_permutation(&[1, 0, 3, 2, 4]).unwrap();
        let k = Subgroup::generated_by(&g, &[t]);
        (g, k)
    }

    #[test]
    fn a5_action_swaps_the_order_six_and_ten_subgroups() {
        let (g, k) = a5_pair();
        let action = ConjugationAction::new(&g, &k).unwrap();
        let nset = &action.nset;
        assert_eq!(nset.group().order(), 2);
        assert_eq!(nset.len(), 8);
        let moved: Vec<usize> = (0..8).filter(|&x| nset.act(1, x) != x).collect();
        let orders: Vec<usize> = moved.iter().map(|&x| action.subgroups[x].order()).collect();
        assert_eq!(orders, vec![6, 6, 10, 10]);
        assert!(action.core_free);
    }

    #[test]
    fn z2_trivial_action() {
        let g = group(2, &[&[1, 0]]);
        let nset = conjugation_nset(&g, &Subgroup::trivial()).unwrap();
        assert_eq!(nset.group().order(), 2);
        assert_eq!(nset.len(), 2);
        assert!(!nset.is_effective());
        assert_eq!(nset.fixed_points(1), 2);
    }

    #[test]
    fn s3_involution_subgroups_form_one_orbit() {
        let g = group(3, &[&[1, 0, 2], &[1, 2, 0]]);
        let action = ConjugationAction::new(&g, &Subgroup::trivial()).unwrap();
        let nset = &action.nset;
        assert_eq!(nset.group().order(), 6);
        assert_eq!(nset.len(), 6);
        // points 1, 2, 3 are the order-2 subgroups
        let orbit: std::collections::BTreeSet<usize> = nset.group().elements().map(|h| nset.act(h, 1)).collect();
        assert_eq!(orbit.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn catalog_sizes() {
        let (g, k) = a5_pair();
        let cat = build_catalog(conjugation_nset(&g, &k).unwrap()).unwrap();
        assert_eq!(cat.interior.len(), 2);
        // (8² + 4²) / 2
        assert_eq!(cat.boundary.len(), 40);

        let z2 = group(2, &[&[1, 0]]);
        let cat = build_catalog(conjugation_nset(&z2, &Subgroup::trivial()).unwrap()).unwrap();
        assert_eq!(cat.interior.len(), 2);
        assert!(cat.interior.iter().all(|f| f.aut_order == 2));
        assert_eq!(cat.boundary.len(), 4);
        assert!(cat.boundary.iter().all(|f| f.aut_order == 2));
        let reps: Vec<(usize, usize)> = cat.boundary.iter().map(|b| b.representative).collect();
        assert_eq!(reps, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(cat.boundary[1].star, 2);
    }

    #[test]
    fn z3_stars_and_d_alpha() {
        let z3 = group(3, &[&[1, 2, 0]]);
        let cat = build_catalog(conjugation_nset(&z3, &Subgroup::trivial()).unwrap()).unwrap();
        assert_eq!(cat.interior.len(), 3);
        assert_eq!(cat.interior[1].star, 2);
        assert_eq!(cat.interior[2].star, 1);
        assert_eq!(cat.interior[0].d_alpha, 1);
        assert_eq!(cat.interior[1].d_alpha, 1);
        assert_eq!(cat.interior[2].d_alpha, 1);
    }

    #[test]
    fn z2_d_alpha() {
        let z2 = group(2, &[&[1, 0]]);
        assert_eq!(d_alpha(&z2, 0), 2);
        assert_eq!(d_alpha(&z2, 1), 0);
    }

    #[test]
    fn catalog_invariants_on_s4() {
        let s4 = group(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        let cat = build_catalog(conjugation_nset(&s4, &Subgroup::trivial()).unwrap()).unwrap();
        let n = cat.group().order();
        let mut covered = 0;
        for (i, b) in cat.boundary.iter().enumerate() {
            assert_eq!(b.aut_order * b.orbit.len(), n);
            assert_eq!(cat.boundary[b.star].star, i);
            assert_eq!(cat.boundary[b.star].aut_order, b.aut_order);
            for &(x, y) in &b.orbit {
                assert_eq!(cat.orbit_of(x, y), i);
                assert!(cat.boundary[b.star].orbit.binary_search(&(y, x)).is_ok());
            }
            covered += b.orbit.len();
        }
        assert_eq!(covered, cat.nset.len().pow(2));
        let mut u_total = 0;
        for (i, a) in cat.interior.iter().enumerate() {
            assert_eq!(cat.interior[a.star].star, i);
            assert_eq!(a.aut_order * a.class.size(), n);
            assert_eq!(cat.interior[a.star].d_alpha, a.d_alpha);
            // d^α is constant on the class
            for &m in &a.class.members {
                assert_eq!(d_alpha(cat.group(), m), a.d_alpha);
            }
            u_total += cat.interior[a.star].d_alpha * a.class.size();
        }
        assert_eq!(u_total, n);
    }
}
