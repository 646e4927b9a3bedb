//! Finite groups on dense element indices, with the subgroup and class data
//! consumed by the field catalog.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_BOUND: usize = 2000;

/// A finite group given by its Cayley table. Element `0` is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    names: Option<Vec<String>>,
    permutations: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table (row-major,
    /// `table[a * n + b] = a·b`). Checks unit, inverses and the Latin square
    /// property; associativity is left to [`FiniteGroup::check_associative`].
    pub fn from_table(order: usize, table: Vec<u32>, names: Option<Vec<String>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::input("a group needs at least one element"));
        }
        if table.len() != order * order {
            return Err(Error::input("multiplication table has the wrong size"));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::input("multiplication table references an unknown element"));
        }
        if let Some(names) = &names {
            if names.len() != order {
                return Err(Error::input("element name list has the wrong length"));
            }
        }
        for a in 0..order {
            if table[a] as usize != a || table[a * order] as usize != a {
                return Err(Error::input("element 0 is not a two-sided identity"));
            }
        }
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let mut seen = vec![false; order];
            for &x in row {
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::input("multiplication table is not a Latin square"));
                }
            }
            let b = row.iter().position(|&x| x == 0).expect("Latin row contains the identity");
            if table[b * order + a] != 0 {
                return Err(Error::input("left and right inverses differ"));
            }
            inverse[a] = b as u32;
        }
        Ok(FiniteGroup { order, table, inverse, names, permutations: None })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(h, x), self.inv(h))
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => format!("g{a}"),
        }
    }

    /// Permutation realizing element `a`, when the group was built from permutations.
    pub fn permutation(&self, a: usize) -> Option<&[usize]> {
        self.permutations.as_ref().map(|p| p[a].as_slice())
    }

    pub fn degree(&self) -> Option<usize> {
        self.permutations.as_ref().map(|p| p[0].len())
    }

    /// Looks up the element realized by a permutation.
    pub fn element_of_permutation(&self, perm: &[usize]) -> Option<usize> {
        self.permutations.as_ref()?.iter().position(|p| p == perm)
    }

    /// Exhaustive associativity check; returns a failing triple.
    pub fn check_associative(&self) -> std::result::Result<(), (usize, usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Composition `(p ∘ q)(i) = p[q[i]]`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut i = perm[start];
        while i != start {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        let body: Vec<String> = cycle.iter().map(|i| i.to_string()).collect();
        out.push('(');
        out.push_str(&body.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn check_permutation(degree: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != degree {
        return Err(Error::input(format!(
            "permutation {perm:?} has {} images, expected {degree}",
            perm.len()
        )));
    }
    let mut seen = vec![false; degree];
    for &i in perm {
        if i >= degree || std::mem::replace(&mut seen[i], true) {
            return Err(Error::input(format!("{perm:?} is not a bijection on 0..{degree}")));
        }
    }
    Ok(())
}

/// Closes a set of permutations under composition. Elements are numbered
/// breadth-first from the identity, generators tried in input order.
pub fn build_group(degree: usize, generators: &[Vec<usize>], order_bound: usize) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::input("permutation degree must be positive"));
    }
    for g in generators {
        check_permutation(degree, g)?;
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut perms = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for g in generators {
            let next = compose(g, &perms[cur]);
            if !index.contains_key(&next) {
                if perms.len() == order_bound {
                    return Err(Error::Resource(format!(
                        "generated group exceeds the order bound {order_bound}"
                    )));
                }
                index.insert(next.clone(), perms.len());
                queue.push_back(perms.len());
                perms.push(next);
            }
        }
    }
    let n = perms.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &perms {
        for b in &perms {
            table.push(index[&compose(a, b)] as u32);
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    let mut group = FiniteGroup::from_table(n, table, Some(names))?;
    group.permutations = Some(perms);
    Ok(group)
}

/// A subgroup, stored as its sorted element indices in the parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Wraps an element set after checking identity, closure and Lagrange.
    pub fn from_elements(group: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&x| x >= group.order()) {
            return Err(Error::input("subgroup element out of range"));
        }
        let sub = Subgroup { elements };
        if !sub.contains(0) {
            return Err(Error::input("subgroup must contain the identity"));
        }
        for &a in &sub.elements {
            if !sub.contains(group.inv(a)) {
                return Err(Error::input("subgroup is not closed under inverses"));
            }
            for &b in &sub.elements {
                if !sub.contains(group.mul(a, b)) {
                    return Err(Error::input("subgroup is not closed under multiplication"));
                }
            }
        }
        if !group.order().is_multiple_of(sub.order()) {
            return Err(Error::logic("subgroup order does not divide the group order"));
        }
        Ok(sub)
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { elements: group.elements().collect() }
    }

    /// The subgroup generated by `generators`.
    pub fn generated_by(group: &FiniteGroup, generators: &[usize]) -> Self {
        let mut members = vec![false; group.order()];
        members[0] = true;
        let mut found = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = group.mul(x, g);
                if !std::mem::replace(&mut members[y], true) {
                    found.push(y);
                    queue.push_back(y);
                }
            }
        }
        found.sort_unstable();
        Subgroup { elements: found }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn conjugate_by(&self, group: &FiniteGroup, h: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&x| group.conjugate(h, x)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    pub fn is_normal_in(&self, group: &FiniteGroup, ambient: &Subgroup) -> bool {
        ambient.elements.iter().all(|&h| self.elements.iter().all(|&x| self.contains(group.conjugate(h, x))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub label: String,
    /// Order of the elements in the class.
    pub element_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes ordered by element order, then by minimal member;
/// labelled `a0, a1, ...` in that order (so `a0` is the identity class).
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<ConjugacyClass> {
    let mut assigned = vec![false; group.order()];
    let mut classes = Vec::new();
    for x in group.elements() {
        if assigned[x] {
            continue;
        }
        let mut members: Vec<usize> = group.elements().map(|h| group.conjugate(h, x)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m] = true;
        }
        classes.push(ConjugacyClass {
            representative: members[0],
            element_order: group.element_order(x),
            members,
            label: String::new(),
        });
    }
    classes.sort_by_key(|c| (c.element_order, c.representative));
    for (k, c) in classes.iter_mut().enumerate() {
        c.label = format!("a{k}");
    }
    classes
}

pub fn centralizer(group: &FiniteGroup, x: usize) -> Subgroup {
    let elements = group.elements().filter(|&h| group.mul(h, x) == group.mul(x, h)).collect();
    Subgroup { elements }
}

pub fn normalizer(group: &FiniteGroup, k: &Subgroup) -> Subgroup {
    let elements = group.elements().filter(|&h| k.conjugate_by(group, h) == *k).collect();
    Subgroup { elements }
}

/// `∩_g gKg⁻¹ = {e}`.
pub fn is_core_free(group: &FiniteGroup, k: &Subgroup) -> bool {
    k.elements()
        .iter()
        .all(|&x| x == 0 || group.elements().any(|g| !k.contains(group.conjugate(group.inv(g), x))))
}

/// A quotient `H/K` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Minimal element of each coset, indexed by coset.
    pub representatives: Vec<usize>,
    /// Coset index of every parent element lying in `H`.
    pub projection: Vec<Option<usize>>,
}

impl Quotient {
    pub fn project(&self, x: usize) -> Option<usize> {
        self.projection[x]
    }
}

/// The coset group `H/K` for `K` normal in `H`. Cosets are numbered by their
/// minimal element.
pub fn quotient_group(group: &FiniteGroup, ambient: &Subgroup, k: &Subgroup) -> Result<Quotient> {
    if !k.is_subset_of(ambient) || !k.is_normal_in(group, ambient) {
        return Err(Error::logic("quotient by a subgroup that is not normal"));
    }
    let mut projection = vec![None; group.order()];
    let mut representatives = Vec::new();
    for &h in ambient.elements() {
        if projection[h].is_some() {
            continue;
        }
        let idx = representatives.len();
        representatives.push(h);
        for &x in k.elements() {
            projection[group.mul(h, x)] = Some(idx);
        }
    }
    let n = representatives.len();
    let mut table = Vec::with_capacity(n * n);
    for &a in &representatives {
        for &b in &representatives {
            let c = projection[group.mul(a, b)].expect("ambient subgroup is closed");
            table.push(c as u32);
        }
    }
    let names = representatives
        .iter()
        .map(|&r| if k.order() == 1 { group.name(r) } else { format!("[{}]", group.name(r)) })
        .collect();
    let quotient = FiniteGroup::from_table(n, table, Some(names))?;
    Ok(Quotient { group: quotient, representatives, projection })
}

/// Every subgroup containing `k`, ordered by (order, element list).
///
/// Iterated closure: starting from `k`, each found subgroup `S` is extended
/// by every element outside it and the closure of `S ∪ {x}` recorded.
pub fn subgroups_containing(group: &FiniteGroup, k: &Subgroup) -> Vec<Subgroup> {
    let k_gens = k.elements().to_vec();
    let mut found: Vec<(Subgroup, Vec<usize>)> = vec![(k.clone(), k_gens)];
    let mut seen: HashSet<Subgroup> = HashSet::from([k.clone()]);
    let mut cursor = 0;
    while cursor < found.len() {
        let (s, gens) = found[cursor].clone();
        cursor += 1;
        let mut covered = vec![false; group.order()];
        for x in group.elements() {
            if s.contains(x) || covered[x] {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let t = Subgroup::generated_by(group, &next_gens);
            // Powers x^j with gcd(j, ord x) = 1 generate the same ⟨S, x⟩.
            let ord = group.element_order(x);
            let mut power = x;
            for j in 1..ord {
                if num_integer::gcd(j, ord) == 1 {
                    covered[power] = true;
                }
                power = group.mul(power, x);
            }
            if seen.insert(t.clone()) {
                found.push((t, next_gens));
            }
        }
    }
    let mut subgroups: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    subgroups.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    subgroups
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> FiniteGroup {
        build_group(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_BOUND).unwrap()
    }

    fn a5() -> FiniteGroup {
        build_group(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]], DEFAULT_ORDER_BOUND).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(build_group(2, &[vec![1, 0]], 100).unwrap().order(), 2);
        assert_eq!(s3().order(), 6);
        assert_eq!(a5().order(), 60);
    }

    #[test]
    fn closure_is_a_group() {
        let g = s3();
        assert!(g.check_associative().is_ok());
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(0, x), x);
        }
        assert_eq!(g.name(0), "()");
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(matches!(build_group(3, &[vec![0, 0, 1]], 100), Err(Error::Input(_))));
        assert!(matches!(build_group(3, &[vec![0, 1]], 100), Err(Error::Input(_))));
    }

    #[test]
    fn order_bound_is_enforced() {
        let err = build_group(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]], 59).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn class_sizes() {
        let z2 = build_group(2, &[vec![1, 0]], 100).unwrap();
        let sizes: Vec<usize> = conjugacy_classes(&z2).iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 1]);
        let sizes: Vec<usize> = conjugacy_classes(&s3()).iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let classes = conjugacy_classes(&a5());
        assert_eq!(classes.len(), 5);
        assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), 60);
        assert_eq!(classes[0].label, "a0");
        assert_eq!(classes[0].members, vec![0]);
    }

    #[test]
    fn centralizers() {
        let g = s3();
        let three_cycle = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        assert_eq!(centralizer(&g, three_cycle).order(), 3);
        assert_eq!(centralizer(&g, 0).order(), 6);
        for c in conjugacy_classes(&g) {
            assert_eq!(c.size() * centralizer(&g, c.representative).order(), g.order());
        }
    }

    #[test]
    fn normalizers() {
        let g = a5();
        let t = g.element_of_permutation(&[1, 0, 3, 2, 4]).unwrap();
        let k = Subgroup::generated_by(&g, &[t]);
        assert_eq!(normalizer(&g, &k).order(), 4);
        assert_eq!(normalizer(&g, &Subgroup::trivial()).order(), 60);
        let s = s3();
        let c = s.elements().find(|&x| s.element_order(x) == 3).unwrap();
        assert_eq!(normalizer(&s, &Subgroup::generated_by(&s, &[c])).order(), 6);
    }

    #[test]
    fn quotient_of_a5_normalizer() {
        let g = a5();
        let t = g.element_of_permutation(&[1, 0, 3, 2, 4]).unwrap();
        let k = Subgroup::generated_by(&g, &[t]);
        let n = normalizer(&g, &k);
        let q = quotient_group(&g, &n, &k).unwrap();
        assert_eq!(q.group.order(), 2);
        for &x in n.elements() {
            for &y in n.elements() {
                let p = q.project(g.mul(x, y)).unwrap();
                assert_eq!(p, q.group.mul(q.project(x).unwrap(), q.project(y).unwrap()));
            }
        }
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic() {
        let g = s3();
        let q = quotient_group(&g, &Subgroup::whole(&g), &Subgroup::trivial()).unwrap();
        assert_eq!(q.group.order(), 6);
        for x in g.elements() {
            assert_eq!(q.project(x), Some(x));
        }
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s3();
        let t = g.element_of_permutation(&[1, 0, 2]).unwrap();
        let k = Subgroup::generated_by(&g, &[t]);
        assert!(matches!(quotient_group(&g, &Subgroup::whole(&g), &k), Err(Error::Logic(_))));
    }

    #[test]
    fn subgroup_lattices() {
        let g = a5();
        let t = g.element_of_permutation(&[1, 0, 3, 2, 4]).unwrap();
        let k = Subgroup::generated_by(&g, &[t]);
        let orders: Vec<usize> = subgroups_containing(&g, &k).iter().map(|s| s.order()).collect();
        // K, the Klein four-group, two S3 (e.g. <(0 1 4), (0 1)(2 3)>), two D10, A4, A5
        assert_eq!(orders, vec![2, 4, 6, 6, 10, 10, 12, 60]);
        let sym3 = Subgroup::generated_by(&g, &[t, g.element_of_permutation(&[1, 4, 2, 3, 0]).unwrap()]);
        assert_eq!(sym3.order(), 6);

        let z2 = build_group(2, &[vec![1, 0]], 100).unwrap();
        assert_eq!(subgroups_containing(&z2, &Subgroup::trivial()).len(), 2);

        let orders: Vec<usize> =
            subgroups_containing(&s3(), &Subgroup::trivial()).iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn core_freeness() {
        let g = s3();
        let t = g.element_of_permutation(&[1, 0, 2]).unwrap();
        assert!(is_core_free(&g, &Subgroup::generated_by(&g, &[t])));
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        assert!(!is_core_free(&g, &Subgroup::generated_by(&g, &[c])));
        assert!(is_core_free(&g, &Subgroup::trivial()));
    }

    #[test]
    fn from_table_rejects_non_latin() {
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 1], None).is_err());
        assert!(FiniteGroup::from_table(2, vec![0, 1, 1, 0], None).is_ok());
    }

    #[test]
    fn cycle_names() {
        assert_eq!(cycle_notation(&[1, 0, 3, 2, 4]), "(0 1)(2 3)");
        assert_eq!(cycle_notation(&[1, 2, 0]), "(0 1 2)");
    }
}
