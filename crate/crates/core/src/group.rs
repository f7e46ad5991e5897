//! Finite groups as validated Cayley tables, plus conjugacy-class structure.
//!
//! Elements are plain indices `0..order` with the identity fixed at 0.
//! Construction either synthesizes a table (cyclic groups, direct products),
//! closes a set of permutation generators by breadth-first search, or
//! validates a user-supplied table.

use crate::{Error, Result, ORDER_CAP};
use serde::Deserialize;
use std::collections::HashMap;

/// A permutation on `{0..degree}` stored as an image vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::InvalidPermutation(format!(
                    "image vector {:?} is not a bijection",
                    images
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint cycle notation like `(1 2 3)(4 5)`, 1-based points.
    pub fn parse_cycles(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in cycle notation: {text}"
                )));
            }
            let close = rest.find(')').ok_or_else(|| {
                Error::InvalidPermutation(format!("unbalanced parenthesis: {text}"))
            })?;
            let inner = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in inner.split_whitespace() {
                let point: usize = tok.parse().map_err(|_| {
                    Error::InvalidPermutation(format!("bad point '{tok}' in {text}"))
                })?;
                if point == 0 {
                    return Err(Error::InvalidPermutation("points are 1-based".into()));
                }
                cycle.push(point - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        let degree = cycles.iter().flatten().copied().max().map_or(1, |m| m + 1);
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in &cycles {
            for (idx, &pt) in cycle.iter().enumerate() {
                if touched[pt] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeats across cycles in {text}",
                        pt + 1
                    )));
                }
                touched[pt] = true;
                images[pt] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn extend_to(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        for i in images.len()..degree {
            images.push(i);
        }
        Permutation { images }
    }

    /// Function composition: `(self.compose(q))(x) = self(q(x))`.
    pub fn compose(&self, q: &Permutation) -> Self {
        assert_eq!(self.degree(), q.degree());
        Permutation { images: q.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }
}

/// Conjugacy class of a group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub centralizer_order: usize,
}

/// A finite group on element indices `0..order` with identity 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.cayley[a][b] != self.cayley[b][a] {
                    return false;
                }
            }
        }
        true
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        if n > ORDER_CAP {
            return Err(Error::GroupTooLarge { cap: ORDER_CAP, reached: n });
        }
        let cayley: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let inverses = (0..n).map(|i| (n - i) % n).collect();
        Ok(FiniteGroup { order: n, cayley, inverses, label: format!("Z{n}") })
    }

    /// Componentwise product; element `(i, j)` gets index `i*|G2| + j`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<Self> {
        let n1 = self.order;
        let n2 = other.order;
        let n = n1 * n2;
        if n > ORDER_CAP {
            return Err(Error::GroupTooLarge { cap: ORDER_CAP, reached: n });
        }
        let idx = |i: usize, j: usize| i * n2 + j;
        let mut cayley = vec![vec![0usize; n]; n];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                for b1 in 0..n1 {
                    for b2 in 0..n2 {
                        cayley[idx(a1, a2)][idx(b1, b2)] =
                            idx(self.mul(a1, b1), other.mul(a2, b2));
                    }
                }
            }
        }
        let inverses =
            (0..n).map(|g| idx(self.inv(g / n2), other.inv(g % n2))).collect();
        Ok(FiniteGroup {
            order: n,
            cayley,
            inverses,
            label: format!("{}×{}", self.label, other.label),
        })
    }

    /// Closure of permutation generators under composition, breadth-first in
    /// the given generator order.
    pub fn from_generators(generators: &[Permutation]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidPermutation("no generators given".into()));
        }
        let degree = generators.iter().map(Permutation::degree).max().unwrap();
        let gens: Vec<Permutation> =
            generators.iter().map(|g| g.extend_to(degree)).collect();
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &gens {
                let next = current.compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= ORDER_CAP {
                        return Err(Error::GroupTooLarge {
                            cap: ORDER_CAP,
                            reached: elements.len() + 1,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        let n = elements.len();
        let mut cayley = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                cayley[a][b] = index[&elements[a].compose(&elements[b])];
            }
        }
        let label = format!("perm-group({n})");
        let g = FiniteGroup::from_table_unchecked(cayley, label)?;
        g.validate()?;
        Ok(g)
    }

    /// Validates a user-supplied Cayley table (0-based, row = left factor)
    /// and relabels the identity to index 0 if needed.
    pub fn from_cayley(table: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        if n > ORDER_CAP {
            return Err(Error::GroupTooLarge { cap: ORDER_CAP, reached: n });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::NotAGroup(format!("entry {v} out of range in row {i}")));
                }
            }
        }
        // Locate the two-sided identity.
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let table = if identity == 0 {
            table
        } else {
            // Swap labels 0 <-> identity.
            let relabel = |x: usize| {
                if x == identity {
                    0
                } else if x == 0 {
                    identity
                } else {
                    x
                }
            };
            let mut new_table = vec![vec![0usize; n]; n];
            for a in 0..n {
                for b in 0..n {
                    new_table[relabel(a)][relabel(b)] = relabel(table[a][b]);
                }
            }
            new_table
        };
        let g = FiniteGroup::from_table_unchecked(table, label.into())?;
        g.validate()?;
        Ok(g)
    }

    fn from_table_unchecked(cayley: Vec<Vec<usize>>, label: String) -> Result<Self> {
        let n = cayley.len();
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| cayley[a][b] == 0 && cayley[b][a] == 0) {
                Some(b) => inverses[a] = b,
                None => {
                    return Err(Error::NotAGroup(format!("element {a} has no two-sided inverse")))
                }
            }
        }
        Ok(FiniteGroup { order: n, cayley, inverses, label })
    }

    /// Full axiom check: identity row/column, Latin square, inverses, and
    /// exhaustive associativity (the order cap keeps this cubic scan cheap).
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.cayley[0][x] != x || self.cayley[x][0] != x {
                return Err(Error::NotAGroup(format!("index 0 is not an identity at {x}")));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let r = self.cayley[i][j];
                let c = self.cayley[j][i];
                if row_seen[r] {
                    return Err(Error::NotAGroup(format!(
                        "not a Latin square: row {i} repeats {r}"
                    )));
                }
                if col_seen[c] {
                    return Err(Error::NotAGroup(format!(
                        "not a Latin square: column {i} repeats {c}"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        for a in 0..n {
            let g = self.inverses[a];
            if self.cayley[a][g] != 0 || self.cayley[g][a] != 0 {
                return Err(Error::NotAGroup(format!("inverse table wrong at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.cayley[a][b];
                for c in 0..n {
                    if self.cayley[ab][c] != self.cayley[a][self.cayley[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at triple ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Conjugacy classes in canonical order: identity class first, then by
    /// (size, smallest member). Centralizer orders are counted directly and
    /// cross-checked against `size * centralizer = order`.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order;
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut members = Vec::new();
            let mut in_class = vec![false; n];
            for a in 0..n {
                let conj = self.mul(self.mul(a, g), self.inv(a));
                if !in_class[conj] {
                    in_class[conj] = true;
                    members.push(conj);
                }
            }
            members.sort_unstable();
            for &m in &members {
                assigned[m] = true;
            }
            let centralizer_order =
                (0..n).filter(|&a| self.mul(a, g) == self.mul(g, a)).count();
            let size = members.len();
            assert_eq!(
                size * centralizer_order,
                n,
                "class equation violated for element {g}"
            );
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
                size,
                centralizer_order,
            });
        }
        classes.sort_by_key(|c| (c.size, c.members[0]));
        classes
    }
}

/// Group definition file: exactly one of the three construction keys.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub label: Option<String>,
    pub cyclic_factors: Option<Vec<usize>>,
    pub generators: Option<Vec<String>>,
    pub cayley: Option<Vec<Vec<usize>>>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        let provided = [
            self.cyclic_factors.is_some(),
            self.generators.is_some(),
            self.cayley.is_some(),
        ]
        .iter()
        .filter(|&&p| p)
        .count();
        if provided != 1 {
            return Err(Error::InvalidSpec(
                "exactly one of cyclic_factors, generators, cayley is required".into(),
            ));
        }
        let mut group = if let Some(factors) = &self.cyclic_factors {
            if factors.is_empty() {
                return Err(Error::InvalidSpec("cyclic_factors must be nonempty".into()));
            }
            let mut g = FiniteGroup::cyclic(factors[0])?;
            for &f in &factors[1..] {
                g = g.direct_product(&FiniteGroup::cyclic(f)?)?;
            }
            g
        } else if let Some(gens) = &self.generators {
            let perms: Result<Vec<Permutation>> =
                gens.iter().map(|s| Permutation::parse_cycles(s)).collect();
            FiniteGroup::from_generators(&perms?)?
        } else {
            FiniteGroup::from_cayley(self.cayley.clone().unwrap(), "cayley-group")?
        };
        if let Some(label) = &self.label {
            group = group.with_label(label.clone());
        }
        Ok(group)
    }
}

pub fn load_group_file(path: &std::path::Path) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    GroupSpec::parse(&text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: conjugacy classes by scanning all (a, g) pairs, no dedup tricks.
    fn brute_force_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let mut sizes = Vec::new();
        let mut seen = vec![false; n];
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|a| g.mul(g.mul(a, x), g.inv(a))).collect();
            class.sort_unstable();
            class.dedup();
            for &m in &class {
                seen[m] = true;
            }
            sizes.push(class.len());
        }
        sizes.sort_unstable();
        sizes
    }

    fn sym3_generators() -> Vec<Permutation> {
        vec![
            Permutation::parse_cycles("(1 2)").unwrap(),
            Permutation::parse_cycles("(1 2 3)").unwrap(),
        ]
    }

    #[test]
    fn cyclic_edge_cases() {
        let trivial = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(trivial.order(), 1);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.cayley(), &[vec![0, 1], vec![1, 0]]);
        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::InvalidOrder)));
    }

    #[test]
    fn cyclic_six_has_six_singleton_classes() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(brute_force_class_sizes(&z6), vec![1; 6]);
        let classes = z6.conjugacy_classes();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.size == 1 && c.centralizer_order == 6));
    }

    #[test]
    fn klein_four_group() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = z2.direct_product(&z2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(brute_force_class_sizes(&v4), vec![1, 1, 1, 1]);
        let classes = v4.conjugacy_classes();
        assert!(classes.iter().all(|c| c.centralizer_order == 4));
    }

    #[test]
    fn product_with_trivial_group_is_identity_map() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        let s3 = FiniteGroup::from_generators(&sym3_generators()).unwrap();
        let prod = s3.direct_product(&z1).unwrap();
        assert_eq!(prod.cayley(), s3.cayley());
    }

    #[test]
    fn z2_times_z3_has_an_order_six_element() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let g = z2.direct_product(&z3).unwrap();
        assert_eq!(g.order(), 6);
        // Element (1,1) has index 1*3+1 = 4; oracle: repeated multiplication.
        let mut x = 4;
        let mut order = 1;
        while x != 0 {
            x = g.mul(x, 4);
            order += 1;
        }
        assert_eq!(order, 6);
        assert_eq!(g.element_order(4), 6);
    }

    #[test]
    fn sym3_from_generators() {
        let s3 = FiniteGroup::from_generators(&sym3_generators()).unwrap();
        assert_eq!(s3.order(), 6);
        let classes = s3.conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        let cents: Vec<usize> = classes.iter().map(|c| c.centralizer_order).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(cents, vec![6, 3, 2]);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let id = Permutation::identity(3);
        let g = FiniteGroup::from_generators(&[id]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn four_cycle_and_reflection_generate_dihedral_eight() {
        let gens = vec![
            Permutation::parse_cycles("(1 2 3 4)").unwrap(),
            Permutation::parse_cycles("(1 3)").unwrap(),
        ];
        let g = FiniteGroup::from_generators(&gens).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
    }

    #[test]
    fn from_cayley_accepts_z2_and_rejects_non_latin() {
        let z2 = FiniteGroup::from_cayley(vec![vec![0, 1], vec![1, 0]], "Z2").unwrap();
        assert_eq!(z2.order(), 2);
        let err = FiniteGroup::from_cayley(vec![vec![0, 1], vec![1, 1]], "bad");
        assert!(matches!(err, Err(Error::NotAGroup(_))));
    }

    #[test]
    fn from_cayley_validates_sym3_table() {
        // Build the 6x6 table of Sym(3) by composing permutations directly
        // (independent of from_generators' BFS) and feed it to from_cayley.
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        let compose = |p: &Vec<usize>, q: &Vec<usize>| -> Vec<usize> {
            q.iter().map(|&x| p[x]).collect()
        };
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| index_of(&compose(a, b))).collect())
            .collect();
        let g = FiniteGroup::from_cayley(table, "Sym(3)").unwrap();
        assert_eq!(g.conjugacy_classes().len(), 3);
        // Same class-size multiset as the generator construction.
        let via_gens = FiniteGroup::from_generators(&sym3_generators()).unwrap();
        assert_eq!(brute_force_class_sizes(&g), brute_force_class_sizes(&via_gens));
    }

    #[test]
    fn from_cayley_relabels_identity_to_zero() {
        // Z3 with the identity sitting at index 2.
        // Elements: 0=g, 1=g^2, 2=e under multiplication mod 3 shifted.
        let table = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_cayley(table, "shifted-Z3").unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn direct_product_is_associative_up_to_relabel() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let left = z2.direct_product(&z3).unwrap().direct_product(&z4).unwrap();
        let right = z2.direct_product(&z3.direct_product(&z4).unwrap()).unwrap();
        assert_eq!(left.order(), right.order());
        assert_eq!(brute_force_class_sizes(&left), brute_force_class_sizes(&right));
    }

    #[test]
    fn closure_cap_is_enforced() {
        // A 600-cycle blows past the order cap.
        let images: Vec<usize> = (0..600).map(|i| (i + 1) % 600).collect();
        let big = Permutation::from_images(images).unwrap();
        assert!(matches!(
            FiniteGroup::from_generators(&[big]),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn class_sizes_sum_to_order_and_partition() {
        for g in [
            FiniteGroup::cyclic(7).unwrap(),
            FiniteGroup::from_generators(&sym3_generators()).unwrap(),
        ] {
            let classes = g.conjugacy_classes();
            let total: usize = classes.iter().map(|c| c.size).sum();
            assert_eq!(total, g.order());
            let mut all: Vec<usize> = classes.iter().flat_map(|c| c.members.clone()).collect();
            all.sort_unstable();
            assert_eq!(all, (0..g.order()).collect::<Vec<_>>());
            for c in &classes {
                assert_eq!(c.size * c.centralizer_order, g.order());
            }
        }
    }

    #[test]
    fn group_spec_roundtrip() {
        let spec = GroupSpec::parse("cyclic_factors = [2, 2]\nlabel = \"V4\"").unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.label(), "V4");

        let spec = GroupSpec::parse("generators = [\"(1 2)\", \"(1 2 3)\"]").unwrap();
        assert_eq!(spec.build().unwrap().order(), 6);

        let spec = GroupSpec::parse("cayley = [[0, 1], [1, 0]]").unwrap();
        assert_eq!(spec.build().unwrap().order(), 2);

        let double = GroupSpec::parse("cyclic_factors = [2]\ncayley = [[0]]").unwrap();
        assert!(matches!(double.build(), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn bad_cycle_notation_is_rejected() {
        assert!(Permutation::parse_cycles("(1 2").is_err());
        assert!(Permutation::parse_cycles("(0 1)").is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)").is_err());
    }
}
