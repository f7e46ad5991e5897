//! Built-in catalog: every group of order at most 16 (all 42 isomorphism
//! types) plus Sym(4). Abelian groups come from cyclic factors; the
//! nonabelian ones are permutation closures or synthesized Cayley tables
//! for the metacyclic, dicyclic, and central-product families.

use crate::group::{FiniteGroup, Permutation};
use crate::Result;

/// Dihedral group of the regular n-gon, order 2n.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
    let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    Ok(FiniteGroup::from_generators(&[rotation, reflection])?.with_label(format!("D{n}")))
}

/// Symmetric group on n points.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    let transposition =
        Permutation::from_images((0..n).map(|i| match i {
            0 => 1,
            1 => 0,
            _ => i,
        }).collect())?;
    let cycle = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
    Ok(FiniteGroup::from_generators(&[transposition, cycle])?.with_label(format!("Sym({n})")))
}

/// Alternating group on four points.
pub fn alternating4() -> Result<FiniteGroup> {
    let gens = [
        Permutation::parse_cycles("(1 2 3)")?,
        Permutation::parse_cycles("(1 2)(3 4)")?,
    ];
    Ok(FiniteGroup::from_generators(&gens)?.with_label("A4"))
}

/// Dicyclic group of order 4m: elements (i, j) with i mod 2m, j mod 2,
/// where the order-4 twist inverts and shifts by m.
pub fn dicyclic(m: usize) -> Result<FiniteGroup> {
    let two_m = 2 * m;
    let n = 4 * m;
    let idx = |i: usize, j: usize| j * two_m + i;
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..two_m {
        for j in 0..2 {
            for i2 in 0..two_m {
                for j2 in 0..2 {
                    let (ri, rj) = if j == 0 {
                        ((i + i2) % two_m, j2)
                    } else if j2 == 0 {
                        ((i + two_m - i2) % two_m, 1)
                    } else {
                        ((i + two_m - i2 + m) % two_m, 0)
                    };
                    table[idx(i, j)][idx(i2, j2)] = idx(ri, rj);
                }
            }
        }
    }
    let label = if m == 2 { "Q8".to_string() } else { format!("Dic{m}") };
    FiniteGroup::from_cayley(table, label)
}

/// Split metacyclic group Z_n x| Z_m with the generator of Z_m acting as
/// multiplication by k; requires k^m = 1 mod n.
pub fn metacyclic(n: usize, m: usize, k: usize, label: &str) -> Result<FiniteGroup> {
    let size = n * m;
    let idx = |i: usize, j: usize| j * n + i;
    // Powers of k mod n, one per j.
    let mut k_pow = vec![1usize; m];
    for j in 1..m {
        k_pow[j] = k_pow[j - 1] * k % n;
    }
    let mut table = vec![vec![0usize; size]; size];
    for i in 0..n {
        for j in 0..m {
            for i2 in 0..n {
                for j2 in 0..m {
                    let ri = (i + k_pow[j] * i2) % n;
                    let rj = (j + j2) % m;
                    table[idx(i, j)][idx(i2, j2)] = idx(ri, rj);
                }
            }
        }
    }
    FiniteGroup::from_cayley(table, label)
}

/// (Z2 x Z2) x| Z4 with the generator of Z4 swapping the two coordinates.
fn swap_semidirect() -> Result<FiniteGroup> {
    let idx = |x: usize, y: usize, j: usize| (x * 2 + y) * 4 + j;
    let mut table = vec![vec![0usize; 16]; 16];
    for x in 0..2 {
        for y in 0..2 {
            for j in 0..4 {
                for x2 in 0..2 {
                    for y2 in 0..2 {
                        for j2 in 0..4 {
                            let (sx, sy) = if j % 2 == 0 { (x2, y2) } else { (y2, x2) };
                            table[idx(x, y, j)][idx(x2, y2, j2)] =
                                idx((x + sx) % 2, (y + sy) % 2, (j + j2) % 4);
                        }
                    }
                }
            }
        }
    }
    FiniteGroup::from_cayley(table, "(Z2×Z2)⋊Z4")
}

/// Central product of the order-8 dihedral group with Z4 over their shared
/// central involution: normal form a^i b^j c^k with c central and c^2 = a^2.
fn central_product_d4_z4() -> Result<FiniteGroup> {
    let idx = |i: usize, j: usize, k: usize| i * 4 + j * 2 + k;
    let mut table = vec![vec![0usize; 16]; 16];
    for i in 0..4 {
        for j in 0..2 {
            for k in 0..2 {
                for i2 in 0..4 {
                    for j2 in 0..2 {
                        for k2 in 0..2 {
                            let conj_i2 = if j == 0 { i2 } else { (4 - i2) % 4 };
                            let carry = if k + k2 >= 2 { 2 } else { 0 };
                            let ri = (i + conj_i2 + carry) % 4;
                            table[idx(i, j, k)][idx(i2, j2, k2)] =
                                idx(ri, (j + j2) % 2, (k + k2) % 2);
                        }
                    }
                }
            }
        }
    }
    FiniteGroup::from_cayley(table, "D4∘Z4")
}

fn abelian(factors: &[usize]) -> Result<FiniteGroup> {
    let mut g = FiniteGroup::cyclic(factors[0])?;
    for &f in &factors[1..] {
        g = g.direct_product(&FiniteGroup::cyclic(f)?)?;
    }
    Ok(g)
}

/// The full catalog in deterministic order: abelian groups by order, then
/// the nonabelian ones, then Sym(4).
pub fn catalog() -> Vec<FiniteGroup> {
    catalog_impl().expect("catalog constructions are valid")
}

fn catalog_impl() -> Result<Vec<FiniteGroup>> {
    let mut groups = Vec::new();
    // Abelian isomorphism types of each order up to 16, as cyclic factors.
    let abelian_factors: [&[usize]; 25] = [
        &[1],
        &[2],
        &[3],
        &[4],
        &[2, 2],
        &[5],
        &[6],
        &[7],
        &[8],
        &[4, 2],
        &[2, 2, 2],
        &[9],
        &[3, 3],
        &[10],
        &[11],
        &[12],
        &[6, 2],
        &[13],
        &[14],
        &[15],
        &[16],
        &[8, 2],
        &[4, 4],
        &[4, 2, 2],
        &[2, 2, 2, 2],
    ];
    for factors in abelian_factors {
        groups.push(abelian(factors)?);
    }
    // Nonabelian groups of order at most 16.
    groups.push(symmetric(3)?);
    groups.push(dihedral(4)?);
    groups.push(dicyclic(2)?); // Q8
    groups.push(dihedral(5)?);
    groups.push(dihedral(6)?);
    groups.push(alternating4()?);
    groups.push(dicyclic(3)?);
    groups.push(dihedral(7)?);
    groups.push(dihedral(8)?);
    groups.push(metacyclic(8, 2, 3, "SD16")?);
    groups.push(metacyclic(8, 2, 5, "M16")?);
    groups.push(dicyclic(4)?); // Q16
    groups.push(dihedral(4)?.direct_product(&FiniteGroup::cyclic(2)?)?);
    groups.push(dicyclic(2)?.direct_product(&FiniteGroup::cyclic(2)?)?);
    groups.push(metacyclic(4, 4, 3, "Z4⋊Z4")?);
    groups.push(swap_semidirect()?);
    groups.push(central_product_d4_z4()?);
    groups.push(symmetric(4)?);
    Ok(groups)
}

/// The abelian members of the catalog.
pub fn abelian_catalog() -> Vec<FiniteGroup> {
    catalog().into_iter().filter(FiniteGroup::is_abelian).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    /// Isomorphism-grade fingerprint: order, class-size multiset, element
    /// order census, and the number of distinct squares.
    fn fingerprint(g: &FiniteGroup) -> (usize, Vec<usize>, Vec<(usize, usize)>, usize) {
        let mut class_sizes: Vec<usize> =
            g.conjugacy_classes().iter().map(|c| c.size).collect();
        class_sizes.sort_unstable();
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        for e in 0..g.order() {
            *census.entry(g.element_order(e)).or_default() += 1;
        }
        let mut squares: Vec<usize> = (0..g.order()).map(|e| g.mul(e, e)).collect();
        squares.sort_unstable();
        squares.dedup();
        (g.order(), class_sizes, census.into_iter().collect(), squares.len())
    }

    #[test]
    fn catalog_has_every_group_up_to_sixteen_plus_sym4() {
        let groups = catalog();
        assert_eq!(groups.len(), 43);
        let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
        for g in &groups {
            *by_order.entry(g.order()).or_default() += 1;
        }
        let expected: &[(usize, usize)] = &[
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 1),
            (6, 2),
            (7, 1),
            (8, 5),
            (9, 2),
            (10, 2),
            (11, 1),
            (12, 5),
            (13, 1),
            (14, 2),
            (15, 1),
            (16, 14),
            (24, 1),
        ];
        for &(order, count) in expected {
            assert_eq!(by_order.get(&order), Some(&count), "order {order}");
        }
    }

    #[test]
    fn catalog_groups_validate_and_are_pairwise_distinct() {
        let groups = catalog();
        let mut fingerprints = Vec::new();
        for g in &groups {
            g.validate().unwrap_or_else(|e| panic!("{} invalid: {e}", g.label()));
            fingerprints.push((g.label().to_string(), fingerprint(g)));
        }
        for i in 0..fingerprints.len() {
            for j in i + 1..fingerprints.len() {
                assert_ne!(
                    fingerprints[i].1, fingerprints[j].1,
                    "{} and {} look isomorphic",
                    fingerprints[i].0, fingerprints[j].0
                );
            }
        }
    }

    #[test]
    fn known_structure_spot_checks() {
        let q8 = dicyclic(2).unwrap();
        assert_eq!(q8.order(), 8);
        // Exactly one involution in the quaternion group.
        let involutions = (0..8).filter(|&e| e != 0 && q8.mul(e, e) == 0).count();
        assert_eq!(involutions, 1);

        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.conjugacy_classes().len(), 5);

        let s4 = symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.conjugacy_classes().len(), 5);

        let a4 = alternating4().unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.conjugacy_classes().len(), 4);

        let q16 = dicyclic(4).unwrap();
        assert_eq!(q16.order(), 16);
        assert_eq!(q16.conjugacy_classes().len(), 7);

        let sd16 = metacyclic(8, 2, 3, "SD16").unwrap();
        assert_eq!(sd16.conjugacy_classes().len(), 7);

        let m16 = metacyclic(8, 2, 5, "M16").unwrap();
        // The modular group of order 16 has 10 classes.
        assert_eq!(m16.conjugacy_classes().len(), 10);
    }

    #[test]
    fn dihedral_class_counts_match_the_closed_form() {
        // n odd: (n+3)/2 classes; n even: n/2 + 3.
        for n in 3..=8usize {
            let d = dihedral(n).unwrap();
            let expect = if n % 2 == 1 { (n + 3) / 2 } else { n / 2 + 3 };
            assert_eq!(d.conjugacy_classes().len(), expect, "D{n}");
        }
    }
}
