//! Character tables: direct constructors for the cyclic/Hadamard families,
//! Kronecker products, the class-matrix eigenvector algorithm for arbitrary
//! small groups, and character arithmetic on top of the finished tables.

use crate::group::FiniteGroup;
use crate::linalg::{hermitian_eigen, CMat, C64, ONE, ZERO};
use crate::{Error, Result, CORRUPT_TOL, DEFAULT_SEED, EPS, SNAP_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Character table of a finite group: entry (i, j) is the value of the i-th
/// irreducible character on the j-th conjugacy class. Row 0 is the trivial
/// character and column 0 is the identity class, so column 0 carries the
/// degrees.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    entries: CMat,
    class_sizes: Vec<usize>,
    centralizer_orders: Vec<usize>,
    degrees: Vec<usize>,
    group_label: String,
}

impl CharacterTable {
    /// Builds and fully validates a table from raw parts. Degrees are read
    /// off column 0.
    pub fn from_parts(
        entries: CMat,
        class_sizes: Vec<usize>,
        centralizer_orders: Vec<usize>,
        group_label: impl Into<String>,
    ) -> Result<Self> {
        let n = entries.nrows();
        if !entries.is_square() || class_sizes.len() != n || centralizer_orders.len() != n {
            return Err(Error::SizeMismatch(
                "table, class sizes, and centralizer orders must share one dimension".into(),
            ));
        }
        let mut degrees = Vec::with_capacity(n);
        for i in 0..n {
            let d = entries[(i, 0)];
            let rounded = d.re.round();
            if d.im.abs() > EPS || (d.re - rounded).abs() > SNAP_TOL || rounded < 1.0 {
                return Err(Error::TableCorrupt(format!(
                    "column 0 entry {} of row {i} is not a positive integer degree",
                    crate::fmt_complex(d)
                )));
            }
            degrees.push(rounded as usize);
        }
        let table = CharacterTable {
            entries,
            class_sizes,
            centralizer_orders,
            degrees,
            group_label: group_label.into(),
        };
        table.validate(EPS)?;
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    /// Group order, recovered as the sum of class sizes.
    pub fn group_order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    pub fn entries(&self) -> &CMat {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.entries[(i, j)]
    }

    pub fn row(&self, i: usize) -> &[C64] {
        self.entries.row(i)
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn centralizer_orders(&self) -> &[usize] {
        &self.centralizer_orders
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn group_label(&self) -> &str {
        &self.group_label
    }

    pub fn is_real(&self) -> bool {
        self.entries.max_imag() <= EPS
    }

    /// Realness is defined by a tolerance; this reports tables sitting just
    /// above it so callers can warn instead of silently projecting.
    pub fn is_real_borderline(&self) -> bool {
        let m = self.entries.max_imag();
        m > EPS && m <= 1e3 * EPS
    }

    /// Checks every structural invariant at the given tolerance.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let n = self.n();
        let order = self.group_order();
        for j in 0..n {
            let z = self.entries[(0, j)];
            if (z - ONE).norm() > tol {
                return Err(Error::TableCorrupt(format!(
                    "row 0 is not the trivial character at column {j}"
                )));
            }
        }
        for (i, row) in (0..n).map(|i| (i, self.entries.row(i))) {
            for (j, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::TableCorrupt(format!("non-finite entry at ({i},{j})")));
                }
            }
        }
        for j in 0..n {
            if self.class_sizes[j] * self.centralizer_orders[j] != order {
                return Err(Error::TableCorrupt(format!(
                    "class size times centralizer order differs from group order at column {j}"
                )));
            }
        }
        let degree_sq: usize = self.degrees.iter().map(|d| d * d).sum();
        if degree_sq != order {
            return Err(Error::TableCorrupt(format!(
                "sum of squared degrees {degree_sq} differs from group order {order}"
            )));
        }
        // Column orthogonality: Q* Q = diag(centralizer orders).
        let gram = self.entries.adjoint().matmul(&self.entries);
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j {
                    C64::new(self.centralizer_orders[i] as f64, 0.0)
                } else {
                    ZERO
                };
                if (gram[(i, j)] - expect).norm() > tol {
                    return Err(Error::TableCorrupt(format!(
                        "column orthogonality fails at ({i},{j}): residue {:.3e}",
                        (gram[(i, j)] - expect).norm()
                    )));
                }
            }
        }
        // Row orthonormality under the class-weighted inner product.
        for i in 0..n {
            for j in 0..n {
                let ip = self.inner_product_raw(self.row(i), self.row(j));
                let expect = if i == j { ONE } else { ZERO };
                if (ip - expect).norm() > tol {
                    return Err(Error::TableCorrupt(format!(
                        "character inner product fails at ({i},{j}): residue {:.3e}",
                        (ip - expect).norm()
                    )));
                }
            }
        }
        Ok(())
    }

    fn inner_product_raw(&self, a: &[C64], b: &[C64]) -> C64 {
        let order = self.group_order() as f64;
        let mut acc = ZERO;
        for k in 0..self.n() {
            acc += self.class_sizes[k] as f64 * a[k].conj() * b[k];
        }
        acc / order
    }

    /// Text form: header `n |G| label`, one line per row, then class sizes
    /// and centralizer orders.
    pub fn format_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n(), self.group_order(), self.group_label);
        for i in 0..self.n() {
            let row: Vec<String> = self.row(i).iter().map(|&z| crate::fmt_complex(z)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        let classes: Vec<String> = self.class_sizes.iter().map(|s| s.to_string()).collect();
        out.push_str(&format!("classes: {}\n", classes.join(" ")));
        let cents: Vec<String> = self.centralizer_orders.iter().map(|s| s.to_string()).collect();
        out.push_str(&format!("centralizers: {}\n", cents.join(" ")));
        out
    }
}

impl std::fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.format_text())
    }
}

/// The character table of the cyclic group of order `n`: the discrete
/// Fourier matrix with entries `w^((i-1)(j-1))`, `w = exp(2 pi i / n)`.
pub fn dft_table(n: usize) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    if n > crate::ORDER_CAP {
        return Err(Error::GroupTooLarge { cap: crate::ORDER_CAP, reached: n });
    }
    let entries = CMat::from_fn(n, n, |i, j| {
        let angle = 2.0 * PI * ((i * j) % n) as f64 / n as f64;
        snap_complex(C64::from_polar(1.0, angle))
    });
    CharacterTable::from_parts(entries, vec![1; n], vec![n; n], format!("Z{n}"))
}

/// The `k`-fold Kronecker power of [[1,1],[1,-1]]: the character table of
/// (Z2)^k. `m` must be a power of two.
pub fn walsh_table(m: usize) -> Result<CharacterTable> {
    if m == 0 || !m.is_power_of_two() {
        return Err(Error::SizeMismatch(format!("{m} is not a power of two")));
    }
    if m > crate::ORDER_CAP {
        return Err(Error::GroupTooLarge { cap: crate::ORDER_CAP, reached: m });
    }
    let mut table = trivial_table();
    while table.n() < m {
        table = kron_tables(&dft_table(2)?, &table);
    }
    Ok(table)
}

fn trivial_table() -> CharacterTable {
    CharacterTable::from_parts(CMat::identity(1), vec![1], vec![1], "Z1").unwrap()
}

/// Kronecker product of two character tables: the character table of the
/// direct product group. Class data multiplies componentwise.
pub fn kron_tables(a: &CharacterTable, b: &CharacterTable) -> CharacterTable {
    let entries = a.entries.kron(&b.entries);
    let mut class_sizes = Vec::with_capacity(a.n() * b.n());
    let mut cents = Vec::with_capacity(a.n() * b.n());
    for i in 0..a.n() {
        for j in 0..b.n() {
            class_sizes.push(a.class_sizes[i] * b.class_sizes[j]);
            cents.push(a.centralizer_orders[i] * b.centralizer_orders[j]);
        }
    }
    let label = if a.group_label == "Z1" {
        b.group_label.clone()
    } else if b.group_label == "Z1" {
        a.group_label.clone()
    } else {
        format!("{}×{}", a.group_label, b.group_label)
    };
    CharacterTable::from_parts(entries, class_sizes, cents, label)
        .expect("Kronecker product of valid tables is valid")
}

/// Character table of an arbitrary small group by the class-matrix
/// eigenvector method with the default seed.
pub fn burnside_table(g: &FiniteGroup) -> Result<CharacterTable> {
    burnside_table_seeded(g, DEFAULT_SEED)
}

/// Class-matrix algorithm: build structure constants a_ijk, rescale the n
/// commuting class matrices into a commuting family with a shared orthogonal
/// eigenbasis, and split that basis with a seeded random Hermitian
/// combination. Each common eigenvector, normalized at the identity class,
/// yields the weighted character values `|cl_k| chi(g_k) / d`; the degree d
/// is recovered from the weighted norm and rounded to the nearest integer.
pub fn burnside_table_seeded(g: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes();
    let n = classes.len();
    let order = g.order();
    let mut class_of = vec![0usize; order];
    for (k, c) in classes.iter().enumerate() {
        for &m in &c.members {
            class_of[m] = k;
        }
    }
    // Structure constants a_ijk = #{(x, y) in cl_i x cl_j : x y = z} for a
    // fixed z in cl_k enter only through the random combination below, so
    // they are accumulated on the fly instead of storing n class matrices.
    // Similarity by D = diag(sqrt(|cl_j|)) makes the common eigenbasis
    // orthogonal, and pairing each rescaled class matrix N_i with its
    // transpose gives Hermitian summands: an entry v = N_i[j][k] contributes
    // v (t_i - i s_i)/2 at (j, k) and the conjugate at (k, j).
    let sqrt_sizes: Vec<f64> = classes.iter().map(|c| (c.size as f64).sqrt()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut basis: Option<(Vec<f64>, CMat)> = None;
    for _attempt in 0..8 {
        let weights: Vec<C64> = (0..n)
            .map(|_| {
                let t: f64 = rng.gen_range(-1.0..1.0);
                let s: f64 = rng.gen_range(-1.0..1.0);
                C64::new(t * 0.5, -s * 0.5)
            })
            .collect();
        let mut combo = CMat::zeros(n, n);
        for (k, c) in classes.iter().enumerate() {
            let z = c.representative;
            for x in 0..order {
                let i = class_of[x];
                let j = class_of[g.mul(g.inv(x), z)];
                let v = sqrt_sizes[k] / sqrt_sizes[j];
                combo[(j, k)] += v * weights[i];
                combo[(k, j)] += v * weights[i].conj();
            }
        }
        let (vals, vecs) = hermitian_eigen(&combo);
        let separated = vals.windows(2).all(|w| (w[1] - w[0]).abs() > 1e-6);
        if separated || n == 1 {
            basis = Some((vals, vecs));
            break;
        }
    }
    let (_vals, vecs) = basis.ok_or_else(|| {
        Error::NumericalDegeneracy(
            "eigenvalue separation failed after 8 random combinations".into(),
        )
    })?;

    struct RawRow {
        degree: usize,
        values: Vec<C64>,
        sort_key: Vec<(i64, i64)>,
    }
    let mut rows = Vec::with_capacity(n);
    for col in 0..n {
        let u0 = vecs[(0, col)];
        if u0.norm() < 1e-12 {
            return Err(Error::NumericalDegeneracy(
                "eigenvector vanishes at the identity class".into(),
            ));
        }
        let omega: Vec<C64> =
            (0..n).map(|j| vecs[(j, col)] * sqrt_sizes[j] / u0).collect();
        let weighted: f64 =
            (0..n).map(|j| omega[j].norm_sqr() / classes[j].size as f64).sum();
        let d = (order as f64 / weighted).sqrt();
        let d_int = d.round();
        if (d - d_int).abs() > 1e-3 || d_int < 1.0 {
            return Err(Error::NumericalDegeneracy(format!(
                "recovered degree {d} is not a positive integer"
            )));
        }
        let values: Vec<C64> = (0..n)
            .map(|j| snap_complex(omega[j] * d_int / classes[j].size as f64))
            .collect();
        let sort_key: Vec<(i64, i64)> = values
            .iter()
            .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
            .collect();
        rows.push(RawRow { degree: d_int as usize, values, sort_key });
    }
    // Canonical row order: by degree, then lexicographically with larger
    // entries first, which puts the trivial character in row 0.
    rows.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| b.sort_key.cmp(&a.sort_key)));

    let entries = CMat::from_fn(n, n, |i, j| rows[i].values[j]);
    CharacterTable::from_parts(
        entries,
        classes.iter().map(|c| c.size).collect(),
        classes.iter().map(|c| c.centralizer_order).collect(),
        g.label().to_string(),
    )
    .map_err(|e| {
        // Invariant failures here mean the eigensolve lost too much accuracy
        // (clustered eigenvalues at large class counts), not bad input.
        Error::NumericalDegeneracy(format!(
            "character recovery for {} did not reach tolerance: {e}",
            g.label()
        ))
    })
}

/// Entrywise-exact inverse of a character table:
/// the (i, j) entry is `conj(q_ji) / |C_G(g_i)|`.
pub fn inverse_table(q: &CharacterTable) -> CMat {
    let n = q.n();
    CMat::from_fn(n, n, |i, j| {
        q.entry(j, i).conj() / q.centralizer_orders[i] as f64
    })
}

/// Class-weighted inner product of two class functions given in canonical
/// class order: `(1/|G|) sum_k |cl_k| conj(a_k) b_k`.
pub fn char_inner_product(q: &CharacterTable, a: &[C64], b: &[C64]) -> Result<C64> {
    if a.len() != q.n() {
        return Err(Error::LengthMismatch { expected: q.n(), got: a.len() });
    }
    if b.len() != q.n() {
        return Err(Error::LengthMismatch { expected: q.n(), got: b.len() });
    }
    Ok(q.inner_product_raw(a, b))
}

/// Multiplicities of the irreducible characters in the entrywise product of
/// rows `i` and `j` (row `j` conjugated first when `conjugate_second`).
/// The result must be a vector of nonnegative integers up to tolerance;
/// material deviation marks the table corrupt.
pub fn tensor_multiplicities(
    q: &CharacterTable,
    i: usize,
    j: usize,
    conjugate_second: bool,
) -> Result<Vec<f64>> {
    let n = q.n();
    for idx in [i, j] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    let product: Vec<C64> = (0..n)
        .map(|k| {
            let second = if conjugate_second { q.entry(j, k).conj() } else { q.entry(j, k) };
            q.entry(i, k) * second
        })
        .collect();
    let mut alphas = Vec::with_capacity(n);
    for l in 0..n {
        let alpha = q.inner_product_raw(&product, q.row(l));
        if alpha.im.abs() > CORRUPT_TOL {
            return Err(Error::TableCorrupt(format!(
                "tensor multiplicity {l} has imaginary part {:.3e}",
                alpha.im
            )));
        }
        let rounded = alpha.re.round();
        if (alpha.re - rounded).abs() > CORRUPT_TOL || rounded < -CORRUPT_TOL {
            return Err(Error::TableCorrupt(format!(
                "tensor multiplicity {l} = {} is not a nonnegative integer",
                alpha.re
            )));
        }
        alphas.push(alpha.re);
    }
    // The multiplicities must reconstruct the product row.
    for k in 0..n {
        let recon: C64 = (0..n).map(|l| q.entry(l, k) * alphas[l]).sum();
        if (recon - product[k]).norm() > EPS * (1.0 + product[k].norm()) {
            return Err(Error::TableCorrupt(format!(
                "multiplicities fail to reconstruct the product row at class {k}"
            )));
        }
    }
    Ok(alphas)
}

/// The dephased one-parameter 4x4 complex Hadamard family. Generally not a
/// character table, so it returns a plain matrix.
pub fn dephased_f4_theta(theta: f64) -> Result<CMat> {
    if !(0.0..PI).contains(&theta) {
        return Err(Error::ThetaOutOfRange(theta));
    }
    let ie = C64::new(0.0, 1.0) * C64::from_polar(1.0, theta);
    let one = ONE;
    let neg = -ONE;
    Ok(CMat::from_rows(&[
        vec![one, one, one, one],
        vec![one, ie, neg, -ie],
        vec![one, neg, one, neg],
        vec![one, -ie, neg, ie],
    ]))
}

/// Snaps a value to a nearby rational with denominator at most 64, or to
/// `c * cos/sin(pi p / q)` with `c <= 8`, `q <= 24`, when within 1e-6.
pub fn snap_real(v: f64) -> f64 {
    for q in 1..=64u32 {
        let p = (v * q as f64).round();
        let cand = p / q as f64;
        if (v - cand).abs() <= SNAP_TOL {
            return cand;
        }
    }
    let table = trig_candidates();
    let idx = table.partition_point(|&c| c < v);
    let mut best = f64::INFINITY;
    let mut best_val = v;
    for i in idx.saturating_sub(1)..(idx + 1).min(table.len()) {
        let err = (table[i] - v).abs();
        if err < best {
            best = err;
            best_val = table[i];
        }
    }
    if best <= SNAP_TOL {
        best_val
    } else {
        v
    }
}

pub fn snap_complex(z: C64) -> C64 {
    C64::new(snap_real(z.re), snap_real(z.im))
}

fn trig_candidates() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut vals = Vec::new();
        for q in 1..=24u32 {
            for p in 0..=2 * q {
                let angle = PI * p as f64 / q as f64;
                for c in 1..=8 {
                    vals.push(c as f64 * angle.cos());
                    vals.push(c as f64 * angle.sin());
                }
            }
        }
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        vals
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{inverse, multisets_close};

    pub(crate) fn sym3_group() -> FiniteGroup {
        let gens = [
            crate::group::Permutation::parse_cycles("(1 2)").unwrap(),
            crate::group::Permutation::parse_cycles("(1 2 3)").unwrap(),
        ];
        FiniteGroup::from_generators(&gens).unwrap().with_label("Sym(3)")
    }

    /// The textbook Sym(3) table with columns ordered (identity,
    /// transpositions, 3-cycles) and class data (1,3,2)/(6,2,3).
    pub(crate) fn sym3_reference_table() -> CharacterTable {
        let entries = CMat::from_real_rows(&[
            vec![1.0, 1.0, 1.0],
            vec![1.0, -1.0, 1.0],
            vec![2.0, 0.0, -1.0],
        ]);
        CharacterTable::from_parts(entries, vec![1, 3, 2], vec![6, 2, 3], "Sym(3)").unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// Oracle: a multiset is self-conjugate when it equals its conjugates.
    fn self_conjugate(values: &[C64]) -> bool {
        let conj: Vec<C64> = values.iter().map(|z| z.conj()).collect();
        multisets_close(values, &conj, 1e-9)
    }

    #[test]
    fn dft_small_cases() {
        let f1 = dft_table(1).unwrap();
        assert_eq!(f1.n(), 1);
        assert_eq!(f1.entry(0, 0), ONE);

        let f2 = dft_table(2).unwrap();
        assert_eq!(f2.entry(1, 0), ONE);
        assert_eq!(f2.entry(1, 1), -ONE);

        let f4 = dft_table(4).unwrap();
        let row2: Vec<C64> = f4.row(1).to_vec();
        assert_eq!(row2, vec![c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)]);
        assert_eq!(f4.centralizer_orders(), &[4, 4, 4, 4]);
    }

    #[test]
    fn walsh_tables() {
        let h2 = walsh_table(2).unwrap();
        assert_eq!(h2.entries().row(1), &[ONE, -ONE]);

        let h4 = walsh_table(4).unwrap();
        let expect = CMat::from_real_rows(&[
            vec![1.0, 1.0, 1.0, 1.0],
            vec![1.0, -1.0, 1.0, -1.0],
            vec![1.0, 1.0, -1.0, -1.0],
            vec![1.0, -1.0, -1.0, 1.0],
        ]);
        assert!(h4.entries().max_abs_diff(&expect) < 1e-15);
        assert_eq!(h4.group_label(), "Z2×Z2");

        let h1 = walsh_table(1).unwrap();
        assert_eq!(h1.n(), 1);

        assert!(matches!(walsh_table(3), Err(Error::SizeMismatch(_))));
        assert!(matches!(walsh_table(0), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn kron_of_h2_with_itself_is_walsh4() {
        let h2 = dft_table(2).unwrap();
        let k = kron_tables(&h2, &h2);
        let h4 = walsh_table(4).unwrap();
        assert!(k.entries().max_abs_diff(h4.entries()) < 1e-15);
        assert_eq!(k.class_sizes(), h4.class_sizes());
    }

    #[test]
    fn kron_with_trivial_is_identity_operation() {
        let q = dft_table(3).unwrap();
        let t = walsh_table(1).unwrap();
        let k = kron_tables(&q, &t);
        assert!(k.entries().max_abs_diff(q.entries()) < 1e-15);
        assert_eq!(k.group_label(), "Z3");
    }

    #[test]
    fn burnside_z2_is_exactly_h2() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let q = burnside_table(&z2).unwrap();
        let h2 = walsh_table(2).unwrap();
        assert!(q.entries().max_abs_diff(h2.entries()) < 1e-12);
    }

    #[test]
    fn burnside_sym3_matches_reference_table_up_to_permutation() {
        let q = burnside_table(&sym3_group()).unwrap();
        assert_eq!(q.degrees(), &[1, 1, 2]);
        // Canonical class order is (identity, 3-cycles, transpositions).
        assert_eq!(q.class_sizes(), &[1, 2, 3]);
        assert_eq!(q.centralizer_orders(), &[6, 3, 2]);
        assert!(crate::matching::tables_equivalent(&q, &sym3_reference_table(), 1e-8));
    }

    #[test]
    fn burnside_is_deterministic() {
        let g = sym3_group();
        let a = burnside_table(&g).unwrap();
        let b = burnside_table(&g).unwrap();
        assert_eq!(a.format_text(), b.format_text());
    }

    #[test]
    fn burnside_agrees_with_kron_for_z6() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let g = z2.direct_product(&z3).unwrap();
        let via_algorithm = burnside_table(&g).unwrap();
        let via_kron = kron_tables(&dft_table(2).unwrap(), &dft_table(3).unwrap());
        assert!(crate::matching::tables_equivalent(&via_algorithm, &via_kron, 1e-8));
    }

    #[test]
    fn inverse_table_of_sym3_has_the_expected_rows() {
        let q = sym3_reference_table();
        let inv = inverse_table(&q);
        let expect = CMat::from_real_rows(&[
            vec![1.0 / 6.0, 1.0 / 6.0, 2.0 / 6.0],
            vec![1.0 / 2.0, -1.0 / 2.0, 0.0],
            vec![1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0],
        ]);
        assert!(inv.max_abs_diff(&expect) < 1e-12);
        // Oracle: generic LU inverse agrees entrywise.
        let generic = inverse(q.entries()).unwrap();
        assert!(inv.max_abs_diff(&generic) < 1e-8);
    }

    #[test]
    fn inverse_table_of_h2_is_half_h2() {
        let h2 = walsh_table(2).unwrap();
        let inv = inverse_table(&h2);
        assert!(inv.max_abs_diff(&h2.entries().scale(c(0.5, 0.0))) < 1e-15);
    }

    #[test]
    fn inverse_table_of_f4_multiplies_to_identity() {
        let f4 = dft_table(4).unwrap();
        let inv = inverse_table(&f4);
        let prod = f4.entries().matmul(&inv);
        assert!(prod.max_abs_diff(&CMat::identity(4)) < 1e-12);
        // Also the stated closed form: (1/4) conj-transpose.
        let adj = f4.entries().adjoint().scale(c(0.25, 0.0));
        assert!(inv.max_abs_diff(&adj) < 1e-12);
    }

    #[test]
    fn inner_products_are_orthonormal_on_sym3() {
        let q = sym3_reference_table();
        for i in 0..3 {
            for j in 0..3 {
                let ip = char_inner_product(&q, q.row(i), q.row(j)).unwrap();
                let expect = if i == j { ONE } else { ZERO };
                assert!((ip - expect).norm() < 1e-12, "({i},{j})");
            }
        }
        let ones = vec![ONE, ONE];
        let z2 = walsh_table(2).unwrap();
        let ip = char_inner_product(&z2, &ones, &ones).unwrap();
        assert!((ip - ONE).norm() < 1e-15);
        assert!(char_inner_product(&z2, &ones, &[ONE]).is_err());
    }

    #[test]
    fn tensor_multiplicities_on_sym3_standard_square() {
        let q = sym3_reference_table();
        // The standard character squared against itself decomposes with
        // multiplicity one on every irreducible.
        let alphas = tensor_multiplicities(&q, 2, 2, true).unwrap();
        for a in &alphas {
            assert!((a - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn tensor_multiplicities_trivial_row_is_identity() {
        let q = dft_table(5).unwrap();
        for k in 0..5 {
            let alphas = tensor_multiplicities(&q, 0, k, false).unwrap();
            for (l, a) in alphas.iter().enumerate() {
                let expect = if l == k { 1.0 } else { 0.0 };
                assert!((a - expect).abs() < 1e-9, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn tensor_multiplicities_h4_rows_two_three_give_row_four() {
        let h4 = walsh_table(4).unwrap();
        // (1,-1,1,-1) . (1,1,-1,-1) = (1,-1,-1,1), the last row.
        let alphas = tensor_multiplicities(&h4, 1, 2, false).unwrap();
        assert!((alphas[3] - 1.0).abs() < 1e-12);
        assert!(alphas[0].abs() + alphas[1].abs() + alphas[2].abs() < 1e-12);
    }

    #[test]
    fn realness_flags() {
        assert!(walsh_table(4).unwrap().is_real());
        let f3 = dft_table(3).unwrap();
        assert!(!f3.is_real());
        assert!(!f3.is_real_borderline()); // far above the tolerance band
        assert!(!walsh_table(2).unwrap().is_real_borderline());
    }

    #[test]
    fn dephased_f4_at_zero_equals_f4() {
        let m = dephased_f4_theta(0.0).unwrap();
        let f4 = dft_table(4).unwrap();
        assert!(m.max_abs_diff(f4.entries()) < 1e-12);
    }

    #[test]
    fn dephased_f4_row_two_loses_self_conjugacy_off_zero() {
        let theta = PI / 5.0;
        let m = dephased_f4_theta(theta).unwrap();
        assert!(!self_conjugate(m.row(1)));
        let m0 = dephased_f4_theta(0.0).unwrap();
        assert!(self_conjugate(m0.row(1)));
    }

    #[test]
    fn dephased_f4_entries_have_unit_modulus() {
        for theta in [0.0, 0.7, PI / 2.0, 3.0] {
            let m = dephased_f4_theta(theta).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    assert!((m[(i, j)].norm() - 1.0).abs() < 1e-12);
                }
                assert!((m[(i, 0)] - ONE).norm() < 1e-12);
                assert!((m[(0, i)] - ONE).norm() < 1e-12);
            }
        }
        assert!(matches!(dephased_f4_theta(PI), Err(Error::ThetaOutOfRange(_))));
        assert!(matches!(dephased_f4_theta(-0.1), Err(Error::ThetaOutOfRange(_))));
    }

    #[test]
    fn snapping_recovers_clean_constants() {
        assert_eq!(snap_real(0.499999999), 0.5);
        assert_eq!(snap_real(-1.0000000001), -1.0);
        // Trig constants snap to within an ulp or two of the exact value
        // (the candidate table dedupes aliases like 2sin(pi/4) = 2cos(pi/4)).
        let root2 = 2f64.sqrt();
        assert!((snap_real(root2 + 1e-9) - root2).abs() < 1e-12);
        let golden = 2.0 * (2.0 * PI / 5.0).cos();
        assert!((snap_real(golden + 1e-8) - golden).abs() < 1e-12);
        // Values far from every candidate pass through.
        let awkward = 0.123456789012345;
        assert_eq!(snap_real(awkward), awkward);
    }

    #[test]
    fn format_text_matches_documented_layout() {
        let q = sym3_reference_table();
        let text = q.format_text();
        let expect = "3 6 Sym(3)\n1 1 1\n1 -1 1\n2 0 -1\nclasses: 1 3 2\ncentralizers: 6 2 3\n";
        assert_eq!(text, expect);
    }

    #[test]
    fn from_parts_rejects_broken_tables() {
        // Row 0 not trivial.
        let bad = CMat::from_real_rows(&[vec![1.0, 2.0], vec![1.0, -1.0]]);
        assert!(CharacterTable::from_parts(bad, vec![1, 1], vec![2, 2], "bad").is_err());
        // Degree sum mismatch.
        let bad = CMat::from_real_rows(&[vec![1.0, 1.0], vec![2.0, -1.0]]);
        assert!(CharacterTable::from_parts(bad, vec![1, 1], vec![2, 2], "bad").is_err());
        // Orthogonality broken.
        let bad = CMat::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert!(CharacterTable::from_parts(bad, vec![1, 1], vec![2, 2], "bad").is_err());
    }

    #[test]
    fn validate_with_impossible_tolerance_fails() {
        // Tolerance zero sits below float noise for tables with irrational
        // entries; the integer-valued Sym(3) table stays exact, so use F7.
        let q = dft_table(7).unwrap();
        assert!(q.validate(1e-9).is_ok());
        assert!(q.validate(0.0).is_err());
    }
}
