//! Farey fractions, the unit-circle points of the Karpelevič region,
//! total-extremality checks, and the primary decomposition of abelian
//! groups that feeds the Kronecker form of their character tables.

use crate::chartab::{dft_table, kron_tables, walsh_table, CharacterTable};
use crate::group::FiniteGroup;
use crate::linalg::{CMat, C64, ONE};
use crate::matching::match_matrices;
use crate::perron::Similarity;
use crate::{Error, Result, EPS};
use std::f64::consts::PI;

/// A reduced fraction `p/q` in [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FareyFraction {
    pub p: u64,
    pub q: u64,
}

impl FareyFraction {
    pub fn value(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl std::fmt::Display for FareyFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// The ascending Farey sequence of order `n`, generated by the classical
/// next-term recurrence (each step is the mediant jump).
pub fn farey(n: u64) -> Vec<FareyFraction> {
    assert!(n >= 1, "farey order must be positive");
    let mut out = vec![FareyFraction { p: 0, q: 1 }, FareyFraction { p: 1, q: n }];
    if n == 1 {
        return out;
    }
    loop {
        let len = out.len();
        let a = out[len - 2];
        let b = out[len - 1];
        if b.p == 1 && b.q == 1 {
            break;
        }
        let k = (n + a.q) / b.q;
        out.push(FareyFraction { p: k * b.p - a.p, q: k * b.q - a.q });
    }
    out
}

/// A root of unity indexed by its Farey fraction.
#[derive(Clone, Copy, Debug)]
pub struct CirclePoint {
    pub p: u64,
    pub q: u64,
    pub value: C64,
}

/// The points where the set of eigenvalues of n-by-n stochastic matrices
/// meets the unit circle: `exp(2 pi i p/q)` over the Farey fractions of
/// order `n`, closed under conjugation and deduplicated. Sorted by angle.
pub fn karpelevic_circle_points(n: u64) -> Vec<CirclePoint> {
    let mut points: Vec<CirclePoint> = Vec::new();
    let mut push = |p: u64, q: u64| {
        // Angle reduced to [0, 1) so 1/1 and 0/1 coincide exactly.
        let reduced = p % q;
        let value = C64::from_polar(1.0, 2.0 * PI * reduced as f64 / q as f64);
        points.push(CirclePoint { p: reduced, q, value });
    };
    for f in farey(n) {
        push(f.p, f.q);
        // Conjugate partner; the Farey set is already closed under
        // p -> q - p but the closure is cheap to enforce directly.
        push((f.q - f.p) % f.q.max(1), f.q);
    }
    points.sort_by(|a, b| {
        (a.p * b.q).cmp(&(b.p * a.q)).then_with(|| a.q.cmp(&b.q))
    });
    points.dedup_by(|a, b| (a.value - b.value).norm() <= EPS);
    points
}

#[derive(Clone, Debug)]
pub struct ExtremalityCheck {
    pub holds: bool,
    pub first_failing: Option<(usize, usize, C64)>,
}

/// Every entry of the matrix must sit on a Karpelevič circle point of index
/// equal to the matrix size.
pub fn is_totally_extremal(m: &CMat) -> ExtremalityCheck {
    let n = m.nrows();
    let mut values: Vec<C64> = karpelevic_circle_points(n as u64)
        .into_iter()
        .map(|p| p.value)
        .collect();
    values.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
    let near_some_point = |z: C64| {
        let lo = values.partition_point(|v| v.re < z.re - EPS);
        values[lo..]
            .iter()
            .take_while(|v| v.re <= z.re + EPS)
            .any(|v| (v - z).norm() <= EPS)
    };
    for i in 0..n {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            if !near_some_point(z) {
                return ExtremalityCheck { holds: false, first_failing: Some((i, j, z)) };
            }
        }
    }
    ExtremalityCheck { holds: true, first_failing: None }
}

/// Primary decomposition of an abelian group from its element orders:
/// the multiset of prime powers `p^a` with `G` isomorphic to the direct sum
/// of the corresponding cyclic groups, sorted ascending.
pub fn abelian_factorization(g: &FiniteGroup) -> Result<Vec<u64>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian(g.label().to_string()));
    }
    let order = g.order() as u64;
    let orders: Vec<u64> = (0..g.order()).map(|e| g.element_order(e) as u64).collect();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for (p, e) in prime_factorization(order) {
        // m_k = log_p #{g : g^(p^k) = e}; the increments m_k - m_{k-1}
        // count the cyclic factors of exponent at least k.
        let mut at_least = Vec::new(); // at_least[k-1] = #factors with a >= k
        let mut prev = 0u32;
        for k in 1..=e {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let mk = ilog(count, p);
            at_least.push(mk - prev);
            prev = mk;
        }
        for k in 1..=e as usize {
            let exactly = at_least[k - 1] - if k < e as usize { at_least[k] } else { 0 };
            for _ in 0..exactly {
                factors.push((p, k as u32));
            }
        }
    }
    let mut result: Vec<u64> = factors.iter().map(|&(p, a)| p.pow(a)).collect();
    result.sort_unstable();
    debug_assert_eq!(result.iter().product::<u64>(), order);
    Ok(result)
}

fn ilog(mut value: u64, base: u64) -> u32 {
    let mut log = 0;
    while value >= base {
        value /= base;
        log += 1;
    }
    log
}

fn prime_factorization(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Character table of the abelian group with the given prime-power factors:
/// the plain order-2 factors collapse into one Walsh block up front, the
/// rest contribute their Fourier tables by Kronecker product.
pub fn factorization_table(factors: &[u64]) -> Result<CharacterTable> {
    let twos = factors.iter().filter(|&&f| f == 2).count();
    let mut table = walsh_table(1 << twos)?;
    for &f in factors.iter().filter(|&&f| f != 2) {
        table = kron_tables(&table, &dft_table(f as usize)?);
    }
    Ok(table)
}

/// All abelian groups of order `n`, each as a sorted prime-power multiset.
pub fn abelian_groups_of_order(n: u64) -> Vec<Vec<u64>> {
    let mut combos: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in prime_factorization(n) {
        let parts = partitions(e);
        let mut next = Vec::new();
        for combo in &combos {
            for part in &parts {
                let mut extended = combo.clone();
                extended.extend(part.iter().map(|&a| p.pow(a)));
                next.push(extended);
            }
        }
        combos = next;
    }
    for combo in &mut combos {
        combo.sort_unstable();
    }
    combos
}

fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn recurse(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            current.push(next);
            recurse(remaining - next, next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(e, e, &mut Vec::new(), &mut out);
    out
}

/// Display label for a prime-power factorization, e.g. `[2, 2]` -> "Z2×Z2".
pub fn factorization_label(factors: &[u64]) -> String {
    if factors.is_empty() {
        return "Z1".into();
    }
    let parts: Vec<String> = factors.iter().map(|f| format!("Z{f}")).collect();
    parts.join("×")
}

/// Evidence gathered for a candidate matrix: is it a normalized ideal
/// Perron similarity, is it totally extremal, and if everything holds, is
/// it the character table of an abelian group of matching order.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub perron_similarity: bool,
    pub first_column_all_ones: bool,
    pub entries_bounded_by_one: bool,
    pub ideal: bool,
    pub totally_extremal: bool,
    pub matched_group: Option<String>,
}

impl ProbeReport {
    pub fn normalized_perron(&self) -> bool {
        self.perron_similarity && self.first_column_all_ones && self.entries_bounded_by_one
    }

    pub fn all_hold(&self) -> bool {
        self.normalized_perron() && self.ideal && self.totally_extremal
    }
}

impl std::fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "normalized_perron_similarity: {}", self.normalized_perron())?;
        writeln!(f, "ideal: {}", self.ideal)?;
        write!(f, "totally_extremal: {}", self.totally_extremal)?;
        if self.first_column_all_ones != self.entries_bounded_by_one {
            write!(
                f,
                "\nnote: normalization is partial (first column all ones: {}, entries bounded: {})",
                self.first_column_all_ones, self.entries_bounded_by_one
            )?;
        }
        if let Some(label) = &self.matched_group {
            write!(f, "\nmatches: {label}")?;
        }
        Ok(())
    }
}

pub fn conjecture_probe(s: &CMat) -> Result<ProbeReport> {
    if !s.is_square() {
        return Err(Error::SizeMismatch("probe input must be square".into()));
    }
    let n = s.nrows();
    let sim = Similarity::new(s.clone())?;
    let perron_similarity = sim.is_perron_similarity().holds;
    let first_column_all_ones = (0..n).all(|i| (s[(i, 0)] - ONE).norm() <= EPS);
    let entries_bounded_by_one = s.max_abs() <= 1.0 + EPS;
    let ideal = sim.is_ideal(EPS).holds;
    let totally_extremal = is_totally_extremal(s).holds;

    let mut matched_group = None;
    if perron_similarity && first_column_all_ones && entries_bounded_by_one && ideal
        && totally_extremal
    {
        for factors in abelian_groups_of_order(n as u64) {
            let table = factorization_table(&factors)?;
            if match_matrices(s, table.entries(), 1e-8).is_some() {
                matched_group = Some(factorization_label(&factors));
                break;
            }
        }
    }
    Ok(ProbeReport {
        perron_similarity,
        first_column_all_ones,
        entries_bounded_by_one,
        ideal,
        totally_extremal,
        matched_group,
    })
}
