//! Spectracones and spectratopes of an invertible matrix: realizing
//! matrices, membership tests with certificates, the Perron-similarity /
//! row-Hadamard-conic / ideal checks, the reduced facet system of a
//! character table, stochastic rescaling, and the classical necessary
//! conditions on candidate spectra.

use crate::chartab::{inverse_table, tensor_multiplicities, CharacterTable};
use crate::linalg::{condition_inf, inverse, multisets_close, CMat, C64, ONE, ZERO};
use crate::{Error, Result, EPS, SPECTRUM_TOL};

/// Condition-estimate ceiling beyond which a similarity is rejected.
const COND_LIMIT: f64 = 1e12;

/// An invertible matrix paired with its inverse, ready for similarity
/// products. Character tables use their entrywise-exact inverse; anything
/// else goes through pivoted elimination with a condition estimate.
#[derive(Clone, Debug)]
pub struct Similarity {
    s: CMat,
    s_inv: CMat,
}

impl Similarity {
    pub fn new(s: CMat) -> Result<Self> {
        if !s.is_square() {
            return Err(Error::SizeMismatch("similarity matrix must be square".into()));
        }
        let s_inv = inverse(&s)?;
        let cond = condition_inf(&s, &s_inv);
        if cond > COND_LIMIT {
            return Err(Error::IllConditioned { cond });
        }
        Ok(Similarity { s, s_inv })
    }

    pub fn from_table(q: &CharacterTable) -> Self {
        Similarity { s: q.entries().clone(), s_inv: inverse_table(q) }
    }

    pub fn dim(&self) -> usize {
        self.s.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.s
    }

    pub fn inverse_matrix(&self) -> &CMat {
        &self.s_inv
    }

    fn check_len(&self, x: &[C64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    /// The similarity product `S D_x S^-1`, complex and unchecked.
    pub fn similarity_product(&self, x: &[C64]) -> CMat {
        let n = self.dim();
        let scaled = CMat::from_fn(n, n, |i, k| self.s[(i, k)] * x[k]);
        scaled.matmul(&self.s_inv)
    }

    /// Realizes the candidate spectrum `x` as a real matrix, discarding
    /// imaginary parts only after they pass the realness tolerance.
    pub fn realize(&self, x: &[C64]) -> Result<RealizingMatrix> {
        self.check_len(x)?;
        let m = self.similarity_product(x);
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if m[(i, j)].im.abs() > SPECTRUM_TOL {
                    return Err(Error::NonRealRealization {
                        row: i,
                        col: j,
                        imag: m[(i, j)].im,
                    });
                }
            }
        }
        Ok(RealizingMatrix { entries: m.real_rows(), spectrum: x.to_vec() })
    }

    /// Membership of `x` in the conical hull of the rows: `x^T S^-1 >= 0`.
    pub fn row_cone_membership(&self, x: &[C64], tol: f64) -> MembershipVerdict {
        let coeffs = CMat::vec_mat(x, &self.s_inv);
        for (k, c) in coeffs.iter().enumerate() {
            if c.im.abs() > tol || c.re < -tol {
                return MembershipVerdict {
                    member: false,
                    witness: Witness::NegativeCoefficient { index: k, value: *c },
                };
            }
        }
        MembershipVerdict { member: true, witness: Witness::Coefficients(coeffs) }
    }

    /// Membership of `x` in the spectracone: every entry of `M_x` real and
    /// nonnegative up to tolerance.
    pub fn spectracone_membership(&self, x: &[C64], tol: f64) -> MembershipVerdict {
        let m = self.similarity_product(x);
        let n = self.dim();
        let mut min_entry = f64::INFINITY;
        for i in 0..n {
            for j in 0..n {
                let z = m[(i, j)];
                if z.im.abs() > SPECTRUM_TOL {
                    return MembershipVerdict {
                        member: false,
                        witness: Witness::NonRealEntry { row: i, col: j, imag: z.im },
                    };
                }
                if z.re < -tol {
                    return MembershipVerdict {
                        member: false,
                        witness: Witness::NegativeEntry { row: i, col: j, value: z.re },
                    };
                }
                min_entry = min_entry.min(z.re);
            }
        }
        MembershipVerdict { member: true, witness: Witness::EntrywiseNonnegative { min_entry } }
    }

    /// Membership of `x` in the spectratope: spectracone membership plus
    /// unit row sums of the realizing matrix.
    pub fn spectratope_membership(&self, x: &[C64], tol: f64) -> MembershipVerdict {
        let cone = self.spectracone_membership(x, tol);
        if !cone.member {
            return cone;
        }
        let m = self.similarity_product(x);
        for i in 0..self.dim() {
            let sum: C64 = m.row(i).iter().sum();
            if (sum - ONE).norm() > tol {
                return MembershipVerdict {
                    member: false,
                    witness: Witness::RowSumViolation { row: i, value: sum },
                };
            }
        }
        cone
    }

    /// A matrix is a Perron similarity exactly when a unique column k has
    /// `S e_k` a scalar multiple of a positive vector while row k of `S^-1`
    /// is likewise; the product of the two scalars is then forced positive.
    pub fn is_perron_similarity(&self) -> PerronCheck {
        let n = self.dim();
        let qualifying: Vec<usize> = (0..n)
            .filter(|&k| {
                positive_up_to_phase(&self.s.col(k)) && positive_up_to_phase(self.s_inv.row(k))
            })
            .collect();
        let holds = qualifying.len() == 1;
        PerronCheck { holds, witness: qualifying.first().copied().filter(|_| holds), qualifying }
    }

    /// Row Hadamard conic: every entrywise product of two rows stays in the
    /// conical hull of the rows.
    pub fn is_rhc(&self, tol: f64) -> RhcCheck {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let product: Vec<C64> = (0..n).map(|k| self.s[(i, k)] * self.s[(j, k)]).collect();
                if !self.row_cone_membership(&product, tol).member {
                    return RhcCheck { holds: false, first_failing: Some((i, j)) };
                }
            }
        }
        RhcCheck { holds: true, first_failing: None }
    }

    /// Ideal: the all-ones vector lies in the row cone and the matrix is RHC.
    pub fn is_ideal(&self, tol: f64) -> IdealCheck {
        let ones = vec![ONE; self.dim()];
        let all_ones_in_row_cone = self.row_cone_membership(&ones, tol).member;
        let rhc = self.is_rhc(tol);
        IdealCheck { holds: all_ones_in_row_cone && rhc.holds, all_ones_in_row_cone, rhc }
    }

    /// Left-scales by the inverse of `v = S e_k`, making column k all ones.
    pub fn rescale_stochastic(&self, k: usize) -> Result<CMat> {
        let n = self.dim();
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        let v = self.s.col(k);
        for (i, vi) in v.iter().enumerate() {
            if vi.norm() <= EPS {
                return Err(Error::NotTotallyNonzero { index: i });
            }
        }
        Ok(CMat::from_fn(n, n, |i, j| self.s[(i, j)] / v[i]))
    }

    /// Conjugates `M_x` by `D_v`, `v = S e_k`; the result has constant row
    /// sums equal to `x_k`.
    pub fn eigenpair_transform(&self, x: &[C64], k: usize) -> Result<CMat> {
        self.check_len(x)?;
        let n = self.dim();
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        let v = self.s.col(k);
        for (i, vi) in v.iter().enumerate() {
            if vi.norm() <= EPS {
                return Err(Error::NotTotallyNonzero { index: i });
            }
        }
        let m = self.similarity_product(x);
        Ok(CMat::from_fn(n, n, |i, j| m[(i, j)] * v[j] / v[i]))
    }
}

/// True when the vector is a complex scalar multiple of an entrywise
/// positive vector: totally nonzero with one common phase.
fn positive_up_to_phase(v: &[C64]) -> bool {
    let mut phase: Option<C64> = None;
    for z in v {
        if z.norm() <= EPS {
            return false;
        }
        let unit = z / z.norm();
        match phase {
            None => phase = Some(unit),
            Some(p) => {
                // z / p must be positive real.
                let rotated = z * p.conj();
                if rotated.im.abs() > EPS * z.norm() || rotated.re <= 0.0 {
                    return false;
                }
            }
        }
    }
    true
}

/// A realized nonnegative-candidate matrix together with its source spectrum.
#[derive(Clone, Debug)]
pub struct RealizingMatrix {
    pub entries: Vec<Vec<f64>>,
    pub spectrum: Vec<C64>,
}

impl RealizingMatrix {
    pub fn min_entry(&self) -> f64 {
        self.entries
            .iter()
            .flat_map(|row| row.iter().copied())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.entries.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn is_stochastic(&self, tol: f64) -> bool {
        self.min_entry() >= -tol && self.row_sums().iter().all(|s| (s - 1.0).abs() <= tol)
    }

    /// Clamps tiny negatives introduced by rounding to exact zero.
    pub fn clamped(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&v| if v < 0.0 { 0.0 } else { v }).collect())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct MembershipVerdict {
    pub member: bool,
    pub witness: Witness,
}

#[derive(Clone, Debug)]
pub enum Witness {
    /// Conical coefficients certifying row-cone membership.
    Coefficients(Vec<C64>),
    /// Spectracone membership: the smallest realizing-matrix entry.
    EntrywiseNonnegative { min_entry: f64 },
    /// Reduced-system membership: all facet values.
    FacetValues(Vec<f64>),
    NegativeCoefficient { index: usize, value: C64 },
    NegativeEntry { row: usize, col: usize, value: f64 },
    NonRealEntry { row: usize, col: usize, imag: f64 },
    FacetViolation { facet: usize, value: f64 },
    NonRealFacet { facet: usize, value: C64 },
    RowSumViolation { row: usize, value: C64 },
}

impl std::fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.witness {
            Witness::Coefficients(coeffs) => {
                let list: Vec<String> = coeffs.iter().map(|&z| crate::fmt_complex(z)).collect();
                write!(f, "MEMBER coeffs=[{}]", list.join(", "))
            }
            Witness::EntrywiseNonnegative { min_entry } => {
                write!(f, "MEMBER min_entry={}", crate::fmt_f64(*min_entry))
            }
            Witness::FacetValues(values) => {
                let list: Vec<String> = values.iter().map(|&v| crate::fmt_f64(v)).collect();
                write!(f, "MEMBER facets=[{}]", list.join(", "))
            }
            Witness::NegativeCoefficient { index, value } => {
                write!(f, "NOT_MEMBER coeff={} value={}", index + 1, crate::fmt_complex(*value))
            }
            Witness::NegativeEntry { row, col, value } => write!(
                f,
                "NOT_MEMBER entry=({},{}) value={}",
                row + 1,
                col + 1,
                crate::fmt_f64(*value)
            ),
            Witness::NonRealEntry { row, col, imag } => write!(
                f,
                "NOT_MEMBER entry=({},{}) imag={}",
                row + 1,
                col + 1,
                crate::fmt_f64(*imag)
            ),
            Witness::FacetViolation { facet, value } => {
                write!(f, "NOT_MEMBER facet={} value={}", facet + 1, crate::fmt_f64(*value))
            }
            Witness::NonRealFacet { facet, value } => {
                write!(f, "NOT_MEMBER facet={} value={}", facet + 1, crate::fmt_complex(*value))
            }
            Witness::RowSumViolation { row, value } => {
                write!(f, "NOT_MEMBER row_sum={} value={}", row + 1, crate::fmt_complex(*value))
            }
        }
    }
}

/// Dual description of a character table's spectracone: the rows generate
/// it, and facet row i has coefficients `|cl_k| * chi_i(g_k)`.
#[derive(Clone, Debug)]
pub struct ConeDescription {
    pub generators: CMat,
    pub facet_coeffs: CMat,
}

impl ConeDescription {
    pub fn n(&self) -> usize {
        self.facet_coeffs.nrows()
    }

    pub fn facet_values(&self, x: &[C64]) -> Vec<C64> {
        (0..self.n())
            .map(|i| {
                self.facet_coeffs
                    .row(i)
                    .iter()
                    .zip(x)
                    .map(|(&c, &xk)| c * xk)
                    .sum()
            })
            .collect()
    }

    /// Membership by the reduced inequality system alone.
    pub fn membership(&self, x: &[C64], tol: f64) -> MembershipVerdict {
        let values = self.facet_values(x);
        for (i, v) in values.iter().enumerate() {
            if v.im.abs() > SPECTRUM_TOL {
                return MembershipVerdict {
                    member: false,
                    witness: Witness::NonRealFacet { facet: i, value: *v },
                };
            }
            if v.re < -tol {
                return MembershipVerdict {
                    member: false,
                    witness: Witness::FacetViolation { facet: i, value: v.re },
                };
            }
        }
        MembershipVerdict {
            member: true,
            witness: Witness::FacetValues(values.iter().map(|v| v.re).collect()),
        }
    }

    /// Human-readable inequality listing, one `... >= 0` line per facet.
    pub fn inequality_strings(&self) -> Vec<String> {
        (0..self.n())
            .map(|i| {
                let mut terms = String::new();
                for (k, &c) in self.facet_coeffs.row(i).iter().enumerate() {
                    if c == ZERO {
                        continue;
                    }
                    let (sign, mag) = if c.im == 0.0 && c.re < 0.0 {
                        ("-", -c)
                    } else {
                        ("+", c)
                    };
                    if terms.is_empty() {
                        if sign == "-" {
                            terms.push('-');
                        }
                    } else {
                        terms.push_str(if sign == "-" { " - " } else { " + " });
                    }
                    let coeff = crate::fmt_complex(mag);
                    if coeff == "1" {
                        terms.push_str(&format!("x{}", k + 1));
                    } else if mag.im == 0.0 {
                        terms.push_str(&format!("{}x{}", coeff, k + 1));
                    } else {
                        terms.push_str(&format!("({})x{}", coeff, k + 1));
                    }
                }
                if terms.is_empty() {
                    terms.push('0');
                }
                format!("{terms} >= 0")
            })
            .collect()
    }
}

/// The reduced inequality system of a character table: `M_x(Q) >= 0` holds
/// exactly when the n facet rows `sum_k |cl_k| chi_i(g_k) x_k` are all
/// nonnegative.
pub fn reduced_inequalities(q: &CharacterTable) -> ConeDescription {
    let n = q.n();
    let facet_coeffs =
        CMat::from_fn(n, n, |i, k| q.entry(i, k) * q.class_sizes()[k] as f64);
    ConeDescription { generators: q.entries().clone(), facet_coeffs }
}

/// Nonnegative coefficients expressing `|G| * [M_x]_{ij}` as a combination
/// of the reduced facets, verified identically on the standard basis.
pub fn redundancy_certificate(q: &CharacterTable, i: usize, j: usize) -> Result<Vec<f64>> {
    let coeffs = tensor_multiplicities(q, i, j, true)?;
    let cone = reduced_inequalities(q);
    let sim = Similarity::from_table(q);
    let n = q.n();
    let order = q.group_order() as f64;
    for b in 0..n {
        let mut x = vec![ZERO; n];
        x[b] = ONE;
        let m = sim.similarity_product(&x);
        let facets = cone.facet_values(&x);
        let combo: C64 = facets.iter().zip(&coeffs).map(|(&f, &c)| f * c).sum();
        if (m[(i, j)] * order - combo).norm() > EPS * (1.0 + order) {
            return Err(Error::TableCorrupt(format!(
                "redundancy certificate fails on basis vector {b}"
            )));
        }
    }
    Ok(coeffs)
}

#[derive(Clone, Debug)]
pub struct PerronCheck {
    pub holds: bool,
    pub witness: Option<usize>,
    pub qualifying: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RhcCheck {
    pub holds: bool,
    pub first_failing: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct IdealCheck {
    pub holds: bool,
    pub all_ones_in_row_cone: bool,
    pub rhc: RhcCheck,
}

impl IdealCheck {
    pub fn diagnosis(&self) -> String {
        if self.holds {
            return "ideal".into();
        }
        let mut reasons = Vec::new();
        if !self.all_ones_in_row_cone {
            reasons.push("all-ones vector is outside the row cone".to_string());
        }
        if let Some((i, j)) = self.rhc.first_failing {
            reasons.push(format!(
                "Hadamard product of rows {} and {} leaves the row cone",
                i + 1,
                j + 1
            ));
        }
        format!("not ideal: {}", reasons.join("; "))
    }
}

/// Report of the four classical necessary conditions on a candidate
/// spectrum: (1) the spectral radius is attained by a real entry, (2)
/// self-conjugacy, (3) nonnegative power sums, (4) the power-sum
/// inequalities `s_k^l <= n^(l-1) s_kl`.
#[derive(Clone, Debug)]
pub struct NecessaryReport {
    pub radius_attained: bool,
    pub self_conjugate: bool,
    pub first_negative_power_sum: Option<(u32, f64)>,
    pub first_jll_failure: Option<(u32, u32, f64, f64)>,
}

impl NecessaryReport {
    pub fn all_pass(&self) -> bool {
        self.radius_attained
            && self.self_conjugate
            && self.first_negative_power_sum.is_none()
            && self.first_jll_failure.is_none()
    }
}

impl std::fmt::Display for NecessaryReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "condition (1) spectral radius attained: {}",
            if self.radius_attained { "pass" } else { "FAIL" }
        )?;
        writeln!(
            f,
            "condition (2) self-conjugacy: {}",
            if self.self_conjugate { "pass" } else { "FAIL" }
        )?;
        match self.first_negative_power_sum {
            None => writeln!(f, "condition (3) power sums nonnegative: pass")?,
            Some((k, v)) => writeln!(
                f,
                "condition (3) power sums nonnegative: FAIL at k={k} (s_k = {})",
                crate::fmt_f64(v)
            )?,
        }
        match self.first_jll_failure {
            None => write!(f, "condition (4) power-sum inequalities: pass"),
            Some((k, l, lhs, rhs)) => write!(
                f,
                "condition (4) power-sum inequalities: FAIL at (k={k}, l={l}): {} > {}",
                crate::fmt_f64(lhs),
                crate::fmt_f64(rhs)
            ),
        }
    }
}

pub fn necessary_conditions(x: &[C64], max_power: u32) -> NecessaryReport {
    let n = x.len();
    let rho = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let radius_attained = x.iter().any(|z| (z - C64::new(rho, 0.0)).norm() <= SPECTRUM_TOL);

    let conj: Vec<C64> = x.iter().map(|z| z.conj()).collect();
    let self_conjugate = multisets_close(x, &conj, SPECTRUM_TOL);

    let mut power_sums = vec![C64::new(n as f64, 0.0)]; // s_0
    let mut powers: Vec<C64> = vec![ONE; n];
    for _ in 1..=max_power {
        for (p, &xi) in powers.iter_mut().zip(x) {
            *p *= xi;
        }
        power_sums.push(powers.iter().sum());
    }
    let mut first_negative_power_sum = None;
    for k in 1..=max_power {
        let s = power_sums[k as usize];
        if s.re < -EPS || s.im.abs() > SPECTRUM_TOL {
            first_negative_power_sum = Some((k, s.re));
            break;
        }
    }
    let mut first_jll_failure = None;
    'outer: for k in 1..=max_power {
        for l in 2..=max_power {
            if k * l > max_power {
                break;
            }
            let sk = power_sums[k as usize].re;
            let skl = power_sums[(k * l) as usize].re;
            let lhs = sk.powi(l as i32);
            let rhs = (n as f64).powi(l as i32 - 1) * skl;
            if lhs > rhs + EPS {
                first_jll_failure = Some((k, l, lhs, rhs));
                break 'outer;
            }
        }
    }
    NecessaryReport { radius_attained, self_conjugate, first_negative_power_sum, first_jll_failure }
}

/// Parses a comma-separated list of complex literals such as
/// `1, -0.5+0.2i, 2i, -i`.
pub fn parse_spectrum(text: &str) -> Result<Vec<C64>> {
    text.split(',')
        .map(|tok| parse_complex(tok.trim()))
        .collect()
}

fn parse_complex(token: &str) -> Result<C64> {
    let bad = || Error::InvalidSpec(format!("cannot parse complex literal '{token}'"));
    if token.is_empty() {
        return Err(bad());
    }
    if let Some(imag_part) = token.strip_suffix(['i', 'I']) {
        // Split an optional real part from the imaginary coefficient at the
        // last sign that is not an exponent marker.
        let bytes = imag_part.as_bytes();
        let mut split = None;
        for pos in (1..bytes.len()).rev() {
            let b = bytes[pos];
            if (b == b'+' || b == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
                split = Some(pos);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(pos) => (&imag_part[..pos], &imag_part[pos..]),
            None => ("", imag_part),
        };
        let re = if re_str.is_empty() { 0.0 } else { re_str.parse().map_err(|_| bad())? };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            s => s.parse().map_err(|_| bad())?,
        };
        Ok(C64::new(re, im))
    } else {
        Ok(C64::new(token.parse().map_err(|_| bad())?, 0.0))
    }
}

/// Strong connectivity of the digraph on entries above tolerance.
/// Singletons count as irreducible.
pub fn is_irreducible(m: &[Vec<f64>]) -> bool {
    let n = m.len();
    if n <= 1 {
        return true;
    }
    let adjacency = |i: usize| {
        m[i].iter()
            .enumerate()
            .filter(|&(_, &v)| v > EPS)
            .map(|(j, _)| j)
            .collect::<Vec<_>>()
    };
    let reaches_all = |transpose: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in 0..n {
                let edge = if transpose { m[u][v] > EPS } else { m[v][u] > EPS };
                if edge && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        let _ = adjacency;
        count == n
    };
    reaches_all(false) && reaches_all(true)
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    /// True when the table was real and symmetry was checked; false means
    /// the normality residue was checked instead.
    pub checked_symmetry: bool,
    pub max_deviation: f64,
}

/// For `x` in the spectracone of `Q`: the realizing matrix is symmetric
/// when the table is real and normal otherwise.
pub fn structure_check(q: &CharacterTable, x: &[C64]) -> Result<StructureReport> {
    let sim = Similarity::from_table(q);
    let m = sim.similarity_product(x);
    if q.is_real() {
        let mut dev = 0.0f64;
        let n = q.n();
        for i in 0..n {
            for j in 0..n {
                dev = dev.max((m[(i, j)] - m[(j, i)]).norm());
            }
        }
        if dev > EPS {
            return Err(Error::TableCorrupt(format!(
                "realizing matrix of a real table is not symmetric: deviation {dev:.3e}"
            )));
        }
        Ok(StructureReport { checked_symmetry: true, max_deviation: dev })
    } else {
        let mh = m.adjoint();
        let left = mh.matmul(&m);
        let right = m.matmul(&mh);
        let dev = left.max_abs_diff(&right);
        if dev > EPS * (1.0 + left.max_abs()) {
            return Err(Error::TableCorrupt(format!(
                "realizing matrix of a complex table is not normal: deviation {dev:.3e}"
            )));
        }
        Ok(StructureReport { checked_symmetry: false, max_deviation: dev })
    }
}
