//! Simplex volumes, coordinate projections, and the closed-form volume of
//! the projected spectratope of a real character table, compared against
//! the trace-nonnegative polytope that bounds all realizable real spectra.

use crate::chartab::CharacterTable;
use crate::linalg::det_real;
use crate::{Error, Result, EPS};
use std::path::Path;

/// `m + 1` points in real m-space; volume by the bordered determinant.
#[derive(Clone, Debug)]
pub struct Simplex {
    vertices: Vec<Vec<f64>>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vec<f64>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::SizeMismatch("a simplex needs at least one vertex".into()));
        }
        let dim = vertices[0].len();
        if vertices.len() != dim + 1 {
            return Err(Error::SizeMismatch(format!(
                "{} vertices given for dimension {dim}; need {}",
                vertices.len(),
                dim + 1
            )));
        }
        if vertices.iter().any(|v| v.len() != dim) {
            return Err(Error::SizeMismatch("vertices have mixed dimensions".into()));
        }
        Ok(Simplex { vertices })
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// `(1/m!) |det [1 v_i]|`; degenerate input yields 0.
    pub fn volume(&self) -> f64 {
        let m = self.vertices.len() - 1;
        if m == 0 {
            return 1.0;
        }
        let bordered: Vec<Vec<f64>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut row = Vec::with_capacity(m + 1);
                row.push(1.0);
                row.extend_from_slice(v);
                row
            })
            .collect();
        det_real(&bordered).abs() / factorial(m)
    }

    pub fn is_degenerate(&self) -> bool {
        self.volume() <= EPS
    }
}

pub fn simplex_volume(vertices: &[Vec<f64>]) -> Result<f64> {
    Ok(Simplex::new(vertices.to_vec())?.volume())
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|k| k as f64).product()
}

/// Deletes coordinate `k` (0-based).
pub fn project_drop(x: &[f64], k: usize) -> Result<Vec<f64>> {
    if k >= x.len() {
        return Err(Error::IndexOutOfRange { index: k, n: x.len() });
    }
    Ok(x.iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, &v)| v)
        .collect())
}

/// Volume of the projected spectratope of a real character table, computed
/// both by the closed form and by the simplex determinant on the projected
/// rescaled rows.
#[derive(Clone, Debug)]
pub struct VolumeReport {
    pub formula_value: f64,
    pub determinant_value: f64,
    pub ratio_to_trace_polytope: f64,
}

pub fn spectratope_volume(q: &CharacterTable) -> Result<VolumeReport> {
    if !q.is_real() {
        return Err(Error::RealTableRequired { max_imag: q.entries().max_imag() });
    }
    let n = q.n();
    // Closed form: sqrt(prod |C_G(g_k)|) / ((n-1)! prod degrees).
    let cent_product: f64 = q.centralizer_orders().iter().map(|&c| c as f64).product();
    let degree_product: f64 = q.degrees().iter().map(|&d| d as f64).product();
    let formula_value = cent_product.sqrt() / (factorial(n - 1) * degree_product);

    // Determinant route: project away the first coordinate of the rows of
    // the table rescaled so its first column is all ones.
    let projected = projected_vertices(q)?;
    let determinant_value = Simplex::new(projected)?.volume();
    if (formula_value - determinant_value).abs() > 1e-9 * formula_value.max(1.0) {
        return Err(Error::NumericalDegeneracy(format!(
            "volume routes disagree: formula {formula_value}, determinant {determinant_value}"
        )));
    }
    let ratio_to_trace_polytope = formula_value / trace_polytope_volume(n - 1);
    Ok(VolumeReport { formula_value, determinant_value, ratio_to_trace_polytope })
}

/// Rows of `D_v^-1 Q` (v = degree column) with coordinate 0 projected away:
/// the vertices of the projected spectratope.
pub fn projected_vertices(q: &CharacterTable) -> Result<Vec<Vec<f64>>> {
    if !q.is_real() {
        return Err(Error::RealTableRequired { max_imag: q.entries().max_imag() });
    }
    let n = q.n();
    (0..n)
        .map(|i| {
            let d = q.degrees()[i] as f64;
            let row: Vec<f64> = q.row(i).iter().map(|z| z.re / d).collect();
            project_drop(&row, 0)
        })
        .collect()
}

/// Volume of the polytope of real vectors `(x_1..x_m)` with every
/// coordinate in [-1, 1] and `1 + sum x_k >= 0`.
pub fn trace_polytope_volume(m: usize) -> f64 {
    let mut correction = 0.0;
    let mut k = 0i64;
    while 2 * k <= m as i64 - 1 {
        let term = binomial(m, k as usize) * ((m as f64 - 1.0) / 2.0 - k as f64).powi(m as i32);
        correction += if k % 2 == 0 { term } else { -term };
        k += 1;
    }
    2f64.powi(m as i32) * (1.0 - correction / factorial(m))
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
}

/// Fraction of the trace-nonnegative polytope filled by the projected
/// spectratope.
pub fn occupancy_ratio(q: &CharacterTable) -> Result<f64> {
    Ok(spectratope_volume(q)?.ratio_to_trace_polytope)
}

/// Plot data for 3- and 4-class real tables: the projected spectratope
/// vertices and the vertices of the surrounding trace-nonnegative polytope.
pub fn plot_data(q: &CharacterTable) -> Result<String> {
    if !q.is_real() {
        return Err(Error::RealTableRequired { max_imag: q.entries().max_imag() });
    }
    let n = q.n();
    if n != 3 && n != 4 {
        return Err(Error::UnsupportedDimension { n });
    }
    let mut out = format!("dim={}\n", n - 1);
    out.push_str("spectratope:\n");
    for v in projected_vertices(q)? {
        let coords: Vec<String> = v.iter().map(|&c| crate::fmt_f64(c)).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out.push_str("feasible:\n");
    for v in feasible_region_vertices(n - 1) {
        let coords: Vec<String> = v.iter().map(|&c| crate::fmt_f64(c)).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    Ok(out)
}

pub fn emit_plot_data(q: &CharacterTable, path: &Path) -> Result<()> {
    let data = plot_data(q)?;
    std::fs::write(path, data)?;
    Ok(())
}

/// Vertices of the trace-nonnegative polytope: the cube corners surviving
/// the half-space `1 + sum x_k >= 0`. For m = 2 that cuts one corner off
/// the square (a pentagon); for m = 3 exactly the corner (-1,-1,-1) drops.
fn feasible_region_vertices(m: usize) -> Vec<Vec<f64>> {
    match m {
        2 => vec![
            vec![1.0, 1.0],
            vec![-1.0, 1.0],
            vec![-1.0, 0.0],
            vec![0.0, -1.0],
            vec![1.0, -1.0],
        ],
        3 => {
            let mut vertices = Vec::new();
            for corner in 0..8u32 {
                let v: Vec<f64> =
                    (0..3).map(|b| if corner >> b & 1 == 1 { 1.0 } else { -1.0 }).collect();
                if v.iter().sum::<f64>() >= -1.0 {
                    vertices.push(v);
                }
            }
            vertices
        }
        _ => unreachable!("plot data is limited to m in {{2, 3}}"),
    }
}
