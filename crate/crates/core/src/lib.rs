//! Character tables of small finite groups and the polyhedral geometry of the
//! spectra they realize.
//!
//! The crate builds finite groups from Cayley tables, generators, or cyclic
//! factors, computes their character tables, and treats each table as a
//! similarity matrix whose spectracone (vectors `x` with `S D_x S^-1 >= 0`)
//! and spectratope (the stochastic slice of the cone) admit an explicit
//! facet description. On top of that sit volume formulas for projected
//! spectratopes, classical realizability checks for candidate spectra, and
//! the Farey/Karpelevič bookkeeping used to test total extremality.

pub mod builtin;
pub mod chartab;
pub mod error;
pub mod extremal;
pub mod geometry;
pub mod group;
pub mod linalg;
pub mod matching;
pub mod perron;
pub mod verify;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;

/// Global comparison tolerance for orthogonality, membership, and realness checks.
pub const EPS: f64 = 1e-9;

/// Tolerance for entry snapping and integrality of tensor multiplicities.
pub const SNAP_TOL: f64 = 1e-6;

/// Tolerance for spectrum multiset comparison and imaginary parts of realizing matrices.
pub const SPECTRUM_TOL: f64 = 1e-7;

/// Beyond this deviation from an integer a multiplicity vector marks the table corrupt.
pub const CORRUPT_TOL: f64 = 1e-4;

/// Default seed for every randomized internal (eigen-solve combinations, sampling).
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Largest group order accepted for construction and generator closure.
pub const ORDER_CAP: usize = 512;

/// Formats a float with the shortest round-trip decimal, capped at 12 significant digits.
pub fn fmt_f64(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v }; // normalize -0
    let shortest = format!("{}", v);
    let digits = shortest.chars().filter(|c| c.is_ascii_digit()).count();
    if digits <= 12 {
        return shortest;
    }
    let rounded = round_sig(v, 12);
    let mag = rounded.abs().log10().floor() as i32;
    if (-5..13).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        let mut s = format!("{rounded:.decimals$}");
        if s.contains('.') {
            while s.ends_with('0') {
                s.pop();
            }
            if s.ends_with('.') {
                s.pop();
            }
        }
        s
    } else {
        format!("{rounded:e}")
    }
}

fn round_sig(v: f64, sig: i32) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let mag = v.abs().log10().floor() as i32;
    let scale = 10f64.powi(sig - 1 - mag);
    (v * scale).round() / scale
}

/// Formats a complex value as `a`, `a+bi`, or `a-bi`.
pub fn fmt_complex(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        return fmt_f64(z.re);
    }
    let im = fmt_f64(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", fmt_f64(z.re), sign, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn short_floats_print_exactly() {
        assert_eq!(fmt_f64(0.5), "0.5");
        assert_eq!(fmt_f64(-1.0), "-1");
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(-0.0), "0");
    }

    #[test]
    fn long_floats_cap_at_twelve_digits() {
        let s = fmt_f64(1.0 / 3.0);
        let digits = s.chars().filter(|c| c.is_ascii_digit()).count();
        assert!(digits <= 13, "got {s}");
        assert!(s.starts_with("0.333333333333"), "got {s}");
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(fmt_complex(Complex64::new(1.0, 0.0)), "1");
        assert_eq!(fmt_complex(Complex64::new(0.0, -1.0)), "0-1i");
        assert_eq!(fmt_complex(Complex64::new(-0.5, 0.25)), "-0.5+0.25i");
    }
}
