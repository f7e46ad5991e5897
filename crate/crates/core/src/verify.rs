//! The built-in verification suite: golden character tables, the
//! Perron/ideal battery over the whole catalog, facet systems and their
//! redundancy certificates, volumes, seeded spectrum properties, the
//! twisted-Hadamard counterexample, the strict-inclusion example, and the
//! extremality checks. The command-line `verify` subcommand prints one line
//! per check.

use crate::builtin;
use crate::chartab::{
    burnside_table_seeded, dephased_f4_theta, dft_table, tensor_multiplicities, walsh_table,
    CharacterTable,
};
use crate::extremal::{
    abelian_factorization, conjecture_probe, factorization_label, factorization_table, farey,
    is_totally_extremal,
};
use crate::geometry::{spectratope_volume, trace_polytope_volume};
use crate::group::FiniteGroup;
use crate::linalg::{eigenvalues, multisets_close, CMat, C64, ONE, ZERO};
use crate::matching::tables_equivalent;
use crate::perron::{
    necessary_conditions, redundancy_certificate, reduced_inequalities, Similarity,
};
use crate::{DEFAULT_SEED, EPS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub tolerance: f64,
    pub seed: u64,
    pub only: Option<String>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { tolerance: EPS, seed: DEFAULT_SEED, only: None }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

fn push(out: &mut Vec<CheckResult>, name: &str, outcome: Outcome) {
    match outcome {
        Ok(detail) => out.push(CheckResult { name: name.into(), passed: true, detail }),
        Err(detail) => out.push(CheckResult { name: name.into(), passed: false, detail }),
    }
}

fn enabled(cfg: &VerifyConfig, section: &str) -> bool {
    match &cfg.only {
        None => true,
        Some(filter) => section.starts_with(filter.as_str()) || filter.starts_with(section),
    }
}

/// Runs every enabled check and returns the per-check results.
pub fn run(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let needs_catalog = ["tables", "perron", "spectrum", "volumes", "extremal"]
        .iter()
        .any(|s| enabled(cfg, s));
    let catalog: Vec<(FiniteGroup, CharacterTable)> = if needs_catalog {
        match build_catalog_tables(cfg) {
            Ok(pairs) => pairs,
            Err(detail) => {
                push(&mut out, "tables/catalog-build", Err(detail));
                return out;
            }
        }
    } else {
        Vec::new()
    };

    if enabled(cfg, "tables") {
        push(&mut out, "tables/golden-z2", golden_z2(cfg));
        push(&mut out, "tables/golden-v4", golden_v4(cfg));
        push(&mut out, "tables/golden-sym3", golden_sym3(cfg));
        push(&mut out, "tables/invariants", table_invariants(cfg, &catalog));
        push(&mut out, "tables/abelian-kron", abelian_kron(&catalog));
    }
    if enabled(cfg, "perron") {
        push(&mut out, "perron/catalog", perron_suite(cfg, &catalog));
    }
    if enabled(cfg, "inequalities") {
        push(&mut out, "inequalities/sym3", inequalities_sym3());
        push(&mut out, "inequalities/h4", inequalities_h4());
        push(&mut out, "inequalities/z2", inequalities_z2());
        push(&mut out, "inequalities/redundancy", redundancy_checks());
        push(&mut out, "inequalities/equivalence", facet_equivalence(cfg));
    }
    if enabled(cfg, "volumes") {
        push(&mut out, "volumes/sym3", volumes_sym3(cfg));
        push(&mut out, "volumes/v4", volumes_v4());
        push(&mut out, "volumes/z2", volumes_z2());
        push(&mut out, "volumes/trace-polytope", volumes_trace());
        push(&mut out, "volumes/formula-determinant", volumes_all_real(&catalog));
    }
    if enabled(cfg, "spectrum") {
        push(&mut out, "spectrum/catalog", spectrum_suite(cfg, &catalog));
    }
    if enabled(cfg, "counterexample") {
        push(&mut out, "counterexample/f4-theta", counterexample_f4());
    }
    if enabled(cfg, "inclusion") {
        push(&mut out, "inclusion/strict-example", strict_inclusion());
    }
    if enabled(cfg, "extremal") {
        push(&mut out, "extremal/totally-extremal", totally_extremal_checks(&catalog));
        push(&mut out, "extremal/farey-count", farey_counts());
        push(&mut out, "extremal/probe-abelian", probe_abelian(&catalog));
    }
    // Section gating above is coarse; apply the filter to full check names.
    out.retain(|r| enabled(cfg, &r.name));
    out
}

fn build_catalog_tables(
    cfg: &VerifyConfig,
) -> std::result::Result<Vec<(FiniteGroup, CharacterTable)>, String> {
    builtin::catalog()
        .into_iter()
        .map(|g| {
            let table = burnside_table_seeded(&g, cfg.seed)
                .map_err(|e| format!("table of {} failed: {e}", g.label()))?;
            Ok((g, table))
        })
        .collect()
}

/// The textbook 3-class table with columns ordered identity,
/// transpositions, 3-cycles.
fn sym3_reference_table() -> CharacterTable {
    let entries = CMat::from_real_rows(&[
        vec![1.0, 1.0, 1.0],
        vec![1.0, -1.0, 1.0],
        vec![2.0, 0.0, -1.0],
    ]);
    CharacterTable::from_parts(entries, vec![1, 3, 2], vec![6, 2, 3], "Sym(3)").unwrap()
}

fn golden_z2(cfg: &VerifyConfig) -> Outcome {
    let z2 = FiniteGroup::cyclic(2).map_err(|e| e.to_string())?;
    let q = burnside_table_seeded(&z2, cfg.seed).map_err(|e| e.to_string())?;
    let h2 = walsh_table(2).map_err(|e| e.to_string())?;
    let diff = q.entries().max_abs_diff(h2.entries());
    if diff <= 1e-8 {
        Ok(format!("table equals H2 (max deviation {diff:.2e})"))
    } else {
        Err(format!("table deviates from H2 by {diff:.2e}"))
    }
}

fn golden_v4(cfg: &VerifyConfig) -> Outcome {
    let z2 = FiniteGroup::cyclic(2).map_err(|e| e.to_string())?;
    let v4 = z2.direct_product(&z2).map_err(|e| e.to_string())?;
    let q = burnside_table_seeded(&v4, cfg.seed).map_err(|e| e.to_string())?;
    let h4 = walsh_table(4).map_err(|e| e.to_string())?;
    if tables_equivalent(&q, &h4, 1e-8) {
        Ok("table matches H4 up to permutation".into())
    } else {
        Err("table does not match H4".into())
    }
}

fn golden_sym3(cfg: &VerifyConfig) -> Outcome {
    let s3 = builtin::symmetric(3).map_err(|e| e.to_string())?;
    let q = burnside_table_seeded(&s3, cfg.seed).map_err(|e| e.to_string())?;
    if tables_equivalent(&q, &sym3_reference_table(), 1e-8) {
        Ok("table matches the reference 3x3 table up to permutation".into())
    } else {
        Err("table does not match the reference 3x3 table".into())
    }
}

fn table_invariants(cfg: &VerifyConfig, catalog: &[(FiniteGroup, CharacterTable)]) -> Outcome {
    for (g, q) in catalog {
        q.validate(cfg.tolerance)
            .map_err(|e| format!("{}: {e}", g.label()))?;
    }
    Ok(format!("{} tables validated at tolerance {:.1e}", catalog.len(), cfg.tolerance))
}

fn abelian_kron(catalog: &[(FiniteGroup, CharacterTable)]) -> Outcome {
    let mut count = 0;
    for (g, q) in catalog.iter().filter(|(g, _)| g.is_abelian()) {
        let factors = abelian_factorization(g).map_err(|e| e.to_string())?;
        let rebuilt = factorization_table(&factors).map_err(|e| e.to_string())?;
        if !tables_equivalent(q, &rebuilt, 1e-8) {
            return Err(format!("{}: Kronecker form does not match", g.label()));
        }
        count += 1;
    }
    Ok(format!("{count} abelian tables match their Kronecker form"))
}

fn perron_suite(cfg: &VerifyConfig, catalog: &[(FiniteGroup, CharacterTable)]) -> Outcome {
    for (g, q) in catalog {
        let sim = Similarity::from_table(q);
        let perron = sim.is_perron_similarity();
        if !perron.holds || perron.witness != Some(0) {
            return Err(format!("{}: not a Perron similarity with witness column 1", g.label()));
        }
        let mut e1 = vec![ZERO; q.n()];
        e1[0] = ONE;
        let realized = sim.realize(&e1).map_err(|e| format!("{}: {e}", g.label()))?;
        if realized.min_entry() <= 0.0 {
            return Err(format!(
                "{}: realization of e1 is not strictly positive (min {})",
                g.label(),
                realized.min_entry()
            ));
        }
        if !sim.is_ideal(cfg.tolerance).holds {
            return Err(format!("{}: table is not ideal", g.label()));
        }
        for i in 0..q.n() {
            for j in 0..q.n() {
                let alphas = tensor_multiplicities(q, i, j, true)
                    .map_err(|e| format!("{}: {e}", g.label()))?;
                for (l, a) in alphas.iter().enumerate() {
                    if (a - a.round()).abs() > 1e-6 || a.round() < 0.0 {
                        return Err(format!(
                            "{}: multiplicity ({i},{j})->{l} = {a} is not a nonnegative integer",
                            g.label()
                        ));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} tables: Perron witness 1, positive e1 realization, ideal, integral multiplicities",
        catalog.len()
    ))
}

fn inequalities_sym3() -> Outcome {
    let cone = reduced_inequalities(&sym3_reference_table());
    let expect = CMat::from_real_rows(&[
        vec![1.0, 3.0, 2.0],
        vec![1.0, -3.0, 2.0],
        vec![2.0, 0.0, -2.0],
    ]);
    let diff = cone.facet_coeffs.max_abs_diff(&expect);
    if diff <= 1e-12 {
        Ok("facets are x1+3x2+2x3, x1-3x2+2x3, 2(x1-x3)".into())
    } else {
        Err(format!("facet coefficients deviate by {diff:.2e}"))
    }
}

fn inequalities_h4() -> Outcome {
    let h4 = walsh_table(4).map_err(|e| e.to_string())?;
    let cone = reduced_inequalities(&h4);
    let diff = cone.facet_coeffs.max_abs_diff(h4.entries());
    if diff <= 1e-12 {
        Ok("facets are the four sign patterns of H4".into())
    } else {
        Err(format!("facet coefficients deviate by {diff:.2e}"))
    }
}

fn inequalities_z2() -> Outcome {
    let h2 = walsh_table(2).map_err(|e| e.to_string())?;
    let cone = reduced_inequalities(&h2);
    let expect = CMat::from_real_rows(&[vec![1.0, 1.0], vec![1.0, -1.0]]);
    let diff = cone.facet_coeffs.max_abs_diff(&expect);
    if diff <= 1e-12 {
        Ok("facets are x1+x2 and x1-x2".into())
    } else {
        Err(format!("facet coefficients deviate by {diff:.2e}"))
    }
}

fn redundancy_checks() -> Outcome {
    let cert = redundancy_certificate(&sym3_reference_table(), 2, 2).map_err(|e| e.to_string())?;
    for (l, v) in cert.iter().enumerate() {
        if (v - 1.0).abs() > 1e-9 {
            return Err(format!("Sym(3) certificate entry {l} = {v}, expected 1"));
        }
    }
    let h4 = walsh_table(4).map_err(|e| e.to_string())?;
    let cert = redundancy_certificate(&h4, 1, 2).map_err(|e| e.to_string())?;
    let expect = [0.0, 0.0, 0.0, 1.0];
    for (l, (v, e)) in cert.iter().zip(expect).enumerate() {
        if (v - e).abs() > 1e-9 {
            return Err(format!("H4 certificate entry {l} = {v}, expected {e}"));
        }
    }
    Ok("Sym(3) (3,3) -> (1,1,1); H4 (2,3) -> indicator of row 4".into())
}

/// Draws either a box-uniform vector or a conical combination of rows,
/// complex when the table is.
pub(crate) fn sample_vector(rng: &mut ChaCha8Rng, q: &CharacterTable, conical: bool) -> Vec<C64> {
    let n = q.n();
    if conical {
        let coeffs: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
        (0..n)
            .map(|k| (0..n).map(|i| q.entry(i, k) * coeffs[i]).sum())
            .collect()
    } else {
        let complex = !q.is_real();
        (0..n)
            .map(|_| {
                let re = rng.gen_range(-2.0..2.0);
                let im = if complex { rng.gen_range(-2.0..2.0) } else { 0.0 };
                C64::new(re, im)
            })
            .collect()
    }
}

fn facet_equivalence(cfg: &VerifyConfig) -> Outcome {
    let tables = vec![
        sym3_reference_table(),
        walsh_table(4).map_err(|e| e.to_string())?,
        dft_table(3).map_err(|e| e.to_string())?,
    ];
    let mut total = 0usize;
    for q in &tables {
        let cone = reduced_inequalities(q);
        let sim = Similarity::from_table(q);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for trial in 0..1000 {
            let x = sample_vector(&mut rng, q, trial % 2 == 1);
            let by_facets = cone.membership(&x, cfg.tolerance).member;
            let by_entries = sim.spectracone_membership(&x, cfg.tolerance).member;
            if by_facets != by_entries {
                return Err(format!(
                    "{}: facet and entrywise verdicts disagree on trial {trial}",
                    q.group_label()
                ));
            }
            total += 1;
        }
    }
    Ok(format!("{total} verdict pairs agree across {} tables", tables.len()))
}

fn volumes_sym3(cfg: &VerifyConfig) -> Outcome {
    let s3 = builtin::symmetric(3).map_err(|e| e.to_string())?;
    let q = burnside_table_seeded(&s3, cfg.seed).map_err(|e| e.to_string())?;
    let report = spectratope_volume(&q).map_err(|e| e.to_string())?;
    if (report.formula_value - 1.5).abs() > 1e-9 {
        return Err(format!("volume {} instead of 3/2", report.formula_value));
    }
    if (report.ratio_to_trace_polytope - 3.0 / 7.0).abs() > 1e-9 {
        return Err(format!("occupancy {} instead of 3/7", report.ratio_to_trace_polytope));
    }
    Ok("V = 3/2, occupancy = 3/7".into())
}

fn volumes_v4() -> Outcome {
    let h4 = walsh_table(4).map_err(|e| e.to_string())?;
    let report = spectratope_volume(&h4).map_err(|e| e.to_string())?;
    if (report.formula_value - 8.0 / 3.0).abs() > 1e-9 {
        return Err(format!("volume {} instead of 8/3", report.formula_value));
    }
    if (report.ratio_to_trace_polytope - 0.4).abs() > 1e-9 {
        return Err(format!("occupancy {} instead of 2/5", report.ratio_to_trace_polytope));
    }
    Ok("V = 8/3, occupancy = 2/5".into())
}

fn volumes_z2() -> Outcome {
    let h2 = walsh_table(2).map_err(|e| e.to_string())?;
    let report = spectratope_volume(&h2).map_err(|e| e.to_string())?;
    if (report.formula_value - 2.0).abs() > 1e-9 {
        return Err(format!("volume {} instead of 2", report.formula_value));
    }
    if (report.ratio_to_trace_polytope - 1.0).abs() > 1e-9 {
        return Err(format!("occupancy {} instead of 1", report.ratio_to_trace_polytope));
    }
    Ok("V = 2, occupancy = 1".into())
}

fn volumes_trace() -> Outcome {
    let v2 = trace_polytope_volume(2);
    let v3 = trace_polytope_volume(3);
    if (v2 - 3.5).abs() > 1e-12 {
        return Err(format!("trace polytope area {v2} instead of 7/2"));
    }
    if (v3 - 20.0 / 3.0).abs() > 1e-12 {
        return Err(format!("trace polytope volume {v3} instead of 20/3"));
    }
    Ok("area(2) = 7/2, volume(3) = 20/3".into())
}

fn volumes_all_real(catalog: &[(FiniteGroup, CharacterTable)]) -> Outcome {
    let mut count = 0;
    for (g, q) in catalog.iter().filter(|(_, q)| q.is_real()) {
        // spectratope_volume cross-checks the closed form against the
        // determinant route internally.
        spectratope_volume(q).map_err(|e| format!("{}: {e}", g.label()))?;
        count += 1;
    }
    Ok(format!("formula and determinant agree on {count} real tables"))
}

fn spectrum_suite(cfg: &VerifyConfig, catalog: &[(FiniteGroup, CharacterTable)]) -> Outcome {
    let samples = 500usize;
    let mut checked = 0usize;
    for (index, (g, q)) in catalog.iter().enumerate() {
        let sim = Similarity::from_table(q);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
        let mut previous: Option<Vec<C64>> = None;
        for trial in 0..samples {
            let x = sample_vector(&mut rng, q, true);
            if !sim.spectracone_membership(&x, 1e-9).member {
                return Err(format!("{}: conical sample {trial} leaves the cone", g.label()));
            }
            let m = sim.similarity_product(&x);
            let evs = eigenvalues(&m).map_err(|e| format!("{}: {e}", g.label()))?;
            let scale = x.iter().map(|z| z.norm()).fold(1.0, f64::max);
            if !multisets_close(&evs, &x, 1e-7 * scale) {
                return Err(format!(
                    "{}: eigenvalues of sample {trial} do not match the spectrum",
                    g.label()
                ));
            }
            let structural_dev = if q.is_real() {
                let mut dev = 0.0f64;
                for i in 0..q.n() {
                    for j in 0..q.n() {
                        dev = dev.max((m[(i, j)] - m[(j, i)]).norm());
                    }
                }
                dev
            } else {
                let mh = m.adjoint();
                mh.matmul(&m).max_abs_diff(&m.matmul(&mh))
            };
            if structural_dev > 1e-8 * scale.max(1.0) * q.group_order() as f64 {
                return Err(format!(
                    "{}: sample {trial} violates the symmetry/normality bound ({structural_dev:.2e})",
                    g.label()
                ));
            }
            if let Some(prev) = &previous {
                let product: Vec<C64> = prev.iter().zip(&x).map(|(&a, &b)| a * b).collect();
                if !sim.spectracone_membership(&product, 1e-9).member {
                    return Err(format!(
                        "{}: Hadamard product of consecutive samples leaves the cone",
                        g.label()
                    ));
                }
            }
            previous = Some(x);
            checked += 1;
        }
    }
    Ok(format!("{checked} conical samples across {} tables", catalog.len()))
}

fn counterexample_f4() -> Outcome {
    for theta in [PI / 5.0, 1.0, 2.0] {
        let m = dephased_f4_theta(theta).map_err(|e| e.to_string())?;
        let row2: Vec<C64> = m.row(1).to_vec();
        let conj: Vec<C64> = row2.iter().map(|z| z.conj()).collect();
        let self_conjugate = multisets_close(&row2, &conj, 1e-9);
        if self_conjugate {
            return Err(format!("theta = {theta}: row 2 unexpectedly self-conjugate"));
        }
        let report = necessary_conditions(&row2, 12);
        if report.self_conjugate {
            return Err(format!("theta = {theta}: condition (2) not flagged"));
        }
        let sim = Similarity::new(m).map_err(|e| e.to_string())?;
        if sim.is_ideal(EPS).holds {
            return Err(format!("theta = {theta}: matrix wrongly judged ideal"));
        }
    }
    let sim = Similarity::new(dephased_f4_theta(0.0).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    if !sim.is_ideal(EPS).holds {
        return Err("theta = 0: matrix should be ideal".into());
    }
    Ok("non-ideal for theta in {pi/5, 1, 2}; ideal at theta = 0".into())
}

fn strict_inclusion() -> Outcome {
    let s = CMat::from_real_rows(&[vec![1.0, 1.0], vec![2.0, -2.0]]);
    let sim = Similarity::new(s).map_err(|e| e.to_string())?;
    let mut accepted = Vec::new();
    for i in 0..=40 {
        for j in 0..=40 {
            let x = vec![
                C64::new((i as f64 - 20.0) / 20.0, 0.0),
                C64::new((j as f64 - 20.0) / 20.0, 0.0),
            ];
            if sim.spectratope_membership(&x, EPS).member {
                accepted.push((x[0].re, x[1].re));
            }
        }
    }
    if accepted != vec![(1.0, 1.0)] {
        return Err(format!("spectratope accepted {:?} instead of only (1,1)", accepted));
    }
    let rescaled = sim.rescale_stochastic(0).map_err(|e| e.to_string())?;
    let h2 = walsh_table(2).map_err(|e| e.to_string())?;
    if rescaled.max_abs_diff(h2.entries()) > 1e-12 {
        return Err("rescaling did not produce H2".into());
    }
    let rescaled_sim = Similarity::new(rescaled).map_err(|e| e.to_string())?;
    if !rescaled_sim.is_ideal(EPS).holds {
        return Err("rescaled matrix H2 should be ideal".into());
    }
    Ok("only (1,1) on the 41x41 grid is stochastic; rescaling gives the ideal H2".into())
}

fn totally_extremal_checks(catalog: &[(FiniteGroup, CharacterTable)]) -> Outcome {
    let mut count = 0;
    for (g, q) in catalog {
        let check = is_totally_extremal(q.entries());
        if g.is_abelian() && !check.holds {
            return Err(format!("{}: abelian table should be totally extremal", g.label()));
        }
        if g.is_abelian() {
            count += 1;
        }
    }
    let sym3 = is_totally_extremal(sym3_reference_table().entries());
    if sym3.holds {
        return Err("Sym(3) table wrongly judged totally extremal".into());
    }
    Ok(format!("{count} abelian tables totally extremal; Sym(3) is not"))
}

fn farey_counts() -> Outcome {
    let totient = |n: u64| -> u64 {
        (1..=n)
            .filter(|&k| {
                let (mut a, mut b) = (n, k);
                while b != 0 {
                    let t = a % b;
                    a = b;
                    b = t;
                }
                a == 1
            })
            .count() as u64
    };
    for n in 1..=50 {
        let expect = 1 + (1..=n).map(totient).sum::<u64>();
        let got = farey(n).len() as u64;
        if got != expect {
            return Err(format!("|F_{n}| = {got}, expected {expect}"));
        }
    }
    Ok("Farey counts match the totient sums for n <= 50".into())
}

fn probe_abelian(catalog: &[(FiniteGroup, CharacterTable)]) -> Outcome {
    let mut count = 0;
    for (g, q) in catalog.iter().filter(|(g, _)| g.is_abelian()) {
        let report = conjecture_probe(q.entries()).map_err(|e| e.to_string())?;
        if !report.all_hold() {
            return Err(format!("{}: probe hypotheses do not all hold", g.label()));
        }
        let factors = abelian_factorization(g).map_err(|e| e.to_string())?;
        let expect = factorization_label(&factors);
        if report.matched_group.as_deref() != Some(expect.as_str()) {
            return Err(format!(
                "{}: probe matched {:?}, expected {expect}",
                g.label(),
                report.matched_group
            ));
        }
        count += 1;
    }
    Ok(format!("{count} abelian tables matched to their groups"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_filter_selects_sections() {
        let cfg = VerifyConfig { only: Some("volumes".into()), ..Default::default() };
        let results = run(&cfg);
        assert!(!results.is_empty());
        assert!(results.iter().all(|r| r.name.starts_with("volumes/")));
        assert!(results.iter().all(|r| r.passed), "{results:?}");
    }

    #[test]
    fn inequality_checks_pass() {
        let cfg = VerifyConfig { only: Some("inequalities".into()), ..Default::default() };
        let results = run(&cfg);
        assert_eq!(results.len(), 5);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn counterexample_and_inclusion_pass() {
        for section in ["counterexample", "inclusion"] {
            let cfg = VerifyConfig { only: Some(section.into()), ..Default::default() };
            let results = run(&cfg);
            assert!(results.iter().all(|r| r.passed), "{results:?}");
        }
    }

    #[test]
    fn impossible_tolerance_fails_table_invariants() {
        let cfg = VerifyConfig {
            tolerance: 1e-17,
            only: Some("tables/invariants".into()),
            ..Default::default()
        };
        let results = run(&cfg);
        assert_eq!(results.len(), 1, "{results:?}");
        assert_eq!(results[0].name, "tables/invariants");
        assert!(!results[0].passed);
    }
}
