//! Acceptance suite: every golden value and batch property the toolkit is
//! expected to reproduce, one test per criterion, each printing a PASS line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectracone::builtin;
use spectracone::chartab::{
    burnside_table, dephased_f4_theta, tensor_multiplicities, walsh_table, CharacterTable,
};
use spectracone::extremal::{
    abelian_factorization, conjecture_probe, factorization_label, farey, is_totally_extremal,
};
use spectracone::geometry::{spectratope_volume, trace_polytope_volume};
use spectracone::group::FiniteGroup;
use spectracone::linalg::{eigenvalues, multisets_close, CMat, C64, ONE, ZERO};
use spectracone::matching::tables_equivalent;
use spectracone::perron::{
    necessary_conditions, redundancy_certificate, reduced_inequalities, Similarity,
};
use spectracone::{DEFAULT_SEED, EPS};
use std::f64::consts::PI;

fn sym3_reference_table() -> CharacterTable {
    let entries = CMat::from_real_rows(&[
        vec![1.0, 1.0, 1.0],
        vec![1.0, -1.0, 1.0],
        vec![2.0, 0.0, -1.0],
    ]);
    CharacterTable::from_parts(entries, vec![1, 3, 2], vec![6, 2, 3], "Sym(3)").unwrap()
}

fn catalog_tables() -> Vec<(FiniteGroup, CharacterTable)> {
    builtin::catalog()
        .into_iter()
        .map(|g| {
            let q = burnside_table(&g).unwrap_or_else(|e| panic!("{}: {e}", g.label()));
            (g, q)
        })
        .collect()
}

fn conical_sample(rng: &mut ChaCha8Rng, q: &CharacterTable) -> Vec<C64> {
    let n = q.n();
    let coeffs: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
    (0..n).map(|k| (0..n).map(|i| q.entry(i, k) * coeffs[i]).sum()).collect()
}

fn box_sample(rng: &mut ChaCha8Rng, n: usize, complex: bool) -> Vec<C64> {
    (0..n)
        .map(|_| {
            let re = rng.gen_range(-2.0..2.0);
            let im = if complex { rng.gen_range(-2.0..2.0) } else { 0.0 };
            C64::new(re, im)
        })
        .collect()
}

#[test]
fn criterion_1_character_table_goldens() {
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let q = burnside_table(&z2).unwrap();
    let h2 = walsh_table(2).unwrap();
    assert!(q.entries().max_abs_diff(h2.entries()) <= 1e-8, "Z2 table is not H2");

    let v4 = z2.direct_product(&z2).unwrap();
    let q = burnside_table(&v4).unwrap();
    let h4 = walsh_table(4).unwrap();
    assert!(tables_equivalent(&q, &h4, 1e-8), "Z2+Z2 table does not match H4");

    let s3 = builtin::symmetric(3).unwrap();
    let q = burnside_table(&s3).unwrap();
    assert!(
        tables_equivalent(&q, &sym3_reference_table(), 1e-8),
        "Sym(3) table does not match the reference table"
    );
    println!("PASS [1] character-table golden tests: Z2 -> H2, Z2+Z2 -> H4, Sym(3) display");
}

#[test]
fn criterion_2_perron_ideal_suite() {
    let catalog = catalog_tables();
    assert_eq!(catalog.len(), 43, "catalog must cover every group of order <= 16 plus Sym(4)");
    for (g, q) in &catalog {
        let sim = Similarity::from_table(q);
        let perron = sim.is_perron_similarity();
        assert!(perron.holds, "{}: not a Perron similarity", g.label());
        assert_eq!(perron.witness, Some(0), "{}: witness column differs", g.label());

        let mut e1 = vec![ZERO; q.n()];
        e1[0] = ONE;
        let realized = sim.realize(&e1).unwrap();
        assert!(
            realized.min_entry() > 0.0,
            "{}: realization of e1 not strictly positive",
            g.label()
        );

        assert!(sim.is_ideal(EPS).holds, "{}: table not ideal", g.label());

        for i in 0..q.n() {
            for j in 0..q.n() {
                let alphas = tensor_multiplicities(q, i, j, true).unwrap();
                for a in &alphas {
                    assert!(
                        (a - a.round()).abs() <= 1e-6 && a.round() >= 0.0,
                        "{}: multiplicity {a} at ({i},{j})",
                        g.label()
                    );
                }
            }
        }
    }
    println!(
        "PASS [2] Perron/ideal suite: {} groups, witness column 1, positive e1 realization, \
         ideal, integral multiplicities",
        catalog.len()
    );
}

#[test]
fn criterion_3_inequality_suite() {
    let sym3 = sym3_reference_table();
    let cone = reduced_inequalities(&sym3);
    let expect = CMat::from_real_rows(&[
        vec![1.0, 3.0, 2.0],
        vec![1.0, -3.0, 2.0],
        vec![2.0, 0.0, -2.0],
    ]);
    assert!(cone.facet_coeffs.max_abs_diff(&expect) <= 1e-12, "Sym(3) facets differ");

    let h4 = walsh_table(4).unwrap();
    let cone_h4 = reduced_inequalities(&h4);
    assert!(cone_h4.facet_coeffs.max_abs_diff(h4.entries()) <= 1e-12, "H4 facets differ");

    let cert = redundancy_certificate(&sym3, 2, 2).unwrap();
    for v in &cert {
        assert!((v - 1.0).abs() <= 1e-9, "Sym(3) (3,3) certificate is not (1,1,1)");
    }

    // 1000 seeded vectors per table: the reduced system and the entrywise
    // nonnegativity of M_x must agree exactly.
    for q in [&sym3, &h4] {
        let cone = reduced_inequalities(q);
        let sim = Similarity::from_table(q);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        let mut disagreements = 0;
        for trial in 0..1000 {
            let x = if trial % 2 == 0 {
                box_sample(&mut rng, q.n(), !q.is_real())
            } else {
                conical_sample(&mut rng, q)
            };
            let by_facets = cone.membership(&x, EPS).member;
            let by_entries = sim.spectracone_membership(&x, EPS).member;
            if by_facets != by_entries {
                disagreements += 1;
            }
        }
        assert_eq!(disagreements, 0, "{}: verdicts disagree", q.group_label());
    }
    println!(
        "PASS [3] inequality suite: reference facet systems, (1,1,1) certificate, \
         2000 verdict pairs agree"
    );
}

#[test]
fn criterion_4_volume_suite() {
    let s3 = builtin::symmetric(3).unwrap();
    let q = burnside_table(&s3).unwrap();
    let report = spectratope_volume(&q).unwrap();
    assert!((report.formula_value - 1.5).abs() <= 1e-9);
    assert!((report.determinant_value - 1.5).abs() <= 1e-9);
    assert!((report.ratio_to_trace_polytope - 3.0 / 7.0).abs() <= 1e-9);

    let h4 = walsh_table(4).unwrap();
    let report = spectratope_volume(&h4).unwrap();
    assert!((report.formula_value - 8.0 / 3.0).abs() <= 1e-9);
    assert!((report.ratio_to_trace_polytope - 0.4).abs() <= 1e-9);

    assert!((trace_polytope_volume(2) - 3.5).abs() <= 1e-12);
    assert!((trace_polytope_volume(3) - 20.0 / 3.0).abs() <= 1e-12);

    println!(
        "PASS [4] volume suite: V(Sym3) = 3/2, V(Z2+Z2) = 8/3, trace polytope 7/2 and 20/3, \
         occupancy 3/7 and 2/5"
    );
}

#[test]
fn criterion_5_spectrum_property() {
    let catalog = catalog_tables();
    for (index, (g, q)) in catalog.iter().enumerate() {
        let sim = Similarity::from_table(q);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED.wrapping_add(index as u64));
        let mut previous: Option<Vec<C64>> = None;
        for trial in 0..500 {
            let x = conical_sample(&mut rng, q);
            let m = sim.similarity_product(&x);

            // Entrywise nonnegativity (and realness) of the realizing matrix.
            let verdict = sim.spectracone_membership(&x, 1e-9);
            assert!(verdict.member, "{}: sample {trial} not in cone", g.label());

            // The similarity preserves the spectrum.
            let evs = eigenvalues(&m).unwrap();
            let scale = x.iter().map(|z| z.norm()).fold(1.0, f64::max);
            assert!(
                multisets_close(&evs, &x, 1e-7 * scale),
                "{}: eigenvalues mismatch on sample {trial}",
                g.label()
            );

            // Symmetric for real tables, normal for complex ones.
            let bound = 1e-8 * scale.max(1.0) * q.group_order() as f64;
            if q.is_real() {
                for i in 0..q.n() {
                    for j in 0..q.n() {
                        assert!(
                            (m[(i, j)] - m[(j, i)]).norm() <= bound,
                            "{}: asymmetric realizing matrix",
                            g.label()
                        );
                    }
                }
            } else {
                let mh = m.adjoint();
                let dev = mh.matmul(&m).max_abs_diff(&m.matmul(&mh));
                assert!(dev <= bound, "{}: non-normal realizing matrix", g.label());
            }

            // Hadamard closure across consecutive samples.
            if let Some(prev) = &previous {
                let product: Vec<C64> = prev.iter().zip(&x).map(|(&a, &b)| a * b).collect();
                assert!(
                    sim.spectracone_membership(&product, 1e-9).member,
                    "{}: Hadamard product left the cone",
                    g.label()
                );
            }
            previous = Some(x);
        }
    }
    println!(
        "PASS [5] spectrum property: 500 conical samples per table across {} tables",
        catalog.len()
    );
}

#[test]
fn criterion_6_counterexample() {
    for theta in [PI / 5.0, 1.0, 2.0] {
        let m = dephased_f4_theta(theta).unwrap();
        let row2: Vec<C64> = m.row(1).to_vec();
        // Independent oracle: self-conjugacy of the row-2 multiset.
        let conj: Vec<C64> = row2.iter().map(|z| z.conj()).collect();
        let oracle_fails = !multisets_close(&row2, &conj, 1e-9);
        assert!(oracle_fails, "theta={theta}: oracle says row 2 is self-conjugate");

        let sim = Similarity::new(m).unwrap();
        assert!(!sim.is_ideal(EPS).holds, "theta={theta}: should not be ideal");

        let report = necessary_conditions(&row2, 12);
        assert!(!report.self_conjugate, "theta={theta}: condition (2) not flagged");
    }
    let sim = Similarity::new(dephased_f4_theta(0.0).unwrap()).unwrap();
    assert!(sim.is_ideal(EPS).holds, "theta=0 should be ideal");
    println!(
        "PASS [6] counterexample: twisted 4x4 family non-ideal for theta in {{pi/5, 1, 2}}, \
         ideal at theta = 0"
    );
}

#[test]
fn criterion_7_strict_inclusion() {
    let s = CMat::from_real_rows(&[vec![1.0, 1.0], vec![2.0, -2.0]]);
    let sim = Similarity::new(s).unwrap();
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
    assert_eq!(accepted, vec![(1.0, 1.0)], "spectratope should be trivial");

    let rescaled = sim.rescale_stochastic(0).unwrap();
    let h2 = walsh_table(2).unwrap();
    assert!(rescaled.max_abs_diff(h2.entries()) <= 1e-12);
    assert!(Similarity::new(rescaled).unwrap().is_ideal(EPS).holds);
    println!("PASS [7] strict inclusion: only (1,1) is stochastic on the grid; rescaling gives ideal H2");
}

#[test]
fn criterion_8_extremality() {
    let catalog = catalog_tables();
    let mut abelian_count = 0;
    for (g, q) in &catalog {
        if g.is_abelian() {
            assert!(
                is_totally_extremal(q.entries()).holds,
                "{}: abelian table should be totally extremal",
                g.label()
            );
            abelian_count += 1;
        }
    }
    assert!(!is_totally_extremal(sym3_reference_table().entries()).holds);

    // Farey counts against the totient sum.
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
        assert_eq!(farey(n).len() as u64, expect, "Farey count at n={n}");
    }

    // Every abelian table matches its own group through the probe.
    for (g, q) in catalog.iter().filter(|(g, _)| g.is_abelian()) {
        let report = conjecture_probe(q.entries()).unwrap();
        assert!(report.all_hold(), "{}: probe hypotheses fail", g.label());
        let expect = factorization_label(&abelian_factorization(g).unwrap());
        assert_eq!(
            report.matched_group.as_deref(),
            Some(expect.as_str()),
            "{}: wrong probe match",
            g.label()
        );
    }
    println!(
        "PASS [8] extremality: {abelian_count} abelian tables totally extremal, Farey counts \
         match, probe identifies every abelian group"
    );
}
