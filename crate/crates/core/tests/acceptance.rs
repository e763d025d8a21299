//! Acceptance criteria 1 to 10. Each test prints one PASS/FAIL line; run with
//! `cargo test -p cartan-core --test acceptance -- --nocapture --test-threads=1`
//! to see them in order.

use std::time::{Duration, Instant};

use cartan_core::catalog::{enumerate_table, table_labels};
use cartan_core::geometry::{kappa_relation_check, product, report, SliceContext};
use cartan_core::killing::{killing_delta_sq, killing_self_consistency, perp_decomposition};
use cartan_core::oracle::{
    closure_count_oracle, inverse_oracle, kinds_up_to, simplex_max_oracle,
};
use cartan_core::scalar::{int, rat};
use cartan_core::{
    CartanPolytope, Family, GeometryReport, MetricSpec, Rational, RationalVector, RootSystem,
    RootSystemKind, SliceClassification, SpaceLabel, Table,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(n: u32, title: &str, failures: &[String], elapsed: Duration, limit: Duration) {
    let ok = failures.is_empty() && elapsed < limit;
    println!(
        "criterion {n:>2} {title}: {} ({} failures, {:.2?} of {:?})",
        if ok { "PASS" } else { "FAIL" },
        failures.len(),
        elapsed,
        limit
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
    assert!(elapsed < limit, "criterion {n} exceeded {limit:?}: {elapsed:?}");
}

fn kind(s: &str) -> RootSystemKind {
    s.parse().unwrap()
}

fn n(x: usize) -> Rational {
    int(x as i64)
}

/// `(i^2/pi^2, d^2/pi^2)` read off the published Type I rows at `eps = 1`.
fn type_one_row(label: &SpaceLabel) -> (Rational, Rational) {
    match *label {
        // i = pi n^(1/2); d = (sqrt2/2) pi n, or (sqrt2/2) pi (n^2-1)^(1/2).
        SpaceLabel::AI { n: m } => (n(m), if m % 2 == 0 { n(m * m) / int(2) } else { n(m * m - 1) / int(2) }),
        // i = 2 pi n^(1/2); d = sqrt2 pi n, or sqrt2 pi (n^2-1)^(1/2).
        SpaceLabel::AII { n: m } => (n(4 * m), if m % 2 == 0 { n(2 * m * m) } else { n(2 * (m * m - 1)) }),
        // i = pi (p+q)^(1/2); d = pi (p+q)^(1/2) p^(1/2).
        SpaceLabel::AIII { p, q } => (n(p + q), n((p + q) * p)),
        // i = pi (n+1)^(1/2); d = pi (n+1)^(1/2) n^(1/2).
        SpaceLabel::CI { n: m } => (n(m + 1), n((m + 1) * m)),
        // i = sqrt2 pi (p+q+1)^(1/2); d = sqrt2 pi (p+q+1)^(1/2) p^(1/2).
        SpaceLabel::CII { p, q } => (n(2 * (p + q + 1)), n(2 * (p + q + 1) * p)),
        SpaceLabel::BDI { p, q } => {
            if p == 1 {
                // a1 row: i = d = sqrt2 pi (q-1)^(1/2).
                (n(2 * (q - 1)), n(2 * (q - 1)))
            } else if p == q {
                // d_p row: i = sqrt2 pi (p-1)^(1/2); d = pi (p-1)^(1/2) p^(1/2).
                (n(2 * (p - 1)), n((p - 1) * p))
            } else if p <= 3 {
                // b_p row: i = pi (p+q-2)^(1/2); d = sqrt2 pi (p+q-2)^(1/2).
                (n(p + q - 2), n(2 * (p + q - 2)))
            } else {
                // d = (sqrt2/2) pi (p+q-2)^(1/2) p^(1/2).
                (n(p + q - 2), n((p + q - 2) * p) / int(2))
            }
        }
        SpaceLabel::DIII { n: m } => {
            // i = sqrt2 pi (n-1)^(1/2); d = pi (n-1)^(1/2) n^(1/2), or pi (n-1).
            (n(2 * (m - 1)), if m % 2 == 0 { n((m - 1) * m) } else { n((m - 1) * (m - 1)) })
        }
        // 2 sqrt3 pi, 4 sqrt2 pi
        SpaceLabel::EI => (n(12), n(32)),
        // 2 sqrt3 pi, 2 sqrt6 pi
        SpaceLabel::EII | SpaceLabel::EIII => (n(12), n(24)),
        // 2 sqrt6 pi, 4 sqrt2 pi
        SpaceLabel::EIV => (n(24), n(32)),
        // 3 sqrt2 pi, 3 sqrt6 pi
        SpaceLabel::EV | SpaceLabel::EVII => (n(18), n(54)),
        // 3 sqrt2 pi, 6 pi
        SpaceLabel::EVI => (n(18), n(36)),
        // sqrt30 pi, 2 sqrt15 pi
        SpaceLabel::EVIII | SpaceLabel::EIX => (n(30), n(60)),
        // 3 pi, 3 sqrt2 pi
        SpaceLabel::FI => (n(9), n(18)),
        // 3 sqrt2 pi twice
        SpaceLabel::FII => (n(18), n(18)),
        // 2 pi, (4 sqrt3 / 3) pi
        SpaceLabel::G => (n(4), rat(16, 3)),
        SpaceLabel::Group(_) => unreachable!(),
    }
}

/// `(i^2/pi^2, d^2/pi^2)` read off the published group rows at `eps = 1`.
fn type_two_row(k: RootSystemKind) -> (Rational, Rational) {
    let l = k.rank();
    match k.family() {
        Family::A => {
            let m = l + 1;
            // sqrt2 pi n^(1/2); pi n or pi (n^2-1)^(1/2)
            (n(2 * m), if m % 2 == 0 { n(m * m) } else { n(m * m - 1) })
        }
        // sqrt2 pi (2n-1)^(1/2); 2 pi (2n-1)^(1/2) or pi (2n-1)^(1/2) n^(1/2)
        Family::B => (n(2 * (2 * l - 1)), if l <= 3 { n(4 * (2 * l - 1)) } else { n((2 * l - 1) * l) }),
        // sqrt2 pi (n+1)^(1/2); sqrt2 pi (n+1)^(1/2) n^(1/2)
        Family::C => (n(2 * (l + 1)), n(2 * (l + 1) * l)),
        // 2 pi (n-1)^(1/2); sqrt2 pi (n-1)^(1/2) n^(1/2)
        Family::D => (n(4 * (l - 1)), n(2 * (l - 1) * l)),
        Family::E6 => (n(24), n(64)),
        Family::E7 => (n(36), n(108)),
        Family::E8 => (n(60), n(120)),
        Family::F4 => (n(18), n(36)),
        Family::G2 => (n(8), rat(32, 3)),
        Family::BC => unreachable!(),
    }
}

fn unit_report(label: &SpaceLabel) -> GeometryReport {
    report(label, &MetricSpec::default()).unwrap()
}

fn group_labels() -> Vec<SpaceLabel> {
    table_labels(Table::T42, 13)
        .into_iter()
        .filter(|l| matches!(l, SpaceLabel::Group(k) if k.rank() <= 12))
        .collect()
}

#[test]
fn criterion_01_type_one_table() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rows = 0;
    for label in table_labels(Table::T41, 12) {
        let r = unit_report(&label);
        let (i_sq, d_sq) = type_one_row(&label);
        rows += 1;
        if r.injectivity_radius.radicand() != &i_sq || r.diameter.radicand() != &d_sq {
            failures.push(format!(
                "{label}: got i^2={} d^2={}, table i^2={i_sq} d^2={d_sq}",
                r.injectivity_radius.radicand(),
                r.diameter.radicand()
            ));
        }
    }
    assert!(rows > 250, "only {rows} rows");
    verdict(1, "Type I table", &failures, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn criterion_02_type_two_table() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let labels = group_labels();
    for label in &labels {
        let SpaceLabel::Group(k) = *label else { unreachable!() };
        let r = unit_report(label);
        let (i_sq, d_sq) = type_two_row(k);
        if r.injectivity_radius.radicand() != &i_sq || r.diameter.radicand() != &d_sq {
            failures.push(format!("{label}: got i^2={} d^2={}", r.injectivity_radius.radicand(), r.diameter.radicand()));
        }
    }
    let e8 = unit_report(&"GROUP:e8".parse().unwrap());
    if e8.injectivity_radius.radicand() != &int(60) || e8.diameter.radicand() != &int(120) {
        failures.push("GROUP:e8 spot check".into());
    }
    assert_eq!(labels.len(), 12 + 11 + 10 + 9 + 5);
    verdict(2, "Type II table", &failures, start.elapsed(), Duration::from_secs(5));
}

#[test]
fn criterion_03_killing_closed_forms() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in kinds_up_to(12).into_iter().filter(RootSystemKind::is_reduced) {
        let l = k.rank() as i64;
        let expected = match k.family() {
            Family::A => rat(1, l + 1),
            Family::B => rat(1, 2 * l - 1),
            Family::C => rat(1, l + 1),
            Family::D => rat(1, 2 * l - 2),
            Family::E6 => rat(1, 12),
            Family::E7 => rat(1, 18),
            Family::E8 => rat(1, 30),
            Family::F4 => rat(1, 9),
            Family::G2 => rat(1, 4),
            Family::BC => unreachable!(),
        };
        let got = killing_delta_sq(&RootSystem::build(k).unwrap()).unwrap();
        if got != expected {
            failures.push(format!("{k}: {got} != {expected}"));
        }
    }
    verdict(3, "Killing (delta,delta) closed forms", &failures, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_04_killing_self_consistency() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut families = std::collections::BTreeSet::new();
    for k in kinds_up_to(12).into_iter().filter(RootSystemKind::is_reduced) {
        families.insert(format!("{:?}", k.family()));
        let d = killing_self_consistency(&RootSystem::build(k).unwrap()).unwrap();
        if !d.is_zero() {
            failures.push(format!("{k}: discrepancy {d}"));
        }
    }
    assert_eq!(families.len(), 9);
    verdict(4, "sum (alpha,delta)^2 = (delta,delta)", &failures, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_05_orthogonal_subsystems() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let names = |v: &[RootSystemKind]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join("+");
    let sorted = |list: Vec<String>| {
        let mut v: Vec<RootSystemKind> = list.iter().map(|s| kind(s)).collect();
        v.sort();
        v
    };
    for k in kinds_up_to(12).into_iter().filter(RootSystemKind::is_reduced) {
        let l = k.rank();
        let expected: Vec<String> = match (k.family(), l) {
            (Family::A, 1 | 2) => vec![],
            (Family::A, _) => vec![format!("a{}", l - 2)],
            (Family::B, 2) => vec!["a1".into()],
            (Family::B, 3) => vec!["a1".into(), "a1".into()],
            (Family::B, _) => vec!["a1".into(), format!("b{}", l - 2)],
            (Family::C, 3) => vec!["b2".into()],
            (Family::C, _) => vec![format!("c{}", l - 1)],
            (Family::D, 4) => vec!["a1".into(), "a1".into(), "a1".into()],
            (Family::D, 5) => vec!["a1".into(), "a3".into()],
            (Family::D, _) => vec!["a1".into(), format!("d{}", l - 2)],
            (Family::E6, _) => vec!["a5".into()],
            (Family::E7, _) => vec!["d6".into()],
            (Family::E8, _) => vec!["e7".into()],
            (Family::F4, _) => vec!["c3".into()],
            (Family::G2, _) => vec!["a1".into()],
            (Family::BC, _) => unreachable!(),
        };
        let expected = sorted(expected);
        let got = perp_decomposition(&RootSystem::build(k).unwrap());
        if got != expected {
            failures.push(format!("{k}: {} != {}", names(&got), names(&expected)));
        }
    }
    verdict(5, "orthogonal subsystem types", &failures, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_06_curvature_identity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let entries = enumerate_table(Table::T41, 12)
        .into_iter()
        .chain(group_labels().into_iter().map(|l| cartan_core::catalog::resolve(&l).unwrap()));
    for entry in entries {
        for eps in [rat(1, 7), int(1), int(3)] {
            let r = cartan_core::geometry::report_for_entry(entry.clone(), &MetricSpec::Epsilon(eps.clone())).unwrap();
            let product = r.injectivity_radius.radicand() * &r.kappa;
            if product != int(1) || !kappa_relation_check(&r).is_zero() {
                failures.push(format!("{} eps={eps}: i^2 kappa / pi^2 = {product}", entry.label));
            }
        }
    }
    verdict(6, "i(M)^2 kappa = pi^2", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_07_canonical_grassmannian() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in 1..=10usize {
        for q in p..=10usize {
            let label = SpaceLabel::BDI { p, q };
            if label.validate().is_err() {
                continue;
            }
            checked += 1;
            let r = report(&label, &MetricSpec::CanonicalPreset).unwrap();
            let i_sq = if p >= 2 { rat(1, 2) } else { int(1) };
            let d_sq = if p == 1 || (p <= 3 && q > p) { int(1) } else { rat(p as i64, 4) };
            if r.injectivity_radius.radicand() != &i_sq || r.diameter.radicand() != &d_sq {
                failures.push(format!(
                    "({p},{q}): got i^2={} d^2={}",
                    r.injectivity_radius.radicand(),
                    r.diameter.radicand()
                ));
            }
        }
    }
    assert!(checked > 40);
    verdict(7, "canonical real Grassmannian", &failures, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_08_products() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pool: Vec<SpaceLabel> = table_labels(Table::T41, 5).into_iter().chain(table_labels(Table::T42, 5)).collect();
    let epsilons = [rat(1, 7), rat(1, 2), int(1), int(3)];
    for trial in 0..50 {
        let count = rng.gen_range(2..=5);
        let reports: Vec<GeometryReport> = (0..count)
            .map(|_| {
                let label = pool[rng.gen_range(0..pool.len())];
                let eps = epsilons[rng.gen_range(0..epsilons.len())].clone();
                report(&label, &MetricSpec::Epsilon(eps)).unwrap()
            })
            .collect();
        let (i, d) = product(&reports).unwrap();
        let mut min = reports[0].injectivity_radius.radicand().clone();
        let mut sum = Rational::zero();
        for r in &reports {
            if r.injectivity_radius.radicand() < &min {
                min = r.injectivity_radius.radicand().clone();
            }
            sum += r.diameter.radicand();
        }
        if i.radicand() != &min || d.radicand() != &sum {
            failures.push(format!("trial {trial}: i^2={} d^2={}", i.radicand(), d.radicand()));
        }
    }
    verdict(8, "product min / root-sum-of-squares", &failures, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_09_oracles() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in kinds_up_to(8) {
        let rs = RootSystem::build(k).unwrap();
        let p = CartanPolytope::build(&rs).unwrap();
        let checks = [
            simplex_max_oracle(&p, 100_000, 2024),
            inverse_oracle(rs.gram()).unwrap(),
            closure_count_oracle(k).unwrap(),
        ];
        for c in checks {
            if !c.pass {
                failures.push(format!("{k}: {}", c.tsv_line()));
            }
        }
    }
    verdict(9, "numeric oracle suite", &failures, start.elapsed(), Duration::from_secs(60));
}

/// A random rational with small numerator and denominator.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=12))
}

fn random_reflections(ctx: &SliceContext, h: &RationalVector, rng: &mut ChaCha8Rng) -> RationalVector {
    let mut x = h.clone();
    for _ in 0..rng.gen_range(1..=6) {
        let i = rng.gen_range(0..ctx.sigma().rank());
        x = ctx.sigma().reflect(&x, i).unwrap();
    }
    x
}

/// Random slice point: a third on the cut face, a third scaled copies of
/// cut-face points, a third arbitrary rationals.
fn random_point(ctx: &SliceContext, vertices: &[RationalVector], rng: &mut ChaCha8Rng) -> RationalVector {
    let l = ctx.sigma().rank();
    match rng.gen_range(0..3) {
        0 | 1 => {
            let weights: Vec<i64> = (0..l).map(|_| rng.gen_range(0..=5)).collect();
            let total: i64 = weights.iter().sum::<i64>().max(1);
            let mut x = RationalVector::zeros(l);
            for (w, v) in weights.iter().zip(vertices) {
                x = &x + &v.scale(&rat(*w, total));
            }
            if x.is_zero() {
                x = vertices[0].clone();
            }
            let scale = if rng.gen_bool(0.5) { int(1) } else { rat(rng.gen_range(1..=7), 4) };
            x.scale(&scale)
        }
        _ => RationalVector::new((0..l).map(|_| small_rational(rng)).collect()),
    }
}

#[test]
fn criterion_10_predicate_coherence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let spaces = [
        "AI:n=4", "AII:n=3", "AIII:p=1,q=3", "AIII:p=2,q=5", "AIII:p=3,q=3", "CI:n=3", "CII:p=2,q=4",
        "BDI:p=2,q=5", "BDI:p=4,q=4", "BDI:p=1,q=6", "DIII:n=6", "DIII:n=7", "EI", "EII", "EIII", "EIV",
        "FII", "G", "GROUP:b4", "GROUP:e6",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut on_face = 0;
    for s in spaces {
        let label: SpaceLabel = s.parse().unwrap();
        let ctx = SliceContext::new(&label).unwrap();
        let vertices = ctx.cut_face_vertices();
        for _ in 0..1000 {
            let h = random_point(&ctx, &vertices, &mut rng);
            let h = if rng.gen_bool(0.5) { random_reflections(&ctx, &h, &mut rng) } else { h };
            let class = ctx.cut_classify(&h).unwrap().classification;
            let conj = ctx.is_conjugate(&h).unwrap();
            if class == SliceClassification::OnCutFace {
                on_face += 1;
                if !conj {
                    failures.push(format!("{s}: cut point {h} not conjugate"));
                }
            }
            let moved = random_reflections(&ctx, &h, &mut rng);
            if ctx.cut_classify(&moved).unwrap().classification != class {
                failures.push(format!("{s}: classification changed under reflection at {h}"));
            }
            if ctx.is_conjugate(&moved).unwrap() != conj {
                failures.push(format!("{s}: conjugacy changed under reflection at {h}"));
            }
        }
    }
    assert!(on_face > 2000, "too few cut-face samples: {on_face}");
    verdict(10, "cut/conjugate predicate coherence", &failures, start.elapsed(), Duration::from_secs(30));
}
