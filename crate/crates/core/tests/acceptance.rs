//! Acceptance gate. Prints one PASS/FAIL line per criterion followed by the
//! individual checks, and exits non-zero if any check fails.

mod oracle;

use std::time::{Duration, Instant};

use argvoi::io::{parse_ach_csv, parse_bundle, parse_framework, render_report, Report};
use argvoi::voi::{Analysis, Evaluation};
use argvoi::{
    argument_set, ArgumentSet, DifferenceKind, DungFramework, Framework, InferenceMode, Method,
    MonteCarloConfig, Objective, ProbabilisticFramework, ProbabilityMapping, Semantics,
    UtilityKind, Value,
};
use oracle::{Af, Paf};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLE1: &str = include_str!("../../../data/example1.af");
const EXAMPLE2: &str = include_str!("../../../data/example2.paf");
const BUNDLE: &str = include_str!("../../../data/attack-a4.bundle");
const AEGEAN: &str = include_str!("../../../data/aegean.csv");

const GS: (Semantics, InferenceMode) = (Semantics::Grounded, InferenceMode::Sceptical);

#[derive(Default)]
struct Checks(Vec<(bool, String)>);

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.0.push((ok, what.into()));
    }

    fn near(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        self.check(
            (got - want).abs() <= tol,
            format!("{what}: got {got:.9}, want {want} +/- {tol}"),
        );
    }

    fn within(&mut self, what: &str, elapsed: Duration, limit: Duration) {
        self.check(
            elapsed < limit,
            format!("{what}: {elapsed:?} (limit {limit:?})"),
        );
    }
}

fn set(ids: &[&str]) -> ArgumentSet {
    argument_set(ids).unwrap()
}

fn names(s: &ArgumentSet) -> String {
    let v: Vec<&str> = s.iter().map(|a| a.as_str()).collect();
    format!("{{{}}}", v.join(","))
}

fn dung(text: &str) -> DungFramework {
    match parse_framework(text).unwrap() {
        Framework::Dung(f) => f,
        Framework::Probabilistic(_) => panic!("expected a Dung framework"),
    }
}

fn praf(text: &str) -> ProbabilisticFramework {
    match parse_framework(text).unwrap() {
        Framework::Probabilistic(f) => f,
        Framework::Dung(_) => panic!("expected a probabilistic framework"),
    }
}

fn aegean() -> ProbabilisticFramework {
    parse_ach_csv(AEGEAN)
        .unwrap()
        .to_praf(&ProbabilityMapping::default())
        .unwrap()
}

/// The Example-2 inputs in oracle form.
fn example2_oracle() -> Paf {
    Paf {
        n: 4,
        p_arg: vec![0.8, 0.8, 0.6, 0.9],
        attacks: vec![(0, 1, 0.9), (1, 2, 0.4), (1, 3, 0.6), (3, 2, 0.3)],
    }
}

fn criterion_1(c: &mut Checks) {
    let start = Instant::now();
    let af = dung(EXAMPLE1);
    let fw = Framework::from(af.clone());
    let before = af.accepted_arguments(GS.0, GS.1);
    let removed = af
        .remove_arguments(["a1"])
        .unwrap()
        .accepted_arguments(GS.0, GS.1);
    let bundle = parse_bundle(BUNDLE).unwrap();
    let added = af.extend(&bundle).unwrap().accepted_arguments(GS.0, GS.1);
    let obj = Objective::new(
        set(&["a3", "a4"]),
        UtilityKind::DafTargetOutput,
        DifferenceKind::Signed,
    )
    .with_target(set(&["a3"]));
    let analysis = Analysis::new(&fw, &obj, Method::default()).unwrap();
    let observed = analysis.value_of_observed(&set(&["a1"])).unwrap();
    let observation = analysis.value_of_observation(&bundle).unwrap();
    let elapsed = start.elapsed();

    c.check(
        before == set(&["a1", "a4"]),
        format!("accepted {}", names(&before)),
    );
    c.check(
        removed == set(&["a2"]),
        format!("after removing a1 {}", names(&removed)),
    );
    c.check(
        added == set(&["a1", "a3", "b"]),
        format!("after adding b->a4 {}", names(&added)),
    );
    c.check(
        observed.get() == -1.0,
        format!("V_observed({{a1}}) = {observed}"),
    );
    c.check(
        observation.get() == 2.0,
        format!("V_observation = {observation}"),
    );
    c.within("runtime", elapsed, Duration::from_millis(1));
}

fn criterion_2(c: &mut Checks) {
    let start = Instant::now();
    let pf = praf(EXAMPLE2);
    let exact = Method::default();
    let before = pf.acceptance(GS.0, GS.1, &exact).unwrap();
    let after_removal = pf
        .remove_arguments(["a1"])
        .unwrap()
        .acceptance(GS.0, GS.1, &exact)
        .unwrap();
    let after_addition = pf
        .extend(&parse_bundle(BUNDLE).unwrap())
        .unwrap()
        .acceptance(GS.0, GS.1, &exact)
        .unwrap();
    let elapsed = start.elapsed();

    let tol = 0.00005;
    for (id, want) in [
        ("a1", 0.8000),
        ("a2", 0.2240),
        ("a3", 0.4118),
        ("a4", 0.7790),
    ] {
        c.near(&format!("P({id})"), before.get(id).unwrap(), want, tol);
    }
    for (id, want) in [("a2", 0.8000), ("a3", 0.3445), ("a4", 0.4680)] {
        c.near(
            &format!("P({id}) without a1"),
            after_removal.get(id).unwrap(),
            want,
            tol,
        );
    }
    for (id, want) in [("a3", 0.5328), ("a4", 0.0779)] {
        c.near(
            &format!("P({id}) with b"),
            after_addition.get(id).unwrap(),
            want,
            tol,
        );
    }
    // published figures are rounded; the brute-force oracle pins full precision
    let oracle = example2_oracle().acceptance(GS.0, GS.1);
    let agree = ["a1", "a2", "a3", "a4"]
        .iter()
        .zip(&oracle)
        .all(|(id, w)| (before.get(id).unwrap() - w).abs() < 1e-12);
    c.check(agree, "matches brute-force enumeration to 1e-12");
    c.within("runtime", elapsed, Duration::from_secs(1));
}

fn example2_analysis_values() -> (Value, Value) {
    let fw = Framework::from(praf(EXAMPLE2));
    let obj = Objective::new(
        set(&["a3", "a4"]),
        UtilityKind::PrafTargetOutput,
        DifferenceKind::Signed,
    )
    .with_target(set(&["a3"]));
    let analysis = Analysis::new(&fw, &obj, Method::default()).unwrap();
    (
        analysis.value_of_observed(&set(&["a1"])).unwrap(),
        analysis
            .value_of_observation(&parse_bundle(BUNDLE).unwrap())
            .unwrap(),
    )
}

fn criterion_3(c: &mut Checks) {
    let (observed, observation) = example2_analysis_values();
    c.near("V_observed({a1})", observed.get(), -0.2435, 0.001);
    c.near("V_observation", observation.get(), 0.8221, 0.0005);
}

fn criterion_4(c: &mut Checks) {
    let p = aegean().acceptance(GS.0, GS.1, &Method::default()).unwrap();
    c.near("P(h1)", p.get("h1").unwrap(), 0.06125, 1e-9);
    c.near("P(h2)", p.get("h2").unwrap(), 0.43875, 1e-9);
    for (id, want) in [("e1", 0.65), ("e2", 1.0), ("e3", 0.65)] {
        let got = p.get(id).unwrap();
        c.check(
            got == want,
            format!("P({id}) = {got:?}, want exactly {want}"),
        );
    }
}

fn criterion_5(c: &mut Checks) {
    let fw = Framework::from(aegean());
    let obj = Objective::new(
        set(&["h1", "h2"]),
        UtilityKind::PrafProbability,
        DifferenceKind::Kl,
    );
    let analysis = Analysis::new(&fw, &obj, Method::default()).unwrap();
    for e in ["e1", "e3"] {
        let v = analysis.value_of_observed(&set(&[e])).unwrap();
        c.near(&format!("V_observed({{{e}}})"), v.get(), 0.0850, 0.0005);
    }
    let v = analysis.value_of_observed(&set(&["e2"])).unwrap();
    c.check(v.is_infinite(), format!("V_observed({{e2}}) = {v}"));
    let ranked = analysis
        .rank_single_attacks(
            argvoi::Probability::new(0.5).unwrap(),
            argvoi::Probability::ONE,
        )
        .unwrap();
    let value_of = |t: &str| {
        ranked
            .iter()
            .find(|r| r.candidate.as_str() == t)
            .unwrap()
            .value
    };
    c.near(
        "V_observation b(0.5)->h2",
        value_of("h2").get(),
        0.1126,
        0.0005,
    );
    c.near(
        "V_observation b(0.5)->e3",
        value_of("e3").get(),
        0.0291,
        0.0005,
    );
    let pos = |t: &str| {
        ranked
            .iter()
            .position(|r| r.candidate.as_str() == t)
            .unwrap()
    };
    c.check(pos("h2") < pos("e3"), "h2 ranks above e3");
}

fn criterion_6(c: &mut Checks) {
    let fw = Framework::from(aegean().base().clone());
    let obj = Objective::new(
        set(&["h1", "h2"]),
        UtilityKind::DafMaximisingChange,
        DifferenceKind::Absolute,
    );
    let analysis = Analysis::new(&fw, &obj, Method::default()).unwrap();
    let ones = [&["e2"][..], &["e1", "e2"], &["e1", "e3"], &["e2", "e3"]];
    let evidence = ["e1", "e2", "e3"];
    for mask in 0..8u32 {
        let subset: Vec<&str> = (0..3)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| evidence[i])
            .collect();
        let want = if ones.contains(&subset.as_slice()) {
            1.0
        } else {
            0.0
        };
        let v = analysis.value_of_observed(&set(&subset)).unwrap();
        c.check(
            v.get() == want,
            format!("V_observed({{{}}}) = {v}, want {want}", subset.join(",")),
        );
    }
    let ranked = analysis
        .rank_single_attacks(argvoi::Probability::ONE, argvoi::Probability::ONE)
        .unwrap();
    let value_of = |t: &str| {
        ranked
            .iter()
            .find(|r| r.candidate.as_str() == t)
            .unwrap()
            .value
    };
    let h2 = value_of("h2");
    c.check(h2.get() == 1.0, format!("attack-h2 bundle = {h2}, want 1"));
    let e3 = value_of("e3");
    c.check(e3.get() == 0.0, format!("attack-e3 bundle = {e3}, want 0"));
}

fn random_paf(rng: &mut ChaCha8Rng, max_n: usize) -> Paf {
    let n = rng.random_range(1..=max_n);
    let mut p = || {
        if rng.random_bool(0.3) {
            1.0
        } else {
            rng.random_range(0.01..1.0)
        }
    };
    let p_arg = (0..n).map(|_| p()).collect();
    let mut attacks = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if rng.random_bool(0.3) {
                attacks.push((s, t, 0.0));
            }
        }
    }
    let mut paf = Paf { n, p_arg, attacks };
    for a in &mut paf.attacks {
        a.2 = if rng.random_bool(0.3) {
            1.0
        } else {
            rng.random_range(0.01..1.0)
        };
    }
    paf
}

fn random_af(rng: &mut ChaCha8Rng, max_n: usize) -> Af {
    let n = rng.random_range(0..=max_n);
    let density = rng.random_range(0.05..0.5);
    let mut attacks = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if rng.random_bool(density) {
                attacks.push((s, t));
            }
        }
    }
    Af { n, attacks }
}

fn criterion_7(c: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let pf = random_paf(&mut rng, 5).to_lib();
        let total: f64 = pf.enumerate_induced(62).unwrap().map(|g| g.weight).sum();
        worst = worst.max((total - 1.0).abs());
    }
    c.check(
        worst <= 1e-12,
        format!("100 random PrAFs: max |sum of weights - 1| = {worst:e}"),
    );

    let mut mismatches = 0;
    for _ in 0..100 {
        let af = random_af(&mut rng, 6).to_lib();
        let pf = ProbabilisticFramework::certain(af.clone());
        for sem in Semantics::ALL {
            for mode in InferenceMode::ALL {
                let accepted = af.accepted_arguments(sem, mode);
                let p = pf.acceptance(sem, mode, &Method::default()).unwrap();
                let same = af.arguments().iter().all(|a| {
                    p.get(a.as_str()) == Some(if accepted.contains(a) { 1.0 } else { 0.0 })
                });
                mismatches += usize::from(!same);
            }
        }
    }
    c.check(
        mismatches == 0,
        format!("certain PrAFs reproduce Dung results over 100 frameworks x 5 semantics x 2 modes ({mismatches} mismatches)"),
    );

    let mut violations = 0;
    let mut oracle_disagreements = 0;
    for _ in 0..200 {
        let g = random_af(&mut rng, 8);
        let lib = g.to_lib();
        let grounded = oracle::mask_of(lib.grounded_extension().iter().map(|a| a.as_str()));
        let complete = g.extensions(Semantics::Complete);
        violations += complete
            .iter()
            .filter(|&&e| grounded & e != grounded)
            .count();
        oracle_disagreements += usize::from(grounded != g.grounded());
    }
    c.check(
        violations == 0 && oracle_disagreements == 0,
        format!("grounded within every brute-force complete extension on 200 frameworks with |A| <= 8 ({violations} violations, {oracle_disagreements} grounded mismatches)"),
    );
}

fn criterion_8(c: &mut Checks) {
    let pf = praf(EXAMPLE2);
    let method = Method::MonteCarlo(MonteCarloConfig::new(200_000, 20_201).unwrap());
    let start = Instant::now();
    let first = pf.acceptance(GS.0, GS.1, &method).unwrap();
    let elapsed = start.elapsed();
    let second = pf.acceptance(GS.0, GS.1, &method).unwrap();
    let exact = example2_oracle().acceptance(GS.0, GS.1);
    for (i, want) in exact.iter().enumerate() {
        let id = format!("a{}", i + 1);
        let got = first.get(&id).unwrap();
        let se = (want * (1.0 - want) / 200_000.0).sqrt();
        c.check(
            (got - want).abs() <= 4.0 * se,
            format!(
                "P({id}) = {got:.6} vs exact {want:.6}, {:.2} standard errors",
                (got - want).abs() / se
            ),
        );
    }
    let report = |p| {
        render_report(&Report::evaluation(
            GS.0,
            GS.1,
            &Evaluation::Probabilities(p),
        ))
    };
    c.check(
        report(first) == report(second),
        "same seed gives a byte-identical report",
    );
    c.within("runtime", elapsed, Duration::from_secs(30));
}

type Criterion = (&'static str, fn(&mut Checks));

fn main() {
    let criteria: [Criterion; 8] = [
        ("Example 1 Dung framework and values", criterion_1),
        ("Example 2 exact acceptance probabilities", criterion_2),
        ("Example 2 values of information", criterion_3),
        ("Aegean II probabilistic evaluation", criterion_4),
        ("Aegean II KL values of information", criterion_5),
        ("Aegean II Dung maximising-change values", criterion_6),
        ("property suite", criterion_7),
        ("Monte Carlo agreement and determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let mut checks = Checks::default();
        run(&mut checks);
        let ok = checks.0.iter().all(|(ok, _)| *ok);
        failed += usize::from(!ok);
        println!(
            "criterion {}: {} - {title}",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
        for (ok, what) in &checks.0 {
            println!("    [{}] {what}", if *ok { "ok" } else { "FAIL" });
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
