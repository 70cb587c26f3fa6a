//! Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
//! test fails if any criterion fails. Run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::golden::{self, CASES, MODES};
use quatlin::autos::{self, AutoKind};
use quatlin::cli;
use quatlin::frames::{self, BuiltinFrame, FrameTerm};
use quatlin::{Operator4, Quaternion, Rational};

const RIGHT_UNITS_DET: i64 = 65536;
const AUTO_DET: i64 = 256;
const PAPER_ATTEMPT_RANK: usize = 12;
const ID_PLUS_CONJ_RANK: usize = 8;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, bound: Duration) -> Result<(), String> {
    ensure(elapsed < bound, || format!("took {elapsed:?}, bound {bound:?}"))
}

fn regular_representation() -> Outcome {
    let mut rng = common::rng(0xA1);
    let start = Instant::now();
    for n in 0..100 {
        let a = common::quaternion(&mut rng, 100, 20);
        let (left, right) = (Operator4::left_mul(&a), Operator4::right_mul(&a));
        for t in 0..4 {
            let x = Quaternion::unit(t);
            ensure(left.apply(&x) == common::table_mul(&a, &x), || format!("left sample {n}, unit {t}"))?;
            ensure(right.apply(&x) == common::table_mul(&x, &a), || format!("right sample {n}, unit {t}"))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("100 samples x 4 units exact in {elapsed:?}"))
}

fn automorphism_laws() -> Outcome {
    let start = Instant::now();
    let holds = |f: &Operator4, reversed: bool| {
        (0..4).all(|s| {
            (0..4).all(|t| {
                let (es, et) = (Quaternion::unit(s), Quaternion::unit(t));
                let lhs = f.apply(&common::table_mul(&es, &et));
                let (fs, ft) = (f.apply(&es), f.apply(&et));
                lhs == if reversed { common::table_mul(&ft, &fs) } else { common::table_mul(&fs, &ft) }
            })
        })
    };
    for name in ["A1", "A2", "A3"] {
        ensure(holds(&autos::catalog(name).unwrap(), false), || format!("{name} not multiplicative"))?;
    }
    let sq = autos::catalog("A1").unwrap().power(2);
    ensure(holds(&sq, false), || "A1 squared not multiplicative".into())?;
    for name in ["I", "I1", "I2"] {
        ensure(holds(&autos::catalog(name).unwrap(), true), || format!("{name} not antimultiplicative"))?;
    }
    let ops: Vec<(&str, Operator4)> = autos::CATALOG_NAMES
        .iter()
        .map(|&n| (n, autos::catalog(n).unwrap()))
        .collect();
    for (nf, f) in &ops {
        for (ng, g) in &ops {
            let expect_linear = holds(f, false) == holds(g, false);
            let composed = f.compose(g);
            let ok = match autos::classify(&composed) {
                AutoKind::LinearAutomorphism => expect_linear && holds(&composed, false),
                AutoKind::AntilinearAutomorphism => !expect_linear && holds(&composed, true),
                AutoKind::Neither(_) => false,
            };
            ensure(ok, || format!("closure fails for {nf} o {ng}"))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("7 catalog operators, 49 compositions in {elapsed:?}"))
}

fn coordinate_conditions() -> Outcome {
    let mut rng = common::rng(0xA3);
    let start = Instant::now();
    let mut ops: Vec<Operator4> = autos::CATALOG_NAMES.iter().map(|n| autos::catalog(n).unwrap()).collect();
    for _ in 0..200 {
        ops.push(autos::conjugation_by(&common::nonzero_quaternion(&mut rng, 50, 10)).unwrap());
    }
    for _ in 0..200 {
        ops.push(common::perturbed_automorphism(&mut rng));
    }
    let mut linear = 0;
    for (n, f) in ops.iter().enumerate() {
        let by_coords = autos::check_coordinate_conditions(f).is_ok();
        let by_laws = matches!(autos::classify(f), AutoKind::LinearAutomorphism);
        ensure(by_coords == by_laws, || format!("disagreement on operator {n}:\n{f}"))?;
        linear += usize::from(by_laws);
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    ensure(linear == 4 + 200, || format!("expected 204 automorphisms, found {linear}"))?;
    Ok(format!("{} operators agree ({linear} automorphisms) in {elapsed:?}", ops.len()))
}

fn conjugator_recovery() -> Outcome {
    let mut rng = common::rng(0xA4);
    let start = Instant::now();
    for n in 0..200 {
        let q = loop {
            let q = Quaternion::from_coords(std::array::from_fn(|_| Rational::from(rand::Rng::gen_range(&mut rng, -50..=50i64))));
            if !q.is_zero() {
                break q;
            }
        };
        let f = autos::conjugation_by(&q).unwrap();
        let c = autos::recover_conjugator(&f).map_err(|e| format!("sample {n}: {e}"))?;
        ensure(c.quaternion().is_collinear(&q), || format!("sample {n}: {} not collinear with {q}", c.quaternion()))?;
        ensure(autos::conjugation_by(c.quaternion()).unwrap() == f, || format!("sample {n}: operators differ"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("200 conjugators recovered in {elapsed:?}"))
}

fn expansion_round_trip() -> Outcome {
    let mut rng = common::rng(0xA5);
    let frames = [BuiltinFrame::RightUnits.frame(), BuiltinFrame::Auto.frame()];
    let start = Instant::now();
    for n in 0..1000 {
        let f = common::operator(&mut rng, 100, 20);
        for frame in &frames {
            let e = frames::expand(&f, frame).map_err(|e| format!("sample {n}: {e}"))?;
            ensure(e.reconstruct() == f, || format!("sample {n} in {}", frame.name()))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("1000 matrices x 2 frames exact in {elapsed:?}"))
}

fn frame_determinants() -> Outcome {
    let ru = BuiltinFrame::RightUnits.frame().determinant();
    let auto = BuiltinFrame::Auto.frame().determinant();
    ensure(!ru.is_zero() && !auto.is_zero(), || "singular builtin frame".into())?;
    ensure(ru == Rational::from(RIGHT_UNITS_DET), || format!("RIGHT_UNITS det {ru}"))?;
    ensure(auto == Rational::from(AUTO_DET), || format!("AUTO det {auto}"))?;
    Ok(format!("det RIGHT_UNITS = {ru}, det AUTO = {auto}"))
}

fn singular_families() -> Outcome {
    let attempt = BuiltinFrame::PaperAttempt.frame();
    let report = frames::family_rank(attempt.terms()).map_err(|e| e.to_string())?;
    ensure(report.rank < 16, || format!("rank {}", report.rank))?;
    ensure(report.rank == PAPER_ATTEMPT_RANK, || format!("rank {} drifted", report.rank))?;
    let witness = report.witness.as_ref().ok_or("no witness")?;
    ensure(witness.iter().any(|q| !q.is_zero()), || "zero witness".into())?;
    let annihilated = attempt
        .terms()
        .iter()
        .zip(witness)
        .fold(Operator4::zero(), |acc, (term, a)| &acc + &term.with_coefficient(a));
    ensure(annihilated == Operator4::zero(), || "witness does not vanish".into())?;

    let pair = [
        FrameTerm::left(Operator4::identity(), "id"),
        FrameTerm::left(autos::catalog("I").unwrap(), "I"),
    ];
    let pair_rank = frames::family_rank(&pair).map_err(|e| e.to_string())?.rank;
    ensure(pair_rank == ID_PLUS_CONJ_RANK, || format!("[id, I] rank {pair_rank}"))?;
    Ok(format!("[id, A1, A1A1, I] rank {} with vanishing witness; [id, I] rank {pair_rank}", report.rank))
}

fn parse_quat(q: &[String; 4]) -> Quaternion {
    q.join(",").parse().unwrap()
}

fn demo_structure() -> Outcome {
    let a = Quaternion::from_ints(1, 2, 3, 4);
    let doc = cli::demo_document(&a, false).map_err(|e| e.to_string())?;
    let scalar = |n: i64| Quaternion::from_ints(n, 0, 0, 0);
    let left = [a.clone(), Quaternion::zero(), Quaternion::zero(), Quaternion::zero()];
    let right = [scalar(1), scalar(2), scalar(3), scalar(4)];
    let sum: Vec<Quaternion> = left.iter().zip(&right).map(|(l, r)| l + r).collect();
    let expected = [("left", left.to_vec()), ("right", right.to_vec()), ("sum", sum)];
    let ops = cli::demo_operators(&a);
    let ru = BuiltinFrame::RightUnits.frame();
    for (name, coeffs) in &expected {
        let example = doc.examples.iter().find(|e| e.name == *name).ok_or(format!("missing {name}"))?;
        let exp = example.expansions.iter().find(|e| e.frame == "RIGHT_UNITS").ok_or("missing frame")?;
        let got: Vec<Quaternion> = exp.coefficients.iter().map(parse_quat).collect();
        ensure(&got == coeffs, || format!("{name}: got {got:?}"))?;
        ensure(exp.verified, || format!("{name} not verified"))?;
        let op = &ops.iter().find(|o| o.0 == *name).unwrap().2;
        let e = frames::expand(op, &ru).map_err(|e| e.to_string())?;
        ensure(e.reconstruct() == *op, || format!("{name} does not reconstruct"))?;
        if *name == "right" {
            ensure(got[1..].iter().any(|q| !q.is_zero()), || "right: only term 0 is nonzero".into())?;
        }
    }
    Ok("left (a,0,0,0), right (1,2,3,4) as scalars, sum verified; right has nonzero later terms".into())
}

fn cli_determinism() -> Outcome {
    let mut runs = 0;
    for case in CASES {
        for mode in MODES {
            let first = golden::run(case.args, mode).transcript();
            let second = golden::run(case.args, mode).transcript();
            ensure(first == second, || format!("{} ({mode}) is not deterministic", case.name))?;
            golden::check_golden(case, mode, &first)?;
            runs += 2;
        }
    }
    Ok(format!("{runs} runs byte-identical and matching goldens"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("regular representation", regular_representation),
        ("automorphism laws and closure", automorphism_laws),
        ("coordinate conditions match classification", coordinate_conditions),
        ("conjugator recovery", conjugator_recovery),
        ("expansion round-trip", expansion_round_trip),
        ("builtin frame determinants", frame_determinants),
        ("singular families", singular_families),
        ("demo structure", demo_structure),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", n + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
