//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kummer_core::exact::{determinant, smith_normal_form, IntegerMatrix};
use kummer_core::group::{build_group, GroupName, StabilizerKind};
use kummer_core::kummer::{
    expected_configurations, lefschetz_number, symplectic_action_matrix, ConstraintSet, KummerModel,
    SingularityConfiguration, SolutionRecord,
};
use kummer_core::lattice::{
    is_isometric_definite, make_standard, morrison_classify, IntegralLattice, LatticeError, MorrisonVerdict,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn kummer(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_kummer")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), start.elapsed())
}

fn cli_solutions(group: &str) -> Result<Vec<String>, String> {
    let (code, out, elapsed) = kummer(&["enumerate", "--group", group]);
    ensure!(code == 0, "{group}: exit {code}");
    ensure!(elapsed < Duration::from_secs(1), "{group}: took {elapsed:?}");
    Ok(out.lines().map(|l| l.split("  (").next().unwrap().to_string()).collect())
}

fn exactly(group: &str, expected: &[&str]) -> Check {
    let found = cli_solutions(group)?;
    ensure!(found == expected, "{group}: got {found:?}, want {expected:?}");
    Ok(())
}

fn noncyclic_lists() -> Check {
    exactly("Q8", &["3A1 + 4D4"])?;
    exactly("Q12", &["A1 + 2A2 + 3A3 + D5"])?;
    exactly("T24", &["4A2 + 2A3 + A5", "A1 + 4A2 + D4 + E6"])
}

fn cyclic_lists() -> Check {
    exactly("Z2", &["16A1"])?;
    exactly("Z3", &["9A2"])?;
    exactly("Z4", &["6A1 + 4A3"])?;
    exactly("Z6", &["5A1 + 4A2 + A5"])
}

fn picard_bounds() -> Check {
    for (name, want) in [
        (GroupName::Q8, 20),
        (GroupName::Q12, 20),
        (GroupName::T24, 20),
        (GroupName::Z3, 19),
        (GroupName::Z4, 19),
        (GroupName::Z6, 19),
    ] {
        let model = KummerModel::new(name).map_err(|e| e.to_string())?;
        let sols = model.enumerate_configurations(ConstraintSet::FULL).map_err(|e| e.to_string())?;
        ensure!(!sols.is_empty(), "{name}: no solutions");
        for c in &sols {
            let rec = SolutionRecord::new(&model, c).map_err(|e| e.to_string())?;
            ensure!(rec.picard_lower_bound == want, "{name}: {c} has bound {}", rec.picard_lower_bound);
        }
    }
    Ok(())
}

fn pruning_necessity() -> Check {
    let (code, out, _) = kummer(&["enumerate", "--group", "Q8", "--constraints", "euler+rank"]);
    ensure!(code == 0, "exit {code}");
    let loose = out.lines().count();
    // box scan: A1 (m=4), A3 (m=2), D4 (m=1)
    let mut oracle = 0;
    for n1 in 0..=19i64 {
        for n3 in 0..=6i64 {
            for n5 in 0..=4i64 {
                let euler = 8 * (24 - (2 * n1 + 4 * n3 + 5 * n5)) + 4 * n1 + 2 * n3 + n5;
                if n1 + 3 * n3 + 4 * n5 <= 19 && euler == 0 {
                    oracle += 1;
                }
            }
        }
    }
    let full = cli_solutions("Q8")?.len();
    ensure!(loose == oracle && oracle == 7, "euler+rank gave {loose}, oracle {oracle}");
    ensure!(loose >= 2 && loose > full, "{loose} vs full {full}");
    Ok(())
}

fn lefschetz_table() -> Check {
    for (k, want) in [(2usize, 16u64), (3, 9), (4, 4), (6, 1)] {
        let m = symplectic_action_matrix(k).map_err(|e| e.to_string())?;
        let mut d = IntegerMatrix::identity(4);
        for i in 0..4 {
            for j in 0..4 {
                d.set(i, j, d.get(i, j) - m.get(i, j));
            }
        }
        let det = determinant(&d).map_err(|e| e.to_string())?.abs();
        ensure!(det == BigInt::from(want), "k={k}: |det(I-M)| = {det}");
        let got = lefschetz_number(k).map_err(|e| e.to_string())?;
        ensure!(BigInt::from(got) == det, "k={k}: lefschetz_number {got} vs det {det}");
    }
    Ok(())
}

fn random_symmetric(rng: &mut StdRng, n: usize) -> IntegerMatrix {
    let mut g = IntegerMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = BigInt::from(rng.random_range(-4i64..=4));
            g.set(i, j, x.clone());
            g.set(j, i, x);
        }
    }
    g
}

fn random_unimodular(rng: &mut StdRng, n: usize) -> IntegerMatrix {
    let mut u = IntegerMatrix::identity(n);
    for _ in 0..rng.random_range(0..8) {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        let mut e = IntegerMatrix::identity(n);
        if i == j {
            e.set(i, i, BigInt::from(-1));
        } else {
            e.set(i, j, BigInt::from(rng.random_range(-2i64..=2)));
        }
        u = u.mul(&e).unwrap();
    }
    u
}

fn random_definite(rng: &mut StdRng, n: usize) -> IntegralLattice {
    loop {
        let mut b = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                b.set(i, j, BigInt::from(rng.random_range(-2i64..=2)));
            }
        }
        if !determinant(&b).unwrap().is_zero() {
            let l = IntegralLattice::new(b.transpose().mul(&b).unwrap()).unwrap();
            return if rng.random_bool(0.5) { l } else { l.negated() };
        }
    }
}

fn lattice_properties() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let twists: Vec<i64> = (-3..=3).filter(|&n| n != 0).collect();
    for case in 0..200 {
        let n = rng.random_range(1..=4);
        let l = IntegralLattice::new(random_symmetric(&mut rng, n)).unwrap();
        let k = twists[rng.random_range(0..twists.len())];
        let t = l.twist(k).map_err(|e| e.to_string())?;
        ensure!(
            t.discriminant() == BigInt::from(k).pow(n as u32) * l.discriminant(),
            "case {case}: disc of twist by {k}"
        );
        let want = if k > 0 { l.inertia() } else { l.inertia().swapped() };
        ensure!(t.inertia() == want, "case {case}: inertia under twist by {k}");

        let r = rng.random_range(1..=4);
        let m = IntegralLattice::new(random_symmetric(&mut rng, r)).unwrap();
        ensure!(l.direct_sum(&m).inertia() == l.inertia() + m.inertia(), "case {case}: direct sum inertia");

        let snf = smith_normal_form(l.gram());
        let product: BigInt = snf.factors.iter().product();
        ensure!(product == l.discriminant().abs(), "case {case}: SNF product");

        let d = random_definite(&mut rng, n);
        let moved = IntegralLattice::new(d.gram().congruent(&random_unimodular(&mut rng, n)).unwrap()).unwrap();
        let cert = is_isometric_definite(&d, &moved)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("case {case}: isometric pair not recognized"))?;
        ensure!(
            determinant(&cert).unwrap().abs().is_one() && &d.gram().congruent(&cert).unwrap() == moved.gram(),
            "case {case}: certificate does not verify"
        );
    }
    Ok(())
}

fn morrison_cases() -> Check {
    let u = make_standard("U").unwrap();
    let a1 = make_standard("A1").unwrap();
    let minus_two = IntegralLattice::from_rows(&[[-2i64]]).unwrap();

    let t17 = u.direct_sum(&u).direct_sum(&minus_two);
    let c = morrison_classify(&t17, 5).map_err(|e| e.to_string())?;
    ensure!(c.verdict == MorrisonVerdict::CaseIiiU2Summand, "U+U+[-2]: {c}");
    let tp = c.complement.ok_or("no complement")?;
    ensure!(
        tp.rank() == 1 && tp.discriminant() == BigInt::from(-2) && tp.inertia() == minus_two.inertia(),
        "complement invariants {tp}"
    );
    ensure!(is_isometric_definite(&tp, &minus_two).map_err(|e| e.to_string())?.is_some(), "complement {tp}");

    let t = u.direct_sum(&a1).direct_sum(&a1);
    let c = morrison_classify(&t, 5).map_err(|e| e.to_string())?;
    ensure!(c.verdict == MorrisonVerdict::CaseIiUSummand, "U+A1+A1: {c}");

    let pd = IntegralLattice::from_rows(&[[2i64, 1], [1, 2]]).unwrap();
    let c = morrison_classify(&pd, 5).map_err(|e| e.to_string())?;
    ensure!(c.to_string().contains("ρ(X) = 19 or 20"), "rank-2 positive definite: {c}");

    match morrison_classify(&make_standard("A2").unwrap(), 5) {
        Err(LatticeError::WrongInertia { .. }) => Ok(()),
        other => Err(format!("A2 should be rejected for its inertia, got {other:?}")),
    }
}

fn group_engine() -> Check {
    use StabilizerKind::*;
    let tables: [(GroupName, Vec<(StabilizerKind, usize, usize)>); 7] = [
        (GroupName::Z2, vec![(Z2, 1, 1)]),
        (GroupName::Z3, vec![(Z3, 1, 1)]),
        (GroupName::Z4, vec![(Z2, 2, 1), (Z4, 1, 1)]),
        (GroupName::Z6, vec![(Z2, 3, 1), (Z3, 2, 1), (Z6, 1, 1)]),
        (GroupName::Q8, vec![(Z2, 4, 1), (Z4, 2, 1), (Z4, 2, 1), (Z4, 2, 1), (Q8, 1, 1)]),
        (GroupName::Q12, vec![(Z2, 6, 1), (Z3, 4, 1), (Z4, 3, 3), (Z6, 2, 1), (Q12, 1, 1)]),
        (GroupName::T24, vec![(Z2, 12, 1), (Z3, 8, 4), (Z4, 6, 3), (Z6, 4, 4), (Q8, 3, 1), (T24, 1, 1)]),
    ];
    for (name, want) in tables {
        let g = build_group(name);
        let classes = g.conjugacy_classes();
        ensure!(classes.iter().map(Vec::len).sum::<usize>() == g.order(), "{name}: class equation");
        ensure!(classes.iter().all(|c| g.order() % c.len() == 0), "{name}: class size divides order");

        // exhaustive conjugation scan of fixed_cosets
        let subgroups = g.all_subgroups();
        for h in &subgroups {
            for x in 0..g.order() {
                let fx = g.fixed_cosets(x, h).map_err(|e| e.to_string())?;
                for y in 0..g.order() {
                    ensure!(g.fixed_cosets(g.conjugate(x, y), h).unwrap() == fx, "{name}: fixed_cosets not a class function");
                }
            }
        }

        let stab = g.stabilizer_classes().map_err(|e| e.to_string())?;
        let got: Vec<_> = stab.iter().map(|c| (c.kind, c.index_m, c.class_size)).collect();
        ensure!(got == want, "{name}: stabilizer table {got:?}");
        let listed = subgroups
            .iter()
            .filter(|h| {
                let cyclic = g.subgroup_is_cyclic(h);
                (cyclic && [2, 3, 4, 6].contains(&h.order())) || (!cyclic && [8, 12, 24].contains(&h.order()))
            })
            .count();
        ensure!(stab.iter().map(|c| c.class_size).sum::<usize>() == listed, "{name}: stabilizer coverage");
    }
    Ok(())
}

fn main() -> ExitCode {
    // keep the full-model expectation list in sync with the CLI
    for name in GroupName::ALL {
        let model = KummerModel::new(name).unwrap();
        let sols: Vec<SingularityConfiguration> = model.enumerate_configurations(ConstraintSet::FULL).unwrap();
        assert_eq!(sols, expected_configurations(name), "{name}");
    }

    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 noncyclic singularity lists", noncyclic_lists),
        ("2 cyclic singularity lists", cyclic_lists),
        ("3 Picard lower bounds", picard_bounds),
        ("4 fixed-point pruning is necessary", pruning_necessity),
        ("5 Lefschetz numbers from det(I - M_k)", lefschetz_table),
        ("6 random lattice properties", lattice_properties),
        ("7 Morrison classifier", morrison_cases),
        ("8 group engine tables", group_engine),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (label, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS  criterion {label}  ({:.2?})", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {label}: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.2?}", 8 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
