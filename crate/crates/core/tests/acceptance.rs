//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use nilpoisson::catalog;
use nilpoisson::exterior::{Element, StructureConstants};
use nilpoisson::poisson::*;
use nilpoisson::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sign_pow(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn nonzero_gaussian(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let c = Scalar::gaussian(
            rng.gen_range(-4..=4),
            rng.gen_range(1..=3),
            rng.gen_range(-4..=4),
            rng.gen_range(1..=3),
        );
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_nonzero(n: usize, rng: &mut ChaCha8Rng) -> Element {
    loop {
        let x = Element::random_homogeneous(n, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

fn canonical(sc: &StructureConstants) -> PoissonBivector {
    PoissonBivector::canonical(sc).expect("n >= 2")
}

fn err<E: std::fmt::Display>(context: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{context}: {e}")
}

fn operator_identities() -> Outcome {
    let entries = catalog::standard();
    let mut blocks = 0;
    for entry in &entries {
        let sc = &entry.constants;
        let n = sc.n();
        let lambda = canonical(sc);
        let name = entry.name.as_str();
        for p in 0..=n {
            for q in 0..=n {
                let d = dbar_matrix(sc, p, q).map_err(err(name))?;
                let ad = ad_lambda_matrix(sc, &lambda, p, q).map_err(err(name))?;
                let dd = d
                    .then(&dbar_matrix(sc, p, q + 1).map_err(err(name))?)
                    .map_err(err(name))?;
                ensure!(dd.is_zero(), "{name}: ∂̄² ≠ 0 at ({p},{q})");
                let aa = ad
                    .then(&ad_lambda_matrix(sc, &lambda, p + 1, q).map_err(err(name))?)
                    .map_err(err(name))?;
                ensure!(aa.is_zero(), "{name}: ad_Λ² ≠ 0 at ({p},{q})");
                let one = d
                    .then(&ad_lambda_matrix(sc, &lambda, p, q + 1).map_err(err(name))?)
                    .map_err(err(name))?;
                let two = ad
                    .then(&dbar_matrix(sc, p + 1, q).map_err(err(name))?)
                    .map_err(err(name))?;
                ensure!(
                    one.plus(&two).map_err(err(name))?.is_zero(),
                    "{name}: ∂̄ad_Λ + ad_Λ∂̄ ≠ 0 at ({p},{q})"
                );
                blocks += 1;
            }
        }
        for k in 0..=2 * n {
            let m = dbar_lambda_matrix(sc, &lambda, k).map_err(err(name))?;
            let next = dbar_lambda_matrix(sc, &lambda, k + 1).map_err(err(name))?;
            ensure!(
                m.then(&next).map_err(err(name))?.is_zero(),
                "{name}: ∂̄_Λ² ≠ 0 at k = {k}"
            );
        }
    }
    Ok(format!(
        "{} entries, {blocks} bidegree blocks",
        entries.len()
    ))
}

fn gerstenhaber_axioms() -> Outcome {
    let entries = catalog::standard();
    for (index, entry) in entries.iter().enumerate() {
        let sc = &entry.constants;
        let n = sc.n();
        let lambda = canonical(sc);
        let name = &entry.name;
        let br = |x: &Element, y: &Element| sc.bracket(x, y);
        let dl = |x: &Element| lambda.dbar_lambda(sc, x);
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + index as u64);
        for trial in 0..500 {
            let a = random_nonzero(n, &mut rng);
            let b = random_nonzero(n, &mut rng);
            let c = random_nonzero(n, &mut rng);
            let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
            let here = format!("{name}, triple {trial}: a = {a}, b = {b}, c = {c}");

            let anti = &br(&a, &b) + &br(&b, &a).scale(&sign_pow((da + 1) * (db + 1)));
            ensure!(anti.is_zero(), "antisymmetry fails for {here}");

            let lhs = br(&a, &b.wedge(&c));
            let rhs = &br(&a, &b).wedge(&c) + &b.wedge(&br(&a, &c)).scale(&sign_pow((da + 1) * db));
            ensure!(lhs == rhs, "biderivation fails for {here}");

            let lhs = br(&a, &br(&b, &c));
            let rhs =
                &br(&br(&a, &b), &c) + &br(&b, &br(&a, &c)).scale(&sign_pow((da + 1) * (db + 1)));
            ensure!(lhs == rhs, "Jacobi fails for {here}");

            for (label, d) in [
                (
                    "∂̄",
                    &(|x: &Element| sc.dbar(x)) as &dyn Fn(&Element) -> Element,
                ),
                ("∂̄_Λ", &dl),
            ] {
                let lhs = d(&a.wedge(&b));
                let rhs = &d(&a).wedge(&b) + &a.wedge(&d(&b)).scale(&sign_pow(da));
                ensure!(lhs == rhs, "{label} Leibniz on ∧ fails for {here}");
                let lhs = d(&br(&a, &b));
                let rhs = &br(&d(&a), &b) + &br(&a, &d(&b)).scale(&sign_pow(da + 1));
                ensure!(lhs == rhs, "{label} Leibniz on [,] fails for {here}");
            }
        }
    }
    Ok(format!("{} entries x 500 triples", entries.len()))
}

fn kodaira_values() -> Outcome {
    let sc = catalog::kodaira(Scalar::one())
        .map_err(err("kodaira"))?
        .constants;
    let h = dolbeault_dimensions(&sc).map_err(err("dolbeault"))?;
    ensure!(h == vec![vec![1, 2, 1]; 3], "h^{{p,q}} = {h:?}");
    let dims = poisson_dimensions(&sc, &canonical(&sc)).map_err(err("poisson"))?;
    ensure!(dims == [1, 3, 4, 3, 1], "dim H^k_Λ = {dims:?}");
    let sums: Vec<usize> = (0..=4)
        .map(|k: usize| (k.saturating_sub(2)..=k.min(2)).map(|p| h[p][k - p]).sum())
        .collect();
    ensure!(sums == dims, "Dolbeault sums {sums:?} differ from {dims:?}");
    let report = check_degeneracy(&sc).map_err(err("check_degeneracy"))?;
    ensure!(
        report.potential.exists() && report.d1_vanishes,
        "degeneracy report {report:?}"
    );
    ensure!(
        report.potential.value() == Some(&Element::vector(1)),
        "potential {:?}",
        report.potential.value()
    );
    verify_phi_isomorphism(&sc, &report.potential).map_err(err("φ isomorphism"))?;
    let m = verify_gerstenhaber_morphism(&sc, &report.potential).map_err(err("Gerstenhaber"))?;
    Ok(format!(
        "h = [[1,2,1]]x3, H_Λ = 1 3 4 3 1, X = V1, {} pairs",
        m.pairs_checked
    ))
}

fn type_i_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let zero = Scalar::zero();
    for sample in 0..20 {
        let b = nonzero_gaussian(&mut rng);
        let c = nonzero_gaussian(&mut rng);
        let sc = catalog::six_dim_type_i(b.clone(), c.clone())
            .map_err(err("type I"))?
            .constants;
        let report = check_degeneracy(&sc).map_err(err(&format!("B = {b}, C = {c}")))?;
        let expected = vec![
            zero.clone(),
            b.conj().checked_div(&c).unwrap(),
            zero.clone(),
        ];
        ensure!(
            report.potential.coefficients() == Some(expected.clone()),
            "sample {sample} B = {b}, C = {c}: potential {:?}, expected {expected:?}",
            report.potential.coefficients()
        );

        let sc = catalog::six_dim_type_i(zero.clone(), c.clone())
            .map_err(err("type I"))?
            .constants;
        let lambda = canonical(&sc);
        for k in 0..=6 {
            let twisted = dbar_lambda_matrix(&sc, &lambda, k).map_err(err("matrix"))?;
            let plain = dbar_total_matrix(&sc, k).map_err(err("matrix"))?;
            ensure!(twisted == plain, "B = 0, C = {c}: ∂̄_Λ ≠ ∂̄ at k = {k}");
        }
        check_degeneracy(&sc).map_err(err(&format!("B = 0, C = {c}")))?;

        let sc = catalog::six_dim_type_i(b.clone(), zero.clone())
            .map_err(err("type I"))?
            .constants;
        let report = check_degeneracy(&sc).map_err(err(&format!("B = {b}, C = 0")))?;
        ensure!(
            !report.potential.exists(),
            "B = {b}, C = 0: potential exists"
        );
        ensure!(!report.d1_vanishes, "B = {b}, C = 0: d₁ vanishes");
    }
    Ok("20 samples each of BC ≠ 0, B = 0, C = 0".into())
}

fn type_ii_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut accepted = 0;
    while accepted < 20 {
        let [a, b, c, d] = [0; 4].map(|_| {
            if rng.gen_ratio(1, 5) {
                Scalar::zero()
            } else {
                nonzero_gaussian(&mut rng)
            }
        });
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            continue;
        }
        accepted += 1;
        let here = format!("A = {a}, B = {b}, C = {c}, D = {d}");
        let sc = catalog::six_dim_type_ii(a, b, c, d)
            .map_err(err("type II"))?
            .constants;
        let pv = solve_potential(&sc).map_err(err(&here))?;
        ensure!(pv.exists(), "{here}: no potential");
        let iso = verify_phi_isomorphism(&sc, &pv).map_err(err(&here))?;
        ensure!(
            iso.rows.iter().all(|r| r.lifted_rank == r.poisson_dim),
            "{here}: lifted rank deficit"
        );
        verify_gerstenhaber_morphism(&sc, &pv).map_err(err(&here))?;
    }
    let mut singular = vec![Scalar::ratio(-1, 2)];
    singular.extend((0..4).map(|_| nonzero_gaussian(&mut rng)));
    for b in &singular {
        let sc =
            catalog::six_dim_type_ii(Scalar::zero(), b.clone(), Scalar::zero(), Scalar::zero())
                .map_err(err("type II"))?
                .constants;
        let report = check_degeneracy(&sc).map_err(err(&format!("B = {b}")))?;
        ensure!(
            !report.potential.exists() && !report.d1_vanishes,
            "A = C = D = 0, B = {b}: potential {}, d₁ = 0 {}",
            report.potential.exists(),
            report.d1_vanishes
        );
    }
    Ok(format!(
        "20 nondegenerate samples, {} with only B ≠ 0",
        singular.len()
    ))
}

fn solvers_agree(sc: &StructureConstants, name: &str) -> Result<bool, String> {
    let characterization = characterization_solution(sc).map_err(err(name))?;
    let normative = normative_solution(sc).map_err(err(name))?;
    match (&characterization, &normative) {
        (Some(x), Some(y)) => {
            let delta = x - y;
            ensure!(
                delta.terms().all(|(m, _)| m.p() == 1 && m.q() == 0),
                "{name}: difference {delta} leaves 𝔤^{{1,0}}"
            );
            ensure!(
                sc.dbar(&delta).is_zero(),
                "{name}: difference {delta} is not ∂̄-closed"
            );
            Ok(true)
        }
        (None, None) => Ok(false),
        _ => Err(format!(
            "{name}: characterization {characterization:?} vs normative {normative:?}"
        )),
    }
}

fn normative_agreement() -> Outcome {
    let mut exists = 0;
    let mut total = 0;
    for entry in catalog::standard() {
        exists += solvers_agree(&entry.constants, &entry.name)? as usize;
        total += 1;
    }
    for seed in 0..50u64 {
        let n = 2 + (seed % 3) as usize;
        let entry = catalog::random_two_step(n, 500 + seed).map_err(err("two-step"))?;
        exists += solvers_agree(&entry.constants, &entry.name)? as usize;
        total += 1;
    }
    Ok(format!("{total} algebras, {exists} with a potential"))
}

fn scaling() -> Outcome {
    let entries = catalog::standard();
    let ts = [Scalar::one(), Scalar::integer(2), Scalar::i()];
    for entry in &entries {
        let sc = &entry.constants;
        let lambda = canonical(sc);
        let dims: Vec<Vec<usize>> = ts
            .iter()
            .map(|t| poisson_dimensions(sc, &lambda.scaled(t)))
            .collect::<Result<_, _>>()
            .map_err(err(&entry.name))?;
        ensure!(
            dims.iter().all(|d| d == &dims[0]),
            "{}: dimensions {dims:?} for t = 1, 2, i",
            entry.name
        );
    }
    Ok(format!("{} entries, t = 1, 2, i", entries.len()))
}

fn discrepancy_ledger() -> Outcome {
    let printed = catalog::counterexample_as_printed();
    let sc = &printed.constants;
    ensure!(
        canonical(sc).ad(sc, &Element::form(3)).is_zero(),
        "as printed: ad_Λ ω̄³ ≠ 0"
    );
    let pv = solve_potential(sc).map_err(err("as printed"))?;
    ensure!(
        pv.value() == Some(&Element::zero()),
        "as printed: potential {:?}",
        pv.value()
    );
    ensure!(
        printed.note.is_some(),
        "as printed: divergence note missing"
    );
    let intended = catalog::counterexample_as_intended();
    let pv = solve_potential(&intended.constants).map_err(err("as intended"))?;
    ensure!(!pv.exists(), "as intended: potential {:?}", pv.value());

    // Kodaira: the potential is (C̄/C)V1
    let c = Scalar::gaussian(2, 1, -1, 1);
    let sc = catalog::kodaira(c.clone())
        .map_err(err("kodaira"))?
        .constants;
    let expected = Element::vector(1).scale(&c.conj().checked_div(&c).unwrap());
    ensure!(
        solve_potential(&sc).map_err(err("kodaira"))?.value() == Some(&expected),
        "Kodaira potential is not (C̄/C)V1"
    );
    // Type II right-hand side is (+B̄, +D̄): A = B = 1, C = D = 0 has no solution
    let one = Scalar::one;
    let sc = catalog::six_dim_type_ii(one(), one(), Scalar::zero(), Scalar::zero())
        .map_err(err("type II"))?
        .constants;
    ensure!(
        !solve_potential(&sc).map_err(err("type II"))?.exists(),
        "Type II A = B = 1, C = D = 0 unexpectedly has a potential"
    );
    Ok("as printed: X = 0; as intended: none; Kodaira X = (C̄/C)V1; Type II sign".into())
}

const COMMANDS: [&str; 9] = [
    "validate",
    "step",
    "dolbeault",
    "poisson",
    "potential",
    "d1",
    "check-degeneracy",
    "check-iso",
    "check-gerstenhaber",
];

fn tsv_report(mut invoke: impl FnMut(&[&str]) -> Result<String, String>) -> Result<String, String> {
    let mut out = String::new();
    for entry in catalog::standard() {
        let source = format!("@{}", entry.name);
        for command in COMMANDS {
            out.push_str(&format!("## {} {command}\n", entry.name));
            out.push_str(&invoke(&[command, &source, "--format=tsv"])?);
        }
    }
    Ok(out)
}

fn determinism() -> Outcome {
    let in_process = |args: &[&str]| {
        let o = nilpoisson::cli::run(std::iter::once("nilpoisson").chain(args.iter().copied()));
        Ok(format!("{}{}{}", o.code, o.stdout, o.stderr))
    };
    let binary = |args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_nilpoisson"))
            .args(args)
            .output()
            .map_err(|e| format!("cannot run binary: {e}"))?;
        Ok(format!(
            "{}{}{}",
            o.status.code().unwrap_or(-1),
            String::from_utf8_lossy(&o.stdout),
            String::from_utf8_lossy(&o.stderr)
        ))
    };
    let first = tsv_report(in_process)?;
    let second = tsv_report(in_process)?;
    ensure!(first == second, "two in-process runs differ");
    let third = tsv_report(binary)?;
    ensure!(
        first == third,
        "binary output differs from in-process output"
    );
    Ok(format!("{} bytes identical across 3 runs", first.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("operator identities", operator_identities),
        ("Gerstenhaber axioms", gerstenhaber_axioms),
        ("Kodaira surface", kodaira_values),
        ("Type I sweep", type_i_sweep),
        ("Type II sweep", type_ii_sweep),
        ("normative vs characterization", normative_agreement),
        ("scaling", scaling),
        ("discrepancy ledger", discrepancy_ledger),
        ("determinism", determinism),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (index, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", index + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {reason}", index + 1);
            }
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
