//! Acceptance suite. Runs without the libtest harness so that it can print a
//! single PASS/FAIL line per criterion; exits non-zero if any criterion fails.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use neutrosophic::measures::ScalarReport;
use neutrosophic::penta_sat::{beta_components, decompose5s_via_beta};
use neutrosophic::prelude::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 20_240_601;

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn triple(r: &mut ChaCha8Rng) -> NeutrosophicTriple {
    NeutrosophicTriple::new(r.gen(), r.gen(), r.gen()).unwrap()
}

fn q(t: f64, i: f64, f: f64) -> NeutrosophicTriple {
    NeutrosophicTriple::new(t, i, f).unwrap()
}

fn partition_ok(c: &[f64]) -> bool {
    c.iter().all(|&x| x >= -1e-9) && (c.iter().sum::<f64>() - 1.0).abs() <= 1e-9
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

macro_rules! require {
    ($cond:expr, $($msg:tt)+) => {
        let held: bool = $cond;
        if !held {
            return Err(format!($($msg)+));
        }
    };
}

fn partitions() -> Outcome {
    let n = 100_000;
    let mut r = rng(1);
    let start = Instant::now();
    for _ in 0..n {
        let x = triple(&mut r);
        require!(partition_ok(&decompose4(x).components()), "tetra at {x:?}");
        require!(
            partition_ok(&decompose5s(x).components()),
            "penta-sat at {x:?}"
        );
        for p in DefinednessProfile::ALL {
            require!(
                partition_ok(&decompose5d(x, p).components()),
                "penta-def/{p} at {x:?}"
            );
        }
    }
    let secs = start.elapsed().as_secs_f64();
    require!(secs < 5.0, "took {secs:.2} s");
    Ok(format!("{n} triples x 7 decompositions in {secs:.3} s"))
}

fn prototypes() -> Outcome {
    let (t, f, n, s, w) = (
        q(1., 0., 0.),
        q(0., 0., 1.),
        q(0., 1., 0.),
        q(1., 1., 1.),
        q(0., 0., 0.),
    );
    let tetra = [
        (t, TetraVector::TRUE),
        (f, TetraVector::FALSE),
        (n, TetraVector::NEUTRAL),
        (w, TetraVector::UNKNOWN),
    ];
    for (x, want) in tetra {
        require!(decompose4(x) == want, "tetra {x:?} -> {:?}", decompose4(x));
    }
    let sat = [
        (t, PentaSatVector::TRUE),
        (f, PentaSatVector::FALSE),
        (n, PentaSatVector::NEUTRAL),
        (s, PentaSatVector::SATURATED),
        (w, PentaSatVector::UNKNOWN),
    ];
    for (x, want) in sat {
        require!(
            decompose5s(x) == want,
            "penta-sat {x:?} -> {:?}",
            decompose5s(x)
        );
    }
    let def = [
        (t, PentaDefVector::TRUE),
        (f, PentaDefVector::FALSE),
        (n, PentaDefVector::NEUTRAL),
        (s, PentaDefVector::OVER_DEFINED),
        (w, PentaDefVector::UNDER_DEFINED),
    ];
    let mut worst: f64 = 0.0;
    for p in DefinednessProfile::ALL {
        for (x, want) in def {
            let got = decompose5d(x, p);
            if p == DefinednessProfile::Rational {
                require!(got == want, "penta-def {x:?} -> {got:?}");
            }
            worst = worst.max(max_diff(&got.components(), &want.components()));
        }
    }
    require!(
        worst <= 1e-12,
        "penta-def corners off by {worst:e} under some profile"
    );
    Ok(format!(
        "14 exact prototype maps; other profiles within {worst:e}"
    ))
}

fn reductions() -> Outcome {
    let mut r = rng(3);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let p = BifuzzyPair::new(r.gen(), r.gen()).unwrap();
        let v = decompose4(q(p.mu(), 0.0, p.nu()));
        let b = bifuzzy3(p);
        require!(v.n == 0.0, "n = {} at {p:?}", v.n);
        worst = worst.max(max_diff(&[v.t, v.w, v.f], &[b.t, b.w, b.f]));
    }
    require!(worst <= 1e-12, "tetra vs bifuzzy3 differs by {worst:e}");

    for k in 0..=999 {
        let mu = k as f64 / 999.0;
        let x = q(mu, 0.0, 1.0 - mu);
        let d = (2.0 * mu - 1.0).abs();
        let (c, ru) = (entropy_czekanowski(x), entropy_ruzicka(x));
        require!(
            (c - (1.0 - d)).abs() <= 1e-12,
            "Kaufman form at mu = {mu}: {c}"
        );
        require!(
            (ru - (1.0 - d) / (1.0 + d)).abs() <= 1e-12,
            "Kosko form at mu = {mu}: {ru}"
        );
    }

    for _ in 0..10_000 {
        let (a, b): (f64, f64) = (r.gen(), r.gen());
        let x = q(a.min(b), a.max(b) - a.min(b), 1.0 - a.max(b));
        let (gap, i) = ((x.t() - x.f()).abs(), x.i());
        require!(
            (entropy_czekanowski(x) - (1.0 - gap / (1.0 + i))).abs() <= 1e-12,
            "simplex E_C at {x:?}"
        );
        require!(
            (entropy_ruzicka(x) - (1.0 - gap + i) / (1.0 + gap + i)).abs() <= 1e-12,
            "simplex E_R at {x:?}"
        );
    }
    Ok(format!(
        "bifuzzy3 max diff {worst:e}; fuzzy line and simplex hold"
    ))
}

fn entropy_routes() -> Outcome {
    let mut r = rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let x = triple(&mut r);
        let (dt, df) = crisp_distances(x);
        let c = 1.0 - (dt - df).abs() / (dt + df);
        let ru = dt.min(df) / dt.max(df);
        worst = worst
            .max((c - entropy_czekanowski(x)).abs())
            .max((ru - entropy_ruzicka(x)).abs());
    }
    require!(worst <= 1e-12, "max diff {worst:e}");
    Ok(format!("10000 triples, max diff {worst:e}"))
}

trait Algebra: Partition + Copy + PartialEq + std::fmt::Debug {
    fn not(&self) -> Self;
    fn or(&self, o: &Self, fam: TNormFamily) -> Self;
    fn and(&self, o: &Self, fam: TNormFamily) -> Self;
}

macro_rules! algebra {
    ($ty:ty) => {
        impl Algebra for $ty {
            fn not(&self) -> Self {
                self.negate()
            }
            fn or(&self, o: &Self, fam: TNormFamily) -> Self {
                self.union(o, fam)
            }
            fn and(&self, o: &Self, fam: TNormFamily) -> Self {
                self.intersect(o, fam)
            }
        }
    };
}
algebra!(TetraVector);
algebra!(PentaSatVector);
algebra!(PentaDefVector);

fn check_algebra<V: Algebra>(
    name: &str,
    draw: impl Fn(&mut ChaCha8Rng) -> V,
    stream: u64,
) -> std::result::Result<f64, String> {
    let mut r = rng(stream);
    let mut worst: f64 = 0.0;
    for fam in TNormFamily::standard_members() {
        for _ in 0..10_000 {
            let (a, b) = (draw(&mut r), draw(&mut r));
            for v in [a.or(&b, fam), a.and(&b, fam)] {
                require!(
                    partition_ok(&v.components()),
                    "{name}/{fam}: {a:?}, {b:?} -> {v:?}"
                );
            }
            let d1 = max_diff(
                &a.or(&b, fam).not().components(),
                &a.not().and(&b.not(), fam).components(),
            );
            let d2 = max_diff(
                &a.and(&b, fam).not().components(),
                &a.not().or(&b.not(), fam).components(),
            );
            worst = worst.max(d1).max(d2);
            require!(
                d1.max(d2) <= 1e-12,
                "{name}/{fam} De Morgan off by {:e} at {a:?}, {b:?}",
                d1.max(d2)
            );
            require!(
                a.not().not() == a,
                "{name} negation not an involution at {a:?}"
            );
            if fam == TNormFamily::Godel {
                let c = a.components();
                require!(
                    max_diff(&a.or(&a, fam).components(), &c) <= 1e-12,
                    "{name} union idempotence at {a:?}"
                );
                require!(
                    max_diff(&a.and(&a, fam).components(), &c) <= 1e-12,
                    "{name} meet idempotence at {a:?}"
                );
            }
        }
    }
    Ok(worst)
}

fn algebra() -> Outcome {
    let t = check_algebra("tetra", |r| decompose4(triple(r)), 50)?;
    let s = check_algebra("penta-sat", |r| decompose5s(triple(r)), 51)?;
    let d = check_algebra(
        "penta-def",
        |r| {
            let p = DefinednessProfile::ALL[r.gen_range(0..5)];
            decompose5d(triple(r), p)
        },
        52,
    )?;
    let mut r = rng(53);
    for fam in TNormFamily::standard_members() {
        for _ in 0..10_000 {
            let (x, y): (f64, f64) = (r.gen(), r.gen());
            let e = fam.tnorm(x, y) + fam.tconorm(x, y) - (x + y);
            require!(
                e.abs() <= 1e-12,
                "{fam} Frank equation off by {e:e} at ({x}, {y})"
            );
        }
    }
    Ok(format!(
        "3 schemes x 5 families x 10000 pairs; De Morgan max diff {:e}",
        t.max(s).max(d)
    ))
}

fn beta_route() -> Outcome {
    let mut r = rng(6);
    let mut worst: f64 = 0.0;
    for _ in 0..100_000 {
        let x = triple(&mut r);
        worst = worst.max(max_diff(
            &decompose5s_via_beta(x).components(),
            &decompose5s(x).components(),
        ));
        let [bt, bn, bf] = beta_components(x);
        let floor = bt.min(bn).min(bf);
        worst = worst.max((floor - x.t().min(x.i()).min(x.f()) / 3.0).abs());
    }
    require!(worst <= 1e-12, "max diff {worst:e}");
    Ok(format!("100000 triples, max diff {worst:e}"))
}

fn worked_point() -> Outcome {
    let x = q(0.6, 0.5, 0.4);
    let s = ScalarReport::of(x, DefinednessProfile::Rational);
    let checks: [(&str, Vec<f64>, Vec<f64>); 4] = [
        (
            "scalars",
            vec![s.tau, s.lambda, s.omega, s.eta, s.entropy_c, s.entropy_r],
            vec![0.133333, 0.5, 0.333333, 0.1, 0.9, 0.818182],
        ),
        (
            "tetra",
            decompose4(x).components(),
            vec![0.283333, 0.183333, 0.4, 0.133333],
        ),
        (
            "penta-sat",
            decompose5s(x).components(),
            vec![0.15, 0.05, 0.4, 0.4, 0.0],
        ),
        (
            "penta-def",
            decompose5d(x, DefinednessProfile::Rational).components(),
            vec![0.266667, 0.222222, 0.177778, 0.333333, 0.0],
        ),
    ];
    let mut worst: f64 = 0.0;
    for (name, got, want) in checks {
        let d = max_diff(&got, &want);
        require!(d <= 1e-6, "{name}: got {got:?}, want {want:?}");
        worst = worst.max(d);
    }
    Ok(format!("all 19 values within {worst:.1e}"))
}

fn antisymmetry() -> Outcome {
    let mut r = rng(8);
    let mut worst: f64 = 0.0;
    for k in 0..100_000 {
        let x = triple(&mut r);
        let p = DefinednessProfile::ALL[k % 5];
        let a = ScalarReport::of(x, p);
        let b = ScalarReport::of(swap_tf(x), p);
        worst = worst.max((a.eta + b.eta).abs());
        require!(
            (a.eta + b.eta).abs() <= 1e-12,
            "eta not antisymmetric at {x:?} ({p})"
        );
        for v in [a.tau, a.omega, a.eta] {
            require!(
                (-1.0..=1.0).contains(&v),
                "{v} outside [-1, 1] at {x:?} ({p})"
            );
        }
        require!(
            (0.0..=1.0).contains(&a.entropy_c),
            "E_C = {} at {x:?}",
            a.entropy_c
        );
        require!(
            (0.0..=1.0).contains(&a.entropy_r),
            "E_R = {} at {x:?}",
            a.entropy_r
        );
        require!(a.entropy_r <= a.entropy_c + 1e-12, "E_R > E_C at {x:?}");
    }
    Ok(format!("100000 triples, max |eta + eta'| {worst:e}"))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_neutro");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let good = dir.path().join("three.csv");
    fs::write(&good, "id,T,I,F\na,1,0,0\nb,0.5,0.2,0.5\nc,0.6,0.5,0.4\n")
        .map_err(|e| e.to_string())?;

    let analyze = || {
        Command::new(bin)
            .arg("analyze")
            .arg("--input")
            .arg(&good)
            .output()
    };
    let (first, second) = (
        analyze().map_err(|e| e.to_string())?,
        analyze().map_err(|e| e.to_string())?,
    );
    require!(
        first.status.success(),
        "analyze exited with {}",
        first.status
    );
    require!(
        !first.stdout.is_empty() && first.stdout == second.stdout,
        "report not byte-stable"
    );

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "id,T,I,F\na,1,0,0\nb,0.5,oops,0.5\n").map_err(|e| e.to_string())?;
    let out = Command::new(bin)
        .arg("analyze")
        .arg("--input")
        .arg(&bad)
        .output()
        .map_err(|e| e.to_string())?;
    let stderr = String::from_utf8_lossy(&out.stderr);
    require!(
        out.status.code() == Some(1),
        "malformed row exited with {}",
        out.status
    );
    require!(
        stderr.contains("line 3"),
        "message lacks line number: {stderr}"
    );

    let out = Command::new(bin)
        .args(["selfcheck", "--seed", "42", "--samples", "10000"])
        .output()
        .map_err(|e| e.to_string())?;
    require!(
        out.status.code() == Some(0),
        "selfcheck exited with {}:\n{}",
        out.status,
        String::from_utf8_lossy(&out.stdout)
    );
    Ok(format!(
        "{}-byte stable report; malformed row -> exit 1 ({}); selfcheck exit 0",
        first.stdout.len(),
        stderr.trim()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("partition suites", partitions),
        ("prototype table", prototypes),
        ("reduction oracles", reductions),
        ("entropy closed forms vs distance route", entropy_routes),
        ("algebra suite", algebra),
        ("saturation beta-route", beta_route),
        ("worked interior point", worked_point),
        ("score antisymmetry and ranges", antisymmetry),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
