//! Randomized invariant self-check.
//!
//! Every property draws its own seeded stream, so a run is fully determined
//! by `(samples, seed, tol)` and adding a property never perturbs the inputs
//! of the others. `tol` is used for partition sums and component floors;
//! identity checks (De Morgan, mirror, reductions) use a fixed 1e-12.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bifuzzy::{bifuzzy3, bifuzzy4_def, bifuzzy4_ign, bifuzzy5, fuzzy3, ifs4};
use crate::error::{Error, Result};
use crate::measures::{
    compare, crisp_distances, definedness, entropy_czekanowski, entropy_ruzicka, net_truth, score,
    DefinednessProfile,
};
use crate::norms::TNormFamily;
use crate::penta_def::{decompose5d, PentaDefVector};
use crate::penta_sat::{beta_components, decompose5s, decompose5s_via_beta, PentaSatVector};
use crate::tetra::{decompose4, TetraVector};
use crate::types::{make_triple, swap_tf, BifuzzyPair, NeutrosophicTriple, Partition, UnitDegree};

const EXACT: f64 = 1e-12;

type Check = std::result::Result<(), String>;

struct Property {
    name: &'static str,
    check: fn(&mut ChaCha8Rng, f64) -> Check,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: usize,
    pub samples: usize,
    pub counterexample: Option<String>,
}

impl PropertyResult {
    pub fn ok(&self) -> bool {
        self.passed == self.samples
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfcheckSummary {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub results: Vec<PropertyResult>,
}

impl SelfcheckSummary {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(PropertyResult::ok)
    }

    /// 0 when every property held, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            3
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "selfcheck samples={} seed={} tol={:e}",
            self.samples, self.seed, self.tol
        );
        for r in &self.results {
            let status = if r.ok() { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {:<32} {}/{}", r.name, r.passed, r.samples);
            if let Some(c) = &r.counterexample {
                let _ = write!(out, "  first counterexample: {c}");
            }
            out.push('\n');
        }
        let good = self.results.iter().filter(|r| r.ok()).count();
        let _ = writeln!(out, "{good}/{} properties passed", self.results.len());
        out
    }
}

/// Runs every property on `samples` seeded random inputs.
pub fn run_selfcheck(samples: usize, seed: u64, tol: f64) -> Result<SelfcheckSummary> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tol must be positive, got {tol}"
        )));
    }
    let results = PROPERTIES
        .iter()
        .enumerate()
        .map(|(k, prop)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let mut passed = 0;
            let mut counterexample = None;
            for _ in 0..samples {
                match (prop.check)(&mut rng, tol) {
                    Ok(()) => passed += 1,
                    Err(c) => {
                        counterexample.get_or_insert(c);
                    }
                }
            }
            PropertyResult {
                name: prop.name,
                passed,
                samples,
                counterexample,
            }
        })
        .collect();
    Ok(SelfcheckSummary {
        samples,
        seed,
        tol,
        results,
    })
}

// Inputs: mostly uniform, with a share of grid values so that corners and
// ties between components show up regularly.
fn unit(rng: &mut ChaCha8Rng) -> f64 {
    if rng.gen_bool(0.15) {
        [0.0, 0.25, 0.5, 0.75, 1.0][rng.gen_range(0..5)]
    } else {
        rng.gen::<f64>()
    }
}

fn triple(rng: &mut ChaCha8Rng) -> NeutrosophicTriple {
    make_triple(unit(rng), unit(rng), unit(rng)).expect("unit components")
}

fn pair(rng: &mut ChaCha8Rng) -> BifuzzyPair {
    BifuzzyPair::new(unit(rng), unit(rng)).expect("unit components")
}

fn profile(rng: &mut ChaCha8Rng) -> DefinednessProfile {
    DefinednessProfile::ALL[rng.gen_range(0..DefinednessProfile::ALL.len())]
}

fn families() -> [TNormFamily; 5] {
    TNormFamily::standard_members()
}

fn fmt_q(q: NeutrosophicTriple) -> String {
    format!("({}, {}, {})", q.t(), q.i(), q.f())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn partition_ok(c: &[f64], tol: f64) -> bool {
    c.iter().all(|&x| x >= -tol) && (c.iter().sum::<f64>() - 1.0).abs() <= tol
}

/// The operator algebra shared by the three schemes.
trait Scheme: Partition + Copy + std::fmt::Debug {
    fn draw(rng: &mut ChaCha8Rng) -> Self;
    fn neg(&self) -> Self;
    fn or(&self, other: &Self, family: TNormFamily) -> Self;
    fn and(&self, other: &Self, family: TNormFamily) -> Self;
}

impl Scheme for TetraVector {
    fn draw(rng: &mut ChaCha8Rng) -> Self {
        decompose4(triple(rng))
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn or(&self, o: &Self, fam: TNormFamily) -> Self {
        self.union(o, fam)
    }
    fn and(&self, o: &Self, fam: TNormFamily) -> Self {
        self.intersect(o, fam)
    }
}

impl Scheme for PentaSatVector {
    fn draw(rng: &mut ChaCha8Rng) -> Self {
        decompose5s(triple(rng))
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn or(&self, o: &Self, fam: TNormFamily) -> Self {
        self.union(o, fam)
    }
    fn and(&self, o: &Self, fam: TNormFamily) -> Self {
        self.intersect(o, fam)
    }
}

impl Scheme for PentaDefVector {
    fn draw(rng: &mut ChaCha8Rng) -> Self {
        let p = profile(rng);
        decompose5d(triple(rng), p)
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn or(&self, o: &Self, fam: TNormFamily) -> Self {
        self.union(o, fam)
    }
    fn and(&self, o: &Self, fam: TNormFamily) -> Self {
        self.intersect(o, fam)
    }
}

fn operators_partition<V: Scheme>(rng: &mut ChaCha8Rng, tol: f64) -> Check {
    let (a, b) = (V::draw(rng), V::draw(rng));
    for fam in families() {
        for (op, r) in [("union", a.or(&b, fam)), ("intersection", a.and(&b, fam))] {
            ensure(partition_ok(&r.components(), tol), || {
                format!("{op} {fam} of {a:?} and {b:?} gave {r:?}")
            })?;
        }
    }
    Ok(())
}

fn de_morgan<V: Scheme>(rng: &mut ChaCha8Rng, _: f64) -> Check {
    let (a, b) = (V::draw(rng), V::draw(rng));
    for fam in families() {
        let l = a.or(&b, fam).neg().components();
        let r = a.neg().and(&b.neg(), fam).components();
        ensure(close(&l, &r, EXACT), || {
            format!("{fam}: not(a or b) != not a and not b for {a:?}, {b:?}")
        })?;
        let l = a.and(&b, fam).neg().components();
        let r = a.neg().or(&b.neg(), fam).components();
        ensure(close(&l, &r, EXACT), || {
            format!("{fam}: not(a and b) != not a or not b for {a:?}, {b:?}")
        })?;
    }
    Ok(())
}

fn involution<V: Scheme>(rng: &mut ChaCha8Rng, _: f64) -> Check {
    let a = V::draw(rng);
    ensure(a.neg().neg().components() == a.components(), || {
        format!("{a:?}")
    })
}

fn commutativity<V: Scheme>(rng: &mut ChaCha8Rng, _: f64) -> Check {
    let (a, b) = (V::draw(rng), V::draw(rng));
    for fam in families() {
        ensure(
            a.or(&b, fam).components() == b.or(&a, fam).components(),
            || format!("union {fam}: {a:?}, {b:?}"),
        )?;
        ensure(
            a.and(&b, fam).components() == b.and(&a, fam).components(),
            || format!("intersection {fam}: {a:?}, {b:?}"),
        )?;
    }
    Ok(())
}

fn godel_idempotence<V: Scheme>(rng: &mut ChaCha8Rng, _: f64) -> Check {
    let a = V::draw(rng);
    let c = a.components();
    ensure(
        close(&a.or(&a, TNormFamily::Godel).components(), &c, EXACT),
        || format!("union {a:?}"),
    )?;
    ensure(
        close(&a.and(&a, TNormFamily::Godel).components(), &c, EXACT),
        || format!("intersection {a:?}"),
    )
}

static PROPERTIES: &[Property] = &[
    Property {
        name: "triple.swap_involution",
        check: |rng, _| {
            let q = triple(rng);
            ensure(swap_tf(swap_tf(q)) == q, || fmt_q(q))
        },
    },
    Property {
        name: "triple.range_rejection",
        check: |rng, _| {
            let bad = if rng.gen_bool(0.5) {
                -1e-9 - rng.gen::<f64>()
            } else {
                1.0 + 1e-9 + rng.gen::<f64>()
            };
            let slot = rng.gen_range(0..3);
            let mut c = [unit(rng), unit(rng), unit(rng)];
            c[slot] = bad;
            ensure(make_triple(c[0], c[1], c[2]).is_err(), || {
                format!("{c:?} accepted")
            })
        },
    },
    Property {
        name: "norms.commutativity",
        check: |rng, _| {
            let (x, y) = (unit(rng), unit(rng));
            for fam in families() {
                ensure((fam.tnorm(x, y) - fam.tnorm(y, x)).abs() <= EXACT, || {
                    format!("{fam} tnorm({x}, {y})")
                })?;
                ensure(
                    (fam.tconorm(x, y) - fam.tconorm(y, x)).abs() <= EXACT,
                    || format!("{fam} tconorm({x}, {y})"),
                )?;
            }
            Ok(())
        },
    },
    Property {
        name: "norms.associativity",
        check: |rng, _| {
            let (x, y, z) = (unit(rng), unit(rng), unit(rng));
            for fam in families() {
                let (l, r) = (fam.tnorm(fam.tnorm(x, y), z), fam.tnorm(x, fam.tnorm(y, z)));
                ensure((l - r).abs() <= EXACT, || {
                    format!("{fam} tnorm on ({x}, {y}, {z}): {l} vs {r}")
                })?;
                let (l, r) = (
                    fam.tconorm(fam.tconorm(x, y), z),
                    fam.tconorm(x, fam.tconorm(y, z)),
                );
                ensure((l - r).abs() <= EXACT, || {
                    format!("{fam} tconorm on ({x}, {y}, {z}): {l} vs {r}")
                })?;
            }
            Ok(())
        },
    },
    Property {
        name: "norms.monotonicity",
        check: |rng, _| {
            let (a, b, y) = (unit(rng), unit(rng), unit(rng));
            let (lo, hi) = (a.min(b), a.max(b));
            for fam in families() {
                ensure(fam.tnorm(lo, y) <= fam.tnorm(hi, y), || {
                    format!("{fam} tnorm({lo}|{hi}, {y})")
                })?;
                ensure(fam.tconorm(lo, y) <= fam.tconorm(hi, y), || {
                    format!("{fam} tconorm({lo}|{hi}, {y})")
                })?;
            }
            Ok(())
        },
    },
    Property {
        name: "norms.boundary",
        check: |rng, _| {
            let x = unit(rng);
            for fam in families() {
                ensure((fam.tnorm(x, 1.0) - x).abs() <= EXACT, || {
                    format!("{fam} tnorm({x}, 1)")
                })?;
                ensure((fam.tconorm(x, 0.0) - x).abs() <= EXACT, || {
                    format!("{fam} tconorm({x}, 0)")
                })?;
            }
            Ok(())
        },
    },
    Property {
        name: "norms.frank_equation",
        check: |rng, _| {
            let (x, y) = (unit(rng), unit(rng));
            for fam in families() {
                let lhs = fam.tnorm(x, y) + fam.tconorm(x, y);
                ensure((lhs - (x + y)).abs() <= EXACT, || {
                    format!("{fam} at ({x}, {y}): {lhs}")
                })?;
            }
            Ok(())
        },
    },
    Property {
        name: "norms.de_morgan",
        check: |rng, _| {
            let (x, y) = (unit(rng), unit(rng));
            for fam in families() {
                let dual = 1.0 - fam.tnorm(1.0 - x, 1.0 - y);
                ensure(fam.tconorm(x, y) == dual, || format!("{fam} at ({x}, {y})"))?;
            }
            Ok(())
        },
    },
    Property {
        name: "bifuzzy.partitions",
        check: |rng, tol| {
            let p = pair(rng);
            let (mu, nu) = (p.mu(), p.nu());
            let ok = partition_ok(&fuzzy3(UnitDegree::new(mu).unwrap()).components(), tol)
                && partition_ok(&bifuzzy3(p).components(), tol)
                && partition_ok(&bifuzzy4_def(p).components(), tol)
                && partition_ok(&bifuzzy4_ign(p).components(), tol)
                && partition_ok(&bifuzzy5(p).components(), tol);
            ensure(ok, || format!("(mu, nu) = ({mu}, {nu})"))?;
            let ip = BifuzzyPair::new(mu, (1.0 - mu) * nu).unwrap();
            let v = ifs4(ip).map_err(|e| e.to_string())?;
            ensure(partition_ok(&v.components(), tol), || {
                format!("intuitionistic ({mu}, {})", ip.nu())
            })
        },
    },
    Property {
        name: "bifuzzy.exclusions",
        check: |rng, _| {
            let p = pair(rng);
            let f3 = fuzzy3(UnitDegree::new(p.mu()).unwrap());
            let (g, b5, d4) = (bifuzzy4_ign(p), bifuzzy5(p), bifuzzy4_def(p));
            let ok = (f3.t * f3.f).abs() <= EXACT
                && (g.t * g.f).abs() <= EXACT
                && (b5.t * b5.f).abs() <= EXACT
                && (b5.o * b5.u).abs() <= EXACT
                && (d4.o * d4.u).abs() <= EXACT;
            ensure(ok, || format!("(mu, nu) = ({}, {})", p.mu(), p.nu()))
        },
    },
    Property {
        name: "bifuzzy.mirror",
        check: |rng, _| {
            let p = pair(rng);
            let m = p.swapped();
            let (a, b) = (bifuzzy3(p), bifuzzy3(m));
            let mut ok = (a.t, a.w, a.f) == (b.f, b.w, b.t);
            let (a, b) = (bifuzzy4_def(p), bifuzzy4_def(m));
            ok &= (a.t, a.o, a.u, a.f) == (b.f, b.o, b.u, b.t);
            let (a, b) = (bifuzzy4_ign(p), bifuzzy4_ign(m));
            ok &= (a.t, a.c, a.w, a.f) == (b.f, b.c, b.w, b.t);
            let (a, b) = (bifuzzy5(p), bifuzzy5(m));
            ok &= (a.t, a.o, a.v, a.u, a.f) == (b.f, b.o, b.v, b.u, b.t);
            ensure(ok, || format!("(mu, nu) = ({}, {})", p.mu(), p.nu()))
        },
    },
    Property {
        name: "measures.profile_monotone",
        check: |rng, _| {
            let (a, b) = (rng.gen::<f64>(), rng.gen::<f64>());
            let (lo, hi) = (a.min(b), a.max(b));
            for p in DefinednessProfile::ALL {
                ensure(definedness(lo, p) <= definedness(hi, p) + EXACT, || {
                    format!("{p} at {lo} vs {hi}")
                })?;
            }
            Ok(())
        },
    },
    Property {
        name: "measures.mirror",
        check: |rng, _| {
            let (q, p) = (triple(rng), profile(rng));
            let m = swap_tf(q);
            let ok = (net_truth(m) + net_truth(q)).abs() <= EXACT
                && (score(m, p) + score(q, p)).abs() <= EXACT
                && (entropy_czekanowski(m) - entropy_czekanowski(q)).abs() <= EXACT
                && (entropy_ruzicka(m) - entropy_ruzicka(q)).abs() <= EXACT;
            ensure(ok, || format!("{} with {p}", fmt_q(q)))
        },
    },
    Property {
        name: "measures.ranges",
        check: |rng, _| {
            let (q, p) = (triple(rng), profile(rng));
            let r = crate::measures::ScalarReport::of(q, p);
            let ok = [r.tau, r.omega, r.eta]
                .iter()
                .all(|v| (-1.0..=1.0).contains(v))
                && r.entropy_r >= -EXACT
                && r.entropy_r <= r.entropy_c + EXACT
                && r.entropy_c <= 1.0 + EXACT;
            ensure(ok, || format!("{} with {p}: {r:?}", fmt_q(q)))
        },
    },
    Property {
        name: "measures.distance_route",
        check: |rng, _| {
            let q = triple(rng);
            let (dt, df) = crisp_distances(q);
            let c = 1.0 - (dt - df).abs() / (dt + df);
            let r = 1.0 - (dt - df).abs() / dt.max(df);
            let ok = (c - entropy_czekanowski(q)).abs() <= EXACT
                && (r - entropy_ruzicka(q)).abs() <= EXACT;
            ensure(ok, || fmt_q(q))
        },
    },
    Property {
        name: "measures.fuzzy_line",
        check: |rng, _| {
            let mu = unit(rng);
            let q = make_triple(mu, 0.0, 1.0 - mu).unwrap();
            let d = (2.0 * mu - 1.0).abs();
            let ok = (entropy_czekanowski(q) - (1.0 - d)).abs() <= EXACT
                && (entropy_ruzicka(q) - (1.0 - d) / (1.0 + d)).abs() <= EXACT;
            ensure(ok, || fmt_q(q))
        },
    },
    Property {
        name: "measures.simplex",
        check: |rng, _| {
            let (a, b) = (rng.gen::<f64>(), rng.gen::<f64>());
            let (lo, hi) = (a.min(b), a.max(b));
            let q = make_triple(lo, hi - lo, 1.0 - hi).unwrap();
            let (gap, i) = ((q.t() - q.f()).abs(), q.i());
            let ok = (entropy_czekanowski(q) - (1.0 - gap / (1.0 + i))).abs() <= EXACT
                && (entropy_ruzicka(q) - (1.0 - gap + i) / (1.0 + gap + i)).abs() <= EXACT;
            ensure(ok, || fmt_q(q))
        },
    },
    Property {
        name: "measures.total_preorder",
        check: |rng, _| {
            let (a, b, c, p) = (triple(rng), triple(rng), triple(rng), profile(rng));
            let ab = compare(a, b, p);
            let ok = compare(a, a, p).is_eq()
                && ab == compare(b, a, p).reverse()
                && !(ab.is_gt() && compare(b, c, p).is_gt() && !compare(a, c, p).is_gt());
            ensure(ok, || {
                format!("{}, {}, {} with {p}", fmt_q(a), fmt_q(b), fmt_q(c))
            })
        },
    },
    Property {
        name: "tetra.partition",
        check: |rng, tol| {
            let q = triple(rng);
            ensure(partition_ok(&decompose4(q).components(), tol), || fmt_q(q))
        },
    },
    Property {
        name: "tetra.atanassov",
        check: |rng, _| {
            let p = pair(rng);
            let v = decompose4(make_triple(p.mu(), 0.0, p.nu()).unwrap());
            let b = bifuzzy3(p);
            ensure(
                v.n == 0.0 && close(&[v.t, v.w, v.f], &[b.t, b.w, b.f], EXACT),
                || format!("(mu, nu) = ({}, {})", p.mu(), p.nu()),
            )
        },
    },
    Property {
        name: "tetra.mirror",
        check: |rng, _| {
            let q = triple(rng);
            ensure(decompose4(swap_tf(q)) == decompose4(q).negate(), || {
                fmt_q(q)
            })
        },
    },
    Property {
        name: "tetra.operators_partition",
        check: operators_partition::<TetraVector>,
    },
    Property {
        name: "tetra.de_morgan",
        check: de_morgan::<TetraVector>,
    },
    Property {
        name: "tetra.involution",
        check: involution::<TetraVector>,
    },
    Property {
        name: "tetra.commutativity",
        check: commutativity::<TetraVector>,
    },
    Property {
        name: "tetra.associativity",
        check: |rng, _| {
            let (a, b, c) = (
                TetraVector::draw(rng),
                TetraVector::draw(rng),
                TetraVector::draw(rng),
            );
            for fam in families() {
                let l = a.union(&b, fam).union(&c, fam).components();
                let r = a.union(&b.union(&c, fam), fam).components();
                ensure(close(&l, &r, 1e-9), || {
                    format!("union {fam}: {a:?}, {b:?}, {c:?}")
                })?;
                let l = a.intersect(&b, fam).intersect(&c, fam).components();
                let r = a.intersect(&b.intersect(&c, fam), fam).components();
                ensure(close(&l, &r, 1e-9), || {
                    format!("intersection {fam}: {a:?}, {b:?}, {c:?}")
                })?;
            }
            Ok(())
        },
    },
    Property {
        name: "tetra.godel_idempotence",
        check: godel_idempotence::<TetraVector>,
    },
    Property {
        name: "penta_sat.partition",
        check: |rng, tol| {
            let q = triple(rng);
            ensure(partition_ok(&decompose5s(q).components(), tol), || fmt_q(q))
        },
    },
    Property {
        name: "penta_sat.beta_route",
        check: |rng, _| {
            let q = triple(rng);
            let [bt, bn, bf] = beta_components(q);
            let floor = bt.min(bn).min(bf);
            let min = q.t().min(q.i()).min(q.f());
            let ok = close(
                &decompose5s_via_beta(q).components(),
                &decompose5s(q).components(),
                EXACT,
            ) && (floor - min / 3.0).abs() <= EXACT;
            ensure(ok, || fmt_q(q))
        },
    },
    Property {
        name: "penta_sat.mirror",
        check: |rng, _| {
            let q = triple(rng);
            ensure(decompose5s(swap_tf(q)) == decompose5s(q).negate(), || {
                fmt_q(q)
            })
        },
    },
    Property {
        name: "penta_sat.below_tetra",
        check: |rng, _| {
            let q = triple(rng);
            let (v4, v5) = (decompose4(q), decompose5s(q));
            let ok = v5.t <= v4.t + EXACT && v5.n <= v4.n + EXACT && v5.f <= v4.f + EXACT;
            ensure(ok, || fmt_q(q))
        },
    },
    Property {
        name: "penta_sat.operators_partition",
        check: operators_partition::<PentaSatVector>,
    },
    Property {
        name: "penta_sat.de_morgan",
        check: de_morgan::<PentaSatVector>,
    },
    Property {
        name: "penta_sat.involution",
        check: involution::<PentaSatVector>,
    },
    Property {
        name: "penta_sat.godel_idempotence",
        check: godel_idempotence::<PentaSatVector>,
    },
    Property {
        name: "penta_def.partition",
        check: |rng, tol| {
            let q = triple(rng);
            for p in DefinednessProfile::ALL {
                let v = decompose5d(q, p);
                ensure(partition_ok(&v.components(), tol), || {
                    format!("{} with {p}", fmt_q(q))
                })?;
                ensure(v.o * v.u == 0.0, || {
                    format!("{} with {p}: o and u both positive", fmt_q(q))
                })?;
            }
            Ok(())
        },
    },
    Property {
        name: "penta_def.mirror",
        check: |rng, _| {
            let (q, p) = (triple(rng), profile(rng));
            let l = decompose5d(swap_tf(q), p).components();
            let r = decompose5d(q, p).negate().components();
            ensure(close(&l, &r, EXACT), || format!("{} with {p}", fmt_q(q)))
        },
    },
    Property {
        name: "penta_def.operators_partition",
        check: operators_partition::<PentaDefVector>,
    },
    Property {
        name: "penta_def.de_morgan",
        check: de_morgan::<PentaDefVector>,
    },
    Property {
        name: "penta_def.involution",
        check: involution::<PentaDefVector>,
    },
    Property {
        name: "penta_def.godel_idempotence",
        check: godel_idempotence::<PentaDefVector>,
    },
];
