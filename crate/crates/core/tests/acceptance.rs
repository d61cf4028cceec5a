//! End-to-end acceptance suite, run without the libtest harness so that the
//! per-criterion `PASS`/`FAIL` lines always reach the console. Every check is
//! exact. The process exits nonzero if any criterion fails.

use std::collections::HashMap;
use std::process::Command;
use std::time::{Duration, Instant};

use koornwinder::duality::{Duality, PbwMonomial};
use koornwinder::intertwine::{apply_s, check_intertwining, s_squared_scalar};
use koornwinder::laurent::{exponents_up_to, weight, AffineExponent, Exponent, LaurentPolynomial};
use koornwinder::noumi::{apply_d, apply_un, apply_y, check_daha_relations, check_relations, d_lambda, daha_relations};
use koornwinder::paramfield::{Assignment, FieldElement, Param};
use koornwinder::polynomials::oracle::{monomial_symmetric, oracle_e, oracle_p, partitions_up_to};
use koornwinder::polynomials::Koornwinder;
use koornwinder::scalar::{Params, Scalar};
use koornwinder::weyl::{enumerate_w0, spectral_vector, GeneratorWord};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

/// Name, optional time budget in seconds, and the check itself.
type Criterion = (&'static str, Option<u64>, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lift<T>(r: koornwinder::error::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn specialized() -> Params<BigRational> {
    Params::specialized(&Assignment::primes()).expect("primes are nonzero")
}

fn symbolic() -> Params<FieldElement> {
    Params::symbolic()
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> LaurentPolynomial<BigRational> {
    let terms = rng.gen_range(1..=4);
    LaurentPolynomial::from_terms(
        n,
        (0..terms).map(|_| {
            let e: Exponent = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let c = loop {
                let c = rng.gen_range(-5i64..=5);
                if c != 0 {
                    break c;
                }
            };
            (e, BigRational::from_integer(c.into()))
        }),
    )
}

/// Relations whose names mark them as one of the requested defining relations.
fn select_relations(n: usize, names: &[&str]) -> Vec<koornwinder::noumi::Relation<FieldElement>> {
    daha_relations(&symbolic(), n).into_iter().filter(|r| names.iter().any(|k| r.name.starts_with(k))).collect()
}

fn criterion_relations() -> Check {
    for (n, k) in [(2, 2), (3, 1)] {
        let r = lift(check_daha_relations(&specialized(), n, k))?;
        ensure!(r.all_passed(), "n={n}: {}", r.to_json());
        ensure!(r.entries.len() >= 2 * n + 4, "n={n}: suspiciously few relations");
    }
    // (i): quadratic relations; (v): X_n^{-1} T_n^{-1} ~ u_n; (vi): U_0 ~ u_0.
    let rels = select_relations(1, &["quadratic", "X1^-1 T1^-1", "U0 ~"]);
    ensure!(rels.len() == 4, "expected 4 symbolic relations, found {}", rels.len());
    let r = lift(check_relations(&symbolic(), &rels, 1, 2))?;
    ensure!(r.all_passed(), "symbolic n=1: {}", r.to_json());
    Ok(())
}

fn criterion_un_quadratic() -> Check {
    let p = specialized();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let (r, rinv) = (p.sqrt(Param::Un), p.sqrt_inv(Param::Un));
    for trial in 0..30 {
        let n = 1 + trial % 3;
        let f = random_poly(&mut rng, n);
        // (U_n - un^{1/2})(U_n + un^{-1/2}) f = 0.
        let g = apply_un(&p, 1, &f).add(&f.scale(&rinv));
        let h = apply_un(&p, 1, &g).sub(&g.scale(&r));
        ensure!(h.is_zero(), "trial {trial}, n={n}: f={}", f.to_json());
    }
    Ok(())
}

fn functionals(n: usize) -> Vec<AffineExponent> {
    let mut out = vec![AffineExponent::new(vec![0; n], 1)];
    for j in 0..n {
        for s in [1, -1] {
            let mut v = vec![0; n];
            v[j] = s;
            out.push(AffineExponent::new(v, 0));
        }
    }
    out
}

fn intertwining_for<F: Scalar>(p: &Params<F>, n: usize, k: u32) -> Check {
    let fam = Koornwinder::new(p.clone(), n);
    for alpha in exponents_up_to(n, k) {
        let x = LaurentPolynomial::x_pow(alpha.clone());
        let e = lift(fam.compute_e(&alpha))?;
        for i in 0..=n {
            for v in functionals(n) {
                ensure!(check_intertwining(p, i, &v, &x), "intertwining i={i} v={v:?} on x^{alpha:?}");
            }
            let twice = apply_s(p, i, &apply_s(p, i, &e.poly));
            let scalar = lift(s_squared_scalar(p, i, &e.spec))?;
            ensure!(twice == e.poly.scale(&scalar), "S_{i}^2 on E_{alpha:?}");
        }
    }
    Ok(())
}

fn criterion_intertwining() -> Check {
    for n in 1..=2 {
        intertwining_for(&specialized(), n, 3)?;
    }
    intertwining_for(&symbolic(), 1, 3)
}

fn e_construction<F: Scalar>(p: Params<F>, n: usize, k: u32) -> Check {
    let fam = Koornwinder::new(p, n);
    for alpha in exponents_up_to(n, k) {
        let e = lift(fam.compute_e(&alpha))?;
        let spec = spectral_vector(fam.params(), &alpha);
        for i in 1..=n {
            let yi = apply_y(fam.params(), i, 1, &e.poly);
            ensure!(yi == e.poly.scale(&spec[i - 1]), "Y_{i} eigenvalue on E_{alpha:?}, n={n}");
        }
        ensure!(e.poly.max_weight() <= weight(&alpha), "support of E_{alpha:?} exceeds |α|");
        let oracle = lift(oracle_e(fam.params(), &alpha))?;
        ensure!(oracle == e.poly, "E_{alpha:?} differs from the eigenspace oracle, n={n}");
    }
    let basis = lift(fam.basis_check(k))?;
    ensure!(basis.invertible(), "basis rank {} < {} for n={n}", basis.rank, basis.size);
    Ok(())
}

fn criterion_e() -> Check {
    e_construction(symbolic(), 1, 4)?;
    e_construction(specialized(), 2, 4)?;
    e_construction(specialized(), 3, 3)
}

fn w0_invariant<F: Scalar>(f: &LaurentPolynomial<F>) -> std::result::Result<bool, String> {
    let group = lift(enumerate_w0(f.nvars()))?;
    Ok(f.terms().all(|(e, c)| group.iter().all(|(w, _)| f.coefficient(&w.act(e)) == *c)))
}

fn p_construction<F: Scalar>(p: Params<F>, n: usize, k: u32, with_oracle: bool) -> Check {
    let fam = Koornwinder::new(p, n);
    for lambda in partitions_up_to(n, k) {
        let pl = lift(fam.compute_p(&lambda))?.poly;
        ensure!(w0_invariant(&pl)?, "P_{lambda:?} is not W0-invariant");
        ensure!(pl.coefficient(&lambda) == F::one(), "P_{lambda:?} is not monic at x^λ");
        let dl = lift(d_lambda(fam.params(), &lambda))?;
        ensure!(lift(apply_d(fam.params(), &pl))? == pl.scale(&dl), "D P_{lambda:?} != d_λ P_{lambda:?}");
        if with_oracle {
            ensure!(lift(oracle_p(fam.params(), &lambda))? == pl, "P_{lambda:?} differs from the D-eigenvector oracle");
        }
    }
    Ok(())
}

/// `D = s t^{n-1} (Σ_i (Y_i + Y_i^{-1}) - Σ_i (q^{ρ_i} + q^{-ρ_i}))` on symmetric
/// polynomials, with `s = (t0 tn)^{1/2}` and `q^{ρ_i} = s t^{n-i}`.
fn d_through_y(n: usize, k: u32) -> Check {
    let p = symbolic();
    let one = FieldElement::from_int(1);
    let s = p.sqrt(Param::T0) * p.sqrt(Param::Tn);
    let t = p.param(Param::T);
    let tpow = |m: usize| (0..m).fold(one.clone(), |acc, _| acc * t.clone());
    let shift = (1..=n).fold(FieldElement::from_int(0), |acc, i| {
        let r = s.clone() * tpow(n - i);
        acc + r.clone() + r.inverse().expect("nonzero")
    });
    let pre = s.clone() * tpow(n - 1);
    for mu in partitions_up_to(n, k) {
        let m: LaurentPolynomial<FieldElement> = lift(monomial_symmetric(&mu))?;
        let mut ysum = m.scale(&-shift.clone());
        for i in 1..=n {
            ysum = ysum.add(&apply_y(&p, i, 1, &m)).add(&apply_y(&p, i, -1, &m));
        }
        ensure!(lift(apply_d(&p, &m))? == ysum.scale(&pre), "D vs Y-sum on m_{mu:?}, n={n}");
    }
    Ok(())
}

fn criterion_p() -> Check {
    p_construction(specialized(), 1, 4, true)?;
    p_construction(specialized(), 2, 4, true)?;
    p_construction(symbolic(), 1, 4, false)?;
    d_through_y(1, 3)?;
    d_through_y(2, 2)
}

fn duality_for<F: Scalar>(d: &Duality<F>, k: u32) -> Check {
    let n = d.primal().rank();
    let alphas = exponents_up_to(n, k);
    for a in &alphas {
        for b in &alphas {
            ensure!(lift(d.check_e_symmetry(a, b))?, "E-pairing symmetry at ({a:?}, {b:?}), n={n}");
        }
    }
    let lambdas = partitions_up_to(n, k);
    for l in &lambdas {
        for m in &lambdas {
            ensure!(lift(d.check_p_symmetry(l, m))?, "P-pairing symmetry at ({l:?}, {m:?}), n={n}");
            ensure!(lift(d.check_evaluation_duality(l, m))?, "evaluation duality at ({l:?}, {m:?}), n={n}");
        }
    }
    Ok(())
}

fn criterion_duality() -> Check {
    duality_for(&Duality::new(symbolic(), 1), 2)?;
    duality_for(&Duality::new(specialized(), 2), 3)
}

/// `X^α T_w Y^β` with `w ∈ W₀` drawn uniformly and written as a reduced word.
fn random_pbw(rng: &mut ChaCha8Rng, group: &[GeneratorWord], n: usize) -> PbwMonomial {
    let mut v = || (0..n).map(|_| rng.gen_range(-2..=2)).collect::<Exponent>();
    let (alpha, beta) = (v(), v());
    let word = group[rng.gen_range(0..group.len())].clone();
    PbwMonomial { alpha, word, beta }
}

fn criterion_functional_star() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    let spec: HashMap<usize, Duality<BigRational>> = (1..=3).map(|n| (n, Duality::new(specialized(), n))).collect();
    let sym: HashMap<usize, Duality<FieldElement>> = (1..=2).map(|n| (n, Duality::new(symbolic(), n))).collect();
    let groups: HashMap<usize, Vec<GeneratorWord>> =
        (1..=3).map(|n| (n, enumerate_w0(n).expect("small rank").into_iter().map(|(_, w)| w).collect())).collect();
    for trial in 0..50 {
        let n = 1 + trial % 3;
        let h = random_pbw(&mut rng, &groups[&n], n);
        ensure!(lift(spec[&n].check_functional_star(&h))?, "specialized, h={h:?}");
        if let Some(d) = sym.get(&n) {
            ensure!(lift(d.check_functional_star(&h))?, "symbolic, h={h:?}");
        }
    }
    Ok(())
}

fn criterion_three_parameter() -> Check {
    let p = lift(Params::specialized(&Assignment::three_parameter(2, 3, 5)))?;
    for (n, k) in [(1, 2), (2, 2), (3, 1)] {
        let r = lift(check_daha_relations(&p, n, k))?;
        ensure!(r.all_passed(), "n={n}: {}", r.to_json());
    }
    Ok(())
}

fn run_cli(args: &[&str], cache: Option<&std::path::Path>) -> (i32, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_koornwinder"));
    cmd.args(args).env_remove(koornwinder::cli::CACHE_ENV);
    if let Some(dir) = cache {
        cmd.env(koornwinder::cli::CACHE_ENV, dir);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_determinism() -> Check {
    let runs: [(&[&str], i32); 8] = [
        (&["compute-e", "--n", "1", "--alpha", "0"], 0),
        (&["compute-e", "--n", "2", "--alpha", "1,-1", "--seed", "7"], 0),
        (&["compute-p", "--n", "2", "--lambda", "2,1", "--seed", "7"], 0),
        (&["compute-p", "--n", "2", "--lambda", "1,0", "--seed", "7", "--text"], 0),
        (&["basis-check", "--n", "2", "--degree", "2", "--seed", "7"], 0),
        (&["check-relations", "--n", "2", "--degree", "2"], 0),
        (&["check-relations", "--n", "2", "--degree", "1", "--seed", "11"], 0),
        (&["check-duality", "--n", "1", "--max-weight", "2", "--symbolic"], 0),
    ];
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (args, expected) in runs {
        let first = run_cli(args, None);
        ensure!(first.0 == expected, "{args:?} exited {} (expected {expected})", first.0);
        ensure!(run_cli(args, None) == first, "{args:?} is not reproducible");
        let cold = run_cli(args, Some(cache.path()));
        let warm = run_cli(args, Some(cache.path()));
        ensure!(cold == first && warm == first, "{args:?} differs when served from the cache");
    }
    let (_, out) = run_cli(&["compute-e", "--n", "1", "--alpha", "0"], None);
    let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    ensure!(v["label"] == serde_json::json!([0]), "label of E_0");
    ensure!(v["terms"] == serde_json::json!([{"exp": [0], "coeff": 1}]), "terms of E_0");
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 relation suite", Some(60), criterion_relations),
        ("2 U_n quadratic relation", None, criterion_un_quadratic),
        ("3 intertwining and S^2 scalars", None, criterion_intertwining),
        ("4 nonsymmetric construction", None, criterion_e),
        ("5 symmetric construction", None, criterion_p),
        ("6 duality", Some(300), criterion_duality),
        ("7 functional star", None, criterion_functional_star),
        ("8 three-parameter degeneration", None, criterion_three_parameter),
        ("9 CLI determinism", None, criterion_determinism),
    ];
    let mut failures = Vec::new();
    for (name, budget, f) in criteria {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if let Some(secs) = budget {
            if outcome.is_ok() && elapsed > Duration::from_secs(secs) {
                outcome = Err(format!("exceeded the {secs}s budget"));
            }
        }
        match &outcome {
            Ok(()) => println!("PASS criterion {name} ({:.1}s)", elapsed.as_secs_f64()),
            Err(why) => {
                println!("FAIL criterion {name} ({:.1}s): {why}", elapsed.as_secs_f64());
                failures.push(name);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
