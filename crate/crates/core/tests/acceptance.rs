//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --test acceptance`.

use std::collections::HashMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use kvquad::kvsolver::{gauge_family, kv1_residual, solve_kv};
use kvquad::liecore::{bch, dynkin_left_normed, LieElement};
use kvquad::random::Generator;
use kvquad::rational::{factorial, q, q_frac, Q};
use kvquad::tangential::{act_on_trace, div, div_quad, SimplicialPattern, TangentialDerivation};
use kvquad::traces::tr_quad;
use kvquad::verifier::{
    homo_kernel, key_instances, prop_u_derivation, series_data, standard_gauge_pairs,
    verify_cocycle_equation, verify_prop_key, verify_prop_last, verify_prop_u,
    verify_series_identities, verify_theorem, Status,
};
use kvquad::{AssocSeries, KvSolution, Word};

const BCH_ORACLE_DEGREE: usize = 5;
const BCH_TIME_LIMIT: Duration = Duration::from_secs(1);
const KV1_ORDER: usize = 8;
const KV1_TIME_LIMIT: Duration = Duration::from_secs(10);
const THEOREM_ORDER: usize = 8;
const THEOREM_TIME_LIMIT: Duration = Duration::from_secs(60);
const MIN_GAUGE_SHIFTS: usize = 5;
const KEY_INSTANCES: usize = 24;
const KEY_SEED: u64 = 1;
const ARITY3_ORDER: usize = 6;
const HOMO_DEGREES: [(usize, usize); 7] = [(2, 1), (3, 0), (4, 1), (5, 0), (6, 1), (7, 0), (8, 1)];
const SERIES_ORDER: usize = 8;
const PROPERTY_INSTANCES: usize = 50;
const PROPERTY_SEED: u64 = 20;
const CLI_ORDER: usize = 6;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, start: Instant) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

// Word polynomials kept apart from the library for the oracle.
type Poly = HashMap<Vec<u8>, Q>;

fn poly_mul(a: &Poly, b: &Poly, max: usize) -> Poly {
    let mut out = Poly::new();
    for (u, c) in a {
        for (v, d) in b {
            if u.len() + v.len() <= max {
                let w: Vec<u8> = u.iter().chain(v).copied().collect();
                *out.entry(w).or_insert_with(Q::zero) += c * d;
            }
        }
    }
    out
}

fn poly_commutator(a: &Poly, b: &Poly, max: usize) -> Poly {
    let mut out = poly_mul(a, b, max);
    for (w, c) in poly_mul(b, a, max) {
        *out.entry(w).or_insert_with(Q::zero) -= c;
    }
    out
}

fn letter(l: u8) -> Poly {
    Poly::from([(vec![l], Q::one())])
}

/// Dynkin's summation formula: sum over n and exponent sequences
/// `(r_1, s_1, .., r_n, s_n)` with `r_i + s_i > 0` of
/// `(-1)^{n-1}/n * [x^{r_1} y^{s_1} ..] / (sum (r_i + s_i) * prod r_i! s_i!)`,
/// where `[...]` is the right-nested bracketing of the word.
fn dynkin_bch(max: usize) -> Poly {
    fn blocks(budget: usize) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for r in 0..=budget {
            for s in 0..=budget - r {
                if r + s > 0 {
                    v.push((r, s));
                }
            }
        }
        v
    }
    fn walk(seq: &mut Vec<(usize, usize)>, budget: usize, out: &mut Poly, max: usize) {
        if !seq.is_empty() {
            let n = seq.len() as i64;
            let total: usize = seq.iter().map(|(r, s)| r + s).sum();
            let mut denom = q(total as i64);
            for (r, s) in seq.iter() {
                denom *= factorial(*r) * factorial(*s);
            }
            let sign = if n % 2 == 1 { q(1) } else { q(-1) };
            let coeff = sign / (q(n) * denom);
            let word: Vec<u8> = seq
                .iter()
                .flat_map(|&(r, s)| std::iter::repeat(0u8).take(r).chain(std::iter::repeat(1u8).take(s)))
                .collect();
            let mut nested = letter(*word.last().expect("nonempty"));
            for &l in word.iter().rev().skip(1) {
                nested = poly_commutator(&letter(l), &nested, max);
            }
            for (w, c) in nested {
                *out.entry(w).or_insert_with(Q::zero) += &coeff * c;
            }
        }
        for b in blocks(budget) {
            seq.push(b);
            walk(seq, budget - b.0 - b.1, out, max);
            seq.pop();
        }
    }
    let mut out = Poly::new();
    walk(&mut Vec::new(), max, &mut out, max);
    out.retain(|_, c| !c.is_zero());
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let oracle = dynkin_bch(BCH_ORACLE_DEGREE);
    let ours = bch(BCH_ORACLE_DEGREE).map_err(|e| e.to_string())?.to_assoc();
    let mut checked = 0;
    for (w, c) in ours.terms() {
        let o = oracle.get(w.letters()).cloned().unwrap_or_else(Q::zero);
        ensure(&o == c, || format!("word {}: {c} vs oracle {o}", w.encode()))?;
        checked += 1;
    }
    for (w, c) in &oracle {
        let ours_c = ours.coeff(&Word::from_slice(w));
        ensure(&ours_c == c, || format!("oracle word {w:?} missing"))?;
    }
    let t = timed(BCH_TIME_LIMIT, start)?;
    Ok(format!("{checked} word coefficients through degree {BCH_ORACLE_DEGREE} match, {t}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let s = solve_kv(KV1_ORDER).map_err(|e| e.to_string())?;
    let r = kv1_residual(&s).map_err(|e| e.to_string())?;
    ensure(r.is_zero(), || format!("residual {r}"))?;
    let t = timed(KV1_TIME_LIMIT, start)?;
    Ok(format!("residual vanishes through degree {}, {t}", r.order()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let s = solve_kv(THEOREM_ORDER).map_err(|e| e.to_string())?;
    let pairs = standard_gauge_pairs(THEOREM_ORDER).map_err(|e| e.to_string())?;
    let family = gauge_family(&s, &pairs).map_err(|e| e.to_string())?;
    ensure(family.len() > MIN_GAUGE_SHIFTS, || format!("only {} members", family.len()))?;
    for (i, m) in family.iter().enumerate() {
        if i > 0 {
            ensure(!m.a.agrees_with(&s.a) || !m.b.agrees_with(&s.b), || {
                format!("gauge shift {i} equals the canonical solution")
            })?;
        }
        let r = verify_theorem(m).map_err(|e| e.to_string())?;
        ensure(r.passed() && r.count(Status::Pass) == THEOREM_ORDER, || r.to_string())?;
    }
    let t = timed(THEOREM_TIME_LIMIT, start)?;
    Ok(format!(
        "quadratic KV equation holds through degree {THEOREM_ORDER} for canonical + {} gauge shifts, {t}",
        family.len() - 1
    ))
}

fn criterion_4() -> Outcome {
    let instances = key_instances(KEY_SEED, KEY_INSTANCES).map_err(|e| e.to_string())?;
    let arities: std::collections::BTreeSet<usize> = instances.iter().map(|p| p.arity()).collect();
    ensure(arities.contains(&2) && arities.contains(&3), || format!("arities {arities:?}"))?;
    let r = verify_prop_key(&instances).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.to_string())?;
    let symmetric = r
        .outcomes
        .iter()
        .filter(|o| o.subject.as_deref().is_some_and(|s| s.ends_with("symmetry")))
        .count();
    ensure(symmetric > 0, || "no symmetry checks ran".into())?;
    Ok(format!(
        "{} derivations in arities {arities:?}: div_quad = 0 and d_i a_i = tau(d_i a_i) ({} checks)",
        instances.len(),
        r.count(Status::Pass)
    ))
}

fn criterion_5() -> Outcome {
    let s = solve_kv(ARITY3_ORDER).map_err(|e| e.to_string())?;
    let u = verify_prop_u(&s).map_err(|e| e.to_string())?;
    ensure(u.passed(), || u.to_string())?;
    let big_u = prop_u_derivation(&s.derivation().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let last = verify_prop_last(&[big_u]).map_err(|e| e.to_string())?;
    ensure(last.passed() && last.count(Status::Skip) == 0, || last.to_string())?;
    let cocycle = verify_cocycle_equation(&s).map_err(|e| e.to_string())?;
    ensure(cocycle.passed(), || cocycle.to_string())?;
    Ok(format!(
        "U(ch) = 0, div_quad(U) = 0 and the cocycle combination vanish through degree {ARITY3_ORDER}"
    ))
}

fn criterion_6() -> Outcome {
    let mut dims = Vec::new();
    for (n, expected) in HOMO_DEGREES {
        let k = homo_kernel(n).map_err(|e| e.to_string())?;
        ensure(k.basis.len() == expected, || format!("degree {n}: dimension {}", k.basis.len()))?;
        ensure(k.report.passed(), || k.report.to_string())?;
        if expected == 1 {
            // independent span check: tr_quad((x+z)^n - x^n - z^n) is a multiple of the kernel vector
            let x = AssocSeries::generator(2, 0, n).unwrap();
            let z = AssocSeries::generator(2, 1, n).unwrap();
            let target = tr_quad(&x.add(&z).unwrap().pow(n).sub(&x.pow(n)).unwrap().sub(&z.pow(n)).unwrap());
            let v = &k.basis[0];
            let (class, c) = v.terms().next().ok_or("zero kernel vector")?;
            let ratio = target.coeff(class) / c;
            ensure(target.agrees_with(&v.scaled(&ratio)), || format!("degree {n}: span mismatch"))?;
        }
        dims.push(k.basis.len().to_string());
    }
    Ok(format!("dimensions {} for n = 2..8, all coboundaries", dims.join(",")))
}

/// `t/(e^t - 1) - 1 + t/2` by dividing `1` by `(e^t - 1)/t`, coefficientwise.
fn f_by_division(order: usize) -> Vec<Q> {
    let d: Vec<Q> = (0..=order).map(|k| factorial(k + 1).recip()).collect();
    let mut inv = vec![Q::zero(); order + 1];
    inv[0] = Q::one();
    for k in 1..=order {
        let s: Q = (1..=k).map(|j| &d[j] * &inv[k - j]).sum();
        inv[k] = -s;
    }
    inv[0] -= Q::one();
    if order >= 1 {
        inv[1] += q_frac(1, 2);
    }
    inv
}

fn criterion_7() -> Outcome {
    let s = solve_kv(SERIES_ORDER).map_err(|e| e.to_string())?;
    let r = verify_series_identities(&s).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.to_string())?;
    let oracle = f_by_division(SERIES_ORDER);
    ensure(oracle[2] == q_frac(1, 12), || format!("oracle f2 = {}", oracle[2]))?;
    let data = series_data(&s);
    let d = data.beta.odd_part().sub(&data.alpha.odd_part());
    for k in 1..=SERIES_ORDER {
        let f_k = d.coeff(k - 1) * q(-2) / q(k as i64);
        ensure(f_k == oracle[k], || format!("f_{k}: {f_k} vs {}", oracle[k]))?;
    }
    Ok(format!(
        "alpha, beta_odd and f agree through degree {SERIES_ORDER} (measured b = {}, f2 = 1/12)",
        data.b
    ))
}

fn random_derivation(g: &mut Generator, arity: usize, order: usize) -> TangentialDerivation {
    let tuple = (0..arity).map(|_| g.lie(arity, 1, order.min(3), order, 3)).collect();
    TangentialDerivation::new(tuple).unwrap()
}

fn criterion_8() -> Outcome {
    let mut g = Generator::new(PROPERTY_SEED);
    let n = PROPERTY_INSTANCES;
    let order = 6;
    for i in 0..n {
        let alpha = g.lie(2, 1, 3, order, 3).to_assoc();
        for k in [1, 3, 5] {
            let p = alpha.pow(k);
            ensure(tr_quad(&p).is_zero(), || format!("odd power {k}, instance {i}"))?;
        }
    }
    for i in 0..n {
        let a = g.assoc(3, 0, 4, order, 4);
        let b = g.assoc(3, 0, 4, order, 4);
        let lhs = a.mul(&b).unwrap().tau();
        let rhs = b.tau().mul(&a.tau()).unwrap();
        ensure(lhs.agrees_with(&rhs) && a.tau().tau().agrees_with(&a), || format!("tau, instance {i}"))?;
        ensure(a.decompose().reconstruct().agrees_with(&a), || format!("decompose, instance {i}"))?;
    }
    for i in 0..n {
        let p = g.lie(3, 1, 5, order, 4).to_assoc();
        let delta = dynkin_left_normed(&p);
        let mut expected = AssocSeries::zero(3, order);
        for k in 1..=order {
            expected = expected.linear_combination(&p.degree_part(k), &q(k as i64)).unwrap();
        }
        ensure(delta.agrees_with(&expected), || format!("Dynkin, instance {i}"))?;
    }
    for i in 0..n {
        let u = random_derivation(&mut g, 2, 5);
        let v = random_derivation(&mut g, 2, 5);
        let lhs = div(&u.bracket(&v).unwrap());
        let rhs = act_on_trace(&u, &div(&v)).unwrap().sub(&act_on_trace(&v, &div(&u)).unwrap()).unwrap();
        ensure(lhs.agrees_with(&rhs), || format!("div cocycle, instance {i}"))?;
        let lhs = div_quad(&u.bracket(&v).unwrap());
        let rhs = act_on_trace(&u, &div_quad(&v)).unwrap().sub(&act_on_trace(&v, &div_quad(&u)).unwrap()).unwrap();
        ensure(lhs.agrees_with(&rhs), || format!("div_quad cocycle, instance {i}"))?;
    }
    let order3 = 4;
    for i in 0..n {
        let u = random_derivation(&mut g, 2, order3);
        let du = div(&u);
        for p in SimplicialPattern::ALL {
            let lhs = div(&u.simplicial(p).unwrap());
            let rhs = du.substitute(&p.arguments(order3).unwrap()).unwrap();
            ensure(lhs.agrees_with(&rhs), || format!("simplicial {}, instance {i}", p.label()))?;
        }
    }
    Ok(format!(
        "odd powers, tau, decompose, Dynkin, div cocycle, simplicial x4: {n} instances each (seed {PROPERTY_SEED})"
    ))
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("kvquad-acceptance-{}-{name}.json", std::process::id()))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_kvquad");
    let status = Command::new(bin)
        .args(["verify", "--order", &CLI_ORDER.to_string(), "--suite", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(0), || {
        format!("verify --suite all exited {:?}", status.status.code())
    })?;

    let s = solve_kv(CLI_ORDER).map_err(|e| e.to_string())?;
    let path = temp_path("corrupt");
    let path_s = path.to_string_lossy().into_owned();
    let mut tried = 0;
    for l in kvquad::liecore::lyndon_words(2, CLI_ORDER) {
        for in_a in [true, false] {
            let word = l.word();
            let mut bad: KvSolution = s.clone();
            let target: &mut LieElement = if in_a { &mut bad.a } else { &mut bad.b };
            let c = target.coeff(word) + q(1);
            target.set_coeff(word, c).map_err(|e| e.to_string())?;
            std::fs::write(&path, serde_json::to_string(&bad).unwrap()).map_err(|e| e.to_string())?;
            let out = Command::new(bin)
                .args(["verify", "--order", &CLI_ORDER.to_string(), "--suite", "kv1", "--json", "--solution", &path_s])
                .output()
                .map_err(|e| e.to_string())?;
            let stdout = String::from_utf8_lossy(&out.stdout);
            let slot = format!("{} at {}", if in_a { "A" } else { "B" }, word.encode());
            ensure(out.status.code() == Some(1), || format!("corruption of {slot} exited {:?}", out.status.code()))?;
            ensure(stdout.contains("\"status\":\"fail\"") && stdout.contains("\"witness\":\"lyndon"), || {
                format!("corruption of {slot}: no witness in output")
            })?;
            tried += 1;
        }
    }
    let _ = std::fs::remove_file(&path);
    Ok(format!("suite all exits 0; {tried} single-coefficient corruptions all exit 1 with witnesses"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("BCH oracle equivalence", criterion_1),
        ("canonical KV solution", criterion_2),
        ("main theorem", criterion_3),
        ("divergence on tr^2 derivations", criterion_4),
        ("U annihilates ch, div_quad(U), cocycle", criterion_5),
        ("homogeneous kernel", criterion_6),
        ("generating series", criterion_7),
        ("structural properties", criterion_8),
        ("command line", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
