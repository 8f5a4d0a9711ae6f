//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::collections::BTreeMap;
use std::time::Instant;

use hcoef::classifier::{bounds_report, classify_e1, classify_e2, macaulay_bound};
use hcoef::config::Config;
use hcoef::constructions::{builtin_examples, random_cm_spec_of, verify_examples, RandomKind, WANG};
use hcoef::filtration::{
    colon_lengths, find_superficial, minimal_reduction, ratliff_rush, rho, rng_for, sigma, times_one_minus_z,
};
use hcoef::poly::Monomial;
use hcoef::report::{analyze, InvariantReport};
use hcoef::ring::LocalRing;
use hcoef::semigroup::Semigroup;
use hcoef::{parse_ring_spec, FieldSpec, PrimeField, RingSpec};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: hcoef::Error) -> String {
    e.to_string()
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    trim((0..n).map(|k| a.get(k).copied().unwrap_or(0) - b.get(k).copied().unwrap_or(0)).collect())
}

fn ring(spec: &RingSpec) -> Result<LocalRing<PrimeField>, String> {
    LocalRing::new(spec.clone(), PrimeField::default(), &Config::default()).map_err(err)
}

struct Suite {
    reports: BTreeMap<String, InvariantReport>,
    extension_rows: Vec<(String, bool)>,
    seconds: f64,
    fixture_rows_pass: bool,
}

/// Fixture id, h-polynomial, multiplicity, depth G, type.
type Row = (&'static str, &'static [i64], i64, usize, Option<usize>);

fn criterion_1(s: &Suite) -> Outcome {
    // h, e0, depth G, type; None means no type is asserted
    let expected: [Row; 5] = [
        ("artinian", &[1, 3, 3], 7, 0, None),
        ("wang", &[1, 3, 0, 3, -1], 6, 0, Some(3)),
        ("sally", &[1, 4, 0, 0, 1], 6, 0, Some(4)),
        ("gorenstein", &[1, 2, 1, 1], 5, 1, Some(1)),
        ("wang-section", &[1, 3, 1, 1], 6, 0, None),
    ];
    for (id, h, e0, depth, ty) in expected {
        let r = &s.reports[id];
        ensure(r.hpoly.h == h, || format!("{id}: h = {:?}", r.hpoly.h))?;
        ensure(r.multiplicity == e0, || format!("{id}: e0 = {}", r.multiplicity))?;
        ensure(r.depth_g == depth, || format!("{id}: depth G = {}", r.depth_g))?;
        if let Some(t) = ty {
            ensure(r.cm_type == t, || format!("{id}: type = {}", r.cm_type))?;
        }
    }
    // CM associated graded ring exactly for the Artinian and Gorenstein fixtures
    for (id, cm) in [("artinian", true), ("wang", false), ("sally", false), ("gorenstein", true), ("wang-section", false)] {
        ensure(s.reports[id].graded_cm() == cm, || format!("{id}: G CM = {}", !cm))?;
    }
    ensure(s.fixture_rows_pass, || "verify-examples reported a failing fixture row".into())?;
    ensure(s.seconds < 60.0, || format!("took {:.1}s", s.seconds))?;
    Ok(format!("5/5 fixtures in {:.1}s", s.seconds))
}

fn criterion_2(s: &Suite) -> Outcome {
    let e1 = [("sally", "i"), ("artinian", "ii"), ("gorenstein", "iii"), ("wang", "iv")];
    let e2 = [("artinian", "i"), ("wang", "ii")];
    let mut checked = 0;
    for (table, e2_theorem) in [(&e1[..], false), (&e2[..], true)] {
        for &(id, case) in table {
            let inv = &s.reports[id];
            let v = if e2_theorem { classify_e2(inv) } else { classify_e1(inv) }.map_err(err)?;
            ensure(v.case.as_deref() == Some(case), || format!("{id}: case {:?}, want {case}", v.case))?;
            ensure(v.passed(), || format!("{id}: a clause of {case} failed"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked}/6 verdicts with every clause passing"))
}

/// Returns whether `b` is nonzero.
fn check_element(spec: &RingSpec, seed: u64) -> Result<bool, String> {
    let a = ring(spec)?;
    let step = find_superficial(&a, &mut rng_for(seed), seed, 8).map_err(err)?;
    let x = &step.element;
    let d = a.dim();
    let h_a = &a.series().h;
    let h_b = &step.quotient.series().h;
    ensure(step.quotient.dim() + 1 == d, || format!("{spec}: A/(x) has dimension {}", step.quotient.dim()))?;
    ensure(sub(h_b, &times_one_minus_z(&x.b, d)) == *h_a, || {
        format!("{spec}: h_A != h_B - (1-z)^{d} b for b = {:?}", x.b)
    })?;
    let window = x.b.len() as u32 + 3;
    let direct = colon_lengths(&a, &x.coeffs, window).map_err(err)?;
    let padded: Vec<i64> = (0..window as usize).map(|k| x.b.get(k).copied().unwrap_or(0)).collect();
    ensure(direct == padded, || format!("{spec}: colon lengths {direct:?}, division {padded:?}"))?;
    Ok(!x.b.is_empty())
}

fn criterion_3() -> Outcome {
    let fixtures = builtin_examples(&Config::default()).map_err(err)?;
    let (mut count, mut nonzero) = (0, 0);
    for ex in fixtures.iter().filter(|e| e.expected.d > 0) {
        for seed in 1..=5 {
            nonzero += check_element(&ex.spec, seed)? as usize;
            count += 1;
        }
    }
    let kinds = [RandomKind::Semigroup, RandomKind::ArtinianTimesFree, RandomKind::Hypersurface];
    let mut rng = rng_for(0x5eed_0003);
    for i in 0..30 {
        let spec = random_cm_spec_of(kinds[i % 3], &mut rng, 3, 4);
        nonzero += check_element(&spec, 100 + i as u64)? as usize;
    }
    ensure(count == 20, || format!("only {count} fixture elements"))?;
    Ok(format!("20 fixture elements and 30 random rings agree, {nonzero} with b != 0"))
}

fn criterion_4() -> Outcome {
    let a = ring(&parse_ring_spec(WANG).map_err(err)?)?;
    let (reduction, steps) = minimal_reduction(&a, 0, 8).map_err(err)?;
    let b = &steps[0].element.b;
    let i_max = 10;
    let rr = ratliff_rush(&a, b, i_max, 0).map_err(err)?.data;
    // lengths[i - 1] = ℓ(m̃^i/m^i)
    ensure(rr.lengths[1] == 1, || format!("l(m~^2/m^2) = {}", rr.lengths[1]))?;
    ensure(rr.lengths[2..].iter().all(|&l| l == 0), || format!("lengths {:?}", rr.lengths))?;
    ensure(rr.h_tilde == [1, 2, 3], || format!("h~ = {:?}", rr.h_tilde))?;
    ensure(rr.r == [0, 1], || format!("r = {:?}", rr.r))?;
    let h = &a.series().h;
    ensure(sub(h, &rr.h_tilde) == times_one_minus_z(&rr.r, 3), || "h - h~ != (1-z)^3 r".into())?;
    let s = sigma(&a, &reduction, b).map_err(err)?;
    ensure(s.len() >= 2 && s[0] == 5 && s[1] == 3 && s[2..].iter().all(|&x| x == 0), || format!("sigma = {s:?}"))?;
    let e1: usize = s.iter().sum();
    let e2: usize = s.iter().enumerate().map(|(j, x)| j * x).sum();
    ensure((e1, e2) == (8, 3), || format!("sigma sums {e1}, {e2}"))?;
    ensure((a.series().e(1), a.series().e(2)) == (8, 3), || "e1, e2 of the numerator".into())?;
    Ok(format!("m~^j = m^j for 3 <= j <= {i_max}, h~ = 1 + 2z + 3z^2, r = z, sigma = {s:?}"))
}

/// `reach[k]` marks the sums of exactly `k` generators up to `bound`.
fn sumsets(gens: &[u64], bound: usize) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; bound + 1]];
    reach[0][0] = true;
    while reach.last().unwrap().iter().any(|&x| x) {
        let prev = reach.last().unwrap();
        let mut next = vec![false; bound + 1];
        for s in 0..=bound {
            if prev[s] {
                for &g in gens {
                    if s + g as usize <= bound {
                        next[s + g as usize] = true;
                    }
                }
            }
        }
        reach.push(next);
    }
    reach
}

/// `H(n)` and `ρ_n` for `n < top`, by counting exponents of `m^n = t^{M_n + S}`.
fn semigroup_oracle(gens: &[u64], top: usize) -> (Vec<i64>, Vec<i64>) {
    let a1 = gens[0] as usize;
    let bound = (top + 3) * *gens.last().unwrap() as usize + 400;
    let reach = sumsets(gens, bound);
    // power[n][s]: t^s ∈ m^n
    let mut power = vec![vec![false; bound + 1]; top + 2];
    for (n, p) in power.iter_mut().enumerate() {
        for row in reach.iter().skip(n) {
            for (bit, &r) in p.iter_mut().zip(row) {
                *bit |= r;
            }
        }
    }
    let count = |f: &dyn Fn(usize) -> bool| (0..=bound).filter(|&s| f(s)).count() as i64;
    // no s near the bound is missed: every witness is below n·a_k + Frobenius
    let hf = (0..top).map(|n| count(&|s| power[n][s] && !power[n + 1][s])).collect();
    let rho = (0..top)
        .map(|n| count(&|s| power[n + 1][s] && !(s >= a1 && power[n][s - a1])))
        .collect();
    (hf, rho)
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn random_semigroup(rng: &mut rand_chacha::ChaCha8Rng) -> Vec<u64> {
    loop {
        let k = rng.gen_range(2..=5);
        let mut pool: Vec<u64> = (2..=20).collect();
        pool.shuffle(rng);
        let mut gens = pool[..k].to_vec();
        gens.sort_unstable();
        let gcd = gens.iter().fold(0, |g, &a| num_integer::gcd(g, a));
        let minimal = gens.iter().all(|&g| {
            let others: Vec<u64> = gens.iter().copied().filter(|&a| a != g).collect();
            let reach = sumsets(&others, g as usize);
            !reach.iter().any(|row| row[g as usize])
        });
        if gcd == 1 && minimal {
            return gens;
        }
    }
}

fn criterion_5() -> Outcome {
    const TOP: usize = 24;
    let mut rng = rng_for(0x5eed_0005);
    let mut seen = std::collections::BTreeSet::new();
    while seen.len() < 60 {
        seen.insert(random_semigroup(&mut rng));
    }
    for gens in &seen {
        let (hf, rho_oracle) = semigroup_oracle(gens, TOP);
        let spec = RingSpec::semigroup(gens);
        let toric = Semigroup::new(gens).map_err(err)?.to_quotient(FieldSpec::default()).map_err(err)?;
        let e_oracle: Vec<i64> = std::iter::once(gens[0] as i64)
            .chain((1..=3).map(|i| (0..TOP).map(|j| binomial(j as i64, i - 1) * rho_oracle[j]).sum()))
            .collect();
        for s in [&spec, &toric] {
            let a = ring(s)?;
            let hs = a.series();
            let engine_h: Vec<i64> = (0..TOP).map(|n| hs.hilbert_function(n)).collect();
            ensure(engine_h == hf, || format!("{gens:?} ({s}): H = {engine_h:?}, oracle {hf:?}"))?;
            let mut x = vec![0; a.ngens()];
            x[0] = 1;
            let mut r: Vec<i64> = rho(&a, &x).map_err(err)?.into_iter().map(|v| v as i64).collect();
            r.resize(TOP, 0);
            ensure(r == rho_oracle, || format!("{gens:?} ({s}): rho = {r:?}, oracle {rho_oracle:?}"))?;
            let e: Vec<i64> = (0..=3).map(|i| hs.e(i)).collect();
            ensure(e == e_oracle, || format!("{gens:?}: e = {e:?}, oracle {e_oracle:?}"))?;
            // H(n) = e - ρ_n, e1 = Σρ_j, e2 = Σ jρ_j
            ensure((0..TOP).all(|n| engine_h[n] == e[0] - r[n]), || format!("{gens:?}: H != e - rho"))?;
            ensure(e[1] == r.iter().sum::<i64>(), || format!("{gens:?}: e1 != sum rho"))?;
            let weighted: i64 = r.iter().enumerate().map(|(j, v)| j as i64 * v).sum();
            ensure(e[2] == weighted, || format!("{gens:?}: e2 != sum j rho"))?;
        }
    }
    Ok(format!("{} semigroups, combinatorial and toric engines match the oracle", seen.len()))
}

/// Largest number of degree `d+1` monomials all of whose degree-`d`
/// divisors lie in an `a`-element set, over `n` variables.
fn macaulay_oracle(a: usize, d: u32, n: usize) -> u64 {
    let low = Monomial::all_of_degree(n, d);
    let high = Monomial::all_of_degree(n, d + 1);
    let divisors: Vec<Vec<usize>> = high
        .iter()
        .map(|m| (0..low.len()).filter(|&i| low[i].divides(m)).collect())
        .collect();
    fn rec(i: usize, left: usize, chosen: &mut Vec<bool>, divisors: &[Vec<usize>], best: &mut u64) {
        if left == 0 {
            let c = divisors.iter().filter(|ds| ds.iter().all(|&j| chosen[j])).count() as u64;
            *best = (*best).max(c);
            return;
        }
        if chosen.len() - i < left {
            return;
        }
        chosen[i] = true;
        rec(i + 1, left - 1, chosen, divisors, best);
        chosen[i] = false;
        rec(i + 1, left, chosen, divisors, best);
    }
    let mut best = 0;
    rec(0, a, &mut vec![false; low.len()], &divisors, &mut best);
    best
}

fn criterion_6() -> Outcome {
    let kinds = [
        RandomKind::Semigroup,
        RandomKind::Artinian,
        RandomKind::ArtinianTimesFree,
        RandomKind::Hypersurface,
    ];
    let mut rng = rng_for(0x5eed_0006);
    let config = Config {
        field: Some(FieldSpec::default()),
        ..Config::default()
    };
    for i in 0..200 {
        let vars = 2 + i % 3;
        let maxdeg = 2 + (i / 3) as u32 % 3;
        let spec = random_cm_spec_of(kinds[i % 4], &mut rng, vars, maxdeg);
        let inv = analyze(&spec, &config).map_err(err)?;
        let b = bounds_report(&inv);
        ensure(b.all_hold(), || format!("{spec}: {b:?}"))?;
    }
    for (d, n) in [(1u32, 6usize), (2, 5), (3, 4)] {
        for a in 0..=6 {
            let (bound, oracle) = (macaulay_bound(a as u64, d), macaulay_oracle(a, d, n));
            ensure(bound == oracle, || format!("a = {a}, d = {d}: bound {bound}, oracle {oracle}"))?;
        }
    }
    Ok("200 random rings within all bounds; Macaulay bound matches the oracle for a <= 6, d <= 3".into())
}

fn criterion_7(s: &Suite) -> Outcome {
    let failed: Vec<&str> = s.extension_rows.iter().filter(|r| !r.1).map(|r| r.0.as_str()).collect();
    ensure(s.extension_rows.len() == 10 && failed.is_empty(), || format!("failing: {failed:?}"))?;
    Ok("10/10 extensions preserve numerator and type, shift dimension and depth".into())
}

fn main() {
    let start = Instant::now();
    let suite = verify_examples(&Config::default()).map(|suite| {
        let seconds = start.elapsed().as_secs_f64();
        let mut ext: BTreeMap<String, bool> = BTreeMap::new();
        for r in suite.rows.iter().filter(|r| r.fixture.contains('+')) {
            *ext.entry(r.fixture.clone()).or_insert(true) &= r.pass;
        }
        Suite {
            fixture_rows_pass: suite.rows.iter().filter(|r| !r.fixture.contains('+')).all(|r| r.pass),
            reports: suite.reports.into_iter().collect(),
            extension_rows: ext.into_iter().collect(),
            seconds,
        }
    });
    let suite = suite.map_err(err);
    let on_suite = |f: fn(&Suite) -> Outcome| match &suite {
        Ok(s) => f(s),
        Err(e) => Err(format!("verify-examples failed: {e}")),
    };
    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        ("fixture regression", Box::new(|| on_suite(criterion_1))),
        ("theorem verdicts", Box::new(|| on_suite(criterion_2))),
        ("superficial identity", Box::new(criterion_3)),
        ("Ratliff-Rush suite", Box::new(criterion_4)),
        ("dimension-one oracle", Box::new(criterion_5)),
        ("bounds fuzzing", Box::new(criterion_6)),
        ("extension contract", Box::new(|| on_suite(criterion_7))),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {} ({name}): PASS ({msg}; {secs:.1}s)", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {} ({name}): FAIL ({msg})", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
