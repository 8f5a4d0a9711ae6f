//! Polynomial extensions, the built-in example rings, and random
//! Cohen-Macaulay inputs for fuzzing.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classifier::{classify_e1, classify_e2};
use crate::config::Config;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::filtration::{find_superficial, rng_for};
use crate::hilbert::render_polynomial;
use crate::poly::{IntPoly, Monomial};
use crate::report::{analyze, InvariantReport};
use crate::ring::{quotient_spec, LocalRing};
use crate::spec::{parse_ring_spec, RingSpec};
use crate::with_field;

/// Seed of the superficial element that cuts the Wang ring down to the `wang-section` fixture.
pub const FIXTURE_SEED: u64 = 76;

pub const WANG: &str = "ring Q[x,y,z,u,v] / (z^2, z*u, z*v, u*v, y*z - u^3, x*z - v^3)";

/// `A[X_1, ..., X_m]` localized at its homogeneous maximal ideal.
pub fn extend_polynomial(spec: &RingSpec, m: usize) -> RingSpec {
    match (spec, m) {
        (_, 0) => spec.clone(),
        (RingSpec::Extension { base, extra_vars }, _) => RingSpec::Extension {
            base: base.clone(),
            extra_vars: extra_vars + m,
        },
        _ => RingSpec::Extension {
            base: Box::new(spec.clone()),
            extra_vars: m,
        },
    }
}

/// Values a fixture must reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub d: usize,
    pub h: Vec<i64>,
    /// A prefix of `e_0, e_1, ...`.
    pub e: Vec<i64>,
    pub depth_g: usize,
    pub cm_type: Option<usize>,
    pub e1_case: Option<&'static str>,
    pub e2_case: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example {
    pub id: &'static str,
    pub spec: RingSpec,
    pub expected: Expected,
}

/// Field used for the fixtures: the configured override, else `F_p`.
pub fn fixture_field(config: &Config) -> FieldSpec {
    config.field.unwrap_or(FieldSpec::PrimeField { p: config.prime })
}

/// `A/(u)` for the Wang ring `A` and a superficial `u` drawn with [`FIXTURE_SEED`].
pub fn wang_section(config: &Config) -> Result<RingSpec> {
    let wang = parse_ring_spec(WANG)?;
    let field = fixture_field(config);
    with_field!(field, |f| {
        let ring = LocalRing::new(wang.clone(), f, config)?;
        let step = find_superficial(&ring, &mut rng_for(FIXTURE_SEED), FIXTURE_SEED, config.attempts)?;
        quotient_spec(&wang, &step.element.coeffs, field)
    })
}

pub fn builtin_examples(config: &Config) -> Result<Vec<Example>> {
    let ex = |id, text: &str, expected| -> Result<Example> {
        Ok(Example {
            id,
            spec: parse_ring_spec(text)?,
            expected,
        })
    };
    Ok(vec![
        ex(
            "artinian",
            "ring Q[x,y,z] / (x^2, x*y, y^2, (x,y,z)^3)",
            Expected {
                d: 0,
                h: vec![1, 3, 3],
                e: vec![7],
                depth_g: 0,
                cm_type: None,
                e1_case: Some("ii"),
                e2_case: Some("i"),
            },
        )?,
        ex(
            "wang",
            WANG,
            Expected {
                d: 2,
                h: vec![1, 3, 0, 3, -1],
                e: vec![6, 8, 3],
                depth_g: 0,
                cm_type: Some(3),
                e1_case: Some("iv"),
                e2_case: Some("ii"),
            },
        )?,
        ex(
            "sally",
            "semigroup 6 7 11 15 16",
            Expected {
                d: 1,
                h: vec![1, 4, 0, 0, 1],
                e: vec![6, 8],
                depth_g: 0,
                cm_type: Some(4),
                e1_case: Some("i"),
                e2_case: None,
            },
        )?,
        ex(
            "gorenstein",
            "ring Q[x,y,z] / (x*z - y*z, x*z + y^3 - z^2)",
            Expected {
                d: 1,
                h: vec![1, 2, 1, 1],
                e: vec![5, 7, 4],
                depth_g: 1,
                cm_type: Some(1),
                e1_case: Some("iii"),
                e2_case: None,
            },
        )?,
        Example {
            id: "wang-section",
            spec: wang_section(config)?,
            expected: Expected {
                d: 1,
                h: vec![1, 3, 1, 1],
                e: vec![6],
                depth_g: 0,
                cm_type: None,
                e1_case: Some("iii"),
                e2_case: None,
            },
        },
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub fixture: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleSuite {
    pub rows: Vec<SuiteRow>,
    pub reports: Vec<(String, InvariantReport)>,
}

impl ExampleSuite {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    fn push(&mut self, fixture: &str, quantity: &str, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.rows.push(SuiteRow {
            fixture: fixture.into(),
            quantity: quantity.into(),
            pass: expected == computed,
            expected,
            computed,
        });
    }

    /// `(passed, total)` over fixtures whose id has no `+m` suffix, and over extensions.
    pub fn tallies(&self) -> ((usize, usize), (usize, usize)) {
        let mut ids: Vec<&str> = self.rows.iter().map(|r| r.fixture.as_str()).collect();
        ids.dedup();
        let count = |ext: bool| {
            let sel: Vec<&&str> = ids.iter().filter(|id| id.contains('+') == ext).collect();
            let ok = sel
                .iter()
                .filter(|id| self.rows.iter().filter(|r| r.fixture == ***id).all(|r| r.pass))
                .count();
            (ok, sel.len())
        };
        (count(false), count(true))
    }
}

fn poly(h: &[i64]) -> String {
    render_polynomial(h, "z")
}

fn case_string(c: Option<String>) -> String {
    c.unwrap_or_else(|| "none".into())
}

/// Runs every fixture and the extension contract for `m = 1, 2`.
pub fn verify_examples(config: &Config) -> Result<ExampleSuite> {
    let config = Config {
        field: Some(fixture_field(config)),
        ..config.clone()
    };
    let mut suite = ExampleSuite {
        rows: Vec::new(),
        reports: Vec::new(),
    };
    for ex in builtin_examples(&config)? {
        let id = ex.id;
        let x = &ex.expected;
        let inv = analyze(&ex.spec, &config)?;
        suite.push(id, "dimension", x.d, inv.d);
        suite.push(id, "h-polynomial", poly(&x.h), poly(&inv.hpoly.h));
        suite.push(id, "e", format!("{:?}", x.e), format!("{:?}", &inv.e[..x.e.len()]));
        suite.push(id, "depth G", x.depth_g, inv.depth_g);
        if let Some(t) = x.cm_type {
            suite.push(id, "type", t, inv.cm_type);
        }
        let v1 = classify_e1(&inv)?;
        suite.push(id, "e1=e+2 case", x.e1_case.unwrap_or("none"), case_string(v1.case.clone()));
        suite.push(id, "e1=e+2 clauses", true, v1.passed());
        let v2 = classify_e2(&inv)?;
        suite.push(id, "e2=3 case", x.e2_case.unwrap_or("none"), case_string(v2.case.clone()));
        suite.push(id, "e2=3 clauses", true, v2.passed());
        for m in 1..=2 {
            let ext = analyze(&extend_polynomial(&ex.spec, m), &config)?;
            let eid = format!("{id}+{m}");
            suite.push(&eid, "h-polynomial", poly(&inv.hpoly.h), poly(&ext.hpoly.h));
            suite.push(&eid, "dimension", inv.d + m, ext.d);
            suite.push(&eid, "depth G", inv.depth_g + m, ext.depth_g);
            suite.push(&eid, "type", inv.cm_type, ext.cm_type);
            suite.reports.push((eid, ext));
        }
        suite.reports.push((id.to_string(), inv));
    }
    Ok(suite)
}

/// Shapes of random Cohen-Macaulay rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    /// Numerical semigroup ring, dimension one.
    Semigroup,
    /// Quotient by a monomial ideal containing a power of every variable.
    Artinian,
    /// An Artinian monomial ring with one or two free variables adjoined.
    ArtinianTimesFree,
    /// A monomial hypersurface.
    Hypersurface,
}

/// No generator is a sum of the others.
fn is_minimal(gens: &[u64]) -> bool {
    gens.iter().all(|&g| {
        let mut reach = vec![false; g as usize + 1];
        reach[0] = true;
        for s in 1..=g as usize {
            reach[s] = gens.iter().any(|&a| a != g && a as usize <= s && reach[s - a as usize]);
        }
        !reach[g as usize]
    })
}

fn names(n: usize) -> Vec<String> {
    const LETTERS: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    (0..n)
        .map(|i| LETTERS.get(i).map_or_else(|| format!("x{i}"), |s| s.to_string()))
        .collect()
}

fn random_monomial(rng: &mut ChaCha8Rng, vars: usize, deg: u32) -> Monomial {
    let mut e = vec![0u32; vars];
    for _ in 0..deg {
        e[rng.gen_range(0..vars)] += 1;
    }
    Monomial::from_exps(&e).expect("small exponents")
}

fn artinian(rng: &mut ChaCha8Rng, vars: usize, maxdeg: u32) -> RingSpec {
    let maxdeg = maxdeg.max(2);
    let mut ideal: Vec<IntPoly> = (0..vars)
        .map(|i| {
            let mut e = vec![0u32; vars];
            e[i] = rng.gen_range(2..=maxdeg);
            IntPoly::monomial(Monomial::from_exps(&e).expect("small exponents"), 1)
        })
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        let deg = rng.gen_range(2..=maxdeg);
        ideal.push(IntPoly::monomial(random_monomial(rng, vars, deg), 1));
    }
    RingSpec::Quotient {
        field: FieldSpec::Rationals,
        variables: names(vars),
        ideal,
        declared_dimension: None,
    }
}

/// A random ring of the given shape in at most `vars` variables, with
/// relations of degree at most `maxdeg`.
pub fn random_cm_spec_of(kind: RandomKind, rng: &mut ChaCha8Rng, vars: usize, maxdeg: u32) -> RingSpec {
    let vars = vars.clamp(1, 6);
    match kind {
        RandomKind::Semigroup => loop {
            let k = rng.gen_range(2..=vars.clamp(2, 4));
            let mut pool: Vec<u64> = (2..=20).collect();
            pool.shuffle(rng);
            let gens: Vec<u64> = pool[..k].to_vec();
            if gens.iter().fold(0, |g, &a| num_integer::gcd(g, a)) == 1 && is_minimal(&gens) {
                return RingSpec::semigroup(&gens);
            }
        },
        RandomKind::Artinian => artinian(rng, vars, maxdeg),
        RandomKind::ArtinianTimesFree => {
            let free = rng.gen_range(1..=2);
            // the base is kept small: its length drives the truncation order
            extend_polynomial(&artinian(rng, vars.clamp(1, 3), maxdeg.min(3)), free)
        }
        RandomKind::Hypersurface => {
            let n = vars.clamp(2, 3);
            let deg = rng.gen_range(2..=maxdeg.max(2));
            RingSpec::Quotient {
                field: FieldSpec::Rationals,
                variables: names(n),
                ideal: vec![IntPoly::monomial(random_monomial(rng, n, deg), 1)],
                declared_dimension: None,
            }
        }
    }
}

/// A random Artinian monomial ring or numerical semigroup ring.
pub fn random_cm_spec(seed: u64, vars: usize, maxdeg: u32) -> RingSpec {
    let mut rng = rng_for(seed);
    let kind = if rng.gen_bool(0.5) {
        RandomKind::Artinian
    } else {
        RandomKind::Semigroup
    };
    random_cm_spec_of(kind, &mut rng, vars, maxdeg)
}
