//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero when
//! any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nilp2_core::census::{
    local_system_census, orbit_count, p, p2, springer_cardinality_check, symbol_census,
    weyl_irrep_count, GroupFamily, LieType,
};
use nilp2_core::formmodule::{
    build_indecomposable, enumerate_symbols, module_from_symbol, AbstractCase, IndecompSpec, Symbol,
};
use nilp2_core::orbitoracle::{
    census_compare, conjugacy_probe, Generators, GroupKind, Oracle, OracleConfig,
};
use nilp2_core::quadspace::dickson_rank;
use nilp2_core::{FieldSpec, Matrix, QuadSpace, SpaceKind, Vector};

const MAX_N_CENSUS: u32 = 20;
const CENSUS_BUDGET: Duration = Duration::from_secs(10);
const O7_BUDGET: Duration = Duration::from_secs(60);
const SYNTHESIS_MAX_DIM: u32 = 10;
const LIE_MAX_DIM: usize = 9;
const PROPERTY_SAMPLES: usize = 200;
const SEED: u64 = 0x6e69_6c70;

type Outcome = Result<String, String>;

fn report(id: u32, title: &str, outcome: Outcome, failures: &mut u32) {
    match outcome {
        Ok(detail) => println!("PASS criterion {id} ({title}): {detail}"),
        Err(detail) => {
            *failures += 1;
            println!("FAIL criterion {id} ({title}): {detail}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 1..=MAX_N_CENSUS {
        let mut total = BigUint::default();
        for s in enumerate_symbols(2 * n + 1, true).map_err(|e| e.to_string())? {
            let (n1, _) = s.splitting_counts().map_err(|e| e.to_string())?;
            total += big(1u64 << n1);
        }
        ensure(total == p2(n as usize), || {
            format!("n={n}: sum {total} != p_2 = {}", p2(n as usize))
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < CENSUS_BUDGET, || {
        format!("took {elapsed:?}, budget {CENSUS_BUDGET:?}")
    })?;
    Ok(format!(
        "n=1..{MAX_N_CENSUS} exact, {:.2}s",
        elapsed.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    for n in 1..=MAX_N_CENSUS {
        let (p2n, ph) = (
            p2(n as usize),
            if n % 2 == 0 {
                p(n as usize / 2)
            } else {
                big(0)
            },
        );
        // closed forms recomputed here without halving helpers: 2 * count
        let twice = [
            (GroupFamily::Dplus, &p2n + &ph),
            (GroupFamily::Dminus, &p2n - &ph),
            (GroupFamily::SOplus, &p2n + big(3) * &ph),
        ];
        for (family, doubled) in twice {
            let s = symbol_census(family, n).map_err(|e| e.to_string())?;
            ensure(big(2) * &s == doubled, || {
                format!("{family}({n}): symbols give {s}, 2x formula {doubled}")
            })?;
            ensure(orbit_count(family, n) == s, || {
                format!("{family}({n}): orbit_count disagrees")
            })?;
        }
    }
    Ok(format!(
        "Dplus, Dminus, SOplus for n=1..{MAX_N_CENSUS} exact"
    ))
}

fn criterion_3() -> Outcome {
    for ty in [LieType::B, LieType::C, LieType::D] {
        for r in 1..=MAX_N_CENSUS {
            let v = springer_cardinality_check(ty, r).map_err(|e| e.to_string())?;
            ensure(v.pass(), || format!("{ty}{r}: {v:?}"))?;
            ensure(
                weyl_irrep_count(ty, r) == local_system_census(ty, r),
                || format!("{ty}{r}"),
            )?;
            if ty != LieType::C {
                ensure(v.symbol_path.is_some(), || {
                    format!("{ty}{r}: second path missing")
                })?;
            }
        }
    }
    Ok(format!(
        "B, C, D for r=1..{MAX_N_CENSUS}; symbol path agrees for B and D"
    ))
}

fn criterion_4() -> Outcome {
    let f = FieldSpec::gf2();
    let cfg = OracleConfig {
        workers: 4,
        ..OracleConfig::default()
    };
    let cases = [
        ("o_3", SpaceKind::Odd, 3, GroupKind::O, 2),
        ("o_5", SpaceKind::Odd, 5, GroupKind::O, 5),
        ("o_7", SpaceKind::Odd, 7, GroupKind::O, 10),
        ("o_4+", SpaceKind::Plus, 4, GroupKind::O, 3),
        ("o_4-", SpaceKind::Minus, 4, GroupKind::O, 2),
        ("o_6+", SpaceKind::Plus, 6, GroupKind::O, 5),
        ("o_6-", SpaceKind::Minus, 6, GroupKind::O, 5),
        ("SO_4+", SpaceKind::Plus, 4, GroupKind::SO, 4),
    ];
    let mut seen = Vec::new();
    for (name, kind, dim, group, expected) in cases {
        let start = Instant::now();
        let oracle = Oracle::standard(kind, dim, f, cfg).map_err(|e| e.to_string())?;
        let census = oracle.census(group).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if dim == 7 {
            ensure(elapsed < O7_BUDGET, || format!("o_7 took {elapsed:?}"))?;
        }
        ensure(census.orbit_count() == expected, || {
            format!(
                "{name}: {} orbits, expected {expected}",
                census.orbit_count()
            )
        })?;
        let verdict = census_compare(&census);
        ensure(verdict.pass(), || {
            format!("{name}: {:?}", verdict.mismatches)
        })?;
        seen.push(format!("{name}={}", census.orbit_count()));
    }
    Ok(seen.join(" "))
}

fn criterion_5() -> Outcome {
    let oracle = Oracle::standard(SpaceKind::Odd, 5, FieldSpec::gf2(), OracleConfig::default())
        .map_err(|e| e.to_string())?;
    let a = oracle.labels_with(Generators::Transvections);
    let b = oracle.labels_with(Generators::FullGroup);
    ensure(a == b, || "partitions differ".into())?;
    let orbits = a.o.iter().collect::<std::collections::BTreeSet<_>>().len();
    Ok(format!(
        "{} nilpotents, {orbits} orbits, identical element for element",
        oracle.nilpotent_count()
    ))
}

fn criterion_6() -> Outcome {
    let mut modules = 0;
    for e in [1, 2] {
        let f = FieldSpec::standard(e).unwrap();
        for dim in 1..=SYNTHESIS_MAX_DIM {
            for s in enumerate_symbols(dim, dim % 2 == 1).map_err(|e| e.to_string())? {
                let n = s.toggle_positions(!s.is_defective()).len();
                for bits in 0..1u32 << n {
                    let mask: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
                    let m = module_from_symbol(&s, f, &mask)
                        .map_err(|e| format!("{s} {mask:?}: {e}"))?;
                    let back = m.symbol().map_err(|e| e.to_string())?;
                    ensure(back == s, || format!("{s} {mask:?} -> {back}"))?;
                    modules += 1;
                }
            }
        }
        // every indecomposable of dimension <= 10
        let mut specs = Vec::new();
        for m in 1..=SYNTHESIS_MAX_DIM / 2 {
            for l in 1..=m {
                specs.push(IndecompSpec::W0 { l, m });
                specs.push(IndecompSpec::WDelta { l, m });
            }
        }
        for m in 1..=SYNTHESIS_MAX_DIM.div_ceil(2) {
            specs.push(IndecompSpec::D { m });
        }
        for spec in specs.into_iter().filter(|s| s.validate().is_ok()) {
            let ind = build_indecomposable(spec, f).map_err(|e| format!("{spec}: {e}"))?;
            let case = ind
                .module
                .check_abstract_constraints(&ind.v1, &ind.v2)
                .map_err(|e| format!("{spec}: {e}"))?;
            let want = if matches!(spec, IndecompSpec::D { .. }) {
                AbstractCase::DropByOne
            } else {
                AbstractCase::EqualHeights
            };
            ensure(case == want, || format!("{spec}: {case}, expected {want}"))?;
        }
    }
    Ok(format!(
        "{modules} (symbol, mask, q) round trips; indecomposables in predicted cases"
    ))
}

fn criterion_7() -> Outcome {
    let f = FieldSpec::gf2();
    let s: Symbol = "(3)_2^2(1)_1".parse().unwrap();
    let (n1, _) = s.splitting_counts().map_err(|e| e.to_string())?;
    let space = QuadSpace::standard(SpaceKind::Odd, 7, f).unwrap();
    let mut reps = Vec::new();
    for bits in 0..1u32 << n1 {
        let mask: Vec<bool> = (0..n1).map(|i| bits >> i & 1 == 1).collect();
        let (kind, t) = module_from_symbol(&s, f, &mask)
            .and_then(|m| m.to_standard())
            .map_err(|e| e.to_string())?;
        ensure(kind == SpaceKind::Odd, || {
            format!("variant {mask:?} has kind {kind}")
        })?;
        reps.push(t);
    }
    let cfg = OracleConfig {
        workers: 4,
        ..OracleConfig::default()
    };
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let same = conjugacy_probe(&space, &reps[i], &reps[j], GroupKind::O, &cfg)
                .map_err(|e| e.to_string())?;
            ensure(!same, || format!("variants {i} and {j} are conjugate"))?;
        }
    }
    Ok(format!("{} variants pairwise non-conjugate", reps.len()))
}

fn random_vector(rng: &mut impl Rng, f: FieldSpec, n: usize) -> Vector {
    Vector::from_bits(
        f,
        (0..n).map(|_| rng.gen_range(0..f.order()) as u16).collect(),
    )
}

fn random_nonsingular(rng: &mut impl Rng, space: &QuadSpace) -> Vector {
    loop {
        let v = random_vector(rng, space.field(), space.dim());
        // radical vectors give the identity
        if space.q_bits(v.bits()) != 0 && !space.gram().apply(&v).is_zero() {
            return v;
        }
    }
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0usize;
    // field axioms
    for e in 1..=16 {
        let f = FieldSpec::standard(e).unwrap();
        for _ in 0..PROPERTY_SAMPLES {
            let [a, b, c] = [0; 3].map(|_| rng.gen_range(0..f.order()) as u16);
            let ok = f.mul_bits(a, f.add_bits(b, c))
                == f.add_bits(f.mul_bits(a, b), f.mul_bits(a, c))
                && f.mul_bits(f.mul_bits(a, b), c) == f.mul_bits(a, f.mul_bits(b, c))
                && f.add_bits(a, a) == 0
                && f.mul_bits(f.mul_bits(a, a), f.mul_bits(b, b)) == {
                    let ab = f.mul_bits(a, b);
                    f.mul_bits(ab, ab)
                }
                && (a == 0 || f.mul_bits(a, f.inv_bits(a).unwrap()) == 1);
            ensure(ok, || {
                format!("field axioms fail in GF(2^{e}) at {a}, {b}, {c}")
            })?;
            checks += 1;
        }
    }
    for e in [1, 2, 3] {
        let f = FieldSpec::standard(e).unwrap();
        for (kind, n) in [
            (SpaceKind::Odd, 5),
            (SpaceKind::Plus, 6),
            (SpaceKind::Minus, 6),
        ] {
            let space = QuadSpace::standard(kind, n, f).unwrap();
            for _ in 0..PROPERTY_SAMPLES / 4 {
                // Q(x + y) = Q(x) + Q(y) + <x, y>
                let x = random_vector(&mut rng, f, n);
                let y = random_vector(&mut rng, f, n);
                let lhs = space.q_bits((&x + &y).bits());
                let rhs = space.q_bits(x.bits())
                    ^ space.q_bits(y.bits())
                    ^ space.bilinear_bits(x.bits(), y.bits());
                ensure(lhs == rhs, || {
                    format!("bilinear identity fails in {kind} {n} over q={}", f.order())
                })?;
                // transvections are orthogonal with Dickson invariant 1, and
                // the Dickson invariant is additive on products
                let u = random_nonsingular(&mut rng, &space);
                let v = random_nonsingular(&mut rng, &space);
                let tu = space.transvection(&u).unwrap();
                let tv = space.transvection(&v).unwrap();
                ensure(space.is_orthogonal(&tu), || {
                    "transvection not orthogonal".into()
                })?;
                let d = |g: &Matrix| space.dickson(g).unwrap();
                ensure(d(&tu) == 1, || {
                    "transvection has Dickson invariant 0".into()
                })?;
                let prod = &tu * &tv;
                ensure(space.is_orthogonal(&prod), || {
                    "product not orthogonal".into()
                })?;
                ensure(d(&prod) == (d(&tu) + d(&tv)) % 2, || {
                    "Dickson invariant not additive".into()
                })?;
                ensure(dickson_rank(&prod) == d(&prod), || {
                    "rank form differs".into()
                })?;
                checks += 2;
            }
            // random o(V) elements stay in o(V) under conjugation
            let basis = space.lie_algebra_basis().unwrap();
            let x = basis.iter().fold(Matrix::zeros(f, n, n), |acc, b| {
                &acc + &b.scale(rng.gen_range(0..f.order()) as u16)
            });
            let t = space
                .transvection(&random_nonsingular(&mut rng, &space))
                .unwrap();
            ensure(space.in_lie_algebra(&(&(&t * &x) * &t)), || {
                "o(V) not stable under conjugation".into()
            })?;
        }
    }
    // Lie algebra dimensions 2n^2 + n (odd N = 2n + 1) and 2n^2 - n (N = 2n)
    for n in 2..=LIE_MAX_DIM {
        for e in [1, 2] {
            let f = FieldSpec::standard(e).unwrap();
            let h = n / 2;
            let want = if n % 2 == 1 {
                2 * h * h + h
            } else {
                2 * h * h - h
            };
            let kinds: &[SpaceKind] = if n % 2 == 1 {
                &[SpaceKind::Odd]
            } else {
                &[SpaceKind::Plus, SpaceKind::Minus]
            };
            for &kind in kinds {
                let got = QuadSpace::standard(kind, n, f)
                    .unwrap()
                    .lie_algebra_basis()
                    .unwrap()
                    .len();
                ensure(got == want, || {
                    format!("dim o({kind} {n}) = {got}, expected {want}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} checks, 0 failures"))
}

fn main() {
    let mut failures = 0;
    report(1, "defective census identity", criterion_1(), &mut failures);
    report(
        2,
        "non-defective census identities",
        criterion_2(),
        &mut failures,
    );
    report(
        3,
        "Springer cardinality bijection",
        criterion_3(),
        &mut failures,
    );
    report(
        4,
        "oracle ground truth over F_2",
        criterion_4(),
        &mut failures,
    );
    report(5, "dim-5 soundness witness", criterion_5(), &mut failures);
    report(6, "round-trip synthesis", criterion_6(), &mut failures);
    report(7, "variant non-conjugacy", criterion_7(), &mut failures);
    report(8, "property suites", criterion_8(), &mut failures);
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
