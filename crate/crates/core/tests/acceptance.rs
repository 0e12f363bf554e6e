//! Acceptance suite. Every criterion is an exact integer identity; the
//! runner prints one PASS/FAIL line per criterion and exits nonzero if any
//! fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sl3_ktypes::charseries::k_mults_from_tk;
use sl3_ktypes::orbits::{blattner_closed, borel_weil_table, k_mult, k_mult_ld, orbit_table, Orbit, TableEvaluator};
use sl3_ktypes::oracle::{weyl_dim, WeightDiagram};
use sl3_ktypes::positive::{classify, duality, fiber, fiber_size, in_c, mult_positive, Region};
use sl3_ktypes::vecpart::{kappa_brute, kappa_graded, kappa_total, part_bound, GradedGenerator, GradedTarget};
use sl3_ktypes::weights::WeylG;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Wall-clock budgets, in seconds, for the two large sweeps.
const EQUIVALENCE_BUDGET: Duration = Duration::from_secs(10);
const BRANCHING_BUDGET: Duration = Duration::from_secs(30);

fn positive_localization_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            for orbit in Orbit::ALL {
                let table = orbit_table(orbit, a, b).map_err(|e| e.to_string())?;
                let mut eval = TableEvaluator::new(&table).map_err(|e| e.to_string())?;
                for lambda in 0..=40u32 {
                    let positive = mult_positive(orbit, a.into(), b.into(), lambda.into());
                    let localized = eval.mult(lambda).map_err(|e| format!("{orbit} ({a},{b}) λ={lambda}: {e}"))?;
                    ensure!(
                        positive == localized,
                        "{orbit} ({a},{b}) λ={lambda}: positive {positive} vs localization {localized}"
                    );
                    cells += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < EQUIVALENCE_BUDGET, "took {elapsed:?}");
    Ok(format!("{cells} cells in {:.2}s", elapsed.as_secs_f64()))
}

fn branching_ground_truth() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for a in 0..=8u32 {
        for b in 0..=8u32 {
            let diagram = WeightDiagram::new(a, b);
            for n in 0..=a + b + 2 {
                let oracle = diagram.branch(n);
                let positive = mult_positive(Orbit::Open, a.into(), b.into(), n.into()) as i64;
                ensure!(positive == oracle, "({a},{b}) n={n}: positive {positive} vs oracle {oracle}");
                cells += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < BRANCHING_BUDGET, "took {elapsed:?}");
    Ok(format!("{cells} cells in {:.2}s", elapsed.as_secs_f64()))
}

fn golden_closed_sequence() -> Outcome {
    let expected = [0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4];
    let table = orbit_table(Orbit::Closed, 2, 4).map_err(|e| e.to_string())?;
    for (lambda, &want) in (6..=16u32).zip(&expected) {
        let positive = mult_positive(Orbit::Closed, 2, 4, lambda.into());
        let localized = k_mult(&table, lambda).map_err(|e| e.to_string())?;
        let weyl_sum = blattner_closed(2, 4, lambda);
        ensure!(
            positive == want && localized == want && weyl_sum == want,
            "λ={lambda}: want {want}, got positive {positive}, localization {localized}, weyl sum {weyl_sum}"
        );
    }
    Ok("0,0,0,1,1,2,2,3,3,4,4 at λ=6..16".into())
}

fn golden_open_sequence() -> Outcome {
    let expected = [1u64, 0, 2, 1];
    let table = orbit_table(Orbit::Open, 2, 2).map_err(|e| e.to_string())?;
    let diagram = WeightDiagram::new(2, 2);
    for (n, &want) in (0..4u32).zip(&expected) {
        let positive = mult_positive(Orbit::Open, 2, 2, n.into());
        let localized = k_mult(&table, n).map_err(|e| e.to_string())?;
        let oracle = diagram.branch(n);
        ensure!(
            positive == want && localized == want && oracle == want as i64,
            "n={n}: want {want}, got {positive}/{localized}/{oracle}"
        );
    }
    Ok("1,0,2,1 at n=0..3".into())
}

fn partition_of_c() -> Outcome {
    let mut cells = 0;
    for a in 0..=6u64 {
        for b in 0..=6u64 {
            for n in 0..=50u64 {
                let parts: u64 = Orbit::ALL.iter().map(|&o| mult_positive(o, a, b, n)).sum();
                let whole = fiber_size(a, b, n);
                ensure!(parts == whole, "({a},{b}) n={n}: regions {parts} vs C {whole}");
                for p in fiber(n) {
                    let region = classify(p, a, b);
                    ensure!((region != Region::NotInC) == in_c(p, a, b), "({a},{b}) {p}");
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} fibers"))
}

fn vanishing_and_nonnegativity() -> Outcome {
    let mut slices = 0;
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            for orbit in Orbit::ALL {
                let table = orbit_table(orbit, a, b).map_err(|e| e.to_string())?;
                let codim = i64::from(table.codim);
                for lambda in 0..=40u32 {
                    for d in 0..=i64::from(lambda) + codim {
                        let v = k_mult_ld(&table, lambda, d).map_err(|e| e.to_string())?;
                        ensure!(d >= codim || v == 0, "{orbit} ({a},{b}) λ={lambda} d={d} below codim: {v}");
                        ensure!(v >= 0, "{orbit} ({a},{b}) λ={lambda} d={d}: {v} < 0");
                        slices += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{slices} slices"))
}

fn pipeline_independence() -> Outcome {
    let mut slices = 0;
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            for orbit in Orbit::ALL {
                let table = orbit_table(orbit, a, b).map_err(|e| e.to_string())?;
                let codim = i64::from(table.codim);
                for lambda in 0..=30u32 {
                    for d in codim..=i64::from(lambda) + codim {
                        let direct = k_mult_ld(&table, lambda, d).map_err(|e| e.to_string())?;
                        let via_torus = k_mults_from_tk(&table, lambda, d).map_err(|e| e.to_string())?;
                        ensure!(
                            direct == via_torus,
                            "{orbit} ({a},{b}) λ={lambda} d={d}: {direct} vs {via_torus}"
                        );
                        slices += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{slices} slices"))
}

fn closed_orbit_weyl_sum() -> Outcome {
    let gens = vec![vec![1], vec![2]];
    for a in 0..=6u32 {
        for b in 0..=6u32 {
            let table = orbit_table(Orbit::Closed, a, b).map_err(|e| e.to_string())?;
            for lambda in 0..=40u32 {
                let weyl_sum = blattner_closed(a, b, lambda);
                let localized = k_mult(&table, lambda).map_err(|e| e.to_string())?;
                let target = i64::from(lambda) - 3 - i64::from(a + b);
                let direct = kappa_total(&[target], &gens, &[1]).map_err(|e| e.to_string())?;
                ensure!(
                    weyl_sum == localized && localized == direct,
                    "({a},{b}) λ={lambda}: {weyl_sum} / {localized} / {direct}"
                );
            }
        }
    }
    Ok("49 parameter pairs × 41 λ".into())
}

fn duality_properties() -> Outcome {
    let mut points = 0;
    for a in 0..=6u64 {
        for b in 0..=6u64 {
            for n in 0..=40u64 {
                let mut images = BTreeSet::new();
                for p in fiber(n).filter(|&p| in_c(p, a, b)) {
                    let q = duality(p, a, b).map_err(|e| e.to_string())?;
                    ensure!(in_c(q, b, a), "({a},{b}) {p} ↦ {q} not in C({b},{a})");
                    ensure!(q.projection() == n, "({a},{b}) {p} ↦ {q} moves the projection");
                    let back = duality(q, b, a).map_err(|e| e.to_string())?;
                    ensure!(back == p, "({a},{b}) {p} ↦ {q} ↦ {back}");
                    let want = Region::of_orbit(classify(p, a, b).orbit().expect("in C").dual());
                    ensure!(classify(q, b, a) == want, "({a},{b}) {p} ↦ {q}: region {:?}", classify(q, b, a));
                    images.insert(q);
                    points += 1;
                }
                let target: BTreeSet<_> = fiber(n).filter(|&q| in_c(q, b, a)).collect();
                ensure!(images == target, "({a},{b}) n={n}: image of the fiber is not the dual fiber");
                for orbit in Orbit::ALL {
                    ensure!(
                        mult_positive(orbit, a, b, n) == mult_positive(orbit.dual(), b, a, n),
                        "({a},{b}) n={n} {orbit}: region counts differ under duality"
                    );
                }
            }
        }
    }
    Ok(format!("{points} points"))
}

fn random_instance(rng: &mut ChaCha8Rng) -> (GradedTarget, Vec<GradedGenerator>, Vec<i64>, u32) {
    loop {
        let k = rng.gen_range(1..=2usize);
        let tau: Vec<i64> = (0..k).map(|_| rng.gen_range(-2..=2)).collect();
        if tau.iter().all(|&t| t == 0) {
            continue;
        }
        let n_gens = rng.gen_range(0..=6usize);
        let mut gens = Vec::with_capacity(n_gens);
        while gens.len() < n_gens {
            let weight: Vec<i64> = (0..k).map(|_| rng.gen_range(-12..=12)).collect();
            let degree = rng.gen_range(0..=1u32);
            let pairing: i64 = weight.iter().zip(&tau).map(|(w, t)| w * t).sum();
            if degree == 1 || pairing < 0 {
                gens.push(GradedGenerator::new(weight, degree));
            }
        }
        // Half the targets are sums of generators, so most counts are nonzero.
        let mut target = GradedTarget::new((0..k).map(|_| rng.gen_range(-12..=12)).collect(), rng.gen_range(-1..=3));
        if !gens.is_empty() && rng.gen_bool(0.5) {
            let mut weight = vec![0; k];
            let mut degree = 0;
            for _ in 0..rng.gen_range(1..=4) {
                let g: &GradedGenerator = &gens[rng.gen_range(0..gens.len())];
                weight.iter_mut().zip(&g.weight).for_each(|(w, x)| *w += x);
                degree += i64::from(g.degree);
            }
            if weight.iter().any(|w| w.abs() > 12) {
                continue;
            }
            target = GradedTarget::new(weight, degree);
        }
        // The lifted functional (-τ, N) with every generator positive.
        let slope = gens
            .iter()
            .filter(|g| g.degree > 0)
            .map(|g| g.weight.iter().zip(&tau).map(|(w, t)| w * t).sum::<i64>() + 1)
            .max()
            .unwrap_or(1)
            .max(1);
        let mut functional: Vec<i64> = tau.iter().map(|t| -t).collect();
        functional.push(slope);
        let lifted: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| g.weight.iter().copied().chain([i64::from(g.degree)]).collect())
            .collect();
        let lifted_target: Vec<i64> = target.weight.iter().copied().chain([target.degree]).collect();
        let bound = part_bound(&lifted_target, &lifted, &functional);
        if bound <= 24 {
            return (target, gens, tau, bound);
        }
    }
}

fn kappa_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b1a7);
    let mut nonzero = 0;
    for i in 0..500 {
        let (target, gens, tau, bound) = random_instance(&mut rng);
        let fast = kappa_graded(&target, &gens, &tau).map_err(|e| format!("instance {i}: {e}"))?;
        let slow = kappa_brute(&target, &gens, bound);
        ensure!(fast == slow, "instance {i}: {target:?} {gens:?} τ={tau:?}: memoized {fast} vs brute {slow}");
        if fast > 0 {
            nonzero += 1;
        }
    }
    Ok(format!("500 instances, {nonzero} with nonzero count"))
}

fn borel_weil_delta() -> Outcome {
    for mu in 0..=10u32 {
        let table = borel_weil_table(mu);
        for lambda in 0..=10u32 {
            let m = k_mult(&table, lambda).map_err(|e| e.to_string())?;
            ensure!(m == u64::from(lambda == mu), "μ={mu} λ={lambda}: {m}");
        }
    }
    Ok("μ, λ ∈ [0,10]".into())
}

fn oracle_self_checks() -> Outcome {
    for a in 0..=8u32 {
        for b in 0..=8u32 {
            let diagram = WeightDiagram::new(a, b);
            ensure!(diagram.dim() == weyl_dim(a, b), "({a},{b}): dim {} vs {}", diagram.dim(), weyl_dim(a, b));
            for (&mu, &m) in &diagram.mults {
                for w in WeylG::all() {
                    let image = w.act(mu);
                    ensure!(diagram.mult(image) == m, "({a},{b}): mult({mu}) = {m} but mult({image}) differs");
                }
            }
            let branched: u64 = diagram
                .branching()
                .iter()
                .enumerate()
                .map(|(n, m)| (2 * n as u64 + 1) * m)
                .sum();
            ensure!(branched == weyl_dim(a, b), "({a},{b}): branching checksum {branched}");
        }
    }
    Ok("81 weight diagrams".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("positive formula = localization", positive_localization_equivalence),
        ("branching ground truth", branching_ground_truth),
        ("golden sequence, closed orbit (2,4)", golden_closed_sequence),
        ("golden sequence, open orbit (2,2)", golden_open_sequence),
        ("partition of C into four regions", partition_of_c),
        ("vanishing below codim, nonnegativity", vanishing_and_nonnegativity),
        ("pipeline independence (T_K route)", pipeline_independence),
        ("closed-orbit Weyl sum", closed_orbit_weyl_sum),
        ("duality bijection", duality_properties),
        ("kappa vs brute-force oracle", kappa_oracle),
        ("Borel-Weil delta", borel_weil_delta),
        ("oracle self-checks", oracle_self_checks),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {:>2}. {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
