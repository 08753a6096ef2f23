//! Acceptance checks, one per criterion. Run with
//! `cargo test -p qtf-cli --test acceptance -- --nocapture` to see the
//! PASS/FAIL lines.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use serde_json::Value;

use qtf_core::montecarlo::{
    censor_at_floor, closed_form_collapse_time, generate_tracks, is_monotone_nondecreasing, rng,
    run_accrual, sweep_prediction_1, AccrualConfig, RadiusDistribution, SimConfig,
};
use qtf_core::thermo::{
    audit_against_paper, dynamic_rendering_rate, landauer_cost, min_sustain_energy,
    stated_magnitudes,
};
use qtf_core::tracks::fixture::fixture_csv;
use qtf_core::{
    action_index, compute_budget, compute_stats, get_consts, PaperValues, ThermoQuery, TrackDataset,
};

// Pinned tolerances.
const TOL_INDEX_REL: f64 = 5e-3;
const TOL_FIXTURE_RADIUS_MM: f64 = 5e-3;
const TOL_FILTERED_FRACTION: f64 = 0.5 / 228.0;
const FIXTURE_RUNTIME: Duration = Duration::from_secs(1);
const TOL_LANDAUER_REL: f64 = 1e-12;
const TOL_MIN_SUSTAIN_REL: f64 = 1e-3;
const TOL_DYNAMIC_REL: f64 = 1e-3;
const CENSOR_RUNS: u64 = 10_000;
const CENSOR_RUNTIME: Duration = Duration::from_secs(60);
const ACCRUAL_CONFIGS: u64 = 100;
const STATS_DATASETS: u64 = 1_000;
const TOL_STATS_REL: f64 = 1e-12;
const THREAD_COUNTS: [&str; 3] = ["1", "2", "8"];

// Extended-precision oracles (40-digit evaluation).
const ORACLE_LANDAUER_300K: f64 = 2.870_978_885_078_724e-21;
const ORACLE_LANDAUER_1E6_BITS: f64 = 2.870_978_885_078_723_8e-15;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn qtf(args: &[&str], threads: Option<&str>) -> Vec<u8> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qtf"));
    cmd.args(args).env_remove("QTF_SEED");
    if let Some(t) = threads {
        cmd.env("RAYON_NUM_THREADS", t);
    }
    let out = cmd.output().expect("spawn qtf");
    assert_eq!(
        out.status.code(),
        Some(0),
        "qtf {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn c1_median_index() -> Check {
    let pv = PaperValues::get();
    let n = action_index(pv.paper_median_radius, pv.paper_momentum, &get_consts())
        .map_err(|e| e.to_string())?
        .n_real;
    let gap = rel(n, pv.paper_n_median);
    ensure(gap <= TOL_INDEX_REL, format!("n = {n:.4e}, gap {gap:.2e}"))?;
    Ok(format!("n = {n:.4e} vs 2.06e13 (gap {gap:.2e})"))
}

fn c2_mean_index() -> Check {
    let pv = PaperValues::get();
    let n = action_index(pv.paper_mean_radius, pv.paper_momentum, &get_consts())
        .map_err(|e| e.to_string())?
        .n_real;
    let gap = rel(n, pv.paper_n_mean);
    ensure(gap <= TOL_INDEX_REL, format!("n = {n:.4e}, gap {gap:.2e}"))?;
    Ok(format!("n = {n:.4e} vs 2.29e13 (gap {gap:.2e})"))
}

fn c3_fixture_end_to_end(dir: &Path) -> Check {
    let path = dir.join("fixture.csv");
    std::fs::write(&path, fixture_csv()).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = qtf(&["analyze", path.to_str().unwrap()], None);
    let elapsed = start.elapsed();
    let v: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let s = &v["report"]["stats"];
    let median_mm = s["median_radius"].as_f64().unwrap() * 1e3;
    let sigma_mm = s["sigma_radius"].as_f64().unwrap() * 1e3;
    let fraction = s["filtered_fraction"].as_f64().unwrap();
    let n_median = v["report"]["n_median"].as_f64().unwrap();
    ensure(s["count"] == 228, "count != 228")?;
    ensure(
        (median_mm - 6.67).abs() <= TOL_FIXTURE_RADIUS_MM,
        format!("median {median_mm}"),
    )?;
    ensure(
        (sigma_mm - 5.05).abs() <= TOL_FIXTURE_RADIUS_MM,
        format!("sigma {sigma_mm}"),
    )?;
    ensure(
        (fraction - 0.706).abs() <= TOL_FILTERED_FRACTION,
        format!("fraction {fraction}"),
    )?;
    ensure(
        rel(n_median, 2.06e13) <= TOL_INDEX_REL,
        format!("n_median {n_median:e}"),
    )?;
    ensure(elapsed < FIXTURE_RUNTIME, format!("took {elapsed:?}"))?;
    Ok(format!(
        "median {median_mm:.3} mm, σ {sigma_mm:.3} mm, {} of 228 ({:.1}%), n_median {n_median:.3e}, {elapsed:.0?}",
        s["filtered_count"],
        fraction * 100.0
    ))
}

fn c4_landauer() -> Check {
    let consts = get_consts();
    let budget = compute_budget(&ThermoQuery::default(), &consts).map_err(|e| e.to_string())?;
    let per_bit = budget.erase_per_bit;
    let (direct, _) = landauer_cost(300.0, 1.0, &consts).map_err(|e| e.to_string())?;
    ensure(per_bit == direct, "budget and direct call disagree")?;
    ensure(
        rel(per_bit, ORACLE_LANDAUER_300K) <= TOL_LANDAUER_REL,
        format!("per bit {per_bit:e}"),
    )?;
    ensure(
        rel(budget.erase_total, ORACLE_LANDAUER_1E6_BITS) <= TOL_LANDAUER_REL,
        format!("total {:e}", budget.erase_total),
    )?;
    let per_bit_1sf = format!("{per_bit:.0e}");
    let total_1sf = format!("{:.0e}", budget.erase_total);
    ensure(
        per_bit_1sf == "3e-21",
        format!("per bit rounds to {per_bit_1sf}"),
    )?;
    ensure(total_1sf == "3e-15", format!("total rounds to {total_1sf}"))?;
    Ok(format!(
        "{per_bit:.6e} J/bit ({per_bit_1sf}), {:.6e} J for 1e6 bits ({total_1sf})",
        budget.erase_total
    ))
}

fn c5_min_sustain() -> Check {
    let e = min_sustain_energy(1e-3, &get_consts()).map_err(|e| e.to_string())?;
    let gap = rel(e, 1.055e-31);
    ensure(gap <= TOL_MIN_SUSTAIN_REL, format!("{e:e}, gap {gap:.2e}"))?;
    Ok(format!("{e:.4e} J (gap {gap:.2e})"))
}

fn c6_dynamic_rate() -> Check {
    let r = dynamic_rendering_rate(6e-14, 1e23, 60.0).map_err(|e| e.to_string())?;
    let gap = rel(r, 3.6e11);
    ensure(gap <= TOL_DYNAMIC_REL, format!("{r:e}, gap {gap:.2e}"))?;
    Ok(format!("{r:.4e} J/s (gap {gap:.2e})"))
}

fn c7_audit_flags() -> Check {
    let consts = get_consts();
    let budget = compute_budget(&ThermoQuery::default(), &consts).map_err(|e| e.to_string())?;
    let audit = audit_against_paper(&budget, &stated_magnitudes());
    let flag = |name: &str| {
        audit
            .iter()
            .find(|r| r.quantity_name == name)
            .map(|r| r.flagged)
    };
    for name in ["decoherence_rate", "per_frame"] {
        ensure(flag(name) == Some(true), format!("{name} not flagged"))?;
    }
    for name in ["erase_per_bit", "erase_total", "min_sustain"] {
        ensure(flag(name) == Some(false), format!("{name} flagged"))?;
    }
    let flagged: Vec<&str> = audit
        .iter()
        .filter(|r| r.flagged)
        .map(|r| r.quantity_name.as_str())
        .collect();
    ensure(
        flagged == ["decoherence_rate", "per_frame", "dynamic_rate_claimed"],
        format!("unexpected flag set {flagged:?}"),
    )?;
    Ok(format!("flagged {flagged:?}"))
}

fn c8_floor_property() -> Check {
    let consts = get_consts();
    let start = Instant::now();
    let mut params = rng::stream(0x5eed, 0);
    let mut violations = 0usize;
    let mut mismatches = 0usize;
    let mut retained_total = 0usize;
    let mut removed_total = 0usize;
    for run in 0..CENSOR_RUNS {
        let distribution = match run % 3 {
            0 => RadiusDistribution::LognormalMoments {
                mean: params.random_range(2e-3..1.5e-2),
                sd: params.random_range(5e-4..8e-3),
            },
            1 => {
                let lo = params.random_range(1e-4..5e-3);
                RadiusDistribution::Uniform {
                    lo,
                    hi: lo + params.random_range(1e-3..2e-2),
                }
            }
            _ => RadiusDistribution::Lognormal {
                mu: params.random_range(-6.5..-4.0),
                sigma: params.random_range(0.1..1.0),
            },
        };
        let floor_n = 10f64.powf(params.random_range(11.0..13.5));
        let config = SimConfig {
            seed: run,
            n_tracks: params.random_range(1..=400),
            radius_distribution: distribution,
            floor_n,
            ..Default::default()
        };
        let momentum = config.momentum().map_err(|e| e.to_string())?;
        let generated = generate_tracks(&config).map_err(|e| e.to_string())?;
        let kept =
            censor_at_floor(&generated, floor_n, momentum, &consts).map_err(|e| e.to_string())?;

        violations += kept
            .records
            .iter()
            .filter(|r| r.radius * momentum / consts.hbar < floor_n)
            .count();
        let brute: Vec<_> = generated
            .records
            .iter()
            .filter(|r| action_index(r.radius, momentum, &consts).unwrap().n_real >= floor_n)
            .copied()
            .collect();
        if brute != kept.records {
            mismatches += 1;
        }
        retained_total += kept.len();
        removed_total += generated.len() - kept.len();
    }
    let elapsed = start.elapsed();
    ensure(
        violations == 0,
        format!("{violations} retained tracks below floor"),
    )?;
    ensure(
        mismatches == 0,
        format!("{mismatches} runs differ from brute force"),
    )?;
    ensure(
        removed_total > 0 && retained_total > 0,
        "floors never bit or always emptied",
    )?;
    ensure(elapsed < CENSOR_RUNTIME, format!("took {elapsed:?}"))?;
    Ok(format!(
        "{CENSOR_RUNS} runs, {retained_total} retained, {removed_total} removed, 0 violations, {elapsed:.1?}"
    ))
}

fn c9_accrual_oracle() -> Check {
    let mut r = rng::stream(0xacc, 0);
    let mut collapsing = 0;
    for i in 0..ACCRUAL_CONFIGS {
        let budget_rate = r.random_range(0.0..5.0);
        let cost_rate = if i % 4 == 3 {
            r.random_range(0.0..=budget_rate)
        } else {
            budget_rate + r.random_range(0.01..5.0)
        };
        let cfg = AccrualConfig {
            initial_budget: r.random_range(0.0..100.0),
            budget_rate,
            cost_rate,
            time_step: r.random_range(1e-3..0.5),
            max_time: 1e6,
        };
        let out = run_accrual(&cfg).map_err(|e| e.to_string())?;
        match closed_form_collapse_time(&cfg) {
            Some(t) => {
                let got = out
                    .collapse_time
                    .ok_or(format!("config {i} never collapsed: {cfg:?}"))?;
                ensure(
                    (got - t).abs() <= cfg.time_step,
                    format!("config {i}: {got} vs {t}, Δt {}", cfg.time_step),
                )?;
                collapsing += 1;
            }
            None => ensure(!out.collapsed, format!("config {i} collapsed with c <= a"))?,
        }
    }
    let base = AccrualConfig {
        initial_budget: 10.0,
        budget_rate: 0.0,
        cost_rate: 2.0,
        time_step: 0.01,
        max_time: 1e4,
    };
    let rates: Vec<f64> = (0..=25).map(|k| k as f64 * 0.1).collect();
    let points = sweep_prediction_1(&base, &rates).map_err(|e| e.to_string())?;
    ensure(
        is_monotone_nondecreasing(&points),
        "budget-rate sweep is not monotone",
    )?;
    Ok(format!(
        "{ACCRUAL_CONFIGS} configs ({collapsing} collapsing) within Δt; {}-point sweep monotone",
        rates.len()
    ))
}

fn c10_determinism(dir: &Path) -> Check {
    let fixture = dir.join("fixture.csv");
    std::fs::write(&fixture, fixture_csv()).map_err(|e| e.to_string())?;
    let sim = dir.join("sim.toml");
    std::fs::write(
        &sim,
        "seed = 2024\n[population]\nn_tracks = 5000\nfloor_n = 5e12\n\
         [accrual]\ninitial_budget = 10.0\nbudget_rate = 1.0\ncost_rate = 2.0\ntime_step = 0.01\nmax_time = 100.0\n\
         [sweep]\nbudget_rates = [0.0, 1.0, 1.9]\n",
    )
    .map_err(|e| e.to_string())?;
    let fx = fixture.to_str().unwrap();
    let sm = sim.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["constants"],
        vec!["constants", "--format", "text"],
        vec!["analyze", fx],
        vec!["analyze", fx, "--format", "csv"],
        vec!["analyze", fx, "--format", "text", "--momentum", "derived"],
        vec!["budget"],
        vec!["budget", "--format", "csv"],
        vec!["simulate", sm],
        vec!["simulate", sm, "--format", "text"],
        vec!["fixture"],
    ];
    for args in &invocations {
        let reference = qtf(args, None);
        ensure(
            reference == qtf(args, None),
            format!("{args:?} differs between runs"),
        )?;
        for t in THREAD_COUNTS {
            ensure(
                reference == qtf(args, Some(t)),
                format!("{args:?} differs with RAYON_NUM_THREADS={t}"),
            )?;
        }
    }
    Ok(format!(
        "{} invocations byte-identical across repeats and {THREAD_COUNTS:?} threads",
        invocations.len()
    ))
}

fn c11_stats_oracle() -> Check {
    let mut r = rng::stream(0x57a7, 0);
    let mut worst = 0f64;
    for i in 0..STATS_DATASETS {
        let n = r.random_range(1..=2_000usize);
        let spread = r.random_range(1e-3..5e-2);
        let radii: Vec<f64> = (0..n).map(|_| r.random_range(1e-5..spread)).collect();
        let got = compute_stats(&TrackDataset::from_radii("oracle", radii.clone()))
            .map_err(|e| e.to_string())?;

        let mut v = radii;
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = if n % 2 == 1 {
            v[n / 2]
        } else {
            (v[n / 2 - 1] + v[n / 2]) / 2.0
        };
        let mean = v.iter().sum::<f64>() / n as f64;
        let sigma = (v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64).sqrt();
        let band: Vec<f64> = v
            .iter()
            .copied()
            .filter(|&x| mean - sigma <= x && x <= mean + sigma)
            .collect();
        let band_mean = band.iter().sum::<f64>() / band.len() as f64;

        let gaps = [
            rel(got.median_radius, median),
            rel(got.mean_radius, mean),
            // σ can be zero for a single value; scale by the mean instead.
            (got.sigma_radius - sigma).abs() / mean,
            rel(got.filtered_mean_radius, band_mean),
        ];
        let max = gaps.iter().cloned().fold(0.0, f64::max);
        worst = worst.max(max);
        ensure(
            max <= TOL_STATS_REL,
            format!("dataset {i} (n={n}): gaps {gaps:?}"),
        )?;
        ensure(
            got.filtered_count == band.len(),
            format!("dataset {i}: filter count"),
        )?;
    }
    Ok(format!(
        "{STATS_DATASETS} datasets, worst relative gap {worst:.2e}"
    ))
}

#[test]
fn acceptance() {
    let dir = tempfile::tempdir().unwrap();
    let checks: Vec<Criterion> = vec![
        ("1  median index", Box::new(c1_median_index)),
        ("2  filtered-mean index", Box::new(c2_mean_index)),
        (
            "3  fixture end to end",
            Box::new(|| c3_fixture_end_to_end(dir.path())),
        ),
        ("4  Landauer cost", Box::new(c4_landauer)),
        ("5  minimum sustain energy", Box::new(c5_min_sustain)),
        ("6  dynamic rendering rate", Box::new(c6_dynamic_rate)),
        ("7  discrepancy audit flags", Box::new(c7_audit_flags)),
        ("8  floor property", Box::new(c8_floor_property)),
        ("9  accrual oracle", Box::new(c9_accrual_oracle)),
        ("10 determinism", Box::new(|| c10_determinism(dir.path()))),
        ("11 statistics oracle", Box::new(c11_stats_oracle)),
    ];
    let mut failed = Vec::new();
    for (name, check) in &checks {
        match check() {
            Ok(detail) => println!("PASS  {name:<28} {detail}"),
            Err(why) => {
                println!("FAIL  {name:<28} {why}");
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
