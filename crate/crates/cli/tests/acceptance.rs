//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Run with `cargo test -p pcycles-cli --test acceptance`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use pcycles_cli::{dataset::to_json, Dataset, InputKind, Selection};
use pcycles_core::builders::{lower_star_with_vertices, GrayImage};
use pcycles_core::cycles::{brute_force_minimal_cycle, verify_persistent_cycle};
use pcycles_core::{barcode_h1, Analysis, Filtration};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// The 200-filtration Rips corpus: 12 to 20 points, thresholds from sparse
/// to dense, at most 400 cells.
fn corpus() -> Vec<Filtration> {
    (0..200u64)
        .map(|k| {
            let mut r = rng(1000 + k);
            let n = r.random_range(12..=20);
            // Spread thresholds evenly over the sparse-to-dense range.
            let lo = 0.15 + 0.6 * (k as f64 / 200.0);
            random_rips(&mut r, n, lo, lo + 0.05, 400).0
        })
        .collect()
}

fn soundness(corpus: &[Filtration]) -> Outcome {
    let start = Instant::now();
    let (mut checked, mut failures) = (0usize, Vec::new());
    for (k, f) in corpus.iter().enumerate() {
        let a = Analysis::new(f.clone());
        let all = a.persistent_basis_all().map_err(|e| e.to_string())?;
        for pc in &all {
            let single = a.persistent_cycle_for(&pc.interval).map_err(|e| e.to_string())?;
            for (which, z) in [("all", &pc.chain), ("single", &single.chain)] {
                checked += 1;
                if let Some(reason) = verify_persistent_cycle(f, &pc.interval, z).reason() {
                    failures.push(format!("#{k} {} {which}: {reason}", pc.interval));
                }
            }
            if single.generators != pc.generators {
                failures.push(format!("#{k} {}: algorithms disagree", pc.interval));
            }
        }
    }
    let elapsed = start.elapsed();
    if !failures.is_empty() {
        return Err(format!("{} failures, first: {}", failures.len(), failures[0]));
    }
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:.1?}"));
    }
    let cells: usize = corpus.iter().map(Filtration::len).sum();
    Ok(format!("{} filtrations, {cells} cells, {checked} cycles verified in {elapsed:.2?}", corpus.len()))
}

fn pairing(corpus: &[Filtration]) -> Outcome {
    let mut bars = 0;
    for (k, f) in corpus.iter().enumerate() {
        let ours: Vec<_> = barcode_h1(f).iter().copied().collect();
        let naive = naive_barcode(f);
        if ours != naive {
            return Err(format!("#{k}: {} bars vs {} from the naive reduction", ours.len(), naive.len()));
        }
        bars += ours.len();
    }
    Ok(format!("{bars} bars identical across {} filtrations", corpus.len()))
}

fn single_generator_minimality() -> Outcome {
    let (mut filtrations, mut bars, mut seed) = (0usize, 0usize, 0u64);
    while filtrations < 100 {
        seed += 1;
        if seed > 20_000 {
            return Err(format!("only {filtrations} qualifying filtrations found"));
        }
        let mut r = rng(50_000 + seed);
        let n = r.random_range(6..=9);
        let (f, _) = random_rips(&mut r, n, 0.3, 1.2, 400);
        if f.dim_count(1) > 25 || f.dim_count(1) < 4 {
            continue;
        }
        let a = Analysis::new(f.clone());
        let mut any = false;
        for iv in a.barcode().iter() {
            let pc = a.persistent_cycle_for(iv).map_err(|e| e.to_string())?;
            if pc.generators.len() != 1 {
                continue;
            }
            let best = brute_force_minimal_cycle(&f, iv, 25)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("seed {seed} {iv}: oracle found nothing"))?;
            let (ours, oracle) = (f.weight(&pc.chain), f.weight(&best));
            if ours != oracle {
                return Err(format!("seed {seed} {iv}: weight {ours} vs oracle {oracle}"));
            }
            any = true;
            bars += 1;
        }
        filtrations += any as usize;
    }
    Ok(format!("{bars} single-generator bars over {filtrations} filtrations match the oracle"))
}

fn generator_structure(corpus: &[Filtration]) -> Outcome {
    let (mut cycles, mut subset_checked, mut multi) = (0usize, 0usize, 0usize);
    for (k, f) in corpus.iter().enumerate() {
        let a = Analysis::new(f.clone());
        for pc in a.persistent_basis_all().map_err(|e| e.to_string())? {
            cycles += 1;
            multi += (pc.generators.len() > 1) as usize;
            if !generators_respect_interval(a.pairing(), &pc) {
                return Err(format!("#{k} {}: G = {:?} violates the birth/death filter", pc.interval, pc.generators));
            }
            match no_proper_subset_bounds(f, &pc) {
                Some(true) => subset_checked += 1,
                Some(false) => {
                    return Err(format!("#{k} {}: a proper subset of G = {:?} bounds", pc.interval, pc.generators))
                }
                None => {}
            }
        }
    }
    Ok(format!(
        "{cycles} cycles ({multi} with |G| > 1), {subset_checked} exhaustively subset-checked"
    ))
}

/// Pixels of a ring of radius `r` around `c`, one pixel either side.
fn ring_mask(w: usize, h: usize, c: (f64, f64), r: f64) -> Vec<bool> {
    (0..w * h)
        .map(|p| {
            let (y, x) = ((p / w) as f64, (p % w) as f64);
            ((y - c.0).hypot(x - c.1) - r).abs() <= 1.0
        })
        .collect()
}

fn hausdorff(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let directed = |from: &[(f64, f64)], to: &[(f64, f64)]| {
        from.iter()
            .map(|p| to.iter().map(|q| (p.0 - q.0).hypot(p.1 - q.1)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

fn cubical() -> Outcome {
    // 3×3 ring: one bar, its cycle the 8 edges around the centre.
    let img = GrayImage::new(3, 3, vec![10, 10, 10, 10, 200, 10, 10, 10, 10]).map_err(|e| e.to_string())?;
    let ds = Dataset::from_text(InputKind::Image, &pcycles_core::builders::write_pgm(&img), None)
        .map_err(|e| e.to_string())?;
    let bars = ds.barcode_record().intervals;
    if bars.len() != 1 || bars[0].death.is_none() {
        return Err(format!("3x3 ring: expected one finite bar, got {bars:?}"));
    }
    let rec = ds.cycle_record(0).map_err(|e| e.to_string())?;
    let centre = match &ds.geometry {
        pcycles_cli::dataset::Geometry::Image { vertex_of, .. } => vertex_of[4],
        _ => unreachable!(),
    };
    if rec.edges.len() != 8 || rec.edges.iter().flatten().any(|&v| v == centre) {
        return Err(format!("3x3 ring: cycle {:?} is not the pixel ring", rec.edges));
    }

    // 64×64: two dark rings on a bright noisy background.
    let (w, h) = (64, 64);
    let rings = [((20.0, 20.0), 12.0), ((43.0, 43.0), 13.0)];
    let masks: Vec<Vec<bool>> = rings.iter().map(|&(c, r)| ring_mask(w, h, c, r)).collect();
    let mut r = rng(64);
    let img = GrayImage::from_fn(w, h, |y, x| {
        if masks.iter().any(|m| m[y * w + x]) {
            r.random_range(0..=20)
        } else {
            r.random_range(150..=255)
        }
    })
    .map_err(|e| e.to_string())?;
    let (f, vertex_of) = lower_star_with_vertices(&img).map_err(|e| e.to_string())?;
    let mut pixel_of = vec![0usize; f.len() + 1];
    for (p, &v) in vertex_of.iter().enumerate() {
        pixel_of[v] = p;
    }
    let a = Analysis::new(f.clone());
    let persistence = |iv: &pcycles_core::Interval| match iv.death {
        Some(d) => f.cells()[d - 1].value.unwrap() - f.cells()[iv.birth - 1].value.unwrap(),
        None => f64::INFINITY,
    };
    let dominant: Vec<_> = a.barcode().iter().filter(|iv| persistence(iv) > 120.0).copied().collect();
    if dominant.len() != 2 {
        return Err(format!("64x64: {} dominant bars, expected 2", dominant.len()));
    }
    let coords = |p: usize| ((p / w) as f64, (p % w) as f64);
    let ring_pixels: Vec<Vec<(f64, f64)>> = masks
        .iter()
        .map(|m| (0..w * h).filter(|&p| m[p]).map(coords).collect())
        .collect();
    let mut matched = [f64::INFINITY; 2];
    for iv in &dominant {
        let pc = a.persistent_cycle_for(iv).map_err(|e| e.to_string())?;
        if !a.verify(iv, &pc.chain).is_accept() {
            return Err(format!("64x64 {iv}: cycle fails verification"));
        }
        let mut pts: Vec<(f64, f64)> = pc
            .chain
            .ids()
            .iter()
            .flat_map(|&e| {
                let (u, v) = f.endpoints(e).unwrap();
                [coords(pixel_of[u]), coords(pixel_of[v])]
            })
            .collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup();
        let d: Vec<f64> = ring_pixels.iter().map(|ring| hausdorff(&pts, ring)).collect();
        let k = if d[0] <= d[1] { 0 } else { 1 };
        matched[k] = matched[k].min(d[k]);
    }
    if matched.iter().any(|&d| d > 2.0) {
        return Err(format!("64x64: Hausdorff distances {matched:?} exceed 2 px"));
    }
    Ok(format!(
        "3x3 ring exact; 64x64 dominant bars {:?} at Hausdorff {:.2} and {:.2} px",
        dominant.iter().map(ToString::to_string).collect::<Vec<_>>(),
        matched[0],
        matched[1]
    ))
}

fn torus_points(n: usize, seed: u64) -> String {
    let (big, small) = (2.0, 1.0);
    let mut r = rng(seed);
    let mut out = String::new();
    for _ in 0..n {
        let (u, v) = (r.random::<f64>() * TAU, r.random::<f64>() * TAU);
        let rho = big + small * v.cos();
        writeln!(out, "{} {} {}", rho * u.cos(), rho * u.sin(), small * v.sin()).unwrap();
    }
    out
}

fn performance() -> Outcome {
    let text = torus_points(2000, 7);
    let threshold = 0.5;
    let start = Instant::now();
    let ds = Dataset::from_text(InputKind::Points, &text, Some(threshold)).map_err(|e| e.to_string())?;
    let cells = ds.analysis.filtration().len();
    let barcode = to_json(&ds.barcode_record());
    let cycles = ds.cycles_record(&Selection::Top(50)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if cells < 100_000 {
        return Err(format!("only {cells} cells"));
    }
    if cycles.cycles.len() != 50.min(ds.analysis.barcode().len()) {
        return Err(format!("{} cycles emitted", cycles.cycles.len()));
    }
    if elapsed > Duration::from_secs(30) {
        return Err(format!("{cells} cells took {elapsed:.1?}"));
    }
    Ok(format!(
        "{cells} cells, {} bars ({} bytes), {} cycles in {elapsed:.2?}",
        ds.analysis.barcode().len(),
        barcode.len(),
        cycles.cycles.len()
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("cloud.xyz");
    std::fs::write(&input, torus_points(300, 11)).map_err(|e| e.to_string())?;
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_pcycles"))
            .args(args)
            .args(["--input", input.to_str().unwrap(), "--kind", "points", "--threshold", "0.9"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(String::from_utf8_lossy(&out.stderr).into_owned());
        }
        Ok(out.stdout)
    };
    let mut checked = 0;
    for args in [&["barcode"][..], &["cycles"], &["cycles", "--top", "5"]] {
        let first = run(args)?;
        for _ in 0..2 {
            if run(args)? != first {
                return Err(format!("`{}` output differs between runs", args.join(" ")));
            }
        }
        checked += first.len();
    }
    Ok(format!("3 commands x 3 runs byte-identical ({checked} bytes each round)"))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("verifier soundness sweep", Box::new(|| soundness(&corpus))),
        ("pairing oracle equivalence", Box::new(|| pairing(&corpus))),
        ("single-generator cycles are minimal", Box::new(single_generator_minimality)),
        ("generator filter and subset minimality", Box::new(|| generator_structure(&corpus))),
        ("cubical fixtures", Box::new(cubical)),
        ("torus performance", Box::new(performance)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name}: {reason}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
