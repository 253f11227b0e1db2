use std::collections::BTreeSet;

use hexfour::cheb::{gauss_cubature_deltoid, lobatto_cubature_deltoid, real_basis_upto, z_of, ChebKind};
use hexfour::dft::DftPlan;
use hexfour::hex::{inner_n, inner_n_star, interp_hex, lebesgue_constant, HexBasis};
use hexfour::lattice::phi;
use hexfour::tri::{
    inner_triangle, interp_triangle_cosine, interp_triangle_sine, lebesgue_constant_triangle, tc,
    triangle_cubature, ts, TriInterp, TriVariant,
};
use hexfour::{enumerate, Complex64, FreqIndex, HPoint, IndexSet, NodeSamples};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{Function, RunConfig};

pub const EXACT_TOL: f64 = 1e-10;
pub const SHARPNESS_TOL: f64 = 1e-6;
const WRONG_WEIGHT: f64 = 1.001;

pub struct Report<T> {
    pub rows: Vec<T>,
    pub passed: bool,
}

/// Runs `f` on every job in its own thread and returns results in job order.
fn par_map<J: Sync, R: Send>(jobs: &[J], f: impl Fn(&J) -> R + Sync) -> Vec<R> {
    std::thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|j| s.spawn(|| f(j))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn triangle_grid(g: usize) -> Vec<HPoint> {
    let mut pts = Vec::with_capacity((g + 1) * (g + 2) / 2);
    for a in 0..=g {
        for b in 0..=(g - a) {
            pts.push(HPoint::new(a as f64 / g as f64, b as f64 / g as f64));
        }
    }
    pts
}

#[derive(Debug, Serialize)]
pub struct OrthogonalityRow {
    pub domain: &'static str,
    pub n: usize,
    pub pairs: usize,
    pub max_defect: f64,
    pub pass: bool,
}

fn diagonal_plan(seed: u64, n: usize) -> DftPlan {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let a = [r.gen_range(0.5..2.0), r.gen_range(0.5..2.0)];
    let m = [r.gen_range(1..=n) as f64, r.gen_range(1..=n) as f64];
    DftPlan::diagonal(a, [m[0] / a[0], m[1] / a[1]]).expect("integral diagonal plan")
}

fn plan_defect(p: &DftPlan) -> (usize, f64) {
    let mut ks: Vec<[i64; 2]> = p.lambda_ntr().to_vec();
    let n = p.n();
    for m1 in -2i64..=2 {
        for m2 in -2i64..=2 {
            ks.push([n[(0, 0)] * m1 + n[(1, 0)] * m2, n[(0, 1)] * m1 + n[(1, 1)] * m2]);
        }
    }
    let worst = ks.iter().map(|k| p.orthogonality_defect(*k)).fold(0.0, f64::max);
    (ks.len(), worst)
}

/// Distinct differences `a − b` over `a, b ∈ H_n`.
fn hex_differences(n: usize) -> Vec<FreqIndex> {
    let hn = enumerate(IndexSet::Hex, n);
    let mut out = BTreeSet::new();
    for a in &hn {
        for b in &hn {
            out.insert(FreqIndex::new(a.k1() - b.k1(), a.k2() - b.k2()));
        }
    }
    out.into_iter().collect()
}

fn tc_gram(k: FreqIndex, j: FreqIndex) -> f64 {
    if k != j {
        0.0
    } else if k == FreqIndex::ZERO {
        1.0
    } else if k.has_zero_component() {
        1.0 / 3.0
    } else {
        1.0 / 6.0
    }
}

fn orthogonality_rows(n: usize, seed: u64, scale: f64) -> Vec<OrthogonalityRow> {
    let row = |domain, pairs, max_defect: f64| OrthogonalityRow {
        domain,
        n,
        pairs,
        max_defect,
        pass: max_defect < EXACT_TOL,
    };
    let mut rows = Vec::new();

    let (count, d) = plan_defect(&DftPlan::hexagon(n).expect("hexagon plan"));
    rows.push(row("lattice-hexagon", count, d));
    let (count, d) = plan_defect(&diagonal_plan(seed, n));
    rows.push(row("lattice-diagonal", count, d));

    // φ_a conj φ_b = φ_{a−b}, so one product per distinct difference.
    let diffs = hex_differences(n);
    let mut worst = [0.0f64; 2];
    for (slot, set) in [(0, IndexSet::Hex), (1, IndexSet::HexStar)] {
        let one = NodeSamples::from_fn(set, n, |_| Complex64::new(1.0, 0.0));
        for d in &diffs {
            let s = NodeSamples::from_fn(set, n, |t| phi(*d, t));
            let v = if slot == 0 { inner_n(&s, &one) } else { inner_n_star(&s, &one) }.expect("matching sets") * scale;
            let want = if *d == FreqIndex::ZERO { 1.0 } else { 0.0 };
            worst[slot] = worst[slot].max((v - want).norm());
        }
    }
    rows.push(row("hexagon", diffs.len(), worst[0]));
    rows.push(row("hexagon-star", diffs.len(), worst[1]));

    // Self-pairs on the layer -k3 = n alias onto lower frequencies and are
    // left out; every other pair in Λ_n is checked.
    let ln = enumerate(IndexSet::Triangle, n);
    let samples: Vec<NodeSamples> = ln.iter().map(|k| NodeSamples::from_fn(IndexSet::Triangle, n, |t| tc(*k, t))).collect();
    let (mut pairs, mut w) = (0, 0.0f64);
    for (a, ka) in ln.iter().enumerate() {
        for (b, kb) in ln.iter().enumerate() {
            if a == b && -ka.k3() == n as i64 {
                continue;
            }
            let v = inner_triangle(&samples[a], &samples[b], TriVariant::Full).expect("matching sets") * scale;
            w = w.max((v - tc_gram(*ka, *kb)).norm());
            pairs += 1;
        }
    }
    rows.push(row("triangle-full", pairs, w));

    let li = enumerate(IndexSet::TriangleInterior, n);
    let samples: Vec<NodeSamples> = li
        .iter()
        .map(|k| NodeSamples::from_fn(IndexSet::TriangleInterior, n, |t| ts(*k, t)))
        .collect();
    let mut w = 0.0f64;
    for a in 0..li.len() {
        for b in 0..li.len() {
            let v = inner_triangle(&samples[a], &samples[b], TriVariant::Interior).expect("matching sets") * scale;
            let want = if a == b { 1.0 / 6.0 } else { 0.0 };
            w = w.max((v - want).norm());
        }
    }
    rows.push(row("triangle-interior", li.len() * li.len(), w));
    rows
}

pub fn orthogonality(cfg: &RunConfig) -> Report<OrthogonalityRow> {
    let scale = if cfg.inject_weight_error { WRONG_WEIGHT } else { 1.0 };
    let rows: Vec<_> = par_map(&cfg.n, |&n| orthogonality_rows(n, cfg.seed, scale)).into_iter().flatten().collect();
    let passed = rows.iter().all(|r| r.pass);
    Report { rows, passed }
}

#[derive(Debug, Serialize)]
pub struct LebesgueRow {
    pub operator: &'static str,
    pub n: usize,
    pub grid: usize,
    pub lebesgue: f64,
    pub ratio: f64,
}

pub const LEBESGUE_OPERATORS: [&str; 3] = ["hex-star", "tri-sine", "tri-cosine"];

/// Largest allowed spread `max ratio / min ratio` per operator.
pub const RATIO_BAND: f64 = 4.0;

pub fn lebesgue(cfg: &RunConfig) -> Report<LebesgueRow> {
    let jobs: Vec<(&'static str, usize)> = LEBESGUE_OPERATORS
        .iter()
        .flat_map(|op| cfg.n.iter().map(move |n| (*op, *n)))
        .collect();
    let grid = cfg.grid;
    let rows: Vec<LebesgueRow> = par_map(&jobs, |&(operator, n)| {
        let lebesgue = match operator {
            "hex-star" => lebesgue_constant(n, grid),
            "tri-sine" => lebesgue_constant_triangle(n, TriInterp::Sine, grid),
            _ => lebesgue_constant_triangle(n, TriInterp::Cosine, grid),
        }
        .expect("validated configuration");
        LebesgueRow {
            operator,
            n,
            grid,
            lebesgue,
            ratio: lebesgue / (n as f64).ln().powi(2),
        }
    });
    let mut passed = rows.iter().all(|r| r.ratio.is_finite() && r.ratio > 0.0);
    for op in LEBESGUE_OPERATORS {
        let mine: Vec<&LebesgueRow> = rows.iter().filter(|r| r.operator == op).collect();
        passed &= mine.windows(2).all(|w| w[1].lebesgue > w[0].lebesgue);
        let lo = mine.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
        let hi = mine.iter().map(|r| r.ratio).fold(0.0, f64::max);
        passed &= hi <= RATIO_BAND * lo;
    }
    Report { rows, passed }
}

#[derive(Debug, Serialize)]
pub struct CubatureRow {
    pub rule: &'static str,
    pub n: usize,
    pub space: String,
    pub nodes: usize,
    pub max_defect: f64,
    pub expect: &'static str,
    pub pass: bool,
}

fn cubature_rows(n: usize, scale: f64) -> Vec<CubatureRow> {
    let mut rows = Vec::new();
    let exact = |rule, space: String, nodes, max_defect: f64| CubatureRow {
        rule,
        n,
        space,
        nodes,
        max_defect,
        expect: "< 1e-10",
        pass: max_defect < EXACT_TOL,
    };

    let tri = triangle_cubature(n);
    let d = enumerate(IndexSet::Triangle, 2 * n - 1)
        .into_iter()
        .map(|k| {
            let want = if k == FreqIndex::ZERO { 1.0 } else { 0.0 };
            (tri.apply(|t| tc(k, t)) * scale - want).norm()
        })
        .fold(0.0, f64::max);
    rows.push(exact("triangle", format!("TC_{}", 2 * n - 1), tri.len(), d));
    let sharp = enumerate(IndexSet::Triangle, 2 * n)
        .into_iter()
        .filter(|k| -k.k3() == 2 * n as i64)
        .map(|k| tri.apply(|t| tc(k, t)).norm())
        .fold(0.0, f64::max);
    rows.push(CubatureRow {
        rule: "triangle",
        n,
        space: format!("TC_{} top layer", 2 * n),
        nodes: tri.len(),
        max_defect: sharp,
        expect: "> 1e-6",
        pass: sharp > SHARPNESS_TOL,
    });

    // Gauss rule against the weighted integral of TC_k TS_{1,1,-2}^2, whose
    // degree is 2n+3; the triangle rule of order max(2n, n+3) is exact there.
    let gauss = gauss_cubature_deltoid(n);
    let oracle = triangle_cubature((2 * n).max(n + 3));
    let ts2 = |t: HPoint| ts(FreqIndex::new(1, 1), t).norm_sqr();
    let d = enumerate(IndexSet::Triangle, 2 * n - 1)
        .into_iter()
        .map(|k| (oracle.apply(|t| tc(k, t) * ts2(t)) - gauss.apply(|t| tc(k, t)) * scale).norm())
        .fold(0.0, f64::max);
    rows.push(exact("gauss-deltoid", format!("TC_{} x TS_112^2", 2 * n - 1), gauss.len(), d));

    let lob = lobatto_cubature_deltoid(n);
    let dim = (2 * n) * (2 * n + 1) / 2;
    let d = (0..dim)
        .map(|a| {
            let v = lob.apply(|t| {
                let p = z_of(t);
                Complex64::new(real_basis_upto(ChebKind::First, 2 * n - 1, p.x(), p.y())[a], 0.0)
            }) * scale;
            let want = if a == 0 { 1.0 } else { 0.0 };
            (v - want).norm()
        })
        .fold(0.0, f64::max);
    rows.push(exact("lobatto-deltoid", format!("Pi_{}", 2 * n - 1), lob.len(), d));
    rows
}

pub fn cubature(cfg: &RunConfig) -> Report<CubatureRow> {
    let scale = if cfg.inject_weight_error { WRONG_WEIGHT } else { 1.0 };
    let rows: Vec<_> = par_map(&cfg.n, |&n| cubature_rows(n, scale)).into_iter().flatten().collect();
    let passed = rows.iter().all(|r| r.pass);
    Report { rows, passed }
}

#[derive(Debug, Serialize)]
pub struct InterpRow {
    pub function: String,
    pub operator: &'static str,
    pub n: usize,
    pub grid: usize,
    pub max_error: f64,
}

/// Smallest order at which the `tc4` builtin lies in both triangle spans.
pub const TC4_REPRODUCED_FROM: usize = 5;

fn builtin(f: Function, odd: bool, t: HPoint) -> Complex64 {
    let k = FreqIndex::new(3, 1);
    let x = z_of(t).x();
    let even = match f {
        Function::Smooth => Complex64::new(x.exp(), 0.0),
        Function::Kink => Complex64::new(x.abs(), 0.0),
        Function::Tc4 => return if odd { ts(k, t) } else { tc(k, t) },
    };
    if odd {
        even * ts(FreqIndex::new(1, 1), t)
    } else {
        even
    }
}

pub fn interp(cfg: &RunConfig) -> Report<InterpRow> {
    let jobs: Vec<(&'static str, usize)> = cfg
        .n
        .iter()
        .flat_map(|n| LEBESGUE_OPERATORS.iter().map(move |op| (*op, *n)))
        .collect();
    let grid = triangle_grid(cfg.grid);
    let func = cfg.function;
    let rows: Vec<InterpRow> = par_map(&jobs, |&(operator, n)| {
        let odd = operator == "tri-sine";
        let f = |t: HPoint| builtin(func, odd, t);
        let eval: Box<dyn Fn(HPoint) -> Complex64> = match operator {
            "hex-star" => {
                let s = NodeSamples::from_fn(IndexSet::HexStar, n, f);
                Box::new(move |t| interp_hex(&s, HexBasis::Star, t).expect("star samples"))
            }
            "tri-sine" => {
                let s = NodeSamples::from_fn(IndexSet::TriangleInterior, n, f);
                Box::new(move |t| interp_triangle_sine(&s, t).expect("interior samples"))
            }
            _ => {
                let s = NodeSamples::from_fn(IndexSet::Triangle, n, f);
                Box::new(move |t| interp_triangle_cosine(&s, t).expect("triangle samples"))
            }
        };
        // On the hexagon boundary the star interpolant returns the sum over
        // congruent nodes, so that operator is measured on the open hexagon.
        let max_error = grid
            .iter()
            .filter(|t| operator != "hex-star" || t.coords().iter().all(|c| c.abs() < 1.0 - 1e-12))
            .map(|t| (eval(*t) - f(*t)).norm())
            .fold(0.0, f64::max);
        InterpRow {
            function: func.to_string(),
            operator,
            n,
            grid: cfg.grid,
            max_error,
        }
    });
    let passed = match func {
        // The star operator sums congruent boundary samples and is not a
        // projection, so only the triangle operators are held to reproduction.
        Function::Tc4 => rows
            .iter()
            .filter(|r| r.n >= TC4_REPRODUCED_FROM && r.operator != "hex-star")
            .all(|r| r.max_error < EXACT_TOL),
        Function::Smooth => LEBESGUE_OPERATORS.iter().all(|op| {
            let mine: Vec<&InterpRow> = rows.iter().filter(|r| r.operator == *op).collect();
            let first = mine.iter().min_by_key(|r| r.n).expect("nonempty n-list");
            let last = mine.iter().max_by_key(|r| r.n).expect("nonempty n-list");
            first.n == last.n || last.max_error < first.max_error
        }),
        Function::Kink => rows.iter().all(|r| r.max_error.is_finite()),
    };
    Report { rows, passed }
}
