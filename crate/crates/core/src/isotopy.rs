//! The standard nested-tube torus `T^k ⊂ R^{k+1}`, its deformation into
//! `T^{k-1} × ∂D²` inside `R^{k+2}`, and the circle isotopy `F₁`.
//!
//! With `N_{k+1} = tail` and `N_j = 1 + ½ sin α_j · N_{j+1}`, the standard torus
//! point is
//!
//! ```text
//! ( sin α₁·N₂, cos α₁·N₂, ½ cos α₂·N₃, …, 2^{1-k} cos α_k·N_{k+1} )
//! ```
//!
//! with `tail = 1`. The deformation replaces `sin α_k` by `t·sin α_k` wherever
//! it enters the nest and appends `2^{1-k}((1-t) sin α_k + t|sin α_k|)`.
//!
//! Everything here is plain `f64`; the checks are numeric probes, not proofs.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance for the algebraic endpoint identities.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
/// Bound on the sampled Lipschitz constant in `t` (sup norm).
pub const LIPSCHITZ_BOUND: f64 = 2.0;

/// A point of the torus parameter space together with a deformation time.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TorusChart {
    angles: Vec<f64>,
    t: f64,
}

impl TorusChart {
    /// Angles are reduced to `[0, 2π)`; `t` must lie in `[0, 1]`.
    pub fn new(angles: &[f64], t: f64) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::InvalidArgument(
                "torus dimension k must be at least 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidArgument(format!(
                "deformation time {t} is outside [0, 1]"
            )));
        }
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidArgument("angles must be finite".into()));
        }
        Ok(TorusChart {
            angles: angles.iter().map(|&a| normalize_angle(a)).collect(),
            t,
        })
    }

    pub fn k(&self) -> usize {
        self.angles.len()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn t(&self) -> f64 {
        self.t
    }
}

pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Distance on the circle between two angles.
pub fn circle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Largest circle distance over the coordinates of two angle tuples.
pub fn angle_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| circle_distance(x, y))
        .fold(0.0, f64::max)
}

/// The nested tube with innermost factor `tail`, as a recursion on `k`:
/// the first `k` coordinates are the `(k-1)`-tube with tail
/// `1 + ½ sin α_k · tail`, followed by `2^{1-k} cos α_k · tail`.
pub fn nested_tube_point(angles: &[f64], tail: f64) -> Vec<f64> {
    match angles {
        [] => panic!("nested tube needs at least one angle"),
        [a] => vec![a.sin() * tail, a.cos() * tail],
        [rest @ .., last] => {
            let k = angles.len() as i32;
            let mut p = nested_tube_point(rest, 1.0 + 0.5 * last.sin() * tail);
            p.push(last.cos() * tail / 2f64.powi(k - 1));
            p
        }
    }
}

/// A point of the standard torus `T^k ⊂ R^{k+1}`.
pub fn standard_torus_point(angles: &[f64]) -> Result<Vec<f64>> {
    if angles.is_empty() {
        return Err(Error::InvalidArgument(
            "torus dimension k must be at least 1".into(),
        ));
    }
    Ok(nested_tube_point(angles, 1.0))
}

/// A point of the deformation `T^k × [0,1] → R^{k+2}`.
///
/// At `t = 1` the first `k + 1` coordinates are the standard torus; at
/// `t = 0` the first `k` coordinates forget `α_k` and the last two trace a
/// round circle of radius `2^{1-k}`.
pub fn isotopy_point(angles: &[f64], t: f64) -> Result<Vec<f64>> {
    let chart = TorusChart::new(angles, t)?;
    Ok(isotopy_point_unchecked(chart.angles(), t))
}

fn isotopy_point_unchecked(angles: &[f64], t: f64) -> Vec<f64> {
    let k = angles.len();
    let last = angles[k - 1];
    let (s, c) = last.sin_cos();
    let scale = 1.0 / 2f64.powi(k as i32 - 1);
    let mut p = if k == 1 {
        vec![t * s, c]
    } else {
        let mut head = nested_tube_point(&angles[..k - 1], 1.0 + 0.5 * t * s);
        head.push(c * scale);
        head
    };
    p.push(scale * ((1.0 - t) * s + t * s.abs()));
    p
}

/// `F₁(cos α, sin α, t) = (t sin α, cos α, (1−t) sin α + t|sin α|)`.
pub fn f1_point(alpha: f64, t: f64) -> [f64; 3] {
    let (s, c) = alpha.sin_cos();
    [t * s, c, (1.0 - t) * s + t * s.abs()]
}

/// Which map an injectivity probe samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "map", rename_all = "snake_case")]
pub enum ProbeMap {
    /// `α ↦ F₁(α, t)`.
    F1 { t: f64 },
    /// `α ↦ standard torus point`.
    StandardTorus { k: usize },
    /// `α ↦ deformation at time t`.
    Isotopy { k: usize, t: f64 },
}

impl ProbeMap {
    pub fn dimension(&self) -> usize {
        match *self {
            ProbeMap::F1 { .. } => 1,
            ProbeMap::StandardTorus { k } | ProbeMap::Isotopy { k, .. } => k,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            ProbeMap::F1 { t } | ProbeMap::Isotopy { t, .. } if !(0.0..=1.0).contains(&t) => Err(
                Error::InvalidArgument(format!("deformation time {t} is outside [0, 1]")),
            ),
            _ if self.dimension() == 0 => Err(Error::InvalidArgument(
                "torus dimension k must be at least 1".into(),
            )),
            _ => Ok(()),
        }
    }

    fn eval(&self, angles: &[f64]) -> Vec<f64> {
        match *self {
            ProbeMap::F1 { t } => f1_point(angles[0], t).to_vec(),
            ProbeMap::StandardTorus { .. } => nested_tube_point(angles, 1.0),
            ProbeMap::Isotopy { t, .. } => isotopy_point_unchecked(angles, t),
        }
    }
}

/// Thresholds for the injectivity probe: a violation is a pair of charts more
/// than `delta_in` apart whose images are closer than `delta_out`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbeThresholds {
    pub delta_in: f64,
    pub delta_out: f64,
}

impl Default for ProbeThresholds {
    fn default() -> Self {
        ProbeThresholds {
            delta_in: 1e-2,
            delta_out: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    #[serde(flatten)]
    pub map: ProbeMap,
    pub samples: usize,
    pub seed: u64,
    pub delta_in: f64,
    pub delta_out: f64,
    pub violations: usize,
    /// Smallest image distance over sampled pairs more than `delta_in` apart.
    pub min_separation: f64,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// `count` seeded angle tuples of length `k`, uniform on `[0, 2π)^k`.
pub fn sample_angles(k: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..k).map(|_| rng.gen_range(0.0..TAU)).collect())
        .collect()
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn injectivity_probe(map: ProbeMap, samples: usize, seed: u64) -> Result<ProbeReport> {
    injectivity_probe_with(map, samples, seed, ProbeThresholds::default())
}

/// Samples `samples` charts and looks at every pair of them.
///
/// Pairs are found by sorting images on their projection to a fixed generic
/// direction and scanning windows, first with width `delta_out` (violations),
/// then with the width of a neighbour-based upper bound on the separation
/// (minimum). A projection never exceeds the distance, so both scans are
/// exact over the sample and independent of thread scheduling.
pub fn injectivity_probe_with(
    map: ProbeMap,
    samples: usize,
    seed: u64,
    th: ProbeThresholds,
) -> Result<ProbeReport> {
    map.validate()?;
    if samples < 2 {
        return Err(Error::InvalidArgument(
            "an injectivity probe needs at least 2 samples".into(),
        ));
    }
    let charts = sample_angles(map.dimension(), samples, seed);
    let images: Vec<Vec<f64>> = charts.iter().map(|a| map.eval(a)).collect();
    let (violations, min_separation) = scan_pairs(&charts, &images, th);

    Ok(ProbeReport {
        map,
        samples,
        seed,
        delta_in: th.delta_in,
        delta_out: th.delta_out,
        violations,
        min_separation,
    })
}

/// Counts violations and finds the minimum far-pair separation over all
/// pairs of `(chart, image)` samples.
fn scan_pairs(charts: &[Vec<f64>], images: &[Vec<f64>], th: ProbeThresholds) -> (usize, f64) {
    let dim = images.first().map_or(0, Vec::len);
    // Coordinates can be constant (F1 at t = 0), so project instead of
    // sorting on one of them.
    let raw: Vec<f64> = (0..dim)
        .map(|i| 1.0 + (i as f64 * 0.754_877_666).fract())
        .collect();
    let norm = raw.iter().map(|w| w * w).sum::<f64>().sqrt();
    let dir: Vec<f64> = raw.iter().map(|w| w / norm).collect();
    let project = |p: &[f64]| p.iter().zip(&dir).map(|(x, w)| x * w).sum::<f64>();

    let mut sorted: Vec<(f64, &[f64], &[f64])> = images
        .iter()
        .zip(charts)
        .map(|(p, a)| (project(p), p.as_slice(), a.as_slice()))
        .collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let pts = &sorted;

    let far = |i: usize, j: usize| angle_distance(pts[i].2, pts[j].2) > th.delta_in;
    let dist = |i: usize, j: usize| euclidean(pts[i].1, pts[j].1);
    let window = move |i: usize, width: f64| {
        let x = pts[i].0;
        (i + 1..pts.len()).take_while(move |&j| pts[j].0 - x < width)
    };

    let violations: usize = (0..pts.len())
        .into_par_iter()
        .map(|i| {
            window(i, th.delta_out)
                .filter(|&j| far(i, j) && dist(i, j) < th.delta_out)
                .count()
        })
        .sum();

    let upper = (0..pts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..pts.len().min(i + 33))
                .filter(move |&j| far(i, j))
                .map(move |j| dist(i, j))
        })
        .reduce(|| f64::INFINITY, f64::min);
    let min_separation = (0..pts.len())
        .into_par_iter()
        .map(|i| {
            window(i, upper.next_up())
                .filter(|&j| far(i, j))
                .map(|j| dist(i, j))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);
    (violations, min_separation)
}

/// Worst-case errors of the endpoint identities over seeded samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EndpointReport {
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    /// `t = 1`: largest deviation of the first `k + 1` coordinates from the
    /// standard torus, and of the last coordinate from `2^{1-k}|sin α_k|`.
    pub t1_max_error: f64,
    /// `t = 0`: largest deviation of the last two coordinates' norm from `2^{1-k}`.
    pub t0_radius_error: f64,
    /// `t = 0`: largest change of the first `k` coordinates when `α_k` moves.
    pub t0_independence_error: f64,
    /// Largest sampled `‖F(α, t) − F(α, s)‖_∞ / |t − s|` on a uniform grid in `t`.
    pub lipschitz: f64,
}

impl EndpointReport {
    pub fn passed(&self) -> bool {
        self.t1_max_error <= IDENTITY_TOLERANCE
            && self.t0_radius_error <= IDENTITY_TOLERANCE
            && self.t0_independence_error <= IDENTITY_TOLERANCE
            && self.lipschitz <= LIPSCHITZ_BOUND
    }
}

fn sup_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn check_endpoints(k: usize, samples: usize, seed: u64) -> Result<EndpointReport> {
    if k < 1 {
        return Err(Error::InvalidArgument(
            "torus dimension k must be at least 1".into(),
        ));
    }
    const T_STEPS: usize = 64;
    let charts = sample_angles(k, samples, seed);
    let perturbed = sample_angles(1, samples, seed ^ 0x9e37_79b9_7f4a_7c15);
    let radius = 1.0 / 2f64.powi(k as i32 - 1);

    let per_sample: Vec<[f64; 4]> = charts
        .par_iter()
        .zip(&perturbed)
        .map(|(a, p)| {
            let at1 = isotopy_point_unchecked(a, 1.0);
            let torus = nested_tube_point(a, 1.0);
            let last = a[k - 1].sin().abs() * radius;
            let t1 = sup_distance(&at1[..=k], &torus).max((at1[k + 1] - last).abs());

            let at0 = isotopy_point_unchecked(a, 0.0);
            let r0 = (at0[k].hypot(at0[k + 1]) - radius).abs();
            let mut moved = a.clone();
            moved[k - 1] = p[0];
            let indep = sup_distance(&at0[..k], &isotopy_point_unchecked(&moved, 0.0)[..k]);

            let h = 1.0 / T_STEPS as f64;
            let lip = (0..T_STEPS)
                .map(|i| {
                    let (s, t) = (i as f64 * h, (i + 1) as f64 * h);
                    sup_distance(
                        &isotopy_point_unchecked(a, s),
                        &isotopy_point_unchecked(a, t),
                    ) / h
                })
                .fold(0.0, f64::max);
            [t1, r0, indep, lip]
        })
        .collect();
    let worst = |i: usize| per_sample.iter().map(|e| e[i]).fold(0.0, f64::max);
    Ok(EndpointReport {
        k,
        samples,
        seed,
        t1_max_error: worst(0),
        t0_radius_error: worst(1),
        t0_independence_error: worst(2),
        lipschitz: worst(3),
    })
}

/// Everything the `isotopy-check` command runs for one `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsotopyCheck {
    pub k: usize,
    pub endpoints: EndpointReport,
    /// `F₁` agrees with the deformation for `k = 1` (largest deviation).
    pub f1_agreement: Option<f64>,
    pub probes: Vec<ProbeReport>,
    pub passed: bool,
}

/// Endpoint identities plus injectivity probes of the standard torus and of
/// the deformation at `t = 0, ½, 1`; for `k = 1` also `F₁` at `t = 0, 1`.
pub fn isotopy_check(k: usize, samples: usize, seed: u64) -> Result<IsotopyCheck> {
    let endpoints = check_endpoints(k, samples, seed)?;
    let mut maps = vec![ProbeMap::StandardTorus { k }];
    maps.extend([0.0, 0.5, 1.0].map(|t| ProbeMap::Isotopy { k, t }));
    let mut f1_agreement = None;
    if k == 1 {
        maps.extend([0.0, 1.0].map(|t| ProbeMap::F1 { t }));
        let err = sample_angles(1, samples, seed)
            .iter()
            .flat_map(|a| [0.0, 0.25, 0.5, 0.75, 1.0].map(|t| (a[0], t)))
            .map(|(a, t)| sup_distance(&f1_point(a, t), &isotopy_point_unchecked(&[a], t)))
            .fold(0.0, f64::max);
        f1_agreement = Some(err);
    }
    let probes = maps
        .into_iter()
        .map(|m| injectivity_probe(m, samples, seed))
        .collect::<Result<Vec<_>>>()?;
    let passed = endpoints.passed()
        && probes.iter().all(ProbeReport::passed)
        && f1_agreement.is_none_or(|e| e <= IDENTITY_TOLERANCE);
    Ok(IsotopyCheck {
        k,
        endpoints,
        f1_agreement,
        probes,
        passed,
    })
}
