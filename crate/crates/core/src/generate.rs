//! Seeded random instances: complexes (with collapse certificates when built
//! by reverse collapses), matroids of every kind, point sets and families of
//! intervals, boxes and hulls.
//!
//! All generators take a caller-supplied RNG; the crate uses
//! `ChaCha8Rng::seed_from_u64` throughout so instances are reproducible
//! across platforms.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::collapse::{CollapseMode, CollapseSequence, CollapseStep};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact::rank_rational;
use crate::geometry::{ColoredFamily, ConvexBody, Point};
use crate::homology::{is_d_leray_induced, Field};
use crate::matroid::Matroid;
use crate::rational::{int, Rational};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R, range: i64, max_den: i64) -> Rational {
    Rational::new(
        rng.gen_range(-range..=range).into(),
        rng.gen_range(1..=max_den).into(),
    )
}

pub fn random_points<R: Rng>(rng: &mut R, dim: usize, count: usize) -> Vec<Point> {
    (0..count)
        .map(|_| (0..dim).map(|_| random_rational(rng, 100, 8)).collect())
        .collect()
}

/// Every `min(count, d+1)` of the points are affinely independent.
pub fn in_general_position(points: &[Point]) -> bool {
    let Some(d) = points.first().map(Vec::len) else {
        return true;
    };
    let k = points.len().min(d + 1);
    Simplex::range(points.len())
        .subsets_of_size(k)
        .into_iter()
        .all(|s| {
            let idx = s.to_vec();
            let base = &points[idx[0]];
            let rows: Vec<Vec<Rational>> = idx[1..]
                .iter()
                .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            rows.is_empty() || rank_rational(&rows) == k - 1
        })
}

/// Random points, redrawn until they are in general position.
pub fn random_generic_points<R: Rng>(rng: &mut R, dim: usize, count: usize) -> Vec<Point> {
    loop {
        let pts = random_points(rng, dim, count);
        if in_general_position(&pts) {
            return pts;
        }
    }
}

/// A complex built from random facets on `n` vertices.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    n: usize,
    max_facets: usize,
    max_facet_size: usize,
) -> SimplicialComplex {
    let count = rng.gen_range(1..=max_facets.max(1));
    let facets: Vec<Simplex> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_facet_size.clamp(1, n.max(1)));
            random_subset(rng, n, size)
        })
        .collect();
    SimplicialComplex::new(Simplex::range(n), facets).expect("vertices in range")
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> Simplex {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.into_iter().take(size.min(n)).collect()
}

#[derive(Clone, Debug)]
pub struct CollapsibleInstance {
    pub complex: SimplicialComplex,
    pub certificate: CollapseSequence,
}

/// Builds a d-collapsible complex on `n` vertices by `expansions` reverse
/// elementary collapses from the void complex. Each expansion adds the
/// interval `[σ, τ]` with `|σ| ≤ d`, `σ` not yet a face and every `τ ∖ {v}`
/// (`v ∈ σ`) already a face, so `σ` is free in the result. The certificate
/// undoes the expansions in reverse order.
pub fn collapsible_complex<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    expansions: usize,
    max_face: usize,
) -> Result<CollapsibleInstance> {
    if n == 0 || n > crate::complex::MAX_VERTICES || d == 0 {
        return Err(Error::BadParams(format!("n = {n}, d = {d}")));
    }
    let ground = Simplex::range(n);
    let mut x = SimplicialComplex::void(ground);
    let mut steps = Vec::new();
    for _ in 0..expansions.max(1) {
        let mut done = false;
        for _ in 0..64 {
            let size = rng.gen_range(1..=max_face.clamp(1, n));
            let tau = random_subset(rng, n, size);
            if x.contains(tau) {
                continue;
            }
            let options: Vec<Simplex> = tau
                .subsets()
                .filter(|s| s.len() <= d && !x.contains(*s))
                .filter(|s| s.vertices().all(|v| x.contains(tau.without(v))))
                .collect();
            if let Some(&sigma) = options.choose(rng) {
                let mut gens = x.facets().to_vec();
                gens.push(tau);
                x = SimplicialComplex::new(ground, gens)?;
                steps.push(CollapseStep {
                    free_face: sigma,
                    max_face: tau,
                });
                done = true;
                break;
            }
        }
        if !done {
            break;
        }
    }
    steps.reverse();
    Ok(CollapsibleInstance {
        complex: x,
        certificate: CollapseSequence {
            d,
            mode: CollapseMode::Standard,
            steps,
        },
    })
}

/// Random complexes on `n` vertices, kept only when d-Leray.
pub fn leray_complex<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    attempts: usize,
) -> Option<SimplicialComplex> {
    (0..attempts).find_map(|_| {
        let x = random_complex(rng, n, 5, d + 2);
        is_d_leray_induced(&x, d, Field::Rationals, 16)
            .ok()
            .filter(|rep| rep.holds)
            .map(|_| x)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatroidKindName {
    Uniform,
    Partition,
    Linear,
    Explicit,
}

impl MatroidKindName {
    pub const ALL: [MatroidKindName; 4] = [
        MatroidKindName::Uniform,
        MatroidKindName::Partition,
        MatroidKindName::Linear,
        MatroidKindName::Explicit,
    ];
}

pub fn random_partition_blocks<R: Rng>(rng: &mut R, n: usize, blocks: usize) -> Vec<Simplex> {
    let blocks = blocks.clamp(1, n.max(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut out = vec![Simplex::EMPTY; blocks];
    for (i, v) in order.into_iter().enumerate() {
        let b = if i < blocks {
            i
        } else {
            rng.gen_range(0..blocks)
        };
        out[b] = out[b].with(v);
    }
    out
}

pub fn random_matroid<R: Rng>(rng: &mut R, n: usize, kind: MatroidKindName) -> Result<Matroid> {
    match kind {
        MatroidKindName::Uniform => Matroid::uniform(n, rng.gen_range(0..=n)),
        MatroidKindName::Partition => {
            let blocks = rng.gen_range(1..=n.max(1));
            Matroid::partition(random_partition_blocks(rng, n, blocks))
        }
        MatroidKindName::Linear => {
            let dim = rng.gen_range(1..=3);
            let vectors = (0..n)
                .map(|_| (0..dim).map(|_| int(rng.gen_range(-2..=2))).collect())
                .collect();
            Matroid::linear(vectors)
        }
        MatroidKindName::Explicit => {
            let base = random_matroid(rng, n, MatroidKindName::Linear)?;
            Matroid::explicit(n, base.independent_sets())
        }
    }
}

/// Random closed intervals with integer endpoints in `[0, span]`.
pub fn random_intervals<R: Rng>(rng: &mut R, count: usize, span: i64) -> Vec<ConvexBody> {
    (0..count)
        .map(|_| {
            let a = rng.gen_range(0..=span);
            let b = rng.gen_range(0..=span);
            ConvexBody::Hull(vec![vec![int(a.min(b))], vec![int(a.max(b))]])
        })
        .collect()
}

/// Random axis-parallel boxes with integer corners in `[0, span]^dim`.
pub fn random_boxes<R: Rng>(rng: &mut R, count: usize, dim: usize, span: i64) -> Vec<ConvexBody> {
    (0..count)
        .map(|_| {
            let (lo, hi): (Vec<_>, Vec<_>) = (0..dim)
                .map(|_| {
                    let a = rng.gen_range(0..=span);
                    let b = rng.gen_range(0..=span);
                    (int(a.min(b)), int(a.max(b)))
                })
                .unzip();
            ConvexBody::AxisBox { lo, hi }
        })
        .collect()
}

/// Hulls of 1 to `max_points` random points each.
pub fn random_hulls<R: Rng>(
    rng: &mut R,
    count: usize,
    dim: usize,
    max_points: usize,
) -> Vec<ConvexBody> {
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=max_points.max(1));
            ConvexBody::Hull(
                (0..k)
                    .map(|_| (0..dim).map(|_| int(rng.gen_range(-6..=6))).collect())
                    .collect(),
            )
        })
        .collect()
}

/// Colors `1..=r` with every class nonempty.
pub fn random_colors<R: Rng>(rng: &mut R, count: usize, r: usize) -> Vec<usize> {
    let mut colors: Vec<usize> = (0..count)
        .map(|i| if i < r { i + 1 } else { rng.gen_range(1..=r) })
        .collect();
    colors.shuffle(rng);
    colors
}

pub fn random_family<R: Rng>(
    rng: &mut R,
    bodies: Vec<ConvexBody>,
    dim: usize,
    r: usize,
) -> Result<ColoredFamily> {
    let colors = random_colors(rng, bodies.len(), r);
    ColoredFamily::new(dim, bodies, colors)
}
