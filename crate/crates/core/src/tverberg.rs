//! Tverberg partitions: the tensor lift of colored parts, colorful Carathéodory search,
//! partitions with a Tverberg center, tolerant partitions and their
//! exhaustive verifiers.
//!
//! Point sets are index-addressed; labels are `1..=r`, one per point.

use itertools::Itertools;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::Simplex;
use crate::error::{Error, Result};
use crate::generate::random_generic_points;
use crate::geometry::{bodies_intersect, in_hull, points_wire, ConvexBody, Point};
use crate::rational::{int, one, zero, Rational};
use crate::theorems::validate_parameters;

/// Vertex `j` (0-based) of the simplex used by the lift: `e_j` for
/// `j < r−1` and `−(1, .., 1)` for `j = r−1`.
pub fn simplex_vertex(r: usize, j: usize) -> Vec<Rational> {
    (0..r - 1)
        .map(|i| {
            if j == r - 1 {
                -one()
            } else if i == j {
                one()
            } else {
                zero()
            }
        })
        .collect()
}

/// `(x; 1) ⊗ v_j` in `ℝ^{(r−1)(d+1)}`.
pub fn lift_point(x: &[Rational], r: usize, j: usize) -> Point {
    let v = simplex_vertex(r, j);
    x.iter()
        .chain(std::iter::once(&one()))
        .flat_map(|a| v.iter().map(move |b| a * b))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftedPoint {
    pub part: usize,
    pub index: usize,
    pub coords: Point,
}

/// Lifts `r` point sets so that their hulls share a point iff the origin is
/// in the hull of the lifted union.
pub fn lift_parts(parts: &[Vec<Point>], r: usize) -> Result<Vec<LiftedPoint>> {
    if parts.len() != r || r < 2 {
        return Err(Error::BadParams(format!(
            "{} parts for r = {r}",
            parts.len()
        )));
    }
    let d = parts
        .iter()
        .flatten()
        .next()
        .map(Vec::len)
        .ok_or_else(|| Error::Malformed("no points to lift".into()))?;
    let mut out = Vec::new();
    for (j, part) in parts.iter().enumerate() {
        for (index, x) in part.iter().enumerate() {
            if x.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: x.len(),
                });
            }
            out.push(LiftedPoint {
                part: j,
                index,
                coords: lift_point(x, r, j),
            });
        }
    }
    Ok(out)
}

/// Common point of the hulls of the given parts; `None` if any part is
/// empty or the hulls miss.
pub fn hulls_intersect(parts: &[Vec<Point>]) -> Result<Option<Point>> {
    if parts.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let d = parts[0][0].len();
    let bodies: Vec<ConvexBody> = parts.iter().cloned().map(ConvexBody::Hull).collect();
    let refs: Vec<&ConvexBody> = bodies.iter().collect();
    bodies_intersect(d, &refs)
}

fn dim_of(points: &[Point]) -> Result<usize> {
    let d = points
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Malformed("empty point set".into()))?;
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.len(),
        });
    }
    if points.len() > crate::complex::MAX_VERTICES {
        return Err(Error::InvalidVertex(points.len()));
    }
    Ok(d)
}

fn check_labels(n: usize, labels: &[usize], r: usize) -> Result<()> {
    if labels.len() != n {
        return Err(Error::Malformed(format!(
            "{} labels for {n} points",
            labels.len()
        )));
    }
    if let Some(l) = labels.iter().find(|&&l| l == 0 || l > r) {
        return Err(Error::Malformed(format!("label {l} outside 1..={r}")));
    }
    Ok(())
}

/// The parts of `subset` under `labels`, as point lists.
fn parts_of(points: &[Point], labels: &[usize], r: usize, subset: Simplex) -> Vec<Vec<Point>> {
    let mut parts = vec![Vec::new(); r];
    for i in subset.vertices() {
        parts[labels[i] - 1].push(points[i].clone());
    }
    parts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Precondition {
    Held,
    Failed { classes: Vec<usize> },
    Unchecked,
}

/// `S` and `T` as point indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transversal {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaratheodoryOutcome {
    pub transversal: Option<Transversal>,
    pub precondition: Precondition,
    pub candidates_tried: u64,
}

/// Searches for `S` (size `d`) and `T` (size `m`) using at least `k` colors
/// with `0 ∈ conv(S ∪ {v})` for every `v ∈ T`.
///
/// `S` runs over `d`-subsets in lexicographic order; for each, `T` takes one
/// admissible point of each unused color before filling with the remaining
/// admissible points, which decides existence for that `S` exactly.
pub fn colorful_caratheodory(
    points: &[Point],
    colors: &[usize],
    m: usize,
    k: usize,
    check_precondition: bool,
    max_candidates: u64,
) -> Result<CaratheodoryOutcome> {
    let d = dim_of(points)?;
    let n = points.len();
    if colors.len() != n || colors.contains(&0) {
        return Err(Error::Malformed("one color in 1..=r per point".into()));
    }
    let r = colors.iter().copied().max().unwrap_or(0);
    validate_parameters(d, r, m, k, n)?;
    let class = |c: usize| -> Vec<usize> { (0..n).filter(|&i| colors[i] == c).collect() };
    let origin = vec![zero(); d];

    let precondition = if check_precondition {
        let mut failed = None;
        for group in (1..=r).combinations(r + 1 - k) {
            let pts: Vec<Point> = group
                .iter()
                .flat_map(|&c| class(c))
                .map(|i| points[i].clone())
                .collect();
            if !in_hull(&origin, &pts)? {
                failed = Some(group);
                break;
            }
        }
        match failed {
            Some(classes) => Precondition::Failed { classes },
            None => Precondition::Held,
        }
    } else {
        Precondition::Unchecked
    };

    let mut tried = 0u64;
    let mut found = None;
    for s in Simplex::range(n).subsets_of_size(d) {
        let s_colors: Vec<usize> = s.vertices().map(|i| colors[i]).sorted().dedup().collect();
        if s_colors.len() + m < k {
            continue;
        }
        tried += 1;
        if tried > max_candidates {
            return Err(Error::SearchBudgetExceeded(format!(
                "colorful transversal search beyond {max_candidates} candidate bases"
            )));
        }
        let base: Vec<Point> = s.vertices().map(|i| points[i].clone()).collect();
        let admissible = |v: usize| -> Result<bool> {
            let mut pts = base.clone();
            pts.push(points[v].clone());
            in_hull(&origin, &pts)
        };
        let needed = k - s_colors.len().min(k);
        let fresh: Vec<usize> = (1..=r).filter(|c| !s_colors.contains(c)).collect();
        let mut t = Vec::new();
        for (idx, &c) in fresh.iter().enumerate() {
            if t.len() + (fresh.len() - idx) < needed || t.len() == m {
                break;
            }
            for v in class(c) {
                if admissible(v)? {
                    t.push(v);
                    break;
                }
            }
        }
        if t.len() < needed {
            continue;
        }
        if t.len() < m {
            for v in 0..n {
                if t.len() == m {
                    break;
                }
                if !s.contains(v) && !t.contains(&v) && admissible(v)? {
                    t.push(v);
                }
            }
        }
        if t.len() == m {
            t.sort_unstable();
            found = Some(Transversal { s: s.to_vec(), t });
            break;
        }
    }
    if found.is_none() && precondition == Precondition::Held {
        return Err(Error::HypothesisViolated(
            "precondition holds but no colorful transversal was found".into(),
        ));
    }
    Ok(CaratheodoryOutcome {
        transversal: found,
        precondition,
        candidates_tried: tried,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TverbergBudget {
    /// Cap on candidate bases in the lifted transversal search.
    pub max_candidates: u64,
    /// Cap on partition × center pairs in direct enumeration.
    pub max_brute_force: u64,
    /// Cap on removal sets checked when verifying tolerance.
    pub max_removals: u64,
}

impl Default for TverbergBudget {
    fn default() -> Self {
        Self {
            max_candidates: 200_000,
            max_brute_force: 2_000_000,
            max_removals: 100_000,
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Stirling number of the second kind: partitions of `n` points into `r`
/// nonempty parts.
pub fn stirling2(n: usize, r: usize) -> u128 {
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=r).rev() {
            row[j] = row[j].saturating_mul(j as u128).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[r]
}

/// Calls `f` on every partition of `0..n` into exactly `r` nonempty parts,
/// as 1-based labels in restricted-growth form, until `f` returns true.
pub fn for_each_partition(n: usize, r: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn go(
        labels: &mut Vec<usize>,
        n: usize,
        r: usize,
        used: usize,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let i = labels.len();
        if i == n {
            return used == r && f(labels);
        }
        if r - used > n - i {
            return false;
        }
        for l in 1..=(used + 1).min(r) {
            labels.push(l);
            let stop = go(labels, n, r, used.max(l), f);
            labels.pop();
            if stop {
                return true;
            }
        }
        false
    }
    go(&mut Vec::with_capacity(n), n, r, 0, &mut f)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CenterWitness {
    pub point: usize,
    #[serde(with = "crate::geometry::point_wire")]
    pub at: Point,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CenterCheck {
    pub valid: bool,
    pub failed_at: Option<usize>,
    pub witnesses: Vec<CenterWitness>,
}

/// For every `p ∉ B`, the hulls of the parts of `B ∪ {p}` must share a
/// point. An empty part counts as failure.
pub fn verify_center(
    points: &[Point],
    labels: &[usize],
    r: usize,
    center: Simplex,
) -> Result<CenterCheck> {
    dim_of(points)?;
    check_labels(points.len(), labels, r)?;
    let all = Simplex::range(points.len());
    if !center.is_subset(all) {
        return Err(Error::NotASubset(center));
    }
    let mut witnesses = Vec::new();
    for p in all.difference(center).vertices() {
        match hulls_intersect(&parts_of(points, labels, r, center.with(p)))? {
            Some(at) => witnesses.push(CenterWitness { point: p, at }),
            None => {
                return Ok(CenterCheck {
                    valid: false,
                    failed_at: Some(p),
                    witnesses,
                })
            }
        }
    }
    Ok(CenterCheck {
        valid: true,
        failed_at: None,
        witnesses,
    })
}

/// First center of the given size (lexicographic) for a fixed partition.
pub fn find_center_for_partition(
    points: &[Point],
    labels: &[usize],
    r: usize,
    size: usize,
) -> Result<Option<Simplex>> {
    for b in Simplex::range(points.len()).subsets_of_size(size) {
        if verify_center(points, labels, r, b)?.valid {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterMethod {
    Lift,
    Enumeration,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TverbergCertificate {
    pub r: usize,
    pub labels: Vec<usize>,
    pub center: Simplex,
    pub witnesses: Vec<CenterWitness>,
    pub method: CenterMethod,
}

/// Searches partitions × centers of size `(r−1)(d+1)` directly.
pub fn center_by_enumeration(
    points: &[Point],
    r: usize,
    max_pairs: u64,
) -> Result<Option<(Vec<usize>, Simplex)>> {
    let d = dim_of(points)?;
    let n = (r - 1) * (d + 1);
    let pairs = stirling2(points.len(), r).saturating_mul(binomial(points.len(), n));
    if pairs > max_pairs as u128 {
        return Err(Error::SearchBudgetExceeded(format!(
            "{pairs} partition/center pairs (cap {max_pairs})"
        )));
    }
    let mut found = None;
    let mut failure = None;
    for_each_partition(points.len(), r, |labels| {
        match find_center_for_partition(points, labels, r, n) {
            Ok(Some(b)) => {
                found = Some((labels.to_vec(), b));
                true
            }
            Ok(None) => false,
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Partition into `r` parts with a Tverberg center of size `(r−1)(d+1)`.
///
/// Each point `x_i` gets `r` copies `(x_i; 1) ⊗ v_j` colored `i`. A colorful
/// transversal `S ∪ T` of the copies in dimension `n = (r−1)(d+1)` assigns
/// every point the part of its chosen copy, and the points colored by `S`
/// form the center.
pub fn tverberg_with_center(
    points: &[Point],
    r: usize,
    budget: TverbergBudget,
) -> Result<TverbergCertificate> {
    let d = dim_of(points)?;
    if r < 2 {
        return Err(Error::BadParams("r ≥ 2".into()));
    }
    let n = (r - 1) * (d + 1);
    let count = points.len();
    if count <= n {
        return Err(Error::InputTooSmall(format!(
            "|A| = {count} ≤ (r−1)(d+1) = {n}"
        )));
    }
    let lifted_count = binomial(count, n).saturating_mul((r as u128).pow(n as u32));
    let (labels, center, method) =
        if lifted_count <= budget.max_candidates as u128 && count * r <= 64 {
            let (labels, center) = center_by_lift(points, r, n, budget.max_candidates)?;
            (labels, center, CenterMethod::Lift)
        } else {
            let (labels, center) = center_by_enumeration(points, r, budget.max_brute_force)?
                .ok_or_else(|| Error::HypothesisViolated("no partition admits a center".into()))?;
            (labels, center, CenterMethod::Enumeration)
        };
    let check = verify_center(points, &labels, r, center)?;
    if !check.valid {
        return Err(Error::HypothesisViolated(format!(
            "constructed center {center} fails at point {:?}",
            check.failed_at
        )));
    }
    Ok(TverbergCertificate {
        r,
        labels,
        center,
        witnesses: check.witnesses,
        method,
    })
}

fn center_by_lift(
    points: &[Point],
    r: usize,
    n: usize,
    max_candidates: u64,
) -> Result<(Vec<usize>, Simplex)> {
    let count = points.len();
    let mut lifted = Vec::with_capacity(count * r);
    let mut colors = Vec::with_capacity(count * r);
    for (i, x) in points.iter().enumerate() {
        for j in 0..r {
            lifted.push(lift_point(x, r, j));
            colors.push(i + 1);
        }
    }
    let origin = vec![zero(); n];
    for i in 0..count {
        if !in_hull(&origin, &lifted[i * r..(i + 1) * r])? {
            return Err(Error::HypothesisViolated(format!(
                "copies of point {i} miss the origin"
            )));
        }
    }
    let m = count - n;
    let out = colorful_caratheodory(&lifted, &colors, m, n + m, false, max_candidates)?;
    let tr = out.transversal.ok_or_else(|| {
        Error::HypothesisViolated("no colorful transversal of the lifted copies".into())
    })?;
    let mut labels = vec![0; count];
    let mut center = Simplex::EMPTY;
    for &q in &tr.s {
        labels[q / r] = q % r + 1;
        center = center.with(q / r);
    }
    for &q in &tr.t {
        labels[q / r] = q % r + 1;
    }
    Ok((labels, center))
}

/// Some partition into `r` nonempty parts whose hulls share a point.
pub fn find_tverberg_partition(points: &[Point], r: usize) -> Result<Option<Vec<usize>>> {
    dim_of(points)?;
    let all = Simplex::range(points.len());
    let mut found = None;
    let mut failure = None;
    for_each_partition(points.len(), r, |labels| {
        match hulls_intersect(&parts_of(points, labels, r, all)) {
            Ok(Some(_)) => {
                found = Some(labels.to_vec());
                true
            }
            Ok(None) => false,
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceCheck {
    pub valid: bool,
    pub failing_removal: Option<Simplex>,
    pub removals_checked: u64,
}

/// Checks that the hulls of `A_i ∖ C` share a point for every `|C| ≤ t`.
pub fn verify_tolerance(
    points: &[Point],
    labels: &[usize],
    r: usize,
    t: usize,
    max_removals: u64,
) -> Result<ToleranceCheck> {
    dim_of(points)?;
    check_labels(points.len(), labels, r)?;
    let n = points.len();
    let total: u128 = (0..=t.min(n)).map(|s| binomial(n, s)).sum();
    if total > max_removals as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{total} removal sets (cap {max_removals})"
        )));
    }
    let all = Simplex::range(n);
    let mut checked = 0;
    for size in 0..=t.min(n) {
        for c in all.subsets_of_size(size) {
            checked += 1;
            if hulls_intersect(&parts_of(points, labels, r, all.difference(c)))?.is_none() {
                return Ok(ToleranceCheck {
                    valid: false,
                    failing_removal: Some(c),
                    removals_checked: checked,
                });
            }
        }
    }
    Ok(ToleranceCheck {
        valid: true,
        failing_removal: None,
        removals_checked: checked,
    })
}

/// One merge step of the tolerant construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeLevel {
    pub t: usize,
    pub size: usize,
    pub remainder: usize,
    /// `π` as 1-based images of parts `1..=r`.
    pub permutation: Vec<usize>,
    pub overlap: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceCertificate {
    pub r: usize,
    pub t: usize,
    pub labels: Vec<usize>,
    pub verified_up_to: usize,
    pub levels: Vec<MergeLevel>,
}

/// A partition into `r` parts that stays Tverberg after removing any `t`
/// points, built by recursing on the complement of a Tverberg center and
/// merging the two partitions along the permutation of largest overlap.
pub fn tolerant_tverberg(
    points: &[Point],
    r: usize,
    t: usize,
    budget: TverbergBudget,
) -> Result<ToleranceCertificate> {
    let d = dim_of(points)?;
    if r < 2 {
        return Err(Error::BadParams("r ≥ 2".into()));
    }
    let n = (r - 1) * (d + 1);
    if points.len() < (t + 1) * n + 1 {
        return Err(Error::InputTooSmall(format!(
            "|A| = {} < (t+1)(r−1)(d+1)+1 = {}",
            points.len(),
            (t + 1) * n + 1
        )));
    }
    let mut levels = Vec::new();
    let labels = tolerant_rec(points, r, t, budget, &mut levels)?;
    let check = verify_tolerance(points, &labels, r, t, budget.max_removals)?;
    if !check.valid {
        return Err(Error::HypothesisViolated(format!(
            "merged partition fails after removing {:?}",
            check.failing_removal
        )));
    }
    levels.reverse();
    Ok(ToleranceCertificate {
        r,
        t,
        labels,
        verified_up_to: t,
        levels,
    })
}

fn tolerant_rec(
    points: &[Point],
    r: usize,
    t: usize,
    budget: TverbergBudget,
    levels: &mut Vec<MergeLevel>,
) -> Result<Vec<usize>> {
    let cert = tverberg_with_center(points, r, budget)?;
    if t == 0 {
        return Ok(cert.labels);
    }
    let rest: Vec<usize> = Simplex::range(points.len())
        .difference(cert.center)
        .to_vec();
    let rest_points: Vec<Point> = rest.iter().map(|&i| points[i].clone()).collect();
    let inner = tolerant_rec(&rest_points, r, t - 1, budget, levels)?;

    let overlap = |pi: &[usize]| {
        rest.iter()
            .zip(&inner)
            .filter(|(&x, &b)| pi[cert.labels[x] - 1] == b)
            .count()
    };
    let (best, best_overlap) = (1..=r)
        .permutations(r)
        .map(|pi| {
            let o = overlap(&pi);
            (pi, o)
        })
        .fold(None::<(Vec<usize>, usize)>, |acc, (pi, o)| match acc {
            Some((_, bo)) if bo >= o => acc,
            _ => Some((pi, o)),
        })
        .expect("r ≥ 2 has permutations");
    if rest.len() > t * r && best_overlap < t + 1 {
        return Err(Error::HypothesisViolated(format!(
            "best permutation overlap {best_overlap} < t+1 = {} with |A∖B| = {}",
            t + 1,
            rest.len()
        )));
    }
    let mut labels = cert.labels.clone();
    for (&x, &b) in rest.iter().zip(&inner) {
        labels[x] = best.iter().position(|&p| p == b).expect("π is a bijection") + 1;
    }
    levels.push(MergeLevel {
        t,
        size: points.len(),
        remainder: rest.len(),
        permutation: best,
        overlap: best_overlap,
    });
    Ok(labels)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    #[serde(with = "points_wire")]
    pub points: Vec<Point>,
    pub no_partition: bool,
    pub partition: Option<Vec<usize>>,
}

/// Draws `(r−1)(d+1)` points in general position and checks exhaustively
/// that no partition into `r` nonempty parts is Tverberg.
pub fn sharpness_probe(d: usize, r: usize, seed: u64) -> Result<SharpnessReport> {
    if d == 0 || r < 2 {
        return Err(Error::BadParams("d ≥ 1 and r ≥ 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = random_generic_points(&mut rng, d, (r - 1) * (d + 1));
    let partition = find_tverberg_partition(&points, r)?;
    Ok(SharpnessReport {
        no_partition: partition.is_none(),
        partition,
        points,
    })
}

/// The nine points `v_1..v_9` near radius 2 at angles `40°·i`, placed
/// exactly on the circle of radius 2 via `s ↦ 2((1−s²)/(1+s²), 2s/(1+s²))`
/// with `s` a rational approximation of `tan(20°·i)`.
pub fn nine_point_configuration() -> Vec<Point> {
    const TAN_MILLI: [i64; 9] = [0, 364, 839, 1732, 5671, -5671, -1732, -839, -364];
    TAN_MILLI
        .iter()
        .map(|&s| {
            let s = Rational::new(s.into(), 1000.into());
            let den = one() + &s * &s;
            vec![int(2) * (one() - &s * &s) / &den, int(4) * &s / &den]
        })
        .collect()
}

/// Labels of the partition `{v1,v5,v6}, {v3,v7,v9}, {v2,v4,v8}`.
pub fn nine_point_partition_without_center() -> Vec<usize> {
    vec![1, 3, 2, 3, 1, 1, 2, 3, 2]
}

/// Labels of the partition `{v1,v3,v4,v7,v8}, {v2,v6}, {v5,v9}`.
pub fn nine_point_partition_with_center() -> Vec<usize> {
    vec![1, 2, 1, 1, 3, 2, 1, 1, 3]
}

/// The center `{v2,v4,v5,v6,v7,v9}` of the second partition.
pub fn nine_point_center() -> Simplex {
    Simplex::of(&[1, 3, 4, 5, 6, 8])
}

/// Point configuration wire form: `{"dim": d, "points": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointConfig {
    pub dim: usize,
    #[serde(with = "points_wire")]
    pub points: Vec<Point>,
}

impl PointConfig {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let dim = dim_of(&points)?;
        Ok(Self { dim, points })
    }

    pub fn validate(&self) -> Result<()> {
        if dim_of(&self.points)? != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: self.points[0].len(),
            });
        }
        Ok(())
    }
}

/// True when the vertices of the lift satisfy `Σ λ_j v_j = 0` only for
/// equal `λ_j` (checked on the given weights).
pub fn weights_cancel(r: usize, lambda: &[Rational]) -> bool {
    (0..r - 1).all(|i| {
        let s: Rational = (0..r).map(|j| &lambda[j] * &simplex_vertex(r, j)[i]).sum();
        s.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point;
    use crate::rational::ratio;

    fn line(xs: &[i64]) -> Vec<Point> {
        xs.iter().map(|&x| point(&[x])).collect()
    }

    #[test]
    fn simplex_vertices_cancel_only_with_equal_weights() {
        for r in 2..=4 {
            assert!(weights_cancel(r, &vec![ratio(1, r as i64); r]));
            let mut uneven = vec![ratio(1, r as i64); r];
            uneven[0] = ratio(2, r as i64);
            uneven[1] = zero();
            assert!(!weights_cancel(r, &uneven));
        }
    }

    #[test]
    fn lift_examples() {
        let origin = vec![zero(); 2];
        let lifted = lift_parts(&[line(&[0]), line(&[0])], 2).unwrap();
        assert_eq!(lifted[0].coords, point(&[0, 1]));
        assert_eq!(lifted[1].coords, point(&[0, -1]));
        let coords: Vec<Point> = lifted.into_iter().map(|l| l.coords).collect();
        assert!(in_hull(&origin, &coords).unwrap());

        let lifted = lift_parts(&[line(&[1]), line(&[2])], 2).unwrap();
        let coords: Vec<Point> = lifted.into_iter().map(|l| l.coords).collect();
        assert_eq!(coords, vec![point(&[1, 1]), point(&[-2, -1])]);
        assert!(!in_hull(&origin, &coords).unwrap());
        assert_eq!(hulls_intersect(&[line(&[1]), line(&[2])]).unwrap(), None);

        let lifted = lift_parts(&[line(&[1]), line(&[1])], 2).unwrap();
        let coords: Vec<Point> = lifted.into_iter().map(|l| l.coords).collect();
        assert!(in_hull(&origin, &coords).unwrap());
    }

    #[test]
    fn partitions_are_enumerated_once() {
        for (n, r) in [(4, 2), (5, 3), (6, 3), (3, 3), (2, 3)] {
            let mut count = 0u128;
            for_each_partition(n, r, |labels| {
                assert_eq!(labels.iter().copied().max(), Some(r));
                count += 1;
                false
            });
            assert_eq!(count, stirling2(n, r));
        }
        assert_eq!(stirling2(9, 3), 3025);
    }

    #[test]
    fn transversal_on_the_line() {
        let pts = line(&[1, -1]);
        // Each class alone misses the origin, yet the pair straddles it.
        let out = colorful_caratheodory(&pts, &[1, 2], 1, 2, true, 1000).unwrap();
        assert_eq!(out.precondition, Precondition::Failed { classes: vec![1] });
        let tr = out.transversal.unwrap();
        assert_eq!((tr.s, tr.t), (vec![0], vec![1]));

        let pts = line(&[1, -1, 2, -2]);
        let out = colorful_caratheodory(&pts, &[1, 1, 2, 2], 1, 2, true, 1000).unwrap();
        assert_eq!(out.precondition, Precondition::Held);
        assert!(out.transversal.is_some());

        let pts = line(&[1, 2]);
        let out = colorful_caratheodory(&pts, &[1, 2], 1, 2, true, 1000).unwrap();
        assert!(matches!(out.precondition, Precondition::Failed { .. }));
        assert_eq!(out.transversal, None);
    }

    #[test]
    fn transversal_with_four_surrounding_classes() {
        let class = [
            point(&[1, 0]),
            point(&[-1, 0]),
            point(&[0, 1]),
            point(&[0, -1]),
        ];
        let (mut pts, mut colors) = (Vec::new(), Vec::new());
        for c in 1..=4 {
            for (i, p) in class.iter().enumerate() {
                pts.push(p.iter().map(|x| x * int(c as i64 + i as i64)).collect());
                colors.push(c);
            }
        }
        let out = colorful_caratheodory(&pts, &colors, 2, 4, true, 100_000).unwrap();
        let tr = out.transversal.unwrap();
        let used: Vec<usize> =
            tr.s.iter()
                .chain(&tr.t)
                .map(|&i| colors[i])
                .sorted()
                .dedup()
                .collect();
        assert_eq!(used, vec![1, 2, 3, 4]);
        for &v in &tr.t {
            let mut sub: Vec<Point> = tr.s.iter().map(|&i| pts[i].clone()).collect();
            sub.push(pts[v].clone());
            assert!(in_hull(&point(&[0, 0]), &sub).unwrap());
        }
    }

    #[test]
    fn center_on_three_collinear_points() {
        let pts = line(&[0, 1, 2]);
        let cert = tverberg_with_center(&pts, 2, TverbergBudget::default()).unwrap();
        assert_eq!(cert.method, CenterMethod::Lift);
        assert_eq!(cert.center.len(), 2);
        assert!(
            verify_center(&pts, &cert.labels, 2, cert.center)
                .unwrap()
                .valid
        );

        let check = verify_center(&pts, &[1, 2, 1], 2, Simplex::of(&[0, 2])).unwrap();
        assert!(check.valid);
        assert_eq!(check.witnesses[0].point, 1);
        assert_eq!(check.witnesses[0].at, point(&[1]));
        assert!(matches!(
            tverberg_with_center(&line(&[0, 1]), 2, TverbergBudget::default()),
            Err(Error::InputTooSmall(_))
        ));
    }

    #[test]
    fn nine_points_lie_on_the_circle_in_order() {
        let pts = nine_point_configuration();
        for p in &pts {
            assert_eq!(&p[0] * &p[0] + &p[1] * &p[1], int(4));
        }
        // Consecutive cross products are positive: counterclockwise order.
        for i in 0..9 {
            let (a, b) = (&pts[i], &pts[(i + 1) % 9]);
            assert!(&a[0] * &b[1] - &a[1] * &b[0] > zero());
        }
    }

    #[test]
    fn nine_point_partitions() {
        let pts = nine_point_configuration();
        let with = nine_point_partition_with_center();
        assert!(
            verify_center(&pts, &with, 3, nine_point_center())
                .unwrap()
                .valid
        );
        let without = nine_point_partition_without_center();
        let all = Simplex::range(9);
        assert!(hulls_intersect(&parts_of(&pts, &without, 3, all))
            .unwrap()
            .is_some());
        assert_eq!(
            find_center_for_partition(&pts, &without, 3, 6).unwrap(),
            None
        );
    }

    #[test]
    fn five_points_with_tolerance_one() {
        let pts = line(&[1, 2, 3, 4, 5]);
        let check = verify_tolerance(&pts, &[1, 2, 1, 2, 1], 2, 1, 1000).unwrap();
        assert!(check.valid);
        assert_eq!(check.removals_checked, 6);
        assert!(
            !verify_tolerance(&pts, &[1, 2, 1, 2, 1], 2, 2, 1000)
                .unwrap()
                .valid
        );
        let cert = tolerant_tverberg(&pts, 2, 1, TverbergBudget::default()).unwrap();
        assert!(
            verify_tolerance(&pts, &cert.labels, 2, 1, 1000)
                .unwrap()
                .valid
        );
        assert!(cert
            .levels
            .iter()
            .all(|l| l.overlap > l.t || l.remainder <= l.t * 2));
        assert!(
            !verify_tolerance(&line(&[1, 2]), &[1, 2], 2, 0, 10)
                .unwrap()
                .valid
        );
    }

    #[test]
    fn sharpness_small_cases() {
        for (d, r) in [(1, 2), (2, 2), (2, 3)] {
            let rep = sharpness_probe(d, r, 11).unwrap();
            assert_eq!(rep.points.len(), (r - 1) * (d + 1));
            assert!(rep.no_partition);
        }
    }
}
