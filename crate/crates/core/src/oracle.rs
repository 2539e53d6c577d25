//! Brute-force reference implementations used to cross-check the main
//! algorithms. They favor directness over speed and share as little code
//! with the checked paths as possible.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::matroid::Matroid;
use crate::rational::Rational;

/// Largest `I ⊆ A` with `ρ(I) ≥ |I| − t`, by enumeration.
pub fn tolerance_rank_by_search(base: &Matroid, t: usize, a: Simplex) -> Result<usize> {
    let mut best = 0;
    for i in a.subsets() {
        if i.len() > best && base.rank(i)? + t >= i.len() {
            best = i.len();
        }
    }
    Ok(best)
}

/// Largest member of `family` inside `a`.
pub fn rank_from_family(family: &[Simplex], a: Simplex) -> usize {
    family
        .iter()
        .filter(|s| s.is_subset(a))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Faces containing `sigma` in a complex given by all of its faces.
fn faces_over(faces: &HashSet<Simplex>, sigma: Simplex) -> Vec<Simplex> {
    faces
        .iter()
        .copied()
        .filter(|f| sigma.is_subset(*f))
        .collect()
}

/// Depth-first search over every order of elementary collapses, working on
/// explicit face sets.
pub fn collapsible_by_exhaustive_search(
    x: &SimplicialComplex,
    d: usize,
    max_states: usize,
) -> Result<bool> {
    let start: HashSet<Simplex> = x.faces(None).into_iter().collect();
    let mut seen: HashSet<Vec<Simplex>> = HashSet::new();
    let mut stack = vec![start];
    while let Some(faces) = stack.pop() {
        if faces.is_empty() {
            return Ok(true);
        }
        let mut key: Vec<Simplex> = faces.iter().copied().collect();
        key.sort();
        if !seen.insert(key) {
            continue;
        }
        if seen.len() > max_states {
            return Err(Error::BudgetExceeded(format!(
                "{max_states} collapse states"
            )));
        }
        for &sigma in &faces {
            if sigma.len() > d {
                continue;
            }
            let over = faces_over(&faces, sigma);
            let top = over
                .iter()
                .copied()
                .max_by_key(|f| f.len())
                .expect("sigma itself");
            if over.iter().all(|f| f.is_subset(top)) {
                let next: HashSet<Simplex> = faces
                    .iter()
                    .copied()
                    .filter(|f| !sigma.is_subset(*f))
                    .collect();
                stack.push(next);
            }
        }
    }
    Ok(false)
}

/// Scans every subset of the vertex set rather than the face list.
pub fn witness_by_subsets(
    x: &SimplicialComplex,
    mat: &Matroid,
    m: usize,
    k: usize,
    full: bool,
) -> Result<Option<Simplex>> {
    let r = mat.rank(mat.ground())?;
    let mut best: Option<Simplex> = None;
    for tau in x.vertex_set().subsets() {
        if !x.contains(tau) {
            continue;
        }
        let complement_ok = mat.rank(mat.ground().difference(tau))? < k;
        let tau_ok = !full || mat.rank(tau)? + m > r;
        if complement_ok && tau_ok && best.is_none_or(|b| tau.graded_cmp(&b).is_lt()) {
            best = Some(tau);
        }
    }
    Ok(best)
}

fn orient(a: &[Rational], b: &[Rational], c: &[Rational]) -> Rational {
    (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
}

fn on_segment(q: &[Rational], a: &[Rational], b: &[Rational]) -> bool {
    orient(a, b, q).is_zero()
        && (0..2).all(|i| {
            a[i].clone().min(b[i].clone()) <= q[i] && q[i] <= a[i].clone().max(b[i].clone())
        })
}

fn in_triangle(q: &[Rational], a: &[Rational], b: &[Rational], c: &[Rational]) -> bool {
    if orient(a, b, c).is_zero() {
        return false;
    }
    let s = [orient(a, b, q), orient(b, c, q), orient(c, a, q)];
    s.iter().all(|x| !x.is_negative()) || s.iter().all(|x| !x.is_positive())
}

/// Hull membership in dimension 1 or 2: a point, a segment or a triangle of
/// the input must contain `q`.
pub fn in_hull_low_dim(q: &[Rational], pts: &[Point]) -> Result<bool> {
    match q.len() {
        1 => Ok(pts.iter().any(|p| p[0] <= q[0]) && pts.iter().any(|p| p[0] >= q[0])),
        2 => {
            let n = pts.len();
            for i in 0..n {
                if pts[i] == q {
                    return Ok(true);
                }
                for j in i + 1..n {
                    if on_segment(q, &pts[i], &pts[j]) {
                        return Ok(true);
                    }
                    for l in j + 1..n {
                        if in_triangle(q, &pts[i], &pts[j], &pts[l]) {
                            return Ok(true);
                        }
                    }
                }
            }
            Ok(false)
        }
        d => Err(Error::BadParams(format!("oracle handles d ≤ 2, got {d}"))),
    }
}

fn line_meet(p1: &[Rational], p2: &[Rational], p3: &[Rational], p4: &[Rational]) -> Option<Point> {
    let d1 = [&p2[0] - &p1[0], &p2[1] - &p1[1]];
    let d2 = [&p4[0] - &p3[0], &p4[1] - &p3[1]];
    let den = &d1[0] * &d2[1] - &d1[1] * &d2[0];
    if den.is_zero() {
        return None;
    }
    let s = ((&p3[0] - &p1[0]) * &d2[1] - (&p3[1] - &p1[1]) * &d2[0]) / den;
    Some(vec![&p1[0] + &s * &d1[0], &p1[1] + &s * &d1[1]])
}

/// Whether hulls in dimension 1 or 2 share a point. In the plane, a
/// nonempty intersection has an extreme point that is an input point or
/// the meet of two lines through input points, so those candidates suffice.
pub fn hulls_meet_low_dim(hulls: &[Vec<Point>]) -> Result<bool> {
    if hulls.iter().any(Vec::is_empty) {
        return Ok(false);
    }
    let Some(d) = hulls.first().map(|h| h[0].len()) else {
        return Ok(true);
    };
    match d {
        1 => {
            let lo = hulls
                .iter()
                .map(|h| h.iter().map(|p| &p[0]).min().expect("nonempty"))
                .max();
            let hi = hulls
                .iter()
                .map(|h| h.iter().map(|p| &p[0]).max().expect("nonempty"))
                .min();
            Ok(lo <= hi)
        }
        2 => {
            let mut candidates: Vec<Point> = hulls.iter().flatten().cloned().collect();
            let lines: Vec<(&Point, &Point)> = hulls
                .iter()
                .flat_map(|h| {
                    (0..h.len()).flat_map(move |i| (i + 1..h.len()).map(move |j| (&h[i], &h[j])))
                })
                .filter(|(a, b)| a != b)
                .collect();
            for i in 0..lines.len() {
                for j in i + 1..lines.len() {
                    if let Some(p) = line_meet(lines[i].0, lines[i].1, lines[j].0, lines[j].1) {
                        candidates.push(p);
                    }
                }
            }
            for c in candidates {
                let mut inside = true;
                for h in hulls {
                    if !in_hull_low_dim(&c, h)? {
                        inside = false;
                        break;
                    }
                }
                if inside {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        d => Err(Error::BadParams(format!("oracle handles d ≤ 2, got {d}"))),
    }
}
