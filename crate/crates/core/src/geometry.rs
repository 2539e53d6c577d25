//! Exact convex geometry: intersection of convex bodies, hull membership,
//! nerves, halfspace duality and the geometric colorful Helly experiment.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::lp::{Cmp, Lp, LpOutcome};
use crate::matroid::Matroid;
use crate::rational::{from_wire, int, one, to_wire, zero, Rational, Q};
use crate::theorems::{find_witness, hypothesis_collapsible, Conclusion};

pub type Point = Vec<Rational>;

pub const DEFAULT_NERVE_BUDGET: usize = 12;

pub fn point(coords: &[i64]) -> Point {
    coords.iter().map(|&c| int(c)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConvexBody {
    Hull(Vec<Point>),
    /// `{x : x·p > 0}`; empty when `p = 0`.
    OpenHalfspace(Point),
    /// `{x : x·normal ≥ offset}`.
    ClosedHalfspace {
        normal: Point,
        offset: Rational,
    },
    AxisBox {
        lo: Point,
        hi: Point,
    },
}

impl ConvexBody {
    pub fn dim(&self) -> usize {
        match self {
            ConvexBody::Hull(pts) => pts[0].len(),
            ConvexBody::OpenHalfspace(p) => p.len(),
            ConvexBody::ClosedHalfspace { normal, .. } => normal.len(),
            ConvexBody::AxisBox { lo, .. } => lo.len(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            ConvexBody::Hull(pts) => {
                let first = pts
                    .first()
                    .ok_or_else(|| Error::Malformed("hull of no points".into()))?;
                same_dim(first.len(), pts)
            }
            ConvexBody::AxisBox { lo, hi } => {
                check_dim(lo.len(), hi.len())?;
                if lo.iter().zip(hi).any(|(l, h)| l > h) {
                    return Err(Error::Malformed("box with lo > hi".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn is_known_empty(&self) -> bool {
        matches!(self, ConvexBody::OpenHalfspace(p) if p.iter().all(Zero::is_zero))
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        match self {
            ConvexBody::Hull(pts) => in_hull(x, pts).unwrap_or(false),
            ConvexBody::OpenHalfspace(p) => dot(p, x).is_positive(),
            ConvexBody::ClosedHalfspace { normal, offset } => dot(normal, x) >= *offset,
            ConvexBody::AxisBox { lo, hi } => x
                .iter()
                .zip(lo.iter().zip(hi))
                .all(|(c, (l, h))| l <= c && c <= h),
        }
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn same_dim(dim: usize, pts: &[Point]) -> Result<()> {
    pts.iter().try_for_each(|p| check_dim(dim, p.len()))
}

/// A family of convex bodies with colors `1..=r`.
#[derive(Clone, Debug, PartialEq)]
pub struct ColoredFamily {
    pub dim: usize,
    pub bodies: Vec<ConvexBody>,
    pub colors: Vec<usize>,
}

impl ColoredFamily {
    pub fn new(dim: usize, bodies: Vec<ConvexBody>, colors: Vec<usize>) -> Result<Self> {
        for b in &bodies {
            b.validate()?;
            check_dim(dim, b.dim())?;
        }
        if colors.len() != bodies.len() {
            return Err(Error::Malformed(format!(
                "{} colors for {} bodies",
                colors.len(),
                bodies.len()
            )));
        }
        if colors.contains(&0) {
            return Err(Error::Malformed("colors start at 1".into()));
        }
        Ok(Self {
            dim,
            bodies,
            colors,
        })
    }

    /// Every body gets color 1.
    pub fn uncolored(dim: usize, bodies: Vec<ConvexBody>) -> Result<Self> {
        let n = bodies.len();
        Self::new(dim, bodies, vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    pub fn color_count(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn color_class(&self, c: usize) -> Simplex {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn select(&self, s: Simplex) -> Vec<&ConvexBody> {
        s.vertices().map(|i| &self.bodies[i]).collect()
    }
}

/// Sparse coefficients, comparison and right-hand side of one constraint.
type SparseRow = (Vec<(usize, Rational)>, Cmp, Rational);

/// Decides whether the bodies share a point and returns one if so.
pub fn bodies_intersect(dim: usize, bodies: &[&ConvexBody]) -> Result<Option<Point>> {
    for b in bodies {
        check_dim(dim, b.dim())?;
    }
    if bodies.iter().any(|b| b.is_known_empty()) {
        return Ok(None);
    }
    if bodies.is_empty() {
        return Ok(Some(vec![zero(); dim]));
    }
    if bodies
        .iter()
        .all(|b| matches!(b, ConvexBody::AxisBox { .. }))
    {
        return Ok(boxes_intersect(dim, bodies));
    }
    if let [ConvexBody::Hull(pts)] = bodies {
        return Ok(Some(pts[0].clone()));
    }
    if let [a, b] = bodies {
        match (a, b) {
            (ConvexBody::Hull(pts), ConvexBody::OpenHalfspace(p))
            | (ConvexBody::OpenHalfspace(p), ConvexBody::Hull(pts)) => {
                return Ok(pts.iter().find(|x| dot(p, x).is_positive()).cloned());
            }
            _ => {}
        }
    }
    Ok(intersect_by_lp(dim, bodies))
}

fn boxes_intersect(dim: usize, bodies: &[&ConvexBody]) -> Option<Point> {
    let mut lo: Option<Point> = None;
    let mut hi: Option<Point> = None;
    for b in bodies {
        if let ConvexBody::AxisBox { lo: l, hi: h } = b {
            lo = Some(match lo {
                None => l.clone(),
                Some(cur) => cur
                    .into_iter()
                    .zip(l)
                    .map(|(a, b)| a.max(b.clone()))
                    .collect(),
            });
            hi = Some(match hi {
                None => h.clone(),
                Some(cur) => cur
                    .into_iter()
                    .zip(h)
                    .map(|(a, b)| a.min(b.clone()))
                    .collect(),
            });
        }
    }
    let (lo, hi) = (lo?, hi?);
    debug_assert_eq!(lo.len(), dim);
    lo.iter().zip(&hi).all(|(l, h)| l <= h).then_some(lo)
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![zero(); n];
    v[i] = one();
    v
}

/// Variables: `x_1..x_d` free, then convex weights per hull, then a free
/// slack `s` when open halfspaces are present. Each strict `p·x > 0`
/// becomes `p·x − s ≥ 0`; the bodies meet iff `max s` (capped at 1) is
/// positive.
fn intersect_by_lp(dim: usize, bodies: &[&ConvexBody]) -> Option<Point> {
    let mut lp = Lp::new(0);
    for _ in 0..dim {
        lp.add_var(true);
    }
    let strict = bodies
        .iter()
        .any(|b| matches!(b, ConvexBody::OpenHalfspace(_)));
    let s = strict.then(|| lp.add_var(true));
    let mut rows: Vec<SparseRow> = Vec::new();
    for b in bodies {
        match b {
            ConvexBody::Hull(pts) => {
                let lambdas: Vec<usize> = pts.iter().map(|_| lp.add_var(false)).collect();
                rows.push((
                    lambdas.iter().map(|&l| (l, one())).collect(),
                    Cmp::Eq,
                    one(),
                ));
                for i in 0..dim {
                    let mut row: Vec<(usize, Rational)> = lambdas
                        .iter()
                        .zip(pts)
                        .map(|(&l, p)| (l, p[i].clone()))
                        .collect();
                    row.push((i, -one()));
                    rows.push((row, Cmp::Eq, zero()));
                }
            }
            ConvexBody::OpenHalfspace(p) => {
                let mut row: Vec<(usize, Rational)> = p.iter().cloned().enumerate().collect();
                row.push((s.expect("slack exists"), -one()));
                rows.push((row, Cmp::Ge, zero()));
            }
            ConvexBody::ClosedHalfspace { normal, offset } => {
                rows.push((
                    normal.iter().cloned().enumerate().collect(),
                    Cmp::Ge,
                    offset.clone(),
                ));
            }
            ConvexBody::AxisBox { lo, hi } => {
                for i in 0..dim {
                    rows.push((vec![(i, one())], Cmp::Ge, lo[i].clone()));
                    rows.push((vec![(i, one())], Cmp::Le, hi[i].clone()));
                }
            }
        }
    }
    let n = lp.n_vars();
    for (sparse, cmp, rhs) in rows {
        let mut coeffs = vec![zero(); n];
        for (j, a) in sparse {
            coeffs[j] += a;
        }
        lp.constrain(coeffs, cmp, rhs);
    }
    match s {
        None => lp.solve().point().map(|x| x[..dim].to_vec()),
        Some(s) => {
            lp.constrain(unit(n, s), Cmp::Le, one());
            lp.maximize(unit(n, s));
            match lp.solve() {
                LpOutcome::Optimal { x, value } if value.is_positive() => Some(x[..dim].to_vec()),
                _ => None,
            }
        }
    }
}

/// Solves `A λ = b` for square `A`; `None` when singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &f * &b[col];
            b[r] -= delta;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Convex coefficients expressing `q` in terms of `pts`, if any exist.
pub fn hull_coefficients(q: &[Rational], pts: &[Point]) -> Result<Option<Vec<Rational>>> {
    same_dim(q.len(), pts)?;
    let d = q.len();
    if pts.is_empty() {
        return Ok(None);
    }
    if pts.len() == d + 1 {
        let mut a: Vec<Vec<Rational>> = (0..d)
            .map(|i| pts.iter().map(|p| p[i].clone()).collect())
            .collect();
        a.push(vec![one(); d + 1]);
        let mut b = q.to_vec();
        b.push(one());
        if let Some(lambda) = solve_square(a, b) {
            return Ok(lambda.iter().all(|l| !l.is_negative()).then_some(lambda));
        }
    }
    let mut lp = Lp::new(pts.len());
    lp.constrain(vec![one(); pts.len()], Cmp::Eq, one());
    for i in 0..d {
        lp.constrain(
            pts.iter().map(|p| p[i].clone()).collect(),
            Cmp::Eq,
            q[i].clone(),
        );
    }
    Ok(lp.solve().point().map(<[Rational]>::to_vec))
}

pub fn in_hull(q: &[Rational], pts: &[Point]) -> Result<bool> {
    Ok(hull_coefficients(q, pts)?.is_some())
}

/// The nerve together with the vertices whose bodies are empty. Those
/// vertices stay in the ground set but belong to no face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nerve {
    pub complex: SimplicialComplex,
    pub empty_vertices: Simplex,
}

pub fn nerve(family: &ColoredFamily, max_bodies: usize) -> Result<Nerve> {
    let n = family.len();
    if n > max_bodies {
        return Err(Error::BudgetExceeded(format!(
            "nerve of {n} bodies (cap {max_bodies})"
        )));
    }
    let mut faces: Vec<Simplex> = Vec::new();
    let mut level: Vec<Simplex> = Vec::new();
    let mut empty_vertices = Simplex::EMPTY;
    for v in 0..n {
        if bodies_intersect(family.dim, &[&family.bodies[v]])?.is_some() {
            level.push(Simplex::of(&[v]));
        } else {
            empty_vertices = empty_vertices.with(v);
        }
    }
    while !level.is_empty() {
        let known: HashSet<Simplex> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &f in &level {
            let top = f.max_vertex().expect("nonempty face");
            for v in top + 1..n {
                let cand = f.with(v);
                if empty_vertices.contains(v)
                    || !cand.vertices().all(|w| known.contains(&cand.without(w)))
                {
                    continue;
                }
                if bodies_intersect(family.dim, &family.select(cand))?.is_some() {
                    next.push(cand);
                }
            }
        }
        faces.extend(level);
        level = next;
    }
    let complex = if faces.is_empty() {
        SimplicialComplex::empty(Simplex::range(n))
    } else {
        SimplicialComplex::new(Simplex::range(n), faces)?
    };
    Ok(Nerve {
        complex,
        empty_vertices,
    })
}

/// One open halfspace `{x : x·p > 0}` per point.
pub fn dual_halfspaces(pts: &[Point]) -> Vec<ConvexBody> {
    pts.iter().cloned().map(ConvexBody::OpenHalfspace).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColorfulHellyOutcome {
    /// Color classes whose union is intersecting.
    pub classes: Vec<usize>,
    /// The nerve face the classes were read from.
    pub tau: Simplex,
    #[serde(with = "point_wire")]
    pub point: Point,
}

/// Finds `r − k + 1` color classes whose union has a common point.
pub fn colorful_helly(
    family: &ColoredFamily,
    d: usize,
    m: usize,
    k: usize,
    max_bodies: usize,
) -> Result<ColorfulHellyOutcome> {
    let r = family.color_count();
    for c in 1..=r {
        if family.color_class(c).is_empty() {
            return Err(Error::Malformed(format!("color class {c} is empty")));
        }
    }
    if family.dim != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: family.dim,
        });
    }
    let nerve = nerve(family, max_bodies)?;
    let mat = Matroid::from_colors(&family.colors)?;
    let hyp = hypothesis_collapsible(&nerve.complex, &mat, d, m, k)?;
    if let Some(ce) = hyp.counterexample {
        return Err(Error::HypothesisFailed(format!(
            "bodies {} with the {} of them {} have no intersecting completion",
            ce.u,
            ce.s.len(),
            ce.s
        )));
    }
    let w = find_witness(&nerve.complex, &mat, m, k, Conclusion::Full, max_bodies)?
        .ok_or_else(|| Error::HypothesisViolated("no nerve face meets the conclusion".into()))?;
    let classes: Vec<usize> = (1..=r)
        .filter(|&c| family.color_class(c).is_subset(w.tau))
        .take(r + 1 - k)
        .collect();
    if classes.len() + k < r + 1 {
        return Err(Error::HypothesisViolated(format!(
            "face {} covers only {} color classes",
            w.tau,
            classes.len()
        )));
    }
    let union: Simplex = classes
        .iter()
        .map(|&c| family.color_class(c))
        .fold(Simplex::EMPTY, Simplex::union);
    let point = bodies_intersect(d, &family.select(union))?.ok_or_else(|| {
        Error::HypothesisViolated(format!("classes {classes:?} do not intersect"))
    })?;
    Ok(ColorfulHellyOutcome {
        classes,
        tau: w.tau,
        point,
    })
}

pub mod point_wire {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &Point, s: S) -> std::result::Result<S::Ok, S::Error> {
        to_wire(p).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Point, D::Error> {
        Ok(from_wire(Vec::<Q>::deserialize(d)?))
    }
}

pub mod points_wire {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &[Point], s: S) -> std::result::Result<S::Ok, S::Error> {
        p.iter()
            .map(|x| to_wire(x))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Point>, D::Error> {
        Ok(Vec::<Vec<Q>>::deserialize(d)?
            .into_iter()
            .map(from_wire)
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfspaceSpec {
    pub normal: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedHalfspaceSpec {
    pub normal: Vec<Q>,
    pub offset: Q,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub lo: Vec<Q>,
    pub hi: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodySpec {
    Hull(Vec<Vec<Q>>),
    HalfspaceOpen(HalfspaceSpec),
    HalfspaceClosed(ClosedHalfspaceSpec),
    Box(BoxSpec),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub dim: usize,
    pub bodies: Vec<BodySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<usize>>,
}

impl From<&ConvexBody> for BodySpec {
    fn from(b: &ConvexBody) -> Self {
        match b {
            ConvexBody::Hull(pts) => BodySpec::Hull(pts.iter().map(|p| to_wire(p)).collect()),
            ConvexBody::OpenHalfspace(p) => {
                BodySpec::HalfspaceOpen(HalfspaceSpec { normal: to_wire(p) })
            }
            ConvexBody::ClosedHalfspace { normal, offset } => {
                BodySpec::HalfspaceClosed(ClosedHalfspaceSpec {
                    normal: to_wire(normal),
                    offset: Q(offset.clone()),
                })
            }
            ConvexBody::AxisBox { lo, hi } => BodySpec::Box(BoxSpec {
                lo: to_wire(lo),
                hi: to_wire(hi),
            }),
        }
    }
}

impl From<BodySpec> for ConvexBody {
    fn from(b: BodySpec) -> Self {
        match b {
            BodySpec::Hull(pts) => ConvexBody::Hull(pts.into_iter().map(from_wire).collect()),
            BodySpec::HalfspaceOpen(h) => ConvexBody::OpenHalfspace(from_wire(h.normal)),
            BodySpec::HalfspaceClosed(h) => ConvexBody::ClosedHalfspace {
                normal: from_wire(h.normal),
                offset: h.offset.0,
            },
            BodySpec::Box(b) => ConvexBody::AxisBox {
                lo: from_wire(b.lo),
                hi: from_wire(b.hi),
            },
        }
    }
}

impl From<&ColoredFamily> for FamilySpec {
    fn from(f: &ColoredFamily) -> Self {
        Self {
            dim: f.dim,
            bodies: f.bodies.iter().map(BodySpec::from).collect(),
            colors: Some(f.colors.clone()),
        }
    }
}

impl FamilySpec {
    pub fn build(self) -> Result<ColoredFamily> {
        let n = self.bodies.len();
        let bodies = self.bodies.into_iter().map(ConvexBody::from).collect();
        ColoredFamily::new(self.dim, bodies, self.colors.unwrap_or_else(|| vec![1; n]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::{find_d_collapse, CollapseBudget, CollapseMode};
    use crate::rational::ratio;

    fn interval(a: i64, b: i64) -> ConvexBody {
        ConvexBody::Hull(vec![point(&[a]), point(&[b])])
    }

    fn boxed(lo: &[i64], hi: &[i64]) -> ConvexBody {
        ConvexBody::AxisBox {
            lo: point(lo),
            hi: point(hi),
        }
    }

    #[test]
    fn interval_intersections() {
        let (a, b) = (interval(0, 2), interval(1, 3));
        let x = bodies_intersect(1, &[&a, &b]).unwrap().unwrap();
        assert!(a.contains(&x) && b.contains(&x));
        assert!(x[0] >= int(1) && x[0] <= int(2));

        let c = interval(2, 5);
        let x = bodies_intersect(1, &[&a, &b, &c]).unwrap().unwrap();
        assert_eq!(x, point(&[2]));
        assert_eq!(bodies_intersect(1, &[&a, &interval(3, 4)]).unwrap(), None);
    }

    #[test]
    fn parallel_segments_miss() {
        let s1 = ConvexBody::Hull(vec![point(&[0, 0]), point(&[1, 0])]);
        let s2 = ConvexBody::Hull(vec![point(&[0, 1]), point(&[1, 1])]);
        assert_eq!(bodies_intersect(2, &[&s1, &s2]).unwrap(), None);
        assert_eq!(
            bodies_intersect(1, &[&s1]),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn strict_halfspaces() {
        let right = ConvexBody::OpenHalfspace(point(&[1]));
        let left = ConvexBody::OpenHalfspace(point(&[-1]));
        assert_eq!(bodies_intersect(1, &[&right, &left]).unwrap(), None);
        let x = bodies_intersect(1, &[&right, &right]).unwrap().unwrap();
        assert!(x[0].is_positive());
        let closed = ConvexBody::ClosedHalfspace {
            normal: point(&[-1]),
            offset: int(0),
        };
        assert_eq!(bodies_intersect(1, &[&right, &closed]).unwrap(), None);
        let seg = interval(-1, 0);
        assert_eq!(bodies_intersect(1, &[&right, &seg]).unwrap(), None);
        let wedge = [
            ConvexBody::OpenHalfspace(point(&[1, 0])),
            ConvexBody::OpenHalfspace(point(&[0, 1])),
            ConvexBody::OpenHalfspace(point(&[-1, -1])),
        ];
        let refs: Vec<&ConvexBody> = wedge.iter().collect();
        assert_eq!(bodies_intersect(2, &refs).unwrap(), None);
        assert!(bodies_intersect(2, &refs[..2]).unwrap().is_some());
        let empty = ConvexBody::OpenHalfspace(point(&[0, 0]));
        assert!(empty.is_known_empty());
        assert_eq!(bodies_intersect(2, &[&empty]).unwrap(), None);
    }

    #[test]
    fn hull_membership() {
        let tri = vec![point(&[1, 0]), point(&[-1, 1]), point(&[-1, -1])];
        assert!(in_hull(&point(&[0, 0]), &tri).unwrap());
        assert!(!in_hull(&point(&[0, 0]), &[point(&[1, 0]), point(&[2, 0])]).unwrap());
        assert!(!in_hull(&point(&[0, 0]), &[point(&[1, 1]), point(&[-2, -1])]).unwrap());
        let coeffs = hull_coefficients(&point(&[0, 0]), &tri).unwrap().unwrap();
        assert_eq!(coeffs, vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]);
        // Degenerate square systems fall through to the LP.
        let collinear = vec![point(&[-1, 0]), point(&[1, 0]), point(&[2, 0])];
        assert!(in_hull(&point(&[0, 0]), &collinear).unwrap());
    }

    #[test]
    fn nerve_examples() {
        let fam = ColoredFamily::uncolored(1, vec![interval(0, 1), interval(2, 3)]).unwrap();
        let n = nerve(&fam, 12).unwrap();
        assert_eq!(n.complex.facets(), &[Simplex::of(&[0]), Simplex::of(&[1])]);

        let fam = ColoredFamily::uncolored(1, vec![interval(0, 4), interval(1, 5), interval(2, 6)])
            .unwrap();
        let n = nerve(&fam, 12).unwrap();
        assert_eq!(n.complex.facets(), &[Simplex::range(3)]);

        let fam = ColoredFamily::uncolored(
            2,
            vec![
                ConvexBody::OpenHalfspace(point(&[1, 0])),
                ConvexBody::OpenHalfspace(point(&[0, 0])),
                ConvexBody::OpenHalfspace(point(&[-1, 0])),
            ],
        )
        .unwrap();
        let n = nerve(&fam, 12).unwrap();
        assert_eq!(n.empty_vertices, Simplex::of(&[1]));
        assert_eq!(n.complex.vertex_set(), Simplex::range(3));
        assert_eq!(n.complex.facets(), &[Simplex::of(&[0]), Simplex::of(&[2])]);
        assert!(!n.complex.contains(Simplex::of(&[1])));

        let many =
            ColoredFamily::uncolored(1, (0..13).map(|i| interval(i, i + 1)).collect()).unwrap();
        assert!(matches!(nerve(&many, 12), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn box_nerve_is_two_collapsible() {
        let fam = ColoredFamily::uncolored(
            2,
            vec![
                boxed(&[0, 0], &[2, 2]),
                boxed(&[1, 1], &[3, 3]),
                boxed(&[2, 0], &[4, 1]),
                boxed(&[0, 2], &[1, 4]),
                boxed(&[1, 0], &[2, 4]),
            ],
        )
        .unwrap();
        let n = nerve(&fam, 12).unwrap();
        let out = find_d_collapse(
            &n.complex,
            2,
            CollapseMode::Standard,
            CollapseBudget::default(),
        )
        .unwrap();
        assert!(out.is_collapsible());
    }

    #[test]
    fn duality_on_a_small_configuration() {
        let pts = vec![
            point(&[1, 0]),
            point(&[-1, 1]),
            point(&[-1, -1]),
            point(&[0, 2]),
        ];
        let dual = dual_halfspaces(&pts);
        for s in Simplex::range(pts.len())
            .subsets()
            .filter(|s| !s.is_empty())
        {
            let sub: Vec<Point> = s.vertices().map(|i| pts[i].clone()).collect();
            let bodies: Vec<&ConvexBody> = s.vertices().map(|i| &dual[i]).collect();
            assert_eq!(
                in_hull(&point(&[0, 0]), &sub).unwrap(),
                bodies_intersect(2, &bodies).unwrap().is_none(),
                "subset {s}"
            );
        }
    }

    #[test]
    fn colorful_helly_with_one_class_required() {
        // d = 1, r = 2: every red interval meets every blue one, so some
        // class is intersecting.
        let fam = ColoredFamily::new(
            1,
            vec![
                interval(0, 3),
                interval(2, 5),
                interval(1, 4),
                interval(2, 6),
            ],
            vec![1, 1, 2, 2],
        )
        .unwrap();
        let out = colorful_helly(&fam, 1, 1, 2, 12).unwrap();
        assert_eq!(out.classes.len(), 1);
        let union = fam.color_class(out.classes[0]);
        assert!(fam.select(union).iter().all(|b| b.contains(&out.point)));

        let bad = ColoredFamily::new(
            1,
            vec![
                interval(0, 1),
                interval(2, 3),
                interval(5, 6),
                interval(2, 2),
            ],
            vec![1, 1, 2, 2],
        )
        .unwrap();
        assert!(matches!(
            colorful_helly(&bad, 1, 1, 2, 12),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn family_json_round_trip() {
        let text = r#"{"dim":2,"bodies":[{"hull":[[0,0],["1/2",1]]},{"halfspace_open":{"normal":[1,0]}},{"box":{"lo":[0,0],"hi":[1,1]}}],"colors":[1,2,2]}"#;
        let fam = serde_json::from_str::<FamilySpec>(text)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(
            fam.bodies[0],
            ConvexBody::Hull(vec![point(&[0, 0]), vec![ratio(1, 2), int(1)]])
        );
        let back = serde_json::to_string(&FamilySpec::from(&fam)).unwrap();
        let again = serde_json::from_str::<FamilySpec>(&back)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(fam, again);
    }
}
