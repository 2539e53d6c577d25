//! Seeded batch checks over random instances. Each check cross-validates
//! one statement against an independent computation and reports a
//! [`Verdict`]; suites group checks and produce a [`RunReport`].

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::collapse::{find_d_collapse, verify_sequence, CollapseBudget, CollapseMode};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::generate::{
    collapsible_complex, leray_complex, random_boxes, random_complex, random_hulls,
    random_intervals, random_matroid, random_points, rng_from_seed, MatroidKindName,
};
use crate::geometry::{hull_coefficients, nerve, ColoredFamily, Point};
use crate::homology::{is_d_leray_induced, is_d_leray_links, Field};
use crate::io::{Certificate, ComplexSpec};
use crate::matroid::{check_matroid_axioms, matroid_union_rank, Matroid};
use crate::oracle::{hulls_meet_low_dim, tolerance_rank_by_search};
use crate::rational::{int, zero};
use crate::theorems::{
    check_link_criterion_instance, cofacial_extension_holds, extract_witness_from_collapse,
    find_witness, helly_for_leray, hypothesis_collapsible, hypothesis_leray, hypothesis_strong,
    verify_witness, Conclusion,
};
use crate::tverberg::{
    center_by_enumeration, find_center_for_partition, hulls_intersect, lift_parts,
    nine_point_center, nine_point_configuration, nine_point_partition_with_center,
    nine_point_partition_without_center, sharpness_probe, tolerant_tverberg, tverberg_with_center,
    verify_center, verify_tolerance, PointConfig, TverbergBudget,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: serde_json::Value,
    pub seed: u64,
    pub verdicts: Vec<Verdict>,
    pub certificates: Vec<Certificate>,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

/// Settings shared by every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Caps the number of random instances per check.
    pub max_instances: Option<usize>,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            max_instances: None,
        }
    }

    fn count(&self, n: usize) -> usize {
        self.max_instances.map_or(n, |cap| n.min(cap))
    }

    /// A generator stream per check, derived from the seed and a tag.
    fn rng(&self, tag: u64) -> ChaCha8Rng {
        rng_from_seed(
            self.seed
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(tag),
        )
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, what),
            Err(e) => self.record(false, || format!("{}: {e}", what())),
        }
    }

    fn finish(self, check: &str, note: String) -> Verdict {
        let detail = match self.first_failure {
            Some(f) => format!("{note}; first failure: {f}"),
            None if self.cases == 0 => format!("{note}; no applicable cases"),
            None => note,
        };
        Verdict {
            check: check.into(),
            passed: self.failures == 0,
            cases: self.cases,
            failures: self.failures,
            detail,
        }
    }
}

fn matroid_corpus(cfg: &SuiteConfig, count: usize) -> Vec<Matroid> {
    let mut rng = cfg.rng(1);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=8);
            random_matroid(&mut rng, n, MatroidKindName::ALL[i % 4]).expect("generated matroid")
        })
        .collect()
}

/// Tolerance rank: closed form, brute-force search and union with a
/// uniform matroid agree on every subset.
pub fn check_tolerance_rank(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let corpus = matroid_corpus(cfg, cfg.count(200));
    for (i, m) in corpus.iter().enumerate() {
        for t in 0..=m.full_rank() {
            let r = (|| -> Result<bool> {
                let mt = m.tolerance(t)?;
                let u = Matroid::uniform(m.ground_size(), t)?;
                for a in m.ground().subsets() {
                    let closed = mt.rank(a)?;
                    if closed != tolerance_rank_by_search(m, t, a)?
                        || closed != matroid_union_rank(m, &u, a)?
                    {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            tally.record_result(r, || format!("matroid #{i} ({:?}), t = {t}", m.kind()));
        }
    }
    tally.finish("tolerance_rank", format!("{} matroids", corpus.len()))
}

/// Tolerance families satisfy the independence axioms.
pub fn check_tolerance_axioms(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let corpus = matroid_corpus(cfg, cfg.count(200));
    for (i, m) in corpus.iter().enumerate() {
        for t in 0..=m.full_rank() {
            let r = m
                .tolerance(t)
                .and_then(|mt| check_matroid_axioms(mt.ground(), &mt.independent_sets()))
                .map(|v| v.is_ok());
            tally.record_result(r, || format!("matroid #{i}, t = {t}"));
        }
    }
    tally.finish("tolerance_axioms", format!("{} matroids", corpus.len()))
}

/// Greedy sets of every size reach rank `min(t, r)`, and
/// `ρ(U) ≥ ρ(W) − |W ∖ U|` for all `U ⊆ W`.
pub fn check_rank_lemmas(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let corpus = matroid_corpus(cfg, cfg.count(100));
    for (i, m) in corpus.iter().enumerate() {
        let r = m.full_rank();
        for t in 0..=m.ground_size() {
            let ok = m
                .spanning_set_of_size(t)
                .and_then(|u| Ok(u.len() == t && m.rank(u)? >= t.min(r)));
            tally.record_result(ok, || format!("matroid #{i}, size {t}"));
        }
        let deficit = m.ground().subsets().all(|w| {
            let rw = m.rank(w).expect("subset");
            w.subsets()
                .all(|u| m.rank(u).expect("subset") + w.difference(u).len() >= rw)
        });
        tally.record(deficit, || format!("matroid #{i}: rank deficit bound"));
    }
    tally.finish("rank_lemmas", format!("{} matroids", corpus.len()))
}

/// Facets of size `d+1` and `d+2`, sometimes together with the boundary of
/// a `(d+2)`-set, so that both outcomes of the d-Leray and d-collapse tests
/// are common.
fn pure_ish_complex(rng: &mut ChaCha8Rng, n: usize, d: usize) -> SimplicialComplex {
    let ground = Simplex::range(n);
    let mut facets = Vec::new();
    for _ in 0..rng.gen_range(1..=8) {
        let size = if rng.gen_bool(0.75) { d + 1 } else { d + 2 };
        let mut all: Vec<usize> = (0..n).collect();
        all.shuffle(rng);
        facets.push(all.into_iter().take(size).collect::<Simplex>());
    }
    if n >= d + 2 && rng.gen_bool(0.4) {
        let mut all: Vec<usize> = (0..n).collect();
        all.shuffle(rng);
        let sphere: Simplex = all.into_iter().take(d + 2).collect();
        facets.extend(sphere.subsets_of_size(d + 1));
    }
    SimplicialComplex::new(ground, facets).expect("vertices in range")
}

/// Induced-subcomplex and link-based d-Leray tests agree.
pub fn check_leray_equivalence(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(3);
    let mut leray = 0;
    for i in 0..cfg.count(300) {
        let d = 1 + i % 3;
        let n = rng.gen_range(d + 1..=8);
        let x = pure_ish_complex(&mut rng, n, d);
        let r = (|| -> Result<bool> {
            let a = is_d_leray_induced(&x, d, Field::Rationals, 12)?.holds;
            let b = is_d_leray_links(&x, d, Field::Rationals, 12)?.holds;
            leray += a as usize;
            Ok(a == b)
        })();
        tally.record_result(r, || format!("{x:?}, d = {d}"));
    }
    tally.finish(
        "leray_equivalence",
        format!("{leray} of the complexes were d-Leray"),
    )
}

fn big_budget() -> CollapseBudget {
    CollapseBudget {
        max_vertices: 12,
        max_states: 200_000,
    }
}

/// Standard and exact-size collapse searches agree and their certificates
/// replay.
pub fn check_collapse_normal_form(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(4);
    let mut positive = 0;
    for i in 0..cfg.count(200) {
        let d = 1 + i % 3;
        let n = rng.gen_range(d + 1..=7);
        let x = if i % 2 == 0 {
            pure_ish_complex(&mut rng, n, d)
        } else {
            let max_face = rng.gen_range(1..=n);
            let steps = rng.gen_range(1..=8);
            collapsible_complex(&mut rng, n, d, steps, max_face)
                .expect("valid parameters")
                .complex
        };
        let r = (|| -> Result<bool> {
            let std = find_d_collapse(&x, d, CollapseMode::Standard, big_budget())?;
            let exact = find_d_collapse(&x, d, CollapseMode::ExactD, big_budget())?;
            let replay = [&std, &exact]
                .iter()
                .filter_map(|o| o.sequence())
                .all(|s| verify_sequence(&x, s).valid);
            positive += std.is_collapsible() as usize;
            Ok(std.is_collapsible() == exact.is_collapsible() && replay)
        })();
        tally.record_result(r, || format!("{x:?}, d = {d}"));
    }
    tally.finish(
        "collapse_normal_form",
        format!("{positive} complexes were d-collapsible"),
    )
}

/// A random instance for the matroidal Helly statements.
#[derive(Clone, Debug)]
pub struct TheoremInstance {
    pub complex: SimplicialComplex,
    pub matroid: Matroid,
    pub d: usize,
    pub m: usize,
    pub k: usize,
}

fn random_parameters(rng: &mut ChaCha8Rng, d: usize, n: usize, r: usize) -> Option<(usize, usize)> {
    if r < d + 1 {
        return None;
    }
    let m = rng.gen_range(1..=r.min(n - d));
    let k = rng.gen_range(m..=(m + d).min(r));
    (n >= (m + d).max(r)).then_some((m, k))
}

fn nerve_of(dim: usize, bodies: Vec<crate::geometry::ConvexBody>) -> SimplicialComplex {
    let fam = ColoredFamily::uncolored(dim, bodies).expect("generated family");
    nerve(&fam, 12).expect("small family").complex
}

/// d-collapsible complexes from reverse collapses or from nerves of
/// intervals (d = 1) and planar boxes (d = 2).
pub fn collapsible_instance(rng: &mut ChaCha8Rng) -> Option<TheoremInstance> {
    let d = rng.gen_range(1..=2);
    let n = rng.gen_range(d + 2..=8);
    let complex = match rng.gen_range(0..3) {
        0 | 1 => {
            let steps = rng.gen_range(1..=12);
            let max_face = rng.gen_range(d + 1..=n);
            collapsible_complex(rng, n, d, steps, max_face)
                .ok()?
                .complex
        }
        _ if d == 1 => nerve_of(1, random_intervals(rng, n, 10)),
        _ => nerve_of(2, random_boxes(rng, n, 2, 10)),
    };
    let kind = MatroidKindName::ALL[rng.gen_range(0..4)];
    let matroid = random_matroid(rng, n, kind).ok()?;
    let (m, k) = random_parameters(rng, d, n, matroid.full_rank())?;
    Some(TheoremInstance {
        complex,
        matroid,
        d,
        m,
        k,
    })
}

/// d-Leray complexes: nerves of convex hulls in `ℝ^d`, filtered random
/// complexes and reverse-collapse complexes.
pub fn leray_instance(rng: &mut ChaCha8Rng) -> Option<TheoremInstance> {
    let d = rng.gen_range(1..=2);
    let n = rng.gen_range(d + 2..=8);
    let complex = match rng.gen_range(0..3) {
        0 => nerve_of(d, random_hulls(rng, n, d, 3)),
        1 => leray_complex(rng, n, d, 50)?,
        _ => {
            let steps = rng.gen_range(1..=12);
            let max_face = rng.gen_range(d + 1..=n);
            collapsible_complex(rng, n, d, steps, max_face)
                .ok()?
                .complex
        }
    };
    let kind = MatroidKindName::ALL[rng.gen_range(0..4)];
    let matroid = random_matroid(rng, n, kind).ok()?;
    let (m, k) = random_parameters(rng, d, n, matroid.full_rank())?;
    Some(TheoremInstance {
        complex,
        matroid,
        d,
        m,
        k,
    })
}

struct ChainTally {
    tally: Tally,
}

impl ChainTally {
    fn check(&mut self, inst: &TheoremInstance) {
        let r = (|| -> Result<bool> {
            let TheoremInstance {
                complex: x,
                matroid: mat,
                d,
                m,
                k,
            } = inst;
            let s = hypothesis_strong(x, mat, *d, *m, *k)?.holds;
            let l = hypothesis_leray(x, mat, *d, *m, *k)?.holds;
            let c = hypothesis_collapsible(x, mat, *d, *m, *k)?.holds;
            let chain = (!s || l) && (!l || c);
            Ok(chain && (*m > 2 || (s == l && l == c)))
        })();
        self.tally.record_result(r, || format!("{inst:?}"));
    }
}

fn run_soundness(
    cfg: &SuiteConfig,
    tag: u64,
    target: usize,
    make: fn(&mut ChaCha8Rng) -> Option<TheoremInstance>,
    mut on_accept: impl FnMut(&TheoremInstance, &mut Tally),
    holds: fn(&TheoremInstance) -> Result<bool>,
    chain: &mut ChainTally,
) -> (Tally, usize) {
    let mut rng = cfg.rng(tag);
    let mut tally = Tally::default();
    let mut attempts = 0;
    let mut accepted = 0;
    while accepted < target && attempts < target * 200 {
        attempts += 1;
        let Some(inst) = make(&mut rng) else { continue };
        chain.check(&inst);
        match holds(&inst) {
            Ok(true) => {
                accepted += 1;
                on_accept(&inst, &mut tally);
            }
            Ok(false) => {}
            Err(e) => tally.record(false, || format!("hypothesis evaluation failed: {e}")),
        }
    }
    if accepted < target {
        tally.record(false, || {
            format!("only {accepted} of {target} instances satisfied the hypothesis")
        });
    }
    (tally, attempts)
}

fn collapsible_hypothesis(inst: &TheoremInstance) -> Result<bool> {
    Ok(hypothesis_collapsible(&inst.complex, &inst.matroid, inst.d, inst.m, inst.k)?.holds)
}

fn leray_hypothesis(inst: &TheoremInstance) -> Result<bool> {
    Ok(hypothesis_leray(&inst.complex, &inst.matroid, inst.d, inst.m, inst.k)?.holds)
}

fn collapsible_conclusion(inst: &TheoremInstance) -> Result<bool> {
    let TheoremInstance {
        complex: x,
        matroid: mat,
        d,
        m,
        k,
    } = inst;
    let Some(w) = find_witness(x, mat, *m, *k, Conclusion::Full, 16)? else {
        return Ok(false);
    };
    if !verify_witness(x, mat, *m, *k, Conclusion::Full, &w) {
        return Ok(false);
    }
    let outcome = find_d_collapse(x, *d, CollapseMode::ExactD, big_budget())?;
    let seq = outcome.sequence().ok_or_else(|| {
        Error::HypothesisViolated("generated complex is not d-collapsible".into())
    })?;
    let ex = extract_witness_from_collapse(x, seq, mat, *d, *m, *k)?;
    Ok(verify_witness(
        x,
        mat,
        *m,
        *k,
        Conclusion::Full,
        &ex.witness,
    ))
}

fn leray_conclusion(inst: &TheoremInstance) -> Result<bool> {
    let TheoremInstance {
        complex: x,
        matroid: mat,
        d,
        m,
        k,
    } = inst;
    if !is_d_leray_induced(x, *d, Field::Rationals, 12)?.holds {
        return Err(Error::NotDLeray(*d));
    }
    Ok(
        find_witness(x, mat, *m, *k, Conclusion::ComplementOnly, 16)?
            .is_some_and(|w| verify_witness(x, mat, *m, *k, Conclusion::ComplementOnly, &w)),
    )
}

/// The three theorem-level checks share one pass over the instances.
pub struct TheoremChecks {
    pub collapsible: Verdict,
    pub leray: Verdict,
    pub chain: Verdict,
    pub collapsible_ms: u64,
    pub leray_ms: u64,
}

pub fn check_theorems(cfg: &SuiteConfig) -> TheoremChecks {
    let target = cfg.count(200);
    let mut chain = ChainTally {
        tally: Tally::default(),
    };
    let start = Instant::now();
    let (t5, a5) = run_soundness(
        cfg,
        5,
        target,
        collapsible_instance,
        |inst, tally| tally.record_result(collapsible_conclusion(inst), || format!("{inst:?}")),
        collapsible_hypothesis,
        &mut chain,
    );
    let collapsible_ms = start.elapsed().as_millis() as u64;
    let start = Instant::now();
    let (t6, a6) = run_soundness(
        cfg,
        6,
        target,
        leray_instance,
        |inst, tally| tally.record_result(leray_conclusion(inst), || format!("{inst:?}")),
        leray_hypothesis,
        &mut chain,
    );
    let leray_ms = start.elapsed().as_millis() as u64;
    TheoremChecks {
        collapsible: t5.finish(
            "collapsible_soundness",
            format!("{target} instances satisfying the hypothesis out of {a5} drawn"),
        ),
        leray: t6.finish(
            "leray_soundness",
            format!("{target} instances satisfying the hypothesis out of {a6} drawn"),
        ),
        chain: chain.tally.finish(
            "implication_chain",
            format!("instances of both soundness checks, {} draws", a5 + a6),
        ),
        collapsible_ms,
        leray_ms,
    }
}

/// Nerves of intervals are 1-collapsible and nerves of planar boxes are
/// 2-collapsible.
pub fn check_box_nerves_collapse(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(13);
    let cases = [(1usize, cfg.count(50), 8usize), (2, cfg.count(30), 7)];
    for (d, count, max_bodies) in cases {
        for _ in 0..count {
            let n = rng.gen_range(1..=max_bodies);
            let bodies = if d == 1 {
                random_intervals(&mut rng, n, 12)
            } else {
                random_boxes(&mut rng, n, 2, 12)
            };
            let x = nerve_of(d, bodies);
            let r = find_d_collapse(&x, d, CollapseMode::Standard, big_budget())
                .map(|o| o.is_collapsible());
            tally.record_result(r, || format!("d = {d}: {x:?}"));
        }
    }
    tally.finish("nerve_collapsibility", "interval and box nerves".into())
}

/// Helly on d-Leray complexes, on nerves of random intervals with `d = 1`
/// and random subsets `U`.
pub fn check_leray_helly(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(14);
    for _ in 0..cfg.count(100) {
        let n = rng.gen_range(2..=7);
        let x = nerve_of(1, random_intervals(&mut rng, n, 8));
        for u in Simplex::range(n).subsets().filter(|u| u.len() >= 2) {
            let r = helly_for_leray(&x, 1, u, Field::Rationals, 12);
            tally.record_result(r, || format!("{x:?}, U = {u}"));
        }
    }
    tally.finish("leray_helly", "interval nerves, every U".into())
}

/// For a non-face `A` of size `d+1` in a d-Leray complex, the vertices
/// completing every facet of `∂A` extend each facet of `∂A` to a face.
pub fn check_cofacial_extension(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(15);
    let mut applicable = 0;
    for i in 0..cfg.count(150) {
        let d = 1 + i % 2;
        let n = rng.gen_range(d + 2..=7);
        let x = if i % 3 == 0 {
            nerve_of(d, random_hulls(&mut rng, n, d, 3))
        } else {
            match leray_complex(&mut rng, n, d, 50) {
                Some(x) => x,
                None => continue,
            }
        };
        for a in Simplex::range(n).subsets_of_size(d + 1) {
            if let Some(ok) = cofacial_extension_holds(&x, a) {
                applicable += 1;
                tally.record(ok, || format!("{x:?}, A = {a}"));
            }
        }
    }
    tally.finish(
        "cofacial_extension",
        format!("{applicable} applicable non-faces"),
    )
}

/// The link-homology criterion never has a true hypothesis with a false
/// conclusion.
pub fn check_link_criterion(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(16);
    let mut held = 0;
    for i in 0..cfg.count(150) {
        let n = rng.gen_range(1..=6);
        let size = rng.gen_range(1..=n);
        let x = random_complex(&mut rng, n, 5, size);
        let mat =
            random_matroid(&mut rng, n, MatroidKindName::ALL[i % 4]).expect("generated matroid");
        let r = check_link_criterion_instance(&x, &mat, Field::Rationals, 12).map(|v| {
            held += v.hypothesis_held as usize;
            v.consistent()
        });
        tally.record_result(r, || format!("{x:?}, {:?}", mat.kind()));
    }
    tally.finish(
        "link_criterion",
        format!("hypothesis held on {held} instances"),
    )
}

/// Hulls of `r` parts meet iff the origin lies in the hull of the lift,
/// with a planar candidate-point oracle as third opinion.
pub fn check_lift_equivalence(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(8);
    let mut meeting = 0;
    for _ in 0..cfg.count(500) {
        let r = rng.gen_range(2..=3);
        let d = rng.gen_range(1..=2);
        let parts: Vec<Vec<Point>> = (0..r)
            .map(|_| {
                let k = rng.gen_range(1..=3);
                (0..k)
                    .map(|_| (0..d).map(|_| int(rng.gen_range(-3..=3))).collect())
                    .collect()
            })
            .collect();
        let res = (|| -> Result<bool> {
            let direct = hulls_intersect(&parts)?.is_some();
            let oracle = hulls_meet_low_dim(&parts)?;
            let lifted: Vec<Point> = lift_parts(&parts, r)?
                .into_iter()
                .map(|l| l.coords)
                .collect();
            let origin = vec![zero(); lifted[0].len()];
            let via_lift = hull_coefficients(&origin, &lifted)?.is_some();
            meeting += direct as usize;
            Ok(direct == oracle && direct == via_lift)
        })();
        tally.record_result(res, || format!("parts {parts:?}"));
    }
    tally.finish(
        "lift_equivalence",
        format!("{meeting} configurations had meeting hulls"),
    )
}

/// Partitions with a center of size `(r−1)(d+1)`: the constructed
/// certificate verifies and direct enumeration also finds one.
pub fn check_centers(cfg: &SuiteConfig, certificates: &mut Vec<Certificate>) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(9);
    let budget = TverbergBudget::default();
    for (d, r) in [(1usize, 2usize), (2, 2), (1, 3)] {
        let n = (r - 1) * (d + 1);
        for extra in 1..=3 {
            for i in 0..cfg.count(50) {
                let pts = random_points(&mut rng, d, n + extra);
                let res = (|| -> Result<bool> {
                    let cert = tverberg_with_center(&pts, r, budget)?;
                    let ok = cert.center.len() == n
                        && verify_center(&pts, &cert.labels, r, cert.center)?.valid;
                    let brute = center_by_enumeration(&pts, r, budget.max_brute_force)?.is_some();
                    if i == 0 {
                        certificates.push(Certificate::TverbergCenter {
                            points: PointConfig::new(pts.clone())?,
                            certificate: cert,
                        });
                    }
                    Ok(ok && brute)
                })();
                tally.record_result(res, || format!("d = {d}, r = {r}, points {pts:?}"));
            }
        }
    }
    tally.finish(
        "tverberg_centers",
        "(d, r) ∈ {(1,2), (2,2), (1,3)}, |A| = n+1..n+3".into(),
    )
}

/// The nine points on a circle: one partition has the center
/// `{v2,v4,v5,v6,v7,v9}`, the other has no center of size 6.
pub fn check_nine_points(certificates: &mut Vec<Certificate>) -> Verdict {
    let mut tally = Tally::default();
    let pts = nine_point_configuration();
    let with = nine_point_partition_with_center();
    let res = verify_center(&pts, &with, 3, nine_point_center()).map(|c| c.valid);
    tally.record_result(res, || "center {v2,v4,v5,v6,v7,v9} rejected".into());
    let without = nine_point_partition_without_center();
    let res = (|| -> Result<bool> {
        let all = Simplex::range(9);
        let mut checked = 0;
        for b in all.subsets_of_size(6) {
            checked += 1;
            if verify_center(&pts, &without, 3, b)?.valid {
                return Ok(false);
            }
        }
        let is_tverberg = hulls_intersect(&[
            vec![pts[0].clone(), pts[4].clone(), pts[5].clone()],
            vec![pts[2].clone(), pts[6].clone(), pts[8].clone()],
            vec![pts[1].clone(), pts[3].clone(), pts[7].clone()],
        ])?
        .is_some();
        Ok(checked == 84
            && is_tverberg
            && find_center_for_partition(&pts, &without, 3, 6)?.is_none())
    })();
    tally.record_result(res, || {
        "a 6-subset works as center of the left partition".into()
    });
    if let Ok(check) = verify_center(&pts, &with, 3, nine_point_center()) {
        certificates.push(Certificate::TverbergCenter {
            points: PointConfig::new(pts).expect("nine points"),
            certificate: crate::tverberg::TverbergCertificate {
                r: 3,
                labels: with,
                center: nine_point_center(),
                witnesses: check.witnesses,
                method: crate::tverberg::CenterMethod::Enumeration,
            },
        });
    }
    tally.finish("nine_points", "84 candidate centers scanned".into())
}

/// Tolerant partitions verify exhaustively and every merge level meets the
/// overlap bound.
pub fn check_tolerant(cfg: &SuiteConfig, certificates: &mut Vec<Certificate>) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(11);
    let budget = TverbergBudget::default();
    for (d, r, t) in [(1usize, 2usize, 1usize), (2, 2, 1), (1, 2, 2)] {
        let size = (t + 1) * (r - 1) * (d + 1) + 1;
        for i in 0..cfg.count(30) {
            let pts = random_points(&mut rng, d, size);
            let res = (|| -> Result<bool> {
                let cert = tolerant_tverberg(&pts, r, t, budget)?;
                let valid = verify_tolerance(&pts, &cert.labels, r, t, budget.max_removals)?.valid;
                let bound = cert
                    .levels
                    .iter()
                    .all(|l| l.remainder <= l.t * r || l.overlap > l.t);
                if i == 0 {
                    certificates.push(Certificate::Tolerance {
                        points: PointConfig::new(pts.clone())?,
                        certificate: cert,
                    });
                }
                Ok(valid && bound)
            })();
            tally.record_result(res, || format!("d = {d}, r = {r}, t = {t}, points {pts:?}"));
        }
    }
    tally.finish(
        "tolerant_tverberg",
        "(d, r, t) ∈ {(1,2,1), (2,2,1), (1,2,2)}".into(),
    )
}

/// `(r−1)(d+1)` points in general position admit no Tverberg partition.
pub fn check_sharpness(cfg: &SuiteConfig) -> Verdict {
    let mut tally = Tally::default();
    for (j, (d, r)) in [(1usize, 2usize), (2, 2), (2, 3)].into_iter().enumerate() {
        for i in 0..cfg.count(50) {
            let seed = cfg.seed.wrapping_add((j * 1000 + i) as u64);
            let res = sharpness_probe(d, r, seed).map(|rep| rep.no_partition);
            tally.record_result(res, || format!("d = {d}, r = {r}, seed {seed}"));
        }
    }
    tally.finish("sharpness", "(d, r) ∈ {(1,2), (2,2), (2,3)}".into())
}

/// Collapse certificates from the generator replay.
pub fn check_generated_certificates(
    cfg: &SuiteConfig,
    certificates: &mut Vec<Certificate>,
) -> Verdict {
    let mut tally = Tally::default();
    let mut rng = cfg.rng(17);
    for i in 0..cfg.count(50) {
        let d = 1 + i % 3;
        let inst = collapsible_complex(&mut rng, 7, d, 8, d + 2).expect("valid parameters");
        tally.record(
            verify_sequence(&inst.complex, &inst.certificate).valid,
            || format!("{:?}", inst.complex),
        );
        if i == 0 {
            certificates.push(Certificate::Collapse {
                complex: ComplexSpec::from_complex(&inst.complex),
                sequence: inst.certificate,
            });
        }
    }
    tally.finish(
        "generated_certificates",
        "reverse-collapse complexes".into(),
    )
}

pub const SUITES: [&str; 4] = ["lemmas", "theorems", "tverberg", "all"];

/// Runs a named suite.
pub fn run_suite(name: &str, cfg: SuiteConfig) -> Result<RunReport> {
    if !SUITES.contains(&name) {
        return Err(Error::BadParams(format!(
            "unknown suite {name:?}; expected one of {SUITES:?}"
        )));
    }
    let start = Instant::now();
    let mut verdicts = Vec::new();
    let mut certificates = Vec::new();
    let all = name == "all";
    if all || name == "lemmas" {
        verdicts.push(check_tolerance_rank(&cfg));
        verdicts.push(check_tolerance_axioms(&cfg));
        verdicts.push(check_rank_lemmas(&cfg));
        verdicts.push(check_leray_equivalence(&cfg));
        verdicts.push(check_collapse_normal_form(&cfg));
        verdicts.push(check_link_criterion(&cfg));
        verdicts.push(check_leray_helly(&cfg));
        verdicts.push(check_cofacial_extension(&cfg));
    }
    if all || name == "theorems" {
        let t = check_theorems(&cfg);
        verdicts.extend([t.collapsible, t.leray, t.chain]);
        verdicts.push(check_box_nerves_collapse(&cfg));
        verdicts.push(check_generated_certificates(&cfg, &mut certificates));
    }
    if all || name == "tverberg" {
        verdicts.push(check_lift_equivalence(&cfg));
        verdicts.push(check_centers(&cfg, &mut certificates));
        verdicts.push(check_nine_points(&mut certificates));
        verdicts.push(check_tolerant(&cfg, &mut certificates));
        verdicts.push(check_sharpness(&cfg));
    }
    Ok(RunReport {
        command: format!("run-suite {name}"),
        parameters: serde_json::json!({
            "suite": name,
            "max_instances": cfg.max_instances,
        }),
        seed: cfg.seed,
        verdicts,
        certificates,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let cfg = SuiteConfig {
            seed: 3,
            max_instances: Some(4),
        };
        for name in ["lemmas", "tverberg"] {
            let rep = run_suite(name, cfg).unwrap();
            for v in &rep.verdicts {
                assert!(v.passed, "{v:?}");
            }
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_suite("nope", SuiteConfig::new(0)),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig {
            seed: 9,
            max_instances: Some(2),
        };
        let mut a = run_suite("tverberg", cfg).unwrap();
        let mut b = run_suite("tverberg", cfg).unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
