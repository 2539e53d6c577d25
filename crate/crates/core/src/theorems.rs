//! Matroidal colorful Helly statements for d-collapsible and d-Leray
//! complexes: hypothesis predicates, brute-force witness search, witness
//! extraction from a collapse certificate, and checks of the supporting
//! lemmas.
//!
//! Throughout, `X` is a complex on `V = {0, .., n-1}`, `M` a matroid on the
//! same ground set with rank function `ρ` and rank `r = ρ(V)`. Hypotheses
//! quantify over every `(d+m)`-subset `U` with `ρ(U) ≥ k` and over every way
//! of splitting `U` into labeled parts.

use serde::{Deserialize, Serialize};

use crate::collapse::{verify_sequence, CollapseMode, CollapseSequence};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{ell_sigma, is_d_leray_induced, Field};
use crate::matroid::Matroid;

/// Checks `d ≥ 1`, `r ≥ d+1`, `1 ≤ m ≤ r`, `m ≤ k ≤ min(m+d, r)` and
/// `n ≥ max(m+d, r)`.
pub fn validate_parameters(d: usize, r: usize, m: usize, k: usize, n: usize) -> Result<()> {
    let fail = |what: String| Err(Error::ParameterViolation(what));
    if d < 1 {
        return fail("d ≥ 1".into());
    }
    if r < d + 1 {
        return fail(format!("r ≥ d+1 (r={r}, d={d})"));
    }
    if m < 1 || m > r {
        return fail(format!("1 ≤ m ≤ r (m={m}, r={r})"));
    }
    if k < m {
        return fail(format!("m ≤ k (m={m}, k={k})"));
    }
    if k > (m + d).min(r) {
        return fail(format!("k ≤ min(m+d, r) = {} (k={k})", (m + d).min(r)));
    }
    if n < (m + d).max(r) {
        return fail(format!("|V| ≥ max(m+d, r) = {} (|V|={n})", (m + d).max(r)));
    }
    Ok(())
}

fn check_instance(
    x: &SimplicialComplex,
    mat: &Matroid,
    d: usize,
    m: usize,
    k: usize,
) -> Result<usize> {
    if x.vertex_set() != mat.ground() {
        return Err(Error::BadParams(format!(
            "complex vertex set {} differs from matroid ground {}",
            x.vertex_set(),
            mat.ground()
        )));
    }
    let r = mat.full_rank();
    validate_parameters(d, r, m, k, mat.ground_size())?;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// The qualifying set `U`.
    pub u: Simplex,
    /// The labeled part of `U` for which the condition fails.
    pub s: Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl HypothesisReport {
    fn from_first(found: Option<Counterexample>) -> Self {
        Self {
            holds: found.is_none(),
            counterexample: found,
        }
    }
}

/// Qualifying sets `U`: size `d+m`, rank at least `k`, lexicographic order.
fn qualifying_sets(
    mat: &Matroid,
    d: usize,
    m: usize,
    k: usize,
) -> impl Iterator<Item = Simplex> + '_ {
    mat.ground()
        .subsets_of_size(d + m)
        .into_iter()
        .filter(move |u| mat.rank_unchecked(*u) >= k)
}

/// Every `d`-subset `S` of every qualifying `U` extends to a face `S ∪ {v}`
/// with `v ∈ U ∖ S`.
pub fn hypothesis_collapsible(
    x: &SimplicialComplex,
    mat: &Matroid,
    d: usize,
    m: usize,
    k: usize,
) -> Result<HypothesisReport> {
    check_instance(x, mat, d, m, k)?;
    let found = qualifying_sets(mat, d, m, k).find_map(|u| {
        u.subsets_of_size(d)
            .into_iter()
            .find(|&s| !u.difference(s).vertices().any(|v| x.contains(s.with(v))))
            .map(|s| Counterexample { u, s })
    });
    Ok(HypothesisReport::from_first(found))
}

/// Every `(d+1)`-subset `T` of every qualifying `U` is a face, or some
/// `v ∈ U ∖ T` has `σ ∪ {v}` a face for all `σ ⊊ T`.
pub fn hypothesis_leray(
    x: &SimplicialComplex,
    mat: &Matroid,
    d: usize,
    m: usize,
    k: usize,
) -> Result<HypothesisReport> {
    check_instance(x, mat, d, m, k)?;
    let found = qualifying_sets(mat, d, m, k).find_map(|u| {
        u.subsets_of_size(d + 1)
            .into_iter()
            .find(|&t| {
                !x.contains(t)
                    && !u
                        .difference(t)
                        .vertices()
                        .any(|v| t.vertices().all(|w| x.contains(t.without(w).with(v))))
            })
            .map(|s| Counterexample { u, s })
    });
    Ok(HypothesisReport::from_first(found))
}

/// Every qualifying `U` has at most `m − 1` non-face `(d+1)`-subsets. The
/// counterexample records the `m`-th missing subset.
pub fn hypothesis_strong(
    x: &SimplicialComplex,
    mat: &Matroid,
    d: usize,
    m: usize,
    k: usize,
) -> Result<HypothesisReport> {
    check_instance(x, mat, d, m, k)?;
    let found = qualifying_sets(mat, d, m, k).find_map(|u| {
        u.subsets_of_size(d + 1)
            .into_iter()
            .filter(|t| !x.contains(*t))
            .nth(m - 1)
            .map(|s| Counterexample { u, s })
    });
    Ok(HypothesisReport::from_first(found))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tau: Simplex,
    pub rank_tau: usize,
    pub rank_complement: usize,
}

/// Which conclusion a witness must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    /// `ρ(τ) ≥ r+1−m` and `ρ(V∖τ) ≤ k−1`.
    Full,
    /// `ρ(V∖τ) ≤ k−1` only.
    ComplementOnly,
}

fn meets(
    mat: &Matroid,
    tau: Simplex,
    m: usize,
    k: usize,
    conclusion: Conclusion,
) -> Option<Witness> {
    let r = mat.full_rank();
    let rank_complement = mat.rank_unchecked(mat.ground().difference(tau));
    if rank_complement + 1 > k {
        return None;
    }
    let rank_tau = mat.rank_unchecked(tau);
    if conclusion == Conclusion::Full && rank_tau + m < r + 1 {
        return None;
    }
    Some(Witness {
        tau,
        rank_tau,
        rank_complement,
    })
}

/// Recomputes ranks and checks the conclusion for a claimed witness.
pub fn verify_witness(
    x: &SimplicialComplex,
    mat: &Matroid,
    m: usize,
    k: usize,
    conclusion: Conclusion,
    w: &Witness,
) -> bool {
    x.contains(w.tau)
        && w.tau.is_subset(mat.ground())
        && meets(mat, w.tau, m, k, conclusion).as_ref() == Some(w)
}

/// Smallest face (by size, then lexicographically) meeting the conclusion.
pub fn find_witness(
    x: &SimplicialComplex,
    mat: &Matroid,
    m: usize,
    k: usize,
    conclusion: Conclusion,
    max_vertices: usize,
) -> Result<Option<Witness>> {
    let biggest = x.facets().iter().map(|f| f.len()).max().unwrap_or(0);
    if biggest > max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "face enumeration over a facet of {biggest} vertices (cap {max_vertices})"
        )));
    }
    Ok(x.faces(None)
        .into_iter()
        .find_map(|tau| meets(mat, tau, m, k, conclusion)))
}

/// Result of replaying the constructive argument on a collapse certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub witness: Witness,
    /// Index of the collapse step whose free face `σ` is used.
    pub step: usize,
    pub sigma: Simplex,
    /// Maximal set `η` avoiding `σ`'s link with `σ ∪ η` in the tolerance
    /// matroid.
    pub eta: Simplex,
}

/// Extracts `τ` from an exact-size collapse certificate.
///
/// With `t = d+m−k` and `M^t` the tolerance matroid, let `R` be the faces of
/// `X` of size at least `d+1` lying in `M^t`. The last complex `X_n` of the
/// collapse that still contains all of `R` is followed by a collapse at a
/// free face `σ` with maximal face `τ`. A maximal `η ⊆ V∖σ` with
/// `σ ∪ η ∈ M^t` and `σ ∪ {u} ∉ X_n` for every `u ∈ η` then certifies that
/// `τ` satisfies the full conclusion.
pub fn extract_witness_from_collapse(
    x: &SimplicialComplex,
    seq: &CollapseSequence,
    mat: &Matroid,
    d: usize,
    m: usize,
    k: usize,
) -> Result<Extraction> {
    let r = check_instance(x, mat, d, m, k)?;
    if seq.mode != CollapseMode::ExactD || seq.d != d {
        return Err(Error::BadParams(format!(
            "need an exact-size {d}-collapse certificate, got {:?} with d={}",
            seq.mode, seq.d
        )));
    }
    if !verify_sequence(x, seq).valid {
        return Err(Error::BadParams(
            "collapse certificate does not verify".into(),
        ));
    }
    let t = d + m - k;
    let in_tolerance = |a: Simplex| mat.rank_unchecked(a) + t >= a.len();
    let big: Vec<Simplex> = x
        .faces(None)
        .into_iter()
        .filter(|f| f.len() > d && in_tolerance(*f))
        .collect();
    if big.is_empty() {
        return Err(Error::HypothesisViolated(
            "no face of size ≥ d+1 lies in the tolerance matroid".into(),
        ));
    }

    let stages = seq.replay(x);
    let last_full = stages
        .iter()
        .rposition(|xn| big.iter().all(|f| xn.contains(*f)))
        .expect("X itself contains every face of X");
    if last_full >= seq.steps.len() {
        return Err(Error::HypothesisViolated(
            "collapse ends while faces of size ≥ d+1 remain".into(),
        ));
    }
    let xn = &stages[last_full];
    let step = seq.steps[last_full];
    let (sigma, tau) = (step.free_face, step.max_face);
    if !in_tolerance(sigma) {
        return Err(Error::HypothesisViolated(format!(
            "free face {sigma} is not independent in the tolerance matroid"
        )));
    }

    let mut eta = Simplex::EMPTY;
    for u in mat.ground().difference(sigma).vertices() {
        if !xn.contains(sigma.with(u)) && in_tolerance(sigma.union(eta).with(u)) {
            eta = eta.with(u);
        }
    }
    if eta.len() >= m {
        let extra: Simplex = eta.vertices().take(m).collect();
        let u = sigma.union(extra);
        return Err(Error::HypothesisViolated(format!(
            "U = {u} (rank {}) has no face {sigma} ∪ {{v}}",
            mat.rank_unchecked(u)
        )));
    }
    let rank_union = mat.rank_unchecked(tau.union(eta));
    if rank_union != r {
        return Err(Error::HypothesisViolated(format!(
            "ρ(τ ∪ η) = {rank_union} ≠ r = {r} for τ = {tau}, η = {eta}"
        )));
    }
    let witness = meets(mat, tau, m, k, Conclusion::Full).ok_or_else(|| {
        Error::HypothesisViolated(format!("extracted τ = {tau} misses the conclusion"))
    })?;
    Ok(Extraction {
        witness,
        step: last_full,
        sigma,
        eta,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkCriterionVerdict {
    /// `ρ(V∖σ) ≥ ℓ_σ + 1` for every face `σ`.
    pub hypothesis_held: bool,
    /// First face where the hypothesis fails.
    pub failing_face: Option<Simplex>,
    /// Some independent set of `M` is not a face of `X`.
    pub conclusion_verified: bool,
    pub independent_non_face: Option<Simplex>,
}

impl LinkCriterionVerdict {
    /// The implication itself: hypothesis ⇒ conclusion.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_held || self.conclusion_verified
    }
}

/// Evaluates both sides of the link-homology criterion for `M ⊄ X`.
pub fn check_link_criterion_instance(
    x: &SimplicialComplex,
    mat: &Matroid,
    field: Field,
    max_vertices: usize,
) -> Result<LinkCriterionVerdict> {
    if x.vertex_set() != mat.ground() {
        return Err(Error::BadParams(
            "complex and matroid grounds differ".into(),
        ));
    }
    if x.vertex_set().len() > max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{} vertices exceeds cap {max_vertices}",
            x.vertex_set().len()
        )));
    }
    let mut failing_face = None;
    for sigma in x.faces(None) {
        let ell = ell_sigma(x, sigma, field)?;
        let rank = mat.rank_unchecked(mat.ground().difference(sigma)) as isize;
        if rank < ell + 1 {
            failing_face = Some(sigma);
            break;
        }
    }
    let independent_non_face = mat.independent_sets().into_iter().find(|s| !x.contains(*s));
    Ok(LinkCriterionVerdict {
        hypothesis_held: failing_face.is_none(),
        failing_face,
        conclusion_verified: independent_non_face.is_some(),
        independent_non_face,
    })
}

/// If every `(d+1)`-subset of `U` is a face of the d-Leray complex `X`, then
/// `U` is a face. Returns whether the implication holds on this `U`.
pub fn helly_for_leray(
    x: &SimplicialComplex,
    d: usize,
    u: Simplex,
    field: Field,
    max_vertices: usize,
) -> Result<bool> {
    if !u.is_subset(x.vertex_set()) {
        return Err(Error::NotASubset(u));
    }
    if u.len() < d + 1 {
        return Err(Error::BadParams(format!(
            "|U| = {} < d+1 = {}",
            u.len(),
            d + 1
        )));
    }
    if !is_d_leray_induced(x, d, field, max_vertices)?.holds {
        return Err(Error::NotDLeray(d));
    }
    let all_small = u.subsets_of_size(d + 1).into_iter().all(|t| x.contains(t));
    Ok(!all_small || x.contains(u))
}

/// Vertices `v ∉ A` such that `σ ∪ {v}` is a face for every `σ ⊂ A` with
/// `|σ| = |A| − 1`.
pub fn cofacial_vertices(x: &SimplicialComplex, a: Simplex) -> Simplex {
    x.vertex_set()
        .difference(a)
        .vertices()
        .filter(|&v| a.vertices().all(|w| x.contains(a.without(w).with(v))))
        .collect()
}

/// For a non-face `A` of size `d+1` in a d-Leray complex with nonempty
/// cofacial set `U`: is `U ∪ A ∖ {a}` a face for every `a ∈ A`? `None` when
/// the premise does not apply.
pub fn cofacial_extension_holds(x: &SimplicialComplex, a: Simplex) -> Option<bool> {
    if x.contains(a) {
        return None;
    }
    let u = cofacial_vertices(x, a);
    if u.is_empty() {
        return None;
    }
    Some(a.vertices().all(|w| x.contains(u.union(a.without(w)))))
}

/// Exploration aid for the open d-Leray analogue of the collapsible
/// statement: returns whether `X` is d-Leray with the collapsible-style
/// hypothesis holding, and whether a full-conclusion witness exists.
/// Nothing is asserted.
pub fn leray_conjecture_probe(
    x: &SimplicialComplex,
    mat: &Matroid,
    d: usize,
    m: usize,
    k: usize,
    max_vertices: usize,
) -> Result<(bool, bool)> {
    let hyp = hypothesis_collapsible(x, mat, d, m, k)?.holds
        && is_d_leray_induced(x, d, Field::Rationals, max_vertices)?.holds;
    let wit = find_witness(x, mat, m, k, Conclusion::Full, max_vertices)?.is_some();
    Ok((hyp, wit))
}
