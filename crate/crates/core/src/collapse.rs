//! Elementary d-collapses and a complete search for collapse certificates.
//!
//! The search is a depth-first backtracking over free faces in lexicographic
//! order with a memo of complexes already shown to be dead ends. Two moves are
//! taken without branching because they never destroy a solution:
//!
//! * in standard mode, a facet with at most `d` vertices is collapsed at
//!   itself;
//! * in exact mode, a facet with exactly `d` vertices is collapsed at itself,
//!   and faces with fewer than `d` vertices are ignored, since they neither
//!   block a size-`d` collapse nor the terminal condition.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CollapseMode {
    /// Free faces of size at most `d`, ending at the void complex.
    Standard,
    /// Free faces of size exactly `d`, ending below dimension `d − 1`.
    #[serde(alias = "exact")]
    ExactD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    #[serde(rename = "free")]
    pub free_face: Simplex,
    #[serde(rename = "max")]
    pub max_face: Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseSequence {
    pub d: usize,
    pub mode: CollapseMode,
    pub steps: Vec<CollapseStep>,
}

impl CollapseSequence {
    /// The intermediate complexes `X_1, .., X_{t}` obtained by replaying the
    /// steps (no validity checks).
    pub fn replay(&self, x: &SimplicialComplex) -> Vec<SimplicialComplex> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(x.clone());
        for step in &self.steps {
            let next = out.last().unwrap().costar(step.free_face);
            out.push(next);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollapseOutcome {
    Collapsible(CollapseSequence),
    /// The search space was exhausted without reaching the target.
    NotCollapsible,
}

impl CollapseOutcome {
    pub fn is_collapsible(&self) -> bool {
        matches!(self, CollapseOutcome::Collapsible(_))
    }

    pub fn sequence(&self) -> Option<&CollapseSequence> {
        match self {
            CollapseOutcome::Collapsible(s) => Some(s),
            CollapseOutcome::NotCollapsible => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollapseBudget {
    pub max_vertices: usize,
    pub max_states: usize,
}

impl Default for CollapseBudget {
    fn default() -> Self {
        Self {
            max_vertices: 12,
            max_states: 5000,
        }
    }
}

/// Pairs `(σ, τ)` with `|σ| ≤ max_size` and `τ` the unique maximal face
/// containing `σ`, sorted by `σ`.
pub fn free_faces(x: &SimplicialComplex, max_size: usize) -> Vec<(Simplex, Simplex)> {
    let mut out = Vec::new();
    for &tau in x.facets() {
        for sigma in tau.subsets() {
            if sigma.len() <= max_size && x.facets_containing(sigma).nth(1).is_none() {
                out.push((sigma, tau));
            }
        }
    }
    out.sort();
    out
}

pub fn elementary_collapse(x: &SimplicialComplex, sigma: Simplex) -> Result<SimplicialComplex> {
    match x.unique_facet_containing(sigma) {
        Some(_) => Ok(x.costar(sigma)),
        None => Err(Error::NotFreeFace(sigma)),
    }
}

struct Search {
    d: usize,
    mode: CollapseMode,
    max_states: usize,
    dead: HashSet<Vec<Simplex>>,
    steps: Vec<CollapseStep>,
}

impl Search {
    fn normalize(&self, x: SimplicialComplex) -> SimplicialComplex {
        match self.mode {
            CollapseMode::Standard => x,
            CollapseMode::ExactD => {
                let keep: Vec<Simplex> = x
                    .facets()
                    .iter()
                    .copied()
                    .filter(|f| f.len() >= self.d)
                    .collect();
                SimplicialComplex::new(x.vertex_set(), keep).expect("subset of facets")
            }
        }
    }

    fn is_target(&self, x: &SimplicialComplex) -> bool {
        match self.mode {
            CollapseMode::Standard => x.is_void(),
            // Normalized complexes only keep facets of size ≥ d.
            CollapseMode::ExactD => x.facets().iter().all(|f| f.len() < self.d),
        }
    }

    fn forced(&self, x: &SimplicialComplex) -> Option<Simplex> {
        x.facets().iter().copied().find(|f| match self.mode {
            CollapseMode::Standard => f.len() <= self.d,
            CollapseMode::ExactD => f.len() == self.d,
        })
    }

    fn candidates(&self, x: &SimplicialComplex) -> Vec<(Simplex, Simplex)> {
        let mut out = Vec::new();
        for &tau in x.facets() {
            let sizes: Vec<usize> = match self.mode {
                CollapseMode::Standard => (0..=self.d.min(tau.len())).collect(),
                CollapseMode::ExactD if tau.len() >= self.d => vec![self.d],
                CollapseMode::ExactD => vec![],
            };
            for size in sizes {
                for sigma in tau.subsets_of_size(size) {
                    if x.facets_containing(sigma).nth(1).is_none() {
                        out.push((sigma, tau));
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn run(&mut self, x: SimplicialComplex) -> Result<bool> {
        let x = self.normalize(x);
        if self.is_target(&x) {
            return Ok(true);
        }
        if let Some(tau) = self.forced(&x) {
            self.steps.push(CollapseStep {
                free_face: tau,
                max_face: tau,
            });
            if self.run(x.costar(tau))? {
                return Ok(true);
            }
            self.steps.pop();
            return Ok(false);
        }
        if self.dead.contains(x.facets()) {
            return Ok(false);
        }
        for (sigma, tau) in self.candidates(&x) {
            self.steps.push(CollapseStep {
                free_face: sigma,
                max_face: tau,
            });
            if self.run(x.costar(sigma))? {
                return Ok(true);
            }
            self.steps.pop();
        }
        if self.dead.len() >= self.max_states {
            return Err(Error::BudgetExceeded(format!(
                "collapse search visited more than {} complexes",
                self.max_states
            )));
        }
        self.dead.insert(x.facets().to_vec());
        Ok(false)
    }
}

/// Complete search for a d-collapse certificate in the given mode.
pub fn find_d_collapse(
    x: &SimplicialComplex,
    d: usize,
    mode: CollapseMode,
    budget: CollapseBudget,
) -> Result<CollapseOutcome> {
    let n = x.vertex_set().len();
    if n > budget.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices exceeds the collapse search cap of {}",
            budget.max_vertices
        )));
    }
    if mode == CollapseMode::ExactD && d == 0 {
        return Err(Error::BadParams("exact mode requires d ≥ 1".into()));
    }
    let mut search = Search {
        d,
        mode,
        max_states: budget.max_states,
        dead: HashSet::new(),
        steps: Vec::new(),
    };
    Ok(if search.run(x.clone())? {
        CollapseOutcome::Collapsible(CollapseSequence {
            d,
            mode,
            steps: search.steps,
        })
    } else {
        CollapseOutcome::NotCollapsible
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceCheck {
    pub valid: bool,
    /// Index of the first failing step; equal to the step count when only
    /// the terminal condition fails.
    pub failed_step: Option<usize>,
}

/// Replays a certificate, checking freeness, size bounds and the terminal
/// condition of its mode.
pub fn verify_sequence(x: &SimplicialComplex, seq: &CollapseSequence) -> SequenceCheck {
    let fail = |i| SequenceCheck {
        valid: false,
        failed_step: Some(i),
    };
    let mut cur = x.clone();
    for (i, step) in seq.steps.iter().enumerate() {
        let size_ok = match seq.mode {
            CollapseMode::Standard => step.free_face.len() <= seq.d,
            CollapseMode::ExactD => step.free_face.len() == seq.d,
        };
        if !size_ok || !step.free_face.is_subset(step.max_face) {
            return fail(i);
        }
        if cur.unique_facet_containing(step.free_face) != Some(step.max_face) {
            return fail(i);
        }
        cur = cur.costar(step.free_face);
    }
    let done = match seq.mode {
        CollapseMode::Standard => cur.is_void(),
        CollapseMode::ExactD => cur.dim().is_none_or(|k| k < seq.d as isize - 1),
    };
    if done {
        SequenceCheck {
            valid: true,
            failed_step: None,
        }
    } else {
        fail(seq.steps.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets).unwrap()
    }

    fn s(v: &[usize]) -> Simplex {
        Simplex::of(v)
    }

    fn collapsible(x: &SimplicialComplex, d: usize, mode: CollapseMode) -> bool {
        find_d_collapse(x, d, mode, CollapseBudget::default())
            .unwrap()
            .is_collapsible()
    }

    #[test]
    fn free_face_examples() {
        let tri = cx(4, &[&[1, 2, 3]]);
        let t = s(&[1, 2, 3]);
        assert_eq!(
            free_faces(&tri, 1),
            vec![
                (Simplex::EMPTY, t),
                (s(&[1]), t),
                (s(&[2]), t),
                (s(&[3]), t)
            ]
        );
        let hollow = cx(4, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(free_faces(&hollow, 1).is_empty());
        let path = cx(4, &[&[1, 2], &[2, 3]]);
        assert_eq!(
            free_faces(&path, 1),
            vec![(s(&[1]), s(&[1, 2])), (s(&[3]), s(&[2, 3]))]
        );
    }

    #[test]
    fn elementary_collapse_examples() {
        let tri = cx(4, &[&[1, 2, 3]]);
        assert_eq!(
            elementary_collapse(&tri, s(&[1])).unwrap().facets(),
            &[s(&[2, 3])]
        );
        let path = cx(4, &[&[1, 2], &[2, 3]]);
        assert_eq!(
            elementary_collapse(&path, s(&[1])).unwrap().facets(),
            &[s(&[2, 3])]
        );
        let e = SimplicialComplex::empty(Simplex::range(2));
        assert!(elementary_collapse(&e, Simplex::EMPTY).unwrap().is_void());
        assert_eq!(
            elementary_collapse(&path, s(&[2])),
            Err(Error::NotFreeFace(s(&[2])))
        );
    }

    #[test]
    fn search_examples() {
        let tri = cx(3, &[&[0, 1, 2]]);
        let hollow = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        for mode in [CollapseMode::Standard, CollapseMode::ExactD] {
            assert!(collapsible(&tri, 1, mode));
            assert!(!collapsible(&hollow, 1, mode));
            assert!(collapsible(&hollow, 2, mode));
        }
        let out =
            find_d_collapse(&tri, 1, CollapseMode::Standard, CollapseBudget::default()).unwrap();
        let seq = out.sequence().unwrap();
        assert!(verify_sequence(&tri, seq).valid);
    }

    #[test]
    fn sphere_needs_full_dimension() {
        let sphere = SimplicialComplex::boundary_complex(Simplex::range(4)).unwrap();
        assert!(!collapsible(&sphere, 2, CollapseMode::Standard));
        assert!(collapsible(&sphere, 3, CollapseMode::Standard));
        assert!(!collapsible(&sphere, 2, CollapseMode::ExactD));
        assert!(collapsible(&sphere, 3, CollapseMode::ExactD));
    }

    #[test]
    fn verify_rejects_bad_sequences() {
        let path = cx(4, &[&[1, 2], &[2, 3]]);
        let seq = find_d_collapse(&path, 1, CollapseMode::Standard, CollapseBudget::default())
            .unwrap()
            .sequence()
            .unwrap()
            .clone();
        assert!(verify_sequence(&path, &seq).valid);

        let mut bad = seq.clone();
        bad.steps.insert(
            0,
            CollapseStep {
                free_face: s(&[2]),
                max_face: s(&[1, 2]),
            },
        );
        assert_eq!(verify_sequence(&path, &bad).failed_step, Some(0));

        let mut short = seq.clone();
        short.steps.pop();
        let check = verify_sequence(&path, &short);
        assert!(!check.valid);
        assert_eq!(check.failed_step, Some(short.steps.len()));
    }

    #[test]
    fn budget_is_enforced() {
        let x = cx(13, &[&[0, 12]]);
        assert!(matches!(
            find_d_collapse(&x, 1, CollapseMode::Standard, CollapseBudget::default()),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
