//! Reduced simplicial homology ranks and the d-Leray property.
//!
//! Chain groups are indexed by face size; the empty face spans the degree −1
//! group, so `∂_0` is the augmentation map. With that convention `{∅}` has
//! `H̃_{-1}` of rank one and every other nonvoid complex has `H̃_{-1} = 0`.

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact::{rank_gf2, rank_integer};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    #[default]
    Rationals,
    Gf2,
}

/// Boundary map `C_k → C_{k-1}` with rows for `(k-1)`-faces and columns for
/// `k`-faces, both in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: Vec<Simplex>,
    pub cols: Vec<Simplex>,
    pub entries: Vec<Vec<i64>>,
}

impl BoundaryMatrix {
    pub fn rank(&self, field: Field) -> usize {
        matrix_rank(&self.entries, self.cols.len(), field)
    }

    /// Product `self · other`, used to check `∂_k ∘ ∂_{k+1} = 0`.
    pub fn compose(&self, other: &BoundaryMatrix) -> Vec<Vec<i64>> {
        let inner = self.cols.len();
        assert_eq!(inner, other.rows.len(), "incompatible boundary maps");
        self.entries
            .iter()
            .map(|row| {
                (0..other.cols.len())
                    .map(|j| (0..inner).map(|i| row[i] * other.entries[i][j]).sum())
                    .collect()
            })
            .collect()
    }
}

/// Reduced Betti numbers; `ranks[k]` is the rank of `H̃_k` for `k ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub minus_one: usize,
    pub ranks: Vec<usize>,
    pub field: Field,
}

impl BettiVector {
    pub fn get(&self, k: isize) -> usize {
        match k {
            -1 => self.minus_one,
            k if k >= 0 => self.ranks.get(k as usize).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Least `k ≥ -1` with `H̃_i = 0` for every `i ≥ k`.
    pub fn vanishing_degree(&self) -> isize {
        let top = (0..self.ranks.len()).rev().find(|&k| self.ranks[k] != 0);
        match top {
            Some(k) => k as isize + 1,
            None if self.minus_one != 0 => 0,
            None => -1,
        }
    }
}

fn sign_entries(face: Simplex, rows: &[Simplex], col: usize, entries: &mut [Vec<i64>]) {
    for (i, v) in face.vertices().enumerate() {
        let r = rows
            .binary_search(&face.without(v))
            .expect("boundary face missing from complex");
        entries[r][col] = if i % 2 == 0 { 1 } else { -1 };
    }
}

fn build_matrix(lower: &[Simplex], upper: &[Simplex], field: Field) -> BoundaryMatrix {
    let mut entries = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, &f) in upper.iter().enumerate() {
        sign_entries(f, lower, j, &mut entries);
    }
    if field == Field::Gf2 {
        for row in &mut entries {
            for x in row.iter_mut() {
                *x = x.abs();
            }
        }
    }
    BoundaryMatrix {
        rows: lower.to_vec(),
        cols: upper.to_vec(),
        entries,
    }
}

fn matrix_rank(entries: &[Vec<i64>], ncols: usize, field: Field) -> usize {
    if entries.is_empty() || ncols == 0 {
        return 0;
    }
    match field {
        Field::Rationals => rank_integer(entries),
        Field::Gf2 => {
            let words = ncols.div_ceil(64);
            let rows = entries
                .iter()
                .map(|row| {
                    let mut bits = vec![0u64; words];
                    for (j, &x) in row.iter().enumerate() {
                        if x & 1 != 0 {
                            bits[j / 64] |= 1 << (j % 64);
                        }
                    }
                    bits
                })
                .collect();
            rank_gf2(rows)
        }
    }
}

fn faces_of_size(x: &SimplicialComplex, size: usize) -> Vec<Simplex> {
    x.faces(Some(size as isize - 1))
}

/// `∂_k` for `0 ≤ k ≤ dim(X)`.
pub fn boundary_matrix(x: &SimplicialComplex, k: isize, field: Field) -> Result<BoundaryMatrix> {
    let max = x.dim().unwrap_or(-2);
    if k < 0 || k > max {
        return Err(Error::DimensionOutOfRange { dim: k, max });
    }
    let size = k as usize + 1;
    Ok(build_matrix(
        &faces_of_size(x, size - 1),
        &faces_of_size(x, size),
        field,
    ))
}

/// Reduced Betti numbers `H̃_k` for every `k ≥ from` (clamped to `-1`).
fn betti_from(x: &SimplicialComplex, from: isize, field: Field) -> Result<Vec<(isize, usize)>> {
    let Some(dim) = x.dim() else {
        return Err(Error::VoidComplex);
    };
    let from = from.max(-1);
    if from > dim {
        return Ok(Vec::new());
    }
    // Degree k lives in size k+1, so sizes from..=dim+1 are needed.
    let lo = from.max(0) as usize;
    let chains: Vec<Vec<Simplex>> = (lo..=(dim + 1) as usize)
        .map(|s| faces_of_size(x, s))
        .collect();
    let chain = |size: usize| -> &[Simplex] { &chains[size - lo] };
    // rank ∂ from size s to size s−1, for s in lo+1..=dim+1
    let mut rank_down = vec![0usize; chains.len() + 1];
    for size in lo + 1..=(dim + 1) as usize {
        let m = build_matrix(chain(size - 1), chain(size), field);
        rank_down[size - lo] = m.rank(field);
    }
    let mut out = Vec::new();
    for k in from..=dim {
        let size = (k + 1) as usize;
        let cycles = chain(size).len() - if size > lo { rank_down[size - lo] } else { 0 };
        let boundaries = rank_down.get(size + 1 - lo).copied().unwrap_or(0);
        out.push((k, cycles - boundaries));
    }
    Ok(out)
}

pub fn betti_vector(x: &SimplicialComplex, field: Field) -> Result<BettiVector> {
    let all = betti_from(x, -1, field)?;
    let mut minus_one = 0;
    let mut ranks = Vec::new();
    for (k, b) in all {
        if k == -1 {
            minus_one = b;
        } else {
            ranks.push(b);
        }
    }
    Ok(BettiVector {
        minus_one,
        ranks,
        field,
    })
}

/// Rank of `H̃_k(X)`.
pub fn reduced_betti(x: &SimplicialComplex, k: isize, field: Field) -> Result<usize> {
    if x.is_void() {
        return Err(Error::VoidComplex);
    }
    if k < -1 {
        return Ok(0);
    }
    Ok(betti_from(x, k, field)?
        .into_iter()
        .find(|&(j, _)| j == k)
        .map_or(0, |(_, b)| b))
}

/// Least `k ≥ d` with `H̃_k(X) ≠ 0`, if any. The void complex has none.
pub fn first_nonvanishing_from(x: &SimplicialComplex, d: isize, field: Field) -> Option<isize> {
    match x.dim() {
        None => None,
        Some(dim) if dim < d => None,
        Some(_) => betti_from(x, d, field)
            .ok()?
            .into_iter()
            .find(|&(_, b)| b != 0)
            .map(|(k, _)| k),
    }
}

/// Outcome of a d-Leray check, with the first violation in graded
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LerayReport {
    pub holds: bool,
    /// The vertex subset (induced check) or face (link check) that fails.
    pub witness: Option<Simplex>,
    pub degree: Option<isize>,
}

impl LerayReport {
    fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
            degree: None,
        }
    }

    fn fail(witness: Simplex, degree: isize) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
            degree: Some(degree),
        }
    }
}

fn check_sweep_budget(x: &SimplicialComplex, max_vertices: usize) -> Result<()> {
    let n = x.vertex_set().len();
    if n > max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices exceeds the d-Leray sweep cap of {max_vertices}"
        )));
    }
    Ok(())
}

/// d-Leray by definition: every induced subcomplex has `H̃_k = 0` for `k ≥ d`.
pub fn is_d_leray_induced(
    x: &SimplicialComplex,
    d: usize,
    field: Field,
    max_vertices: usize,
) -> Result<LerayReport> {
    check_sweep_budget(x, max_vertices)?;
    let mut subsets: Vec<Simplex> = x.vertex_set().subsets().collect();
    subsets.sort_by(Simplex::graded_cmp);
    for u in subsets {
        let sub = x.induced_unchecked(u);
        if let Some(k) = first_nonvanishing_from(&sub, d as isize, field) {
            return Ok(LerayReport::fail(u, k));
        }
    }
    Ok(LerayReport::pass())
}

/// d-Leray via links: `H̃_k(lk(X, σ)) = 0` for every face `σ` and `k ≥ d`.
pub fn is_d_leray_links(
    x: &SimplicialComplex,
    d: usize,
    field: Field,
    max_vertices: usize,
) -> Result<LerayReport> {
    check_sweep_budget(x, max_vertices)?;
    for sigma in x.faces(None) {
        let lk = x.link_unchecked(sigma);
        if let Some(k) = first_nonvanishing_from(&lk, d as isize, field) {
            return Ok(LerayReport::fail(sigma, k));
        }
    }
    Ok(LerayReport::pass())
}

/// `ℓ_σ`: least `k ≥ -1` such that `H̃_i(lk(X, σ)) = 0` for all `i ≥ k`.
pub fn ell_sigma(x: &SimplicialComplex, sigma: Simplex, field: Field) -> Result<isize> {
    let lk = x.link(sigma)?;
    Ok(betti_vector(&lk, field)?.vanishing_degree())
}
