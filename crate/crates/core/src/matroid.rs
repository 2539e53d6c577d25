//! Matroids as rank oracles.
//!
//! Every matroid lives on the dense ground set `0..n`. Ranks are exact:
//! linear matroids use rational elimination, explicit families are scanned,
//! and tolerance matroids use the closed form `min(|A|, ρ(A) + t)` on top of
//! their base.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::complex::Simplex;
use crate::error::{Error, Result};
use crate::exact::rank_rational;
use crate::rational::{self, Rational, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidKind {
    Uniform {
        r: usize,
    },
    /// Capacity one per block.
    Partition {
        blocks: Vec<Simplex>,
    },
    /// One vector per ground element.
    Linear {
        vectors: Vec<Vec<Rational>>,
    },
    Explicit {
        independent: BTreeSet<Simplex>,
    },
    Tolerance {
        base: Box<Matroid>,
        t: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    kind: MatroidKind,
    /// Lazily filled rank of every subset, for small linear and explicit
    /// matroids.
    table: OnceLock<Vec<u8>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.kind == other.kind
    }
}

impl Eq for Matroid {}

const TABLE_MAX_GROUND: usize = 12;

fn check_n(n: usize) -> Result<()> {
    if n > crate::complex::MAX_VERTICES {
        return Err(Error::InvalidVertex(n - 1));
    }
    Ok(())
}

impl Matroid {
    fn make(n: usize, kind: MatroidKind) -> Self {
        Self {
            n,
            kind,
            table: OnceLock::new(),
        }
    }

    pub fn uniform(n: usize, r: usize) -> Result<Self> {
        check_n(n)?;
        if r > n {
            return Err(Error::BadParams(format!(
                "uniform rank {r} exceeds ground size {n}"
            )));
        }
        Ok(Self::make(n, MatroidKind::Uniform { r }))
    }

    /// The free matroid: every subset is independent.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// Blocks must partition `0..n` for some `n`.
    pub fn partition(blocks: Vec<Simplex>) -> Result<Self> {
        let mut seen = Simplex::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::BadParams("empty partition block".into()));
            }
            if !seen.is_disjoint(*b) {
                return Err(Error::BadParams(format!(
                    "blocks overlap at {}",
                    seen.intersection(*b)
                )));
            }
            seen = seen.union(*b);
        }
        let n = seen.len();
        if seen != Simplex::range(n) {
            return Err(Error::BadParams("blocks must cover 0..n".into()));
        }
        Ok(Self::make(n, MatroidKind::Partition { blocks }))
    }

    /// Partition matroid from color labels `1..=r`, one per element.
    pub fn from_colors(colors: &[usize]) -> Result<Self> {
        let r = colors.iter().copied().max().unwrap_or(0);
        let mut blocks = vec![Simplex::EMPTY; r];
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 {
                return Err(Error::BadParams("colors start at 1".into()));
            }
            blocks[c - 1] = blocks[c - 1].with(i);
        }
        Self::partition(blocks)
    }

    pub fn linear(vectors: Vec<Vec<Rational>>) -> Result<Self> {
        check_n(vectors.len())?;
        if let Some(first) = vectors.first() {
            if let Some(v) = vectors.iter().find(|v| v.len() != first.len()) {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    found: v.len(),
                });
            }
        }
        Ok(Self::make(vectors.len(), MatroidKind::Linear { vectors }))
    }

    /// Explicit independence family; no axioms are checked here (see
    /// [`check_matroid_axioms`]).
    pub fn explicit(n: usize, family: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        check_n(n)?;
        let ground = Simplex::range(n);
        let independent: BTreeSet<Simplex> = family.into_iter().collect();
        if let Some(s) = independent.iter().find(|s| !s.is_subset(ground)) {
            return Err(Error::NotASubset(*s));
        }
        Ok(Self::make(n, MatroidKind::Explicit { independent }))
    }

    /// `M^t = {σ : ρ(σ) ≥ |σ| − t}`.
    pub fn tolerance(&self, t: usize) -> Result<Self> {
        let rank = self.full_rank();
        if t > rank {
            return Err(Error::ToleranceOutOfRange { t, rank });
        }
        Ok(Self::make(
            self.n,
            MatroidKind::Tolerance {
                base: Box::new(self.clone()),
                t,
            },
        ))
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Simplex {
        Simplex::range(self.n)
    }

    fn check(&self, a: Simplex) -> Result<()> {
        if a.is_subset(self.ground()) {
            Ok(())
        } else {
            Err(Error::NotASubset(a))
        }
    }

    pub fn rank(&self, a: Simplex) -> Result<usize> {
        self.check(a)?;
        Ok(self.rank_unchecked(a))
    }

    pub(crate) fn rank_unchecked(&self, a: Simplex) -> usize {
        let slow = matches!(
            self.kind,
            MatroidKind::Linear { .. } | MatroidKind::Explicit { .. }
        );
        if slow && self.n <= TABLE_MAX_GROUND {
            let table = self.table.get_or_init(|| {
                (0..1u64 << self.n)
                    .map(|b| self.compute_rank(Simplex::from_bits(b)) as u8)
                    .collect()
            });
            return table[a.bits() as usize] as usize;
        }
        self.compute_rank(a)
    }

    fn compute_rank(&self, a: Simplex) -> usize {
        match &self.kind {
            MatroidKind::Uniform { r } => a.len().min(*r),
            MatroidKind::Partition { blocks } => {
                blocks.iter().filter(|b| !b.is_disjoint(a)).count()
            }
            MatroidKind::Linear { vectors } => {
                let rows: Vec<Vec<Rational>> = a.vertices().map(|v| vectors[v].clone()).collect();
                rank_rational(&rows)
            }
            MatroidKind::Explicit { independent } => independent
                .iter()
                .filter(|s| s.is_subset(a))
                .map(|s| s.len())
                .max()
                .unwrap_or(0),
            MatroidKind::Tolerance { base, t } => a.len().min(base.rank_unchecked(a) + t),
        }
    }

    /// `ρ(V)`.
    pub fn full_rank(&self) -> usize {
        self.rank_unchecked(self.ground())
    }

    pub fn is_independent(&self, a: Simplex) -> Result<bool> {
        Ok(self.rank(a)? == a.len())
    }

    /// `span(U) = {v : ρ(U ∪ {v}) = ρ(U)}`.
    pub fn span(&self, u: Simplex) -> Result<Simplex> {
        let base = self.rank(u)?;
        Ok(self
            .ground()
            .vertices()
            .filter(|&v| self.rank_unchecked(u.with(v)) == base)
            .collect())
    }

    /// All independent sets, by enumeration of the ground set.
    pub fn independent_sets(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self
            .ground()
            .subsets()
            .filter(|s| self.rank_unchecked(*s) == s.len())
            .collect();
        out.sort_by(Simplex::graded_cmp);
        out
    }

    /// A set of size `t` with rank at least `min(t, r)`, built greedily.
    pub fn spanning_set_of_size(&self, t: usize) -> Result<Simplex> {
        if t > self.n {
            return Err(Error::BadParams(format!(
                "size {t} exceeds ground size {}",
                self.n
            )));
        }
        let mut set = Simplex::EMPTY;
        for v in self.ground().vertices() {
            if set.len() == t {
                break;
            }
            if self.rank_unchecked(set.with(v)) > self.rank_unchecked(set) {
                set = set.with(v);
            }
        }
        for v in self.ground().vertices() {
            if set.len() == t {
                break;
            }
            set = set.with(v);
        }
        Ok(set)
    }
}

/// Rank of the union `M1 ∨ M2` on `A` via
/// `min_{B ⊆ A} ρ1(B) + ρ2(B) + |A ∖ B|`.
pub fn matroid_union_rank(m1: &Matroid, m2: &Matroid, a: Simplex) -> Result<usize> {
    if m1.n != m2.n {
        return Err(Error::BadParams(format!(
            "ground sizes differ: {} and {}",
            m1.n, m2.n
        )));
    }
    m1.check(a)?;
    if a.len() > 16 {
        return Err(Error::BudgetExceeded(format!(
            "union rank minimizes over 2^{} subsets (cap 2^16)",
            a.len()
        )));
    }
    Ok(a.subsets()
        .map(|b| m1.rank_unchecked(b) + m2.rank_unchecked(b) + a.difference(b).len())
        .min()
        .unwrap_or(0))
}

/// The first axiom violation found, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    EmptySetMissing,
    /// `set` is in the family but its subset `missing` is not.
    DownwardClosure {
        set: Simplex,
        missing: Simplex,
    },
    /// No element of `larger ∖ smaller` extends `smaller`.
    Exchange {
        smaller: Simplex,
        larger: Simplex,
    },
}

/// Checks the independence axioms of an explicit family over `ground` by
/// full enumeration.
pub fn check_matroid_axioms(
    ground: Simplex,
    family: &[Simplex],
) -> Result<std::result::Result<(), AxiomViolation>> {
    if ground.len() > 9 {
        return Err(Error::BudgetExceeded(format!(
            "axiom check enumerates a ground of {} > 9 elements",
            ground.len()
        )));
    }
    if let Some(s) = family.iter().find(|s| !s.is_subset(ground)) {
        return Err(Error::NotASubset(*s));
    }
    let set: BTreeSet<Simplex> = family.iter().copied().collect();
    if !set.contains(&Simplex::EMPTY) {
        return Ok(Err(AxiomViolation::EmptySetMissing));
    }
    let mut sorted: Vec<Simplex> = set.iter().copied().collect();
    sorted.sort_by(Simplex::graded_cmp);
    for &s in &sorted {
        for v in s.vertices() {
            let sub = s.without(v);
            if !set.contains(&sub) {
                return Ok(Err(AxiomViolation::DownwardClosure {
                    set: s,
                    missing: sub,
                }));
            }
        }
    }
    for &a in &sorted {
        for &b in &sorted {
            if a.len() < b.len() && !b.difference(a).vertices().any(|x| set.contains(&a.with(x))) {
                return Ok(Err(AxiomViolation::Exchange {
                    smaller: a,
                    larger: b,
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// JSON form of a matroid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatroidSpec {
    Uniform {
        n: usize,
        r: usize,
    },
    Partition {
        blocks: Vec<Simplex>,
    },
    /// Row `i` is the vector of ground element `i`.
    Linear {
        matrix: Vec<Vec<Q>>,
    },
    Explicit {
        n: usize,
        independent: Vec<Simplex>,
    },
    Tolerance {
        base: Box<MatroidSpec>,
        t: usize,
    },
}

impl MatroidSpec {
    pub fn build(self) -> Result<Matroid> {
        match self {
            MatroidSpec::Uniform { n, r } => Matroid::uniform(n, r),
            MatroidSpec::Partition { blocks } => Matroid::partition(blocks),
            MatroidSpec::Linear { matrix } => {
                Matroid::linear(matrix.into_iter().map(rational::from_wire).collect())
            }
            MatroidSpec::Explicit { n, independent } => Matroid::explicit(n, independent),
            MatroidSpec::Tolerance { base, t } => base.build()?.tolerance(t),
        }
    }
}

impl From<&Matroid> for MatroidSpec {
    fn from(m: &Matroid) -> Self {
        match &m.kind {
            MatroidKind::Uniform { r } => MatroidSpec::Uniform { n: m.n, r: *r },
            MatroidKind::Partition { blocks } => MatroidSpec::Partition {
                blocks: blocks.clone(),
            },
            MatroidKind::Linear { vectors } => MatroidSpec::Linear {
                matrix: vectors.iter().map(|v| rational::to_wire(v)).collect(),
            },
            MatroidKind::Explicit { independent } => MatroidSpec::Explicit {
                n: m.n,
                independent: independent.iter().copied().collect(),
            },
            MatroidKind::Tolerance { base, t } => MatroidSpec::Tolerance {
                base: Box::new(MatroidSpec::from(base.as_ref())),
                t: *t,
            },
        }
    }
}
