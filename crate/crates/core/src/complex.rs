//! Finite abstract simplicial complexes stored by their maximal faces.
//!
//! Vertices are dense indices below [`MAX_VERTICES`]; a [`Simplex`] is a set of
//! such indices packed into a bitmask, ordered lexicographically on its sorted
//! vertex list. A [`SimplicialComplex`] keeps a vertex set together with an
//! antichain of facets. Downward closure is implicit: a set is a face iff it
//! lies inside some facet.
//!
//! Two degenerate states are kept apart: the *void* complex has no faces at
//! all, while the *empty* complex `{∅}` has exactly the empty face.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Hard representation limit on vertex ids.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::InvalidVertex(v));
            }
            bits |= 1 << v;
        }
        Ok(Simplex(bits))
    }

    /// Panicking constructor for literals in tests and generators.
    pub fn of(vertices: &[VertexId]) -> Self {
        Self::new(vertices.iter().copied()).expect("vertex id out of range")
    }

    pub const fn from_bits(bits: u64) -> Self {
        Simplex(bits)
    }

    /// The simplex `{0, .., n-1}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == MAX_VERTICES {
            Simplex(u64::MAX)
        } else {
            Simplex((1u64 << n) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub const fn contains(self, v: VertexId) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub const fn is_subset(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Simplex) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    pub const fn intersection(self, other: Simplex) -> Simplex {
        Simplex(self.0 & other.0)
    }

    pub const fn difference(self, other: Simplex) -> Simplex {
        Simplex(self.0 & !other.0)
    }

    pub fn with(self, v: VertexId) -> Simplex {
        Simplex(self.0 | (1 << v))
    }

    pub fn without(self, v: VertexId) -> Simplex {
        Simplex(self.0 & !(1 << v))
    }

    pub fn min_vertex(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_vertex(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.vertices().collect()
    }

    /// All subsets, including `∅` and `self`, in no particular order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    pub fn proper_subsets(self) -> impl Iterator<Item = Simplex> {
        self.subsets().filter(move |s| *s != self)
    }

    /// Subsets of exactly `k` elements in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<Simplex> {
        let verts = self.to_vec();
        let mut out = Vec::new();
        if k > verts.len() {
            return out;
        }
        let n = verts.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(Simplex(idx.iter().fold(0, |b, &i| b | 1 << verts[i])));
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// Compares by size first, then lexicographically.
    pub fn graded_cmp(&self, other: &Simplex) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The sorted lists agree below the lowest differing vertex `v`. The
        // side holding `v` is smaller unless the other side ends before `v`.
        let v = diff.trailing_zeros();
        let above = if v == 63 { 0 } else { !0u64 << (v + 1) };
        if self.0 & (1 << v) != 0 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<VertexId> = Vec::deserialize(d)?;
        Simplex::new(v).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<VertexId> for Simplex {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        Simplex::new(iter).expect("vertex id out of range")
    }
}

/// Ascending iterator over the vertices of a simplex.
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Simplex;

    fn next(&mut self) -> Option<Simplex> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(Simplex(cur))
    }
}

/// A finite abstract simplicial complex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Simplex,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary generating faces; non-maximal and
    /// duplicate generators are dropped.
    pub fn new<I: IntoIterator<Item = Simplex>>(vertices: Simplex, generators: I) -> Result<Self> {
        let generators: Vec<Simplex> = generators.into_iter().collect();
        for g in &generators {
            if let Some(v) = g.difference(vertices).min_vertex() {
                return Err(Error::InvalidVertex(v));
            }
        }
        Ok(Self {
            vertices,
            facets: maximal(generators),
        })
    }

    /// Complex on `0..n` generated by the given vertex lists.
    pub fn from_facets(n: usize, facets: &[&[VertexId]]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidVertex(n - 1));
        }
        let gens = facets
            .iter()
            .map(|f| Simplex::new(f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Simplex::range(n), gens)
    }

    /// The complex with no faces at all.
    pub fn void(vertices: Simplex) -> Self {
        Self {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty(vertices: Simplex) -> Self {
        Self {
            vertices,
            facets: vec![Simplex::EMPTY],
        }
    }

    /// The full simplex `2^V`.
    pub fn complete(vertices: Simplex) -> Self {
        Self {
            vertices,
            facets: vec![vertices],
        }
    }

    /// `∂2^B`: all proper subsets of `B`.
    pub fn boundary_complex(ground: Simplex) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        let facets = ground
            .vertices()
            .map(|v| ground.without(v))
            .collect::<Vec<_>>();
        Ok(Self {
            vertices: ground,
            facets: maximal(facets),
        })
    }

    pub fn vertex_set(&self) -> Simplex {
        self.vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}` exactly.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// Membership without range checking.
    pub fn contains(&self, sigma: Simplex) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    pub fn is_face(&self, sigma: Simplex) -> Result<bool> {
        if let Some(v) = sigma.difference(self.vertices).min_vertex() {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.contains(sigma))
    }

    /// Facets containing `sigma`.
    pub fn facets_containing(&self, sigma: Simplex) -> impl Iterator<Item = Simplex> + '_ {
        self.facets
            .iter()
            .copied()
            .filter(move |f| sigma.is_subset(*f))
    }

    /// The unique maximal face containing `sigma`, if there is exactly one.
    pub fn unique_facet_containing(&self, sigma: Simplex) -> Option<Simplex> {
        let mut it = self.facets_containing(sigma);
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    /// Faces of dimension `dim` (or all faces), each once, ordered by size
    /// and then lexicographically.
    pub fn faces(&self, dim: Option<isize>) -> Vec<Simplex> {
        let mut set = BTreeSet::new();
        match dim {
            None => {
                for f in &self.facets {
                    set.extend(f.subsets());
                }
            }
            Some(k) if k >= -1 => {
                let size = (k + 1) as usize;
                for f in &self.facets {
                    if f.len() >= size {
                        set.extend(f.subsets_of_size(size));
                    }
                }
            }
            Some(_) => {}
        }
        let mut out: Vec<Simplex> = set.into_iter().collect();
        out.sort_by(Simplex::graded_cmp);
        out
    }

    /// Faces bucketed by size: index `s` holds the faces with `s` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<Simplex>> {
        let top = self.facets.iter().map(|f| f.len()).max();
        let Some(top) = top else { return Vec::new() };
        let mut sets = vec![BTreeSet::new(); top + 1];
        for f in &self.facets {
            for s in f.subsets() {
                sets[s.len()].insert(s);
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces(None).len()
    }

    /// `X[U]`.
    pub fn induced(&self, subset: Simplex) -> Result<Self> {
        if let Some(v) = subset.difference(self.vertices).min_vertex() {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.induced_unchecked(subset))
    }

    pub(crate) fn induced_unchecked(&self, subset: Simplex) -> Self {
        Self {
            vertices: subset,
            facets: maximal(self.facets.iter().map(|f| f.intersection(subset)).collect()),
        }
    }

    /// `lk(X, σ)`, on vertex set `V ∖ σ`.
    pub fn link(&self, sigma: Simplex) -> Result<Self> {
        if !self.is_face(sigma)? {
            return Err(Error::NotAFace(sigma));
        }
        Ok(self.link_unchecked(sigma))
    }

    pub(crate) fn link_unchecked(&self, sigma: Simplex) -> Self {
        Self {
            vertices: self.vertices.difference(sigma),
            facets: maximal(
                self.facets_containing(sigma)
                    .map(|f| f.difference(sigma))
                    .collect(),
            ),
        }
    }

    /// `cost(X, σ)`: faces not containing `σ`.
    pub fn costar(&self, sigma: Simplex) -> Self {
        let mut gens = Vec::with_capacity(self.facets.len());
        for &f in &self.facets {
            if !sigma.is_subset(f) {
                gens.push(f);
            } else if !sigma.is_empty() {
                // The largest faces of f avoiding σ drop one vertex of σ.
                gens.extend(sigma.vertices().map(|v| f.without(v)));
            }
        }
        Self {
            vertices: self.vertices,
            facets: maximal(gens),
        }
    }

    /// `X ∖ v`.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Self> {
        self.induced(self.vertices.without(v))
    }

    /// `X * Y` on disjoint vertex sets.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let shared = self.vertices.intersection(other.vertices);
        if !shared.is_empty() {
            return Err(Error::OverlappingVertexSets(shared));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a.union(b));
            }
        }
        Ok(Self {
            vertices: self.vertices.union(other.vertices),
            facets: maximal(facets),
        })
    }

    /// Same faces, possibly different vertex sets.
    pub fn same_faces(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(V={}, facets={:?})", self.vertices, self.facets)
    }
}

/// Reduces generators to their inclusion-maximal members, sorted
/// lexicographically.
pub(crate) fn maximal(mut gens: Vec<Simplex>) -> Vec<Simplex> {
    gens.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Simplex> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|f| g.is_subset(*f)) {
            out.push(g);
        }
    }
    out.sort();
    out
}
