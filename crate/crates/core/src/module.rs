//! Module-level data: dimension vectors, explicit representations,
//! catalog entries, direct sums and short exact sequence records.

use serde::{Deserialize, Serialize};

use crate::linalg::{self, Field, Mat};

/// Index of an indecomposable in its algebra's catalog.
pub type IndecId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; panics if `other` is not dominated.
    pub fn sub(&self, other: &DimVector) -> DimVector {
        DimVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b).expect("dimension vector underflow")).collect(),
        )
    }

    pub fn dominates(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// `Some(k)` when `self = k * unit` for a nonzero `unit`.
    pub fn multiple_of(&self, unit: &DimVector) -> Option<usize> {
        let k = self.total() / unit.total().max(1);
        let scaled: Vec<usize> = unit.0.iter().map(|x| x * k).collect();
        (scaled == self.0).then_some(k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Descriptor {
    /// `M(top, length)`: uniserial with radical layers `top, top+1, ...`.
    Uniserial { top: usize, length: usize },
    /// Interval module on `[a, b]` with identity maps.
    Interval { a: usize, b: usize },
}

impl std::fmt::Display for Descriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Descriptor::Uniserial { top, length } => write!(f, "U({top},{length})"),
            Descriptor::Interval { a, b } => write!(f, "I[{a},{b}]"),
        }
    }
}

/// A quiver representation: one space per vertex and, for each arrow
/// `s -> t` of the action quiver, a `dims[t] x dims[s]` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl Representation {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn offsets(&self, to: &Representation) -> (Vec<usize>, usize) {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for v in 0..self.dims.len() {
            off.push(acc);
            acc += to.dims[v] * self.dims[v];
        }
        (off, acc)
    }

    /// Linear constraints on `(f_v)_v` expressing `to.map(a) f_s = f_t self.map(a)`
    /// for every arrow. Unknown `f_v[r][c]` sits at `off[v] + r * dims[v] + c`.
    pub fn hom_system(&self, to: &Representation, arrows: &[(usize, usize)]) -> (Vec<Vec<i64>>, usize) {
        let (off, nvars) = self.offsets(to);
        let mut rows = Vec::new();
        for (k, &(s, t)) in arrows.iter().enumerate() {
            let (ma, na) = (&self.maps[k], &to.maps[k]);
            for r in 0..to.dims[t] {
                for c in 0..self.dims[s] {
                    let mut row = vec![0i64; nvars];
                    for q in 0..to.dims[s] {
                        row[off[s] + q * self.dims[s] + c] += na.get(r, q) as i64;
                    }
                    for q in 0..self.dims[t] {
                        row[off[t] + r * self.dims[t] + q] -= ma.get(q, c) as i64;
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        (rows, nvars)
    }

    /// `dim Hom(self, to)` as unknowns minus rank of the commuting-square system.
    pub fn hom_dim(&self, to: &Representation, arrows: &[(usize, usize)], field: Field) -> usize {
        let (rows, nvars) = self.hom_system(to, arrows);
        if rows.is_empty() {
            return nvars;
        }
        nvars - linalg::rank_int(&rows, nvars, field)
    }

    /// A basis of `Hom(self, to)` modulo `p`, each element split into vertex matrices.
    pub fn hom_basis(&self, to: &Representation, arrows: &[(usize, usize)], p: u64) -> Vec<Vec<Mat>> {
        let (rows, nvars) = self.hom_system(to, arrows);
        let mut m = Mat::zeros(rows.len(), nvars);
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, linalg::reduce(x, p));
            }
        }
        linalg::nullspace_mod(&m, p).into_iter().map(|v| self.unflatten(to, &v)).collect()
    }

    /// Split a flat unknown vector of `Hom(self, to)` into vertex matrices.
    pub fn unflatten(&self, to: &Representation, v: &[u64]) -> Vec<Mat> {
        let (off, _) = self.offsets(to);
        (0..self.dims.len())
            .map(|w| {
                let mut f = Mat::zeros(to.dims[w], self.dims[w]);
                for r in 0..to.dims[w] {
                    for c in 0..self.dims[w] {
                        f.set(r, c, v[off[w] + r * self.dims[w] + c]);
                    }
                }
                f
            })
            .collect()
    }

    pub fn flatten(maps: &[Mat]) -> Vec<u64> {
        maps.iter().flat_map(|m| m.data.iter().copied()).collect()
    }

    /// Check that each arrow matrix has the shape its endpoints require.
    pub fn shapes_ok(&self, arrows: &[(usize, usize)]) -> bool {
        self.maps.len() == arrows.len()
            && arrows.iter().zip(&self.maps).all(|(&(s, t), m)| m.rows == self.dims[t] && m.cols == self.dims[s])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indec {
    pub id: IndecId,
    pub descriptor: Descriptor,
    pub dimvec: DimVector,
    pub rep: Representation,
    /// Radical layers written top to socle, e.g. `132`.
    pub name: String,
}

/// Finite multiset of indecomposables, kept sorted; empty is the zero module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleSum(Vec<IndecId>);

impl ModuleSum {
    pub fn new(mut ids: Vec<IndecId>) -> Self {
        ids.sort_unstable();
        ModuleSum(ids)
    }

    pub fn zero() -> Self {
        ModuleSum(Vec::new())
    }

    pub fn single(id: IndecId) -> Self {
        ModuleSum(vec![id])
    }

    pub fn ids(&self) -> &[IndecId] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn plus(&self, other: &ModuleSum) -> ModuleSum {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ModuleSum::new(v)
    }
}

impl From<Vec<IndecId>> for ModuleSum {
    fn from(v: Vec<IndecId>) -> Self {
        ModuleSum::new(v)
    }
}

/// Which submodule of the middle term a record describes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubShape {
    /// Uniserial: the submodule of this length (the bottom layers).
    Length(usize),
    /// Thin module: submodule support as a 0-based vertex mask.
    Support(Vec<bool>),
}

/// A short exact sequence `0 -> sub -> middle -> quot -> 0` with both ends nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SesRecord {
    pub middle: IndecId,
    pub sub: ModuleSum,
    pub quot: ModuleSum,
    pub shape: SubShape,
}

/// Bitset over catalog ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdSet {
    words: Vec<u64>,
    len: usize,
}

impl IdSet {
    pub fn empty(universe: usize) -> Self {
        IdSet { words: vec![0; universe.div_ceil(64)], len: universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = IdSet::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = IndecId>) -> Self {
        let mut s = IdSet::empty(universe);
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: IndecId) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns true if `i` was newly inserted.
    #[inline]
    pub fn insert(&mut self, i: IndecId) -> bool {
        assert!(i < self.len, "id {i} outside catalog of size {}", self.len);
        let had = self.contains(i);
        self.words[i / 64] |= 1 << (i % 64);
        !had
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = IndecId> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &IdSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &IdSet) -> IdSet {
        IdSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(), len: self.len }
    }

    pub fn contains_all(&self, m: &ModuleSum) -> bool {
        m.ids().iter().all(|&i| self.contains(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimvector_arithmetic() {
        let a = DimVector(vec![1, 2, 0]);
        let b = DimVector(vec![0, 1, 0]);
        assert_eq!(a.sub(&b), DimVector(vec![1, 1, 0]));
        assert!(a.dominates(&b) && !b.dominates(&a));
        assert_eq!(DimVector(vec![2, 4]).multiple_of(&DimVector(vec![1, 2])), Some(2));
        assert_eq!(DimVector(vec![2, 3]).multiple_of(&DimVector(vec![1, 2])), None);
    }

    #[test]
    fn idset_basics() {
        let mut s = IdSet::empty(70);
        assert!(s.insert(3) && s.insert(65) && !s.insert(3));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 65]);
        assert!(IdSet::from_ids(70, [3]).is_subset(&s));
        assert_eq!(IdSet::full(70).count(), 70);
    }

    #[test]
    fn hom_of_one_dimensional_reps() {
        // 1 -> 2 with identity: Hom(P1, S1) = 1, Hom(S1, P1) = 0.
        let arrows = [(0, 1)];
        let p1 = Representation { dims: vec![1, 1], maps: vec![Mat::identity(1)] };
        let s1 = Representation { dims: vec![1, 0], maps: vec![Mat::zeros(0, 1)] };
        let f = Field::default();
        assert_eq!(p1.hom_dim(&s1, &arrows, f), 1);
        assert_eq!(s1.hom_dim(&p1, &arrows, f), 0);
        assert_eq!(p1.hom_dim(&p1, &arrows, Field::Rational), 1);
        assert_eq!(p1.hom_basis(&s1, &arrows, linalg::DEFAULT_PRIME).len(), 1);
    }
}
