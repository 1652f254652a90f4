//! Interval modules over path algebras of type A_n with any orientation.

use crate::backend::nakayama::vertex_label;
use crate::linalg::Mat;
use crate::module::{Descriptor, DimVector, Indec, IndecId, ModuleSum, Representation, SesRecord, SubShape};

#[derive(Clone, Debug)]
pub struct TypeA {
    n: usize,
    /// Action arrows, 0-based.
    arrows: Vec<(usize, usize)>,
}

impl TypeA {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Self {
        TypeA { n, arrows }
    }

    pub fn catalog_size(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    /// Catalog id of the interval `[a, b]` (1-based, lexicographic order).
    pub fn id_of(&self, a: usize, b: usize) -> Option<IndecId> {
        if a == 0 || a > b || b > self.n {
            return None;
        }
        let before: usize = (1..a).map(|x| self.n - x + 1).sum();
        Some(before + b - a)
    }

    pub fn interval_of(&self, id: IndecId) -> (usize, usize) {
        let mut rest = id;
        for a in 1..=self.n {
            let width = self.n - a + 1;
            if rest < width {
                return (a, a + rest);
            }
            rest -= width;
        }
        panic!("id {id} outside type-A catalog");
    }

    pub fn build_catalog(&self) -> Vec<Indec> {
        let mut out = Vec::with_capacity(self.catalog_size());
        for a in 1..=self.n {
            for b in a..=self.n {
                let inside = |v: usize| (a - 1..b).contains(&v);
                let dims: Vec<usize> = (0..self.n).map(|v| usize::from(inside(v))).collect();
                let maps = self
                    .arrows
                    .iter()
                    .map(|&(s, t)| if inside(s) && inside(t) { Mat::identity(1) } else { Mat::zeros(dims[t], dims[s]) })
                    .collect();
                out.push(Indec {
                    id: out.len(),
                    descriptor: Descriptor::Interval { a, b },
                    dimvec: DimVector(dims.clone()),
                    rep: Representation { dims, maps },
                    name: self.layer_name(a, b),
                });
            }
        }
        out
    }

    /// Radical layers of `[a, b]`, each sorted, concatenated top first.
    fn layer_name(&self, a: usize, b: usize) -> String {
        let mut remaining: Vec<usize> = (a - 1..b).collect();
        let mut name = String::new();
        while !remaining.is_empty() {
            let (top, rest): (Vec<usize>, Vec<usize>) =
                remaining.iter().partition(|&&v| !self.arrows.iter().any(|&(s, t)| t == v && remaining.contains(&s)));
            for v in &top {
                name.push_str(&vertex_label(v + 1, self.n));
            }
            remaining = rest;
        }
        name
    }

    /// Indecomposable projective at `v` (1-based): the vertices reachable from
    /// `v` along action arrows form an interval.
    pub fn projective(&self, v: usize) -> IndecId {
        let mut lo = v - 1;
        while lo > 0 && self.arrows.contains(&(lo, lo - 1)) {
            lo -= 1;
        }
        let mut hi = v - 1;
        while hi + 1 < self.n && self.arrows.contains(&(hi, hi + 1)) {
            hi += 1;
        }
        self.id_of(lo + 1, hi + 1).expect("projective interval")
    }

    /// All submodule supports of `[a, b]`: subsets closed under the arrows
    /// inside the interval, including the empty and full supports.
    pub fn submodule_supports(&self, id: IndecId) -> Vec<Vec<bool>> {
        let (a, b) = self.interval_of(id);
        let width = b - a + 1;
        assert!(width < 32, "interval too wide to enumerate supports");
        let inner: Vec<(usize, usize)> =
            self.arrows.iter().filter(|&&(s, t)| (a - 1..b).contains(&s) && (a - 1..b).contains(&t)).copied().collect();
        let mut out = Vec::new();
        for bits in 0u32..(1 << width) {
            let mut mask = vec![false; self.n];
            for k in 0..width {
                mask[a - 1 + k] = bits >> k & 1 == 1;
            }
            if inner.iter().all(|&(s, t)| !mask[s] || mask[t]) {
                out.push(mask);
            }
        }
        out
    }

    /// Interval modules on the maximal runs of a vertex mask.
    pub fn components(&self, mask: &[bool]) -> ModuleSum {
        let mut ids = Vec::new();
        let mut v = 0;
        while v < self.n {
            if mask[v] {
                let start = v;
                while v + 1 < self.n && mask[v + 1] {
                    v += 1;
                }
                ids.push(self.id_of(start + 1, v + 1).expect("run is an interval"));
            }
            v += 1;
        }
        ModuleSum::new(ids)
    }

    pub fn support_mask(&self, id: IndecId) -> Vec<bool> {
        let (a, b) = self.interval_of(id);
        (0..self.n).map(|v| (a - 1..b).contains(&v)).collect()
    }

    pub fn sub_quotient_pairs(&self, id: IndecId) -> Vec<SesRecord> {
        let full = self.support_mask(id);
        self.submodule_supports(id)
            .into_iter()
            .filter(|m| m.iter().any(|&x| x) && *m != full)
            .map(|m| {
                let comp: Vec<bool> = full.iter().zip(&m).map(|(&f, &s)| f && !s).collect();
                SesRecord {
                    middle: id,
                    sub: self.components(&m),
                    quot: self.components(&comp),
                    shape: SubShape::Support(m),
                }
            })
            .collect()
    }

    pub fn subquotient(&self, outer: &[bool], inner: &[bool]) -> ModuleSum {
        assert!(inner.iter().zip(outer).all(|(&i, &o)| !i || o));
        let diff: Vec<bool> = outer.iter().zip(inner).map(|(&o, &i)| o && !i).collect();
        self.components(&diff)
    }
}
