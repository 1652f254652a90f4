//! Uniserial modules over a Nakayama algebra.
//!
//! `M(i, l)` has radical layers `S_i, S_{i+1}, ..., S_{i+l-1}` (indices mod n
//! for cyclic algebras). Its basis is the list of layers; a basis vector of
//! layer j lives at vertex `i + j` and the arrow out of that vertex sends it
//! to layer `j + 1`.

use crate::linalg::Mat;
use crate::module::{Descriptor, DimVector, Indec, IndecId, ModuleSum, Representation, SesRecord, SubShape};

#[derive(Clone, Debug)]
pub struct Nakayama {
    kupisch: Vec<usize>,
    cyclic: bool,
    offsets: Vec<usize>,
}

impl Nakayama {
    /// Assumes the series was validated by `AlgebraSpec::validate`.
    pub fn new(kupisch: &[usize], cyclic: bool) -> Self {
        let mut offsets = Vec::with_capacity(kupisch.len());
        let mut acc = 0;
        for &c in kupisch {
            offsets.push(acc);
            acc += c;
        }
        Nakayama { kupisch: kupisch.to_vec(), cyclic, offsets }
    }

    fn n(&self) -> usize {
        self.kupisch.len()
    }

    /// 1-based vertex reached `steps` arrows after `v`.
    fn shift(&self, v: usize, steps: usize) -> usize {
        (v - 1 + steps) % self.n() + 1
    }

    pub fn catalog_size(&self) -> usize {
        self.kupisch.iter().sum()
    }

    /// Catalog id of `M(top, length)`, if admissible.
    pub fn id_of(&self, top: usize, length: usize) -> Option<IndecId> {
        if top == 0 || top > self.n() || length == 0 || length > self.kupisch[top - 1] {
            return None;
        }
        Some(self.offsets[top - 1] + length - 1)
    }

    pub fn descriptor_of(&self, id: IndecId) -> (usize, usize) {
        let top = self.offsets.iter().rposition(|&o| o <= id).expect("id in range");
        (top + 1, id - self.offsets[top] + 1)
    }

    pub fn build_catalog(&self) -> Vec<Indec> {
        let n = self.n();
        let arrows: Vec<(usize, usize)> = if self.cyclic {
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        } else {
            (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
        };
        let mut out = Vec::with_capacity(self.catalog_size());
        for top in 1..=n {
            for length in 1..=self.kupisch[top - 1] {
                let layer_vertex = |j: usize| (top - 1 + j) % n;
                let mut dims = vec![0; n];
                for j in 0..length {
                    dims[layer_vertex(j)] += 1;
                }
                let mut maps: Vec<Mat> = arrows.iter().map(|&(s, t)| Mat::zeros(dims[t], dims[s])).collect();
                for j in 0..length.saturating_sub(1) {
                    // Arrow index equals its source vertex for both shapes.
                    let k = layer_vertex(j);
                    maps[k].set((j + 1) / n, j / n, 1);
                }
                let name: String = (0..length).map(|j| vertex_label(layer_vertex(j) + 1, n)).collect();
                out.push(Indec {
                    id: out.len(),
                    descriptor: Descriptor::Uniserial { top, length },
                    dimvec: DimVector(dims.clone()),
                    rep: Representation { dims, maps },
                    name,
                });
            }
        }
        out
    }

    pub fn projective(&self, v: usize) -> IndecId {
        self.id_of(v, self.kupisch[v - 1]).expect("projective exists")
    }

    /// `M / soc M`, or `None` for a simple.
    pub fn socle_quotient(&self, id: IndecId) -> Option<IndecId> {
        let (top, length) = self.descriptor_of(id);
        (length > 1).then(|| self.id_of(top, length - 1).expect("shorter uniserial exists"))
    }

    /// Kernel of the projective cover, `M(i + l, c_i - l)`, or `None` if projective.
    pub fn syzygy(&self, id: IndecId) -> Option<IndecId> {
        let (top, length) = self.descriptor_of(id);
        let c = self.kupisch[top - 1];
        (length < c).then(|| self.id_of(self.shift(top, length), c - length).expect("syzygy admissible"))
    }

    /// One record per proper nonzero submodule, ordered by submodule length.
    pub fn sub_quotient_pairs(&self, id: IndecId) -> Vec<SesRecord> {
        let (top, length) = self.descriptor_of(id);
        (1..length)
            .map(|sub_len| SesRecord {
                middle: id,
                sub: ModuleSum::single(self.sub_of(top, length, sub_len)),
                quot: ModuleSum::single(self.id_of(top, length - sub_len).expect("quotient admissible")),
                shape: SubShape::Length(sub_len),
            })
            .collect()
    }

    fn sub_of(&self, top: usize, length: usize, sub_len: usize) -> IndecId {
        self.id_of(self.shift(top, length - sub_len), sub_len).expect("submodule admissible")
    }

    /// The subquotient `outer / inner` of `M`, both given as submodule lengths.
    pub fn subquotient(&self, id: IndecId, outer: usize, inner: usize) -> ModuleSum {
        assert!(inner <= outer);
        let (top, length) = self.descriptor_of(id);
        if inner == outer {
            return ModuleSum::zero();
        }
        let new_top = self.shift(top, length - outer);
        ModuleSum::single(self.id_of(new_top, outer - inner).expect("subquotient admissible"))
    }

    pub fn length(&self, id: IndecId) -> usize {
        self.descriptor_of(id).1
    }
}

pub(crate) fn vertex_label(v: usize, n: usize) -> String {
    if n < 10 {
        v.to_string()
    } else {
        format!("({v})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;

    fn nak(k: &[usize], cyclic: bool) -> Nakayama {
        AlgebraSpec::nakayama(cyclic, k.to_vec()).unwrap();
        Nakayama::new(k, cyclic)
    }

    #[test]
    fn catalog_sizes_match_kupisch_sums() {
        assert_eq!(nak(&[2, 1], false).build_catalog().len(), 3);
        assert_eq!(nak(&[3, 2, 1], false).build_catalog().len(), 6);
        assert_eq!(nak(&[3, 3], true).build_catalog().len(), 6);
        assert_eq!(nak(&[2, 2], true).build_catalog().len(), 4);
    }

    #[test]
    fn a2_catalog_layout() {
        let a = nak(&[2, 1], false);
        let cat = a.build_catalog();
        let dims: Vec<_> = cat.iter().map(|m| m.dimvec.0.clone()).collect();
        assert_eq!(dims, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(cat[1].name, "12");
        assert!(cat.iter().all(|m| m.rep.shapes_ok(&[(0, 1)])));
    }

    #[test]
    fn cyclic_layers_wrap() {
        let a = nak(&[3, 3], true);
        let m = &a.build_catalog()[a.id_of(1, 3).unwrap()];
        assert_eq!(m.name, "121");
        assert_eq!(m.dimvec.0, vec![2, 1]);
        // Arrow 1 -> 2 sends layer 0 to layer 1 and kills layer 2.
        assert_eq!(m.rep.maps[0].data, vec![1, 0]);
        assert_eq!(m.rep.maps[1].data, vec![0, 1]);
    }

    #[test]
    fn syzygies_and_socle_quotients() {
        let lin = nak(&[2, 1], false);
        assert_eq!(lin.syzygy(lin.id_of(1, 1).unwrap()), lin.id_of(2, 1));
        assert_eq!(lin.syzygy(lin.projective(1)), None);
        let cyc = nak(&[2, 2], true);
        assert_eq!(cyc.syzygy(cyc.id_of(1, 1).unwrap()), cyc.id_of(2, 1));
        assert_eq!(cyc.socle_quotient(cyc.id_of(2, 2).unwrap()), cyc.id_of(2, 1));
        assert_eq!(cyc.socle_quotient(cyc.id_of(2, 1).unwrap()), None);
    }

    #[test]
    fn records_form_a_chain() {
        let a = nak(&[4, 3, 2, 1], false);
        let id = a.id_of(1, 4).unwrap();
        let recs = a.sub_quotient_pairs(id);
        assert_eq!(recs.len(), 3);
        let lens: Vec<_> = recs.iter().map(|r| a.length(r.sub.ids()[0])).collect();
        assert_eq!(lens, vec![1, 2, 3]);
        let m2 = a.id_of(2, 2).unwrap();
        let r = &a.sub_quotient_pairs(m2)[0];
        assert_eq!(r.sub.ids(), &[a.id_of(3, 1).unwrap()]);
        assert_eq!(r.quot.ids(), &[a.id_of(2, 1).unwrap()]);
    }

    #[test]
    fn subquotient_of_middle_layers() {
        let a = nak(&[4, 3, 2, 1], false);
        let id = a.id_of(1, 4).unwrap();
        // Layers 1234; the length-3 submodule 234 modulo the socle 4 is 23.
        assert_eq!(a.subquotient(id, 3, 1).ids(), &[a.id_of(2, 2).unwrap()]);
        assert!(a.subquotient(id, 2, 2).is_zero());
    }
}
