//! The module category of one algebra: a finite catalog of indecomposables
//! with precomputed Hom and Ext tables, and the closure operations on
//! subcategories built from them.

use rayon::prelude::*;

use crate::algebra::AlgebraSpec;
use crate::backend::Backend;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::module::{Descriptor, DimVector, IdSet, Indec, IndecId, ModuleSum, SesRecord, SubShape};

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub field: Field,
    /// Fill the Hom table with a rayon pool. Output is identical either way.
    pub parallel: bool,
}

/// A torsion class, as the set of indecomposables it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionClass {
    pub members: IdSet,
}

impl TorsionClass {
    pub fn contains(&self, id: IndecId) -> bool {
        self.members.contains(id)
    }

    pub fn ids(&self) -> Vec<IndecId> {
        self.members.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ModCat {
    spec: AlgebraSpec,
    arrows: Vec<(usize, usize)>,
    backend: Backend,
    indecs: Vec<Indec>,
    hom: Vec<usize>,
    ext: Vec<usize>,
    records: Vec<Vec<SesRecord>>,
    quotients: Vec<Vec<ModuleSum>>,
    projectives: Vec<IndecId>,
    simples: Vec<IndecId>,
    brick_filt: Vec<Option<IdSet>>,
    options: Options,
}

impl ModCat {
    pub fn new(spec: &AlgebraSpec) -> Result<Self> {
        Self::with_options(spec, Options::default())
    }

    pub fn with_options(spec: &AlgebraSpec, options: Options) -> Result<Self> {
        spec.validate()?;
        let n = spec.num_vertices();
        let arrows = spec.arrows();
        let backend = Backend::for_spec(spec);
        let indecs = backend.build_catalog();
        let m = indecs.len();

        let row = |i: usize| -> Vec<usize> {
            (0..m).map(|j| indecs[i].rep.hom_dim(&indecs[j].rep, &arrows, options.field)).collect()
        };
        let rows: Vec<Vec<usize>> =
            if options.parallel { (0..m).into_par_iter().map(row).collect() } else { (0..m).map(row).collect() };
        let hom: Vec<usize> = rows.concat();

        let records: Vec<Vec<SesRecord>> = (0..m).map(|i| backend.sub_quotient_pairs(i)).collect();
        let quotients = records
            .iter()
            .enumerate()
            .map(|(i, recs)| {
                let mut q: Vec<ModuleSum> = recs.iter().map(|r| r.quot.clone()).collect();
                q.push(ModuleSum::single(i));
                q.sort();
                q.dedup();
                q
            })
            .collect();
        let projectives = (1..=n).map(|v| backend.projective(v)).collect();
        let simples = (0..n)
            .map(|v| {
                let d = match spec {
                    AlgebraSpec::Nakayama { .. } => Descriptor::Uniserial { top: v + 1, length: 1 },
                    AlgebraSpec::TypeA { .. } => Descriptor::Interval { a: v + 1, b: v + 1 },
                };
                backend.id_of(d).expect("simple exists")
            })
            .collect();

        let mut cat = ModCat {
            spec: spec.clone(),
            arrows,
            backend,
            indecs,
            hom,
            ext: Vec::new(),
            records,
            quotients,
            projectives,
            simples,
            brick_filt: Vec::new(),
            options,
        };
        cat.ext = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| cat.ext_formula(i, j)).collect();
        cat.brick_filt = (0..m).map(|i| cat.is_brick(i).then(|| cat.filt_closure(&cat.set_of([i])))).collect();
        Ok(cat)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn options(&self) -> Options {
        self.options
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn num_vertices(&self) -> usize {
        self.spec.num_vertices()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn indecomposables(&self) -> &[Indec] {
        &self.indecs
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn indec(&self, id: IndecId) -> &Indec {
        &self.indecs[id]
    }

    pub fn name(&self, id: IndecId) -> &str {
        &self.indecs[id].name
    }

    pub fn check_id(&self, id: IndecId) -> Result<IndecId> {
        if id < self.len() {
            Ok(id)
        } else {
            Err(Error::Usage(format!("module id #{id} is not in this catalog of {} indecomposables", self.len())))
        }
    }

    pub fn id_of(&self, d: Descriptor) -> Option<IndecId> {
        self.backend.id_of(d)
    }

    pub fn by_name(&self, name: &str) -> Option<IndecId> {
        self.indecs.iter().position(|m| m.name == name)
    }

    /// Projective cover of the simple at 0-based vertex `v`.
    pub fn projective(&self, v: usize) -> IndecId {
        self.projectives[v]
    }

    pub fn projectives(&self) -> &[IndecId] {
        &self.projectives
    }

    pub fn simple(&self, v: usize) -> IndecId {
        self.simples[v]
    }

    pub fn simples(&self) -> &[IndecId] {
        &self.simples
    }

    pub fn is_simple(&self, id: IndecId) -> bool {
        self.indecs[id].dimvec.total() == 1
    }

    pub fn is_projective(&self, id: IndecId) -> bool {
        self.projectives.contains(&id)
    }

    pub fn hom_dim(&self, m: IndecId, n: IndecId) -> usize {
        self.hom[m * self.len() + n]
    }

    pub fn hom_sum(&self, m: &ModuleSum, n: &ModuleSum) -> usize {
        m.ids().iter().map(|&a| n.ids().iter().map(|&b| self.hom_dim(a, b)).sum::<usize>()).sum()
    }

    pub fn ext1_dim(&self, m: IndecId, n: IndecId) -> usize {
        self.ext[m * self.len() + n]
    }

    pub fn ext1_sum(&self, m: IndecId, n: &ModuleSum) -> usize {
        n.ids().iter().map(|&b| self.ext1_dim(m, b)).sum()
    }

    /// Euler form over the action quiver.
    pub fn euler_form(&self, a: &DimVector, b: &DimVector) -> i64 {
        let diag: i64 = a.0.iter().zip(&b.0).map(|(x, y)| (x * y) as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| (a.0[s] * b.0[t]) as i64).sum();
        diag - off
    }

    /// Hereditary case: `hom - <dim M, dim N>`. Nakayama case: from
    /// `0 -> Hom(M,N) -> Hom(P,N) -> Hom(OmegaM,N) -> Ext(M,N) -> 0`.
    fn ext_formula(&self, m: IndecId, n: IndecId) -> usize {
        let hom = self.hom_dim(m, n) as i64;
        let value = match &self.backend {
            Backend::TypeA(_) => hom - self.euler_form(&self.indecs[m].dimvec, &self.indecs[n].dimvec),
            Backend::Nakayama(b) => match b.syzygy(m) {
                None => 0,
                Some(omega) => {
                    let (top, _) = b.descriptor_of(m);
                    let p = self.projective(top - 1);
                    self.hom_dim(omega, n) as i64 - self.hom_dim(p, n) as i64 + hom
                }
            },
        };
        assert!(value >= 0, "negative Ext dimension for ({m}, {n})");
        value as usize
    }

    pub fn is_brick(&self, id: IndecId) -> bool {
        self.hom_dim(id, id) == 1
    }

    pub fn bricks(&self) -> Vec<IndecId> {
        (0..self.len()).filter(|&i| self.is_brick(i)).collect()
    }

    pub fn sub_quotient_pairs(&self, id: IndecId) -> &[SesRecord] {
        &self.records[id]
    }

    /// Quotients of `id` by its submodules, including `id` itself.
    pub fn indec_quotients(&self, id: IndecId) -> &[ModuleSum] {
        &self.quotients[id]
    }

    pub fn empty_set(&self) -> IdSet {
        IdSet::empty(self.len())
    }

    pub fn full_set(&self) -> IdSet {
        IdSet::full(self.len())
    }

    pub fn set_of(&self, ids: impl IntoIterator<Item = IndecId>) -> IdSet {
        IdSet::from_ids(self.len(), ids)
    }

    /// Smallest torsion class containing `seed`.
    pub fn torsion_closure(&self, seed: &IdSet) -> TorsionClass {
        TorsionClass { members: self.closure(seed.clone(), true) }
    }

    /// Indecomposables filtered by `seed`, assuming (as holds for
    /// Hom-orthogonal bricks and brick-label sets of chains) that the
    /// filtered category is closed under direct summands.
    pub fn filt_closure(&self, seed: &IdSet) -> IdSet {
        self.closure(seed.clone(), false)
    }

    /// `Filt(B)` for a brick, precomputed.
    pub fn filt_of_brick(&self, b: IndecId) -> &IdSet {
        self.brick_filt[b].as_ref().expect("filt_of_brick called on a non-brick")
    }

    fn closure(&self, mut set: IdSet, with_quotients: bool) -> IdSet {
        loop {
            let mut changed = false;
            if with_quotients {
                for id in set.clone().iter() {
                    for q in &self.quotients[id] {
                        for &x in q.ids() {
                            changed |= set.insert(x);
                        }
                    }
                }
            }
            for e in 0..self.len() {
                if !set.contains(e)
                    && self.records[e].iter().any(|r| set.contains_all(&r.sub) && set.contains_all(&r.quot))
                {
                    set.insert(e);
                    changed = true;
                }
            }
            if !changed {
                return set;
            }
        }
    }

    /// Post hoc check of both closure properties.
    pub fn is_torsion_class(&self, set: &IdSet) -> bool {
        let quotient_closed = set.iter().all(|id| self.quotients[id].iter().all(|q| set.contains_all(q)));
        let extension_closed = (0..self.len()).all(|e| {
            set.contains(e) || !self.records[e].iter().any(|r| set.contains_all(&r.sub) && set.contains_all(&r.quot))
        });
        quotient_closed && extension_closed
    }

    /// Largest submodule of `id` lying in `t`, with its shape inside `id`.
    pub fn torsion_submodule_shape(&self, id: IndecId, t: &TorsionClass) -> Result<(ModuleSum, SubShape)> {
        if t.contains(id) {
            return Ok((ModuleSum::single(id), self.backend.full_shape(id)));
        }
        let n = self.num_vertices();
        let mut candidates: Vec<(ModuleSum, SubShape, DimVector)> =
            vec![(ModuleSum::zero(), self.backend.zero_shape(id), DimVector::zero(n))];
        for r in &self.records[id] {
            if t.members.contains_all(&r.sub) {
                candidates.push((r.sub.clone(), r.shape.clone(), self.dimvec_sum(&r.sub)));
            }
        }
        let top: Vec<usize> =
            (0..candidates.len()).filter(|&i| candidates.iter().all(|c| candidates[i].2.dominates(&c.2))).collect();
        match top.as_slice() {
            [i] => {
                let (m, s, _) = candidates.swap_remove(*i);
                Ok((m, s))
            }
            _ => Err(Error::InvariantViolation(format!(
                "torsion submodule of {} is not unique ({} maximal candidates)",
                self.name(id),
                top.len()
            ))),
        }
    }

    pub fn torsion_submodule(&self, m: &ModuleSum, t: &TorsionClass) -> Result<ModuleSum> {
        let mut out = ModuleSum::zero();
        for &id in m.ids() {
            out = out.plus(&self.torsion_submodule_shape(id, t)?.0);
        }
        Ok(out)
    }

    pub fn dimvec_sum(&self, m: &ModuleSum) -> DimVector {
        m.ids().iter().fold(DimVector::zero(self.num_vertices()), |acc, &i| acc.add(&self.indecs[i].dimvec))
    }

    pub fn relative_projectives(&self, t: &TorsionClass) -> Vec<IndecId> {
        t.members.iter().filter(|&x| t.members.iter().all(|m| self.ext1_dim(x, m) == 0)).collect()
    }

    pub fn relative_simples(&self, t: &TorsionClass) -> Vec<IndecId> {
        t.members.iter().filter(|&b| !self.records[b].iter().any(|r| t.members.contains_all(&r.sub))).collect()
    }

    /// `{X : Hom(U, X) = 0 for all U in u}`.
    pub fn right_perp(&self, u: &IdSet) -> IdSet {
        self.set_of((0..self.len()).filter(|&x| u.iter().all(|a| self.hom_dim(a, x) == 0)))
    }

    /// Vertices whose projective has no map into any member of `t`.
    pub fn unsupported_vertices(&self, t: &IdSet) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&v| t.iter().all(|x| self.hom_dim(self.projective(v), x) == 0)).collect()
    }

    /// Every indecomposable is a brick and nonzero maps between distinct
    /// indecomposables never close a cycle.
    pub fn is_representation_directed(&self) -> bool {
        let m = self.len();
        if (0..m).any(|i| !self.is_brick(i)) {
            return false;
        }
        // Kahn's algorithm on the nonzero-Hom digraph.
        let mut indeg = vec![0usize; m];
        for i in 0..m {
            for (j, d) in indeg.iter_mut().enumerate() {
                if i != j && self.hom_dim(i, j) > 0 {
                    *d += 1;
                }
            }
        }
        let mut stack: Vec<usize> = (0..m).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for (j, d) in indeg.iter_mut().enumerate() {
                if i != j && self.hom_dim(i, j) > 0 {
                    *d -= 1;
                    if *d == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        seen == m
    }

    pub fn names(&self, ids: &[IndecId]) -> Vec<String> {
        ids.iter().map(|&i| self.name(i).to_string()).collect()
    }

    pub fn sum_name(&self, m: &ModuleSum) -> String {
        if m.is_zero() {
            "0".into()
        } else {
            self.names(m.ids()).join("+")
        }
    }
}
