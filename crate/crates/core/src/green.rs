//! Maximal green sequences as maximal backward Hom-orthogonal brick
//! sequences, with everything derived from one sequence: its torsion chain,
//! silting summands, exchange pairs, square swaps and HN filtrations.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modcat::{ModCat, TorsionClass};
use crate::module::{IdSet, IndecId, ModuleSum, SubShape};

pub const DEFAULT_BRICK_GATE: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mgs {
    pub bricks: Vec<IndecId>,
}

impl Mgs {
    pub fn new(bricks: Vec<IndecId>) -> Self {
        Mgs { bricks }
    }

    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bricks.is_empty()
    }

    pub fn brick_set(&self) -> BTreeSet<IndecId> {
        self.bricks.iter().copied().collect()
    }
}

/// Indecomposable two-term silting summand, through the support
/// tau-tilting dictionary. Vertices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SiltingSummand {
    Module(IndecId),
    ShiftedProjective(usize),
}

pub type SummandSet = BTreeSet<SiltingSummand>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExchangePair {
    pub out: SiltingSummand,
    pub in_: SiltingSummand,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnLayer {
    pub brick: IndecId,
    pub factor: ModuleSum,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HnResult {
    pub layers: Vec<HnLayer>,
}

impl HnResult {
    /// Stable factors as a sorted multiset of bricks.
    pub fn stable_factors(&self) -> Vec<IndecId> {
        let mut out: Vec<IndecId> =
            self.layers.iter().flat_map(|l| std::iter::repeat_n(l.brick, l.multiplicity)).collect();
        out.sort_unstable();
        out
    }
}

pub fn summand_name(cat: &ModCat, s: SiltingSummand) -> String {
    match s {
        SiltingSummand::Module(id) => cat.name(id).to_string(),
        SiltingSummand::ShiftedProjective(v) => format!("{}[1]", cat.name(cat.projective(v))),
    }
}

// ---------------------------------------------------------------------------
// Validity and enumeration

/// Why a brick list fails to be a maximal green sequence.
pub fn mgs_violation(cat: &ModCat, seq: &[IndecId]) -> Option<String> {
    if let Some(&b) = seq.iter().find(|&&b| b >= cat.len()) {
        return Some(format!("#{b} is not in the catalog"));
    }
    if let Some(&b) = seq.iter().find(|&&b| !cat.is_brick(b)) {
        return Some(format!("{} is not a brick", cat.name(b)));
    }
    for j in 0..seq.len() {
        for i in 0..j {
            if cat.hom_dim(seq[j], seq[i]) != 0 {
                return Some(format!(
                    "Hom({}, {}) != 0 but {} comes later",
                    cat.name(seq[j]),
                    cat.name(seq[i]),
                    cat.name(seq[j])
                ));
            }
        }
    }
    for b in cat.bricks() {
        if seq.contains(&b) {
            continue;
        }
        if let Some(k) = insertion_point(cat, seq, b) {
            return Some(format!("{} can be inserted at position {k}", cat.name(b)));
        }
    }
    None
}

pub fn is_valid_mgs(cat: &ModCat, seq: &[IndecId]) -> bool {
    mgs_violation(cat, seq).is_none()
}

/// First position where `b` can be inserted keeping backward orthogonality:
/// after everything mapping to `b`, before everything `b` maps to.
fn insertion_point(cat: &ModCat, seq: &[IndecId], b: IndecId) -> Option<usize> {
    let after = seq.iter().rposition(|&x| cat.hom_dim(x, b) != 0).map_or(0, |i| i + 1);
    let before = seq.iter().position(|&x| cat.hom_dim(b, x) != 0).unwrap_or(seq.len());
    (after <= before).then_some(after)
}

/// All maximal green sequences in lexicographic order of brick ids.
pub fn enumerate_mgs(cat: &ModCat, brick_gate: usize, parallel: bool) -> Result<Vec<Mgs>> {
    let bricks = cat.bricks();
    if bricks.len() > brick_gate || bricks.len() > 64 {
        return Err(Error::GateExceeded {
            what: "brick count for MGS enumeration".into(),
            actual: bricks.len(),
            limit: brick_gate.min(64),
        });
    }
    let k = bricks.len();
    // compat[i]: bricks that may follow brick i, i.e. Hom(later, i) = 0.
    let compat: Vec<u64> = (0..k)
        .map(|i| (0..k).filter(|&j| cat.hom_dim(bricks[j], bricks[i]) == 0).fold(0u64, |m, j| m | 1 << j))
        .collect();
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };

    let from_first = |first: usize| -> Vec<Mgs> {
        let mut out = Vec::new();
        let mut path = vec![first];
        dfs(cat, &bricks, &compat, all & compat[first], &mut path, &mut out);
        out
    };
    let chunks: Vec<Vec<Mgs>> =
        if parallel { (0..k).into_par_iter().map(from_first).collect() } else { (0..k).map(from_first).collect() };
    Ok(chunks.concat())
}

fn dfs(cat: &ModCat, bricks: &[IndecId], compat: &[u64], allowed: u64, path: &mut Vec<usize>, out: &mut Vec<Mgs>) {
    if allowed == 0 {
        let seq: Vec<IndecId> = path.iter().map(|&i| bricks[i]).collect();
        let maximal = bricks.iter().all(|&b| seq.contains(&b) || insertion_point(cat, &seq, b).is_none());
        if maximal {
            out.push(Mgs::new(seq));
        }
        return;
    }
    let mut rest = allowed;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        path.push(j);
        dfs(cat, bricks, compat, allowed & compat[j] & !(1 << j), path, out);
        path.pop();
    }
}

// ---------------------------------------------------------------------------
// Sequence-level structure

/// Memoizes closures and summand computations shared between sequences.
pub struct Engine<'a> {
    cat: &'a ModCat,
    step: HashMap<(IdSet, IndecId), IdSet>,
    summands: HashMap<IdSet, Vec<SiltingSummand>>,
    tsub: HashMap<(IdSet, IndecId), (ModuleSum, SubShape)>,
}

impl<'a> Engine<'a> {
    pub fn new(cat: &'a ModCat) -> Self {
        Engine { cat, step: HashMap::new(), summands: HashMap::new(), tsub: HashMap::new() }
    }

    pub fn cat(&self) -> &'a ModCat {
        self.cat
    }

    /// `T_i = T(B_{i+1}, ..., B_r)` for `i = 0..=r`.
    pub fn torsion_chain(&mut self, g: &Mgs) -> Vec<TorsionClass> {
        let mut chain = vec![self.cat.empty_set()];
        for &b in g.bricks.iter().rev() {
            let below = chain.last().expect("non-empty").clone();
            let cat = self.cat;
            let next = self
                .step
                .entry((below.clone(), b))
                .or_insert_with(|| {
                    let mut seed = below;
                    seed.insert(b);
                    cat.torsion_closure(&seed).members
                })
                .clone();
            chain.push(next);
        }
        chain.reverse();
        chain.into_iter().map(|members| TorsionClass { members }).collect()
    }

    /// Summands of the support tau-tilting pair of `t`: its relative
    /// projectives and the shifted projectives of unsupported vertices.
    pub fn class_summands(&mut self, t: &TorsionClass) -> Vec<SiltingSummand> {
        let cat = self.cat;
        self.summands
            .entry(t.members.clone())
            .or_insert_with(|| {
                let mut s: Vec<SiltingSummand> =
                    cat.relative_projectives(t).into_iter().map(SiltingSummand::Module).collect();
                s.extend(cat.unsupported_vertices(&t.members).into_iter().map(SiltingSummand::ShiftedProjective));
                s.sort();
                s
            })
            .clone()
    }

    pub fn summand_set(&mut self, g: &Mgs) -> Result<SummandSet> {
        let n = self.cat.num_vertices();
        let mut out = SummandSet::new();
        for t in self.torsion_chain(g) {
            let s = self.class_summands(&t);
            if s.len() != n {
                return Err(Error::InvariantViolation(format!(
                    "torsion class {:?} has {} summands, expected {n}",
                    self.cat.names(&t.ids()),
                    s.len()
                )));
            }
            out.extend(s);
        }
        if out.len() != n + g.len() {
            return Err(Error::InvariantViolation(format!(
                "summand set has {} elements, expected {}",
                out.len(),
                n + g.len()
            )));
        }
        Ok(out)
    }

    /// One exchange pair per step, in sequence order.
    pub fn exchange_pairs(&mut self, g: &Mgs) -> Result<Vec<ExchangePair>> {
        let chain = self.torsion_chain(g);
        let sets: Vec<BTreeSet<SiltingSummand>> =
            chain.iter().map(|t| self.class_summands(t).into_iter().collect()).collect();
        sets.windows(2)
            .map(|w| {
                let out: Vec<_> = w[0].difference(&w[1]).copied().collect();
                let inn: Vec<_> = w[1].difference(&w[0]).copied().collect();
                match (out.as_slice(), inn.as_slice()) {
                    ([o], [i]) => Ok(ExchangePair { out: *o, in_: *i }),
                    _ => Err(Error::InvariantViolation(format!(
                        "consecutive summand sets differ in {} + {} elements",
                        out.len(),
                        inn.len()
                    ))),
                }
            })
            .collect()
    }

    fn torsion_sub(&mut self, id: IndecId, t: &TorsionClass) -> Result<(ModuleSum, SubShape)> {
        if let Some(v) = self.tsub.get(&(t.members.clone(), id)) {
            return Ok(v.clone());
        }
        let v = self.cat.torsion_submodule_shape(id, t)?;
        self.tsub.insert((t.members.clone(), id), v.clone());
        Ok(v)
    }

    fn hn_indec(&mut self, id: IndecId, g: &Mgs, chain: &[TorsionClass]) -> Result<Vec<Option<HnLayer>>> {
        let cat = self.cat;
        let shapes: Vec<SubShape> =
            chain.iter().map(|t| self.torsion_sub(id, t).map(|x| x.1)).collect::<Result<_>>()?;
        let mut layers = Vec::with_capacity(g.len());
        for i in 0..g.len() {
            let factor = cat.backend().subquotient(id, &shapes[i], &shapes[i + 1]);
            if factor.is_zero() {
                layers.push(None);
                continue;
            }
            let brick = g.bricks[i];
            let bad = |why: &str| {
                Error::InvariantViolation(format!(
                    "HN layer {} of {} for brick {} {why}",
                    cat.sum_name(&factor),
                    cat.name(id),
                    cat.name(brick)
                ))
            };
            if !cat.filt_of_brick(brick).contains_all(&factor) {
                return Err(bad("is not filtered by the brick"));
            }
            let multiplicity = cat
                .dimvec_sum(&factor)
                .multiple_of(&cat.indec(brick).dimvec)
                .ok_or_else(|| bad("has the wrong dimension"))?;
            layers.push(Some(HnLayer { brick, factor, multiplicity }));
        }
        Ok(layers)
    }

    /// HN filtration of `m` along the torsion chain of `g`; sums are handled
    /// componentwise and layers merged by position.
    pub fn hn_filtration(&mut self, m: &ModuleSum, g: &Mgs) -> Result<HnResult> {
        let chain = self.torsion_chain(g);
        let mut merged: Vec<Option<HnLayer>> = vec![None; g.len()];
        for &id in m.ids() {
            for (slot, layer) in merged.iter_mut().zip(self.hn_indec(id, g, &chain)?) {
                let Some(layer) = layer else { continue };
                *slot = Some(match slot.take() {
                    None => layer,
                    Some(prev) => HnLayer {
                        brick: prev.brick,
                        factor: prev.factor.plus(&layer.factor),
                        multiplicity: prev.multiplicity + layer.multiplicity,
                    },
                });
            }
        }
        let result = HnResult { layers: merged.into_iter().flatten().collect() };
        let total = result.layers.iter().fold(crate::module::DimVector::zero(self.cat.num_vertices()), |acc, l| {
            acc.add(&self.cat.dimvec_sum(&l.factor))
        });
        if total != self.cat.dimvec_sum(m) {
            return Err(Error::InvariantViolation(format!("HN layers of {} do not add up", self.cat.sum_name(m))));
        }
        Ok(result)
    }

    /// Stable factors of every indecomposable, indexed by catalog id.
    pub fn stable_factor_function(&mut self, g: &Mgs) -> Result<Vec<Vec<IndecId>>> {
        (0..self.cat.len()).map(|id| Ok(self.hn_filtration(&ModuleSum::single(id), g)?.stable_factors())).collect()
    }
}

pub fn torsion_chain(cat: &ModCat, g: &Mgs) -> Vec<TorsionClass> {
    Engine::new(cat).torsion_chain(g)
}

pub fn summand_set(cat: &ModCat, g: &Mgs) -> Result<SummandSet> {
    Engine::new(cat).summand_set(g)
}

pub fn exchange_pairs(cat: &ModCat, g: &Mgs) -> Result<Vec<ExchangePair>> {
    Engine::new(cat).exchange_pairs(g)
}

pub fn hn_filtration(cat: &ModCat, m: &ModuleSum, g: &Mgs) -> Result<HnResult> {
    Engine::new(cat).hn_filtration(m, g)
}

pub fn stable_factor_function(cat: &ModCat, g: &Mgs) -> Result<Vec<Vec<IndecId>>> {
    Engine::new(cat).stable_factor_function(g)
}

/// Swap positions `pos` and `pos + 1` (0-based) when the two bricks have
/// no Hom and no Ext from the first to the second.
pub fn square_swap(cat: &ModCat, g: &Mgs, pos: usize) -> Result<Option<Mgs>> {
    if pos + 1 >= g.len() {
        return Err(Error::Usage(format!("swap position {pos} out of range for length {}", g.len())));
    }
    let (a, b) = (g.bricks[pos], g.bricks[pos + 1]);
    if cat.hom_dim(a, b) != 0 || cat.ext1_dim(a, b) != 0 {
        return Ok(None);
    }
    let mut bricks = g.bricks.clone();
    bricks.swap(pos, pos + 1);
    if let Some(why) = mgs_violation(cat, &bricks) {
        return Err(Error::InvariantViolation(format!("square swap produced an invalid sequence: {why}")));
    }
    Ok(Some(Mgs::new(bricks)))
}

// ---------------------------------------------------------------------------
// Equivalence classes

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    pub key: Vec<SiltingSummand>,
    /// Indices into the analysed MGS list.
    pub members: Vec<usize>,
}

/// Per-sequence invariants used for classification.
#[derive(Clone, Debug)]
pub struct MgsData {
    pub summands: SummandSet,
    pub exchange: BTreeSet<ExchangePair>,
    pub exchange_seq: Vec<ExchangePair>,
    pub stable: Vec<Vec<IndecId>>,
}

/// Four partitions of the MGS list, each as a class label per sequence
/// (label = index of the first sequence in the same block).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partitions {
    pub swap: Vec<usize>,
    pub summand: Vec<usize>,
    pub exchange: Vec<usize>,
    pub hn: Vec<usize>,
}

impl Partitions {
    pub fn all_agree(&self) -> bool {
        self.swap == self.summand && self.swap == self.exchange && self.swap == self.hn
    }

    /// Names of the partitions that differ from the square-swap partition.
    pub fn disagreements(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.summand != self.swap {
            out.push("summand sets");
        }
        if self.exchange != self.swap {
            out.push("exchange pairs");
        }
        if self.hn != self.swap {
            out.push("stable factors");
        }
        out
    }
}

/// Everything about the set of maximal green sequences of one algebra.
#[derive(Clone, Debug)]
pub struct GreenAnalysis {
    pub mgs: Vec<Mgs>,
    pub data: Vec<MgsData>,
    pub classes: Vec<EquivClass>,
    pub class_of: Vec<usize>,
    pub partitions: Partitions,
}

fn labels_by_key<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Vec<usize> {
    let mut first: HashMap<K, usize> = HashMap::new();
    keys.into_iter().enumerate().map(|(i, k)| *first.entry(k).or_insert(i)).collect()
}

/// Square-swap closure as a partition of `all`.
pub fn swap_partition(cat: &ModCat, all: &[Mgs]) -> Result<Vec<usize>> {
    let index: HashMap<&[IndecId], usize> = all.iter().enumerate().map(|(i, g)| (g.bricks.as_slice(), i)).collect();
    let mut label = vec![usize::MAX; all.len()];
    for start in 0..all.len() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = start;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for pos in 0..all[i].len().saturating_sub(1) {
                let Some(h) = square_swap(cat, &all[i], pos)? else { continue };
                let j = *index.get(h.bricks.as_slice()).ok_or_else(|| {
                    Error::InvariantViolation(format!("swap reached {:?}, missing from the enumeration", h.bricks))
                })?;
                if label[j] == usize::MAX {
                    label[j] = start;
                    queue.push_back(j);
                }
            }
        }
    }
    Ok(label)
}

impl GreenAnalysis {
    pub fn new(cat: &ModCat, brick_gate: usize, parallel: bool) -> Result<Self> {
        let mgs = enumerate_mgs(cat, brick_gate, parallel)?;
        Self::from_mgs(cat, mgs)
    }

    pub fn from_mgs(cat: &ModCat, mgs: Vec<Mgs>) -> Result<Self> {
        let mut eng = Engine::new(cat);
        let data = mgs
            .iter()
            .map(|g| {
                let exchange_seq = eng.exchange_pairs(g)?;
                Ok(MgsData {
                    summands: eng.summand_set(g)?,
                    exchange: exchange_seq.iter().copied().collect(),
                    exchange_seq,
                    stable: eng.stable_factor_function(g)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let partitions = Partitions {
            swap: swap_partition(cat, &mgs)?,
            summand: labels_by_key(data.iter().map(|d| &d.summands)),
            exchange: labels_by_key(data.iter().map(|d| &d.exchange)),
            hn: labels_by_key(data.iter().map(|d| &d.stable)),
        };
        // Canonical grouping is by summand set; the other partitions are checks.
        let mut classes: Vec<EquivClass> = Vec::new();
        let mut class_of = vec![0; mgs.len()];
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for (i, &lab) in partitions.summand.iter().enumerate() {
            let c = *slot.entry(lab).or_insert_with(|| {
                classes.push(EquivClass { key: data[i].summands.iter().copied().collect(), members: Vec::new() });
                classes.len() - 1
            });
            classes[c].members.push(i);
            class_of[i] = c;
        }
        Ok(GreenAnalysis { mgs, data, classes, class_of, partitions })
    }

    /// The classes, provided all four characterisations of equivalence agree.
    pub fn equivalence_classes(&self) -> Result<&[EquivClass]> {
        if self.partitions.all_agree() {
            Ok(&self.classes)
        } else {
            Err(Error::InvariantViolation(format!(
                "equivalence partitions disagree: {} differ from square-swap closure",
                self.partitions.disagreements().join(", ")
            )))
        }
    }

    pub fn representative(&self, class: usize) -> &Mgs {
        &self.mgs[self.classes[class].members[0]]
    }

    pub fn index_of(&self, bricks: &[IndecId]) -> Option<usize> {
        self.mgs.iter().position(|g| g.bricks == bricks)
    }
}

/// Classes of `all` (which must be the complete list), checked four ways.
pub fn equivalence_classes(cat: &ModCat, all: &[Mgs]) -> Result<Vec<EquivClass>> {
    let a = GreenAnalysis::from_mgs(cat, all.to_vec())?;
    a.equivalence_classes().map(|c| c.to_vec())
}
