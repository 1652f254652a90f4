//! Brute-force lattice of torsion classes with brick labels. This is the
//! reference the sequence-level engine is checked against, so it works only
//! from closure properties and Hom vanishing.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::modcat::{ModCat, TorsionClass};
use crate::module::{IdSet, IndecId};

/// Default ceiling on the number of subsets the brute force may visit.
pub const DEFAULT_SUBSET_GATE: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub upper: usize,
    pub lower: usize,
    pub label: IndecId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonKind {
    Square,
    Oriented,
    Unoriented,
}

/// Two maximal chains between `top` and `bottom` sharing only endpoints.
/// Each side lists element indices from `top` to `bottom` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub top: usize,
    pub bottom: usize,
    pub sides: [Vec<usize>; 2],
}

impl Polygon {
    pub fn kind(&self) -> PolygonKind {
        let (a, b) = (self.sides[0].len() - 1, self.sides[1].len() - 1);
        match (a == 2, b == 2) {
            (true, true) => PolygonKind::Square,
            (false, false) => PolygonKind::Unoriented,
            _ => PolygonKind::Oriented,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TorsionLattice {
    /// Sorted by decreasing size, then by membership; index 0 is the whole category.
    pub elements: Vec<TorsionClass>,
    pub covers: Vec<Cover>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    labels: HashMap<(usize, usize), IndecId>,
}

pub fn torsion_lattice(cat: &ModCat, size_gate: usize) -> Result<TorsionLattice> {
    let m = cat.len();
    let subsets = 1usize.checked_shl(m as u32).filter(|&s| m < usize::BITS as usize && s <= size_gate);
    let Some(subsets) = subsets else {
        return Err(Error::GateExceeded {
            what: format!("torsion lattice brute force over 2^{m} subsets"),
            actual: if m < usize::BITS as usize { 1 << m } else { usize::MAX },
            limit: size_gate,
        });
    };

    let mut elements: Vec<TorsionClass> = (0..subsets)
        .map(|mask| cat.set_of((0..m).filter(|&i| mask >> i & 1 == 1)))
        .filter(|s| cat.is_torsion_class(s))
        .map(|members| TorsionClass { members })
        .collect();
    elements.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

    let e = elements.len();
    let below = |i: usize, j: usize| i != j && elements[j].members.is_subset(&elements[i].members);
    let mut lower = vec![Vec::new(); e];
    let mut upper = vec![Vec::new(); e];
    let mut covers = Vec::new();
    let mut labels = HashMap::new();
    for i in 0..e {
        for j in 0..e {
            if !below(i, j) || (0..e).any(|k| below(i, k) && below(k, j)) {
                continue;
            }
            let label = cover_label(cat, &elements[i], &elements[j])?;
            lower[i].push(j);
            upper[j].push(i);
            labels.insert((i, j), label);
            covers.push(Cover { upper: i, lower: j, label });
        }
    }
    Ok(TorsionLattice { elements, covers, lower, upper, labels })
}

/// The unique object of `T ∩ U^⊥` that has no proper filtration inside it.
fn cover_label(cat: &ModCat, t: &TorsionClass, u: &TorsionClass) -> Result<IndecId> {
    let w = t.members.intersection(&cat.right_perp(&u.members));
    let simple_in_w: Vec<IndecId> = w
        .iter()
        .filter(|&x| !cat.sub_quotient_pairs(x).iter().any(|r| w.contains_all(&r.sub) && w.contains_all(&r.quot)))
        .collect();
    match simple_in_w.as_slice() {
        [b] => Ok(*b),
        _ => Err(Error::InvariantViolation(format!(
            "cover {:?} > {:?} has {} label candidates",
            cat.names(&t.ids()),
            cat.names(&u.ids()),
            simple_in_w.len()
        ))),
    }
}

impl TorsionLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> usize {
        0
    }

    pub fn bottom(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn index_of(&self, members: &IdSet) -> Option<usize> {
        self.elements.iter().position(|t| &t.members == members)
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn label(&self, upper: usize, lower: usize) -> Option<IndecId> {
        self.labels.get(&(upper, lower)).copied()
    }

    /// Number of maximal chains from the top to the bottom.
    pub fn count_maximal_chains(&self) -> u128 {
        let mut ways = vec![0u128; self.len()];
        ways[self.bottom()] = 1;
        // Elements are sorted by decreasing size, so lower covers come later.
        for i in (0..self.len()).rev() {
            if i != self.bottom() {
                ways[i] = self.lower[i].iter().map(|&j| ways[j]).sum();
            }
        }
        ways[self.top()]
    }

    /// Label sequences of every maximal chain, top first.
    pub fn maximal_chain_labels(&self) -> Vec<Vec<IndecId>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.walk(self.top(), &mut path, &mut out);
        out.sort();
        out
    }

    fn walk(&self, at: usize, path: &mut Vec<IndecId>, out: &mut Vec<Vec<IndecId>>) {
        if at == self.bottom() {
            out.push(path.clone());
            return;
        }
        for &j in &self.lower[at] {
            path.push(self.labels[&(at, j)]);
            self.walk(j, path, out);
            path.pop();
        }
    }

    /// Labels along a chain of element indices.
    pub fn path_labels(&self, path: &[usize]) -> Vec<IndecId> {
        path.windows(2).map(|w| self.labels[&(w[0], w[1])]).collect()
    }

    /// Like [`path_labels`](Self::path_labels) but `None` if some step is not a cover.
    pub fn path_labels_checked(&self, path: &[usize]) -> Option<Vec<IndecId>> {
        path.windows(2).map(|w| self.label(w[0], w[1])).collect()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a].members.is_subset(&self.elements[b].members)
    }

    /// For each element with two lower covers, the interval down to their meet.
    /// Returns an error if such an interval is not two disjoint chains.
    pub fn polygons(&self) -> Result<Vec<Polygon>> {
        let mut out = Vec::new();
        for top in 0..self.len() {
            let lc = &self.lower[top];
            for (x, &a) in lc.iter().enumerate() {
                for &b in &lc[x + 1..] {
                    let meet_set = self.elements[a].members.intersection(&self.elements[b].members);
                    let bottom = self.index_of(&meet_set).ok_or_else(|| {
                        Error::InvariantViolation("intersection of torsion classes is not in the lattice".into())
                    })?;
                    let inside = |k: usize| self.leq(bottom, k) && self.leq(k, top);
                    let sides = [a, b].map(|start| {
                        let mut side = vec![top, start];
                        let mut cur = start;
                        while cur != bottom {
                            let next: Vec<usize> = self.lower[cur].iter().copied().filter(|&k| inside(k)).collect();
                            if next.len() != 1 {
                                return None;
                            }
                            cur = next[0];
                            side.push(cur);
                        }
                        Some(side)
                    });
                    let [Some(s0), Some(s1)] = sides else {
                        return Err(Error::InvariantViolation(format!(
                            "interval below element {top} is not a polygon"
                        )));
                    };
                    let interval = (0..self.len()).filter(|&k| inside(k)).count();
                    if interval != s0.len() + s1.len() - 2 {
                        return Err(Error::InvariantViolation(format!(
                            "interval below element {top} has elements off both sides"
                        )));
                    }
                    out.push(Polygon { top, bottom, sides: [s0, s1] });
                }
            }
        }
        Ok(out)
    }
}
