//! Partial orders on equivalence classes of maximal green sequences.
//!
//! In every order here, `a <= b` puts the longer class below: the maximum is
//! the class of the shortest sequences.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::green::{is_valid_mgs, GreenAnalysis, SiltingSummand};
use crate::modcat::ModCat;
use crate::module::IndecId;
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderTag {
    Pentagon,
    Summand,
    Hn,
    Brick,
}

impl OrderTag {
    pub const ALL: [OrderTag; 4] = [OrderTag::Pentagon, OrderTag::Summand, OrderTag::Hn, OrderTag::Brick];

    pub fn name(self) -> &'static str {
        match self {
            OrderTag::Pentagon => "pentagon",
            OrderTag::Summand => "summand",
            OrderTag::Hn => "hn",
            OrderTag::Brick => "brick",
        }
    }
}

impl std::str::FromStr for OrderTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OrderTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown order {s:?}; expected pentagon, summand, hn or brick")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPoset {
    pub tag: OrderTag,
    /// `relation[a][b]` iff class `a <= b`.
    pub relation: Vec<Vec<bool>>,
    /// Hasse edges `(lower, upper)`, sorted.
    pub covers: Vec<(usize, usize)>,
}

impl ClassPoset {
    fn from_relation(tag: OrderTag, relation: Vec<Vec<bool>>) -> Result<Self> {
        let n = relation.len();
        for a in 0..n {
            if !relation[a][a] {
                return Err(Error::InvariantViolation(format!("{} order is not reflexive at {a}", tag.name())));
            }
            for b in 0..n {
                if a != b && relation[a][b] && relation[b][a] {
                    return Err(Error::InvariantViolation(format!(
                        "{} order is not antisymmetric on classes {a} and {b}",
                        tag.name()
                    )));
                }
                for c in 0..n {
                    if relation[a][b] && relation[b][c] && !relation[a][c] {
                        return Err(Error::InvariantViolation(format!(
                            "{} order is not transitive on {a}, {b}, {c}",
                            tag.name()
                        )));
                    }
                }
            }
        }
        let lt = |a: usize, b: usize| a != b && relation[a][b];
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    covers.push((a, b));
                }
            }
        }
        Ok(ClassPoset { tag, relation, covers })
    }

    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relation.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.relation[a][b]
    }

    /// Strictly comparable ordered pairs `(a, b)` with `a < b`.
    pub fn strict_pairs(&self) -> BTreeSet<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a != b && self.relation[a][b]).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !(0..self.len()).any(|b| b != a && self.relation[a][b])).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !(0..self.len()).any(|b| b != a && self.relation[b][a])).collect()
    }

    pub fn is_maximum(&self, a: usize) -> bool {
        (0..self.len()).all(|b| self.relation[b][a])
    }

    pub fn is_minimum(&self, a: usize) -> bool {
        (0..self.len()).all(|b| self.relation[a][b])
    }
}

/// Increasing elementary polygonal deformations read off brick patterns:
/// replace `B_{i+1}, B'_1..B'_s, B_i` (s >= 1) by `B_i, B_{i+1}`. Returns
/// class pairs `(long, short)`, deduplicated and sorted.
pub fn iepd_covers(cat: &ModCat, a: &GreenAnalysis) -> Result<Vec<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for (gi, g) in a.mgs.iter().enumerate() {
        let b = &g.bricks;
        for p in 0..b.len() {
            for q in p + 2..b.len() {
                let mut short = b[..p].to_vec();
                short.push(b[q]);
                short.push(b[p]);
                short.extend_from_slice(&b[q + 1..]);
                if !is_valid_mgs(cat, &short) {
                    continue;
                }
                let si = a.index_of(&short).ok_or_else(|| {
                    Error::InvariantViolation(format!("deformation reached {short:?}, missing from the enumeration"))
                })?;
                out.insert((a.class_of[gi], a.class_of[si]));
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in edges {
        r[a][b] = true;
    }
    for k in 0..n {
        let through = r[k].clone();
        for row in r.iter_mut().filter(|row| row[k]) {
            for (x, &t) in row.iter_mut().zip(&through) {
                *x |= t;
            }
        }
    }
    r
}

/// `bhnf_{G'}(M) = ⊔_{B in bhnf_G(M)} bhnf_{G'}(B)` for every indecomposable `M`.
fn hn_refines(stable_g: &[Vec<IndecId>], stable_h: &[Vec<IndecId>]) -> bool {
    stable_g.iter().zip(stable_h).all(|(fg, fh)| {
        let mut union: Vec<IndecId> = fg.iter().flat_map(|&b| stable_h[b].iter().copied()).collect();
        union.sort_unstable();
        &union == fh
    })
}

pub fn build_order(cat: &ModCat, tag: OrderTag, a: &GreenAnalysis) -> Result<ClassPoset> {
    let n = a.classes.len();
    let rep = |c: usize| &a.data[a.classes[c].members[0]];
    let relation = match tag {
        OrderTag::Pentagon => closure(n, &iepd_covers(cat, a)?),
        OrderTag::Summand => {
            (0..n).map(|x| (0..n).map(|y| rep(x).summands.is_superset(&rep(y).summands)).collect()).collect()
        }
        OrderTag::Hn => (0..n).map(|x| (0..n).map(|y| hn_refines(&rep(x).stable, &rep(y).stable)).collect()).collect(),
        OrderTag::Brick => {
            if !cat.spec().is_nakayama() {
                return Err(Error::NotApplicable(
                    "the brick order is only defined for Nakayama algebras; over 1 <- 2 -> 3 the \
                     sequences [2,12,1,32,3] and [2,32,3,12,1] have equal brick sets but lie in \
                     different classes, so reverse inclusion of bricks is not antisymmetric"
                        .into(),
                ));
            }
            let bricks: Vec<BTreeSet<IndecId>> = (0..n).map(|c| a.representative(c).brick_set()).collect();
            (0..n).map(|x| (0..n).map(|y| bricks[x].is_superset(&bricks[y])).collect()).collect()
        }
    };
    ClassPoset::from_relation(tag, relation)
}

/// Every order applicable to the algebra, in tag order.
pub fn build_all_orders(cat: &ModCat, a: &GreenAnalysis) -> Result<Vec<ClassPoset>> {
    OrderTag::ALL
        .into_iter()
        .filter(|&t| t != OrderTag::Brick || cat.spec().is_nakayama())
        .map(|t| build_order(cat, t, a))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderDifference {
    pub left: OrderTag,
    pub right: OrderTag,
    /// Pairs `(a, b)` with `a <= b` in exactly one of the two orders.
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub compared: Vec<OrderTag>,
    pub differences: Vec<OrderDifference>,
}

impl EqualityReport {
    pub fn all_equal(&self) -> bool {
        self.differences.is_empty()
    }
}

pub fn orders_equal_report(posets: &[ClassPoset]) -> EqualityReport {
    let mut differences = Vec::new();
    for i in 0..posets.len() {
        for j in i + 1..posets.len() {
            let (p, q) = (&posets[i], &posets[j]);
            let n = p.len();
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| p.relation[a][b] != q.relation[a][b])
                .collect();
            if !pairs.is_empty() {
                differences.push(OrderDifference { left: p.tag, right: q.tag, pairs });
            }
        }
    }
    EqualityReport { compared: posets.iter().map(|p| p.tag).collect(), differences }
}

/// `phi(bricks \ simples) = (module summands) \ projectives` with `phi(B) = B / soc B`.
pub fn verify_phi(cat: &ModCat, a: &GreenAnalysis, mgs_index: usize) -> Result<bool> {
    let nak = cat
        .backend()
        .as_nakayama()
        .ok_or_else(|| Error::NotApplicable("the socle-quotient bijection is specific to Nakayama algebras".into()))?;
    let g = &a.mgs[mgs_index];
    let lhs: BTreeSet<IndecId> = g
        .bricks
        .iter()
        .filter(|&&b| !cat.is_simple(b))
        .map(|&b| nak.socle_quotient(b).expect("non-simple has a socle quotient"))
        .collect();
    let rhs: BTreeSet<IndecId> = a.data[mgs_index]
        .summands
        .iter()
        .filter_map(|s| match *s {
            SiltingSummand::Module(m) if !cat.is_projective(m) => Some(m),
            _ => None,
        })
        .collect();
    Ok(lhs == rhs)
}

fn poset(posets: &[ClassPoset], tag: OrderTag) -> Option<&ClassPoset> {
    posets.iter().find(|p| p.tag == tag)
}

/// Simples-only maximum (acyclic quiver) and all-bricks minimum
/// (representation-directed algebra).
pub fn check_extrema(cat: &ModCat, a: &GreenAnalysis, posets: &[ClassPoset]) -> Vec<Check> {
    let mut out = Vec::new();
    let n = cat.num_vertices();

    if !cat.spec().is_acyclic() {
        out.push(Check::skipped("extrema: maximum", "quiver has an oriented cycle"));
    } else {
        let name = "extrema: maximum";
        match a.mgs.iter().position(|g| g.len() == n && g.bricks.iter().all(|&b| cat.is_simple(b))) {
            None => out.push(Check::fail(name, "no maximal green sequence of simples")),
            Some(i) => {
                let c = a.class_of[i];
                let mut failures = Vec::new();
                let expected: BTreeSet<SiltingSummand> = cat
                    .projectives()
                    .iter()
                    .map(|&p| SiltingSummand::Module(p))
                    .chain((0..n).map(SiltingSummand::ShiftedProjective))
                    .collect();
                if a.data[i].summands != expected {
                    failures.push("summands are not the projectives and their shifts".to_string());
                }
                for p in posets.iter().filter(|p| matches!(p.tag, OrderTag::Summand | OrderTag::Hn)) {
                    if !p.is_maximum(c) {
                        failures.push(format!("not the maximum of the {} order", p.tag.name()));
                    }
                }
                let mut pent = String::new();
                if let Some(p) = poset(posets, OrderTag::Pentagon) {
                    if !p.maximal().contains(&c) {
                        failures.push("not maximal in the pentagon order".to_string());
                    }
                    pent = format!(", pentagon maximum: {}", p.is_maximum(c));
                }
                out.push(Check::from_failures(name, format!("class {c}{pent}"), &failures));
            }
        }
    }

    if !cat.is_representation_directed() {
        out.push(Check::skipped("extrema: minimum", "algebra is not representation-directed"));
    } else {
        let name = "extrema: minimum";
        let bricks = cat.bricks();
        let full: Vec<usize> = (0..a.mgs.len()).filter(|&i| a.mgs[i].len() == bricks.len()).collect();
        if full.is_empty() {
            out.push(Check::fail(name, "no maximal green sequence contains every brick"));
        } else {
            let classes: BTreeSet<usize> = full.iter().map(|&i| a.class_of[i]).collect();
            let c = *classes.iter().next().expect("non-empty");
            let mut failures = Vec::new();
            if classes.len() != 1 {
                failures.push(format!("all-brick sequences fall into {} classes", classes.len()));
            }
            for p in posets {
                if !p.is_minimum(c) {
                    failures.push(format!("not the minimum of the {} order", p.tag.name()));
                }
            }
            out.push(Check::from_failures(name, format!("class {c}, {} sequences", full.len()), &failures));
        }
    }
    out
}

/// Whenever `[G'] <= [G]` in the pentagon order, each exchange pair `(X, Z)`
/// of `G` has a partner `(X, Z')` in `G'`. Returns violations.
pub fn exchange_persistence(a: &GreenAnalysis, pentagon: &ClassPoset) -> Vec<String> {
    let mut bad = Vec::new();
    for (lo, hi) in pentagon.strict_pairs() {
        let outs: BTreeSet<SiltingSummand> = a.data[a.classes[lo].members[0]].exchange.iter().map(|e| e.out).collect();
        for e in &a.data[a.classes[hi].members[0]].exchange {
            if !outs.contains(&e.out) {
                bad.push(format!("class {hi} pair {:?} has no partner in class {lo}", e));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;

    fn setup(spec: AlgebraSpec) -> (ModCat, GreenAnalysis) {
        let c = ModCat::new(&spec).unwrap();
        let a = GreenAnalysis::new(&c, 24, false).unwrap();
        (c, a)
    }

    fn class_of(c: &ModCat, a: &GreenAnalysis, names: &[&str]) -> usize {
        let ids: Vec<_> = names.iter().map(|n| c.by_name(n).unwrap()).collect();
        a.class_of[a.index_of(&ids).unwrap()]
    }

    #[test]
    fn a2_orders() {
        let (c, a) = setup(AlgebraSpec::linear_nakayama(&[2, 1]).unwrap());
        let long = class_of(&c, &a, &["2", "12", "1"]);
        let short = class_of(&c, &a, &["1", "2"]);
        assert_eq!(iepd_covers(&c, &a).unwrap(), vec![(long, short)]);
        let posets = build_all_orders(&c, &a).unwrap();
        assert_eq!(posets.len(), 4);
        for p in &posets {
            assert!(p.leq(long, short) && !p.leq(short, long), "{:?}", p.tag);
            assert_eq!(p.covers, vec![(long, short)]);
        }
        assert!(orders_equal_report(&posets).all_equal());
        for i in 0..a.mgs.len() {
            assert!(verify_phi(&c, &a, i).unwrap());
        }
        assert!(check_extrema(&c, &a, &posets).iter().all(|ch| ch.status == crate::report::Status::Pass));
        assert!(exchange_persistence(&a, &posets[0]).is_empty());
    }

    #[test]
    fn brick_order_refused_off_nakayama() {
        let (c, a) = setup(AlgebraSpec::type_a("<>").unwrap());
        let err = build_order(&c, OrderTag::Brick, &a).unwrap_err();
        assert!(matches!(err, Error::NotApplicable(_)));
        assert!(err.to_string().contains("[2,12,1,32,3]"));
        assert!(verify_phi(&c, &a, 0).is_err());
    }

    #[test]
    fn example_pentagon_cover() {
        let (c, a) = setup(AlgebraSpec::type_a("<>").unwrap());
        let long = class_of(&c, &a, &["3", "2", "12", "1"]);
        let short = class_of(&c, &a, &["3", "1", "2"]);
        assert!(iepd_covers(&c, &a).unwrap().contains(&(long, short)));
    }

    #[test]
    fn tags_parse() {
        assert_eq!("hn".parse::<OrderTag>().unwrap(), OrderTag::Hn);
        assert!("bogus".parse::<OrderTag>().is_err());
    }
}
