//! Executable property suites over one algebra. Each check returns a
//! [`Check`] naming the property and, on failure, the witnessing data.

use std::collections::BTreeSet;

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::green::{self, Engine, GreenAnalysis, Mgs};
use crate::lattice::{self, PolygonKind, TorsionLattice};
use crate::modcat::{ModCat, Options};
use crate::module::{IndecId, ModuleSum};
use crate::oracle;
use crate::orders::{self, ClassPoset, OrderTag};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Equivalence characterisations agree.
    TheoremA,
    /// The deformation order is contained in the summand and HN orders.
    TheoremB,
    /// Nakayama algebras: all orders coincide.
    TheoremC,
    Lemmas,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theoremA" => Ok(Suite::TheoremA),
            "theoremB" => Ok(Suite::TheoremB),
            "theoremC" => Ok(Suite::TheoremC),
            "lemmas" => Ok(Suite::Lemmas),
            "all" => Ok(Suite::All),
            _ => {
                Err(Error::Usage(format!("unknown suite {s:?}; expected theoremA, theoremB, theoremC, lemmas or all")))
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Gates {
    pub bricks: usize,
    pub subsets: usize,
}

impl Default for Gates {
    fn default() -> Self {
        Gates { bricks: green::DEFAULT_BRICK_GATE, subsets: lattice::DEFAULT_SUBSET_GATE }
    }
}

/// One algebra with its sequences, classes, orders and (when the subset
/// gate allows) its brute-force torsion lattice.
pub struct Workbench {
    pub cat: ModCat,
    pub analysis: GreenAnalysis,
    pub posets: Vec<ClassPoset>,
    pub lattice: Option<TorsionLattice>,
}

impl Workbench {
    pub fn new(spec: &AlgebraSpec, gates: Gates, options: Options) -> Result<Self> {
        let cat = ModCat::with_options(spec, options)?;
        let analysis = GreenAnalysis::new(&cat, gates.bricks, options.parallel)?;
        let posets = orders::build_all_orders(&cat, &analysis)?;
        let lattice = match lattice::torsion_lattice(&cat, gates.subsets) {
            Ok(l) => Some(l),
            Err(Error::GateExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(Workbench { cat, analysis, posets, lattice })
    }

    pub fn poset(&self, tag: OrderTag) -> Option<&ClassPoset> {
        self.posets.iter().find(|p| p.tag == tag)
    }

    fn names(&self, ids: &[IndecId]) -> String {
        format!("[{}]", self.cat.names(ids).join(","))
    }

    fn rep(&self, class: usize) -> &Mgs {
        self.analysis.representative(class)
    }
}

pub fn run_suite(wb: &Workbench, suite: Suite) -> Vec<Check> {
    let mut out = Vec::new();
    if matches!(suite, Suite::TheoremA | Suite::All) {
        out.push(equivalence_agreement(wb));
    }
    if matches!(suite, Suite::TheoremB | Suite::All) {
        out.extend(pentagon_containment(wb));
        out.push(hn_order_shrinks_bricks(wb));
        out.push(deformations_shorten(wb));
    }
    if matches!(suite, Suite::TheoremC | Suite::All) {
        out.extend(nakayama_checks(wb));
    }
    if matches!(suite, Suite::Lemmas | Suite::All) {
        out.extend(property_checks(wb));
    }
    out
}

pub fn property_checks(wb: &Workbench) -> Vec<Check> {
    let mut out = vec![
        extensions_of_orthogonal_bricks(wb),
        adjacent_ext_vanishing(wb),
        simple_endpoints(wb),
        relative_simples_are_bricks(wb),
        exchange_summands_unique(wb),
        summand_count(wb),
        module_summand_count(wb),
        hn_additivity(wb),
        two_simples_orders_equal(wb),
        ext_oracle(wb),
        type_a_hom_thin(wb),
        closure_outputs_are_torsion_classes(wb),
        exchange_persistence(wb),
    ];
    out.extend(lattice_checks(wb));
    out.extend(orders::check_extrema(&wb.cat, &wb.analysis, &wb.posets));
    out
}

// ---------------------------------------------------------------------------
// Equivalence and orders

pub fn equivalence_agreement(wb: &Workbench) -> Check {
    let name = "equivalence: swap closure = summand sets = exchange pairs = stable factors";
    let p = &wb.analysis.partitions;
    if p.all_agree() {
        Check::pass(name, format!("{} sequences in {} classes", wb.analysis.mgs.len(), wb.analysis.classes.len()))
    } else {
        Check::fail(name, format!("{} differ from swap closure", p.disagreements().join(", ")))
    }
}

pub fn pentagon_containment(wb: &Workbench) -> Vec<Check> {
    let pent = wb.poset(OrderTag::Pentagon).expect("pentagon order always built");
    [OrderTag::Summand, OrderTag::Hn]
        .into_iter()
        .map(|tag| {
            let other = wb.poset(tag).expect("order built");
            let missing: Vec<String> = pent
                .strict_pairs()
                .into_iter()
                .filter(|&(a, b)| !other.leq(a, b))
                .map(|(a, b)| format!("{} <= {}", wb.names(&wb.rep(a).bricks), wb.names(&wb.rep(b).bricks)))
                .collect();
            Check::from_failures(
                format!("pentagon relation within {} relation", tag.name()),
                format!("{} strict pairs", pent.strict_pairs().len()),
                &missing,
            )
        })
        .collect()
}

pub fn hn_order_shrinks_bricks(wb: &Workbench) -> Check {
    let hn = wb.poset(OrderTag::Hn).expect("hn order built");
    let mut bad = Vec::new();
    for (a, b) in hn.strict_pairs() {
        let (ba, bb) = (wb.rep(a).brick_set(), wb.rep(b).brick_set());
        if !(ba.is_superset(&bb) && ba != bb) {
            bad.push(format!("classes {a} < {b} without strict brick inclusion"));
        }
    }
    Check::from_failures("hn order strictly shrinks brick sets", "", &bad)
}

pub fn deformations_shorten(wb: &Workbench) -> Check {
    let covers = match orders::iepd_covers(&wb.cat, &wb.analysis) {
        Ok(c) => c,
        Err(e) => return Check::fail("deformations shorten sequences", e.to_string()),
    };
    let bad: Vec<String> = covers
        .iter()
        .filter(|&&(long, short)| wb.rep(long).len() <= wb.rep(short).len())
        .map(|&(l, s)| format!("classes {l} -> {s}"))
        .collect();
    Check::from_failures("deformations shorten sequences", format!("{} covers", covers.len()), &bad)
}

pub fn two_simples_orders_equal(wb: &Workbench) -> Check {
    let name = "two simples: all orders equal";
    if wb.cat.num_vertices() != 2 {
        return Check::skipped(name, "algebra does not have exactly two simples");
    }
    let r = orders::orders_equal_report(&wb.posets);
    let bad: Vec<String> =
        r.differences.iter().map(|d| format!("{} vs {}: {:?}", d.left.name(), d.right.name(), d.pairs)).collect();
    Check::from_failures(name, "", &bad)
}

pub fn exchange_persistence(wb: &Workbench) -> Check {
    let pent = wb.poset(OrderTag::Pentagon).expect("pentagon order always built");
    Check::from_failures(
        "exchange pairs persist down the pentagon order",
        "",
        &orders::exchange_persistence(&wb.analysis, pent),
    )
}

// ---------------------------------------------------------------------------
// Nakayama-specific

pub fn nakayama_checks(wb: &Workbench) -> Vec<Check> {
    let names = [
        "nakayama: all four orders equal",
        "nakayama: equal brick sets give equal classes",
        "nakayama: socle quotients are the non-projective summands",
        "nakayama: filtrations by orthogonal bricks are unique",
    ];
    if !wb.cat.spec().is_nakayama() {
        return names.iter().map(|n| Check::skipped(*n, "not a Nakayama algebra")).collect();
    }
    let a = &wb.analysis;
    let r = orders::orders_equal_report(&wb.posets);
    let diff: Vec<String> =
        r.differences.iter().map(|d| format!("{} vs {}: {:?}", d.left.name(), d.right.name(), d.pairs)).collect();

    let mut same_bricks = Vec::new();
    for i in 0..a.mgs.len() {
        for j in i + 1..a.mgs.len() {
            if a.class_of[i] != a.class_of[j] && a.mgs[i].brick_set() == a.mgs[j].brick_set() {
                same_bricks.push(format!("{} and {}", wb.names(&a.mgs[i].bricks), wb.names(&a.mgs[j].bricks)));
            }
        }
    }

    let phi: Vec<String> = (0..a.mgs.len())
        .filter(|&i| !orders::verify_phi(&wb.cat, a, i).unwrap_or(false))
        .map(|i| wb.names(&a.mgs[i].bricks))
        .collect();

    vec![
        Check::from_failures(names[0], format!("{} classes", a.classes.len()), &diff),
        Check::from_failures(names[1], "", &same_bricks),
        Check::from_failures(names[2], format!("{} sequences", a.mgs.len()), &phi),
        Check::from_failures(names[3], "", &unique_orthogonal_filtrations(&wb.cat)),
    ]
}

/// Every factor sequence of a uniserial module whose factors are bricks.
fn brick_filtrations(cat: &ModCat, id: IndecId) -> Vec<Vec<IndecId>> {
    let nak = cat.backend().as_nakayama().expect("Nakayama backend");
    let (top, length) = nak.descriptor_of(id);
    let mut out = Vec::new();
    // Cut points between radical layers; factors listed from the top.
    for cuts in 0u32..(1 << (length - 1)) {
        let mut factors = Vec::new();
        let mut start = 0;
        for k in 1..=length {
            if k == length || cuts >> (k - 1) & 1 == 1 {
                let f_top = (top - 1 + start) % cat.num_vertices() + 1;
                factors.push(nak.id_of(f_top, k - start).expect("factor admissible"));
                start = k;
            }
        }
        if factors.iter().all(|&f| cat.is_brick(f)) {
            out.push(factors);
        }
    }
    out
}

fn pairwise_orthogonal(cat: &ModCat, set: &BTreeSet<IndecId>) -> bool {
    set.iter().all(|&x| set.iter().all(|&y| x == y || cat.hom_dim(x, y) == 0))
}

/// Two distinct brick filtrations of one module whose combined factor set
/// is pairwise Hom-orthogonal would contradict uniqueness.
pub fn unique_orthogonal_filtrations(cat: &ModCat) -> Vec<String> {
    let mut bad = Vec::new();
    for id in 0..cat.len() {
        let fs = brick_filtrations(cat, id);
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                let union: BTreeSet<IndecId> = fs[i].iter().chain(&fs[j]).copied().collect();
                if pairwise_orthogonal(cat, &union) {
                    bad.push(format!("{}: {:?} vs {:?}", cat.name(id), cat.names(&fs[i]), cat.names(&fs[j])));
                }
            }
        }
    }
    bad
}

// ---------------------------------------------------------------------------
// Per-sequence and per-module properties

pub fn extensions_of_orthogonal_bricks(wb: &Workbench) -> Check {
    let cat = &wb.cat;
    let mut bad = Vec::new();
    let mut seen = 0;
    for e in 0..cat.len() {
        for r in cat.sub_quotient_pairs(e) {
            let (&[l], &[n]) = (r.sub.ids(), r.quot.ids()) else { continue };
            if cat.is_brick(l) && cat.is_brick(n) && cat.hom_dim(l, n) == 0 && cat.hom_dim(n, l) == 0 {
                seen += 1;
                if !cat.is_brick(e) {
                    bad.push(format!("0 -> {} -> {} -> {} -> 0", cat.name(l), cat.name(e), cat.name(n)));
                }
            }
        }
    }
    Check::from_failures("extensions of Hom-orthogonal bricks are bricks", format!("{seen} extensions"), &bad)
}

pub fn adjacent_ext_vanishing(wb: &Workbench) -> Check {
    let cat = &wb.cat;
    let mut bad = Vec::new();
    for g in &wb.analysis.mgs {
        for w in g.bricks.windows(2) {
            if cat.hom_dim(w[0], w[1]) == 0 && cat.ext1_dim(w[1], w[0]) != 0 {
                bad.push(format!("{} at {}, {}", wb.names(&g.bricks), cat.name(w[0]), cat.name(w[1])));
            }
        }
    }
    Check::from_failures("adjacent Hom vanishing forces backward Ext vanishing", "", &bad)
}

pub fn simple_endpoints(wb: &Workbench) -> Check {
    let cat = &wb.cat;
    let bad: Vec<String> = wb
        .analysis
        .mgs
        .iter()
        .filter(|g| !(cat.is_simple(g.bricks[0]) && cat.is_simple(*g.bricks.last().expect("non-empty"))))
        .map(|g| wb.names(&g.bricks))
        .collect();
    Check::from_failures("first and last bricks are simple", "", &bad)
}

pub fn relative_simples_are_bricks(wb: &Workbench) -> Check {
    let cat = &wb.cat;
    let mut bad = Vec::new();
    for g in &wb.analysis.mgs {
        let union: BTreeSet<IndecId> =
            green::torsion_chain(cat, g).iter().flat_map(|t| cat.relative_simples(t)).collect();
        if union != g.brick_set() {
            bad.push(wb.names(&g.bricks));
        }
    }
    Check::from_failures("relative simples along the chain are the bricks", "", &bad)
}

pub fn exchange_summands_unique(wb: &Workbench) -> Check {
    let mut bad = Vec::new();
    for (g, d) in wb.analysis.mgs.iter().zip(&wb.analysis.data) {
        let outs: BTreeSet<_> = d.exchange_seq.iter().map(|e| e.out).collect();
        let ins: BTreeSet<_> = d.exchange_seq.iter().map(|e| e.in_).collect();
        if outs.len() != d.exchange_seq.len() || ins.len() != d.exchange_seq.len() {
            bad.push(wb.names(&g.bricks));
        }
    }
    Check::from_failures("each summand leaves and enters at most once", "", &bad)
}

pub fn summand_count(wb: &Workbench) -> Check {
    let n = wb.cat.num_vertices();
    let bad: Vec<String> = wb
        .analysis
        .mgs
        .iter()
        .zip(&wb.analysis.data)
        .filter(|(g, d)| d.summands.len() != n + g.len())
        .map(|(g, d)| format!("{} has {} summands", wb.names(&g.bricks), d.summands.len()))
        .collect();
    Check::from_failures("summand count is vertices plus length", "", &bad)
}

pub fn module_summand_count(wb: &Workbench) -> Check {
    let bad: Vec<String> = wb
        .analysis
        .mgs
        .iter()
        .zip(&wb.analysis.data)
        .filter(|(g, d)| d.summands.iter().filter(|s| matches!(s, green::SiltingSummand::Module(_))).count() != g.len())
        .map(|(g, _)| wb.names(&g.bricks))
        .collect();
    Check::from_failures("module summand count equals length", "", &bad)
}

pub fn hn_additivity(wb: &Workbench) -> Check {
    let cat = &wb.cat;
    let mut eng = Engine::new(cat);
    let mut bad = Vec::new();
    for c in 0..wb.analysis.classes.len() {
        let g = wb.rep(c).clone();
        for m in 0..cat.len() {
            for n in m..cat.len() {
                let sum = ModuleSum::new(vec![m, n]);
                let joint = eng.hn_filtration(&sum, &g);
                let parts = eng
                    .hn_filtration(&ModuleSum::single(m), &g)
                    .and_then(|a| Ok((a, eng.hn_filtration(&ModuleSum::single(n), &g)?)));
                match (joint, parts) {
                    (Ok(j), Ok((a, b))) => {
                        let mut u = a.stable_factors();
                        u.extend(b.stable_factors());
                        u.sort_unstable();
                        if j.stable_factors() != u {
                            bad.push(format!("{} + {} along {}", cat.name(m), cat.name(n), wb.names(&g.bricks)));
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => bad.push(e.to_string()),
                }
            }
        }
    }
    Check::from_failures("HN stable factors are additive over direct sums", "", &bad)
}

pub fn ext_oracle(wb: &Workbench) -> Check {
    let bad: Vec<String> = oracle::ext_disagreements(&wb.cat)
        .into_iter()
        .map(|(m, n, table, o)| {
            format!("({}, {}): table ext {table}, oracle hom {} ext {}", wb.cat.name(m), wb.cat.name(n), o.hom, o.ext1)
        })
        .collect();
    Check::from_failures("Ext formula matches the presentation oracle", format!("{} pairs", wb.cat.len().pow(2)), &bad)
}

pub fn type_a_hom_thin(wb: &Workbench) -> Check {
    let name = "type A Hom dimensions are 0 or 1";
    if wb.cat.spec().is_nakayama() {
        return Check::skipped(name, "not a type-A algebra");
    }
    let cat = &wb.cat;
    let bad: Vec<String> = (0..cat.len())
        .flat_map(|m| (0..cat.len()).map(move |n| (m, n)))
        .filter(|&(m, n)| cat.hom_dim(m, n) > 1)
        .map(|(m, n)| format!("Hom({}, {}) = {}", cat.name(m), cat.name(n), cat.hom_dim(m, n)))
        .collect();
    Check::from_failures(name, "", &bad)
}

pub fn closure_outputs_are_torsion_classes(wb: &Workbench) -> Check {
    let cat = &wb.cat;
    let mut bad = Vec::new();
    for g in &wb.analysis.mgs {
        for t in green::torsion_chain(cat, g) {
            if !cat.is_torsion_class(&t.members) {
                bad.push(format!("{:?}", cat.names(&t.ids())));
            }
        }
    }
    for b in cat.bricks() {
        if !cat.is_torsion_class(&cat.torsion_closure(&cat.set_of([b])).members) {
            bad.push(format!("T({})", cat.name(b)));
        }
    }
    Check::from_failures("torsion closures satisfy both closure properties", "", &bad)
}

// ---------------------------------------------------------------------------
// Against the brute-force lattice

pub fn lattice_checks(wb: &Workbench) -> Vec<Check> {
    let names = [
        "sequence count equals maximal chain count",
        "sequences are the label sequences of maximal chains",
        "torsion chain steps are lattice covers with matching labels",
        "torsion lattice is n-regular",
        "chain intervals are filtered by their labels",
        "oriented polygons give exactly the deformation covers",
        "unoriented polygons relate incomparable classes",
        "squares are exactly the swaps",
    ];
    let Some(l) = &wb.lattice else {
        return names.iter().map(|n| Check::skipped(*n, "subset gate exceeded")).collect();
    };
    let cat = &wb.cat;
    let a = &wb.analysis;

    let count = l.count_maximal_chains();
    let c0 = if count == a.mgs.len() as u128 {
        Check::pass(names[0], format!("{count}"))
    } else {
        Check::fail(names[0], format!("{} sequences, {count} chains", a.mgs.len()))
    };

    let mut seqs: Vec<Vec<IndecId>> = a.mgs.iter().map(|g| g.bricks.clone()).collect();
    seqs.sort();
    let c1 = if seqs == l.maximal_chain_labels() {
        Check::pass(names[1], "")
    } else {
        Check::fail(names[1], "label sequences differ from enumerated sequences")
    };

    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut bad = Vec::new();
    for g in &a.mgs {
        let idx: Option<Vec<usize>> = green::torsion_chain(cat, g).iter().map(|t| l.index_of(&t.members)).collect();
        match idx {
            Some(idx) => {
                if l.path_labels_checked(&idx).as_deref() != Some(g.bricks.as_slice()) {
                    bad.push(wb.names(&g.bricks));
                }
                chains.push(idx);
            }
            None => {
                bad.push(format!("{}: chain leaves the lattice", wb.names(&g.bricks)));
                chains.push(Vec::new());
            }
        }
    }
    let c2 = Check::from_failures(names[2], "", &bad);

    let n = cat.num_vertices();
    let bad: Vec<String> = (0..l.len())
        .filter(|&i| l.lower_covers(i).len() + l.upper_covers(i).len() != n)
        .map(|i| format!("{:?}", cat.names(&l.elements[i].ids())))
        .collect();
    let c3 = Check::from_failures(names[3], format!("{} elements", l.len()), &bad);

    let mut bad = Vec::new();
    for (g, chain) in a.mgs.iter().zip(&chains) {
        if chain.is_empty() {
            continue;
        }
        for i in 0..g.len() {
            for j in i + 1..=g.len() {
                let ti = &l.elements[chain[i]].members;
                let tj = &l.elements[chain[j]].members;
                let interval = ti.intersection(&cat.right_perp(tj));
                if interval != cat.filt_closure(&cat.set_of(g.bricks[i..j].iter().copied())) {
                    bad.push(format!("{} between positions {i} and {j}", wb.names(&g.bricks)));
                }
            }
        }
    }
    let c4 = Check::from_failures(names[4], "", &bad);

    let (c5, c6, c7) = match l.polygons() {
        Err(e) => {
            let f = |n: &str| Check::fail(n, e.to_string());
            (f(names[5]), f(names[6]), f(names[7]))
        }
        Ok(polys) => polygon_checks(wb, l, &chains, &polys, [names[5], names[6], names[7]]),
    };
    vec![c0, c1, c2, c3, c4, c5, c6, c7]
}

/// Replace one side of a polygon by the other inside a chain, if the chain
/// runs along that side.
fn deform(chain: &[usize], from: &[usize], to: &[usize]) -> Option<Vec<usize>> {
    let start = chain.windows(from.len()).position(|w| w == from)?;
    let mut out = chain[..start].to_vec();
    out.extend_from_slice(to);
    out.extend_from_slice(&chain[start + from.len()..]);
    Some(out)
}

fn polygon_checks(
    wb: &Workbench,
    l: &TorsionLattice,
    chains: &[Vec<usize>],
    polys: &[lattice::Polygon],
    names: [&str; 3],
) -> (Check, Check, Check) {
    let a = &wb.analysis;
    let mut oriented_pairs = BTreeSet::new();
    let (mut bad_un, mut bad_sq) = (Vec::new(), Vec::new());
    let mut lookup_fail = Vec::new();
    for p in polys {
        for (s, t) in [(0, 1), (1, 0)] {
            for (gi, chain) in chains.iter().enumerate() {
                let Some(other) = deform(chain, &p.sides[s], &p.sides[t]) else { continue };
                let bricks = l.path_labels(&other);
                let Some(hi) = a.index_of(&bricks) else {
                    lookup_fail.push(format!("deformed chain {} not enumerated", wb.names(&bricks)));
                    continue;
                };
                let (cg, ch) = (a.class_of[gi], a.class_of[hi]);
                match p.kind() {
                    PolygonKind::Oriented if p.sides[s].len() > p.sides[t].len() => {
                        oriented_pairs.insert((cg, ch));
                    }
                    PolygonKind::Oriented => {}
                    PolygonKind::Unoriented => {
                        if cg == ch || wb.posets.iter().any(|q| q.leq(cg, ch) || q.leq(ch, cg)) {
                            bad_un.push(format!("{} vs {}", wb.names(&a.mgs[gi].bricks), wb.names(&bricks)));
                        }
                    }
                    PolygonKind::Square => {
                        let pos = chain.windows(p.sides[s].len()).position(|w| w == p.sides[s].as_slice());
                        let swapped = pos.and_then(|k| green::square_swap(&wb.cat, &a.mgs[gi], k).ok().flatten());
                        if swapped.map(|h| h.bricks) != Some(bricks.clone()) || cg != ch {
                            bad_sq.push(format!("{} vs {}", wb.names(&a.mgs[gi].bricks), wb.names(&bricks)));
                        }
                    }
                }
            }
        }
    }
    let covers: BTreeSet<(usize, usize)> = match orders::iepd_covers(&wb.cat, a) {
        Ok(c) => c.into_iter().collect(),
        Err(e) => {
            lookup_fail.push(e.to_string());
            BTreeSet::new()
        }
    };
    let mut bad_or = lookup_fail;
    if covers != oriented_pairs {
        bad_or.push(format!("brick patterns {covers:?} vs polygons {oriented_pairs:?}"));
    }
    (
        Check::from_failures(names[0], format!("{} covers", covers.len()), &bad_or),
        Check::from_failures(names[1], "", &bad_un),
        Check::from_failures(names[2], "", &bad_sq),
    )
}
