use mgs_core::green::{self, summand_name, GreenAnalysis, Mgs};
use mgs_core::orders::{self, OrderTag};
use mgs_core::verify::{self, Gates, Suite, Workbench};
use mgs_core::{AlgebraSpec, Error, IndecId, ModCat, Options, Result};
use serde::Serialize;

use crate::dot;
use crate::module_expr::{self, MgsSelector};
use crate::reports::*;

/// Rendered output and whether the command found a violation.
pub struct Output {
    pub text: String,
    pub violation: bool,
}

impl Output {
    fn json<T: Serialize>(report: &T) -> Self {
        let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
        text.push('\n');
        Output { text, violation: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PosetFormat {
    Dot,
    Json,
}

pub struct Settings {
    pub gates: Gates,
    pub options: Options,
}

fn module_ref(cat: &ModCat, id: IndecId) -> ModuleRef {
    ModuleRef { id, descriptor: cat.indec(id).descriptor.to_string(), name: cat.name(id).to_string() }
}

fn names(cat: &ModCat, ids: &[IndecId]) -> Vec<String> {
    ids.iter().map(|&i| cat.name(i).to_string()).collect()
}

fn analysis(cat: &ModCat, s: &Settings) -> Result<GreenAnalysis> {
    GreenAnalysis::new(cat, s.gates.bricks, s.options.parallel)
}

pub fn catalog(spec: &AlgebraSpec, s: &Settings) -> Result<Output> {
    let cat = ModCat::with_options(spec, s.options)?;
    let modules = cat
        .indecomposables()
        .iter()
        .map(|m| ModuleEntry {
            id: m.id,
            descriptor: m.descriptor.to_string(),
            name: m.name.clone(),
            dimvec: m.dimvec.0.clone(),
            brick: cat.is_brick(m.id),
            projective: cat.is_projective(m.id),
            simple: cat.is_simple(m.id),
        })
        .collect();
    Ok(Output::json(&CatalogReport { algebra: spec.to_string(), vertices: cat.num_vertices(), modules }))
}

pub fn bricks(spec: &AlgebraSpec, s: &Settings) -> Result<Output> {
    let cat = ModCat::with_options(spec, s.options)?;
    let bricks: Vec<ModuleRef> = cat.bricks().into_iter().map(|b| module_ref(&cat, b)).collect();
    Ok(Output::json(&BricksReport { algebra: spec.to_string(), count: bricks.len(), bricks }))
}

pub fn mgs(spec: &AlgebraSpec, s: &Settings) -> Result<Output> {
    let cat = ModCat::with_options(spec, s.options)?;
    let a = analysis(&cat, s)?;
    let sequences: Vec<Sequence> = a
        .mgs
        .iter()
        .enumerate()
        .map(|(index, g)| Sequence {
            index,
            class: a.class_of[index],
            ids: g.bricks.clone(),
            descriptors: g.bricks.iter().map(|&b| cat.indec(b).descriptor.to_string()).collect(),
            names: names(&cat, &g.bricks),
        })
        .collect();
    Ok(Output::json(&MgsReport { algebra: spec.to_string(), count: sequences.len(), sequences }))
}

pub fn classes(spec: &AlgebraSpec, s: &Settings) -> Result<Output> {
    let cat = ModCat::with_options(spec, s.options)?;
    let a = analysis(&cat, s)?;
    let classes: Vec<ClassEntry> = a
        .classes
        .iter()
        .enumerate()
        .map(|(index, c)| ClassEntry {
            index,
            summands: c.key.iter().map(|&x| summand_name(&cat, x)).collect(),
            members: c.members.clone(),
            representative: names(&cat, &a.representative(index).bricks),
        })
        .collect();
    let mut out = Output::json(&ClassesReport { algebra: spec.to_string(), count: classes.len(), classes });
    out.violation = !a.partitions.all_agree();
    Ok(out)
}

pub fn poset(spec: &AlgebraSpec, s: &Settings, tag: OrderTag, format: PosetFormat) -> Result<Output> {
    let cat = ModCat::with_options(spec, s.options)?;
    let a = analysis(&cat, s)?;
    let p = orders::build_order(&cat, tag, &a)?;
    let nodes = (0..a.classes.len())
        .map(|c| PosetNode {
            class: c,
            summand_count: a.data[a.classes[c].members[0]].summands.len(),
            representative: names(&cat, &a.representative(c).bricks),
        })
        .collect();
    let report = PosetReport {
        algebra: spec.to_string(),
        order: tag.name().to_string(),
        nodes,
        relation: p.strict_pairs().into_iter().map(|(x, y)| [x, y]).collect(),
        covers: p.covers.iter().map(|&(x, y)| [x, y]).collect(),
    };
    Ok(match format {
        PosetFormat::Json => Output::json(&report),
        PosetFormat::Dot => Output { text: dot::render(&report), violation: false },
    })
}

pub fn hn(spec: &AlgebraSpec, s: &Settings, mgs_arg: &str, module: &str) -> Result<Output> {
    let cat = ModCat::with_options(spec, s.options)?;
    let g = match module_expr::parse_mgs(&cat, mgs_arg)? {
        MgsSelector::Index(i) => {
            let all = green::enumerate_mgs(&cat, s.gates.bricks, s.options.parallel)?;
            let count = all.len();
            all.into_iter()
                .nth(i)
                .ok_or_else(|| Error::Usage(format!("sequence index {i} out of range ({count} sequences)")))?
        }
        MgsSelector::Bricks(bricks) => {
            if let Some(why) = green::mgs_violation(&cat, &bricks) {
                return Err(Error::Usage(format!("not a maximal green sequence: {why}")));
            }
            Mgs::new(bricks)
        }
    };
    let m = module_expr::parse_module(&cat, module)?;
    let r = green::hn_filtration(&cat, &m, &g)?;
    let layers = r
        .layers
        .iter()
        .map(|l| Layer {
            brick: cat.name(l.brick).to_string(),
            factor: names(&cat, l.factor.ids()),
            multiplicity: l.multiplicity,
        })
        .collect();
    Ok(Output::json(&HnReport {
        algebra: spec.to_string(),
        mgs: names(&cat, &g.bricks),
        module: names(&cat, m.ids()),
        layers,
        stable: names(&cat, &r.stable_factors()),
    }))
}

pub fn verify(spec: &AlgebraSpec, s: &Settings, suite: &str) -> Result<Output> {
    let parsed: Suite = suite.parse()?;
    let wb = Workbench::new(spec, s.gates, s.options)?;
    let checks = verify::run_suite(&wb, parsed);
    let passed = !checks.iter().any(|c| c.failed());
    let mut out = Output::json(&VerifyReport { algebra: spec.to_string(), suite: suite.to_string(), passed, checks });
    out.violation = !passed;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::de::DeserializeOwned;

    fn settings() -> Settings {
        Settings { gates: Gates::default(), options: Options::default() }
    }

    fn round_trips<T: Serialize + DeserializeOwned>(out: Output) {
        let parsed: T = serde_json::from_str(&out.text).unwrap();
        assert_eq!(Output::json(&parsed).text, out.text);
    }

    #[test]
    fn every_json_report_round_trips() {
        let spec = AlgebraSpec::type_a("<>").unwrap();
        let s = settings();
        round_trips::<CatalogReport>(catalog(&spec, &s).unwrap());
        round_trips::<BricksReport>(bricks(&spec, &s).unwrap());
        round_trips::<MgsReport>(mgs(&spec, &s).unwrap());
        round_trips::<ClassesReport>(classes(&spec, &s).unwrap());
        round_trips::<PosetReport>(poset(&spec, &s, OrderTag::Hn, PosetFormat::Json).unwrap());
        round_trips::<HnReport>(hn(&spec, &s, "3", "#2+#4").unwrap());
        round_trips::<VerifyReport>(verify(&spec, &s, "theoremB").unwrap());
    }

    #[test]
    fn verify_flags_violations_only_on_failure() {
        let out = verify(&AlgebraSpec::linear_nakayama(&[2, 1]).unwrap(), &settings(), "all").unwrap();
        assert!(!out.violation);
        assert!(verify(&AlgebraSpec::linear_nakayama(&[2, 1]).unwrap(), &settings(), "bogus").is_err());
    }
}
