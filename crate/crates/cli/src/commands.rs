use std::fs;
use std::path::{Path, PathBuf};

use neardomain::equivalence::{roundtrip_theorem1_near_domain, roundtrip_theorem1_phi};
use neardomain::json::{parse_document, Document, NearDomainJson, PairGroupJson, PhiJson};
use neardomain::near_domain::translation_properties;
use neardomain::phi::F4_DOMAIN_NOTE;
use neardomain::search::census_csv;
use neardomain::two_transitive::{roundtrip_theorem2_action, roundtrip_theorem2_phi};
use neardomain::{
    a_map, build_group, check_derived_identities, classify, f_l_map, from_group,
    lemma_closed_forms, make_example, nearfield_census, search_phi, validate_near_domain,
    validate_phi, verify_example_formulas, ExampleSpec, Field, GroupTable, NearDomain, PhiSystem,
    Report,
};
use serde_json::{json, Value};

use crate::{Command, FamilyArg};

macro_rules! to_value {
    ($e:expr) => {
        serde_json::to_value($e).expect("serializable")
    };
}

#[derive(Debug)]
pub enum Failure {
    /// Unreadable input, malformed tables, bad flags: exit 2.
    Usage(String),
    /// The input parsed but does not satisfy the axioms the command needs: exit 1.
    Axioms(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Axioms(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Axioms(m) => m,
        }
    }
}

/// What a command produced. Only `reports` decide the exit status; `info`
/// is printed but never fails the run.
pub struct Outcome {
    pub command: &'static str,
    pub headline: String,
    pub notes: Vec<String>,
    pub reports: Vec<Report>,
    pub info: Vec<Report>,
    pub data: Value,
    pub inline_output: Option<Value>,
}

impl Outcome {
    fn new(command: &'static str) -> Self {
        Outcome {
            command,
            headline: String::new(),
            notes: Vec::new(),
            reports: Vec::new(),
            info: Vec::new(),
            data: Value::Null,
            inline_output: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "passed": self.passed(),
            "headline": self.headline,
            "notes": self.notes,
            "reports": self.reports,
            "info": self.info,
            "data": self.data,
            "output": self.inline_output,
        })
    }

    fn emit(&mut self, path: Option<&PathBuf>, doc: Value) -> Result<(), Failure> {
        match path {
            Some(p) => {
                let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
                fs::write(p, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))?;
                self.notes.push(format!("wrote {}", p.display()));
            }
            None => self.inline_output = Some(doc),
        }
        Ok(())
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_document(&text)?)
}

fn load_phi(path: &Path) -> Result<PhiSystem, Failure> {
    match load(path)? {
        Document::Phi(s) => Ok(s),
        _ => Err(Failure::Usage(format!(
            "{} is not a phi-system document",
            path.display()
        ))),
    }
}

fn load_near_domain(path: &Path) -> Result<NearDomain, Failure> {
    match load(path)? {
        Document::NearDomain(d) => Ok(d),
        _ => Err(Failure::Usage(format!(
            "{} is not a near-domain document",
            path.display()
        ))),
    }
}

fn example_spec(q: usize, family: FamilyArg, a: Option<usize>) -> Result<ExampleSpec, Failure> {
    match (family, a) {
        (FamilyArg::Scaling, Some(a)) => Ok(ExampleSpec::scaling(q, a)),
        (FamilyArg::Scaling, None) => Err(Failure::Usage("--family scaling needs --a".into())),
        (FamilyArg::Inverse, None) => Ok(ExampleSpec::inverse(q)),
        (FamilyArg::Inverse, Some(_)) => Err(Failure::Usage(
            "--a only applies to --family scaling".into(),
        )),
    }
}

pub fn run(command: &Command, verbose: bool) -> Result<Outcome, Failure> {
    let mut out = Outcome::new(command.name());
    match command {
        Command::CheckPhi { input } => {
            let s = load_phi(input)?;
            let report = validate_phi(&s);
            out.headline = format!("F1..F4 {} (n={})", verdict(report.passed()), s.n());
            if verbose {
                out.notes.push(F4_DOMAIN_NOTE.to_string());
            }
            let valid = report.passed();
            out.reports.push(report);
            if valid {
                out.reports.push(check_derived_identities(&s));
            }
        }
        Command::CheckNd { input } => {
            let d = load_near_domain(input)?;
            let (report, witnesses) = validate_near_domain(&d);
            out.headline = format!("A1..A7 {} (n={})", verdict(report.passed()), d.n());
            out.data = json!({ "witnesses": witnesses });
            out.reports.push(report);
        }
        Command::Lemma { input } => {
            let d = load_near_domain(input)?;
            let (report, w) = validate_near_domain(&d);
            let valid = report.passed();
            out.reports.push(report);
            if valid {
                out.reports.push(lemma_closed_forms(&d, &w));
                out.reports.push(translation_properties(&d));
            }
            out.headline = format!("closed forms {} (n={})", verdict(out.passed()), d.n());
        }
        Command::Classify { input } => {
            let d = load_near_domain(input)?;
            let (report, _) = validate_near_domain(&d);
            let valid = report.passed();
            out.reports.push(report);
            if !valid {
                out.headline = format!("not a right near-domain (n={})", d.n());
                return Ok(out);
            }
            let c = classify(&d);
            out.headline = format!(
                "additive_associative={} right_distributive={} left_distributive={} \
                 symmetric_zero={} two_sided_zero={} l_additive={} near_field_candidate={}",
                c.additive_associative,
                c.right_distributive,
                c.left_distributive,
                c.symmetric_zero,
                c.two_sided_zero,
                c.l_additive,
                c.near_field_candidate
            );
            out.data = to_value!(&c);
            out.info.push(c.details);
        }
        Command::AMap { input, output } => {
            let d = load_near_domain(input)?;
            let s = a_map(&d)?;
            let report = validate_phi(&s);
            out.headline = format!(
                "phi = {:?}, F1..F4 {}",
                s.phi_map(),
                verdict(report.passed())
            );
            out.reports.push(report);
            out.emit(output.as_ref(), to_value!(&PhiJson::from(&s)))?;
        }
        Command::FMap { input, l, output } => {
            let s = load_phi(input)?;
            let d = f_l_map(&s, l)?;
            let (report, _) = validate_near_domain(&d);
            out.headline = format!("L = {l:?}, A1..A7 {}", verdict(report.passed()));
            out.reports.push(report);
            out.emit(output.as_ref(), to_value!(&NearDomainJson::from(&d)))?;
        }
        Command::BuildGroup {
            input,
            perms,
            output,
        } => {
            let s = load_phi(input)?;
            let g = build_group(&s)?;
            out.headline = format!(
                "|G|={}, sharply 2-transitive on {} points",
                g.order(),
                s.n()
            );
            out.reports.push(g.report().clone());
            out.emit(
                output.as_ref(),
                to_value!(&PairGroupJson::export(&g, *perms)),
            )?;
        }
        Command::FromGroup {
            input,
            base,
            output,
        } => {
            let p = match load(input)? {
                Document::Permutations(p) => p,
                _ => {
                    return Err(Failure::Usage(format!(
                        "{} is not a permutation group",
                        input.display()
                    )))
                }
            };
            let p = match base {
                Some(b) => p.with_base(*b)?,
                None => p,
            };
            let rec = from_group(&p)?;
            let report = validate_phi(&rec.system);
            out.headline = format!(
                "base ({}, {}): phi = {:?}, F1..F4 {}",
                rec.base.0,
                rec.base.1,
                rec.system.phi_map(),
                verdict(report.passed())
            );
            out.data = json!({ "relabel": rec.relabel });
            out.reports.push(rec.checks.clone());
            out.reports.push(report);
            out.emit(output.as_ref(), to_value!(&PhiJson::from(&rec.system)))?;
        }
        Command::Roundtrip1 { input } => match load(input)? {
            Document::Phi(s) => {
                let r = roundtrip_theorem1_phi(&s);
                out.headline = format!(
                    "{} maps L, round trip {}",
                    r.checks[0].cells,
                    verdict(r.passed())
                );
                out.reports.push(r);
            }
            Document::NearDomain(d) => {
                let r = roundtrip_theorem1_near_domain(&d)?;
                let sweep = roundtrip_theorem1_phi(&a_map(&d)?);
                out.reports.push(r);
                out.reports.push(sweep);
                out.headline = format!("near-domain round trips {}", verdict(out.passed()));
            }
            _ => {
                return Err(Failure::Usage(
                    "roundtrip1 takes a phi-system or a near-domain".into(),
                ))
            }
        },
        Command::Roundtrip2 { input, base } => {
            let (forward, backward, order) = match load(input)? {
                Document::Phi(s) => {
                    let b = base.unwrap_or((1, 0));
                    let forward = roundtrip_theorem2_phi(&s, b)?;
                    let group = build_group(&s)?;
                    let action = group.to_permutation_action(b)?;
                    (forward, roundtrip_theorem2_action(&action)?, group.order())
                }
                Document::Permutations(p) => {
                    let p = match base {
                        Some(b) => p.with_base(*b)?,
                        None => p,
                    };
                    let backward = roundtrip_theorem2_action(&p)?;
                    let rec = from_group(&p)?;
                    (
                        roundtrip_theorem2_phi(&rec.system, (1, 0))?,
                        backward,
                        p.order(),
                    )
                }
                _ => {
                    return Err(Failure::Usage(
                        "roundtrip2 takes a phi-system or a permutation group".into(),
                    ))
                }
            };
            out.reports.push(forward);
            out.reports.push(backward);
            out.headline = if out.passed() {
                format!("|G|={order}, both round trips pass")
            } else {
                format!("|G|={order}, round trip FAIL")
            };
        }
        Command::Example {
            q,
            family,
            a,
            output,
        } => {
            let spec = example_spec(*q, *family, *a)?;
            let d = make_example(&spec)?;
            let (report, _) = validate_near_domain(&d);
            out.headline = format!(
                "{} over GF({q}): A1..A7 {}",
                spec.family,
                verdict(report.passed())
            );
            out.reports.push(report);
            out.emit(output.as_ref(), to_value!(&NearDomainJson::from(&d)))?;
        }
        Command::VerifyExample { q, family, a } => {
            let spec = example_spec(*q, *family, *a)?;
            let d = make_example(&spec)?;
            let (report, w) = validate_near_domain(&d);
            let formulas = verify_example_formulas(&spec, &d, &w)?;
            out.headline = format!(
                "{} over GF({q}): formulas {}",
                spec.family,
                verdict(report.passed() && formulas.passed())
            );
            out.reports.push(report);
            out.reports.push(formulas);
        }
        Command::Search {
            group,
            q,
            cap,
            output,
            csv,
        } => {
            let table = match (group, q) {
                (Some(path), _) => match load(path)? {
                    Document::Group(g) => g,
                    Document::Phi(s) => s.group().clone(),
                    Document::NearDomain(d) => d.group().clone(),
                    Document::Permutations(_) => {
                        return Err(Failure::Usage("--group needs a group table".into()))
                    }
                },
                (None, Some(q)) => Field::of_order(*q)?.mul_group(),
                (None, None) => return Err(Failure::Usage("search needs --group or --q".into())),
            };
            run_search(&mut out, &table, *cap, output.as_ref(), csv.as_ref())?;
        }
    }
    Ok(out)
}

fn run_search(
    out: &mut Outcome,
    table: &GroupTable,
    cap: usize,
    output: Option<&PathBuf>,
    csv: Option<&PathBuf>,
) -> Result<(), Failure> {
    let result = search_phi(table, cap)?;
    let census = nearfield_census(&result);
    out.headline = format!(
        "n={}: {} phi maps satisfy F1..F4, {} up to isomorphism; {} near-domains, {} associative, {} non-associative meeting every classical condition",
        census.n,
        result.survivors.len(),
        census.representatives,
        census.valid_rows,
        census.associative,
        census.classical_non_associative.len()
    );
    out.data =
        json!({ "census": census, "survivors": result.survivors, "class_of": result.class_of });
    if let Some(path) = csv {
        let text = census_csv(&result)?;
        fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
        out.notes.push(format!("wrote {}", path.display()));
    }
    let records: Vec<PhiJson> = result.representatives.iter().map(PhiJson::from).collect();
    out.emit(output, to_value!(&records))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Usage("x".into()).code(), 2);
        assert_eq!(Failure::Axioms("x".into()).code(), 1);
    }

    #[test]
    fn family_flags() {
        assert!(example_spec(5, FamilyArg::Scaling, Some(2)).is_ok());
        assert!(example_spec(5, FamilyArg::Scaling, None).is_err());
        assert!(example_spec(5, FamilyArg::Inverse, Some(2)).is_err());
        assert_eq!(
            example_spec(7, FamilyArg::Inverse, None).unwrap(),
            ExampleSpec::inverse(7)
        );
    }

    #[test]
    fn example_inline_output() {
        let cmd = Command::Example {
            q: 3,
            family: FamilyArg::Inverse,
            a: None,
            output: None,
        };
        let out = run(&cmd, false).unwrap();
        assert!(out.passed());
        assert_eq!(out.inline_output.as_ref().unwrap()["n"], 3);
        assert_eq!(out.to_json()["command"], "example");
    }

    #[test]
    fn search_without_source_is_usage() {
        let cmd = Command::Search {
            group: None,
            q: None,
            cap: 7,
            output: None,
            csv: None,
        };
        assert_eq!(run(&cmd, false).err().unwrap().code(), 2);
    }
}
