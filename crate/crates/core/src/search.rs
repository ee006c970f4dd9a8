//! Exhaustive enumeration of phi-systems over a fixed group on `B₁`, and a
//! census of the right near-domains they induce.

use serde::Serialize;

use crate::algebra::{validate_group, GroupTable, UNIT, ZERO};
use crate::equivalence::{bijections, f_l_map, iso_check_phi};
use crate::error::{Error, Result};
use crate::near_domain::{classify, validate_near_domain, Classification};
use crate::phi::{check_derived_identities, validate_phi, PhiSystem};

pub const DEFAULT_CAP: usize = 7;

/// One induced near-domain: representative `phi_index` with map `l`.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub phi_index: usize,
    pub l: Vec<usize>,
    pub valid: bool,
    pub classification: Classification,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub group_used: GroupTable,
    /// Every `φ` with `φ(e) = 0` that satisfies F1–F4, in enumeration order.
    pub survivors: Vec<Vec<usize>>,
    /// Survivors for which `φ(0) = e`, `φ² = id` and `φEφ = EφE` also hold.
    pub derived_ok: usize,
    /// One system per isomorphism class, first found kept.
    pub representatives: Vec<PhiSystem>,
    /// `class_of[i]` is the representative index of `survivors[i]`.
    pub class_of: Vec<usize>,
    pub rows: Vec<CensusRow>,
}

impl SearchResult {
    pub fn any_non_associative(&self) -> bool {
        self.rows
            .iter()
            .any(|r| r.valid && !r.classification.additive_associative)
    }
}

/// F3 and F4 with early exit; the group is assumed valid.
fn satisfies_f3_f4(s: &PhiSystem) -> bool {
    let n = s.n();
    s.phi(UNIT) == ZERO
        && (2..n).all(|y| {
            let phi_y = s.phi(y);
            let right_factor = s.phi(s.ext_inv(y));
            phi_y != ZERO
                && right_factor != ZERO
                && (0..n).all(|x| {
                    s.phi(s.ext_mul(s.phi(x), phi_y))
                        == s.ext_mul(s.phi(s.ext_mul(x, right_factor)), y)
                })
        })
}

/// Enumerates every map `φ: B → B` with `φ(e) = 0`, keeps those satisfying
/// F1–F4, groups them up to isomorphism, and classifies `f_l_map(φ, L)` for
/// each representative and every bijection `L` of `B₁`.
pub fn search_phi(group: &GroupTable, cap: usize) -> Result<SearchResult> {
    let n = group.n();
    if n > cap {
        return Err(Error::Refused(format!(
            "n = {n} exceeds the search cap {cap}; the search visits n^(n-1) maps and \
             (n-1)! maps L per survivor, raise --cap explicitly to run it anyway"
        )));
    }
    let gr = validate_group(group);
    if !gr.passed() {
        return Err(Error::Invalid(gr.summary()));
    }

    let mut survivors = Vec::new();
    let mut phi = vec![0; n];
    phi[UNIT] = ZERO;
    let free: Vec<usize> = (0..n).filter(|&x| x != UNIT).collect();
    loop {
        let s = PhiSystem::new(group.clone(), phi.clone())?;
        if satisfies_f3_f4(&s) {
            debug_assert!(validate_phi(&s).passed());
            survivors.push(s);
        }
        // odometer over the free coordinates
        let mut i = 0;
        while i < free.len() {
            phi[free[i]] += 1;
            if phi[free[i]] < n {
                break;
            }
            phi[free[i]] = 0;
            i += 1;
        }
        if i == free.len() {
            break;
        }
    }

    let derived_ok = survivors
        .iter()
        .filter(|s| check_derived_identities(s).passed())
        .count();

    let mut representatives: Vec<PhiSystem> = Vec::new();
    let mut class_of = Vec::with_capacity(survivors.len());
    for s in &survivors {
        match representatives
            .iter()
            .position(|r| iso_check_phi(r, s).is_some())
        {
            Some(k) => class_of.push(k),
            None => {
                class_of.push(representatives.len());
                representatives.push(s.clone());
            }
        }
    }

    let mut rows = Vec::new();
    for (phi_index, s) in representatives.iter().enumerate() {
        for l in bijections(n) {
            let d = f_l_map(s, &l)?;
            let (report, _) = validate_near_domain(&d);
            rows.push(CensusRow {
                phi_index,
                l,
                valid: report.passed(),
                classification: classify(&d),
            });
        }
    }

    Ok(SearchResult {
        group_used: group.clone(),
        survivors: survivors
            .into_iter()
            .map(|s| s.phi_map().to_vec())
            .collect(),
        derived_ok,
        representatives,
        class_of,
        rows,
    })
}

/// Tally of a search's classification rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub representatives: usize,
    pub rows: usize,
    pub valid_rows: usize,
    pub associative: usize,
    pub near_field_candidates: usize,
    /// `(phi_index, L)` of valid rows whose addition is not associative.
    pub non_associative: Vec<(usize, Vec<usize>)>,
    /// Non-associative rows that nevertheless satisfy every classical
    /// near-domain condition expressible here: symmetric zero, two-sided zero
    /// and right distributivity. A row here would be a near-domain that is not
    /// a near-field.
    pub classical_non_associative: Vec<(usize, Vec<usize>)>,
}

pub fn nearfield_census(result: &SearchResult) -> Census {
    let valid: Vec<_> = result.rows.iter().filter(|r| r.valid).collect();
    let key = |r: &CensusRow| (r.phi_index, r.l.clone());
    let non_associative: Vec<_> = valid
        .iter()
        .filter(|r| !r.classification.additive_associative)
        .map(|r| key(r))
        .collect();
    let classical_non_associative = valid
        .iter()
        .filter(|r| {
            let c = &r.classification;
            !c.additive_associative && c.symmetric_zero && c.two_sided_zero && c.right_distributive
        })
        .map(|r| key(r))
        .collect();
    Census {
        n: result.group_used.n(),
        representatives: result.representatives.len(),
        rows: result.rows.len(),
        valid_rows: valid.len(),
        associative: valid.len() - non_associative.len(),
        near_field_candidates: valid
            .iter()
            .filter(|r| r.classification.near_field_candidate)
            .count(),
        non_associative,
        classical_non_associative,
    }
}

/// One CSV row per `(φ, L)` pair.
pub fn census_csv(result: &SearchResult) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Refused(format!("csv: {e}"));
    w.write_record([
        "phi_index",
        "L",
        "a1_a7",
        "additive_associative",
        "right_distributive",
        "left_distributive",
        "symmetric_zero",
        "two_sided_zero",
        "l_additive",
        "near_field_candidate",
    ])
    .map_err(io)?;
    for r in &result.rows {
        let c = &r.classification;
        let l: Vec<String> = r.l.iter().map(usize::to_string).collect();
        let fields = [
            r.phi_index.to_string(),
            l.join(" "),
            r.valid.to_string(),
            c.additive_associative.to_string(),
            c.right_distributive.to_string(),
            c.left_distributive.to_string(),
            c.symmetric_zero.to_string(),
            c.two_sided_zero.to_string(),
            c.l_additive.to_string(),
            c.near_field_candidate.to_string(),
        ];
        w.write_record(&fields).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Refused(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
