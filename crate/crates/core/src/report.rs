//! Batch verification of `m(G) ∈ {1, k(G) − 1}` and the supporting
//! predicates, with deterministic text and JSON rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::automorphisms::{
    class_size_two_in_derived, verify_fpf_consequence, verify_proposition1, Prop1Report,
    StepOutcome,
};
use crate::catalog::{default_catalog_specifiers, GroupSpecifier};
use crate::class_union::{
    abelian_hk_certificate, m_invariant, union_with_identity, MInvariantResult,
};
use crate::classes::{
    all_elements_prime_order, class_equation_of, conjugate_to_all_nontrivial_powers, decompose,
    is_rational, ClassDecomposition,
};
use crate::error::{GroupError, Result};
use crate::exec::Execution;
use crate::group::FiniteGroup;
use crate::landau::{self, Fraction, LandauConfig};
use crate::subgroups::{derived_subgroup, is_elementary_abelian, Subgroup};

/// A group queued for verification.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
    /// Published `m` values for this group; see [`GroupSpecifier::classification_claims`].
    pub claims: Vec<usize>,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> Self {
        CatalogEntry {
            name: name.into(),
            group,
            claims: Vec::new(),
        }
    }

    pub fn from_specifier(spec: &GroupSpecifier, cap: usize) -> Result<Self> {
        Ok(CatalogEntry {
            name: spec.to_string(),
            group: spec.build_with_cap(cap)?,
            claims: spec.classification_claims(),
        })
    }
}

pub fn default_catalog_entries() -> Vec<CatalogEntry> {
    default_catalog_specifiers()
        .iter()
        .map(|s| {
            CatalogEntry::from_specifier(s, crate::group::DEFAULT_CLOSURE_CAP)
                .expect("catalog builds")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// The group has no non-trivial classes, so `m` is undefined.
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

/// Per-group verification verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub group: String,
    pub order: usize,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub m_equals_k_minus_1: Option<bool>,
    pub elementary_abelian_2: bool,
    pub theorem2_pass: Option<bool>,
    pub m1_biconditional_pass: Option<bool>,
    /// Classification values claimed in print for this group (may conflict).
    pub paper_claimed_m: Vec<usize>,
    pub paper_discrepancy: bool,
    pub prop1: Option<Prop1Report>,
    pub proof_step_flags: BTreeMap<String, StepOutcome>,
    /// For each `n < m`, the first failing `n`-subset of class indices.
    pub counterexamples: BTreeMap<usize, Vec<usize>>,
    pub status: Status,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub execution: Execution,
}

/// Verifies a single group. Fails with [`GroupError::DegenerateGroup`] for
/// the trivial group.
pub fn verify_theorem2(entry: &CatalogEntry, options: &VerifyOptions) -> Result<TheoremReport> {
    let g = &entry.group;
    let dec = decompose(g);
    let mi = m_invariant(g, &dec, options.execution)?;
    let elementary_abelian_2 = g.order() >= 2 && is_elementary_abelian(g, &Subgroup::whole(g), 2);

    let mut claims = entry.claims.clone();
    if elementary_abelian_2 && !claims.contains(&1) {
        claims.push(1);
    }
    claims.sort_unstable();
    claims.dedup();

    let prop1 = verify_proposition1(g, &dec)?;
    let flags = proof_steps(g, &dec, &mi, &prop1)?;

    let m_equals_k_minus_1 = mi.m + 1 == mi.k;
    let theorem2_pass = mi.m == 1 || m_equals_k_minus_1;
    let m1_biconditional_pass = (mi.m == 1) == elementary_abelian_2;
    let pass = theorem2_pass && m1_biconditional_pass && flags.values().all(|f| f.holds());

    Ok(TheoremReport {
        group: entry.name.clone(),
        order: g.order(),
        k: Some(mi.k),
        m: Some(mi.m),
        m_equals_k_minus_1: Some(m_equals_k_minus_1),
        elementary_abelian_2,
        theorem2_pass: Some(theorem2_pass),
        m1_biconditional_pass: Some(m1_biconditional_pass),
        paper_discrepancy: claims.iter().any(|&c| c != mi.m),
        paper_claimed_m: claims,
        prop1: Some(prop1),
        proof_step_flags: flags,
        counterexamples: mi
            .counterexamples
            .iter()
            .map(|(&n, s)| (n, s.indices().to_vec()))
            .collect(),
        status: if pass { Status::Pass } else { Status::Fail },
        error: None,
    })
}

fn proof_steps(
    g: &FiniteGroup,
    dec: &ClassDecomposition,
    mi: &MInvariantResult,
    prop1: &Prop1Report,
) -> Result<BTreeMap<String, StepOutcome>> {
    let mut flags = BTreeMap::new();

    // Abelian case: H and K built from the first classes can never both be
    // subgroups, since |HK| would be (m+1)²/m.
    let hk = if g.is_abelian() && mi.k >= 4 {
        let mut ok = true;
        for m in 2..=mi.k - 2 {
            let cert = abelian_hk_certificate(g, dec, m)?;
            ok &= cert == Fraction::ZERO || !cert.is_integer();
        }
        StepOutcome::from_check(ok)
    } else {
        StepOutcome::Inapplicable
    };
    flags.insert("abelian_hk_count".to_string(), hk);

    let chain = if g.order() >= 2 && conjugate_to_all_nontrivial_powers(g, dec) {
        StepOutcome::from_check(
            all_elements_prime_order(g) && is_rational(g, dec) && g.order().is_multiple_of(2),
        )
    } else {
        StepOutcome::Inapplicable
    };
    flags.insert("power_conjugacy_chain".to_string(), chain);

    let derived = derived_subgroup(g);
    let mut fpf = StepOutcome::Inapplicable;
    if !derived.is_trivial() {
        for h in g.elements().filter(|&h| g.element_order(h) == 2) {
            match verify_fpf_consequence(g, h, &derived)? {
                StepOutcome::Failed => {
                    fpf = StepOutcome::Failed;
                    break;
                }
                StepOutcome::Verified => fpf = StepOutcome::Verified,
                StepOutcome::Inapplicable => {}
            }
        }
    }
    flags.insert("fpf_inversion".to_string(), fpf);

    flags.insert(
        "class_size_two_in_derived".to_string(),
        class_size_two_in_derived(g, dec)?,
    );
    flags.insert("proposition1".to_string(), prop1.outcome());

    let identity = class_equation_of(g, dec).reciprocal_sum() == Fraction::ONE;
    flags.insert(
        "landau_identity".to_string(),
        StepOutcome::from_check(identity),
    );

    // Every recorded witness must fail the generic subgroup test.
    let witnesses_ok = mi.counterexamples.iter().all(|(&n, s)| {
        s.len() == n && !crate::subgroups::is_subgroup(g, &union_with_identity(g, dec, s))
    }) && (1..mi.m).all(|n| mi.counterexamples.contains_key(&n));
    flags.insert(
        "witnesses_recheck".to_string(),
        StepOutcome::from_check(witnesses_ok),
    );

    Ok(flags)
}

fn error_report(entry: &CatalogEntry, err: &GroupError) -> TheoremReport {
    TheoremReport {
        group: entry.name.clone(),
        order: entry.group.order(),
        k: None,
        m: None,
        m_equals_k_minus_1: None,
        elementary_abelian_2: false,
        theorem2_pass: None,
        m1_biconditional_pass: None,
        paper_claimed_m: entry.claims.clone(),
        paper_discrepancy: false,
        prop1: None,
        proof_step_flags: BTreeMap::new(),
        counterexamples: BTreeMap::new(),
        status: if *err == GroupError::DegenerateGroup {
            Status::Skip
        } else {
            Status::Fail
        },
        error: Some(match err {
            GroupError::DegenerateGroup => "DegenerateGroup".to_string(),
            other => other.to_string(),
        }),
    }
}

/// One report per entry, in input order. Per-group errors become error
/// entries; the batch never aborts.
pub fn run_verification(entries: &[CatalogEntry], options: &VerifyOptions) -> Vec<TheoremReport> {
    // Inner kernels stay sequential when the batch itself is parallel.
    let inner = VerifyOptions {
        execution: if options.execution.is_parallel() && entries.len() > 1 {
            Execution::Sequential
        } else {
            options.execution
        },
    };
    options.execution.map(entries, |entry| {
        verify_theorem2(entry, &inner).unwrap_or_else(|e| error_report(entry, &e))
    })
}

/// `true` when no report failed (skipped entries do not count as failures).
pub fn all_passed(reports: &[TheoremReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

pub fn render_json(reports: &[TheoremReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn verdict(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "-",
    }
}

pub fn render_text(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(
            out,
            "{} order={} k={} m={} theorem2={} m1_iff_E2={} [{}]",
            r.group,
            r.order,
            opt(&r.k),
            opt(&r.m),
            verdict(r.theorem2_pass),
            verdict(r.m1_biconditional_pass),
            r.status.as_str()
        );
        if let Some(err) = &r.error {
            let _ = writeln!(out, "  error: {err}");
            continue;
        }
        let steps: Vec<String> = r
            .proof_step_flags
            .iter()
            .map(|(name, f)| format!("{name}={}", f.as_str()))
            .collect();
        let _ = writeln!(out, "  steps: {}", steps.join(" "));
        if let Some(p) = &r.prop1 {
            let _ = writeln!(
                out,
                "  prop1: applicable={} rational={} sylow2_abelian={} sylow2_elementary={} splits_over_derived={} derived_is_3group={} pass={}",
                p.applicable,
                p.rational,
                p.sylow2_abelian,
                p.sylow2_elementary,
                p.splits_over_derived,
                p.derived_is_3group,
                opt(&p.pass)
            );
        }
        for (n, s) in &r.counterexamples {
            let idx: Vec<String> = s.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "  witness n={n}: classes {{{}}}", idx.join(", "));
        }
        if r.paper_discrepancy {
            let claims: Vec<String> = r.paper_claimed_m.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "  paper_discrepancy: computed m={} vs claimed m={}",
                opt(&r.m),
                claims.join(",")
            );
        }
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} groups: {} pass, {} fail, {} skipped",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skip)
    );
    out
}

/// Summary of a single group for the `info` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInfo {
    pub group: String,
    pub order: usize,
    pub abelian: bool,
    pub k: usize,
    pub class_sizes: Vec<usize>,
    pub class_indices: Vec<usize>,
    pub m: Option<usize>,
    pub rational: bool,
    /// `|G|` bound from the `k`-term unit-fraction solutions, when `k` is within the cap.
    pub max_order_bound: Option<u128>,
}

pub fn group_info(name: &str, g: &FiniteGroup, exec: Execution) -> GroupInfo {
    let dec = decompose(g);
    let eq = class_equation_of(g, &dec);
    let cfg = LandauConfig {
        execution: exec,
        ..LandauConfig::default()
    };
    GroupInfo {
        group: name.to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        k: dec.k(),
        class_sizes: eq.sizes().to_vec(),
        class_indices: eq.indices().to_vec(),
        m: m_invariant(g, &dec, exec).ok().map(|r| r.m),
        rational: is_rational(g, &dec),
        max_order_bound: landau::max_order_bound(dec.k(), &cfg).ok(),
    }
}
