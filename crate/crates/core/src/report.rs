//! End-to-end analysis of a quandle, and the affine census.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{GelfandError, ReprError};
use crate::gelfand::{double_cosets, is_gelfand_pair, is_multiplicity_free, Certificate};
use crate::inner::{inner_group, translations_are_uniform_n_cycles};
use crate::io::bundled_order12;
use crate::perm::Permutation;
use crate::quandle::{affine_on_group, affine_quandle, find_isomorphism, AbelianGroup, AffineSpec, CayleyQuandle};
use crate::repr::{burnside_rank, decompose_prime_affine, DecompositionResult, DEFAULT_TOLERANCE};
use crate::tensor::{predicted_tau_size, predicted_tensor_size, tau_quotient, tensor_square};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Largest order for which affine recognition searches all `(A, f)`.
pub const RECOGNITION_LIMIT: usize = 13;

/// A yes/no answer that may not apply to the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Yes => Some(true),
            Verdict::No => Some(false),
            Verdict::NotApplicable => None,
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_bool() {
            Some(b) => s.serialize_bool(b),
            None => s.serialize_str("not-applicable"),
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "true",
            Verdict::No => "false",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AffineMatch {
    /// Isomorphic to `(Z_m, t)`.
    Cyclic { m: u64, t: u64 },
    /// Isomorphic to `(A, f)` for a non-cyclic abelian `A`.
    Abelian { factors: Vec<u64>, automorphism: Permutation },
    /// Not affine (exhaustive search).
    None,
    /// Order above the search limit.
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub tool_version: &'static str,
    pub input: String,
    pub order: usize,
    pub connected: bool,
    pub latin: bool,
    pub affine: AffineMatch,
    pub inner_order: usize,
    pub stabilizer_order: usize,
    pub rank: u64,
    pub tensor_size: usize,
    pub tau_size: usize,
    pub r0_cycles: String,
    pub translation_cycle_type: BTreeMap<usize, usize>,
    pub multiplicity_free: Verdict,
    pub certificate: Option<Certificate>,
    pub gelfand_pair: Verdict,
    pub double_cosets: Option<usize>,
    pub symmetric_tensor: bool,
    pub decomposition: Option<DecompositionResult>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub tol: f64,
    /// Skip the isomorphism search when the input is already known to be `(Z_m, t)`.
    pub known_affine: Option<AffineSpec>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            tol: DEFAULT_TOLERANCE,
            known_affine: None,
        }
    }
}

/// Compare against every affine quandle of the same order, up to relabeling.
pub fn recognize_affine(q: &CayleyQuandle) -> AffineMatch {
    let n = q.order();
    if n > RECOGNITION_LIMIT {
        return AffineMatch::Unknown;
    }
    let inn = inner_group(q).map(|g| g.order()).ok();
    let plausible = |c: &CayleyQuandle| {
        c.is_latin() == q.is_latin() && inner_group(c).map(|g| g.order()).ok() == inn
    };
    for t in arith::units(n as u64) {
        let c = affine_quandle(&AffineSpec::new(n as u64, t as i64).expect("unit"));
        if plausible(&c) && find_isomorphism(q, &c).is_some() {
            return AffineMatch::Cyclic { m: n as u64, t };
        }
    }
    for a in AbelianGroup::all_of_order(n as u64) {
        if a.factors().len() < 2 {
            continue;
        }
        for f in a.automorphisms() {
            let c = affine_on_group(&a, &f);
            if plausible(&c) && find_isomorphism(q, &c).is_some() {
                return AffineMatch::Abelian {
                    factors: a.factors().to_vec(),
                    automorphism: f,
                };
            }
        }
    }
    AffineMatch::None
}

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Gelfand(#[from] GelfandError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Perm(#[from] crate::error::PermError),
}

pub fn analyze(
    q: &CayleyQuandle,
    input: impl Into<String>,
    opts: &AnalysisOptions,
) -> Result<AnalysisReport, AnalysisError> {
    let inn = inner_group(q)?;
    let connected = inn.is_transitive();
    let stab = inn.stabilizer(0);
    let tensor = tensor_square(q);
    let tau = tau_quotient(&tensor);
    let mut warnings = Vec::new();

    let rank = match burnside_rank(&inn) {
        Ok(r) | Err(ReprError::NotTransitive { rank: r }) => r,
        Err(e) => return Err(e.into()),
    };
    if rank != tensor.len() as u64 {
        warnings.push(format!(
            "Burnside rank {rank} differs from the tensor class count {}",
            tensor.len()
        ));
    }

    let affine = match opts.known_affine {
        Some(s) => AffineMatch::Cyclic {
            m: s.modulus(),
            t: s.multiplier(),
        },
        None => recognize_affine(q),
    };

    let r0 = q.right_translation(0).expect("order >= 1");

    let (multiplicity_free, certificate, gelfand_pair, dc) = if connected {
        let mf = is_multiplicity_free(q)?;
        let gp = is_gelfand_pair(&inn, &stab)?;
        let dc = double_cosets(&inn, &stab)?.len();
        if gp != mf.multiplicity_free {
            warnings.push("orbital commutation and double-coset commutativity disagree".into());
        }
        if dc as u64 != rank {
            warnings.push(format!("{dc} double cosets but rank {rank}"));
        }
        (
            Verdict::from_bool(mf.multiplicity_free),
            Some(mf.certificate),
            Verdict::from_bool(gp),
            Some(dc),
        )
    } else {
        warnings.push("not connected: multiplicity-freeness and Gelfand tests do not apply".into());
        (Verdict::NotApplicable, None, Verdict::NotApplicable, None)
    };

    let mut decomposition = None;
    if let AffineMatch::Cyclic { m, t } = affine {
        let spec = AffineSpec::new(m, t as i64).expect("unit");
        if connected && spec.rotation_order() > 1 {
            if arith::is_prime(m) {
                decomposition = Some(decompose_prime_affine(&spec, opts.tol)?);
                if predicted_tensor_size(&spec) != tensor.len() as u64
                    || predicted_tau_size(&spec) != tau.len() as u64
                {
                    warnings.push("tensor sizes differ from the prime-order formulas".into());
                }
            } else if !translations_are_uniform_n_cycles(&spec) {
                warnings.push(format!(
                    "R_0 has cycle type {} although ord(t) = {}: the uniform n-cycle property of prime moduli fails for composite m = {m}",
                    describe_cycle_type(&r0),
                    spec.rotation_order()
                ));
            }
        }
    }

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        input: input.into(),
        order: q.order(),
        connected,
        latin: q.is_latin(),
        affine,
        inner_order: inn.order(),
        stabilizer_order: stab.order(),
        rank,
        tensor_size: tensor.len(),
        tau_size: tau.len(),
        r0_cycles: r0.cycle_notation(),
        translation_cycle_type: r0.cycle_structure(),
        multiplicity_free,
        certificate,
        gelfand_pair,
        double_cosets: dc,
        symmetric_tensor: tensor.is_symmetric(),
        decomposition,
        warnings,
    })
}

fn describe_cycle_type(p: &Permutation) -> String {
    let parts: Vec<String> = p
        .cycle_structure()
        .iter()
        .map(|(len, count)| format!("{len}^{count}"))
        .collect();
    parts.join(" ")
}

/// Deterministic pretty JSON.
pub fn to_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub input: String,
    pub affine: bool,
    pub order: usize,
    /// `ord(t)` for affine rows.
    pub rotation_order: Option<u64>,
    pub prime: bool,
    pub inner_order: usize,
    pub rank: u64,
    pub tensor_size: usize,
    pub predicted_tensor_size: Option<u64>,
    pub tau_size: usize,
    pub multiplicity_free: Verdict,
    pub gelfand_pair: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub schema: u32,
    pub tool_version: &'static str,
    pub max_order: u64,
    pub rows: Vec<ScanRow>,
    pub affine_rows: usize,
    pub affine_non_multiplicity_free: Vec<String>,
    pub all_affine_multiplicity_free: bool,
}

fn scan_row(q: &CayleyQuandle, input: String, spec: Option<AffineSpec>) -> Result<ScanRow, AnalysisError> {
    let opts = AnalysisOptions {
        tol: DEFAULT_TOLERANCE,
        known_affine: spec,
    };
    let r = analyze(q, input.clone(), &opts)?;
    let prime = spec.is_some_and(|s| arith::is_prime(s.modulus()));
    Ok(ScanRow {
        input,
        affine: spec.is_some(),
        order: r.order,
        rotation_order: spec.map(|s| s.rotation_order()),
        prime,
        inner_order: r.inner_order,
        rank: r.rank,
        tensor_size: r.tensor_size,
        predicted_tensor_size: spec.filter(|_| prime).map(|s| predicted_tensor_size(&s)),
        tau_size: r.tau_size,
        multiplicity_free: r.multiplicity_free,
        gelfand_pair: r.gelfand_pair,
    })
}

/// Analyze every connected affine `(Z_m, t)` with `m <= max_order`, plus the
/// bundled order-12 quandle unless `affine_only`. Rows are in `(m, t)` order.
pub fn scan(max_order: u64, affine_only: bool) -> Result<ScanSummary, AnalysisError> {
    let specs = AffineSpec::connected_specs(max_order);
    let mut rows: Vec<ScanRow> = specs
        .par_iter()
        .map(|s| scan_row(&affine_quandle(s), spec_label(s), Some(*s)))
        .collect::<Result<_, _>>()?;
    if !affine_only && max_order >= 12 {
        rows.push(scan_row(&bundled_order12(), "bundled:order12".into(), None)?);
    }
    let affine_non_multiplicity_free: Vec<String> = rows
        .iter()
        .filter(|r| r.affine && r.multiplicity_free != Verdict::Yes)
        .map(|r| r.input.clone())
        .collect();
    Ok(ScanSummary {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        max_order,
        affine_rows: specs.len(),
        all_affine_multiplicity_free: affine_non_multiplicity_free.is_empty(),
        affine_non_multiplicity_free,
        rows,
    })
}

pub fn spec_label(s: &AffineSpec) -> String {
    format!("affine:{}:{}", s.modulus(), s.multiplier())
}
