//! Singularity configurations of `A/G` for the generalized Kummer groups.
//!
//! A configuration is the vector `(n₁,…,n₇)` counting singular points of type
//! `A1, A2, A3, A5, D4, D5, E6`. It is admissible for `G` when
//!
//! * the orbifold Euler equation `|G|·(24 − Σ χᵢnᵢ) + Σ mᵢnᵢ = 0` holds,
//! * the exceptional curves have total rank `Σ rankᵢ·nᵢ ≤ 19`, and
//! * for every nontrivial conjugacy class `[g]` of order `k`, the fixed points
//!   of `g` on `A` are accounted for: `Σ nᵢ · #Fix(g on G/Hᵢ) = |det(I − M_k)|`.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{determinant, IntegerMatrix};
use crate::group::{build_group, FiniteGroupTable, GroupError, GroupName, StabilizerClass, StabilizerKind};

/// Upper bound on the rank of the lattice spanned by the exceptional curves.
pub const RANK_BOUND: u32 = 19;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KummerError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("no symplectic automorphism of order {0} in the model (expected 2, 3, 4 or 6)")]
    UnsupportedOrder(usize),
    #[error("singularity type {sing} cannot occur for {group}: no stabilizer of kind {kind}")]
    IncompatibleType { group: String, sing: SingularityType, kind: StabilizerKind },
    #[error("empty constraint set: the search would be unconstrained")]
    EmptyConstraints,
    #[error("cannot parse configuration '{0}'")]
    ParseConfiguration(String),
    #[error("unknown constraint '{0}' (expected euler, rank, lefschetz, or full)")]
    UnknownConstraint(String),
}

/// ADE types of the quotient singularities, in index order 1..=7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SingularityType {
    A1,
    A2,
    A3,
    A5,
    D4,
    D5,
    E6,
}

impl SingularityType {
    pub const ALL: [SingularityType; 7] = [Self::A1, Self::A2, Self::A3, Self::A5, Self::D4, Self::D5, Self::E6];

    /// Position 1..=7.
    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::A1 => "A1",
            Self::A2 => "A2",
            Self::A3 => "A3",
            Self::A5 => "A5",
            Self::D4 => "D4",
            Self::D5 => "D5",
            Self::E6 => "E6",
        }
    }

    /// Number of exceptional (−2)-curves in the resolution.
    pub fn rank(self) -> u32 {
        match self {
            Self::A1 => 1,
            Self::A2 => 2,
            Self::A3 => 3,
            Self::A5 => 5,
            Self::D4 => 4,
            Self::D5 => 5,
            Self::E6 => 6,
        }
    }

    /// Euler characteristic of the exceptional configuration: a tree of `r`
    /// rational curves has `χ = 2r − (r − 1) = r + 1`.
    pub fn euler_chi(self) -> u32 {
        2 * self.rank() - (self.rank() - 1)
    }

    pub fn stabilizer_kind(self) -> StabilizerKind {
        match self {
            Self::A1 => StabilizerKind::Z2,
            Self::A2 => StabilizerKind::Z3,
            Self::A3 => StabilizerKind::Z4,
            Self::A5 => StabilizerKind::Z6,
            Self::D4 => StabilizerKind::Q8,
            Self::D5 => StabilizerKind::Q12,
            Self::E6 => StabilizerKind::T24,
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SingularityType {
    type Err = KummerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_uppercase().replace('_', "");
        Self::ALL
            .into_iter()
            .find(|x| x.label() == t)
            .ok_or_else(|| KummerError::ParseConfiguration(s.to_string()))
    }
}

/// Counts `(n₁,…,n₇)` of singular points per type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SingularityConfiguration {
    counts: [u32; 7],
}

impl SingularityConfiguration {
    pub fn new(counts: [u32; 7]) -> Self {
        Self { counts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a configuration from `(type, count)` pairs; repeated types add up.
    pub fn from_terms(terms: &[(SingularityType, u32)]) -> Self {
        let mut counts = [0; 7];
        for &(t, n) in terms {
            counts[t.index() - 1] += n;
        }
        Self { counts }
    }

    pub fn counts(&self) -> [u32; 7] {
        self.counts
    }

    pub fn count(&self, t: SingularityType) -> u32 {
        self.counts[t.index() - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&n| n == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (SingularityType, u32)> + '_ {
        SingularityType::ALL.into_iter().map(|t| (t, self.count(t))).filter(|&(_, n)| n > 0)
    }

    /// `Σ rankᵢ·nᵢ`
    pub fn rank_sum(&self) -> u32 {
        self.terms().map(|(t, n)| t.rank() * n).sum()
    }

    /// `Σ χᵢ·nᵢ`
    pub fn euler_sum(&self) -> u32 {
        self.terms().map(|(t, n)| t.euler_chi() * n).sum()
    }

    /// Formal sum in index order, e.g. `3A1 + 4D4`; `0` for the empty configuration.
    pub fn formal_sum(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SingularityConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (pos, (t, n)) in self.terms().enumerate() {
            if pos > 0 {
                f.write_str(" + ")?;
            }
            if n == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "{n}{t}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SingularityConfiguration {
    type Err = KummerError;

    /// Parses formal sums like `A1 + 2A2 + 3A3 + D5` (or `0`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || KummerError::ParseConfiguration(s.to_string());
        if s.trim() == "0" {
            return Ok(Self::empty());
        }
        let mut terms = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let split = term.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
            let (coef, label) = term.split_at(split);
            let n = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
            terms.push((label.parse::<SingularityType>().map_err(|_| bad())?, n));
        }
        Ok(Self::from_terms(&terms))
    }
}

impl Serialize for SingularityConfiguration {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.counts.serialize(serializer)
    }
}

pub fn rank_sum(config: &SingularityConfiguration) -> u32 {
    config.rank_sum()
}

/// Lower bound on ρ of the resolved quotient: the exceptional curves plus one
/// polarization class.
pub fn picard_lower_bound(config: &SingularityConfiguration) -> u32 {
    1 + config.rank_sum()
}

/// Integral model of a symplectic automorphism of order `k` acting on `H₁(A, ℤ) ≅ ℤ⁴`:
/// `−I₄` for `k = 2`, otherwise two copies of the companion matrix of the `k`-th
/// cyclotomic polynomial (eigenvalues `ζ, ζ⁻¹`, each twice).
pub fn symplectic_action_matrix(k: usize) -> Result<IntegerMatrix, KummerError> {
    let companion: [[i64; 2]; 2] = match k {
        2 => return Ok(IntegerMatrix::identity(4).neg()),
        3 => [[0, -1], [1, -1]], // x² + x + 1
        4 => [[0, -1], [1, 0]],  // x² + 1
        6 => [[0, -1], [1, 1]],  // x² − x + 1
        _ => return Err(KummerError::UnsupportedOrder(k)),
    };
    let c = IntegerMatrix::from_rows(&companion).expect("2x2");
    Ok(c.block_diag(&c))
}

/// Number of fixed points on `A` of a symplectic automorphism of order `k`:
/// `|det(I − M_k)|`.
pub fn lefschetz_number(k: usize) -> Result<u64, KummerError> {
    let m = symplectic_action_matrix(k)?;
    let n = m.rows();
    let mut diff = IntegerMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            diff.set(i, j, diff.get(i, j) - m.get(i, j));
        }
    }
    let det = determinant(&diff).expect("square");
    Ok(det.abs().to_u64().expect("small determinant"))
}

/// Which constraints to impose during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ConstraintSet {
    pub euler: bool,
    pub rank: bool,
    pub lefschetz: bool,
}

impl ConstraintSet {
    pub const FULL: ConstraintSet = ConstraintSet { euler: true, rank: true, lefschetz: true };
    pub const EULER: ConstraintSet = ConstraintSet { euler: true, rank: false, lefschetz: false };
    pub const EULER_RANK: ConstraintSet = ConstraintSet { euler: true, rank: true, lefschetz: false };

    pub fn is_empty(&self) -> bool {
        !(self.euler || self.rank || self.lefschetz)
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::FULL {
            return f.write_str("full");
        }
        let parts: Vec<&str> = [(self.euler, "euler"), (self.rank, "rank"), (self.lefschetz, "lefschetz")]
            .into_iter()
            .filter_map(|(on, name)| on.then_some(name))
            .collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for ConstraintSet {
    type Err = KummerError;

    /// `full`, or a `+`-joined subset of `euler`, `rank`, `lefschetz`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("full") {
            return Ok(Self::FULL);
        }
        let mut set = ConstraintSet { euler: false, rank: false, lefschetz: false };
        for part in s.split('+') {
            match part.trim().to_ascii_lowercase().as_str() {
                "euler" => set.euler = true,
                "rank" => set.rank = true,
                "lefschetz" => set.lefschetz = true,
                other => return Err(KummerError::UnknownConstraint(other.to_string())),
            }
        }
        Ok(set)
    }
}

/// A nontrivial conjugacy class of `G` with the fixed-point data it needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementClass {
    /// Name of the representative element.
    pub label: String,
    pub representative: usize,
    pub order: usize,
    pub size: usize,
    /// `|det(I − M_order)|`
    pub lefschetz: u64,
    /// Fixed points of the representative on `G/Hᵢ`, per singularity type.
    pub fixed_cosets: [u64; 7],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzResidual {
    pub class: String,
    pub order: usize,
    pub residual: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintReport {
    pub euler_residual: i64,
    pub n_total: u64,
    pub rank_sum: u32,
    pub lefschetz_residuals: Vec<LefschetzResidual>,
    pub satisfied: bool,
}

/// Precomputed constraint data for one group.
///
/// Each singularity type is tied to one stabilizer subgroup: the canonical
/// (first) representative among the conjugacy classes of that kind.
#[derive(Debug, Clone)]
pub struct KummerModel {
    group: FiniteGroupTable,
    stabilizers: Vec<StabilizerClass>,
    chosen: [Option<StabilizerClass>; 7],
    classes: Vec<ElementClass>,
}

impl KummerModel {
    pub fn new(name: GroupName) -> Result<Self, KummerError> {
        Self::from_group(build_group(name))
    }

    pub fn from_group(group: FiniteGroupTable) -> Result<Self, KummerError> {
        let stabilizers = group.stabilizer_classes()?;
        let mut chosen: [Option<StabilizerClass>; 7] = Default::default();
        for s in &stabilizers {
            let slot = &mut chosen[s.sing_type.index() - 1];
            if slot.is_none() {
                *slot = Some(s.clone());
            }
        }
        let mut classes = Vec::new();
        for class in group.conjugacy_classes() {
            let g = class[0];
            let order = group.element_order(g);
            if order == 1 {
                continue;
            }
            let mut fixed = [0u64; 7];
            for (slot, stab) in fixed.iter_mut().zip(&chosen) {
                if let Some(stab) = stab {
                    *slot = group.fixed_cosets(g, &stab.subgroup)? as u64;
                }
            }
            classes.push(ElementClass {
                label: group.name(g).to_string(),
                representative: g,
                order,
                size: class.len(),
                lefschetz: lefschetz_number(order)?,
                fixed_cosets: fixed,
            });
        }
        Ok(Self { group, stabilizers, chosen, classes })
    }

    pub fn group(&self) -> &FiniteGroupTable {
        &self.group
    }

    pub fn group_label(&self) -> String {
        self.group.catalog_name().map_or_else(|| format!("group of order {}", self.group.order()), |n| n.to_string())
    }

    pub fn stabilizer_classes(&self) -> &[StabilizerClass] {
        &self.stabilizers
    }

    /// The stabilizer subgroup standing for type `t`, if `G` has one.
    pub fn stabilizer_for(&self, t: SingularityType) -> Option<&StabilizerClass> {
        self.chosen[t.index() - 1].as_ref()
    }

    pub fn allowed_types(&self) -> Vec<SingularityType> {
        SingularityType::ALL.into_iter().filter(|&t| self.stabilizer_for(t).is_some()).collect()
    }

    pub fn element_classes(&self) -> &[ElementClass] {
        &self.classes
    }

    /// `mᵢ = [G : Hᵢ]`
    pub fn index_m(&self, t: SingularityType) -> Option<u64> {
        self.stabilizer_for(t).map(|s| s.index_m as u64)
    }

    fn check_compatible(&self, config: &SingularityConfiguration) -> Result<(), KummerError> {
        match config.terms().find(|&(t, _)| self.stabilizer_for(t).is_none()) {
            Some((t, _)) => Err(KummerError::IncompatibleType {
                group: self.group_label(),
                sing: t,
                kind: t.stabilizer_kind(),
            }),
            None => Ok(()),
        }
    }

    /// Total number of points of `A` with nontrivial stabilizer: `Σ mᵢnᵢ`.
    pub fn n_total(&self, config: &SingularityConfiguration) -> Result<u64, KummerError> {
        self.check_compatible(config)?;
        Ok(config.terms().map(|(t, n)| self.index_m(t).unwrap() * n as u64).sum())
    }

    /// `|G|·(24 − Σ χᵢnᵢ) + Σ mᵢnᵢ`; zero for admissible configurations.
    pub fn euler_residual(&self, config: &SingularityConfiguration) -> Result<i64, KummerError> {
        let n = self.n_total(config)? as i64;
        Ok(self.group.order() as i64 * (24 - config.euler_sum() as i64) + n)
    }

    /// For each nontrivial class `[g]`: fixed points of `g` accounted for by the
    /// configuration, minus the Lefschetz number of `g`.
    pub fn lefschetz_residuals(
        &self,
        config: &SingularityConfiguration,
    ) -> Result<Vec<LefschetzResidual>, KummerError> {
        self.check_compatible(config)?;
        Ok(self
            .classes
            .iter()
            .map(|c| LefschetzResidual {
                class: c.label.clone(),
                order: c.order,
                residual: lefschetz_residual(c, &config.counts),
            })
            .collect())
    }

    pub fn constraint_report(&self, config: &SingularityConfiguration) -> Result<ConstraintReport, KummerError> {
        let euler_residual = self.euler_residual(config)?;
        let lefschetz_residuals = self.lefschetz_residuals(config)?;
        let rank_sum = config.rank_sum();
        let satisfied =
            euler_residual == 0 && rank_sum <= RANK_BOUND && lefschetz_residuals.iter().all(|r| r.residual == 0);
        Ok(ConstraintReport {
            euler_residual,
            n_total: self.n_total(config)?,
            rank_sum,
            lefschetz_residuals,
            satisfied,
        })
    }

    /// Exhaustive scan of `0 ≤ nᵢ ≤ 19 / rankᵢ` over the types `G` allows,
    /// filtered by `constraints`. Sorted lexicographically by count vector.
    pub fn enumerate_configurations(
        &self,
        constraints: ConstraintSet,
    ) -> Result<Vec<SingularityConfiguration>, KummerError> {
        let scan = self.scan_plan(constraints)?;
        let mut out = Vec::new();
        let mut counts = [0u32; 7];
        scan.descend(0, 0, &mut counts, &mut out);
        out.sort();
        Ok(out)
    }

    /// Same result as [`Self::enumerate_configurations`], with the first free
    /// coordinate split across worker threads.
    pub fn enumerate_configurations_parallel(
        &self,
        constraints: ConstraintSet,
    ) -> Result<Vec<SingularityConfiguration>, KummerError> {
        let scan = self.scan_plan(constraints)?;
        let Some(&first) = scan.free.first() else {
            return self.enumerate_configurations(constraints);
        };
        let cap = RANK_BOUND / first.rank();
        let mut out: Vec<SingularityConfiguration> = (0..=cap)
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut counts = [0u32; 7];
                counts[first.index() - 1] = v;
                let mut local = Vec::new();
                let partial = v * first.rank();
                if !(scan.constraints.rank && partial > RANK_BOUND) {
                    scan.descend(1, partial, &mut counts, &mut local);
                }
                local
            })
            .collect();
        out.sort();
        Ok(out)
    }

    fn scan_plan(&self, constraints: ConstraintSet) -> Result<Scan<'_>, KummerError> {
        if constraints.is_empty() {
            return Err(KummerError::EmptyConstraints);
        }
        Ok(Scan { model: self, constraints, free: self.allowed_types() })
    }

    fn admissible(&self, counts: &[u32; 7], constraints: ConstraintSet) -> bool {
        let config = SingularityConfiguration::new(*counts);
        if constraints.rank && config.rank_sum() > RANK_BOUND {
            return false;
        }
        if constraints.euler && self.euler_residual(&config).expect("allowed types only") != 0 {
            return false;
        }
        if constraints.lefschetz && self.classes.iter().any(|c| lefschetz_residual(c, counts) != 0) {
            return false;
        }
        true
    }
}

fn lefschetz_residual(class: &ElementClass, counts: &[u32; 7]) -> i64 {
    let accounted: u64 = counts.iter().zip(&class.fixed_cosets).map(|(&n, &f)| n as u64 * f).sum();
    accounted as i64 - class.lefschetz as i64
}

struct Scan<'a> {
    model: &'a KummerModel,
    constraints: ConstraintSet,
    free: Vec<SingularityType>,
}

impl Scan<'_> {
    fn descend(&self, depth: usize, partial_rank: u32, counts: &mut [u32; 7], out: &mut Vec<SingularityConfiguration>) {
        let Some(&t) = self.free.get(depth) else {
            if self.model.admissible(counts, self.constraints) {
                out.push(SingularityConfiguration::new(*counts));
            }
            return;
        };
        let cap = RANK_BOUND / t.rank();
        for v in 0..=cap {
            let rank = partial_rank + v * t.rank();
            if self.constraints.rank && rank > RANK_BOUND {
                break;
            }
            counts[t.index() - 1] = v;
            self.descend(depth + 1, rank, counts, out);
        }
        counts[t.index() - 1] = 0;
    }
}

/// The singularity lists each catalog group is expected to produce.
pub fn expected_configurations(name: GroupName) -> Vec<SingularityConfiguration> {
    let sums: &[&str] = match name {
        GroupName::Z2 => &["16A1"],
        GroupName::Z3 => &["9A2"],
        GroupName::Z4 => &["6A1 + 4A3"],
        GroupName::Z6 => &["5A1 + 4A2 + A5"],
        GroupName::Q8 => &["3A1 + 4D4"],
        GroupName::Q12 => &["A1 + 2A2 + 3A3 + D5"],
        GroupName::T24 => &["4A2 + 2A3 + A5", "A1 + 4A2 + D4 + E6"],
    };
    let mut v: Vec<SingularityConfiguration> = sums.iter().map(|s| s.parse().expect("valid formal sum")).collect();
    v.sort();
    v
}

/// Picard lower bound every solution should attain: 20 for noncyclic groups,
/// 19 for `Z3, Z4, Z6`; no claim for `Z2`.
pub fn expected_picard_bound(name: GroupName) -> Option<u32> {
    match name {
        GroupName::Z2 => None,
        GroupName::Z3 | GroupName::Z4 | GroupName::Z6 => Some(19),
        GroupName::Q8 | GroupName::Q12 | GroupName::T24 => Some(20),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionRecord {
    pub counts: [u32; 7],
    pub formal_sum: String,
    pub rank_sum: u32,
    pub n_total: u64,
    pub picard_lower_bound: u32,
}

impl SolutionRecord {
    pub fn new(model: &KummerModel, config: &SingularityConfiguration) -> Result<Self, KummerError> {
        Ok(Self {
            counts: config.counts(),
            formal_sum: config.formal_sum(),
            rank_sum: config.rank_sum(),
            n_total: model.n_total(config)?,
            picard_lower_bound: picard_lower_bound(config),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupVerification {
    pub group: GroupName,
    pub solutions: Vec<SolutionRecord>,
    pub expected: Vec<String>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub expected_picard_bound: Option<u32>,
    pub picard_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub constraints: ConstraintSet,
    pub groups: Vec<GroupVerification>,
    pub all_match: bool,
    /// Every noncyclic solution has Picard bound 20 and every `Z3, Z4, Z6` solution 19.
    pub picard_bounds_ok: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.all_match && self.picard_bounds_ok
    }
}

/// Runs the enumeration for all seven groups and compares against the expected lists.
pub fn verify_proposition3(constraints: ConstraintSet) -> Result<VerificationReport, KummerError> {
    let mut groups = Vec::with_capacity(GroupName::ALL.len());
    for name in GroupName::ALL {
        let model = KummerModel::new(name)?;
        let found = model.enumerate_configurations(constraints)?;
        let expected = expected_configurations(name);
        let solutions = found.iter().map(|c| SolutionRecord::new(&model, c)).collect::<Result<Vec<_>, _>>()?;
        let bound = expected_picard_bound(name);
        let picard_ok = bound.map_or(true, |b| solutions.iter().all(|s| s.picard_lower_bound == b));
        groups.push(GroupVerification {
            group: name,
            matches: found == expected,
            solutions,
            expected: expected.iter().map(|c| c.formal_sum()).collect(),
            expected_picard_bound: bound,
            picard_ok,
        });
    }
    let all_match = groups.iter().all(|g| g.matches);
    let picard_bounds_ok = groups.iter().all(|g| g.picard_ok);
    Ok(VerificationReport { constraints, groups, all_match, picard_bounds_ok })
}
