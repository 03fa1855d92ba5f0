//! Exact rational spin decomposition.
//!
//! A spin s = 1/n splits into signed unit fractions under class-based
//! admissibility rules, reproducing the ladder
//!
//!   1/2 = 1/3 + 1/3 − 1/6
//!       = (1/5+1/15+1/15) + (1/5+1/15+1/15) − (1/7+1/42)
//!       = [(1/7+1/35+1/35)+1/15+1/15]·2 − (1/7+1/42)
//!
//! and the 9/35 and 1/7 main-component sums. All arithmetic is exact; no
//! floating point appears anywhere in this module.

mod search;

pub use search::{search_splits, SearchConfig};

use serde::Serialize;

use crate::analysis::{particle_class, ClassId};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DecompositionError {
    #[error("{0} is not a signed unit fraction 1/k with k >= 2")]
    NotUnitFraction(Rational),
    #[error("denominator must be at least 2, got {0}")]
    DenominatorTooSmall(i64),
    #[error("expansion depth {0} exceeds the bound of {MAX_DEPTH}")]
    DepthExceeded(usize),
    #[error("level {level} out of range (tree has {depth} levels)")]
    LevelOutOfRange { level: usize, depth: usize },
    #[error("no parts given")]
    EmptyParts,
    #[error("ratio base must be nonzero")]
    ZeroBase,
    #[error("search bound {0} too large (max {MAX_SEARCH_BOUND})")]
    BoundTooLarge(i64),
    #[error("no admissible split found for {0}")]
    NoSplitFound(Rational),
}

/// Combinatorial growth bound on canonical/search expansion.
pub const MAX_DEPTH: usize = 6;
pub(crate) const MAX_SEARCH_BOUND: i64 = 500;

/// Whether a component keeps dividing (main) or is a frozen paired
/// remainder (sea).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Main,
    Sea,
}

/// Which scheme produced a node's children.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitRule {
    OddRule,
    EvenRule,
    Custom,
}

/// One signed component with its class label and role.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpinComponent {
    pub value: Rational,
    pub class: ClassId,
    pub role: Role,
}

fn class_of(value: Rational) -> Result<ClassId, DecompositionError> {
    if !value.is_unit_fraction() {
        return Err(DecompositionError::NotUnitFraction(value));
    }
    Ok(particle_class(value.denom() as u32)
        .expect("unit-fraction denominators are >= 2")
        .class_id)
}

/// A component plus the split applied beneath it (leaves have no children).
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionNode {
    pub value: Rational,
    pub class: ClassId,
    pub role: Role,
    pub rule: Option<SplitRule>,
    pub children: Vec<DecompositionNode>,
}

/// Expansion of one spin down to a fixed depth.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionTree {
    pub root: DecompositionNode,
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Canonical,
    Search,
}

/// The observed splitting scheme for a positive unit fraction 1/d:
/// even d → { 1/(d+1), 1/(d·(d+1)) },
/// odd d → { 1/(d+2), 1/(d·(d+2)), 1/(d·(d+2)) }.
/// Both sum exactly to 1/d.
pub fn canonical_split(s: Rational) -> Result<Vec<Rational>, DecompositionError> {
    if !s.is_unit_fraction() || s.is_negative() {
        return Err(DecompositionError::NotUnitFraction(s));
    }
    let d = s.denom();
    if d < 2 {
        return Err(DecompositionError::DenominatorTooSmall(d));
    }
    if d % 2 == 0 {
        Ok(vec![Rational::new(1, d + 1), Rational::new(1, d * (d + 1))])
    } else {
        let sea = Rational::new(1, d * (d + 2));
        Ok(vec![Rational::new(1, d + 2), sea, sea])
    }
}

/// Rule identifiers for split admissibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RuleId {
    /// Parts must sum exactly to the parent.
    R1,
    /// No two same-sign class-I parts of equal value (parallel class-I repel).
    R2,
    /// No class-III parts in a bound composite (class-III always repel).
    R3,
    /// At least two parts.
    R4,
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RuleId::R1 => f.write_str("R1"),
            RuleId::R2 => f.write_str("R2"),
            RuleId::R3 => f.write_str("R3"),
            RuleId::R4 => f.write_str("R4"),
        }
    }
}

/// Which rules to enforce. The prose behind R2/R3 is not fully
/// self-consistent, so they can be toggled; defaults enforce everything.
#[derive(Debug, Clone, Copy)]
pub struct RuleSet {
    pub exact_sum: bool,
    pub class_i_pairing: bool,
    pub class_iii_exclusion: bool,
    pub min_parts: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet {
            exact_sum: true,
            class_i_pairing: true,
            class_iii_exclusion: true,
            min_parts: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitVerdict {
    pub valid: bool,
    pub violations: Vec<RuleId>,
}

/// Check a proposed split of `parent` into signed unit fractions against
/// rules R1–R4. Every violated rule is listed.
pub fn validate_split(
    parent: Rational,
    parts: &[Rational],
    rules: &RuleSet,
) -> Result<SplitVerdict, DecompositionError> {
    if parts.is_empty() {
        return Err(DecompositionError::EmptyParts);
    }
    for &p in parts {
        if !p.is_unit_fraction() {
            return Err(DecompositionError::NotUnitFraction(p));
        }
    }
    let mut violations = Vec::new();
    if rules.exact_sum {
        let sum = parts
            .iter()
            .fold(Rational::ZERO, |acc, &p| acc + p);
        if sum != parent {
            violations.push(RuleId::R1);
        }
    }
    if rules.class_i_pairing {
        let mut hit = false;
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if parts[i] == parts[j] && class_of(parts[i])? == ClassId::I {
                    hit = true;
                }
            }
        }
        if hit {
            violations.push(RuleId::R2);
        }
    }
    if rules.class_iii_exclusion && parts.iter().any(|&p| matches!(class_of(p), Ok(ClassId::III)))
    {
        violations.push(RuleId::R3);
    }
    if rules.min_parts && parts.len() < 2 {
        violations.push(RuleId::R4);
    }
    Ok(SplitVerdict {
        valid: violations.is_empty(),
        violations,
    })
}

fn leaf(value: Rational, role: Role) -> Result<DecompositionNode, DecompositionError> {
    Ok(DecompositionNode {
        value,
        class: class_of(value)?,
        role,
        rule: None,
        children: Vec::new(),
    })
}

/// Split `node` once. Children inherit the parent's sign. The first child
/// of a positive split is the continuing main component and the paired
/// remainders are sea; every child of a negative split is sea, which is
/// what freezes the −(1/7 + 1/42) branch after its single division.
fn split_node(
    node: &mut DecompositionNode,
    scheme: Scheme,
    cfg: &SearchConfig,
) -> Result<(), DecompositionError> {
    let magnitude = node.value.abs();
    let (parts, rule) = match scheme {
        Scheme::Canonical => {
            let rule = if magnitude.denom() % 2 == 0 {
                SplitRule::EvenRule
            } else {
                SplitRule::OddRule
            };
            (canonical_split(magnitude)?, rule)
        }
        Scheme::Search => {
            let found = search_splits(magnitude, cfg)?;
            let first = found
                .into_iter()
                .next()
                .ok_or(DecompositionError::NoSplitFound(magnitude))?;
            (first, SplitRule::Custom)
        }
    };
    let negative = node.value.is_negative();
    let mut children = Vec::with_capacity(parts.len());
    for (i, part) in parts.into_iter().enumerate() {
        let signed = if negative { -part } else { part };
        let role = if negative || i > 0 { Role::Sea } else { Role::Main };
        children.push(leaf(signed, role)?);
    }
    node.rule = Some(rule);
    node.children = children;
    Ok(())
}

fn expand_recursive(
    node: &mut DecompositionNode,
    remaining: usize,
    scheme: Scheme,
    cfg: &SearchConfig,
) -> Result<(), DecompositionError> {
    if remaining == 0 || node.role == Role::Sea {
        return Ok(());
    }
    split_node(node, scheme, cfg)?;
    for child in &mut node.children {
        expand_recursive(child, remaining - 1, scheme, cfg)?;
    }
    Ok(())
}

/// Expand the unit-fraction spin `s` to the given depth.
///
/// The canonical scheme replays the observed ladder: the root 1/2 opens as
/// {1/3, 1/3, −1/6} with every branch live, then mains keep dividing while
/// sea components stay frozen. The search scheme instead uses the first
/// admissible split found under `SearchConfig::default()`.
pub fn expand(
    s: Rational,
    depth: usize,
    scheme: Scheme,
) -> Result<DecompositionTree, DecompositionError> {
    if depth > MAX_DEPTH {
        return Err(DecompositionError::DepthExceeded(depth));
    }
    if !s.is_unit_fraction() {
        return Err(DecompositionError::NotUnitFraction(s));
    }
    let cfg = SearchConfig::default();
    let mut root = leaf(s, Role::Main)?;
    if depth > 0 {
        if scheme == Scheme::Canonical && s == Rational::new(1, 2) {
            // step 1 of the ladder: 1/2 = 1/3 + 1/3 − 1/6, all branches live
            root.rule = Some(SplitRule::Custom);
            root.children = vec![
                leaf(Rational::new(1, 3), Role::Main)?,
                leaf(Rational::new(1, 3), Role::Main)?,
                leaf(Rational::new(-1, 6), Role::Main)?,
            ];
        } else {
            split_node(&mut root, scheme, &cfg)?;
        }
        for child in &mut root.children {
            expand_recursive(child, depth - 1, scheme, &cfg)?;
        }
    }
    Ok(DecompositionTree { root, depth })
}

fn collect_level(node: &DecompositionNode, level: usize, out: &mut Vec<SpinComponent>) {
    if level == 0 || node.children.is_empty() {
        out.push(SpinComponent {
            value: node.value,
            class: node.class,
            role: node.role,
        });
        return;
    }
    for child in &node.children {
        collect_level(child, level - 1, out);
    }
}

impl DecompositionTree {
    /// The components at `level`: descend that many splits, letting shallower
    /// leaves (frozen sea branches) carry through unchanged.
    pub fn level(&self, level: usize) -> Result<Vec<SpinComponent>, DecompositionError> {
        if level > self.depth {
            return Err(DecompositionError::LevelOutOfRange {
                level,
                depth: self.depth,
            });
        }
        let mut out = Vec::new();
        collect_level(&self.root, level, &mut out);
        Ok(out)
    }

    /// Exact signed sum of every component at `level`; equals the root for
    /// any level by construction, and this recomputes it independently.
    pub fn level_sum(&self, level: usize) -> Result<Rational, DecompositionError> {
        Ok(self
            .level(level)?
            .iter()
            .fold(Rational::ZERO, |acc, c| acc + c.value))
    }
}

/// Exact sum of the three largest-magnitude components at `level` (all of
/// them if the level has fewer than three). Ties are taken in deterministic
/// order: larger magnitude first, then positive before negative.
pub fn main_sum(tree: &DecompositionTree, level: usize) -> Result<Rational, DecompositionError> {
    let mut components: Vec<Rational> = tree.level(level)?.iter().map(|n| n.value).collect();
    components.sort_by(|a, b| b.abs().cmp(&a.abs()).then(b.cmp(a)));
    Ok(components
        .iter()
        .take(3)
        .fold(Rational::ZERO, |acc, &v| acc + v))
}

/// An exact ratio rendered as a percentage with one decimal, rounded
/// half-up: 9/35 over 1/2 prints as "51.4%".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Percentage(Rational);

impl Percentage {
    pub fn as_rational(&self) -> Rational {
        self.0
    }
}

impl std::fmt::Display for Percentage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let permille = self.0 * Rational::integer(1000);
        let (n, d) = (permille.numer() as i128, permille.denom() as i128);
        // round half away from zero
        let rounded = if n >= 0 {
            (2 * n + d) / (2 * d)
        } else {
            (2 * n - d) / (2 * d)
        };
        let whole = rounded / 10;
        let tenth = (rounded % 10).abs();
        if rounded < 0 && whole == 0 {
            write!(f, "-{whole}.{tenth}%")
        } else {
            write!(f, "{whole}.{tenth}%")
        }
    }
}

/// sum/s as an exact percentage.
pub fn ratio_to(s: Rational, sum: Rational) -> Result<Percentage, DecompositionError> {
    if s.is_zero() {
        return Err(DecompositionError::ZeroBase);
    }
    Ok(Percentage(sum / s))
}
