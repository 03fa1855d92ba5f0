//! Exhaustive search for admissible splits.

use crate::rational::Rational;

use super::{validate_split, DecompositionError, RuleSet, MAX_SEARCH_BOUND};

/// Bounds for the split search.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Largest denominator considered.
    pub denominator_bound: i64,
    /// Largest number of parts per split.
    pub max_parts: usize,
    /// Most negative parts allowed per split.
    pub max_negative: usize,
    pub rules: RuleSet,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            denominator_bound: 50,
            max_parts: 3,
            max_negative: 1,
            rules: RuleSet::default(),
        }
    }
}

/// Enumerate every admissible split of the positive unit fraction `s` into
/// signed unit fractions within the configured bounds. Ordering is
/// deterministic: fewer parts first, then lexicographic on the sequence of
/// (denominator, sign) with positive parts (by increasing denominator)
/// before the negative ones.
pub fn search_splits(
    s: Rational,
    cfg: &SearchConfig,
) -> Result<Vec<Vec<Rational>>, DecompositionError> {
    if !s.is_unit_fraction() || s.is_negative() {
        return Err(DecompositionError::NotUnitFraction(s));
    }
    if cfg.denominator_bound > MAX_SEARCH_BOUND {
        return Err(DecompositionError::BoundTooLarge(cfg.denominator_bound));
    }
    let bound = cfg.denominator_bound.max(2);
    let mut results = Vec::new();
    let mut parts: Vec<Rational> = Vec::new();

    // Depth-first over (positive denominators, then at most `max_negative`
    // negative ones), non-decreasing within each sign block to avoid
    // duplicate multisets.
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        s: Rational,
        cfg: &SearchConfig,
        bound: i64,
        parts: &mut Vec<Rational>,
        min_pos: i64,
        min_neg: i64,
        negatives_used: usize,
        results: &mut Vec<Vec<Rational>>,
    ) {
        let remaining = cfg.max_parts - parts.len();
        if remaining == 0 {
            return;
        }
        let target = s - parts.iter().fold(Rational::ZERO, |a, &b| a + b);
        // close the split with one more part?
        if parts.len() + 1 >= 2 && target.is_unit_fraction() {
            let d = target.denom();
            let within_order = if target.is_negative() {
                d >= min_neg
            } else {
                negatives_used == 0 && d >= min_pos
            };
            let within_budget = !target.is_negative() || negatives_used < cfg.max_negative;
            if d <= bound && within_order && within_budget {
                parts.push(target);
                if let Ok(v) = validate_split(s, parts, &cfg.rules) {
                    if v.valid {
                        results.push(parts.clone());
                    }
                }
                parts.pop();
            }
        }
        if remaining < 2 {
            return;
        }
        // extend with a positive part (positives precede negatives)
        if negatives_used == 0 {
            for d in min_pos..=bound {
                parts.push(Rational::new(1, d));
                recurse(s, cfg, bound, parts, d, 2, 0, results);
                parts.pop();
            }
        }
        // or with a negative part
        if negatives_used < cfg.max_negative && !parts.is_empty() {
            for d in min_neg..=bound {
                parts.push(Rational::new(-1, d));
                recurse(s, cfg, bound, parts, min_pos, d, negatives_used + 1, results);
                parts.pop();
            }
        }
    }

    recurse(s, cfg, bound, &mut parts, 2, 2, 0, &mut results);

    results.sort_by(|a, b| {
        a.len().cmp(&b.len()).then_with(|| {
            let key = |v: &[Rational]| -> Vec<(i64, i64)> {
                v.iter().map(|r| (r.denom(), -r.numer())).collect()
            };
            key(a).cmp(&key(b))
        })
    });
    results.dedup();
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn rediscovers_the_step_one_split() {
        let cfg = SearchConfig::default();
        let found = search_splits(rat(1, 2), &cfg).unwrap();
        assert!(
            found.contains(&vec![rat(1, 3), rat(1, 3), rat(-1, 6)]),
            "step-1 split missing from {found:?}"
        );
        // the two-particle composition is found as well
        assert!(found.contains(&vec![rat(1, 3), rat(1, 6)]));
    }

    #[test]
    fn class_iii_splits_never_appear() {
        let cfg = SearchConfig::default();
        let found = search_splits(rat(1, 3), &cfg).unwrap();
        assert!(!found.contains(&vec![rat(1, 4), rat(1, 12)]));
        for split in &found {
            for part in split {
                assert_ne!(part.denom() % 4, 0, "class-III part {part} in {split:?}");
            }
        }
        // the admissible three-particle composition of 1/3 is present
        assert!(found.contains(&vec![rat(1, 5), rat(1, 15), rat(1, 15)]));
    }

    #[test]
    fn splits_are_exact_and_valid() {
        let cfg = SearchConfig::default();
        for s in [rat(1, 2), rat(1, 3), rat(1, 5)] {
            for split in search_splits(s, &cfg).unwrap() {
                let sum = split.iter().fold(Rational::ZERO, |a, &b| a + b);
                assert_eq!(sum, s);
                assert!(split.len() >= 2 && split.len() <= cfg.max_parts);
                let negatives = split.iter().filter(|p| p.is_negative()).count();
                assert!(negatives <= cfg.max_negative);
            }
        }
    }

    #[test]
    fn deterministic_ordering() {
        let cfg = SearchConfig::default();
        let a = search_splits(rat(1, 2), &cfg).unwrap();
        let b = search_splits(rat(1, 2), &cfg).unwrap();
        assert_eq!(a, b);
        // two-part splits come first, ordered by denominator
        assert_eq!(a[0], vec![rat(1, 3), rat(1, 6)]);
    }

    #[test]
    fn bound_guard() {
        let cfg = SearchConfig {
            denominator_bound: 10_000,
            ..SearchConfig::default()
        };
        assert!(matches!(
            search_splits(rat(1, 2), &cfg),
            Err(DecompositionError::BoundTooLarge(10_000))
        ));
    }
}
