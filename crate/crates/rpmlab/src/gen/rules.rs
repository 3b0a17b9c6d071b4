//! Row-rule grammar: the four rule families and their triple semantics.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::attrs::AttrKind;

/// The four rule families a puzzle attribute can follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleFamily {
    Constant,
    Progression,
    Arithmetic,
    DistributeThree,
}

pub const RULE_FAMILIES: [RuleFamily; 4] = [
    RuleFamily::Constant,
    RuleFamily::Progression,
    RuleFamily::Arithmetic,
    RuleFamily::DistributeThree,
];

impl RuleFamily {
    pub fn name(self) -> &'static str {
        match self {
            RuleFamily::Constant => "constant",
            RuleFamily::Progression => "progression",
            RuleFamily::Arithmetic => "arithmetic",
            RuleFamily::DistributeThree => "distribute_three",
        }
    }
}

/// Progression steps the generator and oracle consider.
pub const PROGRESSION_STEPS: [i64; 4] = [-2, -1, 1, 2];
/// Arithmetic signs: +1 for addition/union, -1 for subtraction/difference.
pub const ARITHMETIC_SIGNS: [i64; 2] = [1, -1];

/// One governing rule bound to an attribute kind.
///
/// `parameter` is the progression step, the arithmetic sign, or for
/// distribute-three the designated value triple packed into one integer
/// (16 bits per value, ascending order). Constant uses 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuleInstance {
    pub rule: RuleFamily,
    pub attribute: AttrKind,
    pub parameter: i64,
}

impl RuleInstance {
    pub fn constant(attribute: AttrKind) -> Self {
        RuleInstance { rule: RuleFamily::Constant, attribute, parameter: 0 }
    }

    pub fn progression(attribute: AttrKind, step: i64) -> Self {
        RuleInstance { rule: RuleFamily::Progression, attribute, parameter: step }
    }

    pub fn arithmetic(attribute: AttrKind, sign: i64) -> Self {
        RuleInstance { rule: RuleFamily::Arithmetic, attribute, parameter: sign }
    }

    pub fn distribute_three(attribute: AttrKind, values: [i64; 3]) -> Self {
        RuleInstance {
            rule: RuleFamily::DistributeThree,
            attribute,
            parameter: pack_triple(values),
        }
    }
}

/// Packs three distinct small values (each < 2^16) in ascending order.
pub fn pack_triple(mut v: [i64; 3]) -> i64 {
    v.sort_unstable();
    v[0] | (v[1] << 16) | (v[2] << 32)
}

/// Inverse of [`pack_triple`].
pub fn unpack_triple(p: i64) -> [i64; 3] {
    [p & 0xffff, (p >> 16) & 0xffff, (p >> 32) & 0xffff]
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("rule {rule} cannot govern attribute {attribute}")]
    InvalidPairing { rule: &'static str, attribute: &'static str },
    #[error("parameter {parameter} is invalid for rule {rule}")]
    InvalidParameter { rule: &'static str, parameter: i64 },
}

/// Whether a (rule, attribute) pairing is part of the grammar.
///
/// Arithmetic over shape types is excluded (the type domain has no additive
/// structure) and progression over position is excluded (cell masks have no
/// linear order).
pub fn pairing_supported(rule: RuleFamily, attribute: AttrKind) -> bool {
    !matches!(
        (rule, attribute),
        (RuleFamily::Arithmetic, AttrKind::Type) | (RuleFamily::Progression, AttrKind::Position)
    )
}

/// Evaluates whether a value triple satisfies `rule` along a row.
///
/// * constant: `v1 = v2 = v3`
/// * progression(step): `v2 = v1 + step` and `v3 = v2 + step`
/// * arithmetic(sign): `v3 = v1 + sign * v2` for scalar kinds; for position
///   masks, `+` is set union and `-` is set difference
/// * distribute_three: the triple is a permutation of the designated
///   three-value set
pub fn rule_holds(rule: &RuleInstance, triple: [i64; 3]) -> Result<bool, RuleError> {
    if !pairing_supported(rule.rule, rule.attribute) {
        return Err(RuleError::InvalidPairing {
            rule: rule.rule.name(),
            attribute: rule.attribute.name(),
        });
    }
    let [v1, v2, v3] = triple;
    match rule.rule {
        RuleFamily::Constant => Ok(v1 == v2 && v2 == v3),
        RuleFamily::Progression => {
            if !PROGRESSION_STEPS.contains(&rule.parameter) {
                return Err(RuleError::InvalidParameter {
                    rule: rule.rule.name(),
                    parameter: rule.parameter,
                });
            }
            Ok(v2 == v1 + rule.parameter && v3 == v2 + rule.parameter)
        }
        RuleFamily::Arithmetic => {
            let sign = rule.parameter;
            if !ARITHMETIC_SIGNS.contains(&sign) {
                return Err(RuleError::InvalidParameter {
                    rule: rule.rule.name(),
                    parameter: sign,
                });
            }
            if rule.attribute == AttrKind::Position {
                Ok(if sign > 0 { v3 == v1 | v2 } else { v3 == v1 & !v2 })
            } else {
                Ok(v3 == v1 + sign * v2)
            }
        }
        RuleFamily::DistributeThree => {
            let set = unpack_triple(rule.parameter);
            if set[0] == set[1] || set[1] == set[2] {
                return Err(RuleError::InvalidParameter {
                    rule: rule.rule.name(),
                    parameter: rule.parameter,
                });
            }
            let mut t = triple;
            t.sort_unstable();
            Ok(t == set)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_on_equal_triple() {
        let r = RuleInstance::constant(AttrKind::Color);
        assert_eq!(rule_holds(&r, [5, 5, 5]), Ok(true));
        assert_eq!(rule_holds(&r, [5, 5, 4]), Ok(false));
    }

    #[test]
    fn progression_step_plus_one() {
        let r = RuleInstance::progression(AttrKind::Size, 1);
        assert_eq!(rule_holds(&r, [2, 3, 4]), Ok(true));
        assert_eq!(rule_holds(&r, [2, 3, 5]), Ok(false));
        let r2 = RuleInstance::progression(AttrKind::Size, -2);
        assert_eq!(rule_holds(&r2, [5, 3, 1]), Ok(true));
    }

    #[test]
    fn arithmetic_on_number() {
        // Exhaustive: v3 = v1 + v2 is the only accepted pattern over the domain.
        let r = RuleInstance::arithmetic(AttrKind::Number, 1);
        assert_eq!(rule_holds(&r, [1, 2, 4]), Ok(false));
        for v1 in 1..=9 {
            for v2 in 1..=9 {
                for v3 in 1..=9 {
                    let expect = v3 == v1 + v2;
                    assert_eq!(rule_holds(&r, [v1, v2, v3]), Ok(expect));
                }
            }
        }
    }

    #[test]
    fn arithmetic_on_position_is_setwise() {
        let add = RuleInstance::arithmetic(AttrKind::Position, 1);
        assert_eq!(rule_holds(&add, [0b0011, 0b0100, 0b0111]), Ok(true));
        assert_eq!(rule_holds(&add, [0b0011, 0b0100, 0b0110]), Ok(false));
        let sub = RuleInstance::arithmetic(AttrKind::Position, -1);
        assert_eq!(rule_holds(&sub, [0b0111, 0b0010, 0b0101]), Ok(true));
    }

    #[test]
    fn distribute_three_permutations() {
        let r = RuleInstance::distribute_three(AttrKind::Type, [4, 0, 2]);
        assert_eq!(rule_holds(&r, [0, 2, 4]), Ok(true));
        assert_eq!(rule_holds(&r, [4, 2, 0]), Ok(true));
        assert_eq!(rule_holds(&r, [4, 2, 2]), Ok(false));
        assert_eq!(unpack_triple(r.parameter), [0, 2, 4]);
    }

    #[test]
    fn unsupported_pairings_error() {
        let r = RuleInstance::arithmetic(AttrKind::Type, 1);
        assert!(matches!(rule_holds(&r, [0, 1, 1]), Err(RuleError::InvalidPairing { .. })));
        let p = RuleInstance::progression(AttrKind::Position, 1);
        assert!(matches!(rule_holds(&p, [1, 2, 3]), Err(RuleError::InvalidPairing { .. })));
    }
}
