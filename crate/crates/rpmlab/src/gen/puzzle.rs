//! The symbolic puzzle: a 3x3 context with the last panel missing, eight
//! candidate answers, and the governing rule set.

use serde::{Deserialize, Serialize};

use super::attrs::{DistractorMode, Layout, PanelSymbolic, RuleAxis};
use super::rules::RuleInstance;

/// Full symbolic description of one puzzle instance.
///
/// `context` holds the eight visible panels in reading order; the panel at
/// grid position (3,3) is missing and is completed by one of `choices`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PuzzleSymbolic {
    pub layout: Layout,
    pub rule_axis: RuleAxis,
    pub context: Vec<PanelSymbolic>,
    pub choices: Vec<PanelSymbolic>,
    pub correct_index: u8,
    pub rules: Vec<RuleInstance>,
    pub distractor_mode: DistractorMode,
    pub seed: u64,
}

impl PuzzleSymbolic {
    /// The two complete rule groups (rows 1-2, or columns 1-2 when the
    /// rules run along columns).
    pub fn complete_groups(&self) -> [[&PanelSymbolic; 3]; 2] {
        match self.rule_axis {
            RuleAxis::Rows => [
                [&self.context[0], &self.context[1], &self.context[2]],
                [&self.context[3], &self.context[4], &self.context[5]],
            ],
            RuleAxis::Columns => [
                [&self.context[0], &self.context[3], &self.context[6]],
                [&self.context[1], &self.context[4], &self.context[7]],
            ],
        }
    }

    /// The incomplete third group, completed by `choice`.
    pub fn third_group_with<'a>(&'a self, choice: &'a PanelSymbolic) -> [&'a PanelSymbolic; 3] {
        match self.rule_axis {
            RuleAxis::Rows => [&self.context[6], &self.context[7], choice],
            RuleAxis::Columns => [&self.context[2], &self.context[5], choice],
        }
    }

    pub fn answer(&self) -> &PanelSymbolic {
        &self.choices[self.correct_index as usize]
    }

    /// Serializes to the UTF-8 text payload stored in dataset files.
    pub fn to_text(&self) -> String {
        serde_json::to_string(self).expect("puzzle serialization cannot fail")
    }

    pub fn from_text(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
