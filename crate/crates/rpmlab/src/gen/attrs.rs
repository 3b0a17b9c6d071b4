//! Attribute domains and symbolic panel/puzzle types.
//!
//! A puzzle is described entirely by small integers: shape type index,
//! size level, color level, object count, and a cell-occupancy bitmask.

use serde::{Deserialize, Serialize};

/// Ordered shape list; the `type` attribute indexes into it.
pub const SHAPE_NAMES: [&str; 5] = ["triangle", "square", "pentagon", "hexagon", "circle"];

/// Edge count used when rendering each shape (circle is a 32-gon).
pub const SHAPE_SIDES: [usize; 5] = [3, 4, 5, 6, 32];

pub const SIZE_LEVELS: i64 = 6; // levels 0..=5, scale 0.4 + 0.1 * level
pub const COLOR_LEVELS: i64 = 10; // levels 0..=9, intensity 230 - 25 * level
pub const TYPE_LEVELS: i64 = 5;

/// Fill intensity for a color level (level 0 is lightest).
pub fn color_intensity(level: i64) -> u8 {
    (230 - 25 * level) as u8
}

/// Shape scale relative to its cell for a size level.
pub fn size_scale(level: i64) -> f64 {
    0.4 + 0.1 * level as f64
}

/// Panel arrangement of object cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Layout {
    Center,
    Grid2x2,
    Grid3x3,
}

impl Layout {
    pub fn cells(self) -> usize {
        match self {
            Layout::Center => 1,
            Layout::Grid2x2 => 4,
            Layout::Grid3x3 => 9,
        }
    }

    /// Grid side length (1, 2 or 3).
    pub fn side(self) -> usize {
        match self {
            Layout::Center => 1,
            Layout::Grid2x2 => 2,
            Layout::Grid3x3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Layout::Center => "Center",
            Layout::Grid2x2 => "Grid2x2",
            Layout::Grid3x3 => "Grid3x3",
        }
    }

    pub fn from_name(s: &str) -> Option<Layout> {
        match s {
            "Center" => Some(Layout::Center),
            "Grid2x2" => Some(Layout::Grid2x2),
            "Grid3x3" => Some(Layout::Grid3x3),
            _ => None,
        }
    }
}

/// How distractors are constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DistractorMode {
    /// Each wrong choice differs from the answer in exactly one attribute.
    Raven,
    /// Each wrong choice differs in at least two attributes, and the answer
    /// value is never the strict per-attribute mode across the choice list.
    IRaven,
}

impl DistractorMode {
    pub fn name(self) -> &'static str {
        match self {
            DistractorMode::Raven => "RAVEN",
            DistractorMode::IRaven => "IRAVEN",
        }
    }

    pub fn from_name(s: &str) -> Option<DistractorMode> {
        match s {
            "RAVEN" => Some(DistractorMode::Raven),
            "IRAVEN" => Some(DistractorMode::IRaven),
            _ => None,
        }
    }
}

/// Axis along which the governing rules apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum RuleAxis {
    #[default]
    Rows,
    Columns,
}

/// The five attribute kinds a rule can govern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttrKind {
    Number,
    Position,
    Type,
    Size,
    Color,
}

pub const ATTR_KINDS: [AttrKind; 5] = [
    AttrKind::Number,
    AttrKind::Position,
    AttrKind::Type,
    AttrKind::Size,
    AttrKind::Color,
];

impl AttrKind {
    pub fn name(self) -> &'static str {
        match self {
            AttrKind::Number => "number",
            AttrKind::Position => "position",
            AttrKind::Type => "type",
            AttrKind::Size => "size",
            AttrKind::Color => "color",
        }
    }
}

/// Inclusive value range for scalar attribute kinds; position is handled
/// separately because its domain is the set of bitmasks over layout cells.
pub fn scalar_domain(layout: Layout, kind: AttrKind) -> Option<(i64, i64)> {
    match kind {
        AttrKind::Number => Some((1, layout.cells() as i64)),
        AttrKind::Type => Some((0, TYPE_LEVELS - 1)),
        AttrKind::Size => Some((0, SIZE_LEVELS - 1)),
        AttrKind::Color => Some((0, COLOR_LEVELS - 1)),
        AttrKind::Position => None,
    }
}

/// Whether `value` is a legal value of `kind` under `layout`.
pub fn attr_in_domain(layout: Layout, kind: AttrKind, value: i64) -> bool {
    match kind {
        AttrKind::Position => {
            let cells = layout.cells() as u32;
            value > 0 && value < (1i64 << cells) && (value as u64).count_ones() <= cells
        }
        _ => {
            let (lo, hi) = scalar_domain(layout, kind).unwrap();
            (lo..=hi).contains(&value)
        }
    }
}

/// One object inside a panel. All objects of a panel share type/size/color;
/// the cell index selects where it is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ObjectRecord {
    pub cell: u8,
    pub shape: u8,
    pub size: u8,
    pub color: u8,
}

/// A single image of the matrix, described symbolically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PanelSymbolic {
    pub layout: Layout,
    pub objects: Vec<ObjectRecord>,
}

impl PanelSymbolic {
    /// Builds a panel from the five attribute values. The position mask
    /// must have popcount equal to `number`.
    pub fn from_attrs(layout: Layout, mask: i64, shape: i64, size: i64, color: i64) -> Self {
        let mut objects = Vec::new();
        for cell in 0..layout.cells() {
            if mask & (1 << cell) != 0 {
                objects.push(ObjectRecord {
                    cell: cell as u8,
                    shape: shape as u8,
                    size: size as u8,
                    color: color as u8,
                });
            }
        }
        PanelSymbolic { layout, objects }
    }

    pub fn number(&self) -> i64 {
        self.objects.len() as i64
    }

    pub fn position_mask(&self) -> i64 {
        self.objects.iter().fold(0i64, |m, o| m | (1 << o.cell))
    }

    /// Value of an attribute kind for this panel. Objects share type, size
    /// and color, so the first object's value stands for the panel.
    pub fn attr(&self, kind: AttrKind) -> i64 {
        match kind {
            AttrKind::Number => self.number(),
            AttrKind::Position => self.position_mask(),
            AttrKind::Type => self.objects.first().map_or(0, |o| o.shape as i64),
            AttrKind::Size => self.objects.first().map_or(0, |o| o.size as i64),
            AttrKind::Color => self.objects.first().map_or(0, |o| o.color as i64),
        }
    }

    /// Checks structural invariants: unique in-range cells, popcount
    /// consistency, and shared object attributes.
    pub fn check(&self) -> bool {
        let cells = self.layout.cells();
        if self.objects.is_empty() {
            return false;
        }
        let mut seen = 0u64;
        for o in &self.objects {
            if o.cell as usize >= cells || seen & (1 << o.cell) != 0 {
                return false;
            }
            seen |= 1 << o.cell;
            let f = &self.objects[0];
            if o.shape != f.shape || o.size != f.size || o.color != f.color {
                return false;
            }
            if !attr_in_domain(self.layout, AttrKind::Type, o.shape as i64)
                || !attr_in_domain(self.layout, AttrKind::Size, o.size as i64)
                || !attr_in_domain(self.layout, AttrKind::Color, o.color as i64)
            {
                return false;
            }
        }
        true
    }
}

/// Attribute kinds in which two panels differ.
pub fn attribute_diff(a: &PanelSymbolic, b: &PanelSymbolic) -> Vec<AttrKind> {
    ATTR_KINDS
        .iter()
        .copied()
        .filter(|&k| a.attr(k) != b.attr(k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn panel_attr_roundtrip() {
        let p = PanelSymbolic::from_attrs(Layout::Grid2x2, 0b0101, 2, 3, 7);
        assert_eq!(p.number(), 2);
        assert_eq!(p.position_mask(), 0b0101);
        assert_eq!(p.attr(AttrKind::Type), 2);
        assert_eq!(p.attr(AttrKind::Size), 3);
        assert_eq!(p.attr(AttrKind::Color), 7);
        assert!(p.check());
    }

    #[test]
    fn domain_checks() {
        assert!(attr_in_domain(Layout::Center, AttrKind::Number, 1));
        assert!(!attr_in_domain(Layout::Center, AttrKind::Number, 2));
        assert!(attr_in_domain(Layout::Grid3x3, AttrKind::Position, 0b1_1111_1111));
        assert!(!attr_in_domain(Layout::Grid2x2, AttrKind::Position, 0b10000));
        assert!(!attr_in_domain(Layout::Grid2x2, AttrKind::Position, 0));
        assert!(attr_in_domain(Layout::Center, AttrKind::Color, 9));
        assert!(!attr_in_domain(Layout::Center, AttrKind::Color, 10));
    }

    #[test]
    fn diff_counts_kinds() {
        let a = PanelSymbolic::from_attrs(Layout::Center, 1, 0, 3, 2);
        let b = PanelSymbolic::from_attrs(Layout::Center, 1, 1, 3, 5);
        assert_eq!(attribute_diff(&a, &b), vec![AttrKind::Type, AttrKind::Color]);
    }

    #[test]
    fn intensity_formula() {
        assert_eq!(color_intensity(0), 230);
        assert_eq!(color_intensity(9), 5);
    }
}
