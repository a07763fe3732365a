//! Glues and the complementary binding rule.

use std::fmt;

use crate::error::CoreError;

/// A glue label with a complement marker and strength. The empty label is the null glue.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Glue {
    label: String,
    primed: bool,
    strength: u8,
}

pub const MAX_STRENGTH: u8 = 2;

impl Glue {
    pub fn null() -> Self {
        Glue::default()
    }

    pub fn new(label: impl Into<String>, primed: bool, strength: u8) -> Result<Self, CoreError> {
        let label = label.into();
        if label.is_empty() {
            if primed || strength != 0 {
                return Err(CoreError::MalformedNull);
            }
            return Ok(Glue::null());
        }
        if strength > MAX_STRENGTH {
            return Err(CoreError::StrengthTooLarge);
        }
        if strength == 0 {
            return Err(CoreError::ZeroStrength);
        }
        Ok(Glue { label, primed, strength })
    }

    /// Parses `a` or `a'` (trailing apostrophe marks the complement).
    pub fn parse(text: &str, strength: u8) -> Result<Self, CoreError> {
        match text.strip_suffix('\'') {
            Some(base) => Glue::new(base, true, strength),
            None => Glue::new(text, false, strength),
        }
    }

    pub fn is_null(&self) -> bool {
        self.label.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn primed(&self) -> bool {
        self.primed
    }

    pub fn strength(&self) -> u8 {
        self.strength
    }

    /// Label with an apostrophe suffix when primed.
    pub fn display_label(&self) -> String {
        if self.primed {
            format!("{}'", self.label)
        } else {
            self.label.clone()
        }
    }

    pub fn complement(&self) -> Result<Glue, CoreError> {
        if self.is_null() {
            return Err(CoreError::NullComplement);
        }
        Ok(Glue { label: self.label.clone(), primed: !self.primed, strength: self.strength })
    }

    /// Whether `other` is the complement of `self`.
    pub fn complements(&self, other: &Glue) -> bool {
        !self.is_null()
            && self.label == other.label
            && self.primed != other.primed
            && self.strength == other.strength
    }
}

impl fmt::Display for Glue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_null() {
            write!(f, "-")
        } else {
            write!(f, "{}:{}", self.display_label(), self.strength)
        }
    }
}

/// Strength contributed by two abutting glues.
pub fn binds(g1: &Glue, g2: &Glue) -> u8 {
    if g1.complements(g2) {
        g1.strength
    } else {
        0
    }
}

/// Abutting glues that are neither both null nor a bound pair.
pub fn is_mismatch(g1: &Glue, g2: &Glue) -> bool {
    !(g1.is_null() && g2.is_null()) && binds(g1, g2) == 0
}
