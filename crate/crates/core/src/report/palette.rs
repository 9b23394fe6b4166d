//! Highlight colours: orange toward the explained class, blue against it.

pub const POSITIVE_RGB: (u8, u8, u8) = (255, 127, 14);
pub const NEGATIVE_RGB: (u8, u8, u8) = (31, 119, 180);
pub const POSITIVE_HEX: &str = "#ff7f0e";
pub const NEGATIVE_HEX: &str = "#1f77b4";
pub const PROBABILITY_HEX: &str = "#7f7f7f";
