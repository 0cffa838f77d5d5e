//! Gallai 3-colourings: edge colourings with colours `{1, 2, 3}` that contain
//! no rainbow triangle.

mod bigcount;
mod brute;
mod colouring;
mod construction;
mod exact;

pub use bigcount::BigCount;
pub use brute::{count_bruteforce, count_bruteforce_capped, DEFAULT_BRUTEFORCE_CAP};
pub use colouring::{is_gallai, Colour, Colouring};
pub use construction::{construction_count, construction_enumerate, gallai_weight, ColourPair, ConstructionIter};
pub use exact::{count_exact, triangle_components, CountReport, DEFAULT_NODE_CAP};

/// Bit mask of a colour: colour `c` maps to `1 << (c - 1)`.
#[inline]
pub(crate) fn colour_bit(c: Colour) -> u8 {
    1 << (c - 1)
}

/// All three colour bits set: the OR of a rainbow triangle's edge masks.
pub(crate) const RAINBOW: u8 = 0b111;
