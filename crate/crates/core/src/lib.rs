//! Joint design of convolutional encoders and binary labelings for trellis-coded modulation.

pub mod bounds;
pub mod constellation;
pub mod dyadic;
pub mod encoder;
pub mod error;
pub mod gf2;
pub mod labeling;
pub mod reference;
pub mod search;
pub mod sim;
pub mod spectrum;
