pub mod analysis;
pub mod battery;
pub mod simulate;
