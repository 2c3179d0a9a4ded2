//! graph6 IO, JSONL records and the scan pipeline behind the `subcubic`
//! binary.

pub mod checks;
pub mod cli;
pub mod graph6;
pub mod input;
pub mod pipeline;
pub mod records;
