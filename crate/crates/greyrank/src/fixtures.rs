//! Datasets compiled into the binary.

pub const TABLE1_RAW: &str = include_str!("../fixtures/table1-raw.csv");
pub const TABLE2_INTERVALS: &str = include_str!("../fixtures/table2-intervals.csv");
pub const TABLE3_AHP: &str = include_str!("../fixtures/table3-ahp.csv");

/// Dataset fixtures accepted by `--fixture`. `nuclear` is an alias for the
/// interval table.
pub const DATASETS: &[&str] = &["nuclear", "table1-raw", "table2-intervals"];

pub fn dataset(id: &str) -> Option<&'static str> {
    match id {
        "nuclear" | "table2-intervals" => Some(TABLE2_INTERVALS),
        "table1-raw" => Some(TABLE1_RAW),
        _ => None,
    }
}

pub fn matrix(id: &str) -> Option<&'static str> {
    match id {
        "nuclear" | "table3-ahp" => Some(TABLE3_AHP),
        _ => None,
    }
}
