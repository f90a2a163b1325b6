//! Shared inputs for the benchmark targets.

use lawrence_core::Configuration;

pub fn twisted_cubic() -> Configuration {
    Configuration::new(2, 4, vec![3, 2, 1, 0, 0, 1, 2, 3]).unwrap()
}

pub fn one_row(k: i64, l: i64, m: i64) -> Configuration {
    Configuration::new(1, 3, vec![k, l, m]).unwrap()
}
