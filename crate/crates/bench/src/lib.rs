//! Fixtures shared by the benchmarks.

use linemono_core::{compute_combinatorics, CombinatorialSummary, Line, WeightedArrangement};

/// `n` lines in general position plus a pencil of `n/4` concurrent lines.
pub fn grid_arrangement(n: usize) -> WeightedArrangement {
    let mut lines = Vec::with_capacity(n);
    let pencil = n / 4;
    for k in 0..pencil {
        lines.push(Line::from_ints(1, k as i64 + 1, 0).unwrap());
    }
    let mut k = 0i64;
    while lines.len() < n {
        let line = Line::from_ints(k % 7 + 2, 1 + k * k, 3 * k + 1).unwrap();
        if !lines.contains(&line) {
            lines.push(line);
        }
        k += 1;
    }
    WeightedArrangement::unweighted(lines).unwrap()
}

pub fn grid_summary(n: usize) -> CombinatorialSummary {
    compute_combinatorics(&grid_arrangement(n))
}
