//! Fixed-shape pairwise reductions.
//!
//! Every sum over grid sites in this crate goes through these functions so
//! that the rounding pattern depends only on the input length, never on the
//! thread count.

use num_complex::Complex64;

pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        len => {
            let (lo, hi) = values.split_at(len / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

pub fn pairwise_sum_complex(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        2 => values[0] + values[1],
        len => {
            let (lo, hi) = values.split_at(len / 2);
            pairwise_sum_complex(lo) + pairwise_sum_complex(hi)
        }
    }
}
