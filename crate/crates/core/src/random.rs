//! Seeded random basis changes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::{FieldSpec, Matrix};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly drawn invertible matrix over `GF(p)`, or one with small
/// integer entries in `[-3, 3]` over `Q`. Redraws until invertible.
pub fn invertible_matrix<R: Rng>(field: FieldSpec, n: usize, rng: &mut R) -> Matrix {
    loop {
        let entries = (0..n * n)
            .map(|_| match field {
                FieldSpec::Rationals => field.from_i64(rng.gen_range(-3..=3)),
                FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
            })
            .collect();
        let m = Matrix::new(field, n, n, entries);
        if m.is_invertible() {
            return m;
        }
    }
}
