//! Seeded random boxes for property checks.

use rand::Rng;

use crate::trilinear::Box3Bounds;

/// Integer bounds 0 ≤ aᵢ < bᵢ ≤ `max_bound`, drawn independently per axis.
///
/// Panics if `max_bound < 1`.
pub fn random_integer_box<R: Rng + ?Sized>(rng: &mut R, max_bound: i64) -> Box3Bounds {
    assert!(max_bound >= 1, "max_bound must be at least 1");
    let mut a = [0; 3];
    let mut b = [0; 3];
    for i in 0..3 {
        a[i] = rng.random_range(0..max_bound);
        b[i] = rng.random_range(a[i] + 1..=max_bound);
    }
    Box3Bounds::from_ints(a, b).expect("bounds are valid by construction")
}
