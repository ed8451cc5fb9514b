//! Random test varieties: `nr(i)` uniformly random points followed by
//! points whose coordinates are fixed random linear combinations of theirs.
//!
//! Randomness comes from ChaCha8 seeded by the full [`GenSpec`], so a spec
//! always yields the same point set.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fp::{FieldContext, FpElement};
use crate::points::PointSet;

/// Name of the generator, recorded with benchmark output.
pub const RNG_ALGORITHM: &str = "ChaCha8";

/// Resampling budget per point before giving up.
pub const MAX_ATTEMPTS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    /// Variety index `i` in `1..=r`.
    pub index: usize,
    /// Varieties per configuration `r`.
    pub reps: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<FieldContext> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::Config("n and m must be at least 1".into()));
        }
        if self.index == 0 || self.index > self.reps {
            return Err(Error::Config(format!(
                "variety index {} outside 1..={}",
                self.index, self.reps
            )));
        }
        FieldContext::new(self.p as u64)
    }

    /// Number of fully random points,
    /// `clamp(round((m/5) * ceil((r - i + 1)/2)), 1, m)`.
    pub fn nr(&self) -> usize {
        let halves = (self.reps + 1 - self.index).div_ceil(2);
        // round half up of m*halves/5
        let nr = (2 * self.m * halves + 5) / 10;
        nr.clamp(1, self.m)
    }

    fn rng(&self) -> ChaCha8Rng {
        let mut seed = [0u8; 32];
        seed[..8].copy_from_slice(&self.seed.to_le_bytes());
        seed[8..12].copy_from_slice(&self.p.to_le_bytes());
        seed[12..16].copy_from_slice(&(self.n as u32).to_le_bytes());
        seed[16..20].copy_from_slice(&(self.m as u32).to_le_bytes());
        seed[20..24].copy_from_slice(&(self.index as u32).to_le_bytes());
        seed[24..28].copy_from_slice(&(self.reps as u32).to_le_bytes());
        ChaCha8Rng::from_seed(seed)
    }
}

pub fn nr(spec: &GenSpec) -> usize {
    spec.nr()
}

/// Generates the variety described by `spec`.
///
/// The first `nr(i)` points are uniform in `GF(p)^n`. Point `j` after them is
/// `g_j` applied coordinate-wise to the first `nr(i)` points, where `g_j` is a
/// nonzero homogeneous linear form with uniform coefficients. When the span
/// of the random points has fewer than `m` nonzero vectors, the zero form is
/// allowed too, since otherwise the spec could never be met. Colliding
/// points are redrawn (with a fresh `g_j` for dependent points) at most
/// [`MAX_ATTEMPTS`] times.
pub fn gen_variety(spec: &GenSpec) -> Result<PointSet> {
    let field = spec.validate()?;
    let (n, m, p) = (spec.n, spec.m, spec.p);
    let nr = spec.nr();
    let mut rng = spec.rng();
    let mut coords: Vec<FpElement> = Vec::with_capacity(n * m);
    let mut seen: HashSet<Vec<FpElement>> = HashSet::with_capacity(m);
    let allow_zero_form = (p as f64).powi(nr as i32) - 1.0 < m as f64;

    for j in 0..m {
        let mut attempts = 0;
        let point = loop {
            attempts += 1;
            if attempts > MAX_ATTEMPTS {
                return Err(Error::Generation(format!(
                    "could not draw a new distinct point {} of {m} after {MAX_ATTEMPTS} attempts (p={p}, n={n}, nr={nr})",
                    j + 1
                )));
            }
            let candidate: Vec<FpElement> = if j < nr {
                (0..n)
                    .map(|_| field.element(rng.gen_range(0..p) as u64))
                    .collect()
            } else {
                let g = linear_form(&mut rng, &field, nr, allow_zero_form);
                (0..n)
                    .map(|l| {
                        g.iter().enumerate().fold(FpElement::ZERO, |acc, (k, &c)| {
                            field.add(acc, field.mul(c, coords[k * n + l]))
                        })
                    })
                    .collect()
            };
            if !seen.contains(&candidate) {
                break candidate;
            }
        };
        coords.extend_from_slice(&point);
        seen.insert(point);
    }
    PointSet::from_elements(field, n, coords)
}

fn linear_form(
    rng: &mut ChaCha8Rng,
    field: &FieldContext,
    len: usize,
    allow_zero: bool,
) -> Vec<FpElement> {
    loop {
        let g: Vec<FpElement> = (0..len)
            .map(|_| field.element(rng.gen_range(0..field.modulus()) as u64))
            .collect();
        if allow_zero || g.iter().any(|c| !c.is_zero()) {
            return g;
        }
    }
}
