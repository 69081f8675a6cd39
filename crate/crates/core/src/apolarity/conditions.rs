use std::sync::Arc;

use crate::certificates::{linear_form_pool, quadric_rank, search_flag, FlagSearch};
use crate::polyring::constructors::{generic_form_with, GENERIC_COEFF_BOUND};
use crate::polyring::{seeded_rng, Polynomial, Ring};
use crate::scalars::DenseMatrix;
use crate::{Bounds, Error, Property, Result, Verdict, Witness};

use super::inverse::inverse_system;

/// Pool forms tried by [`balla_search`] unless told otherwise.
pub const DEFAULT_PAIR_ATTEMPTS: usize = 500;

fn check_cubic(f: &Polynomial) -> Result<()> {
    if f.is_zero() || f.degree() != Some(3) || !f.is_homogeneous() {
        return Err(Error::Invalid(format!("`{f}` is not a cubic form")));
    }
    Ok(())
}

fn check_linear(f: &Polynomial, y: &Polynomial) -> Result<()> {
    if y.ring() != f.ring() {
        return Err(Error::RingMismatch);
    }
    if y.is_zero() || y.degree() != Some(1) || !y.is_homogeneous() {
        return Err(Error::Invalid(format!("`{y}` is not a nonzero linear form")));
    }
    Ok(())
}

fn parallel(y: &Polynomial, z: &Polynomial) -> bool {
    let rows = vec![y.linear_coeffs(), z.linear_coeffs()];
    DenseMatrix::from_rows(y.field(), y.ring().n(), rows)
        .map(|m| m.rank() < 2)
        .unwrap_or(true)
}

/// Whether `∂f/∂y` is a quadric of rank `n−1`.
fn corank_one(f: &Polynomial, y: &Polynomial) -> Result<bool> {
    let q = f.apply_linear_operator(y);
    Ok(!q.is_zero() && quadric_rank(&q)? + 1 == f.ring().n())
}

/// `∂²f/∂y∂z = 0` and both `∂f/∂y`, `∂f/∂z` are quadrics of rank `n−1`; a
/// linear form acts as the derivation along its coefficient vector.
pub fn balla_condition(f: &Polynomial, y: &Polynomial, z: &Polynomial) -> Result<bool> {
    check_cubic(f)?;
    check_linear(f, y)?;
    check_linear(f, z)?;
    if parallel(y, z) {
        return Err(Error::Invalid(format!("`{y}` and `{z}` are proportional")));
    }
    if !f.apply_linear_operator(y).apply_linear_operator(z).is_zero() {
        return Ok(false);
    }
    Ok(corank_one(f, y)? && corank_one(f, z)?)
}

/// Looks for a pair satisfying [`balla_condition`]. For each `y` of the
/// linear-form pool with `∂f/∂y` of rank `n−1` the partner `z` is forced up
/// to scalar: it spans the kernel of the Gram matrix of `∂f/∂y`.
pub fn balla_search(f: &Polynomial, seed: u64, attempts: usize) -> Result<Option<(Polynomial, Polynomial)>> {
    check_cubic(f)?;
    let ring = f.ring();
    let n = ring.n();
    for y in linear_form_pool(ring, seed).into_iter().take(attempts) {
        if !corank_one(f, &y)? {
            continue;
        }
        let q = f.apply_linear_operator(&y);
        let gram = DenseMatrix::from_rows(
            ring.field(),
            n,
            (0..n).map(|i| q.derivative(i).linear_coeffs()).collect(),
        )?;
        let kernel = gram.kernel_basis();
        let [k] = kernel.as_slice() else {
            continue;
        };
        let z = Polynomial::linear(ring, k);
        if parallel(&y, &z) {
            continue;
        }
        if balla_condition(f, &y, &z)? {
            return Ok(Some((y, z)));
        }
    }
    Ok(None)
}

/// [`balla_search`] as a verdict: a pair gives `R_f` a Koszul filtration.
pub fn balla_search_verdict(f: &Polynomial, seed: u64, attempts: usize) -> Result<Verdict> {
    let bounds = Bounds {
        attempts: Some(attempts),
        seed: Some(seed),
        ..Bounds::default()
    };
    Ok(match balla_search(f, seed, attempts)? {
        Some((y, z)) => Verdict::yes(
            Property::Koszul,
            Witness::LinearFormPair {
                y: y.to_string(),
                z: z.to_string(),
            },
        )
        .with_note("R_f has a Koszul filtration"),
        None => Verdict::undetermined(
            Property::Koszul,
            Witness::SearchExhausted {
                attempts: attempts.min(linear_form_pool(f.ring(), seed).len()),
            },
        ),
    }
    .with_bounds(bounds))
}

/// `∂²f/∂y² = 0` and `∂f/∂y` is a quadric of rank `n−1`.
pub fn singular_flag_condition(f: &Polynomial, y: &Polynomial) -> Result<bool> {
    check_cubic(f)?;
    check_linear(f, y)?;
    let q = f.apply_linear_operator(y);
    if !q.apply_linear_operator(y).is_zero() {
        return Ok(false);
    }
    corank_one(f, y)
}

/// `x_1·q + g` with `g` a seeded cubic in `x_2..x_n` and `q` the split
/// quadric `x_2x_3 + x_4x_5 + …` (plus `x_n^2` when `n−1` is odd), the normal
/// form of a nondegenerate quadric over an algebraically closed field.
/// Singular at `(1:0:…:0)` with `∂²f/∂x_1² = 0`.
pub fn generic_singular_cubic(ring: &Arc<Ring>, seed: u64) -> Result<Polynomial> {
    let n = ring.n();
    if n < 3 {
        return Err(Error::Invalid("a singular cubic needs at least three variables".into()));
    }
    let names: Vec<String> = ring.names()[1..].to_vec();
    let rest = Ring::with_names(names, ring.field())?;
    let pos: Vec<usize> = (1..n).collect();
    let mut rng = seeded_rng(seed);
    let g = generic_form_with(&rest, 3, &mut rng, GENERIC_COEFF_BOUND).embed(ring, &pos);
    let x = |i: usize| Polynomial::var(ring, i);
    let mut q = Polynomial::zero(ring);
    let mut i = 1;
    while i + 1 < n {
        q = &q + &(&x(i) * &x(i + 1));
        i += 2;
    }
    if i < n {
        q = &q + &(&x(i) * &x(i));
    }
    Ok(&(&x(0) * &q) + &g)
}

/// Runs the Gröbner flag search on `R_f`.
pub fn singular_cubic_flag(f: &Polynomial, seed: u64, attempts: usize) -> Result<FlagSearch> {
    let res = inverse_system(f)?;
    search_flag(&res.quotient, seed, attempts)
}
