//! Small named solutions used throughout the tests and docs.

use crate::perm::Permutation;
use crate::solution::SolutionTable;

fn cycle(n: usize, cyc: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for k in 0..cyc.len() {
        images[cyc[k]] = cyc[(k + 1) % cyc.len()];
    }
    Permutation::new(images, "sigma", 0).unwrap()
}

/// Five-element solution with two f-orbits `{1,2,3,4}` and `{5}`:
/// `σ₁ = σ₃ = τ₁ = τ₃ = (1 2 3 4)`, `σ₂ = σ₄ = τ₂ = τ₄ = (1 4 3 2)`,
/// `σ₅ = τ₅ = id`. It is decomposable and its structure monoid has
/// Garside element `x₁⁴x₅`.
pub fn two_orbit_five() -> SolutionTable {
    let fwd = cycle(5, &[0, 1, 2, 3]);
    let bwd = cycle(5, &[0, 3, 2, 1]);
    let id = Permutation::identity(5);
    let sigma = [&fwd, &bwd, &fwd, &bwd, &id];
    let tau = [&fwd, &bwd, &fwd, &bwd, &id];
    SolutionTable::from_fn(5, |x, y| (sigma[x].apply(y), tau[y].apply(x))).unwrap()
}

/// Four-element indecomposable solution with the six defining relations
/// `x₁² = x₂²`, `x₁x₂ = x₃x₄`, `x₁x₃ = x₄x₂`, `x₃² = x₄²`,
/// `x₂x₄ = x₃x₁`, `x₂x₁ = x₄x₃`. Its structure group is Δ-pure and has
/// no proper standard parabolic subgroup, yet the solution folds over
/// the partition `{1,2} | {3,4}`.
pub fn delta_pure_four() -> SolutionTable {
    let fwd = cycle(4, &[0, 1, 2, 3]);
    let bwd = cycle(4, &[0, 3, 2, 1]);
    let sigma = [&fwd, &bwd, &fwd, &bwd];
    let tau = [&fwd, &bwd, &fwd, &bwd];
    SolutionTable::from_fn(4, |x, y| (sigma[x].apply(y), tau[y].apply(x))).unwrap()
}
