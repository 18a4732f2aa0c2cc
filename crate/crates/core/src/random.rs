//! Seeded random instance generators.
//!
//! Every generator draws from a ChaCha stream seeded explicitly, audits the
//! candidate through [`PointSet::build`] (general position) plus the
//! requested hull shape, and retries on rejection.  Identical seeds yield
//! identical instances on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{PointSet, MAX_POINTS};
use crate::hypergraph::{Colouring, Hypergraph};
use crate::matroid::GraphSpec;

/// Attempts per call before giving up.
pub const RETRY_BUDGET: usize = 64;

/// Circle radius for convex-position sampling; far below the coordinate
/// bound, far above rounding noise.
const RADIUS: f64 = (1u32 << 19) as f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("generator needs at least {needed} points, requested {got}")]
    TooFew { needed: usize, got: usize },
    #[error("requested {0} points, above the supported maximum of {MAX_POINTS}")]
    TooMany(usize),
    #[error("no valid instance found in {0} attempts")]
    GenerationFailed(usize),
}

fn check_size(n: usize, needed: usize) -> Result<(), GenError> {
    if n < needed {
        return Err(GenError::TooFew { needed, got: n });
    }
    if n > MAX_POINTS {
        return Err(GenError::TooMany(n));
    }
    Ok(())
}

/// Integer points rounded from random positions on a circle, sorted by
/// angle.
fn circle_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<(i64, i64)> {
    let mut angles: Vec<f64> = (0..count)
        .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
        .collect();
    angles.sort_by(f64::total_cmp);
    angles
        .iter()
        .map(|a| ((RADIUS * a.cos()).round() as i64, (RADIUS * a.sin()).round() as i64))
        .collect()
}

fn retry<F>(mut attempt: F) -> Result<PointSet, GenError>
where
    F: FnMut() -> Option<PointSet>,
{
    for _ in 0..RETRY_BUDGET {
        if let Some(ps) = attempt() {
            return Ok(ps);
        }
    }
    Err(GenError::GenerationFailed(RETRY_BUDGET))
}

/// `n` points in convex position (no interior points).
pub fn random_convex(n: usize, seed: u64) -> Result<PointSet, GenError> {
    check_size(n, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    retry(|| {
        let raw = circle_points(&mut rng, n);
        let ps = PointSet::build(&raw).ok()?;
        (ps.interior_count() == 0).then_some(ps)
    })
}

/// `n` points with exactly one of them interior to the hull of the others.
pub fn random_one_interior(n: usize, seed: u64) -> Result<PointSet, GenError> {
    check_size(n, 4)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let jitter = (1i64 << 17) as i64;
    retry(|| {
        let mut raw = circle_points(&mut rng, n - 1);
        let centre_x = raw.iter().map(|p| p.0).sum::<i64>() / (n as i64 - 1);
        let centre_y = raw.iter().map(|p| p.1).sum::<i64>() / (n as i64 - 1);
        raw.push((
            centre_x + rng.random_range(-jitter..=jitter),
            centre_y + rng.random_range(-jitter..=jitter),
        ));
        let ps = PointSet::build(&raw).ok()?;
        (ps.interior_count() == 1).then_some(ps)
    })
}

/// `n` points in general position anywhere on the grid; the interior count
/// falls where it may.
pub fn random_general(n: usize, seed: u64) -> Result<PointSet, GenError> {
    check_size(n, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = 1i64 << 19;
    retry(|| {
        let raw: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.random_range(-half..=half), rng.random_range(-half..=half)))
            .collect();
        PointSet::build(&raw).ok()
    })
}

/// A random hypergraph: vertex count in `3..=nu_cap`, one to eight
/// hyperedges, each a uniformly sampled vertex subset of size at least two.
///
/// # Panics
///
/// When `nu_cap` is below 3.
pub fn random_hypergraph(nu_cap: usize, seed: u64) -> Hypergraph {
    assert!(nu_cap >= 3, "need room for at least three vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nu = rng.random_range(3..=nu_cap);
    let edges = (0..rng.random_range(1..=8usize))
        .map(|_| {
            let size = rng.random_range(2..=nu);
            rand::seq::index::sample(&mut rng, nu, size).into_iter().collect()
        })
        .collect();
    Hypergraph::new(nu, edges).expect("sampled hyperedges are in range with two or more vertices")
}

/// A random connected simple graph: a path backbone plus a fair coin flip
/// for every remaining pair.
pub fn random_connected_graph(n: usize, seed: u64) -> Result<GraphSpec, GenError> {
    if n < 3 {
        return Err(GenError::TooFew { needed: 3, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    for a in 0..n {
        for b in a + 2..n {
            if rng.random_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    Ok(GraphSpec::new(n, edges).expect("all endpoints lie below n"))
}

/// A shuffled surjective colouring of `domain` items with colours `1..=k`,
/// drawn from the seeded ChaCha stream.  One item of each colour is planted
/// before shuffling, so surjectivity holds by construction.
///
/// # Panics
///
/// When `k` is zero or exceeds `domain`.
pub fn random_surjective_colouring(domain: usize, k: usize, seed: u64) -> Colouring {
    assert!(
        (1..=domain).contains(&k),
        "need 1 <= k <= domain for a surjective colouring"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colours: Vec<u32> = (0..domain)
        .map(|i| {
            if i < k {
                i as u32 + 1
            } else {
                rng.random_range(1..=k as u32)
            }
        })
        .collect();
    colours.shuffle(&mut rng);
    Colouring::new(colours).expect("planting one item per colour makes the assignment surjective")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convex_instances_are_convex_and_deterministic() {
        for seed in 0..10 {
            let ps = random_convex(6, seed).unwrap();
            assert_eq!(ps.len(), 6);
            assert_eq!(ps.interior_count(), 0);
            let again = random_convex(6, seed).unwrap();
            assert_eq!(ps.points(), again.points());
        }
    }

    #[test]
    fn one_interior_instances_have_one_interior_point() {
        for seed in 0..10 {
            let ps = random_one_interior(6, seed).unwrap();
            assert_eq!(ps.len(), 6);
            assert_eq!(ps.interior_count(), 1);
        }
    }

    #[test]
    fn general_instances_validate() {
        for seed in 0..10 {
            let ps = random_general(7, seed).unwrap();
            assert_eq!(ps.len(), 7);
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = random_convex(5, 1).unwrap();
        let b = random_convex(5, 2).unwrap();
        assert_ne!(a.points(), b.points());
    }

    #[test]
    fn hypergraph_and_graph_generators_are_deterministic() {
        for seed in 0..10 {
            let h = random_hypergraph(8, seed);
            assert!(h.vertex_count() <= 8);
            assert_eq!(h, random_hypergraph(8, seed));
            let g = random_connected_graph(5, seed).unwrap();
            assert_eq!(g.component_count(|_| true), 1);
            assert_eq!(g.is_simple(), None);
            assert_eq!(g, random_connected_graph(5, seed).unwrap());
        }
    }

    #[test]
    fn surjective_colourings_are_surjective_and_deterministic() {
        for seed in 0..20 {
            let c = random_surjective_colouring(10, 4, seed);
            assert_eq!(c.domain_size(), 10);
            assert_eq!(c.colour_count(), 4);
            assert_eq!(c.assignment(), random_surjective_colouring(10, 4, seed).assignment());
        }
        assert_ne!(
            random_surjective_colouring(10, 4, 1).assignment(),
            random_surjective_colouring(10, 4, 2).assignment()
        );
    }

    #[test]
    fn size_limits_are_enforced() {
        assert_eq!(random_convex(2, 0).unwrap_err(), GenError::TooFew { needed: 3, got: 2 });
        assert_eq!(
            random_one_interior(3, 0).unwrap_err(),
            GenError::TooFew { needed: 4, got: 3 }
        );
        assert_eq!(random_general(17, 0).unwrap_err(), GenError::TooMany(17));
    }
}
