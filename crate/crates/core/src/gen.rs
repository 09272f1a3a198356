//! Seeded random instance generators: high-girth graphs for the greedy
//! extractor and mixed-density (optionally monogamous) trigraphs for
//! oracle testing. Identical seeds give identical outputs.

use crate::error::{Error, Result};
use crate::trigraph::{Trigraph, VertexId, STRONG_EDGE, SWITCHABLE};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pair-value densities for random trigraphs; must sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TernaryDensities {
    pub plus: f64,
    pub zero: f64,
    pub minus: f64,
}

impl TernaryDensities {
    pub fn graph(plus: f64) -> Self {
        TernaryDensities {
            plus,
            zero: 0.0,
            minus: 1.0 - plus,
        }
    }

    fn validate(&self) -> Result<()> {
        let sum = self.plus + self.zero + self.minus;
        if self.plus < 0.0 || self.zero < 0.0 || self.minus < 0.0 || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::usage("densities must be non-negative and sum to 1"));
        }
        Ok(())
    }
}

/// Random graph with girth at least `target_girth`: edges are proposed
/// uniformly at random and accepted only when the current distance
/// between the endpoints is at least `target_girth - 1`, so no accepted
/// edge can close a shorter cycle.
pub fn gen_high_girth(n: usize, target_girth: usize, seed: u64) -> Result<Trigraph> {
    if target_girth < 4 {
        return Err(Error::usage("target girth must be at least 4"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Trigraph::new(n);
    if n < 2 {
        return Ok(g);
    }
    let proposals = 4 * n * n;
    for _ in 0..proposals {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.strongly_adjacent(u, v) {
            continue;
        }
        if bfs_distance(&g, u, v) >= target_girth - 1 {
            g.set_theta(u, v, STRONG_EDGE);
        }
    }
    Ok(g)
}

/// Distance in the strong-edge graph; `usize::MAX` when disconnected.
fn bfs_distance(g: &Trigraph, from: VertexId, to: VertexId) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            return dist[u];
        }
        for v in g.strong_neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    usize::MAX
}

/// Random trigraph with the given pair-value densities. With `monogamous`
/// set, switchable pairs are drawn as a random partial matching (so each
/// vertex sits in at most one) and the remaining pairs split between
/// strong edges and antiedges in proportion.
pub fn gen_random_trigraph(
    n: usize,
    densities: TernaryDensities,
    monogamous: bool,
    seed: u64,
) -> Result<Trigraph> {
    densities.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Trigraph::new(n);
    if monogamous {
        let mut perm: Vec<VertexId> = (0..n).collect();
        perm.shuffle(&mut rng);
        // Scale the per-candidate probability so the expected number of
        // switchable pairs tracks zero * C(n, 2), capped by the matching.
        let p_zero = if n >= 2 {
            (densities.zero * (n - 1) as f64).min(1.0)
        } else {
            0.0
        };
        for pair in perm.chunks_exact(2) {
            if rng.gen_bool(p_zero) {
                t.set_theta(pair[0], pair[1], SWITCHABLE);
            }
        }
        let p_plus = if densities.plus + densities.minus > 0.0 {
            densities.plus / (densities.plus + densities.minus)
        } else {
            0.0
        };
        for u in 0..n {
            for v in u + 1..n {
                if t.semiadjacent(u, v) {
                    continue;
                }
                if rng.gen_bool(p_plus) {
                    t.set_theta(u, v, STRONG_EDGE);
                }
            }
        }
    } else {
        for u in 0..n {
            for v in u + 1..n {
                let roll: f64 = rng.gen();
                if roll < densities.plus {
                    t.set_theta(u, v, STRONG_EDGE);
                } else if roll < densities.plus + densities.zero {
                    t.set_theta(u, v, SWITCHABLE);
                }
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::girth;

    #[test]
    fn high_girth_outputs_respect_the_target() {
        for seed in 0..10 {
            for target in [4, 6, 8] {
                let g = gen_high_girth(24, target, seed).unwrap();
                if let Some(girth) = girth(&g).unwrap() {
                    assert!(girth >= target, "girth {girth} < {target} at seed {seed}");
                }
            }
        }
    }

    #[test]
    fn target_girth_four_means_triangle_free() {
        let g = gen_high_girth(20, 4, 7).unwrap();
        assert!(crate::pattern::is_triangle_free(&g));
        assert!(gen_high_girth(20, 3, 7).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(
            gen_high_girth(16, 6, 42).unwrap(),
            gen_high_girth(16, 6, 42).unwrap()
        );
        let d = TernaryDensities {
            plus: 0.4,
            zero: 0.1,
            minus: 0.5,
        };
        assert_eq!(
            gen_random_trigraph(9, d, true, 42).unwrap(),
            gen_random_trigraph(9, d, true, 42).unwrap()
        );
        assert_ne!(
            gen_random_trigraph(9, d, true, 42).unwrap(),
            gen_random_trigraph(9, d, true, 43).unwrap()
        );
    }

    #[test]
    fn zero_density_zero_gives_a_graph() {
        let t = gen_random_trigraph(10, TernaryDensities::graph(0.5), false, 1).unwrap();
        assert!(t.is_graph());
    }

    #[test]
    fn monogamous_flag_holds() {
        let d = TernaryDensities {
            plus: 0.3,
            zero: 0.3,
            minus: 0.4,
        };
        for seed in 0..20 {
            assert!(gen_random_trigraph(11, d, true, seed).unwrap().is_monogamous());
        }
    }

    #[test]
    fn densities_must_sum_to_one() {
        let d = TernaryDensities {
            plus: 0.5,
            zero: 0.5,
            minus: 0.5,
        };
        assert!(gen_random_trigraph(5, d, false, 0).is_err());
    }
}
