//! Shared instance supply for the acceptance suite: seeded generators for
//! mixed-density monogamous trigraphs, instances with planted proper
//! homogeneous pairs, bull-free solver inputs, and valid clique-plus-
//! triangle-free structures.

use bullfree::gen::{gen_random_trigraph, TernaryDensities};
use bullfree::pattern::find_bull;
use bullfree::t1::{T1Clique, T1Structure};
use bullfree::trigraph::{Trigraph, VertexId, STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Mixed-density grid covering sparse through dense, with and without
/// switchable pairs.
pub fn density_grid(i: u64) -> TernaryDensities {
    let plus = [0.15, 0.3, 0.5, 0.7, 0.85][(i % 5) as usize];
    let zero = [0.0, 0.06, 0.14][((i / 5) % 3) as usize];
    TernaryDensities {
        plus,
        zero,
        minus: 1.0 - plus - zero,
    }
}

pub fn random_monogamous(seed: u64, n: usize) -> Trigraph {
    gen_random_trigraph(n, density_grid(seed), true, seed).unwrap()
}

/// A random monogamous trigraph on 6 to 8 vertices containing a planted
/// proper homogeneous pair, with labels shuffled.
pub fn planted_proper_pair_instance(seed: u64) -> Trigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x70a1_7ed0);
    let a_len = rng.gen_range(1..=3usize);
    let b_len = rng.gen_range(if a_len == 1 { 2 } else { 1 }..=3usize.min(5 - a_len));
    let side = a_len + b_len;
    let n = rng.gen_range((side + 3).max(6)..=8);
    let outside = n - side;
    let c_len = rng.gen_range(1..=outside - 1);
    let d_len = rng.gen_range(1..=outside - c_len);
    let e_len = if outside > c_len + d_len {
        rng.gen_range(0..=outside - c_len - d_len)
    } else {
        0
    };

    // Block layout: A, B, C, D, E, F.
    let a: Vec<VertexId> = (0..a_len).collect();
    let b: Vec<VertexId> = (a_len..side).collect();
    let c: Vec<VertexId> = (side..side + c_len).collect();
    let d: Vec<VertexId> = (side + c_len..side + c_len + d_len).collect();
    let e: Vec<VertexId> = (side + c_len + d_len..side + c_len + d_len + e_len).collect();
    let f: Vec<VertexId> = (side + c_len + d_len + e_len..n).collect();

    let mut t = Trigraph::new(n);
    let set_many = |t: &mut Trigraph, xs: &[VertexId], ys: &[VertexId], v: i8| {
        for &x in xs {
            for &y in ys {
                t.set_theta(x, y, v);
            }
        }
    };
    set_many(&mut t, &a, &c, STRONG_EDGE);
    set_many(&mut t, &a, &e, STRONG_EDGE);
    set_many(&mut t, &a, &d, STRONG_ANTIEDGE);
    set_many(&mut t, &a, &f, STRONG_ANTIEDGE);
    set_many(&mut t, &b, &d, STRONG_EDGE);
    set_many(&mut t, &b, &e, STRONG_EDGE);
    set_many(&mut t, &b, &c, STRONG_ANTIEDGE);
    set_many(&mut t, &b, &f, STRONG_ANTIEDGE);

    // Free internals: within A, within B, across A-B, and all of CDEF.
    let mut free_pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for group in [&a, &b] {
        for (i, &x) in group.iter().enumerate() {
            for &y in &group[i + 1..] {
                free_pairs.push((x, y));
            }
        }
    }
    for &x in &a {
        for &y in &b {
            free_pairs.push((x, y));
        }
    }
    let outside_all: Vec<VertexId> = (side..n).collect();
    for (i, &x) in outside_all.iter().enumerate() {
        for &y in &outside_all[i + 1..] {
            free_pairs.push((x, y));
        }
    }
    for &(x, y) in &free_pairs {
        let v = if rng.gen_bool(0.5) {
            STRONG_EDGE
        } else {
            STRONG_ANTIEDGE
        };
        t.set_theta(x, y, v);
    }
    // One optional switchable pair keeps the instance monogamous.
    if rng.gen_bool(0.3) {
        let &(x, y) = free_pairs.choose(&mut rng).unwrap();
        t.set_theta(x, y, SWITCHABLE);
    }
    // The pair condition: A neither strongly complete nor strongly
    // anticomplete to B. Force it if the random fill came out uniform.
    let cross: Vec<(VertexId, VertexId)> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect();
    if cross.iter().all(|&(x, y)| t.theta(x, y) == STRONG_EDGE) {
        t.set_theta(cross[0].0, cross[0].1, STRONG_ANTIEDGE);
    } else if cross.iter().all(|&(x, y)| t.theta(x, y) == STRONG_ANTIEDGE) {
        t.set_theta(cross[0].0, cross[0].1, STRONG_EDGE);
    }

    shuffle_labels(&t, &mut rng)
}

fn shuffle_labels(t: &Trigraph, rng: &mut ChaCha8Rng) -> Trigraph {
    let n = t.n();
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(rng);
    let mut out = Trigraph::new(n);
    for u in 0..n {
        out.set_weight(perm[u], t.weight(u));
        for v in u + 1..n {
            out.set_theta(perm[u], perm[v], t.theta(u, v));
        }
    }
    out
}

/// Rejection-sampled bull-free monogamous trigraph on up to `max_n`
/// vertices; alternates direct sampling with homogeneous-module blowups
/// so the solver's contraction path gets exercised.
pub fn bull_free_monogamous(seed: u64, max_n: usize) -> Option<Trigraph> {
    if seed.is_multiple_of(3) {
        module_blowup(seed, max_n)
    } else {
        let n = 4 + (seed % (max_n as u64 - 3)) as usize;
        let t = random_monogamous(seed, n);
        find_bull(&t).is_none().then_some(t)
    }
}

/// Takes a small bull-free base graph and substitutes a module of 2 or 3
/// vertices for one of its vertices: the module members all inherit the
/// replaced vertex's outside attachments, forming a homogeneous set.
fn module_blowup(seed: u64, max_n: usize) -> Option<Trigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb10b_0b1e);
    let base_n = rng.gen_range(4..=(max_n - 2).min(8));
    let base = gen_random_trigraph(
        base_n,
        TernaryDensities::graph([0.2, 0.35, 0.5][(seed % 3) as usize]),
        true,
        seed,
    )
    .unwrap();
    if find_bull(&base).is_some() {
        return None;
    }
    let hub = rng.gen_range(0..base_n);
    let module_size = rng.gen_range(2..=(max_n - base_n + 1).min(3));
    let n = base_n - 1 + module_size;
    // Ids: base vertices except `hub` keep order, module appended.
    let keep: Vec<VertexId> = (0..base_n).filter(|&v| v != hub).collect();
    let mut t = Trigraph::new(n);
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            t.set_theta(i, j, base.theta(u, v));
        }
    }
    for m in 0..module_size {
        let mid = keep.len() + m;
        for (i, &u) in keep.iter().enumerate() {
            t.set_theta(i, mid, base.theta(u, hub));
        }
    }
    for m1 in 0..module_size {
        for m2 in m1 + 1..module_size {
            let v = if rng.gen_bool(0.5) {
                STRONG_EDGE
            } else {
                STRONG_ANTIEDGE
            };
            t.set_theta(keep.len() + m1, keep.len() + m2, v);
        }
    }
    (t.is_monogamous() && find_bull(&t).is_none()).then_some(t)
}

/// Random host and valid structure: a bipartite (hence triangle-free)
/// attachment part plus strong cliques whose neighborhoods split into the
/// two parts with prefix-shaped and suffix-shaped traces. Every structure
/// invariant holds by construction.
pub fn random_t1_instance(seed: u64) -> (Trigraph, T1Structure) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7157_0000);
    let x_n = rng.gen_range(3..=6usize);
    let split = rng.gen_range(1..x_n);
    let clique_sizes: Vec<usize> = (0..rng.gen_range(1..=3usize))
        .map(|_| rng.gen_range(1..=3usize))
        .collect();
    let n = x_n + clique_sizes.iter().sum::<usize>();

    let mut t = Trigraph::new(n);
    // X sits on ids 0..x_n, bipartitioned at `split`; edges only across.
    for u in 0..split {
        for v in split..x_n {
            if rng.gen_bool(0.5) {
                t.set_theta(u, v, STRONG_EDGE);
            }
        }
    }
    let mut budget = vec![0u8; x_n];
    let mut next = x_n;
    let mut cliques = Vec::new();
    for &r in &clique_sizes {
        let vertices: Vec<VertexId> = (next..next + r).collect();
        next += r;
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                t.set_theta(u, v, STRONG_EDGE);
            }
        }
        let mut side_a = Vec::new();
        let mut side_b = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for x in 0..split {
            if budget[x] < 2 && rng.gen_bool(0.5) {
                // Prefix attachment: adjacent to v_1 ..= v_cut.
                let cut = rng.gen_range(1..=r);
                for &v in &vertices[..cut] {
                    t.set_theta(x, v, STRONG_EDGE);
                }
                side_a.push(x);
                budget[x] += 1;
            }
        }
        #[allow(clippy::needless_range_loop)]
        for x in split..x_n {
            if budget[x] < 2 && rng.gen_bool(0.5) {
                // Suffix attachment: adjacent to v_cut ..= v_r.
                let cut = rng.gen_range(0..r);
                for &v in &vertices[cut..] {
                    t.set_theta(x, v, STRONG_EDGE);
                }
                side_b.push(x);
                budget[x] += 1;
            }
        }
        cliques.push(T1Clique {
            vertices,
            side_a,
            side_b,
        });
    }
    let structure = T1Structure {
        x: (0..x_n).collect(),
        cliques,
    };
    (t, structure)
}
