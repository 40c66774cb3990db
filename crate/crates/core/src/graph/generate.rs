//! Seeded random generators and exhaustive isomorphism-free enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Hypergraph, Multigraph};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of random multigraphs.
#[derive(Clone, Copy, Debug)]
pub struct RandomGraphParams {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Probability that a vertex pair is joined (before multiplicities).
    pub edge_prob: f64,
    /// Probability that a vertex carries a loop.
    pub loop_prob: f64,
    /// Probability of adding one more parallel copy of an edge.
    pub multi_prob: f64,
    pub connected: bool,
}

impl Default for RandomGraphParams {
    fn default() -> Self {
        Self {
            max_vertices: 5,
            max_edges: 10,
            edge_prob: 0.5,
            loop_prob: 0.15,
            multi_prob: 0.3,
            connected: false,
        }
    }
}

impl RandomGraphParams {
    pub fn connected(max_edges: usize) -> Self {
        Self {
            max_edges,
            max_vertices: (max_edges + 1).min(6),
            connected: true,
            ..Self::default()
        }
    }
}

/// Erdős–Rényi-style multigraph with loops and parallel edges, truncated to
/// `max_edges`. With `connected` set, a random spanning tree is laid down
/// first so truncation never disconnects.
pub fn random_multigraph<R: Rng>(rng: &mut R, p: &RandomGraphParams) -> Multigraph {
    let upper = if p.connected {
        p.max_vertices.min(p.max_edges + 1)
    } else {
        p.max_vertices
    };
    let n = rng.random_range(1..=upper.max(1));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if p.connected {
        for v in 1..n {
            pairs.push((rng.random_range(0..v), v));
        }
    }
    let mut extra = Vec::new();
    for a in 0..n {
        if rng.random_bool(p.loop_prob) {
            extra.push((a, a));
        }
        for b in a + 1..n {
            if rng.random_bool(p.edge_prob) {
                extra.push((a, b));
                while rng.random_bool(p.multi_prob) {
                    extra.push((a, b));
                }
            }
        }
    }
    // Shuffle so truncation is not biased towards low vertices.
    extra.shuffle(rng);
    pairs.extend(extra);
    pairs.truncate(p.max_edges.max(if p.connected { n - 1 } else { 0 }));
    Multigraph::from_index_edges(n, &pairs)
}

pub fn random_connected<R: Rng>(rng: &mut R, max_edges: usize) -> Multigraph {
    random_multigraph(rng, &RandomGraphParams::connected(max_edges))
}

/// Random hypergraph on at most `max_vertices` vertices whose hyperedges have
/// between 1 and 4 members (with repetition). A connected one first gets a
/// hyperedge joining each vertex to an earlier one.
pub fn random_hypergraph<R: Rng>(rng: &mut R, max_vertices: usize, connected: bool) -> Hypergraph {
    let n = rng.random_range(1..=max_vertices.max(1));
    let mut edges: Vec<Vec<usize>> = Vec::new();
    if connected {
        for v in 1..n {
            let mut e = vec![rng.random_range(0..v), v];
            for _ in 0..rng.random_range(0..=2usize) {
                e.push(rng.random_range(0..=v));
            }
            edges.push(e);
        }
    }
    for _ in 0..rng.random_range(0..=3usize) {
        let size = rng.random_range(1..=4usize);
        edges.push((0..size).map(|_| rng.random_range(0..n)).collect());
    }
    Hypergraph::from_indices(n, edges)
}

/// Random general polarization: entries with a common prime denominator and
/// an integral total, resampled until generality holds.
pub fn random_general_polarization<R: Rng>(rng: &mut R, g: &Multigraph) -> Vec<BigRational> {
    const PRIMES: [i64; 5] = [7, 11, 13, 17, 101];
    let n = g.vertex_count();
    loop {
        let d = PRIMES[rng.random_range(0..PRIMES.len())];
        let total = rng.random_range(-3..=3i64) * d;
        let mut nums: Vec<i64> = (0..n.saturating_sub(1)).map(|_| rng.random_range(-3 * d..=3 * d)).collect();
        if n > 0 {
            nums.push(total - nums.iter().sum::<i64>());
        }
        let m: Vec<BigRational> = nums
            .into_iter()
            .map(|a| BigRational::new(BigInt::from(a), BigInt::from(d)))
            .collect();
        if crate::invariants::is_general_polarization(g, &m).unwrap_or(false) {
            return m;
        }
    }
}

/// Canonical form: vertices sorted by (loops, degree), then the smallest
/// sorted edge list over relabelings that respect that order.
fn canonical(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut key = vec![(0usize, 0usize); n];
    for &(a, b) in pairs {
        if a == b {
            key[a].0 += 1;
        }
        key[a].1 += 1;
        key[b].1 += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key[v]);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if key[c[0]] == key[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![0usize; n];
    fn permute(
        classes: &mut [Vec<usize>],
        ci: usize,
        k: usize,
        offset: usize,
        label: &mut [usize],
        pairs: &[(usize, usize)],
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if ci == classes.len() {
            let mut edges: Vec<(usize, usize)> = pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (label[a], label[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                *best = Some(edges);
            }
            return;
        }
        let len = classes[ci].len();
        if k == len {
            permute(classes, ci + 1, 0, offset + len, label, pairs, best);
            return;
        }
        for j in k..len {
            classes[ci].swap(k, j);
            label[classes[ci][k]] = offset + k;
            permute(classes, ci, k + 1, offset, label, pairs, best);
            classes[ci].swap(k, j);
        }
    }
    permute(&mut classes, 0, 0, 0, &mut label, pairs, &mut best);
    best.unwrap_or_default()
}

type EdgeList = Vec<(usize, usize)>;

/// Every connected multigraph (loops and parallel edges allowed, genus 0)
/// with at most `max_edges` edges and `max_vertices` vertices, one per
/// isomorphism class, ordered by edge count, then vertex count, then
/// canonical edge list.
pub fn connected_multigraphs(max_edges: usize, max_vertices: usize) -> Vec<Multigraph> {
    if max_vertices == 0 {
        return Vec::new();
    }
    // Each class with m edges arises from one with m - 1 edges by adding an
    // edge among existing vertices (if some edge is not a bridge) or a
    // pendant edge (if all are bridges).
    let mut layer: BTreeSet<(usize, EdgeList)> = BTreeSet::new();
    layer.insert((1, Vec::new()));
    let mut out: Vec<(usize, usize, EdgeList)> = vec![(0, 1, Vec::new())];
    for m in 1..=max_edges {
        let mut next = BTreeSet::new();
        for (n, pairs) in &layer {
            for a in 0..*n {
                for b in a..*n {
                    let mut p = pairs.clone();
                    p.push((a, b));
                    next.insert((*n, canonical(*n, &p)));
                }
                if *n < max_vertices {
                    let mut p = pairs.clone();
                    p.push((a, *n));
                    next.insert((n + 1, canonical(n + 1, &p)));
                }
            }
        }
        out.extend(next.iter().map(|(n, p)| (m, *n, p.clone())));
        layer = next;
    }
    out.into_iter()
        .map(|(_, n, pairs)| Multigraph::from_index_edges(n, &pairs))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force class count: all edge multisets on `n` labeled vertices,
    /// canonicalized over every permutation.
    fn brute_force_count(m: usize, max_vertices: usize) -> usize {
        let mut classes = BTreeSet::new();
        for n in 1..=max_vertices {
            let slots: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
            let mut choice = vec![0usize; m];
            loop {
                if choice.windows(2).all(|w| w[0] <= w[1]) {
                    let pairs: Vec<(usize, usize)> = choice.iter().map(|&i| slots[i]).collect();
                    let g = Multigraph::from_index_edges(n, &pairs);
                    if g.is_connected() {
                        classes.insert((n, full_canonical(n, &pairs)));
                    }
                }
                let mut i = 0;
                while i < m && choice[i] + 1 == slots.len() {
                    choice[i] = 0;
                    i += 1;
                }
                if i == m {
                    break;
                }
                choice[i] += 1;
            }
        }
        classes.len()
    }

    fn full_canonical(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        fn heap(k: usize, perm: &mut Vec<usize>, pairs: &[(usize, usize)], best: &mut Option<Vec<(usize, usize)>>) {
            if k <= 1 {
                let mut e: Vec<(usize, usize)> = pairs
                    .iter()
                    .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
                    .collect();
                e.sort_unstable();
                if best.as_ref().is_none_or(|b| e < *b) {
                    *best = Some(e);
                }
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, pairs, best);
                let j = if k.is_multiple_of(2) { i } else { 0 };
                perm.swap(j, k - 1);
            }
        }
        heap(n, &mut perm, pairs, &mut best);
        best.unwrap()
    }

    #[test]
    fn small_class_counts() {
        let all = connected_multigraphs(3, 4);
        let by_edges = |m: usize| all.iter().filter(|g| g.edge_count() == m).count();
        assert_eq!(by_edges(0), 1);
        assert_eq!(by_edges(1), 2);
        assert_eq!(by_edges(2), 4);
        assert!(all.iter().all(|g| g.is_connected()));
    }

    #[test]
    fn matches_brute_force() {
        let all = connected_multigraphs(4, 5);
        for m in 0..=4 {
            let count = all.iter().filter(|g| g.edge_count() == m).count();
            assert_eq!(count, brute_force_count(m, (m + 1).min(5)), "m = {m}");
        }
    }

    #[test]
    fn vertex_bound_respected() {
        assert!(connected_multigraphs(5, 3).iter().all(|g| g.vertex_count() <= 3));
    }

    #[test]
    fn random_graphs_are_deterministic_and_bounded() {
        let p = RandomGraphParams::connected(8);
        let a: Vec<Multigraph> = {
            let mut rng = seeded_rng(3);
            (0..50).map(|_| random_multigraph(&mut rng, &p)).collect()
        };
        let mut rng = seeded_rng(3);
        for g in &a {
            assert_eq!(*g, random_multigraph(&mut rng, &p));
            assert!(g.is_connected());
            assert!(g.edge_count() <= 8);
        }
    }

    #[test]
    fn connected_hypergraphs() {
        let mut rng = seeded_rng(11);
        for _ in 0..100 {
            assert!(random_hypergraph(&mut rng, 6, true).is_connected());
        }
    }
}
