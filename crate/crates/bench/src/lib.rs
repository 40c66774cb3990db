//! Graph families shared by the benchmarks.

use curvecount::Multigraph;

/// Two vertices joined by `k` parallel edges.
pub fn banana(k: usize) -> Multigraph {
    Multigraph::from_index_edges(2, &vec![(0, 1); k])
}

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Multigraph::from_index_edges(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(banana(4).first_betti(), 3);
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(complete(4).first_betti(), 3);
    }
}
