//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).
//! The instances here are tiny, so the simple O(V·E) routine is plenty.

/// `adj[l]` lists the right-side vertices available to left vertex `l`.
/// Returns the partner of each left vertex, `None` where unmatched. Left
/// vertices are processed in index order and candidates in list order, so
/// the result is deterministic.
pub fn max_bipartite_matching(left: usize, right: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    assert_eq!(adj.len(), left);
    let mut right_to_left: Vec<Option<usize>> = vec![None; right];

    fn try_augment(
        l: usize,
        adj: &[Vec<usize>],
        right_to_left: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &r in &adj[l] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let take = match right_to_left[r] {
                None => true,
                Some(other) => try_augment(other, adj, right_to_left, visited),
            };
            if take {
                right_to_left[r] = Some(l);
                return true;
            }
        }
        false
    }

    for l in 0..left {
        let mut visited = vec![false; right];
        try_augment(l, adj, &mut right_to_left, &mut visited);
    }

    let mut left_to_right = vec![None; left];
    for (r, owner) in right_to_left.iter().enumerate() {
        if let Some(l) = owner {
            left_to_right[*l] = Some(r);
        }
    }
    left_to_right
}
