//! Hopcroft–Karp maximum bipartite matching.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// Maximum matching of the bipartite graph whose left vertex `i` is adjacent
/// to the right vertices `adj[i]`. Returns, for each left vertex, its partner.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let n_left = adj.len();
    let mut left_to_right = vec![NIL; n_left];
    let mut right_to_left = vec![NIL; n_right];
    let mut dist = vec![0usize; n_left];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for i in 0..n_left {
            if left_to_right[i] == NIL {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = NIL;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                let k = right_to_left[j];
                if k == NIL {
                    found = true;
                } else if dist[k] == NIL {
                    dist[k] = dist[i] + 1;
                    queue.push_back(k);
                }
            }
        }
        if !found {
            break;
        }
        let mut progressed = false;
        for i in 0..n_left {
            if left_to_right[i] == NIL
                && augment(i, adj, &mut left_to_right, &mut right_to_left, &mut dist)
            {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    left_to_right
        .into_iter()
        .map(|j| (j != NIL).then_some(j))
        .collect()
}

fn augment(
    i: usize,
    adj: &[Vec<usize>],
    left_to_right: &mut [usize],
    right_to_left: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &j in &adj[i] {
        let k = right_to_left[j];
        if k == NIL || (dist[k] == dist[i] + 1 && augment(k, adj, left_to_right, right_to_left, dist))
        {
            left_to_right[i] = j;
            right_to_left[j] = i;
            return true;
        }
    }
    dist[i] = NIL;
    false
}
