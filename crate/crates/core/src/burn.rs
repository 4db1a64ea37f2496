//! Dhar's burning process on an adjacency list.

use std::collections::VecDeque;

/// Lights a fire at `q` and lets it spread. `adj[u]` holds one entry per
/// edge end, so parallel edges repeat. A vertex catches fire once the number
/// of burnt edges reaching it exceeds its chip count. Returns the burnt flag
/// of every vertex.
pub fn dhar_burn(adj: &[Vec<usize>], chips: &[i64], q: usize) -> Vec<bool> {
    let n = adj.len();
    let mut burnt = vec![false; n];
    let mut hits = vec![0i64; n];
    let mut queue = VecDeque::with_capacity(n);
    burnt[q] = true;
    queue.push_back(q);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if burnt[w] {
                continue;
            }
            hits[w] += 1;
            if hits[w] > chips[w] {
                burnt[w] = true;
                queue.push_back(w);
            }
        }
    }
    burnt
}
