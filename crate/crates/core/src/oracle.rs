//! Brute-force references for small graphs. The planarity check here is
//! independent of the edge-addition engine, which makes it usable for
//! differential testing.

use crate::graph::{EdgeSet, Graph, VertexId};
use crate::planarity::is_planar_subset;

/// Planarity by Kuratowski's theorem: searches every choice of branch
/// vertices for internally disjoint paths realizing K5 or K3,3.
/// Exponential; meant for `n <= 10`.
pub fn is_planar_by_subdivision_search(g: &Graph) -> bool {
    !contains_kuratowski_subdivision(g)
}

pub fn contains_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 64, "oracle works on bitmask adjacency");
    let mut adj = vec![0u64; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let rich4: Vec<usize> = (0..n).filter(|&v| deg[v] >= 4).collect();
    let rich3: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();

    let mut found = false;
    for_each_subset(&rich4, 5, &mut |branch| {
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((branch[i], branch[j]));
            }
        }
        found = found || routes_exist(&adj, mask_of(branch), &pairs);
    });
    if found {
        return true;
    }
    for_each_subset(&rich3, 6, &mut |six| {
        if found {
            return;
        }
        // six[0] on side A, pick two more of the remaining five
        for a in 1..6 {
            for b in a + 1..6 {
                let side_a = [six[0], six[a], six[b]];
                let side_b: Vec<usize> = (1..6).filter(|&i| i != a && i != b).map(|i| six[i]).collect();
                let pairs: Vec<_> = side_a
                    .iter()
                    .flat_map(|&x| side_b.iter().map(move |&y| (x, y)))
                    .collect();
                if routes_exist(&adj, mask_of(six), &pairs) {
                    found = true;
                    return;
                }
            }
        }
    });
    found
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), f);
}

/// Internally vertex-disjoint paths for every pair, avoiding branch
/// vertices in their interiors.
fn routes_exist(adj: &[u64], branch: u64, pairs: &[(usize, usize)]) -> bool {
    fn route(adj: &[u64], blocked: u64, pairs: &[(usize, usize)], i: usize) -> bool {
        if i == pairs.len() {
            return true;
        }
        let (a, b) = pairs[i];
        extend(adj, blocked, pairs, i, a, b, a, 0)
    }
    #[allow(clippy::too_many_arguments)]
    fn extend(
        adj: &[u64],
        blocked: u64,
        pairs: &[(usize, usize)],
        i: usize,
        a: usize,
        b: usize,
        cur: usize,
        interior: u64,
    ) -> bool {
        if adj[cur] >> b & 1 == 1 && route(adj, blocked | interior, pairs, i + 1) {
            return true;
        }
        let mut next = adj[cur] & !blocked & !interior & !(1 << a);
        while next != 0 {
            let x = next.trailing_zeros() as usize;
            next &= next - 1;
            if extend(adj, blocked, pairs, i, a, b, x, interior | 1 << x) {
                return true;
            }
        }
        false
    }
    // direct pairs first for early failure
    let mut ordered = pairs.to_vec();
    ordered.sort_by_key(|&(a, b)| adj[a] >> b & 1 == 0);
    route(adj, branch, &ordered, 0)
}

/// Smallest number of edges whose removal leaves a planar graph, by
/// enumerating removal sets in increasing size.
pub fn skewness_by_enumeration(g: &Graph) -> usize {
    let m = g.edge_count();
    for k in 0..=m {
        let mut hit = false;
        let ids: Vec<usize> = (0..m).collect();
        for_each_subset(&ids, k, &mut |removed| {
            if hit {
                return;
            }
            let mut keep = g.edge_set();
            for &e in removed {
                keep.remove(e);
            }
            hit = is_planar_subset(g, &keep);
        });
        if hit {
            return k;
        }
    }
    unreachable!("the empty graph is planar")
}

/// Checks that `edges` is a subdivision of K5 or K3,3 by smoothing every
/// degree-2 vertex and comparing the branch graph.
pub fn is_kuratowski_subdivision(g: &Graph, edges: &EdgeSet) -> bool {
    let n = g.vertex_count();
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        inc[u].push(e);
        inc[v].push(e);
    }
    let branch: Vec<VertexId> = (0..n).filter(|&v| inc[v].len() >= 3).collect();
    if inc.iter().any(|l| l.len() == 1 || l.len() > 4) {
        return false;
    }
    let is_branch = |v: usize| inc[v].len() >= 3;
    let mut used = vec![false; g.edge_count()];
    let mut links: Vec<(usize, usize)> = Vec::new();
    for &b in &branch {
        for &start in &inc[b] {
            if used[start] {
                continue;
            }
            let mut prev = b;
            let mut e = start;
            loop {
                used[e] = true;
                let (x, y) = g.endpoints(e);
                let cur = if x == prev { y } else { x };
                if is_branch(cur) {
                    if cur == b {
                        return false;
                    }
                    links.push((b.min(cur), b.max(cur)));
                    break;
                }
                let next = inc[cur].iter().copied().find(|&f| f != e).unwrap();
                prev = cur;
                e = next;
            }
        }
    }
    if edges.iter().any(|e| !used[e]) {
        return false;
    }
    links.sort_unstable();
    let distinct = links.windows(2).all(|w| w[0] != w[1]);
    match branch.len() {
        5 => distinct && links.len() == 10,
        6 => {
            if !distinct || links.len() != 9 {
                return false;
            }
            // bipartite with parts of size three
            let mut color = vec![usize::MAX; n];
            color[branch[0]] = 0;
            let mut changed = true;
            while changed {
                changed = false;
                for &(a, b) in &links {
                    for (x, y) in [(a, b), (b, a)] {
                        if color[x] != usize::MAX && color[y] == usize::MAX {
                            color[y] = 1 - color[x];
                            changed = true;
                        }
                    }
                }
            }
            links.iter().all(|&(a, b)| color[a] != color[b])
                && branch.iter().filter(|&&v| color[v] == 0).count() == 3
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert!(is_planar_by_subdivision_search(&Graph::complete(4)));
        assert!(!is_planar_by_subdivision_search(&Graph::complete(5)));
        assert!(!is_planar_by_subdivision_search(&Graph::complete_bipartite(3, 3)));
        assert!(!is_planar_by_subdivision_search(&Graph::petersen()));
        assert!(is_planar_by_subdivision_search(&Graph::cycle(8)));
    }

    #[test]
    fn structural_check_accepts_k5_and_k33() {
        let k5 = Graph::complete(5);
        assert!(is_kuratowski_subdivision(&k5, &k5.edge_set()));
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(is_kuratowski_subdivision(&k33, &k33.edge_set()));
        let k6 = Graph::complete(6);
        assert!(!is_kuratowski_subdivision(&k6, &k6.edge_set()));
    }
}
