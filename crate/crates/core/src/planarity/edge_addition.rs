//! Edge-addition planarity engine.
//!
//! Vertices are renumbered by DFS discovery index and processed in reverse
//! order. Every tree edge starts out as its own biconnected component,
//! hanging from a virtual copy of the parent (the bicomp root). Processing a
//! vertex `v` first marks, for each back edge `(v, w)`, the bicomp roots on
//! the way from `w` up to `v` (walkup), then traverses the external faces of
//! the pertinent child bicomps of `v` and embeds back edges, merging
//! bicomps on the way (walkdown).
//!
//! With [`FailurePolicy::Skip`] back edges the walkdown cannot reach are left
//! out and processing continues; with [`FailurePolicy::Stop`] the first such
//! edge ends the run.
//!
//! Orientation is tracked lazily: flipping a child bicomp reverses only the
//! adjacency list of its root and toggles a sign on the tree edge. Signs are
//! propagated down the DFS tree once at the end.

use std::collections::VecDeque;

use rand::seq::SliceRandom;

use crate::rng::Rng;

const NIL: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum FailurePolicy {
    Stop,
    Skip,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct EngineOutput {
    /// Local edge indices that were not embedded.
    pub skipped: Vec<usize>,
    /// Per input vertex, incident embedded edges in cyclic order. Only
    /// present when requested and the run was not stopped early.
    pub rotation: Option<Vec<Vec<usize>>>,
}

impl EngineOutput {
    pub fn all_embedded(&self) -> bool {
        self.skipped.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    /// Vertex at the other end (real or virtual root).
    nbr: usize,
    /// `[towards front, towards back]` within the owner's adjacency list.
    link: [usize; 2],
}

struct DfsForest {
    dfi_of: Vec<usize>,
    vertex_of: Vec<usize>,
    /// In DFI space.
    parent: Vec<usize>,
    /// Edge to the parent, `NIL` for tree roots.
    parent_edge: Vec<usize>,
}

fn dfs_forest(n: usize, edges: &[(usize, usize)], order: Option<&mut Rng>) -> DfsForest {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut starts: Vec<usize> = (0..n).collect();
    if let Some(rng) = order {
        starts.shuffle(rng);
        for list in &mut adj {
            list.shuffle(rng);
        }
    }

    let mut dfi_of = vec![NIL; n];
    let mut vertex_of = Vec::with_capacity(n);
    let mut parent = vec![NIL; n];
    let mut parent_edge = vec![NIL; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &s in &starts {
        if dfi_of[s] != NIL {
            continue;
        }
        dfi_of[s] = vertex_of.len();
        vertex_of.push(s);
        stack.push((s, 0));
        while let Some(top) = stack.last_mut() {
            let (u, idx) = *top;
            if idx == adj[u].len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let (w, e) = adj[u][idx];
            if dfi_of[w] == NIL {
                let d = vertex_of.len();
                dfi_of[w] = d;
                vertex_of.push(w);
                parent[d] = dfi_of[u];
                parent_edge[d] = e;
                stack.push((w, 0));
            }
        }
    }
    DfsForest {
        dfi_of,
        vertex_of,
        parent,
        parent_edge,
    }
}

struct Engine {
    n: usize,
    parent: Vec<usize>,
    least_ancestor: Vec<usize>,
    lowpoint: Vec<usize>,
    /// Children sorted by lowpoint; merged ones are skipped lazily.
    sep_children: Vec<Vec<usize>>,
    sep_cursor: Vec<usize>,
    /// Per child `c`: its bicomp root `n + c` has been merged into the parent.
    merged: Vec<bool>,
    /// Per child `c`: sign of the tree edge into `c`.
    flipped: Vec<bool>,
    /// Per vertex (real `0..n`, virtual `n..2n`): first and last arc.
    ends: Vec<[usize; 2]>,
    arcs: Vec<Arc>,
    backedge_flag: Vec<usize>,
    pending_edge: Vec<usize>,
    visited: Vec<usize>,
    pertinent_roots: Vec<VecDeque<usize>>,
    touched: Vec<usize>,
    walk_roots: Vec<usize>,
    stack: Vec<(usize, usize)>,
}

impl Engine {
    fn ext_next(&self, x: usize, side: usize) -> (usize, usize) {
        let a = self.ends[x][side];
        let y = self.arcs[a].nbr;
        let [first, last] = self.ends[y];
        // a lone arc is entered on the side that keeps orientations aligned
        let y_in = if first == last {
            1 ^ side
        } else if first == a ^ 1 {
            0
        } else {
            1
        };
        (y, y_in)
    }

    fn insert_arc(&mut self, x: usize, side: usize, a: usize) {
        let old = self.ends[x][side];
        self.arcs[a].link[side] = NIL;
        self.arcs[a].link[1 ^ side] = old;
        if old == NIL {
            self.arcs[a].link[1 ^ side] = NIL;
            self.ends[x] = [a, a];
        } else {
            self.arcs[old].link[side] = a;
            self.ends[x][side] = a;
        }
    }

    fn reverse_list(&mut self, x: usize) {
        let mut a = self.ends[x][0];
        while a != NIL {
            let next = self.arcs[a].link[1];
            self.arcs[a].link.swap(0, 1);
            a = next;
        }
        self.ends[x].swap(0, 1);
    }

    /// Moves the adjacency list of root `r` onto side `s` of `w` so that
    /// the arc on side `s` of `r` becomes the new end of `w`.
    fn splice(&mut self, w: usize, s: usize, r: usize) {
        let mut a = self.ends[r][0];
        while a != NIL {
            self.arcs[a ^ 1].nbr = w;
            a = self.arcs[a].link[1];
        }
        if self.ends[r][0] == NIL {
            return;
        }
        let w_end = self.ends[w][s];
        if w_end == NIL {
            self.ends[w] = self.ends[r];
        } else {
            let r_near = self.ends[r][1 ^ s];
            self.arcs[w_end].link[s] = r_near;
            self.arcs[r_near].link[1 ^ s] = w_end;
            self.ends[w][s] = self.ends[r][s];
        }
        self.ends[r] = [NIL, NIL];
    }

    fn merge(&mut self, w: usize, w_in: usize, r: usize, r_out: usize) {
        let c = r - self.n;
        if w_in == r_out {
            self.reverse_list(r);
            self.flipped[c] = !self.flipped[c];
        }
        self.splice(w, w_in, r);
        self.merged[c] = true;
        let roots = &mut self.pertinent_roots[w];
        if roots.front() == Some(&r) {
            roots.pop_front();
        } else if let Some(pos) = roots.iter().position(|&x| x == r) {
            roots.remove(pos);
        }
    }

    fn pertinent(&self, w: usize, v: usize) -> bool {
        self.backedge_flag[w] == v || !self.pertinent_roots[w].is_empty()
    }

    fn externally_active(&mut self, w: usize, v: usize) -> bool {
        if self.least_ancestor[w] < v {
            return true;
        }
        let list = &self.sep_children[w];
        let mut i = self.sep_cursor[w];
        while i < list.len() && self.merged[list[i]] {
            i += 1;
        }
        self.sep_cursor[w] = i;
        i < list.len() && self.lowpoint[list[i]] < v
    }

    fn internally_active(&mut self, w: usize, v: usize) -> bool {
        self.pertinent(w, v) && !self.externally_active(w, v)
    }

    fn walkup(&mut self, v: usize, w: usize) {
        self.backedge_flag[w] = v;
        let n = self.n;
        let (mut x, mut x_in) = (w, 1);
        let (mut y, mut y_in) = (w, 0);
        while x != v {
            if self.visited[x] == v || self.visited[y] == v {
                break;
            }
            self.visited[x] = v;
            self.visited[y] = v;
            let z = if x >= n {
                x
            } else if y >= n {
                y
            } else {
                NIL
            };
            if z != NIL {
                let c = z - n;
                let p = self.parent[c];
                if p != v {
                    if self.lowpoint[c] < v {
                        self.pertinent_roots[p].push_back(z);
                    } else {
                        self.pertinent_roots[p].push_front(z);
                    }
                    self.touched.push(p);
                } else {
                    self.walk_roots.push(z);
                }
                x = p;
                x_in = 1;
                y = p;
                y_in = 0;
            } else {
                (x, x_in) = self.ext_next(x, 1 ^ x_in);
                (y, y_in) = self.ext_next(y, 1 ^ y_in);
            }
        }
    }

    /// First vertex along the external face of the bicomp rooted at `r`,
    /// leaving `r` on `side`, that is pertinent or externally active.
    fn first_active(&mut self, r: usize, side: usize, v: usize) -> (usize, usize) {
        let (mut w, mut w_in) = self.ext_next(r, side);
        while w != r && !self.pertinent(w, v) && !self.externally_active(w, v) {
            (w, w_in) = self.ext_next(w, 1 ^ w_in);
        }
        (w, w_in)
    }

    fn embed_back_edge(&mut self, root: usize, side: usize, w: usize, w_in: usize) {
        let e = self.pending_edge[w];
        let (a, b) = (2 * e, 2 * e + 1);
        self.arcs[a].nbr = w;
        self.arcs[b].nbr = root;
        self.insert_arc(root, side, a);
        self.insert_arc(w, w_in, b);
    }

    fn walkdown(&mut self, v: usize, root: usize) {
        let n = self.n;
        for d in 0..2 {
            let (mut w, mut w_in) = self.ext_next(root, d);
            self.stack.clear();
            loop {
                if w == root || w >= n {
                    break;
                }
                if self.backedge_flag[w] == v {
                    while let Some((r, r_out)) = self.stack.pop() {
                        let (x, x_in) = self.stack.pop().expect("stack holds pairs");
                        self.merge(x, x_in, r, r_out);
                    }
                    self.embed_back_edge(root, d, w, w_in);
                    self.backedge_flag[w] = NIL;
                }
                if let Some(&r) = self.pertinent_roots[w].front() {
                    self.stack.push((w, w_in));
                    let (x, x_in) = self.first_active(r, 0, v);
                    let (y, y_in) = self.first_active(r, 1, v);
                    let (next, next_in, out) = if self.internally_active(x, v) {
                        (x, x_in, 0)
                    } else if self.internally_active(y, v) {
                        (y, y_in, 1)
                    } else if self.pertinent(x, v) {
                        (x, x_in, 0)
                    } else {
                        (y, y_in, 1)
                    };
                    self.stack.push((r, out));
                    w = next;
                    w_in = next_in;
                } else if !self.externally_active(w, v) {
                    (w, w_in) = self.ext_next(w, 1 ^ w_in);
                } else {
                    break;
                }
            }
            self.stack.clear();
            if w == root {
                break;
            }
        }
    }
}

pub(crate) fn run(
    n: usize,
    edges: &[(usize, usize)],
    order: Option<&mut Rng>,
    policy: FailurePolicy,
    want_rotation: bool,
) -> EngineOutput {
    let dfs = dfs_forest(n, edges, order);
    let m = edges.len();

    let mut least_ancestor: Vec<usize> = (0..n).collect();
    let mut back_down: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut arcs = vec![
        Arc {
            nbr: NIL,
            link: [NIL, NIL]
        };
        2 * m
    ];
    let mut ends = vec![[NIL, NIL]; 2 * n];
    let mut is_tree = vec![false; m];
    for c in 0..n {
        let e = dfs.parent_edge[c];
        if e != NIL {
            is_tree[e] = true;
            let root = n + c;
            arcs[2 * e].nbr = c;
            arcs[2 * e + 1].nbr = root;
            ends[root] = [2 * e, 2 * e];
            ends[c] = [2 * e + 1, 2 * e + 1];
        }
    }
    for (e, &(u, v)) in edges.iter().enumerate() {
        if is_tree[e] {
            continue;
        }
        let (a, b) = (dfs.dfi_of[u], dfs.dfi_of[v]);
        let (anc, desc) = if a < b { (a, b) } else { (b, a) };
        least_ancestor[desc] = least_ancestor[desc].min(anc);
        back_down[anc].push((desc, e));
    }

    let mut lowpoint = least_ancestor.clone();
    for v in (0..n).rev() {
        let p = dfs.parent[v];
        if p != NIL {
            lowpoint[p] = lowpoint[p].min(lowpoint[v]);
        }
    }
    let mut sep_children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for c in 0..n {
        if dfs.parent[c] != NIL {
            sep_children[dfs.parent[c]].push(c);
        }
    }
    for list in &mut sep_children {
        list.sort_by_key(|&c| (lowpoint[c], c));
    }

    let mut engine = Engine {
        n,
        parent: dfs.parent.clone(),
        least_ancestor,
        lowpoint,
        sep_children,
        sep_cursor: vec![0; n],
        merged: vec![false; n],
        flipped: vec![false; n],
        ends,
        arcs,
        backedge_flag: vec![NIL; n],
        pending_edge: vec![NIL; n],
        visited: vec![NIL; 2 * n],
        pertinent_roots: vec![VecDeque::new(); n],
        touched: Vec::new(),
        walk_roots: Vec::new(),
        stack: Vec::new(),
    };

    let mut skipped = Vec::new();
    for v in (0..n).rev() {
        for &(w, e) in &back_down[v] {
            engine.pending_edge[w] = e;
            engine.walkup(v, w);
        }
        let roots = std::mem::take(&mut engine.walk_roots);
        for &r in &roots {
            engine.walkdown(v, r);
        }
        engine.walk_roots = roots;
        engine.walk_roots.clear();
        for &(w, e) in &back_down[v] {
            if engine.backedge_flag[w] == v {
                engine.backedge_flag[w] = NIL;
                skipped.push(e);
                if policy == FailurePolicy::Stop {
                    return EngineOutput {
                        skipped,
                        rotation: None,
                    };
                }
            }
        }
        for p in std::mem::take(&mut engine.touched) {
            engine.pertinent_roots[p].clear();
        }
    }

    if !want_rotation {
        return EngineOutput {
            skipped,
            rotation: None,
        };
    }

    for c in 0..n {
        let p = engine.parent[c];
        if p != NIL && !engine.merged[c] {
            engine.splice(p, 1, n + c);
            engine.merged[c] = true;
        }
    }
    let mut inverted = vec![false; n];
    for v in 0..n {
        let p = engine.parent[v];
        if p != NIL {
            inverted[v] = inverted[p] ^ engine.flipped[v];
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        let mut list = Vec::new();
        let mut a = engine.ends[v][0];
        while a != NIL {
            list.push(a >> 1);
            a = engine.arcs[a].link[1];
        }
        if inverted[v] {
            list.reverse();
        }
        rotation[dfs.vertex_of[v]] = list;
    }
    EngineOutput {
        skipped,
        rotation: Some(rotation),
    }
}
