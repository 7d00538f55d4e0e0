//! Chordality testing, perfect elimination orderings, maximal cliques of
//! chordal graphs, and block decompositions.

use crate::graph::{Graph, GraphError, VertexSet};

/// A candidate perfect elimination ordering; `order[0]` is eliminated first.
#[derive(Debug, Clone)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

/// Maximum cardinality search. The returned ordering is a perfect
/// elimination ordering iff the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> EliminationOrder {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        visited[v] = true;
        visit.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    EliminationOrder { order: visit }
}

/// Verifies the perfect elimination property: every vertex's later
/// neighbors form a clique.
pub fn is_peo(g: &Graph, elim: &EliminationOrder) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in elim.order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &elim.order {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        if !g.is_clique(&later) {
            return false;
        }
    }
    true
}

/// Chordality check. On a non-chordal graph also returns an induced cycle
/// of length at least four, in cycle order.
pub fn is_chordal(g: &Graph) -> (bool, Option<Vec<usize>>) {
    let elim = maximum_cardinality_search(g);
    if is_peo(g, &elim) {
        return (true, None);
    }
    // Recover a hole: some vertex v of a hole has its two hole-neighbors
    // u, w nonadjacent, and the rest of the hole avoids N[v]. A shortest
    // u-w path in the graph minus N[v] \ {u, w} is chordless, so v plus
    // that path is an induced cycle.
    let n = g.vertex_count();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut allowed = vec![true; n];
                allowed[v] = false;
                for x in g.neighbors(v) {
                    allowed[x] = false;
                }
                allowed[u] = true;
                allowed[w] = true;
                if let Some(path) = bfs_path(g, u, w, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return (false, Some(cycle));
                }
            }
        }
    }
    unreachable!("PEO check failed but no hole found");
}

fn bfs_path(g: &Graph, from: usize, to: usize, allowed: &[bool]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[from] = true;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(v) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// All maximal cliques of a chordal graph, each sorted, the list in
/// lexicographic order. There are at most `n` of them.
pub fn maximal_cliques_chordal(g: &Graph) -> Result<Vec<VertexSet>, GraphError> {
    let elim = maximum_cardinality_search(g);
    if !is_peo(g, &elim) {
        return Err(GraphError::NotChordal);
    }
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in elim.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut cands: Vec<VertexSet> = Vec::new();
    for &v in &elim.order {
        let mut c: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        c.push(v);
        c.sort_unstable();
        cands.push(c);
    }
    let mut cliques: Vec<VertexSet> = Vec::new();
    for c in &cands {
        let subsumed = cands
            .iter()
            .any(|d| d.len() > c.len() && c.iter().all(|x| d.binary_search(x).is_ok()));
        if !subsumed && !cliques.contains(c) {
            cliques.push(c.clone());
        }
    }
    cliques.sort();
    Ok(cliques)
}

pub fn clique_number_chordal(g: &Graph) -> Result<usize, GraphError> {
    let cliques = maximal_cliques_chordal(g)?;
    Ok(cliques.iter().map(|c| c.len()).max().unwrap_or(0))
}

/// Blocks (biconnected components and bridges, plus singletons for
/// isolated vertices), cut vertices, and the block-cut tree.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Edges of the block-cut tree as (block index, cut vertex id).
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Indices of the blocks containing each vertex.
    pub fn blocks_of(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v].push(i);
            }
        }
        out
    }
}

struct BlockDfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    is_cut: Vec<bool>,
}

impl BlockDfs<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        let mut children = 0usize;
        let nbrs: Vec<usize> = self.g.neighbors(v).collect();
        for w in nbrs {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push((v, w));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent != usize::MAX {
                        self.is_cut[v] = true;
                    }
                    let mut verts = std::collections::BTreeSet::new();
                    while let Some(&(a, b)) = self.edge_stack.last() {
                        self.edge_stack.pop();
                        verts.insert(a);
                        verts.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(verts.into_iter().collect());
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.edge_stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.is_cut[v] = true;
        }
    }
}

/// Standard biconnected decomposition (lowpoint DFS).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut dfs = BlockDfs {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for root in 0..n {
        if dfs.disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            dfs.disc[root] = dfs.timer;
            dfs.timer += 1;
            dfs.blocks.push(vec![root]);
            continue;
        }
        dfs.visit(root, usize::MAX);
    }
    let BlockDfs {
        mut blocks, is_cut, ..
    } = dfs;
    blocks.sort();
    let cut_vertices: VertexSet = (0..n).filter(|&v| is_cut[v]).collect();
    let mut tree_edges = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            if is_cut[v] {
                tree_edges.push((i, v));
            }
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices,
        tree_edges,
    }
}

/// Chordal and every block is a clique (equivalently, no K4-e).
pub fn is_block_graph(g: &Graph) -> bool {
    if !is_chordal(g).0 {
        return false;
    }
    block_decomposition(g)
        .blocks
        .iter()
        .all(|b| g.is_clique(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{make_pattern, PatternId};

    #[test]
    fn mcs_and_peo() {
        let k3 = Graph::complete(3);
        assert!(is_peo(&k3, &maximum_cardinality_search(&k3)));

        let c4 = Graph::cycle(4);
        assert!(!is_peo(&c4, &maximum_cardinality_search(&c4)));

        let p4 = Graph::path(4);
        assert!(is_peo(&p4, &maximum_cardinality_search(&p4)));
    }

    #[test]
    fn chordality_and_holes() {
        let (ok, w) = is_chordal(&Graph::cycle(5));
        assert!(!ok);
        let mut hole = w.unwrap();
        assert_eq!(hole.len(), 5);
        hole.sort_unstable();
        assert_eq!(hole, vec![0, 1, 2, 3, 4]);

        assert!(is_chordal(&Graph::path(7)).0);

        let k4e = make_pattern(&PatternId::K4MinusE);
        assert!(is_chordal(&k4e).0);

        // C6 with one chord still has a C4 or C5 hole
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let (ok, w) = is_chordal(&g);
        assert!(!ok);
        let hole = w.unwrap();
        assert!(hole.len() >= 4);
        // the witness really is an induced cycle
        let (sub, _) = g.induced_subgraph(&hole).unwrap();
        assert_eq!(sub.edge_count(), hole.len());
        assert!(sub.vertices().all(|v| sub.degree(v) == 2));
    }

    #[test]
    fn maximal_cliques_examples() {
        assert_eq!(
            maximal_cliques_chordal(&Graph::complete(4)).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(
            maximal_cliques_chordal(&Graph::path(3)).unwrap(),
            vec![vec![0, 1], vec![1, 2]]
        );
        // two K4s sharing vertex 0
        let g = two_k4s_shared();
        let cliques = maximal_cliques_chordal(&g).unwrap();
        assert_eq!(cliques, vec![vec![0, 1, 2, 3], vec![0, 4, 5, 6]]);
        assert!(maximal_cliques_chordal(&Graph::cycle(4)).is_err());
        assert_eq!(clique_number_chordal(&Graph::complete(5)).unwrap(), 5);

        let h0 = make_pattern(&PatternId::H0);
        assert_eq!(clique_number_chordal(&h0).unwrap(), 4);
    }

    fn two_k4s_shared() -> Graph {
        let mut edges = Vec::new();
        for c in [[0usize, 1, 2, 3], [0, 4, 5, 6]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((c[i], c[j]));
                }
            }
        }
        Graph::from_edges(7, &edges).unwrap()
    }

    #[test]
    fn blocks_examples() {
        let h0 = make_pattern(&PatternId::H0);
        let d = block_decomposition(&h0);
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![0]);
        assert!(is_block_graph(&h0));

        let k4e = make_pattern(&PatternId::K4MinusE);
        assert!(!is_block_graph(&k4e));
        let d = block_decomposition(&k4e);
        assert_eq!(d.blocks.len(), 1);

        let t = Graph::path(5);
        let d = block_decomposition(&t);
        assert_eq!(d.blocks.len(), 4);
        assert!(is_block_graph(&t));
        assert_eq!(d.cut_vertices, vec![1, 2, 3]);

        // isolated vertices get singleton blocks
        let g = Graph::empty(2);
        assert_eq!(block_decomposition(&g).blocks.len(), 2);

        // every edge in exactly one block
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7)],
        )
        .unwrap();
        let d = block_decomposition(&g);
        let mut count = std::collections::HashMap::new();
        for b in &d.blocks {
            for (i, &u) in b.iter().enumerate() {
                for &v in &b[i + 1..] {
                    if g.has_edge(u, v) {
                        *count.entry((u, v)).or_insert(0) += 1;
                    }
                }
            }
        }
        assert_eq!(count.len(), g.edge_count());
        assert!(count.values().all(|&c| c == 1));
        assert_eq!(d.cut_vertices, vec![2, 3, 5, 6]);
    }
}
