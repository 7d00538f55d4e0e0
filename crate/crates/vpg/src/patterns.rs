//! The catalog of forbidden patterns, parametric family generators, and
//! induced-subgraph detectors producing checkable witnesses.

use crate::graph::{Graph, GraphError};

/// A tree with maximum degree three and at least two vertices; the seed of
/// the K4-attachment family.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseTree(Graph);

impl BaseTree {
    pub fn new(g: Graph) -> Result<Self, GraphError> {
        if !g.is_tree() || g.vertex_count() < 2 || g.vertices().any(|v| g.degree(v) > 3) {
            return Err(GraphError::BadBaseTree);
        }
        Ok(BaseTree(g))
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PatternId {
    K5,
    K4MinusE,
    K33,
    K33Star,
    CoC6,
    H0,
    B1,
    B2,
    B3,
    G1,
    G2,
    G3,
    G4,
    /// The family member with base tree P2 (the smallest one after H0).
    GP2,
    TMember(BaseTree),
}

impl PatternId {
    pub fn name(&self) -> String {
        match self {
            PatternId::K5 => "K5".into(),
            PatternId::K4MinusE => "K4-e".into(),
            PatternId::K33 => "K3,3".into(),
            PatternId::K33Star => "K3,3*".into(),
            PatternId::CoC6 => "co-C6".into(),
            PatternId::H0 => "H0".into(),
            PatternId::B1 => "B1".into(),
            PatternId::B2 => "B2".into(),
            PatternId::B3 => "B3".into(),
            PatternId::G1 => "G1".into(),
            PatternId::G2 => "G2".into(),
            PatternId::G3 => "G3".into(),
            PatternId::G4 => "G4".into(),
            PatternId::GP2 => "G_P2".into(),
            PatternId::TMember(b) => format!("T(base={})", b.graph().vertex_count()),
        }
    }
}

fn clique_edges(edges: &mut Vec<(usize, usize)>, verts: &[usize]) {
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            edges.push((u, v));
        }
    }
}

/// Canonical labeled instance of each fixed pattern.
///
/// Labelings, fixed once so witness maps are positional:
/// - K4-e: 0,1 the nonadjacent pair, 2,3 the remaining edge.
/// - K3,3: parts {0,1,2} and {3,4,5}; K3,3*: subdivide edge (2,5) with 6.
/// - H0: three K4s {0,1,2,3}, {0,4,5,6}, {0,7,8,9} sharing 0.
/// - B1: C4 0-1-2-3 plus 4~{0,1} and 5~{2,3}; B2 adds 6~{0,1,4};
///   B3 adds 7~{2,3,5}.
/// - G2: C5 0-1-2-3-4 plus 5~{0,2}, 6~{0,3} and the edge 5-6.
/// - G3: C5 plus 5~{0,2,3} and 6~{1,2,4}, 5 and 6 nonadjacent.
/// - G1: C5 plus 5~{0,2,3} and two K4s {5,6,7,8}, {5,9,10,11} on 5.
/// - G4: C5 plus 5~{0,2,3}, 6~{1,4,5} and one K4 {5,7,8,9} on 5.
///
/// B1-B3 and G1-G4 are reconstructed from the structural case analysis of
/// the C4- and C5-anchored families; the small-graph search in the oracle
/// module certifies the non-representable ones independently.
pub fn make_pattern(id: &PatternId) -> Graph {
    match id {
        PatternId::K5 => Graph::complete(5),
        PatternId::K4MinusE => {
            Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
        }
        PatternId::K33 => {
            let mut e = Vec::new();
            for u in 0..3 {
                for v in 3..6 {
                    e.push((u, v));
                }
            }
            Graph::from_edges(6, &e).unwrap()
        }
        PatternId::K33Star => {
            let mut e = Vec::new();
            for u in 0..3 {
                for v in 3..6 {
                    if (u, v) != (2, 5) {
                        e.push((u, v));
                    }
                }
            }
            e.push((2, 6));
            e.push((6, 5));
            Graph::from_edges(7, &e).unwrap()
        }
        PatternId::CoC6 => Graph::cycle(6).complement(),
        PatternId::H0 => {
            let mut e = Vec::new();
            clique_edges(&mut e, &[0, 1, 2, 3]);
            clique_edges(&mut e, &[0, 4, 5, 6]);
            clique_edges(&mut e, &[0, 7, 8, 9]);
            Graph::from_edges(10, &e).unwrap()
        }
        PatternId::B1 => Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 2), (5, 3)],
        )
        .unwrap(),
        PatternId::B2 => {
            let mut e = make_pattern(&PatternId::B1).edges();
            e.extend([(6, 0), (6, 1), (6, 4)]);
            Graph::from_edges(7, &e).unwrap()
        }
        PatternId::B3 => {
            let mut e = make_pattern(&PatternId::B2).edges();
            e.extend([(7, 2), (7, 3), (7, 5)]);
            Graph::from_edges(8, &e).unwrap()
        }
        PatternId::G2 => {
            let mut e = Graph::cycle(5).edges();
            e.extend([(5, 0), (5, 2), (6, 0), (6, 3), (5, 6)]);
            Graph::from_edges(7, &e).unwrap()
        }
        PatternId::G3 => {
            let mut e = Graph::cycle(5).edges();
            e.extend([(5, 0), (5, 2), (5, 3), (6, 1), (6, 2), (6, 4)]);
            Graph::from_edges(7, &e).unwrap()
        }
        PatternId::G1 => {
            let mut e = Graph::cycle(5).edges();
            e.extend([(5, 0), (5, 2), (5, 3)]);
            clique_edges(&mut e, &[5, 6, 7, 8]);
            clique_edges(&mut e, &[5, 9, 10, 11]);
            Graph::from_edges(12, &e).unwrap()
        }
        PatternId::G4 => {
            let mut e = Graph::cycle(5).edges();
            e.extend([(5, 0), (5, 2), (5, 3), (6, 1), (6, 4), (6, 5)]);
            clique_edges(&mut e, &[5, 7, 8, 9]);
            Graph::from_edges(10, &e).unwrap()
        }
        PatternId::GP2 => {
            make_t_member(&BaseTree::new(Graph::path(2)).unwrap())
        }
        PatternId::TMember(base) => make_t_member(base),
    }
}

/// Builds the family member over a base tree: every leaf gains two private
/// K4s, every degree-two vertex gains one, degree-three vertices none.
/// Base vertices keep their ids; attached triples follow in ascending order
/// of the base vertex.
pub fn make_t_member(base: &BaseTree) -> Graph {
    let t = base.graph();
    let b = t.vertex_count();
    let mut edges = t.edges();
    let mut next = b;
    for v in 0..b {
        let k4s = 3 - t.degree(v);
        for _ in 0..k4s {
            clique_edges(&mut edges, &[v, next, next + 1, next + 2]);
            next += 3;
        }
    }
    Graph::from_edges(next, &edges).unwrap()
}

/// A named pattern plus an injective map into a host graph; position `i`
/// of `map` is the image of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub pattern: PatternId,
    pub map: Vec<usize>,
}

impl Witness {
    /// Re-checks induced isomorphism under the stated map.
    pub fn validate(&self, host: &Graph) -> bool {
        let pat = make_pattern(&self.pattern);
        if self.map.len() != pat.vertex_count() {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        for &v in &self.map {
            if v >= host.vertex_count() || !seen.insert(v) {
                return false;
            }
        }
        for i in 0..pat.vertex_count() {
            for j in i + 1..pat.vertex_count() {
                if pat.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Lexicographically least injective map realizing `pattern` as an induced
/// subgraph of `host`, matching pattern vertices in id order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return None;
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    fn go(
        host: &Graph,
        pattern: &Graph,
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == pattern.vertex_count() {
            return true;
        }
        'cand: for c in 0..host.vertex_count() {
            if used[c] || host.degree(c) < pattern.degree(depth) {
                continue;
            }
            for p in 0..depth {
                if pattern.has_edge(p, depth) != host.has_edge(map[p], c) {
                    continue 'cand;
                }
            }
            map[depth] = c;
            used[c] = true;
            if go(host, pattern, depth + 1, map, used) {
                return true;
            }
            used[c] = false;
        }
        map[depth] = usize::MAX;
        false
    }
    if go(host, pattern, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Finds an edge with two nonadjacent common neighbors. Faster than the
/// generic search and the workhorse of block-graph screening.
pub fn find_k4_minus_e(g: &Graph) -> Option<Witness> {
    for (u, v) in g.edges() {
        let common = g.common_neighbors(u, v);
        for (i, &x) in common.iter().enumerate() {
            for &y in &common[i + 1..] {
                if !g.has_edge(x, y) {
                    return Some(Witness {
                        pattern: PatternId::K4MinusE,
                        map: vec![x, y, u, v],
                    });
                }
            }
        }
    }
    None
}

/// Scans the given patterns in increasing size; K4-e goes through the
/// dedicated detector, everything else through the generic backtracking.
pub fn find_fixed_forbidden(g: &Graph, set: &[PatternId]) -> Option<Witness> {
    let mut ordered: Vec<&PatternId> = set.iter().collect();
    ordered.sort_by_key(|id| make_pattern(id).vertex_count());
    for id in ordered {
        let hit = match id {
            PatternId::K4MinusE => find_k4_minus_e(g),
            _ => find_induced(g, &make_pattern(id)).map(|map| Witness {
                pattern: id.clone(),
                map,
            }),
        };
        if hit.is_some() {
            return hit;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_block_graph, is_chordal};

    #[test]
    fn pattern_counts() {
        let cases: &[(PatternId, usize, usize)] = &[
            (PatternId::K5, 5, 10),
            (PatternId::K4MinusE, 4, 5),
            (PatternId::K33, 6, 9),
            (PatternId::K33Star, 7, 10),
            (PatternId::CoC6, 6, 9),
            (PatternId::H0, 10, 18),
            (PatternId::B1, 6, 8),
            (PatternId::B2, 7, 11),
            (PatternId::B3, 8, 14),
            (PatternId::G1, 12, 20),
            (PatternId::G2, 7, 10),
            (PatternId::G3, 7, 11),
            (PatternId::G4, 10, 17),
            (PatternId::GP2, 14, 25),
        ];
        for (id, n, m) in cases {
            let g = make_pattern(id);
            assert_eq!(g.vertex_count(), *n, "vertices of {}", id.name());
            assert_eq!(g.edge_count(), *m, "edges of {}", id.name());
        }
    }

    #[test]
    fn t_member_shapes() {
        let p2 = BaseTree::new(Graph::path(2)).unwrap();
        assert_eq!(make_t_member(&p2), make_pattern(&PatternId::GP2));

        let p3 = BaseTree::new(Graph::path(3)).unwrap();
        assert_eq!(make_t_member(&p3).vertex_count(), 18);

        let star = BaseTree::new(
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        )
        .unwrap();
        assert_eq!(make_t_member(&star).vertex_count(), 22);

        assert!(BaseTree::new(Graph::empty(1)).is_err());
        assert!(BaseTree::new(Graph::cycle(4)).is_err());
        assert!(BaseTree::new(
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn t_members_are_block_graphs() {
        for base in [
            Graph::path(2),
            Graph::path(3),
            Graph::path(4),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ] {
            let t = make_t_member(&BaseTree::new(base).unwrap());
            assert!(is_chordal(&t).0);
            assert!(is_block_graph(&t));
            assert!(find_k4_minus_e(&t).is_none());
            assert!(find_induced(&t, &Graph::complete(5)).is_none());
        }
    }

    #[test]
    fn find_induced_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(find_induced(&k5, &Graph::complete(4)), Some(vec![0, 1, 2, 3]));

        let c5 = Graph::cycle(5);
        assert!(find_induced(&c5, &Graph::path(4)).is_some());
        assert!(find_induced(&c5, &Graph::complete(3)).is_none());
    }

    #[test]
    fn k4_minus_e_detector() {
        let k4e = make_pattern(&PatternId::K4MinusE);
        let w = find_k4_minus_e(&k4e).unwrap();
        assert!(w.validate(&k4e));
        let mut img = w.map.clone();
        img.sort_unstable();
        assert_eq!(img, vec![0, 1, 2, 3]);

        assert!(find_k4_minus_e(&Graph::complete(4)).is_none());

        let w4 = Graph::complete(1).join(&Graph::cycle(4));
        let w = find_k4_minus_e(&w4).unwrap();
        assert!(w.validate(&w4));
        assert!(find_induced(&w4, &k4e).is_some());
    }

    #[test]
    fn fixed_forbidden_examples() {
        let g = Graph::complete(5).disjoint_union(&Graph::empty(1));
        let w = find_fixed_forbidden(&g, &[PatternId::K5, PatternId::K4MinusE]).unwrap();
        assert_eq!(w.pattern, PatternId::K5);
        assert!(w.validate(&g));

        let co_c6 = make_pattern(&PatternId::CoC6);
        let w = find_fixed_forbidden(&co_c6, &[PatternId::CoC6]).unwrap();
        let mut img = w.map;
        img.sort_unstable();
        assert_eq!(img, vec![0, 1, 2, 3, 4, 5]);

        let tree = Graph::path(8);
        assert!(find_fixed_forbidden(
            &tree,
            &[PatternId::K5, PatternId::K33, PatternId::H0, PatternId::K4MinusE]
        )
        .is_none());
    }

    #[test]
    fn witness_validation_rejects_bad_maps() {
        let k5 = Graph::complete(5);
        assert!(!Witness {
            pattern: PatternId::K4MinusE,
            map: vec![0, 1, 2, 3]
        }
        .validate(&k5));
        assert!(!Witness {
            pattern: PatternId::K5,
            map: vec![0, 1, 2, 3, 3]
        }
        .validate(&k5));
        assert!(Witness {
            pattern: PatternId::K5,
            map: vec![0, 1, 2, 3, 4]
        }
        .validate(&k5));
    }
}
