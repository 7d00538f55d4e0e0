//! Recognition of contact B0-VPG graphs among chordal inputs.
//!
//! A chordal graph has a contact layout exactly when it avoids K5, K4-e and
//! every member of the K4-attachment tree family. The test below runs in
//! polynomial time on the clique structure and, on rejection, extracts one
//! of those patterns as a witness.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::chordal::{is_chordal, maximal_cliques_chordal};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::patterns::{find_k4_minus_e, BaseTree, PatternId, Witness};

/// Outcome of a recognition run. `Yes` may carry marking state that a
/// layout builder can reuse; `No` always carries a witness.
#[derive(Debug, Clone)]
pub enum Decision {
    Yes(MarkState),
    No(Witness),
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Decision::No(w) => Some(w),
            Decision::Yes(_) => None,
        }
    }
}

/// Per-vertex K4 statistics of a chordal graph whose maximal cliques all
/// have size at most four and pairwise share at most one vertex.
#[derive(Debug, Clone)]
pub struct K4Labels {
    /// Maximal cliques of size exactly four, sorted.
    pub k4s: Vec<VertexSet>,
    /// `l[v]` = number of K4s containing `v`.
    pub l: Vec<usize>,
}

/// State of the arc-marking loop: which vertices got marked, the direction
/// assigned to each processed edge, and which edges were written off as
/// triangle closers.
#[derive(Debug, Clone)]
pub struct MarkState {
    pub labels: K4Labels,
    pub marked: Vec<bool>,
    /// Arcs as (from, to); every arc points into a marked vertex.
    pub arcs: Vec<(usize, usize)>,
    /// Edges coloured during marking (both ends have an arc to the same
    /// newly marked vertex); stored with smaller endpoint first.
    pub coloured: Vec<(usize, usize)>,
}

impl MarkState {
    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(f, _)| f == v).count()
    }

    /// State with no K4s, no marks, no arcs — the YES payload for class
    /// decisions that never run the marking loop.
    pub fn empty(n: usize) -> MarkState {
        MarkState::trivial(
            K4Labels {
                k4s: Vec::new(),
                l: vec![0; n],
            },
            n,
        )
    }

    fn trivial(labels: K4Labels, n: usize) -> MarkState {
        MarkState {
            labels,
            marked: vec![false; n],
            arcs: Vec::new(),
            coloured: Vec::new(),
        }
    }
}

/// Computes the K4 count per vertex after screening the clique structure:
/// a maximal clique of size five or more yields a K5 witness; an edge lying
/// in two maximal cliques yields a K4-e witness.
pub fn k4_labels(g: &Graph) -> Result<Result<K4Labels, Witness>, GraphError> {
    let cliques = maximal_cliques_chordal(g)?;
    for c in &cliques {
        if c.len() >= 5 {
            return Ok(Err(Witness {
                pattern: PatternId::K5,
                map: c[..5].to_vec(),
            }));
        }
    }
    // An edge in two maximal cliques has two nonadjacent common neighbors.
    if let Some(w) = find_k4_minus_e(g) {
        return Ok(Err(w));
    }
    let k4s: Vec<VertexSet> = cliques.into_iter().filter(|c| c.len() == 4).collect();
    let mut l = vec![0usize; g.vertex_count()];
    for c in &k4s {
        for &v in c {
            l[v] += 1;
        }
    }
    Ok(Ok(K4Labels { k4s, l }))
}

/// Recognizes contact B0-VPG within chordal graphs, visiting markable
/// vertices in ascending id order. Errors on non-chordal input.
pub fn recognize_chordal_contact(g: &Graph) -> Result<Decision, GraphError> {
    let order: Vec<usize> = g.vertices().collect();
    recognize_with_order(g, &order)
}

/// Same algorithm with an explicit priority order for the marking queue;
/// the verdict (though not necessarily the marking state) is independent
/// of this order.
pub fn recognize_with_order(g: &Graph, priority: &[usize]) -> Result<Decision, GraphError> {
    let (chordal, hole) = is_chordal(g);
    if !chordal {
        debug_assert!(hole.is_some());
        return Err(GraphError::NotChordal);
    }
    let n = g.vertex_count();
    let labels = match k4_labels(g)? {
        Ok(l) => l,
        Err(w) => return Ok(Decision::No(w)),
    };

    // A vertex in three or more K4s is the center of an H0.
    for v in 0..n {
        if labels.l[v] >= 3 {
            let mut map = vec![v];
            for c in labels.labels_of(v).take(3) {
                map.extend(c.iter().filter(|&&u| u != v));
            }
            let w = Witness {
                pattern: PatternId::H0,
                map,
            };
            debug_assert!(w.validate(g));
            return Ok(Decision::No(w));
        }
    }

    // With at most one vertex in two K4s the answer is YES and the loop
    // below cannot fail; we still run it so acceptance carries a complete
    // marking state for the layout builder (arcs freeze which vertices
    // pass through each contact point).

    // Which edges belong to some K4 (those never get directed or coloured).
    let mut in_k4: BTreeSet<(usize, usize)> = BTreeSet::new();
    for c in &labels.k4s {
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                in_k4.insert((u.min(v), u.max(v)));
            }
        }
    }

    let mut state = MarkState::trivial(labels, n);
    // arc_from[v] = targets of arcs leaving v; processed tracks directed
    // and coloured edges so each is handled once.
    let mut arc_from: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut processed: BTreeSet<(usize, usize)> = BTreeSet::new();

    let budget = |l: usize| 2usize.saturating_sub(l);

    loop {
        // Find an unmarked vertex whose current out-degree equals its
        // budget, scanning in the given priority order.
        let mut pick = None;
        for &v in priority {
            if !state.marked[v] && arc_from[v].len() == budget(state.labels.l[v]) {
                pick = Some(v);
                break;
            }
        }
        let Some(v) = pick else { break };
        state.marked[v] = true;
        // Direct every untouched non-K4 edge at v toward v.
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for &w in &nbrs {
            let key = (v.min(w), v.max(w));
            if in_k4.contains(&key) || processed.contains(&key) {
                continue;
            }
            processed.insert(key);
            arc_from[w].insert(v);
            state.arcs.push((w, v));
        }
        // Colour edges between two in-neighbors of v.
        let ins: Vec<usize> = arc_from
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(&v))
            .map(|(u, _)| u)
            .collect();
        for (i, &a) in ins.iter().enumerate() {
            for &b in &ins[i + 1..] {
                let key = (a.min(b), a.max(b));
                if g.has_edge(a, b) && !in_k4.contains(&key) && !processed.contains(&key) {
                    processed.insert(key);
                    state.coloured.push(key);
                }
            }
        }
        // Over-budget check: marking v may have pushed a neighbor past its
        // allowance of outgoing arcs.
        for u in 0..n {
            if arc_from[u].len() > budget(state.labels.l[u]) {
                let w = extract_t_witness(g, &state, &arc_from, u);
                debug_assert!(w.validate(g), "tree-family witness failed validation");
                return Ok(Decision::No(w));
            }
        }
    }
    Ok(Decision::Yes(state))
}

impl K4Labels {
    /// K4s containing `v`.
    pub fn labels_of(&self, v: usize) -> impl Iterator<Item = &VertexSet> {
        self.k4s.iter().filter(move |c| c.contains(&v))
    }
}

/// Builds a family witness rooted at a vertex whose outgoing arcs exceed
/// its budget. Follows arcs outward to grow a base tree in which every
/// vertex can account for `3 - deg` attached K4s, then attaches those K4s.
/// Falls back to a bounded exhaustive subtree search if the arc-guided
/// walk does not produce a valid member (the walk is a heuristic; the
/// fallback is exact for the sizes that can occur here).
fn extract_t_witness(
    g: &Graph,
    state: &MarkState,
    arc_from: &[BTreeSet<usize>],
    root: usize,
) -> Witness {
    let l = &state.labels.l;
    // Greedy arc-guided tree: root contributes 3 - l(root) children (it is
    // over budget, so it has at least that many outgoing arcs); every other
    // tree vertex contributes 2 - l(v) children along its own arcs.
    let mut tree_adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    tree_adj.insert(root, BTreeSet::new());
    queue.push_back((root, 3usize.saturating_sub(l[root])));
    while let Some((v, want)) = queue.pop_front() {
        let mut taken = 0;
        for &to in &arc_from[v] {
            if taken == want {
                break;
            }
            if tree_adj.contains_key(&to) {
                continue;
            }
            tree_adj.insert(to, BTreeSet::new());
            tree_adj.get_mut(&v).unwrap().insert(to);
            tree_adj.get_mut(&to).unwrap().insert(v);
            taken += 1;
            queue.push_back((to, 2usize.saturating_sub(l[to])));
        }
    }
    if let Some(w) = assemble_t_witness(g, &state.labels, &tree_adj) {
        return w;
    }
    exhaustive_t_witness(g, &state.labels).expect("over-budget vertex implies a family member")
}

/// Tries to package a candidate base tree (given as an adjacency map over
/// host vertices) into a validated family witness by attaching the K4s
/// each tree vertex lies in.
fn assemble_t_witness(
    g: &Graph,
    labels: &K4Labels,
    tree_adj: &BTreeMap<usize, BTreeSet<usize>>,
) -> Option<Witness> {
    let verts: Vec<usize> = tree_adj.keys().copied().collect();
    if verts.len() < 2 {
        return None;
    }
    // Every tree vertex must own exactly 3 - deg attached K4s, and those
    // K4s must be disjoint from the tree and from each other outside the
    // shared vertex.
    let mut base_edges = Vec::new();
    let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for (&v, nb) in tree_adj {
        for &w in nb {
            if v < w {
                base_edges.push((pos[&v], pos[&w]));
            }
        }
    }
    let base = Graph::from_edges(verts.len(), &base_edges).ok()?;
    let bt = BaseTree::new(base).ok()?;

    let tree_set: BTreeSet<usize> = verts.iter().copied().collect();
    let mut used: BTreeSet<usize> = tree_set.clone();
    // Pattern vertex order: base vertices first, then K4 triples per base
    // vertex ascending — mirror of the generator's labeling.
    let mut map = verts.clone();
    for (i, &v) in verts.iter().enumerate() {
        let need = 3usize.saturating_sub(bt.graph().degree(i));
        let mut got = 0;
        for c in labels.labels_of(v) {
            let others: Vec<usize> = c.iter().copied().filter(|&u| u != v).collect();
            if others.iter().any(|u| used.contains(u)) {
                continue;
            }
            used.extend(others.iter().copied());
            map.extend(others);
            got += 1;
            if got == need {
                break;
            }
        }
        if got < need {
            return None;
        }
    }
    let w = Witness {
        pattern: PatternId::TMember(bt),
        map,
    };
    if w.validate(g) {
        Some(w)
    } else {
        None
    }
}

/// Exhaustive search for a family member: enumerates connected induced
/// subtrees of the "eligible" vertices (growing vertex sets up to ten
/// vertices) and tries to assemble each into a witness.
fn exhaustive_t_witness(g: &Graph, labels: &K4Labels) -> Option<Witness> {
    let n = g.vertex_count();
    // A base-tree vertex of degree d needs 3 - d K4s, so it needs l >= 1
    // unless it has degree 3 in the tree.
    let mut results: Vec<BTreeSet<usize>> = Vec::new();
    // Enumerate connected vertex sets by BFS over set-extension, capped.
    let mut frontier: Vec<BTreeSet<usize>> =
        (0..n).map(|v| BTreeSet::from([v])).collect();
    let mut seen: BTreeSet<Vec<usize>> = frontier
        .iter()
        .map(|s| s.iter().copied().collect())
        .collect();
    for _size in 2..=10usize {
        let mut next = Vec::new();
        for s in &frontier {
            for &v in s {
                for u in g.neighbors(v) {
                    if s.contains(&u) {
                        continue;
                    }
                    let mut t = s.clone();
                    t.insert(u);
                    let key: Vec<usize> = t.iter().copied().collect();
                    if seen.insert(key) {
                        next.push(t);
                    }
                }
            }
        }
        results.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    for s in results {
        let verts: Vec<usize> = s.iter().copied().collect();
        let (sub, _) = g.induced_subgraph(&verts).unwrap();
        if !sub.is_tree() || sub.vertices().any(|v| sub.degree(v) > 3) {
            continue;
        }
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &v in &verts {
            adj.insert(v, BTreeSet::new());
        }
        for (i, j) in sub.edges() {
            adj.get_mut(&verts[i]).unwrap().insert(verts[j]);
            adj.get_mut(&verts[j]).unwrap().insert(verts[i]);
        }
        if let Some(w) = assemble_t_witness(g, labels, &adj) {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{make_pattern, make_t_member};

    fn recognize(g: &Graph) -> Decision {
        recognize_chordal_contact(g).unwrap()
    }

    #[test]
    fn small_accepts() {
        for g in [
            Graph::empty(1),
            Graph::path(5),
            Graph::complete(4),
            Graph::complete(3),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ] {
            assert!(recognize(&g).is_yes(), "{g:?}");
        }
    }

    #[test]
    fn clique_screen_rejections() {
        let d = recognize(&Graph::complete(5));
        assert_eq!(d.witness().unwrap().pattern, PatternId::K5);
        assert!(d.witness().unwrap().validate(&Graph::complete(5)));

        let k4e = make_pattern(&PatternId::K4MinusE);
        let d = recognize(&k4e);
        assert_eq!(d.witness().unwrap().pattern, PatternId::K4MinusE);
        assert!(d.witness().unwrap().validate(&k4e));

        let k6 = Graph::complete(6);
        assert_eq!(recognize(&k6).witness().unwrap().pattern, PatternId::K5);
    }

    #[test]
    fn h0_rejection() {
        let h0 = make_pattern(&PatternId::H0);
        let d = recognize(&h0);
        let w = d.witness().unwrap();
        assert_eq!(w.pattern, PatternId::H0);
        assert!(w.validate(&h0));
    }

    #[test]
    fn two_k4s_sharing_a_vertex_accepted() {
        let mut e = Graph::complete(4).edges();
        e.extend([(0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)]);
        let g = Graph::from_edges(7, &e).unwrap();
        assert!(recognize(&g).is_yes());
    }

    #[test]
    fn smallest_family_member_rejected_with_tree_witness() {
        let gp2 = make_pattern(&PatternId::GP2);
        let d = recognize(&gp2);
        let w = d.witness().unwrap();
        assert!(matches!(w.pattern, PatternId::TMember(_)));
        assert!(w.validate(&gp2));
        if let PatternId::TMember(b) = &w.pattern {
            assert_eq!(b.graph().vertex_count(), 2);
        }
    }

    #[test]
    fn family_member_with_path3_base_rejected() {
        let base = BaseTree::new(Graph::path(3)).unwrap();
        let g = make_t_member(&base);
        let d = recognize(&g);
        let w = d.witness().unwrap();
        assert!(matches!(w.pattern, PatternId::TMember(_)));
        assert!(w.validate(&g));
    }

    #[test]
    fn pendant_vertex_saves_family_member() {
        // A member of the family with one extra pendant neighbor on an
        // l=2 vertex still contains the member, so it stays rejected;
        // deleting one attached K4 vertex instead makes it accepted.
        let gp2 = make_pattern(&PatternId::GP2);
        let mut e = gp2.edges();
        e.push((0, 14));
        let g = Graph::from_edges(15, &e).unwrap();
        let w = recognize(&g);
        assert!(!w.is_yes());
        assert!(w.witness().unwrap().validate(&g));

        let keep: Vec<usize> = (0..14).filter(|&v| v != 13).collect();
        let (sub, _) = gp2.induced_subgraph(&keep).unwrap();
        assert!(recognize(&sub).is_yes());
    }

    #[test]
    fn non_chordal_input_errors() {
        assert_eq!(
            recognize_chordal_contact(&Graph::cycle(5)).unwrap_err(),
            GraphError::NotChordal
        );
    }

    #[test]
    fn marking_state_sane_on_yes() {
        // Chain of K4s along a path: v0 - K4 - v1 - K4 - v2 where shared
        // vertices have l = 2. Build: K4 {0,1,2,3}, K4 {3,4,5,6}, plus a
        // pendant path 6-7.
        let mut e = Vec::new();
        for c in [[0usize, 1, 2, 3], [3, 4, 5, 6]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    e.push((c[i], c[j]));
                }
            }
        }
        e.push((6, 7));
        let g = Graph::from_edges(8, &e).unwrap();
        match recognize(&g) {
            Decision::Yes(st) => {
                for (f, t) in &st.arcs {
                    assert!(st.marked[*t], "arc {f}->{t} must enter a marked vertex");
                }
                for v in 0..8 {
                    if st.marked[v] {
                        let out = st.arcs.iter().filter(|&&(f, _)| f == v).count();
                        assert_eq!(out, 2usize.saturating_sub(st.labels.l[v]));
                    }
                }
            }
            Decision::No(w) => panic!("expected acceptance, got {w:?}"),
        }
    }

    #[test]
    fn order_invariance_spot_check() {
        let gp2 = make_pattern(&PatternId::GP2);
        let fwd: Vec<usize> = (0..14).collect();
        let rev: Vec<usize> = (0..14).rev().collect();
        let a = recognize_with_order(&gp2, &fwd).unwrap();
        let b = recognize_with_order(&gp2, &rev).unwrap();
        assert_eq!(a.is_yes(), b.is_yes());
        assert!(b.witness().unwrap().validate(&gp2));
    }
}
