//! Class membership (tree-cograph, P4-tidy, P5-free), the contact decision
//! for each supported class, and the structural decompositions the layout
//! builders consume.

use thiserror::Error;

use crate::chordal::is_chordal;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::patterns::{find_fixed_forbidden, find_induced, PatternId, Witness};
use crate::recognize::{recognize_chordal_contact, Decision, MarkState};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("input is not {0}")]
    NotInClass(&'static str),
    #[error("input belongs to no supported class")]
    NoSupportedClass,
    #[error("expected structure not found; class preconditions were violated")]
    StructureNotFound,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a tree-cograph decomposes; leaves hold vertex sets of the original
/// graph inducing trees / complements of trees.
#[derive(Debug, Clone, PartialEq)]
pub enum TreeCographDecomp {
    LeafTree(VertexSet),
    LeafCoTree(VertexSet),
    Union(Vec<TreeCographDecomp>),
    Join(Vec<TreeCographDecomp>),
}

impl TreeCographDecomp {
    pub fn vertices(&self) -> VertexSet {
        match self {
            TreeCographDecomp::LeafTree(s) | TreeCographDecomp::LeafCoTree(s) => s.clone(),
            TreeCographDecomp::Union(cs) | TreeCographDecomp::Join(cs) => {
                let mut out: VertexSet = cs.iter().flat_map(|c| c.vertices()).collect();
                out.sort_unstable();
                out
            }
        }
    }
}

/// Tree-cographs are the closure of trees under disjoint union and
/// complement: every one is a tree, a co-tree, a union of smaller ones, or
/// a join of smaller ones.
pub fn is_tree_cograph(g: &Graph) -> Option<TreeCographDecomp> {
    let all: VertexSet = g.vertices().collect();
    decompose_tc(g, &all)
}

fn decompose_tc(g: &Graph, verts: &[usize]) -> Option<TreeCographDecomp> {
    let (sub, _) = g.induced_subgraph(verts).unwrap();
    if sub.is_tree() {
        return Some(TreeCographDecomp::LeafTree(verts.to_vec()));
    }
    if sub.complement().is_tree() {
        return Some(TreeCographDecomp::LeafCoTree(verts.to_vec()));
    }
    let comps = sub.connected_components();
    if comps.len() > 1 {
        let children: Option<Vec<_>> = comps
            .iter()
            .map(|c| {
                let orig: VertexSet = c.iter().map(|&i| verts[i]).collect();
                decompose_tc(g, &orig)
            })
            .collect();
        return children.map(TreeCographDecomp::Union);
    }
    let co_comps = sub.complement().connected_components();
    if co_comps.len() > 1 {
        let children: Option<Vec<_>> = co_comps
            .iter()
            .map(|c| {
                let orig: VertexSet = c.iter().map(|&i| verts[i]).collect();
                decompose_tc(g, &orig)
            })
            .collect();
        return children.map(TreeCographDecomp::Join);
    }
    None
}

/// True if the 4 given vertices induce a path (in some order).
fn induces_p4(g: &Graph, s: &[usize; 4]) -> bool {
    let mut degs = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(s[i], s[j]) {
                degs[i] += 1;
                degs[j] += 1;
                edges += 1;
            }
        }
    }
    edges == 3 && degs.iter().all(|&d| d >= 1 && d <= 2)
}

fn count_induced_p4s(g: &Graph, verts: &[usize]) -> usize {
    let n = verts.len();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if induces_p4(g, &[verts[a], verts[b], verts[c], verts[d]]) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Definition check: every vertex set inducing a P4 has at most one
/// partner — a fifth vertex whose addition yields at least two induced
/// P4s. Quintic time; intended for desk-scale inputs.
pub fn is_p4_tidy(g: &Graph) -> bool {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    if !induces_p4(g, &quad) {
                        continue;
                    }
                    let mut partners = 0;
                    for v in 0..n {
                        if quad.contains(&v) {
                            continue;
                        }
                        let five = [a, b, c, d, v];
                        if count_induced_p4s(g, &five) >= 2 {
                            partners += 1;
                            if partners > 1 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// An induced path on five vertices, in path order, if one exists.
pub fn find_induced_p5(g: &Graph) -> Option<VertexSet> {
    find_induced(g, &Graph::path(5))
}

pub fn is_p5_free(g: &Graph) -> bool {
    find_induced_p5(g).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpiderKind {
    Thin,
    Thick,
}

/// Partition into a stable set S, clique C and rest R with `s[i]` matched
/// to `c[i]`: thin means s_i ~ c_j iff i = j, thick means iff i != j; R is
/// complete to C and anticomplete to S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiderPartition {
    pub s: VertexSet,
    pub c: VertexSet,
    pub r: VertexSet,
    pub kind: SpiderKind,
}

impl SpiderPartition {
    pub fn k(&self) -> usize {
        self.s.len()
    }

    /// Full adjacency re-check of the partition against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.s.len();
        if k < 2 || self.c.len() != k {
            return false;
        }
        let mut all: VertexSet = self
            .s
            .iter()
            .chain(&self.c)
            .chain(&self.r)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != g.vertex_count() || all != g.vertices().collect::<VertexSet>() {
            return false;
        }
        if !g.is_clique(&self.c) {
            return false;
        }
        for (i, &si) in self.s.iter().enumerate() {
            for &sj in &self.s[i + 1..] {
                if g.has_edge(si, sj) {
                    return false;
                }
            }
            for (j, &cj) in self.c.iter().enumerate() {
                let want = match self.kind {
                    SpiderKind::Thin => i == j,
                    SpiderKind::Thick => i != j,
                };
                if g.has_edge(si, cj) != want {
                    return false;
                }
            }
            for &r in &self.r {
                if g.has_edge(si, r) {
                    return false;
                }
            }
        }
        for &r in &self.r {
            for &c in &self.c {
                if !g.has_edge(r, c) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds a spider partition if one exists. Thin spiders are identified by
/// their degree-one S vertices; thick spiders (k >= 3) by their C vertices
/// having degree exactly n - 2. Thin is preferred at k = 2, where the two
/// kinds coincide up to relabeling.
pub fn spider_partition(g: &Graph) -> Option<SpiderPartition> {
    let n = g.vertex_count();
    // Thin: S = degree-1 vertices, C = their unique neighbors.
    let s: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if s.len() >= 2 {
        let c: VertexSet = s.iter().map(|&v| g.neighbors(v).next().unwrap()).collect();
        let mut cs = c.clone();
        cs.sort_unstable();
        cs.dedup();
        if cs.len() == c.len() {
            let mut in_sc = vec![false; n];
            for &v in s.iter().chain(&c) {
                in_sc[v] = true;
            }
            let r: VertexSet = (0..n).filter(|&v| !in_sc[v]).collect();
            let cand = SpiderPartition {
                s,
                c,
                r,
                kind: SpiderKind::Thin,
            };
            if cand.verify(g) {
                return Some(cand);
            }
        }
    }
    // Thick: every C vertex misses exactly one other vertex (its s_i).
    if n >= 6 {
        let c: VertexSet = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
        if c.len() >= 3 && 2 * c.len() <= n {
            let mut s = Vec::new();
            for &cv in &c {
                let miss: VertexSet = (0..n)
                    .filter(|&u| u != cv && !g.has_edge(cv, u))
                    .collect();
                if miss.len() != 1 {
                    s.clear();
                    break;
                }
                s.push(miss[0]);
            }
            if s.len() == c.len() {
                let mut in_sc = vec![false; n];
                for &v in s.iter().chain(&c) {
                    in_sc[v] = true;
                }
                let r: VertexSet = (0..n).filter(|&v| !in_sc[v]).collect();
                let cand = SpiderPartition {
                    s,
                    c,
                    r,
                    kind: SpiderKind::Thick,
                };
                if cand.verify(g) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassHint {
    Auto,
    Chordal,
    TreeCograph,
    P4Tidy,
    P5Free,
}

const SMALL_FORBIDDEN: [PatternId; 4] = [
    PatternId::K5,
    PatternId::K33,
    PatternId::H0,
    PatternId::K4MinusE,
];

/// The forbidden set characterizing contact B0-VPG within P5-free graphs.
pub fn p5_free_forbidden_set() -> Vec<PatternId> {
    vec![
        PatternId::K5,
        PatternId::H0,
        PatternId::GP2,
        PatternId::K33,
        PatternId::K33Star,
        PatternId::CoC6,
        PatternId::G1,
        PatternId::G2,
        PatternId::G3,
        PatternId::G4,
        PatternId::K4MinusE,
    ]
}

/// Decides contact B0-VPG membership for a graph in one of the supported
/// classes. With `Auto`, classes are tried in the order chordal,
/// tree-cograph, P4-tidy, P5-free.
pub fn decide_contact(g: &Graph, hint: ClassHint) -> Result<Decision, ClassError> {
    match hint {
        ClassHint::Chordal => {
            if !is_chordal(g).0 {
                return Err(ClassError::NotInClass("chordal"));
            }
            Ok(recognize_chordal_contact(g)?)
        }
        ClassHint::TreeCograph => {
            if is_tree_cograph(g).is_none() {
                return Err(ClassError::NotInClass("a tree-cograph"));
            }
            Ok(forbidden_decision(g, &SMALL_FORBIDDEN))
        }
        ClassHint::P4Tidy => {
            if !is_p4_tidy(g) {
                return Err(ClassError::NotInClass("P4-tidy"));
            }
            Ok(forbidden_decision(g, &SMALL_FORBIDDEN))
        }
        ClassHint::P5Free => {
            if !is_p5_free(g) {
                return Err(ClassError::NotInClass("P5-free"));
            }
            Ok(forbidden_decision(g, &p5_free_forbidden_set()))
        }
        ClassHint::Auto => {
            for h in [
                ClassHint::Chordal,
                ClassHint::TreeCograph,
                ClassHint::P4Tidy,
                ClassHint::P5Free,
            ] {
                match decide_contact(g, h) {
                    Err(ClassError::NotInClass(_)) => continue,
                    other => return other,
                }
            }
            Err(ClassError::NoSupportedClass)
        }
    }
}

fn forbidden_decision(g: &Graph, set: &[PatternId]) -> Decision {
    match find_fixed_forbidden(g, set) {
        Some(w) => Decision::No(w),
        None => Decision::Yes(MarkState::empty(g.vertex_count())),
    }
}

/// The C4-anchored normal form of a P5-free, C5-free, non-chordal contact
/// graph: either the parametric family around a dominating 4-cycle, or one
/// of the three exceptional graphs (stored as a spanning witness map).
#[derive(Debug, Clone, PartialEq)]
pub enum WStructure {
    W1 {
        /// Cycle in order a1, b1, a2, b2.
        cycle: [usize; 4],
        /// Stable, complete to {a1, a2}.
        s_a: VertexSet,
        /// Stable, complete to {b1, b2}.
        s_b: VertexSet,
        /// Simplicial degree-<=3 vertices hanging off a1.
        k_a: VertexSet,
        /// Same off b1.
        k_b: VertexSet,
        /// Clique of size <= 2 complete to {a1, b1}.
        k_ab: VertexSet,
    },
    Exceptional(Witness),
}

/// All induced 4-cycles of `g`, each as (a1, b1, a2, b2) in cycle order,
/// every dihedral labeling included.
fn induced_c4_labelings(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    for a1 in 0..n {
        for a2 in 0..n {
            if a2 == a1 || g.has_edge(a1, a2) {
                continue;
            }
            for b1 in g.neighbors(a1) {
                if b1 == a2 || !g.has_edge(b1, a2) {
                    continue;
                }
                for b2 in g.neighbors(a1) {
                    if b2 == b1 || b2 == a2 || !g.has_edge(b2, a2) || g.has_edge(b1, b2) {
                        continue;
                    }
                    out.push([a1, b1, a2, b2]);
                }
            }
        }
    }
    out
}

/// Number of 4-cliques containing `v` that avoid `excluded`.
fn k4s_through(g: &Graph, v: usize, excluded: &[usize]) -> usize {
    let nbrs: VertexSet = g
        .neighbors(v)
        .filter(|u| !excluded.contains(u))
        .collect();
    let mut count = 0;
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            for k in j + 1..nbrs.len() {
                if g.is_clique(&[nbrs[i], nbrs[j], nbrs[k]]) {
                    count += 1;
                }
            }
        }
    }
    count
}

fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nbrs: VertexSet = g.neighbors(v).collect();
    g.is_clique(&nbrs)
}

/// Attempts the parametric classification for one cycle labeling.
fn classify_w1(g: &Graph, cyc: [usize; 4]) -> Option<WStructure> {
    let [a1, b1, a2, b2] = cyc;
    let mut s_a = Vec::new();
    let mut s_b = Vec::new();
    let mut k_a = Vec::new();
    let mut k_b = Vec::new();
    let mut k_ab = Vec::new();
    for v in g.vertices() {
        if cyc.contains(&v) {
            continue;
        }
        let adj = [
            g.has_edge(v, a1),
            g.has_edge(v, b1),
            g.has_edge(v, a2),
            g.has_edge(v, b2),
        ];
        match adj {
            [true, false, true, false] => s_a.push(v),
            [false, true, false, true] => s_b.push(v),
            [true, false, false, false] => k_a.push(v),
            [false, true, false, false] => k_b.push(v),
            [true, true, false, false] => k_ab.push(v),
            _ => return None,
        }
    }
    // Edge rules between the parts: "there are no other edges".
    let stable = |set: &[usize]| {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..].iter().all(|&w| !g.has_edge(u, w))
        })
    };
    let anticomplete = |x: &[usize], y: &[usize]| {
        x.iter().all(|&u| y.iter().all(|&w| !g.has_edge(u, w)))
    };
    if !stable(&s_a) || !stable(&s_b) || !anticomplete(&s_a, &s_b) {
        return None;
    }
    for set in [&k_a, &k_b] {
        for &v in set.iter() {
            if !is_simplicial(g, v) || g.degree(v) > 3 {
                return None;
            }
        }
    }
    if !anticomplete(&k_a, &s_a)
        || !anticomplete(&k_a, &s_b)
        || !anticomplete(&k_b, &s_a)
        || !anticomplete(&k_b, &s_b)
        || !anticomplete(&k_a, &k_b)
        || !anticomplete(&k_ab, &s_a)
        || !anticomplete(&k_ab, &s_b)
        || !anticomplete(&k_ab, &k_a)
        || !anticomplete(&k_ab, &k_b)
    {
        return None;
    }
    if k_ab.len() > 2 || !g.is_clique(&k_ab) {
        return None;
    }
    // K4 caps: neither a1 nor b1 in three 4-cliques; ignoring the K_ab
    // ones, b1 in at most one and a1 in at most two.
    if k4s_through(g, a1, &[]) >= 3 || k4s_through(g, b1, &[]) >= 3 {
        return None;
    }
    if k4s_through(g, a1, &k_ab) > 2 || k4s_through(g, b1, &k_ab) > 1 {
        return None;
    }
    Some(WStructure::W1 {
        cycle: cyc,
        s_a,
        s_b,
        k_a,
        k_b,
        k_ab,
    })
}

/// Locates the C4 normal form: tries the three exceptional graphs first,
/// then every induced-C4 labeling. Failure means the advertised
/// preconditions (non-chordal, {P5, C5}-free, contact) did not hold.
pub fn extract_w_structure(g: &Graph) -> Result<WStructure, ClassError> {
    for id in [PatternId::B1, PatternId::B2, PatternId::B3] {
        let pat = crate::patterns::make_pattern(&id);
        if pat.vertex_count() == g.vertex_count() && pat.edge_count() == g.edge_count() {
            if let Some(map) = find_induced(g, &pat) {
                return Ok(WStructure::Exceptional(Witness { pattern: id, map }));
            }
        }
    }
    for cyc in induced_c4_labelings(g) {
        if let Some(w) = classify_w1(g, cyc) {
            return Ok(w);
        }
    }
    Err(ClassError::StructureNotFound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LVariant {
    L1,
    L2,
    L3,
}

/// The C5-anchored normal form: cycle a, v, b, c, w plus stable sets S_v
/// (complete to {a, b}) and S_w (complete to {a, c}); optionally a hub u
/// adjacent to a, b, c with simplicial pendants K_u; optionally a vertex z
/// adjacent to v, w, u.
#[derive(Debug, Clone, PartialEq)]
pub struct LStructure {
    /// Cycle in order a, v, b, c, w.
    pub cycle: [usize; 5],
    pub s_v: VertexSet,
    pub s_w: VertexSet,
    pub hub: Option<usize>,
    pub k_u: VertexSet,
    pub z: Option<usize>,
    pub variant: LVariant,
}

fn induced_c5_labelings(g: &Graph) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    // a, v, b, c, w with edges a-v, v-b, b-c, c-w, w-a and no chords.
    for a in 0..n {
        for v in g.neighbors(a) {
            for b in g.neighbors(v) {
                if b == a || g.has_edge(a, b) {
                    continue;
                }
                for c in g.neighbors(b) {
                    if c == a || c == v || g.has_edge(c, a) || g.has_edge(c, v) {
                        continue;
                    }
                    for w in g.neighbors(c) {
                        if w == v || w == b || w == a {
                            continue;
                        }
                        if g.has_edge(w, a) && !g.has_edge(w, v) && !g.has_edge(w, b) {
                            out.push([a, v, b, c, w]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn classify_l(g: &Graph, cyc: [usize; 5]) -> Option<LStructure> {
    let [a, v, b, c, w] = cyc;
    let mut s_v = Vec::new();
    let mut s_w = Vec::new();
    let mut hub = None;
    let mut z = None;
    let mut rest = Vec::new();
    for x in g.vertices() {
        if cyc.contains(&x) {
            continue;
        }
        let adj = [
            g.has_edge(x, a),
            g.has_edge(x, v),
            g.has_edge(x, b),
            g.has_edge(x, c),
            g.has_edge(x, w),
        ];
        match adj {
            [true, false, true, false, false] => s_v.push(x),
            [true, false, false, true, false] => s_w.push(x),
            [true, false, true, true, false] => {
                if hub.replace(x).is_some() {
                    return None;
                }
            }
            [false, true, false, false, true] => {
                if z.replace(x).is_some() {
                    return None;
                }
            }
            [false, false, false, false, false] => rest.push(x),
            _ => return None,
        }
    }
    let stable = |set: &[usize]| {
        set.iter()
            .enumerate()
            .all(|(i, &p)| set[i + 1..].iter().all(|&q| !g.has_edge(p, q)))
    };
    if !stable(&s_v) || !stable(&s_w) {
        return None;
    }
    if s_v.iter().any(|&p| s_w.iter().any(|&q| g.has_edge(p, q))) {
        return None;
    }
    let hub_v = match hub {
        None => {
            // No hub: no pendants, no z allowed.
            if !rest.is_empty() || z.is_some() {
                return None;
            }
            return Some(LStructure {
                cycle: cyc,
                s_v,
                s_w,
                hub: None,
                k_u: Vec::new(),
                z: None,
                variant: LVariant::L1,
            });
        }
        Some(u) => u,
    };
    // Every cycle-free vertex must hang off the hub, be simplicial, small.
    let k_u = rest;
    for &x in &k_u {
        if !g.has_edge(x, hub_v) || !is_simplicial(g, x) || g.degree(x) > 3 {
            return None;
        }
        if s_v.iter().chain(&s_w).any(|&q| g.has_edge(x, q)) {
            return None;
        }
        if z.map_or(false, |zz| g.has_edge(x, zz)) {
            return None;
        }
    }
    if s_v.iter().chain(&s_w).any(|&q| g.has_edge(hub_v, q)) {
        return None;
    }
    let hub_k4s = k4s_through(g, hub_v, &[]);
    match z {
        None => {
            if hub_k4s > 1 {
                return None;
            }
            Some(LStructure {
                cycle: cyc,
                s_v,
                s_w,
                hub: Some(hub_v),
                k_u,
                z: None,
                variant: LVariant::L2,
            })
        }
        Some(zv) => {
            if !g.has_edge(zv, hub_v) || !s_v.is_empty() || !s_w.is_empty() || hub_k4s > 0 {
                return None;
            }
            Some(LStructure {
                cycle: cyc,
                s_v,
                s_w,
                hub: Some(hub_v),
                k_u,
                z: Some(zv),
                variant: LVariant::L3,
            })
        }
    }
}

/// Locates the C5 normal form by trying every induced-C5 labeling.
pub fn extract_l_structure(g: &Graph) -> Result<LStructure, ClassError> {
    for cyc in induced_c5_labelings(g) {
        if let Some(l) = classify_l(g, cyc) {
            return Ok(l);
        }
    }
    Err(ClassError::StructureNotFound)
}
