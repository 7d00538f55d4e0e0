//! Deterministic generators for the structured graph families used by the
//! layout builders and test corpora, plus random tree / chordal samplers.

use rand::Rng;
use thiserror::Error;

use crate::classes::{LStructure, LVariant, SpiderKind, SpiderPartition, WStructure};
use crate::graph::{Graph, VertexSet};
use crate::patterns::BaseTree;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("spider needs k >= 2 legs, got {0}")]
    BadSpiderSize(usize),
    #[error("illegal parameters: {0}")]
    BadParams(&'static str),
}

/// Every base tree on at most five vertices with maximum degree three:
/// P2, P3, P4, the claw, P5 and the chair.
pub fn all_base_trees_le5() -> Vec<BaseTree> {
    let graphs = vec![
        Graph::path(2),
        Graph::path(3),
        Graph::path(4),
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        Graph::path(5),
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap(),
    ];
    graphs
        .into_iter()
        .map(|g| BaseTree::new(g).expect("all listed trees are legal bases"))
        .collect()
}

/// Thin spider: clique `0..k`, leg `k+i` pendant on clique vertex `i`,
/// then `r` extra vertices complete to the clique and to each other.
pub fn thin_spider(k: usize, r: usize) -> Result<(Graph, SpiderPartition), FamilyError> {
    if k < 2 {
        return Err(FamilyError::BadSpiderSize(k));
    }
    let mut edges = Graph::complete(k).edges();
    for i in 0..k {
        edges.push((i, k + i));
    }
    for x in 0..r {
        let rx = 2 * k + x;
        for c in 0..k {
            edges.push((c, rx));
        }
        for y in 0..x {
            edges.push((2 * k + y, rx));
        }
    }
    let g = Graph::from_edges(2 * k + r, &edges).unwrap();
    let part = SpiderPartition {
        s: (k..2 * k).collect(),
        c: (0..k).collect(),
        r: (2 * k..2 * k + r).collect(),
        kind: SpiderKind::Thin,
    };
    debug_assert!(part.verify(&g));
    Ok((g, part))
}

/// Thick spider: leg `k+i` adjacent to every clique vertex except `i`.
pub fn thick_spider(k: usize, r: usize) -> Result<(Graph, SpiderPartition), FamilyError> {
    if k < 2 {
        return Err(FamilyError::BadSpiderSize(k));
    }
    let mut edges = Graph::complete(k).edges();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                edges.push((j, k + i));
            }
        }
    }
    for x in 0..r {
        let rx = 2 * k + x;
        for c in 0..k {
            edges.push((c, rx));
        }
        for y in 0..x {
            edges.push((2 * k + y, rx));
        }
    }
    let g = Graph::from_edges(2 * k + r, &edges).unwrap();
    let part = SpiderPartition {
        s: (k..2 * k).collect(),
        c: (0..k).collect(),
        r: (2 * k..2 * k + r).collect(),
        kind: SpiderKind::Thick,
    };
    debug_assert!(k == 2 || part.verify(&g));
    Ok((g, part))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    True,
    False,
}

/// A spider plus one duplicated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatSpider {
    pub spider: SpiderPartition,
    /// The vertex that was duplicated.
    pub twin_of: usize,
    /// The added twin (always the last vertex).
    pub twin: usize,
    pub kind: TwinKind,
}

/// Adds a true or false twin of `twin_of` to `g`; the twin becomes the
/// last vertex.
pub fn add_twin(g: &Graph, twin_of: usize, kind: TwinKind) -> Graph {
    let n = g.vertex_count();
    let mut edges = g.edges();
    for u in g.neighbors(twin_of) {
        edges.push((u, n));
    }
    if kind == TwinKind::True {
        edges.push((twin_of, n));
    }
    Graph::from_edges(n + 1, &edges).unwrap()
}

/// Fat spider from the thin spider (k, r): duplicate leg `i` (an S vertex)
/// with a true or false twin, or — only legal for contact layouts when
/// k = 2 and r = 0 — a false twin of clique vertex `i`.
pub fn fat_thin_spider(
    k: usize,
    r: usize,
    of_clique: bool,
    i: usize,
    kind: TwinKind,
) -> Result<(Graph, FatSpider), FamilyError> {
    let (g, spider) = thin_spider(k, r)?;
    if i >= k {
        return Err(FamilyError::BadParams("twin index out of range"));
    }
    let twin_of = if of_clique { spider.c[i] } else { spider.s[i] };
    let fat = add_twin(&g, twin_of, kind);
    let twin = fat.vertex_count() - 1;
    Ok((
        fat,
        FatSpider {
            spider,
            twin_of,
            twin,
            kind,
        },
    ))
}

/// Parameters of a C4-anchored family instance. `groups_a` / `groups_b`
/// are the clique groups of pendant simplicial vertices at a1 / b1, each
/// of size 1..=3 (a group of 3 forms a K4 with its anchor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WParams {
    pub s_a: usize,
    pub s_b: usize,
    pub groups_a: Vec<usize>,
    pub groups_b: Vec<usize>,
    pub k_ab: usize,
}

/// Builds the instance and its structure. Vertex order: a1, b1, a2, b2,
/// then S_a, S_b, the K_a groups, the K_b groups, K_ab.
pub fn w1_instance(p: &WParams) -> Result<(Graph, WStructure), FamilyError> {
    for &s in p.groups_a.iter().chain(&p.groups_b) {
        if s == 0 || s > 3 {
            return Err(FamilyError::BadParams("pendant group size must be 1..=3"));
        }
    }
    if p.k_ab > 2 {
        return Err(FamilyError::BadParams("K_ab is a clique of size at most two"));
    }
    let big_a = p.groups_a.iter().filter(|&&s| s == 3).count();
    let big_b = p.groups_b.iter().filter(|&&s| s == 3).count();
    let ab_k4 = usize::from(p.k_ab == 2);
    if big_a > 2 || big_b > 1 || big_a + ab_k4 > 2 || big_b + ab_k4 > 2 {
        return Err(FamilyError::BadParams("too many K4s through a1 or b1"));
    }
    let (a1, b1, a2, b2) = (0usize, 1usize, 2usize, 3usize);
    let mut edges = vec![(a1, b1), (b1, a2), (a2, b2), (b2, a1)];
    let mut next = 4usize;
    let mut grab = |count: usize| -> VertexSet {
        let out: VertexSet = (next..next + count).collect();
        next += count;
        out
    };
    let s_a = grab(p.s_a);
    let s_b = grab(p.s_b);
    for &v in &s_a {
        edges.push((v, a1));
        edges.push((v, a2));
    }
    for &v in &s_b {
        edges.push((v, b1));
        edges.push((v, b2));
    }
    let mut k_a = Vec::new();
    for &sz in &p.groups_a {
        let grp = grab(sz);
        for (i, &u) in grp.iter().enumerate() {
            edges.push((u, a1));
            for &w in &grp[i + 1..] {
                edges.push((u, w));
            }
        }
        k_a.extend(grp);
    }
    let mut k_b = Vec::new();
    for &sz in &p.groups_b {
        let grp = grab(sz);
        for (i, &u) in grp.iter().enumerate() {
            edges.push((u, b1));
            for &w in &grp[i + 1..] {
                edges.push((u, w));
            }
        }
        k_b.extend(grp);
    }
    let k_ab = grab(p.k_ab);
    for (i, &u) in k_ab.iter().enumerate() {
        edges.push((u, a1));
        edges.push((u, b1));
        for &w in &k_ab[i + 1..] {
            edges.push((u, w));
        }
    }
    let g = Graph::from_edges(next, &edges).unwrap();
    Ok((
        g,
        WStructure::W1 {
            cycle: [a1, b1, a2, b2],
            s_a,
            s_b,
            k_a,
            k_b,
            k_ab,
        },
    ))
}

/// Parameters of a C5-anchored family instance. `groups_u` are the clique
/// groups of pendants at the hub, each of size 1..=3, at most one of size 3
/// (the hub may lie in at most one K4); `z` requires empty stable sets, a
/// hub, and no size-3 group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LParams {
    pub s_v: usize,
    pub s_w: usize,
    pub hub: bool,
    pub groups_u: Vec<usize>,
    pub z: bool,
}

/// Builds the instance and its structure. Vertex order: a, v, b, c, w,
/// then S_v, S_w, the hub, the K_u groups, z.
pub fn l_instance(p: &LParams) -> Result<(Graph, LStructure), FamilyError> {
    if !p.hub && (!p.groups_u.is_empty() || p.z) {
        return Err(FamilyError::BadParams("pendants and z require the hub"));
    }
    for &s in &p.groups_u {
        if s == 0 || s > 3 {
            return Err(FamilyError::BadParams("pendant group size must be 1..=3"));
        }
    }
    if p.groups_u.iter().filter(|&&s| s == 3).count() > 1 {
        return Err(FamilyError::BadParams("hub may lie in at most one K4"));
    }
    if p.z && (p.s_v > 0 || p.s_w > 0 || p.groups_u.iter().any(|&s| s == 3)) {
        return Err(FamilyError::BadParams(
            "z requires empty stable sets and a K4-free hub",
        ));
    }
    let (a, v, b, c, w) = (0usize, 1usize, 2usize, 3usize, 4usize);
    let mut edges = vec![(a, v), (v, b), (b, c), (c, w), (w, a)];
    let mut next = 5usize;
    let mut grab = |count: usize| -> VertexSet {
        let out: VertexSet = (next..next + count).collect();
        next += count;
        out
    };
    let s_v = grab(p.s_v);
    let s_w = grab(p.s_w);
    for &x in &s_v {
        edges.push((x, a));
        edges.push((x, b));
    }
    for &x in &s_w {
        edges.push((x, a));
        edges.push((x, c));
    }
    let mut hub = None;
    let mut k_u = Vec::new();
    if p.hub {
        let u = grab(1)[0];
        hub = Some(u);
        edges.extend([(u, a), (u, b), (u, c)]);
        for &sz in &p.groups_u {
            let grp = grab(sz);
            for (i, &x) in grp.iter().enumerate() {
                edges.push((x, u));
                for &y in &grp[i + 1..] {
                    edges.push((x, y));
                }
            }
            k_u.extend(grp);
        }
    }
    let mut z = None;
    let variant = if p.z {
        let zv = grab(1)[0];
        edges.extend([(zv, v), (zv, w), (zv, hub.unwrap())]);
        z = Some(zv);
        LVariant::L3
    } else if p.hub {
        LVariant::L2
    } else {
        LVariant::L1
    };
    let g = Graph::from_edges(next, &edges).unwrap();
    Ok((
        g,
        LStructure {
            cycle: [a, v, b, c, w],
            s_v,
            s_w,
            hub,
            k_u,
            z,
            variant,
        },
    ))
}

/// Uniform random labeled tree via a random parent for each vertex among
/// the earlier ones (not uniform over tree shapes, but covers them all).
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random chordal graph: each new vertex attaches to a random clique
/// inside the closed neighborhood of a random earlier vertex, so every
/// vertex is simplicial at insertion time. `density` in [0, 1] biases
/// clique growth; small values give forests, large values dense blocks.
pub fn random_chordal<R: Rng>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        // occasionally start a fresh component
        if rng.gen_bool(0.1) {
            continue;
        }
        let seed = rng.gen_range(0..v);
        let mut clique = vec![seed];
        let mut candidates: Vec<usize> = g.neighbors(seed).filter(|&u| u < v).collect();
        while !candidates.is_empty() && rng.gen_bool(density) {
            let pick = candidates[rng.gen_range(0..candidates.len())];
            clique.push(pick);
            candidates.retain(|&u| u != pick && g.has_edge(u, pick));
        }
        for &u in &clique {
            edges.push((u, v));
        }
        g = Graph::from_edges(n, &edges).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;
    use crate::classes::{
        decide_contact, extract_l_structure, extract_w_structure, spider_partition,
        ClassHint,
    };
    use crate::patterns::{find_k4_minus_e, find_induced, PatternId};
    use rand::SeedableRng;

    #[test]
    fn base_tree_catalog() {
        let bases = all_base_trees_le5();
        assert_eq!(bases.len(), 6);
        let sizes: Vec<usize> = bases.iter().map(|b| b.graph().vertex_count()).collect();
        assert_eq!(sizes, vec![2, 3, 4, 4, 5, 5]);
        for b in &bases {
            assert!(b.graph().vertices().all(|v| b.graph().degree(v) <= 3));
        }
    }

    #[test]
    fn spiders_round_trip() {
        for k in 2..=4 {
            let (g, part) = thin_spider(k, 0).unwrap();
            assert_eq!(spider_partition(&g), Some(part));
        }
        for k in 3..=4 {
            let (g, part) = thick_spider(k, 0).unwrap();
            assert_eq!(spider_partition(&g), Some(part));
        }
        // thin spider with the legal R variants
        let (g, p) = thin_spider(3, 1).unwrap();
        assert!(p.verify(&g));
        let (g, p) = thin_spider(2, 2).unwrap();
        assert!(p.verify(&g));
        assert!(thin_spider(1, 0).is_err());
    }

    #[test]
    fn spider_contact_verdicts() {
        // Thin spiders with clique size at most four are contact.
        for (k, r) in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (4, 0)] {
            let (g, _) = thin_spider(k, r).unwrap();
            assert!(
                decide_contact(&g, ClassHint::P4Tidy).unwrap().is_yes(),
                "thin k={k} r={r}"
            );
        }
        // Thick spiders with k >= 3 contain K4-e.
        for k in 3..=4 {
            let (g, _) = thick_spider(k, 0).unwrap();
            assert!(find_k4_minus_e(&g).is_some());
        }
    }

    #[test]
    fn fat_spider_instances() {
        // False twin of an S vertex: two legs on one clique vertex.
        let (g, fat) = fat_thin_spider(3, 0, false, 0, TwinKind::False).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.degree(fat.twin), 1);
        assert!(decide_contact(&g, ClassHint::P4Tidy).unwrap().is_yes());

        // True twin of an S vertex: triangle hanging off the clique.
        let (g, _) = fat_thin_spider(3, 0, false, 0, TwinKind::True).unwrap();
        assert!(decide_contact(&g, ClassHint::P4Tidy).unwrap().is_yes());

        // False twin of a C vertex, k = 2, R empty: allowed and contact.
        let (g, _) = fat_thin_spider(2, 0, true, 0, TwinKind::False).unwrap();
        assert!(decide_contact(&g, ClassHint::P4Tidy).unwrap().is_yes());

        // True twin of a C vertex creates K4-e.
        let (g, _) = fat_thin_spider(3, 0, true, 0, TwinKind::True).unwrap();
        assert!(find_k4_minus_e(&g).is_some());
    }

    #[test]
    fn w1_instances_round_trip() {
        let p = WParams {
            s_a: 2,
            s_b: 1,
            groups_a: vec![3, 2],
            groups_b: vec![3],
            k_ab: 1,
        };
        let (g, structure) = w1_instance(&p).unwrap();
        let extracted = extract_w_structure(&g).unwrap();
        // Some relabeling is allowed; both must classify as W1.
        assert!(matches!(extracted, WStructure::W1 { .. }));
        if let WStructure::W1 { s_a, k_a, k_ab, .. } = &structure {
            assert_eq!(s_a.len(), 2);
            assert_eq!(k_a.len(), 5);
            assert_eq!(k_ab.len(), 1);
        }
        // Instances stay inside the P5-free contact class.
        let d = decide_contact(&g, ClassHint::P5Free).unwrap();
        assert!(d.is_yes());

        assert!(w1_instance(&WParams {
            s_a: 0,
            s_b: 0,
            groups_a: vec![3, 3, 3],
            groups_b: vec![],
            k_ab: 0,
        })
        .is_err());
        // b1 in one pendant K4 plus the K_ab K4 is allowed (two total)...
        let (g, _) = w1_instance(&WParams {
            s_a: 0,
            s_b: 0,
            groups_a: vec![],
            groups_b: vec![3],
            k_ab: 2,
        })
        .unwrap();
        assert!(decide_contact(&g, ClassHint::P5Free).unwrap().is_yes());
        // ...but two pendant K4s at b1 are not.
        assert!(w1_instance(&WParams {
            s_a: 0,
            s_b: 0,
            groups_a: vec![],
            groups_b: vec![3, 3],
            k_ab: 0,
        })
        .is_err());
    }

    #[test]
    fn l_instances_round_trip() {
        for p in [
            LParams { s_v: 0, s_w: 0, hub: false, groups_u: vec![], z: false },
            LParams { s_v: 2, s_w: 1, hub: false, groups_u: vec![], z: false },
            LParams { s_v: 1, s_w: 1, hub: true, groups_u: vec![3, 2], z: false },
            LParams { s_v: 0, s_w: 0, hub: true, groups_u: vec![2], z: true },
        ] {
            let (g, structure) = l_instance(&p).unwrap();
            let extracted = extract_l_structure(&g).unwrap();
            assert_eq!(extracted.variant, structure.variant, "{p:?}");
            let d = decide_contact(&g, ClassHint::P5Free).unwrap();
            assert!(d.is_yes(), "{p:?}");
        }
        assert!(l_instance(&LParams {
            s_v: 1,
            s_w: 0,
            hub: true,
            groups_u: vec![],
            z: true,
        })
        .is_err());
        assert!(l_instance(&LParams {
            s_v: 0,
            s_w: 0,
            hub: false,
            groups_u: vec![1],
            z: false,
        })
        .is_err());
    }

    #[test]
    fn random_generators_shape() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in [1usize, 5, 9] {
            let t = random_tree(n, &mut rng);
            assert!(t.is_tree(), "n={n}");
        }
        for _ in 0..50 {
            let g = random_chordal(10, 0.6, &mut rng);
            assert!(is_chordal(&g).0);
        }
        // the sampler actually produces K4s sometimes
        let mut saw_k4 = false;
        for _ in 0..80 {
            let g = random_chordal(12, 0.9, &mut rng);
            if find_induced(&g, &crate::patterns::make_pattern(&PatternId::K5))
                .is_none()
                && find_induced(&g, &Graph::complete(4)).is_some()
            {
                saw_k4 = true;
                break;
            }
        }
        assert!(saw_k4);
    }
}
