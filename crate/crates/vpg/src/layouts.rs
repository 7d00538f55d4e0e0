//! Grid layouts for accepted graphs outside the plain chordal builder:
//! tree-cographs (by their decomposition), spiders and fat spiders, and the
//! two anchored normal forms of non-chordal P5-free contact graphs (around
//! a dominating C4 or C5). Chordal sub-cases are delegated to
//! `represent_chordal`; everything else is placed by explicit coordinates
//! and re-validated before returning.

use crate::build::{represent_chordal, represent_tree, BuildError};
use crate::chordal::is_chordal;
use crate::classes::{
    extract_l_structure, extract_w_structure, is_tree_cograph, LStructure, LVariant, SpiderKind,
    SpiderPartition, TreeCographDecomp, WStructure,
};
use crate::families::FatSpider;
use crate::graph::Graph;
use crate::patterns::{find_induced, PatternId};
use crate::rep::{GridRepresentation, Orientation, PathSeg};

/// A structural certificate that pins down how to draw the graph.
#[derive(Debug, Clone)]
pub enum ClassStructure {
    TreeCograph(TreeCographDecomp),
    Spider(SpiderPartition),
    FatSpider(FatSpider),
    /// C4-anchored normal form (incl. the three exceptional graphs).
    W(WStructure),
    /// C5-anchored normal form.
    L(LStructure),
}

/// Layout fragments carry original vertex ids alongside their segments.
type Placed = Vec<(usize, PathSeg)>;

/// Builds a validated representation of `g` from its structure. Errors with
/// `StructureMismatch` whenever the structure does not actually describe
/// the graph (or describes a graph with no contact layout).
pub fn represent_class(g: &Graph, s: &ClassStructure) -> Result<GridRepresentation, BuildError> {
    let placed = match s {
        ClassStructure::TreeCograph(d) => {
            let verts = d.vertices();
            if verts != g.vertices().collect::<Vec<_>>() {
                return Err(BuildError::StructureMismatch);
            }
            layout_tc(g, d)?
        }
        ClassStructure::Spider(sp) => layout_spider(g, sp)?,
        ClassStructure::FatSpider(fs) => layout_fat_spider(g, fs)?,
        ClassStructure::W(ws) => layout_w(g, ws)?,
        ClassStructure::L(ls) => layout_l(g, ls)?,
    };
    finish(g, placed)
}

fn finish(g: &Graph, placed: Placed) -> Result<GridRepresentation, BuildError> {
    let mut paths: Vec<Option<PathSeg>> = vec![None; g.vertex_count()];
    for (v, s) in placed {
        if v >= paths.len() || paths[v].is_some() {
            return Err(BuildError::StructureMismatch);
        }
        paths[v] = Some(s);
    }
    let paths: Option<Vec<PathSeg>> = paths.into_iter().collect();
    let Some(paths) = paths else {
        return Err(BuildError::StructureMismatch);
    };
    let mut rep = GridRepresentation::new(paths);
    rep.normalize();
    if !rep.is_valid(g) {
        return Err(BuildError::StructureMismatch);
    }
    Ok(rep)
}

fn shift(segs: &mut Placed, dr: i64, dc: i64) {
    for (_, s) in segs.iter_mut() {
        match s.orient {
            Orientation::Horizontal => {
                s.line += dr;
                s.lo += dc;
                s.hi += dc;
            }
            Orientation::Vertical => {
                s.line += dc;
                s.lo += dr;
                s.hi += dr;
            }
        }
    }
}

fn bounds(segs: &Placed) -> (i64, i64, i64, i64) {
    let (mut r0, mut c0, mut r1, mut c1) = (i64::MAX, i64::MAX, i64::MIN, i64::MIN);
    for (_, s) in segs {
        for (r, c) in s.endpoints() {
            r0 = r0.min(r);
            c0 = c0.min(c);
            r1 = r1.max(r);
            c1 = c1.max(c);
        }
    }
    (r0, c0, r1, c1)
}

/// Stacks fragments left to right, two empty columns apart.
fn beside(parts: Vec<Placed>) -> Placed {
    let mut out = Vec::new();
    let mut col = 0i64;
    for mut p in parts {
        if p.is_empty() {
            continue;
        }
        let (r0, c0, _, c1) = bounds(&p);
        shift(&mut p, -r0, col - c0);
        col += c1 - c0 + 2;
        out.extend(p);
    }
    out
}

/// Lifts a representation of an induced subgraph back to original ids.
fn lift(rep: GridRepresentation, map: &[usize]) -> Placed {
    map.iter().copied().zip(rep.paths).collect()
}

/// Builds a validated representation of an accepted graph without being
/// handed its structure: per connected component, tries the chordal
/// builder, the tree-cograph decomposition, and the two anchored normal
/// forms of non-chordal P5-free contact graphs. Fails with
/// `StructureMismatch` when none of them applies (in particular whenever
/// the graph is not a contact graph of one of the supported classes).
pub fn represent_any(g: &Graph) -> Result<GridRepresentation, BuildError> {
    let mut parts = Vec::new();
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        parts.push(lift(represent_component(&sub)?, &map));
    }
    finish(g, beside(parts))
}

fn represent_component(g: &Graph) -> Result<GridRepresentation, BuildError> {
    if is_chordal(g).0 {
        return represent_chordal(g);
    }
    if let Some(d) = is_tree_cograph(g) {
        return represent_class(g, &ClassStructure::TreeCograph(d));
    }
    let s = if find_induced(g, &Graph::cycle(5)).is_some() {
        ClassStructure::L(extract_l_structure(g).map_err(|_| BuildError::StructureMismatch)?)
    } else {
        ClassStructure::W(extract_w_structure(g).map_err(|_| BuildError::StructureMismatch)?)
    };
    represent_class(g, &s)
}

// ---------------------------------------------------------------------------
// Tree-cographs
// ---------------------------------------------------------------------------

fn layout_tc(g: &Graph, d: &TreeCographDecomp) -> Result<Placed, BuildError> {
    match d {
        TreeCographDecomp::LeafTree(vs) => {
            let (sub, map) = g.induced_subgraph(vs)?;
            Ok(lift(represent_tree(&sub)?, &map))
        }
        TreeCographDecomp::LeafCoTree(vs) => layout_co_tree(g, vs),
        TreeCographDecomp::Union(children) => {
            let parts: Result<Vec<_>, _> = children.iter().map(|c| layout_tc(g, c)).collect();
            Ok(beside(parts?))
        }
        // The join is classified directly from the induced graph: every
        // accepted join is chordal except complete bipartite K_{2,m}.
        TreeCographDecomp::Join(_) => layout_join(g, &d.vertices()),
    }
}

/// An accepted co-tree has components that are cliques on at most four
/// vertices, a path, or the complement of a path on five vertices.
fn layout_co_tree(g: &Graph, vs: &[usize]) -> Result<Placed, BuildError> {
    let (sub, map) = g.induced_subgraph(vs)?;
    let mut parts = Vec::new();
    for comp in sub.connected_components() {
        let local = component_layout(&sub, &comp).ok_or(BuildError::StructureMismatch)?;
        parts.push(
            local
                .into_iter()
                .map(|(i, s)| (map[i], s))
                .collect::<Placed>(),
        );
    }
    Ok(beside(parts))
}

fn component_layout(h: &Graph, comp: &[usize]) -> Option<Placed> {
    if h.is_clique(comp) {
        return clique_layout(comp);
    }
    let (sub, map) = h.induced_subgraph(comp).ok()?;
    if sub.is_tree() {
        return Some(lift(represent_tree(&sub).ok()?, &map));
    }
    house_layout(h, comp)
}

/// Cliques up to K4 drawn around one shared point.
fn clique_layout(vs: &[usize]) -> Option<Placed> {
    Some(match *vs {
        [a] => vec![(a, PathSeg::h(0, 0, 1))],
        [a, b] => vec![(a, PathSeg::h(0, 0, 1)), (b, PathSeg::h(0, 1, 2))],
        [a, b, c] => vec![
            (a, PathSeg::h(0, 0, 1)),
            (b, PathSeg::h(0, 1, 2)),
            (c, PathSeg::v(1, 0, 1)),
        ],
        [a, b, c, d] => vec![
            (a, PathSeg::h(0, 0, 1)),
            (b, PathSeg::h(0, 1, 2)),
            (c, PathSeg::v(1, -1, 0)),
            (d, PathSeg::v(1, 0, 1)),
        ],
        _ => return None,
    })
}

/// The complement of a path on five vertices: a 4-cycle plus an apex over
/// one of its edges.
fn house_layout(h: &Graph, comp: &[usize]) -> Option<Placed> {
    if comp.len() != 5 {
        return None;
    }
    let deg = |v: usize| comp.iter().filter(|&&u| h.has_edge(v, u)).count();
    let tops: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) == 3).collect();
    let [t1, t2] = tops[..] else { return None };
    if !h.has_edge(t1, t2) {
        return None;
    }
    let apex = comp
        .iter()
        .copied()
        .find(|&v| deg(v) == 2 && h.has_edge(v, t1) && h.has_edge(v, t2))?;
    let rest: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&v| v != t1 && v != t2 && v != apex)
        .collect();
    let [q1, q2] = rest[..] else { return None };
    let (q1, q2) = if h.has_edge(q1, t1) { (q1, q2) } else { (q2, q1) };
    Some(vec![
        (t1, PathSeg::h(0, 0, 2)),
        (t2, PathSeg::v(2, 0, 2)),
        (apex, PathSeg::v(2, -2, 0)),
        (q1, PathSeg::v(0, 0, 2)),
        (q2, PathSeg::h(2, 0, 2)),
    ])
}

fn layout_join(g: &Graph, vs: &[usize]) -> Result<Placed, BuildError> {
    let (sub, map) = g.induced_subgraph(vs)?;
    if is_chordal(&sub).0 {
        return Ok(lift(represent_chordal(&sub)?, &map));
    }
    let local = k2m_layout(&sub).ok_or(BuildError::StructureMismatch)?;
    Ok(local.into_iter().map(|(i, s)| (map[i], s)).collect())
}

/// Complete bipartite K_{2,m}: two vertical rails and m horizontal rungs
/// ending on their interiors.
fn k2m_layout(h: &Graph) -> Option<Placed> {
    let n = h.vertex_count();
    if n < 4 {
        return None;
    }
    // Vertex 0's part is itself plus its non-neighbors; one part must have
    // exactly two vertices, and the graph must be complete bipartite.
    let side_a: Vec<usize> = (0..n).filter(|&v| v == 0 || !h.has_edge(0, v)).collect();
    let side_b: Vec<usize> = (0..n).filter(|&v| v != 0 && h.has_edge(0, v)).collect();
    for &a in &side_a {
        for &b in &side_b {
            if !h.has_edge(a, b) {
                return None;
            }
        }
    }
    if h.edge_count() != side_a.len() * side_b.len() {
        return None;
    }
    let (rails, rungs) = match (side_a.len(), side_b.len()) {
        (2, _) => (side_a, side_b),
        (_, 2) => (side_b, side_a),
        _ => return None,
    };
    let [u1, u2] = rails[..] else { return None };
    let m = rungs.len() as i64;
    let mut out = vec![
        (u1, PathSeg::v(0, 0, m + 1)),
        (u2, PathSeg::v(2, 0, m + 1)),
    ];
    for (i, &v) in rungs.iter().enumerate() {
        out.push((v, PathSeg::h(1 + i as i64, 0, 2)));
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// Spiders
// ---------------------------------------------------------------------------

/// Clique slots around the point (1, 1) and the matching leg positions.
/// Slot i's leg ends on the interior of slot i's path.
fn spider_slots() -> ([PathSeg; 4], [PathSeg; 4]) {
    (
        [
            PathSeg::h(1, 0, 1),
            PathSeg::h(1, 1, 2),
            PathSeg::v(1, 0, 1),
            PathSeg::v(1, 1, 2),
        ],
        [
            PathSeg::v(0, 1, 2),
            PathSeg::v(2, 0, 1),
            PathSeg::h(0, 0, 1),
            PathSeg::h(2, 1, 2),
        ],
    )
}

fn layout_spider(g: &Graph, sp: &SpiderPartition) -> Result<Placed, BuildError> {
    let k = sp.k();
    if !sp.verify(g)
        || (sp.kind == SpiderKind::Thick && k > 2)
        || k + sp.r.len() > 4
        || !g.is_clique(&sp.r)
    {
        return Err(BuildError::StructureMismatch);
    }
    let (c_slots, legs) = spider_slots();
    let mut out = Vec::new();
    for (i, &cv) in sp.c.iter().enumerate() {
        out.push((cv, c_slots[i]));
    }
    for (i, &sv) in sp.s.iter().enumerate() {
        // Thin spiders pair s[i] with c[i]; a thick spider with k = 2 is the
        // same graph with the pairing swapped.
        let j = if sp.kind == SpiderKind::Thin { i } else { 1 - i };
        out.push((sv, legs[j]));
    }
    for (j, &rv) in sp.r.iter().enumerate() {
        out.push((rv, c_slots[k + j]));
    }
    Ok(out)
}

fn layout_fat_spider(g: &Graph, fs: &FatSpider) -> Result<Placed, BuildError> {
    let sp = &fs.spider;
    if fs.twin != g.vertex_count() - 1 {
        return Err(BuildError::StructureMismatch);
    }
    if sp.s.contains(&fs.twin_of) {
        // Duplicating a leg keeps the graph chordal either way.
        return Ok(lift(represent_chordal(g)?, &(0..g.vertex_count()).collect::<Vec<_>>()));
    }
    // The only non-chordal fat spider with a layout: a false twin of a
    // clique vertex of the two-legged thin spider, closing a 4-cycle.
    if !sp.c.contains(&fs.twin_of) || sp.k() != 2 || !sp.r.is_empty() {
        return Err(BuildError::StructureMismatch);
    }
    let c1 = fs.twin_of;
    let t = fs.twin;
    let &c2 = sp.c.iter().find(|&&v| v != c1).unwrap();
    let i1 = sp.c.iter().position(|&v| v == c1).unwrap();
    let s1 = sp.s[i1];
    let s2 = sp.s[1 - i1];
    Ok(vec![
        (c1, PathSeg::h(0, 0, 2)),
        (t, PathSeg::h(2, 0, 2)),
        (s1, PathSeg::v(0, 0, 2)),
        (c2, PathSeg::v(2, 0, 2)),
        (s2, PathSeg::h(1, 2, 3)),
    ])
}

// ---------------------------------------------------------------------------
// C4-anchored normal form
// ---------------------------------------------------------------------------

/// Splits a set of simplicial pendants into its clique groups (connected
/// components); each must be a clique on at most three vertices.
fn clique_groups(g: &Graph, set: &[usize]) -> Result<Vec<Vec<usize>>, BuildError> {
    let (sub, map) = g.induced_subgraph(set)?;
    let mut out = Vec::new();
    for comp in sub.connected_components() {
        let orig: Vec<usize> = comp.iter().map(|&i| map[i]).collect();
        if orig.len() > 3 || !g.is_clique(&orig) {
            return Err(BuildError::StructureMismatch);
        }
        out.push(orig);
    }
    Ok(out)
}

/// Fixed layout of the three exceptional graphs: slot i draws pattern
/// vertex i (the 4-cycle a1 b1 a2 b2, the two ears, then their K4 mates).
const EXCEPTIONAL_SLOTS: [PathSeg; 8] = [
    PathSeg { orient: Orientation::Horizontal, line: 2, lo: 1, hi: 4 },
    PathSeg { orient: Orientation::Vertical, line: 1, lo: 0, hi: 2 },
    PathSeg { orient: Orientation::Horizontal, line: 0, lo: 1, hi: 4 },
    PathSeg { orient: Orientation::Vertical, line: 4, lo: 0, hi: 2 },
    PathSeg { orient: Orientation::Horizontal, line: 2, lo: 0, hi: 1 },
    PathSeg { orient: Orientation::Horizontal, line: 0, lo: 4, hi: 5 },
    PathSeg { orient: Orientation::Vertical, line: 1, lo: 2, hi: 3 },
    PathSeg { orient: Orientation::Vertical, line: 4, lo: -1, hi: 0 },
];

fn layout_w(g: &Graph, ws: &WStructure) -> Result<Placed, BuildError> {
    match ws {
        WStructure::Exceptional(w) => {
            let count = match w.pattern {
                PatternId::B1 => 6,
                PatternId::B2 => 7,
                PatternId::B3 => 8,
                _ => return Err(BuildError::StructureMismatch),
            };
            if w.map.len() != count || g.vertex_count() != count || !w.validate(g) {
                return Err(BuildError::StructureMismatch);
            }
            Ok(w.map.iter().copied().zip(EXCEPTIONAL_SLOTS).collect())
        }
        WStructure::W1 { cycle, s_a, s_b, k_a, k_b, k_ab } => {
            layout_w1(g, *cycle, s_a, s_b, k_a, k_b, k_ab)
        }
    }
}

fn layout_w1(
    g: &Graph,
    cycle: [usize; 4],
    s_a: &[usize],
    s_b: &[usize],
    k_a: &[usize],
    k_b: &[usize],
    k_ab: &[usize],
) -> Result<Placed, BuildError> {
    let [a1, b1, a2, b2] = cycle;
    let groups_a = clique_groups(g, k_a)?;
    let groups_b = clique_groups(g, k_b)?;
    let (big_a, small_a): (Vec<_>, Vec<_>) = groups_a.into_iter().partition(|grp| grp.len() == 3);
    let (big_b, small_b): (Vec<_>, Vec<_>) = groups_b.into_iter().partition(|grp| grp.len() == 3);
    if k_ab.len() > 2 || big_b.len() > 1 || big_a.len() + usize::from(k_ab.len() == 2) > 2 {
        return Err(BuildError::StructureMismatch);
    }

    let sa = s_a.len() as i64;
    let sb = s_b.len() as i64;
    let cb1 = 2i64; // b1's column
    let cb2 = cb1 + sa + 1; // b2's column, past the S_a tips
    let rt2 = sb + 2; // b2's bottom, past the S_b rows
    let rt_b = sb + 3 + small_b.len() as i64; // b1's bottom
    let mut out: Placed = vec![
        (b1, PathSeg::v(cb1, 0, rt_b)),
        (b2, PathSeg::v(cb2, 0, rt2)),
        (a2, PathSeg::h(1, cb1, cb2)),
    ];
    for (m, &x) in s_a.iter().enumerate() {
        out.push((x, PathSeg::v(cb1 + 1 + m as i64, 0, 1)));
    }
    for (m, &x) in s_b.iter().enumerate() {
        out.push((x, PathSeg::h(2 + m as i64, cb1, cb2)));
    }
    // Small K_b groups meet on b1's interior, one row each; a K4 group forms
    // a four-way star at b1's bottom endpoint.
    for (i, grp) in small_b.iter().enumerate() {
        let row = sb + 3 + i as i64;
        out.push((grp[0], PathSeg::h(row, cb1 - 1, cb1)));
        if let Some(&x) = grp.get(1) {
            out.push((x, PathSeg::h(row, cb1, cb1 + 1)));
        }
    }
    if let Some(grp) = big_b.first() {
        out.push((grp[0], PathSeg::v(cb1, rt_b, rt_b + 1)));
        out.push((grp[1], PathSeg::h(rt_b, cb1 - 1, cb1)));
        out.push((grp[2], PathSeg::h(rt_b, cb1, cb1 + 1)));
    }

    // a1 runs along row 0. Small K_a groups touch its interior right of b2;
    // K4 groups take its endpoints, the K_ab clique the left one.
    let mut col = cb2 + 1;
    for grp in &small_a {
        out.push((grp[0], PathSeg::v(col, 0, 1)));
        if let Some(&x) = grp.get(1) {
            out.push((x, PathSeg::v(col, -1, 0)));
        }
        col += 1;
    }
    let cr = col;
    if let Some(grp) = big_a.first() {
        out.push((grp[0], PathSeg::h(0, cr, cr + 1)));
        out.push((grp[1], PathSeg::v(cr, -1, 0)));
        out.push((grp[2], PathSeg::v(cr, 0, 1)));
    }
    let cl = if k_ab.len() == 2 {
        out.push((k_ab[0], PathSeg::v(cb1, -2, 0)));
        out.push((k_ab[1], PathSeg::h(0, cb1 - 2, cb1)));
        cb1
    } else {
        if let Some(&x) = k_ab.first() {
            out.push((x, PathSeg::v(cb1, -2, 0)));
        }
        let cl = cb1 - 1;
        if let Some(grp) = big_a.get(1) {
            out.push((grp[0], PathSeg::h(0, cl - 1, cl)));
            out.push((grp[1], PathSeg::v(cl, -1, 0)));
            out.push((grp[2], PathSeg::v(cl, 0, 1)));
        }
        cl
    };
    out.push((a1, PathSeg::h(0, cl, cr)));
    Ok(out)
}

// ---------------------------------------------------------------------------
// C5-anchored normal form
// ---------------------------------------------------------------------------

fn layout_l(g: &Graph, ls: &LStructure) -> Result<Placed, BuildError> {
    let [a, v, b, c, w] = ls.cycle;
    let expected = match ls.variant {
        LVariant::L1 => ls.hub.is_none() && ls.z.is_none(),
        LVariant::L2 => ls.hub.is_some() && ls.z.is_none(),
        LVariant::L3 => ls.hub.is_some() && ls.z.is_some(),
    };
    if !expected || (ls.hub.is_none() && !ls.k_u.is_empty()) {
        return Err(BuildError::StructureMismatch);
    }
    let groups_u = clique_groups(g, &ls.k_u)?;
    let (big_u, small_u): (Vec<_>, Vec<_>) = groups_u.into_iter().partition(|grp| grp.len() == 3);
    if big_u.len() > 1 {
        return Err(BuildError::StructureMismatch);
    }

    if let Some(z) = ls.z {
        // The closed variant: three long horizontals sealed by a vertical on
        // the right; requires empty stable sets and no K4 at the hub.
        if !ls.s_v.is_empty() || !ls.s_w.is_empty() || !big_u.is_empty() {
            return Err(BuildError::StructureMismatch);
        }
        let u = ls.hub.unwrap();
        let m = 3 + small_u.len() as i64;
        let mut out: Placed = vec![
            (a, PathSeg::v(0, 0, 4)),
            (v, PathSeg::h(0, 0, m)),
            (b, PathSeg::v(2, 0, 2)),
            (c, PathSeg::v(2, 2, 4)),
            (w, PathSeg::h(4, 0, m)),
            (u, PathSeg::h(2, 0, m)),
            (z, PathSeg::v(m, 0, 4)),
        ];
        for (i, grp) in small_u.iter().enumerate() {
            let col = 3 + i as i64;
            out.push((grp[0], PathSeg::v(col, 1, 2)));
            if let Some(&x) = grp.get(1) {
                out.push((x, PathSeg::v(col, 2, 3)));
            }
        }
        return Ok(out);
    }

    let sv = ls.s_v.len() as i64;
    let sw = ls.s_w.len() as i64;
    let xt = sv + 1; // row where b meets c
    let xl = xt + sw + 1; // w's row
    let mut out: Placed = vec![
        (a, PathSeg::v(0, 0, xl)),
        (v, PathSeg::h(0, 0, 2)),
        (b, PathSeg::v(2, 0, xt)),
        (c, PathSeg::v(2, xt, xl)),
        (w, PathSeg::h(xl, 0, 2)),
    ];
    for (m, &x) in ls.s_v.iter().enumerate() {
        out.push((x, PathSeg::h(1 + m as i64, 0, 2)));
    }
    for (m, &x) in ls.s_w.iter().enumerate() {
        out.push((x, PathSeg::h(xt + 1 + m as i64, 0, 2)));
    }
    if let Some(u) = ls.hub {
        let mut col = 3i64;
        for grp in &small_u {
            out.push((grp[0], PathSeg::v(col, xt, xt + 1)));
            if let Some(&x) = grp.get(1) {
                out.push((x, PathSeg::v(col, xt - 1, xt)));
            }
            col += 1;
        }
        if let Some(grp) = big_u.first() {
            out.push((grp[0], PathSeg::h(xt, col, col + 1)));
            out.push((grp[1], PathSeg::v(col, xt - 1, xt)));
            out.push((grp[2], PathSeg::v(col, xt, xt + 1)));
        }
        out.push((u, PathSeg::h(xt, 0, col)));
    } else if !small_u.is_empty() || !big_u.is_empty() {
        return Err(BuildError::StructureMismatch);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{
        decide_contact, extract_l_structure, extract_w_structure, is_tree_cograph,
        spider_partition, ClassHint,
    };
    use crate::families::{
        fat_thin_spider, l_instance, thin_spider, w1_instance, LParams, TwinKind, WParams,
    };
    use crate::patterns::make_pattern;
    use crate::recognize::Decision;

    fn assert_good(g: &Graph, rep: &GridRepresentation) {
        assert!(rep.is_valid(g), "invalid: {:?}", rep.validate(g));
        let cap = 4 * g.vertex_count() as i64;
        let (h, w) = rep.bounding_box();
        assert!(h <= cap && w <= cap, "bounding box {h}x{w} exceeds 4n");
    }

    fn tc_rep(g: &Graph) -> GridRepresentation {
        let d = is_tree_cograph(g).expect("input should be a tree-cograph");
        represent_class(g, &ClassStructure::TreeCograph(d)).expect("layout should exist")
    }

    fn assert_yes(g: &Graph) {
        assert!(matches!(
            decide_contact(g, ClassHint::Auto).unwrap(),
            Decision::Yes(_)
        ));
    }

    #[test]
    fn co_trees_lay_out() {
        // Complements of paths P2..P5 and of stars with up to four leaves.
        for n in 2..=5 {
            let g = Graph::path(n).complement();
            assert_yes(&g);
            assert_good(&g, &tc_rep(&g));
        }
        for leaves in 1..=4 {
            let mut edges = Vec::new();
            for v in 1..=leaves {
                edges.push((0, v));
            }
            let g = Graph::from_edges(leaves + 1, &edges).unwrap().complement();
            assert_yes(&g);
            assert_good(&g, &tc_rep(&g));
        }
    }

    #[test]
    fn plain_trees_and_unions_lay_out() {
        let tree = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_good(&tree, &tc_rep(&tree));

        let house = Graph::path(5).complement();
        let k4k1 = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let union = tree.disjoint_union(&house).disjoint_union(&k4k1);
        assert_yes(&union);
        assert_good(&union, &tc_rep(&union));
    }

    #[test]
    fn joins_lay_out() {
        // Complete bipartite K_{2,m} for m = 2..8 (m = 2 is the 4-cycle).
        for m in 2..=8 {
            let g = Graph::empty(2).join(&Graph::empty(m));
            assert_yes(&g);
            assert_good(&g, &tc_rep(&g));
        }
        // Chordal joins: K4, a star, and a hub over two triangles, an edge
        // and an isolated vertex.
        let k4 = Graph::complete(4);
        assert_good(&k4, &tc_rep(&k4));
        let star = Graph::empty(1).join(&Graph::empty(5));
        assert_good(&star, &tc_rep(&star));
        let spread = Graph::from_edges(
            9,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 7)],
        )
        .unwrap();
        let hubbed = Graph::empty(1).join(&spread);
        assert_yes(&hubbed);
        assert_good(&hubbed, &tc_rep(&hubbed));
    }

    #[test]
    fn rejected_tree_cographs_error() {
        // K4 minus an edge and K3,3 are tree-cographs without layouts.
        let k4e = make_pattern(&crate::patterns::PatternId::K4MinusE);
        let d = is_tree_cograph(&k4e).unwrap();
        assert!(represent_class(&k4e, &ClassStructure::TreeCograph(d)).is_err());
        let k33 = Graph::empty(3).join(&Graph::empty(3));
        let d = is_tree_cograph(&k33).unwrap();
        assert!(represent_class(&k33, &ClassStructure::TreeCograph(d)).is_err());
    }

    #[test]
    fn thin_spiders_lay_out() {
        for (k, rmax) in [(2, 2), (3, 1), (4, 0)] {
            for r in 0..=rmax {
                let (g, sp) = thin_spider(k, r).unwrap();
                assert_yes(&g);
                let found = spider_partition(&g);
                let sp = found.unwrap_or(sp);
                let rep = represent_class(&g, &ClassStructure::Spider(sp)).unwrap();
                assert_good(&g, &rep);
            }
        }
    }

    #[test]
    fn oversized_spiders_error() {
        for (k, r) in [(2, 3), (3, 2), (4, 1), (5, 0)] {
            let (g, sp) = thin_spider(k, r).unwrap();
            assert!(represent_class(&g, &ClassStructure::Spider(sp)).is_err());
        }
    }

    #[test]
    fn fat_spiders_lay_out() {
        for (k, rmax) in [(2, 2), (3, 1), (4, 0)] {
            for r in 0..=rmax {
                for i in 0..k {
                    for kind in [TwinKind::True, TwinKind::False] {
                        let (g, fs) = fat_thin_spider(k, r, false, i, kind).unwrap();
                        assert_yes(&g);
                        let rep = represent_class(&g, &ClassStructure::FatSpider(fs)).unwrap();
                        assert_good(&g, &rep);
                    }
                }
            }
        }
        // The clique-vertex case: only a false twin on the two-legged
        // spider without extra clique vertices closes a legal 4-cycle.
        for i in 0..2 {
            let (g, fs) = fat_thin_spider(2, 0, true, i, TwinKind::False).unwrap();
            assert_yes(&g);
            let rep = represent_class(&g, &ClassStructure::FatSpider(fs)).unwrap();
            assert_good(&g, &rep);
        }
        let (g, fs) = fat_thin_spider(2, 1, true, 0, TwinKind::False).unwrap();
        assert!(represent_class(&g, &ClassStructure::FatSpider(fs)).is_err());
    }

    #[test]
    fn c4_anchored_instances_lay_out() {
        let group_choices: [&[usize]; 8] =
            [&[], &[1], &[2], &[3], &[1, 2], &[3, 3], &[3, 1], &[2, 2, 1]];
        for s_a in 0..=2 {
            for s_b in 0..=2 {
                for ga in group_choices {
                    for gb in group_choices {
                        for k_ab in 0..=2 {
                            let p = WParams {
                                s_a,
                                s_b,
                                groups_a: ga.to_vec(),
                                groups_b: gb.to_vec(),
                                k_ab,
                            };
                            let Ok((g, ws)) = w1_instance(&p) else {
                                continue;
                            };
                            assert_yes(&g);
                            let rep = represent_class(&g, &ClassStructure::W(ws))
                                .unwrap_or_else(|e| panic!("{e} for {p:?}"));
                            assert_good(&g, &rep);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn c4_extraction_round_trips() {
        let p = WParams {
            s_a: 2,
            s_b: 1,
            groups_a: vec![3, 2],
            groups_b: vec![3, 1],
            k_ab: 1,
        };
        let (g, _) = w1_instance(&p).unwrap();
        let ws = extract_w_structure(&g).unwrap();
        assert_good(&g, &represent_class(&g, &ClassStructure::W(ws)).unwrap());
    }

    #[test]
    fn exceptional_graphs_lay_out() {
        use crate::patterns::PatternId;
        for id in [PatternId::B1, PatternId::B2, PatternId::B3] {
            let g = make_pattern(&id);
            assert_yes(&g);
            let ws = extract_w_structure(&g).unwrap();
            assert!(matches!(ws, WStructure::Exceptional(_)));
            let rep = represent_class(&g, &ClassStructure::W(ws)).unwrap();
            assert_good(&g, &rep);
        }
    }

    #[test]
    fn c5_anchored_instances_lay_out() {
        let group_choices: [&[usize]; 7] = [&[], &[1], &[2], &[3], &[1, 2], &[2, 2], &[3, 1]];
        for s_v in 0..=2 {
            for s_w in 0..=2 {
                for hub in [false, true] {
                    for gu in group_choices {
                        for z in [false, true] {
                            let p = LParams {
                                s_v,
                                s_w,
                                hub,
                                groups_u: gu.to_vec(),
                                z,
                            };
                            let Ok((g, ls)) = l_instance(&p) else {
                                continue;
                            };
                            assert_yes(&g);
                            let rep = represent_class(&g, &ClassStructure::L(ls)).unwrap();
                            assert_good(&g, &rep);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn c5_extraction_round_trips() {
        let c5 = Graph::cycle(5);
        let ls = extract_l_structure(&c5).unwrap();
        assert_good(&c5, &represent_class(&c5, &ClassStructure::L(ls)).unwrap());
    }

    #[test]
    fn structure_free_entry_point_covers_all_classes() {
        // One accepted graph per route: chordal, tree-cograph, C4-anchored,
        // C5-anchored, plus a disconnected mix.
        let chordal = Graph::complete(4);
        let tc = Graph::empty(2).join(&Graph::empty(3)); // K2,3
        let (w, _) = w1_instance(&WParams {
            s_a: 1,
            s_b: 1,
            groups_a: vec![1],
            groups_b: vec![],
            k_ab: 1,
        })
        .unwrap();
        let c5 = Graph::cycle(5);
        let mix = w.disjoint_union(&c5).disjoint_union(&chordal);
        for g in [chordal, tc, w, c5, mix] {
            assert_good(&g, &represent_any(&g).unwrap());
        }
        assert!(represent_any(&Graph::cycle(6)).is_err());
    }

    #[test]
    fn mismatched_structures_error() {
        // A C4 structure handed the wrong graph.
        let (_, ws) = w1_instance(&WParams {
            s_a: 1,
            s_b: 0,
            groups_a: vec![],
            groups_b: vec![],
            k_ab: 0,
        })
        .unwrap();
        let other = Graph::complete(5);
        assert!(represent_class(&other, &ClassStructure::W(ws)).is_err());
    }
}
