//! Constructive grid layouts for graphs already known to have one.
//!
//! `represent_tree` lays out any tree by alternating orientations along BFS
//! depth. `represent_chordal` handles every accepted chordal graph: after
//! screening, blocks are cliques on at most four vertices, and each block is
//! realized at a single grid point where its members' paths meet. The
//! marking state from recognition decides, per block, which vertex may pass
//! straight through that point without paying an endpoint.

use std::collections::VecDeque;

use thiserror::Error;

use crate::chordal::block_decomposition;
use crate::graph::{Graph, GraphError};
use crate::recognize::{recognize_chordal_contact, Decision};
use crate::rep::{GridRepresentation, Orientation, PathSeg};

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("input is not a tree")]
    NotATree,
    #[error("graph admits no contact representation")]
    NotRepresentable,
    #[error("structure does not describe this graph")]
    StructureMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Contact layout of a tree. Vertices at even BFS depth are horizontal,
/// odd depth vertical; each child's path starts on the interior of its
/// parent's path, and sibling subtrees get disjoint bands of the grid.
pub fn represent_tree(t: &Graph) -> Result<GridRepresentation, BuildError> {
    if !t.is_tree() {
        return Err(BuildError::NotATree);
    }
    let mut segs: Vec<Option<PathSeg>> = vec![None; t.vertex_count()];
    place_tree(t, 0, usize::MAX, true, 0, 0, &mut segs);
    let rep = GridRepresentation::new(segs.into_iter().map(|s| s.unwrap()).collect());
    debug_assert!(rep.is_valid(t));
    Ok(rep)
}

/// Lays out the subtree of `v` in the box with top-left corner
/// (`top_row`, `left_col`) and returns the (rows, cols) it used.
/// A horizontal vertex puts its path on the top row of its box and hangs
/// each child subtree in its own column band directly below; a vertical
/// vertex mirrors this with row bands to its right.
fn place_tree(
    t: &Graph,
    v: usize,
    parent: usize,
    horizontal: bool,
    top_row: i64,
    left_col: i64,
    segs: &mut [Option<PathSeg>],
) -> (i64, i64) {
    let children: Vec<usize> = t.neighbors(v).filter(|&w| w != parent).collect();
    if horizontal {
        let mut x = left_col + 1;
        let mut depth = 1i64;
        let mut last_attach = left_col;
        for &w in &children {
            let (h, wd) = place_tree(t, w, v, false, top_row, x, segs);
            last_attach = x;
            x += wd;
            depth = depth.max(h);
        }
        let hi = if children.is_empty() {
            left_col + 1
        } else {
            last_attach + 1
        };
        segs[v] = Some(PathSeg::h(top_row, left_col, hi));
        (depth, x.max(hi + 1) - left_col)
    } else {
        let mut y = top_row + 1;
        let mut width = 1i64;
        let mut last_attach = top_row;
        for &w in &children {
            let (h, wd) = place_tree(t, w, v, true, y, left_col, segs);
            last_attach = y;
            y += h;
            width = width.max(wd);
        }
        let hi = if children.is_empty() {
            top_row + 1
        } else {
            last_attach + 1
        };
        segs[v] = Some(PathSeg::v(left_col, top_row, hi));
        (y.max(hi + 1) - top_row, width)
    }
}

/// A partial layout in gadget-local coordinates. The current contact point
/// (or arm start) is the origin; the parent positions the fragment by rigid
/// motion.
#[derive(Debug, Default, Clone)]
struct Frag {
    segs: Vec<(usize, PathSeg)>,
}

impl Frag {
    fn push(&mut self, v: usize, s: PathSeg) {
        self.segs.push((v, s));
    }

    fn merge(&mut self, other: Frag) {
        self.segs.extend(other.segs);
    }

    fn translate(&mut self, dr: i64, dc: i64) {
        for (_, s) in &mut self.segs {
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

    /// (rmin, cmin, rmax, cmax) over all segments, always covering the
    /// origin.
    fn bbox(&self) -> (i64, i64, i64, i64) {
        let (mut r0, mut c0, mut r1, mut c1) = (0i64, 0i64, 0i64, 0i64);
        for (_, s) in &self.segs {
            for (r, c) in s.endpoints() {
                r0 = r0.min(r);
                c0 = c0.min(c);
                r1 = r1.max(r);
                c1 = c1.max(c);
            }
        }
        (r0, c0, r1, c1)
    }

    /// Rigid rotation taking a south-growing arm to an east-growing one:
    /// (r, c) -> (-c, r).
    fn rotate_east(&mut self) {
        for (_, s) in &mut self.segs {
            *s = match s.orient {
                Orientation::Vertical => PathSeg::h(-s.line, s.lo, s.hi),
                Orientation::Horizontal => PathSeg::v(s.line, -s.hi, -s.lo),
            };
        }
    }

    /// South to west: (r, c) -> (c, -r).
    fn rotate_west(&mut self) {
        for (_, s) in &mut self.segs {
            *s = match s.orient {
                Orientation::Vertical => PathSeg::h(s.line, -s.hi, -s.lo),
                Orientation::Horizontal => PathSeg::v(-s.line, s.lo, s.hi),
            };
        }
    }
}

struct ChordalLayout {
    blocks: Vec<Vec<usize>>,
    /// Per block, the vertex allowed to run straight through its contact
    /// point (None for K4 blocks, where all four members pay an endpoint).
    exempt: Vec<Option<usize>>,
    /// Child blocks per vertex in the rooted block-cut tree.
    children_of: Vec<Vec<usize>>,
}

/// Contact layout of an accepted chordal graph. Errors with
/// `NotRepresentable` when recognition rejects, and `NotChordal` (via
/// recognition) on non-chordal input.
pub fn represent_chordal(g: &Graph) -> Result<GridRepresentation, BuildError> {
    let state = match recognize_chordal_contact(g)? {
        Decision::Yes(st) => st,
        Decision::No(_) => return Err(BuildError::NotRepresentable),
    };
    let n = g.vertex_count();
    if n == 0 {
        return Ok(GridRepresentation::new(Vec::new()));
    }
    let bd = block_decomposition(g);
    let nb = bd.blocks.len();

    // A block touched by marking has all its directed edges pointing at one
    // marked vertex; that vertex hosts the block on its path's interior.
    let mut exempt: Vec<Option<usize>> = vec![None; nb];
    for (i, b) in bd.blocks.iter().enumerate() {
        debug_assert!(b.len() <= 4, "blocks are cliques of size at most four");
        if b.len() >= 4 {
            continue;
        }
        for &(f, t) in &state.arcs {
            if b.contains(&f) && b.contains(&t) {
                debug_assert!(exempt[i].is_none() || exempt[i] == Some(t));
                exempt[i] = Some(t);
            }
        }
    }

    // Root every component at its smallest vertex and orient the block-cut
    // tree by BFS. Untouched small blocks exempt their entry vertex: each
    // non-entry member then pays an endpoint, which it can afford because an
    // unmarked vertex has spare budget and this is its only parent block.
    let blocks_of = bd.blocks_of(n);
    let comps = g.connected_components();
    let mut entry = vec![usize::MAX; nb];
    let mut children_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for comp in &comps {
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(v) = queue.pop_front() {
            for &b in &blocks_of[v] {
                if entry[b] != usize::MAX {
                    continue;
                }
                entry[b] = v;
                if bd.blocks[b].len() == 1 {
                    continue;
                }
                children_of[v].push(b);
                for &w in &bd.blocks[b] {
                    if w != v {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    for i in 0..nb {
        if (2..=3).contains(&bd.blocks[i].len()) && exempt[i].is_none() {
            exempt[i] = Some(entry[i]);
        }
    }

    let lay = ChordalLayout {
        blocks: bd.blocks,
        exempt,
        children_of,
    };
    let mut paths: Vec<Option<PathSeg>> = vec![None; n];
    let mut next_col = 0i64;
    for comp in &comps {
        let mut frag = lay.build_through(comp[0]);
        let (r0, c0, _, c1) = frag.bbox();
        frag.translate(-r0, next_col - c0);
        next_col += c1 - c0 + 2;
        for (v, s) in frag.segs {
            debug_assert!(paths[v].is_none(), "vertex {v} laid out twice");
            paths[v] = Some(s);
        }
    }
    let rep = GridRepresentation::new(paths.into_iter().map(|s| s.unwrap()).collect());
    debug_assert!(
        rep.is_valid(g),
        "layout violates contact conditions: {:?}",
        rep.validate(g)
    );
    Ok(rep)
}

impl ChordalLayout {
    fn members(&self, b: usize, not: usize) -> Vec<usize> {
        self.blocks[b]
            .iter()
            .copied()
            .filter(|&w| w != not)
            .collect()
    }

    /// Child blocks of `v` split into interior attachments (v is exempt;
    /// the block sits on the interior of v's path) and endpoint attachments
    /// (v's path stops at the block's contact point).
    fn child_split(&self, v: usize) -> (Vec<usize>, Vec<usize>) {
        let mut interior = Vec::new();
        let mut ends = Vec::new();
        for &b in &self.children_of[v] {
            if self.exempt[b] == Some(v) {
                interior.push(b);
            } else {
                ends.push(b);
            }
        }
        (interior, ends)
    }

    /// One arm of vertex `v` in canonical form: its path on column 0 from
    /// row 0 growing south. Interior gadgets stack in disjoint row
    /// intervals along it; an endpoint gadget sits at the far tip. Returns
    /// the child fragments and the arm length (v's segment is the caller's
    /// job, since a pass-through vertex merges two arms into one segment).
    fn build_arm(&self, v: usize, interior: &[usize], end: Option<usize>) -> (Frag, i64) {
        let mut frag = Frag::default();
        let mut y = 0i64;
        for &b in interior {
            let mut gf = self.build_interior_gadget(b, v);
            let (r0, _, r1, _) = gf.bbox();
            let pos = y + 1 - r0;
            gf.translate(pos, 0);
            frag.merge(gf);
            y = pos + r1;
        }
        let len = match end {
            Some(b) => {
                let mut gf = self.build_end_gadget(b, v);
                let (r0, _, _, _) = gf.bbox();
                let pos = y + 1 - r0;
                gf.translate(pos, 0);
                frag.merge(gf);
                pos
            }
            None => y + 1,
        };
        (frag, len.max(1))
    }

    /// Vertex that pays an endpoint at the current contact point: its path
    /// is a single south arm starting there.
    fn build_spent_parts(&self, m: usize) -> (Frag, i64) {
        let (interior, ends) = self.child_split(m);
        debug_assert!(ends.len() <= 1, "endpoint budget exceeded at vertex {m}");
        self.build_arm(m, &interior, ends.first().copied())
    }

    fn build_spent(&self, m: usize) -> Frag {
        let (mut frag, len) = self.build_spent_parts(m);
        frag.push(m, PathSeg::v(0, 0, len));
        frag
    }

    /// Vertex whose path runs straight through the current contact point:
    /// two arms merged into one horizontal segment (the entry always
    /// arrives vertically in gadget-local coordinates). Also lays out
    /// component roots, whose "contact point" is just the split between
    /// their two arms.
    fn build_through(&self, x: usize) -> Frag {
        let (interior, ends) = self.child_split(x);
        debug_assert!(ends.len() <= 2, "endpoint budget exceeded at vertex {x}");
        let (mut fe, le) = self.build_arm(x, &interior, ends.first().copied());
        let (mut fw, lw) = self.build_arm(x, &[], ends.get(1).copied());
        fe.rotate_east();
        fw.rotate_west();
        fe.merge(fw);
        fe.push(x, PathSeg::h(0, -lw, le));
        fe
    }

    /// K2 or K3 block on the interior of its entry's path: the remaining
    /// members tip in from east and west. For a triangle the two tips meet
    /// each other end to end at the gadget point.
    fn build_interior_gadget(&self, b: usize, v: usize) -> Frag {
        let ms = self.members(b, v);
        debug_assert!(matches!(ms.len(), 1 | 2));
        let mut fe = self.build_spent(ms[0]);
        fe.rotate_east();
        if let Some(&m2) = ms.get(1) {
            let mut fw = self.build_spent(m2);
            fw.rotate_west();
            fe.merge(fw);
        }
        fe
    }

    /// Block whose entry's path arrives from the north and stops at the
    /// gadget point.
    fn build_end_gadget(&self, b: usize, v: usize) -> Frag {
        let ms = self.members(b, v);
        match self.exempt[b] {
            None => {
                // K4: two horizontal and two vertical paths end at the
                // point; the three remaining members take east, west and
                // south.
                debug_assert_eq!(ms.len(), 3);
                let mut fe = self.build_spent(ms[1]);
                fe.rotate_east();
                let mut fw = self.build_spent(ms[2]);
                fw.rotate_west();
                fe.merge(fw);
                self.attach_south(fe, ms[0])
            }
            Some(x) => {
                debug_assert_ne!(x, v, "interior block routed as endpoint block");
                let mut frag = self.build_through(x);
                if let Some(&y) = ms.iter().find(|&&m| m != x) {
                    // Triangle: the second spender continues the entry's
                    // line southward, meeting it tip to tip at the point.
                    frag = self.attach_south(frag, y);
                }
                frag
            }
        }
    }

    /// Adds `m` as a south arm of the gadget, pushed below everything the
    /// east/west arms placed south of the point; its path stretches back up
    /// to keep its tip at the point.
    fn attach_south(&self, mut frag: Frag, m: usize) -> Frag {
        let (mut fs, len) = self.build_spent_parts(m);
        let (_, _, r1, _) = frag.bbox();
        let slack = r1.max(0);
        fs.translate(slack, 0);
        frag.merge(fs);
        frag.push(m, PathSeg::v(0, 0, len + slack));
        frag
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{make_pattern, make_t_member, PatternId};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_good(g: &Graph, rep: &GridRepresentation) {
        assert!(
            rep.is_valid(g),
            "invalid layout for {g:?}: {:?}",
            rep.validate(g)
        );
        let n = g.vertex_count() as i64;
        let (rows, cols) = rep.bounding_box();
        assert!(
            rows <= 4 * n && cols <= 4 * n,
            "bounding box {rows}x{cols} exceeds 4n for n={n}"
        );
    }

    #[test]
    fn trees_lay_out() {
        for g in [
            Graph::empty(1),
            Graph::path(2),
            Graph::path(12),
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
        ] {
            let rep = represent_tree(&g).unwrap();
            assert_good(&g, &rep);
        }
        assert!(matches!(
            represent_tree(&Graph::empty(3)),
            Err(BuildError::NotATree)
        ));
    }

    #[test]
    fn random_trees_lay_out() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=12 {
            for _ in 0..20 {
                let g = crate::families::random_tree(n, &mut rng);
                let rep = represent_tree(&g).unwrap();
                assert_good(&g, &rep);
                let chordal = represent_chordal(&g).unwrap();
                assert_good(&g, &chordal);
            }
        }
    }

    #[test]
    fn chordal_basics() {
        for g in [
            Graph::empty(1),
            Graph::complete(2),
            Graph::complete(3),
            Graph::complete(4),
            Graph::path(6),
        ] {
            let rep = represent_chordal(&g).unwrap();
            assert_good(&g, &rep);
        }
        let g = Graph::empty(0);
        assert_eq!(represent_chordal(&g).unwrap().paths.len(), 0);
    }

    #[test]
    fn chordal_k4_chains() {
        // Two K4s sharing a vertex.
        let mut e = Graph::complete(4).edges();
        e.extend([(0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)]);
        let g = Graph::from_edges(7, &e).unwrap();
        assert_good(&g, &represent_chordal(&g).unwrap());

        // Same plus a pendant edge on the shared vertex: that vertex has
        // no endpoints left, so the pendant must touch its interior.
        let mut e2 = e.clone();
        e2.push((0, 7));
        let g = Graph::from_edges(8, &e2).unwrap();
        assert_good(&g, &represent_chordal(&g).unwrap());

        // A longer chain: K4 - bridge - K4 with triangles hanging off.
        let mut e3 = e.clone();
        e3.extend([(3, 7), (3, 8), (7, 8), (6, 9)]);
        let g = Graph::from_edges(10, &e3).unwrap();
        assert_good(&g, &represent_chordal(&g).unwrap());
    }

    #[test]
    fn chordal_rejects_and_errors() {
        assert!(matches!(
            represent_chordal(&Graph::complete(5)),
            Err(BuildError::NotRepresentable)
        ));
        assert!(matches!(
            represent_chordal(&Graph::cycle(4)),
            Err(BuildError::Graph(GraphError::NotChordal))
        ));
    }

    #[test]
    fn deleting_any_vertex_of_smallest_rejected_member_gives_layout() {
        let gp2 = make_pattern(&PatternId::GP2);
        for drop in 0..gp2.vertex_count() {
            let keep: Vec<usize> = (0..gp2.vertex_count()).filter(|&v| v != drop).collect();
            let (sub, _) = gp2.induced_subgraph(&keep).unwrap();
            let rep = represent_chordal(&sub).unwrap();
            assert_good(&sub, &rep);
        }
    }

    #[test]
    fn near_members_of_larger_bases_lay_out() {
        for base in crate::families::all_base_trees_le5() {
            if base.graph().vertex_count() > 4 {
                continue;
            }
            let g = make_t_member(&base);
            for drop in 0..g.vertex_count() {
                let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != drop).collect();
                let (sub, _) = g.induced_subgraph(&keep).unwrap();
                if let Ok(rep) = represent_chordal(&sub) {
                    assert_good(&sub, &rep);
                }
            }
        }
    }

    #[test]
    fn random_chordal_accepted_instances_lay_out() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut built = 0;
        for _ in 0..300 {
            let g = crate::families::random_chordal(12, 0.5, &mut rng);
            match represent_chordal(&g) {
                Ok(rep) => {
                    assert_good(&g, &rep);
                    built += 1;
                }
                Err(BuildError::NotRepresentable) => {}
                Err(e) => panic!("unexpected error {e:?}"),
            }
        }
        assert!(built > 50, "too few accepted instances: {built}");
    }

    #[test]
    fn disconnected_chordal_lays_out() {
        let g = Graph::complete(4).disjoint_union(&Graph::path(3));
        let rep = represent_chordal(&g).unwrap();
        assert_good(&g, &rep);
    }
}
