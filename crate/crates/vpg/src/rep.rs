//! Grid representations: one horizontal or vertical grid path per vertex,
//! paths may touch at points but never cross and never share a grid edge.
//! The validator here is the ground truth every builder and the search
//! oracle must satisfy.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// (row, column) grid point.
pub type Point = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

/// A bend-free grid path: a horizontal path lies on row `line` spanning
/// columns `lo..=hi`; a vertical path lies on column `line` spanning rows
/// `lo..=hi`. Always `lo < hi` — every path covers at least one grid edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathSeg {
    pub orient: Orientation,
    pub line: i64,
    pub lo: i64,
    pub hi: i64,
}

impl PathSeg {
    pub fn h(row: i64, lo: i64, hi: i64) -> PathSeg {
        PathSeg {
            orient: Orientation::Horizontal,
            line: row,
            lo,
            hi,
        }
    }

    pub fn v(col: i64, lo: i64, hi: i64) -> PathSeg {
        PathSeg {
            orient: Orientation::Vertical,
            line: col,
            lo,
            hi,
        }
    }

    pub fn endpoints(&self) -> [Point; 2] {
        match self.orient {
            Orientation::Horizontal => [(self.line, self.lo), (self.line, self.hi)],
            Orientation::Vertical => [(self.lo, self.line), (self.hi, self.line)],
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        match self.orient {
            Orientation::Horizontal => p.0 == self.line && self.lo <= p.1 && p.1 <= self.hi,
            Orientation::Vertical => p.1 == self.line && self.lo <= p.0 && p.0 <= self.hi,
        }
    }

    /// True if `p` lies on the path strictly between its endpoints.
    pub fn interior_contains(&self, p: Point) -> bool {
        self.contains(p) && !self.endpoints().contains(&p)
    }
}

/// How two paths relate geometrically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Disjoint,
    /// Single shared point; flags say whether it is an endpoint of the
    /// first / second path.
    Contact(Point, bool, bool),
    /// Shared point interior to both of a perpendicular pair.
    Crossing(Point),
    /// Collinear positive-length overlap (shares a grid edge).
    Overlap,
}

/// Geometric relation of two segments, independent of any graph.
pub fn relate(a: &PathSeg, b: &PathSeg) -> Relation {
    if a.orient == b.orient {
        if a.line != b.line {
            return Relation::Disjoint;
        }
        let lo = a.lo.max(b.lo);
        let hi = a.hi.min(b.hi);
        if lo > hi {
            Relation::Disjoint
        } else if lo < hi {
            Relation::Overlap
        } else {
            // They touch at exactly one point, an endpoint of both.
            let p = match a.orient {
                Orientation::Horizontal => (a.line, lo),
                Orientation::Vertical => (lo, a.line),
            };
            Relation::Contact(p, true, true)
        }
    } else {
        let (h, v, swapped) = match a.orient {
            Orientation::Horizontal => (a, b, false),
            Orientation::Vertical => (b, a, true),
        };
        let p = (h.line, v.line);
        if !(h.lo <= p.1 && p.1 <= h.hi && v.lo <= p.0 && p.0 <= v.hi) {
            return Relation::Disjoint;
        }
        let h_end = p.1 == h.lo || p.1 == h.hi;
        let v_end = p.0 == v.lo || p.0 == v.hi;
        if !h_end && !v_end {
            Relation::Crossing(p)
        } else if swapped {
            Relation::Contact(p, v_end, h_end)
        } else {
            Relation::Contact(p, h_end, v_end)
        }
    }
}

/// Per-vertex paths; index `i` is the path of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRepresentation {
    pub paths: Vec<PathSeg>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongVertexCount { expected: usize, got: usize },
    MalformedSegment { vertex: usize },
    NegativeCoordinate { vertex: usize },
    EdgeSharing { u: usize, v: usize },
    Crossing { u: usize, v: usize, at: Point },
    ContactWithoutEdge { u: usize, v: usize, at: Point },
    EdgeWithoutContact { u: usize, v: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("point is not interior to the path")]
    NotInterior,
    #[error("segments are not collinear or do not meet end to end")]
    NotMergeable,
    #[error("vertex {0} out of range")]
    NoSuchVertex(usize),
    #[error("bad representation file: {0}")]
    BadFile(String),
}

impl GridRepresentation {
    pub fn new(paths: Vec<PathSeg>) -> Self {
        GridRepresentation { paths }
    }

    /// Checks the contact conditions against `g`; empty report means valid.
    pub fn validate(&self, g: &Graph) -> Result<(), Vec<Violation>> {
        let mut bad = Vec::new();
        let n = g.vertex_count();
        if self.paths.len() != n {
            return Err(vec![Violation::WrongVertexCount {
                expected: n,
                got: self.paths.len(),
            }]);
        }
        for (v, s) in self.paths.iter().enumerate() {
            if s.lo >= s.hi {
                bad.push(Violation::MalformedSegment { vertex: v });
            }
            if s.lo < 0 || s.line < 0 {
                bad.push(Violation::NegativeCoordinate { vertex: v });
            }
        }
        if !bad.is_empty() {
            return Err(bad);
        }
        for u in 0..n {
            for v in u + 1..n {
                let rel = relate(&self.paths[u], &self.paths[v]);
                let adjacent = g.has_edge(u, v);
                match rel {
                    Relation::Overlap => bad.push(Violation::EdgeSharing { u, v }),
                    Relation::Crossing(at) => bad.push(Violation::Crossing { u, v, at }),
                    Relation::Contact(at, _, _) if !adjacent => {
                        bad.push(Violation::ContactWithoutEdge { u, v, at })
                    }
                    Relation::Disjoint if adjacent => {
                        bad.push(Violation::EdgeWithoutContact { u, v })
                    }
                    _ => {}
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    /// True if `point` is an endpoint of vertex `v`'s path.
    pub fn ends_at(&self, v: usize, point: Point) -> bool {
        self.paths[v].endpoints().contains(&point)
    }

    /// Contacts landing on the interior of `v`'s path: pairs of the other
    /// vertex and the touch point. `v` is then a "middle neighbour" host.
    pub fn middle_contacts(&self, v: usize) -> Vec<(usize, Point)> {
        let mut out = Vec::new();
        for (u, s) in self.paths.iter().enumerate() {
            if u == v {
                continue;
            }
            if let Relation::Contact(p, v_end, _) = relate(&self.paths[v], s) {
                if !v_end {
                    out.push((u, p));
                }
            }
        }
        out
    }

    /// All contact points with end/end classification: (u, v, point,
    /// u_ends_there, v_ends_there) for u < v.
    pub fn contacts(&self) -> Vec<(usize, usize, Point, bool, bool)> {
        let mut out = Vec::new();
        for u in 0..self.paths.len() {
            for v in u + 1..self.paths.len() {
                if let Relation::Contact(p, ue, ve) = relate(&self.paths[u], &self.paths[v]) {
                    out.push((u, v, p, ue, ve));
                }
            }
        }
        out
    }

    /// (rows, cols) extent of the bounding box, in grid units spanned.
    pub fn bounding_box(&self) -> (i64, i64) {
        if self.paths.is_empty() {
            return (0, 0);
        }
        let mut rmin = i64::MAX;
        let mut rmax = i64::MIN;
        let mut cmin = i64::MAX;
        let mut cmax = i64::MIN;
        for s in &self.paths {
            for (r, c) in s.endpoints() {
                rmin = rmin.min(r);
                rmax = rmax.max(r);
                cmin = cmin.min(c);
                cmax = cmax.max(c);
            }
        }
        (rmax - rmin, cmax - cmin)
    }

    pub fn translate(&mut self, drow: i64, dcol: i64) {
        for s in &mut self.paths {
            match s.orient {
                Orientation::Horizontal => {
                    s.line += drow;
                    s.lo += dcol;
                    s.hi += dcol;
                }
                Orientation::Vertical => {
                    s.line += dcol;
                    s.lo += drow;
                    s.hi += drow;
                }
            }
        }
    }

    /// Shifts everything so the minimum row and column are zero.
    pub fn normalize(&mut self) {
        if self.paths.is_empty() {
            return;
        }
        let mut rmin = i64::MAX;
        let mut cmin = i64::MAX;
        for s in &self.paths {
            for (r, c) in s.endpoints() {
                rmin = rmin.min(r);
                cmin = cmin.min(c);
            }
        }
        self.translate(-rmin, -cmin);
    }
}

/// Places the given representations left to right with a one-column gap
/// between bounding boxes; vertex ids concatenate in order. Valid for the
/// disjoint union whenever each part is valid for its own graph.
pub fn compose_side_by_side(reps: &[GridRepresentation]) -> GridRepresentation {
    let mut paths = Vec::new();
    let mut next_col = 0i64;
    for r in reps {
        let mut part = r.clone();
        part.normalize();
        let (_, cols) = part.bounding_box();
        part.translate(0, next_col);
        next_col += cols + 2;
        paths.extend(part.paths);
    }
    GridRepresentation::new(paths)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

/// Inserts a fresh grid line after coordinate `at`: every coordinate
/// strictly greater than `at` shifts by one, and any path whose span covers
/// the grid edge (`at`, `at + 1`) stretches across the new line. Contact
/// structure is preserved exactly.
pub fn refine(rep: &GridRepresentation, kind: Axis, at: i64) -> GridRepresentation {
    let shift = |x: i64| if x > at { x + 1 } else { x };
    let paths = rep
        .paths
        .iter()
        .map(|s| {
            let along = match (kind, s.orient) {
                (Axis::Column, Orientation::Horizontal) => true,
                (Axis::Row, Orientation::Vertical) => true,
                _ => false,
            };
            if along {
                PathSeg {
                    orient: s.orient,
                    line: s.line,
                    lo: shift(s.lo),
                    hi: shift(s.hi),
                }
            } else {
                PathSeg {
                    orient: s.orient,
                    line: shift(s.line),
                    lo: s.lo,
                    hi: s.hi,
                }
            }
        })
        .collect();
    GridRepresentation::new(paths)
}

/// Splits a path at an interior point into two collinear halves meeting
/// there. Builders use this to free up an anchor; `merge_paths` undoes it.
pub fn split_path(seg: &PathSeg, at: Point) -> Result<(PathSeg, PathSeg), RepError> {
    if !seg.interior_contains(at) {
        return Err(RepError::NotInterior);
    }
    let cut = match seg.orient {
        Orientation::Horizontal => at.1,
        Orientation::Vertical => at.0,
    };
    Ok((
        PathSeg {
            orient: seg.orient,
            line: seg.line,
            lo: seg.lo,
            hi: cut,
        },
        PathSeg {
            orient: seg.orient,
            line: seg.line,
            lo: cut,
            hi: seg.hi,
        },
    ))
}

pub fn merge_paths(a: &PathSeg, b: &PathSeg) -> Result<PathSeg, RepError> {
    if a.orient != b.orient || a.line != b.line {
        return Err(RepError::NotMergeable);
    }
    let (first, second) = if a.lo <= b.lo { (a, b) } else { (b, a) };
    if first.hi != second.lo {
        return Err(RepError::NotMergeable);
    }
    Ok(PathSeg {
        orient: a.orient,
        line: a.line,
        lo: first.lo,
        hi: second.hi,
    })
}

/// Replaces vertex `u`'s path by its lower half and appends the upper half
/// as a new final vertex; the caller is responsible for splitting `u` in
/// the graph accordingly.
pub fn split_path_trick(
    rep: &GridRepresentation,
    u: usize,
    at: Point,
) -> Result<(GridRepresentation, usize), RepError> {
    let seg = rep.paths.get(u).ok_or(RepError::NoSuchVertex(u))?;
    let (a, b) = split_path(seg, at)?;
    let mut paths = rep.paths.clone();
    paths[u] = a;
    paths.push(b);
    let idx = paths.len() - 1;
    Ok((GridRepresentation::new(paths), idx))
}

/// On-disk record for one path, the JSON interchange schema.
#[derive(Debug, Serialize, Deserialize)]
struct SegRecord {
    vertex: usize,
    orient: Orientation,
    line: i64,
    lo: i64,
    hi: i64,
}

impl GridRepresentation {
    pub fn to_json(&self) -> String {
        let recs: Vec<SegRecord> = self
            .paths
            .iter()
            .enumerate()
            .map(|(vertex, s)| SegRecord {
                vertex,
                orient: s.orient,
                line: s.line,
                lo: s.lo,
                hi: s.hi,
            })
            .collect();
        serde_json::to_string_pretty(&recs).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<GridRepresentation, RepError> {
        let recs: Vec<SegRecord> =
            serde_json::from_str(text).map_err(|e| RepError::BadFile(e.to_string()))?;
        let mut paths = vec![None; recs.len()];
        for r in &recs {
            if r.vertex >= recs.len() || paths[r.vertex].is_some() {
                return Err(RepError::BadFile(format!(
                    "bad or duplicate vertex id {}",
                    r.vertex
                )));
            }
            paths[r.vertex] = Some(PathSeg {
                orient: r.orient,
                line: r.line,
                lo: r.lo,
                hi: r.hi,
            });
        }
        Ok(GridRepresentation::new(
            paths.into_iter().map(|p| p.unwrap()).collect(),
        ))
    }
}
