//! Recognition of contact B0-VPG graphs — graphs whose vertices can be
//! drawn as horizontal and vertical grid paths that may touch but never
//! cross or overlap — within chordal graphs, tree-cographs, P4-tidy graphs
//! and P5-free graphs. Every verdict ships with a checkable certificate:
//! a forbidden induced subgraph on rejection, a validated grid layout on
//! acceptance.

pub mod build;
pub mod chordal;
pub mod classes;
pub mod families;
pub mod graph;
pub mod layouts;
pub mod oracle;
pub mod patterns;
pub mod recognize;
pub mod render;
pub mod rep;
