//! Full binary trees and their correspondence with triangulations.
//!
//! A triangulation of an `(t + 2)`-gon corresponds to a full binary tree with
//! `t` internal nodes. Internal nodes are triangles and leaves are hull
//! edges other than the root edge `(0, m-1)`. A flip is a rotation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polygon::{Edge, Triangle, Triangulation, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinTree {
    Leaf,
    Node(Box<BinTree>, Box<BinTree>),
}

impl BinTree {
    pub fn node(left: BinTree, right: BinTree) -> Self {
        BinTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinTree::Leaf => 1,
            BinTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        self.leaves() - 1
    }

    /// Parses `.` for a leaf and `(L R)` for an internal node; whitespace is
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_at(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Tree(format!("trailing input at offset {pos}")));
        }
        Ok(tree)
    }
}

fn parse_at(chars: &[char], pos: &mut usize) -> Result<BinTree> {
    match chars.get(*pos) {
        Some('.') => {
            *pos += 1;
            Ok(BinTree::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let left = parse_at(chars, pos)?;
            let right = parse_at(chars, pos)?;
            if chars.get(*pos) != Some(&')') {
                return Err(Error::Tree(format!("expected `)` at offset {}", *pos)));
            }
            *pos += 1;
            Ok(BinTree::node(left, right))
        }
        Some(c) => Err(Error::Tree(format!("unexpected `{c}` at offset {}", *pos))),
        None => Err(Error::Tree("unexpected end of input".into())),
    }
}

impl fmt::Display for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinTree::Leaf => write!(f, "."),
            BinTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl FromStr for BinTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinTree::parse(s)
    }
}

/// Builds the triangulation of the `(t + 2)`-gon encoded by `tree`.
///
/// An internal node spanning vertices `lo..hi` whose left subtree has `l`
/// leaves emits the triangle `(lo, lo + l, hi)`.
pub fn tree_to_triangulation(tree: &BinTree) -> Result<Triangulation> {
    let leaves = tree.leaves() as u32;
    if leaves < 2 {
        return Err(Error::Tree(
            "a polygon needs at least one internal node".into(),
        ));
    }
    let m = leaves + 1;
    let mut diagonals = Vec::new();
    emit(tree, 0, m - 1, m, &mut diagonals);
    Triangulation::new(m, diagonals)
}

fn emit(tree: &BinTree, lo: VertexId, hi: VertexId, m: u32, out: &mut Vec<Edge>) {
    if let BinTree::Node(l, r) = tree {
        let mid = lo + l.leaves() as u32;
        for (x, y) in [(lo, mid), (mid, hi)] {
            if Edge::new(x, y).is_diagonal(m) {
                out.push(Edge::new(x, y));
            }
        }
        emit(l, lo, mid, m, out);
        emit(r, mid, hi, m, out);
    }
}

/// Inverse of [`tree_to_triangulation`].
pub fn triangulation_to_tree(t: &Triangulation) -> BinTree {
    dual_tree(t).tree
}

/// The dual of a triangulation as a rooted binary tree, plus the triangle
/// behind each internal node in preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    pub tree: BinTree,
    pub triangles: Vec<Triangle>,
}

impl DualTree {
    /// Dual edges, one per diagonal.
    pub fn edge_count(&self) -> usize {
        self.triangles.len().saturating_sub(1)
    }
}

/// Rooted at the triangle on hull edge `(0, m-1)`; children are ordered by
/// the position of the shared diagonal along the hull.
pub fn dual_tree(t: &Triangulation) -> DualTree {
    let mut triangles = Vec::with_capacity(t.m() as usize - 2);
    let tree = build(t, 0, t.m() - 1, &mut triangles);
    DualTree { tree, triangles }
}

fn build(t: &Triangulation, lo: VertexId, hi: VertexId, tris: &mut Vec<Triangle>) -> BinTree {
    if hi - lo == 1 {
        return BinTree::Leaf;
    }
    let apex = t
        .inner_apex(Edge::new(lo, hi))
        .expect("spanning edge has an inner triangle");
    tris.push([lo, apex, hi]);
    let left = build(t, lo, apex, tris);
    let right = build(t, apex, hi, tris);
    BinTree::node(left, right)
}
