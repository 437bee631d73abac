//! Seed vectors, the labeled binary tree they generate, and the ordered
//! vector family read off it.
//!
//! For n >= 2 the seed `w_vector(n)` is a zero-sum integer vector with no
//! zero entries. A tree is grown from it: each node's label donates its
//! positive positions to a left child and its negative positions to a right
//! child (when the donated set has at least two positions), and the child
//! label is the seed of the donated size written into those positions. The
//! tree has exactly n - 1 nodes and its preorder labels form `u_set(n)`, a
//! pairwise-orthogonal family spanning the zero-sum vectors of length n.

use std::fmt::Write as _;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{IntVector, Integer};

/// Mirror behaviour of a vector in `u_set(n)`: either u_j = u_{n-1-j} for
/// all j, or u_j = -u_{n-1-j} for all j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorSymmetry {
    Symmetric,
    SkewSymmetric,
}

impl VectorSymmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            VectorSymmetry::Symmetric => "symmetric",
            VectorSymmetry::SkewSymmetric => "skew-symmetric",
        }
    }
}

/// One vector of `u_set(n)` with its preorder position (1-based) and its
/// mirror class.
#[derive(Clone, Debug)]
pub struct BasisVector {
    pub vector: IntVector,
    pub dfs_index: usize,
    pub symmetry: VectorSymmetry,
}

/// Node of the labeled tree.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub label: IntVector,
    pub left: Option<Box<TreeNode>>,
    pub right: Option<Box<TreeNode>>,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }
}

/// The labeled binary tree grown from `w_vector(n)`.
#[derive(Clone, Debug)]
pub struct LabeledTree {
    n: usize,
    root: TreeNode,
}

/// Zero-sum seed vector of length n (n >= 2), 0-indexed entries.
///
/// n odd: (n-1)/2 at even positions, -(n+1)/2 at odd positions. n = 2 and
/// n = 4 are fixed seeds; larger even n repeats the seed of n/2 twice.
pub fn w_vector(n: usize) -> Result<IntVector> {
    if n < 2 {
        return Err(Error::Argument(format!("seed vector needs length >= 2, got {n}")));
    }
    let v = match n {
        2 => vec![1i64, -1],
        4 => vec![1, -1, -1, 1],
        n if n % 2 == 1 => {
            let up = (n as i64 - 1) / 2;
            let down = -(n as i64 + 1) / 2;
            (0..n).map(|i| if i % 2 == 0 { up } else { down }).collect()
        }
        n => {
            let half = w_vector(n / 2)?;
            return Ok(IntVector::new(
                (0..n).map(|i| half.get(i % (n / 2)).clone()).collect(),
            ));
        }
    };
    Ok(IntVector::from_i64(&v))
}

/// Writes `seed` into `positions` of a zero vector of length n.
fn place(seed: &IntVector, positions: &[usize], n: usize) -> IntVector {
    debug_assert_eq!(seed.len(), positions.len());
    let mut entries = vec![Integer::from(0); n];
    for (r, &p) in positions.iter().enumerate() {
        entries[p] = seed.get(r).clone();
    }
    IntVector::new(entries)
}

fn grow(label: IntVector) -> Result<TreeNode> {
    let n = label.len();
    let pos = label.positive_support();
    let neg = label.negative_support();
    let left = if pos.len() >= 2 {
        Some(Box::new(grow(place(&w_vector(pos.len())?, &pos, n))?))
    } else {
        None
    };
    let right = if neg.len() >= 2 {
        Some(Box::new(grow(place(&w_vector(neg.len())?, &neg, n))?))
    } else {
        None
    };
    Ok(TreeNode { label, left, right })
}

/// Grows the full labeled tree for length n (n >= 2).
pub fn build_tree(n: usize) -> Result<LabeledTree> {
    let root = grow(w_vector(n)?)?;
    let tree = LabeledTree { n, root };
    debug_assert_eq!(tree.node_count(), n - 1);
    Ok(tree)
}

impl LabeledTree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> &TreeNode {
        &self.root
    }

    pub fn node_count(&self) -> usize {
        self.preorder().len()
    }

    /// Preorder traversal: node, then left subtree, then right subtree.
    pub fn preorder(&self) -> Vec<&TreeNode> {
        fn walk<'a>(node: &'a TreeNode, out: &mut Vec<&'a TreeNode>) {
            out.push(node);
            if let Some(l) = &node.left {
                walk(l, out);
            }
            if let Some(r) = &node.right {
                walk(r, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }

    /// Preorder list of (path, label) pairs, where the path spells the
    /// left/right turns from the root ("" for the root, "LR" for the right
    /// child of the left child, ...).
    pub fn paths(&self) -> Vec<(String, &IntVector)> {
        fn walk<'a>(node: &'a TreeNode, path: String, out: &mut Vec<(String, &'a IntVector)>) {
            out.push((path.clone(), &node.label));
            if let Some(l) = &node.left {
                walk(l, format!("{path}L"), out);
            }
            if let Some(r) = &node.right {
                walk(r, format!("{path}R"), out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, String::new(), &mut out);
        out
    }

    /// Indented text rendering, children two spaces deeper than parents.
    pub fn render_text(&self) -> String {
        fn walk(node: &TreeNode, depth: usize, tag: &str, out: &mut String) {
            let _ = writeln!(out, "{}{}{}", "  ".repeat(depth), tag, node.label);
            if let Some(l) = &node.left {
                walk(l, depth + 1, "L: ", out);
            }
            if let Some(r) = &node.right {
                walk(r, depth + 1, "R: ", out);
            }
        }
        let mut out = String::new();
        walk(&self.root, 0, "", &mut out);
        out
    }
}

/// Mirror class of a tree label: skew exactly when its nonzero part is the
/// two-point seed (1, -1).
pub fn classify_vector(u: &IntVector) -> VectorSymmetry {
    let nz = u.nonzero_entries();
    if nz.len() == 2 && nz[0].is_one() && nz[1] == Integer::from(-1) {
        VectorSymmetry::SkewSymmetric
    } else {
        VectorSymmetry::Symmetric
    }
}

/// The ordered vector family of length n: preorder labels of the tree,
/// indexed from 1, each classified by mirror behaviour.
pub fn u_set(n: usize) -> Result<Vec<BasisVector>> {
    let tree = build_tree(n)?;
    Ok(tree
        .preorder()
        .into_iter()
        .enumerate()
        .map(|(i, node)| BasisVector {
            vector: node.label.clone(),
            dfs_index: i + 1,
            symmetry: classify_vector(&node.label),
        })
        .collect())
}

/// Counts (skew, symmetric) vectors in `u_set(n)` and checks the counts
/// against the closed forms floor(n/2) and floor((n-1)/2).
pub fn symmetry_census(n: usize) -> Result<(usize, usize)> {
    let set = u_set(n)?;
    let skew = set
        .iter()
        .filter(|b| b.symmetry == VectorSymmetry::SkewSymmetric)
        .count();
    let symmetric = set.len() - skew;
    assert_eq!(skew, n / 2, "skew count disagrees with closed form");
    assert_eq!(symmetric, (n - 1) / 2, "symmetric count disagrees with closed form");
    Ok((skew, symmetric))
}
