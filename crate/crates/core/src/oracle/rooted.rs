use std::fmt;

use super::permutation::Permutation;

/// A leaf-labeled rooted binary tree in canonical form: the children of every
/// internal node satisfy `left <= right` under the derived order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootedTree {
    Leaf(usize),
    Node(Box<RootedTree>, Box<RootedTree>),
}

impl RootedTree {
    /// Joins two subtrees under a new root, in canonical order.
    pub fn join(a: RootedTree, b: RootedTree) -> Self {
        if a <= b {
            RootedTree::Node(Box::new(a), Box::new(b))
        } else {
            RootedTree::Node(Box::new(b), Box::new(a))
        }
    }

    pub fn canonicalize(&self) -> Self {
        match self {
            RootedTree::Leaf(l) => RootedTree::Leaf(*l),
            RootedTree::Node(a, b) => Self::join(a.canonicalize(), b.canonicalize()),
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            RootedTree::Leaf(_) => true,
            RootedTree::Node(a, b) => a <= b && a.is_canonical() && b.is_canonical(),
        }
    }

    /// Replaces every leaf label `l` by `σ(l)`, returning the canonical form.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        match self {
            RootedTree::Leaf(l) => RootedTree::Leaf(sigma.apply(*l)),
            RootedTree::Node(a, b) => Self::join(a.relabel(sigma), b.relabel(sigma)),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            RootedTree::Leaf(l) => out.push(*l),
            RootedTree::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Every tree obtained by grafting `Leaf(label)` onto one of the
    /// `2·leaves − 1` edges (including the edge above the root).
    fn graft_everywhere(&self, label: usize, out: &mut Vec<RootedTree>) {
        out.push(Self::join(self.clone(), RootedTree::Leaf(label)));
        if let RootedTree::Node(a, b) = self {
            let mut left = Vec::new();
            a.graft_everywhere(label, &mut left);
            out.extend(left.into_iter().map(|t| Self::join(t, (**b).clone())));
            let mut right = Vec::new();
            b.graft_everywhere(label, &mut right);
            out.extend(right.into_iter().map(|t| Self::join((**a).clone(), t)));
        }
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootedTree::Leaf(l) => write!(f, "{l}"),
            RootedTree::Node(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All rooted binary trees on leaves `{1, …, n}`, built by inserting leaf `n`
/// into every tree on `{1, …, n − 1}`.
pub(crate) fn enumerate(n: usize) -> Vec<RootedTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut trees = vec![RootedTree::Leaf(1)];
    for label in 2..=n {
        let mut next = Vec::with_capacity(trees.len() * (2 * label - 3));
        for t in &trees {
            t.graft_everywhere(label, &mut next);
        }
        trees = next;
    }
    trees
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn enumeration_is_canonical_and_distinct() {
        for n in 1..=6 {
            let trees = enumerate(n);
            assert!(trees.iter().all(RootedTree::is_canonical));
            let distinct: HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
            for t in &trees {
                let mut leaves = t.leaves();
                leaves.sort_unstable();
                assert_eq!(leaves, (1..=n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let t = RootedTree::Node(
            Box::new(RootedTree::Node(
                Box::new(RootedTree::Leaf(3)),
                Box::new(RootedTree::Leaf(1)),
            )),
            Box::new(RootedTree::Leaf(2)),
        );
        let c = t.canonicalize();
        assert_eq!(c.canonicalize(), c);
        assert_eq!(c.to_string(), "(2,(1,3))");
    }

    #[test]
    fn relabel_by_identity_fixes_everything() {
        let id = Permutation::identity(5);
        for t in enumerate(5) {
            assert_eq!(t.relabel(&id), t);
        }
    }
}
