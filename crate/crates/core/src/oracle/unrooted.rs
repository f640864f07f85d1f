use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::permutation::Permutation;
use super::rooted::RootedTree;

/// A vertex of an unrooted tree: leaves carry labels `1..=n`, internal
/// vertices carry arbitrary ids that play no role in equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Leaf(usize),
    Internal(usize),
}

/// A leaf-labeled tree whose vertices all have degree 1 or 3.
///
/// Equality and hashing go through a canonical key: the tree is hung from the
/// neighbour of leaf 1 and read off as a canonical [`RootedTree`] on the
/// remaining leaves. Leaf 1 always exists, so the key does not depend on
/// internal ids.
#[derive(Debug, Clone)]
pub struct UnrootedTree {
    leaves: usize,
    edges: Vec<(Vertex, Vertex)>,
    key: RootedTree,
}

impl UnrootedTree {
    /// Builds a tree from an edge list over leaves `1..=leaves`. Returns
    /// `None` unless the edges form a tree with every vertex of degree 1 or 3,
    /// exactly the leaves having degree 1, and `leaves >= 2`.
    pub fn from_edges(leaves: usize, edges: Vec<(Vertex, Vertex)>) -> Option<Self> {
        if leaves < 2 || edges.len() != 2 * leaves - 3 {
            return None;
        }
        let adjacency = adjacency(&edges);
        if adjacency.len() != edges.len() + 1 {
            return None;
        }
        for (v, nbrs) in &adjacency {
            let ok = match v {
                Vertex::Leaf(l) => (1..=leaves).contains(l) && nbrs.len() == 1,
                Vertex::Internal(_) => nbrs.len() == 3,
            };
            if !ok {
                return None;
            }
        }
        // |E| = |V| − 1 plus connectivity gives a tree.
        let mut seen = vec![Vertex::Leaf(1)];
        let mut stack = vec![Vertex::Leaf(1)];
        while let Some(v) = stack.pop() {
            for &w in adjacency.get(&v)? {
                if !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        if seen.len() != adjacency.len() {
            return None;
        }
        let key = canonical_key(&adjacency);
        Some(UnrootedTree { leaves, edges, key })
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn canonical_key(&self) -> &RootedTree {
        &self.key
    }

    pub fn relabel(&self, sigma: &Permutation) -> Self {
        let map = |v: Vertex| match v {
            Vertex::Leaf(l) => Vertex::Leaf(sigma.apply(l)),
            internal => internal,
        };
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
        let key = canonical_key(&adjacency(&edges));
        UnrootedTree {
            leaves: self.leaves,
            edges,
            key,
        }
    }

    /// Subdivides edge `index` with a new internal vertex and hangs leaf
    /// `leaves + 1` from it.
    fn subdivide(&self, index: usize, internal_id: usize) -> Self {
        let (a, b) = self.edges[index];
        let mid = Vertex::Internal(internal_id);
        let leaf = Vertex::Leaf(self.leaves + 1);
        let mut edges = self.edges.clone();
        edges[index] = (a, mid);
        edges.push((mid, b));
        edges.push((mid, leaf));
        let key = canonical_key(&adjacency(&edges));
        UnrootedTree {
            leaves: self.leaves + 1,
            edges,
            key,
        }
    }
}

impl PartialEq for UnrootedTree {
    fn eq(&self, other: &Self) -> bool {
        self.leaves == other.leaves && self.key == other.key
    }
}

impl Eq for UnrootedTree {}

impl Hash for UnrootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.leaves.hash(state);
        self.key.hash(state);
    }
}

fn adjacency(edges: &[(Vertex, Vertex)]) -> HashMap<Vertex, Vec<Vertex>> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    adj
}

fn hang(adj: &HashMap<Vertex, Vec<Vertex>>, v: Vertex, parent: Vertex) -> RootedTree {
    match v {
        Vertex::Leaf(l) => RootedTree::Leaf(l),
        Vertex::Internal(_) => {
            let mut children = adj[&v].iter().filter(|&&w| w != parent);
            let a = *children.next().expect("internal vertex has degree 3");
            let b = *children.next().expect("internal vertex has degree 3");
            RootedTree::join(hang(adj, a, v), hang(adj, b, v))
        }
    }
}

fn canonical_key(adj: &HashMap<Vertex, Vec<Vertex>>) -> RootedTree {
    let root = Vertex::Leaf(1);
    hang(adj, adj[&root][0], root)
}

/// All unrooted binary trees on leaves `{1, …, n}`, `n >= 2`, built by
/// subdividing each edge of every tree on `{1, …, n − 1}` with leaf `n`.
pub(crate) fn enumerate(n: usize) -> Vec<UnrootedTree> {
    if n < 2 {
        return Vec::new();
    }
    let seed = UnrootedTree::from_edges(2, vec![(Vertex::Leaf(1), Vertex::Leaf(2))])
        .expect("single edge is a valid tree");
    let mut trees = vec![seed];
    for leaves in 2..n {
        // A tree with `leaves` leaves has internal ids 0..leaves-2.
        let internal_id = leaves - 2;
        trees = trees
            .iter()
            .flat_map(|t| (0..t.edges.len()).map(move |i| t.subdivide(i, internal_id)))
            .collect();
    }
    trees
}
