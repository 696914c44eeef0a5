use crate::embed::PlaneGraph;

/// Largest vertex count representable by [`BitGraph`].
pub const MAX_BIT_VERTICES: usize = 64;

/// Simple undirected graph on at most 64 vertices with adjacency bitmasks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitGraph {
    adj: Vec<u64>,
}

impl BitGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_BIT_VERTICES, "BitGraph supports at most 64 vertices");
        BitGraph { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = BitGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// `None` when the plane graph has more than 64 vertices.
    pub fn from_plane(g: &PlaneGraph) -> Option<Self> {
        if g.n() > MAX_BIT_VERTICES {
            return None;
        }
        let mut b = BitGraph::empty(g.n());
        for (u, v) in g.edges() {
            b.add_edge(u, v);
        }
        Some(b)
    }

    pub fn from_masks(adj: Vec<u64>) -> Self {
        assert!(adj.len() <= MAX_BIT_VERTICES);
        BitGraph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn all_mask(&self) -> u64 {
        low_mask(self.n())
    }

    /// Vertices reachable from `from` inside `avail` (excluding `from`
    /// unless it is reachable through a cycle).
    pub fn reach(&self, from: usize, avail: u64) -> u64 {
        let mut seen = self.adj[from] & avail;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= avail & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        n <= 1 || (self.reach(0, self.all_mask()) | 1) == self.all_mask()
    }

    /// Adjacency lists in ascending order.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.adj.iter().map(|&a| bits(a).collect()).collect()
    }

    /// BFS distances to `target` through `avail` (plus the target itself);
    /// `u32::MAX` when unreachable.
    pub fn distances_to(&self, target: usize, avail: u64) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[target] = 0;
        let mut frontier = 1u64 << target;
        let mut seen = frontier;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= avail & !seen;
            for v in bits(next) {
                dist[v] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }
}

#[inline]
pub fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
