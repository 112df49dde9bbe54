//! Graph representation, unicyclic classification, and the distance and
//! branch machinery the closed-form pseudoinverse formulas consume.
//!
//! Vertices are 0-based `usize` indices internally; every external format
//! (edge-list documents, CLI output) is 1-based. Edges keep their input
//! order, which fixes the column order of the incidence matrix.

use std::collections::HashSet;
use std::error::Error;
use std::fmt;

const UNREACHABLE: u32 = u32::MAX;

/// Simple connected undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

/// Classification gating which closed-form formulas apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    /// Connected with m = n - 1 edges.
    Tree,
    /// Connected with m = n edges and an odd cycle; invertible incidence matrix.
    OddUnicyclic,
    /// Connected with m = n edges and an even cycle; singular incidence matrix.
    EvenUnicyclic,
    /// Anything else (here: connected with m > n).
    Other,
}

impl GraphClass {
    pub fn is_unicyclic(self) -> bool {
        matches!(self, GraphClass::OddUnicyclic | GraphClass::EvenUnicyclic)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GraphClass::Tree => "Tree",
            GraphClass::OddUnicyclic => "OddUnicyclic",
            GraphClass::EvenUnicyclic => "EvenUnicyclic",
            GraphClass::Other => "Other",
        };
        write!(f, "{name}")
    }
}

/// The unique cycle of a unicyclic graph, in canonical orientation: the walk
/// starts at the smallest cycle vertex and proceeds toward its smaller-labeled
/// cycle neighbor, so the descriptor is reproducible across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDescriptor {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl CycleDescriptor {
    /// Cycle vertices in traversal order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge indices in the same traversal order; edge `k` joins vertex `k`
    /// and vertex `k + 1` (cyclically).
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }
}

/// Validation error for edge-list input or programmatic construction.
///
/// `edge` fields are 1-based ordinals into the edge list; `line` fields are
/// 1-based line numbers of the source document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    MissingHeader,
    MalformedLine { line: usize, text: String },
    EdgeCountMismatch { expected: usize, found: usize },
    EmptyVertexSet,
    SelfLoop { edge: usize, vertex: usize },
    DuplicateEdge { edge: usize, u: usize, v: usize },
    VertexOutOfRange { edge: usize, label: usize, n: usize },
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::MissingHeader => write!(f, "missing `n m` header line"),
            GraphError::MalformedLine { line, text } => {
                write!(f, "malformed line {line}: `{text}`")
            }
            GraphError::EdgeCountMismatch { expected, found } => {
                write!(f, "expected {expected} edge lines, found {found}")
            }
            GraphError::EmptyVertexSet => write!(f, "graph must have at least one vertex"),
            GraphError::SelfLoop { edge, vertex } => {
                write!(f, "edge {edge} is a self-loop at vertex {vertex}")
            }
            GraphError::DuplicateEdge { edge, u, v } => {
                write!(f, "edge {edge} duplicates {{{u},{v}}}")
            }
            GraphError::VertexOutOfRange { edge, label, n } => {
                write!(f, "edge {edge} uses vertex {label}, outside 1..={n}")
            }
            GraphError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl Error for GraphError {}

/// Error for cycle operations requested on a graph that is not unicyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotUnicyclicError {
    pub class: GraphClass,
}

impl fmt::Display for NotUnicyclicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph is {} rather than unicyclic", self.class)
    }
}

impl Error for NotUnicyclicError {}

/// Error for tree-distance queries with an invalid edge or endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeDistanceError {
    /// Deleting the edge disconnected the graph, so it is not a cycle edge.
    NotCycleEdge { edge: usize },
    /// The given vertex is not an endpoint of the edge.
    NotAnEndpoint { edge: usize, vertex: usize },
}

impl fmt::Display for TreeDistanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDistanceError::NotCycleEdge { edge } => {
                write!(f, "edge index {edge} is not on the cycle")
            }
            TreeDistanceError::NotAnEndpoint { edge, vertex } => {
                write!(f, "vertex {vertex} is not an endpoint of edge index {edge}")
            }
        }
    }
}

impl Error for TreeDistanceError {}

/// Parses an edge-list document.
///
/// Format: a header line `n m`, then `m` lines `u v` with 1-based labels;
/// tokens are whitespace-separated, lines starting with `#` (and blank
/// lines) are ignored. Line `i` of the edge section defines edge `i`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or(GraphError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let parse_usize = |token: Option<&str>, line: usize, text: &str| {
        token
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| GraphError::MalformedLine {
                line,
                text: text.trim().to_owned(),
            })
    };
    let n = parse_usize(tokens.next(), header_line, header)?;
    let m = parse_usize(tokens.next(), header_line, header)?;
    if tokens.next().is_some() {
        return Err(GraphError::MalformedLine {
            line: header_line,
            text: header.trim().to_owned(),
        });
    }

    let mut pairs = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        let u = parse_usize(tokens.next(), line, text)?;
        let v = parse_usize(tokens.next(), line, text)?;
        if tokens.next().is_some() {
            return Err(GraphError::MalformedLine {
                line,
                text: text.trim().to_owned(),
            });
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(GraphError::EdgeCountMismatch {
            expected: m,
            found: pairs.len(),
        });
    }
    Graph::from_edges(n, &pairs)
}

impl Graph {
    /// Builds and validates a graph from 1-based labeled edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = HashSet::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            let edge = i + 1;
            for label in [u, v] {
                if label == 0 || label > n {
                    return Err(GraphError::VertexOutOfRange { edge, label, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge, vertex: u });
            }
            let pair = (u.min(v) - 1, u.max(v) - 1);
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateEdge {
                    edge,
                    u: pair.0 + 1,
                    v: pair.1 + 1,
                });
            }
            normalized.push(pair);
        }
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in normalized.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        let graph = Graph {
            n,
            edges: normalized,
            adj,
        };
        if graph.bfs(0, None).contains(&UNREACHABLE) {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`, smaller index first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Incident `(neighbor, edge index)` pairs of vertex `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Writes the graph back out in the edge-list format accepted by
    /// [`parse_graph`], with endpoints smaller-label-first.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Breadth-first distances from `src`, optionally ignoring one edge.
    /// Unreachable vertices get `u32::MAX`.
    fn bfs(&self, src: usize, skip_edge: Option<usize>) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::with_capacity(self.n);
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &self.adj[v] {
                if Some(e) == skip_edge || dist[w] != UNREACHABLE {
                    continue;
                }
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
        dist
    }

    /// Total classification of a valid (connected) graph.
    pub fn classify(&self) -> GraphClass {
        let m = self.edges.len();
        if m == self.n - 1 {
            GraphClass::Tree
        } else if m == self.n {
            if self.cycle_of_unicyclic().len().is_multiple_of(2) {
                GraphClass::EvenUnicyclic
            } else {
                GraphClass::OddUnicyclic
            }
        } else {
            GraphClass::Other
        }
    }

    /// The unique cycle, assuming `m == n`. Leaves are peeled repeatedly;
    /// what survives is exactly the cycle.
    fn cycle_of_unicyclic(&self) -> CycleDescriptor {
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &(w, _) in &self.adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }

        let start = (0..self.n)
            .find(|&v| !removed[v])
            .expect("a connected graph with m = n has a cycle");
        let next_of = |v: usize, banned: usize| -> (usize, usize) {
            self.adj[v]
                .iter()
                .copied()
                .filter(|&(w, _)| !removed[w] && w != banned)
                .min()
                .expect("cycle vertices have two cycle neighbors")
        };
        // Walk toward the smaller-labeled neighbor of the start vertex.
        let (first, first_edge) = next_of(start, start);
        let mut vertices = vec![start];
        let mut edge_indices = vec![first_edge];
        let mut prev = start;
        let mut cur = first;
        while cur != start {
            vertices.push(cur);
            let (next, edge) = next_of(cur, prev);
            edge_indices.push(edge);
            prev = cur;
            cur = next;
        }
        CycleDescriptor {
            vertices,
            edges: edge_indices,
        }
    }

    /// The unique cycle of a unicyclic graph in canonical orientation.
    pub fn find_cycle(&self) -> Result<CycleDescriptor, NotUnicyclicError> {
        let class = self.classify();
        if !class.is_unicyclic() {
            return Err(NotUnicyclicError { class });
        }
        Ok(self.cycle_of_unicyclic())
    }

    /// Shortest-path distance between two vertices.
    pub fn dist(&self, i: usize, j: usize) -> usize {
        assert!(i < self.n && j < self.n, "vertex index out of range");
        self.bfs(i, None)[j] as usize
    }

    /// Shortest distance between vertex `j` and either endpoint of edge `e`.
    pub fn dist_edge_vertex(&self, e: usize, j: usize) -> usize {
        assert!(e < self.edges.len(), "edge index out of range");
        assert!(j < self.n, "vertex index out of range");
        let (r, s) = self.edges[e];
        let from_j = self.bfs(j, None);
        (from_j[r].min(from_j[s])) as usize
    }

    /// Distance from endpoint `r` of cycle edge `e` to vertex `j`, measured
    /// in the tree obtained by deleting `e`.
    pub fn dist_in_tree_minus_edge(
        &self,
        e: usize,
        r: usize,
        j: usize,
    ) -> Result<usize, TreeDistanceError> {
        assert!(e < self.edges.len(), "edge index out of range");
        assert!(r < self.n && j < self.n, "vertex index out of range");
        let (u, v) = self.edges[e];
        if r != u && r != v {
            return Err(TreeDistanceError::NotAnEndpoint { edge: e, vertex: r });
        }
        let dist = self.bfs(r, Some(e));
        if dist.contains(&UNREACHABLE) {
            return Err(TreeDistanceError::NotCycleEdge { edge: e });
        }
        Ok(dist[j] as usize)
    }

    /// Number of edges on a shortest path between a vertex of `a` and a
    /// vertex of `b`; zero when the edges share a vertex.
    pub fn dist_edge_edge(&self, a: usize, b: usize) -> usize {
        assert!(
            a < self.edges.len() && b < self.edges.len(),
            "edge index out of range"
        );
        let (ra, sa) = self.edges[a];
        let (rb, sb) = self.edges[b];
        let from_ra = self.bfs(ra, None);
        let from_sa = self.bfs(sa, None);
        from_ra[rb]
            .min(from_ra[sb])
            .min(from_sa[rb])
            .min(from_sa[sb]) as usize
    }

    /// Full unicyclic decomposition with all distance caches.
    pub fn decompose(&self) -> Result<UnicyclicDecomposition, NotUnicyclicError> {
        UnicyclicDecomposition::build(self)
    }
}

/// Everything the closed-form formulas need about a unicyclic graph, built
/// once: the cycle, per-vertex nearest cycle anchors, branch sizes, the
/// two-component split behind every off-cycle edge, and cached distances
/// (all-pairs, plus tree distances from both endpoints of each cycle edge).
///
/// All caches are immutable after construction.
#[derive(Debug, Clone)]
pub struct UnicyclicDecomposition {
    graph: Graph,
    cycle: CycleDescriptor,
    cycle_edge_pos: Vec<Option<usize>>,
    anchor_vertex: Vec<usize>,
    anchor_dist: Vec<u32>,
    branch_sizes: Vec<usize>,
    // Branch-forest bookkeeping: preorder interval per vertex, subtree sizes,
    // and the deeper endpoint of every off-cycle edge.
    tin: Vec<u32>,
    tout: Vec<u32>,
    subtree_size: Vec<usize>,
    offcycle_child: Vec<Option<usize>>,
    dist: Vec<Vec<u32>>,
    tree_dist: Vec<[Vec<u32>; 2]>,
    branch_sum: Vec<[u64; 2]>,
}

impl UnicyclicDecomposition {
    fn build(graph: &Graph) -> Result<Self, NotUnicyclicError> {
        let cycle = graph.find_cycle()?;
        let n = graph.vertex_count();

        let mut cycle_edge_pos = vec![None; graph.edge_count()];
        for (pos, &e) in cycle.edges.iter().enumerate() {
            cycle_edge_pos[e] = Some(pos);
        }
        let mut on_cycle = vec![false; n];
        for &v in &cycle.vertices {
            on_cycle[v] = true;
        }

        // Branch forest: the graph minus its cycle edges. BFS outward from
        // every cycle vertex at once; each vertex lands in exactly one branch.
        let mut anchor_vertex = vec![usize::MAX; n];
        let mut anchor_dist = vec![0u32; n];
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = std::collections::VecDeque::new();
        for &t in &cycle.vertices {
            anchor_vertex[t] = t;
            order.push(t);
            queue.push_back(t);
        }
        while let Some(v) = queue.pop_front() {
            for &(w, e) in graph.incident(v) {
                if cycle_edge_pos[e].is_some() || anchor_vertex[w] != usize::MAX {
                    continue;
                }
                anchor_vertex[w] = anchor_vertex[v];
                anchor_dist[w] = anchor_dist[v] + 1;
                parent[w] = v;
                order.push(w);
                queue.push_back(w);
            }
        }
        debug_assert!(anchor_vertex.iter().all(|&a| a != usize::MAX));

        // Subtree sizes bottom-up over the BFS order.
        let mut subtree_size = vec![1usize; n];
        for &v in order.iter().rev() {
            if parent[v] != usize::MAX {
                subtree_size[parent[v]] += subtree_size[v];
            }
        }
        let branch_sizes: Vec<usize> = cycle.vertices.iter().map(|&t| subtree_size[t]).collect();
        debug_assert_eq!(branch_sizes.iter().sum::<usize>(), n);

        // Preorder intervals for O(1) "is j in the subtree of c" tests.
        let mut children = vec![Vec::new(); n];
        for &v in &order {
            if parent[v] != usize::MAX {
                children[parent[v]].push(v);
            }
        }
        let mut tin = vec![0u32; n];
        let mut tout = vec![0u32; n];
        let mut clock = 0u32;
        let mut stack: Vec<(usize, bool)> =
            cycle.vertices.iter().rev().map(|&t| (t, false)).collect();
        while let Some((v, done)) = stack.pop() {
            if done {
                tout[v] = clock;
                continue;
            }
            tin[v] = clock;
            clock += 1;
            stack.push((v, true));
            for &c in children[v].iter().rev() {
                stack.push((c, false));
            }
        }

        let offcycle_child: Vec<Option<usize>> = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                if cycle_edge_pos[e].is_some() {
                    None
                } else {
                    // Off-cycle edges are branch-forest edges: one endpoint
                    // is the other's parent.
                    Some(if anchor_dist[u] > anchor_dist[v] {
                        u
                    } else {
                        v
                    })
                }
            })
            .collect();

        let dist: Vec<Vec<u32>> = (0..n).map(|v| graph.bfs(v, None)).collect();

        let mut tree_dist = Vec::with_capacity(cycle.len());
        let mut branch_sum = Vec::with_capacity(cycle.len());
        for &e in &cycle.edges {
            let (r, s) = graph.endpoints(e);
            let from_r = graph.bfs(r, Some(e));
            let from_s = graph.bfs(s, Some(e));
            let weighted = |from: &[u32]| -> u64 {
                cycle
                    .vertices
                    .iter()
                    .zip(&branch_sizes)
                    .map(|(&t, &nt)| nt as u64 * from[t] as u64)
                    .sum()
            };
            branch_sum.push([weighted(&from_r), weighted(&from_s)]);
            tree_dist.push([from_r, from_s]);
        }

        Ok(UnicyclicDecomposition {
            graph: graph.clone(),
            cycle,
            cycle_edge_pos,
            anchor_vertex,
            anchor_dist,
            branch_sizes,
            tin,
            tout,
            subtree_size,
            offcycle_child,
            dist,
            tree_dist,
            branch_sum,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cycle(&self) -> &CycleDescriptor {
        &self.cycle
    }

    /// Nearest cycle vertex of `v` and the hop count to it.
    pub fn anchor(&self, v: usize) -> (usize, usize) {
        (self.anchor_vertex[v], self.anchor_dist[v] as usize)
    }

    pub fn is_cycle_vertex(&self, v: usize) -> bool {
        self.anchor_vertex[v] == v && self.anchor_dist[v] == 0
    }

    pub fn is_cycle_edge(&self, e: usize) -> bool {
        self.cycle_edge_pos[e].is_some()
    }

    /// Position of `e` in the canonical cycle walk, if it is a cycle edge.
    pub fn cycle_edge_position(&self, e: usize) -> Option<usize> {
        self.cycle_edge_pos[e]
    }

    /// Vertex count of the tree branch rooted at cycle vertex `t`
    /// (`t` itself included).
    pub fn branch_size(&self, t: usize) -> usize {
        assert!(self.is_cycle_vertex(t), "not a cycle vertex");
        self.subtree_size[t]
    }

    /// Branch sizes parallel to `cycle().vertices()`.
    pub fn branch_sizes(&self) -> &[usize] {
        &self.branch_sizes
    }

    /// Size of the component of the graph minus `e` that does not contain
    /// the cycle. Zero for cycle edges, whose deletion leaves one component.
    pub fn far_component_size(&self, e: usize) -> usize {
        match self.offcycle_child[e] {
            Some(child) => self.subtree_size[child],
            None => 0,
        }
    }

    /// Size of the component of the graph minus `e` that contains the cycle.
    pub fn near_component_size(&self, e: usize) -> usize {
        self.graph.vertex_count() - self.far_component_size(e)
    }

    /// Whether `v` lies in the component of the graph minus `e` that does
    /// not contain the cycle. Always false for cycle edges.
    pub fn in_far_component(&self, e: usize, v: usize) -> bool {
        match self.offcycle_child[e] {
            Some(child) => self.tin[child] <= self.tin[v] && self.tin[v] < self.tout[child],
            None => false,
        }
    }

    /// Materializes the cycle-free component behind an off-cycle edge;
    /// mostly for reporting and tests.
    pub fn far_component_vertices(&self, e: usize) -> Vec<usize> {
        (0..self.graph.vertex_count())
            .filter(|&v| self.in_far_component(e, v))
            .collect()
    }

    /// Cached all-pairs distance.
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u][v] as usize
    }

    /// Cached edge-to-vertex distance.
    pub fn dist_edge_vertex(&self, e: usize, v: usize) -> usize {
        let (r, s) = self.graph.endpoints(e);
        (self.dist[r][v].min(self.dist[s][v])) as usize
    }

    /// Cached edge-to-edge distance.
    pub fn dist_edge_edge(&self, a: usize, b: usize) -> usize {
        let (ra, sa) = self.graph.endpoints(a);
        let (rb, sb) = self.graph.endpoints(b);
        self.dist[ra][rb]
            .min(self.dist[ra][sb])
            .min(self.dist[sa][rb])
            .min(self.dist[sa][sb]) as usize
    }

    /// Cached distance from an endpoint of cycle edge `e` to `v`, measured in
    /// the tree left by deleting `e`. Panics unless `e` is a cycle edge and
    /// `endpoint` is one of its endpoints.
    pub fn tree_dist(&self, e: usize, endpoint: usize, v: usize) -> usize {
        let pos = self.cycle_edge_pos[e].expect("not a cycle edge");
        let (r, s) = self.graph.endpoints(e);
        let side = if endpoint == r {
            0
        } else if endpoint == s {
            1
        } else {
            panic!("vertex {endpoint} is not an endpoint of edge index {e}")
        };
        self.tree_dist[pos][side][v] as usize
    }

    /// Cached `sum over cycle vertices t of n_t * d(endpoint, t)` in the tree
    /// left by deleting cycle edge `e`.
    pub fn weighted_branch_distance_sum(&self, e: usize, endpoint: usize) -> u64 {
        let pos = self.cycle_edge_pos[e].expect("not a cycle edge");
        let (r, s) = self.graph.endpoints(e);
        let side = if endpoint == r {
            0
        } else if endpoint == s {
            1
        } else {
            panic!("vertex {endpoint} is not an endpoint of edge index {e}")
        };
        self.branch_sum[pos][side]
    }
}

/// Edge-list document of the 9-vertex even unicyclic example used across
/// the test suites.
#[cfg(test)]
pub(crate) const EXAMPLE_9: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/data/example9.txt"
));
