//! Finite directed graphs and their homomorphisms.
//!
//! Nodes are kept in canonical order (integers ascending, then binary words
//! lexicographically) and addressed by index; edges are a sorted set of index
//! pairs, so edge order is lexicographic on labels as well.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Budget, Error, Result};
use crate::words::BinaryWord;

/// A node identifier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Int(u64),
    Word(BinaryWord),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Word(w) => write!(f, "{w}"),
        }
    }
}

impl From<u64> for Label {
    fn from(i: u64) -> Self {
        Label::Int(i)
    }
}

impl From<BinaryWord> for Label {
    fn from(w: BinaryWord) -> Self {
        Label::Word(w)
    }
}

impl Label {
    pub fn as_word(&self) -> Option<&BinaryWord> {
        match self {
            Label::Word(w) => Some(w),
            Label::Int(_) => None,
        }
    }

    pub fn as_int(&self) -> Option<u64> {
        match self {
            Label::Int(i) => Some(*i),
            Label::Word(_) => None,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
struct GraphData {
    nodes: Vec<Label>,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

/// An immutable finite directed graph. Cloning is cheap.
#[derive(Clone)]
pub struct Graph(Arc<GraphData>);

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.nodes == other.0.nodes && self.0.edges == other.0.edges)
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field(
                "nodes",
                &self
                    .nodes()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
            )
            .field(
                "edges",
                &self
                    .edge_labels()
                    .map(|(s, t)| format!("{s}->{t}"))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl Graph {
    /// Builds a graph from labels. Nodes are sorted and deduplicated; edges
    /// must mention known nodes.
    pub fn new(nodes: Vec<Label>, edges: Vec<(Label, Label)>) -> Result<Graph> {
        let mut nodes = nodes;
        nodes.sort();
        nodes.dedup();
        let lookup = |l: &Label| {
            nodes
                .binary_search(l)
                .map_err(|_| Error::UnknownNode(l.to_string()))
        };
        let edges = edges
            .iter()
            .map(|(s, t)| Ok((lookup(s)?, lookup(t)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Graph::from_sorted_nodes(nodes, edges))
    }

    /// Builds a graph from nodes that are already strictly increasing and
    /// index pairs into them.
    pub(crate) fn from_sorted_nodes(nodes: Vec<Label>, mut edges: Vec<(usize, usize)>) -> Graph {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        edges.sort_unstable();
        edges.dedup();
        let mut out_adj = vec![Vec::new(); nodes.len()];
        let mut in_adj = vec![Vec::new(); nodes.len()];
        for &(s, t) in &edges {
            out_adj[s].push(t);
            in_adj[t].push(s);
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Graph(Arc::new(GraphData {
            nodes,
            edges,
            out_adj,
            in_adj,
        }))
    }

    /// Builds a graph whose nodes may be unsorted; edges are index pairs into
    /// the given node list.
    pub(crate) fn from_unsorted(nodes: Vec<Label>, edges: Vec<(usize, usize)>) -> Graph {
        let mut order: Vec<usize> = (0..nodes.len()).collect();
        order.sort_by(|&a, &b| nodes[a].cmp(&nodes[b]));
        let mut position = vec![0; nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut labels: Vec<Option<Label>> = nodes.into_iter().map(Some).collect();
        let sorted = order.iter().map(|&i| labels[i].take().unwrap()).collect();
        let edges = edges
            .into_iter()
            .map(|(s, t)| (position[s], position[t]))
            .collect();
        Graph::from_sorted_nodes(sorted, edges)
    }

    /// The graph with no nodes.
    pub fn empty() -> Graph {
        Graph::from_sorted_nodes(Vec::new(), Vec::new())
    }

    pub fn nodes(&self) -> &[Label] {
        &self.0.nodes
    }

    pub fn node_count(&self) -> usize {
        self.0.nodes.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0.edges
    }

    pub fn edge_count(&self) -> usize {
        self.0.edges.len()
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.0
            .edges
            .iter()
            .map(|&(s, t)| (&self.0.nodes[s], &self.0.nodes[t]))
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.0.nodes[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.0.nodes.binary_search(label).ok()
    }

    pub(crate) fn require(&self, label: &Label) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        self.0.edges.binary_search(&(s, t)).is_ok()
    }

    pub fn has_edge_labels(&self, s: &Label, t: &Label) -> bool {
        match (self.index_of(s), self.index_of(t)) {
            (Some(s), Some(t)) => self.has_edge(s, t),
            _ => false,
        }
    }

    pub fn out_neighbors(&self, s: usize) -> &[usize] {
        &self.0.out_adj[s]
    }

    pub fn in_neighbors(&self, t: usize) -> &[usize] {
        &self.0.in_adj[t]
    }

    /// Nodes ordered so that every non-loop edge goes forward, or `None` if
    /// there is a cycle of length at least 2.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.node_count();
        let mut indegree: Vec<usize> = (0..n)
            .map(|t| self.in_neighbors(t).iter().filter(|&&s| s != t).count())
            .collect();
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &t in self.out_neighbors(v) {
                if t != v {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Whether there is no cycle of any length, loops included.
    pub fn is_acyclic(&self) -> bool {
        self.edges().iter().all(|&(s, t)| s != t) && self.topological_order().is_some()
    }

    /// Applies `f` to every label. `f` must be injective.
    pub fn relabel(&self, f: impl Fn(&Label) -> Label) -> Graph {
        Graph::from_unsorted(self.nodes().iter().map(f).collect(), self.edges().to_vec())
    }

    /// The subgraph induced by nodes satisfying `keep`.
    pub fn induced_subgraph(&self, keep: impl Fn(&Label) -> bool) -> Graph {
        let mut position = vec![usize::MAX; self.node_count()];
        let mut nodes = Vec::new();
        for (i, l) in self.nodes().iter().enumerate() {
            if keep(l) {
                position[i] = nodes.len();
                nodes.push(l.clone());
            }
        }
        let edges = self
            .edges()
            .iter()
            .filter(|&&(s, t)| position[s] != usize::MAX && position[t] != usize::MAX)
            .map(|&(s, t)| (position[s], position[t]))
            .collect();
        Graph::from_sorted_nodes(nodes, edges)
    }
}

/// The line graph with nodes `0..=n` and edges `i -> i + 1`.
pub fn linear_graph(n: u64) -> Graph {
    Graph::from_sorted_nodes(
        (0..=n).map(Label::Int).collect(),
        (0..n as usize).map(|i| (i, i + 1)).collect(),
    )
}

/// The graph with one node and no edges.
pub fn trivial_graph() -> Graph {
    linear_graph(0)
}

/// The graph with one node and a loop on it.
pub fn unit_graph() -> Graph {
    reflexive_closure(&trivial_graph())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Predicates {
    pub is_refl: bool,
    pub is_tran: bool,
    pub is_irrefl: bool,
    pub is_intran: bool,
}

pub fn is_refl(g: &Graph) -> bool {
    (0..g.node_count()).all(|v| g.has_edge(v, v))
}

pub fn is_irrefl(g: &Graph) -> bool {
    (0..g.node_count()).all(|v| !g.has_edge(v, v))
}

/// `s -> u -> t` implies `s -> t`.
pub fn is_tran(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(s, u)| g.out_neighbors(u).iter().all(|&t| g.has_edge(s, t)))
}

/// `s -> u -> t` implies not `s -> t`.
pub fn is_intran(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(s, u)| g.out_neighbors(u).iter().all(|&t| !g.has_edge(s, t)))
}

pub fn predicates(g: &Graph) -> Predicates {
    Predicates {
        is_refl: is_refl(g),
        is_tran: is_tran(g),
        is_irrefl: is_irrefl(g),
        is_intran: is_intran(g),
    }
}

pub fn reflexive_closure(g: &Graph) -> Graph {
    let mut edges = g.edges().to_vec();
    edges.extend((0..g.node_count()).map(|v| (v, v)));
    Graph::from_sorted_nodes(g.nodes().to_vec(), edges)
}

/// Adds `s -> t` whenever a path of length at least one runs from `s` to `t`.
pub fn transitive_closure(g: &Graph) -> Graph {
    let n = g.node_count();
    let mut edges = Vec::new();
    let mut seen = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        for &t in g.out_neighbors(s) {
            if seen[t] != s {
                seen[t] = s;
                queue.push_back(t);
            }
        }
        while let Some(u) = queue.pop_front() {
            edges.push((s, u));
            for &t in g.out_neighbors(u) {
                if seen[t] != s {
                    seen[t] = s;
                    queue.push_back(t);
                }
            }
        }
    }
    Graph::from_sorted_nodes(g.nodes().to_vec(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    Refl,
    Tran,
}

impl Closure {
    pub fn apply(self, g: &Graph) -> Graph {
        match self {
            Closure::Refl => reflexive_closure(g),
            Closure::Tran => transitive_closure(g),
        }
    }
}

/// Reachability by a path of length zero or more.
pub fn reachable(g: &Graph, s: &Label, t: &Label) -> Result<bool> {
    let s = g.require(s)?;
    let t = g.require(t)?;
    Ok(reachable_from(g, s)[t])
}

pub(crate) fn reachable_from(g: &Graph, s: usize) -> Vec<bool> {
    let mut seen = vec![false; g.node_count()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &t in g.out_neighbors(u) {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}

/// Seeded random graph on nodes `0..n`; each ordered pair, loops included,
/// is an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64, budget: &Budget) -> Result<Graph> {
    budget.check(
        "random graph nodes",
        n as u128,
        budget.max_random_nodes as u128,
    )?;
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if rng.gen_bool(p) {
                edges.push((s, t));
            }
        }
    }
    Ok(Graph::from_sorted_nodes(
        (0..n as u64).map(Label::Int).collect(),
        edges,
    ))
}

/// A node map between graphs certified to preserve edges.
#[derive(Clone, PartialEq, Eq)]
pub struct GraphMorphism {
    source: Graph,
    target: Graph,
    node_map: Vec<usize>,
}

impl fmt::Debug for GraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphMorphism[")?;
        for (i, &j) in self.node_map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", self.source.label(i), self.target.label(j))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for GraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .node_map
            .iter()
            .enumerate()
            .map(|(i, &j)| format!("{}>{}", self.source.label(i), self.target.label(j)))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl GraphMorphism {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn node_map(&self) -> &[usize] {
        &self.node_map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.node_map[i]
    }

    pub fn apply_label(&self, l: &Label) -> Result<&Label> {
        Ok(self.target.label(self.node_map[self.source.require(l)?]))
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.node_count()];
        self.node_map
            .iter()
            .all(|&j| !std::mem::replace(&mut hit[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.node_count()];
        for &j in &self.node_map {
            hit[j] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// The inverse node map, if this is bijective and the inverse preserves edges.
    pub fn inverse(&self) -> Option<GraphMorphism> {
        if !self.is_injective() || !self.is_surjective() {
            return None;
        }
        let mut inv = vec![0; self.node_map.len()];
        for (i, &j) in self.node_map.iter().enumerate() {
            inv[j] = i;
        }
        validate_morphism(&self.target, &self.source, inv).ok()
    }
}

/// Certifies `node_map` as a morphism, reporting the first unpreserved edge.
pub fn validate_morphism(
    source: &Graph,
    target: &Graph,
    node_map: Vec<usize>,
) -> Result<GraphMorphism> {
    if node_map.len() != source.node_count() {
        return Err(Error::NodeMapLength {
            got: node_map.len(),
            expected: source.node_count(),
        });
    }
    if let Some(&j) = node_map.iter().find(|&&j| j >= target.node_count()) {
        return Err(Error::NodeOutOfRange {
            index: j,
            len: target.node_count(),
        });
    }
    for &(s, t) in source.edges() {
        if !target.has_edge(node_map[s], node_map[t]) {
            return Err(Error::EdgeNotPreserved {
                source_node: source.label(s).to_string(),
                target_node: source.label(t).to_string(),
                image_source: target.label(node_map[s]).to_string(),
                image_target: target.label(node_map[t]).to_string(),
            });
        }
    }
    Ok(GraphMorphism {
        source: source.clone(),
        target: target.clone(),
        node_map,
    })
}

/// Like [`validate_morphism`] with the map given on labels.
pub fn validate_label_map(
    source: &Graph,
    target: &Graph,
    f: impl Fn(&Label) -> Label,
) -> Result<GraphMorphism> {
    let node_map = source
        .nodes()
        .iter()
        .map(|l| target.require(&f(l)))
        .collect::<Result<Vec<_>>>()?;
    validate_morphism(source, target, node_map)
}

pub fn identity(g: &Graph) -> GraphMorphism {
    GraphMorphism {
        source: g.clone(),
        target: g.clone(),
        node_map: (0..g.node_count()).collect(),
    }
}

/// Diagrammatic composite: `f` first, then `g`.
pub fn compose(f: &GraphMorphism, g: &GraphMorphism) -> Result<GraphMorphism> {
    if f.target != g.source {
        return Err(Error::DomainMismatch {
            left: describe(&f.target),
            right: describe(&g.source),
        });
    }
    Ok(GraphMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        node_map: f.node_map.iter().map(|&i| g.node_map[i]).collect(),
    })
}

fn describe(g: &Graph) -> String {
    format!("graph({} nodes, {} edges)", g.node_count(), g.edge_count())
}

/// The same node map between the closures of source and target.
pub fn lift_through_closure(f: &GraphMorphism, closure: Closure) -> Result<GraphMorphism> {
    validate_morphism(
        &closure.apply(&f.source),
        &closure.apply(&f.target),
        f.node_map.clone(),
    )
}

fn raw_candidates(source: &Graph, target: &Graph) -> u128 {
    let base = target.node_count() as u128;
    let mut total: u128 = 1;
    for _ in 0..source.node_count() {
        total = total.saturating_mul(base);
    }
    total
}

/// Calls `visit` with every edge-preserving node map, in lexicographic order.
pub fn for_each_hom(
    source: &Graph,
    target: &Graph,
    budget: &Budget,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    budget.check(
        "hom enumeration candidates",
        raw_candidates(source, target),
        budget.max_candidates,
    )?;
    let n = source.node_count();
    // constraints[k]: edges between k and earlier nodes, as (other, k_is_source)
    let mut constraints: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for &(s, t) in source.edges() {
        if s >= t {
            constraints[s].push((t, true));
        } else {
            constraints[t].push((s, false));
        }
    }
    let m = target.node_count();
    let mut map = Vec::with_capacity(n);
    fn go(
        k: usize,
        n: usize,
        m: usize,
        constraints: &[Vec<(usize, bool)>],
        target: &Graph,
        map: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == n {
            visit(map);
            return;
        }
        for image in 0..m {
            map.push(image);
            let ok = constraints[k].iter().all(|&(other, k_is_source)| {
                if k_is_source {
                    target.has_edge(image, map[other])
                } else {
                    target.has_edge(map[other], image)
                }
            });
            if ok {
                go(k + 1, n, m, constraints, target, map, visit);
            }
            map.pop();
        }
    }
    go(0, n, m, &constraints, target, &mut map, &mut visit);
    Ok(())
}

/// Every morphism `source -> target`, in lexicographic node-map order.
pub fn enumerate_homs(
    source: &Graph,
    target: &Graph,
    budget: &Budget,
) -> Result<Vec<GraphMorphism>> {
    let mut out = Vec::new();
    for_each_hom(source, target, budget, |map| {
        out.push(GraphMorphism {
            source: source.clone(),
            target: target.clone(),
            node_map: map.to_vec(),
        })
    })?;
    Ok(out)
}

pub fn count_homs(source: &Graph, target: &Graph, budget: &Budget) -> Result<u64> {
    let mut count = 0;
    for_each_hom(source, target, budget, |_| count += 1)?;
    Ok(count)
}

/// Stable node colours by iterated refinement, computed jointly for two
/// graphs so that colours are comparable.
fn refine_colors(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    type Signature = (usize, Vec<usize>, Vec<usize>);
    let initial = |x: &Graph, v: usize| {
        (
            usize::from(x.has_edge(v, v)),
            x.out_neighbors(v).len(),
            x.in_neighbors(v).len(),
        )
    };
    let mut palette = BTreeMap::new();
    let mut assign = |x: &Graph| -> Vec<usize> {
        (0..x.node_count())
            .map(|v| {
                let next = palette.len();
                *palette.entry(initial(x, v)).or_insert(next)
            })
            .collect()
    };
    let mut cg = assign(g);
    let mut ch = assign(h);
    let mut classes = palette.len();
    loop {
        let mut palette: BTreeMap<Signature, usize> = BTreeMap::new();
        let mut step = |x: &Graph, c: &[usize]| -> Vec<usize> {
            (0..x.node_count())
                .map(|v| {
                    let mut outs: Vec<usize> = x.out_neighbors(v).iter().map(|&u| c[u]).collect();
                    let mut ins: Vec<usize> = x.in_neighbors(v).iter().map(|&u| c[u]).collect();
                    outs.sort_unstable();
                    ins.sort_unstable();
                    let next = palette.len();
                    *palette.entry((c[v], outs, ins)).or_insert(next)
                })
                .collect()
        };
        let ng = step(g, &cg);
        let nh = step(h, &ch);
        let new_classes = palette.len();
        cg = ng;
        ch = nh;
        if new_classes == classes {
            return (cg, ch);
        }
        classes = new_classes;
    }
}

/// A deterministic isomorphism `g -> h`, or `None`.
pub fn find_isomorphism(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<GraphMorphism>> {
    let n = g.node_count();
    if n != h.node_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (cg, ch) = refine_colors(g, h);
    let histogram = |c: &[usize]| {
        let mut hist = BTreeMap::new();
        for &x in c {
            *hist.entry(x).or_insert(0usize) += 1;
        }
        hist
    };
    let hist = histogram(&cg);
    if hist != histogram(&ch) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (hist[&cg[v]], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut steps: u128 = 0;

    struct Search<'a> {
        g: &'a Graph,
        h: &'a Graph,
        cg: &'a [usize],
        ch: &'a [usize],
        order: &'a [usize],
        limit: u128,
    }

    fn go(
        s: &Search<'_>,
        k: usize,
        map: &mut [usize],
        used: &mut [bool],
        steps: &mut u128,
    ) -> Result<bool> {
        if k == s.order.len() {
            return Ok(true);
        }
        let v = s.order[k];
        for w in 0..s.h.node_count() {
            if used[w] || s.cg[v] != s.ch[w] {
                continue;
            }
            *steps += 1;
            if *steps > s.limit {
                return Err(Error::BudgetExceeded {
                    what: "isomorphism search steps",
                    needed: *steps,
                    limit: s.limit,
                });
            }
            map[v] = w;
            let consistent = s.order[..=k].iter().all(|&u| {
                let x = map[u];
                s.g.has_edge(v, u) == s.h.has_edge(w, x) && s.g.has_edge(u, v) == s.h.has_edge(x, w)
            });
            if consistent {
                used[w] = true;
                if go(s, k + 1, map, used, steps)? {
                    return Ok(true);
                }
                used[w] = false;
            }
            map[v] = usize::MAX;
        }
        Ok(false)
    }

    let search = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        limit: budget.max_candidates,
    };
    if go(&search, 0, &mut map, &mut used, &mut steps)? {
        Ok(Some(validate_morphism(g, h, map)?))
    } else {
        Ok(None)
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    Ok(find_isomorphism(g, h, budget)?.is_some())
}

/// A walk along edges; length is the number of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPath {
    graph: Graph,
    nodes: Vec<usize>,
}

impl GraphPath {
    pub fn new(graph: &Graph, nodes: Vec<usize>) -> Result<GraphPath> {
        if nodes.is_empty() {
            return Err(Error::InvalidMorphism(
                "a path needs at least one node".into(),
            ));
        }
        if let Some(&i) = nodes.iter().find(|&&i| i >= graph.node_count()) {
            return Err(Error::NodeOutOfRange {
                index: i,
                len: graph.node_count(),
            });
        }
        if let Some(w) = nodes.windows(2).find(|w| !graph.has_edge(w[0], w[1])) {
            return Err(Error::NotAnEdge(
                graph.label(w[0]).to_string(),
                graph.label(w[1]).to_string(),
            ));
        }
        Ok(GraphPath {
            graph: graph.clone(),
            nodes,
        })
    }

    pub fn from_labels(graph: &Graph, labels: &[Label]) -> Result<GraphPath> {
        let nodes = labels
            .iter()
            .map(|l| graph.require(l))
            .collect::<Result<Vec<_>>>()?;
        GraphPath::new(graph, nodes)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn labels(&self) -> Vec<&Label> {
        self.nodes.iter().map(|&i| self.graph.label(i)).collect()
    }

    pub fn length(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn contains_edge(&self, s: usize, t: usize) -> bool {
        self.nodes.windows(2).any(|w| w[0] == s && w[1] == t)
    }
}

/// All Hamiltonian paths. Graphs without cycles (loops aside) take the
/// topological-order shortcut; others fall back to backtracking.
pub fn hamiltonian_paths(g: &Graph, budget: &Budget) -> Result<Vec<GraphPath>> {
    match g.topological_order() {
        Some(order) => {
            if order.is_empty() {
                return Ok(Vec::new());
            }
            if order.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                Ok(vec![GraphPath {
                    graph: g.clone(),
                    nodes: order,
                }])
            } else {
                Ok(Vec::new())
            }
        }
        None => hamiltonian_paths_backtracking(g, budget),
    }
}

/// All Hamiltonian paths by exhaustive search, ordered by node sequence.
pub fn hamiltonian_paths_backtracking(g: &Graph, budget: &Budget) -> Result<Vec<GraphPath>> {
    let n = g.node_count();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut steps: u128 = 0;

    fn go(
        g: &Graph,
        path: &mut Vec<usize>,
        used: &mut [bool],
        steps: &mut u128,
        limit: u128,
        out: &mut Vec<GraphPath>,
    ) -> Result<()> {
        *steps += 1;
        if *steps > limit {
            return Err(Error::BudgetExceeded {
                what: "hamiltonian search steps",
                needed: *steps,
                limit,
            });
        }
        if path.len() == g.node_count() {
            out.push(GraphPath {
                graph: g.clone(),
                nodes: path.clone(),
            });
            return Ok(());
        }
        let last = *path.last().unwrap();
        for &t in g.out_neighbors(last) {
            if !used[t] {
                used[t] = true;
                path.push(t);
                go(g, path, used, steps, limit, out)?;
                path.pop();
                used[t] = false;
            }
        }
        Ok(())
    }

    for start in 0..n {
        used[start] = true;
        path.push(start);
        go(
            g,
            &mut path,
            &mut used,
            &mut steps,
            budget.max_candidates,
            &mut out,
        )?;
        path.pop();
        used[start] = false;
    }
    Ok(out)
}
