//! Graph families for simplices, standard cubes and twisted cubes, in
//! closed form and as iterated cones and prisms.

use std::fmt;
use std::str::FromStr;

use crate::error::{Budget, Error, Result};
use crate::graph::{
    is_refl, trivial_graph, validate_label_map, validate_morphism, Graph, GraphMorphism, GraphPath,
    Label,
};
use crate::words::{parity, sort_bin, BinaryWord, TernaryWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Simplex,
    Cube,
    Twisted,
    /// The twisted face graph relabelled by `sort_bin`.
    TwistedSorted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Irreflexive: one edge per 1-face.
    Face,
    /// Face graph plus a loop on every node.
    Reflexive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrismVariant {
    Std,
    Tw,
}

impl FromStr for ShapeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simplex" => Ok(ShapeKind::Simplex),
            "cube" => Ok(ShapeKind::Cube),
            "twisted" => Ok(ShapeKind::Twisted),
            "twisted-sorted" | "twisted_sorted" => Ok(ShapeKind::TwistedSorted),
            _ => Err(Error::InvalidFamily(format!("unknown family `{s}`"))),
        }
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeKind::Simplex => "simplex",
            ShapeKind::Cube => "cube",
            ShapeKind::Twisted => "twisted",
            ShapeKind::TwistedSorted => "twisted-sorted",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "face" => Ok(Flavor::Face),
            "reflexive" => Ok(Flavor::Reflexive),
            _ => Err(Error::InvalidFamily(format!("unknown flavor `{s}`"))),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Face => "face",
            Flavor::Reflexive => "reflexive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShapeFamily {
    pub kind: ShapeKind,
    pub flavor: Flavor,
    pub dim: usize,
}

impl ShapeFamily {
    pub fn new(kind: ShapeKind, flavor: Flavor, dim: usize) -> Result<Self> {
        if kind == ShapeKind::TwistedSorted && flavor == Flavor::Reflexive {
            return Err(Error::InvalidFamily(
                "twisted-sorted exists only in the face flavor".into(),
            ));
        }
        Ok(ShapeFamily { kind, flavor, dim })
    }

    pub fn face(kind: ShapeKind, dim: usize) -> Self {
        ShapeFamily {
            kind,
            flavor: Flavor::Face,
            dim,
        }
    }

    pub fn reflexive(kind: ShapeKind, dim: usize) -> Self {
        ShapeFamily {
            kind,
            flavor: Flavor::Reflexive,
            dim,
        }
    }

    fn check_budget(&self, budget: &Budget) -> Result<()> {
        match self.kind {
            ShapeKind::Simplex => budget.check(
                "simplex nodes",
                self.dim as u128 + 1,
                1u128 << budget.max_shape_dim,
            ),
            _ => budget.check(
                "cube dimension",
                self.dim as u128,
                budget.max_shape_dim as u128,
            ),
        }
    }
}

impl fmt::Display for ShapeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.kind, self.flavor, self.dim)
    }
}

/// Index of the unique differing digit, or `None` when `s` and `t` differ in
/// zero or several places.
fn single_difference(s: &BinaryWord, t: &BinaryWord) -> Option<usize> {
    let mut diff = s
        .digits()
        .iter()
        .zip(t.digits())
        .enumerate()
        .filter(|(_, (a, b))| a != b);
    match (diff.next(), diff.next()) {
        (Some((i, _)), None) => Some(i),
        _ => None,
    }
}

/// Edge relation of the standard cube graphs.
pub fn cube_edge(s: &BinaryWord, t: &BinaryWord, flavor: Flavor) -> bool {
    if s.len() != t.len() {
        return false;
    }
    match single_difference(s, t) {
        Some(i) => !s.get(i) && t.get(i),
        None => flavor == Flavor::Reflexive && s == t,
    }
}

/// Edge relation of the twisted cube graphs: at the differing index `i`,
/// `(s[i] xor p) < (t[i] xor p)` with `p` the parity of `t` before `i`.
pub fn twisted_edge(s: &BinaryWord, t: &BinaryWord, flavor: Flavor) -> bool {
    if s.len() != t.len() {
        return false;
    }
    match single_difference(s, t) {
        Some(i) => {
            let p = parity(&t.digits()[..i]);
            !(s.get(i) ^ p) && (t.get(i) ^ p)
        }
        None => flavor == Flavor::Reflexive && s == t,
    }
}

/// Edge relation of the sorted twisted face graph: for some `i`, `s` and `t`
/// agree before `i`, `s[i] = 0`, `t[i] = 1`, and they disagree after `i`.
pub fn sorted_edge(s: &BinaryWord, t: &BinaryWord) -> bool {
    if s.len() != t.len() {
        return false;
    }
    let n = s.len();
    let Some(i) = (0..n).find(|&i| s.get(i) != t.get(i)) else {
        return false;
    };
    !s.get(i) && t.get(i) && (i + 1..n).all(|j| s.get(j) != t.get(j))
}

fn simplex_graph(dim: usize, flavor: Flavor) -> Graph {
    let n = dim + 1;
    let mut edges = Vec::with_capacity(n * (n + 1) / 2);
    for s in 0..n {
        let first = if flavor == Flavor::Reflexive {
            s
        } else {
            s + 1
        };
        edges.extend((first..n).map(|t| (s, t)));
    }
    Graph::from_sorted_nodes((0..n as u64).map(Label::Int).collect(), edges)
}

fn cube_family_graph(dim: usize, flavor: Flavor, twisted: bool) -> Graph {
    let count = 1usize << dim;
    let nodes: Vec<Label> = BinaryWord::all(dim).map(Label::Word).collect();
    let mut edges = Vec::with_capacity(dim * count / 2 + count);
    for (s, node) in nodes.iter().enumerate() {
        let word = node.as_word().unwrap();
        let mut p = false;
        for i in 0..dim {
            // the single-bit flip at i, oriented by the parity of the shared prefix
            let bit = word.get(i);
            let forward = !(bit ^ (twisted && p));
            if forward {
                edges.push((s, s ^ (1 << (dim - 1 - i))));
            }
            p ^= !bit;
        }
        if flavor == Flavor::Reflexive {
            edges.push((s, s));
        }
    }
    Graph::from_sorted_nodes(nodes, edges)
}

/// The closed-form graph of a family.
pub fn shape_graph(spec: ShapeFamily, budget: &Budget) -> Result<Graph> {
    spec.check_budget(budget)?;
    let spec = ShapeFamily::new(spec.kind, spec.flavor, spec.dim)?;
    Ok(match spec.kind {
        ShapeKind::Simplex => simplex_graph(spec.dim, spec.flavor),
        ShapeKind::Cube => cube_family_graph(spec.dim, spec.flavor, false),
        ShapeKind::Twisted => cube_family_graph(spec.dim, spec.flavor, true),
        ShapeKind::TwistedSorted => cube_family_graph(spec.dim, Flavor::Face, true)
            .relabel(|l| Label::Word(sort_bin(l.as_word().expect("cube nodes are words")))),
    })
}

/// Prepends a new node (index 0) with an edge to every old node, and a loop
/// if `g` is reflexive. Nodes are relabelled `0..=|g|`, the old node at index
/// `k` becoming `k + 1`.
pub fn cone(g: &Graph) -> Graph {
    let n = g.node_count();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(s, t)| (s + 1, t + 1)).collect();
    edges.extend((1..=n).map(|v| (0, v)));
    if is_refl(g) {
        edges.push((0, 0));
    }
    Graph::from_sorted_nodes((0..=n as u64).map(Label::Int).collect(), edges)
}

fn prism_label(g: &Graph, b: bool, v: usize) -> Label {
    match g.label(v) {
        Label::Word(w) => Label::Word(w.cons(b)),
        Label::Int(_) => Label::Int(u64::from(b) * g.node_count() as u64 + v as u64),
    }
}

/// Two copies of `g` linked by `<0,v> -> <1,v>`; the twisted variant
/// reverses the edges of copy 0. Word labels become `b :: w`, integer labels
/// become `b * |g| + index`.
pub fn prism(g: &Graph, variant: PrismVariant) -> Graph {
    let n = g.node_count();
    let nodes: Vec<Label> = [false, true]
        .iter()
        .flat_map(|&b| (0..n).map(move |v| (b, v)))
        .map(|(b, v)| prism_label(g, b, v))
        .collect();
    let mut edges = Vec::with_capacity(2 * g.edge_count() + n);
    for &(s, t) in g.edges() {
        match variant {
            PrismVariant::Std => edges.push((s, t)),
            PrismVariant::Tw => edges.push((t, s)),
        }
        edges.push((n + s, n + t));
    }
    edges.extend((0..n).map(|v| (v, n + v)));
    Graph::from_unsorted(nodes, edges)
}

/// `<b, v> |-> <b, f(v)>` between prisms.
pub fn prism_morphism(f: &GraphMorphism, variant: PrismVariant) -> Result<GraphMorphism> {
    let source = prism(f.source(), variant);
    let target = prism(f.target(), variant);
    let mut node_map = vec![0; source.node_count()];
    for b in [false, true] {
        for v in 0..f.source().node_count() {
            let from = source.require(&prism_label(f.source(), b, v))?;
            let to = target.require(&prism_label(f.target(), b, f.apply(v)))?;
            node_map[from] = to;
        }
    }
    validate_morphism(&source, &target, node_map)
}

fn base_graph(kind: ShapeKind, flavor: Flavor) -> Graph {
    let base = match kind {
        ShapeKind::Simplex => trivial_graph(),
        _ => Graph::from_sorted_nodes(vec![Label::Word(BinaryWord::empty())], Vec::new()),
    };
    match flavor {
        Flavor::Face => base,
        Flavor::Reflexive => crate::graph::reflexive_closure(&base),
    }
}

fn iterate_once(kind: ShapeKind, g: &Graph) -> Result<Graph> {
    match kind {
        ShapeKind::Simplex => Ok(cone(g)),
        ShapeKind::Cube => Ok(prism(g, PrismVariant::Std)),
        ShapeKind::Twisted => Ok(prism(g, PrismVariant::Tw)),
        ShapeKind::TwistedSorted => Err(Error::InvalidFamily(
            "twisted-sorted has no recursive construction".into(),
        )),
    }
}

/// The family graph built by iterating cone or prism from the one-node base
/// (with a loop for the reflexive flavor).
pub fn recursive_graph(spec: ShapeFamily, budget: &Budget) -> Result<Graph> {
    spec.check_budget(budget)?;
    let mut g = base_graph(spec.kind, spec.flavor);
    if spec.kind == ShapeKind::TwistedSorted {
        iterate_once(spec.kind, &g)?;
    }
    for _ in 0..spec.dim {
        g = iterate_once(spec.kind, &g)?;
    }
    Ok(g)
}

/// The splitting isomorphism from the closed form at `dim` to the iterator
/// applied to the closed form at `dim - 1`, with its inverse. Labels are
/// flattened on both sides, so both maps are the identity on labels.
pub fn split_iso(spec: ShapeFamily, budget: &Budget) -> Result<(GraphMorphism, GraphMorphism)> {
    if spec.dim == 0 {
        return Err(Error::InvalidFamily(
            "split needs dimension at least 1".into(),
        ));
    }
    let whole = shape_graph(spec, budget)?;
    let smaller = shape_graph(
        ShapeFamily {
            dim: spec.dim - 1,
            ..spec
        },
        budget,
    )?;
    let split = iterate_once(spec.kind, &smaller)?;
    let phi = validate_label_map(&whole, &split, Label::clone)?;
    let psi = validate_label_map(&split, &whole, Label::clone)?;
    Ok((phi, psi))
}

/// The Hamiltonian path of the twisted face graph, assembled from the
/// reversed path in copy 0, the link, and the path in copy 1.
pub fn twisted_hamiltonian(n: usize, budget: &Budget) -> Result<GraphPath> {
    let g = shape_graph(ShapeFamily::face(ShapeKind::Twisted, n), budget)?;
    let mut order = vec![BinaryWord::empty()];
    for _ in 0..n {
        let mut next: Vec<BinaryWord> = order.iter().rev().map(|w| w.cons(false)).collect();
        next.extend(order.iter().map(|w| w.cons(true)));
        order = next;
    }
    let labels: Vec<Label> = order.into_iter().map(Label::Word).collect();
    GraphPath::from_labels(&g, &labels)
}

/// The subgraph induced by the nodes lying on `face`.
pub fn face_subgraph(g: &Graph, face: &TernaryWord) -> Graph {
    g.induced_subgraph(|l| l.as_word().is_some_and(|w| face.contains(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_isomorphism, linear_graph, reflexive_closure, unit_graph};

    fn b() -> Budget {
        Budget::default()
    }

    fn word_edges(g: &Graph) -> Vec<(String, String)> {
        g.edge_labels()
            .map(|(s, t)| (s.to_string(), t.to_string()))
            .collect()
    }

    fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
        list.iter()
            .map(|&(s, t)| (s.to_string(), t.to_string()))
            .collect()
    }

    #[test]
    fn small_closed_forms() {
        let s2 = shape_graph(ShapeFamily::face(ShapeKind::Simplex, 2), &b()).unwrap();
        assert_eq!(
            word_edges(&s2),
            pairs(&[("0", "1"), ("0", "2"), ("1", "2")])
        );
        let t2 = shape_graph(ShapeFamily::face(ShapeKind::Twisted, 2), &b()).unwrap();
        assert_eq!(
            word_edges(&t2),
            pairs(&[("00", "10"), ("01", "00"), ("01", "11"), ("10", "11")])
        );
        let t3 = shape_graph(ShapeFamily::face(ShapeKind::Twisted, 3), &b()).unwrap();
        assert_eq!(t3.edge_count(), 12);
        for (s, t) in [("011", "010"), ("010", "110"), ("110", "111")] {
            assert!(t3.has_edge_labels(
                &Label::Word(s.parse().unwrap()),
                &Label::Word(t.parse().unwrap())
            ));
        }
    }

    #[test]
    fn generated_edges_match_predicates() {
        for n in 0..=5 {
            for flavor in [Flavor::Face, Flavor::Reflexive] {
                for (kind, pred) in [
                    (
                        ShapeKind::Cube,
                        cube_edge as fn(&BinaryWord, &BinaryWord, Flavor) -> bool,
                    ),
                    (ShapeKind::Twisted, twisted_edge),
                ] {
                    let g = shape_graph(ShapeFamily::new(kind, flavor, n).unwrap(), &b()).unwrap();
                    for s in 0..g.node_count() {
                        for t in 0..g.node_count() {
                            let (ws, wt) =
                                (g.label(s).as_word().unwrap(), g.label(t).as_word().unwrap());
                            assert_eq!(g.has_edge(s, t), pred(ws, wt, flavor), "{kind} {ws} {wt}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sorted_family_is_reflexive_free() {
        assert!(ShapeFamily::new(ShapeKind::TwistedSorted, Flavor::Reflexive, 2).is_err());
        assert!(recursive_graph(ShapeFamily::face(ShapeKind::TwistedSorted, 2), &b()).is_err());
    }

    #[test]
    fn cone_examples() {
        let c = cone(&trivial_graph());
        assert_eq!(c, linear_graph(1));
        let c = cone(&unit_graph());
        assert!(c.has_edge(0, 0) && c.has_edge(1, 1) && c.has_edge(0, 1));
        let c = cone(&Graph::empty());
        assert_eq!((c.node_count(), c.edges()), (1, &[(0, 0)][..]));
    }

    #[test]
    fn prism_examples() {
        let p = prism(&trivial_graph(), PrismVariant::Std);
        assert_eq!(p.edges(), &[(0, 1)]);
        let t1 = shape_graph(ShapeFamily::face(ShapeKind::Twisted, 1), &b()).unwrap();
        let t2 = shape_graph(ShapeFamily::face(ShapeKind::Twisted, 2), &b()).unwrap();
        assert_eq!(prism(&t1, PrismVariant::Tw), t2);
        let g = linear_graph(3);
        for v in [PrismVariant::Std, PrismVariant::Tw] {
            assert_eq!(prism(&g, v).edge_count(), 2 * 3 + 4);
        }
    }

    #[test]
    fn recursive_forms_coincide() {
        for n in 0..=5 {
            for kind in [ShapeKind::Simplex, ShapeKind::Cube, ShapeKind::Twisted] {
                for flavor in [Flavor::Face, Flavor::Reflexive] {
                    let spec = ShapeFamily::new(kind, flavor, n).unwrap();
                    let r = recursive_graph(spec, &b()).unwrap();
                    let c = shape_graph(spec, &b()).unwrap();
                    assert!(find_isomorphism(&r, &c, &b()).unwrap().is_some(), "{spec}");
                }
            }
        }
        assert_eq!(
            recursive_graph(ShapeFamily::face(ShapeKind::Twisted, 0), &b())
                .unwrap()
                .edge_count(),
            0
        );
    }

    #[test]
    fn reflexive_forms_are_closures() {
        for n in 0..=5 {
            for kind in [ShapeKind::Cube, ShapeKind::Twisted] {
                let face = shape_graph(ShapeFamily::face(kind, n), &b()).unwrap();
                let refl = shape_graph(ShapeFamily::reflexive(kind, n), &b()).unwrap();
                assert_eq!(reflexive_closure(&face), refl);
            }
        }
    }

    #[test]
    fn split_isomorphisms() {
        for n in 1..=4 {
            for kind in [ShapeKind::Simplex, ShapeKind::Cube, ShapeKind::Twisted] {
                let (phi, psi) = split_iso(ShapeFamily::face(kind, n), &b()).unwrap();
                assert!(phi.inverse().is_some());
                assert_eq!(
                    crate::graph::compose(&phi, &psi).unwrap(),
                    crate::graph::identity(phi.source())
                );
            }
        }
        let (phi, _) = split_iso(ShapeFamily::face(ShapeKind::Cube, 3), &b()).unwrap();
        assert_eq!(phi.source().edge_count(), 12);
    }

    #[test]
    fn hamiltonian_construction() {
        let p = twisted_hamiltonian(2, &b()).unwrap();
        let labels: Vec<String> = p.labels().iter().map(ToString::to_string).collect();
        assert_eq!(labels, ["01", "00", "10", "11"]);
        let p = twisted_hamiltonian(1, &b()).unwrap();
        assert_eq!(p.length(), 1);
    }

    #[test]
    fn budget_limits_dimension() {
        let tight = Budget {
            max_shape_dim: 3,
            ..Budget::default()
        };
        assert!(shape_graph(ShapeFamily::face(ShapeKind::Cube, 4), &tight).is_err());
        assert!(shape_graph(ShapeFamily::face(ShapeKind::Simplex, 7), &tight).is_ok());
    }
}
