//! Face-map categories in word, monotone-map and graph presentations.
//!
//! Objects are natural numbers everywhere. Composition is diagrammatic:
//! `compose_in(cat, f, g)` runs `f` first.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Budget, Error, Result};
use crate::graph::{self, enumerate_homs, validate_morphism, Graph, GraphMorphism, Label};
use crate::shapes::{shape_graph, Flavor, ShapeFamily, ShapeKind};
use crate::words::{binary_simplex_compose, ternary_compose, BinaryWord, TernaryWord, Trit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CategoryId {
    SimplexSemiBin,
    SimplexSemiComb,
    SimplexFullComb,
    CubeSemiComb,
    SimplexSemiGraph,
    SimplexFullGraph,
    CubeSemiGraph,
    TwistedSemiGraph,
    TwistedFullGraph,
    TwistedDimGraph,
}

impl CategoryId {
    pub const ALL: [CategoryId; 10] = [
        CategoryId::SimplexSemiBin,
        CategoryId::SimplexSemiComb,
        CategoryId::SimplexFullComb,
        CategoryId::CubeSemiComb,
        CategoryId::SimplexSemiGraph,
        CategoryId::SimplexFullGraph,
        CategoryId::CubeSemiGraph,
        CategoryId::TwistedSemiGraph,
        CategoryId::TwistedFullGraph,
        CategoryId::TwistedDimGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CategoryId::SimplexSemiBin => "simplex_semi_bin",
            CategoryId::SimplexSemiComb => "simplex_semi_comb",
            CategoryId::SimplexFullComb => "simplex_full_comb",
            CategoryId::CubeSemiComb => "cube_semi_comb",
            CategoryId::SimplexSemiGraph => "simplex_semi_graph",
            CategoryId::SimplexFullGraph => "simplex_full_graph",
            CategoryId::CubeSemiGraph => "cube_semi_graph",
            CategoryId::TwistedSemiGraph => "twisted_semi_graph",
            CategoryId::TwistedFullGraph => "twisted_full_graph",
            CategoryId::TwistedDimGraph => "twisted_dim_graph",
        }
    }

    /// The graph family whose members are the objects, for graph presentations.
    pub fn family(self) -> Option<(ShapeKind, Flavor)> {
        match self {
            CategoryId::SimplexSemiGraph => Some((ShapeKind::Simplex, Flavor::Face)),
            CategoryId::SimplexFullGraph => Some((ShapeKind::Simplex, Flavor::Reflexive)),
            CategoryId::CubeSemiGraph => Some((ShapeKind::Cube, Flavor::Face)),
            CategoryId::TwistedSemiGraph => Some((ShapeKind::Twisted, Flavor::Face)),
            CategoryId::TwistedFullGraph | CategoryId::TwistedDimGraph => {
                Some((ShapeKind::Twisted, Flavor::Reflexive))
            }
            _ => None,
        }
    }

    /// Whether the category contains face maps only.
    pub fn is_semi(self) -> bool {
        matches!(
            self,
            CategoryId::SimplexSemiBin
                | CategoryId::SimplexSemiComb
                | CategoryId::CubeSemiComb
                | CategoryId::SimplexSemiGraph
                | CategoryId::CubeSemiGraph
                | CategoryId::TwistedSemiGraph
        )
    }
}

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CategoryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        CategoryId::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown category `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Strict,
    Lax,
}

/// A monotone function `fin(m + 1) -> fin(n + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    m: usize,
    n: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(m: usize, n: usize, values: Vec<usize>, mode: Mode) -> Result<Self> {
        if values.len() != m + 1 {
            return Err(Error::InvalidMorphism(format!(
                "a map out of fin({}) needs {} values, got {}",
                m + 1,
                m + 1,
                values.len()
            )));
        }
        if values.iter().any(|&v| v > n) {
            return Err(Error::InvalidMorphism(format!(
                "{values:?} leaves fin({})",
                n + 1
            )));
        }
        let ok = values.windows(2).all(|w| match mode {
            Mode::Strict => w[0] < w[1],
            Mode::Lax => w[0] <= w[1],
        });
        if !ok {
            return Err(Error::InvalidMorphism(format!(
                "{values:?} is not {} monotone",
                if mode == Mode::Strict {
                    "strictly"
                } else {
                    "weakly"
                }
            )));
        }
        Ok(MonotoneMap { m, n, values })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            m: n,
            n,
            values: (0..=n).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.m
    }

    pub fn cod(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_strict(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        (0..=self.n).all(|v| self.values.contains(&v))
    }

    /// `f` first, then `g`.
    pub fn then(&self, g: &MonotoneMap) -> Result<MonotoneMap> {
        if self.n != g.m {
            return Err(Error::DomainMismatch {
                left: self.n.to_string(),
                right: g.m.to_string(),
            });
        }
        Ok(MonotoneMap {
            m: self.m,
            n: g.n,
            values: self.values.iter().map(|&v| g.values[v]).collect(),
        })
    }

    /// All maps `fin(m + 1) -> fin(n + 1)` of the given mode, lexicographically.
    pub fn all(m: usize, n: usize, mode: Mode) -> Vec<MonotoneMap> {
        fn go(m: usize, n: usize, mode: Mode, acc: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
            if acc.len() == m + 1 {
                out.push(MonotoneMap {
                    m,
                    n,
                    values: acc.clone(),
                });
                return;
            }
            let low = match (acc.last(), mode) {
                (None, _) => 0,
                (Some(&v), Mode::Strict) => v + 1,
                (Some(&v), Mode::Lax) => v,
            };
            for v in low..=n {
                acc.push(v);
                go(m, n, mode, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(m, n, mode, &mut Vec::with_capacity(m + 1), &mut out);
        out
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismData {
    /// Length `n + 1`, with `m + 1` ones.
    Binary(BinaryWord),
    /// Length `n`, with `m` stars.
    Ternary(TernaryWord),
    Monotone(MonotoneMap),
    Graph(GraphMorphism),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub dom: usize,
    pub cod: usize,
    pub data: MorphismData,
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:", self.dom, self.cod)?;
        match &self.data {
            MorphismData::Binary(w) => write!(f, "{w}"),
            MorphismData::Ternary(w) => write!(f, "{w}"),
            MorphismData::Monotone(map) => write!(f, "{map}"),
            MorphismData::Graph(g) => write!(f, "{g}"),
        }
    }
}

impl Morphism {
    pub fn as_graph(&self) -> Option<&GraphMorphism> {
        match &self.data {
            MorphismData::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_monotone(&self) -> Option<&MonotoneMap> {
        match &self.data {
            MorphismData::Monotone(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_injective(&self) -> bool {
        match &self.data {
            MorphismData::Binary(_) | MorphismData::Ternary(_) => true,
            MorphismData::Monotone(f) => f.is_strict(),
            MorphismData::Graph(g) => g.is_injective(),
        }
    }

    pub fn is_surjective(&self) -> bool {
        match &self.data {
            MorphismData::Binary(w) => w.count_ones() == w.len(),
            MorphismData::Ternary(w) => w.star_count() == w.len(),
            MorphismData::Monotone(f) => f.is_surjective(),
            MorphismData::Graph(g) => g.is_surjective(),
        }
    }
}

/// The object `n` of a graph presentation.
pub fn object_graph(cat: CategoryId, n: usize, budget: &Budget) -> Result<Graph> {
    let (kind, flavor) = cat
        .family()
        .ok_or_else(|| Error::InvalidFamily(format!("{cat} is not a graph presentation")))?;
    shape_graph(ShapeFamily::new(kind, flavor, n)?, budget)
}

pub fn identity_in(cat: CategoryId, n: usize, budget: &Budget) -> Result<Morphism> {
    let data = match cat {
        CategoryId::SimplexSemiBin => MorphismData::Binary(BinaryWord::ones(n + 1)),
        CategoryId::SimplexSemiComb | CategoryId::SimplexFullComb => {
            MorphismData::Monotone(MonotoneMap::identity(n))
        }
        CategoryId::CubeSemiComb => MorphismData::Ternary(TernaryWord::identity(n)),
        _ => MorphismData::Graph(graph::identity(&object_graph(cat, n, budget)?)),
    };
    Ok(Morphism {
        dom: n,
        cod: n,
        data,
    })
}

/// The edge dimension in a twisted reflexive graph: the index where the
/// endpoints differ, or the word length for a loop.
pub fn edge_dim(g: &Graph, s: &Label, t: &Label) -> Result<usize> {
    if !g.has_edge_labels(s, t) {
        return Err(Error::NotAnEdge(s.to_string(), t.to_string()));
    }
    edge_dim_unchecked(s, t)
}

fn edge_dim_unchecked(s: &Label, t: &Label) -> Result<usize> {
    let (Some(ws), Some(wt)) = (s.as_word(), t.as_word()) else {
        return Err(Error::InvalidWord(format!(
            "{s} and {t} must be binary words"
        )));
    };
    Ok(ws
        .digits()
        .iter()
        .zip(wt.digits())
        .position(|(a, b)| a != b)
        .unwrap_or(ws.len()))
}

/// Whether edges of equal dimension always map to edges of equal dimension.
pub fn preserves_dim(f: &GraphMorphism) -> bool {
    let src = f.source();
    let tgt = f.target();
    let mut image_dim: HashMap<usize, usize> = HashMap::new();
    src.edges().iter().all(|&(s, t)| {
        let (Ok(d), Ok(e)) = (
            edge_dim_unchecked(src.label(s), src.label(t)),
            edge_dim_unchecked(tgt.label(f.apply(s)), tgt.label(f.apply(t))),
        ) else {
            return false;
        };
        *image_dim.entry(d).or_insert(e) == e
    })
}

/// All morphisms `m -> n` in canonical order.
pub fn hom_set(cat: CategoryId, m: usize, n: usize, budget: &Budget) -> Result<Vec<Morphism>> {
    let wrap = |data| Morphism {
        dom: m,
        cod: n,
        data,
    };
    Ok(match cat {
        CategoryId::SimplexSemiBin => {
            budget.check("word length", n as u128 + 1, budget.max_word_len as u128)?;
            BinaryWord::all(n + 1)
                .filter(|w| w.count_ones() == m + 1)
                .map(|w| wrap(MorphismData::Binary(w)))
                .collect()
        }
        CategoryId::SimplexSemiComb => MonotoneMap::all(m, n, Mode::Strict)
            .into_iter()
            .map(|f| wrap(MorphismData::Monotone(f)))
            .collect(),
        CategoryId::SimplexFullComb => MonotoneMap::all(m, n, Mode::Lax)
            .into_iter()
            .map(|f| wrap(MorphismData::Monotone(f)))
            .collect(),
        CategoryId::CubeSemiComb => {
            budget.check("word length", n as u128, budget.max_word_len as u128)?;
            TernaryWord::all_with_stars(n, m)
                .into_iter()
                .map(|w| wrap(MorphismData::Ternary(w)))
                .collect()
        }
        _ => {
            let source = object_graph(cat, m, budget)?;
            let target = object_graph(cat, n, budget)?;
            enumerate_homs(&source, &target, budget)?
                .into_iter()
                .filter(|f| cat != CategoryId::TwistedDimGraph || preserves_dim(f))
                .map(|f| wrap(MorphismData::Graph(f)))
                .collect()
        }
    })
}

/// Diagrammatic composite in `cat`: `f` first, then `g`.
pub fn compose_in(cat: CategoryId, f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.cod != g.dom {
        return Err(Error::DomainMismatch {
            left: f.cod.to_string(),
            right: g.dom.to_string(),
        });
    }
    let data = match (&f.data, &g.data) {
        (MorphismData::Binary(a), MorphismData::Binary(b)) if cat == CategoryId::SimplexSemiBin => {
            MorphismData::Binary(binary_simplex_compose(a, b)?)
        }
        (MorphismData::Ternary(a), MorphismData::Ternary(b)) if cat == CategoryId::CubeSemiComb => {
            MorphismData::Ternary(ternary_compose(a, b)?)
        }
        (MorphismData::Monotone(a), MorphismData::Monotone(b))
            if matches!(
                cat,
                CategoryId::SimplexSemiComb | CategoryId::SimplexFullComb
            ) =>
        {
            MorphismData::Monotone(a.then(b)?)
        }
        (MorphismData::Graph(a), MorphismData::Graph(b)) if cat.family().is_some() => {
            MorphismData::Graph(graph::compose(a, b)?)
        }
        _ => {
            return Err(Error::InvalidMorphism(format!(
                "{f} and {g} are not composable in {cat}"
            )))
        }
    };
    Ok(Morphism {
        dom: f.dom,
        cod: g.cod,
        data,
    })
}

/// Face-map probe: the image of the all-zeros point fixes the constant
/// digits, and flipping input bit `i` reveals the position of star `i`.
fn probe_cube_morphism(f: &GraphMorphism, m: usize, n: usize) -> Result<TernaryWord> {
    let image = |w: &BinaryWord| -> Result<BinaryWord> {
        f.apply_label(&Label::Word(w.clone()))?
            .as_word()
            .cloned()
            .ok_or_else(|| Error::InvalidWord("cube nodes are words".into()))
    };
    let origin = BinaryWord::zeros(m);
    let base = image(&origin)?;
    let mut digits: Vec<Trit> = base.digits().iter().map(|&b| Trit::from(b)).collect();
    let mut star_at = Vec::with_capacity(m);
    for i in 0..m {
        let moved = image(&origin.flip(i))?;
        for (j, d) in digits.iter_mut().enumerate().take(n) {
            if moved.get(j) != base.get(j) {
                *d = Trit::Star;
                star_at.push(j);
            }
        }
    }
    let word = TernaryWord::new(digits);
    let ordered = star_at.windows(2).all(|w| w[0] < w[1]);
    if word.star_count() != m || !ordered {
        return Err(Error::InvalidMorphism(format!(
            "graph morphism {f} is not a face map (probe gave {word})"
        )));
    }
    Ok(word)
}

fn face_to_graph(word: &TernaryWord, m: usize, n: usize, budget: &Budget) -> Result<GraphMorphism> {
    let source = object_graph(CategoryId::CubeSemiGraph, m, budget)?;
    let target = object_graph(CategoryId::CubeSemiGraph, n, budget)?;
    let node_map = source
        .nodes()
        .iter()
        .map(|l| {
            let point = word.apply(l.as_word().expect("cube nodes are words"))?;
            target.require(&Label::Word(point))
        })
        .collect::<Result<Vec<_>>>()?;
    validate_morphism(&source, &target, node_map)
}

fn monotone_to_graph(cat: CategoryId, f: &MonotoneMap, budget: &Budget) -> Result<GraphMorphism> {
    let source = object_graph(cat, f.dom(), budget)?;
    let target = object_graph(cat, f.cod(), budget)?;
    validate_morphism(&source, &target, f.values().to_vec())
}

/// Moves a morphism between presentations of the same category.
pub fn convert(
    from: CategoryId,
    to: CategoryId,
    f: &Morphism,
    budget: &Budget,
) -> Result<Morphism> {
    use CategoryId::*;
    let unsupported = || Error::UnsupportedConversion {
        from: from.to_string(),
        to: to.to_string(),
    };
    let (m, n) = (f.dom, f.cod);
    let data = match (from, to, &f.data) {
        (a, b, _) if a == b => f.data.clone(),
        (SimplexSemiBin, SimplexSemiComb, MorphismData::Binary(w)) => {
            let values = (0..w.len()).filter(|&i| w.get(i)).collect();
            MorphismData::Monotone(MonotoneMap::new(m, n, values, Mode::Strict)?)
        }
        (SimplexSemiComb, SimplexSemiBin, MorphismData::Monotone(map)) => {
            let mut digits = vec![false; n + 1];
            for &v in map.values() {
                digits[v] = true;
            }
            MorphismData::Binary(BinaryWord::new(digits))
        }
        (SimplexSemiComb, SimplexSemiGraph, MorphismData::Monotone(map))
        | (SimplexFullComb, SimplexFullGraph, MorphismData::Monotone(map)) => {
            MorphismData::Graph(monotone_to_graph(to, map, budget)?)
        }
        (SimplexSemiGraph, SimplexSemiComb, MorphismData::Graph(g)) => {
            MorphismData::Monotone(MonotoneMap::new(m, n, g.node_map().to_vec(), Mode::Strict)?)
        }
        (SimplexFullGraph, SimplexFullComb, MorphismData::Graph(g)) => {
            MorphismData::Monotone(MonotoneMap::new(m, n, g.node_map().to_vec(), Mode::Lax)?)
        }
        (CubeSemiComb, CubeSemiGraph, MorphismData::Ternary(w)) => {
            MorphismData::Graph(face_to_graph(w, m, n, budget)?)
        }
        (CubeSemiGraph, CubeSemiComb, MorphismData::Graph(g)) => {
            MorphismData::Ternary(probe_cube_morphism(g, m, n)?)
        }
        _ => return Err(unsupported()),
    };
    Ok(Morphism {
        dom: m,
        cod: n,
        data,
    })
}

/// Splits a monotone map into a surjection followed by a strict map through
/// its image.
pub fn epi_mono_factorize(f: &MonotoneMap) -> (MonotoneMap, MonotoneMap) {
    let mut images = f.values().to_vec();
    images.dedup();
    let k = images.len() - 1;
    let rank: BTreeMap<usize, usize> = images.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let l = MonotoneMap {
        m: f.dom(),
        n: k,
        values: f.values().iter().map(|v| rank[v]).collect(),
    };
    let r = MonotoneMap {
        m: k,
        n: f.cod(),
        values: images,
    };
    (l, r)
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub subject: String,
    pub check: String,
    pub pass: bool,
    pub witness: String,
}

impl ReportRow {
    pub fn new(
        subject: impl Into<String>,
        check: impl Into<String>,
        pass: bool,
        witness: impl Into<String>,
    ) -> Self {
        ReportRow {
            subject: subject.into(),
            check: check.into(),
            pass,
            witness: witness.into(),
        }
    }

    pub fn status(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.subject,
            self.check,
            self.status(),
            self.witness
        )
    }
}

/// All hom-sets between objects `0..=max_obj`.
pub struct HomTable {
    cat: CategoryId,
    max_obj: usize,
    homs: Vec<Vec<Vec<Morphism>>>,
}

impl HomTable {
    pub fn build(cat: CategoryId, max_obj: usize, budget: &Budget) -> Result<HomTable> {
        let homs = (0..=max_obj)
            .map(|m| (0..=max_obj).map(|n| hom_set(cat, m, n, budget)).collect())
            .collect::<Result<_>>()?;
        Ok(HomTable { cat, max_obj, homs })
    }

    pub fn get(&self, m: usize, n: usize) -> &[Morphism] {
        &self.homs[m][n]
    }

    pub fn max_obj(&self) -> usize {
        self.max_obj
    }

    pub fn category(&self) -> CategoryId {
        self.cat
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let k = self.max_obj;
        (0..=k).flat_map(move |m| (0..=k).map(move |n| (m, n)))
    }
}

fn is_identity(cat: CategoryId, f: &Morphism, budget: &Budget) -> Result<bool> {
    Ok(f.dom == f.cod && *f == identity_in(cat, f.dom, budget)?)
}

/// Non-identity morphisms raise degree, with the identity on objects as degree.
pub fn verify_direct(cat: CategoryId, max_obj: usize, budget: &Budget) -> Result<Vec<ReportRow>> {
    let table = HomTable::build(cat, max_obj, budget)?;
    let mut witness = None;
    let mut checked = 0usize;
    'outer: for (m, n) in table.cells() {
        for f in table.get(m, n) {
            checked += 1;
            if m >= n && !is_identity(cat, f, budget)? {
                witness = Some(f.to_string());
                break 'outer;
            }
        }
    }
    Ok(vec![ReportRow::new(
        cat.name(),
        "direct",
        witness.is_none(),
        witness.unwrap_or_else(|| format!("morphisms={checked}")),
    )])
}

/// Degree-lowering and degree-raising classes of a Reedy structure.
fn reedy_classes(cat: CategoryId, f: &Morphism, budget: &Budget) -> Result<(bool, bool)> {
    if cat.is_semi() {
        return Ok((is_identity(cat, f, budget)?, true));
    }
    Ok((f.is_surjective(), f.is_injective()))
}

/// Unique factorization into a degree-lowering map followed by a
/// degree-raising one, checked by enumerating every candidate pair.
pub fn verify_reedy(cat: CategoryId, max_obj: usize, budget: &Budget) -> Result<Vec<ReportRow>> {
    let table = HomTable::build(cat, max_obj, budget)?;
    let mut lower: Vec<Vec<Vec<&Morphism>>> = vec![vec![Vec::new(); max_obj + 1]; max_obj + 1];
    let mut raise: Vec<Vec<Vec<&Morphism>>> = vec![vec![Vec::new(); max_obj + 1]; max_obj + 1];
    for (m, n) in table.cells() {
        for f in table.get(m, n) {
            let (l, r) = reedy_classes(cat, f, budget)?;
            if l {
                lower[m][n].push(f);
            }
            if r {
                raise[m][n].push(f);
            }
        }
    }

    let mut degree_witness = None;
    'deg: for (m, n) in table.cells() {
        for f in &lower[m][n] {
            if n >= m && !is_identity(cat, f, budget)? {
                degree_witness = Some(format!("lowering {f}"));
                break 'deg;
            }
        }
        for f in &raise[m][n] {
            if m >= n && !is_identity(cat, f, budget)? {
                degree_witness = Some(format!("raising {f}"));
                break 'deg;
            }
        }
    }

    let mut factor_witness = None;
    let mut unique_witness = None;
    let mut checked = 0usize;
    for (m, n) in table.cells() {
        for f in table.get(m, n) {
            checked += 1;
            let mut count = 0;
            for k in 0..=m.min(n) {
                for l in &lower[m][k] {
                    for r in &raise[k][n] {
                        if compose_in(cat, l, r)? == *f {
                            count += 1;
                        }
                    }
                }
            }
            if count == 0 && factor_witness.is_none() {
                factor_witness = Some(f.to_string());
            }
            if count > 1 && unique_witness.is_none() {
                unique_witness = Some(format!("{f} factors {count} ways"));
            }
        }
    }

    let mut rows = vec![
        ReportRow::new(
            cat.name(),
            "reedy-degree",
            degree_witness.is_none(),
            degree_witness.unwrap_or_else(|| "-".into()),
        ),
        ReportRow::new(
            cat.name(),
            "reedy-factorization",
            factor_witness.is_none(),
            factor_witness.unwrap_or_else(|| format!("morphisms={checked}")),
        ),
        ReportRow::new(
            cat.name(),
            "reedy-uniqueness",
            unique_witness.is_none(),
            unique_witness.unwrap_or_else(|| format!("morphisms={checked}")),
        ),
    ];

    if cat == CategoryId::TwistedDimGraph {
        let mut witness = None;
        for (m, n) in table.cells().filter(|(m, n)| m >= n) {
            let count = table.get(m, n).iter().filter(|f| f.is_surjective()).count();
            if count != 1 && witness.is_none() {
                witness = Some(format!("hom({m},{n}) has {count} surjections"));
            }
        }
        rows.push(ReportRow::new(
            cat.name(),
            "unique-surjection",
            witness.is_none(),
            witness.unwrap_or_else(|| "-".into()),
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn hom_counts() {
        assert_eq!(
            hom_set(CategoryId::SimplexSemiComb, 1, 2, &b())
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            hom_set(CategoryId::CubeSemiComb, 1, 2, &b()).unwrap().len(),
            4
        );
        for m in 0..=3 {
            for n in 0..=3 {
                let semi = hom_set(CategoryId::SimplexSemiBin, m, n, &b())
                    .unwrap()
                    .len();
                assert_eq!(semi, binom(n + 1, m + 1));
            }
        }
        for n in 0..=3 {
            assert_eq!(
                hom_set(CategoryId::TwistedSemiGraph, n, n, &b())
                    .unwrap()
                    .len(),
                1
            );
        }
    }

    #[test]
    fn names_round_trip() {
        for c in CategoryId::ALL {
            assert_eq!(c.name().parse::<CategoryId>().unwrap(), c);
        }
        assert!("nope".parse::<CategoryId>().is_err());
    }

    #[test]
    fn bin_to_comb_example() {
        let f = Morphism {
            dom: 1,
            cod: 2,
            data: MorphismData::Binary("101".parse().unwrap()),
        };
        let g = convert(
            CategoryId::SimplexSemiBin,
            CategoryId::SimplexSemiComb,
            &f,
            &b(),
        )
        .unwrap();
        assert_eq!(g.as_monotone().unwrap().values(), &[0, 2]);
        let back = convert(
            CategoryId::SimplexSemiComb,
            CategoryId::SimplexSemiBin,
            &g,
            &b(),
        )
        .unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn probe_recovers_facet() {
        let word: TernaryWord = "*0".parse().unwrap();
        let f = Morphism {
            dom: 1,
            cod: 2,
            data: MorphismData::Ternary(word.clone()),
        };
        let g = convert(
            CategoryId::CubeSemiComb,
            CategoryId::CubeSemiGraph,
            &f,
            &b(),
        )
        .unwrap();
        let back = convert(
            CategoryId::CubeSemiGraph,
            CategoryId::CubeSemiComb,
            &g,
            &b(),
        )
        .unwrap();
        assert_eq!(back.data, MorphismData::Ternary(word));
    }

    #[test]
    fn unsupported_conversion() {
        let f = identity_in(CategoryId::CubeSemiComb, 1, &b()).unwrap();
        assert!(matches!(
            convert(
                CategoryId::CubeSemiComb,
                CategoryId::SimplexSemiBin,
                &f,
                &b()
            ),
            Err(Error::UnsupportedConversion { .. })
        ));
    }

    #[test]
    fn factorization_example() {
        let f = MonotoneMap::new(2, 2, vec![0, 2, 2], Mode::Lax).unwrap();
        let (l, r) = epi_mono_factorize(&f);
        assert_eq!(l.values(), &[0, 1, 1]);
        assert_eq!(r.values(), &[0, 2]);
        assert_eq!(l.then(&r).unwrap(), f);
        let s = MonotoneMap::new(1, 3, vec![1, 3], Mode::Strict).unwrap();
        let (l, r) = epi_mono_factorize(&s);
        assert_eq!(l, MonotoneMap::identity(1));
        assert_eq!(r, s);
    }

    #[test]
    fn dims() {
        let g = object_graph(CategoryId::TwistedFullGraph, 2, &b()).unwrap();
        let w = |s: &str| Label::Word(s.parse().unwrap());
        assert_eq!(edge_dim(&g, &w("01"), &w("01")).unwrap(), 2);
        assert_eq!(edge_dim(&g, &w("01"), &w("00")).unwrap(), 1);
        assert_eq!(edge_dim(&g, &w("00"), &w("10")).unwrap(), 0);
        assert!(edge_dim(&g, &w("00"), &w("01")).is_err());
    }

    #[test]
    fn dim_preservation() {
        let g = object_graph(CategoryId::TwistedFullGraph, 2, &b()).unwrap();
        assert!(preserves_dim(&graph::identity(&g)));
        let homs = enumerate_homs(&g, &g, &b()).unwrap();
        let constant = homs
            .iter()
            .find(|f| f.node_map().iter().all(|&v| v == 0))
            .unwrap();
        assert!(preserves_dim(constant));
        assert!(homs.iter().any(|f| !preserves_dim(f)));
    }

    #[test]
    fn direct_and_reedy() {
        assert!(verify_direct(CategoryId::SimplexSemiGraph, 3, &b()).unwrap()[0].pass);
        assert!(!verify_direct(CategoryId::SimplexFullComb, 3, &b()).unwrap()[0].pass);
        assert!(verify_reedy(CategoryId::SimplexFullComb, 3, &b())
            .unwrap()
            .iter()
            .all(|r| r.pass));
        assert!(verify_reedy(CategoryId::CubeSemiComb, 3, &b())
            .unwrap()
            .iter()
            .all(|r| r.pass));
    }

    #[test]
    fn composition_mismatch() {
        let f = identity_in(CategoryId::CubeSemiComb, 1, &b()).unwrap();
        let g = identity_in(CategoryId::CubeSemiComb, 2, &b()).unwrap();
        assert!(matches!(
            compose_in(CategoryId::CubeSemiComb, &f, &g),
            Err(Error::DomainMismatch { .. })
        ));
    }
}
