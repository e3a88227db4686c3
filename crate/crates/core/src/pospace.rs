//! Exact-rational directed geometry.
//!
//! A rank function `f` on a region of `Q^n` induces the order
//! `x <= y  iff  d(x, y) <= f(y) - f(x)` with `d` the Euclidean distance.
//! It is decided without square roots: the rank difference must be
//! non-negative and dominate the squared distance after squaring.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Budget, Error, Result};
use crate::graph::{reachable_from, Graph, Label};
use crate::words::{sort_num, BinaryWord};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn pow2(k: usize) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

/// Renders integers plainly and everything else as `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn squared_distance(&self, other: &RationalPoint) -> Result<Rational> {
        same_dim(self, other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .fold(Rational::zero(), |acc, x| acc + x))
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn same_dim(x: &RationalPoint, y: &RationalPoint) -> Result<()> {
    if x.dim() == y.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankKind {
    /// Coordinate sum.
    Std,
    /// `sum_i x_i * 2^(n-1-i) * prod_{j<i} x_j`.
    Tw,
}

/// Exact rank of a point.
pub fn rank(kind: RankKind, x: &RationalPoint) -> Rational {
    match kind {
        RankKind::Std => x.0.iter().fold(Rational::zero(), |acc, c| acc + c),
        RankKind::Tw => {
            let n = x.dim();
            let mut total = Rational::zero();
            let mut prefix = Rational::one();
            for (i, c) in x.0.iter().enumerate() {
                total += c * &prefix * pow2(n - 1 - i);
                prefix *= c;
            }
            total
        }
    }
}

/// The twisted rank by peeling the first coordinate:
/// `rank(x0 :: rest) = x0 * (2^|rest| + rank(rest))`.
pub fn rank_tw_recursive(x: &[Rational]) -> Rational {
    match x.split_first() {
        None => Rational::zero(),
        Some((x0, rest)) => x0 * (pow2(rest.len()) + rank_tw_recursive(rest)),
    }
}

/// A rank function restricted to a box, or to all of `Q^n` when `bounds` is
/// `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedSpace {
    dim: usize,
    rank: RankKind,
    bounds: Option<Vec<(Rational, Rational)>>,
}

impl RankedSpace {
    pub fn new(
        dim: usize,
        rank: RankKind,
        bounds: Option<Vec<(Rational, Rational)>>,
    ) -> Result<Self> {
        if let Some(b) = &bounds {
            if b.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: b.len(),
                    right: dim,
                });
            }
            if let Some((lo, hi)) = b.iter().find(|(lo, hi)| lo > hi) {
                return Err(Error::InvalidFamily(format!("empty interval [{lo}, {hi}]")));
            }
        }
        Ok(RankedSpace { dim, rank, bounds })
    }

    /// The unit cube `[0,1]^n` with the coordinate-sum rank.
    pub fn standard_cube(n: usize) -> Self {
        RankedSpace {
            dim: n,
            rank: RankKind::Std,
            bounds: Some(vec![(int(0), int(1)); n]),
        }
    }

    /// The cube `[-1,1]^n` with the twisted rank.
    pub fn twisted_cube(n: usize) -> Self {
        RankedSpace {
            dim: n,
            rank: RankKind::Tw,
            bounds: Some(vec![(int(-1), int(1)); n]),
        }
    }

    /// All of `Q^n`.
    pub fn euclidean(n: usize, rank: RankKind) -> Self {
        RankedSpace {
            dim: n,
            rank,
            bounds: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank_kind(&self) -> RankKind {
        self.rank
    }

    pub fn contains(&self, x: &RationalPoint) -> bool {
        x.dim() == self.dim
            && self
                .bounds
                .as_ref()
                .is_none_or(|b| b.iter().zip(&x.0).all(|((lo, hi), c)| lo <= c && c <= hi))
    }

    fn require(&self, x: &RationalPoint) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: x.dim(),
                right: self.dim,
            });
        }
        if !self.contains(x) {
            return Err(Error::OutsideBox {
                point: x.to_string(),
            });
        }
        Ok(())
    }

    /// Box corners in lexicographic order of their low/high choice; empty
    /// for an unbounded space.
    pub fn corners(&self) -> Vec<RationalPoint> {
        let Some(bounds) = &self.bounds else {
            return Vec::new();
        };
        BinaryWord::all(self.dim)
            .map(|w| {
                RationalPoint(
                    bounds
                        .iter()
                        .zip(w.digits())
                        .map(|((lo, hi), &b)| if b { hi.clone() } else { lo.clone() })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn rank(&self, x: &RationalPoint) -> Result<Rational> {
        self.require(x)?;
        Ok(rank(self.rank, x))
    }
}

/// The rank-generated order.
pub fn below(space: &RankedSpace, x: &RationalPoint, y: &RationalPoint) -> Result<bool> {
    space.require(x)?;
    space.require(y)?;
    let gap = rank(space.rank, y) - rank(space.rank, x);
    if gap.is_negative() {
        return Ok(false);
    }
    Ok(x.squared_distance(y)? <= &gap * &gap)
}

/// Coordinatewise order.
pub fn product_leq(x: &RationalPoint, y: &RationalPoint) -> Result<bool> {
    same_dim(x, y)?;
    Ok(x.0.iter().zip(&y.0).all(|(a, b)| a <= b))
}

/// Corner of the standard (`0/1`) or twisted (`-1/+1`) cube named by `b`.
pub fn emb(kind: RankKind, b: &BinaryWord) -> RationalPoint {
    RationalPoint(
        b.digits()
            .iter()
            .map(|&d| match (kind, d) {
                (RankKind::Std, false) => int(0),
                (RankKind::Std, true) => int(1),
                (RankKind::Tw, false) => int(-1),
                (RankKind::Tw, true) => int(1),
            })
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedReport {
    pub injective: bool,
    pub covers_corners: bool,
    pub order_preserving: bool,
    /// First failing reachable pair `(s, t)` with `emb(s)` not below `emb(t)`.
    pub order_witness: Option<(Label, Label)>,
    pub detail: Option<String>,
}

impl EmbedReport {
    pub fn pass(&self) -> bool {
        self.injective && self.covers_corners && self.order_preserving
    }
}

/// Checks that `emb_map` is an embedding of the path order of `g` into the
/// space: injective, hitting every box corner, and monotone on reachability.
pub fn can_embed(
    g: &Graph,
    space: &RankedSpace,
    emb_map: impl Fn(&Label) -> Result<RationalPoint>,
) -> Result<EmbedReport> {
    if g.topological_order().is_none() {
        let v = (0..g.node_count())
            .find(|&v| {
                g.out_neighbors(v)
                    .iter()
                    .any(|&t| t != v && reachable_from(g, t)[v])
            })
            .unwrap_or(0);
        return Err(Error::Cyclic(g.label(v).to_string()));
    }
    let points = g.nodes().iter().map(&emb_map).collect::<Result<Vec<_>>>()?;
    for p in &points {
        space.require(p)?;
    }
    let mut detail = None;

    let mut seen = HashSet::new();
    let mut injective = true;
    for (i, p) in points.iter().enumerate() {
        if !seen.insert(p) {
            injective = false;
            detail.get_or_insert_with(|| format!("{} collides at {p}", g.label(i)));
            break;
        }
    }

    let mut covers_corners = true;
    for c in space.corners() {
        if !seen.contains(&c) {
            covers_corners = false;
            detail.get_or_insert_with(|| format!("corner {c} is not hit"));
            break;
        }
    }

    let mut order_witness = None;
    'outer: for s in 0..g.node_count() {
        let reach = reachable_from(g, s);
        for t in (0..g.node_count()).filter(|&t| reach[t]) {
            if !below(space, &points[s], &points[t])? {
                order_witness = Some((g.label(s).clone(), g.label(t).clone()));
                detail.get_or_insert_with(|| {
                    format!(
                        "{} reaches {} but {} is not below {}",
                        g.label(s),
                        g.label(t),
                        points[s],
                        points[t]
                    )
                });
                break 'outer;
            }
        }
    }

    Ok(EmbedReport {
        injective,
        covers_corners,
        order_preserving: order_witness.is_none(),
        order_witness,
        detail,
    })
}

/// Word-labelled corner embedding for cube graphs.
pub fn corner_embedding(kind: RankKind) -> impl Fn(&Label) -> Result<RationalPoint> {
    move |l| {
        l.as_word()
            .map(|w| emb(kind, w))
            .ok_or_else(|| Error::InvalidWord(format!("{l} is not a binary word")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSortRow {
    pub word: BinaryWord,
    pub rank: Rational,
    pub expected: Rational,
}

/// Compares `rank_tw(emb_tw(b))` with `2 * sort_num(b) - (2^n - 1)` on every
/// word of length `n`; returns the disagreeing rows.
pub fn rank_sort_identity(n: usize, budget: &Budget) -> Result<(usize, Vec<RankSortRow>)> {
    budget.check("word length", n as u128, budget.max_word_len as u128)?;
    let offset = pow2(n) - int(1);
    let mut failures = Vec::new();
    let mut checked = 0;
    for b in BinaryWord::all(n) {
        checked += 1;
        let r = rank(RankKind::Tw, &emb(RankKind::Tw, &b));
        let expected = int(2) * Rational::from_integer(BigInt::from(sort_num(&b))) - &offset;
        if r != expected {
            failures.push(RankSortRow {
                word: b,
                rank: r,
                expected,
            });
        }
    }
    Ok((checked, failures))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexDirection {
    /// Prefix sums.
    Phi,
    /// Consecutive differences.
    Psi,
}

pub fn simplex_coords(direction: SimplexDirection, x: &RationalPoint) -> RationalPoint {
    match direction {
        SimplexDirection::Phi => {
            let mut acc = Rational::zero();
            RationalPoint(
                x.0.iter()
                    .map(|c| {
                        acc += c;
                        acc.clone()
                    })
                    .collect(),
            )
        }
        SimplexDirection::Psi => RationalPoint(
            x.0.iter()
                .enumerate()
                .map(|(i, c)| if i == 0 { c.clone() } else { c - &x.0[i - 1] })
                .collect(),
        ),
    }
}

/// `n - i` zeros followed by `i` ones.
pub fn simplex_extreme_point(n: usize, i: usize) -> Result<RationalPoint> {
    if i > n {
        return Err(Error::IndexOutOfRange {
            index: i as u128,
            bound: n as u128 + 1,
        });
    }
    Ok(RationalPoint(
        (0..n)
            .map(|j| if i + j < n { int(0) } else { int(1) })
            .collect(),
    ))
}

/// `0 <= x_0 <= x_1 <= ... <= x_{n-1} <= 1`.
pub fn in_ordered_simplex(x: &RationalPoint) -> bool {
    let zero = int(0);
    let one = int(1);
    let mut prev = &zero;
    for c in &x.0 {
        if c < prev {
            return false;
        }
        prev = c;
    }
    *prev <= one
}

/// `0 <= x_i <= 1` and `sum x_i <= 1`.
pub fn in_standard_simplex(x: &RationalPoint) -> bool {
    let zero = int(0);
    let one = int(1);
    x.0.iter().all(|c| *c >= zero && *c <= one) && rank(RankKind::Std, x) <= one
}

/// Extreme points of the face of the `n`-simplex selected by the one-digits
/// of a length-`n + 1` word.
pub fn simplex_face_points(word: &BinaryWord) -> Result<Vec<RationalPoint>> {
    let n = word
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidWord("empty word".into()))?;
    (0..=n)
        .filter(|&i| word.get(i))
        .map(|i| simplex_extreme_point(n, i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPoint {
        RationalPoint::from_ints(c)
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(RankKind::Std, &p(&[0, 0, 0])), int(0));
        assert_eq!(rank(RankKind::Tw, &p(&[-1])), int(-1));
        assert_eq!(rank(RankKind::Tw, &p(&[1])), int(1));
        let corners = [(&[-1, 1], -3), (&[-1, -1], -1), (&[1, -1], 1), (&[1, 1], 3)];
        for (c, r) in corners {
            assert_eq!(rank(RankKind::Tw, &p(c)), int(r));
        }
        assert_eq!(rank(RankKind::Tw, &p(&[-1, 1, 1])), int(-7));
        assert_eq!(rank(RankKind::Tw, &p(&[])), int(0));
    }

    #[test]
    fn recursive_rank_matches_sum() {
        let x = RationalPoint::new(vec![ratio(1, 3), ratio(-5, 7), int(2), ratio(9, 4)]);
        assert_eq!(rank_tw_recursive(x.coords()), rank(RankKind::Tw, &x));
    }

    #[test]
    fn order_examples() {
        let s = RankedSpace::standard_cube(2);
        assert!(below(&s, &p(&[0, 0]), &p(&[1, 1])).unwrap());
        assert!(!below(&s, &p(&[0, 1]), &p(&[1, 0])).unwrap());
        assert!(below(&s, &p(&[1, 0]), &p(&[1, 0])).unwrap());
        assert!(matches!(
            below(&s, &p(&[2, 0]), &p(&[1, 0])),
            Err(Error::OutsideBox { .. })
        ));
        assert!(product_leq(&p(&[0, 0]), &p(&[1, 1])).unwrap());
        assert!(!product_leq(&p(&[0, 1]), &p(&[1, 0])).unwrap());
        assert!(product_leq(&p(&[0]), &p(&[1, 0])).is_err());
    }

    #[test]
    fn unbounded_counterexample() {
        let e = RankedSpace::euclidean(3, RankKind::Std);
        let x = p(&[0, 0, 0]);
        let y = p(&[4, 4, -1]);
        assert_eq!(x.squared_distance(&y).unwrap(), int(33));
        assert!(below(&e, &x, &y).unwrap());
        assert!(!product_leq(&x, &y).unwrap());
    }

    #[test]
    fn embeddings() {
        let b: BinaryWord = "01".parse().unwrap();
        assert_eq!(emb(RankKind::Std, &b), p(&[0, 1]));
        assert_eq!(emb(RankKind::Tw, &b), p(&[-1, 1]));
    }

    #[test]
    fn rank_sort_small() {
        for n in 0..=6 {
            let (checked, failures) = rank_sort_identity(n, &Budget::default()).unwrap();
            assert_eq!(checked, 1 << n);
            assert!(failures.is_empty());
        }
    }

    #[test]
    fn simplex_maps() {
        let x = p(&[1, 2, 3]);
        assert_eq!(simplex_coords(SimplexDirection::Phi, &x), p(&[1, 3, 6]));
        assert_eq!(
            simplex_coords(
                SimplexDirection::Psi,
                &simplex_coords(SimplexDirection::Phi, &x)
            ),
            x
        );
        assert_eq!(simplex_extreme_point(3, 0).unwrap(), p(&[0, 0, 0]));
        assert_eq!(simplex_extreme_point(3, 3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(simplex_extreme_point(3, 1).unwrap(), p(&[0, 0, 1]));
        assert!(simplex_extreme_point(3, 4).is_err());
        assert!(in_ordered_simplex(&p(&[0, 0, 1])));
        assert!(!in_ordered_simplex(&p(&[1, 0, 1])));
        assert!(in_standard_simplex(&p(&[0, 0, 1])));
    }

    #[test]
    fn rational_display() {
        assert_eq!(fmt_rational(&ratio(6, 4)), "3/2");
        assert_eq!(fmt_rational(&int(-3)), "-3");
        assert_eq!(
            RationalPoint::new(vec![ratio(1, 2), int(0)]).to_string(),
            "(1/2,0)"
        );
    }
}
