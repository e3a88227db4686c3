//! Binary and ternary words.
//!
//! Digit 0 of a word is the most significant (left-most) digit. Binary
//! words label the nodes of cube graphs; ternary words over `{0, 1, *}`
//! encode faces of cubes, and a ternary word with a single `*` is an
//! arrow (1-face).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A fixed-length sequence of bits, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct BinaryWord(Vec<bool>);

impl BinaryWord {
    pub fn new(digits: Vec<bool>) -> Self {
        BinaryWord(digits)
    }

    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        BinaryWord(vec![false; len])
    }

    pub fn ones(len: usize) -> Self {
        BinaryWord(vec![true; len])
    }

    /// The `len`-digit big-endian encoding of `value`.
    pub fn from_index(len: usize, value: u64) -> Self {
        BinaryWord(
            (0..len)
                .map(|i| (value >> (len - 1 - i)) & 1 == 1)
                .collect(),
        )
    }

    /// Big-endian integer value. Only meaningful for words of at most 64 digits.
    pub fn to_index(&self) -> u64 {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | u64::from(b))
    }

    /// All words of length `len` in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = BinaryWord> {
        (0..1u64 << len).map(move |i| BinaryWord::from_index(len, i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// `b :: self`
    pub fn cons(&self, b: bool) -> BinaryWord {
        let mut digits = Vec::with_capacity(self.len() + 1);
        digits.push(b);
        digits.extend_from_slice(&self.0);
        BinaryWord(digits)
    }

    pub fn prefix(&self, len: usize) -> BinaryWord {
        BinaryWord(self.0[..len].to_vec())
    }

    pub fn tail(&self) -> BinaryWord {
        BinaryWord(self.0[1..].to_vec())
    }

    pub fn flip(&self, i: usize) -> BinaryWord {
        let mut digits = self.0.clone();
        digits[i] = !digits[i];
        BinaryWord(digits)
    }

    pub fn as_ternary(&self) -> TernaryWord {
        TernaryWord(self.0.iter().map(|&b| Trit::from(b)).collect())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidWord(format!("`{s}` is not a binary word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }
}

/// A ternary digit. `Star` is a free coordinate, not a number between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Trit {
    Zero,
    One,
    Star,
}

impl From<bool> for Trit {
    fn from(b: bool) -> Self {
        if b {
            Trit::One
        } else {
            Trit::Zero
        }
    }
}

impl Trit {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Trit::Zero => Some(false),
            Trit::One => Some(true),
            Trit::Star => None,
        }
    }
}

/// A fixed-length word over `{0, 1, *}`; an `m`-face of the `n`-cube has
/// length `n` and exactly `m` stars.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct TernaryWord(Vec<Trit>);

impl TernaryWord {
    pub fn new(digits: Vec<Trit>) -> Self {
        TernaryWord(digits)
    }

    /// `<* * ... *>`, the identity face map on `n`.
    pub fn identity(n: usize) -> Self {
        TernaryWord(vec![Trit::Star; n])
    }

    /// The facet with digit `b` at index `r` and stars elsewhere.
    pub fn facet(n: usize, r: usize, b: bool) -> Self {
        let mut digits = vec![Trit::Star; n];
        digits[r] = Trit::from(b);
        TernaryWord(digits)
    }

    /// All words of length `len` with exactly `stars` stars, in lexicographic
    /// digit order (`0 < 1 < *`).
    pub fn all_with_stars(len: usize, stars: usize) -> Vec<TernaryWord> {
        fn go(len: usize, stars: usize, acc: &mut Vec<Trit>, out: &mut Vec<TernaryWord>) {
            let placed = acc.iter().filter(|&&t| t == Trit::Star).count();
            let remaining = len - acc.len();
            if remaining == 0 {
                if placed == stars {
                    out.push(TernaryWord(acc.clone()));
                }
                return;
            }
            for t in [Trit::Zero, Trit::One, Trit::Star] {
                let placed_after = placed + usize::from(t == Trit::Star);
                if placed_after > stars || placed_after + remaining - 1 < stars {
                    continue;
                }
                acc.push(t);
                go(len, stars, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        if stars <= len {
            go(len, stars, &mut Vec::with_capacity(len), &mut out);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digits(&self) -> &[Trit] {
        &self.0
    }

    pub fn star_count(&self) -> usize {
        self.0.iter().filter(|&&t| t == Trit::Star).count()
    }

    pub fn star_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == Trit::Star)
            .map(|(i, _)| i)
    }

    /// Substitutes the `i`-th star by `point[i]`. This is the node map of the
    /// face inclusion `binary(stars) -> binary(len)`.
    pub fn apply(&self, point: &BinaryWord) -> Result<BinaryWord> {
        if point.len() != self.star_count() {
            return Err(Error::ArityMismatch(format!(
                "face {self} has {} stars but point {point} has {} digits",
                self.star_count(),
                point.len()
            )));
        }
        let mut next = point.digits().iter();
        Ok(BinaryWord(
            self.0
                .iter()
                .map(|t| t.as_bool().unwrap_or_else(|| *next.next().unwrap()))
                .collect(),
        ))
    }

    /// Whether the binary word `b` lies on this face.
    pub fn contains(&self, b: &BinaryWord) -> bool {
        b.len() == self.len()
            && self
                .0
                .iter()
                .zip(b.digits())
                .all(|(t, &d)| t.as_bool().is_none_or(|v| v == d))
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            f.write_str(match t {
                Trit::Zero => "0",
                Trit::One => "1",
                Trit::Star => "*",
            })?;
        }
        Ok(())
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(Trit::Zero),
                '1' => Ok(Trit::One),
                '*' | '⋆' => Ok(Trit::Star),
                _ => Err(Error::InvalidWord(format!("`{s}` is not a ternary word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(TernaryWord)
    }
}

/// A 1-face: a ternary word with exactly one star.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    word: TernaryWord,
    dim: usize,
}

impl Arrow {
    pub fn new(word: TernaryWord) -> Result<Self> {
        let stars: Vec<usize> = word.star_positions().collect();
        match stars[..] {
            [dim] => Ok(Arrow { word, dim }),
            _ => Err(Error::InvalidWord(format!(
                "an arrow needs exactly one star, got `{word}`"
            ))),
        }
    }

    /// The arrow at `dim` whose other digits come from `rest` (length `n - 1`).
    pub fn from_parts(dim: usize, rest: &BinaryWord) -> Self {
        let mut digits: Vec<Trit> = rest.digits().iter().map(|&b| Trit::from(b)).collect();
        digits.insert(dim, Trit::Star);
        Arrow {
            word: TernaryWord(digits),
            dim,
        }
    }

    /// Every arrow of the `n`-cube, ordered by word.
    pub fn all(n: usize) -> Vec<Arrow> {
        TernaryWord::all_with_stars(n, 1)
            .into_iter()
            .map(|w| Arrow::new(w).expect("one star"))
            .collect()
    }

    pub fn word(&self) -> &TernaryWord {
        &self.word
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The boolean digits before the star.
    pub fn prefix(&self) -> BinaryWord {
        BinaryWord(
            self.word.0[..self.dim]
                .iter()
                .map(|t| t.as_bool().expect("digits before the star are boolean"))
                .collect(),
        )
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReversalStats {
    pub num_rev: usize,
    /// `num_rev mod 2`; `true` means the arrow points against its dimension.
    pub parity: bool,
}

/// Reversal count of a prefix: its length minus its digit sum, i.e. the
/// number of zeros.
pub fn reversal_stats(prefix: &BinaryWord) -> ReversalStats {
    let num_rev = prefix.len() - prefix.count_ones();
    ReversalStats {
        num_rev,
        parity: num_rev % 2 == 1,
    }
}

/// Parity of a prefix, `(1 - b0) xor (1 - b1) xor ...`.
pub fn parity(prefix: &[bool]) -> bool {
    prefix.iter().fold(false, |p, &b| p ^ !b)
}

pub fn arrow_stats(arrow: &Arrow) -> ReversalStats {
    reversal_stats(&arrow.prefix())
}

/// Counts reversals by replaying the thickening-and-twisting iterations.
///
/// The cube is built from the last digit backwards. At the iteration for
/// digit `j`, the face `<t_j ... t_{n-1}>` is placed in copy `t_j` of the
/// prism; copy 0 is reversed. Before the star is reached the face is a point,
/// so a reversal there changes nothing.
pub fn simulate_reversals(arrow: &Arrow) -> usize {
    let digits = arrow.word.digits();
    let mut is_arrow = false;
    let mut reversals = 0;
    for j in (0..digits.len()).rev() {
        match digits[j] {
            Trit::Star => is_arrow = true,
            Trit::Zero if is_arrow => reversals += 1,
            _ => {}
        }
    }
    reversals
}

/// Source and target of an arrow in the twisted cube: the star is replaced by
/// `0 xor p` for the source and `1 xor p` for the target, `p` the arrow parity.
pub fn arrow_endpoints(arrow: &Arrow) -> (BinaryWord, BinaryWord) {
    let p = arrow_stats(arrow).parity;
    let with = |b: bool| {
        BinaryWord(
            arrow
                .word
                .digits()
                .iter()
                .map(|t| t.as_bool().unwrap_or(b ^ p))
                .collect(),
        )
    };
    (with(false), with(true))
}

/// Diagrammatic composite `f . g` of face maps `f: m -> k`, `g: k -> n`:
/// the `i`-th star of `g` is replaced by `f[i]`.
pub fn ternary_compose(f: &TernaryWord, g: &TernaryWord) -> Result<TernaryWord> {
    if f.len() != g.star_count() {
        return Err(Error::ArityMismatch(format!(
            "`{f}` has length {} but `{g}` has {} stars",
            f.len(),
            g.star_count()
        )));
    }
    let mut next = f.0.iter();
    Ok(TernaryWord(
        g.0.iter()
            .map(|&t| {
                if t == Trit::Star {
                    *next.next().unwrap()
                } else {
                    t
                }
            })
            .collect(),
    ))
}

/// Diagrammatic composite of semi-simplex maps in binary form: the `i`-th
/// one-digit of `g` is replaced by `f[i]`.
pub fn binary_simplex_compose(f: &BinaryWord, g: &BinaryWord) -> Result<BinaryWord> {
    if f.len() != g.count_ones() {
        return Err(Error::ArityMismatch(format!(
            "`{f}` has length {} but `{g}` has {} ones",
            f.len(),
            g.count_ones()
        )));
    }
    let mut next = f.0.iter();
    Ok(BinaryWord(
        g.0.iter()
            .map(|&b| if b { *next.next().unwrap() } else { false })
            .collect(),
    ))
}

/// Position of `b` along the Hamiltonian path of the twisted `n`-cube.
///
/// `sort(0 :: w) = 2^n - 1 - sort(w)` and `sort(1 :: w) = 2^n + sort(w)`,
/// where `n = |w|`.
pub fn sort_num(b: &BinaryWord) -> u64 {
    let mut index = 0u64;
    // Fold from the last digit: after consuming k digits `index` is the
    // position of the suffix in the twisted k-cube.
    for (k, &digit) in b.digits().iter().rev().enumerate() {
        let half = 1u64 << k;
        index = if digit {
            half + index
        } else {
            half - 1 - index
        };
    }
    index
}

/// Node at position `i` of the Hamiltonian path of the twisted `n`-cube.
pub fn unsort_num(n: usize, i: u64) -> Result<BinaryWord> {
    if n >= 64 || i >= 1u64 << n {
        return Err(Error::IndexOutOfRange {
            index: u128::from(i),
            bound: 1u128 << n.min(127),
        });
    }
    let mut digits = Vec::with_capacity(n);
    let mut index = i;
    for k in (0..n).rev() {
        let half = 1u64 << k;
        if index < half {
            digits.push(false);
            index = half - 1 - index;
        } else {
            digits.push(true);
            index -= half;
        }
    }
    Ok(BinaryWord(digits))
}

/// `b'_i = b_i xor parity(b_0 .. b_{i-1})`; read big-endian this is `sort_num(b)`.
pub fn sort_bin(b: &BinaryWord) -> BinaryWord {
    let mut p = false;
    BinaryWord(
        b.digits()
            .iter()
            .map(|&d| {
                let out = d ^ p;
                p ^= !d;
                out
            })
            .collect(),
    )
}

/// Inverse of [`sort_bin`]: `b_0 = c_0` and `b_i = c_i xor c_{i-1} xor 1`.
pub fn unsort_bin(c: &BinaryWord) -> BinaryWord {
    BinaryWord(
        c.digits()
            .iter()
            .enumerate()
            .map(|(i, &d)| if i == 0 { d } else { d ^ !c.get(i - 1) })
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrayDirection {
    Encode,
    Decode,
}

/// Reflected binary code. Encoding maps `b` to `b_i xor b_{i-1}`; decoding
/// takes prefix XORs.
pub fn gray_code(b: &BinaryWord, direction: GrayDirection) -> BinaryWord {
    match direction {
        GrayDirection::Encode => BinaryWord(
            b.digits()
                .iter()
                .enumerate()
                .map(|(i, &d)| if i == 0 { d } else { d ^ b.get(i - 1) })
                .collect(),
        ),
        GrayDirection::Decode => {
            let mut acc = false;
            BinaryWord(
                b.digits()
                    .iter()
                    .map(|&d| {
                        acc ^= d;
                        acc
                    })
                    .collect(),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn tw(s: &str) -> TernaryWord {
        s.parse().unwrap()
    }

    fn arrow(s: &str) -> Arrow {
        Arrow::new(tw(s)).unwrap()
    }

    #[test]
    fn reversal_stats_examples() {
        assert_eq!(
            reversal_stats(&bw("")),
            ReversalStats {
                num_rev: 0,
                parity: false
            }
        );
        assert_eq!(
            reversal_stats(&bw("0")),
            ReversalStats {
                num_rev: 1,
                parity: true
            }
        );
        assert_eq!(
            reversal_stats(&bw("01")),
            ReversalStats {
                num_rev: 1,
                parity: true
            }
        );
    }

    #[test]
    fn dimension_zero_arrows_are_never_reversed() {
        for rest in BinaryWord::all(2) {
            assert!(!arrow_stats(&Arrow::from_parts(0, &rest)).parity);
        }
        assert_eq!(arrow_stats(&arrow("0*")).num_rev, 1);
        assert!(arrow_stats(&arrow("0*")).parity);
        assert_eq!(arrow_stats(&arrow("01*")).num_rev, 1);
    }

    #[test]
    fn simulation_matches_closed_form() {
        assert_eq!(simulate_reversals(&arrow("*")), 0);
        assert_eq!(simulate_reversals(&arrow("0*")), 1);
        for n in 1..=6 {
            for a in Arrow::all(n) {
                assert_eq!(simulate_reversals(&a), arrow_stats(&a).num_rev, "{a}");
            }
        }
    }

    #[test]
    fn endpoints() {
        assert_eq!(arrow_endpoints(&arrow("*0")), (bw("00"), bw("10")));
        assert_eq!(arrow_endpoints(&arrow("0*")), (bw("01"), bw("00")));
    }

    #[test]
    fn arrow_requires_one_star() {
        assert!(Arrow::new(tw("01")).is_err());
        assert!(Arrow::new(tw("**")).is_err());
    }

    #[test]
    fn ternary_composition() {
        let g = tw("*0*");
        assert_eq!(ternary_compose(&TernaryWord::identity(2), &g).unwrap(), g);
        assert_eq!(ternary_compose(&tw("1*"), &g).unwrap(), tw("10*"));
        assert!(ternary_compose(&tw("1"), &g).is_err());
    }

    #[test]
    fn ternary_composition_is_associative() {
        for a in 0..=3 {
            for b in a..=3 {
                for c in b..=3 {
                    for d in c..=3 {
                        for f in TernaryWord::all_with_stars(b, a) {
                            for g in TernaryWord::all_with_stars(c, b) {
                                for h in TernaryWord::all_with_stars(d, c) {
                                    let left =
                                        ternary_compose(&ternary_compose(&f, &g).unwrap(), &h)
                                            .unwrap();
                                    let right =
                                        ternary_compose(&f, &ternary_compose(&g, &h).unwrap())
                                            .unwrap();
                                    assert_eq!(left, right);
                                    assert_eq!(left.star_count(), f.star_count());
                                    assert_eq!(left.len(), h.len());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn binary_simplex_composition() {
        let g = bw("101");
        assert_eq!(binary_simplex_compose(&BinaryWord::ones(2), &g).unwrap(), g);
        assert_eq!(binary_simplex_compose(&bw("01"), &g).unwrap(), bw("001"));
        assert!(binary_simplex_compose(&bw("011"), &g).is_err());
    }

    #[test]
    fn sort_tables() {
        assert_eq!(sort_num(&bw("")), 0);
        assert_eq!(unsort_num(0, 0).unwrap(), bw(""));
        let n2: Vec<u64> = ["01", "00", "10", "11"]
            .iter()
            .map(|s| sort_num(&bw(s)))
            .collect();
        assert_eq!(n2, vec![0, 1, 2, 3]);
        let order = ["011", "010", "000", "001", "101", "100", "110", "111"];
        for (i, s) in order.iter().enumerate() {
            assert_eq!(sort_num(&bw(s)), i as u64);
            assert_eq!(unsort_num(3, i as u64).unwrap(), bw(s));
        }
        assert!(unsort_num(3, 8).is_err());
    }

    #[test]
    fn sort_bin_examples() {
        assert_eq!(sort_bin(&bw("00")), bw("01"));
        assert_eq!(sort_bin(&bw("11")), bw("11"));
        assert_eq!(sort_bin(&bw("011")), bw("000"));
        for n in 0..=12 {
            for b in BinaryWord::all(n) {
                let sorted = sort_bin(&b);
                assert_eq!(sorted.to_index(), sort_num(&b));
                assert_eq!(unsort_bin(&sorted), b);
            }
        }
    }

    #[test]
    fn gray_examples() {
        use GrayDirection::*;
        assert_eq!(gray_code(&bw("000"), Encode), bw("000"));
        assert_eq!(gray_code(&bw("011"), Encode), bw("010"));
        for n in 0..=12 {
            for b in BinaryWord::all(n) {
                assert_eq!(gray_code(&gray_code(&b, Encode), Decode), b);
            }
        }
    }

    #[test]
    fn word_text_round_trip() {
        assert_eq!(tw("0*1").to_string(), "0*1");
        assert_eq!(bw("0110").to_string(), "0110");
        assert!("012".parse::<BinaryWord>().is_err());
        assert!("0a".parse::<TernaryWord>().is_err());
    }

    #[test]
    fn face_application() {
        let face = tw("*0*");
        assert_eq!(face.apply(&bw("11")).unwrap(), bw("101"));
        assert!(face.contains(&bw("100")));
        assert!(!face.contains(&bw("110")));
        assert!(face.apply(&bw("1")).is_err());
        assert_eq!(TernaryWord::all_with_stars(2, 1).len(), 4);
        assert_eq!(TernaryWord::all_with_stars(3, 1).len(), 12);
    }
}
