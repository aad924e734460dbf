//! Link patterns and their encodings.
//!
//! A [`Matching`] of size 2n is a non-crossing perfect matching of the points
//! 1..2n, written as a balanced parenthesis word. It is equivalently given by
//! its opening positions (a strict [`ASequence`] with `a_i ≤ 2i − 1`), by a
//! Dyck path, or by a [`YoungDiagram`] inside the staircase (n−1, …, 1).
//!
//! Positions are 1-based throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ENUMERATION_CAP;

/// A link pattern, stored as its parenthesis word (`true` = opening).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    word: Vec<bool>,
}

impl Matching {
    /// The empty matching (n = 0).
    pub fn empty() -> Self {
        Matching { word: Vec::new() }
    }

    /// Parses a word over `(` and `)`.
    ///
    /// The reported position is the first character that cannot belong to a
    /// valid matching: an unexpected character, a `)` closing nothing, or the
    /// leftmost `(` left open at the end.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Parse {
            input: text.to_string(),
            position,
            message: message.to_string(),
        };
        let mut word = Vec::with_capacity(text.len());
        let mut open_stack = Vec::new();
        for (k, ch) in text.chars().enumerate() {
            let pos = k + 1;
            match ch {
                '(' => {
                    open_stack.push(pos);
                    word.push(true);
                }
                ')' => {
                    if open_stack.pop().is_none() {
                        return Err(err(pos, "closing parenthesis without a matching opening"));
                    }
                    word.push(false);
                }
                _ => return Err(err(pos, "expected '(' or ')'")),
            }
        }
        if let Some(&pos) = open_stack.first() {
            return Err(err(pos, "opening parenthesis is never closed"));
        }
        Ok(Matching { word })
    }

    /// Builds a matching from a 0-based partner array (`partners[i] = j`
    /// iff i and j are joined). The pairing must be non-crossing.
    pub fn from_partners(partners: &[usize]) -> Self {
        let word = partners.iter().enumerate().map(|(i, &j)| j > i).collect();
        let m = Matching { word };
        debug_assert_eq!(m.partners(), partners, "crossing or invalid partner array");
        m
    }

    /// Reconstructs the matching whose openings are `a` (must be strict).
    pub fn from_openings(a: &ASequence) -> Result<Self> {
        if !a.is_strict() {
            return Err(Error::InvalidSequence(format!(
                "{a} is not strictly increasing"
            )));
        }
        let n = a.len();
        let mut word = vec![false; 2 * n];
        for &x in a.entries() {
            word[x - 1] = true;
        }
        Ok(Matching { word })
    }

    /// `()^r`: r consecutive little arches.
    pub fn unit_chain(r: usize) -> Self {
        Matching {
            word: (0..2 * r).map(|k| k % 2 == 0).collect(),
        }
    }

    /// `()_n`: n nested arches, the normalization point of the ground state.
    pub fn fully_nested(n: usize) -> Self {
        Matching::empty().nest(n)
    }

    /// `(π)_p`: the matching surrounded by p arches.
    pub fn nest(&self, p: usize) -> Self {
        let mut word = vec![true; p];
        word.extend_from_slice(&self.word);
        word.extend(std::iter::repeat_n(false, p));
        Matching { word }
    }

    /// Half-size n.
    pub fn n(&self) -> usize {
        self.word.len() / 2
    }

    /// Number of points, 2n.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Word as booleans, `true` for an opening.
    pub fn word(&self) -> &[bool] {
        &self.word
    }

    /// 0-based partner array.
    pub fn partners(&self) -> Vec<usize> {
        let mut partners = vec![0; self.word.len()];
        let mut stack = Vec::new();
        for (i, &open) in self.word.iter().enumerate() {
            if open {
                stack.push(i);
            } else {
                let j = stack.pop().expect("matching invariant: balanced word");
                partners[i] = j;
                partners[j] = i;
            }
        }
        partners
    }

    /// Arches as 1-based pairs `(opening, closing)`, ordered by opening.
    pub fn arches(&self) -> Vec<(usize, usize)> {
        self.partners()
            .iter()
            .enumerate()
            .filter(|(i, &j)| j > *i)
            .map(|(i, &j)| (i + 1, j + 1))
            .collect()
    }

    /// Opening positions π_1 < … < π_n.
    pub fn openings(&self) -> ASequence {
        let entries = self
            .word
            .iter()
            .enumerate()
            .filter(|(_, &o)| o)
            .map(|(i, _)| i + 1)
            .collect();
        ASequence {
            entries,
            strict: true,
        }
    }

    pub fn young(&self) -> YoungDiagram {
        self.openings()
            .young()
            .expect("openings of a matching are strict")
    }

    /// o_π: arches opening at an even position.
    pub fn even_openings(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .filter(|(i, &o)| o && (i + 1) % 2 == 0)
            .count()
    }

    /// Positions i (1-based) such that (i, i+1) is an arch.
    pub fn little_arches(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] && !w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Removes the little arch (i, i+1) and renumbers the remaining points.
    pub fn remove_little_arch(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.word.len() || !self.word[i - 1] || self.word[i] {
            return Err(Error::ContractViolation(format!(
                "({i},{}) is not a little arch of {self}",
                i + 1
            )));
        }
        let mut word = self.word.clone();
        word.drain(i - 1..=i);
        Ok(Matching { word })
    }

    /// Rotation by one site: arch {i, j} goes to {i+1, j+1} modulo 2n.
    pub fn rotate(&self) -> Self {
        let len = self.word.len();
        if len == 0 {
            return self.clone();
        }
        let p = self.partners();
        let mut q = vec![0; len];
        for i in 0..len {
            q[(i + 1) % len] = (p[i] + 1) % len;
        }
        Matching::from_partners(&q)
    }

    /// Whether the first p points are pairwise unconnected, i.e. the word
    /// starts with p openings.
    pub fn starts_with_openings(&self, p: usize) -> bool {
        p <= self.word.len() && self.word[..p].iter().all(|&o| o)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &o in &self.word {
            f.write_str(if o { "(" } else { ")" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({self})")
    }
}

impl FromStr for Matching {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Matching::parse(s)
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Matching::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// All matchings of size 2n, ordered lexicographically by opening sequence.
pub fn enumerate_matchings(n: usize) -> Result<Vec<Matching>> {
    if n > ENUMERATION_CAP {
        return Err(Error::ResourceCap {
            what: "n",
            value: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(strict_sequences(n)
        .into_iter()
        .map(|a| Matching::from_openings(&a).expect("generated sequences are strict"))
        .collect())
}

/// c_n = (2n)! / (n! (n+1)!).
pub fn catalan(n: usize) -> BigUint {
    // c_{k+1} = c_k · 2(2k+1)/(k+2)
    (0..n).fold(BigUint::one(), |c, k| {
        c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2)
    })
}

/// A weakly or strictly increasing sequence with `1 ≤ a_i ≤ 2i − 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ASequence {
    entries: Vec<usize>,
    strict: bool,
}

impl ASequence {
    /// A strictly increasing sequence; these index the a-basis and are in
    /// bijection with matchings.
    pub fn strict(entries: Vec<usize>) -> Result<Self> {
        Self::validate(&entries, true)?;
        Ok(ASequence {
            entries,
            strict: true,
        })
    }

    /// A weakly increasing sequence, as produced by the coefficient
    /// recursion.
    pub fn weak(entries: Vec<usize>) -> Result<Self> {
        Self::validate(&entries, false)?;
        let strict = entries.windows(2).all(|w| w[0] < w[1]);
        Ok(ASequence { entries, strict })
    }

    fn validate(entries: &[usize], strict: bool) -> Result<()> {
        for (k, &a) in entries.iter().enumerate() {
            let i = k + 1;
            if a < 1 || a > 2 * i - 1 {
                return Err(Error::InvalidSequence(format!(
                    "entry a_{i} = {a} is outside 1..={}",
                    2 * i - 1
                )));
            }
        }
        for (k, w) in entries.windows(2).enumerate() {
            if w[1] < w[0] || (strict && w[1] == w[0]) {
                return Err(Error::InvalidSequence(format!(
                    "entries a_{} = {} and a_{} = {} are out of order",
                    k + 1,
                    w[0],
                    k + 2,
                    w[1]
                )));
            }
        }
        Ok(())
    }

    /// Parses `"1,3,5"` as a strict sequence.
    pub fn parse_strict(text: &str) -> Result<Self> {
        Self::strict(parse_usize_list(text)?)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Componentwise order: `self ≤ other` iff `self_i ≤ other_i` for all i.
    pub fn le_componentwise(&self, other: &ASequence) -> bool {
        self.len() == other.len() && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Young diagram with rows λ_{n−i+1} = a_i − i.
    ///
    /// Only strict sequences give a partition; a repeated entry makes
    /// `a_i − i` decrease and is rejected.
    pub fn young(&self) -> Result<YoungDiagram> {
        let rows: Option<Vec<usize>> = self
            .entries
            .iter()
            .enumerate()
            .rev()
            .map(|(k, &a)| a.checked_sub(k + 1))
            .collect();
        let rows = rows.ok_or_else(|| {
            Error::InvalidSequence(format!("{self} has an entry a_i < i"))
        })?;
        YoungDiagram::from_rows(rows)
    }
}

impl fmt::Display for ASequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for ASequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ASequence{self}")
    }
}

/// All strict sequences of length n, in lexicographic order.
pub fn strict_sequences(n: usize) -> Vec<ASequence> {
    fn rec(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<ASequence>) {
        if i > n {
            out.push(ASequence {
                entries: cur.clone(),
                strict: true,
            });
            return;
        }
        let lo = cur.last().map_or(1, |&x| x + 1);
        for a in lo..=2 * i - 1 {
            cur.push(a);
            rec(i + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::with_capacity(n), &mut out);
    out
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let mut offset = 1;
    let mut out = Vec::new();
    for part in t.split(',') {
        let v = part.trim().parse::<usize>().map_err(|_| Error::Parse {
            input: text.to_string(),
            position: offset,
            message: format!("expected a non-negative integer, found {:?}", part.trim()),
        })?;
        out.push(v);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// A partition λ_1 ≥ λ_2 ≥ … stored without trailing zero rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Trailing zeros are dropped; rows must be weakly decreasing.
    pub fn from_rows(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::InvalidSequence(format!(
                "rows {rows:?} are not weakly decreasing"
            )));
        }
        Ok(YoungDiagram { rows })
    }

    /// Parses `"[2,2,1]"` (brackets optional).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(t);
        Self::from_rows(parse_usize_list(inner)?)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes |Y|.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Whether `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &YoungDiagram) -> bool {
        inner.rows.len() <= self.rows.len()
            && inner.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> YoungDiagram {
        let width = self.rows.first().copied().unwrap_or(0);
        YoungDiagram {
            rows: (0..width)
                .map(|j| self.rows.iter().filter(|&&r| r > j).count())
                .collect(),
        }
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn dim(&self) -> BigUint {
        let cols = self.transpose();
        let mut hooks = BigUint::one();
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = cols.rows[j] - i - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        let fact = (1..=self.size()).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        fact / hooks
    }

    /// Whether the diagram fits in the staircase (n−1, n−2, …, 1).
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(k, &r)| k + 1 < n && r <= n - (k + 1))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Young{self}")
    }
}

/// Free-function form of [`YoungDiagram::dim`].
pub fn dim_young(y: &YoungDiagram) -> BigUint {
    y.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> Matching {
        Matching::parse(s).unwrap()
    }

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::from_rows(rows.to_vec()).unwrap()
    }

    fn seq(a: &[usize]) -> ASequence {
        ASequence::strict(a.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(m("()").n(), 1);
        assert_eq!(m("()(()()((())))").n(), 7);
        assert_eq!(m("").n(), 0);
    }

    #[test]
    fn parse_errors_name_first_bad_position() {
        let pos = |s: &str| match Matching::parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(pos("())("), 3);
        assert_eq!(pos(")("), 1);
        assert_eq!(pos("(()"), 1);
        assert_eq!(pos("()(x)"), 4);
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        for (n, c) in [(0, 1u32), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132), (7, 429)] {
            assert_eq!(enumerate_matchings(n).unwrap().len() as u32, c);
            assert_eq!(catalan(n), BigUint::from(c));
        }
        assert_eq!(enumerate_matchings(0).unwrap(), vec![Matching::empty()]);
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            enumerate_matchings(ENUMERATION_CAP + 1),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn enumeration_order_is_lexicographic_on_openings() {
        let all = enumerate_matchings(4).unwrap();
        let opens: Vec<_> = all.iter().map(|x| x.openings().entries().to_vec()).collect();
        let mut sorted = opens.clone();
        sorted.sort();
        assert_eq!(opens, sorted);
        assert_eq!(all[0], Matching::fully_nested(4));
        assert_eq!(*all.last().unwrap(), Matching::unit_chain(4));
    }

    #[test]
    fn openings_examples() {
        assert_eq!(m("((()))").openings().entries(), &[1, 2, 3]);
        assert_eq!(m("()()()").openings().entries(), &[1, 3, 5]);
        assert_eq!(Matching::from_openings(&seq(&[1, 3, 5, 6, 7])).unwrap(), m("()()((()))"));
        assert_eq!(m("((()(())))").openings().entries(), &[1, 2, 3, 5, 6]);
    }

    #[test]
    fn young_examples() {
        assert_eq!(seq(&[1, 3, 5, 6, 7]).young().unwrap(), yd(&[2, 2, 2, 1]));
        assert_eq!(seq(&[1, 3, 5, 6, 7]).young().unwrap(), yd(&[2, 2, 2, 1, 0]));
        assert_eq!(m("((()(())))").young(), yd(&[1, 1, 0, 0, 0]));
        assert_eq!(seq(&[1, 2, 3, 4]).young().unwrap(), YoungDiagram::empty());
        assert!(ASequence::weak(vec![1, 1]).unwrap().young().is_err());
    }

    #[test]
    fn containment() {
        assert!(yd(&[2, 2, 2, 1]).contains(&yd(&[1, 1])));
        assert!(yd(&[2, 1]).contains(&yd(&[2, 1])));
        assert!(!yd(&[2, 2]).contains(&yd(&[3])));
        assert!(!yd(&[1]).contains(&yd(&[1, 1])));
    }

    #[test]
    fn nesting_and_chains() {
        assert_eq!(m("()()").nest(1), m("(()())"));
        assert_eq!(Matching::unit_chain(3), m("()()()"));
        assert_eq!(Matching::unit_chain(2).nest(2), m("((()()))"));
        assert_eq!(m("(())").nest(0), m("(())"));
        assert_eq!(Matching::fully_nested(3), m("((()))"));
    }

    #[test]
    fn even_opening_counts() {
        assert_eq!(m("()()").even_openings(), 0);
        assert_eq!(m("(())").even_openings(), 1);
        assert_eq!(m("((()))").even_openings(), 1);
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(m("()").rotate(), m("()"));
        assert_eq!(m("(())").rotate(), m("()()"));
        assert_eq!(m("()()").rotate(), m("(())"));
        assert_eq!(m("((()))").rotate(), m("()(())"));
    }

    #[test]
    fn rotation_has_period_2n() {
        for n in 0..=5 {
            for pi in enumerate_matchings(n).unwrap() {
                let mut x = pi.clone();
                for _ in 0..2 * n {
                    x = x.rotate();
                }
                assert_eq!(x, pi);
            }
        }
    }

    #[test]
    fn little_arch_removal() {
        let pi = m("(()())");
        assert_eq!(pi.little_arches(), vec![2, 4]);
        assert_eq!(pi.remove_little_arch(2).unwrap(), m("(())"));
        assert!(pi.remove_little_arch(1).is_err());
    }

    #[test]
    fn dim_examples() {
        assert_eq!(yd(&[1]).dim(), BigUint::from(1u32));
        assert_eq!(yd(&[2, 1]).dim(), BigUint::from(2u32));
        assert_eq!(yd(&[2, 2]).dim(), BigUint::from(2u32));
        assert_eq!(YoungDiagram::empty().dim(), BigUint::from(1u32));
        assert_eq!(yd(&[3, 2, 1]).dim(), BigUint::from(16u32));
    }

    /// Counts standard tableaux by removing the box holding the largest
    /// entry, which must be a corner.
    fn brute_force_syt(rows: &[usize]) -> u64 {
        if rows.iter().all(|&r| r == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..rows.len() {
            let corner = rows[i] > 0 && (i + 1 == rows.len() || rows[i + 1] < rows[i]);
            if corner {
                let mut smaller = rows.to_vec();
                smaller[i] -= 1;
                total += brute_force_syt(&smaller);
            }
        }
        total
    }

    fn partitions(total: usize, max: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(total)).rev() {
            for mut rest in partitions(total - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn hook_length_matches_brute_force_up_to_eight_boxes() {
        for size in 0..=8 {
            for rows in partitions(size, size) {
                let y = yd(&rows);
                assert_eq!(y.dim(), BigUint::from(brute_force_syt(&rows)), "{y}");
            }
        }
    }

    #[test]
    fn bijections_round_trip() {
        for n in 0..=6 {
            let all = enumerate_matchings(n).unwrap();
            let mut youngs = std::collections::HashSet::new();
            for pi in &all {
                let a = pi.openings();
                assert_eq!(&Matching::from_openings(&a).unwrap(), pi);
                assert_eq!(Matching::from_openings(&a).unwrap().openings(), a);
                let y = a.young().unwrap();
                assert!(y.fits_staircase(n.max(1)) || y.is_empty(), "{y} for n={n}");
                assert!(youngs.insert(y), "young_of not injective at n={n}");
            }
        }
    }

    #[test]
    fn componentwise_order_matches_containment() {
        for n in 0..=5 {
            let all = enumerate_matchings(n).unwrap();
            for x in &all {
                for y in &all {
                    assert_eq!(
                        x.openings().le_componentwise(&y.openings()),
                        y.young().contains(&x.young()),
                        "{x} vs {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn sequence_validation() {
        assert!(ASequence::strict(vec![1, 2, 6]).is_err());
        assert!(ASequence::strict(vec![1, 1]).is_err());
        assert!(ASequence::weak(vec![1, 1]).is_ok());
        assert!(ASequence::weak(vec![0]).is_err());
        assert!(ASequence::weak(vec![1, 3, 2]).is_err());
        assert_eq!(ASequence::parse_strict("1,3,5").unwrap().entries(), &[1, 3, 5]);
        assert!(ASequence::parse_strict("1,x").is_err());
    }

    #[test]
    fn young_parsing_and_display() {
        let y = YoungDiagram::parse("[2,2,1]").unwrap();
        assert_eq!(y.rows(), &[2, 2, 1]);
        assert_eq!(y.to_string(), "[2,2,1]");
        assert_eq!(YoungDiagram::parse("[]").unwrap(), YoungDiagram::empty());
        assert!(YoungDiagram::parse("[1,2]").is_err());
    }

    proptest! {
        #[test]
        fn parse_display_round_trip(idx in 0usize..132) {
            let all = enumerate_matchings(6).unwrap();
            let pi = &all[idx];
            prop_assert_eq!(&Matching::parse(&pi.to_string()).unwrap(), pi);
            prop_assert_eq!(&Matching::from_partners(&pi.partners()), pi);
        }
    }
}
