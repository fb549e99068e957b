//! Sequences, predicates and the finite universes they are enumerated from.
//!
//! Every law in this crate is checked by exhaustive enumeration, so the
//! types here are small and cheap to clone. A [`Universe`] fixes the
//! alphabet size `k` and maximal sequence length `L`; all enumerations are
//! deterministic (length first, then lexicographic), which is what makes a
//! "first counterexample" well defined.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, UniverseError};

/// Largest alphabet a [`Pred`] bitmask can describe.
pub const MAX_ALPHABET: usize = 64;

/// An alphabet symbol, identified by its index in `[0, k)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(pub u8);

impl Elem {
    pub fn id(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite sequence of alphabet symbols.
///
/// Displays and parses as a comma separated list of element ids; the empty
/// sequence is the empty string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Seq(Vec<Elem>);

impl Seq {
    pub fn new() -> Self {
        Seq(Vec::new())
    }

    pub fn from_ids(ids: &[u8]) -> Self {
        ids.iter().copied().map(Elem).collect()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn head(&self) -> Option<Elem> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Elem> {
        self.0.iter()
    }

    pub fn push(&mut self, e: Elem) {
        self.0.push(e);
    }

    /// `self ++ other`.
    pub fn concat(&self, other: &Seq) -> Seq {
        self.iter().chain(other.iter()).copied().collect()
    }

    /// Largest element id plus one, or zero for the empty sequence.
    pub(crate) fn span(&self) -> usize {
        self.iter().map(|e| e.id() + 1).max().unwrap_or(0)
    }
}

impl FromIterator<Elem> for Seq {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        Seq(iter.into_iter().collect())
    }
}

impl From<&[Elem]> for Seq {
    fn from(items: &[Elem]) -> Self {
        Seq(items.to_vec())
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for Seq {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Seq::new());
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u8>()
                    .map(Elem)
                    .map_err(|_| ParseError::Element(tok.to_string()))
            })
            .collect()
    }
}

impl From<Seq> for String {
    fn from(s: Seq) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Seq {
    type Error = ParseError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// A finite sequence of element pairs, the result type of zipping.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PairSeq(Vec<(Elem, Elem)>);

impl PairSeq {
    pub fn new() -> Self {
        PairSeq(Vec::new())
    }

    pub fn from_ids(pairs: &[(u8, u8)]) -> Self {
        pairs.iter().map(|&(a, b)| (Elem(a), Elem(b))).collect()
    }

    pub fn as_slice(&self) -> &[(Elem, Elem)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (Elem, Elem)> {
        self.0.iter()
    }

    pub fn fst(&self) -> Seq {
        self.iter().map(|p| p.0).collect()
    }

    pub fn snd(&self) -> Seq {
        self.iter().map(|p| p.1).collect()
    }
}

impl FromIterator<(Elem, Elem)> for PairSeq {
    fn from_iter<I: IntoIterator<Item = (Elem, Elem)>>(iter: I) -> Self {
        PairSeq(iter.into_iter().collect())
    }
}

impl fmt::Display for PairSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (a, b)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("]")
    }
}

/// A predicate on the alphabet, stored extensionally as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Pred(u64);

impl Pred {
    pub fn from_bits(bits: u64) -> Self {
        Pred(bits)
    }

    pub fn from_members(ids: &[u8]) -> Self {
        Pred(ids.iter().fold(0, |acc, &i| acc | (1u64 << i)))
    }

    pub fn empty() -> Self {
        Pred(0)
    }

    /// The predicate that holds for every symbol of an alphabet of size `k`.
    pub fn full(k: usize) -> Self {
        if k >= 64 {
            Pred(u64::MAX)
        } else {
            Pred((1u64 << k) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn holds(self, e: Elem) -> bool {
        e.0 < 64 && self.0 & (1u64 << e.0) != 0
    }

    pub fn and(self, other: Pred) -> Pred {
        Pred(self.0 & other.0)
    }

    pub fn or(self, other: Pred) -> Pred {
        Pred(self.0 | other.0)
    }
}

impl From<Pred> for String {
    fn from(p: Pred) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Pred {
    type Error = ParseError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl fmt::Display for Pred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0b{:b}", self.0)
    }
}

impl FromStr for Pred {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parsed = if let Some(bin) = s.strip_prefix("0b") {
            u64::from_str_radix(bin, 2)
        } else if let Some(hex) = s.strip_prefix("0x") {
            u64::from_str_radix(hex, 16)
        } else {
            s.parse()
        };
        parsed
            .map(Pred)
            .map_err(|_| ParseError::Pred(s.to_string()))
    }
}

/// `all p xs`: every element of `xs` satisfies `p`.
pub fn all_satisfy(p: Pred, xs: &Seq) -> bool {
    xs.iter().all(|&e| p.holds(e))
}

pub fn pred_and(p: Pred, q: Pred) -> Pred {
    p.and(q)
}

/// Enumeration bounds: alphabet `{0, .., k-1}` and sequences of length at most `L`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Universe {
    pub alphabet_size: usize,
    pub max_len: usize,
}

impl Universe {
    pub fn new(alphabet_size: usize, max_len: usize) -> Result<Self, UniverseError> {
        if alphabet_size == 0 {
            return Err(UniverseError::EmptyAlphabet);
        }
        if alphabet_size > MAX_ALPHABET {
            return Err(UniverseError::AlphabetTooLarge(alphabet_size));
        }
        Ok(Universe {
            alphabet_size,
            max_len,
        })
    }

    /// Smallest universe containing every element and length in `seqs`.
    pub fn covering<'a>(seqs: impl IntoIterator<Item = &'a Seq>) -> Self {
        let (k, l) = seqs
            .into_iter()
            .fold((1, 0), |(k, l), s| (k.max(s.span()), l.max(s.len())));
        Universe {
            alphabet_size: k,
            max_len: l,
        }
    }

    /// `Σ_{n=0..L} k^n`, saturating.
    pub fn seq_count(&self) -> u64 {
        words_up_to(self.alphabet_size as u64, self.max_len)
    }

    pub fn contains(&self, xs: &Seq) -> bool {
        xs.len() <= self.max_len && xs.iter().all(|e| e.id() < self.alphabet_size)
    }

    /// Every sequence of length at most `L`, shortest first and
    /// lexicographic within a length.
    pub fn seqs(&self) -> Seqs {
        Seqs::new(self.alphabet_size, self.max_len)
    }

    /// All `2^k` predicates by ascending bitmask.
    pub fn preds(&self) -> impl Iterator<Item = Pred> {
        let k = self.alphabet_size;
        let top = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
        (0..=top).map(Pred)
    }

    /// Every pair sequence of length at most `L`; pairs are ordered
    /// lexicographically, so `(a, b)` plays the role of symbol `a * k + b`.
    pub fn pair_seqs(&self) -> impl Iterator<Item = PairSeq> {
        let k = self.alphabet_size;
        Odometer::new(k * k, self.max_len).map(move |code| {
            code.into_iter()
                .map(|c| (Elem((c / k) as u8), Elem((c % k) as u8)))
                .collect()
        })
    }
}

/// A list of sequences: the split form produced by `words` and `lines`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SeqList(pub Vec<Seq>);

impl SeqList {
    pub fn as_slice(&self) -> &[Seq] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Size charged against `L`: each segment costs its length plus one slot.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|s| s.len() + 1).sum()
    }
}

impl fmt::Display for SeqList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{s}]")?;
        }
        f.write_str("]")
    }
}

impl Universe {
    /// Every list of sequences with [`SeqList::weight`] at most `L`.
    ///
    /// A list of weight `w` is encoded as a string of length `w` over the
    /// alphabet extended with a terminator symbol `k` closing each segment,
    /// so the order is weight first, then lexicographic on that encoding.
    pub fn seq_lists(&self) -> impl Iterator<Item = SeqList> {
        let k = self.alphabet_size;
        Odometer::new(k + 1, self.max_len)
            .filter(move |code| code.last().is_none_or(|&d| d == k))
            .map(move |code| {
                let mut segments = Vec::new();
                let mut current = Seq::new();
                for d in code {
                    if d == k {
                        segments.push(std::mem::take(&mut current));
                    } else {
                        current.push(Elem(d as u8));
                    }
                }
                SeqList(segments)
            })
    }
}

/// An element of the product carrier `ℕ × Seq` used by the take connection.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bounded {
    pub n: usize,
    pub seq: Seq,
}

impl Bounded {
    pub fn new(n: usize, seq: Seq) -> Self {
        Bounded { n, seq }
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [{}])", self.n, self.seq)
    }
}

/// A pair of sequences: the uncurried argument of zip.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SeqPair(pub Seq, pub Seq);

impl fmt::Display for SeqPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}], [{}])", self.0, self.1)
    }
}

impl Universe {
    /// `(n, xs)` for `n` in `0..=L+1`, `n`-major. The extra bound `L + 1`
    /// exceeds every sequence length in the universe.
    pub fn bounded(&self) -> impl Iterator<Item = Bounded> {
        let seqs: Vec<Seq> = self.seqs().collect();
        (0..=self.max_len + 1)
            .flat_map(move |n| seqs.clone().into_iter().map(move |s| Bounded::new(n, s)))
    }

    /// All pairs of universe sequences, first component major.
    pub fn seq_pairs(&self) -> impl Iterator<Item = SeqPair> {
        let seqs: Vec<Seq> = self.seqs().collect();
        let outer = seqs.clone();
        outer
            .into_iter()
            .flat_map(move |a| seqs.clone().into_iter().map(move |b| SeqPair(a.clone(), b)))
    }
}

pub fn enum_seqs(u: &Universe) -> Seqs {
    u.seqs()
}

pub fn enum_preds(u: &Universe) -> impl Iterator<Item = Pred> {
    u.preds()
}

fn words_up_to(k: u64, max_len: usize) -> u64 {
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(k);
    }
    total
}

/// Length-then-lexicographic enumeration of digit strings over `0..k`.
#[derive(Clone, Debug)]
struct Odometer {
    k: usize,
    max_len: usize,
    current: Option<Vec<usize>>,
}

impl Odometer {
    fn new(k: usize, max_len: usize) -> Self {
        Odometer {
            k,
            max_len,
            current: Some(Vec::new()),
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let digits = self.current.as_mut()?;
        let mut carried = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < self.k {
                carried = false;
                break;
            }
            *d = 0;
        }
        if carried {
            // every digit rolled over: move on to the next length
            if digits.len() < self.max_len {
                digits.push(0);
            } else {
                self.current = None;
            }
        }
        Some(out)
    }
}

/// Iterator over all sequences of a universe in length-then-lexicographic order.
#[derive(Clone, Debug)]
pub struct Seqs(Odometer);

impl Seqs {
    fn new(k: usize, max_len: usize) -> Self {
        Seqs(Odometer::new(k, max_len))
    }
}

impl Iterator for Seqs {
    type Item = Seq;

    fn next(&mut self) -> Option<Seq> {
        self.0
            .next()
            .map(|digits| digits.into_iter().map(|d| Elem(d as u8)).collect())
    }
}
