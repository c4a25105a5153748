//! Weak orders on the symmetric group `S_n` and the hyperoctahedral group
//! `W_n`, with inversion sets as an independent comparison oracle.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::poset::{OrderOracle, Poset};

pub const MAX_RANK_A: usize = 7;
pub const MAX_RANK_B: usize = 5;

/// Position of the symbol `(j, i)`, `1 <= i < j`, in a triangular bit table.
fn pair_index(j: usize, i: usize) -> usize {
    debug_assert!(1 <= i && i < j);
    (j - 1) * (j - 2) / 2 + (i - 1)
}

/// A set of inversion symbols stored as a bit table.
pub trait InversionSet: Clone + Eq + fmt::Debug + Send + Sync {
    fn bits(&self) -> u64;

    fn is_subset(&self, other: &Self) -> bool {
        self.bits() & !other.bits() == 0
    }

    fn len(&self) -> usize {
        self.bits().count_ones() as usize
    }

    fn is_empty(&self) -> bool {
        self.bits() == 0
    }
}

/// Words whose weak order is generated by [`CoxeterWord::weak_covers`].
pub trait CoxeterWord:
    Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + FromStr<Err = Error> + Send + Sync
{
    type Inversions: InversionSet;

    fn rank(&self) -> usize;

    /// Upper covers in the right weak order.
    fn weak_covers(&self) -> Vec<Self>;

    fn inversions(&self) -> Self::Inversions;

    /// Erases the letter of largest absolute value.
    fn delete_largest(&self) -> Self;

    /// Whitespace-free label, letters joined by commas.
    fn label(&self) -> String;
}

fn parse_letters(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::InvalidWord(s.to_string())))
        .collect()
}

fn join<T: fmt::Display>(letters: &[T], sep: &str) -> String {
    letters.iter().join(sep)
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &letters {
            let l = l as usize;
            if l == 0 || l > n || std::mem::replace(&mut seen[l], true) {
                return Err(Error::InvalidWord(join(&letters, " ")));
            }
        }
        Ok(Word(letters))
    }

    pub fn identity(n: usize) -> Self {
        Word((1..=n as u8).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// `positions()[v]` is the index of letter `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.0.len() + 1];
        for (p, &l) in self.0.iter().enumerate() {
            pos[l as usize] = p;
        }
        pos
    }

    /// The classical Lehmer code indexed by value: entry `k - 2` counts the
    /// letters smaller than `k` standing right of `k`, for `k = 2..=n`.
    pub fn lehmer_code(&self) -> Vec<i64> {
        let pos = self.positions();
        (2..=self.0.len())
            .map(|k| (1..k).filter(|&i| pos[k] < pos[i]).count() as i64)
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0, " "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?
            .into_iter()
            .map(|l| u8::try_from(l).map_err(|_| Error::InvalidWord(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// Inversions `(j, i)`, `i < j`, of a type-A word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvSetA {
    n: usize,
    bits: u64,
}

impl InvSetA {
    pub fn contains(&self, j: usize, i: usize) -> bool {
        self.bits >> pair_index(j, i) & 1 == 1
    }

    /// Symbols `(j, i)` in increasing `(j, i)` order.
    pub fn symbols(&self) -> Vec<(usize, usize)> {
        (2..=self.n)
            .flat_map(|j| (1..j).map(move |i| (j, i)))
            .filter(|&(j, i)| self.contains(j, i))
            .collect()
    }
}

impl InversionSet for InvSetA {
    fn bits(&self) -> u64 {
        self.bits
    }
}

pub fn inv_a(w: &Word) -> InvSetA {
    let n = w.0.len();
    let pos = w.positions();
    let mut bits = 0u64;
    for j in 2..=n {
        for i in 1..j {
            if pos[j] < pos[i] {
                bits |= 1 << pair_index(j, i);
            }
        }
    }
    InvSetA { n, bits }
}

/// Words obtained by one adjacent swap `a b -> b a` with `a < b`.
pub fn covers_a(w: &Word) -> Vec<Word> {
    (0..w.0.len().saturating_sub(1))
        .filter(|&p| w.0[p] < w.0[p + 1])
        .map(|p| {
            let mut v = w.0.clone();
            v.swap(p, p + 1);
            Word(v)
        })
        .collect()
}

impl CoxeterWord for Word {
    type Inversions = InvSetA;

    fn rank(&self) -> usize {
        self.0.len()
    }

    fn weak_covers(&self) -> Vec<Self> {
        covers_a(self)
    }

    fn inversions(&self) -> InvSetA {
        inv_a(self)
    }

    fn delete_largest(&self) -> Self {
        let n = self.0.len() as u8;
        Word(self.0.iter().copied().filter(|&l| l != n).collect())
    }

    fn label(&self) -> String {
        join(&self.0, ",")
    }
}

/// A signed permutation: letters in `±1..=±n`, each absolute value once.
/// Letters compare in the signed order `-n < ... < -1 < 1 < ... < n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord(Vec<i8>);

impl SignedWord {
    pub fn new(letters: Vec<i8>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &letters {
            let a = l.unsigned_abs() as usize;
            if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidWord(join(&letters, " ")));
            }
        }
        Ok(SignedWord(letters))
    }

    pub fn identity(n: usize) -> Self {
        SignedWord((1..=n as i8).collect())
    }

    pub fn letters(&self) -> &[i8] {
        &self.0
    }

    /// Positions and signs indexed by absolute value; index 0 is unused.
    fn positions_and_signs(&self) -> (Vec<usize>, Vec<bool>) {
        let n = self.0.len();
        let mut pos = vec![usize::MAX; n + 1];
        let mut negative = vec![false; n + 1];
        for (p, &l) in self.0.iter().enumerate() {
            let a = l.unsigned_abs() as usize;
            pos[a] = p;
            negative[a] = l < 0;
        }
        (pos, negative)
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0, " "))
    }
}

impl FromStr for SignedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?
            .into_iter()
            .map(|l| i8::try_from(l).map_err(|_| Error::InvalidWord(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        SignedWord::new(letters)
    }
}

/// A type-B inversion symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolB {
    /// `(-i)`
    Neg(usize),
    /// `(j, i)` with `i` signed and `|i| < j`.
    Pair(usize, i64),
}

impl fmt::Display for SymbolB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolB::Neg(i) => write!(f, "(-{i})"),
            SymbolB::Pair(j, i) => write!(f, "({j},{i})"),
        }
    }
}

/// Type-B inversion set. The symbol `(-i)` is tracked for every `i` in `[n]`,
/// including `i = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvSetB {
    n: usize,
    bits: u64,
}

impl InvSetB {
    fn index(n: usize, symbol: SymbolB) -> usize {
        match symbol {
            SymbolB::Neg(i) => i - 1,
            SymbolB::Pair(j, i) => n + 2 * pair_index(j, i.unsigned_abs() as usize) + usize::from(i > 0),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn contains(&self, symbol: SymbolB) -> bool {
        self.bits >> Self::index(self.n, symbol) & 1 == 1
    }

    /// Every symbol of rank `n`: `(-i)` for `i` in `[n]`, then `(j,-i)` and
    /// `(j,i)` for `i < j`.
    pub fn all_symbols(n: usize) -> Vec<SymbolB> {
        let mut out: Vec<SymbolB> = (1..=n).map(SymbolB::Neg).collect();
        for j in 2..=n {
            for i in 1..j {
                out.push(SymbolB::Pair(j, -(i as i64)));
                out.push(SymbolB::Pair(j, i as i64));
            }
        }
        out
    }

    pub fn symbols(&self) -> Vec<SymbolB> {
        Self::all_symbols(self.n).into_iter().filter(|&s| self.contains(s)).collect()
    }
}

impl InversionSet for InvSetB {
    fn bits(&self) -> u64 {
        self.bits
    }
}

pub fn inv_b(w: &SignedWord) -> InvSetB {
    let n = w.0.len();
    let (pos, negative) = w.positions_and_signs();
    let mut bits = 0u64;
    let mut set = |s: SymbolB| bits |= 1 << InvSetB::index(n, s);
    for (i, &neg) in negative.iter().enumerate().skip(1) {
        if neg {
            set(SymbolB::Neg(i));
        }
    }
    for j in 2..=n {
        for i in 1..j {
            // (±i) ≺ (-j) puts both (j,-i) and (j,i) in.
            let i_before_neg_j = pos[i] < pos[j] && negative[j];
            if (pos[j] < pos[i] && negative[i]) || i_before_neg_j {
                set(SymbolB::Pair(j, -(i as i64)));
            }
            if (pos[j] < pos[i] && !negative[i]) || i_before_neg_j {
                set(SymbolB::Pair(j, i as i64));
            }
        }
    }
    InvSetB { n, bits }
}

/// Adjacent swaps `a b -> b a` with `a < b` in the signed order, plus the
/// flip of a positive first letter.
pub fn covers_b(w: &SignedWord) -> Vec<SignedWord> {
    let mut out: Vec<SignedWord> = (0..w.0.len().saturating_sub(1))
        .filter(|&p| w.0[p] < w.0[p + 1])
        .map(|p| {
            let mut v = w.0.clone();
            v.swap(p, p + 1);
            SignedWord(v)
        })
        .collect();
    if let Some(&first) = w.0.first() {
        if first > 0 {
            let mut v = w.0.clone();
            v[0] = -first;
            out.push(SignedWord(v));
        }
    }
    out
}

impl CoxeterWord for SignedWord {
    type Inversions = InvSetB;

    fn rank(&self) -> usize {
        self.0.len()
    }

    fn weak_covers(&self) -> Vec<Self> {
        covers_b(self)
    }

    fn inversions(&self) -> InvSetB {
        inv_b(self)
    }

    fn delete_largest(&self) -> Self {
        let n = self.0.len() as u8;
        SignedWord(self.0.iter().copied().filter(|l| l.unsigned_abs() != n).collect())
    }

    fn label(&self) -> String {
        join(&self.0, ",")
    }
}

/// All `n!` words in lexicographic order.
pub fn perms(n: usize) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::RankTooSmall { rank: n, min: 1 });
    }
    if n > MAX_RANK_A {
        return Err(Error::RankTooLarge { rank: n, max: MAX_RANK_A });
    }
    Ok((1..=n as u8).permutations(n).map(Word).collect())
}

/// All `2^n n!` signed words: permutations of the absolute values in
/// lexicographic order, each followed by its sign patterns (bit `p` of the
/// pattern negates position `p`). `n = 0` gives the empty word.
pub fn signed_perms(n: usize) -> Result<Vec<SignedWord>> {
    if n > MAX_RANK_B {
        return Err(Error::RankTooLarge { rank: n, max: MAX_RANK_B });
    }
    let mut out = Vec::with_capacity((1 << n) * (1..=n).product::<usize>());
    for p in (1..=n as i8).permutations(n) {
        for mask in 0u32..1 << n {
            let letters = p
                .iter()
                .enumerate()
                .map(|(k, &l)| if mask >> k & 1 == 1 { -l } else { l })
                .collect();
            out.push(SignedWord(letters));
        }
    }
    Ok(out)
}

/// `Inv(u) ⊆ Inv(v)`.
pub fn weak_leq_by_inversions<W: CoxeterWord>(u: &W, v: &W) -> Result<bool> {
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch { left: u.rank(), right: v.rank() });
    }
    Ok(u.inversions().is_subset(&v.inversions()))
}

/// Weak-order comparisons answered by inversion-set containment.
#[derive(Debug, Clone)]
pub struct InversionOracle<I>(Vec<I>);

impl<I: InversionSet> OrderOracle for InversionOracle<I> {
    fn leq(&self, x: usize, y: usize) -> bool {
        self.0[x].is_subset(&self.0[y])
    }
}

/// A weak order as a poset, together with its words.
#[derive(Debug, Clone)]
pub struct WeakOrder<W> {
    words: Vec<W>,
    index: HashMap<W, usize>,
    poset: Arc<Poset>,
}

impl<W: CoxeterWord> WeakOrder<W> {
    /// Builds the poset generated by the weak covers among `words`.
    pub fn from_words(words: Vec<W>) -> Result<Self> {
        let index: HashMap<W, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        if index.len() != words.len() {
            return Err(Error::SizeMismatch { expected: words.len(), found: index.len() });
        }
        let mut covers = Vec::new();
        for (i, w) in words.iter().enumerate() {
            for c in w.weak_covers() {
                let j = *index.get(&c).ok_or_else(|| Error::UnknownElement(c.to_string()))?;
                covers.push((i, j));
            }
        }
        let labels = words.iter().map(W::label).collect();
        let poset = Arc::new(Poset::from_relations(labels, covers)?);
        Ok(WeakOrder { words, index, poset })
    }

    pub fn words(&self) -> &[W] {
        &self.words
    }

    pub fn word(&self, x: usize) -> &W {
        &self.words[x]
    }

    pub fn index_of(&self, w: &W) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn inversion_sets(&self) -> Vec<W::Inversions> {
        self.words.iter().map(W::inversions).collect()
    }

    pub fn inversion_oracle(&self) -> InversionOracle<W::Inversions> {
        InversionOracle(self.inversion_sets())
    }
}

pub fn weak_poset_a(n: usize) -> Result<WeakOrder<Word>> {
    WeakOrder::from_words(perms(n)?)
}

pub fn weak_poset_b(n: usize) -> Result<WeakOrder<SignedWord>> {
    WeakOrder::from_words(signed_perms(n)?)
}

/// One word per line.
pub fn write_word_list<W: fmt::Display>(words: &[W]) -> String {
    words.iter().map(|w| format!("{w}\n")).collect()
}

pub fn parse_word_list<W: FromStr<Err = Error>>(text: &str) -> Result<Vec<W>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.parse::<W>().map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::new(s.chars().map(|c| c.to_digit(10).unwrap() as u8).collect()).unwrap()
    }

    fn sw(s: &str) -> SignedWord {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(perms(1).unwrap(), vec![w("1")]);
        assert_eq!(perms(3).unwrap().len(), 6);
        assert_eq!(perms(5).unwrap().len(), 120);
        assert!(perms(3).unwrap().windows(2).all(|p| p[0] < p[1]));
        assert!(matches!(perms(8), Err(Error::RankTooLarge { rank: 8, max: 7 })));
        assert_eq!(signed_perms(1).unwrap(), vec![sw("1"), sw("-1")]);
        assert_eq!(signed_perms(2).unwrap().len(), 8);
        assert_eq!(signed_perms(4).unwrap().len(), 384);
        assert_eq!(signed_perms(0).unwrap().len(), 1);
        assert!(matches!(signed_perms(6), Err(Error::RankTooLarge { .. })));
    }

    #[test]
    fn type_a_covers() {
        assert_eq!(covers_a(&w("123")), vec![w("213"), w("132")]);
        assert!(covers_a(&w("321")).is_empty());
        assert_eq!(covers_a(&w("2143")), vec![w("2413")]);
    }

    #[test]
    fn type_b_covers() {
        assert_eq!(covers_b(&sw("1 2")), vec![sw("2 1"), sw("-1 2")]);
        // (-1,-2) is the top of W_2: -1 > -2 and the first letter is negative.
        assert!(covers_b(&sw("-1 -2")).is_empty());
        assert_eq!(covers_b(&sw("-2 -1")), vec![sw("-1 -2")]);
        assert_eq!(covers_b(&sw("2 -1")), vec![sw("-2 -1")]);
    }

    #[test]
    fn small_weak_posets() {
        let a2 = weak_poset_a(2).unwrap();
        assert_eq!(a2.poset().covers(), &[(0, 1)]);
        let a3 = weak_poset_a(3).unwrap();
        assert_eq!((a3.len(), a3.poset().covers().len()), (6, 6));
        let b2 = weak_poset_b(2).unwrap();
        assert_eq!((b2.len(), b2.poset().covers().len()), (8, 8));
        // the octagon: every vertex has undirected degree 2
        let p = b2.poset();
        assert!((0..8).all(|x| p.upper_covers(x).len() + p.lower_covers(x).len() == 2));
    }

    #[test]
    fn leq_in_s3() {
        let a3 = weak_poset_a(3).unwrap();
        let (x, y) = (a3.index_of(&w("213")).unwrap(), a3.index_of(&w("132")).unwrap());
        assert!(!a3.poset().leq(x, y));
        assert!(!a3.poset().leq(y, x));
    }

    #[test]
    fn type_a_inversions() {
        assert!(inv_a(&w("123")).is_empty());
        assert_eq!(inv_a(&w("321")).symbols(), vec![(2, 1), (3, 1), (3, 2)]);
        assert_eq!(inv_a(&w("312")).symbols(), vec![(3, 1), (3, 2)]);
        assert!(weak_leq_by_inversions(&w("123"), &w("312")).unwrap());
        assert!(!weak_leq_by_inversions(&w("213"), &w("132")).unwrap());
        assert!(matches!(
            weak_leq_by_inversions(&w("12"), &w("123")),
            Err(Error::RankMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn type_b_inversions() {
        assert!(inv_b(&sw("1 2")).is_empty());
        assert_eq!(inv_b(&sw("-2 1")).symbols(), vec![SymbolB::Neg(2), SymbolB::Pair(2, 1)]);
        let top = inv_b(&sw("-1 -2"));
        assert_eq!(top.symbols(), InvSetB::all_symbols(2));
        assert_eq!(top.len(), 4);
        assert!(weak_leq_by_inversions(&sw("1 2"), &sw("-1 -2")).unwrap());
        assert_eq!(SymbolB::Pair(3, -1).to_string(), "(3,-1)");
        assert_eq!(SymbolB::Neg(3).to_string(), "(-3)");
    }

    #[test]
    fn lehmer_codes() {
        assert_eq!(w("231").lehmer_code(), vec![1, 1]);
        assert_eq!(w("312").lehmer_code(), vec![0, 2]);
        assert_eq!(w("123").lehmer_code(), vec![0, 0]);
    }

    #[test]
    fn word_parsing() {
        assert_eq!("-2 1 3".parse::<SignedWord>().unwrap().letters(), &[-2, 1, 3]);
        assert_eq!("-2,1,3".parse::<SignedWord>().unwrap().to_string(), "-2 1 3");
        assert!("1 1".parse::<Word>().is_err());
        assert!("1 -1".parse::<SignedWord>().is_err());
        assert!("0".parse::<Word>().is_err());
        assert!("1 3".parse::<Word>().is_err());
        let words = signed_perms(2).unwrap();
        let text = write_word_list(&words);
        assert_eq!(text.lines().next(), Some("1 2"));
        assert_eq!(parse_word_list::<SignedWord>(&text).unwrap(), words);
        assert!(matches!(parse_word_list::<Word>("1 2\n2 2\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn deletion_of_largest_letter() {
        assert_eq!(sw("2 -3 -1").delete_largest(), sw("2 -1"));
        assert_eq!(w("231").delete_largest(), w("21"));
    }
}
