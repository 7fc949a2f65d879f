//! Words, reading words and the bracketing crystal operators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitableau::{Bitableau, Pair};
use crate::crystal::{CrystalGraph, CrystalVertex};
use crate::error::{Error, Result};
use crate::partition::WeightVector;
use crate::tableau::{SkewSsyt, Ssyt};

/// A finite word over the positive integers.
///
/// The optional alphabet bound is metadata for range checks; equality and
/// ordering look at the letters only.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<u32>,
    #[serde(skip)]
    alphabet_bound: Option<u32>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.letters.cmp(&other.letters)
    }
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::OutOfRange {
                value: 0,
                bound: u32::MAX,
            });
        }
        Ok(Word {
            letters,
            alphabet_bound: None,
        })
    }

    pub fn with_bound(letters: Vec<u32>, bound: u32) -> Result<Self> {
        if let Some(&x) = letters.iter().find(|&&x| x == 0 || x > bound) {
            return Err(Error::OutOfRange { value: x, bound });
        }
        Ok(Word {
            letters,
            alphabet_bound: Some(bound),
        })
    }

    /// Parses a digit string such as `"34223111223"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .ok_or_else(|| Error::Json(format!("not a digit: {ch:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet_bound(&self) -> Option<u32> {
        self.alphabet_bound
    }

    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            alphabet_bound: self.alphabet_bound,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let bound = match (self.alphabet_bound, other.alphabet_bound) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        Word {
            letters,
            alphabet_bound: bound,
        }
    }

    fn from_trusted(letters: Vec<u32>, alphabet_bound: Option<u32>) -> Self {
        Word {
            letters,
            alphabet_bound,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.letters.iter().any(|&x| x > 9);
        for (i, x) in self.letters.iter().enumerate() {
            if wide && i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Which reading word to extract from a tableau or bitableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReadingMethod {
    /// Row reading of an ordinary tableau.
    Row,
    /// Bottom entries grouped by ascending top entry.
    W,
    /// Bottom entries grouped by descending top entry.
    WPrime,
    /// Top entries grouped by ascending bottom entry.
    U,
    /// Top entries grouped by descending bottom entry.
    UPrime,
}

impl std::str::FromStr for ReadingMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(ReadingMethod::Row),
            "w" => Ok(ReadingMethod::W),
            "w_prime" | "w'" => Ok(ReadingMethod::WPrime),
            "u" => Ok(ReadingMethod::U),
            "u_prime" | "u'" => Ok(ReadingMethod::UPrime),
            other => Err(Error::Unsupported(format!(
                "unknown reading method {other:?}"
            ))),
        }
    }
}

/// Raise (`e_i`, turns an `i+1` into an `i`) or lower (`f_i`, turns an `i`
/// into an `i+1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "e")]
    Raise,
    #[serde(rename = "f")]
    Lower,
}

/// Row reading word of a straight-shape tableau.
pub fn reading_word(t: &Ssyt) -> Word {
    Word::from_trusted(t.reading_word(), Some(t.max_entry()))
}

/// Row reading word of a skew tableau.
pub fn skew_reading_word(t: &SkewSsyt) -> Word {
    Word::from_trusted(t.reading_word(), None)
}

/// A reading word together with the cell each letter was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedWord {
    pub word: Word,
    pub cells: Vec<(usize, usize)>,
}

/// Reading word of a bitableau with its letter-to-cell back-map.
///
/// Within each group cells are read bottom row first, left to right.
pub fn tracked_reading_word(t: &Bitableau, method: ReadingMethod) -> Result<TrackedWord> {
    let (key, letter, bound): (fn(Pair) -> u32, fn(Pair) -> u32, u32) = match method {
        ReadingMethod::Row => {
            return Err(Error::Unsupported(
                "row reading is not defined for bitableaux".into(),
            ));
        }
        ReadingMethod::W | ReadingMethod::WPrime => (|p| p.top, |p| p.bottom, t.m()),
        ReadingMethod::U | ReadingMethod::UPrime => (|p| p.bottom, |p| p.top, t.n()),
    };
    let group_bound = match method {
        ReadingMethod::W | ReadingMethod::WPrime => t.n(),
        _ => t.m(),
    };
    let groups: Vec<u32> = match method {
        ReadingMethod::W | ReadingMethod::U => (1..=group_bound).collect(),
        _ => (1..=group_bound).rev().collect(),
    };
    let mut letters = Vec::with_capacity(t.shape().size());
    let mut cells = Vec::with_capacity(t.shape().size());
    for g in groups {
        for (r, row) in t.rows().iter().enumerate().rev() {
            for (c, &p) in row.iter().enumerate() {
                if key(p) == g {
                    letters.push(letter(p));
                    cells.push((r, c));
                }
            }
        }
    }
    Ok(TrackedWord {
        word: Word::from_trusted(letters, Some(bound)),
        cells,
    })
}

/// Grouped reading word `w`, `w'`, `u` or `u'` of a bitableau.
pub fn bitableau_reading_word(t: &Bitableau, method: ReadingMethod) -> Result<Word> {
    tracked_reading_word(t, method).map(|tw| tw.word)
}

/// Index of the letter that `e_i` / `f_i` changes, found by bracketing every
/// `i` as `)` and every `i+1` as `(`.
///
/// Lowering takes the rightmost unmatched `)`, raising the leftmost unmatched
/// `(`. `None` means the operator sends the word to zero.
pub fn crystal_position(letters: &[u32], i: u32, dir: Direction) -> Option<usize> {
    let mut open: Vec<usize> = Vec::new();
    let mut last_unmatched_close = None;
    for (pos, &x) in letters.iter().enumerate() {
        if x == i + 1 {
            open.push(pos);
        } else if x == i && open.pop().is_none() {
            last_unmatched_close = Some(pos);
        }
    }
    match dir {
        Direction::Lower => last_unmatched_close,
        Direction::Raise => open.first().copied(),
    }
}

/// `f_i` or `e_i` on a word; `None` is the zero element.
pub fn crystal_op_word(word: &Word, i: u32, dir: Direction) -> Option<Word> {
    assert!(i >= 1, "crystal operator index starts at 1");
    let pos = crystal_position(&word.letters, i, dir)?;
    let mut letters = word.letters.clone();
    letters[pos] = match dir {
        Direction::Lower => i + 1,
        Direction::Raise => i,
    };
    if let Some(b) = word.alphabet_bound {
        if letters[pos] > b {
            return None;
        }
    }
    Some(Word::from_trusted(letters, word.alphabet_bound))
}

/// Every suffix has at least as many `i`s as `i+1`s, for every `i`.
pub fn is_yamanouchi(word: &Word) -> bool {
    is_yamanouchi_letters(word.letters())
}

pub(crate) fn is_yamanouchi_letters(letters: &[u32]) -> bool {
    let max = letters.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max + 2];
    for &x in letters.iter().rev() {
        let x = x as usize;
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// Multiplicity vector of length `n`.
pub fn word_weight(word: &Word, n: usize) -> Result<WeightVector> {
    let mut w = vec![0; n];
    for &x in word.letters() {
        if x as usize > n {
            return Err(Error::OutOfRange {
                value: x,
                bound: n as u32,
            });
        }
        w[x as usize - 1] += 1;
    }
    Ok(WeightVector(w))
}

/// `f_i` / `e_i` on a straight-shape tableau through its row reading word.
pub fn crystal_op_tableau(t: &Ssyt, i: u32, dir: Direction) -> Option<Ssyt> {
    if i + 1 > t.max_entry() {
        return None;
    }
    let word = t.reading_word();
    let pos = crystal_position(&word, i, dir)?;
    let (r, c) = t.reading_cells()[pos];
    let value = match dir {
        Direction::Lower => i + 1,
        Direction::Raise => i,
    };
    Some(
        t.with_entry(r, c, value)
            .expect("tableau crystal operators preserve semistandardness"),
    )
}

impl CrystalVertex for Word {
    fn weight_a(&self) -> Option<WeightVector> {
        None
    }

    fn weight_b(&self) -> WeightVector {
        let n = self
            .alphabet_bound
            .unwrap_or_else(|| self.letters.iter().copied().max().unwrap_or(0));
        word_weight(self, n as usize).expect("letters within bound")
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

/// The connected component of `word` in the crystal on words over `[n]`.
pub fn word_crystal_component(word: &Word, n: u32) -> Result<CrystalGraph<Word>> {
    let start = Word::with_bound(word.letters.clone(), n)?;
    let ops = 1..n;
    Ok(CrystalGraph::component_from(
        start,
        ops,
        |w, i| crystal_op_word(w, i, Direction::Lower),
        |w, i| crystal_op_word(w, i, Direction::Raise),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    fn all_words(len: usize, n: u32) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (1..=n).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|l| Word::new(l).unwrap()).collect()
    }

    /// Suffix-count definition, written independently of the bracket scan.
    fn yamanouchi_by_suffix(word: &Word) -> bool {
        let l = word.letters();
        (0..=l.len()).all(|s| {
            let suffix = &l[s..];
            (1..=9).all(|i| {
                suffix.iter().filter(|&&x| x == i).count()
                    >= suffix.iter().filter(|&&x| x == i + 1).count()
            })
        })
    }

    #[test]
    fn tableau_reading_words() {
        let t = Ssyt::new(vec![vec![1, 1, 1, 2, 2, 3], vec![2, 2, 3], vec![3, 4]], 4).unwrap();
        assert_eq!(reading_word(&t), w("34223111223"));
        assert_eq!(
            reading_word(&Ssyt::from_rows(vec![vec![1, 2, 3]]).unwrap()),
            w("123")
        );
        assert_eq!(
            reading_word(&Ssyt::from_rows(vec![vec![1], vec![2], vec![3]]).unwrap()),
            w("321")
        );
    }

    #[test]
    fn bitableau_words_of_example() {
        let t = Bitableau::from_tuples(&[vec![(1, 2), (2, 1)], vec![(2, 2), (2, 2)], vec![(3, 1)]])
            .unwrap();
        assert_eq!(
            bitableau_reading_word(&t, ReadingMethod::W).unwrap(),
            w("22211")
        );
        assert_eq!(
            bitableau_reading_word(&t, ReadingMethod::WPrime).unwrap(),
            w("12212")
        );
        assert_eq!(
            bitableau_reading_word(&t, ReadingMethod::U).unwrap(),
            w("32221")
        );
        assert!(bitableau_reading_word(&t, ReadingMethod::Row).is_err());
    }

    #[test]
    fn section_4_4_word() {
        let t = Bitableau::from_tuples(&[
            vec![(1, 1), (1, 1), (1, 1), (1, 2), (2, 1), (3, 1), (3, 1)],
            vec![(1, 2), (2, 1), (2, 1), (2, 2), (3, 1), (3, 2)],
            vec![(2, 1), (2, 2), (3, 1), (3, 1), (3, 2)],
        ])
        .unwrap();
        let word = bitableau_reading_word(&t, ReadingMethod::W).unwrap();
        assert_eq!(word, w("211121211211121211"));
        assert_eq!(word.len(), 18);
        assert!(is_yamanouchi(&word));
    }

    #[test]
    fn bracket_operators() {
        assert_eq!(
            crystal_op_word(&w("34223111223"), 2, Direction::Lower),
            Some(w("34223111233"))
        );
        assert_eq!(crystal_op_word(&w("1"), 1, Direction::Raise), None);
        assert_eq!(crystal_op_word(&w("21"), 1, Direction::Lower), None);
        assert_eq!(
            crystal_op_word(&w("12"), 1, Direction::Raise),
            Some(w("11"))
        );
    }

    #[test]
    fn yamanouchi_examples() {
        assert!(is_yamanouchi(&w("111")));
        assert!(!is_yamanouchi(&w("22211")));
        assert!(is_yamanouchi(&w("")));
    }

    #[test]
    fn weights() {
        assert_eq!(
            word_weight(&w("34223111223"), 4).unwrap(),
            WeightVector(vec![3, 4, 3, 1])
        );
        assert_eq!(word_weight(&w(""), 2).unwrap(), WeightVector(vec![0, 0]));
        assert_eq!(
            word_weight(&w("22211"), 3).unwrap(),
            WeightVector(vec![2, 3, 0])
        );
        assert!(word_weight(&w("13"), 2).is_err());
    }

    #[test]
    fn partial_inverse_and_weight_laws() {
        for len in 0..=6 {
            for word in all_words(len, 4) {
                let wt = word_weight(&word, 5).unwrap().0;
                for i in 1..=4 {
                    if let Some(low) = crystal_op_word(&word, i, Direction::Lower) {
                        assert_eq!(
                            crystal_op_word(&low, i, Direction::Raise).as_ref(),
                            Some(&word)
                        );
                        let mut expect = wt.clone();
                        expect[i as usize - 1] -= 1;
                        expect[i as usize] += 1;
                        assert_eq!(word_weight(&low, 5).unwrap().0, expect);
                    }
                    if let Some(up) = crystal_op_word(&word, i, Direction::Raise) {
                        assert_eq!(
                            crystal_op_word(&up, i, Direction::Lower).as_ref(),
                            Some(&word)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn yamanouchi_iff_all_raises_vanish() {
        for len in 0..=6 {
            for word in all_words(len, 4) {
                let no_raise =
                    (1..=4).all(|i| crystal_op_word(&word, i, Direction::Raise).is_none());
                assert_eq!(is_yamanouchi(&word), no_raise, "{word}");
                assert_eq!(is_yamanouchi(&word), yamanouchi_by_suffix(&word), "{word}");
            }
        }
    }

    #[test]
    fn components() {
        let g = word_crystal_component(&w("1"), 2).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.edge_count(), 1);
        let g = word_crystal_component(&w("21"), 2).unwrap();
        assert_eq!(g.len(), 1);
        let g = word_crystal_component(&w("11"), 2).unwrap();
        let labels: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(labels, vec!["11", "12", "22"]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn tableau_operator_matches_example() {
        let t = Ssyt::new(vec![vec![1, 1, 1, 2, 2, 3], vec![2, 2, 3], vec![3, 4]], 4).unwrap();
        let f2 = crystal_op_tableau(&t, 2, Direction::Lower).unwrap();
        assert_eq!(
            f2.rows(),
            &[vec![1, 1, 1, 2, 3, 3], vec![2, 2, 3], vec![3, 4]]
        );
    }
}
