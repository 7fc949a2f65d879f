//! Row insertion, RSK, Burge insertion, dual insertion and jeu de taquin.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bitableau::Bitableau;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{check_semistandard, transpose, SkewSsyt, Ssyt};
use crate::word::Word;

/// Column ordering rule of a [`Biword`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum BiwordFlavor {
    /// Sorted by top, ties by bottom increasing; repeats allowed.
    #[default]
    Lexicographic,
    /// Sorted by top, ties by bottom strictly decreasing.
    Burge,
}

/// A two-line array, stored as two parallel rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBiword", into = "RawBiword")]
pub struct Biword {
    top: Vec<u32>,
    bottom: Vec<u32>,
    flavor: BiwordFlavor,
}

#[derive(Serialize, Deserialize)]
struct RawBiword {
    top: Vec<u32>,
    bottom: Vec<u32>,
    #[serde(default)]
    flavor: BiwordFlavor,
}

impl TryFrom<RawBiword> for Biword {
    type Error = Error;
    fn try_from(raw: RawBiword) -> Result<Self> {
        Biword::new(raw.top, raw.bottom, raw.flavor)
    }
}

impl From<Biword> for RawBiword {
    fn from(b: Biword) -> Self {
        RawBiword {
            top: b.top,
            bottom: b.bottom,
            flavor: b.flavor,
        }
    }
}

impl Biword {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>, flavor: BiwordFlavor) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidBiword(format!(
                "rows of length {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        if top.iter().chain(&bottom).any(|&x| x == 0) {
            return Err(Error::InvalidBiword("entries must be positive".into()));
        }
        for k in 1..top.len() {
            let (a, b) = ((top[k - 1], bottom[k - 1]), (top[k], bottom[k]));
            let ok = match flavor {
                BiwordFlavor::Lexicographic => a <= b,
                BiwordFlavor::Burge => a.0 < b.0 || (a.0 == b.0 && a.1 > b.1),
            };
            if !ok {
                return Err(Error::InvalidBiword(format!(
                    "columns {a:?}, {b:?} at position {k} break the {flavor:?} order"
                )));
            }
        }
        Ok(Biword {
            top,
            bottom,
            flavor,
        })
    }

    /// Sorts arbitrary columns into the given flavor's order.
    pub fn from_columns(mut columns: Vec<(u32, u32)>, flavor: BiwordFlavor) -> Result<Self> {
        match flavor {
            BiwordFlavor::Lexicographic => columns.sort(),
            BiwordFlavor::Burge => columns.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1))),
        }
        let (top, bottom) = columns.into_iter().unzip();
        Biword::new(top, bottom, flavor)
    }

    /// The entries of a bitableau as columns `(top, bottom)`.
    pub fn from_bitableau(t: &Bitableau, flavor: BiwordFlavor) -> Result<Self> {
        Biword::from_columns(t.entries().map(<(u32, u32)>::from).collect(), flavor)
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn flavor(&self) -> BiwordFlavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn columns(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    /// Exchanges the two rows and re-sorts lexicographically.
    pub fn swapped(&self) -> Biword {
        Biword::from_columns(
            self.columns().map(|(a, b)| (b, a)).collect(),
            BiwordFlavor::Lexicographic,
        )
        .expect("sorted columns are valid")
    }
}

/// An insertion tableau together with its recording tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauPair {
    #[serde(rename = "P")]
    pub insertion: Ssyt,
    #[serde(rename = "Q")]
    pub recording: Ssyt,
}

/// A filling with strictly increasing rows and weakly increasing columns,
/// the transpose of a semistandard tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RowStrictTableau {
    rows: Vec<Vec<u32>>,
}

impl RowStrictTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())
            .ok()
            .filter(|p| p.len() == rows.len())
            .ok_or_else(|| {
                Error::InvalidTableau(format!("rows {rows:?} do not form a partition shape"))
            })?;
        check_semistandard(&rows, |a, b| a < b, |a, b| a <= b).map_err(|(r, c)| {
            Error::InvalidTableau(format!("rows {rows:?} not row-strict at ({r},{c})"))
        })?;
        Ok(RowStrictTableau { rows })
    }

    pub fn empty() -> Self {
        RowStrictTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid shape")
    }

    /// The transpose, which is semistandard.
    pub fn transpose(&self) -> Ssyt {
        Ssyt::from_rows(transpose(&self.rows))
            .expect("transpose of a row-strict tableau is semistandard")
    }
}

fn max_or_one<'a>(xs: impl IntoIterator<Item = &'a u32>) -> u32 {
    xs.into_iter().copied().max().unwrap_or(1).max(1)
}

/// Bumps `x` into `rows` and returns the new cell. `bumps(y, x)` decides
/// whether entry `y` is displaced by `x`.
fn insert_raw(
    rows: &mut Vec<Vec<u32>>,
    mut x: u32,
    bumps: impl Fn(u32, u32) -> bool,
) -> (usize, usize) {
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![x]);
            return (r, 0);
        }
        match rows[r].iter().position(|&y| bumps(y, x)) {
            Some(c) => x = std::mem::replace(&mut rows[r][c], x),
            None => {
                rows[r].push(x);
                return (r, rows[r].len() - 1);
            }
        }
    }
    unreachable!()
}

/// Schensted row insertion of `x` into `t`; returns the new tableau and the
/// 0-based cell that was added.
pub fn row_insert(t: &Ssyt, x: u32) -> Result<(Ssyt, (usize, usize))> {
    if x == 0 {
        return Err(Error::OutOfRange {
            value: 0,
            bound: t.max_entry(),
        });
    }
    let mut rows = t.rows().to_vec();
    let cell = insert_raw(&mut rows, x, |y, x| y > x);
    Ok((Ssyt::from_trusted(rows, t.max_entry().max(x)), cell))
}

/// `P(w)`: insert the letters of `word` left to right into the empty tableau.
pub fn insertion_tableau(word: &Word) -> Ssyt {
    let mut rows = Vec::new();
    for &x in word.letters() {
        insert_raw(&mut rows, x, |y, x| y > x);
    }
    let bound = word
        .alphabet_bound()
        .unwrap_or_else(|| max_or_one(word.letters()));
    Ssyt::from_trusted(rows, bound)
}

/// RSK on a lexicographic biword: insert the bottom row, record the top row.
pub fn rsk(bw: &Biword) -> Result<TableauPair> {
    if bw.flavor() != BiwordFlavor::Lexicographic {
        return Err(Error::InvalidBiword(
            "rsk needs a lexicographic biword".into(),
        ));
    }
    let mut p = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (a, b) in bw.columns() {
        let (r, _) = insert_raw(&mut p, b, |y, x| y > x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(a);
    }
    Ok(TableauPair {
        insertion: Ssyt::from_trusted(p, max_or_one(bw.bottom())),
        recording: Ssyt::from_trusted(q, max_or_one(bw.top())),
    })
}

/// RSK of a bitableau of any shape, through its lexicographic biword.
pub fn rsk_bitableau(t: &Bitableau) -> TableauPair {
    let pair = rsk(&Biword::from_bitableau(t, BiwordFlavor::Lexicographic).expect("sorted"))
        .expect("lexicographic");
    TableauPair {
        insertion: pair
            .insertion
            .with_max_entry(t.m())
            .expect("bottoms are bounded by m"),
        recording: pair
            .recording
            .with_max_entry(t.n())
            .expect("tops are bounded by n"),
    }
}

/// Burge insertion: row-insert the bottoms, keep a row-strict recording
/// tableau of the tops, and return it transposed.
pub fn burge_insert(bw: &Biword) -> Result<TableauPair> {
    if bw.flavor() != BiwordFlavor::Burge {
        return Err(Error::InvalidBiword(
            "Burge insertion needs a Burge biword".into(),
        ));
    }
    let mut p = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (a, b) in bw.columns() {
        let (r, _) = insert_raw(&mut p, b, |y, x| y > x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(a);
    }
    let recording = RowStrictTableau::new(q)
        .map_err(|e| Error::InvalidBiword(format!("recording not row-strict: {e}")))?;
    Ok(TableauPair {
        insertion: Ssyt::from_trusted(p, max_or_one(bw.bottom())),
        recording: recording.transpose().with_max_entry(max_or_one(bw.top()))?,
    })
}

/// bRSK of a single-column bitableau.
pub fn brsk(t: &Bitableau) -> Result<TableauPair> {
    if t.shape().part(0) > 1 {
        return Err(Error::Unsupported(format!(
            "bRSK needs a column shape, got {}",
            t.shape()
        )));
    }
    let pair = burge_insert(&Biword::from_bitableau(t, BiwordFlavor::Burge)?)?;
    Ok(TableauPair {
        insertion: pair.insertion.with_max_entry(t.m())?,
        recording: pair.recording.with_max_entry(t.n())?,
    })
}

/// `P'(w)` of dual RSK: `x` displaces the leftmost entry `>= x`.
pub fn dual_rsk_insert(word: &Word) -> RowStrictTableau {
    let mut rows = Vec::new();
    for &x in word.letters() {
        insert_raw(&mut rows, x, |y, x| y >= x);
    }
    RowStrictTableau { rows }
}

/// Inner corners of a skew shape: cells of `inner` whose removal leaves a
/// partition.
pub fn inner_corners(t: &SkewSsyt) -> Vec<(usize, usize)> {
    let inner = t.inner();
    (0..inner.len())
        .filter(|&r| inner.part(r + 1) < inner.part(r))
        .map(|r| (r, inner.part(r) - 1))
        .collect()
}

/// One forward slide into the inner corner `corner`.
pub fn slide(t: &SkewSsyt, corner: (usize, usize)) -> Result<SkewSsyt> {
    if !inner_corners(t).contains(&corner) {
        return Err(Error::InvalidTableau(format!(
            "{corner:?} is not an inner corner"
        )));
    }
    let mut rows = t.rows().to_vec();
    let (mut r, mut c) = corner;
    loop {
        let below = rows
            .get(r + 1)
            .and_then(|row| row.get(c))
            .copied()
            .flatten();
        let right = rows[r].get(c + 1).copied().flatten();
        match (below, right) {
            (None, None) => break,
            (Some(b), Some(a)) if b <= a => {
                rows[r][c] = Some(b);
                r += 1;
            }
            (Some(b), None) => {
                rows[r][c] = Some(b);
                r += 1;
            }
            (_, Some(a)) => {
                rows[r][c] = Some(a);
                c += 1;
            }
        }
    }
    rows[r].pop();
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    let mut inner: Vec<usize> = t.inner().parts().to_vec();
    inner[corner.0] -= 1;
    let inner = Partition::new(inner).expect("removing a corner keeps a partition");
    let outer = Partition::new(rows.iter().map(Vec::len).collect())
        .expect("removing an outer corner keeps a partition");
    Ok(SkewSsyt::from_parts_unchecked(outer, inner, rows))
}

/// Rectification by jeu de taquin, always sliding into the topmost inner
/// corner.
pub fn rectify(t: &SkewSsyt) -> Ssyt {
    let mut cur = t.clone();
    while let Some(&corner) = inner_corners(&cur).first() {
        cur = slide(&cur, corner).expect("listed corner");
    }
    let bound = max_or_one(cur.rows().iter().flatten().flatten());
    cur.to_straight(bound)
        .expect("rectification is semistandard")
}

/// Every rectification reachable by some order of corner choices, as raw
/// rows. Exponential; meant for small confluence checks.
pub fn all_rectifications(t: &SkewSsyt) -> BTreeSet<Vec<Vec<u32>>> {
    fn go(
        t: &SkewSsyt,
        memo: &mut BTreeMap<Vec<Vec<Option<u32>>>, BTreeSet<Vec<Vec<u32>>>>,
    ) -> BTreeSet<Vec<Vec<u32>>> {
        if let Some(done) = memo.get(t.rows()) {
            return done.clone();
        }
        let corners = inner_corners(t);
        let out: BTreeSet<Vec<Vec<u32>>> = if corners.is_empty() {
            [t.rows()
                .iter()
                .map(|row| row.iter().map(|x| x.unwrap()).collect())
                .collect()]
            .into()
        } else {
            corners
                .into_iter()
                .flat_map(|c| go(&slide(t, c).expect("listed corner"), memo))
                .collect()
        };
        memo.insert(t.rows().to_vec(), out.clone());
        out
    }
    go(t, &mut BTreeMap::new())
}

/// The skew tableau with `left` placed southwest of `right`.
pub fn product_skew(left: &Ssyt, right: &Ssyt) -> SkewSsyt {
    let shift = left.shape().part(0);
    let mut rows: Vec<Vec<Option<u32>>> = right
        .rows()
        .iter()
        .map(|row| {
            std::iter::repeat_n(None, shift)
                .chain(row.iter().map(|&x| Some(x)))
                .collect()
        })
        .collect();
    rows.extend(
        left.rows()
            .iter()
            .map(|row| row.iter().map(|&x| Some(x)).collect::<Vec<_>>()),
    );
    let inner = Partition::new(vec![shift; right.shape().len()]).expect("rectangle");
    let outer = Partition::new(rows.iter().map(Vec::len).collect())
        .expect("southwest placement is a shape");
    SkewSsyt::new(outer, inner, rows).expect("southwest placement is semistandard")
}

/// Product of tableaux: rectify `left` placed southwest of `right`.
pub fn jdt_product(left: &Ssyt, right: &Ssyt) -> Ssyt {
    let bound = left.max_entry().max(right.max_entry());
    rectify(&product_skew(left, right))
        .with_max_entry(bound)
        .expect("entries are bounded")
}

/// Whether two words have the same insertion tableau.
pub fn knuth_equivalent(w1: &Word, w2: &Word) -> bool {
    insertion_tableau(w1).rows() == insertion_tableau(w2).rows()
}
