//! Candidate top (`gl_n`) crystal structures on bitableaux that commute
//! with the bottom `gl_m` crystal.
//!
//! Three sources of top operators live here:
//!
//! * transport through RSK (rows, via `u(T)`) and bRSK (columns, via
//!   `u'(T)`), where the answer is known;
//! * an exhaustive search for `n = m = 2`, which finds every rank-one top
//!   structure compatible with the bottom crystal and reports the part all
//!   of them share;
//! * fixed reading orders of the top entries on shape `(2,1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitableau::{enumerate_bitableaux, Bitableau, Pair};
use crate::crystal::{CrystalGraph, CrystalVertex};
use crate::error::{Error, Result};
use crate::glm_crystal::{full_crystal, is_highest_weight, Convention};
use crate::insertion::{brsk, rsk_bitableau};
use crate::partition::{enumerate_partitions, Partition, WeightVector};
use crate::symfunc::kronecker_coefficient;
use crate::word::{
    crystal_op_tableau, crystal_position, tracked_reading_word, Direction, ReadingMethod,
};

/// A partial injection on the vertex ids of a graph, standing for the top
/// lowering operator `f_index`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PartialOperator {
    pub index: u32,
    pub images: BTreeMap<usize, usize>,
}

impl PartialOperator {
    pub fn new(index: u32) -> Self {
        PartialOperator {
            index,
            images: BTreeMap::new(),
        }
    }

    pub fn apply(&self, v: usize) -> Option<usize> {
        self.images.get(&v).copied()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.images.iter().map(|(&a, &b)| (a, b)).collect()
    }

    pub fn preimages(&self) -> BTreeMap<usize, usize> {
        self.images.iter().map(|(&a, &b)| (b, a)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub reason: String,
}

/// Validity certificate for a rank-one structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeminormalReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

fn violation(vertex: usize, reason: String) -> Violation {
    Violation { vertex, reason }
}

/// Checks that `f` is a disjoint union of `gl_2` strings: each edge moves
/// one unit of `a`-weight from `index` to `index + 1`, the functional graph
/// is a union of paths, and on every path `phi(v) - eps(v) = a_i - a_{i+1}`.
pub fn is_valid_gl2_structure(f: &PartialOperator, a_weights: &[WeightVector]) -> SeminormalReport {
    let mut violations = Vec::new();
    let i = f.index as usize;
    let n_vertices = a_weights.len();
    let mut pred: BTreeMap<usize, usize> = BTreeMap::new();
    for (&from, &to) in &f.images {
        if from >= n_vertices || to >= n_vertices {
            violations.push(violation(
                from,
                format!("edge {from} -> {to} leaves the vertex set"),
            ));
            continue;
        }
        let (wa, wb) = (&a_weights[from], &a_weights[to]);
        let ok = i >= 1
            && i < wa.dim()
            && wa.dim() == wb.dim()
            && (0..wa.dim()).all(|k| {
                let shift = if k == i - 1 {
                    -1
                } else if k == i {
                    1
                } else {
                    0
                };
                wb.0[k] as i64 == wa.0[k] as i64 + shift
            });
        if !ok {
            violations.push(violation(
                from,
                format!("edge {from} -> {to} takes weight {wa} to {wb}"),
            ));
        }
        if let Some(other) = pred.insert(to, from) {
            violations.push(violation(to, format!("two preimages {other} and {from}")));
        }
    }
    if !violations.is_empty() {
        return SeminormalReport {
            valid: false,
            violations,
        };
    }
    let mut seen = vec![false; n_vertices];
    for start in 0..n_vertices {
        if pred.contains_key(&start) {
            continue;
        }
        let mut path = vec![start];
        while let Some(next) = f.apply(*path.last().unwrap()) {
            path.push(next);
        }
        let len = path.len();
        for (eps, &v) in path.iter().enumerate() {
            seen[v] = true;
            let phi = len - 1 - eps;
            let w = &a_weights[v];
            let expected = w.0[i - 1] as i64 - w.0[i] as i64;
            if phi as i64 - eps as i64 != expected {
                violations.push(violation(
                    v,
                    format!("string position (eps {eps}, phi {phi}) against weight {w}"),
                ));
            }
        }
    }
    for (v, &s) in seen.iter().enumerate() {
        if !s {
            violations.push(violation(v, "lies on a cycle".into()));
        }
    }
    SeminormalReport {
        valid: violations.is_empty(),
        violations,
    }
}

/// A place where a top operator and a bottom operator fail to commute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutationFailure {
    pub vertex: usize,
    pub top_index: u32,
    pub bottom_index: u32,
    pub bottom_direction: char,
    /// `f_top(bottom(v))`.
    pub top_after_bottom: Option<usize>,
    /// `bottom(f_top(v))`.
    pub bottom_after_top: Option<usize>,
}

/// First failure of `f_top` to commute with some `f_i` or `e_i` of `g`,
/// where a composite that is undefined must be undefined on both sides.
pub fn commutes_with_bottom<V: CrystalVertex>(
    f_top: &PartialOperator,
    g: &CrystalGraph<V>,
) -> Option<CommutationFailure> {
    let indices = g.operator_indices();
    for v in 0..g.len() {
        for &i in &indices {
            for (dir, op) in [
                (
                    'f',
                    CrystalGraph::f as fn(&CrystalGraph<V>, usize, u32) -> Option<usize>,
                ),
                ('e', CrystalGraph::e),
            ] {
                let left = op(g, v, i).and_then(|x| f_top.apply(x));
                let right = f_top.apply(v).and_then(|x| op(g, x, i));
                if left != right {
                    return Some(CommutationFailure {
                        vertex: v,
                        top_index: f_top.index,
                        bottom_index: i,
                        bottom_direction: dir,
                        top_after_bottom: left,
                        bottom_after_top: right,
                    });
                }
            }
        }
    }
    None
}

/// Turns an operator on bitableaux into partial operators on the ids of `g`,
/// one per index in `1..n`. Images outside the vertex set are an error.
pub fn operators_from_fn(
    g: &CrystalGraph<Bitableau>,
    n: u32,
    op: impl Fn(&Bitableau, u32) -> Result<Option<Bitableau>>,
) -> Result<Vec<PartialOperator>> {
    let mut out = Vec::new();
    for i in 1..n {
        let mut f = PartialOperator::new(i);
        for (id, t) in g.vertices().iter().enumerate() {
            if let Some(image) = op(t, i)? {
                let to = g.id(&image).ok_or_else(|| {
                    Error::Unsupported(format!("f_{i}({t}) = {image} is outside the vertex set"))
                })?;
                f.images.insert(id, to);
            }
        }
        out.push(f);
    }
    Ok(out)
}

/// Vertices with no incoming edge under any top or bottom operator,
/// counted by `(a, b)` weight.
pub fn highest_weight_census(
    bottom: &CrystalGraph<Bitableau>,
    top: &[PartialOperator],
) -> BTreeMap<(WeightVector, WeightVector), u64> {
    let mut has_top_pred = vec![false; bottom.len()];
    for f in top {
        for &to in f.images.values() {
            has_top_pred[to] = true;
        }
    }
    let mut census = BTreeMap::new();
    for id in bottom.highest_weight_ids() {
        if !has_top_pred[id] {
            let t = bottom.vertex(id);
            *census.entry((t.a_weight(), t.b_weight())).or_insert(0) += 1;
        }
    }
    census
}

/// Weight pairs where a census differs from `g(lam, mu, nu)`; `mu` and `nu`
/// range over partitions with at most `n` and `m` parts.
pub fn census_mismatches(
    lam: &Partition,
    n: usize,
    m: usize,
    census: &BTreeMap<(WeightVector, WeightVector), u64>,
) -> Result<Vec<(WeightVector, WeightVector, u64, u64)>> {
    let k = lam.size();
    let mut out = Vec::new();
    let mut expected_keys = BTreeSet::new();
    for mu in enumerate_partitions(k, Some(n)) {
        for nu in enumerate_partitions(k, Some(m)) {
            let key = (mu.to_weight(n).unwrap(), nu.to_weight(m).unwrap());
            let g = kronecker_coefficient(lam, &mu, &nu)?;
            let got = census.get(&key).copied().unwrap_or(0);
            if got != g {
                out.push((key.0.clone(), key.1.clone(), got, g));
            }
            expected_keys.insert(key);
        }
    }
    for (key, &got) in census {
        if !expected_keys.contains(key) {
            out.push((key.0.clone(), key.1.clone(), got, 0));
        }
    }
    Ok(out)
}

fn rebuild_sorted(t: &Bitableau, mut pairs: Vec<Pair>, column: bool) -> Result<Bitableau> {
    pairs.sort();
    let rows = if column {
        pairs.into_iter().map(|p| vec![p]).collect()
    } else {
        vec![pairs]
    };
    Bitableau::new(rows, t.n(), t.m())
}

fn top_op_via(
    t: &Bitableau,
    i: u32,
    dir: Direction,
    method: ReadingMethod,
    column: bool,
) -> Result<Option<Bitableau>> {
    if i == 0 || i >= t.n() {
        return Ok(None);
    }
    let tw = tracked_reading_word(t, method)?;
    let Some(pos) = crystal_position(tw.word.letters(), i, dir) else {
        return Ok(None);
    };
    let (r, c) = tw.cells[pos];
    let old = t.get(r, c).unwrap();
    let top = if dir == Direction::Lower { i + 1 } else { i };
    let mut pairs: Vec<Pair> = t.entries().collect();
    pairs[if column { r } else { c }] = Pair::new(top, old.bottom);
    rebuild_sorted(t, pairs, column).map(Some)
}

/// Top operator on a one-row bitableau through `u(T)`; the row is re-sorted
/// afterwards.
pub fn top_op_row(t: &Bitableau, i: u32, dir: Direction) -> Result<Option<Bitableau>> {
    if t.shape().len() > 1 {
        return Err(Error::Unsupported(format!(
            "row operator on shape {}",
            t.shape()
        )));
    }
    top_op_via(t, i, dir, ReadingMethod::U, false)
}

/// Top operator on a one-column bitableau through `u'(T)`; the column is
/// re-sorted and a repeated entry is an error.
pub fn top_op_column(t: &Bitableau, i: u32, dir: Direction) -> Result<Option<Bitableau>> {
    if t.shape().part(0) > 1 {
        return Err(Error::Unsupported(format!(
            "column operator on shape {}",
            t.shape()
        )));
    }
    top_op_via(t, i, dir, ReadingMethod::UPrime, true)
}

/// Outcome of checking a transported top structure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub vertices: usize,
    pub top_edges: usize,
    pub failures: Vec<String>,
}

/// Checks the row (`column = false`, via RSK) or column (via bRSK) top
/// structure on shape `(r)` or `(1^r)` over `[n] x [m]`: validity of every
/// string, commutation with the bottom crystal, and compatibility with the
/// insertion map on the recording tableau.
pub fn verify_transport(r: usize, n: u32, m: u32, column: bool) -> Result<TransportReport> {
    let shape = if column {
        Partition::column(r)
    } else {
        Partition::row(r)
    };
    let g = full_crystal(&shape, n, m, Convention::W, usize::MAX)?;
    let op = |t: &Bitableau, i, dir| {
        if column {
            top_op_column(t, i, dir)
        } else {
            top_op_row(t, i, dir)
        }
    };
    let tops = operators_from_fn(&g, n, |t, i| op(t, i, Direction::Lower))?;
    let a_weights: Vec<WeightVector> = g.vertices().iter().map(Bitableau::a_weight).collect();
    let mut report = TransportReport {
        vertices: g.len(),
        ..Default::default()
    };
    for f in &tops {
        report.top_edges += f.images.len();
        let check = is_valid_gl2_structure(f, &a_weights);
        for v in check.violations {
            report.failures.push(format!(
                "f_{}: vertex {}: {}",
                f.index,
                g.vertex(v.vertex),
                v.reason
            ));
        }
        if let Some(fail) = commutes_with_bottom(f, &g) {
            report.failures.push(format!(
                "f_{} does not commute with the bottom crystal: {fail:?}",
                f.index
            ));
        }
        for (from, to) in f.edges() {
            if op(g.vertex(to), f.index, Direction::Raise)?.as_ref() != Some(g.vertex(from)) {
                report.failures.push(format!(
                    "e_{0} does not undo f_{0} at {1}",
                    f.index,
                    g.vertex(from)
                ));
            }
        }
    }
    let insert = |t: &Bitableau| {
        if column {
            brsk(t)
        } else {
            Ok(rsk_bitableau(t))
        }
    };
    for t in g.vertices() {
        let pair = insert(t)?;
        for i in 1..n {
            for dir in [Direction::Lower, Direction::Raise] {
                let moved = op(t, i, dir)?;
                let expected = crystal_op_tableau(&pair.recording, i, dir);
                let got = moved.as_ref().map(insert).transpose()?;
                let ok = match (&got, &expected) {
                    (None, None) => true,
                    (Some(p), Some(q)) => p.insertion == pair.insertion && &p.recording == q,
                    _ => false,
                };
                if !ok {
                    report.failures.push(format!(
                        "{dir:?} {i} at {t}: insertion pair is not moved on Q alone"
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Result of the exhaustive `n = m = 2` search.
#[derive(Debug, Clone)]
pub struct CompletionSearch {
    pub shape: Partition,
    pub bottom: CrystalGraph<Bitableau>,
    /// Every valid top operator `f_1`, sorted by edge list.
    pub completions: Vec<PartialOperator>,
}

/// String position of every vertex under one top operator.
fn signatures(f: &PartialOperator, len: usize) -> Vec<(usize, usize)> {
    let pred = f.preimages();
    let mut out = vec![(0, 0); len];
    for start in (0..len).filter(|v| !pred.contains_key(v)) {
        let mut path = vec![start];
        while let Some(next) = f.apply(*path.last().unwrap()) {
            path.push(next);
        }
        for (eps, &v) in path.iter().enumerate() {
            out[v] = (eps, path.len() - 1 - eps);
        }
    }
    out
}

/// Every top operator `f_1` on `B_lam(2, 2)` that forms valid `gl_2`
/// strings and commutes with the bottom crystal.
///
/// Such an operator sends bottom-highest-weight vertices to
/// bottom-highest-weight vertices and is determined by what it does there,
/// so the search assigns images on that subset (largest `a_1` first,
/// tracking string positions) and then extends along bottom strings. Each
/// candidate is re-verified in full.
pub fn enumerate_completions(lam: &Partition, cap: usize) -> Result<CompletionSearch> {
    let bottom = full_crystal(lam, 2, 2, Convention::W, cap)?;
    let hw = bottom.highest_weight_ids();
    let weight = |v: usize| bottom.vertex(v).weights();
    let mut order = hw.clone();
    order.sort_by_key(|&v| (std::cmp::Reverse(weight(v).0 .0[0]), v));

    let mut partials = Vec::new();
    let mut assign: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    let mut eps: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pred: BTreeMap<usize, usize> = BTreeMap::new();
    search_hw(
        &order,
        0,
        &weight,
        &mut assign,
        &mut eps,
        &mut pred,
        &mut partials,
    );

    let a_weights: Vec<WeightVector> = bottom.vertices().iter().map(Bitableau::a_weight).collect();
    let mut completions = BTreeSet::new();
    for partial in partials {
        let Some(f) = extend_along_bottom(&bottom, &partial) else {
            continue;
        };
        if is_valid_gl2_structure(&f, &a_weights).valid
            && commutes_with_bottom(&f, &bottom).is_none()
        {
            completions.insert(f);
        }
    }
    if completions.is_empty() {
        return Err(Error::NoCompletion(lam.parts().to_vec()));
    }
    Ok(CompletionSearch {
        shape: lam.clone(),
        bottom,
        completions: completions.into_iter().collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn search_hw(
    order: &[usize],
    idx: usize,
    weight: &dyn Fn(usize) -> (WeightVector, WeightVector),
    assign: &mut BTreeMap<usize, Option<usize>>,
    eps: &mut BTreeMap<usize, usize>,
    pred: &mut BTreeMap<usize, usize>,
    out: &mut Vec<BTreeMap<usize, Option<usize>>>,
) {
    if idx == order.len() {
        out.push(assign.clone());
        return;
    }
    let v = order[idx];
    let (a, b) = weight(v);
    let e = pred.get(&v).map_or(0, |u| eps[u] + 1);
    let phi = a.0[0] as i64 - a.0[1] as i64 + e as i64;
    if phi < 0 {
        return;
    }
    eps.insert(v, e);
    if phi == 0 {
        assign.insert(v, None);
        search_hw(order, idx + 1, weight, assign, eps, pred, out);
    } else {
        let target_a = WeightVector(vec![a.0[0] - 1, a.0[1] + 1]);
        for &w in order {
            if pred.contains_key(&w) || weight(w) != (target_a.clone(), b.clone()) {
                continue;
            }
            assign.insert(v, Some(w));
            pred.insert(w, v);
            search_hw(order, idx + 1, weight, assign, eps, pred, out);
            pred.remove(&w);
        }
    }
    assign.remove(&v);
    eps.remove(&v);
}

/// Extends `f(f_1^k v) = f_1^k f(v)` from highest-weight vertices; `None`
/// if two matched strings have different lengths.
fn extend_along_bottom(
    g: &CrystalGraph<Bitableau>,
    partial: &BTreeMap<usize, Option<usize>>,
) -> Option<PartialOperator> {
    let mut f = PartialOperator::new(1);
    for (&v, &w) in partial {
        let Some(w) = w else { continue };
        let (mut x, mut y) = (Some(v), Some(w));
        while let (Some(xv), Some(yv)) = (x, y) {
            f.images.insert(xv, yv);
            x = g.f(xv, 1);
            y = g.f(yv, 1);
        }
        if x.is_some() != y.is_some() {
            return None;
        }
    }
    Some(f)
}

/// What every completion agrees on.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub search: CompletionSearch,
    /// Top edges present in every completion.
    pub forced: PartialOperator,
    /// Vertices whose string position is the same in every completion.
    pub placed: Vec<usize>,
    /// The remaining vertices by `(a, b)` weight.
    pub free_slots: BTreeMap<(WeightVector, WeightVector), Vec<usize>>,
}

pub fn skeleton(lam: &Partition, cap: usize) -> Result<Skeleton> {
    let search = enumerate_completions(lam, cap)?;
    let len = search.bottom.len();
    let mut forced = search.completions[0].clone();
    for c in &search.completions[1..] {
        forced.images.retain(|k, v| c.images.get(k) == Some(v));
    }
    let sigs: Vec<Vec<(usize, usize)>> = search
        .completions
        .iter()
        .map(|c| signatures(c, len))
        .collect();
    let mut placed = Vec::new();
    let mut free_slots: BTreeMap<(WeightVector, WeightVector), Vec<usize>> = BTreeMap::new();
    for v in 0..len {
        if sigs.iter().all(|s| s[v] == sigs[0][v]) {
            placed.push(v);
        } else {
            free_slots
                .entry(search.bottom.vertex(v).weights())
                .or_default()
                .push(v);
        }
    }
    Ok(Skeleton {
        search,
        forced,
        placed,
        free_slots,
    })
}

impl Skeleton {
    pub fn free_count(&self) -> usize {
        self.free_slots.values().map(Vec::len).sum()
    }

    /// Free vertices grouped by `a`-weight alone.
    pub fn free_by_a_weight(&self) -> BTreeMap<WeightVector, Vec<usize>> {
        let mut out: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
        for ((a, _), ids) in &self.free_slots {
            out.entry(a.clone()).or_default().extend(ids);
        }
        for ids in out.values_mut() {
            ids.sort_unstable();
        }
        out
    }

    /// Bottom strings made only of free vertices, grouped by `a`-weight;
    /// each is a piece that can be moved between slots of its weight.
    pub fn free_segments(&self) -> BTreeMap<WeightVector, Vec<Vec<usize>>> {
        let g = &self.search.bottom;
        let free: BTreeSet<usize> = self.free_slots.values().flatten().copied().collect();
        let mut out: BTreeMap<WeightVector, Vec<Vec<usize>>> = BTreeMap::new();
        for &v in &free {
            if g.e(v, 1).is_some_and(|u| free.contains(&u)) {
                continue;
            }
            let mut seg = vec![v];
            while let Some(next) = g.f(*seg.last().unwrap(), 1).filter(|x| free.contains(x)) {
                seg.push(next);
            }
            out.entry(g.vertex(v).a_weight()).or_default().push(seg);
        }
        out
    }

    /// DOT drawing: bottom edges and forced top edges solid, free vertices
    /// dashed.
    pub fn to_dot(&self) -> String {
        let g = &self.search.bottom;
        let free: BTreeSet<usize> = self.free_slots.values().flatten().copied().collect();
        let mut s = String::from("digraph skeleton {\n  node [shape=box];\n");
        for (id, t) in g.vertices().iter().enumerate() {
            let style = if free.contains(&id) {
                ", style=dashed"
            } else {
                ""
            };
            let _ = writeln!(
                s,
                "  v{id} [label=\"{}\", weight_a=\"{}\", weight_b=\"{}\"{style}];",
                t.label(),
                t.a_weight(),
                t.b_weight()
            );
        }
        for e in g.edges() {
            let _ = writeln!(s, "  v{} -> v{} [label=\"bottom {}\"];", e.from, e.to, e.i);
        }
        for (a, b) in self.forced.edges() {
            let _ = writeln!(s, "  v{a} -> v{b} [label=\"top 1\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// Top reading order for shape `(2,1)` with bottom content `(2,1)`: the
/// three cells of the shape in reading order, for each position of the
/// bottom entry 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReadingOrder21 {
    /// Bottom 2 at the end of the first row.
    pub east: [(usize, usize); 3],
    /// Bottom 2 in the second row.
    pub south: [(usize, usize); 3],
    /// Bottom 2 in the top-left corner.
    pub corner: [(usize, usize); 3],
}

/// The two corner choices that read the corner cell second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerOrder {
    #[default]
    SouthFirst,
    EastFirst,
}

impl ReadingOrder21 {
    pub fn with_corner(corner: CornerOrder) -> Self {
        ReadingOrder21 {
            east: [(1, 0), (0, 1), (0, 0)],
            south: [(0, 0), (1, 0), (0, 1)],
            corner: match corner {
                CornerOrder::SouthFirst => [(1, 0), (0, 0), (0, 1)],
                CornerOrder::EastFirst => [(0, 1), (0, 0), (1, 0)],
            },
        }
    }

    /// Cells of `t` in reading order.
    pub fn cells(&self, t: &Bitableau) -> Result<[(usize, usize); 3]> {
        if t.shape().parts() != [2, 1] {
            return Err(Error::Unsupported(format!(
                "reading order for shape (2,1), got {}",
                t.shape()
            )));
        }
        let twos: Vec<(usize, usize)> = [(0, 0), (0, 1), (1, 0)]
            .into_iter()
            .filter(|&(r, c)| t.get(r, c).unwrap().bottom == 2)
            .collect();
        match twos.as_slice() {
            [(0, 1)] => Ok(self.east),
            [(1, 0)] => Ok(self.south),
            [(0, 0)] => Ok(self.corner),
            _ => Err(Error::Unsupported(format!(
                "bottom content of {t} is not (2,1)"
            ))),
        }
    }

    /// The top entries read in this order.
    pub fn word(&self, t: &Bitableau) -> Result<Vec<u32>> {
        Ok(self
            .cells(t)?
            .iter()
            .map(|&(r, c)| t.get(r, c).unwrap().top)
            .collect())
    }

    /// Top operator: bracket the word and change the top entry of the
    /// chosen cell. The image is the unique filling by the new entries whose
    /// word is the bracketed word; none or several is an error.
    pub fn top_op(&self, t: &Bitableau, i: u32, dir: Direction) -> Result<Option<Bitableau>> {
        let cells = self.cells(t)?;
        let mut word = self.word(t)?;
        if i == 0 || i >= t.n() {
            return Ok(None);
        }
        let Some(pos) = crystal_position(&word, i, dir) else {
            return Ok(None);
        };
        let (r, c) = cells[pos];
        let old = t.get(r, c).unwrap();
        let top = if dir == Direction::Lower { i + 1 } else { i };
        word[pos] = top;
        let mut pairs: Vec<Pair> = t.entries().collect();
        pairs[if r == 0 { c } else { 2 }] = Pair::new(top, old.bottom);
        let mut found: Vec<Bitableau> = Vec::new();
        for [x, y, z] in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let rows = vec![vec![pairs[x], pairs[y]], vec![pairs[z]]];
            if let Ok(cand) = Bitableau::new(rows, t.n(), t.m()) {
                if self.word(&cand)? == word && !found.contains(&cand) {
                    found.push(cand);
                }
            }
        }
        match found.len() {
            1 => Ok(found.pop()),
            0 => Err(Error::Unsupported(format!(
                "no filling of {t} after {dir:?} {i} reads {word:?}"
            ))),
            _ => Err(Error::Unsupported(format!(
                "several fillings of {t} after {dir:?} {i} read {word:?}"
            ))),
        }
    }
}

/// Bitableaux of shape `(2,1)` over `[3] x [2]` with `b = (2,1)` and
/// Yamanouchi `w(T)`.
pub fn shape21_vertices() -> Vec<Bitableau> {
    let shape = Partition::new(vec![2, 1]).unwrap();
    enumerate_bitableaux(&shape, 3, 2)
        .into_iter()
        .filter(|t| t.b_weight().0 == [2, 1] && is_highest_weight(t, Convention::W))
        .collect()
}

/// The top crystal on [`shape21_vertices`] given by a reading order; fails
/// if an operator leaves the set.
pub fn shape21_top_crystal(order: &ReadingOrder21) -> Result<CrystalGraph<Bitableau>> {
    let vertices = shape21_vertices();
    let set: BTreeSet<&Bitableau> = vertices.iter().collect();
    let mut edges = Vec::new();
    for t in &vertices {
        for i in 1..3 {
            if let Some(img) = order.top_op(t, i, Direction::Lower)? {
                if !set.contains(&img) {
                    return Err(Error::Unsupported(format!(
                        "f_{i}({t}) = {img} leaves the vertex set"
                    )));
                }
                if order.top_op(&img, i, Direction::Raise)?.as_ref() != Some(t) {
                    return Err(Error::Unsupported(format!(
                        "e_{i} does not undo f_{i} at {t}"
                    )));
                }
                edges.push((t.clone(), i, img));
            }
        }
    }
    CrystalGraph::from_edges(vertices.clone(), &edges)
}

/// Reading orders for shape `(2,1)` that pass every filter: each word is the
/// row reading word of a semistandard tableau, the operators stay in the
/// vertex set, every string is valid, and highest weights are counted by
/// `g((2,1), mu, (2,1))`.
pub fn search_reading_orders_21() -> Result<Vec<ReadingOrder21>> {
    let cells = [(0, 0), (0, 1), (1, 0)];
    let perms: Vec<[(usize, usize); 3]> = (0..3)
        .flat_map(|a| (0..3).flat_map(move |b| (0..3).map(move |c| [a, b, c])))
        .filter(|[a, b, c]| a != b && b != c && a != c)
        .map(|[a, b, c]| [cells[a], cells[b], cells[c]])
        .collect();
    let lam = Partition::new(vec![2, 1]).unwrap();
    let vertices = shape21_vertices();
    let mut out = Vec::new();
    for &east in &perms {
        for &south in &perms {
            for &corner in &perms {
                let order = ReadingOrder21 {
                    east,
                    south,
                    corner,
                };
                if order_survives(&order, &vertices, &lam)? {
                    out.push(order);
                }
            }
        }
    }
    Ok(out)
}

fn order_survives(order: &ReadingOrder21, vertices: &[Bitableau], lam: &Partition) -> Result<bool> {
    use crate::insertion::insertion_tableau;
    use crate::word::Word;
    for t in vertices {
        let w = order.word(t)?;
        if insertion_tableau(&Word::new(w.clone())?).reading_word() != w {
            return Ok(false);
        }
    }
    let Ok(graph) = shape21_top_crystal(order) else {
        return Ok(false);
    };
    let a_weights: Vec<WeightVector> = graph.vertices().iter().map(Bitableau::a_weight).collect();
    for i in 1..3 {
        let mut f = PartialOperator::new(i);
        for e in graph.edges().into_iter().filter(|e| e.i == i) {
            f.images.insert(e.from, e.to);
        }
        if !is_valid_gl2_structure(&f, &a_weights).valid {
            return Ok(false);
        }
    }
    let mut census: BTreeMap<WeightVector, u64> = BTreeMap::new();
    for id in graph.highest_weight_ids() {
        *census.entry(graph.vertex(id).a_weight()).or_insert(0) += 1;
    }
    let nu = Partition::new(vec![2, 1]).unwrap();
    for mu in enumerate_partitions(3, Some(3)) {
        let g = kronecker_coefficient(lam, &mu, &nu)?;
        if census.remove(&mu.to_weight(3).unwrap()).unwrap_or(0) != g {
            return Ok(false);
        }
    }
    Ok(census.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_weights() -> Vec<WeightVector> {
        vec![
            WeightVector(vec![2, 0]),
            WeightVector(vec![1, 1]),
            WeightVector(vec![0, 2]),
        ]
    }

    #[test]
    fn string_criterion() {
        let mut f = PartialOperator::new(1);
        f.images.insert(0, 1);
        f.images.insert(1, 2);
        assert!(is_valid_gl2_structure(&f, &chain_weights()).valid);

        let mut cycle = PartialOperator::new(1);
        cycle.images.insert(0, 1);
        cycle.images.insert(1, 0);
        let w = vec![WeightVector(vec![1, 1]); 2];
        assert!(!is_valid_gl2_structure(&cycle, &w).valid);

        let mut short = PartialOperator::new(1);
        short.images.insert(0, 1);
        let report = is_valid_gl2_structure(&short, &chain_weights());
        assert!(!report.valid);
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn singleton_commutes() {
        let g = full_crystal(&Partition::row(1), 1, 1, Convention::W, 10).unwrap();
        assert_eq!(commutes_with_bottom(&PartialOperator::new(1), &g), None);
    }

    #[test]
    fn row_operator_reorders() {
        let t = Bitableau::with_bounds(&[vec![(1, 1), (1, 2)]], 2, 2).unwrap();
        // u(T) = 11; the second letter belongs to the box (1,2).
        let low = top_op_row(&t, 1, Direction::Lower).unwrap().unwrap();
        assert_eq!(low.tuples(), vec![vec![(1, 1), (2, 2)]]);
    }

    #[test]
    fn swapped_images_break_commutation() {
        let g = full_crystal(&Partition::row(2), 2, 2, Convention::W, 100).unwrap();
        let mut f = operators_from_fn(&g, 2, |t, i| top_op_row(t, i, Direction::Lower))
            .unwrap()
            .remove(0);
        assert_eq!(commutes_with_bottom(&f, &g), None);
        let keys: Vec<usize> = f.images.keys().copied().collect();
        let (k1, k2) = (keys[0], keys[1]);
        let (v1, v2) = (f.images[&k1], f.images[&k2]);
        f.images.insert(k1, v2);
        f.images.insert(k2, v1);
        assert!(commutes_with_bottom(&f, &g).is_some());
    }

    #[test]
    fn single_box_is_forced() {
        let s = skeleton(&Partition::row(1), 100).unwrap();
        assert_eq!(s.search.completions.len(), 1);
        assert_eq!(s.placed.len(), 4);
        assert_eq!(s.free_count(), 0);
        let census = highest_weight_census(&s.search.bottom, &[s.search.completions[0].clone()]);
        let want: BTreeMap<_, _> =
            [((WeightVector(vec![1, 0]), WeightVector(vec![1, 0])), 1)].into();
        assert_eq!(census, want);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            skeleton(&Partition::new(vec![2, 2]).unwrap(), 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn corner_orders_read_corner_second() {
        for c in [CornerOrder::SouthFirst, CornerOrder::EastFirst] {
            assert_eq!(ReadingOrder21::with_corner(c).corner[1], (0, 0));
        }
    }
}
