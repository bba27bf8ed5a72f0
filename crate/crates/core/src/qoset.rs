//! Finite quasi-ordered sets and their first-order queries.

use serde::{Deserialize, Serialize};

use crate::error::{cap, Error, Result};
use crate::subset::{Subset, MAX_CARRIER};

/// Cap for operations that scan every subset of the carrier.
pub const EXHAUSTIVE_CAP: usize = 20;
/// Cap for filter enumeration and the Riesz check.
pub const FILTER_CAP: usize = 16;

/// Direction of a cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir {
    Down,
    Up,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Down => Dir::Up,
            Dir::Up => Dir::Down,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Sup,
    Inf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremal {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    Chain,
    Antichain,
    Directed,
    Filtered,
    Filter,
    OrderIdeal,
}

/// A finite qoset. `up[i]` is the principal upper set of `i` and `down[i]`
/// its principal lower set; both are reflexive and transitively closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qoset {
    labels: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
    is_poset: bool,
}

impl Qoset {
    /// Builds the reflexive-transitive closure of `pairs`, where `(i, j)` means `i <= j`.
    pub fn new<S: Into<String>>(labels: Vec<S>, pairs: &[(usize, usize)]) -> Result<Qoset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        cap("qoset", n, MAX_CARRIER)?;
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(i, j) in pairs {
            for k in [i, j] {
                if k >= n {
                    return Err(Error::IndexOutOfRange { index: k, size: n });
                }
            }
            up[i] = up[i].with(j);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        Ok(Qoset::from_up(labels, up))
    }

    /// Builds a qoset from a relation predicate; the predicate is closed like [`Qoset::new`].
    pub fn from_fn<S: Into<String>>(labels: Vec<S>, leq: impl Fn(usize, usize) -> bool) -> Result<Qoset> {
        let n = labels.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        Qoset::new(labels, &pairs)
    }

    fn from_up(labels: Vec<String>, up: Vec<Subset>) -> Qoset {
        let n = labels.len();
        let mut down = vec![Subset::EMPTY; n];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j] = down[j].with(i);
            }
        }
        let is_poset = (0..n).all(|i| up[i].inter(down[i]) == Subset::singleton(i));
        Qoset { labels, up, down, is_poset }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_poset(&self) -> bool {
        self.is_poset
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// `i < j`: `i <= j` and not `j <= i`.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && !self.leq(j, i)
    }

    #[inline]
    pub fn equiv(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && self.leq(j, i)
    }

    /// `↑x`
    #[inline]
    pub fn up_of(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// `↓x`
    #[inline]
    pub fn down_of(&self, x: usize) -> Subset {
        self.down[x]
    }

    /// The order-equivalence class `[x]`.
    #[inline]
    pub fn class(&self, x: usize) -> Subset {
        self.up[x].inter(self.down[x])
    }

    /// `⇑x = {y : x < y}`
    #[inline]
    pub fn strict_up(&self, x: usize) -> Subset {
        self.up[x].minus(self.down[x])
    }

    /// `⇓x = {y : y < x}`
    #[inline]
    pub fn strict_down(&self, x: usize) -> Subset {
        self.down[x].minus(self.up[x])
    }

    pub fn cone(&self, a: Subset, dir: Dir) -> Subset {
        let rows = match dir {
            Dir::Down => &self.down,
            Dir::Up => &self.up,
        };
        a.iter().fold(Subset::EMPTY, |acc, i| acc.union(rows[i]))
    }

    /// `A↑` (upper bounds) or `A↓` (lower bounds); the empty set is bounded by everything.
    pub fn bounds(&self, a: Subset, which: Bound) -> Subset {
        let rows = match which {
            Bound::Upper => &self.up,
            Bound::Lower => &self.down,
        };
        a.iter().fold(self.full(), |acc, i| acc.inter(rows[i]))
    }

    /// `A∨ = (A↑)↓ ∩ A↑` or dually `A∧`.
    pub fn extremum_set(&self, a: Subset, which: Extremum) -> Subset {
        match which {
            Extremum::Sup => {
                let ub = self.bounds(a, Bound::Upper);
                self.bounds(ub, Bound::Lower).inter(ub)
            }
            Extremum::Inf => {
                let lb = self.bounds(a, Bound::Lower);
                self.bounds(lb, Bound::Upper).inter(lb)
            }
        }
    }

    pub fn sup_set(&self, a: Subset) -> Subset {
        self.extremum_set(a, Extremum::Sup)
    }

    pub fn inf_set(&self, a: Subset) -> Subset {
        self.extremum_set(a, Extremum::Inf)
    }

    /// `Max A = {x ∈ A : x <= y ∈ A ⇒ x ∼ y}` or dually `Min A`.
    pub fn maximal_elements(&self, a: Subset, which: Extremal) -> Subset {
        a.iter()
            .filter(|&x| {
                let strict = match which {
                    Extremal::Max => self.strict_up(x),
                    Extremal::Min => self.strict_down(x),
                };
                !strict.intersects(a)
            })
            .collect()
    }

    pub fn max_of(&self, a: Subset) -> Subset {
        self.maximal_elements(a, Extremal::Max)
    }

    pub fn min_of(&self, a: Subset) -> Subset {
        self.maximal_elements(a, Extremal::Min)
    }

    /// `[A]`
    pub fn saturate(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, i| acc.union(self.class(i)))
    }

    pub fn is_structure(&self, a: Subset, kind: Structure) -> bool {
        let pairs_ok = |pred: &dyn Fn(usize, usize) -> bool| {
            a.iter().all(|x| a.iter().all(|y| pred(x, y)))
        };
        match kind {
            Structure::Chain => pairs_ok(&|x, y| self.leq(x, y) || self.leq(y, x)),
            Structure::Antichain => pairs_ok(&|x, y| x == y || !self.leq(x, y)),
            Structure::Directed => {
                !a.is_empty() && pairs_ok(&|x, y| self.up[x].inter(self.up[y]).intersects(a))
            }
            Structure::Filtered => {
                !a.is_empty() && pairs_ok(&|x, y| self.down[x].inter(self.down[y]).intersects(a))
            }
            Structure::Filter => {
                self.cone(a, Dir::Up) == a && self.is_structure(a, Structure::Filtered)
            }
            Structure::OrderIdeal => {
                self.cone(a, Dir::Down) == a && self.is_structure(a, Structure::Directed)
            }
        }
    }

    /// All filters, by scanning every subset against the filter predicate.
    pub fn filters(&self) -> Result<Vec<Subset>> {
        cap("filter enumeration", self.size(), FILTER_CAP)?;
        Ok(Subset::all(self.size())
            .filter(|&s| self.is_structure(s, Structure::Filter))
            .collect())
    }

    /// Riesz interpolation: for all `F <= F'` there is `x` with `F <= x <= F'`.
    /// For a fixed `F` the admissible `F'` are exactly the subsets of `F↑`.
    pub fn is_riesz(&self) -> Result<bool> {
        cap("Riesz check", self.size(), FILTER_CAP)?;
        for f in Subset::all(self.size()) {
            let fu = self.bounds(f, Bound::Upper);
            for fp in fu.submasks() {
                if !fu.intersects(self.bounds(fp, Bound::Lower)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The dual qoset: the relation transposed.
    pub fn dual(&self) -> Qoset {
        Qoset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            is_poset: self.is_poset,
        }
    }

    /// The order-equivalence relation `∼` of this qoset, viewed as a qoset.
    pub fn equivalence(&self) -> Qoset {
        let up: Vec<Subset> = (0..self.size()).map(|i| self.class(i)).collect();
        Qoset::from_up(self.labels.clone(), up)
    }

    /// The qoset induced on `s`, with the map from new indices to old ones.
    pub fn restrict(&self, s: Subset) -> (Qoset, Vec<usize>) {
        let idx = s.to_vec();
        let labels: Vec<String> = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let up = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.leq(i, j))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        (Qoset::from_up(labels, up), idx)
    }

    /// Every lower set, in increasing bitmask order. Fails once more than `limit` are found.
    pub fn lower_sets(&self, limit: usize) -> Result<Vec<Subset>> {
        let mut out = Vec::new();
        self.lower_sets_rec(0, Subset::EMPTY, Subset::EMPTY, limit, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn lower_sets_rec(
        &self,
        i: usize,
        inc: Subset,
        exc: Subset,
        limit: usize,
        out: &mut Vec<Subset>,
    ) -> Result<()> {
        if i == self.size() {
            if out.len() >= limit {
                return Err(Error::SearchLimit { limit: limit as u64 });
            }
            out.push(inc);
            return Ok(());
        }
        if inc.contains(i) || exc.contains(i) {
            return self.lower_sets_rec(i + 1, inc, exc, limit, out);
        }
        self.lower_sets_rec(i + 1, inc.union(self.down[i]), exc, limit, out)?;
        self.lower_sets_rec(i + 1, inc, exc.union(self.up[i]), limit, out)
    }

    /// Cover pairs `(a, b)` between order-equivalence classes, keyed by each
    /// class's least index: `[a] < [b]` with nothing strictly between.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let reps: Vec<usize> = (0..self.size()).filter(|&i| self.class(i).first() == Some(i)).collect();
        let mut covers = Vec::new();
        for &a in &reps {
            for &b in &reps {
                if a != b && self.lt(a, b) {
                    let between = self.strict_up(a).inter(self.strict_down(b));
                    if between.is_empty() {
                        covers.push((a, b));
                    }
                }
            }
        }
        covers
    }

    /// Strict relation pairs `(i, j)` with `i <= j`, `i != j`, in lexicographic order.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..self.size() {
            for j in self.up[i].iter() {
                if i != j {
                    v.push((i, j));
                }
            }
        }
        v
    }
}

/// Named example qosets used throughout the tests and the CLI.
pub mod fixtures {
    use super::Qoset;

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Qoset {
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Qoset::new((0..n).map(|i| i.to_string()).collect(), &pairs).unwrap()
    }

    /// `n` pairwise incomparable elements labelled a, b, ...
    pub fn antichain(n: usize) -> Qoset {
        let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Qoset::new(labels, &[]).unwrap()
    }

    /// Four elements `y1, y2 < x1, x2` (indices 0..4 in that order).
    pub fn p4() -> Qoset {
        Qoset::new(
            vec!["y1", "y2", "x1", "x2"],
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap()
    }

    /// The diamond `⊥ < a, b < ⊤`.
    pub fn m4() -> Qoset {
        Qoset::new(vec!["bot", "a", "b", "top"], &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// The pentagon `⊥ < a < c < ⊤`, `⊥ < b < ⊤`.
    pub fn n5() -> Qoset {
        Qoset::new(
            vec!["bot", "a", "b", "c", "top"],
            &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
        )
        .unwrap()
    }

    /// Two order-equivalent elements.
    pub fn q2() -> Qoset {
        Qoset::new(vec!["a", "b"], &[(0, 1), (1, 0)]).unwrap()
    }

    /// Divisors of `m` in increasing order, ordered by divisibility.
    pub fn divisors(m: u64) -> (Qoset, Vec<u64>) {
        let divs = crate::divisors_of(m);
        let labels: Vec<String> = divs.iter().map(|d| d.to_string()).collect();
        let q = Qoset::from_fn(labels, |i, j| divs[j].is_multiple_of(divs[i])).unwrap();
        (q, divs)
    }
}
