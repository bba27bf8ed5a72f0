//! Brute-force reference implementations on plain boolean matrices, kept independent
//! of the library's bitmask routines. Sets are `Vec<bool>` of length `n`.
#![allow(dead_code)]

use preclosure::{Qoset, Subset};

pub type Set = Vec<bool>;

pub struct Naive {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
}

impl Naive {
    pub fn from_qoset(q: &Qoset) -> Naive {
        let n = q.size();
        Naive { n, leq: (0..n).map(|i| (0..n).map(|j| q.leq(i, j)).collect()).collect() }
    }

    pub fn all_sets(&self) -> Vec<Set> {
        (0..1u64 << self.n).map(|m| to_set(self.n, m)).collect()
    }

    pub fn down(&self, a: &Set) -> Set {
        (0..self.n).map(|x| (0..self.n).any(|y| a[y] && self.leq[x][y])).collect()
    }

    pub fn up(&self, a: &Set) -> Set {
        (0..self.n).map(|x| (0..self.n).any(|y| a[y] && self.leq[y][x])).collect()
    }

    pub fn upper_bounds(&self, a: &Set) -> Set {
        (0..self.n).map(|x| (0..self.n).all(|y| !a[y] || self.leq[y][x])).collect()
    }

    pub fn lower_bounds(&self, a: &Set) -> Set {
        (0..self.n).map(|x| (0..self.n).all(|y| !a[y] || self.leq[x][y])).collect()
    }

    /// Greatest elements of the lower bounds.
    pub fn infs(&self, a: &Set) -> Set {
        let lb = self.lower_bounds(a);
        (0..self.n).map(|x| lb[x] && (0..self.n).all(|y| !lb[y] || self.leq[y][x])).collect()
    }

    pub fn sups(&self, a: &Set) -> Set {
        let ub = self.upper_bounds(a);
        (0..self.n).map(|x| ub[x] && (0..self.n).all(|y| !ub[y] || self.leq[x][y])).collect()
    }

    pub fn class(&self, x: usize) -> Set {
        (0..self.n).map(|y| self.leq[x][y] && self.leq[y][x]).collect()
    }

    pub fn is_upper(&self, a: &Set) -> bool {
        self.up(a) == *a
    }

    /// Nonempty, upper, and every two members have a lower bound inside.
    pub fn is_filter(&self, a: &Set) -> bool {
        a.iter().any(|&b| b)
            && self.is_upper(a)
            && (0..self.n).all(|x| {
                (0..self.n).all(|y| !(a[x] && a[y]) || (0..self.n).any(|z| a[z] && self.leq[z][x] && self.leq[z][y]))
            })
    }

    pub fn filters(&self) -> Vec<Set> {
        self.all_sets().into_iter().filter(|s| self.is_filter(s)).collect()
    }

    /// Every inf of every subset of `s` lies in `s`.
    pub fn is_inf_closed(&self, s: &Set) -> bool {
        self.all_sets()
            .iter()
            .filter(|f| subset(f, s))
            .all(|f| subset(&self.infs(f), s))
    }

    pub fn maximal(&self, a: &Set) -> Set {
        (0..self.n)
            .map(|x| a[x] && (0..self.n).all(|y| !a[y] || !self.leq[x][y] || self.leq[y][x]))
            .collect()
    }

    pub fn strict_up(&self, x: usize) -> Set {
        (0..self.n).map(|y| self.leq[x][y] && !self.leq[y][x]).collect()
    }
}

pub fn to_set(n: usize, m: u64) -> Set {
    (0..n).map(|i| m >> i & 1 == 1).collect()
}

pub fn to_subset(s: &Set) -> Subset {
    s.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

pub fn from_subset(n: usize, s: Subset) -> Set {
    to_set(n, s.bits())
}

pub fn subset(a: &Set, b: &Set) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

pub fn inter(a: &Set, b: &Set) -> Set {
    a.iter().zip(b).map(|(&x, &y)| x && y).collect()
}

pub fn union(a: &Set, b: &Set) -> Set {
    a.iter().zip(b).map(|(&x, &y)| x || y).collect()
}

pub fn minus(a: &Set, b: &Set) -> Set {
    a.iter().zip(b).map(|(&x, &y)| x && !y).collect()
}

pub fn count(a: &Set) -> usize {
    a.iter().filter(|&&b| b).count()
}

/// Intersection of the members of `family` that contain `a`; all-true if none do.
pub fn meet_above(n: usize, family: &[Set], a: &Set) -> Set {
    family
        .iter()
        .filter(|v| subset(a, v))
        .fold(vec![true; n], |acc, v| inter(&acc, v))
}

/// `(c ∗ s)(A) = ∩_{B ⊆ E} c(A ∩ B) ∪ s(A ∖ B)`, ranging over every `B` of the carrier.
pub fn convolve(n: usize, c: &dyn Fn(&Set) -> Set, s: &dyn Fn(&Set) -> Set, a: &Set) -> Set {
    (0..1u64 << n).fold(vec![true; n], |acc, m| {
        let b = to_set(n, m);
        inter(&acc, &union(&c(&inter(a, &b)), &s(&minus(a, &b))))
    })
}

/// Closed sets of `c`, found by testing every subset.
pub fn closed_sets(n: usize, c: &dyn Fn(&Set) -> Set) -> Vec<Set> {
    (0..1u64 << n).map(|m| to_set(n, m)).filter(|s| c(s) == *s).collect()
}

/// Inclusion-maximal closed sets avoiding `x`.
pub fn copoints(n: usize, c: &dyn Fn(&Set) -> Set, x: usize) -> Vec<Set> {
    let avoid: Vec<Set> = closed_sets(n, c).into_iter().filter(|s| !s[x]).collect();
    avoid
        .iter()
        .filter(|s| !avoid.iter().any(|t| t != *s && subset(s, t)))
        .cloned()
        .collect()
}

/// Largest size of an inclusion-minimal `F` with `x ∈ c(F)`, over all `x`.
pub fn caratheodory(n: usize, c: &dyn Fn(&Set) -> Set) -> usize {
    let sets: Vec<Set> = (0..1u64 << n).map(|m| to_set(n, m)).collect();
    let mut best = 0;
    for x in 0..n {
        for f in &sets {
            if !c(f)[x] {
                continue;
            }
            let minimal = (0..n).filter(|&i| f[i]).all(|i| {
                let mut g = f.clone();
                g[i] = false;
                !c(&g)[x]
            });
            if minimal {
                best = best.max(count(f));
            }
        }
    }
    best
}

pub fn trial_division(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn divisors_by_scan(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}
