//! Exhaustive, duplicate-free enumeration of labeled posets, qosets and Moore families.

use crate::error::{cap, Result};
use crate::qoset::Qoset;
use crate::subset::Subset;

pub const POSET_ENUM_CAP: usize = 5;
pub const QOSET_ENUM_CAP: usize = 4;
pub const MOORE_ENUM_CAP: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Posets,
    Qosets,
    MooreFamilies,
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Rows `up[i]` are transitive when `j ∈ up[i]` implies `up[j] ⊆ up[i]`.
fn transitive(up: &[u64]) -> bool {
    up.iter()
        .all(|&row| Subset(row).iter().all(|j| up[j] & !row == 0))
}

fn build(n: usize, up: &[u64]) -> Qoset {
    let mut pairs = Vec::new();
    for (i, &row) in up.iter().enumerate() {
        for j in Subset(row).iter() {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    Qoset::new(labels(n), &pairs).expect("indices are in range")
}

/// All labeled posets on `n` elements. Each unordered pair is unrelated or ordered
/// one of two ways, and the candidates are filtered for transitivity.
pub fn enum_posets(n: usize) -> Result<Vec<Qoset>> {
    cap("poset enumeration", n, POSET_ENUM_CAP)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => up[i] |= 1 << j,
                2 => up[j] |= 1 << i,
                _ => {}
            }
            c /= 3;
        }
        if transitive(&up) {
            out.push(build(n, &up));
        }
    }
    Ok(out)
}

/// All labeled qosets (preorders) on `n` elements.
pub fn enum_qosets(n: usize) -> Result<Vec<Qoset>> {
    cap("qoset enumeration", n, QOSET_ENUM_CAP)?;
    let offdiag: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << offdiag.len()) {
        let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for (k, &(i, j)) in offdiag.iter().enumerate() {
            if bits >> k & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        if transitive(&up) {
            out.push(build(n, &up));
        }
    }
    Ok(out)
}

/// All intersection-closed families on `n` points that contain the carrier, each sorted
/// by bitmask.
///
/// Subsets are decided in decreasing bitmask order. An intersection is a submask of both
/// operands, so it is decided after them and is forced in exactly when two chosen sets
/// meet in it.
pub fn enum_moore(n: usize) -> Result<Vec<Vec<Subset>>> {
    cap("Moore family enumeration", n, MOORE_ENUM_CAP)?;
    let full = Subset::full(n);
    let mut out = Vec::new();
    let mut chosen = vec![full];
    moore_rec(full.bits(), &mut chosen, &mut out);
    Ok(out)
}

fn moore_rec(next: u64, chosen: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
    if next == 0 {
        let mut fam = chosen.clone();
        fam.sort();
        out.push(fam);
        return;
    }
    let s = Subset(next - 1);
    let forced = chosen
        .iter()
        .enumerate()
        .any(|(i, a)| chosen[i + 1..].iter().any(|b| a.inter(*b) == s));
    chosen.push(s);
    moore_rec(next - 1, chosen, out);
    chosen.pop();
    if !forced {
        moore_rec(next - 1, chosen, out);
    }
}

/// Number of labeled structures of the given kind on `n` points.
pub fn count(kind: Kind, n: usize) -> Result<usize> {
    Ok(match kind {
        Kind::Posets => enum_posets(n)?.len(),
        Kind::Qosets => enum_qosets(n)?.len(),
        Kind::MooreFamilies => enum_moore(n)?.len(),
    })
}

/// Independent poset counter: extend every poset on `n - 1` points by a new point whose
/// strict down-set `D` is a lower set, strict up-set `U` is an upper set, and `D < U`.
pub fn count_posets_by_extension(n: usize) -> u64 {
    fn rec(n: usize, up: Vec<u64>, target: usize, total: &mut u64) {
        if n == target {
            *total += 1;
            return;
        }
        let down: Vec<u64> = (0..n)
            .map(|j| (0..n).filter(|&i| up[i] >> j & 1 == 1).fold(0, |m, i| m | 1 << i))
            .collect();
        for d in 0u64..(1 << n) {
            let lower = Subset(d).iter().all(|x| down[x] & !d == 0);
            if !lower {
                continue;
            }
            for u in 0u64..(1 << n) {
                if u & d != 0 || !Subset(u).iter().all(|x| up[x] & !u == 0) {
                    continue;
                }
                if !Subset(d).iter().all(|x| up[x] & u == u) {
                    continue;
                }
                let mut next = up.clone();
                for x in Subset(d).iter() {
                    next[x] |= 1 << n;
                }
                next.push(1 << n | u);
                rec(n + 1, next, target, total);
            }
        }
    }
    let mut total = 0;
    rec(0, Vec::new(), n, &mut total);
    total
}

/// Independent qoset counter: a preorder is a set partition into `∼`-classes together
/// with a partial order on the classes.
pub fn count_qosets_by_partition(n: usize) -> u64 {
    // Stirling numbers of the second kind.
    let mut s = vec![vec![0u64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = k as u64 * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    (0..=n).map(|k| s[n][k] * count_posets_by_extension(k)).sum()
}

/// Independent Moore-family counter: test every family of subsets directly.
pub fn count_moore_brute(n: usize) -> u64 {
    let m = 1usize << n;
    let full = (1u64 << n) - 1;
    let mut total = 0;
    for fam in 0u64..(1u64 << m) {
        if fam >> full & 1 == 0 {
            continue;
        }
        let members: Vec<u64> = (0..m as u64).filter(|&s| fam >> s & 1 == 1).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| fam >> (a & b) & 1 == 1));
        if closed {
            total += 1;
        }
    }
    total
}
