//! Seeded random operators, families and embeddings. Every generator takes its own
//! seed so results are reproducible run to run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{cap, Result};
use crate::operator::PreclosureOp;
use crate::qoset::Qoset;
use crate::subset::Subset;

use super::enumerate::enum_posets;

/// Largest carrier for the random table generators.
pub const RANDOM_TABLE_CAP: usize = 6;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sparse_mask(rng: &mut ChaCha8Rng, n: usize) -> Subset {
    let full = Subset::full(n).bits();
    Subset(rng.gen::<u64>() & rng.gen::<u64>() & rng.gen::<u64>() & full)
}

/// A random preclosure: `c(A) = A ∪ ∪_{B ⊆ A} r(B)` for sparse random sets `r(B)`.
/// The union over submasks makes it monotone and the `A ∪` makes it extensive.
pub fn random_preclosure(n: usize, seed: u64) -> Result<PreclosureOp> {
    cap("random preclosure", n, RANDOM_TABLE_CAP)?;
    let mut rng = rng(seed);
    let raw: Vec<Subset> = Subset::all(n).map(|_| sparse_mask(&mut rng, n)).collect();
    let images = Subset::all(n)
        .map(|a| a.submasks().fold(a, |acc, b| acc.union(raw[b.bits() as usize])))
        .collect();
    PreclosureOp::table(n, images)
}

/// The idempotent hull of a random preclosure, as a table.
pub fn random_closure(n: usize, seed: u64) -> Result<PreclosureOp> {
    random_preclosure(n, seed)?.idempotent_hull().materialize()
}

/// A random Čech operator `c(A) = ∪_{a ∈ A} r(a)` with `a ∈ r(a)`.
pub fn random_cech(n: usize, seed: u64) -> Result<PreclosureOp> {
    cap("random Cech operator", n, RANDOM_TABLE_CAP)?;
    let mut rng = rng(seed);
    let point: Vec<Subset> = (0..n).map(|a| sparse_mask(&mut rng, n).with(a)).collect();
    let images = Subset::all(n)
        .map(|a| a.iter().fold(Subset::EMPTY, |acc, x| acc.union(point[x])))
        .collect();
    PreclosureOp::table(n, images)
}

/// `k` uniformly random subsets of an `n`-element carrier.
pub fn random_family(n: usize, k: usize, seed: u64) -> Vec<Subset> {
    let mut rng = rng(seed);
    let full = Subset::full(n).bits();
    (0..k).map(|_| Subset(rng.gen::<u64>() & full)).collect()
}

/// A random map `{0..n} → {0..m}`.
pub fn random_map(n: usize, m: usize, seed: u64) -> Vec<usize> {
    let mut rng = rng(seed);
    (0..n).map(|_| rng.gen_range(0..m)).collect()
}

/// An order embedding `i : Q → Q′` with a retraction `s`, `s ∘ i = id` and `i ∘ s ≤ id`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub source: Qoset,
    pub target: Qoset,
    pub i: Vec<usize>,
    pub s: Vec<usize>,
}

/// Picks a labeled poset `Q′` on 1 to `max_n` points and a nonempty image `I ⊆ Q′` such
/// that every `I ∩ ↓x′` has a greatest element. `Q` is `I` with the induced order, `i` is
/// the inclusion and `s(x′) = max(I ∩ ↓x′)`. Returns `None` when the draw has no such
/// retraction.
pub fn random_embedding(max_n: usize, seed: u64) -> Result<Option<Embedding>> {
    let mut rng = rng(seed);
    let n = rng.gen_range(1..=max_n);
    let posets = enum_posets(n)?;
    let target = posets[rng.gen_range(0..posets.len())].clone();
    let image = Subset(rng.gen_range(1u64..(1u64 << n)));
    let (source, i) = target.restrict(image);
    let mut s = Vec::with_capacity(n);
    for x in 0..n {
        let below = target.down_of(x).inter(image);
        let top = target.max_of(below);
        if top.len() != 1 {
            return Ok(None);
        }
        let y = top.first().expect("one element");
        s.push(i.iter().position(|&v| v == y).expect("y lies in the image"));
    }
    Ok(Some(Embedding { source, target, i, s }))
}
