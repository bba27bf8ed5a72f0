//! Transfer of compact and `c↑`-extreme points along Galois embeddings.

use rand::Rng;
use serde::Serialize;

use crate::convolution::{conv_order, convolve};
use crate::error::{cap, Error, Result};
use crate::operator::{is_right_absorbing, Builtin, PreclosureOp};
use crate::points::{compact_points, extreme_points, Context, Order};
use crate::qoset::{fixtures, Dir, Qoset, EXHAUSTIVE_CAP};
use crate::subset::Subset;

use super::random::{random_embedding, rng};

/// Outcome of [`galois_check`]. Precondition failures are errors, not verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisVerdict {
    /// `(x, A)` pairs checked for both transfers.
    pub instances: u64,
    pub violations: u64,
    pub first_counterexample: Option<String>,
    /// `(i⁻¹c′i) ∗ (i⁻¹s′i) = i⁻¹(c′ ∗ s′)i` for `s′ ∈ {↑, ↓, c′}`.
    pub pullback_equality: bool,
    pub holds: bool,
}

fn image(f: &[usize], a: Subset) -> Subset {
    a.iter().map(|x| f[x]).collect()
}

fn preimage(f: &[usize], a: Subset) -> Subset {
    (0..f.len()).filter(|&x| a.contains(f[x])).collect()
}

fn check_map(name: &str, f: &[usize], from: &Qoset, to: &Qoset) -> Result<()> {
    if f.len() != from.size() {
        return Err(Error::Embedding(format!("{name} has {} entries for {} elements", f.len(), from.size())));
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= to.size()) {
        return Err(Error::IndexOutOfRange { index: bad, size: to.size() });
    }
    for x in 0..from.size() {
        for y in from.up_of(x).iter() {
            if !to.leq(f[x], f[y]) {
                return Err(Error::Embedding(format!("{name} is not order-preserving at ({x}, {y})")));
            }
        }
    }
    Ok(())
}

fn check_continuous(name: &str, f: &[usize], c: &PreclosureOp, c2: &PreclosureOp) -> Result<()> {
    for a in Subset::all(c.size()) {
        if !image(f, c.eval(a)).is_subset(c2.eval(image(f, a))) {
            return Err(Error::Embedding(format!("{name} is not continuous at {a}")));
        }
    }
    Ok(())
}

/// Checks the embedding preconditions, then over every `x ∈ E` and `A ⊆ E`:
/// `x ∈ cp_c(A) ⇔ i(x) ∈ cp_{c′}(s⁻¹A)` and `x ∈ ex_{c↑}(A) ⇔ i(x) ∈ ex_{c′↑}(s⁻¹A)`.
pub fn galois_check(
    q: &Qoset,
    c: &PreclosureOp,
    q2: &Qoset,
    c2: &PreclosureOp,
    i: &[usize],
    s: &[usize],
) -> Result<GaloisVerdict> {
    cap("Galois check", q2.size(), EXHAUSTIVE_CAP)?;
    if c.size() != q.size() {
        return Err(Error::CarrierMismatch { left: c.size(), right: q.size() });
    }
    if c2.size() != q2.size() {
        return Err(Error::CarrierMismatch { left: c2.size(), right: q2.size() });
    }
    check_map("i", i, q, q2)?;
    check_map("s", s, q2, q)?;
    if let Some(x) = (0..q.size()).find(|&x| s[i[x]] != x) {
        return Err(Error::Embedding(format!("s(i({x})) is not {x}")));
    }
    if let Some(x) = (0..q2.size()).find(|&x| !q2.leq(i[s[x]], x)) {
        return Err(Error::Embedding(format!("i(s({x})) is not below {x}")));
    }
    if !is_right_absorbing(q, c, Dir::Down)? || !is_right_absorbing(q2, c2, Dir::Down)? {
        return Err(Error::Embedding("an operator is not right-absorbing, so a qoset is not enriched".into()));
    }
    check_continuous("i", i, c, c2)?;
    check_continuous("s", s, c2, c)?;

    let ctx = Context::new(q, c, Order::Primary)?;
    let ctx2 = Context::new(q2, c2, Order::Primary)?;
    let up = conv_order(c, q, Dir::Up)?;
    let up2 = conv_order(c2, q2, Dir::Up)?;
    let ex_ctx = Context::new(q, &up, Order::Equivalence)?;
    let ex_ctx2 = Context::new(q2, &up2, Order::Equivalence)?;

    let (mut instances, mut violations, mut first) = (0u64, 0u64, None);
    for a in Subset::all(q.size()) {
        let back = preimage(s, a);
        let cp = compact_points(&ctx, a);
        let cp2 = compact_points(&ctx2, back);
        let ex = extreme_points(&ex_ctx, a);
        let ex2 = extreme_points(&ex_ctx2, back);
        for x in 0..q.size() {
            instances += 1;
            let bad_cp = cp.contains(x) != cp2.contains(i[x]);
            let bad_ex = ex.contains(x) != ex2.contains(i[x]);
            if bad_cp || bad_ex {
                violations += 1;
                if first.is_none() {
                    let which = if bad_cp { "compact" } else { "extreme" };
                    first = Some(format!("{which} transfer fails for x = {x}, A = {a}"));
                }
            }
        }
    }

    let pulled = PreclosureOp::pullback(i, c2)?;
    let mut pullback_equality = true;
    for other in [PreclosureOp::builtin(Builtin::Up, q2), PreclosureOp::builtin(Builtin::Down, q2), c2.clone()] {
        let lhs = convolve(&pulled, &PreclosureOp::pullback(i, &other)?)?;
        let rhs = PreclosureOp::pullback(i, &convolve(c2, &other)?)?;
        pullback_equality &= lhs.same_as(&rhs)?;
    }
    Ok(GaloisVerdict {
        instances,
        violations,
        first_counterexample: first,
        pullback_equality,
        holds: violations == 0 && pullback_equality,
    })
}

/// `C3 → D12` by `0 ↦ 1, 1 ↦ 2, 2 ↦ 4`, retracted by the power of two in a divisor,
/// with `dm` on both sides.
pub fn chain_into_d12() -> Result<GaloisVerdict> {
    let c3 = fixtures::chain(3);
    let (d12, divs) = fixtures::divisors(12);
    let pos = |v: u64| divs.iter().position(|&d| d == v).expect("divisor of 12");
    let i = vec![pos(1), pos(2), pos(4)];
    let s: Vec<usize> = divs.iter().map(|&d| d.trailing_zeros() as usize).collect();
    galois_check(
        &c3,
        &PreclosureOp::builtin(Builtin::Dm, &c3),
        &d12,
        &PreclosureOp::builtin(Builtin::Dm, &d12),
        &i,
        &s,
    )
}

/// Totals over seeded random embeddings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingRun {
    pub embeddings: usize,
    pub rejected_draws: usize,
    pub instances: u64,
    pub violations: u64,
    pub first_counterexample: Option<String>,
}

/// Draws embeddings between enumerated posets on at most `max_n` points, with `down`
/// or `dm` on each side, until `count` of them pass the preconditions.
pub fn random_embedding_checks(count: usize, max_n: usize, seed: u64) -> Result<EmbeddingRun> {
    const MAX_DRAWS: u64 = 100_000;
    let mut run = EmbeddingRun {
        embeddings: 0,
        rejected_draws: 0,
        instances: 0,
        violations: 0,
        first_counterexample: None,
    };
    let mut draw = 0u64;
    while run.embeddings < count {
        if draw >= MAX_DRAWS {
            return Err(Error::SearchLimit { limit: MAX_DRAWS });
        }
        let draw_seed = seed.wrapping_mul(1_000_003).wrapping_add(draw);
        draw += 1;
        let Some(e) = random_embedding(max_n, draw_seed)? else {
            run.rejected_draws += 1;
            continue;
        };
        let mut pick = rng(draw_seed ^ 0x5eed);
        let kind = |r: &mut rand_chacha::ChaCha8Rng| if r.gen::<bool>() { Builtin::Dm } else { Builtin::Down };
        let c = PreclosureOp::builtin(kind(&mut pick), &e.source);
        let c2 = PreclosureOp::builtin(kind(&mut pick), &e.target);
        match galois_check(&e.source, &c, &e.target, &c2, &e.i, &e.s) {
            Ok(v) => {
                run.embeddings += 1;
                run.instances += v.instances;
                run.violations += v.violations + u64::from(!v.pullback_equality);
                if run.first_counterexample.is_none() {
                    run.first_counterexample = v.first_counterexample.map(|m| format!("draw {draw_seed}: {m}"));
                }
            }
            Err(Error::Embedding(_)) => run.rejected_draws += 1,
            Err(other) => return Err(other),
        }
    }
    Ok(run)
}
