//! The Krein–Milman property, its transfer along family convolutions, sup/inf
//! generation, and the three representation checks including divisor factorisation.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::convolution::{conv_family, conv_order};
use crate::error::{cap, Error, Result};
use crate::extremality::completely_relatively_maximal;
use crate::operator::{is_right_absorbing, separates_points, Builtin, PreclosureOp, Separation, TABLE_CAP};
use crate::points::{attaching_points, compact_points, copoints, extreme_points, kit_points, Context, Order};
use crate::qoset::{fixtures, Dir, Qoset, Structure, FILTER_CAP};
use crate::subset::Subset;

/// Limit on candidate antichains examined by the uniqueness check.
pub const ANTICHAIN_SEARCH_LIMIT: u64 = 1 << 20;
/// Largest integer accepted by [`factor_divisor_lattice`].
pub const FACTOR_MAX: u64 = 1_000_000;
/// Largest divisor count accepted by [`factor_divisor_lattice`].
pub const DIVISOR_CAP: usize = 64;

/// `c(K) = c(ex K)`
pub fn has_kmp(ctx: &Context, k: Subset) -> bool {
    ctx.op().eval(k) == ctx.op().eval(extreme_points(ctx, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generation {
    /// Every `x ∈ K` lies in `(↓x ∩ A)∨`.
    SupGen,
    /// Every `x ∈ K` lies in `(↑x ∩ A)∧`.
    InfGen,
}

pub fn generates(q: &Qoset, a: Subset, k: Subset, dir: Generation) -> Result<bool> {
    if !a.is_subset(k) {
        return Err(Error::Precondition(format!("{a} is not contained in {k}")));
    }
    Ok(k.iter().all(|x| match dir {
        Generation::SupGen => q.sup_set(q.down_of(x).inter(a)).contains(x),
        Generation::InfGen => q.inf_set(q.up_of(x).inter(a)).contains(x),
    }))
}

/// Sup-generation through the Dedekind–MacNeille order convolution: `K ⊆ d↑(A)`.
pub fn sup_generates_via_dm(q: &Qoset, a: Subset, k: Subset) -> Result<bool> {
    let d_up = conv_order(&PreclosureOp::builtin(Builtin::Dm, q), q, Dir::Up)?;
    Ok(k.is_subset(d_up.eval(a)))
}

/// Per-element outcome of an inf-generation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationWitness {
    pub element: usize,
    /// `↑x ∩ A`, whose inf should contain `x`.
    pub generators: Subset,
    pub holds: bool,
}

/// Verdicts of a representation check on `S ⊆ Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfGenVerdict {
    /// Generators: elements of `S` maximal in `S ∖ T` for a filter `T` of `Q`
    /// (for rep2, for a principal filter `↑y` of `Q`).
    pub generators: Subset,
    /// Every `x ∈ S` is in `(↑x ∩ generators)∧`, infs taken in `Q`.
    pub holds: bool,
    pub witnesses: Vec<GenerationWitness>,
    /// Same check with `S` as a qoset in its own right: generators and infs in `S`.
    pub induced_generators: Subset,
    pub induced_holds: bool,
    /// Generators of the induced qoset `S` with infs taken in `Q`; reported for comparison.
    pub mixed_holds: bool,
}

fn inf_witnesses(q: &Qoset, s: Subset, gens: Subset) -> Vec<GenerationWitness> {
    s.iter()
        .map(|x| {
            let generators = q.up_of(x).inter(gens);
            GenerationWitness { element: x, generators, holds: q.inf_set(generators).contains(x) }
        })
        .collect()
}

fn lift(idx: &[usize], s: Subset) -> Subset {
    s.iter().map(|i| idx[i]).collect()
}

fn rep_check(q: &Qoset, s: Subset, complete: bool) -> Result<InfGenVerdict> {
    cap("representation check", q.size(), FILTER_CAP)?;
    let gens = if complete {
        (0..q.size()).fold(Subset::EMPTY, |acc, y| acc.union(q.max_of(s.minus(q.up_of(y)))))
    } else {
        q.filters()?.into_iter().fold(Subset::EMPTY, |acc, t| acc.union(q.max_of(s.minus(t))))
    };
    let witnesses = inf_witnesses(q, s, gens);
    let holds = witnesses.iter().all(|w| w.holds);

    let (sq, idx) = q.restrict(s);
    let local = if complete {
        completely_relatively_maximal(&sq)
    } else {
        crate::extremality::relatively_maximal(&sq)?
    };
    let induced_holds = inf_witnesses(&sq, sq.full(), local).iter().all(|w| w.holds);
    let induced_generators = lift(&idx, local);
    let mixed_holds = inf_witnesses(q, s, induced_generators).iter().all(|w| w.holds);
    Ok(InfGenVerdict { generators: gens, holds, witnesses, induced_generators, induced_holds, mixed_holds })
}

/// Inf-generation of `S` by its relatively-maximal elements.
///
/// On a finite carrier with the Alexandrov topology every principal filter is open and
/// every subset is strongly chain-complete, so the hypotheses hold and only the
/// conclusion is checked.
pub fn rep1(q: &Qoset, s: Subset) -> Result<InfGenVerdict> {
    rep_check(q, s, false)
}

/// Inf-generation of `S` by its completely relatively-maximal elements.
pub fn rep2(q: &Qoset, s: Subset) -> Result<InfGenVerdict> {
    rep_check(q, s, true)
}

/// Outcome of the kit-point representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationResult {
    pub kit_set: Subset,
    pub compact: Subset,
    /// `c↑(kit) = kit`
    pub kit_closed: bool,
    /// `kit = c↑(ex_{c↑} kit)`
    pub kmp_holds: bool,
    /// `Y_x` for every kit point `x`.
    pub antichains: BTreeMap<usize, Subset>,
    /// Each `Y_x` is an antichain of compact points with `x ∈ c(Y_x) ∩ Y_x↑`.
    pub antichains_ok: bool,
    /// Every other such antichain equals `Y_x` up to order-equivalence.
    pub uniqueness_ok: bool,
    /// `x ∈ Y_x∨`, present when the operator separates points.
    pub sup_ok: Option<bool>,
}

impl RepresentationResult {
    pub fn all_ok(&self) -> bool {
        self.kit_closed && self.kmp_holds && self.antichains_ok && self.uniqueness_ok && self.sup_ok != Some(false)
    }
}

fn require_closure(op: &PreclosureOp) -> Result<()> {
    if op.known_idempotent() {
        return Ok(());
    }
    if op.size() <= TABLE_CAP && op.validate()?.is_idempotent {
        return Ok(());
    }
    Err(Error::Precondition(format!("{} is not known to be idempotent", op.name())))
}

/// Antichain representation of the kit points, built from one compact attaching
/// point per copoint.
pub fn rep3(ctx: &Context) -> Result<RepresentationResult> {
    if ctx.order() != Order::Primary {
        return Err(Error::Precondition("the kit representation needs the primary order".into()));
    }
    let q = ctx.qoset();
    let c = ctx.op();
    require_closure(c)?;
    if !is_right_absorbing(q, c, Dir::Down)? {
        return Err(Error::Precondition(format!("{} images are not lower sets", c.name())));
    }
    let kit = kit_points(ctx)?;
    let compact = compact_points(ctx, ctx.full());
    let c_up = conv_order(c, q, Dir::Up)?;
    let up_ctx = Context::new(q, &c_up, Order::Equivalence)?;
    let kit_closed = c_up.eval(kit) == kit;
    let kmp_holds = c_up.eval(extreme_points(&up_ctx, kit)) == kit;
    let separating = separates_points(q, c, Separation::Forward)?;

    let mut antichains = BTreeMap::new();
    let mut antichains_ok = true;
    let mut uniqueness_ok = true;
    let mut sup_ok = separating.then_some(true);
    for x in kit.iter() {
        let mut y = Subset::EMPTY;
        for v in copoints(ctx, x)? {
            let pick = attaching_points(ctx, v)?.inter(compact).first();
            if let Some(p) = pick {
                y = y.with(p);
            }
        }
        let represents = |z: Subset| c.eval(z).contains(x) && q.bounds(z, crate::qoset::Bound::Upper).contains(x);
        antichains_ok &= q.is_structure(y, Structure::Antichain) && y.is_subset(compact) && represents(y);

        let candidates = compact.inter(q.down_of(x));
        if candidates.len() as u64 > 63 || (1u64 << candidates.len()) > ANTICHAIN_SEARCH_LIMIT {
            return Err(Error::SearchLimit { limit: ANTICHAIN_SEARCH_LIMIT });
        }
        for z in candidates.submasks() {
            if q.is_structure(z, Structure::Antichain) && represents(z) {
                uniqueness_ok &= q.saturate(z) == q.saturate(y) && z.len() == y.len();
            }
        }
        if let Some(ok) = sup_ok.as_mut() {
            *ok &= q.sup_set(y).contains(x);
        }
        antichains.insert(x, y);
    }
    Ok(RepresentationResult { kit_set: kit, compact, kit_closed, kmp_holds, antichains, antichains_ok, uniqueness_ok, sup_ok })
}

/// Kit representation of the divisor lattice of `m` under divisibility with `dm`.
#[derive(Clone, Debug, Serialize)]
pub struct Factorization {
    pub m: u64,
    pub divisors: Vec<u64>,
    /// `Y_d` as divisor values for every divisor `d`, listed by increasing least prime factor.
    pub antichains: Vec<(u64, Vec<u64>)>,
    /// `Y_m`
    pub top: Vec<u64>,
    /// The prime-power factors `p^e` of `m` from trial division.
    pub prime_powers: Vec<u64>,
    pub matches_trial_division: bool,
    pub result: RepresentationResult,
}

fn least_prime(v: u64) -> u64 {
    crate::factorize(v).first().map_or(1, |&(p, _)| p)
}

pub fn factor_divisor_lattice(m: u64) -> Result<Factorization> {
    if m == 0 || m > FACTOR_MAX {
        return Err(Error::IntegerRange(m));
    }
    let divisor_count = crate::divisors_of(m).len();
    if divisor_count > DIVISOR_CAP {
        return Err(Error::TooManyDivisors(m));
    }
    let (q, divs) = fixtures::divisors(m);
    let op = PreclosureOp::builtin(Builtin::Dm, &q);
    let ctx = Context::new(&q, &op, Order::Primary)?;
    let result = rep3(&ctx)?;
    let values = |s: &Subset| {
        let mut v: Vec<u64> = s.iter().map(|i| divs[i]).collect();
        v.sort_by_key(|&d| (least_prime(d), d));
        v
    };
    let antichains: Vec<(u64, Vec<u64>)> =
        result.antichains.iter().map(|(&x, y)| (divs[x], values(y))).collect();
    let top = result
        .antichains
        .get(&(divs.len() - 1))
        .map(values)
        .unwrap_or_default();
    let prime_powers: Vec<u64> = crate::factorize(m).iter().map(|&(p, e)| p.pow(e)).collect();
    let matches_trial_division = top == prime_powers;
    Ok(Factorization { m, divisors: divs, antichains, top, prime_powers, matches_trial_division, result })
}

/// Hypothesis and conclusion of the Krein–Milman transfer for each `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferCase {
    pub k: Subset,
    /// Every `K ∖ V` has the `c`-KMp.
    pub hypothesis: bool,
    /// `K` has the `c_V`-KMp.
    pub conclusion: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferVerdict {
    pub cases: Vec<TransferCase>,
    pub hypothesis: bool,
    pub conclusion: bool,
    /// Number of `K` whose hypothesis holds while the conclusion fails.
    pub violations: usize,
}

/// Checks the transfer implication for each `K` in `kcoll` and for the whole collection.
/// Every member of `family` must be order-saturated.
pub fn transfer_check(ctx: &Context, family: &[Subset], kcoll: &[Subset]) -> Result<TransferVerdict> {
    let q = ctx.qoset();
    if let Some(v) = family.iter().find(|v| q.saturate(**v) != **v) {
        return Err(Error::Precondition(format!("family member {v} is not order-saturated")));
    }
    let t = conv_family(ctx.op(), family)?;
    let t_ctx = Context::new(q, &t, ctx.order())?;
    let cases: Vec<TransferCase> = kcoll
        .iter()
        .map(|&k| TransferCase {
            k,
            hypothesis: family.iter().all(|&v| has_kmp(ctx, k.minus(v))),
            conclusion: has_kmp(&t_ctx, k),
        })
        .collect();
    let hypothesis = cases.iter().all(|c| c.hypothesis);
    let conclusion = cases.iter().all(|c| c.conclusion);
    let violations = cases.iter().filter(|c| c.hypothesis && !c.conclusion).count();
    Ok(TransferVerdict { cases, hypothesis, conclusion, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qoset::fixtures::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_divisor_lattice(360).unwrap().top, vec![8, 9, 5]);
        assert_eq!(factor_divisor_lattice(12).unwrap().top, vec![4, 3]);
        let one = factor_divisor_lattice(1).unwrap();
        assert!(one.top.is_empty() && one.result.all_ok());
        assert_eq!(factor_divisor_lattice(0).unwrap_err(), Error::IntegerRange(0));
        assert_eq!(factor_divisor_lattice(720720).unwrap_err(), Error::TooManyDivisors(720720));
    }

    #[test]
    fn d12_antichains() {
        let f = factor_divisor_lattice(12).unwrap();
        let get = |d: u64| f.antichains.iter().find(|(x, _)| *x == d).unwrap().1.clone();
        assert_eq!(get(6), vec![2, 3]);
        assert_eq!(get(4), vec![4]);
        assert!(get(1).is_empty());
        assert!(f.result.uniqueness_ok && f.result.sup_ok == Some(true));
    }

    #[test]
    fn kmp_examples() {
        let c3 = chain(3);
        let down = PreclosureOp::builtin(Builtin::Down, &c3);
        let ctx = Context::new(&c3, &down, Order::Equivalence).unwrap();
        assert!(has_kmp(&ctx, s(&[0, 1])));
        let t = conv_family(&down, &c3.filters().unwrap()).unwrap();
        let tctx = Context::new(&c3, &t, Order::Equivalence).unwrap();
        assert!(has_kmp(&tctx, c3.full()));
        assert_eq!(extreme_points(&tctx, c3.full()), s(&[0, 1]));
    }

    #[test]
    fn generation_examples() {
        let (q, _) = divisors(12);
        // 2, 3, 4 sit at indices 1, 2, 3
        assert!(generates(&q, s(&[1, 2, 3]), q.full(), Generation::SupGen).unwrap());
        assert!(sup_generates_via_dm(&q, s(&[1, 2, 3]), q.full()).unwrap());
        assert!(generates(&m4(), s(&[1, 2]), m4().full(), Generation::InfGen).unwrap());
        assert!(!generates(&p4(), s(&[2]), p4().full(), Generation::InfGen).unwrap());
    }

    #[test]
    fn rep_examples() {
        assert!(rep1(&m4(), m4().full()).unwrap().holds);
        let r = rep1(&chain(3), chain(3).full()).unwrap();
        assert!(r.holds && r.generators == s(&[0, 1]));
        let r = rep1(&p4(), s(&[0, 2, 3])).unwrap();
        assert!(r.holds && r.induced_holds && !r.mixed_holds);
    }

    #[test]
    fn transfer_examples() {
        let c3 = chain(3);
        let ctx = Context::new(&c3, &PreclosureOp::builtin(Builtin::Down, &c3), Order::Equivalence).unwrap();
        let v = transfer_check(&ctx, &[s(&[1, 2])], &[c3.full()]).unwrap();
        assert!(v.hypothesis && v.conclusion);
        let v = transfer_check(&ctx, &[s(&[1, 2])], &[]).unwrap();
        assert!(v.hypothesis && v.conclusion && v.violations == 0);
    }
}
