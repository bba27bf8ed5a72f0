//! Copoints, compact, extreme and kit points, way-below, operator classes and
//! the Carathéodory number of an operator on a qoset.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operator::{PreclosureOp, CLOSED_SET_BOUND};
use crate::qoset::{Dir, Qoset};
use crate::subset::Subset;

/// Which relation the point notions use: the order itself or its equivalence `∼`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Primary,
    Equivalence,
}

/// Limit on the lower sets scanned by the distributivity check.
pub const LOWER_SET_LIMIT: usize = 1 << 20;
/// Limit on the nodes visited while searching for minimal generators.
pub const GENERATOR_NODE_LIMIT: u64 = 1 << 24;

/// A qoset, an operator on it and the order the point notions are computed against.
#[derive(Clone, Debug)]
pub struct Context {
    qoset: Qoset,
    op: PreclosureOp,
    order: Order,
    working: Qoset,
    closed: OnceLock<std::result::Result<Vec<Subset>, Error>>,
}

impl Context {
    pub fn new(qoset: &Qoset, op: &PreclosureOp, order: Order) -> Result<Context> {
        if qoset.size() != op.size() {
            return Err(Error::CarrierMismatch { left: qoset.size(), right: op.size() });
        }
        let working = match order {
            Order::Primary => qoset.clone(),
            Order::Equivalence => qoset.equivalence(),
        };
        Ok(Context { qoset: qoset.clone(), op: op.clone(), order, working, closed: OnceLock::new() })
    }

    pub fn qoset(&self) -> &Qoset {
        &self.qoset
    }

    pub fn op(&self) -> &PreclosureOp {
        &self.op
    }

    pub fn order(&self) -> Order {
        self.order
    }

    /// The qoset whose cones the point notions use: the order, or `∼` as a qoset.
    pub fn working_order(&self) -> &Qoset {
        &self.working
    }

    pub fn size(&self) -> usize {
        self.qoset.size()
    }

    pub fn full(&self) -> Subset {
        self.qoset.full()
    }

    pub fn closed_sets(&self) -> Result<&[Subset]> {
        self.closed
            .get_or_init(|| self.op.closed_sets_bounded(CLOSED_SET_BOUND))
            .as_deref()
            .map_err(Clone::clone)
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x >= self.size() {
            return Err(Error::IndexOutOfRange { index: x, size: self.size() });
        }
        Ok(())
    }
}

/// Inclusion-maximal closed sets avoiding `x`, in bitmask order.
pub fn copoints(ctx: &Context, x: usize) -> Result<Vec<Subset>> {
    ctx.check_index(x)?;
    let avoiding: Vec<Subset> = ctx.closed_sets()?.iter().copied().filter(|v| !v.contains(x)).collect();
    Ok(maximal_sets(&avoiding))
}

/// Copoints of every element.
pub fn all_copoints(ctx: &Context) -> Result<Vec<Vec<Subset>>> {
    (0..ctx.size()).map(|x| copoints(ctx, x)).collect()
}

fn maximal_sets(family: &[Subset]) -> Vec<Subset> {
    let mut by_size = family.to_vec();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<Subset> = Vec::new();
    for s in by_size {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// `{x : V is a copoint of x}`. `V` must be closed.
///
/// Uses that `V` is maximal closed avoiding `x` exactly when `x` enters the
/// closure of `V ∪ {y}` for every `y ∉ V`.
pub fn attaching_points(ctx: &Context, v: Subset) -> Result<Subset> {
    if !ctx.op.is_closed(v) {
        return Err(Error::NotClosed(v.to_string()));
    }
    let hull = ctx.op.idempotent_hull();
    let outside = v.complement(ctx.size());
    let mut candidates = outside;
    for y in outside.iter() {
        candidates = candidates.inter(hull.eval(v.with(y)));
    }
    Ok(candidates)
}

/// `{x ∈ A : x ∉ c(A ∖ ↑x)}`, with `↑` taken in the context order.
pub fn compact_points(ctx: &Context, a: Subset) -> Subset {
    a.iter()
        .filter(|&x| !ctx.op.eval(a.minus(ctx.working.up_of(x))).contains(x))
        .collect()
}

/// `{x ∈ A : x ∉ c(A ∖ [x])}`
pub fn extreme_points(ctx: &Context, a: Subset) -> Subset {
    a.iter()
        .filter(|&x| !ctx.op.eval(a.minus(ctx.qoset.class(x))).contains(x))
        .collect()
}

/// Maximal elements of `A` in the context order; all of `A` under `∼`.
pub fn context_maximal(ctx: &Context, a: Subset) -> Subset {
    ctx.working.max_of(a)
}

/// Elements each of whose copoints has a compact attaching point.
pub fn kit_points(ctx: &Context) -> Result<Subset> {
    let compact = compact_points(ctx, ctx.full());
    let mut kit = Subset::EMPTY;
    for x in 0..ctx.size() {
        let mut ok = true;
        for v in copoints(ctx, x)? {
            if !attaching_points(ctx, v)?.intersects(compact) {
                ok = false;
                break;
            }
        }
        if ok {
            kit = kit.with(x);
        }
    }
    Ok(kit)
}

fn require_primary(ctx: &Context, what: &str) -> Result<()> {
    if ctx.order != Order::Primary {
        return Err(Error::Precondition(format!("{what} is only computed over the primary order")));
    }
    Ok(())
}

/// `x ≪ y`: every `A` with `y ∈ c(A)` meets `↑x`. The largest `A` missing `↑x` is
/// `E ∖ ↑x`, so by monotonicity one evaluation decides it.
pub fn way_below(ctx: &Context, x: usize, y: usize) -> Result<bool> {
    require_primary(ctx, "way-below")?;
    ctx.check_index(x)?;
    ctx.check_index(y)?;
    let rest = ctx.full().minus(ctx.qoset.up_of(x));
    Ok(!ctx.op.eval(rest).contains(y))
}

/// `⇓x = {y : y ≪ x}`
pub fn wdown(ctx: &Context, x: usize) -> Result<Subset> {
    require_primary(ctx, "way-below")?;
    ctx.check_index(x)?;
    let mut out = Subset::EMPTY;
    for y in 0..ctx.size() {
        if way_below(ctx, y, x)? {
            out = out.with(y);
        }
    }
    Ok(out)
}

/// Operator classes. `continuous` and `algebraic` are `None` outside primary contexts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub continuous: Option<bool>,
    pub algebraic: Option<bool>,
    pub distributive: bool,
    pub kitted: bool,
    /// Every element has finitely many copoints, which holds on any finite carrier;
    /// `copoint_counts` gives the numbers.
    pub local: bool,
    pub copoint_counts: Vec<usize>,
}

/// `x ∈ c(A) ⇒ x ∈ c(↓x ∩ ↓A)` for all `x` and `A`.
///
/// Both sides are unchanged when `A` is replaced by `↓A`, except that `c(A) ⊆ c(↓A)`,
/// so lower sets suffice.
pub fn is_distributive(ctx: &Context) -> Result<bool> {
    let w = &ctx.working;
    for l in w.lower_sets(LOWER_SET_LIMIT)? {
        let cl = ctx.op.eval(l);
        for x in cl.iter() {
            if !ctx.op.eval(w.down_of(x).inter(l)).contains(x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn classify_op(ctx: &Context) -> Result<Classification> {
    let counts: Vec<usize> = all_copoints(ctx)?.iter().map(Vec::len).collect();
    let kitted = kit_points(ctx)? == ctx.full();
    let distributive = is_distributive(ctx)?;
    let (continuous, algebraic) = if ctx.order == Order::Primary {
        let cp = compact_points(ctx, ctx.full());
        let mut cont = true;
        let mut alg = true;
        for x in 0..ctx.size() {
            let wd = wdown(ctx, x)?;
            cont &= ctx.op.eval(wd).contains(x);
            alg &= ctx.op.eval(ctx.qoset.cone(wd.inter(cp), Dir::Down)).contains(x);
        }
        (Some(cont), Some(alg))
    } else {
        (None, None)
    };
    Ok(Classification { continuous, algebraic, distributive, kitted, local: true, copoint_counts: counts })
}

/// Largest size of an inclusion-minimal `F` with `x ∈ c(F)`, over all `x`.
///
/// Closure operators go through copoints: `F` generates `x` exactly when it meets the
/// complement of every copoint of `x`, so minimal generators are minimal transversals.
/// Other operators use [`caratheodory_by_search`].
pub fn caratheodory(ctx: &Context) -> Result<usize> {
    if ctx.op.known_idempotent() {
        caratheodory_by_copoints(ctx)
    } else {
        caratheodory_by_search(ctx, GENERATOR_NODE_LIMIT)
    }
}

/// Carathéodory number from minimal transversals of the copoint complements.
/// Only meaningful for closure operators.
pub fn caratheodory_by_copoints(ctx: &Context) -> Result<usize> {
    let n = ctx.size();
    let base = ctx.op.eval(Subset::EMPTY);
    let mut best = 0;
    for x in 0..n {
        if base.contains(x) {
            continue;
        }
        let edges: Vec<Subset> = copoints(ctx, x)?.iter().map(|v| v.complement(n)).collect();
        best = best.max(max_minimal_transversal(&edges, n));
    }
    Ok(best)
}

fn max_minimal_transversal(edges: &[Subset], n: usize) -> usize {
    fn rec(edges: &[Subset], n: usize, start: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        let covered = |except: Option<usize>| {
            edges
                .iter()
                .filter(|e| chosen.iter().any(|&f| Some(f) != except && e.contains(f)))
                .count()
        };
        if covered(None) == edges.len() {
            let minimal = chosen.iter().all(|&f| covered(Some(f)) < edges.len());
            if minimal {
                *best = (*best).max(chosen.len());
            }
            return;
        }
        for e in start..n {
            // An element of a minimal transversal has a private edge, which is still uncovered when it is added.
            let new_edge = edges.iter().any(|ed| ed.contains(e) && !chosen.iter().any(|&f| ed.contains(f)));
            if new_edge {
                chosen.push(e);
                rec(edges, n, e + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    rec(edges, n, 0, &mut Vec::new(), &mut best);
    best
}

/// Carathéodory number by walking the non-generating sets of each `x` as a
/// set-enumeration tree; each minimal generator `F` is met as `G ∪ {max F}`.
pub fn caratheodory_by_search(ctx: &Context, node_limit: u64) -> Result<usize> {
    let n = ctx.size();
    let mut nodes = 0u64;
    let mut best = 0usize;
    for x in 0..n {
        if ctx.op.eval(Subset::EMPTY).contains(x) {
            continue;
        }
        let mut stack = vec![(Subset::EMPTY, 0usize)];
        while let Some((g, start)) = stack.pop() {
            nodes += 1;
            if nodes > node_limit {
                return Err(Error::SearchLimit { limit: node_limit });
            }
            for e in start..n {
                let f = g.with(e);
                if ctx.op.eval(f).contains(x) {
                    if f.len() > best && f.iter().all(|y| !ctx.op.eval(f.without(y)).contains(x)) {
                        best = f.len();
                    }
                } else {
                    stack.push((f, e + 1));
                }
            }
        }
    }
    Ok(best)
}

/// Point-level summary of a context.
#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub order: Order,
    pub copoints: Vec<Vec<Subset>>,
    pub compact: Subset,
    pub extreme: Vec<(Subset, Subset)>,
    pub kit: Subset,
    pub caratheodory: usize,
    pub class_flags: Classification,
}

/// Builds a [`PointReport`]; `queries` are the sets whose extreme points are listed.
pub fn point_report(ctx: &Context, queries: &[Subset]) -> Result<PointReport> {
    Ok(PointReport {
        order: ctx.order,
        copoints: all_copoints(ctx)?,
        compact: compact_points(ctx, ctx.full()),
        extreme: queries.iter().map(|&a| (a, extreme_points(ctx, a))).collect(),
        kit: kit_points(ctx)?,
        caratheodory: caratheodory(ctx)?,
        class_flags: classify_op(ctx)?,
    })
}
