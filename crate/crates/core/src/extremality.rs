//! Irreducible, relatively-maximal and strongly irreducible elements, their
//! "completely" variants, and the closure operators that characterise them.

use serde::Serialize;

use crate::convolution::{conv_family, conv_order};
use crate::error::{cap, Result};
use crate::operator::{Builtin, PreclosureOp};
use crate::points::{extreme_points, Context, Order};
use crate::qoset::{Dir, Qoset, Structure, EXHAUSTIVE_CAP, FILTER_CAP};
use crate::subset::Subset;

/// `x ∈ F∧ ⇒ x ∈ [F]` for every `F`, empty included. Only `F ⊆ ↑x` can have `x` as an
/// inf, so those are the subsets scanned.
pub fn irreducible(q: &Qoset) -> Result<Subset> {
    let mut out = Subset::EMPTY;
    for x in 0..q.size() {
        let up = q.up_of(x);
        cap("irreducibility scan", up.len(), EXHAUSTIVE_CAP)?;
        let reducible = up
            .submasks()
            .any(|f| q.inf_set(f).contains(x) && !q.saturate(f).contains(x));
        if !reducible {
            out = out.with(x);
        }
    }
    Ok(out)
}

/// `x ∈ B∧ ⇒ x ∈ [B]` for every subset `B`. A violating `B` lies inside `⇑x`, and then
/// `⇑x` violates too, so `x ∉ (⇑x)∧` decides it.
pub fn completely_irreducible(q: &Qoset) -> Subset {
    (0..q.size()).filter(|&x| !q.inf_set(q.strict_up(x)).contains(x)).collect()
}

/// `x ∈ Max(P ∖ T)` for some filter `T`, scanning the enumerated filters.
pub fn relatively_maximal(q: &Qoset) -> Result<Subset> {
    let full = q.full();
    Ok(q.filters()?
        .into_iter()
        .fold(Subset::EMPTY, |acc, t| acc.union(q.max_of(full.minus(t)))))
}

/// `x ∈ Max(P ∖ ↑y)` for some `y`.
pub fn completely_relatively_maximal(q: &Qoset) -> Subset {
    let full = q.full();
    (0..q.size()).fold(Subset::EMPTY, |acc, y| acc.union(q.max_of(full.minus(q.up_of(y)))))
}

/// `⇑x` is a filter (nonempty, upper and filtered).
pub fn strongly_irreducible(q: &Qoset) -> Subset {
    (0..q.size())
        .filter(|&x| q.is_structure(q.strict_up(x), Structure::Filter))
        .collect()
}

/// `⇑x = ↑y` for some `y`.
pub fn strongly_completely_irreducible(q: &Qoset) -> Subset {
    (0..q.size())
        .filter(|&x| {
            let su = q.strict_up(x);
            (0..q.size()).any(|y| q.up_of(y) == su)
        })
        .collect()
}

/// `⟨·⟩_T` with `T` the enumerated filters of `q`.
pub fn filter_closure(q: &Qoset) -> Result<PreclosureOp> {
    PreclosureOp::generated(q.size(), &q.filters()?)
}

/// Extreme points of `E` for `c`; they do not depend on the context order.
fn ex_of_carrier(q: &Qoset, c: &PreclosureOp) -> Result<Subset> {
    let ctx = Context::new(q, c, Order::Equivalence)?;
    Ok(extreme_points(&ctx, q.full()))
}

/// The six sets, their operator characterisations, and the consistency verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalityReport {
    pub irr: Subset,
    pub rmax: Subset,
    pub str_irr: Subset,
    pub c_irr: Subset,
    pub c_rmax: Subset,
    pub str_c_irr: Subset,
    /// Extreme points of `E` under the inf-closed hull.
    pub ex_hull: Subset,
    /// Extreme points of `E` under `(down)_T`, the filter family convolution.
    pub ex_filter_convolution: Subset,
    /// Extreme points of `E` under `p↓`.
    pub ex_ranzato: Subset,
    pub riesz: bool,
    pub hierarchy_ok: bool,
    pub characterisations_ok: bool,
}

pub fn hierarchy_report(q: &Qoset) -> Result<ExtremalityReport> {
    cap("extremality report", q.size(), FILTER_CAP)?;
    let irr = irreducible(q)?;
    let rmax = relatively_maximal(q)?;
    let str_irr = strongly_irreducible(q);
    let c_irr = completely_irreducible(q);
    let c_rmax = completely_relatively_maximal(q);
    let str_c_irr = strongly_completely_irreducible(q);
    let riesz = q.is_riesz()?;

    let hull = PreclosureOp::builtin(Builtin::H, q);
    let down = PreclosureOp::builtin(Builtin::Down, q);
    let t_family = conv_family(&down, &q.filters()?)?;
    let p_down = conv_order(&PreclosureOp::builtin(Builtin::RanzatoP, q), q, Dir::Down)?;
    let ex_hull = ex_of_carrier(q, &hull)?;
    let ex_filter_convolution = ex_of_carrier(q, &t_family)?;
    let ex_ranzato = ex_of_carrier(q, &p_down)?;

    let mut hierarchy_ok = str_irr.is_subset(rmax)
        && rmax.is_subset(irr)
        && rmax == irr
        && str_c_irr.is_subset(c_rmax)
        && c_rmax.is_subset(c_irr)
        && str_irr == str_c_irr;
    if riesz {
        hierarchy_ok &= str_irr == irr;
    }
    let characterisations_ok =
        ex_hull == irr && ex_filter_convolution == rmax && ex_ranzato == str_c_irr;
    Ok(ExtremalityReport {
        irr,
        rmax,
        str_irr,
        c_irr,
        c_rmax,
        str_c_irr,
        ex_hull,
        ex_filter_convolution,
        ex_ranzato,
        riesz,
        hierarchy_ok,
        characterisations_ok,
    })
}

/// `⟨A⟩_H`, `⟨A⟩_T↓` and `p↓(A)` with the inclusions between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureChain {
    pub hull: Subset,
    pub filter_down: Subset,
    pub ranzato_down: Subset,
    pub riesz: bool,
    /// `⟨A⟩_H = ⟨A⟩_T↓`, which holds on every finite qoset.
    pub hull_eq_filter_down: bool,
    pub filter_down_in_ranzato_down: bool,
    /// `⟨A⟩_H = p↓(A)`; only required when the qoset is Riesz.
    pub hull_eq_ranzato_down: bool,
    pub ok: bool,
}

pub fn closure_chain_check(q: &Qoset, a: Subset) -> Result<ClosureChain> {
    cap("closure chain", q.size(), FILTER_CAP)?;
    let hull = PreclosureOp::builtin(Builtin::H, q).eval(a);
    let filter_down = conv_order(&PreclosureOp::builtin(Builtin::T, q), q, Dir::Down)?.eval(a);
    let ranzato_down = conv_order(&PreclosureOp::builtin(Builtin::RanzatoP, q), q, Dir::Down)?.eval(a);
    let riesz = q.is_riesz()?;
    let hull_eq_filter_down = hull == filter_down;
    let filter_down_in_ranzato_down = filter_down.is_subset(ranzato_down);
    let hull_eq_ranzato_down = hull == ranzato_down;
    let ok = hull_eq_filter_down && filter_down_in_ranzato_down && (!riesz || hull_eq_ranzato_down);
    Ok(ClosureChain {
        hull,
        filter_down,
        ranzato_down,
        riesz,
        hull_eq_filter_down,
        filter_down_in_ranzato_down,
        hull_eq_ranzato_down,
        ok,
    })
}
