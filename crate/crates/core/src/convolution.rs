//! The convolution product of preclosure operators and its order and family variants.

use crate::error::{cap, Error, Result};
use crate::operator::{is_right_absorbing, same_carrier, separates_points, PreclosureOp, Repr, Separation, Strategy};
use crate::qoset::{Bound, Dir, Qoset, EXHAUSTIVE_CAP};
use crate::subset::Subset;

/// `c ∗ s`
pub fn convolve(c: &PreclosureOp, s: &PreclosureOp) -> Result<PreclosureOp> {
    same_carrier(c, s)?;
    Ok(PreclosureOp::from_repr(c.size(), Repr::Convolve(c.clone(), s.clone())))
}

/// `(c ∗ s)(A) = ∩_{B ⊆ A} c(B) ∪ s(A∖B)`.
/// The running intersection never drops below `A`, so reaching `A` ends the scan.
pub(crate) fn eval_convolve(c: &PreclosureOp, s: &PreclosureOp, a: Subset) -> Subset {
    let mut acc = c.full();
    for b in a.submasks() {
        acc = acc.inter(c.eval(b).union(s.eval(a.minus(b))));
        if acc == a {
            break;
        }
    }
    acc
}

/// `c↑ = c ∗ ↑·` (`Up`) or `c↓ = c ∗ ↓·` (`Down`), with the fastest valid strategy.
///
/// The inner and pointwise forms need every `c(A)` to be a lower set for `Up`
/// (an upper set for `Down`). That is taken from the operator's construction when
/// known, checked exhaustively on small carriers, and otherwise the definitional
/// product is used.
pub fn conv_order(c: &PreclosureOp, q: &Qoset, dir: Dir) -> Result<PreclosureOp> {
    let absorbs = match c.known_right_absorbing(q, dir.flip()) {
        Some(k) => k,
        None if q.size() <= EXHAUSTIVE_CAP => is_right_absorbing(q, c, dir.flip())?,
        None => false,
    };
    let strategy = if absorbs { Strategy::Pointwise } else { Strategy::Definitional };
    conv_order_with(c, q, dir, strategy)
}

/// [`conv_order`] with an explicit strategy; the inner and pointwise forms are refused
/// when the absorption precondition fails.
pub fn conv_order_with(c: &PreclosureOp, q: &Qoset, dir: Dir, strategy: Strategy) -> Result<PreclosureOp> {
    if q.size() != c.size() {
        return Err(Error::CarrierMismatch { left: c.size(), right: q.size() });
    }
    if strategy != Strategy::Definitional && !is_right_absorbing(q, c, dir.flip())? {
        return Err(Error::Precondition(format!(
            "{} images are not {} sets, so the {:?} form does not apply",
            c.name(),
            match dir {
                Dir::Up => "lower",
                Dir::Down => "upper",
            },
            strategy
        )));
    }
    Ok(PreclosureOp::from_repr(
        c.size(),
        Repr::ConvOrder { c: c.clone(), q: q.clone(), dir, strategy },
    ))
}

pub(crate) fn eval_order(c: &PreclosureOp, q: &Qoset, dir: Dir, strategy: Strategy, a: Subset) -> Subset {
    match strategy {
        Strategy::Definitional => {
            let mut acc = q.full();
            for b in a.submasks() {
                acc = acc.inter(c.eval(b).union(q.cone(a.minus(b), dir)));
                if acc == a {
                    break;
                }
            }
            acc
        }
        Strategy::Inner => {
            let bound = match dir {
                Dir::Up => Bound::Upper,
                Dir::Down => Bound::Lower,
            };
            a.submasks()
                .fold(Subset::EMPTY, |acc, b| acc.union(c.eval(b).inter(q.bounds(b, bound))))
        }
        Strategy::Pointwise => (0..q.size())
            .filter(|&x| {
                let cone = match dir {
                    Dir::Up => q.down_of(x),
                    Dir::Down => q.up_of(x),
                };
                c.eval(a.inter(cone)).contains(x)
            })
            .collect(),
    }
}

/// `c_V(A) = ∩_{V ∈ family} V ∪ c(A∖V)`; `E` for an empty family.
pub fn conv_family(c: &PreclosureOp, family: &[Subset]) -> Result<PreclosureOp> {
    let full = c.full();
    if let Some(bad) = family.iter().find(|v| !v.is_subset(full)) {
        return Err(Error::Input(format!("family member {bad} leaves the carrier")));
    }
    let mut fam = family.to_vec();
    fam.sort();
    fam.dedup();
    Ok(PreclosureOp::from_repr(c.size(), Repr::ConvFamily(c.clone(), fam)))
}

pub(crate) fn eval_family(c: &PreclosureOp, family: &[Subset], a: Subset) -> Subset {
    let mut acc = c.full();
    for &v in family {
        acc = acc.inter(v.union(c.eval(a.minus(v))));
        if acc == a {
            break;
        }
    }
    acc
}

/// `∪ {B∨ : B ⊆ A, B has a sup in c(B)}`, the sup form of `c↑(A)` for point-separating `c`.
pub fn sup_inner(c: &PreclosureOp, q: &Qoset, a: Subset) -> Result<Subset> {
    if !separates_points(q, c, Separation::Forward)? {
        return Err(Error::Precondition(format!("{} does not separate points", c.name())));
    }
    cap("sup form", a.len(), EXHAUSTIVE_CAP)?;
    Ok(a.submasks().fold(Subset::EMPTY, |acc, b| {
        let sups = q.sup_set(b);
        if sups.intersects(c.eval(b)) {
            acc.union(sups)
        } else {
            acc
        }
    }))
}
