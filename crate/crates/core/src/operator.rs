//! Preclosure operators: representations, evaluation, validation and closed sets.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{cap, Error, Result};
use crate::qoset::{Bound, Dir, Qoset, EXHAUSTIVE_CAP};
use crate::subset::{Subset, MAX_CARRIER};

/// Cap for operators stored as an explicit table of images.
pub const TABLE_CAP: usize = 16;
/// Default bound on the number of closed sets an enumeration may produce.
pub const CLOSED_SET_BOUND: usize = 4096;
/// Carriers up to this size get the literal finitary-union check in [`PreclosureOp::validate`].
const FINITARY_LITERAL_CAP: usize = 10;

/// The builtin operators attached to a qoset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Builtin {
    /// `A ↦ ↓A`
    Down,
    /// `A ↦ ↑A`
    Up,
    /// Dedekind–MacNeille: `A ↦ (A↑)↓`
    Dm,
    /// Generated by the inf-closed subsets.
    H,
    /// Generated by the upper inf-closed subsets.
    U,
    /// Generated by the filters.
    T,
    /// `p(B) = ∩_{y ∈ B↓} E∖⇓y`
    RanzatoP,
    /// `q(B) = ∩_{y ∈ B↑} E∖⇑y`
    RanzatoQ,
}

impl Builtin {
    pub const ALL: [Builtin; 8] = [
        Builtin::Down,
        Builtin::Up,
        Builtin::Dm,
        Builtin::H,
        Builtin::U,
        Builtin::T,
        Builtin::RanzatoP,
        Builtin::RanzatoQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Down => "down",
            Builtin::Up => "up",
            Builtin::Dm => "dm",
            Builtin::H => "H",
            Builtin::U => "U",
            Builtin::T => "T",
            Builtin::RanzatoP => "ranzato_p",
            Builtin::RanzatoQ => "ranzato_q",
        }
    }

    pub fn from_name(name: &str) -> Result<Builtin> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == name)
            .ok_or_else(|| Error::UnknownBuiltin(name.to_string()))
    }

    /// Directions in which every image is a lower set (`Down`) or an upper set (`Up`).
    fn absorbs(self, dir: Dir) -> bool {
        match dir {
            Dir::Down => matches!(self, Builtin::Down | Builtin::Dm | Builtin::RanzatoQ),
            Dir::Up => matches!(self, Builtin::Up | Builtin::T | Builtin::U | Builtin::RanzatoP),
        }
    }

    fn is_idempotent(self) -> bool {
        !matches!(self, Builtin::RanzatoP | Builtin::RanzatoQ)
    }

    fn eval(self, q: &Qoset, a: Subset) -> Subset {
        match self {
            Builtin::Down => q.cone(a, Dir::Down),
            Builtin::Up => q.cone(a, Dir::Up),
            Builtin::Dm => q.bounds(q.bounds(a, Bound::Upper), Bound::Lower),
            Builtin::H => inf_closed_hull(q, a, false),
            Builtin::U => inf_closed_hull(q, a, true),
            // Finite filters are principal, so the filters containing A are the ↑y with y ∈ A↓.
            Builtin::T => q
                .bounds(a, Bound::Lower)
                .iter()
                .fold(q.full(), |acc, y| acc.inter(q.up_of(y))),
            Builtin::RanzatoP => q
                .bounds(a, Bound::Lower)
                .iter()
                .fold(q.full(), |acc, y| acc.minus(q.strict_down(y))),
            Builtin::RanzatoQ => q
                .bounds(a, Bound::Upper)
                .iter()
                .fold(q.full(), |acc, y| acc.minus(q.strict_up(y))),
        }
    }
}

/// Least inf-closed (and, if `upper`, upper) superset of `a`.
/// `x` lies in some `F∧` with `F ⊆ S` exactly when `x ∈ (S ∩ ↑x)∧`.
fn inf_closed_hull(q: &Qoset, a: Subset, upper: bool) -> Subset {
    let mut s = if upper { q.cone(a, Dir::Up) } else { a };
    loop {
        let mut next = s;
        for x in s.complement(q.size()).iter() {
            if q.inf_set(s.inter(q.up_of(x))).contains(x) {
                next = next.with(x);
            }
        }
        if upper {
            next = q.cone(next, Dir::Up);
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Strategy used to evaluate an order convolution `c↑` or `c↓`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// The defining intersection over all splits of the argument.
    Definitional,
    /// Union over subsets `B ⊆ A` of `c(B) ∩ B↑` (dually `B↓`).
    Inner,
    /// `{x : x ∈ c(A ∩ ↓x)}` (dually `↑x`), one operator call per element.
    Pointwise,
}

type EvalFn = dyn Fn(Subset) -> Subset + Send + Sync;

pub(crate) enum Repr {
    Table(Vec<Subset>),
    Builtin(Builtin, Qoset),
    Generated(Vec<Subset>),
    Custom(String, Arc<EvalFn>),
    Top,
    /// `⟨∅⟩^B = B`, `⟨A⟩^B = E` otherwise.
    Unit(Subset),
    /// `A ↦ A ∪ B`
    Bottom(Subset),
    Join(PreclosureOp, PreclosureOp),
    Compose(PreclosureOp, PreclosureOp),
    Hull(PreclosureOp),
    FinitaryPart(PreclosureOp),
    /// `A ↦ f⁻¹(c′(f(A)))`
    Pullback(Vec<usize>, PreclosureOp),
    Convolve(PreclosureOp, PreclosureOp),
    ConvOrder { c: PreclosureOp, q: Qoset, dir: Dir, strategy: Strategy },
    ConvFamily(PreclosureOp, Vec<Subset>),
}

/// A monotone, extensive map on the subsets of a carrier of size `n`.
/// Cloning is cheap; the representation is shared.
#[derive(Clone)]
pub struct PreclosureOp {
    n: usize,
    repr: Arc<Repr>,
}

/// Results of [`PreclosureOp::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub is_preclosure: bool,
    pub is_untied: bool,
    pub is_idempotent: bool,
    pub is_cech: bool,
    pub is_topological: bool,
    pub is_finitary: bool,
}

/// Results of [`enrichment_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Enrichment {
    pub compatible: bool,
    pub right_absorbing: bool,
    pub absorbing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separation {
    /// `c(↓x) = ↓x` for all `x`.
    Forward,
    /// `c(↑x) = ↑x` for all `x`.
    Dual,
}

impl PreclosureOp {
    pub(crate) fn from_repr(n: usize, repr: Repr) -> PreclosureOp {
        PreclosureOp { n, repr: Arc::new(repr) }
    }

    /// An explicit table; `images[a]` is the image of the subset with bitmask `a`.
    pub fn table(n: usize, images: Vec<Subset>) -> Result<PreclosureOp> {
        cap("table operator", n, TABLE_CAP)?;
        if images.len() != 1usize << n {
            return Err(Error::Input(format!(
                "a table on {n} elements needs {} images, got {}",
                1usize << n,
                images.len()
            )));
        }
        let full = Subset::full(n);
        if let Some(bad) = images.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::Input(format!("image {bad} leaves the carrier")));
        }
        Ok(PreclosureOp::from_repr(n, Repr::Table(images)))
    }

    /// An operator given by a function. Nothing is checked until [`PreclosureOp::validate`].
    pub fn from_fn(
        n: usize,
        name: impl Into<String>,
        f: impl Fn(Subset) -> Subset + Send + Sync + 'static,
    ) -> PreclosureOp {
        PreclosureOp::from_repr(n, Repr::Custom(name.into(), Arc::new(f)))
    }

    pub fn builtin(kind: Builtin, q: &Qoset) -> PreclosureOp {
        PreclosureOp::from_repr(q.size(), Repr::Builtin(kind, q.clone()))
    }

    /// `⟨A⟩_V`: the intersection of the members of `family` containing `A`, or `E` if there are none.
    pub fn generated(n: usize, family: &[Subset]) -> Result<PreclosureOp> {
        cap("generated operator", n, MAX_CARRIER)?;
        let full = Subset::full(n);
        if let Some(bad) = family.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::Input(format!("family member {bad} leaves the carrier")));
        }
        let mut fam = family.to_vec();
        fam.sort();
        fam.dedup();
        Ok(PreclosureOp::from_repr(n, Repr::Generated(fam)))
    }

    /// `⊤ : A ↦ E`
    pub fn top(n: usize) -> PreclosureOp {
        PreclosureOp::from_repr(n, Repr::Top)
    }

    /// `⟨·⟩^B`; with `B = ∅` this is the neutral element of convolution among untied operators.
    pub fn unit(n: usize, b: Subset) -> PreclosureOp {
        PreclosureOp::from_repr(n, Repr::Unit(b))
    }

    /// `⊥^B : A ↦ A ∪ B`
    pub fn bottom(n: usize, b: Subset) -> PreclosureOp {
        PreclosureOp::from_repr(n, Repr::Bottom(b))
    }

    /// Pointwise union `A ↦ c(A) ∪ s(A)`.
    pub fn join(&self, other: &PreclosureOp) -> Result<PreclosureOp> {
        same_carrier(self, other)?;
        Ok(PreclosureOp::from_repr(self.n, Repr::Join(self.clone(), other.clone())))
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &PreclosureOp) -> Result<PreclosureOp> {
        same_carrier(self, other)?;
        Ok(PreclosureOp::from_repr(self.n, Repr::Compose(self.clone(), other.clone())))
    }

    /// `f⁻¹ c′ f` for `f : {0..f.len()} → carrier of c′`.
    pub fn pullback(f: &[usize], target: &PreclosureOp) -> Result<PreclosureOp> {
        cap("pullback", f.len(), MAX_CARRIER)?;
        if let Some(&bad) = f.iter().find(|&&y| y >= target.n) {
            return Err(Error::IndexOutOfRange { index: bad, size: target.n });
        }
        Ok(PreclosureOp::from_repr(f.len(), Repr::Pullback(f.to_vec(), target.clone())))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn eval(&self, a: Subset) -> Subset {
        debug_assert!(a.is_subset(self.full()));
        let n = self.n;
        match &*self.repr {
            Repr::Table(t) => t[a.bits() as usize],
            Repr::Builtin(b, q) => b.eval(q, a),
            Repr::Generated(fam) => fam
                .iter()
                .filter(|v| a.is_subset(**v))
                .fold(Subset::full(n), |acc, v| acc.inter(*v)),
            Repr::Custom(_, f) => f(a),
            Repr::Top => Subset::full(n),
            Repr::Unit(b) => {
                if a.is_empty() {
                    *b
                } else {
                    Subset::full(n)
                }
            }
            Repr::Bottom(b) => a.union(*b),
            Repr::Join(c, s) => c.eval(a).union(s.eval(a)),
            Repr::Compose(c, s) => c.eval(s.eval(a)),
            Repr::Hull(c) => {
                let mut cur = a;
                loop {
                    let next = c.eval(cur);
                    if next == cur {
                        return cur;
                    }
                    cur = next;
                }
            }
            Repr::FinitaryPart(c) => a.submasks().fold(Subset::EMPTY, |acc, f| acc.union(c.eval(f))),
            Repr::Pullback(f, c) => {
                let image: Subset = a.iter().map(|x| f[x]).collect();
                let out = c.eval(image);
                (0..n).filter(|&x| out.contains(f[x])).collect()
            }
            Repr::Convolve(c, s) => crate::convolution::eval_convolve(c, s, a),
            Repr::ConvOrder { c, q, dir, strategy } => {
                crate::convolution::eval_order(c, q, *dir, *strategy, a)
            }
            Repr::ConvFamily(c, fam) => crate::convolution::eval_family(c, fam, a),
        }
    }

    pub fn eval_indices(&self, a: &[usize]) -> Result<Subset> {
        if let Some(&bad) = a.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, size: self.n });
        }
        Ok(self.eval(a.iter().copied().collect()))
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.eval(a) == a
    }

    /// Checks each flag by its definition over every subset.
    pub fn validate(&self) -> Result<Flags> {
        cap("validation", self.n, TABLE_CAP)?;
        let n = self.n;
        let full = self.full();
        let images: Vec<Subset> = Subset::all(n).map(|a| self.eval(a)).collect();
        let img = |a: Subset| images[a.bits() as usize];

        let in_carrier = images.iter().all(|s| s.is_subset(full));
        let extensive = Subset::all(n).all(|a| a.is_subset(img(a)));
        // Monotonicity follows from the one-element steps A ⊆ A ∪ {x}.
        let monotone = Subset::all(n)
            .all(|a| a.complement(n).iter().all(|x| img(a).is_subset(img(a.with(x)))));
        let is_preclosure = in_carrier && extensive && monotone;
        let is_untied = img(Subset::EMPTY).is_empty();
        let is_idempotent = in_carrier && Subset::all(n).all(|a| img(img(a)) == img(a));
        let union_of_points =
            |a: Subset| a.iter().fold(Subset::EMPTY, |acc, x| acc.union(img(Subset::singleton(x))));
        let is_cech = is_untied && Subset::all(n).all(|a| img(a) == union_of_points(a));
        let is_topological = is_cech && is_idempotent;
        let is_finitary = if n <= FINITARY_LITERAL_CAP {
            Subset::all(n).all(|a| a.submasks().fold(Subset::EMPTY, |acc, f| acc.union(img(f))) == img(a))
        } else {
            // Every subset is finite, so the union contains c(A) itself and the rest is monotonicity.
            monotone
        };
        Ok(Flags { is_preclosure, is_untied, is_idempotent, is_cech, is_topological, is_finitary })
    }

    /// Closed sets in increasing bitmask order, with the default bound.
    pub fn closed_sets(&self) -> Result<Vec<Subset>> {
        self.closed_sets_bounded(CLOSED_SET_BOUND)
    }

    /// Closed sets via NextClosure on the idempotent hull, which has the same fixed points.
    pub fn closed_sets_bounded(&self, bound: usize) -> Result<Vec<Subset>> {
        let n = self.n;
        let hull = self.idempotent_hull();
        let mut out = vec![hull.eval(Subset::EMPTY)];
        let mut cur = out[0];
        let full = self.full();
        'outer: while cur != full {
            for i in (0..n).rev() {
                if cur.contains(i) {
                    continue;
                }
                let below = Subset::full(i);
                let next = hull.eval(cur.inter(below).with(i));
                if next.inter(below) == cur.inter(below) {
                    if out.len() >= bound {
                        return Err(Error::TooManyClosedSets { bound });
                    }
                    out.push(next);
                    cur = next;
                    continue 'outer;
                }
            }
            break;
        }
        out.sort();
        Ok(out)
    }

    /// `c°(A) = ∪_{F ⊆ A finite} c(F)`, evaluated literally.
    pub fn finitary_part(&self) -> Result<PreclosureOp> {
        cap("finitary part", self.n, EXHAUSTIVE_CAP)?;
        Ok(PreclosureOp::from_repr(self.n, Repr::FinitaryPart(self.clone())))
    }

    /// `c̄`: iterate `c` until it stabilises.
    pub fn idempotent_hull(&self) -> PreclosureOp {
        if self.known_idempotent() {
            return self.clone();
        }
        PreclosureOp::from_repr(self.n, Repr::Hull(self.clone()))
    }

    /// True when idempotency follows from how the operator was built.
    pub fn known_idempotent(&self) -> bool {
        match &*self.repr {
            Repr::Builtin(b, _) => b.is_idempotent(),
            Repr::Generated(_) | Repr::Hull(_) | Repr::Top | Repr::Bottom(_) => true,
            Repr::Unit(b) => b.is_empty(),
            Repr::Convolve(c, s) => c.known_idempotent() && s.known_idempotent(),
            Repr::ConvOrder { c, .. } | Repr::ConvFamily(c, _) => c.known_idempotent(),
            _ => false,
        }
    }

    /// Whether every image is a lower set (`Down`) or upper set (`Up`) of `q`, when that
    /// follows from how the operator was built.
    pub fn known_right_absorbing(&self, q: &Qoset, dir: Dir) -> Option<bool> {
        match &*self.repr {
            Repr::Builtin(b, bq) if bq == q => Some(b.absorbs(dir)),
            _ => None,
        }
    }

    /// Copies the operator into an explicit table.
    pub fn materialize(&self) -> Result<PreclosureOp> {
        cap("materialize", self.n, TABLE_CAP)?;
        if let Repr::Table(_) = &*self.repr {
            return Ok(self.clone());
        }
        let images = Subset::all(self.n).map(|a| self.eval(a)).collect();
        PreclosureOp::table(self.n, images)
    }

    /// The images of every subset, indexed by bitmask.
    pub fn images(&self) -> Result<Vec<Subset>> {
        cap("image table", self.n, EXHAUSTIVE_CAP)?;
        Ok(Subset::all(self.n).map(|a| self.eval(a)).collect())
    }

    /// `self ≤ other` pointwise over all subsets.
    pub fn le(&self, other: &PreclosureOp) -> Result<bool> {
        same_carrier(self, other)?;
        cap("operator comparison", self.n, EXHAUSTIVE_CAP)?;
        Ok(Subset::all(self.n).all(|a| self.eval(a).is_subset(other.eval(a))))
    }

    /// Pointwise equality over all subsets.
    pub fn same_as(&self, other: &PreclosureOp) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// The least subset on which the two operators disagree.
    pub fn first_difference(&self, other: &PreclosureOp) -> Result<Option<Subset>> {
        same_carrier(self, other)?;
        cap("operator comparison", self.n, EXHAUSTIVE_CAP)?;
        Ok(Subset::all(self.n).find(|&a| self.eval(a) != other.eval(a)))
    }

    pub fn name(&self) -> String {
        match &*self.repr {
            Repr::Table(_) => "table".into(),
            Repr::Builtin(b, _) => b.name().into(),
            Repr::Generated(f) => format!("generated[{}]", f.len()),
            Repr::Custom(name, _) => name.clone(),
            Repr::Top => "top".into(),
            Repr::Unit(b) => format!("unit^{b}"),
            Repr::Bottom(b) => format!("bottom^{b}"),
            Repr::Join(c, s) => format!("({} | {})", c.name(), s.name()),
            Repr::Compose(c, s) => format!("({} . {})", c.name(), s.name()),
            Repr::Hull(c) => format!("hull({})", c.name()),
            Repr::FinitaryPart(c) => format!("finitary({})", c.name()),
            Repr::Pullback(_, c) => format!("pullback({})", c.name()),
            Repr::Convolve(c, s) => format!("({} * {})", c.name(), s.name()),
            Repr::ConvOrder { c, dir, .. } => match dir {
                Dir::Up => format!("{}^up", c.name()),
                Dir::Down => format!("{}^down", c.name()),
            },
            Repr::ConvFamily(c, f) => format!("{}_V[{}]", c.name(), f.len()),
        }
    }
}

impl fmt::Debug for PreclosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreclosureOp({}, n={})", self.name(), self.n)
    }
}

pub(crate) fn same_carrier(a: &PreclosureOp, b: &PreclosureOp) -> Result<()> {
    if a.n != b.n {
        return Err(Error::CarrierMismatch { left: a.n, right: b.n });
    }
    Ok(())
}

fn same_size(q: &Qoset, c: &PreclosureOp) -> Result<()> {
    if q.size() != c.size() {
        return Err(Error::CarrierMismatch { left: q.size(), right: c.size() });
    }
    Ok(())
}

/// Compatibility and absorption of `c` over `q` (`Down`) or its dual (`Up`), over all subsets.
pub fn enrichment_check(q: &Qoset, c: &PreclosureOp, dir: Dir) -> Result<Enrichment> {
    same_size(q, c)?;
    cap("enrichment check", q.size(), EXHAUSTIVE_CAP)?;
    let (mut compatible, mut right_absorbing, mut left) = (true, true, true);
    for a in Subset::all(q.size()) {
        let ca = c.eval(a);
        let ia = q.cone(a, dir);
        compatible &= ia.is_subset(ca);
        right_absorbing &= q.cone(ca, dir) == ca;
        left &= c.eval(ia) == ca;
        if !compatible && !right_absorbing && !left {
            break;
        }
    }
    Ok(Enrichment { compatible, right_absorbing, absorbing: right_absorbing && left })
}

/// Right absorption, from construction when known and by an exhaustive scan otherwise.
pub fn is_right_absorbing(q: &Qoset, c: &PreclosureOp, dir: Dir) -> Result<bool> {
    same_size(q, c)?;
    if let Some(known) = c.known_right_absorbing(q, dir) {
        return Ok(known);
    }
    cap("right-absorption check", q.size(), EXHAUSTIVE_CAP)?;
    Ok(Subset::all(q.size()).all(|a| {
        let ca = c.eval(a);
        q.cone(ca, dir) == ca
    }))
}

/// `c(↓x) = ↓x` for every `x` (`Forward`), or `c(↑x) = ↑x` (`Dual`).
pub fn separates_points(q: &Qoset, c: &PreclosureOp, sep: Separation) -> Result<bool> {
    same_size(q, c)?;
    Ok((0..q.size()).all(|x| {
        let cone = match sep {
            Separation::Forward => q.down_of(x),
            Separation::Dual => q.up_of(x),
        };
        c.eval(cone) == cone
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qoset::fixtures::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    fn d(divs: &[u64], vals: &[u64]) -> Subset {
        vals.iter().map(|v| divs.iter().position(|x| x == v).unwrap()).collect()
    }

    #[test]
    fn dm_on_d12() {
        let (q, divs) = divisors(12);
        let dm = PreclosureOp::builtin(Builtin::Dm, &q);
        assert_eq!(dm.eval(d(&divs, &[2, 3])), d(&divs, &[1, 2, 3, 6]));
        assert_eq!(dm.eval(d(&divs, &[4, 6])), d(&divs, &[1, 2, 3, 4, 6, 12]));
        let f = dm.validate().unwrap();
        assert!(f.is_idempotent && !f.is_cech);
        assert_eq!(dm.closed_sets().unwrap().len(), 6);
    }

    #[test]
    fn generated_conventions() {
        let c3 = chain(3);
        let t = PreclosureOp::generated(3, &c3.filters().unwrap()).unwrap();
        assert_eq!(t.eval(Subset::EMPTY), s(&[2]));
        let p = p4();
        let tp = PreclosureOp::generated(4, &p.filters().unwrap()).unwrap();
        assert_eq!(tp.eval(Subset::EMPTY), Subset::EMPTY);
        let empty = PreclosureOp::generated(3, &[]).unwrap();
        assert_eq!(empty.eval(s(&[0])), s(&[0, 1, 2]));
        let a2 = PreclosureOp::generated(2, &[s(&[0]), s(&[1])]).unwrap();
        assert_eq!(a2.closed_sets().unwrap(), vec![s(&[]), s(&[0]), s(&[1]), s(&[0, 1])]);
    }

    #[test]
    fn builtin_examples() {
        let c3 = chain(3);
        assert_eq!(PreclosureOp::builtin(Builtin::T, &c3).eval(Subset::EMPTY), s(&[2]));
        assert_eq!(PreclosureOp::builtin(Builtin::H, &p4()).eval(s(&[2, 3])), s(&[2, 3]));
        assert_eq!(
            PreclosureOp::builtin(Builtin::Up, &c3).closed_sets().unwrap(),
            vec![s(&[]), s(&[2]), s(&[1, 2]), s(&[0, 1, 2])]
        );
        assert_eq!(Builtin::from_name("nope"), Err(Error::UnknownBuiltin("nope".into())));
    }

    #[test]
    fn hull_of_predecessor_step() {
        let step = PreclosureOp::from_fn(3, "pred", |a: Subset| {
            a.union(a.iter().filter(|&x| x >= 1).map(|x| x - 1).collect())
        });
        let hull = step.idempotent_hull();
        assert_eq!(hull.eval(s(&[2])), s(&[0, 1, 2]));
        assert_eq!(hull.eval(Subset::EMPTY), Subset::EMPTY);
    }

    #[test]
    fn non_extensive_table() {
        let t = PreclosureOp::table(1, vec![Subset::EMPTY, Subset::EMPTY]).unwrap();
        assert!(!t.validate().unwrap().is_preclosure);
    }

    #[test]
    fn enrichment_examples() {
        let (q, _) = divisors(12);
        let dm = PreclosureOp::builtin(Builtin::Dm, &q);
        let e = enrichment_check(&q, &dm, Dir::Down).unwrap();
        assert!(e.compatible && e.right_absorbing && e.absorbing);
        let c3 = chain(3);
        let up = PreclosureOp::builtin(Builtin::Up, &c3);
        let e = enrichment_check(&c3, &up, Dir::Down).unwrap();
        assert!(!e.compatible && !e.right_absorbing && !e.absorbing);
        let p = p4();
        let t = PreclosureOp::builtin(Builtin::T, &p);
        assert!(!enrichment_check(&p, &t, Dir::Down).unwrap().right_absorbing);
    }

    #[test]
    fn separation_examples() {
        let (q, _) = divisors(12);
        assert!(separates_points(&q, &PreclosureOp::builtin(Builtin::Dm, &q), Separation::Forward).unwrap());
        let c3 = chain(3);
        assert!(separates_points(&c3, &PreclosureOp::builtin(Builtin::T, &c3), Separation::Dual).unwrap());
        let bad = PreclosureOp::from_fn(3, "bad", |a: Subset| {
            let b = c3_down(a);
            if a.contains(0) { b.with(1) } else { b }
        });
        assert!(!separates_points(&c3, &bad, Separation::Forward).unwrap());
    }

    fn c3_down(a: Subset) -> Subset {
        chain(3).cone(a, Dir::Down)
    }
}
