//! The algebraic law suite: convolution identities, point-level characterisations and
//! transfer laws, each checked exhaustively over its instance set.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::convolution::{conv_family, conv_order, conv_order_with, convolve};
use crate::error::Result;
use crate::operator::{is_right_absorbing, separates_points, Builtin, Flags, PreclosureOp, Separation, Strategy};
use crate::points::{
    caratheodory, caratheodory_by_search, classify_op, compact_points, copoints, extreme_points, kit_points,
    Context, Order, GENERATOR_NODE_LIMIT,
};
use crate::qoset::{fixtures, Dir, Qoset};
use crate::subset::Subset;

use super::enumerate::{enum_moore, enum_posets};
use super::galois::{chain_into_d12, random_embedding_checks};
use super::random::{random_cech, random_closure, random_family, random_map, random_preclosure, rng};

/// Which instances the suite runs over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawConfig {
    /// Carrier size of the random operators (at most 6).
    pub n: usize,
    pub seed: u64,
    /// Random preclosure tables; consecutive tables are paired for the binary laws.
    pub random_tables: usize,
    /// Random triples for associativity.
    pub triples: usize,
    /// Random enriched operators on random 4-element posets for the point laws.
    pub enriched_cases: usize,
    /// Random Galois embeddings.
    pub embeddings: usize,
}

impl Default for LawConfig {
    fn default() -> LawConfig {
        LawConfig { n: 4, seed: 0, random_tables: 500, triples: 200, enriched_cases: 60, embeddings: 50 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instances: u64,
    pub violations: u64,
    pub first_counterexample: Option<String>,
}

impl LawReport {
    pub fn ok(&self) -> bool {
        self.violations == 0
    }
}

pub const COMMUTATIVITY: &str = "commutativity";
pub const ASSOCIATIVITY: &str = "associativity";
pub const TOP_ABSORBS: &str = "top-absorbs";
pub const UNIT_IS_NEUTRAL: &str = "unit-is-neutral";
pub const EMPTY_IMAGE: &str = "empty-image-is-union";
pub const MONOTONICITY: &str = "monotonicity";
pub const UNTIED_PRODUCT: &str = "untied-product";
pub const IDEMPOTENT_PRODUCT: &str = "idempotent-product";
pub const CECH_CRITERION: &str = "cech-criterion";
pub const CECH_PRODUCT: &str = "cech-product";
pub const TOPOLOGICAL_CRITERION: &str = "topological-criterion";
pub const TOPOLOGICAL_PRODUCT: &str = "topological-product";
pub const BASED_UNIT: &str = "based-unit-is-neutral";
pub const BASED_BOTTOM: &str = "based-bottom-absorbs";
pub const BELOW_LEFT_FACTOR: &str = "product-below-left-factor";
pub const CLOSED_SETS_PERSIST: &str = "closed-sets-persist";
pub const SINGLETON_RULE: &str = "singleton-rule";
pub const UNION_OF_CLOSURES: &str = "union-of-closures";
pub const FAMILY_CONVOLUTION: &str = "family-convolution";
pub const FAMILY_PRODUCT: &str = "family-product";
pub const INNER_EQUALS_DEFINITIONAL: &str = "inner-equals-definitional";
pub const UPWARD_LOCALIZATION: &str = "upward-localization";
pub const COMPACT_CHARACTERIZATION: &str = "compact-characterization";
pub const COMPACT_COPOINT: &str = "compact-copoint";
pub const EXTREME_CHARACTERIZATION: &str = "extreme-characterization";
pub const UPWARD_EXTREME_CHARACTERIZATION: &str = "upward-extreme-characterization";
pub const CONVOLUTION_EXTREMES: &str = "convolution-extremes";
pub const KIT_INCLUSIONS: &str = "kit-inclusions";
pub const CLASS_IMPLICATIONS: &str = "class-implications";
pub const KIT_UPWARD_CLOSED: &str = "kit-upward-closed";
pub const KITTED_FROM_EQUALITY: &str = "kitted-from-equality";
pub const CARATHEODORY_COPOINTS: &str = "caratheodory-copoints";
pub const CARATHEODORY_ROUTES: &str = "caratheodory-routes";
pub const PULLBACK_PRODUCT: &str = "pullback-product";
pub const CONTINUITY_PRODUCT: &str = "continuity-product";
pub const HULL: &str = "idempotent-hull";
pub const FINITARY_PART: &str = "finitary-part";
pub const MOORE_CLOSED_SETS: &str = "moore-closed-sets";
pub const GALOIS_TRANSFER: &str = "galois-transfer";

/// Per-law counters, reported in law-id order.
#[derive(Default)]
pub struct Tally(BTreeMap<&'static str, LawReport>);

impl Tally {
    pub fn check(&mut self, law: &'static str, ok: bool, witness: impl FnOnce() -> String) {
        let r = self.0.entry(law).or_insert_with(|| LawReport {
            law: law.to_string(),
            instances: 0,
            violations: 0,
            first_counterexample: None,
        });
        r.instances += 1;
        if !ok {
            r.violations += 1;
            if r.first_counterexample.is_none() {
                r.first_counterexample = Some(witness());
            }
        }
    }

    pub fn into_reports(self) -> Vec<LawReport> {
        self.0.into_values().collect()
    }
}

/// The builtin catalog on one qoset.
pub fn catalog(q: &Qoset) -> Vec<PreclosureOp> {
    Builtin::ALL.iter().map(|&b| PreclosureOp::builtin(b, q)).collect()
}

/// `(name, qoset)` fixtures for the catalog laws.
pub fn catalog_fixtures() -> Vec<(&'static str, Qoset)> {
    vec![("C3", fixtures::chain(3)), ("P4", fixtures::p4()), ("D12", fixtures::divisors(12).0)]
}

/// Every fixture, including a qoset with a nontrivial equivalence.
pub fn all_fixtures() -> Vec<(&'static str, Qoset)> {
    vec![
        ("C3", fixtures::chain(3)),
        ("A3", fixtures::antichain(3)),
        ("P4", fixtures::p4()),
        ("M4", fixtures::m4()),
        ("N5", fixtures::n5()),
        ("Q2", fixtures::q2()),
        ("D12", fixtures::divisors(12).0),
    ]
}

fn both_ways(c: &PreclosureOp, s: &PreclosureOp) -> Result<(PreclosureOp, PreclosureOp)> {
    Ok((convolve(c, s)?.materialize()?, convolve(s, c)?.materialize()?))
}

/// Binary laws on the ordered pair `(c, s)`. Conditional laws count an instance only
/// when their hypothesis holds.
pub fn pair_laws(t: &mut Tally, tag: &str, c: &PreclosureOp, fc: &Flags, s: &PreclosureOp, fs: &Flags) -> Result<()> {
    let n = c.size();
    let who = format!("{} * {} on {tag}", c.name(), s.name());
    let at = |d: Option<Subset>| format!("{who} at A = {}", d.unwrap_or_default());
    let (cs, sc) = both_ways(c, s)?;
    let d = cs.first_difference(&sc)?;
    t.check(COMMUTATIVITY, d.is_none(), || at(d));

    let top = PreclosureOp::top(n);
    let (l, r) = both_ways(c, &top)?;
    let d = l.first_difference(&top)?.or(r.first_difference(&top)?);
    t.check(TOP_ABSORBS, d.is_none(), || at(d));

    let unit = PreclosureOp::unit(n, Subset::EMPTY);
    let (l, r) = both_ways(c, &unit)?;
    let d = l.first_difference(c)?.or(r.first_difference(c)?);
    t.check(UNIT_IS_NEUTRAL, d.is_none(), || at(d));

    let e = Subset::EMPTY;
    t.check(EMPTY_IMAGE, cs.eval(e) == c.eval(e).union(s.eval(e)), || at(None));

    let bigger = convolve(&c.join(s)?, &s.join(c)?)?;
    let hulls = convolve(&c.idempotent_hull(), &s.idempotent_hull())?;
    t.check(MONOTONICITY, cs.le(&bigger)? && cs.le(&hulls)?, || at(None));

    let fcs = cs.validate()?;
    if fc.is_untied && fs.is_untied {
        t.check(UNTIED_PRODUCT, fcs.is_untied, || at(None));
    }
    if fc.is_idempotent && fs.is_idempotent {
        t.check(IDEMPOTENT_PRODUCT, fcs.is_idempotent, || at(None));
    }
    if fc.is_cech && fs.is_cech {
        t.check(CECH_PRODUCT, fcs.is_cech, || at(None));
    }
    if fc.is_topological && fs.is_topological {
        t.check(TOPOLOGICAL_PRODUCT, fcs.is_topological, || at(None));
    }

    let b = c.eval(Subset::EMPTY);
    let based_unit = PreclosureOp::unit(n, b);
    let (l, r) = both_ways(c, &based_unit)?;
    let d = l.first_difference(c)?.or(r.first_difference(c)?);
    t.check(BASED_UNIT, d.is_none(), || at(d));

    let bottom = PreclosureOp::bottom(n, b);
    let (l, r) = both_ways(c, &bottom)?;
    let d = l.first_difference(&bottom)?.or(r.first_difference(&bottom)?);
    t.check(BASED_BOTTOM, d.is_none(), || at(d));

    let s0 = s.eval(Subset::EMPTY);
    if s0.is_subset(b) {
        t.check(BELOW_LEFT_FACTOR, cs.le(c)?, || at(None));
        let bad = Subset::all(n).find(|&a| c.is_closed(a) && !cs.is_closed(a));
        t.check(CLOSED_SETS_PERSIST, bad.is_none(), || at(bad));
    }
    if s0 == b {
        let bad = (0..n).find(|&x| {
            let p = Subset::singleton(x);
            cs.eval(p) != c.eval(p).inter(s.eval(p))
        });
        t.check(SINGLETON_RULE, bad.is_none(), || at(bad.map(Subset::singleton)));
    }
    Ok(())
}

/// Unary laws: the Čech and topological criteria, the hull and the finitary part.
pub fn single_laws(t: &mut Tally, tag: &str, c: &PreclosureOp, fc: &Flags) -> Result<()> {
    let who = format!("{} on {tag}", c.name());
    let cc = convolve(c, c)?.materialize()?;
    t.check(CECH_CRITERION, fc.is_cech == (fc.is_untied && cc.same_as(c)?), || who.clone());
    let composed = c.compose(c)?;
    t.check(TOPOLOGICAL_CRITERION, fc.is_topological == (fc.is_untied && cc.same_as(&composed)?), || {
        who.clone()
    });

    let hull = c.idempotent_hull().materialize()?;
    let fh = hull.validate()?;
    let same_fixed = Subset::all(c.size()).all(|a| c.is_closed(a) == hull.is_closed(a));
    t.check(HULL, fh.is_idempotent && c.le(&hull)? && same_fixed, || who.clone());
    t.check(FINITARY_PART, c.finitary_part()?.same_as(c)?, || who.clone());
    Ok(())
}

/// `c(∪ A_j) = c(∪ c(A_j))` over every pair of subsets, and every triple when `n ≤ 4`.
pub fn union_laws(t: &mut Tally, tag: &str, c: &PreclosureOp) {
    let n = c.size();
    let subsets: Vec<Subset> = Subset::all(n).collect();
    for &a in &subsets {
        for &b in &subsets {
            let ok = c.eval(a.union(b)) == c.eval(c.eval(a).union(c.eval(b)));
            t.check(UNION_OF_CLOSURES, ok, || format!("{} on {tag} at {a}, {b}", c.name()));
            if n <= 4 {
                for &d in &subsets {
                    let ok = c.eval(a.union(b).union(d)) == c.eval(c.eval(a).union(c.eval(b)).union(c.eval(d)));
                    t.check(UNION_OF_CLOSURES, ok, || format!("{} on {tag} at {a}, {b}, {d}", c.name()));
                }
            }
        }
    }
}

/// The three evaluation strategies of `c↑` and `c↓` agree wherever the fast ones apply.
pub fn inner_outer_laws(t: &mut Tally, tag: &str, q: &Qoset, c: &PreclosureOp) -> Result<()> {
    for dir in [Dir::Up, Dir::Down] {
        if !is_right_absorbing(q, c, dir.flip())? {
            continue;
        }
        let outer = conv_order_with(c, q, dir, Strategy::Definitional)?;
        let inner = conv_order_with(c, q, dir, Strategy::Inner)?;
        let point = conv_order_with(c, q, dir, Strategy::Pointwise)?;
        for a in Subset::all(q.size()) {
            let o = outer.eval(a);
            t.check(INNER_EQUALS_DEFINITIONAL, inner.eval(a) == o && point.eval(a) == o, || {
                format!("{} {dir:?} on {tag} at A = {a}", c.name())
            });
        }
    }
    Ok(())
}

fn ex(q: &Qoset, c: &PreclosureOp, a: Subset) -> Subset {
    a.iter().filter(|&x| !c.eval(a.minus(q.class(x))).contains(x)).collect()
}

/// Point-level laws for an enriched qoset `(q, c)`: `c` right-absorbing over `q`.
pub fn point_laws(t: &mut Tally, tag: &str, q: &Qoset, c: &PreclosureOp) -> Result<()> {
    let n = q.size();
    let full = q.full();
    let who = format!("{} on {tag}", c.name());
    let ctx = Context::new(q, c, Order::Primary)?;
    let up = conv_order_with(c, q, Dir::Up, Strategy::Definitional)?.materialize()?;
    let separating = separates_points(q, c, Separation::Forward)?;
    let uppers: Vec<Subset> = q.lower_sets(usize::MAX)?.into_iter().map(|l| full.minus(l)).collect();

    for a in Subset::all(n) {
        let cp = compact_points(&ctx, a);
        let exa = extreme_points(&ctx, a);
        let up_ex = ex(q, &up, a);
        let a_closed = c.is_closed(a);
        t.check(EXTREME_CHARACTERIZATION, exa == cp.inter(q.max_of(a)), || format!("{who} at A = {a}"));
        for x in a.iter() {
            let at = || format!("{who} at x = {x}, A = {a}");
            // Compact points.
            let c1 = cp.contains(x);
            let c2 = a.submasks().all(|b| !c.eval(b).contains(x) || q.cone(b, Dir::Down).contains(x));
            let c3 = c.is_closed(a.minus(q.up_of(x)));
            t.check(COMPACT_CHARACTERIZATION, c1 == c2 && (!c3 || c1) && (!a_closed || c1 == c3), at);
            // Extreme points.
            let e1 = exa.contains(x);
            let e2 = a.submasks().all(|b| !c.eval(b).contains(x) || q.saturate(b).contains(x));
            let e3 = c.is_closed(a.minus(q.class(x)));
            t.check(EXTREME_CHARACTERIZATION, e1 == e2 && (!e3 || e1), at);
            // Extreme points of c↑.
            let u1 = up_ex.contains(x);
            let u2a = uppers.iter().any(|&u| ex(q, c, a.minus(u)).contains(x));
            let u2b = ex(q, c, a.inter(q.down_of(x))).contains(x);
            let u3 = a.submasks().all(|b| {
                let hit = c.eval(b).inter(q.bounds(b, crate::qoset::Bound::Upper)).contains(x);
                !hit || q.saturate(b).contains(x)
            });
            let u4 = a.submasks().all(|b| {
                let sups = q.sup_set(b);
                let has_c_sup = sups.intersects(c.eval(b));
                !has_c_sup || !sups.contains(x) || q.saturate(b).contains(x)
            });
            let ok = u1 == u2a && u1 == u2b && u1 == u3 && (!u3 || u4) && (!separating || u4 == u3);
            t.check(UPWARD_EXTREME_CHARACTERIZATION, ok, at);
            // Localisation of c↑.
            let lhs = up.eval(a).contains(x);
            t.check(UPWARD_LOCALIZATION, !lhs || up.eval(q.down_of(x).inter(a)).contains(x), at);
        }
    }

    // Compactness in the whole carrier, through copoints.
    let cp_e = compact_points(&ctx, full);
    for x in 0..n {
        let rest = full.minus(q.up_of(x));
        let cops = copoints(&ctx, x)?;
        let c1 = cp_e.contains(x);
        let c3 = c.is_closed(rest);
        let c4 = cops == vec![rest];
        let c5 = cops.len() == 1;
        let ok = c1 == c3 && c1 == c4 && (!c4 || c5) && (!separating || c5 == c1);
        t.check(COMPACT_COPOINT, ok, || format!("{who} at x = {x}"));
    }

    // Kit points and the class chain.
    let kit = kit_points(&ctx)?;
    let ex_up_e = ex(q, &up, full);
    let ex_up_kit = ex(q, &up, kit);
    let idempotent = c.validate()?.is_idempotent;
    let inclusions = cp_e.is_subset(kit.inter(ex_up_e)) && kit.inter(ex_up_e).is_subset(ex_up_kit);
    let coincide = !idempotent || (cp_e == kit.inter(ex_up_e) && cp_e == ex_up_kit);
    t.check(KIT_INCLUSIONS, inclusions && coincide, || format!("{who}: cp = {cp_e}, kit = {kit}"));
    t.check(KIT_UPWARD_CLOSED, up.is_closed(kit), || format!("{who}: kit = {kit}"));

    let class = classify_op(&ctx)?;
    let kitted = kit == full;
    let algebraic = class.algebraic.unwrap_or(false);
    let continuous = class.continuous.unwrap_or(false);
    let equal = cp_e == ex_up_e;
    let chain_ok = (!(idempotent && kitted) || algebraic)
        && (!algebraic || continuous)
        && (!continuous || class.distributive)
        && (!class.distributive || equal);
    t.check(CLASS_IMPLICATIONS, chain_ok, || format!("{who}: {class:?}"));
    t.check(KITTED_FROM_EQUALITY, !equal || kitted, || format!("{who}: kit = {kit}"));

    let car = caratheodory(&ctx)?;
    // Without idempotency the equality fails: ranzato_q on P4 has no copoints but needs two generators.
    if kitted && idempotent {
        let most = class.copoint_counts.iter().copied().max().unwrap_or(0);
        t.check(CARATHEODORY_COPOINTS, car == most, || format!("{who}: car = {car}, max copoints = {most}"));
    }
    let searched = caratheodory_by_search(&ctx, GENERATOR_NODE_LIMIT)?;
    t.check(CARATHEODORY_ROUTES, car == searched, || format!("{who}: {car} vs {searched}"));
    Ok(())
}

/// Extreme points of `c ∗ s` for closures `s` whose closed sets are unions of `∼`-classes.
pub fn convolution_extreme_laws(t: &mut Tally, tag: &str, q: &Qoset, c: &PreclosureOp, s: &PreclosureOp) -> Result<()> {
    let n = q.size();
    let product = convolve(c, s)?.materialize()?;
    let s_ctx = Context::new(q, s, Order::Equivalence)?;
    let s_closed: Vec<Subset> = s_ctx.closed_sets()?.to_vec();
    for a in Subset::all(n) {
        let lhs = ex(q, &product, a);
        for x in 0..n {
            let any_closed = s_closed.iter().any(|&v| ex(q, c, a.minus(v)).contains(x));
            let any_copoint = copoints(&s_ctx, x)?.iter().any(|&v| ex(q, c, a.minus(v)).contains(x));
            let ok = lhs.contains(x) == any_closed && any_closed == any_copoint;
            t.check(CONVOLUTION_EXTREMES, ok, || {
                format!("{} * {} on {tag} at x = {x}, A = {a}", c.name(), s.name())
            });
        }
    }
    Ok(())
}

/// `⟨·⟩_U ∗ ⟨·⟩_V = ⟨·⟩_{U∗V}` with `U ∗ V = {u ∪ v}`, and `c_V = c ∗ ⟨·⟩_V`.
pub fn family_laws(t: &mut Tally, n: usize, seed: u64, c: &PreclosureOp) -> Result<()> {
    let mut r = rng(seed);
    let ku = r.gen_range(0..4);
    let kv = r.gen_range(0..4);
    let u = random_family(n, ku, seed ^ 1);
    let v = random_family(n, kv, seed ^ 2);
    let uv: Vec<Subset> = u.iter().flat_map(|&a| v.iter().map(move |&b| a.union(b))).collect();
    let lhs = convolve(&PreclosureOp::generated(n, &u)?, &PreclosureOp::generated(n, &v)?)?;
    let d = lhs.first_difference(&PreclosureOp::generated(n, &uv)?)?;
    t.check(FAMILY_PRODUCT, d.is_none(), || format!("seed {seed}, U = {u:?}, V = {v:?}, at {}", d.unwrap_or_default()));

    let d = conv_family(c, &v)?.first_difference(&convolve(c, &PreclosureOp::generated(n, &v)?)?)?;
    t.check(FAMILY_CONVOLUTION, d.is_none(), || format!("seed {seed}, V = {v:?}, at {}", d.unwrap_or_default()));
    Ok(())
}

/// Pullbacks along a random map and continuity of the product.
pub fn pullback_laws(t: &mut Tally, seed: u64) -> Result<()> {
    let (n, m) = (3, 3);
    let f = random_map(n, m, seed);
    let injective = (0..n).all(|x| (0..x).all(|y| f[x] != f[y]));
    let c2 = random_preclosure(m, seed ^ 11)?;
    let s2 = random_preclosure(m, seed ^ 12)?;
    let pc = PreclosureOp::pullback(&f, &c2)?;
    let ps = PreclosureOp::pullback(&f, &s2)?;
    let lhs = convolve(&pc, &ps)?;
    let rhs = PreclosureOp::pullback(&f, &convolve(&c2, &s2)?)?;
    let ok = lhs.le(&rhs)? && (!injective || lhs.same_as(&rhs)?);
    t.check(PULLBACK_PRODUCT, ok, || format!("seed {seed}, f = {f:?}"));

    // Operators below the pullbacks make f continuous; the product must stay below.
    let mask_c = random_family(n, 1, seed ^ 13)[0];
    let mask_s = random_family(n, 1, seed ^ 14)[0];
    let small = |p: PreclosureOp, mask: Subset| PreclosureOp::from_fn(n, "restricted", move |a| a.union(p.eval(a).inter(mask)));
    let c = small(pc, mask_c);
    let s = small(ps, mask_s);
    t.check(CONTINUITY_PRODUCT, convolve(&c, &s)?.le(&rhs)?, || format!("seed {seed}, f = {f:?}"));
    Ok(())
}

/// Random enriched operators on a poset: `↓r` for a random preclosure `r`, and the
/// closure generated by random lower sets.
pub fn random_enriched(q: &Qoset, seed: u64) -> Result<Vec<PreclosureOp>> {
    let n = q.size();
    let down = PreclosureOp::builtin(Builtin::Down, q);
    let lowered = down.compose(&random_preclosure(n, seed)?)?.materialize()?;
    let lowers = q.lower_sets(usize::MAX)?;
    let mut r = rng(seed ^ 0xabc);
    let picked: Vec<Subset> = lowers.iter().copied().filter(|_| r.gen_bool(0.4)).collect();
    Ok(vec![lowered, PreclosureOp::generated(n, &picked)?])
}

/// Closures on `q` whose closed sets are unions of `∼`-classes.
fn saturated_closures(q: &Qoset, seed: u64) -> Result<Vec<PreclosureOp>> {
    let n = q.size();
    let fam: Vec<Subset> = random_family(n, 3, seed).into_iter().map(|v| q.saturate(v)).collect();
    Ok(vec![
        PreclosureOp::builtin(Builtin::Up, q),
        PreclosureOp::builtin(Builtin::T, q),
        PreclosureOp::generated(n, &q.filters()?)?,
        PreclosureOp::generated(n, &fam)?,
    ])
}

fn enriched_catalog(q: &Qoset) -> Vec<PreclosureOp> {
    [Builtin::Down, Builtin::Dm, Builtin::RanzatoQ]
        .iter()
        .map(|&b| PreclosureOp::builtin(b, q))
        .collect()
}

/// Convolution algebra over the catalog on C3, P4, D12 and over random tables.
pub fn convolution_algebra(t: &mut Tally, config: &LawConfig) -> Result<()> {
    for (name, q) in catalog_fixtures() {
        let ops = catalog(&q);
        let flags: Vec<Flags> = ops.iter().map(|c| c.validate()).collect::<Result<_>>()?;
        for (c, fc) in ops.iter().zip(&flags) {
            single_laws(t, name, c, fc)?;
            for (s, fs) in ops.iter().zip(&flags) {
                pair_laws(t, name, c, fc, s, fs)?;
            }
        }
    }
    let n = config.n;
    let tag = format!("random n={n}");
    let seed_of = |k: usize| config.seed.wrapping_mul(0x9e37_79b9).wrapping_add(k as u64);
    let mut prev: Option<(PreclosureOp, Flags)> = None;
    for k in 0..config.random_tables {
        let c = random_preclosure(n, seed_of(k))?;
        let fc = c.validate()?;
        single_laws(t, &format!("{tag} seed {}", seed_of(k)), &c, &fc)?;
        if let Some((p, fp)) = &prev {
            pair_laws(t, &format!("{tag} seeds {}, {}", seed_of(k - 1), seed_of(k)), p, fp, &c, &fc)?;
        }
        prev = Some((c, fc));
    }
    // Closures and Čech operators make the conditional product laws bite.
    for k in 0..config.random_tables / 5 {
        let sd = seed_of(k).wrapping_add(1 << 32);
        let pairs = [
            (random_closure(n, sd)?, random_closure(n, sd ^ 1)?),
            (random_cech(n, sd)?, random_cech(n, sd ^ 1)?),
            (random_cech(n, sd)?.idempotent_hull().materialize()?, random_cech(n, sd ^ 1)?.idempotent_hull().materialize()?),
        ];
        for (c, s) in pairs {
            let (fc, fs) = (c.validate()?, s.validate()?);
            single_laws(t, &format!("{tag} seed {sd}"), &c, &fc)?;
            pair_laws(t, &format!("{tag} seed {sd}"), &c, &fc, &s, &fs)?;
        }
    }
    Ok(())
}

/// `(c ∗ s) ∗ u = c ∗ (s ∗ u)` over random triples.
pub fn associativity(t: &mut Tally, config: &LawConfig) -> Result<()> {
    let n = config.n;
    for k in 0..config.triples {
        let base = config.seed.wrapping_mul(0x5851_f42d).wrapping_add(3 * k as u64).wrapping_add(1 << 40);
        let c = random_preclosure(n, base)?;
        let s = random_preclosure(n, base + 1)?;
        let u = random_preclosure(n, base + 2)?;
        let left = convolve(&convolve(&c, &s)?.materialize()?, &u)?;
        let right = convolve(&c, &convolve(&s, &u)?.materialize()?)?;
        let d = left.first_difference(&right)?;
        t.check(ASSOCIATIVITY, d.is_none(), || format!("seeds {base}..{} at A = {}", base + 2, d.unwrap_or_default()));
    }
    Ok(())
}

/// Runs every law over the configured instances and returns one report per law.
pub fn law_suite(config: &LawConfig) -> Result<Vec<LawReport>> {
    let mut t = Tally::default();
    convolution_algebra(&mut t, config)?;
    associativity(&mut t, config)?;

    for (name, q) in all_fixtures() {
        for c in catalog(&q) {
            inner_outer_laws(&mut t, name, &q, &c)?;
            if c.known_idempotent() && q.size() <= 6 {
                union_laws(&mut t, name, &c);
            }
        }
        for c in enriched_catalog(&q) {
            point_laws(&mut t, name, &q, &c)?;
            for s in saturated_closures(&q, 7)? {
                convolution_extreme_laws(&mut t, name, &q, &c, &s)?;
            }
        }
    }
    let posets4 = enum_posets(4)?;
    let mut r = rng(config.seed ^ 0xe1e1);
    for k in 0..config.enriched_cases {
        let idx = r.gen_range(0..posets4.len());
        let q = &posets4[idx];
        let sd = config.seed.wrapping_add(k as u64);
        let tag = format!("poset #{idx} of 4, seed {sd}");
        for c in random_enriched(q, sd)? {
            inner_outer_laws(&mut t, &tag, q, &c)?;
            point_laws(&mut t, &tag, q, &c)?;
            for s in saturated_closures(q, sd)? {
                convolution_extreme_laws(&mut t, &tag, q, &c, &s)?;
            }
        }
        let closure = random_closure(4, sd)?;
        union_laws(&mut t, &tag, &closure);
        family_laws(&mut t, 4, sd, &random_preclosure(4, sd ^ 5)?)?;
        pullback_laws(&mut t, sd)?;
    }

    for n in 0..=3 {
        for fam in enum_moore(n)? {
            let closed = PreclosureOp::generated(n, &fam)?.closed_sets()?;
            t.check(MOORE_CLOSED_SETS, closed == fam, || format!("n = {n}, family {fam:?}"));
        }
    }

    let v = chain_into_d12()?;
    t.check(GALOIS_TRANSFER, v.holds, || format!("C3 into D12: {v:?}"));
    let run = random_embedding_checks(config.embeddings, 4, config.seed)?;
    for _ in 0..run.embeddings {
        t.check(GALOIS_TRANSFER, run.violations == 0, || run.first_counterexample.clone().unwrap_or_default());
    }
    Ok(t.into_reports())
}

/// The conv_order fast path against the definitional product, for the acceptance gate.
pub fn inner_outer_suite() -> Result<LawReport> {
    let mut t = Tally::default();
    for (name, q) in all_fixtures() {
        for c in catalog(&q) {
            inner_outer_laws(&mut t, name, &q, &c)?;
        }
        // conv_order's own strategy choice against the definitional product.
        for c in catalog(&q) {
            for dir in [Dir::Up, Dir::Down] {
                let fast = conv_order(&c, &q, dir)?;
                let slow = conv_order_with(&c, &q, dir, Strategy::Definitional)?;
                let d = fast.first_difference(&slow)?;
                t.check(INNER_EQUALS_DEFINITIONAL, d.is_none(), || {
                    format!("{} {dir:?} on {name} at {}", c.name(), d.unwrap_or_default())
                });
            }
        }
    }
    Ok(t.into_reports().remove(0))
}
