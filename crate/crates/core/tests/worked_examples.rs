//! Small hand-checked instances for each operation.

use preclosure::convolution::{conv_family, conv_order, convolve, sup_inner};
use preclosure::extremality::{
    closure_chain_check, completely_relatively_maximal, hierarchy_report, irreducible, relatively_maximal,
    strongly_irreducible,
};
use preclosure::harness::enumerate::{enum_moore, enum_posets};
use preclosure::harness::galois::{chain_into_d12, galois_check};
use preclosure::harness::hunt::counterexample_search;
use preclosure::harness::laws::{convolution_algebra, associativity, LawConfig, Tally};
use preclosure::harness::random::random_preclosure;
use preclosure::io::parse_poset;
use preclosure::operator::{enrichment_check, is_right_absorbing, separates_points, Separation};
use preclosure::points::{
    attaching_points, caratheodory, classify_op, compact_points, copoints, extreme_points, kit_points, way_below,
    Context, Order,
};
use preclosure::qoset::fixtures::*;
use preclosure::qoset::{Bound, Extremal, Extremum, Structure};
use preclosure::representation::{factor_divisor_lattice, generates, has_kmp, rep1, transfer_check, Generation};
use preclosure::{Builtin, Dir, Error, PreclosureOp, Qoset, Subset};

/// The subset of `q` with the given labels.
fn s(q: &Qoset, labels: &[&str]) -> Subset {
    labels.iter().map(|l| q.index_of(l).unwrap_or_else(|| panic!("no label {l}"))).collect()
}

fn sorted(mut v: Vec<Subset>) -> Vec<Subset> {
    v.sort();
    v
}

fn d(m: u64) -> Qoset {
    divisors(m).0
}

fn op(b: Builtin, q: &Qoset) -> PreclosureOp {
    PreclosureOp::builtin(b, q)
}

fn primary(q: &Qoset, c: &PreclosureOp) -> Context {
    Context::new(q, c, Order::Primary).unwrap()
}

fn equivalence(q: &Qoset, c: &PreclosureOp) -> Context {
    Context::new(q, c, Order::Equivalence).unwrap()
}

/// `y1, y3 < x1, x2, x3` and `y2 < x1, x2`.
fn two_row_truncation() -> Qoset {
    let pairs = [(3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (5, 0), (5, 1), (5, 2)];
    Qoset::new(vec!["x1", "x2", "x3", "y1", "y2", "y3"], &pairs).unwrap()
}

#[test]
fn posets_load_from_label_pairs() {
    let c3 = parse_poset(r#"{"labels":["0","1","2"],"leq_pairs":[[0,1],[1,2]]}"#).unwrap();
    assert!(c3.leq(0, 2) && c3.leq(2, 2) && !c3.leq(2, 0));
    let p = parse_poset(r#"{"labels":["y1","y2","x1","x2"],"leq_pairs":[[0,2],[0,3],[1,2],[1,3]]}"#).unwrap();
    assert_eq!(p, p4());
    let q = parse_poset(r#"{"labels":["a","b"],"leq_pairs":[[0,1],[1,0]]}"#).unwrap();
    assert!(!q.is_poset() && q.equiv(0, 1));
}

#[test]
fn cones_bounds_and_extrema() {
    let (c3, p, d12, m) = (chain(3), p4(), d(12), m4());
    assert_eq!(c3.cone(s(&c3, &["1"]), Dir::Down), s(&c3, &["0", "1"]));
    assert_eq!(p.cone(s(&p, &["y1"]), Dir::Up), s(&p, &["y1", "x1", "x2"]));
    assert_eq!(d12.cone(s(&d12, &["6"]), Dir::Down), s(&d12, &["1", "2", "3", "6"]));

    assert_eq!(p.bounds(s(&p, &["y1", "y2"]), Bound::Upper), s(&p, &["x1", "x2"]));
    assert_eq!(c3.bounds(Subset::EMPTY, Bound::Upper), c3.full());
    assert_eq!(d12.bounds(s(&d12, &["4", "6"]), Bound::Lower), s(&d12, &["1", "2"]));

    assert_eq!(d12.extremum_set(s(&d12, &["2", "3"]), Extremum::Sup), s(&d12, &["6"]));
    assert_eq!(p.extremum_set(s(&p, &["x1", "x2"]), Extremum::Inf), Subset::EMPTY);
    assert_eq!(m.extremum_set(Subset::EMPTY, Extremum::Inf), s(&m, &["top"]));

    assert_eq!(p.maximal_elements(p.full(), Extremal::Max), s(&p, &["x1", "x2"]));
    assert_eq!(c3.maximal_elements(s(&c3, &["0", "1"]), Extremal::Max), s(&c3, &["1"]));
    assert_eq!(q2().maximal_elements(q2().full(), Extremal::Max), q2().full());

    assert_eq!(q2().saturate(s(&q2(), &["a"])), q2().full());
    assert_eq!(c3.saturate(s(&c3, &["1"])), s(&c3, &["1"]));
    assert_eq!(p.saturate(s(&p, &["y1", "x1"])), s(&p, &["y1", "x1"]));
}

#[test]
fn structure_predicates_filters_and_riesz() {
    let (c3, p, d12, m) = (chain(3), p4(), d(12), m4());
    assert!(!p.is_structure(s(&p, &["x1", "x2"]), Structure::Filtered));
    assert!(c3.is_structure(s(&c3, &["1", "2"]), Structure::Filter));
    assert!(d12.is_structure(s(&d12, &["2", "3"]), Structure::Antichain));

    let want = vec![s(&p, &["x1"]), s(&p, &["x2"]), s(&p, &["y1", "x1", "x2"]), s(&p, &["y2", "x1", "x2"])];
    assert_eq!(sorted(p.filters().unwrap()), sorted(want));
    let want = vec![s(&c3, &["2"]), s(&c3, &["1", "2"]), c3.full()];
    assert_eq!(sorted(c3.filters().unwrap()), sorted(want));
    let a2 = antichain(2);
    assert_eq!(sorted(a2.filters().unwrap()), sorted(vec![s(&a2, &["a"]), s(&a2, &["b"])]));

    assert!(!p.is_riesz().unwrap());
    assert!(c3.is_riesz().unwrap());
    assert!(m.is_riesz().unwrap());
}

#[test]
fn duals_reverse_the_order() {
    let c3 = chain(3).dual();
    assert!(c3.leq(2, 1) && c3.leq(1, 0) && !c3.leq(0, 1));
    let p = p4().dual();
    assert!(p.lt(p.index_of("x1").unwrap(), p.index_of("y2").unwrap()));
    assert_eq!(q2().dual(), q2());
}

#[test]
fn evaluations_and_flags() {
    let (c3, d12) = (chain(3), d(12));
    assert_eq!(op(Builtin::Down, &c3).eval(s(&c3, &["1"])), s(&c3, &["0", "1"]));
    assert_eq!(op(Builtin::Dm, &d12).eval(s(&d12, &["2", "3"])), s(&d12, &["1", "2", "3", "6"]));
    let t = PreclosureOp::generated(3, &c3.filters().unwrap()).unwrap();
    assert_eq!(t.eval(Subset::EMPTY), s(&c3, &["2"]));

    let f = op(Builtin::Down, &c3).validate().unwrap();
    assert!(f.is_preclosure && f.is_untied && f.is_idempotent && f.is_cech && f.is_topological && f.is_finitary);
    let dm = op(Builtin::Dm, &d12);
    let f = dm.validate().unwrap();
    assert!(f.is_idempotent && !f.is_cech);
    let two_and_three = dm.eval(s(&d12, &["2"])).union(dm.eval(s(&d12, &["3"])));
    assert_eq!(two_and_three, s(&d12, &["1", "2", "3"]));

    let mut images: Vec<Subset> = Subset::all(2).collect();
    images[1] = Subset::EMPTY;
    let bad = PreclosureOp::table(2, images).unwrap();
    assert!(!bad.validate().unwrap().is_preclosure);
}

#[test]
fn closed_sets_and_generated_operators() {
    let d12 = d(12);
    let principal: Vec<Subset> = (0..6).map(|x| d12.down_of(x)).collect();
    assert_eq!(sorted(op(Builtin::Dm, &d12).closed_sets().unwrap()), sorted(principal.clone()));
    let c3 = chain(3);
    let want = vec![Subset::EMPTY, s(&c3, &["2"]), s(&c3, &["1", "2"]), c3.full()];
    assert_eq!(sorted(op(Builtin::Up, &c3).closed_sets().unwrap()), sorted(want));
    let a2 = antichain(2);
    let g = PreclosureOp::generated(2, &[s(&a2, &["a"]), s(&a2, &["b"])]).unwrap();
    assert_eq!(sorted(g.closed_sets().unwrap()), sorted(Subset::all(2).collect()));

    let g = PreclosureOp::generated(6, &principal).unwrap();
    assert_eq!(g.eval(s(&d12, &["2", "3"])), s(&d12, &["1", "2", "3", "6"]));
    let p = p4();
    let g = PreclosureOp::generated(4, &p.filters().unwrap()).unwrap();
    assert_eq!(g.eval(Subset::EMPTY), Subset::EMPTY);
    let g = PreclosureOp::generated(1, &[]).unwrap();
    assert_eq!(g.eval(Subset::singleton(0)), Subset::full(1));
}

#[test]
fn idempotent_hull_iterates_to_a_fixed_point() {
    let step = PreclosureOp::from_fn(3, "step", |a: Subset| {
        a.iter().filter(|&x| x >= 1).fold(a, |acc, x| acc.with(x - 1))
    });
    assert_eq!(step.eval(Subset::singleton(2)), Subset::from_indices([1, 2]));
    assert_eq!(step.idempotent_hull().eval(Subset::singleton(2)), Subset::full(3));
}

#[test]
fn builtins_on_fixtures() {
    let (c3, p, d12) = (chain(3), p4(), d(12));
    assert_eq!(op(Builtin::Dm, &d12).eval(s(&d12, &["4", "6"])), d12.full());
    assert_eq!(op(Builtin::T, &c3).eval(Subset::EMPTY), s(&c3, &["2"]));
    assert_eq!(op(Builtin::H, &p).eval(s(&p, &["x1", "x2"])), s(&p, &["x1", "x2"]));
}

#[test]
fn enrichment_and_separation() {
    let (c3, p, d12) = (chain(3), p4(), d(12));
    let e = enrichment_check(&d12, &op(Builtin::Dm, &d12), Dir::Down).unwrap();
    assert!(e.compatible && e.right_absorbing && e.absorbing);
    let e = enrichment_check(&c3, &op(Builtin::Up, &c3), Dir::Down).unwrap();
    assert!(!e.compatible && !e.right_absorbing && !e.absorbing);
    let t = op(Builtin::T, &p);
    assert!(!is_right_absorbing(&p, &t, Dir::Down).unwrap());
    let down_t = p.cone(t.eval(s(&p, &["x1"])), Dir::Down);
    assert_eq!(down_t, s(&p, &["y1", "y2", "x1"]));

    assert!(separates_points(&d12, &op(Builtin::Dm, &d12), Separation::Forward).unwrap());
    assert!(separates_points(&c3, &op(Builtin::T, &c3), Separation::Dual).unwrap());
    let lift = PreclosureOp::from_fn(3, "lift", |a: Subset| if a.contains(0) { a.with(1) } else { a });
    assert!(!separates_points(&c3, &lift, Separation::Forward).unwrap());
}

#[test]
fn convolution_of_cones_on_a_chain() {
    let c3 = chain(3);
    let prod = convolve(&op(Builtin::Down, &c3), &op(Builtin::Up, &c3)).unwrap();
    assert_eq!(prod.eval(s(&c3, &["0", "2"])), s(&c3, &["0", "2"]));
    assert_eq!(prod.eval(s(&c3, &["1"])), s(&c3, &["1"]));
    for b in Builtin::ALL {
        let top = convolve(&op(b, &c3), &PreclosureOp::top(3)).unwrap();
        for a in Subset::all(3) {
            assert_eq!(top.eval(a), c3.full());
        }
    }
}

#[test]
fn order_convolutions() {
    let (c3, d12) = (chain(3), d(12));
    let up = conv_order(&op(Builtin::Dm, &d12), &d12, Dir::Up).unwrap();
    assert_eq!(up.eval(s(&d12, &["4", "6"])), s(&d12, &["1", "4", "6", "12"]));
    assert_eq!(up.eval(s(&d12, &["2", "3"])), s(&d12, &["1", "2", "3", "6"]));
    let t_down = conv_order(&op(Builtin::T, &c3), &c3, Dir::Down).unwrap();
    assert_eq!(t_down.eval(s(&c3, &["0", "1"])), c3.full());
}

#[test]
fn family_convolutions() {
    let p = p4();
    let down = op(Builtin::Down, &p);
    let t = conv_family(&down, &p.filters().unwrap()).unwrap();
    let y1 = p.index_of("y1").unwrap();
    assert!(t.eval(s(&p, &["y1", "x1", "x2"])).contains(y1));
    assert_eq!(conv_family(&down, &[]).unwrap().eval(Subset::EMPTY), p.full());
    let c3 = chain(3);
    let single = conv_family(&op(Builtin::Down, &c3), &[s(&c3, &["2"])]).unwrap();
    assert_eq!(single.eval(s(&c3, &["0", "2"])), s(&c3, &["0", "2"]));
}

#[test]
fn sups_of_subsets() {
    let d12 = d(12);
    let dm = op(Builtin::Dm, &d12);
    assert_eq!(sup_inner(&dm, &d12, s(&d12, &["2", "3"])).unwrap(), s(&d12, &["1", "2", "3", "6"]));
    let d360 = d(360);
    let got = sup_inner(&op(Builtin::Dm, &d360), &d360, s(&d360, &["8", "9", "5"])).unwrap();
    assert_eq!(got, s(&d360, &["1", "8", "9", "5", "72", "40", "45", "360"]));
    for (q, bottoms) in [(chain(3), vec!["0"]), (p4(), vec![]), (d12.clone(), vec!["1"])] {
        assert_eq!(sup_inner(&op(Builtin::Dm, &q), &q, Subset::EMPTY).unwrap(), s(&q, &bottoms));
    }
}

#[test]
fn copoints_and_attaching_points() {
    let d12 = d(12);
    let dm = op(Builtin::Dm, &d12);
    let ctx = primary(&d12, &dm);
    let down = |l: &str| d12.down_of(d12.index_of(l).unwrap());
    let top = d12.index_of("12").unwrap();
    assert_eq!(sorted(copoints(&ctx, top).unwrap()), sorted(vec![down("6"), down("4")]));
    assert!(copoints(&ctx, d12.index_of("1").unwrap()).unwrap().is_empty());
    let d360 = d(360);
    let dm360 = op(Builtin::Dm, &d360);
    let ctx360 = primary(&d360, &dm360);
    let down360 = |l: &str| d360.down_of(d360.index_of(l).unwrap());
    let want = vec![down360("180"), down360("120"), down360("72")];
    assert_eq!(sorted(copoints(&ctx360, d360.size() - 1).unwrap()), sorted(want));

    assert_eq!(attaching_points(&ctx, down("4")).unwrap(), s(&d12, &["3", "6", "12"]));
    assert!(attaching_points(&ctx, down("6")).unwrap().contains(d12.index_of("4").unwrap()));
    let c3 = chain(3);
    let c3_down = op(Builtin::Down, &c3);
    let c3_ctx = primary(&c3, &c3_down);
    assert_eq!(attaching_points(&c3_ctx, s(&c3, &["0", "1"])).unwrap(), s(&c3, &["2"]));
}

#[test]
fn compact_and_extreme_points() {
    let d12 = d(12);
    let dm = op(Builtin::Dm, &d12);
    assert_eq!(compact_points(&primary(&d12, &dm), d12.full()), s(&d12, &["2", "3", "4"]));
    let d360 = d(360);
    let dm360 = op(Builtin::Dm, &d360);
    assert_eq!(compact_points(&primary(&d360, &dm360), d360.full()), s(&d360, &["2", "4", "8", "3", "9", "5"]));
    let c3 = chain(3);
    let down = op(Builtin::Down, &c3);
    assert_eq!(compact_points(&primary(&c3, &down), c3.full()), c3.full());

    assert_eq!(extreme_points(&primary(&d12, &dm), d12.full()), Subset::EMPTY);
    let dm_up = conv_order(&dm, &d12, Dir::Up).unwrap();
    assert_eq!(extreme_points(&equivalence(&d12, &dm_up), d12.full()), s(&d12, &["2", "3", "4"]));
    let t_down = conv_family(&down, &c3.filters().unwrap()).unwrap();
    assert_eq!(extreme_points(&equivalence(&c3, &t_down), c3.full()), s(&c3, &["0", "1"]));
}

#[test]
fn kit_points_and_way_below() {
    let d12 = d(12);
    let dm = op(Builtin::Dm, &d12);
    let ctx = primary(&d12, &dm);
    assert_eq!(kit_points(&ctx).unwrap(), d12.full());
    let d360 = d(360);
    let dm360 = op(Builtin::Dm, &d360);
    assert_eq!(kit_points(&primary(&d360, &dm360)).unwrap(), d360.full());

    let i = |l: &str| d12.index_of(l).unwrap();
    assert!(way_below(&ctx, i("2"), i("12")).unwrap());
    assert!(!way_below(&ctx, i("6"), i("12")).unwrap());
    assert!(dm.eval(s(&d12, &["4", "3"])).contains(i("12")));
}

#[test]
fn divisor_lattice_classification() {
    let d12 = d(12);
    let dm = op(Builtin::Dm, &d12);
    let class = classify_op(&primary(&d12, &dm)).unwrap();
    assert_eq!(class.continuous, Some(true));
    assert_eq!(class.algebraic, Some(true));
    assert!(class.distributive && class.kitted && class.local);
}

#[test]
fn caratheodory_numbers() {
    let d12 = d(12);
    let dm = op(Builtin::Dm, &d12);
    let ctx = primary(&d12, &dm);
    assert_eq!(caratheodory(&ctx).unwrap(), 2);
    let counts = classify_op(&ctx).unwrap().copoint_counts;
    assert_eq!(counts.iter().max(), Some(&2));
    assert_eq!(counts[d12.index_of("6").unwrap()], 2);
    assert_eq!(counts[d12.index_of("12").unwrap()], 2);

    let d360 = d(360);
    let dm360 = op(Builtin::Dm, &d360);
    assert_eq!(caratheodory(&primary(&d360, &dm360)).unwrap(), 3);
    assert!(dm360.eval(s(&d360, &["8", "9", "5"])).contains(d360.size() - 1));
    let c3 = chain(3);
    let down = op(Builtin::Down, &c3);
    assert_eq!(caratheodory(&primary(&c3, &down)).unwrap(), 1);
}

#[test]
fn irreducible_and_relatively_maximal_elements() {
    let (c3, p, m) = (chain(3), p4(), m4());
    assert_eq!(irreducible(&p).unwrap(), p.full());
    assert_eq!(irreducible(&c3).unwrap(), s(&c3, &["0", "1"]));
    assert_eq!(irreducible(&m).unwrap(), s(&m, &["a", "b"]));

    assert_eq!(relatively_maximal(&p).unwrap(), p.full());
    let y1 = p.index_of("y1").unwrap();
    assert_eq!(p.max_of(p.full().minus(p.up_of(y1))), s(&p, &["y2"]));
    assert_eq!(relatively_maximal(&c3).unwrap(), s(&c3, &["0", "1"]));
    assert_eq!(completely_relatively_maximal(&m), s(&m, &["a", "b"]));

    assert_eq!(strongly_irreducible(&p), Subset::EMPTY);
    assert_eq!(strongly_irreducible(&c3), s(&c3, &["0", "1"]));
    assert_eq!(strongly_irreducible(&m), s(&m, &["a", "b"]));
}

#[test]
fn extremality_hierarchies() {
    let p = p4();
    let r = hierarchy_report(&p).unwrap();
    assert_eq!((r.str_irr, r.rmax, r.irr), (Subset::EMPTY, p.full(), p.full()));
    assert!(!r.riesz && r.hierarchy_ok && r.characterisations_ok);

    let c3 = chain(3);
    let r = hierarchy_report(&c3).unwrap();
    let low = s(&c3, &["0", "1"]);
    assert_eq!((r.str_irr, r.rmax, r.irr), (low, low, low));
    assert!(r.riesz && r.hierarchy_ok && r.characterisations_ok);

    let q = two_row_truncation();
    let r = hierarchy_report(&q).unwrap();
    assert_eq!(r.rmax, r.irr);
    assert!(r.hierarchy_ok && r.characterisations_ok);
}

#[test]
fn chains_of_hull_operators() {
    let p = p4();
    let r = closure_chain_check(&p, s(&p, &["x1", "x2"])).unwrap();
    assert_eq!(r.hull, s(&p, &["x1", "x2"]));
    assert_eq!(r.filter_down, r.hull);
    assert_eq!(r.ranzato_down, p.full());
    assert!(r.ok);

    let c3 = chain(3);
    let r = closure_chain_check(&c3, s(&c3, &["2"])).unwrap();
    assert_eq!((r.hull, r.filter_down, r.ranzato_down), (s(&c3, &["2"]), s(&c3, &["2"]), s(&c3, &["2"])));

    let m = m4();
    let r = closure_chain_check(&m, s(&m, &["a", "b"])).unwrap();
    // The empty family is a subset of every set and its inf is the top, so an
    // inf-closed set always contains the top.
    assert_eq!((r.hull, r.filter_down, r.ranzato_down), (m.full(), m.full(), m.full()));
    assert!(r.riesz && r.ok);
}

#[test]
fn krein_milman_instances() {
    let c3 = chain(3);
    let down = op(Builtin::Down, &c3);
    let ctx = equivalence(&c3, &down);
    let k = s(&c3, &["0", "1"]);
    assert!(has_kmp(&ctx, k));
    assert_eq!(extreme_points(&ctx, k), s(&c3, &["1"]));
    let t_down = conv_family(&down, &c3.filters().unwrap()).unwrap();
    assert!(has_kmp(&equivalence(&c3, &t_down), c3.full()));
    assert_eq!(t_down.eval(k), c3.full());

    let d12 = d(12);
    let dm_up = conv_order(&op(Builtin::Dm, &d12), &d12, Dir::Up).unwrap();
    assert!(has_kmp(&equivalence(&d12, &dm_up), d12.full()));
}

#[test]
fn sup_and_inf_generation() {
    let d12 = d(12);
    assert!(generates(&d12, s(&d12, &["2", "3", "4"]), d12.full(), Generation::SupGen).unwrap());
    let m = m4();
    assert!(generates(&m, s(&m, &["a", "b"]), m.full(), Generation::InfGen).unwrap());
    let p = p4();
    assert!(!generates(&p, s(&p, &["x1"]), p.full(), Generation::InfGen).unwrap());
}

#[test]
fn inf_generation_by_relatively_maximal_elements() {
    let m = m4();
    assert!(rep1(&m, m.full()).unwrap().holds);
    let c3 = chain(3);
    let v = rep1(&c3, c3.full()).unwrap();
    assert!(v.holds);
    assert_eq!(v.generators, s(&c3, &["0", "1"]));
    let p = p4();
    let v = rep1(&p, s(&p, &["y1", "x1", "x2"])).unwrap();
    assert!(v.induced_holds);
    assert_eq!(v.induced_generators, s(&p, &["x1", "x2"]));
}

#[test]
fn factorizations() {
    assert_eq!(factor_divisor_lattice(360).unwrap().top, vec![8, 9, 5]);
    assert_eq!(factor_divisor_lattice(12).unwrap().top, vec![4, 3]);
    assert!(factor_divisor_lattice(1).unwrap().top.is_empty());
}

#[test]
fn krein_milman_transfer_instances() {
    let p = p4();
    let down = op(Builtin::Down, &p);
    let ctx = equivalence(&p, &down);
    let all: Vec<Subset> = Subset::all(4).collect();
    let v = transfer_check(&ctx, &p.filters().unwrap(), &all).unwrap();
    assert!(v.hypothesis && v.conclusion && v.violations == 0);

    let c3 = chain(3);
    let down = op(Builtin::Down, &c3);
    let ctx = equivalence(&c3, &down);
    let v = transfer_check(&ctx, &[s(&c3, &["1", "2"])], &[c3.full()]).unwrap();
    assert!(v.hypothesis && v.conclusion);
    let v = transfer_check(&ctx, &[s(&c3, &["1", "2"])], &[]).unwrap();
    assert!(v.hypothesis && v.conclusion && v.cases.is_empty());
}

#[test]
fn enumerations() {
    assert_eq!(enum_posets(3).unwrap().len(), 19);
    assert_eq!(enum_posets(5).unwrap().len(), 4231);
    assert_eq!(enum_moore(3).unwrap().len(), 61);
}

#[test]
fn seeded_random_preclosures() {
    let c = random_preclosure(3, 1).unwrap();
    assert!(c.validate().unwrap().is_preclosure);
    assert_eq!(c.images().unwrap(), random_preclosure(3, 1).unwrap().images().unwrap());
    let empty = random_preclosure(0, 7).unwrap();
    assert_eq!(empty.images().unwrap(), vec![Subset::EMPTY]);
}

#[test]
fn convolution_laws_hold_on_small_runs() {
    let config = LawConfig { n: 4, random_tables: 40, triples: 20, ..LawConfig::default() };
    let mut t = Tally::default();
    convolution_algebra(&mut t, &config).unwrap();
    associativity(&mut t, &config).unwrap();
    let reports = t.into_reports();
    assert!(!reports.is_empty());
    for r in reports {
        assert!(r.ok(), "{}: {:?}", r.law, r.first_counterexample);
    }
}

#[test]
fn galois_embeddings() {
    let v = chain_into_d12().unwrap();
    assert!(v.holds && v.violations == 0);
    let p = p4();
    let dm = op(Builtin::Dm, &p);
    let id: Vec<usize> = (0..4).collect();
    assert!(galois_check(&p, &dm, &p, &dm, &id, &id).unwrap().holds);
    let c3 = chain(3);
    let d12 = d(12);
    let err = galois_check(&c3, &op(Builtin::Dm, &c3), &d12, &op(Builtin::Dm, &d12), &[2, 1, 0], &[0, 1, 1, 2, 2, 2]);
    assert!(matches!(err, Err(Error::Embedding(_))));
}

#[test]
fn counterexample_hunts() {
    let raw = counterexample_search("irreducible-not-strongly-irreducible", 5).unwrap();
    assert_eq!(raw.witness.unwrap().n, 2);
    let w = counterexample_search("nonmaximal-irreducible-not-strongly-irreducible", 5).unwrap().witness.unwrap();
    assert_eq!(w.n, 4);
    let mut pairs = w.leq_pairs.clone();
    pairs.sort();
    let found = Qoset::new((0..4).map(|i| i.to_string()).collect(), &pairs).unwrap();
    let r = hierarchy_report(&found).unwrap();
    assert_eq!((r.irr, r.str_irr, r.riesz), (found.full(), Subset::EMPTY, false));
    for name in ["strongly-irreducible-not-relatively-maximal", "relatively-maximal-ne-irreducible"] {
        assert!(counterexample_search(name, 5).unwrap().witness.is_none(), "{name}");
    }
}
