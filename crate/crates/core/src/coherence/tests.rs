use super::*;
use crate::event::Universe;
use crate::lp::HullOutcome;
use crate::rational::{int, parse, ratio};
use crate::trivalent::{trivalent_and, ConditionalEvent, Kind};

fn ce(s: &str) -> ConditionalEvent {
    ConditionalEvent::parse(s).unwrap()
}

fn assess(items: &[(&str, Rational)]) -> Assessment {
    Assessment::on_events(items.iter().map(|(s, v)| (ce(s), v.clone())).collect()).unwrap()
}

fn ahbk() -> Universe {
    Universe::new(&["A", "H", "B", "K"]).unwrap()
}

fn example_two() -> (Assessment, Universe) {
    let a = assess(&[
        ("A", parse("0.4").unwrap()),
        ("B", parse("0.3").unwrap()),
        ("A | B given TRUE", parse("0.8").unwrap()),
    ]);
    (a, Universe::new(&["A", "B"]).unwrap())
}

#[test]
fn union_below_its_parts_is_a_sure_loss() {
    let (a, u) = example_two();
    assert!(matches!(check_hull(&a, &u).unwrap(), HullOutcome::Outside(_)));
    let v = check_coherence(&a, &u).unwrap();
    assert!(!v.coherent);
    let book = dutch_book(&a, &u).unwrap().unwrap();
    assert_eq!(book.subfamily, vec![0, 1, 2]);
    assert_eq!(book.stakes, vec![int(1), int(1), int(-1)]);
    let gains: Vec<Rational> = book.gains.iter().map(|(_, g)| g.clone()).collect();
    assert_eq!(gains, vec![ratio(11, 10), ratio(1, 10), ratio(1, 10), ratio(1, 10)]);
    assert_eq!(book.margin, ratio(1, 10));

    let t = build_points(&a, &u).unwrap();
    let stakes = [int(1), int(1), int(-1)];
    for (k, g) in t.table.constituents.iter().zip(&gains) {
        assert_eq!(&random_gain(&a, &stakes, k).unwrap(), g);
    }
    assert_eq!(penalty_loss(&a, &t.table.constituents[0]).unwrap(), ratio(89, 100));
}

#[test]
fn inclusion_region_is_below_the_diagonal() {
    let u = ahbk()
        .impossible("A & H & ~K")
        .unwrap()
        .impossible("A & H & ~B & K")
        .unwrap()
        .impossible("~H & ~B & K")
        .unwrap()
        .impossible("~A & H & B & K")
        .unwrap();
    for (x, y) in [(ratio(1, 5), ratio(2, 5)), (ratio(1, 2), ratio(1, 2)), (ratio(3, 5), ratio(2, 5)), (int(1), int(0))]
    {
        let a = assess(&[("A | H", x.clone()), ("B | K", y.clone())]);
        assert_eq!(check_coherence(&a, &u).unwrap().coherent, x <= y, "{x} {y}");
    }
    let t = build_points(&assess(&[("A | H", ratio(1, 3)), ("B | K", ratio(1, 2))]), &u).unwrap();
    let mut pts = t.points.clone();
    pts.sort();
    let mut want =
        vec![vec![int(1), int(1)], vec![ratio(1, 3), int(1)], vec![int(0), ratio(1, 2)], vec![int(0), int(0)]];
    want.sort();
    assert_eq!(pts, want);
}

#[test]
fn whole_family_hull_is_not_sufficient() {
    let u = Universe::new(&["E1", "H1", "E2", "H2"]).unwrap().impossible("E1 & H1").unwrap();
    let a = assess(&[("E1 | H1", ratio(1, 2)), ("E2 | H2", int(1))]);
    assert!(matches!(check_hull(&a, &u).unwrap(), HullOutcome::Inside(_)));
    let v = check_coherence(&a, &u).unwrap();
    let f = v.failure.unwrap();
    assert_eq!(f.subfamily, vec![0]);
    assert_eq!(f.margin, ratio(1, 2));
    assert_eq!(f.stakes, vec![int(-1)]);
}

#[test]
fn out_of_range_value_projects_to_one() {
    let a = assess(&[("A", ratio(6, 5))]);
    let u = Universe::new(&["A"]).unwrap();
    let d = brier_dominator(&a, &u).unwrap().unwrap();
    assert_eq!(d.values, vec![int(1)]);
    assert!(brier_dominator(&assess(&[("A", ratio(1, 2))]), &u).unwrap().is_none());
}

#[test]
fn dominator_for_the_sure_loss_example() {
    let (a, u) = example_two();
    let d = brier_dominator(&a, &u).unwrap().unwrap();
    assert!(d.losses.iter().all(|(before, after)| after < before));
    assert!(check_coherence(&a.with_values(d.values.clone()).unwrap(), &u).unwrap().coherent);
}

#[test]
fn kleene_conjunction_extension() {
    let u = ahbk();
    let (x, y) = (ce("A | H"), ce("B | K"));
    let a = Assessment::on_events(vec![(x.clone(), ratio(1, 2)), (y.clone(), ratio(3, 4))]).unwrap();
    let target = Quantity::event(&trivalent_and(Kind::K, &x, &y, &u).unwrap());
    let i = extension_bounds(&a, &target, &u).unwrap();
    assert_eq!(i.exact(), Some((&int(0), &ratio(1, 2))));
}

#[test]
fn conditional_target_endpoints_are_exact() {
    // P(A) = a, P(B|A) = b gives P(AB) = ab and P(B) in [ab, ab + 1 - a], so
    // P(A|B) = ab / P(B) ranges over [ab / (ab + 1 - a), 1].
    let u = Universe::new(&["A", "B"]).unwrap();
    for (a, b) in [(ratio(3, 5), ratio(1, 2)), (ratio(1, 3), ratio(1, 4)), (ratio(9, 10), ratio(2, 7))] {
        let base = assess(&[("A", a.clone()), ("B | A", b.clone())]);
        let i = extension_bounds(&base, &Quantity::event(&ce("A | B")), &u).unwrap();
        let ab = &a * &b;
        let lower = &ab / (&ab + int(1) - &a);
        assert_eq!(i.exact(), Some((&lower, &int(1))), "a = {a}, b = {b}");
        let below = base.extended(Quantity::event(&ce("A | B")), &lower - ratio(1, 1000));
        assert!(!check_coherence(&below, &u).unwrap().coherent);
    }
}

#[test]
fn incoherent_base_has_no_extension() {
    let (a, u) = example_two();
    assert!(matches!(extension_bounds(&a, &Quantity::event(&ce("A")), &u), Err(crate::Error::Incoherent)));
}

#[test]
fn family_cap_is_enforced() {
    let u = Universe::new(&["A"]).unwrap();
    let a = assess(&[("A", ratio(1, 2)), ("A", ratio(1, 2)), ("A", ratio(1, 2))]);
    let e = Engine { max_family: 2 };
    assert!(matches!(e.check_coherence(&a, &u), Err(crate::Error::FamilyTooLarge { size: 3, cap: 2 })));
}

#[test]
fn gain_and_loss_vanish_on_the_all_void_constituent() {
    let u = ahbk();
    let a = assess(&[("A | H", ratio(1, 3)), ("B | K", ratio(1, 4))]);
    let t = build_points(&a, &u).unwrap();
    let c0 = t.table.c0().unwrap();
    assert_eq!(random_gain(&a, &[int(3), int(-2)], c0).unwrap(), int(0));
    assert_eq!(penalty_loss(&a, c0).unwrap(), int(0));
}
