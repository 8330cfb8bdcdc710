use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::coherence::{Assessment, Engine, Quantity};
use crate::error::Error;
use crate::event::Universe;
use crate::rational::{int, one, parse, ratio, zero, Rational};
use crate::trivalent::{gn_inclusion, ConditionalEvent};

fn free() -> Universe {
    Universe::new(&["A", "H", "B", "K"]).unwrap()
}

fn ce(s: &str) -> ConditionalEvent {
    ConditionalEvent::parse(s).unwrap()
}

fn sym(s: &str) -> Affine {
    Affine::symbol(s)
}

fn env(pairs: &[(&str, Rational)]) -> Env {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Index of the world with the given truth values of A, H, B, K.
fn world(u: &Universe, a: bool, h: bool, b: bool, k: bool) -> usize {
    let mask = a as u32 | (h as u32) << 1 | (b as u32) << 2 | (k as u32) << 3;
    u.worlds().iter().position(|&w| w == mask).unwrap()
}

#[test]
fn value_table_of_both_operators() {
    let u = free();
    let (a, b) = (ce("A | H"), ce("B | K"));
    let and = gs_and_crq(&a, &b, &sym("x"), &sym("y"), "z").values(&u).unwrap();
    let or = gs_or_crq(&a, &b, &sym("x"), &sym("y"), "w").values(&u).unwrap();
    let c = |v: i64| Affine::constant(int(v));
    // Rows by truth of A|H and B|K: true, false, void.
    let expect = |ah: Option<bool>, bk: Option<bool>| -> (Affine, Affine) {
        match (ah, bk) {
            (Some(true), Some(true)) => (c(1), c(1)),
            (Some(true), Some(false)) => (c(0), c(1)),
            (Some(true), None) => (sym("y"), c(1)),
            (Some(false), Some(true)) => (c(0), c(1)),
            (Some(false), Some(false)) => (c(0), c(0)),
            (Some(false), None) => (c(0), sym("y")),
            (None, Some(true)) => (sym("x"), c(1)),
            (None, Some(false)) => (c(0), sym("x")),
            (None, None) => (sym("z"), sym("w")),
        }
    };
    for m in 0..16u32 {
        let bit = |i: u32| m >> i & 1 == 1;
        let ah = bit(1).then_some(bit(0));
        let bk = bit(3).then_some(bit(2));
        let w = world(&u, bit(0), bit(1), bit(2), bit(3));
        let (ze, we) = expect(ah, bk);
        assert_eq!(and[w], ze, "{}", u.describe(w));
        assert_eq!(or[w], we, "{}", u.describe(w));
    }
}

#[test]
fn identities_hold_with_their_prevision_equations() {
    let expected = [
        (CompoundIdentity::Idempotence, "-x + z"),
        (CompoundIdentity::UnitConditioning, "-x + z"),
        (CompoundIdentity::ExcludedMiddle, "-1 + w"),
        (CompoundIdentity::Split, "-x + z1 + z2"),
        (CompoundIdentity::Decomposition, "w - x - z'"),
        (CompoundIdentity::DecompositionRight, "w - y - z'"),
        (CompoundIdentity::SumRule, "w - x - y + z"),
        (CompoundIdentity::DeMorgan, "-1 + w + z'"),
        (CompoundIdentity::Chain, "-t + z"),
    ];
    for (id, eq) in expected {
        let r = compound_identity_check(id).unwrap();
        assert!(r.maps_agree(), "{id:?}: {r}");
        assert_eq!(r.void_difference.unwrap().to_string(), eq, "{id:?}");
    }
}

#[test]
fn identity_mismatch_is_reported() {
    let u = free();
    let (a, b) = (ce("A | H"), ce("B | K"));
    let lhs = Combination::of(gs_and_crq(&a, &b, &sym("x"), &sym("y"), "z"));
    let rhs = Combination::of(Crq::event(&a, "x"));
    let r = compare(&lhs, &rhs, &Env::new(), &u).unwrap();
    assert!(!r.maps_agree());
    assert!(gs_monotone().unwrap());
}

#[test]
fn inclusion_biconditional_holds_both_ways() {
    let (f, r) = gs_inclusion_directions().unwrap();
    assert!(f.holds(), "{f:?}");
    assert!(r.holds(), "{r:?}");
}

#[test]
fn order_matches_inclusion_characterization() {
    // A|H ≤ B|K iff A|H ⊆ B|K, or AH = ∅, or BK = K; swept over a spread
    // of sub-universes of the free universe.
    let u = free();
    let (a, b) = (ce("A | H"), ce("B | K"));
    let mut checked = 0;
    for set in (1u32..1 << 16).step_by(7) {
        let Ok(sub) = u.restrict_to((0..16).filter(|w| set >> w & 1 == 1)) else { continue };
        if a.validate(&sub).is_err() || b.validate(&sub).is_err() {
            continue;
        }
        let expected = gn_inclusion(&a, &b, &sub).unwrap()
            || !sub.is_satisfiable(&a.true_part()).unwrap()
            || sub.entails(&b.antecedent, &b.consequent).unwrap();
        assert_eq!(conjunction_below(std::slice::from_ref(&a), &b, &sub).unwrap(), expected, "{set:#x}");
        checked += 1;
    }
    assert!(checked > 5000);
}

#[test]
fn previsions_from_distributions() {
    let u = free();
    let (a, b) = (ce("A | H"), ce("B | K"));
    let and = gs_and_crq(&a, &b, &sym("x"), &sym("y"), "z");
    let (pa, ph, pb, pk) = (ratio(1, 3), ratio(1, 2), ratio(3, 5), ratio(1, 4));
    let mu = Distribution::independent(&u, &[("A", pa.clone()), ("H", ph), ("B", pb.clone()), ("K", pk)]).unwrap();
    let e = env(&[("x", pa.clone()), ("y", pb.clone())]);
    assert_eq!(prevision_from_distribution(&and, &e, &mu, &u).unwrap(), &pa * &pb);

    let point = |f: &str| u.truth_set(&crate::event::parse_formula(f).unwrap()).unwrap();
    let at_top = Distribution::spread(&u, &[(point("A & H & B & K"), one())]);
    assert_eq!(prevision_from_distribution(&and, &e, &at_top, &u).unwrap(), one());

    // Uniform over the eight constituents other than ~H & ~K.
    let parts = [
        "A & H & B & K",
        "A & H & ~B & K",
        "A & H & ~K",
        "~A & H & B & K",
        "~A & H & ~B & K",
        "~A & H & ~K",
        "~H & B & K",
        "~H & ~B & K",
    ];
    let uniform = Distribution::spread(&u, &parts.map(|p| (point(p), ratio(1, 8))));
    let half = env(&[("x", ratio(1, 2)), ("y", ratio(1, 2))]);
    assert_eq!(prevision_from_distribution(&and, &half, &uniform, &u).unwrap(), ratio(1, 4));

    let nothing = Distribution::spread(&u, &[(point("~H & ~K"), one())]);
    assert_eq!(prevision_from_distribution(&and, &half, &nothing, &u), Err(Error::ZeroMass));
}

#[test]
fn binary_intervals_and_errors() {
    let u = free();
    let (a, b) = (ce("A | H"), ce("B | K"));
    let engine = Engine::default();
    let (x, y) = (parse("0.4").unwrap(), parse("0.7").unwrap());
    let and = gs_and(&a, &b, &x, &y, &u).unwrap().interval(&engine, &u).unwrap();
    assert_eq!(and.exact().unwrap(), (&ratio(1, 10), &ratio(2, 5)));
    let or = gs_or(&a, &b, &x, &y, &u).unwrap().interval(&engine, &u).unwrap();
    assert_eq!(or.exact().unwrap(), (&ratio(7, 10), &one()));
    assert_eq!(gs_and(&a, &a.negate(), &ratio(1, 2), &ratio(2, 3), &u).unwrap_err(), Error::Incoherent);
    let empty = free().impossible("H | K").unwrap_or_else(|_| free());
    assert!(gs_and(&a, &b, &x, &y, &empty).is_err());
}

#[test]
fn compound_prevision_is_the_product() {
    let u = Universe::new(&["E", "H", "K"]).unwrap();
    let (e, h) = (ce("E | H & K"), ce("H | K"));
    for (x, y) in [(ratio(1, 3), ratio(3, 4)), (ratio(0, 1), ratio(1, 2)), (one(), ratio(2, 5))] {
        let c = gs_and(&e, &h, &x, &y, &u).unwrap();
        let i = c.interval(&Engine::default(), &u).unwrap();
        assert_eq!(i.exact().unwrap(), (&(&x * &y), &(&x * &y)));
    }
}

#[test]
fn nary_reduces_to_binary_and_unary() {
    let u = free();
    let (a, b) = (ce("A | H"), ce("B | K"));
    let two = gs_and_n_crq(&[a.clone(), b.clone()], "x").unwrap();
    let rename: BTreeMap<String, String> =
        [("x[1]", "x"), ("x[2]", "y"), ("x[1,2]", "z")].iter().map(|(p, q)| (p.to_string(), q.to_string())).collect();
    let direct = gs_and_crq(&a, &b, &sym("x"), &sym("y"), "z");
    assert_eq!(two.rename(&rename).values(&u).unwrap(), direct.values(&u).unwrap());
    let or_two = gs_or_n_crq(&[a.clone(), b.clone()], "y").unwrap();
    let rename_or: BTreeMap<String, String> =
        [("y[1]", "x"), ("y[2]", "y"), ("y[1,2]", "w")].iter().map(|(p, q)| (p.to_string(), q.to_string())).collect();
    let direct_or = gs_or_crq(&a, &b, &sym("x"), &sym("y"), "w");
    assert_eq!(or_two.rename(&rename_or).values(&u).unwrap(), direct_or.values(&u).unwrap());

    let one_member = gs_and_n(std::slice::from_ref(&a), &Env::new(), &u).unwrap();
    assert_eq!(one_member.crq.values(&u).unwrap(), Crq::event(&a, "x[1]").values(&u).unwrap());
    let i = one_member.interval(&Engine::default(), &u).unwrap();
    assert_eq!(i.exact().unwrap(), (&zero(), &one()));
}

#[test]
fn chain_family_collapses_to_the_conjunction() {
    let u = Universe::new(&["E1", "E2", "E3"]).unwrap();
    let family = [ce("E1"), ce("E2 | E1"), ce("E3 | E1 & E2")];
    let crq = gs_and_n_crq(&family, "x").unwrap();
    let indicator = Crq::event(&ce("E1 & E2 & E3"), "t");
    assert_eq!(crq.values(&u).unwrap(), indicator.values(&u).unwrap());

    let mu = Distribution::independent(&u, &[("E1", ratio(1, 2)), ("E2", ratio(1, 3)), ("E3", ratio(3, 4))]).unwrap();
    let factors: Vec<Rational> = family.iter().map(|c| mu.conditional(&u, c).unwrap()).collect();
    assert_eq!(factors, vec![ratio(1, 2), ratio(1, 3), ratio(3, 4)]);
    let direct = prevision_from_distribution(&crq, &Env::new(), &mu, &u).unwrap();
    assert_eq!(direct, chain_rule_prevision(&factors));
    assert_eq!(chain_rule_prevision(&[ratio(1, 2), ratio(1, 2)]), ratio(1, 4));
    assert_eq!(chain_rule_prevision(&[ratio(1, 2), zero()]), zero());
    assert_eq!(chain_rule_prevision(&[ratio(2, 7)]), ratio(2, 7));
}

/// Previsions of every subfamily conjunction under `mu`, bottom-up.
fn joint_previsions(family: &[ConditionalEvent], mu: &Distribution, u: &Universe, prefix: &str, and: bool) -> Env {
    let n = family.len();
    let mut out = Env::new();
    let mut masks: Vec<u32> = (1u32..1 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for m in masks {
        let s: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
        let sub: Vec<ConditionalEvent> = s.iter().map(|&i| family[i].clone()).collect();
        let crq = if and { gs_and_n_crq(&sub, "v") } else { gs_or_n_crq(&sub, "v") }.unwrap();
        // Local symbols v[..] refer to positions within `sub`.
        let local: Env = (1u32..(1 << s.len()) - 1)
            .map(|lm| {
                let l: Vec<usize> = (0..s.len()).filter(|i| lm >> i & 1 == 1).collect();
                let g: Vec<usize> = l.iter().map(|&i| s[i]).collect();
                (joint_symbol("v", &l), out[&joint_symbol(prefix, &g)].clone())
            })
            .collect();
        out.insert(joint_symbol(prefix, &s), prevision_from_distribution(&crq, &local, mu, u).unwrap());
    }
    out
}

#[test]
fn inclusion_exclusion_matches_direct_disjunction() {
    let u = Universe::new(&["A", "H", "B", "K", "C", "L"]).unwrap();
    let family = [ce("A | H"), ce("B | K"), ce("C | L")];
    let mu = Distribution::independent(
        &u,
        &[
            ("A", ratio(1, 3)),
            ("H", ratio(1, 2)),
            ("B", ratio(2, 3)),
            ("K", ratio(1, 4)),
            ("C", ratio(1, 5)),
            ("L", ratio(3, 5)),
        ],
    )
    .unwrap();
    let x = joint_previsions(&family, &mu, &u, "x", true);
    let y = joint_previsions(&family, &mu, &u, "y", false);
    let keyed: BTreeMap<Vec<usize>, Rational> = (1u32..8)
        .map(|m| {
            let s: Vec<usize> = (0..3).filter(|i| m >> i & 1 == 1).collect();
            let v = x[&joint_symbol("x", &s)].clone();
            (s, v)
        })
        .collect();
    assert_eq!(inclusion_exclusion(3, &keyed).unwrap(), y["y[1,2,3]"]);
    // Independent operands: the conjunction prevision is the product.
    assert_eq!(x["x[1,2,3]"], ratio(1, 3) * ratio(2, 3) * ratio(1, 5));

    // Coherence of the joint system accepts the computed previsions.
    let c = gs_and_n(&family, &x, &u).unwrap();
    let i = c.interval(&Engine::default(), &u).unwrap();
    let (lo, hi) = (i.lower.value().unwrap(), i.upper.value().unwrap());
    assert!(lo <= &x["x[1,2,3]"] && &x["x[1,2,3]"] <= hi);

    let two: BTreeMap<Vec<usize>, Rational> =
        [(vec![0], ratio(2, 3)), (vec![1], ratio(2, 3)), (vec![0, 1], ratio(1, 3))].into_iter().collect();
    assert_eq!(inclusion_exclusion(2, &two).unwrap(), one());
    let same: BTreeMap<Vec<usize>, Rational> =
        (1u32..8).map(|m| ((0..3).filter(|i| m >> i & 1 == 1).collect(), ratio(2, 5))).collect();
    assert_eq!(inclusion_exclusion(3, &same).unwrap(), ratio(2, 5));
}

#[test]
fn frechet_closed_forms() {
    let nine = vec![ratio(9, 10); 3];
    assert_eq!(frechet_bounds(&nine).unwrap(), (ratio(7, 10), ratio(9, 10)));
    assert_eq!(frechet_bounds_or(&nine).unwrap(), (ratio(9, 10), one()));
    assert_eq!(frechet_bounds(&[one(), one()]).unwrap(), (one(), one()));
    assert_eq!(frechet_bounds(&[ratio(2, 3), ratio(2, 3)]).unwrap(), (ratio(1, 3), ratio(2, 3)));
    assert!(frechet_bounds(&[ratio(3, 2)]).is_err());
    assert!(frechet_bounds(&[]).is_err());
}

#[test]
fn incoherent_joint_system_is_rejected() {
    let u = free();
    let family = [ce("A | H"), ce("B | K"), ce("A & B | H & K")];
    let mut joint = env(&[("x[1]", ratio(1, 2)), ("x[2]", ratio(1, 2)), ("x[3]", ratio(1, 2))]);
    joint.insert("x[1,2]".into(), ratio(9, 10));
    joint.insert("x[1,3]".into(), ratio(1, 2));
    joint.insert("x[2,3]".into(), ratio(1, 2));
    assert_eq!(gs_and_n(&family, &joint, &u).unwrap_err(), Error::Incoherent);
    joint.remove("x[2,3]");
    assert!(matches!(gs_and_n(&family, &joint, &u), Err(Error::UnboundSymbol(_))));
}

#[test]
fn p_entailment_examples() {
    let engine = Engine::default();
    let u = free();
    assert!(p_consistent(&engine, &[ce("A | H"), ce("B | K")], &u).unwrap());
    assert!(!p_consistent(&engine, &[ce("A | H"), ce("~A | H")], &u).unwrap());
    let ehk = Universe::new(&["E", "H", "K"]).unwrap();
    let fam = [ce("E | H & K"), ce("H | K")];
    assert!(p_consistent(&engine, &fam, &ehk).unwrap());

    let target = ce("E & H | K");
    assert!(p_entails(&engine, &fam, &target, &ehk).unwrap().entailed);
    assert!(conjunction_absorbs(&fam, &target, &ehk).unwrap());
    assert!(conjunction_below(&fam, &target, &ehk).unwrap());
    assert!(quasi_conjunction_entails(&fam, &target, &ehk).unwrap());

    assert!(p_entails(&engine, &[ce("A | H")], &ce("A | H"), &u).unwrap().entailed);
    let wide = p_entails(&engine, &[ce("A | H"), ce("B | K")], &ce("A & B given H | K"), &u).unwrap();
    assert!(!wide.entailed);
    assert_eq!(wide.interval.exact().unwrap(), (&zero(), &one()));
    assert_eq!(p_entails(&engine, &[ce("A | H"), ce("~A | H")], &ce("B | K"), &u).unwrap_err(), Error::NotPConsistent);
}

/// Pool of conditional events over A, H, B, K for exhaustive pairings.
fn pool() -> Vec<ConditionalEvent> {
    [
        "A | H",
        "B | K",
        "A & B | H",
        "A | H & K",
        "A given H | K",
        "B | H",
        "A & H | K",
        "~A | H",
        "A | B",
        "H | K",
        "A given A | B",
        "B | A & H",
        "A & B given H | K",
        "K | H",
        "A | ~K",
    ]
    .iter()
    .map(|s| ce(s))
    .collect()
}

#[test]
fn entailment_characterizations_agree() {
    let engine = Engine::default();
    let u = free();
    let pool = pool();
    let mut entailed = 0;
    let mut total = 0;
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let family = if i == j { vec![pool[i].clone()] } else { vec![pool[i].clone(), pool[j].clone()] };
            if !p_consistent(&engine, &family, &u).unwrap() {
                continue;
            }
            for t in (0..pool.len()).filter(|t| (t + i + 2 * j) % 3 == 0) {
                let target = &pool[t];
                let e = p_entails(&engine, &family, target, &u).unwrap().entailed;
                let what = format!("{family:?} => {target}");
                assert_eq!(conjunction_absorbs(&family, target, &u).unwrap(), e, "absorbs {what}");
                assert_eq!(conjunction_below(&family, target, &u).unwrap(), e, "below {what}");
                assert_eq!(quasi_conjunction_entails(&family, target, &u).unwrap(), e, "qc {what}");
                entailed += e as usize;
                total += 1;
            }
        }
    }
    assert!(total > 30 && entailed > 5 && entailed < total, "{entailed}/{total}");
}

fn coherent_triple(z: &Rational, x: &Rational, y: &Rational) -> bool {
    let u = free();
    let (a, b) = (ce("A | H"), ce("B | K"));
    let conj = gs_and_crq(&a, &b, &Affine::constant(x.clone()), &Affine::constant(y.clone()), "z")
        .instantiate("z", &Env::new())
        .unwrap();
    let base =
        Assessment::new(vec![Quantity::event(&a), Quantity::event(&b), conj], vec![x.clone(), y.clone(), z.clone()])
            .unwrap();
    Engine::default().check_coherence(&base, &u).unwrap().coherent
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coherent_conjunction_previsions_are_the_frechet_box(xn in 0i64..=12, yn in 0i64..=12, t in 0i64..=4) {
        let (x, y) = (ratio(xn, 12), ratio(yn, 12));
        let (lo, hi) = frechet_bounds(&[x.clone(), y.clone()]).unwrap();
        let z = &lo + (&hi - &lo) * ratio(t, 4);
        prop_assert!(coherent_triple(&z, &x, &y));
        if lo > zero() {
            prop_assert!(!coherent_triple(&(&lo - ratio(1, 24)), &x, &y));
        }
        if hi < one() {
            prop_assert!(!coherent_triple(&(&hi + ratio(1, 24)), &x, &y));
        }
    }
}
