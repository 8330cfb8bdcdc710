//! Coherence of P(A|H) = x, P(B|K) = y when A|H is included in B|K: the
//! assessment is coherent exactly on the triangle x <= y.

use cohkit::coherence::{Assessment, Engine};
use cohkit::event::Universe;
use cohkit::rational::{exact, ratio, Rational};
use cohkit::trivalent::ConditionalEvent;

fn list(xs: &[Rational]) -> String {
    xs.iter().map(exact).collect::<Vec<_>>().join(", ")
}

fn main() -> cohkit::Result<()> {
    let u = Universe::new(&["A", "B", "H", "K"])?
        .impossible("A & H & ~K")?
        .impossible("A & H & ~B & K")?
        .impossible("~H & ~B & K")?
        .impossible("~A & H & B & K")?;
    let a = ConditionalEvent::parse("A given H")?;
    let b = ConditionalEvent::parse("B given K")?;
    let engine = Engine::default();
    for (x, y) in [(2, 7), (7, 2), (5, 5)] {
        let p = Assessment::on_events(vec![(a.clone(), ratio(x, 10)), (b.clone(), ratio(y, 10))])?;
        let verdict = engine.check_coherence(&p, &u)?;
        match (&verdict.weights, &verdict.failure) {
            (Some(w), _) => println!("({x}/10, {y}/10) coherent, weights {}", list(w)),
            (_, Some(f)) => {
                println!("({x}/10, {y}/10) incoherent on subfamily {:?}, stakes {}", f.subfamily, list(&f.stakes))
            }
            _ => unreachable!(),
        }
    }
    Ok(())
}
