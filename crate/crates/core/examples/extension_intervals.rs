//! Coherent range of P(B) given P(A) = 0.6 and P(B|A) = 0.5, then of a
//! conditional target.

use cohkit::coherence::{Assessment, Engine, Quantity};
use cohkit::event::Universe;
use cohkit::rational::{exact, ratio};
use cohkit::trivalent::ConditionalEvent;

fn main() -> cohkit::Result<()> {
    let u = Universe::new(&["A", "B"])?;
    let base = Assessment::on_events(vec![
        (ConditionalEvent::parse("A")?, ratio(3, 5)),
        (ConditionalEvent::parse("B given A")?, ratio(1, 2)),
    ])?;
    let engine = Engine::default();
    for target in ["B", "A given B"] {
        let i = engine.extension_bounds(&base, &Quantity::event(&ConditionalEvent::parse(target)?), &u)?;
        let (lo, hi) = i.exact().expect("rational endpoints");
        println!("P({target}) in [{}, {}]", exact(lo), exact(hi));
    }
    Ok(())
}
