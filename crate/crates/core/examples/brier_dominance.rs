//! An incoherent assessment is beaten by another one under Brier loss in
//! every possible case.

use cohkit::coherence::{Assessment, Engine};
use cohkit::event::Universe;
use cohkit::rational::{exact, ratio};
use cohkit::trivalent::ConditionalEvent;

fn main() -> cohkit::Result<()> {
    let u = Universe::new(&["A", "B"])?;
    let p = Assessment::on_events(vec![
        (ConditionalEvent::parse("A")?, ratio(2, 5)),
        (ConditionalEvent::parse("B")?, ratio(3, 10)),
        (ConditionalEvent::parse("A | B given TRUE")?, ratio(4, 5)),
    ])?;
    let engine = Engine::default();
    let d = engine.brier_dominator(&p, &u)?.expect("incoherent");
    let values: Vec<String> = d.values.iter().map(exact).collect();
    println!("dominating values {}", values.join(", "));
    for (before, after) in &d.losses {
        println!("  loss {} -> {}", exact(before), exact(after));
    }
    let coherent = engine.check_coherence(&p.with_values(d.values.clone())?, &u)?.coherent;
    println!("dominator coherent: {coherent}");
    Ok(())
}
