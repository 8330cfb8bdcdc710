//! A sure win against P(A) = 0.4, P(B) = 0.3, P(A or B) = 0.8.

use cohkit::coherence::{Assessment, Engine};
use cohkit::event::Universe;
use cohkit::rational::{exact, parse};
use cohkit::trivalent::ConditionalEvent;

fn main() -> cohkit::Result<()> {
    let u = Universe::new(&["A", "B"])?;
    let p = Assessment::on_events(vec![
        (ConditionalEvent::parse("A")?, parse("0.4")?),
        (ConditionalEvent::parse("B")?, parse("0.3")?),
        (ConditionalEvent::parse("A | B given TRUE")?, parse("0.8")?),
    ])?;
    let book = Engine::default().dutch_book(&p, &u)?.expect("incoherent");
    let stakes: Vec<String> = book.stakes.iter().map(exact).collect();
    println!("stakes {}", stakes.join(", "));
    // Region 0 of an event is its true part, region 1 its false part.
    for (choice, gain) in &book.gains {
        let outcome: Vec<&str> = choice.iter().map(|&r| if r == 0 { "1" } else { "0" }).collect();
        println!("  indicators ({}): gain {}", outcome.join(", "), exact(gain));
    }
    println!("guaranteed gain {}", exact(&book.margin));
    Ok(())
}
