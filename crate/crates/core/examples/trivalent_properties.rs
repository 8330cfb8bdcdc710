//! Truth tables of the four three-valued conjunctions and which logical
//! properties each satisfies.

use cohkit::event::Universe;
use cohkit::trivalent::{check_logical_property, trivalent_and, ConditionalEvent, Kind, Property, TriValue};

fn main() -> cohkit::Result<()> {
    use TriValue::{False, True, Void};
    let kinds = [Kind::K, Kind::L, Kind::B, Kind::S];
    println!("a     b     {:>6}{:>6}{:>6}{:>6}", "K", "L", "B", "S");
    for a in [True, False, Void] {
        for b in [True, False, Void] {
            let row: String = kinds.iter().map(|k| format!("{:>6}", format!("{:?}", k.and_values(a, b)))).collect();
            println!("{:<6}{:<6}{row}", format!("{a:?}"), format!("{b:?}"));
        }
    }

    let u = Universe::new(&["A", "B", "H", "K"])?;
    let (a, b) = (ConditionalEvent::parse("A given H")?, ConditionalEvent::parse("B given K")?);
    println!("\nquasi conjunction: {}", trivalent_and(Kind::S, &a, &b, &u)?);
    for kind in kinds {
        let holds: Vec<String> = Property::ALL
            .iter()
            .map(|&p| Ok(format!("{p:?}={}", check_logical_property(p, kind, &u)?.holds())))
            .collect::<cohkit::Result<_>>()?;
        println!("{kind:?}: {}", holds.join(" "));
    }
    Ok(())
}
