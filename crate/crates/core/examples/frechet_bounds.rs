//! Bounds for the conjunction and disjunction of n conditional events, and
//! the n = 2 case recomputed by linear programming.

use cohkit::coherence::Engine;
use cohkit::compound::{frechet_bounds, frechet_bounds_or, gs_and, gs_or};
use cohkit::event::Universe;
use cohkit::rational::{exact, ratio};
use cohkit::trivalent::ConditionalEvent;

fn main() -> cohkit::Result<()> {
    let xs = vec![ratio(9, 10); 3];
    let (lo, hi) = frechet_bounds(&xs)?;
    println!("and of three at 9/10: [{}, {}]", exact(&lo), exact(&hi));
    let (lo, hi) = frechet_bounds_or(&xs)?;
    println!("or of three at 9/10:  [{}, {}]", exact(&lo), exact(&hi));

    let u = Universe::new(&["A", "B", "H", "K"])?;
    let (a, b) = (ConditionalEvent::parse("A given H")?, ConditionalEvent::parse("B given K")?);
    let (x, y) = (ratio(3, 5), ratio(4, 5));
    let engine = Engine::default();
    for (name, c, closed) in [
        ("and", gs_and(&a, &b, &x, &y, &u)?, frechet_bounds(&[x.clone(), y.clone()])?),
        ("or", gs_or(&a, &b, &x, &y, &u)?, frechet_bounds_or(&[x.clone(), y.clone()])?),
    ] {
        let i = c.interval(&engine, &u)?;
        let (lo, hi) = i.exact().expect("rational endpoints");
        println!(
            "{name} at (3/5, 4/5): lp [{}, {}], closed [{}, {}]",
            exact(lo),
            exact(hi),
            exact(&closed.0),
            exact(&closed.1)
        );
    }
    Ok(())
}
