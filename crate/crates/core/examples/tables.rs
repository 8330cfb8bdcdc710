//! Interval table against its closed forms, and the property matrix, on a
//! grid of step 1/4.

use cohkit::coherence::Engine;
use cohkit::rational::ratio;
use cohkit::tables::{grid, search_points, Pair, Sweep, TableProperty};

fn main() -> cohkit::Result<()> {
    let engine = Engine::default();
    let mut sweep = Sweep::new(&engine);
    let step = ratio(1, 4);
    let cells = sweep.interval_table(&grid(&step))?;
    let agree = cells.iter().filter(|c| c.agrees()).count();
    println!("{agree} of {} interval cells match the closed forms", cells.len());

    let stars = sweep.star_table(&search_points(&step))?;
    let pairs: Vec<Pair> = stars.iter().map(|s| s.pair).fold(Vec::new(), |mut v, p| {
        if !v.contains(&p) {
            v.push(p);
        }
        v
    });
    print!("{:<5}", "");
    pairs.iter().for_each(|p| print!("{:>4}", p.to_string()));
    println!();
    for property in TableProperty::ALL {
        print!("{:<5}", property.to_string());
        for &pair in &pairs {
            let cell = stars.iter().find(|s| s.property == property && s.pair == pair).expect("full matrix");
            print!("{:>4}", if cell.star() { "*" } else { "-" });
        }
        println!();
    }
    for cell in stars.iter().filter(|s| !s.star()).take(5) {
        println!("{} fails {}: {}", cell.pair, cell.property, cell.counterexample.as_ref().expect("witness"));
    }
    Ok(())
}
