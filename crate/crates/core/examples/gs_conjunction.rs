//! The conjunction of A|H and B|K as a conditional random quantity: its
//! values, its prevision interval, and the product rule under independence.

use cohkit::coherence::Engine;
use cohkit::compound::{gs_and, gs_and_crq, prevision_from_distribution, Affine, Distribution, Env};
use cohkit::event::Universe;
use cohkit::rational::{exact, ratio};
use cohkit::trivalent::ConditionalEvent;

fn main() -> cohkit::Result<()> {
    let u = Universe::new(&["A", "B", "H", "K"])?;
    let (a, b) = (ConditionalEvent::parse("A given H")?, ConditionalEvent::parse("B given K")?);

    let crq = gs_and_crq(&a, &b, &Affine::symbol("x"), &Affine::symbol("y"), "z");
    for (region, value) in &crq.regions {
        println!("{value:>3} on {region}");
    }

    let c = gs_and(&a, &b, &ratio(2, 5), &ratio(7, 10), &u)?;
    let i = c.interval(&Engine::default(), &u)?;
    let (lo, hi) = i.exact().expect("rational endpoints");
    println!("P(A|H) = 2/5, P(B|K) = 7/10: prevision in [{}, {}]", exact(lo), exact(hi));

    let dist = Distribution::independent(
        &u,
        &[("A", ratio(1, 3)), ("B", ratio(3, 4)), ("H", ratio(1, 2)), ("K", ratio(1, 5))],
    )?;
    let env = Env::from([("x".to_string(), ratio(1, 3)), ("y".to_string(), ratio(3, 4))]);
    let crq = gs_and_crq(&a, &b, &Affine::symbol("x"), &Affine::symbol("y"), "z");
    println!("independent atoms: prevision {}", exact(&prevision_from_distribution(&crq, &env, &dist, &u)?));
    Ok(())
}
