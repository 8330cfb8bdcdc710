//! Default reasoning with probability one: which conclusions are forced when
//! every premise is assessed at 1.

use cohkit::coherence::Engine;
use cohkit::compound::{conjunction_absorbs, p_entails};
use cohkit::event::Universe;
use cohkit::trivalent::ConditionalEvent;

fn main() -> cohkit::Result<()> {
    let engine = Engine::default();
    let cases: [(&[&str], &[&str], &str); 3] = [
        (&["E", "H", "K"], &["E given H & K", "H given K"], "E & H given K"),
        (&["A", "H"], &["A given H"], "A given H"),
        (&["A", "B", "H", "K"], &["A given H", "B given K"], "A & B given H | K"),
    ];
    for (atoms, premises, conclusion) in cases {
        let u = Universe::new(atoms)?;
        let family = premises.iter().map(|p| ConditionalEvent::parse(p)).collect::<cohkit::Result<Vec<_>>>()?;
        let target = ConditionalEvent::parse(conclusion)?;
        let e = p_entails(&engine, &family, &target, &u)?;
        let absorbs = conjunction_absorbs(&family, &target, &u)?;
        println!("{premises:?} => {conclusion}: {} (absorption agrees: {})", e.entailed, absorbs == e.entailed);
    }
    Ok(())
}
