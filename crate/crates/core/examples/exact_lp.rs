//! The exact simplex solver: an optimum, an infeasibility certificate, and
//! a hull membership query.

use cohkit::lp::{hull_membership, solve, HullOutcome, LinearProgram, LpOutcome, Relation};
use cohkit::rational::{exact, int, ratio};

fn main() -> cohkit::Result<()> {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6
    let mut lp = LinearProgram::new(2);
    lp.maximize(vec![int(1), int(1)]).constrain(vec![int(1), int(2)], Relation::Le, int(4)).constrain(
        vec![int(3), int(1)],
        Relation::Le,
        int(6),
    );
    if let LpOutcome::Optimal { value, point } = solve(&lp)? {
        println!("optimum {} at ({}, {})", exact(&value), exact(&point[0]), exact(&point[1]));
    }

    let mut lp = LinearProgram::new(1);
    lp.constrain(vec![int(1)], Relation::Ge, int(2)).constrain(vec![int(1)], Relation::Le, int(1));
    if let LpOutcome::Infeasible { certificate } = solve(&lp)? {
        println!("infeasible, certificate verified: {}", lp.verify_infeasibility(&certificate));
    }

    let square = vec![vec![int(0), int(0)], vec![int(1), int(0)], vec![int(0), int(1)], vec![int(1), int(1)]];
    for p in [vec![ratio(1, 3), ratio(1, 2)], vec![ratio(3, 2), ratio(1, 2)]] {
        let (kind, v) = match hull_membership(&square, &p)? {
            HullOutcome::Inside(w) => ("inside, weights", w),
            HullOutcome::Outside(s) => ("outside, separator", s),
        };
        let v: Vec<String> = v.iter().map(exact).collect();
        println!("({}, {}): {kind} {}", exact(&p[0]), exact(&p[1]), v.join(", "));
    }
    Ok(())
}
