//! The three Betti routes on the same ideal, printed in the usual layout.
//!
//! ```text
//! cargo run --example betti_tables
//! ```

use foldprod::fold::{fold_generators, Multiplicities};
use foldprod::partition::SymmetricIdeal;
use foldprod::resolution::{betti_closed, betti_koszul_oracle, linear_quotients_resolution};

fn main() -> foldprod::Result<()> {
    let ideal = fold_generators(&Multiplicities::uniform(4, 3, 2)?);
    println!("I = {ideal}\n");

    let closed = betti_closed(&SymmetricIdeal::from_ideal(&ideal)?)?.to_quotient();
    let (order, quotients) = linear_quotients_resolution(&ideal)?;
    let koszul = betti_koszul_oracle(&ideal, ideal.s())?;

    println!("{}", closed.render_text());
    println!("quotient sizes r_k: {:?}", order.r);
    println!("closed == quotients: {}", closed == quotients);
    println!("closed == koszul:    {}", closed == koszul);
    Ok(())
}
