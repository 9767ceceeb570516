//! Linear-quotients orders: the default one, a failing one and a search.

use foldprod::monomial::{minimalize, Exponent};
use foldprod::resolution::{
    linear_quotients_resolution, quotient_order, search_linear_quotients_order,
};

fn main() -> foldprod::Result<()> {
    let gens = vec![
        Exponent::new(vec![1, 0, 1]),
        Exponent::new(vec![0, 2, 0]),
        Exponent::new(vec![0, 1, 1]),
    ];
    let ideal = minimalize(gens, 3)?;
    println!("I = {ideal}");

    let naive = quotient_order(ideal.gens().to_vec());
    println!(
        "canonical order verified: {} (fails at {:?})",
        naive.verified, naive.failed_at
    );

    match search_linear_quotients_order(&ideal)? {
        Some(order) => {
            println!("search found an order with r = {:?}", order.r);
            println!("{}", order.betti()?.render_text());
        }
        None => println!("no linear-quotients order"),
    }

    match linear_quotients_resolution(&ideal) {
        Ok((order, _)) => println!("default order r = {:?}", order.r),
        Err(e) => println!("default order: {e}"),
    }
    Ok(())
}
