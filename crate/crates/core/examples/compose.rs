// Composition of two realizations and the order `m + n + 1` check.

use polyalg::catalog::recipe::Recipe;
use polyalg::composer::{verify_order_theorem, Variant};
use polyalg::rational::{int, rat};

pub fn run() -> polyalg::Result<()> {
    for (left, right, variant, pi) in [
        ("su2:j=2", "su2:j=2", Variant::Plus, int(0)),
        ("su2:j=2", "heis", Variant::Cross, int(1)),
        ("su11:k=1/2", "heis", Variant::Cross, rat(9, 4)),
    ] {
        let recipe = Recipe::compose(left.parse()?, right.parse()?, variant, pi);
        let built = recipe.build(12)?;
        let composed = built.composed.as_ref().expect("composition");
        let (m, n) = composed.inputs;
        let verdict = verify_order_theorem(m, n, &built.algebra.f);
        println!(
            "{recipe}: f = {}, {} samples, bound {}, holds {}",
            built.algebra.f,
            composed.fit.sample_count(),
            verdict.bound,
            verdict.holds
        );
    }
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
