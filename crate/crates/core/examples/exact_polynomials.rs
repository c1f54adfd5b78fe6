// Exact polynomial tools: finite differences, interpolation, rational roots.

use polyalg::rational::{fmt_list, int, rat};
use polyalg::Polynomial;

pub fn run() -> polyalg::Result<()> {
    let p = Polynomial::from_ints(&[0, -1, 0, 2]);
    let h = p.antidifference();
    assert_eq!(h.forward_difference(), p);
    println!("p = {p}, antidifference = {h}");

    let samples: Vec<_> = (0..5).map(|x| (int(x), p.eval(&int(x)))).collect();
    assert_eq!(Polynomial::interpolate(&samples)?, p);

    let q = Polynomial::new(vec![rat(-3, 2), rat(1, 2), int(1)]);
    println!("roots of {q}: {}", fmt_list(&q.rational_roots()));
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
