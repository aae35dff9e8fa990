//! Lyndon basis of a free graded Lie algebra and dimension counts by weight.

use fnspace::graded::{witt_dims, Deg, FreeLie, GradedSpace, Lin};

fn main() -> fnspace::Result<()> {
    let space = GradedSpace::new([("a", Deg(1)), ("b", Deg(2))])?;
    let lie = FreeLie::new(space.clone(), 4);
    for i in 0..lie.dim() {
        println!("{:>16}  weight {}  degree {}", lie.name(i), lie.weight(i), lie.deg(i));
    }
    let a = Lin::basis(lie.letter_index(0));
    println!("[a,a] = {}", lie.format(&lie.bracket(&a, &a)));
    for ((w, d), n) in witt_dims(&space.degs(), 4) {
        println!("weight {w}, degree {d}: {n}");
    }
    Ok(())
}
