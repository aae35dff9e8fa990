//! Homology of a small rational chain complex: a triangle boundary.

use fnspace::graded::DegRange;
use fnspace::linalg::{homology_dims, rat, ComplexSlice, SparseMatrix};

fn main() -> fnspace::Result<()> {
    let mut c = ComplexSlice::new(DegRange::new(-1, 2), DegRange::ALL);
    c.set_dim(0, 3);
    c.set_dim(1, 3);
    let d1 = SparseMatrix::from_dense(&[
        vec![rat(-1), rat(0), rat(1)],
        vec![rat(1), rat(-1), rat(0)],
        vec![rat(0), rat(1), rat(-1)],
    ]);
    println!("rank d1 = {}", d1.rank());
    c.set_diff(1, d1);
    print!("{}", homology_dims(&c)?);
    Ok(())
}
