//! Exact computation of the Charney–Davis quantity of weighted flag
//! complexes, with the weight-reduction machinery used to study its sign.

pub mod charney;
pub mod complex;
pub mod coxeter;
pub mod exact;
pub mod homology;
pub mod reduction;
