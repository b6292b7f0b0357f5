//! Exact computations for the height-l Brauer algebras J_{l,n}:
//! diagram bases, standard modules, Gram determinants over ℚ[α], their
//! Chebyshev structure, decorated Rollet graphs, root layouts and the
//! bootstrap morphisms.

pub mod exactmath;
pub mod cheby;
pub mod diagrams;
pub mod symmetric;
pub mod gram;
pub mod rollet;
pub mod roots;
pub mod morphisms;
pub mod cache;
