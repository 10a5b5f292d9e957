//! Edge ideals of cyclic and bicyclic graphs: projective dimension from
//! simplicial homology, explicit radical-generating sequences, and Gröbner
//! certificates that the two agree.

pub mod polyalg;
pub mod groebner;
pub mod graphs;
pub mod homcomplex;
pub mod formulas;
pub mod sequences;
pub mod verify;
