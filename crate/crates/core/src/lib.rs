//! Exact computations for type-D cluster categories on the punctured disk.
//!
//! The crate is layered bottom-up: [`rational`] and [`geom`] give exact points and
//! arcs, [`poset`] the cocycles and group actions, [`ring`] and [`lincat`] the
//! linearized category, [`orbit`] the equivariant objects, [`arcs`] the tagged-arc
//! model and [`cluster`] the finite cluster models with mutation and quivers.
//! [`api`] turns these into JSON documents, shared by the [`cli`] and the HTTP
//! [`server`].

pub mod rational;
pub mod report;
pub mod geom;
pub mod poset;
pub mod ring;
pub mod lincat;
pub mod orbit;
pub mod arcs;
pub mod cluster;
pub mod api;
pub mod cli;
pub mod server;
