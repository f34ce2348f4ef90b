//! Reflected diffusions on convex Euclidean domains and their second-order lifts.
//!
//! The crate has two halves that meet in the middle:
//!
//! * a *simulation* half ([`geometry`], [`model`], [`dynamics`], [`relaxation`])
//!   with exact event-driven billiards, randomized Hamiltonian Monte Carlo,
//!   reflected kinetic Langevin dynamics and a folded Euler scheme for the
//!   reflected overdamped diffusion, plus decay-rate estimation on chain
//!   ensembles;
//! * a *verification* half ([`spectral`], [`timefn`], [`divergence`]) that
//!   constructs, for any mean-zero space-time function `f` on `[0,T] x M`,
//!   functions `h`, `g` with `f = dh/dt - L g`, Dirichlet boundary values in
//!   time, and certified norm bounds `c0(T)`, `c1(T)`, from which the
//!   relaxation-time constants `C0`, `C1`, the decay rate `nu` and the
//!   optimal refresh rate are evaluated.
//!
//! Everything is driven either through the library API (see `examples/`) or
//! through the thin `lifted-langevin` binary with subcommands `constants`,
//! `divergence-verify`, `simulate`, `scaling` and `optimality`.

pub mod cli;
pub mod config;
pub mod divergence;
pub mod dynamics;
pub mod geometry;
pub mod model;
pub mod quadrature;
pub mod relaxation;
pub mod rng;
pub mod spectral;
pub mod timefn;

mod error;

pub use error::{Error, Result};
