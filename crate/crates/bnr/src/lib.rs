//! Boolean network reduction toolkit.
//!
//! A Boolean network is a map `f: {0,1}^n -> {0,1}^n` given by one update
//! function per named component. This crate builds the asynchronous state
//! transition graph of such a network, enumerates its attractors, computes
//! signed interaction graphs, and reduces the network by eliminating
//! components — both components without autoregulation (classical variable
//! substitution) and components with a negative autoregulation (the
//! generalized operator based on the two representative maps).
//!
//! The crate is organized around the data flow:
//!
//! * [`net`] — states, Boolean expressions, truth tables, network parsing
//!   and rendering;
//! * [`dynamics`] — asynchronous transitions, trap sets, attractor
//!   enumeration and the `S`/`A`/`A_i` census;
//! * [`igraph`] — local and global signed interaction graphs, elementary
//!   cycles, positive feedback vertex sets;
//! * [`reduction`] — the elimination operators and the PFVS-guided
//!   elimination pipeline that certifies an attractor-count bound;
//! * [`verify`] — machine checks, on concrete and randomly generated
//!   networks, of the statements relating a network to its reductions.
//!
//! All state-space work is exhaustive over the `2^n` states. With the
//! default `parallel` feature the hot enumerations run on rayon; without it
//! everything falls back to single-threaded loops. Outputs are bit-identical
//! either way.
//!
//! ```
//! use bnr::net::BooleanNetwork;
//! use bnr::{dynamics, reduction};
//!
//! let net = BooleanNetwork::parse("a, !b\nb, !a").unwrap();
//! let attrs = dynamics::attractors(&net).unwrap();
//! assert_eq!(attrs.len(), 2);
//!
//! let red = reduction::eliminate(&net, 1).unwrap();
//! assert_eq!(red.reduced.width(), 1);
//! ```

use thiserror::Error;

pub mod bits;
pub mod dynamics;
pub mod expr;
pub mod igraph;
pub mod net;
pub mod reduction;
pub mod verify;

/// One dispatch point for the data-parallel loops: with the `parallel`
/// feature the closure runs on the rayon pool, otherwise inline. Both paths
/// preserve index order, so results never depend on scheduling.
pub(crate) mod par {
    #[cfg(feature = "parallel")]
    pub(crate) fn map_indices<T: Send>(
        n: usize,
        f: impl Fn(usize) -> T + Sync + Send,
    ) -> Vec<T> {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }

    #[cfg(not(feature = "parallel"))]
    pub(crate) fn map_indices<T>(n: usize, f: impl Fn(usize) -> T) -> Vec<T> {
        (0..n).map(f).collect()
    }
}

pub use expr::BoolExpr;
pub use net::{BooleanNetwork, State};

/// Resource caps for the exhaustive enumerations.
///
/// The defaults keep accidental blow-ups out of interactive use; every cap
/// can be raised through the `*_with` entry points.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Maximum component count for truth-table construction (parsing,
    /// random generation, elimination).
    pub table_width: usize,
    /// Maximum component count for full state-transition-graph work
    /// (attractors, reachability, census).
    pub stg_width: usize,
    /// Maximum vertex count for elementary-cycle enumeration and the
    /// hitting-set search behind minimum PFVS computation.
    pub cycle_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            table_width: 24,
            stg_width: 20,
            cycle_vertices: 20,
        }
    }
}

impl Caps {
    /// A caps struct with `width` as both the table and STG limit.
    pub fn with_state_width(width: usize) -> Self {
        Caps {
            table_width: width.max(24),
            stg_width: width,
            ..Caps::default()
        }
    }

    pub(crate) fn check_table(&self, width: usize) -> Result<()> {
        if width > self.table_width {
            return Err(Error::CapExceeded {
                what: "truth table construction",
                width,
                cap: self.table_width,
            });
        }
        Ok(())
    }

    pub(crate) fn check_stg(&self, width: usize) -> Result<()> {
        if width > self.stg_width {
            return Err(Error::CapExceeded {
                what: "state transition graph construction",
                width,
                cap: self.stg_width,
            });
        }
        Ok(())
    }

    pub(crate) fn check_cycles(&self, vertices: usize) -> Result<()> {
        if vertices > self.cycle_vertices {
            return Err(Error::CapExceeded {
                what: "elementary cycle enumeration",
                width: vertices,
                cap: self.cycle_vertices,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("duplicate component name `{0}`")]
    DuplicateName(String),
    #[error("line {line}, column {col}: reference to undeclared component `{name}`")]
    Undeclared { name: String, line: usize, col: usize },
    #[error("empty network: no components declared")]
    EmptyNetwork,
    #[error("state width {got} does not match network width {want}")]
    WidthMismatch { got: usize, want: usize },
    #[error("component index {index} out of range for width {width}")]
    IndexOutOfRange { index: usize, width: usize },
    #[error("unknown component `{0}`")]
    UnknownComponent(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("{what}: width {width} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        width: usize,
        cap: usize,
    },
    #[error("component `{0}` has a positive loop and cannot be eliminated")]
    PositiveLoop(String),
    #[error("cannot eliminate from a single-component network")]
    SingleComponent,
    #[error("vertex sets do not partition the graph")]
    NotAPartition,
    #[error("shaped sampling failed after {0} attempts")]
    ShapedSampling(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
