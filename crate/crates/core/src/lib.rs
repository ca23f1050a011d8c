//! Robustness measures for simple undirected graphs.
//!
//! Start from a [`Graph`] (built directly, parsed from an edge list, or
//! generated from a [`Family`]) and call the measure functions in
//! [`connectivity`], [`classical`], [`spectral`] and [`reliability`], or
//! compute everything at once with [`report::MeasureReport`].
//!
//! ```
//! use robustnet::classical::EndpointMode;
//! use robustnet::graph::{generate, Family};
//! use robustnet::report::{Measure, MeasureReport};
//!
//! let c4 = generate(Family::Cycle, 4)?;
//! let report = MeasureReport::compute(&c4, "C4", EndpointMode::IncludeHalf);
//! assert_eq!(report.value(Measure::AvgDistance).to_string(), "4/3 (1.333333)");
//! assert_eq!(report.value(Measure::AvgVertexBetweenness).to_string(), "2");
//! # Ok::<(), robustnet::Error>(())
//! ```
//!
//! The guide in `book/` walks through every measure; its code blocks are
//! compiled as doctests of this crate.

pub mod classical;
pub mod connectivity;
mod error;
pub mod graph;
pub mod reliability;
pub mod report;
pub mod spectral;
mod util;

pub use error::{Error, Result};
pub use graph::{Edge, Family, Graph, GraphFamily};
pub use util::{format_rational, Rational};

// The guide's chapters are checked by `cargo test --doc`.
macro_rules! book_chapters {
    ($($module:ident => $file:literal),* $(,)?) => {
        $(
            #[cfg(doctest)]
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $module {}
        )*
    };
}

book_chapters! {
    book_introduction => "introduction.md",
    book_graphs => "graphs.md",
    book_connectivity => "connectivity.md",
    book_distances => "distances.md",
    book_betweenness => "betweenness.md",
    book_clustering => "clustering.md",
    book_spectral => "spectral.md",
    book_resistance => "resistance.md",
    book_reliability => "reliability.md",
    book_reports => "reports.md",
    book_cli => "cli.md",
}
