//! Exact q-series engine for twining genera of the Conway module.

pub mod conway;
pub mod error;
pub mod genera;
pub mod modforms;
pub mod oracle;
pub mod report;
pub mod scalars;
pub mod series;
pub mod sigma;
pub mod suites;

pub use conway::{ClassData, ConwayClassRecord, DSign, FrameShape};
pub use error::{Error, Result};
pub use genera::{GenusRequest, DEFAULT_PREC};
pub use report::{IdentityReport, Status};
pub use scalars::{rat, RadicalScalar, Rational};
pub use series::{JacobiSeries, QSeries};

#[cfg(test)]
mod data_tests {
    #[test]
    fn bundled_loads() {
        let d = crate::ClassData::bundled().unwrap();
        assert_eq!(d.rows_for(2).count(), 42);
    }
}
