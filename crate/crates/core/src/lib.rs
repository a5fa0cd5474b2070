//! Measurement toolkit for EXIT functions of rank-list message passing
//! decoders over GF(2^m).
//!
//! The sum-product decoder for non-binary LDPC codes passes probability
//! distributions over GF(q) along the edges of a factor graph. A simplified
//! decoder could pass only the *ranking* of the symbols by decreasing
//! posterior probability. Measuring the extrinsic information of such a
//! decoder with histograms is hopeless (the rank alphabet is factorial in
//! q), and plain time averaging is invalid because ranked lists are not
//! probability distributions.
//!
//! This crate measures a lower bound instead: the *mixed information*
//! obtained by replacing the unknown posterior given a rank with a fitted
//! model distribution. The bound is tight when the model equals the true
//! conditional, and fitting the model is a convex divergence minimization
//! with a closed-form solution (the conditional mean of the observed exact
//! posteriors). Everything is estimated by time averaging over i.i.d.
//! pipeline realizations: source symbol → AWGN channel → exact symbol
//! posterior → rank retainer → post-processing model.
//!
//! Modules:
//!
//! - [`galois`]: GF(2^m) arithmetic on log/antilog tables.
//! - [`messages`]: probability vectors, ranked lists, sum-product node rules.
//! - [`simspace`]: source, modulators, AWGN channel, posterior computer.
//! - [`infomeasure`]: entropy/MI/mixed-information estimators and exact
//!   small-instance oracles.
//! - [`rolemodel`]: post-processor models and their divergence-minimizing fits.
//! - [`exitlab`]: the experiment drivers (rank-retainer loss sweep, variable
//!   and check node EXIT curves, full chart).
//! - [`oracle`]: independent reference computations (quadrature, quantized
//!   channels) used by self tests.
//!
//! All information quantities are in bits.

pub mod exitlab;
pub mod galois;
pub mod infomeasure;
pub mod messages;
pub mod oracle;
pub mod rolemodel;
pub mod simspace;

mod error;

pub use error::{Error, Result};
pub use exitlab::{CurveResult, ExitPoint, FullChart, NodeMode, RankLossPoint, SweepConfig};
pub use galois::Field;
pub use infomeasure::{DiscreteJoint, Estimate, SampleRecord};
pub use messages::{ProbVector, RankedList};
pub use rolemodel::{ModelFamily, PostProcessor};
pub use simspace::{Channel, Modulation};
