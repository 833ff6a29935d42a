//! Multiplicity strata of the coefficient space, their partial order, the
//! confluent Vandermonde matrices that cut them out, and probes of their
//! codimension.

mod codim;
mod filtration;
mod label;
mod sample;
mod scan;
mod vandermonde;

pub use codim::{estimate_codim, unity_configs, unity_kernel_dims, CodimConfig, CodimEstimate, ComponentProbe};
pub use filtration::{actual_label, actual_label_tol, actual_symmetric_label, in_filtration_subset, in_filtration_subset_tol, label_of_roots};
pub use label::{label_geq, LabelError, StratumLabel};
pub use sample::{
    random_rational, random_unit_annulus, reduced_support, rng_for, sample_N, sampled_label, Locus, Sample, SampledPair,
};
pub use scan::{scan_S, Prediction, ScanConfig, ScanReport, SideFinding, StratumFinding, TupleWitness};
pub use vandermonde::{
    corank_kernel, corank_unity, mult_vandermonde, mult_vandermonde_unity, unity_row_is_constant, RankField, VandermondeError,
};
