//! Structure analysis: ideal saturation, non-cyclicity probes and
//! certificates.

pub mod certificate;
pub mod probe;
pub mod saturate;

pub use certificate::{find_certificate, AssociatorTerm, CertStatus, CertTerm, Certificate, DerivIndex};
pub use probe::{noncyclic_probe, parity_degree_witness, sample_witness_input, verify_probe_solution, ParityWitness, ProbeResult, ProbeStatus};
pub use saturate::{d_ideal_saturate, derivation_ideal, replay, super_ideal_saturate, super_replay, SaturationReport, SuperSeed};
