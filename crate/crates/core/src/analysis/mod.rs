//! Verification layer over complete systems: normal-form enumeration and
//! growth, two-sided unit witnesses, bounded congruence probes, derivation
//! areas and replay of concrete identities.

pub mod dehn;
pub mod identities;
pub mod normal_forms;
pub mod probe;
pub mod witness;

pub use dehn::{dehn_area, dehn_profile, AreaLimits, AreaResult, DehnProfile, ProfileRow};
pub use identities::{verify_paper_identities, IdentityCheck};
pub use normal_forms::{enumerate_normal_forms, growth_series, GrowthSeries};
pub use probe::{
    probe_all_pairs, probe_congruence, CongruenceBall, ProbeLimits, ProbeResult, ProbeSummary,
};
pub use witness::{unit_witness_mn, unit_witness_search, MnWitness, SearchLimits, WitnessPair};
