//! The classification of almost-bipartite Q-polynomial distance-regular
//! graphs: the `(q, s)` parametrization, `eta` and `xi`, the diameter-3
//! family, the array classifier, the feasibility sieve and the identity
//! suites.

mod classifier;
mod curtin;
mod eta;
mod family;
pub mod identities;
mod params;
mod sieve;

pub use classifier::{
    classify, known_family_array, match_known_family, Classification, OrderingEvidence, Verdict,
    MAX_CLASSIFY_DIAMETER,
};
pub use curtin::{
    curtin_gap, curtin_gap_closed_form, curtin_gap_values, module_multiplicity,
    s2q_condition_holds, ModuleMultiplicity,
};
pub use eta::{
    d4_contradiction_witness, eta_of, eta_rational, eta_report, local_graph_has_eigenvalue,
    xi_by_diameter, D4Witness, EtaReport,
};
pub use family::{d3_family, D3FamilyPoint};
pub use params::{
    beta_from_q, beta_of, chebyshev_t, q_from_beta, qs_evaluate, s_from_array, solve_s,
    theta_d_closed_form, QSParameters, QSValues,
};
pub use sieve::{
    candidate, filter_verdicts, parse_record, sieve, summary_line, CandidateRecord, FilterVerdict,
    RecordVerdict, FILTER_NAMES,
};
