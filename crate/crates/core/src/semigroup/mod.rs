//! Alphabets, word enumeration, stopping-time partitions and algebraic
//! diagnostics.

pub mod diagnostics;
pub mod partition;
pub mod rauzy;
pub mod system;
pub mod words;

pub use diagnostics::{
    diophantine_check, irreducibility_probe, lie_algebra_dimension, positivity_report,
    unipotent_log, DiophantineReport, IrreducibilityReport, PositivityReport,
};
pub use partition::{stopping_partition_psi, PrefixIndex};
pub use rauzy::{rauzy_alphabet, rauzy_gamma_system, rauzy_system};
pub use system::{ContractionClass, SystemSpec};
pub use words::{enumerate_words, LevelTables, Word};
