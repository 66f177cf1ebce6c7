pub mod certificate;
pub mod domination;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod independent;
pub mod interval;
pub mod kernel;
pub mod oracle;
pub mod ordering;
pub mod pointpoint;
