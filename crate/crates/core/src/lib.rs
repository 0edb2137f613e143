pub mod cli;
pub mod cycarith;
pub mod invariants;
pub mod matgroup;
pub mod paperlab;
pub mod polyrat;
