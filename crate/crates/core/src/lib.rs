pub mod ayh;
pub mod cli;
pub mod crystal;
pub mod cyclo;
pub mod hecke;
pub mod linalg;
pub mod partition;
pub mod rep;
pub mod report;
pub mod scalars;
pub mod symgroup;
