pub mod bands;
pub mod cli;
pub mod dft;
pub mod error;
pub mod freq;
pub mod io;
pub mod linalg;
pub mod mask;
pub mod rank_one;
pub mod verify;
