pub mod asymptotics;
pub mod cli;
pub mod coeffs;
pub mod constants;
pub mod error;
pub mod norms;
pub mod pointeval;
pub mod quadrature;
pub mod summation;
