//! Special-function ingredients: complex log-gamma, Kummer's 1F1 for
//! b in {1, 2}, the entire function G(a;z) = 1F1(a;1;z) e^{-z/2}, the
//! continuous phase y(x), the strictly increasing frak_g, and Upsilon(c).

mod gamma;
mod kummer;
mod phase;
pub mod props;

pub use gamma::{arg_gamma_imag, gamma, log_gamma, tau_lambda};
pub use kummer::{g_func, g_prime, g_with_prime, kummer_m, kummer_m2, SERIES_DOMAIN_CAP};
pub use phase::{arg_f1, arg_f1_sweep, frak_g, frak_g_sweep, invert_frak_g, upsilon};
