//! Bundled symbols and parameter choices for one-command reproduction
//! of the standard experiments.

use matrixless::{eval_symbol, symmetrize_tridiagonal, Scalar, Symbol};

/// Closed-form evaluator for the distribution function `g`, when one is
/// known for the preset symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinG {
    /// `g` of a symmetrizable tridiagonal symbol, derived at runtime.
    SymmetrizedTridiagonal,
    /// The symbol itself is real and even, so `g = f`.
    EvenSymbol,
    /// `g(theta) = -sin^4(theta) / (sin(theta/4) sin^3(3 theta/4))`,
    /// the distribution function of the shifted bi-Laplacian symbol.
    ShiftedBilaplacian,
}

impl BuiltinG {
    pub fn eval<T: Scalar>(&self, symbol: &Symbol<T>, theta: &T) -> T {
        match self {
            BuiltinG::SymmetrizedTridiagonal => {
                let g = symmetrize_tridiagonal(symbol).expect("tridiagonal preset");
                eval_symbol(&g, theta).re
            }
            BuiltinG::EvenSymbol => eval_symbol(symbol, theta).re,
            BuiltinG::ShiftedBilaplacian => shifted_bilaplacian_g(theta),
        }
    }
}

/// `g` for the shifted bi-Laplacian, increasing from `-256/27` at 0 to
/// `0` at pi.
pub fn shifted_bilaplacian_g<T: Scalar>(theta: &T) -> T {
    let bits = theta.bits();
    let four = T::from_int(4, bits);
    let three = T::from_int(3, bits);
    let s1 = theta.sin();
    let s4 = theta.div(&four).sin();
    let s34 = three.mul(theta).div(&four).sin();
    s1.powi(4).div(&s4.mul(&s34.powi(3))).neg()
}

/// Parameter bundle reproducing one of the standard experiments.
pub struct Preset {
    pub name: &'static str,
    pub min_k: i64,
    pub coeffs: &'static [&'static str],
    pub n0: usize,
    pub alpha: usize,
    pub bits: u32,
    pub n_target: usize,
    pub g: Option<BuiltinG>,
    pub about: &'static str,
}

/// The tridiagonal symbol `(f_1, f_0, f_-1) = (-1, 2, -2)`: complex
/// valued, real spectrum, `g` known in closed form.
const TRIDIAG: (&str, &[&str]) = ("tridiagonal", &["-2", "2", "-1"]);
/// The bi-Laplacian stencil: real, even, `g = f`.
const BILAPLACIAN: &[&str] = &["1", "-4", "6", "-4", "1"];
/// The shifted bi-Laplacian: one subdiagonal, three superdiagonals.
const SHIFTED: &[&str] = &["1", "-4", "6", "-4", "1"];
/// Seven-band symbol with unknown `g`.
const SEVEN_BAND: &[&str] = &["-1", "2", "-2", "9", "0", "7", "-1", "1"];

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "example1",
        min_k: -1,
        coeffs: TRIDIAG.1,
        n0: 31,
        alpha: 2,
        bits: 53,
        n_target: 1000,
        g: Some(BuiltinG::SymmetrizedTridiagonal),
        about: "non-symmetric tridiagonal, g and exact spectra known",
    },
    Preset {
        name: "example2",
        min_k: -2,
        coeffs: BILAPLACIAN,
        n0: 100,
        alpha: 4,
        bits: 53,
        n_target: 1000,
        g: Some(BuiltinG::EvenSymbol),
        about: "symmetric pentadiagonal bi-Laplacian, g = f",
    },
    Preset {
        name: "example3",
        min_k: -3,
        coeffs: SHIFTED,
        n0: 100,
        alpha: 4,
        bits: 128,
        n_target: 1000,
        g: Some(BuiltinG::ShiftedBilaplacian),
        about: "shifted bi-Laplacian, g known in closed form",
    },
    Preset {
        name: "example4",
        min_k: -4,
        coeffs: SEVEN_BAND,
        n0: 100,
        alpha: 4,
        bits: 256,
        n_target: 1000,
        g: None,
        about: "seven-band symbol, g unknown",
    },
    Preset {
        name: "example5",
        min_k: -1,
        coeffs: TRIDIAG.1,
        n0: 31,
        alpha: 4,
        bits: 128,
        n_target: 1000,
        g: Some(BuiltinG::SymmetrizedTridiagonal),
        about: "expansion extraction for the tridiagonal symbol",
    },
    Preset {
        name: "example6",
        min_k: -2,
        coeffs: BILAPLACIAN,
        n0: 100,
        alpha: 4,
        bits: 53,
        n_target: 1000,
        g: Some(BuiltinG::EvenSymbol),
        about: "expansion extraction for the bi-Laplacian",
    },
    Preset {
        name: "example7",
        min_k: -3,
        coeffs: SHIFTED,
        n0: 100,
        alpha: 4,
        bits: 256,
        n_target: 1000,
        g: Some(BuiltinG::ShiftedBilaplacian),
        about: "expansion extraction for the shifted bi-Laplacian",
    },
    Preset {
        name: "example8",
        min_k: -4,
        coeffs: SEVEN_BAND,
        n0: 100,
        alpha: 4,
        bits: 512,
        n_target: 1000,
        g: None,
        about: "expansion extraction for the seven-band symbol",
    },
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}
