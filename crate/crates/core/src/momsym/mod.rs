//! Momentum-space symbols of translation-invariant operators and the
//! Foldy–Wouthuysen / Dirac Hamiltonians.

mod equations;
mod fw;
mod sampling;
mod symbol;

pub use equations::{
    check_equation_symmetry, dirac_hamiltonian, exact_symmetry_residuals, fw_hamiltonian, hamiltonian_eigenvalues,
    CheckPath, EquationOperator, ExactTerm, ScalarFactor, SymmetryReport,
};
pub use fw::{
    conjugate_by_v, fw_spin, fw_transform, pd_spin, quoted_tilde_conjugation, tilde_conjugation, tilde_gammas, Sign,
    SymbolSet,
};
pub use sampling::sample_momenta;
pub use symbol::{
    distance, dot_matrices, jet_operator, omega, point, values, variable_point, JetPoint, MomentumSymbol, Parity,
    SymbolValue,
};
