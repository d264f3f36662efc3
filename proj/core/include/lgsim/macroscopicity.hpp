#pragma once

// Macroscopicity figures of merit for a persistent-current qubit.
//
// Extensive difference: magnetic-moment difference between the two circulating
// states in Bohr magnetons, overlap * 2 * I_p * A / mu_B. The overlap factor
// (<= 1) accounts for the measured states not being perfect flux eigenstates.
//
// Disconnectivity: number of electrons that change state between the two
// branches, 6 L I_p / (4 e v_f), with L the loop circumference and v_f the
// Fermi velocity.

namespace lgsim {

/// CODATA 2018 values; reported in CLI output for auditability.
namespace constants {
inline constexpr double bohr_magneton = 9.2740100783e-24;       // J/T
inline constexpr double elementary_charge = 1.602176634e-19;    // C
}  // namespace constants

struct MacroParams {
    double persistent_current = 0.0;  ///< A
    double loop_area = 0.0;           ///< m^2
    double circumference = 0.0;       ///< m
    double fermi_velocity = 0.0;      ///< m/s
    double overlap = 1.0;             ///< flux-eigenstate overlap factor, (0, 1]

    /// All fields strictly positive, overlap <= 1; throws otherwise.
    void validate() const;

    /// 170 nA circulating in a 7 um^2 loop; circumference defaults to a
    /// square loop with that area (4 sqrt(A) ~ 10.58 um), Fermi velocity to
    /// aluminum (2.03e6 m/s), overlap to 1. Circumference and velocity are
    /// plain inputs, not constants: override them for a different geometry
    /// or material.
    static MacroParams flux_qubit_defaults();
};

/// Magnetic-moment difference in Bohr magnetons.
double extensive_difference(const MacroParams& p);

/// Number of electrons changing state between the two branches.
double disconnectivity(const MacroParams& p);

struct MacroReport {
    double delta_m_bohr = 0.0;
    double delta_n = 0.0;
};

MacroReport macro_report(const MacroParams& p);

/// Reference point, not computed here: the same electron-counting measure for
/// the smallest dust grain visible to the naked eye, one branch at rest and
/// one crossing its own diameter per second, is about 2.5; counting in units
/// of a nucleus' (or, for the qubit, a Cooper pair's) lower momentum raises
/// both numbers by orders of magnitude.
inline constexpr double dust_grain_delta_n = 2.5;

}  // namespace lgsim
