#pragma once

// Physical constants used throughout the library. CODATA-2018 values.
// Internal units: energies in MeV, lengths in cm, cross sections in barn
// (converted to cm^2 where needed).

namespace nvirrad {

// Electron rest energy m0*c^2 [MeV]
inline constexpr double kElectronRestMeV = 0.51099895000;

// Classical electron radius r_e [cm]
inline constexpr double kClassicalElectronRadiusCm = 2.8179403262e-13;

// Atomic mass unit energy equivalent [MeV]
inline constexpr double kAmuMeV = 931.49410242;

// 1 barn in cm^2
inline constexpr double kBarnCm2 = 1e-24;

// Diamond lattice-site density per ppm: 1 ppm = 1.75e17 atoms/cm^3
inline constexpr double kPpmToAtomsPerCm3 = 1.75e17;

// Fine-structure constant enters the Mott terms as Z/137
inline constexpr double kInverseFineStructure = 137.0;

// NV gyromagnetic ratio, 2.80 MHz/G (= 28.0 GHz/T)
inline constexpr double kNvGyromagneticMHzPerG = 2.80;

// Gauss -> Tesla
inline constexpr double kGaussToTesla = 1e-4;

}  // namespace nvirrad
