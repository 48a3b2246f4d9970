#pragma once

#include <string_view>

// Constants taken from the literature. They are inputs to the piecewise
// report, never recomputed claims; each carries its source.

namespace mlgap::constants {

struct Imported {
  std::string_view key;
  std::string_view value;
  std::string_view source;
};

/// HD(M ∩ (-inf, sqrt(10))) < 0.93, from Chapter 6 of Cusick and Flahive,
/// "The Markoff and Lagrange Spectra" (1989).
inline constexpr Imported kLowSpectrum{"M below sqrt(10)", "0.93", "Cusick-Flahive, Ch. 6"};

/// Hensley's dimensions of the full-shift continued fraction sets E_2, E_3, E_4.
inline constexpr Imported kHensleyE2{"E2", "0.531291", "Hensley"};
inline constexpr Imported kHensleyE3{"E3", "0.705661", "Hensley"};
inline constexpr Imported kHensleyE4{"E4", "0.788947", "Hensley"};

/// Published heuristic Jenkinson-Pollicott upper estimates for the
/// forbidden-word sets used in the heuristic report.
inline constexpr Imported kPublishedX2{"X2", "0.365", "published JP estimate"};
inline constexpr Imported kPublishedX3a{"X3a", "0.574", "published JP estimate"};
inline constexpr Imported kPublishedX3b{"X3b", "0.612", "published JP estimate"};
inline constexpr Imported kPublishedX3c{"X3c", "0.65", "published JP estimate"};
inline constexpr Imported kPublishedX4{"X4", "0.715", "published JP estimate"};

/// [sqrt(21), inf) lies in L (Freiman; Schecker), so M \ L is empty there.
inline constexpr std::string_view kHallRaySource = "Freiman; Schecker";

/// Tolerances used when comparing our estimates with the values above.
inline constexpr double kHensleyTolerance = 5e-4;
inline constexpr double kPublishedTolerance = 5e-3;

}  // namespace mlgap::constants
