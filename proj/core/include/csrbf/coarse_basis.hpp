#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csrbf/types.hpp"

namespace csrbf {

/// The seven coarse basis families of the comparison benchmark.
enum class CoarseBasisKind { Cosine, Sine, Tangent, Sinc, Exponential, Gaussian, Chebyshev };

inline constexpr std::array<CoarseBasisKind, 7> kAllCoarseBases = {
    CoarseBasisKind::Cosine,      CoarseBasisKind::Sine,     CoarseBasisKind::Tangent,
    CoarseBasisKind::Sinc,        CoarseBasisKind::Exponential,
    CoarseBasisKind::Gaussian,    CoarseBasisKind::Chebyshev,
};

/// Lowercase names used by the CLI: cosine, sine, tangent, sinc,
/// exponential, gaussian, chebyshev.
std::string to_string(CoarseBasisKind kind);
std::optional<CoarseBasisKind> parse_coarse_basis(std::string_view name);

/// Keeps the tangent argument pi*q*(t - 1/2)*kappa away from the first pole.
inline constexpr double kTangentCompression = 0.9;

/// Raw per-axis generator value, before column normalization. t is the
/// axis coordinate in [0,1], q >= 1 the frequency index; u = 2t - 1.
///   cosine       cos(pi q t)
///   sine         sin(pi q t)
///   tangent      tan(pi q (t - 1/2) * 0.9)
///   sinc         sin(pi q u) / (pi q u), 1 at u = 0
///   exponential  exp(-q t)
///   gaussian     exp(-(q u)^2)
///   chebyshev    T_q(u) by the three-term recurrence
double coarse_generator(CoarseBasisKind kind, int q, double t);

/// sin(pi z) / (pi z) with sinc(0) = 1.
double sinc(double z);

/// T_q(u) via T_0 = 1, T_1 = u, T_{k+1} = 2 u T_k - T_{k-1}.
double chebyshev_t(int q, double u);

/// Coarse matrix for the deflated solver: (N + l) x m, poly rows zero,
/// unit-norm columns. Column j samples generator (axis j mod d,
/// frequency 1 + j / d) at every site.
struct CoarseSpace {
  Matrix q;
  CoarseBasisKind kind = CoarseBasisKind::Chebyshev;
  Index m = 0;
};

/// Throws std::invalid_argument when m > N or a column is identically zero
/// / non-finite. m = 0 yields an empty space (plain GCR).
CoarseSpace build_coarse(CoarseBasisKind kind, Index m, const std::vector<Point>& sites,
                         int poly_terms);

/// Optional thin-QR orthonormalization of the columns (experimentation
/// switch); the zero poly rows are preserved exactly.
void orthonormalize(CoarseSpace& space);

}  // namespace csrbf
