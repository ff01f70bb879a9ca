#pragma once

// Reference computations that share no code path with the library.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>

namespace oracle {

using cd = std::complex<double>;
using big = boost::multiprecision::cpp_bin_float_50;

/// Cofactor expansion along the first row.
template <class M> auto det3(const M &m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
         m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
         m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
}

template <class M> auto det4(const M &m) {
  using T = std::decay_t<decltype(m(0, 0))>;
  T out{};
  const std::array<std::array<int, 3>, 4> rest{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  for (int c = 0; c < 4; ++c) {
    const auto &k = rest[static_cast<std::size_t>(c)];
    const T minor = det3(m, 1, 2, 3, k[0], k[1], k[2]);
    out += (c % 2 == 0 ? T(1) : T(-1)) * m(0, c) * minor;
  }
  return out;
}

/// Gamma matrices typed in entry by entry (row-major).
inline Eigen::Matrix4cd gamma_entries(int which) {
  const cd i{0.0, 1.0};
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  switch (which) {
  case 0:
    g(0, 0) = 1; g(1, 1) = 1; g(2, 2) = -1; g(3, 3) = -1;
    break;
  case 1: // [[0, i sx], [-i sx, 0]]
    g(0, 3) = i; g(1, 2) = i; g(2, 1) = -i; g(3, 0) = -i;
    break;
  case 2: // [[0, i sy], [-i sy, 0]], sy = [[0,-i],[i,0]]
    g(0, 3) = 1; g(1, 2) = -1; g(2, 1) = -1; g(3, 0) = 1;
    break;
  case 3: // [[0, i sz], [-i sz, 0]]
    g(0, 2) = i; g(1, 3) = -i; g(2, 0) = -i; g(3, 1) = i;
    break;
  case 5:
    g(0, 2) = 1; g(1, 3) = 1; g(2, 0) = 1; g(3, 1) = 1;
    break;
  default:
    break;
  }
  return g;
}

/// Excess energy evaluated literally, term by term, in 50-digit arithmetic:
///   2s(1+s)^2/C1 + [(1+s)/C2 - 1 - s]/a^2
inline big delta_e_literal(double sigma_d, double alpha_d, double j1_d, double j2_d) {
  using boost::multiprecision::sqrt;
  const big s(sigma_d), a(alpha_d), j1(j1_d), j2(j2_d);
  const big s1 = sqrt(j1 * j1 - 4 * a * a) - big(1) / 2;
  const big s2 = sqrt(j2 * j2 - 4 * a * a) - big(1) / 2;
  const big bracket = (1 - s) * (1 - s) * (s1 + big(1) / 2) * s1 +
                      4 * s * s * s * (s2 + big(3) / 2) * s2;
  const big inner = (1 - s) * (1 - s) * s1 * s1 + 4 * s * s * s * s * s2 * s2;
  const big C1 = sqrt(bracket * bracket + 4 * a * a * (1 + s) * (1 + s) * inner);
  const big C2 = sqrt(1 + 4 * a * a * (1 + s) * (1 + s) * inner / (bracket * bracket));
  return 2 * s * (1 + s) * (1 + s) / C1 + ((1 + s) / C2 - 1 - s) / (a * a);
}

/// Dirac ground state of a hydrogen-like ion of charge Z: m sqrt(1 - (Z a)^2).
inline double hydrogen_like_energy(double m, double Z, double alpha) {
  return m * std::sqrt(1.0 - (Z * alpha) * (Z * alpha));
}

/// The plane wave e^{i k.x} u is an exact eigenfunction of every derivative.
/// Its image under the two-electron operator with frozen potential term V:
///   [(1-s) i(g3 (ik1) - g5 (ik2)) + 2s i(g2 (ik3) - g1 (ik4)) + (1+s) m g0 + V]
inline Eigen::Vector4cd plane_wave_h(const std::array<double, 4> &k,
                                     const Eigen::Vector4cd &u, double sigma,
                                     double m, double V) {
  const cd i{0.0, 1.0};
  const Eigen::Matrix4cd op =
      (1.0 - sigma) * i * (gamma_entries(3) * (i * k[0]) - gamma_entries(5) * (i * k[1])) +
      2.0 * sigma * i * (gamma_entries(2) * (i * k[2]) - gamma_entries(1) * (i * k[3])) +
      (1.0 + sigma) * m * gamma_entries(0) + V * Eigen::Matrix4cd::Identity();
  return op * u;
}

} // namespace oracle
