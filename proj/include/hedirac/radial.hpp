#pragma once

// Power-exponential ansatz f_k = a_k r1^s1 r2^s2 exp(-b1 r1 - b2 r2), its
// indicial systems, the recurrence functions R_1..R_4, the spectral matrix
// whose determinant fixes b1, its kernel, and the contracted relations that
// lead to the energy condition.
//
// Every bracket of the recurrence and contraction formulas is transcribed as
// its own named quantity, so that a disagreement between two routes can be
// attributed to one term.

#include "hedirac/model.hpp"

#include <algorithm>
#include <utility>

namespace hedirac {

struct Exponents {
  double s1;
  double s2;
};

/// s = -1/2 + sqrt(j^2 - 4 a^2)
inline double exponent(double j, double alpha) {
  const double disc = j * j - 4.0 * alpha * alpha;
  if (!(disc > 0.0))
    throw imaginary_exponent_error("indicial exponent is complex: j^2 <= 4 alpha^2");
  return -0.5 + std::sqrt(disc);
}

inline Exponents exponents(double j1, double j2, double alpha) {
  return {exponent(j1, alpha), exponent(j2, alpha)};
}

/// sqrt(j^2 - 4 a^2), i.e. s + 1/2.
inline double root_term(double j, double alpha) {
  return exponent(j, alpha) + 0.5;
}

//==============================================================================
// Indicial systems on (a100, a200, a300, a400).
//
// which = 1 (coefficients of 1/r1, coupling 2a):
//   -2a a1 + (j-s-1/2) a3,  -2a a2 + (j+s+1/2) a4,
//    2a a3 - (j+s+1/2) a1,   2a a4 - (j-s-1/2) a2
// which = 2 (coefficients of 1/r2, coupling 4a as printed):
//   -4a a1 + (j-s-1/2) a4,  -4a a2 - (j+s+1/2) a3,
//    4a a3 + (j-s-1/2) a2,   4a a4 - (j+s+1/2) a1

inline Mat4 indicial_matrix(int which, double j, double s, double alpha,
                            double coupling_override = 0.0) {
  if (which != 1 && which != 2)
    throw invalid_argument("indicial_matrix: which must be 1 or 2");
  const double c = coupling_override > 0.0 ? coupling_override
                                           : (which == 1 ? 2.0 : 4.0) * alpha;
  const double lo = j - s - 0.5, hi = j + s + 0.5;
  Mat4 m = Mat4::Zero();
  if (which == 1) {
    m(0, 0) = -c; m(0, 2) = lo;
    m(1, 1) = -c; m(1, 3) = hi;
    m(2, 2) = c;  m(2, 0) = -hi;
    m(3, 3) = c;  m(3, 1) = -lo;
  } else {
    m(0, 0) = -c; m(0, 3) = lo;
    m(1, 1) = -c; m(1, 2) = -hi;
    m(2, 2) = c;  m(2, 1) = lo;
    m(3, 3) = c;  m(3, 0) = -hi;
  }
  return m;
}

/// Ratio fixed by one 2x2 block of an indicial system, once from each row.
struct KernelRatio {
  double from_first_row;
  double from_second_row;
  double relative_mismatch() const {
    const double scale =
        std::max(std::abs(from_first_row), std::abs(from_second_row));
    return scale == 0.0 ? 0.0
                        : std::abs(from_first_row - from_second_row) / scale;
  }
};

struct IndicialKernel {
  int which;
  double s;
  /// which=1: a300/a100; which=2: a400/a100
  KernelRatio block_a;
  /// which=1: a400/a200; which=2: a300/a200
  KernelRatio block_b;
  /// alpha = 0: the kernel collapses onto a100 = a200 = 0.
  bool degenerate = false;
};

inline IndicialKernel indicial_kernel(int which, double j, double alpha) {
  if (which != 1 && which != 2)
    throw invalid_argument("indicial_kernel: which must be 1 or 2");
  const double s = exponent(j, alpha);
  const double c = (which == 1 ? 2.0 : 4.0) * alpha;
  const double lo = j - s - 0.5, hi = j + s + 0.5;
  IndicialKernel k{which, s, {}, {}, alpha == 0.0};
  if (k.degenerate)
    return k;
  if (which == 1) {
    k.block_a = {c / lo, hi / c};
    k.block_b = {c / hi, lo / c};
  } else {
    k.block_a = {c / lo, hi / c};
    k.block_b = {-c / hi, -lo / c};
  }
  return k;
}

//==============================================================================

struct GammaRho {
  double gamma1; ///< (1+s)m + E - (1+s)a/rho
  double gamma2; ///< (1+s)m - E + (1+s)a/rho

  /// rho may be +infinity (ion limit).
  static GammaRho from(const ModelParams &p, double E, double rho) {
    const double rest = (1.0 + p.sigma) * p.m;
    const double coulomb = (1.0 + p.sigma) * p.alpha / rho;
    return {rest + E - coulomb, rest - E + coulomb};
  }
};

struct RadialAnsatz {
  double s1 = 0.0, s2 = 0.0;
  double beta1 = 0.0, beta2 = 0.0;
  Vec4 a00 = Vec4::Zero(); ///< (a100, a200, a300, a400)
  double j1 = 1.0, j2 = 1.0;
};

/// Named brackets shared by the recurrence and contraction formulas.
struct RecurrenceBrackets {
  double upper1; ///< 1 + sqrt(j1^2 - 4a^2) + j1
  double lower1; ///< 1 + sqrt(j1^2 - 4a^2) - j1
  double upper2; ///< 1 + sqrt(j2^2 - 4a^2) + j2
  double lower2; ///< 1 + sqrt(j2^2 - 4a^2) - j2

  static RecurrenceBrackets from(const ModelParams &p) {
    const double r1 = root_term(p.j1, p.alpha), r2 = root_term(p.j2, p.alpha);
    return {1.0 + r1 + p.j1, 1.0 + r1 - p.j1, 1.0 + r2 + p.j2, 1.0 + r2 - p.j2};
  }
};

/// R_1..R_4 as printed; a10 = (a110, a210, a310, a410).
inline Vec4 recurrence_R(const ModelParams &params, const GammaRho &gr,
                         const RadialAnsatz &ansatz, const Vec4 &a10) {
  const auto b = RecurrenceBrackets::from(params);
  const double s = params.sigma, al = params.alpha;
  const double w1 = 1.0 - s, w2 = 2.0 * s;
  const double b1 = ansatz.beta1, b2 = ansatz.beta2;
  const Vec4 &a = ansatz.a00;
  const double coulomb = 2.0 * al * (1.0 + s);

  Vec4 R;
  R(0) = gr.gamma2 * a(0) - coulomb * a10(0) - w1 * b.lower1 * a10(2) +
         w1 * b1 * a(2) - w2 * b.lower2 * a10(3) + w2 * b2 * a(3);
  R(1) = gr.gamma2 * a(1) - coulomb * a10(1) - w2 * b.upper2 * a10(2) +
         w2 * b2 * a(2) + w1 * b.upper1 * a10(3) + w1 * b1 * a(3);
  R(2) = gr.gamma1 * a(2) + coulomb * a10(2) - w1 * b.upper1 * a10(0) +
         w1 * b1 * a(0) - w2 * b.lower2 * a10(1) + w2 * b2 * a(1);
  R(3) = gr.gamma1 * a(3) + coulomb * a10(3) - w2 * b.upper2 * a10(0) +
         w2 * b2 * a(0) + w1 * b.lower1 * a10(1) - w1 * b1 * a(1);
  return R;
}

inline Mat4 spectral_matrix(const GammaRho &gr, double sigma, double beta1,
                            double beta2) {
  const double u = (1.0 - sigma) * beta1, v = 2.0 * sigma * beta2;
  Mat4 m;
  m << gr.gamma2, 0.0, u, v,
       0.0, gr.gamma2, v, -u,
       u, v, gr.gamma1, 0.0,
       v, -u, 0.0, gr.gamma1;
  return m;
}

/// (g1 g2 - (1-s)^2 b1^2 - 4 s^2 b2^2)^2
inline double spectral_determinant_factored(const GammaRho &gr, double sigma,
                                            double beta1, double beta2) {
  const double u = (1.0 - sigma) * beta1, v = 2.0 * sigma * beta2;
  const double d = gr.gamma1 * gr.gamma2 - u * u - v * v;
  return d * d;
}

/// b1 = sqrt(g1 g2 - 4 s^2 b2^2) / (1 - s), the non-negative root.
inline double beta1_from_determinant(const GammaRho &gr, double sigma,
                                     double beta2) {
  if (!(sigma < 1.0))
    throw degeneracy_error("beta1_from_determinant: sigma = 1 divides by zero");
  const double disc = gr.gamma1 * gr.gamma2 - 4.0 * sigma * sigma * beta2 * beta2;
  if (disc < 0.0)
    throw no_real_solution_error("beta1_from_determinant: negative discriminant");
  return std::sqrt(disc) / (1.0 - sigma);
}

/// psi1 = (-(1-s)b1/g2, -2s b2/g2, 1, 0), psi2 = (-2s b2/g2, -(1-s)b1/g2, 0, 1)
///
/// psi2 is annihilated by the spectral matrix only up to the sign of its
/// second entry; see kernel_vectors_exact.
inline std::pair<Vec4, Vec4> kernel_vectors(const GammaRho &gr, double sigma,
                                            double beta1, double beta2) {
  if (gr.gamma2 == 0.0)
    throw degeneracy_error("kernel_vectors: gamma2 = 0");
  const double u = (1.0 - sigma) * beta1 / gr.gamma2;
  const double v = 2.0 * sigma * beta2 / gr.gamma2;
  return {Vec4(-u, -v, 1.0, 0.0), Vec4(-v, -u, 0.0, 1.0)};
}

/// Kernel basis solved from rows 1-2 of the spectral matrix for unit third
/// and fourth components: psi2 = (-2s b2/g2, +(1-s)b1/g2, 0, 1).
inline std::pair<Vec4, Vec4> kernel_vectors_exact(const GammaRho &gr,
                                                  double sigma, double beta1,
                                                  double beta2) {
  if (gr.gamma2 == 0.0)
    throw degeneracy_error("kernel_vectors_exact: gamma2 = 0");
  const double u = (1.0 - sigma) * beta1 / gr.gamma2;
  const double v = 2.0 * sigma * beta2 / gr.gamma2;
  return {Vec4(-u, -v, 1.0, 0.0), Vec4(-v, u, 0.0, 1.0)};
}

//==============================================================================
// Contractions

/// Coefficients of a110, a210, a310 in the contracted relation, as printed.
struct ContractionBrackets {
  double a110;
  double a210;
  double a310;
};

inline ContractionBrackets contraction_brackets(const ModelParams &params,
                                                const GammaRho &gr,
                                                double beta1, double beta2) {
  const auto b = RecurrenceBrackets::from(params);
  const double s = params.sigma, al = params.alpha, g2 = gr.gamma2;
  return {
      2.0 * al * (1.0 - s * s) * beta1 / g2 - (1.0 - s) * b.upper1,
      2.0 * s * (2.0 * al * (1.0 + s) * beta2 / g2 - b.lower2),
      b.lower1 * (1.0 - s) * (1.0 - s) * beta1 / g2 +
          4.0 * s * s * beta2 * b.upper2 + 2.0 * al * (1.0 + s),
  };
}


/// The contracted linear form in (a110, a210, a310), as printed.
inline double contraction_printed(const ModelParams &params, const GammaRho &gr,
                               double beta1, double beta2, double a110,
                               double a210, double a310) {
  const auto c = contraction_brackets(params, gr, beta1, beta2);
  return c.a110 * a110 + c.a210 * a210 + c.a310 * a310;
}

/// Coefficients of (a110, a210, a310, a410) in psi . R, obtained by feeding
/// unit first-order coefficients through recurrence_R with a00 = 0. Since the
/// spectral matrix is symmetric, psi . R does not depend on a00 whenever psi
/// lies in its kernel.
inline Vec4 contraction_coefficients(const ModelParams &params,
                                     const GammaRho &gr, double beta1,
                                     double beta2, const Vec4 &psi) {
  RadialAnsatz ansatz;
  ansatz.beta1 = beta1;
  ansatz.beta2 = beta2;
  ansatz.j1 = params.j1;
  ansatz.j2 = params.j2;
  Vec4 c;
  for (int k = 0; k < 4; ++k)
    c(k) = psi.dot(recurrence_R(params, gr, ansatz, Vec4::Unit(k)));
  return c;
}

/// Energy relation obtained by contracting with psi and then replacing the
/// first-order coefficients by psi itself (indices lowered by one step).
inline double contracted_relation(const ModelParams &params, const GammaRho &gr,
                                  double beta1, double beta2, const Vec4 &psi) {
  return contraction_coefficients(params, gr, beta1, beta2, psi).dot(psi);
}

/// The three-bracket energy relation as printed: the a110 and a210 brackets
/// weighted by the first two entries of psi1, plus the a310 bracket.
inline double three_bracket_residual(const ModelParams &params, const GammaRho &gr,
                            double beta1, double beta2) {
  const auto b = RecurrenceBrackets::from(params);
  const double s = params.sigma, al = params.alpha, g2 = gr.gamma2;
  if (g2 == 0.0)
    throw degeneracy_error("three_bracket_residual: gamma2 = 0");
  const double t1 = -(2.0 * al * (1.0 - s * s) * beta1 / g2 -
                      (1.0 - s) * b.upper1) *
                    (1.0 - s) * beta1 / g2;
  const double t2 =
      -4.0 * s * s * (2.0 * al * (1.0 + s) * beta2 / g2 - b.lower2) * beta2 / g2;
  const double t3 = b.lower1 * (1.0 - s) * (1.0 - s) * beta1 / g2 +
                    4.0 * s * s * beta2 * b.upper2 + 2.0 * al * (1.0 + s);
  return t1 + t2 + t3;
}

//==============================================================================
// Fundamental relation
//   b1 = a(1+s)(g1 - g2) / [F sqrt(j1^2-4a^2) + 4 s^2 h (1 + sqrt(j2^2-4a^2))]

enum class DenominatorFactor {
  quoted,             ///< F = 1 - s^2
  squared_difference, ///< F = (1 - s)^2, the factor that reproduces C1, C2
};

inline double fundamental_denominator(const ModelParams &params, double h,
                                      DenominatorFactor factor =
                                          DenominatorFactor::quoted) {
  const double s = params.sigma;
  const double f =
      factor == DenominatorFactor::quoted ? 1.0 - s * s : (1.0 - s) * (1.0 - s);
  return f * root_term(params.j1, params.alpha) +
         4.0 * s * s * h * (1.0 + root_term(params.j2, params.alpha));
}

inline double beta1_fundamental(const ModelParams &params, const GammaRho &gr,
                                double h,
                                DenominatorFactor factor =
                                    DenominatorFactor::quoted) {
  const double den = fundamental_denominator(params, h, factor);
  if (den == 0.0)
    throw degeneracy_error("beta1_fundamental: vanishing denominator");
  return params.alpha * (1.0 + params.sigma) * (gr.gamma1 - gr.gamma2) / den;
}

/// Determinant route with b2 = h b1: b1 = sqrt(g1 g2 / ((1-s)^2 + 4 s^2 h^2)).
inline double beta1_self_consistent(const GammaRho &gr, double sigma,
                                    double h) {
  const double k = (1.0 - sigma) * (1.0 - sigma) + 4.0 * sigma * sigma * h * h;
  if (k == 0.0)
    throw degeneracy_error("beta1_self_consistent: sigma = 1 with h = 0");
  double prod = gr.gamma1 * gr.gamma2;
  // a product that is negative only by rounding (at a bracket end) counts as 0
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() *
                          (gr.gamma1 * gr.gamma1 + gr.gamma2 * gr.gamma2);
  if (prod < 0.0 && -prod <= rounding)
    prod = 0.0;
  if (prod < 0.0)
    throw no_real_solution_error(
        "beta1_self_consistent: g1 g2 < 0, no real decay rate");
  return std::sqrt(prod / k);
}

/// b1(determinant route) - b1(fundamental relation).
inline double fundamental_residual(const ModelParams &params, double E,
                                   double rho, double h,
                                   DenominatorFactor factor =
                                       DenominatorFactor::quoted) {
  const auto gr = GammaRho::from(params, E, rho);
  return beta1_self_consistent(gr, params.sigma, h) -
         beta1_fundamental(params, gr, h, factor);
}

//==============================================================================
// Compatibility of the two indicial systems

struct KernelCompatibility {
  /// Largest principal angle (radians) between the two near-kernels.
  double angle;
  /// Two smallest singular values of each indicial matrix.
  double sv_first[2];
  double sv_second[2];
};

/// Compares the two-dimensional near-kernels (right singular vectors of the
/// two smallest singular values) of the two indicial systems evaluated at the
/// same exponent s. An angle of zero means a common solution exists.
inline KernelCompatibility indicial_compatibility(double j, double alpha,
                                                  double coupling2 = 0.0) {
  const double s = exponent(j, alpha);
  const Mat4 m1 = indicial_matrix(1, j, s, alpha);
  const Mat4 m2 = indicial_matrix(2, j, s, alpha, coupling2);
  Eigen::JacobiSVD<Mat4> svd1(m1, Eigen::ComputeFullV);
  Eigen::JacobiSVD<Mat4> svd2(m2, Eigen::ComputeFullV);
  // Singular values are sorted in decreasing order.
  const Eigen::Matrix<double, 4, 2> k1 = svd1.matrixV().rightCols<2>();
  const Eigen::Matrix<double, 4, 2> k2 = svd2.matrixV().rightCols<2>();
  Eigen::JacobiSVD<Eigen::Matrix2d> overlap(k1.transpose() * k2);
  const double cos_min = std::clamp(overlap.singularValues()(1), 0.0, 1.0);
  KernelCompatibility out{};
  out.angle = std::acos(cos_min);
  out.sv_first[0] = svd1.singularValues()(2);
  out.sv_first[1] = svd1.singularValues()(3);
  out.sv_second[0] = svd2.singularValues()(2);
  out.sv_second[1] = svd2.singularValues()(3);
  return out;
}

} // namespace hedirac
