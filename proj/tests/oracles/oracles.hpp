// Copyright 2026 The eframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference computations that share no code path with the library: explicit
// loops instead of Eigen expressions, and a derivative-free random search in
// place of an eigensolver. Used to freeze expected values and to cross-check
// the library in property tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace eframe::oracle {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// h_n = sum_k E(n,k) f_k with f_k the columns of `f`, by triple loop.
inline CMatrix apply_map(const CMatrix& e, const CMatrix& f) {
  CMatrix h = CMatrix::Zero(f.rows(), e.rows());
  for (Eigen::Index n = 0; n < e.rows(); ++n) {
    for (Eigen::Index k = 0; k < e.cols(); ++k) {
      for (Eigen::Index i = 0; i < f.rows(); ++i) {
        h(i, n) += e(n, k) * f(i, k);
      }
    }
  }
  return h;
}

// <x, y> = sum x_i conj(y_i), by loop.
inline cplx inner(const CVector& x, const CVector& y) {
  cplx s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += x(i) * std::conj(y(i));
  return s;
}

// sum_n |<f, h_n>|^2 evaluated directly from the family.
inline double energy(const CMatrix& h, const CVector& f) {
  double s = 0.0;
  for (Eigen::Index n = 0; n < h.cols(); ++n) {
    s += std::norm(inner(f, h.col(n)));
  }
  return s;
}

// S = sum_n h_n h_n^* as an explicit sum of rank-one terms.
inline CMatrix rank_one_sum(const CMatrix& h) {
  const Eigen::Index d = h.rows();
  CMatrix s = CMatrix::Zero(d, d);
  for (Eigen::Index n = 0; n < h.cols(); ++n) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        s(i, j) += h(i, n) * std::conj(h(j, n));
      }
    }
  }
  return s;
}

// Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula.
inline std::pair<double, double> eig2x2(const CMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double b2 = std::norm(m(0, 1));
  const double mid = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + b2);
  return {mid - rad, mid + rad};
}

// Gershgorin column bounds of G = E^*E, computed from explicit sums.
struct Gershgorin {
  double a;
  double b;
};

inline Gershgorin gershgorin(const CMatrix& e) {
  const Eigen::Index n = e.cols();
  Gershgorin out{std::numeric_limits<double>::infinity(), 0.0};
  for (Eigen::Index k = 0; k < n; ++k) {
    double diag = 0.0;
    double off = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      cplx g = 0.0;
      for (Eigen::Index r = 0; r < e.rows(); ++r) {
        g += e(r, k) * std::conj(e(r, j));
      }
      if (j == k) {
        diag = g.real();
      } else {
        off += std::abs(g);
      }
    }
    out.a = std::min(out.a, diag - off);
    out.b = std::max(out.b, diag + off);
  }
  return out;
}

struct Extremes {
  double min;
  double max;
};

// Brute-force extremes of f -> sum_n |<f, h_n>|^2 over unit vectors, using
// exactly `budget` random unit vectors: a fifth drawn uniformly from the
// sphere, the rest spent on two (1+1) evolution strategies (one per extreme)
// that propose random perturbations of the incumbent. Only energy()
// evaluations are used.
inline Extremes sample_extremes(const CMatrix& h, std::size_t budget,
                                std::uint64_t seed) {
  const Eigen::Index d = h.rows();
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  auto gaussian = [&] {
    CVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = cplx(normal(gen), normal(gen));
    return v;
  };
  auto random_unit = [&] {
    CVector v = gaussian();
    return CVector(v / v.norm());
  };

  const std::size_t uniform_draws = std::max<std::size_t>(1, budget / 5);
  CVector best_max = random_unit();
  CVector best_min = best_max;
  double e_max = energy(h, best_max);
  double e_min = e_max;
  for (std::size_t i = 1; i < uniform_draws; ++i) {
    const CVector f = random_unit();
    const double e = energy(h, f);
    if (e > e_max) { e_max = e; best_max = f; }
    if (e < e_min) { e_min = e; best_min = f; }
  }

  const std::size_t local = (budget - uniform_draws) / 2;
  auto refine = [&](CVector x, double fx, bool maximize) {
    double sigma = 0.3;
    for (std::size_t i = 0; i < local; ++i) {
      CVector y = x + sigma * gaussian();
      y /= y.norm();
      const double fy = energy(h, y);
      if (maximize ? fy > fx : fy < fx) {
        x = y;
        fx = fy;
        sigma *= 1.5;
      } else {
        sigma *= 0.92;
      }
      sigma = std::clamp(sigma, 1e-12, 1.0);
    }
    return fx;
  };
  return {refine(best_min, e_min, false), refine(best_max, e_max, true)};
}

}  // namespace eframe::oracle
