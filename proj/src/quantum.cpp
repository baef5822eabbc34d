#include "tribox/quantum.hpp"

#include <cmath>

namespace tribox {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488016887242097;

Mat2 pauli_combo(const Bloch& n) {
  // n·σ for σ = (σx, σy, σz)
  return {Cplx(n.z, 0), Cplx(n.x, -n.y), Cplx(n.x, n.y), Cplx(-n.z, 0)};
}

Mat2 projector(const Bloch& n, int outcome) {
  Mat2 s = pauli_combo(n);
  double f = outcome ? -0.5 : 0.5;
  return {Cplx(0.5, 0) + f * s[0], f * s[1], f * s[2],
          Cplx(0.5, 0) + f * s[3]};
}

Mat8 kron3(const Mat2& a, const Mat2& b, const Mat2& c) {
  Mat8 out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int ia = i >> 2 & 1, ib = i >> 1 & 1, ic = i & 1;
      int ja = j >> 2 & 1, jb = j >> 1 & 1, jc = j & 1;
      out[8 * i + j] =
          a[2 * ia + ja] * b[2 * ib + jb] * c[2 * ic + jc];
    }
  return out;
}

double trace_product(const Mat8& rho, const Mat8& op) {
  // Tr(ρ·op) = Σ_ij ρ_ij op_ji
  Cplx t(0, 0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) t += rho[8 * i + j] * op[8 * j + i];
  return t.real();
}

}  // namespace

ThreeQubitState ThreeQubitState::pure(const Amplitudes& amps) {
  double norm = 0;
  for (const auto& a : amps) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-12)
    throw StateError("pure state is not unit-norm");
  ThreeQubitState s;
  s.pure_ = true;
  s.amps_ = amps;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) s.rho_[8 * i + j] = amps[i] * std::conj(amps[j]);
  return s;
}

ThreeQubitState ThreeQubitState::mixed(const Mat8& rho) {
  Cplx trace(0, 0);
  for (int i = 0; i < 8; ++i) trace += rho[8 * i + i];
  if (std::abs(trace - Cplx(1, 0)) > 1e-12)
    throw StateError("density matrix trace is not 1");
  for (int i = 0; i < 8; ++i) {
    if (rho[8 * i + i].real() < -1e-12)
      throw StateError("density matrix has a negative diagonal entry");
    for (int j = 0; j < 8; ++j)
      if (std::abs(rho[8 * i + j] - std::conj(rho[8 * j + i])) > 1e-12)
        throw StateError("density matrix is not Hermitian");
  }
  ThreeQubitState s;
  s.pure_ = false;
  s.rho_ = rho;
  return s;
}

ThreeQubitState gghz_state(double theta) {
  if (theta < 0 || theta > M_PI / 2 + 1e-12)
    throw StateError("gghz_state: θ must lie in [0, π/2]");
  Amplitudes amps{};
  amps[0] = Cplx(std::cos(theta), 0);
  amps[7] = Cplx(std::sin(theta), 0);
  return ThreeQubitState::pure(amps);
}

double three_tangle_gghz(double theta) {
  double s = std::sin(2 * theta);
  return s * s;
}

MeasurementSettings preset_settings(PresetKind kind) {
  MeasurementSettings m;
  Bloch sx{1, 0, 0}, sy{0, 1, 0};
  Bloch bm{1 / kSqrt2, -1 / kSqrt2, 0};  // (σx−σy)/√2
  Bloch bp{1 / kSqrt2, 1 / kSqrt2, 0};   // (σx+σy)/√2
  if (kind == PresetKind::Svetlichny) {
    m.dir = {{{{sx, sy}}, {{bm, bp}}, {{sx, sy}}}};
  } else {
    m.dir = {{{{sx, sy}}, {{sx, sy}}, {{sx, sy}}}};
  }
  return m;
}

bool float_box_valid(const FloatBox& box, double tol) {
  for (double v : box.p)
    if (v < -tol) return false;
  for (int in = 0; in < 8; ++in) {
    double sum = 0;
    for (int o = 0; o < 8; ++o) sum += box.p[8 * in + o];
    if (std::abs(sum - 1.0) > tol) return false;
  }
  // pair marginals independent of the remaining input
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          double m0 = 0, m1 = 0;
          for (int c = 0; c < 2; ++c) {
            m0 += box.at(a, b, c, x, y, 0);
            m1 += box.at(a, b, c, x, y, 1);
          }
          if (std::abs(m0 - m1) > tol) return false;
        }
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int x = 0; x < 2; ++x)
        for (int z = 0; z < 2; ++z) {
          double m0 = 0, m1 = 0;
          for (int b = 0; b < 2; ++b) {
            m0 += box.at(a, b, c, x, 0, z);
            m1 += box.at(a, b, c, x, 1, z);
          }
          if (std::abs(m0 - m1) > tol) return false;
        }
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) {
          double m0 = 0, m1 = 0;
          for (int a = 0; a < 2; ++a) {
            m0 += box.at(a, b, c, 0, y, z);
            m1 += box.at(a, b, c, 1, y, z);
          }
          if (std::abs(m0 - m1) > tol) return false;
        }
  return true;
}

FloatBox born_box(const ThreeQubitState& state,
                  const MeasurementSettings& settings) {
  FloatBox out;
  // cache projectors per party/input/outcome
  Mat2 proj[3][2][2];
  for (int party = 0; party < 3; ++party)
    for (int in = 0; in < 2; ++in)
      for (int o = 0; o < 2; ++o)
        proj[party][in][o] = projector(settings.dir[party][in], o);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
              Mat8 op = kron3(proj[0][x][a], proj[1][y][b], proj[2][z][c]);
              out.at(a, b, c, x, y, z) = trace_product(state.density(), op);
            }
  return out;
}

std::array<double, 4> born_single(const Mat2& rho,
                                  const std::array<Bloch, 2>& dir) {
  std::array<double, 4> out{};
  for (int in = 0; in < 2; ++in)
    for (int o = 0; o < 2; ++o) {
      Mat2 pr = projector(dir[in], o);
      Cplx t = rho[0] * pr[0] + rho[1] * pr[2] + rho[2] * pr[1] + rho[3] * pr[3];
      out[2 * in + o] = t.real();
    }
  return out;
}

Mat2 qubit_state(const Bloch& n) {
  if (n.x * n.x + n.y * n.y + n.z * n.z > 1 + 1e-12)
    throw StateError("qubit_state: Bloch vector longer than 1");
  Mat2 s = pauli_combo(n);
  return {Cplx(0.5, 0) + 0.5 * s[0], 0.5 * s[1], 0.5 * s[2],
          Cplx(0.5, 0) + 0.5 * s[3]};
}

ThreeQubitState cq_state(const std::array<double, 2>& p,
                         const std::array<Mat2, 2>& bob,
                         const std::array<Mat2, 2>& charlie) {
  if (p[0] < 0 || p[1] < 0 || std::abs(p[0] + p[1] - 1.0) > 1e-12)
    throw StateError("cq_state: p must be a 2-outcome distribution");
  Mat8 rho{};
  for (int i = 0; i < 2; ++i) {
    Mat2 ai{};  // |i⟩⟨i|
    ai[i == 0 ? 0 : 3] = Cplx(1, 0);
    Mat8 term = kron3(ai, bob[i], charlie[i]);
    for (int k = 0; k < 64; ++k) rho[k] += p[i] * term[k];
  }
  return ThreeQubitState::mixed(rho);
}

CqBoxResult cq_box_with_witness(const std::array<double, 2>& p,
                                const std::array<Mat2, 2>& bob,
                                const std::array<Mat2, 2>& charlie,
                                const MeasurementSettings& settings) {
  CqBoxResult out;
  ThreeQubitState state = cq_state(p, bob, charlie);
  out.box = born_box(state, settings);

  // Witness branch requires Alice to measure the classical (σz) basis.
  for (int in = 0; in < 2; ++in) {
    const Bloch& n = settings.dir[0][in];
    if (std::abs(n.x) > 1e-12 || std::abs(n.y) > 1e-12 ||
        std::abs(std::abs(n.z) - 1.0) > 1e-12)
      return out;
  }

  std::array<CqWitnessTerm, 2> witness;
  for (int i = 0; i < 2; ++i) {
    CqWitnessTerm term;
    term.weight = p[i];
    Mat2 ai{};
    ai[i == 0 ? 0 : 3] = Cplx(1, 0);
    term.alice = born_single(ai, settings.dir[0]);
    auto bprob = born_single(bob[i], settings.dir[1]);
    auto cprob = born_single(charlie[i], settings.dir[2]);
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            term.pair[4 * (2 * y + z) + 2 * b + c] =
                bprob[2 * y + b] * cprob[2 * z + c];
    witness[i] = term;
  }

  // Reconstruction check at 1e−12.
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
              double v = 0;
              for (int i = 0; i < 2; ++i)
                v += witness[i].weight * witness[i].alice[2 * x + a] *
                     witness[i].pair[4 * (2 * y + z) + 2 * b + c];
              if (std::abs(v - out.box.at(a, b, c, x, y, z)) > 1e-12)
                throw std::logic_error("cq witness failed reconstruction");
            }
  out.witness = witness;
  return out;
}

TripartiteBox snap_to_exact(const FloatBox& fbox, double tolerance,
                            long max_denominator) {
  if (tolerance <= 0) throw SnapFailure("tolerance must be positive");
  const long d = max_denominator;
  TripartiteBox out;
  for (int e = 0; e < 64; ++e) {
    double target = fbox.p[e];
    bool found = false;
    long best_i = 0, best_j = 0;
    double best_err = 0;
    // candidates i/d + (j/d)·√2 with |i/d| ≤ 2, |j/d| ≤ 1
    for (long j = -d; j <= d; ++j) {
      double rem = target - static_cast<double>(j) * kSqrt2 / d;
      long i = std::llround(rem * static_cast<double>(d));
      if (i < -2 * d || i > 2 * d) continue;
      double err = std::abs(rem - static_cast<double>(i) / d);
      if (!found || err < best_err) {
        found = true;
        best_err = err;
        best_i = i;
        best_j = j;
      }
    }
    if (!found || best_err > tolerance)
      throw SnapFailure("entry " + std::to_string(target) +
                        " is not on the exact lattice");
    out.p[e] = Scalar(Rat(best_i, d), Rat(best_j, d));
  }
  ValidationReport rep = validate(out);
  if (!rep.ok())
    throw InvalidSnapped("snapped box is not a valid nonsignaling box");
  return out;
}

}  // namespace tribox
