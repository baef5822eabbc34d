#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "tribox/box.hpp"

namespace tribox {

struct SnapFailure : BoxError {
  explicit SnapFailure(const std::string& what) : BoxError(what) {}
};
struct InvalidSnapped : BoxError {
  explicit InvalidSnapped(const std::string& what) : BoxError(what) {}
};
struct StateError : BoxError {
  explicit StateError(const std::string& what) : BoxError(what) {}
};

using Cplx = std::complex<double>;
using Mat2 = std::array<Cplx, 4>;    // row-major 2×2
using Mat8 = std::array<Cplx, 64>;   // row-major 8×8
using Amplitudes = std::array<Cplx, 8>;

/// Pure (8 amplitudes) or mixed (8×8 density matrix) three-qubit state.
/// Norm/trace validated to 1e−12; Hermiticity likewise; eigenvalue
/// positivity is floored at −1e−12 via a Gershgorin-style check.
class ThreeQubitState {
 public:
  static ThreeQubitState pure(const Amplitudes& amps);
  static ThreeQubitState mixed(const Mat8& rho);

  const Mat8& density() const { return rho_; }
  bool is_pure() const { return pure_; }
  const Amplitudes& amplitudes() const { return amps_; }

 private:
  ThreeQubitState() = default;
  bool pure_ = false;
  Amplitudes amps_{};
  Mat8 rho_{};
};

/// cosθ|000⟩ + sinθ|111⟩, θ ∈ [0, π/2].
ThreeQubitState gghz_state(double theta);
/// Three-tangle of the GGHZ state: sin²(2θ).
double three_tangle_gghz(double theta);

struct Bloch {
  double x = 0, y = 0, z = 0;
};

/// Per party, per input: a unit Bloch vector (projective measurements only).
struct MeasurementSettings {
  std::array<std::array<Bloch, 2>, 3> dir;  // [party][input]
};

enum class PresetKind { Svetlichny, Mermin };
/// §-preset operators: Svetlichny uses A₀=σx, A₁=σy, B₀=(σx−σy)/√2,
/// B₁=(σx+σy)/√2, C₀=σx, C₁=σy; Mermin uses σx/σy for every party.
MeasurementSettings preset_settings(PresetKind kind);

/// 64 double-precision probabilities; same index layout as TripartiteBox.
struct FloatBox {
  std::array<double, 64> p{};
  double& at(int a, int b, int c, int x, int y, int z) {
    return p[TripartiteBox::index(a, b, c, x, y, z)];
  }
  double at(int a, int b, int c, int x, int y, int z) const {
    return p[TripartiteBox::index(a, b, c, x, y, z)];
  }
};

/// Normalization and nonsignaling within tolerance.
bool float_box_valid(const FloatBox& box, double tol = 1e-10);

/// p(abc|xyz) = Tr(ρ·Π^a_x⊗Π^b_y⊗Π^c_z), Π^a = (1+(−1)^a n̂·σ)/2.
FloatBox born_box(const ThreeQubitState& state,
                  const MeasurementSettings& settings);

/// Single-qubit Born probabilities p(a|input) for a density matrix and two
/// Bloch directions.
std::array<double, 4> born_single(const Mat2& rho,
                                  const std::array<Bloch, 2>& dir);

/// Classical-quantum state Σ_i p_i |i⟩⟨i| ⊗ ρ^B_i ⊗ ρ^C_i.
ThreeQubitState cq_state(const std::array<double, 2>& p,
                         const std::array<Mat2, 2>& bob,
                         const std::array<Mat2, 2>& charlie);

struct CqWitnessTerm {
  double weight;
  std::array<double, 4> alice;                 // p(a|x), index 2x+a
  std::array<double, 16> pair;                 // p(bc|yz), BipartiteBox layout
};

struct CqBoxResult {
  FloatBox box;
  // Two-term A|BC decomposition; present iff Alice measures the classical
  // (σz) basis on both inputs. Verified to reconstruct within 1e−12.
  std::optional<std::array<CqWitnessTerm, 2>> witness;
};

CqBoxResult cq_box_with_witness(const std::array<double, 2>& p,
                                const std::array<Mat2, 2>& bob,
                                const std::array<Mat2, 2>& charlie,
                                const MeasurementSettings& settings);

/// Qubit density matrix from a Bloch vector (length ≤ 1).
Mat2 qubit_state(const Bloch& n);

/// Round each probability to the nearest a + b√2 with denominators dividing
/// max_denominator, |a| ≤ 2, |b| ≤ 1. SnapFailure when an entry is farther
/// than `tolerance` from every candidate; InvalidSnapped when the snapped
/// table is not a valid nonsignaling box.
TripartiteBox snap_to_exact(const FloatBox& box, double tolerance,
                            long max_denominator = 32);

}  // namespace tribox
