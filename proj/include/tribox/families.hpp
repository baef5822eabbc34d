#pragma once

#include "tribox/box.hpp"

namespace tribox {

struct ParamRangeError : BoxError {
  explicit ParamRangeError(const std::string& what) : BoxError(what) {}
};

/// Svetlichny family: p(abc|xyz) = (2 + (−1)^{a⊕b⊕c⊕xy⊕xz⊕yz}·√2μ)/16,
/// 0 < μ ≤ 1. Equals (μ/√2)·Sv(0,0,0,0) + (1−μ/√2)·white noise.
TripartiteBox svetlichny_family(const Scalar& mu);

/// Mermin family: p(abc|xyz) = (1 + (−1)^{a⊕b⊕c⊕xy⊕xz⊕yz}·[x⊕y=z]·ν)/8,
/// 0 < ν ≤ 1. Equals ν·mermin_box(1,1,1,0) + (1−ν)·white noise.
TripartiteBox mermin_family(const Scalar& nu);

/// BB84 family: p(bc|yz) = (1 + (−1)^{b⊕c⊕yz}·δ_{y,z}·V)/4, 0 < V ≤ 1.
BipartiteBox bb84_family(const Scalar& v);

/// CHSH family: p(bc|yz) = (2 + (−1)^{b⊕c⊕yz}·√2V)/8, 0 < V ≤ 1.
BipartiteBox chsh_family(const Scalar& v);

}  // namespace tribox
