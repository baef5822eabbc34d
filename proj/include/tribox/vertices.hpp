#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tribox/box.hpp"

namespace tribox {

/// Which two parties share the PR box in a 2-local vertex.
enum class Pairing : uint8_t { AB_C, AC_B, BC_A };
const char* pairing_name(Pairing p);  // "AB", "AC", "BC"

/// Label of an extreme box of the Svetlichny-box polytope R (and of the
/// Mermin boxes, which are midpoints of Svetlichny-box pairs):
///   Deterministic(α,β,γ,ε,ζ,η)  a=αx⊕β, b=γy⊕ε, c=ζz⊕η        (64)
///   TwoLocal(pairing, α,β,γ,ε)  PR^{αβγ} on the pair, D^{γε} lone (48)
///   Svetlichny(α,β,γ,ε)         a⊕b⊕c = xy⊕xz⊕yz⊕αx⊕βy⊕γz⊕ε   (16)
///   Mermin(α,β,γ,ε)             maximizer of Mermin inequality αβγε (16)
struct VertexLabel {
  enum class Kind : uint8_t { Deterministic, TwoLocal, Svetlichny, Mermin };

  Kind kind = Kind::Deterministic;
  Pairing pairing = Pairing::AB_C;  // TwoLocal only
  std::array<int, 6> bits{};        // 6 used for Deterministic, else 4

  static VertexLabel deterministic(int al, int be, int ga, int ep, int ze,
                                   int et) {
    return {Kind::Deterministic, Pairing::AB_C, {al, be, ga, ep, ze, et}};
  }
  static VertexLabel two_local(Pairing pr, int al, int be, int ga, int ep) {
    return {Kind::TwoLocal, pr, {al, be, ga, ep, 0, 0}};
  }
  static VertexLabel svetlichny(int al, int be, int ga, int ep) {
    return {Kind::Svetlichny, Pairing::AB_C, {al, be, ga, ep, 0, 0}};
  }
  static VertexLabel mermin(int al, int be, int ga, int ep) {
    return {Kind::Mermin, Pairing::AB_C, {al, be, ga, ep, 0, 0}};
  }

  std::string str() const;  // "D:000000", "L2:AB:0000", "Sv:0000", "M:1110"
  static VertexLabel parse(const std::string& s);

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend bool operator<(const VertexLabel& l, const VertexLabel& r) {
    return l.str() < r.str();
  }
};

TripartiteBox make_vertex(const VertexLabel& label);

/// PR box P_PR^{αβγ}(bc|yz): ½ on b⊕c = y·z ⊕ αy ⊕ βz ⊕ γ.
BipartiteBox pr_box(int al, int be, int ga);
/// Deterministic one-party box a = αx⊕β.
SingleBox deterministic_single(int al, int be);
/// Deterministic two-party box b = γy⊕ε, c = ζz⊕η.
BipartiteBox deterministic_pair(int ga, int ep, int ze, int et);

/// Vertex catalogs: the fully-local polytope L (64), the 2-local polytope
/// L₂ (64+48) and the Svetlichny-box polytope R (64+48+16).
const std::vector<VertexLabel>& vertices_L();
const std::vector<VertexLabel>& vertices_L2();
const std::vector<VertexLabel>& vertices_R();

/// The 16 Mermin boxes: mermin_box(α,β,γ,ε) is the unique equal mixture of
/// two Svetlichny boxes attaining Mermin inequality (α,β,γ,ε) at its
/// algebraic maximum 4.
const TripartiteBox& mermin_box(int al, int be, int ga, int ep);
TripartiteBox white_noise();
BipartiteBox white_noise_pair();

}  // namespace tribox
