#pragma once

#include <json.hpp>

#include "tribox/inequalities.hpp"
#include "tribox/membership.hpp"
#include "tribox/quantum.hpp"
#include "tribox/strengths.hpp"
#include "tribox/superlocality.hpp"

namespace tribox::io {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

/// Box files: {"parties":3, "entries":{"abc|xyz": {"a":"p/q","b":"r/s"}}}.
/// Zero entries are omitted; omitted entries default to 0. Keys are
/// outcomes|inputs bit-strings. The bipartite analog uses "bc|yz" keys.
json to_json(const TripartiteBox& box);
json to_json(const BipartiteBox& box);
/// FloatBox entries are plain doubles under the same keys.
json to_json(const FloatBox& box);

TripartiteBox tripartite_from_json(const json& j);
BipartiteBox bipartite_from_json(const json& j);

struct AnyBox {
  std::optional<TripartiteBox> tri;
  std::optional<BipartiteBox> bip;
};
AnyBox box_from_json(const json& j);

json scalar_json(const Scalar& s);            // {"a":"p/q","b":"r/s"}
Scalar scalar_from_json(const json& j);       // object or "p/q+r/s*sqrt2"

json to_json(const std::vector<InequalityValue>& report);
json to_json(const MembershipWitness& w);
json to_json(const MembershipReport& r);
json to_json(const StrengthReport& r);
json to_json(const SublocalDecomposition& dec);
json to_json(const Verdict& v, Cut cut);
json to_json(const GenuineReport& r, int d);
json to_json(const BipartiteDecomposition& dec);
json to_json(const BipartiteVerdict& v, int d);

SublocalDecomposition sublocal_from_json(const json& j);
BipartiteDecomposition bipartite_decomposition_from_json(const json& j);
MembershipWitness membership_witness_from_json(const json& j);

/// Third-party certificate checking: re-validates any witness/report
/// produced by this library against a box using arithmetic only
/// (mixture reconstruction, separation dot products, rank recomputation).
/// Returns true iff the witness exactly validates.
bool verify_json(const json& witness, const json& box);

/// Quantum inputs: state JSON (amplitudes or density matrix as [re, im]
/// pairs) and settings JSON (Bloch triples per party per input).
ThreeQubitState state_from_json(const json& j);
MeasurementSettings settings_from_json(const json& j);

}  // namespace tribox::io
