#include "tribox/io.hpp"

namespace tribox::io {

namespace {

std::string tri_key(int a, int b, int c, int x, int y, int z) {
  std::string k = "000|000";
  k[0] = '0' + a;
  k[1] = '0' + b;
  k[2] = '0' + c;
  k[4] = '0' + x;
  k[5] = '0' + y;
  k[6] = '0' + z;
  return k;
}

std::string bip_key(int b, int c, int y, int z) {
  std::string k = "00|00";
  k[0] = '0' + b;
  k[1] = '0' + c;
  k[3] = '0' + y;
  k[4] = '0' + z;
  return k;
}

int bit_at(const std::string& s, size_t i) {
  if (i >= s.size() || (s[i] != '0' && s[i] != '1'))
    throw ParseError("bad box entry key: " + s);
  return s[i] - '0';
}

const char* family_name(InequalityFamily f) {
  switch (f) {
    case InequalityFamily::Svetlichny:
      return "svetlichny";
    case InequalityFamily::Mermin:
      return "mermin";
    case InequalityFamily::CHSH:
    default:
      return "chsh";
  }
}

}  // namespace

json scalar_json(const Scalar& s) {
  return json{{"a", s.rat_part().str()}, {"b", s.sqrt2_part().str()}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rat(j.get<long>()));
  if (j.is_object()) {
    Rat a(0), b(0);
    if (j.contains("a")) a = Rat(j.at("a").get<std::string>());
    if (j.contains("b")) b = Rat(j.at("b").get<std::string>());
    return Scalar(a, b);
  }
  throw ParseError("bad scalar JSON: " + j.dump());
}

json to_json(const TripartiteBox& box) {
  json entries = json::object();
  for (int in = 0; in < 8; ++in)
    for (int o = 0; o < 8; ++o) {
      const Scalar& v = box.p[8 * in + o];
      if (v.is_zero()) continue;
      entries[tri_key(o >> 2 & 1, o >> 1 & 1, o & 1, in >> 2 & 1, in >> 1 & 1,
                      in & 1)] = scalar_json(v);
    }
  return json{{"parties", 3}, {"entries", entries}};
}

json to_json(const BipartiteBox& box) {
  json entries = json::object();
  for (int in = 0; in < 4; ++in)
    for (int o = 0; o < 4; ++o) {
      const Scalar& v = box.p[4 * in + o];
      if (v.is_zero()) continue;
      entries[bip_key(o >> 1 & 1, o & 1, in >> 1 & 1, in & 1)] =
          scalar_json(v);
    }
  return json{{"parties", 2}, {"entries", entries}};
}

json to_json(const FloatBox& box) {
  json entries = json::object();
  for (int in = 0; in < 8; ++in)
    for (int o = 0; o < 8; ++o)
      entries[tri_key(o >> 2 & 1, o >> 1 & 1, o & 1, in >> 2 & 1, in >> 1 & 1,
                      in & 1)] = box.p[8 * in + o];
  return json{{"parties", 3}, {"float", true}, {"entries", entries}};
}

TripartiteBox tripartite_from_json(const json& j) {
  if (j.value("parties", 0) != 3)
    throw ParseError("expected a tripartite box (parties = 3)");
  TripartiteBox box;
  for (const auto& [key, val] : j.at("entries").items()) {
    if (key.size() != 7 || key[3] != '|')
      throw ParseError("bad box entry key: " + key);
    box.at(bit_at(key, 0), bit_at(key, 1), bit_at(key, 2), bit_at(key, 4),
           bit_at(key, 5), bit_at(key, 6)) = scalar_from_json(val);
  }
  return box;
}

BipartiteBox bipartite_from_json(const json& j) {
  if (j.value("parties", 0) != 2)
    throw ParseError("expected a bipartite box (parties = 2)");
  BipartiteBox box;
  for (const auto& [key, val] : j.at("entries").items()) {
    if (key.size() != 5 || key[2] != '|')
      throw ParseError("bad box entry key: " + key);
    box.at(bit_at(key, 0), bit_at(key, 1), bit_at(key, 3), bit_at(key, 4)) =
        scalar_from_json(val);
  }
  return box;
}

AnyBox box_from_json(const json& j) {
  AnyBox out;
  int parties = j.value("parties", 0);
  if (parties == 3)
    out.tri = tripartite_from_json(j);
  else if (parties == 2)
    out.bip = bipartite_from_json(j);
  else
    throw ParseError("box JSON must declare parties = 2 or 3");
  return out;
}

json to_json(const std::vector<InequalityValue>& report) {
  json arr = json::array();
  for (const auto& iv : report) {
    std::string label;
    for (int i = 0; i < (iv.family == InequalityFamily::CHSH ? 3 : 4); ++i)
      label.push_back('0' + iv.label[i]);
    arr.push_back(json{{"family", family_name(iv.family)},
                       {"label", label},
                       {"value", scalar_json(iv.value)},
                       {"bound", iv.bound.str()},
                       {"algebraic_max", iv.algebraic_max.str()},
                       {"violated", iv.violates_local_bound},
                       {"at_max", iv.at_algebraic_max}});
  }
  return arr;
}

json to_json(const MembershipWitness& w) {
  json out{{"polytope", polytope_name(w.polytope)}, {"feasible", w.feasible}};
  if (w.feasible) {
    json weights = json::object();
    for (const auto& [label, weight] : w.weights)
      weights[label.str()] = weight.str();
    out["weights"] = weights;
  } else {
    json farkas = json::array();
    for (const auto& v : w.farkas) farkas.push_back(v.str());
    out["farkas"] = farkas;
  }
  return out;
}

json to_json(const MembershipReport& r) {
  return json{{"in_NS", r.in_ns},     {"in_R", r.in_r},
              {"in_L2", r.in_l2},     {"in_L", r.in_l},
              {"witness_L", to_json(r.witness_l)},
              {"witness_L2", to_json(r.witness_l2)},
              {"witness_R", to_json(r.witness_r)}};
}

json to_json(const StrengthReport& r) {
  json out{{"mu", r.mu.str()},
           {"nu", r.nu.str()},
           {"residual", to_json(r.residual)},
           {"method", r.method == StrengthMethod::LP ? "lp" : "formula"},
           {"consistent", r.consistent}};
  if (r.dominant_sv) out["dominant_sv"] = r.dominant_sv->str();
  if (r.dominant_mermin) out["dominant_mermin"] = r.dominant_mermin->str();
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

namespace {

json single_to_json(const SingleBox& s) {
  json out = json::object();
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x) {
      std::string k = "0|0";
      k[0] = '0' + a;
      k[2] = '0' + x;
      out[k] = s.at(a, x).str();
    }
  return out;
}

SingleBox single_from_json(const json& j) {
  SingleBox s;
  for (const auto& [key, val] : j.items()) {
    if (key.size() != 3 || key[1] != '|')
      throw ParseError("bad single-box key: " + key);
    s.at(bit_at(key, 0), bit_at(key, 2)) =
        Scalar::parse(val.get<std::string>());
  }
  return s;
}

json pair_to_json(const BipartiteBox& b) {
  json out = json::object();
  for (int in = 0; in < 4; ++in)
    for (int o = 0; o < 4; ++o) {
      const Scalar& v = b.p[4 * in + o];
      if (v.is_zero()) continue;
      out[bip_key(o >> 1 & 1, o & 1, in >> 1 & 1, in & 1)] = v.str();
    }
  return out;
}

BipartiteBox pair_from_json(const json& j) {
  BipartiteBox b;
  for (const auto& [key, val] : j.items()) {
    if (key.size() != 5 || key[2] != '|')
      throw ParseError("bad pair-box key: " + key);
    b.at(bit_at(key, 0), bit_at(key, 1), bit_at(key, 3), bit_at(key, 4)) =
        Scalar::parse(val.get<std::string>());
  }
  return b;
}

Cut cut_from_name(const std::string& s) {
  for (Cut c : kAllCuts)
    if (s == cut_name(c)) return c;
  throw ParseError("bad cut name: " + s);
}

PairClass pair_class_from_name(const std::string& s) {
  for (PairClass c :
       {PairClass::Local, PairClass::NS, PairClass::Unconstrained})
    if (s == pair_class_name(c)) return c;
  throw ParseError("bad pair class: " + s);
}

}  // namespace

json to_json(const SublocalDecomposition& dec) {
  json terms = json::array();
  for (const auto& t : dec.terms)
    terms.push_back(json{{"weight", t.weight.str()},
                         {"single", single_to_json(t.single)},
                         {"pair", pair_to_json(t.pair)}});
  return json{{"cut", cut_name(dec.cut)},
              {"pair_class", pair_class_name(dec.pair_class)},
              {"terms", terms},
              {"d_lambda", dec.dimension()}};
}

SublocalDecomposition sublocal_from_json(const json& j) {
  SublocalDecomposition dec;
  dec.cut = cut_from_name(j.at("cut").get<std::string>());
  dec.pair_class = pair_class_from_name(j.at("pair_class").get<std::string>());
  for (const auto& t : j.at("terms")) {
    SublocalTerm term;
    term.weight = Scalar::parse(t.at("weight").get<std::string>());
    term.single = single_from_json(t.at("single"));
    term.pair = pair_from_json(t.at("pair"));
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

json to_json(const BipartiteDecomposition& dec) {
  json terms = json::array();
  for (const auto& t : dec.terms)
    terms.push_back(json{{"weight", t.weight.str()},
                         {"left", single_to_json(t.left)},
                         {"right", single_to_json(t.right)}});
  return json{{"parties", 2}, {"terms", terms}, {"d_lambda", dec.dimension()}};
}

BipartiteDecomposition bipartite_decomposition_from_json(const json& j) {
  BipartiteDecomposition dec;
  for (const auto& t : j.at("terms")) {
    BipartiteTerm term;
    term.weight = Scalar::parse(t.at("weight").get<std::string>());
    term.left = single_from_json(t.at("left"));
    term.right = single_from_json(t.at("right"));
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

MembershipWitness membership_witness_from_json(const json& j) {
  MembershipWitness w;
  std::string pname = j.at("polytope").get<std::string>();
  if (pname == "L")
    w.polytope = Polytope::L;
  else if (pname == "L2")
    w.polytope = Polytope::L2;
  else if (pname == "R")
    w.polytope = Polytope::R;
  else
    throw ParseError("bad polytope name: " + pname);
  w.feasible = j.at("feasible").get<bool>();
  if (w.feasible) {
    for (const auto& [key, val] : j.at("weights").items())
      w.weights[VertexLabel::parse(key)] =
          Scalar::parse(val.get<std::string>());
  } else {
    for (const auto& v : j.at("farkas"))
      w.farkas.push_back(Scalar::parse(v.get<std::string>()));
  }
  return w;
}

json to_json(const Verdict& v, Cut cut) {
  json out{{"cut", cut_name(cut)}, {"status", verdict_status_name(v.status)}};
  if (v.certificate)
    out["certificate"] = json{{"rank", v.certificate->flattening_rank},
                              {"d", v.certificate->local_dim}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

json to_json(const GenuineReport& r, int d) {
  json cuts = json::array();
  for (size_t i = 0; i < kAllCuts.size(); ++i)
    cuts.push_back(to_json(r.per_cut[i], kAllCuts[i]));
  return json{{"d", d},
              {"genuine", r.genuine},
              {"absolute", r.absolute},
              {"cuts", cuts}};
}

json to_json(const BipartiteVerdict& v, int d) {
  json out{{"parties", 2},
           {"d", d},
           {"status", verdict_status_name(v.status)}};
  if (v.certificate)
    out["certificate"] = json{{"rank", v.certificate->flattening_rank},
                              {"d", v.certificate->local_dim}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

bool verify_json(const json& witness, const json& boxj) {
  AnyBox any = box_from_json(boxj);

  // Membership witness or Farkas certificate.
  if (witness.contains("polytope")) {
    if (!any.tri) return false;
    MembershipWitness w = membership_witness_from_json(witness);
    return verify_witness(w, *any.tri);
  }
  // Rank certificate (possibly wrapped in a verdict).
  if (witness.contains("certificate") || witness.contains("rank")) {
    const json& cert =
        witness.contains("certificate") ? witness.at("certificate") : witness;
    int claimed = cert.at("rank").get<int>();
    int d = cert.at("d").get<int>();
    int actual;
    if (any.tri) {
      std::string cname = witness.value("cut", "A|BC");
      actual = rank_lower_bound(*any.tri, cut_from_name(cname));
    } else {
      actual = rank_lower_bound(*any.bip);
    }
    bool superlocal_claim = witness.value("status", "superlocal") ==
                            std::string("superlocal");
    return actual == claimed && (!superlocal_claim || actual > d);
  }
  // Sublocal decomposition (tripartite) or witness wrapped in a verdict.
  if (witness.contains("witness"))
    return verify_json(witness.at("witness"), boxj);
  if (witness.contains("terms") && witness.contains("cut")) {
    if (!any.tri) return false;
    return verify_decomposition(sublocal_from_json(witness), *any.tri);
  }
  if (witness.contains("terms")) {
    if (!any.bip) return false;
    return verify_decomposition(bipartite_decomposition_from_json(witness),
                                *any.bip);
  }
  // Strength report: mixture identity plus canonical residual.
  if (witness.contains("mu") && witness.contains("residual")) {
    if (!any.tri) return false;
    Scalar mu = Scalar::parse(witness.at("mu").get<std::string>());
    Scalar nu = Scalar::parse(witness.at("nu").get<std::string>());
    TripartiteBox residual = tripartite_from_json(witness.at("residual"));
    TripartiteBox sum;
    Scalar rest = Scalar(1) - mu - nu;
    if (mu.sign() < 0 || nu.sign() < 0 || rest.sign() < 0) return false;
    for (int e = 0; e < 64; ++e) sum.p[e] = rest * residual.p[e];
    if (witness.contains("dominant_sv")) {
      TripartiteBox v = make_vertex(
          VertexLabel::parse(witness.at("dominant_sv").get<std::string>()));
      for (int e = 0; e < 64; ++e) sum.p[e] += mu * v.p[e];
    } else if (mu.sign() != 0) {
      return false;
    }
    if (witness.contains("dominant_mermin")) {
      TripartiteBox v = make_vertex(VertexLabel::parse(
          witness.at("dominant_mermin").get<std::string>()));
      for (int e = 0; e < 64; ++e) sum.p[e] += nu * v.p[e];
    } else if (nu.sign() != 0) {
      return false;
    }
    return sum == *any.tri && g_quantity(residual) == Scalar(0) &&
           q_quantity(residual) == Scalar(0);
  }
  throw ParseError("unrecognized witness JSON");
}

ThreeQubitState state_from_json(const json& j) {
  auto cplx = [](const json& v) {
    if (v.is_number()) return Cplx(v.get<double>(), 0);
    return Cplx(v.at(0).get<double>(), v.at(1).get<double>());
  };
  if (j.contains("amplitudes")) {
    const auto& arr = j.at("amplitudes");
    if (arr.size() != 8) throw ParseError("state needs 8 amplitudes");
    Amplitudes a;
    for (int i = 0; i < 8; ++i) a[i] = cplx(arr.at(i));
    return ThreeQubitState::pure(a);
  }
  if (j.contains("density")) {
    const auto& rows = j.at("density");
    if (rows.size() != 8) throw ParseError("density matrix must be 8×8");
    Mat8 rho;
    for (int i = 0; i < 8; ++i) {
      if (rows.at(i).size() != 8) throw ParseError("density matrix must be 8×8");
      for (int k = 0; k < 8; ++k) rho[8 * i + k] = cplx(rows.at(i).at(k));
    }
    return ThreeQubitState::mixed(rho);
  }
  throw ParseError("state JSON needs 'amplitudes' or 'density'");
}

MeasurementSettings settings_from_json(const json& j) {
  MeasurementSettings m;
  const char* names[3] = {"A", "B", "C"};
  for (int party = 0; party < 3; ++party) {
    const auto& arr = j.at(names[party]);
    if (arr.size() != 2) throw ParseError("each party needs 2 settings");
    for (int in = 0; in < 2; ++in) {
      const auto& v = arr.at(in);
      if (v.size() != 3) throw ParseError("Bloch vectors have 3 components");
      m.dir[party][in] = {v.at(0).get<double>(), v.at(1).get<double>(),
                          v.at(2).get<double>()};
    }
  }
  return m;
}

}  // namespace tribox::io
