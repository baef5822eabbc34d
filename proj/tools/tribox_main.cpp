#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tribox/families.hpp"
#include "tribox/io.hpp"

namespace {

using tribox::Scalar;
using json = tribox::io::json;

json read_json(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw tribox::ParseError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw tribox::ParseError("cannot open " + out_path);
  out << j.dump(2) << "\n";
}

// Accepts "pi/4", "3*pi/16" or a plain floating-point value.
double parse_angle(const std::string& s) {
  auto pos = s.find("pi");
  if (pos == std::string::npos) return std::stod(s);
  double mult = 1.0;
  if (pos > 0) {
    std::string head = s.substr(0, pos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (head == "-")
      mult = -1;
    else if (!head.empty())
      mult = std::stod(head);
  }
  double div = 1.0;
  std::string tail = s.substr(pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw tribox::ParseError("bad angle: " + s);
    div = std::stod(tail.substr(1));
  }
  return mult * M_PI / div;
}

tribox::Cut parse_cut(const std::string& s) {
  for (tribox::Cut c : tribox::kAllCuts)
    if (s == tribox::cut_name(c)) return c;
  throw tribox::ParseError("bad cut (use A|BC, B|AC or C|AB): " + s);
}

int run(int argc, char** argv) {
  CLI::App app{"exact analysis of tripartite nonsignaling boxes"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "human-readable summary on stderr");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named box");
  std::string family, param_str, vertex_str, gen_out;
  gen->add_option("--family", family, "svf | mf | noise | bb84 | chshfam");
  gen->add_option("--param", param_str,
                  "exact parameter, e.g. 1/2 or 0+1/2*sqrt2");
  gen->add_option("--vertex", vertex_str,
                  "vertex label, e.g. D:000000, L2:AB:0000, Sv:0000, M:1110");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "inequality values of a box");
  std::string eval_in;
  eval->add_option("--in", eval_in, "box JSON path or -")->required();

  // membership
  auto* member = app.add_subcommand("membership", "polytope membership");
  std::string member_in, member_poly = "all";
  member->add_option("--in", member_in)->required();
  member->add_option("--polytope", member_poly, "L | L2 | R | all");

  // strength
  auto* strength = app.add_subcommand("strength", "canonical decomposition");
  std::string strength_in;
  strength->add_option("--in", strength_in)->required();

  // superlocal
  auto* super = app.add_subcommand("superlocal", "superlocality verdicts");
  std::string super_in, super_cut, super_class = "ns";
  int super_d = 2;
  super->add_option("--in", super_in)->required();
  super->add_option("--d", super_d, "local dimension bound (default 2)");
  super->add_option("--cut", super_cut, "single cut (default: all three)");
  super->add_option("--pair-class", super_class,
                    "local | ns | unconstrained (witness search class)");

  // quantum
  auto* quantum = app.add_subcommand("quantum", "boxes from three-qubit states");
  std::string gghz_str, preset_str, state_file, settings_file, quantum_out;
  bool emit_float = false;
  double snap_tol = 1e-9;
  long snap_den = 32;
  quantum->add_option("--gghz", gghz_str, "GGHZ angle, e.g. pi/4");
  quantum->add_option("--preset", preset_str, "svetlichny | mermin");
  quantum->add_option("--state-file", state_file, "state JSON path");
  quantum->add_option("--settings-file", settings_file, "settings JSON path");
  quantum->add_flag("--float", emit_float, "emit the float box, no snapping");
  quantum->add_option("--snap-tolerance", snap_tol);
  quantum->add_option("--snap-denominator", snap_den);
  quantum->add_option("--out", quantum_out);

  // verify
  auto* verify = app.add_subcommand("verify", "check a witness against a box");
  std::string verify_witness, verify_box;
  verify->add_option("--witness", verify_witness)->required();
  verify->add_option("--box", verify_box)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // message to stderr
    return 2;
  }

  if (gen->parsed()) {
    if (!vertex_str.empty()) {
      emit(tribox::io::to_json(
               tribox::make_vertex(tribox::VertexLabel::parse(vertex_str))),
           gen_out);
      return 0;
    }
    if (family == "noise") {
      emit(tribox::io::to_json(tribox::white_noise()), gen_out);
      return 0;
    }
    if (family.empty()) throw tribox::ParseError("gen needs --family or --vertex");
    Scalar param = Scalar::parse(param_str.empty() ? "1" : param_str);
    if (family == "svf")
      emit(tribox::io::to_json(tribox::svetlichny_family(param)), gen_out);
    else if (family == "mf")
      emit(tribox::io::to_json(tribox::mermin_family(param)), gen_out);
    else if (family == "bb84")
      emit(tribox::io::to_json(tribox::bb84_family(param)), gen_out);
    else if (family == "chshfam")
      emit(tribox::io::to_json(tribox::chsh_family(param)), gen_out);
    else
      throw tribox::ParseError("unknown family: " + family);
    return 0;
  }

  if (eval->parsed()) {
    auto any = tribox::io::box_from_json(read_json(eval_in));
    json rep = any.tri ? tribox::io::to_json(tribox::violation_report(*any.tri))
                       : tribox::io::to_json(tribox::violation_report(*any.bip));
    emit(rep, "");
    return 0;
  }

  if (member->parsed()) {
    auto box = tribox::io::tripartite_from_json(read_json(member_in));
    if (member_poly == "all") {
      auto rep = tribox::membership_report(box);
      if (verbose)
        std::cerr << "in_L=" << rep.in_l << " in_L2=" << rep.in_l2
                  << " in_R=" << rep.in_r << " in_NS=" << rep.in_ns << "\n";
      emit(tribox::io::to_json(rep), "");
      return 0;
    }
    tribox::Polytope p;
    if (member_poly == "L")
      p = tribox::Polytope::L;
    else if (member_poly == "L2")
      p = tribox::Polytope::L2;
    else if (member_poly == "R")
      p = tribox::Polytope::R;
    else
      throw tribox::ParseError("bad polytope: " + member_poly);
    emit(tribox::io::to_json(tribox::lp_feasible(box, p)), "");
    return 0;
  }

  if (strength->parsed()) {
    auto box = tribox::io::tripartite_from_json(read_json(strength_in));
    auto rep = tribox::strength_lp(box);
    if (verbose)
      std::cerr << "mu=" << rep.mu.str() << " nu=" << rep.nu.str() << "\n";
    emit(tribox::io::to_json(rep), "");
    return 0;
  }

  if (super->parsed()) {
    auto any = tribox::io::box_from_json(read_json(super_in));
    if (any.bip) {
      emit(tribox::io::to_json(tribox::bipartite_verdict(*any.bip, super_d),
                               super_d),
           "");
      return 0;
    }
    if (!super_cut.empty()) {
      tribox::Cut cut = parse_cut(super_cut);
      auto v = tribox::superlocality_verdict(*any.tri, cut, super_d);
      emit(tribox::io::to_json(v, cut), "");
      return 0;
    }
    auto rep = tribox::genuine_report(*any.tri, super_d);
    if (verbose)
      std::cerr << "genuine=" << rep.genuine << " absolute=" << rep.absolute
                << "\n";
    emit(tribox::io::to_json(rep, super_d), "");
    return 0;
  }

  if (quantum->parsed()) {
    tribox::ThreeQubitState state = [&] {
      if (!state_file.empty())
        return tribox::io::state_from_json(read_json(state_file));
      if (gghz_str.empty())
        throw tribox::ParseError("quantum needs --gghz or --state-file");
      return tribox::gghz_state(parse_angle(gghz_str));
    }();
    tribox::MeasurementSettings settings = [&] {
      if (!settings_file.empty())
        return tribox::io::settings_from_json(read_json(settings_file));
      if (preset_str == "svetlichny")
        return tribox::preset_settings(tribox::PresetKind::Svetlichny);
      if (preset_str == "mermin")
        return tribox::preset_settings(tribox::PresetKind::Mermin);
      throw tribox::ParseError("quantum needs --preset or --settings-file");
    }();
    tribox::FloatBox fbox = tribox::born_box(state, settings);
    if (emit_float) {
      emit(tribox::io::to_json(fbox), quantum_out);
      return 0;
    }
    emit(tribox::io::to_json(tribox::snap_to_exact(fbox, snap_tol, snap_den)),
         quantum_out);
    return 0;
  }

  if (verify->parsed()) {
    bool ok =
        tribox::io::verify_json(read_json(verify_witness), read_json(verify_box));
    if (verbose) std::cerr << (ok ? "witness ok" : "witness invalid") << "\n";
    return ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const tribox::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tribox::BoxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
