#ifndef TORIC_TOOLS_CLI_HPP
#define TORIC_TOOLS_CLI_HPP

// Command dispatch for the `toric` executable. Every command prints one JSON
// report on stdout:
//
//   {"command": "...", "fingerprint": "<sha256 of the input fan or null>",
//    "payload": {...}, "elapsed_ms": <double>, "version": "..."}
//
// Exit codes: 0 computed, 1 a verification failed, 2 usage or input error.

#include <toric/certificate_io.hpp>
#include <toric/fingerprint.hpp>
#include <toric/toric.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace toric::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Input error reported with exit code 2.
class InputError : public ToricError {
 public:
  using ToricError::ToricError;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

/// SRC is `builtin:NAME` or a path to a fan document.
inline FanDocument load_source(const std::string& src) {
  const std::string prefix = "builtin:";
  if (src.rfind(prefix, 0) == 0) {
    try {
      return {builtin(src.substr(prefix.size())), std::nullopt};
    } catch (const FanError& e) {
      throw InputError(e.what());
    }
  }
  try {
    return parse_fan_document(read_file(src));
  } catch (const FanParseError& e) {
    throw InputError(src + ": " + e.what());
  }
}

inline TDivisor divisor_argument(const FanDocument& doc, const std::string& list) {
  TDivisor d;
  if (!list.empty()) {
    try {
      d = parse_divisor_list(list);
    } catch (const ToricError& e) {
      throw InputError(std::string("-d: ") + e.what());
    }
  } else if (doc.divisor) {
    d = *doc.divisor;
  } else {
    throw InputError("no divisor given (use -d or a \"divisor\" field in the fan document)");
  }
  if (d.size() != doc.fan.n_rays())
    throw InputError("divisor has " + std::to_string(d.size()) + " coefficients but the fan has " +
                     std::to_string(doc.fan.n_rays()) + " rays");
  return d;
}

inline json integers_to_json(const std::vector<Integer>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(integer_to_json(x));
  return arr;
}

inline json report_to_json(const FanReport& r) {
  return {{"valid", r.valid},         {"complete", r.complete},       {"smooth", r.smooth},
          {"simplicial", r.simplicial}, {"n_rays", r.n_rays},         {"n_max_cones", r.n_max_cones},
          {"n_walls", r.n_walls},     {"failures", r.failures}};
}

inline json group_to_json(const AbelianGroupSummary& g) {
  return {{"rank", g.rank}, {"torsion", integers_to_json(g.torsion)}};
}

inline json certificate_summary(const TrivialityCertificate& c) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses)
    witnesses.push_back({{"cone_rays", w.cone_rays},
                         {"external_ray", w.external_ray},
                         {"coefficients", rationals_to_json(w.coefficients)}});
  return {{"issued", true},
          {"witnesses", witnesses},
          {"multipliers", rationals_to_json(c.summation.multipliers)},
          {"zero_forced", c.summation.zero_forced},
          {"positively_spanning", c.positively_spanning},
          {"trivial", c.conclusion.trivial}};
}

struct Outcome {
  std::optional<std::string> fingerprint;
  json payload;
  int code = kOk;
};

/// Parses argv, runs one command and writes the report to `out`; diagnostics
/// go to `err`.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric fan and divisor toolkit", "toric"};
  app.require_subcommand(1);
  app.fallthrough();  // --pretty is accepted after the subcommand too
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON report");
  app.set_version_flag("--version", kVersion);

  std::string src, src2, ray, out_path, divisor, mode = "local";
  bool both = false;

  auto* fan = app.add_subcommand("fan", "Fan checks, subdivision and builtins");
  fan->require_subcommand(1);
  auto* fan_check = fan->add_subcommand("check", "Validity, completeness and smoothness report");
  fan_check->add_option("SRC", src, "Fan file or builtin:NAME")->required();
  auto* fan_sub = fan->add_subcommand("subdivide", "Stellar subdivision at a ray");
  fan_sub->add_option("SRC", src, "Fan file or builtin:NAME")->required();
  fan_sub->add_option("--ray", ray, "Primitive ray, comma separated")->required();
  fan_sub->add_option("-o,--output", out_path, "Write the subdivided fan here");
  auto* fan_builtin = fan->add_subcommand("builtin", "Builtin fans");
  fan_builtin->require_subcommand(1);
  auto* fan_builtin_list = fan_builtin->add_subcommand("list", "List builtin fan names");

  auto* div = app.add_subcommand("divisor", "Queries on a torus-invariant divisor");
  div->require_subcommand(1);
  auto add_div = [&](const std::string& name, const std::string& help) {
    auto* c = div->add_subcommand(name, help);
    c->add_option("SRC", src, "Fan file or builtin:NAME")->required();
    c->add_option("-d,--divisor", divisor, "Coefficients in ray order, comma separated");
    return c;
  };
  auto* div_nef = add_div("is-nef", "Nefness test");
  div_nef->add_option("--mode", mode, "local (wall test) or global (all rays)")
      ->check(CLI::IsMember({"local", "global"}));
  div_nef->add_flag("--both", both, "Run both modes and fail on disagreement");
  auto* div_cartier = add_div("is-cartier", "Cartier test with per-cone functionals");
  auto* div_eff = add_div("effective", "Effective representative of a nef divisor");
  auto* div_sec = add_div("sections", "Sections polytope");

  auto add_src = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("SRC", src, "Fan file or builtin:NAME")->required();
    return c;
  };
  auto* nef = add_src("nef-cone", "Nef cone of a complete simplicial fan");
  auto* cl = add_src("classgroup", "Divisor class group");
  auto* pic = add_src("picard", "Picard group");
  auto* cert = add_src("certify", "Certificate that the fan has no nontrivial nef line bundles");
  cert->add_option("-o,--output", out_path, "Write the certificate here");
  auto* verify = add_src("verify-certificate", "Independent check of a certificate");
  verify->add_option("CERT", src2, "Certificate file")->required();

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string command;
  for (const auto& a : argv) command += (command.empty() ? "" : " ") + a;
  const auto start = std::chrono::steady_clock::now();

  Outcome o;
  try {
    if (*fan_builtin_list) {
      o.payload = {{"builtins", builtin_names()}};
    } else {
      FanDocument doc = load_source(src);
      const Fan& f = doc.fan;
      o.fingerprint = fingerprint(f);
      if (*fan_check) {
        o.payload = report_to_json(check_fan(f));
      } else if (*fan_sub) {
        LatticeVector v;
        try {
          v = parse_vector_list(ray);
        } catch (const ToricError& e) {
          throw InputError(std::string("--ray: ") + e.what());
        }
        Fan g;
        try {
          g = stellar_subdivide(f, v);
        } catch (const FanError& e) {
          throw InputError(e.what());
        }
        if (!out_path.empty()) write_file(out_path, serialize_fan(g));
        o.payload = {{"n_rays", g.n_rays()},
                     {"n_max_cones", g.n_max_cones()},
                     {"result_fingerprint", fingerprint(g)},
                     {"fan", fan_to_json(g)}};
      } else if (*div_nef) {
        TDivisor d = divisor_argument(doc, divisor);
        if (!is_cartier(f, d)) throw InputError(NotCartierError(std::get<NotCartier>(cartier_data(f, d))).what());
        if (both) {
          bool local = is_nef(f, d, NefMode::Local);
          bool global = is_nef(f, d, NefMode::Global);
          o.payload = {{"nef", local}, {"local", local}, {"global", global}, {"agree", local == global}};
          if (local != global) o.code = kFailed;
        } else {
          o.payload = {{"nef", is_nef(f, d, mode == "global" ? NefMode::Global : NefMode::Local)}, {"mode", mode}};
        }
      } else if (*div_cartier) {
        TDivisor d = divisor_argument(doc, divisor);
        auto r = cartier_data(f, d);
        if (auto* w = std::get_if<NotCartier>(&r)) {
          o.payload = {{"cartier", false},
                       {"witness", {{"cone", w->cone}, {"cone_rays", f.max_cone(w->cone)}, {"reason", w->reason}}}};
        } else {
          json m = json::array();
          for (const auto& mk : std::get<CartierData>(r).m) m.push_back(rationals_to_json(mk));
          o.payload = {{"cartier", true}, {"m", m}};
        }
      } else if (*div_eff) {
        TDivisor d = divisor_argument(doc, divisor);
        if (!is_cartier(f, d)) throw InputError(NotCartierError(std::get<NotCartier>(cartier_data(f, d))).what());
        if (!is_nef(f, d, NefMode::Global)) throw InputError("divisor is not nef");
        auto rep = effective_representative(f, d);
        o.payload = {{"divisor", integers_to_json(rep.divisor.coeffs())}, {"m", vector_to_json(rep.m)}};
      } else if (*div_sec) {
        TDivisor d = divisor_argument(doc, divisor);
        auto sol = polytope_solve(sections_polytope(f, d));
        json verts = json::array();
        for (const auto& v : sol.vertices) verts.push_back(rationals_to_json(v));
        json rays = json::array();
        for (const auto& r : sol.recession_rays) rays.push_back(vector_to_json(r));
        json lin = json::array();
        for (const auto& l : sol.recession_lineality) lin.push_back(vector_to_json(l));
        o.payload = {{"empty", sol.empty},          {"bounded", sol.bounded},        {"dimension", sol.dimension},
                     {"vertices", verts},           {"recession_rays", rays},        {"recession_lineality", lin}};
      } else if (*nef) {
        if (!is_complete(f)) throw InputError("nef-cone needs a valid complete fan");
        NefConeResult r;
        try {
          r = nef_cone(f);
        } catch (const ToricError& e) {
          throw InputError(e.what());
        }
        json classes = json::array();
        for (const auto& c : r.extreme_classes) classes.push_back(vector_to_json(c));
        o.payload = {{"trivial", r.trivial},
                     {"lineality_dim", r.lineality_dim()},
                     {"extreme_classes", classes},
                     {"n_inequalities", r.cone.inequalities().size()}};
      } else if (*cl) {
        o.payload = group_to_json(class_group(f));
      } else if (*pic) {
        if (!is_complete(f)) throw InputError("picard needs a valid complete fan");
        o.payload = group_to_json(picard_group(f));
      } else if (*cert) {
        auto r = certify_trivial_nef(f);
        if (auto* c = std::get_if<TrivialityCertificate>(&r)) {
          o.payload = certificate_summary(*c);
          if (!out_path.empty()) write_file(out_path, serialize_certificate(*c));
        } else {
          const auto& fail = std::get<CertificateFailure>(r);
          o.payload = {{"issued", false}, {"step", fail.step}, {"reason", fail.reason}};
        }
      } else if (*verify) {
        TrivialityCertificate c;
        try {
          c = parse_certificate(read_file(src2));
        } catch (const CertificateParseError& e) {
          throw InputError(src2 + ": " + e.what());
        }
        auto v = verify_certificate(f, c);
        o.payload = {{"valid", v.ok}, {"reason", v.reason}};
        if (!v.ok) o.code = kFailed;
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ToricError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json report = {{"command", command},
                 {"fingerprint", o.fingerprint ? json(*o.fingerprint) : json(nullptr)},
                 {"payload", o.payload},
                 {"elapsed_ms", elapsed},
                 {"version", kVersion}};
  out << (pretty ? report.dump(2) : report.dump()) << "\n";
  return o.code;
}

}  // namespace toric::cli

#endif  // TORIC_TOOLS_CLI_HPP
