#include "eqc/cli.hpp"

#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "eqc/caps.hpp"
#include "eqc/errors.hpp"

namespace eqc {

using jsonio::json;

namespace {

constexpr const char* kVersion = "eqc 0.1.0";
const std::string kP = "/payload";

json subgroup_list_json(const std::vector<Subgroup>& subs) {
  json out = json::array();
  for (const auto& s : subs) out.push_back(jsonio::subgroup_to_json(s));
  return out;
}

json eta_to_json(const EtaBundle& el) {
  json out;
  out["bundle"] = jsonio::bundle_to_json(el.bundle);
  json sig = json::array();
  for (const auto& h : el.sigmas) sig.push_back(jsonio::hom_to_json(h));
  out["sigmas"] = std::move(sig);
  out["base_sigma"] = el.base_sigma;
  out["base_point"] = el.base_point;
  out["fiber_orbit"] = el.fiber_orbit;
  return out;
}

json membership_json(const Membership& m) {
  json out;
  out["ok"] = m.ok;
  out["reasons"] = m.reasons;
  return out;
}

json acyc_result(const AcycData& d) {
  json out;
  out["acyc"] = jsonio::acyc_to_json(d);
  return out;
}

GroupRef payload_group(const json& payload, const char* key) {
  return jsonio::group_from_json(jsonio::need(payload, key, kP),
                                 kP + "/" + key);
}

int payload_int(const json& payload, const char* key) {
  return jsonio::need_int(payload, key, kP);
}

int payload_int_or(const json& payload, const char* key, int fallback) {
  if (!payload.contains(key)) return fallback;
  return jsonio::need_int(payload, key, kP);
}

BundleData payload_bundle(const json& payload, const char* key) {
  return jsonio::bundle_from_json(jsonio::need(payload, key, kP),
                                  kP + "/" + key);
}

Subgroup payload_subgroup(const json& payload, const char* key,
                          const GroupRef& parent) {
  return jsonio::subgroup_from_json(parent, jsonio::need(payload, key, kP),
                                    kP + "/" + key);
}

WreathHom payload_wreath_hom(const json& payload, const char* key) {
  return jsonio::wreath_hom_from_json(jsonio::need(payload, key, kP),
                                      kP + "/" + key);
}

json run_group(const std::string& op, const json& payload) {
  json out;
  if (op == "subgroups") {
    auto subs = enumerate_subgroups(payload_group(payload, "group"));
    out["count"] = subs.size();
    out["subgroups"] = subgroup_list_json(subs);
    return out;
  }
  if (op == "classes") {
    auto classes = subgroup_conjugacy_classes(payload_group(payload, "group"));
    out["count"] = classes.size();
    json arr = json::array();
    for (const auto& cls : classes) arr.push_back(subgroup_list_json(cls));
    out["classes"] = std::move(arr);
    return out;
  }
  if (op == "weyl") {
    GroupRef g = payload_group(payload, "group");
    auto w = weyl_group(payload_subgroup(payload, "subgroup", g));
    out["normalizer"] = jsonio::subgroup_to_json(w.normalizer);
    out["weyl"] = jsonio::group_to_json(w.quotient);
    out["cosets"] = w.cosets;
    out["projection"] = jsonio::hom_to_json(w.projection);
    return out;
  }
  if (op == "homs") {
    auto homs = enumerate_homs(payload_group(payload, "src"),
                               payload_group(payload, "dst"));
    out["count"] = homs.size();
    json arr = json::array();
    for (const auto& h : homs) arr.push_back(jsonio::hom_to_json(h));
    out["homs"] = std::move(arr);
    out["classes"] = hom_conjugacy_classes(homs);
    return out;
  }
  throw ValidationError("unknown group operation: " + op);
}

json run_twisted(const std::string& op, const json& payload) {
  BiSet x = jsonio::biset_from_json(jsonio::need(payload, "x", kP), kP + "/x");
  WreathHom sigma = payload_wreath_hom(payload, "sigma");
  json out;
  if (op == "decompose") {
    auto dec = decompose(sigma);
    out["orbits"] = dec.orbits;
    out["reps"] = dec.rep;
    json stabs = json::array();
    for (const auto& s : dec.stabilizer)
      stabs.push_back(jsonio::subgroup_to_json(s));
    out["stabilizers"] = std::move(stabs);
    out["transporter"] = dec.transporter;
    out["orbit_of"] = dec.orbit_of;
    return out;
  }
  if (op == "fix-dim") {
    int dim = twisted_fixed_dim(x, sigma);
    int oracle = brute_force_twisted_fixed(x, sigma);
    out["dim"] = dim;
    out["brute_force"] = oracle;
    out["agree"] = dim == oracle;
    return out;
  }
  if (op == "basis") {
    auto basis = twisted_fixed_basis(x, sigma);
    out["ambient_dim"] = basis.ambient_dim;
    out["vectors"] = basis.vectors;
    out["sqnorm"] = basis.sqnorm;
    return out;
  }
  throw ValidationError("unknown twisted operation: " + op);
}

json run_bundle(const std::string& op, const json& payload) {
  json out;
  if (op == "product") {
    BundleData a = payload_bundle(payload, "a");
    BundleData b = payload_bundle(payload, "b");
    out["bundle"] = jsonio::bundle_to_json(bundle_product(a, b));
    return out;
  }
  BundleData b = payload_bundle(payload, "bundle");
  if (op == "check-faithful") {
    auto rep = is_q_faithful(b);
    out["faithful"] = rep.faithful;
    out["witness_base_point"] =
        rep.witness_base_point ? json(*rep.witness_base_point) : json(nullptr);
    out["witness_q_element"] =
        rep.witness_q_element ? json(*rep.witness_q_element) : json(nullptr);
    return out;
  }
  if (op == "sym") {
    int q = payload_int(payload, "q");
    Subgroup sym = payload.contains("sym")
                       ? jsonio::subgroup_from_json(
                             FinGroup::symmetric(q), payload.at("sym"),
                             kP + "/sym")
                       : whole_group(FinGroup::symmetric(q));
    out["bundle"] = jsonio::bundle_to_json(sym_power(b, q, sym));
    return out;
  }
  if (op == "eta-lambda")
    return eta_to_json(eta_lambda(b, payload_subgroup(payload, "lambda", b.gamma)));
  if (op == "eta-lambda-rel")
    return eta_to_json(eta_lambda_rel(
        b, payload_subgroup(payload, "lambda", b.gamma),
        payload_subgroup(payload, "k", b.gamma)));
  if (op == "iterphi") {
    auto wit = iterphi_bundle_iso(b, payload_subgroup(payload, "k", b.gamma),
                                  payload_subgroup(payload, "lambda", b.gamma),
                                  payload_subgroup(payload, "m", b.gamma));
    out["isomorphic"] = wit.isomorphic;
    out["base_map"] = wit.base_map;
    out["fiber_map"] = wit.fiber_map;
    return out;
  }
  if (op == "ifcrit") {
    auto rep = ifcrit_check(b, payload_subgroup(payload, "lambda", b.gamma));
    out["cond_i"] = rep.cond_i;
    out["cond_ii"] = rep.cond_ii;
    out["cond_iii"] = rep.cond_iii;
    out["all"] = rep.all();
    out["detail"] = rep.detail;
    return out;
  }
  throw ValidationError("unknown bundle operation: " + op);
}

json run_acyc(const std::string& op, const json& payload) {
  json out;
  if (op == "smash") {
    AcycData a = jsonio::acyc_from_json(jsonio::need(payload, "a", kP),
                                        kP + "/a");
    AcycData b = jsonio::acyc_from_json(jsonio::need(payload, "b", kP),
                                        kP + "/b");
    return acyc_result(smash(a, b));
  }
  if (op == "validate") {
    AcycData d = jsonio::acyc_from_json(jsonio::need(payload, "acyc", kP),
                                        kP + "/acyc", false);
    auto violations = acyc_validate(d);
    out["ok"] = violations.empty();
    out["violations"] = violations;
    return out;
  }
  AcycData d =
      jsonio::acyc_from_json(jsonio::need(payload, "acyc", kP), kP + "/acyc");
  if (op == "member") {
    if (payload.contains("p"))
      return membership_json(in_D_ACyc_p(d, payload_int(payload, "p")));
    return membership_json(in_D_ACyc(d));
  }
  if (op == "stretch") {
    auto res = stretch(d, payload_int(payload, "k"));
    out = acyc_result(res.data);
    out["hom_bijection"] = res.hom_bijection;
    return out;
  }
  if (op == "phi") {
    auto res = phi(d, payload_int(payload, "k"));
    out = acyc_result(res.data);
    out["restriction"] = res.restriction;
    return out;
  }
  if (op == "sym") return acyc_result(sym(d, payload_int(payload, "k")));
  if (op == "free") return acyc_result(free_smash(d));
  if (op == "catalog") {
    auto cat = component_catalog(d);
    json sig = json::array();
    for (const auto& h : cat.sigmas) sig.push_back(jsonio::hom_to_json(h));
    out["sigmas"] = std::move(sig);
    json entries = json::array();
    for (const auto& e : cat.entries) {
      json je;
      je["sigma"] = e.sigma;
      je["base_empty"] = e.base_empty;
      je["circles"] = e.circles;
      je["factor_dims"] = e.factor_dims;
      je["fiber_dim"] = e.fiber_dim;
      entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    out["sigma_action"] = cat.sigma_action;
    return out;
  }
  if (op == "shadow") {
    out["faithful"] = faithfulness_shadow(d, payload_int_or(payload, "kmax", 2));
    return out;
  }
  throw ValidationError("unknown acyc operation: " + op);
}

json run_geosym(const std::string& op, const json& payload) {
  json out;
  if (op == "centralizer") {
    auto cent = centralizer(payload_wreath_hom(payload, "sigma"));
    out["order"] = cent.size();
    json elems = json::array();
    for (const auto& x : cent) elems.push_back(jsonio::wreath_elem_to_json(x));
    out["elements"] = std::move(elems);
    return out;
  }
  GroupRef lambda = payload_group(payload, "lambda");
  GroupRef q = payload_group(payload, "q");
  if (op == "catalog") {
    auto cat = irreducible_catalog(lambda, q);
    out["t"] = cat.t;
    json taus = json::array();
    for (const auto& tau : cat.taus)
      taus.push_back(jsonio::wreath_hom_to_json(tau));
    out["taus"] = std::move(taus);
    return out;
  }
  if (op == "classify") {
    auto cat = irreducible_catalog(lambda, q);
    auto dec = classify(cat, payload_wreath_hom(payload, "sigma"));
    out["n"] = dec.n;
    out["conjugator"] = jsonio::wreath_elem_to_json(dec.conjugator);
    return out;
  }
  if (op == "identity") {
    auto id = hom_count_identity(lambda, q, payload_int(payload, "card"));
    out["lhs"] = id.lhs;
    out["rhs"] = id.rhs;
    out["terms"] = id.terms;
    out["holds"] = id.holds;
    return out;
  }
  throw ValidationError("unknown geosym operation: " + op);
}

json run_tomdieck(const std::string& op, const json& payload) {
  json out;
  if (op == "aut") {
    auto rep = aut_gset(jsonio::biset_from_json(
        jsonio::need(payload, "gset", kP), kP + "/gset"));
    out["order"] = rep.aut->order();
    out["formula_order"] = rep.formula_order;
    out["orbit_type"] = rep.orbit_type;
    out["verified"] = rep.verified;
    return out;
  }
  GroupRef g = payload_group(payload, "group");
  if (op == "classes") {
    auto classes = gset_iso_classes(g, payload_int(payload, "q"));
    out["count"] = classes.size();
    json arr = json::array();
    for (const auto& cls : classes) {
      json jc;
      jc["q"] = cls.q;
      jc["orbit_type"] = cls.orbit_type;
      jc["rep"] = jsonio::biset_to_json(cls.rep);
      arr.push_back(std::move(jc));
    }
    out["classes"] = std::move(arr);
    return out;
  }
  if (op == "catalog") {
    auto cat = splitting_catalog(g, payload_int(payload, "m"),
                                 payload_int_or(payload, "qmax", 0));
    out["m"] = cat.m;
    out["q_max"] = cat.q_max;
    out["truncated"] = cat.truncated;
    json arr = json::array();
    for (const auto& e : cat.classes) {
      json je;
      je["subgroup"] = jsonio::subgroup_to_json(e.h);
      je["weyl"] = jsonio::group_to_json(e.wh);
      je["index"] = e.index;
      json summands = json::array();
      for (const auto& s : e.summands) {
        json js;
        js["q"] = s.q;
        js["cell_dim"] = s.cell_dim;
        js["suspension_dim"] = s.suspension_dim;
        js["sym_order"] = s.sym_order;
        js["transfer_marker"] = s.transfer_marker;
        summands.push_back(std::move(js));
      }
      je["summands"] = std::move(summands);
      arr.push_back(std::move(je));
    }
    out["classes"] = std::move(arr);
    return out;
  }
  throw ValidationError("unknown tomdieck operation: " + op);
}

}  // namespace

json run_command(const std::string& command, const json& payload) {
  auto space = command.find(' ');
  if (space == std::string::npos)
    throw ValidationError("command must be '<module> <operation>'");
  std::string mod = command.substr(0, space);
  std::string op = command.substr(space + 1);
  if (mod == "group") return run_group(op, payload);
  if (mod == "twisted") return run_twisted(op, payload);
  if (mod == "bundle") return run_bundle(op, payload);
  if (mod == "acyc") return run_acyc(op, payload);
  if (mod == "geosym") return run_geosym(op, payload);
  if (mod == "tomdieck") return run_tomdieck(op, payload);
  throw ValidationError("unknown module: " + mod);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const std::string& stdin_data) {
  CLI::App app{"finite-group equivariant fixed-point calculator"};
  app.fallthrough();
  app.require_subcommand(0);

  std::string in_path, out_path, format = "pretty";
  app.add_option("--in", in_path, "read the JSON payload from a file");
  app.add_option("--out", out_path, "write the response to a file");
  app.add_option("--format", format, "pretty|compact")
      ->check(CLI::IsMember({"pretty", "compact"}));
  std::int64_t cap_group = 0, cap_homs = 0, cap_mat = 0;
  int cap_qmax = 0;
  app.add_option("--cap-group-order", cap_group);
  app.add_option("--cap-hom-candidates", cap_homs);
  app.add_option("--cap-materialize", cap_mat);
  app.add_option("--cap-qmax", cap_qmax);

  // scalar flags merged into the payload
  std::map<std::string, std::string> str_flags;
  std::map<std::string, std::int64_t> int_flags;
  auto str_flag = [&](const std::string& name, const std::string& key) {
    app.add_option_function<std::string>(
        "--" + name, [&str_flags, key](const std::string& v) {
          str_flags[key] = v;
        });
  };
  auto int_flag = [&](const std::string& name, const std::string& key) {
    app.add_option_function<std::int64_t>(
        "--" + name, [&int_flags, key](std::int64_t v) { int_flags[key] = v; });
  };
  str_flag("group", "group");
  str_flag("src", "src");
  str_flag("dst", "dst");
  str_flag("lambda", "lambda");
  str_flag("qgroup", "q");
  int_flag("q", "q");
  int_flag("m", "m");
  int_flag("qmax", "qmax");
  int_flag("k", "k");
  int_flag("p", "p");
  int_flag("kmax", "kmax");
  int_flag("card", "card");

  const std::map<std::string, std::vector<std::string>> surface = {
      {"group", {"subgroups", "classes", "weyl", "homs"}},
      {"twisted", {"decompose", "fix-dim", "basis"}},
      {"bundle",
       {"check-faithful", "product", "sym", "eta-lambda", "eta-lambda-rel",
        "iterphi", "ifcrit"}},
      {"acyc",
       {"validate", "member", "stretch", "smash", "phi", "sym", "free",
        "catalog", "shadow"}},
      {"geosym", {"catalog", "classify", "centralizer", "identity"}},
      {"tomdieck", {"classes", "aut", "catalog"}}};
  std::string command;
  for (const auto& [mod, ops] : surface) {
    CLI::App* msub = app.add_subcommand(mod);
    msub->fallthrough();
    for (const auto& op : ops) {
      CLI::App* leaf = msub->add_subcommand(op);
      leaf->parse_complete_callback(
          [&command, mod, op] { command = mod + " " + op; });
    }
  }

  std::vector<const char*> argv{"eqc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  json envelope;
  envelope["command"] = command;
  envelope["version"] = kVersion;
  envelope["diagnostics"] = json::array();
  int code = 0;
  try {
    if (command.empty()) throw ValidationError("no command given");
    if (cap_group > 0 || cap_homs > 0 || cap_mat > 0 || cap_qmax > 0) {
      Caps caps = default_caps();
      if (cap_group > 0) caps.group_order = cap_group;
      if (cap_homs > 0) caps.hom_candidates = cap_homs;
      if (cap_mat > 0) caps.materialize_order = cap_mat;
      if (cap_qmax > 0) caps.q_max = cap_qmax;
      set_default_caps(caps);
    }
    json payload = json::object();
    if (!in_path.empty()) {
      std::ifstream f(in_path);
      if (!f) throw ValidationError("cannot open input file: " + in_path);
      payload = json::parse(f, nullptr, true);
    } else if (!stdin_data.empty()) {
      payload = json::parse(stdin_data, nullptr, true);
    }
    if (!payload.is_object())
      throw ValidationError("/payload: expected an object");
    for (const auto& [key, value] : str_flags) payload[key] = value;
    for (const auto& [key, value] : int_flags) payload[key] = value;
    envelope["result"] = run_command(command, payload);
  } catch (const json::exception& e) {
    envelope["diagnostics"].push_back(std::string(e.what()));
    envelope["error"] = {{"type", "validation"}, {"message", e.what()}};
    code = 2;
  } catch (const CapExceeded& e) {
    envelope["diagnostics"].push_back(std::string(e.what()));
    envelope["error"] = {{"type", "cap"}, {"message", e.what()}};
    code = 3;
  } catch (const ValidationError& e) {
    envelope["diagnostics"].push_back(std::string(e.what()));
    envelope["error"] = {{"type", "validation"}, {"message", e.what()}};
    code = 2;
  }

  std::string text =
      (format == "compact" ? envelope.dump() : envelope.dump(2)) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace eqc
