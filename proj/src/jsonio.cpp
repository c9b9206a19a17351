#include "eqc/jsonio.hpp"

#include <cctype>

#include "eqc/errors.hpp"

namespace eqc::jsonio {

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(path + "/" + key + ": missing");
  return j.at(key);
}

int need_int(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number_integer())
    throw ValidationError(path + "/" + key + ": expected an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw ValidationError(path + "/" + std::to_string(i) +
                            ": expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

namespace {

std::vector<Perm> perm_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array");
  std::vector<Perm> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(int_list(j[i], path + "/" + std::to_string(i)));
  return out;
}

GroupRef group_from_name(const std::string& name, const std::string& path) {
  if (name == "trivial") return FinGroup::trivial();
  if (name == "Q8") return FinGroup::quaternion8();
  if (name.size() >= 2 &&
      (name[0] == 'C' || name[0] == 'S' || name[0] == 'D')) {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
        n = -1;
        break;
      }
      n = n * 10 + (name[i] - '0');
    }
    if (n > 0) {
      if (name[0] == 'C') return FinGroup::cyclic(n);
      if (name[0] == 'S') return FinGroup::symmetric(n);
      return FinGroup::dihedral(n);
    }
  }
  throw ValidationError(path + ": unknown group name '" + name + "'");
}

}  // namespace

GroupRef group_from_json(const json& j, const std::string& path) {
  if (j.is_string()) return group_from_name(j.get<std::string>(), path);
  if (!j.is_object())
    throw ValidationError(path + ": expected a group name or object");
  std::string kind =
      j.contains("kind") ? j.at("kind").get<std::string>() : "perm";
  if (kind == "product") {
    const json& f = need(j, "factors", path);
    if (!f.is_array() || f.empty())
      throw ValidationError(path + "/factors: expected a non-empty array");
    GroupRef acc = group_from_json(f[0], path + "/factors/0");
    for (std::size_t i = 1; i < f.size(); ++i)
      acc = FinGroup::direct_product(
          acc, group_from_json(f[i], path + "/factors/" + std::to_string(i)));
    return acc;
  }
  if (kind == "perm") {
    int degree = need_int(j, "degree", path);
    auto gens = perm_list(need(j, "generators", path), path + "/generators");
    return FinGroup::from_generators(degree, gens);
  }
  throw ValidationError(path + "/kind: unknown kind '" + kind + "'");
}

json group_to_json(const GroupRef& g) {
  json out;
  out["kind"] = "perm";
  out["degree"] = g->degree();
  json gens = json::array();
  for (const Perm& p : g->generators()) gens.push_back(p);
  out["generators"] = std::move(gens);
  out["order"] = g->order();
  out["hash"] = g->content_hash();
  return out;
}

Subgroup subgroup_from_json(const GroupRef& parent, const json& j,
                            const std::string& path) {
  if (j.is_array()) {
    Subgroup s{parent, int_list(j, path)};
    s.validate();
    return s;
  }
  if (j.is_object() && j.contains("generated_by"))
    return generated_subgroup(
        parent, int_list(j.at("generated_by"), path + "/generated_by"));
  if (j.is_object() && j.contains("members")) {
    Subgroup s{parent, int_list(j.at("members"), path + "/members")};
    s.validate();
    return s;
  }
  throw ValidationError(path +
                        ": expected a member list or {\"generated_by\":[..]}");
}

json subgroup_to_json(const Subgroup& s) {
  json out;
  out["members"] = s.members;
  out["order"] = s.order();
  return out;
}

BiSet biset_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
  if (j.contains("kind")) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "biregular")
      return biregular(group_from_json(need(j, "group", path), path + "/group"));
    GroupRef left = group_from_json(need(j, "left", path), path + "/left");
    GroupRef right =
        j.contains("right")
            ? group_from_json(j.at("right"), path + "/right")
            : FinGroup::trivial();
    if (kind == "left_regular") return left_regular_biset(left, right);
    if (kind == "trivial")
      return trivial_biset(left, right, need_int(j, "n", path));
    if (kind == "coset")
      return coset_biset(
          subgroup_from_json(left, need(j, "subgroup", path), path + "/subgroup"),
          right);
    throw ValidationError(path + "/kind: unknown kind '" + kind + "'");
  }
  BiSet x;
  x.left = group_from_json(need(j, "left", path), path + "/left");
  x.right = group_from_json(need(j, "right", path), path + "/right");
  x.n = need_int(j, "n", path);
  auto read_tables = [&](const char* key) {
    auto t = perm_list(need(j, key, path), path + "/" + key);
    std::vector<std::vector<int>> out(t.begin(), t.end());
    return out;
  };
  x.lact = read_tables("lact");
  x.ract = read_tables("ract");
  x.validate();
  return x;
}

json biset_to_json(const BiSet& x) {
  json out;
  out["left"] = group_to_json(x.left);
  out["right"] = group_to_json(x.right);
  out["n"] = x.n;
  out["lact"] = x.lact;
  out["ract"] = x.ract;
  return out;
}

BundleData bundle_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
  GroupRef gamma = group_from_json(need(j, "gamma", path), path + "/gamma");
  GroupRef q = group_from_json(need(j, "q", path), path + "/q");
  BiSet base = biset_from_json(need(j, "base", path), path + "/base");
  BiSet total = biset_from_json(need(j, "total", path), path + "/total");
  std::vector<int> proj = int_list(need(j, "proj", path), path + "/proj");
  BundleData b = make_bundle(gamma, q, std::move(base), std::move(total),
                             std::move(proj));
  if (j.contains("sqnorm")) {
    auto sq = int_list(j.at("sqnorm"), path + "/sqnorm");
    b.sqnorm.assign(sq.begin(), sq.end());
  }
  if (j.contains("base_label"))
    b.base_label = int_list(j.at("base_label"), path + "/base_label");
  b.validate();
  return b;
}

json bundle_to_json(const BundleData& b) {
  json out;
  out["gamma"] = group_to_json(b.gamma);
  out["q"] = group_to_json(b.q);
  out["base"] = biset_to_json(b.base);
  out["total"] = biset_to_json(b.total);
  out["proj"] = b.proj;
  out["sqnorm"] = b.sqnorm;
  out["base_label"] = b.base_label;
  return out;
}

AcycData acyc_from_json(const json& j, const std::string& path, bool check) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
  AcycData d;
  d.n = need_int(j, "n", path);
  d.q = int_list(need(j, "q", path), path + "/q");
  d.m = int_list(need(j, "m", path), path + "/m");
  d.l = int_list(need(j, "l", path), path + "/l");
  d.r = static_cast<int>(d.m.size());
  const json& vs = need(j, "V", path);
  if (!vs.is_array() || vs.size() != d.m.size())
    throw ValidationError(path + "/V: expected one entry per factor");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string p = path + "/V/" + std::to_string(i);
    if (vs[i].is_string() && vs[i].get<std::string>() == "regular") {
      if (d.l[i] <= 0 || d.m[i] % d.l[i] != 0)
        throw ValidationError(p + ": malformed m/l quotient");
      d.V.push_back(left_regular_biset(FinGroup::cyclic(d.m[i] / d.l[i]),
                                       FinGroup::trivial()));
    } else {
      d.V.push_back(biset_from_json(vs[i], p));
    }
  }
  GroupRef ambient = acyc_ambient(d);
  d.Q = j.contains("Q")
            ? subgroup_from_json(ambient, j.at("Q"), path + "/Q")
            : whole_group(ambient);
  if (j.contains("x_tag")) d.x_tag = j.at("x_tag").get<std::string>();
  if (check) {
    auto violations = acyc_validate(d);
    if (!violations.empty())
      throw ValidationError(path + ": " + violations.front());
  }
  return d;
}

json acyc_to_json(const AcycData& d) {
  json out;
  out["n"] = d.n;
  out["q"] = d.q;
  out["m"] = d.m;
  out["l"] = d.l;
  json vs = json::array();
  for (const auto& v : d.V) vs.push_back(biset_to_json(v));
  out["V"] = std::move(vs);
  out["Q"] = subgroup_to_json(d.Q);
  out["x_tag"] = d.x_tag;
  return out;
}

WreathHom wreath_hom_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
  GroupRef lambda =
      group_from_json(need(j, "lambda", path), path + "/lambda");
  GroupRef base = group_from_json(need(j, "base", path), path + "/base");
  WreathGroup w{need_int(j, "q", path), base};
  auto read_elem = [&](const json& e, const std::string& p) {
    WreathElem x;
    x.a = int_list(need(e, "a", p), p + "/a");
    x.s = int_list(need(e, "s", p), p + "/s");
    w.validate_elem(x);
    return x;
  };
  if (j.contains("map")) {
    const json& m = j.at("map");
    if (!m.is_array() || static_cast<int>(m.size()) != lambda->order())
      throw ValidationError(path + "/map: expected one entry per element");
    WreathHom h{lambda, w, {}};
    for (std::size_t i = 0; i < m.size(); ++i)
      h.map.push_back(read_elem(m[i], path + "/map/" + std::to_string(i)));
    h.validate();
    return h;
  }
  const json& imgs = need(j, "images", path);
  std::vector<int> gens = j.contains("gens")
                              ? int_list(j.at("gens"), path + "/gens")
                              : lambda->generator_indices();
  if (!imgs.is_array() || imgs.size() != gens.size())
    throw ValidationError(path + "/images: expected one entry per generator");
  std::vector<WreathElem> images;
  for (std::size_t i = 0; i < imgs.size(); ++i)
    images.push_back(read_elem(imgs[i], path + "/images/" + std::to_string(i)));
  return wreath_hom_from_generator_images(lambda, w, gens, images);
}

json wreath_elem_to_json(const WreathElem& x) {
  json out;
  out["a"] = x.a;
  out["s"] = x.s;
  return out;
}

json wreath_hom_to_json(const WreathHom& h) {
  json out;
  out["lambda"] = group_to_json(h.lambda);
  out["q"] = h.target.q;
  out["base"] = group_to_json(h.target.base);
  json m = json::array();
  for (const auto& x : h.map) m.push_back(wreath_elem_to_json(x));
  out["map"] = std::move(m);
  return out;
}

json hom_to_json(const GroupHom& h) {
  json out;
  out["map"] = h.map;
  return out;
}

}  // namespace eqc::jsonio
