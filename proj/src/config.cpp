#include "inertia/config.hpp"

#include <fstream>
#include <sstream>

#include "inertia/chern.hpp"
#include "inertia/errors.hpp"

namespace inertia {

namespace {

Character parse_character(const Json& j, const GroupSpec& g, std::vector<std::string>& problems,
                          const std::string& where) {
  Character w;
  size_t expect = g.finite_orders.size() + (g.torus_rank == 1 ? 1 : 0);
  if (!j.is_array() || j.size() != expect) {
    problems.push_back(where + ": expected " + std::to_string(expect) + " exponents");
    w.finite.assign(g.finite_orders.size(), 0);
    return w;
  }
  for (size_t i = 0; i < g.finite_orders.size(); ++i) {
    if (!j[i].is_number_integer()) {
      problems.push_back(where + ": exponent " + std::to_string(i + 1) + " is not an integer");
      w.finite.push_back(0);
      continue;
    }
    long b = j[i].get<long>();
    long n = g.finite_orders[i];
    b %= n;
    if (b < 0) b += n;
    w.finite.push_back(b);
  }
  if (g.torus_rank == 1) {
    if (!j.back().is_number_integer())
      problems.push_back(where + ": torus weight is not an integer");
    else
      w.torus = j.back().get<long>();
  }
  return w;
}

}  // namespace

StackConfig parse_config_text(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  if (!j.is_object()) fail(Errc::ParseError, "top-level value must be an object");

  std::vector<std::string> problems;
  StackConfig cfg;
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "group" && key != "weights" && key != "space" && key != "bundles")
      problems.push_back("unknown key '" + key + "'");
  }
  if (!j.contains("group") || !j["group"].is_object()) {
    fail(Errc::ParseError, "missing 'group' object");
  }
  const Json& jg = j["group"];
  if (jg.contains("finite_orders")) {
    if (!jg["finite_orders"].is_array())
      problems.push_back("group.finite_orders must be an array");
    else
      for (const Json& n : jg["finite_orders"]) {
        if (!n.is_number_integer() || n.get<long>() < 1)
          problems.push_back("group.finite_orders entries must be integers >= 1");
        else
          cfg.action.group.finite_orders.push_back(n.get<long>());
      }
  }
  if (jg.contains("torus_rank")) {
    if (!jg["torus_rank"].is_number_integer() ||
        (jg["torus_rank"].get<int>() != 0 && jg["torus_rank"].get<int>() != 1))
      problems.push_back("group.torus_rank must be 0 or 1");
    else
      cfg.action.group.torus_rank = jg["torus_rank"].get<int>();
  }

  std::string space = j.value("space", std::string("affine_minus_origin"));
  if (space == "point")
    cfg.action.space = SpaceKind::Point;
  else if (space == "affine_minus_origin")
    cfg.action.space = SpaceKind::AffineMinusOrigin;
  else
    problems.push_back("space must be 'point' or 'affine_minus_origin'");

  if (j.contains("weights")) {
    if (!j["weights"].is_array())
      problems.push_back("weights must be an array");
    else {
      int n = 0;
      for (const Json& jw : j["weights"]) {
        ++n;
        cfg.action.weights.push_back(parse_character(jw, cfg.action.group, problems,
                                                     "weight " + std::to_string(n)));
      }
    }
  }

  if (j.contains("bundles")) {
    if (!j["bundles"].is_object())
      problems.push_back("bundles must be an object");
    else
      for (const auto& [name, terms] : j["bundles"].items()) {
        if (name == "T" || name == "T*") {
          problems.push_back("bundle name '" + name + "' is reserved");
          continue;
        }
        VirtualBundle v;
        if (!terms.is_array()) {
          problems.push_back("bundle '" + name + "' must be an array of [mult, character]");
          continue;
        }
        int t = 0;
        for (const Json& jt : terms) {
          ++t;
          std::string where = "bundle '" + name + "' term " + std::to_string(t);
          if (!jt.is_array() || jt.size() != 2 || !jt[0].is_number_integer()) {
            problems.push_back(where + ": expected [mult, character]");
            continue;
          }
          v.add(parse_character(jt[1], cfg.action.group, problems, where),
                Rat(jt[0].get<long>()));
        }
        cfg.bundles.emplace(name, std::move(v));
      }
  }

  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const std::string& p : problems) msg += "\n  - " + p;
    fail(Errc::ValidationError, msg);
  }
  return cfg;
}

StackConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

VirtualBundle resolve_bundle(const Stack& s, const StackConfig& cfg, const std::string& name) {
  if (name == "T") return s.tangent();
  if (name == "T*") return s.cotangent();
  auto it = cfg.bundles.find(name);
  if (it == cfg.bundles.end())
    fail(Errc::UnknownBundleName, "no bundle named '" + name + "' (built-ins: T, T*)");
  return it->second;
}

ProductSpec resolve_product(const Stack& s, const StackConfig& cfg, const std::string& name) {
  ProductSpec spec;
  spec.name = name;
  if (name == "orbifold") {
    spec.pair = InertialPair::orbifold();
  } else if (name == "virtual") {
    spec.pair = InertialPair::virt();
  } else if (name == "localized") {
    spec.localized = true;
  } else if (name.rfind("vplus:", 0) == 0) {
    std::string b = name.substr(6);
    spec.pair = InertialPair::vplus(resolve_bundle(s, cfg, b), b);
    spec.name = spec.pair.name;
  } else if (name.rfind("vminus:", 0) == 0) {
    std::string b = name.substr(7);
    spec.pair = InertialPair::vminus(resolve_bundle(s, cfg, b), b);
    spec.name = spec.pair.name;
  } else {
    fail(Errc::ValidationError,
         "unknown product '" + name +
             "' (expected orbifold, virtual, vplus:NAME, vminus:NAME or localized)");
  }
  return spec;
}

// --------------------------------------------------------------- commands

CommandOutput cmd_sectors(const Stack& s) {
  std::ostringstream out;
  Json data;
  out << "stack: " << s.describe() << "\n";
  out << "sectors: " << s.sectors().size() << "\n";
  data["stack"] = s.describe();
  data["sectors"] = Json::array();
  for (const Sector& sec : s.sectors()) {
    KRingPtr kr = s.k_ring(sec.fixed);
    ChowRingPtr cr = s.chow_ring(sec.fixed);
    out << "sector " << s.sector_label(sec.element) << ": age " << rat_str(sec.age)
        << ", fixed {";
    for (size_t i = 0; i < sec.fixed.size(); ++i)
      out << (i ? "," : "") << sec.fixed[i] + 1;
    out << "}, K = " << kr->presentation() << ", Chow = " << cr->presentation() << "\n";
    Json js;
    js["label"] = s.sector_label(sec.element);
    js["age"] = rat_str(sec.age);
    js["fixed"] = sec.fixed;
    js["k_ring"] = kr->presentation();
    js["chow_ring"] = cr->presentation();
    data["sectors"].push_back(js);
  }
  return {out.str(), data};
}

CommandOutput cmd_table(const Stack& s, const StackConfig& cfg, const std::string& product,
                        const std::string& theory) {
  if (theory != "k" && theory != "chow")
    fail(Errc::ValidationError, "theory must be 'k' or 'chow'");
  ProductSpec spec = resolve_product(s, cfg, product);
  if (spec.localized && theory == "chow")
    fail(Errc::UnsupportedCombination, "the localized product is defined in K-theory only");

  std::ostringstream out;
  Json data;
  out << "table: " << spec.name << " product in " << (theory == "k" ? "K-theory" : "Chow")
      << "\n";
  out << "stack: " << s.describe() << "\n";
  data["product"] = spec.name;
  data["theory"] = theory;
  data["stack"] = s.describe();
  out << "rings:\n";
  data["rings"] = Json::array();
  for (const Sector& sec : s.sectors()) {
    std::string pres =
        theory == "k" ? s.k_ring(sec.fixed)->presentation() : s.chow_ring(sec.fixed)->presentation();
    out << "  " << s.sector_label(sec.element) << ": " << pres << "\n";
    data["rings"].push_back({{"sector", s.sector_label(sec.element)}, {"ring", pres}});
  }
  out << "entries:\n";
  data["entries"] = Json::array();
  long n = long(s.sectors().size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      std::string li = s.sector_label(s.sector(i).element);
      std::string lj = s.sector_label(s.sector(j).element);
      Json je;
      je["left"] = li;
      je["right"] = lj;
      std::string rendered;
      std::string target;
      if (theory == "k") {
        InertiaKClass x = InertiaKClass::sector_unit(s, int(i));
        InertiaKClass y = InertiaKClass::sector_unit(s, int(j));
        InertiaKClass z = spec.localized ? localized_product(s, x, y)
                                         : product_k(s, spec.pair, x, y);
        if (z.parts.empty()) {
          rendered = "0";
        } else {
          assert(z.parts.size() == 1);
          const auto& [t, c] = *z.parts.begin();
          target = s.sector_label(s.sector(t).element);
          rendered = c.str();
          Json coeffs = Json::array();
          for (const Cyclo& v : c.coords()) coeffs.push_back(v.str());
          je["coeffs"] = coeffs;
        }
      } else {
        InertiaChowClass x, y;
        x.stack = y.stack = &s;
        x.add_part(int(i), ChowClass::one(s.chow_ring(s.sector(i).fixed)));
        y.add_part(int(j), ChowClass::one(s.chow_ring(s.sector(j).fixed)));
        InertiaChowClass z = product_chow(s, spec.pair, x, y);
        if (z.parts.empty()) {
          rendered = "0";
        } else {
          assert(z.parts.size() == 1);
          const auto& [t, c] = *z.parts.begin();
          target = s.sector_label(s.sector(t).element);
          rendered = c.str();
          Json coeffs = Json::array();
          for (const Cyclo& v : c.series().c) coeffs.push_back(v.str());
          je["coeffs"] = coeffs;
        }
      }
      je["target"] = target;
      je["value"] = rendered;
      data["entries"].push_back(je);
      out << "  " << li << " * " << lj;
      if (target.empty())
        out << " = 0\n";
      else
        out << " -> " << target << ": " << rendered << "\n";
    }
  }
  return {out.str(), data};
}

CommandOutput cmd_check(const Stack& s, const StackConfig& cfg, const std::string& product) {
  ProductSpec spec = resolve_product(s, cfg, product);
  if (spec.localized)
    fail(Errc::UnsupportedCombination,
         "the localized product is not presented by a single inertial pair; check the "
         "underlying orbifold pair instead");
  PairCheckReport rep = check_inertial_pair(s, spec.pair);
  std::ostringstream out;
  auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
  out << "inertial pair check: " << spec.name << "\n";
  out << "stack: " << s.describe() << "\n";
  out << "obstructions are vector bundle classes: " << pf(rep.obstructions_ok) << "\n";
  out << "identity: " << pf(rep.identity_ok) << "\n";
  out << "symmetry: " << pf(rep.symmetry_ok) << "\n";
  out << "cocycle (associativity): " << pf(rep.cocycle_ok) << "\n";
  out << "grading compatibility: " << pf(rep.chern_ok) << "\n";
  out << "S-ages integral (Gorenstein): " << (rep.gorenstein ? "yes" : "no") << "\n";
  out << "S effective (strongly Gorenstein): " << (rep.strongly_gorenstein ? "yes" : "no")
      << "\n";
  for (const std::string& f : rep.failures) out << "  ! " << f << "\n";
  out << "result: " << (rep.all_ok() ? "PASS" : "FAIL") << "\n";
  Json data;
  data["product"] = spec.name;
  data["stack"] = s.describe();
  data["obstructions_ok"] = rep.obstructions_ok;
  data["identity_ok"] = rep.identity_ok;
  data["symmetry_ok"] = rep.symmetry_ok;
  data["cocycle_ok"] = rep.cocycle_ok;
  data["grading_ok"] = rep.chern_ok;
  data["gorenstein"] = rep.gorenstein;
  data["strongly_gorenstein"] = rep.strongly_gorenstein;
  data["failures"] = rep.failures;
  data["pass"] = rep.all_ok();
  return {out.str(), data};
}

CommandOutput cmd_chern(const Stack& s, const StackConfig& cfg, const std::string& product) {
  ProductSpec spec = resolve_product(s, cfg, product);
  if (spec.localized)
    fail(Errc::UnsupportedCombination, "Chern characters are attached to inertial pairs");
  std::ostringstream out;
  Json data;
  out << "inertial Chern characters: " << spec.name << "\n";
  out << "stack: " << s.describe() << "\n";
  data["product"] = spec.name;
  data["stack"] = s.describe();
  data["sectors"] = Json::array();
  for (size_t i = 0; i < s.sectors().size(); ++i) {
    InertiaKClass u = InertiaKClass::sector_unit(s, int(i));
    InertiaChowClass ch = inertial_chern(s, spec.pair, u);
    std::map<int, Cyclo> rk = inertial_rank(s, spec.pair, u);
    const Sector& sec = s.sector(int(i));
    std::string label = s.sector_label(sec.element);
    std::string chs = ch.parts.count(int(i)) ? ch.parts.at(int(i)).str() : "0";
    out << "ch(1_" << label << ") = " << chs << "   (S-age " <<
        rat_str(s_age(s, spec.pair, sec.element)) << ", rank "
        << rk.at(int(i)).str() << ")\n";
    Json js;
    js["sector"] = label;
    js["chern"] = chs;
    js["s_age"] = rat_str(s_age(s, spec.pair, sec.element));
    js["rank"] = rk.at(int(i)).str();
    data["sectors"].push_back(js);
  }
  return {out.str(), data};
}

CommandOutput cmd_localize(const Stack& s, const StackConfig& cfg) {
  (void)cfg;
  std::ostringstream out;
  Json data;
  out << "support decomposition and localized product\n";
  out << "stack: " << s.describe() << "\n";
  data["stack"] = s.describe();

  out << "supports of sector units:\n";
  data["supports"] = Json::array();
  for (size_t i = 0; i < s.sectors().size(); ++i) {
    const Sector& sec = s.sector(int(i));
    LocalizedKClass dec = support_decompose(s, InertiaKClass::sector_unit(s, int(i)));
    out << "  sector " << s.sector_label(sec.element) << ":";
    Json js;
    js["sector"] = s.sector_label(sec.element);
    js["components"] = Json::array();
    bool first = true;
    for (const auto& [h, c] : dec.parts[int(i)]) {
      out << (first ? " " : "; ") << "h " << s.sector_label(h) << ": " << c.str();
      first = false;
      js["components"].push_back({{"support", s.sector_label(h)}, {"value", c.str()}});
    }
    out << "\n";
    data["supports"].push_back(js);
  }

  out << "localized product table (K-theory):\n";
  data["entries"] = Json::array();
  long n = long(s.sectors().size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      InertiaKClass z = localized_product(s, InertiaKClass::sector_unit(s, int(i)),
                                          InertiaKClass::sector_unit(s, int(j)));
      std::string li = s.sector_label(s.sector(i).element);
      std::string lj = s.sector_label(s.sector(j).element);
      Json je;
      je["left"] = li;
      je["right"] = lj;
      out << "  " << li << " * " << lj;
      if (z.parts.empty()) {
        out << " = 0\n";
        je["target"] = "";
        je["value"] = "0";
      } else {
        assert(z.parts.size() == 1);
        const auto& [t, c] = *z.parts.begin();
        out << " -> " << s.sector_label(s.sector(t).element) << ": " << c.str() << "\n";
        je["target"] = s.sector_label(s.sector(t).element);
        je["value"] = c.str();
      }
      data["entries"].push_back(je);
    }
  }

  out << "alternative obstruction reading (normal-bundle twist), reported only:\n";
  data["nf_report"] = Json::array();
  for (const NfPairReport& rep : nf_product_report(s)) {
    std::string li = s.sector_label(s.sector(rep.s1).element);
    std::string lj = s.sector_label(s.sector(rep.s2).element);
    out << "  " << li << " * " << lj << ":";
    Json je;
    je["left"] = li;
    je["right"] = lj;
    je["integral"] = rep.integral;
    if (!rep.integral) {
      out << " non-integral multiplicities, not evaluable\n";
      data["nf_report"].push_back(je);
      continue;
    }
    if (!rep.singular.empty()) {
      out << " singular at";
      for (const GroupElement& h : rep.singular) out << " h " << s.sector_label(h);
      out << ";";
    }
    Json sing = Json::array(), eval = Json::array();
    for (const GroupElement& h : rep.singular) sing.push_back(s.sector_label(h));
    for (const GroupElement& h : rep.evaluated) eval.push_back(s.sector_label(h));
    je["singular"] = sing;
    je["evaluated"] = eval;
    je["matches"] = rep.matches;
    if (rep.evaluated.empty()) {
      out << " nowhere evaluable\n";
    } else {
      out << " evaluated at";
      for (const GroupElement& h : rep.evaluated) out << " h " << s.sector_label(h);
      out << ": " << (rep.matches ? "matches localized product" : "DIFFERS from localized product")
          << "\n";
    }
    data["nf_report"].push_back(je);
  }
  return {out.str(), data};
}

}  // namespace inertia
