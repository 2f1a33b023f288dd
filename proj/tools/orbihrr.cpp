// orbihrr: command-line front end.
//
// Every subcommand builds a report {command, inputs, results, checks, pass,
// elapsed_us}, prints it as JSON (default), CSV or text, and exits 0 iff all
// checks pass, 1 on a failed check, 2 on bad usage or unreadable input.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbihrr/acceptance.hpp"
#include "orbihrr/catalog.hpp"
#include "orbihrr/io.hpp"
#include "orbihrr/orbihrr.hpp"

namespace {

using nlohmann::json;
using namespace orbihrr;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  json& inputs() { return doc_["inputs"]; }
  json& results() { return doc_["results"]; }

  void check(const std::string& name, const std::string& expected, const std::string& computed) {
    bool ok = expected == computed;
    doc_["checks"].push_back({{"name", name}, {"expected", expected}, {"computed", computed}, {"pass", ok}});
    if (!ok) {
      pass_ = false;
      std::cerr << "check failed: " << name << "\n  expected: " << expected << "\n  computed: " << computed << "\n";
    }
  }

  void check(const std::string& name, bool ok, const std::string& detail) {
    doc_["checks"].push_back({{"name", name}, {"detail", detail}, {"pass", ok}});
    if (!ok) {
      pass_ = false;
      std::cerr << "check failed: " << name << ": " << detail << "\n";
    }
  }

  bool pass() const { return pass_; }

  json finish(std::chrono::steady_clock::time_point start) {
    if (!doc_.contains("checks")) doc_["checks"] = json::array();
    doc_["pass"] = pass_;
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    doc_["elapsed_us"] = us.count();
    return doc_;
  }

 private:
  json doc_;
  bool pass_ = true;
};

// ---- output ----------------------------------------------------------------

std::string approx_string(const Cyclotomic& c) {
  auto z = c.to_complex();
  std::ostringstream os;
  os << std::setprecision(12) << z.real();
  if (!c.is_rational()) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Keys whose string values are names rather than numbers.
const std::set<std::string> kTextKeys{"command", "label", "presentation", "relation_text", "name",
                                      "detail",  "model", "group",        "rep",           "line"};

json approximate(const json& v, const std::string& key = "") {
  if (v.is_object()) {
    json out = json::object();
    for (const auto& [k, x] : v.items()) {
      json a = approximate(x, k);
      if (!a.is_null()) out[k] = a;
    }
    return out.empty() ? json() : out;
  }
  if (v.is_array()) {
    json out = json::array();
    bool any = false;
    for (const auto& x : v) {
      json a = approximate(x, key);
      any = any || !a.is_null();
      out.push_back(a);
    }
    return any ? out : json();
  }
  if (v.is_string() && !kTextKeys.count(key)) {
    try {
      return approx_string(parse_cyclotomic(v.get<std::string>()));
    } catch (const std::exception&) {
      return json();
    }
  }
  return json();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object() || v.is_array()) {
    if (v.empty()) rows.emplace_back(prefix, v.is_object() ? "{}" : "[]");
    std::size_t i = 0;
    for (const auto& [k, x] : v.items()) {
      std::string name = v.is_array() ? std::to_string(i++) : k;
      flatten(x, prefix.empty() ? name : prefix + "." + name, rows);
    }
    return;
  }
  rows.emplace_back(prefix, v.is_string() ? v.get<std::string>() : v.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == "csv") {
    std::cout << "key,value\r\n";
    for (const auto& [k, v] : rows) std::cout << csv_field(k) << "," << csv_field(v) << "\r\n";
  } else {
    for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
  }
}

// ---- shared helpers ----------------------------------------------------------

std::size_t max_group_order() {
  const char* env = std::getenv("ORBIHRR_MAX_GROUP_ORDER");
  if (!env || !*env) return kDefaultMaxGroupOrder;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0 || env[0] == '-') throw UsageError("ORBIHRR_MAX_GROUP_ORDER must be a positive integer");
  return static_cast<std::size_t>(v);
}

json string_list(const std::vector<Cyclotomic>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

std::string sector_key(const WpsSector& s) { return "g=" + s.label; }

// χ(O(d)) from monomial counts: h^0(O(d)) + (-1)^n h^0(O(-d - Σa)).
Rational chi_from_counts(std::span<const long> weights, long d) {
  long sum = std::accumulate(weights.begin(), weights.end(), 0L);
  auto top = static_cast<long>(monomial_count_oracle(weights, -d - sum));
  long sign = (weights.size() - 1) % 2 == 0 ? 1 : -1;
  return Rational(static_cast<long>(monomial_count_oracle(weights, d)) + sign * top);
}

struct Options {
  std::string format = "json";
  bool approx = false;
  std::vector<long> weights;
  long d = 0;
  std::string klass;
  long dmin = 0;
  long dmax = 40;
  std::string group;
  std::vector<std::string> reps;
  std::size_t n = 0;
  std::vector<std::string> coeffs;
  bool inverse = false;
  std::vector<long> f, g;
  std::string model = "wps";
  long xmax = 4;
  std::string x = "1", y = "1";
  std::uint64_t seed = 20240601;
};

struct LoadedBG {
  GroupHandle group;
  std::vector<Representation> reps;
};

LoadedBG load_bg(const Options& o, std::size_t min_reps, Report& report) {
  if (o.group.empty()) throw UsageError("--group is required");
  if (o.reps.size() < min_reps) throw UsageError("at least " + std::to_string(min_reps) + " --rep file(s) required");
  LoadedBG bg;
  bg.group = io::group_from_json(io::read_json_file(o.group), max_group_order());
  for (const auto& path : o.reps) bg.reps.push_back(io::representation_from_json(bg.group, io::read_json_file(path)));
  report.inputs()["group"] = o.group;
  report.inputs()["reps"] = o.reps;
  report.results()["group_order"] = bg.group->order();
  return bg;
}

WPS load_wps(const Options& o, Report& report) {
  if (o.weights.empty()) throw UsageError("--weights is required");
  report.inputs()["weights"] = o.weights;
  return WPS(o.weights);
}

// ---- wps ---------------------------------------------------------------------

void wps_inertia(const Options& o, Report& r) {
  WPS w = load_wps(o, r);
  json sectors = json::array();
  for (const auto& s : w.sectors()) {
    sectors.push_back({{"label", s.label},
                       {"g", s.g.to_string()},
                       {"fixed", s.fixed},
                       {"dim", s.dim},
                       {"normal_weights", s.normal_weights},
                       {"integration_weight", Rational(1, s.volume_factor).to_string()}});
  }
  r.results()["name"] = w.name();
  r.results()["sector_count"] = w.sector_count();
  // One sector per distinct fraction k / a_i in [0, 1).
  std::set<std::pair<long, long>> fractions;
  for (long a : w.weights())
    for (long k = 0; k < a; ++k) fractions.insert({k / std::gcd(k, a), a / std::gcd(k, a)});
  r.check("sector count equals distinct fractions k/a_i", std::to_string(fractions.size()),
          std::to_string(w.sector_count()));
  r.results()["sectors"] = sectors;
}

void wps_chi(const Options& o, Report& r) {
  WPS w = load_wps(o, r);
  KClass x = w.line(o.d);
  if (!o.klass.empty()) {
    x = parse_kclass(w.kring(), o.klass);
    r.inputs()["class"] = o.klass;
  } else {
    r.inputs()["d"] = o.d;
  }
  auto contributions = wps_sector_contributions(w, x);
  json sectors = json::object();
  Cyclotomic total(0);
  for (std::size_t i = 0; i < contributions.size(); ++i) {
    sectors[sector_key(w.sectors()[i])] = contributions[i].to_string();
    total += contributions[i];
  }
  r.results()["sectors"] = sectors;
  r.results()["chi"] = total.to_string();
  // Oracle: expand x in powers of the tautological line and count monomials.
  Cyclotomic expected(0);
  for (const auto& [d, c] : x.rep().terms()) expected += c * Cyclotomic(chi_from_counts(w.weights(), d));
  r.check("chi equals monomial-count oracle", expected.to_string(), total.to_string());
}

void wps_hrr_verify(const Options& o, Report& r) {
  WPS w = load_wps(o, r);
  if (o.dmax < o.dmin) throw UsageError("--dmax must be at least --dmin");
  r.inputs()["dmin"] = o.dmin;
  r.inputs()["dmax"] = o.dmax;
  json rows = json::array();
  std::size_t failures = 0;
  for (long d = o.dmin; d <= o.dmax; ++d) {
    Rational chi = wps_euler_char(w, w.line(d));
    Rational oracle = chi_from_counts(w.weights(), d);
    bool ok = chi == oracle;
    failures += ok ? 0 : 1;
    rows.push_back({{"d", d}, {"chi", chi.to_string()}, {"oracle", oracle.to_string()}, {"pass", ok}});
    if (!ok) r.check("d=" + std::to_string(d), oracle.to_string(), chi.to_string());
  }
  r.results()["rows"] = rows;
  r.results()["failures"] = failures;
  r.check("all degrees match the monomial-count oracle", failures == 0,
          std::to_string(rows.size() - failures) + "/" + std::to_string(rows.size()) + " equal");
}

void wps_kring(const Options& o, Report& r) {
  WPS w = load_wps(o, r);
  auto pres = wps_kring_relation(w);
  r.results()["relation"] = pres.relation;
  r.results()["relation_text"] = pres.relation_text;
  r.results()["presentation"] = pres.presentation;
  r.results()["rank"] = w.kring().degree();
  // The relation is the K-theoretic Euler class of ⊕ O(a_i), which must vanish.
  std::vector<SignedMonomial> terms;
  for (long a : w.weights()) terms.push_back({1, a});
  KClass free_euler = k_euler_class(KRing::free(), terms);
  LaurentPoly expected =
      free_euler.rep() * LaurentPoly::monomial(std::accumulate(w.weights().begin(), w.weights().end(), 0L));
  r.check("relation equals x^(sum a) times the K-theoretic Euler class", expected.to_string("x"), pres.relation_text);
  r.check("Euler class vanishes in the quotient", k_euler_class(w.kring(), terms).is_zero(), "e^K(sum x^a_i) = 0");
}

void wps_orbtd_cmd(const Options& o, Report& r) {
  WPS w = load_wps(o, r);
  json sectors = json::object();
  for (std::size_t i = 0; i < w.sector_count(); ++i) {
    sectors[sector_key(w.sectors()[i])] = {{"todd", w.todd(i).to_string()},
                                          {"euler_rho", w.euler_rho(i).to_string()},
                                          {"orbtd", w.orbtd().component(i).to_string()}};
  }
  r.results()["sectors"] = sectors;
  Cyclotomic total = integrate(w, w.orbtd());
  r.results()["integral"] = total.to_string();
  r.check("integral of orbtd equals chi(O)", "1", total.to_string());
}

// ---- bg ----------------------------------------------------------------------

void bg_euler_char_cmd(const Options& o, Report& r) {
  auto bg = load_bg(o, 1, r);
  BGInertia model(bg.group);
  Representation triv = Representation::trivial(bg.group);
  json values = json::array();
  for (std::size_t i = 0; i < bg.reps.size(); ++i) {
    Rational chi = bg_euler_char(model, bg.reps[i]);
    values.push_back(chi.to_string());
    r.check("rep " + std::to_string(i) + " equals dim of invariants",
            std::to_string(hom_fixed_dim_oracle(triv, bg.reps[i])), chi.to_string());
  }
  r.results()["euler_char"] = values.size() == 1 ? values[0] : values;
}

void bg_pairing_cmd(const Options& o, Report& r) {
  auto bg = load_bg(o, 2, r);
  if (bg.reps.size() != 2) throw UsageError("pairing takes exactly two --rep files");
  BGInertia model(bg.group);
  Rational chi = bg_euler_pairing(model, bg.reps[0], bg.reps[1]);
  r.results()["pairing"] = chi.to_string();
  r.check("pairing equals Hom oracle", std::to_string(hom_fixed_dim_oracle(bg.reps[0], bg.reps[1])), chi.to_string());
}

void bg_orbch_cmd(const Options& o, Report& r) {
  auto bg = load_bg(o, 1, r);
  BGInertia model(bg.group);
  json classes = json::array();
  for (std::size_t i = 0; i < bg.group->classes().size(); ++i) {
    const auto& c = bg.group->classes()[i];
    classes.push_back({{"representative", bg.group->element(c.representative)},
                       {"size", c.size},
                       {"centralizer_order", c.centralizer_order},
                       {"element_order", c.representative_order}});
  }
  json values = json::array();
  for (const auto& rep : bg.reps) {
    InertiaClass ch = model.orbch(rep);
    std::vector<Cyclotomic> v;
    for (std::size_t i = 0; i < ch.size(); ++i) v.push_back(ch.scalar(i));
    values.push_back(string_list(v));
    r.check("value at identity is the dimension", std::to_string(rep.dim()), v.front().to_string());
  }
  r.results()["classes"] = classes;
  r.results()["orbch"] = values.size() == 1 ? values[0] : values;
}

void bg_orthogonality(const Options& o, Report& r) {
  auto bg = load_bg(o, 1, r);
  BGInertia model(bg.group);
  json gram = json::array();
  bool identity = true;
  for (std::size_t i = 0; i < bg.reps.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < bg.reps.size(); ++j) {
      Rational v = bg_euler_pairing(model, bg.reps[i], bg.reps[j]);
      row.push_back(v.to_string());
      std::size_t oracle = hom_fixed_dim_oracle(bg.reps[i], bg.reps[j]);
      if (v != Rational(static_cast<long>(oracle)))
        r.check("pairing(" + std::to_string(i) + "," + std::to_string(j) + ") equals Hom oracle",
                std::to_string(oracle), v.to_string());
      identity = identity && v == Rational(i == j ? 1 : 0);
    }
    gram.push_back(row);
  }
  r.results()["gram"] = gram;
  r.results()["orthonormal"] = identity;
  r.check("Gram matrix is the identity", identity, identity ? "orthonormal" : "not orthonormal");
}

// ---- transforms ----------------------------------------------------------------

std::vector<Cyclotomic> parse_coeffs(const Options& o) {
  if (o.n == 0) throw UsageError("--n must be positive");
  if (o.coeffs.size() != o.n) throw UsageError("--coeffs needs exactly n entries");
  std::vector<Cyclotomic> v;
  for (const auto& s : o.coeffs) v.push_back(parse_cyclotomic(s));
  return v;
}

void transform(const Options& o, Report& r, bool inverse) {
  auto v = parse_coeffs(o);
  r.inputs()["n"] = o.n;
  r.inputs()["coeffs"] = string_list(v);
  r.inputs()["inverse"] = inverse;
  auto out = inverse ? idft(o.n, v) : dft(o.n, v);
  auto back = inverse ? dft(o.n, out) : idft(o.n, out);
  r.results()["values"] = string_list(out);
  r.check("round trip restores the input", string_list(v).dump(), string_list(back).dump());
}

void parseval_cmd(const Options& o, Report& r) {
  if (o.n == 0) throw UsageError("--n must be positive");
  if (o.f.size() != o.n || o.g.size() != o.n) throw UsageError("--f and --g need exactly n entries");
  r.inputs()["n"] = o.n;
  r.inputs()["f"] = o.f;
  r.inputs()["g"] = o.g;
  auto res = parseval_check(o.n, o.f, o.g);
  r.results()["euler_pairing"] = res.lhs.to_string();
  r.results()["weighted_inner_product"] = res.rhs.to_string();
  r.check("Parseval identity", res.lhs.to_string(), res.rhs.to_string());
}

// ---- mukai -------------------------------------------------------------------

template <class M>
json isometry_row(const M& model, const typename M::KElement& a, const typename M::KElement& b, const std::string& x,
                  const std::string& y, Report& r) {
  auto res = verify_isometry(model, a, b);
  r.check("chi(" + x + ", " + y + ")", res.lhs.to_string(), res.rhs.to_string());
  return {{"x", x}, {"y", y}, {"lhs", res.lhs.to_string()}, {"rhs", res.rhs.to_string()}, {"pass", res.pass}};
}

void mukai_verify(const Options& o, Report& r) {
  r.inputs()["model"] = o.model;
  json pairs = json::array();
  if (o.model == "wps") {
    WPS w = load_wps(o, r);
    if (o.xmax < 0) throw UsageError("--xmax must be nonnegative");
    r.inputs()["xmax"] = o.xmax;
    for (long i = 0; i <= o.xmax; ++i)
      for (long j = 0; j <= o.xmax; ++j)
        pairs.push_back(isometry_row(w, w.line(i), w.line(j), "x^" + std::to_string(i), "x^" + std::to_string(j), r));
  } else if (o.model == "bg") {
    auto bg = load_bg(o, 1, r);
    BGInertia model(bg.group);
    for (std::size_t i = 0; i < bg.reps.size(); ++i)
      for (std::size_t j = 0; j < bg.reps.size(); ++j)
        pairs.push_back(isometry_row(model, bg.reps[i], bg.reps[j], o.reps[i], o.reps[j], r));
  } else if (o.model == "bmu") {
    if (o.n == 0) throw UsageError("--n must be positive for the bmu model");
    r.inputs()["n"] = o.n;
    BGInertia model(catalog::cyclic_group(o.n));
    for (long i = 0; i < static_cast<long>(o.n); ++i)
      for (long j = 0; j < static_cast<long>(o.n); ++j)
        pairs.push_back(isometry_row(model, catalog::cyclic_character(model.group(), i),
                                     catalog::cyclic_character(model.group(), j), "x^" + std::to_string(i),
                                     "x^" + std::to_string(j), r));
  } else {
    throw UsageError("--model must be wps, bg or bmu");
  }
  r.results()["pairs"] = pairs;
}

void mukai_pairing_cmd(const Options& o, Report& r) {
  r.inputs()["model"] = o.model;
  json row;
  if (o.model == "wps") {
    WPS w = load_wps(o, r);
    r.inputs()["x"] = o.x;
    r.inputs()["y"] = o.y;
    KClass x = parse_kclass(w.kring(), o.x), y = parse_kclass(w.kring(), o.y);
    Cyclotomic lhs = hrr_integral(w, x.dual() * y);
    Cyclotomic rhs = mukai_pairing(w, mukai_vector(w, x), mukai_vector(w, y));
    r.check("chi(x, y) equals the Mukai pairing", lhs.to_string(), rhs.to_string());
    row = {{"x", o.x}, {"y", o.y}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"pass", lhs == rhs}};
    InertiaClass vx = mukai_vector(w, x);
    r.results()["mukai_vector_x"] = json::array();
    for (const auto& c : vx.components()) r.results()["mukai_vector_x"].push_back(c.to_string());
  } else if (o.model == "bg") {
    auto bg = load_bg(o, 2, r);
    if (bg.reps.size() != 2) throw UsageError("pairing takes exactly two --rep files");
    BGInertia model(bg.group);
    row = isometry_row(model, bg.reps[0], bg.reps[1], o.reps[0], o.reps[1], r);
  } else {
    throw UsageError("--model must be wps or bg");
  }
  r.results()["pair"] = row;
}

// ---- selftest ----------------------------------------------------------------

void selftest(const Options& o, Report& r) {
  r.inputs()["seed"] = std::to_string(o.seed);
  json criteria = json::array();
  for (const auto& c : acceptance::run_all(o.seed)) {
    criteria.push_back({{"id", c.id},
                        {"name", c.name},
                        {"checks", c.checks},
                        {"failures", c.failures},
                        {"pass", c.pass},
                        {"line", acceptance::format_line(c)}});
    r.check("criterion " + std::to_string(c.id) + ": " + c.name, c.pass, c.detail.empty() ? "ok" : c.detail);
  }
  r.results()["criteria"] = criteria;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orbifold Riemann-Roch computations on weighted projective stacks and classifying stacks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--approx", o.approx, "Append floating-point renderings of exact values");

  auto weights = [&](CLI::App* s) {
    s->add_option("--weights", o.weights, "Comma-separated positive weights")->delimiter(',')->required();
  };
  auto bg_inputs = [&](CLI::App* s) {
    s->add_option("--group", o.group, "Group JSON file");
    s->add_option("--rep", o.reps, "Representation JSON file (repeatable)");
  };

  std::string command;
  std::function<void(const Options&, Report&)> action;
  auto bind = [&](CLI::App* s, std::string name, std::function<void(const Options&, Report&)> fn) {
    s->fallthrough();
    s->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };

  auto* wps = app.add_subcommand("wps", "Weighted projective stacks P(a_0, ..., a_n)");
  wps->require_subcommand(1);
  wps->fallthrough();
  auto* inertia = wps->add_subcommand("inertia", "List inertia sectors");
  weights(inertia);
  bind(inertia, "wps inertia", wps_inertia);
  auto* chi = wps->add_subcommand("chi", "Euler characteristic of O(d) or of a K-class with sector contributions");
  weights(chi);
  chi->add_option("--d", o.d, "Degree of the line bundle O(d)");
  chi->add_option("--class", o.klass, "K-class as a Laurent polynomial in x, overrides --d");
  bind(chi, "wps chi", wps_chi);
  auto* hrr = wps->add_subcommand("hrr-verify", "Compare HRR with monomial counts for a range of degrees");
  weights(hrr);
  hrr->add_option("--dmin", o.dmin, "Smallest degree");
  hrr->add_option("--dmax", o.dmax, "Largest degree");
  bind(hrr, "wps hrr-verify", wps_hrr_verify);
  auto* kring = wps->add_subcommand("kring", "Presentation of the K-ring");
  weights(kring);
  bind(kring, "wps kring", wps_kring);
  auto* orbtd = wps->add_subcommand("orbtd", "Sector Todd classes, twisted Euler classes and orbtd");
  weights(orbtd);
  bind(orbtd, "wps orbtd", wps_orbtd_cmd);

  auto* bg = app.add_subcommand("bg", "Classifying stacks BG of finite permutation groups");
  bg->require_subcommand(1);
  bg->fallthrough();
  auto* bg_chi = bg->add_subcommand("euler-char", "Euler characteristic of representations");
  bg_inputs(bg_chi);
  bind(bg_chi, "bg euler-char", bg_euler_char_cmd);
  auto* bg_pair = bg->add_subcommand("pairing", "Euler pairing of two representations");
  bg_inputs(bg_pair);
  bind(bg_pair, "bg pairing", bg_pairing_cmd);
  auto* bg_ch = bg->add_subcommand("orbch", "Orbifold Chern character (class function)");
  bg_inputs(bg_ch);
  bind(bg_ch, "bg orbch", bg_orbch_cmd);
  auto* bg_orth = bg->add_subcommand("verify-orthogonality", "Gram matrix of the Euler pairing");
  bg_inputs(bg_orth);
  bind(bg_orth, "bg verify-orthogonality", bg_orthogonality);

  auto coeff_opts = [&](CLI::App* s) {
    s->add_option("--n", o.n, "Transform length")->required();
    s->add_option("--coeffs", o.coeffs, "Comma-separated cyclotomic values")->delimiter(',')->required();
  };
  auto* dft_cmd = app.add_subcommand("dft", "Discrete Fourier transform over Q(zeta_n)");
  coeff_opts(dft_cmd);
  dft_cmd->add_flag("--inverse", o.inverse, "Apply the inverse transform");
  bind(dft_cmd, "dft", [](const Options& opt, Report& r) { transform(opt, r, opt.inverse); });
  auto* idft_cmd = app.add_subcommand("idft", "Inverse transform (orbifold Chern character of B mu_n)");
  coeff_opts(idft_cmd);
  bind(idft_cmd, "idft", [](const Options& opt, Report& r) { transform(opt, r, true); });
  auto* pars = app.add_subcommand("parseval", "Check Parseval on K(B mu_n)");
  pars->add_option("--n", o.n, "Group order")->required();
  pars->add_option("--f", o.f, "Comma-separated integers")->delimiter(',')->required();
  pars->add_option("--g", o.g, "Comma-separated integers")->delimiter(',')->required();
  bind(pars, "parseval", parseval_cmd);

  auto* mukai = app.add_subcommand("mukai", "Mukai vectors and the isometry formula");
  mukai->require_subcommand(1);
  mukai->fallthrough();
  auto* mverify = mukai->add_subcommand("verify", "Check chi(x, y) against the Mukai pairing on a basis");
  mverify->add_option("--model", o.model, "wps, bg or bmu")->check(CLI::IsMember({"wps", "bg", "bmu"}));
  mverify->add_option("--weights", o.weights, "Weights for the wps model")->delimiter(',');
  mverify->add_option("--xmax", o.xmax, "Largest power of x for the wps model");
  mverify->add_option("--n", o.n, "Order of mu_n for the bmu model");
  bg_inputs(mverify);
  bind(mverify, "mukai verify", mukai_verify);
  auto* mpair = mukai->add_subcommand("pairing", "Compare chi(x, y) with the Mukai pairing");
  mpair->add_option("--model", o.model, "wps or bg")->check(CLI::IsMember({"wps", "bg"}));
  mpair->add_option("--weights", o.weights, "Weights for the wps model")->delimiter(',');
  mpair->add_option("--x", o.x, "First K-class (wps)");
  mpair->add_option("--y", o.y, "Second K-class (wps)");
  bg_inputs(mpair);
  bind(mpair, "mukai pairing", mukai_pairing_cmd);

  auto* self = app.add_subcommand("selftest", "Run the full acceptance suite");
  self->add_option("--seed", o.seed, "Seed for the randomized criteria");
  bind(self, "selftest", selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  Report report(command);
  try {
    action(o, report);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  json doc = report.finish(start);
  if (o.approx) {
    json a = approximate(doc["results"], "results");
    doc["approx"] = a.is_null() ? json::object() : a;
  }
  emit(doc, o.format);
  return report.pass() ? EXIT_SUCCESS : kExitCheckFailed;
}
