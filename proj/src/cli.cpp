#include "uwk/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "uwk/jsonio.hpp"
#include "uwk/lifts.hpp"
#include "uwk/shapes.hpp"
#include "uwk/symideal.hpp"
#include "uwk/verify.hpp"

namespace uwk::cli {

namespace lat = uwk::lattice;
namespace eg = uwk::extgraph;
namespace wt = uwk::weights;
namespace ty = uwk::types;
using jsonio::Json;

namespace {

struct Options {
  std::string command;
  std::map<std::string, std::string> kv;
  bool text = false;

  bool has(const std::string& k) const { return kv.count(k) != 0; }
  const std::string& get(const std::string& k) const {
    auto it = kv.find(k);
    require(it != kv.end(), "missing required flag --" + k);
    return it->second;
  }
  std::string get_or(const std::string& k, const std::string& dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  }
};

Int parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    Int v = std::stoll(s, &pos);
    require(pos == s.size(), "malformed integer '" + s + "'");
    return v;
  } catch (const precondition_error&) {
    throw;
  } catch (const std::exception&) {
    throw precondition_error("malformed integer '" + s + "'");
  }
}

std::vector<uint8_t> parse_bits(const std::string& s, int want) {
  require(static_cast<int>(s.size()) == want,
          "expected a bitstring of length " + std::to_string(want));
  std::vector<uint8_t> b(want);
  for (int i = 0; i < want; ++i) {
    require(s[i] == '0' || s[i] == '1', "bitstring must use 0 and 1 only");
    b[i] = s[i] == '1';
  }
  return b;
}

std::vector<Int> parse_ints(const std::string& s) {
  std::vector<Int> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) out.push_back(parse_int(cur));
  return out;
}

std::vector<IntPair> parse_pairs(const std::string& s, int want_pairs) {
  std::vector<Int> flat = parse_ints(s);
  require(static_cast<int>(flat.size()) == 2 * want_pairs,
          "expected " + std::to_string(2 * want_pairs) + " comma-separated integers");
  std::vector<IntPair> out(want_pairs);
  for (int i = 0; i < want_pairs; ++i) out[i] = {flat[2 * i], flat[2 * i + 1]};
  return out;
}

ty::AdmissibleWord parse_word(const std::string& s, int f) {
  std::vector<ty::Letter> letters;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) {
    std::optional<ty::Letter> l = ty::letter_from_name(cur);
    require(l.has_value(), "unknown admissible letter '" + cur + "'");
    letters.push_back(*l);
  }
  if (static_cast<int>(letters.size()) == f) {
    std::vector<ty::Letter> both = letters;
    both.insert(both.end(), letters.begin(), letters.end());
    return ty::AdmissibleWord(std::move(both));
  }
  require(static_cast<int>(letters.size()) == 2 * f,
          "expected " + std::to_string(f) + " or " + std::to_string(2 * f) + " letters");
  return ty::AdmissibleWord(std::move(letters));
}

std::string bits_text(const std::vector<uint8_t>& b) {
  std::string s;
  for (uint8_t x : b) s += x ? '1' : '0';
  return s;
}

Json pairs_json(const std::vector<IntPair>& e) {
  Json a = Json::arr();
  for (const IntPair& x : e) a.push(Json::arr().push(Json::num(x[0])).push(Json::num(x[1])));
  return a;
}

Json weight_json(const wt::SerreWeightClass& w) {
  return Json::obj()
      .set("side", Json::str(w.side == lat::Side::unitary ? "unitary" : "double"))
      .set("rep", pairs_json(w.rep));
}

std::string weight_key(const wt::SerreWeightClass& w) { return "F(" + w.text() + ")"; }

Json presentation_json(const ty::DoubleTypePresentation& t) {
  return Json::obj()
      .set("s", Json::str(bits_text(t.s.bits)))
      .set("mu", pairs_json(t.mu.e))
      .set("p", Json::num(t.p))
      .set("f", Json::num(t.f));
}

Json word_json(const ty::AdmissibleWord& w) {
  Json a = Json::arr();
  for (ty::Letter l : w.letters) a.push(Json::str(ty::letter_name(l)));
  return a;
}

struct CommonInputs {
  Int p;
  int f;
};

CommonInputs parse_pf(const Options& opt) {
  Int p = parse_int(opt.get("p"));
  int f = static_cast<int>(parse_int(opt.get("f")));
  lat::Params params(p, f);  // validates
  return {params.p, params.f};
}

wt::TameParam parse_rho(const Options& opt, const CommonInputs& c, const char* mu_flag = "mu") {
  wt::TameParam rho;
  rho.p = c.p;
  rho.f = c.f;
  rho.s = lat::WeylElement(parse_bits(opt.get("s"), c.f));
  rho.mu = lat::UnitaryCharacter(parse_pairs(opt.get(mu_flag), c.f));
  return rho;
}

void emit(const Options& opt, std::ostream& out, const std::string& command, Json inputs,
          Json result) {
  if (opt.text) {
    out << command << "\n" << result.dump() << "\n";
    return;
  }
  Json env = Json::obj()
                 .set("command", Json::str(command))
                 .set("inputs", std::move(inputs))
                 .set("result", std::move(result));
  out << env.dump() << "\n";
}

int cmd_weights(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  wt::TameParam rho = parse_rho(opt, c);
  std::vector<wt::SerreWeightClass> pw = wt::predicted_weights(rho);
  Json arr = Json::arr();
  for (const auto& w : pw) arr.push(weight_json(w));
  Json inputs = Json::obj()
                    .set("p", Json::num(c.p))
                    .set("f", Json::num(c.f))
                    .set("s", Json::str(bits_text(rho.s.bits)))
                    .set("mu", pairs_json(rho.mu.e));
  emit(opt, out, "weights", std::move(inputs), Json::obj().set("weights", std::move(arr)));
  return 0;
}

int cmd_jh(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  lat::UnitaryCharacter mu(parse_pairs(opt.get("mu"), c.f));
  lat::WeylElement s(parse_bits(opt.get("s"), c.f));
  lat::WeylElement w(parse_bits(opt.get("w"), c.f));
  lat::UnitaryCharacter nu(parse_pairs(opt.get("nu"), c.f));
  wt::JhFactors r = wt::jh_factors(mu, s, w, nu, c.p);
  Json arr = Json::arr();
  for (const auto& x : r.factors) arr.push(weight_json(x));
  Json inputs = Json::obj()
                    .set("p", Json::num(c.p))
                    .set("f", Json::num(c.f))
                    .set("s", Json::str(bits_text(s.bits)))
                    .set("w", Json::str(bits_text(w.bits)))
                    .set("mu", pairs_json(mu.e))
                    .set("nu", pairs_json(nu.e));
  emit(opt, out, "jh", std::move(inputs),
       Json::obj().set("factors", std::move(arr)).set("type", presentation_json(r.tau)));
  return 0;
}

int cmd_types(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  lat::UnitaryCharacter mu(parse_pairs(opt.get("mu"), c.f));
  std::vector<ty::DoubleTypePresentation> ts = ty::types_containing_weight(mu, c.p);
  Json arr = Json::arr();
  for (const auto& t : ts) arr.push(presentation_json(t));
  Json inputs =
      Json::obj().set("p", Json::num(c.p)).set("f", Json::num(c.f)).set("mu", pairs_json(mu.e));
  emit(opt, out, "types", std::move(inputs), Json::obj().set("types", std::move(arr)));
  return 0;
}

int cmd_theta(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  wt::TameParam rho = parse_rho(opt, c);
  ty::ThetaAssignment th = ty::theta(rho);
  Json table = Json::obj();
  for (const auto& [sigma, word] : th.table) {
    std::string letters;
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) letters += ",";
      letters += ty::letter_name(word[i]);
    }
    table.set(weight_key(sigma), Json::str(letters));
  }
  Json inputs = Json::obj()
                    .set("p", Json::num(c.p))
                    .set("f", Json::num(c.f))
                    .set("s", Json::str(bits_text(rho.s.bits)))
                    .set("mu", pairs_json(rho.mu.e));
  emit(opt, out, "theta", std::move(inputs), std::move(table));
  return 0;
}

int cmd_shape(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  wt::TameParam rho = parse_rho(opt, c);
  ty::DoubleTypePresentation t;
  if (opt.has("w")) {
    t = ty::type_for_shape(rho, parse_word(opt.get("w"), c.f));
  } else {
    t.p = c.p;
    t.f = c.f;
    t.s = lat::DoubleWeylElement(parse_bits(opt.get("ts"), 2 * c.f));
    t.mu = lat::DoubleCharacter(parse_pairs(opt.get("tmu"), 2 * c.f));
  }
  std::optional<ty::AdmissibleWord> w = shapes::shape_of(rho, t);
  Json inputs = Json::obj()
                    .set("p", Json::num(c.p))
                    .set("f", Json::num(c.f))
                    .set("s", Json::str(bits_text(rho.s.bits)))
                    .set("mu", pairs_json(rho.mu.e))
                    .set("type", presentation_json(t));
  Json result = Json::obj();
  result.set("shape", w ? word_json(*w) : Json::null());
  emit(opt, out, "shape", std::move(inputs), std::move(result));
  return 0;
}

int cmd_match(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  wt::TameParam rho = parse_rho(opt, c);
  ty::AdmissibleWord word = parse_word(opt.get("shape"), c.f);
  std::vector<Int> omega = parse_ints(opt.get("omega"));
  require(static_cast<int>(omega.size()) == c.f, "expected f omega coordinates");
  eg::GraphVector om(omega, lat::Side::unitary);
  ty::DoubleTypePresentation t = ty::type_for_shape(rho, word);
  wt::SerreWeightClass sigma =
      eg::t_map(rho.mu, eg::weyl_act_graph(rho.s, om), rho.p);
  std::vector<shapes::ComponentLabel> labels = shapes::component_match(rho, t, sigma);
  Json larr = Json::arr(), lrev = Json::arr();
  for (int j = 0; j < c.f; ++j) larr.push(Json::str(shapes::label_name(labels[j])));
  for (int j = c.f - 1; j >= 0; --j) lrev.push(Json::str(shapes::label_name(labels[j])));
  Json inputs = Json::obj()
                    .set("p", Json::num(c.p))
                    .set("f", Json::num(c.f))
                    .set("s", Json::str(bits_text(rho.s.bits)))
                    .set("mu", pairs_json(rho.mu.e))
                    .set("shape", word_json(word))
                    .set("omega", [&] {
                      Json a = Json::arr();
                      for (Int x : omega) a.push(Json::num(x));
                      return a;
                    }());
  Json result = Json::obj()
                    .set("shape", word_json(word))
                    .set("weight", weight_json(sigma))
                    .set("labels", std::move(larr))            // graph coordinate j
                    .set("labels_reversed", std::move(lrev));  // presentation slot 2f-1-j
  emit(opt, out, "match", std::move(inputs), std::move(result));
  return 0;
}

int cmd_lift(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  wt::TameParam rho = parse_rho(opt, c, "nu");
  lat::UnitaryCharacter mu(parse_pairs(opt.get("mu"), c.f));
  lifts::LiftData data = lifts::make_lift_data(rho, mu);
  Json inputs = Json::obj()
                    .set("p", Json::num(c.p))
                    .set("f", Json::num(c.f))
                    .set("s", Json::str(bits_text(rho.s.bits)))
                    .set("nu", pairs_json(rho.mu.e))
                    .set("mu", pairs_json(mu.e));
  Json result = Json::obj()
                    .set("ht", pairs_json(data.ht_weights.e))
                    .set("v", Json::str(bits_text(data.v.bits)))
                    .set("alphas", pairs_json(data.alphas))
                    .set("a0", Json::arr().push(Json::num(data.a0[0])).push(Json::num(data.a0[1])))
                    .set("fl_range", Json::boolean(lifts::fl_range_check(data.ht_weights, c.p)));
  emit(opt, out, "lift", std::move(inputs), std::move(result));
  return 0;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  CommonInputs c = parse_pf(opt);
  ty::DoubleTypePresentation t1, t2;
  t1.p = t2.p = c.p;
  t1.f = t2.f = c.f;
  t1.s = lat::DoubleWeylElement(parse_bits(opt.get("s"), 2 * c.f));
  t1.mu = lat::DoubleCharacter(parse_pairs(opt.get("mu"), 2 * c.f));
  t2.s = lat::DoubleWeylElement(parse_bits(opt.get("s2"), 2 * c.f));
  t2.mu = lat::DoubleCharacter(parse_pairs(opt.get("mu2"), 2 * c.f));
  ty::EquivOutcome r = ty::equivalent_full(t1, t2);
  Json inputs = Json::obj()
                    .set("p", Json::num(c.p))
                    .set("f", Json::num(c.f))
                    .set("t1", presentation_json(t1))
                    .set("t2", presentation_json(t2));
  Json result =
      Json::obj().set("equivalent", Json::boolean(r.isomorphic)).set("generic", Json::boolean(r.generic));
  emit(opt, out, "equiv", std::move(inputs), std::move(result));
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  std::string suite = opt.get_or("suite", opt.get_or("positional", "all"));
  std::vector<polysym::MvPolynomial> extra;
  if (opt.has("table-file")) extra = polysym::parse_table_file(opt.get("table-file"));
  std::vector<verify::Check> checks;
  auto append = [&](std::vector<verify::Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (suite == "graph" || suite == "all") append(verify::suite_graph());
  if (suite == "types" || suite == "all") {
    Int p = parse_int(opt.get_or("p", "7"));
    int f = static_cast<int>(parse_int(opt.get_or("f", "1")));
    append(verify::suite_types(p, f));
  }
  if (suite == "ideals" || suite == "all") append(verify::suite_ideals(extra));
  if (suite == "groups" || suite == "all") {
    Int p = parse_int(opt.get_or("p", "3"));
    int f = static_cast<int>(parse_int(opt.get_or("f", "1")));
    append(verify::suite_groups(p, f));
  }
  require(!checks.empty(), "unknown suite '" + suite + "'");
  int failed = 0;
  for (const verify::Check& c : checks)
    if (!c.pass) ++failed;
  if (opt.text) {
    for (const verify::Check& c : checks) {
      out << (c.pass ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << "\n";
    }
    out << "passed " << (checks.size() - failed) << "/" << checks.size() << "\n";
  } else {
    Json arr = Json::arr();
    for (const verify::Check& c : checks) {
      Json j = Json::obj().set("name", Json::str(c.name)).set("pass", Json::boolean(c.pass));
      if (!c.detail.empty()) j.set("detail", Json::str(c.detail));
      arr.push(std::move(j));
    }
    Json env = Json::obj()
                   .set("command", Json::str("verify"))
                   .set("suite", Json::str(suite))
                   .set("checks", std::move(arr))
                   .set("passed", Json::num(static_cast<Int>(checks.size()) - failed))
                   .set("failed", Json::num(failed));
    out << env.dump() << "\n";
  }
  return failed == 0 ? 0 : 1;
}

const char* kUsage =
    "usage: uwk <command> [flags]\n"
    "commands: weights jh types theta shape match lift equiv verify\n"
    "flags: --p --f --s --mu --nu --w --shape --omega --suite --table-file\n"
    "       --s2 --mu2 --ts --tmu --config FILE --json --text\n";

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    opt.command = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--json") {
        opt.text = false;
      } else if (a == "--text") {
        opt.text = true;
      } else if (a.rfind("--", 0) == 0) {
        std::string key = a.substr(2);
        require(i + 1 < args.size(), "flag --" + key + " needs a value");
        opt.kv[key] = args[++i];
      } else if (!opt.kv.count("positional")) {
        opt.kv["positional"] = a;
      } else {
        throw precondition_error("unexpected argument '" + a + "'");
      }
    }
    if (opt.has("config")) {
      std::ifstream in(opt.get("config"));
      require(in.good(), "cannot open config file " + opt.get("config"));
      std::string line;
      while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string k = line.substr(0, eq), v = line.substr(eq + 1);
        auto trim = [](std::string& s) {
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        trim(k);
        trim(v);
        if (!k.empty() && !opt.kv.count(k)) opt.kv[k] = v;
      }
    }

    if (opt.command == "weights") return cmd_weights(opt, out);
    if (opt.command == "jh") return cmd_jh(opt, out);
    if (opt.command == "types") return cmd_types(opt, out);
    if (opt.command == "theta") return cmd_theta(opt, out);
    if (opt.command == "shape") return cmd_shape(opt, out);
    if (opt.command == "match") return cmd_match(opt, out);
    if (opt.command == "lift") return cmd_lift(opt, out);
    if (opt.command == "equiv") return cmd_equiv(opt, out);
    if (opt.command == "verify") return cmd_verify(opt, out);
    err << kUsage;
    return 2;
  } catch (const precondition_error& e) {
    out << Json::obj().set("error", Json::str(e.what())).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << Json::obj().set("error", Json::str(e.what())).dump() << "\n";
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace uwk::cli
