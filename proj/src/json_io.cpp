#include "bmf/json_io.hpp"

#include <fstream>

#include "bmf/error.hpp"

namespace bmf {

namespace {

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a list of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be a list of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double number_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw InputError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

json to_json(const Factorization& f) {
  json j;
  j["p"] = f.strands();
  if (f.all_half_twists()) {
    j["cuspidal"] = f.cuspidal();
    json factors = json::array();
    for (const auto& t : f.factors()) factors.push_back({{"q", t.conjugator().to_ints()}, {"rho", t.rho()}});
    j["factors"] = factors;
  } else {
    json words = json::array();
    for (const auto& w : f.words()) words.push_back(w.to_ints());
    j["words"] = words;
  }
  return j;
}

Factorization factorization_from_json(const json& j) {
  if (!j.is_object()) throw InputError("factorization must be a JSON object");
  const int p = int_field(j, "p");
  if (p < 1) throw InputError("strand count p must be positive");
  std::vector<Factor> factors;
  if (j.contains("factors")) {
    const json& fs = j.at("factors");
    if (!fs.is_array()) throw InputError("'factors' must be a list");
    for (const auto& t : fs) {
      factors.push_back(Factor::half_twist(BraidWord::from_ints(p, int_list(field(t, "q"), "q")),
                                           int_field(t, "rho")));
    }
    bool cuspidal = false;
    if (j.contains("cuspidal")) {
      if (!j.at("cuspidal").is_boolean()) throw InputError("'cuspidal' must be a boolean");
      cuspidal = j.at("cuspidal").get<bool>();
    }
    return Factorization(p, std::move(factors), cuspidal);
  }
  if (j.contains("words")) {
    const json& ws = j.at("words");
    if (!ws.is_array()) throw InputError("'words' must be a list");
    for (const auto& w : ws) factors.push_back(Factor::raw(BraidWord::from_ints(p, int_list(w, "word"))));
    return Factorization(p, std::move(factors));
  }
  throw InputError("factorization needs either 'factors' or 'words'");
}

json to_json(const MoveSequence& m) {
  json moves = json::array();
  for (const auto& s : m.steps) {
    moves.push_back({{"k", s.k}, {"dir", s.dir == MoveDirection::Forward ? "R" : "Rinv"}});
  }
  json j{{"moves", moves}};
  if (m.final_conjugator) j["conj"] = m.final_conjugator->to_ints();
  return j;
}

MoveSequence moves_from_json(const json& j, int strands) {
  MoveSequence m;
  const json* list = &j;
  if (j.is_object()) {
    list = &field(j, "moves");
    if (j.contains("conj")) m.final_conjugator = BraidWord::from_ints(strands, int_list(j.at("conj"), "conj"));
  }
  if (!list->is_array()) throw InputError("moves must be a list");
  for (const auto& s : *list) {
    const int k = int_field(s, "k");
    const json& d = field(s, "dir");
    if (!d.is_string()) throw InputError("move 'dir' must be \"R\" or \"Rinv\"");
    const std::string dir = d.get<std::string>();
    if (dir == "R") {
      m.steps.push_back({k, MoveDirection::Forward});
    } else if (dir == "Rinv") {
      m.steps.push_back({k, MoveDirection::Backward});
    } else {
      throw InputError("move 'dir' must be \"R\" or \"Rinv\", got \"" + dir + "\"");
    }
  }
  return m;
}

json to_json(const BivariatePoly& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"i", t.i}, {"j", t.j}, {"re", t.c.real()}, {"im", t.c.imag()}});
  }
  return {{"terms", terms}};
}

BivariatePoly polynomial_from_json(const json& j) {
  const json& ts = field(j, "terms");
  if (!ts.is_array()) throw InputError("'terms' must be a list");
  std::vector<Term> terms;
  for (const auto& t : ts) {
    const double im = t.is_object() && t.contains("im") ? number_field(t, "im") : 0.0;
    terms.push_back({int_field(t, "i"), int_field(t, "j"), cplx(number_field(t, "re"), im)});
  }
  return BivariatePoly(terms);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace bmf
