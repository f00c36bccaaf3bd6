#include "hardy/json_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "hardy/error.hpp"

namespace hardy {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

template <typename W>
json verdict_json(const Verdict<W>& v, json witness) {
  json out;
  out["verdict"] = v.yes;
  out["witness"] = v.witness ? std::move(witness) : json(nullptr);
  out["violation"] = v.yes ? json(nullptr) : json(v.violation);
  return out;
}

template <typename W, typename F>
Verdict<W> verdict_from(const json& j, F&& witness) {
  Verdict<W> v;
  v.yes = j.at("verdict").get<bool>();
  if (!j.at("witness").is_null()) v.witness = witness(j.at("witness"));
  if (!j.at("violation").is_null()) v.violation = j.at("violation").get<std::string>();
  return v;
}

json optional_residual(const std::optional<double>& r) {
  return r ? residual_to_json(*r) : json(nullptr);
}

std::optional<double> optional_residual_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return residual_from_json(j.at(key));
}

json complex_list(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx z : v) out.push_back(to_json(z));
  return out;
}

std::vector<cplx> complex_list_from(const json& j) {
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1.0 : 1.0;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, power] = term();
      terms_[power] += sign * coeff;
      skip_space();
    }
    int top = terms_.empty() ? 0 : terms_.rbegin()->first;
    std::vector<cplx> c(static_cast<std::size_t>(top) + 1);
    for (const auto& [k, v] : terms_) c[static_cast<std::size_t>(k)] = v;
    return Poly(std::move(c));
  }

 private:
  std::pair<cplx, int> term() {
    cplx coeff = 1.0;
    bool have_coeff = false;
    if (!at_end() && peek() != 'z') {
      coeff = coefficient();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        skip_space();
        if (at_end() || peek() != 'z') fail("expected 'z' after '*'");
      }
    }
    if (!at_end() && peek() == 'z') {
      get();
      skip_space();
      int power = 1;
      if (!at_end() && peek() == '^') {
        get();
        skip_space();
        power = integer();
      }
      return {coeff, power};
    }
    if (!have_coeff) fail("expected a term");
    return {coeff, 0};
  }

  cplx coefficient() {
    if (peek() == '(') {
      get();
      skip_space();
      cplx sum = 0.0;
      bool first = true;
      while (!at_end() && peek() != ')') {
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
          sign = get() == '-' ? -1.0 : 1.0;
          skip_space();
        } else if (!first) {
          fail("expected '+' or '-' inside parentheses");
        }
        first = false;
        sum += sign * literal();
        skip_space();
      }
      if (at_end()) fail("missing ')'");
      get();
      return sum;
    }
    return literal();
  }

  /// a, bi, or i
  cplx literal() {
    if (!at_end() && peek() == 'i') {
      get();
      return {0.0, 1.0};
    }
    const double v = number();
    skip_space();
    if (!at_end() && peek() == 'i') {
      get();
      return {0.0, v};
    }
    return {v, 0.0};
  }

  double number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  int integer() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr == begin || v < 0) fail("expected a non-negative exponent");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    bad("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
        std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<int, cplx> terms_;
};

}  // namespace

json to_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("complex scalar must be [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const cplx c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_array()) bad("polynomial must be a coefficient list or a string");
  std::vector<cplx> c;
  for (const auto& e : j) c.push_back(complex_from_json(e));
  return Poly(std::move(c));
}

json to_json(const SymbolPair& s) { return {{"psi0", to_json(s.psi0)}, {"psi1", to_json(s.psi1)}}; }

SymbolPair symbols_from_json(const json& j) {
  if (!j.is_object() || !j.contains("psi0") || !j.contains("psi1"))
    bad("symbols need \"psi0\" and \"psi1\"");
  return {poly_from_json(j.at("psi0")), poly_from_json(j.at("psi1"))};
}

json to_json(const ConjugationSpec& c) {
  if (const auto* ab = std::get_if<CAlphaBeta>(&c))
    return {{"kind", "C"}, {"alpha", to_json(ab->alpha())}, {"beta", to_json(ab->beta())}};
  const auto& jb = std::get<JBetaLambda>(c);
  return {{"kind", "J"}, {"beta", to_json(jb.beta())}, {"lambda", to_json(jb.lambda())}};
}

ConjugationSpec conjugation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("conjugation needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "C")
    return CAlphaBeta(complex_from_json(j.at("alpha")), complex_from_json(j.at("beta")));
  if (kind == "J")
    return JBetaLambda(complex_from_json(j.at("beta")), complex_from_json(j.at("lambda")));
  bad("conjugation kind must be \"C\" or \"J\", got \"" + kind + "\"");
}

json to_json(const ClassificationReport& r) {
  json out;
  out["hermitian"] = verdict_json(
      r.hermitian, r.hermitian.witness
                       ? json{{"a", to_json(cplx{r.hermitian.witness->a, 0.0})},
                              {"b", to_json(r.hermitian.witness->b)},
                              {"c", to_json(cplx{r.hermitian.witness->c, 0.0})}}
                       : json(nullptr));
  json c = verdict_json(r.c_selfadjoint,
                        r.c_selfadjoint.witness ? json{{"a", to_json(r.c_selfadjoint.witness->a)},
                                                       {"b", to_json(r.c_selfadjoint.witness->b)},
                                                       {"c", to_json(r.c_selfadjoint.witness->c)}}
                                                : json(nullptr));
  c["beta"] = to_json(r.beta);
  out["c_selfadjoint"] = std::move(c);
  if (r.j_selfadjoint && r.lambda) {
    const auto& v = *r.j_selfadjoint;
    json jj = verdict_json(v, v.witness ? json{{"a", to_json(v.witness->a)},
                                              {"b", to_json(v.witness->b)},
                                              {"c", to_json(v.witness->c)},
                                              {"d", to_json(v.witness->d)}}
                                        : json(nullptr));
    jj["lambda"] = to_json(*r.lambda);
    out["j_selfadjoint"] = std::move(jj);
  } else {
    out["j_selfadjoint"] = nullptr;
  }
  out["numeric_residual"] = optional_residual(r.numeric_residual);
  out["j_residual"] = optional_residual(r.j_residual);
  return out;
}

ClassificationReport classification_from_json(const json& j) {
  ClassificationReport r;
  r.hermitian = verdict_from<HermitianWitness>(j.at("hermitian"), [](const json& w) {
    return HermitianWitness{complex_from_json(w.at("a")).real(), complex_from_json(w.at("b")),
                            complex_from_json(w.at("c")).real()};
  });
  const auto& c = j.at("c_selfadjoint");
  r.beta = complex_from_json(c.at("beta"));
  r.c_selfadjoint = verdict_from<CWitness>(c, [](const json& w) {
    return CWitness{complex_from_json(w.at("a")), complex_from_json(w.at("b")),
                    complex_from_json(w.at("c"))};
  });
  if (!j.at("j_selfadjoint").is_null()) {
    const auto& jj = j.at("j_selfadjoint");
    r.lambda = complex_from_json(jj.at("lambda"));
    r.j_selfadjoint = verdict_from<JWitness>(jj, [](const json& w) {
      return JWitness{complex_from_json(w.at("a")), complex_from_json(w.at("b")),
                      complex_from_json(w.at("c")), complex_from_json(w.at("d"))};
    });
  }
  r.numeric_residual = optional_residual_from(j, "numeric_residual");
  r.j_residual = optional_residual_from(j, "j_residual");
  return r;
}

json to_json(const SpectrumResult& r) {
  return {{"zero", to_json(r.zero)},
          {"candidates", complex_list(r.eigenvalues)},
          {"adjoint", complex_list(r.adjoint_eigenvalues)},
          {"numeric", complex_list(r.numeric_eigenvalues)},
          {"pairing_max_distance", r.pairing_max_distance}};
}

SpectrumResult spectrum_from_json(const json& j) {
  SpectrumResult r;
  r.zero = complex_from_json(j.at("zero"));
  r.eigenvalues = complex_list_from(j.at("candidates"));
  r.adjoint_eigenvalues = complex_list_from(j.at("adjoint"));
  r.numeric_eigenvalues = complex_list_from(j.at("numeric"));
  for (const cplx c : r.eigenvalues) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx e : r.numeric_eigenvalues) best = std::min(best, std::abs(c - e));
    r.pairing_distances.push_back(best);
  }
  r.pairing_max_distance = j.at("pairing_max_distance").get<double>();
  return r;
}

json to_json(const OperatorMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (const cplx z : m.entries.row(i)) row.push_back(to_json(z));
    rows.push_back(std::move(row));
  }
  return {{"n", m.dim() == 0 ? 0 : m.dim() - 1},
          {"origin", m.origin == MatrixOrigin::Truncation ? "truncation" : "numeric"},
          {"entries", std::move(rows)},
          {"spill", {{"count", m.spill.count}, {"max_modulus", m.spill.max_modulus}}}};
}

OperatorMatrix matrix_from_json(const json& j) {
  OperatorMatrix m;
  const auto& rows = j.at("entries");
  const std::size_t n = rows.size();
  m.entries = CMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) bad("matrix rows must be square");
    for (std::size_t k = 0; k < n; ++k) m.entries(i, k) = complex_from_json(rows[i][k]);
  }
  const auto origin = j.at("origin").get<std::string>();
  m.origin = origin == "numeric" ? MatrixOrigin::NumericAdjoint : MatrixOrigin::Truncation;
  m.spill.count = j.at("spill").at("count").get<std::size_t>();
  m.spill.max_modulus = j.at("spill").at("max_modulus").get<double>();
  return m;
}

json residual_to_json(double r) { return std::isfinite(r) ? json(r) : json("inf"); }

double residual_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  if (!j.is_number()) bad("residual must be a number or \"inf\"");
  return j.get<double>();
}

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace hardy
