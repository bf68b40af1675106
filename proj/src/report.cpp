#include "anyonlab/report.hpp"

#include <numeric>

#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

nlohmann::json vec_json(LatticeVector v) { return nlohmann::json::array({v.x, v.y}); }

nlohmann::json presentation_json(const std::pair<LatticeVector, LatticeVector>& p) {
  return nlohmann::json::array({vec_json(p.first), vec_json(p.second)});
}

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

bool TorusRecord::all_pass() const {
  if (!checks) return true;
  const auto& c = *checks;
  if (c.rank_oracle && *c.rank_oracle != k) return false;
  if (c.koszul && *c.koszul != k) return false;
  if (c.kernel_dim && 2 * *c.kernel_dim != k) return false;
  if (c.gcd_reduction && !*c.gcd_reduction) return false;
  return true;
}

std::string anyon_count(std::size_t q) {
  std::string digits = "1";  // little-endian decimal
  for (std::size_t i = 0; i < 2 * q; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      const int v = (d - '0') * 2 + carry;
      d = static_cast<char>('0' + v % 10);
      carry = v / 10;
    }
    if (carry) digits.push_back(static_cast<char>('0' + carry));
  }
  return {digits.rbegin(), digits.rend()};
}

CodeReport analyze(const BBCode& code, const Caps& caps, bool with_size_sequences) {
  CodeReport r(code);
  const GroebnerBasis g = infinite_basis(code, MonomialOrder::elimination_x(), caps.groebner);
  r.topological = is_zero_dimensional(g);
  if (!r.topological) return r;
  r.q = quotient_dim(g);
  if (code.params()) r.closed_form = q_closed_form(*code.params());
  r.mv = mv_bound(code);
  r.periods = anyon_periods(code, caps.groebner);
  try {
    r.mobility = mobility_generators(code, caps.period, caps.groebner);
  } catch (const CapExceeded& e) {
    r.notes.push_back(std::string("mobility: ") + e.what());
  }
  if (with_size_sequences) {
    try {
      r.size_sequences = size_sequences(code, caps.size_sequence_period, caps.divisor_pairs, caps.groebner);
    } catch (const CapExceeded& e) {
      r.notes.push_back(std::string("size_sequences: ") + e.what());
    }
  }
  return r;
}

TorusRecord torus_record(const BBCode& code, TorusSpec t, bool verify, const Caps& caps) {
  TorusRecord r;
  r.size = t;
  r.n = static_cast<std::size_t>(2 * t.l * t.m);
  r.k = logical_count(code, t, caps.groebner);
  if (!verify) return r;
  TorusChecks c;
  try {
    c.rank_oracle = rank_oracle_k(code, t, caps.matrix);
    c.kernel_dim = subsystem_symmetry_kernel_dim(code, t, caps.matrix);
  } catch (const CapExceeded& e) {
    r.notes.push_back(std::string("matrix oracles: ") + e.what());
  }
  const GroebnerBasis g = infinite_basis(code, MonomialOrder::elimination_x(), caps.groebner);
  if (is_zero_dimensional(g)) {
    c.koszul = koszul_homology_dim(code, t, caps.groebner);
    c.gcd_reduction = gcd_reduction_check(code, t, anyon_periods(code, caps.groebner), caps.groebner);
  } else {
    r.notes.push_back("koszul and gcd_reduction need a topological code");
  }
  r.checks = c;
  return r;
}

nlohmann::json code_json(const BBCode& code) {
  nlohmann::json j;
  if (code.params()) {
    const auto& p = *code.params();
    j["params"] = {{"alpha_bar", p.alpha_bar}, {"beta_bar", p.beta_bar}, {"a", p.a}, {"b", p.b}};
  } else {
    j["params"] = nullptr;
  }
  j["f"] = print_poly(code.f());
  j["g"] = print_poly(code.g());
  j["label"] = code.label();
  return j;
}

nlohmann::json groebner_json(const GroebnerBasis& g) {
  nlohmann::json j;
  j["order"] = g.order.describe();
  nlohmann::json el = nlohmann::json::array();
  for (const auto& e : g.elements) el.push_back(print_affine(e, g.order));
  j["elements"] = el;
  return j;
}

nlohmann::json to_json(const TorusRecord& r) {
  nlohmann::json j;
  j["l"] = r.size.l;
  j["m"] = r.size.m;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.checks) {
    const auto& c = *r.checks;
    auto verdict = [&](const std::optional<std::size_t>& v, std::size_t expect) {
      return v ? nlohmann::json(*v == expect) : nlohmann::json(nullptr);
    };
    j["checks"] = {{"rank_oracle", verdict(c.rank_oracle, r.k)},
                   {"koszul", verdict(c.koszul, r.k)},
                   {"gcd_reduction", opt(c.gcd_reduction)},
                   {"kernel_dim", c.kernel_dim ? nlohmann::json(2 * *c.kernel_dim == r.k) : nlohmann::json(nullptr)}};
    j["oracle_values"] = {{"rank_oracle", opt(c.rank_oracle)}, {"koszul", opt(c.koszul)}, {"kernel_dim", opt(c.kernel_dim)}};
  } else {
    j["checks"] = nullptr;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

nlohmann::json to_json(const CodeReport& r) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["code"] = code_json(r.code);
  j["topological"] = r.topological;
  j["Q"] = opt(r.q);
  j["anyon_count"] = r.q ? nlohmann::json(anyon_count(*r.q)) : nlohmann::json(nullptr);
  if (r.closed_form) {
    const auto& c = *r.closed_form;
    const auto& p = c.params;
    j["q_closed_form"] = {{"value", c.q},
                          {"regime", quadrant_name(c.regime.quadrant) + ", " + c.regime.tag},
                          {"valid", c.valid},
                          {"canonical_params", {p.alpha_bar, p.beta_bar, p.a, p.b}}};
  } else {
    j["q_closed_form"] = nullptr;
  }
  j["mv_bound"] = opt(r.mv);
  j["k_max"] = r.q ? nlohmann::json(2 * *r.q) : nlohmann::json(nullptr);
  j["periods"] = r.periods ? nlohmann::json{{"l0", r.periods->l0}, {"m0", r.periods->m0}} : nlohmann::json(nullptr);
  if (r.mobility) {
    j["mobility"] = {{"x_presentation", presentation_json(r.mobility->x_presentation)},
                     {"y_presentation", presentation_json(r.mobility->y_presentation)},
                     {"x_text", print_generators(r.mobility->x_presentation)},
                     {"y_text", print_generators(r.mobility->y_presentation)}};
  } else {
    j["mobility"] = nullptr;
  }
  if (r.size_sequences) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : *r.size_sequences) arr.push_back({{"gcd_class", c.gcd_class}, {"k", c.k}});
    j["size_sequences"] = arr;
  } else {
    j["size_sequences"] = nullptr;
  }
  j["torus"] = r.torus ? to_json(*r.torus) : nlohmann::json(nullptr);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace anyonlab
