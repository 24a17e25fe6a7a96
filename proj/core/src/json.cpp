#include "omega/json.hpp"

namespace omega {

void to_json(json& j, const Factored& f) {
  json factors = json::array();
  for (const auto& pp : f.factors()) factors.push_back({pp.prime, pp.exponent});
  j = json{{"factors", factors}, {"text", f.to_string()}};
  if (auto v = f.value())
    j["value"] = *v;
  else
    j["value"] = nullptr;
}

void to_json(json& j, const GroupSpec& spec) {
  j = json{{"spec", to_string(spec)},
           {"family", std::string(family_name(spec.family))},
           {"rank", spec.rank},
           {"q", spec.q},
           {"p", spec.p},
           {"k", spec.k},
           {"version", spec.version == Version::Universal ? "universal" : "simple"},
           {"name", display_name(spec)}};
}

void to_json(json& j, const SpectrumDescriptor& desc) {
  j = json{{"generators", desc.generators()}, {"scope", std::string(to_string(desc.scope()))}};
  j["context"] = desc.context() ? json(to_string(*desc.context())) : json(nullptr);
  if (!desc.note().empty()) j["note"] = desc.note();
}

void to_json(json& j, const CharacteristicSplit& split) {
  j = json{{"p_exponent", split.p_exponent}, {"p_prime", split.p_prime}, {"mixed", split.mixed}};
}

void to_json(json& j, const PrimeGraph& graph) {
  json edges = json::array();
  for (auto [r, t] : graph.edges()) edges.push_back({r, t});
  j = json{{"vertices", graph.vertices()}, {"edges", edges}, {"components", graph.components()}};
}

void to_json(json& j, const GcdCheck& check) {
  j = json{{"identity", to_string(check.identity)},
           {"q", check.q},
           {"lhs", check.lhs},
           {"rhs", check.rhs},
           {"pass", check.pass()}};
  if (check.identity == GcdIdentity::kSp) {
    j["n"] = check.n;
    j["epsilon"] = check.epsilon;
  }
}

void to_json(json& j, const Matrix& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (unsigned c = 0; c < m.dim(); ++c) row.push_back(m.at(i, c));
    rows.push_back(row);
  }
  j = json{{"field", m.field()->name()}, {"dim", m.dim()}, {"rows", rows}};
}

json histogram_json(const std::map<u64, u64>& histogram) {
  json h = json::object();
  for (auto [k, v] : histogram) h[std::to_string(k)] = v;
  return h;
}

void to_json(json& j, const ElementTable& table) {
  j = json{{"size", table.size}, {"order_histogram", histogram_json(table.order_histogram)}, {"spectrum", table.spectrum}};
}

void to_json(json& j, const CosetWitness& w) {
  j = json{{"s", w.s}, {"s_image", w.image}, {"v", w.v}, {"s_order", w.s_order}, {"order", w.order}};
}

void to_json(json& j, const SemidirectResult& result) {
  json witnesses = json::object();
  for (const auto& [order, w] : result.witnesses) witnesses[std::to_string(order)] = w;
  j = json{{"r", result.r}, {"source", result.source}, {"extension", result.table}, {"witnesses", witnesses}};
}

void to_json(json& j, const FrobeniusWitness& w) {
  j = json{{"family", std::string(to_string(w.kind))},
           {"n", w.n},
           {"q", w.q},
           {"ambient", to_string(w.ambient)},
           {"kernel_generators", w.kernel_gens},
           {"complement_generators", w.complement_gens},
           {"kernel_order", w.kernel_order},
           {"complement_order", w.complement_order}};
  if (w.kind == FrobeniusKind::SlLine) j["k"] = w.k;
}

void to_json(json& j, const FrobeniusVerdict& v) {
  j = json{{"pass", v.pass},
           {"kernel_order", v.kernel_order},
           {"complement_order", v.complement_order},
           {"complement_cyclic", v.complement_cyclic}};
  if (!v.pass) j["reason"] = v.reason;
  if (v.counterexample) j["counterexample"] = json::array({v.counterexample->first, v.counterexample->second});
}

json u128_json(const std::optional<u128>& v) { return v ? json(to_string(*v)) : json(nullptr); }

SpectrumDescriptor descriptor_from_json(const json& j) {
  const auto scope = parse_spectrum_scope(j.at("scope").get<std::string>());
  const auto gens = j.at("generators").get<std::vector<u64>>();
  if (gens.empty()) return empty_descriptor(scope);
  return canonicalize(gens, scope);
}

}  // namespace omega
