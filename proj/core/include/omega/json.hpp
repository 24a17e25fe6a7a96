// JSON encodings of the domain types. Objects use sorted keys, so equal
// values always serialise to identical text. Integers that may exceed 64
// bits are written as decimal strings.

#ifndef OMEGA_JSON_HPP_
#define OMEGA_JSON_HPP_

#include <nlohmann/json.hpp>

#include "omega/arith.hpp"
#include "omega/frobenius.hpp"
#include "omega/groups.hpp"
#include "omega/matrix_group.hpp"
#include "omega/module.hpp"
#include "omega/spectra.hpp"

namespace omega {

using json = nlohmann::json;

void to_json(json& j, const Factored& f);
void to_json(json& j, const GroupSpec& spec);
void to_json(json& j, const SpectrumDescriptor& desc);
void to_json(json& j, const CharacteristicSplit& split);
void to_json(json& j, const PrimeGraph& graph);
void to_json(json& j, const GcdCheck& check);
void to_json(json& j, const Matrix& m);
void to_json(json& j, const ElementTable& table);
void to_json(json& j, const CosetWitness& w);
void to_json(json& j, const SemidirectResult& result);
void to_json(json& j, const FrobeniusWitness& w);
void to_json(json& j, const FrobeniusVerdict& v);

/// Decimal string of a 128-bit value, or null.
json u128_json(const std::optional<u128>& v);

/// Map with integer keys written as {"key": value} using decimal keys.
json histogram_json(const std::map<u64, u64>& histogram);

/// Inverse of to_json for descriptors (generators and scope only).
SpectrumDescriptor descriptor_from_json(const json& j);

}  // namespace omega

#endif  // OMEGA_JSON_HPP_
