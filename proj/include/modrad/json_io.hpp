#ifndef MODRAD_JSON_IO_HPP
#define MODRAD_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "modrad/symmod.hpp"

namespace modrad::json_io {

using json = nlohmann::ordered_json;

/// Numbers that fit int64 are emitted as JSON numbers, anything larger as a
/// decimal string; parsing accepts both forms.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json ring_to_json(const rings::RingDescriptor& r);
rings::RingDescriptor ring_from_json(const json& j);

json ideal_to_json(const rings::IdealDescriptor& i);
rings::IdealDescriptor ideal_from_json(const rings::RingDescriptor& ring, const json& j);

json prime_set_to_json(const rings::PrimeSet& s);
rings::PrimeSet prime_set_from_json(const rings::RingDescriptor& ring, const json& j);

json module_to_json(const ModuleHandle& m);
ModuleHandle module_from_json(const json& j);
ModuleHandle module_from_string(const std::string& text);

/// Submodule generators {"gens":[[...],...]} resolved against a parent.
fgmod::Submodule submodule_from_json(const fgmod::FinPresModule& parent, const json& j);
json submodule_to_json(const fgmod::Submodule& n);

json lattice_to_json(const exactlin::IntegerLattice& l);

json certificate_to_json(const fgmod::PropertyCertificate& c);
json realized_to_json(const rings::RealizedPrimes& r);

json parse(const std::string& text);  // throws ParseError

}  // namespace modrad::json_io

#endif  // MODRAD_JSON_IO_HPP
