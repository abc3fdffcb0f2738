#ifndef VFCERT_JSON_IO_HPP
#define VFCERT_JSON_IO_HPP

#include <json.hpp>

#include "vfcert/certifier.hpp"
#include "vfcert/darboux.hpp"
#include "vfcert/projective.hpp"
#include "vfcert/prolongation.hpp"

namespace vfcert {

using json = nlohmann::json;

json to_json(const VectorField& v);
VectorField vectorfield_from_json(const json& j);

json to_json(const HomogeneousField& h);
HomogeneousField homogeneous_from_json(const json& j);

json to_json(const Ideal& i);
Ideal ideal_from_json(const json& j);

json oneform_to_json(const std::vector<std::string>& vars, const OneForm& w);
OneForm oneform_from_json(const json& j, std::vector<std::string>* vars_out = nullptr);

json to_json(const ProlongedField& p);
json to_json(const HorizontalIdeal& h);

json to_json(const ResonanceVerdict& v);
json to_json(const SearchReport& r);
json to_json(const Certificate& c);
json to_json(const StructureReport& r);

}  // namespace vfcert

#endif
