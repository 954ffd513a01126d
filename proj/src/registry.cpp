#include "ionkit/registry.hpp"
#include "ionkit/errors.hpp"

#include <set>

namespace ionkit {

SectorRegistry::SectorRegistry(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& [code, name] : entries_) {
        if (!seen.insert(code).second)
            throw DomainError("duplicate sector code in registry: " + code);
    }
}

bool SectorRegistry::contains(const std::string& code) const {
    for (const auto& e : entries_)
        if (e.first == code) return true;
    return false;
}

const std::string& SectorRegistry::name_of(const std::string& code) const {
    for (const auto& e : entries_)
        if (e.first == code) return e.second;
    throw LookupError("unknown sector code: " + code);
}

const SectorRegistry::Entry& SectorRegistry::at(int index) const {
    if (index < 0 || index >= size())
        throw LookupError("sector index out of range: " + std::to_string(index));
    return entries_[static_cast<size_t>(index)];
}

const SectorRegistry& stan_registry() {
    static const SectorRegistry registry({
        {"01", "Agriculture, hunting, forestry"},
        {"02", "Fishing and aquaculture"},
        {"03", "Mining and quarrying, energy producing products"},
        {"04", "Mining and quarrying, non-energy producing products"},
        {"05", "Mining support service activities"},
        {"06", "Food products, beverages and tobacco"},
        {"07", "Textiles, textile products, leather and footwear"},
        {"08", "Wood and products of wood and cork"},
        {"09", "Paper products and printing"},
        {"10", "Coke and refined petroleum products"},
        {"11", "Chemical and chemical products"},
        {"12", "Pharmaceuticals, medicinal chemical and botanical products"},
        {"13", "Rubber and plastics products"},
        {"14", "Other non-metallic mineral products"},
        {"15", "Basic metals"},
        {"16", "Fabricated metal products"},
        {"17", "Computer, electronic and optical equipment"},
        {"18", "Electrical equipment"},
        {"19", "Machinery and equipment, not elsewhere classified"},
        {"20", "Motor vehicles, trailers and semi-trailers"},
        {"21", "Other transport equipment"},
        {"22", "Manufacturing nec; repair and installation of machinery and equipment"},
        {"23", "Electricity, gas, steam and air conditioning supply"},
        {"24", "Water supply; sewerage, waste management and remediation activities"},
        {"25", "Construction"},
        {"26", "Wholesale and retail trade; repair of motor vehicles"},
        {"27", "Land transport and transport via pipelines"},
        {"28", "Water transport"},
        {"29", "Air transport"},
        {"30", "Warehousing and support activities for transportation"},
        {"31", "Postal and courier activities"},
        {"32", "Accommodation and food service activities"},
        {"33", "Publishing, audiovisual and broadcasting activities"},
        {"34", "Telecommunications"},
        {"35", "IT and other information services"},
        {"36", "Financial and insurance activities"},
        {"37", "Real estate activities"},
        {"38", "Professional, scientific and technical activities"},
        {"39", "Administrative and support services"},
        {"40", "Public administration and defence; compulsory social security"},
        {"41", "Education"},
        {"42", "Human health and social work activities"},
        {"43", "Arts, entertainment and recreation"},
        {"44", "Other service activities"},
    });
    return registry;
}

} // namespace ionkit
