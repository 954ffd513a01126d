#ifndef IONKIT_REGISTRY_HPP
#define IONKIT_REGISTRY_HPP

#include <string>
#include <utility>
#include <vector>

namespace ionkit {

/// An ordered catalog of sector codes with display names.
/// Codes are unique; lookup is by code or by position.
class SectorRegistry {
public:
    using Entry = std::pair<std::string, std::string>; // (code, name)

    explicit SectorRegistry(std::vector<Entry> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    bool contains(const std::string& code) const;

    /// Throws LookupError for unregistered codes / out-of-range indices.
    const std::string& name_of(const std::string& code) const;
    const Entry& at(int index) const;

    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

/// The 44-sector STAN catalog (codes "01".."44") the bundled analyses use.
const SectorRegistry& stan_registry();

} // namespace ionkit

#endif
