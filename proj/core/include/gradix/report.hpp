#ifndef GRADIX_REPORT_HPP
#define GRADIX_REPORT_HPP

#include <string>
#include <vector>

namespace gradix {

/// One verified quantity: what was checked, what was expected, what came out.
struct CheckRecord {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

/// Deterministic check table with the seed that produced it (0 for fixed
/// golden data).
struct Report {
    std::string title;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    std::size_t failures() const;
    void add(std::string name, std::string expected, std::string got);
    void add_bool(std::string name, bool expected, bool got);

    std::string to_table() const;
    std::string to_json() const;
};

}  // namespace gradix

#endif
