#ifndef GRADIX_RING_HPP
#define GRADIX_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradix/field.hpp"

namespace gradix {

/// A declared polynomial ring k[x_1, ..., x_n]: coefficient field plus an
/// ordered list of distinct variable names. Cheap to copy; equality is by
/// content, so two independently parsed "QQ[x,y]" compare equal.
class Ring {
  public:
    Ring(Field field, std::vector<std::string> variables);

    const Field& field() const { return data_->field; }
    std::size_t nvars() const { return data_->variables.size(); }
    const std::vector<std::string>& variables() const { return data_->variables; }
    const std::string& variable(std::size_t i) const { return data_->variables[i]; }
    std::optional<std::size_t> variable_index(const std::string& name) const;

    /// New ring with `names` prepended before the existing variables (used for
    /// elimination auxiliaries). Names must stay distinct.
    Ring with_prepended(const std::vector<std::string>& names) const;
    /// Fresh variable names based on `stem` that do not clash with existing ones.
    std::vector<std::string> fresh_names(const std::string& stem, std::size_t count) const;

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. QQ[x,y]

  private:
    struct Data {
        Field field;
        std::vector<std::string> variables;
    };
    std::shared_ptr<const Data> data_;
};

bool is_valid_variable_name(const std::string& name);

}  // namespace gradix

#endif
