#include "gradix/ring.hpp"

#include <algorithm>
#include <set>

namespace gradix {

bool is_valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Ring::Ring(Field field, std::vector<std::string> variables) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!is_valid_variable_name(v))
            throw usage_error("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw usage_error("duplicate variable name '" + v + "'");
    }
    data_ = std::make_shared<Data>(Data{std::move(field), std::move(variables)});
}

std::optional<std::size_t> Ring::variable_index(const std::string& name) const {
    const auto& vars = data_->variables;
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
}

Ring Ring::with_prepended(const std::vector<std::string>& names) const {
    std::vector<std::string> vars = names;
    vars.insert(vars.end(), data_->variables.begin(), data_->variables.end());
    return Ring(data_->field, std::move(vars));
}

std::vector<std::string> Ring::fresh_names(const std::string& stem, std::size_t count) const {
    std::vector<std::string> out;
    std::size_t suffix = 0;
    while (out.size() < count) {
        std::string candidate = stem + std::to_string(suffix++);
        if (!variable_index(candidate) &&
            std::find(out.begin(), out.end(), candidate) == out.end())
            out.push_back(candidate);
    }
    return out;
}

bool Ring::operator==(const Ring& o) const {
    if (data_ == o.data_) return true;
    return data_->field == o.data_->field && data_->variables == o.data_->variables;
}

std::string Ring::to_string() const {
    std::string s = data_->field.to_string() + "[";
    for (std::size_t i = 0; i < data_->variables.size(); ++i) {
        if (i) s += ",";
        s += data_->variables[i];
    }
    return s + "]";
}

}  // namespace gradix
