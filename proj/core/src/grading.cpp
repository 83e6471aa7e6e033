#include "gradix/grading.hpp"

namespace gradix {

std::string degree_to_string(const DegreeVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

GradingMap::GradingMap(std::vector<std::vector<std::int64_t>> weights, std::size_t nvars)
    : weights_(std::move(weights)), nvars_(nvars) {
    if (weights_.empty()) throw usage_error("grading needs at least one weight row");
    for (const auto& row : weights_)
        if (row.size() != nvars_)
            throw usage_error("weight row length does not match the variable count");
}

GradingMap GradingMap::standard(std::size_t nvars) {
    return GradingMap({std::vector<std::int64_t>(nvars, 1)}, nvars);
}

GradingMap GradingMap::fine(std::size_t nvars) {
    std::vector<std::vector<std::int64_t>> w(nvars, std::vector<std::int64_t>(nvars, 0));
    for (std::size_t i = 0; i < nvars; ++i) w[i][i] = 1;
    return GradingMap(std::move(w), nvars);
}

bool GradingMap::nonnegative() const {
    for (const auto& row : weights_)
        for (auto v : row)
            if (v < 0) return false;
    return true;
}

DegreeVector GradingMap::degree_of(const Monomial& m) const {
    if (m.nvars() != nvars_)
        throw usage_error("monomial arity does not match the grading");
    DegreeVector d(weights_.size(), 0);
    for (std::size_t i = 0; i < weights_.size(); ++i)
        for (std::size_t j = 0; j < nvars_; ++j)
            d[i] += weights_[i][j] * m.exponent(j);
    return d;
}

std::string GradingMap::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < nvars_; ++j) {
            if (j) s += ",";
            s += std::to_string(weights_[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

std::map<DegreeVector, Polynomial> homogeneous_components(const Polynomial& f,
                                                          const GradingMap& grading) {
    std::map<DegreeVector, std::vector<Term>> buckets;
    for (const auto& t : f.terms()) buckets[grading.degree_of(t.mono)].push_back(t);
    std::map<DegreeVector, Polynomial> out;
    for (auto& [deg, terms] : buckets)
        out.emplace(deg, Polynomial(f.ring(), f.order(), terms));
    return out;
}

Homogeneity classify_homogeneous(const Polynomial& f, const GradingMap& grading) {
    Homogeneity h;
    if (f.is_zero()) {
        h.homogeneous = true;
        h.zero = true;
        return h;
    }
    DegreeVector d = grading.degree_of(f.terms().front().mono);
    for (const auto& t : f.terms())
        if (grading.degree_of(t.mono) != d) return h;
    h.homogeneous = true;
    h.degree = std::move(d);
    return h;
}

bool is_homogeneous(const Polynomial& f, const GradingMap& grading) {
    return classify_homogeneous(f, grading).homogeneous;
}

}  // namespace gradix
