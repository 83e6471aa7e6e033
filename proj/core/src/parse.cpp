#include "gradix/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gradix {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;  // 0-based; reported positions are 1-based

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) throw parse_error("expected '" + std::string(1, c) + "' (" + what + ")", here());
    }
    std::size_t here() {
        skip_space();
        return pos + 1;
    }
    std::string take_number() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw parse_error("expected a number", start + 1);
        return text.substr(start, pos - start);
    }
    std::string take_name() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
        }
        if (start == pos) throw parse_error("expected a name", start + 1);
        return text.substr(start, pos - start);
    }
};

std::int64_t take_signed_int(Cursor& cur) {
    bool neg = cur.accept('-');
    std::string digits = cur.take_number();
    if (digits.size() > 18) throw parse_error("integer literal too large", cur.here());
    std::int64_t v = std::stoll(digits);
    return neg ? -v : v;
}

LatticeVector parse_vector_literal(Cursor& cur) {
    cur.expect('(', "vector literal");
    LatticeVector v;
    if (!cur.accept(')')) {
        v.push_back(take_signed_int(cur));
        while (cur.accept(',')) v.push_back(take_signed_int(cur));
        cur.expect(')', "vector literal");
    }
    return v;
}

// --- polynomial expressions -------------------------------------------------

class PolyParser {
  public:
    PolyParser(const std::string& text, const Ring& ring, MonomialOrder order)
        : cur_{text}, ring_(ring), order_(order) {}

    Polynomial run() {
        if (cur_.done()) throw parse_error("empty polynomial", 1);
        Polynomial p = expression();
        if (!cur_.done()) throw parse_error("unexpected trailing input", cur_.here());
        return p;
    }

  private:
    Polynomial expression() {
        bool negate = false;
        if (cur_.accept('-'))
            negate = true;
        else
            cur_.accept('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (cur_.accept('+')) {
                acc = acc + term();
            } else if (cur_.accept('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        bool was_number = false;
        Polynomial acc = factor(&was_number);
        while (true) {
            if (cur_.accept('*')) {
                acc = acc * factor(&was_number);
            } else if (was_number && (std::isalpha(static_cast<unsigned char>(cur_.peek())) ||
                                      cur_.peek() == '(')) {
                // implicit multiplication is allowed only after a coefficient
                acc = acc * factor(&was_number);
            } else {
                char c = cur_.peek();
                if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
                    throw parse_error("missing '*' between factors", cur_.here());
                break;
            }
        }
        return acc;
    }

    Polynomial factor(bool* was_number) {
        Polynomial base = primary(was_number);
        if (cur_.accept('^')) {
            std::size_t at = cur_.here();
            std::string digits;
            try {
                digits = cur_.take_number();
            } catch (const parse_error&) {
                throw parse_error("malformed exponent", at);
            }
            if (digits.size() > 4) throw parse_error("malformed exponent (too large)", at);
            int e = std::stoi(digits);
            Polynomial acc = Polynomial::constant(ring_, order_, FieldElement::one(ring_.field()));
            for (int i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial primary(bool* was_number) {
        char c = cur_.peek();
        *was_number = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = cur_.take_number();
            mpz_class num(digits);
            if (cur_.accept('/')) {
                std::size_t at = cur_.here();
                mpz_class den(cur_.take_number());
                if (den == 0) throw parse_error("zero denominator", at);
                *was_number = true;
                return Polynomial::constant(ring_, order_,
                                            FieldElement::fraction(ring_.field(), num, den));
            }
            *was_number = true;
            return Polynomial::constant(ring_, order_,
                                        FieldElement::from_integer(ring_.field(), num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = cur_.here();
            std::string name = cur_.take_name();
            auto idx = ring_.variable_index(name);
            if (!idx)
                throw parse_error("unknown variable '" + name + "' in ring " + ring_.to_string(),
                                  at);
            return Polynomial::variable(ring_, order_, *idx);
        }
        if (c == '(') {
            cur_.expect('(', "group");
            Polynomial p = expression();
            cur_.expect(')', "group");
            return p;
        }
        throw parse_error("expected a coefficient, variable or '('", cur_.here());
    }

    Cursor cur_;
    Ring ring_;
    MonomialOrder order_;
};

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Field parse_field(const std::string& text) {
    std::string t = trim(text);
    if (t == "QQ") return Field::rationals();
    if (t.rfind("GF(", 0) == 0 && t.back() == ')') {
        std::string inner = t.substr(3, t.size() - 4);
        Cursor cur{inner};
        std::string digits = cur.take_number();
        if (!cur.done()) throw parse_error("malformed field modulus", cur.here());
        unsigned long p = std::stoul(digits);
        if (p >= (1ul << 31)) throw usage_error("prime modulus must be below 2^31");
        return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw usage_error("unknown field '" + t + "' (expected QQ or GF(p))");
}

Ring parse_ring(const std::string& text) {
    std::string t = trim(text);
    std::size_t open = t.find('[');
    if (open == std::string::npos || t.back() != ']')
        throw usage_error("malformed ring '" + t + "' (expected e.g. QQ[x,y])");
    Field field = parse_field(t.substr(0, open));
    std::string vars = t.substr(open + 1, t.size() - open - 2);
    std::vector<std::string> names;
    for (const auto& piece : split_top_level(vars, ',')) {
        std::string name = trim(piece);
        if (!is_valid_variable_name(name))
            throw usage_error("invalid variable name '" + name + "'");
        names.push_back(name);
    }
    return Ring(field, names);
}

GradingMap parse_grading(const std::string& text, std::size_t nvars) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed grading matrix: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw usage_error("grading must be a nonempty matrix [[..]]");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw usage_error("grading rows must be integer arrays");
        std::vector<std::int64_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw usage_error("grading entries must be integers");
            r.push_back(v.get<std::int64_t>());
        }
        rows.push_back(std::move(r));
    }
    return GradingMap(std::move(rows), nvars);
}

MonomialOrder parse_order(const std::string& text) {
    std::string t = trim(text);
    if (t == "lex") return MonomialOrder::lex();
    if (t == "grevlex") return MonomialOrder::grevlex();
    throw usage_error("unknown order '" + t + "' (expected lex or grevlex)");
}

Polynomial parse_polynomial(const std::string& text, const Ring& ring, MonomialOrder order) {
    return PolyParser(text, ring, order).run();
}

Ideal parse_ideal(const std::string& text, const Ring& ring, MonomialOrder order,
                  const std::vector<std::pair<std::string, Ideal>>* splice) {
    std::vector<Polynomial> gens;
    if (trim(text).empty()) return Ideal(ring, gens);
    for (const auto& piece : split_top_level(text, ',')) {
        std::string src = trim(piece);
        if (src.empty()) throw usage_error("empty generator in ideal list");
        if (splice && is_valid_variable_name(src) && !ring.variable_index(src)) {
            auto it = std::find_if(splice->begin(), splice->end(),
                                   [&](const auto& kv) { return kv.first == src; });
            if (it != splice->end()) {
                for (const auto& g : it->second.generators()) gens.push_back(g.with_order(order));
                continue;
            }
        }
        gens.push_back(parse_polynomial(src, ring, order));
    }
    return Ideal(ring, std::move(gens));
}

PointConfiguration parse_points(const std::string& text, const Field& field) {
    Cursor cur{text};
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    auto coordinate = [&]() {
        bool neg = cur.accept('-');
        mpz_class num(cur.take_number());
        mpz_class den = 1;
        if (cur.accept('/')) den = mpz_class(cur.take_number());
        FieldElement v = FieldElement::fraction(field, num, den);
        return neg ? -v : v;
    };
    while (!cur.done()) {
        cur.expect('(', "point");
        FieldElement a = coordinate();
        cur.expect(',', "point");
        FieldElement b = coordinate();
        cur.expect(')', "point");
        pts.emplace_back(std::move(a), std::move(b));
        if (!cur.accept(',')) break;
    }
    if (!cur.done()) throw parse_error("unexpected trailing input after points", cur.here());
    return make_point_configuration(field, pts);
}

namespace {

FieldElement parse_scalar_token(Cursor& cur, const Field& field) {
    bool neg = cur.accept('-');
    mpz_class num(cur.take_number());
    mpz_class den = 1;
    if (cur.accept('/')) den = mpz_class(cur.take_number());
    FieldElement v = FieldElement::fraction(field, num, den);
    return neg ? -v : v;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (!trim(line).empty()) lines.push_back(line);
    }
    return lines;
}

HomogeneousMatrix parse_gfmatrix_lines(const std::vector<std::string>& lines, std::size_t& used) {
    if (lines.empty()) throw usage_error("empty graded-field matrix");
    Cursor head{lines[0]};
    if (head.take_name() != "gfield")
        throw usage_error("graded-field matrix must start with 'gfield'");
    head.skip_space();
    std::size_t field_start = head.pos;
    std::size_t paren = lines[0].find('(', field_start);
    std::string field_text;
    if (lines[0].compare(field_start, 2, "QQ") == 0) {
        field_text = "QQ";
        head.pos = field_start + 2;
    } else {
        std::size_t close = lines[0].find(')', field_start);
        if (close == std::string::npos) throw usage_error("malformed gfield header");
        field_text = lines[0].substr(field_start, close - field_start + 1);
        head.pos = close + 1;
    }
    (void)paren;
    Field base = parse_field(field_text);
    if (head.take_name() != "rank") throw usage_error("gfield header: expected 'rank'");
    std::int64_t m = take_signed_int(head);
    if (m <= 0 || m > 8) throw usage_error("gfield rank out of range");
    if (head.take_name() != "support") throw usage_error("gfield header: expected 'support'");
    head.expect('(', "support list");
    std::vector<LatticeVector> gens;
    if (!head.accept(')')) {
        gens.push_back(parse_vector_literal(head));
        while (head.accept(';')) gens.push_back(parse_vector_literal(head));
        head.expect(')', "support list");
    }
    for (const auto& g : gens)
        if (g.size() != static_cast<std::size_t>(m))
            throw usage_error("support generator length does not match the rank");
    GradedFieldPresentation pres{base, static_cast<std::size_t>(m),
                                 SupportLattice(static_cast<std::size_t>(m), gens)};

    auto parse_degree_line = [&](const std::string& line, const std::string& tag) {
        Cursor cur{line};
        if (cur.take_name() != tag) throw usage_error("expected '" + tag + "' line");
        std::vector<LatticeVector> degs;
        while (!cur.done()) degs.push_back(parse_vector_literal(cur));
        for (const auto& d : degs)
            if (d.size() != static_cast<std::size_t>(m))
                throw usage_error(tag + " vector length does not match the rank");
        if (degs.empty()) throw usage_error(tag + " line needs at least one vector");
        return degs;
    };
    if (lines.size() < 3) throw usage_error("graded-field matrix is missing degree lines");
    std::vector<LatticeVector> rowdeg = parse_degree_line(lines[1], "rowdeg");
    std::vector<LatticeVector> coldeg = parse_degree_line(lines[2], "coldeg");

    const std::size_t need = rowdeg.size() * coldeg.size();
    std::vector<GradedFieldElement> entries;
    std::size_t line_idx = 3;
    while (entries.size() < need) {
        if (line_idx >= lines.size())
            throw usage_error("graded-field matrix: expected " + std::to_string(need) +
                              " entries, got " + std::to_string(entries.size()));
        Cursor cur{lines[line_idx++]};
        while (!cur.done()) {
            if (cur.peek() == '0') {
                ++cur.pos;
                entries.push_back(GradedFieldElement{FieldElement::zero(base), LatticeVector(m, 0)});
                continue;
            }
            FieldElement scalar = parse_scalar_token(cur, base);
            cur.expect('*', "entry");
            if (cur.take_name() != "e") throw parse_error("expected 'e(...)' in entry", cur.here());
            LatticeVector v = parse_vector_literal(cur);
            if (v.size() != static_cast<std::size_t>(m))
                throw usage_error("entry exponent length does not match the rank");
            entries.push_back(GradedFieldElement{std::move(scalar), std::move(v)});
        }
    }
    used = line_idx;
    return HomogeneousMatrix(std::move(pres), std::move(rowdeg), std::move(coldeg),
                             std::move(entries));
}

}  // namespace

HomogeneousMatrix parse_gfmatrix(const std::string& text) {
    std::size_t used = 0;
    auto lines = nonempty_lines(text);
    HomogeneousMatrix m = parse_gfmatrix_lines(lines, used);
    if (used != lines.size()) throw usage_error("trailing input after graded-field matrix");
    return m;
}

std::string print_gfmatrix(const HomogeneousMatrix& matrix) {
    const auto& pres = matrix.presentation();
    std::string out = "gfield " + pres.base_field.to_string() + " rank " +
                      std::to_string(pres.ambient_rank) + " support " + pres.support.to_string() +
                      "\n";
    auto degree_line = [](const std::string& tag, const std::vector<LatticeVector>& degs) {
        std::string s = tag;
        for (const auto& d : degs) s += " " + degree_to_string(d);
        return s + "\n";
    };
    out += degree_line("rowdeg", matrix.row_degrees());
    out += degree_line("coldeg", matrix.col_degrees());
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            if (c) line += " ";
            const GradedFieldElement& e = matrix.at(r, c);
            if (e.is_zero()) {
                line += "0";
            } else {
                std::string v = degree_to_string(e.exponent);
                line += e.scalar.to_string() + "*e" + v;
            }
        }
        out += line + "\n";
    }
    return out;
}

SessionFile parse_session(const std::string& text) {
    SessionFile session;
    auto lines = nonempty_lines(text);
    std::set<std::string> names;
    auto declare = [&](const std::string& name) {
        if (!is_valid_variable_name(name))
            throw usage_error("invalid declaration name '" + name + "'");
        if (!names.insert(name).second)
            throw usage_error("duplicate declaration name '" + name + "'");
    };
    auto need_ring = [&]() -> const Ring& {
        if (!session.ring) throw usage_error("session declares objects before the ring");
        return *session.ring;
    };

    std::size_t i = 0;
    while (i < lines.size()) {
        Cursor cur{lines[i]};
        std::string keyword = cur.take_name();
        if (keyword == "ring") {
            session.ring = parse_ring(lines[i].substr(cur.pos));
            ++i;
        } else if (keyword == "grading") {
            session.grading = parse_grading(trim(lines[i].substr(cur.pos)), need_ring().nvars());
            ++i;
        } else if (keyword == "order") {
            session.order = parse_order(lines[i].substr(cur.pos));
            ++i;
        } else if (keyword == "ideal") {
            std::string name = cur.take_name();
            declare(name);
            cur.expect('=', "ideal declaration");
            MonomialOrder order = session.order.value_or(MonomialOrder::grevlex());
            session.ideals.emplace_back(
                name, parse_ideal(lines[i].substr(cur.pos), need_ring(), order, &session.ideals));
            ++i;
        } else if (keyword == "points") {
            std::string name = cur.take_name();
            declare(name);
            cur.expect('=', "points declaration");
            session.points.emplace_back(
                name, parse_points(lines[i].substr(cur.pos), need_ring().field()));
            ++i;
        } else if (keyword == "gfmatrix") {
            std::string name = cur.take_name();
            declare(name);
            cur.expect('=', "gfmatrix declaration");
            std::vector<std::string> block;
            block.push_back(lines[i].substr(cur.pos));
            for (std::size_t j = i + 1; j < lines.size(); ++j) block.push_back(lines[j]);
            std::size_t used = 0;
            HomogeneousMatrix m = parse_gfmatrix_lines(block, used);
            session.matrices.emplace_back(name, std::move(m));
            i += used;
        } else {
            throw usage_error("unknown session declaration '" + keyword + "'");
        }
    }
    return session;
}

std::string print_session(const SessionFile& session) {
    std::string out;
    if (session.ring) out += "ring " + session.ring->to_string() + "\n";
    if (session.grading) out += "grading " + session.grading->to_string() + "\n";
    if (session.order) out += "order " + session.order->to_string() + "\n";
    for (const auto& [name, ideal] : session.ideals)
        out += "ideal " + name + " = " + ideal.to_string() + "\n";
    for (const auto& [name, config] : session.points) {
        out += "points " + name + " = ";
        for (std::size_t i = 0; i < config.points.size(); ++i) {
            if (i) out += ", ";
            out += "(" + config.points[i].first.to_string() + "," +
                   config.points[i].second.to_string() + ")";
        }
        out += "\n";
    }
    for (const auto& [name, matrix] : session.matrices)
        out += "gfmatrix " + name + " = " + print_gfmatrix(matrix);
    return out;
}

}  // namespace gradix
