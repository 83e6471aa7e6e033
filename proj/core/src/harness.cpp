#include "gradix/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gradix/linalg.hpp"
#include "gradix/parse.hpp"

namespace gradix {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t below(std::uint64_t n) { return eng() % n; }  // deterministic across platforms
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool chance(unsigned percent) { return below(100) < percent; }
};

const MonomialOrder kOrder = MonomialOrder::grevlex();

Polynomial pp(const std::string& text, const Ring& ring) {
    return parse_polynomial(text, ring, kOrder);
}

Ideal point_ideal(const Ring& ring, const FieldElement& a, const FieldElement& b) {
    Polynomial x = Polynomial::variable(ring, kOrder, 0);
    Polynomial y = Polynomial::variable(ring, kOrder, 1);
    return Ideal(ring, {x - Polynomial::constant(ring, kOrder, a),
                        y - Polynomial::constant(ring, kOrder, b)});
}

// Canonical key of the projective direction [a : b].
std::string direction_key(const FieldElement& a, const FieldElement& b) {
    if (a.is_zero()) return "(0:1)";
    return "(1:" + (b / a).to_string() + ")";
}

// True iff the class of `candidate` modulo the ideal lies in the span of the
// socle representatives.
bool in_socle_span(const Ideal& ideal, const SocleBasis& socle_basis,
                   const Polynomial& candidate) {
    Polynomial nf = normal_form(candidate, ideal.canonical_basis());
    std::map<Monomial, std::size_t> columns;
    for (const auto& e : socle_basis.elements)
        for (const auto& t : e.terms()) columns.emplace(t.mono, 0);
    for (const auto& t : nf.terms()) columns.emplace(t.mono, 0);
    std::size_t next = 0;
    for (auto& [m, idx] : columns) idx = next++;

    const Field& field = ideal.ring().field();
    DenseMatrix mat(field, socle_basis.elements.size(), columns.size());
    for (std::size_t r = 0; r < socle_basis.elements.size(); ++r)
        for (const auto& t : socle_basis.elements[r].terms())
            mat.at(r, columns[t.mono]) = t.coeff;
    std::vector<FieldElement> v(columns.size(), FieldElement::zero(field));
    for (const auto& t : nf.terms()) v[columns[t.mono]] = t.coeff;
    return mat.row_span_contains(v);
}

}  // namespace

PointConfiguration make_point_configuration(
    const Field& field, const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    PointConfiguration config{field, points};
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [a, b] : points) {
        if (a.field() != field || b.field() != field)
            throw usage_error("point coordinate from the wrong field");
        if (a.is_zero() && b.is_zero())
            throw usage_error("point configurations must avoid the origin");
        if (!seen.emplace(a.to_string(), b.to_string()).second)
            throw usage_error("duplicate point (" + a.to_string() + "," + b.to_string() + ")");
    }
    return config;
}

Ring point_ring(const PointConfiguration& config) {
    return Ring(config.field, {"x", "y"});
}

Ideal ideal_of_points(const PointConfiguration& config) {
    if (config.points.empty()) throw usage_error("empty point configuration");
    Ring ring = point_ring(config);
    std::optional<Ideal> acc;
    for (const auto& [a, b] : config.points) {
        Ideal p = point_ideal(ring, a, b);
        acc = acc ? intersect(*acc, p) : p;
    }
    return *acc;
}

Ideal line_ideal_of_point(const Ring& ring, const FieldElement& a, const FieldElement& b) {
    Polynomial x = Polynomial::variable(ring, kOrder, 0);
    Polynomial y = Polynomial::variable(ring, kOrder, 1);
    return Ideal(ring, {x.times_scalar(b) - y.times_scalar(a)});
}

StarComparisonReport theorem51_check(const PointConfiguration& config) {
    Ring ring = point_ring(config);
    GradingMap grading = GradingMap::standard(2);
    Ideal ideal = ideal_of_points(config);

    std::map<std::string, std::pair<FieldElement, FieldElement>> directions;
    for (const auto& [a, b] : config.points)
        directions.emplace(direction_key(a, b), std::make_pair(a, b));

    std::optional<Ideal> predicted;
    for (const auto& [key, rep] : directions) {
        Ideal line = line_ideal_of_point(ring, rep.first, rep.second);
        predicted = predicted ? intersect(*predicted, line) : line;
    }

    StarResult sr = star(ideal, grading);

    StarComparisonReport report{/*ir_ideal=*/config.points.size(),
                                /*ir_star=*/directions.size(),
                                /*bijective=*/false,
                                /*inequality_holds=*/false,
                                /*star_matches_prediction=*/false,
                                /*star_components_prime=*/false,
                                /*star_ideal=*/sr.star_ideal,
                                /*details=*/{}};
    report.bijective = report.ir_ideal == report.ir_star;
    report.inequality_holds = report.ir_ideal >= report.ir_star;
    report.star_matches_prediction = ideal_equal(sr.star_ideal, *predicted);

    bool all_prime = true;
    for (const auto& [a, b] : config.points) {
        Ideal p = point_ideal(ring, a, b);
        StarPrimeReport pr = star_of_prime_check(p, grading);
        Ideal line = line_ideal_of_point(ring, a, b);
        bool ok = pr.graded && pr.prime && ideal_equal(pr.star_ideal, line);
        all_prime = all_prime && ok;
        std::string image;
        for (const auto& g : line.canonical_basis().elements()) {
            if (!image.empty()) image += ", ";
            image += g.to_string();
        }
        report.details.emplace_back("(" + a.to_string() + "," + b.to_string() + ")", image);
    }
    report.star_components_prime = all_prime;
    return report;
}

Report reference_examples_report(std::vector<Ideal>* collect) {
    Report report;
    report.title = "built-in reference examples";
    Ring ring = parse_ring("QQ[x,y]");
    GradingMap grading = GradingMap::standard(2);
    auto remember = [&](const Ideal& ideal) {
        if (collect) collect->push_back(ideal);
    };

    // --- collinear point family: I_r = (x, (y-1)...(y-r)), star = (x) ------
    for (int r = 1; r <= 3; ++r) {
        std::string tag = "points.r" + std::to_string(r);
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (int i = 1; i <= r; ++i)
            pts.emplace_back(FieldElement::from_integer(ring.field(), 0),
                             FieldElement::from_integer(ring.field(), i));
        PointConfiguration config = make_point_configuration(ring.field(), pts);

        std::string product = "x";
        Polynomial prod = Polynomial::constant(ring, kOrder, FieldElement::one(ring.field()));
        for (int i = 1; i <= r; ++i)
            prod = prod * pp("y - " + std::to_string(i), ring);
        Ideal declared(ring, {pp("x", ring), prod});
        (void)product;
        remember(declared);

        Ideal built = ideal_of_points(config);
        report.add_bool(tag + ".ideal_of_points matches (x, prod(y-a_i))", true,
                        ideal_equal(built, declared));

        StarResult sr = star(declared, grading);
        report.add_bool(tag + ".star = (x)", true,
                        ideal_equal(sr.star_ideal, Ideal(ring, {pp("x", ring)})));

        StarComparisonReport cmp = theorem51_check(config);
        report.add(tag + ".ir(I)", std::to_string(r), std::to_string(cmp.ir_ideal));
        report.add(tag + ".ir(I*)", "1", std::to_string(cmp.ir_star));
        report.add_bool(tag + ".bijective", r == 1, cmp.bijective);
        report.add_bool(tag + ".star matches predicted line intersection", true,
                        cmp.star_matches_prediction);
        report.add_bool(tag + ".per-point star images prime", true, cmp.star_components_prime);
    }

    // --- quadratic primary pair: ir drops under star ------------------------
    {
        std::string tag = "quadratic";
        Ideal ideal = parse_ideal("x^2, x*y, y^3, x - y^2", ring, kOrder);
        Ideal expected_star = parse_ideal("x^2, x*y, y^3", ring, kOrder);
        remember(ideal);
        remember(expected_star);

        StarResult sr = star(ideal, grading);
        report.add_bool(tag + ".star = (x^2, x*y, y^3)", true,
                        ideal_equal(sr.star_ideal, expected_star));
        report.add_bool(tag + ".I not graded", false, is_graded(ideal, grading));
        report.add_bool(tag + ".I* graded", true, is_graded(expected_star, grading));
        report.add_bool(tag + ".I m-primary", true, is_m_primary(ideal));
        report.add_bool(tag + ".I* m-primary", true, is_m_primary(expected_star));

        SocleBasis soc_ideal = socle(ideal);
        SocleBasis soc_star = socle(expected_star);
        report.add(tag + ".soc(I) rank", "1", std::to_string(soc_ideal.rank()));
        report.add(tag + ".soc(I*) rank", "2", std::to_string(soc_star.rank()));
        report.add_bool(tag + ".soc(I) = k x", true,
                        in_socle_span(ideal, soc_ideal, pp("x", ring)));
        report.add_bool(tag + ".soc(I*) = k x + k y^2", true,
                        in_socle_span(expected_star, soc_star, pp("x", ring)) &&
                            in_socle_span(expected_star, soc_star, pp("y^2", ring)));

        report.add(tag + ".ir(I)", "1", std::to_string(index_of_reducibility_primary(ideal)));
        report.add(tag + ".ir(I*)", "2",
                   std::to_string(index_of_reducibility_primary(expected_star)));
        report.add_bool(tag + ".I irreducible", true, is_irreducible_primary(ideal));
        report.add_bool(tag + ".I* irreducible", false, is_irreducible_primary(expected_star));

        MonomialIdeal star_monomial(ring, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 3})});
        report.add(tag + ".monomial decomposition count of I*", "2",
                   std::to_string(index_of_reducibility_monomial(star_monomial)));
    }

    // --- quartic primary pair: ir rises under star ---------------------------
    // Needs a Z-grading with distinct variable weights: under equal weights
    // the binomial generator is homogeneous and the star ideal collapses to
    // the input.
    {
        std::string tag = "quartic";
        GradingMap quartic_grading({{1, 2}}, 2);
        Ideal ideal = parse_ideal("x^4, x^2*y^2, y^4, x^3*y - x*y^3", ring, kOrder);
        Ideal expected_star = parse_ideal("x^4, x^2*y^2, y^4", ring, kOrder);
        remember(ideal);
        remember(expected_star);

        StarResult sr = star(ideal, quartic_grading);
        report.add_bool(tag + ".star = (x^4, x^2*y^2, y^4)", true,
                        ideal_equal(sr.star_ideal, expected_star));
        report.add_bool(tag + ".I m-primary", true, is_m_primary(ideal));
        report.add_bool(tag + ".I* m-primary", true, is_m_primary(expected_star));

        SocleBasis soc_ideal = socle(ideal);
        SocleBasis soc_star = socle(expected_star);
        report.add(tag + ".soc(I) rank", "3", std::to_string(soc_ideal.rank()));
        report.add(tag + ".soc(I*) rank", "2", std::to_string(soc_star.rank()));
        report.add_bool(tag + ".soc(I*) = k x^3y + k xy^3", true,
                        in_socle_span(expected_star, soc_star, pp("x^3*y", ring)) &&
                            in_socle_span(expected_star, soc_star, pp("x*y^3", ring)));
        report.add_bool(tag + ".soc(I) contains x^3y, x^3 - xy^2, x^2y - y^3", true,
                        in_socle_span(ideal, soc_ideal, pp("x^3*y", ring)) &&
                            in_socle_span(ideal, soc_ideal, pp("x^3 - x*y^2", ring)) &&
                            in_socle_span(ideal, soc_ideal, pp("x^2*y - y^3", ring)));

        report.add(tag + ".ir(I)", "3", std::to_string(index_of_reducibility_primary(ideal)));
        report.add(tag + ".ir(I*)", "2",
                   std::to_string(index_of_reducibility_primary(expected_star)));

        MonomialIdeal star_monomial(ring, {Monomial({4, 0}), Monomial({2, 2}), Monomial({0, 4})});
        report.add(tag + ".monomial decomposition count of I*", "2",
                   std::to_string(index_of_reducibility_monomial(star_monomial)));
    }
    return report;
}

Report theorem51_suite(std::uint64_t seed, std::size_t cases, std::vector<Ideal>* collect) {
    Report report;
    report.title = "radical point-configuration suite";
    report.seed = seed;
    Rng rng(seed);
    Field field = Field::rationals();

    for (std::size_t k = 0; k < cases; ++k) {
        std::size_t npoints = 1 + rng.below(6);
        std::set<std::pair<std::int64_t, std::int64_t>> raw;
        while (raw.size() < npoints) {
            std::int64_t a = rng.range(-5, 5);
            std::int64_t b = rng.range(-5, 5);
            if (a == 0 && b == 0) continue;
            raw.emplace(a, b);
        }
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (const auto& [a, b] : raw)
            pts.emplace_back(FieldElement::from_integer(field, a),
                             FieldElement::from_integer(field, b));
        PointConfiguration config = make_point_configuration(field, pts);
        StarComparisonReport cmp = theorem51_check(config);
        if (collect) collect->push_back(ideal_of_points(config));

        std::string verdict = "ok";
        if (!cmp.inequality_holds)
            verdict = "ir(I) < ir(I*)";
        else if (cmp.bijective != (cmp.ir_ideal == cmp.ir_star))
            verdict = "bijection criterion mismatch";
        else if (!cmp.star_matches_prediction)
            verdict = "star differs from the predicted line intersection";
        else if (!cmp.star_components_prime)
            verdict = "a per-point star image failed the prime check";
        report.add("case " + std::to_string(k) + " (" + std::to_string(npoints) + " points)",
                   "ok", verdict);
    }
    return report;
}

Report monomial_socle_suite(std::uint64_t seed, std::size_t cases, std::vector<Ideal>* collect) {
    Report report;
    report.title = "monomial decomposition vs socle rank";
    report.seed = seed;
    Rng rng(seed);
    Field field = Field::prime(32003);
    const std::vector<std::string> names = {"x", "y", "z"};

    for (std::size_t k = 0; k < cases; ++k) {
        std::size_t nvars = 1 + rng.below(3);
        Ring ring(field, std::vector<std::string>(names.begin(), names.begin() + nvars));

        std::vector<Monomial> gens;
        std::vector<std::int64_t> caps(nvars);
        for (std::size_t v = 0; v < nvars; ++v) {
            caps[v] = rng.range(1, 6);
            gens.push_back(Monomial::variable(nvars, v, static_cast<std::int32_t>(caps[v])));
        }
        std::size_t extra = rng.below(4);
        for (std::size_t e = 0; e < extra; ++e) {
            std::vector<std::int32_t> exp(nvars);
            bool nonzero = false;
            for (std::size_t v = 0; v < nvars; ++v) {
                exp[v] = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(caps[v])));
                nonzero = nonzero || exp[v] > 0;
            }
            if (nonzero) gens.push_back(Monomial(exp));
        }
        MonomialIdeal mono(ring, gens);
        Ideal ideal = mono.as_ideal();
        if (collect) collect->push_back(ideal);

        std::size_t by_decomposition = index_of_reducibility_monomial(mono);
        std::size_t by_socle = index_of_reducibility_primary(ideal);
        report.add("case " + std::to_string(k) + " [" + mono.to_string() + "]",
                   std::to_string(by_decomposition), std::to_string(by_socle));
    }
    return report;
}

namespace {

Polynomial random_polynomial(Rng& rng, const Ring& ring, std::int64_t max_degree,
                             std::size_t max_terms) {
    std::vector<Term> terms;
    std::size_t nterms = 1 + rng.below(max_terms);
    for (std::size_t t = 0; t < nterms; ++t) {
        std::vector<std::int32_t> exp(ring.nvars(), 0);
        std::int64_t budget = rng.range(0, max_degree);
        for (std::size_t v = 0; v < ring.nvars() && budget > 0; ++v) {
            std::int32_t e = static_cast<std::int32_t>(rng.range(0, budget));
            exp[v] = e;
            budget -= e;
        }
        std::int64_t raw = ring.field().is_rationals() ? rng.range(1, 9) * (rng.chance(50) ? 1 : -1)
                                                       : rng.range(1, ring.field().modulus() - 1);
        terms.push_back(Term{FieldElement::from_integer(ring.field(), raw), Monomial(exp)});
    }
    return Polynomial(ring, kOrder, terms);
}

Ideal random_ideal(Rng& rng, const Ring& ring, std::size_t max_gens, std::int64_t max_degree) {
    std::vector<Polynomial> gens;
    std::size_t ngens = 1 + rng.below(max_gens);
    for (std::size_t g = 0; g < ngens; ++g) {
        Polynomial p = random_polynomial(rng, ring, max_degree, 4);
        if (!p.is_zero()) gens.push_back(p);
    }
    return Ideal(ring, gens);
}

std::int64_t max_generator_degree(const Ideal& ideal) {
    std::int64_t d = 0;
    for (const auto& g : ideal.generators()) d = std::max(d, g.total_degree());
    return d;
}

}  // namespace

Report star_laws_suite(std::uint64_t seed, std::size_t cases, std::size_t pair_cases,
                       std::vector<Ideal>* collect) {
    Report report;
    report.title = "star algebraic laws over GF(32003)";
    report.seed = seed;
    Rng rng(seed);
    Field field = Field::prime(32003);
    const std::vector<std::string> names = {"x", "y", "z"};

    auto random_grading = [&](std::size_t nvars) {
        std::vector<std::int64_t> w(nvars);
        for (auto& v : w) v = rng.range(1, 3);
        return GradingMap({w}, nvars);
    };

    for (std::size_t k = 0; k < cases; ++k) {
        std::size_t nvars = 2 + rng.below(2);
        Ring ring(field, std::vector<std::string>(names.begin(), names.begin() + nvars));
        GradingMap grading = rng.chance(50) ? GradingMap::standard(nvars) : random_grading(nvars);
        Ideal ideal = random_ideal(rng, ring, 4, 4);
        if (collect) collect->push_back(ideal);

        std::string verdict = "ok";
        StarResult sr = star(ideal, grading);
        const Ideal& st = sr.star_ideal;
        if (collect) collect->push_back(st);
        if (!ideal_subset(st, ideal)) {
            verdict = "star not contained in the ideal";
        } else if (!is_graded(st, grading)) {
            verdict = "star not graded";
        } else if (!ideal_equal(star(st, grading).star_ideal, st)) {
            verdict = "star not idempotent";
        } else if (is_graded(ideal, grading) != ideal_equal(st, ideal)) {
            verdict = "graded fixed-point criterion failed";
        } else {
            std::int64_t bound = std::max(2 + max_generator_degree(ideal),
                                          max_generator_degree(st));
            Ideal oracle = star_truncated_oracle(ideal, grading, bound);
            if (!ideal_equal(oracle, st)) verdict = "truncated oracle disagrees";
        }
        report.add("case " + std::to_string(k), "ok", verdict);
    }

    for (std::size_t k = 0; k < pair_cases; ++k) {
        std::size_t nvars = 2;
        Ring ring(field, std::vector<std::string>(names.begin(), names.begin() + nvars));
        GradingMap grading = GradingMap::standard(nvars);
        Ideal a = random_ideal(rng, ring, 3, 3);
        Ideal b = random_ideal(rng, ring, 3, 3);
        if (collect) {
            collect->push_back(a);
            collect->push_back(b);
        }
        Ideal meet = intersect(a, b);
        Ideal lhs = star(meet, grading).star_ideal;
        Ideal rhs = intersect(star(a, grading).star_ideal, star(b, grading).star_ideal);
        std::string verdict = ideal_equal(lhs, rhs) ? "ok" : "star does not commute with meet";
        // Monotonicity along a <= a + b.
        if (verdict == "ok") {
            Ideal sum = ideal_sum(a, b);
            if (!ideal_subset(star(a, grading).star_ideal, star(sum, grading).star_ideal))
                verdict = "star not monotone";
        }
        report.add("pair " + std::to_string(k), "ok", verdict);
    }
    return report;
}

Report graded_field_suite(std::uint64_t seed, std::size_t cases) {
    Report report;
    report.title = "graded-field elimination suite";
    report.seed = seed;
    Rng rng(seed);

    for (std::size_t k = 0; k < cases; ++k) {
        Field base = rng.chance(50) ? Field::prime(7) : Field::prime(32003);
        const std::size_t m = 2;
        std::size_t ngens = rng.below(3);
        std::vector<LatticeVector> gens;
        for (std::size_t g = 0; g < ngens; ++g)
            gens.push_back({rng.range(-2, 2), rng.range(-2, 2)});
        SupportLattice lattice(m, gens);
        GradedFieldPresentation pres{base, m, lattice};

        auto lattice_point = [&]() {
            LatticeVector v(m, 0);
            for (const auto& row : lattice.basis()) {
                std::int64_t c = rng.range(-2, 2);
                for (std::size_t i = 0; i < m; ++i) v[i] += c * row[i];
            }
            return v;
        };
        LatticeVector offset{rng.range(-3, 3), rng.range(-3, 3)};
        auto shifted = [&](const LatticeVector& v) {
            LatticeVector r = offset;
            for (std::size_t i = 0; i < m; ++i) r[i] += v[i];
            return r;
        };

        std::size_t rows = 1 + rng.below(4);
        std::size_t cols = 1 + rng.below(4);
        std::vector<LatticeVector> rowdeg, coldeg;
        for (std::size_t r = 0; r < rows; ++r) rowdeg.push_back(shifted(lattice_point()));
        for (std::size_t c = 0; c < cols; ++c) coldeg.push_back(shifted(lattice_point()));

        std::vector<GradedFieldElement> entries;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                LatticeVector deg(m);
                for (std::size_t i = 0; i < m; ++i) deg[i] = rowdeg[r][i] - coldeg[c][i];
                if (rng.chance(55)) {
                    FieldElement s = FieldElement::from_integer(
                        base, rng.range(1, base.modulus() - 1));
                    entries.push_back(GradedFieldElement{s, deg});
                } else {
                    entries.push_back(GradedFieldElement{FieldElement::zero(base), deg});
                }
            }
        HomogeneousMatrix matrix(pres, rowdeg, coldeg, entries);

        std::string verdict = "ok";
        FreeModuleReport fr = graded_free_basis(matrix);
        // Independent rank via plain dense elimination on the scalars.
        DenseMatrix dense(base, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) dense.at(r, c) = matrix.at(r, c).scalar;
        if (fr.matrix_rank != dense.rank())
            verdict = "rank differs from dense elimination";
        else if (fr.matrix_rank + fr.free_rank() != rows)
            verdict = "rank-nullity violated";
        else {
            // Labeled shuffle must not change the rank.
            std::vector<std::size_t> rp(rows), cp(cols);
            for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
            for (std::size_t i = 0; i < cols; ++i) cp[i] = i;
            for (std::size_t i = rows; i > 1; --i) std::swap(rp[i - 1], rp[rng.below(i)]);
            for (std::size_t i = cols; i > 1; --i) std::swap(cp[i - 1], cp[rng.below(i)]);
            std::vector<LatticeVector> rd2, cd2;
            std::vector<GradedFieldElement> e2;
            for (std::size_t r = 0; r < rows; ++r) rd2.push_back(rowdeg[rp[r]]);
            for (std::size_t c = 0; c < cols; ++c) cd2.push_back(coldeg[cp[c]]);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) e2.push_back(matrix.at(rp[r], cp[c]));
            HomogeneousMatrix shuffled(pres, rd2, cd2, e2);
            if (graded_free_basis(shuffled).matrix_rank != fr.matrix_rank)
                verdict = "rank changed under a labeled shuffle";
        }
        report.add("case " + std::to_string(k) + " (" + std::to_string(rows) + "x" +
                       std::to_string(cols) + ")",
                   "ok", verdict);
    }
    return report;
}

Report groebner_soundness_report(const std::vector<Ideal>& pool, std::uint64_t seed,
                                 std::size_t membership_pairs) {
    Report report;
    report.title = "Groebner engine soundness";
    report.seed = seed;
    Rng rng(seed);

    std::size_t bad_generator = 0, bad_spoly = 0, bases_checked = 0;
    for (const auto& ideal : pool) {
        const GroebnerBasis& gb = ideal.canonical_basis();
        ++bases_checked;
        for (const auto& g : ideal.generators())
            if (!normal_form(g, gb).is_zero()) ++bad_generator;
        const auto& els = gb.elements();
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t j = i + 1; j < els.size(); ++j)
                if (!normal_form(s_polynomial(els[i], els[j]), gb).is_zero()) ++bad_spoly;
    }
    report.add("generators reducing to zero over " + std::to_string(bases_checked) + " bases",
               "all", bad_generator == 0 ? "all" : std::to_string(bad_generator) + " failures");
    report.add("S-polynomials reducing to zero", "all",
               bad_spoly == 0 ? "all" : std::to_string(bad_spoly) + " failures");

    if (!pool.empty()) {
        std::size_t mismatches = 0;
        for (std::size_t k = 0; k < membership_pairs; ++k) {
            const Ideal& ideal = pool[rng.below(pool.size())];
            const Ring& ring = ideal.ring();
            if (ideal.generators().empty()) continue;
            if (rng.chance(60)) {
                // Constructed member: f = sum h_i g_i with a known certificate degree.
                Polynomial f(ring, kOrder);
                std::int64_t witness_degree = 0;
                for (const auto& g : ideal.generators()) {
                    if (rng.chance(40)) continue;
                    Polynomial h = random_polynomial(rng, ring, 2, 2);
                    f = f + h * g;
                    witness_degree = std::max(witness_degree,
                                              h.total_degree() + g.total_degree());
                }
                if (f.is_zero()) continue;
                bool by_normal_form = ideal.contains(f);
                bool by_span = membership_span_oracle(f, ideal, witness_degree);
                if (!by_normal_form || !by_span) ++mismatches;
            } else {
                // Random probe: span membership at any bound must imply
                // normal-form membership (the span sits inside the ideal).
                Polynomial f = random_polynomial(rng, ring, 3, 3);
                if (f.is_zero()) continue;
                bool by_normal_form = ideal.contains(f);
                bool by_span = membership_span_oracle(f, ideal, f.total_degree() + 2);
                if (by_span && !by_normal_form) ++mismatches;
            }
        }
        report.add("membership vs truncated-span oracle on " +
                       std::to_string(membership_pairs) + " pairs",
                   "agree", mismatches == 0 ? "agree" : std::to_string(mismatches) + " mismatches");
    }
    return report;
}

}  // namespace gradix
