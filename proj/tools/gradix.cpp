// Command-line frontend: every engine operation plus the verification suites.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradix/artinian.hpp"
#include "gradix/graded_field.hpp"
#include "gradix/harness.hpp"
#include "gradix/monomial_ideal.hpp"
#include "gradix/parse.hpp"
#include "gradix/star.hpp"

namespace {

using namespace gradix;
using nlohmann::json;

struct Common {
    std::string ring_text = "QQ[x,y]";
    std::string grading_text;
    std::string order_text = "grevlex";
    std::string format = "text";
    std::string session_path;
    bool ring_given = false;

    SessionFile session;
    bool session_loaded = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_grading = false) {
    cmd->add_option("--ring", c.ring_text, "coefficient ring, e.g. QQ[x,y] or GF(32003)[x,y]")
        ->each([&c](const std::string&) { c.ring_given = true; });
    if (with_grading)
        cmd->add_option("--grading", c.grading_text,
                        "integer weight matrix, e.g. [[1,1]]; default: all weights 1");
    cmd->add_option("--order", c.order_text, "monomial order: lex or grevlex");
    cmd->add_option("--format", c.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--session", c.session_path, "session file with named declarations");
}

void load_session(Common& c) {
    if (c.session_path.empty() || c.session_loaded) return;
    std::ifstream in(c.session_path);
    if (!in) throw usage_error("cannot open session file '" + c.session_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    c.session = parse_session(buf.str());
    c.session_loaded = true;
}

Ring resolve_ring(Common& c) {
    load_session(c);
    if (!c.ring_given && c.session_loaded && c.session.ring) return *c.session.ring;
    return parse_ring(c.ring_text);
}

MonomialOrder resolve_order(Common& c) { return parse_order(c.order_text); }

GradingMap resolve_grading(Common& c, const Ring& ring) {
    if (!c.grading_text.empty()) return parse_grading(c.grading_text, ring.nvars());
    if (c.session_loaded && c.session.grading &&
        c.session.grading->nvars() == ring.nvars())
        return *c.session.grading;
    return GradingMap::standard(ring.nvars());
}

Ideal resolve_ideal(Common& c, const std::string& text, const Ring& ring, MonomialOrder order) {
    load_session(c);
    if (c.session_loaded) {
        for (const auto& [name, ideal] : c.session.ideals)
            if (name == text) {
                if (ideal.ring() != ring)
                    throw usage_error("session ideal '" + name + "' lives in " +
                                      ideal.ring().to_string());
                return ideal;
            }
        return parse_ideal(text, ring, order, &c.session.ideals);
    }
    return parse_ideal(text, ring, order);
}

std::string ideal_text(const Ideal& ideal) {
    const auto& els = ideal.canonical_basis().elements();
    if (els.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (i) s += ", ";
        s += els[i].to_string();
    }
    return s;
}

json ideal_json(const Ideal& ideal) {
    json a = json::array();
    for (const auto& g : ideal.canonical_basis().elements()) a.push_back(g.to_string());
    return a;
}

void emit(const Common& c, const std::string& text, const json& record) {
    if (c.format == "json")
        std::cout << record.dump(2) << "\n";
    else
        std::cout << text;
}

MonomialIdeal to_monomial_ideal(const Ideal& ideal) {
    std::vector<Monomial> monos;
    for (const auto& g : ideal.generators()) {
        if (g.term_count() != 1)
            throw usage_error("expected a monomial ideal; generator '" + g.to_string() +
                              "' is not a single term");
        monos.push_back(g.leading_monomial());
    }
    return MonomialIdeal(ideal.ring(), std::move(monos));
}

int report_exit(const Report& report) { return report.all_pass() ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradix: exact computations with multigraded polynomial ideals"};
    app.require_subcommand(1);

    Common c;
    std::string ideal_arg, second_arg, poly_arg, vars_arg, file_arg, points_arg;
    bool witness = false;

    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis");
    add_common(gb_cmd, c);
    gb_cmd->add_option("ideal", ideal_arg, "generators, comma separated")->required();

    auto* member_cmd = app.add_subcommand("member", "ideal membership test");
    add_common(member_cmd, c);
    member_cmd->add_option("poly", poly_arg, "polynomial")->required();
    member_cmd->add_option("ideal", ideal_arg, "generators")->required();

    auto* intersect_cmd = app.add_subcommand("intersect", "intersection of two ideals");
    add_common(intersect_cmd, c);
    intersect_cmd->add_option("first", ideal_arg)->required();
    intersect_cmd->add_option("second", second_arg)->required();

    auto* quotient_cmd = app.add_subcommand("quotient", "colon ideal (I : J)");
    add_common(quotient_cmd, c);
    quotient_cmd->add_option("first", ideal_arg)->required();
    quotient_cmd->add_option("second", second_arg)->required();

    auto* saturate_cmd = app.add_subcommand("saturate", "saturation (I : f^infinity)");
    add_common(saturate_cmd, c);
    saturate_cmd->add_option("ideal", ideal_arg)->required();
    saturate_cmd->add_option("poly", poly_arg)->required();

    auto* eliminate_cmd = app.add_subcommand("eliminate", "eliminate variables");
    add_common(eliminate_cmd, c);
    eliminate_cmd->add_option("ideal", ideal_arg)->required();
    eliminate_cmd->add_option("vars", vars_arg, "comma-separated variables")->required();

    auto* star_cmd = app.add_subcommand("star", "largest graded subideal");
    add_common(star_cmd, c, true);
    star_cmd->add_option("ideal", ideal_arg)->required();
    star_cmd->add_flag("--witness", witness, "print the homogeneous certificates");

    auto* isgraded_cmd = app.add_subcommand("isgraded", "test whether the ideal is graded");
    add_common(isgraded_cmd, c, true);
    isgraded_cmd->add_option("ideal", ideal_arg)->required();

    auto* socle_cmd = app.add_subcommand("socle", "socle basis of an m-primary ideal");
    add_common(socle_cmd, c);
    socle_cmd->add_option("ideal", ideal_arg)->required();

    auto* ir_cmd = app.add_subcommand("ir", "index of reducibility of an m-primary ideal");
    add_common(ir_cmd, c);
    ir_cmd->add_option("ideal", ideal_arg)->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "irreducible decomposition of a monomial ideal");
    add_common(decompose_cmd, c);
    decompose_cmd->add_option("ideal", ideal_arg)->required();

    auto* minprimes_cmd =
        app.add_subcommand("minprimes", "minimal primes of a squarefree monomial ideal");
    add_common(minprimes_cmd, c);
    minprimes_cmd->add_option("ideal", ideal_arg)->required();

    auto* gfree_cmd =
        app.add_subcommand("gfree", "free-module report for a graded-field matrix");
    add_common(gfree_cmd, c);
    gfree_cmd->add_option("file", file_arg, "matrix file, or a session matrix name")->required();

    auto* points_cmd =
        app.add_subcommand("points", "star comparison for a planar point configuration");
    add_common(points_cmd, c);
    points_cmd->add_option("points", points_arg, "e.g. \"(0,1), (0,2)\"")->required();

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->require_subcommand(1);
    auto* verify_paper = verify_cmd->add_subcommand("paper", "golden reference examples");
    std::uint64_t seed = 20260810;
    std::size_t cases = 50;
    auto* verify_random = verify_cmd->add_subcommand("random", "randomized property suites");
    verify_random->add_option("--seed", seed, "random seed");
    verify_random->add_option("--cases", cases, "cases per suite");
    std::string verify_format = "text";
    verify_paper->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    verify_random->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);

        if (*gb_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            Ideal ideal = resolve_ideal(c, ideal_arg, ring, order);
            const GroebnerBasis& basis = ideal.groebner(order);
            std::string text;
            json elements = json::array();
            for (std::size_t i = 0; i < basis.elements().size(); ++i) {
                if (i) text += ", ";
                text += basis.elements()[i].to_string();
                elements.push_back(basis.elements()[i].to_string());
            }
            if (basis.elements().empty()) text = "0";
            emit(c, text + "\n",
                 {{"command", "gb"},
                  {"ring", ring.to_string()},
                  {"order", order.to_string()},
                  {"basis", elements}});
        } else if (*member_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            Ideal ideal = resolve_ideal(c, ideal_arg, ring, order);
            Polynomial f = parse_polynomial(poly_arg, ring, order);
            bool in = ideal_membership(f, ideal);
            emit(c, std::string(in ? "true" : "false") + "\n",
                 {{"command", "member"}, {"poly", f.to_string()}, {"member", in}});
        } else if (*intersect_cmd || *quotient_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            Ideal a = resolve_ideal(c, ideal_arg, ring, order);
            Ideal b = resolve_ideal(c, second_arg, ring, order);
            Ideal r = *intersect_cmd ? intersect(a, b) : quotient(a, b);
            emit(c, ideal_text(r) + "\n",
                 {{"command", *intersect_cmd ? "intersect" : "quotient"},
                  {"ring", ring.to_string()},
                  {"generators", ideal_json(r)}});
        } else if (*saturate_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            Ideal a = resolve_ideal(c, ideal_arg, ring, order);
            Polynomial f = parse_polynomial(poly_arg, ring, order);
            Ideal r = saturate(a, f);
            emit(c, ideal_text(r) + "\n",
                 {{"command", "saturate"}, {"generators", ideal_json(r)}});
        } else if (*eliminate_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            Ideal a = resolve_ideal(c, ideal_arg, ring, order);
            std::vector<std::string> vars;
            std::stringstream ss(vars_arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::string t;
                for (char ch : item)
                    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
                if (!t.empty()) vars.push_back(t);
            }
            Ideal r = eliminate(a, vars);
            emit(c, ideal_text(r) + "\n",
                 {{"command", "eliminate"}, {"generators", ideal_json(r)}});
        } else if (*star_cmd || *isgraded_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            GradingMap grading = resolve_grading(c, ring);
            Ideal a = resolve_ideal(c, ideal_arg, ring, order);
            if (*isgraded_cmd) {
                bool graded = is_graded(a, grading);
                emit(c, std::string(graded ? "true" : "false") + "\n",
                     {{"command", "isgraded"},
                      {"grading", grading.to_string()},
                      {"graded", graded}});
            } else {
                StarResult sr = star(a, grading);
                std::string text = ideal_text(sr.star_ideal) + "\n";
                json jw = json::array();
                if (witness)
                    for (const auto& [gen, cert] : sr.witnesses) {
                        text += "witness: " + gen.to_string() + " <- " + cert.to_string() + "\n";
                        jw.push_back({{"generator", gen.to_string()},
                                      {"certificate", cert.to_string()}});
                    }
                json record = {{"command", "star"},
                               {"grading", grading.to_string()},
                               {"generators", ideal_json(sr.star_ideal)}};
                if (witness) record["witnesses"] = jw;
                emit(c, text, record);
            }
        } else if (*socle_cmd || *ir_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            Ideal a = resolve_ideal(c, ideal_arg, ring, order);
            if (*ir_cmd) {
                std::size_t ir = index_of_reducibility_primary(a);
                emit(c, std::to_string(ir) + "\n", {{"command", "ir"}, {"ir", ir}});
            } else {
                SocleBasis basis = socle(a);
                std::string text = "rank: " + std::to_string(basis.rank()) + "\nbasis: ";
                json jb = json::array();
                for (std::size_t i = 0; i < basis.elements.size(); ++i) {
                    if (i) text += ", ";
                    text += basis.elements[i].to_string();
                    jb.push_back(basis.elements[i].to_string());
                }
                emit(c, text + "\n",
                     {{"command", "socle"}, {"rank", basis.rank()}, {"basis", jb}});
            }
        } else if (*decompose_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            MonomialIdeal mono = to_monomial_ideal(resolve_ideal(c, ideal_arg, ring, order));
            IrreducibleDecomposition dec = irreducible_decomposition(mono);
            std::string text = "count: " + std::to_string(dec.count()) + "\n";
            json jc = json::array();
            for (const auto& comp : dec.components) {
                text += "component: " + comp.to_string() + "\n";
                jc.push_back(comp.to_string());
            }
            emit(c, text,
                 {{"command", "decompose"}, {"count", dec.count()}, {"components", jc}});
        } else if (*minprimes_cmd) {
            Ring ring = resolve_ring(c);
            MonomialOrder order = resolve_order(c);
            MonomialIdeal mono = to_monomial_ideal(resolve_ideal(c, ideal_arg, ring, order));
            auto primes = minimal_primes_squarefree(mono);
            std::string text;
            json jp = json::array();
            for (const auto& prime : primes) {
                std::string s = "{";
                for (std::size_t i = 0; i < prime.size(); ++i) {
                    if (i) s += ",";
                    s += ring.variable(prime[i]);
                }
                s += "}";
                text += s + "\n";
                jp.push_back(s);
            }
            emit(c, text, {{"command", "minprimes"}, {"primes", jp}});
        } else if (*gfree_cmd) {
            load_session(c);
            std::string content;
            bool named = false;
            if (c.session_loaded)
                for (const auto& [name, matrix] : c.session.matrices)
                    if (name == file_arg) {
                        content = print_gfmatrix(matrix);
                        named = true;
                    }
            if (!named) {
                std::ifstream in(file_arg);
                if (!in) throw usage_error("cannot open matrix file '" + file_arg + "'");
                std::stringstream buf;
                buf << in.rdbuf();
                content = buf.str();
            }
            HomogeneousMatrix matrix = parse_gfmatrix(content);
            FreeModuleReport fr = graded_free_basis(matrix);
            std::string text = "rank: " + std::to_string(fr.matrix_rank) + "\nfree rank: " +
                               std::to_string(fr.free_rank()) + "\ncokernel degrees:";
            json jd = json::array();
            for (const auto& d : fr.cokernel_degrees) {
                text += " " + degree_to_string(d);
                jd.push_back(degree_to_string(d));
            }
            text += "\n";
            emit(c, text,
                 {{"command", "gfree"},
                  {"rank", fr.matrix_rank},
                  {"free_rank", fr.free_rank()},
                  {"cokernel_degrees", jd}});
        } else if (*points_cmd) {
            Ring ring = resolve_ring(c);
            PointConfiguration config = parse_points(points_arg, ring.field());
            StarComparisonReport rep = theorem51_check(config);
            std::string text = "ir(I): " + std::to_string(rep.ir_ideal) + "\nir(I*): " +
                               std::to_string(rep.ir_star) + "\nbijective: " +
                               (rep.bijective ? "true" : "false") + "\nI*: " +
                               ideal_text(rep.star_ideal) + "\n";
            json jd = json::array();
            for (const auto& [pt, image] : rep.details) {
                text += "star image of " + pt + ": " + image + "\n";
                jd.push_back({{"point", pt}, {"image", image}});
            }
            emit(c, text,
                 {{"command", "points"},
                  {"ir", rep.ir_ideal},
                  {"ir_star", rep.ir_star},
                  {"bijective", rep.bijective},
                  {"star", ideal_json(rep.star_ideal)},
                  {"details", jd}});
            if (!rep.inequality_holds || !rep.star_matches_prediction ||
                !rep.star_components_prime)
                return 1;
        } else if (*verify_paper) {
            Report report = reference_examples_report();
            std::cout << (verify_format == "json" ? report.to_json() + "\n" : report.to_table());
            return report_exit(report);
        } else if (*verify_random) {
            std::vector<Report> reports;
            reports.push_back(theorem51_suite(seed, cases));
            reports.push_back(monomial_socle_suite(seed + 1, cases));
            reports.push_back(star_laws_suite(seed + 2, cases, cases / 2));
            reports.push_back(graded_field_suite(seed + 3, cases));
            bool pass = true;
            for (const auto& r : reports) {
                std::cout << (verify_format == "json" ? r.to_json() + "\n" : r.to_table());
                pass = pass && r.all_pass();
            }
            return pass ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
