#include "colorsuper/clifford.hpp"
#include "colorsuper/diffop.hpp"
#include "colorsuper/singular.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace colorsuper;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

Rat parse_rat(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an exact rational \"p/q\", got \"" + s + "\"");
    }
}

long env_max_level() {
    if (const char* e = std::getenv("COLORSUPER_MAX_LEVEL")) {
        try {
            return std::stol(e);
        } catch (const std::exception&) {
            throw CLI::ValidationError("COLORSUPER_MAX_LEVEL is not an integer");
        }
    }
    return 12;
}

std::pair<long, long> parse_grid(const std::string& s) {
    auto pos = s.find("..", s.empty() || s[0] != '-' ? 0 : 1);
    if (pos == std::string::npos)
        throw CLI::ValidationError("expected a grid \"a..b\", got \"" + s + "\"");
    try {
        long a = std::stol(s.substr(0, pos));
        long b = std::stol(s.substr(pos + 2));
        if (a > b) throw CLI::ValidationError("empty grid \"" + s + "\"");
        return {a, b};
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a grid \"a..b\", got \"" + s + "\"");
    }
}

ordered_json json_element(const AlgebraElement& e) {
    ordered_json out = ordered_json::array();
    for (const auto& [key, c] : e.terms())
        out.push_back({{"zeta", key.zeta},
                       {"gen", name_of(key.gen)},
                       {"coeff", to_string(c)}});
    return out;
}

ordered_json json_vector(const VermaVector& v) {
    ordered_json out = ordered_json::array();
    for (const auto& [ket, c] : v.terms())
        out.push_back({{"ket", to_string(ket)}, {"coeff", to_string(c)}});
    return out;
}

ordered_json json_operator(const DiffOperator& op) {
    ordered_json terms = ordered_json::array();
    for (const auto& [d, c] : op.terms())
        terms.push_back({{"coefficient", pretty(c)},
                         {"derivative", {{"dx", d.dx}, {"dv1", d.d1}, {"dv2", d.d2}}}});
    ordered_json vars = ordered_json::array();
    for (SVar v : chart_variables(op.chart())) vars.push_back(variable_info(v).name);
    return {{"chart", to_string(op.chart())}, {"variables", vars}, {"terms", terms}};
}

// ---- algebra check -------------------------------------------------------

int run_algebra_check(bool as_json) {
    AxiomReport rep = check_axioms(StructureTable());
    const ColorAlgebra& alg = standard_algebra();
    auto anti = alg.check_anti_involution();
    bool twisted_ok = true;
    std::string twisted_detail;
    try {
        alg.build_new_basis();
    } catch (const RelationMismatch& e) {
        twisted_ok = false;
        twisted_detail = e.what();
    }
    bool ok = rep.ok() && anti.ok() && twisted_ok;

    if (as_json) {
        ordered_json viol = ordered_json::array();
        for (const auto& v : rep.violations) {
            ordered_json gens = ordered_json::array();
            for (Gen g : v.gens) gens.push_back(name_of(g));
            viol.push_back({{"kind", v.kind}, {"gens", gens}, {"detail", v.detail}});
        }
        for (const auto& [x, y] : anti.bracket_failures)
            viol.push_back({{"kind", "anti-involution"},
                            {"gens", {name_of(x), name_of(y)}},
                            {"detail", "omega reverses the bracket"}});
        for (Gen g : anti.involution_failures)
            viol.push_back({{"kind", "anti-involution"},
                            {"gens", {name_of(g)}},
                            {"detail", "omega^2 != id"}});
        if (!twisted_ok)
            viol.push_back({{"kind", "twisted-basis"}, {"gens", ordered_json::array()},
                            {"detail", twisted_detail}});
        ordered_json out = {{"closure_checks", rep.closure_checks},
                            {"antisymmetry_checks", rep.antisymmetry_checks},
                            {"jacobi_checks", rep.jacobi_checks},
                            {"anti_involution_ok", anti.ok()},
                            {"twisted_basis_ok", twisted_ok},
                            {"violations", viol},
                            {"ok", ok}};
        std::cout << out.dump(2) << "\n";
        return ok ? kOk : kViolation;
    }

    std::cout << "grading closure verified (" << rep.closure_checks << " pairs)\n"
              << "graded antisymmetry verified (" << rep.antisymmetry_checks
              << " pairs)\n"
              << rep.jacobi_checks << " Jacobi triples verified\n";
    for (const auto& v : rep.violations) {
        std::cout << "violation [" << v.kind << "]";
        for (Gen g : v.gens) std::cout << " " << name_of(g);
        std::cout << ": " << v.detail << "\n";
    }
    if (anti.ok()) {
        std::cout << "anti-involution verified (64 bracket pairs, 8 generators)\n";
    } else {
        for (const auto& [x, y] : anti.bracket_failures)
            std::cout << "anti-involution violation at (" << name_of(x) << ", "
                      << name_of(y) << ")\n";
        for (Gen g : anti.involution_failures)
            std::cout << "omega^2 != id on " << name_of(g) << "\n";
    }
    if (twisted_ok)
        std::cout << "twisted-basis relations verified\n";
    else
        std::cout << "twisted-basis violation: " << twisted_detail << "\n";
    return ok ? kOk : kViolation;
}

// ---- algebra table -------------------------------------------------------

int run_algebra_table(const std::string& basis, const std::string& format) {
    const ColorAlgebra& alg = standard_algebra();
    std::array<Gen, 8> gens = basis == "old" ? old_basis() : new_basis();

    auto entry = [&](Gen x, Gen y) {
        return basis == "old"
                   ? alg.bracket(AlgebraElement::generator(x), AlgebraElement::generator(y))
                   : alg.new_basis_bracket(x, y);
    };

    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (Gen x : gens)
            for (Gen y : gens)
                rows.push_back({{"x", name_of(x)},
                                {"y", name_of(y)},
                                {"bracket", json_element(entry(x, y))}});
        std::cout << ordered_json{{"basis", basis}, {"rows", rows}}.dump(2) << "\n";
        return kOk;
    }
    for (Gen x : gens)
        for (Gen y : gens) {
            std::ostringstream lhs;
            lhs << "[[" << name_of(x) << ", " << name_of(y) << "]]";
            std::cout << std::left << std::setw(16) << lhs.str() << " = "
                      << pretty(entry(x, y)) << "\n";
        }
    return kOk;
}

// ---- straighten ----------------------------------------------------------

int run_straighten(const std::string& word, const std::string& pivot, bool as_json) {
    Word w = parse_word(word);
    Pivot p = pivot == "rightmost" ? Pivot::rightmost : Pivot::leftmost;
    NormalForm nf = straighten(w, p);
    if (as_json) {
        ordered_json terms = ordered_json::array();
        for (const auto& [mono, c] : nf.terms()) {
            ordered_json gens = ordered_json::array();
            for (Gen g : mono) gens.push_back(name_of(g));
            terms.push_back({{"monomial", gens}, {"coeff", to_string(c)}});
        }
        std::cout << ordered_json{{"input", word}, {"terms", terms}}.dump(2) << "\n";
    } else {
        std::cout << pretty(nf) << "\n";
    }
    return kOk;
}

// ---- verma act -----------------------------------------------------------

int run_verma_act(const std::string& gen, const std::string& ket, bool as_json) {
    VermaVector v = act(gen_from_name(gen), ket_from_string(ket));
    if (as_json)
        std::cout << ordered_json{{"gen", gen}, {"ket", ket}, {"result", json_vector(v)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << pretty(v) << "\n";
    return kOk;
}

// ---- singular scan / classify ---------------------------------------------

int run_singular_scan(const std::string& grid, long max_level, bool as_json) {
    auto [lo, hi] = parse_grid(grid);
    ordered_json rows = ordered_json::array();
    for (long h0 = lo; h0 <= hi; ++h0)
        for (long f0 = lo; f0 <= hi; ++f0) {
            SingularReport rep = find_singular_numeric(Rat(h0), Rat(f0), max_level);
            if (as_json) {
                ordered_json hits = ordered_json::array();
                for (const auto& hit : rep.hits)
                    hits.push_back({{"level", hit.level},
                                    {"vector", json_vector(hit.vector)}});
                rows.push_back({{"h", std::to_string(h0)},
                                {"f", std::to_string(f0)},
                                {"hits", hits}});
                continue;
            }
            std::ostringstream pt;
            pt << "h=" << h0 << " f=" << f0 << ":";
            std::cout << std::left << std::setw(12) << pt.str();
            if (rep.empty()) {
                std::cout << " none\n";
            } else {
                bool first = true;
                for (const auto& hit : rep.hits) {
                    if (!first) std::cout << ";";
                    first = false;
                    std::cout << " level " << hit.level << "  " << pretty(hit.vector);
                }
                std::cout << "\n";
            }
        }
    if (as_json)
        std::cout << ordered_json{{"grid", grid}, {"max_level", max_level},
                                  {"points", rows}}
                         .dump(2)
                  << "\n";
    return kOk;
}

int run_singular_classify(long max_level, bool as_json) {
    std::vector<SingularFamily> fams = classify_singular_symbolic(max_level);
    if (as_json) {
        ordered_json out = ordered_json::array();
        for (const auto& fam : fams) {
            ordered_json eq = ordered_json::array();
            ordered_json ne = ordered_json::array();
            for (const auto& p : fam.equal_zero) eq.push_back(pretty(p));
            for (const auto& p : fam.nonzero) ne.push_back(pretty(p));
            out.push_back({{"level", fam.level},
                           {"equal_zero", eq},
                           {"nonzero", ne},
                           {"vector", json_vector(fam.vector)}});
        }
        std::cout << ordered_json{{"max_level", max_level}, {"families", out}}.dump(2)
                  << "\n";
        return kOk;
    }
    for (const auto& fam : fams) {
        std::cout << "level " << fam.level << ": " << pretty(fam.vector) << "\n";
        for (const auto& p : fam.equal_zero)
            std::cout << "  requires " << pretty(p) << " = 0\n";
        for (const auto& p : fam.nonzero)
            std::cout << "  excludes " << pretty(p) << " = 0\n";
    }
    return kOk;
}

// ---- pde derive ------------------------------------------------------------

void print_operator_pair(const DiffOperator& op) {
    DiffOperator other = rewrite_in_psi_theta(op);
    std::cout << "  chart (x, zeta, psi+, psi-): " << pretty(op) << "\n"
              << "  chart (x, zeta, psi, theta): " << pretty(other) << "\n";
}

ordered_json json_operator_pair(const DiffOperator& op) {
    return {{"psi_pm", json_operator(op)},
            {"psi_theta", json_operator(rewrite_in_psi_theta(op))}};
}

int run_pde_derive(const CLI::App& cmd, const std::string& h_str,
                   const std::string& f_str, long n, long max_level, bool as_json) {
    if (cmd.count("--symbolic")) {
        if (n < 1) throw CLI::ValidationError("--symbolic needs --n >= 1");
        Scalar alpha = Scalar(Rat(n)) / (scalar_f() - Scalar(Rat(n)));
        VermaVector v =
            VermaVector::ket({n, 0, 0}) + VermaVector::ket({n - 1, 1, 1}, alpha);
        DiffOperator op = realize_singular(v);
        if (as_json) {
            std::cout << ordered_json{{"n", n},
                                      {"level", 2 * n},
                                      {"vector", json_vector(v)},
                                      {"operator", json_operator_pair(op)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "level " << 2 * n << " operator (h = -" << n
                      << ", f generic)\n";
            print_operator_pair(op);
        }
        return kOk;
    }
    if (!cmd.count("--h") || !cmd.count("--f"))
        throw CLI::ValidationError("pde derive needs --h and --f, or --symbolic --n");
    Rat h0 = parse_rat(h_str);
    Rat f0 = parse_rat(f_str);
    SingularReport rep = find_singular_numeric(h0, f0, max_level);
    WeightData w{Scalar(h0), Scalar(f0)};
    if (as_json) {
        ordered_json ops = ordered_json::array();
        for (const auto& hit : rep.hits) {
            DiffOperator op = realize_singular(hit.vector, w).eval_weights(h0, f0);
            ops.push_back({{"level", hit.level},
                           {"vector", json_vector(hit.vector)},
                           {"operator", json_operator_pair(op)}});
        }
        std::cout << ordered_json{{"h", h0.str()}, {"f", f0.str()},
                                  {"max_level", max_level}, {"operators", ops}}
                         .dump(2)
                  << "\n";
        return kOk;
    }
    if (rep.empty()) {
        std::cout << "no singular vectors at h=" << h0.str() << ", f=" << f0.str()
                  << " up to level " << max_level << "; the module is irreducible\n";
        return kOk;
    }
    for (const auto& hit : rep.hits) {
        DiffOperator op = realize_singular(hit.vector, w).eval_weights(h0, f0);
        std::cout << "level " << hit.level << " operator\n";
        print_operator_pair(op);
    }
    return kOk;
}

// ---- grassmann verify ------------------------------------------------------

int run_grassmann_verify(const std::string& sig_str, bool as_json) {
    auto comma = sig_str.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected a signature \"p,q\", got \"" + sig_str + "\"");
    Signature s;
    try {
        s.p = std::stoi(sig_str.substr(0, comma));
        s.q = std::stoi(sig_str.substr(comma + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a signature \"p,q\", got \"" + sig_str + "\"");
    }
    GrassmannReport rep = verify_grassmann_realization(s);
    if (as_json) {
        ordered_json viol = ordered_json::array();
        for (const auto& v : rep.violations) viol.push_back(v);
        std::cout << ordered_json{{"signature", {s.p, s.q}},
                                  {"pairs_checked", rep.pairs_checked},
                                  {"violations", viol},
                                  {"ok", rep.ok()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << rep.pairs_checked << " graded bracket pairs checked for Cl("
                  << s.p << "," << s.q << ")\n";
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
        if (rep.ok()) std::cout << "all graded brackets vanish\n";
    }
    return rep.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in a Z2xZ2 graded superalgebra: structure "
                 "checks, Verma modules, singular vectors, and the invariant "
                 "differential operators they induce"};
    app.require_subcommand(1);

    bool json_out = false;

    // algebra
    CLI::App* algebra = app.add_subcommand("algebra", "structure table commands");
    algebra->require_subcommand(1);
    CLI::App* alg_check = algebra->add_subcommand(
        "check", "verify closure, antisymmetry, Jacobi, the anti-involution, "
                 "and the twisted-basis relations");
    alg_check->add_flag("--json", json_out, "machine-readable output");
    std::string basis = "old";
    std::string format = "text";
    CLI::App* alg_table = algebra->add_subcommand("table", "print the bracket table");
    alg_table->add_option("--basis", basis, "old | new")
        ->check(CLI::IsMember({"old", "new"}));
    alg_table->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // straighten
    std::string word;
    std::string pivot = "leftmost";
    CLI::App* str_cmd = app.add_subcommand(
        "straighten", "normal-order a word of generators in the enveloping algebra");
    str_cmd->add_option("word", word, "whitespace-separated generator names")
        ->required();
    str_cmd->add_option("--pivot", pivot, "leftmost | rightmost")
        ->check(CLI::IsMember({"leftmost", "rightmost"}));
    str_cmd->add_flag("--json", json_out, "machine-readable output");

    // verma
    CLI::App* verma = app.add_subcommand("verma", "module commands");
    verma->require_subcommand(1);
    std::string gen, ket;
    CLI::App* verma_act =
        verma->add_subcommand("act", "apply a generator to a basis ket");
    verma_act->add_option("--gen", gen, "generator name, e.g. d+")->required();
    verma_act->add_option("--ket", ket, "basis ket \"k,mu,nu\"")->required();
    verma_act->add_flag("--json", json_out, "machine-readable output");

    // singular
    CLI::App* singular = app.add_subcommand("singular", "singular vector commands");
    singular->require_subcommand(1);
    std::string grid;
    long max_level = env_max_level();
    CLI::App* sing_scan = singular->add_subcommand(
        "scan", "exact kernel search over an integer weight grid");
    sing_scan->add_option("--grid", grid, "integer range \"a..b\" for both weights")
        ->required();
    sing_scan->add_option("--max-level", max_level, "level cap");
    sing_scan->add_flag("--json", json_out, "machine-readable output");
    long classify_level = env_max_level();
    CLI::App* sing_classify = singular->add_subcommand(
        "classify", "symbolic case analysis of the singular-vector conditions");
    sing_classify->add_option("--max-level", classify_level, "level cap");
    sing_classify->add_flag("--json", json_out, "machine-readable output");

    // pde
    CLI::App* pde = app.add_subcommand("pde", "invariant differential operators");
    pde->require_subcommand(1);
    std::string h_str, f_str;
    long sym_n = 0;
    long pde_level = env_max_level();
    CLI::App* pde_derive = pde->add_subcommand(
        "derive", "realize the singular vectors at a weight as differential "
                  "operators, printed in both charts");
    pde_derive->set_help_flag("--help", "print help");
    pde_derive->add_option("--h", h_str, "exact rational weight h");
    pde_derive->add_option("--f", f_str, "exact rational weight f");
    pde_derive->add_flag("--symbolic", "keep f symbolic; needs --n");
    pde_derive->add_option("--n", sym_n, "even-level family index (level 2n)");
    pde_derive->add_option("--max-level", pde_level, "level cap for the scan");
    pde_derive->add_flag("--json", json_out, "machine-readable output");

    // grassmann
    CLI::App* grassmann = app.add_subcommand("grassmann", "graded Grassmann numbers");
    std::string sig_str = "1,1";
    grassmann->require_subcommand(1);
    CLI::App* gr_verify = grassmann->add_subcommand(
        "verify", "check the Clifford-tensor-Grassmann realization");
    gr_verify->add_option("--signature", sig_str, "Clifford signature \"p,q\"");
    gr_verify->add_flag("--json", json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (alg_check->parsed()) return run_algebra_check(json_out);
        if (alg_table->parsed()) return run_algebra_table(basis, format);
        if (str_cmd->parsed()) return run_straighten(word, pivot, json_out);
        if (verma_act->parsed()) return run_verma_act(gen, ket, json_out);
        if (sing_scan->parsed()) return run_singular_scan(grid, max_level, json_out);
        if (sing_classify->parsed())
            return run_singular_classify(classify_level, json_out);
        if (pde_derive->parsed())
            return run_pde_derive(*pde_derive, h_str, f_str, sym_n, pde_level, json_out);
        if (gr_verify->parsed()) return run_grassmann_verify(sig_str, json_out);
        return kUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
