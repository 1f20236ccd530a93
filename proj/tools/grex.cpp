#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grex/cyc_cohomology.hpp"
#include "grex/fixtures.hpp"
#include "grex/isotropy.hpp"
#include "grex/rep_coker.hpp"
#include "grex/verify.hpp"

using nlohmann::ordered_json;

namespace {

using namespace grex;

constexpr const char* kDefaultFixtureDir = GREX_FIXTURE_DIR;

enum class Format { pretty, json, tsv };

Format parse_format(const std::string& s) {
    if (s == "pretty")
        return Format::pretty;
    if (s == "json")
        return Format::json;
    if (s == "tsv")
        return Format::tsv;
    throw UsageError("unknown format: " + s);
}

ordered_json structure_json(const GroupSpec& spec, const AbelianGroupType& g) {
    ordered_json s = ordered_json::object();
    for (const auto& [order, mult] : g.counts)
        s[order.get_str()] = mult;
    return ordered_json{{"p", spec.p}, {"n", spec.n}, {"structure", s}};
}

std::string structure_pretty(const AbelianGroupType& g) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [order, mult] : g.counts) {
        if (!first)
            out << " + ";
        out << "(Z/" << order.get_str() << ")";
        if (mult > 1)
            out << "^" << mult;
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

int cmd_coker(unsigned p, unsigned n, Format format, const CokerOptions& opt) {
    const GroupSpec spec(p, n);
    const AbelianGroupType g = cokernel_structure(spec, opt);
    switch (format) {
    case Format::json:
        std::cout << structure_json(spec, g).dump() << "\n";
        break;
    case Format::tsv:
        std::cout << "order\tmultiplicity\n";
        for (const auto& [order, mult] : g.counts)
            std::cout << order.get_str() << "\t" << mult << "\n";
        break;
    case Format::pretty:
        std::cout << "Q_{" << p << "," << n << "} = " << structure_pretty(g) << "\n";
        break;
    }
    return 0;
}

int cmd_coker_table(unsigned p, unsigned nmax, Format format, const CokerOptions& opt) {
    std::vector<AbelianGroupType> cols;
    for (unsigned n = 1; n <= nmax; ++n)
        cols.push_back(cokernel_structure(GroupSpec(p, n), opt));

    // Row per order p^k, k = 0..nmax-1, matching the published layout.
    std::vector<mpz_class> orders;
    mpz_class o(1);
    for (unsigned k = 0; k < nmax; ++k) {
        orders.push_back(o);
        o *= p;
    }
    auto mult_of = [](const AbelianGroupType& g, const mpz_class& order) -> std::size_t {
        auto it = g.counts.find(order);
        return it == g.counts.end() ? 0 : it->second;
    };

    if (format == Format::json) {
        ordered_json out;
        out["p"] = p;
        ordered_json columns = ordered_json::array();
        for (unsigned n = 1; n <= nmax; ++n) {
            ordered_json s = ordered_json::object();
            for (const auto& [order, mult] : cols[n - 1].counts)
                s[order.get_str()] = mult;
            columns.push_back(ordered_json{{"n", n}, {"structure", s}});
        }
        out["columns"] = columns;
        std::cout << out.dump() << "\n";
        return 0;
    }

    const char sep = (format == Format::tsv) ? '\t' : ' ';
    std::size_t label_width = 5;
    for (unsigned k = 0; k < nmax; ++k)
        label_width = std::max(label_width, orders[k].get_str().size() + 2);

    std::ostringstream header;
    if (format == Format::pretty)
        header << std::setw(static_cast<int>(label_width)) << std::left << "order" << std::right;
    else
        header << "order";
    for (unsigned n = 1; n <= nmax; ++n) {
        header << sep;
        if (format == Format::pretty)
            header << std::setw(6);
        header << ("n=" + std::to_string(n));
    }
    std::cout << header.str() << "\n";
    for (unsigned k = 0; k < nmax; ++k) {
        std::ostringstream row;
        const std::string label = "Z/" + orders[k].get_str();
        if (format == Format::pretty)
            row << std::setw(static_cast<int>(label_width)) << std::left << label << std::right;
        else
            row << label;
        for (unsigned n = 1; n <= nmax; ++n) {
            const std::size_t m = mult_of(cols[n - 1], orders[k]);
            row << sep;
            if (format == Format::pretty)
                row << std::setw(6);
            if (m != 0)
                row << m;
            else
                row << "";
        }
        std::cout << row.str() << "\n";
    }
    return 0;
}

int cmd_predict(unsigned p, unsigned n, bool literal, Format format) {
    const GroupSpec spec(p, n);
    const auto pred = predicted_exponents(spec, literal ? ConjectureRange::literal : ConjectureRange::corrected);
    std::vector<std::pair<mpz_class, mpz_class>> rows; // (order, multiplicity)
    mpz_class o(1);
    for (unsigned k = 0; k < n; ++k) {
        if (pred.at(k) != 0)
            rows.emplace_back(o, pred.at(k));
        o *= p;
    }
    switch (format) {
    case Format::json: {
        ordered_json s = ordered_json::object();
        for (const auto& [order, mult] : rows)
            s[order.get_str()] = ordered_json::parse(mult.get_str());
        std::cout << ordered_json{{"p", p}, {"n", n}, {"structure", s}}.dump() << "\n";
        break;
    }
    case Format::tsv:
        std::cout << "order\tmultiplicity\n";
        for (const auto& [order, mult] : rows)
            std::cout << order.get_str() << "\t" << mult.get_str() << "\n";
        break;
    case Format::pretty: {
        std::cout << "predicted Q_{" << p << "," << n << "} = ";
        bool first = true;
        for (const auto& [order, mult] : rows) {
            if (!first)
                std::cout << " + ";
            std::cout << "(Z/" << order.get_str() << ")";
            if (mult != 1)
                std::cout << "^" << mult.get_str();
            first = false;
        }
        std::cout << "\n";
        break;
    }
    }
    return 0;
}

int cmd_conjecture(unsigned p, unsigned n, bool literal, const CokerOptions& opt) {
    const ConjectureReport report =
        verify_conjecture(GroupSpec(p, n), literal ? ConjectureRange::literal : ConjectureRange::corrected, opt);
    std::cout << "k\tcomputed\tpredicted\tmatch\n";
    for (const ConjectureRow& row : report.rows)
        std::cout << row.k << "\t" << row.computed.get_str() << "\t" << row.predicted.get_str() << "\t"
                  << (row.match ? "yes" : "NO") << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << " (" << p << "," << n << ")\n";
    return report.pass ? 0 : 1;
}

int cmd_qnomial(unsigned x, unsigned q) {
    const IntPoly row = qnomial_row(x, q);
    const long top = static_cast<long>(x) * (q - 1);
    for (long k = 0; k <= top; ++k)
        std::cout << (k ? " " : "") << row.coeff(k).get_str();
    std::cout << "\n";
    return 0;
}

int cmd_poincare_suite(const std::string& file) {
    std::vector<IdentityCheck> checks;
    if (file.empty()) {
        checks = poincare_identity_suite();
    } else {
        Fixture f = load_fixture(file);
        const auto* list = std::get_if<IdentityListFixture>(&f);
        if (!list)
            throw FixtureError(file + ": expected an identity_list fixture");
        checks = poincare_identity_suite(list->identities);
    }
    bool all = true;
    for (const IdentityCheck& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        all = all && c.pass;
    }
    return all ? 0 : 1;
}

GradedActionFixture require_action(const std::string& path) {
    Fixture f = load_fixture(path);
    if (auto* a = std::get_if<GradedActionFixture>(&f))
        return std::move(*a);
    throw FixtureError(path + ": expected a graded_action fixture");
}

int cmd_e2rows(const std::string& path, unsigned smax, unsigned tmax, Format format) {
    const GradedActionFixture fx = require_action(path);
    const RowTable table = row_dims(fx.action, smax, tmax);
    if (format == Format::json) {
        ordered_json rows = ordered_json::array();
        for (unsigned s = 0; s <= smax; ++s)
            for (unsigned t = 0; t <= tmax; ++t)
                rows.push_back(ordered_json{{"s", s}, {"t", t}, {"dim", table.at(s, t)}});
        std::cout << ordered_json{{"fixture", fx.name}, {"rows", rows}}.dump() << "\n";
        return 0;
    }
    if (format == Format::tsv) {
        std::cout << "s\tt\tdim\n";
        for (unsigned s = 0; s <= smax; ++s)
            for (unsigned t = 0; t <= tmax; ++t)
                std::cout << s << "\t" << t << "\t" << table.at(s, t) << "\n";
        return 0;
    }
    // pretty: chart with s increasing upwards
    for (unsigned s = smax + 1; s-- > 0;) {
        std::cout << "s=" << std::setw(2) << s << " |";
        for (unsigned t = 0; t <= tmax; ++t)
            std::cout << std::setw(3) << table.at(s, t);
        std::cout << "\n";
    }
    std::cout << "      +" << std::string(3 * (tmax + 1), '-') << "\n       ";
    for (unsigned t = 0; t <= tmax; ++t)
        std::cout << std::setw(3) << t;
    std::cout << "  (t)\n";
    return 0;
}

int cmd_e2verify(const std::string& path) {
    const GradedActionFixture fx = require_action(path);
    if (fx.rows.empty()) {
        std::cout << "no expected rows declared in " << path << "\n";
        return 1;
    }
    bool all = true;
    for (const RowExpectation& row : fx.rows) {
        for (unsigned s = row.s_from; s <= row.s_to; s += row.s_step) {
            const bool ok = verify_row_series(fx.action, s, row.series, fx.t_max);
            std::cout << (ok ? "PASS " : "FAIL ") << fx.name << " row s=" << s << " (t <= " << fx.t_max
                      << ")\n";
            all = all && ok;
        }
    }
    return all ? 0 : 1;
}

int cmd_isotropy(const std::string& path, Format format) {
    Fixture f = load_fixture(path);
    const auto* fx = std::get_if<RepGroupFixture>(&f);
    if (!fx)
        throw FixtureError(path + ": expected a rep_group fixture");
    const RepMatrixGroup rep = group_closure(fx->generators, fx->order);
    const auto pairs = isotropy_subgroups(rep);
    const unsigned bound = projective_exponent_bound(rep, FieldType::real);

    if (format == Format::json) {
        ordered_json jpairs = ordered_json::array();
        for (const auto& p : pairs) {
            ordered_json basis = ordered_json::array();
            for (const Vec4& v : p.space.basis) {
                ordered_json jv = ordered_json::array();
                for (const QSqrt2& x : v)
                    jv.push_back(x.str());
                basis.push_back(jv);
            }
            jpairs.push_back(ordered_json{{"dim", p.space.dim()},
                                          {"basis", basis},
                                          {"stabilizer", stabilizer_labels(rep, p.stabilizer)},
                                          {"elementary_abelian", elementary_abelian_check(rep, p.stabilizer)}});
        }
        std::cout << ordered_json{{"fixture", fx->name},
                                  {"order", rep.order()},
                                  {"pairs", jpairs},
                                  {"exponent_bound", bound}}
                         .dump()
                  << "\n";
        return 0;
    }

    std::cout << fx->name << ": group of order " << rep.order() << ", " << pairs.size()
              << " isotropy pairs\n";
    for (const auto& p : pairs) {
        std::cout << "  dim " << p.space.dim() << " subspace, stabilizer {";
        bool first = true;
        for (const std::string& label : stabilizer_labels(rep, p.stabilizer)) {
            std::cout << (first ? "" : ", ") << label;
            first = false;
        }
        std::cout << "}" << (elementary_abelian_check(rep, p.stabilizer) ? "" : "  [not elementary abelian]")
                  << "\n";
    }
    std::cout << "exponent bound: " << bound << "\n";
    if (fx->expected_bound && *fx->expected_bound != bound) {
        std::cout << "FAIL expected bound " << *fx->expected_bound << "\n";
        return 1;
    }
    return 0;
}

int cmd_kbounds(unsigned nmax) {
    std::cout << "n\tcomplex\treal\n";
    for (unsigned n = 1; n <= nmax; ++n) {
        const KTheoryBounds b = k_theory_lower_bounds(n);
        std::cout << n << "\t" << b.complex_bound << "\t" << b.real_bound << "\n";
    }
    return 0;
}

int cmd_verify_all(const verify::Options& opt) {
    const auto results = verify::run_all(opt);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << " ("
                  << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}

unsigned default_threads() {
    if (const char* env = std::getenv("GREX_THREADS"))
        return static_cast<unsigned>(std::max(1, std::atoi(env)));
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for representation-ring cokernels, E2 rows and line isotropy of small 2-groups"};
    app.require_subcommand(1);

    std::string format_str = "pretty";
    unsigned p = 2, n = 1, nmax = 1, x = 0, q = 2, smax = 4, tmax = 20;
    bool literal = false, trailing = false, extended = false;
    std::size_t ceiling = 1024;
    std::string fixture_path, identities_file;
    verify::Options vopt;
    vopt.fixtures_dir = kDefaultFixtureDir;
    vopt.threads = default_threads();

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "output format: pretty | json | tsv")
            ->default_val("pretty");
    };
    auto add_coker_opts = [&](CLI::App* cmd) {
        cmd->add_flag("--trailing-one", trailing,
                      "use the trailing-one generator normalization instead of leading-one");
        cmd->add_option("--size-ceiling", ceiling, "largest accepted p^n - 1")->default_val(1024);
    };

    CLI::App* coker = app.add_subcommand("coker", "cokernel of the edge map for C_p^n");
    coker->add_option("p", p, "prime")->required();
    coker->add_option("n", n, "rank, >= 1")->required()->check(CLI::Range(1u, 1000000u));
    add_format(coker);
    add_coker_opts(coker);

    CLI::App* table = app.add_subcommand("coker-table", "table of cokernels for n = 1..nmax");
    table->add_option("p", p, "prime")->required();
    table->add_option("nmax", nmax, "largest rank")->required()->check(CLI::Range(1u, 1000000u));
    add_format(table);
    add_coker_opts(table);

    CLI::App* predict = app.add_subcommand("predict", "conjectured cokernel from q-nomial block sums");
    predict->add_option("p", p, "prime")->required();
    predict->add_option("n", n, "rank, >= 1")->required()->check(CLI::Range(1u, 1000000u));
    predict->add_flag("--literal-range", literal, "sum j = 0..p-1 instead of the corrected j = 0..p-2");
    add_format(predict);

    CLI::App* conjecture = app.add_subcommand("conjecture", "compare computed cokernel against the prediction");
    conjecture->add_option("p", p, "prime")->required();
    conjecture->add_option("n", n, "rank, >= 1")->required()->check(CLI::Range(1u, 1000000u));
    conjecture->add_flag("--literal-range", literal, "sum j = 0..p-1 instead of the corrected j = 0..p-2");
    add_coker_opts(conjecture);

    CLI::App* qn = app.add_subcommand("qnomial", "coefficient row of (1 + t + ... + t^{q-1})^x");
    qn->add_option("x", x, "exponent")->required();
    qn->add_option("q", q, "number of terms, >= 2")->required()->check(CLI::Range(2u, 1000000u));

    CLI::App* suite = app.add_subcommand("poincare-suite", "verify the bundled generating-function identities");
    suite->add_option("--identities", identities_file, "identity_list fixture file (default: built-in list)");

    CLI::App* e2rows = app.add_subcommand("e2rows", "E2-row dimensions of a graded action fixture");
    e2rows->add_option("fixture", fixture_path, "graded_action fixture file")->required();
    e2rows->add_option("--smax", smax, "largest row")->default_val(4);
    e2rows->add_option("--tmax", tmax, "largest degree")->default_val(20);
    add_format(e2rows);

    CLI::App* e2verify = app.add_subcommand("e2verify", "check a fixture's declared row series");
    e2verify->add_option("fixture", fixture_path, "graded_action fixture file")->required();

    CLI::App* isotropy = app.add_subcommand("isotropy", "line isotropy analysis of a matrix-group fixture");
    isotropy->add_option("fixture", fixture_path, "rep_group fixture file")->required();
    add_format(isotropy);

    CLI::App* kbounds = app.add_subcommand("kbounds", "K-theory exponent lower bounds for n = 1..nmax");
    kbounds->add_option("nmax", nmax, "largest rank")->required()->check(CLI::Range(1u, 1000000u));

    CLI::App* verify_all = app.add_subcommand("verify-all", "run the full verification suite");
    verify_all->add_option("--fixtures-dir", vopt.fixtures_dir, "bundled fixtures directory");
    verify_all->add_flag("--extended", extended, "also run the large optional cokernel targets");
    verify_all->add_option("--threads", vopt.threads, "parallelism across independent instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format format = parse_format(format_str);
        CokerOptions copt;
        copt.norm = trailing ? GeneratorNormalization::trailing_one : GeneratorNormalization::leading_one;
        copt.size_ceiling = ceiling;
        vopt.extended = extended;

        if (coker->parsed())
            return cmd_coker(p, n, format, copt);
        if (table->parsed())
            return cmd_coker_table(p, nmax, format, copt);
        if (predict->parsed())
            return cmd_predict(p, n, literal, format);
        if (conjecture->parsed())
            return cmd_conjecture(p, n, literal, copt);
        if (qn->parsed())
            return cmd_qnomial(x, q);
        if (suite->parsed())
            return cmd_poincare_suite(identities_file);
        if (e2rows->parsed())
            return cmd_e2rows(fixture_path, smax, tmax, format);
        if (e2verify->parsed())
            return cmd_e2verify(fixture_path);
        if (isotropy->parsed())
            return cmd_isotropy(fixture_path, format);
        if (kbounds->parsed())
            return cmd_kbounds(nmax);
        if (verify_all->parsed())
            return cmd_verify_all(vopt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
