#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "khopf/json_io.hpp"
#include "khopf/ksym.hpp"
#include "khopf/mnsym.hpp"
#include "khopf/mqsym.hpp"
#include "khopf/tableaux.hpp"
#include "khopf/verify.hpp"

namespace {

using namespace khopf;

std::size_t max_terms_cap() {
    if (const char* env = std::getenv("KHOPF_MAX_TERMS")) return std::stoull(env);
    return 100000;
}

void emit(const json& doc, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

template <typename Sum>
void check_cap(const Sum& sum) {
    if (sum.term_count() > max_terms_cap())
        throw std::runtime_error("term cap exceeded (raise KHOPF_MAX_TERMS)");
}

void check_cap_series(const TruncatedSeries& f) {
    if (f.terms().size() > max_terms_cap())
        throw std::runtime_error("term cap exceeded (raise KHOPF_MAX_TERMS)");
}

SeriesContext parse_realize(const std::string& text) {
    // "m=6,D=6"
    SeriesContext ctx{0, 0};
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad realize argument '" + tok + "'");
        std::string key = tok.substr(0, eq);
        int value = std::stoi(tok.substr(eq + 1));
        if (key == "m") ctx.num_vars = value;
        else if (key == "D") ctx.max_degree = value;
        else throw std::invalid_argument("bad realize key '" + key + "'");
    }
    if (ctx.num_vars <= 0 || ctx.max_degree < 0)
        throw std::invalid_argument("realize needs m>0 and D>=0");
    return ctx;
}

void seed_examples(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    {
        SeriesContext ctx{4, 4};
        std::ofstream out(fs::path(dir) / "ktilde_2_1.json");
        out << series_to_json(ktilde_series(SkewShape(Partition{2, 1}), ctx)).dump(2) << "\n";
    }
    {
        std::ofstream out(fs::path(dir) / "coproduct_ltilde_2_1.json");
        out << tensor_sum_to_json(ltilde_coproduct(Composition{2, 1})).dump(2) << "\n";
    }
    {
        // The worked multiset-valued filling of the (3,2) shape.
        LabeledPoset poset = row_reading_poset(SkewShape(Partition{3, 2}));
        PosetFilling sigma(5);
        sigma[static_cast<std::size_t>(poset.element_with_label(3))] = {1, 1, 2};
        sigma[static_cast<std::size_t>(poset.element_with_label(4))] = {2, 3};
        sigma[static_cast<std::size_t>(poset.element_with_label(5))] = {3, 4, 5};
        sigma[static_cast<std::size_t>(poset.element_with_label(1))] = {4, 5};
        sigma[static_cast<std::size_t>(poset.element_with_label(2))] = {6, 6, 7};
        KhatBijectionImage image = khat_bijection_forward(poset, sigma);
        json doc = {{"w", image.w},
                    {"sigma_prime", image.sigma_prime},
                    {"descent_composition", descent_composition(image.w).parts()}};
        std::ofstream out(fs::path(dir) / "khat_bijection_3_2.json");
        out << doc.dump(2) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"K-theoretic combinatorial Hopf algebras: bases, products, coproducts, antipodes"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string seed_dir;
    app.add_option("--seed-examples", seed_dir, "write the worked-example golden files to a directory");

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "realize a basis element as a series");
    std::string basis, shape_text, comp_text;
    int vars = 0, max_degree = -1, max_size = -1;
    cmd_expand->add_option("--basis", basis, "G|Ktilde|J|g|j|jtilde|Ltilde|Lhat")->required();
    cmd_expand->add_option("--shape", shape_text, "partition or outer/inner");
    cmd_expand->add_option("--composition", comp_text, "composition label");
    cmd_expand->add_option("--vars", vars, "number of variables m")
        ->required()
        ->check(CLI::Range(1, 64));
    cmd_expand->add_option("--max-degree", max_degree, "degree bound D")
        ->required()
        ->check(CLI::Range(0, 64));

    // product
    auto* cmd_product = app.add_subcommand("product", "product of two basis elements");
    std::string algebra, left_text, right_text;
    cmd_product->add_option("--algebra", algebra, "mnsym|mqsym")->required();
    cmd_product->add_option("--left", left_text)->required();
    cmd_product->add_option("--right", right_text)->required();
    cmd_product->add_option("--max-size", max_size, "label size bound (mqsym)");

    // coproduct
    auto* cmd_coproduct = app.add_subcommand("coproduct", "coproduct of a basis element");
    cmd_coproduct->add_option("--algebra", algebra, "mnsym|mqsym")->required();
    cmd_coproduct->add_option("--composition", comp_text)->required();

    // antipode
    auto* cmd_antipode = app.add_subcommand("antipode", "antipode of a basis element");
    std::string realize_arg, expand_in;
    cmd_antipode->add_option("--algebra", algebra, "mnsym|mqsym|msym|Msym")->required();
    cmd_antipode->add_option("--composition", comp_text);
    cmd_antipode->add_option("--shape", shape_text);
    cmd_antipode->add_option("--max-size", max_size, "label size bound for infinite sums");
    cmd_antipode->add_option("--realize", realize_arg, "m=..,D=.. to realize the result as a series");
    cmd_antipode->add_option("--expand-in", expand_in, "G|jtilde (msym/Msym basis expansions)");

    // count
    auto* cmd_count = app.add_subcommand("count", "tableau counting functions");
    std::string object;
    cmd_count->add_option("--object", object, "elegant|strict-elegant|restricted-pp|mergings")
        ->required();
    cmd_count->add_option("--shape", shape_text, "outer/inner skew shape");
    cmd_count->add_option("--composition", comp_text, "ribbon composition (mergings)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a named invariant suite");
    std::string suite;
    bool list_suites = false;
    cmd_verify->add_option("--suite", suite);
    cmd_verify->add_option("--max-size", max_size, "label size bound");
    cmd_verify->add_flag("--list-suites", list_suites, "enumerate the documented suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!seed_dir.empty()) {
            seed_examples(seed_dir);
            return 0;
        }
        if (cmd_expand->parsed()) {
            SeriesContext ctx{vars, max_degree};
            TruncatedSeries out(ctx);
            if (basis == "Ltilde")
                out = ltilde_series(parse_composition(comp_text), ctx);
            else if (basis == "Lhat")
                out = lhat_series(parse_composition(comp_text), ctx);
            else {
                SkewShape shape = parse_skew_shape(shape_text);
                if (basis == "G") out = G_series(shape, ctx);
                else if (basis == "Ktilde") out = ktilde_series(shape, ctx);
                else if (basis == "J") out = J_series(shape, ctx);
                else if (basis == "g") out = g_series(shape, ctx);
                else if (basis == "j") out = j_series(shape, ctx);
                else if (basis == "jtilde") out = jtilde_series(shape, ctx);
                else throw std::invalid_argument("unknown basis '" + basis + "'");
            }
            check_cap_series(out);
            emit(series_to_json(out), out.to_string(), format);
            return 0;
        }
        if (cmd_product->parsed()) {
            if (algebra == "mnsym") {
                RibbonSum out = rib_product(parse_composition(left_text),
                                            parse_composition(right_text));
                check_cap(out);
                emit(formal_sum_to_json(out), out.to_string(), format);
            } else if (algebra == "mqsym") {
                Composition a = parse_composition(left_text), b = parse_composition(right_text);
                int bound = max_size > 0 ? max_size : a.size() + b.size() + 2;
                LSum out = ltilde_product(a, b, bound);
                check_cap(out.terms);
                json doc = formal_sum_to_json(out.terms);
                doc["max_size"] = out.max_size;
                emit(doc, out.terms.to_string() + " (labels up to size " +
                             std::to_string(out.max_size) + ")",
                     format);
            } else {
                throw std::invalid_argument("unknown algebra '" + algebra + "'");
            }
            return 0;
        }
        if (cmd_coproduct->parsed()) {
            Composition alpha = parse_composition(comp_text);
            if (algebra == "mnsym") {
                RibbonTensorSum out = rib_coproduct(alpha);
                check_cap(out);
                emit(tensor_sum_to_json(out), out.to_string(), format);
            } else if (algebra == "mqsym") {
                TensorSum<Composition> out = ltilde_coproduct(alpha);
                check_cap(out);
                emit(tensor_sum_to_json(out), out.to_string(), format);
            } else {
                throw std::invalid_argument("unknown algebra '" + algebra + "'");
            }
            return 0;
        }
        if (cmd_antipode->parsed()) {
            if (algebra == "mnsym") {
                RibbonSum out = rib_antipode(parse_composition(comp_text));
                check_cap(out);
                emit(formal_sum_to_json(out), out.to_string(), format);
            } else if (algebra == "mqsym") {
                Composition alpha = parse_composition(comp_text);
                int bound = max_size > 0 ? max_size : alpha.size() + 2;
                LSum out = ltilde_antipode(alpha, bound);
                check_cap(out.terms);
                if (!realize_arg.empty()) {
                    TruncatedSeries s = realize(out, parse_realize(realize_arg), LBasis::Ltilde);
                    emit(series_to_json(s), s.to_string(), format);
                } else {
                    json doc = formal_sum_to_json(out.terms);
                    doc["max_size"] = out.max_size;
                    emit(doc, out.terms.to_string() + " (labels up to size " +
                                 std::to_string(out.max_size) + ")",
                         format);
                }
            } else if (algebra == "msym") {
                Partition lambda = parse_partition(shape_text.empty() ? comp_text : shape_text);
                if (expand_in == "G") {
                    int bound = max_size > 0 ? max_size : lambda.size() + 3;
                    PartitionSum out = antipode_G_expansion(lambda, bound);
                    emit(partition_sum_to_json(out), out.to_string(), format);
                } else {
                    SeriesContext ctx = realize_arg.empty()
                                            ? SeriesContext{lambda.size() + 2, lambda.size() + 2}
                                            : parse_realize(realize_arg);
                    TruncatedSeries out = antipode_K(lambda, ctx);
                    emit(series_to_json(out), out.to_string(), format);
                }
            } else if (algebra == "Msym") {
                Partition lambda = parse_partition(shape_text.empty() ? comp_text : shape_text);
                if (expand_in == "jtilde" || expand_in.empty()) {
                    PartitionSum out = antipode_jtilde_expansion(lambda);
                    emit(partition_sum_to_json(out), out.to_string(), format);
                } else {
                    throw std::invalid_argument("Msym antipode expands in jtilde");
                }
            } else {
                throw std::invalid_argument("unknown algebra '" + algebra + "'");
            }
            return 0;
        }
        if (cmd_count->parsed()) {
            if (object == "mergings") {
                Composition alpha = parse_composition(comp_text);
                json table = json::array();
                std::string text;
                for (const auto& [beta, count] : mergings(alpha)) {
                    table.push_back({{"target", beta.parts()}, {"count", int_to_json(count)}});
                    text += "(" + beta.to_string() + ", " + count.get_str() + ")\n";
                }
                emit(json{{"mergings", table}}, text, format);
            } else {
                SkewShape shape = parse_skew_shape(shape_text);
                Int n;
                if (object == "elegant") n = elegant_count(shape.inner(), shape.outer());
                else if (object == "strict-elegant")
                    n = strict_elegant_count(shape.outer(), shape.inner());
                else if (object == "restricted-pp")
                    n = restricted_pp_count(shape.inner(), shape.outer());
                else throw std::invalid_argument("unknown object '" + object + "'");
                emit(json{{"count", int_to_json(n)}}, n.get_str(), format);
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            if (list_suites) {
                for (const auto& info : verify_suites())
                    std::cout << info.name << ": " << info.description
                              << " (default max size " << info.default_max_size << ")\n";
                return 0;
            }
            if (suite.empty()) throw std::invalid_argument("verify needs --suite or --list-suites");
            VerifyReport report = run_suite(suite, max_size);
            for (const auto& c : report.cases) {
                std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
                if (!c.ok && !c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << "\n";
            }
            std::cout << (report.ok() ? "suite passed" : "suite FAILED") << "\n";
            return report.ok() ? 0 : 1;
        }
        std::cerr << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
