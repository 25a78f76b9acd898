// Command-line front end: analyze odd nilpotent matrices, construct
// representatives / sl2 triples / osp(1|2) quintuples from orbit parameters,
// enumerate orbits and verify candidate quintuples.
//
// Exit codes: 0 success, 1 domain error (not embeddable, not nilpotent, not
// odd, failed relations), 2 parse or usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "glmn/error.hpp"
#include "glmn/io.hpp"
#include "glmn/jordan.hpp"
#include "glmn/osp.hpp"
#include "glmn/sl2.hpp"
#include "glmn/superjordan.hpp"

namespace {

using nlohmann::json;

constexpr int kExitSuccess = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) {
        throw glmn::ParseError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw glmn::ParseError("invalid JSON in '" + path + "': " + err.what());
    }
}

std::string parity_text(const glmn::SuperMatrix& g) {
    const auto p = glmn::parity_of(g);
    if (!p) {
        return "inhomogeneous";
    }
    return glmn::to_string(*p);
}

json blocks_to_json(const std::vector<glmn::SuperJordanBlock>& blocks) {
    auto arr = json::array();
    for (const auto& b : blocks) {
        arr.push_back({{"size", b.size}, {"generator_parity", glmn::to_string(b.generator_parity)}});
    }
    return arr;
}

json quintuple_to_json(const glmn::Osp12Quintuple& q) {
    return json{{"e", glmn::matrix_to_json(q.e)},
                {"f", glmn::matrix_to_json(q.f)},
                {"H", glmn::matrix_to_json(q.H)},
                {"E", glmn::matrix_to_json(q.E)},
                {"F", glmn::matrix_to_json(q.F)}};
}

void print_named_matrix(const char* name, const glmn::SuperMatrix& g) {
    std::cout << name << " =\n" << glmn::matrix_to_text(g);
}

int run_analyze(const std::string& input_path, const std::string& format) {
    const glmn::SuperMatrix x = glmn::matrix_from_json(load_json(input_path));
    const bool odd = x.in_odd_subspace();
    const bool nilpotent = glmn::is_nilpotent(x);

    json out;
    out["parity"] = parity_text(x);
    out["nilpotent"] = nilpotent;
    if (!odd || !nilpotent) {
        out["error"] = !odd ? "NotOdd" : "NotNilpotent";
        if (format == "json") {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "parity:     " << out["parity"].get<std::string>() << "\n"
                      << "nilpotent:  " << (nilpotent ? "true" : "false") << "\n"
                      << "error:      " << out["error"].get<std::string>() << "\n";
        }
        return kExitDomain;
    }

    const glmn::SuperJordanType type = glmn::superjordan_decompose(x);
    const glmn::OrbitParams params = glmn::params_from_type(type);
    const bool embeddable_by_params = glmn::is_embeddable_params(params);
    const bool embeddable_by_matrix = glmn::is_embeddable_matrix(x);
    if (embeddable_by_params != embeddable_by_matrix) {
        throw glmn::InternalRelationFailure(
            "embeddability criteria disagree between parameters and matrix");
    }

    out["blocks"] = blocks_to_json(type.blocks);
    out["params"] = glmn::params_to_json(params);
    out["embeddable"] = embeddable_by_params;

    if (embeddable_by_params) {
        // Transport the canonical quintuple along the basis change that links
        // the canonical representative to x, so the reported e is x itself.
        const glmn::Osp12Quintuple canonical = glmn::construct_osp12(params);
        const glmn::SuperMatrix rep_basis =
            glmn::superjordan_decompose(canonical.e).basis;
        const glmn::SuperMatrix g = type.basis * glmn::inverse(rep_basis);
        glmn::Osp12Quintuple q{x, glmn::conjugate(canonical.f, g),
                               glmn::conjugate(canonical.H, g),
                               glmn::conjugate(canonical.E, g),
                               glmn::conjugate(canonical.F, g)};
        if (!glmn::verify_osp12(q).all_hold()) {
            throw glmn::InternalRelationFailure("transported quintuple fails verification");
        }
        out["quintuple"] = quintuple_to_json(q);

        if (format == "text") {
            std::cout << "parity:     " << out["parity"].get<std::string>() << "\n"
                      << "nilpotent:  true\n"
                      << "blocks:    ";
            for (const auto& b : type.blocks) {
                std::cout << " (" << b.size << ", " << glmn::to_string(b.generator_parity)
                          << ")";
            }
            std::cout << "\nparams:     " << glmn::params_to_text(params) << "\n"
                      << "embeddable: true\n";
            print_named_matrix("e", q.e);
            print_named_matrix("f", q.f);
            print_named_matrix("H", q.H);
            print_named_matrix("E", q.E);
            print_named_matrix("F", q.F);
            return kExitSuccess;
        }
    } else if (format == "text") {
        std::cout << "parity:     " << out["parity"].get<std::string>() << "\n"
                  << "nilpotent:  true\n"
                  << "blocks:    ";
        for (const auto& b : type.blocks) {
            std::cout << " (" << b.size << ", " << glmn::to_string(b.generator_parity) << ")";
        }
        std::cout << "\nparams:     " << glmn::params_to_text(params) << "\n"
                  << "embeddable: false\n";
        return kExitSuccess;
    }

    std::cout << out.dump(2) << "\n";
    return kExitSuccess;
}

int run_construct(const std::string& params_path, const std::string& emit,
                  const std::string& format) {
    const glmn::OrbitParams params = glmn::params_from_json(load_json(params_path));
    if (emit == "representative") {
        const glmn::SuperMatrix e = glmn::representative(params);
        if (format == "json") {
            std::cout << json{{"representative", glmn::matrix_to_json(e)}}.dump(2) << "\n";
        } else {
            print_named_matrix("e", e);
        }
        return kExitSuccess;
    }
    if (emit == "sl2") {
        const glmn::Sl2Triple triple = glmn::sl2_triple_for(params);
        if (format == "json") {
            std::cout << json{{"H", glmn::matrix_to_json(triple.H)},
                              {"E", glmn::matrix_to_json(triple.E)},
                              {"F", glmn::matrix_to_json(triple.F)},
                              {"relations_verified", true}}
                             .dump(2)
                      << "\n";
        } else {
            print_named_matrix("H", triple.H);
            print_named_matrix("E", triple.E);
            print_named_matrix("F", triple.F);
            std::cout << "relations verified\n";
        }
        return kExitSuccess;
    }
    // emit == "osp"
    const glmn::Osp12Quintuple q = glmn::construct_osp12(params);
    if (format == "json") {
        auto out = quintuple_to_json(q);
        out["relations_verified"] = true;
        std::cout << out.dump(2) << "\n";
    } else {
        print_named_matrix("e", q.e);
        print_named_matrix("f", q.f);
        print_named_matrix("H", q.H);
        print_named_matrix("E", q.E);
        print_named_matrix("F", q.F);
        std::cout << "relations verified\n";
    }
    return kExitSuccess;
}

int run_enumerate(int m, int n, bool embeddable_only, const std::string& format) {
    const auto all = glmn::enumerate_params(m, n);
    json rows = json::array();
    int shown = 0;
    for (const auto& p : all) {
        const bool embeddable = glmn::is_embeddable_params(p);
        if (embeddable_only && !embeddable) {
            continue;
        }
        ++shown;
        auto row = glmn::params_to_json(p);
        const auto sizes = glmn::block_sizes_of_params(p);
        row["block_sizes"] = std::vector<int>(sizes.begin(), sizes.end());
        row["embeddable"] = embeddable;
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        std::cout << json{{"m", m},
                          {"n", n},
                          {"total", static_cast<int>(all.size())},
                          {"shown", shown},
                          {"rows", std::move(rows)}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& p : all) {
            const bool embeddable = glmn::is_embeddable_params(p);
            if (embeddable_only && !embeddable) {
                continue;
            }
            std::cout << glmn::params_to_text(p) << "  sizes=[";
            bool first = true;
            for (int size : glmn::block_sizes_of_params(p)) {
                if (!first) {
                    std::cout << ",";
                }
                std::cout << size;
                first = false;
            }
            std::cout << "]  embeddable=" << (embeddable ? "yes" : "no") << "\n";
        }
        std::cout << "total: " << all.size() << "  shown: " << shown << "\n";
    }
    return kExitSuccess;
}

int run_verify(const std::string& e_path, const std::string& f_path, const std::string& h_path,
               const std::string& cap_e_path, const std::string& cap_f_path,
               const std::string& format) {
    const glmn::Osp12Quintuple q{glmn::matrix_from_json(load_json(e_path)),
                                 glmn::matrix_from_json(load_json(f_path)),
                                 glmn::matrix_from_json(load_json(h_path)),
                                 glmn::matrix_from_json(load_json(cap_e_path)),
                                 glmn::matrix_from_json(load_json(cap_f_path))};
    const glmn::RelationReport report = glmn::verify_osp12(q);
    if (format == "json") {
        auto arr = json::array();
        for (const auto& check : report.checks) {
            json entry{{"name", check.name}, {"holds", check.holds}};
            if (check.residual) {
                entry["residual"] = glmn::matrix_to_json(*check.residual);
            }
            arr.push_back(std::move(entry));
        }
        std::cout << json{{"relations", std::move(arr)}, {"all_hold", report.all_hold()}}.dump(2)
                  << "\n";
    } else {
        for (const auto& check : report.checks) {
            std::cout << check.name << ": " << (check.holds ? "ok" : "FAIL") << "\n";
        }
        std::cout << (report.all_hold() ? "all relations hold" : "some relations fail") << "\n";
    }
    return report.all_hold() ? kExitSuccess : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for odd nilpotent elements of gl(m|n)"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* analyze = app.add_subcommand("analyze", "Classify an odd nilpotent matrix");
    std::string input_path;
    analyze->add_option("--input", input_path, "Matrix document (JSON)")->required();
    analyze->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* construct = app.add_subcommand("construct", "Build matrices from orbit parameters");
    std::string params_path;
    std::string emit;
    construct->add_option("--params", params_path, "Parameter document (JSON)")->required();
    construct->add_option("--emit", emit, "representative, sl2 or osp")
        ->required()
        ->check(CLI::IsMember({"representative", "sl2", "osp"}));
    construct->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* enumerate = app.add_subcommand("enumerate", "List canonical orbit parameters");
    int m = 0;
    int n = 0;
    bool embeddable_only = false;
    enumerate->add_option("--m", m, "even dimension")->required();
    enumerate->add_option("--n", n, "odd dimension")->required();
    enumerate->add_flag("--embeddable-only", embeddable_only, "keep embeddable orbits only");
    enumerate->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Check the twelve defining relations");
    std::string e_path;
    std::string f_path;
    std::string h_path;
    std::string cap_e_path;
    std::string cap_f_path;
    verify->add_option("--e", e_path, "odd generator e")->required();
    verify->add_option("--f", f_path, "odd generator f")->required();
    verify->add_option("--H", h_path, "semisimple element H")->required();
    verify->add_option("--E", cap_e_path, "nilpositive element E")->required();
    verify->add_option("--F", cap_f_path, "nilnegative element F")->required();
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return err.get_exit_code() == 0 ? kExitSuccess : kExitParse;
    }

    try {
        if (analyze->parsed()) {
            return run_analyze(input_path, format);
        }
        if (construct->parsed()) {
            return run_construct(params_path, emit, format);
        }
        if (enumerate->parsed()) {
            return run_enumerate(m, n, embeddable_only, format);
        }
        return run_verify(e_path, f_path, h_path, cap_e_path, cap_f_path, format);
    } catch (const glmn::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    } catch (const glmn::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    } catch (const glmn::DimensionMismatch& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    } catch (const glmn::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitDomain;
    }
}
