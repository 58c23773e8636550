// Command-line front end: constructs the two built-in families of group
// tuples, emits their Latin squares and companions, interpolates squares into
// bivariate polynomials, evaluates the closed-form counts against brute-force
// oracles, and verifies square files.
//
// Exit codes: 0 success / verified true; 1 verified false or oracle mismatch;
// 2 usage error; 3 guard or budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "permpoly/permpoly.hpp"

namespace {

using namespace permpoly;

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_refused = 3;

struct FamilyOptions {
    std::string family;
    int p = 0;
    int n = 0;
    std::optional<int> delta;
    std::optional<int> e;
};

void add_family_options(CLI::App* cmd, FamilyOptions& opt) {
    cmd->add_option("--family", opt.family, "family: t31 or klenian")
        ->required()
        ->check(CLI::IsMember({"t31", "klenian"}));
    cmd->add_option("--p", opt.p, "field characteristic (prime)")->required();
    cmd->add_option("--n", opt.n, "extension degree, q = p^n")->required();
    cmd->add_option("--delta", opt.delta, "t31 block parameter, 1 or 2");
    cmd->add_option("--e", opt.e, "klenian block exponent, 0 <= e < n");
}

T31Params t31_params(const FamilyOptions& opt) {
    if (!opt.delta) throw CLI::ValidationError("--delta is required for --family t31");
    T31Params prm{opt.p, opt.n, *opt.delta};
    prm.validate();
    return prm;
}

KlenianParams klenian_params(const FamilyOptions& opt) {
    if (!opt.e) throw CLI::ValidationError("--e is required for --family klenian");
    KlenianParams prm{opt.p, opt.n, *opt.e};
    prm.validate();
    return prm;
}

OrderedGroup build_group(const FamilyOptions& opt) {
    if (opt.family == "t31") return t31_group(t31_params(opt));
    return klenian_group(klenian_params(opt));
}

json params_json(const FamilyOptions& opt) {
    json j{{"p", opt.p}, {"n", opt.n}};
    if (opt.family == "t31")
        j["delta"] = *opt.delta;
    else
        j["e"] = *opt.e;
    return j;
}

std::string render_square(const LatinSquare& s, const std::string& format) {
    if (format == "text") return square_to_text(s);
    if (format == "csv") return square_to_csv(s);
    return to_json(s).dump(2) + "\n";
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot open output file: " + out_path);
    f << content;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run(int argc, char** argv) {
    CLI::App app{"permutation group polynomial toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    auto* format_opt = app.add_option("--format", format, "output format")
                           ->check(CLI::IsMember({"text", "csv", "json"}));
    std::string out_path;
    app.add_option("--out", out_path, "write the primary artifact to a file instead of stdout");

    // construct
    auto* construct = app.add_subcommand("construct", "build a group and its Latin square");
    FamilyOptions copt;
    add_family_options(construct, copt);
    std::string group_out;
    construct->add_option("--group-out", group_out, "also write the ordered group as JSON");

    // companion
    auto* companion = app.add_subcommand("companion", "build a square and an orthogonal mate");
    FamilyOptions mopt;
    add_family_options(companion, mopt);
    bool use_mate_search = false;
    companion->add_flag("--mate-search", use_mate_search,
                        "fall back to backtracking search when no closed form exists");
    std::uint64_t budget = 100'000'000;
    companion->add_option("--budget", budget, "mate search step budget");
    std::string square_out, companion_out;
    companion->add_option("--square-out", square_out, "also write the base square to a file");
    companion->add_option("--companion-out", companion_out,
                          "also write the companion square to a file");

    // interpolate
    auto* interpolate = app.add_subcommand("interpolate", "square file -> polynomial");
    std::string in_square;
    int ip = 0, in_deg = 0;
    interpolate->add_option("--square", in_square, "square file (text, csv or JSON)")
        ->required();
    interpolate->add_option("--p", ip, "field characteristic")->required();
    interpolate->add_option("--n", in_deg, "extension degree")->required();

    // count
    auto* count = app.add_subcommand("count", "closed-form family count, optionally vs oracle");
    FamilyOptions topt;
    add_family_options(count, topt);
    bool verify_oracle = false;
    count->add_flag("--verify-oracle", verify_oracle,
                    "run the S_q normalizer scan and compare");
    int guard = 9;
    count->add_option("--guard", guard, "largest q the brute-force scans accept");

    // equivalents
    auto* equivalents = app.add_subcommand("equivalents", "size of the equivalence class");
    FamilyOptions eopt;
    add_family_options(equivalents, eopt);
    int eguard = 9;
    equivalents->add_option("--guard", eguard, "largest q the centralizer scan accepts");

    // verify
    auto* verify = app.add_subcommand("verify", "check a square file, or two for orthogonality");
    std::string vsquare, vsquare2;
    verify->add_option("--square", vsquare, "square file")->required();
    verify->add_option("--square2", vsquare2, "second square file");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (construct->parsed()) {
        auto g = build_group(copt);
        auto square = tuple_to_square(group_tuple(g));
        emit(render_square(square, format), out_path);
        if (!group_out.empty()) emit(to_json(g).dump(2) + "\n", group_out);
        return exit_ok;
    }

    if (companion->parsed()) {
        auto g = build_group(mopt);
        auto tuple = group_tuple(g);
        auto square = tuple_to_square(tuple);
        std::optional<LatinSquare> mate;
        std::string method;
        if (mopt.family == "t31") {
            try {
                mate = tuple_to_square(companion_tuple(tuple, companion_h(t31_params(mopt))));
                method = "closed_form";
            } catch (const UnsupportedCase& ex) {
                if (!use_mate_search) {
                    std::cerr << "error: " << ex.what() << "\n"
                              << "hint: pass --mate-search to search for an orthogonal mate "
                                 "instead\n";
                    return exit_refused;
                }
            }
        }
        if (!mate) {
            // klenian squares and the refused t31 cases go through the search
            if (mopt.family == "klenian" && !use_mate_search) {
                std::cerr << "error: no closed-form companion is built in for this family; "
                             "pass --mate-search\n";
                return exit_refused;
            }
            auto res = find_orthogonal_mate(square, budget);
            if (res.status == MateSearchResult::Status::BudgetExceeded) {
                std::cerr << "error: mate search budget of " << budget
                          << " steps exceeded; raise --budget\n";
                return exit_refused;
            }
            if (res.status == MateSearchResult::Status::Exhausted) {
                std::cerr << "error: exhaustive search proved no orthogonal mate exists\n";
                return exit_false;
            }
            mate = *res.mate;
            method = "mate_search";
            std::cerr << "note: companion found by backtracking search\n";
        }
        const bool orth = are_orthogonal(square, *mate);
        if (format == "json") {
            emit(pair_to_json(square, *mate, orth, method).dump(2) + "\n", out_path);
        } else {
            std::ostringstream body;
            body << render_square(square, format) << "\n"
                 << render_square(*mate, format) << "\n"
                 << "orthogonal: " << (orth ? "true" : "false") << "\n"
                 << "method: " << method << "\n";
            emit(body.str(), out_path);
        }
        if (!square_out.empty()) emit(render_square(square, format), square_out);
        if (!companion_out.empty()) emit(render_square(*mate, format), companion_out);
        return orth ? exit_ok : exit_false;
    }

    if (interpolate->parsed()) {
        Field f(ip, in_deg);
        auto square = parse_square(slurp(in_square));
        if (square.q() != f.q())
            throw Error("square order " + std::to_string(square.q()) +
                        " does not match q = " + std::to_string(f.q()));
        auto poly = interpolate_bivariate(f, square.cells());
        if (format_opt->count() == 0 || format == "json") {  // JSON unless asked otherwise
            emit(to_json(poly).dump(2) + "\n", out_path);
        } else {
            const char sep = (format == "csv") ? ',' : ' ';
            std::ostringstream body;
            for (int i = 0; i < f.q(); ++i) {
                for (int j = 0; j < f.q(); ++j) {
                    if (j) body << sep;
                    body << poly.coeff(i, j);
                }
                body << '\n';
            }
            emit(body.str(), out_path);
        }
        return exit_ok;
    }

    if (count->parsed()) {
        BigCount closed =
            topt.family == "t31" ? count_t31(t31_params(topt)) : count_klenian(klenian_params(topt));
        std::optional<BigCount> oracle;
        if (verify_oracle) {
            auto g = build_group(topt);
            BigCount norm = normalizer_bruteforce(g, guard);
            oracle = checked_div(factorial(g.q()) * factorial(g.q()), norm, "count oracle");
        }
        json rep = count_report(topt.family, params_json(topt), closed,
                                oracle ? &*oracle : nullptr);
        emit(rep.dump(2) + "\n", out_path);
        return rep["match"] == true ? exit_ok : exit_false;
    }

    if (equivalents->parsed()) {
        auto g = build_group(eopt);
        emit(count_equivalents(g, eguard).str() + "\n", out_path);
        return exit_ok;
    }

    if (verify->parsed()) {
        auto s1 = parse_square(slurp(vsquare));
        bool verdict;
        json body{{"q", s1.q()}};
        if (vsquare2.empty()) {
            verdict = s1.is_latin();
            body["latin"] = verdict;
        } else {
            auto s2 = parse_square(slurp(vsquare2));
            verdict = s1.is_latin() && s2.is_latin() && are_orthogonal(s1, s2);
            body["latin"] = s1.is_latin() && s2.is_latin();
            body["orthogonal"] = verdict;
        }
        if (format == "json") {
            emit(body.dump(2) + "\n", out_path);
        } else {
            std::ostringstream text;
            for (auto& [k, v] : body.items())
                if (k != "q") text << k << ": " << v.dump() << "\n";
            emit(text.str(), out_path);
        }
        return verdict ? exit_ok : exit_false;
    }

    return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardExceeded& ex) {
        std::cerr << "error: " << ex.what() << " (--guard)\n";
        return exit_refused;
    } catch (const CLI::Error&) {
        // CLI11_PARSE already printed and returned, but option callbacks can
        // still surface here
        return exit_usage;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_usage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_usage;
    }
}
