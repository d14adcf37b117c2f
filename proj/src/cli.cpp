#include "tpalg/cli.hpp"

#include "tpalg/catalog.hpp"
#include "tpalg/kantor.hpp"
#include "tpalg/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>

namespace tpalg::cli {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void write_or_print(const json& j, const std::string& out_path,
                    std::ostream& out) {
    if (out_path.empty()) {
        emit(out, j);
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write '" + out_path + "'");
    f << j.dump(2) << "\n";
}

std::vector<IdentityId> parse_identities(const std::string& csv) {
    if (csv == "all") return all_identities();
    std::vector<IdentityId> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string upper;
        for (char c : item) upper += static_cast<char>(std::toupper(c));
        out.push_back(identity_from_name(upper));
    }
    if (out.empty()) throw ParseError("no identities requested");
    return out;
}

std::pair<long long, long long> parse_window(const std::string& text) {
    // "lo..hi"
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw ParseError("window must be lo..hi, got '" + text + "'");
    try {
        long long lo = std::stoll(text.substr(0, dots));
        long long hi = std::stoll(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParseError("window must be lo..hi, got '" + text + "'");
    }
}

int cmd_check(const std::string& path, const std::string& identities,
              std::ostream& out, std::ostream& err) {
    SuperAlgebra a = load_algebra_file(path);
    auto ids = parse_identities(identities);
    bool warned = false;
    json reports = json::array();
    bool all_pass = true;
    for (IdentityId id : ids) {
        if (id == IdentityId::JordanSuper &&
            !a.table(Product::Bracket).empty() && !warned) {
            err << "note: JORDAN_SUPER reads the circ table; the bracket "
                   "table is ignored\n";
            warned = true;
        }
        IdentityReport r = check(a, id);
        all_pass = all_pass && r.pass;
        reports.push_back(identity_report_json(r));
    }
    emit(out, json{{"algebra", a.name()},
                   {"all_pass", all_pass},
                   {"reports", reports}});
    return all_pass ? 0 : 1;
}

int cmd_halfder(const std::string& path, const std::string& product,
                int parity, std::ostream& out) {
    SuperAlgebra a = load_algebra_file(path);
    Product which = product == "circ" ? Product::Circ : Product::Bracket;
    HalfDerivationSpace space = half_derivations(a, which, parity);
    json j = halfderiv_json(space);
    j["algebra"] = a.name();
    emit(out, j);
    return 0;
}

int cmd_double(const std::string& path, const std::string& kind,
               const std::string& out_path, std::ostream& out) {
    SuperAlgebra a = load_algebra_file(path);
    SuperAlgebra doubled =
        kind == "lie" ? lie_double(a) : kantor_double(a);
    DoubleLayout layout = double_layout(a);
    json j = algebra_json(doubled);
    j["layout"] = json{{"source_dim", layout.source_dim},
                       {"starred_offset", layout.source_dim},
                       {"parity", layout.parity}};
    write_or_print(j, out_path, out);
    return 0;
}

int cmd_simple(const std::string& path, const std::string& which,
               const std::string& strategy, std::uint64_t seed,
               std::uint64_t bound, std::ostream& out) {
    SuperAlgebra a = load_algebra_file(path);
    SimplicityProducts products = which == "circ" ? SimplicityProducts::Circ
                                  : which == "bracket"
                                      ? SimplicityProducts::Bracket
                                      : SimplicityProducts::TP;
    SimplicityOptions opts;
    opts.seed = seed;
    opts.bound = bound;
    opts.strategy = strategy == "exhaustive" ? SimplicityStrategy::Exhaustive
                    : strategy == "meataxe"  ? SimplicityStrategy::Meataxe
                                             : SimplicityStrategy::Auto;
    SimplicityReport r = is_simple(a, products, opts);
    json j = simplicity_json(r);
    j["algebra"] = a.name();
    j["which"] = which;
    emit(out, j);
    return r.verdict == Verdict::Indeterminate ? 1 : 0;
}

int cmd_structure(const std::string& path, std::ostream& out) {
    SuperAlgebra a = load_algebra_file(path);
    emit(out, structure_json(a));
    return 0;
}

int cmd_witt(const std::string& q_text, const std::string& window,
             const std::string& identities, std::ostream& out) {
    witt::ZAlgebraSpec spec;
    spec.q = witt::ZElement::parse(q_text);
    auto [lo, hi] = parse_window(window);
    std::vector<IdentityId> ids;
    if (identities == "all")
        ids = {IdentityId::AssocCirc, IdentityId::JacobiSuper,
               IdentityId::TpLeibnizSuper};
    else
        ids = parse_identities(identities);
    json reports = json::array();
    bool all_pass = true;
    for (IdentityId id : ids) {
        witt::WindowReport r = witt::window_check(spec, id, lo, hi);
        all_pass = all_pass && r.pass;
        reports.push_back(window_report_json(r));
    }
    auto inverse = witt::laurent_invertible(spec.q);
    emit(out, json{{"q", spec.q.str()},
                   {"window", json::array({lo, hi})},
                   {"all_pass", all_pass},
                   {"laurent_inverse", inverse ? json(inverse->str()) : json(nullptr)},
                   {"reports", reports}});
    return all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact structure-constant workbench for two-product "
                 "(super)algebras"};
    app.name("tpalg");
    app.require_subcommand(1);

    std::string path, identities = "all", product = "bracket";
    std::string kind = "kantor", which = "tp", strategy = "auto";
    std::string out_path, key, q_text = "0:1", window = "-3..3";
    int parity = 0;
    std::uint64_t seed = 0, bound = 1'000'000;

    auto* check_cmd = app.add_subcommand("check", "verify identities");
    check_cmd->add_option("file", path)->required();
    check_cmd->add_option("--identities", identities, "csv or 'all'");

    auto* halfder_cmd =
        app.add_subcommand("halfder", "solve the half-derivation system");
    halfder_cmd->add_option("file", path)->required();
    halfder_cmd->add_option("--product", product)
        ->check(CLI::IsMember({"circ", "bracket"}));
    halfder_cmd->add_option("--parity", parity)->check(CLI::Range(0, 1));

    auto* double_cmd =
        app.add_subcommand("double", "build the Kantor or Lie double");
    double_cmd->add_option("file", path)->required();
    double_cmd->add_option("--kind", kind)
        ->check(CLI::IsMember({"kantor", "lie"}));
    double_cmd->add_option("-o,--output", out_path);

    auto* simple_cmd = app.add_subcommand("simple", "simplicity verdict");
    simple_cmd->add_option("file", path)->required();
    simple_cmd->add_option("--which", which)
        ->check(CLI::IsMember({"tp", "circ", "bracket"}));
    simple_cmd->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"exhaustive", "meataxe", "auto"}));
    simple_cmd->add_option("--seed", seed);
    simple_cmd->add_option("--bound", bound);

    auto* structure_cmd =
        app.add_subcommand("structure", "series, centers, radical, unit");
    structure_cmd->add_option("file", path)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in algebras");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "known keys");
    auto* catalog_show = catalog_cmd->add_subcommand("show", "algebra + claims");
    catalog_show->add_option("key", key)->required();
    auto* catalog_export =
        catalog_cmd->add_subcommand("export", "write an algebra file");
    catalog_export->add_option("key", key)->required();
    catalog_export->add_option("-o,--output", out_path);

    auto* witt_cmd =
        app.add_subcommand("witt", "window checks on the mutated Laurent-Witt "
                           "algebra");
    witt_cmd->add_option("--q", q_text, "mutation element, k:coeff,...");
    witt_cmd->add_option("--window", window, "lo..hi");
    witt_cmd->add_option("--identities", identities, "csv or 'all'");

    try {
        // CLI11's vector overload wants the arguments reversed and without
        // the program name.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back(); // drop argv[0]
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check_cmd->parsed()) return cmd_check(path, identities, out, err);
        if (halfder_cmd->parsed()) return cmd_halfder(path, product, parity, out);
        if (double_cmd->parsed()) return cmd_double(path, kind, out_path, out);
        if (simple_cmd->parsed())
            return cmd_simple(path, which, strategy, seed, bound, out);
        if (structure_cmd->parsed()) return cmd_structure(path, out);
        if (witt_cmd->parsed()) return cmd_witt(q_text, window, identities, out);
        if (catalog_cmd->parsed()) {
            if (catalog_list->parsed()) {
                json entries = json::array();
                for (const auto& e : catalog::list_entries())
                    entries.push_back(
                        json{{"key", e.key}, {"summary", e.summary}});
                emit(out, json{{"entries", entries}});
                return 0;
            }
            if (catalog_show->parsed()) {
                SuperAlgebra a = catalog::get(key);
                json claims = json::array();
                for (const auto& c : catalog::expected(key))
                    claims.push_back(json{{"kind", c.kind},
                                          {"payload", c.payload},
                                          {"note", c.note}});
                emit(out,
                     json{{"algebra", algebra_json(a)}, {"expected", claims}});
                return 0;
            }
            if (catalog_export->parsed()) {
                SuperAlgebra a = catalog::get(key);
                if (out_path.empty())
                    out << save_algebra(a);
                else
                    save_algebra_file(a, out_path);
                return 0;
            }
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace tpalg::cli
