#include "hilbproj/errors.hpp"
#include "hilbproj/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace hilbproj;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("io", "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Hypersurface load_hypersurface(const std::string& poly_path) {
    return Hypersurface(parse_homogeneous_form(read_file(poly_path)));
}

Center load_center(const std::string& coords) { return Center{parse_point(coords)}; }

void emit(const Json& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    // Table mode: flat "key: value" lines; nested values stay JSON-encoded.
    for (const auto& [key, value] : out.items()) {
        if (value.is_string()) std::cout << key << ": " << value.get<std::string>() << "\n";
        else std::cout << key << ": " << value.dump() << "\n";
    }
}

struct Options {
    std::string format = "json";
    std::string poly;
    std::string center;
    std::string direction;
    std::string profile;
    int d = 0, a = 0, n = 3, iz = -1, delta = 1;
    int samples = 200;
    std::optional<std::uint64_t> seed;
    bool certify = false;
    bool vmrt = false;
    bool emit_disc = false;
};

int run(int argc, char** argv) {
    CLI::App app{"Exact fiber, genus, cone, and monodromy reports for hypersurface projections"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output mode: json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };
    auto add_seed = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t s) { opt.seed = s; },
            required ? "Sampling seed (required; no hidden entropy)"
                     : "Accepted and ignored by this subcommand");
        if (required) o->required();
    };

    auto* fiber = app.add_subcommand("fiber", "Multiplicity profile of a line section");
    fiber->add_option("--poly", opt.poly, "Polynomial file (grammar: x0..xk, + - * ^, num/den)")
        ->required();
    fiber->add_option("--center", opt.center, "Projection center, comma-separated rationals")
        ->required();
    fiber->add_option("--direction", opt.direction, "Line direction, comma-separated rationals")
        ->required();
    add_format(fiber);
    add_seed(fiber, false);

    auto* pencil = app.add_subcommand("pencil", "Discriminant of the pencil of lines (m = 1)");
    pencil->add_option("--poly", opt.poly, "Polynomial file")->required();
    pencil->add_option("--center", opt.center, "Projection center")->required();
    pencil->add_flag("--certify", opt.certify, "Also certify the center's generality");
    pencil->add_flag("--emit-disc", opt.emit_disc, "Include the discriminant coefficients");
    add_format(pencil);
    add_seed(pencil, false);

    auto* hilb = app.add_subcommand("hilb", "Fiber points of the relative Hilbert scheme");
    hilb->add_option("--profile", opt.profile, "Fiber profile, e.g. 2,1,1")->required();
    hilb->add_option("--a", opt.a, "Subscheme length")->required();
    add_format(hilb);
    add_seed(hilb, false);

    auto* genus = app.add_subcommand("genus", "Genus by closed formula and Hurwitz");
    genus->add_option("--d", opt.d, "Hypersurface degree")->required();
    genus->add_option("--a", opt.a, "Subscheme length")->required();
    genus->add_option("--poly", opt.poly, "Plane curve file: recompute from pencil data");
    genus->add_option("--center", opt.center, "Center for the pencil run");
    genus->add_flag("--vmrt", opt.vmrt, "Include tangent-variety invariants");
    add_format(genus);
    add_seed(genus, false);

    auto* cone = app.add_subcommand("cone", "Intersection table, extremal rays, Fano test");
    cone->add_option("--n", opt.n, "Dimension (>= 3)")->required();
    cone->add_option("--a", opt.a, "Section self-intersection parameter")->required();
    cone->add_option("--d", opt.d, "Divisor degree")->required();
    cone->add_option("--iz", opt.iz, "Index of the base (default: n)");
    cone->add_option("--delta", opt.delta, "Minimal curve degree on the base (default: 1)");
    add_format(cone);
    add_seed(cone, false);

    auto* classify = app.add_subcommand("classify3folds", "All Fano cases in dimension 3");
    add_format(classify);
    add_seed(classify, false);

    auto* monodromy =
        app.add_subcommand("monodromy", "Frobenius cycle-type evidence for the full symmetric group");
    monodromy->add_option("--poly", opt.poly, "Plane curve file")->required();
    monodromy->add_option("--center", opt.center, "Projection center")->required();
    monodromy->add_option("--samples", opt.samples, "Number of sampling attempts");
    add_format(monodromy);
    add_seed(monodromy, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        Json err;
        err["error"] = Json{{"code", "cli"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }

    try {
        if (fiber->parsed()) {
            const Hypersurface a = load_hypersurface(opt.poly);
            emit(fiber_json(fiber_profile(a, load_center(opt.center), parse_point(opt.direction))),
                 opt.format);
        } else if (pencil->parsed()) {
            const Hypersurface a = load_hypersurface(opt.poly);
            const Center z = load_center(opt.center);
            if (opt.certify) {
                auto [report, cert] = pencil_with_certificate(a, z);
                Json out = pencil_json(report, opt.emit_disc);
                const Json extra = certificate_json(cert);
                for (const auto& [key, value] : extra.items()) out[key] = value;
                emit(out, opt.format);
            } else {
                emit(pencil_json(pencil_discriminant(a, z), opt.emit_disc), opt.format);
            }
        } else if (hilb->parsed()) {
            std::vector<int> parts;
            for (const Rat& q : parse_point(opt.profile)) {
                if (!is_integral(q)) throw DomainError("profile entries must be integers");
                parts.push_back(static_cast<int>(q.get_num().get_si()));
            }
            emit(hilb_json(FiberProfile(std::move(parts)), opt.a), opt.format);
        } else if (genus->parsed()) {
            if (!opt.poly.empty() || !opt.center.empty()) {
                if (opt.poly.empty() || opt.center.empty())
                    throw DomainError("--poly and --center must be given together");
                const Hypersurface a = load_hypersurface(opt.poly);
                if (a.degree != opt.d)
                    throw DomainError("--d disagrees with the polynomial degree");
                Json out = genus_data_json(hurwitz_genus_from_data(a, load_center(opt.center), opt.a));
                if (opt.vmrt) out["vmrt"] = vmrt_json(opt.d, opt.a);
                emit(out, opt.format);
            } else {
                Json out = genus_json(opt.d, opt.a);
                if (opt.vmrt) out["vmrt"] = vmrt_json(opt.d, opt.a);
                emit(out, opt.format);
            }
        } else if (cone->parsed()) {
            FamilyParams params{opt.n, opt.a, opt.d, opt.iz < 0 ? opt.n : opt.iz, opt.delta};
            emit(cone_json(params), opt.format);
        } else if (classify->parsed()) {
            emit(classify_json(), opt.format);
        } else if (monodromy->parsed()) {
            const Hypersurface a = load_hypersurface(opt.poly);
            const WitnessReport report =
                run_monodromy_sampling(a, load_center(opt.center), opt.samples, *opt.seed);
            emit(monodromy_json(report, opt.samples), opt.format);
        }
    } catch (const ParseError& e) {
        Json err;
        err["error"] = Json{{"code", e.code()},
                            {"offset", static_cast<std::int64_t>(e.offset())},
                            {"token", e.token()},
                            {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const InternalError& e) {
        Json err;
        err["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const Error& e) {
        Json err;
        err["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
