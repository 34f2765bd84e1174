// arclimit: exact analysis of piecewise-linear interval maps and their
// inverse limits. Subcommands: analyze, decide, certify, verify, orbit,
// project, crooked, corpus.

#include "arclimit/arc_decider.hpp"
#include "arclimit/corpus.hpp"
#include "arclimit/errors.hpp"
#include "arclimit/invlim.hpp"
#include "arclimit/splitting.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace arclimit;

namespace {

PLMap load_map(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) return corpus_map(spec.substr(7));
    return read_plmap_file(spec);
}

std::string default_cert_path(const std::string& map_spec) {
    std::string stem = map_spec;
    if (stem.rfind("corpus:", 0) == 0) stem = stem.substr(7);
    auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    for (auto& c : stem)
        if (c == ':') c = '_';
    return stem + ".splitcert";
}

// Deterministic backward orbit from a point: constant when fixed, otherwise
// extended by leftmost exact preimages.
std::vector<Rational> backward_orbit(const PLMap& f, const Rational& p, std::size_t len) {
    std::vector<Rational> orbit{p};
    while (orbit.size() < len) {
        const Rational& cur = orbit.back();
        if (eval(f, cur) == cur) {
            orbit.push_back(cur);
            continue;
        }
        auto pre = preimage_of_point(f, cur);
        if (pre.empty()) throw DomainError("point has no preimage: " + cur.str());
        orbit.push_back(pre.front().lo);
    }
    return orbit;
}

int run_decide(const std::string& map_spec, unsigned kmax, std::size_t depth, bool strict,
               const std::string& cert_out) {
    PLMap f = load_map(map_spec);
    DecideOptions opt;
    opt.k_max = kmax;
    opt.depth = depth;
    ArcVerdict v = decide(f, opt);
    std::optional<std::string> cert_path;
    if (v.outcome == Verdict::NOT_ARC && v.certificate) {
        std::string path = cert_out.empty() ? default_cert_path(map_spec) : cert_out;
        std::ofstream out(path);
        write_certificate(out, *v.certificate);
        cert_path = path;
    }
    write_arcreport(std::cout, f, v, cert_path);
    if (strict && v.outcome == Verdict::UNDECIDED) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact splitting-sequence analysis of piecewise-linear interval maps"};
    app.require_subcommand(1);

    std::string map_spec, cert_spec, out_path, format = "csv", axes_spec = "1,0";
    std::string x_spec, p_spec, eps_spec = "1/48";
    unsigned kmax = 8;
    std::size_t depth = 32, steps = 10, terms = 20;
    bool strict = false;

    auto* analyze = app.add_subcommand("analyze", "print an arcreport for a map");
    analyze->add_option("map", map_spec)->required();
    analyze->add_flag("--strict", strict, "exit 3 when the verdict is UNDECIDED");

    auto* dec = app.add_subcommand("decide", "decide arc-ness; write a certificate on NOT_ARC");
    dec->add_option("map", map_spec)->required();
    dec->add_option("--kmax", kmax, "maximum certificate order searched");
    dec->add_option("--depth", depth, "decomposition recursion depth");
    dec->add_option("--cert-out", out_path, "certificate output path");
    dec->add_flag("--strict", strict, "exit 3 when the verdict is UNDECIDED");

    auto* cert = app.add_subcommand("certify", "search for a splitting certificate");
    cert->add_option("map", map_spec)->required();
    cert->add_option("--kmax", kmax);
    cert->add_option("--out", out_path, "certificate output path");

    auto* ver = app.add_subcommand("verify", "replay a certificate against a map");
    ver->add_option("map", map_spec)->required();
    ver->add_option("cert", cert_spec)->required();
    ver->add_option("--terms", terms, "replay length");

    auto* orb = app.add_subcommand("orbit", "print a forward orbit");
    orb->add_option("map", map_spec)->required();
    orb->add_option("--x", x_spec)->required();
    orb->add_option("--steps", steps);

    auto* proj = app.add_subcommand("project", "emit a coordinate projection of G_{0,n}");
    proj->add_option("map", map_spec)->required();
    proj->add_option("--depth", depth)->required();
    proj->add_option("--axes", axes_spec, "comma-separated coordinate indices (2 or 3)");
    proj->add_option("--out", out_path)->required();
    proj->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));

    auto* crook = app.add_subcommand("crooked", "finite-depth endpoint test at a point");
    crook->add_option("map", map_spec)->required();
    crook->add_option("--p", p_spec)->required();
    crook->add_option("--depth", depth)->required();
    crook->add_option("--eps", eps_spec);

    auto* corp = app.add_subcommand("corpus", "built-in example maps");
    std::string corpus_action, corpus_name;
    unsigned notches = 1;
    corp->add_option("action", corpus_action)->required()->check(CLI::IsMember({"list", "emit"}));
    corp->add_option("name", corpus_name);
    corp->add_option("--notches", notches);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            PLMap f = load_map(map_spec);
            ArcVerdict v = decide(f);
            write_arcreport(std::cout, f, v, std::nullopt);
            return strict && v.outcome == Verdict::UNDECIDED ? 3 : 0;
        }
        if (*dec) return run_decide(map_spec, kmax, depth, strict, out_path);
        if (*cert) {
            PLMap f = load_map(map_spec);
            auto c = pair_certificate_search(f, kmax);
            if (!c) {
                std::cout << "no certificate found with kmax " << kmax << "\n";
                return 0;
            }
            if (out_path.empty()) {
                write_certificate(std::cout, *c);
            } else {
                std::ofstream out(out_path);
                write_certificate(out, *c);
                std::cout << "certificate " << out_path << "\n";
            }
            return 0;
        }
        if (*ver) {
            PLMap f = load_map(map_spec);
            SplitCertificate c = read_certificate_file(cert_spec);
            try {
                ReplayTrace trace = verify_certificate(f, c, terms);
                std::cout << "valid: " << trace.tight.terms.size() - 1 << " terms, "
                          << trace.witnesses.size() << " witnesses\n";
                return 0;
            } catch (const ReplayFailure& e) {
                std::cout << "invalid: " << e.what() << "\n";
                return 2;
            }
        }
        if (*orb) {
            PLMap f = load_map(map_spec);
            Rational x = Rational::parse(x_spec);
            for (std::size_t i = 0; i <= steps; ++i) {
                std::cout << x.str() << "\n";
                x = eval(f, x);
            }
            return 0;
        }
        if (*proj) {
            PLMap f = load_map(map_spec);
            std::vector<std::size_t> axes;
            std::stringstream ss(axes_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) axes.push_back(std::stoul(tok));
            auto polylines = project(f, depth, axes);
            std::ofstream out(out_path);
            if (!out) throw ParseError("cannot open output: " + out_path);
            if (format == "csv") emit_csv(out, polylines);
            else emit_svg(out, polylines);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (*crook) {
            PLMap f = load_map(map_spec);
            Rational p = Rational::parse(p_spec);
            Rational eps = Rational::parse(eps_spec);
            auto orbit = backward_orbit(f, p, 2 * depth + 1);
            auto res = endpoint_test(f, orbit, depth, eps);
            if (res.pass) {
                std::cout << "pass: " << res.queries_tested << " crookedness queries at depth "
                          << depth << "\n";
            } else {
                std::cout << "fail";
                if (res.witness)
                    std::cout << ": p_" << res.witness->n + res.witness->k << " = "
                              << res.witness->p_nk.str() << " separates the collar preimages in "
                              << res.witness->J_nk.str() << " over J_" << res.witness->n << " = "
                              << res.witness->J_n.str();
                std::cout << "\n";
            }
            return 0;
        }
        if (*corp) {
            if (corpus_action == "list") {
                for (const auto& e : corpus())
                    std::cout << e.name << "  expected " << to_string(e.expected) << "  ("
                              << e.source << ")\n";
                std::cout << "henderson:<N>  expected ARC  (finite-notch surrogate of the "
                             "Henderson construction)\n";
                return 0;
            }
            if (corpus_name.empty()) throw ParseError("corpus emit needs a name");
            std::string name = corpus_name;
            if (name == "henderson") name += ":" + std::to_string(notches);
            PLMap f = corpus_map(name);
            write_plmap(std::cout, f);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
