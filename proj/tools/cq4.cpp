// cq4: construct, certify and search cyclic quartic monogenic polynomials.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cq/jsonl.hpp"

namespace {

using namespace cq;

void emit(std::ostream& os, const ordered_json& j) { os << j.dump() << "\n"; }

ordered_json family_line(const std::string& family, const GrasParams& p, bool with_v,
                         const Int& v) {
    ordered_json j;
    j["family"] = family;
    if (with_v) j["v"] = to_string(v);
    j["a"] = to_string(p.a);
    j["b"] = to_string(p.b);
    j["g"] = to_string(p.g);
    j["m"] = to_string(p.m);
    j["x"] = to_string(p.x);
    j["y"] = to_string(p.y);
    j["z"] = to_string(p.z);
    j["t"] = p.t ? ordered_json(to_string(*p.t)) : ordered_json(nullptr);
    j["chi"] = to_string(Int(p.chi));
    j["poly"] = gras_polynomial(p).to_string();
    return j;
}

std::vector<long long> expand_range(std::vector<long long> listed, std::optional<long long> lo,
                                    std::optional<long long> hi, const char* what) {
    if (lo.has_value() != hi.has_value())
        throw CLI::ValidationError(std::string(what) + ": range needs both min and max");
    if (lo) {
        if (*lo > *hi) throw CLI::ValidationError(std::string(what) + ": min > max");
        for (long long v = *lo; v <= *hi; ++v) listed.push_back(v);
    }
    return listed;
}

GrasParams parse_params(const std::string& csv) {
    std::vector<Int> vals;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
        size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) throw CLI::ValidationError("--params: empty entry");
        size_t b = tok.find_last_not_of(" \t");
        vals.push_back(Int(tok.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vals.size() != 9)
        throw CLI::ValidationError("--params: expected a,b,g,m,x,y,z,t,chi");
    return GrasParams(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6],
                      static_cast<int>(vals[8].get_si()), vals[7]);
}

int cmd_family(const std::string& family, const std::vector<long long>& zs,
               const std::vector<long long>& vs) {
    if (family == "fz") {
        if (zs.empty()) throw CLI::ValidationError("family fz: provide --z values");
        for (long long z : zs) {
            ordered_json j;
            j["family"] = "fz";
            j["z"] = std::to_string(z);
            j["poly"] = fz_presented(Int(std::to_string(z))).to_string();
            emit(std::cout, j);
        }
        return 0;
    }
    if (family == "a") {
        if (zs.empty()) throw CLI::ValidationError("family a: provide --z values");
        for (long long z : zs) {
            GrasParams p = further_family_a(Int(std::to_string(z)));
            emit(std::cout, family_line("a", p, false, 0));
        }
        return 0;
    }
    if (family == "b") {
        if (vs.empty()) throw CLI::ValidationError("family b: provide --v values");
        for (long long v : vs) {
            GrasParams p = further_family_b(Int(std::to_string(v)));
            emit(std::cout, family_line("b", p, true, Int(std::to_string(v))));
        }
        return 0;
    }
    if (family.rfind("x3y4-", 0) == 0 && family.size() == 6) {
        int which = family[5] - '0';
        if (which < 1 || which > 4) throw CLI::ValidationError("unknown x3y4 family");
        if (vs.empty()) throw CLI::ValidationError("family x3y4-N: provide --v values");
        for (long long v : vs) {
            GrasParams p = x3y4_family(which, Int(std::to_string(v)));
            emit(std::cout, family_line(family, p, true, Int(std::to_string(v))));
        }
        return 0;
    }
    throw CLI::ValidationError("unknown family: " + family);
}

int cmd_certify(std::optional<long long> z, const std::string& params_csv,
                const std::string& poly_csv) {
    int given = int(z.has_value()) + int(!params_csv.empty()) + int(!poly_csv.empty());
    if (given != 1)
        throw CLI::ValidationError("certify: provide exactly one of --z, --params, --poly");
    if (z) {
        emit(std::cout, certificate_json(certify_z(Int(std::to_string(*z)))));
        return 0;
    }
    if (!params_csv.empty()) {
        emit(std::cout, certificate_json(certify_params(parse_params(params_csv))));
        return 0;
    }
    ExactPoly p = ExactPoly::from_string(poly_csv);
    Certificate cert;
    cert.polynomial = p;
    IntQuartic q = IntQuartic::from_poly(p);
    cert.irreducible = quartic_irreducible(q);
    if (cert.irreducible) cert.is_c4 = kw_is_c4(q).is_c4;
    cert.disc_poly = Int(discriminant(p).get_num());
    cert.reasons.push_back(
        "no parameter context: field conductor and discriminant are not computed");
    emit(std::cout, certificate_json(cert));
    return 0;
}

int cmd_search(SweepBounds bounds, int chi, unsigned jobs, const std::string& out_path) {
    SweepStats stats;
    auto hits = sweep(bounds, chi, jobs, &stats);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw CLI::ValidationError("cannot open --out file: " + out_path);
        os = &file;
    }
    for (const auto& h : hits) emit(*os, hit_json(h));
    std::cerr << "triples=" << stats.triples << " system_solutions=" << stats.system_solutions
              << " hits=" << hits.size() << " no_t=" << stats.no_t
              << " cert_failures=" << stats.cert_failures << " duplicates=" << stats.duplicates
              << "\n";
    return 0;
}

int cmd_xy_search(long long c, long long g_max) {
    for (const auto& hit :
         xy_constraint_search(Int(std::to_string(c)), Int(std::to_string(g_max)))) {
        ordered_json j;
        j["c"] = std::to_string(c);
        j["g"] = to_string(hit.g);
        j["m"] = to_string(hit.m);
        j["sign"] = hit.sign > 0 ? "+" : "-";
        emit(std::cout, j);
    }
    return 0;
}

int cmd_x_check(const std::vector<long long>& xs) {
    for (long long xv : xs) {
        Int x(std::to_string(xv));
        ordered_json j;
        j["x"] = std::to_string(xv);
        try {
            if (is_odd(x)) {
                j["check"] = "quadratic-residue";
                j["result"] = x_check(x);
            } else {
                j["check"] = "even-probe";
                j["result"] = x_check_even(x);
            }
        } catch (const std::invalid_argument& e) {
            j["error"] = e.what();
        }
        emit(std::cout, j);
    }
    return 0;
}

int cmd_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open corpus file: " + path);
    auto entries = load_corpus(in);
    CorpusReport report = corpus_check(entries);
    for (const auto& line : report.lines) emit(std::cout, line);
    std::cerr << "checked=" << report.checked << " passed=" << report.passed
              << " failed=" << report.failed << " informational=" << report.informational
              << "\n";
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic quartic monogenic polynomial toolkit"};
    app.require_subcommand(1);

    auto* fam = app.add_subcommand("family", "emit family polynomials for a z or v range");
    std::string family_name = "fz";
    std::vector<long long> fam_z, fam_v;
    std::optional<long long> fam_zmin, fam_zmax, fam_vmin, fam_vmax;
    fam->add_option("--family", family_name, "fz, a, b, or x3y4-1..x3y4-4");
    fam->add_option("--z", fam_z, "z value (repeatable)");
    fam->add_option("--z-min", fam_zmin);
    fam->add_option("--z-max", fam_zmax);
    fam->add_option("--v", fam_v, "v value (repeatable)");
    fam->add_option("--v-min", fam_vmin);
    fam->add_option("--v-max", fam_vmax);

    auto* cert = app.add_subcommand("certify", "certify one z, parameter tuple, or polynomial");
    std::optional<long long> cert_z;
    std::string cert_params, cert_poly;
    cert->add_option("--z", cert_z, "certify the family member f_z");
    cert->add_option("--params", cert_params, "a,b,g,m,x,y,z,t,chi");
    cert->add_option("--poly", cert_poly, "comma-separated coefficients, constant first");

    auto* search_cmd = app.add_subcommand("search", "sweep the parameter box");
    SweepBounds bounds{30, 30, 5, 2500};
    unsigned jobs = 1;
    int chi = 1;
    bool long_mode = false;
    std::string out_path;
    search_cmd->add_option("--a-max", bounds.a_max);
    search_cmd->add_option("--b-max", bounds.b_max);
    search_cmd->add_option("--x-max", bounds.x_max);
    search_cmd->add_option("--g-max", bounds.g_max);
    search_cmd->add_option("--jobs", jobs, "worker thread count (default 1)");
    search_cmd->add_option("--chi", chi)->check(CLI::IsMember({1, -1}));
    search_cmd->add_option("--out", out_path, "JSONL sink (default stdout)");
    search_cmd->add_flag("--long", long_mode, "the full published box (hours of CPU)");

    auto* xy = app.add_subcommand("xy-search", "g^2 +- 4 = m c^2 scan");
    long long xy_c = 1, xy_gmax = 1000000;
    xy->add_option("--c", xy_c)->required();
    xy->add_option("--g-max", xy_gmax);

    auto* xc = app.add_subcommand("x-check", "quadratic-residue / even-probe checks");
    std::vector<long long> xc_x;
    std::optional<long long> xc_min, xc_max;
    xc->add_option("--x", xc_x, "x value (repeatable)");
    xc->add_option("--x-min", xc_min);
    xc->add_option("--x-max", xc_max);

    auto* corpus = app.add_subcommand("corpus", "regression-check the known-fields corpus");
    std::string corpus_file;
    corpus->add_option("--file", corpus_file)->required();

    try {
        app.parse(argc, argv);
        if (fam->parsed())
            return cmd_family(family_name, expand_range(fam_z, fam_zmin, fam_zmax, "--z"),
                              expand_range(fam_v, fam_vmin, fam_vmax, "--v"));
        if (cert->parsed()) return cmd_certify(cert_z, cert_params, cert_poly);
        if (search_cmd->parsed()) {
            if (long_mode) {
                if (search_cmd->count("--a-max") == 0) bounds.a_max = 500;
                if (search_cmd->count("--b-max") == 0) bounds.b_max = 20000;
                if (search_cmd->count("--x-max") == 0) bounds.x_max = 200;
                if (search_cmd->count("--g-max") == 0) bounds.g_max = 1000000;
            }
            return cmd_search(bounds, chi, jobs, out_path);
        }
        if (xy->parsed()) return cmd_xy_search(xy_c, xy_gmax);
        if (xc->parsed()) return cmd_x_check(expand_range(xc_x, xc_min, xc_max, "--x"));
        if (corpus->parsed()) return cmd_corpus(corpus_file);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
