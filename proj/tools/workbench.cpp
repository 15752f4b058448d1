// Command-line front end; talks to the library only through nevwb.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "nevwb.h"

using json = nlohmann::json;

namespace {

struct Failure {
    nevwb_status status;
};

void check(nevwb_status s) {
    if (s != NEVWB_OK) throw Failure{s};
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
    T** out() { return &p; }
};
using Poly = Handle<nevwb_poly, nevwb_poly_free>;
using Mero = Handle<nevwb_mero, nevwb_mero_free>;
using Morphism = Handle<nevwb_morphism, nevwb_morphism_free>;
using ScenarioH = Handle<nevwb_scenario, nevwb_scenario_free>;
using Report = Handle<nevwb_report, nevwb_report_free>;

std::string take(char* s) {
    std::string out(s ? s : "");
    nevwb_string_free(s);
    return out;
}

// a JSON document, or bare text taken as a polynomial string
std::string as_document(const std::string& arg) {
    if (json::accept(arg)) return arg;
    return json(arg).dump();
}

void parse_poly(const std::string& text, std::size_t nvars, Poly& out) { check(nevwb_poly_parse(text.c_str(), nvars, nullptr, out.out())); }

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + tmp);
        os << content;
    }
    std::filesystem::rename(tmp, path);
}

struct GridArg {
    double r_min = 10, r_max = 100;
    long count = 20;
};

GridArg parse_grid(const std::string& s) {
    GridArg g;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> g.r_min >> c1 >> g.r_max >> c2 >> g.count) || c1 != ':' || c2 != ':')
        throw std::runtime_error("grid must be r_min:r_max:count");
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Value-distribution workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(nevwb_version()));

    auto* exset = app.add_subcommand("exset", "Exceptional set W of a plane curve G");
    std::string G_text, curve_doc;
    int ell2 = 2;
    exset->add_option("--G", G_text, "curve in x0, x1, x2")->required();
    exset->add_option("--ell2", ell2, "multiplicity bound")->check(CLI::PositiveNumber);
    exset->add_option("--curve", curve_doc, "JSON array of three functions to test for membership");

    auto* constants = app.add_subcommand("constants", "Effective constants for given n, d, eps");
    long n = 2, d = 1;
    std::string eps = "1/10", family, c3;
    constants->add_option("--n", n)->required();
    constants->add_option("--d", d)->required();
    constants->add_option("--eps", eps, "rational p/q")->required();
    constants->add_option("--family", family, "monomial family as JSON");
    constants->add_option("--c3", c3, "rational constant c3");

    auto* nev = app.add_subcommand("nev", "Nevanlinna functionals on a radius grid");
    std::string fn, other, functional = "T", grid = "10:100:20";
    nev->add_option("--fn", fn, "function document (or a JSON array of them for T of a curve)")->required();
    nev->add_option("--functional", functional)->check(CLI::IsMember({"T", "N", "N1", "Npole", "m", "Ngcd"}));
    nev->add_option("--other", other, "second function for Ngcd");
    nev->add_option("--grid", grid, "r_min:r_max:count");

    auto* morph = app.add_subcommand("morphism", "Power morphisms (F1^a1 : F2^a2 : F3^a3)");
    std::string f1, f2, f3, op = "describe", Z;
    bool no_finite_check = false;
    morph->add_option("--f1", f1)->required();
    morph->add_option("--f2", f2)->required();
    morph->add_option("--f3", f3)->required();
    morph->add_option("--op", op)->check(CLI::IsMember({"describe", "jacobian", "jacobian-full", "euler", "pushforward"}));
    morph->add_option("--z", Z, "curve Z for pushforward");
    morph->add_flag("--no-finite-check", no_finite_check);

    auto* curves = app.add_subcommand("curves", "General position and transversality of plane curves");
    std::vector<std::string> curve_list;
    std::string curve_op = "general-position";
    curves->add_option("--curve", curve_list, "curve in x0, x1, x2 (repeatable)")->required();
    curves->add_option("--op", curve_op)->check(CLI::IsMember({"general-position", "transversality"}));

    auto* verify = app.add_subcommand("verify", "Run one scenario file");
    std::string scenario, out_csv, out_json, eps_override;
    double r_min = 0, r_max = 0;
    long count = 0;
    verify->add_option("--scenario", scenario)->required()->check(CLI::ExistingFile);
    verify->add_option("--out", out_csv, "CSV report path");
    verify->add_option("--json", out_json, "JSON report path");
    verify->add_option("--eps", eps_override, "override eps");
    verify->add_option("--r-min", r_min);
    verify->add_option("--r-max", r_max);
    verify->add_option("--count", count);

    auto* suite = app.add_subcommand("suite", "Run every scenario in a directory");
    std::string dir = "scenarios", summary;
    suite->add_option("--dir", dir)->check(CLI::ExistingDirectory);
    suite->add_option("--out", summary, "JSON summary path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*exset) {
            Poly G;
            parse_poly(G_text, 3, G);
            char* out = nullptr;
            check(nevwb_exceptional_set(G.p, ell2, curve_doc.empty() ? nullptr : curve_doc.c_str(), &out));
            std::cout << take(out) << "\n";
        } else if (*constants) {
            char* out = nullptr;
            check(nevwb_constants(n, d, eps.c_str(), family.empty() ? nullptr : family.c_str(),
                                  c3.empty() ? nullptr : c3.c_str(), &out));
            std::cout << take(out) << "\n";
        } else if (*nev) {
            GridArg g = parse_grid(grid);
            std::string fdoc = as_document(fn), odoc = other.empty() ? "" : as_document(other);
            char* out = nullptr;
            check(nevwb_nev_grid(fdoc.c_str(), functional.c_str(), other.empty() ? nullptr : odoc.c_str(), g.r_min,
                                 g.r_max, static_cast<size_t>(g.count), &out));
            std::cout << take(out) << "\n";
        } else if (*morph) {
            Poly a, b, c, z;
            parse_poly(f1, 3, a);
            parse_poly(f2, 3, b);
            parse_poly(f3, 3, c);
            if (!Z.empty()) parse_poly(Z, 3, z);
            Morphism m;
            check(nevwb_morphism_make(a.p, b.p, c.p, no_finite_check ? 0 : 1, m.out()));
            char* out = nullptr;
            check(nevwb_morphism_op(m.p, op.c_str(), z.p, &out));
            std::cout << take(out) << "\n";
        } else if (*curves) {
            std::vector<Poly> polys(curve_list.size());
            std::vector<const nevwb_poly*> ptrs;
            for (std::size_t k = 0; k < curve_list.size(); ++k) {
                parse_poly(curve_list[k], 3, polys[k]);
                ptrs.push_back(polys[k].p);
            }
            char* out = nullptr;
            if (curve_op == "transversality") {
                if (ptrs.size() != 2) throw std::runtime_error("transversality takes exactly two curves");
                check(nevwb_transversality(ptrs[0], ptrs[1], &out));
            } else {
                check(nevwb_general_position(ptrs.data(), ptrs.size(), &out));
            }
            std::cout << take(out) << "\n";
        } else if (*verify) {
            ScenarioH s;
            check(nevwb_scenario_load(scenario.c_str(), s.out()));
            check(nevwb_scenario_override(s.p, eps_override.empty() ? nullptr : eps_override.c_str(), r_min, r_max, count));
            Report r;
            check(nevwb_run_scenario(s.p, r.out()));
            char* js = nullptr;
            char* csv = nullptr;
            check(nevwb_report_json(r.p, &js));
            check(nevwb_report_csv(r.p, &csv));
            std::string jtext = take(js), ctext = take(csv);
            if (!out_csv.empty()) write_atomic(out_csv, ctext);
            if (!out_json.empty()) write_atomic(out_json, jtext);
            json j = json::parse(jtext);
            std::cout << j["scenario"].get<std::string>() << "  " << j["target"].get<std::string>() << "  "
                      << j["verdict"].get<std::string>() << "  min-margin " << j["min_margin"].get<double>() << "\n";
            for (const auto& note : j["notes"]) std::cout << "  note: " << note.get<std::string>() << "\n";
            for (const auto& w : j["w_matches"]) std::cout << "  in W: " << w.get<std::string>() << "\n";
            if (out_csv.empty() && out_json.empty()) std::cout << ctext;
            return nevwb_report_failed(r.p) ? 1 : 0;
        } else if (*suite) {
            char* out = nullptr;
            int failures = 0;
            check(nevwb_run_suite(dir.c_str(), &out, &failures));
            std::string text = take(out);
            if (!summary.empty()) write_atomic(summary, text);
            json j = json::parse(text);
            std::printf("%-34s %-10s %-18s %14s  %s\n", "scenario", "target", "verdict", "min-margin", "expected");
            for (const auto& e : j["entries"])
                std::printf("%-34s %-10s %-18s %14.6g  %s\n", e["scenario"].get<std::string>().c_str(),
                            e["target"].get<std::string>().c_str(), e["verdict"].get<std::string>().c_str(),
                            e["min_margin"].get<double>(), e["expectation_met"].get<bool>() ? "yes" : "NO");
            std::printf("%zu scenarios, %d failing\n", j["entries"].size(), failures);
            return failures ? 1 : 0;
        }
    } catch (const Failure& f) {
        std::cerr << "error (" << nevwb_status_name(f.status) << "): " << nevwb_last_error() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
