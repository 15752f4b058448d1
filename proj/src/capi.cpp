#include "nevwb.h"

#include <cstdlib>
#include <cstring>

#include "nevwb/error.hpp"
#include "nevwb/exceptional_set.hpp"
#include "nevwb/harness.hpp"
#include "nevwb/morphism.hpp"

using namespace nevwb;

struct nevwb_poly {
    SparsePoly p;
};
struct nevwb_mero {
    MeroFn f;
};
struct nevwb_morphism {
    PowerMorphism m;
};
struct nevwb_scenario {
    Scenario s;
};
struct nevwb_report {
    MarginReport r;
};

namespace {

thread_local std::string g_last_error;

nevwb_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return NEVWB_E_INVALID_INPUT;
        case ErrorKind::Parse: return NEVWB_E_PARSE;
        case ErrorKind::Coprimality: return NEVWB_E_COPRIMALITY;
        case ErrorKind::InternalContradiction: return NEVWB_E_INTERNAL_CONTRADICTION;
        case ErrorKind::NonConvergence: return NEVWB_E_NON_CONVERGENCE;
        case ErrorKind::NumericDomain: return NEVWB_E_NUMERIC_DOMAIN;
        case ErrorKind::NonProperIntersection: return NEVWB_E_NON_PROPER_INTERSECTION;
        case ErrorKind::Io: return NEVWB_E_IO;
    }
    return NEVWB_E_UNKNOWN;
}

template <class F>
nevwb_status guard(F&& body) {
    try {
        g_last_error.clear();
        body();
        return NEVWB_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const json::exception& e) {
        g_last_error = std::string("ParseError: ") + e.what();
        return NEVWB_E_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NEVWB_E_UNKNOWN;
    }
}

void require(const void* p, const char* what) {
    if (!p) throw Error(ErrorKind::InvalidInput, std::string("null argument: ") + what);
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const json& j) {
    require(out, "out");
    *out = dup(j.dump(2));
}

std::vector<MeroFn> curve_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of function documents");
    std::vector<MeroFn> g;
    for (const auto& c : j) g.push_back(mero_from_json(c));
    return g;
}

double functional_value(const MeroFn& f, const std::string& fn, const MeroFn* other, double r) {
    if (fn == "T") return characteristic_T(f, r).value;
    if (fn == "N") return counting_N(f, Target::Zero, r);
    if (fn == "N1") return counting_N(f, Target::Zero, r, 1);
    if (fn == "Npole") return counting_N(f, Target::Pole, r);
    if (fn == "m") return proximity_m(f, r).value;
    if (fn == "Ngcd") {
        if (!other) throw Error(ErrorKind::InvalidInput, "Ngcd needs a second function");
        return gcd_counting(f, *other, r);
    }
    throw Error(ErrorKind::InvalidInput, "unknown functional '" + fn + "'");
}

json general_position_json(const GeneralPositionReport& r) {
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back({{"curves", {x.i, x.j, x.k}}, {"point", point_to_json(x.point)}, {"certified", x.certified}});
    return {{"in_general_position", r.in_general_position()}, {"points_checked", r.points_checked}, {"violations", v}};
}

json bounded_json(const BoundedValue& b) {
    return {{"re", b.value.real()}, {"im", b.value.imag()}, {"bound", b.bound}, {"exact", b.exact}};
}

}  // namespace

extern "C" {

const char* nevwb_version(void) { return "0.1.0"; }

const char* nevwb_status_name(nevwb_status s) {
    switch (s) {
        case NEVWB_OK: return "ok";
        case NEVWB_E_INVALID_INPUT: return "invalid-input";
        case NEVWB_E_PARSE: return "parse-error";
        case NEVWB_E_COPRIMALITY: return "coprimality-error";
        case NEVWB_E_INTERNAL_CONTRADICTION: return "internal-contradiction";
        case NEVWB_E_NON_CONVERGENCE: return "non-convergence";
        case NEVWB_E_NUMERIC_DOMAIN: return "numeric-domain";
        case NEVWB_E_NON_PROPER_INTERSECTION: return "non-proper-intersection";
        case NEVWB_E_IO: return "io-error";
        case NEVWB_E_NULL_ARGUMENT: return "null-argument";
        case NEVWB_E_UNKNOWN: return "unknown-error";
    }
    return "unknown-error";
}

const char* nevwb_last_error(void) { return g_last_error.c_str(); }

void nevwb_string_free(char* s) { std::free(s); }

nevwb_status nevwb_poly_parse(const char* text, size_t nvars, const char* const* names, nevwb_poly** out) {
    if (!text || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        std::vector<std::string> n;
        for (size_t k = 0; k < nvars; ++k)
            n.push_back(names ? names[k] : nvars == 1 ? std::string("z") : "x" + std::to_string(k));
        *out = new nevwb_poly{parse_poly(text, nvars, n)};
    });
}

nevwb_status nevwb_poly_from_json(const char* doc, nevwb_poly** out) {
    if (!doc || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out = new nevwb_poly{poly_from_json(json::parse(doc))}; });
}

nevwb_status nevwb_poly_to_string(const nevwb_poly* p, char** out) {
    if (!p || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out = dup(p->p.to_string()); });
}

nevwb_status nevwb_poly_to_json(const nevwb_poly* p, char** out) {
    if (!p || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { emit(out, poly_to_json(p->p)); });
}

void nevwb_poly_free(nevwb_poly* p) { delete p; }

nevwb_status nevwb_mero_from_json(const char* doc, nevwb_mero** out) {
    if (!doc || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out = new nevwb_mero{mero_from_json(json::parse(doc))}; });
}

nevwb_status nevwb_mero_to_json(const nevwb_mero* f, char** out) {
    if (!f || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { emit(out, mero_to_json(f->f)); });
}

void nevwb_mero_free(nevwb_mero* f) { delete f; }

nevwb_status nevwb_nev_value(const nevwb_mero* f, const char* functional, const nevwb_mero* other, double r,
                             double* value) {
    if (!f || !functional || !value) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        if (!(r > 0)) throw Error(ErrorKind::NumericDomain, "radius must be positive");
        *value = functional_value(f->f, functional, other ? &other->f : nullptr, r);
    });
}

nevwb_status nevwb_nev_grid(const char* fn_doc, const char* functional, const char* other_doc, double r_min,
                            double r_max, size_t count, char** out_json) {
    if (!fn_doc || !functional || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        json fj = json::parse(fn_doc);
        std::string fn = functional;
        RadiusGrid grid = make_grid(r_min, r_max, count);
        std::vector<double> values;
        if (fj.is_array()) {
            if (fn != "T") throw Error(ErrorKind::InvalidInput, "curves support only the functional T");
            auto g = curve_from_json(fj);
            values = evaluate_on_grid(grid, [&](double r) { return characteristic_T(g, r).value; });
        } else {
            MeroFn f = mero_from_json(fj);
            std::optional<MeroFn> other;
            if (other_doc) other = mero_from_json(json::parse(other_doc));
            values = evaluate_on_grid(grid, [&](double r) { return functional_value(f, fn, other ? &*other : nullptr, r); });
        }
        json rows = json::array();
        for (size_t k = 0; k < values.size(); ++k) rows.push_back({{"r", grid.points[k]}, {"value", values[k]}});
        emit(out_json, {{"functional", fn}, {"rows", rows}});
    });
}

nevwb_status nevwb_exceptional_set(const nevwb_poly* G, int ell2, const char* curve_doc, char** out_json) {
    if (!G || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        ExceptionalSet W = build_W(G->p, ell2);
        json j = exset_to_json(W);
        if (curve_doc) {
            auto g = curve_from_json(json::parse(curve_doc));
            json m = json::array();
            for (const auto& w : member_of_W(W, g))
                m.push_back({{"index", w.index}, {"curve", W.curves[w.index].to_string()}, {"exact", w.exact}});
            j["membership"] = m;
        }
        emit(out_json, j);
    });
}

nevwb_status nevwb_constants(long n, long d, const char* eps, const char* family_doc, const char* c3, char** out_json) {
    if (!eps || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        std::optional<MonomialFamily> fam;
        if (family_doc) fam = MonomialFamily::from_json(json::parse(family_doc));
        std::optional<mpq_class> c;
        if (c3) c = parse_rational(c3);
        emit(out_json, profile_to_json(full_profile(parse_rational(eps), n, d, fam, c)));
    });
}

nevwb_status nevwb_morphism_make(const nevwb_poly* f1, const nevwb_poly* f2, const nevwb_poly* f3, int check_finite,
                                 nevwb_morphism** out) {
    if (!f1 || !f2 || !f3 || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out = new nevwb_morphism{PowerMorphism::make(f1->p, f2->p, f3->p, check_finite != 0)}; });
}

nevwb_status nevwb_morphism_op(const nevwb_morphism* m, const char* op, const nevwb_poly* Z, char** out_json) {
    if (!m || !op || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        std::string o = op;
        json j = {{"morphism", morphism_to_json(m->m)}, {"op", o}};
        if (o == "describe") {
        } else if (o == "jacobian" || o == "jacobian-full") {
            SparsePoly J = jacobian_det(m->m, o == "jacobian");
            j["determinant"] = J.to_string();
            j["determinant_doc"] = poly_to_json(J);
        } else if (o == "euler") {
            auto r = euler_identity_check(m->m);
            j["euler"] = r.euler;
            j["determinant_identity"] = r.determinant;
        } else if (o == "pushforward") {
            require(Z, "Z");
            auto r = pushforward_curve(m->m, Z->p);
            std::vector<std::string> y{"y0", "y1", "y2"};
            j["A"] = r.A.to_string(y);
            j["A_doc"] = poly_to_json(r.A);
            j["exponent_reduced"] = r.exponent_reduced;
            j["eliminant_degree"] = r.eliminant_degree;
            j["vanishing_order"] = r.vanishing_order;
        } else {
            throw Error(ErrorKind::InvalidInput, "unknown morphism operation '" + o + "'");
        }
        emit(out_json, j);
    });
}

void nevwb_morphism_free(nevwb_morphism* m) { delete m; }

nevwb_status nevwb_general_position(const nevwb_poly* const* curves, size_t count, char** out_json) {
    if (!curves || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        std::vector<SparsePoly> c;
        for (size_t k = 0; k < count; ++k) {
            require(curves[k], "curve");
            c.push_back(curves[k]->p);
        }
        emit(out_json, general_position_json(general_position_check(c)));
    });
}

nevwb_status nevwb_transversality(const nevwb_poly* f1, const nevwb_poly* f2, char** out_json) {
    if (!f1 || !f2 || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        auto r = transversality_check(f1->p, f2->p);
        json pts = json::array();
        for (const auto& e : r.points)
            pts.push_back({{"point", point_to_json(e.point)}, {"minor", bounded_json(e.minor)},
                           {"transversal", decision_name(e.transversal)}});
        emit(out_json, {{"transversal", r.transversal()}, {"points", pts}});
    });
}

nevwb_status nevwb_scenario_load(const char* path, nevwb_scenario** out) {
    if (!path || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out = new nevwb_scenario{load_scenario(path)}; });
}

nevwb_status nevwb_scenario_parse(const char* doc, nevwb_scenario** out) {
    if (!doc || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out = new nevwb_scenario{scenario_from_json(json::parse(doc))}; });
}

nevwb_status nevwb_scenario_override(nevwb_scenario* s, const char* eps, double r_min, double r_max, long count) {
    if (!s) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        if (eps) {
            mpq_class e = parse_rational(eps);
            if (e <= 0) throw Error(ErrorKind::InvalidInput, "eps must be positive");
            s->s.params.eps = e;
        }
        if (r_min > 0) s->s.grid.r_min = r_min;
        if (r_max > 0) s->s.grid.r_max = r_max;
        if (count > 0) s->s.grid.count = static_cast<std::size_t>(count);
    });
}

void nevwb_scenario_free(nevwb_scenario* s) { delete s; }

nevwb_status nevwb_run_scenario(const nevwb_scenario* s, nevwb_report** out) {
    if (!s || !out) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out = new nevwb_report{run_scenario(s->s)}; });
}

nevwb_verdict nevwb_report_verdict(const nevwb_report* r) {
    return r ? static_cast<nevwb_verdict>(r->r.verdict) : NEVWB_HYPOTHESIS_FAILED;
}

int nevwb_report_failed(const nevwb_report* r) { return r && r->r.failed() ? 1 : 0; }

nevwb_status nevwb_report_json(const nevwb_report* r, char** out_json) {
    if (!r || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { emit(out_json, report_to_json(r->r)); });
}

nevwb_status nevwb_report_csv(const nevwb_report* r, char** out_csv) {
    if (!r || !out_csv) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] { *out_csv = dup(report_csv(r->r)); });
}

void nevwb_report_free(nevwb_report* r) { delete r; }

nevwb_status nevwb_run_suite(const char* dir, char** out_json, int* failures) {
    if (!dir || !out_json) return NEVWB_E_NULL_ARGUMENT;
    return guard([&] {
        auto entries = run_suite(dir);
        json arr = json::array();
        int bad = 0;
        for (const auto& e : entries) {
            if (e.failed()) ++bad;
            arr.push_back({{"file", e.file},
                           {"scenario", e.report.scenario},
                           {"target", e.report.target},
                           {"verdict", verdict_name(e.report.verdict)},
                           {"min_margin", e.report.min_margin},
                           {"expectation_met", e.expectation_met},
                           {"notes", e.report.notes}});
        }
        if (failures) *failures = bad;
        emit(out_json, {{"entries", arr}});
    });
}

}  // extern "C"
