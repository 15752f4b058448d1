#include "nevwb/mero_io.hpp"

#include "nevwb/error.hpp"

namespace nevwb {

namespace {

SparsePoly zpoly_from_json(const json& j) {
    if (j.is_string()) return zpoly(j.get<std::string>());
    if (j.is_number_integer()) return zconst(GaussRat(j.get<long>()));
    SparsePoly p = poly_from_json(j);
    if (p.num_vars() != 1) throw Error(ErrorKind::Parse, "expected a univariate polynomial in z");
    return p;
}

GaussRat scalar_from_json(const json& j) {
    if (j.is_number_integer()) return GaussRat(j.get<long>());
    if (j.is_string()) {
        SparsePoly c = zpoly(j.get<std::string>());
        if (!c.is_constant()) throw Error(ErrorKind::Parse, "scalar must be a constant");
        return c.constant_term();
    }
    return gauss_from_json(j);
}

}  // namespace

json mero_to_json(const MeroFn& f) {
    json fac = json::array();
    for (const auto& x : f.factors()) fac.push_back({{"poly", poly_to_json(x.poly)}, {"mult", x.mult}});
    return {{"scalar", gauss_to_json(f.scalar())}, {"factors", fac}, {"exp", poly_to_json(f.exp_part())}};
}

MeroFn mero_from_json(const json& j) {
    try {
        if (j.is_string() || j.is_number_integer()) return MeroFn::from_poly(zpoly_from_json(j));
        if (!j.is_object()) throw Error(ErrorKind::Parse, "function document must be a string or an object");
        if (j.contains("h")) {
            int ell = j.value("ell", 1);
            if (ell < 1) throw Error(ErrorKind::Parse, "\"ell\" must be positive");
            return MeroFn::from_poly(zpoly_from_json(j["h"])).pow(ell);
        }
        if (j.contains("unit")) return MeroFn::exp_of(zpoly_from_json(j["unit"]));
        GaussRat scalar = j.contains("scalar") ? scalar_from_json(j["scalar"]) : GaussRat(1);
        std::vector<MeroFactor> factors;
        if (j.contains("factors"))
            for (const auto& f : j["factors"]) factors.push_back({zpoly_from_json(f.at("poly")), f.value("mult", 1)});
        SparsePoly Q = j.contains("exp") ? zpoly_from_json(j["exp"]) : SparsePoly(1);
        return MeroFn::make(scalar, factors, Q);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("function document: ") + e.what());
    }
}

MeroSum mero_sum_from_json(const json& j) {
    if (j.is_object() && j.contains("sum")) {
        MeroSum s;
        for (const auto& t : j["sum"]) s = s + MeroSum(mero_from_json(t));
        return s;
    }
    return MeroSum(mero_from_json(j));
}

}  // namespace nevwb
