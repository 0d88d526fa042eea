#include "hilbproj/report_json.hpp"

#include "hilbproj/errors.hpp"

namespace hilbproj {

Json json_rat(const Rat& q) { return to_string(q); }

Json json_int(const Int& n) {
    if (auto v = to_int64(n)) return *v;
    return to_string(n);
}

Json fiber_json(const FiberProfile& profile) {
    Json out;
    out["profile"] = profile.parts();
    out["sum"] = profile.sum();
    return out;
}

Json pencil_json(const PencilReport& report, bool include_disc) {
    Json out;
    out["disc_degree"] = report.disc_degree;
    out["degree_attained"] = report.degree_attained;
    out["squarefree"] = report.is_squarefree;
    out["branch_count"] = report.branch_count;
    if (include_disc) {
        Json coeffs = Json::array();
        for (const Rat& c : report.discriminant.coeffs()) coeffs.push_back(json_rat(c));
        out["disc_coeffs"] = std::move(coeffs);
    }
    return out;
}

Json certificate_json(const GeneralityReport& cert) {
    Json out;
    out["general_center"] = cert.general;
    Json diagnostics = Json::array();
    if (!cert.disc_nonzero) diagnostics.push_back("disc_nonzero");
    if (!cert.squarefree) diagnostics.push_back("squarefree");
    if (!cert.profiles_ok) diagnostics.push_back("profile");
    out["diagnostics"] = std::move(diagnostics);
    Json samples = Json::array();
    for (const BranchSample& s : cert.samples) {
        Json entry;
        entry["u"] = json_rat(s.u);
        entry["v"] = json_rat(s.v);
        entry["profile"] = s.profile.parts();
        entry["expected"] = s.expected;
        samples.push_back(std::move(entry));
    }
    out["branch_samples"] = std::move(samples);
    return out;
}

Json hilb_json(const FiberProfile& profile, int a) {
    if (binomial(profile.sum(), a) > 1000000)
        throw UnsupportedError("the report enumerates the fiber; binom(d,a) is too large");
    Json out;
    out["profile"] = profile.parts();
    out["a"] = a;
    Json points = Json::array();
    const bool admissible = profile_admissible(profile);
    Int index_sum(0);
    for (const SubschemeSelector& s : enumerate_fiber_points(profile, a)) {
        Json point;
        point["k"] = s.k;
        point["tangent_dim"] = tangent_dim(s);
        point["smooth"] = pi_smooth_at(s);
        if (admissible) {
            const int index = ramification_index(s);
            point["ram_index"] = index;
            index_sum += index;
        } else {
            point["ram_index"] = "unknown";
        }
        points.push_back(std::move(point));
    }
    out["points"] = std::move(points);
    if (admissible) {
        if (index_sum != binomial(profile.sum(), a))
            throw InternalError("ramification indices do not sum to the flat degree");
        out["degree_check"] = json_int(index_sum);
    }
    return out;
}

Json genus_json(int d, int a) {
    Json out;
    out["d"] = d;
    out["a"] = a;
    out["cover_degree"] = json_int(binomial(d, a));
    out["genus_formula"] = json_int(hilb_genus(d, a));
    out["genus_hurwitz"] = json_int(hurwitz_genus(d, a));
    return out;
}

Json genus_data_json(const GenusReport& report) {
    Json out;
    out["d"] = report.d;
    out["a"] = report.a;
    out["cover_degree"] = json_int(report.cover_degree);
    out["genus_formula"] = json_int(report.genus_formula);
    out["genus_hurwitz"] = json_int(report.genus_hurwitz);
    out["branch_points"] = report.branch_points;
    out["ram_per_branch"] = report.ram_per_branch;
    return out;
}

Json vmrt_json(int d, int a) {
    Json out;
    const Int degree = vmrt_degree(d, a);
    out["vmrt_degree"] = json_int(degree);
    out["plane_arith_genus"] = json_int(plane_vmrt_arith_genus(degree));
    out["tau_isomorphism"] = tau_is_isomorphism(d, a);
    out["obstruction_identity"] = iso_obstruction_identity(d, a);
    out["branch_curve_nodes"] = json_int(branch_curve_nodes(d));
    return out;
}

Json cone_json(const FamilyParams& params) {
    const ClassTable t = class_constants(params);
    const ConeReport cone = extremal_rays(params);

    Json out;
    out["params"] = Json{{"n", params.n},
                         {"a", params.a},
                         {"d", params.d},
                         {"i_Z", params.i_Z},
                         {"delta", params.delta}};

    const std::vector<const DivisorClass*> rows{&t.E, &t.Ehat, &t.G, &t.Ghat, &t.minus_K};
    const std::vector<const CurveClass*> cols{&t.F, &t.Fhat, &t.C_G, &t.C_Ghat, &t.V};
    Json table;
    Json col_names = Json::array();
    for (const CurveClass* c : cols) col_names.push_back(c->name);
    table["cols"] = std::move(col_names);
    Json rows_json = Json::array();
    for (const DivisorClass* r : rows) {
        Json row;
        row["divisor"] = r->name;
        Json values = Json::array();
        for (const CurveClass* c : cols) values.push_back(json_rat(pairing(*r, *c, params)));
        row["values"] = std::move(values);
        rows_json.push_back(std::move(row));
    }
    table["rows"] = std::move(rows_json);
    out["pairing_table"] = std::move(table);

    Json rays = Json::array();
    for (const ExtremalRay& ray : cone.rays) {
        Json entry;
        entry["curve"] = ray.curve.name;
        entry["locus"] = ray.locus;
        Json coords = Json::array();
        for (const Rat& c : ray.curve.coords) coords.push_back(json_rat(c));
        entry["coords"] = std::move(coords);
        rays.push_back(std::move(entry));
    }
    out["extremal_rays"] = std::move(rays);
    out["simplicial"] = cone.simplicial;
    out["fano"] = cone.fano;

    Json v_class = Json::array();
    for (const Rat& c : t.V.coords) v_class.push_back(json_rat(c));
    out["V_class"] = std::move(v_class);
    out["minusK_dot_V"] = json_rat(pairing(t.minus_K, t.V, params));
    return out;
}

Json classify_json() {
    Json cases = Json::array();
    const auto list = classify_fano_threefolds();
    for (const FanoThreefold& x : list) {
        Json entry;
        entry["d"] = x.d;
        entry["a"] = x.a;
        entry["tau_isomorphism"] = x.tau_iso;
        cases.push_back(std::move(entry));
    }
    Json out;
    out["cases"] = std::move(cases);
    out["count"] = static_cast<int>(list.size());
    return out;
}

Json monodromy_json(const WitnessReport& report, int requested_samples) {
    Json out;
    out["d"] = report.d;
    out["samples"] = requested_samples;
    out["samples_used"] = report.samples_used;
    out["discarded"] = report.discarded;
    out["skipped"] = report.skipped;
    out["seen_d_cycle"] = report.seen_d_cycle;
    out["seen_transposition_type"] = report.seen_transposition_type;
    out["seen_long_prime_cycle"] = report.seen_long_prime_cycle;
    out["transposition_required"] = report.transposition_required;
    out["long_prime_required"] = report.long_prime_required;
    Json histogram;
    for (const auto& [key, count] : report.histogram) histogram[key] = count;
    out["cycle_histogram"] = std::move(histogram);
    out["verdict"] = report.verdict;
    return out;
}

}  // namespace hilbproj
