#include "cosdyn/report.hpp"

#include <charconv>
#include <sstream>

namespace cosdyn {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Json to_json(const GroupElement& g) {
    Json arr = Json::array();
    for (auto c : g.coords()) arr.push_back(c);
    return arr;
}

Json to_json(const FiniteSet& s) {
    Json arr = Json::array();
    for (const auto& e : s) arr.push_back(to_json(e));
    return arr;
}

Json to_json(const FinSeq& f) {
    Json arr = Json::array();
    for (const auto& [x, v] : f) arr.push_back(Json{{"point", to_json(x)}, {"value", v}});
    return arr;
}

namespace {

Json decay_to_json(const DecayFit& d) {
    const auto opt = [](const std::optional<double>& v) {
        return v.has_value() ? Json(*v) : Json(nullptr);
    };
    return Json{{"Q_phi", opt(d.q_phi)},
                {"Q_tilde", opt(d.q_tilde)},
                {"Q2_plus", opt(d.q2_plus)},
                {"Q2_minus", opt(d.q2_minus)}};
}

}  // namespace

Json to_json(const CriterionReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        rows.push_back(Json{{"n", r.n},
                            {"Q_phi", r.q_phi},
                            {"Q_tilde", r.q_tilde},
                            {"Q2_plus", r.q2_plus},
                            {"Q2_minus", r.q2_minus},
                            {"E_plus", to_json(r.e_plus)},
                            {"E_minus", to_json(r.e_minus)}});
    }
    Json doc{{"schema", kReportSchema},
             {"kind", report.kind},
             {"phi", report.phi_name},
             {"weight", report.weight_name},
             {"g", to_json(report.g)},
             {"K", to_json(report.K)},
             {"horizon", report.horizon},
             {"eps", report.eps},
             {"strategy", to_string(report.strategy)},
             {"separation_index", report.separation},
             {"weight_window",
              Json{{"radius", report.window_radius},
                   {"sup", report.weight_sup},
                   {"inf", report.weight_inf}}},
             {"rows", std::move(rows)},
             {"decay", decay_to_json(report.decay)},
             {"good_ns", report.good_ns},
             {"subsequence", report.subsequence},
             {"verdict", to_string(report.verdict)}};
    if (report.kind == "mixing")
        doc["n0"] = report.n0.has_value() ? Json(*report.n0) : Json(nullptr);
    return doc;
}

Json to_json(const DirectSumReport& report) {
    Json components = Json::array();
    for (const auto& c : report.components) components.push_back(to_json(c));
    return Json{{"schema", kReportSchema},
                {"kind", "direct-sum"},
                {"components", std::move(components)},
                {"joint_ns", report.joint_ns},
                {"verdict", to_string(report.verdict)}};
}

Json to_json(const WitnessTrace& trace) {
    Json rows = Json::array();
    for (const auto& r : trace.rows) {
        Json terms = Json::array();
        for (double t : r.bound_terms) terms.push_back(t);
        Json row{{"n", r.n},
                 {"dist_to_f", r.dist_to_f},
                 {"dist_to_h", r.dist_to_h},
                 {"bound_terms", std::move(terms)},
                 {"bound_total", r.bound_total},
                 {"E_plus_size", r.e_plus_size},
                 {"v", to_json(r.v)}};
        row["tightness"] =
            r.dist_to_h > 0.0 ? Json(r.bound_total / r.dist_to_h) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    return Json{{"schema", kReportSchema},
                {"kind", "witness"},
                {"phi", trace.phi_name},
                {"weight", trace.weight_name},
                {"g", to_json(trace.g)},
                {"f", to_json(trace.f)},
                {"h", to_json(trace.h)},
                {"strategy", to_string(trace.strategy)},
                {"rows", std::move(rows)}};
}

std::string to_csv(const CriterionReport& report) {
    std::ostringstream os;
    os << "n,Q_phi,Q_tilde,Q2_plus,Q2_minus,partition_size_plus\n";
    for (const auto& r : report.rows) {
        os << r.n << ',' << format_double(r.q_phi) << ',' << format_double(r.q_tilde) << ','
           << format_double(r.q2_plus) << ',' << format_double(r.q2_minus) << ','
           << r.e_plus.size() << '\n';
    }
    return os.str();
}

std::string to_csv(const WitnessTrace& trace) {
    std::ostringstream os;
    os << "n,dist_to_f,dist_to_h,bound_tail,bound_T_f,bound_S_f,bound_T2_h,bound_S2_h,"
          "bound_total,tightness\n";
    for (const auto& r : trace.rows) {
        os << r.n << ',' << format_double(r.dist_to_f) << ',' << format_double(r.dist_to_h);
        for (double t : r.bound_terms) os << ',' << format_double(t);
        os << ',' << format_double(r.bound_total) << ',';
        if (r.dist_to_h > 0.0) os << format_double(r.bound_total / r.dist_to_h);
        os << '\n';
    }
    return os.str();
}

}  // namespace cosdyn
